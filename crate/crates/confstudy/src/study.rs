//! The variety of conformal displacements and its quadratic equations.
//!
//! An even element `q = q0 + q1 eps1 + q2 eps2 + q3 eps3` represents a
//! conformal displacement precisely when both `q * rev(q)` and
//! `rev(q) * q` are rational scalars. Expanding those two products yields
//! ten bilinear conditions in the four quaternion coordinates — four
//! values of the symmetric form `S(f, g) = f conj(g) + g conj(f)` and the
//! six components of two vector parts:
//!
//! ```text
//! g1  = S(q0, q1)          g2 = S(q1, q3)
//! g3  = S(q0, q2)          g4 = S(q2, q3)
//! (g5, g6, g7)   = 2 Vect(q0 conj(q3) - q1 conj(q2))
//! (g8, g9, g10)  = 2 Vect(conj(q3) q0 + conj(q2) q1)
//! ```
//!
//! On the displacement variety the product `q * rev(q)` collapses to the
//! rational number `null_value(q) = N(q0) - S(q1, q2) - N(q3)`, whose sign
//! splits the displacements into two connected components and whose zero
//! set is a regular quadric (the *null quadric*). Membership in the
//! classical motion subgroups is decided by exact ideal equations, and an
//! exact-rank Jacobian check confirms that the variety has codimension 5
//! at smooth points.

use num_traits::Zero;

use crate::error::Error;
use crate::fourquat::{study_form, FourQuat};
use crate::quaternion::Quaternion;
use crate::rational::{rat_int, Rational};

/// Human-readable names of the ten generators, in evaluation order.
///
/// `S(f,g)` is the symmetric bilinear form `f conj(g) + g conj(f)`; `i`,
/// `j`, `k` act by quaternion multiplication on the indicated side.
pub const GENERATOR_LABELS: [&str; 10] = [
    "S(q0,q1)",
    "S(q1,q3)",
    "S(q0,q2)",
    "S(q2,q3)",
    "S(q0,i*q3)-S(q1,i*q2)",
    "S(q0,j*q3)-S(q1,j*q2)",
    "S(q0,k*q3)-S(q1,k*q2)",
    "S(q0,q3*i)+S(q1,q2*i)",
    "S(q0,q3*j)+S(q1,q2*j)",
    "S(q0,q3*k)+S(q1,q2*k)",
];

/// The ten generator values at a point, in the order of
/// [`GENERATOR_LABELS`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StudyResidual {
    values: [Rational; 10],
}

impl StudyResidual {
    /// The ten values, in label order.
    pub fn values(&self) -> &[Rational; 10] {
        &self.values
    }

    /// True if every generator vanishes (the point is a displacement).
    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }
}

/// Evaluates the ten quadratic generators of the displacement variety.
pub fn ideal_generators(q: &FourQuat) -> StudyResidual {
    let left = q.q0.mul(&q.q3.conj()).sub(&q.q1.mul(&q.q2.conj()));
    let right = q.q3.conj().mul(&q.q0).add(&q.q2.conj().mul(&q.q1));
    let two = rat_int(2);
    StudyResidual {
        values: [
            study_form(&q.q0, &q.q1),
            study_form(&q.q1, &q.q3),
            study_form(&q.q0, &q.q2),
            study_form(&q.q2, &q.q3),
            &left.x * &two,
            &left.y * &two,
            &left.z * &two,
            &right.x * &two,
            &right.y * &two,
            &right.z * &two,
        ],
    }
}

/// True iff the nonzero element lies on the displacement variety.
///
/// Errors with [`Error::ZeroElement`] for the zero element, which
/// represents no displacement.
pub fn on_study(q: &FourQuat) -> Result<bool, Error> {
    if q.is_zero() {
        return Err(Error::ZeroElement);
    }
    Ok(ideal_generators(q).is_zero())
}

/// The null-quadric value `N(q0) - S(q1, q2) - N(q3)`.
///
/// Total on the even subalgebra; on the displacement variety it equals the
/// scalar `q * rev(q)` and vanishes exactly on the null displacements.
pub fn null_value(q: &FourQuat) -> Rational {
    q.q0.norm() - study_form(&q.q1, &q.q2) - q.q3.norm()
}

/// The rational scalar `q * rev(q)` of a displacement.
///
/// Errors with [`Error::ZeroElement`] for zero and [`Error::NotOnStudy`]
/// off the variety, where the product fails to be a scalar. The sign
/// separates the two connected components of the non-null displacements;
/// no orientation meaning is assigned to either sign.
pub fn rotor_norm(q: &FourQuat) -> Result<Rational, Error> {
    if !on_study(q)? {
        return Err(Error::NotOnStudy);
    }
    Ok(null_value(q))
}

/// Classical subgroups of the conformal group recognizable by exact ideal
/// equations in the four quaternion coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupTag {
    /// Rotations about the origin: `q1 = q2 = q3 = 0`.
    SO3,
    /// Orientation-preserving rigid motions (dual-quaternion slot):
    /// `S(q0, q1) = 0`, `q2 = q3 = 0`.
    SE3,
    /// The conjugate copy of the rigid motions in the opposite component:
    /// `q0 = q2 = 0`, `S(q1, q3) = 0`.
    Em,
    /// Similarity transformations: rigid motions composed with uniform
    /// scalings; `S(q0, q1) = 0`, `q2 = 0`, `Vect(q0 conj(q3)) = 0`.
    Sim,
    /// The commutative group generated by uniform scalings about the
    /// origin and translations: `Vect(q0) = Scal(q1) = 0`, `q2 = 0`,
    /// `Vect(q3) = 0`.
    ScaleTrans,
    /// Transversions (conjugates of translations by inversion):
    /// `q1 = q3 = 0`.
    Transversion,
}

impl GroupTag {
    /// All tags, in the fixed order used by CLI output.
    pub const ALL: [GroupTag; 6] = [
        GroupTag::SO3,
        GroupTag::SE3,
        GroupTag::Em,
        GroupTag::Sim,
        GroupTag::ScaleTrans,
        GroupTag::Transversion,
    ];

    /// Stable name used in CLI output.
    pub fn name(&self) -> &'static str {
        match self {
            GroupTag::SO3 => "SO3",
            GroupTag::SE3 => "SE3",
            GroupTag::Em => "Em",
            GroupTag::Sim => "Sim",
            GroupTag::ScaleTrans => "ScaleTrans",
            GroupTag::Transversion => "Transversion",
        }
    }
}

/// Decides membership of a displacement in one of the classical subgroups
/// by evaluating the subgroup's ideal exactly.
///
/// For `SO3`, `SE3`, `Em`, and `ScaleTrans` the ideal equations themselves
/// force membership in the displacement variety, so they are evaluated
/// directly on any input. For `Sim` and `Transversion` the equations cut
/// out the subgroup only inside the variety, so those two first require
/// `on_study` and error with [`Error::NotOnStudy`] (or
/// [`Error::ZeroElement`]) otherwise.
pub fn subgroup_member(q: &FourQuat, tag: GroupTag) -> Result<bool, Error> {
    match tag {
        GroupTag::SO3 => Ok(q.q1.is_zero() && q.q2.is_zero() && q.q3.is_zero()),
        GroupTag::SE3 => Ok(study_form(&q.q0, &q.q1).is_zero()
            && q.q2.is_zero()
            && q.q3.is_zero()),
        GroupTag::Em => Ok(q.q0.is_zero()
            && q.q2.is_zero()
            && study_form(&q.q1, &q.q3).is_zero()),
        GroupTag::ScaleTrans => Ok(q.q0.is_scalar()
            && q.q1.scal().is_zero()
            && q.q2.is_zero()
            && q.q3.is_scalar()),
        GroupTag::Sim => {
            if !on_study(q)? {
                return Err(Error::NotOnStudy);
            }
            Ok(study_form(&q.q0, &q.q1).is_zero()
                && q.q2.is_zero()
                && q.q0.mul(&q.q3.conj()).vect().is_zero())
        }
        GroupTag::Transversion => {
            if !on_study(q)? {
                return Err(Error::NotOnStudy);
            }
            Ok(q.q1.is_zero() && q.q3.is_zero())
        }
    }
}

impl FourQuat {
    /// The sixteen rational coordinates in slot-major order
    /// `(q0.w, q0.x, q0.y, q0.z, q1.w, ..., q3.z)`.
    pub fn coords(&self) -> [Rational; 16] {
        let mut out: [Rational; 16] = Default::default();
        for (slot, quat) in [&self.q0, &self.q1, &self.q2, &self.q3].into_iter().enumerate() {
            out[4 * slot] = quat.w.clone();
            out[4 * slot + 1] = quat.x.clone();
            out[4 * slot + 2] = quat.y.clone();
            out[4 * slot + 3] = quat.z.clone();
        }
        out
    }

    /// Rebuilds an element from [`FourQuat::coords`] order.
    pub fn from_coords(c: &[Rational; 16]) -> FourQuat {
        let quat = |i: usize| {
            Quaternion::new(
                c[4 * i].clone(),
                c[4 * i + 1].clone(),
                c[4 * i + 2].clone(),
                c[4 * i + 3].clone(),
            )
        };
        FourQuat::new(quat(0), quat(1), quat(2), quat(3))
    }
}

/// Exact rank of a rational matrix by Gaussian elimination.
pub(crate) fn matrix_rank(mut mat: Vec<Vec<Rational>>) -> usize {
    let rows = mat.len();
    let cols = mat.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(pivot) = (row..rows).find(|r| !mat[*r][col].is_zero()) else {
            continue;
        };
        mat.swap(row, pivot);
        let pivot_val = mat[row][col].clone();
        for r in (row + 1)..rows {
            if mat[r][col].is_zero() {
                continue;
            }
            let factor = &mat[r][col] / &pivot_val;
            for c in col..cols {
                let delta = &factor * &mat[row][c];
                mat[r][c] = &mat[r][c] - &delta;
            }
        }
        row += 1;
        rank += 1;
    }
    rank
}

/// Exact rank of the 10x16 Jacobian of the generators at `q`.
///
/// Each generator is a quadratic form, so its differential at `q` in
/// direction `e` is the polarization `g(q + e) - g(q) - g(e)`. The rank is
/// computed by exact rational elimination; it equals 5 at smooth non-null
/// points of the displacement variety (codimension 5 in the 16 affine
/// coordinates, matching a projective variety of dimension 10).
pub fn jacobian_rank(q: &FourQuat) -> usize {
    let base = ideal_generators(q);
    let mut rows: Vec<Vec<Rational>> = vec![Vec::with_capacity(16); 10];
    for j in 0..16 {
        let mut coords: [Rational; 16] = Default::default();
        coords[j] = rat_int(1);
        let e = FourQuat::from_coords(&coords);
        let shifted = ideal_generators(&q.add(&e));
        let unit = ideal_generators(&e);
        for i in 0..10 {
            rows[i].push(&shifted.values()[i] - &base.values()[i] - &unit.values()[i]);
        }
    }
    matrix_rank(rows)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::rational::rat;

    fn q(w: i64, x: i64, y: i64, z: i64) -> Quaternion {
        Quaternion::new(rat_int(w), rat_int(x), rat_int(y), rat_int(z))
    }

    fn zero() -> Quaternion {
        Quaternion::zero()
    }

    /// The three linear-factor roots used across the factorization tests:
    /// a rotation-like, a scaling-like, and a null (transversion-like)
    /// displacement.
    pub(crate) fn root_rotation() -> FourQuat {
        FourQuat::new(zero(), q(0, -1, 0, 0), q(0, 2, 0, 0), zero())
    }

    pub(crate) fn root_scaling() -> FourQuat {
        FourQuat::new(zero(), q(0, 0, -1, 0), q(0, 0, -2, 0), zero())
    }

    pub(crate) fn root_null() -> FourQuat {
        FourQuat::new(
            zero(),
            Quaternion::new(rat_int(0), rat_int(0), rat_int(0), rat(-1, 2)),
            q(0, 0, 0, 1),
            Quaternion::one(),
        )
    }

    #[test]
    fn identity_is_a_displacement() {
        let one = FourQuat::one();
        assert!(ideal_generators(&one).is_zero());
        assert!(on_study(&one).unwrap());
        assert_eq!(null_value(&one), rat_int(1));
        assert_eq!(rotor_norm(&one).unwrap(), rat_int(1));
    }

    #[test]
    fn zero_element_is_rejected() {
        assert_eq!(on_study(&FourQuat::zero()), Err(Error::ZeroElement));
        assert_eq!(rotor_norm(&FourQuat::zero()), Err(Error::ZeroElement));
    }

    #[test]
    fn the_three_roots_lie_on_the_variety_with_known_norms() {
        for (root, norm) in [
            (root_rotation(), rat_int(4)),
            (root_scaling(), rat_int(-4)),
            (root_null(), rat_int(0)),
        ] {
            assert!(on_study(&root).unwrap(), "root {root}");
            assert_eq!(null_value(&root), norm, "root {root}");
            assert_eq!(rotor_norm(&root).unwrap(), norm);
        }
    }

    #[test]
    fn membership_matches_scalarness_of_both_products() {
        // on_study must agree with "q rev(q) and rev(q) q are both scalar"
        // computed in the full algebra.
        let samples = [
            FourQuat::one(),
            root_rotation(),
            root_null(),
            FourQuat::new(q(1, 0, 0, 0), zero(), zero(), q(0, 1, 0, 0)),
            FourQuat::new(q(1, 2, 0, 0), q(0, 1, 1, 0), q(2, 0, -1, 0), q(0, 0, 0, 3)),
            FourQuat::new(q(1, 0, 0, 0), q(0, 1, 0, 0), zero(), zero()),
        ];
        for s in samples {
            let m = s.join();
            let left = m.gp(&m.reverse());
            let right = m.reverse().gp(&m);
            let scalar = left.grade_part(0) == left && right.grade_part(0) == right;
            assert_eq!(on_study(&s).unwrap(), scalar, "sample {s}");
        }
    }

    #[test]
    fn nonmember_examples_fail_the_right_generator() {
        // A pure eps3 perturbation of the identity: the right-hand vector
        // generators pick it up.
        let bad = FourQuat::new(q(1, 0, 0, 0), zero(), zero(), q(0, 1, 0, 0));
        let res = ideal_generators(&bad);
        assert!(!res.is_zero());
        assert_eq!(res.values()[4], rat_int(-2)); // left i component
        assert_eq!(res.values()[7], rat_int(-2)); // right i component
        assert!(!on_study(&bad).unwrap());
        assert_eq!(rotor_norm(&bad), Err(Error::NotOnStudy));
    }

    #[test]
    fn translations_are_displacements() {
        let t = FourQuat::dq_embed(Quaternion::one(), Quaternion::i());
        assert!(on_study(&t).unwrap());
        assert_eq!(rotor_norm(&t).unwrap(), rat_int(1));
    }

    #[test]
    fn norm_of_orthogonal_dual_quaternions_is_the_primal_norm() {
        let a = q(1, 2, 0, -1);
        let b = q(2, -1, 0, 0); // <a, b> = 0
        assert_eq!(a.dot(&b), rat_int(0));
        let dq = FourQuat::dq_embed(a.clone(), b);
        assert_eq!(rotor_norm(&dq).unwrap(), a.norm());
    }

    #[test]
    fn norm_is_multiplicative_on_the_variety() {
        let p = FourQuat::dq_embed(q(1, 1, 0, 0), q(0, 0, 2, 0));
        let s = root_rotation();
        assert!(on_study(&p).unwrap() && on_study(&s).unwrap());
        let prod = p.mul(&s);
        assert!(on_study(&prod).unwrap(), "variety is closed under products");
        assert_eq!(
            rotor_norm(&prod).unwrap(),
            rotor_norm(&p).unwrap() * rotor_norm(&s).unwrap()
        );
    }

    #[test]
    fn minimality_witnesses_for_the_four_symmetric_generators() {
        let witnesses = [
            (0, FourQuat::new(q(1, 0, 0, 0), q(1, 0, 0, 0), zero(), zero())),
            (1, FourQuat::new(zero(), q(1, 0, 0, 0), zero(), q(1, 0, 0, 0))),
            (2, FourQuat::new(q(1, 0, 0, 0), zero(), q(1, 0, 0, 0), zero())),
            (3, FourQuat::new(zero(), zero(), q(1, 0, 0, 0), q(1, 0, 0, 0))),
        ];
        for (idx, w) in witnesses {
            let res = ideal_generators(&w);
            for (i, v) in res.values().iter().enumerate() {
                if i == idx {
                    assert_eq!(*v, rat_int(2), "generator {i} at witness {idx}");
                } else {
                    assert!(v.is_zero(), "generator {i} at witness {idx}");
                }
            }
        }
    }

    #[test]
    fn the_ten_generators_are_linearly_independent_quadratic_forms() {
        // Coefficient matrix of the ten quadratics over the 136 monomials
        // x_a x_b (a <= b): diagonal coefficients are g(e_a), mixed ones the
        // polarizations g(e_a + e_b) - g(e_a) - g(e_b).
        let unit = |i: usize| {
            let mut c: [Rational; 16] = Default::default();
            c[i] = rat_int(1);
            FourQuat::from_coords(&c)
        };
        let mut rows = vec![Vec::new(); 10];
        for a in 0..16 {
            let ga = ideal_generators(&unit(a));
            for (row, val) in rows.iter_mut().zip(ga.values()) {
                row.push(val.clone());
            }
            for b in (a + 1)..16 {
                let gb = ideal_generators(&unit(b));
                let gab = ideal_generators(&unit(a).add(&unit(b)));
                for (i, row) in rows.iter_mut().enumerate() {
                    row.push(&gab.values()[i] - &ga.values()[i] - &gb.values()[i]);
                }
            }
        }
        assert_eq!(matrix_rank(rows), 10);
    }

    #[test]
    fn null_quadric_gram_matrix_has_full_rank() {
        let unit = |i: usize| {
            let mut c: [Rational; 16] = Default::default();
            c[i] = rat_int(1);
            FourQuat::from_coords(&c)
        };
        let mut gram = vec![vec![rat_int(0); 16]; 16];
        for a in 0..16 {
            for b in 0..16 {
                // Polarization of the null-quadric form.
                let val = null_value(&unit(a).add(&unit(b)))
                    - null_value(&unit(a))
                    - null_value(&unit(b));
                gram[a][b] = val;
            }
        }
        assert_eq!(matrix_rank(gram), 16);
    }

    #[test]
    fn dual_quaternion_specialization_of_the_null_quadric() {
        let a = q(3, -1, 2, 5);
        let b = q(7, 0, -4, 1);
        assert_eq!(null_value(&FourQuat::dq_embed(a.clone(), b)), a.norm());
    }

    #[test]
    fn subgroup_examples() {
        let k_rot = FourQuat::new(q(0, 0, 0, 1), zero(), zero(), zero());
        assert!(subgroup_member(&k_rot, GroupTag::SO3).unwrap());
        let scaling = FourQuat::new(q(5, 0, 0, 0), zero(), zero(), q(-3, 0, 0, 0));
        assert!(subgroup_member(&scaling, GroupTag::Sim).unwrap());
        assert!(subgroup_member(&scaling, GroupTag::ScaleTrans).unwrap());
        assert!(!subgroup_member(&scaling, GroupTag::SE3).unwrap());
        let transversion = FourQuat::new(q(1, 0, 0, 0), zero(), q(0, 1, 0, 0), zero());
        assert!(subgroup_member(&transversion, GroupTag::Transversion).unwrap());
        assert!(!subgroup_member(&transversion, GroupTag::SO3).unwrap());
        let em = FourQuat::new(zero(), q(1, 0, 0, 0), zero(), q(0, 1, 0, 0));
        assert!(subgroup_member(&em, GroupTag::Em).unwrap());
        assert!(rotor_norm(&em).unwrap() < rat_int(0));
        let translation = FourQuat::dq_embed(Quaternion::one(), Quaternion::j());
        assert!(subgroup_member(&translation, GroupTag::SE3).unwrap());
        assert!(subgroup_member(&translation, GroupTag::ScaleTrans).unwrap());
    }

    #[test]
    fn subgroup_inclusions_hold_as_predicates() {
        let samples = [
            FourQuat::one(),
            FourQuat::new(q(0, 0, 0, 1), zero(), zero(), zero()),
            FourQuat::dq_embed(q(1, 1, 0, 0), q(0, 0, 1, -1)),
            FourQuat::new(q(5, 0, 0, 0), zero(), zero(), q(-3, 0, 0, 0)),
        ];
        for s in samples {
            let so3 = subgroup_member(&s, GroupTag::SO3).unwrap();
            let se3 = subgroup_member(&s, GroupTag::SE3).unwrap();
            let sim = subgroup_member(&s, GroupTag::Sim).unwrap();
            assert!(!so3 || se3, "SO3 within SE3 at {s}");
            assert!(!se3 || sim, "SE3 within Sim at {s}");
        }
    }

    #[test]
    fn sim_and_transversion_require_the_variety() {
        let off = FourQuat::new(q(1, 0, 0, 0), zero(), zero(), q(0, 1, 0, 0));
        assert_eq!(subgroup_member(&off, GroupTag::Sim), Err(Error::NotOnStudy));
        assert_eq!(
            subgroup_member(&off, GroupTag::Transversion),
            Err(Error::NotOnStudy)
        );
        // The implying ideals stay total off the variety.
        assert!(!subgroup_member(&off, GroupTag::SO3).unwrap());
        assert!(!subgroup_member(&off, GroupTag::SE3).unwrap());
    }

    #[test]
    fn jacobian_rank_is_five_at_smooth_points() {
        assert_eq!(jacobian_rank(&FourQuat::one()), 5);
        // At a product of displacements (still smooth, nonzero norm).
        let p = FourQuat::dq_embed(q(1, 1, 0, 0), q(0, 0, 2, 0)).mul(&root_rotation());
        assert!(on_study(&p).unwrap());
        assert!(!null_value(&p).is_zero());
        assert_eq!(jacobian_rank(&p), 5);
    }

    #[test]
    fn coordinate_round_trip() {
        let s = FourQuat::new(q(1, -2, 3, -4), q(5, 6, -7, 8), q(0, 1, 0, -1), q(2, 0, 2, 0));
        assert_eq!(FourQuat::from_coords(&s.coords()), s);
    }
}
