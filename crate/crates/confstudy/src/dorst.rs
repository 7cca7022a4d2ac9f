//! Straight displacement lines through the identity and their motions.
//!
//! A projective line `t + q` lies in the displacement variety for every
//! parameter `t` precisely when `q` is a displacement and `q + rev(q)` is
//! rational; after dropping the scalar part of `q0` the direction
//! satisfies `rev(q) = -q` (first three quaternion slots pure, last slot
//! scalar). Such a line is the set of conformal displacements fixing a
//! point pair, a tangent point, or a plane pair, and every direction
//! decomposes as a wedge `q = a ^ b` of two grade-1 vectors.
//!
//! The sign of the rational norm `q * rev(q)` splits the motions into
//! three branches by how the line meets the null quadric `t^2 + norm = 0`:
//! no real intersection (circular: conformal and Euclidean rotations), a
//! double point (linear: transversions and translations), or two points
//! (hyperbolic: conformal and uniform scalings). Rotors act on grade-1
//! geometry through the projective sandwich `m v rev(m)` without norm
//! division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::fourquat::FourQuat;
use crate::geometry::{classify_vector, embed_point, VectorKind};
use crate::multivector::{Multivector, E1, E2, E3, EINF, EO};
use crate::quaternion::Quaternion;
use crate::rational::{rat_int, rational_to_f64, Rational};
use crate::study::{null_value, on_study};

/// Normalized direction of a displacement line through the identity.
///
/// Invariants: the element is a nonzero displacement and `rev(q) = -q`,
/// i.e. `q0, q1, q2` are pure quaternions and `q3` is a rational scalar.
/// Built by [`line_normalize`] or [`motion_from_blade`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineDirection {
    q: FourQuat,
}

impl LineDirection {
    /// The normalized direction element.
    pub fn as_fourquat(&self) -> &FourQuat {
        &self.q
    }
}

/// A decomposition of a line direction as the wedge of two grade-1
/// vectors, `wedge2(a, b)` equal to the direction exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Blade2 {
    /// First grade-1 factor.
    pub a: Multivector,
    /// Second grade-1 factor.
    pub b: Multivector,
}

/// The six kinds of elementary motion along a displacement line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MotionType {
    /// Positive norm, generic: fixes a pair of complex-conjugate points.
    ConformalRotation,
    /// Positive norm with `q2 = q3 = 0`: a rotation about a Euclidean axis.
    EuclideanRotation,
    /// Zero norm, generic: conjugate of a translation by an inversion.
    Transversion,
    /// Zero norm with `q2 = q3 = 0`: a translation.
    Translation,
    /// Negative norm, generic: fixes two real points.
    ConformalScaling,
    /// Negative norm with `q0 = 0`, `q2 = 0` (and the slot-parity
    /// constraints of a direction): scaling about a fixed center.
    UniformScaling,
}

impl MotionType {
    /// Stable name used in CLI output.
    pub fn name(&self) -> &'static str {
        match self {
            MotionType::ConformalRotation => "ConformalRotation",
            MotionType::EuclideanRotation => "EuclideanRotation",
            MotionType::Transversion => "Transversion",
            MotionType::Translation => "Translation",
            MotionType::ConformalScaling => "ConformalScaling",
            MotionType::UniformScaling => "UniformScaling",
        }
    }
}

/// How the line meets the null quadric, i.e. the sign of the norm.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// Positive norm: no real null displacement on the line.
    Circular,
    /// Zero norm: the direction itself is the unique null point.
    Linear,
    /// Negative norm: two real null displacements.
    Hyperbolic,
}

impl Branch {
    /// Stable name used in CLI output.
    pub fn name(&self) -> &'static str {
        match self {
            Branch::Circular => "circular",
            Branch::Linear => "linear",
            Branch::Hyperbolic => "hyperbolic",
        }
    }
}

/// An elementary motion: a line direction, one exact wedge decomposition,
/// and its classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DorstMotion {
    /// Normalized line direction.
    pub direction: LineDirection,
    /// Wedge decomposition with `wedge2(a, b) = join(direction)` exactly.
    pub blade: Blade2,
    /// Elementary motion kind.
    pub kind: MotionType,
    /// Null-quadric branch (sign of the norm).
    pub branch: Branch,
}

/// Point on the projective parameter line: a rational value or the point
/// at infinity, where the motion degenerates to the identity class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LineParam {
    /// Finite rational parameter.
    Finite(Rational),
    /// The limit `t -> oo`, representing the identity displacement.
    Infinity,
}

/// Exact value `coef * sqrt(radicand)` with a squarefree positive integer
/// radicand; rational exactly when the radicand is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticSurd {
    /// Rational factor (sign and magnitude).
    pub coef: Rational,
    /// Squarefree positive integer under the root.
    pub radicand: BigInt,
}

/// Parameter of a null intersection: rational or a quadratic surd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamValue {
    /// Rational parameter.
    Exact(Rational),
    /// Irrational parameter `coef * sqrt(radicand)`, radicand > 1.
    Surd(QuadraticSurd),
}

/// One intersection of the line with the null quadric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NullIntersection {
    /// The parameter value solving `t^2 + norm = 0`.
    pub t: ParamValue,
    /// The null displacement `t + q`, materialized only for rational `t`
    /// (a surd parameter has no rational representative).
    pub rotor: Option<FourQuat>,
}

/// Parameters for the four primitive motion constructors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimitiveParams {
    /// Rotation about an axis direction through the origin (axis nonzero).
    Rotation {
        /// Euclidean axis direction.
        axis: [Rational; 3],
    },
    /// Translation by a nonzero vector.
    Translation {
        /// Euclidean translation vector.
        vector: [Rational; 3],
    },
    /// Uniform scaling about a center; the factor must be positive and
    /// not 1. All such scalings about one center share a line, so the
    /// factor selects a point on the returned line rather than changing it.
    UniformScaling {
        /// Fixed center.
        center: [Rational; 3],
        /// Scaling factor (> 0, != 1).
        sigma: Rational,
    },
    /// Transversion fixing a point, driven by the plane through that point
    /// with the given nonzero normal.
    Transversion {
        /// Fixed point.
        point: [Rational; 3],
        /// Plane normal (nonzero).
        normal: [Rational; 3],
    },
}

/// One evaluated trajectory sample: the exact image of the seed point
/// under the rotor at parameter `t`, with its classification (an error for
/// samples whose image vanishes or cannot be classified).
#[derive(Debug, Clone)]
pub struct TrajectorySample {
    /// Parameter value of the sample.
    pub t: Rational,
    /// Raw projective image of the embedded seed point.
    pub image: Multivector,
    /// Classification of the image.
    pub kind: Result<VectorKind, Error>,
}

/// Euclidean vector part of a pure quaternion as a grade-1 multivector.
fn pure_to_mv(q: &Quaternion) -> Multivector {
    debug_assert!(q.is_pure());
    Multivector::from_pairs([
        (E1, q.x.clone()),
        (E2, q.y.clone()),
        (E3, q.z.clone()),
    ])
}

/// Normalizes an element to a line direction by dropping the scalar part.
///
/// Checks in order: the line criterion `q + rev(q)` rational
/// ([`Error::NotALine`] naming the offending slots), membership in the
/// displacement variety ([`Error::NotOnStudy`], [`Error::ZeroElement`] for
/// zero), and a nonzero remainder after removing the scalar part
/// ([`Error::ZeroDirection`]).
pub fn line_normalize(q: &FourQuat) -> Result<LineDirection, Error> {
    let mut bad = Vec::new();
    if !q.q1.scal().is_zero() {
        bad.push("Scal(q1) != 0");
    }
    if !q.q2.scal().is_zero() {
        bad.push("Scal(q2) != 0");
    }
    if !q.q3.vect().is_zero() {
        bad.push("Vect(q3) != 0");
    }
    if !bad.is_empty() {
        return Err(Error::NotALine(bad.join(", ")));
    }
    if !on_study(q)? {
        return Err(Error::NotOnStudy);
    }
    let direction = q.sub(&FourQuat::from_scalar(q.q0.scal()));
    if direction.is_zero() {
        return Err(Error::ZeroDirection);
    }
    Ok(LineDirection { q: direction })
}

/// Decomposes a line direction as an exact wedge of two grade-1 vectors.
///
/// The underdetermined choices are fixed deterministically (see the
/// variants below); in every case `wedge2(a, b)` equals the direction
/// exactly, not merely up to scale. Errors with [`Error::ZeroDirection`]
/// for a zero direction (unreachable through [`LineDirection`]'s
/// constructors, kept for defense in depth).
pub fn wedge_decompose(d: &LineDirection) -> Result<Blade2, Error> {
    let q = &d.q;
    if q.is_zero() {
        return Err(Error::ZeroDirection);
    }
    let s = q.q3.scal(); // q3 is scalar on a direction
    let blade = if !s.is_zero() {
        // a = -e_o + (q1/s) . e ; b = q2 . e + s e_inf.
        let q_a = q.q1.scale(&(rat_int(1) / &s));
        let a = pure_to_mv(&q_a).sub(&Multivector::e_o());
        let b = pure_to_mv(&q.q2).add(&Multivector::e_inf().scale(&s));
        Blade2 { a, b }
    } else if !q.q2.is_zero() {
        // a = -e_o + q_a . e + a_inf e_inf ; b = q2 . e, where a_inf makes
        // q1 = -a_inf q2 (the direction forces q1 parallel to q2) and
        // q_a = (q0 x q2) / |q2|^2 solves q0 = -q_a x q2 using q0 . q2 = 0.
        let q2n = q.q2.norm();
        let pairs = [
            (&q.q1.x, &q.q2.x),
            (&q.q1.y, &q.q2.y),
            (&q.q1.z, &q.q2.z),
        ];
        let (num, den) = pairs
            .into_iter()
            .find(|(_, d)| !d.is_zero())
            .expect("nonzero quaternion has a nonzero coordinate");
        let a_inf = -(num / den);
        let q_a = q.q0.cross(&q.q2).scale(&(rat_int(1) / &q2n));
        let a = pure_to_mv(&q_a)
            .sub(&Multivector::e_o())
            .add(&Multivector::e_inf().scale(&a_inf));
        let b = pure_to_mv(&q.q2);
        Blade2 { a, b }
    } else if q.q0.is_zero() {
        // Pure translation-like direction: q = q1 . e ^ e_inf.
        let a = pure_to_mv(&q.q1);
        let b = pure_to_mv(&q.q1).add(&Multivector::e_inf());
        Blade2 { a, b }
    } else {
        // Rotation-like direction: two planes through the origin whose
        // normals u, v satisfy u x v = -q0, plus e_inf parts carrying q1.
        let u = if q.q0.x.is_zero() && q.q0.y.is_zero() {
            Quaternion::from_vector(rat_int(1), rat_int(0), rat_int(0))
        } else {
            Quaternion::from_vector(-q.q0.y.clone(), q.q0.x.clone(), rat_int(0))
        };
        let v = q.q0.cross(&u).scale(&(-rat_int(1) / u.norm()));
        let b_inf = q.q1.dot(&u) / u.norm();
        let a_inf = -(q.q1.dot(&v) / v.norm());
        let a = pure_to_mv(&u).add(&Multivector::e_inf().scale(&a_inf));
        let b = pure_to_mv(&v).add(&Multivector::e_inf().scale(&b_inf));
        Blade2 { a, b }
    };
    debug_assert_eq!(
        blade.a.wedge2(&blade.b).expect("factors are grade-1"),
        q.join(),
        "wedge decomposition must reproduce the direction exactly"
    );
    Ok(blade)
}

/// Classifies the elementary motion along a line direction.
///
/// The primary split is the sign of the norm (see [`Branch`]); the special
/// kinds refine it: `q2 = q3 = 0` turns rotations Euclidean and
/// transversions into translations, and `q0 = q2 = 0` turns scalings
/// uniform (the remaining slot constraints hold on every direction).
pub fn classify_motion(d: &LineDirection) -> MotionType {
    let q = &d.q;
    let norm = null_value(q);
    let dual_quaternion_like = q.q2.is_zero() && q.q3.is_zero();
    if norm.is_positive() {
        if dual_quaternion_like {
            MotionType::EuclideanRotation
        } else {
            MotionType::ConformalRotation
        }
    } else if norm.is_zero() {
        if dual_quaternion_like {
            MotionType::Translation
        } else {
            MotionType::Transversion
        }
    } else if q.q0.is_zero() && q.q2.is_zero() {
        MotionType::UniformScaling
    } else {
        MotionType::ConformalScaling
    }
}

fn branch_of(norm: &Rational) -> Branch {
    if norm.is_positive() {
        Branch::Circular
    } else if norm.is_zero() {
        Branch::Linear
    } else {
        Branch::Hyperbolic
    }
}

/// Builds the motion generated by the wedge of two grade-1 vectors.
///
/// Errors with [`Error::NotAVector`] for non-grade-1 factors and
/// [`Error::DegenerateBlade`] when the wedge vanishes.
pub fn motion_from_blade(a: &Multivector, b: &Multivector) -> Result<DorstMotion, Error> {
    let w = a.wedge2(b)?;
    if w.is_zero() {
        return Err(Error::DegenerateBlade);
    }
    let q = FourQuat::split(&w).expect("a 2-blade is even");
    let direction = line_normalize(&q)
        .expect("wedges of grade-1 vectors always span displacement lines");
    let kind = classify_motion(&direction);
    let branch = branch_of(&null_value(&direction.q));
    Ok(DorstMotion {
        direction,
        blade: Blade2 { a: a.clone(), b: b.clone() },
        kind,
        branch,
    })
}

/// Builds the motion along a given direction, choosing the deterministic
/// wedge decomposition of [`wedge_decompose`].
pub fn motion_from_direction(direction: LineDirection) -> DorstMotion {
    let blade = wedge_decompose(&direction).expect("directions are nonzero");
    let kind = classify_motion(&direction);
    let branch = branch_of(&null_value(&direction.q));
    DorstMotion { direction, blade, kind, branch }
}

/// Evaluates the rotor at a parameter: `t + q`, or the identity at the
/// point at infinity.
pub fn eval_motion(m: &DorstMotion, t: &LineParam) -> FourQuat {
    match t {
        LineParam::Finite(t) => FourQuat::from_scalar(t.clone()).add(&m.direction.q),
        LineParam::Infinity => FourQuat::one(),
    }
}

/// Float evaluation of the transcendental motion forms, for plotting only.
///
/// Returns the sixteen coordinates (in [`FourQuat::coords`] order) of
/// `c0(u) + c1(u) q`, where the branch picks the coefficient pair:
/// circular `(cos u, sin u)` (so `t = cot u` recovers the projective
/// form up to scale), linear `(1, u)` (`t = 1/u`), hyperbolic
/// `(cosh u, sinh u)` (`t = coth u`; the opposite component of the same
/// line corresponds to `-cosh u, sinh u`, i.e. `t = -coth u`).
pub fn eval_motion_angular(m: &DorstMotion, u: f64) -> [f64; 16] {
    let (c0, c1) = match m.branch {
        Branch::Circular => (u.cos(), u.sin()),
        Branch::Linear => (1.0, u),
        Branch::Hyperbolic => (u.cosh(), u.sinh()),
    };
    let q = m.direction.q.coords();
    let mut out = [0.0f64; 16];
    for (i, c) in q.iter().enumerate() {
        out[i] = c1 * rational_to_f64(c);
    }
    out[0] += c0;
    out
}

/// Splits a positive rational as `c^2 * r` with `r` a squarefree positive
/// integer, returning `(c, r)` so that `sqrt(x) = c * sqrt(r)`.
fn sqrt_decompose(x: &Rational) -> (Rational, BigInt) {
    debug_assert!(x.is_positive());
    // sqrt(p/q) = sqrt(p*q) / q.
    let n = x.numer() * x.denom();
    let mut square = BigInt::one();
    let mut free = BigInt::one();
    let mut rest = n;
    let mut d = BigInt::from(2);
    while (&d * &d) <= rest {
        let mut count = 0u32;
        loop {
            let (quot, rem) = rest.div_rem(&d);
            if rem.is_zero() {
                rest = quot;
                count += 1;
            } else {
                break;
            }
        }
        for _ in 0..count / 2 {
            square *= &d;
        }
        if count % 2 == 1 {
            free *= &d;
        }
        d += 1;
    }
    if rest > BigInt::one() {
        free *= &rest;
    }
    (Rational::new(square, x.denom().clone()), free)
}

/// Intersections of the line `t + q` with the null quadric, solving
/// `t^2 + norm = 0`; ascending in `t`.
///
/// Positive norm gives none, zero norm the double point `t = 0` with rotor
/// `q` itself, negative norm the pair `t = ±sqrt(-norm)` — materialized as
/// rotors only when the root is rational.
pub fn null_intersections(d: &LineDirection) -> Vec<NullIntersection> {
    let norm = null_value(&d.q);
    if norm.is_positive() {
        return Vec::new();
    }
    if norm.is_zero() {
        return vec![NullIntersection {
            t: ParamValue::Exact(rat_int(0)),
            rotor: Some(d.q.clone()),
        }];
    }
    let (coef, radicand) = sqrt_decompose(&-norm);
    if radicand.is_one() {
        let make = |t: Rational| NullIntersection {
            rotor: Some(FourQuat::from_scalar(t.clone()).add(&d.q)),
            t: ParamValue::Exact(t),
        };
        vec![make(-coef.clone()), make(coef)]
    } else {
        let surd = |c: Rational| NullIntersection {
            t: ParamValue::Surd(QuadraticSurd { coef: c, radicand: radicand.clone() }),
            rotor: None,
        };
        vec![surd(-coef.clone()), surd(coef)]
    }
}

/// Projective sandwich action `m v rev(m)` of an even element on a
/// grade-1 vector; no norm division.
///
/// Errors with [`Error::NotAVector`] unless `v` is grade-1.
pub fn sandwich(r: &FourQuat, v: &Multivector) -> Result<Multivector, Error> {
    if !v.is_vector() {
        return Err(Error::NotAVector);
    }
    let m = r.join();
    Ok(m.gp(v).gp(&m.reverse()))
}

/// Sandwich action rescaled so the `e_o` coefficient is 1.
///
/// Errors with [`Error::NormalizeAtInfinity`] when that coefficient
/// vanishes (the image lies at infinity or is zero).
pub fn sandwich_normalized(r: &FourQuat, v: &Multivector) -> Result<Multivector, Error> {
    let img = sandwich(r, v)?;
    let w = img.coeff(EO);
    if w.is_zero() {
        return Err(Error::NormalizeAtInfinity);
    }
    Ok(img.scale(&(rat_int(1) / w)))
}

/// Builds the elementary motion realizing a primitive: a rotation about an
/// axis, a translation, a uniform scaling about a center, or a
/// transversion fixing a point.
///
/// Errors with [`Error::InvalidParams`] on degenerate parameters (zero
/// axis/vector/normal, scaling factor not in `(0, 1) U (1, oo)`).
pub fn make_primitive(params: &PrimitiveParams) -> Result<DorstMotion, Error> {
    match params {
        PrimitiveParams::Rotation { axis } => {
            if axis.iter().all(|c| c.is_zero()) {
                return Err(Error::InvalidParams("rotation axis must be nonzero".into()));
            }
            let q0 = Quaternion::from_vector(axis[0].clone(), axis[1].clone(), axis[2].clone());
            let direction = line_normalize(&FourQuat::new(
                q0,
                Quaternion::zero(),
                Quaternion::zero(),
                Quaternion::zero(),
            ))
            .expect("pure quaternions are displacement line directions");
            Ok(motion_from_direction(direction))
        }
        PrimitiveParams::Translation { vector } => {
            if vector.iter().all(|c| c.is_zero()) {
                return Err(Error::InvalidParams("translation vector must be nonzero".into()));
            }
            let half = rat_int(-1) / rat_int(2);
            let q1 = Quaternion::from_vector(
                &vector[0] * &half,
                &vector[1] * &half,
                &vector[2] * &half,
            );
            let direction = line_normalize(&FourQuat::new(
                Quaternion::zero(),
                q1,
                Quaternion::zero(),
                Quaternion::zero(),
            ))
            .expect("translation directions lie on displacement lines");
            Ok(motion_from_direction(direction))
        }
        PrimitiveParams::UniformScaling { center, sigma } => {
            if !sigma.is_positive() {
                return Err(Error::InvalidParams("scaling factor must be positive".into()));
            }
            if sigma == &rat_int(1) {
                return Err(Error::InvalidParams(
                    "scaling factor 1 gives the identity, not a motion".into(),
                ));
            }
            motion_from_blade(&embed_point(center), &Multivector::e_inf())
        }
        PrimitiveParams::Transversion { point, normal } => {
            if normal.iter().all(|c| c.is_zero()) {
                return Err(Error::InvalidParams("transversion normal must be nonzero".into()));
            }
            // The plane through the fixed point with the given normal:
            // n . x = <point, normal>.
            let offset =
                &point[0] * &normal[0] + &point[1] * &normal[1] + &point[2] * &normal[2];
            let plane = Multivector::from_pairs([
                (E1, normal[0].clone()),
                (E2, normal[1].clone()),
                (E3, normal[2].clone()),
                (EINF, offset),
            ]);
            motion_from_blade(&embed_point(point), &plane)
        }
    }
}

/// Samples the action of the motion on a seed point at the given rational
/// parameters; classification failures are recorded per sample.
///
/// Errors with [`Error::InvalidParams`] on an empty sample list.
pub fn trajectory(
    m: &DorstMotion,
    p0: &[Rational; 3],
    samples: &[Rational],
) -> Result<Vec<TrajectorySample>, Error> {
    if samples.is_empty() {
        return Err(Error::InvalidParams("trajectory needs at least one sample".into()));
    }
    let seed = embed_point(p0);
    Ok(samples
        .iter()
        .map(|t| {
            let rotor = eval_motion(m, &LineParam::Finite(t.clone()));
            let image = sandwich(&rotor, &seed).expect("embedded points are grade-1");
            let kind = classify_vector(&image);
            TrajectorySample { t: t.clone(), image, kind }
        })
        .collect())
}
