//! Grade-1 geometry: points, planes, spheres, and their classification.
//!
//! A Euclidean point `x` embeds as the null vector
//! `e_o + x1 e1 + x2 e2 + x3 e3 + |x|^2/2 e_inf`; planes and spheres are the
//! other grade-1 elements. The quadratic form of a grade-1 vector `v` with
//! nonzero `e_o` coefficient `w` computes the squared radius of the sphere
//! it represents via `dot2(v, v) / w^2`, which is zero exactly for point
//! embeddings.

use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::multivector::{Multivector, E1, E2, E3, EINF, EO};
use crate::rational::{rat, rat_int, Rational};

/// Classification of a nonzero grade-1 vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VectorKind {
    /// Null vector with nonzero weight: a weighted embedded point.
    FinitePoint {
        /// Euclidean coordinates of the point.
        center: [Rational; 3],
        /// Coefficient of `e_o`.
        weight: Rational,
    },
    /// Positive squared radius: a real sphere.
    RealSphere {
        /// Euclidean center.
        center: [Rational; 3],
        /// Squared radius (positive).
        radius_sq: Rational,
        /// Coefficient of `e_o`.
        weight: Rational,
    },
    /// Negative squared radius: a sphere with imaginary radius.
    ImaginarySphere {
        /// Euclidean center.
        center: [Rational; 3],
        /// Squared radius (negative).
        radius_sq: Rational,
        /// Coefficient of `e_o`.
        weight: Rational,
    },
    /// No `e_o` part but a Euclidean part: the plane `normal . x = offset`.
    Plane {
        /// Euclidean normal vector (nonzero, not normalized).
        normal: [Rational; 3],
        /// Signed offset in the same scale as the normal.
        offset: Rational,
    },
    /// Multiple of `e_inf`: the point at infinity with a weight.
    PointAtInfinity {
        /// Coefficient of `e_inf`.
        weight: Rational,
    },
}

impl VectorKind {
    /// Stable lowercase tag used in CLI output.
    pub fn tag(&self) -> &'static str {
        match self {
            VectorKind::FinitePoint { .. } => "point",
            VectorKind::RealSphere { .. } => "real_sphere",
            VectorKind::ImaginarySphere { .. } => "imaginary_sphere",
            VectorKind::Plane { .. } => "plane",
            VectorKind::PointAtInfinity { .. } => "point_at_infinity",
        }
    }
}

/// Embeds a Euclidean point as a null grade-1 vector with unit weight.
pub fn embed_point(x: &[Rational; 3]) -> Multivector {
    let half_norm = (&x[0] * &x[0] + &x[1] * &x[1] + &x[2] * &x[2]) * rat(1, 2);
    Multivector::from_pairs([
        (EO, rat_int(1)),
        (E1, x[0].clone()),
        (E2, x[1].clone()),
        (E3, x[2].clone()),
        (EINF, half_norm),
    ])
}

/// Builds the plane `normal . x = offset` as a grade-1 vector.
///
/// Errors with [`Error::ZeroNormal`] when the normal vanishes.
pub fn make_plane(normal: &[Rational; 3], offset: &Rational) -> Result<Multivector, Error> {
    if normal.iter().all(|c| c.is_zero()) {
        return Err(Error::ZeroNormal);
    }
    Ok(Multivector::from_pairs([
        (E1, normal[0].clone()),
        (E2, normal[1].clone()),
        (E3, normal[2].clone()),
        (EINF, offset.clone()),
    ]))
}

/// Builds the sphere with the given center and squared radius, scaled by a
/// nonzero weight.
///
/// A negative `radius_sq` yields an imaginary sphere, zero a weighted
/// point. Errors with [`Error::ZeroWeight`] when the weight vanishes.
pub fn make_sphere(
    center: &[Rational; 3],
    radius_sq: &Rational,
    weight: &Rational,
) -> Result<Multivector, Error> {
    if weight.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let half_tail =
        (&center[0] * &center[0] + &center[1] * &center[1] + &center[2] * &center[2] - radius_sq)
            * rat(1, 2);
    Ok(Multivector::from_pairs([
        (EO, weight.clone()),
        (E1, &center[0] * weight),
        (E2, &center[1] * weight),
        (E3, &center[2] * weight),
        (EINF, half_tail * weight),
    ]))
}

/// Classifies a nonzero grade-1 vector as a point, sphere, plane, or point
/// at infinity.
///
/// Errors with [`Error::NotAVector`] for non-grade-1 input and
/// [`Error::ZeroVector`] for zero.
pub fn classify_vector(v: &Multivector) -> Result<VectorKind, Error> {
    if !v.is_vector() {
        return Err(Error::NotAVector);
    }
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let weight = v.coeff(EO);
    let euclid = [v.coeff(E1), v.coeff(E2), v.coeff(E3)];
    if weight.is_zero() {
        if euclid.iter().all(|c| c.is_zero()) {
            return Ok(VectorKind::PointAtInfinity { weight: v.coeff(EINF) });
        }
        return Ok(VectorKind::Plane {
            normal: euclid,
            offset: v.coeff(EINF),
        });
    }
    let center = [
        &euclid[0] / &weight,
        &euclid[1] / &weight,
        &euclid[2] / &weight,
    ];
    let radius_sq = v.dot2(v).expect("grade-1 checked") / (&weight * &weight);
    if radius_sq.is_zero() {
        Ok(VectorKind::FinitePoint { center, weight })
    } else if radius_sq.is_positive() {
        Ok(VectorKind::RealSphere { center, radius_sq, weight })
    } else {
        Ok(VectorKind::ImaginarySphere { center, radius_sq, weight })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    fn r3(a: i64, b: i64, c: i64) -> [Rational; 3] {
        [rat_int(a), rat_int(b), rat_int(c)]
    }

    #[test]
    fn embedded_points_are_null() {
        for x in [r3(0, 0, 0), r3(1, 0, 0), r3(2, -3, 5), [rat(1, 2), rat(-3, 4), rat_int(7)]] {
            let p = embed_point(&x);
            assert_eq!(p.dot2(&p).unwrap(), rat_int(0), "point {x:?}");
        }
        assert_eq!(embed_point(&r3(0, 0, 0)), Multivector::e_o());
    }

    #[test]
    fn point_pairing_encodes_squared_distance() {
        // dot2(P(x), P(y)) = -|x - y|^2 / 2.
        let x = r3(1, 2, 3);
        let y = r3(4, -2, 3);
        let d2 = rat_int((4 - 1) * (4 - 1) + (-2 - 2) * (-2 - 2));
        assert_eq!(
            embed_point(&x).dot2(&embed_point(&y)).unwrap(),
            -d2 * rat(1, 2)
        );
    }

    #[test]
    fn classification_round_trips_points() {
        let x = [rat(1, 3), rat_int(-2), rat(5, 2)];
        match classify_vector(&embed_point(&x)).unwrap() {
            VectorKind::FinitePoint { center, weight } => {
                assert_eq!(center, x);
                assert_eq!(weight, rat_int(1));
            }
            other => panic!("expected a point, got {other:?}"),
        }
        // Weighted copies classify identically up to the recorded weight.
        match classify_vector(&embed_point(&x).scale(&rat_int(-3))).unwrap() {
            VectorKind::FinitePoint { center, weight } => {
                assert_eq!(center, x);
                assert_eq!(weight, rat_int(-3));
            }
            other => panic!("expected a point, got {other:?}"),
        }
    }

    #[test]
    fn classification_round_trips_spheres() {
        let m = r3(1, -1, 2);
        let s = make_sphere(&m, &rat_int(9), &rat_int(2)).unwrap();
        match classify_vector(&s).unwrap() {
            VectorKind::RealSphere { center, radius_sq, weight } => {
                assert_eq!(center, m);
                assert_eq!(radius_sq, rat_int(9));
                assert_eq!(weight, rat_int(2));
            }
            other => panic!("expected a sphere, got {other:?}"),
        }
        let im = make_sphere(&m, &rat_int(-4), &rat_int(1)).unwrap();
        assert!(matches!(
            classify_vector(&im).unwrap(),
            VectorKind::ImaginarySphere { .. }
        ));
        // Radius zero degenerates to the weighted center point.
        let degenerate = make_sphere(&m, &rat_int(0), &rat_int(5)).unwrap();
        assert_eq!(degenerate, embed_point(&m).scale(&rat_int(5)));
    }

    #[test]
    fn classification_recognizes_planes_and_infinity() {
        let pl = make_plane(&r3(0, 0, 2), &rat_int(6)).unwrap();
        match classify_vector(&pl).unwrap() {
            VectorKind::Plane { normal, offset } => {
                assert_eq!(normal, r3(0, 0, 2));
                assert_eq!(offset, rat_int(6));
            }
            other => panic!("expected a plane, got {other:?}"),
        }
        // A plane is incident with an embedded point iff n.x = offset.
        let on = embed_point(&r3(7, -5, 3));
        assert_eq!(pl.dot2(&on).unwrap(), rat_int(0));
        match classify_vector(&Multivector::e_inf().scale(&rat_int(4))).unwrap() {
            VectorKind::PointAtInfinity { weight } => assert_eq!(weight, rat_int(4)),
            other => panic!("expected infinity, got {other:?}"),
        }
    }

    #[test]
    fn constructors_reject_degenerate_input() {
        assert_eq!(make_plane(&r3(0, 0, 0), &rat_int(1)), Err(Error::ZeroNormal));
        assert_eq!(
            make_sphere(&r3(1, 1, 1), &rat_int(4), &rat_int(0)),
            Err(Error::ZeroWeight)
        );
        assert_eq!(classify_vector(&Multivector::zero()), Err(Error::ZeroVector));
        assert_eq!(classify_vector(&Multivector::one()), Err(Error::NotAVector));
    }
}
