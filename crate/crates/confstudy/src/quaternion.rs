//! Exact rational quaternions.
//!
//! The even subalgebra of the conformal algebra is written over four
//! quaternion coordinates, so quaternions with `Rational` entries are the
//! workhorse scalar-level type. Conventions: `i*j = k`, conjugation negates
//! the vector part, and `norm` is the multiplicative quadratic form
//! `w^2 + x^2 + y^2 + z^2 = q * conj(q)`.

use std::fmt;

use num_traits::Zero;

use crate::rational::{format_rational, rat_int, Rational};

/// Quaternion with exact rational components `w + x i + y j + z k`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Quaternion {
    /// Scalar component.
    pub w: Rational,
    /// Coefficient of `i`.
    pub x: Rational,
    /// Coefficient of `j`.
    pub y: Rational,
    /// Coefficient of `k`.
    pub z: Rational,
}

impl Quaternion {
    /// Builds a quaternion from its four components.
    pub fn new(w: Rational, x: Rational, y: Rational, z: Rational) -> Self {
        Quaternion { w, x, y, z }
    }

    /// The zero quaternion.
    pub fn zero() -> Self {
        Quaternion::default()
    }

    /// The unit quaternion `1`.
    pub fn one() -> Self {
        Quaternion::from_scalar(rat_int(1))
    }

    /// The imaginary unit `i`.
    pub fn i() -> Self {
        Quaternion::new(rat_int(0), rat_int(1), rat_int(0), rat_int(0))
    }

    /// The imaginary unit `j`.
    pub fn j() -> Self {
        Quaternion::new(rat_int(0), rat_int(0), rat_int(1), rat_int(0))
    }

    /// The imaginary unit `k`.
    pub fn k() -> Self {
        Quaternion::new(rat_int(0), rat_int(0), rat_int(0), rat_int(1))
    }

    /// Embeds a rational as a scalar quaternion.
    pub fn from_scalar(w: Rational) -> Self {
        Quaternion::new(w, rat_int(0), rat_int(0), rat_int(0))
    }

    /// Builds a pure quaternion from three vector components.
    pub fn from_vector(x: Rational, y: Rational, z: Rational) -> Self {
        Quaternion::new(rat_int(0), x, y, z)
    }

    /// Componentwise sum.
    pub fn add(&self, o: &Quaternion) -> Quaternion {
        Quaternion::new(&self.w + &o.w, &self.x + &o.x, &self.y + &o.y, &self.z + &o.z)
    }

    /// Componentwise difference.
    pub fn sub(&self, o: &Quaternion) -> Quaternion {
        Quaternion::new(&self.w - &o.w, &self.x - &o.x, &self.y - &o.y, &self.z - &o.z)
    }

    /// Negation.
    pub fn neg(&self) -> Quaternion {
        Quaternion::new(-self.w.clone(), -self.x.clone(), -self.y.clone(), -self.z.clone())
    }

    /// Scalar multiple.
    pub fn scale(&self, s: &Rational) -> Quaternion {
        Quaternion::new(&self.w * s, &self.x * s, &self.y * s, &self.z * s)
    }

    /// Hamilton product (`i*j = k`).
    pub fn mul(&self, o: &Quaternion) -> Quaternion {
        let (a, b, c, d) = (&self.w, &self.x, &self.y, &self.z);
        let (e, f, g, h) = (&o.w, &o.x, &o.y, &o.z);
        Quaternion::new(
            a * e - b * f - c * g - d * h,
            a * f + b * e + c * h - d * g,
            a * g - b * h + c * e + d * f,
            a * h + b * g - c * f + d * e,
        )
    }

    /// Conjugate: negates the vector part.
    pub fn conj(&self) -> Quaternion {
        Quaternion::new(self.w.clone(), -self.x.clone(), -self.y.clone(), -self.z.clone())
    }

    /// Euclidean inner product of the four-component coordinate vectors.
    pub fn dot(&self, o: &Quaternion) -> Rational {
        &self.w * &o.w + &self.x * &o.x + &self.y * &o.y + &self.z * &o.z
    }

    /// Multiplicative quadratic form `w^2 + x^2 + y^2 + z^2 = q * conj(q)`.
    pub fn norm(&self) -> Rational {
        self.dot(self)
    }

    /// Scalar part `w`.
    pub fn scal(&self) -> Rational {
        self.w.clone()
    }

    /// Vector (pure imaginary) part.
    pub fn vect(&self) -> Quaternion {
        Quaternion::from_vector(self.x.clone(), self.y.clone(), self.z.clone())
    }

    /// Cross product of the vector parts, as a pure quaternion.
    pub fn cross(&self, o: &Quaternion) -> Quaternion {
        Quaternion::from_vector(
            &self.y * &o.z - &self.z * &o.y,
            &self.z * &o.x - &self.x * &o.z,
            &self.x * &o.y - &self.y * &o.x,
        )
    }

    /// True if all four components vanish.
    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.is_scalar()
    }

    /// True if the vector part vanishes.
    pub fn is_scalar(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    /// True if the scalar part vanishes.
    pub fn is_pure(&self) -> bool {
        self.w.is_zero()
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quaternion({self})")
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({} + {} i + {} j + {} k)",
            format_rational(&self.w),
            format_rational(&self.x),
            format_rational(&self.y),
            format_rational(&self.z),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn q(w: i64, x: i64, y: i64, z: i64) -> Quaternion {
        Quaternion::new(rat_int(w), rat_int(x), rat_int(y), rat_int(z))
    }

    #[test]
    fn unit_multiplication_table() {
        let (i, j, k) = (Quaternion::i(), Quaternion::j(), Quaternion::k());
        let minus_one = q(-1, 0, 0, 0);
        assert_eq!(i.mul(&i), minus_one);
        assert_eq!(j.mul(&j), minus_one);
        assert_eq!(k.mul(&k), minus_one);
        assert_eq!(i.mul(&j), k);
        assert_eq!(j.mul(&k), i);
        assert_eq!(k.mul(&i), j);
        assert_eq!(j.mul(&i), k.neg());
    }

    #[test]
    fn conjugation_reverses_products() {
        let a = q(1, -2, 3, 4);
        let b = q(0, 5, -1, 2);
        assert_eq!(a.mul(&b).conj(), b.conj().mul(&a.conj()));
    }

    #[test]
    fn norm_is_multiplicative() {
        let a = Quaternion::new(rat(1, 2), rat_int(3), rat(-2, 5), rat_int(0));
        let b = q(2, -1, 1, 7);
        assert_eq!(a.mul(&b).norm(), a.norm() * b.norm());
        assert_eq!(a.norm(), a.mul(&a.conj()).scal());
    }

    #[test]
    fn scalar_vector_split_is_exact() {
        let a = q(4, -1, 2, -3);
        assert_eq!(
            Quaternion::from_scalar(a.scal()).add(&a.vect()),
            a
        );
        assert!(a.vect().is_pure());
    }

    #[test]
    fn zero_and_purity_predicates() {
        assert!(Quaternion::zero().is_zero());
        assert!(!q(0, 0, 1, 0).is_zero());
        assert!(!q(1, 0, 0, 0).is_zero());
        assert!(q(0, 3, -1, 2).is_pure());
        assert!(q(5, 0, 0, 0).is_scalar());
        assert!(!q(5, 1, 0, 0).is_scalar());
    }

    #[test]
    fn cross_product_matches_commutator() {
        // For pure quaternions, u v - v u = 2 (u x v).
        let u = q(0, 1, -4, 2);
        let v = q(0, 3, 0, -5);
        let comm = u.mul(&v).sub(&v.mul(&u));
        assert_eq!(comm, u.cross(&v).scale(&rat_int(2)));
    }
}
