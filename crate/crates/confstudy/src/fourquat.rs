//! The even subalgebra written over four quaternion coordinates.
//!
//! Every even multivector decomposes uniquely as
//!
//! ```text
//! q  =  q0 + q1*eps1 + q2*eps2 + q3*eps3
//! ```
//!
//! with quaternion coefficients, where the quaternion units embed as
//! `i = -e23`, `j = e13`, `k = -e12` and the three special bivector-like
//! units are `eps1 = e123i`, `eps2 = e123o`, and `eps3 = eps1*eps2 + 1`
//! (equal to `-eoi`). The units multiply by
//!
//! ```text
//! eps1^2 = eps2^2 = 0,        eps3^2 = 1,
//! eps1 eps2 = eps3 - 1,       eps2 eps1 = -eps3 - 1,
//! eps1 eps3 = eps1,  eps3 eps1 = -eps1,
//! eps2 eps3 = -eps2, eps3 eps2 = eps2,
//! ```
//!
//! and they commute with quaternion scalars while `eps1, eps2` are
//! two-sided null. The product of two four-quaternion elements expands to
//! a fixed bilinear recipe in sixteen Hamilton products ([`FourQuat::mul`]);
//! reversion conjugates each quaternion and negates the `eps3` slot.
//!
//! Invertibility is governed by a degree-4 rational norm: `z = q * rev(q)`
//! is always self-reversed (quaternion-scalar in the first three slots,
//! pure in the last), and `nu = z * flip(z)` with the grade-4 part negated
//! is always a rational scalar. When `nu != 0`,
//! `q^{-1} = rev(q) * flip(z) / nu`, two-sided. When `z` happens to be a
//! scalar this reduces to the familiar `rev(q) / (q rev(q))`.

use std::fmt;

use num_traits::Zero;

use crate::error::Error;
use crate::multivector::Multivector;
use crate::quaternion::Quaternion;
use crate::rational::{rat, rat_int, Rational};

/// Even element as four quaternion coordinates over `1, eps1, eps2, eps3`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct FourQuat {
    /// Quaternion coefficient of `1`.
    pub q0: Quaternion,
    /// Quaternion coefficient of `eps1`.
    pub q1: Quaternion,
    /// Quaternion coefficient of `eps2`.
    pub q2: Quaternion,
    /// Quaternion coefficient of `eps3`.
    pub q3: Quaternion,
}

/// Bilinear form driving the displacement-variety equations:
/// `study_form(f, g) = f conj(g) + g conj(f) = 2 <f, g>`.
pub fn study_form(f: &Quaternion, g: &Quaternion) -> Rational {
    f.dot(g) * rat_int(2)
}

impl FourQuat {
    /// Builds an element from its four quaternion coordinates.
    pub fn new(q0: Quaternion, q1: Quaternion, q2: Quaternion, q3: Quaternion) -> Self {
        FourQuat { q0, q1, q2, q3 }
    }

    /// The zero element.
    pub fn zero() -> Self {
        FourQuat::default()
    }

    /// The multiplicative identity.
    pub fn one() -> Self {
        FourQuat::from_scalar(rat_int(1))
    }

    /// Embeds a rational scalar.
    pub fn from_scalar(c: Rational) -> Self {
        FourQuat::new(
            Quaternion::from_scalar(c),
            Quaternion::zero(),
            Quaternion::zero(),
            Quaternion::zero(),
        )
    }

    /// Embeds a dual quaternion `primal + dual * eps1`.
    ///
    /// The span of `1` and `eps1` is closed under multiplication and
    /// `eps1` squares to zero, so this reproduces dual-quaternion
    /// arithmetic exactly.
    pub fn dq_embed(primal: Quaternion, dual: Quaternion) -> Self {
        FourQuat::new(primal, dual, Quaternion::zero(), Quaternion::zero())
    }

    /// True if all four quaternions vanish.
    pub fn is_zero(&self) -> bool {
        self.q0.is_zero() && self.q1.is_zero() && self.q2.is_zero() && self.q3.is_zero()
    }

    /// Componentwise sum.
    pub fn add(&self, o: &FourQuat) -> FourQuat {
        FourQuat::new(
            self.q0.add(&o.q0),
            self.q1.add(&o.q1),
            self.q2.add(&o.q2),
            self.q3.add(&o.q3),
        )
    }

    /// Componentwise difference.
    pub fn sub(&self, o: &FourQuat) -> FourQuat {
        FourQuat::new(
            self.q0.sub(&o.q0),
            self.q1.sub(&o.q1),
            self.q2.sub(&o.q2),
            self.q3.sub(&o.q3),
        )
    }

    /// Negation.
    pub fn neg(&self) -> FourQuat {
        FourQuat::new(self.q0.neg(), self.q1.neg(), self.q2.neg(), self.q3.neg())
    }

    /// Rational multiple.
    pub fn scale(&self, s: &Rational) -> FourQuat {
        FourQuat::new(
            self.q0.scale(s),
            self.q1.scale(s),
            self.q2.scale(s),
            self.q3.scale(s),
        )
    }

    /// Product in the even subalgebra.
    ///
    /// Expansion of `(p0 + p1 eps1 + p2 eps2 + p3 eps3)(s0 + s1 eps1 + ...)`
    /// using the unit table in the module docs; all sixteen coordinate
    /// products are Hamilton products.
    pub fn mul(&self, o: &FourQuat) -> FourQuat {
        let (p0, p1, p2, p3) = (&self.q0, &self.q1, &self.q2, &self.q3);
        let (s0, s1, s2, s3) = (&o.q0, &o.q1, &o.q2, &o.q3);
        let out0 = p0
            .mul(s0)
            .sub(&p1.mul(s2))
            .sub(&p2.mul(s1))
            .add(&p3.mul(s3));
        let out1 = p1.mul(&s0.add(s3)).add(&p0.sub(p3).mul(s1));
        let out2 = p2.mul(&s0.sub(s3)).add(&p0.add(p3).mul(s2));
        let out3 = p0
            .mul(s3)
            .add(&p1.mul(s2))
            .sub(&p2.mul(s1))
            .add(&p3.mul(s0));
        FourQuat::new(out0, out1, out2, out3)
    }

    /// Reversion: conjugate each quaternion, negate the `eps3` slot.
    pub fn reverse(&self) -> FourQuat {
        FourQuat::new(
            self.q0.conj(),
            self.q1.conj(),
            self.q2.conj(),
            self.q3.conj().neg(),
        )
    }

    /// Splits an even multivector into four quaternion coordinates.
    ///
    /// Errors with [`Error::OddPart`] if any odd-grade coefficient is
    /// nonzero.
    pub fn split(m: &Multivector) -> Result<FourQuat, Error> {
        if !m.is_even() {
            return Err(Error::OddPart);
        }
        let c = |mask: u8| m.coeff(mask);
        let q0 = Quaternion::new(c(0), -c(6), c(5), -c(3));
        let q1 = Quaternion::new(c(23), c(17), c(18), c(20));
        let q2 = Quaternion::new(c(15), c(9), c(10), c(12));
        let q3 = Quaternion::new(-c(24), c(30), -c(29), c(27));
        Ok(FourQuat::new(q0, q1, q2, q3))
    }

    /// Reassembles the even multivector with these coordinates.
    pub fn join(&self) -> Multivector {
        Multivector::from_pairs([
            (0u8, self.q0.w.clone()),
            (6, -self.q0.x.clone()),
            (5, self.q0.y.clone()),
            (3, -self.q0.z.clone()),
            (23, self.q1.w.clone()),
            (17, self.q1.x.clone()),
            (18, self.q1.y.clone()),
            (20, self.q1.z.clone()),
            (15, self.q2.w.clone()),
            (9, self.q2.x.clone()),
            (10, self.q2.y.clone()),
            (12, self.q2.z.clone()),
            (24, -self.q3.w.clone()),
            (30, self.q3.x.clone()),
            (29, -self.q3.y.clone()),
            (27, self.q3.z.clone()),
        ])
    }

    /// The always-rational degree-4 norm controlling invertibility.
    ///
    /// With `z = q rev(q) = s + a eps1 + b eps2 + v eps3` (`s, a, b`
    /// rational, `v` pure), the value is `s^2 + 2ab + |v|^2`, which equals
    /// `z` times its grade-4 negation and is multiplicative.
    pub fn norm4(&self) -> Rational {
        let z = self.mul(&self.reverse());
        debug_assert!(z.q0.is_scalar() && z.q1.is_scalar() && z.q2.is_scalar());
        debug_assert!(z.q3.is_pure());
        let s = z.q0.scal();
        let a = z.q1.scal();
        let b = z.q2.scal();
        let v = z.q3;
        &s * &s + rat_int(2) * a * b + v.norm()
    }

    /// Two-sided inverse, or `None` when the degree-4 norm vanishes.
    pub fn inverse(&self) -> Option<FourQuat> {
        let z = self.mul(&self.reverse());
        let s = z.q0.scal();
        let a = z.q1.scal();
        let b = z.q2.scal();
        let v = z.q3.clone();
        let nu = &s * &s + rat_int(2) * &a * &b + v.norm();
        if nu.is_zero() {
            return None;
        }
        // Negate the grade-4 part of z: the rational eps1/eps2 slots and
        // the pure eps3 slot.
        let z_flip = FourQuat::new(
            Quaternion::from_scalar(s),
            Quaternion::from_scalar(-a),
            Quaternion::from_scalar(-b),
            v.neg(),
        );
        let inv = self.reverse().mul(&z_flip).scale(&(rat(1, 1) / nu));
        Some(inv)
    }
}

impl fmt::Debug for FourQuat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FourQuat({self})")
    }
}

impl fmt::Display for FourQuat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{} , {} e1 , {} e2 , {} e3]",
            self.q0, self.q1, self.q2, self.q3
        )
    }
}
