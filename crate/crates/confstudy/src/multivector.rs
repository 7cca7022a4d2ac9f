//! The 32-dimensional Clifford algebra of signature (4,1) over the rationals.
//!
//! Elements are stored on the *null basis*: the five generating vectors are
//! the Euclidean `e1, e2, e3` together with the origin vector `e_o` and the
//! vector at infinity `e_inf`, satisfying
//!
//! ```text
//! e_i . e_j = delta_ij,   e_o . e_o = e_inf . e_inf = 0,   e_o . e_inf = -1.
//! ```
//!
//! The canonical basis blades are the exterior (wedge) products of generating
//! vectors in ascending order, indexed by a 5-bit mask: bit 0 = `e1`,
//! bit 1 = `e2`, bit 2 = `e3`, bit 3 = `e_o`, bit 4 = `e_inf`. On this basis
//! grade projection is a mask filter and reversion is the sign map
//! `(-1)^(k(k-1)/2)` on grade-`k` blades.
//!
//! Products are computed by translating to the orthogonal diagonal basis
//! `{e1, e2, e3, e_plus, e_minus}` (`e_minus` squares to -1, the rest to +1,
//! with `e_o = (e_minus - e_plus)/2` and `e_inf = e_minus + e_plus`),
//! multiplying blade-by-blade with a sign bookkeeping rule, and translating
//! back. Both translations are triangular with rational entries, so the
//! round trip is exact.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::Error;
use crate::rational::{format_rational, rat, rat_int, Rational};

/// Bit masks of the five generating vectors.
pub const E1: u8 = 1;
/// Bit mask of `e2`.
pub const E2: u8 = 2;
/// Bit mask of `e3`.
pub const E3: u8 = 4;
/// Bit mask of the origin vector `e_o`.
pub const EO: u8 = 8;
/// Bit mask of the vector at infinity `e_inf`.
pub const EINF: u8 = 16;

/// Index characters of the five generating vectors, in bit order.
///
/// `'i'` denotes `e_inf` in blade keys such as `"eoi"`.
pub const BASIS_CHARS: [char; 5] = ['1', '2', '3', 'o', 'i'];

/// Renders a blade mask as its wire-format key: `"1"` for the scalar
/// blade, otherwise `"e"` followed by index characters in bit order.
pub fn blade_key(mask: u8) -> String {
    debug_assert!(mask < 32);
    if mask == 0 {
        return "1".to_string();
    }
    let mut key = String::from("e");
    for (bit, ch) in BASIS_CHARS.iter().enumerate() {
        if mask & (1 << bit) != 0 {
            key.push(*ch);
        }
    }
    key
}

/// Parses a wire-format blade key back into its mask.
///
/// Index characters must appear in strictly ascending bit order, matching
/// what [`blade_key`] emits.
pub fn parse_blade_key(key: &str) -> Result<u8, Error> {
    if key == "1" {
        return Ok(0);
    }
    let bad = || Error::Parse(format!("invalid blade key {key:?}"));
    let rest = key.strip_prefix('e').ok_or_else(bad)?;
    if rest.is_empty() {
        return Err(bad());
    }
    let mut mask: u8 = 0;
    let mut last_bit: i8 = -1;
    for ch in rest.chars() {
        let bit = BASIS_CHARS
            .iter()
            .position(|c| *c == ch)
            .ok_or_else(bad)? as i8;
        if bit <= last_bit {
            return Err(bad());
        }
        last_bit = bit;
        mask |= 1 << bit;
    }
    Ok(mask)
}

/// Null-basis blade (restricted to its `{e_o, e_inf}` bits) expanded on the
/// diagonal basis. Euclidean bits pass through unchanged.
fn null_to_diag(n: u8) -> &'static [(u8, i64, i64)] {
    match n {
        0 => &[(0, 1, 1)],
        // e_o = -(1/2) e_plus + (1/2) e_minus
        8 => &[(8, -1, 2), (16, 1, 2)],
        // e_inf = e_plus + e_minus
        16 => &[(8, 1, 1), (16, 1, 1)],
        // e_o ^ e_inf = - e_plus ^ e_minus
        24 => &[(24, -1, 1)],
        _ => unreachable!("null part of a mask is one of 0, 8, 16, 24"),
    }
}

/// Inverse translation: diagonal-basis blade back onto the null basis.
fn diag_to_null(d: u8) -> &'static [(u8, i64, i64)] {
    match d {
        0 => &[(0, 1, 1)],
        // e_plus = -e_o + (1/2) e_inf
        8 => &[(8, -1, 1), (16, 1, 2)],
        // e_minus = e_o + (1/2) e_inf
        16 => &[(8, 1, 1), (16, 1, 2)],
        // e_plus ^ e_minus = - e_o ^ e_inf
        24 => &[(24, -1, 1)],
        _ => unreachable!("diagonal part of a mask is one of 0, 8, 16, 24"),
    }
}

/// Multivector of the conformal algebra with exact rational coefficients.
///
/// Internally a sparse map from blade mask to nonzero coefficient; the zero
/// multivector is the empty map, and equality is coefficientwise.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Multivector {
    coeffs: BTreeMap<u8, Rational>,
}

impl Multivector {
    /// The zero multivector.
    pub fn zero() -> Self {
        Multivector::default()
    }

    /// The scalar multivector `c`.
    pub fn scalar(c: Rational) -> Self {
        let mut m = Multivector::zero();
        m.add_assign_blade(0, c);
        m
    }

    /// The multiplicative identity.
    pub fn one() -> Self {
        Multivector::scalar(rat_int(1))
    }

    /// The basis blade with the given mask and coefficient 1.
    pub fn blade(mask: u8) -> Self {
        assert!(mask < 32, "blade mask out of range");
        let mut m = Multivector::zero();
        m.add_assign_blade(mask, rat_int(1));
        m
    }

    /// Builds a multivector from `(mask, coefficient)` pairs, summing
    /// duplicates and dropping zeros.
    pub fn from_pairs<I: IntoIterator<Item = (u8, Rational)>>(pairs: I) -> Self {
        let mut m = Multivector::zero();
        for (mask, c) in pairs {
            assert!(mask < 32, "blade mask out of range");
            m.add_assign_blade(mask, c);
        }
        m
    }

    /// The generating vector `e1`.
    pub fn e1() -> Self {
        Multivector::blade(E1)
    }

    /// The generating vector `e2`.
    pub fn e2() -> Self {
        Multivector::blade(E2)
    }

    /// The generating vector `e3`.
    pub fn e3() -> Self {
        Multivector::blade(E3)
    }

    /// The origin vector `e_o`.
    pub fn e_o() -> Self {
        Multivector::blade(EO)
    }

    /// The vector at infinity `e_inf`.
    pub fn e_inf() -> Self {
        Multivector::blade(EINF)
    }

    /// Coefficient of the blade with the given mask (zero if absent).
    pub fn coeff(&self, mask: u8) -> Rational {
        self.coeffs.get(&mask).cloned().unwrap_or_else(Rational::zero)
    }

    /// The scalar (grade-0) coefficient.
    pub fn scalar_part(&self) -> Rational {
        self.coeff(0)
    }

    /// Iterates over `(mask, coefficient)` pairs in ascending mask order;
    /// every yielded coefficient is nonzero.
    pub fn iter(&self) -> impl Iterator<Item = (u8, &Rational)> {
        self.coeffs.iter().map(|(m, c)| (*m, c))
    }

    /// True if every coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True if only even-grade blades carry nonzero coefficients.
    pub fn is_even(&self) -> bool {
        self.coeffs.keys().all(|m| m.count_ones() % 2 == 0)
    }

    /// True if only grade-1 blades carry nonzero coefficients (the zero
    /// multivector qualifies).
    pub fn is_vector(&self) -> bool {
        self.coeffs.keys().all(|m| m.count_ones() == 1)
    }

    fn add_assign_blade(&mut self, mask: u8, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(mask) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Sum of two multivectors.
    pub fn add(&self, other: &Multivector) -> Multivector {
        let mut out = self.clone();
        for (m, c) in other.iter() {
            out.add_assign_blade(m, c.clone());
        }
        out
    }

    /// Difference of two multivectors.
    pub fn sub(&self, other: &Multivector) -> Multivector {
        let mut out = self.clone();
        for (m, c) in other.iter() {
            out.add_assign_blade(m, -c.clone());
        }
        out
    }

    /// Negation.
    pub fn neg(&self) -> Multivector {
        let mut out = Multivector::zero();
        for (m, c) in self.iter() {
            out.add_assign_blade(m, -c.clone());
        }
        out
    }

    /// Scalar multiple.
    pub fn scale(&self, s: &Rational) -> Multivector {
        let mut out = Multivector::zero();
        if s.is_zero() {
            return out;
        }
        for (m, c) in self.iter() {
            out.add_assign_blade(m, c * s);
        }
        out
    }

    /// Exact geometric product.
    pub fn gp(&self, other: &Multivector) -> Multivector {
        // Translate both factors to the diagonal basis.
        let da = self.to_diag();
        let db = other.to_diag();
        let mut acc: BTreeMap<u8, Rational> = BTreeMap::new();
        for (ma, ca) in &da {
            for (mb, cb) in &db {
                let mask = ma ^ mb;
                let mut term = ca * cb;
                if diag_reorder_parity(*ma, *mb) {
                    term = -term;
                }
                // Repeated generators square via the metric; only e_minus
                // contributes a sign.
                if ma & mb & 16 != 0 {
                    term = -term;
                }
                if term.is_zero() {
                    continue;
                }
                use std::collections::btree_map::Entry;
                match acc.entry(mask) {
                    Entry::Vacant(v) => {
                        v.insert(term);
                    }
                    Entry::Occupied(mut o) => {
                        *o.get_mut() += term;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                }
            }
        }
        Multivector::from_diag(&acc)
    }

    /// Reversion: blades of grade `k` pick up the sign `(-1)^(k(k-1)/2)`.
    pub fn reverse(&self) -> Multivector {
        let mut out = Multivector::zero();
        for (m, c) in self.iter() {
            let k = m.count_ones();
            let flip = (k / 2) % 2 == 1; // grades 2, 3 mod 4 flip sign
            out.add_assign_blade(m, if flip { -c.clone() } else { c.clone() });
        }
        out
    }

    /// Projection onto the grade-`k` component.
    pub fn grade_part(&self, k: u32) -> Multivector {
        let mut out = Multivector::zero();
        for (m, c) in self.iter() {
            if m.count_ones() == k {
                out.add_assign_blade(m, c.clone());
            }
        }
        out
    }

    /// Largest grade carrying a nonzero coefficient (0 for the zero element).
    pub fn max_grade(&self) -> u32 {
        self.coeffs.keys().map(|m| m.count_ones()).max().unwrap_or(0)
    }

    /// Scalar product of two grade-1 vectors: the grade-0 part of their
    /// geometric product.
    ///
    /// Errors with [`Error::NotAVector`] if either operand has a component
    /// outside grade 1.
    pub fn dot2(&self, other: &Multivector) -> Result<Rational, Error> {
        if !self.is_vector() || !other.is_vector() {
            return Err(Error::NotAVector);
        }
        Ok(self.gp(other).scalar_part())
    }

    /// Exterior product of two grade-1 vectors: their geometric product with
    /// the scalar part removed.
    ///
    /// Errors with [`Error::NotAVector`] if either operand has a component
    /// outside grade 1.
    pub fn wedge2(&self, other: &Multivector) -> Result<Multivector, Error> {
        if !self.is_vector() || !other.is_vector() {
            return Err(Error::NotAVector);
        }
        let prod = self.gp(other);
        Ok(prod.sub(&Multivector::scalar(prod.scalar_part())))
    }

    fn to_diag(&self) -> BTreeMap<u8, Rational> {
        let mut out: BTreeMap<u8, Rational> = BTreeMap::new();
        for (m, c) in self.iter() {
            let e = m & 0b00111;
            let n = m & 0b11000;
            for (d, num, den) in null_to_diag(n) {
                let term = c * rat(*num, *den);
                if term.is_zero() {
                    continue;
                }
                use std::collections::btree_map::Entry;
                match out.entry(e | d) {
                    Entry::Vacant(v) => {
                        v.insert(term);
                    }
                    Entry::Occupied(mut o) => {
                        *o.get_mut() += term;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                }
            }
        }
        out
    }

    fn from_diag(diag: &BTreeMap<u8, Rational>) -> Multivector {
        let mut out = Multivector::zero();
        for (m, c) in diag {
            let e = m & 0b00111;
            let d = m & 0b11000;
            for (n, num, den) in diag_to_null(d) {
                out.add_assign_blade(e | n, c * rat(*num, *den));
            }
        }
        out
    }
}

/// Parity of the transposition count needed to merge two ascending
/// diagonal-basis blades into one ascending product: generator `k` of `a`
/// must hop over every lower-indexed generator of `b`.
fn diag_reorder_parity(a: u8, b: u8) -> bool {
    let mut total = 0u32;
    let mut sh = a >> 1;
    while sh != 0 {
        total += (sh & b).count_ones();
        sh >>= 1;
    }
    total % 2 == 1
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multivector({self})")
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m == 0 {
                write!(f, "{}", format_rational(c))?;
            } else {
                write!(f, "{} {}", format_rational(c), blade_key(m))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    fn mv(pairs: &[(u8, i64)]) -> Multivector {
        Multivector::from_pairs(pairs.iter().map(|(m, c)| (*m, rat_int(*c))))
    }

    #[test]
    fn blade_keys_round_trip() {
        for mask in 0u8..32 {
            let key = blade_key(mask);
            assert_eq!(parse_blade_key(&key).unwrap(), mask, "key {key}");
        }
        assert_eq!(blade_key(0), "1");
        assert_eq!(blade_key(EO | EINF), "eoi");
        assert_eq!(blade_key(E1 | E2 | E3), "e123");
        assert_eq!(blade_key(E1 | EINF), "e1i");
    }

    #[test]
    fn blade_key_parser_rejects_disorder_and_junk() {
        for bad in ["", "e", "x1", "e21", "e11", "eio", "eo1", "1e", "e4"] {
            assert!(parse_blade_key(bad).is_err(), "should reject {bad:?}");
        }
    }

    #[test]
    fn gram_matrix_of_generating_vectors() {
        let basis = [
            Multivector::e1(),
            Multivector::e2(),
            Multivector::e3(),
            Multivector::e_o(),
            Multivector::e_inf(),
        ];
        // Expected scalar products: Euclidean identity block, isotropic
        // e_o and e_inf pairing to -1.
        for (i, a) in basis.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                let expect = match (i, j) {
                    (0, 0) | (1, 1) | (2, 2) => rat_int(1),
                    (3, 4) | (4, 3) => rat_int(-1),
                    _ => rat_int(0),
                };
                assert_eq!(a.dot2(b).unwrap(), expect, "dot2 basis {i},{j}");
            }
        }
    }

    #[test]
    fn product_of_origin_and_infinity() {
        let eo = Multivector::e_o();
        let einf = Multivector::e_inf();
        // e_o e_inf = -1 + e_o ^ e_inf ; e_inf e_o = -1 - e_o ^ e_inf.
        assert_eq!(eo.gp(&einf), mv(&[(0, -1), (24, 1)]));
        assert_eq!(einf.gp(&eo), mv(&[(0, -1), (24, -1)]));
        assert_eq!(eo.gp(&eo), Multivector::zero());
        assert_eq!(einf.gp(&einf), Multivector::zero());
        assert_eq!(eo.wedge2(&einf).unwrap(), mv(&[(24, 1)]));
        assert_eq!(eo.dot2(&einf).unwrap(), rat_int(-1));
    }

    #[test]
    fn squares_of_two_blades() {
        // (e_o ^ e_inf)^2 = +1 ; (e3 ^ e_o ^ e_inf gives mask 28) squares to +1;
        // (e12)^2 = -1 ; (e3 e_o-e_inf plane blade mask 27: e12 ^ eo ^ einf...) —
        // checked: the plane blade e12 squares to -1, the scaling blade eoi to +1.
        let w24 = Multivector::blade(24);
        assert_eq!(w24.gp(&w24), Multivector::one());
        let e12 = Multivector::blade(3);
        assert_eq!(e12.gp(&e12), Multivector::scalar(rat_int(-1)));
        let w27 = Multivector::blade(27); // e12 ^ e_o ^ e_inf
        assert_eq!(w27.gp(&w27), Multivector::scalar(rat_int(-1)));
    }

    #[test]
    fn reversion_signs_by_grade() {
        // Grades 0,1 fixed; 2,3 negated; 4,5 fixed.
        assert_eq!(Multivector::one().reverse(), Multivector::one());
        assert_eq!(Multivector::e1().reverse(), Multivector::e1());
        assert_eq!(Multivector::blade(3).reverse(), mv(&[(3, -1)]));
        assert_eq!(Multivector::blade(7).reverse(), mv(&[(7, -1)]));
        assert_eq!(Multivector::blade(23).reverse(), Multivector::blade(23));
        assert_eq!(Multivector::blade(31).reverse(), Multivector::blade(31));
    }

    #[test]
    fn reversion_is_exact_on_products() {
        // reverse(ab) = reverse(b) reverse(a) on a mixed-grade sample.
        let a = mv(&[(1, 2), (24, 3), (7, -1)]);
        let b = mv(&[(0, 1), (9, 4), (30, -2)]);
        assert_eq!(a.gp(&b).reverse(), b.reverse().gp(&a.reverse()));
    }

    #[test]
    fn geometric_product_is_associative_on_samples() {
        let a = mv(&[(8, 1), (17, -2), (5, 3)]);
        let b = mv(&[(16, 2), (3, 1), (31, -1)]);
        let c = mv(&[(0, 3), (24, -1), (10, 5)]);
        assert_eq!(a.gp(&b).gp(&c), a.gp(&b.gp(&c)));
    }

    #[test]
    fn ascending_generator_products_expand_with_euclidean_echo() {
        // e1 e_o e_inf = e1oi - e1: multiplying the ascending generators of a
        // blade containing both e_o and e_inf leaves the pure wedge plus a
        // copy of the Euclidean factor with opposite sign.
        let p = Multivector::e1().gp(&Multivector::e_o()).gp(&Multivector::e_inf());
        assert_eq!(p, mv(&[(25, 1), (1, -1)]));
        let q = Multivector::e_o().gp(&Multivector::e_inf());
        assert_eq!(q, mv(&[(24, 1), (0, -1)]));
    }

    #[test]
    fn grade_projection_filters_by_popcount() {
        let a = mv(&[(0, 1), (1, 2), (3, 3), (7, 4), (15, 5), (31, 6)]);
        assert_eq!(a.grade_part(0), mv(&[(0, 1)]));
        assert_eq!(a.grade_part(1), mv(&[(1, 2)]));
        assert_eq!(a.grade_part(2), mv(&[(3, 3)]));
        assert_eq!(a.grade_part(5), mv(&[(31, 6)]));
        let sum = a
            .grade_part(0)
            .add(&a.grade_part(1))
            .add(&a.grade_part(2))
            .add(&a.grade_part(3))
            .add(&a.grade_part(4))
            .add(&a.grade_part(5));
        assert_eq!(sum, a);
    }

    #[test]
    fn vector_guards_reject_mixed_grades() {
        let not_vec = mv(&[(0, 1), (1, 1)]);
        let vec = Multivector::e1();
        assert_eq!(vec.dot2(&not_vec), Err(Error::NotAVector));
        assert_eq!(not_vec.wedge2(&vec), Err(Error::NotAVector));
        // The zero multivector counts as a (zero) vector.
        assert_eq!(Multivector::zero().dot2(&vec).unwrap(), rat_int(0));
    }

    #[test]
    fn arithmetic_drops_zero_coefficients() {
        let a = mv(&[(3, 2)]);
        let b = mv(&[(3, -2)]);
        assert!(a.add(&b).is_zero());
        assert_eq!(a.sub(&a), Multivector::zero());
        assert!(a.scale(&rat_int(0)).is_zero());
        assert_eq!(a.neg().neg(), a);
    }

    #[test]
    fn parity_helpers() {
        assert!(mv(&[(0, 1), (3, 1)]).is_even());
        assert!(!mv(&[(0, 1), (1, 1)]).is_even());
        assert!(mv(&[(1, 1), (8, 2)]).is_vector());
        assert!(!mv(&[(3, 1)]).is_vector());
    }
}
