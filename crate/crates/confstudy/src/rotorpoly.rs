//! Polynomials with four-quaternion coefficients and a central variable.
//!
//! The variable `t` commutes with every coefficient, so multiplication is
//! coefficient-noncommutative but `t`-central. A *rotor polynomial* is one
//! whose product with its coefficientwise reverse is a nonzero polynomial
//! with rational scalar coefficients — the norm polynomial. Every monic
//! rotor polynomial factors (generically) into linear factors `t + h`
//! whose `h` are displacements on straight lines through the identity; the
//! factorization is driven by the ways of writing the norm polynomial as
//! an ordered product of monic quadratics.

use rayon::prelude::*;

use crate::dorst::{classify_motion, line_normalize, MotionType};
use crate::error::Error;
use crate::fourquat::FourQuat;
use crate::rational::Rational;
use crate::realpoly::{quadratic_splits, RealPoly};

/// Polynomial with [`FourQuat`] coefficients, ascending degree, no stored
/// trailing zeros (the zero polynomial has an empty coefficient list).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RotorPoly {
    coeffs: Vec<FourQuat>,
}

impl RotorPoly {
    /// Builds a polynomial from ascending coefficients, trimming zeros.
    pub fn new(mut coeffs: Vec<FourQuat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RotorPoly { coeffs }
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        RotorPoly { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        RotorPoly::constant(FourQuat::one())
    }

    /// A constant polynomial.
    pub fn constant(c: FourQuat) -> Self {
        RotorPoly::new(vec![c])
    }

    /// The linear polynomial `t + h`.
    pub fn linear(h: &FourQuat) -> Self {
        RotorPoly::new(vec![h.clone(), FourQuat::one()])
    }

    /// Ascending coefficients without trailing zeros.
    pub fn coeffs(&self) -> &[FourQuat] {
        &self.coeffs
    }

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> FourQuat {
        self.coeffs.get(i).cloned().unwrap_or_else(FourQuat::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Leading coefficient, or `None` for the zero polynomial.
    pub fn leading(&self) -> Option<&FourQuat> {
        self.coeffs.last()
    }

    /// Whether the leading coefficient is 1.
    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c == &FourQuat::one())
    }

    /// Coefficientwise reversal — the reverse of the polynomial, since `t`
    /// is a scalar.
    pub fn reverse_coeffs(&self) -> RotorPoly {
        RotorPoly::new(self.coeffs.iter().map(|c| c.reverse()).collect())
    }

    /// Horner evaluation at a rational parameter (central, so evaluation
    /// is a ring homomorphism on rotor polynomials).
    pub fn eval(&self, t: &Rational) -> FourQuat {
        let mut acc = FourQuat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.scale(t).add(c);
        }
        acc
    }
}

/// Product of two coefficient polynomials (convolution).
pub fn poly_mul(p: &RotorPoly, q: &RotorPoly) -> RotorPoly {
    if p.is_zero() || q.is_zero() {
        return RotorPoly::zero();
    }
    let mut out = vec![FourQuat::zero(); p.coeffs.len() + q.coeffs.len() - 1];
    for (i, a) in p.coeffs.iter().enumerate() {
        for (j, b) in q.coeffs.iter().enumerate() {
            out[i + j] = out[i + j].add(&a.mul(b));
        }
    }
    RotorPoly::new(out)
}

/// Evaluation as a free function, matching the operation vocabulary of the
/// factorization pipeline.
pub fn poly_eval(p: &RotorPoly, t: &Rational) -> FourQuat {
    p.eval(t)
}

/// The rational scalar carried by a coefficient, if it is one.
fn scalar_of(f: &FourQuat) -> Option<Rational> {
    if f.q0.is_scalar() && f.q1.is_zero() && f.q2.is_zero() && f.q3.is_zero() {
        Some(f.q0.scal())
    } else {
        None
    }
}

/// The norm polynomial `C * rev(C)`, verified to be a nonzero polynomial
/// with rational scalar coefficients equal to `rev(C) * C`.
///
/// Errors with [`Error::NotRotorPolynomial`] when the two orders disagree,
/// a product coefficient is non-scalar, or the product vanishes.
pub fn norm_poly(c: &RotorPoly) -> Result<RealPoly, Error> {
    let rev = c.reverse_coeffs();
    let forward = poly_mul(c, &rev);
    let backward = poly_mul(&rev, c);
    if forward != backward {
        return Err(Error::NotRotorPolynomial(
            "the products with the reversed polynomial disagree between the two orders".into(),
        ));
    }
    if forward.is_zero() {
        return Err(Error::NotRotorPolynomial(
            "the product with the reversed polynomial vanishes identically".into(),
        ));
    }
    let mut out = Vec::with_capacity(forward.coeffs.len());
    for (i, coeff) in forward.coeffs.iter().enumerate() {
        match scalar_of(coeff) {
            Some(s) => out.push(s),
            None => {
                return Err(Error::NotRotorPolynomial(format!(
                    "non-scalar coefficient at degree {i}: {coeff}"
                )));
            }
        }
    }
    Ok(RealPoly::new(out))
}

/// One factorization of a rotor polynomial into linear factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    /// Ordered roots: the polynomial equals `(t + factors[0]) * ... *
    /// (t + factors[n-1])` exactly.
    pub factors: Vec<FourQuat>,
    /// Ordered monic quadratics with `(t + h_i) * (t + rev(h_i)) =
    /// quadratics[i]`.
    pub quadratics: Vec<RealPoly>,
    /// Elementary motion kind of each factor's line; `None` for constant
    /// factors, which define no line.
    pub kinds: Vec<Option<MotionType>>,
}

/// Outcome of [`factorize`]: every quadratic ordering either yields a
/// factorization or is reported as skipped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizeResult {
    /// Successful factorizations, ordered lexicographically by their
    /// quadratic sequences (ascending coefficient lists).
    pub factorizations: Vec<Factorization>,
    /// One diagnostic line per skipped ordering.
    pub skipped: Vec<String>,
}

fn sequence_label(seq: &[RealPoly]) -> String {
    let parts: Vec<String> = seq.iter().map(|m| m.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// Remainder of `p` upon division by a monic real quadratic (the
/// coefficients are scalar, so left and right division coincide).
fn rem_by_quadratic(p: &RotorPoly, m: &RealPoly) -> RotorPoly {
    debug_assert!(m.is_monic() && m.degree() == Some(2));
    let g = m.coeff(0);
    let b = m.coeff(1);
    let mut rem = p.coeffs.clone();
    while rem.len() > 2 {
        let lead = rem.pop().unwrap();
        let k = rem.len(); // degree of the popped term
        rem[k - 1] = rem[k - 1].sub(&lead.scale(&b));
        rem[k - 2] = rem[k - 2].sub(&lead.scale(&g));
    }
    RotorPoly::new(rem)
}

/// Exact right division of `p` by `t + h`: returns the quotient `q` with
/// `p = q * (t + h)`, or `None` if the remainder is nonzero.
fn divide_linear(p: &RotorPoly, h: &FourQuat) -> Option<RotorPoly> {
    let n = p.degree()?;
    if n == 0 {
        return None;
    }
    let mut quot = vec![FourQuat::zero(); n];
    quot[n - 1] = p.coeff(n);
    for j in (1..n).rev() {
        quot[j - 1] = p.coeff(j).sub(&quot[j].mul(h));
    }
    let rem = p.coeff(0).sub(&quot[0].mul(h));
    if rem.is_zero() {
        Some(RotorPoly::new(quot))
    } else {
        None
    }
}

/// Peels linear factors off `c`, rightmost first, following one ordered
/// quadratic sequence. Returns the ordered factor list or a skip
/// diagnostic.
fn peel(c: &RotorPoly, seq: &[RealPoly]) -> Result<Vec<FourQuat>, String> {
    let label = sequence_label(seq);
    let mut cur = c.clone();
    let mut factors_rev = Vec::with_capacity(seq.len());
    for m in seq.iter().rev() {
        let r = rem_by_quadratic(&cur, m);
        let r1 = r.coeff(1);
        let r0 = r.coeff(0);
        if r1.is_zero() {
            return Err(format!(
                "{label}: remainder upon division by {m} is constant; no linear coefficient to invert"
            ));
        }
        let Some(r1_inv) = r1.inverse() else {
            return Err(format!(
                "{label}: linear remainder coefficient {r1} has zero norm and is not invertible"
            ));
        };
        let h = r1_inv.mul(&r0);
        let norm_ok = h.mul(&h.reverse()) == FourQuat::from_scalar(m.coeff(0));
        let trace_ok = h.add(&h.reverse()) == FourQuat::from_scalar(m.coeff(1));
        if !norm_ok || !trace_ok {
            return Err(format!(
                "{label}: the remainder root {h} does not satisfy {m}"
            ));
        }
        match divide_linear(&cur, &h) {
            Some(q) => cur = q,
            None => {
                return Err(format!(
                    "{label}: division by the recovered factor t + ({h}) left a remainder"
                ));
            }
        }
        factors_rev.push(h);
    }
    debug_assert_eq!(cur, RotorPoly::one(), "monic bookkeeping");
    factors_rev.reverse();
    Ok(factors_rev)
}

/// Kind of the line generated by a factor; `None` for constants.
fn factor_kind(h: &FourQuat) -> Option<MotionType> {
    line_normalize(h).ok().map(|d| classify_motion(&d))
}

/// Factors a monic rotor polynomial into linear factors, once per ordered
/// quadratic splitting of its norm polynomial.
///
/// Orderings are processed independently (in parallel) and merged in
/// lexicographic order of their quadratic sequences; orderings whose
/// linear remainder is not invertible are skipped and reported in the
/// result. Errors: [`Error::InvalidParams`] for non-monic input (only
/// monic polynomials are products of monic linear factors),
/// [`Error::NotRotorPolynomial`] / [`Error::UnfactorableOverRationals`]
/// propagated from the norm pipeline, and [`Error::NoFactorization`] when
/// every ordering was skipped.
pub fn factorize(c: &RotorPoly) -> Result<FactorizeResult, Error> {
    if !c.is_monic() {
        return Err(Error::InvalidParams(
            "factorization expects a monic polynomial; products of monic linear factors are monic"
                .into(),
        ));
    }
    let n = norm_poly(c)?;
    let splits = quadratic_splits(&n)?;
    let outcomes: Vec<(Vec<RealPoly>, Result<Vec<FourQuat>, String>)> = splits
        .into_par_iter()
        .map(|seq| {
            let peeled = peel(c, &seq);
            (seq, peeled)
        })
        .collect();
    // `splits` is sorted and par_iter preserves input order, so the merge
    // is already deterministic.
    let mut factorizations = Vec::new();
    let mut skipped = Vec::new();
    for (seq, outcome) in outcomes {
        match outcome {
            Ok(factors) => {
                let kinds = factors.iter().map(factor_kind).collect();
                factorizations.push(Factorization { factors, quadratics: seq, kinds });
            }
            Err(diag) => skipped.push(diag),
        }
    }
    if factorizations.is_empty() && !skipped.is_empty() {
        return Err(Error::NoFactorization { skipped });
    }
    Ok(FactorizeResult { factorizations, skipped })
}
