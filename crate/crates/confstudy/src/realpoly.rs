//! Exact univariate polynomials with rational coefficients.
//!
//! Supports the norm-polynomial side of motion factorization: arithmetic,
//! exact division, Euclidean gcd, Sturm real-root counting, rational root
//! extraction, and the enumeration of all ways to write a monic polynomial
//! as an ordered product of monic quadratics over the rationals.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::rational::{format_rational, rat_int, Rational};

/// Polynomial with rational coefficients, ascending degree, and no stored
/// trailing zeros (the zero polynomial has an empty coefficient list).
///
/// The derived ordering compares ascending coefficient lists
/// lexicographically; it exists to give canonical output orders, not a
/// mathematical magnitude.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct RealPoly {
    coeffs: Vec<Rational>,
}

impl RealPoly {
    /// Builds a polynomial from ascending coefficients, trimming zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RealPoly { coeffs }
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        RealPoly { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        RealPoly::constant(rat_int(1))
    }

    /// A constant polynomial.
    pub fn constant(c: Rational) -> Self {
        RealPoly::new(vec![c])
    }

    /// Convenience constructor from ascending integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        RealPoly::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    /// Ascending coefficients without trailing zeros.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(|| rat_int(0))
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Leading coefficient, or `None` for the zero polynomial.
    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Whether the leading coefficient is 1.
    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c == &rat_int(1))
    }

    /// Horner evaluation.
    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = rat_int(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn add(&self, other: &RealPoly) -> RealPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RealPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &RealPoly) -> RealPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RealPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> RealPoly {
        RealPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, s: &Rational) -> RealPoly {
        RealPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &RealPoly) -> RealPoly {
        if self.is_zero() || other.is_zero() {
            return RealPoly::zero();
        }
        let mut out = vec![rat_int(0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RealPoly::new(out)
    }

    /// Formal derivative.
    pub fn derivative(&self) -> RealPoly {
        RealPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat_int(i as i64))
                .collect(),
        )
    }

    /// Euclidean division: returns `(quotient, remainder)` with
    /// `self = quotient * divisor + remainder` and the remainder of
    /// smaller degree. The divisor must be nonzero.
    pub fn divmod(&self, divisor: &RealPoly) -> (RealPoly, RealPoly) {
        let dlead = divisor.leading().expect("division by the zero polynomial");
        let ddeg = divisor.degree().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![rat_int(0); self.coeffs.len().saturating_sub(ddeg)];
        while rem.len() > ddeg {
            let k = rem.len() - 1;
            let factor = rem[k].clone() / dlead;
            if !factor.is_zero() {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    let idx = k - ddeg + i;
                    rem[idx] = &rem[idx] - &(&factor * d);
                }
            }
            quot[k - ddeg] = factor;
            rem.pop();
        }
        (RealPoly::new(quot), RealPoly::new(rem))
    }

    /// Monic greatest common divisor (Euclid); `gcd(0, 0) = 0`.
    pub fn gcd_monic(&self, other: &RealPoly) -> RealPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b);
            a = b;
            b = r;
        }
        match a.leading() {
            Some(lead) => {
                let inv = rat_int(1) / lead;
                a.scale(&inv)
            }
            None => a,
        }
    }
}

impl fmt::Display for RealPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag == rat_int(1);
            match i {
                0 => write!(f, "{}", format_rational(&mag))?,
                1 => {
                    if !unit_coeff {
                        write!(f, "{}", format_rational(&mag))?;
                    }
                    write!(f, "t")?;
                }
                _ => {
                    if !unit_coeff {
                        write!(f, "{}", format_rational(&mag))?;
                    }
                    write!(f, "t^{i}")?;
                }
            }
        }
        Ok(())
    }
}

/// Positive divisors of a nonzero integer, ascending (trial division; fine
/// for the human-scale inputs this library targets).
fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    debug_assert!(!n.is_zero());
    // Machine-word trial division whenever the value fits.
    if let Some(v) = n.to_u128() {
        let mut small = Vec::new();
        let mut large = Vec::new();
        let mut d: u128 = 1;
        while d <= v / d {
            if v % d == 0 {
                small.push(BigInt::from(d));
                let q = v / d;
                if q != d {
                    large.push(BigInt::from(q));
                }
            }
            d += 1;
        }
        large.reverse();
        small.extend(large);
        return small;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while (&d * &d) <= n {
        let (q, r) = n.div_rem(&d);
        if r.is_zero() {
            small.push(d.clone());
            if q != d {
                large.push(q);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Common denominator of all coefficients.
fn common_denominator(p: &RealPoly) -> BigInt {
    p.coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}

/// Primitive integer form: clears denominators, divides out the content,
/// and normalizes the leading coefficient positive. By Gauss's lemma the
/// monic rational factors of `p` correspond to the primitive integer
/// factors of this form.
fn primitive_integer(p: &RealPoly) -> Vec<BigInt> {
    debug_assert!(!p.is_zero());
    let k = Rational::from(common_denominator(p));
    let mut ints: Vec<BigInt> = p.coeffs().iter().map(|c| (c * &k).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    for c in &mut ints {
        *c /= &content;
    }
    if ints.last().unwrap().is_negative() {
        for c in &mut ints {
            *c = -&*c;
        }
    }
    ints
}

fn int_eval(coeffs: &[BigInt], x: i64) -> BigInt {
    let mut acc = BigInt::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Number of distinct real roots, by Sturm's theorem (0 for constants).
pub fn count_real_roots(p: &RealPoly) -> usize {
    if p.degree().unwrap_or(0) == 0 {
        return 0;
    }
    // Squarefree part: same real roots, simple.
    let g = p.gcd_monic(&p.derivative());
    let (f, r) = p.divmod(&g);
    debug_assert!(r.is_zero());
    let mut chain = vec![f.clone(), f.derivative()];
    while !chain.last().unwrap().is_zero() {
        let n = chain.len();
        let (_, r) = chain[n - 2].divmod(&chain[n - 1]);
        chain.push(r.neg());
    }
    chain.pop();
    let variations = |at_plus_infinity: bool| -> usize {
        let signs: Vec<i8> = chain
            .iter()
            .map(|q| {
                let lead = q.leading().expect("chain entries are nonzero");
                let mut s: i8 = if lead.is_positive() { 1 } else { -1 };
                if !at_plus_infinity && q.degree().unwrap() % 2 == 1 {
                    s = -s;
                }
                s
            })
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    };
    variations(false) - variations(true)
}

/// All rational roots of a monic polynomial, with multiplicity, ascending,
/// together with the root-free cofactor.
pub fn rational_roots(p: &RealPoly) -> (Vec<Rational>, RealPoly) {
    assert!(p.is_monic(), "rational root extraction expects a monic polynomial");
    let mut roots = Vec::new();
    let mut rest = p.clone();
    // Roots at zero: the number of leading zero coefficients.
    while rest.degree().unwrap_or(0) > 0 && rest.coeff(0).is_zero() {
        roots.push(rat_int(0));
        rest = RealPoly::new(rest.coeffs()[1..].to_vec());
    }
    if rest.degree().unwrap_or(0) == 0 {
        roots.sort();
        return (roots, rest);
    }
    // Candidates p/q with p dividing the constant and q the leading
    // coefficient of the primitive integer form.
    let ints = primitive_integer(&rest);
    let lead = ints.last().unwrap().clone();
    let mut candidates: Vec<Rational> = Vec::new();
    for num in positive_divisors(&ints[0]) {
        for den in positive_divisors(&lead) {
            let r = Rational::new(num.clone(), den.clone());
            candidates.push(-r.clone());
            candidates.push(r);
        }
    }
    candidates.sort();
    candidates.dedup();
    for r in candidates {
        while rest.degree().unwrap_or(0) > 0 && rest.eval(&r).is_zero() {
            let linear = RealPoly::new(vec![-r.clone(), rat_int(1)]);
            let (q, rem) = rest.divmod(&linear);
            debug_assert!(rem.is_zero());
            rest = q;
            roots.push(r.clone());
        }
    }
    roots.sort();
    (roots, rest)
}

/// Finds the irreducible monic quadratic factors of a monic polynomial
/// with no rational roots and no real roots. Errors when a factor of
/// degree greater than 2 is irreducible over the rationals.
fn irreducible_quadratics(p: &RealPoly) -> Result<Vec<RealPoly>, Error> {
    let mut rest = p.clone();
    let mut out = Vec::new();
    loop {
        match rest.degree().unwrap_or(0) {
            0 => break,
            2 => {
                out.push(rest.clone());
                break;
            }
            _ => {}
        }
        // A monic rational quadratic divisor of `rest` is Q/l for a
        // primitive integer quadratic Q = l t^2 + b t + g dividing the
        // primitive form P (Gauss's lemma), so l | lc(P), Q(0) | P(0),
        // Q(1) | P(1), and Q(-1) | P(-1). Enumerate the first three and
        // use the fourth as a cheap filter before the trial division;
        // Q(-1) is determined by Q(1) + Q(-1) = 2l + 2g.
        let ints = primitive_integer(&rest);
        let lead = ints.last().unwrap().clone();
        let (p0, p1, pm1) = (int_eval(&ints, 0), int_eval(&ints, 1), int_eval(&ints, -1));
        debug_assert!(!p0.is_zero() && !p1.is_zero() && !pm1.is_zero(), "rational roots were removed");
        let signed = |ds: Vec<BigInt>| -> Vec<BigInt> {
            let mut all: Vec<BigInt> = ds.iter().map(|d| -d).collect();
            all.reverse();
            all.extend(ds);
            all
        };
        let leads = positive_divisors(&lead);
        let g0s = signed(positive_divisors(&p0));
        let d1s = signed(positive_divisors(&p1));
        let mut found = None;
        'search: for l in &leads {
            let l_rat = Rational::from(l.clone());
            for g in &g0s {
                let q1_plus_qm1 = (l + g) * 2i32;
                for d1 in &d1s {
                    let qm1 = &q1_plus_qm1 - d1;
                    if qm1.is_zero() || !(&pm1 % &qm1).is_zero() {
                        continue;
                    }
                    let b = d1 - l - g;
                    let cand = RealPoly::new(vec![
                        Rational::from(g.clone()) / &l_rat,
                        Rational::from(b) / &l_rat,
                        rat_int(1),
                    ]);
                    let (q, rem) = rest.divmod(&cand);
                    if rem.is_zero() {
                        found = Some((cand, q));
                        break 'search;
                    }
                }
            }
        }
        match found {
            Some((cand, q)) => {
                out.push(cand);
                rest = q;
            }
            None => {
                return Err(Error::UnfactorableOverRationals(format!(
                    "{rest} is irreducible of degree greater than 2 over the rationals"
                )));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// All distinct ways to pair up the multiset of roots, each pairing
/// rendered as the multiset of monic quadratics `(t - r)(t - s)`.
fn pairings(roots: &[Rational]) -> Vec<Vec<RealPoly>> {
    fn recurse(remaining: &mut Vec<Rational>, acc: &mut Vec<RealPoly>, out: &mut Vec<Vec<RealPoly>>) {
        if remaining.is_empty() {
            let mut done = acc.clone();
            done.sort();
            out.push(done);
            return;
        }
        let first = remaining.remove(0);
        let mut seen: BTreeSet<Rational> = BTreeSet::new();
        for idx in 0..remaining.len() {
            let partner = remaining[idx].clone();
            if !seen.insert(partner.clone()) {
                continue;
            }
            let quad = RealPoly::new(vec![
                &first * &partner,
                -(&first + &partner),
                rat_int(1),
            ]);
            remaining.remove(idx);
            acc.push(quad);
            recurse(remaining, acc, out);
            acc.pop();
            remaining.insert(idx, partner);
        }
        remaining.insert(0, first);
    }
    let mut sorted = roots.to_vec();
    sorted.sort();
    let mut out = Vec::new();
    recurse(&mut sorted, &mut Vec::new(), &mut out);
    out
}

/// All distinct orderings of a sorted multiset.
fn unique_permutations(items: &[RealPoly]) -> Vec<Vec<RealPoly>> {
    fn recurse(pool: &mut Vec<RealPoly>, acc: &mut Vec<RealPoly>, out: &mut Vec<Vec<RealPoly>>) {
        if pool.is_empty() {
            out.push(acc.clone());
            return;
        }
        let mut seen: BTreeSet<RealPoly> = BTreeSet::new();
        for idx in 0..pool.len() {
            let item = pool[idx].clone();
            if !seen.insert(item.clone()) {
                continue;
            }
            pool.remove(idx);
            acc.push(item.clone());
            recurse(pool, acc, out);
            acc.pop();
            pool.insert(idx, item);
        }
    }
    let mut pool = items.to_vec();
    pool.sort();
    let mut out = Vec::new();
    recurse(&mut pool, &mut Vec::new(), &mut out);
    out
}

/// Enumerates every ordered sequence of monic quadratics whose product is
/// the given monic even-degree polynomial.
///
/// Rational roots (extracted exactly) are paired with each other in all
/// distinct ways; irreducible quadratic factors stay intact. The result is
/// sorted lexicographically by ascending coefficient lists and contains no
/// duplicates. Errors: [`Error::InvalidParams`] unless the input is monic,
/// and [`Error::UnfactorableOverRationals`] for odd degree, irrational real
/// roots (exact splitting stops at the rationals), unpairable odd rational
/// root counts, or irreducible factors of degree above 2.
pub fn quadratic_splits(n: &RealPoly) -> Result<Vec<Vec<RealPoly>>, Error> {
    if !n.is_monic() {
        return Err(Error::InvalidParams(
            "quadratic splitting expects a monic polynomial".into(),
        ));
    }
    let deg = n.degree().unwrap();
    if deg % 2 == 1 {
        return Err(Error::UnfactorableOverRationals(format!(
            "{n} has odd degree and is no product of quadratics"
        )));
    }
    if deg == 0 {
        return Ok(vec![Vec::new()]);
    }
    let (roots, cofactor) = rational_roots(n);
    if roots.len() % 2 == 1 {
        return Err(Error::UnfactorableOverRationals(format!(
            "{n} has an odd number of rational roots (with multiplicity); they cannot pair into quadratics"
        )));
    }
    let atoms = if cofactor.degree().unwrap_or(0) == 0 {
        Vec::new()
    } else {
        if count_real_roots(&cofactor) > 0 {
            return Err(Error::UnfactorableOverRationals(format!(
                "{n} has irrational real roots; exact splitting handles rational roots and complex quadratic factors only"
            )));
        }
        irreducible_quadratics(&cofactor)?
    };
    let mut multisets: BTreeSet<Vec<RealPoly>> = BTreeSet::new();
    let pair_sets = if roots.is_empty() {
        vec![Vec::new()]
    } else {
        pairings(&roots)
    };
    for pairs in pair_sets {
        let mut ms = atoms.clone();
        ms.extend(pairs);
        ms.sort();
        multisets.insert(ms);
    }
    let mut sequences: Vec<Vec<RealPoly>> = multisets
        .iter()
        .flat_map(|ms| unique_permutations(ms))
        .collect();
    sequences.sort();
    sequences.dedup();
    Ok(sequences)
}
