//! Exact arithmetic in the ring of rational combinations of square roots of
//! squarefree positive integers.
//!
//! A [`RadicalScalar`] is the finite sum `Σ qᵢ·√nᵢ` with every `nᵢ` squarefree
//! and every `qᵢ` non-zero. Radicand `1` holds the rational part. The map is
//! canonical, so structural equality is numeric equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{ParseError, RadicalError};
use crate::rational::{format_rational, latex_rational, Rational};

/// Default trial-division bound for radicand factorization.
pub const DEFAULT_FACTOR_BOUND: u64 = 1_000_000;

/// Environment variable that overrides [`DEFAULT_FACTOR_BOUND`] in the CLI.
pub const FACTOR_BOUND_ENV: &str = "COLORSUPER_FACTOR_BOUND";

static FACTOR_BOUND: AtomicU64 = AtomicU64::new(DEFAULT_FACTOR_BOUND);

/// Bound used by [`sqrt_rational`].
pub fn factor_bound() -> u64 {
    FACTOR_BOUND.load(Ordering::Relaxed)
}

pub fn set_factor_bound(bound: u64) {
    FACTOR_BOUND.store(bound, Ordering::Relaxed);
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RadicalScalar {
    terms: BTreeMap<u64, Rational>,
}

pub fn is_squarefree(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let mut n = n;
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return false;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    true
}

/// Splits `n = s²·f` with `f` squarefree, trial dividing by primes up to `bound`.
fn squarefree_split(n: &BigInt, bound: u64) -> Result<(BigInt, BigInt), RadicalError> {
    let mut rest = n.clone();
    let mut square = BigInt::one();
    let mut free = BigInt::one();
    let mut p = 2u64;
    loop {
        let pb = BigInt::from(p);
        if &pb * &pb > rest {
            break;
        }
        if p > bound {
            let radicand = rest.to_u64().unwrap_or(u64::MAX);
            return Err(RadicalError::FactorBoundExceeded { radicand, bound });
        }
        let mut e = 0u32;
        while (&rest % &pb).is_zero() {
            rest /= &pb;
            e += 1;
        }
        if e > 0 {
            square *= pb.pow(e / 2);
            if e % 2 == 1 {
                free *= &pb;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    free *= rest;
    Ok((square, free))
}

impl RadicalScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::term(q, 1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// `coeff·√radicand`.
    ///
    /// # Panics
    ///
    /// Panics if `radicand` is not squarefree.
    pub fn term(coeff: Rational, radicand: u64) -> Self {
        assert!(is_squarefree(radicand), "radicand {radicand} is not squarefree");
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(radicand, coeff);
        }
        Self { terms }
    }

    /// `√n` for a non-negative machine integer, reduced to canonical form.
    pub fn sqrt_int(n: u64) -> Result<Self, RadicalError> {
        sqrt_rational(&Rational::from_integer(BigInt::from(n)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&1).is_some_and(|q| q.is_one())
    }

    /// Terms in increasing radicand order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &Rational)> {
        self.terms.iter().map(|(r, q)| (*r, q))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The rational value, if there is no irrational part.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&1).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(r, c)| (*r, c * q)).collect(),
        }
    }

    fn add_term(&mut self, radicand: u64, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(radicand).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&radicand);
        }
    }

    /// Inverse of a single-term value `c·√d`, which is `(1/(c·d))·√d`.
    pub fn invert_single_term(&self) -> Result<Self, RadicalError> {
        if self.terms.len() != 1 {
            return Err(RadicalError::UnsupportedDivision(self.to_string()));
        }
        let (&d, c) = self.terms.iter().next().expect("one term");
        let inv = (c * Rational::from_integer(BigInt::from(d))).recip();
        Ok(Self::term(inv, d))
    }

    /// Floating-point rendering for human-readable reports only.
    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(r, q)| q.to_f64().unwrap_or(f64::NAN) * (*r as f64).sqrt())
            .sum()
    }

    /// Canonical JSON: array of `{"num", "den", "rad"}` sorted by radicand.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(r, q)| {
                    json!({
                        "num": big_to_json(q.numer()),
                        "den": big_to_json(q.denom()),
                        "rad": r,
                    })
                })
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Self, ParseError> {
        let arr = v
            .as_array()
            .ok_or_else(|| ParseError::schema("radical", "expected an array of terms"))?;
        let mut out = Self::zero();
        let mut last = 0u64;
        for (i, t) in arr.iter().enumerate() {
            let field = |f: &str| format!("radical[{i}].{f}");
            let get_int = |f: &str| -> Result<BigInt, ParseError> {
                let raw = t.get(f).ok_or_else(|| ParseError::schema(field(f), "missing"))?;
                json_to_big(raw).ok_or_else(|| ParseError::schema(field(f), "expected an integer"))
            };
            let num = get_int("num")?;
            let den = get_int("den")?;
            let rad = t
                .get("rad")
                .and_then(Value::as_u64)
                .ok_or_else(|| ParseError::schema(field("rad"), "expected a positive integer"))?;
            if !den.is_positive() {
                return Err(ParseError::schema(field("den"), "must be positive"));
            }
            if num.is_zero() {
                return Err(ParseError::schema(field("num"), "zero coefficients are not stored"));
            }
            if !is_squarefree(rad) {
                return Err(ParseError::schema(field("rad"), "must be squarefree"));
            }
            if rad <= last {
                return Err(ParseError::schema(field("rad"), "radicands must be strictly increasing"));
            }
            last = rad;
            out.terms.insert(rad, Rational::new(num, den));
        }
        Ok(out)
    }

    /// LaTeX rendering, e.g. `-\sqrt{2}`, `\frac{1}{2}\sqrt{6}`, `3 - 2\sqrt{2}`.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (r, q)) in self.terms.iter().enumerate() {
            let neg = q.is_negative();
            let mag = q.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if *r == 1 {
                s.push_str(&latex_rational(&mag));
            } else {
                if !mag.is_one() {
                    s.push_str(&latex_rational(&mag));
                }
                s.push_str(&format!("\\sqrt{{{r}}}"));
            }
        }
        s
    }
}

fn big_to_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        // Values beyond i64 are kept exact as decimal strings.
        None => Value::String(n.to_string()),
    }
}

fn json_to_big(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

impl fmt::Display for RadicalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (r, q)) in self.terms.iter().enumerate() {
            let neg = q.is_negative();
            let mag = q.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            match (*r, mag.is_one()) {
                (1, _) => write!(f, "{}", format_rational(&mag))?,
                (r, true) => write!(f, "sqrt({r})")?,
                (r, false) => write!(f, "{}*sqrt({r})", format_rational(&mag))?,
            }
        }
        Ok(())
    }
}

/// `√q` as `c·√d` with `d` squarefree, using [`factor_bound`].
pub fn sqrt_rational(q: &Rational) -> Result<RadicalScalar, RadicalError> {
    sqrt_rational_bounded(q, factor_bound())
}

/// `√(n/d) = √(n·d)/d`; factors `n·d` by trial division up to `bound`.
pub fn sqrt_rational_bounded(q: &Rational, bound: u64) -> Result<RadicalScalar, RadicalError> {
    if q.is_negative() {
        return Err(RadicalError::NegativeSqrt(format_rational(q)));
    }
    if q.is_zero() {
        return Ok(RadicalScalar::zero());
    }
    let prod = q.numer() * q.denom();
    let (square, free) = squarefree_split(&prod, bound)?;
    let rad = free
        .to_u64()
        .ok_or_else(|| RadicalError::RadicandOverflow(free.to_string()))?;
    let coeff = Rational::new(square, q.denom().clone());
    Ok(RadicalScalar::term(coeff, rad))
}

fn mul_radicands(m: u64, n: u64) -> (u64, u64) {
    let g = m.gcd(&n);
    let rad = (m / g)
        .checked_mul(n / g)
        .expect("radicand product overflows u64");
    (g, rad)
}

impl Add<&RadicalScalar> for &RadicalScalar {
    type Output = RadicalScalar;
    fn add(self, rhs: &RadicalScalar) -> RadicalScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for RadicalScalar {
    type Output = RadicalScalar;
    fn add(mut self, rhs: RadicalScalar) -> RadicalScalar {
        self += &rhs;
        self
    }
}

impl AddAssign<&RadicalScalar> for RadicalScalar {
    fn add_assign(&mut self, rhs: &RadicalScalar) {
        for (r, q) in &rhs.terms {
            self.add_term(*r, q.clone());
        }
    }
}

impl SubAssign<&RadicalScalar> for RadicalScalar {
    fn sub_assign(&mut self, rhs: &RadicalScalar) {
        for (r, q) in &rhs.terms {
            self.add_term(*r, -q.clone());
        }
    }
}

impl Sub<&RadicalScalar> for &RadicalScalar {
    type Output = RadicalScalar;
    fn sub(self, rhs: &RadicalScalar) -> RadicalScalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for RadicalScalar {
    type Output = RadicalScalar;
    fn sub(mut self, rhs: RadicalScalar) -> RadicalScalar {
        self -= &rhs;
        self
    }
}

impl Neg for &RadicalScalar {
    type Output = RadicalScalar;
    fn neg(self) -> RadicalScalar {
        RadicalScalar {
            terms: self.terms.iter().map(|(r, q)| (*r, -q.clone())).collect(),
        }
    }
}

impl Neg for RadicalScalar {
    type Output = RadicalScalar;
    fn neg(self) -> RadicalScalar {
        -&self
    }
}

impl Mul<&RadicalScalar> for &RadicalScalar {
    type Output = RadicalScalar;
    fn mul(self, rhs: &RadicalScalar) -> RadicalScalar {
        let mut out = RadicalScalar::zero();
        for (m, p) in &self.terms {
            for (n, q) in &rhs.terms {
                let (g, rad) = mul_radicands(*m, *n);
                out.add_term(rad, p * q * Rational::from_integer(BigInt::from(g)));
            }
        }
        out
    }
}

impl Mul for RadicalScalar {
    type Output = RadicalScalar;
    fn mul(self, rhs: RadicalScalar) -> RadicalScalar {
        &self * &rhs
    }
}

impl From<Rational> for RadicalScalar {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn sq(n: u64) -> RadicalScalar {
        RadicalScalar::sqrt_int(n).unwrap()
    }

    fn r(n: i64) -> RadicalScalar {
        RadicalScalar::from_int(n)
    }

    #[test]
    fn add_examples() {
        assert!((&sq(2) + &(-sq(2))).is_zero());
        let a = &r(1) + &sq(2);
        let b = &r(2) - &sq(2).scale(&int(3));
        assert_eq!(&a + &b, &r(3) - &sq(2).scale(&int(2)));
        let half6 = sq(6).scale(&rat(1, 2));
        assert_eq!(&half6 + &half6, sq(6));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&sq(2) * &sq(2), r(2));
        assert_eq!(&sq(6) * &sq(10), sq(15).scale(&int(2)));
        let a = &r(1) + &sq(2);
        let b = &r(1) - &sq(2);
        assert_eq!(&a * &b, r(-1));
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(sqrt_rational(&int(2)).unwrap(), RadicalScalar::term(int(1), 2));
        assert_eq!(sqrt_rational(&rat(9, 4)).unwrap(), RadicalScalar::from_rational(rat(3, 2)));
        assert_eq!(sqrt_rational(&int(8)).unwrap(), RadicalScalar::term(int(2), 2));
        assert_eq!(sqrt_rational(&rat(1, 2)).unwrap(), RadicalScalar::term(rat(1, 2), 2));
        assert!(matches!(
            sqrt_rational(&int(-1)),
            Err(RadicalError::NegativeSqrt(_))
        ));
    }

    #[test]
    fn sqrt_respects_factor_bound() {
        // 999983 is prime; with bound 100 the cofactor test 101² ≤ n triggers.
        let q = Rational::from_integer(BigInt::from(999_983u64 * 999_983u64 * 2));
        assert!(matches!(
            sqrt_rational_bounded(&q, 100),
            Err(RadicalError::FactorBoundExceeded { .. })
        ));
        assert_eq!(
            sqrt_rational(&q).unwrap(),
            RadicalScalar::term(int(999_983), 2)
        );
    }

    #[test]
    fn inversion() {
        assert_eq!(sq(2).invert_single_term().unwrap(), RadicalScalar::term(rat(1, 2), 2));
        assert_eq!(r(3).invert_single_term().unwrap(), RadicalScalar::from_rational(rat(1, 3)));
        assert!(matches!(
            (&r(1) + &sq(2)).invert_single_term(),
            Err(RadicalError::UnsupportedDivision(_))
        ));
        assert!(RadicalScalar::zero().invert_single_term().is_err());
    }

    #[test]
    fn rendering() {
        assert_eq!((-sq(2)).to_latex(), "-\\sqrt{2}");
        assert_eq!((&r(3) - &sq(2).scale(&int(2))).to_string(), "3 - 2*sqrt(2)");
        assert_eq!(sq(6).scale(&rat(1, 2)).to_latex(), "\\frac{1}{2}\\sqrt{6}");
        assert_eq!(RadicalScalar::zero().to_latex(), "0");
    }

    #[test]
    fn json_is_bit_exact() {
        let v = &r(3) - &sq(2).scale(&rat(1, 2));
        assert_eq!(
            serde_json::to_string(&v.to_json()).unwrap(),
            r#"[{"den":1,"num":3,"rad":1},{"den":2,"num":-1,"rad":2}]"#
        );
        let bad = serde_json::json!([{"num": 1, "den": 1, "rad": 8}]);
        assert!(RadicalScalar::from_json(&bad).is_err());
        let unsorted = serde_json::json!([{"num": 1, "den": 1, "rad": 2}, {"num": 1, "den": 1, "rad": 1}]);
        assert!(RadicalScalar::from_json(&unsorted).is_err());
    }

    #[test]
    fn squarefree_detection() {
        assert!(is_squarefree(1));
        assert!(is_squarefree(30));
        assert!(!is_squarefree(12));
        assert!(!is_squarefree(0));
    }
}
