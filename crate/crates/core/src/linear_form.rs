//! Coefficients that are affine in a list of rational unknowns.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use num_traits::{One, Signed, Zero};

use crate::error::DiffError;
use crate::rational::{format_rational, Rational};

/// Greek labels used when rendering the first unknowns; later ones print as `u9`, `u10`, ...
pub const UNKNOWN_NAMES: [&str; 9] = ["α", "β", "γ", "δ", "λ", "ρ", "σ", "μ", "ν"];

pub fn unknown_name(k: usize) -> String {
    UNKNOWN_NAMES
        .get(k)
        .map(|s| s.to_string())
        .unwrap_or_else(|| format!("u{k}"))
}

/// Anything the normal-ordering and operator engines can use as a coefficient.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + Zero {
    fn from_rational(q: Rational) -> Self;
    /// `self += q·other`
    fn add_scaled(&mut self, other: &Self, q: &Rational);
}

impl Coefficient for Rational {
    fn from_rational(q: Rational) -> Self {
        q
    }
    fn add_scaled(&mut self, other: &Self, q: &Rational) {
        *self += other * q;
    }
}

/// `constant + Σ coeffs[k]·u_k`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm {
    constant: Rational,
    coeffs: BTreeMap<usize, Rational>,
}

impl LinearForm {
    pub fn constant(q: Rational) -> Self {
        LinearForm {
            constant: q,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn unknown(k: usize) -> Self {
        Self::scaled_unknown(k, Rational::one())
    }

    pub fn scaled_unknown(k: usize, q: Rational) -> Self {
        let mut f = LinearForm::default();
        if !q.is_zero() {
            f.coeffs.insert(k, q);
        }
        f
    }

    pub fn constant_part(&self) -> &Rational {
        &self.constant
    }

    pub fn coeffs(&self) -> &BTreeMap<usize, Rational> {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn as_constant(&self) -> Option<&Rational> {
        self.is_constant().then_some(&self.constant)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let mut out = LinearForm::default();
        out.add_scaled(self, q);
        out
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    /// Product of two forms; fails if both depend on unknowns.
    pub fn try_mul(&self, other: &Self) -> Result<Self, DiffError> {
        match (self.as_constant(), other.as_constant()) {
            (Some(c), _) => Ok(other.scale(c)),
            (_, Some(c)) => Ok(self.scale(c)),
            _ => Err(DiffError::Nonlinear),
        }
    }

    /// Substitutes values for every unknown that appears.
    pub fn evaluate(&self, values: &[Rational]) -> Option<Rational> {
        let mut acc = self.constant.clone();
        for (k, q) in &self.coeffs {
            acc += q * values.get(*k)?;
        }
        Some(acc)
    }

    pub fn max_unknown(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }
}

impl Zero for LinearForm {
    fn zero() -> Self {
        LinearForm::default()
    }

    fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.coeffs.is_empty()
    }
}

impl Add for LinearForm {
    type Output = LinearForm;
    fn add(mut self, rhs: LinearForm) -> LinearForm {
        self.add_scaled(&rhs, &Rational::one());
        self
    }
}

impl Coefficient for LinearForm {
    fn from_rational(q: Rational) -> Self {
        LinearForm::constant(q)
    }

    fn add_scaled(&mut self, other: &Self, q: &Rational) {
        if q.is_zero() {
            return;
        }
        self.constant += &other.constant * q;
        for (k, c) in &other.coeffs {
            let slot = self.coeffs.entry(*k).or_insert_with(Rational::zero);
            *slot += c * q;
            if slot.is_zero() {
                self.coeffs.remove(k);
            }
        }
    }
}

impl From<Rational> for LinearForm {
    fn from(q: Rational) -> Self {
        LinearForm::constant(q)
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<(bool, String)> = Vec::new();
        if !self.constant.is_zero() || self.coeffs.is_empty() {
            parts.push((self.constant.is_negative(), format_rational(&self.constant.abs())));
        }
        for (k, q) in &self.coeffs {
            let name = unknown_name(*k);
            let body = if q.abs().is_one() {
                name
            } else {
                format!("{}*{}", format_rational(&q.abs()), name)
            };
            parts.push((q.is_negative(), body));
        }
        for (i, (neg, body)) in parts.iter().enumerate() {
            match (i, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn arithmetic_and_rendering() {
        let f = LinearForm::constant(int(1)).plus(&LinearForm::scaled_unknown(0, rat(-1, 2)));
        assert_eq!(f.to_string(), "1 - 1/2*α");
        let g = f.scale(&int(2));
        assert_eq!(g.to_string(), "2 - α");
        assert_eq!(g.evaluate(&[int(2)]), Some(int(0)));
        assert!(f.plus(&f.neg()).is_zero());
        assert_eq!(LinearForm::unknown(12).to_string(), "u12");
    }

    #[test]
    fn product_needs_a_constant_side() {
        let u = LinearForm::unknown(0);
        let c = LinearForm::constant(int(3));
        assert_eq!(u.try_mul(&c).unwrap(), LinearForm::scaled_unknown(0, int(3)));
        assert_eq!(u.try_mul(&u), Err(DiffError::Nonlinear));
    }
}
