//! Graded polynomial algebra in `x, z, θ, ψ` with formal weights `r̃, r`, and
//! differential operators acting on it.
//!
//! Monomials are kept in the canonical variable order `x < z < θ < ψ < r̃ < r`
//! with every reordering sign absorbed into the coefficient. Derivatives carry
//! the grade of their variable and obey the graded Leibniz rule
//! `∂ᵥ(uw) = ∂ᵥ(u)w + (−1)^(grade(v)·grade(u)) u∂ᵥ(w)`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::algebra::GradedAlgebra;
use crate::enveloping::EnvelopingPolynomial;
use crate::error::DiffError;
use crate::grading::Grading;
use crate::linalg::{solve_affine, AffineEquation, AffineSolution};
use crate::linear_form::{Coefficient, LinearForm};
use crate::presets::OspVersion;
use crate::rational::{format_rational, int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Z,
    Theta,
    Psi,
    Rt,
    R,
}

impl Var {
    pub const ALL: [Var; 6] = [Var::X, Var::Z, Var::Theta, Var::Psi, Var::Rt, Var::R];
    /// Variables that have a derivative.
    pub const SPATIAL: [Var; 4] = [Var::X, Var::Z, Var::Theta, Var::Psi];

    pub const fn index(self) -> usize {
        self as usize
    }

    pub const fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Z => "z",
            Var::Theta => "th",
            Var::Psi => "ps",
            Var::Rt => "rt",
            Var::R => "r",
        }
    }
}

/// Grades of the variables. The two osp(1|2) versions differ in the grade of
/// `z` and in whether `x` is used at all.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GradedSpace {
    grades: [Grading; 6],
    uses_x: bool,
}

impl GradedSpace {
    pub fn ten() -> Self {
        GradedSpace {
            grades: [
                Grading::ZERO,
                Grading::new(1, 1),
                Grading::new(0, 1),
                Grading::new(1, 0),
                Grading::new(1, 1),
                Grading::ZERO,
            ],
            uses_x: true,
        }
    }

    pub fn eight() -> Self {
        GradedSpace {
            grades: [
                Grading::ZERO,
                Grading::ZERO,
                Grading::new(0, 1),
                Grading::new(1, 0),
                Grading::new(1, 1),
                Grading::ZERO,
            ],
            uses_x: false,
        }
    }

    pub fn for_version(v: OspVersion) -> Self {
        match v {
            OspVersion::Ten => Self::ten(),
            OspVersion::Eight => Self::eight(),
        }
    }

    pub fn grade(&self, v: Var) -> Grading {
        self.grades[v.index()]
    }

    pub fn spatial_vars(&self) -> Vec<Var> {
        Var::SPATIAL
            .into_iter()
            .filter(|v| self.uses_x || *v != Var::X)
            .collect()
    }

    pub fn monomial_grade(&self, m: &Monomial) -> Grading {
        Var::ALL.iter().fold(Grading::ZERO, |g, &v| {
            if m.0[v.index()] % 2 == 1 {
                g + self.grade(v)
            } else {
                g
            }
        })
    }

    /// `a·b` as a sign and canonical monomial, or `None` if a nilpotent
    /// variable appears twice.
    pub fn mul_monomials(&self, a: &Monomial, b: &Monomial) -> Option<(i64, Monomial)> {
        let mut sign = 1;
        for j in 0..6 {
            if b.0[j].is_multiple_of(2) {
                continue;
            }
            for i in j + 1..6 {
                if a.0[i] % 2 == 1 && self.grades[i].dot(self.grades[j]) == 1 {
                    sign = -sign;
                }
            }
        }
        let mut m = [0u32; 6];
        for (k, slot) in m.iter_mut().enumerate() {
            *slot = a.0[k] + b.0[k];
            if *slot > 1 && self.grades[k].is_self_anticommuting() {
                return None;
            }
        }
        Some((sign, Monomial(m)))
    }

    /// All monomials in the spatial variables of total degree at most `max_degree`.
    pub fn test_monomials(&self, max_degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let xs = if self.uses_x { max_degree } else { 0 };
        for ex in 0..=xs {
            for ez in 0..=max_degree - ex {
                for et in 0..=1 {
                    for ep in 0..=1 {
                        if ex + ez + et + ep <= max_degree {
                            out.push(Monomial([ex, ez, et, ep, 0, 0]));
                        }
                    }
                }
            }
        }
        out
    }
}

/// Exponents of `x, z, θ, ψ, r̃, r`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub [u32; 6]);

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: Var) -> Self {
        let mut m = [0; 6];
        m[v.index()] = 1;
        Monomial(m)
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// True if only `r` and `r̃` occur.
    pub fn is_weight_only(&self) -> bool {
        Var::SPATIAL.iter().all(|v| self.exponent(*v) == 0)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = Var::ALL
            .iter()
            .filter(|v| self.exponent(**v) > 0)
            .map(|v| match self.exponent(*v) {
                1 => v.name().to_string(),
                e => format!("{}^{e}", v.name()),
            })
            .collect();
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

/// Coefficients that can also be multiplied, possibly failing.
pub trait CoeffRing: Coefficient {
    fn try_mul(&self, other: &Self) -> Result<Self, DiffError>;
    fn render(&self) -> String;
}

impl CoeffRing for Rational {
    fn try_mul(&self, other: &Self) -> Result<Self, DiffError> {
        Ok(self * other)
    }
    fn render(&self) -> String {
        format_rational(self)
    }
}

impl CoeffRing for LinearForm {
    fn try_mul(&self, other: &Self) -> Result<Self, DiffError> {
        LinearForm::try_mul(self, other)
    }
    fn render(&self) -> String {
        format!("({self})")
    }
}

fn add_into<C: Coefficient>(map: &mut BTreeMap<Monomial, C>, m: Monomial, c: &C, q: &Rational) {
    if c.is_zero() || q.is_zero() {
        return;
    }
    let slot = map.entry(m).or_insert_with(C::zero);
    slot.add_scaled(c, q);
    if slot.is_zero() {
        map.remove(&m);
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<C = Rational> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coefficient> Default for Polynomial<C> {
    fn default() -> Self {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }
}

impl<C: CoeffRing> Polynomial<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(Monomial::one(), C::from_rational(Rational::one()))
    }

    pub fn term(m: Monomial, c: C) -> Self {
        let mut p = Self::zero();
        add_into(&mut p.terms, m, &c, &Rational::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn add_scaled(&mut self, other: &Self, q: &Rational) {
        for (m, c) in &other.terms {
            add_into(&mut self.terms, *m, c, q);
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, q);
        out
    }

    pub fn mul(&self, space: &GradedSpace, other: &Self) -> Result<Self, DiffError> {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some((s, m)) = space.mul_monomials(a, b) {
                    add_into(&mut out.terms, m, &ca.try_mul(cb)?, &int(s));
                }
            }
        }
        Ok(out)
    }

    /// Product of variables in the given (written) order.
    pub fn product_of(space: &GradedSpace, vars: &[Var], c: C) -> Self {
        let mut p = Self::term(Monomial::one(), c);
        for v in vars {
            p = p
                .mul(space, &Self::term(Monomial::var(*v), C::from_rational(Rational::one())))
                .expect("one factor is constant");
        }
        p
    }

    pub fn derivative(&self, space: &GradedSpace, v: Var) -> Self {
        let i = v.index();
        let gv = space.grade(v);
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let passed = (0..i)
                .filter(|&k| m.0[k] % 2 == 1 && gv.dot(space.grades[k]) == 1)
                .count();
            let sign = if passed % 2 == 0 { 1 } else { -1 };
            let mut mm = *m;
            mm.0[i] -= 1;
            add_into(&mut out.terms, mm, c, &int(sign * e as i64));
        }
        out
    }

    /// Common grade of the monomials; `None` for zero.
    pub fn grade(&self, space: &GradedSpace) -> Result<Option<Grading>, DiffError> {
        let mut g = None;
        for m in self.terms.keys() {
            let h = space.monomial_grade(m);
            match g {
                None => g = Some(h),
                Some(k) if k != h => return Err(DiffError::NonHomogeneous(self.render())),
                _ => {}
            }
        }
        Ok(g)
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(m, c)| format!("{} {}", c.render(), m))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn map_coefficients<D: CoeffRing>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            add_into(&mut out.terms, *m, &f(c), &Rational::one());
        }
        out
    }
}

impl Polynomial<Rational> {
    /// `2 th r - 2 ps rt`
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let a = c.abs();
            if *m == Monomial::one() {
                out.push_str(&format_rational(&a));
            } else if a.is_one() {
                out.push_str(&m.to_string());
            } else {
                out.push_str(&format!("{} {}", format_rational(&a), m));
            }
        }
        out
    }
}

/// A sorted word of spatial derivatives; empty means multiplication.
pub type DerivWord = Vec<Var>;

/// `Σ coefficient·∂_word` with coefficients written to the left.
#[derive(Clone, Debug, PartialEq)]
pub struct Operator<C = Rational> {
    terms: BTreeMap<DerivWord, Polynomial<C>>,
}

impl<C: Coefficient> Default for Operator<C> {
    fn default() -> Self {
        Operator {
            terms: BTreeMap::new(),
        }
    }
}

impl<C: CoeffRing> Operator<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::multiplication(Polynomial::one())
    }

    pub fn multiplication(p: Polynomial<C>) -> Self {
        Self::term(p, None)
    }

    pub fn term(p: Polynomial<C>, d: Option<Var>) -> Self {
        let mut op = Self::zero();
        op.add_word(d.into_iter().collect(), &p, &Rational::one());
        op
    }

    fn add_word(&mut self, w: DerivWord, p: &Polynomial<C>, q: &Rational) {
        if p.is_zero() || q.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_default();
        slot.add_scaled(p, q);
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add_scaled(&mut self, other: &Self, q: &Rational) {
        for (w, p) in &other.terms {
            self.add_word(w.clone(), p, q);
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DerivWord, &Polynomial<C>)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, d: Option<Var>) -> Option<&Polynomial<C>> {
        let w: DerivWord = d.into_iter().collect();
        self.terms.get(&w)
    }

    pub fn order(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    /// Part of the operator of derivative order at least two.
    pub fn higher_order_part(&self) -> Self {
        Operator {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() > 1)
                .map(|(w, p)| (w.clone(), p.clone()))
                .collect(),
        }
    }

    pub fn grade(&self, space: &GradedSpace) -> Result<Option<Grading>, DiffError> {
        let mut g = None;
        for (w, p) in &self.terms {
            let Some(pg) = p.grade(space)? else { continue };
            let h = w.iter().fold(pg, |acc, v| acc + space.grade(*v));
            match g {
                None => g = Some(h),
                Some(k) if k != h => return Err(DiffError::NonHomogeneous(self.render())),
                _ => {}
            }
        }
        Ok(g)
    }

    /// `p ∘ self`
    pub fn left_mul(&self, space: &GradedSpace, p: &Polynomial<C>) -> Result<Self, DiffError> {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_word(w.clone(), &p.mul(space, c)?, &Rational::one());
        }
        Ok(out)
    }

    /// `∂ᵥ ∘ self`
    fn after_derivative(&self, space: &GradedSpace, v: Var) -> Self {
        let gv = space.grade(v);
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_word(w.clone(), &c.derivative(space, v), &Rational::one());
            let Some((s, w2)) = insert_derivative(space, v, w) else {
                continue;
            };
            for (m, q) in &c.terms {
                let sign = s * space.monomial_grade(m).sign(gv);
                out.add_word(w2.clone(), &Polynomial::term(*m, q.clone()), &int(sign));
            }
        }
        out
    }

    /// `self ∘ other`
    pub fn compose(&self, space: &GradedSpace, other: &Self) -> Result<Self, DiffError> {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let mut inner = other.clone();
            for v in w.iter().rev() {
                inner = inner.after_derivative(space, *v);
            }
            out.add_scaled(&inner.left_mul(space, c)?, &Rational::one());
        }
        Ok(out)
    }

    /// `a∘b − (−1)^(grade(a)·grade(b)) b∘a`, of any order.
    pub fn bracket_unchecked(&self, space: &GradedSpace, other: &Self) -> Result<Self, DiffError> {
        let (Some(ga), Some(gb)) = (self.grade(space)?, other.grade(space)?) else {
            return Ok(Self::zero());
        };
        let mut out = self.compose(space, other)?;
        out.add_scaled(&other.compose(space, self)?, &int(-ga.sign(gb)));
        Ok(out)
    }

    pub fn apply(&self, space: &GradedSpace, p: &Polynomial<C>) -> Result<Polynomial<C>, DiffError> {
        let mut out = Polynomial::zero();
        for (w, c) in &self.terms {
            let mut q = p.clone();
            for v in w.iter().rev() {
                q = q.derivative(space, *v);
            }
            out.add_scaled(&c.mul(space, &q)?, &Rational::one());
        }
        Ok(out)
    }

    pub fn map_coefficients<D: CoeffRing>(&self, f: impl Fn(&C) -> D + Copy) -> Operator<D> {
        let mut out = Operator::zero();
        for (w, p) in &self.terms {
            out.add_word(w.clone(), &p.map_coefficients(f), &Rational::one());
        }
        out
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (w, p) in &self.terms {
            let d: String = w.iter().map(|v| format!(" d_{}", v.name())).collect();
            for (m, c) in p.terms() {
                parts.push(format!("{} {}{}", c.render(), m, d));
            }
        }
        parts.join(" + ")
    }
}

impl Operator<Rational> {
    /// `2 th r - 2 ps rt + 2 x th d_x`
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (w, p) in &self.terms {
            for (m, c) in p.terms() {
                if out.is_empty() {
                    if c.is_negative() {
                        out.push('-');
                    }
                } else {
                    out.push_str(if c.is_negative() { " - " } else { " + " });
                }
                let a = c.abs();
                let mut parts = Vec::new();
                if !a.is_one() || (*m == Monomial::one() && w.is_empty()) {
                    parts.push(format_rational(&a));
                }
                if *m != Monomial::one() {
                    parts.push(m.to_string());
                }
                parts.extend(w.iter().map(|v| format!("d_{}", v.name())));
                out.push_str(&parts.join(" "));
            }
        }
        out
    }
}

/// Inserts `∂ᵥ` at the front of a sorted derivative word and moves it into
/// place, returning the reordering sign.
fn insert_derivative(space: &GradedSpace, v: Var, w: &[Var]) -> Option<(i64, DerivWord)> {
    if space.grade(v).is_self_anticommuting() && w.contains(&v) {
        return None;
    }
    let mut sign = 1;
    let pos = w.iter().take_while(|u| **u < v).count();
    for u in &w[..pos] {
        sign *= space.grade(*u).sign(space.grade(v));
    }
    let mut out = w.to_vec();
    out.insert(pos, v);
    Some((sign, out))
}

/// Graded bracket of first-order operators. Surviving second-order terms mean
/// the pair does not close.
pub fn operator_bracket(
    space: &GradedSpace,
    a: &Operator,
    b: &Operator,
) -> Result<Operator, DiffError> {
    let out = a.bracket_unchecked(space, b)?;
    if out.order() > 1 {
        return Err(DiffError::NonRealization {
            left: a.pretty(),
            right: b.pretty(),
            residual: out.higher_order_part().pretty(),
        });
    }
    Ok(out)
}

/// Generator name to operator.
#[derive(Clone, Debug, PartialEq)]
pub struct Realization<C = Rational> {
    pub space: GradedSpace,
    pub ops: BTreeMap<String, Operator<C>>,
}

impl<C: CoeffRing> Realization<C> {
    pub fn get(&self, name: &str) -> Result<&Operator<C>, DiffError> {
        self.ops
            .get(name)
            .ok_or_else(|| DiffError::MissingGenerator(name.to_string()))
    }

    fn ordered(&self, alg: &GradedAlgebra) -> Result<Vec<&Operator<C>>, DiffError> {
        (0..alg.dim()).map(|i| self.get(alg.name(i))).collect()
    }

    /// `Σ cₖ·op(Xₖ)` for a structure-constant combination.
    fn combination(&self, ops: &[&Operator<C>], alg: &GradedAlgebra, i: usize, j: usize) -> Operator<C> {
        let mut out = Operator::zero();
        for (k, q) in alg.bracket_generators(i, j).iter() {
            out.add_scaled(ops[k], q);
        }
        out
    }
}

impl Realization<Rational> {
    pub fn lift(&self) -> Realization<LinearForm> {
        Realization {
            space: self.space,
            ops: self
                .ops
                .iter()
                .map(|(n, op)| (n.clone(), op.map_coefficients(|q| LinearForm::constant(q.clone()))))
                .collect(),
        }
    }

    pub fn to_json(&self) -> Value {
        Value::Object(
            self.ops
                .iter()
                .map(|(n, op)| (n.clone(), Value::String(op.pretty())))
                .collect(),
        )
    }
}

type TermSpec = (i64, &'static [Var], Option<Var>);

fn from_spec(space: GradedSpace, spec: &[(&str, &[TermSpec])]) -> Realization {
    let ops = spec
        .iter()
        .map(|(name, terms)| {
            let mut op = Operator::zero();
            for (c, vars, d) in terms.iter() {
                let p = Polynomial::product_of(&space, vars, int(*c));
                op.add_scaled(&Operator::term(p, *d), &Rational::one());
            }
            (name.to_string(), op)
        })
        .collect();
    Realization { space, ops }
}

use Var::{Psi as PS, Rt as RT, Theta as TH, R, X, Z};

/// The ten-generator realization as typeset. The `2zx∂x` term of `L̃+` is
/// preceded by a stray `=`; this reads it as `−`, which is what the
/// verifier then flags. Use [`repair_realization`] to recover the sign.
pub fn printed_ten() -> Realization {
    ten_with_lt_plus_zx_sign(-2)
}

pub(crate) fn ten_with_lt_plus_zx_sign(c: i64) -> Realization {
    let lt_plus: Vec<TermSpec> = vec![
        (1, &[Z, R], None),
        (1, &[X, RT], None),
        (-2, &[TH, PS, R], None),
        (-4, &[TH, PS, X], Some(X)),
        (c, &[Z, X], Some(X)),
        (1, &[Z, TH], Some(TH)),
        (1, &[PS, X], Some(TH)),
        (1, &[Z, PS], Some(PS)),
        (1, &[TH, X], Some(PS)),
        (1, &[Z, Z], Some(Z)),
        (1, &[X, X], Some(Z)),
    ];
    from_spec(
        GradedSpace::ten(),
        &[
            ("L-", &[(1, &[], Some(X))]),
            ("Lt-", &[(1, &[], Some(Z))]),
            ("a-", &[(1, &[], Some(TH)), (2, &[TH], Some(X))]),
            ("at-", &[(1, &[], Some(PS)), (-2, &[PS], Some(X)), (4, &[TH], Some(Z))]),
            (
                "R",
                &[
                    (1, &[R], None),
                    (2, &[X], Some(X)),
                    (2, &[Z], Some(Z)),
                    (1, &[TH], Some(TH)),
                    (1, &[PS], Some(PS)),
                ],
            ),
            (
                "Rt",
                &[
                    (1, &[RT], None),
                    (2, &[Z], Some(X)),
                    (2, &[X], Some(Z)),
                    (1, &[TH], Some(PS)),
                    (1, &[PS], Some(TH)),
                    (-4, &[PS, TH], Some(X)),
                ],
            ),
            (
                "a+",
                &[
                    (2, &[TH, R], None),
                    (-2, &[PS, RT], None),
                    (2, &[TH, X], Some(X)),
                    (2, &[Z, PS], Some(X)),
                    (2, &[TH, PS], Some(PS)),
                    (-1, &[Z], Some(PS)),
                    (1, &[X], Some(TH)),
                    (-4, &[Z, TH], Some(Z)),
                ],
            ),
            (
                "at+",
                &[
                    (2, &[PS, R], None),
                    (-2, &[TH, RT], None),
                    (2, &[Z, TH], Some(X)),
                    (2, &[PS, X], Some(X)),
                    (1, &[Z], Some(TH)),
                    (-2, &[TH, PS], Some(TH)),
                    (-1, &[X], Some(PS)),
                    (-4, &[TH, X], Some(Z)),
                ],
            ),
            (
                "L+",
                &[
                    (1, &[X, R], None),
                    (1, &[Z, RT], None),
                    (-2, &[TH, PS, RT], None),
                    (1, &[X, X], Some(X)),
                    (1, &[Z, Z], Some(X)),
                    (-4, &[Z, TH, PS], Some(X)),
                    (1, &[X, PS], Some(PS)),
                    (1, &[X, TH], Some(TH)),
                    (2, &[Z, X], Some(Z)),
                    (1, &[Z, TH], Some(PS)),
                    (1, &[Z, PS], Some(TH)),
                ],
            ),
            ("Lt+", &lt_plus),
        ],
    )
}

/// The eight-generator realization as typeset.
pub fn printed_eight() -> Realization {
    from_spec(
        GradedSpace::eight(),
        &[
            ("a-", &[(1, &[], Some(TH)), (2, &[TH], Some(Z))]),
            (
                "a+",
                &[
                    (1, &[Z], Some(TH)),
                    (-2, &[PS, RT], None),
                    (2, &[TH, R], None),
                    (2, &[TH, Z], Some(Z)),
                    (2, &[TH, PS], Some(PS)),
                ],
            ),
            (
                "R",
                &[(1, &[R], None), (1, &[TH], Some(TH)), (1, &[PS], Some(PS)), (2, &[Z], Some(Z))],
            ),
            ("at-", &[(1, &[], Some(PS)), (-2, &[PS], Some(Z))]),
            (
                "at+",
                &[
                    (-1, &[Z], Some(PS)),
                    (2, &[TH, RT], None),
                    (2, &[PS, R], None),
                    (2, &[PS, Z], Some(Z)),
                    (2, &[TH, PS], Some(TH)),
                ],
            ),
            ("Rt", &[(1, &[RT], None), (1, &[PS], Some(TH)), (-1, &[TH], Some(PS))]),
            ("L-", &[(1, &[], Some(Z))]),
            (
                "L+",
                &[
                    (1, &[Z, R], None),
                    (1, &[Z, Z], Some(Z)),
                    (1, &[Z, PS], Some(PS)),
                    (1, &[Z, TH], Some(TH)),
                    (-2, &[TH, PS, RT], None),
                ],
            ),
        ],
    )
}

pub fn printed_realization(v: OspVersion) -> Realization {
    match v {
        OspVersion::Ten => printed_ten(),
        OspVersion::Eight => printed_eight(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCheck {
    pub left: String,
    pub right: String,
    /// Canonical operator comparison.
    pub canonical_ok: bool,
    /// Comparison by application to every test monomial.
    pub applied_ok: bool,
    /// `⟦X,Y⟧ − Σ cₖXₖ`, or the surviving second-order part.
    pub residual: String,
}

impl PairCheck {
    pub fn passed(&self) -> bool {
        self.canonical_ok && self.applied_ok
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscrepancyReport {
    pub max_degree: u32,
    pub test_monomials: usize,
    pub pairs: Vec<PairCheck>,
}

impl DiscrepancyReport {
    pub fn passed(&self) -> bool {
        self.pairs.iter().all(PairCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PairCheck> {
        self.pairs.iter().filter(|p| !p.passed())
    }

    /// The two comparison routes agree on every pair.
    pub fn routes_agree(&self) -> bool {
        self.pairs.iter().all(|p| p.canonical_ok == p.applied_ok)
    }

    /// Generators that occur in at least one failing pair, counted.
    pub fn flagged_generators(&self) -> BTreeMap<String, usize> {
        let mut out = BTreeMap::new();
        for p in self.failures() {
            *out.entry(p.left.clone()).or_insert(0) += 1;
            if p.right != p.left {
                *out.entry(p.right.clone()).or_insert(0) += 1;
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "max_degree": self.max_degree,
            "test_monomials": self.test_monomials,
            "pairs_checked": self.pairs.len(),
            "pairs_failed": self.failures().count(),
            "routes_agree": self.routes_agree(),
            "pairs": self.pairs.iter().map(|p| json!({
                "left": p.left,
                "right": p.right,
                "status": if p.passed() { "pass" } else { "fail" },
                "residual": p.residual,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Checks every unordered generator pair against the structure constants.
pub fn verify_realization(
    alg: &GradedAlgebra,
    real: &Realization,
    max_degree: u32,
) -> Result<DiscrepancyReport, DiffError> {
    if max_degree < 2 {
        return Err(DiffError::DegreeTooSmall(max_degree));
    }
    let space = &real.space;
    let ops = real.ordered(alg)?;
    let tests: Vec<Polynomial> = space
        .test_monomials(max_degree)
        .into_iter()
        .map(|m| Polynomial::term(m, Rational::one()))
        .collect();
    let mut pairs = Vec::new();
    for i in 0..alg.dim() {
        for j in i..alg.dim() {
            let expected = real.combination(&ops, alg, i, j);
            let raw = ops[i].bracket_unchecked(space, ops[j])?;
            let diff = raw.sub(&expected);
            let residual = if raw.order() > 1 {
                format!("second order: {}", raw.higher_order_part().pretty())
            } else {
                diff.pretty()
            };
            let s = alg.grade(i).sign(alg.grade(j));
            let mut applied_ok = true;
            for p in &tests {
                let xy = ops[i].apply(space, &ops[j].apply(space, p)?)?;
                let yx = ops[j].apply(space, &ops[i].apply(space, p)?)?;
                let mut lhs = xy;
                lhs.add_scaled(&yx, &int(-s));
                lhs.add_scaled(&expected.apply(space, p)?, &-Rational::one());
                if !lhs.is_zero() {
                    applied_ok = false;
                    break;
                }
            }
            pairs.push(PairCheck {
                left: alg.name(i).to_string(),
                right: alg.name(j).to_string(),
                canonical_ok: diff.is_zero(),
                applied_ok,
                residual,
            });
        }
    }
    Ok(DiscrepancyReport {
        max_degree,
        test_monomials: tests.len(),
        pairs,
    })
}

/// Replaces the coefficient of every term of `gen` with a fresh unknown,
/// keeping the term structure.
pub fn template_free_terms(real: &Realization, gen: &str) -> Result<(Realization<LinearForm>, usize), DiffError> {
    let mut out = real.lift();
    let op = real.get(gen)?;
    let mut fresh = Operator::zero();
    let mut k = 0;
    for (w, p) in op.terms() {
        for (m, _) in p.terms() {
            let t = Polynomial::term(*m, LinearForm::unknown(k));
            fresh.add_word(w.clone(), &t, &Rational::one());
            k += 1;
        }
    }
    out.ops.insert(gen.to_string(), fresh);
    Ok((out, k))
}

/// Replaces `gen` with the most general operator of grade `grade` whose
/// coefficients have degree at most `max_degree` in the spatial variables,
/// optionally times one of `r`, `r̃`.
pub fn template_general(
    real: &Realization,
    gen: &str,
    grade: Grading,
    max_degree: u32,
) -> Result<(Realization<LinearForm>, usize), DiffError> {
    real.get(gen)?;
    let space = real.space;
    let mut out = real.lift();
    let mut fresh = Operator::zero();
    let mut k = 0;
    let mut actions: Vec<Option<Var>> = vec![None];
    actions.extend(space.spatial_vars().into_iter().map(Some));
    for d in actions {
        let dg = d.map(|v| space.grade(v)).unwrap_or(Grading::ZERO);
        for base in space.test_monomials(max_degree) {
            for weight in [None, Some(Var::R), Some(Var::Rt)] {
                let mut m = base;
                if let Some(w) = weight {
                    m.0[w.index()] = 1;
                }
                if space.monomial_grade(&m) + dg != grade {
                    continue;
                }
                let t = Polynomial::term(m, LinearForm::unknown(k));
                fresh.add_word(d.into_iter().collect(), &t, &Rational::one());
                k += 1;
            }
        }
    }
    out.ops.insert(gen.to_string(), fresh);
    Ok((out, k))
}

#[derive(Clone, Debug, PartialEq)]
pub enum RepairOutcome {
    Unique {
        realization: Realization,
        values: Vec<Rational>,
    },
    /// The bracket relations leave `dimension` free directions; `particular`
    /// sets them all to zero.
    Underdetermined {
        dimension: usize,
        particular: Realization,
    },
}

/// Solves for the unknowns of `template` so that all brackets match the
/// structure constants.
///
/// Pairs in which both operators contain unknowns are quadratic; they are
/// left out of the linear solve and checked afterwards.
pub fn repair_realization(
    alg: &GradedAlgebra,
    template: &Realization<LinearForm>,
    unknowns: usize,
) -> Result<RepairOutcome, DiffError> {
    let space = &template.space;
    let ops = template.ordered(alg)?;
    let has_unknowns: Vec<bool> = ops
        .iter()
        .map(|op| op.terms().any(|(_, p)| p.terms().any(|(_, c)| !c.is_constant())))
        .collect();
    let mut equations = Vec::new();
    let mut deferred = Vec::new();
    for i in 0..alg.dim() {
        for j in i..alg.dim() {
            if has_unknowns[i] && has_unknowns[j] {
                deferred.push((i, j));
                continue;
            }
            let diff = ops[i]
                .bracket_unchecked(space, ops[j])?
                .sub(&template.combination(&ops, alg, i, j));
            for (_, p) in diff.terms() {
                for (_, form) in p.terms() {
                    equations.push(AffineEquation {
                        coeffs: form.coeffs().clone(),
                        constant: form.constant_part().clone(),
                    });
                }
            }
        }
    }
    let (values, dimension) = match solve_affine(&equations, unknowns) {
        AffineSolution::Inconsistent => {
            return Err(DiffError::NoRealization(format!(
                "{} linear conditions are inconsistent",
                equations.len()
            )))
        }
        AffineSolution::Solved {
            particular,
            homogeneous,
        } => (particular, homogeneous.len()),
    };
    let realization = substitute(template, &values);
    if dimension == 0 {
        let report = verify_pairs(alg, &realization, &deferred)?;
        if let Some((l, r)) = report {
            return Err(DiffError::NoRealization(format!(
                "the linear solution fails the quadratic pair ({l}, {r})"
            )));
        }
        Ok(RepairOutcome::Unique {
            realization,
            values,
        })
    } else {
        Ok(RepairOutcome::Underdetermined {
            dimension,
            particular: realization,
        })
    }
}

fn substitute(template: &Realization<LinearForm>, values: &[Rational]) -> Realization {
    Realization {
        space: template.space,
        ops: template
            .ops
            .iter()
            .map(|(n, op)| {
                let concrete = op.map_coefficients(|f| f.evaluate(values).expect("value for every unknown"));
                (n.clone(), concrete)
            })
            .collect(),
    }
}

fn verify_pairs(
    alg: &GradedAlgebra,
    real: &Realization,
    pairs: &[(usize, usize)],
) -> Result<Option<(String, String)>, DiffError> {
    let ops = real.ordered(alg)?;
    for &(i, j) in pairs {
        let diff = ops[i]
            .bracket_unchecked(&real.space, ops[j])?
            .sub(&real.combination(&ops, alg, i, j));
        if !diff.is_zero() {
            return Ok(Some((alg.name(i).to_string(), alg.name(j).to_string())));
        }
    }
    Ok(None)
}

/// Evaluates an enveloping-algebra element on the realization.
pub fn substitute_element(
    alg: &GradedAlgebra,
    real: &Realization,
    p: &EnvelopingPolynomial,
) -> Result<Operator, DiffError> {
    let ops = real.ordered(alg)?;
    let mut out = Operator::zero();
    for (m, c) in p.terms() {
        let mut acc = Operator::identity();
        for &k in m.factors() {
            acc = acc.compose(&real.space, ops[k])?;
        }
        out.add_scaled(&acc, c);
    }
    Ok(out)
}

/// Substitutes a Casimir element and requires the result to be multiplication
/// by a polynomial in `r, r̃` alone.
pub fn casimir_value(
    alg: &GradedAlgebra,
    real: &Realization,
    p: &EnvelopingPolynomial,
) -> Result<Polynomial, DiffError> {
    let op = substitute_element(alg, real, p)?;
    let scalar = op.order() == 0
        && op
            .coefficient(None)
            .is_none_or(|c| c.terms().all(|(m, _)| m.is_weight_only()));
    if !scalar {
        return Err(DiffError::NotScalar(op.pretty()));
    }
    Ok(op.coefficient(None).cloned().unwrap_or_default())
}

/// Image of the constant polynomial `1` under each generator.
pub fn vacuum_images(alg: &GradedAlgebra, real: &Realization) -> Result<Vec<(String, Polynomial)>, DiffError> {
    let ops = real.ordered(alg)?;
    let one = Polynomial::one();
    (0..alg.dim())
        .map(|i| Ok((alg.name(i).to_string(), ops[i].apply(&real.space, &one)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets::preset_ten;

    fn var(space: &GradedSpace, v: Var) -> Polynomial {
        Polynomial::product_of(space, &[v], int(1))
    }

    #[test]
    fn nilpotent_variables_square_to_zero() {
        let s = GradedSpace::ten();
        let th = var(&s, Var::Theta);
        assert!(th.mul(&s, &th).unwrap().is_zero());
        let z = var(&s, Var::Z);
        assert!(!z.mul(&s, &z).unwrap().is_zero());
    }

    #[test]
    fn apply_examples() {
        let s = GradedSpace::ten();
        let real = printed_ten();
        let x2 = Polynomial::product_of(&s, &[X, X], int(1));
        assert_eq!(real.get("L-").unwrap().apply(&s, &x2).unwrap().pretty(), "2 x");
        let one = Polynomial::one();
        assert_eq!(real.get("R").unwrap().apply(&s, &one).unwrap().pretty(), "r");
        let thx = Polynomial::product_of(&s, &[TH, X], int(1));
        assert_eq!(real.get("a-").unwrap().apply(&s, &thx).unwrap().pretty(), "x");
    }

    #[test]
    fn bracket_examples() {
        let s = GradedSpace::ten();
        let real = printed_ten();
        let am = real.get("a-").unwrap();
        let lm = real.get("L-").unwrap();
        assert_eq!(operator_bracket(&s, am, am).unwrap(), {
            let mut four = Operator::zero();
            four.add_scaled(lm, &int(4));
            four
        });
        let r = real.get("R").unwrap();
        assert_eq!(operator_bracket(&s, r, lm).unwrap().pretty(), "-2 d_x");
        assert!(operator_bracket(&s, lm, lm).unwrap().is_zero());
    }

    #[test]
    fn second_order_residue_is_an_error() {
        let s = GradedSpace::ten();
        let dx = Operator::<Rational>::term(Polynomial::one(), Some(X));
        let x = var(&s, X);
        let xdx = Operator::term(x.clone(), Some(X));
        // x∂x with x²∂x closes; ∂x with x²∂x∂x leaves a second-order term
        let x2dx = Operator::term(x.mul(&s, &x).unwrap(), Some(X));
        assert_eq!(operator_bracket(&s, &xdx, &x2dx).unwrap().pretty(), "x^2 d_x");
        let second = dx.compose(&s, &dx).unwrap().left_mul(&s, &x).unwrap();
        assert_eq!(second.pretty(), "x d_x d_x");
        assert_eq!(second.order(), 2);
        assert!(matches!(
            operator_bracket(&s, &dx, &x2dx.compose(&s, &dx).unwrap()),
            Err(DiffError::NonRealization { .. })
        ));
    }

    #[test]
    fn small_degree_is_rejected() {
        assert_eq!(
            verify_realization(&preset_ten(), &printed_ten(), 1),
            Err(DiffError::DegreeTooSmall(1))
        );
    }

    #[test]
    fn pretty_operator() {
        let real = printed_eight();
        assert_eq!(real.get("a-").unwrap().pretty(), "2 th d_z + d_th");
        assert_eq!(real.get("Rt").unwrap().pretty(), "rt + ps d_th - th d_ps");
    }
}
