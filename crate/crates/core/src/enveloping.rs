//! Normal ordering in the universal enveloping algebra and quadratic Casimir
//! solving.
//!
//! Words are rewritten with `XY → (−1)^(a·b) YX + ⟦X,Y⟧` for out-of-order
//! neighbours and `XX → ½⟦X,X⟧` for self-anticommuting `X` until every word is
//! a PBW monomial in the algebra's generator order.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::algebra::GradedAlgebra;
use crate::error::EnvelopingError;
use crate::grading::Grading;
use crate::linalg::IntegerEchelon;
use crate::linear_form::{Coefficient, LinearForm};
use crate::rational::{format_rational, int, rat, Rational};

/// A PBW monomial stored as its non-decreasing list of generator indices.
///
/// Ordered by degree first, then lexicographically.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PbwMonomial(Vec<usize>);

impl Ord for PbwMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for PbwMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PbwMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn generator(i: usize) -> Self {
        PbwMonomial(vec![i])
    }

    /// Accepts a word only if it is already in PBW form for `alg`.
    pub fn from_word(alg: &GradedAlgebra, word: &[usize]) -> Option<Self> {
        first_disorder(alg, word).is_none().then(|| PbwMonomial(word.to_vec()))
    }

    pub fn factors(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn grade(&self, alg: &GradedAlgebra) -> Grading {
        self.0
            .iter()
            .fold(Grading::ZERO, |g, &i| g + alg.grade(i))
    }

    /// `(generator, exponent)` pairs in increasing generator order.
    pub fn exponents(&self) -> Vec<(usize, u32)> {
        let mut out: Vec<(usize, u32)> = Vec::new();
        for &i in &self.0 {
            match out.last_mut() {
                Some((j, e)) if *j == i => *e += 1,
                _ => out.push((i, 1)),
            }
        }
        out
    }

    /// `"L+ L-"`, `"R^2"`, `"1"`.
    pub fn render(&self, alg: &GradedAlgebra) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        self.exponents()
            .into_iter()
            .map(|(i, e)| {
                if e == 1 {
                    alg.name(i).to_string()
                } else {
                    format!("{}^{e}", alg.name(i))
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// First position `i` where `word[i], word[i+1]` must be rewritten.
fn first_disorder(alg: &GradedAlgebra, word: &[usize]) -> Option<usize> {
    disorders(alg, word).next()
}

fn disorders<'a>(alg: &'a GradedAlgebra, word: &'a [usize]) -> impl Iterator<Item = usize> + 'a {
    word.windows(2).enumerate().filter_map(move |(i, w)| {
        let bad = w[0] > w[1] || (w[0] == w[1] && alg.grade(w[0]).is_self_anticommuting());
        bad.then_some(i)
    })
}

/// Words produced by one rewrite of `word` at position `i`, with their weights.
fn rewrite(alg: &GradedAlgebra, word: &[usize], i: usize) -> Vec<(Vec<usize>, Rational)> {
    let (x, y) = (word[i], word[i + 1]);
    let splice = |mid: &[usize]| {
        let mut w = Vec::with_capacity(word.len());
        w.extend_from_slice(&word[..i]);
        w.extend_from_slice(mid);
        w.extend_from_slice(&word[i + 2..]);
        w
    };
    let mut out = Vec::new();
    if x == y {
        let half = rat(1, 2);
        for (k, q) in alg.bracket_generators(x, x).iter() {
            out.push((splice(&[k]), q * &half));
        }
    } else {
        let s = alg.grade(x).sign(alg.grade(y));
        out.push((splice(&[y, x]), int(s)));
        for (k, q) in alg.bracket_generators(x, y).iter() {
            out.push((splice(&[k]), q.clone()));
        }
    }
    out
}

/// Linear combination of generator words.
#[derive(Clone, Debug, PartialEq)]
pub struct WordPolynomial<C = Rational> {
    terms: BTreeMap<Vec<usize>, C>,
}

impl<C: Coefficient> Default for WordPolynomial<C> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<C: Coefficient> WordPolynomial<C> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn word(word: Vec<usize>, c: C) -> Self {
        let mut p = Self::new();
        p.add_term(word, c);
        p
    }

    pub fn add_term(&mut self, word: Vec<usize>, c: C) {
        add_into(&mut self.terms, word, &c, &Rational::one());
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &C)> {
        self.terms.iter().map(|(w, c)| (w.as_slice(), c))
    }

    pub fn max_length(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }
}

impl WordPolynomial<Rational> {
    /// Builds a word polynomial from generator names, e.g. `(2, ["L-", "L+"])`.
    pub fn from_named(
        alg: &GradedAlgebra,
        terms: &[(Rational, &[&str])],
    ) -> Result<Self, EnvelopingError> {
        let mut p = Self::new();
        for (c, names) in terms {
            let word = names
                .iter()
                .map(|n| {
                    alg.index_of(n)
                        .map_err(|_| EnvelopingError::UnknownGenerator(n.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            p.add_term(word, c.clone());
        }
        Ok(p)
    }
}

fn add_into<K: Ord, C: Coefficient>(map: &mut BTreeMap<K, C>, key: K, c: &C, q: &Rational) {
    if c.is_zero() || q.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Occupied(mut e) => {
            e.get_mut().add_scaled(c, q);
            if e.get().is_zero() {
                e.remove();
            }
        }
        std::collections::btree_map::Entry::Vacant(e) => {
            let mut v = C::zero();
            v.add_scaled(c, q);
            e.insert(v);
        }
    }
}

/// Element of the enveloping algebra in PBW normal form.
#[derive(Clone, Debug, PartialEq)]
pub struct EnvelopingPolynomial<C = Rational> {
    terms: BTreeMap<PbwMonomial, C>,
}

impl<C: Coefficient> Default for EnvelopingPolynomial<C> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<C: Coefficient> EnvelopingPolynomial<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(PbwMonomial::one(), c)
    }

    pub fn monomial(m: PbwMonomial, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: C) {
        add_into(&mut self.terms, m, &c, &Rational::one());
    }

    pub fn add_scaled(&mut self, other: &Self, q: &Rational) {
        for (m, c) in &other.terms {
            add_into(&mut self.terms, m.clone(), c, q);
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, q);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> Option<&C> {
        self.terms.get(m)
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(PbwMonomial::degree).max().unwrap_or(0)
    }

    /// Common grade of all monomials; `None` for the zero polynomial.
    pub fn grade(&self, alg: &GradedAlgebra) -> Result<Option<Grading>, EnvelopingError> {
        let mut grade = None;
        for m in self.terms.keys() {
            let g = m.grade(alg);
            match grade {
                None => grade = Some(g),
                Some(h) if h != g => {
                    return Err(EnvelopingError::NonHomogeneous(h.to_string(), g.to_string()))
                }
                _ => {}
            }
        }
        Ok(grade)
    }

    pub fn to_words(&self) -> WordPolynomial<C> {
        WordPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.0.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn render_with(&self, alg: &GradedAlgebra, coeff: impl Fn(&C) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(m, c)| format!("({})*{}", coeff(c), m.render(alg)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl EnvelopingPolynomial<Rational> {
    /// `R - 1/2 R^2 + 2 L+ L-`
    pub fn render(&self, alg: &GradedAlgebra) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (k, c.is_negative()) {
                (0, true) => out.push('-'),
                (0, false) => {}
                _ => out.push_str(&format!(" {sign} ")),
            }
            let a = c.abs();
            if m.is_one() {
                out.push_str(&format_rational(&a));
            } else if a.is_one() {
                out.push_str(&m.render(alg));
            } else {
                out.push_str(&format!("{} {}", format_rational(&a), m.render(alg)));
            }
        }
        out
    }

    pub fn to_json(&self, alg: &GradedAlgebra) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| json!({"monomial": m.render(alg), "coeff": format_rational(c)}))
                .collect(),
        )
    }

    pub fn lift<C: Coefficient>(&self) -> EnvelopingPolynomial<C> {
        EnvelopingPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), C::from_rational(c.clone())))
                .collect(),
        }
    }
}

impl EnvelopingPolynomial<LinearForm> {
    /// Substitutes values for the unknowns.
    pub fn evaluate(&self, values: &[Rational]) -> Option<EnvelopingPolynomial<Rational>> {
        let mut out = EnvelopingPolynomial::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.evaluate(values)?);
        }
        Some(out)
    }
}

/// Memoizing leftmost-first normal orderer.
pub struct NormalOrderer<'a> {
    alg: &'a GradedAlgebra,
    memo: HashMap<Vec<usize>, BTreeMap<PbwMonomial, Rational>>,
}

impl<'a> NormalOrderer<'a> {
    pub fn new(alg: &'a GradedAlgebra) -> Self {
        Self {
            alg,
            memo: HashMap::new(),
        }
    }

    pub fn algebra(&self) -> &'a GradedAlgebra {
        self.alg
    }

    fn word(&mut self, w: &[usize]) -> BTreeMap<PbwMonomial, Rational> {
        if let Some(hit) = self.memo.get(w) {
            return hit.clone();
        }
        let out = match first_disorder(self.alg, w) {
            None => BTreeMap::from([(PbwMonomial(w.to_vec()), Rational::one())]),
            Some(i) => {
                let mut acc = BTreeMap::new();
                for (next, q) in rewrite(self.alg, w, i) {
                    for (m, c) in self.word(&next) {
                        add_into(&mut acc, m, &c, &q);
                    }
                }
                acc
            }
        };
        self.memo.insert(w.to_vec(), out.clone());
        out
    }

    pub fn order<C: Coefficient>(&mut self, p: &WordPolynomial<C>) -> EnvelopingPolynomial<C> {
        let mut out = EnvelopingPolynomial::zero();
        for (w, c) in &p.terms {
            for (m, q) in self.word(w) {
                add_into(&mut out.terms, m, c, &q);
            }
        }
        out
    }

    /// `p·q` in normal form.
    pub fn product<C: Coefficient>(
        &mut self,
        p: &EnvelopingPolynomial<C>,
        q: &EnvelopingPolynomial<Rational>,
    ) -> EnvelopingPolynomial<C> {
        let mut words = WordPolynomial::new();
        for (m, c) in &p.terms {
            for (n, d) in &q.terms {
                let mut w = m.0.clone();
                w.extend_from_slice(&n.0);
                add_into(&mut words.terms, w, c, d);
            }
        }
        self.order(&words)
    }

    /// `p·x − s·x·p` with `s = (−1)^(sector·grade(x))` for the graded bracket
    /// and `s = 1` for the ordinary commutator.
    pub fn commutator<C: Coefficient>(
        &mut self,
        p: &EnvelopingPolynomial<C>,
        x: usize,
        centrality: Centrality,
    ) -> Result<EnvelopingPolynomial<C>, EnvelopingError> {
        let Some(sector) = p.grade(self.alg)? else {
            return Ok(EnvelopingPolynomial::zero());
        };
        let s = match centrality {
            Centrality::Graded => sector.sign(self.alg.grade(x)),
            Centrality::Ordinary => 1,
        };
        let mut words = WordPolynomial::new();
        for (m, c) in &p.terms {
            let mut right = m.0.clone();
            right.push(x);
            add_into(&mut words.terms, right, c, &Rational::one());
            let mut left = vec![x];
            left.extend_from_slice(&m.0);
            add_into(&mut words.terms, left, c, &int(-s));
        }
        Ok(self.order(&words))
    }
}

/// Normal form by the memoized leftmost strategy.
pub fn normal_order<C: Coefficient>(alg: &GradedAlgebra, p: &WordPolynomial<C>) -> EnvelopingPolynomial<C> {
    NormalOrderer::new(alg).order(p)
}

/// Normal form where `choose(n)` picks which of the `n` rewritable positions
/// of the current word is rewritten next. Used to exercise confluence.
pub fn normal_order_with<C: Coefficient>(
    alg: &GradedAlgebra,
    p: &WordPolynomial<C>,
    mut choose: impl FnMut(usize) -> usize,
) -> EnvelopingPolynomial<C> {
    let mut pending = p.terms.clone();
    let mut out = EnvelopingPolynomial::zero();
    while let Some((w, c)) = pending.pop_first() {
        let candidates: Vec<usize> = disorders(alg, &w).collect();
        if candidates.is_empty() {
            add_into(&mut out.terms, PbwMonomial(w), &c, &Rational::one());
            continue;
        }
        let i = candidates[choose(candidates.len()) % candidates.len()];
        for (next, q) in rewrite(alg, &w, i) {
            add_into(&mut pending, next, &c, &q);
        }
    }
    out
}

/// Normal form always rewriting the rightmost disorder.
pub fn normal_order_rightmost<C: Coefficient>(
    alg: &GradedAlgebra,
    p: &WordPolynomial<C>,
) -> EnvelopingPolynomial<C> {
    normal_order_with(alg, p, |n| n - 1)
}

/// Which bracket must vanish for an element to count as central.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Centrality {
    #[default]
    Graded,
    Ordinary,
}

impl Centrality {
    pub fn name(self) -> &'static str {
        match self {
            Centrality::Graded => "graded",
            Centrality::Ordinary => "ordinary",
        }
    }
}

/// `normal_order(p·x − (−1)^(s·g) x·p)` for `p` homogeneous of sector `s`.
pub fn graded_commutator<C: Coefficient>(
    alg: &GradedAlgebra,
    p: &EnvelopingPolynomial<C>,
    x: usize,
) -> Result<EnvelopingPolynomial<C>, EnvelopingError> {
    NormalOrderer::new(alg).commutator(p, x, Centrality::Graded)
}

/// Generators whose bracket with `p` does not vanish.
pub fn non_commuting_generators(
    alg: &GradedAlgebra,
    p: &EnvelopingPolynomial<Rational>,
    centrality: Centrality,
) -> Result<Vec<usize>, EnvelopingError> {
    let mut ord = NormalOrderer::new(alg);
    let mut out = Vec::new();
    for x in 0..alg.dim() {
        if !ord.commutator(p, x, centrality)?.is_zero() {
            out.push(x);
        }
    }
    Ok(out)
}

/// All PBW monomials of degree 1 and 2 lying in `sector`, in PBW order.
pub fn quadratic_ansatz(alg: &GradedAlgebra, sector: Grading) -> Vec<PbwMonomial> {
    let n = alg.dim();
    let mut out: Vec<PbwMonomial> = (0..n)
        .filter(|&i| alg.grade(i) == sector)
        .map(PbwMonomial::generator)
        .collect();
    for i in 0..n {
        for j in i..n {
            if i == j && alg.grade(i).is_self_anticommuting() {
                continue;
            }
            if alg.grade(i) + alg.grade(j) == sector {
                out.push(PbwMonomial(vec![i, j]));
            }
        }
    }
    out.sort();
    out
}

/// Result of the quadratic Casimir search in one sector.
#[derive(Clone, Debug, PartialEq)]
pub struct CasimirSolution {
    pub sector: Grading,
    pub centrality: Centrality,
    pub ansatz: Vec<PbwMonomial>,
    pub equations: usize,
    /// Nullspace basis in reduced echelon form, each ray scaled so its first
    /// non-zero coefficient (in ansatz order) is one.
    pub rays: Vec<EnvelopingPolynomial<Rational>>,
    /// Scalars are central; they are reported here and never mixed into `rays`.
    pub constant_is_central: bool,
}

impl CasimirSolution {
    pub fn rays_json(&self, alg: &GradedAlgebra) -> Value {
        Value::Array(
            self.rays
                .iter()
                .map(|r| {
                    json!({
                        "sector": self.sector.to_json(),
                        "basis": r.to_json(alg),
                        "definition": self.centrality.name(),
                    })
                })
                .collect(),
        )
    }
}

/// Solves for all quadratic elements of `sector` that are central under `centrality`.
pub fn solve_casimir(alg: &GradedAlgebra, sector: Grading, centrality: Centrality) -> CasimirSolution {
    let ansatz = quadratic_ansatz(alg, sector);
    let mut p: EnvelopingPolynomial<LinearForm> = EnvelopingPolynomial::zero();
    for (k, m) in ansatz.iter().enumerate() {
        p.add_term(m.clone(), LinearForm::unknown(k));
    }
    let mut ord = NormalOrderer::new(alg);
    let mut ech = IntegerEchelon::new(ansatz.len());
    let mut equations = 0;
    for x in 0..alg.dim() {
        let c = ord
            .commutator(&p, x, centrality)
            .expect("ansatz is homogeneous by construction");
        for (_, form) in c.terms() {
            debug_assert!(form.constant_part().is_zero());
            equations += 1;
            ech.insert_rational(form.coeffs());
        }
    }
    let rays = reduce_basis(ech.nullspace())
        .into_iter()
        .map(|v| {
            let mut r = EnvelopingPolynomial::zero();
            for (m, q) in ansatz.iter().zip(v) {
                r.add_term(m.clone(), q);
            }
            r
        })
        .collect();
    CasimirSolution {
        sector,
        centrality,
        ansatz,
        equations,
        rays,
        constant_is_central: true,
    }
}

/// Reduced row echelon form of a list of vectors.
fn reduce_basis(mut vs: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let Some(width) = vs.first().map(Vec::len) else {
        return vs;
    };
    let mut row = 0;
    for col in 0..width {
        let Some(p) = (row..vs.len()).find(|&r| !vs[r][col].is_zero()) else {
            continue;
        };
        vs.swap(row, p);
        let inv = vs[row][col].recip();
        for x in vs[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..vs.len() {
            if r != row && !vs[r][col].is_zero() {
                let f = vs[r][col].clone();
                let pivot = vs[row].clone();
                for (x, y) in vs[r].iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        row += 1;
        if row == vs.len() {
            break;
        }
    }
    vs
}

fn named_form(alg: &GradedAlgebra, terms: &[(Rational, &[&str])]) -> Result<EnvelopingPolynomial, EnvelopingError> {
    Ok(normal_order(alg, &WordPolynomial::from_named(alg, terms)?))
}

/// `R − ½R² − ½R̃² + 2L₊L₋ + 2L̃₊L̃₋ + ½a₊a₋ + ½ã₊ã₋` on the ten-generator algebra.
pub fn casimir_ten_00(alg: &GradedAlgebra) -> Result<EnvelopingPolynomial, EnvelopingError> {
    named_form(
        alg,
        &[
            (int(1), &["R"]),
            (rat(-1, 2), &["R", "R"]),
            (rat(-1, 2), &["Rt", "Rt"]),
            (int(2), &["L+", "L-"]),
            (int(2), &["Lt+", "Lt-"]),
            (rat(1, 2), &["a+", "a-"]),
            (rat(1, 2), &["at+", "at-"]),
        ],
    )
}

/// The same element written with lowering operators on the left.
pub fn casimir_ten_00_lowered(alg: &GradedAlgebra) -> Result<EnvelopingPolynomial, EnvelopingError> {
    named_form(
        alg,
        &[
            (int(-1), &["R"]),
            (rat(-1, 2), &["R", "R"]),
            (rat(-1, 2), &["Rt", "Rt"]),
            (int(2), &["L-", "L+"]),
            (int(2), &["Lt-", "Lt+"]),
            (rat(-1, 2), &["a-", "a+"]),
            (rat(-1, 2), &["at-", "at+"]),
        ],
    )
}

/// `L₊L̃₋ + L̃₊L₋ + ¼a₊ã₋ + ¼ã₊a₋ + ½R̃ − ½RR̃`, central in the graded sense.
pub fn casimir_ten_11(alg: &GradedAlgebra) -> Result<EnvelopingPolynomial, EnvelopingError> {
    named_form(
        alg,
        &[
            (int(1), &["L+", "Lt-"]),
            (int(1), &["Lt+", "L-"]),
            (rat(1, 4), &["a+", "at-"]),
            (rat(1, 4), &["at+", "a-"]),
            (rat(1, 2), &["Rt"]),
            (rat(-1, 2), &["R", "Rt"]),
        ],
    )
}

/// `−¼R² − ¼R̃² + L₊L₋ + ¼a₊a₋ + ¼ã₊ã₋` on the eight-generator algebra.
pub fn casimir_eight(alg: &GradedAlgebra) -> Result<EnvelopingPolynomial, EnvelopingError> {
    named_form(
        alg,
        &[
            (rat(-1, 4), &["R", "R"]),
            (rat(-1, 4), &["Rt", "Rt"]),
            (int(1), &["L+", "L-"]),
            (rat(1, 4), &["a+", "a-"]),
            (rat(1, 4), &["at+", "at-"]),
        ],
    )
}

impl fmt::Display for Centrality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets::{preset_eight, preset_ten};

    fn words(alg: &GradedAlgebra, names: &[&str]) -> WordPolynomial {
        WordPolynomial::from_named(alg, &[(int(1), names)]).unwrap()
    }

    #[test]
    fn basic_reorderings() {
        let alg = preset_ten();
        assert_eq!(normal_order(&alg, &words(&alg, &["L-", "L+"])).render(&alg), "R + L+ L-");
        assert_eq!(normal_order(&alg, &words(&alg, &["a-", "a+"])).render(&alg), "2 R - a+ a-");
        assert_eq!(normal_order(&alg, &words(&alg, &["a+", "a+"])).render(&alg), "2 L+");
        assert_eq!(normal_order(&alg, &words(&alg, &["R", "R"])).render(&alg), "R^2");
        assert_eq!(normal_order(&alg, &WordPolynomial::<Rational>::word(vec![], int(3))).render(&alg), "3");
    }

    #[test]
    fn commutator_examples() {
        let alg = preset_ten();
        let r = EnvelopingPolynomial::monomial(PbwMonomial::generator(alg.index_of("R").unwrap()), int(1));
        let lp = alg.index_of("L+").unwrap();
        assert_eq!(graded_commutator(&alg, &r, lp).unwrap().render(&alg), "2 L+");
        let lplm = normal_order(&alg, &words(&alg, &["L+", "L-"]));
        assert!(graded_commutator(&alg, &lplm, alg.index_of("R").unwrap()).unwrap().is_zero());
    }

    #[test]
    fn non_homogeneous_input_is_rejected() {
        let alg = preset_ten();
        let p = normal_order(
            &alg,
            &WordPolynomial::from_named(&alg, &[(int(1), &["R"]), (int(1), &["a+"])]).unwrap(),
        );
        assert!(matches!(graded_commutator(&alg, &p, 0), Err(EnvelopingError::NonHomogeneous(..))));
    }

    #[test]
    fn rightmost_agrees_with_leftmost() {
        let alg = preset_eight();
        let w = words(&alg, &["at-", "a-", "Rt", "a+", "at+", "L-"]);
        assert_eq!(normal_order(&alg, &w), normal_order_rightmost(&alg, &w));
    }

    #[test]
    fn ansatz_sizes() {
        let alg = preset_ten();
        assert!(quadratic_ansatz(&alg, Grading::ZERO)
            .iter()
            .all(|m| m.grade(&alg) == Grading::ZERO));
        // self-anticommuting squares are excluded
        let a_plus = alg.index_of("a+").unwrap();
        assert!(!quadratic_ansatz(&alg, Grading::ZERO).contains(&PbwMonomial(vec![a_plus, a_plus])));
    }

    #[test]
    fn monomial_rendering() {
        let alg = preset_ten();
        assert_eq!(PbwMonomial::one().render(&alg), "1");
        assert_eq!(PbwMonomial(vec![4, 4]).render(&alg), "R^2");
        assert_eq!(PbwMonomial(vec![0, 6]).render(&alg), "L+ L-");
        assert!(PbwMonomial::from_word(&alg, &[1, 1]).is_none());
        assert!(PbwMonomial(vec![0, 6]) < PbwMonomial(vec![4, 4]));
        assert!(PbwMonomial(vec![9]) < PbwMonomial(vec![0, 0]));
    }
}
