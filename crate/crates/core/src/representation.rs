//! Finite-dimensional highest-weight representations over [`RadicalScalar`].
//!
//! Ten-generator representations are built for any `ℓ ≥ 1` from the ladder
//! action of `L±`, `a±`, `ã±` on the normalized states `|j; m⟩`; the actions
//! of `R̃` and `L̃±` follow from brackets of those. The ℓ=2 matrices of both
//! algebras are also available as typeset.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde_json::{json, Map, Value};

use crate::algebra::GradedAlgebra;
use crate::embedded::{Entry, EIGHT_ELL_2, TEN_ELL_2};
use crate::enveloping::EnvelopingPolynomial;
use crate::error::{ParseError, RepError};
use crate::grading::Grading;
use crate::linalg::RadicalEchelon;
use crate::presets::{OspGenerator, OspVersion};
use crate::radical::{sqrt_rational, RadicalScalar};
use crate::rational::{int, Rational};

/// A basis state `|j; m⟩` of a given sector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateLabel {
    pub j: u32,
    pub m: i64,
    pub sector: Grading,
}

impl StateLabel {
    pub fn new(j: u32, m: i64, sector: Grading) -> Self {
        StateLabel { j, m, sector }
    }

    pub fn is_even_sector(&self) -> bool {
        self.sector.a1() == self.sector.a2()
    }

    /// Valid label of the ten-generator representation with highest weight `ℓ` in (0,0).
    pub fn valid_for(&self, ell: u32) -> bool {
        let j = if self.is_even_sector() {
            ell
        } else {
            match ell.checked_sub(1) {
                Some(j) => j,
                None => return false,
            }
        };
        self.j == j && self.m.abs() <= j as i64 && (j as i64 - self.m) % 2 == 0
    }

    pub fn to_json(&self) -> Value {
        json!({"j": self.j, "m": self.m, "sector": self.sector.to_json()})
    }
}

impl fmt::Display for StateLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{};{}>{}", self.j, self.m, self.sector)
    }
}

/// Frozen state order: (0,0) by descending m, then (0,1), (1,0), (1,1).
pub fn ten_states(ell: u32) -> Vec<StateLabel> {
    let mut out = Vec::new();
    for (sector, j) in [
        (Grading::new(0, 0), ell),
        (Grading::new(0, 1), ell - 1),
        (Grading::new(1, 0), ell - 1),
        (Grading::new(1, 1), ell),
    ] {
        let mut m = j as i64;
        while m >= -(j as i64) {
            out.push(StateLabel::new(j, m, sector));
            m -= 2;
        }
    }
    out
}

fn eight_states() -> Vec<StateLabel> {
    let mut out = Vec::new();
    for (sector, j) in [
        (Grading::new(0, 0), 2u32),
        (Grading::new(0, 1), 1),
        (Grading::new(1, 0), 1),
        (Grading::new(1, 1), 0),
    ] {
        let mut m = j as i64;
        while m >= -(j as i64) {
            out.push(StateLabel::new(j, m, sector));
            m -= 2;
        }
    }
    out
}

/// Dense square matrix over the radical ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalMatrix {
    n: usize,
    entries: Vec<RadicalScalar>,
}

impl RadicalMatrix {
    pub fn zero(n: usize) -> Self {
        RadicalMatrix {
            n,
            entries: vec![RadicalScalar::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, RadicalScalar::one());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> &RadicalScalar {
        &self.entries[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: RadicalScalar) {
        self.entries[r * self.n + c] = v;
    }

    pub fn add_at(&mut self, r: usize, c: usize, v: &RadicalScalar) {
        self.entries[r * self.n + c] += v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RadicalScalar::is_zero)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, &RadicalScalar)> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(k, v)| (k / self.n, k % self.n, v))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        let mut out = Self::zero(n);
        for (i, k, a) in self.nonzero() {
            for j in 0..n {
                let b = other.get(k, j);
                if !b.is_zero() {
                    out.add_at(i, j, &(a * b));
                }
            }
        }
        out
    }

    pub fn add_scaled(&mut self, other: &Self, q: &Rational) {
        if q.is_zero() {
            return;
        }
        for (i, j, v) in other.nonzero() {
            let s = v.scale(q);
            self.add_at(i, j, &s);
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    /// `c` if the matrix is `c·I`.
    pub fn as_scalar(&self) -> Result<RadicalScalar, (usize, usize, RadicalScalar)> {
        let c = if self.n == 0 {
            RadicalScalar::zero()
        } else {
            self.get(0, 0).clone()
        };
        for i in 0..self.n {
            for j in 0..self.n {
                let v = self.get(i, j);
                let ok = if i == j { *v == c } else { v.is_zero() };
                if !ok {
                    return Err((i, j, v.clone()));
                }
            }
        }
        Ok(c)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            (0..self.n)
                .map(|i| Value::Array((0..self.n).map(|j| self.get(i, j).to_json()).collect()))
                .collect(),
        )
    }

    pub fn from_json(v: &Value, field: &str) -> Result<Self, ParseError> {
        let rows = v
            .as_array()
            .ok_or_else(|| ParseError::schema(field, "expected an array of rows"))?;
        let n = rows.len();
        let mut m = Self::zero(n);
        for (i, row) in rows.iter().enumerate() {
            let row = row
                .as_array()
                .filter(|r| r.len() == n)
                .ok_or_else(|| ParseError::schema(format!("{field}[{i}]"), format!("expected {n} entries")))?;
            for (j, e) in row.iter().enumerate() {
                m.set(i, j, RadicalScalar::from_json(e).map_err(|e| prefix(e, &format!("{field}[{i}][{j}]")))?);
            }
        }
        Ok(m)
    }

    pub fn to_latex(&self) -> String {
        let mut s = String::from("\\begin{bmatrix}\n");
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_latex()).collect();
            s.push_str(&row.join(" & "));
            s.push_str(if i + 1 < self.n { " \\\\\n" } else { "\n" });
        }
        s.push_str("\\end{bmatrix}");
        s
    }
}

fn prefix(e: ParseError, field: &str) -> ParseError {
    match e {
        ParseError::Schema { field: f, reason } => ParseError::Schema {
            field: format!("{field}.{f}"),
            reason,
        },
        other => other,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Built,
    Embedded,
    UserSupplied,
}

impl Provenance {
    pub fn name(self) -> &'static str {
        match self {
            Provenance::Built => "built",
            Provenance::Embedded => "embedded",
            Provenance::UserSupplied => "user-supplied",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub algebra: OspVersion,
    pub ell: u32,
    pub states: Vec<StateLabel>,
    /// Keyed by generator name.
    pub matrices: BTreeMap<String, RadicalMatrix>,
    pub provenance: Provenance,
}

impl Representation {
    pub fn dim(&self) -> usize {
        self.states.len()
    }

    pub fn matrix(&self, g: OspGenerator) -> Option<&RadicalMatrix> {
        self.matrices.get(g.name())
    }

    pub fn to_json(&self) -> Value {
        let mut mats = Map::new();
        for (name, m) in &self.matrices {
            mats.insert(name.clone(), m.to_json());
        }
        json!({
            "algebra": self.algebra.name(),
            "ell": self.ell,
            "states": self.states.iter().map(StateLabel::to_json).collect::<Vec<_>>(),
            "matrices": mats,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, ParseError> {
        let algebra: OspVersion = v
            .get("algebra")
            .and_then(Value::as_str)
            .ok_or_else(|| ParseError::schema("algebra", "expected \"ten\" or \"eight\""))?
            .parse()
            .map_err(|e: String| ParseError::schema("algebra", e))?;
        let ell = v
            .get("ell")
            .and_then(Value::as_u64)
            .and_then(|e| u32::try_from(e).ok())
            .filter(|e| *e >= 1)
            .ok_or_else(|| ParseError::schema("ell", "expected a positive integer"))?;
        let states = v
            .get("states")
            .and_then(Value::as_array)
            .ok_or_else(|| ParseError::schema("states", "expected an array"))?
            .iter()
            .enumerate()
            .map(|(i, s)| parse_state(s, i))
            .collect::<Result<Vec<_>, _>>()?;
        let mats = v
            .get("matrices")
            .and_then(Value::as_object)
            .ok_or_else(|| ParseError::schema("matrices", "expected an object"))?;
        let mut matrices = BTreeMap::new();
        for g in algebra.generators() {
            let field = format!("matrices.{}", g.name());
            let raw = mats
                .get(g.name())
                .ok_or_else(|| ParseError::schema(&field, "missing generator"))?;
            let m = RadicalMatrix::from_json(raw, &field)?;
            if m.dim() != states.len() {
                return Err(ParseError::schema(
                    field,
                    format!("expected {0}x{0}, got {1}x{1}", states.len(), m.dim()),
                ));
            }
            matrices.insert(g.name().to_string(), m);
        }
        if let Some(extra) = mats.keys().find(|k| !matrices.contains_key(*k)) {
            return Err(ParseError::schema(format!("matrices.{extra}"), "not a generator of this algebra"));
        }
        Ok(Representation {
            algebra,
            ell,
            states,
            matrices,
            provenance: Provenance::UserSupplied,
        })
    }
}

fn parse_state(s: &Value, i: usize) -> Result<StateLabel, ParseError> {
    let field = |f: &str| format!("states[{i}].{f}");
    let j = s
        .get("j")
        .and_then(Value::as_u64)
        .and_then(|j| u32::try_from(j).ok())
        .ok_or_else(|| ParseError::schema(field("j"), "expected a non-negative integer"))?;
    let m = s
        .get("m")
        .and_then(Value::as_i64)
        .ok_or_else(|| ParseError::schema(field("m"), "expected an integer"))?;
    let bits: Vec<u64> = s
        .get("sector")
        .and_then(Value::as_array)
        .map(|a| a.iter().filter_map(Value::as_u64).collect())
        .unwrap_or_default();
    let sector =
        Grading::from_slice(&bits).ok_or_else(|| ParseError::schema(field("sector"), "expected [0|1, 0|1]"))?;
    Ok(StateLabel::new(j, m, sector))
}

fn sqrt_int(v: i64) -> Option<RadicalScalar> {
    (v > 0).then(|| sqrt_rational(&int(v)).expect("small positive integer"))
}

/// Ladder action of `L±`, `a±`, `ã±` and `R`.
fn basic_action(g: OspGenerator, s: &StateLabel, ell: u32) -> Vec<(RadicalScalar, StateLabel)> {
    use OspGenerator::*;
    let l = ell as i64;
    let m = s.m;
    if g == R {
        return vec![(RadicalScalar::from_int(m), *s)];
    }
    let (a1, a2) = (s.sector.a1(), s.sector.a2());
    // (sign, value under the root, target sector, Δm)
    let rule: Option<(i64, i64, Grading, i64)> = if s.is_even_sector() {
        let n = (l - m) / 2;
        let to_a = Grading::new(a1, 1 - a2);
        let to_t = Grading::new(1 - a1, a2);
        match g {
            LMinus => Some((1, (l - n) * (n + 1), s.sector, -2)),
            LPlus => Some((-1, (l - n + 1) * n, s.sector, 2)),
            AMinus => Some((1, 2 * (l - n), to_a, -1)),
            APlus => Some((-1, 2 * n, to_a, 1)),
            AtMinus => Some((1, 2 * (l - n), to_t, -1)),
            AtPlus => Some((1, 2 * n, to_t, 1)),
            _ => None,
        }
    } else {
        let n = (l - 1 - m) / 2;
        let to_a = Grading::new(a1, 1 - a2);
        let to_t = Grading::new(1 - a1, a2);
        match g {
            LMinus => Some((1, (n + 1) * (l - 1 - n), s.sector, -2)),
            LPlus => Some((-1, n * (l - n), s.sector, 2)),
            AMinus => Some((1, 2 * (n + 1), to_a, -1)),
            APlus => Some((1, 2 * (l - n), to_a, 1)),
            AtMinus => Some((-1, 2 * (n + 1), to_t, -1)),
            AtPlus => Some((1, 2 * (l - n), to_t, 1)),
            _ => None,
        }
    };
    let Some((sign, value, sector, dm)) = rule else {
        return Vec::new();
    };
    let j = if sector.a1() == sector.a2() { ell } else { ell - 1 };
    let target = StateLabel::new(j, m + dm, sector);
    match sqrt_int(value) {
        Some(c) if target.valid_for(ell) => {
            vec![(if sign < 0 { -c } else { c }, target)]
        }
        _ => Vec::new(),
    }
}

/// How a generator outside the ladder set is expressed: `g = f·⟦p, q⟧`.
fn composite_rule(alg: &GradedAlgebra, g: OspGenerator) -> (OspGenerator, OspGenerator, Rational) {
    use OspGenerator::*;
    let basic = [LPlus, APlus, AtPlus, R, LMinus, AMinus, AtMinus];
    let target = alg.index_of(g.name()).expect("ten-generator name");
    for (k, p) in basic.iter().enumerate() {
        for q in &basic[k + 1..] {
            let b = alg.bracket_named(p.name(), q.name()).expect("ten-generator names");
            if b.len() == 1 && !b.coeff(target).is_zero() {
                return (*p, *q, b.coeff(target).recip());
            }
        }
    }
    unreachable!("{g} is not a bracket of ladder generators")
}

fn apply_all(
    g: OspGenerator,
    v: &[(RadicalScalar, StateLabel)],
    ell: u32,
) -> Vec<(RadicalScalar, StateLabel)> {
    let mut out = Vec::new();
    for (c, s) in v {
        for (d, t) in basic_action(g, s, ell) {
            out.push((c * &d, t));
        }
    }
    out
}

fn collect(terms: Vec<(RadicalScalar, StateLabel)>) -> Vec<(RadicalScalar, StateLabel)> {
    let mut acc: BTreeMap<StateLabel, RadicalScalar> = BTreeMap::new();
    for (c, s) in terms {
        *acc.entry(s).or_default() += &c;
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(s, c)| (c, s)).collect()
}

/// Action of a ten-generator element on a basis state of the ℓ representation
/// with highest weight in sector (0,0). Zero results and targets outside the
/// representation are dropped.
pub fn act(gen: &str, state: &StateLabel, ell: u32) -> Result<Vec<(RadicalScalar, StateLabel)>, RepError> {
    let g: OspGenerator = gen.parse().map_err(|_| RepError::Unsupported(gen.to_string()))?;
    if ell == 0 {
        return Err(RepError::ZeroEll);
    }
    if !state.valid_for(ell) {
        return Ok(Vec::new());
    }
    act_checked(&crate::presets::preset_ten(), g, state, ell)
}

fn act_checked(
    alg: &GradedAlgebra,
    g: OspGenerator,
    state: &StateLabel,
    ell: u32,
) -> Result<Vec<(RadicalScalar, StateLabel)>, RepError> {
    use OspGenerator::*;
    match g {
        Rt | LtPlus | LtMinus => {
            let (p, q, f) = composite_rule(alg, g);
            let start = vec![(RadicalScalar::one(), *state)];
            let pq = apply_all(p, &apply_all(q, &start, ell), ell);
            let qp = apply_all(q, &apply_all(p, &start, ell), ell);
            let s = p.grade().sign(q.grade());
            let mut terms = Vec::new();
            terms.extend(pq.into_iter().map(|(c, t)| (c.scale(&f), t)));
            terms.extend(qp.into_iter().map(|(c, t)| (c.scale(&(-&f * int(s))), t)));
            Ok(collect(terms))
        }
        _ => Ok(basic_action(g, state, ell)),
    }
}

/// Closed-form `L±` action in terms of `m` (`j = ℓ` on even sectors, `ℓ − 1`
/// on odd ones), with the raising target at `m + 2` in both cases.
pub fn ladder_closed_form(raising: bool, state: &StateLabel) -> Option<(RadicalScalar, StateLabel)> {
    let j = state.j as i64;
    let m = state.m;
    let (value, dm) = if raising {
        ((j - m) * (j + m + 2), 2)
    } else {
        ((j + m) * (j - m + 2), -2)
    };
    let root = sqrt_rational(&Rational::new(value.into(), 4.into())).ok()?;
    if root.is_zero() {
        return None;
    }
    let c = if raising { -root } else { root };
    Some((c, StateLabel::new(state.j, m + dm, state.sector)))
}

/// The `4ℓ + 2` dimensional ten-generator representation.
pub fn build_rep_ten(ell: u32) -> Result<Representation, RepError> {
    if ell == 0 {
        return Err(RepError::ZeroEll);
    }
    let alg = crate::presets::preset_ten();
    let states = ten_states(ell);
    let index: BTreeMap<StateLabel, usize> = states.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    let n = states.len();
    let mut matrices = BTreeMap::new();
    for g in OspGenerator::TEN {
        let mut m = RadicalMatrix::zero(n);
        for (col, s) in states.iter().enumerate() {
            for (c, t) in act_checked(&alg, g, s, ell)? {
                m.add_at(index[&t], col, &c);
            }
        }
        matrices.insert(g.name().to_string(), m);
    }
    Ok(Representation {
        algebra: OspVersion::Ten,
        ell,
        states,
        matrices,
        provenance: Provenance::Built,
    })
}

fn from_entries(data: &[(&str, &[Entry])], n: usize) -> BTreeMap<String, RadicalMatrix> {
    data.iter()
        .map(|(name, entries)| {
            let mut m = RadicalMatrix::zero(n);
            for &(r, c, q, rad) in entries.iter() {
                m.set(r, c, RadicalScalar::term(int(q), rad));
            }
            (name.to_string(), m)
        })
        .collect()
}

/// The ℓ=2 matrices exactly as typeset.
pub fn embedded_rep(version: OspVersion) -> Representation {
    let (states, data) = match version {
        OspVersion::Ten => (ten_states(2), TEN_ELL_2),
        OspVersion::Eight => (eight_states(), EIGHT_ELL_2),
    };
    let matrices = from_entries(data, states.len());
    Representation {
        algebra: version,
        ell: 2,
        states,
        matrices,
        provenance: Provenance::Embedded,
    }
}

/// One violated entry of a relation or invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryMismatch {
    pub row: usize,
    pub col: usize,
    pub expected: RadicalScalar,
    pub found: RadicalScalar,
}

impl EntryMismatch {
    pub fn to_json(&self) -> Value {
        json!({
            "row": self.row,
            "col": self.col,
            "expected": self.expected.to_json(),
            "found": self.found.to_json(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationFailure {
    pub left: String,
    pub right: String,
    pub entries: Vec<EntryMismatch>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectorViolation {
    pub generator: String,
    pub row: usize,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RepVerification {
    pub pairs_checked: usize,
    pub relation_failures: Vec<RelationFailure>,
    pub sector_violations: Vec<SectorViolation>,
    pub r_diagonal_failures: Vec<EntryMismatch>,
    pub missing: Vec<String>,
}

impl RepVerification {
    pub fn passed(&self) -> bool {
        self.relation_failures.is_empty()
            && self.sector_violations.is_empty()
            && self.r_diagonal_failures.is_empty()
            && self.missing.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "passed": self.passed(),
            "pairs_checked": self.pairs_checked,
            "pairs_failed": self.relation_failures.len(),
            "relation_failures": self.relation_failures.iter().map(|f| json!({
                "left": f.left,
                "right": f.right,
                "entries": f.entries.iter().map(EntryMismatch::to_json).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "sector_violations": self.sector_violations.iter().map(|v| json!({
                "generator": v.generator, "row": v.row, "col": v.col,
            })).collect::<Vec<_>>(),
            "r_diagonal_failures": self.r_diagonal_failures.iter().map(EntryMismatch::to_json).collect::<Vec<_>>(),
            "missing_generators": self.missing,
        })
    }
}

fn diff_entries(expected: &RadicalMatrix, found: &RadicalMatrix) -> Vec<EntryMismatch> {
    let mut out = Vec::new();
    for i in 0..expected.dim() {
        for j in 0..expected.dim() {
            if expected.get(i, j) != found.get(i, j) {
                out.push(EntryMismatch {
                    row: i,
                    col: j,
                    expected: expected.get(i, j).clone(),
                    found: found.get(i, j).clone(),
                });
            }
        }
    }
    out
}

/// Checks every unordered generator pair, the sector pattern and the `R` diagonal.
pub fn verify_rep(rep: &Representation) -> RepVerification {
    let alg = rep.algebra.algebra();
    let n = rep.dim();
    let mut report = RepVerification::default();
    let gens = rep.algebra.generators();
    for g in gens {
        match rep.matrix(*g) {
            Some(m) if m.dim() == n => {}
            _ => report.missing.push(g.name().to_string()),
        }
    }
    if !report.missing.is_empty() {
        return report;
    }
    let mats: Vec<&RadicalMatrix> = gens.iter().map(|g| rep.matrix(*g).expect("checked")).collect();
    for (i, gi) in gens.iter().enumerate() {
        for (j, gj) in gens.iter().enumerate().skip(i) {
            report.pairs_checked += 1;
            let s = gi.grade().sign(gj.grade());
            let mut lhs = mats[i].mul(mats[j]);
            lhs.add_scaled(&mats[j].mul(mats[i]), &int(-s));
            let mut rhs = RadicalMatrix::zero(n);
            for (k, q) in alg.bracket_generators(i, j).iter() {
                rhs.add_scaled(mats[k], q);
            }
            let entries = diff_entries(&rhs, &lhs);
            if !entries.is_empty() {
                report.relation_failures.push(RelationFailure {
                    left: gi.name().to_string(),
                    right: gj.name().to_string(),
                    entries,
                });
            }
        }
    }
    for (g, m) in gens.iter().zip(&mats) {
        for (r, c, _) in m.nonzero() {
            if g.grade() + rep.states[c].sector != rep.states[r].sector {
                report.sector_violations.push(SectorViolation {
                    generator: g.name().to_string(),
                    row: r,
                    col: c,
                });
            }
        }
    }
    let mut diag = RadicalMatrix::zero(n);
    for (i, s) in rep.states.iter().enumerate() {
        diag.set(i, i, RadicalScalar::from_int(s.m));
    }
    let r = rep.matrix(OspGenerator::R).expect("checked");
    report.r_diagonal_failures = diff_entries(&diag, r);
    report
}

/// Matrix of an enveloping-algebra element of the representation's algebra.
pub fn evaluate_element(rep: &Representation, p: &EnvelopingPolynomial) -> Result<RadicalMatrix, RepError> {
    let alg = rep.algebra.algebra();
    let n = rep.dim();
    let mut out = RadicalMatrix::zero(n);
    for (m, c) in p.terms() {
        let mut acc = RadicalMatrix::identity(n);
        for &k in m.factors() {
            let name = alg.name(k);
            let g = rep
                .matrices
                .get(name)
                .ok_or_else(|| RepError::Unsupported(name.to_string()))?;
            acc = acc.mul(g);
        }
        out.add_scaled(&acc, c);
    }
    Ok(out)
}

/// Value `c` of a (0,0)-sector element acting as `c·I`.
pub fn casimir_scalar(rep: &Representation, casimir: &EnvelopingPolynomial) -> Result<RadicalScalar, RepError> {
    let m = evaluate_element(rep, casimir)?;
    m.as_scalar().map_err(|(row, col, v)| RepError::NotScalar {
        row,
        col,
        value: v.to_string(),
    })
}

/// Dimension of the space of matrices commuting with every generator matrix.
pub fn commutant_dimension(rep: &Representation) -> usize {
    commutant_with(rep, |_, _| true)
}

/// As [`commutant_dimension`], restricted to sector-preserving matrices.
pub fn graded_commutant_dimension(rep: &Representation) -> usize {
    commutant_with(rep, |a, b| rep.states[a].sector == rep.states[b].sector)
}

/// The matrix exchanging `|j;m⟩` in sectors `g` and `g + (1,1)`, if the
/// states allow it.
pub fn sector_swap(rep: &Representation) -> Option<RadicalMatrix> {
    let shift = Grading::new(1, 1);
    let mut m = RadicalMatrix::zero(rep.dim());
    for (c, s) in rep.states.iter().enumerate() {
        let target = StateLabel::new(s.j, s.m, s.sector + shift);
        let r = rep.states.iter().position(|t| *t == target)?;
        m.set(r, c, RadicalScalar::one());
    }
    Some(m)
}

fn commutant_with(rep: &Representation, allowed: impl Fn(usize, usize) -> bool) -> usize {
    let n = rep.dim();
    let free = (0..n * n).filter(|k| allowed(k / n, k % n)).count();
    let mut ech = RadicalEchelon::new();
    for x in rep.matrices.values() {
        // (M X − X M)_{ik} = Σ_j M_ij X_jk − X_ij M_jk, unknown M_ab at a·n + b
        for i in 0..n {
            for k in 0..n {
                let mut row: BTreeMap<usize, RadicalScalar> = BTreeMap::new();
                for j in 0..n {
                    let xjk = x.get(j, k);
                    if !xjk.is_zero() && allowed(i, j) {
                        *row.entry(i * n + j).or_default() += xjk;
                    }
                    let xij = x.get(i, j);
                    if !xij.is_zero() && allowed(j, k) {
                        *row.entry(j * n + k).or_default() -= xij;
                    }
                }
                ech.insert(row);
            }
        }
    }
    free - ech.rank()
}

/// Block-diagonal sum; states of `b` follow those of `a`.
pub fn direct_sum(a: &Representation, b: &Representation) -> Representation {
    let (na, nb) = (a.dim(), b.dim());
    let mut matrices = BTreeMap::new();
    for (name, ma) in &a.matrices {
        let mut m = RadicalMatrix::zero(na + nb);
        for (i, j, v) in ma.nonzero() {
            m.set(i, j, v.clone());
        }
        if let Some(mb) = b.matrices.get(name) {
            for (i, j, v) in mb.nonzero() {
                m.set(na + i, na + j, v.clone());
            }
        }
        matrices.insert(name.clone(), m);
    }
    let mut states = a.states.clone();
    states.extend(b.states.iter().copied());
    Representation {
        algebra: a.algebra,
        ell: a.ell,
        states,
        matrices,
        provenance: Provenance::UserSupplied,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub generator: String,
    pub mismatch: EntryMismatch,
}

/// Entry-by-entry differences, `expected` taken from `reference`.
pub fn compare(reference: &Representation, candidate: &Representation) -> Vec<Discrepancy> {
    let mut out = Vec::new();
    let names: std::collections::BTreeSet<&String> =
        reference.matrices.keys().chain(candidate.matrices.keys()).collect();
    let n = reference.dim().max(candidate.dim());
    let zero = RadicalMatrix::zero(n);
    for name in names {
        let e = reference.matrices.get(name).unwrap_or(&zero);
        let f = candidate.matrices.get(name).unwrap_or(&zero);
        if e.dim() != f.dim() {
            out.push(Discrepancy {
                generator: name.clone(),
                mismatch: EntryMismatch {
                    row: e.dim(),
                    col: f.dim(),
                    expected: RadicalScalar::from_int(e.dim() as i64),
                    found: RadicalScalar::from_int(f.dim() as i64),
                },
            });
            continue;
        }
        for m in diff_entries(e, f) {
            out.push(Discrepancy {
                generator: name.clone(),
                mismatch: m,
            });
        }
    }
    out
}

pub fn discrepancies_json(d: &[Discrepancy]) -> Value {
    Value::Array(
        d.iter()
            .map(|x| {
                json!({
                    "generator": x.generator,
                    "row": x.mismatch.row,
                    "col": x.mismatch.col,
                    "expected": x.mismatch.expected.to_json(),
                    "found": x.mismatch.found.to_json(),
                })
            })
            .collect(),
    )
}

/// One bmatrix per generator in the frozen generator order.
pub fn emit_latex(rep: &Representation) -> Result<String, RepError> {
    if rep.dim() > 64 {
        return Err(RepError::RenderGuard(rep.dim()));
    }
    let mut out = String::new();
    for g in rep.algebra.generators() {
        let Some(m) = rep.matrix(*g) else { continue };
        out.push_str("\\begin{equation}\n");
        out.push_str(g.latex());
        out.push_str("=\n");
        out.push_str(&m.to_latex());
        out.push_str("\n\\end{equation}\n");
    }
    Ok(out)
}

/// `⟨ℓ;ℓ| L₊ⁿ L₋ⁿ |ℓ;ℓ⟩` read off the matrices for `n = 0..=ℓ`.
pub fn highest_weight_norms(rep: &Representation) -> Vec<RadicalScalar> {
    let (Some(lp), Some(lm)) = (rep.matrix(OspGenerator::LPlus), rep.matrix(OspGenerator::LMinus)) else {
        return Vec::new();
    };
    let n = rep.dim();
    let mut up = RadicalMatrix::identity(n);
    let mut down = RadicalMatrix::identity(n);
    let mut out = Vec::new();
    for _ in 0..=rep.ell {
        out.push(up.mul(&down).get(0, 0).clone());
        up = up.mul(lp);
        down = down.mul(lm);
    }
    out
}

/// Multiplicity of each `R` eigenvalue (diagonal entries of `R`).
pub fn r_spectrum(rep: &Representation) -> BTreeMap<i64, usize> {
    let mut out = BTreeMap::new();
    if let Some(r) = rep.matrix(OspGenerator::R) {
        for i in 0..rep.dim() {
            if let Some(q) = r.get(i, i).as_rational() {
                if q.is_integer() {
                    let v: i64 = q.to_integer().try_into().unwrap_or(i64::MAX);
                    *out.entry(v).or_insert(0) += 1;
                }
            }
        }
    }
    out
}
