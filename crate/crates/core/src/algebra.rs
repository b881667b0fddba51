//! ℤ₂×ℤ₂-graded algebras given by structure constants.
//!
//! Brackets are stored only for ordered pairs `(i, j)` with `i <= j` in the
//! fixed generator order; the reversed orientation follows from graded
//! antisymmetry `⟦Y,X⟧ = −(−1)^(a·b) ⟦X,Y⟧`. Absent pairs bracket to zero.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{AlgebraError, ParseError};
use crate::grading::Grading;
use crate::rational::{format_rational, parse_rational, Rational};

/// A rational linear combination of generators, keyed by generator index.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Combination(BTreeMap<usize, Rational>);

impl Combination {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn generator(i: usize) -> Self {
        Self::term(i, Rational::one())
    }

    pub fn term(i: usize, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(i, c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, Rational)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (i, c) in terms {
            out.add_term(i, c);
        }
        out
    }

    pub fn add_term(&mut self, i: usize, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.0.entry(i).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.0.remove(&i);
        }
    }

    pub fn add_scaled(&mut self, other: &Combination, c: &Rational) {
        for (i, q) in &other.0 {
            self.add_term(*i, q * c);
        }
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.0.get(&i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.0.iter().map(|(i, c)| (*i, c))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub grade: Grading,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebra {
    generators: Vec<Generator>,
    index: HashMap<String, usize>,
    table: BTreeMap<(usize, usize), Combination>,
}

impl GradedAlgebra {
    pub fn new(generators: Vec<Generator>) -> Result<Self, AlgebraError> {
        let mut index = HashMap::new();
        for (i, g) in generators.iter().enumerate() {
            if index.insert(g.name.clone(), i).is_some() {
                return Err(AlgebraError::DuplicateGenerator(g.name.clone()));
            }
        }
        Ok(Self {
            generators,
            index,
            table: BTreeMap::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn name(&self, i: usize) -> &str {
        &self.generators[i].name
    }

    pub fn grade(&self, i: usize) -> Grading {
        self.generators[i].grade
    }

    pub fn index_of(&self, name: &str) -> Result<usize, AlgebraError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| AlgebraError::UnknownGenerator(name.to_string()))
    }

    fn check_index(&self, i: usize) -> Result<(), AlgebraError> {
        if i < self.dim() {
            Ok(())
        } else {
            Err(AlgebraError::UnknownGenerator(format!("#{i}")))
        }
    }

    /// Sets `⟦Xᵢ, Xⱼ⟧`. When `i > j` the value is stored in the `(j, i)` slot
    /// with the graded-antisymmetry sign applied.
    pub fn set_bracket(&mut self, i: usize, j: usize, value: Combination) -> Result<(), AlgebraError> {
        self.check_index(i)?;
        self.check_index(j)?;
        for (k, _) in value.iter() {
            self.check_index(k)?;
        }
        let (key, value) = if i <= j {
            ((i, j), value)
        } else {
            let s = -self.grade(i).sign(self.grade(j));
            ((j, i), value.scaled(&Rational::from_integer(s.into())))
        };
        if value.is_zero() {
            self.table.remove(&key);
        } else {
            self.table.insert(key, value);
        }
        Ok(())
    }

    /// Convenience for presets: `⟦left, right⟧ = Σ c·gen` by generator name.
    pub fn set_bracket_named(
        &mut self,
        left: &str,
        right: &str,
        terms: &[(Rational, &str)],
    ) -> Result<(), AlgebraError> {
        let i = self.index_of(left)?;
        let j = self.index_of(right)?;
        let mut value = Combination::zero();
        for (c, g) in terms {
            value.add_term(self.index_of(g)?, c.clone());
        }
        self.set_bracket(i, j, value)
    }

    /// Stored `(i, j, value)` entries with `i <= j`, in index order.
    pub fn table_entries(&self) -> impl Iterator<Item = (usize, usize, &Combination)> {
        self.table.iter().map(|(&(i, j), c)| (i, j, c))
    }

    /// `⟦Xᵢ, Xⱼ⟧` for two generators.
    pub fn bracket_generators(&self, i: usize, j: usize) -> Combination {
        if i <= j {
            self.table.get(&(i, j)).cloned().unwrap_or_default()
        } else {
            let s = -self.grade(i).sign(self.grade(j));
            self.table
                .get(&(j, i))
                .map(|c| c.scaled(&Rational::from_integer(s.into())))
                .unwrap_or_default()
        }
    }

    /// Bilinear extension of the table to arbitrary combinations.
    pub fn bracket(&self, x: &Combination, y: &Combination) -> Result<Combination, AlgebraError> {
        let mut out = Combination::zero();
        for (i, a) in x.iter() {
            self.check_index(i)?;
            for (j, b) in y.iter() {
                self.check_index(j)?;
                out.add_scaled(&self.bracket_generators(i, j), &(a * b));
            }
        }
        Ok(out)
    }

    pub fn bracket_named(&self, left: &str, right: &str) -> Result<Combination, AlgebraError> {
        let i = self.index_of(left)?;
        let j = self.index_of(right)?;
        Ok(self.bracket_generators(i, j))
    }

    /// Eigenvalue `λ` with `⟦h, x⟧ = λ·x`, if `x` is an eigenvector of `ad h`.
    pub fn ad_eigenvalue(&self, h: usize, x: usize) -> Option<Rational> {
        let b = self.bracket_generators(h, x);
        if b.is_zero() {
            return Some(Rational::zero());
        }
        (b.len() == 1).then(|| b.coeff(x)).filter(|c| !c.is_zero())
    }

    pub fn render(&self, c: &Combination) -> String {
        if c.is_zero() {
            return "0".to_string();
        }
        c.iter()
            .map(|(i, q)| format!("{}*{}", format_rational(q), self.name(i)))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Checks the grading axioms, graded antisymmetry and the graded Jacobi
    /// identity over all ordered triples.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        for (&(i, j), value) in &self.table {
            let expected = self.grade(i) + self.grade(j);
            for (k, _) in value.iter() {
                if self.grade(k) != expected {
                    report.closure_failures.push(ClosureFailure {
                        left: self.name(i).to_string(),
                        right: self.name(j).to_string(),
                        term: self.name(k).to_string(),
                        expected,
                        found: self.grade(k),
                    });
                }
            }
        }
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let lhs = self.bracket_generators(i, j);
                let s = -self.grade(i).sign(self.grade(j));
                let rhs = self
                    .bracket_generators(j, i)
                    .scaled(&Rational::from_integer(s.into()));
                if lhs != rhs {
                    report.antisymmetry_failures.push(PairFailure {
                        left: self.name(i).to_string(),
                        right: self.name(j).to_string(),
                        residual: self.render(&{
                            let mut r = lhs.clone();
                            r.add_scaled(&rhs, &-Rational::one());
                            r
                        }),
                    });
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    report.jacobi_triples += 1;
                    let res = self.jacobi_residual(x, y, z);
                    if !res.is_zero() {
                        report.jacobi_failures.push(JacobiFailure {
                            triple: [
                                self.name(x).to_string(),
                                self.name(y).to_string(),
                                self.name(z).to_string(),
                            ],
                            residual: self.render(&res),
                        });
                    }
                }
            }
        }
        report
    }

    /// `⟦X,⟦Y,Z⟧⟧ − ⟦⟦X,Y⟧,Z⟧ − (−1)^(a·b) ⟦Y,⟦X,Z⟧⟧`.
    pub fn jacobi_residual(&self, x: usize, y: usize, z: usize) -> Combination {
        let gx = Combination::generator(x);
        let gy = Combination::generator(y);
        let gz = Combination::generator(z);
        let yz = self.bracket_generators(y, z);
        let xy = self.bracket_generators(x, y);
        let xz = self.bracket_generators(x, z);
        let mut res = self.bracket(&gx, &yz).expect("valid indices");
        res.add_scaled(&self.bracket(&xy, &gz).expect("valid indices"), &-Rational::one());
        let s = self.grade(x).sign(self.grade(y));
        res.add_scaled(
            &self.bracket(&gy, &xz).expect("valid indices"),
            &Rational::from_integer((-s).into()),
        );
        res
    }

    /// Returns every bracket of two subset members that leaves the span of the subset.
    pub fn subalgebra_violations(&self, subset: &[usize]) -> Vec<(usize, usize)> {
        let members: BTreeSet<usize> = subset.iter().copied().collect();
        let mut out = Vec::new();
        for &i in &members {
            for &j in &members {
                if self
                    .bracket_generators(i, j)
                    .iter()
                    .any(|(k, _)| !members.contains(&k))
                {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Generator indices whose grade lies in `sectors`.
    pub fn sector_indices(&self, sectors: &[Grading]) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| sectors.contains(&self.grade(i)))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let generators: Vec<Value> = self
            .generators
            .iter()
            .map(|g| json!({"name": g.name, "grade": g.grade.to_json()}))
            .collect();
        let brackets: Vec<Value> = self
            .table
            .iter()
            .map(|(&(i, j), c)| {
                let terms: Vec<Value> = c
                    .iter()
                    .map(|(k, q)| json!({"coeff": format_rational(q), "gen": self.name(k)}))
                    .collect();
                json!({"left": self.name(i), "right": self.name(j), "terms": terms})
            })
            .collect();
        json!({"generators": generators, "brackets": brackets})
    }

    pub fn from_json(v: &Value) -> Result<Self, ParseError> {
        let gens = v
            .get("generators")
            .and_then(Value::as_array)
            .ok_or_else(|| ParseError::schema("generators", "expected an array"))?;
        let mut generators = Vec::with_capacity(gens.len());
        for (i, g) in gens.iter().enumerate() {
            let name = g
                .get("name")
                .and_then(Value::as_str)
                .ok_or_else(|| ParseError::schema(format!("generators[{i}].name"), "expected a string"))?;
            let bits: Option<Vec<u64>> = g
                .get("grade")
                .and_then(Value::as_array)
                .map(|a| a.iter().filter_map(Value::as_u64).collect());
            let grade = bits
                .as_deref()
                .and_then(Grading::from_slice)
                .ok_or_else(|| ParseError::schema(format!("generators[{i}].grade"), "expected [0|1, 0|1]"))?;
            generators.push(Generator {
                name: name.to_string(),
                grade,
            });
        }
        let mut alg = GradedAlgebra::new(generators)
            .map_err(|e| ParseError::schema("generators", e.to_string()))?;
        let brackets = v
            .get("brackets")
            .and_then(Value::as_array)
            .ok_or_else(|| ParseError::schema("brackets", "expected an array"))?;
        let mut seen: BTreeMap<(usize, usize), Combination> = BTreeMap::new();
        for (b_idx, b) in brackets.iter().enumerate() {
            let field = |f: &str| format!("brackets[{b_idx}].{f}");
            let lookup = |f: &str| -> Result<usize, ParseError> {
                let name = b
                    .get(f)
                    .and_then(Value::as_str)
                    .ok_or_else(|| ParseError::schema(field(f), "expected a generator name"))?;
                alg.index_of(name)
                    .map_err(|e| ParseError::schema(field(f), e.to_string()))
            };
            let i = lookup("left")?;
            let j = lookup("right")?;
            let terms = b
                .get("terms")
                .and_then(Value::as_array)
                .ok_or_else(|| ParseError::schema(field("terms"), "expected an array"))?;
            let mut value = Combination::zero();
            for (t_idx, t) in terms.iter().enumerate() {
                let tf = |f: &str| format!("brackets[{b_idx}].terms[{t_idx}].{f}");
                let coeff = t
                    .get("coeff")
                    .and_then(Value::as_str)
                    .ok_or_else(|| ParseError::schema(tf("coeff"), "expected a rational string"))
                    .and_then(|s| parse_rational(s).map_err(|e| ParseError::schema(tf("coeff"), e.to_string())))?;
                let gen = t
                    .get("gen")
                    .and_then(Value::as_str)
                    .ok_or_else(|| ParseError::schema(tf("gen"), "expected a generator name"))?;
                let k = alg
                    .index_of(gen)
                    .map_err(|e| ParseError::schema(tf("gen"), e.to_string()))?;
                value.add_term(k, coeff);
            }
            let (key, normalized) = if i <= j {
                ((i, j), value)
            } else {
                let s = -alg.grade(i).sign(alg.grade(j));
                ((j, i), value.scaled(&Rational::from_integer(s.into())))
            };
            if let Some(prev) = seen.get(&key) {
                if *prev != normalized {
                    return Err(ParseError::schema(
                        field("left"),
                        AlgebraError::InconsistentBracket {
                            left: alg.name(key.0).to_string(),
                            right: alg.name(key.1).to_string(),
                        }
                        .to_string(),
                    ));
                }
            }
            seen.insert(key, normalized.clone());
            alg.set_bracket(key.0, key.1, normalized)
                .map_err(|e| ParseError::schema(field("terms"), e.to_string()))?;
        }
        Ok(alg)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureFailure {
    pub left: String,
    pub right: String,
    pub term: String,
    pub expected: Grading,
    pub found: Grading,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairFailure {
    pub left: String,
    pub right: String,
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiFailure {
    pub triple: [String; 3],
    pub residual: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub closure_failures: Vec<ClosureFailure>,
    pub antisymmetry_failures: Vec<PairFailure>,
    pub jacobi_triples: usize,
    pub jacobi_failures: Vec<JacobiFailure>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.closure_failures.is_empty()
            && self.antisymmetry_failures.is_empty()
            && self.jacobi_failures.is_empty()
    }

    pub fn jacobi_zero(&self) -> usize {
        self.jacobi_triples - self.jacobi_failures.len()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "passed": self.passed(),
            "closure_failures": self.closure_failures.iter().map(|f| json!({
                "left": f.left, "right": f.right, "term": f.term,
                "expected": f.expected.to_json(), "found": f.found.to_json(),
            })).collect::<Vec<_>>(),
            "antisymmetry_failures": self.antisymmetry_failures.iter().map(|f| json!({
                "left": f.left, "right": f.right, "residual": f.residual,
            })).collect::<Vec<_>>(),
            "jacobi_triples": self.jacobi_triples,
            "jacobi_zero": self.jacobi_zero(),
            "jacobi_failures": self.jacobi_failures.iter().map(|f| json!({
                "triple": f.triple, "residual": f.residual,
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ({} of {} Jacobi triples vanish, {} closure and {} antisymmetry failures)",
            if self.passed() { "pass" } else { "fail" },
            self.jacobi_zero(),
            self.jacobi_triples,
            self.closure_failures.len(),
            self.antisymmetry_failures.len()
        )
    }
}
