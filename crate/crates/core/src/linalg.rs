//! Exact sparse elimination.
//!
//! Rational systems are cleared to integer rows and eliminated fraction-free:
//! a row is reduced against a pivot row by `p·row − a·pivot` and then divided
//! by the gcd of its entries, so no fractions appear until back-substitution.
//! Systems over [`RadicalScalar`] normalize single-term pivots to one and fall
//! back to the same fraction-free step for multi-term pivots.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::radical::RadicalScalar;
use crate::rational::Rational;

pub type SparseRow<T> = BTreeMap<usize, T>;

/// Row echelon form over ℤ built one equation at a time.
#[derive(Clone, Debug)]
pub struct IntegerEchelon {
    ncols: usize,
    pivots: BTreeMap<usize, SparseRow<BigInt>>,
}

fn primitive(mut row: SparseRow<BigInt>) -> SparseRow<BigInt> {
    let mut g = BigInt::zero();
    for v in row.values() {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    let lead_negative = row.values().next().is_some_and(|v| v.is_negative());
    if lead_negative {
        g = -g;
    }
    if !g.is_one() && !g.is_zero() {
        for v in row.values_mut() {
            *v /= &g;
        }
    }
    row
}

fn clear_denominators(row: &SparseRow<Rational>) -> SparseRow<BigInt> {
    let l = row
        .values()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    row.iter()
        .filter(|(_, q)| !q.is_zero())
        .map(|(c, q)| (*c, q.numer() * (&l / q.denom())))
        .collect()
}

impl IntegerEchelon {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    pub fn insert_rational(&mut self, row: &SparseRow<Rational>) -> bool {
        self.insert(clear_denominators(row))
    }

    /// Adds an equation; returns `true` if it raised the rank.
    pub fn insert(&mut self, row: SparseRow<BigInt>) -> bool {
        let mut row: SparseRow<BigInt> = row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        loop {
            let Some((&lead, a)) = row.iter().next() else {
                return false;
            };
            debug_assert!(lead < self.ncols, "column {lead} out of range");
            let Some(pivot) = self.pivots.get(&lead) else {
                self.pivots.insert(lead, primitive(row));
                return true;
            };
            let p = &pivot[&lead];
            let g = a.gcd(p);
            let row_factor = p / &g;
            let pivot_factor = a / &g;
            let mut next = SparseRow::new();
            for (c, v) in &row {
                next.insert(*c, v * &row_factor);
            }
            for (c, v) in pivot {
                let slot = next.entry(*c).or_insert_with(BigInt::zero);
                *slot -= v * &pivot_factor;
                if slot.is_zero() {
                    next.remove(c);
                }
            }
            row = primitive(next);
        }
    }

    /// Basis of the right nullspace, one vector per free column, with that
    /// free column set to one.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        (0..self.ncols)
            .filter(|c| !self.pivots.contains_key(c))
            .map(|free| self.back_substitute(free))
            .collect()
    }

    fn back_substitute(&self, free: usize) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.ncols];
        x[free] = Rational::one();
        for (&p, row) in self.pivots.iter().rev() {
            let mut acc = Rational::zero();
            for (&c, v) in row.range(p + 1..) {
                if !x[c].is_zero() {
                    acc += &x[c] * Rational::from_integer(v.clone());
                }
            }
            x[p] = -acc / Rational::from_integer(row[&p].clone());
        }
        x
    }
}

/// Nullspace basis of a rational system given as sparse rows.
pub fn nullspace(rows: &[SparseRow<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut ech = IntegerEchelon::new(ncols);
    for row in rows {
        ech.insert_rational(row);
    }
    ech.nullspace()
}

/// One affine equation `Σ coeffs[k]·u_k + constant = 0`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AffineEquation {
    pub coeffs: SparseRow<Rational>,
    pub constant: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AffineSolution {
    Inconsistent,
    Solved {
        particular: Vec<Rational>,
        homogeneous: Vec<Vec<Rational>>,
    },
}

impl AffineSolution {
    /// The solution when it is unique.
    pub fn unique(&self) -> Option<&[Rational]> {
        match self {
            AffineSolution::Solved {
                particular,
                homogeneous,
            } if homogeneous.is_empty() => Some(particular),
            _ => None,
        }
    }
}

/// Solves an inhomogeneous system by homogenizing with an extra last column.
pub fn solve_affine(equations: &[AffineEquation], nunknowns: usize) -> AffineSolution {
    let mut ech = IntegerEchelon::new(nunknowns + 1);
    for eq in equations {
        let mut row = eq.coeffs.clone();
        if !eq.constant.is_zero() {
            row.insert(nunknowns, eq.constant.clone());
        }
        ech.insert_rational(&row);
    }
    if ech.pivots.contains_key(&nunknowns) {
        return AffineSolution::Inconsistent;
    }
    let mut particular = ech.back_substitute(nunknowns);
    particular.truncate(nunknowns);
    let homogeneous = (0..nunknowns)
        .filter(|c| !ech.pivots.contains_key(c))
        .map(|free| {
            let mut v = ech.back_substitute(free);
            v.truncate(nunknowns);
            v
        })
        .collect();
    AffineSolution::Solved {
        particular,
        homogeneous,
    }
}

/// Row echelon form over the radical ring, tracking rank only.
#[derive(Clone, Debug, Default)]
pub struct RadicalEchelon {
    pivots: BTreeMap<usize, SparseRow<RadicalScalar>>,
}

impl RadicalEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn normalize(row: SparseRow<RadicalScalar>) -> SparseRow<RadicalScalar> {
        let inv = row
            .values()
            .next()
            .and_then(|lead| lead.invert_single_term().ok());
        match inv {
            Some(inv) => row.into_iter().map(|(c, v)| (c, &v * &inv)).collect(),
            None => row,
        }
    }

    pub fn insert(&mut self, row: SparseRow<RadicalScalar>) -> bool {
        let mut row: SparseRow<RadicalScalar> =
            row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        loop {
            let Some((&lead, a)) = row.iter().next() else {
                return false;
            };
            let Some(pivot) = self.pivots.get(&lead) else {
                self.pivots.insert(lead, Self::normalize(row));
                return true;
            };
            let p = &pivot[&lead];
            let a = a.clone();
            let mut next = SparseRow::new();
            if p.is_one() {
                next = row;
            } else {
                for (c, v) in &row {
                    let s = v * p;
                    if !s.is_zero() {
                        next.insert(*c, s);
                    }
                }
            }
            for (c, v) in pivot {
                let slot = next.entry(*c).or_default();
                *slot -= &(v * &a);
                if slot.is_zero() {
                    next.remove(c);
                }
            }
            row = Self::normalize(next);
        }
    }
}
