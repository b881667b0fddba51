//! The graded osp(1|2) algebras (ten- and eight-generator versions) and the
//! general linear color superalgebra gl(m1,m2|n1,n2).

use std::fmt;
use std::str::FromStr;

use crate::algebra::{Combination, Generator, GradedAlgebra};
use crate::error::AlgebraError;
use crate::grading::Grading;
use crate::rational::{int, Rational};

/// Generators of the graded osp(1|2) algebras, in the frozen PBW order
/// (raising, Cartan, lowering).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OspGenerator {
    LPlus,
    APlus,
    AtPlus,
    LtPlus,
    R,
    Rt,
    LMinus,
    AMinus,
    AtMinus,
    LtMinus,
}

impl OspGenerator {
    pub const TEN: [OspGenerator; 10] = [
        OspGenerator::LPlus,
        OspGenerator::APlus,
        OspGenerator::AtPlus,
        OspGenerator::LtPlus,
        OspGenerator::R,
        OspGenerator::Rt,
        OspGenerator::LMinus,
        OspGenerator::AMinus,
        OspGenerator::AtMinus,
        OspGenerator::LtMinus,
    ];

    pub const EIGHT: [OspGenerator; 8] = [
        OspGenerator::LPlus,
        OspGenerator::APlus,
        OspGenerator::AtPlus,
        OspGenerator::R,
        OspGenerator::Rt,
        OspGenerator::LMinus,
        OspGenerator::AMinus,
        OspGenerator::AtMinus,
    ];

    pub const fn name(self) -> &'static str {
        match self {
            OspGenerator::LPlus => "L+",
            OspGenerator::APlus => "a+",
            OspGenerator::AtPlus => "at+",
            OspGenerator::LtPlus => "Lt+",
            OspGenerator::R => "R",
            OspGenerator::Rt => "Rt",
            OspGenerator::LMinus => "L-",
            OspGenerator::AMinus => "a-",
            OspGenerator::AtMinus => "at-",
            OspGenerator::LtMinus => "Lt-",
        }
    }

    pub const fn latex(self) -> &'static str {
        match self {
            OspGenerator::LPlus => "L_{+}",
            OspGenerator::APlus => "a_{+}",
            OspGenerator::AtPlus => "\\tilde{a}_{+}",
            OspGenerator::LtPlus => "\\tilde{L}_{+}",
            OspGenerator::R => "R",
            OspGenerator::Rt => "\\tilde{R}",
            OspGenerator::LMinus => "L_{-}",
            OspGenerator::AMinus => "a_{-}",
            OspGenerator::AtMinus => "\\tilde{a}_{-}",
            OspGenerator::LtMinus => "\\tilde{L}_{-}",
        }
    }

    pub const fn grade(self) -> Grading {
        match self {
            OspGenerator::LPlus | OspGenerator::R | OspGenerator::LMinus => Grading::new(0, 0),
            OspGenerator::APlus | OspGenerator::AMinus => Grading::new(0, 1),
            OspGenerator::AtPlus | OspGenerator::AtMinus => Grading::new(1, 0),
            OspGenerator::LtPlus | OspGenerator::Rt | OspGenerator::LtMinus => Grading::new(1, 1),
        }
    }

    /// Eigenvalue under `ad R`.
    pub const fn r_weight(self) -> i64 {
        match self {
            OspGenerator::LPlus | OspGenerator::LtPlus => 2,
            OspGenerator::APlus | OspGenerator::AtPlus => 1,
            OspGenerator::R | OspGenerator::Rt => 0,
            OspGenerator::AMinus | OspGenerator::AtMinus => -1,
            OspGenerator::LMinus | OspGenerator::LtMinus => -2,
        }
    }
}

impl fmt::Display for OspGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OspGenerator {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        OspGenerator::TEN
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| AlgebraError::UnknownGenerator(s.to_string()))
    }
}

/// Which graded osp(1|2) variant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OspVersion {
    Ten,
    Eight,
}

impl OspVersion {
    pub const fn name(self) -> &'static str {
        match self {
            OspVersion::Ten => "ten",
            OspVersion::Eight => "eight",
        }
    }

    pub fn generators(self) -> &'static [OspGenerator] {
        match self {
            OspVersion::Ten => &OspGenerator::TEN,
            OspVersion::Eight => &OspGenerator::EIGHT,
        }
    }

    pub fn algebra(self) -> GradedAlgebra {
        match self {
            OspVersion::Ten => preset_ten(),
            OspVersion::Eight => preset_eight(),
        }
    }
}

impl FromStr for OspVersion {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ten" => Ok(OspVersion::Ten),
            "eight" => Ok(OspVersion::Eight),
            other => Err(format!("unknown preset `{other}` (expected ten|eight)")),
        }
    }
}

fn osp_skeleton(gens: &[OspGenerator]) -> GradedAlgebra {
    GradedAlgebra::new(
        gens.iter()
            .map(|g| Generator {
                name: g.name().to_string(),
                grade: g.grade(),
            })
            .collect(),
    )
    .expect("distinct names")
}

type Row<'a> = (&'a str, &'a str, &'a [(i64, &'a str)]);

fn fill(alg: &mut GradedAlgebra, rows: &[Row<'_>]) {
    for (l, r, terms) in rows {
        let terms: Vec<(Rational, &str)> = terms.iter().map(|(c, g)| (int(*c), *g)).collect();
        alg.set_bracket_named(l, r, &terms).expect("preset names");
    }
}

/// The ten-generator algebra `{R, L±, a±, R̃, L̃±, ã±}`.
pub fn preset_ten() -> GradedAlgebra {
    let mut alg = osp_skeleton(&OspGenerator::TEN);
    #[rustfmt::skip]
    let rows: &[Row<'_>] = &[
        ("R", "L+", &[(2, "L+")]),
        ("R", "L-", &[(-2, "L-")]),
        ("R", "Lt+", &[(2, "Lt+")]),
        ("R", "Lt-", &[(-2, "Lt-")]),
        ("R", "a+", &[(1, "a+")]),
        ("R", "a-", &[(-1, "a-")]),
        ("R", "at+", &[(1, "at+")]),
        ("R", "at-", &[(-1, "at-")]),
        ("Rt", "L+", &[(2, "Lt+")]),
        ("Rt", "L-", &[(-2, "Lt-")]),
        ("Rt", "Lt+", &[(2, "L+")]),
        ("Rt", "Lt-", &[(-2, "L-")]),
        ("Rt", "a+", &[(1, "at+")]),
        ("Rt", "a-", &[(1, "at-")]),
        ("Rt", "at+", &[(1, "a+")]),
        ("Rt", "at-", &[(1, "a-")]),
        ("L+", "L-", &[(-1, "R")]),
        ("L+", "Lt-", &[(-1, "Rt")]),
        ("L-", "Lt+", &[(1, "Rt")]),
        ("Lt+", "Lt-", &[(-1, "R")]),
        ("L+", "at-", &[(1, "at+")]),
        ("L-", "at+", &[(-1, "at-")]),
        ("L+", "a-", &[(-1, "a+")]),
        ("L-", "a+", &[(1, "a-")]),
        ("Lt+", "a-", &[(-1, "at+")]),
        ("Lt-", "a+", &[(-1, "at-")]),
        ("Lt+", "at-", &[(1, "a+")]),
        ("Lt-", "at+", &[(1, "a-")]),
        ("a+", "a-", &[(2, "R")]),
        ("a+", "at-", &[(2, "Rt")]),
        ("a-", "at+", &[(-2, "Rt")]),
        ("at-", "at+", &[(2, "R")]),
        ("a+", "at+", &[(-4, "Lt+")]),
        ("a-", "at-", &[(4, "Lt-")]),
        ("a+", "a+", &[(4, "L+")]),
        ("a-", "a-", &[(4, "L-")]),
        ("at+", "at+", &[(-4, "L+")]),
        ("at-", "at-", &[(-4, "L-")]),
    ];
    fill(&mut alg, rows);
    alg
}

/// The eight-generator algebra `{R, L±, a±, R̃, ã±}`.
pub fn preset_eight() -> GradedAlgebra {
    let mut alg = osp_skeleton(&OspGenerator::EIGHT);
    #[rustfmt::skip]
    let rows: &[Row<'_>] = &[
        ("R", "L+", &[(2, "L+")]),
        ("R", "L-", &[(-2, "L-")]),
        ("L+", "L-", &[(-1, "R")]),
        ("R", "a+", &[(1, "a+")]),
        ("R", "a-", &[(-1, "a-")]),
        ("R", "at+", &[(1, "at+")]),
        ("R", "at-", &[(-1, "at-")]),
        ("L+", "a-", &[(-1, "a+")]),
        ("L-", "a+", &[(1, "a-")]),
        ("Rt", "a+", &[(1, "at+")]),
        ("Rt", "a-", &[(-1, "at-")]),
        ("Rt", "at+", &[(-1, "a+")]),
        ("Rt", "at-", &[(1, "a-")]),
        ("a+", "a-", &[(2, "R")]),
        ("a+", "at-", &[(2, "Rt")]),
        ("a-", "at+", &[(2, "Rt")]),
        ("at-", "at+", &[(2, "R")]),
        ("L+", "at-", &[(1, "at+")]),
        ("L-", "at+", &[(-1, "at-")]),
        ("a+", "a+", &[(4, "L+")]),
        ("a-", "a-", &[(4, "L-")]),
        ("at+", "at+", &[(-4, "L+")]),
        ("at-", "at-", &[(-4, "L-")]),
    ];
    fill(&mut alg, rows);
    alg
}

/// Graded index of row/column `i` (1-based) in gl(m1,m2|n1,n2).
fn gl_index_grade(i: usize, m1: usize, m2: usize, n1: usize) -> Grading {
    if i <= m1 {
        Grading::new(0, 0)
    } else if i <= m1 + m2 {
        Grading::new(1, 1)
    } else if i <= m1 + m2 + n1 {
        Grading::new(1, 0)
    } else {
        Grading::new(0, 1)
    }
}

pub fn gl_generator_name(i: usize, j: usize, size: usize) -> String {
    if size <= 9 {
        format!("E{i}{j}")
    } else {
        format!("E{i}_{j}")
    }
}

/// gl(m1,m2|n1,n2) on elementary matrices `Eᵢⱼ` (row-major order) with
/// `⟦Eᵢⱼ, Eₖₗ⟧ = δⱼₖ Eᵢₗ − (−1)^(d̄ᵢⱼ·d̄ₖₗ) δᵢₗ Eₖⱼ`.
pub fn preset_gl(m1: usize, m2: usize, n1: usize, n2: usize) -> Result<GradedAlgebra, AlgebraError> {
    let size = m1 + m2 + n1 + n2;
    if size == 0 {
        return Err(AlgebraError::EmptyAlgebra);
    }
    let d = |i: usize| gl_index_grade(i, m1, m2, n1);
    let idx = |i: usize, j: usize| (i - 1) * size + (j - 1);
    let mut gens = Vec::with_capacity(size * size);
    for i in 1..=size {
        for j in 1..=size {
            gens.push(Generator {
                name: gl_generator_name(i, j, size),
                grade: d(i) + d(j),
            });
        }
    }
    let mut alg = GradedAlgebra::new(gens)?;
    for i in 1..=size {
        for j in 1..=size {
            for k in 1..=size {
                for l in 1..=size {
                    let (a, b) = (idx(i, j), idx(k, l));
                    if a > b {
                        continue;
                    }
                    let mut value = Combination::zero();
                    if j == k {
                        value.add_term(idx(i, l), int(1));
                    }
                    if i == l {
                        let s = (d(i) + d(j)).sign(d(k) + d(l));
                        value.add_term(idx(k, j), int(-s));
                    }
                    alg.set_bracket(a, b, value)?;
                }
            }
        }
    }
    Ok(alg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn ten_grades_and_brackets() {
        let alg = preset_ten();
        assert_eq!(alg.dim(), 10);
        for g in OspGenerator::TEN {
            assert_eq!(alg.grade(alg.index_of(g.name()).unwrap()), g.grade());
        }
        let lp = alg.index_of("L+").unwrap();
        assert_eq!(alg.bracket_named("R", "L+").unwrap(), Combination::term(lp, int(2)));
        let ltp = alg.index_of("Lt+").unwrap();
        assert_eq!(alg.bracket_named("a+", "at+").unwrap(), Combination::term(ltp, int(-4)));
        let r = alg.index_of("R").unwrap();
        assert_eq!(alg.bracket_named("at-", "at+").unwrap(), Combination::term(r, int(2)));
        assert_eq!(alg.bracket_named("at+", "at-").unwrap(), Combination::term(r, int(2)));
    }

    #[test]
    fn eight_has_no_tilde_l() {
        let alg = preset_eight();
        assert_eq!(alg.dim(), 8);
        assert!(alg.index_of("Lt+").is_err());
        assert!(alg.bracket_named("a+", "at+").unwrap().is_zero());
    }

    #[test]
    fn ad_r_weights_match_triangular_table() {
        for version in [OspVersion::Ten, OspVersion::Eight] {
            let alg = version.algebra();
            let r = alg.index_of("R").unwrap();
            for g in version.generators() {
                let x = alg.index_of(g.name()).unwrap();
                assert_eq!(alg.ad_eigenvalue(r, x), Some(int(g.r_weight())), "{g}");
            }
        }
    }

    #[test]
    fn gl_grades_and_bracket() {
        let alg = preset_gl(1, 1, 1, 1).unwrap();
        assert_eq!(alg.dim(), 16);
        assert_eq!(alg.grade(alg.index_of("E12").unwrap()), Grading::new(1, 1));
        let e11 = alg.index_of("E11").unwrap();
        let e22 = alg.index_of("E22").unwrap();
        assert_eq!(
            alg.bracket_named("E12", "E21").unwrap(),
            Combination::from_terms([(e11, int(1)), (e22, int(-1))])
        );
        assert!(matches!(preset_gl(0, 0, 0, 0), Err(AlgebraError::EmptyAlgebra)));
    }

    #[test]
    fn named_sub_superalgebras_close() {
        let alg = preset_ten();
        for extra in [Grading::new(0, 1), Grading::new(1, 0)] {
            let subset = alg.sector_indices(&[Grading::ZERO, extra]);
            assert!(alg.subalgebra_violations(&subset).is_empty());
        }
        // (0,0) ⊕ (1,1) contains R̃ and L̃±, and also closes.
        let subset = alg.sector_indices(&[Grading::ZERO, Grading::new(1, 1)]);
        assert!(alg.subalgebra_violations(&subset).is_empty());
        let odd_only = alg.sector_indices(&[Grading::new(0, 1)]);
        assert!(!alg.subalgebra_violations(&odd_only).is_empty());
    }
}
