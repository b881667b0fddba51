use colorsuper::enveloping::{casimir_eight, casimir_ten_00, casimir_ten_11, EnvelopingPolynomial};
use colorsuper::representation::*;
use colorsuper::{preset_eight, preset_ten, Grading, OspGenerator, OspVersion, RadicalScalar};
use num_bigint::BigInt;
use num_traits::One;

fn s2() -> RadicalScalar {
    RadicalScalar::sqrt_int(2).unwrap()
}

fn state(j: u32, m: i64, a: u8, b: u8) -> StateLabel {
    StateLabel::new(j, m, Grading::new(a, b))
}

#[test]
fn dimensions_and_sector_sizes() {
    for (ell, dim) in [(1, 6), (2, 10), (3, 14), (4, 18), (5, 22)] {
        let rep = build_rep_ten(ell).unwrap();
        assert_eq!(rep.dim(), dim);
        let count = |a, b| rep.states.iter().filter(|s| s.sector == Grading::new(a, b)).count();
        let l = ell as usize;
        assert_eq!([count(0, 0), count(0, 1), count(1, 0), count(1, 1)], [l + 1, l, l, l + 1]);
    }
    assert!(build_rep_ten(0).is_err());
}

#[test]
fn built_reps_verify() {
    for ell in 1..=5 {
        let report = verify_rep(&build_rep_ten(ell).unwrap());
        assert!(report.passed(), "ell={ell}: {}", report.to_json());
        assert_eq!(report.pairs_checked, 55);
    }
}

#[test]
fn built_matches_typeset_ell_two() {
    let built = build_rep_ten(2).unwrap();
    let typeset = embedded_rep(OspVersion::Ten);
    assert_eq!(built.states, typeset.states);
    let diff = compare(&typeset, &built);
    assert!(diff.is_empty(), "{}", discrepancies_json(&diff));
}

#[test]
fn typeset_entries() {
    let ten = embedded_rep(OspVersion::Ten);
    assert_eq!(ten.provenance, Provenance::Embedded);
    // L- maps |2;2> to √2 |2;0> in (0,0)
    assert_eq!(*ten.matrix(OspGenerator::LMinus).unwrap().get(1, 0), s2());
    let rt = ten.matrix(OspGenerator::Rt).unwrap();
    assert_eq!(*rt.get(7, 0), RadicalScalar::from_int(2));
    let eight = embedded_rep(OspVersion::Eight);
    let r = eight.matrix(OspGenerator::R).unwrap();
    let diag: Vec<RadicalScalar> = (0..8).map(|i| r.get(i, i).clone()).collect();
    let want: Vec<RadicalScalar> = [2, 0, -2, 1, -1, 1, -1, 0].iter().map(|&v| RadicalScalar::from_int(v)).collect();
    assert_eq!(diag, want);
}

#[test]
fn typeset_eight_verifies() {
    let report = verify_rep(&embedded_rep(OspVersion::Eight));
    assert!(report.passed(), "{}", report.to_json());
    assert_eq!(report.pairs_checked, 36);
}

#[test]
fn flipped_sign_is_caught() {
    let mut rep = build_rep_ten(2).unwrap();
    let lp = rep.matrices.get_mut("L+").unwrap();
    let v = lp.get(0, 1).clone();
    lp.set(0, 1, -v);
    let report = verify_rep(&rep);
    assert!(!report.passed());
    assert!(report.relation_failures.iter().any(|f| f.left == "L+" && f.right == "L-"));
}

#[test]
fn casimir_values() {
    let ten = preset_ten();
    let rep = build_rep_ten(2).unwrap();
    let c = casimir_scalar(&rep, &casimir_ten_00(&ten).unwrap()).unwrap();
    assert_eq!(c, RadicalScalar::from_int(-6));
    for ell in 1..=4i64 {
        let rep = build_rep_ten(ell as u32).unwrap();
        let c = casimir_scalar(&rep, &casimir_ten_00(&ten).unwrap()).unwrap();
        assert_eq!(c, RadicalScalar::from_int(-ell * (ell + 1)));
    }
    let eight = preset_eight();
    let c = casimir_scalar(&embedded_rep(OspVersion::Eight), &casimir_eight(&eight).unwrap()).unwrap();
    assert_eq!(c, RadicalScalar::from_int(-1));
    let one = EnvelopingPolynomial::constant(colorsuper::rational::int(1));
    assert_eq!(casimir_scalar(&rep, &one).unwrap(), RadicalScalar::one());
}

#[test]
fn casimir_matrix_commutes() {
    let ten = preset_ten();
    let rep = build_rep_ten(3).unwrap();
    for c in [casimir_ten_00(&ten).unwrap(), casimir_ten_11(&ten).unwrap()] {
        let m = evaluate_element(&rep, &c).unwrap();
        for g in OspGenerator::TEN {
            let x = rep.matrix(g).unwrap();
            let comm = m.mul(x).sub(&x.mul(&m));
            if c.grade(&ten).unwrap() == Some(Grading::new(0, 0)) {
                assert!(comm.is_zero(), "{g}");
            }
        }
    }
}

#[test]
fn commutants() {
    let ten = build_rep_ten(2).unwrap();
    let eight = embedded_rep(OspVersion::Eight);
    assert_eq!(graded_commutant_dimension(&ten), 1);
    assert_eq!(graded_commutant_dimension(&eight), 1);
    assert_eq!(commutant_dimension(&eight), 1);
    // the sector swap commutes with everything, so the ungraded module splits
    assert_eq!(commutant_dimension(&ten), 2);
    let swap = sector_swap(&ten).unwrap();
    assert_eq!(swap.mul(&swap), colorsuper::representation::RadicalMatrix::identity(10));
    for x in ten.matrices.values() {
        assert!(swap.mul(x).sub(&x.mul(&swap)).is_zero());
    }
    assert!(sector_swap(&eight).is_none());
    let one = build_rep_ten(1).unwrap();
    let doubled = direct_sum(&one, &one);
    assert_eq!(graded_commutant_dimension(&doubled), 4);
    assert_eq!(commutant_dimension(&doubled), 8);
}

fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product::<BigInt>().max(BigInt::one())
}

#[test]
fn norm_formula() {
    for ell in 1..=5u32 {
        let norms = highest_weight_norms(&build_rep_ten(ell).unwrap());
        assert_eq!(norms.len(), ell as usize + 1);
        for (n, v) in norms.iter().enumerate() {
            let n = n as u32;
            let mut want = factorial(n) * factorial(ell) / factorial(ell - n);
            if n % 2 == 1 {
                want = -want;
            }
            assert_eq!(v.as_rational().unwrap(), colorsuper::Rational::from_integer(want), "ell={ell} n={n}");
        }
    }
}

#[test]
fn spectrum_is_symmetric() {
    for ell in 1..=5i64 {
        let spec = r_spectrum(&build_rep_ten(ell as u32).unwrap());
        assert_eq!(*spec.keys().next().unwrap(), -ell);
        assert_eq!(*spec.keys().next_back().unwrap(), ell);
        // ±ℓ sit in both (0,0) and (1,1), so every eigenvalue is doubled
        for (m, mult) in &spec {
            assert_eq!(*mult, 2, "ell={ell} m={m}");
        }
        assert_eq!(spec.len() as i64, 2 * ell + 1);
    }
}

#[test]
fn ladder_closed_form_agrees() {
    for ell in 1..=5u32 {
        for s in ten_states(ell) {
            for (raising, name) in [(true, "L+"), (false, "L-")] {
                let got = act(name, &s, ell).unwrap();
                let want: Vec<_> = ladder_closed_form(raising, &s).filter(|(_, t)| t.valid_for(ell)).into_iter().collect();
                assert_eq!(got, want, "{name} on {s}");
            }
        }
    }
}

#[test]
fn highest_weight_is_annihilated() {
    let rep = build_rep_ten(3).unwrap();
    for g in [OspGenerator::LPlus, OspGenerator::APlus, OspGenerator::AtPlus, OspGenerator::LtPlus] {
        let m = rep.matrix(g).unwrap();
        assert!((0..rep.dim()).all(|r| m.get(r, 0).is_zero()), "{g}");
    }
    // R² and R̃² agree on the highest state
    let r = rep.matrix(OspGenerator::R).unwrap();
    let rt = rep.matrix(OspGenerator::Rt).unwrap();
    assert_eq!(r.mul(r).get(0, 0), &RadicalScalar::from_int(9));
    assert_eq!(rt.mul(rt).get(0, 0), &RadicalScalar::from_int(9));
}

#[test]
fn act_examples() {
    assert_eq!(act("L-", &state(2, 2, 0, 0), 2).unwrap(), vec![(s2(), state(2, 0, 0, 0))]);
    assert!(act("a+", &state(2, 2, 0, 0), 2).unwrap().is_empty());
    assert_eq!(act("at-", &state(1, 1, 0, 1), 2).unwrap(), vec![(-s2(), state(2, 0, 1, 1))]);
}

#[test]
fn json_round_trip() {
    let rep = build_rep_ten(2).unwrap();
    let text = serde_json::to_string(&rep.to_json()).unwrap();
    let back = Representation::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
    assert_eq!(back.provenance, Provenance::UserSupplied);
    assert_eq!(back.matrices, rep.matrices);
    assert_eq!(back.states, rep.states);
    assert!(verify_rep(&back).passed());

    let mut v = rep.to_json();
    v["matrices"].as_object_mut().unwrap().remove("R");
    let err = Representation::from_json(&v).unwrap_err().to_string();
    assert!(err.contains("matrices.R"), "{err}");
}

#[test]
fn latex_layout() {
    let tex = emit_latex(&embedded_rep(OspVersion::Ten)).unwrap();
    let first = tex.find("L_{+}").unwrap();
    let row = tex[first..].lines().nth(2).unwrap();
    assert_eq!(row.split(" & ").nth(1).unwrap(), "-\\sqrt{2}");
    assert_eq!(tex.matches("\\begin{bmatrix}").count(), 10);
    assert!(tex.find("L_{+}").unwrap() < tex.find("\\tilde{a}_{+}").unwrap());
    assert!(emit_latex(&build_rep_ten(16).unwrap()).is_err());
    assert!(!RadicalScalar::zero().to_latex().is_empty());
}
