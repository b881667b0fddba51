use colorsuper::algebra::Combination;
use colorsuper::enveloping::{normal_order, normal_order_with, WordPolynomial};
use colorsuper::radical::{is_squarefree, sqrt_rational};
use colorsuper::rational::{int, rat};
use colorsuper::{preset_eight, preset_gl, preset_ten, GradedAlgebra, RadicalScalar, Rational};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

const RADICANDS: [u64; 6] = [1, 2, 3, 5, 6, 7];

fn scalar() -> impl Strategy<Value = RadicalScalar> {
    prop::collection::vec((-6i64..=6, 1i64..=4, prop::sample::select(RADICANDS.to_vec())), 0..4).prop_map(|terms| {
        terms.into_iter().fold(RadicalScalar::zero(), |acc, (n, d, r)| {
            &acc + &RadicalScalar::term(rat(n, d), r)
        })
    })
}

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #[test]
    fn ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &RadicalScalar::one(), a.clone());
    }

    #[test]
    fn canonical_form(a in scalar(), b in scalar()) {
        let p = &a * &b;
        for (r, q) in p.terms() {
            prop_assert!(is_squarefree(r));
            prop_assert!(!q.is_zero());
        }
        // equal values have equal representations
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
    }

    #[test]
    fn json_round_trip(a in scalar()) {
        let back = RadicalScalar::from_json(&a.to_json()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn square_root_squares_back(q in rational()) {
        let q = q.abs();
        let s = sqrt_rational(&q).unwrap();
        prop_assert_eq!(&s * &s, RadicalScalar::from_rational(q));
    }

    #[test]
    fn float_image_is_a_homomorphism(a in scalar(), b in scalar()) {
        let p = (&a * &b).to_f64();
        prop_assert!((p - a.to_f64() * b.to_f64()).abs() < 1e-9 * (1.0 + p.abs()));
    }
}

fn word_strategy(n: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..n, 0..=6)
}

fn check_confluence(alg: &GradedAlgebra, word: Vec<usize>, choices: Vec<usize>) -> Result<(), TestCaseError> {
    let p = WordPolynomial::word(word.clone(), int(1));
    let left = normal_order(alg, &p);
    let mut it = choices.into_iter().cycle();
    let other = normal_order_with(alg, &p, |n| it.next().unwrap_or(0) % n);
    prop_assert_eq!(&left, &other);
    // filtration: ordering never raises the degree
    prop_assert!(left.degree() <= word.len());
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_order_is_confluent_ten(word in word_strategy(10), choices in prop::collection::vec(0usize..8, 1..16)) {
        check_confluence(&preset_ten(), word, choices)?;
    }

    #[test]
    fn normal_order_is_confluent_eight(word in word_strategy(8), choices in prop::collection::vec(0usize..8, 1..16)) {
        check_confluence(&preset_eight(), word, choices)?;
    }

    #[test]
    fn bracket_antisymmetry(i in 0usize..10, j in 0usize..10) {
        let alg = preset_ten();
        let s = alg.grade(i).sign(alg.grade(j));
        let back = alg.bracket_generators(j, i).scaled(&int(-s));
        prop_assert_eq!(alg.bracket_generators(i, j), back);
    }

    #[test]
    fn random_coefficient_change_breaks_jacobi(entry in any::<prop::sample::Index>(), delta in rational()) {
        prop_assume!(!delta.is_zero());
        let alg = preset_ten();
        let entries: Vec<(usize, usize, usize)> = alg
            .table_entries()
            .flat_map(|(i, j, c)| c.iter().map(move |(k, _)| (i, j, k)).collect::<Vec<_>>())
            .collect();
        let (i, j, k) = entries[entry.index(entries.len())];
        prop_assert!(!perturbed(&alg, i, j, k, &delta).validate().jacobi_failures.is_empty());
    }
}

fn perturbed(alg: &GradedAlgebra, i: usize, j: usize, k: usize, delta: &Rational) -> GradedAlgebra {
    let mut alg = alg.clone();
    let mut value: Combination = alg.bracket_generators(i, j);
    value.add_term(k, delta.clone());
    alg.set_bracket(i, j, value).unwrap();
    alg
}

#[test]
fn every_single_entry_change_breaks_jacobi() {
    let alg = preset_ten();
    let entries: Vec<(usize, usize, usize)> = alg
        .table_entries()
        .flat_map(|(i, j, c)| c.iter().map(move |(k, _)| (i, j, k)).collect::<Vec<_>>())
        .collect();
    assert!(entries.len() > 20);
    for (i, j, k) in entries {
        for delta in [int(1), int(-1), rat(1, 2), int(-2)] {
            let report = perturbed(&alg, i, j, k, &delta).validate();
            assert!(
                !report.jacobi_failures.is_empty(),
                "[{}, {}] coefficient of {} shifted by {delta}",
                alg.name(i),
                alg.name(j),
                alg.name(k)
            );
        }
    }
}

#[test]
fn presets_validate() {
    for (alg, triples) in [(preset_ten(), 1000), (preset_eight(), 512), (preset_gl(1, 1, 1, 1).unwrap(), 4096)] {
        let report = alg.validate();
        assert!(report.passed(), "{report}");
        assert_eq!(report.jacobi_triples, triples);
    }
}
