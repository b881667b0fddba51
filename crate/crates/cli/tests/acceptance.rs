//! One line per acceptance criterion. Expected values are written out here,
//! independent of the library's own constructors.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use colorsuper::algebra::Combination;
use colorsuper::diffreal::{
    casimir_value, printed_realization, repair_realization, template_free_terms, verify_realization,
    RepairOutcome,
};
use colorsuper::enveloping::{
    casimir_ten_00, casimir_ten_00_lowered, graded_commutator, normal_order, solve_casimir, Centrality,
    PbwMonomial, WordPolynomial,
};
use colorsuper::rational::{int, rat};
use colorsuper::representation::{
    build_rep_ten, casimir_scalar, commutant_dimension, compare, embedded_rep, graded_commutant_dimension,
    highest_weight_norms, r_spectrum, sector_swap, verify_rep,
};
use colorsuper::{
    preset_eight, preset_gl, preset_ten, EnvelopingPolynomial, GradedAlgebra, Grading, OspVersion, RadicalScalar,
    Rational,
};
use colorsuper_cli::run;

struct Outcome {
    passed: bool,
    /// A failure that matches the recorded explanation exactly.
    explained: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        explained: false,
        detail: detail.into(),
    }
}

/// Criteria that cannot be met as stated, with the observed result they must keep producing.
const KNOWN_RED: &[(u32, &str)] = &[(
    6,
    "ordinary commutant of the ten-generator rep is 2: the sector swap commutes with every generator",
)];

fn mono(alg: &GradedAlgebra, names: &[&str]) -> PbwMonomial {
    let w: Vec<usize> = names.iter().map(|n| alg.index_of(n).unwrap()).collect();
    PbwMonomial::from_word(alg, &w).unwrap()
}

/// `p` is a non-zero multiple of `Σ cᵢ·mᵢ` and has no other terms.
fn proportional(alg: &GradedAlgebra, p: &EnvelopingPolynomial, expected: &[(&[&str], Rational)]) -> bool {
    if p.len() != expected.len() {
        return false;
    }
    let mut scale: Option<Rational> = None;
    for (names, c) in expected {
        let Some(v) = p.coeff(&mono(alg, names)) else {
            return false;
        };
        let r = v / c;
        match &scale {
            None => scale = Some(r),
            Some(s) if *s == r => {}
            Some(_) => return false,
        }
    }
    scale.is_some_and(|s| s != int(0))
}

fn criterion_1() -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for (name, alg, triples) in [
        ("ten", preset_ten(), 1000),
        ("eight", preset_eight(), 512),
        ("gl(1,1|1,1)", preset_gl(1, 1, 1, 1).unwrap(), 4096),
    ] {
        let r = alg.validate();
        ok &= r.passed() && r.jacobi_triples == triples;
        parts.push(format!("{name} {}/{}", r.jacobi_zero(), r.jacobi_triples));
    }
    let alg = preset_ten();
    let entries: Vec<(usize, usize, usize)> = alg
        .table_entries()
        .flat_map(|(i, j, c)| c.iter().map(move |(k, _)| (i, j, k)).collect::<Vec<_>>())
        .collect();
    let mut caught = 0;
    for &(i, j, k) in &entries {
        let mut broken = alg.clone();
        let mut v: Combination = broken.bracket_generators(i, j);
        v.add_term(k, int(1));
        broken.set_bracket(i, j, v).unwrap();
        if !broken.validate().jacobi_failures.is_empty() {
            caught += 1;
        }
    }
    ok &= caught == entries.len();
    parts.push(format!("faults caught {caught}/{}", entries.len()));
    outcome(ok, parts.join(", "))
}

fn criterion_2() -> Outcome {
    let alg = preset_ten();
    let sol = solve_casimir(&alg, Grading::ZERO, Centrality::Graded);
    let expected: [(&[&str], Rational); 7] = [
        (&["R"], int(1)),
        (&["R", "R"], rat(-1, 2)),
        (&["Rt", "Rt"], rat(-1, 2)),
        (&["L+", "L-"], int(2)),
        (&["Lt+", "Lt-"], int(2)),
        (&["a+", "a-"], rat(1, 2)),
        (&["at+", "at-"], rat(1, 2)),
    ];
    let ray_ok = sol.rays.len() == 1 && proportional(&alg, &sol.rays[0], &expected);
    // the lowered form with every pair written minus-first
    let lowered = WordPolynomial::from_named(
        &alg,
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
    .unwrap();
    let forms_agree = normal_order(&alg, &lowered) == casimir_ten_00(&alg).unwrap()
        && casimir_ten_00(&alg).unwrap() == casimir_ten_00_lowered(&alg).unwrap();
    let central = sol
        .rays
        .first()
        .is_some_and(|r| (0..alg.dim()).all(|x| graded_commutator(&alg, r, x).unwrap().is_zero()));
    outcome(
        ray_ok && forms_agree && central,
        format!(
            "nullity {}, ratios {}, printed forms agree {}, central for all 10 {}",
            sol.rays.len(),
            ray_ok,
            forms_agree,
            central
        ),
    )
}

fn criterion_3() -> Outcome {
    let alg = preset_ten();
    let sol = solve_casimir(&alg, Grading::new(1, 1), Centrality::Graded);
    let expected: [(&[&str], Rational); 6] = [
        (&["L+", "Lt-"], int(1)),
        (&["Lt+", "L-"], int(1)),
        (&["a+", "at-"], rat(1, 4)),
        (&["at+", "a-"], rat(1, 4)),
        (&["Rt"], rat(1, 2)),
        (&["R", "Rt"], rat(-1, 2)),
    ];
    let ok = sol.rays.len() == 1 && proportional(&alg, &sol.rays[0], &expected);
    let ordinary = solve_casimir(&alg, Grading::new(1, 1), Centrality::Ordinary).rays.len();
    outcome(
        ok,
        format!(
            "graded nullity {}, ratios {ok}; ordinary-commutator nullity {ordinary}",
            sol.rays.len()
        ),
    )
}

fn criterion_4() -> Outcome {
    let alg = preset_eight();
    let sol = solve_casimir(&alg, Grading::ZERO, Centrality::Graded);
    let expected: [(&[&str], Rational); 5] = [
        (&["R", "R"], rat(-1, 4)),
        (&["Rt", "Rt"], rat(-1, 4)),
        (&["L+", "L-"], int(1)),
        (&["a+", "a-"], rat(1, 4)),
        (&["at+", "at-"], rat(1, 4)),
    ];
    let zero_ok = sol.rays.len() == 1 && proportional(&alg, &sol.rays[0], &expected);
    let one_one = solve_casimir(&alg, Grading::new(1, 1), Centrality::Graded).rays.len();
    outcome(
        zero_ok && one_one == 0,
        format!("(0,0) nullity {}, ratios {zero_ok}; (1,1) nullity {one_one}", sol.rays.len()),
    )
}

fn criterion_5() -> Outcome {
    let built = build_rep_ten(2).unwrap();
    let v = verify_rep(&built);
    let diff = compare(&embedded_rep(OspVersion::Ten), &built);
    let ok = built.dim() == 10 && v.passed() && v.pairs_checked == 55;
    outcome(
        ok,
        format!(
            "dim {}, {}/{} pairs pass, {} differences from the typeset matrices",
            built.dim(),
            v.pairs_checked - v.relation_failures.len(),
            v.pairs_checked,
            diff.len()
        ),
    )
}

fn criterion_6() -> Outcome {
    let ten_alg = preset_ten();
    let rep = build_rep_ten(2).unwrap();
    let c = casimir_scalar(&rep, &casimir_ten_00(&ten_alg).unwrap());
    let c_ok = matches!(&c, Ok(v) if *v == RadicalScalar::from_int(-6));
    let eight = embedded_rep(OspVersion::Eight);
    let ten_ordinary = commutant_dimension(&rep);
    let eight_ordinary = commutant_dimension(&eight);
    let ten_graded = graded_commutant_dimension(&rep);
    let eight_graded = graded_commutant_dimension(&eight);
    let swap_commutes = sector_swap(&rep)
        .is_some_and(|j| rep.matrices.values().all(|x| j.mul(x).sub(&x.mul(&j)).is_zero()));
    let c_text = match &c {
        Ok(v) => v.to_string(),
        Err(e) => e.to_string(),
    };
    let mut out = outcome(
        c_ok && ten_ordinary == 1 && eight_ordinary == 1,
        format!(
            "casimir {c_text}·I (|c| = 6, sign negative); commutant ten {ten_ordinary}, eight {eight_ordinary}; \
             sector-preserving commutant ten {ten_graded}, eight {eight_graded}; sector swap commutes {swap_commutes}"
        ),
    );
    out.explained = c_ok
        && ten_ordinary == 2
        && swap_commutes
        && eight_ordinary == 1
        && ten_graded == 1
        && eight_graded == 1;
    out
}

fn factorial(n: i64) -> Rational {
    (1..=n).fold(int(1), |acc, k| acc * int(k))
}

fn criterion_7() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (ell, dim) in [(1u32, 6usize), (3, 14), (4, 18), (5, 22)] {
        let rep = build_rep_ten(ell).unwrap();
        let verified = verify_rep(&rep).passed();
        let spec = r_spectrum(&rep);
        let symmetric = spec.keys().next().map(|q| -q) == spec.keys().next_back().copied()
            && spec.keys().next_back() == Some(&(ell as i64));
        let l = ell as i64;
        let norms_ok = highest_weight_norms(&rep).iter().enumerate().all(|(n, v)| {
            let n = n as i64;
            let sign = if n % 2 == 0 { int(1) } else { int(-1) };
            let want = sign * factorial(n) * factorial(l) / factorial(l - n);
            v.as_rational() == Some(want)
        });
        ok &= rep.dim() == dim && verified && symmetric && norms_ok;
        parts.push(format!(
            "ℓ={ell}: dim {}, verify {verified}, q_max=-q_min {symmetric}, norms {norms_ok}",
            rep.dim()
        ));
    }
    outcome(ok, parts.join("; "))
}

fn criterion_8() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for version in [OspVersion::Ten, OspVersion::Eight] {
        let alg = version.algebra();
        let printed = printed_realization(version);
        let report = verify_realization(&alg, &printed, 4).unwrap();
        let pairs = alg.dim() * (alg.dim() + 1) / 2;
        ok &= report.pairs.len() == pairs;
        let failed = report.failures().count();
        let mut active = printed.clone();
        if failed > 0 {
            let flagged = report.flagged_generators();
            let top = flagged.iter().max_by_key(|(_, c)| **c).map(|(g, _)| g.clone()).unwrap();
            let (template, n) = template_free_terms(&printed, &top).unwrap();
            match repair_realization(&alg, &template, n) {
                Ok(RepairOutcome::Unique { realization, .. }) => active = realization,
                other => {
                    ok = false;
                    parts.push(format!("{}: repair of {top} gave {other:?}", version.name()));
                }
            }
            parts.push(format!("{}: {failed}/{pairs} flagged, repaired {top}", version.name()));
        } else {
            parts.push(format!("{}: {pairs}/{pairs} pass", version.name()));
        }
        let after = verify_realization(&alg, &active, 4).unwrap();
        ok &= after.passed() && after.routes_agree();
        if version == OspVersion::Ten {
            match casimir_value(&alg, &active, &casimir_ten_00(&alg).unwrap()) {
                Ok(p) => parts.push(format!("C00 -> {}", p.pretty())),
                Err(e) => {
                    ok = false;
                    parts.push(e.to_string());
                }
            }
        }
    }
    outcome(ok, parts.join("; "))
}

fn report_commands() -> Vec<&'static str> {
    vec![
        "algebra check --preset ten",
        "algebra check --preset eight",
        "algebra check --preset gl --dims 1,1,1,1",
        "casimir solve --preset ten --sector 0,0",
        "casimir solve --preset ten --sector 1,1",
        "casimir solve --preset eight --sector 0,0",
        "casimir solve --preset eight --sector 1,1",
        "rep build --preset ten --ell 2",
        "rep compare --built --embedded",
        "rep build --preset ten --ell 1",
        "rep build --preset ten --ell 3",
        "rep build --preset ten --ell 4",
        "rep build --preset ten --ell 5",
        "diffreal verify --preset ten --max-degree 4 --repair",
        "diffreal verify --preset eight --max-degree 4",
    ]
}

fn criterion_9() -> Outcome {
    let mut same = 0;
    let cmds = report_commands();
    for cmd in &cmds {
        let argv: Vec<&str> = cmd.split_whitespace().collect();
        let a = run(argv.clone()).to_pretty_string();
        let b = run(argv).to_pretty_string();
        if a == b {
            same += 1;
        }
    }
    outcome(same == cmds.len(), format!("{same}/{} reports byte-identical", cmds.len()))
}

/// Number, title, check and time limit in seconds.
type Criterion = (u32, &'static str, fn() -> Outcome, u64);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (1, "Jacobi suites", criterion_1, 5),
        (2, "Casimir (0,0), ten generators", criterion_2, 10),
        (3, "Casimir (1,1), ten generators", criterion_3, 10),
        (4, "Casimirs, eight generators", criterion_4, 10),
        (5, "ℓ=2 ten-generator representation", criterion_5, 5),
        (6, "Casimir scalarity and irreducibility", criterion_6, 10),
        (7, "general ℓ", criterion_7, 30),
        (8, "differential realizations", criterion_8, 60),
        (9, "determinism", criterion_9, 120),
    ];
    let mut unexpected = 0;
    for (n, title, f, limit) in criteria {
        let start = Instant::now();
        let out = f();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(limit);
        let passed = out.passed && in_time;
        println!(
            "criterion {n} {}: {title}: {} ({:.2} s, limit {limit} s)",
            if passed { "PASS" } else { "FAIL" },
            out.detail,
            elapsed.as_secs_f64()
        );
        match KNOWN_RED.iter().find(|(k, _)| *k == n) {
            Some((_, why)) if !out.passed && out.explained && in_time => println!("    known red: {why}"),
            Some(_) if !out.passed => unexpected += 1,
            Some(_) => {
                println!("    listed as known red but passed");
                unexpected += 1;
            }
            None if !passed => unexpected += 1,
            None => {}
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
