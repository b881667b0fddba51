//! Command dispatch for the `colorsuper` binary.
//!
//! Every command returns a [`RunReport`]; its JSON form has sorted keys and
//! exact numbers only, so repeated runs are byte-identical.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use colorsuper::diffreal::{
    casimir_value, printed_realization, repair_realization, template_free_terms, verify_realization,
    DiscrepancyReport, Realization, RepairOutcome,
};
use colorsuper::enveloping::{casimir_eight, casimir_ten_00};
use colorsuper::radical::{set_factor_bound, FACTOR_BOUND_ENV};
use colorsuper::representation::{
    build_rep_ten, casimir_scalar, compare, discrepancies_json, embedded_rep, emit_latex,
    graded_commutant_dimension, verify_rep, Representation,
};
use colorsuper::{preset_gl, solve_casimir, Centrality, GradedAlgebra, Grading, OspVersion};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: Value,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: Value) -> Self {
        Check {
            name: name.into(),
            passed,
            detail,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub checks: Vec<Check>,
    pub artifacts: Vec<String>,
    pub results: Value,
    pub exit_code: i32,
}

impl RunReport {
    fn new(command: &str, inputs: Value) -> Self {
        RunReport {
            command: command.to_string(),
            inputs,
            checks: Vec::new(),
            artifacts: Vec::new(),
            results: Value::Null,
            exit_code: EXIT_PASS,
        }
    }

    fn usage(command: &str, message: String) -> Self {
        let mut r = Self::new(command, Value::Null);
        r.checks.push(Check::new("usage", false, json!(message)));
        r.exit_code = EXIT_USAGE;
        r
    }

    fn check(&mut self, name: &str, passed: bool, detail: Value) {
        self.checks.push(Check::new(name, passed, detail));
    }

    fn finish(mut self) -> Self {
        if self.exit_code == EXIT_PASS && self.checks.iter().any(|c| !c.passed) {
            self.exit_code = EXIT_FAIL;
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.exit_code == EXIT_PASS
    }

    pub fn check_named(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "status": if c.passed { "pass" } else { "fail" },
                "detail": c.detail,
            })).collect::<Vec<_>>(),
            "artifacts": self.artifacts,
            "results": self.results,
            "exit_code": self.exit_code,
        })
    }

    pub fn to_pretty_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("report is valid JSON")
    }
}

#[derive(Parser, Debug)]
#[command(name = "colorsuper", about = "Exact checks for Z2xZ2-graded color superalgebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Structure-constant checks
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// Quadratic Casimir solving
    #[command(subcommand)]
    Casimir(CasimirCmd),
    /// Matrix representations
    #[command(subcommand)]
    Rep(RepCmd),
    /// Differential realizations
    #[command(subcommand)]
    Diffreal(DiffrealCmd),
}

#[derive(Subcommand, Debug)]
enum AlgebraCmd {
    /// Grading closure, antisymmetry and Jacobi over all triples
    Check {
        #[arg(long)]
        preset: Option<String>,
        /// gl sizes `m1,m2,n1,n2`
        #[arg(long)]
        dims: Option<String>,
        /// Algebra JSON file instead of a preset
        #[arg(long, conflicts_with = "preset")]
        input: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum CasimirCmd {
    Solve {
        #[arg(long)]
        preset: String,
        /// Sector `s1,s2`
        #[arg(long)]
        sector: String,
        /// Require ordinary commutators to vanish instead of graded brackets
        #[arg(long)]
        ordinary: bool,
    },
}

#[derive(Subcommand, Debug)]
enum RepCmd {
    Build {
        #[arg(long, default_value = "ten")]
        preset: String,
        #[arg(long)]
        ell: u32,
        #[arg(long)]
        latex: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    Verify {
        #[arg(long)]
        input: PathBuf,
    },
    Compare(CompareArgs),
}

#[derive(Args, Debug)]
struct CompareArgs {
    #[arg(long, default_value = "ten")]
    preset: String,
    /// Built ℓ=2 matrices
    #[arg(long)]
    built: bool,
    /// Typeset ℓ=2 matrices
    #[arg(long)]
    embedded: bool,
    /// Representation JSON file
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum DiffrealCmd {
    Verify {
        #[arg(long)]
        preset: String,
        #[arg(long, default_value_t = 4)]
        max_degree: u32,
        /// Solve for the coefficients of flagged generators
        #[arg(long)]
        repair: bool,
    },
}

fn parse_version(field: &str, s: &str) -> Result<OspVersion, String> {
    s.parse().map_err(|e: String| format!("{field}: {e}"))
}

fn parse_sector(s: &str) -> Result<Grading, String> {
    let bits: Vec<u64> = s
        .split(',')
        .map(|b| b.trim().parse::<u64>())
        .collect::<Result<_, _>>()
        .map_err(|_| format!("sector: expected `0|1,0|1`, got `{s}`"))?;
    Grading::from_slice(&bits).ok_or_else(|| format!("sector: expected `0|1,0|1`, got `{s}`"))
}

fn parse_dims(s: &str) -> Result<[usize; 4], String> {
    let v: Vec<usize> = s
        .split(',')
        .map(|b| b.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| format!("dims: expected four non-negative integers, got `{s}`"))?;
    v.try_into()
        .map_err(|_| format!("dims: expected four non-negative integers, got `{s}`"))
}

fn read_json(field: &str, path: &PathBuf) -> Result<Value, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{field}: cannot read {}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{field}: invalid JSON in {}: {e}", path.display()))
}

fn write_artifact(report: &mut RunReport, path: &PathBuf, contents: &str) -> Result<(), String> {
    fs::write(path, contents).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    report.artifacts.push(path.display().to_string());
    Ok(())
}

/// Applies the factorization-bound override, if set.
fn apply_environment() -> Result<(), String> {
    match std::env::var(FACTOR_BOUND_ENV) {
        Ok(v) => {
            let bound = v
                .trim()
                .parse::<u64>()
                .ok()
                .filter(|b| *b >= 2)
                .ok_or_else(|| format!("{FACTOR_BOUND_ENV}: expected an integer ≥ 2, got `{v}`"))?;
            set_factor_bound(bound);
            Ok(())
        }
        Err(_) => Ok(()),
    }
}

/// Parses `argv` (without the program name) and runs the command.
pub fn run<I, S>(argv: I) -> RunReport
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args = std::iter::once(std::ffi::OsString::from("colorsuper")).chain(argv.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            ) {
                EXIT_PASS
            } else {
                EXIT_USAGE
            };
            let mut r = RunReport::usage("", e.to_string());
            r.exit_code = code;
            return r;
        }
    };
    if let Err(e) = apply_environment() {
        return RunReport::usage("", e);
    }
    let (name, result) = match cli.command {
        Command::Algebra(AlgebraCmd::Check { preset, dims, input }) => {
            ("algebra check", algebra_check(preset, dims, input))
        }
        Command::Casimir(CasimirCmd::Solve {
            preset,
            sector,
            ordinary,
        }) => ("casimir solve", casimir_solve(&preset, &sector, ordinary)),
        Command::Rep(RepCmd::Build {
            preset,
            ell,
            latex,
            json,
        }) => ("rep build", rep_build(&preset, ell, latex, json)),
        Command::Rep(RepCmd::Verify { input }) => ("rep verify", rep_verify(&input)),
        Command::Rep(RepCmd::Compare(args)) => ("rep compare", rep_compare(args)),
        Command::Diffreal(DiffrealCmd::Verify {
            preset,
            max_degree,
            repair,
        }) => ("diffreal verify", diffreal_verify(&preset, max_degree, repair)),
    };
    match result {
        Ok(r) => r.finish(),
        Err(e) => RunReport::usage(name, e),
    }
}

fn algebra_check(
    preset: Option<String>,
    dims: Option<String>,
    input: Option<PathBuf>,
) -> Result<RunReport, String> {
    let (alg, inputs): (GradedAlgebra, Value) = match (preset.as_deref(), input) {
        (_, Some(path)) => {
            let v = read_json("input", &path)?;
            let alg = GradedAlgebra::from_json(&v).map_err(|e| format!("input: {e}"))?;
            (alg, json!({"input": path.display().to_string()}))
        }
        (Some("gl"), None) => {
            let d = parse_dims(dims.as_deref().ok_or("dims: required with --preset gl")?)?;
            let alg = preset_gl(d[0], d[1], d[2], d[3]).map_err(|e| format!("dims: {e}"))?;
            (alg, json!({"preset": "gl", "dims": d}))
        }
        (Some(p), None) => {
            if dims.is_some() {
                return Err("dims: only valid with --preset gl".into());
            }
            let v = parse_version("preset", p)?;
            (v.algebra(), json!({"preset": p}))
        }
        (None, None) => return Err("preset: one of --preset or --input is required".into()),
    };
    let mut r = RunReport::new("algebra check", inputs);
    let report = alg.validate();
    r.check(
        "grade closure",
        report.closure_failures.is_empty(),
        json!(report.closure_failures.len()),
    );
    r.check(
        "graded antisymmetry",
        report.antisymmetry_failures.is_empty(),
        json!(report.antisymmetry_failures.len()),
    );
    r.check(
        "graded jacobi",
        report.jacobi_failures.is_empty(),
        json!({"triples": report.jacobi_triples, "vanishing": report.jacobi_zero()}),
    );
    r.results = json!({"dim": alg.dim(), "validation": report.to_json()});
    Ok(r)
}

fn casimir_solve(preset: &str, sector: &str, ordinary: bool) -> Result<RunReport, String> {
    let version = parse_version("preset", preset)?;
    let sector = parse_sector(sector)?;
    let centrality = if ordinary {
        Centrality::Ordinary
    } else {
        Centrality::Graded
    };
    let alg = version.algebra();
    let mut r = RunReport::new(
        "casimir solve",
        json!({"preset": preset, "sector": sector.to_json(), "centrality": centrality.name()}),
    );
    let sol = solve_casimir(&alg, sector, centrality);
    for (k, ray) in sol.rays.iter().enumerate() {
        let mut failing = Vec::new();
        for x in 0..alg.dim() {
            let c = colorsuper::NormalOrderer::new(&alg)
                .commutator(ray, x, centrality)
                .map_err(|e| e.to_string())?;
            if !c.is_zero() {
                failing.push(alg.name(x).to_string());
            }
        }
        r.check(&format!("ray {k} is central"), failing.is_empty(), json!(failing));
    }
    r.results = json!({
        "ansatz_size": sol.ansatz.len(),
        "equations": sol.equations,
        "constant_is_central": sol.constant_is_central,
        "nullity": sol.rays.len(),
        "rays": sol.rays_json(&alg),
        "rendered": sol.rays.iter().map(|p| p.render(&alg)).collect::<Vec<_>>(),
    });
    Ok(r)
}

fn representation_checks(r: &mut RunReport, rep: &Representation) {
    let v = verify_rep(rep);
    r.check(
        "relations",
        v.relation_failures.is_empty() && v.missing.is_empty(),
        json!({"pairs_checked": v.pairs_checked, "pairs_failed": v.relation_failures.len()}),
    );
    r.check("sector pattern", v.sector_violations.is_empty(), json!(v.sector_violations.len()));
    r.check("R diagonal", v.r_diagonal_failures.is_empty(), json!(v.r_diagonal_failures.len()));
    let alg = rep.algebra.algebra();
    let casimir = match rep.algebra {
        OspVersion::Ten => casimir_ten_00(&alg),
        OspVersion::Eight => casimir_eight(&alg),
    }
    .expect("preset Casimir");
    if v.passed() {
        match casimir_scalar(rep, &casimir) {
            Ok(c) => r.check("casimir scalar", true, c.to_json()),
            Err(e) => r.check("casimir scalar", false, json!(e.to_string())),
        }
    }
    r.results = json!({"dim": rep.dim(), "verification": v.to_json()});
}

fn rep_build(preset: &str, ell: u32, latex: Option<PathBuf>, json_out: Option<PathBuf>) -> Result<RunReport, String> {
    let version = parse_version("preset", preset)?;
    if version != OspVersion::Ten {
        return Err("preset: only ten can be built for general ell; see `rep compare --embedded --preset eight`".into());
    }
    let rep = build_rep_ten(ell).map_err(|e| format!("ell: {e}"))?;
    let mut r = RunReport::new("rep build", json!({"preset": preset, "ell": ell}));
    representation_checks(&mut r, &rep);
    r.check("dimension", rep.dim() == 4 * ell as usize + 2, json!(rep.dim()));
    if let Some(path) = json_out {
        let text = serde_json::to_string_pretty(&rep.to_json()).expect("valid JSON");
        write_artifact(&mut r, &path, &text)?;
    }
    if let Some(path) = latex {
        let tex = emit_latex(&rep).map_err(|e| format!("latex: {e}"))?;
        write_artifact(&mut r, &path, &tex)?;
    }
    Ok(r)
}

fn rep_verify(input: &PathBuf) -> Result<RunReport, String> {
    let v = read_json("input", input)?;
    let rep = Representation::from_json(&v).map_err(|e| format!("input: {e}"))?;
    let mut r = RunReport::new("rep verify", json!({"input": input.display().to_string()}));
    representation_checks(&mut r, &rep);
    Ok(r)
}

fn rep_compare(args: CompareArgs) -> Result<RunReport, String> {
    let version = parse_version("preset", &args.preset)?;
    let mut sides: Vec<(&str, Representation)> = Vec::new();
    if args.embedded {
        sides.push(("embedded", embedded_rep(version)));
    }
    if args.built {
        if version != OspVersion::Ten {
            return Err("built: only the ten-generator representation can be built".into());
        }
        sides.push(("built", build_rep_ten(2).map_err(|e| e.to_string())?));
    }
    if let Some(path) = &args.input {
        let v = read_json("input", path)?;
        sides.push(("input", Representation::from_json(&v).map_err(|e| format!("input: {e}"))?));
    }
    if sides.len() != 2 {
        return Err("built: choose exactly two of --built, --embedded, --input".into());
    }
    let mut r = RunReport::new(
        "rep compare",
        json!({"preset": args.preset, "reference": sides[0].0, "candidate": sides[1].0}),
    );
    let mut verified = serde_json::Map::new();
    for (name, rep) in &sides {
        let v = verify_rep(rep);
        r.check(&format!("{name} relations"), v.passed(), json!(v.relation_failures.len()));
        verified.insert(name.to_string(), v.to_json());
    }
    let (reference, candidate) = (&sides[0].1, &sides[1].1);
    r.check("same states", reference.states == candidate.states, Value::Null);
    let diff = compare(reference, candidate);
    r.check("entries agree", diff.is_empty(), json!(diff.len()));
    r.check(
        "graded commutant",
        graded_commutant_dimension(candidate) == 1,
        json!(graded_commutant_dimension(candidate)),
    );
    r.results = json!({"discrepancies": discrepancies_json(&diff), "verification": verified});
    Ok(r)
}

fn realization_outcome(
    alg: &GradedAlgebra,
    real: &Realization,
    max_degree: u32,
) -> Result<DiscrepancyReport, String> {
    verify_realization(alg, real, max_degree).map_err(|e| e.to_string())
}

fn diffreal_verify(preset: &str, max_degree: u32, repair: bool) -> Result<RunReport, String> {
    let version = parse_version("preset", preset)?;
    if max_degree < 2 {
        return Err(format!("max-degree: must be at least 2, got {max_degree}"));
    }
    let alg = version.algebra();
    let printed = printed_realization(version);
    let mut r = RunReport::new(
        "diffreal verify",
        json!({"preset": preset, "max_degree": max_degree, "repair": repair}),
    );
    let report = realization_outcome(&alg, &printed, max_degree)?;
    let mut results = json!({
        "printed": report.to_json(),
        "flagged": report.flagged_generators(),
    });
    let mut active = printed.clone();
    if repair && !report.passed() {
        let mut flagged: Vec<(String, usize)> = report.flagged_generators().into_iter().collect();
        flagged.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        let mut attempts = Vec::new();
        let mut repaired = None;
        for (gen, _) in &flagged {
            let (template, n) = template_free_terms(&printed, gen).map_err(|e| e.to_string())?;
            match repair_realization(&alg, &template, n) {
                Ok(RepairOutcome::Unique { realization, values }) => {
                    let check = realization_outcome(&alg, &realization, max_degree)?;
                    attempts.push(json!({
                        "generator": gen,
                        "outcome": "unique",
                        "values": values.iter().map(colorsuper::rational::format_rational).collect::<Vec<_>>(),
                        "operator": realization.get(gen).map_err(|e| e.to_string())?.pretty(),
                        "passes": check.passed(),
                    }));
                    if check.passed() {
                        repaired = Some((gen.clone(), realization, check));
                        break;
                    }
                }
                Ok(RepairOutcome::Underdetermined { dimension, .. }) => {
                    attempts.push(json!({"generator": gen, "outcome": "underdetermined", "dimension": dimension}));
                }
                Err(e) => attempts.push(json!({"generator": gen, "outcome": "error", "detail": e.to_string()})),
            }
        }
        results["repair_attempts"] = json!(attempts);
        match repaired {
            Some((gen, real, check)) => {
                r.check("repaired realization", true, json!({"generator": gen}));
                results["repaired"] = check.to_json();
                results["realization"] = real.to_json();
                active = real;
            }
            None => r.check("repaired realization", false, json!("no single-generator repair closes")),
        }
    } else {
        r.check(
            "realization",
            report.passed(),
            json!({"pairs_checked": report.pairs.len(), "pairs_failed": report.failures().count()}),
        );
    }
    r.check("routes agree", report.routes_agree(), Value::Null);
    if r.checks.iter().all(|c| c.passed) {
        let casimir = match version {
            OspVersion::Ten => casimir_ten_00(&alg),
            OspVersion::Eight => casimir_eight(&alg),
        }
        .expect("preset Casimir");
        match casimir_value(&alg, &active, &casimir) {
            Ok(p) => r.check("casimir is multiplication", true, json!(p.pretty())),
            Err(e) => r.check("casimir is multiplication", false, json!(e.to_string())),
        }
    }
    r.results = results;
    Ok(r)
}

