//! `leibniz-lab`: construct, verify and classify exact Leibniz algebras from the
//! command line. Every run prints one JSON report; the exit code is 0 when all
//! requested checks pass, 1 when one fails and 2 on usage or input errors.

pub mod report;
pub mod sample;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use leibniz_constructions::{
    direct_sum, make_heisenberg_h1, make_n_n1, make_q2n, match_filiform_normal_form, FiliformNormalForm,
};
use leibniz_core::scalar::{format_scalar, parse_scalar, zero};
use leibniz_core::{
    apply_basis_change, grading_derivation, induced_module_action, is_filiform, is_lie, is_nilpotent,
    leibniz_residuals, natural_gradation, quotient, series_dims, squares_ideal, tensor_from_json, tensor_to_json,
    StructureTensor,
};
use leibniz_fock::{build_fr, build_fr_direct_sum, check_leibniz_windowed, FockAlgebra};
use leibniz_mu::{
    bruteforce_constraint_oracle, constraint_matrix, constraint_residuals, full_basis_change, mu4_iso_verdict,
    mu4_normalize, mu4_table, mu4_transform_action, representative_families, GeneralParams, IsoVerdict, MuExtras,
    MuParams, MuTransform, Normalized,
};
use serde_json::{json, Value};

pub use report::{Check, RunReport};
use report::{residual_json, sparse_json};
use sample::DEFAULT_SEED;

#[derive(Debug, Parser)]
#[command(name = "leibniz-lab", version, about = "Exact Leibniz algebra laboratory")]
pub struct Cli {
    /// Pretty-print the JSON report.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Seed for every randomized run.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    #[value(name = "n_n1")]
    Model,
    #[value(name = "Q2n")]
    Pairing,
    #[value(name = "H1")]
    Heisenberg,
    #[value(name = "direct-sum")]
    DirectSum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckArg {
    Leibniz,
    Antisymmetry,
    Filiform,
    Nilpotent,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a named algebra and emit its table.
    Construct {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: Option<usize>,
        /// Block sizes of model algebras for `direct-sum`.
        #[arg(long, value_delimiter = ',')]
        parts: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check identities of a table read from JSON.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = [CheckArg::Leibniz, CheckArg::Antisymmetry, CheckArg::Filiform])]
        checks: Vec<CheckArg>,
    },
    /// Lower central series dimensions.
    Series {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Natural gradation and the naturally-graded decision.
    Gradation {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Truncated Fock algebra of a model algebra or of several blocks.
    Fock {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        parts: Vec<usize>,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        verify: bool,
        /// Write the finite part.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The general 2n-dimensional family and its restrictions.
    General {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        params_file: Option<PathBuf>,
        #[arg(long)]
        check_constraints: bool,
        #[arg(long)]
        oracle: bool,
        /// Seeded solutions and single-entry perturbations compared against the oracle.
        #[arg(long)]
        samples: Option<usize>,
    },
    /// The eight-parameter family in dimension 8.
    Mu4 {
        #[command(subcommand)]
        action: Mu4Command,
    },
    /// Re-emit a table in canonical form.
    Export {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum Mu4Command {
    Table {
        #[arg(long, allow_hyphen_values = true)]
        params: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Verify {
        #[arg(long, allow_hyphen_values = true)]
        params: Option<String>,
        /// Also verify this many seeded random tuples.
        #[arg(long)]
        random: Option<usize>,
    },
    Normalize {
        #[arg(long, allow_hyphen_values = true)]
        params: String,
    },
    Iso {
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
    },
}

/// Outcome of one invocation: exit code, standard output, standard error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type Res<T> = Result<T, UsageError>;

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli) {
        Ok(report) => {
            Outcome { code: if report.passed() { 0 } else { 1 }, stdout: report.to_json(cli.pretty) + "\n", stderr: String::new() }
        }
        Err(UsageError(msg)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
    }
}

fn read_tensor(path: &Path) -> Res<StructureTensor> {
    let text = std::fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    Ok(tensor_from_json(&text).map_err(|e| UsageError(format!("{}: {e}", path.display())))?)
}

fn write_file(path: &Path, text: &str, report: &mut RunReport) -> Res<()> {
    std::fs::write(path, text).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    report.artifacts.push(path.display().to_string());
    Ok(())
}

fn emit_tensor(t: &StructureTensor, out: &Option<PathBuf>, pretty: bool, report: &mut RunReport) -> Res<()> {
    match out {
        Some(p) => write_file(p, &(tensor_to_json(t, pretty) + "\n"), report),
        None => {
            report.result("table", leibniz_core::json::tensor_to_value(t));
            Ok(())
        }
    }
}

fn path_str(p: &Path) -> String {
    p.display().to_string()
}

fn execute(cli: &Cli) -> Res<RunReport> {
    match &cli.command {
        Command::Construct { family, n, parts, out } => construct(*family, *n, parts, out, cli.pretty),
        Command::Verify { input, checks } => verify(input, checks),
        Command::Series { input } => series(input),
        Command::Gradation { input } => gradation(input),
        Command::Fock { n, parts, degree, verify, out } => fock(*n, parts, *degree, *verify, out, cli.pretty),
        Command::General { n, params_file, check_constraints, oracle, samples } => {
            general(*n, params_file.as_deref(), *check_constraints, *oracle, *samples, cli.seed)
        }
        Command::Mu4 { action } => mu4(action, cli.seed, cli.pretty),
        Command::Export { input, out } => export(input, out, cli.pretty),
    }
}

fn construct(family: FamilyArg, n: Option<usize>, parts: &[usize], out: &Option<PathBuf>, pretty: bool) -> Res<RunReport> {
    let name = family.to_possible_value().expect("named").get_name().to_string();
    let mut report = RunReport::new("construct", json!({ "family": name, "n": n, "parts": parts }));
    let need_n = || n.ok_or_else(|| UsageError(format!("--n is required for {name}")));
    let t = match family {
        FamilyArg::Model => make_n_n1(need_n()?)?,
        FamilyArg::Pairing => make_q2n(need_n()?)?,
        FamilyArg::Heisenberg => make_heisenberg_h1(),
        FamilyArg::DirectSum => {
            let blocks = parts.iter().map(|&k| make_n_n1(k)).collect::<Result<Vec<_>, _>>()?;
            direct_sum(&blocks)?
        }
    };
    report.result("dim", json!(t.dim()));
    emit_tensor(&t, out, pretty, &mut report)?;
    Ok(report)
}

fn verify(input: &Path, checks: &[CheckArg]) -> Res<RunReport> {
    let t = read_tensor(input)?;
    let mut report = RunReport::new("verify", json!({ "in": path_str(input), "checks": checks.iter().map(|c| format!("{c:?}").to_lowercase()).collect::<Vec<_>>() }));
    report.result("dim", json!(t.dim()));
    for c in checks {
        match c {
            CheckArg::Leibniz => {
                let r = leibniz_residuals(&t);
                let detail = json!({ "nonzero_residuals": r.len(), "first_counterexample": r.first().map(residual_json) });
                report.check("leibniz", r.is_empty(), detail);
            }
            CheckArg::Antisymmetry => {
                let f = t.first_antisymmetry_failure();
                let detail = json!({ "first_counterexample": f.map(|(i, j)| json!([i + 1, j + 1])) });
                report.check("antisymmetry", f.is_none(), detail);
            }
            CheckArg::Filiform => {
                let dims = series_dims(&t);
                report.check("filiform", is_filiform(&t), json!({ "series_dims": dims }));
            }
            CheckArg::Nilpotent => {
                let dims = series_dims(&t);
                report.check("nilpotent", is_nilpotent(&t), json!({ "series_dims": dims }));
            }
        }
    }
    Ok(report)
}

fn series(input: &Path) -> Res<RunReport> {
    let t = read_tensor(input)?;
    let mut report = RunReport::new("series", json!({ "in": path_str(input) }));
    let dims = series_dims(&t);
    report.result("dims", json!(dims));
    report.result("filiform", json!(is_filiform(&t)));
    let decreasing = dims.windows(2).all(|w| w[1] < w[0] || w[0] == 0);
    report.check("nilpotent", is_nilpotent(&t), json!({ "strictly_decreasing": decreasing }));
    Ok(report)
}

fn gradation(input: &Path) -> Res<RunReport> {
    let t = read_tensor(input)?;
    let mut report = RunReport::new("gradation", json!({ "in": path_str(input) }));
    if !is_nilpotent(&t) {
        report.check("nilpotent", false, json!({ "series_dims": series_dims(&t) }));
        return Ok(report);
    }
    report.check("nilpotent", true, Value::Null);
    let g = natural_gradation(&t)?;
    report.result("layer_dims", json!(g.layer_dims()));
    report.result("graded_table", leibniz_core::json::tensor_to_value(&g.induced));
    let by_derivation = grading_derivation(&t)?.is_some();
    report.result("naturally_graded", json!(by_derivation));
    if is_filiform(&t) && is_lie(&t) {
        let matched = match_filiform_normal_form(&t)?;
        let form = matched.as_ref().map(|(f, _)| match f {
            FiliformNormalForm::Model(n) => format!("n_n1({n})"),
            FiliformNormalForm::Pairing(m) => format!("Q2n({m})"),
        });
        report.result("normal_form", json!(form));
        report.check("normal_form_agrees", matched.is_some() == by_derivation, Value::Null);
    }
    Ok(report)
}

fn fock_algebra(n: Option<usize>, parts: &[usize], degree: usize) -> Res<FockAlgebra> {
    Ok(match (n, parts.is_empty()) {
        (Some(n), true) => build_fr(n, degree)?,
        (None, false) => build_fr_direct_sum(parts, degree)?,
        _ => return Err(UsageError("give exactly one of --n or --parts".into())),
    })
}

fn fock(n: Option<usize>, parts: &[usize], degree: usize, verify: bool, out: &Option<PathBuf>, pretty: bool) -> Res<RunReport> {
    let f = fock_algebra(n, parts, degree)?;
    let mut report = RunReport::new("fock", json!({ "n": n, "parts": parts, "degree": degree, "verify": verify }));
    report.result("blocks", json!(f.blocks()));
    report.result("dim", json!(f.dim()));
    report.result("finite_dim", json!(f.finite_dim()));
    report.result("monomials", json!(f.module_part().len()));
    report.result("safe_degree", json!(f.safe_degree()));
    if verify {
        let r = check_leibniz_windowed(&f);
        let first = r.residuals.first().map(|((i, j, k), v)| json!({ "triple": [i + 1, j + 1, k + 1], "residual": sparse_json(v) }));
        let detail = json!({
            "checked": r.checked,
            "outside_window": r.outside_window,
            "overflowed": r.overflowed,
            "nonzero_residuals": r.residuals.len(),
            "first_counterexample": first,
        });
        report.check("leibniz_window", r.residuals.is_empty(), detail);
        let (tensor, _) = f.window_tensor();
        let q = quotient(&tensor, &f.monomial_ideal())?;
        report.check("quotient_is_finite_part", q.tensor.entries().eq(f.finite_part().entries()), Value::Null);
        if let (Some(p), &[n]) = (f.model_rescaling(), f.blocks()) {
            let rescaled = apply_basis_change(f.finite_part(), &p)?;
            report.check("finite_part_is_model", rescaled.entries().eq(make_n_n1(n)?.entries()), Value::Null);
        }
    }
    if out.is_some() {
        emit_tensor(f.finite_part(), out, pretty, &mut report)?;
    }
    Ok(report)
}

fn read_general_params(n: usize, path: &Path) -> Res<GeneralParams> {
    let text = std::fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text)?;
    let scalar = |x: &Value| -> Res<_> {
        let s = x.as_str().ok_or_else(|| UsageError(format!("expected a fraction string, got {x}")))?;
        Ok(parse_scalar(s)?)
    };
    let mut p = GeneralParams::zero(n);
    if let Some(a) = v.get("alpha").and_then(Value::as_array) {
        if a.len() != 5 {
            return Err(UsageError(format!("alpha needs 5 entries, got {}", a.len())));
        }
        for (slot, x) in p.alpha.iter_mut().zip(a) {
            *slot = scalar(x)?;
        }
    }
    if let Some(b) = v.get("beta").and_then(Value::as_array) {
        if b.len() != n - 2 {
            return Err(UsageError(format!("beta needs {} entries, got {}", n - 2, b.len())));
        }
        p.beta = b.iter().map(scalar).collect::<Res<_>>()?;
    }
    if let Some(g) = v.get("gamma").and_then(Value::as_object) {
        for (key, x) in g {
            let (i, k) = key.split_once(',').ok_or_else(|| UsageError(format!("gamma key {key:?} is not \"i,k\"")))?;
            let (i, k): (usize, usize) = (i.trim().parse()?, k.trim().parse()?);
            if !(2..=n / 2).contains(&i) || !(1..n).contains(&k) {
                return Err(UsageError(format!("gamma key {key:?} out of range")));
            }
            let c = scalar(x)?;
            if c != zero() {
                p.gamma.insert((i, k), c);
            }
        }
    }
    Ok(p)
}

fn general(n: usize, params_file: Option<&Path>, check_constraints: bool, oracle: bool, samples: Option<usize>, seed: u64) -> Res<RunReport> {
    if n < 5 {
        return Err(UsageError(format!("n = {n}: the general family needs n >= 5; use `mu4` for n = 4")));
    }
    if n > 12 {
        return Err(UsageError(format!("n = {n} is above the supported range 5..=12")));
    }
    let p = match params_file {
        Some(f) => read_general_params(n, f)?,
        None => GeneralParams::zero(n),
    };
    let mut report = RunReport::new(
        "general",
        json!({ "n": n, "params_file": params_file.map(path_str), "check_constraints": check_constraints, "oracle": oracle, "samples": samples, "seed": seed }),
    );
    let residuals = constraint_residuals(&p);
    let satisfied = residuals.iter().all(|r| *r == zero());
    report.result("constraint_residuals", json!(residuals.iter().map(format_scalar).collect::<Vec<_>>()));
    if check_constraints {
        report.check("constraints_satisfied", satisfied, Value::Null);
    }
    if oracle {
        let r = bruteforce_constraint_oracle(&p)?;
        let detail = json!({ "nonzero_residuals": r.len(), "first_counterexample": r.first().map(residual_json) });
        report.check("leibniz", r.is_empty(), detail);
        report.check("constraints_match_oracle", satisfied == r.is_empty(), Value::Null);
    }
    if let Some(count) = samples {
        let c = constraint_matrix(n);
        let mut mismatches = Vec::new();
        for s in 0..count {
            let mut rng = sample::rng_for(seed, s as u64);
            let sol = sample::constraint_solution(n, &c, &mut rng);
            if !bruteforce_constraint_oracle(&sol)?.is_empty() {
                mismatches.push(json!({ "sample": s, "kind": "solution rejected by oracle" }));
            }
            let mut flat = sol.to_flat();
            let cols: Vec<usize> = (0..flat.len()).filter(|&j| c.iter().any(|row| row[j] != zero())).collect();
            let j = cols[rand::Rng::gen_range(&mut rng, 0..cols.len())];
            flat[j] += sample::nonzero_scalar(&mut rng);
            let bumped = GeneralParams::from_flat(n, &flat)?;
            let violated = constraint_residuals(&bumped).iter().any(|r| *r != zero());
            let rejected = !bruteforce_constraint_oracle(&bumped)?.is_empty();
            if !(violated && rejected) {
                mismatches.push(json!({ "sample": s, "kind": "perturbation accepted", "parameter": GeneralParams::names(n)[j] }));
            }
        }
        report.check("sampled_equivalence", mismatches.is_empty(), json!({ "samples": count, "mismatches": mismatches }));
    }
    Ok(report)
}

fn parse_mu(s: &str) -> Res<MuParams> {
    Ok(MuParams::parse(s)?)
}

fn params_json(p: &MuParams) -> Value {
    json!(p.0.iter().map(format_scalar).collect::<Vec<_>>())
}

fn transform_json(g: &MuTransform) -> Value {
    json!({
        "P1": format_scalar(&g.p1),
        "M2": format_scalar(&g.m2),
        "M3": format_scalar(&g.m3),
        "M4": format_scalar(&g.m4),
        "T4": format_scalar(&g.t4),
    })
}

/// Whether the full basis change built from `g` carries `mu(p)` onto `mu(q)` exactly.
fn witness_reproduces(p: &MuParams, g: &MuTransform, q: &MuParams) -> Res<bool> {
    let b = full_basis_change(p, g, &MuExtras::default())?;
    Ok(apply_basis_change(&mu4_table(p), &b)? == mu4_table(q) && &mu4_transform_action(p, g) == q)
}

fn mu4_verify_one(p: &MuParams) -> Res<(bool, Value)> {
    let t = mu4_table(p);
    let r = leibniz_residuals(&t);
    let i = squares_ideal(&t);
    let q = quotient(&t, &i)?;
    let module = if i.dim() == 4 {
        let m = induced_module_action(&t, &i)?;
        let want = leibniz_constructions::minimal_faithful_action(4)?;
        Some(m.entries().eq(want.entries()))
    } else {
        None
    };
    let quotient_model = q.tensor.entries().eq(make_n_n1(4)?.entries());
    let detail = json!({
        "params": params_json(p),
        "nonzero_residuals": r.len(),
        "first_counterexample": r.first().map(residual_json),
        "squares_ideal_dim": i.dim(),
        "quotient_is_lie": is_lie(&q.tensor),
        "quotient_is_model": quotient_model,
        "module_is_minimal_faithful": module,
    });
    Ok((r.is_empty() && is_lie(&q.tensor), detail))
}

fn mu4(action: &Mu4Command, seed: u64, pretty: bool) -> Res<RunReport> {
    match action {
        Mu4Command::Table { params, out } => {
            let p = parse_mu(params)?;
            let mut report = RunReport::new("mu4 table", json!({ "params": params_json(&p) }));
            emit_tensor(&mu4_table(&p), out, pretty, &mut report)?;
            Ok(report)
        }
        Mu4Command::Verify { params, random } => {
            if params.is_none() && random.is_none() {
                return Err(UsageError("give --params and/or --random".into()));
            }
            let mut report = RunReport::new("mu4 verify", json!({ "params": params, "random": random, "seed": seed }));
            if let Some(s) = params {
                let (ok, detail) = mu4_verify_one(&parse_mu(s)?)?;
                report.check("leibniz", ok, detail);
            }
            if let Some(count) = random {
                let mut failures = Vec::new();
                for s in 0..*count {
                    let p = sample::mu_params(&mut sample::rng_for(seed, s as u64));
                    let (ok, detail) = mu4_verify_one(&p)?;
                    if !ok {
                        failures.push(detail);
                    }
                }
                report.check("random_tuples_leibniz", failures.is_empty(), json!({ "count": count, "failures": failures }));
            }
            Ok(report)
        }
        Mu4Command::Normalize { params } => {
            let p = parse_mu(params)?;
            let mut report = RunReport::new("mu4 normalize", json!({ "params": params_json(&p) }));
            let fams = representative_families();
            let n = mu4_normalize(&p);
            let f = &fams[n.family()];
            report.result("family", json!({ "index": n.family() + 1, "label": f.label(), "supplementary": f.supplementary }));
            match &n {
                Normalized::Exact { representative, witness, .. } => {
                    report.result("over_rationals", json!(true));
                    report.result("representative", params_json(representative));
                    report.result("witness", transform_json(witness));
                    let ok = witness_reproduces(&p, witness, representative)?;
                    report.check("witness_reproduces_table", ok, Value::Null);
                }
                Normalized::NeedsRoot { slice_point, slice_witness, .. } => {
                    report.result("over_rationals", json!(false));
                    report.result("root_index", json!(f.root_index()));
                    report.result("slice_point", params_json(slice_point));
                    report.result("slice_witness", transform_json(slice_witness));
                    let ok = witness_reproduces(&p, slice_witness, slice_point)?;
                    report.check("witness_reproduces_table", ok, Value::Null);
                }
            }
            Ok(report)
        }
        Mu4Command::Iso { left, right } => {
            let (p, q) = (parse_mu(left)?, parse_mu(right)?);
            let mut report = RunReport::new("mu4 iso", json!({ "left": params_json(&p), "right": params_json(&q) }));
            report.result("left_signature", json!(leibniz_mu::signature(&p)));
            report.result("right_signature", json!(leibniz_mu::signature(&q)));
            match mu4_iso_verdict(&p, &q) {
                IsoVerdict::Isomorphic(g) => {
                    report.result("isomorphic", json!(true));
                    report.result("witness", transform_json(&g));
                    report.check("witness_reproduces_table", witness_reproduces(&p, &g, &q)?, Value::Null);
                }
                IsoVerdict::NeedsRoot => {
                    report.result("isomorphic", json!(false));
                    report.result("isomorphic_after_adjoining_root", json!(true));
                }
                IsoVerdict::NotIsomorphic => {
                    report.result("isomorphic", json!(false));
                }
            }
            Ok(report)
        }
    }
}

fn export(input: &Path, out: &Path, pretty: bool) -> Res<RunReport> {
    let t = read_tensor(input)?;
    let mut report = RunReport::new("export", json!({ "in": path_str(input), "out": path_str(out) }));
    let text = tensor_to_json(&t, pretty);
    let again = tensor_to_json(&tensor_from_json(&text)?, pretty);
    report.check("round_trip", text == again, Value::Null);
    write_file(out, &(text + "\n"), &mut report)?;
    Ok(report)
}

/// Applies `LEIBNIZ_LAB_THREADS` to the global worker pool, if set.
pub fn configure_threads() -> Result<(), String> {
    match std::env::var("LEIBNIZ_LAB_THREADS") {
        Ok(v) => {
            let n: usize = v.trim().parse().map_err(|_| format!("LEIBNIZ_LAB_THREADS must be a positive integer, got {v:?}"))?;
            if n == 0 {
                return Err("LEIBNIZ_LAB_THREADS must be at least 1".into());
            }
            rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())
        }
        Err(_) => Ok(()),
    }
}
