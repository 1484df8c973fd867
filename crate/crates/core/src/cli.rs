//! Batch command-line interface.
//!
//! State files come in three shapes, told apart by their keys:
//!
//! * a value table `{"level": K, "values": [{"perm": [[1,2]], "value": 0.5}]}`,
//!   where a value is a real number or `[re, im]` and unlisted elements of
//!   `S_K` are 0;
//! * a canonical state `{"n": 2, "lambda": [1,1], "alpha": [...], "beta": [...]}`;
//! * Thoma parameters `{"alpha": [...], "beta": [...]}`.
//!
//! Exit status: 0 on success, 1 when a certificate fails or a computation
//! errors, 2 for malformed input, 3 for infeasible levels.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::cache;
use crate::charfin::{character_table, mn_character, normalized_character, LevelTables, CHARACTER_TABLE_BOUND};
use crate::error::Error;
use crate::fourier::{dual_norm, positive_definiteness, StateFunction};
use crate::gns::{induced_character, verify_state};
use crate::linalg::C64;
use crate::perm::{CycleType, Partition, Permutation};
use crate::stability::{centrality_defect, stability_profile, GeneratorSet};
use crate::stable::{
    asymptotic_character, classify, quasi_equivalent, to_table, CanonicalState, CanonicalStateSpec,
    ClassInvariant, ClassifyOptions, State, TableState, ThomaState,
};
use crate::thoma::{
    cycle_values, recover_params, thoma_character, type_classify, RecoveryOptions, SupportBounds,
    ThomaParams,
};

#[derive(Parser, Debug)]
#[command(name = "stablerep", version, about = "States and characters of the infinite symmetric group")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Truncation level K.
    #[arg(long, global = true)]
    pub level: Option<usize>,

    /// Numerical tolerance for certificates and comparisons.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,

    /// Maximal numbers of nonzero alpha and beta entries, as `r,s`.
    #[arg(long, global = true, value_parser = parse_bounds)]
    pub support_bounds: Option<SupportBounds>,

    /// Directory for the irrep-matrix cache.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,

    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Probe every element of S_{N∖m} instead of the generators above the cut.
    #[arg(long, global = true)]
    pub exhaustive_sweep: bool,

    /// Lift the cap K <= 8.
    #[arg(long, global = true)]
    pub allow_large_level: bool,

    /// Worker threads.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Value of a state at one permutation.
    EvalState {
        state: PathBuf,
        /// Permutation in cycle notation, e.g. `[[1,2],[3,4,5]]`.
        #[arg(long)]
        perm: String,
    },
    /// Character table of S_n, or one value with --lambda and --cycle-type.
    CharFinite {
        #[arg(long)]
        lambda: Option<String>,
        /// Cycle lengths, e.g. `[3,2]`.
        #[arg(long)]
        cycle_type: Option<String>,
    },
    /// Thoma character on a cycle type, or its cycle values up to --level.
    CharThoma {
        params: PathBuf,
        #[arg(long)]
        cycle_type: Option<String>,
    },
    /// Dual norm of a state on its truncation level.
    DualNorm { state: PathBuf },
    /// Positive-definiteness certificate from the Fourier blocks.
    PsdCheck { state: PathBuf },
    /// Limit of the state along the shift sequence of a permutation.
    AsymptoticChar {
        state: PathBuf,
        #[arg(long)]
        perm: String,
        /// Last shift index M.
        #[arg(long)]
        horizon: Option<usize>,
    },
    /// Fit Thoma parameters to cycle values `{"2": v2, "3": v3, ...}`.
    RecoverParams { values: PathBuf },
    /// Central depth, λ, Thoma parameters and factor type of a state.
    Classify { state: PathBuf },
    /// Compare two class invariants.
    QuasiEquivalent { first: PathBuf, second: PathBuf },
    /// Orbit defect m ↦ sup ρ(Ad t f, f) over t fixing 1..m.
    StabilityProfile {
        state: PathBuf,
        /// Largest cut m.
        #[arg(long)]
        max_m: usize,
        /// Level of the value table, at least K + 2.
        #[arg(long)]
        table_level: Option<usize>,
    },
    /// Largest change of the state under Ad t for t above the given depth.
    CentralityDefect {
        state: PathBuf,
        #[arg(long)]
        depth: usize,
    },
    /// GNS triple, standard form and biregular representation checks.
    GnsVerify { state: PathBuf },
    /// Induced character of T_λ ⊗ T_μ from S_n × S_{m−n} to S_m.
    InduceChar {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::EvalState { .. } => "eval-state",
            Command::CharFinite { .. } => "char-finite",
            Command::CharThoma { .. } => "char-thoma",
            Command::DualNorm { .. } => "dual-norm",
            Command::PsdCheck { .. } => "psd-check",
            Command::AsymptoticChar { .. } => "asymptotic-char",
            Command::RecoverParams { .. } => "recover-params",
            Command::Classify { .. } => "classify",
            Command::QuasiEquivalent { .. } => "quasi-equivalent",
            Command::StabilityProfile { .. } => "stability-profile",
            Command::CentralityDefect { .. } => "centrality-defect",
            Command::GnsVerify { .. } => "gns-verify",
            Command::InduceChar { .. } => "induce-char",
        }
    }
}

fn parse_bounds(s: &str) -> Result<SupportBounds, String> {
    let (r, s) = s.split_once(',').ok_or("expected r,s")?;
    let parse = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}"));
    Ok(SupportBounds::new(parse(r)?, parse(s)?))
}

#[derive(Debug)]
pub enum Failure {
    Malformed(String),
    Infeasible(String),
    Certificate { report: String, reason: String },
    Failed(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Malformed(_) => 2,
            Failure::Infeasible(_) => 3,
            Failure::Certificate { .. } | Failure::Failed(_) => 1,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Malformed(m) => write!(f, "malformed input: {m}"),
            Failure::Infeasible(m) => write!(f, "infeasible job: {m}"),
            Failure::Certificate { reason, .. } => write!(f, "certificate failed: {reason}"),
            Failure::Failed(m) => write!(f, "error: {m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::LevelTooLarge { .. } => Failure::Infeasible(e.to_string()),
            Error::InvalidPermutation(_)
            | Error::InvalidPartition(_)
            | Error::InvalidThomaParams(_)
            | Error::WeightMismatch { .. } => Failure::Malformed(e.to_string()),
            other => Failure::Failed(other.to_string()),
        }
    }
}

type CliResult<T> = Result<T, Failure>;

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> CliResult<T> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Failed(format!("{}: {e}", path.display())))?;
    parse_json(&text, &path.display().to_string())
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str, origin: &str) -> CliResult<T> {
    serde_json::from_str(text).map_err(|e| Failure::Malformed(format!("{origin}: {e}")))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum TableValue {
    Real(f64),
    Complex([f64; 2]),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TableEntry {
    perm: Permutation,
    value: TableValue,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TableFile {
    level: usize,
    values: Vec<TableEntry>,
}

/// A state read from disk.
#[derive(Clone, Debug)]
pub enum StateInput {
    Table(StateFunction),
    Canonical(CanonicalStateSpec),
    Thoma(ThomaParams),
}

impl StateInput {
    pub fn load(path: &Path, cap: &LevelCap) -> CliResult<Self> {
        let origin = path.display().to_string();
        let text = fs::read_to_string(path).map_err(|e| Failure::Failed(format!("{origin}: {e}")))?;
        let shape: Value = parse_json(&text, &origin)?;
        let has = |k: &str| shape.get(k).is_some();
        if has("values") {
            let file: TableFile = parse_json(&text, &origin)?;
            cap.check(file.level)?;
            let entries = file.values.into_iter().map(|e| {
                let z = match e.value {
                    TableValue::Real(x) => C64::new(x, 0.0),
                    TableValue::Complex([re, im]) => C64::new(re, im),
                };
                (e.perm, z)
            });
            Ok(StateInput::Table(StateFunction::from_sparse(file.level, entries)?))
        } else if has("lambda") || has("n") {
            Ok(StateInput::Canonical(parse_json(&text, &origin)?))
        } else {
            Ok(StateInput::Thoma(parse_json(&text, &origin)?))
        }
    }

    pub fn evaluator(&self) -> Box<dyn State + '_> {
        match self {
            StateInput::Table(t) => Box::new(TableState(t.clone())),
            StateInput::Canonical(s) => Box::new(CanonicalState::new(s.clone())),
            StateInput::Thoma(p) => Box::new(ThomaState(p.clone())),
        }
    }

    /// Value table on `S_k`; tables are restricted.
    pub fn table(&self, k: usize) -> CliResult<StateFunction> {
        match self {
            StateInput::Table(t) => Ok(t.restrict(k)?),
            _ => Ok(to_table(self.evaluator().as_ref(), k)),
        }
    }

    fn native_level(&self) -> Option<usize> {
        match self {
            StateInput::Table(t) => Some(t.level()),
            _ => None,
        }
    }
}

/// Guard against `n!`-sized tables beyond the cap.
#[derive(Clone, Copy, Debug)]
pub struct LevelCap {
    pub allow_large: bool,
}

impl LevelCap {
    pub fn check(&self, k: usize) -> CliResult<usize> {
        if k > CHARACTER_TABLE_BOUND && !self.allow_large {
            return Err(Failure::Infeasible(format!(
                "level {k} exceeds the cap {CHARACTER_TABLE_BOUND}; pass --allow-large-level to override"
            )));
        }
        Ok(k)
    }
}

fn parse_perm(s: &str) -> CliResult<Permutation> {
    parse_json(s, "--perm")
}

fn parse_partition(s: &str, flag: &str) -> CliResult<Partition> {
    parse_json(s, flag)
}

fn parse_cycle_type(s: &str) -> CliResult<CycleType> {
    let lengths: Vec<usize> = parse_json(s, "--cycle-type")?;
    Ok(CycleType::from_lengths(lengths))
}

/// SHA-256 over the encoded generator files of every irrep of `S_k`, the
/// same bytes as the on-disk cache.
fn tables_hash(tables: &LevelTables) -> String {
    let mut hasher = Sha256::new();
    for irrep in &tables.irreps {
        hasher.update(cache::encode(irrep));
    }
    hex::encode(hasher.finalize())
}

struct Context<'a> {
    cli: &'a Cli,
    cap: LevelCap,
    hashes: BTreeMap<usize, String>,
}

impl Context<'_> {
    /// Loads (or builds) the tables of `S_k` and records their hash.
    fn use_level(&mut self, k: usize) -> CliResult<usize> {
        self.cap.check(k)?;
        if let std::collections::btree_map::Entry::Vacant(e) = self.hashes.entry(k) {
            let hash = match &self.cli.cache_dir {
                Some(dir) => cache::load_level(dir, k)?.1,
                None => tables_hash(&LevelTables::get(k)),
            };
            e.insert(hash);
        }
        Ok(k)
    }

    fn level_or(&self, default: usize) -> usize {
        self.cli.level.unwrap_or(default)
    }

    fn bounds(&self) -> SupportBounds {
        self.cli.support_bounds.unwrap_or(SupportBounds::new(2, 2))
    }

    fn recovery(&self) -> RecoveryOptions {
        RecoveryOptions { seed: self.cli.seed, ..RecoveryOptions::default() }
    }

    fn state_level(&self, state: &StateInput, default: usize) -> usize {
        self.cli.level.or(state.native_level()).unwrap_or(default)
    }
}

/// Report body plus an optional dedicated CSV rendering.
struct Outcome {
    result: Value,
    csv: Option<String>,
    failure: Option<String>,
}

impl Outcome {
    fn ok(result: Value) -> Self {
        Self { result, csv: None, failure: None }
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable report")
}

fn execute(ctx: &mut Context<'_>) -> CliResult<Outcome> {
    let cli = ctx.cli;
    match &cli.command {
        Command::EvalState { state, perm } => {
            let input = StateInput::load(state, &ctx.cap)?;
            let g = parse_perm(perm)?;
            let value = match &input {
                StateInput::Table(t) => {
                    let z = t.value(&g).ok_or(Error::LevelTooLarge { requested: g.level(), available: t.level() })?;
                    json!([z.re, z.im])
                }
                other => json!(other.evaluator().value(&g)),
            };
            Ok(Outcome::ok(json!({ "perm": g, "value": value })))
        }
        Command::CharFinite { lambda, cycle_type } => match (lambda, cycle_type) {
            (Some(l), Some(ct)) => {
                let l = parse_partition(l, "--lambda")?;
                let ct = parse_cycle_type(ct)?;
                ctx.cap.check(l.weight())?;
                Ok(Outcome::ok(json!({
                    "lambda": l,
                    "cycle_type": ct,
                    "value": mn_character(&l, &ct)?,
                    "normalized": normalized_character(&l, &ct)?,
                })))
            }
            (None, None) => {
                let n = ctx.cap.check(cli.level.ok_or_else(|| Failure::Malformed("--level is required".into()))?)?;
                let table = character_table(n);
                let mut csv = String::from("lambda");
                for c in &table.classes {
                    csv.push_str(&format!(",\"{c}\""));
                }
                csv.push('\n');
                for (l, row) in table.irreps.iter().zip(&table.values) {
                    csv.push_str(&format!("\"{l}\""));
                    for v in row {
                        csv.push_str(&format!(",{v}"));
                    }
                    csv.push('\n');
                }
                Ok(Outcome { result: to_value(&table), csv: Some(csv), failure: None })
            }
            _ => Err(Failure::Malformed("--lambda and --cycle-type go together".into())),
        },
        Command::CharThoma { params, cycle_type } => {
            let p: ThomaParams = read_json(params)?;
            let factor_type = type_classify(&p);
            match cycle_type {
                Some(ct) => {
                    let ct = parse_cycle_type(ct)?;
                    Ok(Outcome::ok(json!({
                        "params": p,
                        "cycle_type": ct,
                        "value": thoma_character(&p, &ct),
                        "factor_type": factor_type,
                    })))
                }
                None => {
                    let max_k = ctx.level_or(8);
                    Ok(Outcome::ok(json!({
                        "params": p,
                        "cycle_values": cycle_values(&p, max_k),
                        "factor_type": factor_type,
                    })))
                }
            }
        }
        Command::DualNorm { state } => {
            let input = StateInput::load(state, &ctx.cap)?;
            let k = ctx.use_level(ctx.state_level(&input, 4))?;
            let f = input.table(k)?;
            Ok(Outcome::ok(json!({ "level": k, "dual_norm": dual_norm(&f) })))
        }
        Command::PsdCheck { state } => {
            let input = StateInput::load(state, &ctx.cap)?;
            let k = ctx.use_level(ctx.state_level(&input, 4))?;
            let cert = positive_definiteness(&input.table(k)?, cli.tol)?;
            let failure = (!cert.positive_definite)
                .then(|| format!("minimal eigenvalue {:e}", cert.min_eigenvalue));
            Ok(Outcome { result: to_value(&cert), csv: None, failure })
        }
        Command::AsymptoticChar { state, perm, horizon } => {
            let input = StateInput::load(state, &ctx.cap)?;
            let g = parse_perm(perm)?;
            let depth = match &input {
                StateInput::Canonical(s) => s.n,
                _ => 0,
            };
            let horizon = horizon.unwrap_or(g.level().max(depth) + 3);
            let evaluator = input.evaluator();
            let a = asymptotic_character(evaluator.as_ref(), &g, horizon, 1e-12)?;
            Ok(Outcome::ok(json!({ "perm": g, "asymptotic": a })))
        }
        Command::RecoverParams { values } => {
            let values: BTreeMap<usize, f64> = read_json(values)?;
            let rec = recover_params(&values, ctx.bounds(), &ctx.recovery())?;
            Ok(Outcome::ok(json!({
                "alpha": rec.params.alpha(),
                "beta": rec.params.beta(),
                "residual": rec.residual,
                "start_index": rec.start_index,
                "iterations": rec.iterations,
                "factor_type": type_classify(&rec.params),
            })))
        }
        Command::Classify { state } => {
            let input = StateInput::load(state, &ctx.cap)?;
            let k = ctx.use_level(ctx.state_level(&input, 6))?;
            let mut options = ClassifyOptions::new(k, ctx.bounds());
            options.recovery = ctx.recovery();
            let evaluator = input.evaluator();
            let c = classify(evaluator.as_ref(), &options)?;
            Ok(Outcome::ok(to_value(&c)))
        }
        Command::QuasiEquivalent { first, second } => {
            let a: ClassInvariant = read_json(first)?;
            let b: ClassInvariant = read_json(second)?;
            Ok(Outcome::ok(json!({
                "first": a,
                "second": b,
                "quasi_equivalent": quasi_equivalent(&a, &b, cli.tol),
            })))
        }
        Command::StabilityProfile { state, max_m, table_level } => {
            let input = StateInput::load(state, &ctx.cap)?;
            let k = ctx.use_level(cli.level.unwrap_or(4))?;
            let top = table_level.or(input.native_level()).unwrap_or(k + 2);
            for level in 0..=top {
                ctx.use_level(level)?;
            }
            let set = if cli.exhaustive_sweep { GeneratorSet::Exhaustive } else { GeneratorSet::AboveCut };
            let profile = stability_profile(&input.table(top)?, k, *max_m, set)?;
            Ok(Outcome { result: to_value(&profile), csv: Some(profile.to_csv()), failure: None })
        }
        Command::CentralityDefect { state, depth } => {
            let input = StateInput::load(state, &ctx.cap)?;
            let k = ctx.use_level(ctx.state_level(&input, 5))?;
            let defect = centrality_defect(&input.table(k)?, *depth, k)?;
            Ok(Outcome::ok(json!({ "depth": depth, "level": k, "defect": defect })))
        }
        Command::GnsVerify { state } => {
            let input = StateInput::load(state, &ctx.cap)?;
            let k = ctx.use_level(ctx.state_level(&input, 3))?;
            let report = verify_state(&input.table(k)?, 200, cli.seed)?;
            let failure = (!report.passes(1e-8)).then(|| "a residual exceeds 1e-8".to_string());
            Ok(Outcome { result: to_value(&report), csv: None, failure })
        }
        Command::InduceChar { lambda, mu } => {
            let l = parse_partition(lambda, "--lambda")?;
            let mu = parse_partition(mu, "--mu")?;
            let m = ctx.use_level(l.weight() + mu.weight())?;
            let ind = induced_character(&l, &mu, m)?;
            let mut csv = String::from("class,value\n");
            for (c, v) in ind.classes.iter().zip(&ind.values) {
                csv.push_str(&format!("\"{c}\",{v}\n"));
            }
            Ok(Outcome {
                result: json!({ "induced": ind, "multiplicities": ind.multiplicities() }),
                csv: Some(csv),
                failure: None,
            })
        }
    }
}

/// Flattens a JSON document into `key,value` rows.
fn flat_csv(v: &Value) -> String {
    fn walk(prefix: &str, v: &Value, out: &mut String) {
        match v {
            Value::Object(map) => {
                for (k, x) in map {
                    let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                    walk(&key, x, out);
                }
            }
            Value::Array(items) if items.iter().any(|x| x.is_object() || x.is_array()) => {
                for (i, x) in items.iter().enumerate() {
                    walk(&format!("{prefix}.{i}"), x, out);
                }
            }
            other => {
                let text = other.to_string().replace('"', "\"\"");
                out.push_str(&format!("{prefix},\"{text}\"\n"));
            }
        }
    }
    let mut out = String::from("key,value\n");
    walk("", v, &mut out);
    out
}

/// Runs one invocation; returns the rendered report (if any) and the exit code.
pub fn run(cli: &Cli) -> (Option<String>, Result<(), Failure>) {
    if cli.tol.is_nan() || cli.tol <= 0.0 {
        return (None, Err(Failure::Malformed("--tol must be positive".into())));
    }
    if let Some(jobs) = cli.jobs {
        // a second initialization in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global();
    }
    let mut ctx = Context { cli, cap: LevelCap { allow_large: cli.allow_large_level }, hashes: BTreeMap::new() };
    let outcome = match execute(&mut ctx) {
        Ok(o) => o,
        Err(e) => return (None, Err(e)),
    };
    let report = json!({
        "command": cli.command.name(),
        "seed": cli.seed,
        "tolerance": cli.tol,
        "irrep_sha256": ctx.hashes,
        "result": outcome.result,
    });
    let rendered = match cli.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("json") + "\n",
        Format::Csv => outcome.csv.unwrap_or_else(|| flat_csv(&report)),
    };
    match outcome.failure {
        Some(reason) => (Some(rendered.clone()), Err(Failure::Certificate { report: rendered, reason })),
        None => (Some(rendered), Ok(())),
    }
}

/// Entry point for the binary: parses `std::env::args`, prints, and returns
/// the exit status.
pub fn main() -> i32 {
    let cli = Cli::parse();
    let (report, status) = run(&cli);
    if let Some(text) = report {
        match &cli.output {
            Some(path) => {
                if let Err(e) = fs::write(path, &text) {
                    eprintln!("error: {}: {e}", path.display());
                    return 1;
                }
            }
            None => print!("{text}"),
        }
    }
    match status {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("{f}");
            f.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("stablerep").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn bounds_flag() {
        assert_eq!(parse_bounds("2,1").unwrap(), SupportBounds::new(2, 1));
        assert!(parse_bounds("2").is_err());
        let cli = parse(&["char-finite", "--level", "3", "--support-bounds", "1,0"]);
        assert_eq!(cli.support_bounds, Some(SupportBounds::new(1, 0)));
    }

    #[test]
    fn char_finite_table() {
        let (out, status) = run(&parse(&["char-finite", "--level", "2", "--format", "csv"]));
        assert!(status.is_ok());
        assert_eq!(out.unwrap(), "lambda,\"(1,1)\",\"(2)\"\n\"(2)\",1,1\n\"(1,1)\",1,-1\n");
    }

    #[test]
    fn cap_is_enforced() {
        let (_, status) = run(&parse(&["char-finite", "--level", "9"]));
        assert_eq!(status.unwrap_err().exit_code(), 3);
    }

    #[test]
    fn flat_csv_rows() {
        let v = json!({"a": 1, "b": {"c": [1, 2]}, "d": "x"});
        assert_eq!(flat_csv(&v), "key,value\na,\"1\"\nb.c,\"[1,2]\"\nd,\"\"\"x\"\"\"\n");
    }
}
