//! Command-line front end: `series | verify | fit | export`.
//!
//! Settings come from an optional `key=value` file (`--config`) overlaid by
//! flags. Keys are the long flag names: `preset`, `trunc`, `order`,
//! `fixed-point`, `z-depth`, `k-max`, `profile`, `basis`, `out`, `format`.
//!
//! Exit codes: 0 pass, 1 verification or fit failure, 2 usage error,
//! 3 compute error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::asymptotics::{g_ring_basis, laurent_powers, r_ring_basis, ring_fit, ring_fit_adaptive, solve_r, FitResult};
use crate::birkhoff::{jkm_series, s_coefficient_tables, s_operators, CoefficientTables};
use crate::cohomology::ClassRing;
use crate::cyclo::Cyclo;
use crate::error::{Error, Result};
use crate::expr::Env;
use crate::generators::{eisenstein_and_delta, elliptic_generators, genus1_rhs, k3_generators, local_generators};
use crate::geometry::Preset;
use crate::ifunction::small_i_function;
use crate::relations::{self, Profile, Status};
use crate::series::{Axis, BiSeries, SeriesJson, UniSeries};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_COMPUTE: i32 = 3;

/// Series names accepted by `series`.
pub const SERIES: [&str; 8] = [
    "elliptic-generators",
    "k3-generators",
    "local-generators",
    "modular",
    "local-L",
    "asymptotic",
    "genus1",
    "i-function",
];

#[derive(Parser, Debug)]
#[command(name = "quasimap", version, about = "Exact series for quasimap I-functions of CY fibrations")]
struct Cli {
    /// key=value configuration file; flags override its entries
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug, Default)]
struct Common {
    #[arg(long)]
    preset: Option<String>,
    /// bivariate truncation N1,N2
    #[arg(long)]
    trunc: Option<String>,
    /// univariate order
    #[arg(long)]
    order: Option<usize>,
    /// fixed point i,j
    #[arg(long)]
    fixed_point: Option<String>,
    #[arg(long)]
    z_depth: Option<usize>,
    /// number of R_n series
    #[arg(long)]
    k_max: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// json or csv
    #[arg(long)]
    format: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Compute named series
    Series {
        name: String,
        #[command(flatten)]
        common: Common,
    },
    /// Run verification suites (`all` for every suite)
    Verify {
        #[arg(required = true)]
        suites: Vec<String>,
        /// quick or full
        #[arg(long)]
        profile: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Fit a target series in a ring basis
    Fit {
        /// formula over LL_k, UD_k, R<n>_k (q2^k slices), L, and a<k> (local)
        target: String,
        /// g[:cap], r[:cap], laurent[:cap], or comma-separated formulas
        #[arg(long)]
        basis: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Export the 1/z coefficient tables of a preset
    Export {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

/// Fully resolved settings of one invocation.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub preset: Preset,
    pub trunc: (usize, usize),
    pub order: usize,
    pub fixed_point: (usize, usize),
    pub z_depth: usize,
    pub k_max: usize,
    pub profile: Profile,
    pub basis: Option<String>,
    pub out: Option<PathBuf>,
    pub format: Format,
    /// Keys set explicitly (by file or flag).
    pub explicit: Vec<String>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            preset: Preset::LocalP1P1,
            trunc: (6, 3),
            order: 12,
            fixed_point: (0, 0),
            z_depth: 6,
            k_max: 1,
            profile: Profile::quick(),
            basis: None,
            out: None,
            format: Format::Json,
            explicit: Vec::new(),
        }
    }
}

const KEYS: [&str; 10] =
    ["preset", "trunc", "order", "fixed-point", "z-depth", "k-max", "profile", "basis", "out", "format"];

/// Parses `key=value` lines; `#` starts a comment.
pub fn parse_config(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) =
            line.split_once('=').ok_or_else(|| Error::Parse(format!("config line {}: expected key=value", n + 1)))?;
        let k = k.trim();
        if !KEYS.contains(&k) {
            return Err(Error::Unknown { kind: "config key", name: k.to_string() });
        }
        out.insert(k.to_string(), v.trim().to_string());
    }
    Ok(out)
}

fn pair(key: &str, s: &str) -> Result<(usize, usize)> {
    let bad = || Error::Parse(format!("{key}: expected two integers a,b, got {s:?}"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn positive(key: &str, s: &str) -> Result<usize> {
    match s.trim().parse::<usize>() {
        Ok(v) if v > 0 => Ok(v),
        _ => Err(Error::Parse(format!("{key}: expected a positive integer, got {s:?}"))),
    }
}

impl RunConfig {
    /// Builds a configuration from explicit `key=value` settings.
    pub fn from_map(m: &BTreeMap<String, String>) -> Result<Self> {
        let mut c = RunConfig::default();
        for (k, v) in m {
            match k.as_str() {
                "preset" => c.preset = v.parse()?,
                "trunc" => {
                    c.trunc = pair(k, v)?;
                    if c.trunc.0 == 0 || c.trunc.1 == 0 {
                        return Err(Error::Parse("trunc: bounds must be positive".into()));
                    }
                }
                "order" => c.order = positive(k, v)?,
                "fixed-point" => c.fixed_point = pair(k, v)?,
                "z-depth" => c.z_depth = positive(k, v)?,
                "k-max" => c.k_max = positive(k, v)?,
                "profile" => c.profile = Profile::by_name(v)?,
                "basis" => c.basis = Some(v.clone()),
                "out" => c.out = Some(PathBuf::from(v)),
                "format" => {
                    c.format = match v.as_str() {
                        "json" => Format::Json,
                        "csv" => Format::Csv,
                        _ => return Err(Error::Unknown { kind: "format", name: v.clone() }),
                    }
                }
                _ => return Err(Error::Unknown { kind: "config key", name: k.clone() }),
            }
        }
        c.preset.spec().check_fixed_point(c.fixed_point)?;
        c.explicit = m.keys().cloned().collect();
        Ok(c)
    }

    fn is_set(&self, key: &str) -> bool {
        self.explicit.iter().any(|k| k == key)
    }

    /// Profile with explicit `trunc`/`order` overrides applied.
    pub fn verify_profile(&self) -> Profile {
        let mut p = self.profile.clone();
        if self.is_set("trunc") {
            p.bivariate = self.trunc;
        }
        if self.is_set("order") {
            p.univariate = self.order;
            p.modular = self.order;
        }
        p
    }
}

fn overlay(m: &mut BTreeMap<String, String>, c: &Common) {
    let mut put = |k: &str, v: Option<String>| {
        if let Some(v) = v {
            m.insert(k.to_string(), v);
        }
    };
    put("preset", c.preset.clone());
    put("trunc", c.trunc.clone());
    put("order", c.order.map(|v| v.to_string()));
    put("fixed-point", c.fixed_point.clone());
    put("z-depth", c.z_depth.map(|v| v.to_string()));
    put("k-max", c.k_max.map(|v| v.to_string()));
    put("out", c.out.as_ref().map(|p| p.display().to_string()));
    put("format", c.format.clone());
}

/// Outcome of a command: artifact text and exit code.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub code: i32,
    pub summary: Option<String>,
}

/// Parses `args` (including the program name), runs the command, and writes
/// the artifact to `--out` (atomically) or to `stdout`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    let (config, command) = match resolve(&cli) {
        Ok(v) => v,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let outcome = match command {
        Command::Series(name) => cmd_series(&config, &name),
        Command::Verify(suites) => cmd_verify(&config, &suites),
        Command::Fit(target) => cmd_fit(&config, &target),
        Command::Export => cmd_export(&config),
    };
    let outcome = match outcome {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return if is_usage(&e) { EXIT_USAGE } else { EXIT_COMPUTE };
        }
    };
    if let Some(s) = &outcome.summary {
        let _ = stderr.write_all(s.as_bytes());
    }
    let written = match &config.out {
        Some(p) => write_atomic(p, &outcome.text),
        None => stdout.write_all(outcome.text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: cannot write output: {e}");
        return EXIT_COMPUTE;
    }
    outcome.code
}

fn is_usage(e: &Error) -> bool {
    matches!(e, Error::Unknown { .. } | Error::Parse(_))
}

enum Command {
    Series(String),
    Verify(Vec<String>),
    Fit(String),
    Export,
}

fn resolve(cli: &Cli) -> Result<(RunConfig, Command)> {
    let mut m = match &cli.config {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?;
            parse_config(&text)?
        }
        None => BTreeMap::new(),
    };
    let command = match &cli.cmd {
        Cmd::Series { name, common } => {
            overlay(&mut m, common);
            if !SERIES.contains(&name.as_str()) {
                return Err(Error::Unknown { kind: "series", name: name.clone() });
            }
            Command::Series(name.clone())
        }
        Cmd::Verify { suites, profile, common } => {
            overlay(&mut m, common);
            if let Some(p) = profile {
                m.insert("profile".into(), p.clone());
            }
            relations::resolve_suites(suites)?;
            Command::Verify(suites.clone())
        }
        Cmd::Fit { target, basis, common } => {
            overlay(&mut m, common);
            if let Some(b) = basis {
                m.insert("basis".into(), b.clone());
            }
            Command::Fit(target.clone())
        }
        Cmd::Export { common } => {
            overlay(&mut m, common);
            Command::Export
        }
    };
    Ok((RunConfig::from_map(&m)?, command))
}

/// Writes to a sibling temporary file, then renames over `path`.
pub fn write_atomic(path: &Path, text: &str) -> std::io::Result<()> {
    let name = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_else(|| "out".into());
    let tmp = path.with_file_name(format!(".{name}.tmp"));
    std::fs::write(&tmp, text)?;
    std::fs::rename(&tmp, path)
}

fn render(named: &BTreeMap<String, BiSeries>, format: Format) -> String {
    match format {
        Format::Json => {
            let m: BTreeMap<&String, SeriesJson> = named.iter().map(|(k, v)| (k, v.to_json_value())).collect();
            serde_json::to_string_pretty(&m).expect("series serialize") + "\n"
        }
        Format::Csv => {
            let mut s = String::from("name,zeta_order,e1,e2,value\n");
            for (k, v) in named {
                for ((a, b), c) in v.iter().filter(|(_, c)| !c.is_zero()) {
                    s.push_str(&format!("{k},{},{a},{b},{}\n", v.order(), c.to_literal()));
                }
            }
            s
        }
    }
}

fn uni_map(named: &BTreeMap<String, UniSeries>) -> BTreeMap<String, BiSeries> {
    named.iter().map(|(k, v)| (k.clone(), v.as_bi().clone())).collect()
}

fn pass(text: String) -> Outcome {
    Outcome { text, code: EXIT_PASS, summary: None }
}

/// Named series: generator rings, quasimodular forms, closed-form `L_{ij}`,
/// asymptotic data, genus-1 right-hand sides, or the small I-function.
pub fn cmd_series(c: &RunConfig, name: &str) -> Result<Outcome> {
    let named: BTreeMap<String, BiSeries> = match name {
        "elliptic-generators" => uni_map(&elliptic_generators(c.order)?.named),
        "k3-generators" => uni_map(&k3_generators(c.order)?.named),
        "local-generators" => uni_map(&local_generators(c.order)?.named),
        "modular" => uni_map(&eisenstein_and_delta(c.order)?.named),
        "local-L" => {
            let (i, j) = c.fixed_point;
            let l = crate::asymptotics::closed_form_l_local(&Preset::LocalP1P1.spec(), (i, j), c.order)?;
            BTreeMap::from([(format!("L{i}{j}"), l.into_bi())])
        }
        "asymptotic" => {
            let d = solve_r(&c.preset.spec(), c.fixed_point, c.k_max, c.trunc)?;
            let mut m =
                BTreeMap::from([("LL".to_string(), d.ansatz.big_l.clone()), ("UD".to_string(), d.ansatz.ud.clone())]);
            for (n, r) in d.ansatz.r.iter().enumerate() {
                m.insert(format!("R{n}"), r.clone());
            }
            m
        }
        "genus1" => BTreeMap::from([("F1".to_string(), genus1_rhs(c.preset, c.order)?.into_bi())]),
        "i-function" => {
            if c.format == Format::Csv {
                return Err(Error::Parse("i-function is available as json only".into()));
            }
            let ring = ClassRing::preset(c.preset);
            let i = small_i_function(&ring, c.trunc, (-(c.z_depth as i32), 4))?;
            return Ok(pass(i.to_json() + "\n"));
        }
        _ => return Err(Error::Unknown { kind: "series", name: name.to_string() }),
    };
    Ok(pass(render(&named, c.format)))
}

/// Runs suites; exit 1 unless every relation passes. The report is always produced.
pub fn cmd_verify(c: &RunConfig, suites: &[String]) -> Result<Outcome> {
    let report = relations::run(suites, &c.verify_profile())?;
    let mut summary = String::new();
    for s in &report.suites {
        let bad = s.results.iter().filter(|r| r.status == Status::Fail).count();
        summary.push_str(&format!(
            "{}: {} ({} relations, {} failed)\n",
            s.suite,
            status_word(s.status),
            s.results.len(),
            bad
        ));
    }
    let code = if report.status == Status::Pass { EXIT_PASS } else { EXIT_FAIL };
    Ok(Outcome { text: report.to_json(), code, summary: Some(summary) })
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
    }
}

#[derive(Serialize)]
struct FitArtifact {
    target: String,
    basis: String,
    preset: String,
    fixed_point: [usize; 2],
    status: Status,
    bound: Option<usize>,
    fit_order: Option<usize>,
    validated_order: Option<usize>,
    coeffs: Vec<String>,
    reason: Option<String>,
}

/// Environment of `q2^k` slices at the configured fixed point:
/// `LL_k`, `UD_k`, `R<n>_k`, `L = LL_0`, and for the local model `a<k>`
/// (slices of `I11`).
pub fn fit_env(c: &RunConfig) -> Result<Env> {
    let g = c.preset.spec();
    let d = solve_r(&g, c.fixed_point, c.k_max, c.trunc)?;
    let mut env = Env::new(g.zeta_order, (c.trunc.0, 0));
    for k in 0..=c.trunc.1 {
        env.set(&format!("LL_{k}"), d.ansatz.big_l.slice(k)?.into_bi());
        env.set(&format!("UD_{k}"), d.ansatz.ud.slice(k)?.into_bi());
        for (n, r) in d.ansatz.r.iter().enumerate() {
            env.set(&format!("R{n}_{k}"), r.slice(k)?.into_bi());
        }
    }
    env.set("L", d.ansatz.big_l.slice(0)?.into_bi());
    if c.preset == Preset::LocalP1P1 {
        let t = jkm_series(&g, c.trunc)?;
        let i11 = t.get("I11")?;
        for k in 1..=c.trunc.1 {
            env.set(&format!("a{k}"), i11.slice(k)?.into_bi());
        }
    }
    Ok(env)
}

fn parse_family(spec: &str) -> Option<(&str, usize)> {
    let (name, cap) = match spec.split_once(':') {
        Some((n, c)) => (n, c.parse().ok()?),
        None => (spec, 6),
    };
    matches!(name, "g" | "r" | "laurent").then_some((name, cap))
}

/// Fits `target` (a formula over [`fit_env`]) in the basis `c.basis`.
/// Exit 1 when no exact, re-validated fit exists.
pub fn cmd_fit(c: &RunConfig, target: &str) -> Result<Outcome> {
    let spec = c.basis.clone().ok_or_else(|| Error::Parse("fit needs --basis".into()))?;
    let env = fit_env(c)?;
    let t = UniSeries::from_bi(Axis::Q1, env.eval_str(target)?);
    let l = UniSeries::from_bi(Axis::Q1, env.lookup("L")?);
    let beta = c.preset.spec().weights2[c.fixed_point.1].clone();
    let result: Result<(Option<usize>, FitResult)> = match parse_family(&spec) {
        Some(("g", cap)) => ring_fit_adaptive(&t, cap, |b| g_ring_basis(&l, &beta, b)).map(|(b, f)| (Some(b), f)),
        Some(("r", cap)) => ring_fit_adaptive(&t, cap, |b| r_ring_basis(&l, &beta, b)).map(|(b, f)| (Some(b), f)),
        Some((_, cap)) => {
            ring_fit_adaptive(&t, cap, |b| laurent_powers(&l, -(b as i64), b as i64)).map(|(b, f)| (Some(b), f))
        }
        None => {
            let basis = spec
                .split(',')
                .map(|s| Ok(UniSeries::from_bi(Axis::Q1, env.eval_str(s)?)))
                .collect::<Result<Vec<_>>>()?;
            ring_fit(&t, &basis).map(|f| (None, f))
        }
    };
    let mut art = FitArtifact {
        target: target.to_string(),
        basis: spec,
        preset: c.preset.name().to_string(),
        fixed_point: [c.fixed_point.0, c.fixed_point.1],
        status: Status::Fail,
        bound: None,
        fit_order: None,
        validated_order: None,
        coeffs: Vec::new(),
        reason: None,
    };
    let code = match result {
        Ok((bound, f)) => {
            art.status = Status::Pass;
            art.bound = bound;
            art.fit_order = Some(f.fit_order);
            art.validated_order = Some(f.validated_order);
            art.coeffs = f.coeffs.iter().map(Cyclo::to_literal).collect();
            EXIT_PASS
        }
        Err(e @ (Error::NoSolution | Error::Ambiguous(_) | Error::ValidationFailed(_))) => {
            art.reason = Some(e.to_string());
            EXIT_FAIL
        }
        Err(e) => return Err(e),
    };
    let text = serde_json::to_string_pretty(&art).expect("fit serializes") + "\n";
    Ok(Outcome { text, code, summary: None })
}

/// The `1/z` coefficient tables of `c.preset` (the `I/J/K/𝕁/𝕂/𝕄` series for
/// the local model), truncated at `c.trunc`.
pub fn export_tables(c: &RunConfig) -> Result<CoefficientTables> {
    let g = c.preset.spec();
    if c.preset == Preset::LocalP1P1 {
        jkm_series(&g, c.trunc)
    } else {
        s_coefficient_tables(&s_operators(&g, c.trunc, 1)?)
    }
}

pub fn cmd_export(c: &RunConfig) -> Result<Outcome> {
    Ok(pass(render(&export_tables(c)?.named, c.format)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_parsing() {
        let m = parse_config("# comment\npreset = K3_FIB_42\ntrunc=4,2  # inline\n\n").unwrap();
        let c = RunConfig::from_map(&m).unwrap();
        assert_eq!(c.preset, Preset::K3Fib42);
        assert_eq!(c.trunc, (4, 2));
        assert!(parse_config("bogus=1").is_err());
        assert!(parse_config("no equals sign").is_err());
    }

    #[test]
    fn bounds_are_validated() {
        let bad = |k: &str, v: &str| RunConfig::from_map(&BTreeMap::from([(k.to_string(), v.to_string())])).is_err();
        assert!(bad("trunc", "0,3"));
        assert!(bad("order", "0"));
        assert!(bad("fixed-point", "2,0"));
        assert!(bad("format", "xml"));
        assert!(bad("profile", "slow"));
    }

    #[test]
    fn profile_overrides() {
        let m = BTreeMap::from([("order".to_string(), "10".to_string())]);
        let p = RunConfig::from_map(&m).unwrap().verify_profile();
        assert_eq!((p.bivariate, p.univariate, p.modular), ((6, 3), 10, 10));
    }
}
