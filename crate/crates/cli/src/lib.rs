//! Argument parsing, execution and report rendering for the `modulus` binary.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use serde::Serialize;

use modulus_core::claims::probe::{run_probe, ProbeReport};
use modulus_core::claims::suite::{run_suite, Status, SuiteConfig};
use modulus_core::claims::{
    catalog, check_claim, find, ClaimInstance, ClaimMetadata, ClaimResult, Expectation, Verdict,
};
use modulus_core::{ComplexMatrix, TolerancePolicy};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

/// Check operator absolute-value identities on seeded random matrices.
#[derive(Debug, Parser)]
#[command(name = "modulus", version)]
pub struct Args {
    /// Claim ids separated by commas, or `all`, `theorems`, `registry`.
    #[arg(long, default_value = "all")]
    pub claims: String,

    /// Matrix dimensions separated by commas.
    #[arg(long, default_value = "2,3,4", value_delimiter = ',')]
    pub dims: Vec<usize>,

    /// Trials per claim and dimension.
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,

    /// Master seed `S`, or `S:T` to start at trial index `T`.
    #[arg(long, default_value = "42", value_parser = parse_seed)]
    pub seed: (u64, u64),

    #[arg(long, default_value_t = 1e-8)]
    pub tol_rel: f64,

    #[arg(long, default_value_t = 1e-12)]
    pub tol_abs: f64,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Print the claim catalog and exit.
    #[arg(long)]
    pub list: bool,

    /// JSON matrix files bound in order to the slots of a single claim.
    #[arg(long, num_args = 1.., value_name = "PATH")]
    pub matrix_file: Vec<PathBuf>,

    /// Evaluate conclusions on unconstrained matrices instead of the
    /// claims' ensembles.
    #[arg(long, conflicts_with = "matrix_file")]
    pub probe: bool,
}

fn parse_seed(s: &str) -> Result<(u64, u64), String> {
    let parse = |p: &str| {
        p.trim()
            .parse::<u64>()
            .map_err(|e| format!("bad seed {s:?}: {e}"))
    };
    match s.split_once(':') {
        Some((m, t)) => Ok((parse(m)?, parse(t)?)),
        None => Ok((parse(s)?, 0)),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Suite,
    Probe,
    Instance { files: Vec<PathBuf> },
    List,
}

/// Validated run configuration.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub claims: Vec<String>,
    pub dims: Vec<usize>,
    pub trials: u64,
    pub master_seed: u64,
    pub first_trial: u64,
    pub tolerance: TolerancePolicy,
    pub format: Format,
    pub mode: Mode,
}

/// A usage error: reported on stderr with exit code 2.
#[derive(Debug, Clone, PartialEq)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn expand_claims(filter: &str) -> Result<Vec<String>, UsageError> {
    let pick = |e: Expectation| -> Vec<String> {
        catalog()
            .iter()
            .filter(|c| c.expect == e)
            .map(|c| c.id.to_string())
            .collect()
    };
    let mut ids = Vec::new();
    for part in filter.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part {
            "all" => ids.extend(catalog().iter().map(|c| c.id.to_string())),
            "theorems" => ids.extend(pick(Expectation::AlwaysHolds)),
            "registry" => ids.extend(pick(Expectation::RegistryViolation)),
            id => match find(id) {
                Some(c) => ids.push(c.id.to_string()),
                None => return Err(UsageError(format!("unknown claim {id:?}; see --list"))),
            },
        }
    }
    let mut seen = std::collections::HashSet::new();
    ids.retain(|id| seen.insert(id.clone()));
    Ok(ids)
}

impl RunConfig {
    pub fn from_args(args: Args) -> Result<Self, UsageError> {
        let tolerance = TolerancePolicy::new(args.tol_rel, args.tol_abs)
            .map_err(|e| UsageError(e.to_string()))?;
        if args.dims.is_empty() || args.dims.contains(&0) {
            return Err(UsageError("--dims needs positive dimensions".into()));
        }
        let claims = expand_claims(&args.claims)?;
        let mode = if args.list {
            Mode::List
        } else if !args.matrix_file.is_empty() {
            if claims.len() != 1 {
                return Err(UsageError(
                    "--matrix-file needs exactly one claim in --claims".into(),
                ));
            }
            let claim = find(&claims[0]).expect("expanded ids exist");
            let (min, max) = claim.arity;
            let got = args.matrix_file.len();
            if got < min || got > max {
                return Err(UsageError(format!(
                    "{} takes {min}..={max} matrices ({}), got {got} files",
                    claim.id,
                    claim.slots[..max.min(claim.slots.len())].join(", ")
                )));
            }
            Mode::Instance {
                files: args.matrix_file,
            }
        } else if args.probe {
            Mode::Probe
        } else {
            Mode::Suite
        };
        Ok(Self {
            claims,
            dims: args.dims,
            trials: args.trials,
            master_seed: args.seed.0,
            first_trial: args.seed.1,
            tolerance,
            format: args.format,
            mode,
        })
    }
}

/// Parses argv. Help and version requests come back as `clap` errors whose
/// exit code is 0.
pub fn parse_config<I, T>(argv: I) -> Result<RunConfig, Box<dyn std::error::Error>>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = Args::try_parse_from(argv)?;
    Ok(RunConfig::from_args(args)?)
}

#[derive(Debug, Serialize)]
pub struct InstanceReport {
    pub claim: String,
    pub files: Vec<PathBuf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<ClaimResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum Body {
    Suite {
        claims: Vec<modulus_core::claims::suite::ClaimSummary>,
    },
    Probe {
        probes: Vec<ProbeReport>,
    },
    Instance {
        instance: InstanceReport,
    },
    List {
        catalog: Vec<ClaimMetadata>,
    },
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub version: &'static str,
    pub config: RunConfig,
    pub wall_time_seconds: f64,
    #[serde(flatten)]
    pub body: Body,
    pub verdict: Status,
}

impl Report {
    pub fn exit_code(&self) -> u8 {
        match self.verdict {
            Status::Pass => EXIT_OK,
            Status::Fail => EXIT_FAIL,
        }
    }
}

fn read_matrix(path: &PathBuf) -> Result<ComplexMatrix, UsageError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| UsageError(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

/// Runs the configured work and builds the report.
pub fn execute(cfg: &RunConfig) -> Result<Report, UsageError> {
    let start = Instant::now();
    let (body, verdict) = match &cfg.mode {
        Mode::List => (
            Body::List {
                catalog: catalog().iter().map(|c| c.metadata()).collect(),
            },
            Status::Pass,
        ),
        Mode::Suite => {
            let suite = SuiteConfig {
                claims: cfg.claims.clone(),
                dims: cfg.dims.clone(),
                trials: cfg.trials,
                first_trial: cfg.first_trial,
                master_seed: cfg.master_seed,
                pol: cfg.tolerance,
                parallel: true,
            };
            let report = run_suite(&suite).map_err(|e| UsageError(e.to_string()))?;
            (
                Body::Suite {
                    claims: report.claims,
                },
                report.verdict,
            )
        }
        Mode::Probe => {
            let mut probes = Vec::with_capacity(cfg.dims.len());
            for &dim in &cfg.dims {
                probes.push(
                    run_probe(
                        &cfg.claims,
                        dim,
                        cfg.trials,
                        cfg.master_seed,
                        &cfg.tolerance,
                    )
                    .map_err(|e| UsageError(e.to_string()))?,
                );
            }
            // Probes are evidence, not assertions.
            (Body::Probe { probes }, Status::Pass)
        }
        Mode::Instance { files } => {
            let matrices = files
                .iter()
                .map(read_matrix)
                .collect::<Result<Vec<_>, _>>()?;
            let id = &cfg.claims[0];
            let instance = ClaimInstance {
                claim_id: id.clone(),
                matrices,
                seed: None,
            };
            let claim = find(id).expect("validated id");
            let (result, error, verdict) = match check_claim(&instance, &cfg.tolerance) {
                Ok(r) => {
                    let bad =
                        claim.expect == Expectation::AlwaysHolds && r.verdict == Verdict::Violation;
                    (Some(r), None, if bad { Status::Fail } else { Status::Pass })
                }
                Err(e @ modulus_core::claims::ClaimError::MixedDimensions { .. }) => {
                    return Err(UsageError(e.to_string()))
                }
                Err(e) => (None, Some(e.to_string()), Status::Fail),
            };
            let instance = InstanceReport {
                claim: id.clone(),
                files: files.clone(),
                result,
                error,
            };
            (Body::Instance { instance }, verdict)
        }
    };
    Ok(Report {
        version: env!("CARGO_PKG_VERSION"),
        config: cfg.clone(),
        wall_time_seconds: start.elapsed().as_secs_f64(),
        body,
        verdict,
    })
}

pub fn emit_report(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => render_text(report),
    }
}

fn verdict_word(v: Status) -> &'static str {
    match v {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
    }
}

fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let cfg = &report.config;
    match &report.body {
        Body::List { catalog } => {
            for c in catalog {
                let _ = writeln!(
                    out,
                    "{:<13} {:<18} {}",
                    c.id,
                    format!("{:?}", c.expect),
                    c.statement
                );
            }
            return out;
        }
        Body::Suite { claims } => {
            let _ = writeln!(
                out,
                "{:<13} {:>7} {:>7} {:>5} {:>8} {:>6} {:>11}  status",
                "claim", "trials", "passes", "viol", "hyp-fail", "errors", "worst ratio"
            );
            for s in claims {
                let ratio = s
                    .worst_residual
                    .as_ref()
                    .map(|w| modulus_core::Check::new(w.residual, w.bound).ratio())
                    .map_or("-".to_string(), |r| format!("{r:.3e}"));
                let _ = writeln!(
                    out,
                    "{:<13} {:>7} {:>7} {:>5} {:>8} {:>6} {:>11}  {}",
                    s.id,
                    s.trials,
                    s.passes,
                    s.violations.len(),
                    s.hypothesis_failures,
                    s.numerical_errors.len(),
                    ratio,
                    verdict_word(s.status)
                );
                for v in &s.violations {
                    let _ = writeln!(
                        out,
                        "  violation n={} seed {} (replay: --claims {} --dims {} --seed {} --trials 1)",
                        v.dim, v.replay, s.id, v.dim, v.replay
                    );
                }
                for e in &s.numerical_errors {
                    let seed = e.seed.as_ref().map_or("-".into(), |s| s.replay_token());
                    let _ = writeln!(out, "  error n={} seed {}: {}", e.dim, seed, e.message);
                }
                if let Some(r) = &s.registry {
                    let _ = writeln!(
                        out,
                        "  registry {}: verdict {:?}",
                        if r.matched { "reproduced" } else { "MISMATCH" },
                        r.result.verdict
                    );
                    if let Some(note) = r.note {
                        let _ = writeln!(out, "  note: {note}");
                    }
                }
            }
        }
        Body::Probe { probes } => {
            for p in probes {
                let _ = writeln!(out, "probe n={} ({} draws per claim)", p.dim, cfg.trials);
                for c in &p.claims {
                    let _ = writeln!(
                        out,
                        "  {:<13} {:>7} violations {:>5} errors",
                        c.id, c.violations, c.errors
                    );
                }
                if !p.exceptions.is_empty() {
                    let _ = writeln!(out, "  held on every draw: {}", p.exceptions.join(", "));
                }
                if !p.undefined.is_empty() {
                    let _ = writeln!(out, "  undefined on every draw: {}", p.undefined.join(", "));
                }
            }
        }
        Body::Instance { instance } => {
            let _ = writeln!(out, "claim {}", instance.claim);
            if let Some(r) = &instance.result {
                for c in r.hypotheses.iter().chain(&r.conclusions) {
                    let _ = writeln!(
                        out,
                        "  {:<5} {:<34} residual {:.3e}  bound {:.3e}",
                        if c.check.holds { "ok" } else { "fails" },
                        c.name,
                        c.check.residual,
                        c.check.bound
                    );
                }
                let _ = writeln!(out, "result {:?}", r.verdict);
            }
            if let Some(e) = &instance.error {
                let _ = writeln!(out, "error: {e}");
            }
        }
    }
    let _ = writeln!(
        out,
        "verdict: {} (seed {}, {:.2}s)",
        verdict_word(report.verdict),
        cfg.master_seed,
        report.wall_time_seconds
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(args: &[&str]) -> RunConfig {
        let argv = std::iter::once("modulus").chain(args.iter().copied());
        match parse_config(argv) {
            Ok(c) => c,
            Err(e) => panic!("{e}"),
        }
    }

    #[test]
    fn parses_stated_flags() {
        let c = cfg(&[
            "--claims", "C-TRI", "--dims", "2", "--trials", "100", "--seed", "7",
        ]);
        assert_eq!(c.claims, ["C-TRI"]);
        assert_eq!(c.dims, [2]);
        assert_eq!((c.trials, c.master_seed, c.first_trial), (100, 7, 0));
        assert_eq!(c.mode, Mode::Suite);
        assert_eq!(c.tolerance, TolerancePolicy::suite());
    }

    #[test]
    fn seed_with_trial_index() {
        let c = cfg(&["--seed", "9:123"]);
        assert_eq!((c.master_seed, c.first_trial), (9, 123));
    }

    #[test]
    fn group_names_expand() {
        assert_eq!(cfg(&["--claims", "registry"]).claims.len(), 5);
        assert_eq!(cfg(&["--claims", "theorems"]).claims.len(), 29);
        assert_eq!(cfg(&[]).claims.len(), 34);
        assert_eq!(cfg(&["--claims", "C-TRI,all"]).claims.len(), 34);
    }

    #[test]
    fn usage_errors() {
        for bad in [
            &["--format", "yaml"][..],
            &["--trials", "0"],
            &["--dims", "0"],
            &["--claims", "C-NOPE"],
            &["--tol-rel", "-1"],
            &["--seed", "x"],
            &["--bogus"],
            &["--claims", "C-TRI,C-REIM", "--matrix-file", "a.json"],
            &["--claims", "C-TRI", "--matrix-file", "a.json"],
        ] {
            let argv = std::iter::once("modulus").chain(bad.iter().copied());
            assert!(parse_config(argv).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn empty_filter_passes() {
        let r = execute(&cfg(&["--claims", ""])).unwrap();
        let json: serde_json::Value = serde_json::from_str(&emit_report(&r, Format::Json)).unwrap();
        assert_eq!(json["claims"], serde_json::json!([]));
        assert_eq!(json["verdict"], "pass");
    }

    #[test]
    fn json_keys_in_stable_order() {
        let r = execute(&cfg(&[
            "--claims", "C-REIM", "--dims", "2", "--trials", "3", "--format", "json",
        ]))
        .unwrap();
        let text = emit_report(&r, Format::Json);
        let pos = |k: &str| text.find(&format!("\"{k}\"")).unwrap();
        assert!(pos("version") < pos("config"));
        assert!(pos("config") < pos("claims"));
        assert!(pos("claims") < pos("verdict"));
    }

    #[test]
    fn text_table_lists_each_claim() {
        let r = execute(&cfg(&[
            "--claims",
            "C-TRI,CE-1",
            "--dims",
            "2",
            "--trials",
            "2",
        ]))
        .unwrap();
        let text = emit_report(&r, Format::Text);
        assert!(text.contains("C-TRI"));
        assert!(text.contains("registry reproduced"));
        assert!(text.ends_with('\n'));
    }
}
