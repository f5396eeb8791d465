//! Argument handling and command execution.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use gradedtor_core::catalog::{self, MAX_DEGREE_CAP};
use gradedtor_core::idealcalc::{degree_reports, membership};
use gradedtor_core::verify::{default_campaign, run_campaign, Verifier, CAMPAIGN_ENTRIES};
use gradedtor_core::{CatalogEntry, ClaimStatus, Closure, Membership};

use crate::parse::{parse_poly, ParseError};
use crate::report::{render, Format, Report};

pub const THREADS_ENV: &str = "GRADEDTOR_THREADS";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("malformed polynomial: {0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Catalog(#[from] gradedtor_core::CatalogError),
    #[error(transparent)]
    Verify(#[from] gradedtor_core::VerifyError),
    #[error(transparent)]
    Ideal(#[from] gradedtor_core::IdealError),
    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

#[derive(Debug, Parser)]
#[command(
    name = "gradedtor",
    version,
    about = "Exact degreewise ranks and torsion of graded ring presentations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List catalog entries.
    List(Common),
    /// Ranks and torsion of each even degree of an entry.
    Scan(Common),
    /// Compare quotient ranks with the expected Poincaré series.
    Poincare(Common),
    /// Decide ideal membership of a homogeneous polynomial.
    Member {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        poly: String,
    },
    /// Run verification claims.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Run the full default campaign.
        #[arg(long)]
        all: bool,
        /// Claim id, e.g. `counterexample` or `torsion:SO3`. Repeatable.
        #[arg(long = "claim")]
        claims: Vec<String>,
    },
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    #[arg(long)]
    pub entry: Option<String>,
    /// Even degree bound, at most 40. Defaults to 20, or 16 for two-sided entries.
    #[arg(long)]
    pub max_degree: Option<u32>,
    /// Use the ideal without rational closure.
    #[arg(long, conflicts_with = "close_after_plain")]
    pub no_closure: bool,
    /// Close after adding the plain generators instead of before.
    #[arg(long)]
    pub close_after_plain: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Report `meta.runtime_ms` as 0 so output is byte-reproducible.
    #[arg(long)]
    pub omit_runtime: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommandKind {
    List,
    Scan,
    Poincare,
    Member,
    Verify,
}

/// Validated settings for one invocation.
#[derive(Clone, Debug)]
pub struct CliConfig {
    pub command: CommandKind,
    pub entry: Option<String>,
    pub max_degree: u32,
    pub closure: Closure,
    pub format: Format,
    pub output_path: Option<PathBuf>,
    pub poly: Option<String>,
    pub claims: Vec<String>,
    pub all: bool,
    pub omit_runtime: bool,
}

impl CliConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        let (command, common, poly, claims, all) = match cli.command {
            Command::List(c) => (CommandKind::List, c, None, Vec::new(), false),
            Command::Scan(c) => (CommandKind::Scan, c, None, Vec::new(), false),
            Command::Poincare(c) => (CommandKind::Poincare, c, None, Vec::new(), false),
            Command::Member { common, poly } => {
                (CommandKind::Member, common, Some(poly), Vec::new(), false)
            }
            Command::Verify {
                common,
                all,
                claims,
            } => (CommandKind::Verify, common, None, claims, all),
        };
        let needs_entry = matches!(
            command,
            CommandKind::Scan | CommandKind::Poincare | CommandKind::Member
        );
        if needs_entry && common.entry.is_none() {
            return Err(CliError::Usage("--entry is required".into()));
        }
        if command == CommandKind::Verify && !all && claims.is_empty() && common.entry.is_none() {
            return Err(CliError::Usage(
                "verify needs --all, --claim or --entry".into(),
            ));
        }
        let default = common
            .entry
            .as_deref()
            .map_or(catalog::DEFAULT_MAX_DEGREE, catalog::default_max_degree);
        let max_degree = common.max_degree.unwrap_or(default);
        if max_degree % 2 == 1 {
            return Err(CliError::Usage(format!(
                "--max-degree must be even, got {max_degree}"
            )));
        }
        if max_degree > MAX_DEGREE_CAP {
            return Err(CliError::Usage(format!(
                "--max-degree must be at most {MAX_DEGREE_CAP}, got {max_degree}"
            )));
        }
        let entry = match &common.entry {
            Some(name) => Some(catalog::lookup(name, Some(max_degree))?.name().to_string()),
            None => None,
        };
        let closure = if common.no_closure {
            Closure::Off
        } else if common.close_after_plain {
            Closure::AfterPlain
        } else {
            Closure::Families
        };
        Ok(CliConfig {
            command,
            entry,
            max_degree,
            closure,
            format: common.format,
            output_path: common.output,
            poly,
            claims,
            all,
            omit_runtime: common.omit_runtime,
        })
    }

    fn entry(&self) -> Result<CatalogEntry, CliError> {
        let name = self
            .entry
            .as_deref()
            .ok_or_else(|| CliError::Usage("--entry is required".into()))?;
        Ok(catalog::lookup(name, Some(self.max_degree))?)
    }
}

/// Rendered output and the process exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub exit_code: i32,
}

pub fn execute(config: &CliConfig) -> Result<Outcome, CliError> {
    let started = Instant::now();
    let (mut report, exit_code) = match config.command {
        CommandKind::List => {
            return Ok(Outcome {
                output: list(config.format),
                exit_code: 0,
            })
        }
        CommandKind::Member => return member(config),
        CommandKind::Scan => (scan(config)?, 0),
        CommandKind::Poincare => {
            let r = scan(config)?;
            let code = if r.series_match == Some(false) { 1 } else { 0 };
            (r, code)
        }
        CommandKind::Verify => {
            let r = verify(config)?;
            let failed = r
                .claims
                .iter()
                .any(|c| c.status == ClaimStatus::Fail.as_str());
            (r, i32::from(failed))
        }
    };
    if !config.omit_runtime {
        report.meta.runtime_ms = started.elapsed().as_millis() as u64;
    }
    let output = match (config.command, config.format) {
        (CommandKind::Poincare, Format::Text) => poincare_text(&report),
        (_, format) => render(&report, format),
    };
    Ok(Outcome { output, exit_code })
}

fn scan(config: &CliConfig) -> Result<Report, CliError> {
    let entry = config.entry()?;
    let reports = degree_reports(&entry.presentation, config.max_degree, config.closure)?;
    let expected = entry
        .expected_series
        .as_ref()
        .map(|s| s.even_coefficients(config.max_degree));
    Ok(
        Report::new(entry.name(), config.max_degree, config.closure.is_on())
            .with_degrees(&reports, expected),
    )
}

fn poincare_text(report: &Report) -> String {
    let mut out = format!(
        "entry {}  max degree {}\n{:>6}  {:>8}  {:>8}\n",
        report.entry, report.max_degree, "degree", "computed", "expected"
    );
    let expected = report.expected_series.clone().unwrap_or_default();
    for (i, r) in report.degrees.iter().enumerate() {
        let e = expected.get(i).map_or("-".to_string(), |x| x.to_string());
        out.push_str(&format!(
            "{:>6}  {:>8}  {:>8}\n",
            r.degree, r.quotient_rank, e
        ));
    }
    let verdict = match report.series_match {
        Some(true) => "match",
        Some(false) => "MISMATCH",
        None => "no expected series",
    };
    out.push_str(verdict);
    out.push('\n');
    out
}

fn verify(config: &CliConfig) -> Result<Report, CliError> {
    let mut ids = if config.all {
        default_campaign()
    } else {
        Vec::new()
    };
    ids.extend(config.claims.iter().cloned());
    let claim_results = run_campaign(&ids, config.max_degree)?;
    let Some(_) = &config.entry else {
        let label = if config.all { "all" } else { "claims" };
        return Ok(
            Report::new(label, config.max_degree, config.closure.is_on())
                .with_claims(&claim_results),
        );
    };
    let entry = config.entry()?;
    let d = config.max_degree;
    let verifier = Verifier::new();
    let reports = verifier.scan(&entry, d, config.closure)?;
    let mut results = vec![verifier.torsion_free(&entry, d, config.closure.is_on())?];
    if entry.expected_series.is_some() {
        results.push(verifier.poincare(&entry, d)?);
    }
    results.extend(claim_results);
    let expected = entry
        .expected_series
        .as_ref()
        .map(|s| s.even_coefficients(d));
    Ok(Report::new(entry.name(), d, config.closure.is_on())
        .with_degrees(&reports, expected)
        .with_claims(&results))
}

fn member(config: &CliConfig) -> Result<Outcome, CliError> {
    let entry = config.entry()?;
    let text = config.poly.as_deref().unwrap_or_default();
    let f = parse_poly(text)?;
    let m = membership(&f, &entry.presentation, config.closure)?;
    let multiplier = match &m {
        Membership::InIdeal => Some(1.to_string()),
        Membership::InClosure(k) => Some(k.to_string()),
        Membership::Outside => None,
    };
    let output = match config.format {
        Format::Text => format!("{m}\n"),
        Format::Csv => format!(
            "membership,multiplier\n{m},{}\n",
            multiplier.unwrap_or_default()
        ),
        Format::Json => {
            let v = serde_json::json!({
                "entry": entry.name(),
                "poly": f.to_string(),
                "closure": config.closure.is_on(),
                "membership": m.to_string(),
                "multiplier": multiplier.map(|s| s.parse::<serde_json::Number>().expect("decimal integer")),
            });
            format!(
                "{}\n",
                serde_json::to_string_pretty(&v).expect("json value")
            )
        }
    };
    Ok(Outcome {
        output,
        exit_code: 0,
    })
}

fn list(format: Format) -> String {
    let entries: Vec<CatalogEntry> = CAMPAIGN_ENTRIES
        .iter()
        .chain(&["Spinc3(0)", "Spinc3(1)"])
        .map(|n| catalog::lookup(n, None).expect("catalog names resolve"))
        .collect();
    let series = |e: &CatalogEntry| e.expected_series.as_ref().map(|s| s.to_string());
    match format {
        Format::Json => {
            let v: Vec<_> = entries
                .iter()
                .map(|e| {
                    serde_json::json!({
                        "name": e.name(),
                        "default_max_degree": e.max_degree(),
                        "two_sided": e.is_two_sided(),
                        "expected_series": series(e),
                        "description": e.description,
                    })
                })
                .collect();
            format!(
                "{}\n",
                serde_json::to_string_pretty(&v).expect("json value")
            )
        }
        Format::Csv => {
            let mut out = String::from("name,default_max_degree,two_sided\n");
            for e in &entries {
                out.push_str(&format!(
                    "{},{},{}\n",
                    csv_field(e.name()),
                    e.max_degree(),
                    e.is_two_sided()
                ));
            }
            out
        }
        Format::Text => {
            let mut out = format!("templates: {}\n", catalog::entry_templates().join(", "));
            for e in &entries {
                out.push_str(&format!(
                    "{:<10} D={:<3} {}\n",
                    e.name(),
                    e.max_degree(),
                    series(e).unwrap_or_else(|| "-".into())
                ));
            }
            out
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains(',') {
        format!("\"{s}\"")
    } else {
        s.to_string()
    }
}

/// Sizes the global thread pool from `GRADEDTOR_THREADS`, if set.
pub fn configure_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = v.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        CliError::Usage(format!(
            "{THREADS_ENV} must be a positive integer, got `{v}`"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(format!("cannot size thread pool: {e}")))
}

/// Parses `args`, runs the command and writes results. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match CliConfig::from_cli(cli).and_then(|c| execute(&c).and_then(|o| emit(&c, o))) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn emit(config: &CliConfig, outcome: Outcome) -> Result<i32, CliError> {
    match &config.output_path {
        Some(path) => std::fs::write(path, &outcome.output).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?,
        None => print!("{}", outcome.output),
    }
    Ok(outcome.exit_code)
}
