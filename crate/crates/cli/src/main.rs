mod report;
mod text;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use engel_lab::analysis::Analysis;
use engel_lab::constructions::{parse_group_spec, GroupInstance, GroupSpec};
use engel_lab::group::{DEFAULT_ORDER_CAP, DEFAULT_SAMPLES};
use engel_lab::verify::{
    run_check_black_box, run_check_finite, search_witness, CheckId, Outcome, SearchPredicate, VerifyConfig,
    BLACK_BOX_ZOO, DEFAULT_ZOO,
};
use engel_lab::{Error, Result};
use rayon::prelude::*;

use report::{ConfigEcho, GroupReport, Meta, Report, SearchReport};

#[derive(Parser)]
#[command(name = "engel-lab", version, about = "Engel elements, radicals and theorem checks on finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structure and Engel report for each group.
    Analyze(Common),
    /// Run verification checks over a zoo of groups.
    Verify {
        #[command(flatten)]
        common: Common,
        /// `all` or a comma-separated list of check ids.
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Search the zoo for an element satisfying a predicate.
    Search {
        #[command(flatten)]
        common: Common,
        /// `macdonald_r3` or `macdonald_rn_ln`.
        #[arg(long)]
        predicate: String,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct Common {
    /// Group spec, e.g. `S4` or `wreath(C2,C2xC2)`. Repeatable.
    #[arg(short, long = "group")]
    groups: Vec<String>,
    /// `default` or a file with one group spec per line.
    #[arg(long)]
    zoo: Option<String>,
    #[arg(long, default_value_t = engel_lab::engel::DEFAULT_MAX_N)]
    max_n: usize,
    /// Largest group order that will be enumerated.
    #[arg(long, env = "ENGEL_LAB_CAP", default_value_t = DEFAULT_ORDER_CAP)]
    cap: usize,
    /// Samples per quantifier above the exhaustive limit.
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

impl Common {
    /// Zoo entries first, then explicit groups. With neither, the default
    /// zoo when `zoo_by_default` is set.
    fn specs(&self, zoo_by_default: bool) -> Result<Vec<GroupSpec>> {
        let mut texts: Vec<String> = Vec::new();
        match self.zoo.as_deref() {
            Some("default") => texts.extend(default_zoo()),
            Some(path) => {
                let body = std::fs::read_to_string(path)?;
                texts.extend(
                    body.lines()
                        .map(str::trim)
                        .filter(|l| !l.is_empty() && !l.starts_with('#'))
                        .map(String::from),
                );
            }
            None if self.groups.is_empty() && zoo_by_default => texts.extend(default_zoo()),
            None => {}
        }
        texts.extend(self.groups.iter().cloned());
        if texts.is_empty() {
            return Err(Error::Usage("no groups given; use --group or --zoo".into()));
        }
        texts.iter().map(|t| parse_group_spec(t)).collect()
    }

    fn echo(&self, command: &'static str, specs: &[GroupSpec]) -> ConfigEcho {
        ConfigEcho {
            command,
            groups: specs.iter().map(|s| s.to_string()).collect(),
            suite: None,
            predicate: None,
            max_n: self.max_n,
            cap: self.cap,
            samples: self.samples,
            format: match self.format {
                Format::Json => "json",
                Format::Text => "text",
            },
        }
    }

    fn verify_config(&self) -> VerifyConfig {
        VerifyConfig {
            seed: self.seed,
            samples: self.samples,
            max_n: self.max_n,
            ..VerifyConfig::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if self.max_n == 0 {
            return Err(Error::Usage("--max-n must be at least 1".into()));
        }
        if self.samples == 0 {
            return Err(Error::Usage("--samples must be at least 1".into()));
        }
        Ok(())
    }
}

fn default_zoo() -> impl Iterator<Item = String> {
    DEFAULT_ZOO.iter().chain(BLACK_BOX_ZOO.iter()).map(|s| s.to_string())
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Capacity { .. } => 3,
        Error::InvariantViolation(_) => 1,
        _ => 2,
    }
}

/// Runs `f` on every spec in parallel and returns the results in input
/// order, stopping at the first error in that order.
fn per_group<T: Send>(specs: &[GroupSpec], f: impl Fn(&GroupSpec) -> Result<T> + Sync + Send) -> Result<Vec<T>> {
    let results: Vec<Result<T>> = specs.par_iter().map(f).collect();
    results.into_iter().collect()
}

fn analyze(common: &Common) -> Result<(Report, bool)> {
    let specs = common.specs(false)?;
    let groups = per_group(&specs, |spec| {
        let instance = spec.instantiate(common.cap)?;
        match &instance {
            GroupInstance::Finite(g) => {
                let a = Analysis::with_max_n(g, common.max_n);
                report::group_report(spec, &instance, Some(&a))
            }
            GroupInstance::BlackBox(_) => report::group_report(spec, &instance, None),
        }
    })?;
    let report = Report {
        meta: Meta {
            version: env!("CARGO_PKG_VERSION"),
            seed: common.seed,
            config: common.echo("analyze", &specs),
        },
        groups: Some(groups),
        search: None,
    };
    Ok((report, true))
}

fn verify(common: &Common, suite: &str) -> Result<(Report, bool)> {
    let ids = CheckId::parse_suite(suite)?;
    let specs = common.specs(true)?;
    let cfg = common.verify_config();
    let groups = per_group(&specs, |spec| -> Result<GroupReport> {
        let instance = spec.instantiate(common.cap)?;
        let mut entry;
        match &instance {
            GroupInstance::Finite(g) => {
                let a = Analysis::with_max_n(g, common.max_n);
                entry = report::group_report(spec, &instance, Some(&a))?;
                for &id in &ids {
                    entry.checks.push(run_check_finite(id, spec, &a, &cfg)?);
                }
            }
            GroupInstance::BlackBox(m) => {
                entry = report::group_report(spec, &instance, None)?;
                for &id in &ids {
                    entry.checks.push(run_check_black_box(id, spec, m, &cfg)?);
                }
            }
        }
        Ok(entry)
    })?;
    let ok = groups
        .iter()
        .flat_map(|g| &g.checks)
        .all(|c| c.outcome != Outcome::Fail);
    let mut config = common.echo("verify", &specs);
    config.suite = Some(ids.iter().map(|i| i.to_string()).collect());
    let report = Report {
        meta: Meta {
            version: env!("CARGO_PKG_VERSION"),
            seed: common.seed,
            config,
        },
        groups: Some(groups),
        search: None,
    };
    Ok((report, ok))
}

fn search(common: &Common, predicate: &str) -> Result<(Report, bool)> {
    let predicate: SearchPredicate = predicate.parse()?;
    let specs: Vec<GroupSpec> = common.specs(true)?.into_iter().filter(|s| !s.is_black_box()).collect();
    let built = per_group(&specs, |spec| engel_lab::constructions::make_group(spec, common.cap))?;
    let zoo: Vec<(GroupSpec, &engel_lab::FiniteGroup)> = specs.iter().cloned().zip(built.iter()).collect();
    let result = search_witness(predicate, &zoo, common.max_n)?;
    let note = match &result {
        Some(r) => format!("first witness found in {}", r.group),
        None => "no witness in these groups; the search is bounded, so this is not a refutation".to_string(),
    };
    let mut config = common.echo("search", &specs);
    config.predicate = Some(predicate.as_str().to_string());
    let report = Report {
        meta: Meta {
            version: env!("CARGO_PKG_VERSION"),
            seed: common.seed,
            config,
        },
        groups: None,
        search: Some(SearchReport {
            predicate: predicate.as_str().to_string(),
            groups: specs.iter().map(|s| s.to_string()).collect(),
            found: result.is_some(),
            result,
            note,
        }),
    };
    Ok((report, true))
}

fn run(cli: &Cli) -> Result<bool> {
    let (common, (report, ok)) = match &cli.command {
        Command::Analyze(c) => {
            c.validate()?;
            (c, analyze(c)?)
        }
        Command::Verify { common, suite } => {
            common.validate()?;
            (common, verify(common, suite)?)
        }
        Command::Search { common, predicate } => {
            common.validate()?;
            (common, search(common, predicate)?)
        }
    };
    let mut body = match common.format {
        Format::Json => serde_json::to_string_pretty(&report).map_err(|e| Error::Io(e.to_string()))?,
        Format::Text => text::render(&report),
    };
    body.push('\n');
    match &common.out {
        Some(path) => std::fs::write(path, body)?,
        None => std::io::stdout().lock().write_all(body.as_bytes())?,
    }
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("engel-lab: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
