use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigUint;

use chardeg::degree::default_workers;
use chardeg::lemmas::{self, default_range, run_check, CHECK_IDS};
use chardeg::verdict::{render_report, totals};
use chardeg::{cdset, DegreeEngine, GroupKind, GroupTag, LemmaVerdict};

#[derive(Parser)]
#[command(name = "chardeg", version, about = "Exact character degrees of S_n, A_n and their double covers")]
struct Cli {
    /// Directory holding CDSET cache files.
    #[arg(long, global = true, env = "CHARDEG_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Ignore the cache directory and recompute everything.
    #[arg(long, global = true)]
    no_cache: bool,
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    workers: Option<u32>,
    /// Largest n any command may touch.
    #[arg(long, global = true, default_value_t = 80)]
    max_n: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a degree set and write it as CDSET.
    Compute {
        #[arg(long)]
        group: GroupKind,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        multiplicity: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The k smallest nontrivial degrees.
    Mindeg {
        #[arg(long)]
        group: GroupKind,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 4)]
        k: usize,
    },
    /// Prints `true` or `false`.
    Member {
        #[arg(long)]
        group: GroupKind,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        value: BigUint,
    },
    /// Degrees of A_n divisible by the index, divided by it.
    QuotientSet {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        index: u64,
    },
    /// Faithful degrees of a double cover.
    Spin {
        #[arg(long)]
        group: GroupKind,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        multiplicity: bool,
    },
    /// Run selected checks.
    Verify {
        /// Check id; repeatable. Defaults to every check.
        #[arg(long = "check")]
        checks: Vec<String>,
        #[arg(long)]
        n_min: Option<u32>,
        #[arg(long)]
        n_max: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        timings: bool,
    },
    /// Run every check with ranges capped at n-cap.
    Report {
        #[arg(long, default_value_t = 40)]
        n_cap: u32,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        timings: bool,
    },
}

struct Usage(String);

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            eprintln!("chardeg: {msg}");
            ExitCode::from(2)
        }
    }
}

fn tag(kind: GroupKind, n: u32, max_n: u32) -> Result<GroupTag, Usage> {
    if n > max_n {
        return Err(Usage(format!("n={n} exceeds --max-n {max_n}")));
    }
    GroupTag::new(kind, n).map_err(|e| Usage(e.to_string()))
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Usage> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn lines<T: ToString>(values: impl IntoIterator<Item = T>) -> String {
    values.into_iter().map(|v| v.to_string() + "\n").collect()
}

fn verdict_exit(verdicts: &[LemmaVerdict], timings: bool, out: Option<&PathBuf>) -> Result<ExitCode, Usage> {
    emit(&render_report(verdicts, timings), out)?;
    Ok(if totals(verdicts).fail > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn run(cli: Cli) -> Result<ExitCode, Usage> {
    let workers = cli.workers.map_or_else(default_workers, |w| w as usize);
    let mut engine = DegreeEngine::new(workers);
    if let (Some(dir), false) = (&cli.cache_dir, cli.no_cache) {
        fs::create_dir_all(dir).map_err(|e| Usage(format!("{}: {e}", dir.display())))?;
        engine = engine.with_cache_dir(dir);
    }
    let engine_err = |e: chardeg::error::EngineError| Usage(e.to_string());
    let max_n = cli.max_n;

    match cli.command {
        Command::Compute { group, n, multiplicity, out } => {
            let set = engine.degree_set(tag(group, n, max_n)?, multiplicity).map_err(engine_err)?;
            match out {
                Some(path) => cdset::write(&set, &path).map_err(|e| Usage(e.to_string()))?,
                None => print!("{}", cdset::encode(&set)),
            }
        }
        Command::Mindeg { group, n, k } => {
            let table = engine.minimal_degrees(tag(group, n, max_n)?, k).map_err(engine_err)?;
            print!("{}", lines(&table.entries));
        }
        Command::Member { group, n, value } => {
            let found = engine.is_degree(tag(group, n, max_n)?, &value).map_err(engine_err)?;
            println!("{found}");
        }
        Command::QuotientSet { n, index } => {
            tag(GroupKind::Alternating, n, max_n)?;
            let q = engine.quotient_set(n, index).map_err(engine_err)?;
            print!("{}", lines(&q.values));
        }
        Command::Spin { group, n, multiplicity } => {
            if !group.is_cover() {
                return Err(Usage(format!("spin needs a double cover (2S or 2A), got {}", group.label())));
            }
            let set = engine.degree_set(tag(group, n, max_n)?, multiplicity).map_err(engine_err)?;
            match set.multiplicities() {
                Some(m) => print!(
                    "{}",
                    lines(set.degrees().iter().zip(m).map(|(d, m)| format!("{d} {m}")))
                ),
                None => print!("{}", lines(set.degrees())),
            }
        }
        Command::Verify { checks, n_min, n_max, out, timings } => {
            let ids: Vec<String> = if checks.is_empty() {
                CHECK_IDS.iter().map(|s| s.to_string()).collect()
            } else {
                checks
            };
            if let Some(hi) = n_max.filter(|&hi| hi > max_n) {
                return Err(Usage(format!("--n-max {hi} exceeds --max-n {max_n}")));
            }
            let mut verdicts = Vec::new();
            for id in &ids {
                let range = match (n_min, n_max, default_range(id)) {
                    (None, None, _) | (_, _, None) => None,
                    (lo, hi, Some((dlo, dhi))) => Some((lo.unwrap_or(dlo), hi.unwrap_or(dhi))),
                };
                let found = run_check(&engine, id, range, max_n).map_err(|e| Usage(e.to_string()))?;
                verdicts.extend(found);
            }
            return verdict_exit(&verdicts, timings, out.as_ref());
        }
        Command::Report { n_cap, out, timings } => {
            if n_cap < 16 {
                return Err(Usage(format!("--n-cap must be at least 16, got {n_cap}")));
            }
            if n_cap > max_n {
                return Err(Usage(format!("--n-cap {n_cap} exceeds --max-n {max_n}")));
            }
            let verdicts = lemmas::run_all(&engine, n_cap);
            return verdict_exit(&verdicts, timings, out.as_ref());
        }
    }
    Ok(ExitCode::SUCCESS)
}
