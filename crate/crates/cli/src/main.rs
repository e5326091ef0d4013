//! `ggs`: enumerate Belavin–Drinfeld triples, print their R-matrices, and
//! verify QYBE and the Hecke relation in batch.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ggs_core::verify::WalkMode;
use ggs_core::{construct, triple, verify_batch, BdTriple, Error, TripleCatalog, VerifyOptions};

/// Enumeration beyond this is refused unless `--allow-large` is given.
const DEFAULT_MAX_N: usize = 13;

#[derive(Parser)]
#[command(name = "ggs", version, about = "Exact checks of GGS R-matrices for sl(n)")]
struct Cli {
    /// Worker threads.
    #[arg(long, global = true, env = "GGS_JOBS", value_parser = clap::value_parser!(u16).range(1..))]
    jobs: Option<u16>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the catalog of triples modulo isomorphism and print its size.
    Enumerate {
        #[command(flatten)]
        size: SizeArgs,
        /// Catalog path (default `catalog-n<N>.json`).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the number of triples modulo isomorphism.
    Count {
        #[command(flatten)]
        size: SizeArgs,
    },
    /// Print r̃⁰ and R for one triple.
    Construct {
        #[command(flatten)]
        size: SizeArgs,
        #[command(flatten)]
        select: Selection,
    },
    /// Check QYBE and Hecke for one triple or the whole catalog.
    Verify {
        #[command(flatten)]
        size: OptionalSizeArgs,
        #[command(flatten)]
        select: Selection,
        /// Read triples from a catalog file instead of enumerating.
        #[arg(long, conflicts_with_all = ["triple_index", "triple"])]
        catalog: Option<PathBuf>,
        /// Report path (default `report-n<N>.json`).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Keep every witness and print one line per triple.
        #[arg(long)]
        verbose: bool,
        /// Cross-check against dense matrices where n permits.
        #[arg(long)]
        dense_oracle: bool,
        /// Visit every index tuple instead of walking the nonzero entries.
        #[arg(long)]
        full_walk: bool,
        /// Corrupt the given entry of R before checking.
        #[arg(long, hide = true)]
        inject_fault: Option<usize>,
    },
}

#[derive(Args)]
struct SizeArgs {
    #[arg(long, value_parser = clap::value_parser!(u16).range(2..))]
    n: u16,
    /// Lift the n ≤ 13 guard.
    #[arg(long)]
    allow_large: bool,
}

#[derive(Args)]
struct OptionalSizeArgs {
    #[arg(long, value_parser = clap::value_parser!(u16).range(2..), required_unless_present = "catalog")]
    n: Option<u16>,
    #[arg(long)]
    allow_large: bool,
}

#[derive(Args)]
#[group(multiple = false)]
struct Selection {
    /// Position in the sorted canonical catalog, 0-based.
    #[arg(long)]
    triple_index: Option<usize>,
    /// Inline triple as 1-indexed pairs, e.g. '[[1,2]]'.
    #[arg(long)]
    triple: Option<String>,
}

enum Failure {
    Usage(String),
    Checks,
    Infra(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Input(_) | Error::InvalidTriple(_) | Error::TooLarge { .. } => Failure::Usage(e.to_string()),
            other => Failure::Infra(other),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Infra(Error::Io(e))
    }
}

fn main() -> ExitCode {
    ExitCode::from(entry(std::env::args_os(), &mut io::stdout().lock(), &mut io::stderr()))
}

/// Parses `args` and runs the command, returning the process exit code.
fn entry<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return e.exit_code() as u8;
        }
    };
    let jobs = cli
        .jobs
        .map(usize::from)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |p| p.get()));
    // enumeration uses the global pool; batches build their own
    let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    let msg = match run(cli.command, jobs, out) {
        Ok(()) => return 0,
        Err(Failure::Checks) => return 1,
        Err(Failure::Usage(msg)) => msg,
        Err(Failure::Infra(e)) => e.to_string(),
    };
    let _ = writeln!(err, "error: {msg}");
    2
}

fn guard(n: usize, allow_large: bool) -> Result<usize, Failure> {
    if n > DEFAULT_MAX_N && !allow_large {
        return Err(Failure::Usage(format!(
            "n = {n} is above {DEFAULT_MAX_N}; pass --allow-large to run anyway"
        )));
    }
    Ok(n)
}

fn parse_literal(n: usize, text: &str) -> Result<BdTriple, Failure> {
    let pairs: Vec<[usize; 2]> = serde_json::from_str(text).map_err(|e| {
        Failure::Usage(format!(
            "triple literal {text:?}: expected [[source, target], ...]: {e}"
        ))
    })?;
    let pairs: Vec<(usize, usize)> = pairs.into_iter().map(|[s, d]| (s, d)).collect();
    Ok(BdTriple::validated(n, &pairs)?)
}

fn select(n: usize, sel: &Selection) -> Result<Option<BdTriple>, Failure> {
    if let Some(text) = &sel.triple {
        return parse_literal(n, text).map(Some);
    }
    let Some(idx) = sel.triple_index else { return Ok(None) };
    let cat = TripleCatalog::enumerate(n)?;
    cat.get(idx).cloned().map(Some).ok_or_else(|| {
        Failure::Usage(format!(
            "triple index {idx} out of range: n = {n} has {} triples",
            cat.count()
        ))
    })
}

fn run(cmd: Command, jobs: usize, out: &mut dyn Write) -> Result<(), Failure> {
    match cmd {
        Command::Count { size } => {
            let n = guard(size.n.into(), size.allow_large)?;
            writeln!(out, "{}", triple::count_canonical(n)?)?;
        }
        Command::Enumerate { size, out: out_path } => {
            let n = guard(size.n.into(), size.allow_large)?;
            let cat = TripleCatalog::enumerate(n)?;
            let path = out_path.unwrap_or_else(|| default_path("catalog", n));
            cat.write(&path)?;
            writeln!(out, "{}", cat.count())?;
        }
        Command::Construct { size, select: sel } => {
            let n = guard(size.n.into(), size.allow_large)?;
            let t =
                select(n, &sel)?.ok_or_else(|| Failure::Usage("construct needs --triple-index or --triple".into()))?;
            let cons = construct(&t)?;
            writeln!(out, "triple {t}")?;
            writeln!(out, "r0")?;
            for row in cons.r0.to_strings() {
                writeln!(out, "{}", row.join(" "))?;
            }
            writeln!(out, "R")?;
            write!(out, "{}", cons.r)?;
        }
        Command::Verify {
            size,
            select: sel,
            catalog,
            out: out_path,
            verbose,
            dense_oracle,
            full_walk,
            inject_fault,
        } => {
            let (n, triples) = match catalog {
                Some(path) => {
                    let cat = TripleCatalog::read(&path)?;
                    if let Some(n) = size.n {
                        if usize::from(n) != cat.n() {
                            return Err(Failure::Usage(format!(
                                "--n {n} but {} holds n = {}",
                                path.display(),
                                cat.n()
                            )));
                        }
                    }
                    (cat.n(), cat.triples().to_vec())
                }
                None => {
                    let n = guard(size.n.expect("required without --catalog").into(), size.allow_large)?;
                    match select(n, &sel)? {
                        Some(t) => (n, vec![t]),
                        None => (n, TripleCatalog::enumerate(n)?.triples().to_vec()),
                    }
                }
            };
            let opts = VerifyOptions {
                mode: if full_walk { WalkMode::Full } else { WalkMode::Sparse },
                all_witnesses: verbose,
                dense_oracle,
                fault: inject_fault,
            };
            let report = verify_batch(n, &triples, &opts, jobs)?;
            let path = out_path.unwrap_or_else(|| default_path("report", n));
            write_report(&path, &report.to_json())?;
            if verbose {
                for rec in &report.records {
                    let status = if rec.passed() { "PASS" } else { "FAIL" };
                    writeln!(
                        out,
                        "{status} {} qybe={} hecke={}",
                        rec.triple, rec.qybe_ok, rec.hecke_ok
                    )?;
                    for w in &rec.witness {
                        writeln!(out, "  {} {:?}: {} != {}", w.check, w.indices, w.lhs, w.rhs)?;
                    }
                    if let Some(e) = &rec.error {
                        writeln!(out, "  error: {e}")?;
                    }
                }
            }
            writeln!(out, "{}", report.summary)?;
            if let Some(rec) = report.records.iter().find(|r| r.error.is_some()) {
                let msg = rec.error.clone().unwrap_or_default();
                return Err(Failure::Infra(Error::Internal(format!("{}: {msg}", rec.triple))));
            }
            if report.summary.failed > 0 {
                return Err(Failure::Checks);
            }
        }
    }
    Ok(())
}

fn default_path(kind: &str, n: usize) -> PathBuf {
    PathBuf::from(format!("{kind}-n{n}.json"))
}

fn write_report(path: &Path, body: &str) -> Result<(), Failure> {
    Ok(std::fs::write(path, body)?)
}
