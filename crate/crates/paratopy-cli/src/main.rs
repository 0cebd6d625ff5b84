//! Command-line front end: conjugate transformations, paratopism algebra,
//! enumeration, classification, stabilizers, self-verification, and
//! benchmarks.

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use paratopy::{
    autoparatopism_group, classify, count_reduced, reduced_squares, ClassKind, ConjugateTag,
    EnumOptions, LatinSquare, Partition,
};
use paratopy_cli::format::{
    format_catalog, format_grid, format_oa, parse_grid, parse_isotopism, parse_paratopism,
    CatalogRecord, FormatError,
};
use paratopy_cli::{bench, verify};

#[derive(Parser)]
#[command(
    name = "paratopy",
    version,
    about = "Latin square conjugates, paratopisms, and small-order classification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply one of the six conjugate transformations to a grid file.
    Conjugate {
        /// Conjugate tag, cycle or bracket form: "(2 3)", "[r,e,c]", "rec".
        #[arg(long)]
        eta: String,
        /// Input grid file.
        #[arg(long = "in")]
        input: PathBuf,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply an isotopism or a paratopism to a grid file.
    Apply {
        /// Isotopism "α; β; γ" (one-row forms).
        #[arg(long, conflicts_with = "par")]
        iso: Option<String>,
        /// Paratopism "α; β; γ; η".
        #[arg(long)]
        par: Option<String>,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compose two paratopisms and print the resulting quadruple.
    Compose {
        /// Left factor "α; β; γ; η" (applied second).
        first: String,
        /// Right factor (applied first).
        second: String,
    },
    /// Move a conjugate tag past an isotopism and print the swapped
    /// isotopism.
    Swap {
        #[arg(long)]
        eta: String,
        /// Isotopism "α; β; γ".
        #[arg(long)]
        iso: String,
        /// Which side of the isotopism the tag starts on: given F∘I use
        /// "left", given I∘F use "right".
        #[arg(long)]
        side: String,
    },
    /// Count (and optionally list) reduced Latin squares of one order.
    Enumerate {
        #[arg(long)]
        order: usize,
        /// "on" cuts prefixes that cannot reach class representatives.
        #[arg(long, default_value = "off")]
        pruning: String,
        #[arg(long, default_value_t = 1)]
        workers: u64,
        /// Opt in to the long-running order 7.
        #[arg(long = "allow-order-7")]
        allow_order_7: bool,
        /// Write the streamed squares, one per line, row-major.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Partition the reduced squares of one order into classes.
    Classify {
        #[arg(long)]
        order: usize,
        /// isotopy | type | inverse-type | main-class
        #[arg(long)]
        kind: String,
        #[arg(long, default_value = "off")]
        pruning: String,
        #[arg(long, default_value_t = 1)]
        workers: u64,
        #[arg(long = "allow-order-7")]
        allow_order_7: bool,
        /// Write the catalog of representatives.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the autoparatopism group of a grid file.
    Stabilizer {
        #[arg(long = "in")]
        input: PathBuf,
        /// Print every group element.
        #[arg(long)]
        elements: bool,
    },
    /// Run the oracle-equivalence and algebra-identity suites on random
    /// inputs with a fixed seed; exit nonzero on any failure.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random inputs per order per suite.
        #[arg(long, default_value_t = 50)]
        rounds: usize,
    },
    /// Time direct conjugation against the orthogonal-array route and
    /// pruned against unpruned enumeration.
    Bench {
        #[arg(long, default_value_t = 6)]
        order: usize,
        #[arg(long, default_value_t = 500)]
        iterations: usize,
    },
    /// Convert a grid file to its orthogonal array, or back.
    Oa {
        #[arg(long = "in")]
        input: PathBuf,
        /// Read an orthogonal array (three rows of n² entries) and write
        /// the grid it represents, validating orthogonality.
        #[arg(long = "from-oa")]
        from_oa: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum CliError {
    Lib(paratopy::Error),
    Format(FormatError),
    Io(std::io::Error),
    Usage(String),
    VerifyFailed,
}

impl CliError {
    fn code(&self) -> &'static str {
        match self {
            CliError::Lib(e) => e.code(),
            CliError::Format(e) => e.code(),
            CliError::Io(_) => "io-error",
            CliError::Usage(_) => "usage",
            CliError::VerifyFailed => "verify-failed",
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Format(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::VerifyFailed => write!(f, "one or more verification suites failed"),
        }
    }
}

impl From<paratopy::Error> for CliError {
    fn from(e: paratopy::Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::Format(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error[{}]: {}", err.code(), err);
            ExitCode::FAILURE
        }
    }
}

fn read_grid(path: &Path) -> Result<LatinSquare, CliError> {
    let text = std::fs::read_to_string(path)?;
    Ok(parse_grid(&text)?)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn parse_pruning(text: &str) -> Result<bool, CliError> {
    match text {
        "on" => Ok(true),
        "off" => Ok(false),
        other => Err(CliError::Usage(format!(
            "--pruning takes on|off, got {other:?}"
        ))),
    }
}

fn parse_tag(text: &str) -> Result<ConjugateTag, CliError> {
    ConjugateTag::parse(text)
        .map_err(|_| CliError::Usage(format!("unknown conjugate tag {text:?}")))
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Conjugate { eta, input, out } => {
            let tag = parse_tag(&eta)?;
            let square = read_grid(&input)?;
            emit(out.as_deref(), &format_grid(&square.conjugate(tag)))
        }
        Command::Apply {
            iso,
            par,
            input,
            out,
        } => {
            let square = read_grid(&input)?;
            let result = match (iso, par) {
                (Some(text), None) => parse_isotopism(&text)?.apply(&square)?,
                (None, Some(text)) => parse_paratopism(&text)?.apply(&square)?,
                _ => {
                    return Err(CliError::Usage(
                        "apply needs exactly one of --iso or --par".into(),
                    ))
                }
            };
            emit(out.as_deref(), &format_grid(&result))
        }
        Command::Compose { first, second } => {
            let p = parse_paratopism(&first)?;
            let q = parse_paratopism(&second)?;
            println!("{}", p.compose(&q)?);
            Ok(())
        }
        Command::Swap { eta, iso, side } => {
            let tag = parse_tag(&eta)?;
            let iso = parse_isotopism(&iso)?;
            let side = match side.as_str() {
                "left" => paratopy::SwapSide::Left,
                "right" => paratopy::SwapSide::Right,
                other => {
                    return Err(CliError::Usage(format!(
                        "--side takes left|right, got {other:?}"
                    )))
                }
            };
            println!("{}", paratopy::swap_conjugate_isotopism(tag, &iso, side));
            Ok(())
        }
        Command::Enumerate {
            order,
            pruning,
            workers,
            allow_order_7,
            out,
        } => {
            let pruning = parse_pruning(&pruning)?;
            if workers == 0 {
                return Err(CliError::Usage("--workers must be at least 1".into()));
            }
            let (count, squares) = enumerate_parallel(order, pruning, allow_order_7, workers, out.is_some())?;
            if let Some(path) = out {
                let mut text = String::new();
                for sq in &squares {
                    let cells: Vec<String> = sq
                        .cells()
                        .iter()
                        .map(|&v| (v as usize + 1).to_string())
                        .collect();
                    text.push_str(&cells.join(" "));
                    text.push('\n');
                }
                std::fs::write(path, text)?;
            }
            if pruning {
                println!("candidates: {count}");
            } else {
                println!("reduced: {count}");
            }
            Ok(())
        }
        Command::Classify {
            order,
            kind,
            pruning,
            workers,
            allow_order_7,
            out,
        } => {
            let kind = ClassKind::parse(&kind)
                .map_err(|_| CliError::Usage(format!("unknown kind {kind:?}")))?;
            let pruning = parse_pruning(&pruning)?;
            if workers == 0 {
                return Err(CliError::Usage("--workers must be at least 1".into()));
            }
            let opts = EnumOptions {
                pruning,
                allow_order_7,
                partition: Partition::default(),
            };
            let classification = classify(order, kind, &opts)?;
            let stabilizers = stabilizer_orders(&classification, workers);
            println!("order: {order}");
            println!("kind: {kind}");
            println!("reduced: {}", classification.total_reduced());
            println!("classes: {}", classification.class_count());
            for (idx, info) in classification.classes.iter().enumerate() {
                let cells: Vec<String> = info
                    .representative
                    .cells()
                    .iter()
                    .map(|&v| (v as usize + 1).to_string())
                    .collect();
                println!(
                    "class {}: size={} stabilizer={} rep={}",
                    idx + 1,
                    info.size,
                    stabilizers[idx],
                    cells.join(" ")
                );
            }
            if let Some(path) = out {
                // The catalog lists every reduced member, one class block at
                // a time in representative order.
                let mut records = Vec::new();
                for (idx, info) in classification.classes.iter().enumerate() {
                    let mut members = std::collections::BTreeSet::new();
                    for tag in kind.tags() {
                        members.extend(paratopy::isotopy_class_reduced(
                            &info.representative.conjugate(*tag),
                        ));
                    }
                    debug_assert_eq!(members.len() as u64, info.size);
                    for member in members {
                        records.push(CatalogRecord {
                            square: member,
                            kind,
                            class_index: idx + 1,
                            class_size: info.size,
                            stabilizer_order: stabilizers[idx],
                        });
                    }
                }
                std::fs::write(path, format_catalog(&records))?;
            }
            Ok(())
        }
        Command::Stabilizer { input, elements } => {
            let square = read_grid(&input)?;
            let group = autoparatopism_group(&square);
            println!("size: {}", group.size());
            if elements {
                for p in group.elements() {
                    println!("{p}");
                }
            }
            Ok(())
        }
        Command::Verify { seed, rounds } => {
            let mut rng = paratopy_cli::random::seeded_rng(seed);
            let orders = [3usize, 4, 5, 6];
            let results = verify::run_all(&mut rng, &orders, rounds);
            let mut all_ok = true;
            for r in &results {
                if r.passed() {
                    println!("ok {} checks={}", r.name, r.checks);
                } else {
                    all_ok = false;
                    println!(
                        "FAIL {} checks={} failures={} ({})",
                        r.name,
                        r.checks,
                        r.failures,
                        r.detail.as_deref().unwrap_or("no detail")
                    );
                }
            }
            if all_ok {
                println!("all suites passed");
                Ok(())
            } else {
                Err(CliError::VerifyFailed)
            }
        }
        Command::Bench { order, iterations } => {
            print!("{}", bench::run(order, iterations));
            Ok(())
        }
        Command::Oa {
            input,
            from_oa,
            out,
        } => {
            if from_oa {
                let text = std::fs::read_to_string(&input)?;
                let array = paratopy_cli::format::parse_oa(&text)?;
                let square = array.to_square()?;
                emit(out.as_deref(), &format_grid(&square))
            } else {
                let square = read_grid(&input)?;
                emit(
                    out.as_deref(),
                    &format_oa(&paratopy::OrthogonalArray::from_square(&square)),
                )
            }
        }
    }
}

/// Splits enumeration across threads by second-row rank. Counts merge by
/// sum; collected squares merge and sort, so the output is independent of
/// the worker count.
fn enumerate_parallel(
    order: usize,
    pruning: bool,
    allow_order_7: bool,
    workers: u64,
    collect: bool,
) -> Result<(u64, Vec<LatinSquare>), CliError> {
    let mut total = 0u64;
    let mut squares: Vec<LatinSquare> = Vec::new();
    let results: Vec<Result<(u64, Vec<LatinSquare>), paratopy::Error>> =
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|index| {
                    scope.spawn(move || {
                        let opts = EnumOptions {
                            pruning,
                            allow_order_7,
                            partition: Partition {
                                index,
                                count: workers,
                            },
                        };
                        let mut local = Vec::new();
                        let count = if collect {
                            reduced_squares(order, &opts, |sq| local.push(sq.clone()))?
                        } else {
                            count_reduced(order, &opts)?
                        };
                        Ok((count, local))
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("worker panicked"))
                .collect()
        });
    for r in results {
        let (count, local) = r?;
        total += count;
        squares.extend(local);
    }
    squares.sort_unstable();
    Ok((total, squares))
}

/// Stabilizer orders for every representative, computed on `workers`
/// threads.
fn stabilizer_orders(classification: &paratopy::Classification, workers: u64) -> Vec<u64> {
    let reps: Vec<&LatinSquare> = classification
        .classes
        .iter()
        .map(|c| &c.representative)
        .collect();
    if reps.is_empty() {
        return Vec::new();
    }
    let workers = (workers as usize).min(reps.len()).max(1);
    let chunk = reps.len().div_ceil(workers);
    let mut orders = vec![0u64; reps.len()];
    std::thread::scope(|scope| {
        for (slot, squares) in orders.chunks_mut(chunk).zip(reps.chunks(chunk)) {
            scope.spawn(move || {
                for (o, sq) in slot.iter_mut().zip(squares) {
                    *o = autoparatopism_group(sq).size() as u64;
                }
            });
        }
    });
    orders
}
