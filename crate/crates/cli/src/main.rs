//! Command line front end over streams of graph6 lines.
//!
//! Graphs travel on stdout so the subcommands compose as shell pipes;
//! tables, warnings and summaries go to stderr. Exit codes: 0 success,
//! 1 usage error, 2 bad input data, 3 internal invariant failure.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use rayon::prelude::*;

use nutkit_core::generate::{generate_fold, GenMode, GenOptions};
use nutkit_core::graph6::{parse_graph6, write_graph6};
use nutkit_core::nut::{is_nut_with, NutCertificate, NutTestOptions, Verdict};
use nutkit_core::report::{analyze_with, AnalyzeError, NutReport, StatsTable};

/// Lines handed to one parallel round of stream processing.
const BATCH: usize = 1024;

#[derive(Parser)]
#[command(name = "nutkit", version, about = "Generate, filter and analyse nut graphs")]
struct Cli {
    /// Certify every verdict with at least two primes, even when one
    /// prime already exceeds the determinant budget.
    #[arg(long, global = true)]
    force_multi: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write every nut graph of one order, one graph6 line each.
    Generate {
        /// Number of vertices, between 2 and 64.
        #[arg(long)]
        order: usize,

        /// Keep only graphs with girth at least this.
        #[arg(long)]
        girth: Option<usize>,

        /// Cap the vertex degrees.
        #[arg(long)]
        max_degree: Option<usize>,

        /// Restrict to chemical graphs: connected, degrees at most 3.
        #[arg(long)]
        chemical: bool,

        /// Use the duplicate-rejecting engine instead of the canonical
        /// construction path. Slower; mainly for cross-validation.
        #[arg(long)]
        dedup: bool,

        /// Print a statistics table for the emitted graphs to stderr.
        #[arg(long)]
        stats: bool,

        /// Write graphs to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Keep the nut graphs from a stream of graph6 lines.
    Filter {
        /// Read from this file instead of stdin.
        input: Option<PathBuf>,

        /// Keep only chemical graphs.
        #[arg(long)]
        chemical: bool,

        /// Keep only graphs with girth at least this.
        #[arg(long)]
        girth: Option<usize>,

        /// Report kept and dropped counts on stderr.
        #[arg(long)]
        summary: bool,

        /// Skip malformed lines instead of aborting.
        #[arg(long)]
        skip_errors: bool,
    },

    /// Print a verdict for every graph in a stream.
    Check {
        /// Read from this file instead of stdin.
        input: Option<PathBuf>,

        /// Also print each certificate: budget and per-prime evidence.
        #[arg(long)]
        certificate: bool,
    },

    /// Aggregate statistics over a stream of nut graphs.
    Stats {
        /// Read from this file instead of stdin.
        input: Option<PathBuf>,

        /// Tab-separated output instead of the aligned table.
        #[arg(long)]
        tsv: bool,

        /// Skip malformed or non-nut lines instead of aborting.
        #[arg(long)]
        skip_errors: bool,
    },
}

enum Failure {
    /// Exit 1: the invocation itself was wrong.
    Usage(String),
    /// Exit 2: the input data or an io channel let us down.
    Data(String),
    /// Exit 3: a library invariant broke; the output cannot be trusted.
    Internal(String),
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests land on stdout and exit zero.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    // The default hook would print its own noise before we report; the
    // payload message is re-raised below with the internal-error code.
    panic::set_hook(Box::new(|_| {}));
    let outcome = panic::catch_unwind(AssertUnwindSafe(|| {
        configure_workers()?;
        run(cli)
    }));
    let code = match outcome {
        Ok(Ok(())) => 0,
        Ok(Err(Failure::Usage(msg))) => {
            eprintln!("error: {msg}");
            1
        }
        Ok(Err(Failure::Data(msg))) => {
            eprintln!("error: {msg}");
            2
        }
        Ok(Err(Failure::Internal(msg))) => {
            eprintln!("internal error: {msg}");
            3
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic with unprintable payload".to_string());
            eprintln!("internal error: {msg}");
            3
        }
    };
    std::process::exit(code);
}

fn configure_workers() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("NUTKIT_WORKERS") else {
        return Ok(());
    };
    let workers: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&w| w > 0)
        .ok_or_else(|| {
            Failure::Usage(format!("NUTKIT_WORKERS must be a positive integer, got {raw:?}"))
        })?;
    // Failure here means a pool already exists; that one stays in charge.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build_global();
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    let nut_opts = NutTestOptions {
        force_multi_prime: cli.force_multi,
    };
    match cli.command {
        Command::Generate {
            order,
            girth,
            max_degree,
            chemical,
            dedup,
            stats,
            out,
        } => {
            let mut opts = GenOptions::new(order);
            opts.min_girth = girth;
            opts.max_degree = max_degree;
            opts.chemical = chemical;
            opts.force_multi_prime = cli.force_multi;
            if dedup {
                opts.mode = GenMode::Dedup;
            }
            cmd_generate(&opts, stats, out, nut_opts)
        }
        Command::Filter {
            input,
            chemical,
            girth,
            summary,
            skip_errors,
        } => cmd_filter(input, chemical, girth, summary, skip_errors, nut_opts),
        Command::Check { input, certificate } => cmd_check(input, certificate, nut_opts),
        Command::Stats {
            input,
            tsv,
            skip_errors,
        } => cmd_stats(input, tsv, skip_errors, nut_opts),
    }
}

fn cmd_generate(
    opts: &GenOptions,
    stats: bool,
    out: Option<PathBuf>,
    nut_opts: NutTestOptions,
) -> Result<(), Failure> {
    let (lines, table) = generate_fold(
        opts,
        || (String::new(), StatsTable::new()),
        |(lines, table), g| {
            lines.push_str(&write_graph6(g));
            lines.push('\n');
            if stats {
                match analyze_with(g, nut_opts) {
                    Ok(rep) => table.add(&rep),
                    Err(e) => panic!("a generated graph failed analysis: {e}"),
                }
            }
        },
        |(mut lines, mut table), (more, rest)| {
            lines.push_str(&more);
            table.merge(rest);
            (lines, table)
        },
    )
    .map_err(|e| Failure::Usage(e.to_string()))?;

    match out {
        Some(path) => {
            File::create(&path)
                .and_then(|mut f| f.write_all(lines.as_bytes()))
                .map_err(|e| Failure::Data(format!("cannot write {}: {e}", path.display())))?;
        }
        None => {
            let stdout = io::stdout();
            let mut w = stdout.lock();
            match w.write_all(lines.as_bytes()).and_then(|()| w.flush()) {
                Ok(()) => {}
                Err(e) if e.kind() == io::ErrorKind::BrokenPipe => {}
                Err(e) => return Err(Failure::Data(format!("write error: {e}"))),
            }
        }
    }
    if stats {
        eprint!("{}", table.render_aligned());
    }
    Ok(())
}

/// Reads graph6 lines, maps them through `work` in parallel batches, and
/// hands each result to `consume` in input order with its line number.
/// Blank lines and `>>`-prefixed format headers are skipped. `consume`
/// returns false to stop early, e.g. on a closed output pipe.
fn drive_stream<T: Send>(
    input: Option<PathBuf>,
    work: impl Fn(&str) -> T + Sync,
    mut consume: impl FnMut(usize, &str, T) -> Result<bool, Failure>,
) -> Result<(), Failure> {
    let reader: Box<dyn BufRead> = match &input {
        Some(p) => Box::new(BufReader::new(File::open(p).map_err(|e| {
            Failure::Data(format!("cannot open {}: {e}", p.display()))
        })?)),
        None => Box::new(BufReader::new(io::stdin())),
    };

    let mut pending: Vec<(usize, String)> = Vec::with_capacity(BATCH);
    let mut flush = |pending: &mut Vec<(usize, String)>| -> Result<bool, Failure> {
        let results: Vec<T> = pending.par_iter().map(|(_, line)| work(line)).collect();
        for ((no, line), result) in pending.drain(..).zip(results) {
            if !consume(no, &line, result)? {
                return Ok(false);
            }
        }
        Ok(true)
    };

    for (idx, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Failure::Data(format!("read error: {e}")))?;
        let line = line.trim();
        if line.is_empty() || line.starts_with(">>") {
            continue;
        }
        pending.push((idx + 1, line.to_string()));
        if pending.len() == BATCH && !flush(&mut pending)? {
            return Ok(());
        }
    }
    flush(&mut pending)?;
    Ok(())
}

fn emit(w: &mut impl Write, line: &str) -> Result<bool, Failure> {
    match writeln!(w, "{line}") {
        Ok(()) => Ok(true),
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(false),
        Err(e) => Err(Failure::Data(format!("write error: {e}"))),
    }
}

fn cmd_filter(
    input: Option<PathBuf>,
    chemical: bool,
    girth: Option<usize>,
    summary: bool,
    skip_errors: bool,
    nut_opts: NutTestOptions,
) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut w = io::BufWriter::new(stdout.lock());
    let mut seen = 0usize;
    let mut kept_by_order: BTreeMap<usize, usize> = BTreeMap::new();
    let mut skipped = 0usize;

    drive_stream(
        input,
        |line| -> Result<Option<usize>, String> {
            let g = parse_graph6(line).map_err(|e| e.to_string())?;
            if chemical && !g.is_chemical() {
                return Ok(None);
            }
            if let Some(want) = girth {
                if g.girth().is_some_and(|c| c < want) {
                    return Ok(None);
                }
            }
            Ok(is_nut_with(&g, nut_opts).is_nut().then(|| g.order()))
        },
        |no, line, keep| match keep {
            Ok(Some(order)) => {
                seen += 1;
                *kept_by_order.entry(order).or_default() += 1;
                emit(&mut w, line)
            }
            Ok(None) => {
                seen += 1;
                Ok(true)
            }
            Err(msg) if skip_errors => {
                skipped += 1;
                eprintln!("warning: line {no}: {msg}");
                Ok(true)
            }
            Err(msg) => Err(Failure::Data(format!("line {no}: {msg}"))),
        },
    )?;
    w.flush()
        .or_else(|e| (e.kind() == io::ErrorKind::BrokenPipe).then_some(()).ok_or(e))
        .map_err(|e| Failure::Data(format!("write error: {e}")))?;

    if summary {
        let kept: usize = kept_by_order.values().sum();
        let dropped = if skipped > 0 {
            format!(", skipped {skipped} bad lines")
        } else {
            String::new()
        };
        eprintln!("kept {kept} of {seen} graphs{dropped}");
        for (order, count) in &kept_by_order {
            eprintln!("  order {order}: {count}");
        }
    }
    Ok(())
}

enum CheckOutcome {
    Nut(Box<NutReport>, NutCertificate),
    NotNut(NutCertificate),
    /// The certified and exact passes disagreed; grounds for exit 3.
    Broken(String),
}

fn check_line(line: &str, nut_opts: NutTestOptions) -> Result<CheckOutcome, String> {
    let g = parse_graph6(line).map_err(|e| e.to_string())?;
    let cert = is_nut_with(&g, nut_opts);
    if !cert.is_nut() {
        return Ok(CheckOutcome::NotNut(cert));
    }
    match analyze_with(&g, nut_opts) {
        Ok(rep) => Ok(CheckOutcome::Nut(Box::new(rep), cert)),
        Err(e) => Ok(CheckOutcome::Broken(e.to_string())),
    }
}

fn report_line(rep: &NutReport) -> String {
    let kernel: Vec<String> = rep.kernel.iter().map(|x| x.to_string()).collect();
    let girth = match rep.girth {
        Some(g) => g.to_string(),
        None => "-".to_string(),
    };
    format!(
        "order={} girth={} chemical={} k={:+} dq={} r={} inertia=({},{},{}) kernel=[{}]",
        rep.order,
        girth,
        if rep.chemical { "yes" } else { "no" },
        rep.nbo_offset,
        rep.delta_q,
        rep.r,
        rep.inertia.n_plus,
        rep.inertia.n_zero,
        rep.inertia.n_minus,
        kernel.join(",")
    )
}

fn cmd_check(
    input: Option<PathBuf>,
    certificate: bool,
    nut_opts: NutTestOptions,
) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut w = io::BufWriter::new(stdout.lock());

    drive_stream(
        input,
        |line| check_line(line, nut_opts),
        |no, line, outcome| {
            let (verdict, cert) = match outcome.map_err(|e| {
                Failure::Data(format!("line {no}: {e}"))
            })? {
                CheckOutcome::Nut(rep, cert) => (format!("nut\t{}", report_line(&rep)), cert),
                CheckOutcome::NotNut(cert) => {
                    let Verdict::NotNut(reason) = cert.verdict else {
                        unreachable!("outcome and verdict always agree");
                    };
                    (format!("not a nut: {reason}"), cert)
                }
                CheckOutcome::Broken(msg) => {
                    return Err(Failure::Internal(format!("line {no}: {msg}")));
                }
            };
            if !emit(&mut w, &format!("{line}\t{verdict}"))? {
                return Ok(false);
            }
            if certificate {
                let path = if cert.fast_path {
                    "single prime covers the budget"
                } else {
                    "prime product covers the budget"
                };
                if !emit(&mut w, &format!("  budget {} ({path})", cert.budget))? {
                    return Ok(false);
                }
                for ev in &cert.evidence {
                    let kernel = match &ev.kernel {
                        Some(k) => format!(", kernel residues for {} vertices", k.len()),
                        None => String::new(),
                    };
                    if !emit(&mut w, &format!("  prime {}: rank {}{kernel}", ev.prime, ev.rank))? {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        },
    )?;
    w.flush()
        .or_else(|e| (e.kind() == io::ErrorKind::BrokenPipe).then_some(()).ok_or(e))
        .map_err(|e| Failure::Data(format!("write error: {e}")))
}

fn cmd_stats(
    input: Option<PathBuf>,
    tsv: bool,
    skip_errors: bool,
    nut_opts: NutTestOptions,
) -> Result<(), Failure> {
    let mut table = StatsTable::new();
    let mut skipped = 0usize;

    drive_stream(
        input,
        |line| -> Result<Result<NutReport, AnalyzeError>, String> {
            let g = parse_graph6(line).map_err(|e| e.to_string())?;
            Ok(analyze_with(&g, nut_opts))
        },
        |no, _line, rep| match rep {
            Ok(Ok(rep)) => {
                table.add(&rep);
                Ok(true)
            }
            Ok(Err(AnalyzeError::Internal(msg))) => {
                Err(Failure::Internal(format!("line {no}: {msg}")))
            }
            Ok(Err(e)) if skip_errors => {
                skipped += 1;
                eprintln!("warning: line {no}: {e}");
                Ok(true)
            }
            Ok(Err(e)) => Err(Failure::Data(format!("line {no}: {e}"))),
            Err(msg) if skip_errors => {
                skipped += 1;
                eprintln!("warning: line {no}: {msg}");
                Ok(true)
            }
            Err(msg) => Err(Failure::Data(format!("line {no}: {msg}"))),
        },
    )?;

    if skipped > 0 {
        eprintln!("skipped {skipped} lines");
    }
    let rendered = if tsv {
        table.render_tsv()
    } else {
        table.render_aligned()
    };
    print!("{rendered}");
    Ok(())
}
