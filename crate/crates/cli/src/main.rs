use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use rayon::prelude::*;
use sombor_core::enumeration::{enumerate_unicyclic, verify_theorem, CSV_HEADER};
use sombor_core::graph::{is_isomorphic, parse_edge_list, write_edge_list};
use sombor_core::sombor::{
    build_extremal, check_f_monotone, check_g_monotone, closed_form_so, compare_ineq_cd, compare_ineq_mn,
    format_sig, sombor_index, InequalityOutcome, MnVariant,
};
use sombor_core::transforms::ascend;
use sombor_core::{ExtremalParams, Graph};

/// Sombor index tools for unicyclic graphs.
#[derive(Debug, Parser)]
#[command(name = "sombor", version)]
struct Cli {
    /// Cap on worker threads for parallel work.
    #[arg(long, global = true, value_name = "T", value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print SO(G) of an edge-list file.
    Index { file: PathBuf },
    /// Print SO(𝒢(N, k)) from the closed form.
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Also print the edge list of 𝒢(N, k).
        #[arg(long)]
        emit_graph: bool,
    },
    /// Search every class 𝒰(N, k) with N <= M for its maximisers.
    Verify {
        #[arg(long, value_name = "M")]
        n_max: usize,
        /// Write per-class rows, with runtimes, to this CSV file.
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
    },
    /// Run the greedy SO ascent from an edge-list file.
    Ascend {
        file: PathBuf,
        /// Also write the trace records to this file.
        #[arg(long, value_name = "PATH")]
        trace: Option<PathBuf>,
    },
    /// Sweep the inequality and monotonicity checkers.
    CheckLemmas {
        #[arg(long, value_name = "R", default_value_t = 200)]
        range: usize,
    },
    /// Print one edge list per unicyclic graph on N vertices.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Only graphs with this many pendant vertices.
        #[arg(long)]
        k: Option<usize>,
    },
}

/// What a command reports back besides its output.
enum Status {
    Passed,
    Failed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Status::Passed) => ExitCode::SUCCESS,
        Ok(Status::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<Status> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(usize::from(t))
            .build_global()
            .context("configuring the thread pool")?;
    }
    let mut out = io::stdout().lock();
    match cli.command {
        Command::Index { file } => {
            let g = read_graph(&file)?;
            writeln!(out, "{}", sombor_index::<f64>(&g))?;
            Ok(Status::Passed)
        }
        Command::Extremal { n, k, emit_graph } => {
            let p = ExtremalParams::new(n, k)?;
            writeln!(out, "{}", closed_form_so::<f64>(p))?;
            if emit_graph {
                out.write_all(write_edge_list(&build_extremal(p)).as_bytes())?;
            }
            Ok(Status::Passed)
        }
        Command::Verify { n_max, csv } => verify(&mut out, n_max, csv.as_deref()),
        Command::Ascend { file, trace } => ascend_file(&mut out, &file, trace.as_deref()),
        Command::CheckLemmas { range } => check_lemmas(&mut out, range),
        Command::Enumerate { n, k } => {
            for (i, g) in enumerate_unicyclic(n, k)?.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                out.write_all(write_edge_list(g).as_bytes())?;
            }
            Ok(Status::Passed)
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_edge_list(&text).with_context(|| path.display().to_string())
}

fn verify(out: &mut impl Write, n_max: usize, csv: Option<&Path>) -> Result<Status> {
    let reports = verify_theorem(n_max)?;
    writeln!(
        out,
        "{:>3} {:>3} {:>6} {:>14} {:>14} {:>4} {:>8} {:>14}",
        "N", "k", "class", "maxValue", "extremalValue", "max", "matches", "runnerUpGap"
    )?;
    for r in &reports {
        let gap = r.runner_up_gap.map_or_else(|| "-".into(), |g| format_sig(g, 10));
        writeln!(
            out,
            "{:>3} {:>3} {:>6} {:>14} {:>14} {:>4} {:>8} {:>14}",
            r.params.n(),
            r.params.k(),
            r.class_size,
            format_sig(r.max_value, 10),
            format_sig(r.extremal_value, 10),
            r.maximizers.len(),
            r.matches_extremal,
            gap
        )?;
    }
    let passing = reports.iter().filter(|r| r.passes()).count();
    writeln!(out, "{passing} of {} classes have 𝒢(N,k) as unique maximiser", reports.len())?;

    if let Some(path) = csv {
        let mut text = String::from(CSV_HEADER);
        text.push('\n');
        for r in &reports {
            writeln!(text, "{}", r.csv_row())?;
        }
        fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(if passing == reports.len() { Status::Passed } else { Status::Failed })
}

fn ascend_file(out: &mut impl Write, file: &Path, trace_path: Option<&Path>) -> Result<Status> {
    let g = read_graph(file)?;
    let k = g.pendant_count();
    if k == 0 {
        bail!("{}: graph has no pendant vertex (need k ≥ 1)", file.display());
    }
    let trace = ascend(&g)?;
    let records = trace.to_records();
    out.write_all(records.as_bytes())?;
    if let Some(path) = trace_path {
        fs::write(path, &records).with_context(|| format!("writing {}", path.display()))?;
    }
    let p = ExtremalParams::new(g.vertex_count(), k)?;
    let reached = is_isomorphic(trace.final_graph(), &build_extremal(p))?;
    let verdict = if reached { "yes" } else { "no" };
    writeln!(out, "isomorphic to 𝒢({},{}): {verdict}", p.n(), p.k())?;
    Ok(if reached { Status::Passed } else { Status::Failed })
}

fn check_lemmas(out: &mut impl Write, range: usize) -> Result<Status> {
    if range < 2 {
        bail!("--range must be at least 2, got {range}");
    }
    let pairs = |lo: usize| -> Vec<(usize, usize)> {
        (lo..=range).flat_map(|a| (lo..=range).map(move |b| (a, b))).collect()
    };
    let mut failures = 0;
    let mut line = |name: &str, cases: usize, bad: usize, equal: Option<usize>| -> io::Result<()> {
        failures += bad;
        match equal {
            Some(eq) => writeln!(out, "{name}: {cases} cases, {bad} counterexamples, {eq} equal"),
            None => writeln!(out, "{name}: {cases} cases, {bad} counterexamples"),
        }
    };

    let ab = pairs(1);
    let f_bad = ab.par_iter().filter(|&&(a, b)| !check_f_monotone::<f64>(a, b, range).unwrap()).count();
    line("f increasing", ab.len(), f_bad, None)?;
    let ab_desc: Vec<_> = ab.iter().copied().filter(|&(a, b)| a > b).collect();
    let g_bad = ab_desc.par_iter().filter(|&&(a, b)| !check_g_monotone::<f64>(a, b, range).unwrap()).count();
    line("g decreasing", ab_desc.len(), g_bad, None)?;

    let tally = |outcomes: Vec<InequalityOutcome>| {
        let bad = outcomes.iter().filter(|o| **o == InequalityOutcome::Violated).count();
        let eq = outcomes.iter().filter(|o| **o == InequalityOutcome::Equal).count();
        (outcomes.len(), bad, eq)
    };
    let (cases, bad, eq) = tally(pairs(2).par_iter().map(|&(c, d)| compare_ineq_cd::<f64>(c, d).unwrap()).collect());
    line("inequality (c,d)", cases, bad, Some(eq))?;
    for v in MnVariant::ALL {
        let (cases, bad, eq) =
            tally(ab.par_iter().map(|&(m, n)| compare_ineq_mn::<f64>(v, m, n).unwrap()).collect());
        line(&format!("inequality {}", format!("{v:?}").to_lowercase()), cases, bad, Some(eq))?;
    }
    Ok(if failures == 0 { Status::Passed } else { Status::Failed })
}
