//! Subcommand execution and the human-readable rendering of reports.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use lincode_core::extend::{verify_extension, VerifyReport};
use lincode_core::polysolve::GroebnerBudget;
use lincode_core::{
    minimum_weight_words, ExtendOptions, ExtensionMatrix, ExtensionProblem, GeneratorMatrix,
    InformationSetCollection, Method, MinWeightReport, SearchMode,
};

use crate::error::CliError;
use crate::files::{read_code, read_columns};
use crate::report::{
    CodeParams, ExtensionSection, GroebnerSection, InfoSection, MinwtSection, RunReport, Timings, TraceStep,
    Verification,
};

#[derive(Debug, Parser)]
#[command(name = "lincode", version, about = "Minimum distance and extensions of linear codes over small fields")]
pub struct Cli {
    /// Print the report as JSON instead of a table.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Code parameters and information-set diagnostics.
    Info { code: PathBuf },
    /// Minimum distance and the minimum-weight codewords.
    Minwt { code: PathBuf },
    /// Search for columns raising the minimum distance by one.
    Extend {
        code: PathBuf,
        /// Number of columns to append.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        columns: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// List every canonical extension instead of the smallest one.
        #[arg(long)]
        all: bool,
        /// Maximum number of S-polynomial reductions.
        #[arg(long)]
        budget: Option<u64>,
        /// Maximum number of terms in an intermediate polynomial.
        #[arg(long)]
        max_terms: Option<usize>,
    },
    /// Recompute the minimum distance after appending columns.
    Verify {
        code: PathBuf,
        /// Column file holding the appended k×m matrix.
        #[arg(long)]
        ext: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Exhaustive,
    Linear,
    Groebner,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Exhaustive => Method::Exhaustive,
            MethodArg::Linear => Method::Linear,
            MethodArg::Groebner => Method::Groebner,
        }
    }
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

fn params(g: &GeneratorMatrix, d: Option<usize>) -> CodeParams {
    CodeParams { q: g.field().order(), n: g.n(), k: g.k(), d }
}

fn minwt_section(r: &MinWeightReport) -> MinwtSection {
    MinwtSection {
        d: r.d,
        representatives: r.reps.len(),
        count_full: r.count_full as u64,
        encodings: r.encodings_done,
        full_enumeration: r.full_enumeration,
        trace: r.trace.iter().map(|b| TraceStep { w: b.w, d_lb: b.d_lb, d_ub: b.d_ub }).collect(),
    }
}

fn verification(r: &VerifyReport) -> Verification {
    Verification { n: r.n, k: r.k, d_original: r.d_original, d_extended: r.d_extended, passes: r.passes() }
}

fn symbol_rows(x: &ExtensionMatrix) -> Vec<Vec<u8>> {
    x.rows().iter().map(|row| row.iter().map(|e| e.index()).collect()).collect()
}

fn empty_report(command: &str, code: CodeParams) -> RunReport {
    RunReport {
        command: command.to_string(),
        code,
        info: None,
        minwt: None,
        extension: None,
        verification: None,
        timings: Timings::default(),
    }
}

/// Executes one subcommand.
pub fn run(command: &Command) -> Result<RunReport, CliError> {
    let start = Instant::now();
    let mut report = match command {
        Command::Info { code } => info(&read_code(code)?),
        Command::Minwt { code } => minwt(&read_code(code)?),
        Command::Extend { code, columns, method, all, budget, max_terms } => {
            let mut opts = ExtendOptions {
                mode: if *all { SearchMode::All } else { SearchMode::First },
                ..ExtendOptions::default()
            };
            let defaults = GroebnerBudget::default();
            opts.budget = GroebnerBudget {
                max_pair_reductions: budget.unwrap_or(defaults.max_pair_reductions),
                max_terms: max_terms.unwrap_or(defaults.max_terms),
            };
            extend(read_code(code)?, *columns as usize, (*method).into(), &opts)?
        }
        Command::Verify { code, ext } => {
            let g = read_code(code)?;
            let (q, x) = read_columns(ext)?;
            verify(&g, q, &x)?
        }
    };
    report.timings.total = ms(start.elapsed());
    Ok(report)
}

pub fn info(g: &GeneratorMatrix) -> RunReport {
    let coll = InformationSetCollection::build(g);
    let mut report = empty_report("info", params(g, None));
    report.info = Some(InfoSection {
        mu: coll.mu(),
        relative_ranks: coll.ranks(),
        sets: coll.entries.iter().map(|e| e.columns.clone()).collect(),
    });
    report
}

pub fn minwt(g: &GeneratorMatrix) -> RunReport {
    let t = Instant::now();
    let mw = minimum_weight_words(g, &InformationSetCollection::build(g));
    let elapsed = ms(t.elapsed());
    let mut report = empty_report("minwt", params(g, Some(mw.d)));
    report.minwt = Some(minwt_section(&mw));
    report.timings.minwt = elapsed;
    report
}

pub fn extend(g: GeneratorMatrix, m: usize, method: Method, opts: &ExtendOptions) -> Result<RunReport, CliError> {
    let t = Instant::now();
    let problem = ExtensionProblem::new(g, m)?;
    let minwt_time = ms(t.elapsed());

    let t = Instant::now();
    let outcome = lincode_core::solve(&problem, method, opts)?;
    let solve_time = ms(t.elapsed());

    let g = &problem.generator;
    let verification = outcome
        .solutions
        .solutions
        .iter()
        .map(|x| -> Result<Verification, CliError> {
            let extended = g.append_columns(x.columns())?;
            let d_extended = minimum_weight_words(&extended, &InformationSetCollection::build(&extended)).d;
            Ok(verification(&VerifyReport { n: extended.n(), k: g.k(), d_original: problem.d, d_extended }))
        })
        .collect::<Result<Vec<_>, _>>()?;

    let mut timings = Timings { minwt: minwt_time, ..Timings::default() };
    let groebner = outcome.groebner.as_ref().map(|gb| {
        timings.equations = ms(gb.timings.equations);
        timings.groebner = ms(gb.timings.groebner);
        timings.solutions = ms(gb.timings.solutions);
        GroebnerSection {
            subset_size: gb.subset_size,
            unit_ideal: gb.unit_ideal,
            basis_size: gb.basis_size,
            variety_size: gb.variety_size,
            pair_reductions: gb.stats.pair_reductions,
            product_criterion_skips: gb.stats.product_criterion_skips,
            chain_criterion_skips: gb.stats.chain_criterion_skips,
            basis_size_before_reduction: gb.stats.basis_size_before_reduction,
        }
    });
    if groebner.is_none() {
        timings.solutions = solve_time;
    }

    let mut report = empty_report("extend", params(g, Some(problem.d)));
    report.minwt = Some(minwt_section(&problem.min_weight));
    report.extension = Some(ExtensionSection {
        columns: m,
        method_requested: method.name().to_string(),
        method_used: outcome.method.name().to_string(),
        fell_back: outcome.fell_back,
        information_vectors: problem.jd.len(),
        exhausted: outcome.solutions.exhausted,
        solution_count: outcome.solutions.len(),
        solutions: outcome.solutions.solutions.iter().map(symbol_rows).collect(),
        candidates_tested: outcome.candidates_tested.map(|c| c as u64),
        groebner,
        verification,
    });
    report.timings = timings;
    Ok(report)
}

pub fn verify(g: &GeneratorMatrix, q: u32, x: &ExtensionMatrix) -> Result<RunReport, CliError> {
    if q != g.field().order() {
        return Err(CliError::FieldMismatch { code: g.field().order(), columns: q });
    }
    let t = Instant::now();
    let v = verify_extension(g, x)?;
    let mut report = empty_report("verify", params(g, Some(v.d_original)));
    report.verification = Some(verification(&v));
    report.timings.minwt = ms(t.elapsed());
    Ok(report)
}

fn format_matrix(rows: &[Vec<u8>]) -> String {
    let rows: Vec<String> = rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ")).collect();
    format!("[{}]", rows.join("; "))
}

/// Human-readable rendering of a report.
pub fn render_text(r: &RunReport) -> String {
    let mut out = String::new();
    let c = &r.code;
    match c.d {
        Some(d) => writeln!(out, "code        [{},{},{}]_{}", c.n, c.k, d, c.q),
        None => writeln!(out, "code        [{},{}]_{}", c.n, c.k, c.q),
    }
    .unwrap();

    if let Some(info) = &r.info {
        writeln!(out, "mu          {}", info.mu).unwrap();
        for (i, (set, rank)) in info.sets.iter().zip(&info.relative_ranks).enumerate() {
            writeln!(out, "G_{:<9} rank {:>2}  columns {:?}", i + 1, rank, set).unwrap();
        }
    }

    if let Some(mw) = &r.minwt {
        writeln!(out, "d           {}", mw.d).unwrap();
        writeln!(out, "|S_d|       {} ({} up to scalars)", mw.count_full, mw.representatives).unwrap();
        writeln!(out, "encodings   {}{}", mw.encodings, if mw.full_enumeration { " (full enumeration)" } else { "" })
            .unwrap();
        if r.extension.is_none() && !mw.trace.is_empty() {
            writeln!(out, "trace       w  d_lb  d_ub").unwrap();
            for s in &mw.trace {
                writeln!(out, "            {:<2} {:>4}  {:>4}", s.w, s.d_lb, s.d_ub).unwrap();
            }
        }
    }

    if let Some(ext) = &r.extension {
        let fell_back = if ext.fell_back { ", fell back" } else { "" };
        writeln!(out, "method      {} (requested {}{})", ext.method_used, ext.method_requested, fell_back).unwrap();
        writeln!(out, "|J_d|       {}", ext.information_vectors).unwrap();
        if let Some(c) = ext.candidates_tested {
            writeln!(out, "candidates  {c}").unwrap();
        }
        if let Some(gb) = &ext.groebner {
            writeln!(
                out,
                "groebner    {} vectors, {} basis elements, {} reductions, {} points",
                gb.subset_size, gb.basis_size, gb.pair_reductions, gb.variety_size
            )
            .unwrap();
        }
        if ext.solutions.is_empty() {
            writeln!(out, "no extension").unwrap();
        } else {
            let qualifier = if ext.exhausted { "" } else { " (smallest shown)" };
            writeln!(out, "solutions   {}{}", ext.solution_count, qualifier).unwrap();
            for (x, v) in ext.solutions.iter().zip(&ext.verification) {
                let verdict = if v.passes { "pass" } else { "FAIL" };
                writeln!(out, "  {}  d={} {}", format_matrix(x), v.d_extended, verdict).unwrap();
            }
        }
    }

    if let Some(v) = &r.verification {
        let verdict = if v.passes { "pass" } else { "fail" };
        writeln!(out, "extended    [{},{},{}]_{}", v.n, v.k, v.d_extended, c.q).unwrap();
        writeln!(out, "verdict     {verdict}").unwrap();
    }

    let t = &r.timings;
    writeln!(
        out,
        "time (ms)   minwt {:.2}  equations {:.2}  groebner {:.2}  solutions {:.2}  total {:.2}",
        t.minwt, t.equations, t.groebner, t.solutions, t.total
    )
    .unwrap();
    out
}
