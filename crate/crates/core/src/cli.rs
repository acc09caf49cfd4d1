//! Command line front end. [`run`] returns the process exit code: 0 on
//! success, 1 for usage errors, 2 for bad input, 3 when an internal
//! invariant fails.

use std::fmt::Write as _;
use std::fs;
use std::io::Read as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::formula::{Problem, VariableOrdering};
use crate::generator::{generate_corpus, write_corpus, GenParams};
use crate::harness::{
    aggregate, compute_savings, cost_summary, load_corpus, read_choices, run_sweep, write_aggregate, write_choices,
    write_cost_summary, write_savings, CostTable, HarnessError,
};
use crate::heuristics::{sotd, suggest_capped, HeuristicError, HeuristicId, HeuristicReport, DEFAULT_ORDERING_CAP};
use crate::io::{parse_problem, ProblemSource};
use crate::projection::{project_cascade, CascadeInput, ProjectionKind};
use crate::realroots::ndrr;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "cadorder", version, about = "Choose variable orderings for CAD inputs")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the ordering chosen by one heuristic (or all) and its trace.
    Suggest {
        /// Problem file, or `-` for standard input.
        file: PathBuf,
        #[arg(long, short = 'H')]
        heuristic: Option<HeuristicId>,
        /// Run every heuristic.
        #[arg(long, conflicts_with = "heuristic")]
        all: bool,
        #[arg(long, default_value_t = DEFAULT_ORDERING_CAP)]
        cap: usize,
    },
    /// Generate a seeded random corpus.
    Gen {
        /// Comma separated system type labels.
        #[arg(long, default_value = "22,12,11,20,10,00", value_delimiter = ',')]
        types: Vec<String>,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        shape: Shape,
    },
    /// Run heuristics over a corpus directory and write choices.csv.
    Sweep {
        #[arg(long)]
        corpus: PathBuf,
        /// Comma separated heuristic names, or `all`.
        #[arg(long, default_value = "all")]
        heuristics: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ORDERING_CAP)]
        cap: usize,
    },
    /// Compute savings from a cost table and choices.csv.
    Eval {
        #[arg(long)]
        costs: PathBuf,
        #[arg(long)]
        choices: PathBuf,
        /// savings.csv; aggregate.csv and cost_summary.csv go beside it
        /// unless given.
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        aggregate: Option<PathBuf>,
        #[arg(long)]
        summary: Option<PathBuf>,
    },
    /// Print the projection cascade, sotd and ndrr of one ordering.
    Measure {
        file: PathBuf,
        /// Variable names greatest first, e.g. `z>y>x`.
        #[arg(long)]
        ordering: String,
        /// Reduced projection with equational constraints at the first step.
        #[arg(long)]
        tti: bool,
    },
}

#[derive(Args, Debug)]
struct Shape {
    #[arg(long, default_value_t = 3)]
    vars: usize,
    #[arg(long, default_value_t = 4)]
    max_tdeg: u32,
    #[arg(long, default_value_t = 4)]
    terms: usize,
    #[arg(long, default_value_t = 20)]
    coeff_bound: u32,
}

/// A failure with its exit code.
struct Failure(i32, String);

impl Failure {
    fn input(msg: impl ToString) -> Self {
        Failure(EXIT_INPUT, msg.to_string())
    }
}

impl From<HarnessError> for Failure {
    fn from(e: HarnessError) -> Self {
        Failure::input(e)
    }
}

impl From<HeuristicError> for Failure {
    fn from(e: HeuristicError) -> Self {
        match e {
            HeuristicError::CapExceeded { .. } => Failure::input(e),
            _ => Failure(EXIT_INTERNAL, e.to_string()),
        }
    }
}

/// Parses `argv` (program name first), runs the command and returns the
/// exit code. Normal output goes to `out`, diagnostics to standard error.
pub fn run<I, T>(argv: I, out: &mut String) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.cmd, out) {
        Ok(()) => EXIT_OK,
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            code
        }
    }
}

fn dispatch(cmd: Command, out: &mut String) -> Result<(), Failure> {
    match cmd {
        Command::Suggest { file, heuristic, all, cap } => {
            let ids: Vec<HeuristicId> = match (heuristic, all) {
                (Some(h), _) => vec![h],
                (None, true) => HeuristicId::ALL.to_vec(),
                (None, false) => return Err(Failure(EXIT_USAGE, "suggest needs --heuristic <id> or --all".into())),
            };
            let p = read_problem(&file)?;
            for id in ids {
                let r = suggest_capped(&p, id, cap)?;
                write_report(out, &p, &r, all);
            }
        }
        Command::Gen { types, count, seed, out: dir, shape } => {
            let params =
                GenParams { n_vars: shape.vars, max_tdeg: shape.max_tdeg, terms: shape.terms, coeff_bound: shape.coeff_bound, seed };
            let corpus = generate_corpus(&types, count, &params).map_err(Failure::input)?;
            write_corpus(&dir, &corpus).map_err(|e| Failure::input(format!("{}: {e}", dir.display())))?;
            eprintln!("wrote {} problems to {}", corpus.len(), dir.display());
        }
        Command::Sweep { corpus, heuristics, out: path, cap } => {
            let ids = parse_heuristics(&heuristics)?;
            let problems = load_corpus(&corpus)?;
            let rows = run_sweep(&problems, &ids, cap);
            write_choices(&path, &rows)?;
            let failed = rows.iter().filter(|r| !r.is_ok()).count();
            eprintln!("{} rows ({failed} failed) written to {}", rows.len(), path.display());
        }
        Command::Eval { costs, choices, out: path, aggregate: agg_path, summary } => {
            let table = CostTable::read(&costs)?;
            let rows = read_choices(&choices)?;
            let report = compute_savings(&table, &rows)?;
            let beside = |name: &str| path.parent().unwrap_or(Path::new("")).join(name);
            write_savings(&path, &report.rows)?;
            write_aggregate(&agg_path.unwrap_or_else(|| beside("aggregate.csv")), &aggregate(&report.rows))?;
            write_cost_summary(&summary.unwrap_or_else(|| beside("cost_summary.csv")), &cost_summary(&table))?;
            for id in &report.excluded_partial {
                eprintln!("excluded {id}: cost table is missing orderings");
            }
            for (id, h, status) in &report.skipped {
                eprintln!("skipped {id} {h}: {status}");
            }
            eprintln!("{} savings rows written to {}", report.rows.len(), path.display());
        }
        Command::Measure { file, ordering, tti } => {
            let p = read_problem(&file)?;
            let ord = VariableOrdering::parse(&ordering, &p).map_err(Failure::input)?;
            let kind = if tti { ProjectionKind::Tti } else { ProjectionKind::Full };
            measure(out, &p, &ord, kind)?;
        }
    }
    Ok(())
}

fn parse_heuristics(list: &str) -> Result<Vec<HeuristicId>, Failure> {
    if list.trim().eq_ignore_ascii_case("all") {
        return Ok(HeuristicId::ALL.to_vec());
    }
    let mut ids = list.split(',').map(str::parse).collect::<Result<Vec<HeuristicId>, _>>().map_err(|e| Failure(EXIT_USAGE, e.to_string()))?;
    ids.sort();
    ids.dedup();
    Ok(ids)
}

fn read_problem(path: &Path) -> Result<Problem, Failure> {
    let (text, origin) = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(Failure::input)?;
        (s, "<stdin>".to_string())
    } else {
        let s = fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
        (s, path.display().to_string())
    };
    let p = parse_problem(&ProblemSource::new(text, origin)).map_err(Failure::input)?;
    p.validate().map_err(|v| {
        let msgs: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        Failure::input(format!("{}: {}", path.display(), msgs.join("; ")))
    })?;
    Ok(p)
}

fn write_report(out: &mut String, p: &Problem, r: &HeuristicReport, labelled: bool) {
    let ordering = r.choice.format(p);
    if labelled {
        let _ = writeln!(out, "{}: {ordering}", r.id);
    } else {
        let _ = writeln!(out, "{ordering}");
    }
    let tb = if r.tiebreaks_used.is_empty() { "none".to_string() } else { r.tiebreaks_used.join(",") };
    let _ = writeln!(out, "  tiebreaks: {tb}");
    let _ = writeln!(out, "  fallback_lex: {}", r.fallback_lex);
    let _ = writeln!(out, "  time_s: {:.6}", r.elapsed.as_secs_f64());
    for (o, trace) in &r.candidates {
        let ms: Vec<String> = trace.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(out, "  candidate {}: {}", o.format(p), ms.join(" "));
    }
}

fn measure(out: &mut String, p: &Problem, ord: &VariableOrdering, kind: ProjectionKind) -> Result<(), Failure> {
    let names = p.names();
    let internal = |e: &dyn std::fmt::Display| Failure(EXIT_INTERNAL, e.to_string());
    let input = p.defining_polynomials();
    let cascade = project_cascade(CascadeInput::Problem(p), ord, kind).map_err(|e| internal(&e))?;
    let _ = writeln!(out, "ordering: {}", ord.format(p));
    let _ = writeln!(out, "input: {} polynomials, sotd {}", input.len(), sotd(&input));
    let mut total = sotd(&input);
    for (k, stage) in cascade.stages.iter().enumerate() {
        let s = sotd(&stage.polys);
        total += s;
        let _ = writeln!(
            out,
            "stage {} (eliminate {}): {} polynomials, sotd {s}",
            k + 1,
            p.name(stage.eliminated),
            stage.polys.len()
        );
        for f in &stage.polys {
            let _ = writeln!(out, "  {}", f.display(&names));
        }
    }
    let last = *ord.vars().last().expect("nonempty ordering");
    let final_set = cascade.final_stage().map(|s| &s.polys).unwrap_or(&input);
    let n = ndrr(final_set, last).map_err(|e| internal(&e))?;
    let _ = writeln!(out, "sotd: {total}");
    let _ = writeln!(out, "ndrr: {n}");
    Ok(())
}
