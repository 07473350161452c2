//! `crossings` — construct optimal drawings of complete multipartite graphs,
//! count crossings exactly, compute exact crossing numbers of small graphs,
//! enumerate drawing censuses, and run the self-verification suite.
//!
//! Exit codes: 0 = success / all checks pass, 1 = a check failed, 2 = usage
//! or input error, 3 = a search budget was exhausted (bounds only).

mod verify;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};

use crossings_core::census::enumerate_drawings;
use crossings_core::constructions::{construct_family, zarankiewicz_drawing};
use crossings_core::error::Error;
use crossings_core::families;
use crossings_core::formulas::{family_formula, FormulaStatus};
use crossings_core::geometry::{count_crossings, to_svg, SvgOptions};
use crossings_core::graph::PartitionedGraph;
use crossings_core::io::{drawing_from_json, drawing_to_json, parse_edge_selector, CENSUS_FORMAT};
use crossings_core::solver::{exact_crossing_number, SolveLimits, SolveOutcome};

#[derive(Parser)]
#[command(
    name = "crossings",
    version,
    about = "Crossing numbers of complete multipartite graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a catalogued crossing-number formula.
    Formula {
        /// Family code: K1111n, K122n, K1112n, K14n, K13n, K23n, K113n, K24n.
        #[arg(long)]
        family: Option<String>,
        /// Value of n.
        #[arg(long)]
        n: Option<u64>,
        /// Emit a CSV table instead of a single value.
        #[arg(long)]
        table: bool,
        /// Largest n for --table.
        #[arg(long, default_value_t = 12)]
        max_n: u64,
    },
    /// Generate an optimal drawing and write it as crossing-drawing/1 JSON.
    Construct {
        /// Family code (one of the five constructible families).
        #[arg(long, conflicts_with = "bipartite")]
        family: Option<String>,
        /// Complete bipartite sides "m,n" for a classic K_{m,n} drawing.
        #[arg(long)]
        bipartite: Option<String>,
        /// Value of n (required with --family).
        #[arg(long)]
        n: Option<usize>,
        /// Output path for the drawing JSON.
        #[arg(long)]
        out: PathBuf,
        /// Optional SVG rendering.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Validate a drawing file and count its crossings.
    Count {
        /// Path to a crossing-drawing/1 JSON file.
        drawing: PathBuf,
        /// Two edge-set selectors: count crossings between them instead of
        /// the total. Selectors name a vertex ("z1"), a part ("Z"), a part
        /// pair ("XY"), or a comma-separated union.
        #[arg(long, num_args = 2)]
        between: Option<Vec<String>>,
    },
    /// Exact crossing number of a small complete multipartite graph.
    Exact {
        /// Part sizes, e.g. "1,1,1,2,2".
        #[arg(long)]
        graph: String,
        /// Time budget, e.g. "600s" or "10m".
        #[arg(long)]
        budget: Option<String>,
        /// Stop deepening beyond this many crossings.
        #[arg(long)]
        max_k: Option<u64>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Enumerate all good drawings of a tiny graph up to isomorphism.
    Census {
        /// Part sizes, e.g. "2,3".
        #[arg(long)]
        graph: String,
        /// Only classes with at most this many crossings.
        #[arg(long)]
        max_k: Option<usize>,
        /// Write the census report JSON here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Build constructions, count, cross-check formulas, run the solver on
    /// small instances, and check the census lemmas.
    Verify {
        /// Families to check (default: the five constructible ones).
        #[arg(long)]
        family: Vec<String>,
        /// Largest n for construction checks.
        #[arg(long, default_value_t = 6)]
        max_n: u64,
        /// Per-instance solver budget, e.g. "60s".
        #[arg(long, default_value = "120s")]
        solver_budget: String,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Write the crossing-report/1 JSON here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::InvalidArgument(_)
                | Error::Format(_)
                | Error::ScaleGuard(_)
                | Error::InvalidDrawing(_)
                | Error::Json(_)
                | Error::Io(_) => ExitCode::from(2),
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Formula {
            family,
            n,
            table,
            max_n,
        } => formula_cmd(family, n, table, max_n),
        Command::Construct {
            family,
            bipartite,
            n,
            out,
            svg,
        } => construct_cmd(family, bipartite, n, out, svg),
        Command::Count { drawing, between } => count_cmd(drawing, between),
        Command::Exact {
            graph,
            budget,
            max_k,
            threads,
        } => exact_cmd(graph, budget, max_k, threads),
        Command::Census {
            graph,
            max_k,
            out,
            threads,
        } => census_cmd(graph, max_k, out, threads),
        Command::Verify {
            family,
            max_n,
            solver_budget,
            threads,
            report,
        } => verify::run(
            family,
            max_n,
            parse_budget(&solver_budget)?,
            threads,
            report,
        ),
    }
}

fn parse_sizes(spec: &str) -> Result<Vec<usize>, Error> {
    spec.split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::invalid(format!("bad part size {s:?} in {spec:?}")))
        })
        .collect()
}

fn parse_budget(spec: &str) -> Result<Duration, Error> {
    let spec = spec.trim();
    let (digits, unit) = match spec.find(|c: char| !c.is_ascii_digit()) {
        Some(i) => spec.split_at(i),
        None => (spec, "s"),
    };
    let value: u64 = digits
        .parse()
        .map_err(|_| Error::invalid(format!("bad budget {spec:?}")))?;
    match unit {
        "s" | "" => Ok(Duration::from_secs(value)),
        "m" => Ok(Duration::from_secs(value * 60)),
        "h" => Ok(Duration::from_secs(value * 3600)),
        "ms" => Ok(Duration::from_millis(value)),
        _ => Err(Error::invalid(format!("bad budget unit {unit:?}"))),
    }
}

fn warn_if_conjectured(code: &str, status: FormulaStatus) {
    if status.is_conjectured() {
        eprintln!("warning: the value for {code} is conjectural, not proved");
    }
}

fn formula_cmd(
    family: Option<String>,
    n: Option<u64>,
    table: bool,
    max_n: u64,
) -> Result<ExitCode, Error> {
    if table {
        let selected: Vec<&'static dyn families::Family> = match &family {
            Some(code) => vec![families::lookup(code)
                .ok_or_else(|| Error::invalid(format!("unknown family {code:?}")))?],
            None => families::all().collect(),
        };
        println!("family,n,value,status");
        for fam in selected {
            for n in 1..=max_n {
                let entry = family_formula(fam.code(), n)?;
                println!("{},{},{},{}", entry.family, n, entry.value, entry.status);
            }
        }
        return Ok(ExitCode::SUCCESS);
    }
    let family = family.ok_or_else(|| Error::invalid("--family is required without --table"))?;
    let n = n.ok_or_else(|| Error::invalid("--n is required without --table"))?;
    let entry = family_formula(&family, n)?;
    warn_if_conjectured(entry.family, entry.status);
    println!("{} {}", entry.value, entry.status);
    Ok(ExitCode::SUCCESS)
}

fn construct_cmd(
    family: Option<String>,
    bipartite: Option<String>,
    n: Option<usize>,
    out: PathBuf,
    svg: Option<PathBuf>,
) -> Result<ExitCode, Error> {
    let drawing = match (&family, &bipartite) {
        (Some(code), None) => {
            let n = n.ok_or_else(|| Error::invalid("--n is required with --family"))?;
            construct_family(code, n)?
        }
        (None, Some(spec)) => {
            let sizes = parse_sizes(spec)?;
            if sizes.len() != 2 {
                return Err(Error::invalid("--bipartite expects two sizes, e.g. 4,5"));
            }
            zarankiewicz_drawing(sizes[0], sizes[1])?
        }
        _ => {
            return Err(Error::invalid(
                "exactly one of --family or --bipartite is required",
            ))
        }
    };
    std::fs::write(&out, drawing_to_json(&drawing))?;
    if let Some(svg_path) = svg {
        std::fs::write(&svg_path, to_svg(&drawing, &SvgOptions::default())?)?;
    }
    println!(
        "{} vertices, {} edges, {} crossings -> {}",
        drawing.graph().vertex_count(),
        drawing.graph().edge_count(),
        drawing.validate().total(),
        out.display()
    );
    Ok(ExitCode::SUCCESS)
}

fn count_cmd(path: PathBuf, between: Option<Vec<String>>) -> Result<ExitCode, Error> {
    let text = std::fs::read_to_string(&path)?;
    let drawing = drawing_from_json(&text)?;
    let report = drawing.validate();
    if !report.is_valid() {
        return Err(Error::InvalidDrawing(report.violations.clone()));
    }
    let g = drawing.graph();
    match between {
        None => println!("{}", report.total()),
        Some(selectors) => {
            let a = parse_edge_selector(g, &selectors[0])?;
            let b = parse_edge_selector(g, &selectors[1])?;
            println!("{}", count_crossings(&drawing, &a, Some(&b))?);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn exact_cmd(
    graph: String,
    budget: Option<String>,
    max_k: Option<u64>,
    threads: usize,
) -> Result<ExitCode, Error> {
    let sizes = parse_sizes(&graph)?;
    let g = PartitionedGraph::complete_multipartite(&sizes)?;
    let limits = SolveLimits {
        budget: budget.as_deref().map(parse_budget).transpose()?,
        max_k,
        threads,
    };
    let report = exact_crossing_number(&g, &limits)?;
    match report.outcome {
        SolveOutcome::Exact { crossings, witness } => {
            println!("cr({g}) = {crossings}");
            for &(e, f) in witness.pairs() {
                println!("  crossing: {} x {}", g.edge_name(e), g.edge_name(f));
            }
            println!(
                "nodes: {}, time: {:.3}s",
                report.nodes,
                report.elapsed.as_secs_f64()
            );
            Ok(ExitCode::SUCCESS)
        }
        SolveOutcome::Bounds { lower, upper } => {
            println!("cr({g}) in [{lower}, {upper}] (budget exhausted)");
            println!(
                "nodes: {}, time: {:.3}s",
                report.nodes,
                report.elapsed.as_secs_f64()
            );
            Ok(ExitCode::from(3))
        }
    }
}

fn census_cmd(
    graph: String,
    max_k: Option<usize>,
    out: Option<PathBuf>,
    threads: usize,
) -> Result<ExitCode, Error> {
    let sizes = parse_sizes(&graph)?;
    let g = PartitionedGraph::complete_multipartite(&sizes)?;
    let max_k = max_k.unwrap_or(2 * g.edge_count());
    let classes = enumerate_drawings(&g, max_k, threads)?;

    let class_values: Vec<serde_json::Value> = classes
        .iter()
        .map(|c| {
            serde_json::json!({
                "crossings": c.crossings,
                "pairs": c.config.pairs().iter().map(|&(e, f)| {
                    [g.edge_name(e), g.edge_name(f)]
                }).collect::<Vec<_>>(),
                "faces": c.faces.iter().map(|f| {
                    serde_json::json!({
                        "length": f.walk.len(),
                        "original_boundary": f.original_boundary.iter()
                            .map(|&v| g.vertex_name(v)).collect::<Vec<_>>(),
                    })
                }).collect::<Vec<_>>(),
                "code": c.code,
            })
        })
        .collect();
    let report = serde_json::json!({
        "format": CENSUS_FORMAT,
        "graph": graph,
        "max_crossings": max_k,
        "classes": class_values,
    });
    match &out {
        Some(path) => std::fs::write(path, serde_json::to_string_pretty(&report)?)?,
        None => println!("{}", serde_json::to_string_pretty(&report)?),
    }
    eprintln!("{}: {} classes", g, classes.len());
    Ok(ExitCode::SUCCESS)
}
