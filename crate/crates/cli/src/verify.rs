//! The `verify` workflow: rebuild every catalogued construction, count its
//! crossings, cross-check the formulas, run the exact solver on small
//! instances, and check the census lemmas. Emits a crossing-report/1 JSON.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use serde_json::json;

use crossings_core::census::{check_counting_inequality, verify_region_lemmas};
use crossings_core::constructions::construct_family;
use crossings_core::error::Error;
use crossings_core::families;
use crossings_core::formulas::best_lower_bound;
use crossings_core::io::{drawing_from_json, drawing_to_json, REPORT_FORMAT};
use crossings_core::solver::{exact_crossing_number, SolveLimits, SolveOutcome};

#[derive(PartialEq, Eq, Clone, Copy)]
enum Status {
    Pass,
    Fail,
    Bounds,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Bounds => "bounds",
        }
    }
}

struct Check {
    name: String,
    status: Status,
    detail: serde_json::Value,
}

/// What to verify: which families, how far in n, and how long the solver
/// may spend per instance.
pub struct VerifyPlan {
    pub families: Vec<&'static dyn families::Family>,
    pub max_n: u64,
    pub solver_budget: Duration,
    pub threads: usize,
    pub report_path: Option<PathBuf>,
}

impl VerifyPlan {
    pub fn new(
        family_args: Vec<String>,
        max_n: u64,
        solver_budget: Duration,
        threads: usize,
        report_path: Option<PathBuf>,
    ) -> Result<Self, Error> {
        if max_n == 0 {
            return Err(Error::invalid("--max-n must be at least 1"));
        }
        if solver_budget.is_zero() {
            return Err(Error::invalid("--solver-budget must be positive"));
        }
        let families: Vec<&'static dyn families::Family> = if family_args.is_empty() {
            families::constructible().collect()
        } else {
            family_args
                .iter()
                .map(|code| {
                    families::lookup(code)
                        .ok_or_else(|| Error::invalid(format!("unknown family {code:?}")))
                })
                .collect::<Result<_, _>>()?
        };
        Ok(VerifyPlan {
            families,
            max_n,
            solver_budget,
            threads,
            report_path,
        })
    }
}

pub fn run(
    family_args: Vec<String>,
    max_n: u64,
    solver_budget: Duration,
    threads: usize,
    report_path: Option<PathBuf>,
) -> Result<ExitCode, Error> {
    let plan = VerifyPlan::new(family_args, max_n, solver_budget, threads, report_path)?;
    let VerifyPlan {
        families: selected,
        max_n,
        solver_budget,
        threads,
        report_path,
    } = plan;
    let mut checks: Vec<Check> = Vec::new();

    // Constructions against formulas, including a JSON round trip.
    for fam in &selected {
        if fam.layout().is_none() {
            checks.push(Check {
                name: format!("construct/{}", fam.code()),
                status: Status::Fail,
                detail: json!({"error": "family has no catalogued construction"}),
            });
            continue;
        }
        let mut counts = Vec::new();
        let mut ok = true;
        let mut error = None;
        for n in 1..=max_n {
            match construct_family(fam.code(), n as usize) {
                Ok(d) => {
                    let total = d.validate().total();
                    counts.push(total);
                    let expected = fam.formula(n);
                    if total != expected {
                        ok = false;
                        error = Some(format!("n={n}: drew {total}, formula {expected}"));
                        break;
                    }
                    let reloaded = drawing_from_json(&drawing_to_json(&d))?;
                    if reloaded.validate().total() != total {
                        ok = false;
                        error = Some(format!("n={n}: JSON round trip changed the count"));
                        break;
                    }
                }
                Err(e) => {
                    ok = false;
                    error = Some(format!("n={n}: {e}"));
                    break;
                }
            }
        }
        checks.push(Check {
            name: format!("construct/{}", fam.code()),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: json!({"counts": counts, "error": error}),
        });
    }

    // Vertex-suppression counting inequality on the two star families.
    for code in ["K13n", "K14n"] {
        if !selected.iter().any(|f| f.code() == code) {
            continue;
        }
        let mut rows = Vec::new();
        let mut ok = true;
        for n in 2..=max_n.max(2) {
            let d = construct_family(code, n as usize)?;
            let c = check_counting_inequality(&d, code)?;
            ok &= c.holds;
            rows.push(json!({"n": n, "lhs": c.lhs, "rhs": c.rhs, "holds": c.holds}));
        }
        checks.push(Check {
            name: format!("counting-inequality/{code}"),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: json!(rows),
        });
    }

    // Census region lemmas.
    let lemmas = verify_region_lemmas(threads)?;
    checks.push(Check {
        name: "census/region-lemmas".to_string(),
        status: if lemmas.passed() {
            Status::Pass
        } else {
            Status::Fail
        },
        detail: serde_json::to_value(&lemmas)?,
    });

    // Exact solver certification at n = 1 and 2.
    for fam in &selected {
        for n in 1..=2u64.min(max_n) {
            let g = fam.graph(n as usize)?;
            let expected = fam.formula(n);
            let limits = SolveLimits {
                budget: Some(solver_budget),
                max_k: None,
                threads,
            };
            let name = format!("solver/{}-n{}", fam.code(), n);
            let report = exact_crossing_number(&g, &limits)?;
            match report.outcome {
                SolveOutcome::Exact { crossings, .. } => {
                    let lb = best_lower_bound(&g);
                    let ok = crossings == expected && crossings >= lb;
                    checks.push(Check {
                        name,
                        status: if ok { Status::Pass } else { Status::Fail },
                        detail: json!({
                            "expected": expected,
                            "solved": crossings,
                            "lower_bound": lb,
                            "seconds": report.elapsed.as_secs_f64(),
                        }),
                    });
                }
                SolveOutcome::Bounds { lower, upper } => {
                    let consistent = lower <= expected && expected <= upper;
                    checks.push(Check {
                        name,
                        status: if consistent {
                            Status::Bounds
                        } else {
                            Status::Fail
                        },
                        detail: json!({"expected": expected, "lower": lower, "upper": upper}),
                    });
                }
            }
        }
    }

    for check in &checks {
        println!("{:<40} {}", check.name, check.status.as_str());
    }
    let failed = checks.iter().any(|c| c.status == Status::Fail);
    let bounded = checks.iter().any(|c| c.status == Status::Bounds);

    let report = json!({
        "format": REPORT_FORMAT,
        "max_n": max_n,
        "checks": checks.iter().map(|c| json!({
            "name": c.name,
            "status": c.status.as_str(),
            "detail": c.detail,
        })).collect::<Vec<_>>(),
        "passed": !failed,
    });
    match &report_path {
        Some(path) => std::fs::write(path, serde_json::to_string_pretty(&report)?)?,
        None => println!("{}", serde_json::to_string_pretty(&report)?),
    }

    Ok(if failed {
        ExitCode::from(1)
    } else if bounded {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    })
}
