use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use ggadget_core::analysis::{
    degeneracy, for_each_induced_path, hamiltonian_path, heuristic_long_induced_path,
    is_induced_path, longest_induced_path, q_special_sources, source_counts, tau_profile,
    verify_hamiltonian, Path,
};
use ggadget_core::coloring::check_linear_bound;
use ggadget_core::construction::blow_up_vertex_count;
use ggadget_core::intervals::validate;
use ggadget_core::{build_g_with_limit, build_intervals, h, EdgeKind, LabeledGraph, Tree};
use serde_json::{json, Value};

use crate::error::{CliError, EXIT_OK};
use crate::export::{write_graph, Format};
use crate::report::{Check, Report};

/// Extension budget used by exact search when none is given.
pub const DEFAULT_EXACT_BUDGET: u64 = 1_000_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "ggadget",
    version,
    about = "Build and verify ribbed blow-ups of complete binary trees"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckName {
    Intervals,
    Sizes,
    Degeneracy,
    Hamiltonian,
    Coloring,
    SpecialSources,
    Tau,
}

impl CheckName {
    pub const ALL: [CheckName; 7] = [
        CheckName::Intervals,
        CheckName::Sizes,
        CheckName::Degeneracy,
        CheckName::Hamiltonian,
        CheckName::Coloring,
        CheckName::SpecialSources,
        CheckName::Tau,
    ];

    fn name(self) -> &'static str {
        match self {
            CheckName::Intervals => "intervals",
            CheckName::Sizes => "sizes",
            CheckName::Degeneracy => "degeneracy",
            CheckName::Hamiltonian => "hamiltonian",
            CheckName::Coloring => "coloring",
            CheckName::SpecialSources => "special-sources",
            CheckName::Tau => "tau",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Heuristic,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write G_ell in one of the export formats.
    Build {
        #[arg(long)]
        ell: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run property checks on G_ell.
    Verify {
        #[arg(long)]
        ell: u32,
        /// Comma-separated subset of checks; all when absent.
        #[arg(long, value_enum, value_delimiter = ',')]
        checks: Vec<CheckName>,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
        r_max: u32,
    },
    /// Search for long induced paths.
    InducedPath {
        #[arg(long)]
        ell: u32,
        #[arg(long, value_enum, default_value = "exact")]
        mode: Mode,
        /// Extension attempts allowed to the exact search.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u32).range(1..))]
        seeds: u32,
        #[arg(long, default_value_t = 7)]
        rng_seed: u64,
    },
    /// Tabulate col_r under the canonical ordering against 2r + 8.
    Coloring {
        #[arg(long)]
        ell: u32,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
        r_max: u32,
    },
    /// Size census, interval table and source counts.
    Stats {
        #[arg(long)]
        ell: u32,
    },
}

/// Runs one command. Reports go to `stdout` as JSON; the return value is the
/// process exit status.
pub fn run(cli: &Cli, max_ell: u32, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let start = Instant::now();
    let report = match &cli.command {
        Command::Build { ell, format, out } => {
            cmd_build(*ell, *format, out.as_ref(), max_ell, stdout)?;
            return Ok(EXIT_OK);
        }
        Command::Verify { ell, checks, r_max } => {
            let names: Vec<_> = selected(checks_or_all(checks))
                .iter()
                .map(|c| c.name())
                .collect();
            let checks = cmd_verify(*ell, checks, *r_max, max_ell)?;
            let args = json!({"ell": ell, "checks": names, "r_max": r_max});
            Report::new("verify", args, checks, start.elapsed())
        }
        Command::InducedPath {
            ell,
            mode,
            budget,
            seeds,
            rng_seed,
        } => {
            let checks = cmd_induced_path(*ell, *mode, *budget, *seeds, *rng_seed, max_ell)?;
            let args = json!({
                "ell": ell,
                "mode": format!("{mode:?}").to_lowercase(),
                "budget": budget,
                "seeds": seeds,
                "rng_seed": rng_seed,
            });
            Report::new("induced-path", args, checks, start.elapsed())
        }
        Command::Coloring { ell, r_max } => {
            let checks = cmd_coloring(*ell, *r_max, max_ell)?;
            Report::new(
                "coloring",
                json!({"ell": ell, "r_max": r_max}),
                checks,
                start.elapsed(),
            )
        }
        Command::Stats { ell } => {
            let checks = cmd_stats(*ell, max_ell)?;
            Report::new("stats", json!({"ell": ell}), checks, start.elapsed())
        }
    };
    let text = serde_json::to_string_pretty(&report)?;
    writeln!(stdout, "{text}")?;
    stdout.flush()?;
    Ok(report.exit_code())
}

fn checks_or_all(checks: &[CheckName]) -> &[CheckName] {
    if checks.is_empty() {
        &CheckName::ALL
    } else {
        checks
    }
}

fn selected(checks: &[CheckName]) -> Vec<CheckName> {
    CheckName::ALL
        .into_iter()
        .filter(|c| checks.contains(c))
        .collect()
}

pub fn cmd_build(
    ell: u32,
    format: Format,
    out: Option<&PathBuf>,
    max_ell: u32,
    stdout: &mut dyn Write,
) -> Result<(), CliError> {
    let g = build_g_with_limit(ell, max_ell)?;
    match out {
        Some(path) => write_graph(&g, format, BufWriter::new(File::create(path)?))?,
        None => write_graph(&g, format, BufWriter::new(stdout))?,
    }
    Ok(())
}

/// Runs the selected checks in a fixed order.
pub fn cmd_verify(
    ell: u32,
    checks: &[CheckName],
    r_max: u32,
    max_ell: u32,
) -> Result<Vec<Check>, CliError> {
    let wanted = selected(checks_or_all(checks));
    let needs_graph = wanted.iter().any(|c| *c != CheckName::Intervals);
    let graph = if needs_graph {
        Some(build_g_with_limit(ell, max_ell)?)
    } else {
        None
    };
    let mut out = Vec::new();
    for c in wanted {
        let check = match (c, graph.as_ref()) {
            (CheckName::Intervals, _) => check_intervals(ell)?,
            (CheckName::Sizes, Some(g)) => check_sizes(ell, g)?,
            (CheckName::Degeneracy, Some(g)) => check_degeneracy(g),
            (CheckName::Hamiltonian, Some(g)) => check_hamiltonian(g)?,
            (CheckName::Coloring, Some(g)) => check_coloring(g, r_max)?,
            (CheckName::SpecialSources, Some(g)) => check_special_sources(ell, g)?,
            (CheckName::Tau, Some(g)) => check_tau(ell, g)?,
            (_, None) => unreachable!("graph built whenever a graph check is selected"),
        };
        out.push(check);
    }
    Ok(out)
}

fn check_intervals(ell: u32) -> Result<Check, CliError> {
    let sys = build_intervals(ell)?;
    let violations = validate(&sys);
    Ok(Check::decide(
        CheckName::Intervals.name(),
        violations.is_empty(),
        json!({"count": sys.len(), "height": h(ell)?}),
        json!({"violations": violations}),
    ))
}

fn check_sizes(ell: u32, g: &LabeledGraph) -> Result<Check, CliError> {
    let tree = Tree::new(h(ell)? as u32)?;
    let formula = blow_up_vertex_count(tree)? as u64;
    let counted = g.num_vertices() as u64;
    let floor = 1u32.checked_shl(ell + 1).and_then(|e| 1u128.checked_shl(e));
    let above_floor = floor.is_some_and(|f| counted as u128 >= f);
    let measured = json!({
        "vertices": counted,
        "formula": formula,
        "floor": floor.map(|f| f.to_string()),
        "edges": g.num_edges(),
    });
    Ok(Check::decide(
        CheckName::Sizes.name(),
        counted == formula && above_floor,
        measured.clone(),
        measured,
    ))
}

fn check_degeneracy(g: &LabeledGraph) -> Check {
    let d = degeneracy(g);
    let bad_step = d.removal_degrees.iter().position(|&x| x > 2);
    let measured = json!({"degeneracy": d.k});
    let counterexample = match bad_step {
        Some(i) => {
            json!({"step": i, "vertex": d.elimination_order[i], "degree": d.removal_degrees[i]})
        }
        None => json!({"degeneracy": d.k}),
    };
    Check::decide(
        CheckName::Degeneracy.name(),
        d.k == 2 && bad_step.is_none(),
        measured,
        counterexample,
    )
}

fn check_hamiltonian(g: &LabeledGraph) -> Result<Check, CliError> {
    let p = hamiltonian_path(g)?;
    let ok = verify_hamiltonian(g, &p) && p.first() == Some(0) && p.last() == Some(1);
    Ok(Check::decide(
        CheckName::Hamiltonian.name(),
        ok,
        json!({"order": p.order(), "endpoints": [p.first(), p.last()]}),
        json!({"path_prefix": &p.vertices()[..p.order().min(64)]}),
    ))
}

fn coloring_rows(g: &LabeledGraph, r_max: u32) -> Result<(bool, Vec<Value>), CliError> {
    let rows = check_linear_bound(g, r_max)?;
    let ok = rows.iter().all(|r| r.passes());
    let table = rows
        .iter()
        .map(|r| {
            json!({
                "r": r.r,
                "value": r.value,
                "bound": r.bound,
                "pass": r.passes(),
                "witness": r.witness,
                "max_non_rib_final": r.max_non_rib_final,
                "max_rib_final": r.max_rib_final,
                "split_violations": r.split_violations,
            })
        })
        .collect();
    Ok((ok, table))
}

fn check_coloring(g: &LabeledGraph, r_max: u32) -> Result<Check, CliError> {
    let (ok, table) = coloring_rows(g, r_max)?;
    let failing: Vec<_> = table
        .iter()
        .filter(|row| row["pass"] == false)
        .cloned()
        .collect();
    Ok(Check::decide(
        CheckName::Coloring.name(),
        ok,
        json!({"rows": table}),
        json!({"rows": failing}),
    ))
}

fn check_special_sources(ell: u32, g: &LabeledGraph) -> Result<Check, CliError> {
    if ell != 1 {
        return Ok(Check::skipped(
            CheckName::SpecialSources.name(),
            "exhaustive induced-path enumeration is configured only for ell = 1",
        ));
    }
    let mut paths = 0u64;
    let mut worst = 0usize;
    let mut offender: Option<Vec<u32>> = None;
    let mut failure = None;
    for_each_induced_path(g, None, |p| {
        paths += 1;
        match q_special_sources(g, &Path(p.to_vec())) {
            Ok(special) => {
                for rank in 1..=ell {
                    let c = special.iter().filter(|(_, r)| *r == rank).count();
                    if c > worst {
                        worst = c;
                        if c > 2 {
                            offender.get_or_insert_with(|| p.to_vec());
                        }
                    }
                }
            }
            Err(e) => failure = Some(e),
        }
    });
    if let Some(e) = failure {
        return Err(e.into());
    }
    Ok(Check::decide(
        CheckName::SpecialSources.name(),
        offender.is_none(),
        json!({"induced_paths": paths, "max_special_per_rank": worst}),
        json!({"path": offender}),
    ))
}

fn check_tau(ell: u32, g: &LabeledGraph) -> Result<Check, CliError> {
    let tau = tau_profile(ell)?;
    let mut bad_edge = None;
    for (u, v, kind) in g.edges() {
        let (tu, tv) = (
            tau[g.vertex_depth(u) as usize],
            tau[g.vertex_depth(v) as usize],
        );
        if tu != tv && (kind != EdgeKind::Tree || tu.abs_diff(tv) != 1) {
            bad_edge =
                Some(json!({"u": u, "v": v, "kind": kind.as_str(), "tau_u": tu, "tau_v": tv}));
            break;
        }
    }
    let sys = build_intervals(ell)?;
    let bad_boundary = sys
        .intervals()
        .iter()
        .find(|iv| tau[iv.lo as usize] != iv.rank + 1 || tau[iv.hi as usize] != iv.rank + 1);
    let counterexample = json!({
        "edge": bad_edge,
        "interval": bad_boundary.map(|iv| json!({"lo": iv.lo, "hi": iv.hi, "rank": iv.rank})),
    });
    Ok(Check::decide(
        CheckName::Tau.name(),
        bad_edge.is_none() && bad_boundary.is_none(),
        json!({"profile": &tau[1..]}),
        counterexample,
    ))
}

/// `ceil(log_3(log_2 n))`, the guaranteed induced-path order in an
/// `n`-vertex 2-degenerate graph with a Hamiltonian path.
pub fn log_log_floor(n: usize) -> u64 {
    if n < 2 {
        return n as u64;
    }
    ((n as f64).log2().log(3.0)).ceil().max(1.0) as u64
}

pub fn cmd_induced_path(
    ell: u32,
    mode: Mode,
    budget: Option<u64>,
    seeds: u32,
    rng_seed: u64,
    max_ell: u32,
) -> Result<Vec<Check>, CliError> {
    let g = build_g_with_limit(ell, max_ell)?;
    let mut checks = Vec::new();
    match mode {
        Mode::Exact => {
            let out = longest_induced_path(&g, Some(budget.unwrap_or(DEFAULT_EXACT_BUDGET)));
            let valid = is_induced_path(&g, &out.best);
            checks.push(Check::decide(
                "search",
                valid,
                json!({
                    "order": out.best.order(),
                    "status": out.status.as_str(),
                    "nodes_explored": out.nodes_explored,
                    "witness": out.best.vertices(),
                }),
                json!({"invalid_witness": out.best.vertices()}),
            ));
            if out.status == ggadget_core::analysis::SearchStatus::Exact {
                let floor = log_log_floor(g.num_vertices());
                checks.push(Check::decide(
                    "log-log-floor",
                    out.best.order() as u64 >= floor,
                    json!({"order": out.best.order(), "floor": floor}),
                    json!({"order": out.best.order(), "floor": floor}),
                ));
            }
        }
        Mode::Heuristic => {
            let p = heuristic_long_induced_path(&g, seeds, rng_seed);
            checks.push(Check::decide(
                "search",
                is_induced_path(&g, &p),
                json!({"order": p.order(), "status": "heuristic", "witness": p.vertices()}),
                json!({"invalid_witness": p.vertices()}),
            ));
        }
    }
    Ok(checks)
}

pub fn cmd_coloring(ell: u32, r_max: u32, max_ell: u32) -> Result<Vec<Check>, CliError> {
    if r_max == 0 {
        return Err(CliError::Usage("--r-max must be at least 1".into()));
    }
    let g = build_g_with_limit(ell, max_ell)?;
    Ok(vec![check_coloring(&g, r_max)?])
}

pub fn cmd_stats(ell: u32, max_ell: u32) -> Result<Vec<Check>, CliError> {
    let g = build_g_with_limit(ell, max_ell)?;
    let s = g.stats();
    let histogram: serde_json::Map<String, Value> = s
        .degree_histogram
        .iter()
        .map(|(d, c)| (d.to_string(), json!(c)))
        .collect();
    let intervals: Vec<Value> = build_intervals(ell)?
        .intervals()
        .iter()
        .map(|iv| json!({"lo": iv.lo, "hi": iv.hi, "rank": iv.rank}))
        .collect();
    let sources: Vec<Value> = source_counts(ell)?
        .into_iter()
        .map(|(rank, count)| json!({"rank": rank, "count": count}))
        .collect();
    Ok(vec![Check::pass(
        "stats",
        json!({
            "vertices": s.vertices,
            "edges": s.edges,
            "clique_edges": s.clique_edges,
            "tree_edges": s.tree_edges,
            "rib_edges": s.rib_edges,
            "max_degree": s.max_degree,
            "degree_histogram": histogram,
            "intervals": intervals,
            "sources_per_rank": sources,
        }),
    )])
}
