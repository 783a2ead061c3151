//! The benchmark matrix: every IVP solver x mesh step x shooting variant
//! for one problem and tolerance, with median-of-reps wall times.

use crate::{fmt_f64, write_output, CliError, Format, ProblemArgs, StrategyArg};
use clap::Args;
use fracshoot::fode::{Mesh, Method, SolveConfig};
use fracshoot::problems::Problem;
use fracshoot::shooting::{
    shoot_bisection, shoot_proportional_secting, ShootConfig, ShootingReport,
};
use serde::{Deserialize, Serialize};
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

/// Benchmarked IVP solvers; the trapezoidal variant mirrors bdf2 and is
/// left out to keep the published 24-row shape.
const SOLVERS: [Method; 2] = [Method::Adams, Method::Bdf2];
const STRATEGIES: [StrategyArg; 4] = [
    StrategyArg::Bisection,
    StrategyArg::Unit,
    StrategyArg::Midpoint,
    StrategyArg::Auto,
];

#[derive(Args)]
pub struct BenchArgs {
    #[command(flatten)]
    problem: ProblemArgs,
    /// Terminal residual tolerance.
    #[arg(long)]
    eps: f64,
    /// Timed repetitions per cell (after one discarded warm-up).
    #[arg(long, default_value_t = 3)]
    reps: usize,
    /// Write the table here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Table encoding.
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct BenchRow {
    pub problem: String,
    pub solver: String,
    pub h: f64,
    pub eps: f64,
    pub strategy: String,
    pub shots: usize,
    pub converged: bool,
    pub max_error: f64,
    pub wall_time_s: f64,
}

struct Cell {
    method: Method,
    h: f64,
    strategy: StrategyArg,
}

fn run_cell(p: &Problem, eps: f64, reps: usize, cell: &Cell) -> Result<BenchRow, CliError> {
    let mesh = Mesh::with_step(p.a(), p.b(), cell.h)?;
    let tvp = p.tvp();
    let solve = SolveConfig::new(cell.method);
    let cfg = ShootConfig {
        eps,
        ..ShootConfig::default()
    };
    let fire = |cfg: &ShootConfig| -> Result<ShootingReport, CliError> {
        Ok(match cell.strategy.secting() {
            None => shoot_bisection(&tvp, &mesh, &solve, cfg)?,
            Some(strategy) => {
                let mut c = cfg.clone();
                c.strategy = strategy;
                shoot_proportional_secting(&tvp, &mesh, &solve, &c)?
            }
        })
    };

    let mut times = Vec::with_capacity(reps);
    let mut report = fire(&cfg)?; // warm-up, discarded from timing
    for _ in 0..reps.max(1) {
        report = fire(&cfg)?;
        times.push(report.total_seconds);
    }
    times.sort_by(|a, b| a.partial_cmp(b).expect("finite timings"));
    let wall_time_s = times[times.len() / 2];
    let max_error = p.max_error(&report.trajectory)?;

    Ok(BenchRow {
        problem: p.id().to_string(),
        solver: cell.method.name().to_string(),
        h: cell.h,
        eps,
        strategy: cell.strategy.name().to_string(),
        shots: report.shots,
        converged: report.converged,
        max_error,
        wall_time_s,
    })
}

fn worker_count() -> usize {
    std::env::var("FRACSHOOT_WORKERS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&w| w >= 1)
        .unwrap_or(1)
}

pub fn run_bench(args: &BenchArgs) -> Result<(), CliError> {
    let p = args.problem.resolve()?;
    if args.reps == 0 {
        return Err(CliError::Validation("--reps must be at least 1".into()));
    }
    let cells: Vec<Cell> = SOLVERS
        .iter()
        .flat_map(|&method| {
            p.bench_steps().into_iter().flat_map(move |h| {
                STRATEGIES.iter().map(move |&strategy| Cell {
                    method,
                    h,
                    strategy,
                })
            })
        })
        .collect();

    let workers = worker_count().min(cells.len());
    let rows: Vec<BenchRow> = if workers <= 1 {
        let mut rows = Vec::with_capacity(cells.len());
        for cell in &cells {
            rows.push(run_cell(&p, args.eps, args.reps, cell)?);
        }
        rows
    } else {
        // Hand-rolled work stealing over scoped threads: each worker pulls
        // the next cell index and fills its slot, so the output order stays
        // the deterministic matrix order.
        let next = AtomicUsize::new(0);
        let slots: Mutex<Vec<Option<Result<BenchRow, CliError>>>> =
            Mutex::new((0..cells.len()).map(|_| None).collect());
        std::thread::scope(|scope| {
            for _ in 0..workers {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= cells.len() {
                        break;
                    }
                    let row = run_cell(&p, args.eps, args.reps, &cells[i]);
                    slots.lock().expect("slot lock")[i] = Some(row);
                });
            }
        });
        let collected = slots.into_inner().expect("slot lock");
        let mut rows = Vec::with_capacity(cells.len());
        for slot in collected {
            rows.push(slot.expect("every cell visited")?);
        }
        rows
    };

    let content = match args.format {
        Format::Csv => rows_to_csv(&rows)?,
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&rows)?;
            s.push('\n');
            s
        }
    };
    write_output(&args.out, &content)
}

pub fn rows_to_csv(rows: &[BenchRow]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "problem",
        "solver",
        "h",
        "eps",
        "strategy",
        "shots",
        "converged",
        "max_error",
        "wall_time_s",
    ])
    .map_err(|e| CliError::Runtime(e.to_string()))?;
    for r in rows {
        w.write_record([
            r.problem.as_str(),
            r.solver.as_str(),
            &fmt_f64(r.h),
            &fmt_f64(r.eps),
            r.strategy.as_str(),
            &r.shots.to_string(),
            &r.converged.to_string(),
            &fmt_f64(r.max_error),
            &fmt_f64(r.wall_time_s),
        ])
        .map_err(|e| CliError::Runtime(e.to_string()))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Runtime(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Runtime(e.to_string()))
}
