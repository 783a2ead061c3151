//! The solve, shoot, and mlf subcommands.

use crate::{fmt_f64, write_output, CliError, Format, MethodArg, ProblemArgs, StrategyArg};
use clap::Args;
use fracshoot::fode::{solve_ivp, Ivp, Mesh, SolveConfig, Trajectory};
use fracshoot::mlf::{evaluate, MlfRequest, DEFAULT_TOL};
use fracshoot::shooting::{
    shoot_bisection, shoot_proportional_secting, ShootConfig, ShootingReport,
};
use serde::Serialize;
use std::path::{Path, PathBuf};

#[derive(Args)]
pub struct SolveArgs {
    #[command(flatten)]
    problem: ProblemArgs,
    /// IVP solver.
    #[arg(long, value_enum)]
    method: MethodArg,
    /// Uniform mesh step; must divide the interval length.
    #[arg(long)]
    step: f64,
    /// Initial value (defaults to the problem's known one).
    #[arg(long)]
    y0: Option<f64>,
    /// Write the trajectory here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Trajectory encoding.
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Serialize)]
struct SolveOutput<'a> {
    problem: &'a str,
    alpha: f64,
    method: &'a str,
    h: f64,
    y0: f64,
    terminal_value: f64,
    t: &'a [f64],
    y: &'a [f64],
}

pub fn run_solve(args: &SolveArgs) -> Result<(), CliError> {
    let p = args.problem.resolve()?;
    let y0 = match args.y0.or_else(|| p.initial_value_truth()) {
        Some(v) => v,
        None => {
            return Err(CliError::Validation(format!(
                "problem {} has no default initial value; pass --y0",
                p.id()
            )))
        }
    };
    let mesh = Mesh::with_step(p.a(), p.b(), args.step)?;
    let ivp = Ivp {
        alpha: p.alpha(),
        a: p.a(),
        y0,
        f: |t, y| p.rhs(t, y),
    };
    let method = args.method.to_method();
    let traj = solve_ivp(&ivp, &mesh, &SolveConfig::new(method))?;

    let content = match args.format {
        Format::Csv => trajectory_csv(&traj),
        Format::Json => {
            let out = SolveOutput {
                problem: p.id(),
                alpha: p.alpha(),
                method: method.name(),
                h: mesh.h(),
                y0,
                terminal_value: traj.terminal_value(),
                t: traj.t(),
                y: traj.y(),
            };
            let mut s = serde_json::to_string_pretty(&out)?;
            s.push('\n');
            s
        }
    };
    write_output(&args.out, &content)
}

#[derive(Args)]
pub struct ShootArgs {
    #[command(flatten)]
    problem: ProblemArgs,
    /// IVP solver used for every shot.
    #[arg(long, value_enum)]
    method: MethodArg,
    /// Uniform mesh step; must divide the interval length.
    #[arg(long)]
    step: f64,
    /// Terminal residual tolerance.
    #[arg(long)]
    eps: f64,
    /// Proportional-secting strategy, or the bisection baseline.
    #[arg(long, value_enum, default_value = "auto")]
    strategy: StrategyArg,
    /// Shot budget.
    #[arg(long, default_value_t = 100)]
    max_shots: usize,
    /// Write the accepted trajectory (CSV) here.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Report encoding printed to stdout: json is the full report, csv is
    /// the per-shot history.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write one trajectory CSV per shot plus manifest.json into this
    /// directory (created if missing).
    #[arg(long)]
    bundle_dir: Option<PathBuf>,
}

pub fn run_shoot(args: &ShootArgs) -> Result<(), CliError> {
    let p = args.problem.resolve()?;
    let mesh = Mesh::with_step(p.a(), p.b(), args.step)?;
    let tvp = p.tvp();
    let solve = SolveConfig::new(args.method.to_method());
    let mut cfg = ShootConfig {
        eps: args.eps,
        max_shots: args.max_shots,
        keep_shot_trajectories: args.bundle_dir.is_some(),
        ..ShootConfig::default()
    };

    let report = match args.strategy.secting() {
        None => shoot_bisection(&tvp, &mesh, &solve, &cfg)?,
        Some(strategy) => {
            cfg.strategy = strategy;
            shoot_proportional_secting(&tvp, &mesh, &solve, &cfg)?
        }
    };

    let content = match args.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report)?;
            s.push('\n');
            s
        }
        Format::Csv => history_csv(&report),
    };
    print!("{content}");

    if let Some(path) = &args.out {
        std::fs::write(path, trajectory_csv(&report.trajectory))?;
    }
    if let Some(dir) = &args.bundle_dir {
        write_bundle(dir, &p.id(), p.alpha(), mesh.h(), args, &report)?;
    }

    if report.converged {
        Ok(())
    } else {
        Err(CliError::Runtime(format!(
            "did not reach |residual| <= {:e} within {} shots (best residual {:e})",
            args.eps, report.shots, report.residual
        )))
    }
}

fn trajectory_csv(traj: &Trajectory) -> String {
    let mut s = String::from("t,y\n");
    for (t, y) in traj.t().iter().zip(traj.y()) {
        s.push_str(&fmt_f64(*t));
        s.push(',');
        s.push_str(&fmt_f64(*y));
        s.push('\n');
    }
    s
}

fn history_csv(report: &ShootingReport) -> String {
    let mut s = String::from("shot,guess,terminal,residual\n");
    for rec in &report.history {
        s.push_str(&format!(
            "{},{},{},{}\n",
            rec.shot,
            fmt_f64(rec.guess),
            fmt_f64(rec.terminal),
            fmt_f64(rec.residual)
        ));
    }
    s
}

#[derive(Serialize)]
struct BundleShot {
    shot: usize,
    guess: f64,
    terminal: f64,
    residual: f64,
    file: String,
}

#[derive(Serialize)]
struct BundleManifest<'a> {
    problem: &'a str,
    alpha: f64,
    method: &'a str,
    strategy: &'a str,
    eps: f64,
    h: f64,
    converged: bool,
    shots: usize,
    initial_value_estimate: f64,
    residual: f64,
    shots_detail: Vec<BundleShot>,
}

fn write_bundle(
    dir: &Path,
    problem: &str,
    alpha: f64,
    h: f64,
    args: &ShootArgs,
    report: &ShootingReport,
) -> Result<(), CliError> {
    if report.shot_trajectories.len() != report.history.len() {
        return Err(CliError::Runtime(
            "shot trajectories were not recorded for the figure bundle".into(),
        ));
    }
    std::fs::create_dir_all(dir)?;
    let mut shots_detail = Vec::with_capacity(report.history.len());
    for (rec, traj) in report.history.iter().zip(&report.shot_trajectories) {
        let file = format!("shot_{:02}.csv", rec.shot);
        std::fs::write(dir.join(&file), trajectory_csv(traj))?;
        shots_detail.push(BundleShot {
            shot: rec.shot,
            guess: rec.guess,
            terminal: rec.terminal,
            residual: rec.residual,
            file,
        });
    }
    let manifest = BundleManifest {
        problem,
        alpha,
        method: args.method.to_method().name(),
        strategy: args.strategy.name(),
        eps: args.eps,
        h,
        converged: report.converged,
        shots: report.shots,
        initial_value_estimate: report.initial_value_estimate,
        residual: report.residual,
        shots_detail,
    };
    let mut s = serde_json::to_string_pretty(&manifest)?;
    s.push('\n');
    std::fs::write(dir.join("manifest.json"), s)?;
    Ok(())
}

#[derive(Args)]
pub struct MlfArgs {
    /// Order of the function, in (0, 1].
    #[arg(long)]
    alpha: f64,
    /// Real argument.
    #[arg(long, allow_hyphen_values = true)]
    z: f64,
    /// Accuracy target (absolute for values of order one, relative for
    /// large ones).
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Output encoding: csv prints the bare value, json adds metadata.
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Serialize)]
struct MlfOutput {
    alpha: f64,
    z: f64,
    tol: f64,
    value: f64,
    error_bound: f64,
}

pub fn run_mlf(args: &MlfArgs) -> Result<(), CliError> {
    let eval = evaluate(&MlfRequest {
        alpha: args.alpha,
        z: args.z,
        tol: args.tol,
    })?;
    match args.format {
        Format::Csv => println!("{}", fmt_f64(eval.value)),
        Format::Json => {
            let out = MlfOutput {
                alpha: args.alpha,
                z: args.z,
                tol: args.tol,
                value: eval.value,
                error_bound: eval.error_bound,
            };
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
    }
    Ok(())
}
