//! Shooting drivers for terminal value problems.
//!
//! A terminal value problem fixes `y(b) = y_star`.  Both drivers repeatedly
//! solve initial value problems with trial values `y(a) = g` and drive the
//! terminal residual `y_star - y_b(g)` to zero:
//!
//! * [`shoot_proportional_secting`]: the first correction divides the
//!   residual by a proportionality factor estimated from Mittag-Leffler
//!   envelope bounds (see [`crate::proportionality`]); all later
//!   corrections are secant steps, which terminate in one extra shot on
//!   linear problems.
//! * [`shoot_bisection`]: the baseline.  Expands a sign-change bracket
//!   geometrically from `y_star`, then bisects.  Robust, but pays tens of
//!   solves for tight tolerances.
//!
//! Residual monotonicity (solutions of the same equation cannot cross, so
//! `y_b` is increasing in the initial value) guarantees that the bracket
//! search terminates on any problem with a reachable terminal value.

use crate::fode::{solve_ivp, Ivp, Mesh, Method, SolveConfig, SolveError, Trajectory};
use crate::proportionality::{
    auto_factor, factor_bounds, midpoint_factor, quotient_band, FactorBounds,
    ProportionalityError, QuotientBand, QuotientScan,
};
use serde::Serialize;
use std::time::Instant;
use thiserror::Error;

/// A terminal value problem `D^alpha y = f(t, y)` on `[a, b]` with
/// `y(b) = y_star`.
pub struct Tvp<F: Fn(f64, f64) -> f64> {
    pub alpha: f64,
    pub a: f64,
    pub b: f64,
    pub y_star: f64,
    pub f: F,
}

/// How the first proportional correction picks its factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// Fixed factor 1: no scan, first correction adds the raw residual.
    Unit,
    /// Midpoint of the Mittag-Leffler factor bounds.
    Midpoint,
    /// Midpoint for contractive quotient bands, 1 for mixed bands, and the
    /// lower factor bound for expansive bands.
    Auto,
}

impl Strategy {
    pub fn name(&self) -> &'static str {
        match self {
            Strategy::Unit => "unit",
            Strategy::Midpoint => "midpoint",
            Strategy::Auto => "auto",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ShootConfig {
    /// Terminal residual tolerance: stop once `|y_star - y_b| <= eps`.
    pub eps: f64,
    pub strategy: Strategy,
    /// Budget of IVP solves before giving up (reported, not an error).
    pub max_shots: usize,
    /// Retain every shot's full trajectory in the report (for figure
    /// bundles); off by default to keep reports small.
    pub keep_shot_trajectories: bool,
}

impl Default for ShootConfig {
    fn default() -> Self {
        Self {
            eps: 1e-8,
            strategy: Strategy::Auto,
            max_shots: 100,
            keep_shot_trajectories: false,
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct ShotRecord {
    pub shot: usize,
    pub guess: f64,
    pub terminal: f64,
    pub residual: f64,
}

#[derive(Debug, Serialize)]
pub struct ShootingReport {
    pub method: Method,
    pub strategy: String,
    pub eps: f64,
    pub converged: bool,
    /// Number of IVP solves performed.
    pub shots: usize,
    pub initial_value_estimate: f64,
    /// Terminal residual of the reported estimate.
    pub residual: f64,
    pub terminal_value: f64,
    /// Proportionality factor used for the first correction (secting only).
    pub c_hat: Option<f64>,
    pub factor_low: Option<f64>,
    pub factor_high: Option<f64>,
    pub quotient_lower: Option<f64>,
    pub quotient_upper: Option<f64>,
    pub history: Vec<ShotRecord>,
    /// Seconds spent inside IVP solves.
    pub solve_seconds: f64,
    pub total_seconds: f64,
    /// Trajectory of the reported estimate.
    #[serde(skip)]
    pub trajectory: Trajectory,
    /// One trajectory per shot when requested via
    /// [`ShootConfig::keep_shot_trajectories`].
    #[serde(skip)]
    pub shot_trajectories: Vec<Trajectory>,
}

#[derive(Debug, Error)]
pub enum ShootError {
    #[error("invalid shooting input: {0}")]
    Domain(String),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Proportionality(#[from] ProportionalityError),
    #[error(
        "secant step degenerated: guesses {guess_a} and {guess_b} gave the same terminal value {terminal}"
    )]
    DegenerateSecant {
        guess_a: f64,
        guess_b: f64,
        terminal: f64,
    },
    #[error("secant step produced a non-finite guess after shot {shots}")]
    NonFiniteGuess { shots: usize },
    #[error("bisection failed to bracket the terminal value after {expansions} expansions")]
    BracketFailed { expansions: usize },
}

/// First correction of the proportional strategy: treat the terminal map
/// as `y_b(g) ~ y_b(g0) + c (g - g0)` and solve for the target.
pub(crate) fn second_guess(guess: f64, terminal: f64, y_star: f64, c: f64) -> f64 {
    guess + (y_star - terminal) / c
}

/// Bookkeeping shared by both drivers.
struct ShotLog {
    history: Vec<ShotRecord>,
    keep: bool,
    trajectories: Vec<Trajectory>,
    solve_seconds: f64,
    best: Option<(f64, f64, f64, Trajectory)>, // guess, residual, terminal, trajectory
}

impl ShotLog {
    fn new(keep: bool) -> Self {
        Self {
            history: Vec::new(),
            keep,
            trajectories: Vec::new(),
            solve_seconds: 0.0,
            best: None,
        }
    }

    fn shots(&self) -> usize {
        self.history.len()
    }

    fn record(&mut self, guess: f64, traj: Trajectory, y_star: f64) -> f64 {
        let terminal = traj.terminal_value();
        let residual = y_star - terminal;
        self.history.push(ShotRecord {
            shot: self.history.len(),
            guess,
            terminal,
            residual,
        });
        if self.keep {
            self.trajectories.push(traj.clone());
        }
        let better = self
            .best
            .as_ref()
            .map(|(_, r, _, _)| residual.abs() < r.abs())
            .unwrap_or(true);
        if better {
            self.best = Some((guess, residual, terminal, traj));
        }
        residual
    }

    fn into_report(
        self,
        method: Method,
        strategy: &str,
        eps: f64,
        converged: bool,
        factor: Option<(f64, Option<&QuotientBand>, Option<&FactorBounds>)>,
        started: Instant,
    ) -> ShootingReport {
        let (guess, residual, terminal, trajectory) =
            self.best.expect("at least one shot was recorded");
        let (c_hat, band, bounds) = match factor {
            Some((c, band, bounds)) => (Some(c), band, bounds),
            None => (None, None, None),
        };
        ShootingReport {
            method,
            strategy: strategy.to_string(),
            eps,
            converged,
            shots: self.history.len(),
            initial_value_estimate: guess,
            residual,
            terminal_value: terminal,
            c_hat,
            factor_low: bounds.map(|b| b.low),
            factor_high: bounds.map(|b| b.high),
            quotient_lower: band.map(|b| b.lower),
            quotient_upper: band.map(|b| b.upper),
            history: self.history,
            solve_seconds: self.solve_seconds,
            total_seconds: started.elapsed().as_secs_f64(),
            trajectory,
            shot_trajectories: self.trajectories,
        }
    }
}

fn validate<F: Fn(f64, f64) -> f64>(
    tvp: &Tvp<F>,
    mesh: &Mesh,
    cfg: &ShootConfig,
) -> Result<(), ShootError> {
    if !(cfg.eps > 0.0) {
        return Err(ShootError::Domain(format!(
            "residual tolerance must be positive, got {}",
            cfg.eps
        )));
    }
    if cfg.max_shots == 0 {
        return Err(ShootError::Domain("shot budget must be positive".into()));
    }
    if !tvp.y_star.is_finite() {
        return Err(ShootError::Domain(format!(
            "terminal value must be finite, got {}",
            tvp.y_star
        )));
    }
    let close = |x: f64, y: f64| (x - y).abs() <= 1e-12 * (1.0 + x.abs());
    if !close(tvp.a, mesh.a()) || !close(tvp.b, mesh.b()) {
        return Err(ShootError::Domain(format!(
            "mesh [{}, {}] does not match the problem interval [{}, {}]",
            mesh.a(),
            mesh.b(),
            tvp.a,
            tvp.b
        )));
    }
    Ok(())
}

/// Terminal value shooting with a proportional first correction and secant
/// refinement.
pub fn shoot_proportional_secting<F: Fn(f64, f64) -> f64>(
    tvp: &Tvp<F>,
    mesh: &Mesh,
    solve: &SolveConfig,
    cfg: &ShootConfig,
) -> Result<ShootingReport, ShootError> {
    validate(tvp, mesh, cfg)?;
    let started = Instant::now();
    let mut log = ShotLog::new(cfg.keep_shot_trajectories);
    let fire = |log: &mut ShotLog, guess: f64| -> Result<f64, ShootError> {
        let ivp = Ivp {
            alpha: tvp.alpha,
            a: tvp.a,
            y0: guess,
            f: |t, y| (tvp.f)(t, y),
        };
        let tick = Instant::now();
        let traj = solve_ivp(&ivp, mesh, solve)?;
        log.solve_seconds += tick.elapsed().as_secs_f64();
        Ok(log.record(guess, traj, tvp.y_star))
    };

    let g0 = tvp.y_star;
    let r0 = fire(&mut log, g0)?;

    if r0.abs() <= cfg.eps {
        // No correction was needed, so no factor is reported.
        return Ok(log.into_report(
            solve.method,
            cfg.strategy.name(),
            cfg.eps,
            true,
            None,
            started,
        ));
    }
    let (c_hat, band, bounds) = match cfg.strategy {
        Strategy::Unit => (1.0, None, None),
        Strategy::Midpoint | Strategy::Auto => {
            let shot0 = &log.best.as_ref().expect("shot 0 recorded").3;
            let b = quotient_band(&tvp.f, shot0, &QuotientScan::default())?;
            let fb = factor_bounds(tvp.alpha, tvp.b - tvp.a, &b)?;
            let c = match cfg.strategy {
                Strategy::Midpoint => midpoint_factor(&fb),
                _ => auto_factor(&b, &fb),
            };
            (c, Some(b), Some(fb))
        }
    };

    let mut prev = (g0, tvp.y_star - r0);
    let g1 = second_guess(g0, prev.1, tvp.y_star, c_hat);
    if !g1.is_finite() {
        return Err(ShootError::NonFiniteGuess { shots: log.shots() });
    }
    let mut r = fire(&mut log, g1)?;
    let mut cur = (g1, tvp.y_star - r);
    let mut just_perturbed = false;
    let mut converged = r.abs() <= cfg.eps;
    while !converged && log.shots() < cfg.max_shots {
        let dyb = cur.1 - prev.1;
        let next = if dyb == 0.0 {
            if just_perturbed {
                return Err(ShootError::DegenerateSecant {
                    guess_a: prev.0,
                    guess_b: cur.0,
                    terminal: cur.1,
                });
            }
            just_perturbed = true;
            cur.0 + cfg.eps.max(1e-12 * (1.0 + cur.0.abs()))
        } else {
            just_perturbed = false;
            cur.0 + (tvp.y_star - cur.1) * (cur.0 - prev.0) / dyb
        };
        if !next.is_finite() {
            return Err(ShootError::NonFiniteGuess { shots: log.shots() });
        }
        r = fire(&mut log, next)?;
        prev = cur;
        cur = (next, tvp.y_star - r);
        converged = r.abs() <= cfg.eps;
    }

    Ok(log.into_report(
        solve.method,
        cfg.strategy.name(),
        cfg.eps,
        converged,
        Some((c_hat, band.as_ref(), bounds.as_ref())),
        started,
    ))
}

/// Baseline terminal value shooting by bracket expansion and bisection.
pub fn shoot_bisection<F: Fn(f64, f64) -> f64>(
    tvp: &Tvp<F>,
    mesh: &Mesh,
    solve: &SolveConfig,
    cfg: &ShootConfig,
) -> Result<ShootingReport, ShootError> {
    const MAX_EXPANSIONS: usize = 200;
    validate(tvp, mesh, cfg)?;
    let started = Instant::now();
    let mut log = ShotLog::new(cfg.keep_shot_trajectories);
    let fire = |log: &mut ShotLog, guess: f64| -> Result<f64, ShootError> {
        let ivp = Ivp {
            alpha: tvp.alpha,
            a: tvp.a,
            y0: guess,
            f: |t, y| (tvp.f)(t, y),
        };
        let tick = Instant::now();
        let traj = solve_ivp(&ivp, mesh, solve)?;
        log.solve_seconds += tick.elapsed().as_secs_f64();
        Ok(log.record(guess, traj, tvp.y_star))
    };
    let done = |log: ShotLog, converged: bool| -> ShootingReport {
        log.into_report(solve.method, "bisection", cfg.eps, converged, None, started)
    };

    let mut g = tvp.y_star;
    let mut r = fire(&mut log, g)?;
    if r.abs() <= cfg.eps {
        return Ok(done(log, true));
    }
    // The terminal value grows with the initial value, so the residual
    // y_star - y_b is decreasing: walk in the residual's direction with
    // doubling steps until the sign flips.  The first step is off-unit so
    // the midpoint chain of a bracket anchored at a round terminal value
    // cannot land exactly on a round root (y0 = 0 with y_star = 1/4 is hit
    // in two halvings from a unit step), which would deflate the baseline's
    // cost by luck no generic problem enjoys.
    let mut step = 1.5 * r.signum();
    let (mut lo, mut hi); // residual positive at lo, negative at hi
    let mut expansions = 0;
    loop {
        let g_next = g + step;
        let r_next = fire(&mut log, g_next)?;
        if r_next.abs() <= cfg.eps {
            return Ok(done(log, true));
        }
        if r_next.signum() != r.signum() {
            if r > 0.0 {
                lo = (g, r);
                hi = (g_next, r_next);
            } else {
                lo = (g_next, r_next);
                hi = (g, r);
            }
            break;
        }
        g = g_next;
        r = r_next;
        step *= 2.0;
        expansions += 1;
        if expansions > MAX_EXPANSIONS || log.shots() >= cfg.max_shots.max(2 * MAX_EXPANSIONS) {
            return Err(ShootError::BracketFailed { expansions });
        }
    }

    // lo carries the positive residual; see the monotonicity note above.
    let bisection_cap = 4096;
    for _ in 0..bisection_cap {
        let mid = 0.5 * (lo.0 + hi.0);
        if mid == lo.0 || mid == hi.0 {
            // Interval narrowed to adjacent floats without reaching eps.
            return Ok(done(log, false));
        }
        let r_mid = fire(&mut log, mid)?;
        if r_mid.abs() <= cfg.eps {
            return Ok(done(log, true));
        }
        if r_mid > 0.0 {
            lo = (mid, r_mid);
        } else {
            hi = (mid, r_mid);
        }
    }
    Ok(done(log, false))
}
