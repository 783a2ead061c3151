//! Time-stepping drivers for Caputo initial value problems.

use super::history;
use super::linalg::Lu;
use super::mesh::{Mesh, MeshError};
use super::weights;
use crate::special::gamma;
use serde::Serialize;
use std::collections::HashMap;
use std::fmt;
use std::io;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};
use thiserror::Error;

/// An initial value problem `D^alpha y = f(t, y)` on `t >= a`, `y(a) = y0`,
/// with the Caputo derivative of order `alpha` in (0, 1].
pub struct Ivp<F: Fn(f64, f64) -> f64> {
    pub alpha: f64,
    pub a: f64,
    pub y0: f64,
    pub f: F,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Explicit predictor-corrector product integration, order `1 + alpha`.
    Adams,
    /// Implicit convolution quadrature from the 2-step backward
    /// differentiation formula, order 2 with starting weights.
    Bdf2,
    /// Implicit convolution quadrature from the trapezoidal rule, order 2
    /// with starting weights.
    Trapezoidal,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Adams => "adams",
            Method::Bdf2 => "bdf2",
            Method::Trapezoidal => "trapezoidal",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "adams" => Ok(Method::Adams),
            "bdf2" => Ok(Method::Bdf2),
            "trapezoidal" => Ok(Method::Trapezoidal),
            other => Err(format!(
                "unknown method {other:?} (expected adams, bdf2, or trapezoidal)"
            )),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SolveConfig {
    pub method: Method,
    /// Residual tolerance of the implicit-step Newton iteration, relative
    /// to `max(1, |y|)`.
    pub newton_tol: f64,
    pub newton_max_iter: usize,
    /// Corrector sweeps of the Adams scheme per step.
    pub corrector_sweeps: usize,
}

impl SolveConfig {
    pub fn new(method: Method) -> Self {
        Self {
            method,
            newton_tol: 1e-10,
            newton_max_iter: 50,
            corrector_sweeps: 4,
        }
    }
}

impl Default for SolveConfig {
    fn default() -> Self {
        Self::new(Method::Bdf2)
    }
}

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("invalid solver input: {0}")]
    Domain(String),
    #[error(transparent)]
    Mesh(#[from] MeshError),
    #[error("right-hand side produced a non-finite value at t = {t}")]
    NonFinite { t: f64 },
    #[error("Newton iteration stalled at t = {t}: residual {residual:e} after {iters} iterations")]
    NewtonStalled { t: f64, residual: f64, iters: usize },
}

/// A computed solution sampled on mesh nodes.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Trajectory {
    t: Vec<f64>,
    y: Vec<f64>,
}

#[derive(Debug, Error)]
pub enum TrajectoryError {
    #[error("trajectory I/O failed: {0}")]
    Io(#[from] io::Error),
    #[error("trajectory parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("malformed trajectory: {0}")]
    Shape(String),
}

impl Trajectory {
    pub fn new(t: Vec<f64>, y: Vec<f64>) -> Result<Self, TrajectoryError> {
        if t.len() != y.len() {
            return Err(TrajectoryError::Shape(format!(
                "{} time nodes but {} values",
                t.len(),
                y.len()
            )));
        }
        if t.len() < 2 {
            return Err(TrajectoryError::Shape(
                "need at least two nodes".to_string(),
            ));
        }
        if t.iter().any(|v| !v.is_finite()) || y.iter().any(|v| !v.is_finite()) {
            return Err(TrajectoryError::Shape("non-finite entry".to_string()));
        }
        if t.windows(2).any(|w| w[1] <= w[0]) {
            return Err(TrajectoryError::Shape(
                "time nodes must be strictly increasing".to_string(),
            ));
        }
        Ok(Self { t, y })
    }

    pub fn t(&self) -> &[f64] {
        &self.t
    }

    pub fn y(&self) -> &[f64] {
        &self.y
    }

    pub fn len(&self) -> usize {
        self.t.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn step(&self) -> f64 {
        self.t[1] - self.t[0]
    }

    pub fn initial_value(&self) -> f64 {
        self.y[0]
    }

    pub fn terminal_value(&self) -> f64 {
        *self.y.last().unwrap()
    }

    pub fn terminal_time(&self) -> f64 {
        *self.t.last().unwrap()
    }

    pub fn max_abs_y(&self) -> f64 {
        self.y.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }

    /// Writes `t,y` rows with 17 significant digits, enough to reproduce
    /// every f64 bit-exactly on read-back.
    pub fn write_csv<W: io::Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "t,y")?;
        for (t, y) in self.t.iter().zip(&self.y) {
            writeln!(out, "{t:.16e},{y:.16e}")?;
        }
        Ok(())
    }

    pub fn read_csv<R: io::Read>(src: R) -> Result<Self, TrajectoryError> {
        use io::BufRead;
        let reader = io::BufReader::new(src);
        let mut t = Vec::new();
        let mut y = Vec::new();
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            let line = line.trim();
            if idx == 0 {
                if line != "t,y" {
                    return Err(TrajectoryError::Parse {
                        line: 1,
                        reason: format!("expected header \"t,y\", got {line:?}"),
                    });
                }
                continue;
            }
            if line.is_empty() {
                continue;
            }
            let mut fields = line.split(',');
            let parse = |field: Option<&str>, what: &str| -> Result<f64, TrajectoryError> {
                field
                    .ok_or_else(|| TrajectoryError::Parse {
                        line: idx + 1,
                        reason: format!("missing {what} column"),
                    })?
                    .trim()
                    .parse::<f64>()
                    .map_err(|e| TrajectoryError::Parse {
                        line: idx + 1,
                        reason: format!("bad {what} value: {e}"),
                    })
            };
            t.push(parse(fields.next(), "t")?);
            y.push(parse(fields.next(), "y")?);
            if fields.next().is_some() {
                return Err(TrajectoryError::Parse {
                    line: idx + 1,
                    reason: "too many columns".to_string(),
                });
            }
        }
        Self::new(t, y)
    }
}

/// How [`extend_solution`] builds the longer mesh.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeshPolicy {
    /// Keep the original step; the new endpoint must be commensurate.
    SameStep,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum KernelKind {
    AdamsPredictor,
    AdamsCorrector,
    Bdf2,
    Trapezoidal,
}

type KernelCache = HashMap<(u64, KernelKind), Arc<Vec<f64>>>;

static KERNEL_CACHE: OnceLock<RwLock<KernelCache>> = OnceLock::new();

/// Returns the weight sequence for `kind`, at least `len` entries long.
/// Sequences are prefix-stable in their length, so one cache entry per
/// (alpha, kind) serves every mesh size seen so far.
fn cached_kernel(alpha: f64, kind: KernelKind, len: usize) -> Arc<Vec<f64>> {
    let cache = KERNEL_CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    let key = (alpha.to_bits(), kind);
    if let Some(k) = cache.read().unwrap().get(&key) {
        if k.len() >= len {
            return Arc::clone(k);
        }
    }
    let built = Arc::new(match kind {
        KernelKind::AdamsPredictor => weights::adams_predictor_kernel(alpha, len),
        KernelKind::AdamsCorrector => weights::adams_corrector_kernel(alpha, len),
        KernelKind::Bdf2 => weights::bdf2_weights(alpha, len),
        KernelKind::Trapezoidal => weights::trapezoidal_weights(alpha, len),
    });
    let mut guard = cache.write().unwrap();
    match guard.get(&key) {
        Some(existing) if existing.len() >= len => Arc::clone(existing),
        _ => {
            guard.insert(key, Arc::clone(&built));
            built
        }
    }
}

/// Solves the IVP on the given mesh.
pub fn solve_ivp<F: Fn(f64, f64) -> f64>(
    ivp: &Ivp<F>,
    mesh: &Mesh,
    cfg: &SolveConfig,
) -> Result<Trajectory, SolveError> {
    if !(ivp.alpha > 0.0 && ivp.alpha <= 1.0) {
        return Err(SolveError::Domain(format!(
            "order must lie in (0, 1], got {}",
            ivp.alpha
        )));
    }
    if !ivp.y0.is_finite() {
        return Err(SolveError::Domain(format!(
            "initial value must be finite, got {}",
            ivp.y0
        )));
    }
    if (ivp.a - mesh.a()).abs() > 1e-12 * (1.0 + ivp.a.abs()) {
        return Err(SolveError::Domain(format!(
            "mesh starts at {} but the problem starts at {}",
            mesh.a(),
            ivp.a
        )));
    }
    match cfg.method {
        Method::Adams => solve_adams(ivp, mesh, cfg),
        Method::Bdf2 => solve_flmm(ivp, mesh, cfg, KernelKind::Bdf2),
        Method::Trapezoidal => solve_flmm(ivp, mesh, cfg, KernelKind::Trapezoidal),
    }
}

/// Re-solves the same problem on `[a, new_end]` with the policy-derived
/// mesh.  Causal schemes make the restriction to the old interval agree
/// with the original trajectory to quadrature accuracy.
pub fn extend_solution<F: Fn(f64, f64) -> f64>(
    ivp: &Ivp<F>,
    base: &Trajectory,
    new_end: f64,
    policy: MeshPolicy,
    cfg: &SolveConfig,
) -> Result<Trajectory, SolveError> {
    let MeshPolicy::SameStep = policy;
    if new_end <= base.terminal_time() {
        return Err(SolveError::Domain(format!(
            "extension endpoint {new_end} does not move past {}",
            base.terminal_time()
        )));
    }
    let mesh = Mesh::with_step(base.t()[0], new_end, base.step())?;
    solve_ivp(ivp, &mesh, cfg)
}

fn solve_adams<F: Fn(f64, f64) -> f64>(
    ivp: &Ivp<F>,
    mesh: &Mesh,
    cfg: &SolveConfig,
) -> Result<Trajectory, SolveError> {
    let alpha = ivp.alpha;
    let len = mesh.steps() + 1;
    let h = mesh.h();
    let predictor = cached_kernel(alpha, KernelKind::AdamsPredictor, len);
    let corrector = cached_kernel(alpha, KernelKind::AdamsCorrector, len);
    let ha1 = h.powf(alpha) / gamma(alpha + 1.0);
    let ha2 = h.powf(alpha) / gamma(alpha + 2.0);
    let y0 = ivp.y0;
    let f0 = (ivp.f)(mesh.node(0), y0);
    if !f0.is_finite() {
        return Err(SolveError::NonFinite { t: mesh.node(0) });
    }
    let mut y = vec![0.0; len];
    y[0] = y0;
    let kernels: [&[f64]; 2] = [predictor.as_slice(), corrector.as_slice()];
    history::drive(&kernels, f0, len, |n, hist| {
        let t = mesh.node(n);
        let predicted = y0 + ha1 * (hist[0] + predictor[n] * f0);
        let base = y0 + ha2 * (weights::adams_initial_weight(alpha, n) * f0 + hist[1]);
        let mut fc = (ivp.f)(t, predicted);
        let mut yc = predicted;
        for _ in 0..cfg.corrector_sweeps {
            yc = base + ha2 * fc;
            fc = (ivp.f)(t, yc);
        }
        if !(yc.is_finite() && fc.is_finite()) {
            return Err(SolveError::NonFinite { t });
        }
        y[n] = yc;
        Ok(fc)
    })?;
    Ok(Trajectory { t: mesh.nodes(), y })
}

fn solve_flmm<F: Fn(f64, f64) -> f64>(
    ivp: &Ivp<F>,
    mesh: &Mesh,
    cfg: &SolveConfig,
    kind: KernelKind,
) -> Result<Trajectory, SolveError> {
    let alpha = ivp.alpha;
    let len = mesh.steps() + 1;
    let h = mesh.h();
    let ha = h.powf(alpha);
    let omega = cached_kernel(alpha, kind, len);
    let exponents = weights::starting_exponents(alpha);
    let c = exponents.len();
    let s = c - 1;
    if mesh.steps() < s {
        return Err(SolveError::Domain(format!(
            "mesh needs at least {s} steps for the starting block at alpha = {alpha}"
        )));
    }

    let y0 = ivp.y0;
    let f0 = (ivp.f)(mesh.node(0), y0);
    if !f0.is_finite() {
        return Err(SolveError::NonFinite { t: mesh.node(0) });
    }

    // Coupled starting block: nodes 1..=s are linked through the starting
    // weights, which reference all of f_0..f_s at every early node.
    let rows = weights::starting_rows(alpha, &omega, s).ok_or_else(|| {
        SolveError::Domain("starting exponent system is singular".to_string())
    })?;
    let tnodes: Vec<f64> = (0..=s).map(|j| mesh.node(j)).collect();
    let mut u = vec![y0; s];
    let mut fvals = vec![0.0; s + 1];
    fvals[0] = f0;
    let eval_block = |u: &[f64], fvals: &mut [f64]| -> Result<Vec<f64>, SolveError> {
        for j in 1..=s {
            let fv = (ivp.f)(tnodes[j], u[j - 1]);
            if !fv.is_finite() {
                return Err(SolveError::NonFinite { t: tnodes[j] });
            }
            fvals[j] = fv;
        }
        let mut r = vec![0.0; s];
        for i in 1..=s {
            let mut acc = 0.0;
            for j in 0..=i {
                acc += omega[i - j] * fvals[j];
            }
            for j in 0..=s {
                acc += rows[i][j] * fvals[j];
            }
            r[i - 1] = u[i - 1] - y0 - ha * acc;
        }
        Ok(r)
    };
    let mut converged = false;
    let mut last_norm = f64::INFINITY;
    for iter in 0..cfg.newton_max_iter {
        let r = eval_block(&u, &mut fvals)?;
        last_norm = r.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let scale = 1.0 + u.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        if last_norm <= cfg.newton_tol * scale {
            converged = true;
            break;
        }
        let mut jac = vec![0.0; s * s];
        let mut scratch = fvals.clone();
        for k in 0..s {
            let mut up = u.clone();
            let dy = up[k].abs().max(1.0) * 1e-7;
            up[k] += dy;
            let rp = eval_block(&up, &mut scratch)?;
            for i in 0..s {
                jac[i * s + k] = (rp[i] - r[i]) / dy;
            }
        }
        let lu = Lu::factor(&jac, s).ok_or(SolveError::NewtonStalled {
            t: tnodes[s],
            residual: last_norm,
            iters: iter,
        })?;
        let mut delta = r;
        lu.solve(&mut delta);
        for k in 0..s {
            u[k] -= delta[k];
        }
    }
    if !converged {
        return Err(SolveError::NewtonStalled {
            t: tnodes[s],
            residual: last_norm,
            iters: cfg.newton_max_iter,
        });
    }

    // Starting-weight corrections for the remaining nodes, collapsed to a
    // single array: sum_j w_{n,j} f_j = defect(n) . (V^-T f), where the
    // defect rows come from one offline convolution per basis exponent.
    let mut vt = vec![0.0; c * c];
    let v = weights::starting_matrix(&exponents);
    for i in 0..c {
        for j in 0..c {
            vt[j * c + i] = v[i * c + j];
        }
    }
    let lut = Lu::factor(&vt, c).ok_or_else(|| {
        SolveError::Domain("starting exponent system is singular".to_string())
    })?;
    let mut ustar = fvals.clone();
    lut.solve(&mut ustar);
    let mut corr = vec![0.0; len];
    for (i, &g) in exponents.iter().enumerate() {
        let gvec: Vec<f64> = (0..len).map(|j| weights::node_power(j, g)).collect();
        let conv = history::history_sum(&omega, &gvec);
        for n in s + 1..len {
            corr[n] += ustar[i] * (weights::fractional_moment(alpha, g, n) - conv[n]);
        }
    }

    let mut y = vec![0.0; len];
    y[0] = y0;
    y[1..=s].copy_from_slice(&u);
    let om0 = omega[0];
    let kernels: [&[f64]; 1] = [omega.as_slice()];
    history::drive(&kernels, f0, len, |n, hist| {
        if n <= s {
            return Ok(fvals[n]);
        }
        let t = mesh.node(n);
        let known = y0 + ha * (hist[0] + omega[n] * f0 + corr[n]);
        let mut yy = y[n - 1];
        let mut fv = (ivp.f)(t, yy);
        let mut done = false;
        let mut residual = f64::INFINITY;
        for iter in 0..cfg.newton_max_iter {
            if !(yy.is_finite() && fv.is_finite()) {
                return Err(SolveError::NonFinite { t });
            }
            residual = yy - known - ha * om0 * fv;
            if residual.abs() <= cfg.newton_tol * yy.abs().max(1.0) {
                done = true;
                break;
            }
            let dy = yy.abs().max(1.0) * 1e-7;
            let f2 = (ivp.f)(t, yy + dy);
            let slope = 1.0 - ha * om0 * (f2 - fv) / dy;
            if !slope.is_finite() || slope == 0.0 {
                return Err(SolveError::NewtonStalled {
                    t,
                    residual: residual.abs(),
                    iters: iter,
                });
            }
            yy -= residual / slope;
            fv = (ivp.f)(t, yy);
        }
        if !done {
            return Err(SolveError::NewtonStalled {
                t,
                residual: residual.abs(),
                iters: cfg.newton_max_iter,
            });
        }
        y[n] = yy;
        Ok(fv)
    })?;
    Ok(Trajectory { t: mesh.nodes(), y })
}
