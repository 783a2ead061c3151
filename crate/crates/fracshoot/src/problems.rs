//! Built-in catalog of benchmark terminal value problems.
//!
//! Three problems, addressed as `ex1`, `ex2`, `ex3`:
//!
//! * `ex1` — order 0.3 on [0, 1], terminal value 1/4.  The right-hand side
//!   mixes forcing powers of `t` with `-|y|^{3/2}`, engineered so the
//!   closed form `y(t) = t^8 - 3 t^{4+alpha/2} + (9/4) t^alpha` solves it.
//! * `ex2` — order 0.3 on [0, 7], `f = -(3/2) y`.  The terminal value is
//!   `(14/5) E_alpha(-(3/2) 7^alpha)` and the exact solution is the same
//!   Mittag-Leffler decay started at 14/5.
//! * `ex3` — order 0.7 on [0, 20], `f = sin(t y)/(t+1)`, terminal value
//!   0.8360565 (the computed terminal state of the initial value problem
//!   started at 1).  No closed form exists; errors are measured against a
//!   stored high-resolution reference run.
//!
//! The catalog also carries each problem's benchmark step sizes and the
//! reference-trajectory cache (`FRACSHOOT_CACHE_DIR`, falling back to the
//! system temp directory).

use crate::fode::{
    solve_ivp, Ivp, Mesh, MeshError, Method, SolveConfig, SolveError, Trajectory, TrajectoryError,
};
use crate::gamma;
use crate::mlf::{mittag_leffler, MlfError};
use crate::shooting::Tvp;
use std::path::PathBuf;
use std::sync::{Arc, OnceLock};
use thiserror::Error;

/// Reference recipe for `ex3`: BDF2 with this many steps on [0, 20],
/// stored downsampled by [`REFERENCE_DOWNSAMPLE`].
const REFERENCE_STEPS: usize = 2_000_000;
const REFERENCE_DOWNSAMPLE: usize = 500;
/// Node spacing of the stored reference trajectory.
const REFERENCE_H: f64 = 20.0 * REFERENCE_DOWNSAMPLE as f64 / REFERENCE_STEPS as f64;

#[derive(Clone, Copy, Debug)]
enum Kind {
    /// `c1 t^(8-alpha) - c2 t^(4-alpha/2) + c3 + ((3/2) t^(alpha/2) - t^4)^3 - |y|^(3/2)`
    PowerForcing { c1: f64, c2: f64, c3: f64 },
    /// `lambda y`
    LinearDecay { lambda: f64 },
    /// `sin(t y) / (t + 1)`
    DampedSine,
}

#[derive(Clone, Copy, Debug)]
pub struct Problem {
    id: &'static str,
    alpha: f64,
    a: f64,
    b: f64,
    y_star: f64,
    kind: Kind,
}

#[derive(Debug, Error)]
pub enum ProblemError {
    #[error("unknown problem id {0:?}; the catalog holds ex1, ex2, ex3")]
    UnknownId(String),
    #[error("problem {id} cannot run at order alpha = {alpha}: {reason}")]
    UnsupportedAlpha {
        id: &'static str,
        alpha: f64,
        reason: String,
    },
    #[error("problem {0} has no reference trajectory")]
    NoReference(&'static str),
    #[error("trajectory step {step} does not hit any node of the reference mesh (spacing {reference_h})")]
    IncommensurateMesh { step: f64, reference_h: f64 },
    #[error(transparent)]
    Mlf(#[from] MlfError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Mesh(#[from] MeshError),
    #[error(transparent)]
    Trajectory(#[from] TrajectoryError),
    #[error("reference cache I/O failed: {0}")]
    Io(#[from] std::io::Error),
}

fn build_ex1(alpha: f64) -> Problem {
    let c1 = 40320.0 / gamma(9.0 - alpha);
    let c2 = 3.0 * gamma(5.0 + alpha / 2.0) / gamma(5.0 - alpha / 2.0);
    let c3 = 2.25 * gamma(1.0 + alpha);
    Problem {
        id: "ex1",
        alpha,
        a: 0.0,
        b: 1.0,
        y_star: 0.25,
        kind: Kind::PowerForcing { c1, c2, c3 },
    }
}

fn build_ex2(alpha: f64) -> Result<Problem, ProblemError> {
    let y_star = 2.8 * mittag_leffler(alpha, -1.5 * 7f64.powf(alpha))?;
    Ok(Problem {
        id: "ex2",
        alpha,
        a: 0.0,
        b: 7.0,
        y_star,
        kind: Kind::LinearDecay { lambda: -1.5 },
    })
}

fn build_ex3() -> Problem {
    Problem {
        id: "ex3",
        alpha: 0.7,
        a: 0.0,
        b: 20.0,
        y_star: 0.8360565,
        kind: Kind::DampedSine,
    }
}

/// The three catalog problems at their default orders.
pub fn catalog() -> Vec<Problem> {
    vec![
        build_ex1(0.3),
        build_ex2(0.3).expect("default ex2 terminal value evaluates"),
        build_ex3(),
    ]
}

/// Look up a catalog problem by id.
pub fn by_name(id: &str) -> Result<Problem, ProblemError> {
    match id {
        "ex1" => Ok(build_ex1(0.3)),
        "ex2" => build_ex2(0.3),
        "ex3" => Ok(build_ex3()),
        other => Err(ProblemError::UnknownId(other.to_string())),
    }
}

impl Problem {
    pub fn id(&self) -> &'static str {
        self.id
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn y_star(&self) -> f64 {
        self.y_star
    }

    /// Rebuild the problem at a different order.  Terminal values and
    /// right-hand-side coefficients are recomputed; `ex3` is pinned to its
    /// default order because its terminal value and reference trajectory
    /// exist only there.
    pub fn with_alpha(&self, alpha: f64) -> Result<Problem, ProblemError> {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(ProblemError::UnsupportedAlpha {
                id: self.id,
                alpha,
                reason: "the order must lie strictly between 0 and 1".into(),
            });
        }
        match self.id {
            "ex1" => Ok(build_ex1(alpha)),
            "ex2" => build_ex2(alpha),
            "ex3" => {
                if (alpha - 0.7).abs() < 1e-12 {
                    Ok(build_ex3())
                } else {
                    Err(ProblemError::UnsupportedAlpha {
                        id: self.id,
                        alpha,
                        reason: "the terminal value and reference trajectory are only \
                                 defined at order 0.7"
                            .into(),
                    })
                }
            }
            _ => unreachable!("catalog ids are fixed"),
        }
    }

    pub fn rhs(&self, t: f64, y: f64) -> f64 {
        match self.kind {
            Kind::PowerForcing { c1, c2, c3 } => {
                let ha = 0.5 * self.alpha;
                let w = 1.5 * t.powf(ha) - t.powi(4);
                c1 * t.powf(8.0 - self.alpha) - c2 * t.powf(4.0 - ha) + c3 + w.powi(3)
                    - y.abs().powf(1.5)
            }
            Kind::LinearDecay { lambda } => lambda * y,
            Kind::DampedSine => (t * y).sin() / (t + 1.0),
        }
    }

    /// The terminal value problem this catalog entry poses.
    pub fn tvp(&self) -> Tvp<impl Fn(f64, f64) -> f64 + Copy> {
        let p = *self;
        Tvp {
            alpha: p.alpha,
            a: p.a,
            b: p.b,
            y_star: p.y_star,
            f: move |t, y| p.rhs(t, y),
        }
    }

    /// The known initial value recovered by shooting, where one exists.
    pub fn initial_value_truth(&self) -> Option<f64> {
        match self.id {
            "ex1" => Some(0.0),
            "ex2" => Some(2.8),
            "ex3" => Some(1.0),
            _ => None,
        }
    }

    pub fn has_exact(&self) -> bool {
        !matches!(self.kind, Kind::DampedSine)
    }

    /// Closed-form solution value, where one exists.
    pub fn exact_value(&self, t: f64) -> Option<f64> {
        match self.kind {
            Kind::PowerForcing { .. } => {
                let ha = 0.5 * self.alpha;
                Some(t.powi(8) - 3.0 * t.powf(4.0 + ha) + 2.25 * t.powf(self.alpha))
            }
            Kind::LinearDecay { lambda } => mittag_leffler(self.alpha, lambda * t.powf(self.alpha))
                .ok()
                .map(|e| 2.8 * e),
            Kind::DampedSine => None,
        }
    }

    /// Benchmark step sizes (matching the reported experiment grids).
    pub fn bench_steps(&self) -> [f64; 3] {
        match self.id {
            "ex1" => [0.002, 0.001, 0.0005],
            "ex2" => [0.014, 0.007, 0.0035],
            _ => [0.04, 0.02, 0.01],
        }
    }

    /// Maximum absolute node error of a computed trajectory, against the
    /// closed form where one exists and the stored reference otherwise.
    pub fn max_error(&self, traj: &Trajectory) -> Result<f64, ProblemError> {
        if self.has_exact() {
            let mut worst = 0.0f64;
            for (&t, &y) in traj.t().iter().zip(traj.y()) {
                let exact = self.exact_value(t).ok_or_else(|| {
                    ProblemError::Mlf(MlfError::Domain(format!(
                        "closed form failed to evaluate at t = {t}"
                    )))
                })?;
                worst = worst.max((y - exact).abs());
            }
            return Ok(worst);
        }
        // Match trajectory nodes onto the reference mesh before paying for
        // the reference itself.
        let mut pairs = Vec::new();
        for (j, &t) in traj.t().iter().enumerate() {
            let pos = (t - self.a) / REFERENCE_H;
            let idx = pos.round();
            if (pos - idx).abs() <= 1e-6 * (1.0 + pos.abs()) {
                let idx = idx as usize;
                if idx <= REFERENCE_STEPS / REFERENCE_DOWNSAMPLE {
                    pairs.push((j, idx));
                }
            }
        }
        if pairs.is_empty() {
            return Err(ProblemError::IncommensurateMesh {
                step: traj.step(),
                reference_h: REFERENCE_H,
            });
        }
        let reference = self.reference_trajectory()?;
        let mut worst = 0.0f64;
        for (j, idx) in pairs {
            worst = worst.max((traj.y()[j] - reference.y()[idx]).abs());
        }
        Ok(worst)
    }

    /// The stored high-resolution reference trajectory (`ex3` only),
    /// computed on first use and cached on disk and in memory.
    pub fn reference_trajectory(&self) -> Result<Arc<Trajectory>, ProblemError> {
        if self.has_exact() {
            return Err(ProblemError::NoReference(self.id));
        }
        static EX3_REFERENCE: OnceLock<Arc<Trajectory>> = OnceLock::new();
        if let Some(cached) = EX3_REFERENCE.get() {
            return Ok(cached.clone());
        }
        let built = Arc::new(self.load_or_build_reference()?);
        Ok(EX3_REFERENCE.get_or_init(|| built).clone())
    }

    fn reference_cache_path(&self) -> PathBuf {
        let dir = std::env::var_os("FRACSHOOT_CACHE_DIR")
            .map(PathBuf::from)
            .unwrap_or_else(std::env::temp_dir);
        dir.join(format!(
            "fracshoot_ref_{}_a{:.4}_bdf2_n{}_ds{}.csv",
            self.id, self.alpha, REFERENCE_STEPS, REFERENCE_DOWNSAMPLE
        ))
    }

    fn load_or_build_reference(&self) -> Result<Trajectory, ProblemError> {
        let path = self.reference_cache_path();
        let nodes = REFERENCE_STEPS / REFERENCE_DOWNSAMPLE + 1;
        if let Ok(file) = std::fs::File::open(&path) {
            if let Ok(traj) = Trajectory::read_csv(std::io::BufReader::new(file)) {
                let shape_ok = traj.len() == nodes
                    && (traj.t()[0] - self.a).abs() < 1e-12
                    && (traj.terminal_time() - self.b).abs() < 1e-9;
                if shape_ok {
                    return Ok(traj);
                }
            }
        }

        let p = *self;
        let ivp = Ivp {
            alpha: p.alpha,
            a: p.a,
            y0: 1.0,
            f: move |t, y| p.rhs(t, y),
        };
        let mesh = Mesh::new(self.a, self.b, REFERENCE_STEPS)?;
        let full = solve_ivp(&ivp, &mesh, &SolveConfig::new(Method::Bdf2))?;
        let t: Vec<f64> = full
            .t()
            .iter()
            .step_by(REFERENCE_DOWNSAMPLE)
            .copied()
            .collect();
        let y: Vec<f64> = full
            .y()
            .iter()
            .step_by(REFERENCE_DOWNSAMPLE)
            .copied()
            .collect();
        drop(full);
        let reference = Trajectory::new(t, y)?;

        // Best-effort disk cache: write atomically, ignore cache failures.
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        let written = std::fs::File::create(&tmp)
            .and_then(|file| {
                use std::io::Write;
                let mut out = std::io::BufWriter::new(file);
                reference.write_csv(&mut out)?;
                out.flush()
            })
            .is_ok();
        if written {
            let _ = std::fs::rename(&tmp, &path);
        }
        let _ = std::fs::remove_file(&tmp);
        Ok(reference)
    }
}
