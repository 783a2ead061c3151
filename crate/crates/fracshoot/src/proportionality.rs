//! Data-driven bounds on the terminal proportionality factor.
//!
//! Two solutions of the same Caputo equation started from different
//! initial values cannot cross, and their gap at the terminal time is the
//! initial gap times a factor bounded by Mittag-Leffler envelopes: if every
//! difference quotient of `f` in its second argument lies in `[l_lo, l_hi]`,
//! the factor lies in `[E_a(l_lo T^a), E_a(l_hi T^a)]`.  This module scans a
//! computed trajectory to estimate the quotient band and converts it into
//! factor bounds plus the heuristic used to pick the shooting factor.

use crate::fode::Trajectory;
use crate::mlf::{self, MlfError, MlfRequest};
use thiserror::Error;

/// Largest factor bound kept after Mittag-Leffler overflow.
pub const FACTOR_CAP: f64 = 1e300;

/// Parameters of the difference-quotient scan.
#[derive(Clone, Copy, Debug)]
pub struct QuotientScan {
    /// Probe offsets `k H` for `k = 1..=m` on both sides of the trajectory.
    pub m: usize,
    /// `H = spread_factor * (1 + max_t |y(t)|)`, so the widest probes reach
    /// a band of roughly `m * spread_factor` times the solution scale.
    pub spread_factor: f64,
}

impl Default for QuotientScan {
    fn default() -> Self {
        Self {
            m: 100,
            spread_factor: 0.015,
        }
    }
}

/// Observed band of difference quotients
/// `[f(t, y + kH) - f(t, y)] / (kH)` along a trajectory.
#[derive(Clone, Copy, Debug)]
pub struct QuotientBand {
    pub lower: f64,
    pub upper: f64,
    /// Probes that produced a finite quotient.
    pub probes: usize,
    /// Probes skipped because `f` returned a non-finite value there.
    pub skipped: usize,
}

/// Mittag-Leffler factor bounds derived from a quotient band.
#[derive(Clone, Copy, Debug)]
pub struct FactorBounds {
    pub low: f64,
    pub high: f64,
}

#[derive(Debug, Error)]
pub enum ProportionalityError {
    #[error("every probe of the right-hand side was non-finite ({skipped} skipped)")]
    AllProbesNonFinite { skipped: usize },
    #[error("invalid proportionality input: {0}")]
    Domain(String),
    #[error(transparent)]
    Mlf(#[from] MlfError),
}

/// Scans difference quotients of `f` around the given trajectory.
///
/// Nodes are visited with a stride that caps the work at a few thousand
/// nodes; every benchmark mesh in this crate is scanned exhaustively.
pub fn quotient_band<F: Fn(f64, f64) -> f64>(
    f: &F,
    traj: &Trajectory,
    scan: &QuotientScan,
) -> Result<QuotientBand, ProportionalityError> {
    if scan.m == 0 || !(scan.spread_factor > 0.0) {
        return Err(ProportionalityError::Domain(format!(
            "scan needs m >= 1 and a positive spread factor, got m = {}, spread = {}",
            scan.m, scan.spread_factor
        )));
    }
    let h = scan.spread_factor * (1.0 + traj.max_abs_y());
    let stride = traj.len().div_ceil(4096).max(1);
    let mut lower = f64::INFINITY;
    let mut upper = f64::NEG_INFINITY;
    let mut probes = 0usize;
    let mut skipped = 0usize;
    for idx in (0..traj.len()).step_by(stride) {
        let t = traj.t()[idx];
        let y = traj.y()[idx];
        let fy = f(t, y);
        if !fy.is_finite() {
            skipped += 2 * scan.m;
            continue;
        }
        for k in 1..=scan.m as i64 {
            for sign in [1.0f64, -1.0] {
                let dy = sign * k as f64 * h;
                let fp = f(t, y + dy);
                if !fp.is_finite() {
                    skipped += 1;
                    continue;
                }
                let q = (fp - fy) / dy;
                if !q.is_finite() {
                    skipped += 1;
                    continue;
                }
                lower = lower.min(q);
                upper = upper.max(q);
                probes += 1;
            }
        }
    }
    if probes == 0 {
        return Err(ProportionalityError::AllProbesNonFinite { skipped });
    }
    Ok(QuotientBand {
        lower,
        upper,
        probes,
        skipped,
    })
}

/// Converts a quotient band into terminal factor bounds over a time span.
pub fn factor_bounds(
    alpha: f64,
    span: f64,
    band: &QuotientBand,
) -> Result<FactorBounds, ProportionalityError> {
    if !(span > 0.0) {
        return Err(ProportionalityError::Domain(format!(
            "time span must be positive, got {span}"
        )));
    }
    let ta = span.powf(alpha);
    let low = envelope(alpha, band.lower * ta)?;
    let high = envelope(alpha, band.upper * ta)?;
    Ok(FactorBounds { low, high })
}

fn envelope(alpha: f64, z: f64) -> Result<f64, ProportionalityError> {
    let eval = mlf::evaluate(&MlfRequest::new(alpha, z))?;
    Ok(eval.value.min(FACTOR_CAP))
}

/// Factor selection when both bounds are available: contractive bands take
/// the midpoint, expansive bands take the cautious lower bound, and mixed
/// bands fall back to unity.
pub fn auto_factor(band: &QuotientBand, bounds: &FactorBounds) -> f64 {
    if band.upper <= 0.0 {
        0.5 * (bounds.low + bounds.high)
    } else if band.lower <= 0.0 {
        1.0
    } else {
        bounds.low
    }
}

pub fn midpoint_factor(bounds: &FactorBounds) -> f64 {
    0.5 * (bounds.low + bounds.high)
}
