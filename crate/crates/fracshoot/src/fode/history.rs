//! FFT-accelerated causal convolutions ("history sums") for the memory
//! term of fractional-order schemes.
//!
//! Two entry points:
//!
//! * [`history_sum`]: offline convolution of a known sequence, one padded
//!   FFT, used for starting-weight defect tables.
//! * [`drive`]: the online engine.  A time-stepping scheme needs
//!   `sum_{j<n} w_{n-j} x_j` before it can produce `x_n`, so a plain
//!   transform is impossible.  The engine recursively halves `[lo, hi)`:
//!   after the left half is stepped, one block convolution pushes its
//!   contribution onto every node of the right half, so each (source,
//!   target) pair is covered exactly once, at the split where the two
//!   nodes part ways.  Blocks at or below [`DIRECT_BLOCK`] nodes fall back
//!   to direct summation.  Total work is O(N log^2 N).
//!
//! For a fixed length the recursion tree, FFT sizes, and summation order
//! are all fixed, so repeated runs produce bit-identical results.

use rustfft::num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use std::collections::HashMap;
use std::sync::Arc;

/// Below this many targets a block is convolved by direct summation.
pub(crate) const DIRECT_BLOCK: usize = 64;

const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };

/// Full causal convolution: `out[n] = sum_{j=0..=n} w[n-j] x[j]`.
/// Requires `w.len() >= x.len()`.
///
/// Exposed so external checks can compare the transform path against a
/// direct quadratic summation on arbitrary inputs.
pub fn history_sum(w: &[f64], x: &[f64]) -> Vec<f64> {
    let n = x.len();
    assert!(w.len() >= n, "kernel shorter than signal");
    if n <= 2 * DIRECT_BLOCK {
        let mut out = vec![0.0; n];
        for (i, o) in out.iter_mut().enumerate() {
            let mut s = 0.0;
            for j in 0..=i {
                s += w[i - j] * x[j];
            }
            *o = s;
        }
        return out;
    }
    let size = (2 * n - 1).next_power_of_two();
    let mut planner = FftPlanner::new();
    let fwd = planner.plan_fft_forward(size);
    let inv = planner.plan_fft_inverse(size);
    let mut wa = vec![ZERO; size];
    let mut xa = vec![ZERO; size];
    for i in 0..n {
        wa[i].re = w[i];
        xa[i].re = x[i];
    }
    fwd.process(&mut wa);
    fwd.process(&mut xa);
    for (a, b) in wa.iter_mut().zip(&xa) {
        *a *= b;
    }
    inv.process(&mut wa);
    let scale = 1.0 / size as f64;
    wa[..n].iter().map(|c| c.re * scale).collect()
}

struct SpectrumCache {
    planner: FftPlanner<f64>,
    // Keyed by (kernel index, prefix length); FFT size follows from the
    // prefix length, so equal keys mean equal spectra.
    spectra: HashMap<(usize, usize), Arc<Vec<Complex64>>>,
}

impl SpectrumCache {
    fn spectrum(
        &mut self,
        k: usize,
        kernel: &[f64],
        need: usize,
        size: usize,
        fwd: &Arc<dyn Fft<f64>>,
    ) -> Arc<Vec<Complex64>> {
        if let Some(sp) = self.spectra.get(&(k, need)) {
            return Arc::clone(sp);
        }
        let mut buf = vec![ZERO; size];
        for m in 0..need {
            buf[m].re = kernel[m];
        }
        fwd.process(&mut buf);
        let arc = Arc::new(buf);
        self.spectra.insert((k, need), Arc::clone(&arc));
        arc
    }
}

/// Online stepping driver.
///
/// Produces `x[0..len]` with `x[0] = x0`; for each `n >= 1` the callback
/// receives `hist[k] = sum_{j=1}^{n-1} kernels[k][n-j] * x[j]` and returns
/// `x[n]` (or an error, which aborts the recursion).  Contributions of
/// `j = 0` and of the diagonal `j = n` are the caller's business: the
/// former usually carries a non-convolutional weight and the latter is the
/// implicit unknown.
pub(crate) fn drive<E, F>(
    kernels: &[&[f64]],
    x0: f64,
    len: usize,
    mut step: F,
) -> Result<Vec<f64>, E>
where
    F: FnMut(usize, &[f64]) -> Result<f64, E>,
{
    assert!(!kernels.is_empty() && kernels.len() <= 2);
    for k in kernels {
        assert!(k.len() >= len, "kernel shorter than the mesh");
    }
    let mut x = vec![0.0; len.max(1)];
    x[0] = x0;
    if len <= 1 {
        return Ok(x);
    }
    let mut acc: Vec<Vec<f64>> = kernels.iter().map(|_| vec![0.0; len]).collect();
    let mut cache = SpectrumCache {
        planner: FftPlanner::new(),
        spectra: HashMap::new(),
    };
    recurse(kernels, &mut cache, &mut x, &mut acc, 1, len, &mut step)?;
    Ok(x)
}

#[allow(clippy::too_many_arguments)]
fn recurse<E, F>(
    kernels: &[&[f64]],
    cache: &mut SpectrumCache,
    x: &mut [f64],
    acc: &mut [Vec<f64>],
    lo: usize,
    hi: usize,
    step: &mut F,
) -> Result<(), E>
where
    F: FnMut(usize, &[f64]) -> Result<f64, E>,
{
    if hi - lo <= DIRECT_BLOCK {
        let mut hist = [0.0f64; 2];
        for n in lo..hi {
            for (k, kernel) in kernels.iter().enumerate() {
                let mut s = acc[k][n];
                for j in lo..n {
                    s += kernel[n - j] * x[j];
                }
                hist[k] = s;
            }
            x[n] = step(n, &hist[..kernels.len()])?;
        }
        return Ok(());
    }
    let mid = lo + (hi - lo) / 2;
    recurse(kernels, cache, x, acc, lo, mid, step)?;
    block_add(kernels, cache, x, acc, lo, mid, hi);
    recurse(kernels, cache, x, acc, mid, hi, step)
}

/// Adds `sum_{j in [lo, mid)} kernel[n-j] x[j]` onto `acc[n]` for every
/// `n in [mid, hi)` with one circular convolution per kernel.
///
/// With block length `L = mid - lo` and prefix length `need = hi - lo`,
/// a transform size `>= need` leaves the target index range `[L, need)`
/// of the linear convolution alias-free, since the wrapped images start
/// at index `L + size >= 2L + (hi - mid)`.
fn block_add(
    kernels: &[&[f64]],
    cache: &mut SpectrumCache,
    x: &[f64],
    acc: &mut [Vec<f64>],
    lo: usize,
    mid: usize,
    hi: usize,
) {
    let l = mid - lo;
    let need = hi - lo;
    let size = need.next_power_of_two();
    let fwd = cache.planner.plan_fft_forward(size);
    let inv = cache.planner.plan_fft_inverse(size);
    let mut xb = vec![ZERO; size];
    for i in 0..l {
        xb[i].re = x[lo + i];
    }
    fwd.process(&mut xb);
    let scale = 1.0 / size as f64;
    for (k, kernel) in kernels.iter().enumerate() {
        let spec = cache.spectrum(k, kernel, need, size, &fwd);
        let mut prod: Vec<Complex64> = xb.iter().zip(spec.iter()).map(|(a, b)| a * b).collect();
        inv.process(&mut prod);
        for n in mid..hi {
            acc[k][n] += prod[n - lo].re * scale;
        }
    }
}
