//! Quadrature weights for the product-integration and convolution
//! quadrature schemes.
//!
//! All kernels are evaluated in cancellation-free forms: the naive
//! differences like `(m+1)^(a+1) - 2 m^(a+1) + (m-1)^(a+1)` lose up to
//! `m^2 * eps` relative accuracy, which at the mesh sizes used for
//! reference solutions (2e6 steps) would swamp the scheme error.  Writing
//! them through `ln_1p`/`exp_m1` keeps the relative error near `m * eps`
//! or better.

use super::linalg::Lu;
use crate::special::gamma;

/// Rectangle-rule predictor kernel `b_m = m^a - (m-1)^a` for `m >= 1`;
/// index 0 is unused and set to zero.
pub(crate) fn adams_predictor_kernel(alpha: f64, len: usize) -> Vec<f64> {
    let mut w = vec![0.0; len];
    for (m, slot) in w.iter_mut().enumerate().skip(1) {
        let u = 1.0 / m as f64;
        // m^a (1 - (1 - u)^a), with (1-u)^a = exp(a ln(1-u)).
        *slot = -(m as f64).powf(alpha) * (alpha * (-u).ln_1p()).exp_m1();
    }
    w
}

/// Trapezoid-rule corrector kernel: `c_0 = 1`,
/// `c_m = (m+1)^(a+1) - 2 m^(a+1) + (m-1)^(a+1)` for `m >= 1`.
pub(crate) fn adams_corrector_kernel(alpha: f64, len: usize) -> Vec<f64> {
    let beta = alpha + 1.0;
    let mut w = vec![0.0; len];
    if !w.is_empty() {
        w[0] = 1.0;
    }
    for (m, slot) in w.iter_mut().enumerate().skip(1) {
        let u = 1.0 / m as f64;
        let plus = (beta * u.ln_1p()).exp_m1();
        let minus = (beta * (-u).ln_1p()).exp_m1();
        *slot = (m as f64).powf(beta) * (plus + minus);
    }
    w
}

/// Corrector weight of the initial node when stepping to node `n >= 1`:
/// `(n-1)^(a+1) - (n-1-a) n^a`.
pub(crate) fn adams_initial_weight(alpha: f64, n: usize) -> f64 {
    debug_assert!(n >= 1);
    let beta = alpha + 1.0;
    let u = 1.0 / n as f64;
    // n^b [ (1-u)^b - 1 + b u ].
    (n as f64).powf(beta) * ((beta * (-u).ln_1p()).exp_m1() + beta * u)
}

/// Convolution quadrature weights of the generating function
/// `((3 - 4 z + z^2) / 2)^(-a)` (the second-order backward difference).
///
/// Computed by the power-series recurrence for `p(z)^g`: with
/// `p_0 = 3/2, p_1 = -2, p_2 = 1/2` and `g = -a`,
/// `n p_0 h_n = sum_k ((g+1) k - n) p_k h_{n-k}`.  The unwanted solution
/// of this recurrence decays like `3^-n`, so forward evaluation is stable.
pub(crate) fn bdf2_weights(alpha: f64, len: usize) -> Vec<f64> {
    let g = -alpha;
    let mut w = vec![0.0; len];
    if w.is_empty() {
        return w;
    }
    w[0] = 1.5f64.powf(g);
    for n in 1..len {
        let nf = n as f64;
        let mut acc = ((g + 1.0) - nf) * (-2.0) * w[n - 1];
        if n >= 2 {
            acc += (2.0 * (g + 1.0) - nf) * 0.5 * w[n - 2];
        }
        w[n] = acc / (nf * 1.5);
    }
    w
}

/// Convolution quadrature weights of `(2 (1 - z) / (1 + z))^(-a)`
/// (the trapezoidal generating function), via the recurrence for
/// `((1-z)/(1+z))^(-a)`: `(n+1) h_{n+1} = 2 a h_n + (n-1) h_{n-1}`.
pub(crate) fn trapezoidal_weights(alpha: f64, len: usize) -> Vec<f64> {
    let scale = 2f64.powf(-alpha);
    let mut h = vec![0.0; len.max(2)];
    h[0] = 1.0;
    h[1] = 2.0 * alpha;
    for n in 1..len.saturating_sub(1) {
        let nf = n as f64;
        h[n + 1] = (2.0 * alpha * h[n] + (nf - 1.0) * h[n - 1]) / (nf + 1.0);
    }
    h.truncate(len);
    for v in &mut h {
        *v *= scale;
    }
    h
}

/// Exponents `{k a : k a <= 1} U {1}` of the singular expansion terms the
/// starting weights must integrate exactly (sorted, deduplicated).
pub(crate) fn starting_exponents(alpha: f64) -> Vec<f64> {
    let mut e = Vec::new();
    let mut k = 0u32;
    while k as f64 * alpha <= 1.0 + 1e-12 {
        e.push(k as f64 * alpha);
        k += 1;
    }
    if e.iter().all(|&g| (g - 1.0).abs() > 1e-12) {
        e.push(1.0);
    }
    e.sort_by(|a, b| a.partial_cmp(b).unwrap());
    e
}

/// `j^g` with the convention `0^0 = 1`.
pub(crate) fn node_power(j: usize, g: f64) -> f64 {
    if j == 0 {
        if g == 0.0 {
            1.0
        } else {
            0.0
        }
    } else {
        (j as f64).powf(g)
    }
}

/// Exact dimensionless fractional moment
/// `gamma(g+1)/gamma(g+1+a) * n^(g+a)`, the value the starting-corrected
/// quadrature must reproduce for the power `j^g`.
pub(crate) fn fractional_moment(alpha: f64, g: f64, n: usize) -> f64 {
    gamma(g + 1.0) / gamma(g + 1.0 + alpha) * (n as f64).powf(g + alpha)
}

/// Row-major Vandermonde-type matrix `V[i][j] = j^(g_i)` over the starting
/// nodes `j = 0..exponents.len()`.
pub(crate) fn starting_matrix(exponents: &[f64]) -> Vec<f64> {
    let c = exponents.len();
    let mut v = vec![0.0; c * c];
    for (i, &g) in exponents.iter().enumerate() {
        for j in 0..c {
            v[i * c + j] = node_power(j, g);
        }
    }
    v
}

/// `fractional_moment - sum_{j<=n} omega_{n-j} j^g`, the defect the
/// starting weights at node `n` must absorb for exponent `g`.  Direct
/// summation; intended for small `n` (starting block and tests).
pub(crate) fn starting_defect(alpha: f64, g: f64, omega: &[f64], n: usize) -> f64 {
    let mut conv = 0.0;
    for j in 0..=n {
        conv += omega[n - j] * node_power(j, g);
    }
    fractional_moment(alpha, g, n) - conv
}

/// Starting weight rows `w[n][j]` for `n = 0..=n_max`, solving the
/// exactness system per node.  Returns `None` if the exponent matrix is
/// singular (cannot happen for exponent sets produced by
/// [`starting_exponents`] with distinct entries).
pub(crate) fn starting_rows(alpha: f64, omega: &[f64], n_max: usize) -> Option<Vec<Vec<f64>>> {
    let exponents = starting_exponents(alpha);
    let c = exponents.len();
    let lu = Lu::factor(&starting_matrix(&exponents), c)?;
    let mut rows = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut rhs: Vec<f64> = exponents
            .iter()
            .map(|&g| starting_defect(alpha, g, omega, n))
            .collect();
        lu.solve(&mut rhs);
        rows.push(rhs);
    }
    Some(rows)
}
