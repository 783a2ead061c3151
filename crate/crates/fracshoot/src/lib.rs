//! Solvers for terminal value problems of Caputo fractional differential
//! equations of order `alpha` in (0, 1).
//!
//! A terminal value problem prescribes `y(b) = y_star` instead of an initial
//! value.  The library converts it to an initial value problem by shooting:
//! repeated IVP solves with trial initial values, driven either by classical
//! bisection or by the proportional-secting strategy, which exploits the
//! Mittag-Leffler bounds on how far apart two solutions of the same equation
//! can drift.
//!
//! Module map:
//!
//! * [`mlf`] - evaluation of the one-parameter Mittag-Leffler function.
//! * [`fode`] - fractional IVP solvers on uniform meshes: an explicit
//!   predictor-corrector (Adams) scheme and implicit fractional linear
//!   multistep methods, with FFT-accelerated history sums.
//! * [`proportionality`] - data-driven bounds on the terminal proportionality
//!   factor between solution pairs, and the heuristics that pick the factor
//!   used by the shooting iteration.
//! * [`shooting`] - the shooting drivers (proportional secting and the
//!   bisection baseline) and their reports.
//! * [`problems`] - the built-in benchmark problem catalog with closed-form
//!   or high-resolution reference solutions.
//!
//! # Quick start
//!
//! ```
//! use fracshoot::fode::{Ivp, Mesh, Method, SolveConfig};
//! use fracshoot::shooting::{shoot_proportional_secting, ShootConfig, Strategy, Tvp};
//!
//! // D^0.3 y = -1.5 y on [0, 7], y(7) = 0.6476; recover y(0).
//! let tvp = Tvp {
//!     alpha: 0.3,
//!     a: 0.0,
//!     b: 7.0,
//!     y_star: 0.6476,
//!     f: |_t, y| -1.5 * y,
//! };
//! let mesh = Mesh::new(0.0, 7.0, 1000).unwrap();
//! let cfg = ShootConfig {
//!     eps: 1e-6,
//!     strategy: Strategy::Auto,
//!     ..ShootConfig::default()
//! };
//! let solve = SolveConfig::new(Method::Bdf2);
//! let report = shoot_proportional_secting(&tvp, &mesh, &solve, &cfg).unwrap();
//! assert!(report.converged);
//! assert!((report.initial_value_estimate - 2.8).abs() < 1e-3);
//! ```

pub mod fode;
pub mod mlf;
pub mod problems;
pub mod proportionality;
pub mod shooting;

mod special;

pub use special::{gamma, ln_gamma, rgamma};
