//! Fractional initial value problem solvers on uniform meshes.
//!
//! Two scheme families are provided, both reducing the Caputo problem
//! `D^alpha y = f(t, y)`, `y(a) = y0` to its Volterra integral form:
//!
//! * [`Method::Adams`]: explicit predictor-corrector product integration
//!   (rectangle predictor, trapezoid corrector, four corrector sweeps).
//! * [`Method::Bdf2`] and [`Method::Trapezoidal`]: implicit fractional
//!   linear multistep methods built from convolution quadrature, with
//!   starting weights that restore second order despite the `t^alpha`
//!   singularity of solutions at the left endpoint.
//!
//! All schemes share the blocked-FFT history engine in this module, which
//! turns the O(N^2) memory term of the fractional integral into
//! O(N log^2 N) work while producing the same floating-point results for a
//! fixed mesh on every run.

mod history;
mod linalg;
mod mesh;
mod solve;
mod weights;

pub use history::history_sum;
pub use mesh::{Mesh, MeshError};
pub use solve::{
    extend_solution, solve_ivp, Ivp, MeshPolicy, Method, SolveConfig, SolveError, Trajectory,
    TrajectoryError,
};
