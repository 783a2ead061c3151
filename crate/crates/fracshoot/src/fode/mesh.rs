//! Uniform meshes over a closed interval.

use thiserror::Error;

/// A uniform mesh with `steps` equal subintervals on `[a, b]`.
///
/// Nodes are generated as `a + (b - a) * (j / steps)` so that the last node
/// hits the right endpoint without accumulated rounding drift.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mesh {
    a: f64,
    b: f64,
    steps: usize,
}

#[derive(Debug, Error)]
pub enum MeshError {
    #[error("mesh interval must satisfy b > a with finite endpoints, got [{a}, {b}]")]
    BadInterval { a: f64, b: f64 },
    #[error("mesh must have at least one step")]
    NoSteps,
    #[error("step {h} does not divide [{a}, {b}] into a whole number of intervals")]
    IncommensurateStep { a: f64, b: f64, h: f64 },
}

impl Mesh {
    pub fn new(a: f64, b: f64, steps: usize) -> Result<Self, MeshError> {
        if !(a.is_finite() && b.is_finite() && b > a) {
            return Err(MeshError::BadInterval { a, b });
        }
        if steps == 0 {
            return Err(MeshError::NoSteps);
        }
        Ok(Self { a, b, steps })
    }

    /// Builds the mesh from a target step size, which must divide the
    /// interval evenly (to within one part in 1e8).
    pub fn with_step(a: f64, b: f64, h: f64) -> Result<Self, MeshError> {
        if !(a.is_finite() && b.is_finite() && b > a) {
            return Err(MeshError::BadInterval { a, b });
        }
        if !(h.is_finite() && h > 0.0) {
            return Err(MeshError::IncommensurateStep { a, b, h });
        }
        let real = (b - a) / h;
        let steps = real.round();
        if steps < 1.0 || (real - steps).abs() > 1e-8 * steps {
            return Err(MeshError::IncommensurateStep { a, b, h });
        }
        Self::new(a, b, steps as usize)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// Number of subintervals; the mesh has `steps() + 1` nodes.
    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn h(&self) -> f64 {
        (self.b - self.a) / self.steps as f64
    }

    pub fn node(&self, j: usize) -> f64 {
        debug_assert!(j <= self.steps);
        self.a + (self.b - self.a) * (j as f64 / self.steps as f64)
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..=self.steps).map(|j| self.node(j)).collect()
    }
}
