//! Continuous scalar data on the polygon boundary.
//!
//! Boundary data is viewed per edge as `f_e: [0, 1] -> R` with the parameter
//! linear in arclength. Three representations: piecewise-linear vertex data,
//! named closed forms restricted to the boundary, and tabulated per-edge
//! samples with linear interpolation.

use crate::geometry::{Polygon, Vec2};

/// Relative tolerance for the vertex-continuity check on tabulated data.
pub const EPS_CONT: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FunctionError {
    #[error("expected {expected} values (one per vertex), got {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("boundary data jumps by {jump:.3e} at vertex {vertex}")]
    ContinuityViolation { vertex: usize, jump: f64 },
    #[error("boundary data contains a non-finite value")]
    NonFiniteData,
    #[error("edge {0} needs at least 2 samples")]
    TooFewSamples(usize),
}

/// Named closed-form functions of the plane. Restricted to the boundary they
/// serve as test data; their global extension is what error grids compare
/// the interpolant against.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Builtin {
    /// f = 1.
    One,
    /// f(x, y) = a + b x + c y.
    Linear { a: f64, b: f64, c: f64 },
    /// f(x, y) = x^2 - y^2.
    Saddle,
    /// f(x, y) = (tanh(9x - 9y) + 1) / 9.
    TanhRidge,
}

impl Builtin {
    pub fn global(&self, p: Vec2) -> f64 {
        match *self {
            Builtin::One => 1.0,
            Builtin::Linear { a, b, c } => a + b * p.x + c * p.y,
            Builtin::Saddle => p.x * p.x - p.y * p.y,
            Builtin::TanhRidge => ((9.0 * (p.x - p.y)).tanh() + 1.0) / 9.0,
        }
    }
}

/// Continuous scalar function on the polygon boundary.
#[derive(Debug, Clone)]
pub enum BoundaryFunction {
    /// One value per vertex, linear along each edge.
    PiecewiseLinear { vertex_values: Vec<f64> },
    /// Closed form of the plane restricted to the boundary.
    Builtin(Builtin),
    /// Per-edge sample vectors, uniform in the edge parameter, linearly
    /// interpolated. `samples[e][0]` sits at the edge start, the last sample
    /// at the edge end.
    Tabulated { edge_samples: Vec<Vec<f64>> },
}

impl BoundaryFunction {
    pub fn builtin(b: Builtin) -> Self {
        BoundaryFunction::Builtin(b)
    }

    /// Piecewise-linear data from one value per vertex.
    pub fn piecewise_linear(polygon: &Polygon, values: Vec<f64>) -> Result<Self, FunctionError> {
        if values.len() != polygon.vertex_count() {
            return Err(FunctionError::ArityMismatch {
                expected: polygon.vertex_count(),
                found: values.len(),
            });
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(FunctionError::NonFiniteData);
        }
        Ok(BoundaryFunction::PiecewiseLinear {
            vertex_values: values,
        })
    }

    /// Tabulated data from per-edge samples; adjacent edges must agree at
    /// the shared vertex to within `EPS_CONT * (1 + max|f|)`.
    pub fn tabulated(polygon: &Polygon, edge_samples: Vec<Vec<f64>>) -> Result<Self, FunctionError> {
        let n = polygon.vertex_count();
        if edge_samples.len() != n {
            return Err(FunctionError::ArityMismatch {
                expected: n,
                found: edge_samples.len(),
            });
        }
        let mut max_abs: f64 = 0.0;
        for (e, samples) in edge_samples.iter().enumerate() {
            if samples.len() < 2 {
                return Err(FunctionError::TooFewSamples(e));
            }
            for &s in samples {
                if !s.is_finite() {
                    return Err(FunctionError::NonFiniteData);
                }
                max_abs = max_abs.max(s.abs());
            }
        }
        for e in 0..n {
            let next = (e + 1) % n;
            let end = *edge_samples[e].last().expect("checked non-empty");
            let start = edge_samples[next][0];
            let jump = (end - start).abs();
            if jump > EPS_CONT * (1.0 + max_abs) {
                return Err(FunctionError::ContinuityViolation {
                    vertex: next,
                    jump,
                });
            }
        }
        Ok(BoundaryFunction::Tabulated { edge_samples })
    }

    /// Value at parameter `t` of edge `e`.
    pub fn eval_edge(&self, polygon: &Polygon, e: usize, t: f64) -> f64 {
        match self {
            BoundaryFunction::PiecewiseLinear { vertex_values } => {
                let n = vertex_values.len();
                (1.0 - t) * vertex_values[e] + t * vertex_values[(e + 1) % n]
            }
            BoundaryFunction::Builtin(b) => b.global(polygon.edge(e).point_at(t)),
            BoundaryFunction::Tabulated { edge_samples } => {
                let samples = &edge_samples[e];
                let m = samples.len() - 1;
                let s = (t.clamp(0.0, 1.0)) * m as f64;
                let i = (s.floor() as usize).min(m - 1);
                let frac = s - i as f64;
                (1.0 - frac) * samples[i] + frac * samples[i + 1]
            }
        }
    }

    /// Value at vertex `i`.
    pub fn vertex_value(&self, polygon: &Polygon, i: usize) -> f64 {
        self.eval_edge(polygon, i, 0.0)
    }

    /// The global closed form, when one exists.
    pub fn global_extension(&self) -> Option<Builtin> {
        match self {
            BoundaryFunction::Builtin(b) => Some(*b),
            _ => None,
        }
    }
}
