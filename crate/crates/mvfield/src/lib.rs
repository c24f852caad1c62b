//! Transfinite mean value interpolation over simple polygons.
//!
//! Given a simple polygon and continuous scalar data on its boundary, the
//! mean value interpolant extends the data to a smooth function on the
//! interior by angle-weighted averaging around each evaluation point. This
//! crate provides:
//!
//! * validated polygon geometry with the pointwise queries the interpolant
//!   is built from ([`geometry`]),
//! * adaptive Gauss-Legendre quadrature ([`quadrature`]),
//! * the interpolant itself via two independently derived backends, plus
//!   closed-form edge weights and piecewise-linear mean value coordinates
//!   ([`interpolant`]),
//! * a verification harness: boundary-convergence probes, the concave-vertex
//!   angle identity, and error-field grids ([`harness`]),
//! * canonical test polygons and random generators ([`fixtures`]).

pub mod boundary;
pub mod fixtures;
pub mod geometry;
pub mod harness;
pub mod interpolant;
pub mod quadrature;

pub use boundary::{BoundaryFunction, Builtin, FunctionError};
pub use geometry::{Edge, GeometryError, PointLocation, Polygon, Vec2};
pub use harness::{
    CellClass, ConvergenceReport, FieldGrid, HarnessError, ProbeEntry, ProbeTarget,
};
pub use interpolant::{Backend, EvalError, EvalOutcome};
pub use quadrature::{QuadResult, QuadratureConfig, QuadratureError};
