//! The mean value interpolant and its building blocks.
//!
//! For a point `x` inside the polygon, every boundary edge `e` contributes an
//! integral over the circular arc it subtends at `x`. The interpolant is the
//! ratio of the data-weighted sum to the weight-only sum (phi). Two
//! independently derived backends evaluate the data integrals:
//!
//! * the angular backend parametrizes each arc by angle and maps quadrature
//!   nodes through ray/edge intersection (the defining form), and
//! * the boundary-integral backend substitutes arclength for arc angle,
//!   turning each contribution into an integral of `f(y) (y-x)·n / |y-x|^3`
//!   along the edge, with no ray intersections.
//!
//! The denominator always uses the closed form: the weight of an edge with
//! endpoints v1, v2 is `tan(angle/2) (1/|v1-x| + 1/|v2-x|)`.

use crate::boundary::BoundaryFunction;
use crate::geometry::{GeometryError, PointLocation, Polygon, Vec2, EPS_GEOM};
use crate::quadrature::{
    integrate_adaptive, integrate_adaptive_with, QuadResult, QuadratureConfig, QuadratureError,
};

/// Which evaluation backend computes the data integrals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Backend {
    /// Arc-angle parametrization of the defining integrals.
    Angular,
    /// Arclength kernel `(y-x)·n / |y-x|^3` along each edge.
    BoundaryIntegral,
}

impl std::fmt::Display for Backend {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Backend::Angular => "angular",
            Backend::BoundaryIntegral => "boundary",
        })
    }
}

impl std::str::FromStr for Backend {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "angular" => Ok(Backend::Angular),
            "boundary" => Ok(Backend::BoundaryIntegral),
            other => Err(format!("unknown backend '{other}' (expected angular|boundary)")),
        }
    }
}

/// Interpolant value plus diagnostics.
#[derive(Debug, Clone, Copy)]
pub struct EvalOutcome {
    /// The interpolant g(x); on the boundary this is the data value itself.
    pub value: f64,
    /// Denominator (closed form); `f64::INFINITY` for boundary points, where
    /// the weights diverge.
    pub phi: f64,
    /// Aggregate quadrature error estimate, in units of `value`.
    pub quad_error: f64,
    /// False when some edge integral hit its subdivision limit before
    /// converging.
    pub converged: bool,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EvalError {
    #[error("evaluation point lies outside the polygon")]
    ExteriorPoint,
    #[error("evaluation point lies on the boundary; use the boundary data value")]
    OnBoundary,
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
}

/// Closed-form weight of edge `e` seen from `x`:
/// `tan(angle/2) (1/|v1-x| + 1/|v2-x|)`, and 0 when `x` lies on the edge's
/// supporting line (sign dead-band included).
pub fn edge_weight(polygon: &Polygon, e: usize, x: Vec2) -> Result<f64, EvalError> {
    if polygon.sign_tau(e, x) == 0 {
        return Ok(0.0);
    }
    let edge = polygon.edge(e);
    let alpha = polygon.subtended_angle(e, x)?;
    let r1 = edge.a.distance(x);
    let r2 = edge.b.distance(x);
    Ok((alpha / 2.0).tan() * (1.0 / r1 + 1.0 / r2))
}

/// The interpolant denominator: signed sum of closed-form edge weights.
/// Positive for every interior point.
pub fn phi(polygon: &Polygon, x: Vec2) -> Result<f64, EvalError> {
    let mut sum = 0.0;
    for e in 0..polygon.edges().len() {
        let tau = polygon.sign_tau(e, x) as f64;
        if tau != 0.0 {
            sum += tau * edge_weight(polygon, e, x)?;
        }
    }
    Ok(sum)
}

/// Mean value coordinates of `x`: one weight per vertex, summing to 1.
/// Weighted vertex data reproduces the interpolant of piecewise-linear
/// boundary data.
pub fn mv_coordinates(polygon: &Polygon, x: Vec2) -> Result<Vec<f64>, EvalError> {
    let n = polygon.vertex_count();
    // Signed half-angle tangent per edge; zero in the sign dead-band, where
    // the edge drops out of both sums.
    let mut half_tan = vec![0.0; n];
    for e in 0..n {
        if polygon.sign_tau(e, x) != 0 {
            let beta = polygon.signed_subtended_angle(e, x)?;
            half_tan[e] = (beta / 2.0).tan();
        }
    }
    let mut weights = vec![0.0; n];
    let mut total = 0.0;
    for i in 0..n {
        let prev = (i + n - 1) % n;
        let r = polygon.vertex(i).distance(x);
        let w = (half_tan[prev] + half_tan[i]) / r;
        weights[i] = w;
        total += w;
    }
    for w in &mut weights {
        *w /= total;
    }
    Ok(weights)
}

/// Interpolates `f` at the strictly interior point `x` by per-edge adaptive
/// quadrature in the arc-angle variable.
pub fn interpolate_angular(
    polygon: &Polygon,
    f: &BoundaryFunction,
    x: Vec2,
    cfg: &QuadratureConfig,
) -> Result<EvalOutcome, EvalError> {
    require_interior(polygon, x)?;
    let denom = phi(polygon, x)?;

    let mut numerator = 0.0;
    let mut err = 0.0;
    let mut converged = true;
    for e in 0..polygon.edges().len() {
        if polygon.sign_tau(e, x) == 0 {
            continue;
        }
        let edge = polygon.edge(e);
        let beta = polygon.signed_subtended_angle(e, x)?;
        let theta0 = {
            let va = edge.a - x;
            va.y.atan2(va.x)
        };
        let h = polygon.signed_distance(e, x);
        let inv_len_sq = 1.0 / edge.dir.norm_squared();

        // Arc parameter s in [0, 1] sweeps the angle from the start vertex to
        // the end vertex; the ray through angle theta hits the supporting
        // line at distance r = h / (mu . n).
        let integrand = |s: f64| {
            let theta = theta0 + s * beta;
            let mu = Vec2::new(theta.cos(), theta.sin());
            let r = h / mu.dot(edge.normal);
            let y = x + mu * r;
            let t = ((y - edge.a).dot(edge.dir) * inv_len_sq).clamp(0.0, 1.0);
            f.eval_edge(polygon, e, t) / r
        };
        let part = integrate_adaptive(integrand, 0.0, 1.0, cfg)?;
        // tau * |beta| = beta, so the signed contribution carries beta.
        numerator += beta * part.value;
        err += beta.abs() * part.error_estimate;
        converged &= part.converged;
    }

    Ok(EvalOutcome {
        value: numerator / denom,
        phi: denom,
        quad_error: err / denom.abs(),
        converged,
    })
}

/// Interpolates `f` at the strictly interior point `x` by arclength
/// quadrature of the kernel `f(y) (y-x)·n / |y-x|^3` over each edge. The
/// denominator uses the closed form; the quadrature denominator is exposed
/// separately by [`phi_boundary_integral`].
pub fn interpolate_boundary_integral(
    polygon: &Polygon,
    f: &BoundaryFunction,
    x: Vec2,
    cfg: &QuadratureConfig,
) -> Result<EvalOutcome, EvalError> {
    require_interior(polygon, x)?;
    let denom = phi(polygon, x)?;

    let mut numerator = 0.0;
    let mut err = 0.0;
    let mut converged = true;
    for e in 0..polygon.edges().len() {
        if polygon.sign_tau(e, x) == 0 {
            continue;
        }
        let part = edge_kernel_integral(polygon, e, x, cfg, |t| f.eval_edge(polygon, e, t))?;
        numerator += part.value;
        err += part.error_estimate;
        converged &= part.converged;
    }

    Ok(EvalOutcome {
        value: numerator / denom,
        phi: denom,
        quad_error: err / denom.abs(),
        converged,
    })
}

/// The denominator evaluated by the boundary-integral route,
/// `sum_e int_e (y-x)·n / |y-x|^3 ds`. Cross-check against [`phi`].
pub fn phi_boundary_integral(
    polygon: &Polygon,
    x: Vec2,
    cfg: &QuadratureConfig,
) -> Result<QuadResult, EvalError> {
    require_interior(polygon, x)?;
    let mut total = QuadResult {
        value: 0.0,
        error_estimate: 0.0,
        converged: true,
    };
    for e in 0..polygon.edges().len() {
        if polygon.sign_tau(e, x) == 0 {
            continue;
        }
        let part = edge_kernel_integral(polygon, e, x, cfg, |_| 1.0)?;
        total.value += part.value;
        total.error_estimate += part.error_estimate;
        total.converged &= part.converged;
    }
    Ok(total)
}

/// `int_0^1 w(t) h len / r(t)^3 dt` over edge `e`, with panels forced down
/// to the scale of their distance from `x`: a panel is acceptable only once
/// its length is at most twice its distance from `x`, which keeps the
/// per-panel Gauss error geometric for the `h / r^3` kernel.
fn edge_kernel_integral<W: Fn(f64) -> f64>(
    polygon: &Polygon,
    e: usize,
    x: Vec2,
    cfg: &QuadratureConfig,
    weight: W,
) -> Result<QuadResult, EvalError> {
    let edge = polygon.edge(e);
    let h = polygon.signed_distance(e, x);
    let len = edge.length;

    let integrand = |t: f64| {
        let y = edge.point_at(t);
        let r = y.distance(x);
        weight(t) * h * len / (r * r * r)
    };
    let force_split = |t0: f64, t1: f64| {
        let seg_len = (t1 - t0) * len;
        let sub_a = edge.point_at(t0);
        let sub_b = edge.point_at(t1);
        seg_len > 2.0 * point_segment_distance(x, sub_a, sub_b)
    };
    Ok(integrate_adaptive_with(integrand, 0.0, 1.0, cfg, force_split)?)
}

fn point_segment_distance(p: Vec2, a: Vec2, b: Vec2) -> f64 {
    let d = b - a;
    let t = ((p - a).dot(d) / d.norm_squared()).clamp(0.0, 1.0);
    p.distance(a + d * t)
}

/// Evaluates the interpolant with boundary handling: interior points go to
/// the chosen backend, boundary points return the data value itself (the
/// interpolant's limit there), exterior points are refused.
pub fn evaluate(
    polygon: &Polygon,
    f: &BoundaryFunction,
    x: Vec2,
    cfg: &QuadratureConfig,
    backend: Backend,
) -> Result<EvalOutcome, EvalError> {
    match polygon.locate(x) {
        PointLocation::Interior => match backend {
            Backend::Angular => interpolate_angular(polygon, f, x, cfg),
            Backend::BoundaryIntegral => interpolate_boundary_integral(polygon, f, x, cfg),
        },
        PointLocation::OnEdge { edge, t } => Ok(boundary_outcome(f.eval_edge(polygon, edge, t))),
        PointLocation::AtVertex(i) => Ok(boundary_outcome(f.vertex_value(polygon, i))),
        PointLocation::Exterior => Err(EvalError::ExteriorPoint),
    }
}

fn boundary_outcome(value: f64) -> EvalOutcome {
    EvalOutcome {
        value,
        phi: f64::INFINITY,
        quad_error: 0.0,
        converged: true,
    }
}

fn require_interior(polygon: &Polygon, x: Vec2) -> Result<(), EvalError> {
    match polygon.locate(x) {
        PointLocation::Interior => {
            // The closed form divides by vertex distances; within the
            // geometric tolerance of a vertex nothing sensible remains.
            let eps = EPS_GEOM * polygon.diameter();
            for (i, v) in polygon.vertices().iter().enumerate() {
                if v.distance(x) <= eps {
                    return Err(GeometryError::CoincidentWithVertex(i).into());
                }
            }
            Ok(())
        }
        PointLocation::Exterior => Err(EvalError::ExteriorPoint),
        _ => Err(EvalError::OnBoundary),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::Builtin;
    use crate::fixtures;

    const SQRT_2: f64 = std::f64::consts::SQRT_2;

    fn square() -> Polygon {
        fixtures::unit_square()
    }

    #[test]
    fn edge_weight_at_square_center() {
        // Right isoceles configuration: angle pi/2, both endpoint distances
        // sqrt(1/2), so the closed form gives tan(pi/4) * 2 sqrt(2).
        let p = square();
        let w = edge_weight(&p, 0, Vec2::new(0.5, 0.5)).unwrap();
        assert!((w - 2.0 * SQRT_2).abs() < 1e-12, "got {w}");
    }

    #[test]
    fn edge_weight_on_supporting_line_is_zero() {
        let p = square();
        assert_eq!(edge_weight(&p, 0, Vec2::new(0.3, 0.0)).unwrap(), 0.0);
        assert_eq!(edge_weight(&p, 0, Vec2::new(5.0, 0.0)).unwrap(), 0.0);
    }

    #[test]
    fn edge_weight_blows_up_near_edge() {
        let p = square();
        let w = edge_weight(&p, 0, Vec2::new(0.5, 1e-3)).unwrap();
        assert!(w > 1e3, "got {w}");
    }

    #[test]
    fn phi_at_square_center() {
        let p = square();
        let value = phi(&p, Vec2::new(0.5, 0.5)).unwrap();
        assert!((value - 8.0 * SQRT_2).abs() < 1e-12, "got {value}");
    }

    #[test]
    fn phi_positive_inside_l_polygon() {
        let p = fixtures::l_polygon();
        for &pt in &[
            Vec2::new(0.5, 0.5),
            Vec2::new(1.5, 0.5),
            Vec2::new(0.5, 1.5),
            Vec2::new(0.9, 0.9),
            Vec2::new(1.05, 0.95),
        ] {
            let v = phi(&p, pt).unwrap();
            assert!(v > 0.0, "phi({pt}) = {v}");
        }
    }

    #[test]
    fn mv_coordinates_at_square_center() {
        let p = square();
        let lambda = mv_coordinates(&p, Vec2::new(0.5, 0.5)).unwrap();
        for &l in &lambda {
            assert!((l - 0.25).abs() < 1e-14);
        }
    }

    #[test]
    fn mv_coordinates_sum_to_one() {
        let p = fixtures::l_polygon();
        let lambda = mv_coordinates(&p, Vec2::new(0.7, 1.3)).unwrap();
        let sum: f64 = lambda.iter().sum();
        assert!((sum - 1.0).abs() < 1e-12);
    }

    #[test]
    fn mv_coordinates_near_edge_midpoint_limit() {
        // Approaching the bottom edge midpoint, the two bottom vertices
        // absorb all the weight.
        let p = square();
        let lambda = mv_coordinates(&p, Vec2::new(0.5, 1e-6)).unwrap();
        assert!((lambda[0] - 0.5).abs() < 1e-3, "lambda = {lambda:?}");
        assert!((lambda[1] - 0.5).abs() < 1e-3);
        assert!(lambda[2].abs() < 1e-3);
        assert!(lambda[3].abs() < 1e-3);
    }

    #[test]
    fn partition_of_unity_both_backends() {
        let p = fixtures::l_polygon();
        let one = BoundaryFunction::builtin(Builtin::One);
        let cfg = QuadratureConfig::default();
        for &pt in &[Vec2::new(0.3, 0.4), Vec2::new(1.7, 0.2), Vec2::new(0.2, 1.9)] {
            let a = interpolate_angular(&p, &one, pt, &cfg).unwrap();
            let b = interpolate_boundary_integral(&p, &one, pt, &cfg).unwrap();
            assert!((a.value - 1.0).abs() < 1e-10, "angular at {pt}: {}", a.value);
            assert!((b.value - 1.0).abs() < 1e-10, "boundary at {pt}: {}", b.value);
            assert!(a.phi > 0.0 && b.phi > 0.0);
        }
    }

    #[test]
    fn linear_data_is_reproduced() {
        let p = square();
        let f = BoundaryFunction::builtin(Builtin::Linear { a: 0.0, b: 1.0, c: 1.0 });
        let cfg = QuadratureConfig::default();
        let x = Vec2::new(0.3, 0.7);
        let out = interpolate_angular(&p, &f, x, &cfg).unwrap();
        assert!((out.value - 1.0).abs() < 1e-9, "got {}", out.value);
    }

    #[test]
    fn saddle_vanishes_at_square_center_by_symmetry() {
        // Swapping x and y maps the square to itself and negates the saddle,
        // so the interpolant must vanish at the fixed point.
        let p = square();
        let f = BoundaryFunction::builtin(Builtin::Saddle);
        let cfg = QuadratureConfig::default();
        let out = interpolate_angular(&p, &f, Vec2::new(0.5, 0.5), &cfg).unwrap();
        assert!(out.value.abs() < 1e-9, "got {}", out.value);
        let out_b =
            interpolate_boundary_integral(&p, &f, Vec2::new(0.5, 0.5), &cfg).unwrap();
        assert!(out_b.value.abs() < 1e-9, "got {}", out_b.value);
    }

    #[test]
    fn quadrature_denominator_matches_closed_form_at_center() {
        let p = square();
        let cfg = QuadratureConfig::default();
        let d = phi_boundary_integral(&p, Vec2::new(0.5, 0.5), &cfg).unwrap();
        assert!((d.value - 8.0 * SQRT_2).abs() < 1e-9, "got {}", d.value);
    }

    #[test]
    fn backends_agree_on_nonconvex_polygon() {
        let p = fixtures::l_polygon();
        let f = BoundaryFunction::builtin(Builtin::Saddle);
        let cfg = QuadratureConfig::default();
        let x = Vec2::new(0.5, 0.5);
        let a = interpolate_angular(&p, &f, x, &cfg).unwrap();
        let b = interpolate_boundary_integral(&p, &f, x, &cfg).unwrap();
        let tol = 10.0 * (a.quad_error + b.quad_error).max(1e-12);
        assert!((a.value - b.value).abs() <= tol, "{} vs {}", a.value, b.value);
    }

    #[test]
    fn evaluate_dispatches_boundary_and_exterior() {
        let p = square();
        let f = BoundaryFunction::builtin(Builtin::Saddle);
        let cfg = QuadratureConfig::default();

        let on_edge = evaluate(&p, &f, Vec2::new(0.5, 0.0), &cfg, Backend::Angular).unwrap();
        assert_eq!(on_edge.value, 0.25);
        assert!(on_edge.phi.is_infinite());

        let at_vertex = evaluate(&p, &f, Vec2::new(1.0, 1.0), &cfg, Backend::Angular).unwrap();
        assert_eq!(at_vertex.value, 0.0);

        let outside = evaluate(&p, &f, Vec2::new(2.0, 2.0), &cfg, Backend::Angular);
        assert!(matches!(outside, Err(EvalError::ExteriorPoint)));
    }

    #[test]
    fn interpolate_rejects_boundary_and_exterior_points() {
        let p = square();
        let f = BoundaryFunction::builtin(Builtin::One);
        let cfg = QuadratureConfig::default();
        assert!(matches!(
            interpolate_angular(&p, &f, Vec2::new(0.5, 0.0), &cfg),
            Err(EvalError::OnBoundary)
        ));
        assert!(matches!(
            interpolate_boundary_integral(&p, &f, Vec2::new(3.0, 3.0), &cfg),
            Err(EvalError::ExteriorPoint)
        ));
    }

    #[test]
    fn coordinates_match_transfinite_on_pwl_data() {
        let p = fixtures::l_polygon();
        let values = vec![0.4, -1.2, 2.0, 0.3, -0.7, 1.1];
        let f = BoundaryFunction::piecewise_linear(&p, values.clone()).unwrap();
        let cfg = QuadratureConfig::default();
        let x = Vec2::new(0.6, 1.1);
        let lambda = mv_coordinates(&p, x).unwrap();
        let by_coords: f64 = lambda.iter().zip(&values).map(|(l, v)| l * v).sum();
        let by_transfinite = interpolate_angular(&p, &f, x, &cfg).unwrap().value;
        assert!(
            (by_coords - by_transfinite).abs() < 1e-8,
            "{by_coords} vs {by_transfinite}"
        );
    }
}
