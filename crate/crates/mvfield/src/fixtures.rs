//! Canonical test polygons and random generators.
//!
//! These shapes back the self-test command, the verification suite and the
//! benchmarks. The non-convex polygon is a fixed representative shape used
//! throughout as the standard hard case.

use crate::geometry::{PointLocation, Polygon, Vec2};
use rand::Rng;

/// Unit square (0,0)-(1,0)-(1,1)-(0,1).
pub fn unit_square() -> Polygon {
    Polygon::from_coords(&[[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])
        .expect("unit square is valid")
}

/// L-shaped hexagon with one concave vertex at (1,1) (index 3).
pub fn l_polygon() -> Polygon {
    Polygon::from_coords(&[
        [0.0, 0.0],
        [2.0, 0.0],
        [2.0, 1.0],
        [1.0, 1.0],
        [1.0, 2.0],
        [0.0, 2.0],
    ])
    .expect("L polygon is valid")
}

/// The standard non-convex test polygon: an E-like outline with a notch on
/// the right flank and a dent on the left, two concave vertices among its
/// eleven.
pub fn canonical_nonconvex() -> Polygon {
    Polygon::from_coords(&[
        [0.0, 0.0],
        [4.0, 0.0],
        [4.0, 2.0],
        [2.5, 2.0],
        [2.5, 3.5],
        [4.0, 3.5],
        [4.0, 5.0],
        [0.0, 5.0],
        [0.0, 3.0],
        [1.0, 2.5],
        [0.0, 2.0],
    ])
    .expect("canonical polygon is valid")
}

/// Twelve-gon on the unit circle with one vertex pulled inward, creating a
/// concave notch.
pub fn notched_twelve_gon() -> Polygon {
    let pts: Vec<Vec2> = (0..12)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / 12.0;
            let r = if k == 0 { 0.4 } else { 1.0 };
            Vec2::new(r * theta.cos(), r * theta.sin())
        })
        .collect();
    Polygon::new(pts).expect("notched 12-gon is valid")
}

/// The three fixed test polygons: square, L, and the canonical non-convex
/// shape.
pub fn standard_suite() -> Vec<Polygon> {
    vec![unit_square(), l_polygon(), canonical_nonconvex()]
}

/// Random star-shaped polygon around the origin: jittered sorted angles and
/// random radii, then a random rigid motion plus scale. Star-shaped implies
/// simple, so construction cannot fail.
pub fn random_star_polygon<R: Rng>(rng: &mut R, n: usize) -> Polygon {
    let rot = rng.gen_range(0.0..std::f64::consts::TAU);
    let scale = rng.gen_range(0.5..3.0);
    let shift = Vec2::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
    let pts: Vec<Vec2> = (0..n)
        .map(|i| {
            let theta =
                std::f64::consts::TAU * (i as f64 + 0.6 * rng.gen::<f64>()) / n as f64;
            let r = rng.gen_range(0.4..1.2) * scale;
            Vec2::new(r * theta.cos(), r * theta.sin()).rotated(rot) + shift
        })
        .collect();
    Polygon::new(pts).expect("star polygon is simple")
}

/// Random convex polygon: points on a common circle, random rigid motion.
pub fn random_convex_polygon<R: Rng>(rng: &mut R, n: usize) -> Polygon {
    let rot = rng.gen_range(0.0..std::f64::consts::TAU);
    let scale = rng.gen_range(0.5..2.0);
    let shift = Vec2::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
    let mut angles: Vec<f64> = (0..n)
        .map(|i| std::f64::consts::TAU * (i as f64 + 0.8 * rng.gen::<f64>()) / n as f64)
        .collect();
    angles.sort_by(f64::total_cmp);
    let pts = angles
        .iter()
        .map(|&t| Vec2::new(scale * t.cos(), scale * t.sin()).rotated(rot) + shift)
        .collect();
    Polygon::new(pts).expect("points on a circle are in convex position")
}

/// Uniform rejection sample of a strictly interior point, optionally at
/// least `min_boundary_dist` (absolute) away from the boundary.
pub fn random_interior_point<R: Rng>(
    rng: &mut R,
    polygon: &Polygon,
    min_boundary_dist: f64,
) -> Vec2 {
    let (lo, hi) = polygon.bounding_box();
    loop {
        let p = Vec2::new(rng.gen_range(lo.x..hi.x), rng.gen_range(lo.y..hi.y));
        if !matches!(polygon.locate(p), PointLocation::Interior) {
            continue;
        }
        if min_boundary_dist > 0.0 {
            let d = polygon
                .edges()
                .iter()
                .map(|e| e.distance_to(p))
                .fold(f64::INFINITY, f64::min);
            if d < min_boundary_dist {
                continue;
            }
        }
        return p;
    }
}

/// Indices of concave (reflex) vertices: interior angle above pi.
pub fn concave_vertices(polygon: &Polygon) -> Vec<usize> {
    let n = polygon.vertex_count();
    (0..n)
        .filter(|&i| {
            let prev = polygon.vertex((i + n - 1) % n);
            let v = polygon.vertex(i);
            let next = polygon.vertex((i + 1) % n);
            // Right turn at a CCW polygon vertex means a reflex corner.
            (v - prev).cross(next - v) < 0.0
        })
        .collect()
}
