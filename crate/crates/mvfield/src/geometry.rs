//! Polygon representation, validation and pointwise geometric queries.
//!
//! A [`Polygon`] is a validated simple closed polygon with counterclockwise
//! orientation and cached per-edge data (length, unit outward normal).
//! The queries here — signed distance to an edge line, its sign, the angle an
//! edge subtends at a point, point location and ray/edge intersection — are
//! the building blocks of the mean value interpolant.
//!
//! All predicates are tolerance-based, with tolerances relative to the
//! polygon diameter. Exact arithmetic is out of scope.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Relative tolerance for degeneracy tests (distinct vertices, vertex
/// coincidence in angle queries).
pub const EPS_GEOM: f64 = 1e-12;

/// Relative dead-band for the sign of the distance to an edge line. Tighter
/// than [`EPS_SNAP`] so that interior evaluation near an edge still sees a
/// nonzero sign.
pub const EPS_TAU: f64 = 1e-14;

/// Relative tolerance for snapping query points onto edges and vertices.
pub const EPS_SNAP: f64 = 1e-9;

/// Angular tolerance (radians) when checking that a ray direction lies in the
/// arc subtended by an edge.
pub const EPS_ARC: f64 = 1e-9;

/// 2D point / vector with `f64` coordinates.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn dot(self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// 2D cross product (z-component of the 3D cross product).
    pub fn cross(self, other: Vec2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm_squared(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm_squared().sqrt()
    }

    pub fn distance(self, other: Vec2) -> f64 {
        (self - other).norm()
    }

    /// Unit vector with the same direction. Not meaningful for zero vectors.
    pub fn normalized(self) -> Vec2 {
        self / self.norm()
    }

    /// Counterclockwise rotation by `angle` radians.
    pub fn rotated(self, angle: f64) -> Vec2 {
        let (s, c) = angle.sin_cos();
        Vec2::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    fn mul(self, rhs: f64) -> Vec2 {
        Vec2::new(self.x * rhs, self.y * rhs)
    }
}

impl Div<f64> for Vec2 {
    type Output = Vec2;
    fn div(self, rhs: f64) -> Vec2 {
        Vec2::new(self.x / rhs, self.y / rhs)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Errors from polygon construction and geometric queries.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeometryError {
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("edge {0} is degenerate (endpoints closer than tolerance)")]
    DegenerateEdge(usize),
    #[error("polygon is not simple: edges {0} and {1} intersect")]
    SelfIntersection(usize, usize),
    #[error("coordinate is not finite at vertex {0}")]
    NonFiniteCoordinate(usize),
    #[error("query point coincides with vertex {0}")]
    CoincidentWithVertex(usize),
    #[error("ray direction misses the edge")]
    RayMissesEdge,
}

/// Directed polygon edge with cached length and unit outward normal.
#[derive(Clone, Copy, Debug)]
pub struct Edge {
    /// Start vertex.
    pub a: Vec2,
    /// End vertex.
    pub b: Vec2,
    /// `b - a`.
    pub dir: Vec2,
    pub length: f64,
    /// Unit outward normal; `(y - x) · normal > 0` for `x` strictly inside
    /// the polygon and `y` on the edge.
    pub normal: Vec2,
}

impl Edge {
    /// Point at parameter `t` (arclength-linear, `t = 0` at `a`, `t = 1` at `b`).
    pub fn point_at(&self, t: f64) -> Vec2 {
        self.a + self.dir * t
    }

    /// Parameter of the orthogonal projection of `p` onto the supporting line.
    pub fn project(&self, p: Vec2) -> f64 {
        (p - self.a).dot(self.dir) / self.dir.norm_squared()
    }

    /// Distance from `p` to the closed segment.
    pub fn distance_to(&self, p: Vec2) -> f64 {
        let t = self.project(p).clamp(0.0, 1.0);
        p.distance(self.point_at(t))
    }
}

/// Classification of a point relative to a polygon, after snapping.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PointLocation {
    Interior,
    Exterior,
    /// On the open edge `edge` at parameter `t`, with `0 < t < 1`.
    OnEdge { edge: usize, t: f64 },
    AtVertex(usize),
}

/// Validated simple closed polygon, counterclockwise, with cached edges.
#[derive(Clone, Debug)]
pub struct Polygon {
    vertices: Vec<Vec2>,
    edges: Vec<Edge>,
    diameter: f64,
    area: f64,
    bbox: (Vec2, Vec2),
}

/// JSON schema for polygon files: `{"vertices": [[x, y], ...]}`.
#[derive(Serialize, Deserialize)]
struct PolygonFile {
    vertices: Vec<[f64; 2]>,
}

impl Polygon {
    /// Builds a polygon from an ordered vertex list and validates it.
    ///
    /// Clockwise input is reversed rather than rejected. Fails when fewer
    /// than 3 vertices are given, consecutive vertices coincide, or the
    /// boundary self-intersects.
    pub fn new(points: Vec<Vec2>) -> Result<Self, GeometryError> {
        if points.len() < 3 {
            return Err(GeometryError::TooFewVertices(points.len()));
        }
        for (i, p) in points.iter().enumerate() {
            if !p.is_finite() {
                return Err(GeometryError::NonFiniteCoordinate(i));
            }
        }

        let mut vertices = points;
        let diameter = max_pairwise_distance(&vertices);
        if diameter <= 0.0 {
            return Err(GeometryError::DegenerateEdge(0));
        }
        let eps = EPS_GEOM * diameter;

        let n = vertices.len();
        for i in 0..n {
            let j = (i + 1) % n;
            if vertices[i].distance(vertices[j]) <= eps {
                return Err(GeometryError::DegenerateEdge(i));
            }
        }

        // Enforce counterclockwise orientation.
        if signed_area(&vertices) < 0.0 {
            vertices.reverse();
        }

        check_simple(&vertices, eps)?;

        let edges = (0..n)
            .map(|i| {
                let a = vertices[i];
                let b = vertices[(i + 1) % n];
                let dir = b - a;
                let length = dir.norm();
                // Right-hand normal of the edge direction points outward for
                // a counterclockwise polygon.
                let normal = Vec2::new(dir.y, -dir.x) / length;
                Edge {
                    a,
                    b,
                    dir,
                    length,
                    normal,
                }
            })
            .collect();

        let mut lo = vertices[0];
        let mut hi = vertices[0];
        for v in &vertices {
            lo.x = lo.x.min(v.x);
            lo.y = lo.y.min(v.y);
            hi.x = hi.x.max(v.x);
            hi.y = hi.y.max(v.y);
        }

        let area = signed_area(&vertices);
        Ok(Self {
            vertices,
            edges,
            diameter,
            area,
            bbox: (lo, hi),
        })
    }

    /// Convenience constructor from coordinate pairs.
    pub fn from_coords(coords: &[[f64; 2]]) -> Result<Self, GeometryError> {
        Self::new(coords.iter().map(|c| Vec2::new(c[0], c[1])).collect())
    }

    /// Parses the polygon JSON file format `{"vertices": [[x, y], ...]}`.
    pub fn from_json(text: &str) -> Result<Self, PolygonJsonError> {
        let file: PolygonFile = serde_json::from_str(text)?;
        Ok(Self::from_coords(&file.vertices)?)
    }

    /// Serializes to the polygon JSON file format.
    pub fn to_json(&self) -> String {
        let file = PolygonFile {
            vertices: self.vertices.iter().map(|v| [v.x, v.y]).collect(),
        };
        serde_json::to_string(&file).expect("polygon serialization cannot fail")
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex(&self, i: usize) -> Vec2 {
        self.vertices[i]
    }

    pub fn edge(&self, i: usize) -> &Edge {
        &self.edges[i]
    }

    /// Largest pairwise vertex distance; the length scale for all relative
    /// tolerances.
    pub fn diameter(&self) -> f64 {
        self.diameter
    }

    /// Enclosed area; positive after validation.
    pub fn area(&self) -> f64 {
        self.area
    }

    /// Axis-aligned bounding box `(min, max)`.
    pub fn bounding_box(&self) -> (Vec2, Vec2) {
        self.bbox
    }

    /// Signed distance from `x` to the supporting line of edge `e`:
    /// `(y - x) · n_e` for any `y` on the line. Positive on the side the
    /// polygon interior touches.
    pub fn signed_distance(&self, e: usize, x: Vec2) -> f64 {
        let edge = &self.edges[e];
        (edge.a - x).dot(edge.normal)
    }

    /// Sign of [`Self::signed_distance`] with a dead-band of
    /// `EPS_TAU * diameter` mapped to zero.
    pub fn sign_tau(&self, e: usize, x: Vec2) -> i32 {
        let h = self.signed_distance(e, x);
        if h.abs() <= EPS_TAU * self.diameter {
            0
        } else if h > 0.0 {
            1
        } else {
            -1
        }
    }

    /// Angle in `[0, π]` subtended at `x` by the endpoints of edge `e`,
    /// computed from the two-argument arctangent of cross and dot products.
    /// Approaches π as `x` approaches an interior point of the edge and is 0
    /// for points collinear with the edge but outside it.
    pub fn subtended_angle(&self, e: usize, x: Vec2) -> Result<f64, GeometryError> {
        let edge = &self.edges[e];
        let va = edge.a - x;
        let vb = edge.b - x;
        let eps = EPS_GEOM * self.diameter;
        if va.norm() <= eps {
            return Err(GeometryError::CoincidentWithVertex(e));
        }
        if vb.norm() <= eps {
            return Err(GeometryError::CoincidentWithVertex((e + 1) % self.vertices.len()));
        }
        Ok(va.cross(vb).abs().atan2(va.dot(vb)))
    }

    /// Signed angle in `(-π, π)` swept at `x` from the start to the end of
    /// edge `e`. Positive exactly when `x` lies on the positive side of the
    /// edge line (matching the sign of the distance), so
    /// `signed_angle == tau * subtended_angle` away from the dead-band.
    pub fn signed_subtended_angle(&self, e: usize, x: Vec2) -> Result<f64, GeometryError> {
        let edge = &self.edges[e];
        let va = edge.a - x;
        let vb = edge.b - x;
        let eps = EPS_GEOM * self.diameter;
        if va.norm() <= eps {
            return Err(GeometryError::CoincidentWithVertex(e));
        }
        if vb.norm() <= eps {
            return Err(GeometryError::CoincidentWithVertex((e + 1) % self.vertices.len()));
        }
        Ok(va.cross(vb).atan2(va.dot(vb)))
    }

    /// Classifies `x` by winding number, snapping points within
    /// `EPS_SNAP * diameter` of the boundary onto vertices or edges.
    pub fn locate(&self, x: Vec2) -> PointLocation {
        let snap = EPS_SNAP * self.diameter;

        for (i, v) in self.vertices.iter().enumerate() {
            if v.distance(x) <= snap {
                return PointLocation::AtVertex(i);
            }
        }
        for (i, edge) in self.edges.iter().enumerate() {
            if edge.distance_to(x) <= snap {
                // Vertex snapping already ruled out the endpoints, so the
                // clamped parameter is strictly inside (0, 1).
                let t = edge.project(x).clamp(0.0, 1.0);
                return PointLocation::OnEdge { edge: i, t };
            }
        }

        if self.winding_number(x) != 0 {
            PointLocation::Interior
        } else {
            PointLocation::Exterior
        }
    }

    fn winding_number(&self, x: Vec2) -> i32 {
        let mut winding = 0i32;
        for edge in &self.edges {
            if edge.a.y <= x.y {
                if edge.b.y > x.y && (edge.b - edge.a).cross(x - edge.a) > 0.0 {
                    winding += 1;
                }
            } else if edge.b.y <= x.y && (edge.b - edge.a).cross(x - edge.a) < 0.0 {
                winding -= 1;
            }
        }
        winding
    }

    /// Intersects the ray from `x` in direction `mu` (unit vector) with edge
    /// `e`. Requires `x` off the supporting line; the returned point lies on
    /// the closed segment. Directions outside the subtended arc by more than
    /// [`EPS_ARC`] are rejected.
    pub fn arc_point(&self, e: usize, x: Vec2, mu: Vec2) -> Result<Vec2, GeometryError> {
        let edge = &self.edges[e];
        let h = self.signed_distance(e, x);
        let along = mu.dot(edge.normal);
        // r solves (x + r mu - a) · n = 0; a hit in front of x needs r > 0.
        let r = h / along;
        if !r.is_finite() || r <= 0.0 {
            return Err(GeometryError::RayMissesEdge);
        }
        let hit = x + mu * r;
        let t = edge.project(hit).clamp(0.0, 1.0);
        let y = edge.point_at(t);
        // Clamping may have moved the point; accept only if the direction to
        // the clamped point still agrees with mu to angular tolerance.
        let dir = (y - x).normalized();
        let deviation = dir.cross(mu).abs().atan2(dir.dot(mu));
        if deviation > EPS_ARC {
            return Err(GeometryError::RayMissesEdge);
        }
        Ok(y)
    }
}

/// Error when reading a polygon JSON file.
#[derive(Debug, thiserror::Error)]
pub enum PolygonJsonError {
    #[error("invalid polygon JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

fn signed_area(vertices: &[Vec2]) -> f64 {
    let n = vertices.len();
    let mut sum = 0.0;
    for i in 0..n {
        let j = (i + 1) % n;
        sum += vertices[i].cross(vertices[j]);
    }
    sum / 2.0
}

fn max_pairwise_distance(vertices: &[Vec2]) -> f64 {
    let mut best: f64 = 0.0;
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            best = best.max(vertices[i].distance(vertices[j]));
        }
    }
    best
}

/// Simplicity check: no two non-adjacent edges intersect, and adjacent edges
/// meet only at the shared vertex. O(n²) segment pairs; polygons here are
/// small.
fn check_simple(vertices: &[Vec2], eps: f64) -> Result<(), GeometryError> {
    let n = vertices.len();
    for i in 0..n {
        let (a1, a2) = (vertices[i], vertices[(i + 1) % n]);
        for j in i + 1..n {
            let (b1, b2) = (vertices[j], vertices[(j + 1) % n]);
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if adjacent {
                // The shared vertex is a legitimate contact; anything more
                // (a collinear fold-back) is not.
                if spike_at_shared_vertex(a1, a2, b1, b2, eps) {
                    return Err(GeometryError::SelfIntersection(i, j));
                }
            } else if segments_intersect(a1, a2, b1, b2, eps) {
                return Err(GeometryError::SelfIntersection(i, j));
            }
        }
    }
    Ok(())
}

/// Adjacent edges [u,w] and [w,z] fold back onto each other when the turn at
/// w is a collinear spike.
fn spike_at_shared_vertex(a1: Vec2, a2: Vec2, b1: Vec2, b2: Vec2, eps: f64) -> bool {
    // Determine the shared endpoint; edges are passed in polygon order so it
    // is a2 == b1 or (wrap-around) b2 == a1.
    let (u, w, z) = if a2.distance(b1) <= eps {
        (a1, a2, b2)
    } else {
        (b1, b2, a2)
    };
    let back = u - w;
    let fwd = z - w;
    back.cross(fwd).abs() <= eps * back.norm().max(fwd.norm()) && back.dot(fwd) > 0.0
}

/// Closed-segment intersection test with tolerance: touching within `eps`
/// counts as intersecting.
fn segments_intersect(a1: Vec2, a2: Vec2, b1: Vec2, b2: Vec2, eps: f64) -> bool {
    let d1 = a2 - a1;
    let d2 = b2 - b1;
    let denom = d1.cross(d2);
    let r = b1 - a1;

    if denom.abs() > eps * d1.norm() * d2.norm() {
        let t = r.cross(d2) / denom;
        let u = r.cross(d1) / denom;
        let tol_t = eps / d1.norm();
        let tol_u = eps / d2.norm();
        return (-tol_t..=1.0 + tol_t).contains(&t) && (-tol_u..=1.0 + tol_u).contains(&u);
    }

    // Near-parallel: possible overlap only if collinear.
    if r.cross(d1).abs() > eps * d1.norm().max(r.norm()) {
        return false;
    }
    let len2 = d1.norm_squared();
    let t0 = r.dot(d1) / len2;
    let t1 = (b2 - a1).dot(d1) / len2;
    let (lo, hi) = if t0 <= t1 { (t0, t1) } else { (t1, t0) };
    let tol = eps / d1.norm();
    lo <= 1.0 + tol && hi >= -tol
}
