use mvfield::fixtures;
use mvfield::geometry::Vec2;
use mvfield::quadrature::{integrate_adaptive, QuadratureConfig};
use std::cell::Cell;

fn main() {
    let p = fixtures::l_polygon();
    let cfg = QuadratureConfig::default();
    let x = Vec2::new(0.9, 0.9);

    // Reproduce the angular integrand for each edge by hand, with a counter.
    for e in 0..p.edges().len() {
        if p.sign_tau(e, x) == 0 {
            println!("edge {e}: tau=0 skipped");
            continue;
        }
        let edge = p.edge(e);
        let beta = p.signed_subtended_angle(e, x).unwrap();
        let va = edge.a - x;
        let theta0 = va.y.atan2(va.x);
        let h = p.signed_distance(e, x);
        let inv_len_sq = 1.0 / edge.dir.norm_squared();
        let count = Cell::new(0usize);
        let integrand = |s: f64| {
            count.set(count.get() + 1);
            let theta = theta0 + s * beta;
            let mu = Vec2::new(theta.cos(), theta.sin());
            let r = h / mu.dot(edge.normal);
            let y = x + mu * r;
            let t = ((y - edge.a).dot(edge.dir) * inv_len_sq).clamp(0.0, 1.0);
            let fy = {
                let pt = edge.point_at(t);
                ((9.0 * (pt.x - pt.y)).tanh() + 1.0) / 9.0
            };
            fy / r
        };
        let r = integrate_adaptive(integrand, 0.0, 1.0, &cfg).unwrap();
        println!(
            "edge {e}: beta {beta:.3}, value {:.6e}, err {:.2e}, conv {}, evals {}",
            r.value,
            r.error_estimate,
            r.converged,
            count.get()
        );
    }
}
