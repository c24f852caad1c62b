//! One-dimensional Gauss–Legendre quadrature with adaptive bisection.
//!
//! Nodes and weights are computed once per order by Newton iteration on the
//! Legendre polynomials and cached process-wide. The adaptive driver bisects
//! panels until the coarse/fine difference meets the tolerance budget, with
//! an optional caller-supplied predicate that forces refinement (used by the
//! boundary-integral kernel, whose variation scale is geometric).

use std::sync::OnceLock;

/// Smallest supported rule order.
pub const MIN_ORDER: usize = 2;
/// Largest supported rule order.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum QuadratureError {
    #[error("unsupported Gauss-Legendre order {0} (supported: {MIN_ORDER}..={MAX_ORDER})")]
    UnsupportedOrder(usize),
    #[error("integrand returned a non-finite value at t = {0} ")]
    NonFiniteIntegrand(f64),
    #[error("invalid integration interval [{0}, {1}]")]
    InvalidInterval(f64, f64),
    #[error("invalid quadrature configuration: {0}")]
    InvalidConfig(&'static str),
}

/// Panel order, tolerance and subdivision policy for adaptive integration.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureConfig {
    /// Gauss-Legendre node count per panel.
    pub order: usize,
    /// Relative tolerance for the aggregate error estimate.
    pub tol_rel: f64,
    /// Maximum bisection depth.
    pub max_depth: u32,
    /// Minimum panel length as a fraction of the whole interval.
    pub min_panel: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            order: 16,
            tol_rel: 1e-10,
            max_depth: 40,
            min_panel: 1e-15,
        }
    }
}

impl QuadratureConfig {
    pub fn new(
        order: usize,
        tol_rel: f64,
        max_depth: u32,
        min_panel: f64,
    ) -> Result<Self, QuadratureError> {
        let cfg = Self {
            order,
            tol_rel,
            max_depth,
            min_panel,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), QuadratureError> {
        if !(MIN_ORDER..=MAX_ORDER).contains(&self.order) {
            return Err(QuadratureError::UnsupportedOrder(self.order));
        }
        if !(self.tol_rel > 0.0) {
            return Err(QuadratureError::InvalidConfig("tol_rel must be positive"));
        }
        if !(1..=60).contains(&self.max_depth) {
            return Err(QuadratureError::InvalidConfig("max_depth must be in 1..=60"));
        }
        if !(self.min_panel > 0.0) {
            return Err(QuadratureError::InvalidConfig("min_panel must be positive"));
        }
        Ok(())
    }
}

/// Value and error estimate of an adaptive integration.
#[derive(Debug, Clone, Copy, Default)]
pub struct QuadResult {
    pub value: f64,
    /// Sum over accepted panels of |fine - coarse|.
    pub error_estimate: f64,
    /// False when some panel hit the depth or panel-size limit before its
    /// error share converged.
    pub converged: bool,
}

/// Gauss-Legendre nodes and weights on [-1, 1].
#[derive(Debug, Clone)]
pub struct GaussRule {
    order: usize,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussRule {
    fn compute(order: usize) -> Self {
        let n = order;
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];

        // Newton iteration from the Chebyshev-like initial guess; only the
        // lower half is computed, the rest follows by symmetry.
        for i in 0..n.div_ceil(2) {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let step = p / d;
                x -= step;
                if step.abs() <= 1e-16 * x.abs().max(1.0) {
                    let (_, d) = legendre_with_derivative(n, x);
                    dp = d;
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            // Initial guesses descend from +1, so index i is the i-th largest.
            nodes[n - 1 - i] = x;
            weights[n - 1 - i] = w;
            nodes[i] = -x;
            weights[i] = w;
        }
        if n % 2 == 1 {
            let mid = n / 2;
            nodes[mid] = 0.0;
            let (_, d) = legendre_with_derivative(n, 0.0);
            weights[mid] = 2.0 / (d * d);
        }

        // Rescale so the weights sum to exactly 2 in accumulation order;
        // constants then integrate without rounding residue. The final
        // weight absorbs the (ulp-level) closure defect: with the prefix p
        // near 2, both 2 - p and p + (2 - p) are exact.
        let sum: f64 = weights.iter().sum();
        for w in &mut weights {
            *w *= 2.0 / sum;
        }
        let prefix: f64 = weights[..n - 1].iter().sum();
        weights[n - 1] = 2.0 - prefix;

        Self {
            order,
            nodes,
            weights,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Nodes in ascending order on [-1, 1].
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Single-panel integration of `f` over [a, b].
    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut sum = 0.0;
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            sum += w * f(mid + half * x);
        }
        sum * half
    }

    /// Single-panel integration returning both the signed integral and the
    /// integral of |f|; errors out on non-finite integrand values.
    fn panel<F: FnMut(f64) -> f64>(
        &self,
        a: f64,
        b: f64,
        f: &mut F,
    ) -> Result<(f64, f64), QuadratureError> {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut sum = 0.0;
        let mut mass = 0.0;
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            let t = mid + half * x;
            let v = f(t);
            if !v.is_finite() {
                return Err(QuadratureError::NonFiniteIntegrand(t));
            }
            sum += w * v;
            mass += w * v.abs();
        }
        Ok((sum * half, mass * half))
    }
}

/// Returns the cached Gauss-Legendre rule of the given order.
pub fn gauss_legendre(order: usize) -> Result<&'static GaussRule, QuadratureError> {
    static CACHE: OnceLock<Vec<OnceLock<GaussRule>>> = OnceLock::new();
    if !(MIN_ORDER..=MAX_ORDER).contains(&order) {
        return Err(QuadratureError::UnsupportedOrder(order));
    }
    let cache = CACHE.get_or_init(|| (MIN_ORDER..=MAX_ORDER).map(|_| OnceLock::new()).collect());
    Ok(cache[order - MIN_ORDER].get_or_init(|| GaussRule::compute(order)))
}

/// Adaptive integration of `f` over [a, b].
pub fn integrate_adaptive<F: FnMut(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    cfg: &QuadratureConfig,
) -> Result<QuadResult, QuadratureError> {
    integrate_adaptive_with(f, a, b, cfg, |_, _| false)
}

/// Adaptive integration with an extra refinement predicate: a panel for
/// which `force_split(lo, hi)` is true is bisected regardless of its error
/// estimate (until depth or panel-size limits apply).
pub fn integrate_adaptive_with<F, P>(
    mut f: F,
    a: f64,
    b: f64,
    cfg: &QuadratureConfig,
    force_split: P,
) -> Result<QuadResult, QuadratureError>
where
    F: FnMut(f64) -> f64,
    P: Fn(f64, f64) -> bool,
{
    cfg.validate()?;
    if !(a.is_finite() && b.is_finite() && a < b) {
        return Err(QuadratureError::InvalidInterval(a, b));
    }
    let rule = gauss_legendre(cfg.order)?;

    let (coarse, mass) = rule.panel(a, b, &mut f)?;
    // Tolerance budget relative to the integrand's L1 mass rather than the
    // (possibly cancelling) signed value, split per panel by length share.
    let scale = coarse.abs().max(mass);
    let budget = cfg.tol_rel * scale;
    let min_len = cfg.min_panel * (b - a);

    let mut state = Recursion {
        f: &mut f,
        rule,
        force_split: &force_split,
        max_depth: cfg.max_depth,
        min_len,
        // Panel differences at the rounding level cannot be refined away;
        // without this floor the halving budget forces full-depth
        // subdivision of entire near-singular regions.
        err_floor: 1e-15 * scale,
    };
    state.split(a, b, coarse, budget, 0)
}

struct Recursion<'a, F, P> {
    f: &'a mut F,
    rule: &'static GaussRule,
    force_split: &'a P,
    max_depth: u32,
    min_len: f64,
    err_floor: f64,
}

impl<F, P> Recursion<'_, F, P>
where
    F: FnMut(f64) -> f64,
    P: Fn(f64, f64) -> bool,
{
    fn split(
        &mut self,
        a: f64,
        b: f64,
        coarse: f64,
        budget: f64,
        depth: u32,
    ) -> Result<QuadResult, QuadratureError> {
        let mid = 0.5 * (a + b);
        let (left, _) = self.rule.panel(a, mid, self.f)?;
        let (right, _) = self.rule.panel(mid, b, self.f)?;
        let fine = left + right;
        let err = (fine - coarse).abs();

        let acceptable = err <= budget.max(self.err_floor);
        let exhausted =
            depth >= self.max_depth || (b - a) <= self.min_len || mid <= a || mid >= b;
        let wants_refinement = !acceptable || (self.force_split)(a, b);

        if !wants_refinement || exhausted {
            return Ok(QuadResult {
                value: fine,
                error_estimate: err,
                converged: acceptable,
            });
        }

        let l = self.split(a, mid, left, 0.5 * budget, depth + 1)?;
        let r = self.split(mid, b, right, 0.5 * budget, depth + 1)?;
        Ok(QuadResult {
            value: l.value + r.value,
            error_estimate: l.error_estimate + r.error_estimate,
            converged: l.converged && r.converged,
        })
    }
}

/// Legendre polynomial P_n and its derivative at `x` by the three-term
/// recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0;
    let mut p = x;
    for k in 1..n {
        let kf = k as f64;
        let p_next = ((2.0 * kf + 1.0) * x * p - kf * p_prev) / (kf + 1.0);
        p_prev = p;
        p = p_next;
    }
    let derivative = n as f64 * (x * p - p_prev) / (x * x - 1.0);
    (p, derivative)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn order_two_rule() {
        let rule = gauss_legendre(2).unwrap();
        let inv_sqrt3 = 1.0 / 3f64.sqrt();
        assert!((rule.nodes()[0] + inv_sqrt3).abs() < 1e-15);
        assert!((rule.nodes()[1] - inv_sqrt3).abs() < 1e-15);
        assert!((rule.weights()[0] - 1.0).abs() < 1e-15);
        assert!((rule.weights()[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn order_three_rule() {
        let rule = gauss_legendre(3).unwrap();
        let node = (3.0f64 / 5.0).sqrt();
        assert!((rule.nodes()[0] + node).abs() < 1e-15);
        assert!(rule.nodes()[1].abs() < 1e-15);
        assert!((rule.nodes()[2] - node).abs() < 1e-15);
        assert!((rule.weights()[0] - 5.0 / 9.0).abs() < 1e-15);
        assert!((rule.weights()[1] - 8.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn quartic_is_exact_at_order_three() {
        let rule = gauss_legendre(3).unwrap();
        let integral = rule.integrate(-1.0, 1.0, |x| x.powi(4));
        assert!((integral - 0.4).abs() < 1e-14);
    }

    #[test]
    fn weights_sum_to_two_all_orders() {
        for order in MIN_ORDER..=MAX_ORDER {
            let rule = gauss_legendre(order).unwrap();
            let sum: f64 = rule.weights().iter().sum();
            assert!((sum - 2.0).abs() < 1e-14, "order {order}: sum = {sum}");
            assert!(rule.weights().iter().all(|&w| w > 0.0), "order {order}");
            // Symmetry about zero.
            for i in 0..order {
                let mirrored = rule.nodes()[order - 1 - i];
                assert!((rule.nodes()[i] + mirrored).abs() < 1e-15, "order {order}");
            }
        }
    }

    #[test]
    fn unsupported_orders_are_rejected() {
        assert!(matches!(
            gauss_legendre(1),
            Err(QuadratureError::UnsupportedOrder(1))
        ));
        assert!(matches!(
            gauss_legendre(65),
            Err(QuadratureError::UnsupportedOrder(65))
        ));
    }

    #[test]
    fn integrates_sine() {
        let cfg = QuadratureConfig::default();
        let r = integrate_adaptive(f64::sin, 0.0, std::f64::consts::PI, &cfg).unwrap();
        assert!((r.value - 2.0).abs() < 1e-10);
        assert!(r.converged);
    }

    #[test]
    fn integrates_constant_exactly() {
        let cfg = QuadratureConfig::default();
        let r = integrate_adaptive(|_| 1.0, 0.0, 1.0, &cfg).unwrap();
        assert_eq!(r.value, 1.0);
        assert!(r.converged);
    }

    #[test]
    fn near_singular_inverse_sqrt() {
        let cfg = QuadratureConfig::default();
        let eps = 1e-4;
        let r = integrate_adaptive(|t| 1.0 / (t + eps).sqrt(), 0.0, 1.0, &cfg).unwrap();
        let exact = 2.0 * ((1.0 + eps).sqrt() - eps.sqrt());
        assert!((r.value - exact).abs() < 1e-8, "got {}, want {exact}", r.value);
    }

    #[test]
    fn error_estimate_bounds_true_error_on_near_singular_family() {
        let cfg = QuadratureConfig::default();
        for eps in [1e-2, 1e-4, 1e-6] {
            let r = integrate_adaptive(|t| 1.0 / (t + eps).sqrt(), 0.0, 1.0, &cfg).unwrap();
            let exact = 2.0 * ((1.0 + eps).sqrt() - eps.sqrt());
            let true_err = (r.value - exact).abs();
            assert!(
                true_err <= r.error_estimate.max(1e-14),
                "eps {eps}: true {true_err} vs estimate {}",
                r.error_estimate
            );
        }
    }

    #[test]
    fn non_finite_integrand_is_reported() {
        let cfg = QuadratureConfig::default();
        let r = integrate_adaptive(|t| if t > 0.5 { f64::NAN } else { 1.0 }, 0.0, 1.0, &cfg);
        assert!(matches!(r, Err(QuadratureError::NonFiniteIntegrand(_))));
    }

    #[test]
    fn invalid_interval_is_rejected() {
        let cfg = QuadratureConfig::default();
        assert!(matches!(
            integrate_adaptive(|_| 1.0, 1.0, 0.0, &cfg),
            Err(QuadratureError::InvalidInterval(_, _))
        ));
    }

    #[test]
    fn invalid_config_is_rejected() {
        assert!(QuadratureConfig::new(1, 1e-10, 40, 1e-15).is_err());
        assert!(QuadratureConfig::new(16, 0.0, 40, 1e-15).is_err());
        assert!(QuadratureConfig::new(16, 1e-10, 0, 1e-15).is_err());
        assert!(QuadratureConfig::new(16, 1e-10, 61, 1e-15).is_err());
    }

    #[test]
    fn depth_exhaustion_sets_unconverged_flag() {
        let cfg = QuadratureConfig::new(2, 1e-14, 3, 1e-15).unwrap();
        // A genuinely hard integrand for order 2 at depth 3.
        let r = integrate_adaptive(|t| 1.0 / (t + 1e-6).sqrt(), 0.0, 1.0, &cfg).unwrap();
        assert!(!r.converged);
        assert!(r.value.is_finite());
    }

    #[test]
    fn force_split_predicate_refines_without_changing_the_value() {
        let cfg = QuadratureConfig::default();
        let plain = integrate_adaptive(f64::sin, 0.0, 1.0, &cfg).unwrap();
        let forced =
            integrate_adaptive_with(f64::sin, 0.0, 1.0, &cfg, |a, b| b - a > 0.01).unwrap();
        assert!((plain.value - forced.value).abs() < 1e-12);
        assert!(forced.converged);
    }

    proptest! {
        /// Polynomials of degree <= 2*order - 1 integrate exactly on one panel.
        #[test]
        fn polynomial_exactness(
            order in 2usize..12,
            coeffs in proptest::collection::vec(-2.0f64..2.0, 1..8),
        ) {
            let rule = gauss_legendre(order).unwrap();
            let degree = (coeffs.len() - 1).min(2 * order - 1);
            let coeffs = &coeffs[..degree + 1];

            let poly = |x: f64| {
                coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
            };
            let got = rule.integrate(-1.0, 1.0, poly);
            // Exact integral: only even powers contribute on [-1, 1].
            let exact: f64 = coeffs
                .iter()
                .enumerate()
                .filter(|(k, _)| k % 2 == 0)
                .map(|(k, &c)| 2.0 * c / (k as f64 + 1.0))
                .sum();
            let scale: f64 = coeffs.iter().map(|c| c.abs()).sum::<f64>().max(1.0);
            prop_assert!((got - exact).abs() <= 1e-13 * scale);
        }

        /// Splitting the interval externally agrees with one adaptive call.
        #[test]
        fn external_split_invariance(m in 0.2f64..0.8) {
            let cfg = QuadratureConfig::default();
            let f = |t: f64| (3.0 * t).sin() + 1.0 / (t + 0.01);
            let whole = integrate_adaptive(f, 0.0, 1.0, &cfg).unwrap();
            let left = integrate_adaptive(f, 0.0, m, &cfg).unwrap();
            let right = integrate_adaptive(f, m, 1.0, &cfg).unwrap();
            let tol = (whole.error_estimate + left.error_estimate + right.error_estimate)
                .max(1e-12);
            prop_assert!((whole.value - (left.value + right.value)).abs() <= 10.0 * tol);
        }
    }
}
