//! Areas and probabilities on the shape sphere.
//!
//! Two first-class routes to the alpha-obtuse area are kept side by side and
//! never silently substituted for one another:
//!
//! * `paper_literal_area` evaluates the published closed-form integral
//!   2 |∫_{X=0}^{1/2} arcsin((1 - 2X)/(sqrt(3) k sqrt(1 - X^2))) dX| exactly
//!   as printed;
//! * `region_area` integrates the region {apex angle >= alpha} bounded by
//!   the constant-angle curve, area = 2 ∫_0^pi (1 - cos theta+(phi)) dphi.
//!
//! The two disagree away from alpha = pi/2 (the printed substitution limits
//! do not match X = cos theta on [0, pi/3], and the integrand leaves its
//! domain for X > 4/5 at the Fermat angle); the Monte Carlo estimator is the
//! arbiter of the geometric probability and sides with the region
//! quadrature. `paper-check` reports both.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

use crate::angle::{ConstantK, SQRT_3};
use crate::error::{Error, Result};
use crate::mc::{self, McConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AreaMethod {
    CapClosedForm,
    PaperLiteralIntegral,
    RegionQuadrature,
}

impl AreaMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            AreaMethod::CapClosedForm => "cap_closed_form",
            AreaMethod::PaperLiteralIntegral => "paper_literal_integral",
            AreaMethod::RegionQuadrature => "region_quadrature",
        }
    }
}

/// An area on the unit shape sphere, in steradians (total 4 pi).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AreaResult {
    pub value: f64,
    pub method: AreaMethod,
    pub error_estimate: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProbMethod {
    CapClosedForm,
    PaperLiteralIntegral,
    RegionQuadrature,
    MonteCarlo,
}

impl ProbMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            ProbMethod::CapClosedForm => "cap_closed_form",
            ProbMethod::PaperLiteralIntegral => "paper_literal_integral",
            ProbMethod::RegionQuadrature => "region_quadrature",
            ProbMethod::MonteCarlo => "monte_carlo",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProbabilityResult {
    pub p: f64,
    pub method: ProbMethod,
    /// Quadrature error bound, or one standard error for Monte Carlo.
    pub error_estimate: f64,
}

/// Controls for the adaptive quadrature engine.
#[derive(Clone, Copy, Debug)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub max_depth: u32,
    /// Gauss-Legendre points per panel. Nodes are interior, so integrable
    /// endpoint singularities are never evaluated at the endpoints.
    pub panel_order: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            abs_tol: 1e-10,
            max_depth: 60,
            panel_order: 15,
        }
    }
}

/// Gauss-Legendre nodes and weights on [-1, 1], by Newton iteration on the
/// Legendre recurrence.
fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = (n + 1) / 2;
    for i in 0..m {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let mut p0 = 1.0;
            let mut p1 = x;
            for j in 2..=n {
                let jf = j as f64;
                let p2 = ((2.0 * jf - 1.0) * x * p1 - (jf - 1.0) * p0) / jf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

struct Quadrature<'a, F: Fn(f64) -> f64> {
    f: &'a F,
    nodes: Vec<f64>,
    weights: Vec<f64>,
    max_depth: u32,
    value: f64,
    err: f64,
    exhausted: bool,
}

// Next representable value toward +/- infinity; keeps quadrature nodes
// strictly inside open intervals so endpoint singularities are never
// evaluated even when a panel shrinks to a few ulps.
fn nudge_up(x: f64) -> f64 {
    if x == 0.0 {
        f64::MIN_POSITIVE
    } else if x > 0.0 {
        f64::from_bits(x.to_bits() + 1)
    } else {
        f64::from_bits(x.to_bits() - 1)
    }
}

fn nudge_down(x: f64) -> f64 {
    -nudge_up(-x)
}

impl<F: Fn(f64) -> f64> Quadrature<'_, F> {
    fn panel(&self, a: f64, b: f64) -> f64 {
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let (lo, hi) = (nudge_up(a), nudge_down(b));
        let mut acc = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            let node = (mid + half * x).clamp(lo, hi);
            acc += w * (self.f)(node);
        }
        acc * half
    }

    // In-order recursion keeps the summation order fixed (panels sorted by
    // position), giving bitwise-reproducible results.
    fn refine(&mut self, a: f64, b: f64, whole: f64, budget: f64, depth: u32) {
        let mid = 0.5 * (a + b);
        let left = self.panel(a, mid);
        let right = self.panel(mid, b);
        let err = (whole - left - right).abs();
        let roundoff_floor = b - a <= 8.0 * f64::EPSILON * a.abs().max(b.abs());
        if err <= budget || depth >= self.max_depth || roundoff_floor {
            self.value += left + right;
            self.err += err;
            if err > budget {
                self.exhausted = true;
            }
            return;
        }
        self.refine(a, mid, left, 0.5 * budget, depth + 1);
        self.refine(mid, b, right, 0.5 * budget, depth + 1);
    }
}

/// Adaptive panel integration of `f` over (a, b).
///
/// Panels whose rule discrepancy exceeds the local budget are bisected, down
/// to `max_depth`. Integrable endpoint singularities of inverse-square-root
/// type are admissible since no endpoint is ever evaluated. Fails only when
/// the accumulated error estimate still exceeds the requested tolerance.
pub fn adaptive_integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
) -> Result<(f64, f64)> {
    if a == b {
        return Ok((0.0, 0.0));
    }
    let (nodes, weights) = gauss_legendre(spec.panel_order.max(3));
    let mut q = Quadrature {
        f: &f,
        nodes,
        weights,
        max_depth: spec.max_depth,
        value: 0.0,
        err: 0.0,
        exhausted: false,
    };
    let whole = q.panel(a, b);
    q.refine(a, b, whole, spec.abs_tol, 0);
    if q.err <= spec.abs_tol {
        Ok((q.value, q.err))
    } else {
        Err(Error::DepthExhausted {
            value: q.value,
            error_estimate: q.err,
        })
    }
}

/// Closed-form spherical cap area 2 pi (1 - cos theta0).
pub fn cap_area(theta0: f64) -> Result<AreaResult> {
    if !(0.0..=PI).contains(&theta0) {
        return Err(Error::AlphaDomain {
            alpha: theta0,
            domain: "cap colatitude must lie in [0, pi]",
        });
    }
    Ok(AreaResult {
        value: 2.0 * PI * (1.0 - theta0.cos()),
        method: AreaMethod::CapClosedForm,
        error_estimate: 0.0,
    })
}

/// Prob(obtuse) = 3/4: three disjoint caps of colatitude pi/3 against the
/// full sphere, 3 * 2pi(1 - 1/2) / 4pi.
pub fn prob_obtuse() -> ProbabilityResult {
    ProbabilityResult {
        p: 0.75,
        method: ProbMethod::CapClosedForm,
        error_estimate: 0.0,
    }
}

/// The complement, Prob(acute) = 1/4.
pub fn prob_acute() -> ProbabilityResult {
    ProbabilityResult {
        p: 0.25,
        method: ProbMethod::CapClosedForm,
        error_estimate: 0.0,
    }
}

// alpha = pi itself is admitted by nudging below pi (cot diverges there and
// the integrand vanishes, matching the zero-measure limit region).
fn below_pi(alpha: f64) -> f64 {
    alpha.min(PI * (1.0 - 1e-15))
}

fn literal_domain_check(alpha: f64) -> Result<ConstantK> {
    if alpha > PI {
        return Err(Error::AlphaDomain {
            alpha,
            domain: "literal integrand needs alpha in [2pi/3, pi]",
        });
    }
    let k = ConstantK::new(below_pi(alpha))?;
    // |argument| <= 1 on (0, 1/2) requires sqrt(3)|k| >= 1 with k < 0.
    if k.k > -1.0 / SQRT_3 + 1e-12 {
        return Err(Error::AlphaDomain {
            alpha,
            domain: "literal integrand needs k = cot(alpha) <= -1/sqrt(3), i.e. alpha in [2pi/3, pi]",
        });
    }
    Ok(k)
}

/// The literal closed-form integral for one cluster's alpha-obtuse area,
/// 2 |∫_0^{1/2} arcsin((1 - 2X)/(sqrt(3) k sqrt(1 - X^2))) dX|, evaluated
/// exactly as printed. Defined for alpha in [2pi/3, pi].
pub fn paper_literal_area(alpha: f64) -> Result<AreaResult> {
    paper_literal_area_with(alpha, &QuadratureSpec::default())
}

pub fn paper_literal_area_with(alpha: f64, spec: &QuadratureSpec) -> Result<AreaResult> {
    let k = literal_domain_check(alpha)?;
    let integrand = move |x: f64| -> f64 {
        let arg = (1.0 - 2.0 * x) / (SQRT_3 * k.k * (1.0 - x * x).sqrt());
        arg.clamp(-1.0, 1.0).asin()
    };
    let (value, err) = adaptive_integrate(integrand, 0.0, 0.5, spec)?;
    Ok(AreaResult {
        value: 2.0 * value.abs(),
        method: AreaMethod::PaperLiteralIntegral,
        error_estimate: 2.0 * err,
    })
}

/// Steradian area of {shapes whose cluster-apex angle >= alpha} for one
/// cluster: the region bounded by the constant-angle curve,
/// area = 2 ∫_0^pi (1 - cos theta+(phi)) dphi with
/// 1 - cos theta+ = 2 V+^2 / (3 + V+^2). Reproduces the pi/3 cap exactly at
/// alpha = pi/2.
pub fn region_area(alpha: f64) -> Result<AreaResult> {
    region_area_with(alpha, &QuadratureSpec::default())
}

pub fn region_area_with(alpha: f64, spec: &QuadratureSpec) -> Result<AreaResult> {
    if !(alpha > FRAC_PI_3 && alpha <= PI) {
        return Err(Error::AlphaDomain {
            alpha,
            domain: "region area is defined for alpha in (pi/3, pi]",
        });
    }
    let k = ConstantK::new(below_pi(alpha))?;
    let integrand = move |phi: f64| -> f64 {
        let s = phi.sin().abs();
        let d = (k.k * k.k * s * s + 1.0).sqrt();
        let v = if k.k >= 0.0 {
            k.k * s + d
        } else {
            1.0 / (d - k.k * s)
        };
        2.0 * v * v / (3.0 + v * v)
    };
    let (value, err) = adaptive_integrate(integrand, 0.0, PI, spec)?;
    Ok(AreaResult {
        value: 2.0 * value,
        method: AreaMethod::RegionQuadrature,
        error_estimate: 2.0 * err,
    })
}

/// Probability that the maximal angle reaches `alpha`, by the selected
/// method.
///
/// The analytic methods use Prob = 3 Area / (4 pi), valid for alpha >= pi/2
/// where the three per-cluster regions are disjoint (no triangle carries two
/// angles above pi/2). Below pi/2 the regions overlap and only the Monte
/// Carlo route is offered.
pub fn prob_alpha_obtuse(
    alpha: f64,
    method: ProbMethod,
    mc_cfg: Option<&McConfig>,
) -> Result<ProbabilityResult> {
    match method {
        ProbMethod::CapClosedForm => {
            if (alpha - FRAC_PI_2).abs() > 1e-12 {
                return Err(Error::MethodIncompatible {
                    method: "cap_closed_form",
                    alpha,
                    reason: "the closed form is the rightness cap, alpha = pi/2 only",
                });
            }
            Ok(prob_obtuse())
        }
        ProbMethod::RegionQuadrature => {
            if alpha < FRAC_PI_2 - 1e-12 {
                return Err(Error::MethodIncompatible {
                    method: "region_quadrature",
                    alpha,
                    reason: "the 3x disjoint-union formula needs alpha >= pi/2; use Monte Carlo",
                });
            }
            let area = region_area(alpha)?;
            Ok(ProbabilityResult {
                p: 3.0 * area.value / (4.0 * PI),
                method,
                error_estimate: 3.0 * area.error_estimate / (4.0 * PI),
            })
        }
        ProbMethod::PaperLiteralIntegral => {
            let area = paper_literal_area(alpha)?;
            Ok(ProbabilityResult {
                p: 3.0 * area.value / (4.0 * PI),
                method,
                error_estimate: 3.0 * area.error_estimate / (4.0 * PI),
            })
        }
        ProbMethod::MonteCarlo => {
            if !(alpha > FRAC_PI_3 && alpha <= PI) {
                return Err(Error::MethodIncompatible {
                    method: "monte_carlo",
                    alpha,
                    reason: "maximal angle lies in (pi/3, pi]",
                });
            }
            let default_cfg = McConfig::default();
            let cfg = mc_cfg.unwrap_or(&default_cfg);
            let est = mc::estimate(cfg, &mc::predicate_name_alpha(alpha), |s| {
                mc::alpha_obtuse(s, alpha)
            });
            Ok(ProbabilityResult {
                p: est.p_hat,
                method,
                error_estimate: est.stderr,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TWO_PI_3: f64 = 2.0 * FRAC_PI_3;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() < tol, "{a} vs {b}");
    }

    #[test]
    fn cap_area_examples() {
        assert_close(cap_area(FRAC_PI_3).unwrap().value, PI, 1e-12);
        assert_eq!(cap_area(0.0).unwrap().value, 0.0);
        assert_close(cap_area(PI).unwrap().value, 4.0 * PI, 1e-12);
        assert!(cap_area(4.0).is_err());
    }

    #[test]
    fn prob_obtuse_is_three_quarters() {
        assert_eq!(prob_obtuse().p, 0.75);
        assert_eq!(prob_acute().p, 0.25);
        let via_cap = 3.0 * cap_area(FRAC_PI_3).unwrap().value / (4.0 * PI);
        assert_close(via_cap, 0.75, 1e-15);
    }

    #[test]
    fn quadrature_engine_basics() {
        let spec = QuadratureSpec::default();
        let (v, e) = adaptive_integrate(|x| 2.0 * x, 0.0, 1.0, &spec).unwrap();
        assert_close(v, 1.0, 1e-13);
        assert!(e <= spec.abs_tol);

        let (v, _) = adaptive_integrate(|x| 1.0 / x.sqrt(), 0.0, 1.0, &spec).unwrap();
        assert_close(v, 2.0, 1e-8);
    }

    #[test]
    fn literal_fermat_pipeline() {
        let area = paper_literal_area(TWO_PI_3).unwrap();
        assert_close(area.value, 0.5838, 1e-3);
        let p = prob_alpha_obtuse(TWO_PI_3, ProbMethod::PaperLiteralIntegral, None).unwrap();
        assert_close(p.p, 0.1394, 5e-4);
        assert_close(1.0 - p.p, 0.8606, 5e-4);
    }

    #[test]
    fn literal_half_integral_value() {
        // ∫_0^{1/2} arcsin((2X-1)/sqrt(1-X^2)) dX = -0.29188...
        let spec = QuadratureSpec::default();
        let f = |x: f64| ((2.0 * x - 1.0) / (1.0 - x * x).sqrt()).clamp(-1.0, 1.0).asin();
        let (v, _) = adaptive_integrate(f, 0.0, 0.5, &spec).unwrap();
        assert_close(v, -0.2919, 1e-3);
    }

    #[test]
    fn literal_domain_errors() {
        assert!(paper_literal_area(FRAC_PI_2).is_err());
        assert!(paper_literal_area(1.8).is_err()); // pi/2 < alpha < 2pi/3
        assert!(paper_literal_area(TWO_PI_3).is_ok());
        assert!(paper_literal_area(PI).is_ok()); // integrand -> 0 literally
    }

    #[test]
    fn region_area_anchor_and_examples() {
        let a = region_area(FRAC_PI_2).unwrap();
        assert_close(a.value, PI, 1e-9);
        assert_close(region_area(TWO_PI_3).unwrap().value, 1.8308724940258436, 1e-8);
        let near_pi = region_area(PI).unwrap();
        assert!(near_pi.value < 1e-12);
    }

    #[test]
    fn prob_method_compatibility() {
        let p = prob_alpha_obtuse(FRAC_PI_2, ProbMethod::RegionQuadrature, None).unwrap();
        assert_close(p.p, 0.75, 1e-9);
        assert!(prob_alpha_obtuse(1.2, ProbMethod::RegionQuadrature, None).is_err());
        assert!(prob_alpha_obtuse(1.2, ProbMethod::CapClosedForm, None).is_err());
        let region = prob_alpha_obtuse(TWO_PI_3, ProbMethod::RegionQuadrature, None).unwrap();
        assert_close(region.p, 0.437, 2e-3);
    }
}
