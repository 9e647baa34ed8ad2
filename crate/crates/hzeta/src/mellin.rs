//! Quadrature oracle for the integral representation
//!
//!   Γ(s)ζ(s,a) = ∫₀^∞ H(a,x) x^{s−1} dx,   0 < a ≤ 1, 0 < σ < 1,
//!
//! and the strictly decreasing composite G(σ) = x₀^{−σ}Γ(σ)ζ(σ,a).
//!
//! This module is the slow, independent tier: it cross-checks the
//! Euler–Maclaurin evaluator in [`crate::hurwitz`] and is never on the
//! production path. The endpoint singularity x^{σ−1} is removed by the
//! substitution x = s₁·t^{1/σ} on the head panel (the Jacobian cancels the
//! singular factor exactly); the −1/x part of the kernel tail is integrated
//! in closed form, so only an exponentially small remainder needs bounding.

use alloc::vec::Vec;

use crate::error::{ensure_domain, Result};
use crate::fmath::{exp, expm1, pow_ln};
use crate::hurwitz::{zeta_em, HurwitzParams};
use crate::kernel;
use crate::quad;
use crate::special::gamma;

/// Tolerances and panel layout for the Mellin quadrature.
#[derive(Debug, Clone)]
pub struct QuadratureSpec {
    /// Absolute tolerance for the quadrature part.
    pub abs_tol: f64,
    /// Extra integration breakpoints (sorted internally; the oracle always
    /// splits at 1 and, for a < 1/2, at x₀).
    pub split_points: Vec<f64>,
    /// Lower bound for the upper cutoff; raised automatically until the
    /// exponential tail bound drops below min(1e-12, abs_tol/10).
    pub upper_cutoff: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            abs_tol: 1e-10,
            split_points: Vec::new(),
            upper_cutoff: 10.0,
        }
    }
}

/// Quadrature value together with its total error bound (panel estimates
/// plus the recorded tail bound).
#[derive(Debug, Clone, Copy)]
pub struct MellinEval {
    pub value: f64,
    pub error_bound: f64,
    /// The exponential-tail bound beyond the cutoff, recorded separately.
    pub tail_bound: f64,
}

/// Bound for ∫_c^∞ e^{−ax}/(1−e^{−x}) x^{σ−1} dx with σ < 1: the factor
/// x^{σ−1} is decreasing, so the integral is ≤ c^{σ−1} e^{−ac}/(a(1−e^{−c})).
fn exp_tail_bound(sigma: f64, a: f64, c: f64) -> f64 {
    pow_ln(c, sigma - 1.0) * exp(-a * c) / (a * (-expm1(-c)))
}

/// Raise the cutoff until `bound(c)` is below `target` (doubling search).
fn auto_cutoff(mut c: f64, target: f64, bound: impl Fn(f64) -> f64) -> f64 {
    if c < 10.0 {
        c = 10.0;
    }
    let mut steps = 0;
    while bound(c) > target && steps < 60 {
        c *= 1.5;
        steps += 1;
    }
    c
}

fn check_strip(sigma: f64, lo: f64, hi: f64) -> Result<()> {
    ensure_domain!(
        sigma >= lo && sigma <= hi,
        "sigma",
        "0.05 <= sigma <= 0.95 (quadrature band)",
        sigma
    );
    Ok(())
}

/// ∫₀^∞ H(a,x) x^{σ−1} dx  ( = Γ(σ)ζ(σ,a) ).
pub fn mellin_gamma_zeta(sigma: f64, a: f64, spec: &QuadratureSpec) -> Result<MellinEval> {
    check_strip(sigma, 0.05, 0.95)?;
    ensure_domain!(a > 0.0 && a <= 1.0, "a", "0 < a <= 1", a);
    ensure_domain!(spec.abs_tol > 0.0, "abs_tol", "abs_tol > 0", spec.abs_tol);

    let tail_target = (spec.abs_tol / 10.0).min(1e-12);
    let cutoff = auto_cutoff(spec.upper_cutoff, tail_target, |c| {
        exp_tail_bound(sigma, a, c)
    });
    let tail_bound = exp_tail_bound(sigma, a, cutoff);

    // Breakpoints: head boundary, 1, x0 (when it exists), caller extras.
    let mut breaks: Vec<f64> = Vec::new();
    if a < 0.5 {
        breaks.push(kernel::find_x0(a, 1e-10)?.x0);
    }
    breaks.push(1.0);
    breaks.extend(spec.split_points.iter().copied());
    breaks.retain(|&x| x > 0.0 && x < cutoff);
    breaks.sort_unstable_by(f64::total_cmp);
    breaks.dedup();

    let head_end = breaks.first().copied().unwrap_or(1.0).min(1.0);
    let n_segments = 2 + breaks.len();
    let seg_tol = spec.abs_tol / n_segments as f64;
    let mut value = 0.0;
    let mut err = 0.0;

    // Head (0, head_end]: x = head_end * t^{1/sigma} turns the integrand
    // into (head_end^sigma / sigma) * H(a, head_end * t^{1/sigma}) on (0,1].
    let scale = pow_ln(head_end, sigma) / sigma;
    let head = |t: f64| {
        if t <= 0.0 {
            // limit value H(a,0+) = 1/2 - a
            return scale * (0.5 - a);
        }
        let x = head_end * pow_ln(t, 1.0 / sigma);
        scale * kernel::h(a, x).unwrap_or(f64::NAN)
    };
    let (v, e) = quad::integrate(&head, 0.0, 1.0, seg_tol, 4000)?;
    value += v;
    err += e;

    // Interior panels up to the cutoff.
    let integrand = |x: f64| kernel::h(a, x).unwrap_or(f64::NAN) * pow_ln(x, sigma - 1.0);
    let mut edges: Vec<f64> = Vec::with_capacity(breaks.len() + 2);
    edges.push(head_end);
    edges.extend(breaks.iter().copied().filter(|&x| x > head_end));
    edges.push(cutoff);
    for w in edges.windows(2) {
        if w[1] > w[0] {
            let (v, e) = quad::integrate(&integrand, w[0], w[1], seg_tol, 4000)?;
            value += v;
            err += e;
        }
    }

    // Tail: ∫_c^∞ (−1/x) x^{σ−1} dx = −c^{σ−1}/(1−σ), exact; the remaining
    // exponential piece is bounded by `tail_bound` and only recorded.
    value -= pow_ln(cutoff, sigma - 1.0) / (1.0 - sigma);

    Ok(MellinEval {
        value,
        error_bound: err + tail_bound,
        tail_bound,
    })
}

/// G(σ) = x₀^{−σ}·Γ(σ)·ζ(σ,a): the composite that is strictly decreasing in
/// σ on (0,1) and vanishes exactly where ζ(·,a) does.
pub fn suzuki_g(sigma: f64, a: f64, x0: f64) -> Result<f64> {
    ensure_domain!(sigma > 0.0 && sigma < 1.0, "sigma", "0 < sigma < 1", sigma);
    ensure_domain!(a > 0.0 && a < 0.5, "a", "0 < a < 1/2", a);
    ensure_domain!(x0 > 0.0, "x0", "x0 > 0", x0);
    let z = zeta_em(sigma, &HurwitzParams::new(a)?)?.value;
    Ok(pow_ln(x0, -sigma) * gamma(sigma)? * z)
}

/// ∂ζ/∂a via the integral form −(1/Γ(σ)) ∫₀^∞ e^{(1−a)x}/(e^x−1) x^σ dx,
/// the independent oracle for [`crate::hurwitz::dzeta_da`].
pub fn dzeta_da_integral(sigma: f64, a: f64, spec: &QuadratureSpec) -> Result<f64> {
    check_strip(sigma, 0.05, 0.95)?;
    ensure_domain!(a > 0.0 && a <= 1.0, "a", "0 < a <= 1", a);

    // w(x) = x e^{-ax}/(1 - e^{-x}) is smooth with w(0) = 1; the integrand
    // is w(x) x^{σ-1}.
    let w = |x: f64| {
        if x <= 0.0 {
            1.0
        } else {
            x * exp(-a * x) / (-expm1(-x))
        }
    };
    let tail_target = (spec.abs_tol / 10.0).min(1e-12);
    // For x ≥ c ≥ 1 and σ < 1: x^σ ≤ c^{σ-1} x, so the tail is below
    // c^σ e^{-ac} (1 + 1/(ac)) / (a (1 - e^{-c})).
    let bound = |c: f64| {
        pow_ln(c, sigma) * exp(-a * c) * (1.0 + 1.0 / (a * c)) / (a * (-expm1(-c)))
    };
    let cutoff = auto_cutoff(spec.upper_cutoff, tail_target, bound);

    let seg_tol = spec.abs_tol / 3.0;
    // Head (0,1]: x = t^{1/sigma} again.
    let head = |t: f64| {
        if t <= 0.0 {
            return 1.0 / sigma;
        }
        let x = pow_ln(t, 1.0 / sigma);
        w(x) / sigma
    };
    let (mut value, _) = quad::integrate(&head, 0.0, 1.0, seg_tol, 4000)?;
    let rest = |x: f64| w(x) * pow_ln(x, sigma - 1.0);
    let (v, _) = quad::integrate(&rest, 1.0, cutoff, seg_tol, 4000)?;
    value += v;
    Ok(-value / gamma(sigma)?)
}
