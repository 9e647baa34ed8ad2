//! Production evaluator for the Hurwitz zeta-function ζ(s,a) = Σ_{n≥0}(n+a)^{−s}
//! on the real axis, for shift parameters 0 < a ≤ 1.
//!
//! Two routes are exposed. [`zeta_series`] sums the defining series directly
//! (σ > 1 only) and closes the tail with the integral ∫_N^∞(x+a)^{−σ}dx plus
//! the half-term correction. [`zeta_em`] works on the whole strip 0 < σ < 1
//! (and beyond, σ ≠ 1) through the Euler–Maclaurin formula
//!
//!   ζ(s,a) = Σ_{n<N}(n+a)^{−s} + (N+a)^{1−s}/(s−1) + (N+a)^{−s}/2
//!          + Σ_{k=1}^{M} B_{2k}/(2k)! · s(s+1)⋯(s+2k−2) · (N+a)^{−s−2k+1} + R_M,
//!
//! the base point shifted to n = N and the remainder integral replaced by M
//! Bernoulli correction terms. The reported `error_estimate` is the modulus
//! of the first omitted correction term — the standard Euler–Maclaurin
//! remainder heuristic, not a proven bound. With the default N = 32, M = 10
//! the heuristic sits near 1e-32 over the working grid, far below the f64
//! rounding floor.

use alloc::vec::Vec;

use crate::error::{ensure_domain, Result};
use crate::fmath::{expm1, ln, pow_ln};
use crate::special::BernoulliTable;

/// Truncation knobs plus the shift parameter for the Euler–Maclaurin route.
#[derive(Debug, Clone)]
pub struct HurwitzParams {
    a: f64,
    cutoff: usize,
    em_order: usize,
    /// B_{2k}/(2k)! for k = 1..=em_order+1 (one extra for the remainder
    /// heuristic), exact-rational division rounded once.
    bern: Vec<f64>,
}

/// Default number of directly summed terms.
pub const DEFAULT_CUTOFF: usize = 32;
/// Default number of Bernoulli correction terms.
pub const DEFAULT_EM_ORDER: usize = 10;

impl HurwitzParams {
    /// Defaults: N = 32 direct terms, M = 10 Bernoulli corrections — chosen
    /// so the first omitted correction is < 1e-15 over σ ∈ [0.01, 0.999],
    /// a ∈ [1e-6, 1].
    pub fn new(a: f64) -> Result<Self> {
        Self::with_orders(a, DEFAULT_CUTOFF, DEFAULT_EM_ORDER)
    }

    /// Explicit truncation orders: `cutoff` = N ≥ 8, `em_order` = M ∈ [1, 30].
    pub fn with_orders(a: f64, cutoff: usize, em_order: usize) -> Result<Self> {
        ensure_domain!(a > 0.0 && a <= 1.0, "a", "0 < a <= 1", a);
        Self::with_orders_shifted(a, cutoff, em_order)
    }

    /// Same, but with the shift allowed past 1 — the Euler–Maclaurin formula
    /// itself has no such restriction, and the Stieltjes extraction uses
    /// shifts near 2 after peeling leading series terms.
    pub(crate) fn with_orders_shifted(a: f64, cutoff: usize, em_order: usize) -> Result<Self> {
        ensure_domain!(a > 0.0 && a.is_finite(), "a", "a > 0", a);
        ensure_domain!(cutoff >= 8, "cutoff", "cutoff >= 8", cutoff as f64);
        ensure_domain!(
            (1..=30).contains(&em_order),
            "em_order",
            "1 <= em_order <= 30",
            em_order as f64
        );
        let table = BernoulliTable::new(2 * em_order + 2)?;
        let bern = (0..=em_order + 1)
            .map(|k| if k == 0 { 0.0 } else { table.b2k_over_factorial(k) })
            .collect();
        Ok(HurwitzParams {
            a,
            cutoff,
            em_order,
            bern,
        })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn em_order(&self) -> usize {
        self.em_order
    }
}

/// Which route produced an [`EvalResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Series,
    EulerMaclaurin,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Series => "series",
            Method::EulerMaclaurin => "euler_maclaurin",
        }
    }
}

/// Value plus the first-omitted-term error heuristic.
#[derive(Debug, Clone, Copy)]
pub struct EvalResult {
    pub value: f64,
    pub error_estimate: f64,
    pub method: Method,
}

/// (n+a)^{-s} through exp(−s ln(n+a)); keeps accuracy at a = 1e-6 where a
/// direct powf of the tiny base would not.
#[inline]
fn term(n: f64, a: f64, s: f64) -> f64 {
    pow_ln(n + a, -s)
}

/// Direct summation of ζ(σ,a) for σ > 1.
///
/// The tail beyond the last summed index N is closed with the exact integral
/// (N+a)^{1−σ}/(σ−1) plus the half-term (N+a)^{−σ}/2; `error_estimate` is
/// the first omitted Euler–Maclaurin (B₂) term σ(N+a)^{−σ−1}/12. N is chosen
/// so that estimate drops to ~1e-14, capped at 2·10⁶ terms near σ = 1 where
/// the cap still keeps the estimate under 1e-12.
pub fn zeta_series(sigma: f64, a: f64) -> Result<EvalResult> {
    ensure_domain!(a > 0.0 && a <= 1.0, "a", "0 < a <= 1", a);
    ensure_domain!(sigma >= 1.0 + 1e-3, "sigma", "sigma >= 1.001", sigma);
    // sigma (N+a)^{-sigma-1}/12 <= tol  =>  N ~ (sigma/(12 tol))^{1/(sigma+1)}
    let tol = 1e-14;
    let n_est = pow_ln(sigma / (12.0 * tol), 1.0 / (sigma + 1.0));
    let n = (n_est as usize).clamp(64, 2_000_000);
    let mut sum = 0.0;
    for j in (0..n).rev() {
        sum += term(j as f64, a, sigma);
    }
    let q = n as f64 + a;
    let qs = pow_ln(q, -sigma);
    let value = sum + q * qs / (sigma - 1.0) + 0.5 * qs;
    let error_estimate = sigma * qs / q / 12.0;
    Ok(EvalResult {
        value,
        error_estimate: error_estimate.abs(),
        method: Method::Series,
    })
}

fn check_em_sigma(sigma: f64) -> Result<()> {
    ensure_domain!(sigma > 0.0 && sigma.is_finite(), "sigma", "sigma > 0", sigma);
    ensure_domain!(
        (sigma - 1.0).abs() >= 1e-12,
        "sigma",
        "|sigma - 1| >= 1e-12 (pole)",
        sigma
    );
    Ok(())
}

/// Euler–Maclaurin evaluation of ζ(σ,a) for σ > 0, σ ≠ 1.
pub fn zeta_em(sigma: f64, params: &HurwitzParams) -> Result<EvalResult> {
    check_em_sigma(sigma)?;
    let (sum, q, qs, corr, est) = em_pieces(sigma, params);
    let value = sum + q * qs / (sigma - 1.0) + 0.5 * qs + corr;
    Ok(EvalResult {
        value,
        error_estimate: est,
        method: Method::EulerMaclaurin,
    })
}

/// Convenience wrapper building default params.
pub fn hurwitz_zeta(sigma: f64, a: f64) -> Result<EvalResult> {
    zeta_em(sigma, &HurwitzParams::new(a)?)
}

/// ζ(s,a) − 1/(s−1), the pole-subtracted evaluator, regular at s = 1.
///
/// The subtraction happens inside the formula: the only pole carrier is
/// (N+a)^{1−s}/(s−1), and ((N+a)^{1−s} − 1)/(s−1) = expm1((1−s)ln(N+a))/(s−1)
/// is computed cancellation-free (limit −ln(N+a) at s = 1). This is what the
/// Stieltjes-constant extraction differentiates.
pub fn zeta_minus_pole(sigma: f64, params: &HurwitzParams) -> Result<f64> {
    ensure_domain!(sigma > 0.0 && sigma.is_finite(), "sigma", "sigma > 0", sigma);
    let (sum, q, qs, corr, _) = em_pieces(sigma, params);
    let lq = ln(q);
    let pole_part = if sigma == 1.0 {
        -lq
    } else {
        expm1((1.0 - sigma) * lq) / (sigma - 1.0)
    };
    Ok(sum + pole_part + 0.5 * qs + corr)
}

/// Shared Euler–Maclaurin pieces: partial sum, q = N+a, q^{−s}, Bernoulli
/// corrections, and the first-omitted-term estimate.
fn em_pieces(s: f64, params: &HurwitzParams) -> (f64, f64, f64, f64, f64) {
    let a = params.a;
    let n = params.cutoff;
    let m = params.em_order;
    let mut sum = 0.0;
    for j in (0..n).rev() {
        sum += term(j as f64, a, s);
    }
    let q = n as f64 + a;
    let qs = pow_ln(q, -s);
    let mut poch = s; // (s)_{2k-1} rising factorial, k = 1 start
    let mut scale = qs / q; // q^{-s-(2k-1)}
    let mut corr = 0.0;
    for k in 1..=m {
        corr += params.bern[k] * poch * scale;
        poch *= (s + (2 * k - 1) as f64) * (s + (2 * k) as f64);
        scale /= q * q;
    }
    let est = (params.bern[m + 1] * poch * scale).abs();
    (sum, q, qs, corr, est)
}

/// Exact special value ζ(0,a) = 1/2 − a (closed form, no summation).
pub fn zeta_zero_sigma(a: f64) -> Result<f64> {
    ensure_domain!(a > 0.0 && a <= 1.0, "a", "0 < a <= 1", a);
    Ok(0.5 - a)
}

/// ∂ζ/∂σ by term-wise analytic differentiation of the Euler–Maclaurin
/// formula. Valid on σ ∈ (0,1)∪(1,∞); the accuracy statements are made for
/// the interior band σ ∈ [0.01, 0.999] the zero-finder works in.
pub fn dzeta_dsigma(sigma: f64, a: f64) -> Result<f64> {
    dzeta_dsigma_with(sigma, &HurwitzParams::new(a)?)
}

/// [`dzeta_dsigma`] with caller-managed params (hot loops).
pub fn dzeta_dsigma_with(sigma: f64, params: &HurwitzParams) -> Result<f64> {
    check_em_sigma(sigma)?;
    let s = sigma;
    let a = params.a;
    let n = params.cutoff;
    let m = params.em_order;
    let mut sum = 0.0;
    for j in (0..n).rev() {
        let base = j as f64 + a;
        sum -= ln(base) * term(j as f64, a, s);
    }
    let q = n as f64 + a;
    let lq = ln(q);
    let qs = pow_ln(q, -s);
    // d/ds [ q^{1-s}/(s-1) ] = q^{1-s} ( -lq/(s-1) - 1/(s-1)^2 )
    let sm1 = s - 1.0;
    let d_tail = q * qs * (-lq / sm1 - 1.0 / (sm1 * sm1));
    let d_half = -0.5 * lq * qs;
    let mut poch = s;
    let mut dpoch = 1.0;
    let mut scale = qs / q;
    let mut d_corr = 0.0;
    for k in 1..=m {
        d_corr += params.bern[k] * scale * (dpoch - poch * lq);
        let u = s + (2 * k - 1) as f64;
        let v = s + (2 * k) as f64;
        dpoch = dpoch * u * v + poch * (u + v);
        poch *= u * v;
        scale /= q * q;
    }
    Ok(sum + d_tail + d_half + d_corr)
}

/// ∂ζ/∂a = −σ·ζ(σ+1, a), the series route (σ+1 > 1, so [`zeta_series`]
/// applies). The Mellin module carries the independent integral-form oracle.
pub fn dzeta_da(sigma: f64, a: f64) -> Result<f64> {
    ensure_domain!(
        sigma > 0.0 && sigma < 1.0,
        "sigma",
        "0 < sigma < 1",
        sigma
    );
    ensure_domain!(a > 0.0 && a <= 1.0, "a", "0 < a <= 1", a);
    Ok(-sigma * zeta_series(sigma + 1.0, a)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::riemann_zeta_ref;

    const PI2_6: f64 = 1.6449340668482264365;

    #[test]
    fn series_matches_classical_values() {
        let r = zeta_series(2.0, 1.0).unwrap();
        assert!((r.value - PI2_6).abs() < 1e-13);
        assert_eq!(r.method, Method::Series);
        // zeta(2, 1/2) = (2^2 - 1) zeta(2) = 3 pi^2/6 = pi^2/2
        let r = zeta_series(2.0, 0.5).unwrap();
        assert!((r.value - 3.0 * PI2_6).abs() < 1e-12);
        assert!(zeta_series(1.0, 0.5).is_err());
        assert!(zeta_series(2.0, 0.0).is_err());
    }

    #[test]
    fn series_error_estimate_is_honest() {
        // mpmath: zeta(3, 0.25) = 64.663869968768460167
        let r = zeta_series(3.0, 0.25).unwrap();
        assert!((r.value - 64.663869968768460167).abs() <= r.error_estimate.max(1e-12));
    }

    #[test]
    fn em_reduces_to_riemann_at_a_one() {
        let p = HurwitzParams::new(1.0).unwrap();
        for s in [0.05, 0.25, 0.5, 0.75, 0.95, 1.5, 2.0, 5.0] {
            let got = zeta_em(s, &p).unwrap().value;
            let want = riemann_zeta_ref(s).unwrap();
            assert!(
                (got - want).abs() <= 1e-12 * want.abs().max(1.0),
                "sigma = {s}: {got} vs {want}"
            );
        }
    }

    #[test]
    fn em_golden_strip_values() {
        // mpmath, 40 digits
        let p = HurwitzParams::new(0.25).unwrap();
        assert!((zeta_em(0.5, &p).unwrap().value - 0.23996352449563095534).abs() < 1e-13);
        let p = HurwitzParams::new(0.5).unwrap();
        assert!((zeta_em(0.5, &p).unwrap().value - (-0.60489864342163037025)).abs() < 1e-13);
        let p = HurwitzParams::new(0.3).unwrap();
        assert!((zeta_em(1.05, &p).unwrap().value - 23.707661698097962981).abs() < 2e-12);
        assert!((zeta_em(0.95, &p).unwrap().value - (-16.690540115019032519)).abs() < 2e-12);
    }

    #[test]
    fn em_agrees_with_series_on_overlap() {
        for (s, a) in [(1.5, 0.25), (2.0, 0.7), (3.0, 1.0), (10.0, 0.1), (1.01, 0.9)] {
            let em = zeta_em(s, &HurwitzParams::new(a).unwrap()).unwrap().value;
            let se = zeta_series(s, a).unwrap().value;
            assert!(
                (em - se).abs() <= 1e-12 * em.abs().max(1.0),
                "(s,a)=({s},{a}): em {em} vs series {se}"
            );
        }
    }

    #[test]
    fn em_rejects_pole_and_nonpositive_sigma() {
        let p = HurwitzParams::new(0.5).unwrap();
        assert!(zeta_em(1.0, &p).is_err());
        assert!(zeta_em(0.0, &p).is_err());
        assert!(zeta_em(-0.5, &p).is_err());
    }

    #[test]
    fn zero_sigma_closed_form() {
        assert_eq!(zeta_zero_sigma(0.25).unwrap(), 0.25);
        assert_eq!(zeta_zero_sigma(0.5).unwrap(), 0.0);
        assert_eq!(zeta_zero_sigma(1.0).unwrap(), -0.5);
        assert!(zeta_zero_sigma(0.0).is_err());
    }

    #[test]
    fn minus_pole_is_regular_through_one() {
        let p = HurwitzParams::new(0.25).unwrap();
        let g_m = zeta_minus_pole(1.0 - 1e-7, &p).unwrap();
        let g_0 = zeta_minus_pole(1.0, &p).unwrap();
        let g_p = zeta_minus_pole(1.0 + 1e-7, &p).unwrap();
        assert!((g_m - g_0).abs() < 1e-5);
        assert!((g_p - g_0).abs() < 1e-5);
        // gamma_0(0.25) = -psi(0.25) = 4.2274535333762654081 (mpmath)
        assert!((g_0 - 4.2274535333762654081).abs() < 1e-12);
    }

    #[test]
    fn dsigma_matches_central_differences() {
        let h = 1e-6;
        for (s, a) in [(0.5, 1.0), (0.5, 0.5), (0.3, 0.25), (0.7, 0.1), (0.9, 0.9)] {
            let p = HurwitzParams::new(a).unwrap();
            let d = dzeta_dsigma_with(s, &p).unwrap();
            let fd = (zeta_em(s + h, &p).unwrap().value - zeta_em(s - h, &p).unwrap().value)
                / (2.0 * h);
            assert!(
                ((d - fd) / fd).abs() < 1e-6,
                "(s,a)=({s},{a}): analytic {d} vs fd {fd}"
            );
        }
    }

    #[test]
    fn dsigma_golden_at_riemann_point() {
        // zeta'(0.5) = -3.9226461392091517275 (mpmath)
        let d = dzeta_dsigma(0.5, 1.0).unwrap();
        assert!((d - (-3.9226461392091517275)).abs() < 1e-10);
    }

    #[test]
    fn dsigma_blows_down_near_pole() {
        // Dominated by the -1/(sigma-1)^2 = -1e4 pole term at sigma = 0.99;
        // mpmath gives -9994.5581900761560544 once the regular part is added.
        let d = dzeta_dsigma(0.99, 0.25).unwrap();
        assert!(d < -9.9e3);
        assert!(((d - (-9994.5581900761560544)) / 9994.56).abs() < 1e-10, "{d}");
    }

    #[test]
    fn da_identity_and_sign() {
        // -0.5 zeta(1.5, 0.5) = -0.5 (2^{1.5}-1) zeta(1.5)
        let want = -0.5 * (2f64.powf(1.5) - 1.0) * 2.6123753486854883433;
        let got = dzeta_da(0.5, 0.5).unwrap();
        assert!(((got - want) / want).abs() < 1e-12, "{got} vs {want}");
        for (s, a) in [(0.1, 0.9), (0.5, 0.25), (0.9, 0.01), (0.99, 0.6)] {
            assert!(dzeta_da(s, a).unwrap() < 0.0, "(s,a)=({s},{a})");
        }
        // continuity toward a = 1: drift over a 1e-9 step is first order
        let lim = dzeta_da(0.5, 1.0 - 1e-9).unwrap();
        let at1 = dzeta_da(0.5, 1.0).unwrap();
        assert!((lim - at1).abs() < 1e-8);
    }
}
