//! Isolation and study of the unique real zero β(a) of ζ(σ,a) on (0,1).
//!
//! For 0 < a < 1/2 the function ζ(·,a) decreases from ζ(0,a) = 1/2 − a > 0
//! to −∞ at the pole, crossing zero exactly once, at a simple zero. The
//! finder brackets that crossing, runs Brent to a coarse width, polishes
//! with Newton steps driven by ∂ζ/∂σ, and then rescans the interval to
//! confirm no second sign change slipped in.

mod asym;
mod scans;
mod stieltjes_fn;

pub use asym::{asym_compare, AsymptoticRow};
pub use scans::{default_sigma_grid, dirichlet_l_check, nonvanishing_scan, ScanReport};
pub use stieltjes_fn::{beta_via_stieltjes, stieltjes, StieltjesExpansion};

use crate::error::{ensure_domain, Error, Result};
use crate::hurwitz::{dzeta_da, dzeta_dsigma_with, zeta_em, HurwitzParams};

use alloc::vec::Vec;

/// Admissible shift range for the zero finder. Below 1e-6 the distance
/// 1 − β(a) drops under the meaningful digits of f64 residuals; above
/// 0.4999 the zero squeezes against σ = 0.
pub const A_MIN: f64 = 1e-6;
pub const A_MAX: f64 = 0.4999;

/// Lower bound observed for |∂σζ(β(a),a)| over a ∈ [0.01, 0.49]
/// (calibration: the minimum is ≈ 0.372 at a = 0.49).
pub const DSIGMA_FLOOR: f64 = 0.1;

/// A located zero with its certificate data.
#[derive(Debug, Clone)]
pub struct ZeroResult {
    pub a: f64,
    pub beta: f64,
    /// |ζ(β,a)| at the returned point.
    pub residual: f64,
    /// ∂ζ/∂σ at (β,a); strictly negative (simplicity).
    pub dsigma: f64,
    /// Final bracket around the sign change.
    pub bracket: (f64, f64),
    /// Brent plus Newton steps consumed.
    pub iterations: usize,
}

impl ZeroResult {
    /// The residual criterion every returned zero satisfies.
    pub fn residual_bound(&self) -> f64 {
        1e-12 * self.dsigma.abs().max(1.0)
    }
}

/// Brent's method on a validated bracket; returns (root, f(root), bracket,
/// iterations). Stops when the interval is below `xtol`.
fn brent<F: Fn(f64) -> Result<f64>>(
    f: &F,
    mut a: f64,
    mut b: f64,
    mut fa: f64,
    mut fb: f64,
    xtol: f64,
    max_iter: usize,
) -> Result<(f64, f64, (f64, f64), usize)> {
    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = b - a;
    for iter in 0..max_iter {
        if fb * fc > 0.0 {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * xtol;
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 || fb == 0.0 {
            let lo = b.min(c);
            let hi = b.max(c);
            return Ok((b, fb, (lo, hi), iter));
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            // Inverse quadratic interpolation / secant.
            let s = fb / fa;
            let (mut p, mut q) = if a == c {
                (2.0 * xm * s, 1.0 - s)
            } else {
                let q = fa / fc;
                let r = fb / fc;
                (
                    s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0)),
                    (q - 1.0) * (r - 1.0) * (s - 1.0),
                )
            };
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            let min1 = 3.0 * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if 2.0 * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol1 {
            d
        } else if xm > 0.0 {
            tol1
        } else {
            -tol1
        };
        fb = f(b)?;
    }
    Err(Error::Convergence {
        what: "Brent bracketing",
        last: b,
        iterations: max_iter,
    })
}

/// Locate β(a), the unique zero of ζ(·,a) in (0,1), for a ∈ [1e-6, 0.4999].
///
/// `tol` is the Brent bracket width before the Newton polish (the spec-level
/// default is 1e-8); the polish then drives the residual below
/// 1e-12·max(1, |∂σζ|). A 64-point rescan of the search interval asserts
/// exactly one sign change.
pub fn find_beta(a: f64, tol: f64) -> Result<ZeroResult> {
    ensure_domain!((A_MIN..=A_MAX).contains(&a), "a", "1e-6 <= a <= 0.4999", a);
    ensure_domain!(tol > 0.0, "tol", "tol > 0", tol);
    let params = HurwitzParams::new(a)?;
    let f = |s: f64| zeta_em(s, &params).map(|r| r.value);

    // Left endpoint: start at 0.01 and shrink toward 0 while the sign is
    // wrong; termination is guaranteed because ζ(σ,a) → 1/2 − a ≥ 1e-4 > 0
    // as σ → 0+ on this a-range.
    let mut lo = 0.01;
    let mut f_lo = f(lo)?;
    let mut shrink = 0;
    while f_lo <= 0.0 {
        lo *= 0.25;
        f_lo = f(lo)?;
        shrink += 1;
        if shrink > 60 {
            return Err(Error::Bracket {
                detail: "left endpoint never turned positive",
                at: lo,
            });
        }
    }
    let hi = 1.0 - 1e-9;
    let f_hi = f(hi)?;
    if f_hi >= 0.0 {
        return Err(Error::NoSignChange {
            lo,
            hi,
            f_lo,
            f_hi,
        });
    }

    let (mut beta, mut f_beta, bracket, brent_iters) =
        brent(&f, lo, hi, f_lo, f_hi, tol, 200)?;

    // Newton polish, capped at 8 steps, bisection fallback on divergence.
    let mut dsigma = dzeta_dsigma_with(beta, &params)?;
    let mut newton_iters = 0;
    while f_beta.abs() > 1e-12 * dsigma.abs().max(1.0) && newton_iters < 8 {
        let step = f_beta / dsigma;
        let next = beta - step;
        if !(0.0..1.0).contains(&next) {
            break;
        }
        let f_next = f(next)?;
        if f_next.abs() >= f_beta.abs() {
            break;
        }
        beta = next;
        f_beta = f_next;
        dsigma = dzeta_dsigma_with(beta, &params)?;
        newton_iters += 1;
    }
    if f_beta.abs() > 1e-12 * dsigma.abs().max(1.0) {
        // Bisection fallback on the Brent bracket.
        let (mut blo, mut bhi) = bracket;
        let mut f_blo = f(blo)?;
        for _ in 0..200 {
            let mid = 0.5 * (blo + bhi);
            let f_mid = f(mid)?;
            if f_mid.abs() <= 1e-12 * dsigma.abs().max(1.0) || bhi - blo < f64::EPSILON * mid {
                beta = mid;
                f_beta = f_mid;
                break;
            }
            if (f_mid > 0.0) == (f_blo > 0.0) {
                blo = mid;
                f_blo = f_mid;
            } else {
                bhi = mid;
            }
            newton_iters += 1;
        }
        dsigma = dzeta_dsigma_with(beta, &params)?;
        if f_beta.abs() > 1e-12 * dsigma.abs().max(1.0) {
            return Err(Error::Convergence {
                what: "Newton/bisection polish of beta",
                last: beta,
                iterations: newton_iters,
            });
        }
    }
    if dsigma >= 0.0 {
        return Err(Error::Internal {
            what: "dsigma at the zero is not negative (simplicity violated)",
            at: beta,
        });
    }

    // Post-hoc uniqueness scan: exactly one sign change on 64 points. The
    // scan runs to the pole-side endpoint so it still straddles beta(a),
    // which exceeds 0.999 for a below ~1e-3.
    let changes = sign_changes(&f, lo, hi, 64)?;
    if changes != 1 {
        return Err(Error::Internal {
            what: "sigma-scan did not see exactly one sign change",
            at: a,
        });
    }

    Ok(ZeroResult {
        a,
        beta,
        residual: f_beta.abs(),
        dsigma,
        bracket,
        iterations: brent_iters + newton_iters,
    })
}

/// Count sign changes of f over `n` uniform points on [lo, hi].
fn sign_changes<F: Fn(f64) -> Result<f64>>(f: &F, lo: f64, hi: f64, n: usize) -> Result<usize> {
    let mut changes = 0;
    let mut prev = f(lo)?;
    for i in 1..n {
        let s = lo + (hi - lo) * i as f64 / (n - 1) as f64;
        let v = f(s)?;
        if prev.signum() != v.signum() {
            changes += 1;
        }
        prev = v;
    }
    Ok(changes)
}

/// β(a) for every grid entry, in input order; per-row failures are collected
/// rather than aborting the table.
pub fn beta_table(a_grid: &[f64], tol: f64) -> Vec<Result<ZeroResult>> {
    a_grid.iter().map(|&a| find_beta(a, tol)).collect()
}

/// dβ/da = −(∂ζ/∂a)/(∂ζ/∂σ) at (β(a), a); strictly negative.
pub fn dbeta_da(a: f64) -> Result<f64> {
    let zero = find_beta(a, 1e-10)?;
    let da = dzeta_da(zero.beta, a)?;
    let ds = zero.dsigma;
    let slope = -da / ds;
    if slope >= 0.0 {
        return Err(Error::Internal {
            what: "dbeta/da is not negative",
            at: a,
        });
    }
    Ok(slope)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_zeros() {
        // mpmath bisection, 40 digits
        let cases = [
            (0.25, 0.61081855787533761982),
            (0.1, 0.8732677483264984241),
            (0.05, 0.94225848572965826314),
            (0.01, 0.98956922953894509404),
            (0.4, 0.27049692195623204457),
        ];
        for (a, want) in cases {
            let z = find_beta(a, 1e-8).unwrap();
            assert!(
                (z.beta - want).abs() < 1e-11,
                "a = {a}: beta {} vs {want}",
                z.beta
            );
            assert!(z.residual <= z.residual_bound());
            assert!(z.dsigma < 0.0);
            assert!(z.bracket.0 < z.beta + 1e-6 && z.beta - 1e-6 < z.bracket.1);
        }
    }

    #[test]
    fn edge_of_domain_small_beta() {
        // beta(0.4999) = 0.00028852061421876799893 (mpmath): the zero sits
        // far below the 0.01 starting endpoint, exercising the shrink loop.
        let z = find_beta(0.4999, 1e-10).unwrap();
        assert!((z.beta - 0.00028852061421876799893).abs() < 1e-12, "{}", z.beta);
    }

    #[test]
    fn edge_of_domain_tiny_a() {
        // beta(1e-4) = 0.99989991355522978525 (mpmath); the asymptotic
        // formula predicts 1 - 1e-4 + 1e-8 ln(1e-4) within 2 a^2.
        let z = find_beta(1e-4, 1e-8).unwrap();
        assert!((z.beta - 0.99989991355522978525).abs() < 1e-12, "{}", z.beta);
        let asym = 1.0 - 1e-4 + 1e-8 * (1e-4f64).ln();
        assert!((z.beta - asym).abs() < 2.0 * 1e-8);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(find_beta(0.5, 1e-8).is_err());
        assert!(find_beta(0.0, 1e-8).is_err());
        assert!(find_beta(1e-7, 1e-8).is_err());
    }

    #[test]
    fn table_is_monotone() {
        let grid = [0.1, 0.2, 0.3, 0.4];
        let rows = beta_table(&grid, 1e-8);
        let betas: Vec<f64> = rows.into_iter().map(|r| r.unwrap().beta).collect();
        assert!(betas.windows(2).all(|w| w[1] < w[0]), "{betas:?}");
        // beta -> 1- as a -> 0+ and beta -> 0+ as a -> 1/2-
        assert!(find_beta(1e-5, 1e-8).unwrap().beta > 0.9999);
        assert!(find_beta(0.499, 1e-8).unwrap().beta < 0.003);
    }

    #[test]
    fn dbeta_matches_finite_differences() {
        // (beta(a+h) - beta(a-h))/2h at h = 1e-5 vs the implicit formula.
        for a in [0.25, 0.1, 0.45] {
            let d = dbeta_da(a).unwrap();
            assert!(d < 0.0);
            let h = 1e-5;
            let fd = (find_beta(a + h, 1e-10).unwrap().beta
                - find_beta(a - h, 1e-10).unwrap().beta)
                / (2.0 * h);
            assert!(
                ((d - fd) / fd).abs() < 1e-4,
                "a = {a}: implicit {d} vs fd {fd}"
            );
        }
    }

    #[test]
    fn dbeta_golden() {
        // mpmath high-precision central difference at a = 0.25
        let d = dbeta_da(0.25).unwrap();
        assert!(
            ((d - (-2.01173216920227)) / 2.01173216920227).abs() < 1e-7,
            "{d}"
        );
    }
}
