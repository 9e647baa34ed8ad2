//! Scan-style checks: non-vanishing of ζ(σ,a) for a ≥ 1/2, and the Dirichlet
//! L-function consistency composition L(s,χ) = q^{−s} Σ_r χ(r) ζ(s, r/q).

use alloc::vec::Vec;

use crate::error::{ensure_domain, Result};
use crate::hurwitz::{zeta_em, HurwitzParams};

/// Outcome of a sign scan over a σ-grid.
#[derive(Debug, Clone)]
pub struct ScanReport {
    pub a: f64,
    pub points: usize,
    /// (σ, ζ(σ,a)) pairs that violated the expected sign.
    pub violations: Vec<(f64, f64)>,
}

impl ScanReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// The default verification grid: 200 uniform points on [0.005, 0.995].
pub fn default_sigma_grid() -> Vec<f64> {
    (0..200)
        .map(|i| 0.005 + 0.99 * i as f64 / 199.0)
        .collect()
}

/// Assert ζ(σ,a) < 0 on the grid, for 1/2 ≤ a ≤ 1 where no real zero exists
/// in (0,1). Any nonnegative value lands in `violations`.
pub fn nonvanishing_scan(a: f64, sigma_grid: &[f64]) -> Result<ScanReport> {
    ensure_domain!(a >= 0.5 && a <= 1.0, "a", "1/2 <= a <= 1", a);
    let params = HurwitzParams::new(a)?;
    let mut violations = Vec::new();
    for &sigma in sigma_grid {
        ensure_domain!(
            sigma > 0.0 && sigma < 1.0,
            "sigma",
            "0 < sigma < 1",
            sigma
        );
        let value = zeta_em(sigma, &params)?.value;
        if value >= 0.0 {
            violations.push((sigma, value));
        }
    }
    Ok(ScanReport {
        a,
        points: sigma_grid.len(),
        violations,
    })
}

/// q^{−σ} Σ_{r=1}^{q} χ(r) ζ(σ, r/q) for a real character table χ.
///
/// For q = 1 (trivial character) this is ζ(σ) and cross-checks against the
/// independent reference zeta.
pub fn dirichlet_l_check(q: usize, chi: &[f64], sigma: f64) -> Result<f64> {
    ensure_domain!(q >= 1 && q <= 12, "q", "1 <= q <= 12", q as f64);
    ensure_domain!(
        chi.len() == q,
        "chi",
        "character table length equals q",
        chi.len() as f64
    );
    ensure_domain!(
        sigma > 0.0 && sigma < 1.0,
        "sigma",
        "0 < sigma < 1",
        sigma
    );
    let mut sum = 0.0;
    for (r, &c) in chi.iter().enumerate() {
        if c != 0.0 {
            let a = (r + 1) as f64 / q as f64;
            sum += c * zeta_em(sigma, &HurwitzParams::new(a)?)?.value;
        }
    }
    Ok(crate::fmath::pow_ln(q as f64, -sigma) * sum)
}
