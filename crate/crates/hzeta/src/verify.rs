//! Named verification suites.
//!
//! Each suite turns one structural claim into a batch of numeric checks and
//! reports every violation it sees instead of stopping at the first. The
//! companion CLI exposes them via `verify --suite <name>`; the acceptance
//! tests drive the same code.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{ensure_domain, Result};
use crate::fmath::{exp, ln, pow_ln};
use crate::hurwitz::{zeta_em, HurwitzParams};
use crate::kernel;
use crate::mellin::{mellin_gamma_zeta, suzuki_g, QuadratureSpec};
use crate::special::{digamma, gamma};
use crate::zeros;

/// Frozen calibration cap for |β − β_asym|/a² (observed supremum ≈ 0.577,
/// drifting up toward it from below).
pub const ASYM_NORMALIZED_CAP: f64 = 0.65;
/// Frozen calibration cap for the normalized residual of the primary
/// estimate β−1 = −a^β(a+1)^{1−β} + O((1−β)a^β) (observed ≈ 0.577).
pub const BASIC_APPROX_CAP: f64 = 0.65;
/// Frozen cap for the second-estimate residual (observed ≈ 0.573).
pub const SECOND_APPROX_CAP: f64 = 0.65;

/// The verification suites the CLI accepts by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Nonvanishing,
    Uniqueness,
    Monotonicity,
    SignStructure,
    Asymptotic,
    Representation,
    Stieltjes,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Nonvanishing,
        Suite::Uniqueness,
        Suite::Monotonicity,
        Suite::SignStructure,
        Suite::Asymptotic,
        Suite::Representation,
        Suite::Stieltjes,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Nonvanishing => "nonvanishing",
            Suite::Uniqueness => "uniqueness",
            Suite::Monotonicity => "monotonicity",
            Suite::SignStructure => "sign-structure",
            Suite::Asymptotic => "asymptotic",
            Suite::Representation => "representation",
            Suite::Stieltjes => "stieltjes",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.iter().copied().find(|s| s.name() == name)
    }
}

/// Shift-grid override for the suites that take one.
#[derive(Debug, Clone, Copy)]
pub struct GridSpec {
    pub a_min: f64,
    pub a_max: f64,
    pub points: usize,
    pub log_grid: bool,
}

impl GridSpec {
    pub fn values(&self) -> Result<Vec<f64>> {
        ensure_domain!(
            self.points >= 1,
            "points",
            "points >= 1",
            self.points as f64
        );
        ensure_domain!(
            self.a_min > 0.0 && self.a_min <= self.a_max,
            "a-min",
            "0 < a-min <= a-max",
            self.a_min
        );
        if self.points == 1 {
            return Ok(alloc::vec![self.a_min]);
        }
        let n = self.points;
        let vals = if self.log_grid {
            let l0 = ln(self.a_min);
            let l1 = ln(self.a_max);
            (0..n)
                .map(|i| exp(l0 + (l1 - l0) * i as f64 / (n - 1) as f64))
                .collect()
        } else {
            (0..n)
                .map(|i| self.a_min + (self.a_max - self.a_min) * i as f64 / (n - 1) as f64)
                .collect()
        };
        Ok(vals)
    }
}

/// What a suite run saw: how many individual checks ran and which failed.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(suite: &'static str) -> Self {
        SuiteReport {
            suite,
            checks: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(msg());
        }
    }
}

/// Run one suite; `grid` overrides the shift grid where the suite uses one.
pub fn run_suite(suite: Suite, grid: Option<GridSpec>) -> Result<SuiteReport> {
    match suite {
        Suite::Nonvanishing => nonvanishing(grid),
        Suite::Uniqueness => uniqueness(grid),
        Suite::Monotonicity => monotonicity(grid),
        Suite::SignStructure => sign_structure(grid),
        Suite::Asymptotic => asymptotic(grid),
        Suite::Representation => representation(),
        Suite::Stieltjes => stieltjes_suite(),
    }
}

/// ζ(σ,a) < 0 on the 200-point grid for each a ≥ 1/2.
fn nonvanishing(grid: Option<GridSpec>) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("nonvanishing");
    let a_values = match grid {
        Some(g) => g.values()?,
        None => alloc::vec![0.5, 0.6, 0.75, 0.9, 1.0],
    };
    let sigma_grid = zeros::default_sigma_grid();
    for a in a_values {
        let scan = zeros::nonvanishing_scan(a, &sigma_grid)?;
        report.check(scan.passed(), || {
            format!(
                "a = {a}: {} nonnegative values, first at sigma = {}",
                scan.violations.len(),
                scan.violations[0].0
            )
        });
    }
    Ok(report)
}

/// Exactly one sign change on a 256-point σ-scan, and a certified simple
/// zero, for each a in (0, 1/2).
fn uniqueness(grid: Option<GridSpec>) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("uniqueness");
    let a_values = match grid {
        Some(g) => g.values()?,
        None => GridSpec {
            a_min: 0.011,
            a_max: 0.489,
            points: 30,
            log_grid: false,
        }
        .values()?,
    };
    for a in a_values {
        let params = HurwitzParams::new(a)?;
        let mut changes = 0usize;
        let mut prev = zeta_em(0.01, &params)?.value;
        for i in 1..256 {
            let s = 0.01 + (0.999 - 0.01) * i as f64 / 255.0;
            let v = zeta_em(s, &params)?.value;
            if prev.signum() != v.signum() {
                changes += 1;
            }
            prev = v;
        }
        report.check(changes == 1, || {
            format!("a = {a}: {changes} sign changes on the 256-point scan")
        });
        match zeros::find_beta(a, 1e-8) {
            Ok(z) => {
                report.check(z.residual <= z.residual_bound(), || {
                    format!("a = {a}: residual {} above bound", z.residual)
                });
                report.check(z.dsigma < 0.0, || {
                    format!("a = {a}: dsigma {} not negative", z.dsigma)
                });
                report.check(z.dsigma.abs() > zeros::DSIGMA_FLOOR, || {
                    format!("a = {a}: |dsigma| {} under floor", z.dsigma.abs())
                });
            }
            Err(e) => report.check(false, || format!("a = {a}: find_beta failed: {e}")),
        }
    }
    Ok(report)
}

/// x₀^{−σ}Γ(σ)ζ(σ,a) strictly decreasing along 50 σ-points per a.
fn monotonicity(grid: Option<GridSpec>) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("monotonicity");
    let a_values = match grid {
        Some(g) => g.values()?,
        None => GridSpec {
            a_min: 0.025,
            a_max: 0.475,
            points: 20,
            log_grid: false,
        }
        .values()?,
    };
    for a in a_values {
        ensure_domain!(a > 0.0 && a < 0.5, "a", "0 < a < 1/2", a);
        let x0 = kernel::find_x0(a, 1e-12)?.x0;
        let mut prev = f64::INFINITY;
        let mut ok = true;
        let mut first_bad = 0.0;
        for i in 0..50 {
            let sigma = 0.05 + 0.9 * i as f64 / 49.0;
            let g = suzuki_g(sigma, a, x0)?;
            if g >= prev {
                ok = false;
                first_bad = sigma;
                break;
            }
            prev = g;
        }
        report.check(ok, || {
            format!("a = {a}: G not strictly decreasing at sigma = {first_bad}")
        });
    }
    Ok(report)
}

/// find_x0 succeeds and its 200-point sign grid shows H > 0 below x₀ and
/// H < 0 above, for each a in (0.01, 0.49).
fn sign_structure(grid: Option<GridSpec>) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("sign-structure");
    let a_values = match grid {
        Some(g) => g.values()?,
        None => GridSpec {
            a_min: 0.011,
            a_max: 0.489,
            points: 50,
            log_grid: false,
        }
        .values()?,
    };
    for a in a_values {
        match kernel::find_x0(a, 1e-13) {
            Ok(profile) => {
                let below_ok = profile
                    .grid_checked
                    .iter()
                    .filter(|&&(x, _)| x < profile.x0)
                    .all(|&(_, s)| s > 0);
                let above_ok = profile
                    .grid_checked
                    .iter()
                    .filter(|&&(x, _)| x > profile.x0)
                    .all(|&(_, s)| s < 0);
                report.check(below_ok && above_ok, || {
                    format!("a = {a}: sign grid violated around x0 = {}", profile.x0)
                });
            }
            Err(e) => report.check(false, || format!("a = {a}: find_x0 failed: {e}")),
        }
    }
    Ok(report)
}

/// The asymptotic-defect ladder on the calibration grid: bounded normalized
/// defect with flattening increments, shrinking raw defect, and bounded
/// intermediate-estimate residuals.
fn asymptotic(grid: Option<GridSpec>) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("asymptotic");
    let a_values = match grid {
        Some(g) => {
            let mut v = g.values()?;
            v.sort_unstable_by(|x, y| y.total_cmp(x)); // decreasing toward 0
            v
        }
        None => alloc::vec![1e-2, 3e-3, 1e-3, 3e-4, 1e-4],
    };
    let rows = zeros::asym_compare(&a_values, 1e-10)?;
    for row in &rows {
        report.check(row.normalized.abs() <= ASYM_NORMALIZED_CAP, || {
            format!("a = {}: |defect|/a^2 = {} above cap", row.a, row.normalized)
        });
        report.check(row.r1.abs() <= BASIC_APPROX_CAP, || {
            format!("a = {}: basic-estimate residual {} above cap", row.a, row.r1)
        });
        report.check(row.r2.abs() <= SECOND_APPROX_CAP, || {
            format!("a = {}: second-estimate residual {} above cap", row.a, row.r2)
        });
    }
    for w in rows.windows(2) {
        report.check(w[1].defect.abs() < w[0].defect.abs(), || {
            format!(
                "defect must shrink along the grid: |{}| at a = {} vs |{}| at a = {}",
                w[1].defect, w[1].a, w[0].defect, w[0].a
            )
        });
    }
    // The normalized defect grows toward its supremum; the growth must
    // flatten (bounded, no runaway trend).
    for w in rows.windows(3) {
        let d1 = w[1].normalized.abs() - w[0].normalized.abs();
        let d2 = w[2].normalized.abs() - w[1].normalized.abs();
        report.check(d2 < d1.max(0.0) + 1e-6, || {
            format!(
                "normalized-defect increments must flatten: {d1} then {d2} at a = {}",
                w[2].a
            )
        });
    }
    // Decade pairs: |defect(a/10)| < |defect(a)|.
    for row in &rows {
        let target = row.a / 10.0;
        if let Some(other) = rows.iter().find(|r| (r.a - target).abs() < 1e-12) {
            report.check(other.defect.abs() < row.defect.abs(), || {
                format!(
                    "|defect({})| = {} not below |defect({})| = {}",
                    other.a,
                    other.defect.abs(),
                    row.a,
                    row.defect.abs()
                )
            });
        }
    }
    Ok(report)
}

/// |quadrature − Γ(σ)ζ(σ,a)| ≤ 1e-8 on the 10×10 grid.
fn representation() -> Result<SuiteReport> {
    let mut report = SuiteReport::new("representation");
    let spec = QuadratureSpec::default();
    for i in 0..10 {
        let sigma = 0.1 + 0.8 * i as f64 / 9.0;
        for j in 0..10 {
            let a = 0.05 + 0.95 * j as f64 / 9.0;
            let lhs = mellin_gamma_zeta(sigma, a, &spec)?.value;
            let rhs = gamma(sigma)? * zeta_em(sigma, &HurwitzParams::new(a)?)?.value;
            report.check((lhs - rhs).abs() <= 1e-8, || {
                format!(
                    "(sigma,a)=({sigma},{a}): quadrature {lhs} vs gamma*zeta {rhs}"
                )
            });
        }
    }
    Ok(report)
}

/// γ₀ = −ψ, Laurent reconstruction at s = 0.95 and 1.05, and the fixed-point
/// route against the direct zero finder.
fn stieltjes_suite() -> Result<SuiteReport> {
    let mut report = SuiteReport::new("stieltjes");
    for a in [0.1, 0.25, 0.5, 1.0] {
        let exp = zeros::stieltjes(a, 8)?;
        let psi = digamma(a)?;
        report.check((exp.coeffs[0] + psi).abs() <= 1e-9, || {
            format!("a = {a}: gamma_0 + psi(a) = {}", exp.coeffs[0] + psi)
        });
        let params = HurwitzParams::new(a)?;
        for s in [0.95, 1.05] {
            let direct = zeta_em(s, &params)?.value;
            let series = exp.reconstruct(s);
            report.check((direct - series).abs() <= 1e-8, || {
                format!(
                    "a = {a}, s = {s}: Laurent reconstruction off by {}",
                    direct - series
                )
            });
        }
    }
    for a in [0.01, 0.05, 0.1] {
        let via = zeros::beta_via_stieltjes(a, 6, 500)?;
        let exp = zeros::stieltjes(a, 6)?;
        let direct = zeros::find_beta(a, 1e-10)?;
        let bound = exp.truncation_bound(direct.beta).max(1e-12);
        report.check((via - direct.beta).abs() <= bound, || {
            format!(
                "a = {a}: fixed point {via} vs finder {} (bound {bound:e})",
                direct.beta
            )
        });
    }
    Ok(report)
}

/// ζ(0,a) = 1/2 − a recovered by Richardson extrapolation of σ → 0+ along
/// σ = 1e-3, 1e-4, 1e-5 (Neville at 0). Shared by the acceptance suite and
/// kept here so the constants stay in one place.
pub fn sigma_to_zero_extrapolation(a: f64) -> Result<f64> {
    let params = HurwitzParams::new(a)?;
    let nodes = [1e-3, 1e-4, 1e-5];
    let mut vals = [0.0f64; 3];
    for (i, &s) in nodes.iter().enumerate() {
        vals[i] = zeta_em(s, &params)?.value;
    }
    // Neville to sigma = 0.
    let mut t = vals;
    for m in 1..3 {
        for i in 0..(3 - m) {
            t[i] = ((0.0 - nodes[i + m]) * t[i] + (nodes[i] - 0.0) * t[i + 1])
                / (nodes[i] - nodes[i + m]);
        }
    }
    Ok(t[0])
}

/// Where the verify suites get their σ-scan of the spec's pointwise claim
/// H(a,x)(x/x₀)^σ log(x/x₀) < 0 for x ≠ x₀ (the integrand of ∂G/∂σ).
pub fn dg_integrand_sign(a: f64, x0: f64, x: f64, sigma: f64) -> Result<f64> {
    let h = kernel::h(a, x)?;
    let r = x / x0;
    Ok(h * pow_ln(r, sigma) * ln(r))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::from_name(s.name()), Some(s));
        }
        assert_eq!(Suite::from_name("nope"), None);
    }

    #[test]
    fn grid_spec_log_and_linear() {
        let g = GridSpec {
            a_min: 0.01,
            a_max: 0.49,
            points: 5,
            log_grid: false,
        };
        let v = g.values().unwrap();
        assert_eq!(v.len(), 5);
        assert!((v[0] - 0.01).abs() < 1e-15 && (v[4] - 0.49).abs() < 1e-15);
        let g = GridSpec {
            a_min: 1e-4,
            a_max: 1e-2,
            points: 3,
            log_grid: true,
        };
        let v = g.values().unwrap();
        assert!((v[1] - 1e-3).abs() < 1e-12);
    }

    #[test]
    fn extrapolation_recovers_closed_form() {
        for a in [0.1, 0.25, 0.5, 1.0] {
            let got = sigma_to_zero_extrapolation(a).unwrap();
            assert!(
                (got - (0.5 - a)).abs() < 1e-8,
                "a = {a}: {got} vs {}",
                0.5 - a
            );
        }
    }

    #[test]
    fn quick_suites_pass() {
        // The cheap suites run here; the heavy ones live in the acceptance
        // tests.
        let small = GridSpec {
            a_min: 0.05,
            a_max: 0.45,
            points: 4,
            log_grid: false,
        };
        assert!(run_suite(Suite::Monotonicity, Some(small)).unwrap().passed());
        assert!(run_suite(Suite::SignStructure, Some(small)).unwrap().passed());
        let nv = GridSpec {
            a_min: 0.5,
            a_max: 1.0,
            points: 3,
            log_grid: false,
        };
        assert!(run_suite(Suite::Nonvanishing, Some(nv)).unwrap().passed());
    }

    #[test]
    fn dg_integrand_is_negative_off_x0() {
        let a = 0.25;
        let x0 = kernel::find_x0(a, 1e-12).unwrap().x0;
        for x in [0.01, 0.5, 2.0, x0 * 0.9, x0 * 1.1, 30.0, 100.0] {
            let v = dg_integrand_sign(a, x0, x, 0.5).unwrap();
            assert!(v < 0.0, "x = {x}: {v}");
        }
    }
}
