//! Comparison of β(a) against its small-a asymptotics.
//!
//! Three layers are tracked per row:
//!
//! * the closed asymptotic form β_asym = 1 − a + a²log a, with the defect
//!   β − β_asym (which is O(a²)) and its a²-normalized version;
//! * the residual r1 of the primary estimate β−1 = −a^β(a+1)^{1−β} +
//!   O((1−β)a^β), normalized by (1−β)a^β;
//! * the residual r2 of the intermediate estimate β−1 = −a + (1−β)a log a +
//!   O((1−β)a), normalized by (1−β)a.
//!
//! All three normalized quantities stay bounded as a → 0 (empirically they
//! drift toward ≈ 0.577).

use alloc::vec::Vec;

use crate::error::Result;
use crate::fmath::{ln, pow_ln};

use super::find_beta;

/// One row of the asymptotic comparison table.
#[derive(Debug, Clone, Copy)]
pub struct AsymptoticRow {
    pub a: f64,
    pub beta_exact: f64,
    /// 1 − a + a² log a
    pub beta_asym: f64,
    /// beta_exact − beta_asym
    pub defect: f64,
    /// defect / a²
    pub normalized: f64,
    /// ((β−1) + a^β(a+1)^{1−β}) / ((1−β) a^β)
    pub r1: f64,
    /// ((β−1) + a − (1−β) a log a) / ((1−β) a)
    pub r2: f64,
}

/// Build the comparison table for a (typically decreasing-to-0) grid.
pub fn asym_compare(a_grid: &[f64], tol: f64) -> Result<Vec<AsymptoticRow>> {
    let mut rows = Vec::with_capacity(a_grid.len());
    for &a in a_grid {
        let zero = find_beta(a, tol)?;
        let beta = zero.beta;
        let la = ln(a);
        let beta_asym = 1.0 - a + a * a * la;
        let defect = beta - beta_asym;
        let one_minus = 1.0 - beta;
        let a_pow_beta = pow_ln(a, beta);
        let r1 = ((beta - 1.0) + a_pow_beta * pow_ln(a + 1.0, 1.0 - beta))
            / (one_minus * a_pow_beta);
        let r2 = ((beta - 1.0) + a - one_minus * a * la) / (one_minus * a);
        rows.push(AsymptoticRow {
            a,
            beta_exact: beta,
            beta_asym,
            defect,
            normalized: defect / (a * a),
            r1,
            r2,
        });
    }
    Ok(rows)
}
