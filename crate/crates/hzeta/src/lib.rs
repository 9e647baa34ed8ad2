//! Evaluation of the Hurwitz zeta-function ζ(σ,a) = Σ_{n≥0} (n+a)^{−σ} on the
//! real axis, together with the machinery needed to study its real zeros on
//! the critical interval (0,1).
//!
//! For shift parameters 1/2 ≤ a ≤ 1 the function has no zero in (0,1); for
//! 0 < a < 1/2 it has exactly one, written β(a), and that zero is simple,
//! strictly decreasing in a, and asymptotically β(a) = 1 − a + a²log a + O(a²)
//! as a → 0+. This crate computes all of the objects involved and
//! cross-checks them against independent numerical routes:
//!
//! * [`special`] — gamma, digamma, Bernoulli numbers, and a reference Riemann
//!   zeta (alternating-series based, independent of the Hurwitz evaluator).
//! * [`hurwitz`] — the production evaluator: truncated series plus
//!   Euler–Maclaurin tail with Bernoulli corrections, and its σ- and
//!   a-derivatives.
//! * [`kernel`] — the Mellin integrand H(a,x) = e^{(1−a)x}/(e^x−1) − 1/x, the
//!   auxiliary chain h, f, f′, f″ that controls its single sign change, and
//!   the locator for the sign-change abscissa x₀.
//! * [`mellin`] — adaptive Gauss–Kronrod quadrature of the integral
//!   representation Γ(σ)ζ(σ,a) = ∫₀^∞ H(a,x)x^{σ−1}dx, used as an oracle
//!   tier, plus the strictly decreasing composite x₀^{−σ}Γ(σ)ζ(σ,a).
//! * [`zeros`] — bracketing/Newton isolation of β(a), zero tables, the
//!   implicit-function derivative dβ/da, the asymptotic comparison table,
//!   generalized Stieltjes constants γ_n(a), and scan-style checks
//!   (non-vanishing for a ≥ 1/2, Dirichlet L consistency).
//! * [`verify`] — named verification suites wiring the above together; these
//!   back the `verify` subcommand of the companion CLI.
//!
//! The crate is `no_std`-compatible (`alloc` is required); disable default
//! features and enable `libm` to build without the standard library.

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("hzeta needs either the `std` feature (default) or the `libm` feature");

pub mod error;
pub(crate) mod fmath;
pub mod hurwitz;
pub mod kernel;
pub mod mellin;
pub(crate) mod quad;
pub mod special;
pub mod verify;
pub mod zeros;

pub use error::{Error, Result};
