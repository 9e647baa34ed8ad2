//! Foundation special functions: gamma, digamma, Bernoulli numbers, and a
//! reference Riemann zeta.
//!
//! Everything here is deliberately self-contained: [`riemann_zeta_ref`] in
//! particular shares no code with the [`crate::hurwitz`] evaluator, so the
//! identities ζ(σ,1) = ζ(σ) and ζ(σ,1/2) = (2^σ−1)ζ(σ) stay usable as
//! non-circular cross-checks.

mod bernoulli;
mod digamma_fn;
mod gamma_fn;
mod zeta_ref;

pub use bernoulli::BernoulliTable;
pub use digamma_fn::digamma;
pub use gamma_fn::gamma;
pub use zeta_ref::riemann_zeta_ref;
