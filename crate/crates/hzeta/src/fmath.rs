//! Thin wrappers over the f64 math functions so the crate builds both with
//! `std` and, via `libm`, without it. Everything else in the crate calls
//! these instead of the inherent `f64` methods that live in `std`.

#[cfg(feature = "std")]
mod imp {
    #[inline(always)]
    pub fn exp(x: f64) -> f64 {
        x.exp()
    }
    #[inline(always)]
    pub fn expm1(x: f64) -> f64 {
        x.exp_m1()
    }
    #[inline(always)]
    pub fn ln(x: f64) -> f64 {
        x.ln()
    }
    #[inline(always)]
    pub fn ln_1p(x: f64) -> f64 {
        x.ln_1p()
    }
    #[inline(always)]
    pub fn powf(x: f64, y: f64) -> f64 {
        x.powf(y)
    }
}

#[cfg(not(feature = "std"))]
mod imp {
    #[inline(always)]
    pub fn exp(x: f64) -> f64 {
        libm::exp(x)
    }
    #[inline(always)]
    pub fn expm1(x: f64) -> f64 {
        libm::expm1(x)
    }
    #[inline(always)]
    pub fn ln(x: f64) -> f64 {
        libm::log(x)
    }
    #[inline(always)]
    pub fn ln_1p(x: f64) -> f64 {
        libm::log1p(x)
    }
    #[inline(always)]
    pub fn powf(x: f64, y: f64) -> f64 {
        libm::pow(x, y)
    }
}

pub(crate) use imp::{exp, expm1, ln, ln_1p, powf};

/// x^y for positive x through exp(y ln x); keeps full accuracy for the
/// extreme bases (a as small as 1e-6) the evaluator feeds in.
#[inline]
pub(crate) fn pow_ln(x: f64, y: f64) -> f64 {
    exp(y * ln(x))
}
