//! Error type shared by every module.

use core::fmt;

/// Everything that can go wrong inside the library.
///
/// `Domain` marks bad caller input; the remaining variants are internal
/// numeric faults (a bracket that should exist by theory but was not found,
/// an iteration that refused to settle, a quadrature that missed its
/// tolerance). The CLI maps the two classes to different exit codes.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Input outside an operation's domain.
    Domain {
        param: &'static str,
        constraint: &'static str,
        value: f64,
    },
    /// A bracketing search found no sign change where one was required.
    NoSignChange {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },
    /// Bracket construction failed (diagnostic carries the stage).
    Bracket { detail: &'static str, at: f64 },
    /// Adaptive quadrature stopped above the requested tolerance.
    ToleranceNotMet { requested: f64, achieved: f64 },
    /// An iteration hit its step limit without converging.
    Convergence {
        what: &'static str,
        last: f64,
        iterations: usize,
    },
    /// A difference/extrapolation table did not settle.
    Extrapolation {
        what: &'static str,
        best: f64,
        estimate: f64,
    },
    /// An internal consistency check failed (evaluator fault).
    Internal { what: &'static str, at: f64 },
}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(param: &'static str, constraint: &'static str, value: f64) -> Self {
        Error::Domain {
            param,
            constraint,
            value,
        }
    }

    /// True for caller-input errors, false for internal numeric faults.
    pub fn is_domain(&self) -> bool {
        matches!(self, Error::Domain { .. })
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain {
                param,
                constraint,
                value,
            } => write!(f, "domain error: {param} = {value:e} violates {constraint}"),
            Error::NoSignChange { lo, hi, f_lo, f_hi } => write!(
                f,
                "no sign change on [{lo:e}, {hi:e}]: f(lo) = {f_lo:e}, f(hi) = {f_hi:e}"
            ),
            Error::Bracket { detail, at } => write!(f, "bracket failure at {at:e}: {detail}"),
            Error::ToleranceNotMet {
                requested,
                achieved,
            } => write!(
                f,
                "tolerance not met: requested {requested:e}, achieved {achieved:e}"
            ),
            Error::Convergence {
                what,
                last,
                iterations,
            } => write!(
                f,
                "{what} did not converge after {iterations} iterations (last iterate {last:e})"
            ),
            Error::Extrapolation {
                what,
                best,
                estimate,
            } => write!(
                f,
                "{what}: extrapolation table did not settle (best {best:e}, error estimate {estimate:e})"
            ),
            Error::Internal { what, at } => write!(f, "internal fault: {what} (at {at:e})"),
        }
    }
}

impl core::error::Error for Error {}

/// Shorthand used by the modules' precondition checks.
macro_rules! ensure_domain {
    ($cond:expr, $param:expr, $constraint:expr, $value:expr) => {
        if !$cond {
            return Err($crate::error::Error::domain($param, $constraint, $value));
        }
    };
}

pub(crate) use ensure_domain;
