//! Numerical toolkit for Ma-Minda starlike classes.

// NaN-aware `!(x > 0.0)` guards, full-precision reference constants and
// index loops over series coefficients are deliberate.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision, clippy::needless_range_loop)]

pub mod numerics;
pub mod targets;
pub mod specfun;
pub mod radii;
pub mod subord;
pub mod coeffcond;
pub mod extremal;

use serde::{Deserialize, Serialize};

/// Whether a failure came from bad input or from the numerics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorKind {
    Validation,
    Numerical,
}

pub trait Classify {
    fn kind(&self) -> ErrorKind;
}

impl Classify for numerics::NumericsError {
    fn kind(&self) -> ErrorKind {
        use numerics::NumericsError::*;
        match self {
            NotNormalized { .. } | InvalidBracket { .. } => ErrorKind::Validation,
            NoSignChange { .. } | NoConvergence { .. } | PointOnBoundary { .. } | NonFinite { .. } => {
                ErrorKind::Numerical
            }
        }
    }
}

impl Classify for targets::TargetError {
    fn kind(&self) -> ErrorKind {
        use targets::TargetError::*;
        match self {
            Indeterminate { .. } | Singular(_) => ErrorKind::Numerical,
            OutsideClosedDisk { .. } | InvalidParameters { .. } | Parse(_) | CenterOutOfRange { .. } | NotApplicable(_) => {
                ErrorKind::Validation
            }
        }
    }
}

impl Classify for specfun::SpecfunError {
    fn kind(&self) -> ErrorKind {
        use specfun::SpecfunError::*;
        match self {
            ParameterOutOfRange(_) | OutsideDomain { .. } | NonPositiveArgument(_) => ErrorKind::Validation,
            ScanExhausted { .. } | NearPole { .. } => ErrorKind::Numerical,
            Numerics(e) => e.kind(),
        }
    }
}

impl Classify for radii::RadiiError {
    fn kind(&self) -> ErrorKind {
        use radii::RadiiError::*;
        match self {
            Specfun(e) => e.kind(),
            Target(e) => e.kind(),
            Numerics(e) => e.kind(),
            UnsupportedTarget(_) | InvalidParameter(_) => ErrorKind::Validation,
            NoRoot(_) => ErrorKind::Numerical,
        }
    }
}

impl Classify for subord::SubordError {
    fn kind(&self) -> ErrorKind {
        use subord::SubordError::*;
        match self {
            InvalidProblem(_) | NonPositiveBeta(_) | ZeroDivision(_) => ErrorKind::Validation,
            PoleOnDisk { .. } | CertificationFailed { .. } | NoThreshold { .. } => ErrorKind::Numerical,
            Target(e) => e.kind(),
            Numerics(e) => e.kind(),
        }
    }
}

impl Classify for coeffcond::CoeffError {
    fn kind(&self) -> ErrorKind {
        use coeffcond::CoeffError::*;
        match self {
            Target(e) => e.kind(),
            SeriesTooLarge(_) | CenterExcludesOne { .. } | InvalidParameter(_) => ErrorKind::Validation,
        }
    }
}

impl Classify for extremal::ExtremalError {
    fn kind(&self) -> ErrorKind {
        use extremal::ExtremalError::*;
        match self {
            QuadratureFailure(_) => ErrorKind::Numerical,
            Target(e) => e.kind(),
            NotUnimodular(_) | OutsideDisk(_) | InvalidPoint(_) | ConstantFunctional => ErrorKind::Validation,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification() {
        let e = radii::RadiiError::InvalidParameter("x".into());
        assert_eq!(e.kind(), ErrorKind::Validation);
        let n = subord::SubordError::Numerics(numerics::NumericsError::NoConvergence { iterations: 3 });
        assert_eq!(n.kind(), ErrorKind::Numerical);
        let t = radii::RadiiError::Target(targets::TargetError::Parse("?".into()));
        assert_eq!(t.kind(), ErrorKind::Validation);
    }
}
