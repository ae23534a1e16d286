use core::fmt;

use crate::grading::SubspaceTag;

/// Failures raised by the algebra and the residual evaluators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// The composition norm of the operand is (numerically) zero, so it has no inverse.
    ZeroDivisor { norm_modulus: f64 },
    /// `exp_assoc` was handed an element with components outside `span{1, e1, e2, e3}`.
    NotInAssociativeSubalgebra { off_subspace: f64 },
    /// An argument does not lie in the subspace an operation requires.
    DomainViolation {
        argument: &'static str,
        expected: SubspaceTag,
    },
    /// A polynomial field carries no subspace tag, or the wrong one.
    UntaggedField { expected: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDivisor { norm_modulus } => {
                write!(f, "element is a zero divisor (|N(x)| = {norm_modulus:e})")
            }
            Error::NotInAssociativeSubalgebra { off_subspace } => write!(
                f,
                "exponent has components outside the associative subalgebra (magnitude {off_subspace:e})"
            ),
            Error::DomainViolation { argument, expected } => {
                write!(f, "argument `{argument}` is not in {expected:?}")
            }
            Error::UntaggedField { expected } => {
                write!(f, "field must be tagged {expected}")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
