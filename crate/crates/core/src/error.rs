use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Row `row` of a Gram matrix has `len` entries instead of `expected`.
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    NotSymmetric {
        row: usize,
        col: usize,
    },
    /// The form has determinant zero.
    SingularForm,
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    NonUnimodular,
    /// The vector fails the characteristic condition against basis vector `index`.
    NotCharacteristic {
        index: usize,
    },
    /// `3 sigma + cusps` is odd.
    ParityViolation,
    /// The Smale invariant is odd, so no compressible lift exists.
    OddSmaleInvariant,
    SearchSpaceTooLarge,
    /// A realization plan would need more summands than fit in memory.
    PlanTooLarge,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotSquare { row, len, expected } => {
                write!(
                    f,
                    "gram matrix is not square: row {row} has {len} entries, expected {expected}"
                )
            }
            Error::NotSymmetric { row, col } => {
                write!(f, "gram matrix is not symmetric at ({row}, {col})")
            }
            Error::SingularForm => f.write_str("form is singular (determinant 0)"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NonUnimodular => f.write_str("form is not unimodular (|det| != 1)"),
            Error::NotCharacteristic { index } => {
                write!(
                    f,
                    "vector is not characteristic: <x, g_{index}> and <g_{index}, g_{index}> differ mod 2"
                )
            }
            Error::ParityViolation => f.write_str("3*sigma + cusps is odd"),
            Error::OddSmaleInvariant => {
                f.write_str("Smale invariant is odd: no embedding in R^6 projects to this immersion")
            }
            Error::SearchSpaceTooLarge => f.write_str("exhaustive search space exceeds the guard"),
            Error::PlanTooLarge => f.write_str("realization plan needs too many summands"),
        }
    }
}

impl core::error::Error for Error {}
