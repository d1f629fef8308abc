use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

/// Errors produced by lattice and matrix operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("Gram matrix is degenerate (determinant 0)")]
    Degenerate,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operation is undefined on the zero vector")]
    ZeroVector,
    #[error("twist factor must be nonzero")]
    ZeroTwist,
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("lattice is not even")]
    OddLattice,
    #[error("vector does not lie in the dual lattice")]
    NotInDual,
    #[error("invalid transvection: {0}")]
    InvalidTransvection(&'static str),
    #[error("Eichler criterion not applicable: {0}")]
    CriterionNotApplicable(NotApplicable),
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("no class of square {degree} and divisibility {divisibility} in {lattice}")]
    Infeasible {
        lattice: &'static str,
        degree: BigInt,
        divisibility: u32,
    },
    #[error("Gram entries too large for the orbit search")]
    OracleRange,
    #[error("invalid polarization type: {0}")]
    InvalidPolarization(&'static str),
}

/// Why the Eichler criterion cannot decide an orbit question.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotApplicable {
    NotEven,
    InsufficientHyperbolicPlanes { certified: usize },
    NonCyclicDiscriminant,
}

impl fmt::Display for NotApplicable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotApplicable::NotEven => f.write_str("lattice is not even"),
            NotApplicable::InsufficientHyperbolicPlanes { certified } => write!(
                f,
                "needs two orthogonal hyperbolic planes, {certified} certified"
            ),
            NotApplicable::NonCyclicDiscriminant => f.write_str("discriminant group is not cyclic"),
        }
    }
}

/// A lattice-expression syntax error.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {offset}: expected {}, found {}", ExpectedList(.expected), Found(.found))]
pub struct ParseError {
    /// Byte offset into the input where parsing failed.
    pub offset: usize,
    pub expected: Vec<&'static str>,
    /// The offending character, `None` at end of input.
    pub found: Option<char>,
}

struct ExpectedList<'a>(&'a [&'static str]);

impl fmt::Display for ExpectedList<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, tok) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(if i + 1 == self.0.len() { " or " } else { ", " })?;
            }
            f.write_str(tok)?;
        }
        Ok(())
    }
}

struct Found<'a>(&'a Option<char>);

impl fmt::Display for Found<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Some(c) => write!(f, "`{c}`"),
            None => f.write_str("end of input"),
        }
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
