//! Error type shared across the workbench.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// `gf_make` was handed a composite characteristic.
    NotPrime(u64),
    /// Requested extension degree exceeds the desk-scale bound.
    DegreeTooLarge(usize),
    DivisionByZero,
    /// `embed` source is not a subfield of the target.
    NotASubfield,
    /// The f-system of a relative valued quiver has no positive solution.
    InconsistentValuation(String),
    /// A claimed quiver automorphism fails to be one.
    InvalidAutomorphism(String),
    /// An enumeration would exceed its configured cap.
    SizeLimitExceeded {
        needed: u128,
        cap: u64,
    },
    /// Dimension vector indexed by the wrong vertex set.
    IndexMismatch(String),
    /// Operation requires a loop-free quiver.
    LoopPresent(String),
    NotConnected,
    NotAcyclic,
    /// Representations of two different species were mixed.
    SpeciesMismatch(String),
    /// `fold_dim_vector` needs a vector constant on orbits.
    NotSigmaConstant(String),
    /// An arrow joins two vertices of one automorphism orbit.
    LoopInOrbit(String),
    /// Structural validation failed; the list carries the violations.
    Invalid(Vec<String>),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::DegreeTooLarge(n) => write!(f, "extension degree {n} exceeds the bound"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::NotASubfield => write!(f, "source field does not embed in target"),
            Error::InconsistentValuation(m) => write!(f, "inconsistent relative valuation: {m}"),
            Error::InvalidAutomorphism(m) => write!(f, "invalid automorphism: {m}"),
            Error::SizeLimitExceeded { needed, cap } => {
                write!(f, "enumeration needs {needed} candidates, cap is {cap}")
            }
            Error::IndexMismatch(m) => write!(f, "index mismatch: {m}"),
            Error::LoopPresent(m) => write!(f, "loop present at {m}"),
            Error::NotConnected => write!(f, "quiver is not connected"),
            Error::NotAcyclic => write!(f, "quiver has an oriented cycle"),
            Error::SpeciesMismatch(m) => write!(f, "species mismatch: {m}"),
            Error::NotSigmaConstant(m) => write!(f, "vector not constant on orbits: {m}"),
            Error::LoopInOrbit(m) => write!(f, "arrow inside a single vertex orbit: {m}"),
            Error::Invalid(v) => write!(f, "validation failed: {}", v.join("; ")),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
