//! Crate-wide error type.

use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed polynomial or endomorphism text.
    Syntax { pos: usize, msg: String },
    /// `leading_form` of the zero polynomial.
    ZeroPolynomial,
    /// An argument required to be an involution is not one.
    NotInvolution,
    /// The given pair of involutions does not intertwine the map.
    NotIntertwining,
    /// Tame decomposition stalled and the Jacobian is not a nonzero constant.
    NotAnAutomorphism { detail: String },
    /// Tame decomposition stalled on a map with constant nonzero Jacobian.
    /// Such a map would contradict Jung-van der Kulk, so it is reported
    /// loudly and never silently ignored.
    JCCandidate { p: String, q: String },
    /// The involution is in the Identity or MinusIdentity conjugacy class.
    NotConjugateToAlpha,
    /// The queried element does not lie in the image subalgebra.
    NotInImage,
    /// The map's Jacobian is not a nonzero constant.
    JacobianNotUnit,
    /// A Groebner intermediate exceeded the total-degree guardrail.
    DegreeCapExceeded { degree: u32, cap: u32 },
    /// A constructive certificate step failed where theory says it cannot.
    CertificateFailure { what: String },
    /// Neither image is fixed up to sign by the involution.
    SymmetryHypothesisFailed,
    /// A named hypothesis of a theorem-backed routine is violated.
    HypothesisFailed { hypothesis: String },
    /// Unrecognized suite name.
    UnknownSuite { name: String },
    /// Invalid corpus parameters.
    InvalidParams { msg: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Syntax { pos, msg } => write!(f, "syntax error at byte {pos}: {msg}"),
            Error::ZeroPolynomial => write!(f, "zero polynomial has no leading form"),
            Error::NotInvolution => write!(f, "not an involution"),
            Error::NotIntertwining => write!(f, "the map does not intertwine the given involutions"),
            Error::NotAnAutomorphism { detail } => write!(f, "not an automorphism: {detail}"),
            Error::JCCandidate { p, q } => write!(
                f,
                "Jacobian-conjecture candidate: constant nonzero Jacobian but tame \
                 decomposition stalled on P = {p}; Q = {q}"
            ),
            Error::NotConjugateToAlpha => write!(f, "involution is not conjugate to the exchange involution"),
            Error::NotInImage => write!(f, "element is not in the image subalgebra"),
            Error::JacobianNotUnit => write!(f, "Jacobian is not a nonzero constant"),
            Error::DegreeCapExceeded { degree, cap } => {
                write!(f, "intermediate degree {degree} exceeds cap {cap}")
            }
            Error::CertificateFailure { what } => write!(f, "certificate construction failed: {what}"),
            Error::SymmetryHypothesisFailed => {
                write!(f, "neither image is symmetric or skew-symmetric for the involution")
            }
            Error::HypothesisFailed { hypothesis } => write!(f, "hypothesis failed: {hypothesis}"),
            Error::UnknownSuite { name } => write!(f, "unknown suite: {name}"),
            Error::InvalidParams { msg } => write!(f, "invalid parameters: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
