//! Exact divisor-class computations for the even and odd Prym-null divisors.
//!
//! The moduli space of Prym pairs carries two natural geometric divisors,
//! obtained by moving the theta-null divisor across the diagram
//! `S̄_g⁺ → M̄_g ← R̄_g` and splitting the result by the parity of the
//! tensored theta characteristic. This crate rebuilds the whole computation
//! of their rational divisor classes from first principles:
//!
//! * [`class_space`]: basis catalogs for `Pic(M̄_g)_ℚ`, `Pic(R̄_g)_ℚ` and
//!   `Pic(S̄_g⁺)_ℚ`, sparse exact-rational class vectors, and the pullback
//!   maps induced by the forgetful covers.
//! * [`counting`] / [`arf`]: closed-form parity counts for theta
//!   characteristics and Prym roots, with an independent brute-force check
//!   via quadratic refinements on `GF(2)^{2g}` and the Arf invariant.
//! * [`known_classes`]: the closed-form divisor classes used as reference
//!   values: the theta-null class, its pushforward to `M̄_g`, and the
//!   total/even/odd Prym-null classes.
//! * [`test_curves`] / [`solver`]: the catalog of test-curve intersection
//!   rows and the elimination pipeline that rederives the even/odd class
//!   coefficients from those rows alone.
//! * [`quartic`]: the pencil-of-plane-quartics computation, i.e. the
//!   tangent-line restriction at a basepoint, the extracted quadric, and
//!   its octic discriminant counting bitangent parameters.
//!
//! Everything is exact. Coefficients are arbitrary-precision rationals,
//! counts are arbitrary-precision integers, and no floating point enters
//! any computation path. The [`cli`] module exposes the whole engine as a
//! small command-line tool; the `examples/` directory has one runnable
//! example per capability.

pub mod arf;
pub mod class_space;
pub mod cli;
pub mod counting;
pub mod known_classes;
pub mod latex;
pub mod quartic;
pub mod solver;
pub mod test_curves;

mod rat;

pub use class_space::{
    basis, normalize_label, pullback_r, pullback_splus, BasisClass, ClassVector, Genus, RawKind,
    Space, SpinPullback,
};

use std::fmt;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Genus below the minimum supported by the requested operation.
    GenusTooSmall { g: u32, min: u32 },
    /// Genus outside the range supported by brute-force enumeration.
    GenusOutOfRange { g: u32, min: u32, max: u32 },
    /// Two values living on different ambient spaces were combined.
    SpaceMismatch { expected: Space, found: Space },
    /// Two values of different genus were combined.
    GenusMismatch { left: u32, right: u32 },
    /// A boundary index fell outside its valid range.
    IndexOutOfRange { index: u32, min: u32, max: u32 },
    /// A label does not belong to the basis it was used with.
    LabelNotInBasis { label: String },
    /// A label string could not be parsed.
    UnknownLabel { label: String },
    /// A test-curve name could not be parsed.
    UnknownCurve { name: String },
    /// An indexed test-curve family was requested without its index.
    MissingIndex { curve: String },
    /// A non-indexed test curve was requested with an index.
    UnexpectedIndex { curve: String },
    /// The curve has no cataloged Prym-null intersection numbers.
    NoIntersectionNumbers { curve: String },
    /// Twisting by the zero vector is not allowed.
    ZeroTwist,
    /// The brute-force enumeration contradicted itself.
    InconsistentEnumeration(String),
    /// Root counting was asked of the identically-zero form.
    ZeroForm,
    /// A binary form had the wrong homogeneity degree.
    DegreeMismatch { expected: usize, found: usize },
    /// The pencil has a nonzero coefficient at x0^4, so the basepoint is
    /// not at (1:0:0).
    BasepointNotCentered,
    /// The restriction to the tangent line has nonvanishing v^0 or v^1
    /// terms, so no quadric can be factored out.
    LowOrderTermsNonzero,
    /// A linear system with zero determinant was asked for a solution.
    SingularSystem,
    /// A JSON document did not match the documented schema.
    InvalidJson(String),
    /// A rational number string could not be parsed.
    InvalidRational(String),
    /// A malformed command-line request.
    Usage(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::GenusTooSmall { g, min } => {
                write!(f, "genus {g} is below the minimum {min}")
            }
            Error::GenusOutOfRange { g, min, max } => {
                write!(f, "genus {g} outside the supported range {min}..={max}")
            }
            Error::SpaceMismatch { expected, found } => {
                write!(f, "expected a value on {expected}, found one on {found}")
            }
            Error::GenusMismatch { left, right } => {
                write!(f, "genus mismatch: {left} vs {right}")
            }
            Error::IndexOutOfRange { index, min, max } => {
                write!(f, "index {index} outside the valid range {min}..={max}")
            }
            Error::LabelNotInBasis { label } => {
                write!(f, "label `{label}` does not belong to the basis")
            }
            Error::UnknownLabel { label } => write!(f, "unknown label `{label}`"),
            Error::UnknownCurve { name } => write!(f, "unknown test curve `{name}`"),
            Error::MissingIndex { curve } => {
                write!(f, "test curve `{curve}` requires an index --i")
            }
            Error::UnexpectedIndex { curve } => {
                write!(f, "test curve `{curve}` does not take an index")
            }
            Error::NoIntersectionNumbers { curve } => {
                write!(f, "no Prym-null intersection numbers cataloged for `{curve}`")
            }
            Error::ZeroTwist => write!(f, "cannot twist by the zero vector"),
            Error::InconsistentEnumeration(msg) => {
                write!(f, "inconsistent enumeration: {msg}")
            }
            Error::ZeroForm => write!(f, "the zero form has no well-defined root count"),
            Error::DegreeMismatch { expected, found } => {
                write!(f, "expected a form of degree {expected}, found degree {found}")
            }
            Error::BasepointNotCentered => {
                write!(f, "pencil coefficient at x0^4 must vanish (basepoint at (1:0:0))")
            }
            Error::LowOrderTermsNonzero => {
                write!(f, "v^0/v^1 terms of the tangent restriction do not vanish")
            }
            Error::SingularSystem => write!(f, "linear system is singular"),
            Error::InvalidJson(msg) => write!(f, "invalid JSON: {msg}"),
            Error::InvalidRational(s) => write!(f, "invalid rational number `{s}`"),
            Error::Usage(msg) => f.write_str(msg),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
