//! Exact invariants of isolated hypersurface singularity germs.
//!
//! This crate computes, with arbitrary-precision rational arithmetic:
//!
//! * Milnor and Tjurina numbers via local standard bases (Mora's tangent-cone
//!   algorithm under a negative-degree-lex order),
//! * the singularity spectrum of a convenient Newton non-degenerate germ via
//!   a maximal basis for the shifted Newton filtration,
//! * the Tjurina spectrum (same filtration on the Tjurina algebra) and the
//!   excluded exponent set `Sp(f) \ Sp^tau(f)` with its lower bounds,
//! * variance inequalities for spectra: the classical one centered at
//!   `(n+1)/2` (Hertling's inequality) and the mean-centered variant used for
//!   Tjurina spectra, including the reduced checks used for near-maximal
//!   Tjurina numbers,
//! * verification of a built-in catalog of parametric normal forms against
//!   their closed-form invariants.
//!
//! No floating point is used anywhere; every comparison is exact.

pub mod catalog;
pub mod hertling;
pub mod linalg;
pub mod localstd;
pub mod newton;
pub mod poly;
pub mod spectrum;
pub mod tjurina;

/// Arbitrary-precision rational number used for all coefficients, valuations
/// and spectral exponents.
pub type Rat = num_rational::BigRational;

use num_bigint::BigInt;

/// Convenience constructor for small rationals.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Convenience constructor for small integers as rationals.
pub fn int(num: i64) -> Rat {
    Rat::from_integer(BigInt::from(num))
}

pub use localstd::{
    colength, determinacy_bound, is_quasihomogeneous, milnor_number, normal_form, reduce_class,
    standard_basis, tjurina_number, Colength, IdealBasis, StandardBasis, StdOptions,
};
pub use newton::{
    make_convenient, newton_diagram, nondegeneracy_check, shifted_valuation, valuation, Facet,
    FacetStatus, NewtonDiagram,
};
pub use poly::{Monomial, Polynomial};
pub use spectrum::{
    check_symmetry, find_weights, maximal_basis, spectrum_newton, spectrum_quasihomogeneous,
    stats, IdealKind, MaximalBasis, Spectrum, SpectrumOptions,
};
pub use tjurina::{
    check_max_excluded, exclusion_lower_bounds, exclusion_report, tjurina_spectrum,
    ExclusionReport,
};
pub use hertling::{
    hertling_check, reduced_variance_check, variance_check_mean, variance_drop_compare,
    CheckMode, DropCompare, InequalityVerdict,
};
pub use catalog::{Catalog, FamilySpec, Instance, VerificationRecord};

use thiserror::Error;

/// Unified error type for the whole crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Syntax error while parsing a polynomial or an expression.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// The germ does not define an isolated singularity (infinite colength).
    #[error("not an isolated singularity: the quotient is infinite-dimensional")]
    NotIsolated,

    /// The reduction-step budget was exhausted before the computation finished.
    #[error("reduction budget exhausted after {steps} steps; \
             the ideal may not be zero-dimensional (set SINGSPEC_BUDGET to raise the limit)")]
    BudgetExceeded { steps: u64 },

    /// The Newton diagram is not convenient, so the valuation is undefined.
    #[error("polynomial is not convenient: variable {var} has no pure power in the support")]
    NotConvenient { var: usize },

    /// Non-degeneracy could not be certified and no override was given.
    #[error("Newton non-degeneracy unresolved on facet {facet}; \
             rerun with assume_nondegenerate to proceed anyway")]
    DegeneracyUnresolved { facet: usize },

    /// The polynomial is not weighted homogeneous for the given weights.
    #[error("not weighted homogeneous: {msg}")]
    NotWeightedHomogeneous { msg: String },

    /// A reduced variance check was requested for an unsupported cut.
    #[error("unsupported tau-max {tau_max} for a spectrum of size {mu}; \
             supported values are mu, mu-1, mu-2")]
    BadTauMax { tau_max: usize, mu: usize },

    /// The hypotheses of an inequality comparison are not satisfied.
    #[error("hypothesis violated: {msg}")]
    HypothesisViolated { msg: String },

    /// Malformed catalog file.
    #[error("catalog format error at line {line}: {msg}")]
    CatalogFormat { line: usize, msg: String },

    /// Requested family does not exist in the catalog.
    #[error("unknown family `{name}`")]
    UnknownFamily { name: String },

    /// Parameters outside the family's declared domain.
    #[error("parameters out of domain: {msg}")]
    OutOfDomain { msg: String },

    /// An instantiated family representative failed its Milnor-number check.
    #[error("Milnor number mismatch: expected {expected}, computed {got}")]
    MuMismatch { expected: usize, got: usize },

    /// Any other invalid input.
    #[error("invalid input: {msg}")]
    InvalidInput { msg: String },

    /// An internal invariant was violated; indicates a bug.
    #[error("internal error: {msg}")]
    Internal { msg: String },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput { msg: msg.into() }
    }
    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal { msg: msg.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
