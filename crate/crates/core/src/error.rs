//! Error type shared by all modules of the crate.

use std::fmt;

/// Everything that can go wrong in the toolkit.
///
/// Arithmetic on mismatched field contexts and division by zero are
/// programming errors at the call site and are reported through this type
/// by the checked entry points (panicking operators exist for the common
/// same-context fast path and say so in their docs).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two values from different field contexts were combined.
    ContextMismatch,
    /// Division (or inversion) of zero.
    DivisionByZero,
    /// The requested characteristic is not a prime `>= 5`.
    BadCharacteristic(u64),
    /// An extension modulus was rejected: not monic, degree too small,
    /// or a third tower layer was requested.
    BadModulus(String),
    /// An extension modulus turned out to be reducible.
    ReducibleModulus,
    /// `root_of_unity(n)` with `n` not dividing the group order.
    NoRootOfUnity { n: u128, group_order: u128 },
    /// A value expected in a subfield did not lie there.
    NotInSubfield,
    /// A square matrix was singular where invertibility was required.
    SingularMatrix,
    /// Binary-form degree did not match the declared degree.
    DegreeMismatch { expected: usize, got: usize },
    /// An operation on the zero form that requires a nonzero form.
    ZeroForm,
    /// Failure while parsing a textual form, map or permutation.
    Parse(String),
    /// The discriminant vanishes identically: not an elliptic fibration.
    ZeroDiscriminant,
    /// `ord(Delta) >= 12` at a point: the Weierstrass model is not minimal.
    NonMinimalModel { locus: String },
    /// A `(ord c4, ord Delta)` pair outside the classification table.
    UnclassifiedFibre { ord_c4: String, ord_delta: usize },
    /// A map failed to preserve the surface equation up to a unit.
    NotAnAutomorphism,
    /// Iteration cap exceeded while searching for a finite order.
    OrderCapExceeded { cap: u32 },
    /// `a b a^-1` is not a power of `b`.
    NotAPower,
    /// An image sequence is not a bijection, or degrees disagree.
    InvalidPermutation(String),
    /// Group enumeration would exceed the element budget.
    BudgetExceeded { needed: u64, budget: u64 },
    /// Unknown standard group name.
    UnknownGroup(String),
    /// An embedded generator table failed its validation checks.
    GroupValidation { name: String, detail: String },
    /// A stated precondition was violated; the message names the value.
    Precondition(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ContextMismatch => write!(f, "field context mismatch"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::BadCharacteristic(p) => {
                write!(f, "characteristic {p} is not a prime >= 5")
            }
            Error::BadModulus(msg) => write!(f, "bad extension modulus: {msg}"),
            Error::ReducibleModulus => write!(f, "extension modulus is reducible"),
            Error::NoRootOfUnity { n, group_order } => {
                write!(f, "no root of unity of order {n}: {n} does not divide {group_order}")
            }
            Error::NotInSubfield => write!(f, "value does not lie in the expected subfield"),
            Error::SingularMatrix => write!(f, "matrix is singular"),
            Error::DegreeMismatch { expected, got } => {
                write!(f, "degree mismatch: expected {expected}, got {got}")
            }
            Error::ZeroForm => write!(f, "operation undefined for the zero form"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::ZeroDiscriminant => {
                write!(f, "discriminant vanishes identically: not an elliptic fibration")
            }
            Error::NonMinimalModel { locus } => {
                write!(f, "non-minimal Weierstrass model: ord(Delta) >= 12 at {locus}")
            }
            Error::UnclassifiedFibre { ord_c4, ord_delta } => {
                write!(f, "no fibre type for (ord c4, ord Delta) = ({ord_c4}, {ord_delta})")
            }
            Error::NotAnAutomorphism => {
                write!(f, "map does not preserve the surface equation up to a unit")
            }
            Error::OrderCapExceeded { cap } => {
                write!(f, "order not found within cap {cap}")
            }
            Error::NotAPower => write!(f, "conjugate is not a power of the given element"),
            Error::InvalidPermutation(msg) => write!(f, "invalid permutation: {msg}"),
            Error::BudgetExceeded { needed, budget } => {
                write!(f, "enumeration of {needed} elements exceeds budget {budget}")
            }
            Error::UnknownGroup(name) => write!(f, "unknown standard group: {name}"),
            Error::GroupValidation { name, detail } => {
                write!(f, "generator table for {name} failed validation: {detail}")
            }
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
