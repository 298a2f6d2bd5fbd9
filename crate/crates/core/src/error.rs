use alloc::string::String;

/// Errors raised by the algebraic routines.
///
/// Contract errors (`NotAnIdeal`, `NotASubalgebra`, ...) mean a precondition
/// of the called operation did not hold. `Certificate` means an internal
/// postcondition check failed, which always indicates a bug.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("structure constants do not define a Lie algebra: {0}")]
    InvalidAlgebra(String),
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("subspace is not a subalgebra")]
    NotASubalgebra,
    #[error("subspace is not an abelian ideal")]
    NotAbelianIdeal,
    #[error("action is not a homomorphism into derivations: {0}")]
    InvalidAction(String),
    #[error("module is not completely reducible")]
    NotCompletelyReducible,
    #[error("Killing form is degenerate")]
    DegenerateKillingForm,
    #[error("algebra is not Frattini-free")]
    NotFrattiniFree,
    #[error("isomorphism witness rejected: {0}")]
    WitnessInvalid(String),
    #[error("the zero polynomial has no factorization")]
    ZeroPolynomial,
    #[error("family has {members} members, above the completion bound {bound}")]
    FamilyTooLarge { members: usize, bound: usize },
    #[error("subspace is not a member of the family")]
    NotInFamily,
    #[error("preradical `{0}` returned a subspace that is not an ideal")]
    PreradicalContract(String),
    #[error("certificate check failed: {0}")]
    Certificate(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
