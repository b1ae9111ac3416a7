use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report.
///
/// Variants fall into three families, mirrored by [`Error::exit_code`]:
/// input/validation problems, exhausted search budgets, and outcomes that
/// would contradict one of the structure theorems the crate verifies.
#[derive(Debug, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u32),
    #[error("modulus {0:?} is reducible over the prime field")]
    ReducibleModulus(Vec<u32>),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("field of order {p}^{m} is too large")]
    FieldTooLarge { p: u32, m: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("element code {code} does not belong to a field of order {order}")]
    FieldMismatch { code: u32, order: u32 },

    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("unknown group description `{0}`")]
    UnknownGroup(String),

    #[error("invalid crossed system: {0}")]
    InvalidSystem(String),
    #[error("lambda vanishes at group element {0}")]
    ZeroLambdaEntry(usize),
    #[error("lambda must map the identity to 1")]
    LambdaNotNormalized,
    #[error("operation requires a trivial field action (sigma = 0)")]
    SkewActionUnsupported,
    #[error("elements belong to different systems")]
    SystemMismatch,

    #[error("search for {what} needs {needed} steps, budget is {budget}")]
    BudgetExceeded { what: &'static str, needed: u128, budget: u128 },

    #[error("the zero code has no minimum distance")]
    ZeroCode,
    #[error("code is not linear over the coefficient field")]
    NotKLinear,
    #[error("ideal is not one-dimensional over the coefficient field")]
    NotOneDimensional,
    #[error("extremal decomposition failed: {0}")]
    DecompositionFailed(String),
    #[error("could not extract a scalar action: {0}")]
    ScalarExtractionFailed(String),
    #[error("ideal is not invariant under the scalar action: {0}")]
    NotScalarInvariant(String),
    #[error("transport plan is inconsistent: {0}")]
    PlanInconsistent(String),
    #[error("abelian reduction stalled: {0}")]
    ReductionStalled(String),

    #[error("malformed input: {0}")]
    Input(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn budget(what: &'static str, needed: u128, budget: u128) -> Self {
        Error::BudgetExceeded { what, needed, budget }
    }

    /// Process exit code used by the command-line tool: 1 for a violated
    /// theorem instance, 2 for bad input, 3 for an exhausted budget.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::BudgetExceeded { .. } => 3,
            Error::DecompositionFailed(_)
            | Error::ScalarExtractionFailed(_)
            | Error::ReductionStalled(_) => 1,
            _ => 2,
        }
    }
}
