use thiserror::Error;

/// Errors surfaced by model construction, quadrature, assembly and eigensolves.
#[derive(Error, Debug)]
pub enum EdgecondError {
    #[error("unknown model name `{0}`")]
    UnknownModel(String),

    #[error("non-finite input: {0}")]
    NonFinite(&'static str),

    #[error("matrix is not Hermitian: defect {defect:.3e} exceeds tolerance {tol:.3e}")]
    NotHermitian { defect: f64, tol: f64 },

    #[error("bulk gap violated at (xi, zeta) = ({xi}, {zeta}): min |eigenvalue| {min_eig:.6e} < declared half-width {declared:.6e}")]
    GapViolation {
        xi: f64,
        zeta: f64,
        min_eig: f64,
        declared: f64,
    },

    #[error("Newton iteration failed to converge from seeds near cell centred at ({0}, {1}, {2})")]
    NewtonFailure(f64, f64, f64),

    #[error("singular Jacobian at zero ({0}, {1}, {2}): |det| below regular-value threshold")]
    SingularJacobian(f64, f64, f64),

    #[error("symbol has a non-constant scalar (identity) component; not reducible to a traceless Pauli field")]
    NonTracelessSymbol,

    #[error("quadrature unresolved: {0}")]
    QuadratureUnresolved(String),

    #[error("dimension {dim} exceeds guard {guard} for {what}")]
    DimensionGuard {
        dim: usize,
        guard: usize,
        what: &'static str,
    },

    #[error("eigensolver could not certify window completeness: found {found} eigenpairs, inertia count {expected}")]
    CompletenessFailure { found: usize, expected: usize },

    #[error("LAPACK routine {routine} failed with info = {info}")]
    Lapack { routine: &'static str, info: i32 },

    #[error("operator assembly rejected: {0}")]
    UnsupportedOperator(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("perturbation support overlaps supp(1-Q); not admissible for a certified stability run")]
    PerturbationSupport,

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, EdgecondError>;
