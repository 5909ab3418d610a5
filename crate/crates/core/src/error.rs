use thiserror::Error;

/// Unified error type for the whole crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("dataset is empty")]
    EmptyDataset,

    #[error("point {index}: non-finite value {value}")]
    NonFiniteValue { index: usize, value: f64 },

    #[error("unknown builtin dataset `{name}` (valid: {valid})")]
    UnknownBuiltin { name: String, valid: &'static str },

    #[error("model order must be at least 1 (got {order})")]
    InvalidOrder { order: usize },

    #[error("DCT domain maximum must be positive (got {x_max})")]
    InvalidDomain { x_max: f64 },

    #[error("DCT length must be at least 2 (got {n_dct})")]
    InvalidDctLength { n_dct: usize },

    #[error("underdetermined system: {n} points cannot pin {m} coefficients")]
    Underdetermined { n: usize, m: usize },

    #[error("normal matrix is singular")]
    SingularMatrix,

    #[error("operation requires a model with the {expected} link, found {found}")]
    WrongLink { expected: &'static str, found: &'static str },

    #[error("operation requires a {expected} dataset")]
    WrongKind { expected: &'static str },

    #[error("classification threshold must lie strictly between 0 and 1 (got {threshold})")]
    InvalidThreshold { threshold: f64 },

    #[error("baseline is degenerate: {msg}")]
    DegenerateBaseline { msg: String },

    #[error("invalid degrees of freedom: order {m} with {n} points")]
    InvalidDof { m: usize, n: usize },

    #[error("training diverged (non-finite coefficient) during epoch {epoch}")]
    Diverged { epoch: u64 },

    #[error("invalid training configuration: {msg}")]
    InvalidConfig { msg: String },

    #[error("{msg}")]
    Usage { msg: String },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// True for failures of the numerics themselves, as opposed to bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::SingularMatrix | Error::Diverged { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
