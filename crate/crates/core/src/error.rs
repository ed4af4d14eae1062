use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("specialization pole")]
    SpecializationPole,

    #[error("unassigned variable `{0}` in substitution")]
    UnassignedVariable(&'static str),

    #[error("operands belong to different algebras")]
    MixedAlgebras,

    #[error("pair {0} is already normal")]
    AlreadyNormal(String),

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("odd size {0}; an even dimension is required")]
    OddSize(usize),

    #[error("malformed partition: {0}")]
    MalformedPartition(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("unsupported size {size} for `{identity}` (positive, even for Pfaffian identities, at most {cap} unless the cap is lifted)")]
    UnsupportedSize {
        identity: String,
        size: usize,
        cap: usize,
    },

    #[error("identity `{identity}` is not defined in the {regime} regime")]
    UnsupportedRegime { identity: String, regime: String },

    #[error("algebra is not commutative at these parameters")]
    NotCommutative,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
