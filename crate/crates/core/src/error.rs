use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("not simply laced: {0}")]
    NotSimplyLaced(String),
    #[error("underlying graph is not of type A, D or E: {0}")]
    NotADE(String),
    #[error("window class of mixed sign at slot ({vertex}, {step})")]
    MixedSignClass { vertex: usize, step: usize },
    #[error("pair is not l-dominant")]
    NotDominant,
    #[error("triangular decomposition failed: {0}")]
    DecompositionFailure(String),
    #[error("vector is not in the positive cone W+: {0}")]
    NotInWPlus(String),
    #[error("unsupported input: {0}")]
    NotSupported(String),
    #[error("object is not an indecomposable module: {0}")]
    NotIndecomposable(String),
    #[error("serre relation arguments do not match an adjacency case: {0}")]
    NotAdjacentCaseMismatch(String),
    #[error("requested degree {requested} exceeds the cap {cap}")]
    DegreeTooLarge { requested: usize, cap: usize },
    #[error("structural and brute-force enumerations disagree: {0}")]
    EnumerationMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
