//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown {facet} token `{token}`")]
    UnknownFacet { facet: &'static str, token: String },

    #[error("persona tuple already registered as `{0}`")]
    DuplicatePersona(String),

    #[error("persona not found: {0}")]
    PersonaNotFound(String),

    #[error("persona registry is empty")]
    EmptyRegistry,

    #[error("duplicate doc id: {0}")]
    DuplicateDoc(String),

    #[error("corpus is empty")]
    EmptyCorpus,

    #[error("k={k} exceeds registry size {size}")]
    KTooLarge { k: usize, size: usize },

    #[error("debate requires at least two agents, got {0}")]
    DebateTooSmall(usize),

    #[error("relay requires a chain of at least two agents, got {0}")]
    RelayTooShort(usize),

    #[error("{rankings} rankings but {weights} weights")]
    WeightMismatch { rankings: usize, weights: usize },

    #[error("agent step failed for persona {persona}: {reason}")]
    AgentStep { persona: String, reason: String },

    #[error("memory update carries no provenance")]
    MissingProvenance,

    #[error("logged propensity must be positive, got {0}")]
    NonPositivePropensity(f64),

    #[error("off-policy estimate undefined: {0}")]
    UndefinedEstimate(&'static str),

    #[error("reward must be finite, got {0}")]
    NonFiniteReward(f64),

    #[error("feature dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("unknown experiment kind: {0}")]
    UnknownExperiment(String),

    #[error("session not found: {0}")]
    SessionNotFound(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("backend error: {0}")]
    Backend(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
