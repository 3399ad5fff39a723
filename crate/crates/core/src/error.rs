use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An exponential enumeration or matrix was asked to exceed its configured cap.
    #[error("resource cap exceeded: {what} ({size} > cap {cap})")]
    ResourceCap {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph is disconnected but the operation requires a connected graph")]
    Disconnected,

    #[error("unknown vertex name `{0}` for this family")]
    UnknownVertexName(String),

    #[error("invalid cut set: {0}")]
    InvalidCutSet(String),

    #[error("witness construction failed: {0}")]
    WitnessConstruction(String),

    #[error("malformed input: {0}")]
    Parse(String),

    /// A closed-form value and the oracle disagreed; the highest-severity outcome.
    #[error("internal disagreement: {0}")]
    Disagreement(String),
}
