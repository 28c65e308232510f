use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid character {found:?} at position {position}; expected one of a, b, c, A, B, C")]
    Parse { position: usize, found: char },
    #[error("no root of identity")]
    IdentityHasNoRoot,
    #[error("W-words are nontrivial")]
    TrivialWWord,
    #[error("operation requires a nontrivial element")]
    IdentityInput,
    #[error("base length must be at least 1")]
    InvalidBaseLength,
    #[error("index n must be at least 1")]
    InvalidIndex,
    #[error("max power must be at least 1")]
    InvalidMaxPower,
    #[error("{0} is not in F(a,b)")]
    NotCFree(String),
    #[error("vertex {vertex} does not lie on the X-geodesic from {from} to {to}")]
    NotOnGeodesic {
        vertex: String,
        from: String,
        to: String,
    },
    #[error("path must have at least one vertex")]
    EmptyPath,
    #[error("radius must be at least 1")]
    InvalidRadius,
    #[error("census report is incomplete; root structure needs the full member set")]
    IncompleteCensus,
    #[error("members {first} and {second} have different primitive roots ({first_root} vs {second_root})")]
    RootMismatch {
        first: String,
        second: String,
        first_root: String,
        second_root: String,
    },
    #[error("member {member} has exponent {exponent} beyond cap {cap}")]
    ExponentTooLarge {
        member: String,
        exponent: i64,
        cap: u64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
