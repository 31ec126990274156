use thiserror::Error;

/// Errors raised by graph construction, parsing and the search routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("enumeration cap of {cap} elements exceeded")]
    CapExceeded { cap: usize },
    #[error("input is not a graph (loops or unpaired arcs present)")]
    NotAGraph,
    #[error("input is not bipartite")]
    NotBipartite,
    #[error("input is bipartite")]
    Bipartite,
    #[error("input is not connected")]
    NotConnected,
    #[error("input is not a strongly bipartite digraph")]
    NotStronglyBipartite,
    #[error("invalid involution: {0}")]
    InvalidInvolution(String),
    #[error("pair of maps is not a two-fold isomorphism")]
    NotTfMap,
    #[error("malformed bipartition: {0}")]
    MalformedBipartition(String),
    #[error("subset is not closed under conjugation")]
    NotConjugationClosed,
    #[error("arc sequence is not an alternating trail")]
    NotATrail,
}

pub type Result<T> = std::result::Result<T, Error>;
