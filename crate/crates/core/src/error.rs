use thiserror::Error;

/// Errors reported by graph, matrix, and code construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The modulus was zero; `Z_0` has no residues to factor or classify.
    #[error("n must be ≥ 1")]
    ZeroModulus,

    /// Graphs and codes need at least two residues.
    #[error("n must be ≥ 2")]
    ModulusTooSmall,

    /// Field moduli must be prime.
    #[error("q must be prime, got {0}")]
    NotPrime(u64),

    /// Matrix dimensions do not allow the requested operation.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A matrix entry was not a residue mod q.
    #[error("entry {value} is not reduced mod {q}")]
    EntryOutOfRange { value: u64, q: u64 },

    /// Edge connectivity is defined here only for connected graphs.
    #[error("graph is not connected")]
    NotConnected,

    /// An incidence matrix needs at least one edge.
    #[error("graph has no edges")]
    NoEdges,
}
