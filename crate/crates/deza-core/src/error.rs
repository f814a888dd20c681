//! Shared error type for the whole crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph has {0} vertices, exceeding the supported maximum of {1}")]
    TooManyVertices(usize, usize),

    #[error("graph needs at least 2 vertices, got {0}")]
    TooFewVertices(usize),

    #[error("vertex index {index} out of range for graph on {n} vertices")]
    VertexOutOfRange { index: usize, n: usize },

    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),

    #[error("permutation is not a bijection on 0..{0}")]
    NotAPermutation(usize),

    #[error("permutation acts on {perm} points but graph has {n} vertices")]
    PermutationSizeMismatch { perm: usize, n: usize },

    #[error("permutation is not an involution")]
    NotAnInvolution,

    #[error("permutation is not an automorphism of the graph")]
    NotAnAutomorphism,

    #[error("involution swaps the adjacent pair ({0}, {1}); dual Seidel switching requires every moved pair to be non-adjacent")]
    SwapsAdjacentPair(usize, usize),

    #[error("graphs have different vertex counts: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("malformed graph6 input: {0}")]
    BadGraph6(String),

    #[error("graph6 encoding supports at most 62 vertices, got {0}")]
    Graph6TooLarge(usize),

    #[error("malformed edge list: {0}")]
    BadEdgeList(String),

    #[error("malformed cycle notation {input:?}: {reason}")]
    BadCycleNotation { input: String, reason: String },

    #[error("operation needs a graph of kind {expected}, but classification gave {found}")]
    WrongKind { expected: String, found: String },

    #[error("report does not match the supplied graph: {0}")]
    ReportMismatch(String),

    #[error("degenerate parameters: {0}")]
    DegenerateParams(String),

    #[error("invalid family parameters: {0}")]
    InvalidFamilyParams(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("field order {0} exceeds the supported maximum of 65536")]
    FieldTooLarge(u64),

    #[error("field element {element} out of range for GF({q})")]
    FieldElementOutOfRange { element: u64, q: u64 },

    #[error("cyclotomic scheme undefined for q = {q}: {reason}")]
    SchemeUndefined { q: u64, reason: String },

    #[error("scheme invariant violated for q = {q}: {detail}")]
    SchemeInvariant { q: u64, detail: String },

    #[error("no unique solution of L^2 + 27 M^2 = 4q for q = {0}")]
    DiophantineFailure(u64),

    #[error("connection set is invalid: {0}")]
    BadConnectionSet(String),

    #[error("{0} is outside the enumeration budget ({1})")]
    Budget(usize, String),

    #[error("stored census for n = {n} at {path} disagrees with the recomputed one: {detail}")]
    CensusMismatch {
        n: usize,
        path: String,
        detail: String,
    },

    #[error("spectral computation failed: {0}")]
    Spectral(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

impl Error {
    /// Short machine-readable tag naming the error variant, used by the CLI
    /// for its `{"error": ..., "detail": ...}` output.
    pub fn tag(&self) -> &'static str {
        match self {
            Error::TooManyVertices(..) => "too_many_vertices",
            Error::TooFewVertices(..) => "too_few_vertices",
            Error::VertexOutOfRange { .. } => "vertex_out_of_range",
            Error::SelfLoop(..) => "self_loop",
            Error::NotAPermutation(..) => "not_a_permutation",
            Error::PermutationSizeMismatch { .. } => "permutation_size_mismatch",
            Error::NotAnInvolution => "not_an_involution",
            Error::NotAnAutomorphism => "not_an_automorphism",
            Error::SwapsAdjacentPair(..) => "swaps_adjacent_pair",
            Error::SizeMismatch(..) => "size_mismatch",
            Error::BadGraph6(..) => "bad_graph6",
            Error::Graph6TooLarge(..) => "graph6_too_large",
            Error::BadEdgeList(..) => "bad_edge_list",
            Error::BadCycleNotation { .. } => "bad_cycle_notation",
            Error::WrongKind { .. } => "wrong_kind",
            Error::ReportMismatch(..) => "report_mismatch",
            Error::DegenerateParams(..) => "degenerate_params",
            Error::InvalidFamilyParams(..) => "invalid_family_params",
            Error::NotPrime(..) => "not_prime",
            Error::NotPrimePower(..) => "not_prime_power",
            Error::FieldTooLarge(..) => "field_too_large",
            Error::FieldElementOutOfRange { .. } => "field_element_out_of_range",
            Error::SchemeUndefined { .. } => "scheme_undefined",
            Error::SchemeInvariant { .. } => "scheme_invariant",
            Error::DiophantineFailure(..) => "diophantine_failure",
            Error::BadConnectionSet(..) => "bad_connection_set",
            Error::Budget(..) => "budget",
            Error::CensusMismatch { .. } => "census_mismatch",
            Error::Spectral(..) => "spectral",
            Error::Io(..) => "io",
            Error::Serde(..) => "serde",
        }
    }
}
