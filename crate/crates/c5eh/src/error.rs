//! Shared error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A caller-supplied argument violates a documented precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The input exceeds a hard size cap of an exhaustive routine.
    #[error("input has {n} vertices, limit is {max}")]
    SizeLimit { n: usize, max: usize },

    /// A digraph failed the outsimpliciality precondition; `a` and `b` are
    /// out-neighbors of `v` with no edge between them in either direction.
    #[error("not outsimplicial: out-neighbors {a} and {b} of vertex {v} are not adjacent")]
    NotOutsimplicial { v: usize, a: usize, b: usize },

    /// A graph required to be chordal is not; `hole` is an induced cycle of
    /// length at least four.
    #[error("not chordal: induced hole {hole:?}")]
    NotChordal { hole: Vec<usize> },

    /// A structure failed verification where a verified one was required.
    #[error("structure failed verification: {0}")]
    StructureRejected(String),

    /// A condition guaranteed by the underlying mathematics failed to hold;
    /// this always indicates a bug, never a bad input.
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
