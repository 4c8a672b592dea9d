use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("valuation must be positive, got ({0}, {1})")]
    NonPositiveValuation(u32, u32),

    #[error("arrow {src}->{tgt}: explicit valuation mixed with parallel arrows")]
    AmbiguousArrow { src: usize, tgt: usize },

    #[error("sign vector has length {got}, expected {expected}")]
    SignLength { got: usize, expected: usize },

    #[error("sign entries must be +1 or -1, got {0}")]
    BadSign(i64),

    #[error("quiver has a loop at vertex {0}")]
    Loop(usize),

    #[error("quiver has a 2-cycle between {0} and {1}")]
    TwoCycle(usize, usize),

    #[error("quiver has an oriented cycle")]
    OrientedCycle,

    #[error("graph is not connected")]
    Disconnected,

    #[error("empty sign vector space (n = 0)")]
    ZeroVertices,

    #[error("vertex {0} is not a sink")]
    NotASink(usize),

    #[error("sign vector is not a source/sink witness: arrow {0}->{1}")]
    NotBipartiteWitness(usize, usize),

    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("not a disjoint union of simply-laced type A paths: {0}")]
    NotTypeA(String),

    #[error("{0} is not an interval module of this quiver")]
    NotAnInterval(String),

    #[error("unsupported component type at eps={eps}: {reason}")]
    UnsupportedComponent { eps: String, reason: String },

    #[error("Brauer {kind} needs n >= 1")]
    BrauerSize { kind: &'static str },

    #[error("Brauer cycle with even n = {0} is not tau-tilting-finite")]
    EvenCycle(usize),

    /// A computed quantity contradicted a structural guarantee.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
