use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error, PartialEq)]
pub enum Error {
    #[error("hyperedge {index} has {actual} distinct vertices, expected {expected}")]
    EdgeCardinality {
        index: usize,
        expected: usize,
        actual: usize,
    },
    #[error("hyperedge {index} contains vertex {vertex}, but n = {n}")]
    VertexOutOfRange { index: usize, vertex: u32, n: usize },
    #[error("hyperedges {first} and {second} are equal as sets")]
    DuplicateEdge { first: usize, second: usize },
    #[error("incidence index inconsistent at vertex {vertex}")]
    StaleIncidence { vertex: u32 },
    #[error("vertex {vertex} out of range (n = {n})")]
    SourceOutOfRange { vertex: usize, n: usize },
    #[error("step would produce {predicted} hyperedges, above the cap of {cap}")]
    EdgeCapExceeded { predicted: u128, cap: u64 },
    #[error("step would produce {predicted} vertices, above the addressable limit")]
    VertexOverflow { predicted: u128 },
    #[error("uniformity k = {k} is unsupported here: {reason}")]
    BadUniformity { k: usize, reason: &'static str },
    #[error("census would examine more than {cap} triples")]
    TripleCapExceeded { cap: u64 },
    #[error("brute-force census limited to {cap} hyperedges, got {m}")]
    BruteForceCapExceeded { m: usize, cap: usize },
    #[error("counter overflow in {what}")]
    CountOverflow { what: &'static str },
    #[error("binomial coefficient C({n}, {k}) does not fit in 128 bits")]
    BinomialOverflow { n: u64, k: u64 },
    #[error("matrix of order {n} exceeds the eigensolver cap of {cap}")]
    SpectrumCapExceeded { n: usize, cap: usize },
    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal mass {off:e})")]
    EigenNoConvergence { sweeps: usize, off: f64 },
    #[error("probability {value} outside [0, 1]")]
    BadProbability { value: f64 },
    #[error("homomorphism search budget of {budget} nodes exhausted")]
    BudgetExhausted { budget: u64 },
    #[error("map is not a homomorphism: edge ({u}, {v}) maps to a non-edge")]
    NotHomomorphism { u: u32, v: u32 },
    #[error("no cardinality vector realizes pattern {pattern} at k = {k}")]
    InfeasiblePattern { pattern: String, k: usize },
    #[error("{path}:{line}:{col}: {msg}")]
    Parse {
        path: String,
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("graph has {n} vertices and {m} edges, above the cap of {cap}")]
    GraphCapExceeded { n: usize, m: usize, cap: u64 },
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
