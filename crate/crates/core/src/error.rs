use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    ZeroVertices,
    TooManyVertices {
        n: usize,
        max: usize,
    },
    EmptyEdge,
    LabelOutOfRange {
        label: usize,
        n: usize,
    },
    RepeatedLabel {
        label: usize,
    },
    DuplicateEdge(Vec<usize>),
    ArityTooLarge {
        r: usize,
        max: usize,
    },
    ArityExceedsOrder {
        r: usize,
        t: usize,
    },
    ArityTooSmall {
        r: usize,
        min: usize,
    },
    MissingLevel(usize),
    NotUniform {
        levels: Vec<usize>,
    },
    LengthMismatch {
        expected: usize,
        found: usize,
    },
    InvalidWeighting(String),
    NotOrderedPair {
        i: usize,
        j: usize,
    },
    EmptyHypergraph,
    QueryNotSubset {
        query: Vec<usize>,
        available: Vec<usize>,
    },
    EdgeTypeMismatch {
        expected: String,
        found: Vec<usize>,
    },
    EnumerationTooLarge {
        size: u128,
        cap: u64,
    },
    InvalidParameter(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroVertices => write!(f, "a hypergraph needs at least one vertex"),
            Error::TooManyVertices { n, max } => {
                write!(f, "{n} vertices requested, at most {max} supported")
            }
            Error::EmptyEdge => write!(f, "edges must be nonempty"),
            Error::LabelOutOfRange { label, n } => {
                write!(f, "vertex label {label} outside 1..={n}")
            }
            Error::RepeatedLabel { label } => write!(f, "vertex {label} repeated inside an edge"),
            Error::DuplicateEdge(e) => write!(f, "duplicate edge {e:?}"),
            Error::ArityTooLarge { r, max } => {
                write!(
                    f,
                    "edge cardinality {r} exceeds the supported maximum {max}"
                )
            }
            Error::ArityExceedsOrder { r, t } => {
                write!(f, "cardinality {r} exceeds the order {t}")
            }
            Error::ArityTooSmall { r, min } => write!(f, "cardinality {r} is below {min}"),
            Error::MissingLevel(r) => write!(f, "no edges of cardinality {r}"),
            Error::NotUniform { levels } => {
                write!(f, "expected exactly one edge cardinality, found {levels:?}")
            }
            Error::LengthMismatch { expected, found } => {
                write!(f, "weighting has length {found}, expected {expected}")
            }
            Error::InvalidWeighting(msg) => write!(f, "invalid weighting: {msg}"),
            Error::NotOrderedPair { i, j } => {
                write!(f, "compression needs i < j, got ({i}, {j})")
            }
            Error::EmptyHypergraph => write!(f, "hypergraph has no edges"),
            Error::QueryNotSubset { query, available } => {
                write!(
                    f,
                    "cardinalities {query:?} not all among edge types {available:?}"
                )
            }
            Error::EdgeTypeMismatch { expected, found } => {
                write!(
                    f,
                    "edge types {found:?} do not match the required {expected}"
                )
            }
            Error::EnumerationTooLarge { size, cap } => {
                write!(f, "enumeration of {size} points exceeds the cap {cap}")
            }
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
