//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("zero polynomial has no unit normalization")]
    ZeroPolynomial,

    #[error("cannot parse polynomial {input:?}: {reason}")]
    PolynomialParse { input: String, reason: String },

    #[error("exact division failed: {0}")]
    InexactDivision(String),

    #[error("matrix is not square ({rows} rows, row {bad} has {len} entries)")]
    NotSquare { rows: usize, bad: usize, len: usize },

    #[error("not a knot Seifert matrix: size {0} is odd")]
    OddSize(usize),

    #[error("not a knot Seifert matrix: det(V - V^T) = {0}, expected 1")]
    NotUnimodularPairing(String),

    #[error("congruence matrix is not unimodular: det = {0}")]
    NotUnimodular(String),

    #[error("matrix size mismatch: have {have}, expected {expected}")]
    SizeMismatch { have: usize, expected: usize },

    #[error("destabilization pattern violated at entry ({row},{col}) = {value}")]
    DestabilizePattern {
        row: usize,
        col: usize,
        value: String,
    },

    #[error("not a block extension: {0}")]
    NotBlockExtension(String),

    #[error("invalid move at position {position}: {reason}")]
    BadMove { position: usize, reason: String },

    #[error("cannot parse braid word {input:?}: {reason}")]
    BraidParse { input: String, reason: String },

    #[error("generator index {index} out of range for {strands} strands")]
    BadGenerator { index: i64, strands: usize },

    #[error("braid closure has {components} components, expected a knot")]
    NotAKnotClosure { components: usize },

    #[error("not a knot surface: {0} bands on {1} strands")]
    NotAKnotSurface(usize, usize),

    #[error("Burau identity violated: {0}")]
    BurauIdentity(String),

    #[error("cannot parse planar diagram {input:?}: {reason}")]
    PdParse { input: String, reason: String },

    #[error("arc {arc} occurs {count} times, expected exactly 2")]
    ArcMultiplicity { arc: usize, count: usize },

    #[error("inconsistent orientation at arc {arc}: {reason}")]
    InconsistentOrientation { arc: usize, reason: String },

    #[error("diagram is not realizable in the plane: {faces} faces for {crossings} crossings")]
    NotPlanar { faces: usize, crossings: usize },

    #[error("malformed twist site {site}: {reason}")]
    MalformedTwistSite { site: usize, reason: String },

    #[error(
        "state sum over {crossings} crossings exceeds the cap of {cap}; \
         raise it with --max-crossings"
    )]
    CapExceeded { crossings: usize, cap: usize },

    #[error("Alexander oracles disagree for {id}: {detail}")]
    OracleDisagreement { id: String, detail: String },

    #[error("invalid presentation: {0}")]
    BadPresentation(String),

    #[error("unknown target knot {0:?}: not in the bundled table")]
    UnknownTarget(String),

    #[error("missing sublink assignment for {0}")]
    MissingSublink(String),

    #[error("invalid surgery slope: {0}")]
    BadSlope(String),

    #[error("admissible link violation: {0}")]
    NotAdmissible(String),

    #[error("table row {row}: {reason}")]
    TableRow { row: usize, reason: String },

    #[error("{0}")]
    Io(#[from] std::io::Error),

    #[error("{0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
