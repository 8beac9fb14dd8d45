use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("non-finite component in {what}")]
    NonFinite { what: &'static str },

    #[error("loop must have at least one vertex")]
    EmptyLoop,

    #[error("sampled field: {0}")]
    Field(String),

    #[error("point is not an interior sample of the field")]
    NotInterior,

    #[error("invalid geometry: {0}")]
    Geometry(String),

    #[error("structural loop is open: gap of {gap:.3e} after segment {segment}")]
    Open { segment: usize, gap: f64 },

    #[error("segment index {index} out of range (loop has {len} segments)")]
    SegmentIndex { index: usize, len: usize },

    #[error("cut parameter {param} outside [0, {max}] on segment {segment}")]
    CutParameter { segment: usize, param: f64, max: f64 },

    #[error("pressure p must be positive and finite, got {0}")]
    Pressure(f64),

    #[error("moment identity violated: |total - lever - internal| = {residual:.3e}")]
    Identity { residual: f64 },

    #[error("schema error at `{path}`: {message}")]
    Schema { path: String, message: String },

    #[error("csv line {line}: {message}")]
    Csv { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
