use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid triangulation: {0}")]
    BadTriangulation(String),

    #[error("invalid normal coordinates: {0}")]
    BadCoordinates(String),

    #[error("objects live on different surfaces")]
    SurfaceMismatch,

    #[error("empty input: {0}")]
    EmptyInput(String),

    #[error("search radius {radius} exhausted; verified lower bound {lower_bound}")]
    RadiusExceeded { radius: usize, lower_bound: usize },

    #[error("curve does not overlap the subsurface; projection is empty")]
    NoOverlap,

    #[error("elementary move out of range: {0}")]
    MoveTooFar(String),

    #[error("geodesic vertex fails to overlap the target subsurface")]
    VertexMissesY,

    #[error("tuple fails consistency: {0}")]
    InconsistentInput(String),

    #[error("enumeration could not be certified complete: {0}")]
    EnumerationIncomplete(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
