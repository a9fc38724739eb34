use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid quiver: {}", .0.join("; "))]
    InvalidQuiver(Vec<String>),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("arrow names starting with `*` are reserved for starred arrows: `{0}`")]
    ReservedName(String),
    #[error("elements live over different quivers")]
    MixedQuivers,
    #[error("bead `{0}` is starred; expected a plain arrow")]
    StarredArrow(String),
    #[error("word is not a composable closed path: {0}")]
    NotClosed(String),
    #[error("operation needs a one-vertex quiver")]
    MultiVertex,
    #[error("operation needs the one-vertex quiver with two loops")]
    NotPlane,
    #[error("expected star-degree {expected}, found {found}")]
    WrongStarDegree { expected: usize, found: usize },
    #[error("tensor is not homogeneous in weight")]
    NotHomogeneous,
    #[error("polynomial is not homogeneous")]
    NotHomogeneousPoly,
    #[error("tensor is not linear: {0}")]
    NotLinear(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("resource cap exceeded: {0}")]
    CapExceeded(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CapExceeded(_) => 3,
            _ => 2,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
