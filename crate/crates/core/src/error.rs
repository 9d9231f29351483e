use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: duplicate corner `{token}`")]
    DuplicateCorner { line: usize, token: String },

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("vertex budget of {0} exceeded")]
    BudgetExceeded(usize),

    #[error("`{0}` and `{1}` lie in different components")]
    Disconnected(String, String),

    #[error("`{0}` -> `{1}` is not an edge")]
    InvalidStep(String, String),

    #[error("wall {wall} leaves {components} components after removing its edges")]
    SeparationFailure { wall: usize, components: usize },

    #[error("carrier vertex `{vertex}` lies on {count} edges dual to wall {wall}")]
    AmbiguousDualEdge {
        wall: String,
        vertex: String,
        count: usize,
    },

    #[error("not a bijection: {0}")]
    NotBijection(String),

    #[error("edge `{0}` -- `{1}` is not mapped to an edge")]
    EdgeNotPreserved(String, String),

    #[error("square [{}] is not mapped to a square", .0.join(" "))]
    SquareNotPreserved(Vec<String>),

    #[error("`{0}` leaves the materialized region")]
    RegionExceeded(String),

    #[error("concatenated axis repeats a wall at power {0}")]
    GeodesicFailure(usize),

    #[error("window is not invariant: {0}")]
    WindowNotInvariant(String),

    #[error("window too short to determine the induced index map")]
    WindowTooShort,

    #[error("automorphism is not hyperbolic: {0}")]
    NotHyperbolic(String),

    #[error("invalid wallspace: {0}")]
    Wallspace(String),

    #[error("map does not preserve walls: {0}")]
    WallNotPreserved(String),

    #[error("word does not compose to the target map at `{0}`")]
    CompositionMismatch(String),

    #[error("{0}")]
    Precondition(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
