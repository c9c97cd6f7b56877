use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("invalid rational coordinate `{0}` (expected `p` or `p/q`)")]
    Coord(String),
    #[error("invalid algorithm `{0}` (expected first-fit, kt, wasteful or seeded:<u64>)")]
    Algorithm(String),
    #[error("invalid strategy spec `{spec}`: {reason}")]
    Strategy { spec: String, reason: String },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("interval [{left}, {right}] must have positive length")]
    EmptyInterval { left: String, right: String },
    #[error("graph has {got} vertices, above the brute-force limit of {limit}")]
    SizeExceeded { got: usize, limit: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GameError {
    #[error("algorithm `{algorithm}` answered color {color} for vertex {vertex}, already used by neighbor {neighbor}")]
    IllegalColor {
        algorithm: String,
        vertex: usize,
        color: u32,
        neighbor: usize,
    },
    #[error("algorithm `{algorithm}` answered color 0 for vertex {vertex}; colors are positive")]
    ZeroColor { algorithm: String, vertex: usize },
    #[error("strategy `{strategy}` only makes claims against {scope}; refusing opponent `{algorithm}`")]
    OpponentScope {
        strategy: String,
        scope: String,
        algorithm: String,
    },
    #[error("step cap of {0} presentations exceeded")]
    MaxSteps(u64),
    #[error("invalid strategy parameters: {0}")]
    BadParameters(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {got} vertices; brute-force coloring is limited to {limit}")]
    TooManyVertices { got: usize, limit: usize },
    #[error("max_moves {got} exceeds the state-space guard of {limit}")]
    TooManyMoves { got: usize, limit: usize },
    #[error("clique cap {got} is outside the solvable range 1..={limit}")]
    CliqueCap { got: usize, limit: usize },
    #[error("invalid game spec: {0}")]
    BadSpec(String),
    #[error("search explored {0} nodes without finishing")]
    NodeBudget(u64),
}
