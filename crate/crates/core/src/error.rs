use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("numerical rank deficiency: {defects} pivots below threshold")]
    NumericalRankDeficiency { defects: usize },
    #[error("no convergence after {iterations} iterations ({detail})")]
    NoConvergence { iterations: usize, detail: String },
    #[error("singular jacobian")]
    SingularJacobian,
    #[error("quadrature tolerance not reached: estimate error {achieved:e}")]
    ToleranceNotReached { achieved: f64 },
    #[error("multiplicity count mismatch: got {got}, expected n1+n2+1 = {expected}")]
    CountMismatch { got: usize, expected: usize },
    #[error("degenerate scheme: {0}")]
    DegenerateScheme(String),
    #[error("point lies on the cut")]
    OnCut,
    #[error("evaluation at a pole")]
    PoleHit,
    #[error("trajectory trace stalled at {0}")]
    TraceStalled(String),
    #[error("level-set corrector jumped branches (|Re eta| = {0:e})")]
    BranchConfusion(f64),
    #[error("non-real measure weight (imaginary part {0:e})")]
    NonRealWeight(f64),
    #[error("point is in the wrong region for this formula: {0}")]
    WrongRegion(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
