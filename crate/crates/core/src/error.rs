use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Geometric and analytic failure modes. Parse failures live in
/// [`crate::problem::ParseError`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("constraint {index} has zero normal vector")]
    ZeroNormal { index: usize },
    #[error("feasible region is empty")]
    EmptyRegion,
    #[error("feasible region is unbounded toward {direction_deg:.3} degrees")]
    UnboundedRegion { direction_deg: f64 },
    #[error("feasible region degenerates to {extreme_points} extreme point(s); a polygon needs 3")]
    DegenerateRegion { extreme_points: usize },
    #[error("chain (start {start}, count {count}) is invalid for a polygon with {n} vertices")]
    InvalidChain { start: usize, count: usize, n: usize },
    #[error("zero vector has no polar angle")]
    ZeroVector,
    #[error("zero direction")]
    ZeroDirection,
    #[error("objective bundle needs at least 2 gradients, got {count}")]
    BundleTooSmall { count: usize },
    #[error("objective gradient {index} is the zero vector")]
    ZeroGradient { index: usize },
    #[error("gradient cone spans {spread_deg:.3} degrees, which is not pointed (needs < 180)")]
    WideCone { spread_deg: f64 },
    #[error("argmax ties across non-adjacent vertices {a} and {b}; tolerance is too coarse")]
    NonAdjacentTie { a: usize, b: usize },
    #[error("convex combination vanishes at delta = {delta}; the generators are opposite")]
    DegenerateCombination { delta: f64 },
    #[error("objective is normal to edge ({a}, {b}); its optimum is that edge, not a vertex")]
    EdgeOptimal { a: usize, b: usize },
    #[error("angle {angle_deg:.3} degrees lies outside the open tolerance interval")]
    AngleOutOfTolerance { angle_deg: f64 },
    #[error("expected {expected} extra angles for k = {k}, got {got}")]
    AngleArityMismatch { k: usize, expected: usize, got: usize },
    #[error("point ({x}, {y}) is not feasible")]
    InfeasiblePoint { x: f64, y: f64 },
    #[error("weight vector must have nonnegative components summing to 1")]
    InvalidWeightVector,
}
