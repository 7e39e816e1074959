use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative exponent {exp} not allowed on polynomial variable {var}")]
    LaurentViolation { var: String, exp: i64 },
    #[error("polynomial is not symmetric in x1..x{0}")]
    NotSymmetric(usize),
    #[error("degree {degree} exceeds number of variables r = {r}")]
    DegreeExceedsR { degree: u32, r: usize },
    #[error("variable {0} has no binding")]
    UnboundVariable(String),
    #[error("series has zero constant term and cannot be inverted")]
    NotInvertible,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("degree {degree} exceeds the guard of {max}")]
    DegreeTooLarge { degree: usize, max: usize },
    #[error("invalid chord diagram: {0}")]
    InvalidDiagram(String),
    #[error("gap index {gap} out of range for a diagram with {points} points")]
    InvalidGap { gap: usize, points: usize },

    #[error("edge ({0}, {1}) is not in the graph")]
    MissingEdge(usize, usize),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("graph has {0} vertices; canonical labelling is limited to {1}")]
    GraphTooLarge(usize, usize),
    #[error("weight table for color {color} does not cover class weight {weight}")]
    TableRange { color: usize, weight: u32 },
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("tensor oracle would need {needed} summands, above the limit of {limit}")]
    CostGuard { needed: u128, limit: u128 },

    #[error("malformed PD input: {0}")]
    MalformedPd(String),
    #[error("arc {0} does not occur exactly twice")]
    DanglingArc(u32),
    #[error("inconsistent orientation: {0}")]
    InconsistentOrientation(String),
    #[error("crossing {0} does not exist")]
    MissingCrossing(usize),
    #[error("component {0} does not exist")]
    InvalidComponent(usize),
    #[error("expected a knot, found {0} components")]
    NotAKnot(usize),
    #[error("coefficient of h^{order} is not a polynomial of degree <= {order} in n")]
    NotPolynomialInN { order: usize },

    #[error("x{0}: only odd indices are allowed")]
    EvenIndex(u32),
    #[error("I/O error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
