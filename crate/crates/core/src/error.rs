use thiserror::Error;

use crate::covers::BalanceViolation;
use crate::morphism::CombinatorialWitness;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised by the toolkit. Element identifiers are carried as names so
/// that every error can be displayed without access to the originating poset.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("cover relation contains a cycle: {}", .0.join(" -> "))]
    CycleDetected(Vec<String>),
    #[error("cover ({lower}, {upper}) is implied by a longer chain of covers")]
    RedundantCover { lower: String, upper: String },
    #[error("poset is not graded: cover ({lower}, {upper}) has ranks {lower_rank} and {upper_rank}")]
    NotGraded {
        lower: String,
        upper: String,
        lower_rank: usize,
        upper_rank: usize,
    },
    #[error("supplied rank of `{element}` is {supplied}, computed rank is {computed}")]
    RankMismatch {
        element: String,
        supplied: usize,
        computed: usize,
    },
    #[error("codimension {k} is out of range for a poset of dimension {dim}")]
    CodimensionOutOfRange { k: usize, dim: usize },
    #[error("instance of size {size} exceeds the oracle bound {limit}")]
    OracleSizeExceeded { size: usize, limit: usize },
    #[error("map is not order-preserving on the cover ({lower}, {upper})")]
    NotMonotone { lower: String, upper: String },
    #[error("map has no image for `{0}`")]
    IncompleteMap(String),
    #[error("set is not an up-set: `{member}` lies below `{missing}`, which is absent")]
    NotUpSet { member: String, missing: String },
    #[error("index map has no value for `{0}`")]
    ValueMissing(String),
    #[error("index map assigns a value to `{0}` outside its domain")]
    ValueOutsideDomain(String),
    #[error("index value of `{0}` must be a positive integer")]
    InvalidIndexValue(String),
    #[error("index map is not defined on the whole source (missing `{0}`)")]
    PartialIndexMap(String),
    #[error("morphism is not combinatorial at `{}`", .0.element)]
    NotCombinatorial(Box<CombinatorialWitness>),
    #[error("index map is not balanced: {0}")]
    NotBalancedInput(BalanceViolation),
    #[error("maximal source element `{0}` is not in the domain of the index map")]
    MaxElementsUncovered(String),
    #[error("`{0}` is not in the domain of the index map")]
    NotInDomain(String),
    #[error("path is not strictly increasing at ({0}, {1})")]
    PathNotIncreasing(String, String),
    #[error("path starts at `{found}`, expected the image `{expected}`")]
    PathNotFromImage { expected: String, found: String },
    #[error("path leaves the image of the domain at `{0}`")]
    PathLeavesImage(String),
    #[error("consecutive path elements `{0}` and `{1}` are not comparable")]
    NotComparable(String, String),
    #[error("path is empty")]
    EmptyPath,
    #[error("restricted morphism is not combinatorial at `{}`", .0.element)]
    CorestrictionNotCombinatorial(Box<CombinatorialWitness>),
    #[error("no lift of `{target}` from `{from}`")]
    NoLiftExists { from: String, target: String },
    #[error("hypotheses hold but the conclusion fails: {0}")]
    TheoremViolation(String),
    #[error("face {{{}}} is not in the complex", .0.join(","))]
    FaceNotInComplex(Vec<String>),
    #[error("vertex `{0}` already exists")]
    VertexClash(String),
    #[error("face set is not closed under subsets: {{{}}} is missing", .0.join(","))]
    NotClosed(Vec<String>),
    #[error("empty face")]
    EmptyFace,
    #[error("edge `{0}` has non-positive length")]
    NonPositiveLength(String),
    #[error("edge `{0}` is a loop")]
    LoopEdge(String),
    #[error("point on edge `{edge}` at {position} is not strictly interior")]
    InvalidPoint { edge: String, position: String },
    #[error("edge `{edge}` stretches by {ratio}, which is not a positive integer")]
    SlopeNotIntegral { edge: String, ratio: String },
    #[error("edge `{edge}` declares slope {declared} but stretches by {actual}")]
    SlopeMismatch {
        edge: String,
        declared: u32,
        actual: String,
    },
    #[error("endpoint `{vertex}` of edge `{edge}` does not map to the end of the edge image")]
    EndpointMismatch { edge: String, vertex: String },
    #[error("edge `{0}` collapses to a point")]
    DegenerateImage(String),
    #[error("refined morphism is not combinatorial at `{0}`")]
    RefinementNotCombinatorial(String),
    #[error("malformed document: {0}")]
    Format(String),
    #[error("i/o error on `{path}`: {message}")]
    Io { path: String, message: String },
}
