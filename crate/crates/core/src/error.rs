use thiserror::Error;

/// Every failure the library reports.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("label {0} is below 2")]
    LabelTooSmall(u32),
    #[error("conflicting labels for pair {0} {1}")]
    ConflictingEdge(String, String),
    #[error("rank {rank} exceeds the limit {limit}")]
    RankLimit { rank: usize, limit: usize },
    #[error("subset is not irreducible")]
    NotIrreducible,
    #[error("subset is not spherical")]
    NotSpherical,
    #[error("subset is not of family {0}")]
    WrongFamily(&'static str),
    #[error("more than {0} small roots")]
    RootCap(usize),
    #[error("coset enumeration exceeded {0} cosets")]
    CosetCap(usize),
    #[error("group order exceeds the brute-force cap {0}")]
    BruteCap(usize),
    #[error("{0} is not admissible for the given subset")]
    NotAdmissible(String),
    #[error("not a base: {0}")]
    NotBase(String),
    #[error("blow-up hypothesis fails: {0}")]
    BlowupHypothesis(String),
    #[error("lineage does not match: {0}")]
    ForeignLineage(String),
    #[error("matching precondition fails: {0}")]
    MatchPrecondition(String),
    #[error("base of type A5 has an isomorphic match that may twist subbases")]
    A5Obstruction,
    #[error("subbase of type C2 does not match a subbase under an order-halving relation")]
    C2Exclusion,
    #[error("not an edge with label at least 4: {0}")]
    NotHeavyEdge(String),
    #[error("invalid twist: {0}")]
    InvalidTwist(String),
    #[error("not a c-minimal separating subset: {0}")]
    NotCMinimal(String),
    #[error("edge groups are not conjugate: {0}")]
    NonConjugateEdges(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
