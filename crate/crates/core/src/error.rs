use thiserror::Error;

/// Every failure the kernel can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero polynomial has no well-defined root set")]
    ZeroPolynomial,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported parameter: {0}")]
    UnsupportedParameter(String),
    #[error("consistency failure: {0}")]
    ConsistencyFailure(String),
    #[error("construction failure: {0}")]
    ConstructionFailure(String),
    #[error("normalization failure: {0}")]
    NormalizationFailure(String),
    #[error("not a root: {0}")]
    NotARoot(String),
    #[error("unsupported family for this operation: {0}")]
    UnsupportedFamily(String),
    #[error("degenerate parameter: {0}")]
    DegenerateParameter(String),
    #[error("map is not an involution: {0}")]
    NotInvolution(String),
    #[error("lambda violates reality constraints: {0}")]
    BadLambda(String),
    #[error("compactness failure: {0}")]
    CompactnessFailure(String),
    #[error("algebra is not of type I: {0}")]
    NotTypeI(String),
    #[error("vector not in the expected grade: {0}")]
    WrongGrade(String),
    #[error("identity failure: {0}")]
    IdentityFailure(String),
    #[error("positivity failure: {0}")]
    PositivityFailure(String),
    #[error("centralizer of the sl2-triple is abelian for {0}")]
    AbelianGNatural(String),
    #[error("vector not in the expected subspace: {0}")]
    WrongSubspace(String),
    #[error("level {0} is a pole (k = -h^vee)")]
    PoleAtLevel(String),
    #[error("level {0} is its own partner")]
    SelfPartner(String),
    #[error("d * h^vee = 0; partner levels undefined")]
    ZeroProduct,
    #[error("empty unitary set for {0}")]
    EmptySet(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
