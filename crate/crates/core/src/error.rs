use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension n must be at least 2 (got {0})")]
    DimensionTooSmall(u32),
    #[error("index r must exceed 1 (got {0})")]
    IndexNotAboveOne(String),
    #[error("branch proportionality l must satisfy 0 <= l < r + 1 (got l = {l}, r = {r})")]
    BranchOutOfRange { l: String, r: String },
    #[error("vol(V) must be positive (got {0})")]
    NonPositiveVolume(String),
    #[error("integration bounds reversed: lo = {lo} > hi = {hi}")]
    ReversedBounds { lo: String, hi: String },
    #[error("{what} is only defined for l = 2 (got l = {l})")]
    RequiresL2 { what: &'static str, l: String },
    #[error("neither horizontal divisor has negative beta (beta(V_0) = {beta_v0}, beta(V_inf) = {beta_vinf})")]
    NoDestabilizer { beta_v0: String, beta_vinf: String },
    #[error("m = {m} makes m*r non-integral; m must be a multiple of {stride}")]
    NonIntegralTwist { m: u64, stride: String },
    #[error("m must be positive")]
    ZeroLevel,
    #[error("base {base} does not realize the construction: {reason}")]
    BaseMismatch { base: String, reason: String },
    #[error("invalid base specification {0:?} (expected ps:<s>:<d> or p1p1:<d>)")]
    InvalidBase(String),
    #[error("cannot parse rational {0:?} (expected an integer or p/q)")]
    InvalidRational(String),
    #[error("catalog: {0}")]
    Catalog(String),
}
