use thiserror::Error;

/// Every domain failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot pad a partition of size {size} with first part {first} to n = {n}; need n >= {needed}")]
    PadTooSmall {
        size: usize,
        first: usize,
        n: usize,
        needed: usize,
    },

    #[error("characteristic {0} is neither 0 nor prime")]
    InvalidCharacteristic(u32),

    #[error("{what} = {value} exceeds the cap {cap} (pass --override-caps to lift it)")]
    SizeCapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error("series order {value} exceeds the cap {cap}")]
    SeriesCapExceeded { value: usize, cap: usize },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("class function is not a virtual character: <f, chi^{partition}> = {value}")]
    NotVirtualCharacter { partition: String, value: String },

    #[error("{0} is not a partition of the class function's degree")]
    InvalidCycleType(String),

    #[error("total degree must be at least 1")]
    ZeroDegree,

    #[error("sequence is not strictly increasing with a non-negative start: {0}")]
    NotStrictlyIncreasing(String),

    #[error("parameter outside the supported range: {0}")]
    ParamOutOfTheoremRange(String),

    #[error(
        "k = {k} < d - 1 = {bound}: low-degree regime, where H^k(PConf(M)) is isomorphic to H^k(M^n) as FI-modules"
    )]
    LowDegreeRegime { k: u64, bound: u64 },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("variable X{index} is not allowed in characteristic {characteristic}")]
    DisallowedVariable { index: usize, characteristic: u32 },
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::PadTooSmall { .. } => "PadTooSmall",
            Error::InvalidCharacteristic(_) => "InvalidCharacteristic",
            Error::SizeCapExceeded { .. } => "SizeCapExceeded",
            Error::SeriesCapExceeded { .. } => "SeriesCapExceeded",
            Error::SizeMismatch { .. } => "SizeMismatch",
            Error::NotVirtualCharacter { .. } => "NotVirtualCharacter",
            Error::InvalidCycleType(_) => "InvalidCycleType",
            Error::ZeroDegree => "ZeroDegree",
            Error::NotStrictlyIncreasing(_) => "NotStrictlyIncreasing",
            Error::ParamOutOfTheoremRange(_) => "ParamOutOfTheoremRange",
            Error::LowDegreeRegime { .. } => "LowDegreeRegime",
            Error::InvalidParams(_) => "InvalidParams",
            Error::DisallowedVariable { .. } => "DisallowedVariable",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
