use thiserror::Error;

pub type Result<T> = std::result::Result<T, CoreError>;

/// A homomorphism axiom that failed during eager verification, with the
/// witnessing element pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomViolation {
    pub kind: HomViolationKind,
    /// Witness pair in the source ring (ignored for `Unital`).
    pub x: u32,
    pub y: u32,
    /// What the map produced and what the axiom demanded.
    pub got: u32,
    pub expected: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomViolationKind {
    Additive,
    Multiplicative,
    Unital,
}

impl std::fmt::Display for HomViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.kind {
            HomViolationKind::Additive => write!(
                f,
                "map({} + {}) = {} but map({}) + map({}) = {}",
                self.x, self.y, self.got, self.x, self.y, self.expected
            ),
            HomViolationKind::Multiplicative => write!(
                f,
                "map({} * {}) = {} but map({}) * map({}) = {}",
                self.x, self.y, self.got, self.x, self.y, self.expected
            ),
            HomViolationKind::Unital => {
                write!(f, "map(1) = {} instead of 1 = {}", self.got, self.expected)
            }
        }
    }
}

#[derive(Debug, Error)]
pub enum CoreError {
    #[error("ring order must be at least 2, got {0}")]
    InvalidOrder(u64),

    #[error("malformed ring data for `{label}`: {reason}")]
    MalformedRing { label: String, reason: String },

    #[error("`{found}` does not match the expected ring `{expected}`")]
    RingMismatch { expected: String, found: String },

    #[error("element index {index} is out of range for `{ring}` (order {order})")]
    ElementOutOfRange {
        ring: String,
        index: u32,
        order: usize,
    },

    #[error("ideal equals all of `{0}`; a proper ideal is required")]
    ImproperIdeal(String),

    #[error("module is over `{module_ring}`, not over `{base}`")]
    ModuleRingMismatch { module_ring: String, base: String },

    #[error("not a ring homomorphism from `{from}` to `{to}`: {violation}")]
    NotAHomomorphism {
        from: String,
        to: String,
        violation: HomViolation,
    },

    #[error("`{ring}` has order {order}, above the enumeration cap {cap}")]
    CapExceeded {
        ring: String,
        order: usize,
        cap: usize,
    },

    #[error("distributivity and local-chain tests disagree on `{0}`")]
    ArithmeticalPathsDisagree(String),

    #[error("property hierarchy violated on `{ring}`: {details}")]
    HierarchyViolation { ring: String, details: String },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("localization primes differ: {0} vs {1}")]
    PrimeMismatch(u64, u64),

    #[error("duplication parameters (prime, exponent) differ between operands")]
    DuplicationMismatch,

    #[error("valuation of zero is undefined")]
    ZeroValuation,

    #[error("sample element {0} must be a nonzero non-unit")]
    InvalidSample(String),
}
