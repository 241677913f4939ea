use thiserror::Error;

/// Errors raised by the engine. Format errors live in [`crate::format::FormatError`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degree out of range [0,1]: {0}")]
    DegreeOutOfRange(f64),

    #[error("universe is empty")]
    EmptyUniverse,

    #[error("duplicate name `{0}`")]
    DuplicateName(String),

    #[error("fuzzy sets are defined over different universes")]
    UniverseMismatch,

    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),

    #[error("unknown place `{0}`")]
    UnknownPlace(String),

    #[error("unknown transition `{0}`")]
    UnknownTransition(String),

    #[error("unknown word `{0}`")]
    UnknownWord(String),

    #[error("unknown state `{0}`")]
    UnknownState(String),

    #[error("membership vector has {found} entries, universe has {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("transition `{0}` is not enabled")]
    TransitionDisabled(String),

    #[error("reachability budget exceeded ({0} markings)")]
    ReachabilityBudgetExceeded(usize),

    #[error("string length {len} exceeds the oracle depth bound {bound}")]
    DepthBoundExceeded { len: usize, bound: usize },

    #[error("rule list is empty")]
    EmptyRuleSet,

    #[error("rules do not share one antecedent place set")]
    RuleGroupMismatch,

    #[error("rule has {expected} antecedents but {found} facts were given")]
    ArityMismatch { expected: usize, found: usize },

    #[error("automaton has no positive transition degree")]
    NoPositiveDelta,

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
