use crate::atom::Atom;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element {0} is not in the universe")]
    ElementOutsideUniverse(Atom),
    #[error("universe lists {0} more than once")]
    DuplicateUniverseElement(Atom),
    #[error("universe of size {size} exceeds the bound {bound}")]
    UniverseTooLarge { size: usize, bound: usize },
    #[error("operation needs at least one operand")]
    EmptyOperandList,
    #[error("unknown element {0}")]
    UnknownElement(Atom),
    #[error("quasi-orders live on different carriers")]
    CarrierMismatch,
    #[error("relation is not reflexive and transitive: missing ({0}, {1})")]
    NotClosed(Atom, Atom),
    #[error("set system is not closed under union and intersection")]
    NotALattice,
    #[error("hypothesis {0:?} is not a member of the set system")]
    HypothesisNotInSystem(Vec<Atom>),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("element {0} is outside the trace field")]
    ElementOutsideField(Atom),
    #[error("invalid arity {0}")]
    InvalidArity(usize),
    #[error("relation is not a simulation")]
    NotASimulation,
    #[error("trace is not linear")]
    NotLinear,
    #[error("invalid Ramsey query: {0}")]
    InvalidQuery(String),
    #[error("search bound exceeded: {n} vertices (max {max})")]
    SearchBoundExceeded { n: usize, max: usize },
    #[error("alphabet mismatch")]
    AlphabetMismatch,
    #[error("symbol {0:?} is not in the alphabet")]
    SymbolOutsideAlphabet(String),
    #[error("word {0} is longer than the fragment bound {1}")]
    WordTooLong(String, usize),
    #[error("fragments have different length bounds")]
    BoundMismatch,
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("transform needs an explicit element horizon")]
    HorizonRequired,
}

pub type Result<T> = std::result::Result<T, Error>;
