use thiserror::Error;

/// Errors raised while constructing or interrogating finite algebras.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cover relation has a cycle through element {0}")]
    NotAPoset(usize),
    #[error("bounds are wrong: {0}")]
    NotBounded(String),
    #[error("not a lattice: pair ({0}, {1}) has no unique {2}")]
    NotALattice(usize, usize, &'static str),
    #[error("subset is empty")]
    EmptySubset,
    #[error("table is not an involution at element {0}")]
    NotInvolutive(usize),
    #[error("table is not order-reversing on pair ({0}, {1})")]
    NotAntitone(usize, usize),
    #[error("Brouwer axiom {axiom} fails at element {witness}")]
    BZAxiomFailure { axiom: &'static str, witness: usize },
    #[error("map is not a dual isomorphism: witness {0}")]
    NotDualIso(usize),
    #[error("horizontal sum side condition violated at flavor {flavor}: {reason}")]
    SideConditionViolated { flavor: &'static str, reason: String },
    #[error("operands do not all support the requested flavor")]
    MixedFlavors,
    #[error("lower part of the ordinal sum is trivial")]
    TrivialLowerPart,
    #[error("middle algebra is not pseudo-Kleene")]
    NotPseudoKleene,
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("unknown catalog or identity name: {0}")]
    UnknownName(String),
    #[error("identity {0} requires a parameter n >= 2")]
    MissingParam(String),
    #[error("syntax error at position {0}: {1}")]
    SyntaxError(usize, String),
    #[error("term uses operation {0} which the algebra does not have")]
    MissingOperation(&'static str),
    #[error("valuation sweep of {0} exceeds the guard of {1} (set PBZLAB_GUARD to raise it)")]
    GuardExceeded(u64, u64),
    #[error("congruence enumeration guard exceeded: {0} elements > {1} (set PBZLAB_GUARD to raise it)")]
    SizeGuardExceeded(usize, usize),
    #[error("partition is not a congruence at the requested flavor: pair ({0}, {1})")]
    NotACongruence(usize, usize),
    #[error("algebra is not an antiortholattice")]
    NotAntiortholattice,
    #[error("congruence flavor {0} exceeds the algebra flavor {1}")]
    FlavorMismatch(&'static str, &'static str),
    #[error("invalid algebra file: {0}")]
    InvalidFile(String),
}

pub type Result<T> = std::result::Result<T, Error>;
