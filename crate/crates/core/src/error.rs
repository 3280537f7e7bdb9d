use thiserror::Error;

use crate::lie_type::Family;
use crate::rootvec::RootVec;

/// Errors produced anywhere in the crate.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: Family, rank: usize },
    #[error("cannot parse Lie type {0:?}")]
    ParseType(String),
    #[error("matrix is not a finite-type Cartan matrix: {0}")]
    NotFiniteType(String),
    #[error("root closure exceeded {bound} roots; input is not of finite type")]
    RootBoundExceeded { bound: usize },
    #[error("Cartan matrix is reducible; a simple root system is required")]
    Reducible,
    #[error("vector {0} is not a root")]
    NotARoot(RootVec),
    #[error("zero vector has no coroot")]
    ZeroVector,
    #[error("vector length {got} does not match rank {rank}")]
    DimensionMismatch { rank: usize, got: usize },
    #[error("pairing {0} is not an integer")]
    NonIntegral(String),
    #[error("node {node} is out of range for rank {rank}")]
    NodeOutOfRange { node: usize, rank: usize },
    #[error("n_nu(delta) = {coefficient} for node {node}; only 1 or 2 are admissible")]
    InadmissibleNode { node: usize, coefficient: i64 },
    #[error("invalid sub-base: {0}")]
    InvalidSubBase(String),
    #[error("diagram is not a disjoint union of finite-type diagrams: {0}")]
    NotFiniteDiagram(String),
    #[error("operation requires semisimple k, but the datum is Hermitian")]
    HermitianDatum,
    #[error("Borel-de Siebenthal invariant violated: {0}")]
    BdsInvariant(String),
    #[error("oracle refused: {pairs} non-compact pairs exceed the bound {bound}")]
    OracleBound { pairs: usize, bound: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
