//! Exact root-system combinatorics for equi-rank real forms: root
//! generation, Weyl group representatives, compact data of a painted
//! Dynkin diagram, and Borel-de Siebenthal positive systems with an
//! independent brute-force oracle.

pub mod bds;
pub mod dynkin;
pub mod error;
pub mod export;
pub mod lie_type;
pub mod linalg;
pub mod oracle;
pub mod report;
pub mod root_system;
pub mod rootvec;
pub mod series;
pub mod vogan;
pub mod weyl;

pub use bds::{candidate_pairs, construct_bds, enumerate_bds, BdsSystem, CandidatePair, Provenance};
pub use dynkin::{Component, DynkinDiagram};
pub use error::{Error, Result};
pub use lie_type::{Family, LieType};
pub use root_system::{generate_roots, RootSystem};
pub use rootvec::{RootSet, RootVec};
pub use vogan::{compact_datum, CompactDatum, VoganDatum};
pub use weyl::{antidominant_rep, dominant_rep, SubBase, WeylWord};
