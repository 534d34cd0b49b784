//! Finite lattices, ortholattices and orthomodular lattices: construction,
//! property checkers, the Kalmbach construction and the Rieger–Nishimura
//! truncations.

pub mod corpus;
pub mod error;
pub mod kalmbach;
pub mod lattice;
pub mod order;
pub mod ortho;
pub mod rn;

pub use error::{Error, Result};
pub use lattice::{compactness_witness, has_n_covering, has_n_covering_where, interval_height, FiniteLattice, Ortho, Verdict};
pub use order::{lattice_from_covers, BoundedLattice, Chain, IntervalView};
pub use ortho::{blocks, Block, OrthoLattice};
pub use kalmbach::{kalmbach, kleq, kperp, KSeq, KalmbachOML};
pub use rn::{rn_lattice, rn_report, RnLattice, RnReport};
