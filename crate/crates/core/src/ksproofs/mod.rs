//! Kochen-Specker proof content: colorability search and GF(2) parity proofs.

mod coloring;
mod parity;

pub use coloring::{check_coloring, ks_colorable, ks_colorable_with_order, ColoringOutcome};
pub use parity::{
    enumerate_parity_proofs, parity_analysis, verify_parity_proof, IncidenceMatrixGF2, ParityAnalysis,
    ParityProofCertificate, ParityVerdict, EXHAUSTIVE_KERNEL_DIM,
};
