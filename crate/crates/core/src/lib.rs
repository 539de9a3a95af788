//! Exact construction and Kochen-Specker analysis of the Penrose dodecahedron
//! rays, the Witting polytope, its Gosset/E8 realification, and the 148-ray
//! extension family.

pub mod bits;
pub mod catalog;
pub mod cli;
pub mod golden;
pub mod ksproofs;
pub mod numerics;
pub mod penrose;
pub mod systems;
pub mod witting;
