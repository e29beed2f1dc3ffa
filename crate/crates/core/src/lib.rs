//! Statics and phonons of a one-dimensional Coulomb ion chain in a harmonic
//! trap plus a periodic lattice, and the pinning transition between its
//! sliding and pinned phases.
//!
//! Everything is expressed in dimensionless units where the lattice period
//! is `2π` and ion mass and charge are one; see [`units`] for the SI
//! conversion.

pub mod chain;
pub mod cli;
pub mod error;
pub mod experiments;
pub mod ground_state;
pub mod maps;
pub mod numeric;
pub mod phonons;
pub mod report;
pub mod units;

pub use chain::{ChainModel, ChainParams, DisorderParams, IonConfiguration, PotentialVariant};
pub use error::{Error, Result};
pub use ground_state::{MinimaCatalog, RelaxSettings};
pub use phonons::PhononSpectrum;
