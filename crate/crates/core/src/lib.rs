//! Verification toolkit for spectral extremal problems on doubly chorded cycles.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: bitrow graphs, constructors, composition and graph6;
//! * [`cycles`]: exact chorded-cycle / DCC / DCC₁ / `K_1∨P_4` detection with witnesses;
//! * [`spectral`]: power iteration, quotient matrices, exact characteristic
//!   polynomials, root isolation and the Kelmans rotation;
//! * [`families`]: the named extremal and comparison families;
//! * [`search`]: canonical forms, orderly enumeration of connected graphs and
//!   exhaustive theorem checks;
//! * [`cli`]: the command-line front end.

pub mod cli;
pub mod cycles;
pub mod error;
pub mod families;
pub mod graph;
pub mod search;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{graph6_decode, graph6_encode, Graph, VertexSet};
