//! Finite and symbolic duality between local Boolean algebras, local contact
//! algebras and locally compact spaces.
//!
//! Every construction works on explicit finite carriers (powersets over at
//! most 16 atoms, finite topological spaces) and, where it makes sense, on
//! the finite–cofinite algebra over ℕ handled symbolically. Checks return
//! [`Verdict`]s carrying the first counterexample in canonical order.

pub mod absolutes;
pub mod ba;
pub mod completion;
pub mod contact;
pub mod corpus;
pub mod duality;
pub mod error;
pub mod ideals;
pub mod lba;
pub mod search;
pub mod serial;
pub mod topo;
pub mod verdict;

pub use error::{Error, Result};
pub use verdict::{Cardinal, Verdict};
