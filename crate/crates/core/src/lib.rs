//! Spectral analysis of signed digraphs.
//!
//! A signed digraph (sidigraph) is a digraph whose arcs carry a sign `+1` or
//! `-1`. This crate computes exact characteristic polynomials (three
//! independent routes), numerical spectra and energy, Coulson-type energy
//! integrals, cycle-sign classifications, and a set of explicit constructions
//! of cospectral and equienergetic families.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod charpoly;
pub mod constructions;
pub mod coulson;
pub mod cycles;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod linear;
pub mod poly;
pub mod quad;
pub mod roots;
pub mod search;
pub mod spectra;

pub use error::{Error, Result};
pub use graph::{Arc, Sidigraph, Sign};
pub use poly::IntPolynomial;
