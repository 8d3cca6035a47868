//! Exact invariants for simple undirected graphs: vertex toughness, degree
//! closures, Hamiltonicity and cycle spectra, and dense spectral radii of the
//! adjacency, signless Laplacian, distance, and distance signless Laplacian
//! matrices, together with the sufficient-condition thresholds that tie edge
//! counts and spectral radii to spanning-cycle structure.

pub mod conditions;
pub mod cycles;
pub mod enumerate;
mod error;
pub mod graph;
pub mod graph6;
pub mod spectra;
pub mod toughness;
pub mod closure;

pub use error::{Error, Result};
pub use graph::{construct_named, DegreeSequence, Graph, NamedGraph, MAX_ORDER};
