//! Path and cycle odd-covers: the graph model, constructive solvers with
//! verified outputs, a small exact oracle, and text formats.

pub mod cycles;
pub mod error;
pub mod exact;
pub mod graph;
pub mod io;
pub mod kit;
pub mod solver;
