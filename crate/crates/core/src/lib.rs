//! Variable ordering heuristics for cylindrical algebraic decomposition.

pub mod cli;
pub mod formula;
pub mod io;
pub mod poly;
pub mod projection;
pub mod realroots;
pub mod heuristics;
pub mod generator;
pub mod harness;
