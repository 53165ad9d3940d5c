//! Library surface of the command-line tool: the ring-definition format,
//! the report shape and the lattice cache.

pub mod cache;
pub mod report;
pub mod spec;
