//! Command-line plumbing: graph and witness files, seeded random instances,
//! sweeps, stress runs, and the `treex` argument parser.

pub mod cli;
pub mod format;
pub mod random;
pub mod stress;
pub mod sweep;
pub mod verify;
