//! Command-line front end: JSON instance files, generators, decision runs,
//! benchmarks and golden self-checks.

pub mod bench;
pub mod commands;
pub mod gen;
pub mod io;
pub mod report;
pub mod selftest;
