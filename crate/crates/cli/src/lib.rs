//! Theorem-check harness and session interface over the `tcm-core` kernel.
//!
//! The library side hosts everything the binary needs: instance modelling
//! and random generation, the executable theorem checks with their reports,
//! suite orchestration, and the session-file parser/executor.

pub mod checks;
pub mod instance;
pub mod report;
pub mod session;
pub mod suite;
