//! Polynomial ring descriptors.

use alloc::string::String;
use alloc::vec::Vec;

/// The base field of a computation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Field {
    Rationals,
    Prime(u64),
}

/// A polynomial ring `k[x_1, ..., x_n]` with the standard Z^n grading.
///
/// Rings are compared by value; two rings with the same field and variable
/// names are the same ring.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PolyRing {
    pub field: Field,
    pub vars: Vec<String>,
}

impl PolyRing {
    pub fn new(field: Field, vars: Vec<String>) -> Self {
        PolyRing { field, vars }
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}
