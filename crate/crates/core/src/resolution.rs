//! Minimal graded free resolutions over the polynomial ring.

use alloc::vec::Vec;

use crate::free_module::GradedMatrix;
use crate::groebner::{kernel_of_map, minimal_generators, GbError};
use crate::order::MonomialOrder;
use crate::presentation::ModulePresentation;
use crate::ring::PolyRing;

/// A finite chain of graded matrices `d_1, ..., d_l` resolving a module:
/// `0 -> F_l -> ... -> F_1 -> F_0 -> M -> 0`.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    pub ring: PolyRing,
    /// Generator degrees of `F_0`.
    pub f0_twists: Vec<i64>,
    pub maps: Vec<GradedMatrix>,
    pub minimal: bool,
}

impl FreeResolution {
    /// Minimal free resolution, built by minimalizing the presentation and
    /// then taking minimal generators of successive kernels. Hilbert's
    /// bound caps the length at the number of variables.
    pub fn minimal(m: &ModulePresentation) -> Result<FreeResolution, GbError> {
        let min = m.minimalize();
        let ring = min.ring.clone();
        let mut maps: Vec<GradedMatrix> = Vec::new();
        if min.rank() > 0 && min.relations.n_cols() > 0 {
            maps.push(min.relations.clone());
            loop {
                let last = maps.last().unwrap();
                let ker = kernel_of_map(last, MonomialOrder::GrevLex)?;
                let gens = minimal_generators(
                    &ring,
                    &ker.row_twists,
                    &ker.cols,
                    MonomialOrder::GrevLex,
                )?;
                if gens.is_empty() {
                    break;
                }
                let next = GradedMatrix::new(&ring, last.col_twists.clone(), gens)
                    .map_err(|_| GbError::InhomogeneousInput)?;
                maps.push(next);
            }
        }
        Ok(FreeResolution {
            ring,
            f0_twists: min.gen_twists.clone(),
            maps,
            minimal: true,
        })
    }

    /// Length of the resolution = projective dimension of the module
    /// (for the minimal resolution of a nonzero module).
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    pub fn betti(&self, i: usize) -> usize {
        if i == 0 {
            self.f0_twists.len()
        } else if i <= self.maps.len() {
            self.maps[i - 1].n_cols()
        } else {
            0
        }
    }

    /// Generator degrees of `F_i`.
    pub fn twists(&self, i: usize) -> &[i64] {
        if i == 0 {
            &self.f0_twists
        } else {
            &self.maps[i - 1].col_twists
        }
    }

    /// `d_i . d_{i+1} = 0` for all i.
    pub fn composites_vanish(&self) -> bool {
        self.maps
            .windows(2)
            .all(|w| w[0].compose(&w[1]).cols.iter().all(|c| c.is_zero()))
    }

    /// Every matrix entry lies in the irrelevant maximal ideal.
    pub fn is_minimal_complex(&self) -> bool {
        self.maps.iter().all(|d| d.entries_in_irrelevant_ideal())
    }

    /// Exactness at step i (1-based; kernel of `d_i` equals the span of
    /// `d_{i+1}`), checked by Groebner membership both ways.
    pub fn exact_at(&self, i: usize) -> bool {
        use crate::groebner::GroebnerBasis;
        let d_i = &self.maps[i - 1];
        let ker = match kernel_of_map(d_i, MonomialOrder::GrevLex) {
            Ok(k) => k,
            Err(_) => return false,
        };
        let next_cols: &[crate::free_module::ModElem] = if i < self.maps.len() {
            &self.maps[i].cols
        } else {
            &[]
        };
        let gb_next = match GroebnerBasis::compute(
            &self.ring,
            &d_i.col_twists,
            next_cols,
            MonomialOrder::GrevLex,
        ) {
            Ok(g) => g,
            Err(_) => return false,
        };
        let gb_ker = match GroebnerBasis::compute(
            &self.ring,
            &d_i.col_twists,
            &ker.cols,
            MonomialOrder::GrevLex,
        ) {
            Ok(g) => g,
            Err(_) => return false,
        };
        ker.cols.iter().all(|c| gb_next.contains(c))
            && next_cols.iter().all(|c| gb_ker.contains(c))
    }
}
