//! Finitely generated graded modules given by homogeneous presentations.

use alloc::vec;
use alloc::vec::Vec;

use crate::free_module::{GradedMatrix, ModElem};
use crate::groebner::{minimal_generators, GbError, GroebnerBasis};
use crate::monomial::{monomials_of_total_degree, Monomial};
use crate::monomial_ideal::MonomialIdeal;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::PolyRing;

/// A finitely generated graded module, as the cokernel of a homogeneous
/// matrix between graded free modules. The reduced Groebner basis of the
/// relation span is computed on construction and shared read-only.
#[derive(Clone, Debug)]
pub struct ModulePresentation {
    pub ring: PolyRing,
    /// Degrees of the target free module generators.
    pub gen_twists: Vec<i64>,
    pub relations: GradedMatrix,
    pub gb: GroebnerBasis,
}

impl ModulePresentation {
    pub fn new(
        ring: &PolyRing,
        gen_twists: Vec<i64>,
        relation_cols: Vec<ModElem>,
    ) -> Result<ModulePresentation, GbError> {
        let relations = GradedMatrix::new(ring, gen_twists.clone(), relation_cols)
            .map_err(|_| GbError::InhomogeneousInput)?;
        let gb = GroebnerBasis::compute(
            ring,
            &gen_twists,
            &relations.cols,
            MonomialOrder::GrevLex,
        )?;
        Ok(ModulePresentation {
            ring: ring.clone(),
            gen_twists,
            relations,
            gb,
        })
    }

    /// The free module with the given generator degrees.
    pub fn free(ring: &PolyRing, gen_twists: Vec<i64>) -> ModulePresentation {
        ModulePresentation::new(ring, gen_twists, Vec::new()).unwrap()
    }

    /// The ring itself as a module.
    pub fn ring_module(ring: &PolyRing) -> ModulePresentation {
        ModulePresentation::free(ring, vec![0])
    }

    /// The zero module.
    pub fn zero_module(ring: &PolyRing) -> ModulePresentation {
        ModulePresentation::new(ring, Vec::new(), Vec::new()).unwrap()
    }

    /// Cyclic quotient `R/I` for homogeneous ideal generators.
    pub fn cyclic(ring: &PolyRing, ideal_gens: &[Polynomial]) -> Result<ModulePresentation, GbError> {
        let cols: Vec<ModElem> = ideal_gens
            .iter()
            .filter(|p| !p.is_zero())
            .map(|p| ModElem::from_poly(0, p))
            .collect();
        ModulePresentation::new(ring, vec![0], cols)
    }

    /// `R/J` for a monomial ideal.
    pub fn cyclic_monomial(ring: &PolyRing, ideal: &MonomialIdeal) -> ModulePresentation {
        let cols: Vec<ModElem> = ideal
            .gens
            .iter()
            .map(|m| ModElem::from_poly(0, &Polynomial::monomial(ring, m.clone())))
            .collect();
        ModulePresentation::new(ring, vec![0], cols).unwrap()
    }

    /// The residue field `R/m`.
    pub fn residue_field(ring: &PolyRing) -> ModulePresentation {
        let cols: Vec<ModElem> = (0..ring.num_vars())
            .map(|i| {
                ModElem::from_poly(
                    0,
                    &Polynomial::monomial(ring, Monomial::var(i, ring.num_vars())),
                )
            })
            .collect();
        ModulePresentation::new(ring, vec![0], cols).unwrap()
    }

    pub fn rank(&self) -> usize {
        self.gen_twists.len()
    }

    /// The module is zero iff the relation columns span the full free module.
    pub fn is_zero(&self) -> bool {
        self.rank() == 0 || self.gb.is_full()
    }

    /// Dimension of the graded piece in total degree `d`, by counting
    /// standard monomials against the relation Groebner basis.
    pub fn graded_piece_dim(&self, d: i64) -> usize {
        let n = self.ring.num_vars();
        let order = MonomialOrder::GrevLex;
        let leads: Vec<(usize, Monomial)> = self
            .gb
            .elems
            .iter()
            .filter_map(|g| g.lead_term(order).map(|(k, _)| k.clone()))
            .collect();
        let mut count = 0;
        for (c, &tw) in self.gen_twists.iter().enumerate() {
            let mdeg = d - tw;
            if mdeg < 0 {
                continue;
            }
            for m in monomials_of_total_degree(n, mdeg as u32) {
                let standard = !leads
                    .iter()
                    .any(|(lc, lm)| *lc == c && lm.divides(&m));
                if standard {
                    count += 1;
                }
            }
        }
        count
    }

    /// If the module is cyclic with a monomial relation ideal, return it.
    pub fn as_cyclic_monomial(&self) -> Option<MonomialIdeal> {
        if self.rank() != 1 || self.gen_twists[0] != 0 {
            return None;
        }
        let mut gens: Vec<Monomial> = Vec::new();
        for col in &self.relations.cols {
            if col.is_zero() {
                continue;
            }
            if col.terms.len() != 1 {
                return None;
            }
            let ((c, m), _) = col.terms.iter().next().unwrap();
            if *c != 0 {
                return None;
            }
            gens.push(m.clone());
        }
        Some(MonomialIdeal::new(self.ring.num_vars(), gens))
    }

    /// Cancel unit entries and prune redundant relation columns, producing an
    /// isomorphic presentation with minimal generators and minimal relations.
    pub fn minimalize(&self) -> ModulePresentation {
        let mut twists = self.gen_twists.clone();
        let mut cols: Vec<ModElem> = self.relations.cols.clone();
        'outer: loop {
            for (ci, col) in cols.iter().enumerate() {
                let unit = col
                    .terms
                    .iter()
                    .find(|((_, m), s)| m.is_one() && !s.is_zero())
                    .map(|((r, m), s)| (*r, m.clone(), s.clone()));
                if let Some((r, _, s)) = unit {
                    let pivot_col = col.clone();
                    let s_inv = s.inv();
                    for (cj, other) in cols.iter_mut().enumerate() {
                        if cj == ci {
                            continue;
                        }
                        // row-r part of `other` as a polynomial
                        let mut p = Polynomial::zero(&self.ring);
                        for ((rr, m), c) in &other.terms {
                            if *rr == r {
                                p.add_term(m.clone(), c.clone());
                            }
                        }
                        if p.is_zero() {
                            continue;
                        }
                        let mut delta = ModElem::zero();
                        for (m, c) in &p.terms {
                            let coef = c.clone() * s_inv.clone();
                            delta = delta.add(&pivot_col.mul_term(m, &coef));
                        }
                        *other = other.add(&delta.neg());
                    }
                    // drop row r and column ci, renumber components
                    cols.remove(ci);
                    twists.remove(r);
                    for other in cols.iter_mut() {
                        let terms = core::mem::take(&mut other.terms);
                        for ((rr, m), c) in terms {
                            if rr == r {
                                continue;
                            }
                            let nr = if rr > r { rr - 1 } else { rr };
                            other.add_term((nr, m), c);
                        }
                    }
                    continue 'outer;
                }
            }
            break;
        }
        cols.retain(|c| !c.is_zero());
        let cols =
            minimal_generators(&self.ring, &twists, &cols, MonomialOrder::GrevLex).unwrap();
        ModulePresentation::new(&self.ring, twists, cols).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Field;
    use crate::scalar::Scalar;
    use alloc::string::ToString;

    fn r2() -> PolyRing {
        PolyRing::new(Field::Rationals, vec!["x1".to_string(), "x2".to_string()])
    }

    fn lp(ring: &PolyRing) -> ModulePresentation {
        let ideal = MonomialIdeal::new(2, vec![Monomial(vec![2, 0]), Monomial(vec![1, 1])]);
        ModulePresentation::cyclic_monomial(ring, &ideal)
    }

    #[test]
    fn zero_detection() {
        let r = r2();
        let one_col = ModElem::from_poly(0, &Polynomial::one(&r));
        let m = ModulePresentation::new(&r, vec![0], vec![one_col]).unwrap();
        assert!(m.is_zero());
        assert!(!lp(&r).is_zero());
        assert!(!ModulePresentation::ring_module(&r).is_zero());
    }

    #[test]
    fn graded_pieces_of_lp() {
        // standard monomials of (x1^2, x1 x2): 1 | x1, x2 | x2^2 | x2^3 ...
        let r = r2();
        let m = lp(&r);
        assert_eq!(m.graded_piece_dim(0), 1);
        assert_eq!(m.graded_piece_dim(1), 2);
        assert_eq!(m.graded_piece_dim(2), 1);
        assert_eq!(m.graded_piece_dim(3), 1);
    }

    #[test]
    fn minimalize_cancels_units() {
        let r = r2();
        // coker [1; x1] over F = R + R(-1): isomorphic to R(-1)/(..) after
        // cancelling the unit
        let mut col = ModElem::zero();
        col.add_term((0, Monomial::one(2)), Scalar::from_int_in(1, &r.field));
        col.add_term((1, Monomial::var(0, 2)), Scalar::from_int_in(1, &r.field));
        let m = ModulePresentation::new(&r, vec![0, -1], vec![col]).unwrap();
        let min = m.minimalize();
        assert_eq!(min.rank(), 1);
        // piece dims must be preserved
        for d in -1..4 {
            assert_eq!(m.graded_piece_dim(d), min.graded_piece_dim(d), "degree {}", d);
        }
    }

    #[test]
    fn as_cyclic_monomial_round_trip() {
        let r = r2();
        let m = lp(&r);
        let ideal = m.as_cyclic_monomial().unwrap();
        assert_eq!(ideal.gens.len(), 2);
    }
}
