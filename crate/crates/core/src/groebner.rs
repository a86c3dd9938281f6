//! Groebner bases and syzygies for submodules of graded free modules.
//!
//! The whole pipeline is homogeneous-only: inhomogeneous input is rejected
//! rather than handled with sugar strategies. Pair selection follows the
//! normal strategy (lowest lcm degree first).

use alloc::vec;
use alloc::vec::Vec;

use crate::free_module::{GradedMatrix, ModElem};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::ring::PolyRing;
use crate::scalar::Scalar;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GbError {
    InhomogeneousInput,
    AmbientMismatch,
}

/// A reduced Groebner basis of a submodule of a graded free module.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroebnerBasis {
    pub ring: PolyRing,
    pub row_twists: Vec<i64>,
    pub order: MonomialOrder,
    pub elems: Vec<ModElem>,
}

impl GroebnerBasis {
    /// Compute the reduced basis of the submodule generated by `gens`.
    pub fn compute(
        ring: &PolyRing,
        row_twists: &[i64],
        gens: &[ModElem],
        order: MonomialOrder,
    ) -> Result<GroebnerBasis, GbError> {
        for g in gens {
            if g.degree(row_twists).is_err() {
                return Err(GbError::InhomogeneousInput);
            }
            if let Some(c) = g.max_component() {
                if c >= row_twists.len() {
                    return Err(GbError::AmbientMismatch);
                }
            }
        }
        let elems = reduced_groebner(gens, order);
        Ok(GroebnerBasis {
            ring: ring.clone(),
            row_twists: row_twists.to_vec(),
            order,
            elems,
        })
    }

    pub fn normal_form(&self, f: &ModElem) -> Result<ModElem, GbError> {
        if let Some(c) = f.max_component() {
            if c >= self.row_twists.len() {
                return Err(GbError::AmbientMismatch);
            }
        }
        Ok(normal_form(f, &self.elems, self.order))
    }

    pub fn contains(&self, f: &ModElem) -> bool {
        normal_form(f, &self.elems, self.order).is_zero()
    }

    /// The submodule equals the whole ambient free module.
    pub fn is_full(&self) -> bool {
        let n = self.ring.num_vars();
        (0..self.row_twists.len()).all(|c| {
            self.contains(&ModElem::unit(c, n, &self.ring.field))
        })
    }

    pub fn is_zero_submodule(&self) -> bool {
        self.elems.is_empty()
    }
}

fn find_reducer<'a>(
    key: &(usize, Monomial),
    basis: &'a [ModElem],
    order: MonomialOrder,
) -> Option<(&'a ModElem, Monomial, Scalar)> {
    for g in basis {
        let ((gc, gm), gcoef) = g.lead_term(order)?;
        if *gc == key.0 && gm.divides(&key.1) {
            return Some((g, key.1.div(gm), gcoef.clone()));
        }
    }
    None
}

/// Full normal form: the result has no term divisible by any lead term of
/// `basis`, and `f - result` lies in the span of `basis`.
pub fn normal_form(f: &ModElem, basis: &[ModElem], order: MonomialOrder) -> ModElem {
    let mut rem = f.clone();
    let mut out = ModElem::zero();
    while let Some((lt, lc)) = rem.lead_term(order).map(|(k, c)| (k.clone(), c.clone())) {
        match find_reducer(&lt, basis, order) {
            Some((g, quot_m, g_lc)) => {
                let coef = lc * g_lc.inv();
                rem = rem.add(&g.mul_term(&quot_m, &coef).neg());
            }
            None => {
                rem.terms.remove(&lt);
                out.add_term(lt, lc);
            }
        }
    }
    out
}

fn s_element(gi: &ModElem, gj: &ModElem, order: MonomialOrder) -> Option<ModElem> {
    let ((ci, mi), coef_i) = gi.lead_term(order)?;
    let ((cj, mj), coef_j) = gj.lead_term(order)?;
    if ci != cj {
        return None;
    }
    let l = mi.lcm(mj);
    let a = gi.mul_term(&l.div(mi), &coef_i.clone().inv());
    let b = gj.mul_term(&l.div(mj), &coef_j.clone().inv());
    Some(a.add(&b.neg()))
}

/// Buchberger with normal pair selection, followed by inter-reduction.
pub fn reduced_groebner(gens: &[ModElem], order: MonomialOrder) -> Vec<ModElem> {
    let mut basis: Vec<ModElem> = Vec::new();
    for g in gens {
        let h = normal_form(g, &basis, order);
        if !h.is_zero() {
            basis.push(h);
        }
    }
    // pending pairs with the total degree of the S-element lcm
    let mut pairs: Vec<(usize, usize, i64)> = Vec::new();
    let add_pairs = |basis: &[ModElem], pairs: &mut Vec<(usize, usize, i64)>, j: usize| {
        let ((cj, mj), _) = match basis[j].lead_term(order) {
            Some(t) => t,
            None => return,
        };
        for (i, g) in basis.iter().enumerate().take(j) {
            if let Some(((ci, mi), _)) = g.lead_term(order) {
                if ci == cj {
                    pairs.push((i, j, mi.lcm(mj).total_degree()));
                }
            }
        }
    };
    for j in 0..basis.len() {
        add_pairs(&basis, &mut pairs, j);
    }
    while !pairs.is_empty() {
        let k = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, (_, _, d))| *d)
            .map(|(k, _)| k)
            .unwrap();
        let (i, j, _) = pairs.swap_remove(k);
        let s = match s_element(&basis[i], &basis[j], order) {
            Some(s) => s,
            None => continue,
        };
        let h = normal_form(&s, &basis, order);
        if !h.is_zero() {
            basis.push(h);
            add_pairs(&basis, &mut pairs, basis.len() - 1);
        }
    }
    interreduce(basis, order)
}

fn interreduce(mut basis: Vec<ModElem>, order: MonomialOrder) -> Vec<ModElem> {
    // drop elements whose lead is divisible by another lead
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let (ki, _) = basis[i].lead_term(order).unwrap();
        let ki = ki.clone();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let ((cj, mj), _) = basis[j].lead_term(order).unwrap();
            if *cj == ki.0 && mj.divides(&ki.1) && (mj != &ki.1 || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut minimal: Vec<ModElem> = basis
        .drain(..)
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(g, _)| g)
        .collect();
    // tail-reduce and normalize lead coefficients
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let g = minimal[i].clone();
            let others: Vec<ModElem> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, h)| h.clone())
                .collect();
            let r = normal_form(&g, &others, order);
            if r != g {
                minimal[i] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    for g in &mut minimal {
        if let Some((_, c)) = g.lead_term(order) {
            let inv = c.clone().inv();
            *g = g.scale(&inv);
        }
    }
    minimal.retain(|g| !g.is_zero());
    minimal.sort_by(|a, b| {
        order.cmp_term(a.lead_term(order).unwrap().0, b.lead_term(order).unwrap().0)
    });
    minimal
}

/// Generators of the syzygy module of `gens` (the kernel of the map from the
/// free module on `gens` to their ambient), via an elimination order on the
/// augmented module: ambient components dominate the adjoined ones, so the
/// basis elements supported entirely in the adjoined block are a basis of
/// the syzygies.
pub fn syzygies(
    ring: &PolyRing,
    row_twists: &[i64],
    gens: &[ModElem],
    order: MonomialOrder,
) -> Result<Vec<ModElem>, GbError> {
    let mut degrees = Vec::with_capacity(gens.len());
    for g in gens {
        degrees.push(
            g.degree(row_twists)
                .map_err(|_| GbError::InhomogeneousInput)?
                .unwrap_or(0),
        );
    }
    syzygies_given_degrees(ring, row_twists, gens, &degrees, order)
}

/// Like [`syzygies`], but with the degree of each generator supplied by the
/// caller. Zero generators then keep a meaningful twist (their syzygy slot
/// stays homogeneous), which matters for preimage computations where a map
/// column may vanish.
pub fn syzygies_given_degrees(
    ring: &PolyRing,
    row_twists: &[i64],
    gens: &[ModElem],
    degrees: &[i64],
    order: MonomialOrder,
) -> Result<Vec<ModElem>, GbError> {
    let r = row_twists.len();
    let n = ring.num_vars();
    let mut aug_twists = row_twists.to_vec();
    let mut aug: Vec<ModElem> = Vec::with_capacity(gens.len());
    for (i, g) in gens.iter().enumerate() {
        match g.degree(row_twists) {
            Err(_) => return Err(GbError::InhomogeneousInput),
            Ok(Some(d)) if d != degrees[i] => return Err(GbError::InhomogeneousInput),
            _ => {}
        }
        aug_twists.push(degrees[i]);
        let mut w = g.clone();
        w.add_term((r + i, Monomial::one(n)), Scalar::from_int_in(1, &ring.field));
        aug.push(w);
    }
    let gb = GroebnerBasis::compute(ring, &aug_twists, &aug, order)?;
    let mut out = Vec::new();
    for g in gb.elems {
        if g.terms.keys().all(|(c, _)| *c >= r) {
            let shifted = ModElem {
                terms: g
                    .terms
                    .into_iter()
                    .map(|((c, m), s)| ((c - r, m), s))
                    .collect(),
            };
            out.push(shifted);
        }
    }
    Ok(out)
}

/// Generators of the kernel of a homogeneous map of graded free modules,
/// as a matrix into the source.
pub fn kernel_of_map(mat: &GradedMatrix, order: MonomialOrder) -> Result<GradedMatrix, GbError> {
    let syz = syzygies(&mat.ring, &mat.row_twists, &mat.cols, order)?;
    GradedMatrix::new(&mat.ring, mat.col_twists.clone(), syz)
        .map_err(|_| GbError::InhomogeneousInput)
}

/// Prune `gens` to a minimal generating set of the submodule they span.
///
/// Processes generators by ascending degree and keeps one exactly when it is
/// not in the span of those already kept; graded Nakayama makes the result
/// minimal.
pub fn minimal_generators(
    _ring: &PolyRing,
    row_twists: &[i64],
    gens: &[ModElem],
    order: MonomialOrder,
) -> Result<Vec<ModElem>, GbError> {
    let mut indexed: Vec<(i64, &ModElem)> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let d = g
            .degree(row_twists)
            .map_err(|_| GbError::InhomogeneousInput)?
            .unwrap();
        indexed.push((d, g));
    }
    indexed.sort_by_key(|(d, _)| *d);
    let mut kept: Vec<ModElem> = Vec::new();
    let mut gb: Vec<ModElem> = Vec::new();
    for (_, g) in indexed {
        if normal_form(g, &gb, order).is_zero() {
            continue;
        }
        kept.push(g.clone());
        gb = reduced_groebner(&kept, order);
    }
    Ok(kept)
}
