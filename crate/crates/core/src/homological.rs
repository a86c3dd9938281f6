//! Homological invariants: Ext, Tor, depth, grade, projective dimension,
//! the finiteness dimension, and Cohen-Macaulay classification.
//!
//! Ext and Tor of presented modules are computed from a minimal free
//! resolution of the first argument, dualized or tensored termwise; the
//! homology of the resulting complex of presented modules is extracted
//! through subquotient presentations (first-block syzygy projections).

use alloc::vec::Vec;

use crate::extint::ExtendedInt;
use crate::free_module::{GradedMatrix, ModElem};
use crate::groebner::{syzygies_given_degrees, GbError};
use crate::hilbert::HilbertSeries;
use crate::monomial_ideal::MonomialIdeal;
use crate::order::MonomialOrder;
use crate::presentation::ModulePresentation;
use crate::resolution::FreeResolution;
use crate::ring::PolyRing;

/// One term of a complex of presented modules: a graded free ambient
/// (generator degrees `twists`) modulo the span of `rels`.
#[derive(Clone, Debug)]
pub struct PresentedTerm {
    pub twists: Vec<i64>,
    pub rels: Vec<ModElem>,
}

/// Presentation of `span(gens) / (span(gens) ∩ span(rels))` inside the free
/// module with the given ambient twists. The relations on `gens` are the
/// first-block projections of the syzygies of the concatenation
/// `[gens | rels]`.
pub fn subquotient_presentation(
    ring: &PolyRing,
    ambient_twists: &[i64],
    gens: &[ModElem],
    rels: &[ModElem],
) -> Result<ModulePresentation, GbError> {
    let mut kept_gens: Vec<ModElem> = Vec::new();
    let mut gen_twists: Vec<i64> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let d = g
            .degree(ambient_twists)
            .map_err(|_| GbError::InhomogeneousInput)?
            .unwrap();
        kept_gens.push(g.clone());
        gen_twists.push(d);
    }
    let mut combined = kept_gens.clone();
    let mut degrees = gen_twists.clone();
    for r in rels {
        if r.is_zero() {
            continue;
        }
        let d = r
            .degree(ambient_twists)
            .map_err(|_| GbError::InhomogeneousInput)?
            .unwrap();
        combined.push(r.clone());
        degrees.push(d);
    }
    let syz = syzygies_given_degrees(
        ring,
        ambient_twists,
        &combined,
        &degrees,
        MonomialOrder::GrevLex,
    )?;
    let g = kept_gens.len();
    let mut rel_cols: Vec<ModElem> = Vec::new();
    for s in syz {
        let mut proj = ModElem::zero();
        for ((c, m), coef) in &s.terms {
            if *c < g {
                proj.add_term((*c, m.clone()), coef.clone());
            }
        }
        if !proj.is_zero() {
            rel_cols.push(proj);
        }
    }
    ModulePresentation::new(ring, gen_twists, rel_cols)
}

/// Homology of a complex of presented modules at its middle term:
/// `ker(mid -> out) / (im(in) + rels(mid))`. `out` is `None` when there is
/// no outgoing map (the kernel is everything); `in_cols` are the columns of
/// the incoming map, written in the middle ambient.
pub fn homology_of_presented(
    ring: &PolyRing,
    mid: &PresentedTerm,
    out: Option<(&PresentedTerm, &[ModElem])>,
    in_cols: &[ModElem],
) -> Result<ModulePresentation, GbError> {
    let kernel_gens: Vec<ModElem> = match out {
        None => (0..mid.twists.len())
            .map(|c| ModElem::unit(c, ring.num_vars(), &ring.field))
            .collect(),
        Some((target, map_cols)) => {
            // generators of the preimage of span(target.rels) under the map:
            // first-block projections of the syzygies of [map | target.rels]
            let mut combined: Vec<ModElem> = map_cols.to_vec();
            let mut degrees: Vec<i64> = mid.twists.clone();
            for r in &target.rels {
                if r.is_zero() {
                    continue;
                }
                let d = r
                    .degree(&target.twists)
                    .map_err(|_| GbError::InhomogeneousInput)?
                    .unwrap();
                combined.push(r.clone());
                degrees.push(d);
            }
            let syz = syzygies_given_degrees(
                ring,
                &target.twists,
                &combined,
                &degrees,
                MonomialOrder::GrevLex,
            )?;
            let g = map_cols.len();
            let mut out_gens = Vec::new();
            for s in syz {
                let mut proj = ModElem::zero();
                for ((c, m), coef) in &s.terms {
                    if *c < g {
                        proj.add_term((*c, m.clone()), coef.clone());
                    }
                }
                if !proj.is_zero() {
                    out_gens.push(proj);
                }
            }
            out_gens
        }
    };
    let mut rels: Vec<ModElem> = in_cols.to_vec();
    rels.extend(mid.rels.iter().cloned());
    let h = subquotient_presentation(ring, &mid.twists, &kernel_gens, &rels)?;
    Ok(h.minimalize())
}

/// Twists of a termwise tensor `F ⊗ N` of a free module with generator
/// degrees `f_twists` and a module generated in degrees `n_twists`; slot
/// `(p, k)` maps to index `p * n_twists.len() + k`.
fn tensor_twists(f_twists: &[i64], n_twists: &[i64]) -> Vec<i64> {
    let mut out = Vec::with_capacity(f_twists.len() * n_twists.len());
    for &a in f_twists {
        for &b in n_twists {
            out.push(a + b);
        }
    }
    out
}

/// Columns of `d ⊗ id_N` on generator slots, with `r = rank(N)`.
fn tensor_map_cols(d: &GradedMatrix, r: usize) -> Vec<ModElem> {
    let mut cols = Vec::with_capacity(d.n_cols() * r);
    for col in &d.cols {
        for k in 0..r {
            let mut v = ModElem::zero();
            for ((p, m), c) in &col.terms {
                v.add_term((p * r + k, m.clone()), c.clone());
            }
            cols.push(v);
        }
    }
    cols
}

/// The relations of `F ⊗ N`: one embedded copy of the relations of `N` per
/// generator slot of `F`.
fn embedded_rels(slot_count: usize, r: usize, n_rels: &[ModElem]) -> Vec<ModElem> {
    let mut out = Vec::new();
    for p in 0..slot_count {
        for rel in n_rels {
            let mut v = ModElem::zero();
            for ((k, m), c) in &rel.terms {
                v.add_term((p * r + k, m.clone()), c.clone());
            }
            out.push(v);
        }
    }
    out
}

fn neg_twists(t: &[i64]) -> Vec<i64> {
    t.iter().map(|a| -a).collect()
}

fn tensor_term(f_twists: &[i64], n: &ModulePresentation) -> PresentedTerm {
    PresentedTerm {
        twists: tensor_twists(f_twists, &n.gen_twists),
        rels: embedded_rels(f_twists.len(), n.rank(), &n.relations.cols),
    }
}

/// `Ext^i(M, N)` from a precomputed minimal resolution of `M`.
pub fn ext_from_resolution(
    res: &FreeResolution,
    n: &ModulePresentation,
    i: usize,
) -> Result<ModulePresentation, GbError> {
    let ring = &res.ring;
    let l = res.length();
    if i > l || n.rank() == 0 || res.betti(i) == 0 {
        return Ok(ModulePresentation::zero_module(ring));
    }
    let r = n.rank();
    let mid = tensor_term(&neg_twists(res.twists(i)), n);
    let out_term;
    let out_cols;
    let out = if i < l {
        out_term = tensor_term(&neg_twists(res.twists(i + 1)), n);
        out_cols = tensor_map_cols(&res.maps[i].transpose(), r);
        Some((&out_term, out_cols.as_slice()))
    } else {
        None
    };
    let in_cols = if i > 0 {
        tensor_map_cols(&res.maps[i - 1].transpose(), r)
    } else {
        Vec::new()
    };
    homology_of_presented(ring, &mid, out, &in_cols)
}

pub fn ext_module(
    m: &ModulePresentation,
    n: &ModulePresentation,
    i: usize,
) -> Result<ModulePresentation, GbError> {
    let res = FreeResolution::minimal(m)?;
    ext_from_resolution(&res, n, i)
}

/// `Ext^i(M, R)`.
pub fn ext_dual(m: &ModulePresentation, i: usize) -> Result<ModulePresentation, GbError> {
    ext_module(m, &ModulePresentation::ring_module(&m.ring), i)
}

/// `Tor_i(M, N)` from a precomputed minimal resolution of `M`.
pub fn tor_from_resolution(
    res: &FreeResolution,
    n: &ModulePresentation,
    i: usize,
) -> Result<ModulePresentation, GbError> {
    let ring = &res.ring;
    let l = res.length();
    if i > l || n.rank() == 0 || res.betti(i) == 0 {
        return Ok(ModulePresentation::zero_module(ring));
    }
    let r = n.rank();
    let mid = tensor_term(res.twists(i), n);
    let out_term;
    let out_cols;
    let out = if i > 0 {
        out_term = tensor_term(res.twists(i - 1), n);
        out_cols = tensor_map_cols(&res.maps[i - 1], r);
        Some((&out_term, out_cols.as_slice()))
    } else {
        None
    };
    let in_cols = if i < l {
        tensor_map_cols(&res.maps[i], r)
    } else {
        Vec::new()
    };
    homology_of_presented(ring, &mid, out, &in_cols)
}

pub fn tor_module(
    m: &ModulePresentation,
    n: &ModulePresentation,
    i: usize,
) -> Result<ModulePresentation, GbError> {
    let res = FreeResolution::minimal(m)?;
    tor_from_resolution(&res, n, i)
}

/// Krull dimension, read off as the pole order of the Hilbert series at
/// `t = 1`. `-inf` for the zero module.
pub fn krull_dim(m: &ModulePresentation) -> ExtendedInt {
    HilbertSeries::of_module(m).pole_order()
}

/// Projective dimension: length of the minimal free resolution. `-inf` for
/// the zero module.
pub fn projective_dim(m: &ModulePresentation) -> ExtendedInt {
    if m.is_zero() {
        return ExtendedInt::NegInf;
    }
    let res = FreeResolution::minimal(m).expect("homogeneous presentation");
    ExtendedInt::Finite(res.length() as i64)
}

/// Depth with respect to the irrelevant maximal ideal, via
/// `depth + pd = n`. `+inf` for the zero module.
pub fn depth_m(m: &ModulePresentation) -> ExtendedInt {
    if m.is_zero() {
        return ExtendedInt::PosInf;
    }
    let res = FreeResolution::minimal(m).expect("homogeneous presentation");
    ExtendedInt::Finite(m.ring.num_vars() as i64 - res.length() as i64)
}

/// `grade(I, M)`: least `i` with `Ext^i(R/I, M) != 0`, where `quot` is the
/// cyclic module `R/I`. `+inf` when every Ext vanishes (e.g. `M = 0`, or
/// `I` the unit ideal).
pub fn grade_on(quot: &ModulePresentation, m: &ModulePresentation) -> ExtendedInt {
    if quot.is_zero() || m.is_zero() {
        return ExtendedInt::PosInf;
    }
    let res = FreeResolution::minimal(quot).expect("homogeneous presentation");
    for i in 0..=res.length() {
        let e = ext_from_resolution(&res, m, i).expect("homogeneous presentation");
        if !e.is_zero() {
            return ExtendedInt::Finite(i as i64);
        }
    }
    ExtendedInt::PosInf
}

/// `grade(I, M)` for a monomial ideal.
pub fn grade_of_ideal_on(ideal: &MonomialIdeal, m: &ModulePresentation) -> ExtendedInt {
    let quot = ModulePresentation::cyclic_monomial(&m.ring, ideal);
    grade_on(&quot, m)
}

/// The finiteness dimension with respect to the irrelevant maximal ideal:
/// least `i` such that the `i`-th local cohomology is not finitely
/// generated. By graded local duality this is the least `i` with
/// `dim Ext^(n-i)(M, R) >= 1`; `+inf` when no such `i` exists.
pub fn finiteness_dim_m(m: &ModulePresentation) -> ExtendedInt {
    if m.is_zero() {
        return ExtendedInt::PosInf;
    }
    let n = m.ring.num_vars();
    let res = FreeResolution::minimal(m).expect("homogeneous presentation");
    let ring_mod = ModulePresentation::ring_module(&m.ring);
    for i in 0..=n {
        let e = ext_from_resolution(&res, &ring_mod, n - i).expect("homogeneous presentation");
        if krull_dim(&e) >= ExtendedInt::Finite(1) {
            return ExtendedInt::Finite(i as i64);
        }
    }
    ExtendedInt::PosInf
}

/// Cohen-Macaulay classification of a module (all with respect to the
/// irrelevant maximal ideal). The three flags are not exclusive: CM implies
/// both of the others.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CmProfile {
    pub cm: bool,
    pub generalized_cm: bool,
    pub sequentially_cm: bool,
}

pub fn is_cm(m: &ModulePresentation) -> bool {
    m.is_zero() || depth_m(m) == krull_dim(m)
}

/// Generalized CM: all local cohomology below the dimension has finite
/// length, i.e. the finiteness dimension is at least the dimension.
pub fn is_generalized_cm(m: &ModulePresentation) -> bool {
    m.is_zero() || finiteness_dim_m(m) >= krull_dim(m)
}

/// Sequentially CM, by the duality criterion: for every `i`, the module
/// `Ext^(n-i)(M, R)` is zero or CM of dimension `i`.
pub fn is_sequentially_cm(m: &ModulePresentation) -> bool {
    if m.is_zero() {
        return true;
    }
    let n = m.ring.num_vars();
    let res = FreeResolution::minimal(m).expect("homogeneous presentation");
    let ring_mod = ModulePresentation::ring_module(&m.ring);
    for i in 0..=n {
        let e = ext_from_resolution(&res, &ring_mod, n - i).expect("homogeneous presentation");
        if e.is_zero() {
            continue;
        }
        if krull_dim(&e) != ExtendedInt::Finite(i as i64) || !is_cm(&e) {
            return false;
        }
    }
    true
}

pub fn cm_profile(m: &ModulePresentation) -> CmProfile {
    CmProfile {
        cm: is_cm(m),
        generalized_cm: is_generalized_cm(m),
        sequentially_cm: is_sequentially_cm(m),
    }
}
