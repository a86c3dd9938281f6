//! Local cohomology of monomial subquotients through the Cech complex,
//! evaluated one fine multidegree at a time.
//!
//! Supports of the ideal's generators (an antichain after dropping
//! redundant ones) serve as the Cech factors; only the radical matters for
//! local cohomology, so exponents are discarded up front. Every graded
//! piece of a localized monomial subquotient is 0- or 1-dimensional, which
//! turns each multidegree into a small complex of coordinate vector spaces
//! with signed 0/1 differentials. Scanning a finite witness box of
//! multidegrees is exhaustive: clamping any multidegree into the box
//! preserves which components are nonzero, hence the homology.

use alloc::vec;
use alloc::vec::Vec;

use crate::extint::ExtendedInt;
use crate::monomial::Multidegree;
use crate::monomial_ideal::MonomialIdeal;
use crate::ring::Field;
use crate::scalar::Scalar;

/// A subquotient `K / J` of the ring by monomial ideals (`R/J` itself when
/// `K` is the unit ideal). Only the image of `K` in `R/J` matters, so `J`
/// need not be contained in `K`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialSubquotient {
    pub n_vars: usize,
    pub numerator: MonomialIdeal,
    pub denominator: MonomialIdeal,
}

impl MonomialSubquotient {
    pub fn new(numerator: MonomialIdeal, denominator: MonomialIdeal) -> MonomialSubquotient {
        MonomialSubquotient {
            n_vars: numerator.n_vars,
            numerator,
            denominator,
        }
    }

    /// The cyclic quotient `R/J`.
    pub fn quotient_ring(j: &MonomialIdeal) -> MonomialSubquotient {
        MonomialSubquotient::new(MonomialIdeal::unit(j.n_vars), j.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.numerator
            .gens
            .iter()
            .all(|g| self.denominator.contains(g))
    }

    /// Whether the multidegree-`a` piece of the localization inverting the
    /// variables in `inverted` is nonzero (it is at most 1-dimensional).
    /// Divisibility is only tested outside the inverted variables.
    pub fn piece_nonzero(&self, a: &Multidegree, inverted: &[bool]) -> bool {
        for (j, &aj) in a.0.iter().enumerate() {
            if !inverted[j] && aj < 0 {
                return false;
            }
        }
        let fits = |g: &crate::monomial::Monomial| {
            g.0.iter()
                .enumerate()
                .all(|(j, &e)| inverted[j] || (e as i64) <= a.0[j])
        };
        self.numerator.gens.iter().any(&fits) && !self.denominator.gens.iter().any(&fits)
    }

    /// Per-variable exponent bounds for the witness box, with a floor of 1.
    pub fn exponent_bounds(&self) -> Vec<u32> {
        let mut d = self.numerator.exponent_bounds();
        for (a, b) in d.iter_mut().zip(self.denominator.exponent_bounds()) {
            *a = (*a).max(b);
        }
        d
    }
}

/// The Cech factors for an ideal: minimal supports of its generators.
/// Empty output means the zero ideal (no factors, complex concentrated in
/// degree 0); a single empty support means the unit ideal.
pub fn cech_factors(ideal: &MonomialIdeal) -> Vec<Vec<usize>> {
    let mut supports: Vec<Vec<usize>> = ideal.gens.iter().map(|g| g.support()).collect();
    supports.sort();
    supports.dedup();
    let is_subset = |a: &[usize], b: &[usize]| a.iter().all(|x| b.contains(x));
    let kept: Vec<Vec<usize>> = supports
        .iter()
        .enumerate()
        .filter(|(i, s)| {
            !supports
                .iter()
                .enumerate()
                .any(|(j, t)| j != *i && is_subset(t, s) && (t != *s || j < *i))
        })
        .map(|(_, s)| s.clone())
        .collect();
    kept
}

fn rank_of(matrix: &mut Vec<Vec<Scalar>>, field: &Field) -> usize {
    let rows = matrix.len();
    if rows == 0 {
        return 0;
    }
    let cols = matrix[0].len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        if row >= rows {
            break;
        }
        let pivot = (row..rows).find(|&i| !matrix[i][col].is_zero());
        let pivot = match pivot {
            Some(p) => p,
            None => continue,
        };
        matrix.swap(row, pivot);
        let inv = matrix[row][col].clone().inv();
        for c in col..cols {
            matrix[row][c] = matrix[row][c].clone() * inv.clone();
        }
        for i in 0..rows {
            if i == row || matrix[i][col].is_zero() {
                continue;
            }
            let f = matrix[i][col].clone();
            for c in col..cols {
                let delta = matrix[row][c].clone() * f.clone();
                matrix[i][c] = matrix[i][c].clone() - delta;
            }
        }
        row += 1;
        rank += 1;
    }
    let _ = field;
    rank
}

/// The inverted-variable mask of every subset of Cech factors.
fn subset_masks(factors: &[Vec<usize>], n: usize) -> Vec<Vec<bool>> {
    let t = factors.len();
    (0..1usize << t)
        .map(|s| {
            let mut inv = vec![false; n];
            for (f, support) in factors.iter().enumerate() {
                if s >> f & 1 == 1 {
                    for &v in support {
                        inv[v] = true;
                    }
                }
            }
            inv
        })
        .collect()
}

/// Dimensions of the Cech cohomology pieces of `m` at one multidegree.
pub fn cech_cohomology_at(
    ideal: &MonomialIdeal,
    m: &MonomialSubquotient,
    field: &Field,
    a: &Multidegree,
) -> Vec<u64> {
    let factors = cech_factors(ideal);
    let masks = subset_masks(&factors, m.n_vars);
    let mut dims = vec![0u64; factors.len() + 1];
    scan_point(m, field, &factors, &masks, a, &mut dims);
    dims
}

/// Dimensions of the Cech cohomology of `m` with respect to `ideal`, summed
/// over the witness box of multidegrees; entry `i` covers cohomological
/// degree `i`. Vanishing in the box implies vanishing everywhere.
pub fn cech_cohomology_box_dims(
    ideal: &MonomialIdeal,
    m: &MonomialSubquotient,
    field: &Field,
) -> Vec<u64> {
    let n = m.n_vars;
    let factors = cech_factors(ideal);
    let t = factors.len();
    let mut dims = vec![0u64; t + 1];
    let masks = subset_masks(&factors, n);
    let bounds = m.exponent_bounds();
    let mut a = Multidegree(vec![-1; n]);
    loop {
        scan_point(m, field, &factors, &masks, &a, &mut dims);
        // advance the odometer over the box [-1, bounds_j]
        let mut pos = 0;
        loop {
            if pos == n {
                return dims;
            }
            if a.0[pos] < bounds[pos] as i64 {
                a.0[pos] += 1;
                break;
            }
            a.0[pos] = -1;
            pos += 1;
        }
    }
}

fn scan_point(
    m: &MonomialSubquotient,
    field: &Field,
    factors: &[Vec<usize>],
    masks: &[Vec<bool>],
    a: &Multidegree,
    dims: &mut [u64],
) {
    let t = factors.len();
    // active subsets by cardinality
    let mut active: Vec<Vec<usize>> = vec![Vec::new(); t + 1];
    for (s, mask) in masks.iter().enumerate() {
        if m.piece_nonzero(a, mask) {
            active[s.count_ones() as usize].push(s);
        }
    }
    // rank of each differential d_s : C^s -> C^(s+1)
    let mut ranks = vec![0usize; t + 1];
    for s in 0..t {
        let src = &active[s];
        let dst = &active[s + 1];
        if src.is_empty() || dst.is_empty() {
            continue;
        }
        let mut matrix: Vec<Vec<Scalar>> = dst
            .iter()
            .map(|_| vec![Scalar::from_int_in(0, field); src.len()])
            .collect();
        for (col, &sub) in src.iter().enumerate() {
            for f in 0..t {
                if sub >> f & 1 == 1 {
                    continue;
                }
                let bigger = sub | 1 << f;
                if let Ok(row) = dst.binary_search(&bigger) {
                    // sign: parity of the number of chosen factors below f
                    let below = (bigger & ((1 << f) - 1)).count_ones();
                    let sign: i64 = if below % 2 == 0 { 1 } else { -1 };
                    matrix[row][col] = Scalar::from_int_in(sign, field);
                }
            }
        }
        ranks[s] = rank_of(&mut matrix, field);
    }
    for s in 0..=t {
        let incoming = if s == 0 { 0 } else { ranks[s - 1] };
        dims[s] += (active[s].len() - ranks[s] - incoming) as u64;
    }
}

/// `(grade, cd)` of `ideal` on the monomial subquotient: the least and the
/// greatest cohomological degree with nonvanishing local cohomology.
/// `(+inf, -inf)` when all of it vanishes (zero module, unit ideal, or
/// support disjoint from the vanishing locus).
pub fn grade_cd(
    ideal: &MonomialIdeal,
    m: &MonomialSubquotient,
    field: &Field,
) -> (ExtendedInt, ExtendedInt) {
    let dims = cech_cohomology_box_dims(ideal, m, field);
    let grade = dims
        .iter()
        .position(|&d| d > 0)
        .map_or(ExtendedInt::PosInf, |i| ExtendedInt::Finite(i as i64));
    let cd = dims
        .iter()
        .rposition(|&d| d > 0)
        .map_or(ExtendedInt::NegInf, |i| ExtendedInt::Finite(i as i64));
    (grade, cd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;

    fn m(e: &[u32]) -> Monomial {
        Monomial(e.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| m(g)).collect())
    }

    #[test]
    fn factors_are_an_antichain_of_supports() {
        let i = ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 0, 3]]);
        // support {0} swallows {0,1}
        assert_eq!(cech_factors(&i), vec![vec![0], vec![2]]);
    }

    #[test]
    fn maximal_ideal_on_ring() {
        let i = MonomialIdeal::irrelevant(2);
        let r = MonomialSubquotient::quotient_ring(&MonomialIdeal::zero(2));
        let (g, c) = grade_cd(&i, &r, &Field::Rationals);
        assert_eq!(g, ExtendedInt::Finite(2));
        assert_eq!(c, ExtendedInt::Finite(2));
    }

    #[test]
    fn principal_prime_on_ring() {
        let i = ideal(2, &[&[1, 0]]);
        let r = MonomialSubquotient::quotient_ring(&MonomialIdeal::zero(2));
        let (g, c) = grade_cd(&i, &r, &Field::Rationals);
        assert_eq!(g, ExtendedInt::Finite(1));
        assert_eq!(c, ExtendedInt::Finite(1));
    }

    #[test]
    fn maximal_ideal_on_mixed_module() {
        // K/J with J = (x1^2, x1 x2): depth 0 (grade 0) but dimension 1
        let i = MonomialIdeal::irrelevant(2);
        let mm = MonomialSubquotient::quotient_ring(&ideal(2, &[&[2, 0], &[1, 1]]));
        let (g, c) = grade_cd(&i, &mm, &Field::Rationals);
        assert_eq!(g, ExtendedInt::Finite(0));
        assert_eq!(c, ExtendedInt::Finite(1));
    }

    #[test]
    fn zero_ideal_gives_plain_sections() {
        let i = MonomialIdeal::zero(2);
        let r = MonomialSubquotient::quotient_ring(&MonomialIdeal::zero(2));
        let (g, c) = grade_cd(&i, &r, &Field::Rationals);
        assert_eq!(g, ExtendedInt::Finite(0));
        assert_eq!(c, ExtendedInt::Finite(0));
    }

    #[test]
    fn unit_ideal_annihilates_everything() {
        let i = MonomialIdeal::unit(2);
        let r = MonomialSubquotient::quotient_ring(&MonomialIdeal::zero(2));
        let (g, c) = grade_cd(&i, &r, &Field::Rationals);
        assert_eq!(g, ExtendedInt::PosInf);
        assert_eq!(c, ExtendedInt::NegInf);
    }

    #[test]
    fn zero_module_has_no_cohomology() {
        let i = MonomialIdeal::irrelevant(2);
        let z = MonomialSubquotient::new(ideal(2, &[&[1, 0]]), MonomialIdeal::unit(2));
        assert!(z.is_zero());
        let (g, c) = grade_cd(&i, &z, &Field::Rationals);
        assert_eq!(g, ExtendedInt::PosInf);
        assert_eq!(c, ExtendedInt::NegInf);
    }

    #[test]
    fn support_disjoint_from_ideal() {
        // I = (x1) on R/(x1): localizing kills the module
        let i = ideal(2, &[&[1, 0]]);
        let mm = MonomialSubquotient::quotient_ring(&ideal(2, &[&[1, 0]]));
        let (g, c) = grade_cd(&i, &mm, &Field::Rationals);
        // H^0 = module itself (I acts nilpotently), H^1 = 0
        assert_eq!(g, ExtendedInt::Finite(0));
        assert_eq!(c, ExtendedInt::Finite(0));
    }

    #[test]
    fn clamping_preserves_pieces() {
        let mm = MonomialSubquotient::quotient_ring(&ideal(2, &[&[2, 0], &[1, 1]]));
        let bounds = mm.exponent_bounds();
        for inv in [[false, false], [true, false], [false, true], [true, true]] {
            for a0 in -4i64..6 {
                for a1 in -4i64..6 {
                    let a = Multidegree(vec![a0, a1]);
                    let clamped = Multidegree(vec![
                        a0.clamp(-1, bounds[0] as i64),
                        a1.clamp(-1, bounds[1] as i64),
                    ]);
                    assert_eq!(
                        mm.piece_nonzero(&a, &inv),
                        mm.piece_nonzero(&clamped, &inv),
                        "a = {:?}, inverted = {:?}",
                        a,
                        inv
                    );
                }
            }
        }
    }

    #[test]
    fn grade_matches_dimension_drop_for_primes() {
        // grade((x1), R) + dim R/(x1) = dim R for the CM ring
        let r = MonomialSubquotient::quotient_ring(&MonomialIdeal::zero(3));
        for vars in [vec![0usize], vec![0, 1], vec![0, 1, 2]] {
            let p = MonomialIdeal::prime(3, &vars);
            let (g, _) = grade_cd(&p, &r, &Field::Rationals);
            assert_eq!(g, ExtendedInt::Finite(vars.len() as i64));
        }
    }
}
