//! Dimension filtrations of monomial quotient rings with respect to an
//! ideal, and the induced sequential Cohen-Macaulay test.
//!
//! For `M = R/J` the filtration is read off an irredundant primary
//! decomposition of `J`: each component contributes the cohomological
//! dimension of the ideal on `R/p` for its prime `p`, and the `i`-th
//! filtration step is the intersection of the components with a strictly
//! larger value, taken modulo `J`.

use alloc::vec::Vec;

use crate::cech::{grade_cd, MonomialSubquotient};
use crate::extint::ExtendedInt;
use crate::monomial::Monomial;
use crate::monomial_ideal::{MonomialIdeal, UnitIdeal};
use crate::ring::Field;

/// The filtration `0 = D_{-1} ⊆ D_0 ⊂ ... ⊂ D_r = R/J`, stored by the
/// numerator ideals `K_i` with `D_i = K_i/J`. `values[i]` is the
/// cohomological dimension of the ideal on `D_i`, strictly increasing;
/// the last numerator is the unit ideal.
#[derive(Clone, Debug)]
pub struct DimensionFiltration {
    pub ideal: MonomialIdeal,
    pub denominator: MonomialIdeal,
    pub values: Vec<i64>,
    pub numerators: Vec<MonomialIdeal>,
}

impl DimensionFiltration {
    /// Build the filtration of `R/J` with respect to `ideal`.
    pub fn new(
        ideal: &MonomialIdeal,
        j: &MonomialIdeal,
        field: &Field,
    ) -> Result<DimensionFiltration, UnitIdeal> {
        let n = j.n_vars;
        let components = j.primary_decomposition()?;
        // cd of the ideal on each R/p, via the Cech backend
        let mut tagged: Vec<(i64, MonomialIdeal)> = Vec::new();
        for comp in &components {
            let p = MonomialIdeal::prime(n, &comp.prime_vars);
            let quot = MonomialSubquotient::quotient_ring(&p);
            let (_, cd) = grade_cd(ideal, &quot, field);
            match cd {
                ExtendedInt::Finite(c) => tagged.push((c, comp.ideal.clone())),
                // the ideal annihilates R/p after localization: the
                // component never obstructs a filtration step
                ExtendedInt::NegInf => {}
                ExtendedInt::PosInf => unreachable!("cd of f.g. module is finite or -inf"),
            }
        }
        let mut values: Vec<i64> = tagged.iter().map(|(c, _)| *c).collect();
        values.sort_unstable();
        values.dedup();
        let mut numerators = Vec::with_capacity(values.len());
        for &v in &values {
            let k = tagged
                .iter()
                .filter(|(c, _)| *c > v)
                .map(|(_, q)| q.clone())
                .fold(MonomialIdeal::unit(n), |acc, q| acc.intersect(&q));
            numerators.push(k);
        }
        Ok(DimensionFiltration {
            ideal: ideal.clone(),
            denominator: j.clone(),
            values,
            numerators,
        })
    }

    pub fn steps(&self) -> usize {
        self.numerators.len()
    }

    /// `D_i` as a monomial subquotient.
    pub fn step(&self, i: usize) -> MonomialSubquotient {
        MonomialSubquotient::new(self.numerators[i].clone(), self.denominator.clone())
    }

    /// `D_i / D_{i-1}` as a monomial subquotient (`D_0 / 0 = D_0`).
    pub fn quotient(&self, i: usize) -> MonomialSubquotient {
        let below = if i == 0 {
            self.denominator.clone()
        } else {
            self.numerators[i - 1].clone()
        };
        MonomialSubquotient::new(self.numerators[i].clone(), below)
    }
}

/// Sequentially CM with respect to `ideal`: every filtration quotient
/// `D_i/D_{i-1}` has equal grade and cohomological dimension. The zero
/// module counts as sequentially CM; the unit denominator is rejected.
pub fn is_seq_cm_wrt(
    ideal: &MonomialIdeal,
    j: &MonomialIdeal,
    field: &Field,
) -> Result<bool, UnitIdeal> {
    let filt = DimensionFiltration::new(ideal, j, field)?;
    for i in 0..filt.steps() {
        let q = filt.quotient(i);
        let (g, c) = grade_cd(ideal, &q, field);
        if g != c {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Associated primes of a monomial subquotient `K/J`, as sorted variable
/// index sets: every prime of the form `(J : m)` with `m` a monomial in `K`
/// is associated, and witnesses occur within the exponent box.
pub fn associated_primes_subquotient(m: &MonomialSubquotient) -> Vec<Vec<usize>> {
    let n = m.n_vars;
    let bounds = m.exponent_bounds();
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut exps = alloc::vec![0u32; n];
    loop {
        let cand = Monomial(exps.clone());
        if m.numerator.contains(&cand) && !m.denominator.contains(&cand) {
            let colon = m.denominator.colon(&cand);
            if let Some(vars) = colon.as_prime() {
                out.push(vars);
            }
        }
        let mut pos = 0;
        loop {
            if pos == n {
                out.sort();
                out.dedup();
                return out;
            }
            if exps[pos] < bounds[pos] {
                exps[pos] += 1;
                break;
            }
            exps[pos] = 0;
            pos += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn m(e: &[u32]) -> Monomial {
        Monomial(e.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| m(g)).collect())
    }

    #[test]
    fn filtration_of_mixed_quotient() {
        // J = (x1^2, x1 x2): components (x1) [cd 1] and (x1^2, x2) [cd 0]
        let j = ideal(2, &[&[2, 0], &[1, 1]]);
        let i = MonomialIdeal::irrelevant(2);
        let filt = DimensionFiltration::new(&i, &j, &Field::Rationals).unwrap();
        assert_eq!(filt.values, vec![0, 1]);
        assert_eq!(filt.numerators[0], ideal(2, &[&[1, 0]]));
        assert!(filt.numerators[1].is_unit());
        // cd of each step matches the recorded value
        for (step, &v) in filt.values.iter().enumerate() {
            let (_, c) = grade_cd(&i, &filt.step(step), &Field::Rationals);
            assert_eq!(c, ExtendedInt::Finite(v));
        }
    }

    #[test]
    fn mixed_quotient_is_seq_cm() {
        let j = ideal(2, &[&[2, 0], &[1, 1]]);
        let i = MonomialIdeal::irrelevant(2);
        assert!(is_seq_cm_wrt(&i, &j, &Field::Rationals).unwrap());
    }

    #[test]
    fn cm_quotients_are_seq_cm() {
        let i3 = MonomialIdeal::irrelevant(3);
        for j in [
            MonomialIdeal::zero(3),
            ideal(3, &[&[1, 0, 0]]),
            ideal(3, &[&[2, 0, 0], &[0, 3, 0]]),
        ] {
            assert!(is_seq_cm_wrt(&i3, &j, &Field::Rationals).unwrap());
        }
    }

    #[test]
    fn disjoint_edges_ring_is_not_seq_cm() {
        // Stanley-Reisner ideal of two disjoint edges: unmixed of dimension
        // 2 but depth 1, so the one-step filtration fails the CM check
        let j = ideal(
            4,
            &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]],
        );
        let i = MonomialIdeal::irrelevant(4);
        let filt = DimensionFiltration::new(&i, &j, &Field::Rationals).unwrap();
        assert_eq!(filt.steps(), 1);
        assert!(!is_seq_cm_wrt(&i, &j, &Field::Rationals).unwrap());
    }

    #[test]
    fn ass_of_quotient_ring_matches_decomposition() {
        for j in [
            ideal(2, &[&[2, 0], &[1, 1]]),
            ideal(2, &[&[1, 1]]),
            ideal(3, &[&[1, 1, 0], &[0, 1, 1]]),
            MonomialIdeal::zero(2),
        ] {
            let quot = MonomialSubquotient::quotient_ring(&j);
            assert_eq!(
                associated_primes_subquotient(&quot),
                j.associated_primes().unwrap(),
                "J = {:?}",
                j
            );
        }
    }

    #[test]
    fn ass_of_proper_subquotient() {
        // (x1)/(x1^2, x1 x2) is the finite-length socle piece: Ass = {m}
        let k = ideal(2, &[&[1, 0]]);
        let j = ideal(2, &[&[2, 0], &[1, 1]]);
        let sq = MonomialSubquotient::new(k, j);
        assert_eq!(associated_primes_subquotient(&sq), vec![vec![0, 1]]);
    }
}
