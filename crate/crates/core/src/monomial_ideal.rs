//! Monomial ideals: minimal generators, intersections, colons, primary
//! decomposition and associated primes.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::monomial::Monomial;

/// A monomial ideal, stored by its unique minimal (antichain) generating set.
/// No generators means the zero ideal; the generator `1` alone means the
/// unit ideal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MonomialIdeal {
    pub n_vars: usize,
    pub gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(n_vars: usize, gens: Vec<Monomial>) -> MonomialIdeal {
        let mut ideal = MonomialIdeal { n_vars, gens };
        ideal.minimalize();
        ideal
    }

    pub fn zero(n_vars: usize) -> MonomialIdeal {
        MonomialIdeal {
            n_vars,
            gens: Vec::new(),
        }
    }

    pub fn unit(n_vars: usize) -> MonomialIdeal {
        MonomialIdeal {
            n_vars,
            gens: vec![Monomial::one(n_vars)],
        }
    }

    /// The irrelevant maximal ideal `(x_1, ..., x_n)`.
    pub fn irrelevant(n_vars: usize) -> MonomialIdeal {
        MonomialIdeal {
            n_vars,
            gens: (0..n_vars).map(|i| Monomial::var(i, n_vars)).collect(),
        }
    }

    /// The monomial prime on a set of variable indices.
    pub fn prime(n_vars: usize, vars: &[usize]) -> MonomialIdeal {
        MonomialIdeal {
            n_vars,
            gens: vars.iter().map(|&i| Monomial::var(i, n_vars)).collect(),
        }
    }

    fn minimalize(&mut self) {
        self.gens.sort();
        self.gens.dedup();
        let gens = core::mem::take(&mut self.gens);
        for (i, g) in gens.iter().enumerate() {
            let redundant = gens
                .iter()
                .enumerate()
                .any(|(j, h)| j != i && h.divides(g) && (h != g || j < i));
            if !redundant {
                self.gens.push(g.clone());
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Ideal containment by divisibility on generators.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        MonomialIdeal::new(self.n_vars, gens)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        MonomialIdeal::new(self.n_vars, gens)
    }

    /// Product ideal, generated by pairwise products.
    pub fn multiply(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        MonomialIdeal::new(self.n_vars, gens)
    }

    /// Colon ideal `(self : m)`.
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                Monomial(
                    g.0.iter()
                        .zip(&m.0)
                        .map(|(a, b)| a.saturating_sub(*b))
                        .collect(),
                )
            })
            .collect();
        MonomialIdeal::new(self.n_vars, gens)
    }

    pub fn radical(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.n_vars, self.gens.iter().map(|g| g.radical()).collect())
    }

    /// Variables generating the ideal, when it is a monomial prime.
    pub fn as_prime(&self) -> Option<Vec<usize>> {
        let mut vars = Vec::new();
        for g in &self.gens {
            let supp = g.support();
            if supp.len() != 1 || g.0[supp[0]] != 1 {
                return None;
            }
            vars.push(supp[0]);
        }
        vars.sort_unstable();
        Some(vars)
    }

    /// Max exponent of each variable over the generators, with a floor of 1.
    /// These bound the stabilization thresholds of the Cech backend.
    pub fn exponent_bounds(&self) -> Vec<u32> {
        let mut d = vec![1u32; self.n_vars];
        for g in &self.gens {
            for (j, &e) in g.0.iter().enumerate() {
                if e > d[j] {
                    d[j] = e;
                }
            }
        }
        d
    }

    /// A monomial ideal is primary iff every variable occurring in a
    /// generator also occurs as a pure power generator.
    pub fn is_primary(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        let mut used: BTreeSet<usize> = BTreeSet::new();
        let mut pure: BTreeSet<usize> = BTreeSet::new();
        for g in &self.gens {
            let supp = g.support();
            used.extend(supp.iter().copied());
            if supp.len() == 1 {
                pure.insert(supp[0]);
            }
        }
        used.is_subset(&pure)
    }

    /// Irredundant primary decomposition by recursive generator splitting.
    pub fn primary_decomposition(&self) -> Result<Vec<PrimaryComponent>, UnitIdeal> {
        if self.is_unit() {
            return Err(UnitIdeal);
        }
        let mut work = vec![self.clone()];
        let mut primaries: Vec<MonomialIdeal> = Vec::new();
        while let Some(j) = work.pop() {
            match j.split_candidate() {
                None => primaries.push(j),
                Some((g_idx, var)) => {
                    let g = &j.gens[g_idx];
                    let e = g.0[var];
                    let mut pure = Monomial::one(self.n_vars);
                    pure.0[var] = e;
                    let mut rest = g.clone();
                    rest.0[var] = 0;
                    let mut gens1 = j.gens.clone();
                    gens1[g_idx] = pure;
                    let mut gens2 = j.gens.clone();
                    gens2[g_idx] = rest;
                    work.push(MonomialIdeal::new(self.n_vars, gens1));
                    work.push(MonomialIdeal::new(self.n_vars, gens2));
                }
            }
        }
        // group by radical, intersect within the group
        primaries.sort();
        primaries.dedup();
        let mut grouped: Vec<MonomialIdeal> = Vec::new();
        for q in primaries {
            let rq = q.radical();
            match grouped.iter_mut().find(|h| h.radical() == rq) {
                Some(h) => *h = h.intersect(&q),
                None => grouped.push(q),
            }
        }
        // drop components containing the intersection of the others
        let mut keep = vec![true; grouped.len()];
        for i in 0..grouped.len() {
            let mut inter: Option<MonomialIdeal> = None;
            for (j, q) in grouped.iter().enumerate() {
                if j == i || !keep[j] {
                    continue;
                }
                inter = Some(match inter {
                    None => q.clone(),
                    Some(acc) => acc.intersect(q),
                });
            }
            if let Some(inter) = inter {
                if grouped[i].contains_ideal(&inter) {
                    keep[i] = false;
                }
            }
        }
        let mut out = Vec::new();
        for (q, k) in grouped.into_iter().zip(keep) {
            if !k {
                continue;
            }
            let prime_vars = q
                .radical()
                .as_prime()
                .expect("radical of primary monomial ideal is a monomial prime");
            out.push(PrimaryComponent {
                ideal: q,
                prime_vars,
            });
        }
        Ok(out)
    }

    /// A generator with mixed support, together with a variable to split on.
    fn split_candidate(&self) -> Option<(usize, usize)> {
        if self.is_primary() {
            return None;
        }
        for (i, g) in self.gens.iter().enumerate() {
            let supp = g.support();
            if supp.len() >= 2 {
                return Some((i, supp[0]));
            }
        }
        None
    }

    /// Associated primes of `R/self`, as sorted variable-index sets, from an
    /// irredundant primary decomposition.
    pub fn associated_primes(&self) -> Result<Vec<Vec<usize>>, UnitIdeal> {
        let mut out: Vec<Vec<usize>> = self
            .primary_decomposition()?
            .into_iter()
            .map(|c| c.prime_vars)
            .collect();
        out.sort();
        out.dedup();
        Ok(out)
    }
}

/// One component of a primary decomposition: a primary monomial ideal and
/// its associated monomial prime.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PrimaryComponent {
    pub ideal: MonomialIdeal,
    /// Variable indices generating the associated prime.
    pub prime_vars: Vec<usize>,
}

impl PrimaryComponent {
    /// Krull dimension of `R/prime` = n - |prime_vars|.
    pub fn quotient_dim(&self, n_vars: usize) -> i64 {
        (n_vars - self.prime_vars.len()) as i64
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct UnitIdeal;

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial(e.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| m(g)).collect())
    }

    #[test]
    fn minimal_generators_are_an_antichain() {
        let j = ideal(2, &[&[2, 0], &[2, 1], &[1, 1]]);
        assert_eq!(j.gens, vec![m(&[1, 1]), m(&[2, 0])]);
    }

    #[test]
    fn decomposition_of_lp_ideal() {
        // (x1^2, x1 x2) = (x1) cap (x1^2, x2)
        let j = ideal(2, &[&[2, 0], &[1, 1]]);
        let comps = j.primary_decomposition().unwrap();
        assert_eq!(comps.len(), 2);
        let inter = comps
            .iter()
            .map(|c| c.ideal.clone())
            .reduce(|a, b| a.intersect(&b))
            .unwrap();
        assert_eq!(inter, j);
        let mut primes: Vec<_> = comps.iter().map(|c| c.prime_vars.clone()).collect();
        primes.sort();
        assert_eq!(primes, vec![vec![0], vec![0, 1]]);
        // brute-force double inclusion over low-degree monomials
        for d in 0..=4u32 {
            for mm in crate::monomial::monomials_of_total_degree(2, d) {
                let in_j = j.contains(&mm);
                let in_all = comps.iter().all(|c| c.ideal.contains(&mm));
                assert_eq!(in_j, in_all, "monomial {:?}", mm);
            }
        }
    }

    #[test]
    fn squarefree_principal_splits() {
        let j = ideal(2, &[&[1, 1]]);
        let comps = j.primary_decomposition().unwrap();
        let mut primes: Vec<_> = comps.iter().map(|c| c.prime_vars.clone()).collect();
        primes.sort();
        assert_eq!(primes, vec![vec![0], vec![1]]);
    }

    #[test]
    fn maximal_primary_stays_whole() {
        let j = ideal(2, &[&[1, 0], &[0, 1]]);
        let comps = j.primary_decomposition().unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].ideal, j);
    }

    #[test]
    fn unit_ideal_rejected() {
        let j = MonomialIdeal::unit(2);
        assert!(j.primary_decomposition().is_err());
    }

    #[test]
    fn ass_of_lp() {
        let j = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(j.associated_primes().unwrap(), vec![vec![0], vec![0, 1]]);
    }

    #[test]
    fn ass_of_squarefree() {
        let j = ideal(2, &[&[1, 1]]);
        assert_eq!(j.associated_primes().unwrap(), vec![vec![0], vec![1]]);
    }

    #[test]
    fn ass_of_ring_is_zero_prime() {
        let j = MonomialIdeal::zero(2);
        assert_eq!(j.associated_primes().unwrap(), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn colon_and_intersection() {
        let j = ideal(2, &[&[2, 0], &[1, 1]]);
        // (J : x1) = (x1, x2)
        assert_eq!(j.colon(&m(&[1, 0])), ideal(2, &[&[1, 0], &[0, 1]]));
    }
}
