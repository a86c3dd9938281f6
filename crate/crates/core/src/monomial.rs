//! Monomials (dense exponent vectors) and multidegrees.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::ring::PolyRing;

/// A monomial as a dense vector of non-negative exponents.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Monomial {
        Monomial(vec![0; n])
    }

    pub fn var(i: usize, n: usize) -> Monomial {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    /// Componentwise <=.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Quotient; caller guarantees divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Squarefree part: each positive exponent replaced by 1.
    pub fn radical(&self) -> Monomial {
        Monomial(self.0.iter().map(|&e| if e > 0 { 1 } else { 0 }).collect())
    }

    pub fn multidegree(&self) -> Multidegree {
        Multidegree(self.0.iter().map(|&e| e as i64).collect())
    }

    pub fn render(&self, ring: &PolyRing) -> String {
        if self.is_one() {
            return String::from("1");
        }
        let mut s = String::new();
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                s.push('*');
            }
            first = false;
            if e == 1 {
                let _ = write!(s, "{}", ring.vars[i]);
            } else {
                let _ = write!(s, "{}^{}", ring.vars[i], e);
            }
        }
        s
    }
}

/// All monomials in `n` variables of total degree exactly `d`.
pub fn monomials_of_total_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    let mut current = vec![0u32; n];
    fn rec(current: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
        if pos + 1 == current.len() {
            current[pos] = remaining;
            out.push(Monomial(current.clone()));
            return;
        }
        for e in 0..=remaining {
            current[pos] = e;
            rec(current, pos + 1, remaining - e, out);
        }
    }
    rec(&mut current, 0, d, &mut out);
    out
}

/// A point of the Z^n grading lattice. Entries may be negative (twists,
/// Laurent degrees in the Cech backend).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Multidegree(pub Vec<i64>);

impl Multidegree {
    pub fn zero(n: usize) -> Multidegree {
        Multidegree(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &Multidegree) -> Multidegree {
        Multidegree(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial(e.to_vec())
    }

    #[test]
    fn divisibility_is_componentwise() {
        assert!(m(&[1, 0]).divides(&m(&[2, 3])));
        assert!(!m(&[1, 4]).divides(&m(&[2, 3])));
    }

    #[test]
    fn lcm_gcd() {
        assert_eq!(m(&[2, 1]).lcm(&m(&[1, 3])), m(&[2, 3]));
        assert_eq!(m(&[2, 1]).gcd(&m(&[1, 3])), m(&[1, 1]));
    }

    #[test]
    fn lcm_is_join() {
        // lcm(a,b) is the least monomial divisible by both
        let a = m(&[2, 0, 1]);
        let b = m(&[1, 3, 0]);
        let l = a.lcm(&b);
        assert!(a.divides(&l) && b.divides(&l));
        assert!(l.divides(&a.mul(&b)));
    }
}
