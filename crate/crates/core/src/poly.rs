//! Sparse multivariate polynomials over an exact field.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::monomial::Monomial;
use crate::ring::PolyRing;
use crate::scalar::Scalar;

/// A polynomial as a finite map from monomials to nonzero scalars.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    pub ring: PolyRing,
    pub terms: BTreeMap<Monomial, Scalar>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PolyError {
    RingMismatch,
}

impl Polynomial {
    pub fn zero(ring: &PolyRing) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &PolyRing) -> Polynomial {
        Polynomial::monomial(ring, Monomial::one(ring.num_vars()))
    }

    pub fn monomial(ring: &PolyRing, m: Monomial) -> Polynomial {
        let mut terms = BTreeMap::new();
        terms.insert(m, Scalar::from_int_in(1, &ring.field));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn term(ring: &PolyRing, c: Scalar, m: Monomial) -> Polynomial {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        if self.ring != other.ring {
            return Err(PolyError::RingMismatch);
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        if self.ring != other.ring {
            return Err(PolyError::RingMismatch);
        }
        let mut out = Polynomial::zero(&self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, cc)| (m.clone(), cc.clone() * c.clone()))
                .collect(),
        }
    }

    /// All terms share the same total degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.total_degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut parts: Vec<String> = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let ms = m.render(&self.ring);
            let piece = if c.is_one() {
                ms
            } else if m.is_one() {
                c.render()
            } else {
                let mut s = c.render();
                s.push('*');
                s.push_str(&ms);
                s
            };
            parts.push(piece);
        }
        parts.join(" + ")
    }
}
