//! Elements of graded free modules and homogeneous matrices between them.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::PolyRing;
use crate::scalar::Scalar;

/// An element of a graded free module, as a finite map from
/// `(component, monomial)` to nonzero scalars.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ModElem {
    pub terms: BTreeMap<(usize, Monomial), Scalar>,
}

impl ModElem {
    pub fn zero() -> ModElem {
        ModElem::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn unit(component: usize, n_vars: usize, field: &crate::ring::Field) -> ModElem {
        let mut terms = BTreeMap::new();
        terms.insert(
            (component, Monomial::one(n_vars)),
            Scalar::from_int_in(1, field),
        );
        ModElem { terms }
    }

    pub fn from_poly(component: usize, p: &Polynomial) -> ModElem {
        ModElem {
            terms: p
                .terms
                .iter()
                .map(|(m, c)| ((component, m.clone()), c.clone()))
                .collect(),
        }
    }

    pub fn add_term(&mut self, key: (usize, Monomial), c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&key) {
            None => {
                self.terms.insert(key, c);
            }
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(key, s);
                }
            }
        }
    }

    pub fn add(&self, other: &ModElem) -> ModElem {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> ModElem {
        ModElem {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> ModElem {
        if c.is_zero() {
            return ModElem::zero();
        }
        ModElem {
            terms: self
                .terms
                .iter()
                .map(|(k, cc)| (k.clone(), cc.clone() * c.clone()))
                .collect(),
        }
    }

    /// Multiply by the term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> ModElem {
        if c.is_zero() {
            return ModElem::zero();
        }
        ModElem {
            terms: self
                .terms
                .iter()
                .map(|((comp, mm), cc)| ((*comp, mm.mul(m)), cc.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn lead_term(&self, order: MonomialOrder) -> Option<(&(usize, Monomial), &Scalar)> {
        self.terms
            .iter()
            .max_by(|(k1, _), (k2, _)| order.cmp_term(k1, k2))
    }

    /// Max component index appearing (for rank checks).
    pub fn max_component(&self) -> Option<usize> {
        self.terms.keys().map(|(c, _)| *c).max()
    }

    /// Common degree of the terms relative to `row_twists`, or None when
    /// inhomogeneous. The zero element is homogeneous of every degree.
    pub fn degree(&self, row_twists: &[i64]) -> Result<Option<i64>, Inhomogeneous> {
        let mut deg = None;
        for ((c, m), _) in &self.terms {
            let d = m.total_degree() + row_twists[*c];
            match deg {
                None => deg = Some(d),
                Some(e) if e == d => {}
                _ => return Err(Inhomogeneous),
            }
        }
        Ok(deg)
    }

    pub fn render(&self, ring: &PolyRing) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut parts: Vec<String> = Vec::new();
        for ((c, m), s) in &self.terms {
            let mut piece = String::new();
            if !s.is_one() {
                let _ = write!(piece, "{}*", s.render());
            }
            if !m.is_one() {
                let _ = write!(piece, "{}*", m.render(ring));
            }
            let _ = write!(piece, "e{}", c);
            parts.push(piece);
        }
        parts.join(" + ")
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Inhomogeneous;

/// A homogeneous matrix between graded free modules, stored by columns.
///
/// Column `j` is an element of the free module with `row_twists`, and is
/// homogeneous of degree `col_twists[j]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedMatrix {
    pub ring: PolyRing,
    pub row_twists: Vec<i64>,
    pub col_twists: Vec<i64>,
    pub cols: Vec<ModElem>,
}

impl GradedMatrix {
    pub fn new(
        ring: &PolyRing,
        row_twists: Vec<i64>,
        cols: Vec<ModElem>,
    ) -> Result<GradedMatrix, Inhomogeneous> {
        let mut col_twists = Vec::with_capacity(cols.len());
        for col in &cols {
            match col.degree(&row_twists)? {
                Some(d) => col_twists.push(d),
                // zero column: degree unconstrained, record 0
                None => col_twists.push(0),
            }
        }
        Ok(GradedMatrix {
            ring: ring.clone(),
            row_twists,
            col_twists,
            cols,
        })
    }

    /// Identity-free zero map into a free module with the given twists.
    pub fn zero_map(ring: &PolyRing, row_twists: Vec<i64>) -> GradedMatrix {
        GradedMatrix {
            ring: ring.clone(),
            row_twists,
            col_twists: Vec::new(),
            cols: Vec::new(),
        }
    }

    pub fn n_rows(&self) -> usize {
        self.row_twists.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols.len()
    }

    /// Apply the matrix to an element of the source free module.
    pub fn apply(&self, v: &ModElem) -> ModElem {
        let mut out = ModElem::zero();
        for ((comp, m), c) in &v.terms {
            debug_assert!(*comp < self.n_cols());
            let img = self.cols[*comp].mul_term(m, c);
            out = out.add(&img);
        }
        out
    }

    /// Compose `self . other` (apply `other` first).
    pub fn compose(&self, other: &GradedMatrix) -> GradedMatrix {
        let cols: Vec<ModElem> = other.cols.iter().map(|c| self.apply(c)).collect();
        GradedMatrix {
            ring: self.ring.clone(),
            row_twists: self.row_twists.clone(),
            col_twists: other.col_twists.clone(),
            cols,
        }
    }

    /// Entry at `(row, col)` as a polynomial.
    pub fn entry(&self, row: usize, col: usize) -> Polynomial {
        let mut p = Polynomial::zero(&self.ring);
        for ((c, m), s) in &self.cols[col].terms {
            if *c == row {
                p.add_term(m.clone(), s.clone());
            }
        }
        p
    }

    /// Every entry lies in the irrelevant maximal ideal (no scalar entries).
    pub fn entries_in_irrelevant_ideal(&self) -> bool {
        self.cols
            .iter()
            .flat_map(|col| col.terms.keys())
            .all(|(_, m)| !m.is_one())
    }

    /// Uniform twist shift on rows and columns (for `Hom(-, R(t))`-style
    /// constructions).
    pub fn shift(&self, t: i64) -> GradedMatrix {
        GradedMatrix {
            ring: self.ring.clone(),
            row_twists: self.row_twists.iter().map(|a| a + t).collect(),
            col_twists: self.col_twists.iter().map(|a| a + t).collect(),
            cols: self.cols.clone(),
        }
    }

    /// Transpose, swapping the roles of rows and columns. Row twist `a`
    /// becomes column twist `-a`, matching `Hom(-, R)` on free modules.
    pub fn transpose(&self) -> GradedMatrix {
        let mut cols: Vec<ModElem> = (0..self.n_rows()).map(|_| ModElem::zero()).collect();
        for (j, col) in self.cols.iter().enumerate() {
            for ((i, m), c) in &col.terms {
                cols[*i].add_term((j, m.clone()), c.clone());
            }
        }
        GradedMatrix {
            ring: self.ring.clone(),
            row_twists: self.col_twists.iter().map(|a| -a).collect(),
            col_twists: self.row_twists.iter().map(|a| -a).collect(),
            cols,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Field;
    use alloc::string::ToString;
    use alloc::vec;

    fn r2() -> PolyRing {
        PolyRing::new(Field::Rationals, vec!["x1".to_string(), "x2".to_string()])
    }

    fn xelem(ring: &PolyRing, comp: usize, exps: &[u32]) -> ModElem {
        let mut e = ModElem::zero();
        e.add_term(
            (comp, Monomial(exps.to_vec())),
            Scalar::from_int_in(1, &ring.field),
        );
        e
    }

    #[test]
    fn degree_checks_homogeneity() {
        let r = r2();
        let mut v = xelem(&r, 0, &[2, 0]);
        assert_eq!(v.degree(&[0, 0]), Ok(Some(2)));
        v = v.add(&xelem(&r, 1, &[0, 1]));
        assert!(v.degree(&[0, 0]).is_err());
        // but twists can restore homogeneity
        assert_eq!(v.degree(&[0, 1]), Ok(Some(2)));
    }

    #[test]
    fn apply_matrix() {
        let r = r2();
        // d = [x1 x2] : R(-1)^2 -> R
        let d = GradedMatrix::new(
            &r,
            vec![0],
            vec![xelem(&r, 0, &[1, 0]), xelem(&r, 0, &[0, 1])],
        )
        .unwrap();
        assert_eq!(d.col_twists, vec![1, 1]);
        // apply to the Koszul syzygy (x2, -x1): must vanish
        let syz = xelem(&r, 0, &[0, 1]).add(&xelem(&r, 1, &[1, 0]).neg());
        assert!(d.apply(&syz).is_zero());
    }

    #[test]
    fn transpose_round_trip() {
        let r = r2();
        let d = GradedMatrix::new(
            &r,
            vec![0, 1],
            vec![xelem(&r, 0, &[2, 0]).add(&xelem(&r, 1, &[0, 1]))],
        )
        .unwrap();
        let dtt = d.transpose().transpose();
        assert_eq!(d, dtt);
    }
}
