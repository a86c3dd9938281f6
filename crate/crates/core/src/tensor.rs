//! Tensor products over the ground field: the join of two polynomial
//! rings, extension of ideals and subquotients, and the block presentation
//! of a tensor product of presented modules.

use alloc::string::String;
use alloc::vec::Vec;

use crate::cech::MonomialSubquotient;
use crate::filtration::DimensionFiltration;
use crate::free_module::ModElem;
use crate::monomial::Monomial;
use crate::monomial_ideal::MonomialIdeal;
use crate::presentation::ModulePresentation;
use crate::ring::PolyRing;

/// The join `T = R ⊗_k S` of two polynomial rings over the same field:
/// all variables of `R` followed by all variables of `S`.
#[derive(Clone, Debug)]
pub struct RingJoin {
    pub left: PolyRing,
    pub right: PolyRing,
    pub joined: PolyRing,
}

impl RingJoin {
    /// Join the rings; the fields must agree. Variable names are kept, so
    /// the caller is responsible for avoiding collisions.
    pub fn new(left: &PolyRing, right: &PolyRing) -> RingJoin {
        assert_eq!(left.field, right.field, "join requires a common field");
        let mut vars: Vec<String> = left.vars.clone();
        vars.extend(right.vars.iter().cloned());
        RingJoin {
            left: left.clone(),
            right: right.clone(),
            joined: PolyRing::new(left.field.clone(), vars),
        }
    }

    pub fn embed_left_monomial(&self, m: &Monomial) -> Monomial {
        let mut e = m.0.clone();
        e.resize(self.joined.num_vars(), 0);
        Monomial(e)
    }

    pub fn embed_right_monomial(&self, m: &Monomial) -> Monomial {
        let mut e = alloc::vec![0u32; self.left.num_vars()];
        e.extend(m.0.iter().copied());
        Monomial(e)
    }

    pub fn embed_left_ideal(&self, i: &MonomialIdeal) -> MonomialIdeal {
        MonomialIdeal::new(
            self.joined.num_vars(),
            i.gens.iter().map(|g| self.embed_left_monomial(g)).collect(),
        )
    }

    pub fn embed_right_ideal(&self, i: &MonomialIdeal) -> MonomialIdeal {
        MonomialIdeal::new(
            self.joined.num_vars(),
            i.gens.iter().map(|g| self.embed_right_monomial(g)).collect(),
        )
    }

    /// The ideal presenting `R/I ⊗ S/J` as a quotient of the join:
    /// the sum of the two extensions.
    pub fn tensor_ideal(&self, i: &MonomialIdeal, j: &MonomialIdeal) -> MonomialIdeal {
        self.embed_left_ideal(i).sum(&self.embed_right_ideal(j))
    }

    /// Tensor product of monomial subquotients: numerator the product of
    /// the extended numerators, denominator mixing each denominator with
    /// the other side's numerator.
    pub fn tensor_subquotient(
        &self,
        a: &MonomialSubquotient,
        b: &MonomialSubquotient,
    ) -> MonomialSubquotient {
        let k1 = self.embed_left_ideal(&a.numerator);
        let j1 = self.embed_left_ideal(&a.denominator);
        let k2 = self.embed_right_ideal(&b.numerator);
        let j2 = self.embed_right_ideal(&b.denominator);
        MonomialSubquotient::new(k1.multiply(&k2), j1.multiply(&k2).sum(&k1.multiply(&j2)))
    }

    /// Block presentation of `M ⊗_k N` over the join: generator `(p, k)`
    /// (index `p * rank(N) + k`) in degree `a_p + b_k`, with the relations
    /// of `M` spread over the `N`-slots and vice versa.
    pub fn tensor_modules(
        &self,
        m: &ModulePresentation,
        n: &ModulePresentation,
    ) -> ModulePresentation {
        let r = n.rank();
        let mut gen_twists = Vec::with_capacity(m.rank() * r);
        for &a in &m.gen_twists {
            for &b in &n.gen_twists {
                gen_twists.push(a + b);
            }
        }
        let mut cols: Vec<ModElem> = Vec::new();
        for col in &m.relations.cols {
            for k in 0..r {
                let mut v = ModElem::zero();
                for ((p, mono), c) in &col.terms {
                    v.add_term((p * r + k, self.embed_left_monomial(mono)), c.clone());
                }
                cols.push(v);
            }
        }
        for p in 0..m.rank() {
            for col in &n.relations.cols {
                let mut v = ModElem::zero();
                for ((k, mono), c) in &col.terms {
                    v.add_term((p * r + k, self.embed_right_monomial(mono)), c.clone());
                }
                cols.push(v);
            }
        }
        ModulePresentation::new(&self.joined, gen_twists, cols)
            .expect("tensor of homogeneous presentations is homogeneous")
    }

    /// Dimension filtration of a tensor product, merged from the factor
    /// filtrations by total value: the step at value `v` is generated by
    /// the denominator together with the products `K_i^e * K'_j^e` over all
    /// pairs with `values[i] + values'[j] <= v`. Over the join this agrees
    /// with the filtration computed directly from the primary decomposition
    /// of the tensor denominator, because extending the decompositions of
    /// the two denominators and summing componentwise decomposes the tensor
    /// denominator with componentwise-additive values.
    pub fn tensor_filtration(
        &self,
        f: &DimensionFiltration,
        g: &DimensionFiltration,
    ) -> DimensionFiltration {
        let ideal = self.tensor_ideal(&f.ideal, &g.ideal);
        let denominator = self.tensor_ideal(&f.denominator, &g.denominator);
        let mut values: Vec<i64> = Vec::new();
        for &a in &f.values {
            for &b in &g.values {
                values.push(a + b);
            }
        }
        values.sort_unstable();
        values.dedup();
        let mut numerators = Vec::with_capacity(values.len());
        for &v in &values {
            let mut k = denominator.clone();
            for (i, &a) in f.values.iter().enumerate() {
                for (j, &b) in g.values.iter().enumerate() {
                    if a + b <= v {
                        let prod = self
                            .embed_left_ideal(&f.numerators[i])
                            .multiply(&self.embed_right_ideal(&g.numerators[j]));
                        k = k.sum(&prod);
                    }
                }
            }
            numerators.push(k);
        }
        DimensionFiltration {
            ideal,
            denominator,
            values,
            numerators,
        }
    }
}
