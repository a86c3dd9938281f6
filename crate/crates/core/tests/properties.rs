//! Randomized cross-checks between the independent backends of the kernel:
//! Groebner bases vs direct algebra, Cech cohomology vs resolution-based
//! invariants, and the structural identities of dimension filtrations.

use proptest::prelude::*;

use tcm_core::cech::{cech_cohomology_box_dims, grade_cd, MonomialSubquotient};
use tcm_core::filtration::{associated_primes_subquotient, is_seq_cm_wrt, DimensionFiltration};
use tcm_core::groebner::{normal_form, reduced_groebner, syzygies};
use tcm_core::hilbert::HilbertSeries;
use tcm_core::homological::{depth_m, grade_of_ideal_on, krull_dim};
use tcm_core::order::MonomialOrder;
use tcm_core::ExtendedInt;
use tcm_core::Field;
use tcm_core::ModulePresentation;
use tcm_core::Monomial;
use tcm_core::MonomialIdeal;
use tcm_core::Multidegree;
use tcm_core::PolyRing;

fn ring(n: usize) -> PolyRing {
    PolyRing::new(Field::Rationals, (1..=n).map(|i| format!("x{}", i)).collect())
}

/// A nontrivial monomial (total degree >= 1, exponents <= 3).
fn arb_monomial(n: usize) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0u32..=3, n)
        .prop_filter("nonconstant", |e| e.iter().any(|&x| x > 0))
        .prop_map(Monomial)
}

/// A proper nonzero monomial ideal with 1..=4 generators.
fn arb_ideal(n: usize) -> impl Strategy<Value = MonomialIdeal> {
    proptest::collection::vec(arb_monomial(n), 1..=4)
        .prop_map(move |gens| MonomialIdeal::new(n, gens))
}

// ---------------------------------------------------------------------------
// Groebner layer
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The reduced basis is canonical: independent of generator order.
    #[test]
    fn reduced_basis_is_permutation_invariant(j in arb_ideal(3)) {
        let r = ring(3);
        let m = ModulePresentation::cyclic_monomial(&r, &j);
        let mut cols = m.relations.cols.clone();
        let forward = reduced_groebner(&cols, MonomialOrder::GrevLex);
        cols.reverse();
        let backward = reduced_groebner(&cols, MonomialOrder::GrevLex);
        let mut a = forward;
        let mut b = backward;
        a.sort_by(|x, y| format!("{:?}", x).cmp(&format!("{:?}", y)));
        b.sort_by(|x, y| format!("{:?}", x).cmp(&format!("{:?}", y)));
        prop_assert_eq!(a, b);
    }

    /// Normal forms are idempotent and detect membership.
    #[test]
    fn normal_form_idempotent(j in arb_ideal(3), probe in arb_monomial(3)) {
        let r = ring(3);
        let m = ModulePresentation::cyclic_monomial(&r, &j);
        let gb = &m.gb;
        let f = tcm_core::free_module::ModElem::from_poly(
            0,
            &tcm_core::poly::Polynomial::monomial(&r, probe.clone()),
        );
        let nf = gb.normal_form(&f).unwrap();
        let nf2 = normal_form(&nf, &gb.elems, MonomialOrder::GrevLex);
        prop_assert_eq!(&nf, &nf2);
        // membership agrees with direct divisibility for monomial ideals
        prop_assert_eq!(nf.is_zero(), j.contains(&probe));
    }

    /// Syzygies really annihilate the generators they relate.
    #[test]
    fn syzygies_annihilate(j in arb_ideal(3)) {
        let r = ring(3);
        let m = ModulePresentation::cyclic_monomial(&r, &j);
        let rels = &m.relations;
        let syz = syzygies(&r, &rels.row_twists, &rels.cols, MonomialOrder::GrevLex).unwrap();
        for s in &syz {
            prop_assert!(rels.apply(s).is_zero());
        }
    }

    /// Buchberger criterion on the constructed basis: every S-element of the
    /// reduced basis reduces to zero against it.
    #[test]
    fn s_elements_reduce_to_zero(j in arb_ideal(2)) {
        let r = ring(2);
        let m = ModulePresentation::cyclic_monomial(&r, &j);
        let basis = &m.gb.elems;
        for (i, gi) in basis.iter().enumerate() {
            for gj in basis.iter().skip(i + 1) {
                let (ki, ci) = gi.lead_term(MonomialOrder::GrevLex).unwrap();
                let (kj, cj) = gj.lead_term(MonomialOrder::GrevLex).unwrap();
                if ki.0 != kj.0 {
                    continue;
                }
                let lcm = ki.1.lcm(&kj.1);
                let s = gi
                    .mul_term(&lcm.div(&ki.1), &ci.clone().inv())
                    .add(&gj.mul_term(&lcm.div(&kj.1), &cj.clone().inv()).neg());
                prop_assert!(normal_form(&s, basis, MonomialOrder::GrevLex).is_zero());
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Hilbert series and resolution layer
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Series coefficients equal standard-monomial counts in each degree.
    #[test]
    fn hilbert_coefficients_count_standard_monomials(j in arb_ideal(3)) {
        let r = ring(3);
        let m = ModulePresentation::cyclic_monomial(&r, &j);
        let hs = HilbertSeries::of_module(&m);
        for d in 0..7i64 {
            prop_assert_eq!(hs.coefficient(d), m.graded_piece_dim(d) as i64, "degree {}", d);
        }
    }

    /// Independent backends agree at the irrelevant ideal: depth from the
    /// resolution equals grade from Ext vanishing equals the least Cech
    /// index, and the Hilbert-series dimension equals the greatest.
    #[test]
    fn triple_backend_agreement(j in arb_ideal(3)) {
        prop_assume!(j.is_proper());
        let r = ring(3);
        let m = ModulePresentation::cyclic_monomial(&r, &j);
        let irr = MonomialIdeal::irrelevant(3);
        let (g, c) = grade_cd(&irr, &MonomialSubquotient::quotient_ring(&j), &Field::Rationals);
        prop_assert_eq!(depth_m(&m), g);
        prop_assert_eq!(grade_of_ideal_on(&irr, &m), g);
        prop_assert_eq!(krull_dim(&m), c);
    }
}

// ---------------------------------------------------------------------------
// Cech layer
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// Multidegree pieces are invariant under clamping into the witness box,
    /// for every localization pattern.
    #[test]
    fn cech_pieces_clamp_invariant(
        k in arb_ideal(3),
        j in arb_ideal(3),
        raw in proptest::collection::vec(-4i64..=6, 3),
        mask in proptest::collection::vec(any::<bool>(), 3),
    ) {
        let sq = MonomialSubquotient::new(k, j);
        let bounds = sq.exponent_bounds();
        let a = Multidegree(raw.clone());
        let clamped = Multidegree(
            raw.iter()
                .zip(&bounds)
                .map(|(&x, &b)| x.clamp(-1, b as i64))
                .collect(),
        );
        prop_assert_eq!(sq.piece_nonzero(&a, &mask), sq.piece_nonzero(&clamped, &mask));
    }
}

// ---------------------------------------------------------------------------
// Primary decomposition and filtration layer
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The intersection of the primary components is the input ideal.
    #[test]
    fn primary_components_intersect_to_input(j in arb_ideal(3)) {
        let comps = j.primary_decomposition().unwrap();
        let inter = comps
            .iter()
            .map(|c| c.ideal.clone())
            .fold(MonomialIdeal::unit(3), |a, b| a.intersect(&b));
        prop_assert_eq!(inter, j);
    }

    /// Each filtration quotient's associated primes are exactly the primes
    /// of the module whose cohomological dimension matches the step value.
    #[test]
    fn filtration_quotients_have_predicted_ass(i in arb_ideal(3), j in arb_ideal(3)) {
        let filt = DimensionFiltration::new(&i, &j, &Field::Rationals).unwrap();
        let ass_m = j.associated_primes().unwrap();
        for (step, &v) in filt.values.iter().enumerate() {
            let expected: Vec<Vec<usize>> = ass_m
                .iter()
                .filter(|p| {
                    let quot = MonomialSubquotient::quotient_ring(&MonomialIdeal::prime(3, p));
                    let (_, c) = grade_cd(&i, &quot, &Field::Rationals);
                    c == ExtendedInt::Finite(v)
                })
                .cloned()
                .collect();
            prop_assert_eq!(
                associated_primes_subquotient(&filt.quotient(step)),
                expected,
                "step {} of {:?} wrt {:?}",
                step,
                filt.denominator,
                filt.ideal
            );
        }
    }

    /// Short exact sequence 0 -> K/J -> R/J -> R/K -> 0: the middle
    /// cohomological dimension is the max of the outer ones.
    #[test]
    fn cd_is_max_along_short_exact_sequences(
        i in arb_ideal(3),
        a in arb_ideal(3),
        b in arb_ideal(3),
    ) {
        let k = a;
        let j = k.intersect(&b); // J subset K
        let f = &Field::Rationals;
        let (_, mid) = grade_cd(&i, &MonomialSubquotient::quotient_ring(&j), f);
        let (_, sub) = grade_cd(&i, &MonomialSubquotient::new(k.clone(), j.clone()), f);
        let (_, quo) = grade_cd(&i, &MonomialSubquotient::quotient_ring(&k), f);
        prop_assert_eq!(mid, sub.max(quo));
    }

    /// On sequentially CM instances, nonvanishing local cohomology happens
    /// exactly at the filtration values, and every filtration step has the
    /// grade of the whole module.
    #[test]
    fn seq_cm_filtration_controls_cohomology(i in arb_ideal(3), j in arb_ideal(3)) {
        let f = &Field::Rationals;
        prop_assume!(is_seq_cm_wrt(&i, &j, f).unwrap());
        let filt = DimensionFiltration::new(&i, &j, f).unwrap();
        let dims = cech_cohomology_box_dims(&i, &MonomialSubquotient::quotient_ring(&j), f);
        let nonzero: Vec<i64> = dims
            .iter()
            .enumerate()
            .filter(|(_, &d)| d > 0)
            .map(|(k, _)| k as i64)
            .collect();
        prop_assert_eq!(&nonzero, &filt.values);
        let (g_m, _) = grade_cd(&i, &MonomialSubquotient::quotient_ring(&j), f);
        for step in 0..filt.steps() {
            let (g_i, _) = grade_cd(&i, &filt.step(step), f);
            prop_assert_eq!(g_i, g_m, "step {}", step);
        }
    }
}
