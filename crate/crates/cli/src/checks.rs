//! Executable theorem checks. Every check computes the two sides of its
//! identity through disjoint code paths (join-ring vs factor-ring
//! computations, Cech complexes vs resolution-based duality) and records
//! the provenance of each side.
//!
//! All checks accept a `mutate` flag: when set, the left side of every
//! comparison is deliberately perturbed before comparing. The suite
//! self-test uses this to prove the checks are not vacuous.

use std::time::Instant;

use tcm_core::cech::{cech_cohomology_at, grade_cd, MonomialSubquotient};
use tcm_core::filtration::{is_seq_cm_wrt, DimensionFiltration};
use tcm_core::hilbert::HilbertSeries;
use tcm_core::homological::{
    depth_m, ext_module, finiteness_dim_m, is_cm, is_generalized_cm, is_sequentially_cm,
    krull_dim, tor_module,
};
use tcm_core::{ExtendedInt, ModulePresentation, MonomialIdeal, Multidegree};

use crate::instance::Instance;
use crate::report::{verdict_of, CheckReport, Comparison, Verdict};

fn mutated_ext(v: ExtendedInt) -> ExtendedInt {
    match v {
        ExtendedInt::Finite(n) => ExtendedInt::Finite(n + 1),
        _ => ExtendedInt::Finite(0),
    }
}

fn cmp_ext(what: &str, left: ExtendedInt, right: ExtendedInt, mutate: bool) -> Comparison {
    let l = if mutate { mutated_ext(left) } else { left };
    Comparison {
        what: what.to_string(),
        left: l.to_string(),
        right: right.to_string(),
        equal: l == right,
    }
}

fn cmp_bool(what: &str, left: bool, right: bool, mutate: bool) -> Comparison {
    let l = if mutate { !left } else { left };
    Comparison {
        what: what.to_string(),
        left: l.to_string(),
        right: right.to_string(),
        equal: l == right,
    }
}

fn cmp_render(what: &str, left: String, right: String, equal: bool) -> Comparison {
    Comparison {
        what: what.to_string(),
        left,
        right,
        equal,
    }
}

fn finish(
    theorem: &str,
    inst: &Instance,
    comparisons: Vec<Comparison>,
    provenance: &str,
    start: Instant,
) -> CheckReport {
    CheckReport {
        theorem: theorem.to_string(),
        instance: inst.digest(),
        verdict: verdict_of(&comparisons),
        comparisons,
        reason: None,
        millis: start.elapsed().as_millis(),
        provenance: provenance.to_string(),
    }
}

fn skip(theorem: &str, inst: &Instance, reason: &str, start: Instant) -> CheckReport {
    CheckReport {
        theorem: theorem.to_string(),
        instance: inst.digest(),
        comparisons: Vec::new(),
        verdict: Verdict::Skip,
        reason: Some(reason.to_string()),
        millis: start.elapsed().as_millis(),
        provenance: String::new(),
    }
}

/// Whether `ideal` acts Cohen-Macaulay-ly on the module behind `(g, c)`:
/// equal grade and cohomological dimension, or vanishing cohomology.
fn cm_from_grade_cd(g: ExtendedInt, c: ExtendedInt) -> bool {
    g == c || g == ExtendedInt::PosInf
}

/// Additivity of grade and cohomological dimension under tensoring, with
/// the single-sided variants (extension of one factor's ideal alone).
pub fn check_grade_cd_additivity(inst: &Instance, mutate: bool) -> CheckReport {
    let start = Instant::now();
    let f = &inst.field;
    let join = inst.join();
    let big = join.tensor_ideal(&inst.ideal_left, &inst.ideal_right);
    let jt = join.tensor_ideal(&inst.module_left, &inst.module_right);
    let tq = MonomialSubquotient::quotient_ring(&jt);
    let lq = MonomialSubquotient::quotient_ring(&inst.module_left);
    let nq = MonomialSubquotient::quotient_ring(&inst.module_right);

    let (gt, ct) = grade_cd(&big, &tq, f);
    let (gl, cl) = grade_cd(&inst.ideal_left, &lq, f);
    let (gn, cn) = grade_cd(&inst.ideal_right, &nq, f);

    let mut comps = vec![
        cmp_ext("grade(IJ,T) = grade(I,L)+grade(J,N)", gt, gl.add(gn), mutate),
        cmp_ext("cd(IJ,T) = cd(I,L)+cd(J,N)", ct, cl.add(cn), mutate),
    ];
    // single-sided: extending only one ideal to the join changes nothing
    let (gle, cle) = grade_cd(&join.embed_left_ideal(&inst.ideal_left), &tq, f);
    let (gre, cre) = grade_cd(&join.embed_right_ideal(&inst.ideal_right), &tq, f);
    comps.push(cmp_ext("grade(I^e,T) = grade(I,L)", gle, gl, mutate));
    comps.push(cmp_ext("cd(I^e,T) = cd(I,L)", cle, cl, mutate));
    comps.push(cmp_ext("grade(J^e,T) = grade(J,N)", gre, gn, mutate));
    comps.push(cmp_ext("cd(J^e,T) = cd(J,N)", cre, cn, mutate));
    finish(
        "grade-cd-additivity",
        inst,
        comps,
        "left=join:cech right=factors:cech",
        start,
    )
}

/// All multidegrees of the box `[-1, bounds_j]^n`.
fn box_points(bounds: &[u32]) -> Vec<Multidegree> {
    let n = bounds.len();
    let mut out = Vec::new();
    let mut a = vec![-1i64; n];
    loop {
        out.push(Multidegree(a.clone()));
        let mut pos = 0;
        loop {
            if pos == n {
                return out;
            }
            if a[pos] < bounds[pos] as i64 {
                a[pos] += 1;
                break;
            }
            a[pos] = -1;
            pos += 1;
        }
    }
}

/// Corner isomorphisms of local cohomology: at the grade corner and the cd
/// corner, every multigraded piece of the join cohomology is the product of
/// the factor pieces.
pub fn check_corner_isomorphisms(inst: &Instance, mutate: bool) -> CheckReport {
    let start = Instant::now();
    if inst.ideal_left.is_unit() || inst.ideal_right.is_unit() {
        return skip(
            "corner-isomorphisms",
            inst,
            "requires IL != L and JN != N (proper ideals)",
            start,
        );
    }
    let f = &inst.field;
    let join = inst.join();
    let big = join.tensor_ideal(&inst.ideal_left, &inst.ideal_right);
    let jt = join.tensor_ideal(&inst.module_left, &inst.module_right);
    let tq = MonomialSubquotient::quotient_ring(&jt);
    let lq = MonomialSubquotient::quotient_ring(&inst.module_left);
    let nq = MonomialSubquotient::quotient_ring(&inst.module_right);
    let (gl, cl) = grade_cd(&inst.ideal_left, &lq, f);
    let (gn, cn) = grade_cd(&inst.ideal_right, &nq, f);
    let (gl, cl, gn, cn) = match (gl.finite(), cl.finite(), gn.finite(), cn.finite()) {
        (Some(a), Some(b), Some(c), Some(d)) => (a, b, c, d),
        _ => {
            return skip(
                "corner-isomorphisms",
                inst,
                "vanishing factor cohomology (degenerate hypothesis)",
                start,
            )
        }
    };

    let lbox = box_points(&lq.exponent_bounds());
    let nbox = box_points(&nq.exponent_bounds());
    // factor piece tables at both corner indices
    let ltab: Vec<(Multidegree, u64, u64)> = lbox
        .iter()
        .map(|a| {
            let d = cech_cohomology_at(&inst.ideal_left, &lq, f, a);
            (a.clone(), piece(&d, gl), piece(&d, cl))
        })
        .collect();
    let ntab: Vec<(Multidegree, u64, u64)> = nbox
        .iter()
        .map(|a| {
            let d = cech_cohomology_at(&inst.ideal_right, &nq, f, a);
            (a.clone(), piece(&d, gn), piece(&d, cn))
        })
        .collect();

    let mut grade_total = (0u64, 0u64);
    let mut cd_total = (0u64, 0u64);
    let mut first_bad: Option<String> = None;
    for (al, lg, lc) in &ltab {
        for (ar, ng, nc) in &ntab {
            let mut concat = al.0.clone();
            concat.extend(ar.0.iter().copied());
            let dims = cech_cohomology_at(&big, &tq, f, &Multidegree(concat.clone()));
            let bump = u64::from(mutate);
            let jg = piece(&dims, gl + gn) + bump;
            let jc = piece(&dims, cl + cn) + bump;
            grade_total.0 += jg;
            grade_total.1 += lg * ng;
            cd_total.0 += jc;
            cd_total.1 += lc * nc;
            if (jg != lg * ng || jc != lc * nc) && first_bad.is_none() {
                first_bad = Some(format!(
                    "at {:?}: join ({}, {}) vs product ({}, {})",
                    concat,
                    jg,
                    jc,
                    lg * ng,
                    lc * nc
                ));
            }
        }
    }
    let comps = vec![
        cmp_render(
            "grade-corner pieces over witness box",
            first_bad
                .clone()
                .unwrap_or_else(|| format!("total {}", grade_total.0)),
            format!("total {}", grade_total.1),
            first_bad.is_none() && grade_total.0 == grade_total.1,
        ),
        cmp_render(
            "cd-corner pieces over witness box",
            first_bad.unwrap_or_else(|| format!("total {}", cd_total.0)),
            format!("total {}", cd_total.1),
            cd_total.0 == cd_total.1,
        ),
    ];
    finish(
        "corner-isomorphisms",
        inst,
        comps,
        "left=join:cech right=factors:cech-product",
        start,
    )
}

fn piece(dims: &[u64], i: i64) -> u64 {
    if i < 0 {
        return 0;
    }
    dims.get(i as usize).copied().unwrap_or(0)
}

/// Kunneth decomposition of Ext and Tor over the join, as an identity of
/// Hilbert series: the join-level module in homological degree `i` has the
/// series of the convolution of the factor tables.
pub fn check_kunneth(
    inst: &Instance,
    probe_left: &MonomialIdeal,
    probe_right: &MonomialIdeal,
    mutate: bool,
) -> CheckReport {
    let start = Instant::now();
    let a = inst.left_ring();
    let b = inst.right_ring();
    let join = inst.join();
    let l = inst.left_module();
    let n = inst.right_module();
    let l2 = ModulePresentation::cyclic_monomial(&a, probe_left);
    let n2 = ModulePresentation::cyclic_monomial(&b, probe_right);
    let t = ModulePresentation::cyclic_monomial(
        &join.joined,
        &join.tensor_ideal(&inst.module_left, &inst.module_right),
    );
    let t2 = ModulePresentation::cyclic_monomial(
        &join.joined,
        &join.tensor_ideal(probe_left, probe_right),
    );
    let na = a.num_vars();
    let nb = b.num_vars();
    let nt = na + nb;

    let one = HilbertSeries::from_numer(0, vec![1], 0);
    let mut comps = Vec::new();
    for (name, table_a, table_b, table_t) in [
        (
            "Ext",
            hs_table(na, |s| ext_module(&l, &l2, s).unwrap()),
            hs_table(nb, |t_| ext_module(&n, &n2, t_).unwrap()),
            hs_table(nt, |i| ext_module(&t, &t2, i).unwrap()),
        ),
        (
            "Tor",
            hs_table(na, |s| tor_module(&l, &l2, s).unwrap()),
            hs_table(nb, |t_| tor_module(&n, &n2, t_).unwrap()),
            hs_table(nt, |i| tor_module(&t, &t2, i).unwrap()),
        ),
    ] {
        for (i, join_hs) in table_t.iter().enumerate() {
            let mut conv = HilbertSeries::zero();
            for s in 0..=i.min(na) {
                let t_ = i - s;
                if t_ > nb {
                    continue;
                }
                conv = conv.add(&table_a[s].mul(&table_b[t_]));
            }
            let left = if mutate { join_hs.add(&one) } else { join_hs.clone() };
            comps.push(cmp_render(
                &format!("HS {}^{} convolution", name, i),
                left.render(),
                conv.render(),
                left == conv,
            ));
        }
    }
    finish(
        "kunneth",
        inst,
        comps,
        "left=join:resolution right=factors:resolution-convolution",
        start,
    )
}

fn hs_table(max: usize, mut f: impl FnMut(usize) -> ModulePresentation) -> Vec<HilbertSeries> {
    (0..=max).map(|i| HilbertSeries::of_module(&f(i))).collect()
}

/// The min-formula for the finiteness dimension at the irrelevant ideals:
/// `f(T) = min{depth L + f(N), f(L) + depth N}`, the left side by local
/// duality over the join.
pub fn check_finiteness_formula(inst: &Instance, mutate: bool) -> CheckReport {
    let start = Instant::now();
    let join = inst.join();
    let t = ModulePresentation::cyclic_monomial(
        &join.joined,
        &join.tensor_ideal(&inst.module_left, &inst.module_right),
    );
    let l = inst.left_module();
    let n = inst.right_module();
    let left = finiteness_dim_m(&t);
    let right = depth_m(&l)
        .add(finiteness_dim_m(&n))
        .min(finiteness_dim_m(&l).add(depth_m(&n)));
    let comps = vec![cmp_ext(
        "f(T) = min{depth L + f(N), f(L) + depth N}",
        left,
        right,
        mutate,
    )];
    finish(
        "finiteness-min-formula",
        inst,
        comps,
        "left=join:duality right=factors:duality+resolution",
        start,
    )
}

/// Cohen-Macaulay equivalences: CM transfer across the tensor product for
/// any proper ideals, and at irrelevant ideals with both dimensions
/// positive the three-way equivalence with generalized CM plus the f-sum
/// on CM instances.
pub fn check_cm_equivalences(inst: &Instance, mutate: bool) -> CheckReport {
    let start = Instant::now();
    if inst.ideal_left.is_unit() || inst.ideal_right.is_unit() {
        return skip(
            "cm-equivalences",
            inst,
            "requires IL != L and JN != N (proper ideals)",
            start,
        );
    }
    let f = &inst.field;
    let join = inst.join();
    let big = join.tensor_ideal(&inst.ideal_left, &inst.ideal_right);
    let jt = join.tensor_ideal(&inst.module_left, &inst.module_right);
    let (gt, ct) = grade_cd(&big, &MonomialSubquotient::quotient_ring(&jt), f);
    let (gl, cl) = grade_cd(
        &inst.ideal_left,
        &MonomialSubquotient::quotient_ring(&inst.module_left),
        f,
    );
    let (gn, cn) = grade_cd(
        &inst.ideal_right,
        &MonomialSubquotient::quotient_ring(&inst.module_right),
        f,
    );
    let mut comps = vec![cmp_bool(
        "CM(T) iff CM(L) and CM(N)",
        cm_from_grade_cd(gt, ct),
        cm_from_grade_cd(gl, cl) && cm_from_grade_cd(gn, cn),
        mutate,
    )];

    let irrelevant = inst.ideal_left == MonomialIdeal::irrelevant(inst.left_vars)
        && inst.ideal_right == MonomialIdeal::irrelevant(inst.right_vars);
    let dims_positive =
        cl >= ExtendedInt::Finite(1) && cn >= ExtendedInt::Finite(1);
    let mut provenance = "sides=cech".to_string();
    if irrelevant && dims_positive {
        // independent backend: resolutions and duality over the join
        let t = ModulePresentation::cyclic_monomial(&join.joined, &jt);
        let l = inst.left_module();
        let n = inst.right_module();
        let cm_t = is_cm(&t);
        comps.push(cmp_bool(
            "genCM(T) iff CM(T)",
            is_generalized_cm(&t),
            cm_t,
            mutate,
        ));
        comps.push(cmp_bool(
            "CM(T) iff CM(L) and CM(N) (duality backend)",
            cm_t,
            is_cm(&l) && is_cm(&n),
            mutate,
        ));
        if cm_t {
            comps.push(cmp_ext(
                "f(T) = f(L)+f(N) on the CM instance",
                finiteness_dim_m(&t),
                finiteness_dim_m(&l).add(finiteness_dim_m(&n)),
                mutate,
            ));
        }
        provenance = "sides=cech+duality".to_string();
    }
    finish("cm-equivalences", inst, comps, &provenance, start)
}

/// Sequential Cohen-Macaulayness transfers across the tensor product, the
/// merged filtration equals the directly computed one, and (at irrelevant
/// ideals) the duality classifier agrees and the f-sum holds under
/// positive grades.
pub fn check_seq_cm_equivalence(inst: &Instance, mutate: bool) -> CheckReport {
    let start = Instant::now();
    let f = &inst.field;
    let join = inst.join();
    let big = join.tensor_ideal(&inst.ideal_left, &inst.ideal_right);
    let jt = join.tensor_ideal(&inst.module_left, &inst.module_right);

    let seq_t = is_seq_cm_wrt(&big, &jt, f).expect("module ideal proper");
    let seq_l = is_seq_cm_wrt(&inst.ideal_left, &inst.module_left, f).expect("proper");
    let seq_n = is_seq_cm_wrt(&inst.ideal_right, &inst.module_right, f).expect("proper");
    let mut comps = vec![cmp_bool(
        "seqCM(T) iff seqCM(L) and seqCM(N)",
        seq_t,
        seq_l && seq_n,
        mutate,
    )];

    // the merged filtration must agree with the direct one step by step
    let fl = DimensionFiltration::new(&inst.ideal_left, &inst.module_left, f).expect("proper");
    let fn_ = DimensionFiltration::new(&inst.ideal_right, &inst.module_right, f).expect("proper");
    let merged = join.tensor_filtration(&fl, &fn_);
    let direct = DimensionFiltration::new(&big, &jt, f).expect("proper");
    let values_equal = if mutate {
        false
    } else {
        merged.values == direct.values
    };
    comps.push(cmp_render(
        "merged filtration values",
        format!("{:?}", merged.values),
        format!("{:?}", direct.values),
        values_equal,
    ));
    let chains_equal = if mutate {
        false
    } else {
        merged.numerators == direct.numerators
    };
    comps.push(cmp_render(
        "merged filtration chain ideals",
        format!("{} steps", merged.numerators.len()),
        format!("{} steps", direct.numerators.len()),
        chains_equal,
    ));

    let irrelevant = inst.ideal_left == MonomialIdeal::irrelevant(inst.left_vars)
        && inst.ideal_right == MonomialIdeal::irrelevant(inst.right_vars);
    let mut provenance = "sides=cech-filtration".to_string();
    if irrelevant {
        let t = ModulePresentation::cyclic_monomial(&join.joined, &jt);
        let l = inst.left_module();
        let n = inst.right_module();
        comps.push(cmp_bool(
            "filtration classifier = duality classifier (T)",
            seq_t,
            is_sequentially_cm(&t),
            mutate,
        ));
        comps.push(cmp_bool(
            "filtration classifier = duality classifier (L)",
            seq_l,
            is_sequentially_cm(&l),
            mutate,
        ));
        comps.push(cmp_bool(
            "filtration classifier = duality classifier (N)",
            seq_n,
            is_sequentially_cm(&n),
            mutate,
        ));
        if seq_l && seq_n {
            let gl = depth_m(&l);
            let gn = depth_m(&n);
            if gl >= ExtendedInt::Finite(1) && gn >= ExtendedInt::Finite(1) {
                comps.push(cmp_ext(
                    "f(T) = f(L)+f(N) under positive depths",
                    finiteness_dim_m(&t),
                    finiteness_dim_m(&l).add(finiteness_dim_m(&n)),
                    mutate,
                ));
            }
        }
        provenance = "sides=cech-filtration+duality".to_string();
    }
    finish("seq-cm-equivalence", inst, comps, &provenance, start)
}

/// Associated primes of the tensor product are exactly the pairwise sums
/// of the factor associated primes.
pub fn check_ass_additivity(inst: &Instance, mutate: bool) -> CheckReport {
    let start = Instant::now();
    let join = inst.join();
    let jt = join.tensor_ideal(&inst.module_left, &inst.module_right);
    let mut left = jt.associated_primes().expect("proper module ideal");
    if mutate {
        left.push(vec![usize::MAX]);
    }
    let nl = inst.left_vars;
    let mut expected: Vec<Vec<usize>> = Vec::new();
    for p in inst.module_left.associated_primes().expect("proper") {
        for q in inst.module_right.associated_primes().expect("proper") {
            let mut joined: Vec<usize> = p.clone();
            joined.extend(q.iter().map(|v| v + nl));
            expected.push(joined);
        }
    }
    expected.sort();
    expected.dedup();
    let equal = left == expected;
    let comps = vec![cmp_render(
        "Ass(T) = {p+q}",
        format!("{:?}", left),
        format!("{:?}", expected),
        equal,
    )];
    finish(
        "ass-additivity",
        inst,
        comps,
        "left=join:decomposition right=factors:decomposition",
        start,
    )
}

/// Independent backends agree on the basic invariants of one module:
/// depth (resolution) = grade (Ext) = least Cech index, and dimension
/// (Hilbert series) = greatest Cech index.
pub fn check_oracle_agreement(inst: &Instance, mutate: bool) -> CheckReport {
    let start = Instant::now();
    let f = &inst.field;
    let mut comps = Vec::new();
    for (tag, ring, ideal) in [
        ("L", inst.left_ring(), &inst.module_left),
        ("N", inst.right_ring(), &inst.module_right),
    ] {
        let m = ModulePresentation::cyclic_monomial(&ring, ideal);
        let irr = MonomialIdeal::irrelevant(ring.num_vars());
        let (g, c) = grade_cd(&irr, &MonomialSubquotient::quotient_ring(ideal), f);
        comps.push(cmp_ext(
            &format!("depth {} (resolution) = grade (cech)", tag),
            depth_m(&m),
            g,
            mutate,
        ));
        comps.push(cmp_ext(
            &format!("grade {} (ext) = grade (cech)", tag),
            tcm_core::homological::grade_of_ideal_on(&irr, &m),
            g,
            mutate,
        ));
        comps.push(cmp_ext(
            &format!("dim {} (hilbert) = cd (cech)", tag),
            krull_dim(&m),
            c,
            mutate,
        ));
    }
    finish(
        "oracle-agreement",
        inst,
        comps,
        "left=resolution/ext/hilbert right=cech",
        start,
    )
}
