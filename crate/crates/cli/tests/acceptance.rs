//! Acceptance gate: one test per release criterion, each emitting a single
//! pass/fail line. `cargo test --test acceptance -- --nocapture` shows the
//! lines; a failed criterion fails its test.

use std::time::Instant;

use tcm::checks;
use tcm::instance::{random_instances, Instance, RandomModelParams};
use tcm::report::{CheckReport, Verdict};
use tcm::session::{execute, parse_session, Format};
use tcm::suite::{example_suite, run_suite, summarize};

use tcm_core::cech::{grade_cd, MonomialSubquotient};
use tcm_core::filtration::{associated_primes_subquotient, DimensionFiltration};
use tcm_core::{ExtendedInt, Monomial, MonomialIdeal};

fn assert_all_pass(criterion: &str, reports: &[CheckReport]) {
    let (pass, fail, skip) = summarize(reports);
    let line = format!(
        "{}: {} — {} checks, {} pass, {} fail, {} skip",
        criterion,
        if fail == 0 { "pass" } else { "FAIL" },
        reports.len(),
        pass,
        fail,
        skip
    );
    println!("{}", line);
    if fail > 0 {
        for r in reports.iter().filter(|r| r.verdict == Verdict::Fail) {
            eprintln!("{}", r.render_text());
        }
        panic!("{}", line);
    }
}

fn small_params(seed: u64) -> RandomModelParams {
    // two variables per factor keeps join-ring resolutions fast
    RandomModelParams {
        max_vars_left: 2,
        max_vars_right: 2,
        seed,
        ..Default::default()
    }
}

/// Criterion 1: the worked example reproduces all golden invariants and the
/// session front end prints the expected lines, within five seconds.
#[test]
fn criterion_1_golden_example() {
    let start = Instant::now();
    let reports = example_suite(false);
    assert_eq!(reports.len(), 8);
    assert_all_pass("criterion 1 (golden example)", &reports);

    let session = parse_session(include_str!("../fixtures/example-3-7.session")).unwrap();
    let out = execute(&session, Format::Text).unwrap();
    assert_eq!(
        out.lines,
        vec![
            "depth L = 0",
            "dim L = 1",
            "f L = 1",
            "f T = 1",
            "dim T = 2",
            "class T = seq-CM",
        ]
    );
    assert!(
        start.elapsed().as_secs() < 5,
        "golden example exceeded 5s: {:?}",
        start.elapsed()
    );
}

/// Criterion 2: the resolution/duality backends and the combinatorial
/// cohomology backend agree on depth, grade and dimension for at least 200
/// random modules, within five minutes.
#[test]
fn criterion_2_backend_agreement_200() {
    let start = Instant::now();
    let params = RandomModelParams {
        seed: 11,
        ..Default::default()
    };
    let reports = run_suite("oracle-agreement", &params, Some(200), false).unwrap();
    assert_eq!(reports.len(), 200);
    assert_all_pass("criterion 2 (backend agreement, 200 instances)", &reports);
    assert!(
        start.elapsed().as_secs() < 300,
        "agreement sweep exceeded 5min: {:?}",
        start.elapsed()
    );
}

/// Criterion 3: grade/cd additivity holds on at least 200 random instances
/// plus at least 10 degenerate unit-ideal instances where one side is
/// `+inf`/`-inf`.
#[test]
fn criterion_3_additivity_with_degenerates() {
    let params = RandomModelParams {
        seed: 17,
        ..Default::default()
    };
    let reports = run_suite("thm-2.6-random-200", &params, Some(200), false).unwrap();
    assert_eq!(reports.len(), 210, "200 random + 10 degenerate");
    let infinite = reports
        .iter()
        .filter(|r| {
            r.comparisons
                .iter()
                .any(|c| c.left.contains("inf") || c.right.contains("inf"))
        })
        .count();
    assert!(infinite >= 10, "only {} degenerate-value reports", infinite);
    assert_all_pass("criterion 3 (grade/cd additivity, 200+10)", &reports);
}

/// Criterion 4: the finiteness-dimension minimum formula holds at the
/// irrelevant maximal ideals on at least 100 random instances.
#[test]
fn criterion_4_finiteness_formula_100() {
    let reports: Vec<CheckReport> = random_instances(&small_params(23), 100)
        .iter()
        .map(|i| checks::check_finiteness_formula(&i.at_irrelevant_ideals(), false))
        .collect();
    assert_eq!(reports.len(), 100);
    assert_all_pass("criterion 4 (finiteness min-formula, 100)", &reports);
}

/// Criterion 5: the Cohen-Macaulay equivalences (tensor CM iff both factors
/// CM; generalized CM collapses to CM) hold on instances whose factors both
/// have positive dimension, and the finiteness-dimension sum holds on the
/// CM instances among them.
#[test]
fn criterion_5_cm_equivalences_positive_dims() {
    let drawn = random_instances(&small_params(29), 1500);
    let mut reports = Vec::new();
    let mut with_duality = 0usize;
    let mut with_f_sum = 0usize;
    for inst in drawn {
        if reports.len() >= 100 {
            break;
        }
        let inst = inst.at_irrelevant_ideals();
        let dim = |ideal: &MonomialIdeal, module: &MonomialIdeal| {
            grade_cd(ideal, &MonomialSubquotient::quotient_ring(module), &inst.field).1
        };
        if dim(&inst.ideal_left, &inst.module_left) < ExtendedInt::Finite(1)
            || dim(&inst.ideal_right, &inst.module_right) < ExtendedInt::Finite(1)
        {
            continue;
        }
        let r = checks::check_cm_equivalences(&inst, false);
        if r.comparisons.len() >= 3 {
            with_duality += 1;
        }
        if r.comparisons.iter().any(|c| c.what.starts_with("f(T)")) {
            with_f_sum += 1;
        }
        reports.push(r);
    }
    assert!(reports.len() >= 100, "only {} qualifying instances", reports.len());
    assert!(with_duality >= 100, "duality backend ran on {} only", with_duality);
    assert!(with_f_sum >= 10, "f-sum exercised on {} only", with_f_sum);
    assert_all_pass("criterion 5 (CM equivalences, dims >= 1)", &reports);
}

/// Criterion 6: sequential Cohen-Macaulayness transfers across the tensor
/// product on at least 100 instances, the merged dimension filtration equals
/// the directly computed one, and the filtration classifier agrees with the
/// duality classifier.
#[test]
fn criterion_6_seq_cm_equivalence_100() {
    let reports: Vec<CheckReport> = random_instances(&small_params(31), 100)
        .iter()
        .map(|i| checks::check_seq_cm_equivalence(i, false))
        .collect();
    assert_eq!(reports.len(), 100);
    let with_classifier = reports
        .iter()
        .filter(|r| r.provenance.contains("duality"))
        .count();
    assert!(
        with_classifier >= 10,
        "duality classifier compared on {} only",
        with_classifier
    );
    assert_all_pass("criterion 6 (sequential CM, 100)", &reports);
}

/// Criterion 7: associated primes of the tensor product are the pairwise
/// sums on at least 100 instances, and each quotient of the dimension
/// filtration has exactly the associated primes of the predicted dimension.
#[test]
fn criterion_7_associated_primes_100() {
    let instances = random_instances(&small_params(37), 100);
    let reports: Vec<CheckReport> = instances
        .iter()
        .map(|i| checks::check_ass_additivity(i, false))
        .collect();
    assert_all_pass("criterion 7a (associated-prime additivity, 100)", &reports);

    // filtration quotients: Ass(D_i/D_{i-1}) = primes of cohomological
    // dimension exactly values[i]
    let mut checked = 0usize;
    for inst in &instances {
        let join = inst.join();
        let big = join.tensor_ideal(&inst.ideal_left, &inst.ideal_right);
        let jt = join.tensor_ideal(&inst.module_left, &inst.module_right);
        let filt = DimensionFiltration::new(&big, &jt, &inst.field).unwrap();
        let ass = jt.associated_primes().unwrap();
        for i in 0..filt.steps() {
            let got = associated_primes_subquotient(&filt.quotient(i));
            let mut want: Vec<Vec<usize>> = ass
                .iter()
                .filter(|p| {
                    let prime = MonomialIdeal::new(
                        jt.n_vars,
                        p.iter()
                            .map(|&v| {
                                let mut e = vec![0u32; jt.n_vars];
                                e[v] = 1;
                                Monomial(e)
                            })
                            .collect(),
                    );
                    grade_cd(&big, &MonomialSubquotient::quotient_ring(&prime), &inst.field).1
                        == ExtendedInt::Finite(filt.values[i])
                })
                .cloned()
                .collect();
            want.sort();
            assert_eq!(got, want, "filtration quotient {} of {}", i, inst.digest());
            checked += 1;
        }
    }
    println!(
        "criterion 7b: pass — {} filtration quotients matched their predicted associated primes",
        checked
    );
    assert!(checked >= 100);
}

/// Criterion 8: the Künneth factorization of Ext/Tor Hilbert series and the
/// corner-piece product isomorphisms hold on at least 25 instances each.
#[test]
fn criterion_8_kunneth_and_corners_25() {
    let instances = random_instances(&small_params(41), 25);
    let kunneth: Vec<CheckReport> = instances
        .iter()
        .map(|i| {
            let pl = MonomialIdeal::irrelevant(i.left_vars);
            let pr = MonomialIdeal::irrelevant(i.right_vars);
            checks::check_kunneth(i, &pl, &pr, false)
        })
        .collect();
    assert_all_pass("criterion 8a (Kunneth factorization, 25)", &kunneth);

    let corners: Vec<CheckReport> = instances
        .iter()
        .map(|i| checks::check_corner_isomorphisms(i, false))
        .collect();
    let run = corners.iter().filter(|r| r.verdict != Verdict::Skip).count();
    assert!(run >= 25, "corner check ran on {} instances only", run);
    assert_all_pass("criterion 8b (corner-piece products, 25)", &corners);
}

/// Criterion 9: mutation mode must flip every golden verdict — the harness
/// can detect a broken backend.
#[test]
fn criterion_9_mutation_flips_golden_verdicts() {
    let mutated = example_suite(true);
    assert_eq!(mutated.len(), 8);
    for r in &mutated {
        assert_eq!(
            r.verdict,
            Verdict::Fail,
            "mutated golden check still passes: {}",
            r.render_text()
        );
    }

    // mutation must also flip every randomized check on a healthy instance
    let inst = random_instances(&small_params(43), 10)
        .into_iter()
        .map(|i| i.at_irrelevant_ideals())
        .find(|i: &Instance| {
            checks::check_corner_isomorphisms(i, false).verdict == Verdict::Pass
        })
        .expect("a corner-checkable instance exists");
    let all: Vec<(&str, CheckReport)> = vec![
        ("additivity", checks::check_grade_cd_additivity(&inst, true)),
        ("corners", checks::check_corner_isomorphisms(&inst, true)),
        ("finiteness", checks::check_finiteness_formula(&inst, true)),
        ("cm", checks::check_cm_equivalences(&inst, true)),
        ("seq-cm", checks::check_seq_cm_equivalence(&inst, true)),
        ("ass", checks::check_ass_additivity(&inst, true)),
        ("oracles", checks::check_oracle_agreement(&inst, true)),
    ];
    for (name, r) in &all {
        assert_eq!(
            r.verdict,
            Verdict::Fail,
            "mutated {} check still passes: {}",
            name,
            r.render_text()
        );
    }
    println!(
        "criterion 9: pass — mutation flipped all 8 golden and {} randomized verdicts",
        all.len()
    );
}
