//! Named check suites: the worked golden example, the randomized
//! additivity sweep, and the backend-agreement sweep. All suites support
//! mutation mode, which perturbs one side of every comparison and must
//! therefore flip every verdict (harness self-test).

use tcm_core::homological::{
    depth_m, finiteness_dim_m, is_cm, is_generalized_cm, is_sequentially_cm, krull_dim,
};
use tcm_core::{ExtendedInt, ModulePresentation, MonomialIdeal};

use crate::checks;
use crate::instance::{golden_instance, random_instances, Instance, RandomModelParams};
use crate::report::{verdict_of, CheckReport, Comparison, Verdict};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownSuite(pub String);

impl std::fmt::Display for UnknownSuite {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "unknown suite id: {}", self.0)
    }
}

impl std::error::Error for UnknownSuite {}

/// Run a named suite. `count` overrides the suite's default instance count
/// where it is randomized; the golden suite ignores it.
pub fn run_suite(
    id: &str,
    params: &RandomModelParams,
    count: Option<usize>,
    mutate: bool,
) -> Result<Vec<CheckReport>, UnknownSuite> {
    match id {
        "example-3.7" => Ok(example_suite(mutate)),
        "thm-2.6-random-200" => {
            let n = count.unwrap_or(200);
            let mut reports: Vec<CheckReport> = random_instances(params, n)
                .iter()
                .map(|inst| checks::check_grade_cd_additivity(inst, mutate))
                .collect();
            for inst in degenerate_instances(params, 10) {
                reports.push(checks::check_grade_cd_additivity(&inst, mutate));
            }
            Ok(reports)
        }
        "oracle-agreement" => {
            let n = count.unwrap_or(100);
            Ok(random_instances(params, n)
                .iter()
                .map(|inst| checks::check_oracle_agreement(inst, mutate))
                .collect())
        }
        other => Err(UnknownSuite(other.to_string())),
    }
}

/// Golden instances exercising the degenerate unit-ideal branches of the
/// additivity theorem (grade `+inf`, cd `-inf`).
pub fn degenerate_instances(params: &RandomModelParams, count: usize) -> Vec<Instance> {
    let base = random_instances(params, count);
    base.into_iter()
        .enumerate()
        .map(|(k, mut inst)| {
            if k % 2 == 0 {
                inst.ideal_left = MonomialIdeal::unit(inst.left_vars);
            } else {
                inst.ideal_right = MonomialIdeal::unit(inst.right_vars);
            }
            if k % 3 == 0 {
                // both sides degenerate
                inst.ideal_right = MonomialIdeal::unit(inst.right_vars);
            }
            inst
        })
        .collect()
}

fn golden_report(theorem: &str, inst: &Instance, comparisons: Vec<Comparison>) -> CheckReport {
    CheckReport {
        theorem: theorem.to_string(),
        instance: inst.digest(),
        verdict: verdict_of(&comparisons),
        comparisons,
        reason: None,
        millis: 0,
        provenance: "golden".to_string(),
    }
}

fn golden_ext(what: &str, left: ExtendedInt, want: i64, mutate: bool) -> Comparison {
    let l = if mutate {
        match left {
            ExtendedInt::Finite(n) => ExtendedInt::Finite(n + 1),
            _ => ExtendedInt::Finite(0),
        }
    } else {
        left
    };
    Comparison {
        what: what.to_string(),
        left: l.to_string(),
        right: want.to_string(),
        equal: l == ExtendedInt::Finite(want),
    }
}

fn golden_bool(what: &str, left: bool, want: bool, mutate: bool) -> Comparison {
    let l = if mutate { !left } else { left };
    Comparison {
        what: what.to_string(),
        left: l.to_string(),
        right: want.to_string(),
        equal: l == want,
    }
}

/// The eight named sub-checks of the worked example: exact invariants of
/// `L = k[x1,x2]/(x1^2, x1*x2)`, `N = k[y1,y2]/(y1)` and their tensor
/// product at the irrelevant ideals.
pub fn example_suite(mutate: bool) -> Vec<CheckReport> {
    let inst = golden_instance();
    let l = inst.left_module();
    let n = inst.right_module();
    let join = inst.join();
    let t = ModulePresentation::cyclic_monomial(
        &join.joined,
        &join.tensor_ideal(&inst.module_left, &inst.module_right),
    );

    let f_l = finiteness_dim_m(&l);
    let f_n = finiteness_dim_m(&n);
    let f_t = finiteness_dim_m(&t);

    vec![
        golden_report(
            "example/depth-L",
            &inst,
            vec![golden_ext("depth L", depth_m(&l), 0, mutate)],
        ),
        golden_report(
            "example/dim-L-not-CM",
            &inst,
            vec![
                golden_ext("dim L", krull_dim(&l), 1, mutate),
                golden_bool("L is CM", is_cm(&l), false, mutate),
            ],
        ),
        golden_report(
            "example/f-L",
            &inst,
            vec![golden_ext("f L", f_l, 1, mutate)],
        ),
        golden_report(
            "example/N-CM-dim-1",
            &inst,
            vec![
                golden_bool("N is CM", is_cm(&n), true, mutate),
                golden_ext("dim N", krull_dim(&n), 1, mutate),
                golden_ext("f N", f_n, 1, mutate),
            ],
        ),
        golden_report(
            "example/dim-T",
            &inst,
            vec![golden_ext("dim T", krull_dim(&t), 2, mutate)],
        ),
        golden_report(
            "example/f-T-breaks-the-sum",
            &inst,
            vec![
                golden_ext("f T", f_t, 1, mutate),
                golden_bool(
                    "f T differs from f L + f N",
                    f_t != f_l.add(f_n),
                    true,
                    mutate,
                ),
            ],
        ),
        golden_report(
            "example/T-not-generalized-CM",
            &inst,
            vec![golden_bool(
                "T is generalized CM",
                is_generalized_cm(&t),
                false,
                mutate,
            )],
        ),
        golden_report(
            "example/all-sequentially-CM",
            &inst,
            vec![
                golden_bool("L is seq CM", is_sequentially_cm(&l), true, mutate),
                golden_bool("N is seq CM", is_sequentially_cm(&n), true, mutate),
                golden_bool("T is seq CM", is_sequentially_cm(&t), true, mutate),
            ],
        ),
    ]
}

/// `(pass, fail, skip)` counts.
pub fn summarize(reports: &[CheckReport]) -> (usize, usize, usize) {
    let mut pass = 0;
    let mut fail = 0;
    let mut skip = 0;
    for r in reports {
        match r.verdict {
            Verdict::Pass => pass += 1,
            Verdict::Fail => fail += 1,
            Verdict::Skip => skip += 1,
        }
    }
    (pass, fail, skip)
}
