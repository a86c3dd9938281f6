//! Check instances: two factor rings with a monomial ideal and a cyclic
//! monomial module each, plus seeded random generation of such instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tcm_core::tensor::RingJoin;
use tcm_core::{Field, ModulePresentation, Monomial, MonomialIdeal, PolyRing};

/// One input to the theorem checks: ideals `I`, `J` and cyclic modules
/// `L = A/module_left`, `N = B/module_right` over two disjoint polynomial
/// rings `A = k[x1..]`, `B = k[y1..]`.
#[derive(Clone, Debug)]
pub struct Instance {
    pub field: Field,
    pub left_vars: usize,
    pub right_vars: usize,
    pub ideal_left: MonomialIdeal,
    pub ideal_right: MonomialIdeal,
    pub module_left: MonomialIdeal,
    pub module_right: MonomialIdeal,
}

impl Instance {
    pub fn left_ring(&self) -> PolyRing {
        PolyRing::new(
            self.field,
            (1..=self.left_vars).map(|i| format!("x{}", i)).collect(),
        )
    }

    pub fn right_ring(&self) -> PolyRing {
        PolyRing::new(
            self.field,
            (1..=self.right_vars).map(|i| format!("y{}", i)).collect(),
        )
    }

    pub fn join(&self) -> RingJoin {
        RingJoin::new(&self.left_ring(), &self.right_ring())
    }

    pub fn left_module(&self) -> ModulePresentation {
        ModulePresentation::cyclic_monomial(&self.left_ring(), &self.module_left)
    }

    pub fn right_module(&self) -> ModulePresentation {
        ModulePresentation::cyclic_monomial(&self.right_ring(), &self.module_right)
    }

    /// Same modules, both ideals replaced by the irrelevant maximal ideals.
    pub fn at_irrelevant_ideals(&self) -> Instance {
        Instance {
            ideal_left: MonomialIdeal::irrelevant(self.left_vars),
            ideal_right: MonomialIdeal::irrelevant(self.right_vars),
            ..self.clone()
        }
    }

    /// Replayable one-line rendering, also used as the report digest.
    pub fn digest(&self) -> String {
        let a = self.left_ring();
        let b = self.right_ring();
        format!(
            "I={} L={} | J={} N={}",
            render_ideal(&self.ideal_left, &a),
            render_ideal(&self.module_left, &a),
            render_ideal(&self.ideal_right, &b),
            render_ideal(&self.module_right, &b),
        )
    }
}

pub fn render_ideal(i: &MonomialIdeal, ring: &PolyRing) -> String {
    if i.is_zero() {
        return "(0)".to_string();
    }
    let gens: Vec<String> = i.gens.iter().map(|g| g.render(ring)).collect();
    format!("({})", gens.join(","))
}

/// Bounds for the random instance model. All draws are reproducible from
/// the seed; ideals are drawn proper and modules nonzero.
#[derive(Clone, Copy, Debug)]
pub struct RandomModelParams {
    pub max_vars_left: usize,
    pub max_vars_right: usize,
    pub max_exponent: u32,
    pub min_gens: usize,
    pub max_gens: usize,
    pub seed: u64,
    /// Chance (percent) that a drawn ideal is the irrelevant maximal ideal.
    pub irrelevant_percent: u32,
    /// Scalar domain of every drawn instance.
    pub field: Field,
}

impl Default for RandomModelParams {
    fn default() -> Self {
        RandomModelParams {
            max_vars_left: 3,
            max_vars_right: 3,
            max_exponent: 3,
            min_gens: 1,
            max_gens: 4,
            seed: 0,
            irrelevant_percent: 40,
            field: Field::Rationals,
        }
    }
}

fn random_monomial(rng: &mut ChaCha8Rng, n: usize, max_exp: u32) -> Monomial {
    // reroll constant draws: generators must be nontrivial
    loop {
        let exps: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_exp)).collect();
        if exps.iter().any(|&e| e > 0) {
            return Monomial(exps);
        }
    }
}

fn random_proper_ideal(rng: &mut ChaCha8Rng, n: usize, p: &RandomModelParams) -> MonomialIdeal {
    let count = rng.gen_range(p.min_gens..=p.max_gens);
    let gens = (0..count)
        .map(|_| random_monomial(rng, n, p.max_exponent))
        .collect();
    MonomialIdeal::new(n, gens)
}

fn random_check_ideal(rng: &mut ChaCha8Rng, n: usize, p: &RandomModelParams) -> MonomialIdeal {
    if rng.gen_range(0..100) < p.irrelevant_percent {
        MonomialIdeal::irrelevant(n)
    } else {
        random_proper_ideal(rng, n, p)
    }
}

/// A reproducible stream of instances: same `(params, count)` gives the
/// same list.
pub fn random_instances(params: &RandomModelParams, count: usize) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    (0..count)
        .map(|_| {
            let nl = rng.gen_range(1..=params.max_vars_left);
            let nr = rng.gen_range(1..=params.max_vars_right);
            Instance {
                field: params.field,
                left_vars: nl,
                right_vars: nr,
                ideal_left: random_check_ideal(&mut rng, nl, params),
                ideal_right: random_check_ideal(&mut rng, nr, params),
                module_left: random_proper_ideal(&mut rng, nl, params),
                module_right: random_proper_ideal(&mut rng, nr, params),
            }
        })
        .collect()
}

/// The worked golden instance: `L = k[x1,x2]/(x1^2, x1*x2)` and
/// `N = k[y1,y2]/(y1)` with the irrelevant ideals on both sides.
pub fn golden_instance() -> Instance {
    Instance {
        field: Field::Rationals,
        left_vars: 2,
        right_vars: 2,
        ideal_left: MonomialIdeal::irrelevant(2),
        ideal_right: MonomialIdeal::irrelevant(2),
        module_left: MonomialIdeal::new(2, vec![Monomial(vec![2, 0]), Monomial(vec![1, 1])]),
        module_right: MonomialIdeal::new(2, vec![Monomial(vec![1, 0])]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_instances() {
        let p = RandomModelParams::default();
        let a = random_instances(&p, 20);
        let b = random_instances(&p, 20);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.digest(), y.digest());
        }
    }

    #[test]
    fn different_seeds_differ() {
        let a = random_instances(&RandomModelParams::default(), 10);
        let p2 = RandomModelParams {
            seed: 99,
            ..Default::default()
        };
        let b = random_instances(&p2, 10);
        assert_ne!(
            a.iter().map(|i| i.digest()).collect::<Vec<_>>(),
            b.iter().map(|i| i.digest()).collect::<Vec<_>>()
        );
    }

    #[test]
    fn drawn_modules_are_nonzero_and_ideals_proper() {
        for inst in random_instances(&RandomModelParams::default(), 50) {
            assert!(inst.module_left.is_proper() && !inst.module_left.is_zero());
            assert!(inst.module_right.is_proper() && !inst.module_right.is_zero());
            assert!(inst.ideal_left.is_proper());
            assert!(inst.ideal_right.is_proper());
        }
    }

    #[test]
    fn count_zero_is_empty() {
        assert!(random_instances(&RandomModelParams::default(), 0).is_empty());
    }
}
