//! The bundled MNAE-3-SAT instance corpus.

use p19free_core::MnaeInstance;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 19;
pub const RANDOM_INSTANCES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedInstance {
    pub name: String,
    pub instance: MnaeInstance,
}

fn named(name: &str, n: usize, clauses: Vec<[usize; 3]>) -> NamedInstance {
    NamedInstance {
        name: name.to_string(),
        instance: MnaeInstance::new(n, clauses).expect("fixed corpus instance is valid"),
    }
}

pub fn single_clause() -> NamedInstance {
    named("single_clause", 3, vec![[0, 1, 2]])
}

/// Two clauses sharing one variable.
pub fn two_clause_chain() -> NamedInstance {
    named("two_clause_chain", 5, vec![[0, 1, 2], [2, 3, 4]])
}

/// Two clauses sharing two variables.
pub fn two_clause_overlap() -> NamedInstance {
    named("two_clause_overlap", 4, vec![[0, 1, 2], [0, 1, 3]])
}

pub fn fano() -> NamedInstance {
    NamedInstance {
        name: "fano".to_string(),
        instance: MnaeInstance::fano(),
    }
}

/// Random instances with 3..=5 variables and 1..=3 clauses.
pub fn random_instances(seed: u64, count: usize) -> Vec<NamedInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(3..=5);
            let m = rng.gen_range(1..=3);
            let vars: Vec<usize> = (0..n).collect();
            let clauses = (0..m)
                .map(|_| {
                    let pick: Vec<usize> = vars.choose_multiple(&mut rng, 3).copied().collect();
                    [pick[0], pick[1], pick[2]]
                })
                .collect();
            named(&format!("random_{i:02}"), n, clauses)
        })
        .collect()
}

pub fn bundled(seed: u64) -> Vec<NamedInstance> {
    let mut all = vec![
        single_clause(),
        two_clause_chain(),
        two_clause_overlap(),
        fano(),
    ];
    all.extend(random_instances(seed, RANDOM_INSTANCES));
    all
}
