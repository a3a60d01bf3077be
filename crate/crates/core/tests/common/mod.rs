#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;
use ufgdepth::{Criterion, CriteriaTable, Direction, Poset, PosetSample, Universe};

pub const SGD: usize = 0;
pub const MOM: usize = 1;
pub const ADAM: usize = 2;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn universe(n: usize) -> Universe {
    Universe::new((0..n).map(|i| format!("o{i}"))).unwrap()
}

pub fn example_universe() -> Universe {
    Universe::new(["SGD", "MOM", "ADAM"]).unwrap()
}

fn p(pairs: &[(usize, usize)]) -> Poset {
    Poset::from_pairs(3, pairs.iter().copied()).unwrap()
}

pub fn p1() -> Poset {
    p(&[(SGD, MOM)])
}

pub fn p2() -> Poset {
    p(&[(SGD, ADAM)])
}

pub fn p3() -> Poset {
    p(&[(MOM, SGD), (MOM, ADAM), (SGD, ADAM)])
}

pub fn p_star() -> Poset {
    p(&[(SGD, MOM), (SGD, ADAM)])
}

/// Random partial order: random pairs compatible with a random linear
/// order, closed transitively.
pub fn random_poset(rng: &mut impl Rng, n: usize, density: f64) -> Poset {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(density) {
                pairs.push((order[a], order[b]));
            }
        }
    }
    Poset::from_pairs_closed(n, pairs).unwrap()
}

pub fn random_poset_between(rng: &mut impl Rng, n: usize, lo: f64, hi: f64) -> Poset {
    let density = rng.gen_range(lo..hi);
    random_poset(rng, n, density)
}

/// Random sample over `n` items with `unique` distinct posets and
/// multiplicities in `1..=3`.
pub fn random_sample(rng: &mut impl Rng, n: usize, unique: usize) -> PosetSample {
    let mut posets: Vec<Poset> = Vec::new();
    while posets.len() < unique {
        let density = rng.gen_range(0.1..0.9);
        let q = random_poset(rng, n, density);
        if !posets.contains(&q) {
            posets.push(q);
        }
    }
    let counts: Vec<(Poset, u64)> = posets
        .into_iter()
        .map(|q| {
            let m = rng.gen_range(1..=3);
            (q, m)
        })
        .collect();
    PosetSample::from_counts(universe(n), &counts).unwrap()
}

/// Random criteria table; small integer grids make ties and partial
/// dominance common.
pub fn random_table(rng: &mut impl Rng, functions: usize, optimizers: usize, criteria: usize, grid: u32) -> CriteriaTable {
    let crit = (0..criteria)
        .map(|k| Criterion {
            name: format!("c{k}"),
            direction: if rng.gen_bool(0.5) { Direction::Minimize } else { Direction::Maximize },
        })
        .collect();
    let values = (0..functions * optimizers * criteria)
        .map(|_| rng.gen_range(0..grid) as f64 + 0.5)
        .collect();
    CriteriaTable::new(
        universe(optimizers),
        (0..functions).map(|f| format!("f{f}")).collect(),
        crit,
        values,
    )
    .unwrap()
}

/// Random permutation of `0..n`.
pub fn random_perm(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}
