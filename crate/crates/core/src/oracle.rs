//! Exhaustive reference implementations for small instances.
//!
//! Everything here works from the raw definitions on explicit pair sets and
//! fully listed poset spaces, sharing no search code with the optimized
//! path. Hard caps keep the enumerations finite.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::poset::{Poset, Universe};
use crate::ufg::{PosetSample, UfgFamily};

/// Largest universe [`enumerate_all_posets`] accepts.
pub const MAX_ENUMERATION_ITEMS: usize = 5;
/// Largest universe the brute-force family and depth accept.
pub const MAX_ORACLE_ITEMS: usize = 4;
/// Largest number of unique posets the brute-force family accepts.
pub const MAX_ORACLE_POSETS: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("universe of {got} items exceeds the oracle cap of {cap}")]
    UniverseTooLarge { got: usize, cap: usize },
    #[error("instance too large for the oracle: {items} items (cap {MAX_ORACLE_ITEMS}), {posets} unique posets (cap {MAX_ORACLE_POSETS})")]
    InstanceTooLarge { items: usize, posets: usize },
}

type PairSet = BTreeSet<(usize, usize)>;

fn pair_set(p: &Poset) -> PairSet {
    p.pairs().collect()
}

fn is_partial_order(n: usize, pairs: &PairSet) -> bool {
    let mut m = vec![vec![false; n]; n];
    for &(i, j) in pairs {
        m[i][j] = true;
    }
    for a in 0..n {
        for b in 0..n {
            if !m[a][b] {
                continue;
            }
            if m[b][a] {
                return false;
            }
            for c in 0..n {
                if m[b][c] && c != a && !m[a][c] {
                    return false;
                }
            }
        }
    }
    true
}

/// Every partial order on `universe`, each exactly once, ordered by the
/// bitmask of off-diagonal pairs in row-major order.
pub fn enumerate_all_posets(universe: &Universe) -> Result<AllPosets, OracleError> {
    let n = universe.len();
    if n > MAX_ENUMERATION_ITEMS {
        return Err(OracleError::UniverseTooLarge {
            got: n,
            cap: MAX_ENUMERATION_ITEMS,
        });
    }
    let slots = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect::<Vec<_>>();
    Ok(AllPosets {
        n,
        end: 1u64 << slots.len(),
        slots,
        mask: 0,
    })
}

/// Streaming enumeration returned by [`enumerate_all_posets`].
pub struct AllPosets {
    n: usize,
    slots: Vec<(usize, usize)>,
    mask: u64,
    end: u64,
}

impl Iterator for AllPosets {
    type Item = Poset;

    fn next(&mut self) -> Option<Poset> {
        while self.mask < self.end {
            let mask = self.mask;
            self.mask += 1;
            let pairs: PairSet = self
                .slots
                .iter()
                .enumerate()
                .filter(|(bit, _)| mask >> bit & 1 == 1)
                .map(|(_, &pair)| pair)
                .collect();
            if is_partial_order(self.n, &pairs) {
                return Some(
                    Poset::from_pairs(self.n, pairs).expect("axioms were checked"),
                );
            }
        }
        None
    }
}

/// The closure of a set of posets as an explicit set of indices into `space`.
fn gamma(posets: &[&PairSet], space: &[PairSet]) -> BTreeSet<usize> {
    let mut meet = posets[0].clone();
    let mut join = PairSet::new();
    for p in posets {
        meet = meet.intersection(p).copied().collect();
        join.extend(p.iter().copied());
    }
    space
        .iter()
        .enumerate()
        .filter(|(_, q)| meet.is_subset(q) && q.is_subset(&join))
        .map(|(k, _)| k)
        .collect()
}

/// Nonempty subsets of `0..k` as sorted index lists, by bitmask.
fn nonempty_subsets(k: usize) -> impl Iterator<Item = Vec<usize>> {
    (1u32..1 << k).map(move |mask| (0..k).filter(|&i| mask >> i & 1 == 1).collect())
}

struct Exhaustive {
    space: Vec<Poset>,
    space_sets: Vec<PairSet>,
    /// Family sets with their explicit closures.
    members: Vec<(Vec<usize>, BTreeSet<usize>)>,
    weights: Vec<BigRational>,
}

fn check_caps(sample: &PosetSample) -> Result<(), OracleError> {
    let items = sample.universe().len();
    let posets = sample.unique_posets().len();
    if items > MAX_ORACLE_ITEMS || posets > MAX_ORACLE_POSETS {
        return Err(OracleError::InstanceTooLarge { items, posets });
    }
    Ok(())
}

fn exhaustive(sample: &PosetSample) -> Result<Exhaustive, OracleError> {
    check_caps(sample)?;
    let space: Vec<Poset> = enumerate_all_posets(sample.universe())?.collect();
    let space_sets: Vec<PairSet> = space.iter().map(pair_set).collect();
    let observed: Vec<PairSet> = sample.unique_posets().iter().map(pair_set).collect();
    let k = observed.len();
    let closure_of = |subset: &[usize]| {
        let refs: Vec<&PairSet> = subset.iter().map(|&i| &observed[i]).collect();
        gamma(&refs, &space_sets)
    };
    let index_in_space = |i: usize| {
        space_sets
            .iter()
            .position(|q| *q == observed[i])
            .expect("observed posets are in the space")
    };

    let mut members = Vec::new();
    for subset in nonempty_subsets(k) {
        let closure = closure_of(&subset);
        let as_points: BTreeSet<usize> = subset.iter().map(|&i| index_in_space(i)).collect();
        // (C1): the subset is a proper subset of its closure
        if !(as_points.is_subset(&closure) && as_points.len() < closure.len()) {
            continue;
        }
        // (C2): no family of proper subsets whose closures unite to the closure.
        // A family's union must stay inside the closure, and taking every such
        // proper subset maximizes the union, so a family exists iff that
        // maximal admissible union equals the closure.
        let mut union = BTreeSet::new();
        for proper in nonempty_subsets(subset.len()) {
            if proper.len() == subset.len() {
                continue;
            }
            let a: Vec<usize> = proper.iter().map(|&i| subset[i]).collect();
            let ca = closure_of(&a);
            if ca.is_subset(&closure) {
                union.extend(ca);
            }
        }
        if union == closure {
            continue;
        }
        members.push((subset, closure));
    }
    members.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));

    let nu: Vec<BigRational> = (0..k).map(|i| sample.weight(i)).collect();
    let weights = members
        .iter()
        .map(|(s, _)| s.iter().fold(BigRational::one(), |acc, &i| acc * &nu[i]))
        .collect();
    Ok(Exhaustive {
        space,
        space_sets,
        members,
        weights,
    })
}

impl Exhaustive {
    fn depth_of(&self, query: &PairSet) -> BigRational {
        let total: BigRational = self.weights.iter().sum();
        if total.is_zero() {
            return BigRational::zero();
        }
        let Some(idx) = self.space_sets.iter().position(|q| q == query) else {
            return BigRational::zero();
        };
        let hit: BigRational = self
            .members
            .iter()
            .zip(&self.weights)
            .filter(|((_, closure), _)| closure.contains(&idx))
            .map(|(_, w)| w.clone())
            .sum();
        hit / total
    }
}

/// The family of union-free generic sets, decided by exhaustive search over
/// all families of proper subsets with explicitly listed closures.
pub fn brute_force_ufg(sample: &PosetSample) -> Result<UfgFamily, OracleError> {
    let ex = exhaustive(sample)?;
    let sets: Vec<Vec<usize>> = ex.members.iter().map(|(s, _)| s.clone()).collect();
    let family = UfgFamily::from_sets(sample, sets, false);
    debug_assert_eq!(family.weights(), ex.weights.as_slice());
    Ok(family)
}

/// Weights of the brute-force family as plain products of empirical weights.
pub fn brute_force_weights(sample: &PosetSample) -> Result<Vec<BigRational>, OracleError> {
    Ok(exhaustive(sample)?.weights)
}

/// Depth of `q` straight from the definition.
pub fn brute_force_depth(sample: &PosetSample, q: &Poset) -> Result<BigRational, OracleError> {
    let ex = exhaustive(sample)?;
    Ok(ex.depth_of(&pair_set(q)))
}

/// Brute-force depth of every poset on the sample's universe.
pub fn depth_profile_over_space(
    sample: &PosetSample,
) -> Result<Vec<(Poset, BigRational)>, OracleError> {
    let ex = exhaustive(sample)?;
    Ok(ex
        .space
        .iter()
        .zip(&ex.space_sets)
        .map(|(p, set)| (p.clone(), ex.depth_of(set)))
        .collect())
}
