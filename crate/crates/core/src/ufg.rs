//! Union-free generic sets over the observed posets.

use itertools::Itertools;
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::closure::{bounds_of, exists_witness, SandwichBounds};
use crate::poset::{Poset, PosetError, Universe};

/// The observed posets of a suite, deduplicated, with multiplicities.
///
/// The empirical weight of unique poset `k` is `multiplicities[k] / n_total`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetSample {
    universe: Universe,
    unique_posets: Vec<Poset>,
    multiplicities: Vec<u64>,
    provenance: Vec<Vec<String>>,
    n_total: u64,
}

impl PosetSample {
    /// Groups `(function name, poset)` observations by poset, keeping the
    /// order of first appearance.
    pub fn from_observations(
        universe: Universe,
        observations: Vec<(String, Poset)>,
    ) -> Result<Self, PosetError> {
        if observations.is_empty() {
            return Err(PosetError::EmptyInput);
        }
        let mut unique_posets: Vec<Poset> = Vec::new();
        let mut provenance: Vec<Vec<String>> = Vec::new();
        for (name, poset) in observations {
            if poset.len() != universe.len() {
                return Err(PosetError::UniverseMismatch(universe.len(), poset.len()));
            }
            match unique_posets.iter().position(|p| *p == poset) {
                Some(k) => provenance[k].push(name),
                None => {
                    unique_posets.push(poset);
                    provenance.push(vec![name]);
                }
            }
        }
        let multiplicities: Vec<u64> = provenance.iter().map(|p| p.len() as u64).collect();
        let n_total = multiplicities.iter().sum();
        Ok(PosetSample {
            universe,
            unique_posets,
            multiplicities,
            provenance,
            n_total,
        })
    }

    /// Builds a sample from posets with counts; observation names are
    /// `p1`, `p2`, … with `#r` suffixes for repeats.
    pub fn from_counts(universe: Universe, counts: &[(Poset, u64)]) -> Result<Self, PosetError> {
        let mut observations = Vec::new();
        for (k, (poset, count)) in counts.iter().enumerate() {
            for r in 0..*count {
                let name = if r == 0 {
                    format!("p{}", k + 1)
                } else {
                    format!("p{}#{}", k + 1, r + 1)
                };
                observations.push((name, poset.clone()));
            }
        }
        PosetSample::from_observations(universe, observations)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn unique_posets(&self) -> &[Poset] {
        &self.unique_posets
    }

    pub fn multiplicities(&self) -> &[u64] {
        &self.multiplicities
    }

    pub fn provenance(&self) -> &[Vec<String>] {
        &self.provenance
    }

    pub fn n_total(&self) -> u64 {
        self.n_total
    }

    /// Empirical weight of unique poset `k`.
    pub fn weight(&self, k: usize) -> BigRational {
        BigRational::new(self.multiplicities[k].into(), self.n_total.into())
    }

    /// Relabels the universe: item `i` moves to position `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> PosetSample {
        let mut labels = vec![String::new(); perm.len()];
        for (i, &target) in perm.iter().enumerate() {
            labels[target] = self.universe.label(i).to_string();
        }
        PosetSample {
            universe: Universe::new(labels).expect("permutation keeps labels distinct"),
            unique_posets: self.unique_posets.iter().map(|p| p.permute(perm)).collect(),
            multiplicities: self.multiplicities.clone(),
            provenance: self.provenance.clone(),
            n_total: self.n_total,
        }
    }
}

/// The union-free generic sets among the observed posets, with weights.
#[derive(Debug, Clone)]
pub struct UfgFamily {
    sets: Vec<Vec<usize>>,
    weights: Vec<BigRational>,
    normalizer: Option<BigRational>,
    truncated: bool,
    /// Closure bounds of each set, aligned with `sets`.
    bounds: Vec<SandwichBounds>,
    /// `weight * n_total^max_len` as an integer, aligned with `sets`.
    scaled: Vec<BigUint>,
    support: Vec<Poset>,
    multiplicities: Vec<u64>,
}

impl PartialEq for UfgFamily {
    fn eq(&self, other: &Self) -> bool {
        self.sets == other.sets
            && self.weights == other.weights
            && self.normalizer == other.normalizer
            && self.truncated == other.truncated
    }
}

impl UfgFamily {
    /// Weights each set by the product of the empirical weights of its
    /// members, using exact integer arithmetic over a common denominator.
    pub(crate) fn from_sets(sample: &PosetSample, sets: Vec<Vec<usize>>, truncated: bool) -> Self {
        let max_len = sets.iter().map(Vec::len).max().unwrap_or(0);
        let n = BigUint::from(sample.n_total);
        let scaled: Vec<BigUint> = sets
            .iter()
            .map(|s| {
                let numer = s
                    .iter()
                    .fold(BigUint::one(), |acc, &k| acc * sample.multiplicities[k]);
                numer * n.pow((max_len - s.len()) as u32)
            })
            .collect();
        let denom = n.pow(max_len as u32);
        let to_rational = |x: &BigUint| BigRational::new(x.clone().into(), denom.clone().into());
        let weights = scaled.iter().map(to_rational).collect();
        let total: BigUint = scaled.iter().sum();
        let normalizer = (!total.is_zero())
            .then(|| BigRational::new(denom.clone().into(), total.into()));
        let bounds = sets
            .iter()
            .map(|s| bounds_of(&s.iter().map(|&k| &sample.unique_posets[k]).collect_vec()))
            .collect();
        UfgFamily {
            sets,
            weights,
            normalizer,
            truncated,
            bounds,
            scaled,
            support: sample.unique_posets.clone(),
            multiplicities: sample.multiplicities.clone(),
        }
    }

    /// Sets as sorted lists of unique-poset indices, size-major then
    /// lexicographic.
    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.weights
    }

    /// `1 / Σ weights`; absent for an empty family.
    pub fn normalizer(&self) -> Option<&BigRational> {
        self.normalizer.as_ref()
    }

    /// Set when enumeration stopped below the number of unique posets.
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn bounds(&self) -> &[SandwichBounds] {
        &self.bounds
    }

    pub(crate) fn scaled_weights(&self) -> &[BigUint] {
        &self.scaled
    }

    /// `true` iff the family was enumerated from this sample.
    pub fn matches(&self, sample: &PosetSample) -> bool {
        self.support == sample.unique_posets && self.multiplicities == sample.multiplicities
    }
}

/// Non-triviality: the closure of `posets` holds some poset outside it.
pub fn is_c1(posets: &[Poset]) -> bool {
    if posets.is_empty() {
        return false;
    }
    let refs = posets.iter().collect_vec();
    c1(&refs)
}

/// Union-freeness: the closures of the proper subsets do not cover the
/// closure of `posets`.
///
/// Only the maximal proper subsets are checked. The closure is monotone, so
/// every proper subset's closure lies inside the closure of a maximal one and
/// any covering family can be swapped for the maximal subsets.
pub fn is_c2(posets: &[Poset]) -> bool {
    if posets.is_empty() {
        return false;
    }
    let refs = posets.iter().collect_vec();
    c2(&refs)
}

fn c1(posets: &[&Poset]) -> bool {
    let b = bounds_of(posets);
    let excluded = posets.iter().map(|&p| p.clone()).collect_vec();
    exists_witness(&b, &[], &excluded).is_some()
}

fn c2(posets: &[&Poset]) -> bool {
    let b = bounds_of(posets);
    let forbidden = if posets.len() < 2 {
        Vec::new()
    } else {
        (0..posets.len())
            .map(|skip| {
                let rest = posets
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != skip)
                    .map(|(_, &p)| p)
                    .collect_vec();
                bounds_of(&rest)
            })
            .collect_vec()
    };
    exists_witness(&b, &forbidden, &[]).is_some()
}

/// Enumerates every subset of the sample's unique posets with at least two
/// members that satisfies both conditions.
///
/// With `max_size` below the number of unique posets, larger subsets are
/// skipped and the family is flagged as truncated.
pub fn enumerate_ufg(sample: &PosetSample, max_size: Option<usize>) -> UfgFamily {
    let k = sample.unique_posets.len();
    let top = max_size.map_or(k, |m| m.min(k));
    let truncated = top < k;
    let mut sets = Vec::new();
    for size in 2..=top {
        let candidates = (0..k).combinations(size).collect_vec();
        let accepted: Vec<Vec<usize>> = candidates
            .into_par_iter()
            .filter(|subset| {
                let posets = subset.iter().map(|&i| &sample.unique_posets[i]).collect_vec();
                c1(&posets) && c2(&posets)
            })
            .collect();
        sets.extend(accepted);
    }
    UfgFamily::from_sets(sample, sets, truncated)
}
