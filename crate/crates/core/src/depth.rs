//! Empirical ufg depth and the per-suite typicality report.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use thiserror::Error;

use crate::poset::{Poset, PosetError, Universe};
use crate::ufg::{PosetSample, UfgFamily};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DepthError {
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error("the ufg family was not enumerated from this sample")]
    FamilySampleMismatch,
}

/// Depth of `q`: the normalized weight of the family sets whose closure
/// contains `q`, or zero for an empty family.
pub fn ufg_depth(
    sample: &PosetSample,
    family: &UfgFamily,
    q: &Poset,
) -> Result<BigRational, DepthError> {
    let n = sample.universe().len();
    if q.len() != n {
        return Err(PosetError::UniverseMismatch(n, q.len()).into());
    }
    if !family.matches(sample) {
        return Err(DepthError::FamilySampleMismatch);
    }
    Ok(depth_unchecked(family, q))
}

fn depth_unchecked(family: &UfgFamily, q: &Poset) -> BigRational {
    let scaled = family.scaled_weights();
    let total: BigUint = scaled.iter().sum();
    if total.is_zero() {
        return BigRational::zero();
    }
    let hit: BigUint = family
        .bounds()
        .iter()
        .zip(scaled)
        .filter(|(b, _)| b.admits(q))
        .map(|(_, w)| w)
        .sum();
    BigRational::new(BigInt::from(hit), BigInt::from(total))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionDepth {
    pub function: String,
    pub poset_index: usize,
    pub depth: BigRational,
    /// Dense rank, 1 = deepest.
    pub rank: usize,
}

/// Test functions that produced the same poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DuplicateGroup {
    pub poset_index: usize,
    pub functions: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dispersion {
    pub min: BigRational,
    pub max: BigRational,
    pub range: BigRational,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DepthReport {
    pub universe: Universe,
    pub unique_posets: Vec<Poset>,
    pub multiplicities: Vec<u64>,
    /// Depth of each unique poset, aligned with `unique_posets`.
    pub per_unique_poset: Vec<BigRational>,
    /// Rows ordered by rank, then function name.
    pub per_function: Vec<FunctionDepth>,
    pub duplicate_groups: Vec<DuplicateGroup>,
    pub dispersion: Dispersion,
    pub family_size: usize,
    pub truncated: bool,
    pub normalizer: Option<BigRational>,
}

impl DepthReport {
    /// Indices of the unique posets with the highest depth.
    pub fn deepest(&self) -> Vec<usize> {
        self.indices_at(&self.dispersion.max)
    }

    /// Indices of the unique posets with the lowest depth.
    pub fn shallowest(&self) -> Vec<usize> {
        self.indices_at(&self.dispersion.min)
    }

    fn indices_at(&self, value: &BigRational) -> Vec<usize> {
        (0..self.per_unique_poset.len())
            .filter(|&k| self.per_unique_poset[k] == *value)
            .collect()
    }
}

pub fn depth_report(sample: &PosetSample, family: &UfgFamily) -> Result<DepthReport, DepthError> {
    if !family.matches(sample) {
        return Err(DepthError::FamilySampleMismatch);
    }
    let depths: Vec<BigRational> = sample
        .unique_posets()
        .par_iter()
        .map(|p| depth_unchecked(family, p))
        .collect();

    let distinct: BTreeSet<&BigRational> = depths.iter().collect();
    let descending: Vec<&BigRational> = distinct.into_iter().rev().collect();
    let rank_of = |d: &BigRational| descending.iter().position(|x| *x == d).unwrap() + 1;

    let mut per_function = Vec::new();
    for (k, names) in sample.provenance().iter().enumerate() {
        for name in names {
            per_function.push(FunctionDepth {
                function: name.clone(),
                poset_index: k,
                depth: depths[k].clone(),
                rank: rank_of(&depths[k]),
            });
        }
    }
    per_function.sort_by(|a, b| a.rank.cmp(&b.rank).then_with(|| a.function.cmp(&b.function)));

    let duplicate_groups = sample
        .provenance()
        .iter()
        .enumerate()
        .filter(|(_, names)| names.len() > 1)
        .map(|(k, names)| {
            let mut functions = names.clone();
            functions.sort();
            DuplicateGroup {
                poset_index: k,
                functions,
            }
        })
        .collect();

    let min = depths.iter().min().cloned().unwrap_or_else(BigRational::zero);
    let max = depths.iter().max().cloned().unwrap_or_else(BigRational::zero);
    let range = &max - &min;

    Ok(DepthReport {
        universe: sample.universe().clone(),
        unique_posets: sample.unique_posets().to_vec(),
        multiplicities: sample.multiplicities().to_vec(),
        per_unique_poset: depths,
        per_function,
        duplicate_groups,
        dispersion: Dispersion { min, max, range },
        family_size: family.len(),
        truncated: family.truncated(),
        normalizer: family.normalizer().cloned(),
    })
}
