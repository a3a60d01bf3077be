//! Relations and partial orders over a fixed, finite item set.
//!
//! Every relation is stored as its strict part: a bit matrix with one `u64`
//! row per item, where bit `j` of row `i` encodes the pair `(i, j)`.
//! Reflexive pairs are implicit and never stored.
//!
//! Pair direction: `(i, j)` means "item `j` outperforms item `i`", i.e. `j`
//! sits above `i` in the Hasse diagram.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Largest item count a [`Relation`] can hold.
pub const MAX_ITEMS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("pairs ({0}, {1}) and ({1}, {0}) are both present")]
    AntisymmetryViolation(usize, usize),
    #[error("pairs ({0}, {1}) and ({1}, {2}) are present but ({0}, {2}) is missing")]
    TransitivityViolation(usize, usize, usize),
    #[error("pair ({0}, {1}) is out of range for {2} items")]
    IndexOutOfRange(usize, usize, usize),
    #[error("reflexive pair ({0}, {0}) is implicit and may not be listed")]
    ReflexivePair(usize),
    #[error("relations over {0} and {1} items cannot be combined")]
    UniverseMismatch(usize, usize),
    #[error("operation needs at least one poset")]
    EmptyInput,
    #[error("universe must have between 1 and {MAX_ITEMS} items, got {0}")]
    BadUniverseSize(usize),
    #[error("item label {0:?} is empty or duplicated")]
    BadLabel(String),
}

/// The ordered item set (optimizer names) all relations are indexed against.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Universe {
    items: Vec<String>,
}

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Self, PosetError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let items: Vec<String> = labels.into_iter().map(Into::into).collect();
        if items.is_empty() || items.len() > MAX_ITEMS {
            return Err(PosetError::BadUniverseSize(items.len()));
        }
        let mut seen = HashMap::new();
        for label in &items {
            if label.is_empty() || seen.insert(label.as_str(), ()).is_some() {
                return Err(PosetError::BadLabel(label.clone()));
            }
        }
        Ok(Universe { items })
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn label(&self, index: usize) -> &str {
        &self.items[index]
    }

    pub fn labels(&self) -> &[String] {
        &self.items
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.items.iter().position(|l| l == label)
    }
}

/// An arbitrary strict relation (no reflexive pairs) on `len` items.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Relation {
    rows: Vec<u64>,
}

impl Relation {
    pub fn empty(len: usize) -> Self {
        assert!(len <= MAX_ITEMS, "at most {MAX_ITEMS} items are supported");
        Relation { rows: vec![0; len] }
    }

    pub fn from_pairs<I>(len: usize, pairs: I) -> Result<Self, PosetError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if len == 0 || len > MAX_ITEMS {
            return Err(PosetError::BadUniverseSize(len));
        }
        let mut rel = Relation::empty(len);
        for (i, j) in pairs {
            if i >= len || j >= len {
                return Err(PosetError::IndexOutOfRange(i, j, len));
            }
            if i == j {
                return Err(PosetError::ReflexivePair(i));
            }
            rel.rows[i] |= 1 << j;
        }
        Ok(rel)
    }

    pub(crate) fn from_rows(rows: Vec<u64>) -> Self {
        debug_assert!(rows.len() <= MAX_ITEMS);
        debug_assert!(rows
            .iter()
            .enumerate()
            .all(|(i, r)| r & (1 << i) == 0 && (rows.len() == 64 || r >> rows.len() == 0)));
        Relation { rows }
    }

    /// Number of items the relation ranges over.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        i < self.len() && j < self.len() && self.rows[i] >> j & 1 == 1
    }

    pub fn pair_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// Pairs in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &row)| BitIter(row).map(move |j| (i, j)))
    }

    pub fn is_subset_of(&self, other: &Relation) -> bool {
        self.len() == other.len() && self.rows.iter().zip(&other.rows).all(|(a, b)| a & !b == 0)
    }

    fn check_len(&self, other: &Relation) -> Result<(), PosetError> {
        if self.len() == other.len() {
            Ok(())
        } else {
            Err(PosetError::UniverseMismatch(self.len(), other.len()))
        }
    }

    pub fn union(&self, other: &Relation) -> Result<Relation, PosetError> {
        self.check_len(other)?;
        Ok(Relation {
            rows: self.rows.iter().zip(&other.rows).map(|(a, b)| a | b).collect(),
        })
    }

    pub fn intersection(&self, other: &Relation) -> Result<Relation, PosetError> {
        self.check_len(other)?;
        Ok(Relation {
            rows: self.rows.iter().zip(&other.rows).map(|(a, b)| a & b).collect(),
        })
    }

    pub fn difference(&self, other: &Relation) -> Result<Relation, PosetError> {
        self.check_len(other)?;
        Ok(Relation {
            rows: self.rows.iter().zip(&other.rows).map(|(a, b)| a & !b).collect(),
        })
    }

    /// Returns the first antisymmetry or transitivity violation, if any.
    pub fn validate_partial_order(&self) -> Result<(), PosetError> {
        let n = self.len();
        for i in 0..n {
            for j in BitIter(self.rows[i]) {
                if self.rows[j] >> i & 1 == 1 {
                    return Err(PosetError::AntisymmetryViolation(i.min(j), i.max(j)));
                }
            }
        }
        for i in 0..n {
            for j in BitIter(self.rows[i]) {
                let missing = self.rows[j] & !self.rows[i] & !(1 << i);
                if missing != 0 {
                    return Err(PosetError::TransitivityViolation(
                        i,
                        j,
                        missing.trailing_zeros() as usize,
                    ));
                }
            }
        }
        Ok(())
    }

    /// Smallest transitive superset (Warshall over bit rows).
    ///
    /// Reflexive pairs produced by cycles are implicit and dropped; a cyclic
    /// input therefore never closes to a partial order.
    pub fn transitive_closure(&self) -> Relation {
        let n = self.len();
        let mut rows = self.rows.clone();
        for k in 0..n {
            let row_k = rows[k];
            for row in rows.iter_mut() {
                if *row >> k & 1 == 1 {
                    *row |= row_k;
                }
            }
        }
        for (i, row) in rows.iter_mut().enumerate() {
            *row &= !(1 << i);
        }
        Relation { rows }
    }

    /// Pairs `(j, i)` for every `(i, j)`.
    pub fn transpose(&self) -> Relation {
        let n = self.len();
        let mut rows = vec![0u64; n];
        for (i, j) in self.pairs() {
            rows[j] |= 1 << i;
        }
        Relation { rows }
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}

/// A partial order, stored as its strict part.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poset {
    rel: Relation,
}

impl Poset {
    /// The antichain: no strict pairs at all.
    pub fn antichain(len: usize) -> Self {
        Poset {
            rel: Relation::empty(len),
        }
    }

    /// Validates the strict pairs; does not repair missing transitive pairs.
    pub fn from_pairs<I>(len: usize, strict_pairs: I) -> Result<Self, PosetError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Poset::try_from(Relation::from_pairs(len, strict_pairs)?)
    }

    /// Closes the given pairs transitively, then validates antisymmetry.
    pub fn from_pairs_closed<I>(len: usize, pairs: I) -> Result<Self, PosetError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let rel = Relation::from_pairs(len, pairs)?;
        let closed = rel.transitive_closure();
        // a cycle loses its diagonal in the closure; detect it on the raw rows
        for (i, j) in closed.pairs() {
            if closed.contains(j, i) {
                return Err(PosetError::AntisymmetryViolation(i.min(j), i.max(j)));
            }
        }
        Poset::try_from(closed)
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        let rel = Relation::from_rows(rows);
        debug_assert!(rel.validate_partial_order().is_ok());
        Poset { rel }
    }

    pub fn relation(&self) -> &Relation {
        &self.rel
    }

    pub fn into_relation(self) -> Relation {
        self.rel
    }

    pub fn len(&self) -> usize {
        self.rel.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rel.is_empty()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.rel.contains(i, j)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rel.pairs()
    }

    pub fn pair_count(&self) -> usize {
        self.rel.pair_count()
    }

    /// `true` iff every strict pair of `self` is also in `other`.
    pub fn is_extension(&self, other: &Poset) -> Result<bool, PosetError> {
        self.rel.check_len(&other.rel)?;
        Ok(self.rel.is_subset_of(&other.rel))
    }

    /// Hasse edges: the unique minimal pair set with the same closure.
    pub fn transitive_reduction(&self) -> Relation {
        let rows = self.rel.rows();
        let reduced = rows
            .iter()
            .map(|&row| {
                // (i, j) is implied when some k has (i, k) and (k, j)
                let implied = BitIter(row).fold(0u64, |acc, k| acc | rows[k]);
                row & !implied
            })
            .collect();
        Relation { rows: reduced }
    }

    /// Relabels items: item `i` becomes item `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Poset {
        assert_eq!(perm.len(), self.len());
        let mut rows = vec![0u64; self.len()];
        for (i, j) in self.pairs() {
            rows[perm[i]] |= 1 << perm[j];
        }
        Poset::from_rows_unchecked(rows)
    }
}

impl TryFrom<Relation> for Poset {
    type Error = PosetError;

    fn try_from(rel: Relation) -> Result<Self, Self::Error> {
        rel.validate_partial_order()?;
        Ok(Poset { rel })
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poset")?;
        self.rel.fmt(f)
    }
}

fn check_shared(posets: &[Poset]) -> Result<usize, PosetError> {
    let first = posets.first().ok_or(PosetError::EmptyInput)?;
    for p in &posets[1..] {
        first.rel.check_len(&p.rel)?;
    }
    Ok(first.len())
}

/// Pairwise intersection of strict parts; always a partial order.
pub fn intersect_all(posets: &[Poset]) -> Result<Poset, PosetError> {
    let n = check_shared(posets)?;
    let mut rows = vec![u64::MAX; n];
    for p in posets {
        for (acc, r) in rows.iter_mut().zip(p.rel.rows()) {
            *acc &= r;
        }
    }
    Ok(Poset::from_rows_unchecked(rows))
}

/// Pairwise union of strict parts; may be neither antisymmetric nor transitive.
pub fn union_all(posets: &[Poset]) -> Result<Relation, PosetError> {
    let n = check_shared(posets)?;
    let mut rows = vec![0u64; n];
    for p in posets {
        for (acc, r) in rows.iter_mut().zip(p.rel.rows()) {
            *acc |= r;
        }
    }
    Ok(Relation { rows })
}

/// Iterates the set bit positions of a word, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let bit = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(bit)
    }
}
