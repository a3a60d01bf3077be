//! The sandwich closure on sets of posets.
//!
//! For a nonempty set of posets `P`, the closure is the set of all posets `q`
//! with `∩P ⊆ q ⊆ ∪P`. It is represented implicitly by its two bounds; the
//! set itself is only materialized for small instances.

use thiserror::Error;

use crate::poset::{intersect_all, union_all, BitIter, Poset, PosetError, Relation};

/// Default cap on `|upper \ lower|` for [`materialize`].
pub const DEFAULT_FREE_PAIR_BUDGET: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosureError {
    #[error("closure has {free} free pairs, budget is {budget}")]
    FreePairBudgetExceeded { free: usize, budget: usize },
    #[error(transparent)]
    Poset(#[from] PosetError),
}

/// Lower and upper bound of a closure: `γ(P) = { q : lower ⊆ q ⊆ upper }`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SandwichBounds {
    lower: Poset,
    upper: Relation,
}

impl SandwichBounds {
    pub fn lower(&self) -> &Poset {
        &self.lower
    }

    pub fn upper(&self) -> &Relation {
        &self.upper
    }

    pub fn len(&self) -> usize {
        self.upper.len()
    }

    pub fn is_empty(&self) -> bool {
        self.upper.is_empty()
    }

    /// Pairs that members may or may not contain.
    pub fn free_pairs(&self) -> Relation {
        self.upper
            .difference(self.lower.relation())
            .expect("bounds share a universe")
    }

    /// `true` iff every member of `self` is a member of `other`.
    pub fn is_within(&self, other: &SandwichBounds) -> bool {
        other.lower.relation().is_subset_of(self.lower.relation())
            && self.upper.is_subset_of(&other.upper)
    }

    /// Membership test without the universe check.
    pub(crate) fn admits(&self, q: &Poset) -> bool {
        self.lower.relation().is_subset_of(q.relation()) && q.relation().is_subset_of(&self.upper)
    }
}

pub fn bounds(posets: &[Poset]) -> Result<SandwichBounds, PosetError> {
    Ok(SandwichBounds {
        lower: intersect_all(posets)?,
        upper: union_all(posets)?,
    })
}

/// [`bounds`] over borrowed posets that are known to share a universe.
pub(crate) fn bounds_of(posets: &[&Poset]) -> SandwichBounds {
    let n = posets[0].len();
    let mut lower = vec![u64::MAX; n];
    let mut upper = vec![0u64; n];
    for p in posets {
        for ((lo, up), r) in lower.iter_mut().zip(upper.iter_mut()).zip(p.relation().rows()) {
            *lo &= r;
            *up |= r;
        }
    }
    SandwichBounds {
        lower: Poset::from_rows_unchecked(lower),
        upper: Relation::from_rows(upper),
    }
}

/// `q ∈ γ(P)`.
pub fn contains(b: &SandwichBounds, q: &Poset) -> Result<bool, PosetError> {
    if b.len() != q.len() {
        return Err(PosetError::UniverseMismatch(b.len(), q.len()));
    }
    Ok(b.admits(q))
}

/// Lists every poset between the bounds, in increasing order of the free
/// pair subset bitmask.
pub fn materialize(b: &SandwichBounds, budget: usize) -> Result<Vec<Poset>, ClosureError> {
    let free: Vec<(usize, usize)> = b.free_pairs().pairs().collect();
    if free.len() > budget || free.len() >= 64 {
        return Err(ClosureError::FreePairBudgetExceeded {
            free: free.len(),
            budget,
        });
    }
    let base = b.lower.relation().rows().to_vec();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << free.len()) {
        let mut rows = base.clone();
        for (bit, &(i, j)) in free.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                rows[i] |= 1 << j;
            }
        }
        if let Ok(p) = Poset::try_from(Relation::from_rows(rows)) {
            out.push(p);
        }
    }
    Ok(out)
}

/// Searches for a poset `q` with `q ∈ b`, `q ∉ excluded`, and `q ∉ f` for
/// every `f` in `forbidden`.
///
/// The search is a complete depth-first search over the free pairs of `b`.
/// Included pairs are kept transitively closed, so at every node the set of
/// included pairs is itself a member of `b`; once every forbidden interval
/// has been escaped that poset is returned unless it is excluded.
pub fn exists_witness(
    b: &SandwichBounds,
    forbidden: &[SandwichBounds],
    excluded: &[Poset],
) -> Option<Poset> {
    let n = b.len();
    if forbidden.iter().any(|f| f.len() != n) || excluded.iter().any(|q| q.len() != n) {
        return None;
    }
    if !b.lower.relation().is_subset_of(&b.upper) {
        return None;
    }
    // an interval swallowing the whole search space settles it immediately
    if forbidden.iter().any(|f| b.is_within(f)) {
        return None;
    }
    let forbidden: Vec<Interval<'_>> = forbidden
        .iter()
        .map(|f| Interval {
            lower: f.lower.relation().rows(),
            upper: f.upper.rows(),
        })
        .collect();
    let excluded: Vec<&[u64]> = excluded
        .iter()
        .filter(|q| b.admits(q))
        .map(|q| q.relation().rows())
        .collect();
    let search = Search {
        n,
        upper: b.upper.rows(),
        forbidden: &forbidden,
        excluded: &excluded,
    };
    let state = State {
        inc: b.lower.relation().rows().to_vec(),
        exc: vec![0; n],
    };
    search.run(state).map(Poset::from_rows_unchecked)
}

struct Interval<'a> {
    lower: &'a [u64],
    upper: &'a [u64],
}

struct Search<'a> {
    n: usize,
    upper: &'a [u64],
    forbidden: &'a [Interval<'a>],
    excluded: &'a [&'a [u64]],
}

#[derive(Clone)]
struct State {
    /// Included pairs; always transitively closed and antisymmetric.
    inc: Vec<u64>,
    /// Pairs of `upper` decided to stay out.
    exc: Vec<u64>,
}

enum Branch {
    Include(usize, usize),
    Exclude(usize, usize),
}

impl Search<'_> {
    fn run(&self, state: State) -> Option<Vec<u64>> {
        // pairs that can never enter q from this node on
        let mut blocked = state.exc.clone();
        for i in 0..self.n {
            for j in BitIter(state.inc[i]) {
                blocked[j] |= 1 << i;
            }
        }
        let open: Vec<u64> = (0..self.n)
            .map(|i| self.upper[i] & !state.inc[i] & !blocked[i])
            .collect();

        let mut pick = None;
        for f in self.forbidden {
            let escaped = (0..self.n).any(|i| {
                state.inc[i] & !f.upper[i] != 0
                    || f.lower[i] & (blocked[i] | !self.upper[i]) != 0
            });
            if escaped {
                continue;
            }
            let mut candidate = None;
            for i in 0..self.n {
                let grow = open[i] & !f.upper[i];
                let cut = open[i] & f.lower[i];
                let choice = match (grow != 0, cut != 0) {
                    (false, false) => continue,
                    (true, _) if cut == 0 || grow.trailing_zeros() < cut.trailing_zeros() => {
                        Branch::Include(i, grow.trailing_zeros() as usize)
                    }
                    _ => Branch::Exclude(i, cut.trailing_zeros() as usize),
                };
                candidate = Some(choice);
                break;
            }
            // None: still inside f and no free pair can move q out of it
            let c = candidate?;
            if pick.is_none() {
                pick = Some(c);
            }
        }

        let pick = match pick {
            Some(p) => p,
            None => {
                if !self.excluded.contains(&state.inc.as_slice()) {
                    return Some(state.inc);
                }
                let i = (0..self.n).find(|&i| open[i] != 0)?;
                Branch::Include(i, open[i].trailing_zeros() as usize)
            }
        };

        let (i, j, include_first) = match pick {
            Branch::Include(i, j) => (i, j, true),
            Branch::Exclude(i, j) => (i, j, false),
        };
        for include in [include_first, !include_first] {
            let found = if include {
                self.include(&state, i, j).and_then(|s| self.run(s))
            } else {
                let mut s = state.clone();
                s.exc[i] |= 1 << j;
                self.run(s)
            };
            if found.is_some() {
                return found;
            }
        }
        None
    }

    /// Adds `(a, b)` and everything transitivity forces, or `None` on a
    /// conflict with `upper`, the exclusions, or antisymmetry.
    fn include(&self, state: &State, a: usize, b: usize) -> Option<State> {
        if state.inc[b] >> a & 1 == 1 {
            return None;
        }
        let up = state.inc[b] | 1 << b;
        let mut next = state.clone();
        for x in 0..self.n {
            if x == a || state.inc[x] >> a & 1 == 1 {
                let added = up & !state.inc[x];
                if added & !(self.upper[x] & !state.exc[x]) != 0 {
                    return None;
                }
                next.inc[x] |= up;
            }
        }
        Some(next)
    }
}
