//! Union-free generic (ufg) depth for multi-criteria optimizer benchmarks.
//!
//! Each test function of a suite yields a partial order of the optimizers by
//! strict Pareto dominance over the criteria. The ufg depth then scores how
//! typical each of those orders is relative to the whole suite.
//!
//! Pipeline:
//!
//! 1. [`io::parse_suite_csv`] reads a long-format result table.
//! 2. [`dominance::sample_from_suite`] builds one [`Poset`] per function and
//!    groups identical ones into a [`PosetSample`].
//! 3. [`ufg::enumerate_ufg`] finds the union-free generic sets among the
//!    observed posets.
//! 4. [`depth::depth_report`] computes exact rational depths and ranks.
//!
//! Pairs are read as `(i, j)`: optimizer `j` outperforms optimizer `i`.
//!
//! The [`oracle`] module recomputes families and depths from the raw
//! definitions on small instances.

pub mod cli;
pub mod closure;
pub mod depth;
pub mod dominance;
pub mod io;
pub mod oracle;
pub mod poset;
pub mod ufg;

pub use closure::{bounds, contains, exists_witness, materialize, SandwichBounds};
pub use depth::{depth_report, ufg_depth, DepthError, DepthReport};
pub use dominance::{
    pareto_compare, poset_from_function, sample_from_suite, Comparison, CriteriaTable, Criterion,
    Direction, DominanceError, TieOutcome, TiePolicy,
};
pub use oracle::{brute_force_depth, brute_force_ufg, depth_profile_over_space, enumerate_all_posets};
pub use poset::{intersect_all, union_all, Poset, PosetError, Relation, Universe};
pub use ufg::{enumerate_ufg, is_c1, is_c2, PosetSample, UfgFamily};

pub use num_rational::BigRational;
