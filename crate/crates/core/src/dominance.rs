//! Pareto dominance: one poset per test function.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::poset::{Poset, PosetError, Universe};
use crate::ufg::PosetSample;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Minimize,
    Maximize,
}

impl Direction {
    pub fn as_str(self) -> &'static str {
        match self {
            Direction::Minimize => "min",
            Direction::Maximize => "max",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Criterion {
    pub name: String,
    pub direction: Direction,
}

/// What to do with a test function in which two optimizers are equal on
/// every criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TiePolicy {
    #[default]
    Error,
    DropFunction,
}

impl TiePolicy {
    pub fn as_str(self) -> &'static str {
        match self {
            TiePolicy::Error => "error",
            TiePolicy::DropFunction => "drop",
        }
    }
}

/// Verdict of `a` against `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Dominates,
    DominatedBy,
    Incomparable,
    Indifferent,
}

impl Comparison {
    pub fn mirror(self) -> Comparison {
        match self {
            Comparison::Dominates => Comparison::DominatedBy,
            Comparison::DominatedBy => Comparison::Dominates,
            other => other,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DominanceError {
    #[error("criterion vectors have lengths {0}, {1} and {2} directions")]
    LengthMismatch(usize, usize, usize),
    #[error("non-finite criterion value {0}")]
    NonFiniteValue(f64),
    #[error("test function {function:?}: optimizers {} are indifferent on every criterion", fmt_pairs(.pairs))]
    TieDetected {
        function: String,
        pairs: Vec<(String, String)>,
    },
    #[error("unknown test function {0:?}")]
    UnknownFunction(String),
    #[error("every test function was dropped because of ties")]
    AllFunctionsDropped,
    #[error("table needs at least one function, one criterion and two optimizers (got n={functions}, c={criteria}, d={optimizers})")]
    TableTooSmall {
        functions: usize,
        criteria: usize,
        optimizers: usize,
    },
    #[error("table has {got} values, expected {expected}")]
    WrongValueCount { expected: usize, got: usize },
    #[error("duplicate {kind} name {name:?}")]
    DuplicateName { kind: &'static str, name: String },
    #[error(transparent)]
    Poset(#[from] PosetError),
}

fn fmt_pairs(pairs: &[(String, String)]) -> String {
    pairs
        .iter()
        .map(|(a, b)| format!("({a}, {b})"))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Compares two criterion vectors after orienting every criterion so that
/// smaller is better.
pub fn pareto_compare(
    a: &[f64],
    b: &[f64],
    directions: &[Direction],
) -> Result<Comparison, DominanceError> {
    if a.len() != b.len() || a.len() != directions.len() {
        return Err(DominanceError::LengthMismatch(a.len(), b.len(), directions.len()));
    }
    let mut a_better = false;
    let mut b_better = false;
    for ((&x, &y), dir) in a.iter().zip(b).zip(directions) {
        for v in [x, y] {
            if !v.is_finite() {
                return Err(DominanceError::NonFiniteValue(v));
            }
        }
        let (x, y) = match dir {
            Direction::Minimize => (x, y),
            Direction::Maximize => (y, x),
        };
        if x < y {
            a_better = true;
        } else if y < x {
            b_better = true;
        }
    }
    Ok(match (a_better, b_better) {
        (true, false) => Comparison::Dominates,
        (false, true) => Comparison::DominatedBy,
        (true, true) => Comparison::Incomparable,
        (false, false) => Comparison::Indifferent,
    })
}

/// Criterion values indexed by (test function, optimizer, criterion).
#[derive(Debug, Clone, PartialEq)]
pub struct CriteriaTable {
    universe: Universe,
    functions: Vec<String>,
    criteria: Vec<Criterion>,
    values: Vec<f64>,
}

impl CriteriaTable {
    /// `values` is laid out function-major, then optimizer, then criterion.
    pub fn new(
        universe: Universe,
        functions: Vec<String>,
        criteria: Vec<Criterion>,
        values: Vec<f64>,
    ) -> Result<Self, DominanceError> {
        let (n, d, c) = (functions.len(), universe.len(), criteria.len());
        if n == 0 || c == 0 || d < 2 {
            return Err(DominanceError::TableTooSmall {
                functions: n,
                criteria: c,
                optimizers: d,
            });
        }
        check_unique("function", functions.iter())?;
        check_unique("criterion", criteria.iter().map(|c| &c.name))?;
        if values.len() != n * d * c {
            return Err(DominanceError::WrongValueCount {
                expected: n * d * c,
                got: values.len(),
            });
        }
        if let Some(&bad) = values.iter().find(|v| !v.is_finite()) {
            return Err(DominanceError::NonFiniteValue(bad));
        }
        Ok(CriteriaTable {
            universe,
            functions,
            criteria,
            values,
        })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn functions(&self) -> &[String] {
        &self.functions
    }

    pub fn criteria(&self) -> &[Criterion] {
        &self.criteria
    }

    pub fn directions(&self) -> Vec<Direction> {
        self.criteria.iter().map(|c| c.direction).collect()
    }

    pub fn function_index(&self, name: &str) -> Option<usize> {
        self.functions.iter().position(|f| f == name)
    }

    /// Criterion vector of one optimizer on one function.
    pub fn vector(&self, function: usize, optimizer: usize) -> &[f64] {
        let c = self.criteria.len();
        let start = (function * self.universe.len() + optimizer) * c;
        &self.values[start..start + c]
    }

    pub fn value(&self, function: usize, optimizer: usize, criterion: usize) -> f64 {
        self.vector(function, optimizer)[criterion]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Applies `f(criterion index, value)` to every cell.
    pub fn map_values(&self, mut f: impl FnMut(usize, f64) -> f64) -> Result<Self, DominanceError> {
        let c = self.criteria.len();
        let values = self
            .values
            .iter()
            .enumerate()
            .map(|(k, &v)| f(k % c, v))
            .collect();
        CriteriaTable::new(
            self.universe.clone(),
            self.functions.clone(),
            self.criteria.clone(),
            values,
        )
    }
}

fn check_unique<'a>(
    kind: &'static str,
    names: impl Iterator<Item = &'a String>,
) -> Result<(), DominanceError> {
    let mut seen = HashMap::new();
    for name in names {
        if seen.insert(name.as_str(), ()).is_some() {
            return Err(DominanceError::DuplicateName {
                kind,
                name: name.clone(),
            });
        }
    }
    Ok(())
}

/// A test function removed because some optimizers tie on every criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TieOutcome {
    pub function: String,
    pub tied_pairs: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FunctionOutcome {
    Poset(Poset),
    Dropped(TieOutcome),
}

/// Builds the dominance poset of a single test function.
///
/// `(i, j)` is in the result iff optimizer `j` Pareto-dominates optimizer `i`.
pub fn poset_from_function(
    table: &CriteriaTable,
    function: &str,
    policy: TiePolicy,
) -> Result<FunctionOutcome, DominanceError> {
    let f = table
        .function_index(function)
        .ok_or_else(|| DominanceError::UnknownFunction(function.to_string()))?;
    poset_at(table, f, policy)
}

fn poset_at(
    table: &CriteriaTable,
    f: usize,
    policy: TiePolicy,
) -> Result<FunctionOutcome, DominanceError> {
    let d = table.universe.len();
    let directions = table.directions();
    let mut pairs = Vec::new();
    let mut ties = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            match pareto_compare(table.vector(f, i), table.vector(f, j), &directions)? {
                Comparison::Dominates => pairs.push((j, i)),
                Comparison::DominatedBy => pairs.push((i, j)),
                Comparison::Incomparable => {}
                Comparison::Indifferent => ties.push((
                    table.universe.label(i).to_string(),
                    table.universe.label(j).to_string(),
                )),
            }
        }
    }
    if !ties.is_empty() {
        let function = table.functions[f].clone();
        return match policy {
            TiePolicy::Error => Err(DominanceError::TieDetected {
                function,
                pairs: ties,
            }),
            TiePolicy::DropFunction => Ok(FunctionOutcome::Dropped(TieOutcome {
                function,
                tied_pairs: ties,
            })),
        };
    }
    // strict Pareto dominance is a strict partial order, so this cannot fail
    let poset = Poset::from_pairs(d, pairs)
        .expect("strict Pareto dominance must yield a partial order");
    Ok(FunctionOutcome::Poset(poset))
}

/// Builds the poset sample of a whole suite, grouping identical posets.
///
/// Unique posets are ordered by first appearance in function order.
pub fn sample_from_suite(
    table: &CriteriaTable,
    policy: TiePolicy,
) -> Result<(PosetSample, Vec<TieOutcome>), DominanceError> {
    let mut observed = Vec::new();
    let mut dropped = Vec::new();
    for (f, name) in table.functions.iter().enumerate() {
        match poset_at(table, f, policy)? {
            FunctionOutcome::Poset(p) => observed.push((name.clone(), p)),
            FunctionOutcome::Dropped(tie) => dropped.push(tie),
        }
    }
    if observed.is_empty() {
        return Err(DominanceError::AllFunctionsDropped);
    }
    let sample = PosetSample::from_observations(table.universe.clone(), observed)?;
    Ok((sample, dropped))
}

#[cfg(test)]
mod tests {
    use super::*;
    use Direction::*;

    fn table(values: &[[f64; 2]]) -> CriteriaTable {
        let d = values.len();
        let labels = ["SGD", "MOM", "ADAM", "X", "Y"];
        CriteriaTable::new(
            Universe::new(labels[..d].iter().copied()).unwrap(),
            vec!["f".into()],
            vec![
                Criterion { name: "loss".into(), direction: Minimize },
                Criterion { name: "time".into(), direction: Minimize },
            ],
            values.iter().flatten().copied().collect(),
        )
        .unwrap()
    }

    #[test]
    fn compare_examples() {
        let mm = [Minimize, Minimize];
        assert_eq!(pareto_compare(&[0.2, 10.], &[0.3, 12.], &mm), Ok(Comparison::Dominates));
        assert_eq!(pareto_compare(&[0.2, 12.], &[0.3, 10.], &mm), Ok(Comparison::Incomparable));
        assert_eq!(pareto_compare(&[0.2, 10.], &[0.2, 10.], &mm), Ok(Comparison::Indifferent));
        assert_eq!(pareto_compare(&[0.2, 10.], &[0.2, 12.], &mm), Ok(Comparison::Dominates));
        assert_eq!(pareto_compare(&[0.3, 12.], &[0.2, 10.], &mm), Ok(Comparison::DominatedBy));
    }

    #[test]
    fn compare_respects_direction() {
        assert_eq!(
            pareto_compare(&[0.9, 10.], &[0.8, 12.], &[Maximize, Minimize]),
            Ok(Comparison::Dominates)
        );
        assert_eq!(
            pareto_compare(&[0.9, 10.], &[0.8, 12.], &[Minimize, Minimize]),
            Ok(Comparison::Incomparable)
        );
    }

    #[test]
    fn compare_errors() {
        assert_eq!(
            pareto_compare(&[1.], &[1., 2.], &[Minimize]),
            Err(DominanceError::LengthMismatch(1, 2, 1))
        );
        assert!(matches!(
            pareto_compare(&[f64::NAN], &[1.], &[Minimize]),
            Err(DominanceError::NonFiniteValue(_))
        ));
    }

    #[test]
    fn chain_and_antichain() {
        let t = table(&[[1., 1.], [2., 2.], [3., 3.]]);
        let FunctionOutcome::Poset(p) = poset_from_function(&t, "f", TiePolicy::Error).unwrap()
        else {
            panic!("expected a poset")
        };
        // ADAM=2 < MOM=1 < SGD=0
        assert_eq!(p, Poset::from_pairs(3, [(2, 1), (1, 0), (2, 0)]).unwrap());

        let t = table(&[[1., 3.], [2., 2.], [3., 1.]]);
        let outcome = poset_from_function(&t, "f", TiePolicy::Error).unwrap();
        assert_eq!(outcome, FunctionOutcome::Poset(Poset::antichain(3)));
    }

    #[test]
    fn ties_follow_policy() {
        let t = table(&[[1., 1.], [1., 1.], [3., 3.]]);
        let outcome = poset_from_function(&t, "f", TiePolicy::DropFunction).unwrap();
        assert_eq!(
            outcome,
            FunctionOutcome::Dropped(TieOutcome {
                function: "f".into(),
                tied_pairs: vec![("SGD".into(), "MOM".into())],
            })
        );
        assert!(matches!(
            poset_from_function(&t, "f", TiePolicy::Error),
            Err(DominanceError::TieDetected { .. })
        ));
        assert_eq!(
            poset_from_function(&t, "g", TiePolicy::Error),
            Err(DominanceError::UnknownFunction("g".into()))
        );
    }

    #[test]
    fn suite_groups_duplicates() {
        let u = Universe::new(["a", "b", "c"]).unwrap();
        let crit = vec![Criterion { name: "loss".into(), direction: Minimize }];
        // f1, f2: a < b < c in loss; f3: reversed
        let values = vec![1., 2., 3., 1., 2., 3., 3., 2., 1.];
        let t = CriteriaTable::new(u, vec!["f1".into(), "f2".into(), "f3".into()], crit, values)
            .unwrap();
        let (sample, dropped) = sample_from_suite(&t, TiePolicy::Error).unwrap();
        assert!(dropped.is_empty());
        assert_eq!(sample.unique_posets().len(), 2);
        assert_eq!(sample.multiplicities(), &[2, 1]);
        assert_eq!(sample.provenance()[0], vec!["f1".to_string(), "f2".to_string()]);
        assert_eq!(sample.n_total(), 3);
    }

    #[test]
    fn suite_drops_tied_function() {
        let u = Universe::new(["a", "b"]).unwrap();
        let crit = vec![Criterion { name: "loss".into(), direction: Minimize }];
        let t = CriteriaTable::new(u, vec!["f1".into(), "f2".into()], crit, vec![1., 2., 5., 5.])
            .unwrap();
        let (sample, dropped) = sample_from_suite(&t, TiePolicy::DropFunction).unwrap();
        assert_eq!(sample.n_total(), 1);
        assert_eq!(dropped.len(), 1);
        assert_eq!(dropped[0].function, "f2");
        assert!(matches!(
            sample_from_suite(&t, TiePolicy::Error),
            Err(DominanceError::TieDetected { .. })
        ));
    }

    #[test]
    fn all_dropped_is_an_error() {
        let u = Universe::new(["a", "b"]).unwrap();
        let crit = vec![Criterion { name: "loss".into(), direction: Minimize }];
        let t = CriteriaTable::new(u, vec!["f1".into()], crit, vec![5., 5.]).unwrap();
        assert_eq!(
            sample_from_suite(&t, TiePolicy::DropFunction).unwrap_err(),
            DominanceError::AllFunctionsDropped
        );
    }

    #[test]
    fn table_validation() {
        let u = Universe::new(["a", "b"]).unwrap();
        let crit = vec![Criterion { name: "loss".into(), direction: Minimize }];
        assert!(matches!(
            CriteriaTable::new(u.clone(), vec!["f".into()], crit.clone(), vec![1.]),
            Err(DominanceError::WrongValueCount { expected: 2, got: 1 })
        ));
        assert!(matches!(
            CriteriaTable::new(u.clone(), vec!["f".into()], crit.clone(), vec![1., f64::INFINITY]),
            Err(DominanceError::NonFiniteValue(_))
        ));
        assert!(matches!(
            CriteriaTable::new(u, vec![], crit, vec![]),
            Err(DominanceError::TableTooSmall { .. })
        ));
    }
}
