//! Builds one Pareto-dominance poset per test function from a small
//! multi-criteria table, showing both tie policies.
//!
//! cargo run --example dominance_posets

use ufgdepth::dominance::FunctionOutcome;
use ufgdepth::{poset_from_function, sample_from_suite, CriteriaTable, Criterion, Direction, TiePolicy, Universe};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let universe = Universe::new(["SGD", "MOM", "ADAM"])?;
    let criteria = vec![
        Criterion { name: "accuracy".into(), direction: Direction::Maximize },
        Criterion { name: "seconds".into(), direction: Direction::Minimize },
    ];
    #[rustfmt::skip]
    let values = vec![
        // rosenbrock: SGD, MOM, ADAM
        0.71, 30.0,   0.80, 28.0,   0.93, 41.0,
        // sphere: ADAM is best on both criteria
        0.90, 12.0,   0.91, 11.0,   0.99, 9.0,
        // plateau: every optimizer scores the same
        0.50, 10.0,   0.50, 10.0,   0.50, 10.0,
    ];
    let table = CriteriaTable::new(
        universe.clone(),
        vec!["rosenbrock".into(), "sphere".into(), "plateau".into()],
        criteria,
        values,
    )?;

    for function in table.functions() {
        match poset_from_function(&table, function, TiePolicy::DropFunction)? {
            FunctionOutcome::Poset(p) => {
                let pairs: Vec<String> = p
                    .pairs()
                    .map(|(i, j)| format!("{} < {}", universe.label(i), universe.label(j)))
                    .collect();
                println!("{function}: {}", if pairs.is_empty() { "antichain".into() } else { pairs.join(", ") });
            }
            FunctionOutcome::Dropped(tie) => println!("{function}: dropped, tied pairs {:?}", tie.tied_pairs),
        }
    }

    match sample_from_suite(&table, TiePolicy::Error) {
        Ok(_) => println!("no ties"),
        Err(e) => println!("with --ties error: {e}"),
    }
    let (sample, dropped) = sample_from_suite(&table, TiePolicy::DropFunction)?;
    println!("with --ties drop: {} unique posets, {} dropped", sample.unique_posets().len(), dropped.len());
    Ok(())
}
