//! Three optimizers, three observed posets: the ufg family, its weights
//! and the depth of every observation.
//!
//! cargo run --example worked_example

use ufgdepth::{depth_report, enumerate_ufg, Poset, PosetSample, Universe};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let universe = Universe::new(["SGD", "MOM", "ADAM"])?;
    let (sgd, mom, adam) = (0, 1, 2);

    // (i, j): j outperforms i
    let p1 = Poset::from_pairs(3, [(sgd, mom)])?;
    let p2 = Poset::from_pairs(3, [(sgd, adam)])?;
    let p3 = Poset::from_pairs(3, [(mom, sgd), (mom, adam), (sgd, adam)])?;

    let sample = PosetSample::from_counts(universe, &[(p1, 1), (p2, 1), (p3, 1)])?;
    let family = enumerate_ufg(&sample, None);

    println!("ufg sets:");
    for (set, weight) in family.sets().iter().zip(family.weights()) {
        println!("  {set:?}  weight {weight}");
    }
    if let Some(c) = family.normalizer() {
        println!("normalizer {c}");
    }

    let report = depth_report(&sample, &family)?;
    for (k, d) in report.per_unique_poset.iter().enumerate() {
        println!("depth(p{}) = {d}", k + 1);
    }
    Ok(())
}
