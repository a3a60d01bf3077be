//! Depth of posets that were never observed: a hand-written ranking and
//! the deepest and shallowest posets of the whole space.
//!
//! cargo run --example query_depth

use num_traits::Zero;
use ufgdepth::{depth_profile_over_space, enumerate_ufg, ufg_depth, Poset, PosetSample, Universe};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let universe = Universe::new(["SGD", "MOM", "ADAM", "RMS"])?;
    let observed = [
        (Poset::from_pairs_closed(4, [(0, 1), (1, 2)])?, 3),
        (Poset::from_pairs_closed(4, [(0, 2), (3, 2)])?, 2),
        (Poset::from_pairs_closed(4, [(0, 1), (3, 1), (3, 2)])?, 1),
        (Poset::from_pairs_closed(4, [(1, 0), (2, 0)])?, 1),
    ];
    let sample = PosetSample::from_counts(universe.clone(), &observed)?;
    let family = enumerate_ufg(&sample, None);
    println!("{} ufg sets", family.len());

    // SGD below MOM and ADAM, RMS unrelated
    let query = Poset::from_pairs(4, [(0, 1), (0, 2)])?;
    println!("depth of the query: {}", ufg_depth(&sample, &family, &query)?);

    let mut profile = depth_profile_over_space(&sample)?;
    profile.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    let describe = |p: &Poset| -> String {
        let pairs: Vec<String> = p
            .transitive_reduction()
            .pairs()
            .map(|(i, j)| format!("{}<{}", universe.label(i), universe.label(j)))
            .collect();
        format!("{{{}}}", pairs.join(", "))
    };
    println!("deepest of {} posets:", profile.len());
    for (p, d) in profile.iter().take(3) {
        println!("  {d:>6}  {}", describe(p));
    }
    let zero = profile.iter().filter(|(_, d)| d.is_zero()).count();
    println!("{zero} posets have depth 0");
    Ok(())
}
