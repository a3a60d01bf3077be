//! Cross-checks the fast enumeration against brute force on random
//! four-item samples.
//!
//! cargo run --release --example oracle_audit -- [instances]

use ufgdepth::{brute_force_ufg, depth_profile_over_space, enumerate_ufg, ufg_depth, Poset, PosetSample, Universe};

/// Small xorshift so the audit is reproducible without extra dependencies.
struct XorShift(u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }
}

fn random_poset(rng: &mut XorShift, n: usize) -> Poset {
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, (rng.next() % (i as u64 + 1)) as usize);
    }
    let pairs = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|_| rng.next() & 1 == 0)
        .map(|(a, b)| (order[a], order[b]))
        .collect::<Vec<_>>();
    Poset::from_pairs_closed(n, pairs).expect("pairs follow a linear order")
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let instances: usize = std::env::args().nth(1).map_or(Ok(20), |s| s.parse())?;
    let universe = Universe::new(["a", "b", "c", "d"])?;
    let mut rng = XorShift(0x9e37_79b9_7f4a_7c15);
    let mut depths = 0;
    for i in 0..instances {
        let mut counts: Vec<(Poset, u64)> = Vec::new();
        let unique = 2 + (rng.next() % 4) as usize;
        while counts.len() < unique {
            let p = random_poset(&mut rng, 4);
            if counts.iter().all(|(q, _)| *q != p) {
                counts.push((p, 1 + rng.next() % 3));
            }
        }
        let sample = PosetSample::from_counts(universe.clone(), &counts)?;
        let fast = enumerate_ufg(&sample, None);
        let slow = brute_force_ufg(&sample)?;
        assert_eq!(fast, slow, "instance {i}: ufg families differ");
        for (q, expected) in depth_profile_over_space(&sample)? {
            assert_eq!(ufg_depth(&sample, &fast, &q)?, expected, "instance {i}");
            depths += 1;
        }
        println!("instance {i:>3}: {} posets, {} ufg sets agree", unique, fast.len());
    }
    println!("{instances} instances, {depths} depths identical to brute force");
    Ok(())
}
