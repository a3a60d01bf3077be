//! Writes a Graphviz Hasse diagram for every unique poset of a suite.
//!
//! cargo run --example hasse_diagrams -- [suite.csv] [out-dir]
//! dot -Tsvg out-dir/poset_000.dot > p0.svg

use std::path::PathBuf;

use ufgdepth::io::{parse_suite_csv, write_atomic, write_hasse_dot};
use ufgdepth::{sample_from_suite, TiePolicy};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args_os().skip(1).map(PathBuf::from);
    let input = args
        .next()
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/worked_suite.csv")));
    let out_dir = args.next().unwrap_or_else(|| std::env::temp_dir().join("ufgdepth-hasse"));
    std::fs::create_dir_all(&out_dir)?;

    let doc = parse_suite_csv(&std::fs::read(&input)?)?;
    let (sample, _) = sample_from_suite(&doc.table, TiePolicy::DropFunction)?;
    for (k, poset) in sample.unique_posets().iter().enumerate() {
        let name = format!("poset_{k:03}");
        let dot = write_hasse_dot(poset, sample.universe(), &name);
        let path = out_dir.join(format!("{name}.dot"));
        write_atomic(&path, dot.as_bytes())?;
        println!("{} ({} cover edges, functions {:?})", path.display(), poset.transitive_reduction().pair_count(), sample.provenance()[k]);
    }
    Ok(())
}
