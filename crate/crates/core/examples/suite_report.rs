//! CSV in, JSON depth report out.
//!
//! cargo run --example suite_report -- [suite.csv] [report.json]

use std::path::PathBuf;

use ufgdepth::io::{parse_suite_csv, write_atomic, write_report_json, ReportContext};
use ufgdepth::{depth_report, enumerate_ufg, sample_from_suite, TiePolicy};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args_os().skip(1).map(PathBuf::from);
    let input = args
        .next()
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/worked_suite.csv")));
    let output = args.next();

    let doc = parse_suite_csv(&std::fs::read(&input)?)?;
    let (sample, dropped) = sample_from_suite(&doc.table, TiePolicy::DropFunction)?;
    let family = enumerate_ufg(&sample, None);
    let report = depth_report(&sample, &family)?;

    for row in &report.per_function {
        println!("{:>3}  {:<16} {}", row.rank, row.function, row.depth);
    }
    println!("dispersion: min {} max {}", report.dispersion.min, report.dispersion.max);

    let ctx = ReportContext { tie_policy: TiePolicy::DropFunction, dropped: &dropped, max_ufg_size: None };
    let json = write_report_json(&report, &ctx);
    match output {
        Some(path) => write_atomic(&path, &json)?,
        None => print!("{}", String::from_utf8(json)?),
    }
    Ok(())
}
