//! JSON depth report.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::{json, Map, Value};

use crate::depth::DepthReport;
use crate::dominance::{TiePolicy, TieOutcome};

const SIGNIFICANT_DIGITS: usize = 17;

/// `"2/3"`, or just the numerator when the value is an integer.
pub fn rational_string(r: &BigRational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Positional decimal with 17 significant digits, rounded half away from
/// zero from the exact value, trailing zeros removed.
pub fn decimal_string(r: &BigRational) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let negative = r.is_negative();
    let r = r.abs();
    let ten = BigInt::from(10);

    // exponent e with 10^e <= r < 10^(e+1)
    let mut e: i64 = r.numer().to_string().len() as i64 - r.denom().to_string().len() as i64;
    let pow = |k: i64| -> BigRational {
        if k >= 0 {
            BigRational::from_integer(ten.pow(k as u32))
        } else {
            BigRational::new(BigInt::from(1), ten.pow((-k) as u32))
        }
    };
    while r < pow(e) {
        e -= 1;
    }
    while r >= pow(e + 1) {
        e += 1;
    }

    // digits = round(r * 10^(16 - e))
    let shift = SIGNIFICANT_DIGITS as i64 - 1 - e;
    let scaled = &r * pow(shift);
    let (q, rem) = scaled.numer().div_rem(scaled.denom());
    let mut digits = if BigInt::from(2) * rem >= *scaled.denom() { q + 1 } else { q };
    let mut shift = shift;
    if digits.to_string().len() > SIGNIFICANT_DIGITS {
        digits /= &ten;
        shift -= 1;
    }
    let mut s = digits.to_string();
    let out = if shift <= 0 {
        s.push_str(&"0".repeat((-shift) as usize));
        s
    } else {
        let shift = shift as usize;
        if s.len() <= shift {
            s = format!("{}{}", "0".repeat(shift - s.len() + 1), s);
        }
        let (int, frac) = s.split_at(s.len() - shift);
        let frac = frac.trim_end_matches('0');
        if frac.is_empty() {
            int.to_string()
        } else {
            format!("{int}.{frac}")
        }
    };
    match (negative, digits.sign()) {
        (true, Sign::Plus) => format!("-{out}"),
        _ => out,
    }
}

fn exact(value: &BigRational) -> Value {
    json!({ "exact": rational_string(value), "decimal": decimal_string(value) })
}

fn pair_labels(report: &DepthReport, pairs: impl Iterator<Item = (usize, usize)>) -> Value {
    pairs
        .map(|(i, j)| json!([report.universe.label(i), report.universe.label(j)]))
        .collect()
}

/// Run settings echoed into the report.
#[derive(Debug, Clone, Copy)]
pub struct ReportContext<'a> {
    pub tie_policy: TiePolicy,
    pub dropped: &'a [TieOutcome],
    pub max_ufg_size: Option<usize>,
}

pub fn report_value(report: &DepthReport, ctx: &ReportContext<'_>) -> Value {
    let group_of = |k: usize| {
        report
            .duplicate_groups
            .iter()
            .position(|g| g.poset_index == k)
    };
    let functions: Vec<Value> = report
        .per_function
        .iter()
        .map(|row| {
            json!({
                "function": row.function,
                "poset": row.poset_index,
                "depth": exact(&row.depth),
                "rank": row.rank,
                "duplicate_group": group_of(row.poset_index),
            })
        })
        .collect();
    let posets: Vec<Value> = report
        .unique_posets
        .iter()
        .enumerate()
        .map(|(k, p)| {
            let mut names: Vec<&str> = report
                .per_function
                .iter()
                .filter(|r| r.poset_index == k)
                .map(|r| r.function.as_str())
                .collect();
            names.sort();
            json!({
                "index": k,
                "depth": exact(&report.per_unique_poset[k]),
                "multiplicity": report.multiplicities[k],
                "functions": names,
                "pairs": pair_labels(report, p.pairs()),
                "hasse_edges": pair_labels(report, p.transitive_reduction().pairs()),
            })
        })
        .collect();
    let groups: Vec<Value> = report
        .duplicate_groups
        .iter()
        .enumerate()
        .map(|(id, g)| json!({ "id": id, "poset": g.poset_index, "functions": g.functions }))
        .collect();
    let dropped: Vec<Value> = ctx
        .dropped
        .iter()
        .map(|t| {
            json!({
                "function": t.function,
                "tied_pairs": t.tied_pairs.iter().map(|(a, b)| json!([a, b])).collect::<Vec<_>>(),
            })
        })
        .collect();

    let mut doc = Map::new();
    doc.insert("tool".into(), json!(env!("CARGO_PKG_NAME")));
    doc.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    doc.insert("pair_convention".into(), json!("[a, b] means b outperforms a"));
    doc.insert("tie_policy".into(), json!(ctx.tie_policy.as_str()));
    doc.insert("max_ufg_size".into(), json!(ctx.max_ufg_size));
    doc.insert("dropped_functions".into(), Value::Array(dropped));
    doc.insert("optimizers".into(), json!(report.universe.labels()));
    doc.insert("functions".into(), Value::Array(functions));
    doc.insert("posets".into(), Value::Array(posets));
    doc.insert("duplicate_groups".into(), Value::Array(groups));
    doc.insert("family_size".into(), json!(report.family_size));
    doc.insert("truncated".into(), json!(report.truncated));
    doc.insert(
        "normalizer".into(),
        report.normalizer.as_ref().map_or(Value::Null, exact),
    );
    doc.insert(
        "dispersion".into(),
        json!({
            "min": exact(&report.dispersion.min),
            "max": exact(&report.dispersion.max),
            "range": exact(&report.dispersion.range),
        }),
    );
    doc.insert("deepest_posets".into(), json!(report.deepest()));
    doc.insert("shallowest_posets".into(), json!(report.shallowest()));
    Value::Object(doc)
}

/// Key-sorted, pretty-printed, newline-terminated JSON.
pub fn write_report_json(report: &DepthReport, ctx: &ReportContext<'_>) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(&report_value(report, ctx)).expect("JSON values serialize");
    out.push(b'\n');
    out
}
