//! Long-format benchmark CSV.
//!
//! Header: `test_function,optimizer,criterion,direction,value`, one row per
//! (test function, optimizer, criterion) cell. Functions, optimizers and
//! criteria are indexed in lexicographic order of their names, so the
//! parsed table does not depend on row order.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::dominance::{Criterion, CriteriaTable, Direction, DominanceError};
use crate::poset::{PosetError, Universe};

pub const HEADER: [&str; 5] = ["test_function", "optimizer", "criterion", "direction", "value"];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("input is not valid UTF-8")]
    NotUtf8,
    #[error("expected header `test_function,optimizer,criterion,direction,value`, found `{0}`")]
    BadHeader(String),
    #[error("line {line}: {message}")]
    BadRow { line: u64, message: String },
    #[error("line {line}: {value:?} is not a finite number")]
    BadNumber { line: u64, value: String },
    #[error("line {line}: direction must be `min` or `max`, found {value:?}")]
    BadDirection { line: u64, value: String },
    #[error("criterion {0:?} is tagged both `min` and `max`")]
    InconsistentDirection(String),
    #[error("duplicate cell ({function}, {optimizer}, {criterion})")]
    DuplicateCell {
        function: String,
        optimizer: String,
        criterion: String,
    },
    #[error("missing cell ({function}, {optimizer}, {criterion})")]
    MissingCell {
        function: String,
        optimizer: String,
        criterion: String,
    },
    #[error("no data rows")]
    Empty,
    #[error(transparent)]
    Table(#[from] DominanceError),
    #[error(transparent)]
    Universe(#[from] PosetError),
}

/// A parsed suite plus where it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteDocument {
    pub table: CriteriaTable,
    pub source: Option<String>,
    pub row_count: usize,
}

pub fn parse_suite_csv(bytes: &[u8]) -> Result<SuiteDocument, ParseError> {
    let text = std::str::from_utf8(bytes).map_err(|_| ParseError::NotUtf8)?;
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());

    let header = reader
        .headers()
        .map_err(|e| ParseError::BadHeader(e.to_string()))?
        .clone();
    if header.iter().ne(HEADER) {
        return Err(ParseError::BadHeader(header.iter().collect::<Vec<_>>().join(",")));
    }

    let mut functions = BTreeSet::new();
    let mut optimizers = BTreeSet::new();
    let mut directions: BTreeMap<String, Direction> = BTreeMap::new();
    let mut cells: BTreeMap<(String, String, String), f64> = BTreeMap::new();
    let mut row_count = 0;

    for record in reader.records() {
        let record = record.map_err(|e| ParseError::BadRow {
            line: e.position().map_or(0, |p| p.line()),
            message: e.to_string(),
        })?;
        let line = record.position().map_or(0, |p| p.line());
        row_count += 1;
        for (field, name) in record.iter().zip(HEADER).take(3) {
            if field.is_empty() {
                return Err(ParseError::BadRow {
                    line,
                    message: format!("empty {name}"),
                });
            }
        }
        let direction = match &record[3] {
            "min" => Direction::Minimize,
            "max" => Direction::Maximize,
            other => {
                return Err(ParseError::BadDirection {
                    line,
                    value: other.to_string(),
                })
            }
        };
        let value: f64 = record[4]
            .parse()
            .ok()
            .filter(|v: &f64| v.is_finite())
            .ok_or_else(|| ParseError::BadNumber {
                line,
                value: record[4].to_string(),
            })?;

        if *directions.entry(record[2].to_string()).or_insert(direction) != direction {
            return Err(ParseError::InconsistentDirection(record[2].to_string()));
        }
        functions.insert(record[0].to_string());
        optimizers.insert(record[1].to_string());
        let key = (record[0].to_string(), record[1].to_string(), record[2].to_string());
        if cells.insert(key, value).is_some() {
            return Err(ParseError::DuplicateCell {
                function: record[0].to_string(),
                optimizer: record[1].to_string(),
                criterion: record[2].to_string(),
            });
        }
    }
    if row_count == 0 {
        return Err(ParseError::Empty);
    }

    let mut values = Vec::with_capacity(functions.len() * optimizers.len() * directions.len());
    for f in &functions {
        for o in &optimizers {
            for c in directions.keys() {
                let key = (f.clone(), o.clone(), c.clone());
                let v = cells.get(&key).ok_or_else(|| ParseError::MissingCell {
                    function: key.0.clone(),
                    optimizer: key.1.clone(),
                    criterion: key.2.clone(),
                })?;
                values.push(*v);
            }
        }
    }
    let criteria = directions
        .into_iter()
        .map(|(name, direction)| Criterion { name, direction })
        .collect();
    let table = CriteriaTable::new(
        Universe::new(optimizers)?,
        functions.into_iter().collect(),
        criteria,
        values,
    )?;
    Ok(SuiteDocument {
        table,
        source: None,
        row_count,
    })
}

/// Canonical CSV: rows sorted by (function, optimizer, criterion) name.
pub fn write_suite_csv(table: &CriteriaTable) -> String {
    let sorted = |names: Vec<&str>| {
        let mut order: Vec<usize> = (0..names.len()).collect();
        order.sort_by_key(|&k| names[k]);
        order
    };
    let functions = sorted(table.functions().iter().map(String::as_str).collect());
    let optimizers = sorted(table.universe().labels().iter().map(String::as_str).collect());
    let criteria = sorted(table.criteria().iter().map(|c| c.name.as_str()).collect());

    let mut writer = csv::WriterBuilder::new().from_writer(Vec::new());
    writer.write_record(HEADER).expect("in-memory write");
    for &f in &functions {
        for &o in &optimizers {
            for &k in &criteria {
                let criterion = &table.criteria()[k];
                let value = table.value(f, o, k).to_string();
                writer
                    .write_record([
                        table.functions()[f].as_str(),
                        table.universe().label(o),
                        criterion.name.as_str(),
                        criterion.direction.as_str(),
                        value.as_str(),
                    ])
                    .expect("in-memory write");
            }
        }
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 input")
}
