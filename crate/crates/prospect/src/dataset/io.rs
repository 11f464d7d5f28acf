//! CSV ingestion and export.
//!
//! Files are comma-separated UTF-8 with a header row and "." as the decimal
//! point. Qualitative cells are category tokens, mapped to integer codes
//! 0..k-1 in order of first appearance. The class column accepts the tokens
//! `deposit` / `barren` or the literals `+1` / `1` / `-1`.

use std::collections::HashMap;
use std::path::Path;

use crate::dataset::{AttributeKind, AttributeSchema, Dataset, Label, Pattern};
use crate::error::{Error, Result};

fn parse_label(cell: &str) -> Option<Label> {
    match cell.trim() {
        "deposit" | "+1" | "1" => Some(Label::Plus),
        "barren" | "-1" => Some(Label::Minus),
        _ => None,
    }
}

/// Reads one pattern per data row, encoding qualitative categories and
/// parsing labels from the schema's target column when the file has it.
pub fn load_csv(path: impl AsRef<Path>, schema: &AttributeSchema) -> Result<Dataset> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_path(path.as_ref())?;

    let headers = reader.headers()?.clone();
    let column_of: HashMap<&str, usize> = headers
        .iter()
        .enumerate()
        .map(|(i, name)| (name, i))
        .collect();

    let mut feature_cols = Vec::with_capacity(schema.len());
    for attr in schema.attributes() {
        match column_of.get(attr.name.as_str()) {
            Some(&i) => feature_cols.push(i),
            None => {
                return Err(Error::Parse {
                    row: 1,
                    column: attr.name.clone(),
                    message: "column missing from header".into(),
                })
            }
        }
    }
    let target_col = schema
        .target_column()
        .and_then(|t| column_of.get(t).copied());

    // per qualitative attribute: category token -> code
    let mut codes: Vec<HashMap<String, f64>> =
        schema.attributes().iter().map(|_| HashMap::new()).collect();

    let mut patterns = Vec::new();
    for (data_idx, record) in reader.records().enumerate() {
        let record = record?;
        let row = data_idx + 2; // 1-based CSV line, header is line 1
        let mut values = Vec::with_capacity(schema.len());
        for (attr_idx, attr) in schema.attributes().iter().enumerate() {
            let cell = record.get(feature_cols[attr_idx]).ok_or_else(|| Error::Parse {
                row,
                column: attr.name.clone(),
                message: "row has too few fields".into(),
            })?;
            let value = match attr.kind {
                AttributeKind::Quantitative => {
                    let v: f64 = cell.trim().parse().map_err(|_| Error::Parse {
                        row,
                        column: attr.name.clone(),
                        message: format!("expected a number, got `{cell}`"),
                    })?;
                    if !v.is_finite() {
                        return Err(Error::Parse {
                            row,
                            column: attr.name.clone(),
                            message: format!("non-finite value `{cell}`"),
                        });
                    }
                    v
                }
                AttributeKind::Qualitative => {
                    let map = &mut codes[attr_idx];
                    let next = map.len() as f64;
                    *map.entry(cell.trim().to_string()).or_insert(next)
                }
            };
            values.push(value);
        }
        let label = match target_col {
            Some(t) => {
                let cell = record.get(t).ok_or_else(|| Error::Parse {
                    row,
                    column: schema.target_column().unwrap().to_string(),
                    message: "row has too few fields".into(),
                })?;
                Some(parse_label(cell).ok_or_else(|| Error::Parse {
                    row,
                    column: schema.target_column().unwrap().to_string(),
                    message: format!("unknown label token `{cell}`"),
                })?)
            }
            None => None,
        };
        patterns.push(Pattern { values, label });
    }
    Dataset::new(schema.clone(), patterns)
}

/// Writes the dataset back out. Labeled patterns get the schema's target
/// column (default name `class`) with `deposit` / `barren` tokens.
pub fn write_csv(data: &Dataset, path: impl AsRef<Path>) -> Result<()> {
    let mut writer = csv::Writer::from_path(path.as_ref())?;
    let labeled = data.is_fully_labeled() && !data.is_empty();
    let mut header: Vec<String> = data
        .schema()
        .attributes()
        .iter()
        .map(|a| a.name.clone())
        .collect();
    if labeled {
        header.push(data.schema().target_column().unwrap_or("class").to_string());
    }
    writer.write_record(&header)?;
    for p in data.patterns() {
        let mut record: Vec<String> = p.values.iter().map(|v| format!("{v}")).collect();
        if labeled {
            record.push(
                match p.label.expect("checked labeled") {
                    Label::Plus => "deposit",
                    Label::Minus => "barren",
                }
                .to_string(),
            );
        }
        writer.write_record(&record)?;
    }
    writer.flush()?;
    Ok(())
}
