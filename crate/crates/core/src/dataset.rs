//! Comma-separated ±1 dataset files.
//!
//! Grammar: the first line holds column labels; every following line holds
//! one value per column, each literally `1` or `-1`. Columns become labeled
//! datasets of equal length. Errors carry 1-based physical line and column
//! numbers (the header is line 1).

use std::fs;
use std::path::Path;

use thiserror::Error;

use crate::bell::OutcomeDataset;

#[derive(Debug, Error)]
pub enum DatasetError {
    #[error("cannot read '{path}': {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("input is empty; expected a header line of column labels")]
    MissingHeader,
    #[error("header column {column} has an empty label")]
    EmptyLabel { column: usize },
    #[error("input has a header but no data rows")]
    EmptyBody,
    #[error("line {line}: expected {expected} values, found {found}")]
    RaggedRow {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}, column {column}: token '{token}' is not \"1\" or \"-1\"")]
    BadToken {
        line: usize,
        column: usize,
        token: String,
    },
}

/// Parses CSV text into labeled ±1 datasets.
pub fn parse_datasets(text: &str) -> Result<Vec<OutcomeDataset>, DatasetError> {
    let mut lines = text.lines();
    let header = lines.next().ok_or(DatasetError::MissingHeader)?;
    let labels: Vec<&str> = header.split(',').collect();
    for (i, label) in labels.iter().enumerate() {
        if label.trim().is_empty() {
            return Err(DatasetError::EmptyLabel { column: i + 1 });
        }
    }

    let mut columns: Vec<Vec<i8>> = vec![Vec::new(); labels.len()];
    for (line_no, line) in (2usize..).zip(lines) {
        let tokens: Vec<&str> = line.split(',').collect();
        if tokens.len() != labels.len() {
            return Err(DatasetError::RaggedRow {
                line: line_no,
                expected: labels.len(),
                found: tokens.len(),
            });
        }
        for (col, token) in tokens.iter().enumerate() {
            let value = match *token {
                "1" => 1i8,
                "-1" => -1,
                other => {
                    return Err(DatasetError::BadToken {
                        line: line_no,
                        column: col + 1,
                        token: other.to_string(),
                    })
                }
            };
            columns[col].push(value);
        }
    }

    if columns.first().is_none_or(|c| c.is_empty()) {
        return Err(DatasetError::EmptyBody);
    }

    Ok(labels
        .into_iter()
        .zip(columns)
        .map(|(label, values)| {
            OutcomeDataset::new(label.trim(), values).expect("validated during parse")
        })
        .collect())
}

/// Reads and parses a dataset file.
pub fn load_datasets(path: &Path) -> Result<Vec<OutcomeDataset>, DatasetError> {
    let text = fs::read_to_string(path).map_err(|source| DatasetError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_datasets(&text)
}

/// Renders equal-length datasets back to the CSV grammar; a re-parse yields
/// identical columns.
pub fn render_datasets(datasets: &[OutcomeDataset]) -> String {
    assert!(!datasets.is_empty(), "nothing to render");
    let len = datasets[0].len();
    for d in datasets {
        assert_eq!(d.len(), len, "datasets must share a common index");
        assert!(
            !d.label().contains(',') && !d.label().contains('\n'),
            "label '{}' would corrupt the CSV grammar",
            d.label()
        );
    }
    let mut out = String::new();
    let labels: Vec<&str> = datasets.iter().map(|d| d.label()).collect();
    out.push_str(&labels.join(","));
    out.push('\n');
    for row in 0..len {
        let cells: Vec<&str> = datasets
            .iter()
            .map(|d| if d.values()[row] == 1 { "1" } else { "-1" })
            .collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}
