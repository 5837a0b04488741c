//! Plain-text matrix format: a header line `n_rows n_cols`, then one row per
//! line of whitespace-separated rational tokens.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Rational;

pub fn parse_matrix(text: &str) -> Result<Matrix<Rational>> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty matrix file".into()))?;
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad header `{header}`")))
        })
        .collect::<Result<_>>()?;
    let [rows, cols] = dims[..] else {
        return Err(Error::Parse(format!(
            "header `{header}` must be `n_rows n_cols`"
        )));
    };
    let mut data = Vec::with_capacity(rows * cols);
    for (i, line) in lines.enumerate() {
        if i >= rows {
            return Err(Error::Parse(format!("more than {rows} rows")));
        }
        let row = line
            .split_whitespace()
            .map(str::parse::<Rational>)
            .collect::<Result<Vec<_>>>()?;
        if row.len() != cols {
            return Err(Error::Parse(format!(
                "row {} has {} entries, expected {cols}",
                i + 1,
                row.len()
            )));
        }
        data.extend(row);
    }
    if data.len() != rows * cols {
        return Err(Error::Parse(format!("expected {rows} rows")));
    }
    Matrix::new(rows, cols, data).map_err(|e| Error::Parse(e.to_string()))
}

pub fn format_matrix(m: &Matrix<Rational>) -> String {
    format!("{} {}\n{}", m.rows(), m.cols(), m)
}
