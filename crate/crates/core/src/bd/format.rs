//! BDF v1: a header line `BDF1 n` followed by `n` lines of `n` rational
//! tokens holding the packed decomposition row by row.

use super::BidiagonalDecomposition;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Rational;

pub fn format_bdf(bd: &BidiagonalDecomposition) -> String {
    format!("BDF1 {}\n{}", bd.n(), bd.packed())
}

/// Parses the packed array. The result is not validated.
pub fn parse_bdf(text: &str) -> Result<BidiagonalDecomposition> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty BDF file".into()))?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["BDF1", n] => n.parse::<usize>().ok().filter(|&n| n > 0),
        _ => None,
    }
    .ok_or_else(|| Error::Parse(format!("bad BDF header `{header}`, expected `BDF1 n`")))?;
    let mut data = Vec::with_capacity(n * n);
    let mut rows = 0;
    for line in lines {
        rows += 1;
        if rows > n {
            return Err(Error::Parse(format!("BDF has more than {n} rows")));
        }
        let row = line
            .split_whitespace()
            .map(str::parse::<Rational>)
            .collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(Error::Parse(format!(
                "BDF row {rows} has {} tokens, expected {n}",
                row.len()
            )));
        }
        data.extend(row);
    }
    if rows != n {
        return Err(Error::Parse(format!("BDF has {rows} rows, expected {n}")));
    }
    BidiagonalDecomposition::from_packed(Matrix::new(n, n, data)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let text = "BDF1 2\n1 2\n1 1\n";
        let bd = parse_bdf(text).unwrap();
        assert_eq!(format_bdf(&bd), text);
        assert_eq!(
            parse_bdf("BDF1 1\n 3/6 \n").unwrap().diag(0),
            &"1/2".parse::<Rational>().unwrap()
        );
    }

    #[test]
    fn malformed() {
        for bad in [
            "",
            "BDF2 1\n1",
            "BDF1 0\n",
            "BDF1 2\n1 2\n",
            "BDF1 1\n1 2",
            "BDF1 1\n1\n1",
            "BDF1 1\nz",
        ] {
            assert!(parse_bdf(bad).is_err(), "{bad:?}");
        }
    }
}
