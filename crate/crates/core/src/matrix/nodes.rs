use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Rational;

/// Strictly increasing positive collocation nodes, stored exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeSequence(Vec<Rational>);

impl NodeSequence {
    pub fn new(nodes: Vec<Rational>) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::InvalidNodes("no nodes given".into()));
        }
        if let Some(t) = nodes.iter().find(|t| !t.is_positive()) {
            return Err(Error::InvalidNodes(format!("node {t} is not positive")));
        }
        if let Some(w) = nodes.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidNodes(format!(
                "nodes must be strictly increasing, found {} before {}",
                w[0], w[1]
            )));
        }
        Ok(NodeSequence(nodes))
    }

    /// The integer nodes `1, 2, ..., n`.
    pub fn integers(n: usize) -> Result<Self> {
        NodeSequence::new((1..=n as i64).map(Rational::from).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }
}

/// Comma-separated rational tokens, e.g. `1,3/2,2`.
impl FromStr for NodeSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let nodes = s
            .split(',')
            .map(|tok| tok.parse::<Rational>())
            .collect::<Result<Vec<_>>>()
            .map_err(|e| Error::InvalidNodes(format!("cannot parse `{s}`: {e}")))?;
        NodeSequence::new(nodes)
    }
}

impl fmt::Display for NodeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", toks.join(","))
    }
}

/// `V[i][j] = t_i^j`.
pub fn vandermonde_matrix(nodes: &NodeSequence) -> Matrix<Rational> {
    let n = nodes.len();
    Matrix::from_fn(n, n, |i, j| nodes.as_slice()[i].pow(j as u32))
}
