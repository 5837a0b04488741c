#![allow(dead_code)]

use proptest::prelude::*;
use tpbessel::{BidiagonalDecomposition, Matrix, NodeSequence, Rational};

pub fn q(v: i64) -> Rational {
    Rational::from(v)
}

pub fn ratio(p: i64, d: i64) -> Rational {
    Rational::new(p, d).unwrap()
}

pub fn mat(rows: &[&[i64]]) -> Matrix<Rational> {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&v| q(v)).collect())
            .collect(),
    )
    .unwrap()
}

/// Characteristic polynomial `det(xI - A)`, ascending coefficients, by Faddeev-LeVerrier.
pub fn charpoly(a: &Matrix<Rational>) -> Vec<Rational> {
    let n = a.rows();
    let mut c = vec![Rational::zero(); n + 1];
    c[n] = Rational::one();
    let mut m = Matrix::from_fn(n, n, |_, _| Rational::zero());
    for k in 1..=n {
        let mut next = a.matmul(&m).unwrap();
        for i in 0..n {
            next[(i, i)] = &next[(i, i)] + &c[n - k + 1];
        }
        let am = a.matmul(&next).unwrap();
        let trace = (0..n).fold(Rational::zero(), |acc, i| acc + &am[(i, i)]);
        c[n - k] = -(trace / Rational::from(k as i64));
        m = next;
    }
    c
}

fn eval(p: &[Rational], x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.len() > 1 && p.last().unwrap().is_zero() {
        p.pop();
    }
    p
}

fn derivative(p: &[Rational]) -> Vec<Rational> {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * &Rational::from(k as i64))
            .collect(),
    )
}

fn remainder(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead = b.last().unwrap().clone();
    while r.len() > db && !(r.len() == 1 && r[0].is_zero()) {
        let f = r.last().unwrap() / &lead;
        let shift = r.len() - 1 - db;
        for (k, bk) in b.iter().enumerate() {
            r[shift + k] = &r[shift + k] - &(&f * bk);
        }
        r.pop();
        if r.is_empty() {
            return vec![Rational::zero()];
        }
        r = trim(r);
        if r.len() <= db {
            break;
        }
    }
    trim(r)
}

fn sturm_chain(p: &[Rational]) -> Vec<Vec<Rational>> {
    let mut chain = vec![trim(p.to_vec()), derivative(p)];
    loop {
        let k = chain.len();
        let r = remainder(&chain[k - 2], &chain[k - 1]);
        if r.len() == 1 && r[0].is_zero() {
            break;
        }
        chain.push(r.into_iter().map(|c| -c).collect());
        if chain.last().unwrap().len() == 1 {
            break;
        }
    }
    chain
}

fn sign_changes(chain: &[Vec<Rational>], x: &Rational) -> usize {
    let signs: Vec<i32> = chain
        .iter()
        .map(|p| eval(p, x).signum())
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Positive real roots of `p`, descending, each isolated by Sturm bisection
/// to relative width `2^-70` and rounded to double.
pub fn positive_roots(p: &[Rational]) -> Vec<f64> {
    let lead = p.last().unwrap().abs();
    let bound = p
        .iter()
        .fold(Rational::one(), |acc, c| acc + &(c.abs() / &lead));
    let chain = sturm_chain(p);
    let tiny = ratio(1, 1 << 62) * ratio(1, 1 << 8);
    let mut roots = Vec::new();
    let mut stack = vec![(Rational::zero(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let count = sign_changes(&chain, &lo) - sign_changes(&chain, &hi);
        if count == 0 {
            continue;
        }
        if count == 1 && (&hi - &lo) <= &hi * &tiny {
            roots.push(((&lo + &hi) * ratio(1, 2)).to_f64().unwrap());
            continue;
        }
        let mid = (&lo + &hi) * ratio(1, 2);
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    roots.sort_by(|a, b| b.partial_cmp(a).unwrap());
    roots
}

pub fn max_relerr(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| ((x - y) / y).abs())
        .fold(0.0, f64::max)
}

/// Strictly increasing positive rational nodes.
pub fn nodes_strategy(n: usize) -> impl Strategy<Value = NodeSequence> {
    (
        prop::collection::vec((1i64..6, 1i64..5), n),
        1i64..4,
        1i64..4,
    )
        .prop_map(|(steps, p0, d0)| {
            let mut t = ratio(p0, d0);
            let mut out = Vec::new();
            for (num, den) in steps {
                out.push(t.clone());
                t = t + ratio(num, den);
            }
            NodeSequence::new(out).unwrap()
        })
}

/// Packed decompositions satisfying the sign and zero-pattern conditions:
/// each lower column and each upper row is a positive prefix followed by zeros.
pub fn valid_bd_strategy(max_n: usize) -> impl Strategy<Value = BidiagonalDecomposition> {
    (1..=max_n).prop_flat_map(|n| {
        (
            prop::collection::vec((1i64..9, 1i64..4), n * n),
            prop::collection::vec(0..=n, n),
            prop::collection::vec(0..=n, n),
        )
            .prop_map(move |(vals, lower_len, upper_len)| {
                let packed = Matrix::from_fn(n, n, |i, j| {
                    let (p, d) = vals[i * n + j];
                    let keep = match i.cmp(&j) {
                        std::cmp::Ordering::Equal => true,
                        std::cmp::Ordering::Greater => i - j <= lower_len[j],
                        std::cmp::Ordering::Less => j - i <= upper_len[i],
                    };
                    if keep {
                        ratio(p, d)
                    } else {
                        Rational::zero()
                    }
                });
                BidiagonalDecomposition::from_packed(packed).unwrap()
            })
    })
}
