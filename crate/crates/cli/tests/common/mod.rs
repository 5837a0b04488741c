#![allow(dead_code)]

use tpbessel::{Matrix, Rational};

pub fn ratio(p: i64, d: i64) -> Rational {
    Rational::new(p, d).unwrap()
}

/// Gauss-Jordan with first-nonzero pivoting on `[A | B]`.
pub fn gauss_jordan(a: &Matrix<Rational>, b: &Matrix<Rational>) -> Matrix<Rational> {
    let n = a.rows();
    let m = b.cols();
    let mut w: Vec<Vec<Rational>> = (0..n)
        .map(|i| a.row(i).iter().chain(b.row(i)).cloned().collect())
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !w[r][c].is_zero()).expect("nonsingular");
        w.swap(c, p);
        let inv = w[c][c].recip().unwrap();
        for v in w[c].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..n {
            if r != c && !w[r][c].is_zero() {
                let f = w[r][c].clone();
                for k in 0..n + m {
                    let t = &f * &w[c][k];
                    w[r][k] = &w[r][k] - &t;
                }
            }
        }
    }
    Matrix::from_fn(n, m, |i, j| w[i][n + j].clone())
}

pub fn oracle_inverse(a: &Matrix<Rational>) -> Matrix<Rational> {
    gauss_jordan(
        a,
        &Matrix::from_fn(a.rows(), a.rows(), |i, j| {
            if i == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        }),
    )
}

pub fn oracle_solve(a: &Matrix<Rational>, b: &[Rational]) -> Vec<Rational> {
    gauss_jordan(a, &Matrix::from_fn(b.len(), 1, |i, _| b[i].clone()))
        .as_slice()
        .to_vec()
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

pub fn eval(p: &[Rational], x: &Rational) -> Rational {
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
    while r.len() > db {
        let f = r.last().unwrap() / &lead;
        let shift = r.len() - 1 - db;
        for (k, bk) in b.iter().enumerate() {
            r[shift + k] = &r[shift + k] - &(&f * bk);
        }
        r.pop();
        if r.is_empty() {
            return vec![Rational::zero()];
        }
    }
    trim(r)
}

fn sturm_chain(p: &[Rational]) -> Vec<Vec<Rational>> {
    let mut chain = vec![trim(p.to_vec()), derivative(p)];
    while chain.last().unwrap().len() > 1 {
        let k = chain.len();
        let r = remainder(&chain[k - 2], &chain[k - 1]);
        if r.len() == 1 && r[0].is_zero() {
            break;
        }
        chain.push(r.into_iter().map(|c| -c).collect());
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

/// Positive real roots, descending, isolated by Sturm bisection to relative width `2^-70`.
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

/// Whether `p` takes opposite signs at `lo` and `hi`.
pub fn changes_sign(p: &[Rational], lo: f64, hi: f64) -> bool {
    let lo = Rational::from_f64(lo).unwrap();
    let hi = Rational::from_f64(hi).unwrap();
    eval(p, &lo).signum() * eval(p, &hi).signum() < 0
}

pub fn max_relerr(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| ((x - y) / y).abs())
        .fold(0.0, f64::max)
}
