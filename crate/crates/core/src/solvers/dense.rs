//! Dense eigenvalue and singular value kernels, generic over the working
//! precision: balancing, Householder reduction to Hessenberg form,
//! Francis double-shift QR and one-sided Jacobi.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Real;

/// Maximum QR iterations spent on one eigenvalue before giving up.
const MAX_QR_ITERATIONS: usize = 30;

/// Jacobi sweeps allowed before giving up.
pub const MAX_JACOBI_SWEEPS: usize = 30;

type Grid<T> = Vec<Vec<T>>;

/// Copies into a 1-based square grid; row and column 0 are unused.
fn to_grid<T: Real>(a: &Matrix<T>) -> Grid<T> {
    let n = a.rows();
    let zero = a[(0, 0)].zero_like();
    let mut g = vec![vec![zero; n + 1]; n + 1];
    for i in 0..n {
        for j in 0..n {
            g[i + 1][j + 1] = a[(i, j)].clone();
        }
    }
    g
}

fn sign_of<T: Real>(magnitude: T, sign: &T) -> T {
    let m = magnitude.abs();
    if *sign >= sign.zero_like() {
        m
    } else {
        -m
    }
}

/// Diagonal similarity by powers of two that equalizes row and column norms.
fn balance<T: Real>(a: &mut Grid<T>, n: usize) {
    let zero = a[1][1].zero_like();
    let threshold = a[1][1].lift_f64(0.95);
    let mut done = false;
    while !done {
        done = true;
        for i in 1..=n {
            let mut r = zero.clone();
            let mut c = zero.clone();
            for j in 1..=n {
                if j != i {
                    c = c + a[j][i].abs();
                    r = r + a[i][j].abs();
                }
            }
            if c.is_zero() || r.is_zero() {
                continue;
            }
            let s = c.clone() + r.clone();
            let mut e = 0i64;
            let g = r.mul_pow2(-1);
            while c < g {
                e += 1;
                c = c.mul_pow2(2);
            }
            let g = r.mul_pow2(1);
            while c > g {
                e -= 1;
                c = c.mul_pow2(-2);
            }
            if (c + r).mul_pow2(-e) < threshold.clone() * s {
                done = false;
                for j in 1..=n {
                    a[i][j] = a[i][j].mul_pow2(-e);
                    a[j][i] = a[j][i].mul_pow2(e);
                }
            }
        }
    }
}

/// Householder reduction to upper Hessenberg form.
fn hessenberg<T: Real>(a: &mut Grid<T>, n: usize) {
    let zero = a[1][1].zero_like();
    let two = a[1][1].lift_f64(2.0);
    for k in 1..n.saturating_sub(1) {
        let norm2 = (k + 1..=n).fold(zero.clone(), |acc, i| {
            acc + a[i][k].clone() * a[i][k].clone()
        });
        if norm2.is_zero() {
            continue;
        }
        let alpha = -sign_of(norm2.sqrt(), &a[k + 1][k]);
        let mut v: Vec<T> = (k + 1..=n).map(|i| a[i][k].clone()).collect();
        v[0] = v[0].clone() - alpha.clone();
        let vtv = v
            .iter()
            .fold(zero.clone(), |acc, x| acc + x.clone() * x.clone());
        if vtv.is_zero() {
            continue;
        }
        let beta = two.clone() / vtv;
        // left: rows k+1..n
        for j in k..=n {
            let dot = v.iter().enumerate().fold(zero.clone(), |acc, (t, vt)| {
                acc + vt.clone() * a[k + 1 + t][j].clone()
            });
            let f = beta.clone() * dot;
            for (t, vt) in v.iter().enumerate() {
                a[k + 1 + t][j] = a[k + 1 + t][j].clone() - f.clone() * vt.clone();
            }
        }
        // right: columns k+1..n
        for i in 1..=n {
            let dot = v.iter().enumerate().fold(zero.clone(), |acc, (t, vt)| {
                acc + vt.clone() * a[i][k + 1 + t].clone()
            });
            let f = beta.clone() * dot;
            for (t, vt) in v.iter().enumerate() {
                a[i][k + 1 + t] = a[i][k + 1 + t].clone() - f.clone() * vt.clone();
            }
        }
        a[k + 1][k] = alpha;
        for i in k + 2..=n {
            a[i][k] = zero.clone();
        }
    }
}

/// Francis double-shift QR on an upper Hessenberg grid. Returns `(re, im)` pairs.
fn hqr<T: Real>(a: &mut Grid<T>, n: usize) -> Result<Vec<(T, T)>> {
    let zero = a[1][1].zero_like();
    let eps = a[1][1].epsilon_like();
    let half = a[1][1].lift_f64(0.5);
    let mut anorm = zero.clone();
    for i in 1..=n {
        for j in i.saturating_sub(1).max(1)..=n {
            anorm = anorm + a[i][j].abs();
        }
    }
    let mut wr = vec![zero.clone(); n + 1];
    let mut wi = vec![zero.clone(); n + 1];
    let mut nn = n;
    let mut t = zero.clone();
    while nn >= 1 {
        let mut its = 0;
        loop {
            let mut l = nn;
            while l >= 2 {
                let mut s = a[l - 1][l - 1].abs() + a[l][l].abs();
                if s.is_zero() {
                    s = anorm.clone();
                }
                if a[l][l - 1].abs() <= eps.clone() * s {
                    a[l][l - 1] = zero.clone();
                    break;
                }
                l -= 1;
            }
            let mut x = a[nn][nn].clone();
            if l == nn {
                wr[nn] = x + t.clone();
                wi[nn] = zero.clone();
                nn -= 1;
                break;
            }
            let mut y = a[nn - 1][nn - 1].clone();
            let mut w = a[nn][nn - 1].clone() * a[nn - 1][nn].clone();
            if l == nn - 1 {
                let p = half.clone() * (y - x.clone());
                let q = p.clone() * p.clone() + w.clone();
                let z = q.abs().sqrt();
                x = x + t.clone();
                if q >= zero {
                    let z = p.clone() + sign_of(z, &p);
                    wr[nn - 1] = x.clone() + z.clone();
                    wr[nn] = if z.is_zero() {
                        x.clone() + z.clone()
                    } else {
                        x.clone() - w / z
                    };
                    wi[nn - 1] = zero.clone();
                    wi[nn] = zero.clone();
                } else {
                    wr[nn - 1] = x.clone() + p.clone();
                    wr[nn] = x + p;
                    wi[nn - 1] = -z.clone();
                    wi[nn] = z;
                }
                if nn < 2 {
                    break;
                }
                nn -= 2;
                break;
            }
            if its == MAX_QR_ITERATIONS {
                return Err(Error::NoConvergence(format!(
                    "QR iteration stalled at eigenvalue {nn} ({} bits)",
                    x.precision_bits()
                )));
            }
            if its == 10 || its == 20 {
                // exceptional shift
                t = t + x.clone();
                for i in 1..=nn {
                    a[i][i] = a[i][i].clone() - x.clone();
                }
                let s = a[nn][nn - 1].abs() + a[nn - 1][nn - 2].abs();
                x = a[1][1].lift_f64(0.75) * s.clone();
                y = x.clone();
                w = a[1][1].lift_f64(-0.4375) * s.clone() * s;
            }
            its += 1;
            let (mut p, mut q, mut r): (T, T, T);
            let mut m = nn - 2;
            loop {
                let z = a[m][m].clone();
                let rr = x.clone() - z.clone();
                let ss = y.clone() - z.clone();
                p = (rr.clone() * ss.clone() - w.clone()) / a[m + 1][m].clone()
                    + a[m][m + 1].clone();
                q = a[m + 1][m + 1].clone() - z.clone() - rr - ss;
                r = a[m + 2][m + 1].clone();
                let s = p.abs() + q.abs() + r.abs();
                p = p / s.clone();
                q = q / s.clone();
                r = r / s;
                if m == l {
                    break;
                }
                let u = a[m][m - 1].abs() * (q.abs() + r.abs());
                let v = p.abs() * (a[m - 1][m - 1].abs() + z.abs() + a[m + 1][m + 1].abs());
                if u <= eps.clone() * v {
                    break;
                }
                m -= 1;
            }
            for i in m + 2..=nn {
                a[i][i - 2] = zero.clone();
                if i != m + 2 {
                    a[i][i - 3] = zero.clone();
                }
            }
            let mut k = m;
            while k < nn {
                if k != m {
                    p = a[k][k - 1].clone();
                    q = a[k + 1][k - 1].clone();
                    r = if k != nn - 1 {
                        a[k + 2][k - 1].clone()
                    } else {
                        zero.clone()
                    };
                    x = p.abs() + q.abs() + r.abs();
                    if !x.is_zero() {
                        p = p / x.clone();
                        q = q / x.clone();
                        r = r / x.clone();
                    }
                }
                let s = sign_of(
                    (p.clone() * p.clone() + q.clone() * q.clone() + r.clone() * r.clone()).sqrt(),
                    &p,
                );
                if !s.is_zero() {
                    if k == m {
                        if l != m {
                            a[k][k - 1] = -a[k][k - 1].clone();
                        }
                    } else {
                        a[k][k - 1] = -(s.clone() * x.clone());
                    }
                    p = p + s.clone();
                    x = p.clone() / s.clone();
                    y = q.clone() / s.clone();
                    let z = r.clone() / s.clone();
                    q = q / p.clone();
                    r = r / p.clone();
                    for j in k..=nn {
                        let mut pp = a[k][j].clone() + q.clone() * a[k + 1][j].clone();
                        if k != nn - 1 {
                            pp = pp + r.clone() * a[k + 2][j].clone();
                            a[k + 2][j] = a[k + 2][j].clone() - pp.clone() * z.clone();
                        }
                        a[k + 1][j] = a[k + 1][j].clone() - pp.clone() * y.clone();
                        a[k][j] = a[k][j].clone() - pp * x.clone();
                    }
                    let mmin = if nn < k + 3 { nn } else { k + 3 };
                    for i in l..=mmin {
                        let mut pp = x.clone() * a[i][k].clone() + y.clone() * a[i][k + 1].clone();
                        if k != nn - 1 {
                            pp = pp + z.clone() * a[i][k + 2].clone();
                            a[i][k + 2] = a[i][k + 2].clone() - pp.clone() * r.clone();
                        }
                        a[i][k + 1] = a[i][k + 1].clone() - pp.clone() * q.clone();
                        a[i][k] = a[i][k].clone() - pp;
                    }
                }
                k += 1;
            }
        }
    }
    Ok((1..=n).map(|i| (wr[i].clone(), wi[i].clone())).collect())
}

/// All eigenvalues of a square matrix as `(re, im)` pairs, unordered.
pub fn eigenvalues_dense<T: Real>(a: &Matrix<T>) -> Result<Vec<(T, T)>> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "eigenvalues need a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let mut g = to_grid(a);
    balance(&mut g, n);
    hessenberg(&mut g, n);
    hqr(&mut g, n)
}

/// Singular values by one-sided (Hestenes) Jacobi, descending.
///
/// A column pair is rotated while `|c_i . c_j| > tol * |c_i| |c_j|`;
/// converged when a full sweep performs no rotation.
pub fn singular_values_jacobi<T: Real>(
    a: &Matrix<T>,
    tol: &T,
    max_sweeps: usize,
) -> Result<Vec<T>> {
    let (rows, n) = (a.rows(), a.cols());
    let zero = a[(0, 0)].zero_like();
    let one = zero.one_like();
    let two = zero.lift_f64(2.0);
    let mut cols: Vec<Vec<T>> = (0..n)
        .map(|j| (0..rows).map(|i| a[(i, j)].clone()).collect())
        .collect();
    let dot = |x: &[T], y: &[T]| {
        x.iter()
            .zip(y)
            .fold(zero.clone(), |acc, (u, v)| acc + u.clone() * v.clone())
    };
    let mut converged = false;
    for _ in 0..max_sweeps {
        let mut rotated = false;
        for i in 0..n {
            for j in i + 1..n {
                let alpha = dot(&cols[i], &cols[i]);
                let beta = dot(&cols[j], &cols[j]);
                let gamma = dot(&cols[i], &cols[j]);
                if gamma.is_zero()
                    || gamma.abs() <= tol.clone() * (alpha.clone() * beta.clone()).sqrt()
                {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (two.clone() * gamma);
                let t = sign_of(one.clone(), &zeta)
                    / (zeta.abs() + (one.clone() + zeta.clone() * zeta).sqrt());
                let c = one.clone() / (one.clone() + t.clone() * t.clone()).sqrt();
                let s = c.clone() * t;
                let (left, right) = cols.split_at_mut(j);
                for (u, v) in left[i].iter_mut().zip(right[0].iter_mut()) {
                    let nu = c.clone() * u.clone() - s.clone() * v.clone();
                    let nv = s.clone() * u.clone() + c.clone() * v.clone();
                    *u = nu;
                    *v = nv;
                }
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence(format!(
            "one-sided Jacobi did not converge in {max_sweeps} sweeps ({} bits)",
            zero.precision_bits()
        )));
    }
    let mut sv: Vec<T> = cols.iter().map(|c| dot(c, c).sqrt()).collect();
    sv.sort_by(|x, y| y.partial_cmp(x).unwrap_or(std::cmp::Ordering::Equal));
    Ok(sv)
}
