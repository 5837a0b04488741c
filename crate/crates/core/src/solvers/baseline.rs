//! Conventional double-precision algorithms applied to the rounded matrix.

use super::dense::eigenvalues_dense;
use crate::error::{Error, Result};
use crate::matrix::Matrix;

fn descending(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

/// Real parts of the eigenvalues, descending; all NaN if QR fails to converge.
pub fn naive_eigenvalues(a: &Matrix<f64>) -> Vec<f64> {
    match eigenvalues_dense(a) {
        Ok(pairs) => descending(pairs.into_iter().map(|(re, _)| re).collect()),
        Err(_) => vec![f64::NAN; a.rows()],
    }
}

/// Singular values by Householder bidiagonalization and implicit-shift QR
/// (Golub-Reinsch) in double, descending; all NaN on failure.
pub fn naive_singular_values(a: &Matrix<f64>) -> Vec<f64> {
    golub_reinsch(a)
        .map(descending)
        .unwrap_or_else(|_| vec![f64::NAN; a.cols()])
}

fn golub_reinsch(a: &Matrix<f64>) -> Result<Vec<f64>> {
    let (m, n) = (a.rows(), a.cols());
    if m < n {
        return golub_reinsch(&a.transpose());
    }
    let mut a = a.to_rows();
    let mut w = vec![0.0; n];
    let mut rv1 = vec![0.0; n];
    let (mut g, mut scale, mut anorm) = (0.0f64, 0.0f64, 0.0f64);
    for i in 0..n {
        let l = i + 1;
        rv1[i] = scale * g;
        g = 0.0;
        scale = 0.0;
        let mut s = 0.0;
        for k in i..m {
            scale += a[k][i].abs();
        }
        if scale != 0.0 {
            for k in i..m {
                a[k][i] /= scale;
                s += a[k][i] * a[k][i];
            }
            let f = a[i][i];
            g = -s.sqrt().copysign(f);
            let h = f * g - s;
            a[i][i] = f - g;
            for j in l..n {
                let s: f64 = (i..m).map(|k| a[k][i] * a[k][j]).sum();
                let f = s / h;
                for k in i..m {
                    a[k][j] += f * a[k][i];
                }
            }
            for k in i..m {
                a[k][i] *= scale;
            }
        }
        w[i] = scale * g;
        g = 0.0;
        scale = 0.0;
        s = 0.0;
        if i != n - 1 {
            for k in l..n {
                scale += a[i][k].abs();
            }
            if scale != 0.0 {
                for k in l..n {
                    a[i][k] /= scale;
                    s += a[i][k] * a[i][k];
                }
                let f = a[i][l];
                g = -s.sqrt().copysign(f);
                let h = f * g - s;
                a[i][l] = f - g;
                for k in l..n {
                    rv1[k] = a[i][k] / h;
                }
                for j in l..m {
                    let s: f64 = (l..n).map(|k| a[j][k] * a[i][k]).sum();
                    for k in l..n {
                        a[j][k] += s * rv1[k];
                    }
                }
                for k in l..n {
                    a[i][k] *= scale;
                }
            }
        }
        anorm = anorm.max(w[i].abs() + rv1[i].abs());
    }
    for k in (0..n).rev() {
        let mut its = 0;
        loop {
            let mut l = k;
            let mut split = false;
            loop {
                if rv1[l].abs() + anorm == anorm {
                    split = true;
                    break;
                }
                // rv1[0] is always zero, so l > 0 here
                if w[l - 1].abs() + anorm == anorm {
                    break;
                }
                l -= 1;
            }
            if !split {
                let (mut c, mut s) = (0.0, 1.0);
                for i in l..=k {
                    let f = s * rv1[i];
                    rv1[i] *= c;
                    if f.abs() + anorm == anorm {
                        break;
                    }
                    let g = w[i];
                    let h = f.hypot(g);
                    w[i] = h;
                    c = g / h;
                    s = -f / h;
                }
            }
            let z = w[k];
            if l == k {
                if z < 0.0 {
                    w[k] = -z;
                }
                break;
            }
            if its == 30 {
                return Err(Error::NoConvergence(
                    "bidiagonal QR did not converge".into(),
                ));
            }
            its += 1;
            let mut x = w[l];
            let nm = k - 1;
            let mut y = w[nm];
            let mut g = rv1[nm];
            let mut h = rv1[k];
            let mut f = ((y - z) * (y + z) + (g - h) * (g + h)) / (2.0 * h * y);
            g = f.hypot(1.0);
            f = ((x - z) * (x + z) + h * ((y / (f + g.copysign(f))) - h)) / x;
            let (mut c, mut s) = (1.0, 1.0);
            for j in l..=nm {
                let i = j + 1;
                g = rv1[i];
                y = w[i];
                h = s * g;
                g *= c;
                let mut z = f.hypot(h);
                rv1[j] = z;
                c = f / z;
                s = h / z;
                f = x * c + g * s;
                g = g * c - x * s;
                h = y * s;
                y *= c;
                z = f.hypot(h);
                w[j] = z;
                if z != 0.0 {
                    c = f / z;
                    s = h / z;
                }
                f = c * g + s * y;
                x = c * y - s * g;
            }
            rv1[l] = 0.0;
            rv1[k] = f;
            w[k] = x;
        }
    }
    Ok(w)
}

struct Lu {
    lu: Matrix<f64>,
    perm: Vec<usize>,
}

fn lu_factor(a: &Matrix<f64>) -> Result<Lu> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "LU needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let mut lu = a.clone();
    let mut perm: Vec<usize> = (0..n).collect();
    for k in 0..n {
        let p = (k..n)
            .max_by(|&i, &j| lu[(i, k)].abs().total_cmp(&lu[(j, k)].abs()))
            .expect("nonempty range");
        if lu[(p, k)] == 0.0 {
            return Err(Error::SingularMatrix(format!("zero pivot in column {k}")));
        }
        lu.swap_rows(k, p);
        perm.swap(k, p);
        for i in k + 1..n {
            let m = lu[(i, k)] / lu[(k, k)];
            lu[(i, k)] = m;
            for j in k + 1..n {
                lu[(i, j)] -= m * lu[(k, j)];
            }
        }
    }
    Ok(Lu { lu, perm })
}

impl Lu {
    fn solve(&self, b: &[f64]) -> Vec<f64> {
        let n = self.perm.len();
        let mut x: Vec<f64> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            for j in 0..i {
                x[i] -= self.lu[(i, j)] * x[j];
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                x[i] -= self.lu[(i, j)] * x[j];
            }
            x[i] /= self.lu[(i, i)];
        }
        x
    }
}

/// Gaussian elimination with partial pivoting.
pub fn naive_solve(a: &Matrix<f64>, b: &[f64]) -> Result<Vec<f64>> {
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side of length {} for a system of order {}",
            b.len(),
            a.rows()
        )));
    }
    Ok(lu_factor(a)?.solve(b))
}

/// Inverse by partial-pivoting LU, one column at a time.
pub fn naive_inverse(a: &Matrix<f64>) -> Result<Matrix<f64>> {
    let lu = lu_factor(a)?;
    let n = a.rows();
    let cols: Vec<Vec<f64>> = (0..n)
        .map(|k| {
            lu.solve(
                &(0..n)
                    .map(|i| if i == k { 1.0 } else { 0.0 })
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    Ok(Matrix::from_fn(n, n, |i, j| cols[j][i]))
}

/// Componentwise `|approx - reference| / |reference|`.
pub fn relative_errors(approx: &[f64], reference: &[f64]) -> Result<Vec<f64>> {
    if approx.len() != reference.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} values against {} references",
            approx.len(),
            reference.len()
        )));
    }
    approx
        .iter()
        .zip(reference)
        .enumerate()
        .map(|(i, (&a, &r))| {
            if r == 0.0 {
                Err(Error::DivisionByZero(format!(
                    "reference component {i} is zero"
                )))
            } else {
                Ok((a - r).abs() / r.abs())
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[f64]]) -> Matrix<f64> {
        Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn lu_needs_pivoting() {
        let a = m(&[&[0.0, 1.0], &[1.0, 1.0]]);
        assert_eq!(naive_solve(&a, &[1.0, 3.0]).unwrap(), vec![2.0, 1.0]);
        assert!(naive_solve(&m(&[&[1.0, 2.0], &[2.0, 4.0]]), &[1.0, 1.0]).is_err());
        assert!(naive_solve(&a, &[1.0]).is_err());
    }

    #[test]
    fn inverse_of_small_matrix() {
        let inv = naive_inverse(&m(&[&[1.0, 2.0], &[1.0, 3.0]])).unwrap();
        assert_eq!(inv.to_rows(), vec![vec![3.0, -2.0], vec![-1.0, 1.0]]);
    }

    #[test]
    fn spectra_in_double() {
        let a = m(&[&[2.0, 1.0], &[1.0, 2.0]]);
        let ev = naive_eigenvalues(&a);
        assert!((ev[0] - 3.0).abs() < 1e-15 && (ev[1] - 1.0).abs() < 1e-15);
        let sv = naive_singular_values(&a);
        assert!((sv[0] - 3.0).abs() < 1e-15 && (sv[1] - 1.0).abs() < 1e-15);
        let sv = naive_singular_values(&m(&[&[1.0, 2.0], &[1.0, 3.0]]));
        let big = ((15.0 + 221f64.sqrt()) / 2.0).sqrt();
        assert!((sv[0] - big).abs() < 1e-14 * big && (sv[0] * sv[1] - 1.0).abs() < 1e-14);
        let sv =
            naive_singular_values(&m(&[&[3.0, 0.0, 0.0], &[0.0, -5.0, 0.0], &[0.0, 0.0, 1.0]]));
        assert_eq!(sv, vec![5.0, 3.0, 1.0]);
        let sv = naive_singular_values(&m(&[&[1.0, 1.0], &[1.0, 1.0], &[0.0, 0.0]]));
        assert!((sv[0] - 2.0).abs() < 1e-15 && sv[1].abs() < 1e-15);
    }

    #[test]
    fn relative_error_rules() {
        assert_eq!(
            relative_errors(&[1.5, -2.0], &[1.0, -2.0]).unwrap(),
            vec![0.5, 0.0]
        );
        assert!(matches!(
            relative_errors(&[1.0], &[0.0]),
            Err(Error::DivisionByZero(_))
        ));
        assert!(matches!(
            relative_errors(&[1.0], &[1.0, 2.0]),
            Err(Error::DimensionMismatch(_))
        ));
    }
}
