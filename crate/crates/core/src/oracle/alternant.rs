use num_complex::Complex64;

use super::{scott_entries, ComplexVector, SINGULAR_EPS};
use crate::error::{Error, Result};

/// Determinant by partial-pivot LU.
fn lu_det(mut a: Vec<Vec<Complex64>>) -> Complex64 {
    let n = a.len();
    let mut det = Complex64::new(1.0, 0.0);
    for k in 0..n {
        let pivot = (k..n)
            .max_by(|&i, &j| a[i][k].norm().total_cmp(&a[j][k].norm()))
            .expect("non-empty range");
        if a[pivot][k].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot != k {
            a.swap(pivot, k);
            det = -det;
        }
        det *= a[k][k];
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest {
            let f = row[k] / pivot_row[k];
            for (x, &v) in row[k..].iter_mut().zip(&pivot_row[k..]) {
                *x -= f * v;
            }
        }
    }
    det
}

fn check_shape(x: &ComplexVector, y: &ComplexVector) -> Result<()> {
    if y.len() < x.len() {
        return Err(Error::DimensionMismatch(format!(
            "bordered matrix needs m >= n, got n={} m={}",
            x.len(),
            y.len()
        )));
    }
    Ok(())
}

fn bordered(x: &ComplexVector, y: &ComplexVector, power: i32) -> Result<Vec<Vec<Complex64>>> {
    check_shape(x, y)?;
    let mut rows: Vec<Vec<Complex64>> = scott_entries(x, y)?
        .into_iter()
        .map(|r| r.into_iter().map(|v| v.powi(power)).collect())
        .collect();
    for k in 0..y.len() - x.len() {
        rows.push(y.iter().map(|yj| yj.powi(k as i32)).collect());
    }
    Ok(rows)
}

/// `det` of the m x m matrix with rows `1/(x_i - y_j)` over a Vandermonde
/// border `y_j^0 .. y_j^(m-n-1)`.
pub fn cauchy_matrix_det(x: &ComplexVector, y: &ComplexVector) -> Result<Complex64> {
    Ok(lu_det(bordered(x, y, 1)?))
}

/// As [`cauchy_matrix_det`] with squared entries `1/(x_i - y_j)^2`.
pub fn borchardt_matrix_det(x: &ComplexVector, y: &ComplexVector) -> Result<Complex64> {
    Ok(lu_det(bordered(x, y, 2)?))
}

fn vandermonde(v: &ComplexVector) -> Complex64 {
    let mut p = Complex64::new(1.0, 0.0);
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            p *= v[i] - v[j];
        }
    }
    p
}

/// `(-1)^(n(n-1)/2) Δ(X) Δ(Y) / R(X, Y)` with `Δ(V) = prod_{i<j} (v_i - v_j)`
/// and `R = prod (x_i - y_j)`. The ascending border rows contribute a
/// further `(-1)^(k(k-1)/2)`, `k = m - n`.
pub fn cauchy_closed_form(x: &ComplexVector, y: &ComplexVector) -> Result<Complex64> {
    check_shape(x, y)?;
    let mut r = Complex64::new(1.0, 0.0);
    for (i, xi) in x.iter().enumerate() {
        for (j, yj) in y.iter().enumerate() {
            let d = xi - yj;
            if d.norm() < SINGULAR_EPS {
                return Err(Error::SingularEntry { row: i, col: j });
            }
            r *= d;
        }
    }
    let n = x.len();
    let k = y.len() - n;
    let flips = n * n.saturating_sub(1) / 2 + k * k.saturating_sub(1) / 2;
    let sign = if flips.is_multiple_of(2) { 1.0 } else { -1.0 };
    Ok(vandermonde(x) * vandermonde(y) * sign / r)
}
