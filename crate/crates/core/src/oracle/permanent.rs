use num_complex::Complex64;

use super::{ComplexVector, SINGULAR_EPS};
use crate::error::{Error, Result};

/// The n x m matrix `1/(x_i - y_j)`.
pub fn scott_entries(x: &ComplexVector, y: &ComplexVector) -> Result<Vec<Vec<Complex64>>> {
    let mut rows = Vec::with_capacity(x.len());
    for (i, xi) in x.iter().enumerate() {
        let mut row = Vec::with_capacity(y.len());
        for (j, yj) in y.iter().enumerate() {
            let d = xi - yj;
            if d.norm() < SINGULAR_EPS {
                return Err(Error::SingularEntry { row: i, col: j });
            }
            row.push(d.inv());
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Rectangular permanent of `1/(x_i - y_j)` by enumerating every injective
/// assignment of rows to columns. Zero when there are more rows than columns.
pub fn brute_permanent(x: &ComplexVector, y: &ComplexVector) -> Result<Complex64> {
    let a = scott_entries(x, y)?;
    if x.len() > y.len() {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let mut used = vec![false; y.len()];
    Ok(enumerate(&a, 0, &mut used, Complex64::new(1.0, 0.0)))
}

fn enumerate(a: &[Vec<Complex64>], row: usize, used: &mut [bool], prefix: Complex64) -> Complex64 {
    if row == a.len() {
        return prefix;
    }
    let mut total = Complex64::new(0.0, 0.0);
    for col in 0..used.len() {
        if used[col] {
            continue;
        }
        used[col] = true;
        total += enumerate(a, row + 1, used, prefix * a[row][col]);
        used[col] = false;
    }
    total
}

/// Ryser's inclusion–exclusion formula with Gray-code subset order; square
/// matrices only.
pub fn ryser_permanent(a: &[Vec<Complex64>]) -> Result<Complex64> {
    let n = a.len();
    if let Some(bad) = a.iter().find(|r| r.len() != n) {
        return Err(Error::NonSquare {
            rows: n,
            cols: bad.len(),
        });
    }
    if n == 0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let mut row_sums = vec![Complex64::new(0.0, 0.0); n];
    let mut total = Complex64::new(0.0, 0.0);
    let mut gray: u64 = 0;
    for k in 1u64..(1u64 << n) {
        let next = k ^ (k >> 1);
        let flipped = (gray ^ next).trailing_zeros() as usize;
        let added = next & (1 << flipped) != 0;
        for (s, row) in row_sums.iter_mut().zip(a) {
            if added {
                *s += row[flipped];
            } else {
                *s -= row[flipped];
            }
        }
        gray = next;
        let prod: Complex64 = row_sums.iter().product();
        if gray.count_ones().is_multiple_of(2) {
            total += prod;
        } else {
            total -= prod;
        }
    }
    Ok(if n.is_multiple_of(2) { total } else { -total })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::approx_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn even_scott_instance_vanishes() {
        let x = ComplexVector::from_reals(&[1.0, -1.0]);
        let y = ComplexVector(vec![c(0.0, 1.0), c(0.0, -1.0)]);
        assert!(brute_permanent(&x, &y).unwrap().norm() < 1e-9);
    }

    #[test]
    fn scott_n3() {
        let x = ComplexVector::roots_of_unity(3);
        // zeros of y^3 + 1 are -(cube roots of unity)
        let y = ComplexVector(x.iter().map(|z| -z).collect());
        let v = brute_permanent(&x, &y).unwrap();
        assert!(approx_eq(v, c(-3.0 / 8.0, 0.0), 1e-12), "{v}");
    }

    #[test]
    fn more_rows_than_columns_is_zero() {
        let x = ComplexVector::from_reals(&[1.0, 2.0]);
        let y = ComplexVector::from_reals(&[5.0]);
        assert_eq!(brute_permanent(&x, &y).unwrap(), c(0.0, 0.0));
    }

    #[test]
    fn singular_entry_detected() {
        let x = ComplexVector::from_reals(&[1.0, 2.0]);
        let y = ComplexVector::from_reals(&[2.0, 3.0]);
        assert_eq!(
            brute_permanent(&x, &y),
            Err(Error::SingularEntry { row: 1, col: 0 })
        );
    }

    #[test]
    fn ryser_small_cases() {
        assert_eq!(ryser_permanent(&[]).unwrap(), c(1.0, 0.0));
        let a = vec![
            vec![c(1.0, 0.0), c(2.0, 0.0)],
            vec![c(3.0, 0.0), c(4.0, 0.0)],
        ];
        assert!(approx_eq(ryser_permanent(&a).unwrap(), c(10.0, 0.0), 1e-14));
        assert!(ryser_permanent(&[vec![c(1.0, 0.0), c(2.0, 0.0)]]).is_err());
    }

    #[test]
    fn ryser_agrees_with_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=8 {
            for _ in 0..3 {
                let mut pts = || {
                    ComplexVector(
                        (0..n)
                            .map(|_| c(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)))
                            .collect(),
                    )
                };
                let (x, y) = (pts(), pts());
                let brute = brute_permanent(&x, &y).unwrap();
                let ryser = ryser_permanent(&scott_entries(&x, &y).unwrap()).unwrap();
                let scale = brute.norm().max(ryser.norm());
                assert!(
                    (brute - ryser).norm() <= 1e-9 * scale.max(1e-300),
                    "n={n}: {brute} vs {ryser}"
                );
            }
        }
    }
}
