//! Standalone determinant evaluations: each case has a literal matrix builder
//! and a product formula for its determinant.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{int, pow, Rational, RationalMatrix};

#[derive(Debug, Clone, PartialEq)]
pub enum GalleryCase {
    /// `x` on the diagonal plus `y_c` at `(i, c)` with `c = i - r (mod n)`.
    Prop6 {
        r: usize,
        x: Vec<Rational>,
        y: Vec<Rational>,
    },
    /// Entry `(n(i,j) + c)(n(i,j) a + b) + d - (j - 1)(n(i,j) a + e)` with
    /// `n(i,j) = 1 + ((i - j) mod n)`.
    Thm7 {
        n: usize,
        a: Rational,
        b: Rational,
        c: Rational,
        d: Rational,
        e: Rational,
    },
    /// (n-1) x (n-1) three-branch matrix; the first matching branch wins when
    /// the residue classes overlap (n <= 3).
    Thm8 { n: usize, m: Rational, a: Rational },
    /// (n-1) x (n-1) two-branch matrix.
    Cor9 { n: usize, a: Rational },
}

impl GalleryCase {
    pub fn id(&self) -> &'static str {
        match self {
            GalleryCase::Prop6 { .. } => "prop6",
            GalleryCase::Thm7 { .. } => "thm7",
            GalleryCase::Thm8 { .. } => "thm8",
            GalleryCase::Cor9 { .. } => "cor9",
        }
    }

    /// The `n` of the case; the matrix is n x n for prop6/thm7 and
    /// (n-1) x (n-1) otherwise.
    pub fn n(&self) -> usize {
        match self {
            GalleryCase::Prop6 { x, .. } => x.len(),
            GalleryCase::Thm7 { n, .. }
            | GalleryCase::Thm8 { n, .. }
            | GalleryCase::Cor9 { n, .. } => *n,
        }
    }

    fn validate(&self) -> Result<()> {
        let n = self.n();
        match self {
            GalleryCase::Prop6 { r, y, .. } => {
                if n == 0 {
                    return Err(Error::BadParams("prop6 needs n >= 1".into()));
                }
                if y.len() != n {
                    return Err(Error::BadParams(format!(
                        "prop6: {} x-values but {} y-values",
                        n,
                        y.len()
                    )));
                }
                if *r == 0 || *r > n {
                    return Err(Error::BadParams(format!("prop6: r = {r} outside 1..={n}")));
                }
            }
            GalleryCase::Thm7 { .. } if n == 0 => {
                return Err(Error::BadParams("thm7 needs n >= 1".into()))
            }
            GalleryCase::Thm8 { .. } | GalleryCase::Cor9 { .. } if n < 2 => {
                return Err(Error::BadParams(format!("{} needs n >= 2", self.id())))
            }
            _ => {}
        }
        Ok(())
    }
}

/// Residue of `v` modulo n in `0..n`.
fn modn(v: i64, n: usize) -> i64 {
    v.rem_euclid(n as i64)
}

pub fn gallery_matrix(case: &GalleryCase) -> Result<RationalMatrix> {
    case.validate()?;
    let n = case.n();
    Ok(match case {
        GalleryCase::Prop6 { r, x, y } => {
            let mut m = RationalMatrix::zeros(n, n);
            for i in 0..n {
                m[(i, i)] += &x[i];
                let c = modn(i as i64 - *r as i64, n) as usize;
                m[(i, c)] += &y[c];
            }
            m
        }
        GalleryCase::Thm7 { a, b, c, d, e, .. } => RationalMatrix::from_fn(n, n, |i, j| {
            let nij = int(1 + modn(i as i64 - j as i64, n));
            let na = &nij * a;
            (&nij + c) * (&na + b) + d - int(j as i64) * (&na + e)
        }),
        GalleryCase::Thm8 { m, a, .. } => RationalMatrix::from_fn(n - 1, n - 1, |i0, j0| {
            let (i, j) = (i0 as i64 + 1, j0 as i64 + 1);
            let nn = int(n as i64);
            let jj = int(j);
            if modn(i - j + 2, n) == 0 {
                &nn - m - int(1) + &jj * (int(1) + a - &nn)
            } else if modn(i - j + 3, n) == 0 {
                (&nn - int(1)) * (m - int(1)) + &jj * (int(1) - a)
            } else {
                let s = modn(i - j + 1, n);
                &nn - m - int(3 + 2 * s) + jj
            }
        }),
        GalleryCase::Cor9 { a, .. } => RationalMatrix::from_fn(n - 1, n - 1, |i0, j0| {
            let (i, j) = (i0 as i64 + 1, j0 as i64 + 1);
            if modn(i - j + 2, n) == 0 {
                int(n as i64 - 1) * (int(n as i64 - j - 1) + a)
            } else {
                let s = modn(i - j + 1, n);
                int(j - 1 - 2 * s) - a
            }
        }),
    })
}

/// The polynomial factor `U_n(a, b, c, d, e)` of the thm7 determinant.
pub fn thm7_u(
    n: usize,
    a: &Rational,
    b: &Rational,
    c: &Rational,
    d: &Rational,
    e: &Rational,
) -> Rational {
    let n = int(n as i64);
    let one = int(1);
    let (aa, bb, cc) = (a * a, b * b, c * c);
    let q = |num: Rational, den: i64| num / int(den);
    q((&n + &one) * (&n + int(2)), 3) * &aa
        + q((&n + &one) * (int(2) * &n + int(7)), 6) * a * b
        + q(&n + &one, 2) * &bb
        + q((&n + &one) * (int(2) * &n + int(7)), 6) * &aa * c
        + q(int(3) * &n + int(5), 2) * a * b * c
        + &bb * c
        + q(&n + &one, 2) * &aa * &cc
        + a * b * &cc
        + q(&n + int(3), 2) * a * d
        + b * d
        + a * c * d
        - q((&n - &one) * (int(2) * &n + int(5)), 6) * a * e
        - q(&n - &one, 2) * b * e
        - q(&n - &one, 2) * a * c * e
}

pub fn gallery_closed_form(case: &GalleryCase) -> Result<Rational> {
    case.validate()?;
    let n = case.n();
    Ok(match case {
        GalleryCase::Prop6 { r, x, y } => {
            let d = r.gcd(&n);
            let len = n / d;
            let sign = if len.is_multiple_of(2) {
                Rational::one()
            } else {
                -Rational::one()
            };
            (0..d)
                .map(|i| {
                    let px: Rational = (0..len).map(|j| x[i + j * d].clone()).product();
                    let py: Rational = (0..len).map(|j| y[i + j * d].clone()).product();
                    px - &sign * py
                })
                .product()
        }
        GalleryCase::Thm7 { a, b, c, d, e, .. } => {
            let ca = c * a;
            let tail = if n == 1 {
                let den = int(2) * a + b + &ca;
                if den.is_zero() {
                    return Err(Error::BadParams(
                        "thm7 at n = 1 needs 2a + b + ca != 0".into(),
                    ));
                }
                den.recip()
            } else {
                (3..=n).map(|i| int(i as i64) * a + b + &ca).product()
            };
            pow(&int(-(n as i64)), n - 1) * thm7_u(n, a, b, c, d, e) * tail
        }
        GalleryCase::Thm8 { m, a, .. } => {
            let nn = int(n as i64);
            let prod: Rational = (2..=n).map(|i| &nn * m - int(i as i64) * a).product();
            let v = prod / &nn;
            if n.is_multiple_of(2) {
                -v
            } else {
                v
            }
        }
        GalleryCase::Cor9 { a, .. } => {
            let prod: Rational = (0..n - 1).map(|i| int(i as i64) + a).product();
            pow(&int(n as i64), n - 2) * prod
        }
    })
}
