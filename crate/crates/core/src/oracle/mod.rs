//! Root-based floating evaluation of the permanent, used to check every
//! exact route.

mod alternant;
mod involution;
mod permanent;
mod roots;

pub use alternant::{borchardt_matrix_det, cauchy_closed_form, cauchy_matrix_det};
pub use involution::{
    enumerate_involutions, involution_count, involution_sum, weighted_involution_sum, Involution,
    Involutions,
};
pub use permanent::{brute_permanent, ryser_permanent, scott_entries};
pub use roots::{find_roots, find_roots_with, RootConfig};

use num_complex::Complex64;

/// Entries closer than this are treated as a pole.
pub const SINGULAR_EPS: f64 = 1e-12;

/// Multiset of complex zeros of a polynomial.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ComplexVector(pub Vec<Complex64>);

impl ComplexVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Complex64> {
        self.0.iter()
    }

    pub fn from_reals(xs: &[f64]) -> Self {
        Self(xs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// The n-th roots of unity `exp(2 pi i k / n)`.
    pub fn roots_of_unity(n: usize) -> Self {
        Self(
            (0..n)
                .map(|k| {
                    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / n as f64)
                })
                .collect(),
        )
    }

    /// Smallest pairwise distance, `inf` for fewer than two points.
    pub fn min_separation(&self) -> f64 {
        let mut best = f64::INFINITY;
        for i in 0..self.0.len() {
            for j in i + 1..self.0.len() {
                best = best.min((self.0[i] - self.0[j]).norm());
            }
        }
        best
    }
}

impl std::ops::Index<usize> for ComplexVector {
    type Output = Complex64;
    fn index(&self, i: usize) -> &Complex64 {
        &self.0[i]
    }
}

/// `|a - b| <= tol * max(1, |a|, |b|)`.
pub fn approx_eq(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * a.norm().max(b.norm()).max(1.0)
}
