use num_complex::Complex64;

use super::{ComplexVector, SINGULAR_EPS};
use crate::error::{Error, Result};

/// An involution on `0..n`, stored as the partner of every index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Involution {
    pairing: Vec<usize>,
}

impl Involution {
    /// Checks that `pairing` is its own inverse.
    pub fn new(pairing: Vec<usize>) -> Result<Self> {
        let n = pairing.len();
        for (i, &p) in pairing.iter().enumerate() {
            if p >= n || pairing[p] != i {
                return Err(Error::BadParams(format!(
                    "pairing is not an involution at index {i}"
                )));
            }
        }
        Ok(Self { pairing })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            pairing: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.pairing.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairing.is_empty()
    }

    pub fn pairing(&self) -> &[usize] {
        &self.pairing
    }

    pub fn partner(&self, i: usize) -> usize {
        self.pairing[i]
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.pairing
            .iter()
            .enumerate()
            .filter(|(i, &p)| *i == p)
            .map(|(i, _)| i)
    }

    /// Two-cycles `(i, j)` with `i < j`.
    pub fn transpositions(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairing
            .iter()
            .enumerate()
            .filter(|(i, &p)| *i < p)
            .map(|(i, &p)| (i, p))
    }
}

/// Stream of all involutions on `0..n`. The smallest open index is either
/// left fixed or matched with some larger open index.
#[derive(Debug, Clone)]
pub struct Involutions {
    n: usize,
    // For each decision level: the index being placed and the partner tried.
    stack: Vec<(usize, usize)>,
    pairing: Vec<Option<usize>>,
    started: bool,
    done: bool,
}

impl Involutions {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            stack: Vec::new(),
            pairing: vec![None; n],
            started: false,
            done: false,
        }
    }

    fn first_open(&self) -> Option<usize> {
        self.pairing.iter().position(Option::is_none)
    }

    fn next_open_after(&self, i: usize, after: usize) -> Option<usize> {
        (after + 1..self.n).find(|&j| j != i && self.pairing[j].is_none())
    }

    // Fill every remaining index with its first choice (fixed point).
    fn descend(&mut self) {
        while let Some(i) = self.first_open() {
            self.pairing[i] = Some(i);
            self.stack.push((i, i));
        }
    }

    // Advance the deepest decision that still has an untried partner.
    fn advance(&mut self) -> bool {
        while let Some((i, p)) = self.stack.pop() {
            self.pairing[i] = None;
            if p != i {
                self.pairing[p] = None;
            }
            if let Some(q) = self.next_open_after(i, p) {
                self.pairing[i] = Some(q);
                self.pairing[q] = Some(i);
                self.stack.push((i, q));
                self.descend();
                return true;
            }
        }
        false
    }

    fn current(&self) -> Involution {
        Involution {
            pairing: self.pairing.iter().map(|p| p.expect("complete")).collect(),
        }
    }
}

impl Iterator for Involutions {
    type Item = Involution;

    fn next(&mut self) -> Option<Involution> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.descend();
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        Some(self.current())
    }
}

pub fn enumerate_involutions(n: usize) -> Involutions {
    Involutions::new(n)
}

/// Number of involutions on n points: `I(n) = I(n-1) + (n-1) I(n-2)`.
pub fn involution_count(n: usize) -> u128 {
    let (mut a, mut b) = (1u128, 1u128);
    for k in 2..=n {
        let c = b + (k as u128 - 1) * a;
        a = b;
        b = c;
    }
    b
}

fn check_distinct(x: &ComplexVector) -> Result<()> {
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            if (x[i] - x[j]).norm() < SINGULAR_EPS {
                return Err(Error::RepeatedXRoot { i, j });
            }
        }
    }
    Ok(())
}

/// `sum over involutions of prod 1/(x_i - x_j)^2 over two-cycles times
/// prod fixed_weight(k) over fixed points`.
pub fn weighted_involution_sum<F>(x: &ComplexVector, fixed_weight: F) -> Result<Complex64>
where
    F: Fn(usize) -> Complex64,
{
    check_distinct(x)?;
    let weights: Vec<Complex64> = (0..x.len()).map(&fixed_weight).collect();
    let mut total = Complex64::new(0.0, 0.0);
    for sigma in enumerate_involutions(x.len()) {
        let mut term = Complex64::new(1.0, 0.0);
        for (i, j) in sigma.transpositions() {
            let d = x[i] - x[j];
            term /= d * d;
        }
        for k in sigma.fixed_points() {
            term *= weights[k];
        }
        total += term;
    }
    Ok(total)
}

/// The involution expansion of the Scott-type permanent, with fixed-point
/// weight `L(s) = sum_{x != s} 1/(x - s) + sum_y 1/(s - y)`.
pub fn involution_sum(x: &ComplexVector, y: &ComplexVector) -> Result<Complex64> {
    check_distinct(x)?;
    for (i, xi) in x.iter().enumerate() {
        for (j, yj) in y.iter().enumerate() {
            if (xi - yj).norm() < SINGULAR_EPS {
                return Err(Error::SingularEntry { row: i, col: j });
            }
        }
    }
    weighted_involution_sum(x, |k| {
        let s = x[k];
        let from_x: Complex64 = x
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(_, xi)| (xi - s).inv())
            .sum();
        let from_y: Complex64 = y.iter().map(|yj| (s - yj).inv()).sum();
        from_x + from_y
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{approx_eq, brute_permanent};
    use std::collections::HashSet;

    #[test]
    fn counts_follow_recurrence() {
        let expected = [1u128, 1, 2, 4, 10, 26, 76, 232];
        for (n, &want) in expected.iter().enumerate() {
            assert_eq!(involution_count(n), want);
            let all: Vec<_> = enumerate_involutions(n).collect();
            assert_eq!(all.len() as u128, want, "n={n}");
            let distinct: HashSet<_> = all.iter().cloned().collect();
            assert_eq!(distinct.len(), all.len());
            for s in &all {
                assert!(Involution::new(s.pairing().to_vec()).is_ok());
            }
        }
    }

    #[test]
    fn identity_comes_first() {
        assert_eq!(
            enumerate_involutions(4).next().unwrap(),
            Involution::identity(4)
        );
        assert!(Involution::new(vec![1, 2, 0]).is_err());
    }

    #[test]
    fn single_row_is_sum_of_reciprocals() {
        let x = ComplexVector::from_reals(&[0.5]);
        let y = ComplexVector::from_reals(&[1.0, 2.0, -3.0]);
        let want: f64 = [1.0, 2.0, -3.0].iter().map(|v: &f64| 1.0 / (0.5 - v)).sum();
        assert!(approx_eq(
            involution_sum(&x, &y).unwrap(),
            Complex64::new(want, 0.0),
            1e-14
        ));
    }

    #[test]
    fn two_rows_one_column_vanishes() {
        let x = ComplexVector::from_reals(&[0.3, -1.7]);
        let y = ComplexVector::from_reals(&[2.2]);
        assert!(involution_sum(&x, &y).unwrap().norm() < 1e-12);
    }

    #[test]
    fn matches_brute_force_on_roots_of_unity() {
        let x = ComplexVector::roots_of_unity(3);
        let y = ComplexVector(x.iter().map(|z| -z).collect());
        let inv = involution_sum(&x, &y).unwrap();
        assert!(approx_eq(inv, brute_permanent(&x, &y).unwrap(), 1e-9));
        assert!(approx_eq(inv, Complex64::new(-0.375, 0.0), 1e-9));
    }

    #[test]
    fn repeated_x_rejected() {
        let x = ComplexVector::from_reals(&[1.0, 1.0]);
        let y = ComplexVector::from_reals(&[3.0]);
        assert_eq!(
            involution_sum(&x, &y),
            Err(Error::RepeatedXRoot { i: 0, j: 1 })
        );
    }
}
