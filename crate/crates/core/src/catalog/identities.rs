use num_complex::Complex64;
use serde::Serialize;

use super::EntryInfo;
use crate::error::{Error, Result};
use crate::oracle::{weighted_involution_sum, ComplexVector};

/// An identity `sum over involutions of prod 1/(x_i - x_j)^2 prod w(x_k) = c`
/// over the n-th roots of unity.
#[derive(Debug, Clone, Copy)]
pub struct Identity {
    pub id: &'static str,
    pub statement: &'static str,
    pub domain: &'static str,
    pub odd_only: bool,
    pub min_n: usize,
    weight: fn(usize, Complex64) -> Complex64,
    /// The weight as printed, where it differs from the one that holds.
    pub printed_weight: Option<fn(usize, Complex64) -> Complex64>,
    expected: fn(usize) -> f64,
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

static IDENTITIES: [Identity; 4] = [
    Identity {
        id: "prop40",
        statement: "Σ_σ ∏_(ij) 1/(x_i − x_j)² ∏_(k) (n+1)/(2 x_k) = (−1)^(n+1) n!",
        domain: "n ≥ 1",
        odd_only: false,
        min_n: 1,
        weight: |n, x| Complex64::new((n + 1) as f64, 0.0) / (2.0 * x),
        printed_weight: None,
        expected: |n| if n % 2 == 1 { factorial(n) } else { -factorial(n) },
    },
    Identity {
        id: "prop41",
        statement: "Σ_σ ∏_(ij) 1/(x_i − x_j)² ∏_(k) (n−1)/(2 x_k) = 0",
        domain: "n ≥ 1",
        odd_only: false,
        min_n: 1,
        weight: |n, x| Complex64::new(n as f64 - 1.0, 0.0) / (2.0 * x),
        printed_weight: None,
        expected: |_| 0.0,
    },
    Identity {
        id: "prop42",
        statement: "Σ_σ ∏_(ij) 1/(x_i − x_j)² ∏_(k) (2 + (3−n) x_k)/(2 x_k²) = 1",
        domain: "n ≥ 2",
        odd_only: false,
        min_n: 2,
        weight: |n, x| (2.0 + (3.0 - n as f64) * x) / (2.0 * x * x),
        printed_weight: Some(|n, x| (2.0 * n as f64 + (n as f64 + 1.0) * x) / (2.0 * x * x)),
        expected: |_| 1.0,
    },
    Identity {
        id: "prop43",
        statement: "Σ_σ ∏_(ij) 1/(x_i − x_j)² ∏_(k) (1 − n + (3+n) x_k)/(2(1 + x_k) x_k) = (n+1)!/2 for odd n",
        domain: "n odd",
        odd_only: true,
        min_n: 1,
        weight: |n, x| (1.0 - n as f64 + (3.0 + n as f64) * x) / (2.0 * (1.0 + x) * x),
        printed_weight: None,
        expected: |n| factorial(n + 1) / 2.0,
    },
];

pub fn identities() -> &'static [Identity] {
    &IDENTITIES
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub id: &'static str,
    pub n: usize,
    pub computed_re: f64,
    pub computed_im: f64,
    pub expected: f64,
    pub error: f64,
    pub passed: bool,
}

impl Identity {
    pub fn info(&self) -> EntryInfo {
        EntryInfo {
            id: self.id,
            kind: "involution_identity",
            statement: self.statement,
            params: vec!["n"],
            domain: self.domain,
        }
    }

    pub fn expected(&self, n: usize) -> f64 {
        (self.expected)(n)
    }

    /// The involution sum with the given weight over the n-th roots of unity.
    pub fn sum_with(
        &self,
        n: usize,
        weight: fn(usize, Complex64) -> Complex64,
    ) -> Result<Complex64> {
        if self.odd_only && n.is_multiple_of(2) {
            return Err(Error::OutOfDomain {
                id: self.id.to_string(),
                reason: "n odd".into(),
            });
        }
        if n < self.min_n {
            return Err(Error::OutOfDomain {
                id: self.id.to_string(),
                reason: format!("n ≥ {}", self.min_n),
            });
        }
        let x = ComplexVector::roots_of_unity(n);
        weighted_involution_sum(&x, |k| weight(n, x[k]))
    }

    pub fn sum(&self, n: usize) -> Result<Complex64> {
        self.sum_with(n, self.weight)
    }
}

/// Evaluates an identity numerically and compares it with its constant:
/// relative error `1e-7`, and `|sum| < 1e-7 n!` when the constant is 0.
pub fn involution_identity_check(id: &str, n: usize) -> Result<IdentityReport> {
    let ident = identities()
        .iter()
        .find(|i| i.id == id)
        .ok_or_else(|| Error::UnknownEntry(id.to_string()))?;
    let got = ident.sum(n)?;
    let want = ident.expected(n);
    let error = (got - Complex64::new(want, 0.0)).norm();
    let passed = if want == 0.0 {
        got.norm() < 1e-7 * factorial(n)
    } else {
        error <= 1e-7 * want.abs().max(1.0)
    };
    Ok(IdentityReport {
        id: ident.id,
        n,
        computed_re: got.re,
        computed_im: got.im,
        expected: want,
        error,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities_hold() {
        for ident in identities() {
            for n in 2..=8 {
                if ident.odd_only && n % 2 == 0 {
                    assert!(involution_identity_check(ident.id, n).is_err());
                    continue;
                }
                let r = involution_identity_check(ident.id, n).unwrap();
                assert!(r.passed, "{r:?}");
            }
        }
        assert!(
            involution_identity_check("prop40", 3)
                .unwrap()
                .computed_re
                .round()
                == 6.0
        );
    }

    #[test]
    fn printed_prop42_weight_fails() {
        let ident = identities().iter().find(|i| i.id == "prop42").unwrap();
        let printed = ident.printed_weight.unwrap();
        let mut at_one = *ident;
        at_one.min_n = 1;
        assert!((at_one.sum_with(1, printed).unwrap().re - 2.0).abs() < 1e-9);
        assert!((ident.sum_with(2, printed).unwrap().re - 2.0).abs() < 1e-9);
        assert!((ident.sum_with(3, printed).unwrap().re - 33.0).abs() < 1e-7);
        assert!(matches!(ident.sum(1), Err(Error::OutOfDomain { .. })));
    }
}
