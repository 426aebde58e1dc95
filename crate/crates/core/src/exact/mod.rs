//! Exact arithmetic substrate: rationals, dense univariate polynomials,
//! power-series inversion, resultants and determinants.
//!
//! Nothing in this module touches floating point.

mod matrix;
mod poly;

pub use matrix::{exact_det, RationalMatrix};
pub use poly::{poly_eval, poly_gcd, poly_mul, resultant, series_inverse, Polynomial};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// `n / d` as a canonical rational. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Integer power with a nonnegative exponent.
pub fn pow(base: &Rational, exp: usize) -> Rational {
    let mut acc = Rational::one();
    let mut b = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    acc
}

/// Shifted factorial `(base)_len = base (base+1) ... (base+len-1)`, with `(base)_0 = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedFactorial {
    pub base: Rational,
    pub length: usize,
}

impl ShiftedFactorial {
    pub fn new(base: Rational, length: usize) -> Self {
        Self { base, length }
    }

    pub fn value(&self) -> Rational {
        let mut acc = Rational::one();
        let mut term = self.base.clone();
        for _ in 0..self.length {
            if term.is_zero() {
                return Rational::zero();
            }
            acc *= &term;
            term += Rational::one();
        }
        acc
    }
}

/// Convenience for `ShiftedFactorial::new(base, len).value()`.
pub fn pochhammer(base: &Rational, len: usize) -> Rational {
    ShiftedFactorial::new(base.clone(), len).value()
}

/// Lossy conversion used only when handing exact values to the numeric oracle.
pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn shifted_factorial_basics() {
        assert_eq!(pochhammer(&int(4), 2), int(20));
        assert_eq!(pochhammer(&int(7), 0), int(1));
        assert_eq!(pochhammer(&rat(1, 2), 2), rat(3, 4));
        // a nonpositive integer base inside the window vanishes
        assert_eq!(pochhammer(&int(-2), 4), int(0));
        assert_eq!(pochhammer(&int(-2), 2), int(2));
    }

    #[test]
    fn pow_matches_repeated_product() {
        let b = rat(-3, 2);
        let mut acc = int(1);
        for e in 0..9 {
            assert_eq!(pow(&b, e), acc);
            acc *= &b;
        }
    }

    fn canonical(r: &Rational) -> bool {
        use num_integer::Integer;
        r.denom() > &BigInt::zero() && r.numer().gcd(r.denom()) == BigInt::one()
            || (r.numer().is_zero() && r.denom() == &BigInt::one())
    }

    proptest! {
        #[test]
        fn arithmetic_stays_canonical(ops in prop::collection::vec((-50i64..50, 1i64..40, 0u8..4), 1..40)) {
            let mut acc = int(1);
            for (n, d, op) in ops {
                let x = rat(n, d);
                acc = match op {
                    0 => &acc + &x,
                    1 => &acc - &x,
                    2 => &acc * &x,
                    _ if !x.is_zero() => &acc / &x,
                    _ => acc,
                };
                prop_assert!(canonical(&acc));
            }
        }
    }
}
