use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{exact_det, Rational, RationalMatrix};
use crate::error::{Error, Result};

/// Dense univariate polynomial over the rationals; `coeffs[i]` multiplies `x^i`.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and no degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// Low-to-high integer coefficients.
    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| super::int(c)).collect())
    }

    /// `c * x^deg`.
    pub fn monomial(deg: usize, c: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); deg + 1];
        coeffs[deg] = c;
        Self::new(coeffs)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents accumulate.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, Rational)>,
    {
        let mut coeffs: Vec<Rational> = Vec::new();
        for (e, c) in terms {
            if coeffs.len() <= e {
                coeffs.resize(e + 1, Rational::zero());
            }
            coeffs[e] += c;
        }
        Self::new(coeffs)
    }

    /// `x^n - 1`.
    pub fn power_minus_one(n: usize) -> Self {
        Self::from_terms([(n, Rational::one()), (0, -Rational::one())])
    }

    /// `x^(n-1) + ... + x + 1`, the quotient `(x^n - 1)/(x - 1)`.
    pub fn all_ones(n: usize) -> Self {
        Self::new(vec![Rational::one(); n])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        poly_eval(self, x)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Result<Self> {
        let lc = self.leading().ok_or(Error::ZeroPolynomial)?;
        Ok(Self {
            coeffs: self.coeffs.iter().map(|a| a / lc).collect(),
        })
    }

    /// `t^deg p(1/t)`: the coefficient list read backwards.
    pub fn reversed(&self) -> Self {
        Self::new(self.coeffs.iter().rev().cloned().collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * super::int(i as i64))
                .collect(),
        )
    }

    /// Euclidean division over the rationals.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let lc = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if sd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let c = &rem[k + dd] / lc;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Floating copy of the coefficients, low to high.
    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(super::to_f64).collect()
    }

    /// Canonical text in the variable `var`, highest power first, e.g.
    /// `x^4 + 3/2*x - 7`. Re-parses to an equal polynomial.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let mono = match e {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{e}"),
            };
            if mono.is_empty() {
                out.push_str(&a.to_string());
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{a}*{mono}"));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        poly_mul(self, rhs)
    }
}

/// Horner evaluation.
pub fn poly_eval(p: &Polynomial, x: &Rational) -> Rational {
    p.coeffs
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + c)
}

pub fn poly_mul(p: &Polynomial, q: &Polynomial) -> Polynomial {
    if p.is_zero() || q.is_zero() {
        return Polynomial::zero();
    }
    let mut out = vec![Rational::zero(); p.coeffs.len() + q.coeffs.len() - 1];
    for (i, a) in p.coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in q.coeffs.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    Polynomial::new(out)
}

/// First `order + 1` coefficients of the formal power series `1/p(t)`.
pub fn series_inverse(p: &Polynomial, order: usize) -> Result<Vec<Rational>> {
    let c0 = p
        .coeffs
        .first()
        .filter(|c| !c.is_zero())
        .ok_or(Error::ZeroConstantTerm)?;
    let inv0 = c0.recip();
    let mut out: Vec<Rational> = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut s = if k == 0 {
            Rational::one()
        } else {
            Rational::zero()
        };
        for i in 1..=k.min(p.coeffs.len() - 1) {
            s -= &p.coeffs[i] * &out[k - i];
        }
        out.push(s * &inv0);
    }
    Ok(out)
}

/// Sylvester matrix of `p` (degree n) and `q` (degree m): m shifted rows of
/// p's coefficients followed by n shifted rows of q's, highest power first.
pub fn sylvester_matrix(p: &Polynomial, q: &Polynomial) -> Result<RationalMatrix> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    let m = q.degree().ok_or(Error::ZeroPolynomial)?;
    let size = n + m;
    let mut s = RationalMatrix::zeros(size, size);
    for row in 0..m {
        for (k, c) in p.coeffs.iter().rev().enumerate() {
            s[(row, row + k)] = c.clone();
        }
    }
    for row in 0..n {
        for (k, c) in q.coeffs.iter().rev().enumerate() {
            s[(m + row, row + k)] = c.clone();
        }
    }
    Ok(s)
}

/// `Res(p, q) = lc(p)^m lc(q)^n prod (x_i - y_j)`, via the Sylvester determinant.
pub fn resultant(p: &Polynomial, q: &Polynomial) -> Result<Rational> {
    exact_det(&sylvester_matrix(p, q)?)
}

/// Monic greatest common divisor by the Euclidean algorithm.
pub fn poly_gcd(p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::BothZero);
    }
    let (mut a, mut b) = (p.clone(), q.clone());
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b)?;
        // keep the remainder monic so coefficient growth stays tame
        a = b;
        b = if r.is_zero() { r } else { r.monic()? };
    }
    a.monic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use proptest::prelude::*;

    fn p(cs: &[i64]) -> Polynomial {
        Polynomial::from_ints(cs)
    }

    #[test]
    fn eval_examples() {
        assert_eq!(poly_eval(&p(&[-1, 0, 1]), &int(1)), int(0));
        assert_eq!(poly_eval(&p(&[-1, 0, 1]), &int(3)), int(8));
        assert_eq!(poly_eval(&Polynomial::zero(), &int(5)), int(0));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(poly_mul(&p(&[-1, 1]), &p(&[1, 1])), p(&[-1, 0, 1]));
        assert_eq!(
            poly_mul(&p(&[3, 1]), &Polynomial::zero()),
            Polynomial::zero()
        );
        assert_eq!(poly_mul(&p(&[1, 1]), &p(&[1, 1])), p(&[1, 2, 1]));
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let z = p(&[0, 0]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(p(&[1, 2, 0]).degree(), Some(1));
    }

    #[test]
    fn series_inverse_examples() {
        let ints = |v: &[i64]| v.iter().map(|&c| int(c)).collect::<Vec<_>>();
        assert_eq!(
            series_inverse(&p(&[1, -1]), 3).unwrap(),
            ints(&[1, 1, 1, 1])
        );
        assert_eq!(
            series_inverse(&p(&[1, 0, 0, -1]), 7).unwrap(),
            ints(&[1, 0, 0, 1, 0, 0, 1, 0])
        );
        assert_eq!(
            series_inverse(&p(&[1, 1]), 3).unwrap(),
            ints(&[1, -1, 1, -1])
        );
        assert_eq!(series_inverse(&p(&[0, 1]), 3), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(resultant(&p(&[-1, 0, 1]), &p(&[1, 0, 1])).unwrap(), int(4));
        assert_eq!(resultant(&p(&[-1, 0, 1]), &p(&[-1, 0, 1])).unwrap(), int(0));
        // Res(x - a, q) = q(a)
        let q = p(&[3, -2, 0, 5]);
        let a = rat(-7, 3);
        let lin = Polynomial::new(vec![-a.clone(), int(1)]);
        assert_eq!(resultant(&lin, &q).unwrap(), q.eval(&a));
        assert_eq!(
            resultant(&Polynomial::zero(), &q),
            Err(Error::ZeroPolynomial)
        );
        // constant second argument: lc(q)^n
        assert_eq!(resultant(&p(&[1, 0, 1]), &p(&[3])).unwrap(), int(9));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(
            poly_gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(),
            p(&[-1, 1])
        );
        assert_eq!(poly_gcd(&p(&[-1, 0, 1]), &p(&[1, 0, 1])).unwrap(), p(&[1]));
        assert_eq!(
            poly_gcd(&p(&[2, 0, 4]), &Polynomial::zero()).unwrap(),
            Polynomial::new(vec![rat(1, 2), int(0), int(1)])
        );
        assert_eq!(
            poly_gcd(&Polynomial::zero(), &Polynomial::zero()),
            Err(Error::BothZero)
        );
    }

    #[test]
    fn render_round_numbers() {
        let q = Polynomial::new(vec![int(-7), rat(3, 2), int(0), int(0), int(1)]);
        assert_eq!(q.render("y"), "y^4 + 3/2*y - 7");
        assert_eq!(p(&[0, -1]).render("x"), "-x");
        assert_eq!(Polynomial::zero().render("x"), "0");
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[5, -3, 0, 2, 7]);
        let b = p(&[1, 2, 3]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree().unwrap_or(0) < 2);
    }

    fn from_roots(roots: &[i64]) -> Polynomial {
        roots
            .iter()
            .fold(Polynomial::one(), |acc, &r| &acc * &p(&[-r, 1]))
    }

    proptest! {
        #[test]
        fn series_inverse_is_inverse(cs in prop::collection::vec(-6i64..6, 1..7), k in 0usize..=16) {
            let mut cs = cs;
            if cs[0] == 0 { cs[0] = 1; }
            let poly = p(&cs);
            let inv = Polynomial::new(series_inverse(&poly, k).unwrap());
            let prod = &poly * &inv;
            prop_assert_eq!(prod.coeff(0), int(1));
            for i in 1..=k {
                prop_assert_eq!(prod.coeff(i), int(0));
            }
        }

        #[test]
        fn resultant_is_root_product(xs in prop::collection::vec(-4i64..4, 1..=5),
                                     ys in prop::collection::vec(-4i64..4, 1..=5)) {
            let mut expect = int(1);
            for x in &xs {
                for y in &ys {
                    expect *= int(x - y);
                }
            }
            prop_assert_eq!(resultant(&from_roots(&xs), &from_roots(&ys)).unwrap(), expect);
        }

        #[test]
        fn resultant_vanishes_iff_common_factor(a in prop::collection::vec(-3i64..3, 2..5),
                                                b in prop::collection::vec(-3i64..3, 2..5)) {
            let (pa, pb) = (p(&a), p(&b));
            prop_assume!(pa.degree().unwrap_or(0) >= 1 && pb.degree().unwrap_or(0) >= 1);
            let r = resultant(&pa, &pb).unwrap();
            let g = poly_gcd(&pa, &pb).unwrap();
            prop_assert_eq!(r.is_zero(), g.degree().unwrap() >= 1);
        }
    }
}
