//! The general exact evaluator: `per(1/(x_i - y_j)) = det(H(X) E(Y)) / R(X, Y)`
//! computed from coefficients alone, plus the floating routes wrapped in the
//! same result type.

use std::fmt;

use num_complex::Complex64;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{exact_det, resultant, series_inverse, Polynomial, Rational, RationalMatrix};
use crate::oracle::{brute_permanent, find_roots, involution_sum, ComplexVector};

/// Which code path produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Theorem1,
    Fes,
    FesTilde,
    ClosedForm,
    Oracle,
    Involution,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Theorem1 => "theorem1",
            Method::Fes => "fes",
            Method::FesTilde => "fes_tilde",
            Method::ClosedForm => "closed_form",
            Method::Oracle => "oracle",
            Method::Involution => "involution",
        }
    }

    pub fn is_exact(self) -> bool {
        !matches!(self, Method::Oracle | Method::Involution)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An exact rational from the coefficient routes or a complex float from the
/// root-based ones.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Exact(Rational),
    Approx(Complex64),
}

impl Value {
    pub fn exact(&self) -> Option<&Rational> {
        match self {
            Value::Exact(r) => Some(r),
            Value::Approx(_) => None,
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            Value::Exact(r) => Complex64::new(crate::exact::to_f64(r), 0.0),
            Value::Approx(z) => *z,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(r) => write!(f, "{r}"),
            Value::Approx(z) if z.im == 0.0 => write!(f, "{}", z.re),
            Value::Approx(z) => write!(f, "{z}"),
        }
    }
}

/// A permanent value with the route that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalResult {
    pub value: Value,
    pub method: Method,
    pub n: usize,
    pub m: usize,
    pub notes: Vec<String>,
}

impl EvalResult {
    pub fn exact(value: Rational, method: Method, n: usize, m: usize) -> Self {
        Self {
            value: Value::Exact(value),
            method,
            n,
            m,
            notes: Vec::new(),
        }
    }

    pub fn approx(value: Complex64, method: Method, n: usize, m: usize) -> Self {
        Self {
            value: Value::Approx(value),
            method,
            n,
            m,
            notes: Vec::new(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// The exact value; panics on a floating route.
    pub fn rational(&self) -> &Rational {
        self.value.exact().expect("exact route")
    }
}

pub const VANISH_NOTE: &str = "n>m: permanent vanishes";

fn degree_of(p: &Polynomial) -> Result<usize> {
    p.degree().ok_or(Error::ZeroPolynomial)
}

/// The n x (m+n-1) matrix `(h_{j-i}(X))` of a monic P of degree n.
pub fn build_h(p: &Polynomial, m: usize) -> Result<RationalMatrix> {
    let n = degree_of(p)?;
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    let p = p.monic()?;
    let width = m + n - 1;
    let h = series_inverse(&p.reversed(), width)?;
    Ok(RationalMatrix::from_fn(n, width, |i, j| {
        if j >= i {
            h[j - i].clone()
        } else {
            Rational::zero()
        }
    }))
}

/// The (m+n-1) x n matrix with 1-based entry `(j - 2k + 2) a_{j-k+1}`, where
/// `a_r` is the coefficient of `y^r` in monic Q. This is the signed
/// elementary-function matrix `((j-2k+2)(-1)^(m-j+k-1) e_{m-j+k-1}(Y))`
/// written in coefficients.
pub fn build_e(q: &Polynomial, n: usize) -> Result<RationalMatrix> {
    let m = degree_of(q)?;
    let q = q.monic()?;
    let rows = (m + n).saturating_sub(1);
    Ok(RationalMatrix::from_fn(rows, n, |j, k| {
        // 0-based: factor j - 2k + 1, coefficient index j - k + 1
        if j + 1 < k || j + 1 - k > m {
            return Rational::zero();
        }
        let factor = j as i64 - 2 * k as i64 + 1;
        q.coeff(j + 1 - k) * Rational::from_integer(factor.into())
    }))
}

/// `H(X) E(Y)`, the n x n numerator matrix.
pub fn numerator_matrix(p: &Polynomial, q: &Polynomial) -> Result<RationalMatrix> {
    let n = degree_of(p)?;
    build_h(p, degree_of(q)?)?.mul(&build_e(q, n)?)
}

/// Monic degrees `(n, m)` plus the monic resultant; `SharedRoot` when it
/// vanishes.
pub(crate) fn checked_setup(p: &Polynomial, q: &Polynomial) -> Result<(usize, usize, Rational)> {
    let n = degree_of(p)?;
    let m = degree_of(q)?;
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    let r = resultant(&p.monic()?, &q.monic()?)?;
    if r.is_zero() {
        return Err(Error::SharedRoot);
    }
    Ok((n, m, r))
}

/// Exact `PER(P, Q)`. Both inputs are normalized to monic first.
pub fn scott_permanent(p: &Polynomial, q: &Polynomial) -> Result<EvalResult> {
    let (n, m, r) = checked_setup(p, q)?;
    if n > m {
        return Ok(
            EvalResult::exact(Rational::zero(), Method::Theorem1, n, m).with_note(VANISH_NOTE)
        );
    }
    let num = exact_det(&numerator_matrix(p, q)?)?;
    Ok(EvalResult::exact(num / r, Method::Theorem1, n, m))
}

fn roots_or_empty(q: &Polynomial) -> Result<ComplexVector> {
    match find_roots(q) {
        Err(Error::ZeroDegree) => Ok(ComplexVector::default()),
        other => other,
    }
}

fn singular_as_shared(e: Error) -> Error {
    match e {
        Error::SingularEntry { .. } => Error::SharedRoot,
        other => other,
    }
}

/// Numeric permanent over floating roots of P and Q.
pub fn oracle_permanent(p: &Polynomial, q: &Polynomial) -> Result<EvalResult> {
    let (n, m, _) = checked_setup(p, q)?;
    let x = find_roots(p)?;
    let y = roots_or_empty(q)?;
    let v = brute_permanent(&x, &y).map_err(singular_as_shared)?;
    Ok(EvalResult::approx(v, Method::Oracle, n, m))
}

/// Numeric involution expansion over floating roots of P and Q.
pub fn involution_permanent(p: &Polynomial, q: &Polynomial) -> Result<EvalResult> {
    let (n, m, _) = checked_setup(p, q)?;
    let x = find_roots(p)?;
    let y = roots_or_empty(q)?;
    let v = involution_sum(&x, &y).map_err(singular_as_shared)?;
    Ok(EvalResult::approx(v, Method::Involution, n, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use crate::oracle::approx_eq;

    fn p(cs: &[i64]) -> Polynomial {
        Polynomial::from_ints(cs)
    }

    fn xn(n: usize, c: i64) -> Polynomial {
        let mut cs = vec![0; n + 1];
        cs[0] = c;
        cs[n] = 1;
        p(&cs)
    }

    #[test]
    fn h_for_linear_and_quadratic() {
        let h = build_h(&p(&[-3, 1]), 2).unwrap();
        assert_eq!(h.entries(), &[int(1), int(3)]);
        let h = build_h(&p(&[-1, 0, 1]), 1).unwrap();
        assert_eq!(h, RationalMatrix::identity(2));
    }

    #[test]
    fn e_single_column() {
        let e = build_e(&p(&[-5, 1]), 1).unwrap();
        assert_eq!(e.entries(), &[int(1)]);
        // n = 1: column (1 a_1, 2 a_2, ..., m a_m)
        let e = build_e(&p(&[7, 2, -1, 1]), 1).unwrap();
        assert_eq!(e.entries(), &[int(2), int(-2), int(3)]);
    }

    #[test]
    fn scott_values() {
        assert_eq!(
            scott_permanent(&xn(2, -1), &xn(2, 1)).unwrap().rational(),
            &int(0)
        );
        assert_eq!(
            scott_permanent(&xn(3, -1), &xn(3, 1)).unwrap().rational(),
            &rat(-3, 8)
        );
        assert_eq!(
            scott_permanent(&xn(3, -1), &xn(4, 1)).unwrap().rational(),
            &int(12)
        );
        let q = p(&[1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(scott_permanent(&xn(3, -1), &q).unwrap().rational(), &int(6));
    }

    #[test]
    fn shared_root_and_degrees() {
        assert_eq!(
            scott_permanent(&xn(2, -1), &xn(2, -1)),
            Err(Error::SharedRoot)
        );
        assert_eq!(
            scott_permanent(&p(&[3]), &xn(2, -1)),
            Err(Error::ZeroDegree)
        );
        let r = scott_permanent(&xn(2, -1), &p(&[4])).unwrap();
        assert_eq!(r.rational(), &int(0));
        assert_eq!(r.notes, vec![VANISH_NOTE.to_string()]);
    }

    #[test]
    fn vanishing_numerator_when_n_exceeds_m() {
        let num = numerator_matrix(&xn(4, -1), &p(&[2, 0, 0, 1])).unwrap();
        assert_eq!(exact_det(&num).unwrap(), int(0));
    }

    #[test]
    fn scaling_q_is_invisible() {
        let pp = p(&[1, -2, 0, 1]);
        let q = p(&[3, 1, 0, -1, 2]);
        let a = scott_permanent(&pp, &q).unwrap();
        let b = scott_permanent(&pp, &q.scale(&rat(-7, 3))).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn floating_routes_agree() {
        let pp = p(&[2, -1, 0, 1]);
        let q = p(&[-1, 3, 1, 0, 1]);
        let exact = scott_permanent(&pp, &q).unwrap().value.to_complex();
        let o = oracle_permanent(&pp, &q).unwrap();
        let i = involution_permanent(&pp, &q).unwrap();
        assert!(approx_eq(o.value.to_complex(), exact, 1e-8));
        assert!(approx_eq(i.value.to_complex(), exact, 1e-8));
        assert_eq!(
            oracle_permanent(&xn(2, -1), &xn(2, -1)),
            Err(Error::SharedRoot)
        );
    }
}
