//! Specialized numerators for `P = x^n - 1` and `P = x^(n-1) + ... + x + 1`,
//! built from broken diagonals of the coefficients of Q, and the closed-form
//! resultant of two binomials.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{exact_det, int, pow, resultant, Polynomial, Rational, RationalMatrix};
use crate::scott::{EvalResult, Method, VANISH_NOTE};

/// An n x n matrix whose only nonzero entries lie on one diagonal that
/// starts in row `start_row` (1-based) and wraps around modulo n.
#[derive(Debug, Clone, PartialEq)]
pub struct BrokenDiagonalSpec {
    pub size: usize,
    pub start_row: usize,
    pub values: Vec<Rational>,
}

/// `c_k` goes to column k and row `((start_row - 1 + k - 1) mod n) + 1`.
pub fn broken_diag(spec: &BrokenDiagonalSpec) -> Result<RationalMatrix> {
    let n = spec.size;
    if spec.start_row == 0 || spec.start_row > n {
        return Err(Error::BadParams(format!(
            "start row {} outside 1..={n}",
            spec.start_row
        )));
    }
    if spec.values.len() != n {
        return Err(Error::BadParams(format!(
            "expected {n} values, got {}",
            spec.values.len()
        )));
    }
    let mut m = RationalMatrix::zeros(n, n);
    for (k, c) in spec.values.iter().enumerate() {
        m[((spec.start_row - 1 + k) % n, k)] = c.clone();
    }
    Ok(m)
}

/// The (n-1) x (n-1) diagonal that starts in row i and skips one row and
/// column when it wraps: `c_1..c_{n-i}` run down from `(i, 1)`, `c_{n-i+1}`
/// is dropped, and `c_{n-i+2}..c_{n-1}` continue from `(1, n-i+2)`. For
/// `i = 1` it is the plain diagonal.
pub fn jump_diag(n: usize, start_row: usize, values: &[Rational]) -> Result<RationalMatrix> {
    if n < 2 {
        return Err(Error::BadParams("jump diagonal needs n >= 2".into()));
    }
    let size = n - 1;
    if start_row == 0 || start_row > n {
        return Err(Error::BadParams(format!(
            "start row {start_row} outside 1..={n}"
        )));
    }
    if values.len() != size {
        return Err(Error::BadParams(format!(
            "expected {size} values, got {}",
            values.len()
        )));
    }
    let mut m = RationalMatrix::zeros(size, size);
    if start_row == 1 {
        for (k, c) in values.iter().enumerate() {
            m[(k, k)] = c.clone();
        }
        return Ok(m);
    }
    let i = start_row;
    for k in 0..n - i {
        m[(i - 1 + k, k)] = values[k].clone();
    }
    for (t, col) in (n - i + 1..size).enumerate() {
        m[(t, col)] = values[col].clone();
    }
    Ok(m)
}

/// `r mod n` taken in `1..=n`.
fn residue(r: i64, n: usize) -> usize {
    match r.rem_euclid(n as i64) as usize {
        0 => n,
        v => v,
    }
}

fn shifted_coeffs(q: &Polynomial, r: usize, len: usize) -> Vec<Rational> {
    let a = q.coeff(r);
    (0..len).map(|k| &a * int(r as i64 - k as i64)).collect()
}

/// `sum_r diag_n^{r%n}(r a_r, (r-1) a_r, ..., (r-n+1) a_r)`.
pub fn fes_matrix(q: &Polynomial, n: usize) -> Result<RationalMatrix> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    let m = q.degree().ok_or(Error::ZeroPolynomial)?;
    let mut acc = RationalMatrix::zeros(n, n);
    for r in 0..=m {
        let spec = BrokenDiagonalSpec {
            size: n,
            start_row: residue(r as i64, n),
            values: shifted_coeffs(q, r, n),
        };
        acc = acc.add(&broken_diag(&spec)?)?;
    }
    Ok(acc)
}

/// Numerator of `PER(x^n - 1, Q)`. Q is used as given, not normalized.
pub fn fes(q: &Polynomial, n: usize) -> Result<Rational> {
    exact_det(&fes_matrix(q, n)?)
}

/// `sum_r jdiag^{r%n}(c) - sum_r jdiag^{(r-1)%n}(c)` with `c_k = (r-k) a_r`.
pub fn fes_tilde_matrix(q: &Polynomial, n: usize) -> Result<RationalMatrix> {
    if n < 2 {
        return Err(Error::ZeroDegree);
    }
    let m = q.degree().ok_or(Error::ZeroPolynomial)?;
    let mut acc = RationalMatrix::zeros(n - 1, n - 1);
    for r in 0..=m {
        let c = shifted_coeffs(q, r, n - 1);
        acc = acc.add(&jump_diag(n, residue(r as i64, n), &c)?)?;
        acc = acc.sub(&jump_diag(n, residue(r as i64 - 1, n), &c)?)?;
    }
    Ok(acc)
}

/// Numerator of `PER(x^(n-1) + ... + 1, Q)`.
pub fn fes_tilde(q: &Polynomial, n: usize) -> Result<Rational> {
    exact_det(&fes_tilde_matrix(q, n)?)
}

/// `Res(A x^m - B, C x^n - D) = (-1)^m (A^(n/d) D^(m/d) - B^(n/d) C^(m/d))^d`,
/// `d = gcd(m, n)`.
pub fn special_resultant(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    d: &Rational,
    m: usize,
    n: usize,
) -> Result<Rational> {
    if a.is_zero() || c.is_zero() {
        return Err(Error::ZeroLeadingCoefficient);
    }
    if m == 0 && n == 0 {
        return Ok(Rational::one());
    }
    let g = m.gcd(&n);
    let inner = pow(a, n / g) * pow(d, m / g) - pow(b, n / g) * pow(c, m / g);
    let v = pow(&inner, g);
    Ok(if m.is_multiple_of(2) { v } else { -v })
}

/// The two P families with a broken-diagonal numerator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PKind {
    /// `x^n - 1`
    PowerMinusOne,
    /// `x^(n-1) + ... + x + 1`, of degree n - 1
    AllOnes,
}

impl PKind {
    pub fn polynomial(self, n: usize) -> Polynomial {
        match self {
            PKind::PowerMinusOne => Polynomial::power_minus_one(n),
            PKind::AllOnes => Polynomial::all_ones(n),
        }
    }

    /// Recognizes P after monic normalization, returning the kind and n.
    pub fn detect(p: &Polynomial) -> Option<(PKind, usize)> {
        let p = p.monic().ok()?;
        let deg = p.degree()?;
        if deg >= 1 && p == Polynomial::power_minus_one(deg) {
            Some((PKind::PowerMinusOne, deg))
        } else if deg >= 1 && p == Polynomial::all_ones(deg + 1) {
            Some((PKind::AllOnes, deg + 1))
        } else {
            None
        }
    }
}

/// `(C, D, k)` when `Q = C y^k - D`.
fn binomial_shape(q: &Polynomial) -> Option<(Rational, Rational, usize)> {
    let k = q.degree()?;
    let middle_zero = (1..k).all(|i| q.coeff(i).is_zero());
    middle_zero.then(|| (q.coeff(k), -q.coeff(0), k))
}

/// `Res(P, Q)` for a family P, via the binomial closed form when Q allows it.
fn family_resultant(kind: PKind, n: usize, q: &Polynomial) -> Result<(Rational, bool)> {
    let p = kind.polynomial(n);
    let Some((c, d, k)) = binomial_shape(q) else {
        return Ok((resultant(&p, q)?, false));
    };
    let full = special_resultant(&Rational::one(), &Rational::one(), &c, &d, n, k)?;
    match kind {
        PKind::PowerMinusOne => Ok((full, true)),
        PKind::AllOnes => {
            // Res(x^n - 1, Q) = Res(x - 1, Q) Res(all ones, Q) and Res(x - 1, Q) = Q(1)
            let at_one = q.eval(&Rational::one());
            if at_one.is_zero() {
                Ok((resultant(&p, q)?, false))
            } else {
                Ok((full / at_one, true))
            }
        }
    }
}

/// `PER(P, Q)` for a family P through its broken-diagonal numerator.
pub fn per_via_fes(kind: PKind, n: usize, q: &Polynomial) -> Result<EvalResult> {
    let deg_p = match kind {
        PKind::PowerMinusOne => n,
        PKind::AllOnes => n.saturating_sub(1),
    };
    if deg_p == 0 {
        return Err(Error::ZeroDegree);
    }
    let m = q.degree().ok_or(Error::ZeroPolynomial)?;
    let (res, shortcut) = family_resultant(kind, n, q)?;
    if res.is_zero() {
        return Err(Error::SharedRoot);
    }
    let (num, method) = match kind {
        PKind::PowerMinusOne => (fes(q, n)?, Method::Fes),
        PKind::AllOnes => (fes_tilde(q, n)?, Method::FesTilde),
    };
    let mut out = EvalResult::exact(num / res, method, deg_p, m);
    if shortcut {
        out = out.with_note("resultant from the binomial closed form");
    }
    if deg_p > m {
        out = out.with_note(VANISH_NOTE);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::scott::scott_permanent;
    use proptest::prelude::*;

    fn p(cs: &[i64]) -> Polynomial {
        Polynomial::from_ints(cs)
    }

    #[test]
    fn residue_is_one_based() {
        assert_eq!(residue(3, 3), 3);
        assert_eq!(residue(0, 3), 3);
        assert_eq!(residue(4, 3), 1);
        assert_eq!(residue(-1, 4), 3);
    }

    #[test]
    fn broken_diagonal_shapes() {
        let vals = vec![int(1), int(2), int(3)];
        let plain = broken_diag(&BrokenDiagonalSpec {
            size: 3,
            start_row: 1,
            values: vals.clone(),
        })
        .unwrap();
        assert_eq!(
            plain.entries(),
            &[
                int(1),
                int(0),
                int(0),
                int(0),
                int(2),
                int(0),
                int(0),
                int(0),
                int(3)
            ]
        );
        let wrapped = broken_diag(&BrokenDiagonalSpec {
            size: 3,
            start_row: 3,
            values: vals,
        })
        .unwrap();
        assert_eq!(wrapped[(2, 0)], int(1));
        assert_eq!(wrapped[(0, 1)], int(2));
        assert_eq!(wrapped[(1, 2)], int(3));
        let two = broken_diag(&BrokenDiagonalSpec {
            size: 2,
            start_row: 2,
            values: vec![int(5), int(7)],
        })
        .unwrap();
        assert_eq!(two.entries(), &[int(0), int(7), int(5), int(0)]);
        assert!(broken_diag(&BrokenDiagonalSpec {
            size: 2,
            start_row: 3,
            values: vec![int(5), int(7)]
        })
        .is_err());
    }

    #[test]
    fn jump_diagonal_skips_one_slot() {
        // n = 4, i = 3: c_1 at (3,1), c_2 dropped, c_3 at (1,3)
        let m = jump_diag(4, 3, &[int(1), int(2), int(3)]).unwrap();
        let mut want = RationalMatrix::zeros(3, 3);
        want[(2, 0)] = int(1);
        want[(0, 2)] = int(3);
        assert_eq!(m, want);
        let m = jump_diag(4, 4, &[int(1), int(2), int(3)]).unwrap();
        let mut want = RationalMatrix::zeros(3, 3);
        want[(0, 1)] = int(2);
        want[(1, 2)] = int(3);
        assert_eq!(m, want);
    }

    #[test]
    fn fes_small_cases() {
        assert_eq!(fes(&p(&[-3, 1]), 1).unwrap(), int(1));
        let r = per_via_fes(PKind::PowerMinusOne, 3, &p(&[1, 0, 0, 1])).unwrap();
        assert_eq!(r.rational(), &rat(-3, 8));
        assert_eq!(r.method, Method::Fes);
        for n in 2..=6 {
            let mut cs = vec![0; 2 * n + 1];
            cs[0] = 1;
            cs[n] = 1;
            cs[2 * n] = 1;
            let want = (1..=n as i64).product::<i64>() * if n % 2 == 1 { 1 } else { -1 };
            assert_eq!(
                per_via_fes(PKind::PowerMinusOne, n, &p(&cs))
                    .unwrap()
                    .rational(),
                &int(want)
            );
        }
    }

    #[test]
    fn fes_tilde_small_cases() {
        // m = 3, n = 2: (-1)^3 (m - 1) / n = -1
        let r = per_via_fes(PKind::AllOnes, 2, &p(&[1, 1, 1])).unwrap();
        assert_eq!(r.method, Method::FesTilde);
        assert_eq!(
            r.rational(),
            &scott_permanent(&p(&[1, 1]), &p(&[1, 1, 1]))
                .unwrap()
                .rational()
                .clone()
        );
        let q = Polynomial::from_terms((0..6).map(|l| (l, int(l as i64))));
        assert_eq!(
            per_via_fes(PKind::AllOnes, 3, &q).unwrap().rational(),
            &int(20)
        );
    }

    #[test]
    fn binomial_resultants() {
        let one = Rational::one();
        assert_eq!(
            special_resultant(&one, &one, &one, &-one.clone(), 2, 2).unwrap(),
            int(4)
        );
        assert_eq!(
            special_resultant(&one, &one, &one, &one, 3, 3).unwrap(),
            int(0)
        );
        assert_eq!(
            special_resultant(&int(0), &one, &one, &one, 3, 3),
            Err(Error::ZeroLeadingCoefficient)
        );
    }

    #[test]
    fn shared_root_rejected() {
        assert_eq!(
            per_via_fes(PKind::PowerMinusOne, 2, &p(&[-1, 0, 1])),
            Err(Error::SharedRoot)
        );
        assert_eq!(
            per_via_fes(PKind::AllOnes, 3, &p(&[1, 1, 1])),
            Err(Error::SharedRoot)
        );
    }

    #[test]
    fn detection() {
        assert_eq!(
            PKind::detect(&p(&[-2, 0, 0, 2])),
            Some((PKind::PowerMinusOne, 3))
        );
        assert_eq!(PKind::detect(&p(&[1, 1, 1])), Some((PKind::AllOnes, 3)));
        assert_eq!(PKind::detect(&p(&[1, 2, 1])), None);
    }

    fn small_poly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(-5i64..=5, 1..=max_deg + 1).prop_map(|cs| Polynomial::from_ints(&cs))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn routes_match_theorem1(n in 1usize..=5, q in small_poly(8)) {
            prop_assume!(q.degree().unwrap_or(0) >= 1);
            for kind in [PKind::PowerMinusOne, PKind::AllOnes] {
                let pp = kind.polynomial(n);
                if pp.degree() == Some(0) { continue; }
                match (per_via_fes(kind, n, &q), scott_permanent(&pp, &q)) {
                    (Ok(a), Ok(b)) => prop_assert_eq!(a.rational(), b.rational()),
                    (Err(a), Err(b)) => prop_assert_eq!(a, b),
                    (a, b) => prop_assert!(false, "{:?} vs {:?}", a, b),
                }
            }
        }

        #[test]
        fn fes_is_homogeneous(n in 1usize..=4, q in small_poly(6), num in -6i64..=6, den in 1i64..=4) {
            prop_assume!(num != 0 && !q.is_zero());
            let lam = rat(num, den);
            prop_assert_eq!(fes(&q.scale(&lam), n).unwrap(), pow(&lam, n) * fes(&q, n).unwrap());
        }

        #[test]
        fn special_resultant_matches_sylvester(
            a in -4i64..=4, b in -4i64..=4, c in -4i64..=4, d in -4i64..=4, m in 1usize..=6, n in 1usize..=6,
        ) {
            prop_assume!(a != 0 && c != 0);
            let lhs = Polynomial::from_terms([(m, int(a)), (0, int(-b))]);
            let rhs = Polynomial::from_terms([(n, int(c)), (0, int(-d))]);
            prop_assert_eq!(
                special_resultant(&int(a), &int(b), &int(c), &int(d), m, n).unwrap(),
                resultant(&lhs, &rhs).unwrap()
            );
        }
    }
}
