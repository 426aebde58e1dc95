//! The closed-form corpus. Every entry pairs a polynomial family with the
//! exact value of its permanent.

use num_integer::Integer;
use num_traits::{One, Zero};

use super::{CatalogEntry, Params};
use crate::error::{Error, Result};
use crate::exact::{int, pochhammer, pow, rat, Polynomial, Rational};

type Family = (Polynomial, Polynomial);

fn ensure(cond: bool, reason: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::OutOfDomain {
            id: String::new(),
            reason: reason.into(),
        })
    }
}

fn xn1(n: usize) -> Polynomial {
    Polynomial::power_minus_one(n)
}

fn terms<I: IntoIterator<Item = (usize, Rational)>>(it: I) -> Polynomial {
    Polynomial::from_terms(it)
}

/// `(-1)^k`
fn sign(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn rint(v: usize) -> Rational {
    int(v as i64)
}

/// `m (m-1) ... (m-k+1)`
fn falling(m: &Rational, k: usize) -> Rational {
    (0..k).map(|i| m - rint(i)).product()
}

fn factorial(k: usize) -> Rational {
    (1..=k).map(rint).product()
}

/// `base^e` for a possibly negative exponent.
fn signed_pow(base: &Rational, e: i64) -> Rational {
    if e >= 0 {
        pow(base, e as usize)
    } else {
        pow(base, (-e) as usize).recip()
    }
}

fn positive(p: &Params, name: &str) -> Result<usize> {
    let v = p.count(name)?;
    ensure(v >= 1, format!("{name} ≥ 1"))?;
    Ok(v)
}

fn at_least(p: &Params, name: &str, lo: usize) -> Result<usize> {
    let v = p.count(name)?;
    ensure(v >= lo, format!("{name} ≥ {lo}"))?;
    Ok(v)
}

// ---- recognition helpers ----

fn detect_xn1(p: &Polynomial) -> Option<usize> {
    let p = p.monic().ok()?;
    let n = p.degree()?;
    (n >= 1 && p == xn1(n)).then_some(n)
}

fn detect_xn_plus1(p: &Polynomial) -> Option<usize> {
    let p = p.monic().ok()?;
    let n = p.degree()?;
    (n >= 1 && p == terms([(n, int(1)), (0, int(1))])).then_some(n)
}

fn detect_ones(p: &Polynomial) -> Option<usize> {
    let p = p.monic().ok()?;
    let d = p.degree()?;
    (d >= 1 && p == Polynomial::all_ones(d + 1)).then_some(d + 1)
}

fn support(q: &Polynomial) -> Vec<usize> {
    q.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, _)| i)
        .collect()
}

fn min_positive_exponent(q: &Polynomial) -> Option<usize> {
    support(q).into_iter().find(|&e| e > 0)
}

/// `a` from `c_l = λ (l s + a)` read off the two lowest slots.
fn linear_offset(q: &Polynomial, step: usize) -> Option<Rational> {
    let lam = q.coeff(step) - q.coeff(0);
    (!lam.is_zero()).then(|| q.coeff(0) / lam)
}

fn exact_div(a: usize, b: usize) -> Option<usize> {
    (b != 0 && a.is_multiple_of(b)).then(|| a / b)
}

// ---- thm10 and the entries that specialize it ----

fn thm10_value(n: usize, r: usize, a: &[Rational], b: &[Rational]) -> Result<Rational> {
    let d = n.gcd(&r);
    let big_n = n / d;
    let sa: Rational = a.iter().sum();
    let sb: Rational = b.iter().sum();
    let den = pow(&(pow(&sa, big_n) - pow(&-sb.clone(), big_n)), d);
    ensure(!den.is_zero(), "(Σa)^(n/d) ≠ (−Σb)^(n/d)")?;
    let dd = rint(d);
    let mut num = Rational::one();
    for i in 1..=d {
        let u: Rational = a
            .iter()
            .enumerate()
            .map(|(l, al)| int(i as i64 - (n * l) as i64 - 1) * al)
            .sum::<Rational>()
            / &dd;
        let v: Rational = b
            .iter()
            .enumerate()
            .map(|(l, bl)| int(i as i64 - r as i64 - (n * l) as i64 - 1) * bl)
            .sum::<Rational>()
            / &dd;
        let t1: Rational = (0..big_n).map(|k| &u + rint(k) * &sa).product();
        let t2: Rational = (0..big_n).map(|k| &v + rint(k) * &sb).product();
        num *= t1 - sign(big_n) * t2;
    }
    Ok(-pow(&dd, n) * num / den)
}

fn thm10() -> CatalogEntry {
    CatalogEntry {
        id: "thm10",
        statement: "PER(x^n - 1, Σ_l as[l] y^(l n) + Σ_l bs[l] y^(l n + r)) = −d^n ∏_{i=1..d}((Σa)^(n/d)(u_i/(d Σa))_(n/d) − (−Σb)^(n/d)(v_i/(d Σb))_(n/d)) / ((Σa)^(n/d) − (−Σb)^(n/d))^d, d = gcd(n, r), u_i = Σ(i − n l − 1) as[l], v_i = Σ(i − r − n l − 1) bs[l]",
        params: &["n", "r", "as", "bs"],
        domain: "n, r ≥ 1; (Σa)^(n/d) ≠ (−Σb)^(n/d)",
        check: |p| {
            positive(p, "n")?;
            positive(p, "r")?;
            p.rationals("as")?;
            p.rationals("bs")?;
            Ok(())
        },
        family: |p| {
            let (n, r) = (p.count("n")?, p.count("r")?);
            let a = p.rationals("as")?;
            let b = p.rationals("bs")?;
            let q = terms(a.into_iter().enumerate().map(|(l, c)| (l * n, c)).chain(b.into_iter().enumerate().map(|(l, c)| (l * n + r, c))));
            Ok((xn1(n), q))
        },
        closed_form: |p| thm10_value(p.count("n")?, p.count("r")?, &p.rationals("as")?, &p.rationals("bs")?),
        grid: || {
            let a_lists: Vec<Vec<i64>> = vec![vec![1], vec![0, 1], vec![1, 1], vec![2, 0, 1], vec![-1, 3], vec![1, -1, 1]];
            let b_lists: Vec<Vec<i64>> = vec![vec![], vec![1], vec![0, 1], vec![2, -1], vec![1, 1, 1]];
            let mut out = Vec::new();
            for n in 1..=4 {
                for r in 1..=n + 1 {
                    for a in &a_lists {
                        for b in &b_lists {
                            out.push(Params::new().int("n", n as i64).int("r", r as i64).list("as", a.iter().map(|&v| int(v)).collect()).list("bs", b.iter().map(|&v| int(v)).collect()));
                        }
                    }
                }
            }
            out
        },
        recognize: |p, q| {
            let n = detect_xn1(p)?;
            let deg = q.degree()?;
            let r = support(q).into_iter().find(|e| e % n != 0);
            let a = (0..=deg / n).map(|l| q.coeff(l * n)).collect();
            let b = match r {
                Some(r) => (0..=(deg - r) / n).map(|l| q.coeff(l * n + r)).collect(),
                None => Vec::new(),
            };
            Some(Params::new().int("n", n as i64).int("r", r.unwrap_or(1) as i64).list("as", a).list("bs", b))
        },
    }
}

fn cor11() -> CatalogEntry {
    CatalogEntry {
        id: "cor11",
        statement: "PER(x^n - 1, Σ_l as[l] y^(l n)) = −(−n Σ l·as[l] / Σ as[l])_n",
        params: &["n", "as"],
        domain: "n ≥ 1; Σ as ≠ 0",
        check: |p| {
            positive(p, "n")?;
            let a = p.rationals("as")?;
            ensure(!a.iter().sum::<Rational>().is_zero(), "Σ as ≠ 0")
        },
        family: |p| {
            let n = p.count("n")?;
            Ok((
                xn1(n),
                terms(
                    p.rationals("as")?
                        .into_iter()
                        .enumerate()
                        .map(|(l, c)| (l * n, c)),
                ),
            ))
        },
        closed_form: |p| {
            let n = p.count("n")?;
            let a = p.rationals("as")?;
            let s: Rational = a.iter().sum();
            let w: Rational = a.iter().enumerate().map(|(l, c)| rint(l) * c).sum();
            Ok(-pochhammer(&(-rint(n) * w / s), n))
        },
        grid: || {
            let mut out = Vec::new();
            for n in 1..=5usize {
                for m in 1..=4usize {
                    let lists: Vec<Vec<Rational>> = vec![
                        vec![int(1); m + 1],
                        (0..=m).map(|l| rint(l + 1)).collect(),
                        (0..=m).map(sign).collect(),
                        (0..=m)
                            .map(|l| {
                                if l == 0 {
                                    int(2)
                                } else if l == m {
                                    int(1)
                                } else {
                                    int(0)
                                }
                            })
                            .collect(),
                        (0..=m).map(|l| rat(l as i64 * 3 - 1, 2)).collect(),
                    ];
                    for a in lists {
                        out.push(Params::new().int("n", n as i64).list("as", a));
                    }
                }
            }
            out
        },
        recognize: |p, q| {
            let n = detect_xn1(p)?;
            let deg = q.degree()?;
            Some(
                Params::new()
                    .int("n", n as i64)
                    .list("as", (0..=deg / n).map(|l| q.coeff(l * n)).collect()),
            )
        },
    }
}

fn nm_grid(n_lo: usize, m_lo: usize) -> Vec<Params> {
    let mut out = Vec::new();
    for n in n_lo..=5 {
        for m in m_lo..=4 {
            out.push(Params::new().int("n", n as i64).int("m", m as i64));
        }
    }
    out
}

fn n_grid(lo: usize, hi: usize) -> Vec<Params> {
    (lo..=hi)
        .map(|n| Params::new().int("n", n as i64))
        .collect()
}

fn small_values() -> Vec<Rational> {
    vec![int(-1), int(0), int(1), int(2), int(3), rat(1, 2)]
}

fn cor12() -> CatalogEntry {
    CatalogEntry {
        id: "cor12",
        statement: "PER(x^n - 1, y^(mn) + ... + y^(2n) + y^n + 1) = −(−mn/2)_n",
        params: &["n", "m"],
        domain: "n, m ≥ 1",
        check: |p| {
            positive(p, "n")?;
            positive(p, "m").map(drop)
        },
        family: |p| {
            let (n, m) = (p.count("n")?, p.count("m")?);
            Ok((xn1(n), terms((0..=m).map(|l| (l * n, int(1))))))
        },
        closed_form: |p| {
            let (n, m) = (p.count("n")?, p.count("m")?);
            Ok(-pochhammer(&rat(-((m * n) as i64), 2), n))
        },
        grid: || nm_grid(1, 1),
        recognize: |p, q| {
            let n = detect_xn1(p)?;
            Some(
                Params::new()
                    .int("n", n as i64)
                    .int("m", exact_div(q.degree()?, n)? as i64),
            )
        },
    }
}

fn cor13() -> CatalogEntry {
    CatalogEntry {
        id: "cor13",
        statement: "PER(x^n + 1, y^(mn) + ... + y^(2n) + y^n + 1) = (−mn/2)_n for even m",
        params: &["n", "m"],
        domain: "n ≥ 1; m even, m ≥ 2",
        check: |p| {
            positive(p, "n")?;
            let m = positive(p, "m")?;
            ensure(m % 2 == 0, "m is even")
        },
        family: |p| {
            let (n, m) = (p.count("n")?, p.count("m")?);
            Ok((
                terms([(n, int(1)), (0, int(1))]),
                terms((0..=m).map(|l| (l * n, int(1)))),
            ))
        },
        closed_form: |p| {
            let (n, m) = (p.count("n")?, p.count("m")?);
            Ok(pochhammer(&rat(-((m * n) as i64), 2), n))
        },
        grid: || nm_grid(1, 1),
        recognize: |p, q| {
            let n = detect_xn_plus1(p)?;
            Some(
                Params::new()
                    .int("n", n as i64)
                    .int("m", exact_div(q.degree()?, n)? as i64),
            )
        },
    }
}

fn cor14() -> CatalogEntry {
    CatalogEntry {
        id: "cor14",
        statement: "PER(x^n - 1, Σ_{l=0..m} l y^(l n)) = −(−n(2m+1)/3)_n",
        params: &["n", "m"],
        domain: "n, m ≥ 1",
        check: |p| {
            positive(p, "n")?;
            positive(p, "m").map(drop)
        },
        family: |p| {
            let (n, m) = (p.count("n")?, p.count("m")?);
            Ok((xn1(n), terms((0..=m).map(|l| (l * n, rint(l))))))
        },
        closed_form: |p| {
            let (n, m) = (p.count("n")?, p.count("m")?);
            Ok(-pochhammer(&rat(-((n * (2 * m + 1)) as i64), 3), n))
        },
        grid: || nm_grid(1, 1),
        recognize: |p, q| {
            let n = detect_xn1(p)?;
            Some(
                Params::new()
                    .int("n", n as i64)
                    .int("m", exact_div(q.degree()?, n)? as i64),
            )
        },
    }
}

fn cor15() -> CatalogEntry {
    CatalogEntry {
        id: "cor15",
        statement: "PER(x^n - 1, Σ_{l=0..m} l y^(l² n)) = −(−nm(m+1)/2)_n",
        params: &["n", "m"],
        domain: "n, m ≥ 1",
        check: |p| {
            positive(p, "n")?;
            positive(p, "m").map(drop)
        },
        family: |p| {
            let (n, m) = (p.count("n")?, p.count("m")?);
            Ok((xn1(n), terms((0..=m).map(|l| (l * l * n, rint(l))))))
        },
        closed_form: |p| {
            let (n, m) = (p.count("n")?, p.count("m")?);
            Ok(-pochhammer(&rat(-((n * m * (m + 1)) as i64), 2), n))
        },
        grid: || {
            let mut out = Vec::new();
            for n in 1..=5 {
                for m in 1..=3 {
                    out.push(Params::new().int("n", n).int("m", m));
                }
            }
            out
        },
        recognize: |p, q| {
            let n = detect_xn1(p)?;
            let sq = exact_div(q.degree()?, n)?;
            let m = (1..=sq).find(|m| m * m == sq)?;
            Some(Params::new().int("n", n as i64).int("m", m as i64))
        },
    }
}

/// `y^(mn) + a y^(rn) + b`
fn trinomial(n: usize, m: usize, r: usize, a: &Rational, b: &Rational) -> Polynomial {
    terms([(m * n, int(1)), (r * n, a.clone()), (0, b.clone())])
}

fn trinomial_family(p: &Params) -> Result<Family> {
    let (n, m, r) = (p.count("n")?, p.count("m")?, p.count("r")?);
    Ok((
        xn1(n),
        trinomial(n, m, r, &p.rational("a")?, &p.rational("b")?),
    ))
}

fn trinomial_check(p: &Params) -> Result<(Rational, Rational, usize, usize)> {
    positive(p, "n")?;
    let m = positive(p, "m")?;
    let r = p.count("r")?;
    let (a, b) = (p.rational("a")?, p.rational("b")?);
    ensure(
        r != m || !(int(1) + &a).is_zero(),
        "leading coefficient 1 + a ≠ 0 when r = m",
    )?;
    ensure(!(&a + &b + int(1)).is_zero(), "a + b + 1 ≠ 0")?;
    Ok((a, b, m, r))
}

fn trinomial_recognize(p: &Polynomial, q: &Polynomial) -> Option<Params> {
    let n = detect_xn1(p)?;
    let q = q.monic().ok()?;
    let deg = q.degree()?;
    let m = exact_div(deg, n)?;
    let middle: Vec<usize> = support(&q)
        .into_iter()
        .filter(|&e| e > 0 && e < deg)
        .collect();
    let (r, a) = match middle.as_slice() {
        [] => (0, int(0)),
        [e] => (exact_div(*e, n)?, q.coeff(*e)),
        _ => return None,
    };
    Some(
        Params::new()
            .int("n", n as i64)
            .int("m", m as i64)
            .int("r", r as i64)
            .rat("a", a)
            .rat("b", q.coeff(0)),
    )
}

fn trinomial_grid(keep: fn(usize, usize, &Rational, &Rational) -> bool) -> Vec<Params> {
    let mut out = Vec::new();
    for n in 1..=5usize {
        for m in 1..=4usize {
            for r in 0..=m {
                for a in small_values() {
                    for b in small_values() {
                        if keep(m, r, &a, &b) {
                            out.push(
                                Params::new()
                                    .int("n", n as i64)
                                    .int("m", m as i64)
                                    .int("r", r as i64)
                                    .rat("a", a.clone())
                                    .rat("b", b),
                            );
                        }
                    }
                }
            }
        }
    }
    out
}

fn cor16() -> CatalogEntry {
    CatalogEntry {
        id: "cor16",
        statement: "PER(x^n - 1, y^(mn) + a y^(rn) + b) = −(−(m + r a) n / (a + b + 1))_n",
        params: &["n", "m", "r", "a", "b"],
        domain: "n, m ≥ 1; a + b + 1 ≠ 0",
        check: |p| trinomial_check(p).map(drop),
        family: trinomial_family,
        closed_form: |p| {
            let (n, m, r) = (p.count("n")?, p.count("m")?, p.count("r")?);
            let (a, b) = (p.rational("a")?, p.rational("b")?);
            let base = -(rint(m) + rint(r) * &a) * rint(n) / (&a + &b + int(1));
            Ok(-pochhammer(&base, n))
        },
        grid: || trinomial_grid(|_, _, _, _| true),
        recognize: trinomial_recognize,
    }
}

fn cor17() -> CatalogEntry {
    CatalogEntry {
        id: "cor17",
        statement: "PER(x^n - 1, y^(mn) + 1) = −(−mn/2)_n",
        params: &["n", "m"],
        domain: "n, m ≥ 1",
        check: |p| {
            positive(p, "n")?;
            positive(p, "m").map(drop)
        },
        family: |p| {
            let (n, m) = (p.count("n")?, p.count("m")?);
            Ok((xn1(n), terms([(m * n, int(1)), (0, int(1))])))
        },
        closed_form: |p| {
            let (n, m) = (p.count("n")?, p.count("m")?);
            Ok(-pochhammer(&rat(-((m * n) as i64), 2), n))
        },
        grid: || nm_grid(1, 1),
        recognize: |p, q| {
            let n = detect_xn1(p)?;
            Some(
                Params::new()
                    .int("n", n as i64)
                    .int("m", exact_div(q.degree()?, n)? as i64),
            )
        },
    }
}

fn cor18() -> CatalogEntry {
    CatalogEntry {
        id: "cor18",
        statement: "PER(x^n - 1, y^(mn) + a y^(rn) + b) = (−1)^(n+1) n! when m + r a = a + b + 1",
        params: &["n", "m", "r", "a", "b"],
        domain: "m + r a = a + b + 1 ≠ 0",
        check: |p| {
            let (a, b, m, r) = trinomial_check(p)?;
            ensure(
                rint(m) + rint(r) * &a == a + b + int(1),
                "m + r a = a + b + 1",
            )
        },
        family: trinomial_family,
        closed_form: |p| {
            let n = p.count("n")?;
            Ok(sign(n + 1) * factorial(n))
        },
        grid: || {
            let mut out = Vec::new();
            for n in 1..=5usize {
                for m in 1..=4usize {
                    for r in 0..=m {
                        for a in small_values() {
                            let b = rint(m) + rint(r) * &a - &a - int(1);
                            out.push(
                                Params::new()
                                    .int("n", n as i64)
                                    .int("m", m as i64)
                                    .int("r", r as i64)
                                    .rat("a", a)
                                    .rat("b", b),
                            );
                        }
                    }
                }
            }
            out
        },
        recognize: trinomial_recognize,
    }
}

fn cor19() -> CatalogEntry {
    CatalogEntry {
        id: "cor19",
        statement: "PER(x^n - 1, y^(2n) + a y^n + 1) = (−1)^(n+1) n!",
        params: &["n", "a"],
        domain: "a ≠ −2",
        check: |p| {
            positive(p, "n")?;
            ensure(p.rational("a")? != int(-2), "a ≠ −2")
        },
        family: |p| {
            let n = p.count("n")?;
            Ok((
                xn1(n),
                terms([(2 * n, int(1)), (n, p.rational("a")?), (0, int(1))]),
            ))
        },
        closed_form: |p| {
            let n = p.count("n")?;
            Ok(sign(n + 1) * factorial(n))
        },
        grid: || {
            let mut out = Vec::new();
            for n in 1..=5 {
                for a in small_values().into_iter().chain([int(-2), int(-3)]) {
                    out.push(Params::new().int("n", n).rat("a", a));
                }
            }
            out
        },
        recognize: |p, q| {
            let n = detect_xn1(p)?;
            Some(
                Params::new()
                    .int("n", n as i64)
                    .rat("a", q.monic().ok()?.coeff(n)),
            )
        },
    }
}

fn cor20() -> CatalogEntry {
    CatalogEntry {
        id: "cor20",
        statement: "PER(x^n - 1, y^(mn) + a y^(rn) + b) = 0 when m + r a = 0",
        params: &["n", "m", "r", "a", "b"],
        domain: "m + r a = 0; a + b + 1 ≠ 0",
        check: |p| {
            let (a, _, m, r) = trinomial_check(p)?;
            ensure((rint(m) + rint(r) * a).is_zero(), "m + r a = 0")
        },
        family: trinomial_family,
        closed_form: |_| Ok(Rational::zero()),
        grid: || {
            let mut out = Vec::new();
            for n in 1..=5usize {
                for m in 1..=4usize {
                    for r in 1..=m + 1 {
                        let a = rat(-(m as i64), r as i64);
                        for b in small_values() {
                            out.push(
                                Params::new()
                                    .int("n", n as i64)
                                    .int("m", m as i64)
                                    .int("r", r as i64)
                                    .rat("a", a.clone())
                                    .rat("b", b),
                            );
                        }
                    }
                }
            }
            out
        },
        recognize: |p, q| {
            // the a y^(rn) term may sit above y^(mn); take the reading with m + r a = 0
            let n = detect_xn1(p)?;
            let pos: Vec<usize> = support(q).into_iter().filter(|&e| e > 0).collect();
            let [lo, hi] = pos.as_slice() else {
                return None;
            };
            let a_hi = q.coeff(*hi) / q.coeff(*lo);
            let (mexp, rexp, scale) = if (rint(lo / n) + rint(hi / n) * &a_hi).is_zero() {
                (*lo, *hi, q.coeff(*lo))
            } else {
                (*hi, *lo, q.coeff(*hi))
            };
            let m = exact_div(mexp, n)?;
            let r = exact_div(rexp, n)?;
            Some(
                Params::new()
                    .int("n", n as i64)
                    .int("m", m as i64)
                    .int("r", r as i64)
                    .rat("a", q.coeff(rexp) / &scale)
                    .rat("b", q.coeff(0) / &scale),
            )
        },
    }
}

fn cor21() -> CatalogEntry {
    CatalogEntry {
        id: "cor21",
        statement: "PER(x^n - 1, y^(2n) − 2 y^n + b) = 0",
        params: &["n", "b"],
        domain: "b ≠ 1",
        check: |p| {
            positive(p, "n")?;
            ensure(p.rational("b")? != int(1), "b ≠ 1")
        },
        family: |p| {
            let n = p.count("n")?;
            Ok((
                xn1(n),
                terms([(2 * n, int(1)), (n, int(-2)), (0, p.rational("b")?)]),
            ))
        },
        closed_form: |_| Ok(Rational::zero()),
        grid: || {
            let mut out = Vec::new();
            for n in 1..=5 {
                for b in small_values() {
                    out.push(Params::new().int("n", n).rat("b", b));
                }
            }
            out
        },
        recognize: |p, q| {
            let n = detect_xn1(p)?;
            Some(
                Params::new()
                    .int("n", n as i64)
                    .rat("b", q.monic().ok()?.coeff(0)),
            )
        },
    }
}

fn binomial_grid(extra: fn(usize, usize) -> bool) -> Vec<Params> {
    let mut out = Vec::new();
    for n in 1..=5usize {
        for m in 1..=8usize {
            if !extra(n, m) {
                continue;
            }
            for b in small_values().into_iter().chain([int(-2)]) {
                out.push(
                    Params::new()
                        .int("n", n as i64)
                        .int("m", m as i64)
                        .rat("b", b),
                );
            }
        }
    }
    out
}

fn binomial_family(p: &Params) -> Result<Family> {
    let (n, m) = (p.count("n")?, p.count("m")?);
    Ok((xn1(n), terms([(m, int(1)), (0, p.rational("b")?)])))
}

fn binomial_recognize(p: &Polynomial, q: &Polynomial) -> Option<Params> {
    let n = detect_xn1(p)?;
    let q = q.monic().ok()?;
    Some(
        Params::new()
            .int("n", n as i64)
            .int("m", q.degree()? as i64)
            .rat("b", q.coeff(0)),
    )
}

fn cor22() -> CatalogEntry {
    CatalogEntry {
        id: "cor22",
        statement: "PER(x^n - 1, y^m + b) = −d^n ∏_{i=1..d}(((i−m−1)/d)_(n/d) − (−b)^(n/d) ((i−1)/d)_(n/d)) / (1 − (−b)^(n/d))^d, d = gcd(n, m)",
        params: &["n", "m", "b"],
        domain: "n, m ≥ 1; (−b)^(n/d) ≠ 1",
        check: |p| {
            let n = positive(p, "n")?;
            let m = positive(p, "m")?;
            let big_n = n / n.gcd(&m);
            ensure(pow(&-p.rational("b")?, big_n) != int(1), "(−b)^(n/d) ≠ 1")
        },
        family: binomial_family,
        closed_form: |p| {
            let (n, m) = (p.count("n")?, p.count("m")?);
            let b = p.rational("b")?;
            let d = n.gcd(&m);
            let big_n = n / d;
            let nb = pow(&-b, big_n);
            let dd = rint(d);
            let num: Rational = (1..=d)
                .map(|i| {
                    pochhammer(&(int(i as i64 - m as i64 - 1) / &dd), big_n) - &nb * pochhammer(&(int(i as i64 - 1) / &dd), big_n)
                })
                .product();
            Ok(-pow(&dd, n) * num / pow(&(int(1) - nb), d))
        },
        grid: || binomial_grid(|_, m| m <= 8),
        recognize: binomial_recognize,
    }
}

fn cor23() -> CatalogEntry {
    CatalogEntry {
        id: "cor23",
        statement: "PER(x^n - 1, y^m + b) = (−1)^(n+1) m(m−1)...(m−n+1) / (1 − (−b)^n)",
        params: &["n", "m", "b"],
        domain: "gcd(m, n) = 1; (−b)^n ≠ 1",
        check: |p| {
            let n = positive(p, "n")?;
            let m = positive(p, "m")?;
            ensure(n.gcd(&m) == 1, "gcd(m, n) = 1")?;
            ensure(pow(&-p.rational("b")?, n) != int(1), "(−b)^n ≠ 1")
        },
        family: binomial_family,
        closed_form: |p| {
            let (n, m) = (p.count("n")?, p.count("m")?);
            let b = p.rational("b")?;
            Ok(sign(n + 1) * falling(&rint(m), n) / (int(1) - pow(&-b, n)))
        },
        grid: || binomial_grid(|n, m| n.gcd(&m) == 1),
        recognize: binomial_recognize,
    }
}

fn cor24() -> CatalogEntry {
    CatalogEntry {
        id: "cor24",
        statement: "PER(x^(s(n−1)) + ... + x^s + 1, y^(s(m−1)) + ... + y^s + 1) = ∏_{i=0..s−1}(∏_{l<n}(i + l s) − ∏_{l<n}(i + l s − m s)) / (mns)^s",
        params: &["n", "m", "s"],
        domain: "gcd(m, n) = 1; n, m ≥ 2; s ≥ 1",
        check: |p| {
            let n = at_least(p, "n", 2)?;
            let m = at_least(p, "m", 2)?;
            positive(p, "s")?;
            ensure(n.gcd(&m) == 1, "gcd(m, n) = 1")
        },
        family: |p| {
            let (n, m, s) = (p.count("n")?, p.count("m")?, p.count("s")?);
            Ok((terms((0..n).map(|k| (k * s, int(1)))), terms((0..m).map(|k| (k * s, int(1))))))
        },
        closed_form: |p| {
            let (n, m, s) = (p.count("n")? as i64, p.count("m")? as i64, p.count("s")? as i64);
            let num: Rational = (0..s)
                .map(|i| {
                    let a: Rational = (0..n).map(|l| int(i + l * s)).product();
                    let b: Rational = (0..n).map(|l| int(i + l * s - m * s)).product();
                    a - b
                })
                .product();
            Ok(num / pow(&int(m * n * s), s as usize))
        },
        grid: || {
            let mut out = Vec::new();
            for s in 1..=3 {
                for n in 2..=5usize {
                    for m in 2..=6usize {
                        if n.gcd(&m) == 1 && (n - 1 + m - 1) * s <= 14 {
                            out.push(Params::new().int("n", n as i64).int("m", m as i64).int("s", s as i64));
                        }
                    }
                }
            }
            out
        },
        recognize: |p, q| {
            let s = min_positive_exponent(p)?;
            let n = exact_div(p.degree()?, s)? + 1;
            let m = exact_div(q.degree()?, s)? + 1;
            Some(Params::new().int("n", n as i64).int("m", m as i64).int("s", s as i64))
        },
    }
}

fn cor25() -> CatalogEntry {
    CatalogEntry {
        id: "cor25",
        statement:
            "PER(x^(n−1) + ... + x + 1, y^(m−1) + ... + y + 1) = (−1)^(n+1) (m−1)...(m−n+1) / n",
        params: &["n", "m"],
        domain: "gcd(m, n) = 1; n, m ≥ 2",
        check: |p| {
            let n = at_least(p, "n", 2)?;
            let m = at_least(p, "m", 2)?;
            ensure(n.gcd(&m) == 1, "gcd(m, n) = 1")
        },
        family: |p| {
            Ok((
                Polynomial::all_ones(p.count("n")?),
                Polynomial::all_ones(p.count("m")?),
            ))
        },
        closed_form: |p| {
            let (n, m) = (p.count("n")?, p.count("m")?);
            Ok(sign(n + 1) * falling(&rint(m - 1), n - 1) / rint(n))
        },
        grid: || {
            let mut out = Vec::new();
            for n in 2..=5usize {
                for m in 2..=8usize {
                    if n.gcd(&m) == 1 {
                        out.push(Params::new().int("n", n as i64).int("m", m as i64));
                    }
                }
            }
            out
        },
        recognize: |p, q| {
            let n = detect_ones(p)?;
            let m = detect_ones(q)?;
            Some(Params::new().int("n", n as i64).int("m", m as i64))
        },
    }
}

fn cor26() -> CatalogEntry {
    CatalogEntry {
        id: "cor26",
        statement: "PER(x^n - 1, y^m + 1) = m(m−1)...(m−n+1) / 2 for odd n",
        params: &["n", "m"],
        domain: "gcd(m, n) = 1; n odd",
        check: |p| {
            let n = positive(p, "n")?;
            let m = positive(p, "m")?;
            ensure(n % 2 == 1, "n is odd")?;
            ensure(n.gcd(&m) == 1, "gcd(m, n) = 1")
        },
        family: |p| {
            Ok((
                xn1(p.count("n")?),
                terms([(p.count("m")?, int(1)), (0, int(1))]),
            ))
        },
        closed_form: |p| Ok(falling(&rint(p.count("m")?), p.count("n")?) / int(2)),
        grid: || {
            let mut out = Vec::new();
            for n in [1usize, 3, 5, 7] {
                for m in 1..=9usize {
                    if n.gcd(&m) == 1 {
                        out.push(Params::new().int("n", n as i64).int("m", m as i64));
                    }
                }
            }
            out
        },
        recognize: |p, q| {
            let n = detect_xn1(p)?;
            Some(
                Params::new()
                    .int("n", n as i64)
                    .int("m", q.degree()? as i64),
            )
        },
    }
}

fn cor27() -> CatalogEntry {
    CatalogEntry {
        id: "cor27",
        statement: "PER(x^n - 1, y^(n+1) + 1) = (n+1)!/2 for odd n",
        params: &["n"],
        domain: "n odd",
        check: |p| {
            let n = positive(p, "n")?;
            ensure(n % 2 == 1, "n is odd")
        },
        family: |p| {
            let n = p.count("n")?;
            Ok((xn1(n), terms([(n + 1, int(1)), (0, int(1))])))
        },
        closed_form: |p| Ok(factorial(p.count("n")? + 1) / int(2)),
        grid: || n_grid(1, 8),
        recognize: |p, _| Some(Params::new().int("n", detect_xn1(p)? as i64)),
    }
}

fn cor28_family(p: &Params) -> Result<Family> {
    let (n, r) = (p.count("n")?, p.count("r")?);
    Ok((
        xn1(n),
        terms([(n, int(1)), (r, p.rational("a")?), (0, p.rational("b")?)]),
    ))
}

fn cor28_check(p: &Params) -> Result<(usize, usize, Rational, Rational)> {
    let n = positive(p, "n")?;
    let r = positive(p, "r")?;
    let (a, b) = (p.rational("a")?, p.rational("b")?);
    ensure(
        r != n || !(int(1) + &a).is_zero(),
        "leading coefficient 1 + a ≠ 0 when r = n",
    )?;
    let big_n = n / n.gcd(&r);
    ensure(
        pow(&(&b + int(1)), big_n) != pow(&-a.clone(), big_n),
        "(b+1)^(n/d) ≠ (−a)^(n/d)",
    )?;
    Ok((n, r, a, b))
}

fn cor28_grid(keep: fn(usize, usize) -> bool) -> Vec<Params> {
    let mut out = Vec::new();
    for n in 1..=5usize {
        for r in 1..=n + 1 {
            if !keep(n, r) {
                continue;
            }
            for a in small_values() {
                for b in small_values() {
                    out.push(
                        Params::new()
                            .int("n", n as i64)
                            .int("r", r as i64)
                            .rat("a", a.clone())
                            .rat("b", b),
                    );
                }
            }
        }
    }
    out
}

fn cor28_recognize(p: &Polynomial, q: &Polynomial) -> Option<Params> {
    let n = detect_xn1(p)?;
    let deg = q.degree()?;
    let (r, scale, a) = if deg > n {
        let scale = q.coeff(n);
        if scale.is_zero() {
            return None;
        }
        (deg, scale.clone(), q.coeff(deg) / scale)
    } else if deg == n {
        let lead = q.coeff(n);
        match support(q).into_iter().find(|&e| e > 0 && e < n) {
            Some(e) => (e, lead.clone(), q.coeff(e) / lead),
            None => (1, lead, int(0)),
        }
    } else {
        return None;
    };
    Some(
        Params::new()
            .int("n", n as i64)
            .int("r", r as i64)
            .rat("a", a)
            .rat("b", q.coeff(0) / &scale),
    )
}

fn cor28() -> CatalogEntry {
    CatalogEntry {
        id: "cor28",
        statement: "PER(x^n - 1, y^n + a y^r + b) = −d^n ∏_{i=1..d}((b+1)^(n/d) ((ib−b+i−n−1)/(d(b+1)))_(n/d) − (−a)^(n/d) ((i−r−1)/d)_(n/d)) / ((b+1)^(n/d) − (−a)^(n/d))^d, d = gcd(n, r)",
        params: &["n", "r", "a", "b"],
        domain: "n, r ≥ 1; (b+1)^(n/d) ≠ (−a)^(n/d)",
        check: |p| cor28_check(p).map(drop),
        family: cor28_family,
        closed_form: |p| {
            let (n, r) = (p.count("n")?, p.count("r")?);
            let (a, b) = (p.rational("a")?, p.rational("b")?);
            let d = n.gcd(&r);
            let big_n = n / d;
            let dd = rint(d);
            let b1 = &b + int(1);
            let na = pow(&-a, big_n);
            let num: Rational = (1..=d)
                .map(|i| {
                    let u = (rint(i) * &b - &b + int(i as i64 - n as i64 - 1)) / &dd;
                    let t1: Rational = (0..big_n).map(|k| &u + rint(k) * &b1).product();
                    t1 - &na * pochhammer(&(int(i as i64 - r as i64 - 1) / &dd), big_n)
                })
                .product();
            let den = pow(&(pow(&b1, big_n) - &na), d);
            Ok(-pow(&dd, n) * num / den)
        },
        grid: || cor28_grid(|_, _| true),
        recognize: cor28_recognize,
    }
}

fn cor29() -> CatalogEntry {
    CatalogEntry {
        id: "cor29",
        statement: "PER(x^n - 1, y^n + a y^r + b) = (−1)^(n+1) (∏_{i=1..n}(i − (n−i) b) − a^n (−r)_n) / ((b+1)^n − (−a)^n)",
        params: &["n", "r", "a", "b"],
        domain: "gcd(n, r) = 1; (b+1)^n ≠ (−a)^n",
        check: |p| {
            let (n, r, _, _) = cor28_check(p)?;
            ensure(n.gcd(&r) == 1, "gcd(n, r) = 1")
        },
        family: cor28_family,
        closed_form: |p| {
            let (n, r) = (p.count("n")?, p.count("r")?);
            let (a, b) = (p.rational("a")?, p.rational("b")?);
            let prod: Rational = (1..=n).map(|i| rint(i) - rint(n - i) * &b).product();
            let num = prod - pow(&a, n) * pochhammer(&-rint(r), n);
            Ok(sign(n + 1) * num / (pow(&(b + int(1)), n) - pow(&-a, n)))
        },
        grid: || cor28_grid(|n, r| n.gcd(&r) == 1),
        recognize: cor28_recognize,
    }
}

fn cor30() -> CatalogEntry {
    CatalogEntry {
        id: "cor30",
        statement: "PER(x^n - 1, y^(n+1) + y^n − 1) = n^n − (−1)^n (n+1)!",
        params: &["n"],
        domain: "n ≥ 1",
        check: |p| positive(p, "n").map(drop),
        family: |p| {
            let n = p.count("n")?;
            Ok((xn1(n), terms([(n + 1, int(1)), (n, int(1)), (0, int(-1))])))
        },
        closed_form: |p| {
            let n = p.count("n")?;
            Ok(pow(&rint(n), n) - sign(n) * factorial(n + 1))
        },
        grid: || n_grid(1, 7),
        recognize: |p, _| Some(Params::new().int("n", detect_xn1(p)? as i64)),
    }
}

fn cor31() -> CatalogEntry {
    CatalogEntry {
        id: "cor31",
        statement: "PER(x^n - 1, y^n + n y − 1) = 1",
        params: &["n"],
        domain: "n ≥ 2",
        check: |p| at_least(p, "n", 2).map(drop),
        family: |p| {
            let n = p.count("n")?;
            Ok((xn1(n), terms([(n, int(1)), (1, rint(n)), (0, int(-1))])))
        },
        closed_form: |_| Ok(Rational::one()),
        grid: || n_grid(1, 7),
        recognize: |p, _| Some(Params::new().int("n", detect_xn1(p)? as i64)),
    }
}

// ---- arithmetic-progression coefficients ----

fn progression(len: usize, step: usize, offset: &Rational) -> Polynomial {
    terms((0..len).map(|l| (l * step, rint(l) + offset)))
}

fn v_n(n: &Rational, a: &Rational, m: &Rational) -> Rational {
    int(1) - int(6) * a + int(6) * a * a + n - int(2) * a * n - int(5) * m * n + int(10) * a * m * n
        - m * n * n
        + int(4) * m * m * n * n
}

fn amn_grid(n_lo: usize) -> Vec<Params> {
    let mut out = Vec::new();
    for n in n_lo..=5 {
        for m in 1..=4 {
            for a in small_values().into_iter().chain([rat(-5, 3)]) {
                out.push(Params::new().int("n", n as i64).int("m", m).rat("a", a));
            }
        }
    }
    out
}

fn thm32() -> CatalogEntry {
    CatalogEntry {
        id: "thm32",
        statement: "PER(x^n - 1, Σ_{l=0..mn−1} (l + a) y^l) = (−1)^(n−1) n(m−1) V_n(a,m) / (6(mn + 2a − 1)) (a + (m−1)n + 1)_(n−2), V_n(a,m) = 1 − 6a + 6a² + n − 2an − 5mn + 10amn − mn² + 4m²n²",
        params: &["n", "m", "a"],
        domain: "n ≥ 2; m ≥ 1; mn + 2a − 1 ≠ 0; mn − 1 + a ≠ 0",
        check: |p| {
            let n = at_least(p, "n", 2)?;
            let m = positive(p, "m")?;
            let a = p.rational("a")?;
            ensure(!(rint(m * n) + int(2) * &a - int(1)).is_zero(), "mn + 2a − 1 ≠ 0")?;
            ensure(!(rint(m * n - 1) + a).is_zero(), "leading coefficient mn − 1 + a ≠ 0")
        },
        family: |p| {
            let (n, m) = (p.count("n")?, p.count("m")?);
            Ok((xn1(n), progression(m * n, 1, &p.rational("a")?)))
        },
        closed_form: |p| {
            let (n, m) = (p.count("n")?, p.count("m")?);
            let a = p.rational("a")?;
            let (nn, mm) = (rint(n), rint(m));
            let v = v_n(&nn, &a, &mm);
            let head = sign(n - 1) * &nn * (&mm - int(1)) * v / (int(6) * (&mm * &nn + int(2) * &a - int(1)));
            Ok(head * pochhammer(&(&a + rint((m - 1) * n + 1)), n - 2))
        },
        grid: || amn_grid(2),
        recognize: |p, q| {
            let n = detect_xn1(p)?;
            let m = exact_div(q.degree()? + 1, n)?;
            Some(Params::new().int("n", n as i64).int("m", m as i64).rat("a", linear_offset(q, 1)?))
        },
    }
}

fn fixed_progression_entry(
    id: &'static str,
    statement: &'static str,
    family: fn(&Params) -> Result<Family>,
    closed_form: fn(&Params) -> Result<Rational>,
) -> CatalogEntry {
    CatalogEntry {
        id,
        statement,
        params: &["n", "m"],
        domain: "n ≥ 2; m ≥ 1",
        check: |p| {
            at_least(p, "n", 2)?;
            positive(p, "m").map(drop)
        },
        family,
        closed_form,
        grid: || nm_grid(2, 1),
        recognize: |p, q| {
            let n = detect_xn1(p)?;
            let deg = q.degree()?;
            // the last coefficient can vanish (cor36), so try both lengths
            let m = exact_div(deg + 1, n).or_else(|| exact_div(deg + 2, n))?;
            Some(Params::new().int("n", n as i64).int("m", m as i64))
        },
    }
}

fn fixed_family(p: &Params, coeff: fn(usize, usize) -> i64) -> Result<Family> {
    let (n, m) = (p.count("n")?, p.count("m")?);
    let t = m * n;
    Ok((xn1(n), terms((0..t).map(|l| (l, int(coeff(l, t)))))))
}

/// `lo (lo+1) ... hi`, empty product 1.
fn range_product(lo: i64, hi: i64) -> Rational {
    (lo..=hi).map(int).product()
}

fn cor33() -> CatalogEntry {
    fixed_progression_entry(
        "cor33",
        "PER(x^n - 1, Σ_{l=0..mn−1} l y^l) = (−1)^(n−1) (4mn − n − 1)(mn − 2)! / (6 (mn − n − 1)!)",
        |p| fixed_family(p, |l, _| l as i64),
        |p| {
            let (n, m) = (p.count("n")? as i64, p.count("m")? as i64);
            Ok(sign((n - 1) as usize)
                * int(4 * m * n - n - 1)
                * range_product(m * n - n, m * n - 2)
                / int(6))
        },
    )
}

fn cor34() -> CatalogEntry {
    fixed_progression_entry(
        "cor34",
        "PER(x^n - 1, Σ_{l=0..mn−1} (l + 1) y^l) = (−1)^(n−1) (4mn − n + 1)(mn − n)(mn − 1)! / (6 (mn − n + 1)!)",
        |p| fixed_family(p, |l, _| l as i64 + 1),
        |p| {
            let (n, m) = (p.count("n")? as i64, p.count("m")? as i64);
            Ok(sign((n - 1) as usize) * int(4 * m * n - n + 1) * int(m * n - n) * range_product(m * n - n + 2, m * n - 1) / int(6))
        },
    )
}

fn cor35() -> CatalogEntry {
    fixed_progression_entry(
        "cor35",
        "PER(x^n - 1, Σ_{l=0..mn−1} (mn − l) y^l) = (m − 1)(n + 1)!/6",
        |p| fixed_family(p, |l, t| t as i64 - l as i64),
        |p| Ok(rint(p.count("m")? - 1) * factorial(p.count("n")? + 1) / int(6)),
    )
}

fn cor36() -> CatalogEntry {
    fixed_progression_entry(
        "cor36",
        "PER(x^n - 1, Σ_{l=0..mn−1} (mn − l − 1) y^l) = (m − 1) n!/6",
        |p| fixed_family(p, |l, t| t as i64 - l as i64 - 1),
        |p| Ok(rint(p.count("m")? - 1) * factorial(p.count("n")?) / int(6)),
    )
}

fn v_ns(n: &Rational, s: &Rational, a: &Rational, m: &Rational, k: &Rational) -> Rational {
    let c = |v: i64| int(v);
    c(6) * k * k * m * n + c(6) * k * m * n * n - c(10) * k * m * m * n * n + m * n * n * n
        - c(5) * m * m * n * n * n
        + c(4) * m * m * m * n * n * n
        - c(6) * k * k * s
        + c(12) * a * k * k * s
        - c(6) * k * n * s
        + c(12) * a * k * n * s
        + c(12) * k * m * n * s
        - c(24) * a * k * m * n * s
        - n * n * s
        + c(2) * a * n * n * s
        + c(6) * m * n * n * s
        - c(12) * a * m * n * n * s
        - c(5) * m * m * n * n * s
        + c(10) * a * m * m * n * n * s
        - c(2) * k * s * s
        + c(12) * a * k * s * s
        - c(12) * a * a * k * s * s
        - n * s * s
        + c(6) * a * n * s * s
        - c(6) * a * a * n * s * s
        + m * n * s * s
        - c(6) * a * m * n * s * s
        + c(6) * a * a * m * n * s * s
}

fn thm37() -> CatalogEntry {
    CatalogEntry {
        id: "thm37",
        statement: "PER(x^n - 1, Σ_{l=0..mn/s−1} (l + a) y^(l s)) = (−1)^(n−1) s^(n−2s) / (6^s (mn + 2as − s)^s) ∏_{k=0..s−1}((a + (nm − n − k)/s + 1)_(n/s−2) V_{n,s}(a,m,k))",
        params: &["n", "m", "s", "a"],
        domain: "s | n; n/s ≥ 2; mn + 2as − s ≠ 0; mn/s − 1 + a ≠ 0",
        check: |p| {
            let n = positive(p, "n")?;
            let m = positive(p, "m")?;
            let s = positive(p, "s")?;
            let a = p.rational("a")?;
            ensure(n % s == 0, "s divides n")?;
            ensure(n / s >= 2, "n/s ≥ 2")?;
            ensure(!(rint(m * n) + int(2) * &a * rint(s) - rint(s)).is_zero(), "mn + 2as − s ≠ 0")?;
            ensure(!(rint(m * n / s - 1) + a).is_zero(), "leading coefficient mn/s − 1 + a ≠ 0")
        },
        family: |p| {
            let (n, m, s) = (p.count("n")?, p.count("m")?, p.count("s")?);
            Ok((xn1(n), progression(m * n / s, s, &p.rational("a")?)))
        },
        closed_form: |p| {
            let (n, m, s) = (p.count("n")?, p.count("m")?, p.count("s")?);
            let a = p.rational("a")?;
            let (nn, mm, ss) = (rint(n), rint(m), rint(s));
            let head = sign(n - 1) * signed_pow(&ss, n as i64 - 2 * s as i64)
                / (pow(&int(6), s) * pow(&(&mm * &nn + int(2) * &a * &ss - &ss), s));
            let prod: Rational = (0..s)
                .map(|k| {
                    let base = &a + int((n * m) as i64 - n as i64 - k as i64) / &ss + int(1);
                    pochhammer(&base, n / s - 2) * v_ns(&nn, &ss, &a, &mm, &rint(k))
                })
                .product();
            Ok(head * prod)
        },
        grid: || {
            let mut out = Vec::new();
            for n in 2..=6usize {
                for s in 1..=n / 2 {
                    if n % s != 0 {
                        continue;
                    }
                    for m in 1..=3 {
                        for a in small_values().into_iter().chain([rat(-5, 3)]) {
                            out.push(Params::new().int("n", n as i64).int("m", m).int("s", s as i64).rat("a", a));
                        }
                    }
                }
            }
            out
        },
        recognize: |p, q| {
            // zero coefficients can hide the step, so try every divisor of n
            let n = detect_xn1(p)?;
            let target = q.monic().ok()?;
            (1..=n / 2).filter(|s| n % s == 0).find_map(|s| {
                let len = exact_div(q.degree()?, s)? + 1;
                let m = exact_div(len * s, n)?;
                let a = linear_offset(q, s)?;
                let found = progression(len, s, &a).monic().ok()? == target;
                found.then(|| Params::new().int("n", n as i64).int("m", m as i64).int("s", s as i64).rat("a", a))
            })
        },
    }
}

fn thm38() -> CatalogEntry {
    CatalogEntry {
        id: "thm38",
        statement: "PER(x^(n−1) + ... + x + 1, Σ_{l=0..mn−1} (l + a) y^l) = (−1)^(n−1) (a + (m−1)n + 1)_(n−1)",
        params: &["n", "m", "a"],
        domain: "n ≥ 2; m ≥ 1; mn − 1 + a ≠ 0",
        check: |p| {
            let n = at_least(p, "n", 2)?;
            let m = positive(p, "m")?;
            ensure(!(rint(m * n - 1) + p.rational("a")?).is_zero(), "leading coefficient mn − 1 + a ≠ 0")
        },
        family: |p| {
            let (n, m) = (p.count("n")?, p.count("m")?);
            Ok((Polynomial::all_ones(n), progression(m * n, 1, &p.rational("a")?)))
        },
        closed_form: |p| {
            let (n, m) = (p.count("n")?, p.count("m")?);
            Ok(sign(n - 1) * pochhammer(&(p.rational("a")? + rint((m - 1) * n + 1)), n - 1))
        },
        grid: || amn_grid(2),
        recognize: |p, q| {
            let n = detect_ones(p)?;
            let m = exact_div(q.degree()? + 1, n)?;
            Some(Params::new().int("n", n as i64).int("m", m as i64).rat("a", linear_offset(q, 1)?))
        },
    }
}

fn thm39() -> CatalogEntry {
    CatalogEntry {
        id: "thm39",
        statement: "PER(x^(n−1) + ... + x + 1, Σ_{l=0..mn−2} (l + a) y^l) = (−1)^(n−1) nm (nm − n)_(n−1) (nm + a − 1)^(n−1) / ((mn + a − 1)^n − (a − 1)^n)",
        params: &["n", "m", "a"],
        domain: "n ≥ 2; mn ≥ 3; (mn + a − 1)^n ≠ (a − 1)^n; mn − 2 + a ≠ 0",
        check: |p| {
            let n = at_least(p, "n", 2)?;
            let m = positive(p, "m")?;
            let a = p.rational("a")?;
            ensure(m * n >= 3, "mn ≥ 3")?;
            ensure(!(rint(m * n - 2) + &a).is_zero(), "leading coefficient mn − 2 + a ≠ 0")?;
            ensure(pow(&(rint(m * n) + &a - int(1)), n) != pow(&(a - int(1)), n), "(mn + a − 1)^n ≠ (a − 1)^n")
        },
        family: |p| {
            let (n, m) = (p.count("n")?, p.count("m")?);
            Ok((Polynomial::all_ones(n), progression(m * n - 1, 1, &p.rational("a")?)))
        },
        closed_form: |p| {
            let (n, m) = (p.count("n")?, p.count("m")?);
            let a = p.rational("a")?;
            let top = rint(n * m) * pochhammer(&rint(n * m - n), n - 1) * pow(&(rint(n * m) + &a - int(1)), n - 1);
            let den = pow(&(rint(m * n) + &a - int(1)), n) - pow(&(a - int(1)), n);
            Ok(sign(n - 1) * top / den)
        },
        grid: || amn_grid(2),
        recognize: |p, q| {
            let n = detect_ones(p)?;
            let m = exact_div(q.degree()? + 2, n)?;
            Some(Params::new().int("n", n as i64).int("m", m as i64).rat("a", linear_offset(q, 1)?))
        },
    }
}

/// The printed right-hand side of the thm39 entry, without the `nm` factor.
/// Kept only so tests can pin the discrepancy.
pub fn thm39_printed(n: usize, m: usize, a: &Rational) -> Rational {
    let top = pochhammer(&rint(n * m - n), n - 1) * pow(&(rint(n * m) + a - int(1)), n - 1);
    let den = pow(&(rint(m * n) + a - int(1)), n) - pow(&(a - int(1)), n);
    sign(n - 1) * top / den
}

pub(super) fn all() -> Vec<CatalogEntry> {
    vec![
        thm10(),
        cor11(),
        cor12(),
        cor13(),
        cor14(),
        cor15(),
        cor16(),
        cor17(),
        cor18(),
        cor19(),
        cor20(),
        cor21(),
        cor22(),
        cor23(),
        cor24(),
        cor25(),
        cor26(),
        cor27(),
        cor28(),
        cor29(),
        cor30(),
        cor31(),
        thm32(),
        cor33(),
        cor34(),
        cor35(),
        cor36(),
        thm37(),
        thm38(),
        thm39(),
    ]
}
