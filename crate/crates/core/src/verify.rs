//! Route dispatch and cross-route verification.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::catalog;
use crate::error::{Error, Result};
use crate::exact::Polynomial;
use crate::fes::{per_via_fes, PKind};
use crate::oracle::approx_eq;
use crate::scott::{
    involution_permanent, oracle_permanent, scott_permanent, EvalResult, Method, Value,
};

/// Relative tolerance between a floating route and any other route.
pub const ROUTE_TOLERANCE: f64 = 1e-6;

/// How to evaluate `PER(P, Q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Route {
    /// Broken-diagonal numerator when P is `x^n - 1` or `x^(n-1) + ... + 1`, else theorem1.
    Auto,
    Theorem1,
    Fes,
    Closed(String),
    Oracle,
    Involution,
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "auto" => Route::Auto,
            "theorem1" => Route::Theorem1,
            "fes" => Route::Fes,
            "oracle" => Route::Oracle,
            "involution" => Route::Involution,
            other => match other.strip_prefix("closed:") {
                Some(id) if !id.is_empty() => Route::Closed(id.to_string()),
                _ => return Err(Error::BadParams(format!("unknown method `{other}`"))),
            },
        })
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Route::Auto => f.write_str("auto"),
            Route::Theorem1 => f.write_str("theorem1"),
            Route::Fes => f.write_str("fes"),
            Route::Closed(id) => write!(f, "closed:{id}"),
            Route::Oracle => f.write_str("oracle"),
            Route::Involution => f.write_str("involution"),
        }
    }
}

/// Evaluates through a catalog entry after recognizing `(p, q)` as a member
/// of its family.
pub fn closed_form_permanent(id: &str, p: &Polynomial, q: &Polynomial) -> Result<EvalResult> {
    let entry = catalog::lookup(id)?;
    let params = entry.recognize(p, q).ok_or_else(|| Error::OutOfDomain {
        id: id.to_string(),
        reason: "P and Q are not a member of this family".into(),
    })?;
    let value = entry.closed_form(&params)?;
    let (n, m) = (p.degree().unwrap_or(0), q.degree().unwrap_or(0));
    Ok(EvalResult::exact(value, Method::ClosedForm, n, m).with_note(format!("{id} at {params}")))
}

pub fn evaluate(route: &Route, p: &Polynomial, q: &Polynomial) -> Result<EvalResult> {
    match route {
        Route::Auto => match PKind::detect(p) {
            Some((kind, n)) => per_via_fes(kind, n, q),
            None => scott_permanent(p, q),
        },
        Route::Theorem1 => scott_permanent(p, q),
        Route::Fes => {
            let (kind, n) = PKind::detect(p).ok_or_else(|| Error::OutOfDomain {
                id: "fes".into(),
                reason: "P must be x^n - 1 or x^(n-1) + ... + x + 1".into(),
            })?;
            per_via_fes(kind, n, q)
        }
        Route::Closed(id) => closed_form_permanent(id, p, q),
        Route::Oracle => oracle_permanent(p, q),
        Route::Involution => involution_permanent(p, q),
    }
}

/// Whether two values agree: exactly for two exact values, to
/// [`ROUTE_TOLERANCE`] otherwise.
pub fn values_agree(a: &Value, b: &Value) -> bool {
    match (a, b) {
        (Value::Exact(x), Value::Exact(y)) => x == y,
        _ => approx_eq(a.to_complex(), b.to_complex(), ROUTE_TOLERANCE),
    }
}

#[derive(Debug, Clone)]
pub struct RouteOutcome {
    pub route: Route,
    pub result: Result<EvalResult>,
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub routes: Vec<RouteOutcome>,
    /// `agreement[i][j]` is `None` when either route failed.
    pub agreement: Vec<Vec<Option<bool>>>,
}

impl VerifyReport {
    /// True when at least one route succeeded and all successful routes agree.
    pub fn all_agree(&self) -> bool {
        self.routes.iter().any(|r| r.result.is_ok())
            && self.agreement.iter().flatten().all(|a| a.unwrap_or(true))
    }
}

fn timed(route: Route, p: &Polynomial, q: &Polynomial) -> RouteOutcome {
    let start = Instant::now();
    let result = evaluate(&route, p, q);
    RouteOutcome {
        route,
        result,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

/// The routes that apply to `(p, q)`: theorem1, fes when P is a special
/// family, every catalog entry whose family contains `(p, q)`, oracle and
/// involution.
pub fn applicable_routes(p: &Polynomial, q: &Polynomial) -> Vec<Route> {
    let mut routes = vec![Route::Theorem1];
    if PKind::detect(p).is_some() {
        routes.push(Route::Fes);
    }
    for entry in catalog::entries() {
        if let Some(params) = entry.recognize(p, q) {
            if entry.check(&params).is_ok() {
                routes.push(Route::Closed(entry.id.to_string()));
            }
        }
    }
    routes.push(Route::Oracle);
    routes.push(Route::Involution);
    routes
}

pub fn verify(p: &Polynomial, q: &Polynomial) -> VerifyReport {
    verify_routes(p, q, applicable_routes(p, q))
}

/// Runs the given routes and compares every pair of successful results.
pub fn verify_routes(p: &Polynomial, q: &Polynomial, routes: Vec<Route>) -> VerifyReport {
    let routes: Vec<RouteOutcome> = routes.into_iter().map(|r| timed(r, p, q)).collect();
    let agreement = routes
        .iter()
        .map(|a| {
            routes
                .iter()
                .map(|b| match (&a.result, &b.result) {
                    (Ok(x), Ok(y)) => Some(values_agree(&x.value, &y.value)),
                    _ => None,
                })
                .collect()
        })
        .collect();
    VerifyReport { routes, agreement }
}
