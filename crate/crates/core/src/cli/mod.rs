//! Command implementations behind the `scottper` binary. Each command returns
//! its stdout, stderr and exit code so it can be driven from tests.

mod parse;

use std::ops::RangeInclusive;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value as Json};

pub use parse::{parse_poly, PolyExpr};

use crate::catalog::{self, Params};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::instances::{random_instance_with_degrees, InstanceConfig};
use crate::scott::{oracle_permanent, scott_permanent, EvalResult, Value};
use crate::verify::{applicable_routes, evaluate, values_agree, verify_routes, Route};

/// Default cap on n for the exponential routes.
pub const DEFAULT_MAX_N: usize = 10;

/// Timings are repeated until this much wall time has been spent.
const BENCH_MIN_MS: f64 = 20.0;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }

    fn json(v: &Json) -> Self {
        Self::ok(v.to_string())
    }

    fn fail(e: &Error) -> Self {
        Self {
            stdout: String::new(),
            stderr: error_json(e).to_string(),
            code: exit_code(e),
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::SharedRoot => 2,
        Error::Parse { .. } => 3,
        Error::OutOfDomain { .. } => 4,
        _ => 1,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::ZeroConstantTerm => "ZeroConstantTerm",
        Error::ZeroPolynomial => "ZeroPolynomial",
        Error::BothZero => "BothZero",
        Error::NonSquare { .. } => "NonSquare",
        Error::DimensionMismatch(_) => "DimensionMismatch",
        Error::ZeroDegree => "ZeroDegree",
        Error::ZeroLeadingCoefficient => "ZeroLeadingCoefficient",
        Error::SharedRoot => "SharedRoot",
        Error::DidNotConverge { .. } => "DidNotConverge",
        Error::SingularEntry { .. } => "SingularEntry",
        Error::RepeatedXRoot { .. } => "RepeatedXRoot",
        Error::BadParams(_) => "BadParams",
        Error::OutOfDomain { .. } => "OutOfDomain",
        Error::UnknownEntry(_) => "UnknownEntry",
        Error::Parse { .. } => "ParseError",
    }
}

pub fn error_json(e: &Error) -> Json {
    let mut obj = json!({ "error": error_kind(e), "message": e.to_string() });
    match e {
        Error::Parse { position, .. } => obj["position"] = json!(position),
        Error::OutOfDomain { id, .. } => obj["id"] = json!(id),
        _ => {}
    }
    obj
}

/// Exact values as decimal-string fractions, floating ones as `re`/`im`.
pub fn value_json(v: &Value) -> Json {
    match v {
        Value::Exact(r) => rational_json(r),
        Value::Approx(z) => json!({ "re": z.re, "im": z.im }),
    }
}

pub fn rational_json(r: &Rational) -> Json {
    json!({ "num": r.numer().to_string(), "den": r.denom().to_string() })
}

fn result_json(r: &EvalResult, elapsed_ms: f64) -> Json {
    json!({
        "n": r.n,
        "m": r.m,
        "method": r.method.as_str(),
        "value": value_json(&r.value),
        "elapsed_ms": elapsed_ms,
        "notes": r.notes,
    })
}

fn ms_since(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn parse_pair(p: &str, q: &str) -> Result<(PolyExpr, PolyExpr)> {
    Ok((parse_poly(p)?, parse_poly(q)?))
}

/// Evaluates `PER(P, Q)` by one route; `method` is a [`Route`] name.
pub fn cmd_eval(p: &str, q: &str, method: &str) -> Output {
    let run = || -> Result<Json> {
        let route: Route = method.parse()?;
        let (p, q) = parse_pair(p, q)?;
        let start = Instant::now();
        let mut r = evaluate(&route, &p.parsed, &q.parsed)?;
        let elapsed = ms_since(start);
        r.notes.extend(p.warnings.iter().map(|w| format!("P: {w}")));
        r.notes.extend(q.warnings.iter().map(|w| format!("Q: {w}")));
        Ok(result_json(&r, elapsed))
    };
    match run() {
        Ok(v) => Output::json(&v),
        Err(e) => Output::fail(&e),
    }
}

/// Runs every applicable route and reports pairwise agreement. The floating
/// routes are skipped when `deg P > max_n`.
pub fn cmd_verify(p: &str, q: &str, max_n: usize) -> Output {
    let (pe, qe) = match parse_pair(p, q) {
        Ok(pair) => pair,
        Err(e) => return Output::fail(&e),
    };
    let (p, q) = (&pe.parsed, &qe.parsed);
    let n = p.degree().unwrap_or(0);
    let routes = applicable_routes(p, q)
        .into_iter()
        .filter(|r| n <= max_n || !matches!(r, Route::Oracle | Route::Involution))
        .collect();
    let report = verify_routes(p, q, routes);
    let routes: Vec<Json> = report
        .routes
        .iter()
        .map(|o| match &o.result {
            Ok(r) => json!({
                "route": o.route.to_string(),
                "value": value_json(&r.value),
                "elapsed_ms": o.elapsed_ms,
                "notes": r.notes,
            }),
            Err(e) => json!({ "route": o.route.to_string(), "error": error_json(e), "elapsed_ms": o.elapsed_ms }),
        })
        .collect();
    let all_agree = report.all_agree();
    let body = json!({
        "p": p.render(&pe.variable),
        "q": q.render(&qe.variable),
        "routes": routes,
        "agreement": report.agreement,
        "all_agree": all_agree,
    });
    let code = if all_agree {
        0
    } else if let Some(e) = report
        .routes
        .iter()
        .all(|o| o.result.is_err())
        .then(|| report.routes[0].result.as_ref().err())
        .flatten()
    {
        exit_code(e)
    } else {
        1
    };
    Output {
        stdout: body.to_string(),
        stderr: String::new(),
        code,
    }
}

/// Lists catalog entries. `id` selects one entry, `filter` keeps entries
/// whose id, statement or domain contains it, and `params` (with `id`)
/// evaluates the closed form and its polynomial family.
pub fn cmd_catalog(id: Option<&str>, filter: Option<&str>, params: Option<&str>) -> Output {
    let run = || -> Result<Json> {
        if let Some(text) = params {
            let id = id.ok_or_else(|| Error::BadParams("--params needs --id".into()))?;
            let entry = catalog::lookup(id)?;
            let params: Params = text.parse()?;
            let value = entry.closed_form(&params)?;
            let (p, q) = entry.family(&params)?;
            let mut info = serde_json::to_value(entry.info()).expect("serializable");
            info["at"] = json!(params.to_string());
            info["value"] = rational_json(&value);
            info["P"] = json!(p.render("x"));
            info["Q"] = json!(q.render("y"));
            return Ok(info);
        }
        let listing = match id {
            Some(id) => {
                catalog::lookup(id)?;
                catalog::listing()
                    .into_iter()
                    .filter(|e| e.id == id)
                    .collect()
            }
            None => catalog::listing(),
        };
        let kept: Vec<_> = listing
            .into_iter()
            .filter(|e| {
                filter.is_none_or(|f| {
                    e.id.contains(f) || e.statement.contains(f) || e.domain.contains(f)
                })
            })
            .collect();
        Ok(serde_json::to_value(kept).expect("serializable"))
    };
    match run() {
        Ok(v) => Output::json(&v),
        Err(e) => Output::fail(&e),
    }
}

/// Parses `"6..10"` (inclusive) or a single `"7"`.
pub fn parse_range(text: &str) -> Result<RangeInclusive<usize>> {
    let bad = |position: usize, what: &str| Error::Parse {
        position,
        message: format!("expected {what}"),
    };
    let num = |s: &str, at: usize| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| bad(at, "a non-negative integer"))
    };
    match text.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            let (lo, hi) = (num(a, 0)?, num(b, a.len() + 2)?);
            if lo > hi {
                return Err(bad(0, "an increasing range"));
            }
            Ok(lo..=hi)
        }
        None => num(text, 0).map(|v| v..=v),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    /// `None` when `n` exceeds the oracle cap.
    pub oracle_ms: Option<f64>,
    pub theorem1_ms: f64,
    pub agree: Option<bool>,
}

/// Mean wall time of `f` over enough repetitions to fill [`BENCH_MIN_MS`].
fn mean_ms<T>(mut f: impl FnMut() -> T) -> (T, f64) {
    let start = Instant::now();
    let mut out = f();
    let mut reps = 1u32;
    while ms_since(start) < BENCH_MIN_MS {
        out = f();
        reps += 1;
    }
    (out, ms_since(start) / f64::from(reps))
}

/// One random instance per `(n, m)`; `m` defaults to `n`.
pub fn bench_rows(
    ns: RangeInclusive<usize>,
    ms: Option<RangeInclusive<usize>>,
    seed: u64,
    max_n: usize,
) -> Result<Vec<BenchRow>> {
    let cfg = InstanceConfig::default();
    let mut rows = Vec::new();
    for n in ns.filter(|&n| n >= 1) {
        let m_values: Vec<usize> = match &ms {
            Some(r) => r.clone().filter(|&m| m >= 1).collect(),
            None => vec![n],
        };
        for m in m_values {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add((n * 1000 + m) as u64));
            let inst = random_instance_with_degrees(&mut rng, n, m, &cfg);
            let (exact, theorem1_ms) = mean_ms(|| scott_permanent(&inst.p, &inst.q));
            let exact = exact?;
            let (oracle_ms, agree) = if n <= max_n {
                let (approx, ms) = mean_ms(|| oracle_permanent(&inst.p, &inst.q));
                (Some(ms), Some(values_agree(&exact.value, &approx?.value)))
            } else {
                (None, None)
            };
            rows.push(BenchRow {
                n,
                m,
                oracle_ms,
                theorem1_ms,
                agree,
            });
        }
    }
    Ok(rows)
}

fn csv_cell<T: ToString>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

/// Oracle vs theorem1 timings as CSV, or a JSON array with `json`.
pub fn cmd_bench(
    n_range: &str,
    m_range: Option<&str>,
    seed: u64,
    max_n: usize,
    json: bool,
) -> Output {
    let run = || -> Result<String> {
        let ns = parse_range(n_range)?;
        let ms = m_range.map(parse_range).transpose()?;
        let rows = bench_rows(ns, ms, seed, max_n)?;
        if json {
            return Ok(serde_json::to_string(&rows).expect("serializable"));
        }
        let mut out = String::from("n,m,oracle_ms,theorem1_ms,agree\n");
        for r in &rows {
            out += &format!(
                "{},{},{},{:.6},{}\n",
                r.n,
                r.m,
                csv_cell(r.oracle_ms.map(|v| format!("{v:.6}"))),
                r.theorem1_ms,
                csv_cell(r.agree)
            );
        }
        Ok(out)
    };
    match run() {
        Ok(s) => Output::ok(s),
        Err(e) => Output::fail(&e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parsed(o: &Output) -> Json {
        serde_json::from_str(&o.stdout).unwrap()
    }

    #[test]
    fn eval_scott_and_headline() {
        let o = cmd_eval("x^3-1", "y^3+1", "theorem1");
        assert_eq!(o.code, 0, "{}", o.stderr);
        assert_eq!(parsed(&o)["value"], json!({"num": "-3", "den": "8"}));
        let o = cmd_eval("x^3-1", "y^6+y^3+1", "auto");
        let v = parsed(&o);
        assert_eq!(v["value"], json!({"num": "6", "den": "1"}));
        assert_eq!(v["method"], "fes");
    }

    #[test]
    fn eval_keys_are_stable() {
        for method in [
            "auto",
            "theorem1",
            "fes",
            "oracle",
            "involution",
            "closed:cor27",
        ] {
            let o = cmd_eval("x^3-1", "y^4+1", method);
            assert_eq!(o.code, 0, "{method}: {}", o.stderr);
            let v = parsed(&o);
            let mut keys: Vec<&String> = v.as_object().unwrap().keys().collect();
            keys.sort();
            assert_eq!(
                keys,
                ["elapsed_ms", "m", "method", "n", "notes", "value"],
                "{method}"
            );
        }
    }

    #[test]
    fn eval_exit_codes() {
        let o = cmd_eval("x^2-1", "y^2-1", "auto");
        assert_eq!(o.code, 2);
        let err: Json = serde_json::from_str(&o.stderr).unwrap();
        assert_eq!(err["error"], "SharedRoot");
        assert_eq!(cmd_eval("x^^2", "y", "auto").code, 3);
        assert_eq!(cmd_eval("x^2+x+3", "y^2+1", "fes").code, 4);
        assert_eq!(cmd_eval("x^3-1", "y^2+5", "closed:cor27").code, 4);
        assert_eq!(cmd_eval("x-1", "y", "nope").code, 1);
    }

    #[test]
    fn verify_cor27() {
        let o = cmd_verify("x^3-1", "y^4+1", DEFAULT_MAX_N);
        assert_eq!(o.code, 0);
        let v = parsed(&o);
        assert_eq!(v["all_agree"], true);
        let routes = v["routes"].as_array().unwrap();
        assert!(routes.iter().any(|r| r["route"] == "closed:cor27"));
        for r in routes.iter().filter(|r| r["value"].get("num").is_some()) {
            assert_eq!(r["value"], json!({"num": "12", "den": "1"}));
        }
        assert_eq!(cmd_verify("x^2-1", "y^2-1", DEFAULT_MAX_N).code, 2);
    }

    #[test]
    fn catalog_queries() {
        let v = parsed(&cmd_catalog(Some("cor19"), None, None));
        assert_eq!(v[0]["domain"], "a ≠ −2");
        assert_eq!(
            parsed(&cmd_catalog(None, None, None))
                .as_array()
                .unwrap()
                .len(),
            catalog::listing().len()
        );
        let v = parsed(&cmd_catalog(Some("cor27"), None, Some("n=3")));
        assert_eq!(v["value"], json!({"num": "12", "den": "1"}));
        assert_eq!(cmd_catalog(Some("nope"), None, None).code, 1);
        assert_eq!(cmd_catalog(None, None, Some("n=3")).code, 1);
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("6..10").unwrap(), 6..=10);
        assert_eq!(parse_range("2..=4").unwrap(), 2..=4);
        assert_eq!(parse_range("7").unwrap(), 7..=7);
        assert!(matches!(parse_range("5..2"), Err(Error::Parse { .. })));
        assert!(matches!(parse_range("a..2"), Err(Error::Parse { .. })));
    }

    #[test]
    fn bench_small() {
        let o = cmd_bench("2..3", Some("3"), 1, 2, false);
        let lines: Vec<&str> = o.stdout.lines().collect();
        assert_eq!(lines[0], "n,m,oracle_ms,theorem1_ms,agree");
        assert!(lines[1].starts_with("2,3,") && lines[1].ends_with(",true"));
        assert!(lines[2].starts_with("3,3,,") && lines[2].ends_with(','));
    }
}
