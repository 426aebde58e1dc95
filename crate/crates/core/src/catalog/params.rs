use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{int, Rational};

/// One named parameter value of a catalog entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamValue {
    Int(i64),
    Rat(Rational),
    List(Vec<Rational>),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::Rat(v) => write!(f, "{v}"),
            ParamValue::List(vs) => {
                let parts: Vec<String> = vs.iter().map(ToString::to_string).collect();
                write!(f, "[{}]", parts.join(","))
            }
        }
    }
}

/// Named parameters, e.g. `n=3,a=1/2,as=[1,0,2]`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Params(BTreeMap<String, ParamValue>);

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, value: ParamValue) -> Self {
        self.0.insert(name.to_string(), value);
        self
    }

    pub fn int(self, name: &str, v: i64) -> Self {
        self.with(name, ParamValue::Int(v))
    }

    pub fn rat(self, name: &str, v: Rational) -> Self {
        match v.to_integer().to_i64() {
            Some(i) if v.is_integer() => self.int(name, i),
            _ => self.with(name, ParamValue::Rat(v)),
        }
    }

    pub fn list(self, name: &str, v: Vec<Rational>) -> Self {
        self.with(name, ParamValue::List(v))
    }

    pub fn get(&self, name: &str) -> Option<&ParamValue> {
        self.0.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.0.keys().map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &ParamValue)> {
        self.0.iter()
    }

    fn missing(name: &str) -> Error {
        Error::BadParams(format!("missing parameter `{name}`"))
    }

    /// A nonnegative integer parameter.
    pub fn count(&self, name: &str) -> Result<usize> {
        match self.get(name).ok_or_else(|| Self::missing(name))? {
            ParamValue::Int(v) if *v >= 0 => Ok(*v as usize),
            other => Err(Error::BadParams(format!(
                "`{name}` must be a nonnegative integer, got {other}"
            ))),
        }
    }

    pub fn rational(&self, name: &str) -> Result<Rational> {
        match self.get(name).ok_or_else(|| Self::missing(name))? {
            ParamValue::Int(v) => Ok(int(*v)),
            ParamValue::Rat(v) => Ok(v.clone()),
            ParamValue::List(_) => Err(Error::BadParams(format!("`{name}` must be a number"))),
        }
    }

    pub fn rationals(&self, name: &str) -> Result<Vec<Rational>> {
        match self.get(name).ok_or_else(|| Self::missing(name))? {
            ParamValue::List(v) => Ok(v.clone()),
            ParamValue::Int(v) => Ok(vec![int(*v)]),
            ParamValue::Rat(v) => Ok(vec![v.clone()]),
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(","))
    }
}

fn parse_rational(text: &str, at: usize) -> Result<Rational> {
    let bad = |message: String| Error::Parse {
        position: at,
        message,
    };
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let num =
        BigInt::from_str(num).map_err(|_| bad(format!("expected a number, found `{num}`")))?;
    let den =
        BigInt::from_str(den).map_err(|_| bad(format!("expected a denominator, found `{den}`")))?;
    if den.is_zero() {
        return Err(bad("zero denominator".into()));
    }
    Ok(Rational::new(num, den))
}

impl FromStr for Params {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut out = Params::new();
        let mut rest = text;
        let mut offset = 0;
        while !rest.trim().is_empty() {
            let eq = rest.find('=').ok_or(Error::Parse {
                position: offset,
                message: "expected `name=value`".into(),
            })?;
            let name = rest[..eq].trim().trim_start_matches(',').trim();
            if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::Parse {
                    position: offset,
                    message: format!("bad parameter name `{name}`"),
                });
            }
            let value_start = eq + 1;
            let after = &rest[value_start..];
            let trimmed = after.trim_start();
            let lead = after.len() - trimmed.len();
            let (value, used) = if trimmed.starts_with('[') {
                let close = trimmed.find(']').ok_or(Error::Parse {
                    position: offset + value_start + lead,
                    message: "unclosed `[`".into(),
                })?;
                let inner = &trimmed[1..close];
                let items = if inner.trim().is_empty() {
                    Vec::new()
                } else {
                    inner
                        .split(',')
                        .map(|s| parse_rational(s, offset + value_start + lead + 1))
                        .collect::<Result<Vec<_>>>()?
                };
                (ParamValue::List(items), lead + close + 1)
            } else {
                let end = trimmed.find(',').unwrap_or(trimmed.len());
                let r = parse_rational(&trimmed[..end], offset + value_start + lead)?;
                let v = match r.to_integer().to_i64() {
                    Some(i) if r.is_integer() => ParamValue::Int(i),
                    _ => ParamValue::Rat(r),
                };
                (v, lead + end)
            };
            out.0.insert(name.to_string(), value);
            let consumed = value_start + used;
            offset += consumed;
            rest = &rest[consumed..];
            let skip = rest.len() - rest.trim_start_matches([',', ' ']).len();
            offset += skip;
            rest = &rest[skip..];
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn parse_and_print() {
        let p: Params = "n=3, a=1/2,as=[1, -2, 3/4],b=-4".parse().unwrap();
        assert_eq!(p.count("n").unwrap(), 3);
        assert_eq!(p.rational("a").unwrap(), rat(1, 2));
        assert_eq!(p.rationals("as").unwrap(), vec![int(1), int(-2), rat(3, 4)]);
        assert_eq!(p.rational("b").unwrap(), int(-4));
        assert_eq!(p.to_string(), "a=1/2,as=[1,-2,3/4],b=-4,n=3");
        assert_eq!(p.to_string().parse::<Params>().unwrap(), p);
        assert_eq!("".parse::<Params>().unwrap(), Params::new());
    }

    #[test]
    fn integral_rationals_become_ints() {
        let p: Params = "a=4/2".parse().unwrap();
        assert_eq!(p.get("a"), Some(&ParamValue::Int(2)));
        assert_eq!(
            Params::new().rat("a", rat(6, 3)).get("a"),
            Some(&ParamValue::Int(2))
        );
    }

    #[test]
    fn errors() {
        assert!(matches!("n".parse::<Params>(), Err(Error::Parse { .. })));
        assert!(matches!("n=x".parse::<Params>(), Err(Error::Parse { .. })));
        assert!(matches!(
            "n=1/0".parse::<Params>(),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            "as=[1,2".parse::<Params>(),
            Err(Error::Parse { .. })
        ));
        let p: Params = "n=-1".parse().unwrap();
        assert!(matches!(p.count("n"), Err(Error::BadParams(_))));
        assert!(matches!(p.count("m"), Err(Error::BadParams(_))));
    }
}
