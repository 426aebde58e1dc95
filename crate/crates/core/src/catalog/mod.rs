//! Closed-form evaluations of Scott-type permanents for structured
//! families, and the involution-sum identities they imply.

mod entries;
mod identities;
mod params;

use std::sync::LazyLock;

use num_traits::Zero;
use serde::Serialize;

pub use entries::thm39_printed;
pub use identities::{identities, involution_identity_check, Identity, IdentityReport};
pub use params::{ParamValue, Params};

use crate::error::{Error, Result};
use crate::exact::{resultant, Polynomial, Rational};

/// One closed-form result: a polynomial family and its permanent.
#[derive(Clone)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub statement: &'static str,
    pub params: &'static [&'static str],
    pub domain: &'static str,
    check: fn(&Params) -> Result<()>,
    family: fn(&Params) -> Result<(Polynomial, Polynomial)>,
    closed_form: fn(&Params) -> Result<Rational>,
    grid: fn() -> Vec<Params>,
    recognize: fn(&Polynomial, &Polynomial) -> Option<Params>,
}

impl std::fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CatalogEntry")
            .field("id", &self.id)
            .field("domain", &self.domain)
            .finish()
    }
}

/// Serializable view of an entry for listings.
#[derive(Debug, Clone, Serialize)]
pub struct EntryInfo {
    pub id: &'static str,
    pub kind: &'static str,
    pub statement: &'static str,
    pub params: Vec<&'static str>,
    pub domain: &'static str,
}

impl CatalogEntry {
    fn tag(&self, e: Error) -> Error {
        match e {
            Error::OutOfDomain { reason, .. } => Error::OutOfDomain {
                id: self.id.to_string(),
                reason,
            },
            other => other,
        }
    }

    /// Entry hypotheses plus the global ones: Q nonconstant and coprime to P.
    pub fn check(&self, p: &Params) -> Result<()> {
        (self.check)(p).map_err(|e| self.tag(e))?;
        let (pp, qq) = (self.family)(p)?;
        let out = |reason: &str| Error::OutOfDomain {
            id: self.id.to_string(),
            reason: reason.to_string(),
        };
        if pp.degree().unwrap_or(0) == 0 || qq.degree().unwrap_or(0) == 0 {
            return Err(out("P and Q must have positive degree"));
        }
        if resultant(&pp, &qq)?.is_zero() {
            return Err(out("P and Q share a zero"));
        }
        Ok(())
    }

    pub fn family(&self, p: &Params) -> Result<(Polynomial, Polynomial)> {
        self.check(p)?;
        (self.family)(p)
    }

    pub fn closed_form(&self, p: &Params) -> Result<Rational> {
        self.check(p)?;
        (self.closed_form)(p).map_err(|e| self.tag(e))
    }

    /// The fixed parameter grid, unfiltered.
    pub fn raw_grid(&self) -> Vec<Params> {
        (self.grid)()
    }

    /// Grid points that pass every domain check.
    pub fn grid(&self) -> Vec<Params> {
        self.raw_grid()
            .into_iter()
            .filter(|p| self.check(p).is_ok())
            .collect()
    }

    /// Parameters whose family has the zero sets of `(p, q)`, if any.
    pub fn recognize(&self, p: &Polynomial, q: &Polynomial) -> Option<Params> {
        let params = (self.recognize)(p, q)?;
        let (fp, fq) = (self.family)(&params).ok()?;
        let same = |a: &Polynomial, b: &Polynomial| matches!((a.monic(), b.monic()), (Ok(x), Ok(y)) if x == y);
        (same(&fp, p) && same(&fq, q)).then_some(params)
    }

    pub fn info(&self) -> EntryInfo {
        EntryInfo {
            id: self.id,
            kind: "permanent",
            statement: self.statement,
            params: self.params.to_vec(),
            domain: self.domain,
        }
    }
}

static ENTRIES: LazyLock<Vec<CatalogEntry>> = LazyLock::new(entries::all);

pub fn entries() -> &'static [CatalogEntry] {
    &ENTRIES
}

pub fn lookup(id: &str) -> Result<&'static CatalogEntry> {
    entries()
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownEntry(id.to_string()))
}

pub fn catalog_eval(id: &str, params: &Params) -> Result<Rational> {
    lookup(id)?.closed_form(params)
}

pub fn catalog_family(id: &str, params: &Params) -> Result<(Polynomial, Polynomial)> {
    lookup(id)?.family(params)
}

/// Metadata for every permanent entry and every involution identity.
pub fn listing() -> Vec<EntryInfo> {
    entries()
        .iter()
        .map(CatalogEntry::info)
        .chain(identities().iter().map(Identity::info))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use crate::scott::scott_permanent;

    fn params(text: &str) -> Params {
        text.parse().unwrap()
    }

    #[test]
    fn ids_unique_and_listed() {
        let mut ids: Vec<_> = entries().iter().map(|e| e.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), entries().len());
        assert_eq!(listing().len(), entries().len() + 4);
        assert_eq!(
            lookup("cor99").unwrap_err(),
            Error::UnknownEntry("cor99".into())
        );
    }

    #[test]
    fn worked_values() {
        assert_eq!(catalog_eval("cor19", &params("n=3,a=1")).unwrap(), int(6));
        assert_eq!(catalog_eval("cor27", &params("n=3")).unwrap(), int(12));
        assert_eq!(catalog_eval("cor30", &params("n=2")).unwrap(), int(-2));
        assert_eq!(catalog_eval("cor31", &params("n=4")).unwrap(), int(1));
        assert_eq!(
            catalog_eval("thm38", &params("n=3,m=2,a=0")).unwrap(),
            int(20)
        );
    }

    #[test]
    fn worked_families() {
        let (p, q) = catalog_family("cor17", &params("n=2,m=3")).unwrap();
        assert_eq!(
            (p, q),
            (
                Polynomial::from_ints(&[-1, 0, 1]),
                Polynomial::from_ints(&[1, 0, 0, 0, 0, 0, 1])
            )
        );
        let (_, q) = catalog_family("cor31", &params("n=3")).unwrap();
        assert_eq!(q, Polynomial::from_ints(&[-1, 3, 0, 1]));
        let (p, q) = catalog_family("thm39", &params("n=3,m=2,a=1")).unwrap();
        assert_eq!(
            (p, q),
            (
                Polynomial::from_ints(&[1, 1, 1]),
                Polynomial::from_ints(&[1, 2, 3, 4, 5])
            )
        );
    }

    #[test]
    fn domain_violations_are_named() {
        let err = catalog_eval("cor19", &params("n=3,a=-2")).unwrap_err();
        assert_eq!(
            err,
            Error::OutOfDomain {
                id: "cor19".into(),
                reason: "a ≠ −2".into()
            }
        );
        assert!(matches!(
            catalog_eval("cor26", &params("n=4,m=3")),
            Err(Error::OutOfDomain { .. })
        ));
        assert!(matches!(
            catalog_eval("thm37", &params("n=6,m=1,s=4,a=0")),
            Err(Error::OutOfDomain { .. })
        ));
        assert!(matches!(
            catalog_eval("cor23", &params("n=2,m=4,b=2")),
            Err(Error::OutOfDomain { .. })
        ));
        assert!(matches!(
            catalog_eval("cor19", &params("n=3")),
            Err(Error::BadParams(_))
        ));
        assert_eq!(lookup("cor19").unwrap().domain, "a ≠ −2");
    }

    #[test]
    fn specialization_lattice() {
        for n in 1..=5 {
            for m in 1..=4 {
                let nm = format!("n={n},m={m}");
                // cor12 is cor11 with every coefficient 1
                let ones = format!("n={n},as=[{}]", vec!["1"; m + 1].join(","));
                assert_eq!(
                    catalog_eval("cor12", &params(&nm)).unwrap(),
                    catalog_eval("cor11", &params(&ones)).unwrap()
                );
                // cor17 is thm10 with as = [1], bs = [1], r = mn
                let t10 = format!("n={n},r={},as=[1],bs=[1]", m * n);
                assert_eq!(
                    catalog_eval("cor17", &params(&nm)).unwrap(),
                    catalog_eval("thm10", &params(&t10)).unwrap()
                );
            }
            for a in [-1, 0, 1, 3] {
                // cor19 is cor18 at m = 2, r = 1, b = 1
                let c18 = format!("n={n},m=2,r=1,a={a},b=1");
                let c19 = format!("n={n},a={a}");
                assert_eq!(
                    catalog_eval("cor19", &params(&c19)).unwrap(),
                    catalog_eval("cor18", &params(&c18)).unwrap()
                );
            }
        }
    }

    #[test]
    fn printed_thm39_misses_a_factor() {
        let p = params("n=3,m=2,a=1");
        let fixed = catalog_eval("thm39", &p).unwrap();
        let (pp, qq) = catalog_family("thm39", &p).unwrap();
        assert_eq!(&fixed, scott_permanent(&pp, &qq).unwrap().rational());
        assert_eq!(fixed, int(6) * thm39_printed(3, 2, &int(1)));
    }

    #[test]
    fn recognition_round_trip() {
        for entry in entries() {
            for p in entry.grid().into_iter().take(12) {
                let (pp, qq) = entry.family(&p).unwrap();
                let found = entry
                    .recognize(&pp, &qq.scale(&rat(-3, 2)))
                    .unwrap_or_else(|| panic!("{} {p}", entry.id));
                assert_eq!(
                    entry.closed_form(&found).unwrap(),
                    entry.closed_form(&p).unwrap(),
                    "{} {p}",
                    entry.id
                );
            }
        }
    }
}
