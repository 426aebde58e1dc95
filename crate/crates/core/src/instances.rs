//! Seeded random test instances: integer-coefficient polynomial pairs that
//! are coprime and have well separated x-roots.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exact::{int, poly_gcd, Polynomial};
use crate::oracle::{find_roots, ComplexVector};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InstanceConfig {
    pub min_deg_p: usize,
    pub max_deg_p: usize,
    pub min_deg_q: usize,
    pub max_deg_q: usize,
    /// Coefficients are drawn from `-coeff_bound..=coeff_bound`.
    pub coeff_bound: i64,
    /// x-roots closer than this are rejected.
    pub min_x_separation: f64,
}

impl Default for InstanceConfig {
    fn default() -> Self {
        Self {
            min_deg_p: 1,
            max_deg_p: 6,
            min_deg_q: 1,
            max_deg_q: 7,
            coeff_bound: 5,
            min_x_separation: 1e-8,
        }
    }
}

/// A coprime pair with the floating roots of both polynomials.
#[derive(Debug, Clone)]
pub struct Instance {
    pub p: Polynomial,
    pub q: Polynomial,
    pub x: ComplexVector,
    pub y: ComplexVector,
}

fn random_monic(rng: &mut ChaCha8Rng, deg: usize, bound: i64) -> Polynomial {
    let mut cs: Vec<i64> = (0..deg).map(|_| rng.gen_range(-bound..=bound)).collect();
    cs.push(1);
    Polynomial::from_ints(&cs)
}

/// One accepted instance with `deg P` and `deg Q` fixed.
pub fn random_instance_with_degrees(
    rng: &mut ChaCha8Rng,
    n: usize,
    m: usize,
    cfg: &InstanceConfig,
) -> Instance {
    loop {
        let p = random_monic(rng, n, cfg.coeff_bound);
        let q = random_monic(rng, m, cfg.coeff_bound);
        if let Some(inst) = accept(p, q, cfg) {
            return inst;
        }
    }
}

/// A coprime pair built around a fixed P; `None` if P itself is unusable.
pub fn random_partner(
    rng: &mut ChaCha8Rng,
    p: &Polynomial,
    m: usize,
    cfg: &InstanceConfig,
) -> Option<Instance> {
    for _ in 0..1000 {
        let mut cs: Vec<i64> = (0..=m)
            .map(|_| rng.gen_range(-cfg.coeff_bound..=cfg.coeff_bound))
            .collect();
        if cs[m] == 0 {
            cs[m] = 1;
        }
        if let Some(inst) = accept(p.clone(), Polynomial::from_ints(&cs), cfg) {
            return Some(inst);
        }
    }
    None
}

fn accept(p: Polynomial, q: Polynomial, cfg: &InstanceConfig) -> Option<Instance> {
    let g = poly_gcd(&p, &q).ok()?;
    if g.degree() != Some(0) {
        return None;
    }
    let x = find_roots(&p).ok()?;
    if x.min_separation() < cfg.min_x_separation {
        return None;
    }
    let y = if q.degree() == Some(0) {
        ComplexVector::default()
    } else {
        find_roots(&q).ok()?
    };
    Some(Instance { p, q, x, y })
}

/// `count` instances from a fixed seed, degrees uniform in the configured ranges.
pub fn random_instances(seed: u64, count: usize, cfg: &InstanceConfig) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(cfg.min_deg_p..=cfg.max_deg_p);
            let m = rng.gen_range(cfg.min_deg_q..=cfg.max_deg_q);
            random_instance_with_degrees(&mut rng, n, m, cfg)
        })
        .collect()
}

/// Nonzero rational scale factor `num/den` with small parts.
pub fn random_scale(rng: &mut ChaCha8Rng) -> crate::exact::Rational {
    let num = loop {
        let v = rng.gen_range(-9i64..=9);
        if v != 0 {
            break v;
        }
    };
    int(num) / int(rng.gen_range(1i64..=7))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_valid() {
        let cfg = InstanceConfig::default();
        let a = random_instances(42, 20, &cfg);
        let b = random_instances(42, 20, &cfg);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.p, y.p);
            assert_eq!(x.q, y.q);
            let n = x.p.degree().unwrap();
            assert!((1..=6).contains(&n));
            assert_eq!(x.x.len(), n);
            assert_eq!(poly_gcd(&x.p, &x.q).unwrap().degree(), Some(0));
        }
    }

    #[test]
    fn partner_for_fixed_p() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let p = Polynomial::power_minus_one(4);
        let inst = random_partner(&mut rng, &p, 6, &InstanceConfig::default()).unwrap();
        assert_eq!(inst.p, p);
        assert_eq!(inst.q.degree(), Some(6));
    }
}
