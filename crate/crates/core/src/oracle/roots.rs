use num_complex::Complex64;

use super::ComplexVector;
use crate::error::{Error, Result};
use crate::exact::Polynomial;

#[derive(Debug, Clone, Copy)]
pub struct RootConfig {
    pub max_iterations: usize,
    /// Required scaled residual `|p(z)| / (1 + |lc| |z|^deg)` after polishing.
    pub residual: f64,
}

impl Default for RootConfig {
    fn default() -> Self {
        Self {
            max_iterations: 1000,
            residual: 1e-10,
        }
    }
}

pub fn find_roots(p: &Polynomial) -> Result<ComplexVector> {
    find_roots_with(p, RootConfig::default())
}

/// All complex zeros with multiplicity, by Aberth–Ehrlich simultaneous
/// iteration followed by Newton polishing.
pub fn find_roots_with(p: &Polynomial, cfg: RootConfig) -> Result<ComplexVector> {
    let deg = match p.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ZeroDegree),
        Some(d) => d,
    };
    let raw = p.to_f64_coeffs();
    let lc = raw[deg];
    let coeffs: Vec<Complex64> = raw.iter().map(|&c| Complex64::new(c / lc, 0.0)).collect();

    // Cauchy bound for the initial circle
    let bound = 1.0 + coeffs[..deg].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let radius = bound.min(1e6) * 0.5 + 0.1;
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / deg as f64 + 0.4;
            Complex64::from_polar(radius, theta)
        })
        .collect();

    for _ in 0..cfg.max_iterations {
        let mut max_step: f64 = 0.0;
        for k in 0..deg {
            let (f, df) = horner(&coeffs, z[k]);
            if f == Complex64::new(0.0, 0.0) {
                continue;
            }
            let ratio = f / df;
            let repulsion: Complex64 = (0..deg)
                .filter(|&j| j != k)
                .map(|j| {
                    let d = z[k] - z[j];
                    if d.norm() == 0.0 {
                        Complex64::new(0.0, 0.0)
                    } else {
                        d.inv()
                    }
                })
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
                max_step = max_step.max(step.norm() / (1.0 + z[k].norm()));
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }

    for root in z.iter_mut() {
        for _ in 0..3 {
            let (f, df) = horner(&coeffs, *root);
            if df.norm() == 0.0 {
                break;
            }
            let next = *root - f / df;
            if !next.is_finite() || residual(&coeffs, next) > residual(&coeffs, *root) {
                break;
            }
            *root = next;
        }
    }

    let ok = z.iter().all(|&r| residual(&coeffs, r) < cfg.residual);
    if !ok {
        return Err(Error::DidNotConverge {
            iterations: cfg.max_iterations,
        });
    }
    Ok(ComplexVector(z))
}

fn horner(coeffs: &[Complex64], x: Complex64) -> (Complex64, Complex64) {
    let mut f = Complex64::new(0.0, 0.0);
    let mut df = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        df = df * x + f;
        f = f * x + c;
    }
    (f, df)
}

// coefficients are monic here, so |lc| = 1
fn residual(coeffs: &[Complex64], x: Complex64) -> f64 {
    let deg = coeffs.len() - 1;
    horner(coeffs, x).0.norm() / (1.0 + x.norm().powi(deg as i32))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted(mut v: Vec<Complex64>) -> Vec<Complex64> {
        v.sort_by(|a, b| (a.re, a.im).partial_cmp(&(b.re, b.im)).unwrap());
        v
    }

    fn close(a: &[Complex64], b: &[Complex64]) {
        assert_eq!(a.len(), b.len());
        for (x, y) in sorted(a.to_vec()).iter().zip(sorted(b.to_vec()).iter()) {
            assert!((x - y).norm() < 1e-9, "{x} vs {y}");
        }
    }

    #[test]
    fn known_roots() {
        let r = find_roots(&Polynomial::from_ints(&[-1, 0, 1])).unwrap();
        close(&r.0, &ComplexVector::from_reals(&[1.0, -1.0]).0);

        let r = find_roots(&Polynomial::from_ints(&[-1, 0, 0, 1])).unwrap();
        close(&r.0, &ComplexVector::roots_of_unity(3).0);

        let r = find_roots(&Polynomial::from_ints(&[1, 0, 1])).unwrap();
        close(&r.0, &[Complex64::new(0.0, 1.0), Complex64::new(0.0, -1.0)]);
    }

    #[test]
    fn non_monic_and_repeated() {
        // 2(x-1)^2 (x+3)
        let p = Polynomial::from_ints(&[6, -10, 2, 2]);
        let r = find_roots(&p).unwrap();
        // a double root is only found to about sqrt(machine eps)
        for (x, y) in sorted(r.0).iter().zip(&[-3.0, 1.0, 1.0]) {
            assert!((x - Complex64::new(*y, 0.0)).norm() < 1e-6, "{x}");
        }
    }

    #[test]
    fn degree_zero_rejected() {
        assert_eq!(
            find_roots(&Polynomial::from_ints(&[4])),
            Err(Error::ZeroDegree)
        );
    }

    #[test]
    fn iteration_cap_reported() {
        let cfg = RootConfig {
            max_iterations: 0,
            residual: 1e-10,
        };
        let p = Polynomial::from_ints(&[3, -1, 4, 1, -5, 9, 2]);
        assert_eq!(
            find_roots_with(&p, cfg),
            Err(Error::DidNotConverge { iterations: 0 })
        );
    }

    #[test]
    fn residual_bound_on_degree_twelve() {
        let p = Polynomial::from_ints(&[1, -2, 3, 0, 5, -1, 2, 2, -3, 1, 4, -1, 1]);
        let r = find_roots(&p).unwrap();
        assert_eq!(r.len(), 12);
    }
}
