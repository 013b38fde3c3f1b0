//! Real roots of low-degree polynomials on an interval.

use nalgebra::{DMatrix, Schur};

use crate::error::{Error, Result};

/// Evaluates a polynomial given by ascending coefficients.
pub fn eval_poly(coef: &[f64], x: f64) -> f64 {
    coef.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

fn eval_with_derivative(coef: &[f64], x: f64) -> (f64, f64) {
    let mut p = 0.0;
    let mut dp = 0.0;
    for &c in coef.iter().rev() {
        dp = dp * x + p;
        p = p * x + c;
    }
    (p, dp)
}

/// Real roots in `[lo, hi]` of the polynomial with ascending coefficients
/// `coef`, from the companion-matrix eigenvalues polished by Newton steps.
/// Sorted ascending.
///
/// Fails with [`Error::IllConditioned`] when every coefficient vanishes.
pub fn real_roots_in(coef: &[f64], lo: f64, hi: f64) -> Result<Vec<f64>> {
    let scale = coef.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    if scale == 0.0 || !scale.is_finite() {
        return Err(Error::IllConditioned);
    }
    let mut deg = coef.len() - 1;
    while deg > 0 && coef[deg].abs() <= 1e-13 * scale {
        deg -= 1;
    }
    if deg == 0 {
        return if coef[0].abs() <= 1e-13 * scale {
            Err(Error::IllConditioned)
        } else {
            Ok(Vec::new())
        };
    }
    let p = &coef[..=deg];
    let lead = p[deg];
    let mut m = DMatrix::<f64>::zeros(deg, deg);
    for i in 1..deg {
        m[(i, i - 1)] = 1.0;
    }
    for i in 0..deg {
        m[(i, deg - 1)] = -p[i] / lead;
    }
    let seeds: Vec<f64> = match Schur::try_new(m, f64::EPSILON, 500) {
        Some(schur) => schur
            .complex_eigenvalues()
            .iter()
            .filter(|z| z.im.abs() <= 1e-6 * (1.0 + z.re.abs()))
            .map(|z| z.re)
            .collect(),
        None => bracketed_roots(p, lo, hi),
    };

    let slack = 1e-9 * (1.0 + hi.abs().max(lo.abs()));
    let mut out: Vec<f64> = Vec::new();
    for mut x in seeds {
        for _ in 0..8 {
            let (f, df) = eval_with_derivative(p, x);
            if df == 0.0 || f == 0.0 {
                break;
            }
            let step = f / df;
            x -= step;
            if step.abs() <= 1e-16 * (1.0 + x.abs()) {
                break;
            }
        }
        if x.is_finite() && x >= lo - slack && x <= hi + slack {
            out.push(x.clamp(lo, hi));
        }
    }
    out.sort_by(f64::total_cmp);
    out.dedup_by(|a, b| (*a - *b).abs() <= 1e-12);
    Ok(out)
}

/// Sign changes on a fine grid refined by bisection; used when the
/// eigenvalue iteration does not converge.
fn bracketed_roots(p: &[f64], lo: f64, hi: f64) -> Vec<f64> {
    const STEPS: usize = 4096;
    let mut out = Vec::new();
    let at = |k: usize| lo + (hi - lo) * k as f64 / STEPS as f64;
    let mut prev = eval_poly(p, lo);
    if prev == 0.0 {
        out.push(lo);
    }
    for k in 1..=STEPS {
        let x = at(k);
        let f = eval_poly(p, x);
        if f == 0.0 {
            out.push(x);
        } else if prev * f < 0.0 {
            let (mut a, mut b, mut fa) = (at(k - 1), x, prev);
            for _ in 0..60 {
                let m = 0.5 * (a + b);
                let fm = eval_poly(p, m);
                if fa * fm <= 0.0 {
                    b = m;
                } else {
                    a = m;
                    fa = fm;
                }
            }
            out.push(0.5 * (a + b));
        }
        prev = f;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn from_roots(roots: &[f64]) -> Vec<f64> {
        let mut c = vec![1.0];
        for &r in roots {
            let mut next = vec![0.0; c.len() + 1];
            for (i, &a) in c.iter().enumerate() {
                next[i + 1] += a;
                next[i] -= a * r;
            }
            c = next;
        }
        c
    }

    #[test]
    fn known_roots() {
        let c = from_roots(&[0.1, 0.5, 0.7, 2.0, -1.0]);
        let r = real_roots_in(&c, 0.0, 0.866).unwrap();
        assert_eq!(r.len(), 3);
        for (a, b) in r.iter().zip([0.1, 0.5, 0.7]) {
            assert!((a - b).abs() < 1e-12);
        }
        // x² + 1 has no real roots
        assert!(real_roots_in(&[1.0, 0.0, 1.0], -5.0, 5.0)
            .unwrap()
            .is_empty());
        assert_eq!(
            real_roots_in(&[0.0; 4], 0.0, 1.0),
            Err(Error::IllConditioned)
        );
        assert!(real_roots_in(&[3.0], 0.0, 1.0).unwrap().is_empty());
    }

    #[test]
    fn sign_changes_have_roots() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..2000 {
            let c: Vec<f64> = (0..7).map(|_| rng.random_range(-1.0..1.0)).collect();
            let roots = real_roots_in(&c, 0.0, 0.866).unwrap();
            for r in &roots {
                let d: f64 = c.iter().map(|x| x.abs()).sum();
                assert!(eval_poly(&c, *r).abs() < 1e-10 * d);
            }
            let steps = 866;
            for k in 0..steps {
                let (a, b) = (k as f64 * 1e-3, (k + 1) as f64 * 1e-3);
                if eval_poly(&c, a) * eval_poly(&c, b) < 0.0 {
                    assert!(
                        roots.iter().any(|&r| r >= a - 1e-9 && r <= b + 1e-9),
                        "missed root in [{a}, {b}] for {c:?}"
                    );
                }
            }
        }
    }
}
