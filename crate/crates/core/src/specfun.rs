//! Special functions: dilogarithm, Bessel J1, associated Laguerre
//! polynomials with parameter 1, and trigamma.

use std::f64::consts::PI;

use crate::error::{Error, Result};

const PI2_6: f64 = PI * PI / 6.0;

/// Real dilogarithm `Li2(z) = sum z^n/n^2` for `0 <= z <= 1`.
pub fn dilog(z: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&z) {
        return Err(Error::Domain(format!("dilog argument {z} outside [0, 1]")));
    }
    if z == 1.0 {
        return Ok(PI2_6);
    }
    if z > 0.5 {
        // Li2(z) + Li2(1-z) = pi^2/6 - ln z ln(1-z)
        return Ok(PI2_6 - z.ln() * (-z).ln_1p() - dilog_series(1.0 - z));
    }
    Ok(dilog_series(z))
}

fn dilog_series(z: f64) -> f64 {
    let mut sum = 0.0;
    let mut pow = z;
    let mut n = 1.0;
    while pow > 1e-18 * sum || n < 2.0 {
        sum += pow / (n * n);
        pow *= z;
        n += 1.0;
        if pow == 0.0 {
            break;
        }
    }
    sum
}

/// Bessel function of the first kind of order one, for `x >= 0`.
///
/// Ascending series below 8, the Bessel integral with the trapezoidal rule
/// on `[8, 20)`, and the Hankel asymptotic expansion from 20 on.
pub fn bessel_j1(x: f64) -> f64 {
    let ax = x.abs();
    let v = if ax < 8.0 {
        j1_series(ax)
    } else if ax < 20.0 {
        j1_trapezoid(ax)
    } else {
        j1_asymptotic(ax)
    };
    if x < 0.0 {
        -v
    } else {
        v
    }
}

fn j1_series(x: f64) -> f64 {
    let h = 0.5 * x;
    let h2 = h * h;
    let mut term = h;
    let mut sum = h;
    let mut m = 0.0;
    loop {
        m += 1.0;
        term *= -h2 / (m * (m + 1.0));
        sum += term;
        if term.abs() <= 1e-17 * sum.abs().max(1e-300) {
            return sum;
        }
    }
}

/// `J1(x) = (1/2pi) int_0^2pi cos(t - x sin t) dt`, exact to rounding for
/// `x < 20` with 64 equispaced nodes since the integrand is periodic.
fn j1_trapezoid(x: f64) -> f64 {
    const N: usize = 64;
    let f = |t: f64| (t - x * t.sin()).cos();
    let mut sum = f(0.0) + f(PI);
    for j in 1..N / 2 {
        sum += 2.0 * f(2.0 * PI * j as f64 / N as f64);
    }
    sum / N as f64
}

fn j1_asymptotic(x: f64) -> f64 {
    let mu = 4.0;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut a = 1.0;
    let mut prev = f64::INFINITY;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        a *= (mu - odd * odd) / (k as f64 * 8.0 * x);
        if a.abs() >= prev || a.abs() < 1e-18 {
            break;
        }
        prev = a.abs();
        match k % 4 {
            1 => q += a,
            2 => p -= a,
            3 => q -= a,
            _ => p += a,
        }
    }
    let chi = x - 0.75 * PI;
    (2.0 / (PI * x)).sqrt() * (p * chi.cos() - q * chi.sin())
}

/// Associated Laguerre polynomial `L_k^(1)(t)` by the three-term recurrence.
pub fn laguerre1(k: usize, t: f64) -> f64 {
    let mut prev = 1.0;
    if k == 0 {
        return prev;
    }
    let mut cur = 2.0 - t;
    for n in 1..k {
        let nf = n as f64;
        let next = ((2.0 * nf + 2.0 - t) * cur - (nf + 1.0) * prev) / (nf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// `L_k^(1)(t)` from its explicit coefficients
/// `sum_i (-1)^i C(k+1, k-i) t^i / i!`.
pub fn laguerre1_explicit(k: usize, t: f64) -> f64 {
    let mut sum = 0.0;
    for i in 0..=k {
        let c = binomial(k + 1, k - i) / factorial(i);
        let term = c * t.powi(i as i32);
        sum += if i % 2 == 0 { term } else { -term };
    }
    sum
}

fn binomial(n: usize, r: usize) -> f64 {
    (0..r).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, i| acc * i as f64)
}

/// Trigamma `psi'(a) = sum_n 1/(a+n)^2` for `a > 0`.
pub fn trigamma(a: f64) -> Result<f64> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::Domain(format!("trigamma argument {a} must be positive")));
    }
    let mut shift = 0.0;
    let mut a = a;
    while a < 12.0 {
        shift += 1.0 / (a * a);
        a += 1.0;
    }
    let inv = 1.0 / a;
    let inv2 = inv * inv;
    // Bernoulli series: 1/a + 1/(2a^2) + sum B_2j / a^(2j+1)
    let tail = inv2
        * (1.0 / 6.0
            + inv2
                * (-1.0 / 30.0
                    + inv2
                        * (1.0 / 42.0
                            + inv2 * (-1.0 / 30.0 + inv2 * (5.0 / 66.0 + inv2 * (-691.0 / 2730.0 + inv2 * 7.0 / 6.0))))));
    Ok(shift + inv + 0.5 * inv2 + inv * tail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn dilog_values() {
        assert_eq!(dilog(0.0).unwrap(), 0.0);
        assert_eq!(dilog(1.0).unwrap(), PI2_6);
        // mpmath polylog(2, 0.25), polylog(2, 0.5), polylog(2, 0.9)
        assert_relative_eq!(dilog(0.25).unwrap(), 0.26765263908273260, max_relative = 1e-15);
        assert_relative_eq!(dilog(0.5).unwrap(), 0.58224052646501250, max_relative = 1e-15);
        assert_relative_eq!(dilog(0.9).unwrap(), 1.2997147230049588, max_relative = 1e-15);
        assert!(dilog(1.5).is_err());
        assert!(dilog(-0.1).is_err());
    }

    #[test]
    fn j1_values() {
        assert_eq!(bessel_j1(0.0), 0.0);
        assert_relative_eq!(bessel_j1(1e-4), 5e-5, max_relative = 1e-8);
        // mpmath besselj(1, x)
        let cases = [
            (2.0, 0.57672480775687339),
            (7.9, 0.21917939992175114),
            (8.1, 0.24760776698159292),
            (12.0, -0.22344710449062761),
            (19.9, 0.050117424807379983),
            (20.1, 0.082801005760209543),
            (35.0, 0.043990942179625640),
            (50.0, -0.09751182812517113),
        ];
        for (x, v) in cases {
            assert!((bessel_j1(x) - v).abs() < 1e-13, "J1({x}) = {} vs {v}", bessel_j1(x));
        }
    }

    #[test]
    fn laguerre_low_order() {
        assert_eq!(laguerre1(0, 3.7), 1.0);
        assert_eq!(laguerre1(1, 0.5), 1.5);
        let t = 1.0;
        assert_relative_eq!(laguerre1(5, t), laguerre1_explicit(5, t), max_relative = 1e-14);
        // L_5^(1)(1) = -151/120
        assert_relative_eq!(laguerre1(5, t), -151.0 / 120.0, max_relative = 1e-14);
    }

    #[test]
    fn trigamma_values() {
        assert_relative_eq!(trigamma(1.0).unwrap(), PI2_6, max_relative = 1e-14);
        assert_relative_eq!(trigamma(2.0).unwrap(), PI2_6 - 1.0, max_relative = 1e-14);
        // mpmath psi(1, 2.3)
        assert_relative_eq!(trigamma(2.3).unwrap(), 0.54253745866525841, max_relative = 1e-13);
        assert!(trigamma(0.0).is_err());
    }
}
