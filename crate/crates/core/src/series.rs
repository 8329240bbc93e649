//! Summation of the slowly decaying series `sum_k F(k)` that appear in the
//! transfer operator and the summand bounds.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quadrature::gauss_legendre;

/// How the tail of a series is handled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TailModel {
    /// Partial sum plus an Euler-Maclaurin estimate of the remainder,
    /// doubling the cutoff until successive totals agree within `eps`.
    EulerMaclaurin,
    /// Direct summation until the modeled tail `C K^(1-rho)/(rho-1)`, with
    /// `C = |F(K)| K^rho`, drops below `eps`. The tail is not added.
    PowerLaw,
    /// Exactly the terms `k = 0..=k_max`.
    Fixed,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TruncationPolicy {
    pub eps: f64,
    pub k_max: u64,
    pub rho: f64,
    pub tail: TailModel,
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        TruncationPolicy { eps: 1e-10, k_max: 1 << 20, rho: 3.0, tail: TailModel::EulerMaclaurin }
    }
}

impl TruncationPolicy {
    pub fn with_eps(eps: f64) -> Self {
        TruncationPolicy { eps, ..Self::default() }
    }

    /// Sum of the first `k_max + 1` terms only.
    pub fn fixed(k_max: u64) -> Self {
        TruncationPolicy { k_max, tail: TailModel::Fixed, ..Self::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.eps > 0.0) {
            return Err(Error::InvalidConfig(format!("eps must be positive, got {}", self.eps)));
        }
        if self.k_max < 1 {
            return Err(Error::InvalidConfig("k_max must be at least 1".into()));
        }
        if !(self.rho > 1.0) {
            return Err(Error::InvalidConfig(format!("rho must exceed 1, got {}", self.rho)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesSum {
    pub value: f64,
    pub error_estimate: f64,
    /// Largest index summed explicitly.
    pub k_used: u64,
}

/// Sums `term(k, sign)` over `k = 0, 1, 2, ...` where `sign = (-1)^k`.
///
/// With `split_parity` the even and odd subsequences are summed separately,
/// each as a smooth function of a real index, so `term` may be evaluated at
/// non-integer `k` with `sign` held fixed.
pub fn sum_series<F>(split_parity: bool, term: F, pol: &TruncationPolicy) -> Result<SeriesSum>
where
    F: Fn(f64, f64) -> f64,
{
    pol.validate()?;
    match pol.tail {
        TailModel::Fixed => direct(&term, pol, false),
        TailModel::PowerLaw => direct(&term, pol, true),
        TailModel::EulerMaclaurin => {
            let classes: &[(f64, f64, f64)] =
                if split_parity { &[(2.0, 0.0, 1.0), (2.0, 1.0, -1.0)] } else { &[(1.0, 0.0, 1.0)] };
            let eps = pol.eps / classes.len() as f64;
            let mut out = SeriesSum { value: 0.0, error_estimate: 0.0, k_used: 0 };
            for &(step, offset, sign) in classes {
                let g = |m: f64| term(step * m + offset, sign);
                let s = euler_maclaurin(&g, eps, pol.k_max as f64 / step)?;
                out.value += s.value;
                out.error_estimate += s.error_estimate;
                out.k_used = out.k_used.max((step * s.k_used as f64 + offset) as u64);
            }
            Ok(out)
        }
    }
}

fn check(v: f64, k: f64) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonConvergent { what: format!("series term at k={k}"), estimate: f64::INFINITY })
    }
}

fn direct<F: Fn(f64, f64) -> f64>(term: &F, pol: &TruncationPolicy, adaptive: bool) -> Result<SeriesSum> {
    let mut sum = 0.0;
    let mut comp = 0.0;
    for k in 0..=pol.k_max {
        let kf = k as f64;
        let t = check(term(kf, if k % 2 == 0 { 1.0 } else { -1.0 }), kf)?;
        // Neumaier compensation keeps long sums of small terms honest.
        let s = sum + t;
        comp += if sum.abs() >= t.abs() { (sum - s) + t } else { (t - s) + sum };
        sum = s;
        if k >= 4 {
            let tail = t.abs() * kf / (pol.rho - 1.0);
            if adaptive && tail < pol.eps {
                return Ok(SeriesSum { value: sum + comp, error_estimate: tail, k_used: k });
            }
            if !adaptive && k == pol.k_max {
                return Ok(SeriesSum { value: sum + comp, error_estimate: tail, k_used: k });
            }
        }
    }
    if adaptive {
        Err(Error::TruncationFailure { eps: pol.eps, k_max: pol.k_max })
    } else {
        Ok(SeriesSum { value: sum + comp, error_estimate: 0.0, k_used: pol.k_max })
    }
}

/// Euler-Maclaurin remainder `sum_{m >= M} g(m)` for a smooth decaying `g`.
fn remainder<G: Fn(f64) -> f64>(g: &G, m: f64) -> Result<f64> {
    // Integral over [M, inf) after t = M/u, on two Gauss-Legendre panels.
    let rule = gauss_legendre(16);
    let mut integral = 0.0;
    for (a, b) in [(0.0, 0.5), (0.5, 1.0)] {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        for (node, weight) in rule.nodes.iter().zip(&rule.weights) {
            let u = mid + half * node;
            let t = m / u;
            integral += weight * half * check(g(t), t)? * m / (u * u);
        }
    }
    let h = 0.5;
    let gp2 = g(m + 2.0 * h);
    let gp1 = g(m + h);
    let gm1 = g(m - h);
    let gm2 = g(m - 2.0 * h);
    let d1 = (gm2 - 8.0 * gm1 + 8.0 * gp1 - gp2) / (12.0 * h);
    let d3 = (gp2 - 2.0 * gp1 + 2.0 * gm1 - gm2) / (2.0 * h * h * h);
    check(integral + 0.5 * g(m) - d1 / 12.0 + d3 / 720.0, m)
}

fn euler_maclaurin<G: Fn(f64) -> f64>(g: &G, eps: f64, m_limit: f64) -> Result<SeriesSum> {
    let mut m = 8usize;
    let mut partial = 0.0;
    for i in 0..m {
        partial += check(g(i as f64), i as f64)?;
    }
    let mut prev = partial + remainder(g, m as f64)?;
    loop {
        let next = 2 * m;
        if next as f64 > m_limit {
            return Err(Error::TruncationFailure { eps, k_max: m_limit as u64 });
        }
        for i in m..next {
            partial += check(g(i as f64), i as f64)?;
        }
        m = next;
        let cur = partial + remainder(g, m as f64)?;
        let diff = (cur - prev).abs();
        if diff <= eps.max(1e-14 * cur.abs()) {
            return Ok(SeriesSum { value: cur, error_estimate: diff, k_used: m as u64 - 1 });
        }
        prev = cur;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn basel() {
        let s = sum_series(false, |k, _| 1.0 / ((k + 1.0) * (k + 1.0)), &TruncationPolicy::default()).unwrap();
        assert!((s.value - PI * PI / 6.0).abs() < 1e-12, "{s:?}");
        assert!(s.k_used < 1000);
    }

    #[test]
    fn alternating_split() {
        // sum (-1)^k/(k+1)^2 = pi^2/12
        let s = sum_series(true, |k, sg| sg / ((k + 1.0) * (k + 1.0)), &TruncationPolicy::default()).unwrap();
        assert!((s.value - PI * PI / 12.0).abs() < 1e-12, "{s:?}");
    }

    #[test]
    fn cubic_power_law() {
        let pol = TruncationPolicy { tail: TailModel::PowerLaw, eps: 1e-8, ..Default::default() };
        let s = sum_series(false, |k, _| 1.0 / (k + 1.0).powi(3), &pol).unwrap();
        assert!((s.value - 1.2020569031595942).abs() < 1e-7);
    }

    #[test]
    fn fixed_counts_terms() {
        let s = sum_series(false, |_, _| 1.0, &TruncationPolicy::fixed(9)).unwrap();
        assert_eq!(s.value, 10.0);
    }

    #[test]
    fn failure_is_reported() {
        let pol = TruncationPolicy { k_max: 1000, ..Default::default() };
        let r = sum_series(false, |k, _| 1.0 / (k + 1.0).sqrt(), &pol);
        assert!(matches!(r, Err(Error::TruncationFailure { .. })));
        assert!(TruncationPolicy { rho: 1.0, ..Default::default() }.validate().is_err());
    }
}
