//! Transforms against `dm(t) = t/(e^t - 1) dt`, the Bessel kernel operator,
//! and the Laguerre expansion of the transfer operator for the triples with
//! an `(l, j, h)` row.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::domain::{spectral_data, HilbertTriple, Perm, PermutationTriple, TrianglePoint};
use crate::error::{Error, Result};
use crate::quadrature::{dm_density, integrate_dm, QuadratureRule};
use crate::series::TruncationPolicy;
use crate::specfun::{bessel_j1, laguerre1};
use crate::transfer::{apply_transfer, branch_point};

/// Tolerance of the outer integral in the kernel form of the identity.
pub const OUTER_TOL: f64 = 1e-7;

/// A function `phi(a, s)` of a parameter `a` fixed by the transform and the
/// integration variable `s >= 0`.
#[derive(Clone)]
pub struct ProfileFunction {
    eval: Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>,
    pub description: String,
}

impl fmt::Debug for ProfileFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProfileFunction({})", self.description)
    }
}

impl ProfileFunction {
    pub fn new<F>(description: impl Into<String>, f: F) -> Self
    where
        F: Fn(f64, f64) -> f64 + Send + Sync + 'static,
    {
        ProfileFunction { eval: Arc::new(f), description: description.into() }
    }

    pub fn zero() -> Self {
        Self::new("zero", |_, _| 0.0)
    }

    /// `eta_k(s)`, independent of the parameter.
    pub fn eta(k: u32) -> Self {
        Self::new(format!("eta{k}"), move |_, s| eta(k, s))
    }

    /// `sum_k c_k eta_k(s)` for `k < 6`.
    pub fn eta_span(coeffs: &[f64]) -> Result<Self> {
        if coeffs.len() > 6 {
            return Err(Error::InvalidConfig("profiles are limited to eta0..eta5".into()));
        }
        let c = coeffs.to_vec();
        let label = c.iter().enumerate().map(|(k, v)| format!("{v}*eta{k}")).collect::<Vec<_>>().join("+");
        Ok(Self::new(label, move |_, s| c.iter().enumerate().map(|(k, v)| v * eta(k as u32, s)).sum()))
    }

    #[inline]
    pub fn at(&self, a: f64, s: f64) -> f64 {
        (self.eval)(a, s)
    }
}

/// `s^k e^{-s} / (k+1)!`.
pub fn eta(k: u32, s: f64) -> f64 {
    if s == 0.0 {
        return if k == 0 { 1.0 } else { 0.0 };
    }
    // Logarithms keep large k from overflowing.
    let mut log_fact = 0.0;
    for i in 2..=k + 1 {
        log_fact += (i as f64).ln();
    }
    (k as f64 * s.ln() - s - log_fact).exp()
}

/// The parameter fed to `phi` by the transform of the `sigma` class. For
/// `13` and `132` the printed table places it in the second slot; here it is
/// always the first.
pub fn transform_arg(sigma: Perm, x: f64, y: f64) -> f64 {
    match sigma {
        Perm::E | Perm::P23 => y / x,
        Perm::P12 => (x - 1.0) / y,
        Perm::P13 => (1.0 - x) / (1.0 - y),
        Perm::P123 => (1.0 - y) / (x - y),
        Perm::P132 => y / (1.0 - x),
    }
}

pub fn hilbert_row(t: PermutationTriple) -> Result<HilbertTriple> {
    spectral_data(t).hilbert.ok_or_else(|| Error::NoHilbertRow(t.to_string()))
}

/// `(1/h(p)) int e^{-s h(p)} phi(arg(p), s) dm(s)`.
pub fn transform_hat(t: PermutationTriple, phi: &ProfileFunction, p: TrianglePoint, rule: &QuadratureRule) -> Result<f64> {
    let row = hilbert_row(t)?;
    hat_at(row, t.sigma, phi, p.x(), p.y(), rule)
}

fn hat_at(row: HilbertTriple, sigma: Perm, phi: &ProfileFunction, x: f64, y: f64, rule: &QuadratureRule) -> Result<f64> {
    let h = row.h3.at(x, y);
    let a = transform_arg(sigma, x, y);
    Ok(integrate_dm(|s| (-s * h).exp() * phi.at(a, s), rule)? / h)
}

/// `E_k(p) = int j(p) e^{-t (l(p) - 1)} L_k^1(t) dm(t)`.
pub fn capital_e(t: PermutationTriple, k: usize, p: TrianglePoint, rule: &QuadratureRule) -> Result<f64> {
    let row = hilbert_row(t)?;
    let (l, j) = (row.l.at(p.x(), p.y()), row.j.at(p.x(), p.y()));
    Ok(j * integrate_dm(|s| (-s * (l - 1.0)).exp() * laguerre1(k, s), rule)?)
}

/// `J_1(2u)/u` with `u = sqrt(s t)`, continued by 1 at `u = 0`.
#[inline]
pub fn bessel_kernel(s: f64, t: f64) -> f64 {
    let u = (s * t).sqrt();
    if u < 1e-6 {
        1.0 - 0.5 * u * u
    } else {
        bessel_j1(2.0 * u) / u
    }
}

/// `K(phi)(a, t) = int J_1(2 sqrt(s t))/sqrt(s t) * t/(e^t - 1) * phi(a, s) dm(s)`,
/// one fixed pass of `rule`.
pub fn kernel_apply(phi: &ProfileFunction, a: f64, t: f64, rule: &QuadratureRule) -> f64 {
    let weight = dm_density(t);
    if weight == 0.0 {
        return 0.0;
    }
    weight * rule.halfline_fixed(|s| bessel_kernel(s, t) * phi.at(a, s) * dm_density(s))
}

/// Parameter of `phi` in the kernel form at `p`: the transform argument of the
/// branch points, which is the same for every digit outside the parity rows.
pub fn kernel_arg(t: PermutationTriple, p: TrianglePoint) -> Result<f64> {
    let b = branch_point(t, 0, p)?;
    Ok(transform_arg(t.sigma, b.x(), b.y()))
}

/// Both sides of the kernel identity at one point.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityCheck {
    pub triple: PermutationTriple,
    pub phi: String,
    pub point: TrianglePoint,
    pub lhs: f64,
    pub rhs: f64,
}

impl IdentityCheck {
    pub fn abs_gap(&self) -> f64 {
        (self.lhs - self.rhs).abs()
    }

    pub fn rel_gap(&self) -> f64 {
        if self.lhs == 0.0 && self.rhs == 0.0 {
            0.0
        } else {
            self.abs_gap() / self.lhs.abs().max(self.rhs.abs())
        }
    }
}

/// `L f(p)` for `f = transform_hat(phi)`, against
/// `j(p) int_0^inf e^{-t (l(p) - 1)} K(phi)(t) dt`.
pub fn kernel_identity_check(t: PermutationTriple, phi: &ProfileFunction, p: TrianglePoint) -> Result<IdentityCheck> {
    let row = hilbert_row(t)?;
    let inner = QuadratureRule::default();
    let f = |x: f64, y: f64| hat_at(row, t.sigma, phi, x, y, &inner).unwrap_or(f64::NAN);
    let lhs = apply_transfer(t, &f, p, &TruncationPolicy::with_eps(1e-9))?.value;
    if !lhs.is_finite() {
        return Err(Error::NonConvergent { what: format!("{t}: transfer of the transform"), estimate: f64::NAN });
    }
    let (l, j) = (row.l.at(p.x(), p.y()), row.j.at(p.x(), p.y()));
    let a = kernel_arg(t, p)?;
    let outer = QuadratureRule::with_tol(OUTER_TOL);
    let rhs = j * outer.halfline(|tau| (-tau * (l - 1.0)).exp() * kernel_apply(phi, a, tau, &inner))?;
    Ok(IdentityCheck { triple: t, phi: phi.description.clone(), point: p, lhs, rhs })
}

/// `<alpha, beta> = int alpha beta dm`.
pub fn inner_product<A: Fn(f64) -> f64, B: Fn(f64) -> f64>(alpha: A, beta: B, rule: &QuadratureRule) -> Result<f64> {
    integrate_dm(|s| alpha(s) * beta(s), rule)
}

/// Partial sums `sum_{k <= K} <phi, eta_k> E_k(p)` for `K = 0..=k_max`.
pub fn laguerre_partial_sums(
    t: PermutationTriple,
    phi: &ProfileFunction,
    p: TrianglePoint,
    k_max: usize,
    rule: &QuadratureRule,
) -> Result<Vec<f64>> {
    let a = kernel_arg(t, p)?;
    let mut total = 0.0;
    let mut out = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let c = inner_product(|s| phi.at(a, s), |s| eta(k as u32, s), rule)?;
        if c != 0.0 {
            total += c * capital_e(t, k, p, rule)?;
        }
        out.push(total);
    }
    Ok(out)
}

/// `sum_{k <= K} <phi, eta_k> E_k(p)`.
pub fn laguerre_expansion_partial(
    t: PermutationTriple,
    phi: &ProfileFunction,
    p: TrianglePoint,
    k_max: usize,
    rule: &QuadratureRule,
) -> Result<f64> {
    Ok(*laguerre_partial_sums(t, phi, p, k_max, rule)?.last().expect("at least one term"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::parse_triple;
    use crate::specfun::trigamma;

    fn tp(x: f64, y: f64) -> TrianglePoint {
        TrianglePoint::new(x, y).unwrap()
    }

    #[test]
    fn eta_values() {
        assert!((eta(0, 1.3) - (-1.3f64).exp()).abs() < 1e-16);
        assert!((eta(1, 2.0) - (-2.0f64).exp()).abs() < 1e-16);
        assert_eq!(eta(3, 0.0), 0.0);
        assert!((eta(4, 2.5) - 2.5f64.powi(4) * (-2.5f64).exp() / 120.0).abs() < 1e-15);
    }

    #[test]
    fn transform_matches_trigamma() {
        let rule = QuadratureRule::default();
        let v = transform_hat(parse_triple("123,132,132").unwrap(), &ProfileFunction::eta(0), tp(0.6, 0.3), &rule).unwrap();
        assert!((v - trigamma(2.3).unwrap() / 0.3).abs() < 1e-9, "{v}");
        let v = transform_hat(parse_triple("e,e,e").unwrap(), &ProfileFunction::eta(0), tp(0.5, 0.25), &rule).unwrap();
        assert!((v - trigamma(2.25).unwrap() / 0.25).abs() < 1e-9, "{v}");
        let z = transform_hat(parse_triple("e,e,e").unwrap(), &ProfileFunction::zero(), tp(0.5, 0.25), &rule).unwrap();
        assert_eq!(z, 0.0);
        let missing = transform_hat(parse_triple("e,12,23").unwrap(), &ProfileFunction::eta(0), tp(0.5, 0.25), &rule);
        assert!(matches!(missing, Err(Error::NoHilbertRow(_))));
    }

    #[test]
    fn capital_e_zero_is_a_trigamma() {
        // L_0^1 = 1, so E_0 = j psi'(l)
        let rule = QuadratureRule::default();
        let t = parse_triple("e,e,e").unwrap();
        let p = tp(0.5, 0.25);
        let (l, j) = (1.25 / 0.5, 8.0);
        let v = capital_e(t, 0, p, &rule).unwrap();
        assert!((v - j * trigamma(l).unwrap()).abs() < 1e-8, "{v}");
        let coarse = capital_e(t, 1, p, &rule).unwrap();
        let fine = capital_e(t, 1, p, &QuadratureRule { panels: 96, order: 24, ..rule }).unwrap();
        assert!((coarse - fine).abs() < 1e-8);
    }

    #[test]
    fn kernel_values() {
        let rule = QuadratureRule::default();
        assert_eq!(kernel_apply(&ProfileFunction::zero(), 0.3, 1.0, &rule), 0.0);
        // At t = 0 the kernel is 1: int e^{-s} s/(e^s - 1) ds = psi'(2)
        let v = kernel_apply(&ProfileFunction::eta(0), 0.3, 0.0, &rule);
        assert!((v - trigamma(2.0).unwrap()).abs() < 1e-12, "{v}");
        let a = kernel_apply(&ProfileFunction::eta(0), 0.3, 1.0, &rule);
        let b = kernel_apply(&ProfileFunction::eta(0), 0.3, 1.0, &QuadratureRule { panels: 96, order: 32, ..rule });
        assert!((a - b).abs() < 1e-10);
    }

    #[test]
    fn worked_example_identity() {
        let t = parse_triple("123,132,132").unwrap();
        let c = kernel_identity_check(t, &ProfileFunction::eta(0), tp(0.6, 0.3)).unwrap();
        assert!(c.rel_gap() < 1e-4, "{c:?}");
        let sums = laguerre_partial_sums(t, &ProfileFunction::eta(0), tp(0.6, 0.3), 30, &QuadratureRule::default()).unwrap();
        assert!((sums[30] - c.lhs).abs() < 1e-3 * c.lhs.abs(), "{} {}", sums[30], c.lhs);
        let z = kernel_identity_check(t, &ProfileFunction::zero(), tp(0.6, 0.3)).unwrap();
        assert_eq!((z.lhs, z.rhs), (0.0, 0.0));
    }

    #[test]
    fn eta_span_limits() {
        assert!(ProfileFunction::eta_span(&[1.0; 7]).is_err());
        let p = ProfileFunction::eta_span(&[1.0, 2.0]).unwrap();
        assert!((p.at(0.0, 1.0) - (eta(0, 1.0) + 2.0 * eta(1, 1.0))).abs() < 1e-16);
    }
}
