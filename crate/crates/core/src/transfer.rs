//! Inverse branches, Jacobian weights and the transfer operator
//! `L f(p) = sum_k weight(k, p) f(branch_point(k, p))`.

use serde::Serialize;

use crate::domain::{in_triangle, PermutationTriple, ScalarField, TrianglePoint};
use crate::error::{Error, Result};
use crate::expr::Vars;
use crate::series::{sum_series, SeriesSum, TruncationPolicy};

pub use crate::series::TailModel;

/// Branch point at a real digit inside one parity class; no checks.
#[inline]
pub(crate) fn branch_raw(t: PermutationTriple, v: &Vars) -> (f64, f64) {
    let e = t.entry();
    (e.branch[0].eval(v), e.branch[1].eval(v))
}

#[inline]
pub(crate) fn weight_raw(t: PermutationTriple, v: &Vars) -> f64 {
    t.entry().weight.eval(v)
}

fn singular(t: PermutationTriple, k: u64, p: TrianglePoint) -> Error {
    Error::EvaluationSingularity { triple: t.to_string(), k, x: p.x(), y: p.y() }
}

/// The `k`-th preimage of `p`.
pub fn branch_point(t: PermutationTriple, k: u64, p: TrianglePoint) -> Result<TrianglePoint> {
    let (x, y) = branch_raw(t, &Vars::digit(p.x(), p.y(), k));
    if !x.is_finite() || !y.is_finite() {
        return Err(singular(t, k, p));
    }
    TrianglePoint::new(x, y)
}

/// The tabulated Jacobian weight at digit `k`.
pub fn weight(t: PermutationTriple, k: u64, p: TrianglePoint) -> Result<f64> {
    let w = weight_raw(t, &Vars::digit(p.x(), p.y(), k));
    if !w.is_finite() {
        return Err(singular(t, k, p));
    }
    Ok(w)
}

/// Applies the transfer operator of `t` to `f` at `p`.
pub fn apply_transfer<F: ScalarField + ?Sized>(
    t: PermutationTriple,
    f: &F,
    p: TrianglePoint,
    pol: &TruncationPolicy,
) -> Result<SeriesSum> {
    let (x, y) = (p.x(), p.y());
    let parity = t.entry().has_parity();
    sum_series(
        parity,
        |k, sign| {
            let v = Vars { x, y, k, sign };
            let (bx, by) = branch_raw(t, &v);
            weight_raw(t, &v) * f.eval(bx, by)
        },
        pol,
    )
}

/// `L^n f(p)` with every level truncated to the digits `0..=k_per_level`.
pub fn apply_transfer_iterated<F: ScalarField + ?Sized>(
    t: PermutationTriple,
    f: &F,
    p: (f64, f64),
    n: u32,
    k_per_level: u64,
) -> f64 {
    if n == 0 {
        return f.eval(p.0, p.1);
    }
    let mut total = 0.0;
    for k in 0..=k_per_level {
        let v = Vars::digit(p.0, p.1, k);
        let b = branch_raw(t, &v);
        total += weight_raw(t, &v) * apply_transfer_iterated(t, f, b, n - 1, k_per_level);
    }
    total
}

/// Relative gap between the tabulated weight and `|det D branch|` computed by
/// central differences with half-width `1e-5`.
pub fn jacobian_residual(t: PermutationTriple, k: u64, p: TrianglePoint) -> Result<f64> {
    const H: f64 = 1e-5;
    let (x, y) = (p.x(), p.y());
    for (sx, sy) in [(x + H, y), (x - H, y), (x, y + H), (x, y - H)] {
        if !in_triangle(sx, sy) {
            return Err(Error::StencilOutOfDomain { x: sx, y: sy });
        }
    }
    let at = |x: f64, y: f64| branch_raw(t, &Vars::digit(x, y, k));
    let (xp, xm) = (at(x + H, y), at(x - H, y));
    let (yp, ym) = (at(x, y + H), at(x, y - H));
    let dxdx = (xp.0 - xm.0) / (2.0 * H);
    let dydx = (xp.1 - xm.1) / (2.0 * H);
    let dxdy = (yp.0 - ym.0) / (2.0 * H);
    let dydy = (yp.1 - ym.1) / (2.0 * H);
    let det = (dxdx * dydy - dxdy * dydx).abs();
    let w = weight(t, k, p)?;
    Ok((w - det).abs() / w.abs())
}

/// Summary of a transfer application, for reports.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct TransferValue {
    pub value: f64,
    pub error_estimate: f64,
    pub k_used: u64,
}

impl From<SeriesSum> for TransferValue {
    fn from(s: SeriesSum) -> Self {
        TransferValue { value: s.value, error_estimate: s.error_estimate, k_used: s.k_used }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::parse_triple;
    use approx::assert_relative_eq;

    fn tp(x: f64, y: f64) -> TrianglePoint {
        TrianglePoint::new(x, y).unwrap()
    }

    #[test]
    fn branch_examples() {
        let eee = parse_triple("e,e,e").unwrap();
        let b = branch_point(eee, 0, tp(0.5, 0.25)).unwrap();
        assert_relative_eq!(b.x(), 0.8, max_relative = 1e-15);
        assert_relative_eq!(b.y(), 0.4, max_relative = 1e-15);
        let b = branch_point(eee, 2, tp(0.5, 0.25)).unwrap();
        assert_relative_eq!(b.x(), 1.0 / 2.25, max_relative = 1e-15);
        assert_relative_eq!(b.y(), 0.5 / 2.25, max_relative = 1e-15);
        let t = parse_triple("123,132,132").unwrap();
        let b = branch_point(t, 0, tp(0.6, 0.3)).unwrap();
        assert_relative_eq!(b.x(), 1.0 / 1.3, max_relative = 1e-14);
        assert_relative_eq!(b.y(), 0.3 / 1.3, max_relative = 1e-14);
    }

    #[test]
    fn weight_examples() {
        let eee = parse_triple("e,e,e").unwrap();
        assert_relative_eq!(weight(eee, 0, tp(0.5, 0.25)).unwrap(), 0.512, max_relative = 1e-15);
        let t = parse_triple("13,13,13").unwrap();
        assert_relative_eq!(weight(t, 0, tp(0.5, 0.25)).unwrap(), 1.0 / 3.375, max_relative = 1e-15);
    }

    #[test]
    fn eigenfunction_examples() {
        let pol = TruncationPolicy::default();
        let eee = parse_triple("e,e,e").unwrap();
        let h = |x: f64, y: f64| 1.0 / (x * (y + 1.0));
        let v = apply_transfer(eee, &h, tp(0.5, 0.25), &pol).unwrap();
        assert!((v.value - 1.6).abs() < 1e-8, "{v:?}");
        let t = parse_triple("23,23,23").unwrap();
        let h = |x: f64, y: f64| 1.0 / (x * (x - y + 1.0));
        let v = apply_transfer(t, &h, tp(0.6, 0.2), &pol).unwrap();
        assert!((v.value - 1.0 / (0.6 * 1.4)).abs() < 1e-8, "{v:?}");
        let zero = |_: f64, _: f64| 0.0;
        assert_eq!(apply_transfer(eee, &zero, tp(0.6, 0.2), &pol).unwrap().value, 0.0);
    }

    #[test]
    fn jacobian_examples() {
        for (label, k, x, y) in [("e,e,e", 0, 0.5, 0.25), ("12,123,12", 3, 0.4, 0.1), ("132,132,123", 0, 0.55, 0.3)] {
            let t = parse_triple(label).unwrap();
            assert!(jacobian_residual(t, k, tp(x, y)).unwrap() < 1e-6, "{label}");
        }
        let eee = parse_triple("e,e,e").unwrap();
        assert!(matches!(jacobian_residual(eee, 0, tp(0.5, 0.499999)), Err(Error::StencilOutOfDomain { .. })));
    }
}
