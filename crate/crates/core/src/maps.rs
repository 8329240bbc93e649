//! Forward iteration: branch formulas, digit extraction and expansions.
//!
//! For a fixed point `p` the images `T(k, p)` of one parity class lie on a
//! projective line parametrized affinely by the class index. Digit
//! extraction recovers that parametrization from three samples, solves the
//! three edge inequalities of the triangle in closed form, and confirms each
//! candidate digit by direct evaluation.

use serde::Serialize;

use crate::domain::{DigitSequence, PermutationTriple, TrianglePoint};
use crate::error::{Error, Result};
use crate::expr::Vars;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DigitConfig {
    pub k_max: u64,
    /// Tolerance of the closed-triangle test, per unit of `1 + k`.
    pub membership_tol: f64,
}

impl Default for DigitConfig {
    fn default() -> Self {
        DigitConfig { k_max: 1_000_000, membership_tol: 1e-12 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OrbitStep {
    pub digit: u64,
    pub image: TrianglePoint,
}

#[inline]
fn forward_raw(t: PermutationTriple, v: &Vars) -> (f64, f64) {
    let e = t.entry();
    (e.forward[0].eval(v), e.forward[1].eval(v))
}

/// The tabulated forward formula at digit `k`, without a membership check.
pub fn apply_branch_formula(t: PermutationTriple, k: u64, p: TrianglePoint) -> Result<(f64, f64)> {
    let (x, y) = forward_raw(t, &Vars::digit(p.x(), p.y(), k));
    if !x.is_finite() || !y.is_finite() {
        return Err(Error::EvaluationSingularity { triple: t.to_string(), k, x: p.x(), y: p.y() });
    }
    Ok((x, y))
}

fn in_closed(q: (f64, f64), tol: f64) -> bool {
    q.1 >= -tol && q.0 - q.1 >= -tol && 1.0 - q.0 >= -tol
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn norm(a: [f64; 3]) -> f64 {
    a.iter().map(|v| v * v).sum::<f64>().sqrt()
}

/// Homogeneous images `U + mu V` of the class members `m0 + mu * stride`,
/// fitted through three samples and checked against a fourth.
fn linearize<I: Fn(f64) -> (f64, f64)>(
    image: &I,
    m0: &mut f64,
    stride: f64,
    step: f64,
    err: &dyn Fn(String) -> Error,
) -> Result<([f64; 3], [f64; 3], f64)> {
    let start = *m0;
    let samples = loop {
        let s: Vec<(f64, f64)> = (0..4).map(|i| image(*m0 + i as f64 * stride)).collect();
        if s.iter().all(|q| q.0.is_finite() && q.1.is_finite()) {
            break s;
        }
        *m0 += 1.0;
        if *m0 > start + 16.0 {
            return Err(err("no finite samples".into()));
        }
    };
    let spread = (samples[2].0 - samples[0].0).abs().max((samples[2].1 - samples[0].1).abs());
    let h: Vec<[f64; 3]> = samples.iter().map(|q| [1.0, q.0, q.1]).collect();
    let rows = [[h[0][0], h[1][0], h[2][0]], [h[0][1], h[1][1], h[2][1]], [h[0][2], h[1][2], h[2][2]]];
    let nu = [cross(rows[0], rows[1]), cross(rows[0], rows[2]), cross(rows[1], rows[2])]
        .into_iter()
        .max_by(|a, b| norm(*a).total_cmp(&norm(*b)))
        .unwrap();
    // nu = (l0, -2 l1, l2) with l0 h0 - 2 l1 h1 + l2 h2 = 0.
    let (l0, l1) = (nu[0], -0.5 * nu[1]);
    let scale = norm(nu);
    if l0.abs() < 1e-12 * scale || l1.abs() < 1e-12 * scale || nu[2].abs() < 1e-12 * scale {
        return Err(err("degenerate samples".into()));
    }
    let u: [f64; 3] = std::array::from_fn(|i| l0 * h[0][i]);
    let v: [f64; 3] = std::array::from_fn(|i| l1 * h[1][i] - l0 * h[0][i]);
    let w: [f64; 3] = std::array::from_fn(|i| u[i] + 3.0 * v[i]);
    let gap = (w[1] / w[0] - samples[3].0).abs().max((w[2] / w[0] - samples[3].1).abs());
    // Rounding in the samples is amplified by the square of |h| / spread.
    let size = 1.0 + samples.iter().map(|q| q.0.abs().max(q.1.abs())).fold(0.0, f64::max);
    let amplification = (size / spread.max(f64::MIN_POSITIVE)).powi(2);
    // Large digits cancel in the formulas themselves, worst near a pole.
    let k = step * (*m0 + 3.0 * stride);
    if gap > (1e-6 + 1e-9 * k + 1e-13 * amplification) * size * size {
        return Err(err(format!("fourth sample off by {gap:e}")));
    }
    Ok((u, v, spread))
}

/// Ranges of real `mu` on which `U + mu V` lies in the closed triangle, one
/// per orientation of the homogeneous coordinates.
fn ranges(u: &[f64; 3], v: &[f64; 3], lo0: f64, hi0: f64, widen: f64) -> Vec<(f64, f64)> {
    // Edge forms y >= 0, x - y >= 0, 1 - x >= 0.
    let forms = [[0.0, 0.0, 1.0], [0.0, 1.0, -1.0], [1.0, -1.0, 0.0]];
    let mut out = Vec::new();
    for orientation in [1.0, -1.0] {
        let (mut lo, mut hi) = (lo0, hi0);
        let mut empty = false;
        for f in &forms {
            let a = orientation * (f[0] * u[0] + f[1] * u[1] + f[2] * u[2]);
            let b = orientation * (f[0] * v[0] + f[1] * v[1] + f[2] * v[2]);
            let slack = 1e-7 * (a.abs() + b.abs());
            if b.abs() <= 1e-14 * a.abs() {
                if a < -slack {
                    empty = true;
                }
            } else if b > 0.0 {
                let r = (-a - slack) / b;
                lo = lo.max(r - widen * (1.0 + r.abs()));
            } else {
                let r = (-a - slack) / b;
                hi = hi.min(r + widen * (1.0 + r.abs()));
            }
        }
        if !empty && lo <= hi {
            out.push((lo, hi));
        }
    }
    out
}

/// Integer class indices where the images may lie in the closed triangle,
/// and a real estimate of where the class enters it.
fn class_candidates(
    t: PermutationTriple,
    p: TrianglePoint,
    step: u64,
    offset: u64,
    m_limit: u64,
) -> Result<(Vec<u64>, Option<f64>)> {
    let sign = if offset % 2 == 0 { 1.0 } else { -1.0 };
    let image = |m: f64| forward_raw(t, &Vars { x: p.x(), y: p.y(), k: step as f64 * m + offset as f64, sign });
    let err = |detail: String| Error::InconsistentBranchFamily { triple: t.to_string(), detail };

    // Coarse estimate. Where consecutive images barely move the samples are
    // spread out until they separate.
    let mut m0 = 0.0;
    let mut stride = 1.0;
    let (mut u, mut v) = loop {
        let (u, v, spread) = linearize(&image, &mut m0, stride, step as f64, &err)?;
        if spread < 1e-3 && stride < 1e9 && (m0 + 3.0 * stride * 16.0) < 4.0 * m_limit as f64 {
            stride *= 16.0;
            continue;
        }
        break (u, v);
    };
    // The fit loses accuracy with the distance from its samples, so it is
    // repeated around each new estimate with a stride matched to the last
    // correction.
    let lo0 = -m0 / stride;
    let hi0 = (m_limit as f64 - m0) / stride;
    let Some(first) = ranges(&u, &v, lo0, hi0, 1e-3).iter().map(|r| r.0).min_by(f64::total_cmp) else {
        return Ok((Vec::new(), None));
    };
    let mut est = m0 + first * stride;
    let mut dist = (est - m0 - stride).abs();
    let mut cap = f64::INFINITY;
    for _ in 0..48 {
        stride = if dist < 32.0 { 1.0 } else { (dist / 16.0).log2().floor().exp2().min(cap) };
        cap = stride;
        m0 = (est - stride).floor().clamp(0.0, m_limit as f64);
        (u, v, _) = linearize(&image, &mut m0, stride, step as f64, &err)?;
        let lo0 = -m0 / stride;
        let hi0 = (m_limit as f64 - m0) / stride;
        let found = ranges(&u, &v, lo0, hi0, 0.0);
        if stride == 1.0 && !found.is_empty() && found.iter().all(|&(lo, hi)| lo >= -1.0 && hi <= 8.0) {
            let mut out = Vec::new();
            for &(lo, hi) in &found {
                let mut mu = lo.ceil();
                while mu <= hi.floor().min(lo.ceil() + 7.0) {
                    if mu + m0 >= 0.0 {
                        out.push((mu + m0) as u64);
                    }
                    mu += 1.0;
                }
            }
            return Ok((out, Some(m0 + found[0].0)));
        }
        let next = match found.first() {
            Some(r) => r.0,
            None => match ranges(&u, &v, lo0, hi0, 1e-3).iter().map(|r| r.0).min_by(f64::total_cmp) {
                Some(lo) => lo,
                None => return Ok((Vec::new(), Some(est))),
            },
        };
        let new_est = m0 + next * stride;
        dist = (new_est - est).abs();
        est = new_est;
    }
    Ok((Vec::new(), Some(est)))
}

/// The digit `k` with `T(k, p)` in the closed triangle.
pub fn extract_digit_with(t: PermutationTriple, p: TrianglePoint, cfg: &DigitConfig) -> Result<u64> {
    let e = t.entry();
    let parity = e.forward.iter().any(|f| f.has_parity());
    let classes: &[(u64, u64)] = if parity { &[(2, 0), (2, 1)] } else { &[(1, 0)] };
    let qualifies = |k: u64| {
        let q = forward_raw(t, &Vars::digit(p.x(), p.y(), k));
        in_closed(q, cfg.membership_tol * (1.0 + k as f64))
    };
    let mut found = Vec::new();
    let mut estimates = Vec::new();
    for &(step, offset) in classes {
        let m_limit = cfg.k_max.saturating_sub(offset) / step;
        let (cands, estimate) = class_candidates(t, p, step, offset, m_limit)?;
        found.extend(cands.into_iter().map(|m| step * m + offset).filter(|&k| k <= cfg.k_max && qualifies(k)));
        if let Some(m) = estimate {
            estimates.push((step, offset, m));
        }
    }
    if found.is_empty() {
        // Ill-conditioned fits: scan the neighbourhood of each estimate.
        for &(step, offset, m) in &estimates {
            let centre = m.round().max(0.0) as u64;
            for mm in centre.saturating_sub(32)..=centre + 32 {
                let k = step * mm + offset;
                if k <= cfg.k_max && qualifies(k) {
                    found.push(k);
                }
            }
        }
    }
    found.sort_unstable();
    found.dedup();
    match found.as_slice() {
        [] => Err(Error::DigitNotFound { triple: t.to_string(), x: p.x(), y: p.y(), k_max: cfg.k_max }),
        [k] => Ok(*k),
        ks if ks.windows(2).all(|w| w[1] == w[0] + 1) => Ok(ks[0]),
        ks => Err(Error::AmbiguousDigit { triple: t.to_string(), x: p.x(), y: p.y(), candidates: ks.to_vec() }),
    }
}

pub fn extract_digit(t: PermutationTriple, p: TrianglePoint) -> Result<u64> {
    extract_digit_with(t, p, &DigitConfig::default())
}

pub fn step_with(t: PermutationTriple, p: TrianglePoint, cfg: &DigitConfig) -> Result<OrbitStep> {
    let digit = extract_digit_with(t, p, cfg)?;
    let (x, y) = apply_branch_formula(t, digit, p)?;
    let image = TrianglePoint::new(x, y)
        .map_err(|_| Error::BoundaryHit { triple: t.to_string(), x: p.x(), y: p.y(), digit })?;
    Ok(OrbitStep { digit, image })
}

/// One application of the map.
pub fn step(t: PermutationTriple, p: TrianglePoint) -> Result<OrbitStep> {
    step_with(t, p, &DigitConfig::default())
}

/// The first `n` digits of the expansion of `p`. A boundary hit ends the
/// expansion early; its digit is kept and `terminated` is set.
pub fn expand(t: PermutationTriple, p: TrianglePoint, n: usize) -> Result<DigitSequence> {
    let mut seq = DigitSequence::default();
    let mut cur = p;
    for index in 0..n {
        match step(t, cur) {
            Ok(s) => {
                seq.digits.push(s.digit);
                cur = s.image;
            }
            Err(Error::BoundaryHit { digit, .. }) => {
                seq.digits.push(digit);
                seq.terminated = true;
                break;
            }
            Err(e) => return Err(Error::StepFailed { index, source: Box::new(e) }),
        }
    }
    Ok(seq)
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
    fn forward_examples() {
        let eee = parse_triple("e,e,e").unwrap();
        let q = apply_branch_formula(eee, 1, tp(0.7, 0.2)).unwrap();
        assert_relative_eq!(q.0, 2.0 / 7.0, max_relative = 1e-15);
        assert_relative_eq!(q.1, 1.0 / 7.0, max_relative = 1e-14);
        let q = apply_branch_formula(eee, 0, tp(0.7, 0.2)).unwrap();
        assert_relative_eq!(q.1, 3.0 / 7.0, max_relative = 1e-14);
        let t = parse_triple("12,12,12").unwrap();
        let q = apply_branch_formula(t, 0, tp(0.5, 0.25)).unwrap();
        assert_relative_eq!(q.0, 1.0, max_relative = 1e-15);
        assert_relative_eq!(q.1, 1.0 / 3.0, max_relative = 1e-15);
    }

    #[test]
    fn digit_examples() {
        let eee = parse_triple("e,e,e").unwrap();
        assert_eq!(extract_digit(eee, tp(0.7, 0.2)).unwrap(), 1);
        assert_eq!(extract_digit(eee, tp(0.8, 0.4)).unwrap(), 0);
        let t = parse_triple("e,23,e").unwrap();
        assert_eq!(extract_digit(t, tp(0.9, 0.05)).unwrap(), 1);
    }

    #[test]
    fn gauss_digit_formula() {
        // For (e,e,e) the digit is floor((1 - x)/y).
        let eee = parse_triple("e,e,e").unwrap();
        for (x, y) in [(0.9f64, 1e-5f64), (0.31, 0.3), (0.999, 0.0123), (0.5, 0.0001234)] {
            let expected = ((1.0 - x) / y).floor() as u64;
            assert_eq!(extract_digit(eee, tp(x, y)).unwrap(), expected, "({x}, {y})");
        }
    }

    #[test]
    fn digit_limit() {
        let eee = parse_triple("e,e,e").unwrap();
        let cfg = DigitConfig { k_max: 100, ..Default::default() };
        assert!(matches!(extract_digit_with(eee, tp(0.5, 1e-4), &cfg), Err(Error::DigitNotFound { .. })));
    }

    #[test]
    fn steps_and_expansions() {
        let eee = parse_triple("e,e,e").unwrap();
        let s = step(eee, tp(0.7, 0.2)).unwrap();
        assert_eq!(s.digit, 1);
        assert_relative_eq!(s.image.x(), 2.0 / 7.0, max_relative = 1e-15);
        // (0.5, 0.25) lies on the boundary between the cells of digits 1 and 2.
        let s = step(eee, tp(0.5, 0.25));
        assert!(matches!(s, Err(Error::BoundaryHit { digit: 1, .. })), "{s:?}");
        assert!(expand(eee, tp(0.7, 0.2), 0).unwrap().is_empty());
        let seq = expand(eee, tp(0.7, 0.2), 3).unwrap();
        assert_eq!(seq.digits[0], 1);
        let t = parse_triple("23,23,23").unwrap();
        // (0.6, 0.2) is on the edge shared by the digit 0 and digit 1 cells.
        assert!(matches!(step(t, tp(0.6, 0.2)), Err(Error::BoundaryHit { digit: 0, .. })));
        let s = step(t, tp(0.6, 0.21)).unwrap();
        let k = s.digit as f64;
        assert_relative_eq!(s.image.x(), 1.0 - 0.21 / 0.6, max_relative = 1e-14);
        assert_relative_eq!(s.image.y(), ((k + 2.0) * 0.6 - (k + 1.0) * 0.21 - 1.0) / 0.6, max_relative = 1e-12);
        let golden = (5f64.sqrt() - 1.0) / 2.0;
        let seq = expand(parse_triple("e,23,e").unwrap(), tp(golden, golden * golden * 0.9), 50).unwrap();
        assert!(seq.len() == 50 || seq.terminated);
    }
}
