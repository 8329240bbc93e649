//! Invariant densities, cylinder measures `p(k)`, the closed forms for
//! `T_{e,e,e}` and `T_{e,23,e}`, and digit frequencies along simulated orbits.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::domain::{PermutationTriple, TrianglePoint};
use crate::error::{Error, Result};
use crate::expr::{Formula, Vars};
use crate::maps::{extract_digit, step_with, DigitConfig};
use crate::quadrature::{gauss_legendre, integrate_interval};
use crate::series::TruncationPolicy;
use crate::specfun::dilog;
use crate::transfer::{apply_transfer, branch_raw, weight_raw};
use crate::triangle::{integrate_seeded, integrate_triangle, UNIT};

/// Work units per Monte Carlo run. Each orbit has its own stream, so the
/// counts do not depend on this or on the thread count.
pub const SHARDS: u64 = 64;

#[derive(Debug, Clone, Serialize)]
pub struct DigitDistribution {
    pub triple: PermutationTriple,
    /// `probs[k] = p(k)`.
    pub probs: Vec<f64>,
    pub tail_mass: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct EmpiricalStats {
    pub triple: PermutationTriple,
    pub n_steps: u64,
    pub counts: BTreeMap<u64, u64>,
    pub seed: u64,
    /// Orbits abandoned on a boundary image or an unresolved digit.
    pub restarts: u64,
}

impl EmpiricalStats {
    pub fn frequency(&self, k: u64) -> f64 {
        self.counts.get(&k).copied().unwrap_or(0) as f64 / self.n_steps as f64
    }

    /// Binomial standard error of [`frequency`](Self::frequency).
    pub fn stderr(&self, k: u64) -> f64 {
        let p = self.frequency(k);
        (p * (1.0 - p) / self.n_steps as f64).sqrt()
    }
}

/// The normalized invariant density of `t`.
pub fn density(t: PermutationTriple) -> Result<&'static Formula> {
    t.entry().density.as_ref().ok_or_else(|| Error::NoDensity(t.to_string()))
}

/// `mu(Delta_k)`, integrated over the image of the cylinder: the `k`-th
/// inverse branch carries the triangle onto `Delta_k` with Jacobian equal to
/// the transfer weight.
pub fn cylinder_measure(t: PermutationTriple, k: u64, abs_tol: f64) -> Result<f64> {
    let r = density(t)?;
    integrate_triangle(
        |x, y| {
            let v = Vars::digit(x, y, k);
            let (bx, by) = branch_raw(t, &v);
            weight_raw(t, &v) * r.at(bx, by)
        },
        abs_tol,
    )
}

fn digit_nudged(t: PermutationTriple, x: f64, y: f64) -> Option<u64> {
    // Nodes on a cell boundary are pulled towards the centroid.
    for shift in [0.0, 1e-13, -1e-13] {
        let (px, py) = (x + shift * (2.0 / 3.0 - x), y + shift * (1.0 / 3.0 - y));
        if let Ok(k) = TrianglePoint::new(px, py).and_then(|p| extract_digit(t, p)) {
            return Some(k);
        }
    }
    None
}

/// `int 1[digit = k] r` over the triangle with the digit resolved at every
/// node. Much slower and less accurate than [`cylinder_measure`]; used to
/// cross-check it.
pub fn cylinder_measure_indicator(t: PermutationTriple, k: u64, abs_tol: f64) -> Result<f64> {
    let r = density(t)?;
    integrate_seeded(|x, y| if digit_nudged(t, x, y) == Some(k) { r.at(x, y) } else { 0.0 }, UNIT, abs_tol, 5)
}

/// `p(0), ..., p(k_max)` by [`cylinder_measure`].
pub fn digit_distribution(t: PermutationTriple, k_max: u64, abs_tol: f64) -> Result<DigitDistribution> {
    density(t)?;
    let probs: Vec<f64> = (0..=k_max).into_par_iter().map(|k| cylinder_measure(t, k, abs_tol)).collect::<Result<_>>()?;
    let tail_mass = 1.0 - probs.iter().sum::<f64>();
    Ok(DigitDistribution { triple: t, probs, tail_mass })
}

/// Closed form of `p(k)` for `T_{e,e,e}`.
pub fn p_closed_eee(k: u64) -> f64 {
    let li2 = |z: f64| dilog(z).expect("argument in [0, 1/4]");
    let ln2 = 2f64.ln();
    if k == 0 {
        return 1.0 - (6.0 * li2(0.25) + 12.0 * ln2 * ln2) / (PI * PI);
    }
    let k = k as f64;
    let (k1, k2) = (k + 1.0, k + 2.0);
    let l1 = k1.ln();
    let ratio = (k2 / k1).ln();
    6.0 / (PI * PI)
        * (li2(1.0 / (k1 * k1)) - li2(1.0 / (k2 * k2)) + 4.0 * l1 * l1
            - 2.0 * ratio * ratio
            - 2.0 * (k * k2).ln() * l1)
}

/// `p(k)` for `T_{e,23,e}` from the iterated integrals, inner integrals in
/// closed form and outer ones by quadrature.
pub fn p_integral_e23e(k: u64) -> f64 {
    let c = 6.0 / (PI * PI);
    // int_a^b c / (x (1 - y)) dy
    let inner = |x: f64, a: f64, b: f64| c / x * ((1.0 - a) / (1.0 - b)).ln();
    let outer = |f: &dyn Fn(f64) -> f64, a: f64, b: f64| integrate_interval(f, a, b, 1e-14).expect("smooth integrand");
    if k == 0 {
        return outer(&|x| inner(x, 1.0 - x, x), 0.5, 1.0);
    }
    let k = k as f64;
    outer(&|x| inner(x, (1.0 - x) / (k + 1.0), x), 1.0 / (k + 2.0), 1.0 / (k + 1.0))
        + outer(&|x| inner(x, (1.0 - x) / (k + 1.0), (1.0 - x) / k), 1.0 / (k + 1.0), 1.0)
}

/// Proposal density on the triangle: an equal mixture of the uniform law and
/// the laws with densities `1/x`, `1/(1-y)`, `1/(1-x+y)`, each singular at one
/// vertex and sampled exactly.
fn proposal_density(x: f64, y: f64) -> f64 {
    0.25 * (2.0 + 1.0 / x + 1.0 / (1.0 - y) + 1.0 / (1.0 - x + y))
}

fn proposal_sample<R: Rng>(rng: &mut R) -> (f64, f64) {
    let (u, v): (f64, f64) = (rng.random(), rng.random());
    match rng.random_range(0..4u8) {
        0 => (u.max(v), u.min(v)),
        1 => (u, v * u),
        2 => (u + v * (1.0 - u), u),
        _ => {
            let y = v * (1.0 - u);
            (y + u, y)
        }
    }
}

/// Exact sampler for the invariant density of a triple by rejection from a
/// proposal with the same vertex singularities. Triples without a density
/// get the uniform law.
pub struct DensitySampler {
    r: Option<&'static Formula>,
    bound: f64,
}

impl DensitySampler {
    pub fn new(t: PermutationTriple) -> Self {
        let Ok(r) = density(t) else {
            return DensitySampler { r: None, bound: 1.0 };
        };
        // sup r / proposal over barycentric coordinates spaced geometrically
        // towards every vertex and edge.
        let levels: Vec<f64> = (0..=60).map(|i| 10f64.powf(-8.0 * i as f64 / 60.0)).collect();
        let mut sup = 0.0f64;
        for &a in &levels {
            for &b in &levels {
                for &c in &levels {
                    let n = a + b + c;
                    let (x, y) = ((b + c) / n, c / n);
                    if x > y && y > 0.0 && x < 1.0 {
                        sup = sup.max(r.at(x, y) / proposal_density(x, y));
                    }
                }
            }
        }
        DensitySampler { r: Some(r), bound: 1.05 * sup }
    }

    pub fn sample<R: Rng>(&self, rng: &mut R) -> TrianglePoint {
        loop {
            let Some(r) = self.r else {
                let (a, b): (f64, f64) = (rng.random(), rng.random());
                match TrianglePoint::new(a.max(b), a.min(b)) {
                    Ok(p) => return p,
                    Err(_) => continue,
                }
            };
            let (x, y) = proposal_sample(rng);
            let Ok(p) = TrianglePoint::new(x, y) else { continue };
            if rng.random::<f64>() * self.bound * proposal_density(x, y) < r.at(x, y) {
                return p;
            }
        }
    }
}

/// Steps per orbit in [`empirical_digits`].
pub const ORBIT_LEN: u64 = 100;

/// Digit counts over `n` orbit steps, made of orbits of [`ORBIT_LEN`] steps
/// each on its own seeded stream and started from the invariant density.
/// Invariance makes every step an unbiased draw of the digit law; short
/// orbits keep the long runs near neutral fixed points from inflating the
/// variance. The first orbit starts at `start` when given. An orbit that
/// reaches the boundary or an unresolved digit is restarted from a fresh draw.
pub fn empirical_digits(t: PermutationTriple, start: Option<TrianglePoint>, n: u64, seed: u64) -> Result<EmpiricalStats> {
    empirical_digits_with(t, start, n, seed, ORBIT_LEN)
}

pub fn empirical_digits_with(
    t: PermutationTriple,
    start: Option<TrianglePoint>,
    n: u64,
    seed: u64,
    orbit_len: u64,
) -> Result<EmpiricalStats> {
    if n < 1 || orbit_len < 1 {
        return Err(Error::InvalidConfig("step count and orbit length must be at least 1".into()));
    }
    let sampler = DensitySampler::new(t);
    let cfg = DigitConfig::default();
    let orbits = n.div_ceil(orbit_len);
    let chunks = SHARDS.min(orbits);
    let results: Vec<(BTreeMap<u64, u64>, u64)> = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut counts = BTreeMap::new();
            let mut restarts = 0;
            for orbit in (chunk..orbits).step_by(chunks as usize) {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(orbit);
                let steps = orbit_len.min(n - orbit * orbit_len);
                let mut p = match (orbit, start) {
                    (0, Some(s)) => s,
                    _ => sampler.sample(&mut rng),
                };
                let mut done = 0;
                while done < steps {
                    match step_with(t, p, &cfg) {
                        Ok(s) => {
                            *counts.entry(s.digit).or_insert(0) += 1;
                            done += 1;
                            p = s.image;
                        }
                        Err(_) => {
                            restarts += 1;
                            p = sampler.sample(&mut rng);
                        }
                    }
                }
            }
            (counts, restarts)
        })
        .collect();
    let mut counts = BTreeMap::new();
    let mut restarts = 0;
    for (c, r) in results {
        for (k, v) in c {
            *counts.entry(k).or_insert(0) += v;
        }
        restarts += r;
    }
    Ok(EmpiricalStats { triple: t, n_steps: n, counts, seed, restarts })
}

/// Axis-parallel rectangle `[x0, x1] x [y0, y1]` inside the triangle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Rect {
    pub x: (f64, f64),
    pub y: (f64, f64),
}

/// The 20 test rectangles: four columns of five, each inside the triangle.
pub fn test_rectangles() -> Vec<Rect> {
    let mut out = Vec::with_capacity(20);
    for a in 0..4 {
        let x0 = 0.1 + 0.2 * a as f64;
        for b in 0..5 {
            let y0 = b as f64 / 5.0 * x0 * 0.9 + 0.01;
            out.push(Rect { x: (x0, x0 + 0.15), y: (y0, y0 + 0.17 * x0) });
        }
    }
    out
}

fn rect_nodes(rect: Rect) -> Vec<(f64, f64, f64)> {
    const PANELS: usize = 2;
    let rule = gauss_legendre(12);
    let hx = (rect.x.1 - rect.x.0) / PANELS as f64;
    let hy = (rect.y.1 - rect.y.0) / PANELS as f64;
    let mut out = Vec::new();
    for i in 0..PANELS {
        let cx = rect.x.0 + (i as f64 + 0.5) * hx;
        for j in 0..PANELS {
            let cy = rect.y.0 + (j as f64 + 0.5) * hy;
            for (xi, wi) in rule.nodes.iter().zip(&rule.weights) {
                for (yj, wj) in rule.nodes.iter().zip(&rule.weights) {
                    out.push((cx + 0.5 * hx * xi, cy + 0.5 * hy * yj, 0.25 * hx * hy * wi * wj));
                }
            }
        }
    }
    out
}

/// `(mu(R), mu(T^{-1} R))`, the second as `int_R L r`: the preimage of `R`
/// is the union of the branch images of `R`.
pub fn rect_measures(t: PermutationTriple, rect: Rect, eps: f64) -> Result<(f64, f64)> {
    let r = density(t)?;
    let pol = TruncationPolicy::with_eps(eps);
    let values: Vec<(f64, f64)> = rect_nodes(rect)
        .par_iter()
        .map(|&(x, y, w)| {
            let p = TrianglePoint::new(x, y)?;
            Ok((w * r.at(x, y), w * apply_transfer(t, r, p, &pol)?.value))
        })
        .collect::<Result<_>>()?;
    Ok(values.iter().fold((0.0, 0.0), |acc, v| (acc.0 + v.0, acc.1 + v.1)))
}

/// `mu(T^{-1} R)` as `int 1[T(q) in R] r(q)` over the triangle, with the
/// image taken pointwise.
pub fn preimage_measure_indicator(t: PermutationTriple, rect: Rect, abs_tol: f64) -> Result<f64> {
    let r = density(t)?;
    let cfg = DigitConfig::default();
    integrate_seeded(
        |x, y| {
            let Ok(p) = TrianglePoint::new(x, y) else { return 0.0 };
            match step_with(t, p, &cfg) {
                Ok(s) => {
                    let (u, v) = (s.image.x(), s.image.y());
                    if u >= rect.x.0 && u <= rect.x.1 && v >= rect.y.0 && v <= rect.y.1 {
                        r.at(x, y)
                    } else {
                        0.0
                    }
                }
                Err(_) => 0.0,
            }
        },
        UNIT,
        abs_tol,
        5,
    )
}

/// Largest `|mu(R) - mu(T^{-1} R)|` over [`test_rectangles`].
pub fn invariance_check(t: PermutationTriple, abs_tol: f64) -> Result<f64> {
    if !(abs_tol > 0.0) {
        return Err(Error::InvalidConfig(format!("abs_tol must be positive, got {abs_tol}")));
    }
    let mut worst = 0.0f64;
    for rect in test_rectangles() {
        let (m, pre) = rect_measures(t, rect, abs_tol * 1e-3)?;
        worst = worst.max((m - pre).abs());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::parse_triple;

    #[test]
    fn density_rows() {
        let r = density(parse_triple("e,e,e").unwrap()).unwrap();
        assert!((r.at(0.5, 0.25) - 12.0 / (PI * PI * 0.5 * 1.25)).abs() < 1e-14);
        let r = density(parse_triple("23,23,23").unwrap()).unwrap();
        assert!((r.at(0.6, 0.2) - 12.0 / (PI * PI * 0.6 * 1.4)).abs() < 1e-14);
        assert!(matches!(density(parse_triple("e,12,e").unwrap()), Err(Error::NoDensity(_))));
    }

    #[test]
    fn closed_forms() {
        // mpmath, 30 digits
        let eee = [
            0.25312589016220356, 0.13575046176831522, 0.087620141261285384, 0.062282188935832667,
            0.047024868430532338, 0.037014166464675830,
        ];
        let e23e = [
            0.5, 0.12656294508110178, 0.067875230884157612, 0.043810070630642692, 0.031141094467916334,
            0.023512434215266169,
        ];
        for k in 0..6 {
            assert!((p_closed_eee(k as u64) - eee[k]).abs() < 1e-14, "{k}");
            assert!((p_integral_e23e(k as u64) - e23e[k]).abs() < 1e-13, "{k}");
        }
    }

    #[test]
    fn cylinders_match_closed_forms() {
        let eee = parse_triple("e,e,e").unwrap();
        let e23e = parse_triple("e,23,e").unwrap();
        for k in 0..=5 {
            assert!((cylinder_measure(eee, k, 1e-11).unwrap() - p_closed_eee(k)).abs() < 1e-9, "{k}");
            assert!((cylinder_measure(e23e, k, 1e-11).unwrap() - p_integral_e23e(k)).abs() < 1e-9, "{k}");
        }
    }

    #[test]
    fn indicator_cross_check() {
        let t = parse_triple("e,23,e").unwrap();
        let v = cylinder_measure_indicator(t, 1, 1e-4).unwrap();
        assert!((v - p_integral_e23e(1)).abs() < 1e-3, "{v}");
    }

    #[test]
    fn sampler_and_single_step() {
        let t = parse_triple("e,e,e").unwrap();
        let s = empirical_digits(t, None, 1, 3).unwrap();
        assert_eq!(s.counts.values().sum::<u64>(), 1);
        let a = empirical_digits(t, None, 5000, 3).unwrap();
        let b = empirical_digits(t, None, 5000, 3).unwrap();
        assert_eq!(a.counts, b.counts);
    }

    #[test]
    fn rectangles_inside() {
        let rects = test_rectangles();
        assert_eq!(rects.len(), 20);
        for r in rects {
            assert!(r.y.0 > 0.0 && r.y.1 <= r.x.0 && r.x.1 < 1.0, "{r:?}");
        }
    }
}
