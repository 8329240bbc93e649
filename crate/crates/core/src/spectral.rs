//! Eigenvalue-one residuals, summand bounds and monotonicity of the transfer
//! operators with tabulated Banach weights and eigenfunctions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::domain::{GridSpec, PermutationTriple, ScalarField, TrianglePoint};
use crate::error::{Error, Result};
use crate::expr::{Formula, Vars};
use crate::series::{sum_series, TruncationPolicy};
use crate::transfer::{apply_transfer, apply_transfer_iterated, branch_point, weight};

/// Terms per level when iterating the operator in [`monotonicity_check`].
pub const ITERATE_TERMS: u64 = 24;

#[derive(Debug, Clone, Serialize)]
pub struct ResidualReport {
    pub triple: PermutationTriple,
    pub grid: Vec<TrianglePoint>,
    pub max_rel_residual: f64,
    pub truncation_k: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SumBoundReport {
    pub triple: PermutationTriple,
    pub grid: Vec<TrianglePoint>,
    pub max_sum: f64,
    pub converged: Vec<bool>,
}

impl SumBoundReport {
    pub fn all_converged(&self) -> bool {
        self.converged.iter().all(|&c| c)
    }
}

fn eigenfunction(t: PermutationTriple) -> Result<&'static Formula> {
    t.entry().eigen.as_ref().ok_or_else(|| Error::NoEigenfunction(t.to_string()))
}

fn banach(t: PermutationTriple) -> Result<&'static (Formula, Formula)> {
    t.entry().banach.as_ref().ok_or_else(|| Error::NoBanachRow(t.to_string()))
}

/// Largest `|L h - h| / |h|` over the grid, summing the transfer series to
/// `eps / 10`.
pub fn eigen_residual(t: PermutationTriple, grid: &GridSpec, eps: f64) -> Result<ResidualReport> {
    let h = eigenfunction(t)?;
    let pol = TruncationPolicy::with_eps(eps / 10.0);
    let points = grid.points();
    let per_point: Vec<(f64, u64)> = points
        .par_iter()
        .map(|&p| {
            let lh = apply_transfer(t, h, p, &pol)?;
            let hp = h.at(p.x(), p.y());
            Ok(((lh.value - hp).abs() / hp.abs(), lh.k_used))
        })
        .collect::<Result<_>>()?;
    Ok(ResidualReport {
        triple: t,
        grid: points,
        max_rel_residual: per_point.iter().map(|r| r.0).fold(0.0, f64::max),
        truncation_k: per_point.iter().map(|r| r.1).max().unwrap_or(0),
    })
}

/// `sum_k |summand(p, k)|` from the Banach-weight table.
pub fn summand_sum(t: PermutationTriple, p: TrianglePoint, eps: f64) -> Result<f64> {
    let (_, summand) = banach(t)?;
    let pol = TruncationPolicy::with_eps(eps);
    let (x, y) = (p.x(), p.y());
    let s = sum_series(summand.has_parity(), |k, sign| summand.eval(&Vars { x, y, k, sign }).abs(), &pol)?;
    Ok(s.value)
}

/// Relative gap between the tabulated summand at digit `k` and
/// `g(p) weight(k, p) / g(branch_point(k, p))`.
pub fn summand_consistency(t: PermutationTriple, p: TrianglePoint, k: u64) -> Result<f64> {
    let (g, summand) = banach(t)?;
    let b = branch_point(t, k, p)?;
    let expected = g.at(p.x(), p.y()) * weight(t, k, p)? / g.at(b.x(), b.y());
    let tabulated = summand.eval(&Vars::digit(p.x(), p.y(), k));
    Ok((tabulated - expected).abs() / expected.abs())
}

/// Summand sums over the grid. A point whose series fails to converge is
/// marked and left out of `max_sum`.
pub fn sum_bound_report(t: PermutationTriple, grid: &GridSpec, eps: f64) -> Result<SumBoundReport> {
    banach(t)?;
    let points = grid.points();
    let sums: Vec<Option<f64>> = points
        .par_iter()
        .map(|&p| match summand_sum(t, p, eps) {
            Ok(v) if v.is_finite() => Ok(Some(v)),
            Ok(_) | Err(Error::TruncationFailure { .. }) => Ok(None),
            Err(e) => Err(e),
        })
        .collect::<Result<_>>()?;
    Ok(SumBoundReport {
        triple: t,
        grid: points,
        max_sum: sums.iter().flatten().copied().fold(0.0, f64::max),
        converged: sums.iter().map(Option::is_some).collect(),
    })
}

/// `(L^n f(p), L^n g(p))` with each level cut at [`ITERATE_TERMS`].
pub fn iterate_pair<F: ScalarField, G: ScalarField>(
    t: PermutationTriple,
    f: &F,
    g: &G,
    p: TrianglePoint,
    n: u32,
) -> (f64, f64) {
    let at = (p.x(), p.y());
    (apply_transfer_iterated(t, f, at, n, ITERATE_TERMS), apply_transfer_iterated(t, g, at, n, ITERATE_TERMS))
}

fn random_point(rng: &mut ChaCha8Rng) -> TrianglePoint {
    loop {
        let x: f64 = rng.random_range(0.02..0.98);
        let y: f64 = rng.random_range(0.01..0.99) * x;
        if let Ok(p) = TrianglePoint::new(x, y) {
            return p;
        }
    }
}

/// Draws pairs `f < g` from the Banach space of `t`, both of the form
/// `c(x, y) / g_t(x, y)` with `c` bounded, and checks `L^n f < L^n g` at a
/// random point for every trial.
pub fn monotonicity_check(t: PermutationTriple, n: u32, trials: usize, seed: u64) -> Result<bool> {
    if n < 1 {
        return Err(Error::InvalidConfig("iterate count must be at least 1".into()));
    }
    let (gw, _) = banach(t)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let a: [f64; 3] = std::array::from_fn(|_| rng.random_range(-1.0..1.0));
        let b: [f64; 3] = std::array::from_fn(|_| rng.random_range(-1.0..1.0));
        let lift = rng.random_range(0.05..1.0);
        let p = random_point(&mut rng);
        let f = |x: f64, y: f64| (a[0] + a[1] * x + a[2] * y) / gw.at(x, y).abs();
        let g = |x: f64, y: f64| {
            let bump = (b[0] + b[1] * x + b[2] * y).powi(2) + lift;
            (a[0] + a[1] * x + a[2] * y + bump) / gw.at(x, y).abs()
        };
        let (lf, lg) = iterate_pair(t, &f, &g, p, n);
        if !(lf < lg) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `max |f / h|` over the grid.
pub fn boundedness_ratio<F: ScalarField + ?Sized>(t: PermutationTriple, f: &F, grid: &GridSpec) -> Result<f64> {
    let h = eigenfunction(t)?;
    Ok(grid.points().iter().map(|p| (f.eval(p.x(), p.y()) / h.at(p.x(), p.y())).abs()).fold(0.0, f64::max))
}
