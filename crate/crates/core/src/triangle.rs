//! Adaptive cubature over triangles.
//!
//! Each cell is integrated with collapsed (Duffy) tensor Gauss-Legendre rules
//! whose apex sits at the cell's first vertex. Midpoint subdivision keeps the
//! parent's corners as apexes of the corner children, so integrands that blow
//! up like `1/r` at a vertex of the initial triangle stay smooth in the
//! collapsed coordinates at every level.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::quadrature::gauss_legendre;

type Pt = (f64, f64);

const LOW: usize = 5;
const HIGH: usize = 7;
const MAX_DEPTH: u32 = 40;
const MAX_CELLS: usize = 400_000;

/// The open triangle `0 < y < x < 1`.
pub const UNIT: [Pt; 3] = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0)];

fn duffy<F: Fn(f64, f64) -> f64>(f: &F, tri: &[Pt; 3], order: usize) -> f64 {
    let [a, b, c] = *tri;
    let rule = gauss_legendre(order);
    let area2 = ((b.0 - a.0) * (c.1 - a.1) - (c.0 - a.0) * (b.1 - a.1)).abs();
    let mut sum = 0.0;
    for (si, wi) in rule.nodes.iter().zip(&rule.weights) {
        let s = 0.5 * (si + 1.0);
        let mut inner = 0.0;
        for (ti, wj) in rule.nodes.iter().zip(&rule.weights) {
            let t = 0.5 * (ti + 1.0);
            let x = a.0 + s * (b.0 - a.0) + s * t * (c.0 - b.0);
            let y = a.1 + s * (b.1 - a.1) + s * t * (c.1 - b.1);
            inner += wj * f(x, y);
        }
        sum += wi * s * inner;
    }
    0.25 * sum * area2
}

struct Cell {
    tri: [Pt; 3],
    value: f64,
    err: f64,
    depth: u32,
}

impl PartialEq for Cell {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Cell {}
impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Cell {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

fn cell<F: Fn(f64, f64) -> f64>(f: &F, tri: [Pt; 3], depth: u32) -> Cell {
    let hi = duffy(f, &tri, HIGH);
    let lo = duffy(f, &tri, LOW);
    let err = if hi.is_finite() { (hi - lo).abs() } else { f64::INFINITY };
    Cell { tri, value: hi, err, depth }
}

fn mid(p: Pt, q: Pt) -> Pt {
    (0.5 * (p.0 + q.0), 0.5 * (p.1 + q.1))
}

fn children(tri: &[Pt; 3]) -> [[Pt; 3]; 4] {
    let [a, b, c] = *tri;
    let (ab, bc, ca) = (mid(a, b), mid(b, c), mid(c, a));
    [[a, ab, ca], [b, bc, ab], [c, ca, bc], [bc, ca, ab]]
}

/// Integrates `f` over the triangle `tri` to absolute tolerance `abs_tol`.
pub fn integrate_over<F: Fn(f64, f64) -> f64>(f: F, tri: [Pt; 3], abs_tol: f64) -> Result<f64> {
    integrate_seeded(f, tri, abs_tol, 0)
}

/// As [`integrate_over`], after splitting `tri` uniformly `min_depth` times.
/// Discontinuous integrands need this: a cell whose nodes all miss a small
/// feature reports zero error.
pub fn integrate_seeded<F: Fn(f64, f64) -> f64>(f: F, tri: [Pt; 3], abs_tol: f64, min_depth: u32) -> Result<f64> {
    if !(abs_tol > 0.0) {
        return Err(Error::InvalidConfig(format!("abs_tol must be positive, got {abs_tol}")));
    }
    let mut seeds = vec![tri];
    for _ in 0..min_depth.min(8) {
        seeds = seeds.iter().flat_map(children).collect();
    }
    let mut heap = BinaryHeap::new();
    let mut frozen: Vec<Cell> = Vec::new();
    let mut err_total = 0.0;
    let mut cells = seeds.len();
    for s in seeds {
        let c = cell(&f, s, min_depth);
        err_total += c.err;
        heap.push(c);
    }
    while err_total > abs_tol {
        let Some(worst) = heap.pop() else { break };
        if worst.depth >= MAX_DEPTH || cells >= MAX_CELLS {
            frozen.push(worst);
            if cells >= MAX_CELLS {
                break;
            }
            continue;
        }
        err_total -= worst.err;
        for child in children(&worst.tri) {
            let c = cell(&f, child, worst.depth + 1);
            err_total += c.err;
            heap.push(c);
        }
        cells += 3;
        // Recompute occasionally: the running total drifts under cancellation.
        if cells % 3000 == 0 {
            err_total = heap.iter().chain(&frozen).map(|c| c.err).sum();
        }
    }
    let mut leaves: Vec<&Cell> = heap.iter().chain(&frozen).collect();
    let err: f64 = leaves.iter().map(|c| c.err).sum();
    if !(err <= abs_tol) {
        return Err(Error::NonConvergent { what: "triangle cubature".into(), estimate: err });
    }
    // Deterministic, magnitude-ordered summation.
    leaves.sort_by(|p, q| p.value.abs().total_cmp(&q.value.abs()));
    Ok(leaves.iter().map(|c| c.value).sum())
}

/// Integrates `f` over `0 < y < x < 1`.
pub fn integrate_triangle<F: Fn(f64, f64) -> f64>(f: F, abs_tol: f64) -> Result<f64> {
    integrate_over(f, UNIT, abs_tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn constant() {
        let v = integrate_triangle(|_, _| 2.0, 1e-12).unwrap();
        assert!((v - 1.0).abs() < 1e-14);
    }

    #[test]
    fn vertex_singular_densities() {
        let r1 = |x: f64, y: f64| 12.0 / (PI * PI * x * (y + 1.0));
        assert!((integrate_triangle(r1, 1e-11).unwrap() - 1.0).abs() < 1e-10);
        let r2 = |x: f64, y: f64| 6.0 / (PI * PI * x * (1.0 - y));
        assert!((integrate_triangle(r2, 1e-11).unwrap() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn polynomial() {
        // int_0^1 x^2 (x^2/2) dx
        let v = integrate_triangle(|x, y| x * x * y, 1e-13).unwrap();
        assert!((v - 0.1).abs() < 1e-14);
    }

    #[test]
    fn discontinuous_integrand() {
        // Indicator of y > 0.3: area 0.7^2/2
        let v = integrate_triangle(|_, y| if y > 0.3 { 1.0 } else { 0.0 }, 1e-4).unwrap();
        assert!((v - 0.245).abs() < 1e-4);
    }
}
