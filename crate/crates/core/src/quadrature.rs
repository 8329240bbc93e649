//! One-dimensional quadrature: Gauss-Legendre rules, half-line integrals
//! against `dm(t) = t/(e^t - 1) dt`, and adaptive Gauss-Kronrod.

use std::sync::LazyLock;

use serde::Serialize;

use crate::error::{Error, Result};

/// Gauss-Legendre nodes and weights on `[-1, 1]`.
#[derive(Debug)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

pub const MAX_ORDER: usize = 64;

static GL: LazyLock<Vec<GaussLegendre>> = LazyLock::new(|| (0..=MAX_ORDER).map(build_gl).collect());

/// The `n`-point rule, `1 <= n <= 64`.
pub fn gauss_legendre(n: usize) -> &'static GaussLegendre {
    assert!((1..=MAX_ORDER).contains(&n), "Gauss-Legendre order {n} out of range");
    &GL[n]
}

fn build_gl(n: usize) -> GaussLegendre {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for j in 2..=n {
                let jf = j as f64;
                let p2 = ((2.0 * jf - 1.0) * z * p1 - (jf - 1.0) * p0) / jf;
                p0 = p1;
                p1 = p2;
            }
            let pn = if n == 1 { z } else { p1 };
            let pm = if n == 1 { 1.0 } else { p0 };
            dp = n as f64 * (z * pn - pm) / (z * z - 1.0);
            let dz = pn / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        nodes[i] = -z;
        weights[i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
    GaussLegendre { nodes, weights }
}

/// Gauss-Legendre estimate of `int_a^b f`.
pub fn gl_interval<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, order: usize) -> f64 {
    let rule = gauss_legendre(order);
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut sum = 0.0;
    for (x, w) in rule.nodes.iter().zip(&rule.weights) {
        sum += w * f(mid + half * x);
    }
    sum * half
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RuleKind {
    /// Uniform unit-width panels on `[0, panels]`; the rest of the half-line
    /// is dropped.
    GaussLegendreComposite,
    /// `t = -ln u` with dyadic panels `[2^-(i+1), 2^-i]` in `u`,
    /// `i < panels`; the neglected piece is `t > panels ln 2`.
    ExpSubstitutedHalfline,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureRule {
    pub kind: RuleKind,
    pub panels: usize,
    pub order: usize,
    pub abs_tol: f64,
}

impl Default for QuadratureRule {
    fn default() -> Self {
        QuadratureRule { kind: RuleKind::ExpSubstitutedHalfline, panels: 64, order: 16, abs_tol: 1e-9 }
    }
}

impl QuadratureRule {
    pub fn with_tol(abs_tol: f64) -> Self {
        QuadratureRule { abs_tol, ..Self::default() }
    }

    pub fn truncated(panels: usize, order: usize, abs_tol: f64) -> Self {
        QuadratureRule { kind: RuleKind::GaussLegendreComposite, panels, order, abs_tol }
    }

    pub fn validate(&self) -> Result<()> {
        if self.panels < 1 || self.order < 2 || self.order > MAX_ORDER || !(self.abs_tol > 0.0) {
            return Err(Error::InvalidConfig(format!("invalid quadrature rule {self:?}")));
        }
        Ok(())
    }

    /// Single pass with each panel split into `split` equal pieces.
    fn pass<F: Fn(f64) -> f64>(&self, f: &F, split: usize) -> f64 {
        let mut total = 0.0;
        match self.kind {
            RuleKind::GaussLegendreComposite => {
                let h = 1.0 / split as f64;
                for i in 0..self.panels * split {
                    let a = i as f64 * h;
                    total += gl_interval(f, a, a + h, self.order);
                }
            }
            RuleKind::ExpSubstitutedHalfline => {
                // int_0^inf f(t) dt = int_0^1 f(-ln u) du/u
                let g = |u: f64| f(-u.ln()) / u;
                for i in 0..self.panels {
                    let hi = 0.5f64.powi(i as i32);
                    let lo = 0.5 * hi;
                    let h = (hi - lo) / split as f64;
                    for j in 0..split {
                        let a = lo + j as f64 * h;
                        total += gl_interval(g, a, a + h, self.order);
                    }
                }
            }
        }
        total
    }

    /// Integrates `f` over `[0, inf)`, refining every panel until two
    /// successive passes agree within `abs_tol`.
    pub fn halfline<F: Fn(f64) -> f64>(&self, f: F) -> Result<f64> {
        self.validate()?;
        let mut prev = self.pass(&f, 1);
        let mut split = 2;
        let mut diff = f64::INFINITY;
        while split <= 16 {
            let cur = self.pass(&f, split);
            diff = (cur - prev).abs();
            if !cur.is_finite() {
                break;
            }
            if diff <= self.abs_tol {
                return Ok(cur);
            }
            prev = cur;
            split *= 2;
        }
        Err(Error::NonConvergent { what: "half-line quadrature".into(), estimate: diff })
    }

    /// One pass without refinement, for inner integrals of nested quadratures
    /// whose accuracy is certified by the outer comparison.
    pub fn halfline_fixed<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.pass(&f, 1)
    }
}

/// Density of `dm`, `t/(e^t - 1)`, continued by 1 at `t = 0`.
#[inline]
pub fn dm_density(t: f64) -> f64 {
    if t == 0.0 {
        1.0
    } else if t > 700.0 {
        0.0
    } else {
        t / t.exp_m1()
    }
}

/// `int_0^inf fun(t) dm(t)`.
pub fn integrate_dm<F: Fn(f64) -> f64>(fun: F, rule: &QuadratureRule) -> Result<f64> {
    rule.halfline(|t| fun(t) * dm_density(t))
}

const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    for i in 0..7 {
        let d = h * XGK[i];
        let s = f(c - d) + f(c + d);
        k += WGK[i] * s;
        if i % 2 == 1 {
            g += WG[i / 2] * s;
        }
    }
    (k * h, ((k - g) * h).abs())
}

/// Globally adaptive Gauss-Kronrod (7, 15) quadrature on `[a, b]`.
pub fn integrate_interval<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, abs_tol: f64) -> Result<f64> {
    let mut segs = vec![(a, b, gk15(&f, a, b))];
    for _ in 0..5000 {
        let (err, worst) = segs
            .iter()
            .enumerate()
            .fold((0.0, 0), |(e, w), (i, s)| if s.2 .1 > segs[w].2 .1 { (e + s.2 .1, i) } else { (e + s.2 .1, w) });
        if err <= abs_tol {
            return Ok(segs.iter().map(|s| s.2 .0).sum());
        }
        let (lo, hi, _) = segs.swap_remove(worst);
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        segs.push((lo, mid, gk15(&f, lo, mid)));
        segs.push((mid, hi, gk15(&f, mid, hi)));
    }
    let estimate: f64 = segs.iter().map(|s| s.2 .1).sum();
    Err(Error::NonConvergent { what: format!("integral over [{a}, {b}]"), estimate })
}

/// Tensor Gauss-Legendre over a rectangle, `panels x panels` cells.
pub fn integrate_rect<F: Fn(f64, f64) -> f64>(f: F, x: (f64, f64), y: (f64, f64), panels: usize, order: usize) -> f64 {
    let rule = gauss_legendre(order);
    let hx = (x.1 - x.0) / panels as f64;
    let hy = (y.1 - y.0) / panels as f64;
    let mut total = 0.0;
    for i in 0..panels {
        let cx = x.0 + (i as f64 + 0.5) * hx;
        for j in 0..panels {
            let cy = y.0 + (j as f64 + 0.5) * hy;
            for (xi, wi) in rule.nodes.iter().zip(&rule.weights) {
                for (yj, wj) in rule.nodes.iter().zip(&rule.weights) {
                    total += wi * wj * f(cx + 0.5 * hx * xi, cy + 0.5 * hy * yj);
                }
            }
        }
    }
    total * 0.25 * hx * hy
}
