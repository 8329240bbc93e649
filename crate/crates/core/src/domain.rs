//! Identifiers, the triangle domain and the compiled formula registry.

use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::expr::Formula;
use crate::tables;

/// One of the six permutation labels. Labels are opaque row keys.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Perm {
    E,
    P12,
    P13,
    P23,
    P123,
    P132,
}

impl Perm {
    pub const ALL: [Perm; 6] = [Perm::E, Perm::P12, Perm::P13, Perm::P23, Perm::P123, Perm::P132];

    pub fn label(self) -> &'static str {
        match self {
            Perm::E => "e",
            Perm::P12 => "12",
            Perm::P13 => "13",
            Perm::P23 => "23",
            Perm::P123 => "123",
            Perm::P132 => "132",
        }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Perm::ALL
            .into_iter()
            .find(|p| p.label() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown permutation label {s:?}")))
    }
}

/// A supported triple `(sigma, tau0, tau1)`.
///
/// Only the 108 tabulated triples can be constructed. Ordering follows the
/// table order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermutationTriple {
    index: u8,
    pub sigma: Perm,
    pub tau0: Perm,
    pub tau1: Perm,
}

impl PermutationTriple {
    pub fn new(sigma: Perm, tau0: Perm, tau1: Perm) -> Result<Self> {
        registry()
            .entries
            .iter()
            .map(|e| e.triple)
            .find(|t| t.sigma == sigma && t.tau0 == tau0 && t.tau1 == tau1)
            .ok_or_else(|| Error::UnsupportedTriple(format!("{sigma},{tau0},{tau1}")))
    }

    /// Position in the table, `0..108`.
    pub fn index(self) -> usize {
        self.index as usize
    }

    /// All supported triples in table order.
    pub fn all() -> impl Iterator<Item = PermutationTriple> {
        registry().entries.iter().map(|e| e.triple)
    }

    pub(crate) fn entry(self) -> &'static Entry {
        &registry().entries[self.index()]
    }

    /// Whether an ergodicity result for this map is cited in the literature.
    pub fn ergodic_flagged(self) -> bool {
        ERGODIC.contains(&self.to_string().as_str())
    }
}

const ERGODIC: [&str; 5] = ["e,e,e", "e,23,e", "e,23,23", "e,132,23", "e,23,132"];

impl fmt::Display for PermutationTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.sigma, self.tau0, self.tau1)
    }
}

impl fmt::Debug for PermutationTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl Serialize for PermutationTriple {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for PermutationTriple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_triple(s)
    }
}

/// Parses `"e,23,e"` style text into a supported triple.
pub fn parse_triple(text: &str) -> Result<PermutationTriple> {
    let parts: Vec<&str> = text.trim().trim_matches(|c| c == '(' || c == ')').split(',').collect();
    if parts.len() != 3 {
        return Err(Error::Parse(format!("expected three comma-separated labels, got {text:?}")));
    }
    let sigma = parts[0].parse()?;
    let tau0 = parts[1].parse()?;
    let tau1 = parts[2].parse()?;
    PermutationTriple::new(sigma, tau0, tau1)
}

/// True iff `0 < y < x < 1`.
pub fn in_triangle(x: f64, y: f64) -> bool {
    0.0 < y && y < x && x < 1.0
}

/// A point of the open triangle `0 < y < x < 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrianglePoint {
    x: f64,
    y: f64,
}

impl TrianglePoint {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if in_triangle(x, y) {
            Ok(TrianglePoint { x, y })
        } else {
            Err(Error::OutsideTriangle { x, y })
        }
    }

    pub fn x(self) -> f64 {
        self.x
    }

    pub fn y(self) -> f64 {
        self.y
    }
}

/// Digits of an expansion, with a flag for orbits that stopped on the boundary.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct DigitSequence {
    pub digits: Vec<u64>,
    pub terminated: bool,
}

impl DigitSequence {
    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }
}

/// A real function on the triangle.
pub trait ScalarField: Sync {
    fn eval(&self, x: f64, y: f64) -> f64;
}

impl<F: Fn(f64, f64) -> f64 + Sync> ScalarField for F {
    fn eval(&self, x: f64, y: f64) -> f64 {
        self(x, y)
    }
}

impl ScalarField for Formula {
    fn eval(&self, x: f64, y: f64) -> f64 {
        self.at(x, y)
    }
}

/// The `(l, j, h)` row of the Hilbert-space table.
#[derive(Debug, Clone, Copy)]
pub struct HilbertTriple {
    pub l: &'static Formula,
    pub j: &'static Formula,
    pub h3: &'static Formula,
}

/// Everything tabulated for one triple beyond its map formulas.
#[derive(Debug, Clone, Copy)]
pub struct SpectralData {
    pub triple: PermutationTriple,
    pub banach_weight_g: Option<&'static Formula>,
    pub summand: Option<&'static Formula>,
    pub eigenfunction_h: Option<&'static Formula>,
    pub density_r: Option<&'static Formula>,
    pub hilbert: Option<HilbertTriple>,
}

pub fn spectral_data(t: PermutationTriple) -> SpectralData {
    let e = t.entry();
    SpectralData {
        triple: t,
        banach_weight_g: e.banach.as_ref().map(|b| &b.0),
        summand: e.banach.as_ref().map(|b| &b.1),
        eigenfunction_h: e.eigen.as_ref(),
        density_r: e.density.as_ref(),
        hilbert: e.hilbert.as_ref().map(|h| HilbertTriple { l: &h[0], j: &h[1], h3: &h[2] }),
    }
}

pub(crate) struct Entry {
    pub triple: PermutationTriple,
    pub forward: [Formula; 2],
    pub branch: [Formula; 2],
    pub weight: Formula,
    pub banach: Option<(Formula, Formula)>,
    pub eigen: Option<Formula>,
    pub density: Option<Formula>,
    pub hilbert: Option<[Formula; 3]>,
}

impl Entry {
    pub fn has_parity(&self) -> bool {
        self.forward.iter().chain(&self.branch).any(Formula::has_parity) || self.weight.has_parity()
    }
}

pub(crate) struct Registry {
    pub entries: Vec<Entry>,
}

static REGISTRY: LazyLock<Registry> = LazyLock::new(build_registry);

pub(crate) fn registry() -> &'static Registry {
    &REGISTRY
}

fn compile(label: &str, column: &str, src: &str) -> Formula {
    Formula::compile(src).unwrap_or_else(|e| panic!("table row ({label}), column {column}: {e}"))
}

fn split_label(label: &str) -> [Perm; 3] {
    let parts: Vec<Perm> = label
        .split(',')
        .map(|s| s.parse().unwrap_or_else(|e| panic!("table row ({label}): {e}")))
        .collect();
    [parts[0], parts[1], parts[2]]
}

fn build_registry() -> Registry {
    let mut entries: Vec<Entry> = tables::MAP_ROWS
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let [sigma, tau0, tau1] = split_label(row.label);
            Entry {
                triple: PermutationTriple { index: i as u8, sigma, tau0, tau1 },
                forward: [
                    compile(row.label, "forward x", row.forward[0]),
                    compile(row.label, "forward y", row.forward[1]),
                ],
                branch: [
                    compile(row.label, "branch x", row.branch[0]),
                    compile(row.label, "branch y", row.branch[1]),
                ],
                weight: compile(row.label, "weight", row.weight),
                banach: None,
                eigen: None,
                density: None,
                hilbert: None,
            }
        })
        .collect();

    fn slot<'a>(entries: &'a mut [Entry], label: &str) -> &'a mut Entry {
        entries
            .iter_mut()
            .find(|e| e.triple.to_string() == label)
            .unwrap_or_else(|| panic!("table row ({label}) has no map formula"))
    }
    for row in tables::BANACH_ROWS {
        slot(&mut entries, row.label).banach =
            Some((compile(row.label, "g", row.g), compile(row.label, "summand", row.summand)));
    }
    for row in tables::EIGEN_ROWS {
        slot(&mut entries, row.label).eigen = Some(compile(row.label, "h", row.h));
    }
    for row in tables::DENSITY_ROWS {
        slot(&mut entries, row.label).density = Some(compile(row.label, "r", row.r));
    }
    for row in tables::HILBERT_ROWS {
        slot(&mut entries, row.label).hilbert = Some([
            compile(row.label, "l", row.l),
            compile(row.label, "j", row.j),
            compile(row.label, "h", row.h),
        ]);
    }
    Registry { entries }
}

/// `n` points drawn uniformly from the triangle, kept at least `margin` away
/// from its edges, reproducible from `seed`.
pub fn sample_points(n: usize, margin: f64, seed: u64) -> Vec<TrianglePoint> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let (a, b): (f64, f64) = (rng.random(), rng.random());
        let (x, y) = (a.max(b), a.min(b));
        if y > margin && x - y > margin && 1.0 - x > margin {
            out.push(TrianglePoint { x, y });
        }
    }
    out
}

/// A grid over the inset triangle with vertices `(2m, m)`, `(1-m, m)`,
/// `(1-m, 1-2m)` for margin `m`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    pub margin: f64,
    pub density: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec { margin: 0.05, density: 10 }
    }
}

impl GridSpec {
    pub fn new(margin: f64, density: usize) -> Result<Self> {
        if !(margin > 0.0 && margin < 1.0 / 3.0) {
            return Err(Error::InvalidConfig(format!("grid margin {margin} must lie in (0, 1/3)")));
        }
        if density < 2 {
            return Err(Error::InvalidConfig("grid density must be at least 2".into()));
        }
        Ok(GridSpec { margin, density })
    }

    /// Vertices of the inset triangle.
    pub fn corners(&self) -> [(f64, f64); 3] {
        let m = self.margin;
        [(2.0 * m, m), (1.0 - m, m), (1.0 - m, 1.0 - 2.0 * m)]
    }

    /// Collapsed-square grid: `density` rows from the apex `(2m, m)` to the
    /// opposite edge, `density` points per row. The apex row counts once.
    pub fn points(&self) -> Vec<TrianglePoint> {
        let [a, b, c] = self.corners();
        let n = self.density;
        let mut out = vec![TrianglePoint { x: a.0, y: a.1 }];
        for i in 1..n {
            let s = i as f64 / (n - 1) as f64;
            for j in 0..n {
                let t = j as f64 / (n - 1) as f64;
                let x = a.0 + s * (b.0 - a.0) + s * t * (c.0 - b.0);
                let y = a.1 + s * (b.1 - a.1) + s * t * (c.1 - b.1);
                out.push(TrianglePoint { x, y });
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_counts() {
        let all: Vec<_> = PermutationTriple::all().collect();
        assert_eq!(all.len(), 108);
        let data: Vec<_> = all.iter().map(|&t| spectral_data(t)).collect();
        assert_eq!(data.iter().filter(|d| d.banach_weight_g.is_some()).count(), 47);
        assert_eq!(data.iter().filter(|d| d.eigenfunction_h.is_some()).count(), 18);
        assert_eq!(data.iter().filter(|d| d.density_r.is_some()).count(), 18);
        assert_eq!(data.iter().filter(|d| d.hilbert.is_some()).count(), 44);
        for d in &data {
            assert_eq!(d.eigenfunction_h.is_some(), d.density_r.is_some(), "{}", d.triple);
        }
    }

    #[test]
    fn parse() {
        let t = parse_triple("e,e,e").unwrap();
        assert_eq!((t.sigma, t.tau0, t.tau1), (Perm::E, Perm::E, Perm::E));
        let t = parse_triple("123,132,132").unwrap();
        assert_eq!(t.to_string(), "123,132,132");
        assert!(matches!(parse_triple("e,e,132"), Err(Error::UnsupportedTriple(_))));
        assert!(matches!(parse_triple("e,e"), Err(Error::Parse(_))));
        assert!(matches!(parse_triple("e,e,21"), Err(Error::Parse(_))));
    }

    #[test]
    fn triangle_membership() {
        assert!(in_triangle(0.7, 0.2));
        assert!(!in_triangle(0.5, 0.5));
        assert!(!in_triangle(0.2, 0.7));
        assert!(TrianglePoint::new(1.0, 0.5).is_err());
    }

    #[test]
    fn spectral_rows() {
        let d = spectral_data(parse_triple("e,e,e").unwrap());
        assert_eq!(d.banach_weight_g.unwrap().source(), "x");
        assert_eq!(d.eigenfunction_h.unwrap().source(), "1/(x (y+1))");
        assert_eq!(d.density_r.unwrap().source(), "12/(pi^2 x (y+1))");
        let h = d.hilbert.unwrap();
        assert_eq!((h.l.source(), h.j.source(), h.h3.source()), ("(y+1)/x", "1/(x^3)", "y"));

        let d = spectral_data(parse_triple("e,e,12").unwrap());
        assert!(d.banach_weight_g.is_none() && d.eigenfunction_h.is_none() && d.density_r.is_none());
        assert_eq!(d.hilbert.unwrap().l.source(), "(y+1)/x");

        let d = spectral_data(parse_triple("13,13,13").unwrap());
        let (h, r) = (d.eigenfunction_h.unwrap(), d.density_r.unwrap());
        assert!(h.at(0.5, 0.25) < 0.0);
        let c = 12.0 / std::f64::consts::PI.powi(2);
        assert!((r.at(0.5, 0.25) - c / (1.5 * 0.75)).abs() < 1e-14);
    }

    #[test]
    fn grid_is_interior() {
        let g = GridSpec::default();
        let pts = g.points();
        assert_eq!(pts.len(), 91);
        assert!(pts.iter().all(|p| in_triangle(p.x(), p.y())));
        assert!(GridSpec::new(0.0, 10).is_err());
    }
}
