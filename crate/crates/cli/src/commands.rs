use anyhow::{anyhow, Result};
use tripmaps::gausskuzmin::{cylinder_measure, empirical_digits, p_closed_eee, p_integral_e23e};
use tripmaps::hilbert::{laguerre_expansion_partial, kernel_identity_check, ProfileFunction};
use tripmaps::maps::{apply_branch_formula, extract_digit, step};
use tripmaps::quadrature::QuadratureRule;
use tripmaps::spectral::{eigen_residual, sum_bound_report};
use tripmaps::transfer::branch_point;
use tripmaps::{parse_triple, sample_points, spectral_data, GridSpec, PermutationTriple, TrianglePoint};

use crate::config::RunConfig;
use crate::report::{Cell, Table};

/// Whether every asserted tolerance was met.
pub type Outcome = bool;

/// Triples named by `--triple`: one triple, `all` (every triple accepted by
/// `keep`), or `default` when the flag is absent.
fn select(
    cfg: &RunConfig,
    default: &str,
    keep: impl Fn(PermutationTriple) -> bool,
    missing: impl Fn(PermutationTriple) -> tripmaps::Error,
) -> Result<Vec<PermutationTriple>> {
    let spec = cfg.triple.as_deref().unwrap_or(default);
    if matches!(spec, "all" | "all-tabulated") {
        return Ok(PermutationTriple::all().filter(|&t| keep(t)).collect());
    }
    let t = parse_triple(spec)?;
    if !keep(t) {
        return Err(missing(t).into());
    }
    Ok(vec![t])
}

pub fn verify_branches(cfg: &RunConfig) -> Result<Outcome> {
    let triples = select(cfg, "all", |_| true, |t| tripmaps::Error::UnsupportedTriple(t.to_string()))?;
    let kmax = cfg.kmax.unwrap_or(20);
    let tol = cfg.tol(1e-10);
    let points = sample_points(cfg.n_steps.unwrap_or(100) as usize, cfg.margin.unwrap_or(1e-3), cfg.seed);
    let mut table = Table::new(&["triple", "max_roundtrip_error", "digit_failures", "points", "kmax", "pass"]);
    let mut ok = true;
    for t in triples {
        let mut worst = 0.0f64;
        let mut failures = 0u64;
        let mut first_failure = None;
        for &p in &points {
            for k in 0..=kmax {
                let b = branch_point(t, k, p)?;
                let q = apply_branch_formula(t, k, b)?;
                let err = (q.0 - p.x()).abs().max((q.1 - p.y()).abs());
                worst = worst.max(err);
                let digit_ok = extract_digit(t, b).map(|d| d == k).unwrap_or(false);
                if !digit_ok {
                    failures += 1;
                }
                if (!digit_ok || !(err < tol)) && first_failure.is_none() {
                    first_failure = Some((k, p));
                }
            }
        }
        let pass = first_failure.is_none();
        if let Some((k, p)) = first_failure {
            eprintln!("verify-branches: {t} fails at k={k}, p=({}, {})", p.x(), p.y());
        }
        ok &= pass;
        table.push(vec![
            t.to_string().into(),
            worst.into(),
            failures.into(),
            points.len().into(),
            kmax.into(),
            pass.into(),
        ]);
    }
    table.write(cfg)?;
    Ok(ok)
}

fn grid(cfg: &RunConfig) -> Result<GridSpec> {
    Ok(GridSpec::new(cfg.margin.unwrap_or(0.05), cfg.n_steps.map_or(10, |n| n as usize))?)
}

pub fn eigen(cfg: &RunConfig) -> Result<Outcome> {
    let triples = select(
        cfg,
        "all",
        |t| spectral_data(t).eigenfunction_h.is_some(),
        |t| tripmaps::Error::NoEigenfunction(t.to_string()),
    )?;
    let tol = cfg.tol(1e-8);
    let grid = grid(cfg)?;
    let mut table = Table::new(&["triple", "max_rel_residual", "truncation_k", "points", "pass"]);
    let mut ok = true;
    for t in triples {
        let r = eigen_residual(t, &grid, tol)?;
        let pass = r.max_rel_residual < tol;
        ok &= pass;
        table.push(vec![
            t.to_string().into(),
            r.max_rel_residual.into(),
            r.truncation_k.into(),
            r.grid.len().into(),
            pass.into(),
        ]);
    }
    table.write(cfg)?;
    Ok(ok)
}

pub fn sum_bounds(cfg: &RunConfig) -> Result<Outcome> {
    let triples = select(
        cfg,
        "all",
        |t| spectral_data(t).banach_weight_g.is_some(),
        |t| tripmaps::Error::NoBanachRow(t.to_string()),
    )?;
    let eps = cfg.tol(1e-10);
    let grid = grid(cfg)?;
    let mut table = Table::new(&["triple", "max_sum", "converged_points", "points", "pass"]);
    let mut ok = true;
    for t in triples {
        let r = sum_bound_report(t, &grid, eps)?;
        let converged = r.converged.iter().filter(|&&c| c).count();
        let pass = r.all_converged();
        ok &= pass;
        table.push(vec![
            t.to_string().into(),
            r.max_sum.into(),
            converged.into(),
            r.grid.len().into(),
            pass.into(),
        ]);
    }
    table.write(cfg)?;
    Ok(ok)
}

pub fn gk(cfg: &RunConfig, simulate: bool) -> Result<Outcome> {
    let triples = select(
        cfg,
        "e,e,e",
        |t| spectral_data(t).density_r.is_some(),
        |t| tripmaps::Error::NoDensity(t.to_string()),
    )?;
    let [t] = triples[..] else {
        return Err(anyhow!("gk takes a single triple"));
    };
    let kmax = cfg.kmax.unwrap_or(20);
    let quad_tol = cfg.tolerance("quadrature", 1e-10);
    let closed: Option<fn(u64) -> f64> = match t.to_string().as_str() {
        "e,e,e" => Some(p_closed_eee),
        "e,23,e" => Some(p_integral_e23e),
        _ => None,
    };
    if closed.is_none() {
        eprintln!("gk: {t}: no closed form");
    }
    let stats = if simulate {
        Some(empirical_digits(t, None, cfg.n_steps.unwrap_or(1_000_000), cfg.seed)?)
    } else {
        None
    };
    let mut table = Table::new(&["k", "p_theoretical", "p_closed", "p_empirical", "stderr"]);
    let mut ok = true;
    for k in 0..=kmax {
        let p = cylinder_measure(t, k, quad_tol)?;
        ok &= (0.0..=1.0).contains(&p);
        let c = closed.map(|f| f(k));
        if let Some(c) = c {
            ok &= (c - p).abs() < cfg.tol(1e-6);
        }
        let (emp, err) = match &stats {
            Some(s) => (Some(s.frequency(k)), Some(s.stderr(k))),
            None => (None, None),
        };
        table.push(vec![k.into(), p.into(), c.into(), emp.into(), err.into()]);
    }
    if let Some(s) = &stats {
        if s.restarts > 0 {
            eprintln!("gk: {} orbit restarts", s.restarts);
        }
    }
    table.write(cfg)?;
    Ok(ok)
}

/// Interior points at which the kernel identity is checked.
pub const HILBERT_POINTS: [(f64, f64); 5] = [(0.6, 0.3), (0.5, 0.25), (0.8, 0.1), (0.35, 0.2), (0.9, 0.6)];

fn profile(label: &str) -> Result<ProfileFunction> {
    match label.strip_prefix("eta").and_then(|k| k.parse::<u32>().ok()) {
        Some(k) if k <= 5 => Ok(ProfileFunction::eta(k)),
        _ => Err(anyhow!("unknown profile {label:?}; expected eta0 to eta5")),
    }
}

pub fn hilbert(cfg: &RunConfig, phi: &str) -> Result<Outcome> {
    let triples = select(
        cfg,
        "123,132,132",
        |t| spectral_data(t).hilbert.is_some(),
        |t| tripmaps::Error::NoHilbertRow(t.to_string()),
    )?;
    let phi = profile(phi)?;
    let tol = cfg.tol(1e-4);
    let series_tol = cfg.tolerance("laguerre", 1e-3);
    let terms = cfg.kmax.unwrap_or(50) as usize;
    let rule = QuadratureRule::default();
    let mut table = Table::new(&["triple", "phi", "x", "y", "lhs", "rhs", "rel_gap", "laguerre", "laguerre_gap", "pass"]);
    let mut ok = true;
    for t in triples {
        for &(x, y) in &HILBERT_POINTS {
            let p = TrianglePoint::new(x, y)?;
            let c = kernel_identity_check(t, &phi, p)?;
            let series = laguerre_expansion_partial(t, &phi, p, terms, &rule)?;
            let series_gap = (series - c.lhs).abs() / c.lhs.abs().max(f64::MIN_POSITIVE);
            let pass = c.rel_gap() < tol && series_gap < series_tol;
            ok &= pass;
            table.push(vec![
                t.to_string().into(),
                phi.description.as_str().into(),
                x.into(),
                y.into(),
                c.lhs.into(),
                c.rhs.into(),
                c.rel_gap().into(),
                series.into(),
                series_gap.into(),
                pass.into(),
            ]);
        }
    }
    table.write(cfg)?;
    Ok(ok)
}

pub fn orbit(cfg: &RunConfig, x: f64, y: f64) -> Result<Outcome> {
    let t = parse_triple(cfg.triple.as_deref().unwrap_or("e,e,e"))?;
    let mut p = TrianglePoint::new(x, y)?;
    let n = cfg.n_steps.unwrap_or(20);
    let mut table = Table::new(&["index", "digit", "x", "y"]);
    table.push(vec![0u64.into(), Cell::Empty, p.x().into(), p.y().into()]);
    for i in 1..=n {
        match step(t, p) {
            Ok(s) => {
                p = s.image;
                table.push(vec![i.into(), s.digit.into(), p.x().into(), p.y().into()]);
            }
            Err(e) => {
                eprintln!("orbit: stopped after {} steps: {e}", i - 1);
                break;
            }
        }
    }
    table.write(cfg)?;
    Ok(true)
}

pub fn list_triples(cfg: &RunConfig) -> Result<Outcome> {
    let mut table = Table::new(&["triple", "banach", "eigen", "density", "hilbert", "ergodic_flag"]);
    for t in PermutationTriple::all() {
        let d = spectral_data(t);
        table.push(vec![
            t.to_string().into(),
            d.banach_weight_g.is_some().into(),
            d.eigenfunction_h.is_some().into(),
            d.density_r.is_some().into(),
            d.hilbert.is_some().into(),
            t.ergodic_flagged().into(),
        ]);
    }
    table.write(cfg)?;
    Ok(true)
}
