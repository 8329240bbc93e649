//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use tripmaps::gausskuzmin::{cylinder_measure, density, empirical_digits, invariance_check, p_closed_eee, p_integral_e23e};
use tripmaps::hilbert::{laguerre_expansion_partial, kernel_identity_check, ProfileFunction};
use tripmaps::maps::{apply_branch_formula, extract_digit};
use tripmaps::quadrature::{integrate_dm, QuadratureRule};
use tripmaps::specfun::{dilog, laguerre1, laguerre1_explicit};
use tripmaps::spectral::{eigen_residual, monotonicity_check, sum_bound_report, summand_consistency};
use tripmaps::transfer::{branch_point, jacobian_residual};
use tripmaps::triangle::integrate_triangle;
use tripmaps::{parse_triple, sample_points, spectral_data, GridSpec, PermutationTriple, TrianglePoint};

type Check = Result<String, String>;

fn with<F: Fn(&tripmaps::SpectralData) -> bool>(keep: F) -> Vec<PermutationTriple> {
    PermutationTriple::all().filter(|&t| keep(&spectral_data(t))).collect()
}

fn grid() -> GridSpec {
    GridSpec::new(0.05, 10).unwrap()
}

fn branch_round_trip() -> Check {
    let points = sample_points(100, 1e-3, 2024);
    let worst = PermutationTriple::all()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&t| {
            let mut worst = 0.0f64;
            for &p in &points {
                for k in 0..=20 {
                    let b = branch_point(t, k, p).map_err(|e| e.to_string())?;
                    let q = apply_branch_formula(t, k, b).map_err(|e| e.to_string())?;
                    worst = worst.max((q.0 - p.x()).abs()).max((q.1 - p.y()).abs());
                    match extract_digit(t, b) {
                        Ok(d) if d == k => {}
                        other => return Err(format!("{t} k={k} at ({}, {}): {other:?}", p.x(), p.y())),
                    }
                }
            }
            Ok::<f64, String>(worst)
        })
        .try_reduce(|| 0.0, |a, b| Ok(a.max(b)))?;
    let msg = format!("108 triples, k <= 20, 100 points: max error {worst:.2e}, all digits recovered");
    if worst < 1e-10 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn jacobian_oracle() -> Check {
    let points = sample_points(20, 0.01, 99);
    let mut worst = (0.0f64, String::new());
    for t in PermutationTriple::all() {
        for &p in &points {
            for k in 0..=10 {
                let r = jacobian_residual(t, k, p).map_err(|e| e.to_string())?;
                if r > worst.0 {
                    worst = (r, format!("{t} k={k}"));
                }
            }
        }
    }
    let msg = format!("108 triples, k <= 10, 20 points: max relative gap {:.2e} ({})", worst.0, worst.1);
    if worst.0 < 1e-6 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn eigenfunctions() -> Check {
    let triples = with(|d| d.eigenfunction_h.is_some());
    let mut worst = 0.0f64;
    for &t in &triples {
        let r = eigen_residual(t, &grid(), 1e-8).map_err(|e| format!("{t}: {e}"))?;
        worst = worst.max(r.max_rel_residual);
    }
    let msg = format!("{} triples, 10x10 grid: max relative residual {worst:.2e}", triples.len());
    if triples.len() == 18 && worst < 1e-8 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn summands() -> Check {
    let triples = with(|d| d.banach_weight_g.is_some());
    let mut worst = 0.0f64;
    let mut diverged = Vec::new();
    for &t in &triples {
        let r = sum_bound_report(t, &grid(), 1e-10).map_err(|e| format!("{t}: {e}"))?;
        if !r.all_converged() {
            diverged.push(t.to_string());
        }
        for p in grid().points() {
            for k in 0..=10 {
                worst = worst.max(summand_consistency(t, p, k).map_err(|e| format!("{t}: {e}"))?);
            }
        }
    }
    let msg = format!(
        "{} rows, {} diverged; max summand gap {worst:.2e} for k <= 10",
        triples.len(),
        diverged.len()
    );
    if triples.len() == 47 && diverged.is_empty() && worst < 1e-10 {
        Ok(msg)
    } else {
        Err(format!("{msg} {diverged:?}"))
    }
}

fn monotonicity() -> Check {
    let triples = with(|d| d.banach_weight_g.is_some());
    let mut violations = Vec::new();
    for (i, &t) in triples.iter().enumerate() {
        for n in 1..=3 {
            if !monotonicity_check(t, n, 20, 1000 + i as u64).map_err(|e| format!("{t}: {e}"))? {
                violations.push(format!("{t} n={n}"));
            }
        }
    }
    let msg = format!("{} triples, n <= 3, 20 pairs each: {} violations", triples.len(), violations.len());
    if violations.is_empty() {
        Ok(msg)
    } else {
        Err(format!("{msg} {violations:?}"))
    }
}

fn densities() -> Check {
    let triples = with(|d| d.density_r.is_some());
    let results: Vec<Result<(f64, f64), String>> = triples
        .par_iter()
        .map(|&t| {
            let r = density(t).map_err(|e| e.to_string())?;
            let mass = integrate_triangle(|x, y| r.at(x, y), 1e-11).map_err(|e| format!("{t}: {e}"))?;
            let gap = invariance_check(t, 1e-6).map_err(|e| format!("{t}: {e}"))?;
            Ok(((mass - 1.0).abs(), gap))
        })
        .collect();
    let (mut mass, mut inv) = (0.0f64, 0.0f64);
    for r in results {
        let (m, i) = r?;
        mass = mass.max(m);
        inv = inv.max(i);
    }
    let msg = format!("{} densities: max |mass - 1| {mass:.2e}, max invariance gap {inv:.2e} on 20 rectangles", triples.len());
    if triples.len() == 18 && mass < 1e-8 && inv < 1e-6 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn closed_forms() -> Check {
    let eee = parse_triple("e,e,e").unwrap();
    let e23e = parse_triple("e,23,e").unwrap();
    let p = |t, k| cylinder_measure(t, k, 1e-12).map_err(|e| e.to_string());
    let half = (p(e23e, 0)? - 0.5).abs();
    let li = dilog(0.25).unwrap();
    let ln2 = 2f64.ln();
    let zero = (p(eee, 0)? - (1.0 - (6.0 * li + 12.0 * ln2 * ln2) / (PI * PI))).abs();
    let mut rest = 0.0f64;
    for k in 1..=5 {
        rest = rest.max((p(eee, k)? - p_closed_eee(k)).abs());
        rest = rest.max((p(e23e, k)? - p_integral_e23e(k)).abs());
    }
    let msg = format!("p(0) gaps {half:.2e} (e,23,e) and {zero:.2e} (e,e,e); k = 1..5 max gap {rest:.2e}");
    if half < 1e-8 && zero < 1e-6 && rest < 1e-6 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn monte_carlo() -> Check {
    const N: u64 = 1_000_000;
    const SEED: u64 = 7;
    let mut worst = 0.0f64;
    let mut parts = Vec::new();
    for label in ["e,e,e", "e,23,e"] {
        let t = parse_triple(label).unwrap();
        let stats = empirical_digits(t, None, N, SEED).map_err(|e| e.to_string())?;
        for k in 0..=2 {
            let p = cylinder_measure(t, k, 1e-12).map_err(|e| e.to_string())?;
            let sigma = (p * (1.0 - p) / N as f64).sqrt();
            let z = (stats.frequency(k) - p) / sigma;
            worst = worst.max(z.abs());
            parts.push(format!("{label} k={k} z={z:+.2}"));
        }
    }
    let msg = format!("n = 1e6, seed {SEED}: {}", parts.join(", "));
    if worst < 3.0 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn kernel_identity() -> Check {
    const POINTS: [(f64, f64); 5] = [(0.6, 0.3), (0.5, 0.25), (0.8, 0.1), (0.35, 0.2), (0.9, 0.6)];
    let triples = ["e,e,e", "12,12,12", "13,13,13", "23,23,23", "123,132,132", "132,132,123"];
    let rule = QuadratureRule::default();
    let cases: Vec<(&str, u32, (f64, f64))> = triples
        .iter()
        .flat_map(|&t| (0..2).flat_map(move |j| POINTS.iter().map(move |&p| (t, j, p))))
        .collect();
    let gaps = cases
        .par_iter()
        .map(|&(label, j, (x, y))| {
            let t = parse_triple(label).unwrap();
            let phi = ProfileFunction::eta(j);
            let p = TrianglePoint::new(x, y).unwrap();
            let c = kernel_identity_check(t, &phi, p).map_err(|e| format!("{label}: {e}"))?;
            let series = laguerre_expansion_partial(t, &phi, p, 50, &rule).map_err(|e| format!("{label}: {e}"))?;
            Ok::<_, String>((c.rel_gap(), (series - c.lhs).abs() / c.lhs.abs()))
        })
        .try_reduce(|| (0.0, 0.0), |a, b| Ok((a.0.max(b.0), a.1.max(b.1))))?;
    let msg = format!(
        "6 triples, eta0 and eta1, 5 points: max identity gap {:.2e}, max K=50 series gap {:.2e}",
        gaps.0, gaps.1
    );
    if gaps.0 < 1e-4 && gaps.1 < 1e-3 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn special_functions() -> Check {
    let mut refl = 0.0f64;
    for i in 1..100 {
        let z = i as f64 / 100.0;
        let lhs = dilog(z).unwrap() + dilog(1.0 - z).unwrap();
        refl = refl.max((lhs - (PI * PI / 6.0 - z.ln() * (1.0 - z).ln())).abs());
    }
    let ln2 = 2f64.ln();
    refl = refl.max((dilog(0.5).unwrap() - (PI * PI / 12.0 - ln2 * ln2 / 2.0)).abs());
    let dm = integrate_dm(|_| 1.0, &QuadratureRule::with_tol(1e-13)).map_err(|e| e.to_string())?;
    let dm_gap = (dm - PI * PI / 6.0).abs();
    let mut lag = 0.0f64;
    for k in 0..=10 {
        for t in [0.0, 0.1, 0.5, 1.0, 2.5, 5.0, 10.0, 20.0] {
            let e = laguerre1_explicit(k, t);
            lag = lag.max((laguerre1(k, t) - e).abs() / e.abs().max(1.0));
        }
    }
    let msg = format!("dilog reflection {refl:.2e}, |int dm - pi^2/6| {dm_gap:.2e}, Laguerre k <= 10 gap {lag:.2e}");
    if refl < 1e-13 && dm_gap < 1e-10 && lag < 1e-10 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, Duration, fn() -> Check); 10] = [
        ("branch round-trip", Duration::from_secs(60), branch_round_trip),
        ("Jacobian oracle", Duration::from_secs(60), jacobian_oracle),
        ("eigenfunctions", Duration::from_secs(120), eigenfunctions),
        ("summands", Duration::from_secs(120), summands),
        ("monotonicity", Duration::MAX, monotonicity),
        ("density normalization and invariance", Duration::from_secs(300), densities),
        ("closed forms", Duration::MAX, closed_forms),
        ("Monte Carlo", Duration::from_secs(60), monte_carlo),
        ("kernel identity", Duration::from_secs(600), kernel_identity),
        ("special functions", Duration::MAX, special_functions),
    ];
    let mut failed = 0;
    for (i, (name, budget, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let (status, detail) = match result {
            Ok(m) if took <= budget => ("PASS", m),
            Ok(m) => ("FAIL", format!("{m}; over the {}s budget", budget.as_secs())),
            Err(m) => ("FAIL", m),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("criterion {:>2} {status} {name} [{:.1}s]: {detail}", i + 1, took.as_secs_f64());
    }
    println!("acceptance: {} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
