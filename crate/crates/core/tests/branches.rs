use proptest::prelude::*;
use tripmaps::maps::{apply_branch_formula, extract_digit, step};
use tripmaps::transfer::{branch_point, jacobian_residual, weight};
use tripmaps::{PermutationTriple, TrianglePoint};

fn interior() -> impl Strategy<Value = TrianglePoint> {
    (0.0f64..1.0, 0.0f64..1.0).prop_filter_map("degenerate", |(a, b)| {
        let x = 0.001 + 0.998 * a.max(b);
        let y = x * (0.001 + 0.998 * a.min(b) / a.max(b).max(1e-9));
        TrianglePoint::new(x, y).ok()
    })
}

fn triple() -> impl Strategy<Value = PermutationTriple> {
    (0usize..108).prop_map(|i| PermutationTriple::all().nth(i).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn forward_inverts_branch(t in triple(), k in 0u64..=40, p in interior()) {
        let b = branch_point(t, k, p).unwrap();
        let q = apply_branch_formula(t, k, b).unwrap();
        prop_assert!((q.0 - p.x()).abs() < 1e-10 && (q.1 - p.y()).abs() < 1e-10, "{t} k={k} {p:?} -> {q:?}");
        prop_assert_eq!(extract_digit(t, b).unwrap(), k);
    }

    #[test]
    fn weights_positive(t in triple(), k in 0u64..=1000, p in interior()) {
        prop_assert!(weight(t, k, p).unwrap() > 0.0);
    }

    #[test]
    fn step_lands_inside(t in triple(), p in interior()) {
        if let Ok(s) = step(t, p) {
            prop_assert!(s.image.y() > 0.0 && s.image.y() < s.image.x() && s.image.x() < 1.0);
        }
    }
}

#[test]
fn branch_points_are_distinct() {
    let p = TrianglePoint::new(0.61, 0.23).unwrap();
    for t in PermutationTriple::all() {
        let pts: Vec<TrianglePoint> = (0..=20).map(|k| branch_point(t, k, p).unwrap()).collect();
        for i in 0..pts.len() {
            for j in 0..i {
                let d = (pts[i].x() - pts[j].x()).abs() + (pts[i].y() - pts[j].y()).abs();
                assert!(d > 1e-9, "{t}: branches {j} and {i} coincide");
            }
            assert_eq!(extract_digit(t, pts[i]).unwrap(), i as u64, "{t}");
        }
    }
}

#[test]
fn jacobians_match_tabulated_weights() {
    let pts = [(0.4, 0.1), (0.55, 0.3), (0.9, 0.45), (0.3, 0.29), (0.95, 0.02)];
    for t in PermutationTriple::all() {
        for &(x, y) in &pts {
            for k in 0..=10 {
                let r = jacobian_residual(t, k, TrianglePoint::new(x, y).unwrap()).unwrap();
                assert!(r < 1e-6, "{t} k={k} ({x},{y}): {r:e}");
            }
        }
    }
}

#[test]
fn deep_digits_near_the_cusp() {
    // Digits up to the configured limit are found by the closed-form solve.
    for t in PermutationTriple::all() {
        let p = TrianglePoint::new(0.37, 0.11).unwrap();
        for k in [1000u64, 54321, 999_999] {
            let b = branch_point(t, k, p).unwrap();
            let d = extract_digit(t, b);
            assert_eq!(d, Ok(k), "{t} {b:?}");
        }
    }
}
