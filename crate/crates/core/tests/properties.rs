use proptest::prelude::*;
use tripmaps::gausskuzmin::{cylinder_measure, digit_distribution};
use tripmaps::hilbert::{hilbert_row, kernel_arg, transform_arg};
use tripmaps::spectral::{sum_bound_report, summand_sum};
use tripmaps::transfer::branch_point;
use tripmaps::{parse_triple, spectral_data, GridSpec, PermutationTriple, TrianglePoint};

fn interior() -> impl Strategy<Value = TrianglePoint> {
    (0.01f64..0.99, 0.01f64..0.99).prop_filter_map("degenerate", |(a, b)| TrianglePoint::new(a, a * b).ok())
}

fn hilbert_triples() -> Vec<PermutationTriple> {
    PermutationTriple::all().filter(|&t| spectral_data(t).hilbert.is_some()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn h3_of_branch_is_reciprocal_shift(i in 0usize..44, k in 0u64..=30, p in interior()) {
        let t = hilbert_triples()[i];
        let row = hilbert_row(t).unwrap();
        let b = branch_point(t, k, p).unwrap();
        let l = row.l.at(p.x(), p.y());
        let v = row.h3.at(b.x(), b.y()) * (k as f64 + l);
        prop_assert!((v - 1.0).abs() < 1e-9, "{t} k={k}: {v}");
    }

    #[test]
    fn shift_and_scale_are_admissible(i in 0usize..44, p in interior()) {
        let t = hilbert_triples()[i];
        let row = hilbert_row(t).unwrap();
        prop_assert!(row.l.at(p.x(), p.y()) > 1.0);
        prop_assert!(row.j.at(p.x(), p.y()) != 0.0);
    }

    #[test]
    fn representative_kernel_argument_is_constant_in_k(p in interior()) {
        for label in ["e,e,e", "12,12,12", "13,13,13", "23,23,23", "123,132,132", "132,132,123"] {
            let t = parse_triple(label).unwrap();
            let a0 = kernel_arg(t, p).unwrap();
            prop_assert!(a0.is_finite());
            let b0 = branch_point(t, 0, p).unwrap();
            let first = transform_arg(t.sigma, b0.x(), b0.y());
            prop_assert!((first - a0).abs() < 1e-12 * a0.max(1.0));
            for k in 1..6 {
                let b = branch_point(t, k, p).unwrap();
                let ak = transform_arg(t.sigma, b.x(), b.y());
                prop_assert!((ak - first).abs() < 1e-9 * first.abs().max(1.0), "{label} k={k}: {ak} vs {first}");
            }
        }
    }

    #[test]
    fn summand_sums_positive(i in 0usize..47, p in interior()) {
        let t: Vec<_> = PermutationTriple::all().filter(|&t| spectral_data(t).banach_weight_g.is_some()).collect();
        let s = summand_sum(t[i], p, 1e-9).unwrap();
        prop_assert!(s > 0.0 && s.is_finite());
    }
}

#[test]
fn sum_bounds_stable_under_refinement() {
    for t in PermutationTriple::all().filter(|&t| spectral_data(t).banach_weight_g.is_some()) {
        let coarse = sum_bound_report(t, &GridSpec::new(0.05, 10).unwrap(), 1e-10).unwrap();
        let fine = sum_bound_report(t, &GridSpec::new(0.05, 20).unwrap(), 1e-10).unwrap();
        let change = (fine.max_sum - coarse.max_sum).abs() / coarse.max_sum;
        assert!(change < 0.05, "{t}: {} -> {}", coarse.max_sum, fine.max_sum);
    }
}

#[test]
fn digit_mass_up_to_500() {
    // mpmath sum of the (e,e,e) closed form over k <= 500; the tail decays
    // like log(k)/k, so the remaining mass is about 1.5%.
    const EEE_CLASS: f64 = 0.98492099021508363;
    let eee = digit_distribution(parse_triple("e,e,e").unwrap(), 500, 1e-10).unwrap();
    for t in PermutationTriple::all().filter(|&t| spectral_data(t).density_r.is_some()) {
        let d = digit_distribution(t, 500, 1e-10).unwrap();
        let total: f64 = d.probs.iter().sum();
        assert!(total >= 0.98 && total <= 1.0 + 1e-8, "{t}: {total}");
        if d.probs[0] < 0.3 {
            assert!((total - EEE_CLASS).abs() < 1e-5, "{t}: {total}");
            for (a, b) in d.probs.iter().zip(&eee.probs) {
                assert!((a - b).abs() < 1e-9, "{t}");
            }
        } else {
            assert!(total >= 0.99, "{t}: {total}");
        }
    }
}

#[test]
fn digit_probabilities_decrease() {
    for t in PermutationTriple::all().filter(|&t| spectral_data(t).density_r.is_some()) {
        let p: Vec<f64> = (2..=30).map(|k| cylinder_measure(t, k, 1e-12).unwrap()).collect();
        for w in p.windows(2) {
            assert!(w[1] < w[0], "{t}: {w:?}");
        }
    }
}
