use denseregion::frontier::{inner_frontier_by, outer_frontier_by};
use denseregion::geometry::{build_orthogonal, progress_metric, progress_step};
use denseregion::radixsort::sort_by_key;
use denseregion::{density, dominates, in_range, validate_bounds, BinarySequence, OrthoPath};
use proptest::prelude::*;

fn bits(max: usize) -> impl Strategy<Value = BinarySequence> {
    proptest::collection::vec(0u8..=1, 3..=max).prop_map(|d| BinarySequence::new(d).unwrap())
}

fn bounds_for(n: usize) -> impl Strategy<Value = (i64, i64, i64, i64)> {
    let frac = move || (2..=n as i64).prop_flat_map(|d| (1..d, Just(d)));
    (frac(), frac())
        .prop_filter("distinct", |(p, q)| p.0 * q.1 != q.0 * p.1)
        .prop_map(|(p, q)| {
            let (lo, hi) = if p.0 * q.1 < q.0 * p.1 {
                (p, q)
            } else {
                (q, p)
            };
            (lo.0, lo.1, hi.0, hi.1)
        })
}

fn instance(max: usize) -> impl Strategy<Value = (BinarySequence, (i64, i64, i64, i64))> {
    bits(max).prop_flat_map(|s| {
        let n = s.len();
        (Just(s), bounds_for(n))
    })
}

proptest! {
    #[test]
    fn density_iff_domination((seq, (c1, d1, c2, d2)) in instance(12)) {
        let b = validate_bounds(c1, d1, c2, d2, seq.len()).unwrap();
        let q = build_orthogonal(&seq, &b);
        for a in 1..=seq.len() {
            for e in a..=seq.len() {
                let d = density(&seq, a, e).unwrap();
                prop_assert_eq!(in_range(d, &b), dominates(&q[e], &q[a - 1]));
            }
        }
    }

    #[test]
    fn progress_metric_steps_exactly((seq, (c1, d1, c2, d2)) in instance(300)) {
        let b = validate_bounds(c1, d1, c2, d2, seq.len()).unwrap();
        let q = build_orthogonal(&seq, &b);
        let step = progress_step(&b);
        prop_assert!(step > 0);
        for w in q.windows(2) {
            prop_assert_eq!(progress_metric(&w[1], &b) - progress_metric(&w[0], &b), step);
        }
    }

    #[test]
    fn frontiers_are_strict_staircases((seq, (c1, d1, c2, d2)) in instance(300)) {
        let b = validate_bounds(c1, d1, c2, d2, seq.len()).unwrap();
        let path = OrthoPath::new(&seq, b);
        let mut order: Vec<usize> = (0..=seq.len()).collect();
        order.sort_by_key(|&i| path.x(i));
        let coords = |i: usize| (path.x(i), path.y(i));
        for f in [inner_frontier_by(&order, coords), outer_frontier_by(&order, coords)] {
            for w in f.windows(2) {
                prop_assert!(path.x(w[0]) < path.x(w[1]));
                prop_assert!(path.y(w[0]) > path.y(w[1]));
            }
        }
    }

    #[test]
    fn radix_sort_is_stable(keys in proptest::collection::vec(-400i64..=400, 1..400)) {
        let n = 20;
        let items: Vec<(usize, i64)> = keys.iter().copied().enumerate().collect();
        let got = sort_by_key(items.iter().copied(), items.len(), n, |(_, k)| k).unwrap();
        let mut want = items.clone();
        want.sort_by_key(|&(_, k)| k);
        prop_assert_eq!(got, want);
    }

    #[test]
    fn coordinates_within_square((seq, (c1, d1, c2, d2)) in instance(300)) {
        let n = seq.len() as i64;
        let b = validate_bounds(c1, d1, c2, d2, seq.len()).unwrap();
        for p in build_orthogonal(&seq, &b) {
            prop_assert!(p.x.abs() <= n * n && p.y.abs() <= n * n);
        }
    }
}
