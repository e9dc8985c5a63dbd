use proptest::prelude::*;
use trace_products_core::field::default_tower;
use trace_products_core::linear_sets::{club, gamma, LinearMap, LinearizedPoly};
use trace_products_core::trace_sets::{decide, normalize, oracle, TraceFiber};
use trace_products_core::TowerCtx;

const FIELDS: &[(u64, u32, u32)] = &[
    (2, 1, 3),
    (2, 1, 4),
    (2, 1, 5),
    (2, 2, 2),
    (2, 2, 3),
    (3, 1, 2),
    (3, 1, 3),
    (3, 1, 4),
    (3, 1, 5),
    (5, 1, 2),
    (5, 1, 3),
    (7, 1, 2),
    (3, 2, 2),
];

fn tower_strategy() -> impl Strategy<Value = TowerCtx> {
    prop::sample::select(FIELDS).prop_map(|(p, h, n)| default_tower(p, h, n).unwrap())
}

/// A tower with `k` elements and `m` base-field scalars drawn from it.
fn with_elements(k: usize, m: usize) -> impl Strategy<Value = (TowerCtx, Vec<u32>, Vec<u32>)> {
    tower_strategy().prop_flat_map(move |t| {
        let elems = prop::collection::vec(0..t.size(), k);
        let scalars = prop::collection::vec(0..t.q(), m);
        (Just(t), elems, scalars)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn trace_is_linear((t, e, s) in with_elements(2, 1)) {
        let (x, y, c) = (e[0], e[1], s[0]);
        let f = t.base();
        prop_assert_eq!(t.trace(t.add(t.scalar_mul(c, x), y)), f.add(f.mul(c, t.trace(x)), t.trace(y)));
        prop_assert_eq!(t.trace(t.frobenius(x, 1)), t.trace(x));
    }

    #[test]
    fn absolute_trace_factors_through_base((t, e, _) in with_elements(1, 0)) {
        let x = e[0];
        let p = t.p() as u64;
        let total = t.base().h() * t.n();
        let mut acc = 0;
        let mut y = x;
        for _ in 0..total {
            acc = t.add(acc, y);
            y = t.pow(y, p);
        }
        prop_assert_eq!(acc, t.base().abs_trace(t.trace(x)));
    }

    #[test]
    fn trace_form_is_nondegenerate((t, e, _) in with_elements(1, 0)) {
        let x = e[0];
        prop_assume!(x != 0);
        prop_assert!(t.elements().any(|y| t.trace(t.mul(x, y)) != 0));
    }

    #[test]
    fn fibers_have_the_right_size((t, _, s) in with_elements(0, 1)) {
        let a = s[0];
        let fiber: Vec<u32> = TraceFiber::new(&t, a).collect();
        prop_assert_eq!(fiber.len() as u32, t.size() / t.q());
        prop_assert!(fiber.iter().all(|&x| t.trace(x) == a));
    }

    #[test]
    fn certificates_revalidate((t, e, s) in with_elements(1, 2)) {
        let (beta, a, b) = (e[0], s[0], s[1]);
        let v = decide(&t, a, b, beta).unwrap();
        prop_assert_eq!(v.member, oracle(&t, a, b, beta).member);
        if let Some(c) = v.certificate {
            prop_assert!(c.validates(&t));
            prop_assert_eq!(t.mul(c.x(), c.y()), beta);
            prop_assert_eq!((t.trace(c.x()), t.trace(c.y())), (a, b));
        }
    }

    #[test]
    fn normalization_preserves_membership((t, e, s) in with_elements(1, 2)) {
        let (beta, a, b) = (e[0], s[0], s[1]);
        let (pair, scaled) = normalize(&t, a, b, beta);
        let (ca, cb) = pair.case.traces();
        prop_assert_eq!(oracle(&t, a, b, beta).member, oracle(&t, ca, cb, scaled).member);
    }

    #[test]
    fn linearized_polynomials_are_linear((t, e, s) in with_elements(4, 1)) {
        let f = LinearizedPoly::new(&e[..2]);
        let (x, y, c) = (e[2], e[3], s[0]);
        let lhs = f.eval(&t, t.add(t.scalar_mul(c, x), y));
        prop_assert_eq!(lhs, t.add(t.scalar_mul(c, f.eval(&t, x)), f.eval(&t, y)));
    }

    #[test]
    fn weights_partition_the_space((t, e, _) in with_elements(2, 0)) {
        let g = gamma(&t, &LinearMap::Poly(LinearizedPoly::new(&e)));
        prop_assert!(g.weight_partition_holds(t.q()));
        prop_assert!(g.weights_match_fibers(t.q()));
    }

    #[test]
    fn clubs_have_one_head((t, e, _) in with_elements(1, 0)) {
        prop_assume!(e[0] != 0 && t.n() > 2);
        let c = club(&t, e[0]).unwrap();
        prop_assert_eq!(c.len() as u32, t.size() / t.q() + 1);
        prop_assert_eq!(c.weighted_points().filter(|&(_, w)| w == t.n() - 1).count(), 1);
        prop_assert!(c.weight_partition_holds(t.q()));
    }
}
