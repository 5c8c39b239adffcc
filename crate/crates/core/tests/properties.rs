use goodsg::ideal::GoodIdeal;
use goodsg::io::{emit_semigroup, parse_fixture, Fixture};
use goodsg::lattice::box_points;
use goodsg::levels::invariants::Setting;
use goodsg::levels::{apery_levels, domination_partition, partition};
use goodsg::products::{self, ProductContext};
use goodsg::{wellbehaved, Frame, GoodSemigroup, IndexSet, Membership, NumericalSemigroup, Point};
use proptest::prelude::*;

fn point(dim: usize, hi: i64) -> impl Strategy<Value = Point> {
    prop::collection::vec(0..=hi, dim).prop_map(Point::new)
}

fn numerical() -> impl Strategy<Value = NumericalSemigroup> {
    prop::collection::vec(2i64..9, 1..4).prop_filter_map("gcd > 1", |g| NumericalSemigroup::new(&g).ok())
}

/// A numerical semigroup and a positive element of it.
fn numerical_with_shift() -> impl Strategy<Value = (NumericalSemigroup, i64)> {
    numerical().prop_flat_map(|n| {
        let elems: Vec<i64> = n.elements_up_to(n.conductor() + 6).into_iter().filter(|&x| x > 0).take(6).collect();
        (Just(n), prop::sample::select(elems))
    })
}

fn plane_product() -> impl Strategy<Value = (GoodSemigroup, Point)> {
    (numerical_with_shift(), numerical_with_shift()).prop_map(|((a, u), (b, v))| {
        (GoodSemigroup::direct_product(&a.as_good(), &b.as_good()).unwrap(), Point::from([u, v]))
    })
}

fn index_pair(dim: usize) -> impl Strategy<Value = (IndexSet, IndexSet)> {
    let full = (1u32 << dim) - 1;
    (0..=full, 0..=full).prop_map(move |(a, b)| (IndexSet::from_bits(dim, a & b), IndexSet::from_bits(dim, b)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn meet_and_join_laws(a in point(3, 20), b in point(3, 20), c in point(3, 20)) {
        prop_assert_eq!(a.wedge(&b), b.wedge(&a));
        prop_assert_eq!(a.wedge(&b).wedge(&c), a.wedge(&b.wedge(&c)));
        prop_assert_eq!(a.wedge(&a), a.clone());
        prop_assert_eq!(a.wedge(&a.join(&b)), a.clone());
        prop_assert_eq!(a.leq(&b), a.wedge(&b) == a);
        prop_assert!(a.wedge(&b).leq(&a) && a.leq(&a.join(&b)));
        prop_assert_eq!(a.ll(&b), a.dim() == b.dim() && (0..3).all(|i| a[i] < b[i]));
    }

    #[test]
    fn delta_tilde_shrinks_as_f_grows(a in point(3, 8), b in point(3, 8), (f, g) in index_pair(3)) {
        let frame = Frame::new(Point::splat(3, 6));
        if frame.in_delta_tilde(&b, &a, g) {
            prop_assert!(frame.in_delta_tilde(&b, &a, f));
        }
        if !f.is_full() && frame.in_delta(&b, &a, f) {
            prop_assert!(frame.in_delta_tilde(&b, &a, f));
        }
    }

    #[test]
    fn semigroup_delta_queries_match_enumeration((s, _) in plane_product(), x in point(2, 14), (f, g) in index_pair(2)) {
        if s.delta_tilde_nonempty(&x, g) {
            prop_assert!(s.delta_tilde_nonempty(&x, f));
        }
        let hi = &s.conductor().join(&x) + &Point::splat(2, 2);
        let frame = Frame::unbounded(2);
        let tilde = box_points(&Point::zero(2), &hi).into_iter().any(|b| s.contains(&b) && frame.in_delta_tilde(&b, &x, f));
        prop_assert_eq!(s.delta_tilde_nonempty(&x, f), tilde);
        if !f.is_full() {
            let strict = box_points(&Point::zero(2), &hi).into_iter().any(|b| s.contains(&b) && frame.in_delta(&b, &x, f));
            prop_assert_eq!(s.delta_nonempty(&x, f), strict);
        }
    }

    #[test]
    fn explicit_form_round_trips((s, _) in plane_product()) {
        let text = emit_semigroup(&s);
        match parse_fixture(&text, "generated").unwrap() {
            Fixture::Explicit(t) => prop_assert_eq!(t, s),
            other => prop_assert!(false, "parsed as {:?}", other),
        }
    }

    #[test]
    fn numerical_round_trip((n, _) in numerical_with_shift()) {
        let s = n.as_good();
        let Fixture::Explicit(t) = parse_fixture(&emit_semigroup(&s), "generated").unwrap() else {
            panic!("explicit form expected");
        };
        prop_assert_eq!(t.to_numerical().unwrap(), n);
    }

    #[test]
    fn validation_is_box_stable((s, _) in plane_product()) {
        let narrow = s.validate(1);
        let wide = s.validate(3);
        prop_assert!(narrow.is_good());
        prop_assert_eq!(narrow.is_good(), wide.is_good());
    }

    #[test]
    fn levels_are_stable_under_reframing((s, w) in plane_product()) {
        let p = apery_levels(&s, &w).unwrap();
        let e = GoodIdeal::principal(&s, &w).unwrap();
        let cap = p.frame.cap();
        let wider = e.complement_in(Frame::new(cap + &Point::splat(2, 3)));
        let q = partition(&wider).unwrap();
        prop_assert_eq!(q.restrict(cap), p.clone());
        prop_assert_eq!(p.n() as i64, w[0] + w[1]);
        for (name, v) in Setting::new(&s, &e, &p).all() {
            prop_assert!(v.is_empty(), "{}: {:?}", name, v.first());
        }
        for (name, v) in wellbehaved::invariants::all(&s, &e, &p) {
            prop_assert!(v.is_empty(), "{}: {:?}", name, v.first());
        }
        let _ = domination_partition(&e.complement());
    }

    #[test]
    fn product_levels_add((a, u) in numerical_with_shift(), (b, v) in numerical_with_shift()) {
        let ctx = ProductContext::principal(&a.as_good(), &Point::from([u]), &b.as_good(), &Point::from([v])).unwrap();
        for (name, viol) in products::invariants::all(&ctx) {
            prop_assert!(viol.is_empty(), "{}: {:?}", name, viol.first());
        }
    }
}
