mod support;

use basis4::completion::{complete_context, orthocomplement, verify_context, CompletionPolicy};
use basis4::decompose::{decomposables_in_plane, factorize, is_decomposable, DecomposableLocus};
use basis4::hypergraph::{analyze_contexts, complete_labeling, parse_hypergraph, Hypergraph};
use basis4::linalg::{
    bilinear, bilinear_via_matrix, cross, det2, inner2, inner4, proportional, tensor2, tilde,
};
use basis4::planes::{canonical_basis, same_subspace};
use basis4::{Field, FieldKind, GaussianRational as G, Plane, PlaneType, Rational as Q, Vec2, Vec4};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use support::{Sample, SHAPES};

fn small() -> impl Strategy<Value = (i64, i64)> {
    (-10i64..=10, 1i64..=10)
}

fn q() -> impl Strategy<Value = Q> {
    small().prop_map(|(n, d)| Q::new(n, d))
}

fn g() -> impl Strategy<Value = G> {
    (q(), q()).prop_map(|(re, im)| G::new(re, im))
}

fn v2() -> impl Strategy<Value = Vec2<G>> {
    [g(), g()].prop_map(Vec2).prop_filter("nonzero", |v| !v.is_zero())
}

fn v4() -> impl Strategy<Value = Vec4<G>> {
    [g(), g(), g(), g()].prop_map(Vec4).prop_filter("nonzero", |v| !v.is_zero())
}

fn v2_real() -> impl Strategy<Value = Vec2<Q>> {
    [q(), q()].prop_map(Vec2).prop_filter("nonzero", |v| !v.is_zero())
}

/// Components in `-2..=2`, so that orthogonality is common.
fn tiny_v2() -> impl Strategy<Value = Vec2<G>> {
    [(-2i64..=2, -2i64..=2), (-2i64..=2, -2i64..=2)]
        .prop_map(|c| Vec2(c.map(|(re, im)| G::from_parts(re, 1, im, 1))))
        .prop_filter("nonzero", |v| !v.is_zero())
}

fn plane<F: Sample>(seed: u64) -> (Vec4<F>, Vec4<F>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    support::plane::<F, _>(SHAPES[(seed % SHAPES.len() as u64) as usize], &mut rng)
}

/// An orthogonal pair from a random seed.
fn orthogonal_pair<F: Sample>(seed: u64) -> (Vec4<F>, Vec4<F>) {
    let (e1, x) = plane::<F>(seed);
    let e2 = x.add_scaled(&-(inner4(&e1, &x) / inner4(&e1, &e1)), &e1);
    (e1, e2)
}

fn cross_multiplied_eq(r: &Q, num: i128, den: i128) -> bool {
    r.numer() * BigInt::from(den) == BigInt::from(num) * r.denom()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn rational_arithmetic_matches_fraction_oracle((an, ad) in small(), (bn, bd) in small()) {
        let (a, b) = (Q::new(an, ad), Q::new(bn, bd));
        let (an, ad, bn, bd) = (an as i128, ad as i128, bn as i128, bd as i128);
        prop_assert!(cross_multiplied_eq(&(a.clone() + b.clone()), an * bd + bn * ad, ad * bd));
        prop_assert!(cross_multiplied_eq(&(a.clone() - b.clone()), an * bd - bn * ad, ad * bd));
        prop_assert!(cross_multiplied_eq(&(a.clone() * b.clone()), an * bn, ad * bd));
        if bn != 0 {
            prop_assert!(cross_multiplied_eq(&(a / b), an * bd, ad * bn));
        }
    }
}

proptest! {
    #[test]
    fn conjugation_is_an_involutive_automorphism(x in g(), y in g()) {
        prop_assert_eq!(x.conj().conj(), x.clone());
        prop_assert_eq!((x.clone() * y.clone()).conj(), x.conj() * y.conj());
    }

    #[test]
    fn exact_square_roots_square_back(x in g(), r in q()) {
        for value in [x.clone() * x.clone(), x] {
            if let Some(root) = value.sqrt_exact().unwrap() {
                prop_assert_eq!(root.clone() * root, value);
            }
        }
        let square = r.clone() * r;
        let root = square.sqrt_exact().unwrap().expect("square of a rational");
        prop_assert_eq!(root.clone() * root, square);
    }

    #[test]
    fn bilinear_form_identities(x in v4(), y in v4()) {
        prop_assert_eq!(bilinear(&x, &y), bilinear(&y, &x));
        prop_assert_eq!(bilinear(&x, &y), bilinear_via_matrix(&x, &y));
        prop_assert_eq!(inner4(&x, &y), bilinear(&tilde(&x), &y));
        prop_assert_eq!(bilinear(&tilde(&x), &tilde(&y)), bilinear(&x, &y).conj());
    }

    #[test]
    fn two_dimensional_identities(s in v2(), t in v2(), u in v2(), v in v2()) {
        prop_assert_eq!(inner4(&tensor2(&s, &t), &tensor2(&u, &v)), inner2(&s, &u) * inner2(&t, &v));
        prop_assert_eq!(inner2(&u, &v), det2(&cross(&u), &v));
        prop_assert_eq!(inner2(&cross(&u), &cross(&v)), inner2(&v, &u));
    }

    #[test]
    fn products_factorize_back(u in v2(), v in v2()) {
        let z = tensor2(&u, &v);
        prop_assert!(is_decomposable(&z));
        let f = factorize(&z).unwrap();
        prop_assert_eq!(f.product(), z);
    }

    #[test]
    fn returned_rays_are_decomposable(seed in any::<u64>()) {
        fn check<F: Field>(a: &Vec4<F>, b: &Vec4<F>, field: FieldKind) -> bool {
            decomposables_in_plane(a, b, field).unwrap().rays().iter().all(|ray| match ray.exact() {
                Some(z) => is_decomposable(z),
                None => is_decomposable(&ray.to_float()),
            })
        }
        let (a, b) = plane::<Q>(seed);
        prop_assert!(check(&a, &b, FieldKind::Real));
        let (a, b) = plane::<G>(seed);
        prop_assert!(check(&a, &b, FieldKind::Complex));
    }

    #[test]
    fn locus_variant_follows_plane_type(seed in any::<u64>()) {
        let (a, b) = plane::<Q>(seed);
        let (ca, cb) = plane::<G>(seed);
        let real = Plane::new(a.clone(), b.clone(), FieldKind::Real).unwrap();
        let complex = Plane::new(ca.clone(), cb.clone(), FieldKind::Complex).unwrap();
        let real_locus = decomposables_in_plane(&a, &b, FieldKind::Real).unwrap();
        let complex_locus = decomposables_in_plane(&ca, &cb, FieldKind::Complex).unwrap();
        let expected = |t: PlaneType, field: FieldKind| match t {
            PlaneType::Null => "All",
            PlaneType::PositiveDegenerate | PlaneType::NegativeDegenerate => "OneRay",
            PlaneType::Indefinite => "TwoRays",
            PlaneType::PositiveDefinite if field == FieldKind::Complex => "TwoRays",
            _ => "None",
        };
        prop_assert_eq!(real_locus.kind(), expected(real.classify(), FieldKind::Real));
        prop_assert_eq!(complex_locus.kind(), expected(complex.classify(), FieldKind::Complex));
    }

    #[test]
    fn canonical_basis_is_diagonal_with_matching_signature(seed in any::<u64>()) {
        let (a, b) = plane::<Q>(seed);
        let p = Plane::new(a, b, FieldKind::Real).unwrap();
        let c = canonical_basis(&p);
        prop_assert!(c.gramian.is_diagonal());
        prop_assert_eq!(c.plane_type, p.classify());
        let q = Plane::new(c.c1, c.c2, FieldKind::Real).unwrap();
        prop_assert!(q.same_span(&p));
        prop_assert_eq!(q.classify(), p.classify());
    }

    #[test]
    fn spanning_products_orthogonal_iff_perp_rays_are(s in tiny_v2(), t in tiny_v2(), u in tiny_v2(), v in tiny_v2()) {
        let (x, y) = (tensor2(&s, &t), tensor2(&u, &v));
        prop_assume!(!det2(&s, &u).is_zero() && !det2(&t, &v).is_zero());
        let (a, b) = orthocomplement(&x, &y).unwrap();
        if let DecomposableLocus::TwoRays(p, m) = decomposables_in_plane(&a, &b, FieldKind::Complex).unwrap() {
            let (p, m) = (p.exact().unwrap().clone(), m.exact().unwrap().clone());
            prop_assert_eq!(inner4(&p, &m).is_zero(), inner4(&x, &y).is_zero());
        } else {
            prop_assert!(false, "perp of two independent products has exactly two decomposable rays");
        }
    }

    #[test]
    fn products_of_bases_span_a_nondegenerate_plane(s in v2_real(), u in v2_real(), t in v2_real(), v in v2_real()) {
        prop_assume!(!det2(&s, &u).is_zero() && !det2(&t, &v).is_zero());
        let p = Plane::new(tensor2(&s, &t), tensor2(&u, &v), FieldKind::Real).unwrap();
        prop_assert_eq!(p.classify(), PlaneType::Indefinite);
        let c = |x: &Vec2<Q>| x.map(|r| G::real(r.clone()));
        let p = Plane::new(tensor2(&c(&s), &c(&t)), tensor2(&c(&u), &c(&v)), FieldKind::Complex).unwrap();
        prop_assert_eq!(p.classify(), PlaneType::PositiveDefinite);
    }

    #[test]
    fn completed_contexts_verify(seed in any::<u64>()) {
        let (e1, e2) = orthogonal_pair::<G>(seed);
        for policy in [CompletionPolicy::Any, CompletionPolicy::DecomposablePair, CompletionPolicy::IndecomposablePair, CompletionPolicy::MixedPair] {
            if let Some(ctx) = complete_context(&e1, &e2, FieldKind::Complex, policy).unwrap().context() {
                prop_assert!(verify_context(ctx).passed);
                let [x, y] = [&ctx.vectors[2], &ctx.vectors[3]];
                match policy {
                    CompletionPolicy::DecomposablePair => prop_assert!(is_decomposable(x) && is_decomposable(y)),
                    CompletionPolicy::IndecomposablePair => prop_assert!(!is_decomposable(x) && !is_decomposable(y)),
                    CompletionPolicy::MixedPair => prop_assert!(is_decomposable(x) != is_decomposable(y)),
                    CompletionPolicy::Any => {}
                }
            }
        }
    }

    #[test]
    fn missing_plane_types_agree_on_random_contexts(seed in any::<u64>()) {
        let (e1, e2) = orthogonal_pair::<G>(seed);
        let h = Hypergraph::new(
            FieldKind::Complex,
            vec![("a".into(), Some(e1)), ("b".into(), Some(e2)), ("c".into(), None), ("d".into(), None)],
            &[["a", "b", "c", "d"]],
        ).unwrap();
        let analysis = analyze_contexts(&h);
        let m = analysis[0].missing_plane().unwrap();
        prop_assert_eq!(m.missing_plane_type, m.transferred_type);
        let out = complete_labeling(&h, CompletionPolicy::Any);
        prop_assert!(out.faithfulness.unwrap().orthogonality_violations.is_empty());
        let text = h.to_json();
        let again = parse_hypergraph::<G>(&text).unwrap();
        prop_assert_eq!(&again, &h);
        prop_assert_eq!(again.to_json(), text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn classification_ignores_basis_choice(seed in any::<u64>(), m in prop::array::uniform4((-5i64..=5, 1i64..=5))) {
        let [p, qq, r, s] = m.map(|(n, d)| Q::new(n, d));
        prop_assume!(!(p.clone() * s.clone() - qq.clone() * r.clone()).is_zero());
        for field in [FieldKind::Real, FieldKind::Complex] {
            let (a, b) = plane::<Q>(seed);
            let x = a.scale(&p).add_scaled(&qq, &b);
            let y = a.scale(&r).add_scaled(&s, &b);
            let original = Plane::new(a, b, field).unwrap();
            let mixed = Plane::new(x, y, field).unwrap();
            prop_assert!(mixed.same_span(&original));
            prop_assert_eq!(mixed.classify(), original.classify());
        }
    }

    #[test]
    fn double_orthocomplement_is_the_original_span(seed in any::<u64>()) {
        let (a, b) = plane::<G>(seed);
        let (c, d) = orthocomplement(&a, &b).unwrap();
        let (e, f) = orthocomplement(&c, &d).unwrap();
        prop_assert!(same_subspace(&[a.clone(), b.clone()], &[e.clone(), f.clone()]));
        for x in [&e, &f] {
            prop_assert!(!proportional(x, &c) && !proportional(x, &d));
        }
    }
}
