use num_complex::Complex64;
use num_rational::Rational64;
use proptest::prelude::*;

use qbax::algebra::Algebra;
use qbax::catalog::{algebra, build_map, build_presentation, AlgebraId, MapId};
use qbax::coeff::{Coeff, Param, NPARAM};
use qbax::cyclicrep::rep_for;
use qbax::genmap::GenMap;
use qbax::ncpoly::{Gen, Letter, NCPoly};
use qbax::presentation::Presentation;
use qbax::qdilog::{s_omega, DilogParams};

fn coeff() -> impl Strategy<Value = Coeff> {
    prop::collection::vec((-4i64..=4, 1i64..=3, -2i32..=2, -1i32..=1, -1i32..=1), 0..4).prop_map(|ts| {
        let mut c = Coeff::zero();
        for (n, d, q, l, z) in ts {
            let mut m = [0; NPARAM];
            m[Param::Q.index()] = q;
            m[Param::Lambda.index()] = l;
            m[Param::Z.index()] = z;
            c += &Coeff::term(Rational64::new(n, d), m);
        }
        c
    })
}

/// Polynomials over the generators of `id` on sites `1..=sites`.
fn poly(id: AlgebraId, sites: u8, max_terms: usize) -> impl Strategy<Value = NCPoly> {
    let gens = build_presentation(id).generators.clone();
    let n = gens.len();
    prop::collection::vec((-3i64..=3, -1i32..=1, prop::collection::vec((1..=sites, 0..n), 0..4)), 1..=max_terms).prop_map(
        move |ts| {
            let mut p = NCPoly::zero();
            for (k, e, w) in ts {
                let word = w.into_iter().map(|(s, i)| Letter::new(s, gens[i])).collect();
                p.add_term(word, &(&Coeff::from_int(k) * &Coeff::q_pow(e)));
            }
            p
        },
    )
}

fn algebra_id() -> impl Strategy<Value = AlgebraId> {
    prop::sample::select(AlgebraId::ALL.to_vec())
}

fn with_polys(sites: u8, count: usize) -> impl Strategy<Value = (AlgebraId, Vec<NCPoly>)> {
    algebra_id().prop_flat_map(move |id| (Just(id), prop::collection::vec(poly(id, sites, 3), count)))
}

fn point() -> [Complex64; NPARAM] {
    [
        Complex64::new(0.8, 0.35),
        Complex64::new(1.3, -0.2),
        Complex64::new(-0.7, 0.9),
        Complex64::new(0.6, 0.1),
        Complex64::new(0.4, -0.3),
        Complex64::new(1.1, 0.0),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coeff_ring_laws(a in coeff(), b in coeff(), c in coeff()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Coeff::one(), a.clone());
    }

    #[test]
    fn coeff_eval_is_a_ring_hom(a in coeff(), b in coeff()) {
        let v = point();
        let lhs = (&a * &b).eval(&v);
        let rhs = a.eval(&v) * b.eval(&v);
        prop_assert!((lhs - rhs).norm() <= 1e-9 * (1.0 + rhs.norm()));
    }

    #[test]
    fn coeff_text_round_trip(a in coeff()) {
        prop_assert_eq!(Coeff::parse(&a.to_ascii()).unwrap(), a);
    }

    #[test]
    fn normal_form_is_idempotent_and_linear((id, ps) in with_polys(2, 2)) {
        let alg = algebra(id);
        let n = alg.nf(&ps[0]);
        prop_assert_eq!(alg.nf(&n), n.clone());
        prop_assert_eq!(alg.nf(&ps[0].add(&ps[1])), n.add(&alg.nf(&ps[1])));
    }

    #[test]
    fn normal_words_are_sorted((id, ps) in with_polys(1, 1)) {
        let alg = algebra(id);
        for (w, _) in alg.nf(&ps[0]).terms() {
            let gs: Vec<Gen> = w.iter().map(|l| l.gen).collect();
            prop_assert!(alg.is_normal_word(&gs), "{:?} is not normal", gs);
        }
    }

    #[test]
    fn multiplication_is_associative((id, ps) in with_polys(2, 3)) {
        let alg = algebra(id);
        let l = alg.mul(&alg.mul(&ps[0], &ps[1]), &ps[2]);
        let r = alg.mul(&ps[0], &alg.mul(&ps[1], &ps[2]));
        prop_assert_eq!(l, r);
    }

    #[test]
    fn normal_form_respects_products((id, ps) in with_polys(2, 2)) {
        let alg = algebra(id);
        prop_assert_eq!(alg.nf(&ps[0].mul_free(&ps[1])), alg.mul(&alg.nf(&ps[0]), &alg.nf(&ps[1])));
    }

    #[test]
    fn star_is_an_involutive_anti_hom((id, ps) in with_polys(1, 2)) {
        let alg = algebra(id);
        prop_assert_eq!(alg.star(&alg.star(&ps[0])), alg.nf(&ps[0]));
        let l = alg.star(&alg.mul(&ps[0], &ps[1]));
        let r = alg.mul(&alg.star(&ps[1]), &alg.star(&ps[0]));
        prop_assert_eq!(l, r);
    }

    #[test]
    fn distinct_sites_commute((id, ps) in with_polys(1, 2)) {
        let alg = algebra(id);
        let x = ps[0].at_site(1);
        let y = ps[1].at_site(2);
        prop_assert!(alg.commutator(&x, &y).is_zero());
    }

    #[test]
    fn maps_are_multiplicative(m in prop::sample::select(MapId::ALL.to_vec()), seed in any::<u64>()) {
        let gm = build_map(m);
        let src = algebra(m.source());
        let tgt = algebra(m.target());
        let covered: Vec<Gen> = src.presentation().generators.iter().copied().filter(|g| gm.image(*g).is_ok()).collect();
        let pick = |k: u64| NCPoly::gen(covered[(k % covered.len() as u64) as usize]);
        let (a, b) = (pick(seed).add(&pick(seed >> 8)), pick(seed >> 16).mul_free(&pick(seed >> 24)));
        let lhs = gm.apply(&tgt, &src.mul(&a, &b)).unwrap();
        let rhs = tgt.mul(&gm.apply(&tgt, &a).unwrap(), &gm.apply(&tgt, &b).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn poly_text_round_trip((_, ps) in with_polys(3, 1)) {
        prop_assert_eq!(NCPoly::parse(&ps[0].to_ascii()).unwrap(), ps[0].clone());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn representations_see_normal_forms_as_equal(
        (id, ps) in prop::sample::select(vec![AlgebraId::GLq2, AlgebraId::GLq2Ext, AlgebraId::Aq, AlgebraId::Wq])
            .prop_flat_map(|id| (Just(id), prop::collection::vec(poly(id, 2, 3), 1))),
        n in prop::sample::select(vec![3usize, 5]),
    ) {
        let rep = rep_for(id, n, 1).unwrap();
        let vals = rep.params(Complex64::new(0.9, 0.2), Complex64::new(1.1, -0.4));
        let raw = rep.eval_poly(&ps[0], 2, &vals).unwrap();
        let red = rep.eval_poly(&algebra(id).nf(&ps[0]), 2, &vals).unwrap();
        prop_assert!((&raw - &red).norm() <= 1e-9 * (1.0 + raw.norm()));
    }

    #[test]
    fn dilogarithm_is_unimodular_on_the_real_axis(omega in 0.2f64..0.95, lx in -3.0f64..3.0) {
        let p = DilogParams::new(omega).unwrap();
        let s = s_omega(Complex64::new(lx.exp(), 0.0), &p).unwrap();
        prop_assert!((s.norm() - 1.0).abs() < 1e-10);
    }
}

#[test]
fn presentations_and_maps_round_trip_through_text() {
    for id in AlgebraId::ALL {
        let p = build_presentation(id);
        let back = Presentation::from_text(&p.to_text()).unwrap();
        assert_eq!(Algebra::new(back).unwrap().presentation().to_text(), p.to_text());
    }
    for id in MapId::ALL {
        let m = build_map(id);
        assert_eq!(GenMap::from_text(&m.to_text()).unwrap().to_text(), m.to_text());
    }
}
