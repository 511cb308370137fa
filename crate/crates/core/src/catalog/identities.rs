//! Polynomial identities between generators, coproducts and central elements.

use crate::algebra::Algebra;
use crate::coeff::{Coeff, Param};
use crate::ncpoly::{Gen, NCPoly};

use super::{algebra, build_map, dq, eta1, eta2, g, t2, w, AlgebraId, MapId};
use Gen::*;

/// One registered identity. Each builder returns labelled `(left, right)` pairs over `algebra`.
#[derive(Clone)]
pub struct IdentityCheck {
    pub id: &'static str,
    pub claim: &'static str,
    pub algebra: AlgebraId,
    /// `false` for a control whose difference must be nonzero.
    pub expect_zero: bool,
    pub build: fn(&Algebra) -> Vec<(String, NCPoly, NCPoly)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityOutcome {
    pub passed: bool,
    /// Terms left in the first nonzero residual, 0 when all vanish.
    pub residual_terms: usize,
    pub detail: String,
}

impl IdentityCheck {
    pub fn run(&self) -> IdentityOutcome {
        let alg = algebra(self.algebra);
        let mut first: Option<(String, NCPoly)> = None;
        let mut n = 0;
        for (label, l, r) in (self.build)(&alg) {
            n += 1;
            let d = alg.nf(&l.sub(&r));
            if !d.is_zero() && first.is_none() {
                first = Some((label, d));
            }
        }
        match (first, self.expect_zero) {
            (None, true) => IdentityOutcome { passed: true, residual_terms: 0, detail: format!("{n} equalities exact") },
            (Some((label, d)), true) => IdentityOutcome {
                passed: false,
                residual_terms: d.len(),
                detail: format!("{label}: residual {d}"),
            },
            (Some((label, d)), false) => IdentityOutcome {
                passed: true,
                residual_terms: d.len(),
                detail: format!("{label}: difference is nonzero as expected ({} terms)", d.len()),
            },
            (None, false) => IdentityOutcome {
                passed: false,
                residual_terms: 0,
                detail: "difference vanished but a nonzero difference was expected".into(),
            },
        }
    }
}

fn ap(m: MapId, alg: &Algebra, p: &NCPoly) -> NCPoly {
    build_map(m).apply(alg, p).expect("covered")
}

fn ap_free(m: MapId, p: &NCPoly) -> NCPoly {
    build_map(m).apply_free(p).expect("covered")
}

fn lam(e: i32) -> Coeff {
    Coeff::param(Param::Lambda, e)
}

fn q(e: i32) -> Coeff {
    Coeff::q_pow(e)
}

/// `p` at site 1 times `r` at site 2.
fn tp(p: &NCPoly, r: &NCPoly) -> NCPoly {
    p.tensor(r, 1)
}

fn m2(alg: &Algebra, ps: &[&NCPoly]) -> NCPoly {
    alg.mul_all(ps)
}

type M2 = [[NCPoly; 2]; 2];

fn mat(entries: [[Option<Gen>; 2]; 2]) -> M2 {
    entries.map(|row| row.map(|e| e.map(g).unwrap_or_default()))
}

/// `Φ(M_ij) = Σ_k M_ik ⊗ M_kj`.
fn matrix_coproduct(alg: &Algebra, m: MapId, mm: &M2, tag: &str) -> Vec<(String, NCPoly, NCPoly)> {
    let map = build_map(m);
    let mut out = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            let l = map.apply(alg, &mm[i][j]).expect("covered");
            let mut r = NCPoly::zero();
            for k in 0..2 {
                r.add_assign(&tp(&mm[i][k], &mm[k][j]));
            }
            out.push((format!("{tag}[{}{}]", i + 1, j + 1), l, r));
        }
    }
    out
}

fn gplus() -> M2 {
    mat([[Some(Theta), None], [Some(A), Some(B)]])
}

fn gminus() -> M2 {
    mat([[Some(C), Some(D)], [None, None]])
}

fn comm_pairs(alg: &Algebra, x: &NCPoly, ys: &[(&str, NCPoly)], c: &Coeff) -> Vec<(String, NCPoly, NCPoly)> {
    ys.iter().map(|(n, y)| (n.to_string(), alg.mul(x, y), alg.mul(y, x).scale(c))).collect()
}

/// `r' = θa ⊗ θd`, the exchange element with its central denominator cleared.
fn r_cleared() -> NCPoly {
    tp(&w(&[Theta, A]), &w(&[Theta, D]))
}

pub fn identity_registry() -> Vec<IdentityCheck> {
    vec![
        IdentityCheck {
            id: "coprod-matrix-form",
            claim: "Δ(g_ij) = Σ_k g_ik ⊗ g_kj for g = [[a,b],[c,d]]",
            algebra: AlgebraId::GLq2,
            expect_zero: true,
            build: |alg| matrix_coproduct(alg, MapId::Delta, &mat([[Some(A), Some(B)], [Some(C), Some(D)]]), "g"),
        },
        IdentityCheck {
            id: "coprod-dq-grouplike",
            claim: "Δ(D_q) = D_q ⊗ D_q",
            algebra: AlgebraId::GLq2,
            expect_zero: true,
            build: |alg| vec![("Δ(D_q)".into(), ap(MapId::Delta, alg, &dq()), tp(&dq(), &dq()))],
        },
        IdentityCheck {
            id: "coprod-ad-qbc-split",
            claim: "Δ(a)Δ(d) = q Δ(b)Δ(c) + D_q ⊗ D_q",
            algebra: AlgebraId::GLq2,
            expect_zero: true,
            build: |alg| {
                let d = |x| ap(MapId::Delta, alg, &g(x));
                let l = alg.mul(&d(A), &d(D));
                let r = alg.mul(&d(B), &d(C)).scale(&q(1)).add(&tp(&dq(), &dq()));
                vec![("Δ(a)Δ(d)".into(), l, r)]
            },
        },
        IdentityCheck {
            id: "coprod-star-hom",
            claim: "Δ commutes with the star on a, b, c, d",
            algebra: AlgebraId::GLq2,
            expect_zero: true,
            build: |alg| {
                let m = build_map(MapId::Delta);
                [A, B, C, D]
                    .iter()
                    .map(|x| {
                        let l = m.apply(alg, &alg.star(&g(*x))).unwrap();
                        (format!("Δ({})*", x.symbol()), l, alg.star(m.image(*x).unwrap()))
                    })
                    .collect()
            },
        },
        IdentityCheck {
            id: "delta-dq-not-grouplike",
            claim: "δ(D_q) = ac ⊗ θd + bc ⊗ D_q",
            algebra: AlgebraId::GLq2Ext,
            expect_zero: true,
            build: |alg| {
                let r = tp(&w(&[A, C]), &w(&[Theta, D])).add(&tp(&w(&[B, C]), &dq()));
                vec![("δ(D_q)".into(), ap(MapId::SmallDelta, alg, &dq()), r)]
            },
        },
        IdentityCheck {
            id: "delta-dq-expanded",
            claim: "δ(D_q) = ac ⊗ θd + bc ⊗ ad − q bc ⊗ bc",
            algebra: AlgebraId::GLq2Ext,
            expect_zero: true,
            build: |alg| {
                let r = tp(&w(&[A, C]), &w(&[Theta, D]))
                    .add(&tp(&w(&[B, C]), &w(&[A, D])))
                    .sub(&tp(&w(&[B, C]), &w(&[B, C])).scale(&q(1)));
                vec![("δ(D_q)".into(), ap(MapId::SmallDelta, alg, &dq()), r)]
            },
        },
        IdentityCheck {
            id: "delta-dq-control",
            claim: "δ(D_q) differs from D_q ⊗ D_q",
            algebra: AlgebraId::GLq2Ext,
            expect_zero: false,
            build: |alg| vec![("δ(D_q)".into(), ap(MapId::SmallDelta, alg, &dq()), tp(&dq(), &dq()))],
        },
        IdentityCheck {
            id: "delta-eta-grouplike",
            claim: "δ(η′) = η′ ⊗ η′ and δ(η″) = η″ ⊗ η″",
            algebra: AlgebraId::GLq2Ext,
            expect_zero: true,
            build: |alg| {
                vec![
                    ("δ(η′)".into(), ap(MapId::SmallDelta, alg, &eta1()), tp(&eta1(), &eta1())),
                    ("δ(η″)".into(), ap(MapId::SmallDelta, alg, &eta2()), tp(&eta2(), &eta2())),
                ]
            },
        },
        IdentityCheck {
            id: "delta-gpm-matrix-form",
            claim: "(id⊗δ) g± = g±₁₂ g±₁₃ for g⁺ = [[θ,0],[a,b]], g⁻ = [[c,d],[0,0]]",
            algebra: AlgebraId::GLq2Ext,
            expect_zero: true,
            build: |alg| {
                let mut v = matrix_coproduct(alg, MapId::SmallDelta, &gplus(), "g⁺");
                v.extend(matrix_coproduct(alg, MapId::SmallDelta, &gminus(), "g⁻"));
                v
            },
        },
        IdentityCheck {
            id: "deltaA-qgpm-matrix-form",
            claim: "δ_A on Q(g⁺) = [[k⁻¹,0],[e,k]] and Q(g⁻) = [[k,f],[0,0]] is matrix multiplicative",
            algebra: AlgebraId::Aq,
            expect_zero: true,
            build: |alg| {
                let mut v =
                    matrix_coproduct(alg, MapId::DeltaA, &mat([[Some(Kinv), None], [Some(E), Some(K)]]), "Q(g⁺)");
                v.extend(matrix_coproduct(alg, MapId::DeltaA, &mat([[Some(K), Some(F)], [None, None]]), "Q(g⁻)"));
                v
            },
        },
        IdentityCheck {
            id: "deltaW-qgpm-matrix-form",
            claim: "δ_W on Q″(g⁺) = [[v⁻¹,0],[u,0]] and Q″(g⁻) = [[v,ũ],[0,0]] is matrix multiplicative",
            algebra: AlgebraId::Wq,
            expect_zero: true,
            build: |alg| {
                let mut v =
                    matrix_coproduct(alg, MapId::DeltaW, &mat([[Some(Vinv), None], [Some(U), None]]), "Q″(g⁺)");
                v.extend(matrix_coproduct(alg, MapId::DeltaW, &mat([[Some(V), Some(Ut)], [None, None]]), "Q″(g⁻)"));
                v
            },
        },
        IdentityCheck {
            id: "coprodW-z-commutes",
            claim: "z = uv ⊗ uv⁻¹ commutes with Δ_W(u), Δ_W(ũ), Δ_W(v)",
            algebra: AlgebraId::Wq,
            expect_zero: true,
            build: |alg| {
                let z = tp(&w(&[U, V]), &w(&[U, Vinv]));
                let ys: Vec<(&str, NCPoly)> = [("Δ_W(u)", U), ("Δ_W(ũ)", Ut), ("Δ_W(v)", V)]
                    .iter()
                    .map(|(n, x)| (*n, build_map(MapId::BigDeltaWPoly).image(*x).unwrap().clone()))
                    .collect();
                comm_pairs(alg, &z, &ys, &Coeff::one())
            },
        },
        IdentityCheck {
            id: "coprod-a-b-exchange-btheta",
            claim: "[Δ(a), b⊗θ] = 0 and Δ(b)(b⊗θ) = q (b⊗θ)Δ(b)",
            algebra: AlgebraId::GLq2Ext,
            expect_zero: true,
            build: |alg| {
                let bt = t2(B, Theta);
                let mut v = comm_pairs(alg, &ap(MapId::Delta, alg, &g(A)), &[("Δ(a)", bt.clone())], &Coeff::one());
                v.extend(comm_pairs(alg, &ap(MapId::Delta, alg, &g(B)), &[("Δ(b)", bt)], &q(1)));
                v
            },
        },
        IdentityCheck {
            id: "coprod-d-c-exchange-btheta",
            claim: "[Δ(d), b⊗θ] = 0 and Δ(c)(b⊗θ) = q⁻¹ (b⊗θ)Δ(c)",
            algebra: AlgebraId::GLq2Ext,
            expect_zero: true,
            build: |alg| {
                let bt = t2(B, Theta);
                let mut v = comm_pairs(alg, &ap(MapId::Delta, alg, &g(D)), &[("Δ(d)", bt.clone())], &Coeff::one());
                v.extend(comm_pairs(alg, &ap(MapId::Delta, alg, &g(C)), &[("Δ(c)", bt)], &q(-1)));
                v
            },
        },
        IdentityCheck {
            id: "coprod-bc-exchange",
            claim: "Δ(bc) commutes with b⊗θ, θ⊗b, Δ(b), Δ(c); Δ(bc)Δ(a) = q⁻²Δ(a)Δ(bc); Δ(bc)Δ(d) = q²Δ(d)Δ(bc)",
            algebra: AlgebraId::GLq2Ext,
            expect_zero: true,
            build: |alg| {
                let d = |x| ap(MapId::Delta, alg, &g(x));
                let dbc = ap(MapId::Delta, alg, &w(&[B, C]));
                let mut v = comm_pairs(
                    alg,
                    &dbc,
                    &[("b⊗θ", t2(B, Theta)), ("θ⊗b", t2(Theta, B)), ("Δ(b)", d(B)), ("Δ(c)", d(C))],
                    &Coeff::one(),
                );
                v.extend(comm_pairs(alg, &dbc, &[("Δ(a)", d(A))], &q(-2)));
                v.extend(comm_pairs(alg, &dbc, &[("Δ(d)", d(D))], &q(2)));
                v
            },
        },
        IdentityCheck {
            id: "coprod-x-expansion",
            claim: "Δ(b)(λθ⊗a + λ⁻¹d⊗θ) = q⁻¹λ(θ⊗b)Δ(a) + qλ⁻¹(b⊗θ)Δ(d) + λη′⊗D_q + λ⁻¹D_q⊗η′",
            algebra: AlgebraId::GLq2Ext,
            expect_zero: true,
            build: |alg| {
                let d = |x| ap(MapId::Delta, alg, &g(x));
                let inner = t2(Theta, A).scale(&lam(1)).add(&t2(D, Theta).scale(&lam(-1)));
                let l = alg.mul(&d(B), &inner);
                let r = m2(alg, &[&t2(Theta, B), &d(A)])
                    .scale(&(&q(-1) * &lam(1)))
                    .add(&m2(alg, &[&t2(B, Theta), &d(D)]).scale(&(&q(1) * &lam(-1))))
                    .add(&tp(&eta1(), &dq()).scale(&lam(1)))
                    .add(&tp(&dq(), &eta1()).scale(&lam(-1)));
                vec![("X(λ)".into(), l, r)]
            },
        },
        IdentityCheck {
            id: "delta-x-expansion",
            claim: "q⁻¹δ(b)(λ⁻¹d⊗a + λ⁻¹c⊗θ + λθ⊗c) = (λθ⊗d + λ⁻¹d⊗b)δ(a) − qλδ(θ)(a⊗d) − λ⁻¹D_q⊗η′ − λη′⊗D_q; \
                    with the central terms written as λD_q⊗η′ + λ⁻¹η′⊗D_q the residual is (λ−λ⁻¹)(D_q⊗η′ − η′⊗D_q)",
            algebra: AlgebraId::GLq2Ext,
            expect_zero: true,
            build: |alg| {
                let d = |x| ap(MapId::SmallDelta, alg, &g(x));
                let inner = t2(D, A)
                    .scale(&lam(-1))
                    .add(&t2(C, Theta).scale(&lam(-1)))
                    .add(&t2(Theta, C).scale(&lam(1)));
                let l = alg.mul(&d(B), &inner).scale(&q(-1));
                let pre = t2(Theta, D).scale(&lam(1)).add(&t2(D, B).scale(&lam(-1)));
                let head = alg.mul(&pre, &d(A)).sub(&alg.mul(&d(Theta), &t2(A, D)).scale(&(&q(1) * &lam(1))));
                let de = tp(&dq(), &eta1());
                let ed = tp(&eta1(), &dq());
                let holds = head.sub(&de.scale(&lam(-1))).sub(&ed.scale(&lam(1)));
                let swapped = head.sub(&de.scale(&lam(1))).sub(&ed.scale(&lam(-1)));
                let gap = de.sub(&ed).scale(&(&lam(1) - &lam(-1)));
                vec![
                    ("X(λ)".into(), l.clone(), holds),
                    ("X(λ) with λ-exponents of the central terms exchanged".into(), l.sub(&swapped), gap),
                ]
            },
        },
        IdentityCheck {
            id: "delta-dq-exchange-ad-ac",
            claim: "δ(D_q)(a⊗d) = q⁻²(a⊗d)δ(D_q) and δ(D_q)(a⊗c) = q⁻²(a⊗c)δ(D_q)",
            algebra: AlgebraId::GLq2Ext,
            expect_zero: true,
            build: |alg| {
                let dd = ap(MapId::SmallDelta, alg, &dq());
                comm_pairs(alg, &dd, &[("a⊗d", t2(A, D)), ("a⊗c", t2(A, C))], &q(-2))
            },
        },
        IdentityCheck {
            id: "delta-dq-commutes-with-delta",
            claim: "[δ(D_q), δ(x)] = 0 for every generator x",
            algebra: AlgebraId::GLq2Ext,
            expect_zero: true,
            build: |alg| {
                let dd = ap(MapId::SmallDelta, alg, &dq());
                let ys: Vec<(&str, NCPoly)> = [("δ(a)", A), ("δ(b)", B), ("δ(c)", C), ("δ(θ)", Theta), ("δ(d)", D)]
                    .iter()
                    .map(|(n, x)| (*n, ap(MapId::SmallDelta, alg, &g(*x))))
                    .collect();
                comm_pairs(alg, &dd, &ys, &Coeff::one())
            },
        },
        IdentityCheck {
            id: "exchange-r-db-commutator",
            claim: "(d⊗b)r′ − r′(d⊗b) = (q−q⁻¹)(D_q θ ⊗ d) with r′ = θa⊗θd = (D_q⊗1)·r on the factor algebra θb = 1",
            algebra: AlgebraId::GLq2ExtPrime,
            expect_zero: true,
            build: |alg| {
                let db = t2(D, B);
                let r = r_cleared();
                let l = alg.mul(&db, &r).sub(&alg.mul(&r, &db));
                let rhs = tp(&alg.mul(&dq(), &g(Theta)), &g(D)).scale(&Coeff::qdiff());
                vec![("[d⊗b, r′]".into(), l, rhs)]
            },
        },
        IdentityCheck {
            id: "exchange-db-thetad-r",
            claim: "(d⊗b)(θ⊗d) = q²(θ⊗d)(d⊗b) and r′(θ⊗d) = q⁻²(θ⊗d)r′",
            algebra: AlgebraId::GLq2ExtPrime,
            expect_zero: true,
            build: |alg| {
                let td = t2(Theta, D);
                let mut v = comm_pairs(alg, &t2(D, B), &[("d⊗b", td.clone())], &q(2));
                v.extend(comm_pairs(alg, &r_cleared(), &[("r′", td)], &q(-2)));
                v
            },
        },
        IdentityCheck {
            id: "da-ad-dq",
            claim: "q·da − q⁻¹·ad = (q−q⁻¹)D_q",
            algebra: AlgebraId::GLq2,
            expect_zero: true,
            build: |_| {
                let l = w(&[D, A]).scale(&q(1)).sub(&w(&[A, D]).scale(&q(-1)));
                vec![("q da − q⁻¹ ad".into(), l, dq().scale(&Coeff::qdiff()))]
            },
        },
        IdentityCheck {
            id: "q-image-casimir",
            claim: "Q(D_q) = C_q, Q(η′) = 1 and Q(η″) = 1",
            algebra: AlgebraId::Aq,
            expect_zero: true,
            build: |_| {
                vec![
                    ("Q(D_q)".into(), ap_free(MapId::Q, &dq()), super::cq()),
                    ("Q(η′)".into(), ap_free(MapId::Q, &eta1()), NCPoly::one()),
                    ("Q(η″)".into(), ap_free(MapId::Q, &eta2()), NCPoly::one()),
                ]
            },
        },
        IdentityCheck {
            id: "q-intertwines-delta",
            claim: "δ_A ∘ Q = (Q⊗Q) ∘ δ on generators",
            algebra: AlgebraId::Aq,
            expect_zero: true,
            build: |alg| {
                let qm = build_map(MapId::Q);
                let dm = build_map(MapId::SmallDelta);
                [A, B, C, Theta, D]
                    .iter()
                    .map(|x| {
                        let l = ap(MapId::DeltaA, alg, qm.image(*x).unwrap());
                        let r = qm.apply(alg, dm.image(*x).unwrap()).unwrap();
                        (x.symbol().to_string(), l, r)
                    })
                    .collect()
            },
        },
        IdentityCheck {
            id: "q-image-delta-dq",
            claim: "(Q⊗Q)δ(D_q) = ek ⊗ k⁻¹f + k² ⊗ ef − q k² ⊗ k²",
            algebra: AlgebraId::Aq,
            expect_zero: true,
            build: |alg| {
                let l = build_map(MapId::Q).apply(alg, &ap_free(MapId::SmallDelta, &dq())).unwrap();
                let r = tp(&w(&[E, K]), &w(&[Kinv, F]))
                    .add(&tp(&w(&[K, K]), &w(&[E, F])))
                    .sub(&tp(&w(&[K, K]), &w(&[K, K])).scale(&q(1)));
                vec![("(Q⊗Q)δ(D_q)".into(), l, r)]
            },
        },
        IdentityCheck {
            id: "q-image-delta-dq-kk",
            claim: "(Q⊗Q)δ(D_q) commutes with k ⊗ k",
            algebra: AlgebraId::Aq,
            expect_zero: true,
            build: |alg| {
                let l = build_map(MapId::Q).apply(alg, &ap_free(MapId::SmallDelta, &dq())).unwrap();
                comm_pairs(alg, &l, &[("k⊗k", t2(K, K))], &Coeff::one())
            },
        },
        IdentityCheck {
            id: "q-image-coprod-control",
            claim: "(Q⊗Q)Δ(b) differs from (Q⊗Q)Δ(c)",
            algebra: AlgebraId::Aq,
            expect_zero: false,
            build: |alg| {
                let m = build_map(MapId::BigDeltaA);
                vec![("Δ_A(b) − Δ_A(c)".into(), m.apply(alg, &g(B)).unwrap(), m.apply(alg, &g(C)).unwrap())]
            },
        },
        IdentityCheck {
            id: "qdprime-intertwines-delta",
            claim: "δ_W ∘ Q″ = (Q″⊗Q″) ∘ δ on generators",
            algebra: AlgebraId::Wq,
            expect_zero: true,
            build: |alg| {
                let qm = build_map(MapId::QDoublePrime);
                let dm = build_map(MapId::SmallDelta);
                [A, B, C, Theta, D]
                    .iter()
                    .map(|x| {
                        let l = ap(MapId::DeltaW, alg, qm.image(*x).unwrap());
                        let r = qm.apply(alg, dm.image(*x).unwrap()).unwrap();
                        (x.symbol().to_string(), l, r)
                    })
                    .collect()
            },
        },
        IdentityCheck {
            id: "qprime-intertwines-coprod",
            claim: "Δ_W ∘ Q′ = (Q′⊗Q′) ∘ Δ on a, b, c, d",
            algebra: AlgebraId::Wq,
            expect_zero: true,
            build: |alg| {
                let qm = build_map(MapId::QPrime);
                let dm = build_map(MapId::Delta);
                let wm = build_map(MapId::BigDeltaWPoly);
                [A, B, C, D]
                    .iter()
                    .map(|x| {
                        let l = wm.apply(alg, qm.image(*x).unwrap()).unwrap();
                        let r = qm.apply(alg, dm.image(*x).unwrap()).unwrap();
                        (x.symbol().to_string(), l, r)
                    })
                    .collect()
            },
        },
        IdentityCheck {
            id: "iota-involution",
            claim: "ι ∘ ι = id on generators",
            algebra: AlgebraId::GLq2ExtPrime,
            expect_zero: true,
            build: |_| {
                let m = build_map(MapId::Iota);
                [A, B, C, Theta, D]
                    .iter()
                    .map(|x| (x.symbol().to_string(), m.apply_free(m.image(*x).unwrap()).unwrap(), g(*x)))
                    .collect()
            },
        },
        IdentityCheck {
            id: "ext-star-relations",
            claim: "the star maps each defining relation of the extended algebra into the ideal",
            algebra: AlgebraId::GLq2Ext,
            expect_zero: true,
            build: |alg| {
                alg.presentation()
                    .relations()
                    .into_iter()
                    .map(|(n, r)| (n, alg.star(&r), NCPoly::zero()))
                    .collect()
            },
        },
    ]
}
