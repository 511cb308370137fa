//! The concrete algebras, maps between them and their central elements.

mod checks;
mod counit;
mod identities;

pub use checks::{checks, fault_injection_check, FAULT_OVERLAP};
pub use counit::{counit_analysis, CounitReport};
pub use identities::{identity_registry, IdentityCheck};

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::coeff::Coeff;
use crate::genmap::GenMap;
use crate::ncpoly::{Gen, NCPoly};
use crate::presentation::{Presentation, Rule};

use Gen::*;

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum AlgebraId {
    GLq2,
    GLq2Ext,
    GLq2ExtPrime,
    GLq2ExtDoublePrime,
    Aq,
    Wq,
}

impl AlgebraId {
    pub const ALL: [AlgebraId; 6] = [
        AlgebraId::GLq2,
        AlgebraId::GLq2Ext,
        AlgebraId::GLq2ExtPrime,
        AlgebraId::GLq2ExtDoublePrime,
        AlgebraId::Aq,
        AlgebraId::Wq,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlgebraId::GLq2 => "glq2",
            AlgebraId::GLq2Ext => "glq2ext",
            AlgebraId::GLq2ExtPrime => "glq2ext1",
            AlgebraId::GLq2ExtDoublePrime => "glq2ext2",
            AlgebraId::Aq => "aq",
            AlgebraId::Wq => "wq",
        }
    }

    pub fn from_name(s: &str) -> Option<AlgebraId> {
        Self::ALL.iter().copied().find(|a| a.name() == s)
    }
}

fn q() -> Coeff {
    Coeff::q()
}

fn qi() -> Coeff {
    Coeff::qinv()
}

fn one() -> Coeff {
    Coeff::one()
}

fn glq2_rules() -> Vec<Rule> {
    vec![
        Rule::swap(B, A, qi()),
        Rule::swap(C, A, qi()),
        Rule::new(D, A, vec![(one(), vec![A, D]), (-Coeff::qdiff(), vec![B, C])]),
        Rule::swap(C, B, one()),
        Rule::swap(D, B, qi()),
        Rule::swap(D, C, qi()),
    ]
}

fn theta_rules(with_b: bool, with_c: bool) -> Vec<Rule> {
    let mut r = vec![Rule::swap(Theta, A, q()), Rule::swap(D, Theta, q())];
    if with_b {
        r.push(Rule::swap(Theta, B, one()));
    }
    if with_c {
        r.push(Rule::swap(Theta, C, one()));
    }
    r
}

fn identity_star(gens: &[Gen]) -> Vec<(Gen, Gen)> {
    gens.iter().map(|g| (*g, *g)).collect()
}

/// Presentation of a catalogued algebra. Stars fix every generator.
pub fn build_presentation(id: AlgebraId) -> Presentation {
    let ext_gens = vec![A, B, C, Theta, D];
    let (generators, rules, unit_pairs) = match id {
        AlgebraId::GLq2 => (vec![A, B, C, D], glq2_rules(), vec![]),
        AlgebraId::GLq2Ext => {
            let mut r = glq2_rules();
            r.extend(theta_rules(true, true));
            (ext_gens, r, vec![])
        }
        AlgebraId::GLq2ExtPrime => {
            // θ sits below c here so that θ can always reach an adjacent b.
            let mut r = glq2_rules();
            r.extend(theta_rules(false, false));
            r.push(Rule::swap(C, Theta, one()));
            (vec![A, B, Theta, C, D], r, vec![(B, Theta)])
        }
        AlgebraId::GLq2ExtDoublePrime => {
            let mut r = glq2_rules();
            r.extend(theta_rules(true, false));
            (ext_gens, r, vec![(C, Theta)])
        }
        AlgebraId::Aq => (
            vec![E, K, Kinv, F],
            vec![
                Rule::swap(K, E, qi()),
                Rule::new(F, E, vec![(one(), vec![E, F]), (-Coeff::qdiff(), vec![K, K])]),
                Rule::swap(F, K, qi()),
                Rule::swap(Kinv, E, q()),
                Rule::swap(F, Kinv, q()),
            ],
            vec![(K, Kinv)],
        ),
        AlgebraId::Wq => (
            vec![U, Ut, V, Vinv],
            vec![
                Rule::swap(Ut, U, one()),
                Rule::swap(V, U, qi()),
                Rule::swap(V, Ut, q()),
                Rule::swap(Vinv, U, q()),
                Rule::swap(Vinv, Ut, qi()),
            ],
            vec![(V, Vinv)],
        ),
    };
    let conj = identity_star(&generators);
    Presentation { name: id.name().to_string(), generators, rules, unit_pairs, conj }
}

pub fn algebra(id: AlgebraId) -> Algebra {
    Algebra::new(build_presentation(id)).expect("catalogued presentations are valid")
}

/// The free algebra on the generators of `id`.
pub fn free_algebra(id: AlgebraId) -> Algebra {
    let p = build_presentation(id);
    Algebra::new(Presentation::free(&format!("free-{}", p.name), p.generators)).unwrap()
}

/// The extended algebra with the `c b -> b c` rule removed.
pub fn faulty_glq2ext() -> Algebra {
    let mut p = build_presentation(AlgebraId::GLq2Ext);
    p.name = "glq2ext-missing-cb".into();
    p.rules.retain(|r| r.lhs != (C, B));
    Algebra::new(p).unwrap()
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum MapId {
    Delta,
    SmallDelta,
    DeltaA,
    BigDeltaA,
    DeltaW,
    BigDeltaWPoly,
    Q,
    QPrime,
    QDoublePrime,
    Iota,
    IotaW,
}

impl MapId {
    pub const ALL: [MapId; 11] = [
        MapId::Delta,
        MapId::SmallDelta,
        MapId::DeltaA,
        MapId::BigDeltaA,
        MapId::DeltaW,
        MapId::BigDeltaWPoly,
        MapId::Q,
        MapId::QPrime,
        MapId::QDoublePrime,
        MapId::Iota,
        MapId::IotaW,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MapId::Delta => "Delta",
            MapId::SmallDelta => "delta",
            MapId::DeltaA => "deltaA",
            MapId::BigDeltaA => "DeltaA",
            MapId::DeltaW => "deltaW",
            MapId::BigDeltaWPoly => "DeltaWpoly",
            MapId::Q => "Q",
            MapId::QPrime => "Qprime",
            MapId::QDoublePrime => "Qdoubleprime",
            MapId::Iota => "iota",
            MapId::IotaW => "iotaW",
        }
    }

    pub fn source(self) -> AlgebraId {
        match self {
            MapId::Delta | MapId::SmallDelta => AlgebraId::GLq2Ext,
            MapId::BigDeltaA => AlgebraId::GLq2,
            MapId::DeltaA => AlgebraId::Aq,
            MapId::DeltaW | MapId::BigDeltaWPoly | MapId::IotaW => AlgebraId::Wq,
            MapId::Q | MapId::QPrime | MapId::Iota => AlgebraId::GLq2ExtPrime,
            MapId::QDoublePrime => AlgebraId::GLq2ExtDoublePrime,
        }
    }

    pub fn target(self) -> AlgebraId {
        match self {
            MapId::Delta | MapId::SmallDelta => AlgebraId::GLq2Ext,
            MapId::BigDeltaA | MapId::DeltaA | MapId::Q => AlgebraId::Aq,
            MapId::DeltaW | MapId::BigDeltaWPoly | MapId::IotaW | MapId::QPrime | MapId::QDoublePrime => AlgebraId::Wq,
            MapId::Iota => AlgebraId::GLq2ExtDoublePrime,
        }
    }
}

/// `x ⊗ y`.
pub fn t2(x: Gen, y: Gen) -> NCPoly {
    NCPoly::letter(1, x).mul_free(&NCPoly::letter(2, y))
}

/// Product of generators at one site.
pub fn w(gs: &[Gen]) -> NCPoly {
    NCPoly::gens(gs)
}

pub fn g(x: Gen) -> NCPoly {
    NCPoly::gen(x)
}

fn arity1(name: &str, src: AlgebraId, tgt: AlgebraId, imgs: &[(Gen, NCPoly)]) -> GenMap {
    let mut m = GenMap::new(name, src.name(), tgt.name(), 1);
    for (x, p) in imgs {
        m.images.insert(*x, p.clone());
    }
    m
}

pub fn build_map(id: MapId) -> GenMap {
    let (src, tgt) = (id.source(), id.target());
    let mk2 = |imgs: Vec<(Gen, NCPoly)>| {
        let mut m = GenMap::new(id.name(), src.name(), tgt.name(), 2);
        for (x, p) in imgs {
            m.images.insert(x, p);
        }
        m
    };
    match id {
        MapId::Delta => mk2(vec![
            (A, t2(A, A).add(&t2(B, C))),
            (B, t2(A, B).add(&t2(B, D))),
            (C, t2(C, A).add(&t2(D, C))),
            (D, t2(C, B).add(&t2(D, D))),
        ]),
        MapId::SmallDelta => mk2(vec![
            (A, t2(A, Theta).add(&t2(B, A))),
            (Theta, t2(Theta, Theta)),
            (C, t2(C, C)),
            (B, t2(B, B)),
            (D, t2(C, D)),
        ]),
        MapId::DeltaA => mk2(vec![
            (E, t2(E, Kinv).add(&t2(K, E))),
            (F, t2(K, F)),
            (K, t2(K, K)),
            (Kinv, t2(Kinv, Kinv)),
        ]),
        MapId::BigDeltaA => {
            let q = build_map(MapId::Q);
            let mut m = q.compose(&build_map(MapId::Delta), &algebra(AlgebraId::Aq)).unwrap();
            m.name = id.name().into();
            m.source = src.name().into();
            m
        }
        MapId::DeltaW => mk2(vec![
            (U, t2(U, Vinv)),
            (Ut, t2(V, Ut)),
            (V, t2(V, V)),
            (Vinv, t2(Vinv, Vinv)),
        ]),
        MapId::BigDeltaWPoly => mk2(vec![(U, t2(U, U)), (Ut, t2(Ut, Ut)), (V, t2(U, V).add(&t2(V, Ut)))]),
        MapId::Q => arity1(id.name(), src, tgt, &[(A, g(E)), (B, g(K)), (C, g(K)), (Theta, g(Kinv)), (D, g(F))]),
        MapId::QPrime => {
            arity1(id.name(), src, tgt, &[(A, g(U)), (B, g(V)), (C, NCPoly::zero()), (Theta, g(Vinv)), (D, g(Ut))])
        }
        MapId::QDoublePrime => {
            arity1(id.name(), src, tgt, &[(A, g(U)), (B, NCPoly::zero()), (C, g(V)), (Theta, g(Vinv)), (D, g(Ut))])
        }
        MapId::Iota => arity1(id.name(), src, tgt, &[(A, g(A)), (B, g(C)), (C, g(B)), (Theta, g(Theta)), (D, g(D))]),
        MapId::IotaW => arity1(id.name(), src, tgt, &[(U, g(Ut)), (Ut, g(U)), (V, g(Vinv)), (Vinv, g(V))]),
    }
}

/// `Q` with source the other factor algebra, where the unit pair is `(c, θ)`.
pub fn q_on_double_prime() -> GenMap {
    let mut m = build_map(MapId::Q);
    m.name = "Q on glq2ext2".into();
    m.source = AlgebraId::GLq2ExtDoublePrime.name().into();
    m
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CentralElement {
    pub name: String,
    pub algebra: AlgebraId,
    pub value: NCPoly,
}

/// `a d - q b c`.
pub fn dq() -> NCPoly {
    w(&[A, D]).sub(&w(&[B, C]).scale(&q()))
}

/// `θ b`.
pub fn eta1() -> NCPoly {
    w(&[Theta, B])
}

/// `θ c`.
pub fn eta2() -> NCPoly {
    w(&[Theta, C])
}

/// `e f - q k²`.
pub fn cq() -> NCPoly {
    w(&[E, F]).sub(&w(&[K, K]).scale(&q()))
}

/// `u ũ`.
pub fn zq() -> NCPoly {
    w(&[U, Ut])
}

pub fn central_elements() -> Vec<CentralElement> {
    let ce = |name: &str, algebra, value| CentralElement { name: name.into(), algebra, value };
    vec![
        ce("Dq", AlgebraId::GLq2, dq()),
        ce("Dq", AlgebraId::GLq2Ext, dq()),
        ce("eta1", AlgebraId::GLq2Ext, eta1()),
        ce("eta2", AlgebraId::GLq2Ext, eta2()),
        ce("Cq", AlgebraId::Aq, cq()),
        ce("Zq", AlgebraId::Wq, zq()),
    ]
}

/// `[p, x]` for every generator `x`, in normal form.
pub fn commutators_with_generators(alg: &Algebra, p: &NCPoly) -> Vec<(Gen, NCPoly)> {
    alg.presentation().generators.iter().map(|x| (*x, alg.commutator(p, &g(*x)))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_presentation_is_confluent() {
        for id in AlgebraId::ALL {
            let rep = algebra(id).check_confluence();
            assert!(rep.is_confluent(), "{:?}: {:?}", id, rep.first_failure);
        }
    }

    #[test]
    fn glq2_rule_table_size() {
        assert_eq!(build_presentation(AlgebraId::GLq2).rules.len(), 6);
        assert_eq!(build_presentation(AlgebraId::GLq2).generators.len(), 4);
    }

    #[test]
    fn faulty_set_fails_on_named_overlap() {
        let rep = faulty_glq2ext().check_confluence();
        let f = rep.first_failure.expect("fault must be detected");
        assert_eq!(f.overlap, "d b a");
    }

    #[test]
    fn sample_normal_forms() {
        let gl = algebra(AlgebraId::GLq2);
        assert_eq!(gl.nf(&w(&[B, A])), w(&[A, B]).scale(&qi()));
        assert_eq!(gl.nf(&w(&[D, A])), w(&[A, D]).sub(&w(&[B, C]).scale(&Coeff::qdiff())));
        assert_eq!(gl.nf(&NCPoly::one()), NCPoly::one());
        let e1 = algebra(AlgebraId::GLq2ExtPrime);
        assert_eq!(e1.nf(&w(&[Theta, B])), NCPoly::one());
    }

    #[test]
    fn central_elements_commute() {
        for ce in central_elements() {
            let alg = algebra(ce.algebra);
            for (x, c) in commutators_with_generators(&alg, &ce.value) {
                assert!(c.is_zero(), "{} fails against {:?}", ce.name, x);
            }
        }
        let gl = algebra(AlgebraId::GLq2);
        assert!(!gl.commutator(&g(A), &g(B)).is_zero());
    }

    #[test]
    fn maps_are_homomorphisms() {
        for id in MapId::ALL {
            let m = build_map(id);
            let rep = m.verify_hom(&algebra(id.source()), &algebra(id.target()));
            assert!(rep.ok(), "{:?}: {:?}", id, rep.failed);
        }
    }
}
