//! Constant and spectral R-matrices and the catalogued L-matrices.

use serde::{Deserialize, Serialize};

use crate::catalog::{build_map, AlgebraId, MapId};
use crate::coeff::{Coeff, Param};
use crate::error::{QbaxError, Result};
use crate::genmap::GenMap;
use crate::ncpoly::{Gen, NCPoly};

use super::OpMatrix;
use Gen::*;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RKind {
    /// Constant `R⁺`.
    Plus,
    /// Constant `R⁻ = (R⁺₂₁)⁻¹`.
    Minus,
    /// `R̂(λ) = λR⁺ − λ⁻¹R⁻`.
    Hat,
    /// `R(λ) = λ^{σ₃/2⊗1} R̂(λ) λ^{−σ₃/2⊗1}`.
    Sym,
    /// Permutation of the two legs.
    Perm,
}

impl RKind {
    pub const ALL: [RKind; 5] = [RKind::Plus, RKind::Minus, RKind::Hat, RKind::Sym, RKind::Perm];

    pub fn name(self) -> &'static str {
        match self {
            RKind::Plus => "R+",
            RKind::Minus => "R-",
            RKind::Hat => "Rhat",
            RKind::Sym => "R",
            RKind::Perm => "P",
        }
    }

    pub fn from_name(s: &str) -> Option<RKind> {
        Self::ALL.into_iter().find(|k| k.name() == s)
    }

    pub fn is_spectral(self) -> bool {
        matches!(self, RKind::Hat | RKind::Sym)
    }
}

fn lam(e: i32) -> Coeff {
    Coeff::param(Param::Lambda, e)
}

/// `ϖ(q^a λ^b) = q^a λ^b − q^{−a} λ^{−b}`.
pub fn varpi(a: i32, b: i32) -> Coeff {
    &Coeff::q_pow(a) * &lam(b) - &Coeff::q_pow(-a) * &lam(-b)
}

pub fn build_r(kind: RKind) -> OpMatrix {
    let z = Coeff::zero;
    let one = Coeff::one;
    let qd = Coeff::qdiff();
    match kind {
        RKind::Plus => OpMatrix::scalar_rows(vec![
            vec![Coeff::q(), z(), z(), z()],
            vec![z(), one(), z(), z()],
            vec![z(), qd, one(), z()],
            vec![z(), z(), z(), Coeff::q()],
        ]),
        RKind::Minus => OpMatrix::scalar_rows(vec![
            vec![Coeff::qinv(), z(), z(), z()],
            vec![z(), one(), -&qd, z()],
            vec![z(), z(), one(), z()],
            vec![z(), z(), z(), Coeff::qinv()],
        ]),
        RKind::Hat => OpMatrix::scalar_rows(vec![
            vec![varpi(1, 1), z(), z(), z()],
            vec![z(), varpi(0, 1), &lam(-1) * &qd, z()],
            vec![z(), &lam(1) * &qd, varpi(0, 1), z()],
            vec![z(), z(), z(), varpi(1, 1)],
        ]),
        RKind::Sym => OpMatrix::scalar_rows(vec![
            vec![varpi(1, 1), z(), z(), z()],
            vec![z(), varpi(0, 1), qd.clone(), z()],
            vec![z(), qd, varpi(0, 1), z()],
            vec![z(), z(), z(), varpi(1, 1)],
        ]),
        RKind::Perm => OpMatrix::scalar_rows(vec![
            vec![one(), z(), z(), z()],
            vec![z(), z(), one(), z()],
            vec![z(), one(), z(), z()],
            vec![z(), z(), z(), one()],
        ]),
    }
}

pub fn sigma1() -> OpMatrix {
    OpMatrix::scalar_rows(vec![vec![Coeff::zero(), Coeff::one()], vec![Coeff::one(), Coeff::zero()]])
}

pub fn sigma3() -> OpMatrix {
    OpMatrix::scalar_rows(vec![vec![Coeff::one(), Coeff::zero()], vec![Coeff::zero(), Coeff::from_int(-1)]])
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LKind {
    /// Constant `[[a, b], [c, d]]`.
    GConst,
    /// `[[a, λb], [λ⁻¹c, d]]`.
    RomanG,
    /// `[[λ⁻¹c, λ⁻¹d], [λa, λb]]`.
    RomanGHat,
    /// `[[θ, 0], [a, b]]`.
    GPlus,
    /// `[[c, d], [0, 0]]`.
    GMinus,
    /// `[[a, λb], [λθ + λ⁻¹c, d]]`.
    G,
    /// `[[λθ + λ⁻¹c, λ⁻¹d], [λa, λb]]`.
    GHat,
    /// Constant `[[e, k], [k, f]]`.
    QG,
    /// `[[e, λk], [λk⁻¹ + λ⁻¹k, f]]`.
    LA,
    /// `[[λk⁻¹ + λ⁻¹k, λ⁻¹f], [λe, λk]]`.
    LAHat,
    /// `[[λk⁻¹ + λ⁻¹k, f], [e, λk]]`.
    LQdst,
    /// `[[u, λv], [λv⁻¹, ũ]]`.
    GPrime,
    /// `[[λv⁻¹, ũ], [u, λv]]`.
    GCheckPrime,
    /// `[[u, 0], [λv⁻¹ + λ⁻¹v, ũ]]`.
    GDoublePrime,
    /// `[[λv⁻¹ + λ⁻¹v, λ⁻¹ũ], [λu, 0]]`.
    GHatDoublePrime,
    /// `[[λv⁻¹ − λ⁻¹v, −ũ], [u, 0]]`.
    LToda,
}

impl LKind {
    pub const ALL: [LKind; 16] = [
        LKind::GConst,
        LKind::RomanG,
        LKind::RomanGHat,
        LKind::GPlus,
        LKind::GMinus,
        LKind::G,
        LKind::GHat,
        LKind::QG,
        LKind::LA,
        LKind::LAHat,
        LKind::LQdst,
        LKind::GPrime,
        LKind::GCheckPrime,
        LKind::GDoublePrime,
        LKind::GHatDoublePrime,
        LKind::LToda,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LKind::GConst => "g",
            LKind::RomanG => "rg",
            LKind::RomanGHat => "rghat",
            LKind::GPlus => "gplus",
            LKind::GMinus => "gminus",
            LKind::G => "g(l)",
            LKind::GHat => "ghat(l)",
            LKind::QG => "Qg",
            LKind::LA => "LA",
            LKind::LAHat => "LAhat",
            LKind::LQdst => "LqDST",
            LKind::GPrime => "gprime",
            LKind::GCheckPrime => "gcheckprime",
            LKind::GDoublePrime => "gdoubleprime",
            LKind::GHatDoublePrime => "ghatdoubleprime",
            LKind::LToda => "LrT",
        }
    }

    pub fn from_name(s: &str) -> Option<LKind> {
        Self::ALL.into_iter().find(|k| k.name() == s)
    }

    pub fn algebra(self) -> AlgebraId {
        match self {
            LKind::GConst | LKind::RomanG | LKind::RomanGHat => AlgebraId::GLq2,
            LKind::GPlus | LKind::GMinus | LKind::G | LKind::GHat => AlgebraId::GLq2Ext,
            LKind::QG | LKind::LA | LKind::LAHat | LKind::LQdst => AlgebraId::Aq,
            LKind::GPrime
            | LKind::GCheckPrime
            | LKind::GDoublePrime
            | LKind::GHatDoublePrime
            | LKind::LToda => AlgebraId::Wq,
        }
    }

    pub fn is_spectral(self) -> bool {
        !matches!(self, LKind::GConst | LKind::GPlus | LKind::GMinus | LKind::QG)
    }
}

fn x(c: Coeff, g: Gen) -> NCPoly {
    NCPoly::gen(g).scale(&c)
}

fn one(g: Gen) -> NCPoly {
    NCPoly::gen(g)
}

fn m2(e: [[NCPoly; 2]; 2]) -> OpMatrix {
    let [[a, b], [c, d]] = e;
    OpMatrix::from_rows(vec![vec![a, b], vec![c, d]]).expect("2x2")
}

/// The L-matrix of `kind` over its own algebra, quantum letters at site 1.
pub fn build_l(kind: LKind) -> OpMatrix {
    let z = NCPoly::zero;
    match kind {
        LKind::GConst => m2([[one(A), one(B)], [one(C), one(D)]]),
        LKind::RomanG => m2([[one(A), x(lam(1), B)], [x(lam(-1), C), one(D)]]),
        LKind::RomanGHat => m2([[x(lam(-1), C), x(lam(-1), D)], [x(lam(1), A), x(lam(1), B)]]),
        LKind::GPlus => m2([[one(Theta), z()], [one(A), one(B)]]),
        LKind::GMinus => m2([[one(C), one(D)], [z(), z()]]),
        LKind::G => m2([[one(A), x(lam(1), B)], [x(lam(1), Theta).add(&x(lam(-1), C)), one(D)]]),
        LKind::GHat => m2([[x(lam(1), Theta).add(&x(lam(-1), C)), x(lam(-1), D)], [x(lam(1), A), x(lam(1), B)]]),
        LKind::QG => m2([[one(E), one(K)], [one(K), one(F)]]),
        LKind::LA => m2([[one(E), x(lam(1), K)], [x(lam(1), Kinv).add(&x(lam(-1), K)), one(F)]]),
        LKind::LAHat => m2([[x(lam(1), Kinv).add(&x(lam(-1), K)), x(lam(-1), F)], [x(lam(1), E), x(lam(1), K)]]),
        LKind::LQdst => m2([[x(lam(1), Kinv).add(&x(lam(-1), K)), one(F)], [one(E), x(lam(1), K)]]),
        LKind::GPrime => m2([[one(U), x(lam(1), V)], [x(lam(1), Vinv), one(Ut)]]),
        LKind::GCheckPrime => m2([[x(lam(1), Vinv), one(Ut)], [one(U), x(lam(1), V)]]),
        LKind::GDoublePrime => m2([[one(U), z()], [x(lam(1), Vinv).add(&x(lam(-1), V)), one(Ut)]]),
        LKind::GHatDoublePrime => m2([[x(lam(1), Vinv).add(&x(lam(-1), V)), x(lam(-1), Ut)], [x(lam(1), U), z()]]),
        LKind::LToda => m2([[x(lam(1), Vinv).sub(&x(lam(-1), V)), one(Ut).neg()], [one(U), z()]]),
    }
}

/// Builds `kind`, failing when `alg` is not its algebra.
pub fn build_l_checked(kind: LKind, alg: AlgebraId) -> Result<OpMatrix> {
    if kind.algebra() != alg {
        return Err(QbaxError::InvalidParameter(format!(
            "{} lives over {}, not {}",
            kind.name(),
            kind.algebra().name(),
            alg.name()
        )));
    }
    Ok(build_l(kind))
}

/// Applies an arity-1 map to every entry without normal-forming.
pub fn map_entries(m: &GenMap, l: &OpMatrix) -> Result<OpMatrix> {
    l.try_map(|e| m.apply_free(e))
}

/// The L-matrices that are images of a catalogued one under a catalogued map.
pub fn image_relations() -> Vec<(LKind, MapId, LKind)> {
    vec![
        (LKind::LA, MapId::Q, LKind::G),
        (LKind::LAHat, MapId::Q, LKind::GHat),
        (LKind::QG, MapId::Q, LKind::GConst),
        (LKind::GPrime, MapId::QPrime, LKind::G),
        (LKind::GDoublePrime, MapId::QDoublePrime, LKind::G),
        (LKind::GHatDoublePrime, MapId::QDoublePrime, LKind::GHat),
    ]
}

/// `map(source)` as built through the catalogued map.
pub fn mapped(map: MapId, source: LKind) -> Result<OpMatrix> {
    map_entries(&build_map(map), &build_l(source))
}
