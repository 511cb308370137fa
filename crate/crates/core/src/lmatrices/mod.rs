//! R-matrices, L-matrices and the matrix identities between them.

mod checks;
mod kinds;
mod opmatrix;

pub use checks::*;
pub use kinds::*;
pub use opmatrix::OpMatrix;

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::coeff::{Coeff, Param};
use crate::error::{QbaxError, Result};
use crate::ncpoly::NCPoly;

/// Default bound on transfer-matrix sites.
pub const DEFAULT_MAX_SITES: usize = 3;

/// `R₁₂ L₁₃(λμ) L₂₃(μ) − L₂₃(μ) L₁₃(λμ) R₁₂` in normal form.
pub fn rll_residual(alg: &Algebra, r: &OpMatrix, l: &OpMatrix) -> Result<OpMatrix> {
    if r.legs() != 2 || l.legs() != 1 {
        return Err(QbaxError::Shape(format!("RLL needs a 4x4 R and a 2x2 L, got {} and {} legs", r.legs(), l.legs())));
    }
    let l13 = l.at_lambda_mu().embed(&[0], 2)?;
    let l23 = l.at_mu().embed(&[1], 2)?;
    let lhs = r.mul_free(&l13)?.mul_free(&l23)?;
    let rhs = l23.mul_free(&l13)?.mul_free(r)?;
    Ok(alg.nf_matrix(&lhs.sub(&rhs)?))
}

/// Constant RLL residual `R₁₂ X₁₃ Y₂₃ − Y₂₃ X₁₃ R₁₂` for two constant L-matrices.
pub fn mixed_rll_residual(alg: &Algebra, r: &OpMatrix, x: &OpMatrix, y: &OpMatrix) -> Result<OpMatrix> {
    let x13 = x.embed(&[0], 2)?;
    let y23 = y.embed(&[1], 2)?;
    let lhs = r.mul_free(&x13)?.mul_free(&y23)?;
    let rhs = y23.mul_free(&x13)?.mul_free(r)?;
    Ok(alg.nf_matrix(&lhs.sub(&rhs)?))
}

/// Bilinear combinations of the entries `[[A, B], [C, D]]` tried as the q-determinant.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QdetConvention {
    /// `AD − qBC`
    AdQBc,
    /// `AD − q⁻¹BC`
    AdQinvBc,
    /// `DA − qCB`
    DaQCb,
    /// `DA − q⁻¹CB`
    DaQinvCb,
}

impl QdetConvention {
    pub const ALL: [QdetConvention; 4] =
        [QdetConvention::AdQBc, QdetConvention::AdQinvBc, QdetConvention::DaQCb, QdetConvention::DaQinvCb];

    pub fn label(self) -> &'static str {
        match self {
            QdetConvention::AdQBc => "AD - q BC",
            QdetConvention::AdQinvBc => "AD - q^-1 BC",
            QdetConvention::DaQCb => "DA - q CB",
            QdetConvention::DaQinvCb => "DA - q^-1 CB",
        }
    }
}

pub fn qdet(alg: &Algebra, m: &OpMatrix, conv: QdetConvention) -> Result<NCPoly> {
    if m.legs() != 1 {
        return Err(QbaxError::Shape("q-determinant needs a 2x2 matrix".into()));
    }
    let (a, b, c, d) = (m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1));
    let p = match conv {
        QdetConvention::AdQBc => a.mul_free(d).sub(&b.mul_free(c).scale(&Coeff::q())),
        QdetConvention::AdQinvBc => a.mul_free(d).sub(&b.mul_free(c).scale(&Coeff::qinv())),
        QdetConvention::DaQCb => d.mul_free(a).sub(&c.mul_free(b).scale(&Coeff::q())),
        QdetConvention::DaQinvCb => d.mul_free(a).sub(&c.mul_free(b).scale(&Coeff::qinv())),
    };
    Ok(alg.nf(&p))
}

/// `tr(L_N(λ) ⋯ L_1(λ))` with copy `n` of `l` on site `n`.
pub fn transfer_matrix(alg: &Algebra, l: &OpMatrix, sites: usize, max_sites: usize) -> Result<NCPoly> {
    if sites == 0 || sites > max_sites || sites > u8::MAX as usize {
        return Err(QbaxError::InvalidParameter(format!("{sites} sites outside 1..={max_sites}")));
    }
    let mut acc = l.at_site(sites as u8);
    for n in (1..sites).rev() {
        acc = acc.mul(alg, &l.at_site(n as u8))?;
    }
    Ok(acc.trace())
}

/// `T(λ)T(μ) − T(μ)T(λ)` in normal form.
pub fn transfer_commutator(alg: &Algebra, l: &OpMatrix, sites: usize, max_sites: usize) -> Result<NCPoly> {
    let t = transfer_matrix(alg, l, sites, max_sites)?;
    let m = crate::coeff::mono_of(Param::Mu, 1);
    let tm = t.map_coeffs(|c| c.subst_mono(Param::Lambda, &m));
    Ok(alg.commutator(&t, &tm))
}

/// `R₁₂(λ) R₁₃(λμ) R₂₃(μ) − R₂₃(μ) R₁₃(λμ) R₁₂(λ)` on three legs.
pub fn ybe_residual(alg: &Algebra, r: &OpMatrix) -> Result<OpMatrix> {
    let r12 = r.embed(&[0, 1], 3)?;
    let r13 = r.at_lambda_mu().embed(&[0, 2], 3)?;
    let r23 = r.at_mu().embed(&[1, 2], 3)?;
    let lhs = r12.mul_free(&r13)?.mul_free(&r23)?;
    let rhs = r23.mul_free(&r13)?.mul_free(&r12)?;
    Ok(alg.nf_matrix(&lhs.sub(&rhs)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{algebra, AlgebraId};
    use crate::ncpoly::Gen;

    fn lam(e: i32) -> Coeff {
        Coeff::param(Param::Lambda, e)
    }

    #[test]
    fn r_matrix_entries() {
        let rp = build_r(RKind::Plus);
        assert_eq!(rp.get(0, 0), &NCPoly::scalar(Coeff::q()));
        assert_eq!(rp.get(2, 1), &NCPoly::scalar(Coeff::qdiff()));
        assert_eq!(build_r(RKind::Sym).get(1, 2), &NCPoly::scalar(Coeff::qdiff()));
    }

    #[test]
    fn g_lambda_entries() {
        let g = build_l(LKind::G);
        let want = NCPoly::gen(Gen::Theta).scale(&lam(1)).add(&NCPoly::gen(Gen::C).scale(&lam(-1)));
        assert_eq!(g.get(1, 0), &want);
    }

    #[test]
    fn ghat_is_baxterized() {
        let gp = build_l(LKind::GPlus).scale(&lam(1));
        let gm = build_l(LKind::GMinus).scale(&lam(-1));
        assert_eq!(build_l(LKind::GHat), gp.add(&gm).unwrap());
    }

    #[test]
    fn mismatched_algebra_is_an_error() {
        assert!(build_l_checked(LKind::LA, AlgebraId::GLq2).is_err());
        assert!(build_l_checked(LKind::LA, AlgebraId::Aq).is_ok());
    }

    #[test]
    fn transfer_respects_site_bound() {
        let alg = algebra(AlgebraId::GLq2);
        assert!(transfer_matrix(&alg, &build_l(LKind::RomanG), 4, DEFAULT_MAX_SITES).is_err());
        assert!(transfer_matrix(&alg, &build_l(LKind::RomanG), 0, DEFAULT_MAX_SITES).is_err());
    }

    #[test]
    fn rll_rejects_wrong_legs() {
        let alg = algebra(AlgebraId::GLq2);
        assert!(rll_residual(&alg, &build_l(LKind::GConst), &build_l(LKind::GConst)).is_err());
    }

    #[test]
    fn every_lmatrix_check_passes() {
        let cfg = crate::report::RunConfig::default();
        for c in checks() {
            let o = (c.run)(&cfg);
            assert!(o.passed, "{}: {}", c.id, o.detail);
        }
    }
}
