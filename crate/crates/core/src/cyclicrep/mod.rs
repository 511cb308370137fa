//! Root-of-unity matrix representations: a floating-point channel for the RLL and transfer-matrix identities.

mod checks;

pub use checks::*;

use std::collections::{BTreeMap, HashMap};

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::catalog::{build_presentation, AlgebraId};
use crate::coeff::NPARAM;
use crate::error::{QbaxError, Result};
use crate::lmatrices::OpMatrix;
use crate::ncpoly::{Gen, NCPoly};

pub type C64 = Complex64;
pub type CMat = DMatrix<C64>;

/// Largest quantum-space dimension `N^sites` accepted by the transfer-matrix routines.
pub const MAX_TRANSFER_DIM: usize = 10_000;

/// Casimir value used when none is given; `|c| < 1` keeps `c + q^{2j+1}` away from zero.
pub const DEFAULT_C: C64 = C64::new(0.6, 0.3);

/// Images of the generators of one presentation as `N × N` matrices at `q = e^{2πi m/N}`.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixRep {
    pub algebra: AlgebraId,
    pub dim: usize,
    pub root: usize,
    pub z: Option<C64>,
    pub c: Option<C64>,
    pub images: BTreeMap<Gen, CMat>,
}

/// Serializable summary of a representation without its matrices.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RepSummary {
    pub algebra: String,
    pub dim: usize,
    pub root: usize,
    pub z: Option<C64>,
    pub c: Option<C64>,
    pub relations: Vec<(String, f64)>,
    pub central: Vec<(String, C64, f64)>,
}

fn root_of_unity(n: usize, m: usize) -> Result<C64> {
    if n < 2 {
        return Err(QbaxError::InvalidParameter(format!("dimension {n} below 2")));
    }
    if m.gcd(&n) != 1 {
        return Err(QbaxError::InvalidParameter(format!("root index {m} not coprime to {n}")));
    }
    Ok(C64::from_polar(1.0, 2.0 * std::f64::consts::PI * m as f64 / n as f64))
}

/// `diag(q⁰, …, q^{N−1})`.
pub fn clock(n: usize, q: C64) -> CMat {
    CMat::from_diagonal(&nalgebra::DVector::from_fn(n, |j, _| q.powi(j as i32)))
}

/// `e_j ↦ e_{j+1}` cyclically.
pub fn shift(n: usize) -> CMat {
    CMat::from_fn(n, n, |i, j| if i == (j + 1) % n { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) })
}

fn inverse(m: &CMat) -> Result<CMat> {
    m.clone().try_inverse().ok_or_else(|| QbaxError::InvalidParameter("singular generator image".into()))
}

/// Clock and shift: `u = clock`, `v = shift`, `ũ = z u⁻¹`.
pub fn weyl_rep(n: usize, m: usize, z: C64) -> Result<MatrixRep> {
    let q = root_of_unity(n, m)?;
    if z.norm() == 0.0 {
        return Err(QbaxError::InvalidParameter("z = 0".into()));
    }
    let u = clock(n, q);
    let v = shift(n);
    let ut = inverse(&u)? * z;
    let vinv = v.transpose();
    let images = BTreeMap::from([(Gen::U, u), (Gen::Ut, ut), (Gen::V, v), (Gen::Vinv, vinv)]);
    Ok(MatrixRep { algebra: AlgebraId::Wq, dim: n, root: m, z: Some(z), c: None, images })
}

/// `x_j = c + q^{2j+1}`, the eigenvalue of `e f` on `e_j`.
pub fn qosc_weights(n: usize, q: C64, c: C64) -> Vec<C64> {
    (0..n).map(|j| c + q.powi(2 * j as i32 + 1)).collect()
}

/// `k = clock`, `e e_j = e_{j−1}`, `f e_j = x_j e_{j+1}`.
pub fn qosc_rep(n: usize, m: usize, c: C64) -> Result<MatrixRep> {
    let q = root_of_unity(n, m)?;
    let x = qosc_weights(n, q, c);
    if let Some((j, xj)) = x.iter().enumerate().find(|(_, xj)| xj.norm() < 1e-9) {
        return Err(QbaxError::InvalidParameter(format!("c = {c} is degenerate: x_{j} = {xj}")));
    }
    let k = clock(n, q);
    let kinv = inverse(&k)?;
    let s = shift(n);
    let e = s.transpose();
    let f = &s * CMat::from_diagonal(&nalgebra::DVector::from_vec(x));
    let images = BTreeMap::from([(Gen::E, e), (Gen::K, k), (Gen::Kinv, kinv), (Gen::F, f)]);
    Ok(MatrixRep { algebra: AlgebraId::Aq, dim: n, root: m, z: None, c: Some(c), images })
}

/// Pullback of `qosc_rep` along `a → e`, `b, c → k`, `θ → k⁻¹`, `d → f`.
pub fn glq2ext_rep(n: usize, m: usize, c: C64) -> Result<MatrixRep> {
    let osc = qosc_rep(n, m, c)?;
    let img = |g: Gen| osc.images[&g].clone();
    let images = BTreeMap::from([
        (Gen::A, img(Gen::E)),
        (Gen::B, img(Gen::K)),
        (Gen::C, img(Gen::K)),
        (Gen::Theta, img(Gen::Kinv)),
        (Gen::D, img(Gen::F)),
    ]);
    Ok(MatrixRep { algebra: AlgebraId::GLq2Ext, images, ..osc })
}

/// `glq2ext_rep` restricted to `a, b, c, d`.
pub fn glq2_rep(n: usize, m: usize, c: C64) -> Result<MatrixRep> {
    let mut r = glq2ext_rep(n, m, c)?;
    r.images.remove(&Gen::Theta);
    r.algebra = AlgebraId::GLq2;
    Ok(r)
}

/// The standard representation of `algebra` at `q = e^{2πi m/N}`, with `z = 1` and `c = DEFAULT_C`.
pub fn rep_for(algebra: AlgebraId, n: usize, m: usize) -> Result<MatrixRep> {
    match algebra {
        AlgebraId::GLq2 => glq2_rep(n, m, DEFAULT_C),
        AlgebraId::GLq2Ext => glq2ext_rep(n, m, DEFAULT_C),
        AlgebraId::Aq => qosc_rep(n, m, DEFAULT_C),
        AlgebraId::Wq => weyl_rep(n, m, C64::new(1.0, 0.0)),
        other => Err(QbaxError::InvalidParameter(format!("no root-of-unity representation of {}", other.name()))),
    }
}

impl MatrixRep {
    pub fn q(&self) -> C64 {
        C64::from_polar(1.0, 2.0 * std::f64::consts::PI * self.root as f64 / self.dim as f64)
    }

    /// Parameter values `[q, λ, μ, z, c, β]` for coefficient evaluation.
    pub fn params(&self, lambda: C64, mu: C64) -> [C64; NPARAM] {
        let one = C64::new(1.0, 0.0);
        [self.q(), lambda, mu, self.z.unwrap_or(one), self.c.unwrap_or_default(), one]
    }

    pub fn image(&self, g: Gen) -> Result<&CMat> {
        self.images.get(&g).ok_or_else(|| QbaxError::UnknownGenerator(g.ascii().into(), self.algebra.name().into()))
    }

    /// `p` on `(C^N)^{⊗sites}`, site 1 the most significant factor.
    pub fn eval_poly(&self, p: &NCPoly, sites: usize, vals: &[C64; NPARAM]) -> Result<CMat> {
        let n = self.dim;
        let total = checked_dim(n, sites)?;
        let mut cache: HashMap<(u8, Gen), CMat> = HashMap::new();
        let mut acc = CMat::zeros(total, total);
        for (w, c) in p.terms() {
            let mut m = CMat::identity(total, total) * c.eval(vals);
            for l in w {
                if l.site == 0 || l.site as usize > sites {
                    return Err(QbaxError::Shape(format!("site {} outside 1..={sites}", l.site)));
                }
                if let std::collections::hash_map::Entry::Vacant(e) = cache.entry((l.site, l.gen)) {
                    let x = self.image(l.gen)?;
                    e.insert(embed_site(x, l.site as usize, sites));
                }
                m *= &cache[&(l.site, l.gen)];
            }
            acc += m;
        }
        Ok(acc)
    }

    /// Frobenius norms of the defining relations.
    pub fn relation_residuals(&self) -> Result<Vec<(String, f64)>> {
        let vals = self.params(C64::new(1.0, 0.0), C64::new(1.0, 0.0));
        build_presentation(self.algebra)
            .relations()
            .into_iter()
            .map(|(name, p)| Ok((name, self.eval_poly(&p, 1, &vals)?.norm())))
            .collect()
    }

    /// For each catalogued central element: its scalar value `tr/N` and the distance from that scalar.
    pub fn central_values(&self) -> Result<Vec<(String, C64, f64)>> {
        let vals = self.params(C64::new(1.0, 0.0), C64::new(1.0, 0.0));
        let mut out = Vec::new();
        for ce in crate::catalog::central_elements().into_iter().filter(|ce| ce.algebra == self.algebra) {
            let m = self.eval_poly(&ce.value, 1, &vals)?;
            let s = m.trace() / self.dim as f64;
            let off = (&m - CMat::identity(self.dim, self.dim) * s).norm();
            out.push((ce.name, s, off));
        }
        Ok(out)
    }

    pub fn summary(&self) -> Result<RepSummary> {
        Ok(RepSummary {
            algebra: self.algebra.name().into(),
            dim: self.dim,
            root: self.root,
            z: self.z,
            c: self.c,
            relations: self.relation_residuals()?,
            central: self.central_values()?,
        })
    }
}

fn checked_dim(n: usize, sites: usize) -> Result<usize> {
    let total = (0..sites).try_fold(1usize, |acc, _| acc.checked_mul(n)).filter(|&t| t <= MAX_TRANSFER_DIM);
    total.ok_or_else(|| QbaxError::InvalidParameter(format!("{n}^{sites} exceeds {MAX_TRANSFER_DIM}")))
}

/// `I ⊗ ⋯ ⊗ x ⊗ ⋯ ⊗ I` with `x` in factor `site` of `sites`.
pub fn embed_site(x: &CMat, site: usize, sites: usize) -> CMat {
    let n = x.nrows();
    let left = CMat::identity(n.pow(site as u32 - 1), n.pow(site as u32 - 1));
    let right = CMat::identity(n.pow((sites - site) as u32), n.pow((sites - site) as u32));
    left.kronecker(x).kronecker(&right)
}

/// A scalar matrix such as `R(λ)` evaluated at `vals`.
pub fn eval_scalar_matrix(m: &OpMatrix, vals: &[C64; NPARAM]) -> Result<CMat> {
    let d = m.dim();
    let mut out = CMat::zeros(d, d);
    for (i, j, p) in m.entries() {
        for (w, c) in p.terms() {
            if !w.is_empty() {
                return Err(QbaxError::Shape(format!("entry ({i},{j}) is not scalar")));
            }
            out[(i, j)] += c.eval(vals);
        }
    }
    Ok(out)
}

/// A one-leg matrix as a `2 × 2` block array of operators on `sites` factors.
pub fn eval_blocks(rep: &MatrixRep, l: &OpMatrix, sites: usize, vals: &[C64; NPARAM]) -> Result<[[CMat; 2]; 2]> {
    if l.legs() != 1 {
        return Err(QbaxError::Shape(format!("expected a 2x2 L-matrix, got {} legs", l.legs())));
    }
    let e = |i, j| rep.eval_poly(l.get(i, j), sites, vals);
    Ok([[e(0, 0)?, e(0, 1)?], [e(1, 0)?, e(1, 1)?]])
}

fn check_algebra(l: crate::lmatrices::LKind, rep: &MatrixRep) -> Result<()> {
    if l.algebra() != rep.algebra {
        return Err(QbaxError::Shape(format!(
            "{} lives in {}, representation is of {}",
            l.name(),
            l.algebra().name(),
            rep.algebra.name()
        )));
    }
    Ok(())
}

/// `‖R₁₂(λ) L₁₃(λμ) L₂₃(μ) − L₂₃(μ) L₁₃(λμ) R₁₂(λ)‖_F` on `C² ⊗ C² ⊗ C^N`.
pub fn rll_residual_num(
    r: crate::lmatrices::RKind,
    l: crate::lmatrices::LKind,
    rep: &MatrixRep,
    lambda: C64,
    mu: C64,
) -> Result<f64> {
    check_algebra(l, rep)?;
    let n = rep.dim;
    let rm = eval_scalar_matrix(&crate::lmatrices::build_r(r), &rep.params(lambda, mu))?;
    let lm = crate::lmatrices::build_l(l);
    let x = eval_blocks(rep, &lm, 1, &rep.params(lambda * mu, mu))?;
    let y = eval_blocks(rep, &lm, 1, &rep.params(mu, mu))?;
    let d = 4 * n;
    let r12 = rm.kronecker(&CMat::identity(n, n));
    let mut l13 = CMat::zeros(d, d);
    let mut l23 = CMat::zeros(d, d);
    for a in 0..2 {
        for b in 0..2 {
            for s in 0..2 {
                l13.view_mut(((2 * a + s) * n, (2 * b + s) * n), (n, n)).copy_from(&x[a][b]);
                l23.view_mut(((2 * s + a) * n, (2 * s + b) * n), (n, n)).copy_from(&y[a][b]);
            }
        }
    }
    Ok((&r12 * &l13 * &l23 - &l23 * &l13 * &r12).norm())
}

/// `tr(L_N(λ) ⋯ L_1(λ))` on `(C^N)^{⊗sites}`.
pub fn transfer_matrix_num(l: crate::lmatrices::LKind, rep: &MatrixRep, sites: usize, lambda: C64) -> Result<CMat> {
    check_algebra(l, rep)?;
    if sites == 0 {
        return Err(QbaxError::InvalidParameter("0 sites".into()));
    }
    checked_dim(rep.dim, sites)?;
    let lm = crate::lmatrices::build_l(l);
    let vals = rep.params(lambda, lambda);
    let mut acc = eval_blocks(rep, &lm.at_site(sites as u8), sites, &vals)?;
    for s in (1..sites).rev() {
        let b = eval_blocks(rep, &lm.at_site(s as u8), sites, &vals)?;
        let prod = |i: usize, j: usize| &acc[i][0] * &b[0][j] + &acc[i][1] * &b[1][j];
        acc = [[prod(0, 0), prod(0, 1)], [prod(1, 0), prod(1, 1)]];
    }
    Ok(&acc[0][0] + &acc[1][1])
}

/// `‖[T(λ), T(μ)]‖ / (‖T(λ)‖ ‖T(μ)‖)`.
pub fn transfer_commutator_num(
    l: crate::lmatrices::LKind,
    rep: &MatrixRep,
    sites: usize,
    lambda: C64,
    mu: C64,
) -> Result<f64> {
    let a = transfer_matrix_num(l, rep, sites, lambda)?;
    let b = transfer_matrix_num(l, rep, sites, mu)?;
    let scale = a.norm() * b.norm();
    if scale == 0.0 {
        return Ok(0.0);
    }
    Ok((&a * &b - &b * &a).norm() / scale)
}

/// Laurent coefficients `T_k`, `k ∈ [−width, width]`, of `T(λ)` from samples on the unit circle.
pub fn transfer_laurent_num(l: crate::lmatrices::LKind, rep: &MatrixRep, sites: usize, width: i32) -> Result<BTreeMap<i32, CMat>> {
    let samples = 4 * width as usize + 4;
    let ts: Vec<(C64, CMat)> = (0..samples)
        .map(|j| {
            let lam = C64::from_polar(1.0, 2.0 * std::f64::consts::PI * j as f64 / samples as f64);
            Ok((lam, transfer_matrix_num(l, rep, sites, lam)?))
        })
        .collect::<Result<_>>()?;
    Ok((-width..=width)
        .map(|k| {
            let sum = ts.iter().fold(CMat::zeros(ts[0].1.nrows(), ts[0].1.ncols()), |acc, (lam, t)| acc + t * lam.powi(-k));
            (k, sum / C64::new(samples as f64, 0.0))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weyl_relations() {
        let r = weyl_rep(3, 1, C64::new(1.0, 0.0)).unwrap();
        let (u, v) = (r.image(Gen::U).unwrap(), r.image(Gen::V).unwrap());
        assert!((u * v - v * u * r.q()).norm() < 1e-14);
        assert!(r.relation_residuals().unwrap().iter().all(|(_, x)| *x < 1e-12));
    }

    #[test]
    fn central_images() {
        let z = C64::new(0.5, 2.0);
        let w = weyl_rep(5, 2, z).unwrap();
        let (_, s, off) = &w.central_values().unwrap()[0];
        assert!((s - z).norm() < 1e-12 && *off < 1e-12);
        let a = qosc_rep(5, 1, DEFAULT_C).unwrap();
        let (_, s, off) = &a.central_values().unwrap()[0];
        assert!((s - DEFAULT_C).norm() < 1e-12 && *off < 1e-12);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(weyl_rep(6, 2, C64::new(1.0, 0.0)).is_err());
        assert!(weyl_rep(3, 1, C64::new(0.0, 0.0)).is_err());
        let q = root_of_unity(3, 1).unwrap();
        assert!(qosc_rep(3, 1, -q).is_err());
    }

    #[test]
    fn glq2ext_shares_images() {
        let r = glq2ext_rep(3, 1, DEFAULT_C).unwrap();
        assert_eq!(r.image(Gen::B).unwrap(), r.image(Gen::C).unwrap());
        assert!(r.relation_residuals().unwrap().iter().all(|(_, x)| *x < 1e-12));
    }

    #[test]
    fn transfer_size_bound() {
        let r = qosc_rep(7, 1, DEFAULT_C).unwrap();
        assert!(transfer_matrix_num(crate::lmatrices::LKind::LQdst, &r, 5, C64::new(1.0, 0.0)).is_err());
    }
}
