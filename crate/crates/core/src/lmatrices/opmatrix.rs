//! Square matrices over `NCPoly` acting on a tensor product of two-dimensional auxiliary legs.

use std::fmt;

use crate::algebra::Algebra;
use crate::coeff::{mono_of, Coeff, Param};
use crate::error::{QbaxError, Result};
use crate::ncpoly::NCPoly;

/// A `2^legs × 2^legs` matrix. Leg 0 is the most significant bit of a row or column index.
#[derive(Clone, PartialEq)]
pub struct OpMatrix {
    legs: usize,
    entries: Vec<NCPoly>,
}

impl OpMatrix {
    pub fn zero(legs: usize) -> Self {
        let n = 1 << legs;
        OpMatrix { legs, entries: vec![NCPoly::zero(); n * n] }
    }

    pub fn identity(legs: usize) -> Self {
        let mut m = Self::zero(legs);
        for i in 0..m.dim() {
            m.set(i, i, NCPoly::one());
        }
        m
    }

    /// Row-major entries; the length must be a power of four.
    pub fn from_rows(rows: Vec<Vec<NCPoly>>) -> Result<Self> {
        let n = rows.len();
        if !n.is_power_of_two() || n < 2 || rows.iter().any(|r| r.len() != n) {
            return Err(QbaxError::Shape(format!("expected a square 2^k matrix, got {n} rows")));
        }
        let legs = n.trailing_zeros() as usize;
        Ok(OpMatrix { legs, entries: rows.into_iter().flatten().collect() })
    }

    /// Matrix with scalar entries.
    pub fn scalar_rows(rows: Vec<Vec<Coeff>>) -> Self {
        Self::from_rows(rows.into_iter().map(|r| r.into_iter().map(NCPoly::scalar).collect()).collect())
            .expect("square scalar matrix")
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn dim(&self) -> usize {
        1 << self.legs
    }

    pub fn get(&self, i: usize, j: usize) -> &NCPoly {
        &self.entries[i * self.dim() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: NCPoly) {
        let n = self.dim();
        self.entries[i * n + j] = p;
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &NCPoly)> {
        let n = self.dim();
        self.entries.iter().enumerate().map(move |(k, p)| (k / n, k % n, p))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|p| p.is_zero())
    }

    /// Total number of surviving terms over all entries.
    pub fn term_count(&self) -> usize {
        self.entries.iter().map(|p| p.len()).sum()
    }

    pub fn map(&self, f: impl Fn(&NCPoly) -> NCPoly) -> Self {
        OpMatrix { legs: self.legs, entries: self.entries.iter().map(f).collect() }
    }

    pub fn try_map(&self, f: impl Fn(&NCPoly) -> Result<NCPoly>) -> Result<Self> {
        Ok(OpMatrix { legs: self.legs, entries: self.entries.iter().map(f).collect::<Result<_>>()? })
    }

    fn check_legs(&self, other: &OpMatrix) -> Result<()> {
        if self.legs != other.legs {
            return Err(QbaxError::Shape(format!("leg mismatch: {} vs {}", self.legs, other.legs)));
        }
        Ok(())
    }

    pub fn add(&self, other: &OpMatrix) -> Result<Self> {
        self.check_legs(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.add(b)).collect();
        Ok(OpMatrix { legs: self.legs, entries })
    }

    pub fn sub(&self, other: &OpMatrix) -> Result<Self> {
        self.check_legs(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.sub(b)).collect();
        Ok(OpMatrix { legs: self.legs, entries })
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        self.map(|p| p.scale(c))
    }

    /// Product with entries multiplied in the free algebra.
    pub fn mul_free(&self, other: &OpMatrix) -> Result<Self> {
        self.check_legs(other)?;
        let n = self.dim();
        let mut out = Self::zero(self.legs);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    out.entries[i * n + j].add_assign(&a.mul_free(b));
                }
            }
        }
        Ok(out)
    }

    /// Product of several matrices, normal-formed once at the end.
    pub fn product(alg: &Algebra, ms: &[&OpMatrix]) -> Result<Self> {
        let mut acc = OpMatrix::identity(ms.first().map_or(1, |m| m.legs));
        for m in ms {
            acc = alg.nf_matrix(&acc.mul_free(m)?);
        }
        Ok(acc)
    }

    pub fn mul(&self, alg: &Algebra, other: &OpMatrix) -> Result<Self> {
        Ok(alg.nf_matrix(&self.mul_free(other)?))
    }

    /// Places this matrix on the auxiliary legs `at` of a `total`-leg space, as the identity elsewhere.
    pub fn embed(&self, at: &[usize], total: usize) -> Result<Self> {
        if at.len() != self.legs || at.iter().any(|&l| l >= total) {
            return Err(QbaxError::Shape(format!("cannot embed {} legs at {:?} of {}", self.legs, at, total)));
        }
        let bit = |x: usize, leg: usize| (x >> (total - 1 - leg)) & 1;
        let local = |x: usize| at.iter().fold(0, |acc, &l| (acc << 1) | bit(x, l));
        let rest_mask: usize = (0..total).filter(|l| !at.contains(l)).map(|l| 1 << (total - 1 - l)).sum();
        let n = 1 << total;
        let mut out = Self::zero(total);
        for i in 0..n {
            for j in 0..n {
                if i & rest_mask == j & rest_mask {
                    let e = self.get(local(i), local(j));
                    if !e.is_zero() {
                        out.entries[i * n + j] = e.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    /// Substitutes `p -> image` in every coefficient.
    pub fn subst(&self, p: Param, image: &Coeff) -> Result<Self> {
        self.try_map(|e| e.try_map_coeffs(|c| c.subst(p, image)))
    }

    /// `λ -> λμ`.
    pub fn at_lambda_mu(&self) -> Self {
        let mut m = mono_of(Param::Lambda, 1);
        m[Param::Mu.index()] = 1;
        self.map(|e| e.map_coeffs(|c| c.subst_mono(Param::Lambda, &m)))
    }

    /// `λ -> μ`.
    pub fn at_mu(&self) -> Self {
        let m = mono_of(Param::Mu, 1);
        self.map(|e| e.map_coeffs(|c| c.subst_mono(Param::Lambda, &m)))
    }

    /// Moves every quantum letter to `site`.
    pub fn at_site(&self, site: u8) -> Self {
        self.map(|e| e.at_site(site))
    }

    /// Conjugation `x^{s σ₃/2} M x^{-s σ₃/2}` on leg `leg`, with `x` the parameter `p`.
    pub fn twist(&self, leg: usize, p: Param, s: i32) -> Self {
        let n = self.dim();
        let sign = |x: usize| if (x >> (self.legs - 1 - leg)) & 1 == 0 { 1 } else { -1 };
        let mut out = self.clone();
        for i in 0..n {
            for j in 0..n {
                let e = s * (sign(i) - sign(j)) / 2;
                if e != 0 {
                    let m = mono_of(p, e);
                    out.entries[i * n + j] = self.get(i, j).map_coeffs(|c| c.mul_mono(&m));
                }
            }
        }
        out
    }

    /// Trace over all auxiliary legs.
    pub fn trace(&self) -> NCPoly {
        let mut t = NCPoly::zero();
        for i in 0..self.dim() {
            t.add_assign(self.get(i, i));
        }
        t
    }

    /// Laurent coefficient of `p^e` entrywise.
    pub fn coeff_of(&self, p: Param, e: i32) -> Self {
        self.map(|x| x.coeff_of(p, e))
    }

    /// `MN - NM`.
    pub fn commutator(&self, alg: &Algebra, other: &OpMatrix) -> Result<Self> {
        Ok(alg.nf_matrix(&self.mul_free(other)?.sub(&other.mul_free(self)?)?))
    }
}

impl Algebra {
    pub fn nf_matrix(&self, m: &OpMatrix) -> OpMatrix {
        m.map(|e| self.nf(e))
    }
}

impl fmt::Display for OpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim();
        for i in 0..n {
            let row: Vec<String> = (0..n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for OpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpoly::Gen;

    fn x(g: Gen) -> NCPoly {
        NCPoly::gen(g)
    }

    #[test]
    fn embed_matches_kronecker_layout() {
        let m = OpMatrix::from_rows(vec![vec![x(Gen::A), x(Gen::B)], vec![x(Gen::C), x(Gen::D)]]).unwrap();
        let l13 = m.embed(&[0], 2).unwrap();
        let l23 = m.embed(&[1], 2).unwrap();
        assert_eq!(l13.get(0, 2), &x(Gen::B));
        assert_eq!(l13.get(1, 3), &x(Gen::B));
        assert!(l13.get(0, 1).is_zero());
        assert_eq!(l23.get(0, 1), &x(Gen::B));
        assert_eq!(l23.get(2, 3), &x(Gen::B));
        assert!(l23.get(0, 2).is_zero());
    }

    #[test]
    fn twist_scales_off_diagonal() {
        let m = OpMatrix::from_rows(vec![vec![x(Gen::A), x(Gen::B)], vec![x(Gen::C), x(Gen::D)]]).unwrap();
        let t = m.twist(0, Param::Lambda, 1);
        assert_eq!(t.get(0, 1), &x(Gen::B).scale(&Coeff::param(Param::Lambda, 1)));
        assert_eq!(t.get(1, 0), &x(Gen::C).scale(&Coeff::param(Param::Lambda, -1)));
        assert_eq!(t.get(0, 0), &x(Gen::A));
    }

    #[test]
    fn identity_trace() {
        assert_eq!(OpMatrix::identity(1).trace(), NCPoly::scalar(Coeff::from_int(2)));
    }
}
