//! Differential polynomials in one light-cone field and the zero-curvature presets.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::coeff::{Coeff, Param};
use crate::error::{QbaxError, Result};

/// Light-cone derivation `∂± = ∂_t ± ∂_x`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Dir {
    Plus,
    Minus,
}

/// Exponent `(a β + b)` of `e^{(aβ + b)Φ}`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Exponent {
    pub beta: Rational64,
    pub plain: Rational64,
}

impl Exponent {
    pub fn zero() -> Self {
        Exponent { beta: Rational64::zero(), plain: Rational64::zero() }
    }

    pub fn beta(r: Rational64) -> Self {
        Exponent { beta: r, plain: Rational64::zero() }
    }

    pub fn plain(r: Rational64) -> Self {
        Exponent { beta: Rational64::zero(), plain: r }
    }

    fn add(self, o: Exponent) -> Exponent {
        Exponent { beta: self.beta + o.beta, plain: self.plain + o.plain }
    }

    fn is_zero(self) -> bool {
        self.beta.is_zero() && self.plain.is_zero()
    }

    /// The exponent as a coefficient, `aβ + b`.
    fn as_coeff(self) -> Coeff {
        &Coeff::param(Param::Beta, 1).scale(self.beta) + &Coeff::from_rat(self.plain)
    }
}

/// `Φ^φ (∂₊Φ)^p (∂₋Φ)^m (∂₊∂₋Φ)^b e^{xΦ}`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DiffMono {
    pub phi: u32,
    pub dp: u32,
    pub dm: u32,
    pub box_: u32,
    pub exp: Exponent,
}

impl DiffMono {
    pub fn one() -> Self {
        DiffMono { phi: 0, dp: 0, dm: 0, box_: 0, exp: Exponent::zero() }
    }

    fn mul(self, o: DiffMono) -> DiffMono {
        DiffMono {
            phi: self.phi + o.phi,
            dp: self.dp + o.dp,
            dm: self.dm + o.dm,
            box_: self.box_ + o.box_,
            exp: self.exp.add(o.exp),
        }
    }
}

/// Finite sum of monomials with coefficients in `λ`, `β`; no zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct DiffExpr {
    terms: BTreeMap<DiffMono, Coeff>,
}

impl DiffExpr {
    pub fn zero() -> Self {
        DiffExpr::default()
    }

    pub fn term(c: Coeff, m: DiffMono) -> Self {
        let mut e = DiffExpr::zero();
        e.add_term(m, &c);
        e
    }

    pub fn scalar(c: Coeff) -> Self {
        DiffExpr::term(c, DiffMono::one())
    }

    pub fn phi() -> Self {
        DiffExpr::term(Coeff::one(), DiffMono { phi: 1, ..DiffMono::one() })
    }

    pub fn d_phi(d: Dir) -> Self {
        let m = match d {
            Dir::Plus => DiffMono { dp: 1, ..DiffMono::one() },
            Dir::Minus => DiffMono { dm: 1, ..DiffMono::one() },
        };
        DiffExpr::term(Coeff::one(), m)
    }

    /// `∂₊∂₋Φ = □Φ`.
    pub fn box_phi() -> Self {
        DiffExpr::term(Coeff::one(), DiffMono { box_: 1, ..DiffMono::one() })
    }

    pub fn exp(x: Exponent) -> Self {
        DiffExpr::term(Coeff::one(), DiffMono { exp: x, ..DiffMono::one() })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DiffMono, &Coeff)> {
        self.terms.iter()
    }

    fn add_term(&mut self, m: DiffMono, c: &Coeff) {
        let e = self.terms.entry(m).or_insert_with(Coeff::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, o: &DiffExpr) -> DiffExpr {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c);
        }
        out
    }

    pub fn sub(&self, o: &DiffExpr) -> DiffExpr {
        self.add(&o.scale(&Coeff::from_int(-1)))
    }

    pub fn scale(&self, c: &Coeff) -> DiffExpr {
        let mut out = DiffExpr::zero();
        for (m, x) in &self.terms {
            out.add_term(*m, &(x * c));
        }
        out
    }

    pub fn mul(&self, o: &DiffExpr) -> DiffExpr {
        let mut out = DiffExpr::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(m1.mul(*m2), &(c1 * c2));
            }
        }
        out
    }

    fn pow(&self, n: u32) -> DiffExpr {
        (0..n).fold(DiffExpr::scalar(Coeff::one()), |acc, _| acc.mul(self))
    }

    /// `∂±` by the Leibniz rule; `∂₊²Φ`, `∂₋²Φ` and derivatives of `□Φ` are outside the symbol set.
    pub fn deriv(&self, d: Dir) -> Result<DiffExpr> {
        let mut out = DiffExpr::zero();
        let n = |k: u32| Coeff::from_int(k as i64);
        for (m, c) in &self.terms {
            if m.box_ > 0 {
                return Err(QbaxError::Shape("derivative of □Φ is not representable".into()));
            }
            let (same, other) = match d {
                Dir::Plus => (m.dp, m.dm),
                Dir::Minus => (m.dm, m.dp),
            };
            if same > 0 {
                return Err(QbaxError::Shape("second derivative along one light-cone direction".into()));
            }
            let with = |mono: DiffMono, k: Coeff| DiffExpr::term(c * &k, mono);
            let bump = |mut mono: DiffMono| {
                match d {
                    Dir::Plus => mono.dp += 1,
                    Dir::Minus => mono.dm += 1,
                }
                mono
            };
            if m.phi > 0 {
                out = out.add(&with(bump(DiffMono { phi: m.phi - 1, ..*m }), n(m.phi)));
            }
            if other > 0 {
                let mut mono = match d {
                    Dir::Plus => DiffMono { dm: m.dm - 1, ..*m },
                    Dir::Minus => DiffMono { dp: m.dp - 1, ..*m },
                };
                mono.box_ += 1;
                out = out.add(&with(mono, n(other)));
            }
            if !m.exp.is_zero() {
                out = out.add(&with(bump(*m), m.exp.as_coeff()));
            }
        }
        Ok(out)
    }

    /// Replaces every `□Φ` by `rhs`.
    pub fn reduce_box(&self, rhs: &DiffExpr) -> DiffExpr {
        let mut out = DiffExpr::zero();
        for (m, c) in &self.terms {
            let rest = DiffExpr::term(c.clone(), DiffMono { box_: 0, ..*m });
            out = out.add(&rest.mul(&rhs.pow(m.box_)));
        }
        out
    }
}

impl fmt::Display for DiffExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", c.to_ascii())?;
            let mut pw = |name: &str, k: u32| -> fmt::Result {
                match k {
                    0 => Ok(()),
                    1 => write!(f, "*{name}"),
                    _ => write!(f, "*{name}^{k}"),
                }
            };
            pw("Phi", m.phi)?;
            pw("d+Phi", m.dp)?;
            pw("d-Phi", m.dm)?;
            pw("boxPhi", m.box_)?;
            if !m.exp.is_zero() {
                write!(f, "*exp(({}*beta + {})*Phi)", m.exp.beta, m.exp.plain)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for DiffExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub type DiffMatrix = [[DiffExpr; 2]; 2];

fn mat_mul(a: &DiffMatrix, b: &DiffMatrix) -> DiffMatrix {
    let e = |i: usize, j: usize| a[i][0].mul(&b[0][j]).add(&a[i][1].mul(&b[1][j]));
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

fn mat_zip(a: &DiffMatrix, b: &DiffMatrix, f: impl Fn(&DiffExpr, &DiffExpr) -> DiffExpr) -> DiffMatrix {
    [[f(&a[0][0], &b[0][0]), f(&a[0][1], &b[0][1])], [f(&a[1][0], &b[1][0]), f(&a[1][1], &b[1][1])]]
}

fn mat_deriv(a: &DiffMatrix, d: Dir) -> Result<DiffMatrix> {
    Ok([[a[0][0].deriv(d)?, a[0][1].deriv(d)?], [a[1][0].deriv(d)?, a[1][1].deriv(d)?]])
}

/// `∂₋U₊ + ∂₊U₋ − 2[U₊, U₋]`.
pub fn zero_curvature(up: &DiffMatrix, um: &DiffMatrix) -> Result<DiffMatrix> {
    let lhs = mat_zip(&mat_deriv(up, Dir::Minus)?, &mat_deriv(um, Dir::Plus)?, |a, b| a.add(b));
    let comm = mat_zip(&mat_mul(up, um), &mat_mul(um, up), |a, b| a.sub(b));
    Ok(mat_zip(&lhs, &comm, |a, b| a.sub(&b.scale(&Coeff::from_int(2)))))
}

/// Zero-curvature presets with their equations of motion.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ZcPreset {
    /// Liouville, `□Φ = (8/β) e^{−βΦ}`.
    Liouville,
    /// Free field `φ` from the Volterra matrix, `□φ = 0`.
    FreeVolterra,
    /// Free field from the `g″` matrix, `□Φ = 0`.
    FreeLiouvilleLimit,
}

impl ZcPreset {
    pub const ALL: [ZcPreset; 3] = [ZcPreset::Liouville, ZcPreset::FreeVolterra, ZcPreset::FreeLiouvilleLimit];

    pub fn name(self) -> &'static str {
        match self {
            ZcPreset::Liouville => "liouville",
            ZcPreset::FreeVolterra => "freefield_volterra",
            ZcPreset::FreeLiouvilleLimit => "freefield_liouvillelimit",
        }
    }

    pub fn from_name(s: &str) -> Option<ZcPreset> {
        ZcPreset::ALL.into_iter().find(|p| p.name() == s)
    }

    /// `(U₊, U₋)`.
    pub fn matrices(self) -> (DiffMatrix, DiffMatrix) {
        let r = |n: i64, d: i64| Rational64::new(n, d);
        let lam = |e: i32| Coeff::param(Param::Lambda, e);
        let z = DiffExpr::zero;
        match self {
            ZcPreset::Liouville | ZcPreset::FreeLiouvilleLimit => {
                let b8 = Coeff::param(Param::Beta, 1).scale(r(1, 8));
                let h = |d: Dir| DiffExpr::d_phi(d).scale(&b8);
                let em = DiffExpr::exp(Exponent::beta(r(-1, 2)));
                let ep = DiffExpr::exp(Exponent::beta(r(1, 2)));
                let up12 = if self == ZcPreset::Liouville { em.scale(&lam(1)) } else { z() };
                let neg = |e: DiffExpr| e.scale(&Coeff::from_int(-1));
                (
                    [[h(Dir::Plus), up12], [ep.scale(&lam(1)), neg(h(Dir::Plus))]],
                    [[h(Dir::Minus), z()], [em.scale(&lam(-1)), neg(h(Dir::Minus))]],
                )
            }
            ZcPreset::FreeVolterra => {
                let half = Coeff::from_rat(r(1, 2));
                let h = |d: Dir, s: i64| DiffExpr::d_phi(d).scale(&half.scale(Rational64::from_integer(s)));
                (
                    [
                        [h(Dir::Plus, 1), DiffExpr::exp(Exponent::plain(r(-2, 1))).scale(&lam(1))],
                        [DiffExpr::exp(Exponent::plain(r(2, 1))).scale(&lam(1)), h(Dir::Plus, -1)],
                    ],
                    [[h(Dir::Minus, 1), z()], [z(), h(Dir::Minus, -1)]],
                )
            }
        }
    }

    /// Right-hand side of `□Φ = …`.
    pub fn equation_of_motion(self) -> DiffExpr {
        match self {
            ZcPreset::Liouville => {
                DiffExpr::exp(Exponent::beta(Rational64::from_integer(-1))).scale(&Coeff::param(Param::Beta, -1).scale(Rational64::from_integer(8)))
            }
            _ => DiffExpr::zero(),
        }
    }
}

/// Unreduced and reduced zero-curvature residuals.
#[derive(Clone, Debug, PartialEq)]
pub struct ZcResidual {
    pub raw: DiffMatrix,
    pub reduced: DiffMatrix,
}

impl ZcResidual {
    pub fn reduced_terms(&self) -> usize {
        self.reduced.iter().flatten().map(DiffExpr::len).sum()
    }

    pub fn raw_terms(&self) -> usize {
        self.raw.iter().flatten().map(DiffExpr::len).sum()
    }
}

/// Zero-curvature residual of `preset`, reduced modulo `eom` (its own equation of motion when `None`).
pub fn zc_residual_with(preset: ZcPreset, eom: Option<&DiffExpr>) -> Result<ZcResidual> {
    let (up, um) = preset.matrices();
    let raw = zero_curvature(&up, &um)?;
    let rhs = eom.cloned().unwrap_or_else(|| preset.equation_of_motion());
    let reduced = [
        [raw[0][0].reduce_box(&rhs), raw[0][1].reduce_box(&rhs)],
        [raw[1][0].reduce_box(&rhs), raw[1][1].reduce_box(&rhs)],
    ];
    Ok(ZcResidual { raw, reduced })
}

pub fn zc_residual(preset: ZcPreset) -> Result<ZcResidual> {
    zc_residual_with(preset, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn exponential_derivative() {
        let e = DiffExpr::exp(Exponent::beta(r(1, 2)));
        let want = DiffExpr::d_phi(Dir::Plus).mul(&e).scale(&Coeff::param(Param::Beta, 1).scale(r(1, 2)));
        assert_eq!(e.deriv(Dir::Plus).unwrap(), want);
    }

    #[test]
    fn mixed_derivative_is_box() {
        let d = DiffExpr::d_phi(Dir::Plus).deriv(Dir::Minus).unwrap();
        assert_eq!(d, DiffExpr::box_phi());
        assert!(DiffExpr::d_phi(Dir::Plus).deriv(Dir::Plus).is_err());
    }

    #[test]
    fn exponentials_merge() {
        let a = DiffExpr::exp(Exponent::beta(r(1, 2)));
        let b = DiffExpr::exp(Exponent::beta(r(-1, 2)));
        assert_eq!(a.mul(&b), DiffExpr::scalar(Coeff::one()));
    }

    #[test]
    fn liouville_raw_residual_is_eom_multiple() {
        let z = zc_residual(ZcPreset::Liouville).unwrap();
        let b4 = Coeff::param(Param::Beta, 1).scale(r(1, 4));
        let eom = DiffExpr::box_phi().sub(&ZcPreset::Liouville.equation_of_motion()).scale(&b4);
        assert_eq!(z.raw[0][0], eom);
        assert_eq!(z.raw[1][1], eom.scale(&Coeff::from_int(-1)));
        assert!(z.raw[0][1].is_zero() && z.raw[1][0].is_zero());
    }

    #[test]
    fn presets_reduce_to_zero() {
        for p in ZcPreset::ALL {
            assert_eq!(zc_residual(p).unwrap().reduced_terms(), 0, "{}", p.name());
        }
    }
}
