//! The noncompact quantum dilogarithm `S_ω` and the scalar functional equations built from it.

mod checks;

pub use checks::*;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{QbaxError, Result};

pub type C64 = Complex64;

const I: C64 = C64::new(0.0, 1.0);

/// Quadrature settings for `S_ω`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DilogParams {
    /// `ω`, complex only for the compact comparison family.
    pub omega: C64,
    /// Target absolute error of `log S_ω`.
    pub tol: f64,
    /// Step halvings allowed before the result is declared uncertified.
    pub max_halvings: u32,
    /// Integrand magnitude below which the tails are cut.
    pub tail: f64,
    /// Height of the integration line as a fraction of the distance to the first pole above 0.
    pub line: f64,
}

impl DilogParams {
    pub fn new(omega: f64) -> Result<Self> {
        if !(omega > 0.0 && omega < 1.0) {
            return Err(QbaxError::InvalidParameter(format!("ω = {omega} outside (0, 1)")));
        }
        Ok(Self::complex(C64::new(omega, 0.0)))
    }

    /// Any `ω` with positive real part, including `ω > 1` for the dual function.
    pub fn complex(omega: C64) -> Self {
        DilogParams { omega, tol: 1e-13, max_halvings: 12, tail: 1e-18, line: 0.5 }
    }

    /// `q = e^{iπω²}`.
    pub fn q(&self) -> C64 {
        (I * std::f64::consts::PI * self.omega * self.omega).exp()
    }

    /// `log q = iπω²`.
    pub fn log_q(&self) -> C64 {
        I * std::f64::consts::PI * self.omega * self.omega
    }

    /// `α = 1 / log q`.
    pub fn alpha(&self) -> C64 {
        1.0 / self.log_q()
    }
}

/// Decay margins of the integrand for `t → +∞` and `t → −∞`; both must be positive.
pub fn strip_margins(zeta: C64, omega: C64) -> (f64, f64) {
    let a = (zeta / (I * std::f64::consts::PI * omega)).re;
    let s = (omega + 1.0 / omega).re;
    (s - a, s + a)
}

/// Half-width of the real-ζ decay strip `|Im ζ| < π(1 + ω²)` for real `ω`.
pub fn strip_half_width(omega: f64) -> f64 {
    std::f64::consts::PI * (1.0 + omega * omega)
}

fn log_sinh(z: C64) -> C64 {
    let ln2 = std::f64::consts::LN_2;
    if z.re >= 0.0 {
        z - ln2 + (1.0 - (-2.0 * z).exp()).ln()
    } else {
        -z - ln2 + (1.0 - (2.0 * z).exp()).ln() + I * std::f64::consts::PI
    }
}

fn integrand(t: C64, zeta: C64, omega: C64) -> C64 {
    let pi = std::f64::consts::PI;
    (t * zeta / (I * pi * omega) - (4.0 * t).ln() - log_sinh(omega * t) - log_sinh(t / omega)).exp()
}

/// Certified value of `log S_ω` with its last refinement change.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogDilog {
    pub value: C64,
    pub refinement: f64,
    pub nodes: usize,
}

/// `log S_ω(e^ζ)` from the contour integral, taken along `Im t = c` between the pole at 0 and the first pole above it.
pub fn log_s_omega_zeta(zeta: C64, p: &DilogParams) -> Result<LogDilog> {
    let omega = p.omega;
    if !(omega.re > 0.0 && (1.0 / omega).re > 0.0) {
        return Err(QbaxError::InvalidParameter(format!("ω = {omega} needs a positive real part")));
    }
    if !zeta.re.is_finite() || !zeta.im.is_finite() {
        return Err(QbaxError::OutsideStrip(format!("ζ = {zeta} is not finite")));
    }
    let (up, down) = strip_margins(zeta, omega);
    if up <= 1e-3 || down <= 1e-3 {
        return Err(QbaxError::OutsideStrip(format!("ζ = {zeta}: decay margins {up:.3e}, {down:.3e}")));
    }
    let pi = std::f64::consts::PI;
    let c = p.line * pi * omega.re.min((1.0 / omega).re);
    let f = |s: f64| integrand(C64::new(s, c), zeta, omega);
    let rate = up.min(down);
    let span = (-(p.tail.ln()) + 10.0) / rate;
    let mut h = c / 2.0;
    let mut prev = trapezoid(&f, h, span);
    for _ in 0..p.max_halvings {
        h /= 2.0;
        let cur = trapezoid(&f, h, span);
        let change = (cur.0 - prev.0).norm();
        if !cur.0.re.is_finite() || !cur.0.im.is_finite() {
            return Err(QbaxError::QuadratureUncertified(format!("non-finite integral at ζ = {zeta}")));
        }
        if change < p.tol * cur.0.norm().max(1.0) {
            return Ok(LogDilog { value: cur.0, refinement: change, nodes: cur.1 });
        }
        prev = cur;
    }
    Err(QbaxError::QuadratureUncertified(format!("ζ = {zeta}, ω = {omega}: refinements disagree")))
}

fn trapezoid(f: &impl Fn(f64) -> C64, h: f64, span: f64) -> (C64, usize) {
    let n = (span / h).ceil() as i64;
    let mut acc = C64::new(0.0, 0.0);
    for k in -n..=n {
        acc += f(k as f64 * h);
    }
    (acc * h, (2 * n + 1) as usize)
}

/// `S_ω(e^ζ)`.
pub fn s_omega_zeta(zeta: C64, p: &DilogParams) -> Result<C64> {
    Ok(log_s_omega_zeta(zeta, p)?.value.exp())
}

/// `S_ω(x)` on the principal branch of `log x`.
pub fn s_omega(x: C64, p: &DilogParams) -> Result<C64> {
    if x.im == 0.0 && x.re <= 0.0 {
        return Err(QbaxError::OutsideStrip(format!("x = {x} lies on the cut")));
    }
    s_omega_zeta(x.ln(), p)
}

/// `∏_{n≥1} (1 + x q^{2n−1})` for `|q| < 1`, truncated once the tail bound drops below `tol`.
pub fn s_compact(x: C64, q: C64, tol: f64) -> Result<C64> {
    let r = q.norm();
    if r >= 1.0 {
        return Err(QbaxError::InvalidParameter(format!("|q| = {r} is not below 1")));
    }
    let mut acc = C64::new(1.0, 0.0);
    let mut qn = q;
    let q2 = q * q;
    for _ in 0..1_000_000 {
        acc *= 1.0 + x * qn;
        qn *= q2;
        if x.norm() * qn.norm() / (1.0 - r * r) < tol {
            return Ok(acc);
        }
    }
    Err(QbaxError::QuadratureUncertified(format!("compact product at |q| = {r} did not converge")))
}

/// The double product `∏(1 + x q^{2n−1}) / ∏(1 + x^{ω⁻²} q̂^{2n−1})` with `q̂ = e^{−iπω⁻²}`; needs `Im ω² > 0`.
pub fn s_double_product(zeta: C64, omega: C64, tol: f64) -> Result<C64> {
    let pi = std::f64::consts::PI;
    let tau = omega * omega;
    let q = (I * pi * tau).exp();
    let qhat = (-I * pi / tau).exp();
    let num = s_compact(zeta.exp(), q, tol)?;
    let den = s_compact((zeta / tau).exp(), qhat, tol)?;
    Ok(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    #[test]
    fn compact_product_edges() {
        assert!((s_compact(c(0.0), c(0.5), 1e-15).unwrap() - 1.0).norm() < 1e-15);
        let q = c(0.5);
        assert!(s_compact(-q.inv(), q, 1e-15).unwrap().norm() < 1e-15);
        assert!(s_compact(c(1.0), c(1.0), 1e-15).is_err());
    }

    #[test]
    fn compact_functional_equation() {
        let (x, q) = (c(0.3), c(0.5));
        let l = s_compact(x / q, q, 1e-16).unwrap();
        let r = (1.0 + x) * s_compact(x * q, q, 1e-16).unwrap();
        assert!((l - r).norm() < 1e-12);
    }

    #[test]
    fn unitarity_on_positive_axis() {
        let p = DilogParams::new(0.6).unwrap();
        for x in [0.1, 1.0, 7.3] {
            let s = s_omega(c(x), &p).unwrap();
            assert!((s.norm() - 1.0).abs() < 1e-10, "x = {x}: |S| = {}", s.norm());
        }
    }

    #[test]
    fn functional_equation() {
        let p = DilogParams::new(0.4).unwrap();
        let lq = p.log_q();
        let l = s_omega_zeta(-lq, &p).unwrap();
        let r = 2.0 * s_omega_zeta(lq, &p).unwrap();
        assert!((l - r).norm() < 1e-10);
    }

    #[test]
    fn domain_errors() {
        assert!(DilogParams::new(1.0).is_err());
        let p = DilogParams::new(0.5).unwrap();
        assert!(s_omega(c(-1.0), &p).is_err());
        assert!(s_omega_zeta(C64::new(0.0, 4.0), &p).is_err());
    }
}
