//! Classical lattice Hamiltonians, their continuum limits, and zero-curvature residuals.

mod checks;
mod diffexpr;

pub use checks::*;
pub use diffexpr::*;

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{QbaxError, Result};

/// Canonical lattice field `(Φ_n, Π_n)` with spacing `κ` and coupling `β`, `γ = β²/8`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FieldConfig {
    pub phi: Vec<f64>,
    pub pi: Vec<f64>,
    pub kappa: f64,
    pub beta: f64,
    pub periodic: bool,
}

impl FieldConfig {
    pub fn new(phi: Vec<f64>, pi: Vec<f64>, kappa: f64, beta: f64, periodic: bool) -> Result<Self> {
        if phi.len() != pi.len() || phi.len() < 2 {
            return Err(QbaxError::Shape(format!("field arrays of lengths {} and {}", phi.len(), pi.len())));
        }
        if !(kappa >= 0.0 && beta > 0.0) {
            return Err(QbaxError::InvalidParameter(format!("κ = {kappa}, β = {beta}")));
        }
        Ok(FieldConfig { phi, pi, kappa, beta, periodic })
    }

    pub fn gamma(&self) -> f64 {
        self.beta * self.beta / 8.0
    }

    pub fn sites(&self) -> usize {
        self.phi.len()
    }

    /// Links `(n, n+1)`, closing the chain when periodic.
    pub fn links(&self) -> Vec<(usize, usize)> {
        let n = self.sites();
        let last = if self.periodic { n } else { n - 1 };
        (0..last).map(|i| (i, (i + 1) % n)).collect()
    }

    /// `Φ → −Φ`.
    pub fn flip_phi(&self) -> FieldConfig {
        FieldConfig { phi: self.phi.iter().map(|x| -x).collect(), ..self.clone() }
    }
}

/// Coefficients of `κ⁰`, `κ²`, `κ⁴` in the argument of the Liouville log on link `(n, m)`.
pub fn liouville_log_terms(cfg: &FieldConfig, n: usize, m: usize) -> [f64; 3] {
    let b = cfg.beta;
    let (ps, fs, fd) = (cfg.pi[n] + cfg.pi[m], cfg.phi[n] + cfg.phi[m], cfg.phi[n] - cfg.phi[m]);
    let c0 = 0.5 * (b / 4.0 * ps).cosh() + 0.5 * (b / 2.0 * fd).cosh();
    let c2 = 0.5 * (-b / 2.0 * fs).exp() * (1.0 + (b / 4.0 * ps).exp() * (b / 2.0 * fd).cosh());
    let c4 = 0.25 * (b / 4.0 * ps).exp() * (-b * fs).exp();
    [c0, c2, c4]
}

/// Per-link `γ H` of the classical lattice Liouville model.
pub fn h_liouville(cfg: &FieldConfig) -> Result<Vec<f64>> {
    let k2 = cfg.kappa * cfg.kappa;
    cfg.links()
        .into_iter()
        .map(|(n, m)| {
            let [c0, c2, c4] = liouville_log_terms(cfg, n, m);
            let arg = c0 + k2 * c2 + k2 * k2 * c4;
            if arg > 0.0 {
                Ok(arg.ln())
            } else {
                Err(QbaxError::InvalidParameter(format!("log argument {arg} at link ({n},{m})")))
            }
        })
        .collect()
}

/// Per-link `γ H` of the free field from the `g″` matrix, constant dropped.
pub fn h_freefield(cfg: &FieldConfig) -> Vec<f64> {
    let b = cfg.beta;
    cfg.links()
        .into_iter()
        .map(|(n, m)| 2.0 * (2.0 * (b / 4.0 * (cfg.pi[n] + cfg.pi[m])).cosh() + 2.0 * (b / 2.0 * (cfg.phi[m] - cfg.phi[n])).cosh()).ln())
        .collect()
}

/// Per-link `γ H` of the `g″` free field before specializing to the lattice representation, with `Z_q = κ⁻²`.
pub fn h_freefield_weyl(cfg: &FieldConfig) -> Vec<f64> {
    let b = cfg.beta;
    let k = cfg.kappa;
    let u = |n: usize| (b / 4.0 * cfg.pi[n]).exp() / k;
    let ut = |n: usize| (-b / 4.0 * cfg.pi[n]).exp() / k;
    let v = |n: usize| (-b / 2.0 * cfg.phi[n]).exp();
    let z = 1.0 / (k * k);
    cfg.links()
        .into_iter()
        .map(|(n, m)| 2.0 * (u(n) * u(m) + ut(n) * ut(m) + z * (v(m) / v(n) + v(n) / v(m))).ln() + (ut(m) * u(n)).ln())
        .collect()
}

/// `r′` as a function of `e^{2s}`.
pub type RPrime = fn(f64) -> f64;

/// `r′ = 0`.
pub fn r_prime_trivial(_: f64) -> f64 {
    0.0
}

/// `r′(e^{2t}) = log cosh t`.
pub fn r_prime_self_dual(y: f64) -> f64 {
    (0.5 * y.ln()).cosh().ln()
}

/// `s± = ½p_n + ½p_{n+1} ± φ_{n+1} ∓ φ_n` with `(p, φ)` read from `(pi, phi)`.
pub fn volterra_s(cfg: &FieldConfig, n: usize, m: usize) -> (f64, f64) {
    let a = 0.5 * (cfg.pi[n] + cfg.pi[m]);
    let d = cfg.phi[m] - cfg.phi[n];
    (a + d, a - d)
}

/// Per-link `γ H` of the Volterra chain: `log cosh s₊ + r′(e^{2s₋})`, or the dual with `s₊ ↔ s₋`.
pub fn h_volterra(cfg: &FieldConfig, dual: bool, r_prime: RPrime) -> Vec<f64> {
    cfg.links()
        .into_iter()
        .map(|(n, m)| {
            let (sp, sm) = volterra_s(cfg, n, m);
            let (a, b) = if dual { (sm, sp) } else { (sp, sm) };
            a.cosh().ln() + r_prime((2.0 * b).exp())
        })
        .collect()
}

/// Per-link `γ H = log(v_n⁻¹ ũ_n u_{n+1} v_{n+1})` for commuting positive values.
pub fn h_toda(u: &[f64], ut: &[f64], v: &[f64], periodic: bool) -> Result<Vec<f64>> {
    let n = u.len();
    if ut.len() != n || v.len() != n || n < 2 {
        return Err(QbaxError::Shape("Toda arrays differ in length".into()));
    }
    let last = if periodic { n } else { n - 1 };
    Ok((0..last)
        .map(|i| {
            let j = (i + 1) % n;
            (ut[i] * u[j] * v[j] / v[i]).ln()
        })
        .collect())
}

/// Continuum targets.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Model {
    Liouville,
    FreefieldVolterra,
    FreefieldLiouvilleLimit,
}

impl Model {
    pub const ALL: [Model; 3] = [Model::Liouville, Model::FreefieldVolterra, Model::FreefieldLiouvilleLimit];

    pub fn name(self) -> &'static str {
        match self {
            Model::Liouville => "liouville",
            Model::FreefieldVolterra => "freefield_volterra",
            Model::FreefieldLiouvilleLimit => "freefield_liouvillelimit",
        }
    }

    pub fn from_name(s: &str) -> Option<Model> {
        Model::ALL.into_iter().find(|m| m.name() == s)
    }

    /// Per-link `H` (not `γH`).
    pub fn lattice(self, cfg: &FieldConfig) -> Result<Vec<f64>> {
        let g = cfg.gamma();
        let h = match self {
            Model::Liouville => h_liouville(cfg)?,
            Model::FreefieldVolterra => h_volterra(cfg, false, r_prime_self_dual),
            Model::FreefieldLiouvilleLimit => h_freefield(cfg),
        };
        Ok(h.into_iter().map(|x| x / g).collect())
    }

    /// Continuum energy density at `(Φ, ∂ₓΦ, Π)`.
    pub fn density(self, phi: f64, dphi: f64, pi: f64, beta: f64) -> f64 {
        let g = beta * beta / 8.0;
        match self {
            Model::Liouville => 0.5 * pi * pi + 0.5 * dphi * dphi + (-beta * phi).exp() / g,
            Model::FreefieldVolterra => (pi * pi + dphi * dphi) / g,
            Model::FreefieldLiouvilleLimit => pi * pi + dphi * dphi,
        }
    }
}

/// Smooth periodic test fields on `[0, L)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldPreset {
    Zero,
    /// `Φ = 0.3 sin(2πx/L)`, `Π = 0`.
    Sine,
    /// `Φ = 0.3 sin(2πx/L) + 0.1 cos(4πx/L)`, `Π = 0.2 cos(2πx/L)`.
    Mixed,
}

impl FieldPreset {
    pub const ALL: [FieldPreset; 3] = [FieldPreset::Zero, FieldPreset::Sine, FieldPreset::Mixed];

    pub fn name(self) -> &'static str {
        match self {
            FieldPreset::Zero => "zero",
            FieldPreset::Sine => "sine",
            FieldPreset::Mixed => "mixed",
        }
    }

    pub fn from_name(s: &str) -> Option<FieldPreset> {
        FieldPreset::ALL.into_iter().find(|p| p.name() == s)
    }

    /// `(Φ(x), Φ′(x), Π(x))`.
    pub fn at(self, x: f64, len: f64) -> (f64, f64, f64) {
        let k = 2.0 * PI / len;
        match self {
            FieldPreset::Zero => (0.0, 0.0, 0.0),
            FieldPreset::Sine => (0.3 * (k * x).sin(), 0.3 * k * (k * x).cos(), 0.0),
            FieldPreset::Mixed => (
                0.3 * (k * x).sin() + 0.1 * (2.0 * k * x).cos(),
                0.3 * k * (k * x).cos() - 0.2 * k * (2.0 * k * x).sin(),
                0.2 * (k * x).cos(),
            ),
        }
    }

    /// Periodic lattice sampling with `Φ_n = Φ(nκ)` and `Π_n = κ Π(nκ)`.
    pub fn sample(self, sites: usize, len: f64, beta: f64) -> Result<FieldConfig> {
        let kappa = len / sites as f64;
        let (mut phi, mut pi) = (Vec::with_capacity(sites), Vec::with_capacity(sites));
        for n in 0..sites {
            let (f, _, p) = self.at(n as f64 * kappa, len);
            phi.push(f);
            pi.push(kappa * p);
        }
        FieldConfig::new(phi, pi, kappa, beta, true)
    }
}

/// Settings of a continuum sweep.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ContinuumSpec {
    pub model: Model,
    pub field: FieldPreset,
    pub beta: f64,
    pub length: f64,
    /// Site counts; `κ = length / sites`.
    pub sites: Vec<usize>,
}

impl ContinuumSpec {
    /// `κ = L/16, L/32, L/64, L/128` at `L = β = 1`.
    pub fn standard(model: Model, field: FieldPreset) -> Self {
        ContinuumSpec { model, field, beta: 1.0, length: 1.0, sites: vec![16, 32, 64, 128] }
    }
}

/// Lattice-versus-continuum errors along a κ sweep.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ContinuumReport {
    pub model: Model,
    pub field: FieldPreset,
    pub kappas: Vec<f64>,
    pub lattice: Vec<f64>,
    pub continuum: f64,
    /// Least-squares per-link constant removed from the lattice sums.
    pub constant: f64,
    pub errors: Vec<f64>,
    /// `log₂` error ratio of consecutive κ, `None` when the finer error is at rounding level.
    pub orders: Vec<Option<f64>>,
    pub monotone: bool,
}

impl ContinuumReport {
    /// Smallest fitted order, ignoring steps already at rounding level.
    pub fn min_order(&self) -> Option<f64> {
        self.orders.iter().flatten().copied().fold(None, |a: Option<f64>, x| Some(a.map_or(x, |a| a.min(x))))
    }

    pub fn converges_with_order(&self, order: f64) -> bool {
        self.monotone && self.min_order().is_none_or(|o| o >= order)
    }
}

/// `∫₀^L density dx` by the trapezoid rule on a fine periodic grid.
pub fn continuum_energy(model: Model, field: FieldPreset, len: f64, beta: f64) -> f64 {
    let n = 4096;
    let h = len / n as f64;
    (0..n)
        .map(|i| {
            let (f, df, p) = field.at(i as f64 * h, len);
            model.density(f, df, p, beta)
        })
        .sum::<f64>()
        * h
}

/// Runs the sweep, fits a per-link constant `c` jointly with a `κ²` error term, and reports the remaining errors.
pub fn continuum_check(spec: &ContinuumSpec) -> Result<ContinuumReport> {
    if spec.sites.len() < 2 {
        return Err(QbaxError::InvalidParameter("a sweep needs at least two lattice sizes".into()));
    }
    let continuum = continuum_energy(spec.model, spec.field, spec.length, spec.beta);
    let mut kappas = Vec::new();
    let mut lattice = Vec::new();
    for &n in &spec.sites {
        let cfg = spec.field.sample(n, spec.length, spec.beta)?;
        let total: f64 = spec.model.lattice(&cfg)?.iter().sum();
        kappas.push(cfg.kappa);
        lattice.push(total / cfg.kappa);
    }
    // S(κ) − I = (L/κ²) c + e κ² + …
    let cols: Vec<(f64, f64)> = kappas.iter().map(|k| (spec.length / (k * k), k * k)).collect();
    let (mut a11, mut a12, mut a22, mut b1, mut b2) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for ((x, y), s) in cols.iter().zip(&lattice) {
        let r = s - continuum;
        a11 += x * x;
        a12 += x * y;
        a22 += y * y;
        b1 += x * r;
        b2 += y * r;
    }
    let det = a11 * a22 - a12 * a12;
    let constant = if det.abs() > 1e-300 { (b1 * a22 - b2 * a12) / det } else { 0.0 };
    let errors: Vec<f64> =
        cols.iter().zip(&lattice).map(|((x, _), s)| (s - continuum - x * constant).abs()).collect();
    let floor = 1e-13 * lattice.iter().fold(continuum.abs() + 1.0, |m, s| m.max(s.abs()));
    let orders = errors
        .windows(2)
        .zip(kappas.windows(2))
        .map(|(e, k)| if e[1] < floor { None } else { Some((e[0] / e[1]).ln() / (k[0] / k[1]).ln()) })
        .collect();
    let monotone = errors.windows(2).all(|e| e[1] <= e[0] || e[1] < floor);
    Ok(ContinuumReport { model: spec.model, field: spec.field, kappas, lattice, continuum, constant, errors, orders, monotone })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zero_cfg(kappa: f64) -> FieldConfig {
        FieldConfig::new(vec![0.0; 2], vec![0.0; 2], kappa, 1.0, false).unwrap()
    }

    #[test]
    fn liouville_zero_field_values() {
        assert_eq!(h_liouville(&zero_cfg(0.0)).unwrap(), vec![0.0]);
        let v = h_liouville(&zero_cfg(1.0)).unwrap()[0];
        assert!((v - 2.0 * 1.5f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn volterra_trivial_configuration() {
        let cfg = FieldConfig::new(vec![0.4; 5], vec![0.0; 5], 0.1, 1.0, true).unwrap();
        assert!(h_volterra(&cfg, false, r_prime_trivial).iter().all(|x| x.abs() < 1e-15));
    }

    #[test]
    fn rejects_bad_configs() {
        assert!(FieldConfig::new(vec![0.0], vec![0.0], 0.1, 1.0, true).is_err());
        assert!(FieldConfig::new(vec![0.0; 3], vec![0.0; 2], 0.1, 1.0, true).is_err());
        assert!(FieldConfig::new(vec![0.0; 3], vec![0.0; 3], 0.1, 0.0, true).is_err());
    }

    #[test]
    fn free_field_constant_is_fitted() {
        let r = continuum_check(&ContinuumSpec::standard(Model::FreefieldLiouvilleLimit, FieldPreset::Sine)).unwrap();
        assert!((r.constant - 2.0 * 4f64.ln() / 0.125).abs() < 1e-6, "{}", r.constant);
    }
}
