//! Functional equations of `S_ω` and of the scalar solutions built from it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::report::{Check, Group, Outcome, RunConfig};

use super::*;

/// Grid of `ω` used by the sweeps.
pub const OMEGA_GRID: [f64; 4] = [0.3, 0.5, 0.7, 0.9];

/// Log grid of positive `x` in `[10⁻², 10²]`.
pub fn x_grid() -> Vec<f64> {
    (0..=16).map(|k| 10f64.powf(-2.0 + 0.25 * k as f64)).collect()
}

fn rel(l: C64, r: C64) -> f64 {
    (l - r).norm() / l.norm().max(r.norm()).max(1e-300)
}

fn s(p: &DilogParams, zeta: C64) -> Result<C64> {
    s_omega_zeta(zeta, p)
}

fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

/// Relative defect of `S(q⁻¹x) = (1 + x) S(qx)` at `x = e^ζ`.
pub fn sdil_defect(omega: f64, zeta: C64) -> Result<f64> {
    let p = DilogParams::new(omega)?;
    let lq = p.log_q();
    Ok(rel(s(&p, zeta - lq)?, (1.0 + zeta.exp()) * s(&p, zeta + lq)?))
}

/// `| |S_ω(x)| − 1 |` for `x > 0`.
pub fn unitarity_defect(omega: f64, x: f64) -> Result<f64> {
    let p = DilogParams::new(omega)?;
    Ok((s(&p, re(x.ln()))?.norm() - 1.0).abs())
}

/// Relative defects of both equalities `w^t = S(q^{−t}w)S(q^t w⁻¹)/(S(q^t w)S(q^{−t}w⁻¹)) = q^{t²} S(q^{−2t}w)S(q^{2t}w⁻¹)/(S(w)S(w⁻¹))`.
pub fn ssw_defects(omega: f64, w: f64, t: f64) -> Result<(f64, f64)> {
    let p = DilogParams::new(omega)?;
    let lq = p.log_q();
    let lw = re(w.ln());
    let lhs = (t * lw).exp();
    let mid = s(&p, lw - t * lq)? * s(&p, -lw + t * lq)? / (s(&p, lw + t * lq)? * s(&p, -lw - t * lq)?);
    let right = (t * t * lq).exp() * s(&p, lw - 2.0 * t * lq)? * s(&p, -lw + 2.0 * t * lq)? / (s(&p, lw)? * s(&p, -lw)?);
    Ok((rel(lhs, mid), rel(lhs, right)))
}

/// `S(λ⁻¹w)/S(λw) · w^{−(α/2) log λ}` with `log w = ζ`.
pub fn r0_prime(p: &DilogParams, zeta: C64, lambda: f64) -> Result<C64> {
    let ll = lambda.ln();
    Ok(s(p, zeta - ll)? / s(p, zeta + ll)? * (-(p.alpha() / 2.0) * ll * zeta).exp())
}

/// `S(λ⁻²w)/S(λ²w) · w^{−α log λ}` with `log w = ζ`.
pub fn r_check_double_prime(p: &DilogParams, zeta: C64, lambda: f64) -> Result<C64> {
    let ll = lambda.ln();
    Ok(s(p, zeta - 2.0 * ll)? / s(p, zeta + 2.0 * ll)? * (-p.alpha() * ll * zeta).exp())
}

/// `S(λ⁻¹f)/S(λf)` with `log f = ζ`.
pub fn g_ratio(p: &DilogParams, zeta: C64, lambda: f64) -> Result<C64> {
    let ll = lambda.ln();
    Ok(s(p, zeta - ll)? / s(p, zeta + ll)?)
}

/// `S(w)S(w⁻¹) / (S(λw)S(λw⁻¹))` with `log w = ζ`.
pub fn r0_tilde(p: &DilogParams, zeta: C64, lambda: f64) -> Result<C64> {
    let ll = lambda.ln();
    Ok(s(p, zeta)? * s(p, -zeta)? / (s(p, zeta + ll)? * s(p, -zeta + ll)?))
}

/// Which scalar functional equation to test.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FeqId {
    /// `R(w)(λ + q⁻¹w) = (1 + λq⁻¹w) R(q⁻²w)` for `R = R′₀`.
    Rw,
    /// `Ř(w)(λqw⁻¹ + λ⁻¹) = (λ⁻¹qw⁻¹ + λ) Ř(q⁻²w)` for `Ř = Ř″`.
    Rw3,
    /// `G(f)(λ + q⁻¹f⁻¹) = (λ⁻¹ + q⁻¹f⁻¹) G(q²f)`.
    Rbd3pp,
}

impl FeqId {
    pub fn name(self) -> &'static str {
        match self {
            FeqId::Rw => "rw",
            FeqId::Rw3 => "rw3",
            FeqId::Rbd3pp => "rbd3pp",
        }
    }

    pub fn from_name(s: &str) -> Option<FeqId> {
        [FeqId::Rw, FeqId::Rw3, FeqId::Rbd3pp].into_iter().find(|f| f.name() == s)
    }
}

/// Relative defect of the functional equation `id` at `(ω, λ, w)`.
pub fn feq_defect(id: FeqId, omega: f64, lambda: f64, w: f64) -> Result<f64> {
    let p = DilogParams::new(omega)?;
    let q = p.q();
    let lq = p.log_q();
    let z = re(w.ln());
    let wv = re(w);
    Ok(match id {
        FeqId::Rw => rel(
            r0_prime(&p, z, lambda)? * (lambda + wv / q),
            (1.0 + lambda * wv / q) * r0_prime(&p, z - 2.0 * lq, lambda)?,
        ),
        FeqId::Rw3 => rel(
            r_check_double_prime(&p, z, lambda)? * (lambda * q / wv + 1.0 / lambda),
            (q / (lambda * wv) + lambda) * r_check_double_prime(&p, z - 2.0 * lq, lambda)?,
        ),
        FeqId::Rbd3pp => rel(
            g_ratio(&p, z, lambda)? * (lambda + 1.0 / (q * wv)),
            (1.0 / lambda + 1.0 / (q * wv)) * g_ratio(&p, z + 2.0 * lq, lambda)?,
        ),
    })
}

/// `R̃′₀(w)/R′₀(w)` over `ws`, with its largest relative deviation from the first value.
pub fn rv5_rv3_ratios(omega: f64, lambda: f64, ws: &[f64]) -> Result<(Vec<C64>, f64)> {
    let p = DilogParams::new(omega)?;
    let mut ratios = Vec::with_capacity(ws.len());
    for &w in ws {
        let z = re(w.ln());
        ratios.push(r0_tilde(&p, z, lambda)? / r0_prime(&p, z, lambda)?);
    }
    let spread = ratios.iter().map(|r| rel(*r, ratios[0])).fold(0.0, f64::max);
    Ok((ratios, spread))
}

/// `q^{t²}` with `t = (α/2) log λ`, the value of `R̃′₀/R′₀`.
pub fn rv5_rv3_factor(omega: f64, lambda: f64) -> Result<C64> {
    let p = DilogParams::new(omega)?;
    let t = p.alpha() * lambda.ln() / 2.0;
    Ok((t * t * p.log_q()).exp())
}

/// `S_ω(x^ω)` against `S_{1/ω}(x^{1/ω})`.
pub fn self_duality_defect(omega: f64, x: f64) -> Result<f64> {
    let p = DilogParams::new(omega)?;
    let dual = DilogParams::complex(re(1.0 / omega));
    let l = x.ln();
    Ok(rel(s(&p, re(omega * l))?, s(&dual, re(l / omega))?))
}

/// Integral against double product at `ω = |ω| e^{iφ}`, where both products converge.
pub fn compact_consistency_defect(omega_abs: f64, phase: f64, zeta: C64) -> Result<f64> {
    let omega = C64::from_polar(omega_abs, phase);
    let p = DilogParams::complex(omega);
    Ok(rel(s(&p, zeta)?, s_double_product(zeta, omega, 1e-16)?))
}

/// `S_ω(1)` at `ω² = 1/2` with default settings against a run on a different line with a tighter tolerance.
pub fn refinement_oracle_defect() -> Result<(C64, f64)> {
    let mut p = DilogParams::new(0.5f64.sqrt())?;
    let base = s(&p, re(0.0))?;
    p.tol = 1e-15;
    p.max_halvings = 16;
    p.tail = 1e-22;
    p.line = 0.3;
    let fine = s(&p, re(0.0))?;
    Ok((base, rel(base, fine)))
}

fn sweep(tol: f64, it: impl IntoIterator<Item = Result<(String, f64)>>) -> Outcome {
    Outcome::sweep(tol, it)
}

/// `n` seeded samples of `(λ, w)` with `λ ∈ [1/2, 2]` and `w` log-uniform in `[10⁻¹, 10]`.
pub fn lambda_w_samples(seed: u64, n: usize) -> Vec<(f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let l = 2f64.powf(rng.gen_range(-1.0..=1.0));
            let w = 10f64.powf(rng.gen_range(-1.0..=1.0));
            (l, w)
        })
        .collect()
}

fn feq_sweep(id: FeqId, cfg: &RunConfig, tol: f64) -> Outcome {
    let mut items = Vec::new();
    for (k, &om) in OMEGA_GRID.iter().enumerate() {
        for (l, w) in lambda_w_samples(cfg.seed ^ (0x51ed + k as u64), 100) {
            items.push((om, l, w));
        }
    }
    sweep(
        tol,
        parallel_map(&items, |&(om, l, w)| feq_defect(id, om, l, w).map(|d| (format!("ω={om}, λ={l:.4}, w={w:.4}"), d))),
    )
}

fn parallel_map<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

pub fn checks() -> Vec<Check> {
    let g = Group::Qdilog;
    let mut out = Vec::new();
    out.push(Check::numeric(g, "qdilog-sdil-grid", "S(q⁻¹x) = (1 + x) S(qx) on the ω × x grid", 1e-8, |c| {
        let items: Vec<(f64, f64)> = OMEGA_GRID.iter().flat_map(|&o| x_grid().into_iter().map(move |x| (o, x))).collect();
        sweep(c.tol_or(1e-8), parallel_map(&items, |&(o, x)| sdil_defect(o, re(x.ln())).map(|d| (format!("ω={o}, x={x:.3e}"), d))))
    }));
    out.push(Check::numeric(g, "qdilog-unitarity-grid", "|S_ω(x)| = 1 for x > 0 on the ω × x grid", 1e-8, |c| {
        let items: Vec<(f64, f64)> = OMEGA_GRID.iter().flat_map(|&o| x_grid().into_iter().map(move |x| (o, x))).collect();
        sweep(c.tol_or(1e-8), parallel_map(&items, |&(o, x)| unitarity_defect(o, x).map(|d| (format!("ω={o}, x={x:.3e}"), d))))
    }));
    out.push(Check::numeric(g, "qdilog-sdil-points", "the functional equation at ω = 0.4, x = 1 and ω = 0.7, x = 0.05", 1e-8, |c| {
        sweep(
            c.tol_or(1e-8),
            [(0.4, 1.0), (0.7, 0.05)].map(|(o, x): (f64, f64)| sdil_defect(o, re(x.ln())).map(|d| (format!("ω={o}, x={x}"), d))),
        )
    }));
    out.push(Check::numeric(g, "qdilog-unitarity-points", "|S_ω(x)| = 1 at ω = 0.6 for x ∈ {0.1, 1, 7.3}", 1e-8, |c| {
        sweep(c.tol_or(1e-8), [0.1, 1.0, 7.3].map(|x| unitarity_defect(0.6, x).map(|d| (format!("x={x}"), d))))
    }));
    out.push(Check::numeric(g, "qdilog-self-duality", "S_ω(x^ω) = S_{1/ω}(x^{1/ω})", 1e-8, |c| {
        let items: Vec<(f64, f64)> = OMEGA_GRID.iter().flat_map(|&o| [0.05, 0.5, 3.0, 40.0].map(move |x| (o, x))).collect();
        sweep(c.tol_or(1e-8), parallel_map(&items, |&(o, x)| self_duality_defect(o, x).map(|d| (format!("ω={o}, x={x}"), d))))
    }));
    out.push(Check::numeric(g, "qdilog-refinement-oracle", "S_ω(1) at ω² = 1/2 agrees with a tighter independent quadrature", 1e-10, |c| {
        match refinement_oracle_defect() {
            Ok((v, d)) => Outcome::numeric(d, c.tol_or(1e-10), format!("S = {v:.12}, defect {d:.3e}")),
            Err(e) => Outcome::numeric(f64::INFINITY, 0.0, e.to_string()),
        }
    }));
    out.push(Check::numeric(g, "qdilog-compact-sdil", "the compact product solves the functional equation at x = 0.3, q = 0.5", 1e-12, |c| {
        let (x, q) = (re(0.3), re(0.5));
        let r = s_compact(x / q, q, 1e-16).and_then(|l| Ok((l, (1.0 + x) * s_compact(x * q, q, 1e-16)?)));
        match r {
            Ok((l, r)) => Outcome::numeric(rel(l, r), c.tol_or(1e-12), format!("defect {:.3e}", rel(l, r))),
            Err(e) => Outcome::numeric(f64::INFINITY, 0.0, e.to_string()),
        }
    }));
    out.push(Check::numeric(
        g,
        "qdilog-compact-consistency",
        "the integral agrees with the double product where both products converge",
        1e-6,
        |c| {
            let items: Vec<(f64, f64, f64)> =
                [0.5, 0.7].iter().flat_map(|&o| [0.15, 0.3].iter().flat_map(move |&ph| [-1.0, 0.2, 1.5].map(move |z| (o, ph, z)))).collect();
            sweep(
                c.tol_or(1e-6),
                parallel_map(&items, |&(o, ph, z)| {
                    compact_consistency_defect(o, ph, re(z)).map(|d| (format!("|ω|={o}, arg ω={ph}, ζ={z}"), d))
                }),
            )
        },
    ));
    out.push(Check::numeric(g, "qdilog-ssw", "both expressions for w^t as ratios of S_ω, 100 samples per ω", 1e-8, |c| {
        let mut items = Vec::new();
        for (k, &om) in OMEGA_GRID.iter().enumerate() {
            let mut rng = ChaCha8Rng::seed_from_u64(c.seed ^ (0x55a + k as u64));
            for _ in 0..100 {
                items.push((om, 10f64.powf(rng.gen_range(-1.0..=1.0)), rng.gen_range(-0.5..=0.5)));
            }
        }
        sweep(
            c.tol_or(1e-8),
            parallel_map(&items, |&(o, w, t)| ssw_defects(o, w, t).map(|(a, b)| (format!("ω={o}, w={w:.4}, t={t:.4}"), a.max(b)))),
        )
    }));
    out.push(Check::numeric(g, "qdilog-ssw-points", "w^t identities at ω = 0.6, w = 2, t = 0.37 and at w = 1", 1e-8, |c| {
        sweep(
            c.tol_or(1e-8),
            [(0.6, 2.0, 0.37), (0.5, 1.0, 0.21), (0.5, 1.0, -0.4)]
                .map(|(o, w, t)| ssw_defects(o, w, t).map(|(a, b)| (format!("ω={o}, w={w}, t={t}"), a.max(b)))),
        )
    }));
    for id in [FeqId::Rw, FeqId::Rw3, FeqId::Rbd3pp] {
        let claim = match id {
            FeqId::Rw => "R′₀(w)(λ + q⁻¹w) = (1 + λq⁻¹w) R′₀(q⁻²w), 100 samples per ω",
            FeqId::Rw3 => "Ř″(w)(λqw⁻¹ + λ⁻¹) = (λ⁻¹qw⁻¹ + λ) Ř″(q⁻²w), 100 samples per ω",
            FeqId::Rbd3pp => "G(f)(λ + q⁻¹f⁻¹) = (λ⁻¹ + q⁻¹f⁻¹) G(q²f), 100 samples per ω",
        };
        out.push(Check::numeric(g, &format!("qdilog-{}", id.name()), claim, 1e-8, move |c| feq_sweep(id, c, c.tol_or(1e-8))));
    }
    out.push(Check::numeric(g, "qdilog-feq-points", "the three functional equations at their reference points", 1e-8, |c| {
        sweep(
            c.tol_or(1e-8),
            [(FeqId::Rw, 0.55, 1.0, 0.8), (FeqId::Rw, 0.55, 1.3, 0.8), (FeqId::Rbd3pp, 0.45, 2.0, 1.7), (FeqId::Rw3, 0.6, 1.4, 2.5)]
                .map(|(id, o, l, w)| feq_defect(id, o, l, w).map(|d| (format!("{} ω={o}, λ={l}, w={w}", id.name()), d))),
        )
    }));
    out.push(Check::numeric(g, "qdilog-rv5-rv3", "the two solutions of the R′₀ equation differ by a w-independent factor", 1e-7, |c| {
        let ws: Vec<f64> = (0..=12).map(|k| 10f64.powf(-1.5 + 0.25 * k as f64)).collect();
        let items: Vec<(f64, f64)> = OMEGA_GRID.iter().flat_map(|&o| [0.6, 1.7].map(move |l| (o, l))).collect();
        sweep(
            c.tol_or(1e-7),
            parallel_map(&items, |&(o, l)| rv5_rv3_ratios(o, l, &ws).map(|(_, s)| (format!("ω={o}, λ={l}"), s))),
        )
    }));
    out.push(Check::numeric(g, "qdilog-rv5-rv3-factor", "R̃′₀/R′₀ = q^{t²} with t = (α/2) log λ", 1e-8, |c| {
        let items: Vec<(f64, f64, f64)> =
            OMEGA_GRID.iter().flat_map(|&o| [0.6, 1.7].iter().flat_map(move |&l| [0.3, 2.0].map(move |w| (o, l, w)))).collect();
        sweep(
            c.tol_or(1e-8),
            parallel_map(&items, |&(o, l, w)| {
                let (r, _) = rv5_rv3_ratios(o, l, &[w])?;
                Ok((format!("ω={o}, λ={l}, w={w}"), rel(r[0], rv5_rv3_factor(o, l)?)))
            }),
        )
    }));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rv5_over_rv3_is_q_to_t_squared() {
        let (r, spread) = rv5_rv3_ratios(0.5, 1.7, &[0.2, 1.0, 5.0]).unwrap();
        assert!(spread < 1e-10);
        assert!(rel(r[0], rv5_rv3_factor(0.5, 1.7).unwrap()) < 1e-10);
    }

    #[test]
    fn refinement_oracle_agrees() {
        let (v, d) = refinement_oracle_defect().unwrap();
        assert!(d < 1e-10);
        assert!((v.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn regular_point_of_rw() {
        assert!(feq_defect(FeqId::Rw, 0.55, 1.0, 0.8).unwrap() < 1e-10);
    }

    #[test]
    fn samples_are_seeded() {
        assert_eq!(lambda_w_samples(7, 5), lambda_w_samples(7, 5));
        assert_ne!(lambda_w_samples(7, 5), lambda_w_samples(8, 5));
    }
}
