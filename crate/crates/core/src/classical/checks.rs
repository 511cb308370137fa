//! Registered checks for the classical limits.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::report::{Check, Group, Outcome, Residual, RunConfig};

use super::*;

/// Convergence order every continuum sweep must reach.
pub const MIN_ORDER: f64 = 1.0;

const MACHINE_TOL: f64 = 1e-12;

/// `n` seeded periodic configurations with `|Φ|, |Π| ≤ 1.5`, `κ ∈ [0.05, 1]`, `β ∈ [0.5, 2]`.
pub fn random_configs(seed: u64, n: usize, sites: usize) -> Vec<FieldConfig> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let phi = (0..sites).map(|_| rng.gen_range(-1.5..1.5)).collect();
            let pi = (0..sites).map(|_| rng.gen_range(-1.5..1.5)).collect();
            let kappa = rng.gen_range(0.05..1.0);
            let beta = rng.gen_range(0.5..2.0);
            FieldConfig::new(phi, pi, kappa, beta, true).expect("valid sizes")
        })
        .collect()
}

/// Relative distance of the `κ⁴` coefficient recovered from `h_liouville` at three spacings from `¼ e^{β(Π_n+Π_{n+1})/4} e^{−β(Φ_n+Φ_{n+1})}`.
pub fn kappa4_defect(cfg: &FieldConfig) -> Result<f64> {
    let ks = [0.5, 1.0, 1.5];
    let mut worst = 0.0f64;
    let vals: Vec<Vec<f64>> = ks
        .iter()
        .map(|&k| h_liouville(&FieldConfig { kappa: k, ..cfg.clone() }).map(|h| h.into_iter().map(f64::exp).collect()))
        .collect::<Result<_>>()?;
    for (l, (n, m)) in cfg.links().into_iter().enumerate() {
        // Lagrange interpolation in x = κ² for the leading coefficient.
        let x: Vec<f64> = ks.iter().map(|k| k * k).collect();
        let y: Vec<f64> = vals.iter().map(|v| v[l]).collect();
        let c4 = (0..3)
            .map(|i| {
                let den: f64 = (0..3).filter(|&j| j != i).map(|j| x[i] - x[j]).product();
                y[i] / den
            })
            .sum::<f64>();
        let b = cfg.beta;
        let want = 0.25 * (b / 4.0 * (cfg.pi[n] + cfg.pi[m])).exp() * (-b * (cfg.phi[n] + cfg.phi[m])).exp();
        worst = worst.max((c4 - want).abs() / want);
    }
    Ok(worst)
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// `|Σ H_toda − N log z|` for random positive fields with `u ũ = z`.
pub fn toda_telescoping_defect(seed: u64, samples: usize, sites: usize) -> Result<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let z: f64 = rng.gen_range(0.2..5.0);
        let p: Vec<f64> = (0..sites).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let phi: Vec<f64> = (0..sites).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let u: Vec<f64> = p.iter().map(|x| x.exp()).collect();
        let ut: Vec<f64> = p.iter().map(|x| z * (-x).exp()).collect();
        let v: Vec<f64> = phi.iter().map(|x| (-2.0 * x).exp()).collect();
        let total: f64 = h_toda(&u, &ut, &v, true)?.iter().sum();
        worst = worst.max((total - sites as f64 * z.ln()).abs());
    }
    Ok(worst)
}

fn continuum_outcome(model: Model, field: FieldPreset) -> Outcome {
    match continuum_check(&ContinuumSpec::standard(model, field)) {
        Ok(r) => {
            let errs: Vec<String> = r.errors.iter().map(|e| format!("{e:.2e}")).collect();
            let order = r.min_order();
            Outcome::judged(
                r.converges_with_order(MIN_ORDER),
                Residual::Norm(*r.errors.last().unwrap_or(&f64::NAN)),
                format!(
                    "errors [{}], min order {}, constant {:.6}",
                    errs.join(", "),
                    order.map_or("exact".into(), |o| format!("{o:.3}")),
                    r.constant
                ),
            )
        }
        Err(e) => Outcome::judged(false, Residual::Norm(f64::NAN), e.to_string()),
    }
}

fn zc_outcome(preset: ZcPreset) -> Outcome {
    match zc_residual(preset) {
        Ok(z) => Outcome::exact(z.reduced_terms(), format!("{} raw terms reduce to {}", z.raw_terms(), z.reduced_terms())),
        Err(e) => Outcome::exact(usize::MAX, e.to_string()),
    }
}

fn seeded(cfg: &RunConfig, salt: u64) -> u64 {
    cfg.seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(salt)
}

pub fn checks() -> Vec<Check> {
    let g = Group::Classical;
    let mut out = Vec::new();
    out.push(Check::numeric(g, "hcl-zero-field", "γH = 0 at κ = 0 and γH = 2 log(3/2) at κ = β = 1 for vanishing fields", MACHINE_TOL, |c| {
        let z = |k| FieldConfig::new(vec![0.0; 2], vec![0.0; 2], k, 1.0, false);
        Outcome::sweep(
            c.tol_or(MACHINE_TOL),
            [(0.0, 0.0), (1.0, 2.0 * 1.5f64.ln())]
                .into_iter()
                .map(|(k, want)| Ok((format!("κ={k}"), (h_liouville(&z(k)?)?[0] - want).abs()))),
        )
    }));
    out.push(Check::numeric(g, "hcl-swap-symmetry", "γH is invariant under Φ_n ↔ Φ_{n+1}", MACHINE_TOL, |c| {
        Outcome::sweep(
            c.tol_or(MACHINE_TOL),
            random_configs(seeded(c, 1), 50, 2).into_iter().enumerate().map(|(i, cfg)| {
                let mut sw = cfg.clone();
                sw.phi.swap(0, 1);
                sw.periodic = false;
                let base = FieldConfig { periodic: false, ..cfg };
                Ok((format!("sample {i}"), max_abs_diff(&h_liouville(&base)?, &h_liouville(&sw)?)))
            }),
        )
    }));
    out.push(Check::numeric(g, "hcl-kappa4", "the κ⁴ term of the Liouville log argument is ¼e^{β(Π_n+Π_{n+1})/4}e^{−β(Φ_n+Φ_{n+1})}", 1e-9, |c| {
        Outcome::sweep(
            c.tol_or(1e-9),
            random_configs(seeded(c, 2), 50, 4).iter().enumerate().map(|(i, cfg)| Ok((format!("sample {i}"), kappa4_defect(cfg)?))),
        )
    }));
    for model in Model::ALL {
        for field in [FieldPreset::Sine, FieldPreset::Mixed, FieldPreset::Zero] {
            let id = format!("continuum-{}-{}", model.name().replace('_', "-"), field.name());
            let claim = format!("(1/κ)ΣH → ∫ density for {} with {} fields, order ≥ 1", model.name(), field.name());
            out.push(Check::exact(g, &id, &claim, move |_| continuum_outcome(model, field)));
        }
    }
    out.push(Check::numeric(g, "volterra-trivial", "p ≡ 0, φ ≡ const gives γH = 0", MACHINE_TOL, |c| {
        let cfg = FieldConfig::new(vec![0.7; 6], vec![0.0; 6], 0.1, 1.0, true);
        Outcome::sweep(c.tol_or(MACHINE_TOL), [cfg.map(|cfg| ("φ = 0.7".to_string(), max_abs_diff(&h_volterra(&cfg, false, r_prime_trivial), &[0.0; 6])))])
    }));
    out.push(Check::numeric(g, "volterra-duality", "dual Volterra densities equal the primal ones at φ → −φ", MACHINE_TOL, |c| {
        let cfgs = random_configs(seeded(c, 3), 100, 8);
        Outcome::sweep(
            c.tol_or(MACHINE_TOL),
            cfgs.par_iter()
                .enumerate()
                .flat_map_iter(|(i, cfg)| {
                    [("trivial", r_prime_trivial as RPrime), ("self-dual", r_prime_self_dual as RPrime)].map(|(name, r)| {
                        Ok((format!("sample {i}, r′ {name}"), max_abs_diff(&h_volterra(cfg, true, r), &h_volterra(&cfg.flip_phi(), false, r))))
                    })
                })
                .collect::<Vec<_>>(),
        )
    }));
    out.push(Check::numeric(g, "volterra-self-dual", "the self-dual r′ gives γH = log cosh s₊ + log cosh s₋", MACHINE_TOL, |c| {
        Outcome::sweep(
            c.tol_or(MACHINE_TOL),
            random_configs(seeded(c, 4), 100, 8).iter().enumerate().map(|(i, cfg)| {
                let want: Vec<f64> = cfg
                    .links()
                    .into_iter()
                    .map(|(n, m)| {
                        let (a, b) = volterra_s(cfg, n, m);
                        a.cosh().ln() + b.cosh().ln()
                    })
                    .collect();
                Ok((format!("sample {i}"), max_abs_diff(&h_volterra(cfg, false, r_prime_self_dual), &want)))
            }),
        )
    }));
    out.push(Check::numeric(g, "hff1c-hff1d", "the Weyl-variable free-field density differs from the lattice one by −6 log κ per link on a periodic chain", MACHINE_TOL, |c| {
        Outcome::sweep(
            c.tol_or(MACHINE_TOL),
            random_configs(seeded(c, 5), 100, 8).iter().enumerate().map(|(i, cfg)| {
                let a: f64 = h_freefield_weyl(cfg).iter().sum();
                let b: f64 = h_freefield(cfg).iter().sum();
                let want = -6.0 * cfg.sites() as f64 * cfg.kappa.ln();
                Ok((format!("sample {i}"), (a - b - want).abs() / (1.0 + a.abs())))
            }),
        )
    }));
    out.push(Check::numeric(g, "hto-telescoping", "the periodic Toda sum is N log Z for every field", MACHINE_TOL, |c| {
        Outcome::sweep(c.tol_or(MACHINE_TOL), [toda_telescoping_defect(seeded(c, 6), 100, 10).map(|d| ("100 samples".to_string(), d))])
    }));
    for preset in ZcPreset::ALL {
        let id = format!("zc-{}", preset.name().replace('_', "-"));
        out.push(Check::exact(g, &id, &format!("∂₋U₊ + ∂₊U₋ = 2[U₊, U₋] modulo the {} equation of motion", preset.name()), move |_| {
            zc_outcome(preset)
        }));
    }
    out.push(Check::exact(g, "zc-liouville-free-control", "the Liouville pair does not satisfy zero curvature under □Φ = 0", |_| {
        match zc_residual_with(ZcPreset::Liouville, Some(&DiffExpr::zero())) {
            Ok(z) => Outcome::judged(z.reduced_terms() > 0, Residual::Terms(z.reduced_terms()), format!("{} terms survive", z.reduced_terms())),
            Err(e) => Outcome::judged(false, Residual::Terms(usize::MAX), e.to_string()),
        }
    }));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_classical_check_passes() {
        let cfg = RunConfig::default();
        for c in checks() {
            let o = (c.run)(&cfg);
            assert!(o.passed, "{}: {}", c.id, o.detail);
        }
    }
}
