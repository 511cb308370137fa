//! Numeric counterparts of the symbolic RLL, transfer-matrix and central-element checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::catalog::AlgebraId;
use crate::error::Result;
use crate::lmatrices::{pairings, qdst_charges, LKind, RKind};
use crate::report::{Check, Group, Outcome, RunConfig};

use super::*;

/// Dimensions `N` of the sweeps.
pub const DIMS: [usize; 3] = [3, 5, 7];

/// Spectral points per pairing and dimension.
pub const SPECTRAL_POINTS: usize = 20;

/// Cap on the numeric transfer-matrix chain length (`3⁶` states).
pub const NUM_TRANSFER_MAX_SITES: usize = 6;

const RLL_TOL: f64 = 1e-10;
const REP_TOL: f64 = 1e-12;

/// `n` seeded pairs `(λ, μ)` uniform on the unit circle.
pub fn unit_circle_points(seed: u64, n: usize) -> Vec<(C64, C64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || C64::from_polar(1.0, rng.gen_range(0.0..std::f64::consts::TAU));
    (0..n).map(|_| (draw(), draw())).collect()
}

/// Algebras with a root-of-unity representation.
pub const REP_ALGEBRAS: [AlgebraId; 4] = [AlgebraId::GLq2, AlgebraId::GLq2Ext, AlgebraId::Aq, AlgebraId::Wq];

fn seed_for(cfg: &RunConfig, salt: &str) -> u64 {
    salt.bytes().fold(cfg.seed, |h, b| h.wrapping_mul(0x100000001b3).wrapping_add(b as u64))
}

/// Worst numeric RLL residual of `(r, l)` over `DIMS` and `SPECTRAL_POINTS` seeded points.
pub fn rll_sweep(r: RKind, l: LKind, seed: u64) -> Vec<Result<(String, f64)>> {
    let pts = unit_circle_points(seed, SPECTRAL_POINTS);
    let items: Vec<(usize, C64, C64)> = DIMS.iter().flat_map(|&n| pts.iter().map(move |&(a, b)| (n, a, b))).collect();
    items
        .par_iter()
        .map(|&(n, lam, mu)| {
            let rep = rep_for(l.algebra(), n, 1)?;
            Ok((format!("N={n}, λ={lam:.4}, μ={mu:.4}"), rll_residual_num(r, l, &rep, lam, mu)?))
        })
        .collect()
}

fn rep_outcome(tol: f64) -> Outcome {
    let mut items = Vec::new();
    for id in REP_ALGEBRAS {
        for n in DIMS {
            for m in [1, 2] {
                items.push((id, n, m));
            }
        }
    }
    Outcome::sweep(
        tol,
        items.into_iter().flat_map(|(id, n, m)| match rep_for(id, n, m).and_then(|r| r.relation_residuals()) {
            Ok(rs) => rs.into_iter().map(|(rel, d)| Ok((format!("{} N={n} m={m}: {rel}", id.name()), d))).collect(),
            Err(e) => vec![Err(e)],
        }),
    )
}

/// Expected value of each catalogued central element under `rep_for`; `None` asks only for a scalar.
fn expected_central(rep: &MatrixRep, name: &str) -> Option<C64> {
    match name {
        "Cq" => rep.c,
        "Zq" => rep.z,
        "eta1" | "eta2" => Some(C64::new(1.0, 0.0)),
        _ => None,
    }
}

fn central_outcome(tol: f64) -> Outcome {
    let mut samples = Vec::new();
    for id in REP_ALGEBRAS {
        for n in DIMS {
            let vals = rep_for(id, n, 1).and_then(|r| Ok((r.central_values()?, r)));
            match vals {
                Ok((vs, rep)) => {
                    for (name, s, off) in vs {
                        let miss = expected_central(&rep, &name).map_or(0.0, |e| (s - e).norm());
                        samples.push(Ok((format!("{} N={n}: {name} = {s:.6}", id.name()), off.max(miss))));
                    }
                }
                Err(e) => samples.push(Err(e)),
            }
        }
    }
    Outcome::sweep(tol, samples)
}

/// Relative distance of the `λ^{−N}` and `λ^{2−N}` coefficients of the q-DST transfer matrix from `Q` and `Q·H`.
pub fn qdst_expansion_num(n: usize, sites: usize) -> Result<f64> {
    let rep = qosc_rep(n, 1, DEFAULT_C)?;
    let alg = crate::catalog::algebra(AlgebraId::Aq);
    let coeffs = transfer_laurent_num(LKind::LQdst, &rep, sites, sites as i32)?;
    let (q, h) = qdst_charges(&alg, sites);
    let vals = rep.params(C64::new(1.0, 0.0), C64::new(1.0, 0.0));
    let qm = rep.eval_poly(&q, sites, &vals)?;
    let qh = &qm * rep.eval_poly(&h, sites, &vals)?;
    let s = sites as i32;
    let d1 = (&coeffs[&-s] - &qm).norm() / qm.norm();
    let d2 = (&coeffs[&(2 - s)] - &qh).norm() / qh.norm();
    Ok(d1.max(d2))
}

/// Spectral L-matrices whose transfer matrices are checked, with their check-id suffixes.
pub fn transfer_kinds() -> Vec<(&'static str, LKind)> {
    vec![
        ("rg", LKind::RomanG),
        ("rghat", LKind::RomanGHat),
        ("g", LKind::G),
        ("ghat", LKind::GHat),
        ("la", LKind::LA),
        ("lahat", LKind::LAHat),
        ("qdst", LKind::LQdst),
        ("gprime", LKind::GPrime),
        ("gdoubleprime", LKind::GDoublePrime),
        ("ghatdoubleprime", LKind::GHatDoublePrime),
        ("toda", LKind::LToda),
    ]
}

pub fn checks() -> Vec<Check> {
    let g = Group::Cyclicrep;
    let mut out = Vec::new();
    out.push(Check::numeric(g, "rep-relations", "clock/shift images satisfy every defining relation for N = 3, 5, 7", REP_TOL, |c| {
        rep_outcome(c.tol_or(REP_TOL))
    }));
    out.push(Check::numeric(g, "rep-central", "C_q = c, Z_q = z, η′ = η″ = 1 and D_q is scalar in every representation", REP_TOL, |c| {
        central_outcome(c.tol_or(REP_TOL))
    }));
    for p in pairings() {
        let (r, l) = (p.r, p.l);
        let id = format!("num-{}", p.id);
        let salt = id.clone();
        out.push(Check::numeric(g, &id, &format!("{} at 20 unit-circle points, N = 3, 5, 7", p.claim), RLL_TOL, move |c| {
            Outcome::sweep(c.tol_or(RLL_TOL), rll_sweep(r, l, seed_for(c, &salt)))
        }));
    }
    out.push(Check::exact(g, "num-rll-aq-qdst-rhat-control", "R̂(λ) with the q-DST matrix fails numerically", |c| {
        match rll_sweep(RKind::Hat, LKind::LQdst, seed_for(c, "control")).into_iter().collect::<Result<Vec<_>>>() {
            Ok(v) => {
                let d = v.iter().map(|(_, d)| *d).fold(f64::INFINITY, f64::min);
                Outcome::judged(d > 1e-3, crate::report::Residual::Norm(d), format!("smallest residual {d:.3e}"))
            }
            Err(e) => Outcome::judged(false, crate::report::Residual::Norm(f64::NAN), e.to_string()),
        }
    }));
    for (name, l) in transfer_kinds() {
        let id = format!("num-transfer-{name}");
        let salt = id.clone();
        out.push(Check::numeric(g, &id, &format!("[T(λ), T(μ)] = 0 for {} at N = 3 on min(max-sites, 6) sites", l.name()), RLL_TOL, move |c| {
            let sites = c.max_sites.min(NUM_TRANSFER_MAX_SITES);
            let pts = unit_circle_points(seed_for(c, &salt), 5);
            Outcome::sweep(
                c.tol_or(RLL_TOL),
                pts.par_iter()
                    .map(|&(lam, mu)| {
                        let rep = rep_for(l.algebra(), 3, 1)?;
                        Ok((format!("{sites} sites, λ={lam:.4}, μ={mu:.4}"), transfer_commutator_num(l, &rep, sites, lam, mu)?))
                    })
                    .collect::<Vec<_>>(),
            )
        }));
    }
    out.push(Check::numeric(g, "num-qdst-expansion", "Laurent coefficients of the 2-site q-DST transfer matrix are Q and Q·H", RLL_TOL, |c| {
        Outcome::sweep(c.tol_or(RLL_TOL), DIMS.iter().map(|&n| Ok((format!("N={n}"), qdst_expansion_num(n, 2)?))))
    }));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn points_are_on_the_circle_and_seeded() {
        let p = unit_circle_points(3, 4);
        assert_eq!(p, unit_circle_points(3, 4));
        assert!(p.iter().all(|(a, b)| (a.norm() - 1.0).abs() < 1e-15 && (b.norm() - 1.0).abs() < 1e-15));
    }

    #[test]
    fn every_cyclicrep_check_passes() {
        let cfg = RunConfig::default();
        for c in checks() {
            let o = (c.run)(&cfg);
            assert!(o.passed, "{}: {}", c.id, o.detail);
        }
    }
}
