//! Clock and shift representations at roots of unity and the numeric RLL channel.

use num_complex::Complex64;
use qbax::catalog::AlgebraId;
use qbax::cyclicrep::{rep_for, rll_residual_num, transfer_commutator_num, unit_circle_points};
use qbax::lmatrices::{LKind, RKind};

fn main() -> qbax::Result<()> {
    for id in [AlgebraId::GLq2Ext, AlgebraId::Aq, AlgebraId::Wq] {
        let s = rep_for(id, 5, 2)?.summary()?;
        let worst = s.relations.iter().map(|(_, d)| *d).fold(0.0, f64::max);
        println!("{} N={} root {}: worst relation residual {worst:.1e}", s.algebra, s.dim, s.root);
        for (name, v, off) in &s.central {
            println!("  {name} = {v:.6} (off-scalar {off:.1e})");
        }
    }

    let rep = rep_for(AlgebraId::GLq2Ext, 7, 1)?;
    for (lam, mu) in unit_circle_points(1, 3) {
        let r = rll_residual_num(RKind::Hat, LKind::GHat, &rep, lam, mu)?;
        println!("ĝ RLL at λ={lam:.3}, μ={mu:.3}: {r:.1e}");
    }

    let aq = rep_for(AlgebraId::Aq, 3, 1)?;
    let (lam, mu) = (Complex64::from_polar(1.0, 0.4), Complex64::from_polar(1.0, 2.1));
    for sites in 1..=4 {
        println!("q-DST [T(λ), T(μ)] on {sites} sites: {:.1e}", transfer_commutator_num(LKind::LQdst, &aq, sites, lam, mu)?);
    }
    Ok(())
}
