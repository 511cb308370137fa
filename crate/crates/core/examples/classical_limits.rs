//! Continuum limits of the lattice Hamiltonians and zero-curvature residuals.

use qbax::classical::{continuum_check, zc_residual, ContinuumSpec, FieldPreset, Model, ZcPreset};

fn main() -> qbax::Result<()> {
    for model in Model::ALL {
        let r = continuum_check(&ContinuumSpec::standard(model, FieldPreset::Mixed))?;
        println!("{} (continuum {:.8}, constant {:.6})", model.name(), r.continuum, r.constant);
        for (i, k) in r.kappas.iter().enumerate() {
            let order = i.checked_sub(1).and_then(|j| r.orders[j]).map_or(String::new(), |o| format!("  order {o:.3}"));
            println!("  κ = {k:.5}  error {:.3e}{order}", r.errors[i]);
        }
    }
    for p in ZcPreset::ALL {
        let z = zc_residual(p)?;
        println!("zero curvature {}: {} raw terms, {} after the equation of motion", p.name(), z.raw_terms(), z.reduced_terms());
    }
    Ok(())
}
