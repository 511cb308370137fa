//! The noncompact quantum dilogarithm and its scalar functional equations.

use num_complex::Complex64;
use qbax::qdilog::{feq_defect, s_omega, sdil_defect, DilogParams, FeqId};

fn main() -> qbax::Result<()> {
    for omega in [0.3, 0.5, 0.8] {
        let p = DilogParams::new(omega)?;
        for x in [0.1, 1.0, 10.0] {
            let s = s_omega(Complex64::new(x, 0.0), &p)?;
            let d = sdil_defect(omega, Complex64::new(x.ln(), 0.0))?;
            println!("S_{omega}({x:>4}) = {s:.10}  |S| - 1 = {:+.1e}  difference-equation defect {d:.1e}", s.norm() - 1.0);
        }
    }
    for id in [FeqId::Rw, FeqId::Rw3, FeqId::Rbd3pp] {
        println!("{:<7} defect at ω=0.6, λ=1.4, w=2.5: {:.2e}", id.name(), feq_defect(id, 0.6, 1.4, 2.5)?);
    }
    Ok(())
}
