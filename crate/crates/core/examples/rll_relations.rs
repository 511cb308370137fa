//! Symbolic RLL relations, q-determinants and transfer matrices.

use qbax::catalog::{algebra, AlgebraId};
use qbax::lmatrices::{build_l, build_r, pairings, qdet, rll_residual, transfer_commutator, transfer_matrix, LKind, QdetConvention};

fn main() -> qbax::Result<()> {
    for p in pairings() {
        let res = rll_residual(&algebra(p.l.algebra()), &build_r(p.r), &build_l(p.l))?;
        println!("{:<28} {:<6} x {:<18} {} terms", p.id, p.r.name(), p.l.name(), res.term_count());
    }

    let ext = algebra(AlgebraId::GLq2Ext);
    let g = build_l(LKind::G);
    for conv in QdetConvention::ALL {
        println!("qdet_{} g(λ) = {}", conv.label(), qdet(&ext, &g, conv)?);
    }

    let gl = algebra(AlgebraId::GLq2);
    println!("T_2 for rg(λ) = {}", transfer_matrix(&gl, &build_l(LKind::RomanG), 2, 3)?);
    let aq = algebra(AlgebraId::Aq);
    let c = transfer_commutator(&aq, &build_l(LKind::LQdst), 3, 3)?;
    println!("[T(λ), T(μ)] for three q-DST sites vanishes: {}", c.is_zero());
    Ok(())
}
