//! PBW normal forms, the star anti-involution and critical-pair confluence.

use qbax::catalog::{algebra, build_presentation, faulty_glq2ext, AlgebraId};
use qbax::NCPoly;

fn main() -> qbax::Result<()> {
    let gl = algebra(AlgebraId::GLq2);
    println!("{}", build_presentation(AlgebraId::GLq2).to_text());

    for src in ["(1) d a", "(1) c b a", "(1) d d a", "(q - q^-1) d a c", "(1) d@2 a@1 b@2"] {
        let p = NCPoly::parse(src)?;
        println!("nf({src}) = {}", gl.nf(&p));
    }

    let da = NCPoly::parse("(1) d a")?;
    println!("star(d a) = {}", gl.star(&da));

    for id in AlgebraId::ALL {
        let rep = algebra(id).check_confluence();
        println!("{:<10} {} overlaps, confluent: {}", id.name(), rep.overlaps_checked, rep.is_confluent());
    }
    let broken = faulty_glq2ext().check_confluence();
    if let Some(f) = broken.first_failure {
        println!("without c b -> b c: overlap {} gives {} vs {}", f.overlap, f.via_left, f.via_right);
    }
    Ok(())
}
