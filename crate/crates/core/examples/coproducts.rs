//! Algebra maps, coproducts, central elements and counit analysis.

use qbax::catalog::{algebra, build_map, central_elements, commutators_with_generators, counit_analysis, identity_registry, AlgebraId, MapId};

fn main() {
    for id in MapId::ALL {
        let m = build_map(id);
        let (src, tgt) = (algebra(id.source()), algebra(id.target()));
        let hom = m.verify_hom(&src, &tgt);
        let star = m.verify_star_hom(&src, &tgt);
        println!(
            "{:<13} {:>9} -> {:<9} relations ok {:>2}, skipped {}, star failures {}",
            id.name(),
            id.source().name(),
            id.target().name(),
            hom.passed.len(),
            hom.skipped.len(),
            star.len()
        );
    }

    for ce in central_elements() {
        let alg = algebra(ce.algebra);
        let central = commutators_with_generators(&alg, &ce.value).iter().all(|(_, c)| c.is_zero());
        println!("{} in {}: {}, central: {central}", ce.name, ce.algebra.name(), ce.value);
    }

    for (map, alg) in [(MapId::Delta, AlgebraId::GLq2), (MapId::SmallDelta, AlgebraId::GLq2Ext)] {
        let r = counit_analysis(&build_map(map), &algebra(alg));
        println!("counit for {} on {}: exists {}, values {:?}", map.name(), alg.name(), r.exists(), r.values);
        for c in &r.contradictions {
            println!("  contradiction: {c}");
        }
    }

    let reg = identity_registry();
    let passed = reg.iter().filter(|ic| ic.run().passed).count();
    println!("identity registry: {passed}/{} pass", reg.len());
}
