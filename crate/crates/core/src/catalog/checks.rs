//! Registered checks for presentations, maps, central elements and the identity registry.

use crate::report::{Check, Group, Outcome, Residual};

use super::*;

/// Overlap the fault-injection control must name.
pub const FAULT_OVERLAP: &str = "d b a";

fn identity_checks() -> Vec<Check> {
    identity_registry()
        .into_iter()
        .map(|ic| {
            let (id, claim) = (ic.id, ic.claim);
            Check::exact(Group::Catalog, id, claim, move |_| {
                let o = ic.run();
                Outcome::judged(o.passed, Residual::Terms(o.residual_terms), o.detail)
            })
        })
        .collect()
}

/// Critical-pair outcome for `alg`: passes iff every overlap resolves.
pub fn confluence_outcome(alg: &Algebra) -> Outcome {
    let rep = alg.check_confluence();
    match &rep.first_failure {
        None => Outcome::exact(0, format!("{} overlaps resolve", rep.overlaps_checked)),
        Some(f) => Outcome::judged(
            false,
            Residual::Terms(1),
            format!(
                "overlap {} ({} vs {}) reduces to {} and {}",
                f.overlap, f.left_rule, f.right_rule, f.via_left, f.via_right
            ),
        ),
    }
}

/// Confluence of the extended presentation with its `c b` rule removed; fails by design.
pub fn fault_injection_check() -> Check {
    Check::exact(Group::Catalog, "confluence-faulty-glq2ext", "the extended presentation without c b -> b c is confluent", |_| {
        confluence_outcome(&faulty_glq2ext())
    })
}

fn hom_outcome(id: MapId) -> Outcome {
    let rep = build_map(id).verify_hom(&algebra(id.source()), &algebra(id.target()));
    let detail = match rep.failed.first() {
        Some((rel, img)) => format!("relation {rel} maps to {img}"),
        None if rep.skipped.is_empty() => format!("{} relations map to zero", rep.passed.len()),
        None => format!("{} relations map to zero; skipped {}", rep.passed.len(), rep.skipped.join(", ")),
    };
    Outcome::exact(rep.failed.len(), detail)
}

fn coassoc_outcome(id: MapId) -> Outcome {
    let (failed, skipped) = build_map(id).verify_coassoc(&algebra(id.source()));
    let skipped: Vec<&str> = skipped.iter().map(|g| g.symbol()).collect();
    let detail = match failed.first() {
        Some((x, d)) => format!("{}: sides differ by {d}", x.symbol()),
        None if skipped.is_empty() => "both triple coproducts agree on every generator".into(),
        None => format!("both triple coproducts agree; skipped {}", skipped.join(", ")),
    };
    Outcome::exact(failed.len(), detail)
}

fn star_outcome(id: MapId) -> Outcome {
    let failed = build_map(id).verify_star_hom(&algebra(id.source()), &algebra(id.target()));
    let detail = match failed.first() {
        Some((x, d)) => format!("{}: (*⊗*)∘m − m∘* = {d}", x.symbol()),
        None => "(*⊗*)∘m = m∘* on every covered generator".into(),
    };
    Outcome::exact(failed.len(), detail)
}

fn counit_outcome(map: MapId, alg: AlgebraId, want: &[(&str, &str)], exists: bool) -> Outcome {
    let rep = counit_analysis(&build_map(map), &algebra(alg));
    let value = |g: &str| rep.values.iter().find(|(k, _)| k == g).map(|(_, v)| v.as_str());
    let wrong: Vec<String> = want
        .iter()
        .filter(|(g, v)| value(g) != Some(*v))
        .map(|(g, v)| format!("ε({g}) = {} instead of {v}", value(g).unwrap_or("?")))
        .collect();
    let values = rep.values.iter().map(|(g, v)| format!("ε({g})={v}")).collect::<Vec<_>>().join(", ");
    let passed = wrong.is_empty() && rep.exists() == exists;
    let detail = match rep.contradictions.first() {
        _ if !wrong.is_empty() => wrong.join("; "),
        Some(c) => format!("{values}; {} contradictions, first: {c}", rep.contradictions.len()),
        None => format!("{values}; all counit axioms and relations hold"),
    };
    Outcome::judged(passed, Residual::Terms(wrong.len()), detail)
}

pub fn checks() -> Vec<Check> {
    let g = Group::Catalog;
    let mut out = identity_checks();
    for id in AlgebraId::ALL {
        out.push(Check::exact(g, &format!("confluence-{}", id.name()), &format!("every critical pair of {} resolves", id.name()), move |_| {
            confluence_outcome(&algebra(id))
        }));
    }
    out.push(Check::exact(g, "confluence-fault-control", "removing c b -> b c from the extended presentation breaks the overlap d b a", |_| {
        let o = confluence_outcome(&faulty_glq2ext());
        let named = o.detail.starts_with(&format!("overlap {FAULT_OVERLAP} "));
        Outcome::judged(!o.passed && named, Residual::Terms(0), o.detail)
    }));
    for ce in central_elements() {
        let (name, alg) = (ce.name.clone(), ce.algebra);
        out.push(Check::exact(g, &format!("central-{name}-{}", alg.name()), &format!("{name} commutes with every generator of {}", alg.name()), move |_| {
            let a = algebra(alg);
            let bad: Vec<(Gen, NCPoly)> = commutators_with_generators(&a, &ce.value).into_iter().filter(|(_, c)| !c.is_zero()).collect();
            match bad.first() {
                Some((x, c)) => Outcome::exact(c.len(), format!("[{name}, {}] = {c}", x.symbol())),
                None => Outcome::exact(0, format!("{} commutators vanish", a.presentation().generators.len())),
            }
        }));
    }
    for id in MapId::ALL {
        let m = build_map(id);
        let what = format!("{} : {} -> {}", id.name(), id.source().name(), id.target().name());
        out.push(Check::exact(g, &format!("hom-{}", id.name()), &format!("{what} respects every covered defining relation"), move |_| hom_outcome(id)));
        if m.arity == 2 && id.source() == id.target() {
            out.push(Check::exact(g, &format!("coassoc-{}", id.name()), &format!("{} is coassociative", id.name()), move |_| coassoc_outcome(id)));
        }
        out.push(Check::exact(g, &format!("star-{}", id.name()), &format!("{} intertwines the star structures", id.name()), move |_| star_outcome(id)));
    }
    out.push(Check::exact(g, "counit-Delta-glq2", "Delta on GLq2 has the counit ε(a) = ε(d) = 1, ε(b) = ε(c) = 0", |_| {
        counit_outcome(MapId::Delta, AlgebraId::GLq2, &[("a", "1"), ("b", "0"), ("c", "0"), ("d", "1")], true)
    }));
    out.push(Check::exact(g, "counit-delta-absent", "delta admits no counit: ε(c) = 1 forces ε(d) = 0 against (id⊗ε)δ(d) = d", |_| {
        counit_outcome(MapId::SmallDelta, AlgebraId::GLq2Ext, &[("c", "1"), ("d", "0")], false)
    }));
    out.push(Check::exact(g, "counit-deltaA-absent", "deltaA admits no counit: ε(k) = 1 forces ε(f) = 0", |_| {
        counit_outcome(MapId::DeltaA, AlgebraId::Aq, &[("k", "1"), ("f", "0")], false)
    }));
    out.push(Check::exact(g, "counit-deltaW-v", "deltaW forces ε(v) = ε(v⁻¹) = 1 consistently, while u and ũ admit no counit value", |_| {
        let o = counit_outcome(MapId::DeltaW, AlgebraId::Wq, &[("v", "1"), ("v⁻¹", "1")], false);
        let rep = counit_analysis(&build_map(MapId::DeltaW), &algebra(AlgebraId::Wq));
        let clash = rep.contradictions.iter().find(|c| c.starts_with("relation"));
        match clash {
            Some(c) => Outcome::judged(false, o.residual, c.clone()),
            None => o,
        }
    }));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::RunConfig;

    #[test]
    fn every_catalog_check_passes() {
        let cfg = RunConfig::default();
        for c in checks() {
            let o = (c.run)(&cfg);
            assert!(o.passed, "{}: {}", c.id, o.detail);
        }
    }

    #[test]
    fn fault_injection_names_the_overlap() {
        let o = (fault_injection_check().run)(&RunConfig::default());
        assert!(!o.passed);
        assert!(o.detail.contains(FAULT_OVERLAP), "{}", o.detail);
    }
}
