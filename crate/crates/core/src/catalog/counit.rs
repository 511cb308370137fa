//! Scalar constraint propagation for a counit of an arity-2 map.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::coeff::Coeff;
use crate::genmap::GenMap;
use crate::ncpoly::{Gen, Letter};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CounitReport {
    pub map: String,
    /// Derived scalar values `ε(x)`.
    pub values: Vec<(String, String)>,
    /// Constraints that no scalar assignment satisfies.
    pub contradictions: Vec<String>,
    /// Generators whose value was never fixed.
    pub undetermined: Vec<String>,
}

impl CounitReport {
    pub fn exists(&self) -> bool {
        self.contradictions.is_empty() && self.undetermined.is_empty()
    }
}

/// `Σ coeff · Π ε(g)` must equal `target`.
struct Constraint {
    label: String,
    terms: Vec<(Coeff, Vec<Gen>)>,
    target: Coeff,
}

fn constraints(map: &GenMap, alg: &Algebra) -> Vec<Constraint> {
    let mut out = Vec::new();
    for (x, img) in &map.images {
        if !alg.contains(*x) {
            continue;
        }
        for (side, keep) in [("(id⊗ε)", 1u8), ("(ε⊗id)", 2u8)] {
            let mut groups: BTreeMap<Vec<Gen>, Vec<(Coeff, Vec<Gen>)>> = BTreeMap::new();
            for (w, c) in img.terms() {
                let kept: Vec<Gen> = w.iter().filter(|l: &&Letter| l.site == keep).map(|l| l.gen).collect();
                let eps: Vec<Gen> = w.iter().filter(|l| l.site != keep).map(|l| l.gen).collect();
                groups.entry(kept).or_default().push((c.clone(), eps));
            }
            groups.entry(vec![*x]).or_default();
            for (kept, terms) in groups {
                let target = if kept == vec![*x] { Coeff::one() } else { Coeff::zero() };
                let word = if kept.is_empty() {
                    "1".to_string()
                } else {
                    kept.iter().map(|g| g.symbol()).collect::<Vec<_>>().join("·")
                };
                out.push(Constraint {
                    label: format!("coefficient of {word} in {side}{}({})", map.name, x.symbol()),
                    terms,
                    target,
                });
            }
        }
    }
    out
}

fn eval(terms: &[(Coeff, Vec<Gen>)], vals: &BTreeMap<Gen, Coeff>) -> Option<Coeff> {
    let mut acc = Coeff::zero();
    for (c, gs) in terms {
        let mut t = c.clone();
        for g in gs {
            t = &t * vals.get(g)?;
        }
        acc += &t;
    }
    Some(acc)
}

/// Derives `ε` from the counit axioms on both sides, then tests it on the defining relations.
pub fn counit_analysis(map: &GenMap, alg: &Algebra) -> CounitReport {
    let cons = constraints(map, alg);
    let mut vals: BTreeMap<Gen, Coeff> = BTreeMap::new();
    let mut contradictions = Vec::new();
    let mut done = vec![false; cons.len()];
    loop {
        let mut progress = false;
        for (i, c) in cons.iter().enumerate() {
            if done[i] {
                continue;
            }
            if let Some(v) = eval(&c.terms, &vals) {
                done[i] = true;
                progress = true;
                if v != c.target {
                    contradictions.push(format!("{}: got {}, need {}", c.label, v, c.target));
                }
                continue;
            }
            let unknown: BTreeSet<Gen> =
                c.terms.iter().flat_map(|(_, gs)| gs.iter().copied()).filter(|g| !vals.contains_key(g)).collect();
            if unknown.len() != 1 {
                continue;
            }
            let u = *unknown.iter().next().unwrap();
            let mut lin = Coeff::zero();
            let mut rest = Coeff::zero();
            let mut linear = true;
            for (k, gs) in &c.terms {
                let deg = gs.iter().filter(|g| **g == u).count();
                let mut t = k.clone();
                for g in gs.iter().filter(|g| **g != u) {
                    t = &t * &vals[g];
                }
                match deg {
                    0 => rest += &t,
                    1 => lin += &t,
                    _ => linear = false,
                }
            }
            if !linear {
                continue;
            }
            if lin.is_zero() {
                continue;
            }
            if let Ok(inv) = lin.inv() {
                vals.insert(u, &(&c.target - &rest) * &inv);
                done[i] = true;
                progress = true;
            }
        }
        if !progress {
            break;
        }
    }
    for (name, rel) in alg.presentation().relations() {
        let mut acc = Coeff::zero();
        let mut known = true;
        for (w, c) in rel.terms() {
            let mut t = c.clone();
            for l in w {
                match vals.get(&l.gen) {
                    Some(v) => t = &t * v,
                    None => known = false,
                }
            }
            acc += &t;
        }
        if known && !acc.is_zero() {
            contradictions.push(format!("relation {name} evaluates to {acc} under ε"));
        }
    }
    let undetermined = alg
        .presentation()
        .generators
        .iter()
        .filter(|g| map.images.contains_key(g) && !vals.contains_key(g))
        .map(|g| g.symbol().to_string())
        .collect();
    CounitReport {
        map: map.name.clone(),
        values: vals.iter().map(|(g, v)| (g.symbol().to_string(), v.to_string())).collect(),
        contradictions,
        undetermined,
    }
}
