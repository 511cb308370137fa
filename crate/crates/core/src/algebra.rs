//! Normal forms by leftmost rewriting, site by site, and the overlap test for confluence.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::coeff::Coeff;
use crate::error::Result;
use crate::ncpoly::{Gen, Letter, NCPoly, Word, NGEN};
use crate::presentation::Presentation;

type Reduced = Arc<Vec<(Vec<Gen>, Coeff)>>;

/// Right-hand side of one rewrite rule as `(word, coefficient)` pairs.
type Rhs = Vec<(Vec<Gen>, Coeff)>;

/// A validated presentation with its rewrite table. Every site of a polynomial is a copy of this algebra.
pub struct Algebra {
    pres: Presentation,
    table: Vec<Option<Rhs>>,
    cache: Mutex<HashMap<Vec<Gen>, Reduced>>,
}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Algebra({})", self.pres.name)
    }
}

impl Clone for Algebra {
    fn clone(&self) -> Self {
        Algebra::new_unchecked(self.pres.clone())
    }
}

/// Outcome of the overlap test.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConfluenceReport {
    pub algebra: String,
    pub overlaps_checked: usize,
    /// First overlap `x y z` whose two reductions differ.
    pub first_failure: Option<OverlapFailure>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OverlapFailure {
    pub overlap: String,
    pub left_rule: String,
    pub right_rule: String,
    pub via_left: String,
    pub via_right: String,
}

impl ConfluenceReport {
    pub fn is_confluent(&self) -> bool {
        self.first_failure.is_none()
    }
}

fn idx(x: Gen, y: Gen) -> usize {
    x.index() * NGEN + y.index()
}

impl Algebra {
    pub fn new(pres: Presentation) -> Result<Self> {
        pres.validate()?;
        Ok(Self::new_unchecked(pres))
    }

    fn new_unchecked(pres: Presentation) -> Self {
        let mut table: Vec<Option<Rhs>> = vec![None; NGEN * NGEN];
        for r in &pres.rules {
            table[idx(r.lhs.0, r.lhs.1)] = Some(r.rhs.iter().map(|(c, w)| (w.clone(), c.clone())).collect());
        }
        for &(x, y) in &pres.unit_pairs {
            table[idx(x, y)] = Some(vec![(vec![], Coeff::one())]);
            table[idx(y, x)] = Some(vec![(vec![], Coeff::one())]);
        }
        Algebra { pres, table, cache: Mutex::new(HashMap::new()) }
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn name(&self) -> &str {
        &self.pres.name
    }

    pub fn contains(&self, g: Gen) -> bool {
        self.pres.contains(g)
    }

    fn rule(&self, x: Gen, y: Gen) -> Option<&Vec<(Vec<Gen>, Coeff)>> {
        self.table[idx(x, y)].as_ref()
    }

    /// Normal form of a single-site word.
    pub fn reduce_word(&self, w: &[Gen]) -> Reduced {
        if let Some(r) = self.cache.lock().unwrap().get(w) {
            return r.clone();
        }
        let pos = (0..w.len().saturating_sub(1)).find(|&i| self.rule(w[i], w[i + 1]).is_some());
        let out: Reduced = match pos {
            None => Arc::new(vec![(w.to_vec(), Coeff::one())]),
            Some(i) => {
                let mut acc: BTreeMap<Vec<Gen>, Coeff> = BTreeMap::new();
                for (rw, rc) in self.rule(w[i], w[i + 1]).unwrap() {
                    let mut nw = w[..i].to_vec();
                    nw.extend_from_slice(rw);
                    nw.extend_from_slice(&w[i + 2..]);
                    for (fw, fc) in self.reduce_word(&nw).iter() {
                        let e = acc.entry(fw.clone()).or_default();
                        *e += &(rc * fc);
                    }
                }
                Arc::new(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect())
            }
        };
        self.cache.lock().unwrap().insert(w.to_vec(), out.clone());
        out
    }

    /// Normal form of a multi-site polynomial. Distinct sites commute; each site is reduced independently.
    pub fn nf(&self, p: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            let mut by_site: BTreeMap<u8, Vec<Gen>> = BTreeMap::new();
            for l in w {
                by_site.entry(l.site).or_default().push(l.gen);
            }
            let mut partial: Vec<(Word, Coeff)> = vec![(Vec::new(), c.clone())];
            for (site, gens) in by_site {
                let red = self.reduce_word(&gens);
                let mut next = Vec::with_capacity(partial.len() * red.len());
                for (pw, pc) in &partial {
                    for (rw, rc) in red.iter() {
                        let mut nw = pw.clone();
                        nw.extend(rw.iter().map(|g| Letter::new(site, *g)));
                        next.push((nw, pc * rc));
                    }
                }
                partial = next;
            }
            for (w, c) in partial {
                out.add_term(w, &c);
            }
        }
        out
    }

    pub fn mul(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        self.nf(&a.mul_free(b))
    }

    pub fn mul_all(&self, ps: &[&NCPoly]) -> NCPoly {
        let mut acc = NCPoly::one();
        for p in ps {
            acc = self.mul(&acc, p);
        }
        acc
    }

    /// `[a, b] = ab - ba` in normal form.
    pub fn commutator(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        self.nf(&a.mul_free(b).sub(&b.mul_free(a)))
    }

    /// `ab - c·ba` in normal form.
    pub fn q_commutator(&self, a: &NCPoly, b: &NCPoly, c: &Coeff) -> NCPoly {
        self.nf(&a.mul_free(b).sub(&b.mul_free(a).scale(c)))
    }

    pub fn equal(&self, a: &NCPoly, b: &NCPoly) -> bool {
        self.nf(&a.sub(b)).is_zero()
    }

    /// Antilinear anti-automorphism from the star table, applied factorwise.
    pub fn star(&self, p: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            let nw: Word = w
                .iter()
                .rev()
                .map(|l| Letter::new(l.site, self.pres.star_of(l.gen).unwrap_or(l.gen)))
                .collect();
            out.add_term(nw, &c.conj());
        }
        self.nf(&out)
    }

    /// Tests every overlap `x y z` of two reducible pairs.
    pub fn check_confluence(&self) -> ConfluenceReport {
        let gens = &self.pres.generators;
        let mut checked = 0;
        for &x in gens {
            for &y in gens {
                let Some(rxy) = self.rule(x, y) else { continue };
                for &z in gens {
                    let Some(ryz) = self.rule(y, z) else { continue };
                    checked += 1;
                    let mut left = NCPoly::zero();
                    for (w, c) in rxy {
                        let mut nw = w.clone();
                        nw.push(z);
                        left.add_assign(&NCPoly::gens(&nw).scale(c));
                    }
                    let mut right = NCPoly::zero();
                    for (w, c) in ryz {
                        let mut nw = vec![x];
                        nw.extend_from_slice(w);
                        right.add_assign(&NCPoly::gens(&nw).scale(c));
                    }
                    let l = self.nf(&left);
                    let r = self.nf(&right);
                    if l != r {
                        return ConfluenceReport {
                            algebra: self.pres.name.clone(),
                            overlaps_checked: checked,
                            first_failure: Some(OverlapFailure {
                                overlap: format!("{} {} {}", x.symbol(), y.symbol(), z.symbol()),
                                left_rule: format!("{} {}", x.symbol(), y.symbol()),
                                right_rule: format!("{} {}", y.symbol(), z.symbol()),
                                via_left: l.to_string(),
                                via_right: r.to_string(),
                            }),
                        };
                    }
                }
            }
        }
        ConfluenceReport { algebra: self.pres.name.clone(), overlaps_checked: checked, first_failure: None }
    }

    /// Whether a single-site word is irreducible.
    pub fn is_normal_word(&self, w: &[Gen]) -> bool {
        w.windows(2).all(|p| self.rule(p[0], p[1]).is_none())
    }
}
