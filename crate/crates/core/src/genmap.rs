//! Algebra maps given on generators, with values in a tensor power of the target.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::error::{QbaxError, Result};
use crate::ncpoly::{Gen, Letter, NCPoly};

/// Images occupy sites `1..=arity`. Generators without an image are uncovered.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GenMap {
    pub name: String,
    pub source: String,
    pub target: String,
    pub arity: u8,
    pub images: BTreeMap<Gen, NCPoly>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HomReport {
    pub map: String,
    pub passed: Vec<String>,
    /// Relation name and its nonzero image.
    pub failed: Vec<(String, String)>,
    /// Relations involving an uncovered generator.
    pub skipped: Vec<String>,
}

impl HomReport {
    pub fn ok(&self) -> bool {
        self.failed.is_empty()
    }
}

impl GenMap {
    pub fn new(name: &str, source: &str, target: &str, arity: u8) -> Self {
        GenMap { name: name.into(), source: source.into(), target: target.into(), arity, images: BTreeMap::new() }
    }

    pub fn with(mut self, g: Gen, img: NCPoly) -> Self {
        self.images.insert(g, img);
        self
    }

    pub fn image(&self, g: Gen) -> Result<&NCPoly> {
        self.images
            .get(&g)
            .ok_or_else(|| QbaxError::PartialMap { map: self.name.clone(), gen: g.symbol().to_string() })
    }

    pub fn covers(&self, p: &NCPoly) -> bool {
        p.generators().iter().all(|g| self.images.contains_key(g))
    }

    fn substitute(&self, p: &NCPoly, place: impl Fn(u8) -> Option<u8>, shift: impl Fn(u8) -> u8) -> Result<NCPoly> {
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            let mut acc = NCPoly::scalar(c.clone());
            for l in w {
                let factor = match place(l.site) {
                    Some(base) => self.image(l.gen)?.map_sites(|s| s + base - 1),
                    None => NCPoly::word(vec![Letter::new(shift(l.site), l.gen)]),
                };
                acc = acc.mul_free(&factor);
            }
            out.add_assign(&acc);
        }
        Ok(out)
    }

    /// Applies the map to every site; site `k` goes to sites `(k-1)·arity+1 ..= k·arity`. Result is not normalized.
    pub fn apply_free(&self, p: &NCPoly) -> Result<NCPoly> {
        let a = self.arity;
        self.substitute(p, |k| Some((k - 1) * a + 1), |s| s)
    }

    pub fn apply(&self, target: &Algebra, p: &NCPoly) -> Result<NCPoly> {
        Ok(target.nf(&self.apply_free(p)?))
    }

    /// Applies the map to site `s` only; higher sites move up by `arity - 1`.
    pub fn apply_at(&self, target: &Algebra, p: &NCPoly, s: u8) -> Result<NCPoly> {
        let a = self.arity;
        let out = self.substitute(p, |k| if k == s { Some(s) } else { None }, |k| if k > s { k + a - 1 } else { k })?;
        Ok(target.nf(&out))
    }

    /// `self ∘ first`: `first` is applied, then `self` on every resulting site.
    pub fn compose(&self, first: &GenMap, target: &Algebra) -> Result<GenMap> {
        let mut out = GenMap::new(
            &format!("{}∘{}", self.name, first.name),
            &first.source,
            &self.target,
            first.arity * self.arity,
        );
        for (g, img) in &first.images {
            if self.covers(img) {
                out.images.insert(*g, self.apply(target, img)?);
            }
        }
        Ok(out)
    }

    /// Checks every defining relation of `source` whose generators are covered.
    pub fn verify_hom(&self, source: &Algebra, target: &Algebra) -> HomReport {
        let mut rep = HomReport { map: self.name.clone(), passed: vec![], failed: vec![], skipped: vec![] };
        for (name, rel) in source.presentation().relations() {
            if !self.covers(&rel) {
                rep.skipped.push(name);
                continue;
            }
            let img = self.apply(target, &rel).expect("covered relation");
            if img.is_zero() {
                rep.passed.push(name);
            } else {
                rep.failed.push((name, img.to_string()));
            }
        }
        rep
    }

    /// `(Φ⊗id)Φ = (id⊗Φ)Φ` on covered generators whose images are covered. Returns failures and skipped generators.
    pub fn verify_coassoc(&self, alg: &Algebra) -> (Vec<(Gen, String)>, Vec<Gen>) {
        let mut failed = Vec::new();
        let mut skipped = Vec::new();
        for (g, img) in &self.images {
            if !self.covers(img) {
                skipped.push(*g);
                continue;
            }
            let l = self.apply_at(alg, img, 1).unwrap();
            let r = self.apply_at(alg, img, 2).unwrap();
            let d = alg.nf(&l.sub(&r));
            if !d.is_zero() {
                failed.push((*g, d.to_string()));
            }
        }
        (failed, skipped)
    }

    /// `Φ(x*) = Φ(x)*` on covered generators. Returns failing generators.
    pub fn verify_star_hom(&self, source: &Algebra, target: &Algebra) -> Vec<(Gen, String)> {
        let mut failed = Vec::new();
        for (g, img) in &self.images {
            let sx = source.star(&NCPoly::gen(*g));
            if !self.covers(&sx) {
                continue;
            }
            let l = self.apply(target, &sx).unwrap();
            let r = target.star(img);
            let d = target.nf(&l.sub(&r));
            if !d.is_zero() {
                failed.push((*g, d.to_string()));
            }
        }
        failed
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "map {}: {} -> {} arity {}", self.name, self.source, self.target, self.arity).unwrap();
        for (g, img) in &self.images {
            writeln!(s, "{} -> {}", g.ascii(), img.to_ascii()).unwrap();
        }
        s.push_str("end\n");
        s
    }

    pub fn from_text(src: &str) -> Result<Self> {
        let perr = |m: String| QbaxError::Parse(m);
        let mut lines = src.lines().map(|l| l.split('#').next().unwrap().trim()).filter(|l| !l.is_empty());
        let head = lines.next().ok_or_else(|| perr("empty map".into()))?;
        let head = head.strip_prefix("map ").ok_or_else(|| perr(format!("expected `map`, found `{head}`")))?;
        let (name, rest) = head.split_once(':').ok_or_else(|| perr("missing `:` in map header".into()))?;
        let (src_alg, rest) = rest.split_once("->").ok_or_else(|| perr("missing `->` in map header".into()))?;
        let (tgt_alg, arity) = rest.split_once("arity").ok_or_else(|| perr("missing arity".into()))?;
        let arity: u8 = arity.trim().parse().map_err(|_| perr("bad arity".into()))?;
        let mut m = GenMap::new(name.trim(), src_alg.trim(), tgt_alg.trim(), arity);
        for line in lines {
            if line == "end" {
                break;
            }
            let (g, img) = line.split_once("->").ok_or_else(|| perr(format!("bad image line `{line}`")))?;
            let g = Gen::from_name(g.trim()).ok_or_else(|| perr(format!("unknown generator `{}`", g.trim())))?;
            let p = NCPoly::parse(img)?;
            if p.max_site() > arity {
                return Err(perr(format!("image of {} exceeds arity", g.ascii())));
            }
            m.images.insert(g, p);
        }
        Ok(m)
    }
}
