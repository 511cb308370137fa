//! Finite presentations: generators in PBW order, quadratic rewrite rules, invertible pairs and a star table.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::coeff::Coeff;
use crate::error::{QbaxError, Result};
use crate::ncpoly::{Gen, NCPoly};

/// `lhs.0 · lhs.1 -> Σ coeff · word`, with `lhs.0` after `lhs.1` in the generator order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Rule {
    pub lhs: (Gen, Gen),
    pub rhs: Vec<(Coeff, Vec<Gen>)>,
}

impl Rule {
    /// Like terms on the right are merged and sorted.
    pub fn new(x: Gen, y: Gen, rhs: Vec<(Coeff, Vec<Gen>)>) -> Self {
        let mut p = NCPoly::zero();
        for (c, w) in &rhs {
            p.add_assign(&NCPoly::gens(w).scale(c));
        }
        let rhs = p.terms().map(|(w, c)| (c.clone(), w.iter().map(|l| l.gen).collect())).collect();
        Rule { lhs: (x, y), rhs }
    }

    /// `y·x -> c · x·y`.
    pub fn swap(y: Gen, x: Gen, c: Coeff) -> Self {
        Rule::new(y, x, vec![(c, vec![x, y])])
    }

    pub fn rhs_poly(&self) -> NCPoly {
        let mut p = NCPoly::zero();
        for (c, w) in &self.rhs {
            p.add_assign(&NCPoly::gens(w).scale(c));
        }
        p
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Presentation {
    pub name: String,
    /// PBW order, smallest first.
    pub generators: Vec<Gen>,
    pub rules: Vec<Rule>,
    /// `(x, y)` with `x·y = y·x = 1`.
    pub unit_pairs: Vec<(Gen, Gen)>,
    /// Star image of each generator. Scalars are conjugated by `q -> q^-1`.
    pub conj: Vec<(Gen, Gen)>,
}

impl Presentation {
    pub fn free(name: &str, generators: Vec<Gen>) -> Self {
        let conj = generators.iter().map(|g| (*g, *g)).collect();
        Presentation { name: name.to_string(), generators, rules: Vec::new(), unit_pairs: Vec::new(), conj }
    }

    pub fn position(&self, g: Gen) -> Option<usize> {
        self.generators.iter().position(|x| *x == g)
    }

    pub fn contains(&self, g: Gen) -> bool {
        self.position(g).is_some()
    }

    /// Degree-lexicographic comparison in this presentation's order.
    pub fn deglex_less(&self, a: &[Gen], b: &[Gen]) -> bool {
        if a.len() != b.len() {
            return a.len() < b.len();
        }
        let pa: Vec<Option<usize>> = a.iter().map(|g| self.position(*g)).collect();
        let pb: Vec<Option<usize>> = b.iter().map(|g| self.position(*g)).collect();
        pa < pb
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(QbaxError::InvalidPresentation(format!("{}: {m}", self.name)));
        for (i, g) in self.generators.iter().enumerate() {
            if self.generators[..i].contains(g) {
                return bad(format!("duplicate generator {}", g.ascii()));
            }
        }
        let mut seen = Vec::new();
        for r in &self.rules {
            let (x, y) = r.lhs;
            let (Some(px), Some(py)) = (self.position(x), self.position(y)) else {
                return bad(format!("rule {} {} uses a foreign generator", x.ascii(), y.ascii()));
            };
            if px <= py {
                return bad(format!("rule {} {} is not a descending pair", x.ascii(), y.ascii()));
            }
            if seen.contains(&r.lhs) {
                return bad(format!("duplicate rule for {} {}", x.ascii(), y.ascii()));
            }
            seen.push(r.lhs);
            for (_, w) in &r.rhs {
                if w.iter().any(|g| !self.contains(*g)) {
                    return bad(format!("rule {} {} has a foreign generator on the right", x.ascii(), y.ascii()));
                }
                if !self.deglex_less(w, &[x, y]) {
                    return bad(format!("rule {} {} does not decrease in deglex order", x.ascii(), y.ascii()));
                }
            }
        }
        for &(x, y) in &self.unit_pairs {
            if !self.contains(x) || !self.contains(y) {
                return bad(format!("unit pair {} {} uses a foreign generator", x.ascii(), y.ascii()));
            }
            if seen.contains(&(x, y)) || seen.contains(&(y, x)) {
                return bad(format!("unit pair {} {} collides with a rule", x.ascii(), y.ascii()));
            }
        }
        for g in &self.generators {
            match self.conj.iter().find(|(a, _)| a == g) {
                Some((_, img)) if self.contains(*img) => {}
                _ => return bad(format!("no star image for {}", g.ascii())),
            }
        }
        Ok(())
    }

    /// Defining relations as `(name, lhs - rhs)`, all of which vanish in the algebra.
    pub fn relations(&self) -> Vec<(String, NCPoly)> {
        let mut out = Vec::new();
        for r in &self.rules {
            let (x, y) = r.lhs;
            out.push((format!("{} {}", x.ascii(), y.ascii()), NCPoly::gens(&[x, y]).sub(&r.rhs_poly())));
        }
        for &(x, y) in &self.unit_pairs {
            out.push((format!("{} {}", x.ascii(), y.ascii()), NCPoly::gens(&[x, y]).sub(&NCPoly::one())));
            out.push((format!("{} {}", y.ascii(), x.ascii()), NCPoly::gens(&[y, x]).sub(&NCPoly::one())));
        }
        out
    }

    pub fn star_of(&self, g: Gen) -> Option<Gen> {
        self.conj.iter().find(|(a, _)| *a == g).map(|(_, b)| *b)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "algebra {}", self.name).unwrap();
        let gens: Vec<&str> = self.generators.iter().map(|g| g.ascii()).collect();
        writeln!(s, "generators {}", gens.join(" < ")).unwrap();
        for r in &self.rules {
            let rhs = r.rhs_poly();
            let rhs = rhs.to_ascii().replace("@1", "");
            writeln!(s, "rule {} {} -> {}", r.lhs.0.ascii(), r.lhs.1.ascii(), rhs).unwrap();
        }
        for (x, y) in &self.unit_pairs {
            writeln!(s, "unit {} {}", x.ascii(), y.ascii()).unwrap();
        }
        for (x, y) in &self.conj {
            writeln!(s, "star {} -> {}", x.ascii(), y.ascii()).unwrap();
        }
        s.push_str("end\n");
        s
    }

    pub fn from_text(src: &str) -> Result<Self> {
        let perr = |m: String| QbaxError::Parse(m);
        let gen = |t: &str| Gen::from_name(t).ok_or_else(|| perr(format!("unknown generator `{t}`")));
        let mut name = None;
        let mut generators = Vec::new();
        let mut rules = Vec::new();
        let mut unit_pairs = Vec::new();
        let mut conj = Vec::new();
        for raw in src.lines() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() || line == "end" {
                continue;
            }
            let (kw, rest) = line.split_once(' ').unwrap_or((line, ""));
            match kw {
                "algebra" => name = Some(rest.trim().to_string()),
                "generators" => {
                    for t in rest.split('<') {
                        generators.push(gen(t.trim())?);
                    }
                }
                "rule" => {
                    let (lhs, rhs) = rest.split_once("->").ok_or_else(|| perr(format!("rule without `->`: `{line}`")))?;
                    let l: Vec<&str> = lhs.split_whitespace().collect();
                    if l.len() != 2 {
                        return Err(perr(format!("rule left side must be two letters: `{line}`")));
                    }
                    let poly = NCPoly::parse(rhs)?;
                    let mut terms = Vec::new();
                    for (w, c) in poly.terms() {
                        if w.iter().any(|x| x.site != 1) {
                            return Err(perr(format!("rule right side must be single-site: `{line}`")));
                        }
                        terms.push((c.clone(), w.iter().map(|x| x.gen).collect()));
                    }
                    rules.push(Rule::new(gen(l[0])?, gen(l[1])?, terms));
                }
                "unit" => {
                    let l: Vec<&str> = rest.split_whitespace().collect();
                    if l.len() != 2 {
                        return Err(perr(format!("unit pair needs two generators: `{line}`")));
                    }
                    unit_pairs.push((gen(l[0])?, gen(l[1])?));
                }
                "star" => {
                    let (a, b) = rest.split_once("->").ok_or_else(|| perr(format!("star without `->`: `{line}`")))?;
                    conj.push((gen(a.trim())?, gen(b.trim())?));
                }
                _ => return Err(perr(format!("unknown directive `{kw}`"))),
            }
        }
        let p = Presentation {
            name: name.ok_or_else(|| perr("missing `algebra` line".into()))?,
            generators,
            rules,
            unit_pairs,
            conj,
        };
        p.validate()?;
        Ok(p)
    }
}
