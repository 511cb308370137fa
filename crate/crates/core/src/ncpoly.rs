//! Generators, site-labelled words and noncommutative polynomials over `Coeff`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coeff::{Coeff, Param};
use crate::error::{QbaxError, Result};

/// Every generator of every catalogued algebra. Declaration order is storage order only; each presentation fixes its own PBW order.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Gen {
    A,
    B,
    C,
    Theta,
    D,
    E,
    K,
    Kinv,
    F,
    U,
    Ut,
    V,
    Vinv,
}

pub const NGEN: usize = 13;

impl Gen {
    pub const ALL: [Gen; NGEN] = [
        Gen::A,
        Gen::B,
        Gen::C,
        Gen::Theta,
        Gen::D,
        Gen::E,
        Gen::K,
        Gen::Kinv,
        Gen::F,
        Gen::U,
        Gen::Ut,
        Gen::V,
        Gen::Vinv,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn ascii(self) -> &'static str {
        match self {
            Gen::A => "a",
            Gen::B => "b",
            Gen::C => "c",
            Gen::Theta => "th",
            Gen::D => "d",
            Gen::E => "e",
            Gen::K => "k",
            Gen::Kinv => "ki",
            Gen::F => "f",
            Gen::U => "u",
            Gen::Ut => "ut",
            Gen::V => "v",
            Gen::Vinv => "vi",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Gen::Theta => "θ",
            Gen::Kinv => "k⁻¹",
            Gen::Ut => "ũ",
            Gen::Vinv => "v⁻¹",
            g => g.ascii(),
        }
    }

    pub fn from_name(s: &str) -> Option<Gen> {
        Gen::ALL.iter().copied().find(|g| g.ascii() == s || g.symbol() == s)
    }
}

/// A generator placed in tensor factor `site` (1-based).
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub site: u8,
    pub gen: Gen,
}

impl Letter {
    pub fn new(site: u8, gen: Gen) -> Self {
        Letter { site, gen }
    }
}

pub type Word = Vec<Letter>;

/// Finite sum of coefficient-weighted words. No zero coefficients are stored; words are not normalized.
#[derive(Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct NCPoly {
    terms: BTreeMap<Word, Coeff>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::scalar(Coeff::one())
    }

    pub fn scalar(c: Coeff) -> Self {
        Self::term(c, Vec::new())
    }

    pub fn term(c: Coeff, w: Word) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        NCPoly { terms }
    }

    pub fn word(w: Word) -> Self {
        Self::term(Coeff::one(), w)
    }

    /// Generator at site 1.
    pub fn gen(g: Gen) -> Self {
        Self::letter(1, g)
    }

    pub fn letter(site: u8, g: Gen) -> Self {
        Self::word(vec![Letter::new(site, g)])
    }

    /// Product of generators at site 1.
    pub fn gens(gs: &[Gen]) -> Self {
        Self::word(gs.iter().map(|g| Letter::new(1, *g)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Coeff)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Word, Coeff> {
        self.terms
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Word, Coeff)>) -> Self {
        let mut p = Self::zero();
        for (w, c) in it {
            p.add_term(w, &c);
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(e) => {
                *e += c;
                if e.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn add(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &NCPoly) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c);
        }
    }

    pub fn sub(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), &-c);
        }
        out
    }

    pub fn neg(&self) -> NCPoly {
        self.scale(&Coeff::from_int(-1))
    }

    pub fn scale(&self, c: &Coeff) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, k) in &self.terms {
            out.add_term(w.clone(), &(k * c));
        }
        out
    }

    /// Concatenation product in the free algebra.
    pub fn mul_free(&self, other: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                out.add_term(w, &(ca * cb));
            }
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&Coeff) -> Coeff) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &f(c));
        }
        out
    }

    pub fn try_map_coeffs(&self, f: impl Fn(&Coeff) -> Result<Coeff>) -> Result<NCPoly> {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &f(c)?);
        }
        Ok(out)
    }

    /// Largest site index used, 0 for scalars.
    pub fn max_site(&self) -> u8 {
        self.terms.keys().flat_map(|w| w.iter().map(|l| l.site)).max().unwrap_or(0)
    }

    /// Relabels every site through `f`.
    pub fn map_sites(&self, f: impl Fn(u8) -> u8) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.iter().map(|l| Letter::new(f(l.site), l.gen)).collect(), c);
        }
        out
    }

    /// Moves a site-1 polynomial to `site`.
    pub fn at_site(&self, site: u8) -> NCPoly {
        self.map_sites(|s| s + site - 1)
    }

    /// `self ⊗ other` where `self` occupies sites `1..=width`.
    pub fn tensor(&self, other: &NCPoly, width: u8) -> NCPoly {
        self.mul_free(&other.map_sites(|s| s + width))
    }

    /// Laurent coefficients in `p`.
    pub fn split_by(&self, p: Param) -> BTreeMap<i32, NCPoly> {
        let mut out: BTreeMap<i32, NCPoly> = BTreeMap::new();
        for (w, c) in &self.terms {
            for (e, k) in c.split_by(p) {
                out.entry(e).or_default().add_term(w.clone(), &k);
            }
        }
        out
    }

    pub fn coeff_of(&self, p: Param, e: i32) -> NCPoly {
        self.split_by(p).remove(&e).unwrap_or_default()
    }

    /// Generators appearing anywhere in the polynomial.
    pub fn generators(&self) -> Vec<Gen> {
        let mut gs: Vec<Gen> = self.terms.keys().flat_map(|w| w.iter().map(|l| l.gen)).collect();
        gs.sort();
        gs.dedup();
        gs
    }

    /// Text form accepted by `parse`.
    pub fn to_ascii(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let word = if w.is_empty() {
                    "1".to_string()
                } else {
                    w.iter().map(|l| format!("{}@{}", l.gen.ascii(), l.site)).collect::<Vec<_>>().join(" ")
                };
                format!("({}) {}", c.to_ascii(), word)
            })
            .collect();
        parts.join(" + ")
    }

    /// Parses `(coeff) word + (coeff) word ...`; letters are `gen` or `gen@site`, `1` is the empty word.
    pub fn parse(src: &str) -> Result<NCPoly> {
        let s = src.trim();
        if s == "0" {
            return Ok(NCPoly::zero());
        }
        let mut out = NCPoly::zero();
        let bytes: Vec<char> = s.chars().collect();
        let mut i = 0;
        while i < bytes.len() {
            while i < bytes.len() && (bytes[i] == ' ' || bytes[i] == '+') {
                i += 1;
            }
            if i >= bytes.len() {
                break;
            }
            if bytes[i] != '(' {
                return Err(QbaxError::Parse(format!("expected `(` in polynomial `{src}`")));
            }
            let mut depth = 0;
            let st = i + 1;
            let mut en = None;
            for (j, &ch) in bytes.iter().enumerate().skip(i) {
                if ch == '(' {
                    depth += 1;
                } else if ch == ')' {
                    depth -= 1;
                    if depth == 0 {
                        en = Some(j);
                        break;
                    }
                }
            }
            let en = en.ok_or_else(|| QbaxError::Parse(format!("unbalanced parentheses in `{src}`")))?;
            let coeff = Coeff::parse(&bytes[st..en].iter().collect::<String>())?;
            i = en + 1;
            let wst = i;
            while i < bytes.len() && !(bytes[i] == '+' && (i + 1 >= bytes.len() || bytes[i + 1] == ' ')) {
                i += 1;
            }
            let wtext: String = bytes[wst..i].iter().collect();
            let mut word = Vec::new();
            for tok in wtext.split_whitespace() {
                if tok == "1" {
                    continue;
                }
                let (g, site) = match tok.split_once('@') {
                    Some((g, s)) => (g, s.parse::<u8>().map_err(|_| QbaxError::Parse(format!("bad site in `{tok}`")))?),
                    None => (tok, 1),
                };
                let gen = Gen::from_name(g).ok_or_else(|| QbaxError::Parse(format!("unknown generator `{g}`")))?;
                word.push(Letter::new(site, gen));
            }
            out.add_term(word, &coeff);
        }
        Ok(out)
    }
}

fn render_word(w: &Word, sites: u8) -> String {
    if sites <= 1 {
        if w.is_empty() {
            return "1".to_string();
        }
        return w.iter().map(|l| l.gen.symbol()).collect::<Vec<_>>().join("·");
    }
    let mut parts = Vec::new();
    for s in 1..=sites {
        let f: Vec<&str> = w.iter().filter(|l| l.site == s).map(|l| l.gen.symbol()).collect();
        parts.push(if f.is_empty() { "1".to_string() } else { f.join("·") });
    }
    parts.join(" ⊗ ")
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let sites = self.max_site();
        let mut first = true;
        for (w, c) in &self.terms {
            let word = render_word(w, sites);
            let body = if c.is_one() {
                word
            } else if c.len() == 1 && w.is_empty() {
                c.to_string()
            } else if w.is_empty() {
                format!("({c})")
            } else if c.len() == 1 {
                format!("{c} {word}")
            } else {
                format!("({c}) {word}")
            };
            if !first {
                f.write_str(" + ")?;
            }
            f.write_str(&body)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCPoly[{}]", self.to_ascii())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        let p = NCPoly::parse("(q - q^-1) b@1 c@2 + (1) a d + (-2) 1").unwrap();
        assert_eq!(NCPoly::parse(&p.to_ascii()).unwrap(), p);
        assert_eq!(p.max_site(), 2);
    }

    #[test]
    fn tensor_shifts_sites() {
        let a = NCPoly::gen(Gen::A);
        let t = a.tensor(&NCPoly::gen(Gen::B), 1);
        assert_eq!(t, NCPoly::word(vec![Letter::new(1, Gen::A), Letter::new(2, Gen::B)]));
    }
}
