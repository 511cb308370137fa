//! Laurent polynomials with rational coefficients in the central parameters.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{QbaxError, Result};

/// Central parameters. Each one commutes with every generator.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Param {
    Q,
    Lambda,
    Mu,
    Z,
    C,
    Beta,
}

pub const NPARAM: usize = 6;

impl Param {
    pub const ALL: [Param; NPARAM] = [Param::Q, Param::Lambda, Param::Mu, Param::Z, Param::C, Param::Beta];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Identifier used by the text format.
    pub fn ascii(self) -> &'static str {
        match self {
            Param::Q => "q",
            Param::Lambda => "lam",
            Param::Mu => "mu",
            Param::Z => "z",
            Param::C => "c",
            Param::Beta => "beta",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Param::Q => "q",
            Param::Lambda => "λ",
            Param::Mu => "μ",
            Param::Z => "z",
            Param::C => "c",
            Param::Beta => "β",
        }
    }

    pub fn from_ascii(s: &str) -> Option<Param> {
        Param::ALL.iter().copied().find(|p| p.ascii() == s || p.symbol() == s)
    }
}

/// Exponent vector indexed by `Param::index`.
pub type Mono = [i32; NPARAM];

pub const MONO_ONE: Mono = [0; NPARAM];

pub fn mono_of(p: Param, e: i32) -> Mono {
    let mut m = MONO_ONE;
    m[p.index()] = e;
    m
}

fn mono_mul(a: &Mono, b: &Mono) -> Mono {
    let mut m = *a;
    for i in 0..NPARAM {
        m[i] += b[i];
    }
    m
}

/// Finite sum of rational multiples of parameter monomials. No zero terms are stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Coeff {
    terms: BTreeMap<Mono, Rational64>,
}

impl Coeff {
    pub fn zero() -> Self {
        Coeff { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(Rational64::from_integer(n))
    }

    pub fn from_rat(r: Rational64) -> Self {
        Self::term(r, MONO_ONE)
    }

    pub fn term(r: Rational64, m: Mono) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(m, r);
        }
        Coeff { terms }
    }

    /// `p^e`.
    pub fn param(p: Param, e: i32) -> Self {
        Self::term(Rational64::one(), mono_of(p, e))
    }

    pub fn q() -> Self {
        Self::param(Param::Q, 1)
    }

    pub fn qinv() -> Self {
        Self::param(Param::Q, -1)
    }

    pub fn q_pow(e: i32) -> Self {
        Self::param(Param::Q, e)
    }

    /// `q - q^-1`.
    pub fn qdiff() -> Self {
        Self::q() - Self::qinv()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&MONO_ONE).is_some_and(|r| r.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rational64)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Returns the scalar if the coefficient has no parameter dependence.
    pub fn as_rational(&self) -> Option<Rational64> {
        match self.terms.len() {
            0 => Some(Rational64::zero()),
            1 => self.terms.get(&MONO_ONE).copied(),
            _ => None,
        }
    }

    /// Returns `(r, m)` if the coefficient is a single term.
    pub fn as_monomial(&self) -> Option<(Rational64, Mono)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, r)| (*r, *m))
        } else {
            None
        }
    }

    fn add_term(&mut self, m: Mono, r: Rational64) {
        if r.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(Rational64::zero);
        *e += r;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn scale(&self, r: Rational64) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Coeff { terms: self.terms.iter().map(|(m, c)| (*m, *c * r)).collect() }
    }

    pub fn mul_mono(&self, m: &Mono) -> Self {
        Coeff { terms: self.terms.iter().map(|(k, c)| (mono_mul(k, m), *c)).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Inverse, defined only for single-term coefficients.
    pub fn inv(&self) -> Result<Self> {
        let (r, m) = self
            .as_monomial()
            .ok_or_else(|| QbaxError::NotInvertible(self.to_string()))?;
        let mut mi = m;
        for e in mi.iter_mut() {
            *e = -*e;
        }
        Ok(Self::term(r.recip(), mi))
    }

    /// Star conjugation on scalars: `q -> q^-1`, all other parameters real.
    pub fn conj(&self) -> Self {
        let mut out = Self::zero();
        for (m, r) in &self.terms {
            let mut mm = *m;
            mm[Param::Q.index()] = -mm[Param::Q.index()];
            out.add_term(mm, *r);
        }
        out
    }

    /// Substitutes `p -> image` where `image` is a single monomial.
    pub fn subst_mono(&self, p: Param, image: &Mono) -> Self {
        let mut out = Self::zero();
        for (m, r) in &self.terms {
            let e = m[p.index()];
            let mut mm = *m;
            mm[p.index()] = 0;
            for i in 0..NPARAM {
                mm[i] += e * image[i];
            }
            out.add_term(mm, *r);
        }
        out
    }

    /// Substitutes `p -> image` for an arbitrary coefficient; negative powers need a monomial image.
    pub fn subst(&self, p: Param, image: &Coeff) -> Result<Self> {
        if let Some((r, m)) = image.as_monomial() {
            if r.is_one() {
                return Ok(self.subst_mono(p, &m));
            }
        }
        let inv = if self.terms.keys().any(|m| m[p.index()] < 0) { Some(image.inv()?) } else { None };
        let mut out = Self::zero();
        for (m, r) in &self.terms {
            let e = m[p.index()];
            let mut mm = *m;
            mm[p.index()] = 0;
            let base = Self::term(*r, mm);
            let f = if e >= 0 { image.pow(e as u32) } else { inv.as_ref().unwrap().pow((-e) as u32) };
            out += &(&base * &f);
        }
        Ok(out)
    }

    /// Splits by the exponent of `p`; the returned coefficients are free of `p`.
    pub fn split_by(&self, p: Param) -> BTreeMap<i32, Coeff> {
        let mut out: BTreeMap<i32, Coeff> = BTreeMap::new();
        for (m, r) in &self.terms {
            let e = m[p.index()];
            let mut mm = *m;
            mm[p.index()] = 0;
            out.entry(e).or_default().add_term(mm, *r);
        }
        out
    }

    pub fn coeff_of(&self, p: Param, e: i32) -> Coeff {
        self.split_by(p).remove(&e).unwrap_or_default()
    }

    /// Exponent range of `p`, or `None` for zero.
    pub fn degree_range(&self, p: Param) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|m| m[p.index()]);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    /// Map `λ -> iλ` followed by division by `i`. Fails on even powers of `λ`, which would leave a factor of `i`.
    pub fn lambda_to_i_lambda_over_i(&self) -> Result<Self> {
        let mut out = Self::zero();
        for (m, r) in &self.terms {
            let k = m[Param::Lambda.index()];
            if k.rem_euclid(2) == 0 {
                return Err(QbaxError::ImaginaryCoefficient(self.to_string()));
            }
            let sign = if (k - 1).div_euclid(2).rem_euclid(2) == 0 { 1 } else { -1 };
            out.add_term(*m, *r * Rational64::from_integer(sign));
        }
        Ok(out)
    }

    pub fn eval(&self, vals: &[Complex64; NPARAM]) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, r) in &self.terms {
            let mut t = Complex64::new(r.numer().to_f64().unwrap() / r.denom().to_f64().unwrap(), 0.0);
            for i in 0..NPARAM {
                if m[i] != 0 {
                    t *= vals[i].powi(m[i]);
                }
            }
            acc += t;
        }
        acc
    }

    /// Text form accepted by `parse`.
    pub fn to_ascii(&self) -> String {
        self.render(true)
    }

    fn render(&self, ascii: bool) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        // Highest q-power first reads naturally.
        let mut items: Vec<_> = self.terms.iter().collect();
        items.sort_by(|a, b| b.0.cmp(a.0));
        for (i, (m, r)) in items.into_iter().enumerate() {
            let neg = r.is_negative();
            let a = r.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            for p in Param::ALL {
                let e = m[p.index()];
                if e == 0 {
                    continue;
                }
                let name = if ascii { p.ascii() } else { p.symbol() };
                if e == 1 {
                    factors.push(name.to_string());
                } else {
                    factors.push(format!("{name}^{e}"));
                }
            }
            if factors.is_empty() || !a.is_one() {
                factors.insert(0, a.to_string());
            }
            s.push_str(&factors.join("*"));
        }
        s
    }

    /// Parses the text form: a signed sum of products of rationals and `param^int` factors.
    pub fn parse(src: &str) -> Result<Self> {
        let mut p = CoeffParser { toks: tokenize(src)?, pos: 0 };
        let c = p.sum()?;
        if p.pos != p.toks.len() {
            return Err(QbaxError::Parse(format!("trailing input in coefficient `{src}`")));
        }
        Ok(c)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize(src: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let cs: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let ch = cs[i];
        match ch {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1
            }
            '*' => {
                out.push(Tok::Star);
                i += 1
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1
            }
            c if c.is_ascii_digit() => {
                let st = i;
                while i < cs.len() && cs[i].is_ascii_digit() {
                    i += 1;
                }
                let t: String = cs[st..i].iter().collect();
                out.push(Tok::Num(t.parse().map_err(|_| QbaxError::Parse(format!("bad number `{t}`")))?));
            }
            c if c.is_alphabetic() => {
                let st = i;
                while i < cs.len() && cs[i].is_alphanumeric() {
                    i += 1;
                }
                out.push(Tok::Ident(cs[st..i].iter().collect()));
            }
            _ => return Err(QbaxError::Parse(format!("unexpected `{ch}` in coefficient `{src}`"))),
        }
    }
    Ok(out)
}

struct CoeffParser {
    toks: Vec<Tok>,
    pos: usize,
}

impl CoeffParser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn sum(&mut self) -> Result<Coeff> {
        let mut acc = Coeff::zero();
        let mut first = true;
        loop {
            let neg = match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    false
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    true
                }
                None if !first => break,
                _ if first => false,
                _ => break,
            };
            let t = self.product()?;
            acc += &(if neg { -t } else { t });
            first = false;
            if self.peek().is_none() {
                break;
            }
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<Coeff> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn int(&mut self) -> Result<i64> {
        let neg = if let Some(Tok::Minus) = self.peek() {
            self.pos += 1;
            true
        } else {
            false
        };
        match self.toks.get(self.pos) {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(if neg { -*n } else { *n })
            }
            t => Err(QbaxError::Parse(format!("expected integer, found {t:?}"))),
        }
    }

    fn factor(&mut self) -> Result<Coeff> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                if let Some(Tok::Slash) = self.peek() {
                    self.pos += 1;
                    let d = self.int()?;
                    if d == 0 {
                        return Err(QbaxError::Parse("zero denominator".into()));
                    }
                    Ok(Coeff::from_rat(Rational64::new(n, d)))
                } else {
                    Ok(Coeff::from_int(n))
                }
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let p = Param::from_ascii(&name).ok_or_else(|| QbaxError::Parse(format!("unknown parameter `{name}`")))?;
                let mut e = 1;
                if let Some(Tok::Caret) = self.peek() {
                    self.pos += 1;
                    e = self.int()? as i32;
                }
                Ok(Coeff::param(p, e))
            }
            t => Err(QbaxError::Parse(format!("expected factor, found {t:?}"))),
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl fmt::Debug for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coeff({})", self.render(true))
    }
}

impl AddAssign<&Coeff> for Coeff {
    fn add_assign(&mut self, rhs: &Coeff) {
        for (m, r) in &rhs.terms {
            self.add_term(*m, *r);
        }
    }
}

impl Add<&Coeff> for &Coeff {
    type Output = Coeff;
    fn add(self, rhs: &Coeff) -> Coeff {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Coeff {
    type Output = Coeff;
    fn add(mut self, rhs: Coeff) -> Coeff {
        self += &rhs;
        self
    }
}

impl Sub<&Coeff> for &Coeff {
    type Output = Coeff;
    fn sub(self, rhs: &Coeff) -> Coeff {
        let mut out = self.clone();
        for (m, r) in &rhs.terms {
            out.add_term(*m, -*r);
        }
        out
    }
}

impl Sub for Coeff {
    type Output = Coeff;
    fn sub(self, rhs: Coeff) -> Coeff {
        &self - &rhs
    }
}

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        self.scale(-Rational64::one())
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        self.scale(-Rational64::one())
    }
}

impl Mul<&Coeff> for &Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &Coeff) -> Coeff {
        let mut out = Coeff::zero();
        for (ma, ra) in &self.terms {
            for (mb, rb) in &rhs.terms {
                out.add_term(mono_mul(ma, mb), *ra * *rb);
            }
        }
        out
    }
}

impl Mul for Coeff {
    type Output = Coeff;
    fn mul(self, rhs: Coeff) -> Coeff {
        &self * &rhs
    }
}

impl From<i64> for Coeff {
    fn from(n: i64) -> Self {
        Coeff::from_int(n)
    }
}

impl From<Rational64> for Coeff {
    fn from(r: Rational64) -> Self {
        Coeff::from_rat(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qdiff_squared() {
        let d = Coeff::qdiff();
        let sq = &d * &d;
        assert_eq!(sq, Coeff::q_pow(2) - Coeff::from_int(2) + Coeff::q_pow(-2));
    }

    #[test]
    fn conj_inverts_q_only() {
        let c = Coeff::q() * Coeff::param(Param::Lambda, 2);
        assert_eq!(c.conj(), Coeff::qinv() * Coeff::param(Param::Lambda, 2));
    }

    #[test]
    fn parse_round_trip() {
        let c = Coeff::parse("-3/2*q^-2*lam + q - 1 + beta^-1").unwrap();
        assert_eq!(Coeff::parse(&c.to_ascii()).unwrap(), c);
        assert_eq!(c.coeff_of(Param::Beta, -1), Coeff::one());
    }

    #[test]
    fn subst_lambda_mu() {
        let c = Coeff::param(Param::Lambda, -1) + Coeff::param(Param::Lambda, 2);
        let img = mono_mul(&mono_of(Param::Lambda, 1), &mono_of(Param::Mu, 1));
        let s = c.subst_mono(Param::Lambda, &img);
        let expect = Coeff::param(Param::Lambda, -1) * Coeff::param(Param::Mu, -1)
            + Coeff::param(Param::Lambda, 2) * Coeff::param(Param::Mu, 2);
        assert_eq!(s, expect);
    }

    #[test]
    fn i_lambda_map_signs() {
        let c = Coeff::param(Param::Lambda, 1) + Coeff::param(Param::Lambda, -1) + Coeff::param(Param::Lambda, 3);
        let m = c.lambda_to_i_lambda_over_i().unwrap();
        let expect = Coeff::param(Param::Lambda, 1) - Coeff::param(Param::Lambda, -1) - Coeff::param(Param::Lambda, 3);
        assert_eq!(m, expect);
        assert!(Coeff::one().lambda_to_i_lambda_over_i().is_err());
    }
}
