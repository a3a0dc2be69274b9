//! Exact multivariate polynomials over the rationals with a fixed local
//! monomial order: negative total degree first, then lexicographic with
//! `x0 > x1 > ... > xn`. Under this order `1` is the largest monomial, which
//! is the convention required by tangent-cone standard-basis computations.

use crate::{Error, Rat, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector of a monomial `x^a = x0^{a0} ... xn^{an}`.
///
/// The `Ord` implementation is the local order described in the module docs,
/// so `BTreeMap<Monomial, _>` keeps terms sorted with the leading monomial
/// (smallest total degree, largest in the order) last.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, when divisible.
    pub fn quotient_into(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect()))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Exponent vector shifted by `e = (1,...,1)`.
    pub fn shifted(&self) -> Vec<u32> {
        self.0.iter().map(|&a| a + 1).collect()
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            if e == 1 {
                parts.push(names[i].clone());
            } else if e > 1 {
                parts.push(format!("{}^{}", names[i], e));
            }
        }
        parts.join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.0.len(), other.0.len());
        // Smaller total degree is larger in the local order; within a degree,
        // plain lexicographic comparison with earlier variables dominant.
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Default printable variable names: `x, y, z` for up to three variables,
/// `x0..xn` beyond that.
pub fn default_names(nvars: usize) -> Vec<String> {
    if nvars <= 3 {
        ["x", "y", "z"][..nvars].iter().map(|s| s.to_string()).collect()
    } else {
        (0..nvars).map(|i| format!("x{i}")).collect()
    }
}

/// Exact multivariate polynomial; terms keyed by monomial in the local order.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Polynomial::zero(nvars);
        p.insert_add(Monomial::one(nvars), c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut p = Polynomial::zero(nvars);
        p.insert_add(Monomial::var(nvars, i), Rat::one());
        p
    }

    pub fn monomial_term(m: Monomial, c: Rat) -> Self {
        let mut p = Polynomial::zero(m.nvars());
        p.insert_add(m, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing local order (highest degree first, `1` last).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    /// Terms in decreasing local order (leading term first).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter().rev()
    }

    pub fn support(&self) -> Vec<&Monomial> {
        self.terms.keys().collect()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&Rat> {
        self.terms.get(m)
    }

    /// Leading term: the largest monomial in the local order.
    pub fn lead(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.last_key_value()
    }

    /// Maximum total degree over the support.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// Total degree of the leading monomial (the order of the power series).
    pub fn lead_degree(&self) -> u32 {
        self.lead().map(|(m, _)| m.degree()).unwrap_or(0)
    }

    /// Ecart: spread between the maximal degree and the leading degree.
    pub fn ecart(&self) -> u32 {
        self.degree() - self.lead_degree()
    }

    /// True when the constant term vanishes (f lies in the maximal ideal).
    pub fn in_maximal_ideal(&self) -> bool {
        !self.terms.contains_key(&Monomial::one(self.nvars))
    }

    /// Drops every term of total degree `bound` or more: the image modulo
    /// `m^bound`.
    pub fn truncated(&self, bound: u32) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() < bound)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Polynomial { nvars: self.nvars, terms }
    }

    pub fn insert_add(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.nvars(), self.nvars);
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.insert_add(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.insert_add(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    /// `self * c * x^m`.
    pub fn mul_term(&self, m: &Monomial, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        let mut out = Polynomial::zero(self.nvars);
        for (mm, cc) in self.terms() {
            out.terms.insert(mm.mul(m), cc * c);
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in other.terms() {
            for (mm, cc) in self.terms() {
                out.insert_add(mm.mul(m), cc * c);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::constant(self.nvars, Rat::one());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> Result<Polynomial> {
        if i >= self.nvars {
            return Err(Error::invalid(format!(
                "variable index {i} out of range for {} variables",
                self.nvars
            )));
        }
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in self.terms() {
            let e = m.exps()[i];
            if e > 0 {
                let mut exps = m.exps().to_vec();
                exps[i] = e - 1;
                out.insert_add(Monomial::new(exps), c * Rat::from_integer(BigInt::from(e)));
            }
        }
        Ok(out)
    }

    /// Rescales by the content so that all coefficients are coprime integers
    /// and the leading coefficient is positive. Leaves zero untouched.
    pub fn content_normalized(mut self) -> Polynomial {
        if self.is_zero() {
            return self;
        }
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            let scaled = c.numer() * &den_lcm / c.denom();
            num_gcd = num_gcd.gcd(&scaled);
        }
        let mut factor = Rat::new(den_lcm, num_gcd);
        if (self.lead().unwrap().1 * &factor).is_negative() {
            factor = -factor;
        }
        for c in self.terms.values_mut() {
            *c *= &factor;
        }
        self
    }

    /// Printable form using the given variable names.
    pub fn to_string_in(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms_desc().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let coeff_is_one = abs.is_one();
            if m.is_one() {
                out.push_str(&format_rat(&abs));
            } else if coeff_is_one {
                out.push_str(&m.fmt_with(names));
            } else {
                out.push_str(&format_rat(&abs));
                out.push('*');
                out.push_str(&m.fmt_with(names));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_in(&default_names(self.nvars)))
    }
}

/// Exact rational rendered as `p` or `p/q`.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// The list of partial derivatives, in variable order.
pub fn jacobian_generators(f: &Polynomial) -> Vec<Polynomial> {
    (0..f.nvars()).map(|i| f.partial(i).expect("index in range")).collect()
}

/// Minimum weighted degree over the support together with the principal part
/// (the terms attaining the minimum).
pub fn weighted_order(f: &Polynomial, w: &[Rat]) -> Result<(Rat, Polynomial)> {
    if f.is_zero() {
        return Err(Error::invalid("weighted order of the zero polynomial"));
    }
    if w.len() != f.nvars() {
        return Err(Error::invalid(format!(
            "weight vector has length {}, expected {}",
            w.len(),
            f.nvars()
        )));
    }
    let wdeg = |m: &Monomial| -> Rat {
        m.exps()
            .iter()
            .zip(w)
            .map(|(&e, wi)| wi * Rat::from_integer(BigInt::from(e)))
            .sum()
    };
    let mut min: Option<Rat> = None;
    for (m, _) in f.terms() {
        let d = wdeg(m);
        if min.as_ref().map(|x| &d < x).unwrap_or(true) {
            min = Some(d);
        }
    }
    let d = min.expect("nonzero polynomial");
    let mut principal = Polynomial::zero(f.nvars());
    for (m, c) in f.terms() {
        if wdeg(m) == d {
            principal.insert_add(m.clone(), c.clone());
        }
    }
    Ok((d, principal))
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'+' => {
                toks.push((Tok::Plus, i));
                i += 1;
            }
            b'-' => {
                toks.push((Tok::Minus, i));
                i += 1;
            }
            b'*' => {
                toks.push((Tok::Star, i));
                i += 1;
            }
            b'/' => {
                toks.push((Tok::Slash, i));
                i += 1;
            }
            b'^' => {
                toks.push((Tok::Caret, i));
                i += 1;
            }
            b'(' => {
                toks.push((Tok::LParen, i));
                i += 1;
            }
            b')' => {
                toks.push((Tok::RParen, i));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && bytes[i] == b'.' {
                    return Err(Error::Parse {
                        pos: i,
                        msg: "decimal literals are not supported; use exact rationals like 1/2"
                            .to_string(),
                    });
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                toks.push((Tok::Num(n), start));
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((Tok::Ident(text[start..i].to_string()), start));
            }
            _ => {
                return Err(Error::Parse {
                    pos: i,
                    msg: format!("unexpected character `{}`", text[i..].chars().next().unwrap()),
                });
            }
        }
    }
    Ok(toks)
}

struct PolyParser<'a> {
    toks: &'a [(Tok, usize)],
    pos: usize,
    nvars: usize,
    var_map: BTreeMap<String, usize>,
    end: usize,
}

impl<'a> PolyParser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<&Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t);
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.bump();
            negate = true;
        } else if matches!(self.peek(), Some(Tok::Plus)) {
            self.bump();
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                Some(Tok::Slash) => {
                    let at = self.here();
                    self.bump();
                    let f = self.factor()?;
                    let c = constant_of(&f).ok_or(Error::Parse {
                        pos: at,
                        msg: "division is only allowed by a nonzero constant".to_string(),
                    })?;
                    if c.is_zero() {
                        return Err(Error::Parse { pos: at, msg: "division by zero".to_string() });
                    }
                    acc = acc.scale(&(Rat::one() / c));
                }
                // Implicit multiplication: `3x`, `x y`, `2(x+y)`.
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.bump();
            let at = self.here();
            match self.bump() {
                Some(Tok::Num(n)) => {
                    if n.is_negative() {
                        return Err(Error::Parse {
                            pos: at,
                            msg: "negative exponent".to_string(),
                        });
                    }
                    let e: u32 = n.to_string().parse().map_err(|_| Error::Parse {
                        pos: at,
                        msg: "exponent too large".to_string(),
                    })?;
                    if e > 1_000_000 {
                        return Err(Error::Parse { pos: at, msg: "exponent too large".to_string() });
                    }
                    Ok(base.pow(e))
                }
                _ => Err(Error::Parse {
                    pos: at,
                    msg: "expected a non-negative integer exponent after ^".to_string(),
                }),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let at = self.here();
        match self.bump().cloned() {
            Some(Tok::Num(n)) => Ok(Polynomial::constant(self.nvars, Rat::from_integer(n))),
            Some(Tok::Ident(name)) => match self.var_map.get(&name) {
                Some(&i) => Ok(Polynomial::var(self.nvars, i)),
                None => {
                    let accepted: Vec<&str> =
                        self.var_map.keys().map(|s| s.as_str()).collect();
                    Err(Error::Parse {
                        pos: at,
                        msg: format!(
                            "unknown variable `{name}`; accepted: {}",
                            accepted.join(", ")
                        ),
                    })
                }
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(Error::Parse { pos: at, msg: "unclosed parenthesis".to_string() }),
                }
            }
            Some(_) => Err(Error::Parse { pos: at, msg: "expected a term".to_string() }),
            None => Err(Error::Parse { pos: at, msg: "unexpected end of input".to_string() }),
        }
    }
}

fn constant_of(p: &Polynomial) -> Option<Rat> {
    if p.is_zero() {
        return Some(Rat::zero());
    }
    if p.num_terms() == 1 {
        if let Some((m, c)) = p.lead() {
            if m.is_one() {
                return Some(c.clone());
            }
        }
    }
    None
}

fn var_map_for(nvars: usize) -> BTreeMap<String, usize> {
    let mut map = BTreeMap::new();
    for i in 0..nvars {
        map.insert(format!("x{i}"), i);
    }
    if nvars <= 3 {
        for (i, name) in ["x", "y", "z"].iter().enumerate().take(nvars) {
            map.insert(name.to_string(), i);
        }
    }
    map
}

impl Polynomial {
    /// Parses a signed sum of rational-coefficient monomials. For up to three
    /// variables the names `x, y, z` are accepted; `x0..xn` always work.
    /// `*` is optional; `^` denotes powers; parentheses are allowed.
    pub fn parse(text: &str, nvars: usize) -> Result<Polynomial> {
        let toks = tokenize(text)?;
        if toks.is_empty() {
            return Err(Error::Parse { pos: 0, msg: "empty input".to_string() });
        }
        let mut parser = PolyParser {
            toks: &toks,
            pos: 0,
            nvars,
            var_map: var_map_for(nvars),
            end: text.len(),
        };
        let p = parser.expr()?;
        if parser.pos < toks.len() {
            return Err(Error::Parse {
                pos: parser.here(),
                msg: "trailing input after polynomial".to_string(),
            });
        }
        Ok(p)
    }

    /// Parses with the variable count inferred from the identifiers used:
    /// `x, y, z` give up to three variables (the furthest name present
    /// decides), `x0..xn` give `n+1`.
    pub fn parse_infer(text: &str) -> Result<Polynomial> {
        let toks = tokenize(text)?;
        let mut max_xyz: Option<usize> = None;
        let mut max_idx: Option<usize> = None;
        for (t, pos) in &toks {
            if let Tok::Ident(name) = t {
                match name.as_str() {
                    "x" => max_xyz = Some(max_xyz.unwrap_or(0).max(0)),
                    "y" => max_xyz = Some(max_xyz.unwrap_or(0).max(1)),
                    "z" => max_xyz = Some(max_xyz.unwrap_or(0).max(2)),
                    _ => {
                        let idx = name
                            .strip_prefix('x')
                            .and_then(|s| s.parse::<usize>().ok())
                            .ok_or(Error::Parse {
                                pos: *pos,
                                msg: format!("unknown variable `{name}`"),
                            })?;
                        max_idx = Some(max_idx.unwrap_or(0).max(idx));
                    }
                }
            }
        }
        let nvars = match (max_xyz, max_idx) {
            (Some(a), Some(b)) => (a + 1).max(b + 1),
            (Some(a), None) => a + 1,
            (None, Some(b)) => b + 1,
            (None, None) => 1,
        };
        Polynomial::parse(text, nvars)
    }
}
