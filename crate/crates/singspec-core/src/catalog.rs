//! Parametric catalog of classified germ families with exact expected data.
//!
//! Each family records a polynomial template over integer parameters and
//! scalar moduli, a closed-form Milnor and Tjurina number, the expected
//! spectrum (fixed entries plus indexed tails), the expected excluded
//! exponents, and which reduced variance check applies. Catalogs load from a
//! small structured text format so users can add further families; the
//! modality-3 normal forms ship built in.

use crate::hertling::{hertling_check, reduced_variance_check};
use crate::localstd::{milnor_number, StdOptions};
use crate::poly::{Monomial, Polynomial};
use crate::spectrum::{Spectrum, SpectrumOptions};
use crate::tjurina::exclusion_report;
use crate::{Error, Rat, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

/// Integer parameter assignment for a family, e.g. `r = 2, s = 1`.
pub type ParamMap = BTreeMap<String, i64>;
/// Scalar (modulus) assignment, e.g. `a = 1, d = 0`.
pub type ModuliMap = BTreeMap<String, Rat>;

// ---------------------------------------------------------------------------
// Closed-form expressions over the parameters.

#[derive(Debug, Clone, PartialEq, Eq)]
enum Expr {
    Int(BigInt),
    Sym(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Max(Box<Expr>, Box<Expr>),
    Min(Box<Expr>, Box<Expr>),
}

impl Expr {
    fn eval(&self, env: &BTreeMap<String, Rat>) -> Result<Rat> {
        match self {
            Expr::Int(n) => Ok(Rat::from_integer(n.clone())),
            Expr::Sym(s) => env
                .get(s)
                .cloned()
                .ok_or_else(|| Error::invalid(format!("unbound symbol `{s}` in expression"))),
            Expr::Neg(e) => Ok(-e.eval(env)?),
            Expr::Add(a, b) => Ok(a.eval(env)? + b.eval(env)?),
            Expr::Sub(a, b) => Ok(a.eval(env)? - b.eval(env)?),
            Expr::Mul(a, b) => Ok(a.eval(env)? * b.eval(env)?),
            Expr::Div(a, b) => {
                let d = b.eval(env)?;
                if d.is_zero() {
                    return Err(Error::invalid("division by zero in expression"));
                }
                Ok(a.eval(env)? / d)
            }
            Expr::Max(a, b) => Ok(a.eval(env)?.max(b.eval(env)?)),
            Expr::Min(a, b) => Ok(a.eval(env)?.min(b.eval(env)?)),
        }
    }

    fn eval_integer(&self, env: &BTreeMap<String, Rat>) -> Result<BigInt> {
        let v = self.eval(env)?;
        if !v.is_integer() {
            return Err(Error::invalid(format!(
                "expression value {v} where an integer is required"
            )));
        }
        Ok(v.to_integer())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Sym(s) => write!(f, "{s}"),
            Expr::Neg(e) => write!(f, "(-{e})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
            Expr::Div(a, b) => write!(f, "({a} / {b})"),
            Expr::Max(a, b) => write!(f, "max({a}, {b})"),
            Expr::Min(a, b) => write!(f, "min({a}, {b})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum ETok {
    Int(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
}

fn tokenize_expr(text: &str) -> Result<Vec<ETok>> {
    let mut toks = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                toks.push(ETok::Plus);
                i += 1;
            }
            '-' => {
                toks.push(ETok::Minus);
                i += 1;
            }
            '*' => {
                toks.push(ETok::Star);
                i += 1;
            }
            '/' => {
                toks.push(ETok::Slash);
                i += 1;
            }
            '^' => {
                toks.push(ETok::Caret);
                i += 1;
            }
            '(' => {
                toks.push(ETok::LParen);
                i += 1;
            }
            ')' => {
                toks.push(ETok::RParen);
                i += 1;
            }
            ',' => {
                toks.push(ETok::Comma);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i]
                    .parse()
                    .map_err(|_| Error::invalid("malformed integer literal"))?;
                toks.push(ETok::Int(n));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push(ETok::Name(text[start..i].to_string()));
            }
            other => {
                return Err(Error::invalid(format!(
                    "unexpected character `{other}` in expression"
                )))
            }
        }
    }
    Ok(toks)
}

struct ExprParser<'a> {
    toks: &'a [ETok],
    pos: usize,
}

impl<'a> ExprParser<'a> {
    fn peek(&self) -> Option<&ETok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<&ETok> {
        let t = self.toks.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: &ETok, what: &str) -> Result<()> {
        match self.bump() {
            Some(t) if t == want => Ok(()),
            _ => Err(Error::invalid(format!("expected {what}"))),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut e = self.term()?;
        loop {
            match self.peek() {
                Some(ETok::Plus) => {
                    self.pos += 1;
                    e = Expr::Add(Box::new(e), Box::new(self.term()?));
                }
                Some(ETok::Minus) => {
                    self.pos += 1;
                    e = Expr::Sub(Box::new(e), Box::new(self.term()?));
                }
                _ => return Ok(e),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut e = self.factor()?;
        loop {
            match self.peek() {
                Some(ETok::Star) => {
                    self.pos += 1;
                    e = Expr::Mul(Box::new(e), Box::new(self.factor()?));
                }
                Some(ETok::Slash) => {
                    self.pos += 1;
                    e = Expr::Div(Box::new(e), Box::new(self.factor()?));
                }
                _ => return Ok(e),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        match self.bump().cloned() {
            Some(ETok::Minus) => Ok(Expr::Neg(Box::new(self.factor()?))),
            Some(ETok::Int(n)) => Ok(Expr::Int(n)),
            Some(ETok::Name(name)) if name == "max" || name == "min" => {
                self.expect(&ETok::LParen, "`(` after max/min")?;
                let a = self.expr()?;
                self.expect(&ETok::Comma, "`,` between max/min arguments")?;
                let b = self.expr()?;
                self.expect(&ETok::RParen, "`)` closing max/min")?;
                Ok(if name == "max" {
                    Expr::Max(Box::new(a), Box::new(b))
                } else {
                    Expr::Min(Box::new(a), Box::new(b))
                })
            }
            Some(ETok::Name(name)) => Ok(Expr::Sym(name)),
            Some(ETok::LParen) => {
                let e = self.expr()?;
                self.expect(&ETok::RParen, "closing `)`")?;
                Ok(e)
            }
            _ => Err(Error::invalid("expected an expression atom")),
        }
    }

    fn done(&self) -> bool {
        self.pos == self.toks.len()
    }
}

fn parse_expr(text: &str) -> Result<Expr> {
    let toks = tokenize_expr(text)?;
    let mut p = ExprParser { toks: &toks, pos: 0 };
    let e = p.expr()?;
    if !p.done() {
        return Err(Error::invalid(format!(
            "trailing tokens after expression in `{text}`"
        )));
    }
    Ok(e)
}

/// Splits `text` into comma-separated expressions, respecting parentheses.
fn parse_expr_list(text: &str) -> Result<Vec<Expr>> {
    let toks = tokenize_expr(text)?;
    let mut p = ExprParser { toks: &toks, pos: 0 };
    let mut out = Vec::new();
    loop {
        out.push(p.expr()?);
        match p.bump() {
            None => return Ok(out),
            Some(ETok::Comma) => continue,
            Some(_) => return Err(Error::invalid("expected `,` between expressions")),
        }
    }
}

// ---------------------------------------------------------------------------
// Polynomial templates.

#[derive(Debug, Clone, PartialEq, Eq)]
enum Factor {
    /// A variable raised to a parameter-dependent exponent.
    Var { index: usize, exp: Expr },
    /// A scalar factor (integer, modulus symbol, or parenthesized expression).
    Coef(Expr),
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct TemplateTerm {
    negated: bool,
    factors: Vec<Factor>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Template {
    terms: Vec<TemplateTerm>,
}

impl Template {
    fn parse(text: &str, var_names: &[String]) -> Result<Template> {
        let toks = tokenize_expr(text)?;
        let mut p = ExprParser { toks: &toks, pos: 0 };
        let mut terms = Vec::new();
        let mut negated = matches!(p.peek(), Some(ETok::Minus));
        if negated || matches!(p.peek(), Some(ETok::Plus)) {
            p.pos += 1;
        }
        loop {
            terms.push(Self::parse_term(&mut p, var_names, negated)?);
            match p.bump() {
                None => return Ok(Template { terms }),
                Some(ETok::Plus) => negated = false,
                Some(ETok::Minus) => negated = true,
                Some(_) => return Err(Error::invalid("expected `+` or `-` between terms")),
            }
        }
    }

    fn parse_term(
        p: &mut ExprParser<'_>,
        var_names: &[String],
        negated: bool,
    ) -> Result<TemplateTerm> {
        let mut factors = Vec::new();
        loop {
            let factor = match p.bump().cloned() {
                Some(ETok::Int(n)) => Factor::Coef(Expr::Int(n)),
                Some(ETok::LParen) => {
                    let e = p.expr()?;
                    p.expect(&ETok::RParen, "closing `)`")?;
                    Factor::Coef(e)
                }
                Some(ETok::Name(name)) => {
                    let exp = if matches!(p.peek(), Some(ETok::Caret)) {
                        p.pos += 1;
                        match p.bump().cloned() {
                            Some(ETok::Int(n)) => Expr::Int(n),
                            Some(ETok::LParen) => {
                                let e = p.expr()?;
                                p.expect(&ETok::RParen, "closing `)` after exponent")?;
                                e
                            }
                            _ => {
                                return Err(Error::invalid(
                                    "expected an integer or `(expr)` after `^`",
                                ))
                            }
                        }
                    } else {
                        Expr::Int(BigInt::one())
                    };
                    match var_names.iter().position(|v| *v == name) {
                        Some(index) => Factor::Var { index, exp },
                        None => {
                            if exp != Expr::Int(BigInt::one()) {
                                return Err(Error::invalid(format!(
                                    "exponent on `{name}`, which is not a declared variable"
                                )));
                            }
                            Factor::Coef(Expr::Sym(name))
                        }
                    }
                }
                _ => return Err(Error::invalid("expected a template factor")),
            };
            factors.push(factor);
            if matches!(p.peek(), Some(ETok::Star)) {
                p.pos += 1;
                continue;
            }
            return Ok(TemplateTerm { negated, factors });
        }
    }

    fn instantiate(
        &self,
        nvars: usize,
        env: &BTreeMap<String, Rat>,
        var_names: &[String],
    ) -> Result<Polynomial> {
        let mut poly = Polynomial::zero(nvars);
        for term in &self.terms {
            let mut coeff = if term.negated { -Rat::one() } else { Rat::one() };
            let mut exps = vec![0u32; nvars];
            for factor in &term.factors {
                match factor {
                    Factor::Coef(e) => coeff *= e.eval(env)?,
                    Factor::Var { index, exp } => {
                        let v = exp.eval_integer(env)?;
                        if v.is_negative() {
                            return Err(Error::invalid(format!(
                                "negative exponent on `{}`",
                                var_names[*index]
                            )));
                        }
                        let v = v
                            .to_u32()
                            .ok_or_else(|| Error::invalid("exponent too large"))?;
                        exps[*index] += v;
                    }
                }
            }
            poly.insert_add(Monomial::new(exps), coeff);
        }
        Ok(poly)
    }

    fn render(&self, var_names: &[String]) -> String {
        let mut out = String::new();
        for (i, term) in self.terms.iter().enumerate() {
            if i == 0 {
                if term.negated {
                    out.push_str("- ");
                }
            } else {
                out.push_str(if term.negated { " - " } else { " + " });
            }
            for (j, factor) in term.factors.iter().enumerate() {
                if j > 0 {
                    out.push('*');
                }
                match factor {
                    Factor::Coef(Expr::Int(n)) => out.push_str(&n.to_string()),
                    Factor::Coef(Expr::Sym(s)) => out.push_str(s),
                    Factor::Coef(e) => out.push_str(&format!("({e})")),
                    Factor::Var { index, exp } => {
                        out.push_str(&var_names[*index]);
                        match exp {
                            Expr::Int(n) if *n == BigInt::one() => {}
                            Expr::Int(n) => out.push_str(&format!("^{n}")),
                            e => out.push_str(&format!("^{e}")),
                        }
                    }
                }
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Family specifications.

/// Which reduced variance check the family's Tjurina data supports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TauMax {
    Mu,
    MuMinusOne,
    MuMinusTwo,
}

impl TauMax {
    pub fn offset(self) -> usize {
        match self {
            TauMax::Mu => 0,
            TauMax::MuMinusOne => 1,
            TauMax::MuMinusTwo => 2,
        }
    }

    fn keyword(self) -> &'static str {
        match self {
            TauMax::Mu => "mu",
            TauMax::MuMinusOne => "mu-1",
            TauMax::MuMinusTwo => "mu-2",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum SpectrumPart {
    List(Vec<Expr>),
    Sum {
        var: String,
        lo: Expr,
        hi: Expr,
        body: Expr,
    },
}

/// One parametric family: template, domain, moduli defaults, and closed-form
/// expected invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    name: String,
    display: String,
    var_names: Vec<String>,
    /// `(parameter name, smallest admissible value)`.
    params: Vec<(String, i64)>,
    /// `(modulus name, default value)`.
    moduli: Vec<(String, Rat)>,
    template: Template,
    mu_formula: Expr,
    tau_formula: Expr,
    tau_max: TauMax,
    spectrum_parts: Vec<SpectrumPart>,
    excluded: Vec<Expr>,
}

impl FamilySpec {
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Conventional label of the family, e.g. `NA_{r,0}`.
    pub fn display(&self) -> &str {
        &self.display
    }

    pub fn nvars(&self) -> usize {
        self.var_names.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    /// Parameter names with their smallest admissible values.
    pub fn params(&self) -> &[(String, i64)] {
        &self.params
    }

    /// Moduli names with their default values.
    pub fn moduli(&self) -> &[(String, Rat)] {
        &self.moduli
    }

    pub fn tau_max(&self) -> TauMax {
        self.tau_max
    }

    /// Checks that `params` assigns every declared parameter a value within
    /// the domain, and nothing else.
    pub fn check_params(&self, params: &ParamMap) -> Result<()> {
        for (name, min) in &self.params {
            match params.get(name) {
                None => {
                    return Err(Error::OutOfDomain {
                        msg: format!("family {} needs parameter `{name}`", self.name),
                    })
                }
                Some(v) if v < min => {
                    return Err(Error::OutOfDomain {
                        msg: format!(
                            "parameter `{name}` = {v} below the smallest admissible value {min}"
                        ),
                    })
                }
                Some(_) => {}
            }
        }
        for name in params.keys() {
            if !self.params.iter().any(|(p, _)| p == name) {
                return Err(Error::OutOfDomain {
                    msg: format!("family {} has no parameter `{name}`", self.name),
                });
            }
        }
        Ok(())
    }

    fn param_env(&self, params: &ParamMap) -> BTreeMap<String, Rat> {
        params
            .iter()
            .map(|(k, v)| (k.clone(), Rat::from_integer(BigInt::from(*v))))
            .collect()
    }

    fn eval_count(&self, expr: &Expr, env: &BTreeMap<String, Rat>, what: &str) -> Result<usize> {
        let v = expr.eval_integer(env)?;
        v.to_usize()
            .ok_or_else(|| Error::invalid(format!("{what} evaluates to a negative count")))
    }

    /// Closed-form Milnor number at `params`.
    pub fn mu_at(&self, params: &ParamMap) -> Result<usize> {
        self.check_params(params)?;
        let env = self.param_env(params);
        self.eval_count(&self.mu_formula, &env, "mu formula")
    }

    /// Closed-form Tjurina number at `params`.
    pub fn tau_at(&self, params: &ParamMap) -> Result<usize> {
        self.check_params(params)?;
        let env = self.param_env(params);
        self.eval_count(&self.tau_formula, &env, "tau formula")
    }

    /// The `tau_max` value the reduced check uses at `params`.
    pub fn tau_max_at(&self, params: &ParamMap) -> Result<usize> {
        Ok(self.mu_at(params)? - self.tau_max.offset())
    }

    /// The representative polynomial at `params`, with defaults for any
    /// modulus not overridden.
    pub fn polynomial_at(&self, params: &ParamMap, overrides: &ModuliMap) -> Result<Polynomial> {
        self.check_params(params)?;
        let mut env = self.param_env(params);
        for name in overrides.keys() {
            if !self.moduli.iter().any(|(m, _)| m == name) {
                return Err(Error::invalid(format!(
                    "family {} has no modulus `{name}`",
                    self.name
                )));
            }
        }
        for (name, default) in &self.moduli {
            let value = overrides.get(name).unwrap_or(default).clone();
            env.insert(name.clone(), value);
        }
        self.template
            .instantiate(self.nvars(), &env, &self.var_names)
    }

    /// Instantiates the family and verifies the engine's Milnor number
    /// against the closed form; fails on non-generic moduli.
    pub fn instantiate(&self, params: &ParamMap, overrides: Option<&ModuliMap>) -> Result<Instance> {
        let empty = ModuliMap::new();
        let overrides = overrides.unwrap_or(&empty);
        let polynomial = self.polynomial_at(params, overrides)?;
        let expected = self.mu_at(params)?;
        let got = milnor_number(&polynomial, &StdOptions::default())?;
        if got != expected {
            return Err(Error::MuMismatch { expected, got });
        }
        let mut moduli: ModuliMap = self.moduli.iter().cloned().collect();
        for (k, v) in overrides {
            moduli.insert(k.clone(), v.clone());
        }
        Ok(Instance {
            family: self.name.clone(),
            params: params.clone(),
            moduli,
            polynomial,
            mu: got,
        })
    }

    /// Evaluates the expected spectrum closed form at `params`.
    pub fn expected_spectrum(&self, params: &ParamMap) -> Result<Spectrum> {
        self.check_params(params)?;
        let env = self.param_env(params);
        let mut exps = Vec::new();
        for part in &self.spectrum_parts {
            match part {
                SpectrumPart::List(list) => {
                    for e in list {
                        exps.push(e.eval(&env)?);
                    }
                }
                SpectrumPart::Sum { var, lo, hi, body } => {
                    let lo = lo.eval_integer(&env)?;
                    let hi = hi.eval_integer(&env)?;
                    let mut env = env.clone();
                    let mut i = lo;
                    while i <= hi {
                        env.insert(var.clone(), Rat::from_integer(i.clone()));
                        exps.push(body.eval(&env)?);
                        i += BigInt::one();
                    }
                }
            }
        }
        Ok(Spectrum::new(exps, self.nvars()))
    }

    /// Evaluates the expected excluded exponents at `params`, sorted.
    pub fn expected_excluded(&self, params: &ParamMap) -> Result<Vec<Rat>> {
        self.check_params(params)?;
        let env = self.param_env(params);
        let mut out = Vec::new();
        for e in &self.excluded {
            out.push(e.eval(&env)?);
        }
        out.sort();
        Ok(out)
    }

    /// All in-domain parameter tuples with each parameter capped at `cap_rs`
    /// (parameters named `k`: capped at `cap_k`).
    pub fn parameter_grid(&self, cap_rs: i64, cap_k: i64) -> Vec<ParamMap> {
        let mut tuples = vec![ParamMap::new()];
        for (name, min) in &self.params {
            let cap = if name == "k" { cap_k } else { cap_rs };
            let mut next = Vec::new();
            for tuple in &tuples {
                for v in *min..=cap {
                    let mut t = tuple.clone();
                    t.insert(name.clone(), v);
                    next.push(t);
                }
            }
            tuples = next;
        }
        tuples
    }

    /// End-to-end check of the catalog data against the engine at `params`:
    /// Milnor number, spectrum, Tjurina number and excluded set, and both
    /// variance inequalities on the computed spectrum. Engine failures are
    /// recorded, not thrown; only out-of-domain parameters error.
    pub fn verify(&self, params: &ParamMap) -> Result<VerificationRecord> {
        self.check_params(params)?;
        let mut rec = VerificationRecord {
            family: self.name.clone(),
            params: params.clone(),
            mu_ok: false,
            spectrum_ok: false,
            rset_ok: false,
            hertling_ok: false,
            reduced_ok: false,
            mismatches: Vec::new(),
        };
        let expected_mu = self.mu_at(params)?;
        let expected_tau = self.tau_at(params)?;
        let expected_sp = self.expected_spectrum(params)?;
        let expected_rset = self.expected_excluded(params)?;

        let f = match self.polynomial_at(params, &ModuliMap::new()) {
            Ok(f) => f,
            Err(e) => {
                rec.mismatches.push(format!("instantiation failed: {e}"));
                return Ok(rec);
            }
        };
        let report = match exclusion_report(&f, &SpectrumOptions::default()) {
            Ok(r) => r,
            Err(e) => {
                rec.mismatches.push(format!("spectrum computation failed: {e}"));
                return Ok(rec);
            }
        };

        rec.mu_ok = report.mu == expected_mu;
        if !rec.mu_ok {
            rec.mismatches
                .push(format!("mu: expected {expected_mu}, engine {}", report.mu));
        }
        rec.spectrum_ok = report.sp == expected_sp;
        if !rec.spectrum_ok {
            rec.mismatches.push(format!(
                "spectrum: expected {:?}, engine {:?}",
                render_rats(expected_sp.exponents()),
                render_rats(report.sp.exponents())
            ));
        }
        let tau_ok = report.tau == expected_tau;
        if !tau_ok {
            rec.mismatches
                .push(format!("tau: expected {expected_tau}, engine {}", report.tau));
        }
        let rset_eq = report.rset == expected_rset;
        if !rset_eq {
            rec.mismatches.push(format!(
                "excluded: expected {:?}, engine {:?}",
                render_rats(&expected_rset),
                render_rats(&report.rset)
            ));
        }
        rec.rset_ok = tau_ok && rset_eq;

        match hertling_check(&report.sp) {
            Ok(v) => {
                rec.hertling_ok = v.holds;
                if !v.holds {
                    rec.mismatches
                        .push(format!("variance inequality fails with slack {}", v.slack));
                }
            }
            Err(e) => rec.mismatches.push(format!("variance check failed: {e}")),
        }
        let tau_max = expected_mu - self.tau_max.offset();
        match reduced_variance_check(&report.sp, tau_max) {
            Ok(v) => {
                rec.reduced_ok = v.holds;
                if !v.holds {
                    rec.mismatches.push(format!(
                        "reduced variance inequality fails with slack {}",
                        v.slack
                    ));
                }
            }
            Err(e) => rec
                .mismatches
                .push(format!("reduced variance check failed: {e}")),
        }
        Ok(rec)
    }
}

fn render_rats(rs: &[Rat]) -> Vec<String> {
    rs.iter().map(|r| r.to_string()).collect()
}

/// A validated concrete member of a family.
#[derive(Debug, Clone)]
pub struct Instance {
    pub family: String,
    pub params: ParamMap,
    pub moduli: ModuliMap,
    pub polynomial: Polynomial,
    pub mu: usize,
}

/// Outcome of `FamilySpec::verify`: exact comparisons of the engine output
/// against the catalog's closed forms.
#[derive(Debug, Clone)]
pub struct VerificationRecord {
    pub family: String,
    pub params: ParamMap,
    pub mu_ok: bool,
    pub spectrum_ok: bool,
    pub rset_ok: bool,
    pub hertling_ok: bool,
    pub reduced_ok: bool,
    pub mismatches: Vec<String>,
}

impl VerificationRecord {
    pub fn all_ok(&self) -> bool {
        self.mu_ok && self.spectrum_ok && self.rset_ok && self.hertling_ok && self.reduced_ok
    }
}

// ---------------------------------------------------------------------------
// The catalog container and its text format.

/// An ordered collection of family specifications.
#[derive(Debug, Clone, PartialEq)]
pub struct Catalog {
    families: Vec<FamilySpec>,
}

static BUILTIN: OnceLock<Catalog> = OnceLock::new();

impl Catalog {
    /// The built-in catalog of modality-3 plane curve and surface families.
    pub fn builtin() -> &'static Catalog {
        BUILTIN.get_or_init(|| {
            Catalog::parse(include_str!("builtin.cat")).expect("built-in catalog is well-formed")
        })
    }

    pub fn families(&self) -> &[FamilySpec] {
        &self.families
    }

    pub fn get(&self, name: &str) -> Result<&FamilySpec> {
        self.families
            .iter()
            .find(|f| f.name == name)
            .ok_or_else(|| Error::UnknownFamily { name: name.to_string() })
    }

    /// Parses the structured text format. Lines are `# comments`, a
    /// `catalog-version 1` header, and `family NAME ... end` blocks with
    /// `display`, `vars`, `param`, `modulus`, `template`, `mu`, `tau`,
    /// `taumax`, `spectrum`, and `excluded` fields.
    pub fn parse(text: &str) -> Result<Catalog> {
        let cerr =
            |line: usize, msg: String| Error::CatalogFormat { line, msg };
        let mut families: Vec<FamilySpec> = Vec::new();
        let mut header_seen = false;
        let mut block: Option<(usize, String, Vec<(usize, String)>)> = None;
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = match raw.find('#') {
                Some(p) => &raw[..p],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            if !header_seen {
                if line != "catalog-version 1" {
                    return Err(cerr(
                        lineno,
                        "expected header `catalog-version 1`".to_string(),
                    ));
                }
                header_seen = true;
                continue;
            }
            match &mut block {
                None => {
                    let Some(name) = line.strip_prefix("family ") else {
                        return Err(cerr(lineno, format!("expected `family NAME`, found `{line}`")));
                    };
                    let name = name.trim().to_string();
                    if name.is_empty() {
                        return Err(cerr(lineno, "empty family name".to_string()));
                    }
                    if families.iter().any(|f| f.name == name) {
                        return Err(cerr(lineno, format!("duplicate family `{name}`")));
                    }
                    block = Some((lineno, name, Vec::new()));
                }
                Some((start, name, fields)) => {
                    if line == "end" {
                        let fam = build_family(*start, name.clone(), fields)?;
                        families.push(fam);
                        block = None;
                    } else {
                        fields.push((lineno, line.to_string()));
                    }
                }
            }
        }
        if let Some((start, name, _)) = block {
            return Err(cerr(start, format!("family `{name}` has no `end`")));
        }
        if !header_seen {
            return Err(cerr(1, "missing `catalog-version 1` header".to_string()));
        }
        Ok(Catalog { families })
    }

    /// Renders the catalog back to its text format; `parse(save(c))`
    /// reproduces `c` exactly.
    pub fn save(&self) -> String {
        let mut out = String::from("catalog-version 1\n");
        for fam in &self.families {
            out.push('\n');
            out.push_str(&format!("family {}\n", fam.name));
            out.push_str(&format!("  display {}\n", fam.display));
            out.push_str(&format!("  vars {}\n", fam.var_names.join(" ")));
            for (p, min) in &fam.params {
                out.push_str(&format!("  param {p} >= {min}\n"));
            }
            for (m, v) in &fam.moduli {
                out.push_str(&format!("  modulus {m} = {v}\n"));
            }
            out.push_str(&format!(
                "  template {}\n",
                fam.template.render(&fam.var_names)
            ));
            out.push_str(&format!("  mu {}\n", fam.mu_formula));
            out.push_str(&format!("  tau {}\n", fam.tau_formula));
            out.push_str(&format!("  taumax {}\n", fam.tau_max.keyword()));
            for part in &fam.spectrum_parts {
                match part {
                    SpectrumPart::List(list) => {
                        let items: Vec<String> = list.iter().map(|e| e.to_string()).collect();
                        out.push_str(&format!("  spectrum {}\n", items.join(", ")));
                    }
                    SpectrumPart::Sum { var, lo, hi, body } => {
                        out.push_str(&format!("  spectrum for {var} = {lo}..{hi} : {body}\n"));
                    }
                }
            }
            if !fam.excluded.is_empty() {
                let items: Vec<String> = fam.excluded.iter().map(|e| e.to_string()).collect();
                out.push_str(&format!("  excluded {}\n", items.join(", ")));
            }
            out.push_str("end\n");
        }
        out
    }
}

fn build_family(
    start: usize,
    name: String,
    fields: &[(usize, String)],
) -> Result<FamilySpec> {
    let cerr = |line: usize, msg: String| Error::CatalogFormat { line, msg };
    let wrap = |line: usize| move |e: Error| Error::CatalogFormat { line, msg: e.to_string() };

    let mut display = None;
    let mut var_names: Option<Vec<String>> = None;
    let mut params: Vec<(String, i64)> = Vec::new();
    let mut moduli: Vec<(String, Rat)> = Vec::new();

    // Declarations first, so later fields can resolve names.
    for (lineno, line) in fields {
        let (key, rest) = split_field(line);
        match key {
            "display" => {
                if rest.is_empty() {
                    return Err(cerr(*lineno, "empty display name".to_string()));
                }
                display = Some(rest.to_string());
            }
            "vars" => {
                let names: Vec<String> = rest.split_whitespace().map(String::from).collect();
                if names.is_empty() {
                    return Err(cerr(*lineno, "`vars` needs at least one name".to_string()));
                }
                var_names = Some(names);
            }
            "param" => {
                let Some((p, min)) = rest.split_once(">=") else {
                    return Err(cerr(*lineno, "expected `param NAME >= INT`".to_string()));
                };
                let min: i64 = min
                    .trim()
                    .parse()
                    .map_err(|_| cerr(*lineno, "malformed parameter bound".to_string()))?;
                params.push((p.trim().to_string(), min));
            }
            "modulus" => {
                let Some((m, value)) = rest.split_once('=') else {
                    return Err(cerr(*lineno, "expected `modulus NAME = VALUE`".to_string()));
                };
                let value = parse_expr(value.trim())
                    .and_then(|e| e.eval(&BTreeMap::new()))
                    .map_err(wrap(*lineno))?;
                moduli.push((m.trim().to_string(), value));
            }
            _ => {}
        }
    }
    let display = display.unwrap_or_else(|| name.clone());
    let var_names =
        var_names.ok_or_else(|| cerr(start, format!("family `{name}` lacks a `vars` field")))?;

    let mut template = None;
    let mut mu_formula = None;
    let mut tau_formula = None;
    let mut tau_max = None;
    let mut spectrum_parts: Vec<SpectrumPart> = Vec::new();
    let mut excluded: Vec<Expr> = Vec::new();

    for (lineno, line) in fields {
        let (key, rest) = split_field(line);
        match key {
            "display" | "vars" | "param" | "modulus" => {}
            "template" => {
                template = Some(Template::parse(rest, &var_names).map_err(wrap(*lineno))?)
            }
            "mu" => mu_formula = Some(parse_expr(rest).map_err(wrap(*lineno))?),
            "tau" => tau_formula = Some(parse_expr(rest).map_err(wrap(*lineno))?),
            "taumax" => {
                tau_max = Some(match rest {
                    "mu" => TauMax::Mu,
                    "mu-1" => TauMax::MuMinusOne,
                    "mu-2" => TauMax::MuMinusTwo,
                    other => {
                        return Err(cerr(
                            *lineno,
                            format!("taumax must be mu, mu-1 or mu-2, found `{other}`"),
                        ))
                    }
                })
            }
            "spectrum" => {
                if let Some(rest) = rest.strip_prefix("for ") {
                    let Some((head, body)) = rest.split_once(':') else {
                        return Err(cerr(
                            *lineno,
                            "expected `spectrum for VAR = LO..HI : EXPR`".to_string(),
                        ));
                    };
                    let Some((var, range)) = head.split_once('=') else {
                        return Err(cerr(*lineno, "expected `VAR = LO..HI`".to_string()));
                    };
                    let Some((lo, hi)) = range.split_once("..") else {
                        return Err(cerr(*lineno, "expected `LO..HI` range".to_string()));
                    };
                    spectrum_parts.push(SpectrumPart::Sum {
                        var: var.trim().to_string(),
                        lo: parse_expr(lo.trim()).map_err(wrap(*lineno))?,
                        hi: parse_expr(hi.trim()).map_err(wrap(*lineno))?,
                        body: parse_expr(body.trim()).map_err(wrap(*lineno))?,
                    });
                } else {
                    spectrum_parts
                        .push(SpectrumPart::List(parse_expr_list(rest).map_err(wrap(*lineno))?));
                }
            }
            "excluded" => {
                excluded.extend(parse_expr_list(rest).map_err(wrap(*lineno))?);
            }
            other => {
                return Err(cerr(*lineno, format!("unknown field `{other}`")));
            }
        }
    }

    let missing = |what: &str| cerr(start, format!("family `{name}` lacks a `{what}` field"));
    let template = template.ok_or_else(|| missing("template"))?;
    let mu_formula = mu_formula.ok_or_else(|| missing("mu"))?;
    let tau_formula = tau_formula.ok_or_else(|| missing("tau"))?;
    let tau_max = tau_max.ok_or_else(|| missing("taumax"))?;
    if spectrum_parts.is_empty() {
        return Err(missing("spectrum"));
    }
    Ok(FamilySpec {
        name,
        display,
        var_names,
        params,
        moduli,
        template,
        mu_formula,
        tau_formula,
        tau_max,
        spectrum_parts,
        excluded,
    })
}

fn split_field(line: &str) -> (&str, &str) {
    match line.split_once(char::is_whitespace) {
        Some((key, rest)) => (key, rest.trim()),
        None => (line, ""),
    }
}
