//! Sparse polynomials over `Z/p` with a runtime term order.
//!
//! Every order used here compares a short vector of nonnegative integer
//! fields that are linear in the exponents, so each monomial gets a packed
//! `u128` key with `key(a*b) = key(a) + key(b)` and comparisons are integer
//! comparisons.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use super::field::PrimeField;
use crate::monomial::{Monomial, MAX_VARS};

const FIELD_BITS: u32 = 12;
const MAX_FIELDS: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum TermOrder {
    /// Graded reverse lexicographic order on all variables.
    Grevlex,
    /// The first `k` variables form a block that is eliminated; grevlex within each block.
    Elimination(usize),
    /// Variables `ring_vars..` are component markers `e_0, e_1, ...` (exponent 0 or 1).
    /// Position first (`e_0` highest), then twisted degree, then reverse lexicographic.
    PositionOverTerm { ring_vars: usize, twists: Vec<u32> },
}

/// Variable names, order, and field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    pub names: Vec<String>,
    pub order: TermOrder,
    pub field: PrimeField,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Term {
    pub key: u128,
    pub mono: Monomial,
    pub coeff: u32,
}

/// Terms sorted by decreasing key, nonzero coefficients only.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparsePolynomial {
    pub terms: Vec<Term>,
}

fn push_grevlex_fields(fields: &mut Vec<u32>, exps: &[u16]) {
    let deg: u32 = exps.iter().map(|&e| e as u32).sum();
    let mut acc = deg;
    fields.push(acc);
    for &e in exps.iter().skip(1).rev() {
        acc -= e as u32;
        fields.push(acc);
    }
}

impl Ring {
    pub fn new(names: &[&str], order: TermOrder, field: PrimeField) -> Self {
        assert!(names.len() <= MAX_VARS);
        Ring { names: names.iter().map(|s| s.to_string()).collect(), order, field }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn name_refs(&self) -> Vec<&str> {
        self.names.iter().map(String::as_str).collect()
    }

    pub fn key(&self, m: &Monomial) -> u128 {
        let e = m.exps();
        let mut fields: Vec<u32> = Vec::with_capacity(MAX_FIELDS);
        match &self.order {
            TermOrder::Grevlex => push_grevlex_fields(&mut fields, e),
            TermOrder::Elimination(k) => {
                push_grevlex_fields(&mut fields, &e[..*k]);
                push_grevlex_fields(&mut fields, &e[*k..]);
            }
            TermOrder::PositionOverTerm { ring_vars, twists } => {
                let comps = &e[*ring_vars..];
                let ncomp = comps.len() as u32;
                let (pos, twist) = comps
                    .iter()
                    .enumerate()
                    .find(|(_, &c)| c > 0)
                    .map(|(j, _)| (ncomp - j as u32, twists[j]))
                    .unwrap_or((0, 0));
                fields.push(pos);
                let deg: u32 = e[..*ring_vars].iter().map(|&x| x as u32).sum();
                fields.push(deg + twist);
                let mut acc = deg;
                for &x in e[..*ring_vars].iter().skip(1).rev() {
                    acc -= x as u32;
                    fields.push(acc);
                }
            }
        }
        debug_assert!(fields.len() <= MAX_FIELDS);
        let mut key: u128 = 0;
        for (i, f) in fields.iter().enumerate() {
            debug_assert!(*f < (1 << FIELD_BITS));
            key |= (*f as u128) << (FIELD_BITS * (MAX_FIELDS - 1 - i) as u32);
        }
        key
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }

    pub fn term(&self, mono: Monomial, coeff: u32) -> Term {
        Term { key: self.key(&mono), mono, coeff }
    }

    pub fn zero(&self) -> SparsePolynomial {
        SparsePolynomial::default()
    }

    pub fn one(&self) -> SparsePolynomial {
        self.monomial(Monomial::one(self.nvars()), 1)
    }

    pub fn var(&self, i: usize) -> SparsePolynomial {
        self.monomial(Monomial::var(self.nvars(), i), 1)
    }

    pub fn monomial(&self, mono: Monomial, coeff: u32) -> SparsePolynomial {
        let c = coeff % self.field.modulus();
        if c == 0 {
            return self.zero();
        }
        SparsePolynomial { terms: vec![self.term(mono, c)] }
    }

    /// Collect `(monomial, integer coefficient)` pairs, combining repeats.
    pub fn from_terms(&self, items: impl IntoIterator<Item = (Monomial, i64)>) -> SparsePolynomial {
        let mut v: Vec<Term> = items
            .into_iter()
            .map(|(m, c)| self.term(m.with_nvars(self.nvars()), self.field.from_i64(c)))
            .collect();
        v.sort_by(|a, b| b.key.cmp(&a.key));
        let mut out: Vec<Term> = Vec::with_capacity(v.len());
        for t in v {
            match out.last_mut() {
                Some(last) if last.key == t.key => last.coeff = self.field.add(last.coeff, t.coeff),
                _ => out.push(t),
            }
        }
        out.retain(|t| t.coeff != 0);
        SparsePolynomial { terms: out }
    }

    /// Re-sort a polynomial after the order changed (same variables).
    pub fn rekey(&self, f: &SparsePolynomial) -> SparsePolynomial {
        let mut terms: Vec<Term> = f.terms.iter().map(|t| self.term(t.mono, t.coeff)).collect();
        terms.sort_by(|a, b| b.key.cmp(&a.key));
        SparsePolynomial { terms }
    }

    pub fn add(&self, a: &SparsePolynomial, b: &SparsePolynomial) -> SparsePolynomial {
        self.combine(a, b, 1)
    }

    pub fn sub(&self, a: &SparsePolynomial, b: &SparsePolynomial) -> SparsePolynomial {
        self.combine(a, b, self.field.neg(1))
    }

    /// `a + c*b`.
    pub fn combine(&self, a: &SparsePolynomial, b: &SparsePolynomial, c: u32) -> SparsePolynomial {
        let f = &self.field;
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() || j < b.terms.len() {
            let take_a = j >= b.terms.len() || (i < a.terms.len() && a.terms[i].key > b.terms[j].key);
            let take_b = i >= a.terms.len() || (j < b.terms.len() && b.terms[j].key > a.terms[i].key);
            if take_a {
                out.push(a.terms[i]);
                i += 1;
            } else if take_b {
                let mut t = b.terms[j];
                t.coeff = f.mul(t.coeff, c);
                if t.coeff != 0 {
                    out.push(t);
                }
                j += 1;
            } else {
                let s = f.add(a.terms[i].coeff, f.mul(b.terms[j].coeff, c));
                if s != 0 {
                    let mut t = a.terms[i];
                    t.coeff = s;
                    out.push(t);
                }
                i += 1;
                j += 1;
            }
        }
        SparsePolynomial { terms: out }
    }

    pub fn scale(&self, a: &SparsePolynomial, c: u32) -> SparsePolynomial {
        if c % self.field.modulus() == 0 {
            return self.zero();
        }
        SparsePolynomial {
            terms: a.terms.iter().map(|t| Term { coeff: self.field.mul(t.coeff, c), ..*t }).collect(),
        }
    }

    /// `c * m * a`.
    pub fn mul_term(&self, a: &SparsePolynomial, m: &Monomial, c: u32) -> SparsePolynomial {
        let mk = self.key(m);
        SparsePolynomial {
            terms: a
                .terms
                .iter()
                .filter_map(|t| {
                    let coeff = self.field.mul(t.coeff, c);
                    (coeff != 0).then(|| Term { key: t.key + mk, mono: t.mono.mul(m), coeff })
                })
                .collect(),
        }
    }

    pub fn mul(&self, a: &SparsePolynomial, b: &SparsePolynomial) -> SparsePolynomial {
        let mut acc = self.zero();
        for t in &b.terms {
            acc = self.add(&acc, &self.mul_term(a, &t.mono, t.coeff));
        }
        acc
    }

    pub fn pow(&self, a: &SparsePolynomial, e: u32) -> SparsePolynomial {
        let mut r = self.one();
        for _ in 0..e {
            r = self.mul(&r, a);
        }
        r
    }

    pub fn make_monic(&self, a: &SparsePolynomial) -> SparsePolynomial {
        match a.terms.first() {
            None => a.clone(),
            Some(t) => self.scale(a, self.field.inv(t.coeff)),
        }
    }

    /// Substitute polynomials (in `target`) for each variable.
    pub fn substitute(&self, f: &SparsePolynomial, images: &[SparsePolynomial], target: &Ring) -> SparsePolynomial {
        assert_eq!(images.len(), self.nvars());
        let mut acc = target.zero();
        for t in &f.terms {
            let mut p = target.monomial(Monomial::one(target.nvars()), t.coeff);
            for (i, &e) in t.mono.exps().iter().enumerate() {
                for _ in 0..e {
                    p = target.mul(&p, &images[i]);
                }
            }
            acc = target.add(&acc, &p);
        }
        acc
    }

    /// Parse `3*t^2*u - u^3 + 7` style input; juxtaposed factors (`t^9u^2`) are accepted.
    pub fn parse(&self, s: &str) -> Result<SparsePolynomial, String> {
        parse_poly(self, s)
    }

    pub fn render(&self, f: &SparsePolynomial) -> String {
        if f.terms.is_empty() {
            return "0".to_string();
        }
        let names = self.name_refs();
        let mut out = String::new();
        for (k, t) in f.terms.iter().enumerate() {
            let c = self.field.to_signed(t.coeff);
            let mono = t.mono.render(&names);
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if k == 0 {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            match (mag, mono.as_str()) {
                (m, "1") => out.push_str(&m.to_string()),
                (1, _) => out.push_str(&mono),
                (m, _) => out.push_str(&format!("{m}*{mono}")),
            }
        }
        out
    }

    /// Weighted degree of a monomial.
    pub fn weighted_degree(weights: &[u32], m: &Monomial) -> u32 {
        m.exps().iter().zip(weights).map(|(&e, &w)| e as u32 * w).sum()
    }

    pub fn is_homogeneous(&self, f: &SparsePolynomial, weights: &[u32]) -> bool {
        let mut it = f.terms.iter().map(|t| Self::weighted_degree(weights, &t.mono));
        match it.next() {
            None => true,
            Some(d) => it.all(|x| x == d),
        }
    }
}

impl SparsePolynomial {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.mono)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> u32 {
        self.terms.iter().find(|t| t.mono == *m).map_or(0, |t| t.coeff)
    }

    /// Largest total degree of a term.
    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.mono.degree()).max().unwrap_or(0)
    }

    /// Does any term involve a variable with index in `vars`?
    pub fn involves(&self, vars: std::ops::Range<usize>) -> bool {
        self.terms.iter().any(|t| vars.clone().any(|i| t.mono.exp(i) > 0))
    }
}

pub struct Display<'a>(pub &'a Ring, pub &'a SparsePolynomial);

impl fmt::Display for Display<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.render(self.1))
    }
}

fn parse_poly(ring: &Ring, s: &str) -> Result<SparsePolynomial, String> {
    let names = ring.names.clone();
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut pos = 0;
    let mut items: Vec<(Monomial, i64)> = Vec::new();
    if chars.is_empty() {
        return Err("empty polynomial".into());
    }
    while pos < chars.len() {
        let mut sign = 1i64;
        while pos < chars.len() && (chars[pos] == '+' || chars[pos] == '-' || chars[pos] == '\u{2212}') {
            if chars[pos] != '+' {
                sign = -sign;
            }
            pos += 1;
        }
        let mut coeff: Option<i64> = None;
        let start = pos;
        while pos < chars.len() && chars[pos].is_ascii_digit() {
            pos += 1;
        }
        if pos > start {
            let txt: String = chars[start..pos].iter().collect();
            coeff = Some(txt.parse::<i64>().map_err(|e| format!("bad coefficient '{txt}': {e}"))?);
        }
        let mut exps = vec![0u16; ring.nvars()];
        let mut saw_var = false;
        loop {
            if pos < chars.len() && chars[pos] == '*' {
                pos += 1;
            }
            let rest: String = chars[pos..].iter().collect();
            // Longest name first so `x1` is not read as `x`.
            let mut best: Option<(usize, usize)> = None;
            for (i, n) in names.iter().enumerate() {
                if rest.starts_with(n.as_str()) && best.map_or(true, |(_, l)| n.len() > l) {
                    best = Some((i, n.len()));
                }
            }
            let Some((var, len)) = best else { break };
            pos += len;
            saw_var = true;
            let mut e = 1u16;
            if pos < chars.len() && chars[pos] == '^' {
                pos += 1;
                let st = pos;
                while pos < chars.len() && chars[pos].is_ascii_digit() {
                    pos += 1;
                }
                let txt: String = chars[st..pos].iter().collect();
                e = txt.parse().map_err(|_| format!("bad exponent after {}", names[var]))?;
            }
            exps[var] += e;
        }
        if coeff.is_none() && !saw_var {
            return Err(format!("unexpected input at '{}'", chars[pos..].iter().collect::<String>()));
        }
        items.push((Monomial::new(&exps), sign * coeff.unwrap_or(1)));
        if pos < chars.len() && !(chars[pos] == '+' || chars[pos] == '-' || chars[pos] == '\u{2212}') {
            return Err(format!("unexpected '{}'", chars[pos]));
        }
    }
    Ok(ring.from_terms(items))
}
