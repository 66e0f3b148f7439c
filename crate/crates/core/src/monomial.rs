//! Monomials, monomial ideals and their graded counts.
//!
//! Variables are `x0 .. x(n-1)`; a Borel move replaces a factor `x_j` by
//! `x_i` with `i < j`.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest variable count a [`Monomial`] can hold. The Groebner engine needs
/// `t, u, x0..x4` plus module slots, the ideal layer at most five.
pub const MAX_VARS: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonomialError {
    #[error("zero ideal has no scheme-theoretic meaning here")]
    ZeroIdeal,
    #[error("unit ideal defines the empty scheme")]
    UnitIdeal,
    #[error("ideal is not Borel-fixed")]
    NotBorel,
    #[error("ideal is not saturated (a generator is divisible by x{0})")]
    NotSaturated(usize),
    #[error("horizon {horizon} is below the top generator degree {max_degree}")]
    HorizonTooSmall { horizon: u32, max_degree: u32 },
    #[error("ideal is not zero-dimensional (standard counts still nondecreasing at degree {0})")]
    NotZeroDimensional(u32),
    #[error("expected a one-dimensional scheme, Hilbert function has {0}")]
    DimensionNotOne(String),
    #[error("variable count mismatch: expected {expected}, got {got}")]
    VarCount { expected: usize, got: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

/// Exponent vector in at most [`MAX_VARS`] variables.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    nvars: u8,
}

impl Monomial {
    pub fn new(exps: &[u16]) -> Self {
        assert!(exps.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        let mut e = [0u16; MAX_VARS];
        e[..exps.len()].copy_from_slice(exps);
        Monomial { exps: e, nvars: exps.len() as u8 }
    }

    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS);
        Monomial { exps: [0; MAX_VARS], nvars: nvars as u8 }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    #[inline]
    pub fn exps(&self) -> &[u16] {
        &self.exps[..self.nvars as usize]
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut r = *self;
        for (a, b) in r.exps.iter_mut().zip(other.exps.iter()) {
            *a += *b;
        }
        r.nvars = self.nvars.max(other.nvars);
        r
    }

    /// `self / other`, when `other` divides `self`.
    #[inline]
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut r = *self;
        for (a, b) in r.exps.iter_mut().zip(other.exps.iter()) {
            *a -= *b;
        }
        Some(r)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut r = *self;
        for (a, b) in r.exps.iter_mut().zip(other.exps.iter()) {
            *a = (*a).max(*b);
        }
        r.nvars = self.nvars.max(other.nvars);
        r
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn times_var(&self, i: usize) -> Monomial {
        let mut r = *self;
        r.exps[i] += 1;
        r
    }

    /// Elementary Borel move `x_from -> x_to` (requires `to < from` and `x_from | self`).
    pub fn borel_move(&self, from: usize, to: usize) -> Option<Monomial> {
        if to >= from || self.exps[from] == 0 {
            return None;
        }
        let mut r = *self;
        r.exps[from] -= 1;
        r.exps[to] += 1;
        Some(r)
    }

    /// Index of the largest variable dividing the monomial.
    pub fn last_var(&self) -> Option<usize> {
        (0..self.nvars()).rev().find(|&i| self.exps[i] > 0)
    }

    /// Same exponents read in a ring with `nvars` variables. Dropped variables must have exponent 0.
    pub fn with_nvars(&self, nvars: usize) -> Monomial {
        assert!(nvars <= MAX_VARS);
        debug_assert!(self.exps[nvars.min(MAX_VARS)..].iter().all(|&e| e == 0));
        let mut r = *self;
        r.nvars = nvars as u8;
        r
    }

    pub fn uses_only_first(&self, k: usize) -> bool {
        self.exps[k..].iter().all(|&e| e == 0)
    }

    /// Render with the given variable names.
    pub fn render(&self, names: &[&str]) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.exps().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[i].to_string()),
                _ => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Degree first, then the exponent vectors in decreasing lexicographic order
/// (so `x0^2 < x0*x1 < x1^2`).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
            .then_with(|| self.nvars.cmp(&other.nvars))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub const X_NAMES: [&str; 5] = ["x0", "x1", "x2", "x3", "x4"];

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars()).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        f.write_str(&self.render(&refs))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Monomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

pub fn binomial(n: i64, k: i64) -> u64 {
    if k < 0 || n < k || n < 0 {
        return 0;
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut r: u64 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Number of monomials of degree `t` in `n` variables.
pub fn monomial_count(n: usize, t: u32) -> u64 {
    if n == 0 {
        return u64::from(t == 0);
    }
    binomial(t as i64 + n as i64 - 1, n as i64 - 1)
}

/// All monomials of degree `t` in `n` variables, in the canonical order.
pub fn monomials_of_degree(n: usize, t: u32) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(monomial_count(n, t) as usize);
    let mut cur = vec![0u16; n];
    fn rec(i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        let n = cur.len();
        if i + 1 == n {
            cur[i] = left as u16;
            out.push(Monomial::new(cur));
            cur[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e as u16;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    if n == 0 {
        if t == 0 {
            out.push(Monomial::new(&[]));
        }
        return out;
    }
    rec(0, t, &mut cur, &mut out);
    out
}

/// Monomial ideal with a minimal, canonically ordered generating set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self, MonomialError> {
        let mut v = Vec::new();
        for g in gens {
            if g.nvars() > nvars && !g.uses_only_first(nvars) {
                return Err(MonomialError::VarCount { expected: nvars, got: g.nvars() });
            }
            v.push(g.with_nvars(nvars));
        }
        Ok(MonomialIdeal { nvars, gens: minimalize(v) })
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: Vec::new() }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: vec![Monomial::one(nvars)] }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn max_degree(&self) -> u32 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn count_in_degree(&self, d: u32) -> usize {
        self.gens.iter().filter(|g| g.degree() == d).count()
    }

    fn require_proper(&self) -> Result<(), MonomialError> {
        if self.is_zero() {
            Err(MonomialError::ZeroIdeal)
        } else if self.is_unit() {
            Err(MonomialError::UnitIdeal)
        } else {
            Ok(())
        }
    }

    /// Parse `x0^2, x0*x1` or `Borel(x2^4, x1*x2^2)` in `nvars` variables.
    pub fn parse(s: &str, nvars: usize) -> Result<Self, MonomialError> {
        let s = s.trim();
        let (body, borel) = match s.strip_prefix("Borel(") {
            Some(rest) => {
                let inner = rest
                    .strip_suffix(')')
                    .ok_or_else(|| MonomialError::Parse("missing ')' after Borel(".into()))?;
                (inner, true)
            }
            None => (s, false),
        };
        let mut gens = Vec::new();
        for part in body.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            gens.push(parse_monomial(part, nvars)?);
        }
        if borel {
            Ok(borel_closure(&gens, nvars))
        } else {
            MonomialIdeal::new(nvars, gens)
        }
    }

    /// The same generators read in `nvars + extra` variables.
    pub fn cone_extend(&self, extra: usize) -> MonomialIdeal {
        let n = self.nvars + extra;
        MonomialIdeal { nvars: n, gens: self.gens.iter().map(|g| g.with_nvars(n)).collect() }
    }

    /// Drop trailing variables that no generator uses.
    pub fn restrict_vars(&self, nvars: usize) -> Result<MonomialIdeal, MonomialError> {
        if self.gens.iter().any(|g| !g.uses_only_first(nvars)) {
            return Err(MonomialError::VarCount { expected: nvars, got: self.nvars });
        }
        Ok(MonomialIdeal { nvars, gens: self.gens.iter().map(|g| g.with_nvars(nvars)).collect() })
    }

    /// Generators not obtainable from the others by Borel moves and multiplication.
    pub fn borel_generators(&self) -> Vec<Monomial> {
        let mut out = Vec::new();
        for (k, g) in self.gens.iter().enumerate() {
            let others: Vec<Monomial> =
                self.gens.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, h)| *h).collect();
            if !borel_closure(&others, self.nvars).contains(g) {
                out.push(*g);
            }
        }
        out
    }

    /// `Borel(...)` rendering, only meaningful for Borel-fixed ideals.
    pub fn borel_string(&self) -> String {
        let gens: Vec<String> = self.borel_generators().iter().map(|g| g.to_string()).collect();
        format!("Borel({})", gens.join(", "))
    }

    /// Count of monomials of degree `t` inside the ideal.
    pub fn inside_count(&self, t: u32) -> u64 {
        monomials_of_degree(self.nvars, t).iter().filter(|m| self.contains(m)).count() as u64
    }

    pub fn standard_count(&self, t: u32) -> u64 {
        monomial_count(self.nvars, t) - self.inside_count(t)
    }

    pub fn standard_monomials(&self, t: u32) -> Vec<Monomial> {
        monomials_of_degree(self.nvars, t).into_iter().filter(|m| !self.contains(m)).collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        f.write_str(&parts.join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

pub fn parse_monomial(s: &str, nvars: usize) -> Result<Monomial, MonomialError> {
    let mut e = vec![0u16; nvars];
    let s = s.trim();
    if s == "1" {
        return Ok(Monomial::new(&e));
    }
    for factor in s.split('*') {
        let factor = factor.trim();
        let (var, pow) = match factor.split_once('^') {
            Some((v, p)) => {
                let p: u16 = p
                    .trim()
                    .parse()
                    .map_err(|_| MonomialError::Parse(format!("bad exponent in '{factor}'")))?;
                (v.trim(), p)
            }
            None => (factor, 1),
        };
        let idx: usize = var
            .strip_prefix('x')
            .and_then(|d| d.parse().ok())
            .ok_or_else(|| MonomialError::Parse(format!("bad variable '{var}'")))?;
        if idx >= nvars || idx > 4 {
            return Err(MonomialError::Parse(format!("variable x{idx} outside x0..x{}", nvars - 1)));
        }
        e[idx] += pow;
    }
    Ok(Monomial::new(&e))
}

/// Smallest Borel-fixed ideal containing `gens`; empty input gives the zero ideal.
pub fn borel_closure(gens: &[Monomial], nvars: usize) -> MonomialIdeal {
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut stack: Vec<Monomial> = gens.iter().map(|g| g.with_nvars(nvars)).collect();
    while let Some(m) = stack.pop() {
        if !seen.insert(m) {
            continue;
        }
        for from in 1..nvars {
            for to in 0..from {
                if let Some(n) = m.borel_move(from, to) {
                    if !seen.contains(&n) {
                        stack.push(n);
                    }
                }
            }
        }
    }
    MonomialIdeal { nvars, gens: minimalize(seen.into_iter().collect()) }
}

pub fn is_borel_fixed(ideal: &MonomialIdeal) -> bool {
    let n = ideal.nvars;
    ideal.gens.iter().all(|g| {
        (1..n).all(|from| (0..from).all(|to| g.borel_move(from, to).map_or(true, |m| ideal.contains(&m))))
    })
}

/// No minimal generator divisible by the last variable; only valid for Borel-fixed ideals.
pub fn is_saturated(ideal: &MonomialIdeal) -> Result<bool, MonomialError> {
    if !is_borel_fixed(ideal) {
        return Err(MonomialError::NotBorel);
    }
    let last = ideal.nvars - 1;
    Ok(ideal.gens.iter().all(|g| g.exp(last) == 0))
}

fn require_borel_saturated(ideal: &MonomialIdeal) -> Result<(), MonomialError> {
    ideal.require_proper()?;
    if !is_saturated(ideal)? {
        return Err(MonomialError::NotSaturated(ideal.nvars - 1));
    }
    Ok(())
}

/// Castelnuovo-Mumford regularity of a saturated Borel-fixed ideal.
pub fn regularity(ideal: &MonomialIdeal) -> Result<u32, MonomialError> {
    require_borel_saturated(ideal)?;
    Ok(ideal.max_degree())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedProfile {
    pub nvars: usize,
    pub inside: Vec<u64>,
    pub standard: Vec<u64>,
    pub colength: Option<u64>,
}

impl GradedProfile {
    pub fn horizon(&self) -> u32 {
        self.standard.len() as u32 - 1
    }
}

pub fn graded_profile(ideal: &MonomialIdeal, horizon: u32) -> Result<GradedProfile, MonomialError> {
    if ideal.is_zero() {
        return Err(MonomialError::ZeroIdeal);
    }
    let top = ideal.max_degree();
    if horizon < top {
        return Err(MonomialError::HorizonTooSmall { horizon, max_degree: top });
    }
    let mut inside = Vec::new();
    let mut standard = Vec::new();
    for t in 0..=horizon {
        let i = ideal.inside_count(t);
        inside.push(i);
        standard.push(monomial_count(ideal.nvars, t) - i);
    }
    let h = horizon as usize;
    let colength = if standard[h] == 0 {
        Some(standard.iter().sum())
    } else {
        if h > 0 && standard[h] >= standard[h - 1] {
            return Err(MonomialError::NotZeroDimensional(horizon));
        }
        None
    };
    Ok(GradedProfile { nvars: ideal.nvars, inside, standard, colength })
}

/// Colength of a zero-dimensional ideal.
pub fn colength(ideal: &MonomialIdeal) -> Result<u64, MonomialError> {
    ideal.require_proper()?;
    let mut h = ideal.max_degree();
    loop {
        let p = graded_profile(ideal, h)?;
        if let Some(c) = p.colength {
            return Ok(c);
        }
        h += 1;
    }
}

fn binom_shifted(a: i64, b: i64) -> u64 {
    // binom(a, b) with binom(-1, -1) = 1, needed when no variables are added.
    if b == -1 {
        u64::from(a == -1)
    } else {
        binomial(a, b)
    }
}

/// Hilbert function at `t` of `R_n / I R_n`, with `I` living in its own `k = I.nvars()` variables.
pub fn hilbert_function_of_section(ideal: &MonomialIdeal, n: usize, t: u32) -> u64 {
    let k = ideal.nvars;
    assert!(n >= k);
    let extra = (n - k) as i64;
    (0..=t)
        .map(|j| ideal.standard_count(j) * binom_shifted(t as i64 - j as i64 + extra - 1, extra - 1))
        .sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PointCohomology {
    pub h0: u64,
    pub h1: u64,
}

/// `h^0` and `h^1` of the twisted ideal sheaf of the points cut out in `P^3` by a
/// zero-dimensional ideal in `x0..x2` (or a saturated one in `x0..x3`).
pub fn point_cohomology(ideal: &MonomialIdeal, t: u32) -> Result<PointCohomology, MonomialError> {
    let section = match ideal.nvars {
        3 => ideal.clone(),
        4 => {
            require_borel_saturated(ideal)?;
            ideal.restrict_vars(3)?
        }
        got => return Err(MonomialError::VarCount { expected: 3, got }),
    };
    let c = colength(&section)?;
    let hf = hilbert_function_of_section(&section, 4, t);
    let total = monomial_count(4, t);
    Ok(PointCohomology { h0: total - hf, h1: c - hf })
}

pub fn cone_extend(ideal: &MonomialIdeal, extra: usize) -> MonomialIdeal {
    ideal.cone_extend(extra)
}

/// Degree and arithmetic genus read from the Hilbert polynomial `d t + 1 - g`.
pub fn one_dim_degree_genus(ideal: &MonomialIdeal) -> Result<(u64, i64), MonomialError> {
    ideal.require_proper()?;
    let reg = ideal.max_degree();
    let window = reg + 3;
    let top = reg + window;
    let h: Vec<i64> =
        (0..=top).map(|t| ideal.standard_count(t) as i64).collect();
    let diffs: Vec<i64> = (reg + 1..=top).map(|t| h[t as usize] - h[t as usize - 1]).collect();
    let d = diffs[0];
    if diffs.iter().any(|&x| x != d) {
        return Err(MonomialError::DimensionNotOne(format!(
            "nonconstant first differences {diffs:?} past degree {reg}"
        )));
    }
    if d <= 0 {
        return Err(MonomialError::DimensionNotOne("constant value, dimension 0".into()));
    }
    let t = top as i64;
    Ok((d as u64, 1 - (h[top as usize] - d * t)))
}

/// Exhaustive set form for tests and small searches.
pub fn standard_set(ideal: &MonomialIdeal, upto: u32) -> BTreeSet<Monomial> {
    (0..=upto).flat_map(|t| ideal.standard_monomials(t)).collect()
}
