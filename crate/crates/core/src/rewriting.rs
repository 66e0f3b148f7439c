//! Generator trees of Borel-fixed ideals and the Λ/C rewriting rules.
//!
//! A rule applied to the leaf `m` (last variable `x_l`) glues the children
//! `m*x_l, ..., m*x_top`; `top` is the last section variable for Λ-rules and
//! one more for C-rules. On ideals this removes `m` (and the ray `m*x_last^k`
//! of the saturating variable) from the ideal.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::monomial::{
    borel_closure, is_borel_fixed, monomial_count, parse_monomial, Monomial, MonomialError, MonomialIdeal,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RewriteError {
    #[error("{0} is not a minimal generator")]
    NotAGenerator(Monomial),
    #[error("rule {rule} does not match the pattern of {target}")]
    PatternMismatch { rule: u8, target: Monomial },
    #[error("rewriting {0} would break Borel-fixedness")]
    BreaksBorel(Monomial),
    #[error("{0} involves variables outside the rule tables")]
    OutOfRange(Monomial),
    #[error("ideal is not Borel-fixed")]
    NotBorel,
    #[error("rewrite budget {budget} exceeds the cone genus {genus}")]
    BudgetTooLarge { budget: usize, genus: i64 },
    #[error(transparent)]
    Monomial(#[from] MonomialError),
    #[error("history parse error: {0}")]
    Parse(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RuleFamily {
    Lambda,
    C,
}

impl fmt::Display for RuleFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RuleFamily::Lambda => "Lambda",
            RuleFamily::C => "C",
        })
    }
}

/// One rule application. `degree` is the degree of the new children, i.e. the
/// target degree plus one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RewriteEvent {
    pub family: RuleFamily,
    pub rule: u8,
    pub target: Monomial,
    pub degree: u32,
}

impl RewriteEvent {
    pub fn new(family: RuleFamily, rule: u8, target: Monomial) -> Self {
        RewriteEvent { family, rule, target, degree: target.degree() + 1 }
    }
}

impl fmt::Display for RewriteEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.family, self.rule, self.target)
    }
}

impl Serialize for RewriteEvent {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        (self.family.to_string(), self.rule, self.target.to_string()).serialize(s)
    }
}

/// Parse `(C, 3, x2^4)` in `nvars` variables.
pub fn parse_event(s: &str, nvars: usize) -> Result<RewriteEvent, RewriteError> {
    let inner = s
        .trim()
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| RewriteError::Parse(format!("expected (family, rule, monomial), got '{s}'")))?;
    let parts: Vec<&str> = inner.splitn(3, ',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(RewriteError::Parse(format!("expected three fields in '{s}'")));
    }
    let family = match parts[0] {
        "Lambda" | "L" => RuleFamily::Lambda,
        "C" => RuleFamily::C,
        other => return Err(RewriteError::Parse(format!("unknown family '{other}'"))),
    };
    let rule = u8::from_str(parts[1]).map_err(|_| RewriteError::Parse(format!("bad rule '{}'", parts[1])))?;
    let target = parse_monomial(parts[2], nvars)?;
    Ok(RewriteEvent::new(family, rule, target))
}

/// Index of the last section variable a family may touch, for a section ring with `section_vars` variables.
fn top_var(family: RuleFamily, section_vars: usize) -> usize {
    match family {
        RuleFamily::Lambda => section_vars - 1,
        RuleFamily::C => section_vars,
    }
}

/// Rule number for expanding `target`; `section_vars` is 3 for the P^4 tables.
pub fn rule_for(family: RuleFamily, target: &Monomial, section_vars: usize) -> Result<u8, RewriteError> {
    let top = top_var(family, section_vars);
    if !target.uses_only_first(top + 1) {
        return Err(RewriteError::OutOfRange(*target));
    }
    match (family, target.last_var()) {
        (RuleFamily::Lambda, None) => Ok(section_vars as u8 + 1),
        (RuleFamily::C, None) => Err(RewriteError::OutOfRange(*target)),
        (_, Some(l)) => Ok(l as u8 + 1),
    }
}

/// Apply one rule to `ideal` at the leaf `target`. For Λ-rules the ideal lives in
/// the section ring; for C-rules in the section ring plus two variables.
pub fn apply_rule(
    ideal: &MonomialIdeal,
    family: RuleFamily,
    target: &Monomial,
    rule: u8,
) -> Result<MonomialIdeal, RewriteError> {
    let section_vars = match family {
        RuleFamily::Lambda => ideal.nvars(),
        RuleFamily::C => ideal.nvars() - 2,
    };
    let target = target.with_nvars(ideal.nvars());
    let expected = rule_for(family, &target, section_vars)?;
    if expected != rule {
        return Err(RewriteError::PatternMismatch { rule, target });
    }
    let top = top_var(family, section_vars);
    if !ideal.generators().contains(&target) {
        return Err(RewriteError::NotAGenerator(target));
    }
    // Removing the target keeps the ideal Borel-fixed iff no monomial of the ideal moves onto it.
    for k in 0..top {
        if target.exp(k) == 0 {
            continue;
        }
        for j in k + 1..=top {
            let mut m = target.times_var(j);
            m = m.div(&Monomial::var(ideal.nvars(), k)).expect("x_k divides target");
            if ideal.contains(&m) {
                return Err(RewriteError::BreaksBorel(target));
            }
        }
    }
    let start = target.last_var().unwrap_or(0);
    let mut gens: Vec<Monomial> = ideal.generators().iter().copied().filter(|g| *g != target).collect();
    gens.extend((start..=top).map(|i| target.times_var(i)));
    Ok(MonomialIdeal::new(ideal.nvars(), gens)?)
}

/// All leaves of `ideal` to which a rule of `family` applies, with the resulting ideals.
pub fn applicable_rewrites(ideal: &MonomialIdeal, family: RuleFamily) -> Vec<(RewriteEvent, MonomialIdeal)> {
    let section_vars = match family {
        RuleFamily::Lambda => ideal.nvars(),
        RuleFamily::C => ideal.nvars() - 2,
    };
    let mut out = Vec::new();
    for g in ideal.generators() {
        let Ok(rule) = rule_for(family, g, section_vars) else { continue };
        if let Ok(next) = apply_rule(ideal, family, g, rule) {
            out.push((RewriteEvent::new(family, rule, *g), next));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeNode {
    pub label: Option<usize>,
    pub degree: u32,
    pub monomial: Monomial,
    pub children: Vec<usize>,
}

/// Rooted tree whose root-to-leaf label strings are the minimal generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorTree {
    nvars: usize,
    nodes: Vec<TreeNode>,
}

impl GeneratorTree {
    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn leaves(&self) -> Vec<Monomial> {
        self.nodes.iter().filter(|n| n.children.is_empty()).map(|n| n.monomial).collect()
    }

    pub fn nonleaf_count(&self) -> usize {
        self.nodes.iter().filter(|n| !n.children.is_empty()).count()
    }

    /// Vertices of degree greater than `t` that have children (the dominating ones).
    pub fn dominating_above(&self, t: u32) -> usize {
        self.nodes.iter().filter(|n| !n.children.is_empty() && n.degree > t).count()
    }

    /// Indented dump, one vertex per line as `label@degree [leaf]`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        self.dump_node(0, 0, &mut out);
        out
    }

    fn dump_node(&self, idx: usize, depth: usize, out: &mut String) {
        let n = &self.nodes[idx];
        let label = n.label.map_or_else(|| "root".to_string(), |l| format!("x{l}"));
        out.push_str(&"  ".repeat(depth));
        out.push_str(&format!("{label}@{}", n.degree));
        if n.children.is_empty() {
            out.push_str(" [leaf]");
        }
        out.push('\n');
        for &c in &n.children {
            self.dump_node(c, depth + 1, out);
        }
    }

    /// Label monotonicity along every root-to-leaf path.
    pub fn labels_monotone(&self) -> bool {
        self.nodes.iter().all(|n| {
            n.children.iter().all(|&c| match (n.label, self.nodes[c].label) {
                (Some(a), Some(b)) => a <= b,
                (None, Some(_)) => true,
                _ => false,
            })
        })
    }
}

/// Tree of minimal generators (variables of each generator read in increasing order).
pub fn tree_of(ideal: &MonomialIdeal) -> Result<GeneratorTree, RewriteError> {
    if ideal.is_zero() {
        return Err(MonomialError::ZeroIdeal.into());
    }
    if !is_borel_fixed(ideal) {
        return Err(RewriteError::NotBorel);
    }
    let n = ideal.nvars();
    if let Some(g) = ideal.generators().iter().find(|g| !g.uses_only_first(4.min(n))) {
        return Err(RewriteError::OutOfRange(*g));
    }
    let mut nodes = vec![TreeNode { label: None, degree: 0, monomial: Monomial::one(n), children: Vec::new() }];
    for g in ideal.generators() {
        let mut cur = 0;
        let mut mono = Monomial::one(n);
        for v in 0..n {
            for _ in 0..g.exp(v) {
                mono = mono.times_var(v);
                let found = nodes[cur].children.iter().copied().find(|&c| nodes[c].label == Some(v));
                cur = match found {
                    Some(c) => c,
                    None => {
                        let idx = nodes.len();
                        nodes.push(TreeNode {
                            label: Some(v),
                            degree: mono.degree(),
                            monomial: mono,
                            children: Vec::new(),
                        });
                        nodes[cur].children.push(idx);
                        idx
                    }
                };
            }
        }
    }
    for i in 0..nodes.len() {
        let mut ch = std::mem::take(&mut nodes[i].children);
        ch.sort_by_key(|&c| nodes[c].label);
        nodes[i].children = ch;
    }
    Ok(GeneratorTree { nvars: n, nodes })
}

pub fn ideal_of(tree: &GeneratorTree) -> MonomialIdeal {
    MonomialIdeal::new(tree.nvars, tree.leaves()).expect("leaves share the tree's ring")
}

fn apply_on_tree(
    tree: &GeneratorTree,
    family: RuleFamily,
    leaf: &Monomial,
    rule: u8,
) -> Result<GeneratorTree, RewriteError> {
    let ideal = ideal_of(tree);
    tree_of(&apply_rule(&ideal, family, leaf, rule)?)
}

/// Λ-rule on a tree in the section ring; the unit ideal stands for the empty tree.
pub fn apply_lambda(tree: &GeneratorTree, leaf: &Monomial, rule: u8) -> Result<GeneratorTree, RewriteError> {
    apply_on_tree(tree, RuleFamily::Lambda, leaf, rule)
}

pub fn apply_c(tree: &GeneratorTree, leaf: &Monomial, rule: u8) -> Result<GeneratorTree, RewriteError> {
    apply_on_tree(tree, RuleFamily::C, leaf, rule)
}

/// Starting ideal of a family: the unit ideal for Λ, the cone for C.
fn working_ideal(family: RuleFamily, initial: &MonomialIdeal) -> MonomialIdeal {
    match family {
        RuleFamily::Lambda => initial.clone(),
        RuleFamily::C => initial.cone_extend(2),
    }
}

/// Rule applications starting from `initial` (a section ideal; the unit ideal for
/// Λ-histories built from scratch).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RewriteHistory {
    pub family: RuleFamily,
    pub initial: MonomialIdeal,
    pub events: Vec<RewriteEvent>,
    pub result: MonomialIdeal,
}

impl RewriteHistory {
    pub fn start(family: RuleFamily, initial: MonomialIdeal) -> Self {
        let result = working_ideal(family, &initial);
        RewriteHistory { family, initial, events: Vec::new(), result }
    }

    /// Append one rule application at `target`.
    pub fn push(&mut self, target: &Monomial) -> Result<(), RewriteError> {
        let section_vars = self.initial.nvars();
        let target = target.with_nvars(self.result.nvars());
        let rule = rule_for(self.family, &target, section_vars)?;
        self.result = apply_rule(&self.result, self.family, &target, rule)?;
        self.events.push(RewriteEvent::new(self.family, rule, target));
        Ok(())
    }

    pub fn from_events(
        family: RuleFamily,
        initial: MonomialIdeal,
        events: &[RewriteEvent],
    ) -> Result<Self, RewriteError> {
        let mut h = Self::start(family, initial);
        for e in events {
            let before = h.events.len();
            h.push(&e.target)?;
            if h.events[before].rule != e.rule {
                return Err(RewriteError::PatternMismatch { rule: e.rule, target: e.target });
            }
        }
        Ok(h)
    }

    /// Re-run the events from the initial ideal.
    pub fn replay(&self) -> Result<MonomialIdeal, RewriteError> {
        Ok(Self::from_events(self.family, self.initial.clone(), &self.events)?.result)
    }

    /// `(family, rule, target)` triples, one per line.
    pub fn serialize_triples(&self) -> String {
        self.events.iter().map(|e| format!("{e}\n")).collect()
    }

    pub fn parse_triples(family: RuleFamily, initial: MonomialIdeal, text: &str) -> Result<Self, RewriteError> {
        let nvars = working_ideal(family, &initial).nvars();
        let events = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| parse_event(l, nvars))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_events(family, initial, &events)
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }
}

/// Number of events applied to leaves of degree greater than `t`. For C-histories
/// at `t = 5` this is `h^1(I_C(5))`; for Λ-histories it is `h^1(I_Γ(t))`.
pub fn rewrite_tally(history: &RewriteHistory, t: u32) -> usize {
    history.events.iter().filter(|e| e.target.degree() > t).count()
}

/// Arithmetic genus of the cone over a zero-dimensional section ideal.
pub fn cone_genus(section: &MonomialIdeal) -> Result<i64, MonomialError> {
    let top = section.max_degree();
    let mut weighted: i64 = 0;
    let mut colength: i64 = 0;
    let mut t = 0;
    loop {
        let s = section.standard_count(t) as i64;
        if s == 0 && t >= top {
            break;
        }
        weighted += s * t as i64;
        colength += s;
        t += 1;
        if t > 4 * top + 8 {
            return Err(MonomialError::NotZeroDimensional(t));
        }
    }
    Ok(weighted - colength + 1)
}

/// Genus after a C-history: cone genus minus the number of rewrites.
pub fn curve_genus(history: &RewriteHistory) -> Result<i64, MonomialError> {
    Ok(cone_genus(&history.initial)? - history.events.len() as i64)
}

/// P^3 hyperplane-gin staircase `(λ_0, ..., λ_{k-1})` with generators `x0^i * x1^λ_i` and `x0^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StaircaseP3 {
    pub lambda: Vec<u16>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StaircaseData {
    pub lambda: Vec<u16>,
    pub degree: u32,
    pub gp_admissible: bool,
    pub ideal: MonomialIdeal,
    pub regularity: u32,
    pub cone_genus: i64,
}

impl StaircaseP3 {
    pub fn new(lambda: Vec<u16>) -> Self {
        StaircaseP3 { lambda }
    }

    pub fn degree(&self) -> u32 {
        self.lambda.iter().map(|&l| l as u32).sum()
    }

    /// `λ_i - 1 >= λ_{i+1} >= λ_i - 2` for every consecutive pair.
    pub fn gp_admissible(&self) -> bool {
        self.lambda.windows(2).all(|w| {
            let (a, b) = (w[0] as i32, w[1] as i32);
            a - 1 >= b && b >= a - 2
        })
    }

    /// Ideal in `x0, x1`.
    pub fn ideal(&self) -> MonomialIdeal {
        let k = self.lambda.len() as u16;
        let mut gens: Vec<Monomial> =
            self.lambda.iter().enumerate().map(|(i, &l)| Monomial::new(&[i as u16, l])).collect();
        gens.push(Monomial::new(&[k, 0]));
        MonomialIdeal::new(2, gens).expect("two variables")
    }

    pub fn ops(&self) -> Result<StaircaseData, MonomialError> {
        let ideal = self.ideal();
        Ok(StaircaseData {
            lambda: self.lambda.clone(),
            degree: self.degree(),
            gp_admissible: self.gp_admissible(),
            regularity: ideal.max_degree(),
            cone_genus: cone_genus(&ideal)?,
            ideal,
        })
    }

    /// Recover `λ` from a zero-dimensional Borel-fixed ideal in two variables.
    pub fn from_ideal(ideal: &MonomialIdeal) -> Option<StaircaseP3> {
        if ideal.nvars() != 2 || !is_borel_fixed(ideal) {
            return None;
        }
        let mut lambda = Vec::new();
        for i in 0u16.. {
            let j = (0u16..64).find(|&j| ideal.contains(&Monomial::new(&[i, j])))?;
            if j == 0 {
                if lambda.last() != Some(&0) && i > 0 {
                    lambda.push(0);
                }
                break;
            }
            lambda.push(j);
        }
        Some(StaircaseP3 { lambda })
    }
}

/// Sanity helper: a Borel closure of two-variable generators, as a staircase.
pub fn staircase_of_borel(gens: &[Monomial]) -> Option<StaircaseP3> {
    StaircaseP3::from_ideal(&borel_closure(gens, 2))
}

/// Number of monomials of degree `t` in the section ring plus cone variables.
pub fn cone_inside_count(section: &MonomialIdeal, extra: usize, t: u32) -> u64 {
    let n = section.nvars() + extra;
    let q = crate::monomial::hilbert_function_of_section(section, n, t);
    monomial_count(n, t) - q
}
