//! Buchberger's algorithm with the Gebauer-Moeller pair update and sugar selection.

use std::collections::BinaryHeap;

use rustc_hash::FxHashMap;
use serde::Serialize;

use super::poly::{Ring, SparsePolynomial, Term};
use crate::monomial::Monomial;

#[derive(Clone, Debug, Default)]
pub struct GbOptions {
    /// Stop processing pairs whose (weighted) sugar exceeds this degree.
    pub truncate: Option<u32>,
    /// Variable weights for sugar; all ones when absent.
    pub weights: Option<Vec<u32>>,
    /// Variables from this index on are module components; pairs across components are skipped.
    pub module_from: Option<usize>,
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct GbStats {
    pub pairs_processed: usize,
    pub pairs_pruned: usize,
    pub zero_reductions: usize,
    pub max_sugar: u32,
}

/// A reduced basis: monic, autoreduced, sorted by increasing leading term.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub ring: Ring,
    pub polys: Vec<SparsePolynomial>,
    pub truncated_at: Option<u32>,
    pub stats: GbStats,
}

impl GroebnerBasis {
    pub fn lead_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().filter_map(|p| p.lead_monomial()).collect()
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn normal_form(&self, f: &SparsePolynomial) -> SparsePolynomial {
        normal_form(&self.ring, f, &self.polys)
    }
}

fn divmask(m: &Monomial) -> u64 {
    let mut mask = 0u64;
    for (i, &e) in m.exps().iter().enumerate() {
        let lvl = (e as u64).min(8);
        if lvl > 0 {
            mask |= ((1u64 << lvl) - 1) << (8 * i);
        }
    }
    mask
}

struct Reducer<'a> {
    poly: &'a SparsePolynomial,
    lead: Monomial,
    mask: u64,
}

fn reducers<'a>(g: &'a [SparsePolynomial]) -> Vec<Reducer<'a>> {
    g.iter()
        .filter_map(|p| p.lead().map(|t| Reducer { poly: p, lead: t.mono, mask: divmask(&t.mono) }))
        .collect()
}

fn find_reducer<'r>(rs: &'r [Reducer<'_>], m: &Monomial) -> Option<&'r Reducer<'r>> {
    let mm = divmask(m);
    let mut best: Option<&Reducer> = None;
    for r in rs {
        if r.mask & !mm == 0 && r.lead.divides(m) && best.map_or(true, |b| r.poly.len() < b.poly.len()) {
            best = Some(r);
        }
    }
    best
}

/// Accumulates a polynomial as a max-heap of keys plus a coefficient map.
struct Accumulator {
    heap: BinaryHeap<u128>,
    map: FxHashMap<u128, (Monomial, u32)>,
}

impl Accumulator {
    fn new(f: &SparsePolynomial) -> Self {
        let mut map = FxHashMap::default();
        map.reserve(f.len() * 2);
        let mut heap = BinaryHeap::with_capacity(f.len() * 2);
        for t in &f.terms {
            map.insert(t.key, (t.mono, t.coeff));
            heap.push(t.key);
        }
        Accumulator { heap, map }
    }

    fn pop(&mut self) -> Option<Term> {
        while let Some(k) = self.heap.pop() {
            if let Some((mono, coeff)) = self.map.remove(&k) {
                if coeff != 0 {
                    return Some(Term { key: k, mono, coeff });
                }
            }
        }
        None
    }

    /// Add `c * m * (p minus its leading term)`.
    fn add_tail(&mut self, ring: &Ring, p: &SparsePolynomial, m: &Monomial, c: u32) {
        let f = &ring.field;
        let mk = ring.key(m);
        for t in &p.terms[1..] {
            let k = t.key + mk;
            let v = f.mul(t.coeff, c);
            match self.map.get_mut(&k) {
                Some(e) => e.1 = f.add(e.1, v),
                None => {
                    self.map.insert(k, (t.mono.mul(m), v));
                    self.heap.push(k);
                }
            }
        }
    }

    fn drain_sorted(self) -> Vec<Term> {
        let mut v: Vec<Term> = self
            .map
            .into_iter()
            .filter(|(_, (_, c))| *c != 0)
            .map(|(key, (mono, coeff))| Term { key, mono, coeff })
            .collect();
        v.sort_by(|a, b| b.key.cmp(&a.key));
        v
    }
}

fn reduce_with(ring: &Ring, f: &SparsePolynomial, rs: &[Reducer<'_>], full: bool) -> SparsePolynomial {
    let field = &ring.field;
    let mut acc = Accumulator::new(f);
    let mut out: Vec<Term> = Vec::new();
    while let Some(t) = acc.pop() {
        match find_reducer(rs, &t.mono) {
            Some(r) => {
                let q = t.mono.div(&r.lead).expect("divisibility checked");
                let lc = r.poly.terms[0].coeff;
                let c = field.neg(field.mul(t.coeff, field.inv(lc)));
                acc.add_tail(ring, r.poly, &q, c);
            }
            None => {
                out.push(t);
                if !full {
                    out.extend(acc.drain_sorted());
                    break;
                }
            }
        }
    }
    SparsePolynomial { terms: out }
}

/// Full reduction of `f` by `g`: no term of the result is divisible by a leading term of `g`.
pub fn normal_form(ring: &Ring, f: &SparsePolynomial, g: &[SparsePolynomial]) -> SparsePolynomial {
    let rs = reducers(g);
    reduce_with(ring, f, &rs, true)
}

fn component(m: &Monomial, from: Option<usize>) -> Option<usize> {
    let from = from?;
    (from..m.nvars()).find(|&i| m.exp(i) > 0)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
    key: u128,
}

struct Engine<'a> {
    ring: &'a Ring,
    weights: Vec<u32>,
    opts: &'a GbOptions,
    basis: Vec<SparsePolynomial>,
    sugar: Vec<u32>,
    leads: Vec<Monomial>,
    live: Vec<bool>,
    pairs: Vec<Pair>,
    stats: GbStats,
}

impl<'a> Engine<'a> {
    fn wdeg(&self, m: &Monomial) -> u32 {
        Ring::weighted_degree(&self.weights, m)
    }

    fn poly_sugar(&self, f: &SparsePolynomial) -> u32 {
        f.terms.iter().map(|t| self.wdeg(&t.mono)).max().unwrap_or(0)
    }

    fn make_pair(&self, i: usize, j: usize) -> Pair {
        let lcm = self.leads[i].lcm(&self.leads[j]);
        let si = self.sugar[i] + self.wdeg(&lcm) - self.wdeg(&self.leads[i]);
        let sj = self.sugar[j] + self.wdeg(&lcm) - self.wdeg(&self.leads[j]);
        Pair { i, j, lcm, sugar: si.max(sj), key: self.ring.key(&lcm) }
    }

    /// Gebauer-Moeller update for a new basis element `h` (already pushed).
    fn update(&mut self, h: usize) {
        let lh = self.leads[h];
        let comp_h = component(&lh, self.opts.module_from);
        // Old pairs (i,j) killed by the chain criterion through h.
        let before = self.pairs.len();
        let leads = &self.leads;
        self.pairs.retain(|p| {
            !(lh.divides(&p.lcm)
                && leads[p.i].lcm(&lh) != p.lcm
                && leads[p.j].lcm(&lh) != p.lcm)
        });
        self.stats.pairs_pruned += before - self.pairs.len();

        let mut cands: Vec<(Pair, bool)> = Vec::new();
        for i in 0..h {
            if !self.live[i] {
                continue;
            }
            if comp_h.is_some() && component(&self.leads[i], self.opts.module_from) != comp_h {
                continue;
            }
            let p = self.make_pair(i, h);
            let coprime = self.leads[i].is_coprime(&lh);
            cands.push((p, coprime));
        }
        // Among new pairs, keep one per lcm class and drop those whose lcm is a proper multiple of another.
        let lcms: Vec<Monomial> = cands.iter().map(|(p, _)| p.lcm).collect();
        let mut keep = vec![true; cands.len()];
        for a in 0..cands.len() {
            for b in 0..cands.len() {
                if a != b && lcms[b].divides(&lcms[a]) && lcms[b] != lcms[a] {
                    keep[a] = false;
                    break;
                }
            }
        }
        // One pair per lcm class; a coprime pair in the class discards the whole class.
        let mut classes: FxHashMap<u128, (usize, bool)> = FxHashMap::default();
        for (idx, (p, coprime)) in cands.iter().enumerate() {
            if !keep[idx] {
                continue;
            }
            let e = classes.entry(p.key).or_insert((idx, false));
            e.1 |= *coprime;
            if e.0 != idx {
                keep[idx] = false;
            }
        }
        for (first, has_coprime) in classes.values() {
            if *has_coprime {
                keep[*first] = false;
            }
        }
        for ((p, _), k) in cands.into_iter().zip(keep) {
            if k {
                self.pairs.push(p);
            } else {
                self.stats.pairs_pruned += 1;
            }
        }
        // Older elements whose leading term is a multiple of the new one stop spawning pairs.
        for i in 0..h {
            if self.live[i] && lh.divides(&self.leads[i]) {
                self.live[i] = false;
            }
        }
    }

    fn insert(&mut self, f: SparsePolynomial, sugar: u32) {
        let f = self.ring.make_monic(&f);
        let lead = f.lead_monomial().expect("nonzero");
        self.basis.push(f);
        self.sugar.push(sugar);
        self.leads.push(lead);
        self.live.push(true);
        let h = self.basis.len() - 1;
        self.update(h);
    }

    fn spoly(&self, p: &Pair) -> SparsePolynomial {
        let r = self.ring;
        let (fi, fj) = (&self.basis[p.i], &self.basis[p.j]);
        let mi = p.lcm.div(&self.leads[p.i]).expect("lcm");
        let mj = p.lcm.div(&self.leads[p.j]).expect("lcm");
        let a = r.mul_term(&SparsePolynomial { terms: fi.terms[1..].to_vec() }, &mi, 1);
        let b = r.mul_term(&SparsePolynomial { terms: fj.terms[1..].to_vec() }, &mj, 1);
        r.sub(&a, &b)
    }

    fn run(&mut self) {
        loop {
            if self.pairs.is_empty() {
                break;
            }
            let best = (0..self.pairs.len())
                .min_by(|&a, &b| {
                    let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
                    pa.sugar.cmp(&pb.sugar).then(pa.key.cmp(&pb.key))
                })
                .expect("nonempty");
            let p = self.pairs.swap_remove(best);
            if let Some(limit) = self.opts.truncate {
                if p.sugar > limit {
                    self.pairs.push(p);
                    break;
                }
            }
            self.stats.pairs_processed += 1;
            self.stats.max_sugar = self.stats.max_sugar.max(p.sugar);
            let s = self.spoly(&p);
            let rs = reducers(&self.basis);
            let h = reduce_with(self.ring, &s, &rs, true);
            if h.is_zero() {
                self.stats.zero_reductions += 1;
                continue;
            }
            let sugar = p.sugar.max(self.poly_sugar(&h));
            self.insert(h, sugar);
        }
    }
}

/// Reduced Groebner basis of the ideal (or module) generated by `gens`.
pub fn groebner_basis(ring: &Ring, gens: &[SparsePolynomial], opts: &GbOptions) -> GroebnerBasis {
    let weights = opts.weights.clone().unwrap_or_else(|| vec![1; ring.nvars()]);
    let mut eng = Engine {
        ring,
        weights,
        opts,
        basis: Vec::new(),
        sugar: Vec::new(),
        leads: Vec::new(),
        live: Vec::new(),
        pairs: Vec::new(),
        stats: GbStats::default(),
    };
    let mut input: Vec<SparsePolynomial> = gens.iter().filter(|g| !g.is_zero()).map(|g| ring.rekey(g)).collect();
    input.sort_by_key(|g| (eng.poly_sugar(g), g.lead().map(|t| t.key)));
    for g in input {
        let rs = reducers(&eng.basis);
        let h = reduce_with(ring, &g, &rs, true);
        if !h.is_zero() {
            let s = eng.poly_sugar(&g);
            eng.insert(h, s);
        }
    }
    eng.run();
    let truncated_at = if eng.pairs.is_empty() { None } else { opts.truncate };
    let stats = eng.stats.clone();
    GroebnerBasis { ring: ring.clone(), polys: interreduce(ring, eng.basis), truncated_at, stats }
}

/// Minimalize, tail-reduce, make monic and sort by increasing leading term.
pub fn interreduce(ring: &Ring, polys: Vec<SparsePolynomial>) -> Vec<SparsePolynomial> {
    let mut polys: Vec<SparsePolynomial> = polys.into_iter().filter(|p| !p.is_zero()).collect();
    polys.sort_by_key(|p| p.lead().map(|t| t.key));
    let mut minimal: Vec<SparsePolynomial> = Vec::new();
    for p in polys {
        let lm = p.lead_monomial().expect("nonzero");
        if minimal.iter().any(|q| q.lead_monomial().expect("nonzero").divides(&lm)) {
            continue;
        }
        minimal.push(p);
    }
    let mut out = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let others: Vec<SparsePolynomial> =
            minimal.iter().enumerate().filter(|(k, _)| *k != idx).map(|(_, q)| q.clone()).collect();
        let rs = reducers(&others);
        let p = &minimal[idx];
        let head = SparsePolynomial { terms: vec![p.terms[0]] };
        let tail = reduce_with(ring, &SparsePolynomial { terms: p.terms[1..].to_vec() }, &rs, true);
        out.push(ring.make_monic(&ring.add(&head, &tail)));
    }
    out
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
pub fn is_groebner_basis(ring: &Ring, g: &[SparsePolynomial], module_from: Option<usize>) -> bool {
    let rs = reducers(g);
    for i in 0..g.len() {
        for j in (i + 1)..g.len() {
            let (li, lj) = (g[i].lead_monomial(), g[j].lead_monomial());
            let (Some(li), Some(lj)) = (li, lj) else { continue };
            if module_from.is_some() && component(&li, module_from) != component(&lj, module_from) {
                continue;
            }
            if module_from.is_none() && li.is_coprime(&lj) {
                continue;
            }
            let l = li.lcm(&lj);
            let ci = ring.field.inv(g[i].terms[0].coeff);
            let cj = ring.field.inv(g[j].terms[0].coeff);
            let a = ring.mul_term(&g[i], &l.div(&li).expect("lcm"), ci);
            let b = ring.mul_term(&g[j], &l.div(&lj).expect("lcm"), cj);
            if !reduce_with(ring, &ring.sub(&a, &b), &rs, false).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Monic, and no term of any element divisible by another element's leading term.
pub fn is_reduced(g: &[SparsePolynomial]) -> bool {
    for (i, p) in g.iter().enumerate() {
        if p.terms.first().map_or(true, |t| t.coeff != 1) {
            return false;
        }
        for (j, q) in g.iter().enumerate() {
            if i == j {
                continue;
            }
            let lq = q.terms[0].mono;
            if p.terms.iter().any(|t| lq.divides(&t.mono)) {
                return false;
            }
        }
    }
    true
}
