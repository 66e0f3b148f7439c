//! First syzygies of binary forms and the linear system behind prescribed syzygies.

use serde::Serialize;

use super::binary::{check_equal_degrees, common_factor_degree, BinaryForm};
use super::buchberger::{groebner_basis, GbOptions};
use super::field::PrimeField;
use super::linalg::Matrix;
use super::poly::{Ring, TermOrder};
use super::GroebnerError;
use crate::enumeration::SplittingType;
use crate::monomial::Monomial;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SyzygyRecord {
    pub form_degree: u32,
    /// Degrees of minimal first syzygies, ascending.
    pub syzygy_degrees: Vec<u32>,
    /// Betti table rows `(row, [b0, b1, b2])` with `b_j` in degree `row + j`.
    pub betti: Vec<(u32, [usize; 3])>,
    /// Module Groebner basis size, for reporting.
    pub basis_size: usize,
}

impl SyzygyRecord {
    pub fn render_betti(&self) -> String {
        let n = self.syzygy_degrees.len() + 1;
        let mut s = format!("total: 1 {} {}\n", n, self.syzygy_degrees.len());
        for (row, b) in &self.betti {
            let cell = |x: usize| if x == 0 { ".".to_string() } else { x.to_string() };
            s.push_str(&format!("{row:>5}: {} {} {}\n", cell(b[0]), cell(b[1]), cell(b[2])));
        }
        s
    }
}

fn module_ring(count: usize, d: u32, field: PrimeField) -> Ring {
    let names: Vec<String> = ["t".to_string(), "u".to_string()]
        .into_iter()
        .chain((0..=count).map(|j| format!("e{j}")))
        .collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let mut twists = vec![0];
    twists.extend(std::iter::repeat(d).take(count));
    Ring::new(&refs, TermOrder::PositionOverTerm { ring_vars: 2, twists }, field)
}

/// Count degree-`k` monomials in `t, u` divisible by one of `leads` (given as `(a, b)` exponents).
fn count_in_monomial_ideal(leads: &[(u32, u32)], k: u32) -> usize {
    (0..=k).filter(|&b| leads.iter().any(|&(la, lb)| la <= k - b && lb <= b)).count()
}

/// Minimal syzygy degrees via a position-over-term module basis of `(f_i e_0 + e_{i+1})`.
pub fn syzygy_splitting_type(forms: &[BinaryForm], field: PrimeField) -> Result<(SyzygyRecord, SplittingType), GroebnerError> {
    let d = check_equal_degrees(forms)?;
    let common = common_factor_degree(forms, &field);
    if common > 0 {
        return Err(GroebnerError::BasePoints(common));
    }
    let n = forms.len();
    if n + 3 > crate::monomial::MAX_VARS {
        return Err(GroebnerError::FormCount { expected: crate::monomial::MAX_VARS - 3, got: n });
    }
    let ring = module_ring(n, d, field);
    let nv = ring.nvars();
    let gens: Vec<_> = forms
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let e0 = ring.var(2);
            let lifted = ring.mul(&f.to_poly(&ring), &e0);
            ring.add(&lifted, &ring.var(3 + i))
        })
        .collect();
    let mut weights = vec![1, 1, 0];
    weights.extend(std::iter::repeat(d).take(n));
    let gb = groebner_basis(&ring, &gens, &GbOptions { truncate: None, weights: Some(weights), module_from: Some(2) });
    // Leading terms per syzygy component.
    let mut leads: Vec<Vec<(u32, u32)>> = vec![Vec::new(); n];
    let mut max_deg = 0;
    for p in &gb.polys {
        let m: Monomial = p.lead_monomial().expect("nonzero");
        if m.exp(2) > 0 {
            continue;
        }
        let comp = (3..nv).find(|&j| m.exp(j) > 0).expect("module element") - 3;
        leads[comp].push((m.exp(0) as u32, m.exp(1) as u32));
        max_deg = max_deg.max(m.exp(0) as u32 + m.exp(1) as u32 + d);
    }
    let hf = |e: u32| -> i64 {
        if e < d {
            return 0;
        }
        leads.iter().map(|l| count_in_monomial_ideal(l, e - d) as i64).sum()
    };
    let top = max_deg + 3;
    let mut degrees = Vec::new();
    for e in d..=top {
        let second = hf(e) - 2 * if e >= 1 { hf(e - 1) } else { 0 } + if e >= 2 { hf(e - 2) } else { 0 };
        if second < 0 {
            return Err(GroebnerError::Syzygy(format!("negative second difference at degree {e}")));
        }
        degrees.extend(std::iter::repeat(e).take(second as usize));
    }
    if degrees.len() != n - 1 {
        return Err(GroebnerError::Syzygy(format!("found {} generators for {} forms", degrees.len(), n)));
    }
    let splitting = SplittingType::new(degrees.iter().map(|&e| e as i64 - d as i64).collect());
    let mut rows: std::collections::BTreeMap<u32, [usize; 3]> = std::collections::BTreeMap::new();
    rows.entry(0).or_default()[0] = 1;
    rows.entry(d - 1).or_default()[1] = n;
    for &e in &degrees {
        rows.entry(e - 2).or_default()[2] += 1;
    }
    let record = SyzygyRecord {
        form_degree: d,
        syzygy_degrees: degrees,
        betti: rows.into_iter().collect(),
        basis_size: gb.polys.len(),
    };
    Ok((record, splitting))
}

/// `dim Syz_e` from the kernel of `(c_i) -> sum c_i f_i` on forms of degree `e - d`.
pub fn syzygy_dimension_oracle(forms: &[BinaryForm], field: &PrimeField, e: u32) -> usize {
    let d = forms[0].degree;
    if e < d {
        return 0;
    }
    let k = (e - d) as usize;
    let n = forms.len();
    let mut m = Matrix::zeros(e as usize + 1, n * (k + 1));
    for (i, f) in forms.iter().enumerate() {
        for s in 0..=k {
            for (j, &c) in f.coeffs.iter().enumerate() {
                m.set(s + j, i * (k + 1) + s, c);
            }
        }
    }
    n * (k + 1) - m.rank(field)
}

/// A formal identity `sum_k c_k(t,u) f_k = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub terms: Vec<(usize, BinaryForm)>,
}

impl Relation {
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|(_, c)| c.degree)
    }
}

/// Parse `t^4 f_0 + t^3u f_1 + (u^2-t^2) f_2 = 0`.
pub fn parse_relation(s: &str, field: PrimeField) -> Result<Relation, GroebnerError> {
    let body = s.split('=').next().unwrap_or("");
    let chars: Vec<char> = body.chars().collect();
    let mut terms = Vec::new();
    let mut seg_start = 0;
    let mut i = 0;
    while i < chars.len() {
        if chars[i] == 'f' {
            let mut j = i + 1;
            if j < chars.len() && chars[j] == '_' {
                j += 1;
            }
            let st = j;
            while j < chars.len() && chars[j].is_ascii_digit() {
                j += 1;
            }
            if j == st {
                return Err(GroebnerError::Parse(format!("expected an index after 'f' in '{s}'")));
            }
            let idx: usize = chars[st..j].iter().collect::<String>().parse().expect("digits");
            let coeff_text: String = chars[seg_start..i].iter().collect();
            terms.push((idx, parse_coefficient(&coeff_text, field)?));
            seg_start = j;
            i = j;
        } else {
            i += 1;
        }
    }
    if !chars[seg_start..].iter().all(|c| c.is_whitespace() || *c == '.' || *c == ',') {
        let rest: String = chars[seg_start..].iter().collect();
        if !rest.trim().trim_end_matches("and").trim().is_empty() {
            return Err(GroebnerError::Parse(format!("trailing text '{rest}'")));
        }
    }
    Ok(Relation { terms })
}

fn parse_coefficient(text: &str, field: PrimeField) -> Result<BinaryForm, GroebnerError> {
    let mut t = text.trim();
    let mut negative = false;
    while let Some(c) = t.chars().next() {
        match c {
            '+' => t = t[1..].trim_start(),
            '-' => {
                negative = !negative;
                t = t[1..].trim_start();
            }
            _ => break,
        }
    }
    let t = t.trim_end_matches('*').trim();
    let t = if t.starts_with('(') && t.ends_with(')') { &t[1..t.len() - 1] } else { t };
    let mut form = if t.is_empty() {
        let mut one = BinaryForm::zero(0);
        one.coeffs[0] = 1;
        one
    } else {
        BinaryForm::parse(t, field)?
    };
    if negative {
        for c in form.coeffs.iter_mut() {
            *c = field.neg(*c);
        }
    }
    Ok(form)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SyzygySolution {
    pub unknowns: usize,
    pub equations: usize,
    pub rank: usize,
    pub nullity: usize,
    /// First nullspace vector (first free coordinate set to 1), as forms `f_0..f_{n-1}`.
    pub representative: Option<Vec<BinaryForm>>,
}

/// Unknown `k (d+1) + j` is the coefficient of `t^(d-j) u^j` in `f_k`.
pub fn solve_syzygy_constraints(
    relations: &[Relation],
    count: usize,
    d: u32,
    field: PrimeField,
) -> Result<SyzygySolution, GroebnerError> {
    let width = d as usize + 1;
    let unknowns = count * width;
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (r, rel) in relations.iter().enumerate() {
        let Some(cd) = rel.degree() else { continue };
        if rel.terms.iter().any(|(_, c)| c.degree != cd) {
            return Err(GroebnerError::InconsistentRelation(r));
        }
        if let Some(&(index, _)) = rel.terms.iter().find(|(k, _)| *k >= count) {
            return Err(GroebnerError::FormIndex { index, count });
        }
        for target in 0..=(cd + d) as usize {
            let mut row = vec![0u32; unknowns];
            for (k, c) in &rel.terms {
                for (i, &ci) in c.coeffs.iter().enumerate() {
                    if ci != 0 && target >= i && target - i < width {
                        let col = k * width + target - i;
                        row[col] = field.add(row[col], ci);
                    }
                }
            }
            rows.push(row);
        }
    }
    let mut m = Matrix::zeros(rows.len(), unknowns);
    for (r, row) in rows.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            m.set(r, c, v);
        }
    }
    let null = m.nullspace(&field);
    let rank = unknowns - null.len();
    let representative = null.first().map(|v| {
        (0..count)
            .map(|k| BinaryForm { degree: d, coeffs: v[k * width..(k + 1) * width].to_vec() })
            .collect()
    });
    Ok(SyzygySolution { unknowns, equations: rows.len(), rank, nullity: null.len(), representative })
}

/// The common scalar `s` with `b_k = s a_k` for all `k`, if there is one.
pub fn common_scalar(a: &[BinaryForm], b: &[BinaryForm], field: &PrimeField) -> Option<u32> {
    if a.len() != b.len() {
        return None;
    }
    let mut scalar: Option<u32> = None;
    for (x, y) in a.iter().zip(b) {
        if x.degree != y.degree {
            return None;
        }
        for (&p, &q) in x.coeffs.iter().zip(&y.coeffs) {
            match (p, q) {
                (0, 0) => {}
                (0, _) | (_, 0) => return None,
                _ => {
                    let s = field.mul(q, field.inv(p));
                    if *scalar.get_or_insert(s) != s {
                        return None;
                    }
                }
            }
        }
    }
    scalar
}

/// Render forms in `t, u`, one per line.
pub fn render_forms(forms: &[BinaryForm], field: PrimeField) -> Vec<String> {
    forms.iter().map(|f| f.render(field)).collect()
}
