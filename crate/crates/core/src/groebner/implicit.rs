//! Kernel of `k[x0..x4] -> k[t,u]`, `x_i -> g_i`, by elimination.

use std::time::{Duration, Instant};

use serde::Serialize;

use super::binary::{check_equal_degrees, common_factor_degree, BinaryForm};
use super::buchberger::{groebner_basis, interreduce, GbOptions, GbStats};
use super::field::PrimeField;
use super::linalg::Matrix;
use super::poly::{Ring, SparsePolynomial, TermOrder};
use super::GroebnerError;
use crate::monomial::{monomials_of_degree, one_dim_degree_genus, Monomial, MonomialIdeal, X_NAMES};

#[derive(Clone, Debug, Default)]
pub struct ImplicitOptions {
    /// Only compute the kernel up to this degree in `x`.
    pub truncate: Option<u32>,
    /// Proceed even if the forms share a factor.
    pub allow_base_points: bool,
}

#[derive(Clone, Debug)]
pub struct Implicitization {
    pub form_degree: u32,
    /// Reduced grevlex basis of the kernel in `x0..x4`.
    pub ring: Ring,
    pub basis: Vec<SparsePolynomial>,
    pub initial: MonomialIdeal,
    /// Degree in `x` up to which the basis is known to be complete.
    pub complete_through: Option<u32>,
    /// Leading terms of the full elimination basis in `t, u, x0..`, rendered.
    pub elimination_leads: Vec<String>,
    pub stats: GbStats,
    pub elapsed: Duration,
}

pub fn target_ring(n: usize, field: PrimeField) -> Ring {
    Ring::new(&X_NAMES[..n], TermOrder::Grevlex, field)
}

fn elimination_ring(n: usize, field: PrimeField) -> Ring {
    let mut names = vec!["t", "u"];
    names.extend_from_slice(&X_NAMES[..n]);
    Ring::new(&names, TermOrder::Elimination(2), field)
}

fn validate(forms: &[BinaryForm], field: &PrimeField, allow_base_points: bool) -> Result<u32, GroebnerError> {
    let d = check_equal_degrees(forms)?;
    let nonzero: Vec<&BinaryForm> = forms.iter().filter(|f| !f.is_zero()).collect();
    if nonzero.len() < 2 || nonzero.iter().all(|f| f.proportional(nonzero[0], field)) {
        return Err(GroebnerError::Proportional);
    }
    let common = common_factor_degree(forms, field);
    if common > 0 && !allow_base_points {
        return Err(GroebnerError::BasePoints(common));
    }
    Ok(d)
}

/// Eliminate `t, u` from `(x_i - g_i)` under a block order; the part free of `t, u` is the kernel.
pub fn implicitize(forms: &[BinaryForm], field: PrimeField, opts: &ImplicitOptions) -> Result<Implicitization, GroebnerError> {
    let start = Instant::now();
    let d = validate(forms, &field, opts.allow_base_points)?;
    let n = forms.len();
    let er = elimination_ring(n, field);
    let gens: Vec<SparsePolynomial> = forms
        .iter()
        .enumerate()
        .map(|(i, g)| er.sub(&er.var(i + 2), &g.to_poly(&er)))
        .collect();
    let mut weights = vec![1, 1];
    weights.extend(std::iter::repeat(d).take(n));
    let gb = groebner_basis(
        &er,
        &gens,
        &GbOptions { truncate: opts.truncate.map(|k| k * d), weights: Some(weights), module_from: None },
    );
    let tr = target_ring(n, field);
    let kernel: Vec<SparsePolynomial> = gb
        .polys
        .iter()
        .filter(|p| !p.involves(0..2))
        .map(|p| tr.from_terms(p.terms.iter().map(|t| (Monomial::new(&t.mono.exps()[2..]), t.coeff as i64))))
        .collect();
    let basis = interreduce(&tr, kernel);
    let initial = MonomialIdeal::new(n, basis.iter().filter_map(|p| p.lead_monomial()))?;
    let complete_through = gb.truncated_at.map(|w| w / d);
    let elimination_leads = gb.polys.iter().filter_map(|p| p.lead_monomial()).map(|m| er.render(&er.monomial(m, 1))).collect();
    Ok(Implicitization {
        form_degree: d,
        ring: tr,
        basis,
        initial,
        complete_through,
        elimination_leads,
        stats: gb.stats,
        elapsed: start.elapsed(),
    })
}

impl Implicitization {
    /// Largest degree of a minimal generator of the initial ideal.
    pub fn max_generator_degree(&self) -> u32 {
        self.initial.max_degree()
    }

    /// Every basis element vanishes after substituting `x_i -> g_i`.
    pub fn substitution_sound(&self, forms: &[BinaryForm]) -> bool {
        let tu = super::binary::tu_ring(self.ring.field);
        let images: Vec<SparsePolynomial> = forms.iter().map(|g| g.to_poly(&tu)).collect();
        self.basis.iter().all(|p| self.ring.substitute(p, &images, &tu).is_zero())
    }
}

/// Degree and arithmetic genus of the image, read off the initial ideal.
pub fn image_degree_genus(kernel: &Implicitization) -> Result<(u64, i64), GroebnerError> {
    Ok(one_dim_degree_genus(&kernel.initial)?)
}

/// Linear-algebra view of degree `k`: which monomials are standard for the kernel.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvaluationProfile {
    pub degree: u32,
    /// `dim (R/J)_k`, the rank of the evaluation map.
    pub hilbert: usize,
    /// Leading monomials of `J_k` under grevlex.
    pub leading: Vec<Monomial>,
}

/// Evaluate all degree-`k` monomials at the forms; a monomial leads an element of the
/// kernel exactly when its image is spanned by the images of smaller monomials.
pub fn evaluation_profile(forms: &[BinaryForm], field: &PrimeField, k: u32) -> EvaluationProfile {
    let n = forms.len();
    let d = forms[0].degree;
    let tr = target_ring(n, *field);
    let mut monos = monomials_of_degree(n, k);
    monos.sort_by_key(|m| tr.key(m));
    let width = (d * k + 1) as usize;
    let mut echelon: Vec<Option<Vec<u32>>> = vec![None; width];
    let mut hilbert = 0;
    let mut leading = Vec::new();
    let mut cache: std::collections::HashMap<Monomial, BinaryForm> = std::collections::HashMap::new();
    for m in monos {
        let mut v = power_product(forms, &m, field, &mut cache).coeffs;
        let mut independent = false;
        for c in 0..width {
            if v[c] == 0 {
                continue;
            }
            match &echelon[c] {
                Some(row) => {
                    let factor = v[c];
                    for j in c..width {
                        v[j] = field.sub(v[j], field.mul(factor, row[j]));
                    }
                }
                None => {
                    let inv = field.inv(v[c]);
                    for x in v.iter_mut().skip(c) {
                        *x = field.mul(*x, inv);
                    }
                    echelon[c] = Some(v.clone());
                    independent = true;
                    break;
                }
            }
        }
        if independent {
            hilbert += 1;
        } else {
            leading.push(m);
        }
    }
    leading.sort();
    EvaluationProfile { degree: k, hilbert, leading }
}

fn power_product(
    forms: &[BinaryForm],
    m: &Monomial,
    field: &PrimeField,
    cache: &mut std::collections::HashMap<Monomial, BinaryForm>,
) -> BinaryForm {
    if m.is_one() {
        let mut one = BinaryForm::zero(0);
        one.coeffs[0] = 1;
        return one;
    }
    if let Some(f) = cache.get(m) {
        return f.clone();
    }
    let i = (0..m.nvars()).find(|&i| m.exp(i) > 0).expect("nonconstant");
    let rest = m.div(&Monomial::var(m.nvars(), i)).expect("divides");
    let f = power_product(forms, &rest, field, cache).mul(&forms[i], field);
    cache.insert(*m, f.clone());
    f
}

/// Hilbert function of the kernel against that of its initial ideal, degree by degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MacaulayCheck {
    pub degrees: Vec<u32>,
    pub kernel_hilbert: Vec<usize>,
    pub initial_hilbert: Vec<u64>,
    pub leading_terms_agree: bool,
}

impl MacaulayCheck {
    pub fn holds(&self) -> bool {
        self.leading_terms_agree
            && self.kernel_hilbert.iter().zip(&self.initial_hilbert).all(|(&a, &b)| a as u64 == b)
    }
}

pub fn macaulay_check(kernel: &Implicitization, forms: &[BinaryForm], upto: u32) -> MacaulayCheck {
    let mut out = MacaulayCheck {
        degrees: Vec::new(),
        kernel_hilbert: Vec::new(),
        initial_hilbert: Vec::new(),
        leading_terms_agree: true,
    };
    for k in 0..=upto {
        let prof = evaluation_profile(forms, &kernel.ring.field, k);
        let mut from_gb: Vec<Monomial> =
            monomials_of_degree(forms.len(), k).into_iter().filter(|m| kernel.initial.contains(m)).collect();
        from_gb.sort();
        out.leading_terms_agree &= from_gb == prof.leading;
        out.degrees.push(k);
        out.kernel_hilbert.push(prof.hilbert);
        out.initial_hilbert.push(kernel.initial.standard_count(k));
    }
    out
}

/// Rank of the evaluation map as a bare matrix, for spot checks.
pub fn evaluation_rank(forms: &[BinaryForm], field: &PrimeField, k: u32) -> usize {
    let n = forms.len();
    let d = forms[0].degree;
    let monos = monomials_of_degree(n, k);
    let mut cache = std::collections::HashMap::new();
    let mut m = Matrix::zeros(monos.len(), (d * k + 1) as usize);
    for (r, mono) in monos.iter().enumerate() {
        let f = power_product(forms, mono, field, &mut cache);
        for (c, &v) in f.coeffs.iter().enumerate() {
            m.set(r, c, v);
        }
    }
    m.rank(field)
}
