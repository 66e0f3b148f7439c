//! Binary forms in `t, u` as dense coefficient vectors.

use serde::Serialize;

use super::field::PrimeField;
use super::poly::{Ring, SparsePolynomial, TermOrder};
use super::GroebnerError;
use crate::monomial::Monomial;

/// `coeffs[j]` is the coefficient of `t^(d-j) * u^j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BinaryForm {
    pub degree: u32,
    pub coeffs: Vec<u32>,
}

pub fn tu_ring(field: PrimeField) -> Ring {
    Ring::new(&["t", "u"], TermOrder::Grevlex, field)
}

impl BinaryForm {
    pub fn zero(degree: u32) -> Self {
        BinaryForm { degree, coeffs: vec![0; degree as usize + 1] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Reads `t^9*u^2 - 3*t*u^10` or `t^9u^2-3tu^10`; every term must have the same degree.
    pub fn parse(s: &str, field: PrimeField) -> Result<Self, GroebnerError> {
        let ring = tu_ring(field);
        let p = ring.parse(s).map_err(GroebnerError::Parse)?;
        Self::from_poly(&p).ok_or_else(|| GroebnerError::NotHomogeneous(s.trim().to_string()))
    }

    pub fn from_poly(p: &SparsePolynomial) -> Option<Self> {
        let d = p.lead()?.mono.degree();
        let mut f = BinaryForm::zero(d);
        for t in &p.terms {
            if t.mono.degree() != d {
                return None;
            }
            f.coeffs[t.mono.exp(1) as usize] = t.coeff;
        }
        Some(f)
    }

    /// As a polynomial in a ring whose first two variables are `t, u`.
    pub fn to_poly(&self, ring: &Ring) -> SparsePolynomial {
        let n = ring.nvars();
        ring.from_terms(self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(j, &c)| {
            let mut e = vec![0u16; n];
            e[0] = (self.degree as usize - j) as u16;
            e[1] = j as u16;
            (Monomial::new(&e), c as i64)
        }))
    }

    pub fn render(&self, field: PrimeField) -> String {
        let ring = tu_ring(field);
        ring.render(&self.to_poly(&ring))
    }

    /// Product of two forms.
    pub fn mul(&self, other: &BinaryForm, field: &PrimeField) -> BinaryForm {
        let mut out = BinaryForm::zero(self.degree + other.degree);
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out.coeffs[i + j] = field.add(out.coeffs[i + j], field.mul(a, b));
            }
        }
        out
    }

    /// Same form up to a nonzero scalar.
    pub fn proportional(&self, other: &BinaryForm, field: &PrimeField) -> bool {
        if self.degree != other.degree {
            return false;
        }
        let Some(k) = self.coeffs.iter().position(|&c| c != 0) else { return other.is_zero() };
        if other.coeffs[k] == 0 {
            return false;
        }
        let r = field.mul(other.coeffs[k], field.inv(self.coeffs[k]));
        self.coeffs.iter().zip(&other.coeffs).all(|(&a, &b)| field.mul(a, r) == b)
    }

    /// Univariate polynomial in `s = t/u`, low degree first.
    fn dehomogenize(&self) -> Vec<u32> {
        let d = self.degree as usize;
        (0..=d).map(|k| self.coeffs[d - k]).collect()
    }
}

fn trim(p: &mut Vec<u32>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

fn poly_rem(a: &[u32], b: &[u32], f: &PrimeField) -> Vec<u32> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let inv = f.inv(b[db]);
    while r.len() > db {
        let top = r.len() - 1;
        let q = f.mul(r[top], inv);
        for (k, &bk) in b.iter().enumerate() {
            let idx = top - db + k;
            r[idx] = f.sub(r[idx], f.mul(q, bk));
        }
        trim(&mut r);
    }
    r
}

/// Degree of the gcd of the dehomogenized forms (as polynomials in `t/u`).
fn univariate_gcd_degree(forms: &[BinaryForm], f: &PrimeField) -> usize {
    let mut g: Vec<u32> = Vec::new();
    for form in forms {
        let mut p = form.dehomogenize();
        trim(&mut p);
        if p.is_empty() {
            continue;
        }
        if g.is_empty() {
            g = p;
            continue;
        }
        let (mut a, mut b) = (g, p);
        while !b.is_empty() {
            let r = poly_rem(&a, &b, f);
            a = b;
            b = r;
        }
        g = a;
    }
    g.len().saturating_sub(1)
}

/// Degree of the common factor of the forms; zero means the map is base-point free.
pub fn common_factor_degree(forms: &[BinaryForm], field: &PrimeField) -> usize {
    // Powers of u are invisible after dehomogenizing; count them separately.
    let u_power = forms
        .iter()
        .filter(|f| !f.is_zero())
        .map(|f| f.coeffs.iter().position(|&c| c != 0).unwrap_or(0))
        .min()
        .unwrap_or(0);
    u_power + univariate_gcd_degree(forms, field)
}

/// One form per line; blank lines and `#` comments are skipped.
pub fn parse_param_file(text: &str, field: PrimeField) -> Result<Vec<BinaryForm>, GroebnerError> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        // Accept an optional `name =` prefix.
        let body = match line.split_once('=') {
            Some((_, rhs)) => rhs.trim(),
            None => line,
        };
        // A zero line takes the degree of the other forms.
        let p = tu_ring(field).parse(body).map_err(GroebnerError::Parse)?;
        if p.is_zero() {
            out.push(None);
        } else {
            out.push(Some(BinaryForm::from_poly(&p).ok_or_else(|| GroebnerError::NotHomogeneous(body.to_string()))?));
        }
    }
    let d = out.iter().flatten().map(|f| f.degree).next().ok_or(GroebnerError::NoForms)?;
    let out: Vec<BinaryForm> = out.into_iter().map(|f| f.unwrap_or_else(|| BinaryForm::zero(d))).collect();
    check_equal_degrees(&out)?;
    Ok(out)
}

pub fn check_equal_degrees(forms: &[BinaryForm]) -> Result<u32, GroebnerError> {
    let d = forms.first().map(|f| f.degree).ok_or(GroebnerError::NoForms)?;
    if forms.iter().any(|f| f.degree != d) {
        return Err(GroebnerError::DegreeMismatch(forms.iter().map(|f| f.degree).collect()));
    }
    Ok(d)
}
