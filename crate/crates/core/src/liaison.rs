//! Hilbert polynomials of complete intersections and linkage arithmetic.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::surface::Rational;

/// Polynomial in `t` with rational coefficients, low degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    /// From `(numerator, denominator)` pairs, low degree first.
    pub fn from_fractions(parts: &[(i64, i64)]) -> Self {
        Self::new(parts.iter().map(|&(n, d)| Rational::new(n, d)).collect())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `t + c`
    pub fn linear(c: i64) -> Self {
        Self::new(vec![Rational::from_integer(c), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).copied().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        (!self.coeffs.is_empty()).then(|| self.coeffs.len() - 1)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(-Rational::one()))
    }

    pub fn scale(&self, c: Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| *x * c).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return Self::default();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += *a * *b;
            }
        }
        Self::new(out)
    }

    pub fn eval(&self, t: Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_int(&self, t: i64) -> Rational {
        self.eval(Rational::from_integer(t))
    }

    /// `p(a t + b)`
    pub fn compose_affine(&self, a: i64, b: i64) -> Self {
        let inner = Self::new(vec![Rational::from_integer(b), Rational::from_integer(a)]);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::default(), |acc, c| acc.mul(&inner).add(&Self::constant(*c)))
    }

    /// `binom(t + c, n)` as a polynomial in `t`.
    pub fn binomial(c: i64, n: u32) -> Self {
        let mut p = Self::constant(Rational::one());
        let mut fact = 1i64;
        for k in 0..n as i64 {
            p = p.mul(&Self::linear(c - k));
            fact *= k + 1;
        }
        p.scale(Rational::new(1, fact))
    }
}

fn coeff_text(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let var = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            match (k, mag.is_one()) {
                (0, _) => f.write_str(&coeff_text(&mag))?,
                (_, true) => f.write_str(&var)?,
                _ => write!(f, "{}*{var}", coeff_text(&mag))?,
            }
        }
        Ok(())
    }
}

impl Serialize for RationalPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Hilbert polynomial of a complete intersection of the given degrees in `P^n`, from the Koszul complex.
pub fn koszul_chi(degrees: &[i64], ambient: u32) -> RationalPolynomial {
    let mut total = RationalPolynomial::default();
    for mask in 0u32..(1 << degrees.len()) {
        let shift: i64 = degrees.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, d)| d).sum();
        let term = RationalPolynomial::binomial(ambient as i64 - shift, ambient);
        total = if mask.count_ones() % 2 == 0 { total.add(&term) } else { total.sub(&term) };
    }
    total
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Residual {
    pub chi: RationalPolynomial,
    #[serde(serialize_with = "ser_rational")]
    pub sectional_genus: Rational,
}

fn ser_rational<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&coeff_text(r))
}

/// From `0 -> w_S(-1) -> O_X -> O_S' -> 0` and Serre duality on a surface:
/// `chi_S(s) = (chi_X - chi_S')(1 - s)`; sectional genus `1 - (chi_S(0) - chi_S(-1))`.
pub fn liaison_residual_chi(chi_x: &RationalPolynomial, chi_link: &RationalPolynomial) -> Residual {
    let chi = chi_x.sub(chi_link).compose_affine(-1, 1);
    let sectional_genus = Rational::one() - (chi.eval_int(0) - chi.eval_int(-1));
    Residual { chi, sectional_genus }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CiType {
    /// Three cubics in `P^4`.
    Cubics333,
    /// Two quartics in a `P^3`.
    Quartics44,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiaisonBounds {
    pub ci: CiType,
    pub m: i64,
    pub g: i64,
    pub g_y: i64,
    /// Cap on `deg(C . Y')` from Bezout.
    pub secant_cap: i64,
    /// `deg(C . C')` for the `(4,4)` link.
    pub link_intersection: Option<i64>,
    /// Lower bound on the genus of `C + Y` for the `(3,3,3)` link.
    pub union_genus_min: Option<i64>,
    /// Lower bound on `deg(C . Y)`.
    pub intersection_min: i64,
}

/// Bounds on `deg(C . Y)` where `Y` is the nonreduced part (degree `m`, genus `g_y`) of the residual.
pub fn liaison_bounds(ci: CiType, m: i64, g: i64, g_y: i64) -> LiaisonBounds {
    match ci {
        CiType::Cubics333 => {
            let cap = 48 - 3 * m;
            // 2 g(C+Y) - 2 = 44 + 4m - deg((C+Y).Y') with deg((C+Y).Y') <= cap.
            let twice = 44 + 4 * m - cap + 2;
            let union_min = (twice + 1).div_euclid(2);
            // chi(C . Y) = chi(C) + chi(Y) - chi(C + Y) gives deg(C . Y) = g(C+Y) - g - g_Y + 1.
            let half_bound = Rational::new(7 * m, 2) - Rational::from_integer(g + g_y);
            LiaisonBounds {
                ci,
                m,
                g,
                g_y,
                secant_cap: cap,
                link_intersection: None,
                union_genus_min: Some(union_min),
                intersection_min: half_bound.ceil().to_integer(),
            }
        }
        CiType::Quartics44 => {
            let link = 46 - 2 * g;
            let cap = 20 - 4 * m;
            LiaisonBounds {
                ci,
                m,
                g,
                g_y,
                secant_cap: cap,
                link_intersection: Some(link),
                union_genus_min: None,
                intersection_min: link - cap,
            }
        }
    }
}

/// The three surface cases: `(3,3)` complete intersection minus a cubic scroll, a quadric, a plane.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceLinkCase {
    pub degree: i64,
    pub link: String,
    pub link_chi: RationalPolynomial,
    pub residual: Residual,
    pub printed: RationalPolynomial,
    pub matches_printed: bool,
}

pub fn surface_link_cases() -> Vec<SurfaceLinkCase> {
    let chi_x = koszul_chi(&[3, 3], 4);
    let scroll = RationalPolynomial::from_fractions(&[(1, 1), (5, 2), (3, 2)]);
    let quadric = koszul_chi(&[1, 2], 4);
    let plane = RationalPolynomial::binomial(2, 2);
    let cases = [
        (6, "cubic scroll", scroll, RationalPolynomial::from_fractions(&[(1, 1), (1, 1), (3, 1)])),
        (7, "quadric surface", quadric, RationalPolynomial::from_fractions(&[(2, 1), (-1, 2), (7, 2)])),
        (8, "plane", plane, RationalPolynomial::from_fractions(&[(4, 1), (-3, 1), (4, 1)])),
    ];
    cases
        .into_iter()
        .map(|(degree, link, link_chi, printed)| {
            let residual = liaison_residual_chi(&chi_x, &link_chi);
            let matches_printed = residual.chi == printed;
            SurfaceLinkCase { degree, link: link.to_string(), link_chi, residual, printed, matches_printed }
        })
        .collect()
}
