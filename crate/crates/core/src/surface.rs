//! Intersection numbers on Hirzebruch surfaces and on the plane blown up in six points.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Serialize, Serializer};
use thiserror::Error;

pub type Rational = Ratio<i64>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurfaceError {
    #[error("unknown surface '{0}'")]
    UnknownSurface(String),
    #[error("bad class literal '{0}'")]
    BadClass(String),
    #[error("class has {got} coefficients but {model} needs {expected}")]
    Rank { model: String, expected: usize, got: usize },
    #[error("classes live on different surfaces ({0} and {1})")]
    ModelMismatch(String, String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SurfaceModel {
    /// Hirzebruch surface `F_n`, basis `(e, f)` with `e^2 = -n`.
    Hirzebruch(u8),
    /// Plane blown up in six points, basis `(l, E_1..E_6)`.
    Bl6P2,
}

impl SurfaceModel {
    pub fn rank(&self) -> usize {
        match self {
            SurfaceModel::Hirzebruch(_) => 2,
            SurfaceModel::Bl6P2 => 7,
        }
    }

    pub fn pairing(&self, a: &[i64], b: &[i64]) -> i64 {
        match self {
            SurfaceModel::Hirzebruch(n) => -(*n as i64) * a[0] * b[0] + a[0] * b[1] + a[1] * b[0],
            SurfaceModel::Bl6P2 => a[0] * b[0] - a[1..].iter().zip(&b[1..]).map(|(x, y)| x * y).sum::<i64>(),
        }
    }

    pub fn canonical(&self) -> DivisorClass {
        let coeffs = match self {
            SurfaceModel::Hirzebruch(n) => vec![-2, -(*n as i64) - 2],
            SurfaceModel::Bl6P2 => vec![-3, 1, 1, 1, 1, 1, 1],
        };
        DivisorClass { model: *self, coeffs }
    }

    /// Hyperplane class of the embedding used for each surface.
    pub fn hyperplane(&self) -> DivisorClass {
        let coeffs = match self {
            SurfaceModel::Hirzebruch(0 | 1) => vec![1, 2],
            SurfaceModel::Hirzebruch(_) => vec![1, 3],
            SurfaceModel::Bl6P2 => vec![3, -1, -1, -1, -1, -1, -1],
        };
        DivisorClass { model: *self, coeffs }
    }

    pub fn class(&self, coeffs: &[i64]) -> Result<DivisorClass, SurfaceError> {
        if coeffs.len() != self.rank() {
            return Err(SurfaceError::Rank { model: self.to_string(), expected: self.rank(), got: coeffs.len() });
        }
        Ok(DivisorClass { model: *self, coeffs: coeffs.to_vec() })
    }
}

impl fmt::Display for SurfaceModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceModel::Hirzebruch(n) => write!(f, "F{n}"),
            SurfaceModel::Bl6P2 => f.write_str("Bl6P2"),
        }
    }
}

impl FromStr for SurfaceModel {
    type Err = SurfaceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("Bl6P2") {
            return Ok(SurfaceModel::Bl6P2);
        }
        let n = t
            .strip_prefix('F')
            .or_else(|| t.strip_prefix("F_"))
            .and_then(|r| r.trim_start_matches('_').parse::<u8>().ok())
            .filter(|&n| n <= 3)
            .ok_or_else(|| SurfaceError::UnknownSurface(s.to_string()))?;
        Ok(SurfaceModel::Hirzebruch(n))
    }
}

impl Serialize for SurfaceModel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DivisorClass {
    pub model: SurfaceModel,
    pub coeffs: Vec<i64>,
}

impl DivisorClass {
    pub fn dot(&self, other: &DivisorClass) -> i64 {
        self.model.pairing(&self.coeffs, &other.coeffs)
    }

    pub fn add(&self, other: &DivisorClass) -> DivisorClass {
        DivisorClass { model: self.model, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, k: i64) -> DivisorClass {
        DivisorClass { model: self.model, coeffs: self.coeffs.iter().map(|a| a * k).collect() }
    }

    /// Reads `F1:(4,7)` or `Bl6P2:(3;-1,-1,0,0,0,0)`.
    pub fn parse(s: &str) -> Result<DivisorClass, SurfaceError> {
        let (model, rest) = s.split_once(':').ok_or_else(|| SurfaceError::BadClass(s.to_string()))?;
        let model: SurfaceModel = model.parse()?;
        let inner = rest
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| SurfaceError::BadClass(s.to_string()))?;
        let coeffs: Result<Vec<i64>, _> =
            inner.split([',', ';']).map(|x| x.trim().parse::<i64>()).collect();
        let coeffs = coeffs.map_err(|_| SurfaceError::BadClass(s.to_string()))?;
        model.class(&coeffs)
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.model {
            SurfaceModel::Hirzebruch(_) => write!(f, "{}:({},{})", self.model, self.coeffs[0], self.coeffs[1]),
            SurfaceModel::Bl6P2 => {
                let rest: Vec<String> = self.coeffs[1..].iter().map(|b| b.to_string()).collect();
                write!(f, "{}:({};{})", self.model, self.coeffs[0], rest.join(","))
            }
        }
    }
}

impl Serialize for DivisorClass {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn ratio_str(r: &Rational) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisorStats {
    pub class: DivisorClass,
    pub degree: i64,
    pub self_intersection: i64,
    /// `(K + C).C`
    pub adjunction: i64,
    /// `None` when `(K + C).C` is odd.
    pub genus: Option<i64>,
    #[serde(serialize_with = "ser_ratio")]
    pub chi: Rational,
}

fn ser_ratio<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&ratio_str(r))
}

/// Degree against `h`, self-intersection, adjunction genus and Riemann-Roch `chi`.
pub fn divisor_stats(c: &DivisorClass, h: &DivisorClass) -> Result<DivisorStats, SurfaceError> {
    if c.model != h.model {
        return Err(SurfaceError::ModelMismatch(c.model.to_string(), h.model.to_string()));
    }
    let k = c.model.canonical();
    let c2 = c.dot(c);
    let kc = k.dot(c);
    let adj = c2 + kc;
    let genus = (adj % 2 == 0).then(|| adj / 2 + 1);
    // Rational surfaces have chi(O) = 1.
    let chi = Rational::from_integer(1) + Rational::new(c2 - kc, 2);
    Ok(DivisorStats { class: c.clone(), degree: c.dot(h), self_intersection: c2, adjunction: adj, genus, chi })
}

/// `h^0(O_{F_n}(a e + b f))` as `sum_{j=0}^{a} max(0, b - j n + 1)`.
pub fn h0_line_bundle_fn(n: u8, a: i64, b: i64) -> i64 {
    (0..=a.max(-1)).map(|j| (b - j * n as i64 + 1).max(0)).sum()
}

/// Classes `a e + b f` with `C.H = degree` and adjunction genus in `genera`.
/// The box is `0 <= a <= degree`, `0 <= b <= (n + 1) degree`.
pub fn solve_classes(
    model: SurfaceModel,
    h: &DivisorClass,
    degree: i64,
    genera: &[i64],
    effective_only: bool,
) -> Result<Vec<DivisorStats>, SurfaceError> {
    let SurfaceModel::Hirzebruch(n) = model else {
        return Err(SurfaceError::UnknownSurface(format!("{model} has no (a,b) class search")));
    };
    let e = model.class(&[1, 0])?;
    let f = model.class(&[0, 1])?;
    let mut out = Vec::new();
    for a in 0..=degree {
        for b in 0..=(n as i64 + 1) * degree {
            let c = model.class(&[a, b])?;
            if effective_only && (c.dot(&e) < 0 || c.dot(&f) < 0) {
                continue;
            }
            let st = divisor_stats(&c, h)?;
            if st.degree == degree && st.genus.is_some_and(|g| genera.contains(&g)) {
                out.push(st);
            }
        }
    }
    Ok(out)
}

/// Which of the conditions on `a l + sum b_i E_i` to impose.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BlowupSystem {
    pub degree: i64,
    /// `a >= 4` and `b_i <= 0`.
    pub meets_exceptional_nonnegatively: bool,
    /// `b_i >= -1`.
    pub smooth: bool,
    /// Search box `0 <= a <= degree`, `|b_i| <= bound`.
    pub bound: i64,
}

impl Default for BlowupSystem {
    fn default() -> Self {
        BlowupSystem { degree: 11, meets_exceptional_nonnegatively: true, smooth: true, bound: 4 }
    }
}

/// Smooth rational curves of the given degree on the cubic surface model: adjunction `= -2`
/// and `3a + sum b_i = degree`, plus the selected side conditions.
pub fn blowup6_solutions(sys: &BlowupSystem) -> Vec<DivisorClass> {
    let model = SurfaceModel::Bl6P2;
    let h = model.hyperplane();
    let k = model.canonical();
    let lo = if sys.smooth { -1 } else { -sys.bound };
    let hi = if sys.meets_exceptional_nonnegatively { 0 } else { sys.bound };
    let a_lo = if sys.meets_exceptional_nonnegatively { 4 } else { 0 };
    let mut out = Vec::new();
    let width = (hi - lo + 1) as usize;
    let total = width.pow(6);
    for a in a_lo..=sys.degree {
        for code in 0..total {
            let mut c = vec![a];
            let mut x = code;
            for _ in 0..6 {
                c.push(lo + (x % width) as i64);
                x /= width;
            }
            let cls = DivisorClass { model, coeffs: c };
            if cls.dot(&h) != sys.degree {
                continue;
            }
            if k.add(&cls).dot(&cls) == -2 {
                out.push(cls);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalSheafBound {
    pub class: DivisorClass,
    /// `-K.C - 2`
    pub degree_bound: i64,
    pub section_bound: i64,
}

pub fn normal_sheaf_bound(c: &DivisorClass) -> NormalSheafBound {
    let d = -c.model.canonical().dot(c) - 2;
    NormalSheafBound { class: c.clone(), degree_bound: d, section_bound: d + 1 }
}

/// One summand of a dimension count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountTerm {
    pub label: String,
    pub value: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyCount {
    pub name: String,
    pub terms: Vec<CountTerm>,
    pub total: i64,
}

impl FamilyCount {
    fn new(name: &str, terms: Vec<(&str, i64)>) -> Self {
        let terms: Vec<CountTerm> = terms.into_iter().map(|(l, v)| CountTerm { label: l.to_string(), value: v }).collect();
        let total = terms.iter().map(|t| t.value).sum();
        FamilyCount { name: name.to_string(), terms, total }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScrollDims {
    pub families: Vec<FamilyCount>,
    /// Curve families on `F_0` from the class search, `a + b + 2` each.
    pub f0_curve_families: Vec<(DivisorClass, i64)>,
    /// Classes the search finds on `F_2` for degree 11, genus at most 2.
    pub f2_degree11_classes: Vec<DivisorClass>,
    pub veronese_allows_degree_11: bool,
}

/// Every curve on the Veronese surface has even degree.
pub fn veronese_degree_possible(degree: i64) -> bool {
    degree % 2 == 0
}

pub fn scroll_family_dims() -> ScrollDims {
    let h0_f0 = h0_line_bundle_fn(0, 1, 2);
    let h0_f2 = h0_line_bundle_fn(2, 1, 3);
    let mut families = vec![
        FamilyCount::new("F0 maps to P5", vec![("6 sections of e+2f", 6 * h0_f0)]),
        FamilyCount::new("F0 projected scrolls", vec![("5 sections of e+2f", 5 * h0_f0), ("automorphisms of F0", -6)]),
        FamilyCount::new("F2 projected scrolls", vec![("5 sections of e+3f", 5 * h0_f2), ("automorphisms of F2", -7)]),
    ];
    let f2_scrolls = families[2].total;
    families.push(FamilyCount::new(
        "curves of class 2e+3f on F2 projected scrolls",
        vec![("F2 projected scrolls", f2_scrolls), ("h0(2e+3f)", h0_line_bundle_fn(2, 2, 3))],
    ));
    let f0 = SurfaceModel::Hirzebruch(0);
    let f0_curve_families = solve_classes(f0, &f0.hyperplane(), 11, &[0, 1, 2], true)
        .unwrap_or_default()
        .into_iter()
        .map(|s| {
            let dim = s.class.coeffs[0] + s.class.coeffs[1] + 2;
            (s.class, dim)
        })
        .collect();
    let f2 = SurfaceModel::Hirzebruch(2);
    let f2_degree11_classes = solve_classes(f2, &f2.hyperplane(), 11, &[0, 1, 2], true)
        .unwrap_or_default()
        .into_iter()
        .map(|s| s.class)
        .collect();
    ScrollDims { families, f0_curve_families, f2_degree11_classes, veronese_allows_degree_11: veronese_degree_possible(11) }
}
