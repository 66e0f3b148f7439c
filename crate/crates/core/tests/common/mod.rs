//! Property checks shared by the proptest suite and the acceptance runner.
#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestError, TestRng, TestRunner};

use ginwb::groebner::{
    common_factor_degree, groebner_basis, implicitize, is_groebner_basis, is_reduced, macaulay_check, BinaryForm,
    Fixture, GbOptions, ImplicitOptions, PrimeField, Ring, SparsePolynomial, TermOrder,
};
use ginwb::liaison::{koszul_chi, liaison_residual_chi, RationalPolynomial};
use ginwb::monomial::{
    binomial, borel_closure, colength, one_dim_degree_genus, point_cohomology, Monomial, MonomialIdeal,
};
use ginwb::rewriting::{applicable_rewrites, cone_genus, rewrite_tally, tree_of, RewriteHistory, RuleFamily};
use ginwb::surface::{divisor_stats, h0_line_bundle_fn, SurfaceModel};

pub const CASES: u32 = 200;
pub const SEED: [u8; 32] = *b"ginwb property suite seed 000001";

pub fn runner(cases: u32) -> TestRunner {
    let config = Config { cases, failure_persistence: None, rng_algorithm: RngAlgorithm::ChaCha, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &SEED))
}

pub fn check<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    runner(cases).run(&strategy, test).map_err(|e| match e {
        TestError::Abort(r) => format!("aborted: {r}"),
        TestError::Fail(r, v) => format!("{r} for input {v:?}"),
    })
}

fn monomial_strategy(nvars: usize, max_degree: u16) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_degree, nvars)
        .prop_filter("bounded degree", move |e| e.iter().sum::<u16>() <= max_degree)
        .prop_map(|e| Monomial::new(&e))
}

fn generator_sets() -> impl Strategy<Value = (usize, Vec<Monomial>)> {
    (2usize..=5).prop_flat_map(|n| (Just(n), prop::collection::vec(monomial_strategy(n, 5), 1..5)))
}

pub fn borel_closure_idempotent(cases: u32) -> Result<(), String> {
    check(cases, generator_sets(), |(n, gens)| {
        let once = borel_closure(&gens, n);
        let twice = borel_closure(once.generators(), n);
        prop_assert_eq!(&once, &twice);
        for g in &gens {
            prop_assert!(once.contains(g), "{} not in its closure", g);
        }
        prop_assert!(ginwb::is_borel_fixed(&once));
        Ok(())
    })
}

/// Walk a random rule sequence, picking `choices[k] mod (number of applicable leaves)` at step `k`.
fn random_history(family: RuleFamily, initial: MonomialIdeal, choices: &[usize]) -> RewriteHistory {
    let mut h = RewriteHistory::start(family, initial);
    for &c in choices {
        let options = applicable_rewrites(&h.result, family);
        if options.is_empty() {
            break;
        }
        let target = options[c % options.len()].0.target;
        h.push(&target).expect("applicable rule");
    }
    h
}

fn lambda_choices() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..64, 1..=13)
}

pub fn nonleaf_count_is_colength(cases: u32) -> Result<(), String> {
    check(cases, lambda_choices(), |choices| {
        let mut h = RewriteHistory::start(RuleFamily::Lambda, MonomialIdeal::unit(3));
        for (step, &c) in choices.iter().enumerate() {
            let options = applicable_rewrites(&h.result, RuleFamily::Lambda);
            prop_assume!(!options.is_empty());
            h.push(&options[c % options.len()].0.target).expect("applicable rule");
            let tree = tree_of(&h.result).map_err(|e| TestCaseError::fail(e.to_string()))?;
            let len = colength(&h.result).map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert_eq!(tree.nonleaf_count() as u64, len);
            prop_assert_eq!(len, step as u64 + 1);
        }
        Ok(())
    })
}

pub fn rewrite_tally_is_h1(cases: u32) -> Result<(), String> {
    check(cases, lambda_choices(), |choices| {
        let h = random_history(RuleFamily::Lambda, MonomialIdeal::unit(3), &choices);
        prop_assume!(!h.result.is_unit());
        for t in 0..=6 {
            let pc = point_cohomology(&h.result, t).map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert_eq!(rewrite_tally(&h, t) as u64, pc.h1, "t = {} for {}", t, h.result);
        }
        Ok(())
    })
}

pub fn printed_sections() -> Vec<MonomialIdeal> {
    let mut out = ginwb::enumeration::printed_p4_gins();
    out[1] = MonomialIdeal::parse(ginwb::enumeration::CORRECTED_ITEM_2, 3).expect("literal");
    out
}

pub fn genus_drops_per_c_rule(cases: u32) -> Result<(), String> {
    let sections = printed_sections();
    let n = sections.len();
    check(cases, (0..n, prop::collection::vec(0usize..64, 0..=8)), |(k, choices)| {
        let section = &sections[k];
        let g0 = cone_genus(section).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let mut h = RewriteHistory::start(RuleFamily::C, section.clone());
        let (d0, start) = one_dim_degree_genus(&h.result).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert_eq!(start, g0);
        for &c in &choices {
            let options = applicable_rewrites(&h.result, RuleFamily::C);
            if options.is_empty() {
                break;
            }
            let (_, before) = one_dim_degree_genus(&h.result).map_err(|e| TestCaseError::fail(e.to_string()))?;
            h.push(&options[c % options.len()].0.target).expect("applicable rule");
            let (d, after) = one_dim_degree_genus(&h.result).map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert_eq!(d, d0);
            prop_assert_eq!(after, before - 1);
            prop_assert!(ginwb::is_borel_fixed(&h.result));
        }
        prop_assert_eq!(ginwb::rewriting::curve_genus(&h).map_err(|e| TestCaseError::fail(e.to_string()))?, g0 - h.len() as i64);
        Ok(())
    })
}

fn field() -> PrimeField {
    PrimeField::default()
}

fn random_forms(count: usize, degree: u32) -> impl Strategy<Value = Vec<Vec<u32>>> {
    let p = field().modulus();
    prop::collection::vec(prop::collection::vec(0..p, degree as usize + 1), count)
}

pub fn forms_of(coeffs: &[Vec<u32>], degree: u32) -> Vec<BinaryForm> {
    coeffs.iter().map(|c| BinaryForm { degree, coeffs: c.clone() }).collect()
}

fn random_map() -> impl Strategy<Value = (u32, Vec<Vec<u32>>)> {
    (2u32..=4).prop_flat_map(|d| (Just(d), random_forms(5, d)))
}

/// Kernel and initial ideal share Hilbert functions through degree 8; every generator vanishes on the map.
pub fn macaulay_and_soundness_random(cases: u32) -> Result<(), String> {
    check(cases, random_map(), |(d, coeffs)| {
        let f = field();
        let forms = forms_of(&coeffs, d);
        prop_assume!(forms.iter().all(|g| !g.is_zero()) && common_factor_degree(&forms, &f) == 0);
        let k = implicitize(&forms, f, &ImplicitOptions::default()).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let mc = macaulay_check(&k, &forms, 8);
        prop_assert!(mc.holds(), "{:?}", mc);
        prop_assert!(k.substitution_sound(&forms));
        prop_assert!(is_reduced(&k.basis));
        Ok(())
    })
}

pub fn macaulay_fixtures(modulus: u32) -> Result<(), String> {
    let f = PrimeField::new(modulus);
    for fx in Fixture::ALL {
        let forms = fx.forms(f).map_err(|e| e.to_string())?;
        let k = implicitize(&forms, f, &ImplicitOptions::default()).map_err(|e| e.to_string())?;
        if !macaulay_check(&k, &forms, 8).holds() {
            return Err(format!("{} fails the Hilbert function comparison mod {modulus}", fx.name()));
        }
        if !k.substitution_sound(&forms) {
            return Err(format!("{} kernel does not vanish on the map mod {modulus}", fx.name()));
        }
    }
    Ok(())
}

fn random_polys() -> impl Strategy<Value = Vec<Vec<(Vec<u16>, u32)>>> {
    let term = (prop::collection::vec(0u16..=3, 3).prop_filter("degree <= 3", |e| e.iter().sum::<u16>() <= 3), 1u32..32003);
    prop::collection::vec(prop::collection::vec(term, 1..=4), 1..=3)
}

fn build(ring: &Ring, shape: &[Vec<(Vec<u16>, u32)>]) -> Vec<SparsePolynomial> {
    shape.iter()
        .map(|terms| {
            terms.iter().fold(ring.zero(), |acc, (e, c)| ring.add(&acc, &ring.monomial(Monomial::new(e), *c)))
        })
        .collect()
}

fn rendered(ring: &Ring, g: &[SparsePolynomial]) -> Vec<String> {
    let mut v: Vec<String> = g.iter().map(|p| ring.render(p)).collect();
    v.sort();
    v
}

/// Output is a reduced Groebner basis and does not depend on the generating set chosen.
pub fn groebner_reduced_and_unique(cases: u32) -> Result<(), String> {
    check(cases, (random_polys(), any::<bool>()), |(shape, elim)| {
        let order = if elim { TermOrder::Elimination(1) } else { TermOrder::Grevlex };
        let ring = Ring::new(&["a", "b", "c"], order, field());
        let gens = build(&ring, &shape);
        let opts = GbOptions::default();
        let gb = groebner_basis(&ring, &gens, &opts);
        prop_assert!(is_reduced(&gb.polys));
        prop_assert!(is_groebner_basis(&ring, &gb.polys, None));
        for p in &gens {
            prop_assert!(gb.normal_form(p).is_zero());
        }
        let mut other: Vec<SparsePolynomial> = gens.iter().rev().cloned().collect();
        if gens.len() >= 2 {
            other.push(ring.add(&gens[0], &ring.mul(&gens[1], &ring.var(2))));
        }
        let again = groebner_basis(&ring, &other, &opts);
        prop_assert_eq!(rendered(&ring, &gb.polys), rendered(&ring, &again.polys));
        let fixed = groebner_basis(&ring, &gb.polys, &opts);
        prop_assert_eq!(rendered(&ring, &gb.polys), rendered(&ring, &fixed.polys));
        Ok(())
    })
}

fn hirzebruch() -> impl Strategy<Value = (u8, i64, i64, i64, i64)> {
    (0u8..=3, -6i64..=12, -6i64..=20, -6i64..=12, -6i64..=20)
}

/// Pairing symmetry and bilinearity, genus integrality, and the closed form for `h^0` in the vanishing range.
pub fn surface_invariants(cases: u32) -> Result<(), String> {
    check(cases, hirzebruch(), |(n, a, b, c, d)| {
        let s = SurfaceModel::Hirzebruch(n);
        let x = s.class(&[a, b]).expect("rank 2");
        let y = s.class(&[c, d]).expect("rank 2");
        prop_assert_eq!(x.dot(&y), y.dot(&x));
        prop_assert_eq!(x.add(&y).dot(&x), x.dot(&x) + y.dot(&x));
        prop_assert_eq!(x.scale(3).dot(&y), 3 * x.dot(&y));
        let st = divisor_stats(&x, &s.hyperplane()).expect("same model");
        prop_assert_eq!(st.genus.is_some(), st.adjunction % 2 == 0);
        // On F_n every adjunction value is even.
        prop_assert!(st.genus.is_some());
        if (0..=4).contains(&a) && b <= 12 && (0..=a).all(|j| b - j * n as i64 + 1 > 0) {
            prop_assert_eq!(ginwb::surface::Rational::from_integer(h0_line_bundle_fn(n, a, b)), st.chi);
        }
        Ok(())
    })
}

fn rational_quadratic() -> impl Strategy<Value = RationalPolynomial> {
    prop::collection::vec((-20i64..=20, 1i64..=4), 3).prop_map(|v| RationalPolynomial::from_fractions(&v))
}

/// Hypersurface Hilbert polynomials and the double-residual identity for `(3,3)` links.
pub fn liaison_invariants(cases: u32) -> Result<(), String> {
    check(cases, (rational_quadratic(), 1i64..=6, 2u32..=5), |(link, d, n)| {
        let chi = koszul_chi(&[d], n);
        for t in 0..=10i64 {
            let top = ginwb::surface::Rational::from_integer(binomial(t + n as i64, n as i64) as i64);
            prop_assert_eq!(chi.eval_int(t), top - RationalPolynomial::binomial(n as i64 - d, n).eval_int(t));
        }
        let chi_x = koszul_chi(&[3, 3], 4);
        let once = liaison_residual_chi(&chi_x, &link);
        let twice = liaison_residual_chi(&chi_x, &once.chi);
        prop_assert_eq!(twice.chi, link);
        Ok(())
    })
}

pub type Property = (&'static str, fn(u32) -> Result<(), String>);

pub const PROPERTIES: [Property; 9] = [
    ("Borel closure idempotence", borel_closure_idempotent),
    ("nonleaf count equals colength", nonleaf_count_is_colength),
    ("genus drops by one per C-rule", genus_drops_per_c_rule),
    ("rewrite tally equals h1 for t <= 6", rewrite_tally_is_h1),
    ("Macaulay equality and soundness on random maps", macaulay_and_soundness_random),
    ("Groebner reducedness and uniqueness", groebner_reduced_and_unique),
    ("surface invariants", surface_invariants),
    ("liaison invariants", liaison_invariants),
    ("Macaulay equality on the fixtures", |_| macaulay_fixtures(ginwb::groebner::DEFAULT_MODULUS)),
];
