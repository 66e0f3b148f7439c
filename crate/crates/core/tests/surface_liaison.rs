use ginwb::liaison::{koszul_chi, liaison_bounds, liaison_residual_chi, surface_link_cases, CiType, RationalPolynomial};
use ginwb::surface::{
    blowup6_solutions, divisor_stats, h0_line_bundle_fn, normal_sheaf_bound, scroll_family_dims, solve_classes,
    veronese_degree_possible, BlowupSystem, DivisorClass, Rational, SurfaceModel,
};

const F0: SurfaceModel = SurfaceModel::Hirzebruch(0);
const F1: SurfaceModel = SurfaceModel::Hirzebruch(1);
const F2: SurfaceModel = SurfaceModel::Hirzebruch(2);
const F3: SurfaceModel = SurfaceModel::Hirzebruch(3);

fn poly(parts: &[(i64, i64)]) -> RationalPolynomial {
    RationalPolynomial::from_fractions(parts)
}

fn ab(stats: &[ginwb::surface::DivisorStats]) -> Vec<(i64, i64)> {
    stats.iter().map(|s| (s.class.coeffs[0], s.class.coeffs[1])).collect()
}

#[test]
fn pairings_and_canonical_classes() {
    let e = F2.class(&[1, 0]).unwrap();
    let f = F2.class(&[0, 1]).unwrap();
    assert_eq!((e.dot(&e), e.dot(&f), f.dot(&f)), (-2, 1, 0));
    assert_eq!(F3.canonical().coeffs, [-2, -5]);
    let k = SurfaceModel::Bl6P2.canonical();
    assert_eq!(k.dot(&k), 3);
    assert!(F1.class(&[1, 2, 3]).is_err());
}

#[test]
fn class_literals() {
    let c = DivisorClass::parse("F1:(4,7)").unwrap();
    assert_eq!(c, F1.class(&[4, 7]).unwrap());
    assert_eq!(c.to_string(), "F1:(4,7)");
    let b = DivisorClass::parse("Bl6P2:(3;-1,-1,0,0,0,0)").unwrap();
    assert_eq!(b.coeffs, [3, -1, -1, 0, 0, 0, 0]);
    assert!(DivisorClass::parse("F9:(1,1)").is_err());
    assert!(DivisorClass::parse("F1:4,7").is_err());
}

#[test]
fn divisor_statistics() {
    let s = divisor_stats(&F1.class(&[4, 7]).unwrap(), &F1.hyperplane()).unwrap();
    assert_eq!((s.degree, s.genus), (11, Some(12)));
    let c = F3.class(&[4, 11]).unwrap();
    assert_eq!(c.dot(&F3.class(&[1, 0]).unwrap()), -1);
    let chi = divisor_stats(&F0.class(&[1, 2]).unwrap(), &F0.hyperplane()).unwrap().chi;
    assert_eq!(chi, Rational::from_integer(6));
    assert!(divisor_stats(&c, &F1.hyperplane()).is_err());
}

#[test]
fn closed_form_sections() {
    assert_eq!(h0_line_bundle_fn(0, 1, 2), 6);
    assert_eq!(h0_line_bundle_fn(2, 1, 3), 6);
    assert_eq!(h0_line_bundle_fn(2, 2, 3), 6);
    assert_eq!(h0_line_bundle_fn(1, 0, 0), 1);
}

#[test]
fn class_searches() {
    assert_eq!(ab(&solve_classes(F1, &F1.hyperplane(), 11, &[12], true).unwrap()), [(4, 7)]);
    let f3 = solve_classes(F3, &F3.hyperplane(), 11, &[12], false).unwrap();
    assert_eq!(ab(&f3), [(4, 11)]);
    assert!(solve_classes(F3, &F3.hyperplane(), 11, &[12], true).unwrap().is_empty());
    let f0 = solve_classes(F0, &F0.hyperplane(), 11, &[0, 1, 2], true).unwrap();
    assert_eq!(ab(&f0), [(1, 9), (5, 1)]);
    assert!(f0.iter().all(|s| s.genus == Some(0)));
    assert!(solve_classes(SurfaceModel::Bl6P2, &SurfaceModel::Bl6P2.hyperplane(), 11, &[0], true).is_err());
}

#[test]
fn blown_up_plane_systems() {
    assert!(blowup6_solutions(&BlowupSystem::default()).is_empty());
    let relaxed = blowup6_solutions(&BlowupSystem { meets_exceptional_nonnegatively: false, ..BlowupSystem::default() });
    assert!(!relaxed.is_empty());
    let singular = blowup6_solutions(&BlowupSystem { smooth: false, ..BlowupSystem::default() });
    assert!(singular.iter().all(|c| c.coeffs[1..].iter().any(|&b| b <= -2)));
}

#[test]
fn normal_sheaf_bounds() {
    let b = normal_sheaf_bound(&F1.class(&[4, 7]).unwrap());
    assert_eq!((b.degree_bound, b.section_bound), (16, 17));
    for a in 0..=6 {
        assert_eq!(normal_sheaf_bound(&F3.class(&[a, 11]).unwrap()).degree_bound, 20 - a);
    }
    let k = F1.canonical();
    assert_eq!(normal_sheaf_bound(&k).degree_bound, -k.dot(&k) - 2);
}

#[test]
fn scroll_families() {
    let dims = scroll_family_dims();
    let total = |name: &str| dims.families.iter().find(|f| f.name == name).map(|f| f.total);
    assert_eq!(total("F0 maps to P5"), Some(36));
    assert_eq!(total("F0 projected scrolls"), Some(24));
    assert_eq!(total("F2 projected scrolls"), Some(23));
    assert_eq!(total("curves of class 2e+3f on F2 projected scrolls"), Some(29));
    assert!(dims.families.iter().all(|f| f.total == f.terms.iter().map(|t| t.value).sum::<i64>()));
    assert!(!dims.veronese_allows_degree_11);
    assert!(veronese_degree_possible(10));
}

#[test]
fn koszul_polynomials() {
    assert_eq!(koszul_chi(&[3, 3, 3], 4), poly(&[(-54, 1), (27, 1)]));
    assert_eq!(koszul_chi(&[1, 2], 4), poly(&[(1, 1), (2, 1), (1, 1)]));
    assert_eq!(koszul_chi(&[3, 3], 4), poly(&[(6, 1), (-9, 2), (9, 2)]));
    assert_eq!(koszul_chi(&[3, 3], 4).to_string(), "9/2*t^2 - 9/2*t + 6");
    for t in 0..10 {
        let p = koszul_chi(&[4], 3).eval_int(t);
        let direct = RationalPolynomial::binomial(3, 3).eval_int(t) - RationalPolynomial::binomial(-1, 3).eval_int(t);
        assert_eq!(p, direct);
    }
}

#[test]
fn residual_surfaces() {
    let cases = surface_link_cases();
    let by_degree = |d: i64| cases.iter().find(|c| c.degree == d).unwrap();
    let six = by_degree(6);
    assert_eq!(six.residual.chi, poly(&[(1, 1), (1, 1), (3, 1)]));
    assert_eq!(six.residual.sectional_genus, Rational::from_integer(3));
    let seven = by_degree(7);
    assert_eq!(seven.residual.chi, poly(&[(2, 1), (-1, 2), (7, 2)]));
    assert_eq!(seven.residual.sectional_genus, Rational::from_integer(5));
    let eight = by_degree(8);
    assert_eq!(eight.matches_printed, eight.residual.chi == poly(&[(4, 1), (-3, 1), (4, 1)]));
    assert_eq!(eight.residual.chi.coeff(2), Rational::from_integer(4));
}

#[test]
fn residual_substitution_is_an_involution() {
    let x = koszul_chi(&[3, 3], 4);
    let link = koszul_chi(&[1, 2], 4);
    let once = liaison_residual_chi(&x, &link).chi;
    let twice = liaison_residual_chi(&once, &RationalPolynomial::default()).chi;
    assert_eq!(twice, x.sub(&link));
}

#[test]
fn linkage_bounds() {
    assert_eq!(liaison_bounds(CiType::Cubics333, 2, 2, 0).intersection_min, 5);
    assert_eq!(liaison_bounds(CiType::Cubics333, 3, 2, 1).intersection_min, 8);
    assert_eq!(liaison_bounds(CiType::Cubics333, 4, 2, 3).intersection_min, 9);
    assert_eq!(liaison_bounds(CiType::Cubics333, 4, 2, 3).secant_cap, 36);
    for m in 1..=4 {
        for g in 0..=2 {
            let b = liaison_bounds(CiType::Quartics44, m, g, 0);
            assert_eq!(b.link_intersection, Some(46 - 2 * g));
            assert_eq!(b.secant_cap, 20 - 4 * m);
            assert_eq!(b.intersection_min, 26 + 4 * m - 2 * g);
        }
    }
}
