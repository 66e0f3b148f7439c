use ginwb::enumeration::{
    enumerate_curve_gins, enumerate_hyperplane_gins_p3, enumerate_hyperplane_gins_p4, gplusi_bound_of,
    key_inference_admissible, make_record, max_i_given, nonproblematic, printed_p4_gins, rtb_strata, with_threads,
    ConstraintSet, SplittingType, CORRECTED_ITEM_2,
};
use ginwb::monomial::{is_borel_fixed, is_saturated, parse_monomial, MonomialIdeal};
use ginwb::rewriting::{cone_genus, RewriteError, RewriteHistory, RuleFamily};

fn ideal(s: &str, n: usize) -> MonomialIdeal {
    MonomialIdeal::parse(s, n).expect("valid literal")
}

fn item_one() -> MonomialIdeal {
    ideal("Borel(x2^4, x1*x2^2)", 3)
}

fn regularity_seven() -> ConstraintSet {
    ConstraintSet { curve_max_regularity: Some(7), ..ConstraintSet::unfiltered_curves() }
}

#[test]
fn bounds_of_printed_items() {
    assert_eq!(gplusi_bound_of(&item_one()), Ok(8));
    assert_eq!(gplusi_bound_of(&ideal("Borel(x2^4, x0*x2)", 3)), Ok(11));
    assert_eq!(gplusi_bound_of(&ideal("Borel(x2^5, x1*x2^2, x0^2)", 3)), Ok(10));
    assert_eq!(gplusi_bound_of(&ideal(CORRECTED_ITEM_2, 3)), Ok(9));
}

#[test]
fn p4_enumeration_records_are_admissible() {
    let report = enumerate_hyperplane_gins_p4(11, &ConstraintSet::p4_sections());
    assert!(!report.records.is_empty());
    for r in &report.records {
        assert_eq!(r.colength, 11);
        assert!(r.regularity <= 5);
        assert!(is_borel_fixed(&r.section));
        assert_eq!(is_saturated(&r.section.cone_extend(1)), Ok(true));
        assert_eq!(r.bound, gplusi_bound_of(&r.section).unwrap());
    }
    let by_ideal = |s: &str| report.records.iter().find(|r| r.section == ideal(s, 3)).map(|r| r.bound);
    assert_eq!(by_ideal("Borel(x2^4, x1*x2^2)"), Some(8));
    assert_eq!(by_ideal("Borel(x2^4, x0*x2)"), Some(11));
    assert_eq!(by_ideal(CORRECTED_ITEM_2), Some(9));
    let mut sorted = report.bound_multiset.clone();
    sorted.sort();
    assert_eq!(report.bound_multiset, sorted);
    assert!(report.discrepancies.iter().any(|d| d.contains("item 2")));
}

#[test]
fn p4_enumeration_is_independent_of_thread_count() {
    let c = ConstraintSet::p4_sections();
    let one = with_threads(1, || enumerate_hyperplane_gins_p4(11, &c));
    let four = with_threads(4, || enumerate_hyperplane_gins_p4(11, &c));
    assert_eq!(serde_json::to_string(&one).unwrap(), serde_json::to_string(&four).unwrap());
}

#[test]
fn printed_item_two_has_colength_twelve() {
    let printed = &printed_p4_gins()[1];
    assert_eq!(ginwb::monomial::colength(printed), Ok(12));
    assert!(!ConstraintSet::p4_sections().admits_section(printed));
}

#[test]
fn p3_staircases() {
    let found = enumerate_hyperplane_gins_p3(11, 6);
    let lambdas: Vec<Vec<u16>> = found.iter().map(|s| s.lambda.clone()).collect();
    assert_eq!(lambdas.len(), 2);
    assert!(lambdas.contains(&vec![5, 3, 2, 1, 0]));
    assert!(lambdas.contains(&vec![5, 4, 2, 0]));
    let mut genera: Vec<i64> = found.iter().map(|s| s.cone_genus).collect();
    genera.sort();
    assert_eq!(genera, [14, 15]);
    assert!(enumerate_hyperplane_gins_p3(11, 4).len() < found.len());
}

#[test]
fn zero_rewrites_give_the_cone() {
    let recs = enumerate_curve_gins(&item_one(), 0..=0, &ConstraintSet::unfiltered_curves()).unwrap();
    assert_eq!(recs.len(), 1);
    assert_eq!(recs[0].curve_ideal, item_one().cone_extend(2));
    assert_eq!(recs[0].g, 8);
    assert!(recs[0].history.is_empty());
}

#[test]
fn budget_beyond_the_genus_is_rejected() {
    assert!(matches!(
        enumerate_curve_gins(&item_one(), 0..=9, &ConstraintSet::unfiltered_curves()),
        Err(RewriteError::BudgetTooLarge { budget: 9, genus: 8 })
    ));
}

#[test]
fn rational_curve_gins_from_item_one() {
    let recs = enumerate_curve_gins(&item_one(), 8..=8, &regularity_seven()).unwrap();
    assert!(recs.iter().all(|r| r.g == 0));
    assert_eq!(recs.iter().map(|r| r.i).max(), Some(3));
}

#[test]
fn displayed_genus_one_gin_is_reached() {
    let target = ideal("Borel(x2^4*x3^3, x2^5*x3, x1*x2^2*x3, x0*x2^2)", 5);
    let recs = enumerate_curve_gins(&item_one(), 0..=7, &ConstraintSet::unfiltered_curves()).unwrap();
    let hit = recs.iter().find(|r| r.curve_ideal == target).expect("displayed ideal");
    assert_eq!(hit.g, 1);
    // h^1(I_C(5)) from the Hilbert function: 11*5 + 1 - g minus the standard count in degree 5.
    let standard = ginwb::monomial::monomial_count(5, 5) - target.inside_count(5);
    assert_eq!(hit.i as u64, 55 + 1 - 1 - standard);
    assert_eq!(hit.i, 1);
}

#[test]
fn key_inference_filter() {
    assert!(key_inference_admissible(&RewriteHistory::start(RuleFamily::C, item_one())));
    let history = RewriteHistory::parse_triples(
        RuleFamily::C,
        item_one(),
        "(C, 3, x2^4)\n(C, 4, x2^4*x3)\n(C, 4, x2^4*x3^2)\n(C, 3, x2^5)\n(C, 4, x2^5*x3)\n(C, 3, x2^6)\n",
    )
    .unwrap();
    assert_eq!(history.result, ideal("Borel(x2^4*x3^3, x1*x2^2)", 5));
    assert!(!key_inference_admissible(&history));
    let mut prefix = history.clone();
    prefix.events.truncate(3);
    assert!(key_inference_admissible(&prefix));
    assert!(history.result.generators().contains(&parse_monomial("x2^4*x3^3", 5).unwrap()));
}

#[test]
fn improved_estimate_on_item_one() {
    let c = ConstraintSet::improved_i_estimate();
    let genus_two = enumerate_curve_gins(&item_one(), 6..=6, &c).unwrap();
    assert_eq!(genus_two.iter().map(|r| r.i).max(), Some(1));
    assert_eq!(max_i_given(&item_one(), &c, 0), Ok(Some(2)));
}

#[test]
fn improved_estimate_over_all_sections() {
    let c = ConstraintSet::improved_i_estimate();
    let report = enumerate_hyperplane_gins_p4(11, &ConstraintSet::p4_sections());
    let best = report.records.iter().filter_map(|r| max_i_given(&r.section, &c, 0).unwrap()).max();
    assert_eq!(best, Some(2));
}

#[test]
fn records_of_printed_items() {
    let r = make_record(&item_one()).unwrap();
    assert_eq!((r.colength, r.regularity, r.cone_genus, r.bound), (11, 4, 8, 8));
    assert_eq!(cone_genus(&item_one()), Ok(8));
}

#[test]
fn splitting_strata() {
    let strata = rtb_strata(11, 4, 0);
    let codim = |v: Vec<i64>| strata.iter().find(|(t, _)| *t == SplittingType::new(v.clone())).map(|s| s.1);
    assert_eq!(strata[0], (SplittingType::new(vec![3, 3, 3, 2]), 0));
    assert_eq!(codim(vec![4, 3, 2, 2]), Some(2));
    assert_eq!(codim(vec![4, 4, 2, 1]), Some(6));
    assert_eq!(strata.iter().filter(|s| s.1 == 2).count(), 1);
    assert!(strata.iter().all(|(t, _)| t.degree() == 11 && t.0.len() == 4));
    assert!(strata.windows(2).all(|w| w[0].1 <= w[1].1));
}

#[test]
fn nonproblematic_clauses() {
    assert!(nonproblematic(0, 2, 3));
    assert!(nonproblematic(5, 3, 0));
    assert!(!nonproblematic(0, 0, 0));
    assert!(!nonproblematic(0, 3, 3));
}
