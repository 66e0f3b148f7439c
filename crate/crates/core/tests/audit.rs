use ginwb::audit::{
    all_reducible_pairs, contact_codim, corpus, full_audit, hyperquadric_codim, hyperquadric_count, reducible_pair_bounds,
    regularity_rule, run_audit, secant_codim, singular_codim, AuditError, Provenance, RegularityHypothesis, Verdict,
};
use ginwb::enumeration::SplittingType;

#[test]
fn secant_rule() {
    assert_eq!(secant_codim(9, true), Ok(12));
    assert_eq!(secant_codim(10, false), Ok(6));
    assert_eq!(secant_codim(4, true), Ok(2));
    assert_eq!(secant_codim(3, true), Err(AuditError::SecantRange(3)));
    assert_eq!(secant_codim(12, false), Err(AuditError::SecantRange(12)));
}

#[test]
fn hyperquadric_rule() {
    let c = hyperquadric_count();
    assert_eq!((c.fixed_quadric, c.quadric_family, c.codimension), (23, 14, 9));
    assert_eq!(hyperquadric_codim(), 9);
}

#[test]
fn contact_rule() {
    let list: Vec<i64> =
        [(5, 6), (8, 6), (9, 6), (9, 9), (9, 11)].iter().map(|&(g, b)| contact_codim(g, b).unwrap().0).collect();
    assert_eq!(list, [4, 10, 12, 9, 7]);
    let (clamped, warning) = contact_codim(2, 9).unwrap();
    assert_eq!(clamped, 0);
    assert!(warning.is_some());
    assert_eq!(contact_codim(0, 6), Err(AuditError::ContactDegree(0)));
}

#[test]
fn regularity_rules() {
    let r = |h: RegularityHypothesis| regularity_rule(&h).unwrap();
    let balanced = r(RegularityHypothesis::Splitting(SplittingType::new(vec![3, 3, 3, 2])));
    assert_eq!(balanced.regularity, 6);
    assert_eq!(balanced.kind, Provenance::Assumed);
    assert_eq!(r(RegularityHypothesis::Splitting(SplittingType::new(vec![4, 3, 2, 2]))).regularity, 7);
    assert_eq!(r(RegularityHypothesis::GenericStratum(SplittingType::new(vec![4, 4, 2, 1]))).regularity, 6);
    assert_eq!(r(RegularityHypothesis::Union { reg_a: 1, reg_b: 5 }).regularity, 6);
    assert_eq!(r(RegularityHypothesis::NoExtremalSecant { degree: 11, span: 4 }).regularity, 8);
    assert_eq!("union:1,5".parse::<RegularityHypothesis>(), Ok(RegularityHypothesis::Union { reg_a: 1, reg_b: 5 }));
    assert!(matches!("castelnuovo:3".parse::<RegularityHypothesis>(), Err(AuditError::UnknownHypothesis(_))));
}

#[test]
fn reducible_pairs() {
    let p = reducible_pair_bounds(5, 6, 1, false).unwrap();
    assert_eq!((p.dimension_cap, p.section_lower_bound, p.incidence_bound), (55, 56, 124));
    let q = reducible_pair_bounds(6, 5, 1, true).unwrap();
    assert_eq!((q.dimension_cap, q.section_lower_bound), (49, 50));
    assert_eq!(reducible_pair_bounds(5, 6, 0, false), Err(AuditError::PairIntersection(0)));
    assert_eq!(reducible_pair_bounds(5, 5, 1, false), Err(AuditError::PairDegree { a: 5, b: 5 }));
    let all = all_reducible_pairs();
    assert!(all.iter().all(|p| p.incidence_bound <= 124 && p.excluded()));
    for a in 1..=10 {
        for n in 1..=14 {
            assert!(all.iter().any(|p| p.a == a && p.n == n && !p.planar_quintic));
        }
    }
}

#[test]
fn singular_rule() {
    assert_eq!(singular_codim(1), 2);
    assert_eq!(singular_codim(6), 12);
    assert_eq!(singular_codim(9), 12);
    assert_eq!(singular_codim(0), 0);
}

#[test]
fn empty_case_set() {
    let r = run_audit(&[]);
    assert!(r.cases.is_empty());
    assert!(r.discrepancies.is_empty());
}

#[test]
fn triple_line_contact_case() {
    let r = run_audit(&corpus());
    let c = r.cases.iter().find(|c| c.case == "hypercubic contact, m=3, triple line").unwrap();
    assert_eq!(c.codimension, 10);
    assert!(c.g + c.i <= 4);
    assert_eq!(c.verdict, Verdict::Codimension);
}

#[test]
fn high_genus_cases_use_the_genus_clause() {
    let r = run_audit(&corpus());
    let high: Vec<_> = r.cases.iter().filter(|c| c.case.starts_with("case 1: 8-regular, g=")).collect();
    assert!(!high.is_empty());
    assert!(high.iter().all(|c| c.g >= 5 && c.verdict == Verdict::LowGenus));
}

#[test]
fn every_contribution_carries_provenance() {
    let report = full_audit();
    assert!(!report.cases.is_empty());
    let json = report.cases_json();
    for case in json.as_array().unwrap() {
        for c in case["contributions"].as_array().unwrap() {
            assert!(matches!(c["kind"].as_str(), Some("computed" | "assumed")));
        }
    }
    for c in &report.cases {
        assert_eq!(c.codimension, c.contributions.iter().map(|x| x.value).sum::<i64>());
    }
}

#[test]
fn audit_is_deterministic() {
    let a = serde_json::to_string(&full_audit()).unwrap();
    let b = serde_json::to_string(&full_audit()).unwrap();
    assert_eq!(a, b);
}
