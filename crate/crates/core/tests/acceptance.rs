//! Acceptance criteria: one PASS/FAIL line each, with wall-clock time against the budget.
//! Failing criteria are reported, not fatal; set GINWB_STRICT_ACCEPTANCE=1 to exit nonzero on any FAIL.

mod common;

use std::time::{Duration, Instant};

use ginwb::audit::{all_reducible_pairs, contact_codim, full_audit, Provenance};
use ginwb::enumeration::{
    enumerate_hyperplane_gins_p3, enumerate_hyperplane_gins_p4, rtb_strata, ConstraintSet, SplittingType,
};
use ginwb::groebner::fixtures::{AUX2_INITIAL, AUX2_SYZYGY_DEGREES, AUX3_SYZYGY_DEGREES};
use ginwb::groebner::{
    common_scalar, image_degree_genus, implicitize, solve_syzygy_constraints, syzygy_splitting_type, Fixture,
    ImplicitOptions, PrimeField, DEFAULT_MODULUS,
};
use ginwb::liaison::{koszul_chi, liaison_bounds, surface_link_cases, CiType, RationalPolynomial};
use ginwb::monomial::MonomialIdeal;
use ginwb::surface::{
    blowup6_solutions, divisor_stats, h0_line_bundle_fn, normal_sheaf_bound, solve_classes, BlowupSystem, Rational,
    SurfaceModel,
};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn hyperplane_gins_p4() -> Outcome {
    let rep = enumerate_hyperplane_gins_p4(11, &ConstraintSet::p4_sections());
    let mut problems = Vec::new();
    if rep.verbatim_matches < 9 {
        problems.push(format!("{} verbatim matches", rep.verbatim_matches));
    }
    if let Some(r) = rep.records.iter().find(|r| r.colength != 11 || r.regularity > 5) {
        problems.push(format!("{} has colength {} and regularity {}", r.ideal, r.colength, r.regularity));
    }
    let expected = vec![8, 9, 10, 10, 10, 11, 11, 11, 12, 13];
    if rep.bound_multiset != expected {
        problems.push(format!("{} records with bounds {:?}, expected {:?}", rep.records.len(), rep.bound_multiset, expected));
    }
    if !rep.discrepancies.iter().any(|d| d.contains("item 2")) {
        problems.push("no note for the item 2 correction".into());
    }
    if !rep.discrepancies.iter().any(|d| d.contains("computed bound")) {
        problems.push("no note for the item 5/6 bound assignment".into());
    }
    if problems.is_empty() {
        Ok(format!("{} records, bounds {:?}", rep.records.len(), rep.bound_multiset))
    } else {
        Err(problems.join("; "))
    }
}

fn hyperplane_gins_p3() -> Outcome {
    let recs = enumerate_hyperplane_gins_p3(11, 6);
    let mut found: Vec<(Vec<u16>, i64)> = recs.iter().map(|r| (r.lambda.clone(), r.cone_genus)).collect();
    found.sort();
    let expected = vec![(vec![5, 3, 2, 1, 0], 14), (vec![5, 4, 2, 0], 15)];
    ensure(found == expected, format!("got {found:?}"))?;
    Ok(format!("{found:?}"))
}

fn rtb() -> Outcome {
    let strata = rtb_strata(11, 4, 0);
    let codim = |p: &[i64]| strata.iter().find(|(t, _)| t.0 == p).map(|(_, c)| *c);
    ensure(codim(&[3, 3, 3, 2]) == Some(0), "(3,3,3,2) is not codimension 0")?;
    let twos: Vec<&SplittingType> = strata.iter().filter(|(_, c)| *c == 2).map(|(t, _)| t).collect();
    ensure(twos.len() == 1 && twos[0].0 == [4, 3, 2, 2], format!("codimension-2 strata {twos:?}"))?;
    let low: Vec<String> = strata
        .iter()
        .filter(|(t, c)| t.0 != [3, 3, 3, 2] && t.0 != [4, 3, 2, 2] && *c < 6)
        .map(|(t, c)| format!("{t} has codimension {c}"))
        .collect();
    ensure(low.is_empty(), low.join(", "))?;
    Ok(format!("{} strata", strata.len()))
}

fn aux1(field: PrimeField) -> Result<u32, String> {
    let forms = Fixture::Aux1.forms(field).map_err(|e| e.to_string())?;
    let k = implicitize(&forms, field, &ImplicitOptions::default()).map_err(|e| e.to_string())?;
    let top = k.max_generator_degree();
    ensure(top <= 4, format!("initial ideal has a generator of degree {top} mod {}", field.modulus()))?;
    Ok(top)
}

fn fixture_aux1() -> Outcome {
    let a = aux1(PrimeField::new(DEFAULT_MODULUS))?;
    let b = aux1(PrimeField::new(31991))?;
    Ok(format!("max generator degree {a} (mod 32003), {b} (mod 31991)"))
}

fn splitting_and_solution(fx: Fixture, field: PrimeField, degrees: &[u32]) -> Result<SplittingType, String> {
    let printed = fx.forms(field).map_err(|e| e.to_string())?;
    let sol = solve_syzygy_constraints(&fx.relations(field).map_err(|e| e.to_string())?, 5, 11, field)
        .map_err(|e| e.to_string())?;
    ensure(sol.rank == 59 && sol.nullity == 1, format!("rank {} nullity {}", sol.rank, sol.nullity))?;
    let rep = sol.representative.ok_or("no solution")?;
    ensure(common_scalar(&printed, &rep, &field).is_some(), "solution is not a multiple of the printed forms")?;
    let (rec, t) = syzygy_splitting_type(&printed, field).map_err(|e| e.to_string())?;
    ensure(rec.syzygy_degrees == degrees, format!("syzygy degrees {:?}", rec.syzygy_degrees))?;
    Ok(t)
}

fn fixture_aux2() -> Outcome {
    let field = PrimeField::new(DEFAULT_MODULUS);
    let t = splitting_and_solution(Fixture::Aux2, field, &AUX2_SYZYGY_DEGREES)?;
    ensure(t.0 == [4, 3, 2, 2], format!("splitting {t}"))?;
    let forms = Fixture::Aux2.forms(field).map_err(|e| e.to_string())?;
    let k = implicitize(&forms, field, &ImplicitOptions::default()).map_err(|e| e.to_string())?;
    let printed = MonomialIdeal::parse(AUX2_INITIAL, 5).map_err(|e| e.to_string())?;
    ensure(k.initial == printed, format!("initial ideal {}", k.initial.borel_string()))?;
    Ok(format!("rank 59, nullity 1, {}, splitting {t}", printed.borel_string()))
}

fn fixture_aux3() -> Outcome {
    let field = PrimeField::new(DEFAULT_MODULUS);
    let t = splitting_and_solution(Fixture::Aux3, field, &AUX3_SYZYGY_DEGREES)?;
    ensure(t.0 == [4, 4, 2, 1], format!("splitting {t}"))?;
    let forms = Fixture::Aux3.forms(field).map_err(|e| e.to_string())?;
    let k = implicitize(&forms, field, &ImplicitOptions::default()).map_err(|e| e.to_string())?;
    let top = k.max_generator_degree();
    ensure(top <= 6, format!("generator of degree {top}"))?;
    ensure(!ginwb::is_borel_fixed(&k.initial), "initial ideal is Borel-fixed")?;
    let (d, g) = image_degree_genus(&k).map_err(|e| e.to_string())?;
    ensure((d, g) == (11, 1), format!("degree {d}, genus {g}"))?;
    Ok(format!("{} generators up to degree {top}, not Borel-fixed, (d,g) = ({d},{g}), splitting {t}", k.initial.generators().len()))
}

fn surfaces() -> Outcome {
    let f1 = SurfaceModel::Hirzebruch(1);
    let c1: Vec<Vec<i64>> = solve_classes(f1, &f1.hyperplane(), 11, &[12], true)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|s| s.class.coeffs)
        .collect();
    ensure(c1 == vec![vec![4, 7]], format!("F1 classes {c1:?}"))?;
    let f3 = SurfaceModel::Hirzebruch(3);
    let c3: Vec<Vec<i64>> = solve_classes(f3, &f3.hyperplane(), 11, &[12], false)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|s| s.class.coeffs)
        .collect();
    ensure(c3.contains(&vec![4, 11]), format!("F3 classes {c3:?}"))?;
    let e = f3.class(&[1, 0]).expect("rank 2");
    let c411 = f3.class(&[4, 11]).expect("rank 2");
    ensure(c411.dot(&e) == -1, "(4,11).e != -1")?;
    ensure(blowup6_solutions(&BlowupSystem::default()).is_empty(), "blown-up plane system has solutions")?;
    for (n, a, b) in [(0u8, 1, 2), (2, 1, 3), (2, 2, 3)] {
        ensure(h0_line_bundle_fn(n, a, b) == 6, format!("h0 on F{n} ({a},{b})"))?;
    }
    let f0 = SurfaceModel::Hirzebruch(0);
    let chi = divisor_stats(&f0.class(&[1, 2]).expect("rank 2"), &f0.hyperplane()).map_err(|e| e.to_string())?.chi;
    ensure(chi == Rational::from_integer(6), "chi(F0 (1,2)) != 6")?;
    let c47 = f1.class(&[4, 7]).expect("rank 2");
    ensure(normal_sheaf_bound(&c47).section_bound == 17, "F1 (4,7) section bound")?;
    for a in 0..=11 {
        let c = f3.class(&[a, 11]).expect("rank 2");
        ensure(normal_sheaf_bound(&c).degree_bound == 20 - a, format!("F3 ({a},11) bound"))?;
    }
    Ok(format!("F1 {c1:?}, F3 {c3:?}"))
}

fn liaison() -> Outcome {
    let chi = koszul_chi(&[3, 3, 3], 4);
    ensure(chi == RationalPolynomial::from_fractions(&[(-54, 1), (27, 1)]), format!("(3,3,3): {chi}"))?;
    let cases = surface_link_cases();
    let want = [
        (6, RationalPolynomial::from_fractions(&[(1, 1), (1, 1), (3, 1)]), 3),
        (7, RationalPolynomial::from_fractions(&[(2, 1), (-1, 2), (7, 2)]), 5),
    ];
    for (deg, poly, genus) in want {
        let c = cases.iter().find(|c| c.degree == deg).ok_or("missing case")?;
        ensure(c.residual.chi == poly && c.residual.sectional_genus == Rational::from_integer(genus), format!("degree {deg}: {}", c.residual.chi))?;
    }
    let bounds: Vec<i64> =
        [(2, 0), (3, 1), (4, 3)].iter().map(|&(m, gy)| liaison_bounds(CiType::Cubics333, m, 2, gy).intersection_min).collect();
    ensure(bounds == [5, 8, 9], format!("contact degree bounds {bounds:?}"))?;
    let contact: Vec<i64> = [(5, 6), (8, 6), (9, 6), (9, 9), (9, 11)]
        .iter()
        .map(|&(g, b)| contact_codim(g, b).map(|x| x.0).unwrap_or(-1))
        .collect();
    ensure(contact == [4, 10, 12, 9, 7], format!("contact codimensions {contact:?}"))?;
    let eight = cases.iter().find(|c| c.degree == 8).ok_or("missing degree 8")?;
    let report = full_audit();
    let flagged = report.discrepancies.iter().any(|d| d.contains("degree-8 residual"));
    ensure(eight.matches_printed || flagged, "degree-8 mismatch not reported")?;
    Ok(format!("degree-8 residual {} (printed {}){}", eight.residual.chi, eight.printed, if flagged { ", flagged" } else { "" }))
}

fn properties() -> Outcome {
    let mut failed = Vec::new();
    for (name, prop) in common::PROPERTIES {
        if let Err(e) = prop(common::CASES) {
            failed.push(format!("{name}: {e}"));
        }
    }
    common::macaulay_fixtures(31991).unwrap_or_else(|e| failed.push(e));
    ensure(failed.is_empty(), failed.join("; "))?;
    Ok(format!("{} suites x {} cases", common::PROPERTIES.len(), common::CASES))
}

fn audit() -> Outcome {
    let report = full_audit();
    let pairs = all_reducible_pairs();
    let max_incidence = pairs.iter().map(|p| p.incidence_bound).max().unwrap_or(0);
    let covered = (1..=14).all(|n| (1..=10).all(|a| pairs.iter().any(|p| p.a == a && p.b == 11 - a && p.n == n)));
    ensure(covered, "reducible pairs do not cover a+b=11, 1 <= n <= 14")?;
    ensure(max_incidence <= 124, format!("incidence {max_incidence}"))?;
    let tagged = report.cases.iter().all(|c| c.contributions.iter().all(|x| matches!(x.kind, Provenance::Computed | Provenance::Assumed)))
        && report.rules.iter().all(|r| matches!(r.kind, Provenance::Computed | Provenance::Assumed));
    ensure(tagged, "untagged contribution")?;
    let open: Vec<String> = report.cases.iter().filter(|c| !c.matches_text).map(|c| format!("{} ({})", c.case, c.verdict)).collect();
    ensure(open.is_empty(), format!("verdicts not reproduced: {}", open.join(", ")))?;
    Ok(format!("{} cases, {} pairs, max incidence {max_incidence}", report.cases.len(), pairs.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, Duration); 10] = [
        ("P4 hyperplane gin enumeration", hyperplane_gins_p4, Duration::from_secs(30)),
        ("P3 staircase enumeration", hyperplane_gins_p3, Duration::from_secs(5)),
        ("RTB strata", rtb, Duration::from_secs(1)),
        ("degree-10 fixture implicitization", fixture_aux1, Duration::from_secs(600)),
        ("syzygy system, kernel and splitting for the (4,3,2,2) fixture", fixture_aux2, Duration::from_secs(900)),
        ("kernel and splitting for the (4,4,2,1) fixture", fixture_aux3, Duration::from_secs(900)),
        ("surface arithmetic", surfaces, Duration::from_secs(1)),
        ("liaison arithmetic", liaison, Duration::from_secs(1)),
        ("property suites", properties, Duration::from_secs(600)),
        ("audit corpus", audit, Duration::from_secs(10)),
    ];
    let mut failures = 0;
    for (k, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(d) if elapsed <= *budget => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; over budget")),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!("{status} criterion {:>2}: {name} [{:.3}s / {}s] {detail}", k + 1, elapsed.as_secs_f64(), budget.as_secs());
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 && std::env::var("GINWB_STRICT_ACCEPTANCE").is_ok_and(|v| v == "1") {
        std::process::exit(1);
    }
}
