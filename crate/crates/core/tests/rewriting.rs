use ginwb::monomial::{colength, one_dim_degree_genus, point_cohomology, Monomial, MonomialIdeal};
use ginwb::rewriting::{
    apply_c, apply_lambda, cone_genus, curve_genus, ideal_of, rewrite_tally, tree_of, RewriteError, RewriteHistory,
    RuleFamily, StaircaseP3,
};

fn ideal(s: &str, n: usize) -> MonomialIdeal {
    MonomialIdeal::parse(s, n).expect("valid literal")
}

fn mono(s: &str, n: usize) -> Monomial {
    ginwb::monomial::parse_monomial(s, n).expect("valid monomial")
}

#[test]
fn trees_of_small_ideals() {
    let t = tree_of(&ideal("x0, x1, x2", 3)).unwrap();
    assert_eq!(t.nonleaf_count(), 1);
    assert_eq!(t.leaves().len(), 3);
    assert_eq!(tree_of(&ideal("Borel(x2^4, x1*x2^2)", 3)).unwrap().nonleaf_count(), 11);
    assert_eq!(tree_of(&ideal("x1^2", 3)), Err(RewriteError::NotBorel));
}

#[test]
fn trees_round_trip_on_the_printed_list() {
    for i in ginwb::enumeration::printed_p4_gins() {
        let t = tree_of(&i).unwrap();
        assert!(t.labels_monotone());
        assert_eq!(ideal_of(&t), i);
        assert_eq!(t.nonleaf_count() as u64, colength(&i).unwrap());
    }
}

#[test]
fn lambda_rules() {
    let empty = tree_of(&MonomialIdeal::unit(3)).unwrap();
    let first = apply_lambda(&empty, &Monomial::one(3), 4).unwrap();
    assert_eq!(ideal_of(&first), ideal("x0, x1, x2", 3));
    let next = apply_lambda(&first, &mono("x2", 3), 3).unwrap();
    assert_eq!(ideal_of(&next), ideal("x0, x1, x2^2", 3));
    assert_eq!(next.nonleaf_count(), 2);
    assert!(matches!(apply_lambda(&first, &mono("x0", 3), 1), Err(RewriteError::BreaksBorel(_))));
    let cubic = tree_of(&ideal("Borel(x2^3)", 3)).unwrap();
    let grown = apply_lambda(&cubic, &mono("x2^3", 3), 3).unwrap();
    assert!(ideal_of(&grown).generators().contains(&mono("x2^4", 3)));
    assert!(matches!(apply_lambda(&first, &mono("x0", 3), 3), Err(RewriteError::PatternMismatch { .. })));
}

#[test]
fn c_rules() {
    let cone = ideal("Borel(x2^4, x1*x2^2)", 3).cone_extend(2);
    let t = tree_of(&cone).unwrap();
    let next = ideal_of(&apply_c(&t, &mono("x2^4", 5), 3).unwrap());
    assert!(next.generators().contains(&mono("x2^5", 5)));
    assert!(next.generators().contains(&mono("x2^4*x3", 5)));
    assert_eq!(one_dim_degree_genus(&next).unwrap().1, 7);

    let h = RewriteHistory::parse_triples(
        RuleFamily::C,
        ideal("Borel(x2^4, x1*x2^2)", 3),
        "(C, 3, x2^4)\n(C, 4, x2^4*x3)\n",
    )
    .unwrap();
    assert!(h.result.generators().contains(&mono("x2^4*x3^2", 5)));
    let again = apply_c(&tree_of(&h.result).unwrap(), &mono("x2^4*x3^2", 5), 4).unwrap();
    assert!(ideal_of(&again).generators().contains(&mono("x2^4*x3^3", 5)));
}

#[test]
fn tallies() {
    let mut h = RewriteHistory::start(RuleFamily::Lambda, MonomialIdeal::unit(3));
    h.push(&Monomial::one(3)).unwrap();
    let target = ideal("Borel(x2^4, x1*x2^2)", 3);
    while h.result != target {
        let next = ginwb::rewriting::applicable_rewrites(&h.result, RuleFamily::Lambda)
            .into_iter()
            .find(|(_, i)| target.generators().iter().all(|g| !i.contains(g) || h.result.contains(g)) || i.generators().iter().all(|g| target.contains(g)))
            .expect("path to the target");
        h.push(&next.0.target).unwrap();
    }
    assert_eq!(rewrite_tally(&h, 2), 1);
    assert_eq!(point_cohomology(&h.result, 2).unwrap().h1, 1);

    let mut c = RewriteHistory::start(RuleFamily::C, target.clone());
    for _ in 0..6 {
        let low = ginwb::rewriting::applicable_rewrites(&c.result, RuleFamily::C)
            .into_iter()
            .find(|(e, _)| e.target.degree() < 5)
            .expect("low-degree leaf");
        c.push(&low.0.target).unwrap();
    }
    assert_eq!(rewrite_tally(&c, 5), 0);
}

#[test]
fn curve_genus_counts_rewrites() {
    let section = ideal("Borel(x2^4, x1*x2^2)", 3);
    assert_eq!(cone_genus(&section), Ok(8));
    let mut h = RewriteHistory::start(RuleFamily::C, section);
    assert_eq!(curve_genus(&h), Ok(8));
    for _ in 0..8 {
        let (e, _) = ginwb::rewriting::applicable_rewrites(&h.result, RuleFamily::C).remove(0);
        h.push(&e.target).unwrap();
    }
    assert_eq!(curve_genus(&h), Ok(0));
    assert_eq!(one_dim_degree_genus(&h.result).unwrap().1, 0);
    assert_eq!(h.replay().unwrap(), h.result);
    assert_eq!(cone_genus(&ideal(ginwb::enumeration::CORRECTED_ITEM_2, 3)), Ok(9));
}

#[test]
fn history_serialization_round_trips() {
    let section = ideal("Borel(x2^4, x1*x2^2)", 3);
    let mut h = RewriteHistory::start(RuleFamily::C, section.clone());
    for _ in 0..3 {
        let (e, _) = ginwb::rewriting::applicable_rewrites(&h.result, RuleFamily::C).pop().unwrap();
        h.push(&e.target).unwrap();
    }
    let text = h.serialize_triples();
    assert_eq!(RewriteHistory::parse_triples(RuleFamily::C, section, &text).unwrap(), h);
}

#[test]
fn staircases() {
    let a = StaircaseP3::new(vec![5, 3, 2, 1, 0]).ops().unwrap();
    assert_eq!((a.degree, a.gp_admissible, a.cone_genus), (11, true, 14));
    assert_eq!(a.ideal, ideal("Borel(x1^5, x0*x1^3)", 2));
    let b = StaircaseP3::new(vec![5, 4, 2, 0]).ops().unwrap();
    assert_eq!((b.degree, b.gp_admissible, b.cone_genus), (11, true, 15));
    assert!(!StaircaseP3::new(vec![5, 2, 1, 0]).gp_admissible());
}
