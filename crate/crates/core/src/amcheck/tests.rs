use super::*;
use crate::permcore::Permutation;

fn analysis(spec: &str) -> Analysis {
    Analysis::from_spec(spec, Limits::default()).unwrap()
}

fn verdicts(a: &Analysis) -> [bool; 5] {
    [
        a.is_monomial().unwrap().verdict,
        a.is_quasi_monomial().unwrap().verdict,
        a.is_almost_monomial().unwrap().verdict,
        a.is_normally_am().unwrap().verdict,
        a.is_subnormally_am().unwrap().verdict,
    ]
}

#[test]
fn abelian_groups_are_everything() {
    for spec in ["C2", "C6", "C2xC2"] {
        assert_eq!(verdicts(&analysis(spec)), [true; 5], "{spec}");
    }
}

#[test]
fn trivial_group() {
    let a = analysis("C1");
    assert_eq!(verdicts(&a), [true; 5]);
    let lt = a.lt_crosscheck().unwrap();
    assert!(lt.am && lt.consistent());
}

#[test]
fn s4_verdicts_and_profile() {
    let a = analysis("S4");
    let [mono, _, am, _, _] = verdicts(&a);
    assert!(mono && am);
    let p = a.lt_profile().unwrap();
    assert_eq!(p.l[5], 1);
    assert_eq!(p.l[4], 5);
    assert!(a.lt_crosscheck().unwrap().consistent());
}

#[test]
fn sl2_3_is_am_but_not_monomial() {
    let a = analysis("SL2_3");
    let [mono, _, am, _, sam] = verdicts(&a);
    assert!(!mono && am && !sam);
    let rep = a.is_monomial().unwrap();
    assert!(rep.certificates.is_empty() && rep.uncovered_pair.is_some());
}

#[test]
fn gl2_3_is_not_am() {
    let a = analysis("GL2_3");
    let rep = a.is_almost_monomial().unwrap();
    assert!(!rep.verdict);
    let [j, k] = rep.uncovered_pair.unwrap();
    assert_ne!(j, k);
    let lt = a.lt_crosscheck().unwrap();
    assert!(!lt.am && lt.consistent());
}

#[test]
fn uncovered_pair_really_is_uncovered() {
    let a = analysis("GL2_3");
    let [j, k] = a.is_almost_monomial().unwrap().uncovered_pair.unwrap();
    for c in 0..a.lattice().classes().len() {
        let li = a.linear_inductions(c).unwrap();
        for d in &li.decompositions {
            assert!(!(d[j] > 0 && d[k] == 0));
        }
    }
}

#[test]
fn relative_boundaries() {
    let a = analysis("S4");
    let g = a.group();
    let trivial = BitSet::from_indices(g.order(), [0]);
    let whole = g.all_elements();
    let rel1 = a.is_relative_am(&trivial).unwrap();
    assert_eq!(rel1.verdict, a.is_almost_monomial().unwrap().verdict);
    assert!(a.is_relative_am(&whole).unwrap().verdict);
    let v4 = g.derived_set(&g.derived_set(&whole));
    let rel = a.is_relative_am(&v4).unwrap();
    assert!(rel.verdict);
    assert_eq!(rel.normal_subgroup.as_ref().unwrap().order, 4);
    let c2 = g.closure(&[g.index_of(&Permutation::parse_cycles(4, "(1,2)").unwrap()).unwrap()]);
    assert!(matches!(a.is_relative_am(&c2), Err(Error::NotNormal)));
}

#[test]
fn normal_index_selector() {
    let a = analysis("S4");
    let normal_classes: Vec<usize> = (0..a.lattice().classes().len())
        .filter(|&c| a.lattice().class(c).size() == 1)
        .collect();
    assert_eq!(normal_classes.len(), 4);
    for c in normal_classes {
        assert!(a.normal_subgroup_by_class(c).is_ok());
    }
    let non_normal = (0..a.lattice().classes().len())
        .find(|&c| a.lattice().class(c).size() > 1)
        .unwrap();
    assert!(matches!(a.normal_subgroup_by_class(non_normal), Err(Error::NotNormal)));
    assert!(a.normal_subgroup_by_class(99).is_err());
}

#[test]
fn reports_do_not_depend_on_threads() {
    let one = analysis("S4");
    let many = analysis("S4").with_threads(4).unwrap();
    for p in [Property::Am, Property::Monomial, Property::Sam, Property::QuasiMonomial] {
        assert_eq!(
            one.check(p).unwrap().without_timing(),
            many.check(p).unwrap().without_timing()
        );
    }
}

#[test]
fn certificates_round_trip_and_reject_tampering() {
    let a = analysis("S4");
    for p in [Property::Am, Property::Monomial, Property::QuasiMonomial, Property::Nam] {
        let rep = a.check(p).unwrap();
        let out = certify(a.group(), &rep, Limits::default()).unwrap();
        assert_eq!(out.valid, rep.verdict, "{p}: {:?}", out.problems);
    }
    let rep = a.is_almost_monomial().unwrap();
    let mut dropped = rep.clone();
    dropped.certificates.pop();
    let out = certify(a.group(), &dropped, Limits::default()).unwrap();
    assert!(!out.valid && out.problems.iter().any(|m| m.contains("incomplete coverage")));

    let mut tampered = rep.clone();
    let lin = a.linear_inductions(tampered.certificates[0].subgroup.class_id).unwrap();
    let c = &mut tampered.certificates[0].character;
    c.index = (c.index + 1) % lin.characters.len().max(2);
    let out = certify(a.group(), &tampered, Limits::default()).unwrap();
    assert!(!out.valid);

    let s3 = analysis("S3");
    assert!(certify(s3.group(), &rep, Limits::default()).is_err());
}

#[test]
fn relative_certificates() {
    let a = analysis("S4");
    let g = a.group();
    let v4 = g.derived_set(&g.derived_set(&g.all_elements()));
    let rep = a.is_relative_am(&v4).unwrap();
    let out = certify(g, &rep, Limits::default()).unwrap();
    assert!(out.valid, "{:?}", out.problems);
}

#[test]
fn descent_conditions_for_whole_group() {
    let a = analysis("S4");
    let d = a.descent_conditions(&a.group().all_elements()).unwrap();
    assert!(d.restricts_irreducibly);
    let a4 = a.group().derived_set(&a.group().all_elements());
    let d = a.descent_conditions(&a4).unwrap();
    // The degree-2 character splits on A4.
    assert!(!d.restricts_irreducibly);
    assert!(d.reducible.contains(&2));
}
