use std::collections::BTreeSet;

use enriques_core::mrep::*;
use enriques_core::perm::{catalog, closure, embeds_up_to_iso, isomorphic, Catalog, Permutation};
use num_rational::Ratio;

const NONSOLVABLE: [&str; 3] = ["A5", "S5", "A6"];
const NILPOTENT: [&str; 10] = ["C2", "C3", "C4", "C5", "C6", "C2^2", "C3^2", "C2^3", "C2xC4", "D8"];
const SOLVABLE: [&str; 12] =
    ["D6", "D10", "D12", "A4", "A3,3", "C3xS3", "Hol(C5)", "C2xA4", "S4", "C3^2:C4", "S3,3", "N72"];

fn canonical(name: &str) -> String {
    Catalog::bundled().entry(name).unwrap().name.clone()
}

#[test]
fn classification_has_twenty_five_classes() {
    let c = classify_mathieu_groups().unwrap();
    let got: BTreeSet<String> = c.records.iter().map(|r| r.name.clone()).collect();
    let expected: BTreeSet<String> =
        NONSOLVABLE.iter().chain(&NILPOTENT).chain(&SOLVABLE).map(|n| canonical(n)).collect();
    assert_eq!(got, expected);
    assert_eq!(c.records.len(), 25);

    for r in &c.records {
        let name = r.name.as_str();
        let is = |list: &[&str]| list.iter().any(|n| canonical(n) == name);
        assert_eq!(!r.solvable, is(&NONSOLVABLE), "{name}");
        assert_eq!(r.nilpotent, is(&NILPOTENT), "{name}");
        assert!(r.mu >= 3);
        assert!(!r.maximal.is_empty());
        assert!(!(r.order % 16 == 0));
    }
    for excluded in ["Q8", "Q12"] {
        let name = canonical(excluded);
        assert!(!got.contains(&name));
        assert!(c.rejected.iter().any(|r| r.name == name), "{excluded} examined and rejected");
    }
    let q12 = c.rejected.iter().find(|r| r.name == canonical("Q12")).unwrap();
    assert_eq!(q12.reason, "isomorphic to Q12");
    let q8 = c.rejected.iter().find(|r| r.name == canonical("Q8")).unwrap();
    assert_eq!(q8.reason, "2-Sylow subgroup does not embed in S6");
}

#[test]
fn maximal_groups_are_listed_with_memberships() {
    let c = classify_mathieu_groups().unwrap();
    for m in MAXIMAL_GROUPS {
        let r = c.find(m).unwrap();
        assert!(r.maximal.contains(&m.to_string()));
    }
    let d8 = c.find("D8").unwrap();
    assert_eq!(d8.maximal, vec!["A6", "S5", "N72"]);
    assert!(c.find("C2^3").unwrap().maximal.contains(&"C2xA4".to_string()));
    assert_eq!(c.find("C2").unwrap().maximal.len(), 5);
}

#[test]
fn maximal_membership_examples() {
    // D8 is the 2-Sylow subgroup of A6, so it lies in A6 as well as N72.
    let d8 = maximal_membership(&catalog("D8").unwrap()).unwrap();
    assert!(d8.contains(&"N72".to_string()) && d8.contains(&"A6".to_string()));
    let witness =
        closure(&[Permutation::parse(6, "(1 2 3 4)(5 6)").unwrap(), Permutation::parse(6, "(1 3)(5 6)").unwrap()])
            .unwrap();
    assert!(isomorphic(&witness, &catalog("D8").unwrap()).unwrap());
    assert!(witness.elements().unwrap().iter().all(|p| catalog("A6").unwrap().contains(p).unwrap()));
    assert!(maximal_membership(&catalog("C2^3").unwrap()).unwrap().contains(&"C2xA4".to_string()));
    assert_eq!(maximal_membership(&catalog("C2").unwrap()).unwrap().len(), 5);
    assert!(matches!(maximal_membership(&catalog("Q12").unwrap()), Err(MrepError::NotClassified(_))));
    assert!(matches!(maximal_membership(&catalog("C2^4").unwrap()), Err(MrepError::NotClassified(_))));
}

#[test]
fn listed_groups_embed_in_s6_and_conversely() {
    let c = classify_mathieu_groups().unwrap();
    let s6 = catalog("S6").unwrap();
    for r in &c.records {
        assert!(embeds_up_to_iso(&r.group, &s6).unwrap(), "{}", r.name);
    }
    let subs = sixteen_free_subgroups_of_s6().unwrap();
    let nontrivial: Vec<_> = subs.into_iter().filter(|h| h.order().unwrap() > 1).collect();
    assert_eq!(nontrivial.len(), 25);
    for h in &nontrivial {
        assert!(c.records.iter().any(|r| isomorphic(&r.group, h).unwrap()));
    }
}

#[test]
fn closed_under_subgroups() {
    let c = classify_mathieu_groups().unwrap();
    for r in &c.records {
        for h in subgroups_up_to_conjugacy(&r.group).unwrap() {
            if h.order().unwrap() == 1 {
                continue;
            }
            assert!(c.records.iter().any(|x| isomorphic(&x.group, &h).unwrap()), "subgroup of {}", r.name);
            // μ grows on passing to subgroups.
            assert!(mu_average(&h).unwrap() >= mu_average(&r.group).unwrap());
        }
    }
}

#[test]
fn decomposition_matches_average() {
    let c = classify_mathieu_groups().unwrap();
    for r in &c.records {
        assert_eq!(mu_average(&r.group).unwrap(), Ratio::from_integer(r.mu as i64), "{}", r.name);
        let dim: u64 = r.multiplicities.iter().zip(&r.degrees).map(|(m, d)| m * d).sum();
        assert_eq!(dim, 12);
    }
}

#[test]
fn abelian_groups_of_order_sixteen_have_no_representation() {
    for name in ["C16", "C8xC2", "C4xC4", "C4xC2^2", "C2^4"] {
        let d = small_mathieu_decomposition(&catalog(name).unwrap()).unwrap();
        assert!(!d.is_present(), "{name}");
    }
}

#[test]
fn eleven_is_excluded_by_invariant_dimension() {
    // μ(C11) = 2 < 3 bounds μ(G) for any G containing an element of order 11.
    assert_eq!(mu_average(&catalog("C11").unwrap()).unwrap(), Ratio::from_integer(2));
}
