use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use enriques_core::exact::field::{q_omega, FieldElem, FieldTower};
use enriques_core::lattice::appendix::mathieu_subgroups;
use enriques_core::lattice::golay::S6On24;
use enriques_core::perm::{catalog, closure, embeds_up_to_iso, isomorphic, Catalog, PermError, PermGroup, Permutation};
use proptest::prelude::*;

fn p(n: usize, s: &str) -> Permutation {
    Permutation::parse(n, s).unwrap()
}

fn g(name: &str) -> PermGroup {
    catalog(name).unwrap()
}

fn histogram(pairs: &[(usize, usize)]) -> BTreeMap<usize, usize> {
    pairs.iter().copied().collect()
}

#[test]
fn closure_examples() {
    assert_eq!(closure(&[Permutation::identity(5)]).unwrap().order().unwrap(), 1);
    assert_eq!(closure(&[p(5, "(1 2)"), p(5, "(1 2 3 4 5)")]).unwrap().order().unwrap(), 120);
    let m11 = g("M11");
    assert_eq!(m11.degree(), 11);
    assert_eq!(m11.order().unwrap(), 7920);
}

#[test]
fn mixed_degrees_rejected() {
    assert!(closure(&[p(3, "(1 2)"), p(4, "(1 2 3 4)")]).is_err());
}

#[test]
fn catalog_examples() {
    let m12 = g("M12");
    assert_eq!((m12.degree(), m12.order().unwrap()), (12, 95040));
    let n72 = g("N72");
    assert_eq!(n72.order().unwrap(), 72);
    // C3^2:D8 as the wreath product of S3 with C2.
    let wreath = closure(&[p(6, "(1 2)"), p(6, "(1 2 3)"), p(6, "(1 4)(2 5)(3 6)")]).unwrap();
    assert_eq!(wreath.order().unwrap(), 72);
    assert!(isomorphic(&n72, &wreath).unwrap());
    assert_eq!(g("C1").order().unwrap(), 1);
    assert!(matches!(catalog("M13"), Err(PermError::UnknownGroup { .. })));
}

#[test]
fn every_catalog_entry_matches_its_stated_order() {
    let cat = Catalog::bundled();
    for e in cat.entries() {
        if e.order > 10_000 {
            continue;
        }
        let grp = cat.group(&e.name).unwrap();
        assert_eq!(grp.order().unwrap(), e.order, "{}", e.name);
        assert_eq!(grp.degree(), e.degree, "{}", e.name);
    }
}

#[test]
fn order_histogram_examples() {
    assert_eq!(g("C6").order_histogram().unwrap(), histogram(&[(1, 1), (2, 1), (3, 2), (6, 2)]));
    assert_eq!(g("Q8").order_histogram().unwrap(), histogram(&[(1, 1), (2, 1), (4, 6)]));
    assert_eq!(g("A5").order_histogram().unwrap(), histogram(&[(1, 1), (2, 15), (3, 20), (5, 24)]));
}

#[test]
fn sylow_examples() {
    let s = g("S4").sylow(2).unwrap();
    assert_eq!(s.order().unwrap(), 8);
    assert!(isomorphic(&s, &g("D8")).unwrap());
    let s = g("A6").sylow(3).unwrap();
    assert_eq!(s.order().unwrap(), 9);
    assert!(isomorphic(&s, &g("C3^2")).unwrap());
    let c5 = g("C5");
    assert_eq!(c5.sylow(5).unwrap().order().unwrap(), 5);
    assert!(g("S4").sylow(4).is_err());
}

#[test]
fn conjugacy_class_examples() {
    assert_eq!(g("C3").conjugacy_classes().unwrap().sizes(), vec![1, 1, 1]);
    let mut s3 = g("S3").conjugacy_classes().unwrap().sizes();
    s3.sort_unstable();
    assert_eq!(s3, vec![1, 2, 3]);
    assert_eq!(g("Q12").conjugacy_classes().unwrap().len(), 6);
}

#[test]
fn isomorphism_examples() {
    assert!(!isomorphic(&g("D8"), &g("Q8")).unwrap());
    assert!(isomorphic(&g("S3"), &g("D6")).unwrap());
}

type Mat3 = Vec<Vec<FieldElem>>;

fn mat(t: &Arc<FieldTower>, rows: [[&str; 3]; 3]) -> Mat3 {
    rows.iter().map(|r| r.iter().map(|x| FieldElem::parse(t, x).unwrap()).collect()).collect()
}

fn mul(a: &Mat3, b: &Mat3) -> Mat3 {
    (0..3)
        .map(|i| {
            (0..3).map(|j| (0..3).fold(FieldElem::zero(a[0][0].tower()), |s, k| &s + &(&a[i][k] * &b[k][j]))).collect()
        })
        .collect()
}

/// Scales so that the first nonzero entry is 1 and returns a printable key.
fn projective_key(m: &Mat3) -> Vec<String> {
    let pivot = m.iter().flatten().find(|x| !x.is_zero()).unwrap().inverse().unwrap();
    m.iter().flatten().map(|x| (x * &pivot).to_string()).collect()
}

#[test]
fn hesse_matrices_generate_c3_squared_by_c4() {
    let t = q_omega();
    let gens = [
        mat(&t, [["0", "0", "1"], ["1", "0", "0"], ["0", "1", "0"]]),
        mat(&t, [["1", "0", "0"], ["0", "omega^2", "0"], ["0", "0", "omega"]]),
        mat(&t, [["1", "1", "1"], ["1", "omega^2", "omega"], ["1", "omega", "omega^2"]]),
    ];
    // Projective closure, then the regular representation.
    let mut elems: Vec<Mat3> = vec![mat(&t, [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]])];
    let mut index: BTreeMap<Vec<String>, usize> = BTreeMap::from([(projective_key(&elems[0]), 0)]);
    let mut i = 0;
    while i < elems.len() {
        for s in &gens {
            let m = mul(&elems[i], s);
            let k = projective_key(&m);
            if let std::collections::btree_map::Entry::Vacant(e) = index.entry(k) {
                e.insert(elems.len());
                elems.push(m);
            }
        }
        i += 1;
    }
    assert_eq!(elems.len(), 36);
    let perms: Vec<Permutation> = gens
        .iter()
        .map(|s| {
            let images: Vec<usize> = elems.iter().map(|e| index[&projective_key(&mul(s, e))] + 1).collect();
            Permutation::from_images(&images).unwrap()
        })
        .collect();
    let regular = closure(&perms).unwrap();
    assert_eq!(regular.order().unwrap(), 36);
    assert!(isomorphic(&regular, &g("C3^2:C4")).unwrap());
    assert!(!isomorphic(&regular, &g("C3xS3")).unwrap());
}

#[test]
fn embedding_examples() {
    let s6 = g("S6");
    assert!(embeds_up_to_iso(&g("S5"), &s6).unwrap());
    assert!(embeds_up_to_iso(&g("C2xD8"), &s6).unwrap());
    assert!(!embeds_up_to_iso(&g("Q8"), &s6).unwrap());
}

#[test]
fn orbit_lengths_of_the_three_subgroups() {
    let action = S6On24::new();
    let subs = mathieu_subgroups(&action).unwrap();
    let got: Vec<(&str, usize, Vec<usize>, Vec<usize>)> = subs
        .iter()
        .map(|s| (s.name, s.group.order().unwrap(), s.orbit_lengths_plus().unwrap(), s.orbit_lengths_minus().unwrap()))
        .collect();
    assert_eq!(
        got,
        vec![
            ("S5", 120, vec![5, 6], vec![2, 10]),
            ("N72", 72, vec![2, 9], vec![6, 6]),
            ("A6", 360, vec![1, 10], vec![6, 6]),
        ]
    );
    assert_eq!(PermGroup::trivial(3).orbit_lengths(&[1, 2, 3]).unwrap(), vec![1, 1, 1]);
}

#[test]
fn isomorphism_is_an_equivalence_on_the_catalog() {
    let cat = Catalog::bundled();
    let groups: Vec<(String, PermGroup)> = cat
        .entries()
        .iter()
        .filter(|e| e.order <= 400)
        .map(|e| (e.name.clone(), cat.group(&e.name).unwrap()))
        .collect();
    let mut by_order: BTreeMap<usize, Vec<&(String, PermGroup)>> = BTreeMap::new();
    for entry in &groups {
        by_order.entry(entry.1.order().unwrap()).or_default().push(entry);
    }
    for same in by_order.values() {
        let rel: Vec<Vec<bool>> =
            same.iter().map(|a| same.iter().map(|b| isomorphic(&a.1, &b.1).unwrap()).collect()).collect();
        let n = same.len();
        for i in 0..n {
            assert!(rel[i][i], "{}", same[i].0);
            for j in 0..n {
                assert_eq!(rel[i][j], rel[j][i], "{} {}", same[i].0, same[j].0);
                for k in 0..n {
                    assert!(!(rel[i][j] && rel[j][k]) || rel[i][k]);
                }
            }
        }
    }
    // Distinct catalog entries are distinct classes.
    let classes: BTreeSet<Vec<String>> = by_order
        .values()
        .flat_map(|same| {
            same.iter()
                .map(move |a| same.iter().filter(|b| isomorphic(&a.1, &b.1).unwrap()).map(|b| b.0.clone()).collect())
        })
        .collect();
    assert_eq!(classes.iter().map(Vec::len).sum::<usize>(), groups.len());
    assert!(classes.iter().all(|c| c.len() == 1), "{classes:?}");
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Permutation::from_images(&v).unwrap())
}

fn arb_gens() -> impl Strategy<Value = Vec<Permutation>> {
    (1usize..=6).prop_flat_map(|n| prop::collection::vec(arb_perm(n), 1..=2))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn composition_is_associative_with_inverses(a in arb_perm(7), b in arb_perm(7), c in arb_perm(7)) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert!(a.pow(a.order() as i64).is_identity());
    }

    #[test]
    fn closure_satisfies_lagrange(gens in arb_gens()) {
        let grp = closure(&gens).unwrap();
        let n = grp.order().unwrap();
        prop_assert_eq!(factorial(grp.degree()) % n, 0);
        let h = grp.order_histogram().unwrap();
        prop_assert_eq!(h.values().sum::<usize>(), n);
        prop_assert_eq!(h.get(&1), Some(&1));
        for g in &gens {
            prop_assert!(grp.contains(g).unwrap());
        }
    }

    #[test]
    fn sylow_index_is_coprime(gens in arb_gens()) {
        let grp = closure(&gens).unwrap();
        let n = grp.order().unwrap();
        for q in [2usize, 3, 5] {
            let s = grp.sylow(q as u64).unwrap().order().unwrap();
            prop_assert_eq!(n % s, 0);
            prop_assert!(!(n / s).is_multiple_of(q));
            let mut k = s;
            while k.is_multiple_of(q) { k /= q; }
            prop_assert_eq!(k, 1);
        }
    }

    #[test]
    fn conjugacy_classes_partition_the_group(gens in arb_gens()) {
        let grp = closure(&gens).unwrap();
        let n = grp.order().unwrap();
        let classes = grp.conjugacy_classes().unwrap();
        let sizes = classes.sizes();
        prop_assert_eq!(sizes.iter().sum::<usize>(), n);
        prop_assert!(sizes.iter().all(|s| n.is_multiple_of(*s)));
        prop_assert_eq!(sizes.iter().filter(|&&s| s == 1).count(), grp.center().unwrap().order().unwrap());
    }

    #[test]
    fn regular_representation_is_isomorphic(gens in arb_gens()) {
        let grp = closure(&gens).unwrap();
        prop_assume!(grp.order().unwrap() <= 120);
        let reg = grp.regular_representation().unwrap();
        prop_assert!(isomorphic(&grp, &reg).unwrap());
    }
}
