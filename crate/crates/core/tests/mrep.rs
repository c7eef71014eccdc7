use std::collections::BTreeSet;

use enriques_core::cyclo::Cyclo;
use enriques_core::mrep::*;
use enriques_core::perm::{catalog, closure, Permutation};
use num_rational::Ratio;

fn g(name: &str) -> enriques_core::perm::PermGroup {
    catalog(name).unwrap()
}

#[test]
fn mu_table_values() {
    assert_eq!(mu_of_order(1).unwrap(), 12);
    assert_eq!(mu_of_order(4).unwrap(), 4);
    assert!(matches!(mu_of_order(7), Err(MrepError::UnrealizedOrder(7))));
    let mu = MuCharacter::new();
    assert_eq!(mu.table.keys().copied().collect::<Vec<_>>(), vec![1, 2, 3, 4, 5, 6, 8, 11]);
    assert_eq!(mu.table.values().copied().collect::<Vec<_>>(), vec![12, 4, 3, 4, 2, 1, 2, 1]);
}

#[test]
fn mu_averages() {
    assert_eq!(mu_average(&g("A5")).unwrap(), Ratio::from_integer(3));
    assert_eq!(mu_average(&g("C2xC3^2")).unwrap(), Ratio::new(8, 3));
    assert_eq!(mu_average(&g("C1")).unwrap(), Ratio::from_integer(12));
    assert_eq!(mu_average(&g("C11")).unwrap(), Ratio::from_integer(2));
    let c9 = closure(&[Permutation::parse(9, "(1 2 3 4 5 6 7 8 9)").unwrap()]).unwrap();
    assert!(matches!(mu_average(&c9), Err(MrepError::UnrealizedOrder(9))));
}

#[test]
fn c2_character_table() {
    let ct = character_table(&g("C2")).unwrap();
    let rows: Vec<Vec<Option<i64>>> =
        ct.irreducibles().iter().map(|r| r.iter().map(Cyclo::as_integer).collect()).collect();
    assert_eq!(rows, vec![vec![Some(1), Some(1)], vec![Some(1), Some(-1)]]);
}

#[test]
fn character_table_degrees() {
    let cases: [(&str, &[u64]); 8] = [
        ("S3", &[1, 1, 2]),
        ("Q12", &[1, 1, 1, 1, 2, 2]),
        ("Q8", &[1, 1, 1, 1, 2]),
        ("A4", &[1, 1, 1, 3]),
        ("S4", &[1, 1, 2, 3, 3]),
        ("A5", &[1, 3, 3, 4, 5]),
        ("S5", &[1, 1, 4, 4, 5, 5, 6]),
        ("A6", &[1, 5, 5, 8, 8, 9, 10]),
    ];
    for (name, degs) in cases {
        let ct = character_table(&g(name)).unwrap();
        assert_eq!(ct.degrees(), degs, "{name}");
        assert!(ct.verify());
    }
}

#[test]
fn character_table_cap() {
    assert!(matches!(character_table(&g("S6")), Err(MrepError::OrderCap { .. })));
}

#[test]
fn decomposition_examples() {
    let q12 = small_mathieu_decomposition(&g("Q12")).unwrap();
    assert_eq!(q12.invariant_dimension(), Some(4));
    let m = q12.multiplicities().unwrap();
    let ct = character_table(&g("Q12")).unwrap();
    let dim: u64 = m.iter().zip(ct.degrees()).map(|(a, d)| a * d).sum();
    assert_eq!(dim, 12);

    match small_mathieu_decomposition(&g("C2^2xC3")).unwrap() {
        MuDecomposition::Absent(Absence::NonIntegral { value, .. }) => assert!(value.ends_with("/2")),
        other => panic!("unexpected {other:?}"),
    }
    assert_eq!(small_mathieu_decomposition(&g("C16")).unwrap(), MuDecomposition::Absent(Absence::UnrealizedOrder(16)));
}

#[test]
fn psi_inner_product_on_c2_squared_times_c3() {
    // ψ: h ↦ 1, g ↦ ζ6 on C6 × C2 = <g> × <h>.
    let grp = g("C2^2xC3");
    let els = grp.elements().unwrap();
    let gen6 = els.iter().find(|p| p.order() == 6).unwrap().clone();
    let cyc: Vec<Permutation> = (0..6).map(|k| gen6.pow(k)).collect();
    let h = els.iter().find(|p| p.order() == 2 && !cyc.contains(p)).unwrap().clone();
    let mut total = Cyclo::zero(6);
    for i in 0..6i64 {
        for j in 0..2i64 {
            let x = gen6.pow(i).compose(&h.pow(j));
            let mu = mu_of_order(x.order()).unwrap();
            total = &total + &Cyclo::root(6, -i).scale(mu);
        }
    }
    assert_eq!(Ratio::new(total.as_integer().unwrap(), 12), Ratio::new(1, 2));
}

#[test]
fn order_bounds() {
    let m11 = g("M11");
    let b = order_bound(&m11).unwrap();
    assert!(b.holds);
    assert_eq!(b.factorization, vec![(2, 4), (3, 2), (5, 1), (11, 1)]);
    assert!(!order_bound_for(81).holds);
    assert!(order_bound(&g("C11")).unwrap().holds);
    assert!(!order_bound_for(32).holds);
    assert_eq!(odd_sylow_exponent_bound(3).unwrap(), 2);
    assert_eq!(odd_sylow_exponent_bound(5).unwrap(), 1);
    assert_eq!(odd_sylow_exponent_bound(11).unwrap(), 1);
}

#[test]
fn no_order16_cases() {
    let c8 = verify_no_order16(NoOrder16Case::C8);
    assert_eq!(c8.mu_a, Ratio::from_integer(4));
    assert!(c8.contradiction);
    assert!(c8.extensions.iter().all(|e| e.mu_coset == Ratio::from_integer(3)));
    assert!(c8.extensions.iter().all(|e| e.mu_total == Ratio::new(7, 2)));

    let c42 = verify_no_order16(NoOrder16Case::C4xC2);
    assert_eq!(c42.mu_a, Ratio::from_integer(5));
    assert!(c42.constant_coset_order);
    assert!(c42.contradiction);
    assert!(c42.extensions.iter().all(|e| e.mu_coset.is_integer() && e.mu_coset.numer() % 2 == 0));

    let c222 = verify_no_order16(NoOrder16Case::C2Cubed);
    assert_eq!(c222.mu_a, Ratio::from_integer(5));
    assert!(c222.contradiction);
    assert!(c222.extensions.iter().all(|e| e.mu_coset == Ratio::from_integer(4)));
    assert!(c222.extensions.iter().all(|e| e.coset_orders.keys().all(|&o| o <= 4)));
}

#[test]
fn lefschetz_profiles() {
    let v = |n| lefschetz_values(n).unwrap().admissible_values;
    assert_eq!(v(1), BTreeSet::from([12]));
    assert_eq!(v(2), (-2..=6).map(|k| 2 * k).collect());
    assert_eq!(v(3), BTreeSet::from([3]));
    assert_eq!(v(4), BTreeSet::from([2, 4]));
    assert_eq!(v(5), BTreeSet::from([2]));
    assert_eq!(v(6), BTreeSet::from([1, 3]));
    assert!(matches!(lefschetz_values(7), Err(MrepError::LefschetzOrder(7))));
    assert!(lefschetz_values(0).is_err());
}

#[test]
fn lefschetz_parity() {
    for n in 1..=6 {
        let vals = lefschetz_values(n).unwrap().admissible_values;
        let parities: BTreeSet<i64> = vals.iter().map(|v| v.rem_euclid(2)).collect();
        assert_eq!(parities.len(), 1, "order {n}");
        // Real eigenvalues ±1 and conjugate pairs make the trace even for orders 1, 2, 4.
        if [1, 2, 4].contains(&n) {
            assert_eq!(parities, BTreeSet::from([0]));
        }
    }
}

#[test]
fn order6_eigencounts() {
    let sols = solve_order6_eigencounts();
    assert_eq!(sols.len(), 1);
    let s = sols.iter().next().unwrap();
    assert_eq!(s.a, [4, 1, 2, 2, 2, 1]);
    assert_eq!(s.lefschetz, 1);
    // The printed linear system agrees with traces of powers.
    let [a0, a1, a2, a3, _, _] = s.a.map(i64::from);
    assert_eq!(a0 - a1 - a2 + a3, 3);
    assert_eq!(a0 - 2 * a1 + 2 * a2 - a3, 4);

    // Without the constraint on L(σ) the three linear equations leave a one-parameter family.
    let free = solve_eigencounts(&Order6Constraints { allowed_lefschetz: None, ..Default::default() });
    let ls: Vec<i64> = free.iter().map(|s| s.lefschetz).collect();
    assert_eq!(free.len(), 3);
    assert_eq!(ls.iter().copied().collect::<BTreeSet<_>>(), BTreeSet::from([-5, 1, 7]));
    assert!(free.is_superset(&sols));

    let alt = solve_eigencounts(&Order6Constraints { trace_cube: 2, allowed_lefschetz: None, ..Default::default() });
    for s in &alt {
        let [a0, a1, a2, a3, _, _] = s.a.map(i64::from);
        assert_eq!(a0 - 2 * a1 + 2 * a2 - a3, 2);
        assert_eq!(a0 + 2 * a1 + 2 * a2 + a3, 12);
    }
}

#[test]
fn euler_equation_solutions() {
    let sols = wild_order_solutions(24);
    let triples: BTreeSet<(u64, u64, i64)> = sols.iter().map(|s| (s.q, s.r, s.c2)).collect();
    assert_eq!(triples, BTreeSet::from([(3, 3, 12), (5, 2, 12), (11, 1, 12)]));
    let eleven = sols.iter().find(|s| s.q == 11).unwrap();
    assert!(!eleven.rank_ok);
    assert!(sols.iter().filter(|s| s.q != 11).all(|s| s.rank_ok));
}

#[test]
fn composite_orders_are_excluded() {
    let nine = composite_order_configurations(9, 24);
    // One orbit of three points with stabilizer C3, or three fixed points.
    let stabs: BTreeSet<Vec<usize>> = nine.iter().map(|c| c.stabilizers.clone()).collect();
    assert_eq!(stabs, BTreeSet::from([vec![3], vec![9, 9, 9]]));
    let free = nine.iter().find(|c| c.stabilizers == vec![3]).unwrap();
    assert_eq!(free.c2, Some(4));
    let fixed = nine.iter().find(|c| c.stabilizers == vec![9, 9, 9]).unwrap();
    assert_eq!(fixed.exceptional_rank, 24);
    for n in [9, 15, 25] {
        assert!(composite_order_configurations(n, 24).iter().all(|c| !c.admissible), "order {n}");
    }
}
