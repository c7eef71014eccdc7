use enriques_core::lattice::appendix::{anti_enriques_summary, odd_embeddings};
use enriques_core::lattice::f2::{is_isometry, lift_half_norm};
use enriques_core::lattice::linalg::{int_vec, rat, to_rat_vec};
use enriques_core::lattice::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn named(name: &str) -> IntegerLattice {
    named_lattice(name).unwrap()
}

fn gram_of(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
    rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
}

#[test]
fn named_lattice_examples() {
    assert_eq!(*named("A2").gram(), gram_of(&[&[-2, 1], &[1, -2]]));
    assert_eq!(*named("U").gram(), gram_of(&[&[0, 1], &[1, 0]]));
    let t = named("T237");
    assert_eq!((t.rank(), t.determinant(), t.signature()), (10, rat(-1), (1, 9, 0)));
    assert!(t.is_even() && t.is_unimodular());
    assert!(named_lattice("E9").is_err());
    assert!(named_lattice("rescale(A2)").is_err());
}

#[test]
fn discriminant_group_examples() {
    assert_eq!(named("A1").discriminant_group().unwrap().invariant_factors(), vec![2]);
    let d = named("rescale(dual(D12),2)").discriminant_group().unwrap();
    assert_eq!(d.order(), BigInt::from(1024));
    assert_eq!(d.invariant_factors(), vec![2; 10]);
    assert!(named("E8").discriminant_group().unwrap().is_trivial());
    assert!(IntegerLattice::from_integers(&[vec![1, 1], vec![1, 1]]).unwrap().discriminant_group().is_err());
}

#[test]
fn orthogonal_complement_examples() {
    let e8 = named("E8");
    let c = e8.orthogonal_complement(&[]);
    assert_eq!(c.lattice.rank(), 8);
    assert_eq!(c.lattice.determinant(), e8.determinant());

    let t = named("T237");
    let b0 = dual_basis()[0].clone();
    assert_eq!(t.norm_int(&b0), rat(10));
    let c = t.orthogonal_complement(&[to_rat_vec(&b0)]);
    let r = root_type(&c.lattice).unwrap();
    assert_eq!((r.label(), r.roots), ("A9".to_string(), 90));
}

#[test]
fn primitive_hulls_in_the_odd_unimodular_lattice() {
    let o = odd_embeddings().unwrap();
    assert_eq!(o.hull_index, BigInt::from(2));
    assert_eq!(o.hull_roots.label(), "A1+A9");
    assert_eq!(o.complement.lattice.rank(), 10);
    assert_eq!(o.complement_roots.label(), "A5+A5");
    assert!(o.witness_in_complement && !o.witness_in_root_span);
    assert_eq!(o.complement_root_index, BigInt::from(2));

    let i = named("I2,10");
    let full: Vec<Vec<BigInt>> =
        (0..12).map(|k| int_vec(&(0..12).map(|j| i64::from(j == k)).collect::<Vec<_>>())).collect();
    let (hull, index) = i.primitive_hull(&full).unwrap();
    assert_eq!(index, BigInt::from(1));
    assert_eq!(hull.lattice.determinant().abs(), rat(1));
}

#[test]
fn short_vector_examples() {
    assert_eq!(short_vectors(&named("A1"), &rat(-2)).unwrap().len(), 1);
    assert_eq!(short_vectors(&named("A2"), &rat(-2)).unwrap().len(), 3);
    assert!(short_vectors(&named("E8(2)"), &rat(-2)).unwrap().is_empty());
    assert_eq!(short_vectors(&named("E8(2)"), &rat(-4)).unwrap().len(), 120);
    assert!(short_vectors(&named("U"), &rat(-2)).is_err());
}

#[test]
fn root_type_examples() {
    let r = root_type(&named("A4+A5")).unwrap();
    assert_eq!((r.label(), r.roots), ("A4+A5".to_string(), 50));
    let r = root_type(&named("E8")).unwrap();
    assert_eq!((r.label(), r.roots), ("E8".to_string(), 240));
    assert!(root_type(&named("E8(2)")).unwrap().is_empty());
    for (name, label, roots) in [("D4", "D4", 24), ("E6", "E6", 72), ("E7", "E7", 126), ("A1+A1+A3", "A1+A1+A3", 16)] {
        let r = root_type(&named(name)).unwrap();
        assert_eq!((r.label(), r.roots), (label.to_string(), roots), "{name}");
    }
}

#[test]
fn gonality_of_the_three_invariant_classes() {
    let t = named("T237");
    let b = dual_basis();
    for (i, deg, phi, count) in [(0usize, 10, 3u64, 10usize), (2, 18, 4, 9), (4, 30, 5, 6)] {
        let h = &b[i];
        let g = gonality(&t, h).unwrap();
        assert_eq!((g.degree.clone(), g.phi, g.count()), (rat(deg), phi, count), "b{i}");
        assert!(rat(g.phi as i64) <= g.degree);
        for f in &g.half_pencils {
            assert!(t.norm_int(f).is_zero());
            assert_eq!(t.pair_int(f, h), rat(phi as i64));
            let content = f.iter().fold(BigInt::zero(), |acc, x| num_integer::Integer::gcd(&acc, x));
            assert_eq!(content, BigInt::from(1));
        }
        // Nothing isotropic pairs to a smaller positive value.
        for k in 1..phi {
            assert!(isotropic_at(&t, h, k).unwrap().is_empty(), "b{i} k {k}");
        }
    }
}

#[test]
fn isotropic_sequence_identities() {
    let t = named("T237");
    let s = isotropic_sequence(10).unwrap();
    assert!(s.b0_identity && s.b2_identity && s.b4_identity);
    for (i, f) in s.vectors.iter().enumerate() {
        for (j, g) in s.vectors.iter().enumerate() {
            assert_eq!(t.pair_int(f, g), rat(i64::from(i != j)));
        }
    }
    let one = isotropic_sequence(1).unwrap();
    assert_eq!(one.vectors.len(), 1);
    assert!(t.norm_int(&one.vectors[0]).is_zero());
}

#[test]
fn mod2_reduction_examples() {
    let e8 = mod2_reduction(&named("E8")).unwrap();
    let nf = e8.space.normal_form().unwrap();
    assert_eq!(nf.invariants(), (8, 4, 0, 0, false));
    assert_eq!(e8.space.arf(), Some(0));

    let lp = mod2_reduction(&named("A4+A5")).unwrap();
    assert_eq!(lp.space.dim(), 9);
    let radical = lp.space.radical();
    assert_eq!(radical.len(), 1);
    assert_eq!(lp.space.q(&radical[0]), Some(1));

    let odd = mod2_reduction(&IntegerLattice::from_integers(&[vec![-1]]).unwrap()).unwrap();
    assert!(odd.alternating_basis.is_empty());
}

fn hyperbolic_sum(q: &[u8]) -> F2QuadraticSpace {
    let n = q.len();
    let b = (0..n).map(|i| (0..n).map(|j| u8::from(i / 2 == j / 2 && i != j)).collect()).collect();
    F2QuadraticSpace::new(b, Some(q.to_vec())).unwrap()
}

#[test]
fn f2_isometry_examples() {
    let v = mod2_reduction(&named("E8")).unwrap().space;
    let id = f2_isometry(&v, &v).unwrap();
    assert!(is_isometry(&v, &v, &id));

    let arf0 = hyperbolic_sum(&[0, 0, 0, 0, 0, 0, 0, 0]);
    let arf1 = hyperbolic_sum(&[0, 0, 0, 0, 0, 0, 1, 1]);
    assert_eq!((arf0.arf(), arf1.arf()), (Some(0), Some(1)));
    assert!(f2_isometry(&arf0, &arf1).is_none());
    assert!(f2_isometry(&arf0, &v).is_some());
}

#[test]
fn half_vector_glue_gives_the_anti_enriques_lattice() {
    let o = odd_embeddings().unwrap();
    let s = anti_enriques_summary(&o.anti_enriques).unwrap();
    assert_eq!(s.signature, (2, 10, 0));
    assert!(s.even);
    assert_eq!(s.invariants, vec![2; 10]);
    assert!(s.matches_reference_census);
    assert_eq!(o.anti_enriques.index, BigInt::from(2));
}

#[test]
fn trivial_glue_is_the_direct_sum() {
    let (a, b) = (named("A2"), named("E8"));
    let g = glue(&a, &b, &[]).unwrap();
    assert_eq!(g.index, BigInt::from(1));
    assert_eq!(g.result.determinant(), a.direct_sum(&b).determinant());
    let half = BigRational::new(1.into(), 2.into());
    let bad = [half.clone(), BigRational::zero(), BigRational::zero(), BigRational::zero()];
    assert!(matches!(glue(&named("A1"), &named("A1"), &[bad[..2].to_vec()]), Err(LatticeError::NonIntegralGlue(..))));
    // (e1 + e2)/2 in A1 + A1 has norm -1: integral but odd.
    let g = glue(&named("A1"), &named("A1"), &[vec![half.clone(), half]]).unwrap();
    assert_eq!(g.index, BigInt::from(2));
    assert!(!g.is_even());
}

#[test]
fn trivial_action_has_everything_invariant() {
    let l = named("A4+A5");
    let id: Vec<Vec<BigInt>> =
        (0..9).map(|k| int_vec(&(0..9).map(|j| i64::from(j == k)).collect::<Vec<_>>())).collect();
    let (inv, coinv) = l.invariant_coinvariant(&[id]).unwrap();
    assert_eq!((inv.lattice.rank(), coinv.lattice.rank()), (9, 0));
}

#[test]
fn gram_json_roundtrip() {
    let t = named("T237");
    let json = serde_json::to_string(&t.to_json()).unwrap();
    let back = IntegerLattice::from_json(&serde_json::from_str(&json).unwrap()).unwrap();
    assert_eq!(back.gram(), t.gram());
}

fn arb_gram(max: usize, even: bool) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max).prop_flat_map(move |n| {
        prop::collection::vec(-3i64..=3, n * n).prop_map(move |v| {
            let mut g = vec![vec![0; n]; n];
            for i in 0..n {
                for j in i..n {
                    let x = if i == j && even { 2 * v[i * n + j] } else { v[i * n + j] };
                    g[i][j] = x;
                    g[j][i] = x;
                }
            }
            g
        })
    })
}

fn lat(g: &[Vec<i64>]) -> IntegerLattice {
    IntegerLattice::from_integers(g).unwrap()
}

fn add3(a: (usize, usize, usize), b: (usize, usize, usize)) -> (usize, usize, usize) {
    (a.0 + b.0, a.1 + b.1, a.2 + b.2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn direct_sum_multiplies_determinants(a in arb_gram(3, false), b in arb_gram(3, false)) {
        let (la, lb) = (lat(&a), lat(&b));
        let s = la.direct_sum(&lb);
        prop_assert_eq!(s.determinant(), la.determinant() * lb.determinant());
        prop_assert_eq!(s.signature(), add3(la.signature(), lb.signature()));
    }

    #[test]
    fn rescaling_scales_the_determinant(a in arb_gram(4, false), r in prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3])) {
        let l = lat(&a);
        let s = l.rescale(&rat(r));
        prop_assert_eq!(s.determinant(), l.determinant() * rat(r).pow(l.rank() as i32));
        let (p, n, z) = l.signature();
        prop_assert_eq!(s.signature(), if r > 0 { (p, n, z) } else { (n, p, z) });
    }

    #[test]
    fn discriminant_order_is_the_determinant(a in arb_gram(4, false)) {
        let l = lat(&a);
        prop_assume!(!l.determinant().is_zero());
        let d = l.discriminant_group().unwrap();
        prop_assert_eq!(BigRational::from_integer(d.order()), l.determinant().abs());
    }

    #[test]
    fn primitive_hull_is_idempotent(gens in prop::collection::vec(prop::collection::vec(-4i64..=4, 5), 1..=3)) {
        let amb = named("I2,3");
        let gens: Vec<Vec<BigInt>> = gens.iter().map(|v| int_vec(v)).collect();
        prop_assume!(linalg::rank_rat(&gens.iter().map(|v| to_rat_vec(v)).collect::<Vec<_>>()) == gens.len());
        let (hull, index) = amb.primitive_hull(&gens).unwrap();
        prop_assert!(index >= BigInt::from(1));
        for g in &gens {
            prop_assert!(hull.from_ambient(&to_rat_vec(g)).is_some_and(|c| c.iter().all(|x| x.is_integer())));
        }
        let (again, index2) = amb.primitive_hull(&hull.basis).unwrap();
        prop_assert_eq!(index2, BigInt::from(1));
        let rows = |e: &Embedded| e.basis.iter().map(|v| to_rat_vec(v)).collect::<Vec<_>>();
        prop_assert!(same_lattice(&rows(&hull), &rows(&again)));
    }

    #[test]
    fn mod2_refinement_is_well_defined(a in arb_gram(5, true), x in prop::collection::vec(-3i64..=3, 5), y in prop::collection::vec(-3i64..=3, 5)) {
        let l = lat(&a);
        let n = l.rank();
        let m = mod2_reduction(&l).unwrap();
        prop_assert!(m.space.refinement_holds());
        let x = int_vec(&x[..n]);
        let shifted: Vec<BigInt> = x.iter().zip(&y[..n]).map(|(a, b)| a + 2 * b).collect();
        let reduced: Vec<u8> = x.iter().map(|c| u8::from(c % 2 != BigInt::zero())).collect();
        prop_assert_eq!(lift_half_norm(&l, &x), lift_half_norm(&l, &shifted));
        prop_assert_eq!(lift_half_norm(&l, &x), m.space.q(&reduced));
    }

    #[test]
    fn f2_isometry_survives_base_change(a in arb_gram(5, true), ops in prop::collection::vec((0usize..5, 0usize..5, -2i64..=2), 0..8)) {
        let l = lat(&a);
        let n = l.rank();
        let mut u: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        for (i, j, c) in ops {
            let (i, j) = (i % n, j % n);
            if i != j {
                let rj = u[j].clone();
                for (x, y) in u[i].iter_mut().zip(rj) {
                    *x += c * y;
                }
            }
        }
        let basis: Vec<Vec<BigRational>> = u.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
        let other = l.sublattice(&basis);
        let (v, w) = (mod2_reduction(&l).unwrap().space, mod2_reduction(&other).unwrap().space);
        let map = f2_isometry(&v, &w);
        prop_assert!(map.is_some());
        prop_assert!(is_isometry(&v, &w, &map.unwrap()));
    }
}
