use std::collections::BTreeSet;

use enriques_core::config::*;
use enriques_core::lattice::linalg::rat;
use enriques_core::perm::Permutation;
use num_bigint::BigInt;

/// `"(12)(34)"` as a permutation of `n` points.
fn perm_of(compact: &str, n: usize) -> Permutation {
    let mut s = String::new();
    let mut prev_digit = false;
    for c in compact.chars() {
        if c.is_ascii_digit() && prev_digit {
            s.push(' ');
        }
        s.push(c);
        prev_digit = c.is_ascii_digit();
    }
    Permutation::parse(n, &s).unwrap()
}

fn commute(a: &Permutation, b: &Permutation) -> bool {
    a.compose(b) == b.compose(a)
}

#[test]
fn s5_matrix_follows_the_intersection_rules() {
    let cfg = s5_configuration();
    assert_eq!(cfg.len(), 20);
    assert!(cfg.is_well_formed() && cfg.action_preserves());
    assert_eq!(cfg.action.as_ref().unwrap().order().unwrap(), 120);
    enum Curve {
        R(usize),
        L(Permutation),
    }
    let curves: Vec<Curve> = cfg
        .labels
        .iter()
        .map(|l| match l.strip_prefix('r') {
            Some(i) => Curve::R(i.parse().unwrap()),
            None => Curve::L(perm_of(l.strip_prefix('l').unwrap(), 5)),
        })
        .collect();
    assert_eq!(curves.iter().filter(|c| matches!(c, Curve::R(_))).count(), 5);
    for (i, a) in curves.iter().enumerate() {
        for (j, b) in curves.iter().enumerate() {
            let want = if i == j {
                -2
            } else {
                match (a, b) {
                    (Curve::R(_), Curve::R(_)) => 2,
                    (Curve::L(s), Curve::L(t)) => i64::from(s.compose(t).order() == 3),
                    (Curve::R(k), Curve::L(s)) | (Curve::L(s), Curve::R(k)) => 2 * i64::from(s.image(*k) == *k),
                }
            };
            assert_eq!(cfg.intersections[i][j], want, "{} {}", cfg.labels[i], cfg.labels[j]);
        }
    }
    assert_eq!(cfg.pairing("l(12)(34)", "l(13)(24)"), Some(0));
    assert_eq!(cfg.pairing("r1", "l(23)(45)"), Some(2));
}

#[test]
fn l_graph_is_the_petersen_line_graph() {
    let cfg = s5_configuration();
    let ls: Vec<(String, Permutation)> =
        cfg.labels.iter().filter_map(|l| l.strip_prefix('l').map(|c| (l.clone(), perm_of(c, 5)))).collect();
    assert_eq!(ls.len(), 15);
    // (ij)(kl) is the Petersen edge {i,j}-{k,l}; Petersen edges meet when they share a 2-subset.
    let edge = |p: &Permutation| -> BTreeSet<BTreeSet<usize>> {
        p.cycles().into_iter().filter(|c| c.len() == 2).map(|c| c.into_iter().collect()).collect()
    };
    let mut edges = 0;
    for (i, (a, pa)) in ls.iter().enumerate() {
        for (b, pb) in &ls[i + 1..] {
            let adjacent = edge(pa).intersection(&edge(pb)).count() == 1;
            assert_eq!(cfg.pairing(a, b) == Some(1), adjacent, "{a} {b}");
            edges += usize::from(adjacent);
        }
    }
    assert_eq!(edges, 30);
    let w = petersen_witness(&cfg);
    assert!(w.explicit_is_isomorphism && w.searched_is_isomorphism);
    assert_eq!((w.regular_degree, w.edge_count), (Some(4), 30));
}

#[test]
fn six_pairs_of_disjoint_pentagons() {
    let cfg = s5_configuration();
    let (g, labels) = l_graph(&cfg);
    // Brute force over 5-subsets: induced 2-regular and connected.
    let n = g.order();
    let mut pentagons: Vec<Vec<usize>> = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() != 5 {
            continue;
        }
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if !vs.iter().all(|&v| vs.iter().filter(|&&u| g.has_edge(u, v)).count() == 2) {
            continue;
        }
        let mut seen = vec![vs[0]];
        let mut k = 0;
        while k < seen.len() {
            for &u in &vs {
                if g.has_edge(seen[k], u) && !seen.contains(&u) {
                    seen.push(u);
                }
            }
            k += 1;
        }
        if seen.len() == 5 {
            pentagons.push(vs);
        }
    }
    let mut count = 0;
    for (i, a) in pentagons.iter().enumerate() {
        for b in &pentagons[i + 1..] {
            let apart = a.iter().all(|u| b.iter().all(|v| u != v && !g.has_edge(*u, *v)));
            count += usize::from(apart);
        }
    }
    assert_eq!(count, 6);

    let pairs = pentagon_pairs(&cfg);
    assert_eq!(pairs.len(), 6);
    for p in &pairs {
        for cycle in [&p.first, &p.second] {
            let idx: Vec<usize> = cycle.iter().map(|l| labels.iter().position(|x| x == l).unwrap()).collect();
            assert!(g.is_induced_cycle(&idx));
        }
    }
}

#[test]
fn s5_realization() {
    let real = realize_s5_ns().unwrap();
    let l = &real.lattice;
    assert_eq!(l.rank(), 10);
    assert!(l.is_even() && l.is_unimodular());
    assert_eq!(l.signature(), (1, 9, 0));
    let cfg = s5_configuration();
    for a in &cfg.labels {
        for b in &cfg.labels {
            assert_eq!(real.pair(a, b).unwrap(), rat(cfg.pairing(a, b).unwrap()));
        }
    }
    let curves: Vec<&str> = cfg.labels.iter().map(String::as_str).collect();
    assert_eq!(real.span_index(&curves).unwrap(), Some(BigInt::from(2)));
    let h = real.combination(&[(1, "r1"), (1, "r2"), (1, "r3"), (1, "r4"), (1, "r5")]).unwrap();
    let fs: Vec<(i64, String)> = (1..=6).map(|j| (1, format!("f{j}"))).collect();
    let fs: Vec<(i64, &str)> = fs.iter().map(|(c, s)| (*c, s.as_str())).collect();
    assert_eq!(h, real.combination(&fs).unwrap());
    assert_eq!(l.norm_int(&h), rat(30));
    for i in 1..=6 {
        for j in 1..=6 {
            assert_eq!(real.pair(&format!("f{i}"), &format!("f{j}")).unwrap(), rat(i64::from(i != j)));
        }
    }
    for i in 1..5 {
        let d = real.combination(&[(1, &format!("r{i}")), (-1, &format!("r{}", i + 1))]).unwrap();
        let half = real.class(&format!("(r{i}-r{})/2", i + 1)).unwrap();
        assert_eq!(d, half.iter().map(|x| x * 2).collect::<Vec<_>>());
    }
}

#[test]
fn hesse_lattice_matches_the_pencil_data() {
    let real = hesse_pencil_lattice().unwrap();
    let l = &real.lattice;
    assert!(l.is_even() && l.is_unimodular());
    assert_eq!(l.signature(), (1, 9, 0));
    let pencils: Vec<String> = (0..9).map(|i| format!("f{}{}", i / 3, i % 3)).collect();
    assert_eq!(real.pair("h", "h").unwrap(), rat(4));
    assert_eq!(real.pair("h", "finf").unwrap(), rat(3));
    assert_eq!(real.pair("finf", "finf").unwrap(), rat(0));
    for a in &pencils {
        assert_eq!(real.pair("h", a).unwrap(), rat(2));
        assert_eq!(real.pair("finf", a).unwrap(), rat(1));
        for b in &pencils {
            assert_eq!(real.pair(a, b).unwrap(), rat(i64::from(a != b)));
        }
        let prime = real.class(&a.replacen('f', "f'", 1)).unwrap();
        assert_eq!(prime, &real.combination(&[(1, "h"), (-1, a)]).unwrap());
    }
    let two_finf = real.combination(&[(2, "finf")]).unwrap();
    assert_eq!(l.norm_int(&two_finf), rat(0));
    assert_eq!(l.pair_int(&two_finf, real.class("h").unwrap()), rat(6));
    let deg = |terms: &[(i64, &str)]| l.norm_int(&real.combination(terms).unwrap());
    assert_eq!(deg(&[(3, "h"), (-1, "finf")]), rat(18));
    assert_eq!(deg(&[(1, "h"), (1, "finf")]), rat(10));
}

#[test]
fn invariant_polarizations() {
    let s5 = invariant_polarization(&realize_s5_ns().unwrap(), "S5").unwrap();
    assert_eq!(
        (s5.degree.clone(), s5.complement_roots.label(), s5.phi, s5.half_pencil_count),
        (rat(30), "A4+A5".into(), 5, 6)
    );
    assert!(s5.transport_agrees);

    let hesse = hesse_pencil_lattice().unwrap();
    let n72 = invariant_polarization(&hesse, "N72").unwrap();
    assert_eq!((n72.degree.clone(), n72.phi, n72.half_pencil_count), (rat(18), 4, 9));
    // A positive class has a rank-9 complement, so the printed A1+A9 cannot occur.
    assert_eq!(n72.complement_roots.label(), "A1+A8");
    assert_eq!(n72.complement_roots.rank(), 9);
    let primes: Vec<String> = (0..9).map(|i| format!("f'{}{}", i / 3, i % 3)).collect();
    assert_eq!(n72.half_pencil_labels, Some(primes.clone()));
    for p in &primes {
        assert_eq!(hesse.lattice.pair_int(hesse.class(p).unwrap(), &n72.class), rat(4));
    }
    let a6 = invariant_polarization(&hesse, "A6").unwrap();
    assert_eq!(
        (a6.degree.clone(), a6.complement_roots.label(), a6.phi, a6.half_pencil_count),
        (rat(10), "A9".into(), 3, 10)
    );
    assert!(n72.transport_agrees && a6.transport_agrees);
    // Degrees are the orbit-length products 5*6, 2*9, 1*10.
    assert_eq!([s5.degree, n72.degree, a6.degree], [rat(5 * 6), rat(2 * 9), rat(10)]);
}

#[test]
fn odd_involution_rules() {
    let cfg = odd_involution_configuration();
    assert_eq!(cfg.len(), 30);
    assert!(cfg.is_well_formed() && cfg.action_preserves());
    let perms: Vec<Permutation> = cfg.labels.iter().map(|l| perm_of(l.strip_prefix('C').unwrap(), 6)).collect();
    for (i, s) in perms.iter().enumerate() {
        for (j, t) in perms.iter().enumerate() {
            let want = if i == j {
                -2
            } else if !commute(s, t) {
                1
            } else if s.cycles().len() == t.cycles().len() {
                0
            } else {
                2
            };
            assert_eq!(cfg.intersections[i][j], want, "{} {}", cfg.labels[i], cfg.labels[j]);
        }
    }
    assert_eq!(cfg.pairing("C(12)", "C(12)(34)(56)"), Some(2));
    assert_eq!(cfg.pairing("C(12)", "C(13)"), Some(1));
    for (i, s) in perms.iter().enumerate() {
        if s.cycles().iter().filter(|c| c.len() == 2).count() == 1 {
            assert_eq!(cfg.intersections[i].iter().filter(|&&v| v == 2).count(), 3);
        }
    }
}

fn collinear(a: usize, b: usize, c: usize) -> bool {
    // Three points of the plane over F3 are collinear iff they sum to zero coordinatewise.
    let s = |f: fn(usize) -> usize| (f(a) + f(b) + f(c)).is_multiple_of(3);
    s(|p| p / 3) && s(|p| p % 3)
}

fn exact_covers(triples: &[[usize; 3]], arcs: &[[usize; 4]]) -> Vec<BTreeSet<[usize; 4]>> {
    fn go(
        triples: &[[usize; 3]],
        arcs: &[[usize; 4]],
        covered: &mut BTreeSet<[usize; 3]>,
        chosen: &mut Vec<[usize; 4]>,
        out: &mut Vec<BTreeSet<[usize; 4]>>,
    ) {
        let Some(t) = triples.iter().find(|t| !covered.contains(*t)) else {
            out.push(chosen.iter().copied().collect());
            return;
        };
        for a in arcs.iter().filter(|a| t.iter().all(|x| a.contains(x))) {
            let ts = arc_triples(a);
            if ts.iter().any(|x| covered.contains(x)) {
                continue;
            }
            covered.extend(ts.iter().copied());
            chosen.push(*a);
            go(triples, arcs, covered, chosen, out);
            chosen.pop();
            for x in &ts {
                covered.remove(x);
            }
        }
    }
    let mut out = Vec::new();
    go(triples, arcs, &mut BTreeSet::new(), &mut Vec::new(), &mut out);
    out
}

fn arc_triples(a: &[usize; 4]) -> [[usize; 3]; 4] {
    [[a[0], a[1], a[2]], [a[0], a[1], a[3]], [a[0], a[2], a[3]], [a[1], a[2], a[3]]]
}

#[test]
fn steiner_systems_and_arc_completions() {
    let s = build_steiner_systems().unwrap();
    assert!(s.st_2_3_9.is_valid());
    assert_eq!(s.st_2_3_9.blocks.len(), 12);
    assert!(s.st_2_3_9.coverage().iter().all(|&c| c == 1));
    assert!(s.st_3_4_10.is_valid());
    assert_eq!((s.st_3_4_10.blocks.len(), s.st_3_4_10.coverage().len()), (30, 120));

    let mut triples = Vec::new();
    let mut arcs = Vec::new();
    for a in 0..9 {
        for b in a + 1..9 {
            for c in b + 1..9 {
                if !collinear(a, b, c) {
                    triples.push([a, b, c]);
                }
                for d in c + 1..9 {
                    let q = [a, b, c, d];
                    if arc_triples(&q).iter().all(|t| !collinear(t[0], t[1], t[2])) {
                        arcs.push(q);
                    }
                }
            }
        }
    }
    assert_eq!((triples.len(), arcs.len()), (72, s.four_arcs));
    assert_eq!(s.non_collinear_triples, 72);
    let covers = exact_covers(&triples, &arcs);
    assert!(covers.iter().all(|c| c.len() == 18));
    // Three completions, not one.
    assert_eq!(covers.len(), 3);
    assert_eq!(s.completions, covers.len());
    // Index 0 of St(3,4,10) is the point at infinity.
    let found: BTreeSet<[usize; 4]> = s.arc_blocks.iter().map(|b| [b[0] - 1, b[1] - 1, b[2] - 1, b[3] - 1]).collect();
    assert!(covers.contains(&found));

    // AGL(2,3): all 48 invertible matrices and 9 translations.
    let mut orbit: BTreeSet<BTreeSet<[usize; 4]>> = BTreeSet::new();
    let mut group = 0;
    for m in 0..81usize {
        let (a, b, c, d) = (m / 27, m / 9 % 3, m / 3 % 3, m % 3);
        if (a * d + 9 - b * c) % 3 == 0 {
            continue;
        }
        for t in 0..9 {
            group += 1;
            let map = |p: usize| {
                let (x, y) = (p / 3, p % 3);
                ((a * x + b * y + t / 3) % 3) * 3 + (c * x + d * y + t % 3) % 3
            };
            let image = found
                .iter()
                .map(|q| {
                    let mut r = q.map(map);
                    r.sort_unstable();
                    r
                })
                .collect();
            orbit.insert(image);
        }
    }
    assert_eq!(group, 432);
    assert_eq!(orbit, covers.into_iter().collect());
    assert_eq!((s.completion_orbits.clone(), s.affine_group_order), (vec![3], 432));
}

#[test]
fn configurations_serialize() {
    let j = serde_json::to_value(s5_configuration().to_json()).unwrap();
    assert_eq!(j["labels"].as_array().unwrap().len(), 20);
    assert_eq!(j["matrix"].as_array().unwrap().len(), 20);
    let s = serde_json::to_value(build_steiner_systems().unwrap()).unwrap();
    assert_eq!(s["st_3_4_10"]["blocks"].as_array().unwrap().len(), 30);
}
