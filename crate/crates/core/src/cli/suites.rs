//! Check builders for each suite.

use std::collections::BTreeSet;
use std::error::Error;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::Zero;

use super::{Check, Context, Verdict};
use crate::config::{self, CurveConfig, NSRealization};
use crate::exact;
use crate::lattice::linalg::{rat, to_rat_vec};
use crate::lattice::{self, appendix, named_lattice, root_type};
use crate::mrep::{self, NoOrder16Case};

type Out = Result<(), Box<dyn Error>>;

struct Collector {
    suite: &'static str,
    checks: Vec<Check>,
}

impl Collector {
    fn check(&mut self, id: &str, reference: &str, passed: bool, details: impl Into<String>) {
        // Keep text reports one line per check.
        let details: String =
            details.into().lines().map(str::trim).filter(|l| !l.is_empty()).collect::<Vec<_>>().join("; ");
        self.checks.push(Check {
            id: format!("{}.{id}", self.suite),
            reference: reference.to_string(),
            verdict: Verdict::of(passed),
            details,
        });
    }
}

pub(super) fn run(suite: &str, ctx: &Context, progress: &mut dyn FnMut(&str)) -> Vec<Check> {
    let name = super::SUITES.iter().find(|s| **s == suite).expect("known suite");
    let mut c = Collector { suite: name, checks: Vec::new() };
    let result = match suite {
        "classify" => classify(&mut c, ctx),
        "characters" => characters(&mut c, ctx),
        "lefschetz" => lefschetz(&mut c),
        "lattices" => lattices(&mut c),
        "gonality" => gonality(&mut c),
        "appendix-a" => appendix_a(&mut c, progress),
        "s5-config" => s5_config(&mut c),
        "hesse-config" => hesse_config(&mut c),
        "steiner" => steiner(&mut c),
        "exact-surfaces" => exact_surfaces(&mut c, ctx),
        "char-p" => char_p(&mut c, ctx),
        _ => unreachable!("suite list is closed"),
    };
    if let Err(e) = result {
        c.check("error", "suite ran to completion", false, e.to_string());
    }
    c.checks
}

const NONSOLVABLE: [&str; 3] = ["A5", "S5", "A6"];
const NILPOTENT: [&str; 10] = ["C2", "C3", "C4", "C5", "C6", "C2^2", "C3^2", "C2^3", "C2xC4", "D8"];
const SOLVABLE: [&str; 12] =
    ["D6", "D10", "D12", "A4", "A3,3", "C3xS3", "Hol(C5)", "C2xA4", "S4", "C3^2:C4", "S3,3", "N72"];

fn classify(c: &mut Collector, ctx: &Context) -> Out {
    let canonical = |n: &str| ctx.catalog.entry(n).map(|e| e.name.clone()).unwrap_or_else(|| n.to_string());
    let family = |name: &str| -> Option<&str> {
        let is = |list: &[&str]| list.iter().any(|n| canonical(n) == name);
        [(&NONSOLVABLE[..], "nonsolvable"), (&NILPOTENT[..], "nilpotent"), (&SOLVABLE[..], "solvable")]
            .into_iter()
            .find(|(list, _)| is(list))
            .map(|(_, f)| f)
    };
    let result = mrep::classify_mathieu_groups()?;
    let reference = "Mathieu groups form 25 isomorphism classes, all embedding in S6";
    for r in &result.records {
        let measured = if !r.solvable {
            "nonsolvable"
        } else if r.nilpotent {
            "nilpotent"
        } else {
            "solvable"
        };
        let expected = family(&r.name);
        let details = format!("order {}, {measured}, dim V^G = {}, maximal in {}", r.order, r.mu, r.maximal.join(" "));
        c.check(&r.name, reference, expected == Some(measured), details);
    }
    for n in NONSOLVABLE.iter().chain(&NILPOTENT).chain(&SOLVABLE) {
        let name = canonical(n);
        if result.find(&name).is_none() {
            c.check(&format!("missing.{name}"), reference, false, "expected class not found");
        }
    }
    Ok(())
}

fn characters(c: &mut Collector, ctx: &Context) -> Out {
    let g = |n: &str| ctx.catalog.group(n);
    for (name, want) in [("A5", Ratio::from_integer(3)), ("C2xC3^2", Ratio::new(8, 3))] {
        let mu = mrep::mu_average(&g(name)?)?;
        c.check(
            &format!("mu.{name}"),
            "average of the Mathieu character over the group",
            mu == want,
            format!("mu = {mu}, expected {want}"),
        );
    }
    for case in NoOrder16Case::ALL {
        let log = mrep::verify_no_order16(case);
        let cosets: BTreeSet<String> = log.extensions.iter().map(|e| e.mu_coset.to_string()).collect();
        let totals: BTreeSet<String> = log.extensions.iter().map(|e| e.mu_total.to_string()).collect();
        c.check(
            &format!("no-order16.{}", case.label()),
            "no Mathieu group of order 16 extends this index-2 subgroup",
            log.contradiction,
            format!(
                "mu(A) = {}, coset averages {{{}}}, totals {{{}}}, {} extensions",
                log.mu_a,
                cosets.into_iter().collect::<Vec<_>>().join(", "),
                totals.into_iter().collect::<Vec<_>>().join(", "),
                log.extensions.len()
            ),
        );
    }
    for (name, present) in [
        ("C16", false),
        ("C2^2xC3", false),
        ("C8xC2", false),
        ("C4xC4", false),
        ("C4xC2^2", false),
        ("C2^4", false),
        ("Q12", true),
    ] {
        let d = mrep::small_mathieu_decomposition(&g(name)?)?;
        c.check(
            &format!("decomposition.{name}"),
            if present {
                "the Mathieu character of Q12 is a genuine character"
            } else {
                "the Mathieu character is not a character of this group"
            },
            d.is_present() == present,
            format!("{d:?}"),
        );
    }
    for name in ["A5", "S5", "A6", "N72"] {
        let t = mrep::character_table(&g(name)?)?;
        c.check(
            &format!("table.{name}"),
            "character table satisfies both orthogonality relations",
            t.verify(),
            format!("{} classes, degrees {:?}", t.len(), t.degrees()),
        );
    }
    Ok(())
}

fn lefschetz(c: &mut Collector) -> Out {
    let expected: [&[i64]; 6] = [&[12], &[-4, -2, 0, 2, 4, 6, 8, 10, 12], &[3], &[2, 4], &[2], &[1, 3]];
    for (i, want) in expected.iter().enumerate() {
        let n = i + 1;
        let got = mrep::lefschetz_values(n)?.admissible_values;
        c.check(
            &format!("order-{n}"),
            "admissible Lefschetz numbers of a Mathieu automorphism",
            got == want.iter().copied().collect(),
            format!("{got:?}"),
        );
    }
    let sols = mrep::solve_order6_eigencounts();
    let unique = sols.len() == 1 && sols.iter().all(|s| s.a == [4, 1, 2, 2, 2, 1] && s.lefschetz == 1);
    c.check(
        "order6-eigencounts",
        "an order-6 Mathieu automorphism has eigencounts (4,1,2,2,2,1) and L = 1",
        unique,
        format!("{:?}", sols.iter().map(|s| (s.a, s.lefschetz)).collect::<Vec<_>>()),
    );
    let wild = mrep::wild_order_solutions(24);
    let triples: BTreeSet<(u64, u64, i64)> = wild.iter().map(|s| (s.q, s.r, s.c2)).collect();
    let rank_flags = wild.iter().all(|s| s.rank_ok == (s.q != 11));
    c.check(
        "euler.prime-orders",
        "Euler-number equation for odd prime order has solutions (3,3,12), (5,2,12), (11,1,12); q = 11 violates the rank bound",
        triples == BTreeSet::from([(3, 3, 12), (5, 2, 12), (11, 1, 12)]) && rank_flags,
        format!("{:?}", wild.iter().map(|s| (s.q, s.r, s.c2, s.rank_ok)).collect::<Vec<_>>()),
    );
    for n in [9, 15, 25] {
        let cfgs = mrep::composite_order_configurations(n, 24);
        let admissible = cfgs.iter().filter(|q| q.admissible).count();
        c.check(
            &format!("euler.order-{n}"),
            "no automorphism of order 9, 15 or 25",
            admissible == 0,
            format!("{} configurations, {admissible} admissible", cfgs.len()),
        );
    }
    Ok(())
}

fn lattices(c: &mut Collector) -> Out {
    let a2 = named_lattice("A2")?;
    c.check(
        "named.A2",
        "root lattices are negative definite",
        *a2.gram() == vec![vec![rat(-2), rat(1)], vec![rat(1), rat(-2)]],
        format!("{a2}"),
    );
    let u = named_lattice("U")?;
    c.check(
        "named.U",
        "hyperbolic plane",
        *u.gram() == vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]],
        format!("{u}"),
    );
    let t = named_lattice("T237")?;
    c.check(
        "named.T237",
        "the T237 diagram lattice is even unimodular of signature (1,9)",
        t.rank() == 10 && t.determinant() == rat(-1) && t.signature() == (1, 9, 0) && t.is_even(),
        format!("det {}, signature {:?}", t.determinant(), t.signature()),
    );
    for (name, want) in [("A1", vec![2u64]), ("rescale(dual(D12),2)", vec![2; 10]), ("E8", vec![])] {
        let d = named_lattice(name)?.discriminant_group()?;
        c.check(
            &format!("discriminant.{name}"),
            "discriminant group invariants",
            d.invariant_factors() == want,
            format!("invariants {:?}, order {}", d.invariant_factors(), d.order()),
        );
    }
    for (name, label, count) in [("E8", "E8", 240), ("A4+A5", "A4+A5", 50), ("E8(2)", "", 0)] {
        let r = root_type(&named_lattice(name)?)?;
        c.check(
            &format!("roots.{name}"),
            "root system of the lattice",
            r.label() == label && r.roots == count,
            format!("type {}, {} roots", if r.is_empty() { "empty".into() } else { r.label() }, r.roots),
        );
    }
    let e8 = lattice::mod2_reduction(&named_lattice("E8")?)?;
    let nf = e8.space.normal_form()?;
    c.check(
        "mod2.E8",
        "E8/2E8 is a nondegenerate quadratic space of Arf invariant 0",
        nf.invariants() == (8, 4, 0, 0, false),
        format!("{:?}", nf.invariants()),
    );
    let s = lattice::isotropic_sequence(10)?;
    c.check(
        "isotropic-sequence",
        "isotropic sequence f1..f10 with 3 b0 = f1 + ... + f10 and b4 = f5 + ... + f10",
        s.b0_identity && s.b4_identity && s.b2_identity,
        format!("b0 {}, b2 {}, b4 {}", s.b0_identity, s.b2_identity, s.b4_identity),
    );
    let b0 = lattice::dual_basis()[0].clone();
    let comp = t.orthogonal_complement(&[to_rat_vec(&b0)]);
    let r = root_type(&comp.lattice)?;
    c.check(
        "complement.b0",
        "the complement of the degree-10 class is an A9 lattice",
        r.label() == "A9",
        format!("type {}, {} roots", r.label(), r.roots),
    );
    Ok(())
}

fn gonality(c: &mut Collector) -> Out {
    let t = named_lattice("T237")?;
    let b = lattice::dual_basis();
    for (i, (deg, phi, count)) in [(0usize, (10, 3, 10)), (2, (18, 4, 9)), (4, (30, 5, 6))] {
        let (d, p, n) = lattice::gonality_profile(&t, &b[i])?;
        c.check(
            &format!("degree-{deg}"),
            "gonality and number of gonality half-pencils of the invariant class",
            d == rat(deg) && p == phi && n == count,
            format!("b{i}: degree {d}, phi {p}, {n} half-pencils"),
        );
    }
    Ok(())
}

fn appendix_a(c: &mut Collector, progress: &mut dyn FnMut(&str)) -> Out {
    let d = appendix::dodecad_discriminant()?;
    c.check(
        "dodecad-discriminant",
        "N+(2) has discriminant group of order 2^10",
        d.invariant_factors() == vec![2; 10],
        format!("invariants {:?}", d.invariant_factors()),
    );
    let data = appendix::run(progress)?;
    for r in &data.reports {
        let n = r.n;
        let name = r.name;
        let (plus, minus): (Vec<usize>, Vec<usize>) = match n {
            6 => (vec![5, 6], vec![2, 10]),
            9 => (vec![2, 9], vec![6, 6]),
            _ => (vec![1, 10], vec![6, 6]),
        };
        c.check(
            &format!("{name}.orbits"),
            "orbit lengths on the two dodecads",
            r.orbits_plus == plus && r.orbits_minus == minus,
            format!("{:?} / {:?}", r.orbits_plus, r.orbits_minus),
        );
        let want_plus = [format!("A{}", n - 1), format!("A{}", 10 - n)]
            .into_iter()
            .filter(|s| s != "A0")
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect::<Vec<_>>()
            .join("+");
        c.check(
            &format!("{name}.l-plus"),
            "the coinvariant lattice L+ is the root lattice A(n-1) + A(10-n)",
            r.l_plus_roots.label() == want_plus && r.l_plus_is_root_lattice,
            format!("{}, spanned by roots {}", r.l_plus_roots.label(), r.l_plus_is_root_lattice),
        );
        let want_minus = if n == 6 { "A1+A9" } else { "A5+A5" };
        c.check(
            &format!("{name}.l-minus"),
            "L- contains A1+A9 (n = 6) or A5+A5 (n = 9, 10) with index 2",
            r.l_minus_roots.label() == want_minus && r.l_minus_root_index == BigInt::from(2),
            format!("{}, index {}", r.l_minus_roots.label(), r.l_minus_root_index),
        );
        c.check(
            &format!("{name}.f2-isometry"),
            "the two 9-dimensional quadratic spaces over F2 are isometric",
            r.normal_form_isometry.is_some() && r.induced_map_is_isometry && r.induced_map_is_equivariant,
            format!(
                "normal form {:?}, induced map isometry {}, equivariant {}",
                r.q_plus.alternating.normal_form().map(|f| f.invariants()).ok(),
                r.induced_map_is_isometry,
                r.induced_map_is_equivariant
            ),
        );
        c.check(
            &format!("{name}.leech-type"),
            "the glued lattice N_G is even with no vectors of norm -2",
            r.glued.is_even() && r.glue_matches_n_g && r.n_g_roots == 0,
            format!("glue index {}, matches N_G {}, roots {}", r.glued.index, r.glue_matches_n_g, r.n_g_roots),
        );
        c.check(
            &format!("{name}.discriminant-action"),
            "G acts trivially on the discriminant group of N_G",
            r.trivial_on_discriminant,
            format!("invariants {:?}", r.n_g_discriminant.invariant_factors()),
        );
    }
    let o = appendix::odd_embeddings()?;
    c.check(
        "odd.hull",
        "A9 + A1 in I_{2,10} has primitive hull of index 2",
        o.hull_index == BigInt::from(2) && o.hull_roots.label() == "A1+A9",
        format!("index {}, roots {}", o.hull_index, o.hull_roots.label()),
    );
    c.check(
        "odd.complement",
        "the complement of the two norm-3 vectors contains A5+A5 with index 2",
        o.complement_roots.label() == "A5+A5"
            && o.witness_in_complement
            && !o.witness_in_root_span
            && o.complement_root_index == BigInt::from(2),
        format!(
            "roots {}, index {}, h1-e2-e4-e6-e8 in complement {}, in root span {}",
            o.complement_roots.label(),
            o.complement_root_index,
            o.witness_in_complement,
            o.witness_in_root_span
        ),
    );
    let s = appendix::anti_enriques_summary(&o.anti_enriques)?;
    c.check(
        "anti-enriques",
        "I_{2,10}(2) glued with the half vector is even of signature (2,10) with discriminant (Z/2)^10, matching U+U(2)+E8(2)",
        s.signature == (2, 10, 0) && s.even && s.invariants == vec![2; 10] && s.matches_reference_census,
        format!(
            "signature {:?}, even {}, invariants {:?}, half-vector norm {}, census match {}",
            s.signature, s.even, s.invariants, s.half_vector_norm, s.matches_reference_census
        ),
    );
    Ok(())
}

fn unit_pairings(real: &NSRealization, labels: &[String]) -> Result<bool, config::ConfigError> {
    for a in labels {
        for b in labels {
            if real.pair(a, b)? != rat(i64::from(a != b)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn config_checks(c: &mut Collector, prefix: &str, cfg: &CurveConfig) {
    c.check(
        &format!("{prefix}well-formed"),
        "intersection matrix is symmetric with diagonal -2 and nonnegative off-diagonal",
        cfg.is_well_formed(),
        format!("{} curves", cfg.len()),
    );
    c.check(
        &format!("{prefix}action"),
        "the group action preserves the intersection matrix",
        cfg.action_preserves(),
        format!("{} generators", cfg.action.as_ref().map_or(0, |g| g.generators().len())),
    );
}

fn s5_config(c: &mut Collector) -> Out {
    let cfg = config::s5_configuration();
    config_checks(c, "", &cfg);
    let r = |a: &str, b: &str| cfg.pairing(a, b);
    c.check(
        "rules",
        "(l_s, l_t) = 0 for commuting s, t and (r_i, l_s) = 2 when s fixes i",
        r("l(12)(34)", "l(13)(24)") == Some(0) && r("r1", "l(23)(45)") == Some(2) && r("r1", "r2") == Some(2),
        format!(
            "(l(12)(34), l(13)(24)) = {:?}, (r1, l(23)(45)) = {:?}, (r1, r2) = {:?}",
            r("l(12)(34)", "l(13)(24)"),
            r("r1", "l(23)(45)"),
            r("r1", "r2")
        ),
    );
    let w = config::petersen_witness(&cfg);
    c.check(
        "petersen",
        "the l-curve graph is the line graph of the Petersen graph",
        w.explicit_is_isomorphism && w.searched_is_isomorphism,
        format!("explicit {}, searched {}", w.explicit_is_isomorphism, w.searched_is_isomorphism),
    );
    c.check(
        "l-graph-regular",
        "the l-curve graph is 4-regular on 15 vertices",
        w.regular_degree == Some(4) && w.edge_count == 30,
        format!("degree {:?}, {} edges", w.regular_degree, w.edge_count),
    );
    let pairs = config::pentagon_pairs(&cfg);
    c.check(
        "pentagon-pairs",
        "there are six pairs of disjoint pentagons",
        pairs.len() == 6,
        format!("{} pairs", pairs.len()),
    );
    let real = config::realize_s5_ns()?;
    let l = &real.lattice;
    c.check(
        "ns-lattice",
        "the curves generate an even unimodular lattice of signature (1,9)",
        l.is_even() && l.is_unimodular() && l.signature() == (1, 9, 0),
        format!("signature {:?}, det {}", l.signature(), l.determinant()),
    );
    let curves: Vec<&str> = cfg.labels.iter().map(String::as_str).collect();
    let index = real.span_index(&curves)?;
    c.check(
        "span-index",
        "the twenty curves generate up to index two",
        index == Some(BigInt::from(2)),
        format!("index {index:?}"),
    );
    let f: Vec<String> = (1..=6).map(|j| format!("f{j}")).collect();
    c.check(
        "f-pairing",
        "(f_i, f_j) = 1 - delta_ij",
        unit_pairings(&real, &f)?,
        "six half-pencils from pentagon pairs",
    );
    let rs: Vec<(i64, &str)> = ["r1", "r2", "r3", "r4", "r5"].iter().map(|l| (1, *l)).collect();
    let fs: Vec<(i64, &str)> = f.iter().map(|l| (1, l.as_str())).collect();
    let sum_r = real.combination(&rs)?;
    c.check("relation", "r1 + ... + r5 = f1 + ... + f6", sum_r == real.combination(&fs)?, "exact vector identity");
    let halves = (1..5).all(|i| real.class_map.contains_key(&format!("(r{i}-r{})/2", i + 1)));
    c.check("half-differences", "r_i - r_{i+1} is divisible by 2", halves, "integral coordinates");
    let pol = config::invariant_polarization(&real, "S5")?;
    c.check(
        "polarization",
        "the invariant polarization r1 + ... + r5 has degree 30",
        pol.degree == rat(30) && sum_r == pol.class,
        format!("degree {}", pol.degree),
    );
    c.check(
        "complement",
        "the complement of the degree-30 class is A4+A5 (50 roots)",
        pol.complement_roots.label() == "A4+A5" && pol.complement_roots.roots == 50,
        format!("{}, {} roots", pol.complement_roots.label(), pol.complement_roots.roots),
    );
    c.check(
        "gonality",
        "the degree-30 class has gonality 5 with six half-pencils f1..f6",
        pol.phi == 5
            && pol.half_pencil_count == 6
            && pol.transport_agrees
            && pol.half_pencil_labels.as_ref() == Some(&f),
        format!(
            "phi {}, half-pencils {:?}, transport agrees {}",
            pol.phi, pol.half_pencil_labels, pol.transport_agrees
        ),
    );

    let odd = config::odd_involution_configuration();
    config_checks(c, "odd-involutions.", &odd);
    let p = |a: &str, b: &str| odd.pairing(a, b);
    let transposition_degrees: BTreeSet<usize> = odd
        .labels
        .iter()
        .filter(|l| l.matches('(').count() == 1)
        .map(|a| odd.labels.iter().filter(|b| odd.pairing(a, b) == Some(2)).count())
        .collect();
    c.check(
        "odd-involutions.rules",
        "(C_s, C_t) is 1 for non-commuting s, t; 0 or 2 for commuting ones of equal or different type",
        p("C(12)", "C(12)(34)(56)") == Some(2)
            && p("C(12)", "C(13)") == Some(1)
            && p("C(12)", "C(34)") == Some(0)
            && transposition_degrees == BTreeSet::from([3]),
        format!(
            "(C(12), C(12)(34)(56)) = {:?}, (C(12), C(13)) = {:?}, (C(12), C(34)) = {:?}, value-2 degrees {:?}",
            p("C(12)", "C(12)(34)(56)"),
            p("C(12)", "C(13)"),
            p("C(12)", "C(34)"),
            transposition_degrees
        ),
    );
    Ok(())
}

fn hesse_config(c: &mut Collector) -> Out {
    let real = config::hesse_pencil_lattice()?;
    let l = &real.lattice;
    c.check(
        "lattice",
        "the pencil classes generate an even unimodular lattice of signature (1,9)",
        l.is_even() && l.is_unimodular() && l.signature() == (1, 9, 0),
        format!("signature {:?}", l.signature()),
    );
    let two_finf = real.combination(&[(2, "finf")])?;
    let h = real.class("h")?;
    let n2 = l.norm_int(&two_finf);
    let nh = l.pair_int(&two_finf, h);
    c.check(
        "f-infinity",
        "2 f_inf = -3h + sum f_kl has square 0 and pairs to 6 with h",
        n2.is_zero() && nh == rat(6),
        format!("(2f_inf)^2 = {n2}, (2f_inf, h) = {nh}"),
    );
    let n72 = config::invariant_polarization(&real, "N72")?;
    c.check(
        "n72.degree",
        "(3h - f_inf)^2 = 18",
        n72.degree == rat(18),
        format!("{} has degree {}", n72.expression, n72.degree),
    );
    c.check(
        "n72.complement-printed",
        "the complement of 3h - f_inf has root type A1+A9",
        n72.complement_roots.label() == "A1+A9",
        format!(
            "found {} of rank {}; the complement of a positive class has rank 9",
            n72.complement_roots.label(),
            n72.complement_roots.rank()
        ),
    );
    c.check(
        "n72.complement",
        "the complement of 3h - f_inf is spanned by h - f_inf and the differences f'_kl - f'_k'l'",
        n72.complement_roots.label() == "A1+A8" && n72.complement_roots.rank() == 9,
        format!("{}, {} roots", n72.complement_roots.label(), n72.complement_roots.roots),
    );
    let primes: Vec<String> = (0..9).map(|i| format!("f'{}{}", i / 3, i % 3)).collect();
    c.check(
        "n72.half-pencils",
        "the nine f'_kl are exactly the gonality half-pencils of 3h - f_inf",
        n72.phi == 4 && n72.half_pencil_labels.as_ref() == Some(&primes) && n72.transport_agrees,
        format!("phi {}, half-pencils {:?}", n72.phi, n72.half_pencil_labels),
    );
    let a6 = config::invariant_polarization(&real, "A6")?;
    c.check(
        "a6.degree",
        "(h + f_inf)^2 = 10",
        a6.degree == rat(10),
        format!("{} has degree {}", a6.expression, a6.degree),
    );
    c.check(
        "a6.complement",
        "the complement of h + f_inf is an A9 lattice",
        a6.complement_roots.label() == "A9",
        format!("{}, {} roots", a6.complement_roots.label(), a6.complement_roots.roots),
    );
    c.check(
        "a6.half-pencils",
        "h + f_inf has gonality 3 with ten half-pencils",
        a6.phi == 3 && a6.half_pencil_count == 10 && a6.transport_agrees,
        format!("phi {}, half-pencils {:?}", a6.phi, a6.half_pencil_labels),
    );
    Ok(())
}

fn steiner(c: &mut Collector) -> Out {
    let s = config::build_steiner_systems()?;
    let a = &s.st_2_3_9;
    c.check(
        "st-2-3-9",
        "the 12 lines of the affine plane of order 3 form St(2,3,9)",
        a.is_valid() && a.blocks.len() == 12,
        format!("{} blocks, {} pairs each covered once", a.blocks.len(), a.coverage().len()),
    );
    let b = &s.st_3_4_10;
    c.check(
        "st-3-4-10",
        "the 12 line quartets with infinity and 18 four-arcs form St(3,4,10)",
        b.is_valid() && b.blocks.len() == 30 && b.coverage().len() == 120,
        format!("{} blocks, {} triples each covered once", b.blocks.len(), b.coverage().len()),
    );
    c.check(
        "arc-blocks",
        "18 four-arcs cover the 72 non-collinear triples",
        s.arc_blocks.len() == 18 && s.non_collinear_triples == 72,
        format!("{} arc blocks from {} four-arcs", s.arc_blocks.len(), s.four_arcs),
    );
    c.check(
        "arc-completion-unique",
        "the 18 arc blocks are the unique completion",
        s.completions == 1,
        format!("{} completions found by exhaustive search", s.completions),
    );
    c.check(
        "arc-completions-equivalent",
        "all arc completions are equivalent under the affine group of the plane",
        s.completion_orbits.len() == 1,
        format!("orbit sizes {:?} under a group of order {}", s.completion_orbits, s.affine_group_order),
    );
    Ok(())
}

fn proof_checks(c: &mut Collector, prefix: &str, log: &exact::ProofLog) {
    for s in &log.steps {
        c.check(&format!("{prefix}.{}", s.id), &s.claim, s.holds, s.detail.clone());
    }
}

fn exact_surfaces(c: &mut Collector, ctx: &Context) -> Out {
    let fx = &ctx.surfaces;
    let line = exact::verify_line_on_surface(fx)?;
    c.check(
        "line.on-surface",
        "the parametrized line lies on the surface for lambda, mu = 1 + sqrt3, 1 - sqrt3",
        line.holds,
        format!("residuals {}", line.residuals.join("; ")),
    );
    let swapped = exact::line_residuals(fx, "1 - sqrt3", "1 + sqrt3")?;
    c.check(
        "line.swapped",
        "the line does not lie on the surface with lambda and mu swapped",
        swapped.iter().any(|r| !r.is_zero()),
        swapped.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("; "),
    );
    c.check(
        "line.degrees",
        "each side of each equation has t-degree at most 2 on the line",
        line.side_degrees.iter().all(|&d| d <= 2),
        format!("{:?}", line.side_degrees),
    );
    let params = exact::verify_constant_parameters(fx)?;
    for label in ["F01", "F02", "F21", "F22"] {
        let v = &params[label];
        c.check(
            &format!("parameters.{label}"),
            "F01, F02, F21, F22 take constant values on the line",
            v.constant,
            format!("value {}", v.value),
        );
    }
    let f00 = &params["F00"];
    c.check(
        "parameters.F00",
        "F00 is not constant on the line",
        !f00.constant,
        format!("value {} at t = {}", f00.value, f00.t0),
    );
    proof_checks(c, "adjoint", &exact::verify_adjoint_involution(fx)?);
    proof_checks(c, "h192", &exact::verify_h192_identities(fx)?);
    Ok(())
}

fn char_p(c: &mut Collector, ctx: &Context) -> Out {
    for p in [2u64, 3, 5, 7] {
        let r = exact::char_p_degeneracy(&ctx.surfaces, p)?;
        let degenerate = [2, 5].contains(&p);
        c.check(
            &format!("fixed-point.p{p}"),
            "the involution acquires the fixed point (1:1:1:1:1) exactly in characteristic 2 and 5",
            r.all_ones_vanishes == degenerate && r.sign_fixed_point == degenerate,
            format!("sum x_i x_j at (1,...,1) = {}, sign values {:?}", r.all_ones_value, r.sign_values),
        );
        let reducible = [2, 3].contains(&p);
        c.check(
            &format!("reducible.p{p}"),
            "lambda = 1 + sqrt3 and mu = 1 - sqrt3 coincide exactly in characteristic 2 and 3",
            r.lambda_equals_mu == reducible,
            format!("(lambda - mu)^2 = {}", r.lambda_mu_gap_squared),
        );
    }
    Ok(())
}
