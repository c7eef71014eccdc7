//! The twenty curves `r_1..r_5`, `l_σ` with their S5 symmetry, the
//! thirty curves `C_σ` indexed by odd involutions of S6, and the lattice
//! generated by the twenty curves and their half-pencils.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::lattice::linalg::{as_integral, inverse, mat_vec_rat, rank_rat, rat, ratio, RatMatrix};
use crate::lattice::{express_in_basis, lattice_from_generators};
use crate::perm::{closure, Permutation};

use super::graph::{find_isomorphism, is_isomorphism, line_graph, petersen, Graph};
use super::{ConfigError, CurveConfig, NSRealization, Result};

/// Cycle notation without separators, e.g. `(12)(34)`.
fn compact(p: &Permutation) -> String {
    p.cycles()
        .iter()
        .filter(|c| c.len() > 1)
        .map(|c| format!("({})", c.iter().map(|x| x.to_string()).collect::<String>()))
        .collect()
}

fn pairs_of(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect()
}

/// The fifteen products `(ij)(kl)` of two disjoint transpositions in S5, in
/// lexicographic order of `(i, j, k, l)` with `i < j`, `k < l`, `i < k`.
fn double_transpositions() -> Vec<Permutation> {
    let mut out = Vec::new();
    for (i, j) in pairs_of(5) {
        for (k, l) in pairs_of(5) {
            if i < k && ![i, j].contains(&k) && ![i, j].contains(&l) {
                out.push(Permutation::from_cycles(5, &[vec![i, j], vec![k, l]]).expect("valid cycles"));
            }
        }
    }
    out
}

/// Permutation of labelled objects induced by `g`, given how `g` moves each object.
fn induced<T: PartialEq>(objects: &[T], image: impl Fn(&T) -> T) -> Permutation {
    let images: Vec<usize> = objects
        .iter()
        .map(|o| {
            let t = image(o);
            objects.iter().position(|x| *x == t).expect("action stabilizes the label set") + 1
        })
        .collect();
    Permutation::from_images(&images).expect("bijection")
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum S5Curve {
    R(usize),
    L(Permutation),
}

fn s5_curves() -> Vec<S5Curve> {
    (1..=5).map(S5Curve::R).chain(double_transpositions().into_iter().map(S5Curve::L)).collect()
}

fn s5_label(c: &S5Curve) -> String {
    match c {
        S5Curve::R(i) => format!("r{i}"),
        S5Curve::L(s) => format!("l{}", compact(s)),
    }
}

/// The twenty curves `r_1..r_5` and `l_σ` with the S5 action by permuting
/// indices and conjugating involutions.
///
/// `(r_i, r_j) = 2`; `(l_σ, l_τ) = 1` when `στ` has order 3 and 0 otherwise;
/// `(r_i, l_σ) = 2` when `σ` fixes `i` and 0 otherwise.
pub fn s5_configuration() -> CurveConfig {
    let curves = s5_curves();
    let pairing = |a: &S5Curve, b: &S5Curve| -> i64 {
        if a == b {
            return -2;
        }
        match (a, b) {
            (S5Curve::R(_), S5Curve::R(_)) => 2,
            (S5Curve::L(s), S5Curve::L(t)) => i64::from(s.compose(t).order() == 3),
            (S5Curve::R(i), S5Curve::L(s)) | (S5Curve::L(s), S5Curve::R(i)) => 2 * i64::from(s.image(*i) == *i),
        }
    };
    let intersections = curves.iter().map(|a| curves.iter().map(|b| pairing(a, b)).collect()).collect();
    let gens: Vec<Permutation> = ["(1 2)", "(1 2 3 4 5)"]
        .iter()
        .map(|s| {
            let g = Permutation::parse(5, s).expect("valid cycle");
            induced(&curves, |c| match c {
                S5Curve::R(i) => S5Curve::R(g.image(*i)),
                S5Curve::L(s) => S5Curve::L(s.conjugate_by(&g)),
            })
        })
        .collect();
    let action = closure(&gens).ok();
    CurveConfig { labels: curves.iter().map(s5_label).collect(), intersections, action }
}

/// Indices of the `l` curves in a configuration.
fn l_indices(cfg: &CurveConfig) -> Vec<usize> {
    (0..cfg.len()).filter(|&i| cfg.labels[i].starts_with('l')).collect()
}

/// Graph on the `l` curves joining pairs that meet once, with their labels.
pub fn l_graph(cfg: &CurveConfig) -> (Graph, Vec<String>) {
    let idx = l_indices(cfg);
    let mut g = Graph::new(idx.len());
    for a in 0..idx.len() {
        for b in a + 1..idx.len() {
            if cfg.intersections[idx[a]][idx[b]] == 1 {
                g.add_edge(a, b);
            }
        }
    }
    (g, idx.iter().map(|&i| cfg.labels[i].clone()).collect())
}

/// Identification of the `l`-graph with the line graph of the Petersen graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PetersenWitness {
    /// `l_(ij)(kl)` goes to the Petersen edge `{i,j}–{k,l}`.
    pub explicit_map: Vec<usize>,
    pub explicit_is_isomorphism: bool,
    /// An isomorphism found by search, independent of the labels.
    pub searched_map: Option<Vec<usize>>,
    pub searched_is_isomorphism: bool,
    pub regular_degree: Option<usize>,
    pub edge_count: usize,
}

/// Checks both the explicit identification and a searched isomorphism.
pub fn petersen_witness(cfg: &CurveConfig) -> PetersenWitness {
    let (lg, _) = l_graph(cfg);
    let (p, vertices) = petersen();
    let (lp, pedges) = line_graph(&p);
    let explicit_map: Vec<usize> = double_transpositions()
        .iter()
        .map(|s| {
            let c: Vec<Vec<usize>> = s.cycles().into_iter().filter(|c| c.len() == 2).collect();
            let a = vertices.iter().position(|v| v[..] == c[0][..]).expect("duad");
            let b = vertices.iter().position(|v| v[..] == c[1][..]).expect("duad");
            pedges.iter().position(|&(x, y)| (x, y) == (a.min(b), a.max(b))).expect("disjoint duads are adjacent")
        })
        .collect();
    let searched_map = find_isomorphism(&lg, &lp);
    let searched_is_isomorphism = searched_map.as_ref().is_some_and(|m| is_isomorphism(&lg, &lp, m));
    let regular_degree = lg.degree(0);
    PetersenWitness {
        explicit_is_isomorphism: is_isomorphism(&lg, &lp, &explicit_map),
        explicit_map,
        searched_map,
        searched_is_isomorphism,
        regular_degree: lg.is_regular(regular_degree).then_some(regular_degree),
        edge_count: lg.edge_count(),
    }
}

/// Two chordless 5-cycles of `l` curves with no curve of one meeting the other.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PentagonPair {
    pub first: Vec<String>,
    pub second: Vec<String>,
}

/// All pairs of disjoint pentagons in the `l`-graph.
///
/// Each half-pencil `f` is half the sum of either pentagon.
pub fn pentagon_pairs(cfg: &CurveConfig) -> Vec<PentagonPair> {
    let (g, labels) = l_graph(cfg);
    let cycles = g.induced_cycles(5);
    let mut out = Vec::new();
    for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            let (a, b) = (&cycles[i], &cycles[j]);
            if a.iter().all(|x| !b.contains(x)) && g.no_edges_between(a, b) {
                let names = |c: &[usize]| c.iter().map(|&v| labels[v].clone()).collect();
                out.push(PentagonPair { first: names(a), second: names(b) });
            }
        }
    }
    out
}

/// Rational coordinates of the curves in the span of a maximal independent
/// subset, with the subset's Gram matrix.
fn curve_coordinates(cfg: &CurveConfig) -> Result<(RatMatrix, Vec<Vec<BigRational>>)> {
    let gram: RatMatrix = cfg.intersections.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
    let mut chosen: Vec<usize> = Vec::new();
    for i in 0..cfg.len() {
        let mut rows: RatMatrix = chosen.iter().map(|&c| gram[c].clone()).collect();
        rows.push(gram[i].clone());
        if rank_rat(&rows) == rows.len() {
            chosen.push(i);
        }
    }
    let g_b: RatMatrix = chosen.iter().map(|&a| chosen.iter().map(|&b| gram[a][b].clone()).collect()).collect();
    let inv = inverse(&g_b).ok_or_else(|| ConfigError::Relation("chosen curves have degenerate Gram matrix".into()))?;
    let coords: Vec<Vec<BigRational>> = (0..cfg.len())
        .map(|c| {
            let row: Vec<BigRational> = chosen.iter().map(|&b| gram[c][b].clone()).collect();
            // x G_B = row  <=>  x = row G_B^{-1}; G_B is symmetric.
            mat_vec_rat(&inv, &row)
        })
        .collect();
    for a in 0..cfg.len() {
        for b in 0..cfg.len() {
            let p: BigRational = mat_vec_rat(&g_b, &coords[b]).iter().zip(&coords[a]).map(|(x, y)| x * y).sum();
            if p != gram[a][b] {
                return Err(ConfigError::Relation(format!(
                    "({}, {}) = {} is not determined by the numerical classes",
                    cfg.labels[a], cfg.labels[b], cfg.intersections[a][b]
                )));
            }
        }
    }
    Ok((g_b, coords))
}

fn sum_of(coords: &[Vec<BigRational>], idx: impl IntoIterator<Item = usize>, scale: &BigRational) -> Vec<BigRational> {
    let n = coords[0].len();
    let mut out = vec![rat(0); n];
    for i in idx {
        for (o, x) in out.iter_mut().zip(&coords[i]) {
            *o += x * scale;
        }
    }
    out
}

/// Lattice generated by the twenty curves, the six half-pencils `f_j` of the
/// pentagon pairs and the halves `(r_i - r_{i+1})/2`.
///
/// Classes: `r1..r5`, the `l` labels, `f1..f6` and `h = r1 + ... + r5`.
/// Fails naming the relation if a pentagon pair does not give one class or
/// if `Σ r_i ≠ Σ f_j`.
pub fn realize_s5_ns() -> Result<NSRealization> {
    let cfg = s5_configuration();
    let (g_b, coords) = curve_coordinates(&cfg)?;
    let half = ratio(1, 2);
    let pos = |l: &str| cfg.index(l).ok_or_else(|| ConfigError::MissingClass(l.to_string()));
    let mut named: Vec<(String, Vec<BigRational>)> = cfg.labels.iter().cloned().zip(coords.iter().cloned()).collect();
    let pairs = pentagon_pairs(&cfg);
    for (j, pair) in pairs.iter().enumerate() {
        let a: Vec<usize> = pair.first.iter().map(|l| pos(l)).collect::<Result<_>>()?;
        let b: Vec<usize> = pair.second.iter().map(|l| pos(l)).collect::<Result<_>>()?;
        let fa = sum_of(&coords, a, &half);
        if fa != sum_of(&coords, b, &half) {
            return Err(ConfigError::Relation(format!("pentagons of pair {} differ", j + 1)));
        }
        named.push((format!("f{}", j + 1), fa));
    }
    for i in 1..5 {
        let mut v = sum_of(&coords, [pos(&format!("r{i}"))?], &half);
        let w = sum_of(&coords, [pos(&format!("r{}", i + 1))?], &half);
        for (x, y) in v.iter_mut().zip(&w) {
            *x -= y;
        }
        named.push((format!("(r{i}-r{})/2", i + 1), v));
    }
    let h = sum_of(&coords, (1..=5).map(|i| pos(&format!("r{i}"))).collect::<Result<Vec<_>>>()?, &rat(1));
    let f_total = sum_of(
        &named.iter().map(|(_, v)| v.clone()).collect::<Vec<_>>(),
        named.iter().enumerate().filter(|(_, (l, _))| l.starts_with('f')).map(|(i, _)| i),
        &rat(1),
    );
    if h != f_total {
        return Err(ConfigError::Relation("r1 + ... + r5 = f1 + ... + f6".into()));
    }
    named.push(("h".into(), h));
    let gens: Vec<Vec<BigRational>> = named.iter().map(|(_, v)| v.clone()).collect();
    let (lattice, basis) = lattice_from_generators(&g_b, &gens)?;
    let mut class_map = BTreeMap::new();
    for (label, v) in named {
        let c = express_in_basis(&basis, &v)?;
        let c: Vec<BigInt> =
            as_integral(&c).ok_or_else(|| ConfigError::Relation(format!("{label} is not integral")))?;
        class_map.insert(label, c);
    }
    Ok(NSRealization { lattice, class_map })
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct OddInvolution(Permutation);

impl OddInvolution {
    fn is_transposition(&self) -> bool {
        self.0.cycles().iter().filter(|c| c.len() == 2).count() == 1
    }
}

/// The thirty curves `C_σ`, `σ` an odd involution of S6, with S6 acting by
/// conjugation.
///
/// Non-commuting pairs meet once; commuting distinct pairs meet in 0 points
/// when of the same cycle type and in 2 otherwise.
pub fn odd_involution_configuration() -> CurveConfig {
    let mut curves: Vec<OddInvolution> = pairs_of(6)
        .into_iter()
        .map(|(a, b)| OddInvolution(Permutation::from_cycles(6, &[vec![a, b]]).expect("transposition")))
        .collect();
    for s in crate::lattice::golay::synthemes() {
        let cycles: Vec<Vec<usize>> = s.iter().map(|&(a, b)| vec![a, b]).collect();
        curves.push(OddInvolution(Permutation::from_cycles(6, &cycles).expect("syntheme")));
    }
    let pairing = |a: &OddInvolution, b: &OddInvolution| -> i64 {
        if a == b {
            -2
        } else if a.0.compose(&b.0) != b.0.compose(&a.0) {
            1
        } else if a.is_transposition() == b.is_transposition() {
            0
        } else {
            2
        }
    };
    let intersections = curves.iter().map(|a| curves.iter().map(|b| pairing(a, b)).collect()).collect();
    let gens: Vec<Permutation> = ["(1 2)", "(1 2 3 4 5 6)"]
        .iter()
        .map(|s| {
            let g = Permutation::parse(6, s).expect("valid cycle");
            induced(&curves, |c| OddInvolution(c.0.conjugate_by(&g)))
        })
        .collect();
    let action = closure(&gens).ok();
    CurveConfig { labels: curves.iter().map(|c| format!("C{}", compact(&c.0))).collect(), intersections, action }
}
