//! Coinvariant lattices of S5, N72 and A6 in the Niemeier lattice of type
//! `24 A1`, their two halves `L+` and `L-`, and the embeddings of `L-` into
//! `I_{2,10}` and the anti-Enriques lattice.
//!
//! Vectors of the ambient space are written `sum c_i e_i / 2` with roots
//! `e_i` of norm `-2`, so the ambient Gram in `c` coordinates is `-I/2`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::perm::{PermGroup, Permutation};

use super::f2::{f2_isometry, f2_solve, is_isometry, mod2_reduction, F2Matrix, F2Vector, Mod2Reduction};
use super::glue::{glue, glue_along_f2_map, same_lattice, GluedLattice};
use super::golay::{s6_invariant_golay_code, word_of, BinaryCode, S6On24};
use super::linalg::{
    as_integral, int_vec, mat_mul_rat, rat, ratio, solve_left, to_rat_matrix, to_rat_vec, IntMatrix, RatMatrix,
};
use super::roots::{root_type, RootType};
use super::{named_lattice, short_vectors, DiscriminantGroup, Embedded, IntegerLattice, LatticeError, Result};

/// One of the three groups, with its star point and the dodecad `Omega+`.
#[derive(Debug, Clone)]
pub struct MathieuSubgroup {
    pub n: usize,
    pub name: &'static str,
    pub group: PermGroup,
    pub star: usize,
    pub omega_plus: Vec<usize>,
    pub omega_minus: Vec<usize>,
}

impl MathieuSubgroup {
    pub fn orbit_lengths_plus(&self) -> Result<Vec<usize>> {
        let domain: Vec<usize> = self.omega_plus.iter().copied().filter(|&p| p != self.star).collect();
        sorted_orbits(&self.group, &domain)
    }

    pub fn orbit_lengths_minus(&self) -> Result<Vec<usize>> {
        sorted_orbits(&self.group, &self.omega_minus)
    }
}

fn sorted_orbits(g: &PermGroup, domain: &[usize]) -> Result<Vec<usize>> {
    let mut v = g.orbit_lengths(domain).map_err(|e| LatticeError::Failed(e.to_string()))?;
    v.sort_unstable();
    Ok(v)
}

fn p6(text: &str) -> Permutation {
    Permutation::parse(6, text).expect("valid permutation of six points")
}

/// S5 (`n = 6`), N72 (`n = 9`) and A6 (`n = 10`) inside S6 on 24 points.
pub fn mathieu_subgroups(action: &S6On24) -> Result<Vec<MathieuSubgroup>> {
    let first: Vec<usize> = (1..=12).collect();
    let second: Vec<usize> = (13..=24).collect();
    let specs: [(usize, &str, Vec<Permutation>, usize, bool); 3] = [
        (6, "S5", vec![p6("(1 2)"), p6("(1 2 3 4 5)")], 6, true),
        (
            9,
            "N72",
            vec![p6("(1 2)"), p6("(1 2 3)"), p6("(4 5)"), p6("(4 5 6)"), p6("(1 4)(2 5)(3 6)")],
            action.bisection_point(&[1, 2, 3]),
            false,
        ),
        (10, "A6", vec![p6("(1 2 3)"), p6("(2 3 4 5 6)")], 13, false),
    ];
    specs
        .into_iter()
        .map(|(n, name, gens, star, natural_plus)| {
            let group = action.lift_group(&gens)?;
            let (omega_plus, omega_minus) =
                if natural_plus { (first.clone(), second.clone()) } else { (second.clone(), first.clone()) };
            Ok(MathieuSubgroup { n, name, group, star, omega_plus, omega_minus })
        })
        .collect()
}

/// Ambient space of `c` coordinates.
fn ambient() -> IntegerLattice {
    let g: RatMatrix = (0..24).map(|i| (0..24).map(|j| if i == j { ratio(-1, 2) } else { rat(0) }).collect()).collect();
    IntegerLattice::new(g).expect("diagonal")
}

fn permute(v: &[BigRational], p: &Permutation) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); v.len()];
    for (i, x) in v.iter().enumerate() {
        out[p.image(i + 1) - 1] = x.clone();
    }
    out
}

/// Matrix of a coordinate permutation on a lattice with basis in `c` coordinates.
fn induced_action(basis: &[Vec<BigRational>], p: &Permutation) -> Result<IntMatrix> {
    basis
        .iter()
        .map(|b| solve_left(basis, &permute(b, p)).and_then(|c| as_integral(&c)).ok_or(LatticeError::GramNotPreserved))
        .collect()
}

/// Sublattice with its basis in `c` coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Placed {
    pub lattice: IntegerLattice,
    pub basis: RatMatrix,
}

fn span_in_ambient(gens: &[Vec<BigRational>]) -> Placed {
    let (lattice, basis) = ambient().span(gens);
    Placed { lattice, basis }
}

fn coinvariant(l: &Placed, g: &PermGroup) -> Result<Placed> {
    let mats: Vec<IntMatrix> = g.generators().iter().map(|p| induced_action(&l.basis, p)).collect::<Result<_>>()?;
    let (_, co) = l.lattice.invariant_coinvariant(&mats)?;
    Ok(Placed { basis: mat_mul_rat(&to_rat_matrix(&co.basis), &l.basis), lattice: co.lattice })
}

fn unit(i: usize) -> Vec<BigRational> {
    (0..24).map(|j| if j == i { rat(1) } else { rat(0) }).collect()
}

/// `N`: the vectors `sum c_i e_i / 2` with `c mod 2` in the code.
pub fn niemeier(code: &BinaryCode) -> Placed {
    let mut gens: RatMatrix = (0..24).map(|i| unit(i).iter().map(|x| x * rat(2)).collect()).collect();
    for w in &code.basis {
        gens.push((0..24).map(|i| rat(i64::from(w >> i & 1))).collect());
    }
    span_in_ambient(&gens)
}

/// `N(2) ∩` span of the dodecad: `N_{+-}(2)` generated by `e_i` and the half sum.
pub fn dodecad_lattice(points: &[usize]) -> Placed {
    let mut gens: RatMatrix = points.iter().map(|&i| unit(i - 1).iter().map(|x| x * rat(2)).collect()).collect();
    let w = word_of(points.iter().copied());
    gens.push((0..24).map(|i| rat(i64::from(w >> i & 1))).collect());
    span_in_ambient(&gens)
}

fn restrict(v: &[BigRational], points: &[usize]) -> Vec<BigRational> {
    (0..24).map(|i| if points.contains(&(i + 1)) { v[i].clone() } else { BigRational::zero() }).collect()
}

fn mod2_vec(v: &[BigInt]) -> F2Vector {
    v.iter().map(|c| u8::from((c % BigInt::from(2)) != BigInt::zero())).collect()
}

/// Results for one of the three groups.
#[derive(Debug, Clone)]
pub struct CoinvariantReport {
    pub n: usize,
    pub name: &'static str,
    pub orbits_plus: Vec<usize>,
    pub orbits_minus: Vec<usize>,
    /// `L+ = (N+)_G`, even root lattice.
    pub l_plus: IntegerLattice,
    pub l_plus_roots: RootType,
    /// Whether `L+` is spanned by its roots.
    pub l_plus_is_root_lattice: bool,
    /// `L- = (N-)_G`, odd of rank 10.
    pub l_minus: IntegerLattice,
    pub l_minus_roots: RootType,
    /// Index of the root sublattice in `L-`.
    pub l_minus_root_index: BigInt,
    pub q_plus: Mod2Reduction,
    pub q_minus: Mod2Reduction,
    /// Normal-form isometry `(l+, q+) -> (l-^alt, q-)` in `l-^alt` coordinates.
    pub normal_form_isometry: Option<F2Matrix>,
    /// Isometry read off from `N_G`, in `l-` coordinates.
    pub induced_map: F2Matrix,
    pub induced_map_is_isometry: bool,
    pub induced_map_is_equivariant: bool,
    pub n_g: IntegerLattice,
    pub glued: GluedLattice,
    pub glue_matches_n_g: bool,
    pub n_g_roots: usize,
    pub n_g_discriminant: DiscriminantGroup,
    pub trivial_on_discriminant: bool,
}

/// `N+-(2)`, `N` and the three coinvariant computations.
pub struct AppendixData {
    pub code: BinaryCode,
    pub action: S6On24,
    pub niemeier: Placed,
    pub reports: Vec<CoinvariantReport>,
}

/// Discriminant of `N_{+-}(2)` for the first dodecad.
pub fn dodecad_discriminant() -> Result<DiscriminantGroup> {
    dodecad_lattice(&(1..=12).collect::<Vec<_>>()).lattice.discriminant_group()
}

pub fn run(progress: &mut dyn FnMut(&str)) -> Result<AppendixData> {
    let (code, action) = s6_invariant_golay_code()?;
    let n = niemeier(&code);
    let mut reports = Vec::new();
    for g in mathieu_subgroups(&action)? {
        progress(&format!("coinvariants of {}", g.name));
        reports.push(coinvariant_report(&n, &g)?);
    }
    Ok(AppendixData { code, action, niemeier: n, reports })
}

fn root_index(l: &IntegerLattice, roots: &RootType) -> Result<BigInt> {
    if roots.rank() != l.rank() {
        return Err(LatticeError::Failed("root sublattice has smaller rank".into()));
    }
    let r = l.sublattice(&to_rat_matrix(&roots.simple_roots));
    let ratio = r.determinant() / l.determinant();
    let idx = ratio.to_integer().sqrt();
    if BigRational::from_integer(&idx * &idx) != ratio {
        return Err(LatticeError::Failed("root index is not an integer".into()));
    }
    Ok(idx)
}

fn coinvariant_report(n: &Placed, g: &MathieuSubgroup) -> Result<CoinvariantReport> {
    let half = ratio(1, 2);
    let plus2 = coinvariant(&dodecad_lattice(&g.omega_plus), &g.group)?;
    let minus2 = coinvariant(&dodecad_lattice(&g.omega_minus), &g.group)?;
    let l_plus = plus2.lattice.rescale(&half);
    let l_minus = minus2.lattice.rescale(&half);
    let l_plus_roots = root_type(&l_plus)?;
    let l_plus_is_root_lattice = root_index(&l_plus, &l_plus_roots)?.is_one();
    let l_minus_roots = root_type(&l_minus)?;
    let l_minus_root_index = root_index(&l_minus, &l_minus_roots)?;
    let q_plus = mod2_reduction(&l_plus)?;
    let q_minus = mod2_reduction(&l_minus)?;
    let normal_form_isometry = f2_isometry(&q_plus.alternating, &q_minus.alternating);

    let n_g = coinvariant(n, &g.group)?;
    // (x/2, y/2) components of N_G in L+(2) + L-(2).
    let mut pairs: Vec<(F2Vector, F2Vector)> = Vec::new();
    for v in &n_g.basis {
        let two = |w: Vec<BigRational>| -> Vec<BigRational> { w.iter().map(|x| x * rat(2)).collect() };
        let xp = solve_left(&plus2.basis, &two(restrict(v, &g.omega_plus))).and_then(|c| as_integral(&c));
        let xm = solve_left(&minus2.basis, &two(restrict(v, &g.omega_minus))).and_then(|c| as_integral(&c));
        match (xp, xm) {
            (Some(a), Some(b)) => pairs.push((mod2_vec(&a), mod2_vec(&b))),
            _ => return Err(LatticeError::Failed("N_G does not project into the halves".into())),
        }
    }
    let induced_map = linear_map_from_pairs(&pairs, l_plus.rank())?;
    let in_alt: Option<F2Matrix> = induced_map.iter().map(|y| f2_solve(&q_minus.alternating_basis, y)).collect();
    let induced_map_is_isometry =
        in_alt.as_ref().is_some_and(|m| is_isometry(&q_plus.alternating, &q_minus.alternating, m));
    let induced_map_is_equivariant = g.group.generators().iter().all(|p| {
        let (Ok(ap), Ok(am)) = (induced_action(&plus2.basis, p), induced_action(&minus2.basis, p)) else {
            return false;
        };
        let ap2: F2Matrix = ap.iter().map(|r| mod2_vec(r)).collect();
        let am2: F2Matrix = am.iter().map(|r| mod2_vec(r)).collect();
        (0..l_plus.rank()).all(|i| {
            let gx = &ap2[i];
            super::f2::f2_apply(gx, &induced_map) == super::f2::f2_apply(&induced_map[i], &am2)
        })
    });
    let domain: F2Matrix = (0..l_plus.rank()).map(|i| (0..l_plus.rank()).map(|j| u8::from(i == j)).collect()).collect();
    let glued = glue_along_f2_map(&l_plus, &l_minus, &domain, &induced_map)?;
    let stacked: RatMatrix = plus2.basis.iter().chain(&minus2.basis).cloned().collect();
    let glued_ambient = mat_mul_rat(&glued.basis, &stacked);
    let glue_matches_n_g = same_lattice(&glued_ambient, &n_g.basis);

    let n_g_roots = short_vectors(&n_g.lattice, &rat(-2))?.len();
    let n_g_discriminant = n_g.lattice.discriminant_group()?;
    let trivial_on_discriminant = g.group.generators().iter().all(|p| {
        let Ok(m) = induced_action(&n_g.basis, p) else { return false };
        let mr = to_rat_matrix(&m);
        n_g_discriminant.generators.iter().all(|w| {
            let image: Vec<BigRational> =
                (0..mr.len()).map(|j| w.iter().zip(&mr).map(|(c, row)| c * &row[j]).sum()).collect();
            let diff: Vec<BigRational> = image.iter().zip(w).map(|(a, b)| a - b).collect();
            as_integral(&diff).is_some()
        })
    });
    Ok(CoinvariantReport {
        n: g.n,
        name: g.name,
        orbits_plus: g.orbit_lengths_plus()?,
        orbits_minus: g.orbit_lengths_minus()?,
        l_plus,
        l_plus_roots,
        l_plus_is_root_lattice,
        l_minus,
        l_minus_roots,
        l_minus_root_index,
        q_plus,
        q_minus,
        normal_form_isometry,
        induced_map,
        induced_map_is_isometry,
        induced_map_is_equivariant,
        n_g: n_g.lattice,
        glued,
        glue_matches_n_g,
        n_g_roots,
        n_g_discriminant,
        trivial_on_discriminant,
    })
}

/// Linear map over F2 determined by `(x, T x)` pairs spanning the domain.
fn linear_map_from_pairs(pairs: &[(F2Vector, F2Vector)], dim: usize) -> Result<F2Matrix> {
    let xs: F2Matrix = pairs.iter().map(|p| p.0.clone()).collect();
    let mut map = Vec::new();
    for i in 0..dim {
        let e: F2Vector = (0..dim).map(|j| u8::from(i == j)).collect();
        let c = f2_solve(&xs, &e).ok_or_else(|| LatticeError::Failed("glue does not cover L+/2L+".into()))?;
        let ys: F2Matrix = pairs.iter().map(|p| p.1.clone()).collect();
        map.push(super::f2::f2_apply(&c, &ys));
    }
    // Consistency on all pairs.
    for (x, y) in pairs {
        if super::f2::f2_apply(x, &map) != *y {
            return Err(LatticeError::Failed("glue is not a function of the L+ component".into()));
        }
    }
    Ok(map)
}

/// Embeddings of `L-` into `I_{2,10}` and of `L-(2)` into the anti-Enriques lattice.
#[derive(Debug, Clone)]
pub struct OddEmbeddings {
    /// Primitive hull of `A9 + A1` and its index over the root span.
    pub hull: Embedded,
    pub hull_index: BigInt,
    pub hull_roots: RootType,
    /// Orthogonal complement of the two norm-3 vectors.
    pub complement: Embedded,
    pub complement_roots: RootType,
    /// `h1 - e2 - e4 - e6 - e8` lies in the complement but not in its root span.
    pub witness_in_complement: bool,
    pub witness_in_root_span: bool,
    pub complement_root_index: BigInt,
    pub anti_enriques: GluedLattice,
    /// Index of the saturation of `L-(2)` in the anti-Enriques lattice, per case.
    pub primitive_indices: Vec<BigInt>,
}

fn i210_vector(h: [i64; 2], e: &[(usize, i64)]) -> Vec<BigInt> {
    let mut v = vec![0i64; 12];
    v[0] = h[0];
    v[1] = h[1];
    for &(i, c) in e {
        v[1 + i] += c;
    }
    int_vec(&v)
}

pub fn odd_embeddings() -> Result<OddEmbeddings> {
    let i = named_lattice("I2,10")?;
    let all_e: Vec<(usize, i64)> = (1..=10).map(|k| (k, -1)).collect();
    // A9 + A1: e_i - e_{i+1} and 2(h1 + h2) - sum e.
    let mut gens: IntMatrix = (1..10).map(|k| i210_vector([0, 0], &[(k, 1), (k + 1, -1)])).collect();
    gens.push(i210_vector([2, 2], &all_e));
    let (hull, hull_index) = i.primitive_hull(&gens)?;
    let hull_roots = root_type(&hull.lattice)?;

    let u = i210_vector([2, 2], &(1..=5).map(|k| (k, -1)).collect::<Vec<_>>());
    let w = i210_vector([2, -2], &(6..=10).map(|k| (k, -1)).collect::<Vec<_>>());
    let complement = i.orthogonal_complement(&[to_rat_vec(&u), to_rat_vec(&w)]);
    let complement_roots = root_type(&complement.lattice)?;
    let mut r: IntMatrix = Vec::new();
    for (a, s) in [(1usize, 1i64), (6, -1)] {
        for k in a..a + 4 {
            r.push(i210_vector([0, 0], &[(k, 1), (k + 1, -1)]));
        }
        r.push(i210_vector([1, s], &(a..a + 4).map(|k| (k, -1)).collect::<Vec<_>>()));
    }
    let witness = i210_vector([1, 0], &[(2, -1), (4, -1), (6, -1), (8, -1)]);
    let wr = to_rat_vec(&witness);
    let witness_in_complement = complement.from_ambient(&wr).is_some_and(|c| as_integral(&c).is_some());
    let witness_in_root_span = solve_left(&to_rat_matrix(&r), &wr).is_some_and(|c| as_integral(&c).is_some());
    let complement_root_index = {
        let rl = i.sublattice(&to_rat_matrix(&r));
        (rl.determinant() / complement.lattice.determinant()).to_integer().sqrt()
    };

    // Anti-Enriques lattice: I_{2,10}(2) plus (h1 + h2 - sum e)/2.
    let half_vector: Vec<BigRational> =
        to_rat_vec(&i210_vector([1, 1], &all_e)).iter().map(|x| x * ratio(1, 2)).collect();
    let anti_enriques = glue(&i.rescale(&rat(2)), &IntegerLattice::empty(), &[half_vector])?;
    let mut primitive_indices = Vec::new();
    for emb in [&hull, &complement] {
        let coords: Option<IntMatrix> = emb
            .basis
            .iter()
            .map(|b| solve_left(&anti_enriques.basis, &to_rat_vec(b)).and_then(|c| as_integral(&c)))
            .collect();
        let coords = coords.ok_or(LatticeError::NotInLattice)?;
        primitive_indices.push(anti_enriques.result.primitive_hull(&coords)?.1);
    }
    Ok(OddEmbeddings {
        hull,
        hull_index,
        hull_roots,
        complement,
        complement_roots,
        witness_in_complement,
        witness_in_root_span,
        complement_root_index,
        anti_enriques,
        primitive_indices,
    })
}

/// Counts of discriminant-form values `q(x)` in `Q/2Z` over all elements.
pub fn discriminant_census(l: &IntegerLattice) -> Result<BTreeMap<String, usize>> {
    let d = l.discriminant_group()?;
    let orders: Vec<usize> = d.invariants.iter().map(|x| usize::try_from(x).unwrap_or(usize::MAX)).collect();
    let total: usize = orders.iter().product();
    if total > 1 << 16 {
        return Err(LatticeError::SearchCap(format!("discriminant group of order {total}")));
    }
    let modulus = if d.even { rat(2) } else { rat(1) };
    let mut out = BTreeMap::new();
    let mut idx = vec![0usize; orders.len()];
    for _ in 0..total {
        let v: Vec<BigRational> =
            (0..l.rank()).map(|j| idx.iter().zip(&d.generators).map(|(&c, g)| &g[j] * rat(c as i64)).sum()).collect();
        let q = super::reduce_mod(&l.norm(&v), &modulus);
        *out.entry(q.to_string()).or_insert(0) += 1;
        for (k, o) in idx.iter_mut().zip(&orders) {
            *k += 1;
            if *k < *o {
                break;
            }
            *k = 0;
        }
    }
    Ok(out)
}

/// Summary facts about the anti-Enriques lattice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AntiEnriquesSummary {
    pub signature: (usize, usize, usize),
    pub even: bool,
    pub determinant: String,
    pub invariants: Vec<u64>,
    pub half_vector_norm: String,
    pub matches_reference_census: bool,
}

pub fn anti_enriques_summary(a: &GluedLattice) -> Result<AntiEnriquesSummary> {
    let l = &a.result;
    let reference = named_lattice("U+U(2)+E8(2)")?;
    let census = discriminant_census(l)?;
    let reference_census = discriminant_census(&reference)?;
    let ambient = a.summands.0.direct_sum(&a.summands.1);
    let half_vector_norm = ambient.norm(&a.glue_vectors[0]).to_string();
    Ok(AntiEnriquesSummary {
        signature: l.signature(),
        even: l.is_even(),
        determinant: l.determinant().to_string(),
        invariants: l.discriminant_group()?.invariant_factors(),
        half_vector_norm,
        matches_reference_census: census == reference_census
            && l.signature() == reference.signature()
            && l.is_even() == reference.is_even()
            && l.determinant().abs() == reference.determinant().abs(),
    })
}
