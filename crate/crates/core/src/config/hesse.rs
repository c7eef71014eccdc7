//! The lattice of the ten elliptic pencils of a Hesse–Godeaux surface and
//! the invariant polarizations with their gonality.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::lattice::linalg::{as_integral, identity_int, rat, to_rat_matrix, to_rat_vec, IntMatrix, RatMatrix};
use crate::lattice::{
    express_in_basis, find_isometry_from_t237, gonality, isotropic_sequence_in, lattice_from_generators, pull_back,
    root_type, t237, transport, RootType,
};

use super::{ConfigError, NSRealization, Result};

fn pencil(k: usize, l: usize) -> String {
    format!("f{k}{l}")
}

/// Labels `f00..f22` in the order `3k + l`.
fn pencils() -> Vec<String> {
    (0..3).flat_map(|k| (0..3).map(move |l| pencil(k, l))).collect()
}

/// Lattice on `h, f00..f22` with `h² = 4`, `(h, f_kl) = 2` and
/// `(f_kl, f_k'l') = 1 - δ`, extended by `f_inf = (-3h + Σ f_kl)/2`.
///
/// Classes: `h`, `f00..f22`, `finf` and `f'kl = h - f_kl`.
pub fn hesse_pencil_lattice() -> Result<NSRealization> {
    let n = 10;
    let gram: RatMatrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match (i, j) {
                    (0, 0) => rat(4),
                    (0, _) | (_, 0) => rat(2),
                    _ => rat(i64::from(i != j)),
                })
                .collect()
        })
        .collect();
    let mut named: Vec<(String, Vec<BigRational>)> = Vec::new();
    let e = to_rat_matrix(&identity_int(n));
    named.push(("h".into(), e[0].clone()));
    for (i, p) in pencils().into_iter().enumerate() {
        named.push((p, e[i + 1].clone()));
    }
    let mut f_inf = vec![BigRational::new(1.into(), 2.into()); n];
    f_inf[0] = BigRational::new((-3).into(), 2.into());
    named.push(("finf".into(), f_inf));
    for (i, p) in pencils().into_iter().enumerate() {
        let v: Vec<BigRational> = e[0].iter().zip(&e[i + 1]).map(|(a, b)| a - b).collect();
        named.push((p.replacen('f', "f'", 1), v));
    }
    let gens: Vec<Vec<BigRational>> = named.iter().map(|(_, v)| v.clone()).collect();
    let (lattice, basis) = lattice_from_generators(&gram, &gens)?;
    let mut class_map = BTreeMap::new();
    for (label, v) in named {
        let c = express_in_basis(&basis, &v)?;
        let c: Vec<BigInt> =
            as_integral(&c).ok_or_else(|| ConfigError::Relation(format!("{label} is not integral")))?;
        class_map.insert(label, c);
    }
    let real = NSRealization { lattice, class_map };
    for (a, b, expected) in [("h", "finf", 3), ("finf", "finf", 0)] {
        if real.pair(a, b)? != rat(expected) {
            return Err(ConfigError::Relation(format!("({a}, {b}) = {expected}")));
        }
    }
    for p in pencils() {
        if real.pair("finf", &p)? != rat(1) {
            return Err(ConfigError::Relation(format!("(finf, {p}) = 1")));
        }
    }
    Ok(real)
}

/// Invariant class of a group with its degree, complement and gonality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Polarization {
    pub group: String,
    /// The class as a combination of named classes.
    pub expression: String,
    pub class: Vec<BigInt>,
    pub degree: BigRational,
    pub complement_roots: RootType,
    pub phi: u64,
    pub half_pencil_count: usize,
    /// Half-pencils in lattice coordinates, sorted.
    #[serde(skip)]
    pub half_pencils: IntMatrix,
    /// Labels of the half-pencils when each is a named class.
    pub half_pencil_labels: Option<Vec<String>>,
    /// Whether the half-pencils computed directly agree with the ones
    /// transported from `T_{2,3,7}`.
    pub transport_agrees: bool,
}

/// Invariant polarization for `S5` (on [`super::realize_s5_ns`]) or `N72`,
/// `A6` (on [`hesse_pencil_lattice`]).
///
/// Gonality is computed in `T_{2,3,7}` after pulling the class back along an
/// isometry built from an isotropic 10-sequence extending the named
/// pencils, then compared with a direct computation.
pub fn invariant_polarization(real: &NSRealization, which: &str) -> Result<Polarization> {
    let (terms, seeds): (Vec<(i64, &str)>, Vec<String>) = match which {
        "S5" => (
            ["r1", "r2", "r3", "r4", "r5"].into_iter().map(|r| (1, r)).collect(),
            (1..=6).map(|j| format!("f{j}")).collect(),
        ),
        "N72" => (vec![(3, "h"), (-1, "finf")], pencils().into_iter().chain(["finf".to_string()]).collect()),
        "A6" => (vec![(1, "h"), (1, "finf")], pencils().into_iter().chain(["finf".to_string()]).collect()),
        other => return Err(ConfigError::UnknownGroup(other.to_string())),
    };
    let expression = terms
        .iter()
        .map(|(c, l)| match c {
            1 => format!("+{l}"),
            -1 => format!("-{l}"),
            c if *c > 0 => format!("+{c}{l}"),
            c => format!("{c}{l}"),
        })
        .collect::<String>()
        .trim_start_matches('+')
        .to_string();
    let class = real.combination(&terms)?;
    let l = &real.lattice;
    let degree = l.norm_int(&class);
    let complement = l.orthogonal_complement(&[to_rat_vec(&class)]);
    let complement_roots = root_type(&complement.lattice)?;

    let seed: Vec<Vec<BigInt>> = seeds.iter().map(|s| real.class(s).cloned()).collect::<Result<_>>()?;
    let sequence = isotropic_sequence_in(l, &seed, 10)?;
    let iso = find_isometry_from_t237(l, &sequence)?;
    let pulled =
        pull_back(&iso, &class).ok_or_else(|| ConfigError::Relation("class outside the isometry image".into()))?;
    let g = gonality(&t237(), &pulled)?;
    let mut transported: IntMatrix = g.half_pencils.iter().map(|f| transport(&iso, f)).collect();
    transported.sort();
    let direct = gonality(l, &class)?;
    let mut half_pencils = direct.half_pencils;
    half_pencils.sort();
    let transport_agrees = direct.phi == g.phi && half_pencils == transported;
    let half_pencil_labels: Option<Vec<String>> =
        half_pencils.iter().map(|f| real.label_of(f).map(str::to_string)).collect::<Option<Vec<_>>>().map(|mut v| {
            v.sort();
            v
        });
    Ok(Polarization {
        group: which.to_string(),
        expression,
        class,
        degree,
        complement_roots,
        phi: g.phi,
        half_pencil_count: transported.len(),
        half_pencils,
        half_pencil_labels,
        transport_agrees,
    })
}
