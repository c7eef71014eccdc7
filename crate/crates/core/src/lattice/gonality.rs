//! Gonality of polarizations and isotropic sequences in hyperbolic lattices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::enumerate::vectors_in_slab;
use super::linalg::{
    as_integral, congruence, inverse, mat_mul_rat, rat, to_rat_matrix, to_rat_vec, IntMatrix, RatMatrix,
};
use super::{t237, IntegerLattice, LatticeError, Result};

/// Minimal degree of a half-pencil and the half-pencils attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Gonality {
    pub degree: BigRational,
    pub phi: u64,
    #[serde(skip)]
    pub half_pencils: IntMatrix,
}

impl Gonality {
    pub fn count(&self) -> usize {
        self.half_pencils.len()
    }
}

pub(crate) fn is_primitive(v: &[BigInt]) -> bool {
    v.iter().fold(BigInt::zero(), |g, c| g.gcd(c)).is_one()
}

/// Primitive isotropic `f` with `(f, h) = k`.
pub fn isotropic_at(l: &IntegerLattice, h: &[BigInt], k: u64) -> Result<IntMatrix> {
    let found = vectors_in_slab(l, h, &BigInt::from(k), &BigRational::zero())?;
    Ok(found.into_iter().filter(|f| is_primitive(f)).collect())
}

/// `Phi(h)`: the least `(f, h) > 0` over primitive isotropic `f`, with all
/// minimizers. The search stops at `(h^2)`, which always bounds `Phi`.
pub fn gonality(l: &IntegerLattice, h: &[BigInt]) -> Result<Gonality> {
    let degree = l.norm_int(h);
    if !degree.is_positive() {
        return Err(LatticeError::NeedsSlicing);
    }
    let cap = degree.to_integer().to_u64().ok_or_else(|| LatticeError::SearchCap("degree too large".into()))?;
    for k in 1..=cap {
        let found = isotropic_at(l, h, k)?;
        if !found.is_empty() {
            return Ok(Gonality { degree, phi: k, half_pencils: found });
        }
    }
    Err(LatticeError::SearchCap(format!("no isotropic vector with (f, h) <= {cap}")))
}

/// Degree, gonality and half-pencil count of `h`.
pub fn gonality_profile(l: &IntegerLattice, h: &[BigInt]) -> Result<(BigRational, u64, usize)> {
    let g = gonality(l, h)?;
    Ok((g.degree.clone(), g.phi, g.count()))
}

/// Dual basis `b_0..b_9` of `T_{2,3,7}`: `(b_i, r_j) = delta_ij`.
pub fn dual_basis() -> IntMatrix {
    let inv = inverse(t237().gram()).expect("unimodular");
    inv.iter().map(|row| as_integral(row).expect("unimodular")).collect()
}

/// An isotropic sequence `f_1..f_k` in `T_{2,3,7}` with the dual basis
/// written in it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsotropicSequence {
    pub vectors: IntMatrix,
    pub dual_basis: IntMatrix,
    /// Coefficients of each `b_i` in `f_1..f_10`; empty for `k < 10`.
    pub dual_in_sequence: RatMatrix,
    /// `3 b_0 = f_1 + ... + f_10`.
    pub b0_identity: bool,
    /// `b_4 = f_5 + ... + f_10`.
    pub b4_identity: bool,
    /// `2 b_2 = (b_0 - f_1 - f_2) + f_3 + ... + f_10`.
    pub b2_identity: bool,
}

fn add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sum_rows<'a>(rows: impl IntoIterator<Item = &'a Vec<BigInt>>, n: usize) -> Vec<BigInt> {
    rows.into_iter().fold(vec![BigInt::zero(); n], |acc, r| add(&acc, r))
}

fn scale(v: &[BigInt], c: i64) -> Vec<BigInt> {
    v.iter().map(|x| x * c).collect()
}

/// The first `k` members of the isotropic 10-sequence formed by the ten
/// half-pencils of `b_0`.
///
/// They are ordered so that `f_5..f_10` are the half-pencils of `b_4` and
/// `f_1, f_2` pair to 5 with `b_2`; ties are broken lexicographically.
pub fn isotropic_sequence(k: usize) -> Result<IsotropicSequence> {
    if k > 10 {
        return Err(LatticeError::Failed(format!("isotropic sequences have length at most 10, got {k}")));
    }
    let l = t237();
    let b = dual_basis();
    let g = gonality(&l, &b[0])?;
    let mut f = g.half_pencils;
    let key = |v: &Vec<BigInt>, i: usize| l.pair_int(v, &b[i]);
    f.sort_by(|x, y| key(y, 4).cmp(&key(x, 4)).then(key(y, 2).cmp(&key(x, 2))).then(x.cmp(y)));
    for i in 0..f.len() {
        for j in 0..f.len() {
            if l.pair_int(&f[i], &f[j]) != rat(i64::from(i != j)) {
                return Err(LatticeError::Failed("half-pencils of b0 are not an isotropic sequence".into()));
            }
        }
    }
    let n = 10;
    let total = sum_rows(&f, n);
    let b0_identity = scale(&b[0], 3) == total;
    let b4_identity = f.len() == 10 && b[4] == sum_rows(&f[4..], n);
    let b2_identity = f.len() == 10 && {
        let lhs = scale(&b[2], 2);
        let rhs = add(&sum_rows(&f[2..], n), &add(&b[0], &scale(&add(&f[0], &f[1]), -1)));
        lhs == rhs
    };
    let dual_in_sequence = if f.len() == 10 {
        let fr = to_rat_matrix(&f);
        let finv = inverse(&fr).ok_or(LatticeError::DependentGenerators)?;
        mat_mul_rat(&to_rat_matrix(&b), &finv)
    } else {
        Vec::new()
    };
    f.truncate(k);
    Ok(IsotropicSequence { vectors: f, dual_basis: b, dual_in_sequence, b0_identity, b4_identity, b2_identity })
}

/// Extends an isotropic sequence of length at least 2 to length `target`
/// by depth-first search.
pub fn isotropic_sequence_in(l: &IntegerLattice, partial: &[Vec<BigInt>], target: usize) -> Result<IntMatrix> {
    if partial.len() < 2 {
        return Err(LatticeError::Failed("extension needs at least two isotropic vectors".into()));
    }
    let mut seq = partial.to_vec();
    if extend(l, &mut seq, target)? {
        Ok(seq)
    } else {
        Err(LatticeError::Failed(format!("no isotropic {target}-sequence extends the given one")))
    }
}

fn extend(l: &IntegerLattice, seq: &mut IntMatrix, target: usize) -> Result<bool> {
    if seq.len() >= target {
        return Ok(true);
    }
    let n = l.rank();
    let h = sum_rows(seq.iter(), n);
    let k = seq.len() as u64;
    let candidates = isotropic_at(l, &h, k)?;
    for c in candidates {
        if seq.iter().all(|f| l.pair_int(f, &c) == rat(1)) {
            seq.push(c);
            if extend(l, seq, target)? {
                return Ok(true);
            }
            seq.pop();
        }
    }
    Ok(false)
}

/// Isometry `T_{2,3,7} -> target` sending the isotropic 10-sequence of
/// [`isotropic_sequence`] to `sequence`.
///
/// Rows of the result are the images of `r_0..r_9` in target coordinates.
pub fn find_isometry_from_t237(target: &IntegerLattice, sequence: &[Vec<BigInt>]) -> Result<IntMatrix> {
    if sequence.len() != 10 || target.rank() != 10 {
        return Err(LatticeError::WrongLength { got: sequence.len(), rank: 10 });
    }
    let src = isotropic_sequence(10)?;
    let finv = inverse(&to_rat_matrix(&src.vectors)).ok_or(LatticeError::DependentGenerators)?;
    let a = mat_mul_rat(&finv, &to_rat_matrix(sequence));
    let ai: IntMatrix = a.iter().map(|r| as_integral(r)).collect::<Option<_>>().ok_or(LatticeError::NotInLattice)?;
    if congruence(target.gram(), &to_rat_matrix(&ai)) != *t237().gram() {
        return Err(LatticeError::GramNotPreserved);
    }
    Ok(ai)
}

/// Image of a `T_{2,3,7}` vector under an isometry from [`find_isometry_from_t237`].
pub fn transport(isometry: &IntMatrix, v: &[BigInt]) -> Vec<BigInt> {
    let n = isometry.first().map_or(0, Vec::len);
    let mut out = vec![BigInt::zero(); n];
    for (c, row) in v.iter().zip(isometry) {
        for (o, x) in out.iter_mut().zip(row) {
            *o += c * x;
        }
    }
    out
}

/// Preimage of a target vector under an isometry from [`find_isometry_from_t237`].
pub fn pull_back(isometry: &IntMatrix, v: &[BigInt]) -> Option<Vec<BigInt>> {
    let inv = inverse(&to_rat_matrix(isometry))?;
    let vr = to_rat_vec(v);
    let n = inv.first().map_or(0, Vec::len);
    let x: Vec<BigRational> = (0..n).map(|j| vr.iter().zip(&inv).map(|(c, row)| c * &row[j]).sum()).collect();
    as_integral(&x)
}
