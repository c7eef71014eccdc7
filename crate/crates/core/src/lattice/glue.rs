//! Overlattices of orthogonal sums obtained by adjoining glue vectors.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::f2::F2Vector;
use super::linalg::{determinant, identity_int, rat, rational_span_basis, to_rat_matrix, RatMatrix};
use super::{IntegerLattice, LatticeError, Result};

/// Overlattice of `L1 + L2` with its basis in direct-sum coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluedLattice {
    pub summands: (IntegerLattice, IntegerLattice),
    pub glue_vectors: RatMatrix,
    pub basis: RatMatrix,
    pub result: IntegerLattice,
    /// Index of `L1 + L2` in the result.
    pub index: BigInt,
}

impl GluedLattice {
    pub fn is_even(&self) -> bool {
        self.result.is_even()
    }
}

/// Adjoins rational vectors (direct-sum coordinates) to `L1 + L2`.
///
/// Fails naming the first pair of generators with non-integral pairing;
/// generators are numbered with the sum basis first and glue vectors after.
pub fn glue(l1: &IntegerLattice, l2: &IntegerLattice, vectors: &[Vec<BigRational>]) -> Result<GluedLattice> {
    let sum = l1.direct_sum(l2);
    let n = sum.rank();
    if let Some(v) = vectors.iter().find(|v| v.len() != n) {
        return Err(LatticeError::WrongLength { got: v.len(), rank: n });
    }
    let mut gens: RatMatrix = to_rat_matrix(&identity_int(n));
    gens.extend(vectors.iter().cloned());
    for i in 0..gens.len() {
        for j in i.max(n)..gens.len() {
            let p = sum.pair(&gens[i], &gens[j]);
            if !p.is_integer() {
                return Err(LatticeError::NonIntegralGlue(i, j, p.to_string()));
            }
        }
    }
    let basis = rational_span_basis(&gens);
    let result = sum.sublattice(&basis);
    let index = (BigRational::one() / determinant(&basis).abs()).to_integer();
    Ok(GluedLattice { summands: (l1.clone(), l2.clone()), glue_vectors: vectors.to_vec(), basis, result, index })
}

/// Glue of `L1(2)` and `L2(2)` by the vectors `(x/2, T(x)/2)` for `x` running
/// over a basis of a subspace of `L1/2L1`.
///
/// `domain` holds F2 vectors in `L1` coordinates and `images` the matching
/// F2 vectors in `L2` coordinates.
pub fn glue_along_f2_map(
    l1: &IntegerLattice,
    l2: &IntegerLattice,
    domain: &[F2Vector],
    images: &[F2Vector],
) -> Result<GluedLattice> {
    if domain.len() != images.len() {
        return Err(LatticeError::WrongLength { got: images.len(), rank: domain.len() });
    }
    let half = BigRational::new(1.into(), 2.into());
    let vectors: RatMatrix = domain
        .iter()
        .zip(images)
        .map(|(x, y)| x.iter().chain(y).map(|&c| rat(i64::from(c)) * &half).collect())
        .collect();
    glue(&l1.rescale(&rat(2)), &l2.rescale(&rat(2)), &vectors)
}

/// Whether two bases (rows, same ambient) span the same lattice.
pub fn same_lattice(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> bool {
    a.len() == b.len() && super::contained_in(a, b) && super::contained_in(b, a)
}
