//! Exact enumeration of lattice vectors of bounded norm.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::linalg::{
    fincke_pohst, hermite_with_transform, integer_kernel_rat, inverse, lll, mat_vec_rat, to_rat_matrix, to_rat_vec,
    IntMatrix, RatMatrix,
};
use super::{IntegerLattice, LatticeError, Result};

/// Maps `y` in the coordinates of an LLL-reduced basis back to the original.
fn apply(transform: &IntMatrix, y: &[BigInt]) -> Vec<BigInt> {
    let n = transform.first().map_or(0, Vec::len);
    let mut out = vec![BigInt::zero(); n];
    for (c, row) in y.iter().zip(transform) {
        if c.is_zero() {
            continue;
        }
        for (o, b) in out.iter_mut().zip(row) {
            *o += c * b;
        }
    }
    out
}

fn definite_sign(l: &IntegerLattice) -> Result<BigRational> {
    let r = l.rank();
    match l.signature() {
        (p, 0, 0) if p == r => Ok(BigRational::from_integer(1.into())),
        (0, q, 0) if q == r => Ok(BigRational::from_integer((-1).into())),
        _ => Err(LatticeError::NeedsSlicing),
    }
}

/// Nonzero vectors with `|x^2| <= bound` in a definite lattice, both signs.
pub fn vectors_up_to(l: &IntegerLattice, bound: &BigRational) -> Result<Vec<Vec<BigInt>>> {
    if l.rank() == 0 {
        return Ok(Vec::new());
    }
    let sign = definite_sign(l)?;
    let p: RatMatrix = l.gram().iter().map(|r| r.iter().map(|x| x * &sign).collect()).collect();
    let t = lll(&p);
    let tr = to_rat_matrix(&t);
    let reduced = super::linalg::congruence(&p, &tr);
    let zero = vec![BigRational::zero(); l.rank()];
    let mut out: Vec<Vec<BigInt>> = fincke_pohst(&reduced, &zero, bound)
        .into_iter()
        .filter(|y| y.iter().any(|c| !c.is_zero()))
        .map(|y| apply(&t, &y))
        .collect();
    out.sort();
    Ok(out)
}

fn canonical_sign(v: &[BigInt]) -> bool {
    v.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_positive())
}

/// Vectors of exact norm `norm` in a definite lattice, one per `±` pair.
///
/// The representative has its first nonzero coordinate positive. Indefinite
/// lattices need [`vectors_in_slab`].
pub fn short_vectors(l: &IntegerLattice, norm: &BigRational) -> Result<Vec<Vec<BigInt>>> {
    let all = vectors_up_to(l, &norm.abs())?;
    Ok(all.into_iter().filter(|v| canonical_sign(v) && l.norm_int(v) == *norm).collect())
}

/// Vectors `x` with `(x, h) = k` and `x^2 = norm` in a lattice of signature
/// `(1, n - 1)`, for `h` of positive norm.
///
/// The slab is a translate of the negative definite lattice `h^perp`, so the
/// search is finite.
pub fn vectors_in_slab(l: &IntegerLattice, h: &[BigInt], k: &BigInt, norm: &BigRational) -> Result<Vec<Vec<BigInt>>> {
    let n = l.rank();
    let hr = to_rat_vec(h);
    let hh = l.norm(&hr);
    if !hh.is_positive() || l.signature() != (1, n - 1, 0) {
        return Err(LatticeError::NeedsSlicing);
    }
    // Linear functional x -> (x, h) as an integer row.
    let w = mat_vec_rat(l.gram(), &hr);
    let den = super::linalg::common_denominator(&w);
    let wi: Vec<BigInt> = w.iter().map(|x| (x * BigRational::from_integer(den.clone())).to_integer()).collect();
    let target = k * &den;
    let column: IntMatrix = wi.iter().map(|x| vec![x.clone()]).collect();
    let (hnf, u) = hermite_with_transform(&column);
    let g = hnf[0][0].clone();
    if g.is_zero() || !(&target % &g).is_zero() {
        return Ok(Vec::new());
    }
    let x0: Vec<BigInt> = u[0].iter().map(|c| c * (&target / &g)).collect();

    let kernel = integer_kernel_rat(std::slice::from_ref(&w), n);
    let kr = to_rat_matrix(&kernel);
    let gk = super::linalg::congruence(l.gram(), &kr);
    let x0r = to_rat_vec(&x0);
    let gx0 = mat_vec_rat(l.gram(), &x0r);
    let bgx: Vec<BigRational> = kr.iter().map(|row| super::linalg::dot_rat(row, &gx0)).collect();
    let gk_inv = inverse(&gk).ok_or(LatticeError::Degenerate)?;
    let a = mat_vec_rat(&gk_inv, &bgx);
    let kk = BigRational::from_integer(k.clone());
    let bound = &kk * &kk / &hh - norm;
    if bound.is_negative() {
        return Ok(Vec::new());
    }
    // -(y + a)^2 <= bound on the negative definite kernel.
    let p: RatMatrix = gk.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
    let t = lll(&p);
    let tr = to_rat_matrix(&t);
    let reduced = super::linalg::congruence(&p, &tr);
    // Center -a expressed in the reduced basis.
    let t_inv = inverse(&tr).ok_or(LatticeError::Degenerate)?;
    let neg_a: Vec<BigRational> = a.iter().map(|x| -x).collect();
    let center: Vec<BigRational> =
        (0..t.len()).map(|j| neg_a.iter().zip(&t_inv).map(|(c, row)| c * &row[j]).sum()).collect();
    let mut out = Vec::new();
    for y in fincke_pohst(&reduced, &center, &bound) {
        let yk = apply(&t, &y);
        let mut x = x0.clone();
        for (c, row) in yk.iter().zip(&kernel) {
            for (xi, b) in x.iter_mut().zip(row) {
                *xi += c * b;
            }
        }
        if l.norm_int(&x) == *norm {
            out.push(x);
        }
    }
    out.sort();
    Ok(out)
}
