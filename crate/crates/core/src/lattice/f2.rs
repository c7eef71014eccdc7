//! Quadratic spaces over the two-element field and mod 2 reductions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::{IntegerLattice, LatticeError, Result};

/// Vector over F2 as a sequence of 0/1 entries.
pub type F2Vector = Vec<u8>;
/// Matrix over F2, rows are vectors.
pub type F2Matrix = Vec<Vec<u8>>;

/// Symmetric bilinear form over F2 with an optional quadratic refinement
/// given by its values on the basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct F2QuadraticSpace {
    pub bilinear: F2Matrix,
    pub quadratic: Option<F2Vector>,
}

fn dot(a: &[u8], b: &[u8]) -> u8 {
    a.iter().zip(b).fold(0, |s, (x, y)| s ^ (x & y))
}

fn add(a: &[u8], b: &[u8]) -> F2Vector {
    a.iter().zip(b).map(|(x, y)| x ^ y).collect()
}

fn unit(n: usize, i: usize) -> F2Vector {
    (0..n).map(|j| u8::from(i == j)).collect()
}

/// Row-reduced basis of the span and the pivot columns.
pub fn f2_row_reduce(rows: &[F2Vector], n: usize) -> (F2Matrix, Vec<usize>) {
    let mut m: F2Matrix = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] == 1) else { continue };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && m[i][c] == 1 {
                let row = m[r].clone();
                m[i] = add(&m[i], &row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn f2_rank(rows: &[F2Vector], n: usize) -> usize {
    f2_row_reduce(rows, n).0.len()
}

/// Basis of `{x : M x = 0}` for `M` with `n` columns.
pub fn f2_kernel(m: &[F2Vector], n: usize) -> F2Matrix {
    let (r, pivots) = f2_row_reduce(m, n);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = unit(n, f);
            for (row, &p) in r.iter().zip(&pivots) {
                v[p] = row[f];
            }
            v
        })
        .collect()
}

/// Coordinates of `v` in the basis `rows`, if it lies in their span.
pub fn f2_solve(rows: &[F2Vector], v: &[u8]) -> Option<F2Vector> {
    let k = rows.len();
    let n = v.len();
    // Augment with an identity to track combinations.
    let mut aug: F2Matrix = rows.iter().enumerate().map(|(i, r)| [r.clone(), unit(k, i)].concat()).collect();
    let mut target: F2Vector = [v.to_vec(), vec![0; k]].concat();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..k).find(|&i| aug[i][c] == 1) else { continue };
        aug.swap(r, p);
        for i in 0..k {
            if i != r && aug[i][c] == 1 {
                let row = aug[r].clone();
                aug[i] = add(&aug[i], &row);
            }
        }
        if target[c] == 1 {
            target = add(&target, &aug[r]);
        }
        r += 1;
    }
    if target[..n].contains(&1) {
        return None;
    }
    Some(target[n..].to_vec())
}

/// Product `x M` of a row vector and a matrix.
pub fn f2_apply(x: &[u8], m: &[F2Vector]) -> F2Vector {
    let n = m.first().map_or(0, Vec::len);
    let mut out = vec![0; n];
    for (c, row) in x.iter().zip(m) {
        if *c == 1 {
            out = add(&out, row);
        }
    }
    out
}

impl F2QuadraticSpace {
    pub fn new(bilinear: F2Matrix, quadratic: Option<F2Vector>) -> Result<Self> {
        let n = bilinear.len();
        let symmetric = (0..n).all(|i| bilinear[i].len() == n && (0..n).all(|j| bilinear[i][j] == bilinear[j][i]));
        if !symmetric {
            return Err(LatticeError::NotSymmetric);
        }
        let s = F2QuadraticSpace { bilinear, quadratic };
        if s.quadratic.is_some() && !s.is_alternating() {
            return Err(LatticeError::Failed("a quadratic refinement needs an alternating form".into()));
        }
        Ok(s)
    }

    pub fn dim(&self) -> usize {
        self.bilinear.len()
    }

    pub fn b(&self, x: &[u8], y: &[u8]) -> u8 {
        dot(x, &f2_apply(y, &self.bilinear))
    }

    /// `q(x)` from the basis values and the bilinear cross terms.
    pub fn q(&self, x: &[u8]) -> Option<u8> {
        let qv = self.quadratic.as_ref()?;
        let mut s = dot(x, qv);
        for i in 0..x.len() {
            for j in i + 1..x.len() {
                s ^= x[i] & x[j] & self.bilinear[i][j];
            }
        }
        Some(s)
    }

    pub fn is_alternating(&self) -> bool {
        (0..self.dim()).all(|i| self.bilinear[i][i] == 0)
    }

    /// `{x : b(x, x) = 0}`, a subspace since `x -> b(x, x)` is linear.
    pub fn alternating_part(&self) -> F2Matrix {
        let diag: F2Vector = (0..self.dim()).map(|i| self.bilinear[i][i]).collect();
        f2_kernel(&[diag], self.dim())
    }

    pub fn radical(&self) -> F2Matrix {
        f2_kernel(&self.bilinear, self.dim())
    }

    /// Restriction to the span of independent vectors.
    pub fn restrict(&self, basis: &[F2Vector]) -> Self {
        let bilinear = basis.iter().map(|x| basis.iter().map(|y| self.b(x, y)).collect()).collect();
        let quadratic = self.quadratic.as_ref().map(|_| basis.iter().map(|x| self.q(x).unwrap()).collect());
        F2QuadraticSpace { bilinear, quadratic }
    }

    /// `q(x + y) = q(x) + q(y) + b(x, y)` on all pairs of basis vectors.
    pub fn refinement_holds(&self) -> bool {
        let n = self.dim();
        self.quadratic.is_some()
            && (0..n).all(|i| {
                (0..n).all(|j| {
                    let (x, y) = (unit(n, i), unit(n, j));
                    self.q(&add(&x, &y)) == Some(self.q(&x).unwrap() ^ self.q(&y).unwrap() ^ self.b(&x, &y))
                })
            })
    }

    /// Reduction to a normal form: hyperbolic pairs with `q = 0`, at most one
    /// pair with `q = 1` on both members, then the radical.
    pub fn normal_form(&self) -> Result<F2NormalForm> {
        if self.quadratic.is_none() {
            return Err(LatticeError::Failed("normal form needs a quadratic refinement".into()));
        }
        let n = self.dim();
        let q = |x: &[u8]| self.q(x).unwrap();

        // Radical with at most one vector of q = 1.
        let mut radical = self.radical();
        let mut anisotropic_radical = None;
        if let Some(i) = radical.iter().position(|r| q(r) == 1) {
            let r1 = radical.remove(i);
            for r in radical.iter_mut() {
                if q(r) == 1 {
                    *r = add(r, &r1);
                }
            }
            anisotropic_radical = Some(r1);
        }

        // Complement of the radical, then symplectic Gram-Schmidt.
        let mut all_rad: F2Matrix = radical.clone();
        all_rad.extend(anisotropic_radical.clone());
        let mut rest: F2Matrix = Vec::new();
        for i in 0..n {
            let v = unit(n, i);
            let mut trial = all_rad.clone();
            trial.extend(rest.iter().cloned());
            trial.push(v.clone());
            if f2_rank(&trial, n) == trial.len() {
                rest.push(v);
            }
        }
        let mut pairs: Vec<(F2Vector, F2Vector)> = Vec::new();
        while let Some(e) = rest.pop() {
            let Some(j) = rest.iter().position(|f| self.b(&e, f) == 1) else {
                return Err(LatticeError::Failed("complement of the radical is degenerate".into()));
            };
            let f = rest.remove(j);
            for v in rest.iter_mut() {
                // v <- v + b(v, f) e + b(v, e) f
                let mut w = v.clone();
                if self.b(v, &f) == 1 {
                    w = add(&w, &e);
                }
                if self.b(v, &e) == 1 {
                    w = add(&w, &f);
                }
                *v = w;
            }
            pairs.push((e, f));
        }

        let normalize = |(e, f): (F2Vector, F2Vector)| -> (F2Vector, F2Vector) {
            match (q(&e), q(&f)) {
                (1, 0) => {
                    let s = add(&e, &f);
                    (f, s)
                }
                (0, 1) => {
                    let s = add(&e, &f);
                    (e, s)
                }
                _ => (e, f),
            }
        };
        let mut pairs: Vec<(F2Vector, F2Vector)> = pairs.into_iter().map(normalize).collect();
        // Two anisotropic pairs make two hyperbolic ones.
        loop {
            let odd: Vec<usize> = (0..pairs.len()).filter(|&i| q(&pairs[i].0) == 1).collect();
            if odd.len() < 2 {
                break;
            }
            let (e1, f1) = pairs[odd[0]].clone();
            let (e2, f2) = pairs[odd[1]].clone();
            let e1n = add(&e1, &e2);
            pairs[odd[0]] = normalize((e1n, f1.clone()));
            pairs[odd[1]] = normalize((e2, add(&f1, &f2)));
        }
        let mut arf = u8::from(pairs.iter().any(|(e, _)| q(e) == 1));
        if arf == 1 {
            if let Some(r1) = &anisotropic_radical {
                let i = pairs.iter().position(|(e, _)| q(e) == 1).unwrap();
                let (e, f) = pairs[i].clone();
                pairs[i] = normalize((add(&e, r1), f));
                arf = 0;
            }
        }
        // Anisotropic pair last among the pairs.
        pairs.sort_by_key(|(e, _)| q(e));
        let mut basis = Vec::new();
        for (e, f) in &pairs {
            basis.push(e.clone());
            basis.push(f.clone());
        }
        basis.extend(anisotropic_radical.clone());
        basis.extend(radical.iter().cloned());
        Ok(F2NormalForm {
            dim: n,
            hyperbolic_pairs: pairs.len() - usize::from(arf),
            arf,
            radical_dim: radical.len() + usize::from(anisotropic_radical.is_some()),
            radical_anisotropic: anisotropic_radical.is_some(),
            basis,
        })
    }

    /// Arf invariant of a nondegenerate space.
    pub fn arf(&self) -> Option<u8> {
        let nf = self.normal_form().ok()?;
        (nf.radical_dim == 0).then_some(nf.arf)
    }
}

/// Normal form of a quadratic space over F2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct F2NormalForm {
    pub dim: usize,
    pub hyperbolic_pairs: usize,
    /// 1 when an anisotropic pair survives (only possible when `q` vanishes on the radical).
    pub arf: u8,
    pub radical_dim: usize,
    /// Whether `q` is nonzero on the radical.
    pub radical_anisotropic: bool,
    /// New basis in old coordinates, in normal-form order.
    #[serde(skip)]
    pub basis: F2Matrix,
}

impl F2NormalForm {
    /// Invariants determining the isometry class.
    pub fn invariants(&self) -> (usize, usize, u8, usize, bool) {
        (self.dim, self.hyperbolic_pairs, self.arf, self.radical_dim, self.radical_anisotropic)
    }
}

/// Isometry `V -> W` as a matrix whose row `i` is the image of basis vector `i`.
pub fn f2_isometry(v: &F2QuadraticSpace, w: &F2QuadraticSpace) -> Option<F2Matrix> {
    let nv = v.normal_form().ok()?;
    let nw = w.normal_form().ok()?;
    if nv.invariants() != nw.invariants() {
        return None;
    }
    // x = c N_V  maps to  c N_W.
    let n = v.dim();
    let map: F2Matrix = (0..n)
        .map(|i| {
            let c = f2_solve(&nv.basis, &unit(n, i)).expect("normal basis spans");
            f2_apply(&c, &nw.basis)
        })
        .collect();
    is_isometry(v, w, &map).then_some(map)
}

/// Checks `q(Tx) = q(x)` and `b(Tx, Ty) = b(x, y)` on a basis, plus bijectivity.
pub fn is_isometry(v: &F2QuadraticSpace, w: &F2QuadraticSpace, map: &[F2Vector]) -> bool {
    let n = v.dim();
    if map.len() != n || w.dim() != n || f2_rank(map, n) != n {
        return false;
    }
    (0..n).all(|i| {
        let x = unit(n, i);
        v.q(&x) == w.q(&map[i]) && (0..n).all(|j| v.b(&x, &unit(n, j)) == w.b(&map[i], &map[j]))
    })
}

/// Mod 2 reduction `l = L/2L` of an integral lattice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mod2Reduction {
    /// `b(x, y) = (x, y) mod 2`, with `q(x) = (x^2)/2 mod 2` when `L` is even.
    pub space: F2QuadraticSpace,
    /// Basis of `l^alt` in the coordinates of `l`.
    pub alternating_basis: F2Matrix,
    /// `l^alt` with the refinement `q(x) = (x^2)/2 mod 2`.
    pub alternating: F2QuadraticSpace,
}

fn mod2(x: &BigInt) -> u8 {
    x.mod_floor(&BigInt::from(2)).to_u8().unwrap()
}

/// `x^2 / 2 mod 2` for an integral vector of even norm.
fn half_norm_mod2(l: &IntegerLattice, x: &[BigInt]) -> u8 {
    let n = l.norm_int(x).to_integer();
    mod2(&(n / 2))
}

pub fn mod2_reduction(l: &IntegerLattice) -> Result<Mod2Reduction> {
    if !l.is_integral() {
        return Err(LatticeError::NotIntegral);
    }
    let n = l.rank();
    let g: Vec<Vec<BigInt>> = l.gram().iter().map(|r| r.iter().map(|x| x.to_integer()).collect()).collect();
    let bilinear: F2Matrix = g.iter().map(|r| r.iter().map(mod2).collect()).collect();
    let lift = |v: &[u8]| -> Vec<BigInt> { v.iter().map(|&c| BigInt::from(c)).collect() };
    let even = l.is_even();
    let quadratic = even.then(|| (0..n).map(|i| mod2(&(&g[i][i] / 2))).collect());
    let space = F2QuadraticSpace { bilinear, quadratic };
    let alternating_basis = if even { (0..n).map(|i| unit(n, i)).collect() } else { space.alternating_part() };
    let restricted = F2QuadraticSpace {
        bilinear: alternating_basis.iter().map(|x| alternating_basis.iter().map(|y| space.b(x, y)).collect()).collect(),
        quadratic: Some(alternating_basis.iter().map(|x| half_norm_mod2(l, &lift(x))).collect()),
    };
    Ok(Mod2Reduction { space, alternating_basis, alternating: restricted })
}

/// `(x^2)/2 mod 2` of an explicit lift, for checking independence of lifts.
pub fn lift_half_norm(l: &IntegerLattice, x: &[BigInt]) -> Option<u8> {
    let n = l.norm_int(x);
    if !n.is_integer() || !(n.to_integer() % BigInt::from(2)).is_zero() {
        return None;
    }
    Some(half_norm_mod2(l, x))
}
