//! Exact linear algebra over the integers and rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;
pub type RatMatrix = Vec<Vec<BigRational>>;

pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int_vec(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn to_rat_vec(v: &[BigInt]) -> Vec<BigRational> {
    v.iter().map(|x| BigRational::from_integer(x.clone())).collect()
}

pub fn to_rat_matrix(m: &[Vec<BigInt>]) -> RatMatrix {
    m.iter().map(|r| to_rat_vec(r)).collect()
}

pub fn identity_int(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

/// Integer vector if every entry is integral.
pub fn as_integral(v: &[BigRational]) -> Option<Vec<BigInt>> {
    v.iter().map(|x| x.is_integer().then(|| x.to_integer())).collect()
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(entries: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    entries.into_iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

pub fn mat_mul_rat(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> RatMatrix {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| row.iter().zip(b).fold(BigRational::zero(), |acc, (x, brow)| acc + x * &brow[j]))
                .collect()
        })
        .collect()
}

pub fn mat_vec_rat(a: &[Vec<BigRational>], v: &[BigRational]) -> Vec<BigRational> {
    a.iter().map(|row| dot_rat(row, v)).collect()
}

pub fn dot_rat(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn transpose<T: Clone>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

/// `B G B^T` for a basis given by rows of `b`.
pub fn congruence(g: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> RatMatrix {
    let bg = mat_mul_rat(b, g);
    mat_mul_rat(&bg, &transpose(b))
}

/// Determinant by fraction-free elimination on rationals.
pub fn determinant(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    let mut a: RatMatrix = m.to_vec();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let pivot = a[c][c].clone();
        det *= &pivot;
        for r in c + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] / &pivot;
            for k in c..n {
                let t = &f * &a[c][k];
                a[r][k] -= t;
            }
        }
    }
    det
}

/// Reduced row echelon form; returns the pivot columns.
pub fn rref(m: &mut RatMatrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(p, r);
        let inv = m[r][c].recip();
        for k in c..cols {
            m[r][k] = &m[r][k] * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in c..cols {
                    let t = &f * &m[r][k];
                    m[i][k] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank_rat(m: &[Vec<BigRational>]) -> usize {
    let mut a = m.to_vec();
    rref(&mut a).len()
}

pub fn inverse(m: &[Vec<BigRational>]) -> Option<RatMatrix> {
    let n = m.len();
    let mut a: RatMatrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    let piv = rref(&mut a);
    if piv.len() < n || piv.iter().enumerate().any(|(i, &c)| i != c) {
        return None;
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Solve `x M = v` for a row vector `x`, where the rows of `m` are independent.
pub fn solve_left(m: &[Vec<BigRational>], v: &[BigRational]) -> Option<Vec<BigRational>> {
    // Columns of the augmented system are the rows of m.
    let k = m.len();
    let n = v.len();
    let mut a: RatMatrix = (0..n)
        .map(|j| {
            let mut r: Vec<BigRational> = m.iter().map(|row| row[j].clone()).collect();
            r.push(v[j].clone());
            r
        })
        .collect();
    let piv = rref(&mut a);
    if piv.contains(&k) {
        return None;
    }
    let mut x = vec![BigRational::zero(); k];
    for (i, &c) in piv.iter().enumerate() {
        x[c] = a[i][k].clone();
    }
    Some(x)
}

/// Basis of the rational kernel `{x : M x = 0}`.
pub fn rational_kernel(m: &[Vec<BigRational>], cols: usize) -> RatMatrix {
    let mut a = m.to_vec();
    let piv = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![BigRational::zero(); cols];
            x[f] = BigRational::one();
            for (i, &c) in piv.iter().enumerate() {
                x[c] = -a[i][f].clone();
            }
            x
        })
        .collect()
}

/// Extended gcd `(g, s, t)` with `s a + t b = g >= 0`.
fn xgcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Row Hermite normal form `H = U A` with `U` unimodular.
///
/// Zero rows of `H` are kept at the bottom so that the matching rows of `U`
/// span the left kernel of `A`.
pub fn hermite_with_transform(a: &[Vec<BigInt>]) -> (IntMatrix, IntMatrix) {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut h: IntMatrix = a.to_vec();
    let mut u = identity_int(rows);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        for i in r + 1..rows {
            if h[i][c].is_zero() {
                continue;
            }
            if h[r][c].is_zero() {
                h.swap(r, i);
                u.swap(r, i);
                continue;
            }
            let (g, s, t) = xgcd(&h[r][c], &h[i][c]);
            let a_r = &h[r][c] / &g;
            let a_i = &h[i][c] / &g;
            combine_rows(&mut h, r, i, &s, &t, &a_r, &a_i);
            combine_rows(&mut u, r, i, &s, &t, &a_r, &a_i);
        }
        if h[r][c].is_zero() {
            continue;
        }
        if h[r][c].is_negative() {
            h[r].iter_mut().for_each(|x| *x = -x.clone());
            u[r].iter_mut().for_each(|x| *x = -x.clone());
        }
        for i in 0..r {
            let q = h[i][c].div_floor(&h[r][c]);
            if !q.is_zero() {
                sub_multiple(&mut h, i, r, &q);
                sub_multiple(&mut u, i, r, &q);
            }
        }
        r += 1;
    }
    (h, u)
}

fn combine_rows(m: &mut IntMatrix, r: usize, i: usize, s: &BigInt, t: &BigInt, a_r: &BigInt, a_i: &BigInt) {
    for k in 0..m[r].len() {
        let x = m[r][k].clone();
        let y = m[i][k].clone();
        m[r][k] = s * &x + t * &y;
        m[i][k] = a_r * &y - a_i * &x;
    }
}

fn sub_multiple(m: &mut IntMatrix, target: usize, source: usize, q: &BigInt) {
    for k in 0..m[target].len() {
        let t = q * &m[source][k];
        m[target][k] -= t;
    }
}

/// Hermite basis of the row module of `a`, zero rows dropped.
pub fn hermite_basis(a: &[Vec<BigInt>]) -> IntMatrix {
    let (h, _) = hermite_with_transform(a);
    h.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect()
}

/// Basis of `{x in Z^n : A x = 0}`, a saturated sublattice of `Z^n`.
pub fn integer_kernel(a: &[Vec<BigInt>], n: usize) -> IntMatrix {
    if a.is_empty() {
        return identity_int(n);
    }
    let at: IntMatrix = (0..n).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect();
    let (h, u) = hermite_with_transform(&at);
    let basis: IntMatrix = h.iter().zip(u).filter(|(hr, _)| hr.iter().all(Zero::is_zero)).map(|(_, ur)| ur).collect();
    hermite_basis(&basis)
}

/// Integer kernel of a rational matrix, after clearing denominators row by row.
pub fn integer_kernel_rat(a: &[Vec<BigRational>], n: usize) -> IntMatrix {
    let scaled: IntMatrix = a
        .iter()
        .map(|row| {
            let d = common_denominator(row);
            row.iter().map(|x| (x * BigRational::from_integer(d.clone())).to_integer()).collect()
        })
        .collect();
    integer_kernel(&scaled, n)
}

/// `Q`-span of the rows intersected with `Z^n`.
pub fn saturate(rows: &[Vec<BigInt>], n: usize) -> IntMatrix {
    let perp = integer_kernel(rows, n);
    if perp.is_empty() {
        return identity_int(n);
    }
    integer_kernel(&perp, n)
}

/// Z-span of rational vectors as a Hermite basis.
pub fn rational_span_basis(rows: &[Vec<BigRational>]) -> RatMatrix {
    let d = common_denominator(rows.iter().flatten());
    let dr = BigRational::from_integer(d);
    let scaled: IntMatrix = rows.iter().map(|r| r.iter().map(|x| (x * &dr).to_integer()).collect()).collect();
    hermite_basis(&scaled)
        .into_iter()
        .map(|r| r.into_iter().map(|x| BigRational::from_integer(x) / &dr).collect())
        .collect()
}

/// Smith normal form `U A V = D`; returns `(diagonal, U, V)`.
pub fn smith_normal_form(a: &[Vec<BigInt>]) -> (Vec<BigInt>, IntMatrix, IntMatrix) {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut d: IntMatrix = a.to_vec();
    let mut u = identity_int(rows);
    let mut v = identity_int(cols);
    let n = rows.min(cols);
    for t in 0..n {
        // Smallest nonzero entry in the remaining block as pivot.
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !d[i][j].is_zero() && best.is_none_or(|(bi, bj)| d[i][j].abs() < d[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish_snf(d, u, v, n);
            };
            d.swap(t, pi);
            u.swap(t, pi);
            for row in d.iter_mut() {
                row.swap(t, pj);
            }
            for row in v.iter_mut() {
                row.swap(t, pj);
            }
            let mut clean = true;
            for i in t + 1..rows {
                let q = d[i][t].div_floor(&d[t][t]);
                if !q.is_zero() {
                    sub_multiple(&mut d, i, t, &q);
                    sub_multiple(&mut u, i, t, &q);
                }
                if !d[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let q = d[t][j].div_floor(&d[t][t]);
                if !q.is_zero() {
                    for row in d.iter_mut() {
                        let x = &q * &row[t];
                        row[j] -= x;
                    }
                    for row in v.iter_mut() {
                        let x = &q * &row[t];
                        row[j] -= x;
                    }
                }
                if !d[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // Divisibility of the rest of the block by the pivot.
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&d[i][j] % &d[t][t]).is_zero()));
            match bad {
                Some(i) => {
                    for k in 0..cols {
                        let x = d[i][k].clone();
                        d[t][k] += x;
                    }
                    for k in 0..rows {
                        let x = u[i][k].clone();
                        u[t][k] += x;
                    }
                }
                None => break,
            }
        }
        if d[t][t].is_negative() {
            d[t].iter_mut().for_each(|x| *x = -x.clone());
            u[t].iter_mut().for_each(|x| *x = -x.clone());
        }
    }
    finish_snf(d, u, v, n)
}

fn finish_snf(d: IntMatrix, u: IntMatrix, v: IntMatrix, n: usize) -> (Vec<BigInt>, IntMatrix, IntMatrix) {
    let diag = (0..n).map(|i| d[i][i].clone()).collect();
    (diag, u, v)
}

/// Nearest integer, halves rounded up.
pub fn round_rat(x: &BigRational) -> BigInt {
    let two = BigInt::from(2);
    (x.numer() * &two + x.denom()).div_floor(&(x.denom() * &two))
}

pub fn floor_rat(x: &BigRational) -> BigInt {
    x.numer().div_floor(x.denom())
}

/// LLL reduction of a positive definite Gram matrix with parameter 3/4.
///
/// Returns the unimodular transform whose rows are the reduced basis in the
/// original coordinates.
pub fn lll(gram: &[Vec<BigRational>]) -> IntMatrix {
    let n = gram.len();
    if n == 0 {
        return Vec::new();
    }
    let den = common_denominator(gram.iter().flatten());
    let dr = BigRational::from_integer(den);
    let mut g: IntMatrix = gram.iter().map(|r| r.iter().map(|x| (x * &dr).to_integer()).collect()).collect();
    let mut h = identity_int(n);
    let mut lam: IntMatrix = vec![vec![BigInt::zero(); n]; n];
    // d[0] is the empty product; d[i + 1] belongs to basis vector i.
    let mut d: Vec<BigInt> = vec![BigInt::one(); n + 1];
    d[1] = g[0][0].clone();
    let mut k = 1;
    let mut kmax = 0;
    while k < n {
        if k > kmax {
            kmax = k;
            for j in 0..=k {
                let mut u = g[k][j].clone();
                for i in 0..j {
                    u = (&d[i + 1] * &u - &lam[k][i] * &lam[j][i]) / &d[i];
                }
                if j < k {
                    lam[k][j] = u;
                } else {
                    assert!(u.is_positive(), "LLL needs a positive definite form");
                    d[k + 1] = u;
                }
            }
        }
        lll_reduce(&mut g, &mut h, &mut lam, &d, k, k - 1);
        let lhs = BigInt::from(4) * &d[k + 1] * &d[k - 1];
        let rhs = BigInt::from(3) * &d[k] * &d[k] - BigInt::from(4) * &lam[k][k - 1] * &lam[k][k - 1];
        if lhs < rhs {
            lll_swap(&mut g, &mut h, &mut lam, &mut d, k, kmax);
            k = k.saturating_sub(1).max(1);
        } else {
            for l in (0..k.saturating_sub(1)).rev() {
                lll_reduce(&mut g, &mut h, &mut lam, &d, k, l);
            }
            k += 1;
        }
    }
    h
}

fn lll_reduce(g: &mut IntMatrix, h: &mut IntMatrix, lam: &mut IntMatrix, d: &[BigInt], k: usize, l: usize) {
    let two_lam = BigInt::from(2) * &lam[k][l];
    if two_lam.abs() <= d[l + 1] {
        return;
    }
    let q = round_rat(&BigRational::new(lam[k][l].clone(), d[l + 1].clone()));
    sub_multiple(h, k, l, &q);
    // Gram update for b_k <- b_k - q b_l.
    let n = g.len();
    let gkk = &g[k][k] - BigInt::from(2) * &q * &g[k][l] + &q * &q * &g[l][l];
    for j in 0..n {
        if j != k {
            let x = &g[k][j] - &q * &g[l][j];
            g[k][j] = x.clone();
            g[j][k] = x;
        }
    }
    g[k][k] = gkk;
    lam[k][l] = &lam[k][l] - &q * &d[l + 1];
    for i in 0..l {
        let x = &q * &lam[l][i];
        lam[k][i] -= x;
    }
}

fn lll_swap(g: &mut IntMatrix, h: &mut IntMatrix, lam: &mut IntMatrix, d: &mut [BigInt], k: usize, kmax: usize) {
    h.swap(k, k - 1);
    g.swap(k, k - 1);
    for row in g.iter_mut() {
        row.swap(k, k - 1);
    }
    for j in 0..k - 1 {
        let t = lam[k][j].clone();
        lam[k][j] = lam[k - 1][j].clone();
        lam[k - 1][j] = t;
    }
    let l = lam[k][k - 1].clone();
    let b = (&d[k - 1] * &d[k + 1] + &l * &l) / &d[k];
    for i in k + 1..=kmax {
        let t = lam[i][k].clone();
        lam[i][k] = (&d[k + 1] * &lam[i][k - 1] - &l * &t) / &d[k];
        lam[i][k - 1] = (&b * &t + &l * &lam[i][k]) / &d[k + 1];
    }
    d[k] = b;
}

/// All integer `x` with `(x - c)^T P (x - c) <= bound` for positive definite `P`.
///
/// Enumeration follows Fincke and Pohst on the exact quadratic completion of
/// `P`; callers should LLL-reduce first for speed.
pub fn fincke_pohst(p: &[Vec<BigRational>], center: &[BigRational], bound: &BigRational) -> Vec<Vec<BigInt>> {
    let n = p.len();
    if n == 0 {
        return if bound.is_negative() { Vec::new() } else { vec![Vec::new()] };
    }
    // Q(x) = sum_i q[i][i] (x_i + sum_{j>i} q[i][j] x_j)^2
    let mut q: RatMatrix = p.to_vec();
    for i in 0..n {
        for j in i + 1..n {
            q[j][i] = q[i][j].clone();
            q[i][j] = &q[i][j] / &q[i][i];
        }
        for k in i + 1..n {
            for l in k..n {
                let t = &q[k][i] * &q[i][l];
                q[k][l] -= t;
            }
        }
    }
    let mut out = Vec::new();
    let mut x = vec![BigInt::zero(); n];
    fp_level(&q, center, n - 1, bound.clone(), &mut x, &mut out);
    out
}

fn fp_level(
    q: &RatMatrix,
    c: &[BigRational],
    i: usize,
    remaining: BigRational,
    x: &mut Vec<BigInt>,
    out: &mut Vec<Vec<BigInt>>,
) {
    let n = q.len();
    // Shift from the already fixed coordinates.
    let mut s = BigRational::zero();
    for j in i + 1..n {
        s += &q[i][j] * (BigRational::from_integer(x[j].clone()) - &c[j]);
    }
    let m = &c[i] - &s;
    let b = &remaining / &q[i][i];
    let r = floor_rat(&b).sqrt();
    let lo = floor_rat(&m) - &r - BigInt::one();
    let hi = floor_rat(&m) + &r + BigInt::from(2);
    let mut xi = lo;
    while xi <= hi {
        let t = BigRational::from_integer(xi.clone()) - &m;
        let used = &q[i][i] * &t * &t;
        if used <= remaining {
            x[i] = xi.clone();
            let rest = &remaining - &used;
            if i == 0 {
                out.push(x.clone());
            } else {
                fp_level(q, c, i - 1, rest, x, out);
            }
        }
        xi += BigInt::one();
    }
    x[i] = BigInt::zero();
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        rows.iter().map(|r| int_vec(r)).collect()
    }

    #[test]
    fn hermite_kernel() {
        let a = m(&[&[2, 4, 6], &[1, 2, 3]]);
        let k = integer_kernel(&a, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(a.iter().all(|row| row.iter().zip(v).map(|(x, y)| x * y).sum::<BigInt>().is_zero()));
        }
    }

    #[test]
    fn smith_of_small_matrix() {
        let (d, u, v) = smith_normal_form(&m(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]));
        assert_eq!(d, int_vec(&[2, 6, 12]));
        let ur = to_rat_matrix(&u);
        let vr = to_rat_matrix(&v);
        let a = to_rat_matrix(&m(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]));
        let prod = mat_mul_rat(&mat_mul_rat(&ur, &a), &vr);
        for (i, row) in prod.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                let want = if i == j { BigRational::from_integer(d[i].clone()) } else { BigRational::zero() };
                assert_eq!(*x, want);
            }
        }
    }

    #[test]
    fn saturation_of_doubled_vector() {
        let s = saturate(&m(&[&[2, 2, 0]]), 3);
        assert_eq!(s, m(&[&[1, 1, 0]]));
    }

    #[test]
    fn fincke_pohst_counts_a2_roots() {
        let p = vec![vec![rat(2), rat(-1)], vec![rat(-1), rat(2)]];
        let v = fincke_pohst(&p, &[rat(0), rat(0)], &rat(2));
        assert_eq!(v.len(), 7);
    }
}
