//! Irreducible character tables by Dixon's modular method.
//!
//! Class-sum structure constants are reduced modulo a prime `p ≡ 1 (mod e)`,
//! `e` the exponent, and `F_p^k` is split into common eigenspaces. Each
//! eigenvector gives a character modulo `p`; eigenvalue multiplicities on
//! cyclic subgroups then lift it to exact cyclotomic values.

use num_rational::Ratio;

use super::{MrepError, Result};
use crate::cyclo::Cyclo;
use crate::perm::{is_prime, ConjugacyClassPartition, GroupTable, PermGroup};

/// Largest group order for which a table is computed.
pub const CHARACTER_TABLE_CAP: usize = 400;

/// Complete table of irreducible characters with exact values in `Z[ζ_e]`.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    order: usize,
    exponent: usize,
    classes: ConjugacyClassPartition,
    class_sizes: Vec<usize>,
    class_orders: Vec<usize>,
    inverse_class: Vec<usize>,
    irreducibles: Vec<Vec<Cyclo>>,
    degrees: Vec<u64>,
}

impl CharacterTable {
    pub fn group_order(&self) -> usize {
        self.order
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    pub fn classes(&self) -> &ConjugacyClassPartition {
        &self.classes
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    /// Element order on each class.
    pub fn class_orders(&self) -> &[usize] {
        &self.class_orders
    }

    /// Rows are irreducible characters, columns are classes; the trivial character is row 0.
    pub fn irreducibles(&self) -> &[Vec<Cyclo>] {
        &self.irreducibles
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    /// `(f, χ) = (1/|G|) Σ h_i f(g_i) conj χ(g_i)` for an integer class function `f`.
    pub fn inner_product(&self, f: &[i64], row: usize) -> Ratio<i64> {
        let e = self.exponent;
        let mut s = Cyclo::zero(e);
        for (i, chi) in self.irreducibles[row].iter().enumerate() {
            let w = (self.class_sizes[i] as i64) * f[i];
            s = &s + &chi.conj().scale(w);
        }
        let num = s.as_integer().expect("inner product of a rational class function with a character is rational");
        Ratio::new(num, self.order as i64)
    }

    /// Exact row orthogonality and the degree-sum identity.
    pub fn verify(&self) -> bool {
        let e = self.exponent;
        let k = self.class_sizes.len();
        if self.irreducibles.len() != k {
            return false;
        }
        let deg_sq: u64 = self.degrees.iter().map(|d| d * d).sum();
        if deg_sq != self.order as u64 {
            return false;
        }
        for a in 0..k {
            for b in a..k {
                let mut s = Cyclo::zero(e);
                for i in 0..k {
                    let t = &self.irreducibles[a][i] * &self.irreducibles[b][i].conj();
                    s = &s + &t.scale(self.class_sizes[i] as i64);
                }
                let expect = if a == b { self.order as i64 } else { 0 };
                if s.as_integer() != Some(expect) {
                    return false;
                }
            }
        }
        // Values on the class of g^{-1} are conjugates.
        self.irreducibles.iter().all(|row| (0..k).all(|i| row[self.inverse_class[i]] == row[i].conj()))
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Least prime `p ≡ 1 (mod e)` with `p > bound`.
fn choose_prime(e: usize, bound: usize) -> u64 {
    let e = e as u64;
    let mut p = (bound as u64 / e + 1) * e + 1;
    while !is_prime(p) {
        p += e;
    }
    p
}

/// An element of exact multiplicative order `e` in `F_p^*`.
fn root_of_unity(e: usize, p: u64) -> u64 {
    let e = e as u64;
    let primes: Vec<u64> = crate::perm::factorize(e).into_iter().map(|(q, _)| q).collect();
    for g in 2..p {
        let z = pow_mod(g, (p - 1) / e, p);
        if primes.iter().all(|&q| pow_mod(z, e / q, p) != 1) {
            return z;
        }
    }
    1
}

/// Row-reduce in place; returns pivot columns.
fn rref(rows: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, pr);
        let inv = inv_mod(rows[r][c], p);
        for v in rows[r].iter_mut() {
            *v = *v * inv % p;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..ncols {
                    rows[i][j] = (rows[i][j] + p - f * rows[r][j] % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Null space of a square matrix (acting on column vectors) over `F_p`.
fn kernel(m: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = m.len();
    let mut rows = m.to_vec();
    let pivots = rref(&mut rows, p);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - rows[r][f]) % p;
            }
            v
        })
        .collect()
}

/// Split a subspace (rows in reduced echelon form) into eigenspaces of `m`.
fn split(space: &[Vec<u64>], pivots: &[usize], m: &[Vec<u64>], p: u64) -> Option<Vec<Vec<Vec<u64>>>> {
    let d = space.len();
    let k = m.len();
    // R[a][b]: coordinate a of M v_b in the basis.
    let images: Vec<Vec<u64>> =
        space.iter().map(|v| (0..k).map(|j| (0..k).map(|l| m[j][l] * v[l] % p).sum::<u64>() % p).collect()).collect();
    let r: Vec<Vec<u64>> = (0..d).map(|a| (0..d).map(|b| images[b][pivots[a]]).collect()).collect();
    let mut parts = Vec::new();
    let mut total = 0;
    for lambda in 0..p {
        let shifted: Vec<Vec<u64>> = (0..d)
            .map(|a| (0..d).map(|b| if a == b { (r[a][b] + p - lambda) % p } else { r[a][b] }).collect())
            .collect();
        let ker = kernel(&shifted, p);
        if ker.is_empty() {
            continue;
        }
        total += ker.len();
        let part: Vec<Vec<u64>> = ker
            .iter()
            .map(|c| (0..k).map(|j| (0..d).map(|b| c[b] * space[b][j] % p).sum::<u64>() % p).collect())
            .collect();
        parts.push(part);
        if total == d {
            break;
        }
    }
    (total == d).then_some(parts)
}

/// Irreducible characters of a group of order at most [`CHARACTER_TABLE_CAP`].
pub fn character_table(g: &PermGroup) -> Result<CharacterTable> {
    let n = g.order()?;
    if n > CHARACTER_TABLE_CAP {
        return Err(MrepError::OrderCap { order: n, cap: CHARACTER_TABLE_CAP });
    }
    let t = g.table()?;
    let els = g.elements()?;
    let table_classes = t.classes();
    let class_of = t.class_index();
    let classes = ConjugacyClassPartition {
        representatives: table_classes.iter().map(|c| els[c[0]].clone()).collect(),
        classes: table_classes.iter().map(|c| c.iter().map(|&i| els[i].clone()).collect()).collect(),
    };
    let (irreducibles, degrees, exponent) = dixon(t, &table_classes, &class_of)?;
    let class_sizes: Vec<usize> = table_classes.iter().map(|c| c.len()).collect();
    let class_orders = table_classes.iter().map(|c| t.elt_order(c[0])).collect();
    let inverse_class = table_classes.iter().map(|c| class_of[t.inv(c[0])]).collect();
    let ct =
        CharacterTable { order: n, exponent, classes, class_sizes, class_orders, inverse_class, irreducibles, degrees };
    if !ct.verify() {
        return Err(MrepError::CharacterTable("orthogonality check failed".into()));
    }
    Ok(ct)
}

type Rows = (Vec<Vec<Cyclo>>, Vec<u64>, usize);

fn dixon(t: &GroupTable, classes: &[Vec<usize>], class_of: &[usize]) -> Result<Rows> {
    let n = t.order();
    let k = classes.len();
    let exponent = (0..n).map(|x| t.elt_order(x)).fold(1, num_integer::lcm);
    let p = choose_prime(exponent, 2 * n);
    let sizes: Vec<u64> = classes.iter().map(|c| c.len() as u64).collect();
    let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();

    // a[i][j][l] = #{x in C_i : x^{-1} z_l in C_j}.
    let mut mats = vec![vec![vec![0u64; k]; k]; k];
    for (i, ci) in classes.iter().enumerate() {
        for (l, &z) in reps.iter().enumerate() {
            for &x in ci {
                let j = class_of[t.mul(t.inv(x), z)];
                mats[i][j][l] += 1;
            }
        }
    }

    let mut done: Vec<Vec<u64>> = Vec::new();
    let mut pending: Vec<Vec<Vec<u64>>> = vec![(0..k)
        .map(|i| {
            let mut v = vec![0u64; k];
            v[i] = 1;
            v
        })
        .collect()];
    for m in mats.iter().skip(1) {
        let mut next = Vec::new();
        for mut space in pending {
            let pivots = rref(&mut space, p);
            if space.len() == 1 {
                done.push(space.remove(0));
                continue;
            }
            let parts = split(&space, &pivots, m, p)
                .ok_or_else(|| MrepError::CharacterTable("class matrix not split over F_p".into()))?;
            next.extend(parts);
        }
        pending = next;
        if pending.is_empty() {
            break;
        }
    }
    for mut space in pending {
        rref(&mut space, p);
        if space.len() != 1 {
            return Err(MrepError::CharacterTable("eigenspaces did not separate".into()));
        }
        done.push(space.remove(0));
    }
    if done.len() != k {
        return Err(MrepError::CharacterTable("wrong number of characters".into()));
    }

    let inv_class: Vec<usize> = reps.iter().map(|&x| class_of[t.inv(x)]).collect();
    let power_class: Vec<Vec<usize>> = reps
        .iter()
        .map(|&x| {
            let o = t.elt_order(x);
            let mut out = Vec::with_capacity(o);
            let mut y = 0;
            for _ in 0..o {
                out.push(class_of[y]);
                y = t.mul(y, x);
            }
            out
        })
        .collect();
    let z = root_of_unity(exponent, p);
    let max_deg = (1..).take_while(|d| d * d <= n).last().unwrap_or(1) as u64;

    let mut rows: Vec<(u64, Vec<Cyclo>)> = Vec::new();
    for v in done {
        let s0 = inv_mod(v[0], p);
        let omega: Vec<u64> = v.iter().map(|x| x * s0 % p).collect();
        let mut s = 0u64;
        for i in 0..k {
            s = (s + omega[i] * omega[inv_class[i]] % p * inv_mod(sizes[i], p)) % p;
        }
        let d2 = n as u64 % p * inv_mod(s, p) % p;
        let d = (1..=max_deg)
            .find(|d| d * d == d2)
            .ok_or_else(|| MrepError::CharacterTable("degree is not a square".into()))?;
        let chi_mod: Vec<u64> = (0..k).map(|i| omega[i] * d % p * inv_mod(sizes[i], p) % p).collect();
        let mut values = Vec::with_capacity(k);
        for i in 0..k {
            let o = power_class[i].len();
            let zo = pow_mod(z, (exponent / o) as u64, p);
            let inv_o = inv_mod(o as u64, p);
            let mut coeffs = vec![0i64; exponent];
            for kk in 0..o {
                let mut acc = 0u64;
                for (l, &c) in power_class[i].iter().enumerate() {
                    let w = pow_mod(zo, ((o - (kk * l) % o) % o) as u64, p);
                    acc = (acc + chi_mod[c] * w) % p;
                }
                let m = acc * inv_o % p;
                if m > d {
                    return Err(MrepError::CharacterTable("eigenvalue multiplicity out of range".into()));
                }
                coeffs[kk * (exponent / o)] += m as i64;
            }
            values.push(Cyclo::from_coeffs(exponent, coeffs));
        }
        rows.push((d, values));
    }
    let keyed: Vec<(u64, bool, Vec<Vec<i64>>, Vec<Cyclo>)> = rows
        .into_iter()
        .map(|(d, vals)| {
            let trivial = vals.iter().all(|c| c.as_integer() == Some(1));
            let key = vals.iter().map(|c| c.reduced()).collect();
            (d, !trivial, key, vals)
        })
        .collect();
    let mut keyed = keyed;
    keyed.sort_by(|a, b| (a.0, a.1, &a.2).cmp(&(b.0, b.1, &b.2)));
    let degrees = keyed.iter().map(|r| r.0).collect();
    let irreducibles = keyed.into_iter().map(|r| r.3).collect();
    Ok((irreducibles, degrees, exponent))
}
