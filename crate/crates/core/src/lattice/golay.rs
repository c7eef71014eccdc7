//! The symmetric group S6 on 24 points and an invariant binary Golay code.
//!
//! Points `1..=6` carry the natural action, `7..=12` the six synthematic
//! totals, `13, 14` the sign and `15..=24` the ten bisections of `{1..6}`.
//! The dodecads `1..=12` and `13..=24` are complementary.

use std::collections::{BTreeMap, BTreeSet};

use crate::perm::{closure, PermGroup, Permutation};

use super::{LatticeError, Result};

pub type Duad = (usize, usize);
pub type Syntheme = [Duad; 3];

fn duad(a: usize, b: usize) -> Duad {
    (a.min(b), a.max(b))
}

/// The 15 synthemes: partitions of `{1..6}` into three duads.
pub fn synthemes() -> Vec<Syntheme> {
    let mut out = Vec::new();
    for b in 2..=6 {
        let rest: Vec<usize> = (2..=6).filter(|&x| x != b).collect();
        let (c, others) = (rest[0], &rest[1..]);
        for &d in others {
            let last: Vec<usize> = others.iter().copied().filter(|&x| x != d).collect();
            out.push([duad(1, b), duad(c, d), duad(last[0], last[1])]);
        }
    }
    out
}

/// The six totals: sets of five synthemes that together contain all 15 duads.
pub fn totals() -> Vec<Vec<Syntheme>> {
    let s = synthemes();
    let disjoint = |x: &Syntheme, y: &Syntheme| x.iter().all(|d| !y.contains(d));
    let mut out = Vec::new();
    fn grow(
        s: &[Syntheme],
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<Syntheme>>,
        disjoint: &dyn Fn(&Syntheme, &Syntheme) -> bool,
    ) {
        if cur.len() == 5 {
            out.push(cur.iter().map(|&i| s[i]).collect());
            return;
        }
        for i in start..s.len() {
            if cur.iter().all(|&j| disjoint(&s[i], &s[j])) {
                cur.push(i);
                grow(s, i + 1, cur, out, disjoint);
                cur.pop();
            }
        }
    }
    grow(&s, 0, &mut Vec::new(), &mut out, &disjoint);
    out
}

/// The ten bisections, each given by its half containing 1.
pub fn bisections() -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 2..=6 {
        for b in a + 1..=6 {
            out.push([1, a, b]);
        }
    }
    out
}

fn is_even(p: &Permutation) -> bool {
    p.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
}

/// S6 acting on the 24 points.
#[derive(Debug, Clone)]
pub struct S6On24 {
    totals: Vec<Vec<Syntheme>>,
    bisections: Vec<[usize; 3]>,
}

impl Default for S6On24 {
    fn default() -> Self {
        Self::new()
    }
}

impl S6On24 {
    pub fn new() -> Self {
        let mut totals: Vec<Vec<Syntheme>> = totals()
            .into_iter()
            .map(|mut t| {
                t.sort();
                t
            })
            .collect();
        totals.sort();
        S6On24 { totals, bisections: bisections() }
    }

    pub const NATURAL: std::ops::RangeInclusive<usize> = 1..=6;
    pub const TOTALS: std::ops::RangeInclusive<usize> = 7..=12;
    pub const SIGN: std::ops::RangeInclusive<usize> = 13..=14;
    pub const BISECTIONS: std::ops::RangeInclusive<usize> = 15..=24;

    /// Point of the bisection with half `half`.
    pub fn bisection_point(&self, half: &[usize]) -> usize {
        let set: BTreeSet<usize> = half.iter().copied().collect();
        let set = if set.contains(&1) { set } else { (1..=6).filter(|x| !set.contains(x)).collect() };
        let i = self.bisections.iter().position(|b| b.iter().copied().collect::<BTreeSet<_>>() == set).unwrap();
        15 + i
    }

    /// Image on 24 points of a permutation of `{1..6}`.
    pub fn lift(&self, g: &Permutation) -> Permutation {
        assert_eq!(g.degree(), 6);
        let mut images = vec![0; 24];
        for i in 1..=6 {
            images[i - 1] = g.image(i);
        }
        let map_syntheme = |s: &Syntheme| {
            let mut t: Syntheme = s.map(|(a, b)| duad(g.image(a), g.image(b)));
            t.sort();
            t
        };
        for (i, total) in self.totals.iter().enumerate() {
            let mut image: Vec<Syntheme> = total.iter().map(map_syntheme).collect();
            image.sort();
            let j = self.totals.iter().position(|t| *t == image).expect("totals are permuted");
            images[6 + i] = 7 + j;
        }
        let even = is_even(g);
        images[12] = if even { 13 } else { 14 };
        images[13] = if even { 14 } else { 13 };
        for (i, b) in self.bisections.iter().enumerate() {
            let half: Vec<usize> = b.iter().map(|&x| g.image(x)).collect();
            images[14 + i] = self.bisection_point(&half);
        }
        Permutation::from_images(&images).expect("bijection on 24 points")
    }

    pub fn lift_group(&self, gens: &[Permutation]) -> Result<PermGroup> {
        let lifted: Vec<Permutation> = gens.iter().map(|g| self.lift(g)).collect();
        closure(&lifted).map_err(|e| LatticeError::Failed(e.to_string()))
    }
}

/// Binary code of length 24 as bit masks (bit `i - 1` for point `i`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryCode {
    pub basis: Vec<u32>,
}

impl BinaryCode {
    pub fn dimension(&self) -> usize {
        reduce_basis(&self.basis).len()
    }

    pub fn codewords(&self) -> Vec<u32> {
        let b = reduce_basis(&self.basis);
        (0u32..1 << b.len())
            .map(|m| b.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).fold(0, |a, (_, w)| a ^ w))
            .collect()
    }

    pub fn weight_distribution(&self) -> BTreeMap<u32, usize> {
        let mut out = BTreeMap::new();
        for w in self.codewords() {
            *out.entry(w.count_ones()).or_insert(0) += 1;
        }
        out
    }

    pub fn contains(&self, word: u32) -> bool {
        let b = reduce_basis(&self.basis);
        let mut w = word;
        for r in &b {
            let top = 31 - r.leading_zeros();
            if w >> top & 1 == 1 {
                w ^= r;
            }
        }
        w == 0
    }

    /// Whether a permutation of the 24 points maps the code to itself.
    pub fn is_invariant_under(&self, p: &Permutation) -> bool {
        self.basis.iter().all(|&w| self.contains(permute_word(w, p)))
    }
}

/// Echelon basis with distinct leading bits.
fn reduce_basis(rows: &[u32]) -> Vec<u32> {
    let mut basis: Vec<u32> = Vec::new();
    for &r in rows {
        let mut w = r;
        for b in &basis {
            let top = 31 - b.leading_zeros();
            if w >> top & 1 == 1 {
                w ^= b;
            }
        }
        if w != 0 {
            let top = 31 - w.leading_zeros();
            for b in basis.iter_mut() {
                if *b >> top & 1 == 1 {
                    *b ^= w;
                }
            }
            basis.push(w);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis
}

pub fn permute_word(w: u32, p: &Permutation) -> u32 {
    (1..=24).filter(|&i| w >> (i - 1) & 1 == 1).fold(0, |acc, i| acc | 1 << (p.image(i) - 1))
}

pub fn word_of(points: impl IntoIterator<Item = usize>) -> u32 {
    points.into_iter().fold(0, |acc, i| acc | 1 << (i - 1))
}

/// Weight distribution of the extended binary Golay code.
pub const GOLAY_WEIGHTS: [(u32, usize); 5] = [(0, 1), (8, 759), (12, 2576), (16, 759), (24, 1)];

/// Coordinates in `e_1 + e_i`, `i = 2..=11`, of an even word on twelve
/// points (bits `offset..offset + 12`) modulo the all-ones word.
fn even_mod_ones(word: u32, offset: u32) -> Vec<u8> {
    let mut w = word >> offset & 0xFFF;
    if w >> 11 & 1 == 1 {
        w ^= 0xFFF;
    }
    (1..11).map(|i| (w >> i & 1) as u8).collect()
}

fn lift_even(coords: &[u8], offset: u32) -> u32 {
    coords.iter().enumerate().filter(|(_, &c)| c == 1).fold(0, |acc, (k, _)| acc ^ (1 | 1 << (k + 1)) << offset)
}

/// An S6-invariant Golay code with the dodecads `1..=12` and `13..=24`.
///
/// Projection to the first dodecad maps the code onto its even words with
/// kernel spanned by the second dodecad, so the code is the graph of a map
/// `phi` between the even words of the two dodecads modulo the all-ones
/// words, plus both dodecads. S6-equivariance of `phi` is a linear system over
/// F2 in its 100 entries; the first solution giving the Golay weight
/// distribution is returned.
pub fn s6_invariant_golay_code() -> Result<(BinaryCode, S6On24)> {
    use super::f2::{f2_apply, f2_kernel};
    let action = S6On24::new();
    let gens = [Permutation::parse(6, "(1 2)").unwrap(), Permutation::parse(6, "(1 2 3 4 5 6)").unwrap()];
    let lifted: Vec<Permutation> = gens.iter().map(|g| action.lift(g)).collect();
    let basis_word = |i: usize, offset: u32| -> u32 { (1 | 1 << (i + 1)) << offset };
    // Rows: unknown x_{ij} at index 10 i + j; equations C_g X = X R_g.
    let mut equations: Vec<Vec<u8>> = Vec::new();
    for g in &lifted {
        let c: Vec<Vec<u8>> = (0..10).map(|i| even_mod_ones(permute_word(basis_word(i, 0), g), 0)).collect();
        let r: Vec<Vec<u8>> = (0..10).map(|j| even_mod_ones(permute_word(basis_word(j, 12), g), 12)).collect();
        for i in 0..10 {
            for j in 0..10 {
                let mut eq = vec![0u8; 100];
                for k in 0..10 {
                    eq[10 * k + j] ^= c[i][k];
                    eq[10 * i + k] ^= r[k][j];
                }
                equations.push(eq);
            }
        }
    }
    let solutions = f2_kernel(&equations, 100);
    if solutions.len() > 16 {
        return Err(LatticeError::SearchCap(format!("{} equivariant maps", solutions.len())));
    }
    let target: BTreeMap<u32, usize> = GOLAY_WEIGHTS.into_iter().collect();
    for choice in 1u32..1 << solutions.len() {
        let picked: Vec<u8> = (0..solutions.len()).map(|k| (choice >> k & 1) as u8).collect();
        let x = f2_apply(&picked, &solutions);
        let mut basis: Vec<u32> = (0..10).map(|i| basis_word(i, 0) | lift_even(&x[10 * i..10 * i + 10], 12)).collect();
        basis.push(0xFFF);
        basis.push(0xFFF000);
        let code = BinaryCode { basis };
        if code.weight_distribution() == target && lifted.iter().all(|g| code.is_invariant_under(g)) {
            return Ok((code, action));
        }
    }
    Err(LatticeError::Failed("no S6-equivariant Golay code".into()))
}
