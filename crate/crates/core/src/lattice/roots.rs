//! Root systems of negative definite lattices and their ADE types.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::enumerate::vectors_up_to;
use super::{IntegerLattice, LatticeError, Result};

/// ADE decomposition of the root system with its simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootType {
    /// Components as `(letter, rank)`, sorted.
    pub components: Vec<(char, usize)>,
    /// Number of roots (vectors of norm `-2`), both signs counted.
    pub roots: usize,
    #[serde(skip)]
    pub simple_roots: Vec<Vec<BigInt>>,
}

impl RootType {
    pub fn label(&self) -> String {
        self.components.iter().map(|(c, n)| format!("{c}{n}")).collect::<Vec<_>>().join("+")
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.1).sum()
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", self.label())
        }
    }
}

/// All vectors of norm `-2` in a negative definite lattice, both signs.
pub fn roots(l: &IntegerLattice) -> Result<Vec<Vec<BigInt>>> {
    if !l.is_negative_definite() && l.rank() > 0 {
        return Err(LatticeError::NotDefinite);
    }
    let minus_two = BigRational::from_integer((-2).into());
    let all = vectors_up_to(l, &minus_two.abs())?;
    Ok(all.into_iter().filter(|v| l.norm_int(v) == minus_two).collect())
}

fn root_count(letter: char, n: usize) -> usize {
    match letter {
        'A' => n * (n + 1),
        'D' => 2 * n * (n - 1),
        'E' => [72, 126, 240][n - 6],
        _ => unreachable!(),
    }
}

/// Dynkin type of a connected simply-laced tree.
fn classify_component(adj: &[Vec<usize>]) -> Result<(char, usize)> {
    let n = adj.len();
    let edges: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    if edges + 1 != n || adj.iter().any(|a| a.len() > 3) {
        return Err(LatticeError::NotSimplyLaced);
    }
    let branch: Vec<usize> = (0..n).filter(|&i| adj[i].len() == 3).collect();
    match branch.as_slice() {
        [] => Ok(('A', n)),
        [c] => {
            let mut arms: Vec<usize> = adj[*c]
                .iter()
                .map(|&start| {
                    let (mut prev, mut cur, mut len) = (*c, start, 1);
                    while let Some(&next) = adj[cur].iter().find(|&&x| x != prev) {
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    len
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => Ok(('D', n)),
                [1, 2, 2] => Ok(('E', 6)),
                [1, 2, 3] => Ok(('E', 7)),
                [1, 2, 4] => Ok(('E', 8)),
                _ => Err(LatticeError::NotSimplyLaced),
            }
        }
        _ => Err(LatticeError::NotSimplyLaced),
    }
}

/// ADE type of the root system of a negative definite lattice.
///
/// Positive roots come from a generic integral functional; simple roots are
/// the positive roots that are not sums of two positive roots.
pub fn root_type(l: &IntegerLattice) -> Result<RootType> {
    let all = roots(l)?;
    let bound = all.iter().flatten().map(|c| c.abs()).max().unwrap_or_default();
    let base = BigInt::from(2) * bound + 1;
    let functional = |v: &[BigInt]| -> BigInt { v.iter().rev().fold(BigInt::zero(), |acc, c| acc * &base + c) };
    let mut positive: Vec<Vec<BigInt>> = all.iter().filter(|v| functional(v).is_positive()).cloned().collect();
    positive.sort_by_key(|v| functional(v));
    let set: HashSet<&Vec<BigInt>> = positive.iter().collect();
    let mut decomposable: HashSet<Vec<BigInt>> = HashSet::new();
    for (i, a) in positive.iter().enumerate() {
        for b in &positive[i + 1..] {
            let s: Vec<BigInt> = a.iter().zip(b).map(|(x, y)| x + y).collect();
            if set.contains(&s) {
                decomposable.insert(s);
            }
        }
    }
    let simple: Vec<Vec<BigInt>> = positive.iter().filter(|v| !decomposable.contains(*v)).cloned().collect();
    let m = simple.len();
    let mut adj = vec![Vec::new(); m];
    for i in 0..m {
        for j in i + 1..m {
            let p = l.pair_int(&simple[i], &simple[j]);
            if p.is_zero() {
                continue;
            }
            if p != BigRational::from_integer(1.into()) {
                return Err(LatticeError::NotSimplyLaced);
            }
            adj[i].push(j);
            adj[j].push(i);
        }
    }
    // Connected components.
    let mut comp = vec![usize::MAX; m];
    let mut components = Vec::new();
    for s in 0..m {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut stack = vec![s];
        let mut nodes = Vec::new();
        comp[s] = id;
        while let Some(v) = stack.pop() {
            nodes.push(v);
            for &w in &adj[v] {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    stack.push(w);
                }
            }
        }
        nodes.sort_unstable();
        let index: BTreeMap<usize, usize> = nodes.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let local: Vec<Vec<usize>> = nodes.iter().map(|v| adj[*v].iter().map(|w| index[w]).collect()).collect();
        components.push(classify_component(&local)?);
    }
    components.sort_unstable();
    let expected: usize = components.iter().map(|&(c, n)| root_count(c, n)).sum();
    if expected != all.len() {
        return Err(LatticeError::Failed(format!(
            "root count {} does not match the diagram (expected {expected})",
            all.len()
        )));
    }
    Ok(RootType { components, roots: all.len(), simple_roots: simple })
}
