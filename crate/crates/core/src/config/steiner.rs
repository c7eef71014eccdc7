//! The affine plane of order 3 and its extension to `St(3,4,10)`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::perm::{closure, PermGroup, Permutation};

use super::{ConfigError, Result};

/// A family of `k`-subsets (blocks) of `v` points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SteinerSystem {
    pub t: usize,
    pub k: usize,
    pub v: usize,
    pub points: Vec<String>,
    /// Sorted point indices.
    pub blocks: Vec<Vec<usize>>,
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::new(), &mut out);
    out
}

impl SteinerSystem {
    /// Number of blocks containing each `t`-subset, in lexicographic order.
    pub fn coverage(&self) -> Vec<usize> {
        subsets(self.v, self.t)
            .iter()
            .map(|s| self.blocks.iter().filter(|b| s.iter().all(|x| b.contains(x))).count())
            .collect()
    }

    /// `C(v, t) / C(k, t)`.
    pub fn expected_block_count(&self) -> usize {
        binomial(self.v, self.t) / binomial(self.k, self.t)
    }

    /// Every block has `k` distinct points and every `t`-subset lies in exactly one block.
    pub fn is_valid(&self) -> bool {
        self.points.len() == self.v
            && self
                .blocks
                .iter()
                .all(|b| b.len() == self.k && b.windows(2).all(|w| w[0] < w[1]) && b[self.k - 1] < self.v)
            && self.coverage().iter().all(|&c| c == 1)
            && self.blocks.len() == self.expected_block_count()
    }

    pub fn block_labels(&self) -> Vec<Vec<String>> {
        self.blocks.iter().map(|b| b.iter().map(|&i| self.points[i].clone()).collect()).collect()
    }
}

/// Both Steiner systems with the search statistics for the arc blocks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SteinerBuild {
    pub st_2_3_9: SteinerSystem,
    pub st_3_4_10: SteinerSystem,
    /// Four-point subsets of the plane with no three collinear.
    pub four_arcs: usize,
    /// Triples of the plane not on a line.
    pub non_collinear_triples: usize,
    /// Exact covers of the non-collinear triples by four-arcs.
    pub completions: usize,
    /// Orbit sizes of the affine group of the plane on the completions.
    pub completion_orbits: Vec<usize>,
    /// Order of the affine group, found by closure.
    pub affine_group_order: usize,
    /// Blocks of `St(3,4,10)` avoiding the point at infinity.
    pub arc_blocks: Vec<Vec<usize>>,
}

/// Point `(k, l)` of the plane over the field with three elements.
fn coords(p: usize) -> (usize, usize) {
    (p / 3, p % 3)
}

fn collinear(a: usize, b: usize, c: usize) -> bool {
    let ((x1, y1), (x2, y2), (x3, y3)) = (coords(a), coords(b), coords(c));
    let (dx1, dy1) = ((x2 + 3 - x1) % 3, (y2 + 3 - y1) % 3);
    let (dx2, dy2) = ((x3 + 3 - x1) % 3, (y3 + 3 - y1) % 3);
    (dx1 * dy2 + 3 * 3 - dx2 * dy1) % 3 == 0
}

/// `St(2,3,9)` from the 12 lines of the plane, and `St(3,4,10)` on
/// `{∞} ∪ plane` from the 12 blocks `{∞} ∪ line` and 18 four-arcs covering
/// each non-collinear triple once.
///
/// The arc blocks come from an exhaustive exact-cover search which also
/// counts all completions.
pub fn build_steiner_systems() -> Result<SteinerBuild> {
    let plane: Vec<String> = (0..9).map(|p| format!("{}{}", p / 3, p % 3)).collect();
    let lines: Vec<Vec<usize>> = subsets(9, 3).into_iter().filter(|t| collinear(t[0], t[1], t[2])).collect();
    let st_2_3_9 = SteinerSystem { t: 2, k: 3, v: 9, points: plane.clone(), blocks: lines.clone() };

    let arcs: Vec<Vec<usize>> = subsets(9, 4)
        .into_iter()
        .filter(|q| subsets(4, 3).iter().all(|t| !collinear(q[t[0]], q[t[1]], q[t[2]])))
        .collect();
    let triples: Vec<Vec<usize>> = subsets(9, 3).into_iter().filter(|t| !collinear(t[0], t[1], t[2])).collect();
    let covers: Vec<Vec<usize>> = arcs
        .iter()
        .map(|a| triples.iter().enumerate().filter(|(_, t)| t.iter().all(|x| a.contains(x))).map(|(i, _)| i).collect())
        .collect();
    let mut solutions: Vec<Vec<usize>> = Vec::new();
    exact_cover(&covers, triples.len(), &mut vec![false; triples.len()], &mut Vec::new(), &mut solutions);
    let (completion_orbits, affine_group_order) = completion_orbits(&arcs, &solutions)?;
    let first = solutions.first().ok_or_else(|| ConfigError::Search("no four-arc completion".into()))?;

    // Point 0 is ∞; plane point p becomes p + 1.
    let points: Vec<String> = std::iter::once("inf".to_string()).chain(plane).collect();
    let shift = |b: &[usize]| b.iter().map(|&p| p + 1).collect::<Vec<usize>>();
    let arc_blocks: Vec<Vec<usize>> = first.iter().map(|&i| shift(&arcs[i])).collect();
    let mut blocks: Vec<Vec<usize>> =
        lines.iter().map(|l| std::iter::once(0).chain(shift(l)).collect()).chain(arc_blocks.iter().cloned()).collect();
    blocks.sort();
    let st_3_4_10 = SteinerSystem { t: 3, k: 4, v: 10, points, blocks };
    Ok(SteinerBuild {
        st_2_3_9,
        st_3_4_10,
        four_arcs: arcs.len(),
        non_collinear_triples: triples.len(),
        completions: solutions.len(),
        completion_orbits,
        affine_group_order,
        arc_blocks,
    })
}

/// `AGL(2,3)` on plane points `3k + l + 1`, from translations and `GL(2,3)` generators.
fn affine_group() -> Result<PermGroup> {
    let map = |f: &dyn Fn(usize, usize) -> (usize, usize)| -> Result<Permutation> {
        let images: Vec<usize> = (0..9)
            .map(|p| {
                let (x, y) = f(p / 3, p % 3);
                3 * (x % 3) + y % 3 + 1
            })
            .collect();
        Ok(Permutation::from_images(&images)?)
    };
    closure(&[
        map(&|x, y| (x + 1, y))?,
        map(&|x, y| (x, y + 1))?,
        map(&|x, y| (y, x))?,
        map(&|x, y| (x + y, y))?,
        map(&|x, y| (2 * x, y))?,
    ])
    .map_err(Into::into)
}

/// Orbits of the affine group on the arc completions, with the group order.
fn completion_orbits(arcs: &[Vec<usize>], solutions: &[Vec<usize>]) -> Result<(Vec<usize>, usize)> {
    let g = affine_group()?;
    let as_blocks = |s: &[usize]| -> BTreeSet<Vec<usize>> { s.iter().map(|&i| arcs[i].clone()).collect() };
    let completions: Vec<BTreeSet<Vec<usize>>> = solutions.iter().map(|s| as_blocks(s)).collect();
    let mut seen = vec![false; completions.len()];
    let mut orbits = Vec::new();
    for i in 0..completions.len() {
        if seen[i] {
            continue;
        }
        let mut size = 0;
        for p in g.elements()? {
            let image: BTreeSet<Vec<usize>> = completions[i]
                .iter()
                .map(|b| {
                    let mut v: Vec<usize> = b.iter().map(|&x| p.image(x + 1) - 1).collect();
                    v.sort_unstable();
                    v
                })
                .collect();
            if let Some(j) = completions.iter().position(|c| *c == image) {
                if !seen[j] {
                    seen[j] = true;
                    size += 1;
                }
            }
        }
        orbits.push(size);
    }
    orbits.sort_unstable();
    Ok((orbits, g.order()?))
}

/// All exact covers of `0..n` by the given subsets, choosing at each step
/// the uncovered element with the fewest candidates.
fn exact_cover(
    sets: &[Vec<usize>],
    n: usize,
    covered: &mut Vec<bool>,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let fits = |s: &Vec<usize>, covered: &[bool]| s.iter().all(|&e| !covered[e]);
    let mut best: Option<(usize, Vec<usize>)> = None;
    for e in (0..n).filter(|&e| !covered[e]) {
        let cand: Vec<usize> = (0..sets.len()).filter(|&i| sets[i].contains(&e) && fits(&sets[i], covered)).collect();
        if best.as_ref().is_none_or(|(_, b)| cand.len() < b.len()) {
            best = Some((e, cand));
        }
    }
    let Some((_, cand)) = best else {
        let mut s = chosen.clone();
        s.sort_unstable();
        out.push(s);
        return;
    };
    for i in cand {
        for &e in &sets[i] {
            covered[e] = true;
        }
        chosen.push(i);
        exact_cover(sets, n, covered, chosen, out);
        chosen.pop();
        for &e in &sets[i] {
            covered[e] = false;
        }
    }
}
