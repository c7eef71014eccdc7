//! Invariant screening and generator-image search for isomorphisms and embeddings.

use std::collections::BTreeMap;

use super::table::{order_buckets, GroupTable};
use super::{Elements, PermError, PermGroup, Permutation, Result};

/// Largest order accepted by [`isomorphic`].
pub const ISO_CAP: usize = 400;
/// Largest target order accepted by [`embeds_up_to_iso`].
pub const EMBED_CAP: usize = 10_000;

/// Isomorphism invariants used to screen candidate pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupInvariants {
    pub order: usize,
    pub histogram: BTreeMap<usize, usize>,
    pub center: usize,
    pub abelianization: usize,
    pub class_count: usize,
    /// Sorted `(element order, class size)` pairs, one per conjugacy class.
    pub class_profile: Vec<(usize, usize)>,
}

impl GroupInvariants {
    pub fn of_table(t: &GroupTable) -> Self {
        let mut histogram = BTreeMap::new();
        for i in 0..t.order() {
            *histogram.entry(t.elt_order(i)).or_insert(0) += 1;
        }
        let classes = t.classes();
        let mut class_profile: Vec<(usize, usize)> = classes.iter().map(|c| (t.elt_order(c[0]), c.len())).collect();
        class_profile.sort_unstable();
        GroupInvariants {
            order: t.order(),
            histogram,
            center: t.center().len(),
            abelianization: t.order() / t.derived().len(),
            class_count: classes.len(),
            class_profile,
        }
    }

    pub fn of(g: &PermGroup) -> Result<Self> {
        Ok(Self::of_table(g.table()?))
    }
}

/// Multiplication access to the target of a homomorphism search.
trait Target {
    fn n(&self) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;
    fn identity(&self) -> usize;
}

impl Target for GroupTable {
    fn n(&self) -> usize {
        self.order()
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        GroupTable::mul(self, a, b)
    }
    fn identity(&self) -> usize {
        0
    }
}

struct PermTarget<'a> {
    e: &'a Elements,
    orders: Vec<usize>,
}

impl Target for PermTarget<'_> {
    fn n(&self) -> usize {
        self.e.list.len()
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        self.e.index[&self.e.list[a].compose(&self.e.list[b])]
    }
    fn identity(&self) -> usize {
        0
    }
}

/// Spanning trees of the chain `<g1> <= <g1,g2> <= ...` in the source group.
struct Plan {
    gens: Vec<usize>,
    /// For level k: elements of `<g1..gk>` in BFS order with (parent, generator position).
    trees: Vec<Vec<(usize, usize, usize)>>,
}

impl Plan {
    fn new(src: &GroupTable, gens: Vec<usize>) -> Plan {
        let mut trees = Vec::new();
        for k in 1..=gens.len() {
            let mut seen = vec![false; src.order()];
            seen[0] = true;
            let mut tree = vec![(0usize, usize::MAX, usize::MAX)];
            let mut i = 0;
            while i < tree.len() {
                let x = tree[i].0;
                for (gi, &g) in gens[..k].iter().enumerate() {
                    let y = src.mul(x, g);
                    if !seen[y] {
                        seen[y] = true;
                        tree.push((y, x, gi));
                    }
                }
                i += 1;
            }
            trees.push(tree);
        }
        Plan { gens, trees }
    }
}

/// Depth-first search for a homomorphism on generator images; `filter(level, candidate)` prunes.
fn search<T: Target>(
    src: &GroupTable,
    plan: &Plan,
    dst: &T,
    candidates: &[Vec<usize>],
    injective: bool,
) -> Option<Vec<usize>> {
    let mut images = Vec::with_capacity(plan.gens.len());
    let mut phi = vec![usize::MAX; src.order()];
    let mut used = vec![false; dst.n()];
    if plan.gens.is_empty() {
        return Some(vec![]);
    }
    fn rec<T: Target>(
        src: &GroupTable,
        plan: &Plan,
        dst: &T,
        candidates: &[Vec<usize>],
        injective: bool,
        images: &mut Vec<usize>,
        phi: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let k = images.len();
        if k == plan.gens.len() {
            return true;
        }
        for &c in &candidates[k] {
            images.push(c);
            if consistent(src, plan, dst, k, images, phi, used, injective)
                && rec(src, plan, dst, candidates, injective, images, phi, used)
            {
                return true;
            }
            images.pop();
        }
        false
    }
    if rec(src, plan, dst, candidates, injective, &mut images, &mut phi, &mut used) {
        Some(images)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn consistent<T: Target>(
    src: &GroupTable,
    plan: &Plan,
    dst: &T,
    level: usize,
    images: &[usize],
    phi: &mut [usize],
    used: &mut [bool],
    injective: bool,
) -> bool {
    let tree = &plan.trees[level];
    for &(x, _, _) in tree {
        phi[x] = usize::MAX;
    }
    phi[0] = dst.identity();
    for &(x, parent, gi) in &tree[1..] {
        phi[x] = dst.mul(phi[parent], images[gi]);
    }
    for &(x, _, _) in tree {
        for (gi, &g) in plan.gens[..=level].iter().enumerate() {
            let y = src.mul(x, g);
            if phi[y] == usize::MAX || phi[y] != dst.mul(phi[x], images[gi]) {
                return false;
            }
        }
    }
    if injective {
        let mut ok = true;
        for &(x, _, _) in tree {
            if used[phi[x]] {
                ok = false;
                break;
            }
            used[phi[x]] = true;
        }
        for &(x, _, _) in tree {
            used[phi[x]] = false;
        }
        if !ok {
            return false;
        }
    }
    true
}

/// One representative per conjugacy class among `pool`, using conjugation by `gens`.
fn class_reps_in<T: Target>(dst: &T, gens: &[usize], inverse: &dyn Fn(usize) -> usize, pool: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; dst.n()];
    let mut reps = Vec::new();
    for &x in pool {
        if seen[x] {
            continue;
        }
        reps.push(x);
        seen[x] = true;
        let mut stack = vec![x];
        while let Some(y) = stack.pop() {
            for &g in gens {
                let z = dst.mul(dst.mul(inverse(g), y), g);
                if !seen[z] {
                    seen[z] = true;
                    stack.push(z);
                }
            }
        }
    }
    reps
}

/// Whether two groups of order at most 400 are isomorphic.
pub fn isomorphic(g: &PermGroup, h: &PermGroup) -> Result<bool> {
    for x in [g, h] {
        let o = x.order()?;
        if o > ISO_CAP {
            return Err(PermError::OrderCap { order: o, cap: ISO_CAP });
        }
    }
    let (tg, th) = (g.table()?, h.table()?);
    Ok(isomorphic_tables(tg, th))
}

pub(crate) fn isomorphic_tables(tg: &GroupTable, th: &GroupTable) -> bool {
    if tg.order() != th.order() {
        return false;
    }
    if GroupInvariants::of_table(tg) != GroupInvariants::of_table(th) {
        return false;
    }
    let full = tg.full();
    let gens = tg.generators_of(&full);
    let cent_g = tg.centralizer_orders();
    let cent_h = th.centralizer_orders();
    let mut candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| (0..th.order()).filter(|&y| th.elt_order(y) == tg.elt_order(x) && cent_h[y] == cent_g[x]).collect())
        .collect();
    if let Some(first) = candidates.first_mut() {
        let inv = |a: usize| th.inv(a);
        *first = class_reps_in(th, th.generators(), &inv, first);
    }
    let plan = Plan::new(tg, gens);
    search(tg, &plan, th, &candidates, true).is_some()
}

/// Images (in `h`) of a generating set of `g` defining an injective homomorphism, if one exists.
pub fn find_embedding(g: &PermGroup, h: &PermGroup) -> Result<Option<(Vec<Permutation>, Vec<Permutation>)>> {
    let oh = h.order()?;
    if oh > EMBED_CAP {
        return Err(PermError::OrderCap { order: oh, cap: EMBED_CAP });
    }
    let og = g.order()?;
    if oh % og != 0 {
        return Ok(None);
    }
    let tg = g.table()?;
    let full = tg.full();
    let gens = tg.generators_of(&full);
    let plan = Plan::new(tg, gens.clone());
    let eh = h.materialize()?;
    let hgens: Vec<usize> = h.generators().iter().map(|p| eh.index[p]).collect();
    let found = if oh <= super::table::TABLE_CAP {
        let th = h.table()?;
        let buckets = order_buckets(th);
        let mut candidates: Vec<Vec<usize>> =
            gens.iter().map(|&x| buckets.get(&tg.elt_order(x)).cloned().unwrap_or_default()).collect();
        if let Some(first) = candidates.first_mut() {
            let inv = |a: usize| th.inv(a);
            *first = class_reps_in(th, &hgens, &inv, first);
        }
        search(tg, &plan, th, &candidates, true)
    } else {
        let orders: Vec<usize> = eh.list.iter().map(|p| p.order()).collect();
        let target = PermTarget { e: eh, orders };
        let mut candidates: Vec<Vec<usize>> =
            gens.iter().map(|&x| (0..target.n()).filter(|&y| target.orders[y] == tg.elt_order(x)).collect()).collect();
        if let Some(first) = candidates.first_mut() {
            let inv = |a: usize| eh.index[&eh.list[a].inverse()];
            *first = class_reps_in(&target, &hgens, &inv, first);
        }
        search(tg, &plan, &target, &candidates, true)
    };
    let eg = g.materialize()?;
    Ok(found.map(|imgs| {
        (gens.iter().map(|&i| eg.list[i].clone()).collect(), imgs.iter().map(|&i| eh.list[i].clone()).collect())
    }))
}

/// Whether `h` has a subgroup isomorphic to `g`.
pub fn embeds_up_to_iso(g: &PermGroup, h: &PermGroup) -> Result<bool> {
    Ok(find_embedding(g, h)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::closure;

    fn grp(n: usize, gens: &[&str]) -> PermGroup {
        closure(&gens.iter().map(|s| Permutation::parse(n, s).unwrap()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn d8_not_q8() {
        let d8 = grp(4, &["(1 2 3 4)", "(1 3)"]);
        let q8 = grp(8, &["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"]);
        assert_eq!(q8.order().unwrap(), 8);
        assert!(!isomorphic(&d8, &q8).unwrap());
    }

    #[test]
    fn s3_is_d6_in_two_degrees() {
        let s3 = grp(3, &["(1 2 3)", "(1 2)"]);
        let d6 = grp(6, &["(1 2 3)(4 5 6)", "(1 4)(2 6)(3 5)"]);
        let c6 = grp(5, &["(1 2 3)(4 5)"]);
        assert!(isomorphic(&s3, &d6).unwrap());
        assert!(isomorphic(&s3, &s3.regular_representation().unwrap()).unwrap());
        assert!(!isomorphic(&s3, &c6).unwrap());
    }

    #[test]
    fn c4_embeds_in_s4_but_not_c2_squared() {
        let c4 = grp(4, &["(1 2 3 4)"]);
        let s4 = grp(4, &["(1 2 3 4)", "(1 2)"]);
        let v4 = grp(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        assert!(embeds_up_to_iso(&c4, &s4).unwrap());
        assert!(!embeds_up_to_iso(&c4, &v4).unwrap());
    }
}
