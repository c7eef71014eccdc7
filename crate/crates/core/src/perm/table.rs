//! Cayley tables and subgroup lattices of small materialized groups.

use std::collections::{HashMap, HashSet};

use super::{Elements, PermGroup};

/// Largest order for which a Cayley table is built.
pub const TABLE_CAP: usize = 2048;

/// Element subset of a tabulated group, stored as a bitset over element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubgroupSet {
    bits: Vec<u64>,
}

impl SubgroupSet {
    pub fn empty(n: usize) -> Self {
        SubgroupSet { bits: vec![0; n.div_ceil(64)] }
    }

    pub fn insert(&mut self, i: usize) -> bool {
        let (w, b) = (i / 64, i % 64);
        let had = self.bits[w] >> b & 1 == 1;
        self.bits[w] |= 1 << b;
        !had
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits
            .iter()
            .enumerate()
            .flat_map(|(w, &word)| (0..64).filter(move |b| word >> b & 1 == 1).map(move |b| w * 64 + b))
    }

    pub fn is_subset(&self, other: &SubgroupSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }
}

/// Multiplication table of a finite group on indices `0..n`; index 0 is the identity.
#[derive(Debug, Clone)]
pub struct GroupTable {
    n: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
    ord: Vec<u32>,
    gens: Vec<usize>,
}

impl GroupTable {
    pub(crate) fn from_perm_group(g: &PermGroup, e: &Elements) -> GroupTable {
        let n = e.list.len();
        let mut mul = vec![0u16; n * n];
        for (a, pa) in e.list.iter().enumerate() {
            for (b, pb) in e.list.iter().enumerate() {
                mul[a * n + b] = e.index[&pa.compose(pb)] as u16;
            }
        }
        let inv = e.list.iter().map(|p| e.index[&p.inverse()] as u16).collect();
        let ord = e.list.iter().map(|p| p.order() as u32).collect();
        let gens = g.generators().iter().map(|p| e.index[p]).collect();
        GroupTable { n, mul, inv, ord, gens }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    #[inline]
    pub fn elt_order(&self, a: usize) -> usize {
        self.ord[a] as usize
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn full(&self) -> SubgroupSet {
        let mut s = SubgroupSet::empty(self.n);
        for i in 0..self.n {
            s.insert(i);
        }
        s
    }

    /// Subgroup generated by the given elements.
    pub fn closure(&self, gens: &[usize]) -> SubgroupSet {
        let mut set = SubgroupSet::empty(self.n);
        set.insert(0);
        let mut list = vec![0usize];
        let mut k = 0;
        while k < list.len() {
            let x = list[k];
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    list.push(y);
                }
            }
            k += 1;
        }
        set
    }

    /// Join of a subgroup (with known generators) and one more element.
    fn join(&self, h: &SubgroupSet, hgens: &[usize], x: usize) -> SubgroupSet {
        let mut set = h.clone();
        let mut list: Vec<usize> = h.iter().collect();
        let mut gens = hgens.to_vec();
        gens.push(x);
        let mut k = 0;
        while k < list.len() {
            let a = list[k];
            for &g in &gens {
                let y = self.mul(a, g);
                if set.insert(y) {
                    list.push(y);
                }
            }
            k += 1;
        }
        set
    }

    /// Small generating set, adding elements of largest order first.
    pub fn generators_of(&self, set: &SubgroupSet) -> Vec<usize> {
        let mut els: Vec<usize> = set.iter().filter(|&i| i != 0).collect();
        els.sort_by_key(|&i| (std::cmp::Reverse(self.elt_order(i)), i));
        let total = set.len();
        let mut gens = Vec::new();
        let mut cur = self.closure(&[]);
        for x in els {
            if cur.len() == total {
                break;
            }
            if !cur.contains(x) {
                gens.push(x);
                cur = self.closure(&gens);
            }
        }
        // Drop redundant generators.
        let mut i = 0;
        while i < gens.len() && gens.len() > 1 {
            let mut trial = gens.clone();
            trial.remove(i);
            if self.closure(&trial).len() == total {
                gens = trial;
            } else {
                i += 1;
            }
        }
        gens
    }

    pub fn conjugate_set(&self, set: &SubgroupSet, g: usize) -> SubgroupSet {
        let mut s = SubgroupSet::empty(self.n);
        for x in set.iter() {
            s.insert(self.conj(x, g));
        }
        s
    }

    /// Conjugacy classes as sorted index lists, ordered by least member.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut class_of = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for i in 0..self.n {
            if class_of[i] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![i];
            class_of[i] = id;
            let mut k = 0;
            while k < members.len() {
                for &g in &self.gens {
                    let y = self.conj(members[k], g);
                    if class_of[y] == usize::MAX {
                        class_of[y] = id;
                        members.push(y);
                    }
                }
                k += 1;
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn center(&self) -> SubgroupSet {
        let mut s = SubgroupSet::empty(self.n);
        for x in 0..self.n {
            if self.gens.iter().all(|&g| self.mul(x, g) == self.mul(g, x)) {
                s.insert(x);
            }
        }
        s
    }

    pub fn derived(&self) -> SubgroupSet {
        let mut comms = HashSet::new();
        for a in 0..self.n {
            for b in 0..self.n {
                let c = self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b));
                comms.insert(c);
            }
        }
        let comms: Vec<usize> = comms.into_iter().collect();
        self.closure(&comms)
    }

    /// Derived subgroup of a subgroup given as an element set.
    pub fn derived_of(&self, set: &SubgroupSet) -> SubgroupSet {
        let els: Vec<usize> = set.iter().collect();
        let mut comms = HashSet::new();
        for &a in &els {
            for &b in &els {
                comms.insert(self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b)));
            }
        }
        let comms: Vec<usize> = comms.into_iter().collect();
        self.closure(&comms)
    }

    pub fn is_normal(&self, set: &SubgroupSet) -> bool {
        set.iter().all(|x| self.gens.iter().all(|&g| set.contains(self.conj(x, g))))
    }

    /// Subgroups up to conjugacy, by extending class representatives with single elements.
    pub fn subgroup_class_representatives(&self) -> Vec<SubgroupSet> {
        let mut seen: HashSet<SubgroupSet> = HashSet::new();
        let mut reps: Vec<SubgroupSet> = Vec::new();
        let trivial = self.closure(&[]);
        let record = |s: SubgroupSet, seen: &mut HashSet<SubgroupSet>, reps: &mut Vec<SubgroupSet>| -> bool {
            if seen.contains(&s) {
                return false;
            }
            for g in 0..self.n {
                seen.insert(self.conjugate_set(&s, g));
            }
            reps.push(s);
            true
        };
        record(trivial, &mut seen, &mut reps);
        let mut k = 0;
        while k < reps.len() {
            let h = reps[k].clone();
            let hgens = self.generators_of(&h);
            for x in 0..self.n {
                if h.contains(x) {
                    continue;
                }
                let j = self.join(&h, &hgens, x);
                record(j, &mut seen, &mut reps);
            }
            k += 1;
        }
        reps.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        reps
    }

    /// Every subgroup (not only up to conjugacy).
    pub fn all_subgroups(&self) -> Vec<SubgroupSet> {
        let reps = self.subgroup_class_representatives();
        let mut all: HashSet<SubgroupSet> = HashSet::new();
        for r in &reps {
            for g in 0..self.n {
                all.insert(self.conjugate_set(r, g));
            }
        }
        let mut v: Vec<SubgroupSet> = all.into_iter().collect();
        v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        v
    }

    /// Whether the derived series reaches the trivial group.
    pub fn is_solvable(&self) -> bool {
        let mut cur = self.full();
        loop {
            if cur.len() == 1 {
                return true;
            }
            let next = self.derived_of(&cur);
            if next.len() == cur.len() {
                return false;
            }
            cur = next;
        }
    }

    /// Whether the group is the direct product of its Sylow subgroups, i.e. for
    /// every prime the elements of prime-power order number exactly the Sylow order.
    pub fn is_nilpotent(&self) -> bool {
        let n = self.n as u64;
        super::factorize(n).into_iter().all(|(p, e)| {
            let p_part = p.pow(e) as usize;
            let count = (0..self.n)
                .filter(|&x| {
                    let mut o = self.elt_order(x) as u64;
                    while o.is_multiple_of(p) {
                        o /= p;
                    }
                    o == 1
                })
                .count();
            count == p_part
        })
    }

    /// Index of each element in its conjugacy class list.
    pub fn class_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.n];
        for (c, members) in self.classes().iter().enumerate() {
            for &m in members {
                idx[m] = c;
            }
        }
        idx
    }

    /// `x^k` by repeated multiplication.
    pub fn pow(&self, x: usize, k: usize) -> usize {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    /// Centralizer order of each element.
    pub(crate) fn centralizer_orders(&self) -> Vec<usize> {
        let classes = self.classes();
        let mut out = vec![0; self.n];
        for c in classes {
            let cent = self.n / c.len();
            for m in c {
                out[m] = cent;
            }
        }
        out
    }
}

/// Element orders keyed by index, for quick candidate filtering.
pub(crate) fn order_buckets(t: &GroupTable) -> HashMap<usize, Vec<usize>> {
    let mut m: HashMap<usize, Vec<usize>> = HashMap::new();
    for i in 0..t.order() {
        m.entry(t.elt_order(i)).or_default().push(i);
    }
    m
}

#[cfg(test)]
mod tests {
    use crate::perm::{closure, Permutation};

    #[test]
    fn s4_has_eleven_subgroup_classes() {
        let g =
            closure(&[Permutation::parse(4, "(1 2 3 4)").unwrap(), Permutation::parse(4, "(1 2)").unwrap()]).unwrap();
        let t = g.table().unwrap();
        assert_eq!(t.subgroup_class_representatives().len(), 11);
        assert_eq!(t.all_subgroups().len(), 30);
    }
}
