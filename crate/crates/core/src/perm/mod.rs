//! Permutations of `{1..n}` and materialized permutation groups.
//!
//! Points are 1-based at the API boundary and 0-based in storage. The
//! product `a.compose(&b)` applies `a` first, so `x^(ab) = (x^a)^b`.

mod catalog;
mod iso;
mod table;

pub use catalog::{catalog, catalog_names, Catalog, CatalogEntry};
pub use iso::{embeds_up_to_iso, find_embedding, isomorphic, GroupInvariants};
pub use table::{GroupTable, SubgroupSet};

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

/// Default bound on the number of elements a closure may materialize.
pub const DEFAULT_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("images do not form a bijection of 1..{0}")]
    NotBijection(usize),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("cannot parse cycle notation `{0}`")]
    Parse(String),
    #[error("group too large: closure exceeded the cap of {cap} elements")]
    TooLarge { cap: usize },
    #[error("order {order} exceeds the cap {cap} for this operation")]
    OrderCap { order: usize, cap: usize },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("no generators given and no degree known")]
    Empty,
    #[error("unknown group `{name}`; valid names: {valid}")]
    UnknownGroup { name: String, valid: String },
    #[error("domain is not stable: generator {generator} maps point {point} outside it")]
    NotStable { generator: String, point: usize },
    #[error("point {point} outside 1..{degree}")]
    PointRange { point: usize, degree: usize },
    #[error("fixture error: {0}")]
    Fixture(String),
}

pub type Result<T> = std::result::Result<T, PermError>;

/// A bijection of `{1..n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    map: Vec<u16>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { map: (0..degree as u16).collect() }
    }

    /// Builds a permutation from 1-based images: `images[i-1]` is the image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut map = Vec::with_capacity(n);
        for &im in images {
            if im == 0 || im > n || seen[im - 1] {
                return Err(PermError::NotBijection(n));
            }
            seen[im - 1] = true;
            map.push((im - 1) as u16);
        }
        Ok(Permutation { map })
    }

    /// Builds a permutation from 0-based images without copying through 1-based form.
    pub(crate) fn from_zero_based(map: Vec<u16>) -> Self {
        debug_assert!({
            let mut s = map.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| v as usize == i)
        });
        Permutation { map }
    }

    /// Product of the given cycles (1-based), applied left to right.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut acc = Permutation::identity(degree);
        for cyc in cycles {
            let mut map: Vec<u16> = (0..degree as u16).collect();
            let mut seen = std::collections::HashSet::new();
            for (k, &p) in cyc.iter().enumerate() {
                if p == 0 || p > degree {
                    return Err(PermError::PointRange { point: p, degree });
                }
                if !seen.insert(p) {
                    return Err(PermError::NotBijection(degree));
                }
                let q = cyc[(k + 1) % cyc.len()];
                map[p - 1] = (q - 1) as u16;
            }
            acc = acc.compose(&Permutation { map });
        }
        Ok(acc)
    }

    /// Parses cycle notation such as `(1 2 3)(4 5)` or `(1,2,3)`; `()` is the identity.
    pub fn parse(degree: usize, text: &str) -> Result<Self> {
        let t = text.trim();
        let mut cycles = Vec::new();
        let mut rest = t;
        while !rest.is_empty() {
            let rest_trim = rest.trim_start();
            if rest_trim.is_empty() {
                break;
            }
            if !rest_trim.starts_with('(') {
                return Err(PermError::Parse(text.to_string()));
            }
            let close = rest_trim.find(')').ok_or_else(|| PermError::Parse(text.to_string()))?;
            let body = &rest_trim[1..close];
            let pts: std::result::Result<Vec<usize>, _> = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>())
                .collect();
            let pts = pts.map_err(|_| PermError::Parse(text.to_string()))?;
            if !pts.is_empty() {
                cycles.push(pts);
            }
            rest = &rest_trim[close + 1..];
        }
        Permutation::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    /// Image of the 1-based point `p`.
    pub fn image(&self, p: usize) -> usize {
        self.map[p - 1] as usize + 1
    }

    /// 1-based image sequence.
    pub fn images(&self) -> Vec<usize> {
        self.map.iter().map(|&v| v as usize + 1).collect()
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation { map: self.map.iter().map(|&i| other.map[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut map = vec![0u16; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            map[v as usize] = i as u16;
        }
        Permutation { map }
    }

    pub fn pow(&self, e: i64) -> Permutation {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&b);
            }
            b = b.compose(&b);
            e >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| v as usize == i)
    }

    /// Conjugate `g^-1 self g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().compose(self).compose(g)
    }

    /// Cycles of length at least two, each starting at its least point (1-based).
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.map.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut cyc = vec![s + 1];
            seen[s] = true;
            let mut x = self.map[s] as usize;
            while x != s {
                seen[x] = true;
                cyc.push(x + 1);
                x = self.map[x] as usize;
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    pub fn order(&self) -> usize {
        self.cycles().iter().fold(1usize, |acc, c| num_integer::lcm(acc, c.len()))
    }

    /// Restriction to a stable point set, relabelled by position in `domain`.
    pub fn restrict(&self, domain: &[usize]) -> Option<Permutation> {
        let pos: HashMap<usize, usize> = domain.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let mut map = Vec::with_capacity(domain.len());
        for &p in domain {
            map.push(*pos.get(&self.image(p))? as u16);
        }
        Some(Permutation { map })
    }

    /// Same permutation on `degree >= self.degree()` points, fixing the new ones.
    pub fn extend(&self, degree: usize) -> Permutation {
        let mut map = self.map.clone();
        map.extend(self.map.len() as u16..degree as u16);
        Permutation { map }
    }

    /// Shifts the support up by `offset` inside a larger degree.
    pub fn shifted(&self, offset: usize, degree: usize) -> Permutation {
        let mut map: Vec<u16> = (0..degree as u16).collect();
        for (i, &v) in self.map.iter().enumerate() {
            map[i + offset] = v + offset as u16;
        }
        Permutation { map }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let s: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", s.join(" "))?;
        }
        Ok(())
    }
}

/// Materialized element set in lexicographic order; the identity is first.
#[derive(Debug)]
pub struct Elements {
    pub list: Vec<Permutation>,
    pub index: HashMap<Permutation, usize>,
}

/// A permutation group given by generators, with its elements materialized on demand.
#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    name: Option<String>,
    cap: usize,
    elements: OnceLock<Elements>,
    table: OnceLock<GroupTable>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let g = PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            name: self.name.clone(),
            cap: self.cap,
            elements: OnceLock::new(),
            table: OnceLock::new(),
        };
        if let Some(e) = self.elements.get() {
            let _ = g.elements.set(Elements { list: e.list.clone(), index: e.index.clone() });
        }
        g
    }
}

fn closure_elements(degree: usize, gens: &[Permutation], cap: usize) -> Result<Elements> {
    let id = Permutation::identity(degree);
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    let mut list = vec![id.clone()];
    index.insert(id, 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in gens {
            let p = list[i].compose(g);
            if !index.contains_key(&p) {
                if list.len() >= cap {
                    return Err(PermError::TooLarge { cap });
                }
                index.insert(p.clone(), list.len());
                queue.push_back(list.len());
                list.push(p);
            }
        }
    }
    list.sort();
    let index = list.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    Ok(Elements { list, index })
}

/// Group generated by `generators`, materialized with the default cap.
pub fn closure(generators: &[Permutation]) -> Result<PermGroup> {
    closure_with_cap(generators, DEFAULT_CAP)
}

pub fn closure_with_cap(generators: &[Permutation], cap: usize) -> Result<PermGroup> {
    let degree = generators.first().ok_or(PermError::Empty)?.degree();
    let g = PermGroup::new(degree, generators.to_vec())?.with_cap(cap);
    g.materialize()?;
    Ok(g)
}

impl PermGroup {
    /// Unmaterialized group; elements are computed on first use.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<PermGroup> {
        for g in &generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch { expected: degree, found: g.degree() });
            }
        }
        let generators = generators.into_iter().filter(|g| !g.is_identity()).collect();
        Ok(PermGroup {
            degree,
            generators,
            name: None,
            cap: DEFAULT_CAP,
            elements: OnceLock::new(),
            table: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::new(degree, vec![]).expect("no generators")
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn is_materialized(&self) -> bool {
        self.elements.get().is_some()
    }

    pub fn materialize(&self) -> Result<&Elements> {
        if let Some(e) = self.elements.get() {
            return Ok(e);
        }
        let e = closure_elements(self.degree, &self.generators, self.cap)?;
        let _ = self.elements.set(e);
        Ok(self.elements.get().expect("just set"))
    }

    /// Elements in lexicographic order of image sequences.
    pub fn elements(&self) -> Result<&[Permutation]> {
        Ok(&self.materialize()?.list)
    }

    pub fn order(&self) -> Result<usize> {
        Ok(self.materialize()?.list.len())
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        Ok(self.materialize()?.index.contains_key(p))
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.get().and_then(|e| e.index.get(p).copied())
    }

    /// Cayley table; capped at 4096 elements.
    pub fn table(&self) -> Result<&GroupTable> {
        if let Some(t) = self.table.get() {
            return Ok(t);
        }
        let e = self.materialize()?;
        if e.list.len() > table::TABLE_CAP {
            return Err(PermError::OrderCap { order: e.list.len(), cap: table::TABLE_CAP });
        }
        let t = GroupTable::from_perm_group(self, e);
        let _ = self.table.set(t);
        Ok(self.table.get().expect("just set"))
    }

    /// Subgroup generated by elements of this group given by index.
    pub fn subgroup_from_indices(&self, idx: &[usize]) -> Result<PermGroup> {
        let e = self.materialize()?;
        let gens: Vec<Permutation> = idx.iter().map(|&i| e.list[i].clone()).collect();
        let g = PermGroup::new(self.degree, gens)?;
        g.materialize()?;
        Ok(g)
    }

    /// Subgroup whose element set is given by indices; generators are chosen greedily.
    pub fn subgroup_from_set(&self, set: &SubgroupSet) -> Result<PermGroup> {
        let t = self.table()?;
        let gens = t.generators_of(set);
        self.subgroup_from_indices(&gens)
    }

    /// Number of elements of each order.
    pub fn order_histogram(&self) -> Result<BTreeMap<usize, usize>> {
        let mut h = BTreeMap::new();
        for p in self.elements()? {
            *h.entry(p.order()).or_insert(0) += 1;
        }
        Ok(h)
    }

    /// A Sylow `p`-subgroup, grown one normalizing `p`-element at a time.
    pub fn sylow(&self, p: u64) -> Result<PermGroup> {
        if !is_prime(p) {
            return Err(PermError::NotPrime(p));
        }
        let p = p as usize;
        let els = self.elements()?;
        let mut target = 1usize;
        let mut n = els.len();
        while n % p == 0 {
            n /= p;
            target *= p;
        }
        let is_p_power = |k: usize| {
            let mut k = k;
            while k.is_multiple_of(p) {
                k /= p;
            }
            k == 1
        };
        let p_elements: Vec<&Permutation> = els.iter().filter(|x| is_p_power(x.order())).collect();
        let mut current = PermGroup::trivial(self.degree);
        current.materialize()?;
        while current.order()? < target {
            let cur_els = current.elements()?;
            let mut grown = None;
            for x in &p_elements {
                if current.contains(x)? {
                    continue;
                }
                let xi = x.inverse();
                let normalizes =
                    current.generators().iter().all(|g| current.contains(&xi.compose(g).compose(x)).unwrap_or(false));
                if normalizes || cur_els.len() == 1 {
                    let mut gens = current.generators().to_vec();
                    gens.push((*x).clone());
                    let cand = PermGroup::new(self.degree, gens)?;
                    let o = cand.order()?;
                    if is_p_power(o) {
                        grown = Some(cand);
                        break;
                    }
                }
            }
            current = grown.expect("a normalizing p-element exists while P is not Sylow");
        }
        Ok(current)
    }

    /// Conjugacy classes, ordered by their least element.
    pub fn conjugacy_classes(&self) -> Result<ConjugacyClassPartition> {
        let els = self.materialize()?;
        let n = els.list.len();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<Permutation>> = Vec::new();
        for i in 0..n {
            if class_of[i] != usize::MAX {
                continue;
            }
            let cid = classes.len();
            let mut members = vec![i];
            class_of[i] = cid;
            let mut k = 0;
            while k < members.len() {
                let x = &els.list[members[k]];
                for g in &self.generators {
                    let y = x.conjugate_by(g);
                    let j = els.index[&y];
                    if class_of[j] == usize::MAX {
                        class_of[j] = cid;
                        members.push(j);
                    }
                }
                k += 1;
            }
            members.sort_unstable();
            classes.push(members.into_iter().map(|j| els.list[j].clone()).collect());
        }
        let representatives = classes.iter().map(|c| c[0].clone()).collect();
        Ok(ConjugacyClassPartition { classes, representatives })
    }

    /// Orbit lengths (ascending) on a stable subset of points.
    pub fn orbit_lengths(&self, domain: &[usize]) -> Result<Vec<usize>> {
        let set: std::collections::BTreeSet<usize> = domain.iter().copied().collect();
        for &p in &set {
            if p == 0 || p > self.degree {
                return Err(PermError::PointRange { point: p, degree: self.degree });
            }
        }
        for g in &self.generators {
            for &p in &set {
                if !set.contains(&g.image(p)) {
                    return Err(PermError::NotStable { generator: g.to_string(), point: p });
                }
            }
        }
        let orbits = self.orbits_on(&set.iter().copied().collect::<Vec<_>>());
        let mut lens: Vec<usize> = orbits.iter().map(|o| o.len()).collect();
        lens.sort_unstable();
        Ok(lens)
    }

    /// Orbits on a stable point set, each sorted, ordered by least point.
    pub fn orbits_on(&self, domain: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = std::collections::BTreeSet::new();
        let mut out = Vec::new();
        let mut sorted = domain.to_vec();
        sorted.sort_unstable();
        for &p in &sorted {
            if seen.contains(&p) {
                continue;
            }
            let mut orb = vec![p];
            seen.insert(p);
            let mut k = 0;
            while k < orb.len() {
                for g in &self.generators {
                    let q = g.image(orb[k]);
                    if seen.insert(q) {
                        orb.push(q);
                    }
                }
                k += 1;
            }
            orb.sort_unstable();
            out.push(orb);
        }
        out
    }

    /// Elements fixing `point`.
    pub fn stabilizer(&self, point: usize) -> Result<PermGroup> {
        self.filtered_subgroup(|p| p.image(point) == point)
    }

    /// Elements mapping `set` onto itself.
    pub fn set_stabilizer(&self, set: &[usize]) -> Result<PermGroup> {
        let s: std::collections::BTreeSet<usize> = set.iter().copied().collect();
        self.filtered_subgroup(|p| s.iter().all(|&x| s.contains(&p.image(x))))
    }

    /// Subgroup given as the elements satisfying a predicate closed under products.
    pub fn filtered_subgroup<F: Fn(&Permutation) -> bool>(&self, pred: F) -> Result<PermGroup> {
        let members: Vec<Permutation> = self.elements()?.iter().filter(|p| pred(p)).cloned().collect();
        let mut gens: Vec<Permutation> = Vec::new();
        let mut current = PermGroup::trivial(self.degree);
        current.materialize()?;
        for m in &members {
            if !current.contains(m)? {
                gens.push(m.clone());
                current = PermGroup::new(self.degree, gens.clone())?;
                if current.order()? == members.len() {
                    break;
                }
            }
        }
        debug_assert_eq!(current.order()?, members.len());
        Ok(current)
    }

    /// Derived subgroup.
    pub fn derived_subgroup(&self) -> Result<PermGroup> {
        let els = self.elements()?;
        let mut gens = Vec::new();
        let mut current = PermGroup::trivial(self.degree);
        current.materialize()?;
        for a in &self.generators {
            for b in els {
                let c = a.inverse().compose(&b.inverse()).compose(a).compose(b);
                if !current.contains(&c)? {
                    gens.push(c);
                    current = PermGroup::new(self.degree, gens.clone())?;
                }
            }
        }
        // Normal closure of the commutators of generators with all elements is the derived subgroup.
        loop {
            let mut grew = false;
            let cur_gens = current.generators().to_vec();
            for c in &cur_gens {
                for g in &self.generators {
                    let d = c.conjugate_by(g);
                    if !current.contains(&d)? {
                        gens.push(d);
                        current = PermGroup::new(self.degree, gens.clone())?;
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        Ok(current)
    }

    /// Center.
    pub fn center(&self) -> Result<PermGroup> {
        let gens = self.generators.clone();
        self.filtered_subgroup(|p| gens.iter().all(|g| p.compose(g) == g.compose(p)))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter().all(|a| g.iter().all(|b| a.compose(b) == b.compose(a)))
    }

    /// Same abstract group acting on the listed stable points only.
    pub fn restrict_to(&self, domain: &[usize]) -> Result<PermGroup> {
        let mut gens = Vec::new();
        for g in &self.generators {
            let r = g.restrict(domain).ok_or_else(|| PermError::NotStable {
                generator: g.to_string(),
                point: domain.iter().copied().find(|&p| !domain.contains(&g.image(p))).unwrap_or(0),
            })?;
            gens.push(r);
        }
        PermGroup::new(domain.len(), gens)
    }

    /// Direct product acting on the disjoint union of the two point sets.
    pub fn direct_product(&self, other: &PermGroup) -> Result<PermGroup> {
        let n = self.degree + other.degree;
        let mut gens: Vec<Permutation> = self.generators.iter().map(|g| g.extend(n)).collect();
        gens.extend(other.generators.iter().map(|g| g.shifted(self.degree, n)));
        PermGroup::new(n, gens)
    }

    /// Right regular representation on the materialized elements.
    pub fn regular_representation(&self) -> Result<PermGroup> {
        let els = self.materialize()?;
        let n = els.list.len();
        let mut gens = Vec::new();
        for g in &self.generators {
            let map: Vec<u16> = els.list.iter().map(|x| els.index[&x.compose(g)] as u16).collect();
            gens.push(Permutation::from_zero_based(map));
        }
        PermGroup::new(n, gens)
    }
}

/// Conjugacy classes of a materialized group.
#[derive(Debug, Clone)]
pub struct ConjugacyClassPartition {
    pub classes: Vec<Vec<Permutation>>,
    pub representatives: Vec<Permutation>,
}

impl ConjugacyClassPartition {
    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.len()).collect()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as `(prime, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        let mut e = 0;
        while n.is_multiple_of(d) {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse(n, s).unwrap()
    }

    #[test]
    fn compose_applies_left_first() {
        let a = p(3, "(1 2)");
        let b = p(3, "(2 3)");
        // 1 -> 2 -> 3
        assert_eq!(a.compose(&b).image(1), 3);
        assert_eq!(a.compose(&b), p(3, "(1 3 2)"));
    }

    #[test]
    fn identity_closure_is_trivial() {
        let g = closure(&[Permutation::identity(5)]).unwrap();
        assert_eq!(g.order().unwrap(), 1);
    }

    #[test]
    fn s5_from_transposition_and_five_cycle() {
        let g = closure(&[p(5, "(1 2)"), p(5, "(1 2 3 4 5)")]).unwrap();
        assert_eq!(g.order().unwrap(), 120);
    }

    #[test]
    fn cap_is_enforced() {
        let err = closure_with_cap(&[p(5, "(1 2)"), p(5, "(1 2 3 4 5)")], 100).unwrap_err();
        assert_eq!(err, PermError::TooLarge { cap: 100 });
    }

    #[test]
    fn bad_images_rejected() {
        assert!(Permutation::from_images(&[1, 1, 2]).is_err());
        assert!(Permutation::from_images(&[2, 3, 1]).is_ok());
    }

    #[test]
    fn trivial_orbits() {
        let g = PermGroup::trivial(3);
        assert_eq!(g.orbit_lengths(&[1, 2, 3]).unwrap(), vec![1, 1, 1]);
    }

    #[test]
    fn unstable_domain_names_generator() {
        let g = closure(&[p(4, "(1 2)(3 4)")]).unwrap();
        match g.orbit_lengths(&[1, 3]) {
            Err(PermError::NotStable { generator, .. }) => assert_eq!(generator, "(1 2)(3 4)"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn identity_is_first_element() {
        let g = closure(&[p(4, "(1 2 3 4)"), p(4, "(1 2)")]).unwrap();
        assert!(g.elements().unwrap()[0].is_identity());
    }
}
