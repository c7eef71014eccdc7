//! Named groups read from the generator fixture, plus the cyclic, dihedral,
//! dicyclic, symmetric and alternating families by name.

use std::collections::BTreeMap;
use std::path::Path;

use super::{PermError, PermGroup, Permutation, Result};

const BUNDLED: &str = include_str!("../../fixtures/groups.txt");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub degree: usize,
    pub order: usize,
    pub aliases: Vec<String>,
    pub transitive: bool,
    pub generators: Vec<String>,
    pub comments: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
    lookup: BTreeMap<String, usize>,
}

/// Canonical spelling: drops spaces, braces and underscores; maps Unicode
/// product, power and semidirect signs to `x`, `^n` and `:`.
pub fn normalize_name(name: &str) -> String {
    let mut out = String::new();
    for c in name.chars() {
        match c {
            ' ' | '_' | '{' | '}' => {}
            '×' => out.push('x'),
            '²' => out.push_str("^2"),
            '³' => out.push_str("^3"),
            '⁴' => out.push_str("^4"),
            '⋊' | '⋉' => out.push(':'),
            'ℤ' => out.push('C'),
            _ => out.push(c),
        }
    }
    out
}

impl Catalog {
    pub fn bundled() -> Catalog {
        Catalog::parse(BUNDLED).expect("bundled group fixture parses")
    }

    pub fn from_file(path: &Path) -> Result<Catalog> {
        let text = std::fs::read_to_string(path).map_err(|e| PermError::Fixture(format!("{}: {e}", path.display())))?;
        Catalog::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Catalog> {
        let mut entries: Vec<CatalogEntry> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(c) = line.strip_prefix('#') {
                if let Some(e) = entries.last_mut() {
                    e.comments.push(c.trim().to_string());
                }
                continue;
            }
            if let Some(rest) = line.strip_prefix("group ") {
                let toks: Vec<&str> = rest.split_whitespace().collect();
                let bad = || PermError::Fixture(format!("line {}: malformed header `{line}`", lineno + 1));
                let name = toks.first().ok_or_else(bad)?.to_string();
                let mut degree = None;
                let mut order = None;
                let mut aliases = Vec::new();
                let mut transitive = false;
                let mut i = 1;
                while i < toks.len() {
                    match toks[i] {
                        "degree" => {
                            degree = Some(toks.get(i + 1).and_then(|t| t.parse().ok()).ok_or_else(bad)?);
                            i += 2;
                        }
                        "order" => {
                            order = Some(toks.get(i + 1).and_then(|t| t.parse().ok()).ok_or_else(bad)?);
                            i += 2;
                        }
                        "transitive" => {
                            transitive = true;
                            i += 1;
                        }
                        "aliases" => {
                            aliases.extend(toks[i + 1..].iter().map(|s| s.to_string()));
                            i = toks.len();
                        }
                        _ => return Err(bad()),
                    }
                }
                entries.push(CatalogEntry {
                    name,
                    degree: degree.ok_or_else(bad)?,
                    order: order.ok_or_else(bad)?,
                    aliases,
                    transitive,
                    generators: Vec::new(),
                    comments: Vec::new(),
                });
                continue;
            }
            let e = entries
                .last_mut()
                .ok_or_else(|| PermError::Fixture(format!("line {}: generator before any header", lineno + 1)))?;
            Permutation::parse(e.degree, line)?;
            e.generators.push(line.to_string());
        }
        let mut lookup = BTreeMap::new();
        for (i, e) in entries.iter().enumerate() {
            for n in std::iter::once(&e.name).chain(&e.aliases) {
                if lookup.insert(normalize_name(n), i).is_some() {
                    return Err(PermError::Fixture(format!("duplicate group name `{n}`")));
                }
            }
        }
        Ok(Catalog { entries, lookup })
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn names(&self) -> Vec<String> {
        self.entries.iter().map(|e| e.name.clone()).collect()
    }

    pub fn entry(&self, name: &str) -> Option<&CatalogEntry> {
        self.lookup.get(&normalize_name(name)).map(|&i| &self.entries[i])
    }

    /// Builds the named group; fixture entries are checked against their
    /// recorded order and transitivity flag.
    pub fn group(&self, name: &str) -> Result<PermGroup> {
        if let Some(e) = self.entry(name) {
            let gens = e.generators.iter().map(|g| Permutation::parse(e.degree, g)).collect::<Result<Vec<_>>>()?;
            let g = PermGroup::new(e.degree, gens)?.with_name(e.name.clone());
            let o = g.order()?;
            if o != e.order {
                return Err(PermError::Fixture(format!("{}: closure has order {o}, fixture says {}", e.name, e.order)));
            }
            if e.transitive {
                let all: Vec<usize> = (1..=e.degree).collect();
                if g.orbit_lengths(&all)? != vec![e.degree] {
                    return Err(PermError::Fixture(format!("{} is not transitive", e.name)));
                }
            }
            return Ok(g);
        }
        if let Some(g) = family(name)? {
            return Ok(g);
        }
        Err(PermError::UnknownGroup {
            name: name.to_string(),
            valid: format!("{} and the families Cn, D2n, Q4n, Sn, An", self.names().join(", ")),
        })
    }
}

/// Groups named by family and parameter.
fn family(name: &str) -> Result<Option<PermGroup>> {
    let n = normalize_name(name);
    let (head, tail) = n.split_at(n.chars().take_while(|c| c.is_ascii_alphabetic()).count());
    let k: usize = match tail.parse() {
        Ok(k) if (1..=64).contains(&k) => k,
        _ => return Ok(None),
    };
    let cyc = |deg: usize, pts: Vec<usize>| Permutation::from_cycles(deg, &[pts]);
    let g = match head {
        "C" => PermGroup::new(k, vec![cyc(k, (1..=k).collect())?])?,
        "D" if k.is_multiple_of(2) && k >= 4 => {
            let m = k / 2;
            let r = cyc(m, (1..=m).collect())?;
            let imgs: Vec<usize> = (0..m).map(|i| (m - i) % m + 1).collect();
            PermGroup::new(m, vec![r, Permutation::from_images(&imgs)?])?
        }
        "Q" if k.is_multiple_of(4) && k >= 8 => {
            // left-regular action on pairs (a^i, a^i b) with a of order 2m, b^2 = a^m, b a b^-1 = a^-1
            let m = k / 4;
            let n2 = 2 * m;
            let idx = |i: usize, j: usize| j * n2 + (i % n2);
            let mut a = vec![0; k];
            let mut b = vec![0; k];
            for i in 0..n2 {
                a[idx(i, 0)] = idx(i + 1, 0) + 1;
                a[idx(i, 1)] = idx(i + n2 - 1, 1) + 1;
                b[idx(i, 0)] = idx(n2 - i, 1) + 1;
                b[idx(i, 1)] = idx(n2 - i + m, 0) + 1;
            }
            let _ = &b;
            // right multiplication x -> x a and x -> x b, with (a^i b) a = a^(i-1) b
            let mut ra = vec![0; k];
            let mut rb = vec![0; k];
            for i in 0..n2 {
                ra[idx(i, 0)] = idx(i + 1, 0) + 1;
                ra[idx(i, 1)] = idx(i + n2 - 1, 1) + 1;
                rb[idx(i, 0)] = idx(i, 1) + 1;
                rb[idx(i, 1)] = idx(i + m, 0) + 1;
            }
            PermGroup::new(k, vec![Permutation::from_images(&ra)?, Permutation::from_images(&rb)?])?
        }
        "S" if k >= 2 => PermGroup::new(k, vec![cyc(k, (1..=k).collect())?, cyc(k, vec![1, 2])?])?,
        "S" => PermGroup::trivial(1),
        "A" if k >= 3 => {
            let second = if k % 2 == 1 { (1..=k).collect() } else { (2..=k).collect() };
            PermGroup::new(k, vec![cyc(k, vec![1, 2, 3])?, cyc(k, second)?])?
        }
        "A" => PermGroup::trivial(1),
        _ => return Ok(None),
    };
    Ok(Some(g.with_name(n)))
}

/// Named group from the bundled catalog.
pub fn catalog(name: &str) -> Result<PermGroup> {
    Catalog::bundled().group(name)
}

pub fn catalog_names() -> Vec<String> {
    Catalog::bundled().names()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_validates() {
        let c = Catalog::bundled();
        for e in c.entries() {
            if e.name == "M12" {
                continue;
            }
            c.group(&e.name).unwrap_or_else(|err| panic!("{}: {err}", e.name));
        }
    }

    #[test]
    fn families_have_expected_orders() {
        for (n, o) in [("C7", 7), ("D14", 14), ("Q16", 16), ("Q12", 12), ("S7", 5040), ("A7", 2520), ("Q20", 20)] {
            assert_eq!(catalog(n).unwrap().order().unwrap(), o, "{n}");
        }
    }

    #[test]
    fn unknown_name_lists_choices() {
        match catalog("Z9x") {
            Err(PermError::UnknownGroup { valid, .. }) => assert!(valid.contains("M11")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unicode_spellings() {
        assert_eq!(catalog("C3²:C4").unwrap().order().unwrap(), 36);
        assert_eq!(catalog("S_{3,3}").unwrap().order().unwrap(), 36);
        assert_eq!(catalog("C2×D8").unwrap().order().unwrap(), 16);
    }
}
