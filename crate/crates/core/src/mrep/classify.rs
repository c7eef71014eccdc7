//! Groups admitting Mathieu actions, found by filtering subgroups of the
//! maximal groups and catalog entries through the character condition.

use serde::Serialize;

use super::{character_table, decompose, MrepError, MuDecomposition, Result, CHARACTER_TABLE_CAP};
use crate::perm::{catalog, embeds_up_to_iso, isomorphic, Catalog, GroupInvariants, PermGroup};

/// The five maximal groups with Mathieu actions.
pub const MAXIMAL_GROUPS: [&str; 5] = ["A6", "S5", "N72", "C2xA4", "C2xC4"];

/// Outcome of the character condition for a single group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionFour {
    pub holds: bool,
    pub decomposition: MuDecomposition,
    pub reason: Option<String>,
}

/// `μ` is a character with invariant dimension at least 3, the 2-Sylow subgroup
/// embeds in S6, and the group is not `Q12`.
pub fn satisfies_condition_four(g: &PermGroup) -> Result<ConditionFour> {
    let order = g.order()?;
    let fail = |decomposition: MuDecomposition, reason: String| ConditionFour {
        holds: false,
        decomposition,
        reason: Some(reason),
    };
    let decomposition = super::small_mathieu_decomposition(g)?;
    if order == 1 {
        return Ok(fail(decomposition, "trivial group".into()));
    }
    let Some(dim) = decomposition.invariant_dimension() else {
        return Ok(fail(decomposition, "mu is not a character".into()));
    };
    if dim < 3 {
        return Ok(fail(decomposition, format!("invariant dimension {dim} < 3")));
    }
    let s6 = catalog("S6")?;
    if !embeds_up_to_iso(&g.sylow(2)?, &s6)? {
        return Ok(fail(decomposition, "2-Sylow subgroup does not embed in S6".into()));
    }
    if isomorphic(g, &catalog("Q12")?)? {
        return Ok(fail(decomposition, "isomorphic to Q12".into()));
    }
    Ok(ConditionFour { holds: true, decomposition, reason: None })
}

/// One isomorphism class in the classification.
#[derive(Debug, Clone, Serialize)]
pub struct MathieuGroupRecord {
    pub name: String,
    pub order: usize,
    pub maximal: Vec<String>,
    pub mu: u64,
    pub degrees: Vec<u64>,
    pub multiplicities: Vec<u64>,
    pub solvable: bool,
    pub nilpotent: bool,
    #[serde(skip)]
    pub group: PermGroup,
}

/// A candidate class that failed the condition.
#[derive(Debug, Clone, Serialize)]
pub struct RejectedCandidate {
    pub name: String,
    pub order: usize,
    pub reason: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Classification {
    pub records: Vec<MathieuGroupRecord>,
    pub rejected: Vec<RejectedCandidate>,
    /// Number of candidate groups examined before merging isomorphic ones.
    pub candidates: usize,
    /// Catalog entries skipped for exceeding the character-table cap.
    pub skipped: Vec<String>,
}

impl Classification {
    pub fn names(&self) -> Vec<&str> {
        self.records.iter().map(|r| r.name.as_str()).collect()
    }

    pub fn find(&self, name: &str) -> Option<&MathieuGroupRecord> {
        let key = crate::perm::Catalog::bundled().entry(name).map(|e| e.name.clone());
        self.records.iter().find(|r| Some(&r.name) == key.as_ref() || r.name == name)
    }
}

struct IsoClass {
    invariants: GroupInvariants,
    group: PermGroup,
}

/// Merge groups into isomorphism classes, keeping the first representative.
fn iso_classes(groups: Vec<PermGroup>) -> Result<Vec<PermGroup>> {
    let mut classes: Vec<IsoClass> = Vec::new();
    for g in groups {
        let inv = GroupInvariants::of(&g)?;
        let mut found = false;
        for c in classes.iter().filter(|c| c.invariants == inv) {
            if isomorphic(&c.group, &g)? {
                found = true;
                break;
            }
        }
        if !found {
            classes.push(IsoClass { invariants: inv, group: g });
        }
    }
    Ok(classes.into_iter().map(|c| c.group).collect())
}

/// Catalog name of a group, found by isomorphism among entries of the same order.
fn catalog_name(cat: &Catalog, g: &PermGroup) -> Result<Option<String>> {
    let order = g.order()?;
    for e in cat.entries().iter().filter(|e| e.order == order) {
        if isomorphic(&cat.group(&e.name)?, g)? {
            return Ok(Some(e.name.clone()));
        }
    }
    Ok(None)
}

/// Every subgroup of `g` up to conjugacy.
pub fn subgroups_up_to_conjugacy(g: &PermGroup) -> Result<Vec<PermGroup>> {
    let t = g.table()?;
    t.subgroup_class_representatives().iter().map(|s| Ok(g.subgroup_from_set(s)?)).collect()
}

/// Classify all nontrivial groups satisfying the character condition.
pub fn classify_mathieu_groups() -> Result<Classification> {
    let cat = Catalog::bundled();
    let mut candidates = Vec::new();
    for m in MAXIMAL_GROUPS {
        candidates.extend(subgroups_up_to_conjugacy(&cat.group(m)?)?);
    }
    let mut skipped = Vec::new();
    for e in cat.entries() {
        if e.order > CHARACTER_TABLE_CAP {
            skipped.push(e.name.clone());
        } else {
            candidates.push(cat.group(&e.name)?);
        }
    }
    let n_candidates = candidates.len();
    let maximal: Vec<(String, PermGroup)> =
        MAXIMAL_GROUPS.iter().map(|m| Ok((m.to_string(), cat.group(m)?))).collect::<Result<_>>()?;

    let mut records = Vec::new();
    let mut rejected = Vec::new();
    for g in iso_classes(candidates)? {
        let order = g.order()?;
        let name = catalog_name(&cat, &g)?.unwrap_or_else(|| format!("group of order {order}"));
        let cond = satisfies_condition_four(&g)?;
        if !cond.holds {
            rejected.push(RejectedCandidate { name, order, reason: cond.reason.unwrap_or_default() });
            continue;
        }
        let ct = character_table(&g)?;
        let multiplicities = decompose(&ct).multiplicities().map(<[u64]>::to_vec).unwrap_or_default();
        let mut member = Vec::new();
        for (label, m) in &maximal {
            if embeds_up_to_iso(&g, m)? {
                member.push(label.clone());
            }
        }
        let t = g.table()?;
        records.push(MathieuGroupRecord {
            name: name.clone(),
            order,
            maximal: member,
            mu: multiplicities[0],
            degrees: ct.degrees().to_vec(),
            multiplicities,
            solvable: t.is_solvable(),
            nilpotent: t.is_nilpotent(),
            group: g.clone().with_name(name),
        });
    }
    records.sort_by(|a, b| (a.order, &a.name).cmp(&(b.order, &b.name)));
    rejected.sort_by(|a, b| (a.order, &a.name).cmp(&(b.order, &b.name)));
    Ok(Classification { records, rejected, candidates: n_candidates, skipped })
}

/// Maximal groups containing `g` up to isomorphism; fails unless `g` satisfies the condition.
pub fn maximal_membership(g: &PermGroup) -> Result<Vec<String>> {
    if !satisfies_condition_four(g)?.holds {
        let label = g.name().map(str::to_string).unwrap_or_else(|| format!("{:?}", g.generators()));
        return Err(MrepError::NotClassified(label));
    }
    let mut out = Vec::new();
    for m in MAXIMAL_GROUPS {
        if embeds_up_to_iso(g, &catalog(m)?)? {
            out.push(m.to_string());
        }
    }
    Ok(out)
}

/// Isomorphism classes of subgroups of S6 whose order is not divisible by 16.
pub fn sixteen_free_subgroups_of_s6() -> Result<Vec<PermGroup>> {
    let s6 = catalog("S6")?;
    let subs: Vec<PermGroup> = subgroups_up_to_conjugacy(&s6)?
        .into_iter()
        .filter(|h| h.order().map(|o| o % 16 != 0).unwrap_or(false))
        .collect();
    iso_classes(subs)
}
