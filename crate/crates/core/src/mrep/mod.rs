//! The small Mathieu character `μ`, its integrality obstructions, Lefschetz
//! numbers of Mathieu automorphisms and the classification of groups with
//! Mathieu actions.

mod character;
mod classify;
mod order16;

pub use character::{character_table, CharacterTable, CHARACTER_TABLE_CAP};
pub use classify::{
    classify_mathieu_groups, maximal_membership, satisfies_condition_four, sixteen_free_subgroups_of_s6,
    subgroups_up_to_conjugacy, Classification, ConditionFour, MathieuGroupRecord, RejectedCandidate, MAXIMAL_GROUPS,
};
pub use order16::{verify_no_order16, CosetExtension, NoOrder16Case, NoOrder16Log};

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

use crate::perm::{factorize, is_prime, PermError, PermGroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MrepError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("order {0} is not realized in M11")]
    UnrealizedOrder(usize),
    #[error("order {order} exceeds the cap {cap}")]
    OrderCap { order: usize, cap: usize },
    #[error("character table: {0}")]
    CharacterTable(String),
    #[error("group `{0}` does not admit a Mathieu action")]
    NotClassified(String),
    #[error("no Lefschetz profile for order {0}: Mathieu automorphisms have order at most 6")]
    LefschetzOrder(usize),
}

pub type Result<T> = std::result::Result<T, MrepError>;

/// `(element order, μ)` for the elements of M11.
pub const MU_TABLE: [(usize, i64); 8] = [(1, 12), (2, 4), (3, 3), (4, 4), (5, 2), (6, 1), (8, 2), (11, 1)];

/// The character `μ` of M11 as a function of element order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MuCharacter {
    pub table: BTreeMap<usize, i64>,
}

impl MuCharacter {
    pub fn new() -> Self {
        MuCharacter { table: MU_TABLE.iter().copied().collect() }
    }

    pub fn value(&self, order: usize) -> Result<i64> {
        self.table.get(&order).copied().ok_or(MrepError::UnrealizedOrder(order))
    }
}

impl Default for MuCharacter {
    fn default() -> Self {
        Self::new()
    }
}

/// `μ(g)` for an element of the given order.
pub fn mu_of_order(n: usize) -> Result<i64> {
    MU_TABLE.iter().find(|(o, _)| *o == n).map(|&(_, v)| v).ok_or(MrepError::UnrealizedOrder(n))
}

/// `μ(G) = Σ μ(g) / |G|`.
pub fn mu_average(g: &PermGroup) -> Result<Ratio<i64>> {
    let hist = g.order_histogram()?;
    let mut total = 0i64;
    let mut n = 0i64;
    for (&o, &c) in &hist {
        total += mu_of_order(o)? * c as i64;
        n += c as i64;
    }
    Ok(Ratio::new(total, n))
}

/// `μ` on the classes of a character table.
pub fn mu_class_function(ct: &CharacterTable) -> Result<Vec<i64>> {
    ct.class_orders().iter().map(|&o| mu_of_order(o)).collect()
}

/// Why `μ` fails to be a character of a group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Absence {
    /// Some element order lies outside the domain of `μ`.
    UnrealizedOrder(usize),
    /// `(μ, χ)` is not an integer for the irreducible in this row.
    NonIntegral { row: usize, value: String },
    /// `(μ, χ)` is a negative integer.
    Negative { row: usize, value: i64 },
}

/// Decomposition of `μ` into irreducibles, when it is a character.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum MuDecomposition {
    Present { multiplicities: Vec<u64> },
    Absent(Absence),
}

impl MuDecomposition {
    pub fn is_present(&self) -> bool {
        matches!(self, MuDecomposition::Present { .. })
    }

    pub fn multiplicities(&self) -> Option<&[u64]> {
        match self {
            MuDecomposition::Present { multiplicities } => Some(multiplicities),
            MuDecomposition::Absent(_) => None,
        }
    }

    /// Multiplicity of the trivial character, i.e. `dim V^G`.
    pub fn invariant_dimension(&self) -> Option<u64> {
        self.multiplicities().map(|m| m[0])
    }
}

/// Multiplicities of the irreducibles in `μ`, computed by exact inner products.
pub fn small_mathieu_decomposition(g: &PermGroup) -> Result<MuDecomposition> {
    for &o in g.order_histogram()?.keys() {
        if mu_of_order(o).is_err() {
            return Ok(MuDecomposition::Absent(Absence::UnrealizedOrder(o)));
        }
    }
    let ct = character_table(g)?;
    Ok(decompose(&ct))
}

/// Decomposition of `μ` against a precomputed table.
pub fn decompose(ct: &CharacterTable) -> MuDecomposition {
    let mu = match mu_class_function(ct) {
        Ok(m) => m,
        Err(MrepError::UnrealizedOrder(o)) => return MuDecomposition::Absent(Absence::UnrealizedOrder(o)),
        Err(_) => unreachable!(),
    };
    let mut mult = Vec::with_capacity(ct.len());
    for row in 0..ct.len() {
        let v = ct.inner_product(&mu, row);
        if !v.is_integer() {
            return MuDecomposition::Absent(Absence::NonIntegral { row, value: v.to_string() });
        }
        if *v.numer() < 0 {
            return MuDecomposition::Absent(Absence::Negative { row, value: *v.numer() });
        }
        mult.push(*v.numer() as u64);
    }
    MuDecomposition::Present { multiplicities: mult }
}

/// Whether `|G|` divides `2^4·3^2·5·11`, with the factorization as certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderBound {
    pub order: u64,
    pub holds: bool,
    pub factorization: Vec<(u64, u32)>,
}

/// Largest admissible prime powers: `2^4, 3^2, 5, 11`.
pub const ORDER_BOUND: [(u64, u32); 4] = [(2, 4), (3, 2), (5, 1), (11, 1)];

pub fn order_bound_for(order: u64) -> OrderBound {
    let factorization = factorize(order);
    let holds = factorization.iter().all(|&(p, e)| ORDER_BOUND.iter().any(|&(q, m)| q == p && e <= m));
    OrderBound { order, holds, factorization }
}

pub fn order_bound(g: &PermGroup) -> Result<OrderBound> {
    Ok(order_bound_for(g.order()? as u64))
}

/// Largest `a` with `μ(P)` integral for an elementary abelian `p`-group `P` of order `p^a`.
///
/// Non-identity elements all have `μ = μ(p)`, so `μ(P) = (12 + μ(p)(p^a - 1))/p^a`
/// is integral iff `p^a` divides `12 - μ(p)`.
pub fn odd_sylow_exponent_bound(p: u64) -> Result<u32> {
    if !is_prime(p) || p == 2 {
        return Err(MrepError::UnrealizedOrder(p as usize));
    }
    let e = mu_of_order(p as usize)?;
    let mut m = (12 - e) as u64;
    let mut a = 0;
    while m.is_multiple_of(p) {
        m /= p;
        a += 1;
    }
    Ok(a)
}

/// Admissible Lefschetz numbers of a Mathieu-type automorphism of given order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LefschetzProfile {
    pub order: usize,
    pub admissible_values: BTreeSet<i64>,
}

/// Lefschetz numbers of semi-symplectic automorphisms of order `1..=6`.
///
/// Order 2: `L = 12 - 2k` where `k ≤ 8` is the dimension of the `-1`
/// eigenspace on `H^2`. Higher orders: `L` counts isolated fixed points, half
/// the symplectic count on the K3 cover plus `0` or `2` anti-symplectic points
/// when the order is even.
pub fn lefschetz_values(order: usize) -> Result<LefschetzProfile> {
    let values: BTreeSet<i64> = match order {
        1 => [12].into(),
        2 => (0..=8).map(|k| 12 - 2 * k).collect(),
        3..=6 => {
            let k3_symplectic = [6, 4, 4, 2][order - 3];
            let anti: &[i64] = if order.is_multiple_of(2) { &[0, 2] } else { &[0] };
            anti.iter().map(|a| k3_symplectic / 2 + a).collect()
        }
        _ => return Err(MrepError::LefschetzOrder(order)),
    };
    Ok(LefschetzProfile { order, admissible_values: values })
}

/// Eigenvalue counts `a_k` of `e^{2πik/6}` for an order-6 element on 12-dimensional cohomology.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct EigencountSolution {
    pub a: [u32; 6],
    pub lefschetz: i64,
}

/// Constraints on the traces of `σ^2` and `σ^3`, and optionally on `L(σ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Order6Constraints {
    pub trace_square: i64,
    pub trace_cube: i64,
    pub allowed_lefschetz: Option<BTreeSet<i64>>,
}

impl Default for Order6Constraints {
    fn default() -> Self {
        Order6Constraints { trace_square: 3, trace_cube: 4, allowed_lefschetz: Some([1, 3].into()) }
    }
}

/// `2·Re(ζ_6^m)`.
const TWICE_COS_6: [i64; 6] = [2, 1, -1, -2, -1, 1];

/// Trace of `σ^j` from eigenvalue counts of `σ`; the counts must be conjugation-symmetric.
fn trace_power(a: &[u32; 6], j: usize) -> i64 {
    let twice: i64 = (0..6).map(|k| a[k] as i64 * TWICE_COS_6[(j * k) % 6]).sum();
    twice / 2
}

/// Every conjugation-symmetric eigencount vector of total 12 meeting the constraints.
pub fn solve_eigencounts(c: &Order6Constraints) -> BTreeSet<EigencountSolution> {
    let mut out = BTreeSet::new();
    for a0 in 0..=12u32 {
        for a1 in 0..=6u32 {
            for a2 in 0..=6u32 {
                let used = a0 + 2 * a1 + 2 * a2;
                if used > 12 {
                    continue;
                }
                let a = [a0, a1, a2, 12 - used, a2, a1];
                if trace_power(&a, 2) != c.trace_square || trace_power(&a, 3) != c.trace_cube {
                    continue;
                }
                let l = trace_power(&a, 1);
                if c.allowed_lefschetz.as_ref().is_some_and(|s| !s.contains(&l)) {
                    continue;
                }
                out.insert(EigencountSolution { a, lefschetz: l });
            }
        }
    }
    out
}

/// Solutions for an order-6 Mathieu-type element: `L(σ^2)=3`, `L(σ^3)=4`, `L(σ) ∈ {1,3}`.
pub fn solve_order6_eigencounts() -> BTreeSet<EigencountSolution> {
    solve_eigencounts(&Order6Constraints::default())
}

/// Rank of the negative definite part of the Néron–Severi lattice of an Enriques surface.
pub const NEGATIVE_RANK: usize = 9;

/// A quotient configuration: points of the cover with cyclic stabilizers, grouped by orbit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct QuotientConfiguration {
    pub order: usize,
    /// Stabilizer order of each singular point of the quotient.
    pub stabilizers: Vec<usize>,
    /// Solution of the Euler equation, when integral.
    pub c2: Option<i64>,
    /// Rank `Σ (s - 1)` of the exceptional `A_{s-1}` configurations.
    pub exceptional_rank: usize,
    pub admissible: bool,
    pub reason: String,
}

/// Euler number of the cover: `n(c2 - Σ s) + Σ n/s`. Returns `c2` when integral.
fn solve_euler(n: usize, stabilizers: &[usize]) -> Option<i64> {
    let n = n as i64;
    let ssum: i64 = stabilizers.iter().map(|&s| s as i64).sum();
    let orbits: i64 = stabilizers.iter().map(|&s| n / s as i64).sum();
    let rhs = 12 - orbits;
    (rhs % n == 0).then(|| rhs / n + ssum)
}

fn judge(n: usize, stabilizers: Vec<usize>, c_max: i64) -> QuotientConfiguration {
    let c2 = solve_euler(n, &stabilizers);
    let exceptional_rank = stabilizers.iter().map(|s| s - 1).sum();
    let mut reasons = Vec::new();
    match c2 {
        None => reasons.push("Euler equation has no integral solution".to_string()),
        Some(c) if c < 0 || c > c_max => reasons.push(format!("c2 = {c} outside 0..={c_max}")),
        Some(c) if c % 12 != 0 => reasons.push(format!("c2 = {c} is not a multiple of 12")),
        Some(_) => {}
    }
    if exceptional_rank > NEGATIVE_RANK {
        reasons.push(format!("exceptional lattice of rank {exceptional_rank} exceeds {NEGATIVE_RANK}"));
    }
    let reason = reasons.join("; ");
    QuotientConfiguration { order: n, stabilizers, c2, exceptional_rank, admissible: reason.is_empty(), reason }
}

/// A prime-order solution `12 = q(c2 - q r) + r` with `r` fixed points.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct WildSolution {
    pub q: u64,
    pub r: u64,
    pub c2: i64,
    /// `false` when `r` singular points of type `A_{q-1}` cannot fit in the negative definite part.
    pub rank_ok: bool,
}

/// All `(q, r, c2)` with `q` an odd prime, `r ≥ 1`, `0 ≤ c2 ≤ c_max`, `12 | c2`.
pub fn wild_order_solutions(c_max: i64) -> BTreeSet<WildSolution> {
    let mut out = BTreeSet::new();
    let bound = (c_max.max(0) + 12) as u64;
    for q in (3..=bound).filter(|&q| is_prime(q)) {
        for r in 1..=bound {
            let cfg = judge(q as usize, vec![q as usize; r as usize], c_max);
            if let Some(c2) = cfg.c2 {
                if (0..=c_max).contains(&c2) && c2 % 12 == 0 {
                    out.insert(WildSolution { q, r, c2, rank_ok: cfg.exceptional_rank <= NEGATIVE_RANK });
                }
            }
        }
    }
    out
}

/// Every stabilizer configuration of an automorphism of composite order `n`
/// consistent with the fixed-point counts of its prime-order powers.
///
/// A point with stabilizer of order `s` lies in an orbit of size `n/s` and is
/// fixed by the order-`p` power iff `p | s`. Prime counts come from the
/// rank-admissible prime solutions.
pub fn composite_order_configurations(n: usize, c_max: i64) -> Vec<QuotientConfiguration> {
    let prime_counts: BTreeMap<u64, u64> =
        wild_order_solutions(c_max).into_iter().filter(|s| s.rank_ok).map(|s| (s.q, s.r)).collect();
    let primes: Vec<u64> = factorize(n as u64).into_iter().map(|(p, _)| p).collect();
    if primes.iter().any(|p| !prime_counts.contains_key(p)) {
        return Vec::new();
    }
    let divisors: Vec<usize> = (2..=n).filter(|s| n.is_multiple_of(*s)).collect();
    let mut out = Vec::new();
    let mut counts = vec![0usize; divisors.len()];
    enumerate_counts(n, &divisors, &primes, &prime_counts, 0, &mut counts, c_max, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn enumerate_counts(
    n: usize,
    divisors: &[usize],
    primes: &[u64],
    prime_counts: &BTreeMap<u64, u64>,
    i: usize,
    counts: &mut Vec<usize>,
    c_max: i64,
    out: &mut Vec<QuotientConfiguration>,
) {
    let fixed = |p: u64, counts: &[usize]| -> u64 {
        divisors.iter().zip(counts).filter(|(s, _)| (**s as u64).is_multiple_of(p)).map(|(s, c)| (*c * (n / s)) as u64).sum()
    };
    if primes.iter().any(|&p| fixed(p, counts) > prime_counts[&p]) {
        return;
    }
    if i == divisors.len() {
        if primes.iter().all(|&p| fixed(p, counts) == prime_counts[&p]) {
            let stabilizers =
                divisors.iter().zip(counts.iter()).flat_map(|(&s, &c)| std::iter::repeat_n(s, c)).collect();
            out.push(judge(n, stabilizers, c_max));
        }
        return;
    }
    for c in 0..=12 {
        counts[i] = c;
        enumerate_counts(n, divisors, primes, prime_counts, i + 1, counts, c_max, out);
        if primes.iter().any(|&p| fixed(p, counts) > prime_counts[&p]) {
            break;
        }
    }
    counts[i] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_prime_case_matches_closed_form() {
        // 12 = q(c2 - q r) + r
        for (q, r) in [(3usize, 3usize), (5, 2), (11, 1)] {
            let c2 = solve_euler(q, &vec![q; r]).unwrap();
            assert_eq!(12, q as i64 * (c2 - (q * r) as i64) + r as i64);
        }
    }

    #[test]
    fn trace_power_identity() {
        let a = [12, 0, 0, 0, 0, 0];
        assert_eq!(trace_power(&a, 1), 12);
        let a = [0, 0, 0, 12, 0, 0];
        assert_eq!(trace_power(&a, 1), -12);
        assert_eq!(trace_power(&a, 2), 12);
    }
}
