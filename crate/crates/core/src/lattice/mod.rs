//! Integral quadratic lattices with exact Gram matrices.
//!
//! Vectors of a lattice are coordinate rows in its basis. Root lattices are
//! negative definite; `L(r)` scales the form by `r`.

pub mod appendix;
mod enumerate;
pub mod f2;
mod glue;
pub mod golay;
mod gonality;
pub mod linalg;
mod roots;

pub use enumerate::{short_vectors, vectors_in_slab, vectors_up_to};
pub use f2::{f2_isometry, mod2_reduction, F2NormalForm, F2QuadraticSpace, Mod2Reduction};
pub use glue::{glue, glue_along_f2_map, same_lattice, GluedLattice};
pub use gonality::{
    dual_basis, find_isometry_from_t237, gonality, gonality_profile, isotropic_at, isotropic_sequence,
    isotropic_sequence_in, pull_back, transport, Gonality, IsotropicSequence,
};
pub use roots::{root_type, roots, RootType};

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use linalg::{
    as_integral, congruence, determinant, integer_kernel, integer_kernel_rat, inverse, mat_vec_rat, rank_rat, rat,
    rational_span_basis, saturate, smith_normal_form, solve_left, to_rat_matrix, to_rat_vec, IntMatrix, RatMatrix,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("Gram matrix is not symmetric")]
    NotSymmetric,
    #[error("degenerate lattice")]
    Degenerate,
    #[error("lattice is not integral")]
    NotIntegral,
    #[error("invalid lattice name `{0}`")]
    InvalidName(String),
    #[error("indefinite enumeration needs a slicing vector of positive norm")]
    NeedsSlicing,
    #[error("lattice is not definite")]
    NotDefinite,
    #[error("generators are linearly dependent")]
    DependentGenerators,
    #[error("vector does not lie in the lattice")]
    NotInLattice,
    #[error("vector of length {got} in a lattice of rank {rank}")]
    WrongLength { got: usize, rank: usize },
    #[error("action does not preserve the Gram matrix")]
    GramNotPreserved,
    #[error("glue is not integral: pairing of generators {0} and {1} is {2}")]
    NonIntegralGlue(usize, usize, String),
    #[error("root graph is not a simply-laced Dynkin diagram")]
    NotSimplyLaced,
    #[error("search cap exceeded: {0}")]
    SearchCap(String),
    #[error("{0}")]
    Failed(String),
}

pub type Result<T> = std::result::Result<T, LatticeError>;

/// Free module of finite rank with a symmetric rational bilinear form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerLattice {
    gram: RatMatrix,
    labels: Option<Vec<String>>,
}

/// Coordinates of a vector in a lattice basis; rational for dual vectors.
pub type LatticeVector = Vec<BigRational>;

impl IntegerLattice {
    pub fn new(gram: RatMatrix) -> Result<Self> {
        let n = gram.len();
        if gram.iter().any(|r| r.len() != n) {
            return Err(LatticeError::NotSymmetric);
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(LatticeError::NotSymmetric);
                }
            }
        }
        Ok(IntegerLattice { gram, labels: None })
    }

    pub fn from_integers(gram: &[Vec<i64>]) -> Result<Self> {
        Self::new(gram.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.rank());
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Index of a labelled basis vector.
    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &RatMatrix {
        &self.gram
    }

    pub fn empty() -> Self {
        IntegerLattice { gram: Vec::new(), labels: None }
    }

    pub fn pair(&self, x: &[BigRational], y: &[BigRational]) -> BigRational {
        let gy = mat_vec_rat(&self.gram, y);
        linalg::dot_rat(x, &gy)
    }

    pub fn pair_int(&self, x: &[BigInt], y: &[BigInt]) -> BigRational {
        self.pair(&to_rat_vec(x), &to_rat_vec(y))
    }

    pub fn norm(&self, x: &[BigRational]) -> BigRational {
        self.pair(x, x)
    }

    pub fn norm_int(&self, x: &[BigInt]) -> BigRational {
        self.pair_int(x, x)
    }

    pub fn determinant(&self) -> BigRational {
        determinant(&self.gram)
    }

    pub fn is_degenerate(&self) -> bool {
        self.determinant().is_zero()
    }

    /// `(positive, negative, zero)` counts of an exact diagonalization.
    pub fn signature(&self) -> (usize, usize, usize) {
        signature_of(&self.gram)
    }

    pub fn is_integral(&self) -> bool {
        self.gram.iter().flatten().all(|x| x.is_integer())
    }

    pub fn is_even(&self) -> bool {
        self.is_integral() && (0..self.rank()).all(|i| (self.gram[i][i].to_integer() % BigInt::from(2)).is_zero())
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_integral() && self.determinant().abs().is_one()
    }

    pub fn is_negative_definite(&self) -> bool {
        self.signature() == (0, self.rank(), 0)
    }

    pub fn is_positive_definite(&self) -> bool {
        self.signature() == (self.rank(), 0, 0)
    }

    /// Dual lattice in the dual basis.
    pub fn dual(&self) -> Result<Self> {
        let inv = inverse(&self.gram).ok_or(LatticeError::Degenerate)?;
        Ok(IntegerLattice { gram: inv, labels: None })
    }

    /// `L(r)`: the same module with the form multiplied by `r`.
    pub fn rescale(&self, r: &BigRational) -> Self {
        IntegerLattice {
            gram: self.gram.iter().map(|row| row.iter().map(|x| x * r).collect()).collect(),
            labels: self.labels.clone(),
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let (a, b) = (self.rank(), other.rank());
        let mut gram = vec![vec![BigRational::zero(); a + b]; a + b];
        for i in 0..a {
            for j in 0..a {
                gram[i][j] = self.gram[i][j].clone();
            }
        }
        for i in 0..b {
            for j in 0..b {
                gram[a + i][a + j] = other.gram[i][j].clone();
            }
        }
        let labels = match (&self.labels, &other.labels) {
            (Some(x), Some(y)) => Some(x.iter().chain(y).cloned().collect()),
            _ => None,
        };
        IntegerLattice { gram, labels }
    }

    /// Sublattice spanned by the rows of `basis` (independent, in lattice coordinates).
    pub fn sublattice(&self, basis: &[Vec<BigRational>]) -> Self {
        IntegerLattice { gram: congruence(&self.gram, basis), labels: None }
    }

    /// Lattice generated by rational vectors; returns it with a basis in
    /// the coordinates of `self`.
    pub fn span(&self, gens: &[Vec<BigRational>]) -> (Self, RatMatrix) {
        let basis = rational_span_basis(gens);
        (self.sublattice(&basis), basis)
    }

    /// Coordinates of `v` (in the ambient of `basis`) with respect to `basis`.
    pub fn coordinates_in(basis: &[Vec<BigRational>], v: &[BigRational]) -> Option<Vec<BigRational>> {
        solve_left(basis, v)
    }

    /// Discriminant group `L*/L` with its form values.
    pub fn discriminant_group(&self) -> Result<DiscriminantGroup> {
        if !self.is_integral() {
            return Err(LatticeError::NotIntegral);
        }
        if self.is_degenerate() {
            return Err(LatticeError::Degenerate);
        }
        let g: IntMatrix = self.gram.iter().map(|r| r.iter().map(|x| x.to_integer()).collect()).collect();
        let (d, _u, v) = smith_normal_form(&g);
        let mut invariants = Vec::new();
        let mut generators = Vec::new();
        for (i, di) in d.iter().enumerate() {
            let di = di.abs();
            if di.is_one() {
                continue;
            }
            let col: Vec<BigRational> = v.iter().map(|row| BigRational::new(row[i].clone(), di.clone())).collect();
            invariants.push(di);
            generators.push(col);
        }
        let even = self.is_even();
        let modulus = if even { rat(2) } else { rat(1) };
        let form: Vec<Vec<BigRational>> = generators
            .iter()
            .map(|x| generators.iter().map(|y| reduce_mod(&self.pair(x, y), &rat(1))).collect())
            .collect();
        let quadratic: Vec<BigRational> = generators.iter().map(|x| reduce_mod(&self.norm(x), &modulus)).collect();
        Ok(DiscriminantGroup { invariants, generators, bilinear: form, quadratic, even })
    }

    /// Saturated sublattice orthogonal to the given vectors.
    pub fn orthogonal_complement(&self, vectors: &[Vec<BigRational>]) -> Embedded {
        let rows: RatMatrix = vectors.iter().map(|v| mat_vec_rat(&self.gram, v)).collect();
        let basis = integer_kernel_rat(&rows, self.rank());
        self.embedded(basis)
    }

    /// Saturation of the span of independent lattice vectors.
    pub fn primitive_hull(&self, gens: &[Vec<BigInt>]) -> Result<(Embedded, BigInt)> {
        let r = to_rat_matrix(gens);
        if rank_rat(&r) < gens.len() {
            return Err(LatticeError::DependentGenerators);
        }
        let hull = saturate(gens, self.rank());
        let hull_r = to_rat_matrix(&hull);
        let coords: RatMatrix =
            r.iter().map(|g| solve_left(&hull_r, g).expect("generators lie in their saturation")).collect();
        let index = determinant(&coords).abs().to_integer();
        Ok((self.embedded(hull), index))
    }

    fn embedded(&self, basis: IntMatrix) -> Embedded {
        let lattice = self.sublattice(&to_rat_matrix(&basis));
        Embedded { lattice, basis }
    }

    /// Whether `v` (rational coordinates) lies in the lattice.
    pub fn contains(&self, v: &[BigRational]) -> bool {
        as_integral(v).is_some()
    }

    /// Fixed sublattice and its orthogonal complement under integer matrices
    /// acting on row vectors (`x -> x M`).
    pub fn invariant_coinvariant(&self, action: &[IntMatrix]) -> Result<(Embedded, Embedded)> {
        let n = self.rank();
        for m in action {
            let mr = to_rat_matrix(m);
            let t = linalg::transpose(&mr);
            if linalg::mat_mul_rat(&linalg::mat_mul_rat(&mr, &self.gram), &t) != self.gram {
                return Err(LatticeError::GramNotPreserved);
            }
        }
        // x (M - I) = 0 for all M, i.e. (M - I)^T x^T = 0.
        let mut rows: IntMatrix = Vec::new();
        for m in action {
            for j in 0..n {
                rows.push((0..n).map(|i| &m[i][j] - if i == j { BigInt::one() } else { BigInt::zero() }).collect());
            }
        }
        let fixed = integer_kernel(&rows, n);
        let inv = self.embedded(fixed.clone());
        let co = self.orthogonal_complement(&to_rat_matrix(&fixed));
        Ok((inv, co))
    }

    /// Signed permutation action on the basis: `e_i -> sign_i e_{perm_i}`.
    pub fn invariant_coinvariant_signed(&self, action: &[SignedPermutation]) -> Result<(Embedded, Embedded)> {
        let mats: Vec<IntMatrix> = action.iter().map(|s| s.matrix(self.rank())).collect();
        self.invariant_coinvariant(&mats)
    }

    pub fn to_json(&self) -> GramFixture {
        GramFixture {
            rank: self.rank(),
            gram: self.gram.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect(),
            labels: self.labels.clone(),
        }
    }

    pub fn from_json(f: &GramFixture) -> Result<Self> {
        let gram: Result<RatMatrix> = f
            .gram
            .iter()
            .map(|r| {
                r.iter().map(|s| s.parse::<BigRational>().map_err(|_| LatticeError::InvalidName(s.clone()))).collect()
            })
            .collect();
        let l = Self::new(gram?)?;
        if l.rank() != f.rank {
            return Err(LatticeError::WrongLength { got: l.rank(), rank: f.rank });
        }
        Ok(match &f.labels {
            Some(labels) => l.with_labels(labels.clone()),
            None => l,
        })
    }
}

impl fmt::Display for IntegerLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.gram {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>4}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Plain serialization of a Gram matrix with exact entries as strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GramFixture {
    pub rank: usize,
    pub gram: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

/// A sublattice with its basis in the ambient coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedded {
    pub lattice: IntegerLattice,
    pub basis: IntMatrix,
}

impl Embedded {
    /// Ambient coordinates of a vector given in sublattice coordinates.
    pub fn to_ambient(&self, v: &[BigRational]) -> Vec<BigRational> {
        let n = self.basis.first().map_or(0, Vec::len);
        let mut out = vec![BigRational::zero(); n];
        for (c, row) in v.iter().zip(&self.basis) {
            for (o, b) in out.iter_mut().zip(row) {
                *o += c * BigRational::from_integer(b.clone());
            }
        }
        out
    }

    /// Sublattice coordinates of an ambient vector in its rational span.
    pub fn from_ambient(&self, v: &[BigRational]) -> Option<Vec<BigRational>> {
        solve_left(&to_rat_matrix(&self.basis), v)
    }
}

/// `e_i -> sign_i e_{images_i}` with 0-based images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPermutation {
    pub images: Vec<usize>,
    pub signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn unsigned(images: Vec<usize>) -> Self {
        let signs = vec![1; images.len()];
        SignedPermutation { images, signs }
    }

    pub fn matrix(&self, n: usize) -> IntMatrix {
        let mut m = vec![vec![BigInt::zero(); n]; n];
        for (i, (&j, &s)) in self.images.iter().zip(&self.signs).enumerate() {
            m[i][j] = BigInt::from(s);
        }
        m
    }
}

/// Finite abelian group `L*/L` with generators of orders `invariants`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscriminantGroup {
    pub invariants: Vec<BigInt>,
    /// Generators as dual vectors in lattice coordinates.
    pub generators: RatMatrix,
    /// `b(x, y)` in `Q/Z`.
    pub bilinear: RatMatrix,
    /// `q(x)` in `Q/2Z` for even lattices, `Q/Z` otherwise.
    pub quadratic: Vec<BigRational>,
    pub even: bool,
}

impl DiscriminantGroup {
    pub fn order(&self) -> BigInt {
        self.invariants.iter().fold(BigInt::one(), |a, b| a * b)
    }

    pub fn is_trivial(&self) -> bool {
        self.invariants.is_empty()
    }

    /// Invariant factors as machine integers, for display and comparison.
    pub fn invariant_factors(&self) -> Vec<u64> {
        self.invariants.iter().map(|x| u64::try_from(x).expect("small invariant factor")).collect()
    }

    /// Whether every generator has order 2.
    pub fn is_two_elementary(&self) -> bool {
        self.invariants.iter().all(|x| *x == BigInt::from(2))
    }
}

/// Representative of `x` modulo `m` in `[0, m)`.
pub fn reduce_mod(x: &BigRational, m: &BigRational) -> BigRational {
    let q = (x / m).floor();
    x - q * m
}

/// Sign counts of a symmetric matrix by congruence diagonalization.
pub fn signature_of(g: &[Vec<BigRational>]) -> (usize, usize, usize) {
    let mut a: RatMatrix = g.to_vec();
    let n = a.len();
    let (mut pos, mut neg, mut zero) = (0, 0, 0);
    let mut active: Vec<usize> = (0..n).collect();
    while let Some(&first) = active.first() {
        let _ = first;
        // Pivot with nonzero diagonal, or create one from an off-diagonal entry.
        let pivot = active.iter().copied().find(|&i| !a[i][i].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                let pair = active
                    .iter()
                    .flat_map(|&i| active.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| i != j && !a[i][j].is_zero());
                match pair {
                    Some((i, j)) => {
                        // Replace e_i by e_i + e_j.
                        for k in 0..n {
                            let x = a[j][k].clone();
                            a[i][k] += x;
                        }
                        for k in 0..n {
                            let x = a[k][j].clone();
                            a[k][i] += x;
                        }
                        i
                    }
                    None => {
                        zero += active.len();
                        break;
                    }
                }
            }
        };
        let d = a[p][p].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        active.retain(|&i| i != p);
        for &i in &active {
            if a[i][p].is_zero() {
                continue;
            }
            let f = &a[i][p] / &d;
            for k in 0..n {
                let x = &f * &a[p][k];
                a[i][k] -= x;
            }
            for k in 0..n {
                let x = &f * &a[k][p];
                a[k][i] -= x;
            }
        }
    }
    (pos, neg, zero)
}

/// Named lattices and the constructions on them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NamedLattice {
    A(usize),
    D(usize),
    E(usize),
    U,
    I(usize, usize),
    T237,
    Dual(Box<NamedLattice>),
    Rescale(Box<NamedLattice>, BigRational),
    Sum(Box<NamedLattice>, Box<NamedLattice>),
}

impl NamedLattice {
    /// Parse names such as `A4`, `D12`, `E8`, `U`, `I2,10`, `T237`,
    /// `dual(D12)`, `rescale(dual(D12),2)` and sums `A4+A5`.
    pub fn parse(text: &str) -> Result<Self> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || LatticeError::InvalidName(text.to_string());
        let parts = split_top_level(&t, '+');
        if parts.len() > 1 {
            let mut it = parts.into_iter().map(|p| Self::parse(&p));
            let first = it.next().ok_or_else(bad)??;
            return it.try_fold(first, |acc, p| Ok(NamedLattice::Sum(Box::new(acc), Box::new(p?))));
        }
        if let Some(inner) = t.strip_prefix("dual(").and_then(|s| s.strip_suffix(')')) {
            return Ok(NamedLattice::Dual(Box::new(Self::parse(inner)?)));
        }
        if let Some(inner) = t.strip_prefix("rescale(").and_then(|s| s.strip_suffix(')')) {
            let args = split_top_level(inner, ',');
            let (l, r) = match args.as_slice() {
                [l, r] => (l, r),
                _ => return Err(bad()),
            };
            let r: BigRational = r.parse().map_err(|_| bad())?;
            return Ok(NamedLattice::Rescale(Box::new(Self::parse(l)?), r));
        }
        // L(r) notation.
        if let Some(open) = t.rfind('(') {
            if t.ends_with(')') && open > 0 {
                let r: BigRational = t[open + 1..t.len() - 1].parse().map_err(|_| bad())?;
                return Ok(NamedLattice::Rescale(Box::new(Self::parse(&t[..open])?), r));
            }
        }
        match t.as_str() {
            "U" => return Ok(NamedLattice::U),
            "T237" | "T2,3,7" | "T_{2,3,7}" | "Enriques" => return Ok(NamedLattice::T237),
            _ => {}
        }
        if let Some(rest) = t.strip_prefix('I') {
            let nums: Vec<&str> =
                rest.trim_start_matches('_').trim_matches(|c| c == '{' || c == '}').split(',').collect();
            if let [p, q] = nums.as_slice() {
                return Ok(NamedLattice::I(p.parse().map_err(|_| bad())?, q.parse().map_err(|_| bad())?));
            }
            return Err(bad());
        }
        let (head, num) = t.split_at(1);
        let n: usize = num.trim_start_matches('_').parse().map_err(|_| bad())?;
        match head {
            "A" if n >= 1 => Ok(NamedLattice::A(n)),
            "D" if n >= 2 => Ok(NamedLattice::D(n)),
            "E" if (6..=8).contains(&n) => Ok(NamedLattice::E(n)),
            _ => Err(bad()),
        }
    }

    pub fn build(&self) -> Result<IntegerLattice> {
        Ok(match self {
            NamedLattice::A(n) => dynkin(*n, &(1..*n).map(|i| (i - 1, i)).collect::<Vec<_>>(), "a"),
            NamedLattice::D(n) => {
                let mut edges: Vec<(usize, usize)> = (1..n - 1).map(|i| (i - 1, i)).collect();
                if *n >= 3 {
                    edges.push((n - 3, n - 1));
                } else {
                    edges.clear();
                }
                dynkin(*n, &edges, "d")
            }
            NamedLattice::E(n) => {
                // Chain of n - 1 nodes with the last node attached to the third.
                let mut edges: Vec<(usize, usize)> = (1..n - 1).map(|i| (i - 1, i)).collect();
                edges.push((2, n - 1));
                dynkin(*n, &edges, "e")
            }
            NamedLattice::U => IntegerLattice::from_integers(&[vec![0, 1], vec![1, 0]])?,
            NamedLattice::I(p, q) => {
                let n = p + q;
                let gram = (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| {
                                if i != j {
                                    0
                                } else if i < *p {
                                    1
                                } else {
                                    -1
                                }
                            })
                            .collect()
                    })
                    .collect::<Vec<Vec<i64>>>();
                let labels = (0..*p).map(|i| format!("h{}", i + 1)).chain((0..*q).map(|i| format!("e{}", i + 1)));
                IntegerLattice::from_integers(&gram)?.with_labels(labels.collect())
            }
            NamedLattice::T237 => t237(),
            NamedLattice::Dual(l) => l.build()?.dual()?,
            NamedLattice::Rescale(l, r) => l.build()?.rescale(r),
            NamedLattice::Sum(a, b) => a.build()?.direct_sum(&b.build()?),
        })
    }
}

fn split_top_level(s: &str, sep: char) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if c == sep && depth == 0 {
            out.push(std::mem::take(&mut cur));
        } else {
            cur.push(c);
        }
    }
    out.push(cur);
    out
}

/// Negative definite lattice of a simply-laced diagram.
fn dynkin(n: usize, edges: &[(usize, usize)], prefix: &str) -> IntegerLattice {
    let mut g = vec![vec![0i64; n]; n];
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = -2;
    }
    for &(i, j) in edges {
        g[i][j] = 1;
        g[j][i] = 1;
    }
    IntegerLattice::from_integers(&g)
        .expect("symmetric by construction")
        .with_labels((1..=n).map(|i| format!("{prefix}{i}")).collect())
}

/// `T_{2,3,7}`: chain `r1 - ... - r9` with `r0` attached to `r3`.
pub fn t237() -> IntegerLattice {
    let mut edges: Vec<(usize, usize)> = (1..9).map(|i| (i, i + 1)).collect();
    edges.push((0, 3));
    let mut l = dynkin(10, &edges, "r");
    l.labels = Some((0..10).map(|i| format!("r{i}")).collect());
    l
}

/// Build a lattice from a name; see [`NamedLattice::parse`].
pub fn named_lattice(name: &str) -> Result<IntegerLattice> {
    NamedLattice::parse(name)?.build()
}

/// Lattice generated by rational vectors inside a quadratic space with Gram `g`.
pub fn lattice_from_generators(
    g: &[Vec<BigRational>],
    gens: &[Vec<BigRational>],
) -> Result<(IntegerLattice, RatMatrix)> {
    let ambient = IntegerLattice::new(g.to_vec())?;
    Ok(ambient.span(gens))
}

/// Express each generator in a basis (rows, same ambient); fails if outside the span.
pub fn express_in_basis(basis: &[Vec<BigRational>], v: &[BigRational]) -> Result<Vec<BigRational>> {
    solve_left(basis, v).ok_or(LatticeError::NotInLattice)
}

/// Whether the rows of `sub` lie in the Z-span of `basis`.
pub fn contained_in(basis: &[Vec<BigRational>], sub: &[Vec<BigRational>]) -> bool {
    sub.iter().all(|v| solve_left(basis, v).and_then(|c| as_integral(&c)).is_some())
}
