//! Configurations of smooth rational curves, their Néron–Severi
//! realizations, elliptic pencil lattices and Steiner systems.

pub mod graph;
mod hesse;
mod s5;
mod steiner;

pub use hesse::{hesse_pencil_lattice, invariant_polarization, Polarization};
pub use s5::{
    l_graph, odd_involution_configuration, pentagon_pairs, petersen_witness, realize_s5_ns, s5_configuration,
    PentagonPair, PetersenWitness,
};
pub use steiner::{build_steiner_systems, SteinerBuild, SteinerSystem};

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;
use thiserror::Error;

use crate::lattice::linalg::{determinant, rational_span_basis, to_rat_matrix};
use crate::lattice::{IntegerLattice, LatticeError};
use crate::perm::{PermError, PermGroup, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("relation fails: {0}")]
    Relation(String),
    #[error("no class labelled `{0}`")]
    MissingClass(String),
    #[error("unknown group `{0}`; expected S5, N72 or A6")]
    UnknownGroup(String),
    #[error("search failed: {0}")]
    Search(String),
}

pub type Result<T> = std::result::Result<T, ConfigError>;

/// Smooth rational curves with their intersection matrix and an optional
/// group permuting them.
#[derive(Debug, Clone)]
pub struct CurveConfig {
    pub labels: Vec<String>,
    pub intersections: Vec<Vec<i64>>,
    pub action: Option<PermGroup>,
}

/// Serializable form of a [`CurveConfig`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveConfigJson {
    pub labels: Vec<String>,
    pub matrix: Vec<Vec<i64>>,
    pub action_generators: Vec<String>,
}

impl CurveConfig {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn pairing(&self, a: &str, b: &str) -> Option<i64> {
        Some(self.intersections[self.index(a)?][self.index(b)?])
    }

    /// Symmetric, diagonal −2, nonnegative off the diagonal.
    pub fn is_well_formed(&self) -> bool {
        let n = self.len();
        self.intersections.len() == n
            && self.intersections.iter().all(|r| r.len() == n)
            && (0..n).all(|i| {
                self.intersections[i][i] == -2
                    && (0..n).all(|j| self.intersections[i][j] == self.intersections[j][i])
                    && (0..n).all(|j| i == j || self.intersections[i][j] >= 0)
            })
    }

    /// Whether a permutation of the labels (1-based points) preserves the matrix.
    pub fn preserved_by(&self, p: &Permutation) -> bool {
        let n = self.len();
        p.degree() == n
            && (0..n).all(|i| {
                (0..n).all(|j| self.intersections[i][j] == self.intersections[p.image(i + 1) - 1][p.image(j + 1) - 1])
            })
    }

    /// Whether every generator of the attached action preserves the matrix.
    pub fn action_preserves(&self) -> bool {
        self.action.as_ref().is_some_and(|g| g.generators().iter().all(|p| self.preserved_by(p)))
    }

    /// Graph of the pairs with the given intersection number.
    pub fn graph_of_value(&self, value: i64) -> graph::Graph {
        let n = self.len();
        let mut g = graph::Graph::new(n);
        for i in 0..n {
            for j in i + 1..n {
                if self.intersections[i][j] == value {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn to_json(&self) -> CurveConfigJson {
        CurveConfigJson {
            labels: self.labels.clone(),
            matrix: self.intersections.clone(),
            action_generators: self
                .action
                .as_ref()
                .map(|g| g.generators().iter().map(|p| p.to_string()).collect())
                .unwrap_or_default(),
        }
    }
}

/// A rank-10 lattice with named classes in its coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NSRealization {
    pub lattice: IntegerLattice,
    pub class_map: BTreeMap<String, Vec<BigInt>>,
}

impl NSRealization {
    pub fn class(&self, label: &str) -> Result<&Vec<BigInt>> {
        self.class_map.get(label).ok_or_else(|| ConfigError::MissingClass(label.to_string()))
    }

    /// Integer combination of named classes.
    pub fn combination(&self, terms: &[(i64, &str)]) -> Result<Vec<BigInt>> {
        let mut out = vec![BigInt::from(0); self.lattice.rank()];
        for &(c, label) in terms {
            for (o, x) in out.iter_mut().zip(self.class(label)?) {
                *o += x * c;
            }
        }
        Ok(out)
    }

    pub fn pair(&self, a: &str, b: &str) -> Result<BigRational> {
        Ok(self.lattice.pair_int(self.class(a)?, self.class(b)?))
    }

    /// Index of the span of the named classes; `None` if they do not have full rank.
    pub fn span_index(&self, labels: &[&str]) -> Result<Option<BigInt>> {
        let rows: Vec<Vec<BigInt>> = labels.iter().map(|l| self.class(l).cloned()).collect::<Result<_>>()?;
        let basis = rational_span_basis(&to_rat_matrix(&rows));
        if basis.len() != self.lattice.rank() {
            return Ok(None);
        }
        Ok(Some(determinant(&basis).abs().to_integer()))
    }

    /// Label of a class equal to `v`, if any.
    pub fn label_of(&self, v: &[BigInt]) -> Option<&str> {
        self.class_map.iter().find(|(_, c)| c.as_slice() == v).map(|(l, _)| l.as_str())
    }
}
