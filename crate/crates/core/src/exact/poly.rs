//! Sparse multivariate polynomials with coefficients in a [`FieldTower`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_rational::BigRational;

use super::field::{owned_ops, FieldElem, FieldTower};
use super::parse::parse_raw;
use super::{ExactError, Result};

/// Polynomial in named variables; zero coefficients are never stored.
#[derive(Clone)]
pub struct MultiPoly {
    tower: Arc<FieldTower>,
    vars: Arc<Vec<String>>,
    terms: BTreeMap<Vec<u32>, FieldElem>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .zip(self.vars.iter())
                    .filter(|(k, _)| **k > 0)
                    .map(|(k, n)| if *k == 1 { n.clone() } else { format!("{n}^{k}") })
                    .collect();
                match (mono.is_empty(), c.is_one()) {
                    (true, _) => format!("({c})"),
                    (false, true) => mono.join("*"),
                    (false, false) => format!("({c})*{}", mono.join("*")),
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Variable names for a polynomial ring.
pub fn variables(names: &[&str]) -> Arc<Vec<String>> {
    Arc::new(names.iter().map(|s| s.to_string()).collect())
}

impl MultiPoly {
    pub fn zero(tower: &Arc<FieldTower>, vars: &Arc<Vec<String>>) -> Self {
        MultiPoly { tower: tower.clone(), vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Arc<Vec<String>>, c: FieldElem) -> Self {
        let mut p = Self::zero(c.tower(), vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn var(tower: &Arc<FieldTower>, vars: &Arc<Vec<String>>, name: &str) -> Result<Self> {
        let i = vars.iter().position(|v| v == name).ok_or_else(|| ExactError::Parse(format!("no variable {name}")))?;
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        let mut p = Self::zero(tower, vars);
        p.terms.insert(e, FieldElem::one(tower));
        Ok(p)
    }

    /// Parses text in the tower symbols and the variables.
    pub fn parse(tower: &Arc<FieldTower>, vars: &Arc<Vec<String>>, text: &str) -> Result<Self> {
        let names: Vec<String> = tower.symbols().iter().chain(vars.iter()).cloned().collect();
        let k = tower.symbols().len();
        let raw = parse_raw(text, &names)?;
        let mut split: BTreeMap<Vec<u32>, BTreeMap<Vec<u32>, BigRational>> = BTreeMap::new();
        for (e, c) in raw {
            split.entry(e[k..].to_vec()).or_default().insert(e[..k].to_vec(), c);
        }
        let mut p = Self::zero(tower, vars);
        for (mono, coeff) in split {
            let c = FieldElem::from_raw(tower, coeff);
            if !c.is_zero() {
                p.terms.insert(mono, c);
            }
        }
        Ok(p)
    }

    pub fn tower(&self) -> &Arc<FieldTower> {
        &self.tower
    }

    pub fn vars(&self) -> &Arc<Vec<String>> {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, FieldElem> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_in(&self, var: &str) -> Option<u32> {
        let i = self.vars.iter().position(|v| v == var)?;
        self.terms.keys().map(|e| e[i]).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// The value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<FieldElem> {
        match self.terms.len() {
            0 => Some(FieldElem::zero(&self.tower)),
            1 => {
                let (e, c) = self.terms.iter().next().expect("one term");
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        let mut out = Self::zero(&self.tower, &self.vars);
        for (e, x) in &self.terms {
            let y = x * c;
            if !y.is_zero() {
                out.terms.insert(e.clone(), y);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let one = Self::constant(&self.vars, FieldElem::one(&self.tower));
        (0..k).fold(one, |acc, _| &acc * self)
    }

    /// Replaces variable `i` by `images[i]`; all images share one ring.
    pub fn substitute(&self, images: &[MultiPoly]) -> Result<Self> {
        if images.len() != self.vars.len() {
            return Err(ExactError::Parse(format!(
                "substitution needs {} images, got {}",
                self.vars.len(),
                images.len()
            )));
        }
        let (tower, vars) = match images.first() {
            Some(p) => (p.tower.clone(), p.vars.clone()),
            None => (self.tower.clone(), self.vars.clone()),
        };
        let mut out = Self::zero(&tower, &vars);
        let mut powers: Vec<Vec<MultiPoly>> =
            images.iter().map(|p| vec![Self::constant(&vars, FieldElem::one(&tower)), p.clone()]).collect();
        for (e, c) in &self.terms {
            let mut term = Self::constant(&vars, c.embed(&tower)?);
            for (i, &k) in e.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][k as usize];
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Value at a point given by field elements.
    pub fn evaluate(&self, point: &[FieldElem]) -> Result<FieldElem> {
        let vars = Arc::new(Vec::new());
        let images: Vec<MultiPoly> = point.iter().map(|c| Self::constant(&vars, c.clone())).collect();
        Ok(self.substitute(&images)?.as_constant().expect("no variables remain"))
    }

    /// Whether `self = s * other` for some nonzero field element `s`; returns `s`.
    pub fn proportional_to(&self, other: &MultiPoly) -> Option<FieldElem> {
        let (e, c) = other.terms.iter().next()?;
        let inv = c.inverse()?;
        let s = self.terms.get(e)? * &inv;
        (*self == other.scale(&s)).then_some(s)
    }

    /// Rational coefficients indexed by (tower monomial, variable monomial).
    pub fn rational_coefficients(&self) -> BTreeMap<(Vec<u32>, Vec<u32>), BigRational> {
        let mut out = BTreeMap::new();
        for (e, c) in &self.terms {
            for (f, x) in c.raw() {
                out.insert((f.clone(), e.clone()), x.clone());
            }
        }
        out
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            let sum = match out.terms.get(e) {
                Some(x) => x + c,
                None => c.clone(),
            };
            if sum.is_zero() {
                out.terms.remove(e);
            } else {
                out.terms.insert(e.clone(), sum);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -&*c;
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut acc: BTreeMap<Vec<u32>, FieldElem> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let p = ca * cb;
                let sum = match acc.remove(&e) {
                    Some(x) => &x + &p,
                    None => p,
                };
                if !sum.is_zero() {
                    acc.insert(e, sum);
                }
            }
        }
        MultiPoly { tower: self.tower.clone(), vars: self.vars.clone(), terms: acc }
    }
}

owned_ops!(MultiPoly);

/// 3x3 matrices of polynomials.
pub type PolyMatrix = [[MultiPoly; 3]; 3];

/// Transposed cofactor matrix.
pub fn adjugate(a: &PolyMatrix) -> PolyMatrix {
    let minor = |r: usize, c: usize| -> MultiPoly {
        let rows: Vec<usize> = (0..3).filter(|&i| i != r).collect();
        let cols: Vec<usize> = (0..3).filter(|&j| j != c).collect();
        &(&a[rows[0]][cols[0]] * &a[rows[1]][cols[1]]) - &(&a[rows[0]][cols[1]] * &a[rows[1]][cols[0]])
    };
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let m = minor(j, i);
            if (i + j) % 2 == 0 {
                m
            } else {
                -&m
            }
        })
    })
}

pub fn determinant3(a: &PolyMatrix) -> MultiPoly {
    let adj = adjugate(a);
    (0..3).map(|k| &a[0][k] * &adj[k][0]).fold(MultiPoly::zero(a[0][0].tower(), a[0][0].vars()), |s, t| &s + &t)
}

pub fn mat_mul(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            (0..3).map(|k| &a[i][k] * &b[k][j]).fold(MultiPoly::zero(a[0][0].tower(), a[0][0].vars()), |s, t| &s + &t)
        })
    })
}

pub fn transpose(a: &PolyMatrix) -> PolyMatrix {
    std::array::from_fn(|i| std::array::from_fn(|j| a[j][i].clone()))
}
