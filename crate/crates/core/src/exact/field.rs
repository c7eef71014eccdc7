//! Towers of simple extensions of `Q` with elements in canonical reduced form.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::lattice::linalg::{solve_left, RatMatrix};

use super::parse::{format_raw, parse_raw, raw_mul, RawPoly};
use super::{ExactError, Result};

/// Symbols adjoined one at a time, each either transcendental or a root of
/// a monic polynomial over the previously built ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldTower {
    symbols: Vec<String>,
    /// For each symbol, `c_0..c_{d-1}` with `x^d = -(c_0 + ... + c_{d-1} x^{d-1})`.
    relations: Vec<Option<Vec<RawPoly>>>,
    texts: Vec<Option<String>>,
}

impl FieldTower {
    pub fn rationals() -> Self {
        FieldTower { symbols: Vec::new(), relations: Vec::new(), texts: Vec::new() }
    }

    /// Adjoins a root of the monic polynomial `minpoly`, written in `symbol`
    /// and the earlier symbols.
    pub fn algebraic(mut self, symbol: &str, minpoly: &str) -> Result<Self> {
        self.check_fresh(symbol)?;
        let mut names = self.symbols.clone();
        names.push(symbol.to_string());
        let n = names.len();
        let raw = parse_raw(minpoly, &names)?;
        let d = raw.keys().map(|e| e[n - 1]).max().unwrap_or(0);
        if d == 0 {
            return Err(ExactError::Field(format!("`{minpoly}` does not involve {symbol}")));
        }
        let mut coeffs = vec![RawPoly::new(); d as usize];
        for (e, c) in &raw {
            let k = e[n - 1];
            let mut lower = e.clone();
            lower[n - 1] = 0;
            if k == d {
                if lower.iter().any(|&x| x != 0) || !c.is_one() {
                    return Err(ExactError::Field(format!("`{minpoly}` is not monic in {symbol}")));
                }
            } else {
                coeffs[k as usize].insert(lower, c.clone());
            }
        }
        self.symbols.push(symbol.to_string());
        for r in self.relations.iter_mut().flatten() {
            for c in r.iter_mut() {
                *c = c.iter().map(|(e, x)| (extend(e, n), x.clone())).collect();
            }
        }
        self.relations.push(Some(coeffs));
        self.texts.push(Some(minpoly.to_string()));
        Ok(self)
    }

    /// Adjoins an indeterminate.
    pub fn transcendental(mut self, symbol: &str) -> Result<Self> {
        self.check_fresh(symbol)?;
        self.symbols.push(symbol.to_string());
        let n = self.symbols.len();
        for r in self.relations.iter_mut().flatten() {
            for c in r.iter_mut() {
                *c = c.iter().map(|(e, x)| (extend(e, n), x.clone())).collect();
            }
        }
        self.relations.push(None);
        self.texts.push(None);
        Ok(self)
    }

    fn check_fresh(&self, symbol: &str) -> Result<()> {
        if self.symbols.iter().any(|s| s == symbol) {
            return Err(ExactError::Field(format!("symbol {symbol} adjoined twice")));
        }
        Ok(())
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    /// `(symbol, minimal polynomial)` pairs; `None` for indeterminates.
    pub fn generators(&self) -> Vec<(String, Option<String>)> {
        self.symbols.iter().cloned().zip(self.texts.iter().cloned()).collect()
    }

    /// Whether every symbol is algebraic, so nonzero elements may be inverted.
    pub fn is_algebraic(&self) -> bool {
        self.relations.iter().all(Option::is_some)
    }

    /// Degree over `Q` when algebraic.
    pub fn degree(&self) -> Option<usize> {
        self.relations.iter().map(|r| r.as_ref().map(Vec::len)).product()
    }

    pub fn into_arc(self) -> Arc<FieldTower> {
        Arc::new(self)
    }

    fn reduce(&self, mut p: RawPoly) -> RawPoly {
        for i in (0..self.symbols.len()).rev() {
            let Some(rel) = &self.relations[i] else { continue };
            let d = rel.len() as u32;
            while let Some(e) = p.keys().find(|e| e[i] >= d).cloned() {
                let c = p.remove(&e).expect("present");
                let mut shift = e.clone();
                shift[i] -= d;
                for (j, cj) in rel.iter().enumerate() {
                    let mut mono = shift.clone();
                    mono[i] += j as u32;
                    let term = RawPoly::from([(mono, -c.clone())]);
                    for (ek, ck) in raw_mul(&term, cj) {
                        *p.entry(ek).or_insert_with(BigRational::zero) += ck;
                    }
                }
                p.retain(|_, x| !x.is_zero());
            }
        }
        p
    }

    /// Monomials `x^e` with `e_i < d_i`: a `Q`-basis when algebraic.
    fn basis(&self) -> Option<Vec<Vec<u32>>> {
        let mut out = vec![vec![]];
        for r in &self.relations {
            let d = r.as_ref()?.len() as u32;
            out = out.into_iter().flat_map(|e| (0..d).map(move |k| [e.clone(), vec![k]].concat())).collect();
        }
        Some(out)
    }
}

fn extend(e: &[u32], n: usize) -> Vec<u32> {
    let mut v = e.to_vec();
    v.resize(n, 0);
    v
}

/// Element of a [`FieldTower`].
#[derive(Clone)]
pub struct FieldElem {
    tower: Arc<FieldTower>,
    terms: RawPoly,
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for FieldElem {}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_raw(&self.terms, &self.tower.symbols))
    }
}

impl FieldElem {
    pub fn from_rational(tower: &Arc<FieldTower>, c: BigRational) -> Self {
        let n = tower.symbols.len();
        let mut terms = RawPoly::new();
        if !c.is_zero() {
            terms.insert(vec![0; n], c);
        }
        FieldElem { tower: tower.clone(), terms }
    }

    pub fn from_int(tower: &Arc<FieldTower>, c: i64) -> Self {
        Self::from_rational(tower, BigRational::from_integer(c.into()))
    }

    pub fn zero(tower: &Arc<FieldTower>) -> Self {
        Self::from_int(tower, 0)
    }

    pub fn one(tower: &Arc<FieldTower>) -> Self {
        Self::from_int(tower, 1)
    }

    /// Parses an expression in the tower symbols.
    pub fn parse(tower: &Arc<FieldTower>, text: &str) -> Result<Self> {
        let raw = parse_raw(text, &tower.symbols)?;
        Ok(Self::from_raw(tower, raw))
    }

    pub(crate) fn from_raw(tower: &Arc<FieldTower>, raw: RawPoly) -> Self {
        FieldElem { tower: tower.clone(), terms: tower.reduce(raw) }
    }

    pub(crate) fn raw(&self) -> &RawPoly {
        &self.terms
    }

    pub fn tower(&self) -> &Arc<FieldTower> {
        &self.tower
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one(&self.tower)
    }

    /// The rational value if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().expect("one term");
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// The same element in a tower containing all of its symbols.
    pub fn embed(&self, target: &Arc<FieldTower>) -> Result<Self> {
        let map: Vec<usize> = self
            .tower
            .symbols
            .iter()
            .map(|s| {
                target
                    .symbols
                    .iter()
                    .position(|t| t == s)
                    .ok_or_else(|| ExactError::Field(format!("{s} is not in the target tower")))
            })
            .collect::<Result<_>>()?;
        let n = target.symbols.len();
        let raw: RawPoly = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut f = vec![0; n];
                for (i, &k) in e.iter().enumerate() {
                    f[map[i]] = k;
                }
                (f, c.clone())
            })
            .collect();
        Ok(Self::from_raw(target, raw))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(&self.tower), |acc, _| &acc * self)
    }

    /// Multiplicative inverse by solving `x * self = 1` over `Q`; `None` for
    /// zero or when the tower has indeterminates.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let basis = self.tower.basis()?;
        let coords = |p: &RawPoly| -> Vec<BigRational> {
            basis.iter().map(|e| p.get(e).cloned().unwrap_or_else(BigRational::zero)).collect()
        };
        let rows: RatMatrix = basis
            .iter()
            .map(|e| {
                let m =
                    FieldElem { tower: self.tower.clone(), terms: RawPoly::from([(e.clone(), BigRational::one())]) };
                coords(&(&m * self).terms)
            })
            .collect();
        let x = solve_left(&rows, &coords(&Self::one(&self.tower).terms))?;
        let terms: RawPoly = basis.into_iter().zip(x).filter(|(_, c)| !c.is_zero()).collect();
        let inv = FieldElem { tower: self.tower.clone(), terms };
        (&inv * self).is_one().then_some(inv)
    }
}

impl Add for &FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            *terms.entry(e.clone()).or_insert_with(BigRational::zero) += c;
        }
        terms.retain(|_, c| !c.is_zero());
        FieldElem { tower: self.tower.clone(), terms }
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem { tower: self.tower.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl Sub for &FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        self + &(-rhs)
    }
}

impl Mul for &FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        FieldElem { tower: self.tower.clone(), terms: self.tower.reduce(raw_mul(&self.terms, &rhs.terms)) }
    }
}

macro_rules! owned_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}

owned_ops!(FieldElem);
pub(crate) use owned_ops;

/// `Q(sqrt3)`.
pub fn q_sqrt3() -> Arc<FieldTower> {
    FieldTower::rationals().algebraic("sqrt3", "sqrt3^2 - 3").expect("valid tower").into_arc()
}

/// `Q(sqrt3, omega)` with `omega^2 + omega + 1 = 0`.
pub fn q_sqrt3_omega() -> Arc<FieldTower> {
    FieldTower::rationals()
        .algebraic("sqrt3", "sqrt3^2 - 3")
        .and_then(|t| t.algebraic("omega", "omega^2 + omega + 1"))
        .expect("valid tower")
        .into_arc()
}

/// `Q(omega)`.
pub fn q_omega() -> Arc<FieldTower> {
    FieldTower::rationals().algebraic("omega", "omega^2 + omega + 1").expect("valid tower").into_arc()
}

/// `Q(i)` with `i^2 = -1`.
pub fn q_i() -> Arc<FieldTower> {
    FieldTower::rationals().algebraic("i", "i^2 + 1").expect("valid tower").into_arc()
}

/// `Q[mu][c]` with `c^2 = 1 - mu^2` and `mu` an indeterminate.
pub fn q_mu_c() -> Arc<FieldTower> {
    FieldTower::rationals()
        .transcendental("mu")
        .and_then(|t| t.algebraic("c", "c^2 + mu^2 - 1"))
        .expect("valid tower")
        .into_arc()
}
