//! Order-16 exclusion for 2-groups with a maximal normal abelian subgroup of order 8.
//!
//! For `A` abelian of order 8 and `x` acting on `A` by an involutive
//! automorphism `φ` with `x^2 = c ∈ A^φ`, the group `H = A ∪ Ax` is built as
//! an abstract coset table and `μ(H) = (μ(A) + μ(Ax))/2` is evaluated for
//! every admissible `c`.

use std::collections::BTreeMap;

use num_rational::Ratio;
use serde::Serialize;

use super::mu_of_order;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NoOrder16Case {
    /// `A ≅ C8`, `x` acting as `g ↦ g^5`.
    C8,
    /// `A ≅ C4 × C2`, `x` acting as the square of the order-4 automorphism.
    C4xC2,
    /// `A ≅ C2^3`, `x` acting as a transvection.
    C2Cubed,
}

impl NoOrder16Case {
    pub const ALL: [NoOrder16Case; 3] = [NoOrder16Case::C8, NoOrder16Case::C4xC2, NoOrder16Case::C2Cubed];

    pub fn label(self) -> &'static str {
        match self {
            NoOrder16Case::C8 => "C8-case",
            NoOrder16Case::C4xC2 => "C4xC2-case",
            NoOrder16Case::C2Cubed => "C2cubed-case",
        }
    }
}

/// One extension `H = ⟨A, x⟩` with a chosen `x^2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetExtension {
    pub x_square: Vec<i64>,
    /// Element orders on the coset `Ax`.
    pub coset_orders: BTreeMap<usize, usize>,
    pub mu_coset: Ratio<i64>,
    pub mu_total: Ratio<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NoOrder16Log {
    pub case: NoOrder16Case,
    pub moduli: Vec<i64>,
    /// Images of the standard generators of `A` under `φ`.
    pub action: Vec<Vec<i64>>,
    pub mu_a: Ratio<i64>,
    pub extensions: Vec<CosetExtension>,
    /// Every extension has constant element order on `Ax`.
    pub constant_coset_order: bool,
    /// No extension has integral `μ(H)`.
    pub contradiction: bool,
    pub lines: Vec<String>,
}

struct Abelian {
    moduli: Vec<i64>,
}

impl Abelian {
    fn elements(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![]];
        for &m in &self.moduli {
            out = out.into_iter().flat_map(|v| (0..m).map(move |i| [v.clone(), vec![i]].concat())).collect();
        }
        out
    }

    fn add(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        a.iter().zip(b).zip(&self.moduli).map(|((x, y), m)| (x + y).rem_euclid(*m)).collect()
    }

    fn apply(&self, action: &[Vec<i64>], a: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.moduli.len()];
        for (coef, img) in a.iter().zip(action) {
            for _ in 0..*coef {
                out = self.add(&out, img);
            }
        }
        out
    }

    fn is_zero(&self, a: &[i64]) -> bool {
        a.iter().all(|&x| x == 0)
    }
}

/// Element `a x^e` of the extension.
type Elt = (Vec<i64>, bool);

fn mul(g: &Abelian, action: &[Vec<i64>], c: &[i64], p: &Elt, q: &Elt) -> Elt {
    let b = if p.1 { g.apply(action, &q.0) } else { q.0.clone() };
    let mut a = g.add(&p.0, &b);
    if p.1 && q.1 {
        a = g.add(&a, c);
    }
    (a, p.1 ^ q.1)
}

fn elt_order(g: &Abelian, action: &[Vec<i64>], c: &[i64], x: &Elt) -> usize {
    let mut y = x.clone();
    let mut k = 1;
    while !(g.is_zero(&y.0) && !y.1) {
        y = mul(g, action, c, &y, x);
        k += 1;
    }
    k
}

fn compose(g: &Abelian, f: &[Vec<i64>], h: &[Vec<i64>]) -> Vec<Vec<i64>> {
    // (f ∘ h)(e_i) = f(h(e_i))
    h.iter().map(|img| g.apply(f, img)).collect()
}

fn setup(case: NoOrder16Case) -> (Abelian, Vec<Vec<i64>>, Vec<String>) {
    let mut lines = Vec::new();
    match case {
        NoOrder16Case::C8 => {
            lines.push("A = C8 = <g>, x g x^-1 = g^5".into());
            (Abelian { moduli: vec![8] }, vec![vec![5]], lines)
        }
        NoOrder16Case::C4xC2 => {
            let g = Abelian { moduli: vec![4, 2] };
            // α: g ↦ g + h, h ↦ 2g + h
            let alpha = vec![vec![1, 1], vec![2, 1]];
            let alpha2 = compose(&g, &alpha, &alpha);
            lines.push(format!("A = C4 x C2, alpha = {alpha:?}, x acts as alpha^2 = {alpha2:?}"));
            (g, alpha2, lines)
        }
        NoOrder16Case::C2Cubed => {
            let g = Abelian { moduli: vec![2, 2, 2] };
            // Columns of the upper unitriangular U with U^2 = B.
            let u = vec![vec![1, 0, 0], vec![1, 1, 0], vec![0, 1, 1]];
            let b = compose(&g, &u, &u);
            lines.push(format!("A = C2^3, x acts as B = U^2 with columns {b:?}"));
            (g, b, lines)
        }
    }
}

fn average(values: &[usize]) -> Ratio<i64> {
    let total: i64 = values.iter().map(|&o| mu_of_order(o).expect("orders divide 16")).sum();
    Ratio::new(total, values.len() as i64)
}

/// Re-derive the contradiction for one case over every admissible `x^2`.
pub fn verify_no_order16(case: NoOrder16Case) -> NoOrder16Log {
    let (g, action, mut lines) = setup(case);
    let elements = g.elements();
    let identity = vec![0; g.moduli.len()];
    assert_eq!(compose(&g, &action, &action), g.elements_basis(), "action must be an involution");

    let mu_a =
        average(&elements.iter().map(|a| elt_order(&g, &action, &identity, &(a.clone(), false))).collect::<Vec<_>>());
    lines.push(format!("mu(A) = {mu_a}"));

    let mut extensions = Vec::new();
    for c in elements.iter().filter(|c| g.apply(&action, c) == **c) {
        let all: Vec<Elt> = elements.iter().flat_map(|a| [(a.clone(), false), (a.clone(), true)]).collect();
        let associative = all.iter().all(|p| {
            all.iter().all(|q| {
                all.iter().all(|r| {
                    let pq = mul(&g, &action, c, p, q);
                    let qr = mul(&g, &action, c, q, r);
                    mul(&g, &action, c, &pq, r) == mul(&g, &action, c, p, &qr)
                })
            })
        });
        assert!(associative, "coset multiplication must be associative");
        let orders: Vec<usize> = elements.iter().map(|a| elt_order(&g, &action, c, &(a.clone(), true))).collect();
        let mut coset_orders = BTreeMap::new();
        for &o in &orders {
            *coset_orders.entry(o).or_insert(0) += 1;
        }
        let mu_coset = average(&orders);
        let mu_total = (mu_a + mu_coset) / 2;
        lines.push(format!(
            "x^2 = {c:?}: orders on Ax {coset_orders:?}, mu(Ax) = {mu_coset}, mu(H) = ({mu_a} + {mu_coset})/2 = {mu_total}"
        ));
        extensions.push(CosetExtension { x_square: c.clone(), coset_orders, mu_coset, mu_total });
    }
    let constant_coset_order = extensions.iter().all(|e| e.coset_orders.len() == 1);
    let contradiction = extensions.iter().all(|e| !e.mu_total.is_integer());
    lines.push(if contradiction {
        "no extension has integral mu(H)".to_string()
    } else {
        "some extension has integral mu(H)".to_string()
    });
    NoOrder16Log {
        case,
        moduli: g.moduli.clone(),
        action,
        mu_a,
        extensions,
        constant_coset_order,
        contradiction,
        lines,
    }
}

impl Abelian {
    fn elements_basis(&self) -> Vec<Vec<i64>> {
        (0..self.moduli.len()).map(|i| (0..self.moduli.len()).map(|j| i64::from(i == j)).collect()).collect()
    }
}
