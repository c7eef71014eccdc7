//! Exact arithmetic in number-field towers and polynomial identities on the
//! explicit surface equations.

pub mod field;
mod parse;
pub mod poly;

pub use field::{q_i, q_mu_c, q_omega, q_sqrt3, q_sqrt3_omega, FieldElem, FieldTower};
pub use poly::{adjugate, determinant3, mat_mul, transpose, variables, MultiPoly, PolyMatrix};

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::lattice::linalg::{solve_left, RatMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("field error: {0}")]
    Field(String),
    #[error("fixture error: {0}")]
    Fixture(String),
    #[error("parameter {0} undefined on the line: its denominator vanishes identically")]
    UndefinedParameter(String),
}

pub type Result<T> = std::result::Result<T, ExactError>;

const BUNDLED: &str = include_str!("../../fixtures/surfaces.txt");

/// Named polynomials in textual form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixtures {
    entries: BTreeMap<String, (Vec<String>, String)>,
}

impl Fixtures {
    pub fn bundled() -> Self {
        Self::parse(BUNDLED).expect("bundled fixtures parse")
    }

    /// Reads `surfaces.txt` from a directory.
    pub fn from_dir(dir: &Path) -> Result<Self> {
        let path = dir.join("surfaces.txt");
        let text =
            std::fs::read_to_string(&path).map_err(|e| ExactError::Fixture(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Lines `name(v1, v2, ...) = expression`; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = || ExactError::Fixture(format!("line {}: expected `name(vars) = expression`", n + 1));
            let (head, expr) = line.split_once('=').ok_or_else(bad)?;
            let (name, vars) = head.trim().split_once('(').ok_or_else(bad)?;
            let vars = vars.trim().strip_suffix(')').ok_or_else(bad)?;
            let vars: Vec<String> = vars.split(',').map(|v| v.trim().to_string()).filter(|v| !v.is_empty()).collect();
            if entries.insert(name.trim().to_string(), (vars, expr.trim().to_string())).is_some() {
                return Err(ExactError::Fixture(format!("line {}: duplicate name {}", n + 1, name.trim())));
            }
        }
        Ok(Fixtures { entries })
    }

    pub fn names(&self) -> Vec<&str> {
        self.entries.keys().map(String::as_str).collect()
    }

    pub fn text(&self, name: &str) -> Result<&str> {
        self.entries
            .get(name)
            .map(|(_, e)| e.as_str())
            .ok_or_else(|| ExactError::Fixture(format!("no polynomial {name}")))
    }

    /// The named polynomial over `tower`.
    pub fn poly(&self, name: &str, tower: &Arc<FieldTower>) -> Result<MultiPoly> {
        let (vars, expr) =
            self.entries.get(name).ok_or_else(|| ExactError::Fixture(format!("no polynomial {name}")))?;
        MultiPoly::parse(tower, &Arc::new(vars.clone()), expr)
    }
}

/// One verified claim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProofStep {
    pub id: String,
    pub claim: String,
    pub holds: bool,
    pub detail: String,
}

/// Claims of one check with the conjunction of their verdicts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProofLog {
    pub check: String,
    pub steps: Vec<ProofStep>,
    pub verdict: bool,
}

impl ProofLog {
    fn new(check: &str) -> Self {
        ProofLog { check: check.to_string(), steps: Vec::new(), verdict: true }
    }

    fn step(&mut self, id: &str, claim: &str, holds: bool, detail: String) {
        self.verdict &= holds;
        self.steps.push(ProofStep { id: id.to_string(), claim: claim.to_string(), holds, detail });
    }

    pub fn step_holds(&self, id: &str) -> Option<bool> {
        self.steps.iter().find(|s| s.id == id).map(|s| s.holds)
    }
}

fn constant(tower: &Arc<FieldTower>, vars: &Arc<Vec<String>>, text: &str) -> Result<MultiPoly> {
    MultiPoly::parse(tower, vars, text)
}

/// The line `t -> (x(t) : y(t))` over `Q(sqrt3)`.
fn line(fx: &Fixtures, tower: &Arc<FieldTower>) -> Result<Vec<MultiPoly>> {
    ["line_x0", "line_x1", "line_x2", "line_y0", "line_y1", "line_y2"].iter().map(|n| fx.poly(n, tower)).collect()
}

/// The three quadric differences restricted to the line, for given
/// `lambda`, `mu` in `Q(sqrt3)`.
pub fn line_residuals(fx: &Fixtures, lambda: &str, mu: &str) -> Result<Vec<MultiPoly>> {
    let k = q_sqrt3();
    let t = variables(&["t"]);
    let mut images = line(fx, &k)?;
    images.push(constant(&k, &t, lambda)?);
    images.push(constant(&k, &t, mu)?);
    (0..3).map(|i| fx.poly(&format!("hesse_godeaux_{i}"), &k)?.substitute(&images)).collect()
}

/// Restriction of the line to the surface, with residuals and the
/// `t`-degrees of both sides of each equation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineCheck {
    pub holds: bool,
    pub residuals: Vec<String>,
    /// Largest `t`-degree of the x-side and y-side of each equation.
    pub side_degrees: Vec<u32>,
}

/// Whether the stated line lies on the surface with `lambda = 1 + sqrt3`,
/// `mu = 1 - sqrt3`.
pub fn verify_line_on_surface(fx: &Fixtures) -> Result<LineCheck> {
    let residuals = line_residuals(fx, "1 + sqrt3", "1 - sqrt3")?;
    let k = q_sqrt3();
    let t = variables(&["t"]);
    let line = line(fx, &k)?;
    let zero = MultiPoly::zero(&k, &t);
    let mut side_degrees = Vec::new();
    for i in 0..3 {
        let q = fx.poly(&format!("hesse_godeaux_{i}"), &k)?;
        // x-side: y = 0, mu = 0; y-side: x = 0, lambda = 0.
        let lam = constant(&k, &t, "1 + sqrt3")?;
        let mu = constant(&k, &t, "1 - sqrt3")?;
        let xs: Vec<MultiPoly> =
            line[..3].iter().cloned().chain(vec![zero.clone(); 3]).chain([lam, zero.clone()]).collect();
        let ys: Vec<MultiPoly> =
            vec![zero.clone(); 3].into_iter().chain(line[3..].iter().cloned()).chain([zero.clone(), mu]).collect();
        let dx = q.substitute(&xs)?.degree_in("t").unwrap_or(0);
        let dy = q.substitute(&ys)?.degree_in("t").unwrap_or(0);
        side_degrees.push(dx.max(dy));
    }
    Ok(LineCheck {
        holds: residuals.iter().all(MultiPoly::is_zero),
        residuals: residuals.iter().map(|r| r.to_string()).collect(),
        side_degrees,
    })
}

/// Constancy of one elliptic parameter along the line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParameterVerdict {
    pub constant: bool,
    /// Value at the base point `t = t0`.
    pub value: String,
    pub t0: i64,
}

/// The parameters `F_kl = (y_k - omega^l y_{k+1}) / (x_k - omega^l x_{k+1})`
/// along the line over `Q(sqrt3, omega)`, keyed `F00..F22`.
///
/// `F` is constant iff `N(t) D(t0) - D(t) N(t0) = 0`, with `t0` the first
/// of `0, 1, 2, ...` where the denominator does not vanish.
pub fn verify_constant_parameters(fx: &Fixtures) -> Result<BTreeMap<String, ParameterVerdict>> {
    let k = q_sqrt3_omega();
    let t = variables(&["t"]);
    let line = line(fx, &k)?;
    let (x, y) = (&line[..3], &line[3..]);
    let mut out = BTreeMap::new();
    for a in 0..3 {
        for l in 0..3u32 {
            let label = format!("F{a}{l}");
            let w = MultiPoly::constant(&t, FieldElem::parse(&k, "omega")?.pow(l));
            let num = &y[a] - &(&w * &y[(a + 1) % 3]);
            let den = &x[a] - &(&w * &x[(a + 1) % 3]);
            if den.is_zero() {
                return Err(ExactError::UndefinedParameter(label));
            }
            let at = |p: &MultiPoly, s: i64| p.evaluate(&[FieldElem::from_int(&k, s)]);
            let t0 = (0..).find(|&s| at(&den, s).map(|v| !v.is_zero()).unwrap_or(false)).expect("nonzero polynomial");
            let (n0, d0) = (at(&num, t0)?, at(&den, t0)?);
            let cross = &num.scale(&d0) - &den.scale(&n0);
            let value = &n0 * &d0.inverse().expect("nonzero in a field");
            out.insert(label, ParameterVerdict { constant: cross.is_zero(), value: value.to_string(), t0 });
        }
    }
    Ok(out)
}

fn matrix_of(tower: &Arc<FieldTower>, vars: &Arc<Vec<String>>, entries: [[&str; 3]; 3]) -> Result<PolyMatrix> {
    let rows: Vec<Vec<MultiPoly>> =
        entries.iter().map(|r| r.iter().map(|e| MultiPoly::parse(tower, vars, e)).collect()).collect::<Result<_>>()?;
    Ok(std::array::from_fn(|i| std::array::from_fn(|j| rows[i][j].clone())))
}

fn generic_matrix(tower: &Arc<FieldTower>) -> Result<(Arc<Vec<String>>, PolyMatrix)> {
    let vars = variables(&["a00", "a01", "a02", "a10", "a11", "a12", "a20", "a21", "a22"]);
    let a = matrix_of(tower, &vars, [["a00", "a01", "a02"], ["a10", "a11", "a12"], ["a20", "a21", "a22"]])?;
    Ok((vars, a))
}

/// `A -> B^T A B` for a constant matrix `B`.
fn congruence_by(b: &PolyMatrix, a: &PolyMatrix) -> PolyMatrix {
    mat_mul(&mat_mul(&transpose(b), a), b)
}

/// Proportionality factor between two matrices, if any.
fn proportional(a: &PolyMatrix, b: &PolyMatrix) -> Option<FieldElem> {
    let (i, j) = (0..9).map(|k| (k / 3, k % 3)).find(|&(i, j)| !b[i][j].is_zero())?;
    let s = a[i][j].proportional_to(&b[i][j])?;
    (0..9).all(|k| a[k / 3][k % 3] == b[k / 3][k % 3].scale(&s)).then_some(s)
}

/// Writes `target` as `sum_i a_i q_i` with each `a_i` in the `Q`-span of
/// `basis`; returns the `a_i` or `None` if no such combination exists.
fn combination(target: &MultiPoly, qs: &[MultiPoly], basis: &[FieldElem]) -> Option<Vec<FieldElem>> {
    let products: Vec<MultiPoly> = qs.iter().flat_map(|q| basis.iter().map(move |b| q.scale(b))).collect();
    let mut keys: Vec<(Vec<u32>, Vec<u32>)> = target.rational_coefficients().into_keys().collect();
    for p in &products {
        keys.extend(p.rational_coefficients().into_keys());
    }
    keys.sort();
    keys.dedup();
    let row = |p: &MultiPoly| -> Vec<BigRational> {
        let c = p.rational_coefficients();
        keys.iter().map(|k| c.get(k).cloned().unwrap_or_else(BigRational::zero)).collect()
    };
    let rows: RatMatrix = products.iter().map(row).collect();
    let x = solve_left(&rows, &row(target))?;
    let tower = target.tower();
    let mut coeffs = vec![FieldElem::zero(tower); qs.len()];
    for (i, xi) in x.iter().enumerate() {
        let (qi, bi) = (i / basis.len(), i % basis.len());
        coeffs[qi] = &coeffs[qi] + &(&basis[bi] * &FieldElem::from_rational(tower, xi.clone()));
    }
    Some(coeffs)
}

/// Identities behind the Cremona involution `A -> adj(A)`.
///
/// (i) `adj(adj(A)) = det(A) A` for a generic 3x3 matrix. (ii) With
/// `(lambda + 1)(mu + 1) = 1` and `c^2 = 1 - mu^2`, each constraint
/// `2 adj_kk - mu (adj_lm + adj_ml)` on the adjoint of the matrix in `x, y`
/// is a `Q[mu, c]`-combination of the quadric differences multiplied by
/// `mu + 1` (which clears `lambda = -mu / (mu + 1)`). (iii) `A -> B^T A B`
/// for the three matrices `B` satisfy the stated relations with `adj` up
/// to scalar.
pub fn verify_adjoint_involution(fx: &Fixtures) -> Result<ProofLog> {
    let mut log = ProofLog::new("adjoint-involution");

    let q = FieldTower::rationals().into_arc();
    let (_, a) = generic_matrix(&q)?;
    let lhs = adjugate(&adjugate(&a));
    let det = determinant3(&a);
    let holds = (0..9).all(|k| lhs[k / 3][k % 3] == &det * &a[k / 3][k % 3]);
    log.step(
        "adj-adj",
        "adj(adj(A)) = det(A) A for a generic 3x3 matrix",
        holds,
        format!("det(A) has {} terms", det.len()),
    );

    let k = q_mu_c();
    let vars = variables(&["x0", "x1", "x2", "y0", "y1", "y2"]);
    let m = matrix_of(
        &k,
        &vars,
        [["mu*x0", "x2 + c*y2", "x1 - c*y1"], ["x2 - c*y2", "mu*x1", "x0 + c*y0"], ["x1 + c*y1", "x0 - c*y0", "mu*x2"]],
    )?;
    let adj = adjugate(&m);
    let mu = MultiPoly::parse(&k, &vars, "mu")?;
    let xy: Vec<MultiPoly> = vars.iter().map(|v| MultiPoly::var(&k, &vars, v)).collect::<Result<_>>()?;
    let at_lambda = |i: usize, lam: i64| -> Result<MultiPoly> {
        let mut images = xy.clone();
        images.push(MultiPoly::constant(&vars, FieldElem::from_int(&k, lam)));
        images.push(mu.clone());
        fx.poly(&format!("hesse_godeaux_{i}"), &k)?.substitute(&images)
    };
    let mut cleared = Vec::new();
    for i in 0..3 {
        let (q0, q1) = (at_lambda(i, 0)?, at_lambda(i, 1)?);
        // (mu + 1) Q|_{lambda = -mu/(mu+1)} = (mu + 1) Q|_0 - mu (Q|_1 - Q|_0)
        let one = MultiPoly::constant(&vars, FieldElem::one(&k));
        cleared.push(&(&(&mu + &one) * &q0) - &(&mu * &(&q1 - &q0)));
    }
    let basis: Vec<FieldElem> =
        ["1", "mu", "mu^2", "c", "mu*c", "mu^2*c"].iter().map(|s| FieldElem::parse(&k, s)).collect::<Result<_>>()?;
    for kk in 0..3 {
        let (l, mm) = ((kk + 1) % 3, (kk + 2) % 3);
        let two = MultiPoly::constant(&vars, FieldElem::from_int(&k, 2));
        let constraint = &(&two * &adj[kk][kk]) - &(&mu * &(&adj[l][mm] + &adj[mm][l]));
        let found = combination(&constraint, &cleared, &basis);
        let detail = match &found {
            Some(c) => c.iter().enumerate().map(|(i, x)| format!("a{i} = {x}")).collect::<Vec<_>>().join(", "),
            None => format!("no combination; constraint = {constraint}"),
        };
        log.step(
            &format!("constraint-{kk}"),
            &format!("2 adj_{kk}{kk} - mu (adj_{l}{mm} + adj_{mm}{l}) lies in the span of the quadric differences"),
            found.is_some(),
            detail,
        );
    }

    let w = q_omega();
    let (_, a) = generic_matrix(&w)?;
    let cvars = a[0][0].vars().clone();
    let b = |e: [[&str; 3]; 3]| matrix_of(&w, &cvars, e);
    let b_alpha = b([["0", "0", "1"], ["1", "0", "0"], ["0", "1", "0"]])?;
    let b_beta = b([["1", "0", "0"], ["0", "omega^2", "0"], ["0", "0", "omega"]])?;
    let b_gamma = b([["1", "1", "1"], ["1", "omega^2", "omega"], ["1", "omega", "omega^2"]])?;
    let b_beta2 = mat_mul(&b_beta, &b_beta);
    // Up to scalar, adj(B) represents the inverse transformation.
    let b_gamma_inv = adjugate(&b_gamma);
    let adj_a = adjugate(&a);
    for (id, claim, g, h) in [
        ("delta-alpha", "delta alpha = alpha delta", &b_alpha, &b_alpha),
        ("delta-beta", "delta beta = beta^2 delta", &b_beta, &b_beta2),
        ("delta-gamma", "delta gamma = gamma^-1 delta", &b_gamma, &b_gamma_inv),
    ] {
        let left = adjugate(&congruence_by(g, &a));
        let right = congruence_by(h, &adj_a);
        let s = proportional(&left, &right);
        let detail = match &s {
            Some(s) => format!("ratio {s}"),
            None => "not proportional".into(),
        };
        log.step(id, claim, s.is_some(), detail);
    }
    Ok(log)
}

/// Identities of the tri-degree (2,2,2) surface.
///
/// (i) `F` is nonzero at the eight points with each coordinate `0` or `∞`,
/// the fixed points of `(u,v,w) -> (-u,-v,-w)`. (ii) `(u,v,w) -> (iu, iv,
/// -i/w)` squares to `(-u,-v,w)`. (iii) `F` is preserved up to scalar by
/// `(u,-v,-w)`, `(-i/u,-i/v,-i/w)`, the order-4 map and `(-u,-v,-w)`.
///
/// Each factor is handled in homogeneous coordinates `(s0 : s1)` with the
/// affine coordinate `s1 / s0`; maps act by 2x2 matrices on `(s0, s1)`.
pub fn verify_h192_identities(fx: &Fixtures) -> Result<ProofLog> {
    let mut log = ProofLog::new("h192");
    let k = q_i();
    let f = fx.poly("h192", &k)?;
    let hv = variables(&["u0", "u1", "v0", "v1", "w0", "w1"]);
    let var = |n: &str| MultiPoly::var(&k, &hv, n);
    // F(u1/u0, v1/v0, w1/w0) u0^2 v0^2 w0^2, built monomial by monomial.
    let mut fh = MultiPoly::zero(&k, &hv);
    for (e, c) in f.terms() {
        let mut term = MultiPoly::constant(&hv, c.clone());
        for (axis, &d) in e.iter().enumerate() {
            let (s0, s1) = (var(&hv[2 * axis])?, var(&hv[2 * axis + 1])?);
            term = &(&term * &s1.pow(d)) * &s0.pow(2 - d);
        }
        fh = &fh + &term;
    }
    let mut values = Vec::new();
    let mut all_nonzero = true;
    for mask in 0..8u32 {
        let point: Vec<FieldElem> = (0..3)
            .flat_map(|axis| {
                let inf = mask >> axis & 1 == 1;
                [FieldElem::from_int(&k, i64::from(!inf)), FieldElem::from_int(&k, i64::from(inf))]
            })
            .collect();
        let v = fh.evaluate(&point)?;
        all_nonzero &= !v.is_zero();
        let name: String =
            (0..3).map(|axis| if mask >> axis & 1 == 1 { "inf" } else { "0" }).collect::<Vec<_>>().join(",");
        values.push(format!("F({name}) = {v}"));
    }
    log.step(
        "boundary",
        "F does not vanish at the eight fixed points of the sign involution",
        all_nonzero,
        values.join("; "),
    );

    type M2 = [[FieldElem; 2]; 2];
    let e = |s: &str| FieldElem::parse(&k, s).expect("valid constant");
    let mul2 = |a: &M2, b: &M2| -> M2 {
        std::array::from_fn(|r| std::array::from_fn(|c| &(&a[r][0] * &b[0][c]) + &(&a[r][1] * &b[1][c])))
    };
    // Matrices act on column vectors (s0, s1).
    let scale_by = |c: &str| -> M2 { [[e("1"), e("0")], [e("0"), e(c)]] };
    let minus_i_over: M2 = [[e("0"), e("1")], [e("-i"), e("0")]];
    let order4 = [scale_by("i"), scale_by("i"), minus_i_over.clone()];
    let square: Vec<M2> = order4.iter().map(|m| mul2(m, m)).collect();
    let target = [scale_by("-1"), scale_by("-1"), scale_by("1")];
    let projectively_equal = |a: &M2, b: &M2| -> bool {
        let (r, c) = (0..4).map(|x| (x / 2, x % 2)).find(|&(r, c)| !b[r][c].is_zero()).expect("invertible");
        let s = &a[r][c] * &b[r][c].inverse().expect("nonzero");
        (0..4).all(|x| a[x / 2][x % 2] == &s * &b[x / 2][x % 2])
    };
    let holds = square.iter().zip(&target).all(|(a, b)| projectively_equal(a, b));
    log.step("order4-square", "(iu, iv, -i/w) squared is (-u, -v, w)", holds, "componentwise in PGL(2)".into());
    let signs_even = target.iter().filter(|m| m[1][1] == e("-1")).count() % 2 == 0;
    log.step("order4-square-type", "the square changes an even number of signs", signs_even, "two sign changes".into());

    let apply = |maps: &[M2; 3]| -> Result<MultiPoly> {
        let mut images = Vec::new();
        for (axis, m) in maps.iter().enumerate() {
            let (s0, s1) = (var(&hv[2 * axis])?, var(&hv[2 * axis + 1])?);
            for row in m {
                images.push(&s0.scale(&row[0]) + &s1.scale(&row[1]));
            }
        }
        fh.substitute(&images)
    };
    let maps: [(&str, &str, [M2; 3]); 4] = [
        ("sign-uvw", "(-u, -v, -w) preserves F", [scale_by("-1"), scale_by("-1"), scale_by("-1")]),
        ("sign-vw", "(u, -v, -w) preserves F up to scalar", [scale_by("1"), scale_by("-1"), scale_by("-1")]),
        (
            "inversion",
            "(-i/u, -i/v, -i/w) preserves F up to scalar",
            [minus_i_over.clone(), minus_i_over.clone(), minus_i_over.clone()],
        ),
        ("order4", "(iu, iv, -i/w) preserves F up to scalar", order4.clone()),
    ];
    for (id, claim, m) in maps {
        let g = apply(&m)?;
        let s = g.proportional_to(&fh);
        let detail = s.as_ref().map_or("not proportional".into(), |s| format!("ratio {s}"));
        let exact = id != "sign-uvw" || s.as_ref().is_some_and(FieldElem::is_one);
        log.step(id, claim, s.is_some() && exact, detail);
    }
    Ok(log)
}

/// Degenerations of the explicit surfaces in characteristic `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharPReport {
    pub p: u64,
    /// `Σ x_i x_j` at `(1:1:1:1:1)`.
    pub all_ones_value: i64,
    pub all_ones_vanishes: bool,
    /// Distinct values at sign vectors `(±1, ..., ±1)` with their vanishing mod `p`.
    pub sign_values: Vec<(i64, bool)>,
    /// Whether some sign vector is a fixed point of the Cremona involution on the surface.
    pub sign_fixed_point: bool,
    /// `(lambda - mu)^2` for `lambda, mu = 1 ± sqrt3`.
    pub lambda_mu_gap_squared: i64,
    /// `lambda = mu` after reduction, so the plane `x = y` lies on the surface.
    pub lambda_equals_mu: bool,
}

fn vanishes_mod(v: &BigRational, p: u64) -> bool {
    assert!(v.is_integer());
    (v.to_integer() % BigInt::from(p)).is_zero()
}

/// Evaluates the S5-symmetric equations at the Cremona fixed points
/// `(±1 : ... : ±1)` and the Hesse–Godeaux gap `lambda - mu` modulo `p`.
///
/// A sign vector lies on the surface iff both `Σ x_i x_j` and the cleared
/// reciprocal vanish there; both equal `((Σ ε_i)^2 - 5) / 2` up to the sign
/// `Π ε_i`. In a field, `lambda = mu` iff `(lambda - mu)^2 = 12` vanishes.
pub fn char_p_degeneracy(fx: &Fixtures, p: u64) -> Result<CharPReport> {
    let q = FieldTower::rationals().into_arc();
    let quad = fx.poly("s5_quadric", &q)?;
    let recip = fx.poly("s5_reciprocal", &q)?;
    let value = |poly: &MultiPoly, signs: &[i64]| -> Result<BigRational> {
        let pt: Vec<FieldElem> = signs.iter().map(|&s| FieldElem::from_int(&q, s)).collect();
        Ok(poly.evaluate(&pt)?.as_rational().expect("rational point"))
    };
    let ones = value(&quad, &[1; 5])?;
    let mut sign_values = BTreeMap::new();
    let mut sign_fixed_point = false;
    for mask in 0..32u32 {
        let signs: Vec<i64> = (0..5).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
        let a = value(&quad, &signs)?;
        let b = value(&recip, &signs)?;
        let both = vanishes_mod(&a, p) && vanishes_mod(&b, p);
        sign_fixed_point |= both;
        sign_values.insert(a.to_integer().try_into().expect("small"), vanishes_mod(&a, p));
    }
    let k = q_sqrt3();
    let gap = &FieldElem::parse(&k, "1 + sqrt3")? - &FieldElem::parse(&k, "1 - sqrt3")?;
    let gap2 = (&gap * &gap).as_rational().expect("rational square");
    Ok(CharPReport {
        p,
        all_ones_value: ones.to_integer().try_into().expect("small"),
        all_ones_vanishes: vanishes_mod(&ones, p),
        sign_values: sign_values.into_iter().rev().collect(),
        sign_fixed_point,
        lambda_mu_gap_squared: gap2.to_integer().try_into().expect("small"),
        lambda_equals_mu: vanishes_mod(&gap2.abs(), p),
    })
}
