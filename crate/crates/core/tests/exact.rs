use std::collections::BTreeSet;
use std::sync::Arc;

use enriques_core::exact::field::{q_i, q_sqrt3, q_sqrt3_omega, FieldElem, FieldTower};
use enriques_core::exact::poly::{adjugate, determinant3, variables, MultiPoly, PolyMatrix};
use enriques_core::exact::*;
use proptest::prelude::*;

fn fx() -> Fixtures {
    Fixtures::bundled()
}

/// `a + b sqrt3` with integer parts.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Q3(i64, i64);

impl std::ops::Add for Q3 {
    type Output = Q3;
    fn add(self, o: Q3) -> Q3 {
        Q3(self.0 + o.0, self.1 + o.1)
    }
}

impl std::ops::Sub for Q3 {
    type Output = Q3;
    fn sub(self, o: Q3) -> Q3 {
        Q3(self.0 - o.0, self.1 - o.1)
    }
}

impl std::ops::Mul for Q3 {
    type Output = Q3;
    fn mul(self, o: Q3) -> Q3 {
        Q3(self.0 * o.0 + 3 * self.1 * o.1, self.0 * o.1 + self.1 * o.0)
    }
}

/// The three quadric differences at the line point for parameter `t`.
fn residuals_at(t: i64, lambda: Q3, mu: Q3) -> [Q3; 3] {
    let t = Q3(t, 0);
    let x = [Q3(1, -1) * t, t + Q3(0, 1), t - Q3(0, 1)];
    let y = [Q3(1, 1), Q3(0, 1) * t + Q3(1, 0), Q3(0, -1) * t + Q3(1, 0)];
    std::array::from_fn(|k| {
        let (a, b) = ((k + 1) % 3, (k + 2) % 3);
        (x[k] * x[k] - lambda * x[a] * x[b]) - (y[k] * y[k] - mu * y[a] * y[b])
    })
}

#[test]
fn line_lies_on_the_surface() {
    let (lambda, mu) = (Q3(1, 1), Q3(1, -1));
    // Each residual is a quadratic in t, so three zeros force it to vanish.
    for t in 0..3 {
        assert_eq!(residuals_at(t, lambda, mu), [Q3(0, 0); 3], "t = {t}");
    }
    assert!((0..3).any(|t| residuals_at(t, mu, lambda) != [Q3(0, 0); 3]));

    let check = verify_line_on_surface(&fx()).unwrap();
    assert!(check.holds);
    assert!(check.residuals.iter().all(|r| r == "0"));
    assert!(check.side_degrees.iter().all(|&d| d <= 2));
    let swapped = line_residuals(&fx(), "1 - sqrt3", "1 + sqrt3").unwrap();
    assert!(swapped.iter().any(|r| !r.is_zero()));
}

#[test]
fn four_parameters_are_constant_on_the_line() {
    let fx = fx();
    let k = q_sqrt3_omega();
    let coord = |name: &str, t: i64| fx.poly(name, &k).unwrap().evaluate(&[FieldElem::from_int(&k, t)]).unwrap();
    let omega = FieldElem::parse(&k, "omega").unwrap();
    let params = verify_constant_parameters(&fx).unwrap();
    assert_eq!(params.len(), 9);
    for a in 0..3 {
        for l in 0..3u32 {
            let b = (a + 1) % 3;
            let w = omega.pow(l);
            let num = |t| &coord(&format!("line_y{a}"), t) - &(&w * &coord(&format!("line_y{b}"), t));
            let den = |t| &coord(&format!("line_x{a}"), t) - &(&w * &coord(&format!("line_x{b}"), t));
            // Constancy by cross-multiplying at several parameter values.
            let constant = (0..4).all(|s| (0..4).all(|t| &num(s) * &den(t) == &num(t) * &den(s)));
            let label = format!("F{a}{l}");
            assert_eq!(params[&label].constant, constant, "{label}");
            if constant {
                let t0 = params[&label].t0;
                assert_eq!(params[&label].value, (&num(t0) * &den(t0).inverse().unwrap()).to_string());
            }
        }
    }
    let constant: BTreeSet<&str> = params.iter().filter(|(_, v)| v.constant).map(|(k, _)| k.as_str()).collect();
    assert!(["F01", "F02", "F21", "F22"].iter().all(|l| constant.contains(l)));
    assert!(!params["F00"].constant);
}

#[test]
fn adjoint_involution_log() {
    let log = verify_adjoint_involution(&fx()).unwrap();
    assert!(log.verdict);
    let ids: Vec<&str> = log.steps.iter().map(|s| s.id.as_str()).collect();
    assert_eq!(
        ids,
        ["adj-adj", "constraint-0", "constraint-1", "constraint-2", "delta-alpha", "delta-beta", "delta-gamma"]
    );
    assert!(log.steps.iter().all(|s| s.holds));
    assert_eq!(log.step_holds("delta-gamma"), Some(true));
    assert_eq!(log.step_holds("missing"), None);
}

#[test]
fn h192_identities() {
    let fx = fx();
    let k = q_i();
    let f = fx.poly("h192", &k).unwrap();
    let zero = FieldElem::zero(&k);
    assert!(f.evaluate(&[zero.clone(), zero.clone(), zero]).unwrap().is_one());
    // Every monomial has even multidegree, so the sign involution fixes F exactly.
    let vars = f.vars().clone();
    let neg: Vec<MultiPoly> = vars.iter().map(|v| -&MultiPoly::var(&k, &vars, v).unwrap()).collect();
    assert_eq!(f.substitute(&neg).unwrap(), f);
    assert!(f.terms().keys().all(|e| e.iter().all(|d| d % 2 == 0)));

    let log = verify_h192_identities(&fx).unwrap();
    assert!(log.verdict, "{log:?}");
    let ids: BTreeSet<&str> = log.steps.iter().map(|s| s.id.as_str()).collect();
    let want: BTreeSet<&str> =
        ["boundary", "order4-square", "order4-square-type", "sign-uvw", "sign-vw", "inversion", "order4"].into();
    assert_eq!(ids, want);
    let ratio = |id: &str| log.steps.iter().find(|s| s.id == id).unwrap().detail.clone();
    assert_eq!(ratio("sign-uvw"), "ratio 1");
}

#[test]
fn characteristic_p_degenerations() {
    let fx = fx();
    // Sign vectors with m minus signs give ((5 - 2m)^2 - 5)/2.
    let sign_values: BTreeSet<i64> = (0..=5).map(|m: i64| ((5 - 2 * m).pow(2) - 5) / 2).collect();
    assert_eq!(sign_values, BTreeSet::from([-2, 2, 10]));
    for p in [2u64, 3, 5, 7, 11] {
        let r = char_p_degeneracy(&fx, p).unwrap();
        let pi = p as i64;
        assert_eq!(r.all_ones_value, 10);
        assert_eq!(r.all_ones_vanishes, 10 % pi == 0, "p = {p}");
        let got: BTreeSet<i64> = r.sign_values.iter().map(|(v, _)| *v).collect();
        assert_eq!(got, sign_values);
        assert!(r.sign_values.iter().all(|(v, z)| *z == (v % pi == 0)));
        assert_eq!(r.lambda_mu_gap_squared, 12);
        assert_eq!(r.lambda_equals_mu, 12 % pi == 0, "p = {p}");
    }
    assert!(char_p_degeneracy(&fx, 5).unwrap().sign_fixed_point);
    assert!(char_p_degeneracy(&fx, 2).unwrap().sign_fixed_point);
    assert!(!char_p_degeneracy(&fx, 7).unwrap().sign_fixed_point);
    assert!(!char_p_degeneracy(&fx, 3).unwrap().sign_fixed_point);
}

#[test]
fn proof_logs_are_deterministic() {
    let fx = fx();
    let a = serde_json::to_string(&verify_adjoint_involution(&fx).unwrap()).unwrap();
    let b = serde_json::to_string(&verify_adjoint_involution(&fx).unwrap()).unwrap();
    assert_eq!(a, b);
    let a = serde_json::to_string(&verify_h192_identities(&fx).unwrap()).unwrap();
    let b = serde_json::to_string(&verify_h192_identities(&fx).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn fixture_errors() {
    assert!(Fixtures::parse("broken line").is_err());
    let lazy = Fixtures::parse("f(x) = x +").unwrap();
    assert!(lazy.poly("f", &q_sqrt3()).is_err());
    assert!(Fixtures::parse("f(x) = 1\nf(y) = 2").is_err());
    let ok = Fixtures::parse("f(x) = x^2 + sqrt3").unwrap();
    assert_eq!(ok.names(), vec!["f"]);
    assert!(ok.poly("f", &q_sqrt3()).is_ok());
    assert!(ok.poly("f", &FieldTower::rationals().into_arc()).is_err());
    assert!(ok.poly("g", &q_sqrt3()).is_err());
    let dir = std::env::temp_dir().join(format!("exact-fixtures-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(dir.join("surfaces.txt"), include_str!("../fixtures/surfaces.txt")).unwrap();
    let from_disk = Fixtures::from_dir(&dir).unwrap();
    assert_eq!(from_disk.names(), fx().names());
    std::fs::remove_dir_all(&dir).unwrap();
    assert!(Fixtures::from_dir(&dir).is_err());
}

fn tower() -> Arc<FieldTower> {
    q_sqrt3_omega()
}

fn elem(c: [i64; 4]) -> FieldElem {
    let text = format!("{} + {}*sqrt3 + {}*omega + {}*sqrt3*omega", c[0], c[1], c[2], c[3]);
    FieldElem::parse(&tower(), &text).unwrap()
}

fn poly(coeffs: &[i64]) -> MultiPoly {
    // Coefficients of 1, x, y, x*y, x^2, sqrt3*y^2 in order.
    let monos = ["1", "x", "y", "x*y", "x^2", "sqrt3*y^2"];
    let text: Vec<String> = coeffs.iter().zip(monos).map(|(c, m)| format!("({c})*{m}")).collect();
    MultiPoly::parse(&tower(), &variables(&["x", "y"]), &text.join(" + ")).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_inverses(c in prop::array::uniform4(-9i64..=9)) {
        let a = elem(c);
        prop_assume!(!a.is_zero());
        prop_assert!((&a * &a.inverse().unwrap()).is_one());
        let again = FieldElem::parse(&tower(), &a.to_string()).unwrap();
        prop_assert_eq!(again, a);
    }

    #[test]
    fn polynomial_distributivity(f in prop::collection::vec(-5i64..=5, 6), g in prop::collection::vec(-5i64..=5, 6), h in prop::collection::vec(-5i64..=5, 6)) {
        let (f, g, h) = (poly(&f), poly(&g), poly(&h));
        prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
    }

    #[test]
    fn substitution_is_a_ring_map(f in prop::collection::vec(-5i64..=5, 6), g in prop::collection::vec(-5i64..=5, 6), a in prop::collection::vec(-3i64..=3, 6), b in prop::collection::vec(-3i64..=3, 6)) {
        let (f, g) = (poly(&f), poly(&g));
        let images = [poly(&a), poly(&b)];
        let s = |p: &MultiPoly| p.substitute(&images).unwrap();
        prop_assert_eq!(s(&(&f * &g)), &s(&f) * &s(&g));
        prop_assert_eq!(s(&(&f + &g)), &s(&f) + &s(&g));
    }

    #[test]
    fn adjugate_twice_is_determinant_times_matrix(m in prop::array::uniform9(-6i64..=6)) {
        let k = tower();
        let vars = variables(&["x"]);
        let a: PolyMatrix = std::array::from_fn(|r| {
            std::array::from_fn(|c| MultiPoly::constant(&vars, FieldElem::from_int(&k, m[3 * r + c])))
        });
        let det = determinant3(&a);
        let twice = adjugate(&adjugate(&a));
        for r in 0..3 {
            for c in 0..3 {
                prop_assert_eq!(&twice[r][c], &(&det * &a[r][c]));
            }
        }
    }
}
