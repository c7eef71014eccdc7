//! Cyclotomic integers `Z[ζ_n]`.
//!
//! Elements are stored in `Z[x]/(x^n - 1)`, which maps onto `Z[ζ_n]`; equality
//! and rationality are decided after reduction modulo the cyclotomic polynomial.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Integer coefficients of the `n`-th cyclotomic polynomial, constant term first.
pub fn cyclotomic_polynomial(n: usize) -> Vec<i64> {
    assert!(n >= 1);
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; n + 1];
    num[0] = -1;
    num[n] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = exact_div(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd];
    let mut q = vec![0i64; rem.len() - dd];
    for i in (0..q.len()).rev() {
        let c = rem[i + dd] / lead;
        q[i] = c;
        for (j, &b) in den.iter().enumerate() {
            rem[i + j] -= c * b;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

/// Euler's totient.
pub fn totient(n: usize) -> usize {
    (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count()
}

/// An element of `Z[ζ_n]` for a fixed `n`.
#[derive(Debug, Clone)]
pub struct Cyclo {
    n: usize,
    coeffs: Vec<i64>,
}

impl Cyclo {
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1);
        Cyclo { n, coeffs: vec![0; n] }
    }

    pub fn integer(n: usize, v: i64) -> Self {
        let mut c = Cyclo::zero(n);
        c.coeffs[0] = v;
        c
    }

    /// `ζ_n^k`.
    pub fn root(n: usize, k: i64) -> Self {
        let mut c = Cyclo::zero(n);
        c.coeffs[k.rem_euclid(n as i64) as usize] = 1;
        c
    }

    /// `Σ c_k ζ_n^k` from raw coefficients (length `n`).
    pub fn from_coeffs(n: usize, coeffs: Vec<i64>) -> Self {
        assert_eq!(coeffs.len(), n);
        Cyclo { n, coeffs }
    }

    pub fn conductor(&self) -> usize {
        self.n
    }

    /// Complex conjugate: `ζ^k ↦ ζ^{-k}`.
    pub fn conj(&self) -> Self {
        let mut c = Cyclo::zero(self.n);
        for (k, &v) in self.coeffs.iter().enumerate() {
            c.coeffs[(self.n - k) % self.n] += v;
        }
        c
    }

    /// Galois image under `ζ ↦ ζ^a` with `gcd(a, n) = 1`.
    pub fn galois(&self, a: usize) -> Self {
        let mut c = Cyclo::zero(self.n);
        for (k, &v) in self.coeffs.iter().enumerate() {
            c.coeffs[(k * a) % self.n] += v;
        }
        c
    }

    pub fn scale(&self, s: i64) -> Self {
        Cyclo { n: self.n, coeffs: self.coeffs.iter().map(|v| v * s).collect() }
    }

    /// Canonical coordinates in the power basis `1, ζ, …, ζ^{φ(n)-1}`.
    pub fn reduced(&self) -> Vec<i64> {
        let phi = cyclotomic_polynomial(self.n);
        let deg = phi.len() - 1;
        let mut r = self.coeffs.clone();
        for i in (deg..r.len()).rev() {
            let c = r[i];
            if c != 0 {
                for (j, &b) in phi.iter().enumerate() {
                    r[i - deg + j] -= c * b;
                }
            }
        }
        r.truncate(deg);
        r
    }

    pub fn is_zero(&self) -> bool {
        self.reduced().iter().all(|&v| v == 0)
    }

    /// The value as an integer, when it is rational.
    pub fn as_integer(&self) -> Option<i64> {
        let r = self.reduced();
        if r.iter().skip(1).all(|&v| v == 0) {
            Some(r.first().copied().unwrap_or(0))
        } else {
            None
        }
    }

    fn check(&self, other: &Cyclo) {
        assert_eq!(self.n, other.n, "cyclotomic elements from different fields");
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        self.check(other);
        (self - other).is_zero()
    }
}

impl Eq for Cyclo {}

impl Add for &Cyclo {
    type Output = Cyclo;
    fn add(self, o: &Cyclo) -> Cyclo {
        self.check(o);
        Cyclo { n: self.n, coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Cyclo {
    type Output = Cyclo;
    fn sub(self, o: &Cyclo) -> Cyclo {
        self.check(o);
        Cyclo { n: self.n, coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        self.scale(-1)
    }
}

impl Mul for &Cyclo {
    type Output = Cyclo;
    fn mul(self, o: &Cyclo) -> Cyclo {
        self.check(o);
        let n = self.n;
        let mut c = vec![0i64; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                if b != 0 {
                    c[(i + j) % n] += a * b;
                }
            }
        }
        Cyclo { n, coeffs: c }
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(v) = self.as_integer() {
            return write!(f, "{v}");
        }
        let r = self.reduced();
        let mut first = true;
        for (k, &v) in r.iter().enumerate() {
            if v == 0 {
                continue;
            }
            let sign = if v < 0 { "-" } else { "+" };
            if first {
                if v < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = v.abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (_, 1) => write!(f, "z{}^{k}", self.n)?,
                _ => write!(f, "{a}*z{}^{k}", self.n)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        for n in 1..40 {
            assert_eq!(cyclotomic_polynomial(n).len() - 1, totient(n));
        }
    }

    #[test]
    fn root_sums() {
        // 1 + ζ3 + ζ3² = 0 and ζ6 + ζ6^5 = 1.
        let s = &(&Cyclo::integer(3, 1) + &Cyclo::root(3, 1)) + &Cyclo::root(3, 2);
        assert!(s.is_zero());
        let t = &Cyclo::root(6, 1) + &Cyclo::root(6, 5);
        assert_eq!(t.as_integer(), Some(1));
        let i = Cyclo::root(4, 1);
        assert_eq!((&i * &i).as_integer(), Some(-1));
        assert_eq!((&i * &i.conj()).as_integer(), Some(1));
    }

    #[test]
    fn display_is_reduced() {
        assert_eq!(Cyclo::root(4, 3).to_string(), "-z4^1");
        assert_eq!(Cyclo::root(5, 0).to_string(), "1");
    }
}
