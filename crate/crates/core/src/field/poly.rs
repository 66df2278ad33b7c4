//! Dense univariate polynomials over ℚ, enough to derive cyclotomic
//! polynomials and run the extended Euclidean algorithm.

use super::Rational;
use crate::error::{AlgebraError, Result};

/// Coefficients from the constant term upwards; never has trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(Vec<Rational>);

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().copied().map(Rational::from_int).collect())
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Poly(vec![Rational::one()])
    }

    /// `x^n - 1`
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut c = vec![Rational::zero(); n + 1];
        c[0] = Rational::from_int(-1);
        c[n] = Rational::one();
        Poly(c)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn lead(&self) -> Option<&Rational> {
        self.0.last()
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        Poly::new(out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        let z = Rational::zero();
        let out = (0..n)
            .map(|k| self.0.get(k).unwrap_or(&z) - other.0.get(k).unwrap_or(&z))
            .collect();
        Poly::new(out)
    }

    pub fn scale(&self, s: &Rational) -> Poly {
        Poly::new(self.0.iter().map(|c| c * s).collect())
    }

    /// Quotient and remainder of Euclidean division.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let dl = divisor.lead().ok_or(AlgebraError::DivisionByZero)?.recip()?;
        let dd = divisor.0.len() - 1;
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &dl;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.0.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * d);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Returns `(g, s)` with `s·self ≡ g (mod modulus)` and `g` the monic gcd.
    pub fn gcd_cofactor(&self, modulus: &Poly) -> Result<(Poly, Poly)> {
        let (mut r0, mut r1) = (modulus.clone(), self.clone());
        let (mut s0, mut s1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = s0.sub(&q.mul(&s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        let lead = r0.lead().ok_or(AlgebraError::DivisionByZero)?.recip()?;
        Ok((r0.scale(&lead), s0.scale(&lead)))
    }
}

/// Φₙ, obtained by dividing `x^n − 1` by every Φ_d with `d | n`, `d < n`.
pub fn cyclotomic_polynomial(n: usize) -> Poly {
    assert!(n >= 1);
    let mut p = Poly::x_pow_minus_one(n);
    for d in (1..n).filter(|d| n % d == 0) {
        let (q, r) = p
            .div_rem(&cyclotomic_polynomial(d))
            .expect("cyclotomic divisor is nonzero");
        debug_assert!(r.is_zero());
        p = q;
    }
    p
}
