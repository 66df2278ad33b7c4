//! Elements of ℚ(ζ) with ζ a primitive 24th root of unity, stored in the
//! power basis `1, ζ, …, ζ⁷` modulo `Φ₂₄(x) = x⁸ − x⁴ + 1`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use super::poly::{cyclotomic_polynomial, Poly};
use super::Rational;
use crate::error::{AlgebraError, Result};

const DEG: usize = 8;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CycloNum {
    c: [Rational; DEG],
}

fn modulus() -> Poly {
    Poly::from_ints(&[1, 0, 0, 0, -1, 0, 0, 0, 1])
}

/// Checks that the hard-wired reduction rule agrees with Φ₂₄ derived from
/// `x²⁴ − 1` by cyclotomic division.
pub fn verify_modulus() -> bool {
    cyclotomic_polynomial(24) == modulus()
}

/// Folds a coefficient vector of any length into the power basis using
/// `x⁸ = x⁴ − 1`.
fn reduce(mut v: Vec<Rational>) -> [Rational; DEG] {
    for k in (DEG..v.len()).rev() {
        if v[k].is_zero() {
            continue;
        }
        let top = std::mem::take(&mut v[k]);
        v[k - 4] = &v[k - 4] + &top;
        v[k - 8] = &v[k - 8] - &top;
    }
    v.resize(DEG, Rational::zero());
    std::array::from_fn(|i| std::mem::take(&mut v[i]))
}

impl CycloNum {
    pub fn zero() -> Self {
        CycloNum { c: Default::default() }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_int(n))
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(num, den))
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut c: [Rational; DEG] = Default::default();
        c[0] = r;
        CycloNum { c }
    }

    pub fn from_coeffs(c: [Rational; DEG]) -> Self {
        CycloNum { c }
    }

    pub fn coeffs(&self) -> &[Rational; DEG] {
        &self.c
    }

    /// `ζᵏ` for any integer `k`.
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(24) as usize;
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = Rational::one();
        CycloNum { c: reduce(v) }
    }

    pub fn i() -> Self {
        Self::zeta_pow(6)
    }

    pub fn omega() -> Self {
        Self::zeta_pow(8)
    }

    pub fn sqrt2() -> Self {
        &Self::zeta_pow(3) + &Self::zeta_pow(-3)
    }

    pub fn sqrt3() -> Self {
        &Self::zeta_pow(2) + &Self::zeta_pow(-2)
    }

    pub fn half() -> Self {
        Self::from_frac(1, 2)
    }

    /// Looks up one of `i`, `omega`, `sqrt2`, `sqrt3`, `half`.
    pub fn named(name: &str) -> Result<Self> {
        match name {
            "i" => Ok(Self::i()),
            "omega" => Ok(Self::omega()),
            "sqrt2" => Ok(Self::sqrt2()),
            "sqrt3" => Ok(Self::sqrt3()),
            "half" => Ok(Self::half()),
            _ => Err(AlgebraError::UnknownConstant(name.to_string())),
        }
    }

    fn twelfths(r: &Rational) -> Result<i64> {
        (r * &Rational::from_int(12))
            .to_i64()
            .ok_or_else(|| AlgebraError::AngleOutsideField(r.to_string()))
    }

    /// `cos(r·π)`; defined when `12r` is an integer.
    pub fn cos_pi(r: &Rational) -> Result<Self> {
        let k = Self::twelfths(r)?;
        Ok(&(&Self::zeta_pow(k) + &Self::zeta_pow(-k)) * &Self::half())
    }

    /// `sin(r·π)`; defined when `12r` is an integer.
    pub fn sin_pi(r: &Rational) -> Result<Self> {
        let k = Self::twelfths(r)?;
        let d = &Self::zeta_pow(k) - &Self::zeta_pow(-k);
        Ok(&(&d * &Self::i()) * &Self::from_frac(-1, 2))
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(Rational::is_zero)
    }

    /// True when the value lies in ℚ.
    pub fn is_rational(&self) -> bool {
        self.c[1..].iter().all(Rational::is_zero)
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.c[0])
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_one() {
            return self.clone();
        }
        CycloNum { c: std::array::from_fn(|i| &self.c[i] * s) }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(r.recip()?));
        }
        let (g, s) = Poly::new(self.c.to_vec()).gcd_cofactor(&modulus())?;
        debug_assert_eq!(g, Poly::one());
        Ok(CycloNum { c: reduce(s.coeffs().to_vec()) })
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    /// Coefficients as `"num/den"` strings, constant term first.
    pub fn to_fraction_strings(&self) -> Vec<String> {
        self.c.iter().map(Rational::to_fraction_string).collect()
    }

    pub fn from_fraction_strings<S: AsRef<str>>(parts: &[S]) -> Result<Self> {
        if parts.len() != DEG {
            return Err(AlgebraError::DimensionMismatch {
                expected: DEG.to_string(),
                found: parts.len().to_string(),
            });
        }
        let mut c: [Rational; DEG] = Default::default();
        for (slot, p) in c.iter_mut().zip(parts) {
            *slot = p.as_ref().parse()?;
        }
        Ok(CycloNum { c })
    }
}

impl Default for CycloNum {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for CycloNum {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for CycloNum {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = (c.is_negative(), c.abs());
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => write!(f, "z^{k}")?,
                _ => write!(f, "{mag}*z^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: &'a CycloNum) -> CycloNum {
        CycloNum { c: std::array::from_fn(|i| &self.c[i] + &rhs.c[i]) }
    }
}

impl<'a> Sub<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: &'a CycloNum) -> CycloNum {
        CycloNum { c: std::array::from_fn(|i| &self.c[i] - &rhs.c[i]) }
    }
}

impl<'a> Mul<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: &'a CycloNum) -> CycloNum {
        if self.is_rational() {
            return rhs.scale(&self.c[0]);
        }
        if rhs.is_rational() {
            return self.scale(&rhs.c[0]);
        }
        let mut acc = vec![Rational::zero(); 2 * DEG - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if !b.is_zero() {
                    acc[i + j] = &acc[i + j] + &(a * b);
                }
            }
        }
        CycloNum { c: reduce(acc) }
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum { c: std::array::from_fn(|i| -&self.c[i]) }
    }
}

macro_rules! by_value {
    ($trait:ident, $method:ident) => {
        impl $trait for CycloNum {
            type Output = CycloNum;
            fn $method(self, rhs: CycloNum) -> CycloNum {
                (&self).$method(&rhs)
            }
        }
    };
}

by_value!(Add, add);
by_value!(Sub, sub);
by_value!(Mul, mul);

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        -&self
    }
}

impl AddAssign<&CycloNum> for CycloNum {
    fn add_assign(&mut self, rhs: &CycloNum) {
        for (a, b) in self.c.iter_mut().zip(&rhs.c) {
            if !b.is_zero() {
                *a = &*a + b;
            }
        }
    }
}

impl SubAssign<&CycloNum> for CycloNum {
    fn sub_assign(&mut self, rhs: &CycloNum) {
        for (a, b) in self.c.iter_mut().zip(&rhs.c) {
            if !b.is_zero() {
                *a = &*a - b;
            }
        }
    }
}

impl std::iter::Sum for CycloNum {
    fn sum<I: Iterator<Item = CycloNum>>(iter: I) -> CycloNum {
        iter.fold(CycloNum::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(k: i64) -> CycloNum {
        CycloNum::zeta_pow(k)
    }

    #[test]
    fn modulus_matches_derived_cyclotomic() {
        assert!(verify_modulus());
    }

    #[test]
    fn zeta_powers() {
        assert_eq!(&z(6) * &z(6), CycloNum::from_int(-1));
        assert_eq!(&z(4) * &z(4), &z(4) - &CycloNum::one());
        assert_eq!(z(24), CycloNum::one());
        assert_eq!(z(12), CycloNum::from_int(-1));
    }

    #[test]
    fn inverses() {
        assert_eq!(CycloNum::from_int(2).inv().unwrap(), CycloNum::half());
        let zi = z(1).inv().unwrap();
        assert_eq!(zi, -&z(11));
        assert!(CycloNum::zero().inv().is_err());
    }

    #[test]
    fn named_constants_satisfy_their_polynomials() {
        let one = CycloNum::one();
        let i = CycloNum::named("i").unwrap();
        assert_eq!(&i * &i, -&one);
        let w = CycloNum::named("omega").unwrap();
        assert!((&(&(&w * &w) + &w) + &one).is_zero());
        let r2 = CycloNum::named("sqrt2").unwrap();
        assert_eq!(&r2 * &r2, CycloNum::from_int(2));
        let r3 = CycloNum::named("sqrt3").unwrap();
        assert_eq!(&r3 * &r3, CycloNum::from_int(3));
        assert_eq!(CycloNum::named("half").unwrap() * CycloNum::from_int(2), one);
        assert!(CycloNum::named("pi").is_err());
    }

    #[test]
    fn trig_values() {
        let third = Rational::new(1, 3);
        assert_eq!(CycloNum::cos_pi(&third).unwrap(), CycloNum::half());
        let s = CycloNum::sin_pi(&third).unwrap();
        assert_eq!(s, &CycloNum::sqrt3() * &CycloNum::half());
        let quarter = Rational::new(1, 4);
        let c = CycloNum::cos_pi(&quarter).unwrap();
        assert_eq!(&c * &c, CycloNum::half());
        assert_eq!(CycloNum::sin_pi(&Rational::new(1, 2)).unwrap(), CycloNum::one());
        assert!(CycloNum::cos_pi(&Rational::new(1, 5)).is_err());
    }

    #[test]
    fn display_and_strings() {
        assert_eq!(CycloNum::zero().to_string(), "0");
        assert_eq!((&z(2) - &CycloNum::half()).to_string(), "-1/2 + z^2");
        let s = CycloNum::omega().to_fraction_strings();
        assert_eq!(CycloNum::from_fraction_strings(&s).unwrap(), CycloNum::omega());
    }

    fn arb_cyclo() -> impl Strategy<Value = CycloNum> {
        proptest::collection::vec((-9i64..=9, 1i64..=9), DEG).prop_map(|v| {
            CycloNum::from_coeffs(std::array::from_fn(|i| Rational::new(v[i].0, v[i].1)))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn field_axioms(a in arb_cyclo(), b in arb_cyclo(), c in arb_cyclo()) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&CycloNum::one() * &a, a.clone());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }
    }
}
