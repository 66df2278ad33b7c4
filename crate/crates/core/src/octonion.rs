//! Split octonions in the Zorn vector-matrix model.
//!
//! An element is a 2×2 array `(a, v; w*, b)` with scalars `a, b`, a vector
//! `v ∈ V = F³` and a covector `w* ∈ V*`. The wedge identifications use
//! `e₁∧e₂∧e₃ ↦ 1` on `Λ³V` and `e₁*∧e₂*∧e₃* ↦ −1` on `Λ³V*`; with the
//! latter sign the product below is a composition algebra.

use std::ops::{Add, Mul, Neg, Sub};

use serde_json::{json, Value};

use crate::error::{AlgebraError, Result};
use crate::field::CycloNum;
use crate::sample::Sampler;

pub type Vec3 = [CycloNum; 3];

fn dot(u: &Vec3, v: &Vec3) -> CycloNum {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

fn cross(u: &Vec3, v: &Vec3) -> Vec3 {
    [
        &(&u[1] * &v[2]) - &(&u[2] * &v[1]),
        &(&u[2] * &v[0]) - &(&u[0] * &v[2]),
        &(&u[0] * &v[1]) - &(&u[1] * &v[0]),
    ]
}

fn lin(s: &CycloNum, u: &Vec3, t: &CycloNum, v: &Vec3) -> Vec3 {
    std::array::from_fn(|i| &(s * &u[i]) + &(t * &v[i]))
}

fn add3(u: &Vec3, v: &Vec3) -> Vec3 {
    std::array::from_fn(|i| &u[i] + &v[i])
}

fn sub3(u: &Vec3, v: &Vec3) -> Vec3 {
    std::array::from_fn(|i| &u[i] - &v[i])
}

fn zero3() -> Vec3 {
    Default::default()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Octonion {
    pub a: CycloNum,
    pub v: Vec3,
    pub wstar: Vec3,
    pub b: CycloNum,
}

impl Octonion {
    pub fn new(a: CycloNum, v: Vec3, wstar: Vec3, b: CycloNum) -> Self {
        Octonion { a, v, wstar, b }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(CycloNum::one())
    }

    pub fn scalar(s: CycloNum) -> Self {
        Octonion { a: s.clone(), v: zero3(), wstar: zero3(), b: s }
    }

    /// `diag(1, −1)`, the trace-zero diagonal direction.
    pub fn d() -> Self {
        Octonion { a: CycloNum::one(), v: zero3(), wstar: zero3(), b: CycloNum::from_int(-1) }
    }

    pub fn vector(v: Vec3) -> Self {
        Octonion { v, ..Self::zero() }
    }

    pub fn covector(wstar: Vec3) -> Self {
        Octonion { wstar, ..Self::zero() }
    }

    /// Raw coordinates `(a, v₁, v₂, v₃, w₁, w₂, w₃, b)`.
    pub fn coords(&self) -> [CycloNum; 8] {
        [
            self.a.clone(),
            self.v[0].clone(),
            self.v[1].clone(),
            self.v[2].clone(),
            self.wstar[0].clone(),
            self.wstar[1].clone(),
            self.wstar[2].clone(),
            self.b.clone(),
        ]
    }

    pub fn from_coords(c: &[CycloNum]) -> Self {
        assert_eq!(c.len(), 8, "octonion has eight coordinates");
        Octonion {
            a: c[0].clone(),
            v: [c[1].clone(), c[2].clone(), c[3].clone()],
            wstar: [c[4].clone(), c[5].clone(), c[6].clone()],
            b: c[7].clone(),
        }
    }

    /// The algebra basis `1, d, v₁, v₂, v₃, w₁*, w₂*, w₃*`.
    pub fn basis(k: usize) -> Self {
        let unit = |i: usize| {
            let mut t = zero3();
            t[i] = CycloNum::one();
            t
        };
        match k {
            0 => Self::one(),
            1 => Self::d(),
            2..=4 => Self::vector(unit(k - 2)),
            5..=7 => Self::covector(unit(k - 5)),
            _ => panic!("octonion basis index {k} out of range"),
        }
    }

    /// Coordinates in the basis of [`Octonion::basis`].
    pub fn basis_coords(&self) -> [CycloNum; 8] {
        let h = CycloNum::half();
        [
            &(&self.a + &self.b) * &h,
            &(&self.a - &self.b) * &h,
            self.v[0].clone(),
            self.v[1].clone(),
            self.v[2].clone(),
            self.wstar[0].clone(),
            self.wstar[1].clone(),
            self.wstar[2].clone(),
        ]
    }

    pub fn from_basis_coords(c: &[CycloNum]) -> Self {
        assert_eq!(c.len(), 8, "octonion has eight coordinates");
        Octonion {
            a: &c[0] + &c[1],
            v: [c[2].clone(), c[3].clone(), c[4].clone()],
            wstar: [c[5].clone(), c[6].clone(), c[7].clone()],
            b: &c[0] - &c[1],
        }
    }

    pub fn random(s: &mut Sampler) -> Self {
        Self::from_coords(&s.scalars(8))
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(CycloNum::is_zero)
    }

    pub fn scale(&self, s: &CycloNum) -> Self {
        Octonion {
            a: &self.a * s,
            v: self.v.each_ref().map(|x| x * s),
            wstar: self.wstar.each_ref().map(|x| x * s),
            b: &self.b * s,
        }
    }

    pub fn mul(&self, y: &Octonion) -> Octonion {
        let (a, v, w, b) = (&self.a, &self.v, &self.wstar, &self.b);
        let (c, x, ys, d) = (&y.a, &y.v, &y.wstar, &y.b);
        Octonion {
            a: &(a * c) + &dot(ys, v),
            v: sub3(&lin(a, x, d, v), &cross(w, ys)),
            wstar: add3(&lin(c, w, b, ys), &cross(v, x)),
            b: &(b * d) + &dot(w, x),
        }
    }

    /// The product with both wedge terms entering with a plus sign, i.e.
    /// `e₁*∧e₂*∧e₃* ↦ +1`. This is not a composition algebra; it is kept so
    /// that the failure can be demonstrated.
    pub fn mul_plus_plus(&self, y: &Octonion) -> Octonion {
        let mut p = self.mul(y);
        let wy = cross(&self.wstar, &y.wstar);
        p.v = add3(&add3(&p.v, &wy), &wy);
        p
    }

    pub fn conj(&self) -> Octonion {
        Octonion {
            a: self.b.clone(),
            v: self.v.each_ref().map(|x| -x),
            wstar: self.wstar.each_ref().map(|x| -x),
            b: self.a.clone(),
        }
    }

    pub fn norm(&self) -> CycloNum {
        &(&self.a * &self.b) - &dot(&self.wstar, &self.v)
    }

    pub fn trace(&self) -> CycloNum {
        &self.a + &self.b
    }

    /// Polar form `N(x + y) − N(x) − N(y)`.
    pub fn b_n(&self, y: &Octonion) -> CycloNum {
        &(&(self + y).norm() - &self.norm()) - &y.norm()
    }

    /// Para-octonion product `x̄ · ȳ`.
    pub fn para_mul(&self, y: &Octonion) -> Octonion {
        self.conj().mul(&y.conj())
    }

    pub fn to_json(&self) -> Value {
        let f = |x: &CycloNum| x.to_fraction_strings();
        json!({
            "a": f(&self.a),
            "v": self.v.iter().map(f).collect::<Vec<_>>(),
            "wstar": self.wstar.iter().map(f).collect::<Vec<_>>(),
            "b": f(&self.b),
        })
    }

    pub fn from_json(j: &Value) -> Result<Self> {
        let bad = |k: &str| AlgebraError::Parse(format!("octonion JSON: {k}"));
        let scalar = |v: &Value, k: &str| -> Result<CycloNum> {
            let parts: Vec<&str> = v
                .as_array()
                .ok_or_else(|| bad(k))?
                .iter()
                .map(|s| s.as_str().ok_or_else(|| bad(k)))
                .collect::<Result<_>>()?;
            CycloNum::from_fraction_strings(&parts)
        };
        let triple = |k: &str| -> Result<Vec3> {
            let arr = j.get(k).and_then(Value::as_array).ok_or_else(|| bad(k))?;
            if arr.len() != 3 {
                return Err(bad(k));
            }
            Ok([scalar(&arr[0], k)?, scalar(&arr[1], k)?, scalar(&arr[2], k)?])
        };
        Ok(Octonion {
            a: scalar(j.get("a").ok_or_else(|| bad("a"))?, "a")?,
            v: triple("v")?,
            wstar: triple("wstar")?,
            b: scalar(j.get("b").ok_or_else(|| bad("b"))?, "b")?,
        })
    }
}

/// `tr((x·y)·z)`
pub fn trilinear_t(x: &Octonion, y: &Octonion, z: &Octonion) -> CycloNum {
    x.mul(y).mul(z).trace()
}

/// Octonion triality maps `t₁(y,z) = conj(yz)`, `t₂(x,y) = x̄y`, `t₃(x,y) = 2x̄y`.
pub fn octonion_t1(y: &Octonion, z: &Octonion) -> Octonion {
    y.mul(z).conj()
}

pub fn octonion_t2(x: &Octonion, y: &Octonion) -> Octonion {
    x.conj().mul(y)
}

pub fn octonion_t3(x: &Octonion, y: &Octonion) -> Octonion {
    x.conj().mul(y).scale(&CycloNum::from_int(2))
}

/// Quadratic forms attached to the three slots of the octonion triality,
/// evaluated on the diagonal: `q₁(y) = b_N(ȳ, ȳ)`, `q₂ = b_N(y, y)`,
/// `q₃ = ½ b_N(y, y)`.
pub fn octonion_q(slot: usize, y: &Octonion) -> CycloNum {
    match slot {
        1 => y.conj().b_n(&y.conj()),
        2 => y.b_n(y),
        3 => &y.b_n(y) * &CycloNum::half(),
        _ => panic!("triality slot {slot} out of range"),
    }
}

impl Add for &Octonion {
    type Output = Octonion;
    fn add(self, y: &Octonion) -> Octonion {
        Octonion {
            a: &self.a + &y.a,
            v: add3(&self.v, &y.v),
            wstar: add3(&self.wstar, &y.wstar),
            b: &self.b + &y.b,
        }
    }
}

impl Sub for &Octonion {
    type Output = Octonion;
    fn sub(self, y: &Octonion) -> Octonion {
        Octonion {
            a: &self.a - &y.a,
            v: sub3(&self.v, &y.v),
            wstar: sub3(&self.wstar, &y.wstar),
            b: &self.b - &y.b,
        }
    }
}

impl Neg for &Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        self.scale(&CycloNum::from_int(-1))
    }
}

impl Mul for &Octonion {
    type Output = Octonion;
    fn mul(self, y: &Octonion) -> Octonion {
        Octonion::mul(self, y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn e(i: usize) -> Vec3 {
        let mut t = zero3();
        t[i] = CycloNum::one();
        t
    }

    #[test]
    fn vector_times_vector_is_a_covector() {
        let p = Octonion::vector(e(0)).mul(&Octonion::vector(e(1)));
        assert_eq!(p, Octonion::covector(e(2)));
        let q = Octonion::vector(e(1)).mul(&Octonion::vector(e(0)));
        assert_eq!(q, -&Octonion::covector(e(2)));
    }

    #[test]
    fn scalar_facts() {
        let diag = Octonion::new(CycloNum::from_int(3), zero3(), zero3(), CycloNum::from_int(5));
        assert_eq!(diag.norm(), CycloNum::from_int(15));
        assert_eq!(Octonion::one().trace(), CycloNum::from_int(2));
        assert_eq!(trilinear_t(&Octonion::one(), &Octonion::one(), &Octonion::one()), CycloNum::from_int(2));
        assert_eq!(Octonion::one().para_mul(&Octonion::one()), Octonion::one());
    }

    #[test]
    fn plus_plus_product_is_not_multiplicative() {
        let mut s = Sampler::new(3);
        let failures = (0..20)
            .filter(|_| {
                let (x, y) = (Octonion::random(&mut s), Octonion::random(&mut s));
                x.mul_plus_plus(&y).norm() != &x.norm() * &y.norm()
            })
            .count();
        assert!(failures > 0);
    }

    #[test]
    fn basis_round_trip_and_json() {
        for k in 0..8 {
            let b = Octonion::basis(k);
            let c = b.basis_coords();
            assert_eq!(Octonion::from_basis_coords(&c), b);
        }
        let mut s = Sampler::new(9);
        let x = Octonion::random(&mut s);
        assert_eq!(Octonion::from_json(&x.to_json()).unwrap(), x);
        assert!(Octonion::from_json(&json!({"a": 1})).is_err());
    }

    fn arb_oct() -> impl Strategy<Value = Octonion> {
        proptest::collection::vec((-9i64..=9, 1i64..=4), 8).prop_map(|v| {
            let c: Vec<CycloNum> = v.iter().map(|&(n, d)| CycloNum::from_frac(n, d)).collect();
            Octonion::from_coords(&c)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn composition_and_conjugation(x in arb_oct(), y in arb_oct()) {
            prop_assert_eq!(x.mul(&y).norm(), &x.norm() * &y.norm());
            prop_assert_eq!(x.mul(&x.conj()), Octonion::scalar(x.norm()));
            prop_assert_eq!(x.conj().mul(&x), Octonion::scalar(x.norm()));
            prop_assert_eq!(x.mul(&y).conj(), y.conj().mul(&x.conj()));
            prop_assert_eq!(x.conj().conj(), x.clone());
            prop_assert_eq!(Octonion::one().mul(&x), x.clone());
            prop_assert_eq!(x.b_n(&y), y.b_n(&x));
        }

        #[test]
        fn trilinear_form(x in arb_oct(), y in arb_oct(), z in arb_oct()) {
            let t = trilinear_t(&x, &y, &z);
            prop_assert_eq!(&t, &x.mul(&y.mul(&z)).trace());
            prop_assert_eq!(&t, &trilinear_t(&y, &z, &x));
            prop_assert_eq!(&t, &trilinear_t(&z, &x, &y));
        }

        #[test]
        fn para_octonion_laws(x in arb_oct(), y in arb_oct(), z in arb_oct()) {
            let ny = y.scale(&x.norm());
            prop_assert_eq!(x.para_mul(&y).para_mul(&x), ny.clone());
            prop_assert_eq!(x.para_mul(&y.para_mul(&x)), ny);
            prop_assert_eq!(x.para_mul(&y).norm(), &x.norm() * &y.norm());
            prop_assert_eq!(x.para_mul(&y).b_n(&z), x.b_n(&y.para_mul(&z)));
        }

        #[test]
        fn octonion_triality_maps_are_orthogonal(x in arb_oct(), y in arb_oct()) {
            prop_assert_eq!(octonion_q(1, &octonion_t1(&x, &y)), &octonion_q(2, &x) * &octonion_q(3, &y));
            prop_assert_eq!(octonion_q(2, &octonion_t2(&x, &y)), &octonion_q(1, &x) * &octonion_q(3, &y));
            prop_assert_eq!(octonion_q(3, &octonion_t3(&x, &y)), &octonion_q(1, &x) * &octonion_q(2, &y));
        }
    }
}
