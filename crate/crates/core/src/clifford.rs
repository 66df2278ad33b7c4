//! Clifford algebras `C(V, q)` of a diagonal quadratic form, `dim V ≤ 8`.
//!
//! Blades are bitmasks: bit `i` set means `e_{i+1}` occurs. The product of
//! two blades is the symmetric difference of their masks, with a sign from
//! the inversions needed to sort the concatenated index list and a factor
//! `αᵢ = q(eᵢ)` for each index the blades share.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::error::{AlgebraError, Result};
use crate::field::{CycloNum, ExactMatrix, Rational};
use crate::sample::Sampler;

pub const MAX_DIM: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticSpace {
    alphas: Vec<CycloNum>,
}

impl QuadraticSpace {
    pub fn new(alphas: Vec<CycloNum>) -> Result<Arc<Self>> {
        if alphas.len() > MAX_DIM {
            return Err(AlgebraError::DimensionMismatch {
                expected: format!("at most {MAX_DIM}"),
                found: alphas.len().to_string(),
            });
        }
        if alphas.iter().any(CycloNum::is_zero) {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Arc::new(QuadraticSpace { alphas }))
    }

    /// `q(x) = −(x₁² + ⋯ + xₙ²)`
    pub fn standard(dim: usize) -> Arc<Self> {
        Self::new(vec![CycloNum::from_int(-1); dim]).expect("dimension within range")
    }

    pub fn dim(&self) -> usize {
        self.alphas.len()
    }

    pub fn alpha(&self, i: usize) -> &CycloNum {
        &self.alphas[i]
    }

    /// Gram matrix of the bilinear form `q(x, y)` with `q(x, x) = q(x)`.
    pub fn gram(&self) -> ExactMatrix {
        ExactMatrix::diagonal(&self.alphas)
    }

    pub fn full_mask(&self) -> u32 {
        (1u32 << self.dim()) - 1
    }

    fn is_standard(&self) -> bool {
        self.alphas.iter().all(|a| *a == CycloNum::from_int(-1))
    }
}

pub fn grade(mask: u32) -> u32 {
    mask.count_ones()
}

/// Sign of `e_A e_B` relative to `e_{A△B}`, ignoring the metric factors.
fn reorder_sign(a: u32, b: u32) -> bool {
    let mut swaps = 0;
    let mut rest = b;
    while rest != 0 {
        let i = rest.trailing_zeros();
        swaps += (a >> (i + 1)).count_ones();
        rest &= rest - 1;
    }
    swaps % 2 == 1
}

/// `e_A · e_B = coeff · e_{A△B}`.
pub fn blade_product(space: &QuadraticSpace, a: u32, b: u32) -> (CycloNum, u32) {
    let mut c = if reorder_sign(a, b) { CycloNum::from_int(-1) } else { CycloNum::one() };
    let mut shared = a & b;
    while shared != 0 {
        let i = shared.trailing_zeros() as usize;
        c = &c * space.alpha(i);
        shared &= shared - 1;
    }
    (c, a ^ b)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordElement {
    space: Arc<QuadraticSpace>,
    terms: BTreeMap<u32, CycloNum>,
}

impl CliffordElement {
    pub fn zero(space: &Arc<QuadraticSpace>) -> Self {
        CliffordElement { space: space.clone(), terms: BTreeMap::new() }
    }

    pub fn scalar(space: &Arc<QuadraticSpace>, c: CycloNum) -> Self {
        Self::blade(space, 0, c)
    }

    pub fn one(space: &Arc<QuadraticSpace>) -> Self {
        Self::scalar(space, CycloNum::one())
    }

    pub fn blade(space: &Arc<QuadraticSpace>, mask: u32, c: CycloNum) -> Self {
        assert!(mask <= space.full_mask(), "blade {mask:#b} outside the algebra");
        let mut e = Self::zero(space);
        e.add_term(mask, c);
        e
    }

    /// The basis vector `e_{i+1}`.
    pub fn basis_vector(space: &Arc<QuadraticSpace>, i: usize) -> Self {
        Self::blade(space, 1 << i, CycloNum::one())
    }

    /// `e_{i+1} e_{j+1}` for `i < j`.
    pub fn bivector(space: &Arc<QuadraticSpace>, i: usize, j: usize) -> Self {
        Self::blade(space, (1 << i) | (1 << j), CycloNum::one())
    }

    pub fn vector(space: &Arc<QuadraticSpace>, coords: &[CycloNum]) -> Self {
        assert_eq!(coords.len(), space.dim(), "vector length must match the space");
        let mut e = Self::zero(space);
        for (i, c) in coords.iter().enumerate() {
            e.add_term(1 << i, c.clone());
        }
        e
    }

    /// `η = e₁e₂⋯eₙ`
    pub fn pseudoscalar(space: &Arc<QuadraticSpace>) -> Self {
        Self::blade(space, space.full_mask(), CycloNum::one())
    }

    pub fn space(&self) -> &Arc<QuadraticSpace> {
        &self.space
    }

    pub fn terms(&self) -> &BTreeMap<u32, CycloNum> {
        &self.terms
    }

    pub fn coeff(&self, mask: u32) -> CycloNum {
        self.terms.get(&mask).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, mask: u32, c: CycloNum) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mask) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn map_terms(&self, f: impl Fn(u32, &CycloNum) -> CycloNum) -> Self {
        let mut out = Self::zero(&self.space);
        for (&m, c) in &self.terms {
            out.add_term(m, f(m, c));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(CycloNum::is_one)
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|&m| grade(m) % 2 == 0)
    }

    pub fn is_odd(&self) -> bool {
        self.terms.keys().all(|&m| grade(m) % 2 == 1)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_even() || self.is_odd()
    }

    /// True when every term has grade one.
    pub fn is_vector(&self) -> bool {
        self.terms.keys().all(|&m| grade(m) == 1)
    }

    pub fn grade_part(&self, k: u32) -> Self {
        let mut out = Self::zero(&self.space);
        for (&m, c) in &self.terms {
            if grade(m) == k {
                out.add_term(m, c.clone());
            }
        }
        out
    }

    /// Coordinates of the grade-one part in `e₁, …, eₙ`.
    pub fn vector_coords(&self) -> Vec<CycloNum> {
        (0..self.space.dim()).map(|i| self.coeff(1 << i)).collect()
    }

    pub fn scale(&self, s: &CycloNum) -> Self {
        self.map_terms(|_, c| c * s)
    }

    pub fn try_mul(&self, y: &CliffordElement) -> Result<Self> {
        if self.space != y.space {
            return Err(AlgebraError::SpaceMismatch);
        }
        let mut out = Self::zero(&self.space);
        for (&a, ca) in &self.terms {
            for (&b, cb) in &y.terms {
                let (s, m) = blade_product(&self.space, a, b);
                out.add_term(m, &(&s * ca) * cb);
            }
        }
        Ok(out)
    }

    /// `ι`: negates odd blades.
    pub fn grade_involution(&self) -> Self {
        self.map_terms(|m, c| if grade(m) % 2 == 1 { -c } else { c.clone() })
    }

    /// Reversal of every blade.
    pub fn transpose(&self) -> Self {
        self.map_terms(|m, c| {
            let k = grade(m);
            if (k * k.saturating_sub(1) / 2) % 2 == 1 {
                -c
            } else {
                c.clone()
            }
        })
    }

    /// `x̄ = ι(x)ᵗ`
    pub fn bar(&self) -> Self {
        self.grade_involution().transpose()
    }

    pub fn commutator(&self, y: &CliffordElement) -> Self {
        &(self * y) - &(y * self)
    }

    /// `v ↦ ι(x)·v·x̄`, applied to a vector.
    fn twisted_conjugate(&self, v: &CliffordElement) -> CliffordElement {
        &(&self.grade_involution() * v) * &self.bar()
    }

    pub fn is_pin(&self) -> bool {
        if self.is_zero() || !self.is_homogeneous() {
            return false;
        }
        if !(self * &self.bar()).is_one() {
            return false;
        }
        (0..self.space.dim()).all(|i| {
            self.twisted_conjugate(&Self::basis_vector(&self.space, i)).is_vector()
        })
    }

    pub fn is_spin(&self) -> bool {
        self.is_even() && self.is_pin()
    }

    /// Matrix of `v ↦ ι(x) v x̄` in the basis `e₁, …, eₙ`.
    pub fn vector_rep(&self) -> Result<ExactMatrix> {
        if !self.is_pin() {
            return Err(AlgebraError::NotPin);
        }
        Ok(self.vector_rep_unchecked())
    }

    /// As [`vector_rep`](Self::vector_rep) without the membership check, for
    /// elements already known to normalize `V`.
    pub fn vector_rep_unchecked(&self) -> ExactMatrix {
        let n = self.space.dim();
        let cols: Vec<Vec<CycloNum>> = (0..n)
            .map(|j| self.twisted_conjugate(&Self::basis_vector(&self.space, j)).vector_coords())
            .collect();
        ExactMatrix::from_columns(&cols).expect("columns have equal length")
    }

    pub fn to_json(&self) -> Value {
        let width = self.space.dim().max(1);
        let terms: Map<String, Value> = self
            .terms
            .iter()
            .map(|(m, c)| (format!("0b{m:0width$b}"), json!(c.to_fraction_strings())))
            .collect();
        let mut out = json!({ "space": self.space.dim(), "terms": terms });
        if !self.space.is_standard() {
            out["alphas"] = json!(self.space.alphas.iter().map(CycloNum::to_fraction_strings).collect::<Vec<_>>());
        }
        out
    }

    pub fn from_json(j: &Value) -> Result<Self> {
        let bad = |w: &str| AlgebraError::Parse(format!("multivector JSON: {w}"));
        let coeff = |v: &Value| -> Result<CycloNum> {
            let parts: Vec<&str> = v
                .as_array()
                .ok_or_else(|| bad("coefficient"))?
                .iter()
                .map(|s| s.as_str().ok_or_else(|| bad("coefficient")))
                .collect::<Result<_>>()?;
            CycloNum::from_fraction_strings(&parts)
        };
        let dim = j.get("space").and_then(Value::as_u64).ok_or_else(|| bad("space"))? as usize;
        let space = match j.get("alphas") {
            None => {
                if dim > MAX_DIM {
                    return Err(bad("space"));
                }
                QuadraticSpace::standard(dim)
            }
            Some(a) => {
                let alphas = a
                    .as_array()
                    .ok_or_else(|| bad("alphas"))?
                    .iter()
                    .map(coeff)
                    .collect::<Result<Vec<_>>>()?;
                if alphas.len() != dim {
                    return Err(bad("alphas"));
                }
                QuadraticSpace::new(alphas)?
            }
        };
        let mut out = Self::zero(&space);
        for (k, v) in j.get("terms").and_then(Value::as_object).ok_or_else(|| bad("terms"))? {
            let digits = k.strip_prefix("0b").ok_or_else(|| bad("mask"))?;
            let m = u32::from_str_radix(digits, 2).map_err(|_| bad("mask"))?;
            if m > space.full_mask() {
                return Err(bad("mask"));
            }
            out.add_term(m, coeff(v)?);
        }
        Ok(out)
    }
}

/// `∏ₖ (cos θₖ + sin θₖ·Bₖ)` for pairwise commuting unit 2-blades `Bₖ`, each
/// angle `θₖ = rₖ·π` given by its rational multiple of `π`.
pub fn bivector_exp(space: &Arc<QuadraticSpace>, terms: &[(Rational, u32)]) -> Result<CliffordElement> {
    for (idx, (_, b)) in terms.iter().enumerate() {
        if grade(*b) != 2 || *b > space.full_mask() {
            return Err(AlgebraError::BladeSquare(*b));
        }
        let (sq, _) = blade_product(space, *b, *b);
        if sq != CycloNum::from_int(-1) {
            return Err(AlgebraError::BladeSquare(*b));
        }
        for (_, c) in &terms[..idx] {
            if blade_product(space, *b, *c) != blade_product(space, *c, *b) {
                return Err(AlgebraError::NonCommutingBlades(*c, *b));
            }
        }
    }
    let mut acc = CliffordElement::one(space);
    for (r, b) in terms {
        let mut f = CliffordElement::scalar(space, CycloNum::cos_pi(r)?);
        f.add_term(*b, CycloNum::sin_pi(r)?);
        acc = &acc * &f;
    }
    Ok(acc)
}

/// A random vector with `v·v̄ = 1` in the standard space, i.e. a rational
/// point on the unit sphere obtained by inverse stereographic projection.
pub fn random_unit_vector(space: &Arc<QuadraticSpace>, s: &mut Sampler) -> CliffordElement {
    assert!(space.is_standard(), "unit sampling assumes the standard form");
    let n = space.dim();
    let t: Vec<CycloNum> = (0..n - 1).map(|_| CycloNum::from_int(s.int(-2, 2))).collect();
    let t2: CycloNum = t.iter().map(|x| x * x).sum();
    let inv = (&t2 + &CycloNum::one()).inv().expect("sum of squares plus one is positive");
    let two = CycloNum::from_int(2);
    let mut coords: Vec<CycloNum> = t.iter().map(|x| &(&two * x) * &inv).collect();
    coords.push(&(&t2 - &CycloNum::one()) * &inv);
    CliffordElement::vector(space, &coords)
}

/// Facts about `η = e₁⋯eₙ` computed by expansion.
#[derive(Clone, Debug)]
pub struct CenterChecks {
    pub eta: CliffordElement,
    pub commutes_with_even_blades: bool,
    pub anticommutes_with_vectors: bool,
    pub eta_squared: CycloNum,
}

pub fn center_elements(space: &Arc<QuadraticSpace>) -> CenterChecks {
    let eta = CliffordElement::pseudoscalar(space);
    let full = space.full_mask();
    let commutes_with_even_blades = (0..=full).filter(|m| grade(*m) % 2 == 0).all(|m| {
        let b = CliffordElement::blade(space, m, CycloNum::one());
        &eta * &b == &b * &eta
    });
    let anticommutes_with_vectors = (0..space.dim()).all(|i| {
        let v = CliffordElement::basis_vector(space, i);
        (&(&eta * &v) + &(&v * &eta)).is_zero()
    });
    let sq = &eta * &eta;
    CenterChecks {
        eta_squared: sq.coeff(0),
        eta,
        commutes_with_even_blades,
        anticommutes_with_vectors,
    }
}

impl Mul for &CliffordElement {
    type Output = CliffordElement;
    fn mul(self, y: &CliffordElement) -> CliffordElement {
        self.try_mul(y).expect("Clifford product across different spaces")
    }
}

impl Add for &CliffordElement {
    type Output = CliffordElement;
    fn add(self, y: &CliffordElement) -> CliffordElement {
        assert_eq!(self.space, y.space, "Clifford sum across different spaces");
        let mut out = self.clone();
        for (&m, c) in &y.terms {
            out.add_term(m, c.clone());
        }
        out
    }
}

impl Sub for &CliffordElement {
    type Output = CliffordElement;
    fn sub(self, y: &CliffordElement) -> CliffordElement {
        self + &(-y)
    }
}

impl Neg for &CliffordElement {
    type Output = CliffordElement;
    fn neg(self) -> CliffordElement {
        self.map_terms(|_, c| -c)
    }
}
