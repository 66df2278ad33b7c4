//! The spinor module `⋀•W` of `C(ℂ⁸, q)`.
//!
//! `W` is spanned by `w_k = (i e_k + e_{k+4})/2`, `k = 1..4`, and its
//! exterior algebra is stored densely over the sixteen subsets of `{1..4}`.
//! `w_k` acts by wedging and `w′_k` by the contraction `∂_k` with
//! `∂_k(w_j) = δ_kj`, so that `e_k = −i(w_k + w′_k)` and
//! `e_{k+4} = w_k − w′_k`. Every blade of the Clifford algebra then acts
//! by a monomial matrix.

use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use crate::clifford::{grade, CliffordElement, QuadraticSpace};
use crate::error::{AlgebraError, Result};
use crate::field::{CycloNum, ExactMatrix};
use crate::sample::Sampler;

pub const HALF: usize = 4;
pub const DIM: usize = 16;
pub const TOP: u32 = 0b1111;

const EVEN_MASKS: [u32; 8] = [0, 3, 5, 6, 9, 10, 12, 15];
const ODD_MASKS: [u32; 8] = [1, 2, 4, 7, 8, 11, 13, 14];

/// Which parity of `⋀•W` carries the label `S⁺`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HalfSpinLabeling {
    pub swapped: bool,
}

impl HalfSpinLabeling {
    pub fn plus_masks(&self) -> &'static [u32; 8] {
        if self.swapped {
            &ODD_MASKS
        } else {
            &EVEN_MASKS
        }
    }

    pub fn minus_masks(&self) -> &'static [u32; 8] {
        if self.swapped {
            &EVEN_MASKS
        } else {
            &ODD_MASKS
        }
    }

    pub fn describe(&self) -> &'static str {
        if self.swapped {
            "S+ = odd part, S- = even part"
        } else {
            "S+ = even part, S- = odd part"
        }
    }
}

/// Labels the half-spin modules so that `η = e₁⋯e₈` acts by `+1` on `S⁺` and
/// by `−1` on `S⁻`. Decided once from the computed action.
pub fn labeling() -> HalfSpinLabeling {
    static CELL: OnceLock<HalfSpinLabeling> = OnceLock::new();
    *CELL.get_or_init(|| {
        let eta_even = blade_on_basis(0xff, EVEN_MASKS[0]);
        let plus_on_even = eta_even.1 == EVEN_MASKS[0] && eta_even.0.is_one();
        HalfSpinLabeling { swapped: !plus_on_even }
    })
}

/// `(−1)^{#{j ∈ S : j < k}}`
fn koszul(mask: u32, k: usize) -> bool {
    (mask & ((1 << k) - 1)).count_ones() % 2 == 1
}

/// Action of the generator `e_{g+1}` on the basis blade `m`.
fn generator_on_basis(g: usize, m: u32) -> (CycloNum, u32) {
    let k = g % HALF;
    let bit = 1u32 << k;
    let present = m & bit != 0;
    let neg = koszul(m, k);
    let sign = if neg { CycloNum::from_int(-1) } else { CycloNum::one() };
    let c = if g < HALF {
        &sign * &-CycloNum::i()
    } else if present {
        -sign
    } else {
        sign
    };
    (c, m ^ bit)
}

/// Action of the Clifford blade `e_B` on the spinor basis blade `m`.
pub fn blade_on_basis(blade: u32, m: u32) -> (CycloNum, u32) {
    let mut c = CycloNum::one();
    let mut cur = m;
    for g in (0..8).rev().filter(|g| blade >> g & 1 == 1) {
        let (s, next) = generator_on_basis(g, cur);
        c = &c * &s;
        cur = next;
    }
    (c, cur)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SpinorElement {
    c: [CycloNum; DIM],
}

impl SpinorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(mask: u32) -> Self {
        Self::blade(mask, CycloNum::one())
    }

    pub fn blade(mask: u32, c: CycloNum) -> Self {
        let mut s = Self::zero();
        s.c[mask as usize] = c;
        s
    }

    /// `w_{k+1}` for `k = 0..4`.
    pub fn w(k: usize) -> Self {
        Self::basis(1 << k)
    }

    /// `ω = w₁∧w₂∧w₃∧w₄`
    pub fn top() -> Self {
        Self::basis(TOP)
    }

    pub fn coeff(&self, mask: u32) -> &CycloNum {
        &self.c[mask as usize]
    }

    pub fn coeffs(&self) -> &[CycloNum; DIM] {
        &self.c
    }

    /// Element of the half-spin module spanned by `masks` with the given coordinates.
    pub fn from_half(masks: &[u32; 8], coords: &[CycloNum]) -> Self {
        assert_eq!(coords.len(), 8, "half-spin coordinates have length 8");
        let mut s = Self::zero();
        for (m, x) in masks.iter().zip(coords) {
            s.c[*m as usize] = x.clone();
        }
        s
    }

    pub fn half_coords(&self, masks: &[u32; 8]) -> Vec<CycloNum> {
        masks.iter().map(|m| self.c[*m as usize].clone()).collect()
    }

    pub fn random_in(masks: &[u32; 8], s: &mut Sampler) -> Self {
        Self::from_half(masks, &s.scalars(8))
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(CycloNum::is_zero)
    }

    pub fn is_even(&self) -> bool {
        (0..DIM as u32).all(|m| grade(m) % 2 == 0 || self.c[m as usize].is_zero())
    }

    pub fn is_odd(&self) -> bool {
        (0..DIM as u32).all(|m| grade(m) % 2 == 1 || self.c[m as usize].is_zero())
    }

    pub fn scale(&self, s: &CycloNum) -> Self {
        SpinorElement { c: std::array::from_fn(|i| &self.c[i] * s) }
    }

    fn map_signs(&self, neg: impl Fn(u32) -> bool) -> Self {
        SpinorElement {
            c: std::array::from_fn(|m| if neg(m as u32) { -&self.c[m] } else { self.c[m].clone() }),
        }
    }

    /// Blade reversal `xᵗ`.
    pub fn transpose(&self) -> Self {
        self.map_signs(|m| {
            let k = grade(m);
            (k * k.saturating_sub(1) / 2) % 2 == 1
        })
    }

    /// Grade involution `ι`.
    pub fn grade_involution(&self) -> Self {
        self.map_signs(|m| grade(m) % 2 == 1)
    }

    pub fn bar(&self) -> Self {
        self.grade_involution().transpose()
    }

    pub fn wedge(&self, y: &SpinorElement) -> SpinorElement {
        let mut out = SpinorElement::zero();
        for a in 0..DIM as u32 {
            let ca = &self.c[a as usize];
            if ca.is_zero() {
                continue;
            }
            for b in 0..DIM as u32 {
                let cb = &y.c[b as usize];
                if a & b != 0 || cb.is_zero() {
                    continue;
                }
                let swaps: u32 = (0..HALF).filter(|k| b >> k & 1 == 1).map(|k| (a >> (k + 1)).count_ones()).sum();
                let p = ca * cb;
                if swaps % 2 == 1 {
                    out.c[(a | b) as usize] -= &p;
                } else {
                    out.c[(a | b) as usize] += &p;
                }
            }
        }
        out
    }

    /// `λ(e_{g+1}) s`
    pub fn generator_action(&self, g: usize) -> SpinorElement {
        self.blade_action(1 << g)
    }

    fn blade_action(&self, blade: u32) -> SpinorElement {
        let mut out = SpinorElement::zero();
        for m in 0..DIM as u32 {
            let c = &self.c[m as usize];
            if c.is_zero() {
                continue;
            }
            let (s, t) = blade_on_basis(blade, m);
            out.c[t as usize] += &(&s * c);
        }
        out
    }

    /// `w_{k+1} ∧ s`
    pub fn wedge_w(&self, k: usize) -> SpinorElement {
        SpinorElement::w(k).wedge(self)
    }

    /// `∂_{k+1} s`
    pub fn contract(&self, k: usize) -> SpinorElement {
        let mut out = SpinorElement::zero();
        for m in (0..DIM as u32).filter(|m| m >> k & 1 == 1) {
            let c = &self.c[m as usize];
            out.c[(m ^ (1 << k)) as usize] = if koszul(m, k) { -c } else { c.clone() };
        }
        out
    }
}

/// `λ(x) s` for `x ∈ C(ℂ⁸, q)`.
pub fn clifford_action(x: &CliffordElement, s: &SpinorElement) -> SpinorElement {
    assert_eq!(x.space().dim(), 8, "the spinor module is defined for dim 8");
    let mut out = SpinorElement::zero();
    for (&blade, c) in x.terms() {
        let part = s.blade_action(blade);
        for m in 0..DIM {
            if !part.c[m].is_zero() {
                out.c[m] += &(&part.c[m] * c);
            }
        }
    }
    out
}

/// `v · s` for a vector given by its coordinates in `e₁, …, e₈`.
pub fn vector_action(v: &[CycloNum], s: &SpinorElement) -> SpinorElement {
    let mut out = SpinorElement::zero();
    for (g, c) in v.iter().enumerate() {
        if !c.is_zero() {
            out = &out + &s.generator_action(g).scale(c);
        }
    }
    out
}

/// 16×16 matrix of `λ(x)` in the blade basis ordered by mask.
pub fn action_matrix(x: &CliffordElement) -> ExactMatrix {
    let cols: Vec<Vec<CycloNum>> = (0..DIM as u32)
        .map(|m| clifford_action(x, &SpinorElement::basis(m)).c.to_vec())
        .collect();
    ExactMatrix::from_columns(&cols).expect("sixteen columns of length sixteen")
}

fn restricted(x: &CliffordElement, masks: &[u32; 8]) -> ExactMatrix {
    let cols: Vec<Vec<CycloNum>> = masks
        .iter()
        .map(|&m| clifford_action(x, &SpinorElement::basis(m)).half_coords(masks))
        .collect();
    ExactMatrix::from_columns(&cols).expect("eight columns of length eight")
}

/// `(ρ⁺(a), ρ⁻(a))` in the bases of [`labeling`].
pub fn half_spin_matrices(a: &CliffordElement) -> Result<(ExactMatrix, ExactMatrix)> {
    if !a.is_spin() {
        return Err(AlgebraError::NotSpin);
    }
    Ok(half_spin_matrices_unchecked(a))
}

/// As [`half_spin_matrices`] for even elements not required to be in Spin,
/// e.g. Lie algebra elements.
pub fn half_spin_matrices_unchecked(a: &CliffordElement) -> (ExactMatrix, ExactMatrix) {
    let l = labeling();
    (restricted(a, l.plus_masks()), restricted(a, l.minus_masks()))
}

/// `𝒞(s)`, the coefficient of `w₁∧w₂∧w₃∧w₄`.
pub fn top_coefficient(s: &SpinorElement) -> CycloNum {
    s.coeff(TOP).clone()
}

/// `𝒩(x, y) = 𝒞(xᵗ ∧ y)`
pub fn pairing_n(x: &SpinorElement, y: &SpinorElement) -> CycloNum {
    top_coefficient(&x.transpose().wedge(y))
}

/// `𝒩̄(x, y) = 𝒞(x̄ ∧ y)`
pub fn pairing_nbar(x: &SpinorElement, y: &SpinorElement) -> CycloNum {
    top_coefficient(&x.bar().wedge(y))
}

/// Gram matrix of `𝒩` on the span of `masks`.
pub fn gram_n(masks: &[u32; 8]) -> ExactMatrix {
    ExactMatrix::from_fn(8, 8, |i, j| pairing_n(&SpinorElement::basis(masks[i]), &SpinorElement::basis(masks[j])))
}

/// Matrix whose columns are the 256 blade actions, flattened.
pub fn blade_action_span() -> ExactMatrix {
    let space = QuadraticSpace::standard(8);
    let cols: Vec<Vec<CycloNum>> = (0..256u32)
        .map(|b| action_matrix(&CliffordElement::blade(&space, b, CycloNum::one())).entries().to_vec())
        .collect();
    ExactMatrix::from_columns(&cols).expect("uniform column length")
}

impl Add for &SpinorElement {
    type Output = SpinorElement;
    fn add(self, y: &SpinorElement) -> SpinorElement {
        SpinorElement { c: std::array::from_fn(|i| &self.c[i] + &y.c[i]) }
    }
}

impl Sub for &SpinorElement {
    type Output = SpinorElement;
    fn sub(self, y: &SpinorElement) -> SpinorElement {
        SpinorElement { c: std::array::from_fn(|i| &self.c[i] - &y.c[i]) }
    }
}

impl Neg for &SpinorElement {
    type Output = SpinorElement;
    fn neg(self) -> SpinorElement {
        SpinorElement { c: std::array::from_fn(|i| -&self.c[i]) }
    }
}
