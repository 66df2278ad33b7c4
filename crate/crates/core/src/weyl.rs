//! The G₂ root system in simple-root coordinates and its Weyl group as
//! integral 2×2 matrices.

use std::fmt;
use std::str::FromStr;

use crate::error::{AlgebraError, Result};
use crate::field::{CycloNum, ExactMatrix, Rational};

/// Exponent of `|det|` in the modulus character of the Heisenberg parabolic.
pub const DELTA_P_EXPONENT: u32 = 3;
/// Exponent of `|det|` in the modulus character of the other maximal parabolic.
pub const DELTA_P_PRIME_EXPONENT: u32 = 5;

pub type Mat2 = [[i64; 2]; 2];
pub type Root = [i64; 2];

pub const IDENTITY: Mat2 = [[1, 0], [0, 1]];

pub fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    std::array::from_fn(|i| std::array::from_fn(|j| a[i][0] * b[0][j] + a[i][1] * b[1][j]))
}

pub fn apply(m: &Mat2, r: &Root) -> Root {
    [m[0][0] * r[0] + m[0][1] * r[1], m[1][0] * r[0] + m[1][1] * r[1]]
}

fn det(m: &Mat2) -> i64 {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

/// `α` short, `β` long; roots are written `aα + bβ ↦ [a, b]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystemG2 {
    pub simple: [Root; 2],
    pub positives: Vec<Root>,
}

impl RootSystemG2 {
    pub fn new() -> Self {
        let simple = [[1, 0], [0, 1]];
        let mut all: Vec<Root> = Vec::new();
        for w in weyl_group() {
            for s in &simple {
                let r = apply(&w.mat, s);
                if !all.contains(&r) {
                    all.push(r);
                }
            }
        }
        let mut positives: Vec<Root> = all.into_iter().filter(|r| r[0] >= 0 && r[1] >= 0).collect();
        positives.sort_by_key(|r| (r[0] + r[1], r[1]));
        RootSystemG2 { simple, positives }
    }

    pub fn roots(&self) -> Vec<Root> {
        self.positives.iter().flat_map(|r| [*r, [-r[0], -r[1]]]).collect()
    }

    pub fn highest_root(&self) -> Root {
        *self.positives.iter().max_by_key(|r| r[0] + r[1]).expect("nonempty")
    }
}

impl Default for RootSystemG2 {
    fn default() -> Self {
        Self::new()
    }
}

/// Invariant form on the root lattice, `(α, α) = 2`, `(β, β) = 6`.
pub const GRAM: Mat2 = [[2, -3], [-3, 6]];

pub fn inner(u: &Root, v: &Root) -> i64 {
    let gv = apply(&GRAM, v);
    u[0] * gv[0] + u[1] * gv[1]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    pub mat: Mat2,
}

impl WeylElement {
    pub fn s_alpha() -> Self {
        WeylElement { mat: [[-1, 3], [0, 1]] }
    }

    pub fn s_beta() -> Self {
        WeylElement { mat: [[1, 0], [1, -1]] }
    }

    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        WeylElement { mat: mat_mul(&self.mat, &other.mat) }
    }

    pub fn inverse(&self) -> WeylElement {
        let m = &self.mat;
        let d = det(m);
        WeylElement { mat: [[m[1][1] * d, -m[0][1] * d], [-m[1][0] * d, m[0][0] * d]] }
    }

    pub fn det_minus_one(&self) -> i64 {
        let m = &self.mat;
        det(&[[m[0][0] - 1, m[0][1]], [m[1][0], m[1][1] - 1]])
    }

    pub fn preserves_form(&self) -> bool {
        let m = &self.mat;
        let mt = [[m[0][0], m[1][0]], [m[0][1], m[1][1]]];
        mat_mul(&mat_mul(&mt, &GRAM), m) == GRAM
    }

    pub fn is_reflection(&self) -> bool {
        det(&self.mat) == -1
    }
}

/// Closure of the two simple reflections, in breadth-first order from the identity.
pub fn weyl_group() -> Vec<WeylElement> {
    let gens = [WeylElement::s_alpha(), WeylElement::s_beta()];
    let mut out = vec![WeylElement { mat: IDENTITY }];
    let mut i = 0;
    while i < out.len() {
        for g in &gens {
            let w = g.compose(&out[i]);
            if !out.contains(&w) {
                out.push(w);
            }
        }
        i += 1;
    }
    out
}

/// Elements with `det(w − 1) ≠ 0` on the two-dimensional space, with `|det(w − 1)|`.
pub fn regular_elements() -> Vec<(WeylElement, u64)> {
    weyl_group()
        .into_iter()
        .filter_map(|w| {
            let d = w.det_minus_one();
            (d != 0).then(|| (w, d.unsigned_abs()))
        })
        .collect()
}

/// `Σ_{w regular} |det(w − 1)|⁻¹`
pub fn regular_inverse_sum() -> Rational {
    regular_elements().iter().fold(Rational::zero(), |acc, (_, d)| acc + Rational::new(1, *d as i64))
}

/// Rotation angle of a rotation in the Weyl group, as a multiple of `π/3`.
/// The rotation by `kπ/3` has `|det(w − 1)| = 2 − 2cos(kπ/3)` = 1, 3, 4, 3, 1.
pub fn rotation_table() -> Vec<(u32, u64)> {
    let r = WeylElement::s_alpha().compose(&WeylElement::s_beta());
    let mut w = WeylElement { mat: IDENTITY };
    (1..6)
        .map(|k| {
            w = r.compose(&w);
            (k, w.det_minus_one().unsigned_abs())
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Levi {
    Gl2Short,
    Gl2Long,
    Torus,
    Gl2Twisted,
}

impl Levi {
    pub const ALL: [Levi; 4] = [Levi::Gl2Short, Levi::Gl2Long, Levi::Torus, Levi::Gl2Twisted];

    pub fn name(&self) -> &'static str {
        match self {
            Levi::Gl2Short => "GL2_short",
            Levi::Gl2Long => "GL2_long",
            Levi::Torus => "T",
            Levi::Gl2Twisted => "GL2_twisted",
        }
    }
}

impl fmt::Display for Levi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Levi {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self> {
        Levi::ALL.into_iter().find(|l| l.name() == s).ok_or_else(|| AlgebraError::UnknownLevi(s.to_string()))
    }
}

/// `|W₀^M| / |W₀^G|`. The twisted Levi `GL(2)` inside `PGSO(8) ⋊ θ` is
/// configured as `1/6`, the value of its discrete-part prefactor.
pub fn levi_coefficient(levi: Levi) -> Rational {
    let order_g = weyl_group().len() as i64;
    match levi {
        Levi::Gl2Short | Levi::Gl2Long => Rational::new(2, order_g),
        Levi::Torus => Rational::new(1, order_g),
        Levi::Gl2Twisted => Rational::new(1, 6),
    }
}

/// The nontrivial Weyl element of a `GL(2)` Levi acts by `−1` on the line
/// `𝔞_M^G`, giving `|det(w − 1)| = 2`.
pub fn gl2_levi_regular() -> (i64, u64) {
    let w = -1i64;
    (w, (w - 1).unsigned_abs())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CartanType {
    A2,
    D4,
    G2,
    A1xA1,
}

impl FromStr for CartanType {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A2" => Ok(CartanType::A2),
            "D4" => Ok(CartanType::D4),
            "G2" => Ok(CartanType::G2),
            "A1xA1" => Ok(CartanType::A1xA1),
            _ => Err(AlgebraError::UnknownCartanType(s.to_string())),
        }
    }
}

pub fn cartan_matrix(t: CartanType) -> ExactMatrix {
    match t {
        CartanType::A2 => ExactMatrix::from_ints(&[&[2, -1], &[-1, 2]]),
        CartanType::G2 => ExactMatrix::from_ints(&[&[2, -1], &[-3, 2]]),
        CartanType::A1xA1 => ExactMatrix::from_ints(&[&[2, 0], &[0, 2]]),
        CartanType::D4 => ExactMatrix::from_ints(&[
            &[2, -1, 0, 0],
            &[-1, 2, -1, -1],
            &[0, -1, 2, 0],
            &[0, -1, 0, 2],
        ]),
    }
}

pub fn cartan_determinant(t: CartanType) -> i64 {
    let d: CycloNum = cartan_matrix(t).det().expect("Cartan matrices are square");
    d.as_rational().and_then(Rational::to_i64).expect("integral determinant")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positive_roots_and_highest() {
        let rs = RootSystemG2::new();
        let mut expected = vec![[1, 0], [0, 1], [1, 1], [2, 1], [3, 1], [3, 2]];
        expected.sort();
        let mut got = rs.positives.clone();
        got.sort();
        assert_eq!(got, expected);
        assert_eq!(rs.highest_root(), [3, 2]);
        assert_eq!(rs.roots().len(), 12);
        let (a, b) = (rs.simple[0], rs.simple[1]);
        assert_eq!(inner(&b, &b), 3 * inner(&a, &a));
    }

    #[test]
    fn group_order_and_structure() {
        let w = weyl_group();
        assert_eq!(w.len(), 12);
        assert!(w.contains(&WeylElement { mat: IDENTITY }));
        assert!(w.contains(&WeylElement { mat: [[-1, 0], [0, -1]] }));
        for x in &w {
            assert!(x.preserves_form());
            assert!(w.contains(&x.inverse()));
            for y in &w {
                assert!(w.contains(&x.compose(y)));
            }
        }
        assert_eq!(w.iter().filter(|x| x.is_reflection()).count(), 6);
    }

    #[test]
    fn simple_reflections_permute_other_positives() {
        let rs = RootSystemG2::new();
        for (s, simple) in [(WeylElement::s_alpha(), [1, 0]), (WeylElement::s_beta(), [0, 1])] {
            assert_eq!(apply(&s.mat, &simple), [-simple[0], -simple[1]]);
            let rest: Vec<Root> = rs.positives.iter().copied().filter(|r| *r != simple).collect();
            let mut image: Vec<Root> = rest.iter().map(|r| apply(&s.mat, r)).collect();
            let mut sorted = rest.clone();
            image.sort();
            sorted.sort();
            assert_eq!(image, sorted);
        }
    }

    #[test]
    fn regular_table() {
        let reg = regular_elements();
        assert_eq!(reg.len(), 5);
        assert!(reg.iter().all(|(w, _)| !w.is_reflection()));
        let table: Vec<u64> = rotation_table().iter().map(|(_, d)| *d).collect();
        assert_eq!(table, vec![1, 3, 4, 3, 1]);
        let mut values: Vec<u64> = reg.iter().map(|(_, d)| *d).collect();
        values.sort();
        assert_eq!(values, vec![1, 1, 3, 3, 4]);
        assert_eq!(regular_inverse_sum(), Rational::new(35, 12));
        let minus = reg.iter().find(|(w, _)| w.mat == [[-1, 0], [0, -1]]).unwrap();
        assert_eq!(minus.1, 4);
    }

    #[test]
    fn det_values_are_class_functions() {
        let w = weyl_group();
        for x in &w {
            for g in &w {
                let c = g.compose(x).compose(&g.inverse());
                assert_eq!(c.det_minus_one(), x.det_minus_one());
            }
        }
    }

    #[test]
    fn levi_and_cartan() {
        assert_eq!(levi_coefficient(Levi::Torus), Rational::new(1, 12));
        assert_eq!(levi_coefficient(Levi::Gl2Short), Rational::new(1, 6));
        assert_eq!(levi_coefficient(Levi::Gl2Long), Rational::new(1, 6));
        assert_eq!(levi_coefficient(Levi::Gl2Twisted), Rational::new(1, 6));
        assert_eq!("GL3".parse::<Levi>(), Err(AlgebraError::UnknownLevi("GL3".into())));
        assert_eq!("T".parse::<Levi>(), Ok(Levi::Torus));
        assert_eq!(gl2_levi_regular(), (-1, 2));
        assert_eq!(levi_coefficient(Levi::Gl2Short) * Rational::new(1, 2), Rational::new(1, 12));
        assert_eq!(cartan_determinant(CartanType::G2), 1);
        assert_eq!(cartan_determinant(CartanType::A2), 3);
        assert_eq!(cartan_determinant(CartanType::D4), 4);
        assert_eq!(cartan_determinant(CartanType::A1xA1), 4);
        assert!("E8".parse::<CartanType>().is_err());
    }
}
