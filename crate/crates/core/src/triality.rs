//! Trialities, their automorphisms, and the order-three automorphism of
//! Spin(8) obtained from two explicit involutions.
//!
//! Slots are numbered 1, 2, 3 in the public API and stored 0-based. A
//! [`TrialityMap`] with permutation `p` sends `V_i` to `V_{p(i)}`; in the
//! spinor model `V₁ = ℂ⁸`, `V₂ = S⁺`, `V₃ = S⁻`.

use std::sync::OnceLock;

use crate::clifford::CliffordElement;
use crate::error::{AlgebraError, Result};
use crate::field::{CycloNum, ExactMatrix};
use crate::so8;
use crate::spinor::{self, gram_n, labeling, pairing_n, vector_action, SpinorElement};

pub type Vector = Vec<CycloNum>;

fn dot(u: &[CycloNum], v: &[CycloNum]) -> CycloNum {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

fn bilinear(g: &ExactMatrix, u: &[CycloNum], v: &[CycloNum]) -> CycloNum {
    dot(u, &g.mul_vec(v).expect("length eight"))
}

fn unit(n: usize, k: usize) -> Vector {
    let mut v = vec![CycloNum::zero(); n];
    v[k] = CycloNum::one();
    v
}

fn matrix_of(f: impl Fn(&[CycloNum]) -> Vector) -> ExactMatrix {
    let cols: Vec<Vector> = (0..8).map(|k| f(&unit(8, k))).collect();
    ExactMatrix::from_columns(&cols).expect("eight columns of length eight")
}

/// Three quadratic spaces of dimension eight and the bilinear map `t₃`.
#[derive(Clone, Debug)]
pub struct TrialityData {
    forms: [ExactMatrix; 3],
    /// `t3[a][b]` = coordinates of `t₃(e_a, e_b)` in `V₃`.
    t3: Vec<Vec<Vector>>,
    /// `tensor[a][b][c] = 𝒯(e_a, e_b, e_c)`.
    tensor: Vec<Vec<Vector>>,
    inverse_forms: [ExactMatrix; 3],
}

impl TrialityData {
    /// Only dimension eight is supported; any other size is rejected.
    pub fn new(forms: [ExactMatrix; 3], t3: Vec<Vec<Vector>>) -> Result<Self> {
        let wrong = |found: String| AlgebraError::DimensionMismatch { expected: "8".into(), found };
        for f in &forms {
            if f.rows() != 8 || f.cols() != 8 {
                return Err(wrong(format!("{}x{}", f.rows(), f.cols())));
            }
        }
        if t3.len() != 8 || t3.iter().any(|r| r.len() != 8 || r.iter().any(|v| v.len() != 8)) {
            return Err(wrong("t3 tensor of another shape".into()));
        }
        let inverse_forms = [forms[0].inverse()?, forms[1].inverse()?, forms[2].inverse()?];
        let tensor = (0..8)
            .map(|a| {
                (0..8)
                    .map(|b| (0..8).map(|c| bilinear(&forms[2], &t3[a][b], &unit(8, c))).collect())
                    .collect()
            })
            .collect();
        Ok(TrialityData { forms, t3, tensor, inverse_forms })
    }

    pub fn form(&self, slot: usize) -> &ExactMatrix {
        &self.forms[slot - 1]
    }

    /// Polar form `q_slot(u, v)`.
    pub fn q(&self, slot: usize, u: &[CycloNum], v: &[CycloNum]) -> CycloNum {
        bilinear(&self.forms[slot - 1], u, v)
    }

    pub fn t3(&self, v1: &[CycloNum], v2: &[CycloNum]) -> Vector {
        let mut out = vec![CycloNum::zero(); 8];
        for (a, x) in v1.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (b, y) in v2.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let s = x * y;
                for (o, t) in out.iter_mut().zip(&self.t3[a][b]) {
                    if !t.is_zero() {
                        *o += &(&s * t);
                    }
                }
            }
        }
        out
    }

    pub fn trilinear(&self, v1: &[CycloNum], v2: &[CycloNum], v3: &[CycloNum]) -> CycloNum {
        self.q(3, &self.t3(v1, v2), v3)
    }

    /// `q₁(t₁(v₂, v₃), ·) = 𝒯(·, v₂, v₃)`
    pub fn t1(&self, v2: &[CycloNum], v3: &[CycloNum]) -> Vector {
        let rhs: Vector = (0..8).map(|a| self.trilinear(&unit(8, a), v2, v3)).collect();
        self.inverse_forms[0].mul_vec(&rhs).expect("length eight")
    }

    /// `q₂(t₂(v₁, v₃), ·) = 𝒯(v₁, ·, v₃)`
    pub fn t2(&self, v1: &[CycloNum], v3: &[CycloNum]) -> Vector {
        let rhs: Vector = (0..8).map(|b| self.trilinear(v1, &unit(8, b), v3)).collect();
        self.inverse_forms[1].mul_vec(&rhs).expect("length eight")
    }

    /// `t₃`, `t₂`, `t₁` are orthogonal on the given samples.
    pub fn check_orthogonality(&self, samples: &[[Vector; 3]]) -> bool {
        samples.iter().all(|[v1, v2, v3]| {
            let qq = |s: usize, v: &[CycloNum]| self.q(s, v, v);
            let t3 = self.t3(v1, v2);
            let t2 = self.t2(v1, v3);
            let t1 = self.t1(v2, v3);
            qq(3, &t3) == &qq(1, v1) * &qq(2, v2)
                && qq(2, &t2) == &qq(1, v1) * &qq(3, v3)
                && qq(1, &t1) == &qq(2, v2) * &qq(3, v3)
        })
    }

    /// The slot product used in the composition identities: for `a ∈ V_i`,
    /// `b ∈ V_k` (`i ≠ k`) it returns `ab ∈ V_j`.
    pub fn product(&self, i: usize, a: &[CycloNum], k: usize, b: &[CycloNum]) -> Vector {
        match (i, k) {
            (1, 2) => self.t3(a, b),
            (2, 1) => self.t3(b, a),
            (1, 3) => self.t2(a, b),
            (3, 1) => self.t2(b, a),
            (2, 3) => self.t1(a, b),
            (3, 2) => self.t1(b, a),
            _ => panic!("slot pair ({i}, {k}) is not a product"),
        }
    }
}

/// The spinor model `(ℂ⁸, S⁺, S⁻, 𝒯)` with `𝒯(v, x, y) = 𝒩(v·x, y)`.
pub struct SpinorTriality {
    data: TrialityData,
}

impl SpinorTriality {
    pub fn get() -> &'static SpinorTriality {
        static CELL: OnceLock<SpinorTriality> = OnceLock::new();
        CELL.get_or_init(|| {
            let l = labeling();
            let g1 = ExactMatrix::identity(8).scale(&CycloNum::from_int(-1));
            let forms = [g1, gram_n(l.plus_masks()), gram_n(l.minus_masks())];
            let t3 = (0..8)
                .map(|a| {
                    (0..8)
                        .map(|b| {
                            let x = SpinorElement::from_half(l.plus_masks(), &unit(8, b));
                            vector_action(&unit(8, a), &x).half_coords(l.minus_masks())
                        })
                        .collect()
                })
                .collect();
            SpinorTriality { data: TrialityData::new(forms, t3).expect("spinor triality is well formed") }
        })
    }

    pub fn data(&self) -> &TrialityData {
        &self.data
    }

    /// `t₃(v, x) = v·x`
    pub fn t3(&self, v: &[CycloNum], x: &[CycloNum]) -> Vector {
        self.data.t3(v, x)
    }

    /// `t₂(v, y) = v·y`, computed in the Clifford module.
    pub fn t2(&self, v: &[CycloNum], y: &[CycloNum]) -> Vector {
        let l = labeling();
        vector_action(v, &SpinorElement::from_half(l.minus_masks(), y)).half_coords(l.plus_masks())
    }

    /// `t₁(x, y)`, the vector with `q(t₁(x, y), e_j) = 𝒩(e_j·x, y)`.
    pub fn t1(&self, x: &[CycloNum], y: &[CycloNum]) -> Vector {
        self.data.t1(x, y)
    }

    pub fn trilinear(&self, v: &[CycloNum], x: &[CycloNum], y: &[CycloNum]) -> CycloNum {
        let l = labeling();
        let vx = vector_action(v, &SpinorElement::from_half(l.plus_masks(), x));
        pairing_n(&vx, &SpinorElement::from_half(l.minus_masks(), y))
    }

    pub fn q(&self, slot: usize, u: &[CycloNum], v: &[CycloNum]) -> CycloNum {
        self.data.q(slot, u, v)
    }
}

/// A permutation-tagged triple of linear maps `A_i: V_i → V_{perm(i)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialityMap {
    pub perm: [usize; 3],
    pub mats: [ExactMatrix; 3],
}

impl TrialityMap {
    pub fn identity() -> Self {
        let i = ExactMatrix::identity(8);
        TrialityMap { perm: [0, 1, 2], mats: [i.clone(), i.clone(), i] }
    }

    pub fn from_mats(mats: [ExactMatrix; 3]) -> Self {
        TrialityMap { perm: [0, 1, 2], mats }
    }

    /// `g ∘ f`
    pub fn compose(g: &TrialityMap, f: &TrialityMap) -> TrialityMap {
        let perm = std::array::from_fn(|i| g.perm[f.perm[i]]);
        let mats = std::array::from_fn(|i| &g.mats[f.perm[i]] * &f.mats[i]);
        TrialityMap { perm, mats }
    }

    pub fn pow(&self, n: u32) -> TrialityMap {
        (0..n).fold(TrialityMap::identity(), |acc, _| TrialityMap::compose(self, &acc))
    }

    pub fn is_identity(&self) -> bool {
        self.perm == [0, 1, 2] && self.mats.iter().all(ExactMatrix::is_identity)
    }

    pub fn perm_is_three_cycle(&self) -> bool {
        self.perm == [1, 2, 0] || self.perm == [2, 0, 1]
    }

    /// Each `A_i` carries `q_i` to `q_{perm(i)}`.
    pub fn is_isometric(&self, data: &TrialityData) -> bool {
        (0..3).all(|i| {
            let a = &self.mats[i];
            &(&a.transpose() * data.form(self.perm[i] + 1)) * a == *data.form(i + 1)
        })
    }

    /// `𝒯(w₁, w₂, w₃) = 𝒯(v₁, v₂, v₃)` where `w_{perm(i)} = A_i v_i`, checked
    /// on all basis triples.
    pub fn preserves_trilinear(&self, data: &TrialityData) -> bool {
        let mut inv = [0usize; 3];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p] = i;
        }
        let b: [&ExactMatrix; 3] = std::array::from_fn(|s| &self.mats[inv[s]]);
        // S[a][b][c] = 𝒯(B₁e_a, B₂e_b, B₃e_c), contracted one axis at a time.
        let t = &data.tensor;
        let mut s1 = vec![vec![vec![CycloNum::zero(); 8]; 8]; 8];
        for a in 0..8 {
            for x in 0..8 {
                let m = b[0].get(x, a);
                if m.is_zero() {
                    continue;
                }
                for y in 0..8 {
                    for z in 0..8 {
                        if !t[x][y][z].is_zero() {
                            s1[a][y][z] += &(m * &t[x][y][z]);
                        }
                    }
                }
            }
        }
        let mut s2 = vec![vec![vec![CycloNum::zero(); 8]; 8]; 8];
        for a in 0..8 {
            for bb in 0..8 {
                for y in 0..8 {
                    let m = b[1].get(y, bb);
                    if m.is_zero() {
                        continue;
                    }
                    for z in 0..8 {
                        if !s1[a][y][z].is_zero() {
                            s2[a][bb][z] += &(m * &s1[a][y][z]);
                        }
                    }
                }
            }
        }
        let mut s3 = vec![vec![vec![CycloNum::zero(); 8]; 8]; 8];
        for a in 0..8 {
            for bb in 0..8 {
                for c in 0..8 {
                    for z in 0..8 {
                        let m = b[2].get(z, c);
                        if !m.is_zero() && !s2[a][bb][z].is_zero() {
                            s3[a][bb][c] += &(m * &s2[a][bb][z]);
                        }
                    }
                }
            }
        }
        for x0 in 0..8 {
            for x1 in 0..8 {
                for x2 in 0..8 {
                    let x = [x0, x1, x2];
                    if s3[x[inv[0]]][x[inv[1]]][x[inv[2]]] != t[x0][x1][x2] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn validate(&self, data: &TrialityData) -> bool {
        self.is_isometric(data) && self.preserves_trilinear(data)
    }

    /// `t₃(A₁v, A₂x) = A₃ t₃(v, x)` on all basis pairs; meaningful for maps
    /// with the identity permutation.
    pub fn intertwines_t3(&self, data: &TrialityData) -> bool {
        (0..8).all(|a| {
            (0..8).all(|b| {
                let lhs = data.t3(&self.mats[0].column(a), &self.mats[1].column(b));
                let rhs = self.mats[2].mul_vec(&data.t3(&unit(8, a), &unit(8, b))).expect("length eight");
                lhs == rhs
            })
        })
    }
}

/// `a ↦ (ρ(a), ρ⁺(a), ρ⁻(a))`
pub fn spin_to_triple(a: &CliffordElement) -> Result<TrialityMap> {
    if !a.is_spin() {
        return Err(AlgebraError::NotSpin);
    }
    let (p, m) = spinor::half_spin_matrices_unchecked(a);
    Ok(TrialityMap::from_mats([a.vector_rep_unchecked(), p, m]))
}

/// Unit vector `v₁ ∈ ℂ⁸` and unit even spinor `x₁ ∈ S⁺` fixing the involutions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitChoice {
    pub v1: Vector,
    pub x1: Vector,
}

impl UnitChoice {
    /// `v₁ = i·e₁`, `x₁ = 1 + ½·w₁∧w₂∧w₃∧w₄`.
    pub fn standard() -> Self {
        let mut v1 = vec![CycloNum::zero(); 8];
        v1[0] = CycloNum::i();
        let l = labeling();
        let mut x = SpinorElement::basis(0);
        x = &x + &SpinorElement::blade(spinor::TOP, CycloNum::half());
        UnitChoice { v1, x1: x.half_coords(l.plus_masks()) }
    }

    pub fn describe(&self) -> String {
        "v1 = i*e1, x1 = 1 + (1/2) w1^w2^w3^w4".to_string()
    }

    fn check(&self, tri: &SpinorTriality) -> Result<()> {
        if tri.q(1, &self.v1, &self.v1) != CycloNum::one() {
            return Err(AlgebraError::NonUnitNorm(format!("q(v1) = {}", tri.q(1, &self.v1, &self.v1))));
        }
        if tri.q(2, &self.x1, &self.x1) != CycloNum::one() {
            return Err(AlgebraError::NonUnitNorm(format!("N(x1) = {}", tri.q(2, &self.x1, &self.x1))));
        }
        Ok(())
    }

    /// `y₁ = v₁x₁ ∈ S⁻`
    pub fn y1(&self) -> Vector {
        SpinorTriality::get().t3(&self.v1, &self.x1)
    }
}

fn reflect(tri: &SpinorTriality, slot: usize, unit_vec: &[CycloNum], x: &[CycloNum]) -> Vector {
    let c = &tri.q(slot, unit_vec, x) * &CycloNum::from_int(2);
    x.iter().zip(unit_vec).map(|(a, u)| a - &(&c * u)).collect()
}

/// `ι₁(v, x, y) = (−R_{v₁}v, v₁y, v₁x)` for `k = 1` and
/// `ι₂(v, x, y) = (x₁y, −R_{x₁}x, x₁v)` for `k = 2`.
pub fn make_iota(k: u8, u: &UnitChoice) -> Result<TrialityMap> {
    let tri = SpinorTriality::get();
    u.check(tri)?;
    let neg = |v: Vector| v.iter().map(|c| -c).collect::<Vector>();
    match k {
        1 => Ok(TrialityMap {
            perm: [0, 2, 1],
            mats: [
                matrix_of(|v| neg(reflect(tri, 1, &u.v1, v))),
                matrix_of(|x| tri.t3(&u.v1, x)),
                matrix_of(|y| tri.t2(&u.v1, y)),
            ],
        }),
        2 => Ok(TrialityMap {
            perm: [2, 1, 0],
            mats: [
                matrix_of(|v| tri.t3(v, &u.x1)),
                matrix_of(|x| neg(reflect(tri, 2, &u.x1, x))),
                matrix_of(|y| tri.t1(&u.x1, y)),
            ],
        }),
        _ => Err(AlgebraError::OrderCheck(format!("no involution ι{k}"))),
    }
}

/// `θ′ = ι₂ ∘ ι₁`
pub fn theta_prime(u: &UnitChoice) -> Result<TrialityMap> {
    Ok(TrialityMap::compose(&make_iota(2, u)?, &make_iota(1, u)?))
}

/// `θ′(v, x, y) = (x₁(v₁x), y₁(x₁y), v₁(y₁v))` assembled directly.
pub fn theta_prime_explicit(u: &UnitChoice) -> Result<TrialityMap> {
    let tri = SpinorTriality::get();
    u.check(tri)?;
    let y1 = u.y1();
    Ok(TrialityMap {
        perm: [2, 0, 1],
        mats: [
            matrix_of(|v| tri.t3(&u.v1, &tri.t2(v, &y1))),
            matrix_of(|x| tri.t1(&u.x1, &tri.t3(&u.v1, x))),
            matrix_of(|y| tri.t2(&tri.t1(&u.x1, y), &y1)),
        ],
    })
}

/// Identifications `h₂: S⁺ → ℂ⁸`, `x ↦ x₁(v₁x)` and `h₃: S⁻ → ℂ⁸`, `y ↦ y₁(v₁y)`.
pub fn identifications(u: &UnitChoice) -> (ExactMatrix, ExactMatrix) {
    let tri = SpinorTriality::get();
    let y1 = u.y1();
    (
        matrix_of(|x| tri.t1(&u.x1, &tri.t3(&u.v1, x))),
        matrix_of(|y| tri.t1(&tri.t2(&u.v1, y), &y1)),
    )
}

/// Conjugating θ′ by `h = (Id, h₂, h₃)` gives the plain cyclic shift: each of
/// the three transported components is the identity of `ℂ⁸`.
pub fn conjugated_components(u: &UnitChoice) -> Result<[ExactMatrix; 3]> {
    let t = theta_prime(u)?;
    let (h2, h3) = identifications(u);
    let h = [ExactMatrix::identity(8), h2, h3];
    let hinv = [ExactMatrix::identity(8), h[1].inverse()?, h[2].inverse()?];
    Ok(std::array::from_fn(|i| &(&h[t.perm[i]] * &t.mats[i]) * &hinv[i]))
}

/// Matrix of the linearization of θ on the bivector basis: `B ↦ B′` with
/// `dρ(B′) = h₂ λ⁺(B) h₂⁻¹`.
pub fn dtheta_on_bivectors(u: &UnitChoice) -> Result<ExactMatrix> {
    let (h2, _) = identifications(u);
    let h2inv = h2.inverse()?;
    let targets: Vec<Vector> = (0..so8::DIM)
        .map(|k| {
            let (plus, _) = spinor::half_spin_matrices_unchecked(&so8::basis_element(k));
            (&(&h2 * &plus) * &h2inv).entries().to_vec()
        })
        .collect();
    let rhs = ExactMatrix::from_columns(&targets)?;
    so8::d_rho_system()
        .solve_many(&rhs)?
        .ok_or_else(|| AlgebraError::SolveFailure("transported bivector is not in the image of dρ".into()))
}

/// dθ for the standard unit choice, computed once.
pub fn standard_dtheta() -> &'static ExactMatrix {
    static CELL: OnceLock<ExactMatrix> = OnceLock::new();
    CELL.get_or_init(|| dtheta_on_bivectors(&UnitChoice::standard()).expect("standard dθ exists"))
}

/// `auto([B_a, B_b]) = [auto B_a, auto B_b]` on all basis pairs `a < b`.
pub fn preserves_bracket(auto: &ExactMatrix) -> bool {
    let cols: Vec<Vector> = (0..so8::DIM).map(|k| auto.column(k)).collect();
    let sc = so8::structure_constants();
    (0..so8::DIM).all(|a| {
        (a + 1..so8::DIM).all(|b| {
            let lhs = match &sc[a][b] {
                None => vec![CycloNum::zero(); so8::DIM],
                Some((k, c)) => cols[*k].iter().map(|x| x * c).collect(),
            };
            lhs == so8::bracket(&cols[a], &cols[b])
        })
    })
}

#[derive(Clone, Debug)]
pub struct FixedSubalgebra {
    pub dim: usize,
    pub basis: Vec<Vector>,
    pub closed: bool,
}

/// `ker(auto − Id)` for an automorphism of order dividing three.
pub fn fixed_subalgebra(auto: &ExactMatrix) -> Result<FixedSubalgebra> {
    if !auto.pow(3).is_identity() {
        return Err(AlgebraError::OrderCheck("cube is not the identity".into()));
    }
    Ok(fixed_points(auto))
}

/// `ker(auto − Id)` with its closure status, for any linear map.
pub fn fixed_points(auto: &ExactMatrix) -> FixedSubalgebra {
    let basis = (auto - &ExactMatrix::identity(auto.rows())).kernel();
    let closed = so8::span_is_closed(&basis);
    FixedSubalgebra { dim: basis.len(), basis, closed }
}

/// `Ad(s) ∘ dθ`
pub fn twisted_by(s: &CliffordElement, dtheta: &ExactMatrix) -> ExactMatrix {
    &so8::ad_matrix(s) * dtheta
}

/// The `S₃`-action on triples in the octonion model: `Â(x) = conj(A(x̄))`.
pub mod octonion_model {
    use crate::field::{CycloNum, ExactMatrix};

    pub type Triple = [ExactMatrix; 3];

    /// Matrix of conjugation in raw Zorn coordinates `(a, v, w, b)`.
    pub fn conj_matrix() -> ExactMatrix {
        ExactMatrix::from_fn(8, 8, |i, j| match (i, j) {
            (0, 7) | (7, 0) => CycloNum::one(),
            (k, l) if k == l && (1..7).contains(&k) => CycloNum::from_int(-1),
            _ => CycloNum::zero(),
        })
    }

    pub fn hat(a: &ExactMatrix) -> ExactMatrix {
        let k = conj_matrix();
        &(&k * a) * &k
    }

    pub fn sigma1(t: &Triple) -> Triple {
        [hat(&t[0]), hat(&t[2]), hat(&t[1])]
    }

    pub fn sigma2(t: &Triple) -> Triple {
        [hat(&t[2]), hat(&t[1]), hat(&t[0])]
    }

    pub fn theta(t: &Triple) -> Triple {
        [t[1].clone(), t[2].clone(), t[0].clone()]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::random_unit_vector;
    use crate::sample::Sampler;

    #[test]
    fn unit_choice_is_unit_and_consistent() {
        let u = UnitChoice::standard();
        let tri = SpinorTriality::get();
        assert!(u.check(tri).is_ok());
        let y1 = u.y1();
        assert_eq!(tri.t2(&u.v1, &y1), u.x1);
        let bad = UnitChoice { v1: unit(8, 0), x1: u.x1.clone() };
        assert!(matches!(make_iota(1, &bad), Err(AlgebraError::NonUnitNorm(_))));
    }

    #[test]
    fn involutions_and_theta() {
        let u = UnitChoice::standard();
        let data = SpinorTriality::get().data();
        for k in [1, 2] {
            let i = make_iota(k, &u).unwrap();
            assert!(i.validate(data));
            assert!(TrialityMap::compose(&i, &i).is_identity());
        }
        let t = theta_prime(&u).unwrap();
        assert!(t.perm_is_three_cycle());
        assert!(!t.is_identity());
        assert!(t.pow(3).is_identity());
        assert_eq!(t, theta_prime_explicit(&u).unwrap());
        assert!(t.validate(data));
        for c in conjugated_components(&u).unwrap() {
            assert!(c.is_identity());
        }
    }

    #[test]
    fn spin_triples() {
        let data = SpinorTriality::get().data();
        let sp = crate::clifford::QuadraticSpace::standard(8);
        assert!(spin_to_triple(&CliffordElement::one(&sp)).unwrap().is_identity());
        let mut s = Sampler::new(4);
        let a = (0..4).fold(CliffordElement::one(&sp), |acc, _| &acc * &random_unit_vector(&sp, &mut s));
        let t = spin_to_triple(&a).unwrap();
        assert!(t.validate(data));
        assert!(t.intertwines_t3(data));
        let eta = CliffordElement::pseudoscalar(&sp);
        assert!(spin_to_triple(&eta).unwrap().validate(data));
        let minus = ExactMatrix::identity(8).scale(&CycloNum::from_int(-1));
        let flipped = TrialityMap::from_mats([ExactMatrix::identity(8), ExactMatrix::identity(8), minus]);
        assert!(!flipped.validate(data));
        assert!(!flipped.preserves_trilinear(data));
        assert_eq!(spin_to_triple(&CliffordElement::basis_vector(&sp, 0)), Err(AlgebraError::NotSpin));
    }

    #[test]
    fn dimension_gate() {
        let small = [ExactMatrix::identity(4), ExactMatrix::identity(4), ExactMatrix::identity(4)];
        assert!(matches!(TrialityData::new(small, vec![]), Err(AlgebraError::DimensionMismatch { .. })));
    }

    #[test]
    fn composition_identities() {
        let tri = SpinorTriality::get();
        let data = tri.data();
        let mut s = Sampler::new(12);
        for _ in 0..4 {
            let vs = [s.scalars(8), s.scalars(8), s.scalars(8)];
            assert!(data.check_orthogonality(&[vs.clone()]));
            for i in 1..=3 {
                for k in (1..=3).filter(|&k| k != i) {
                    let a = &vs[i - 1];
                    let b = &vs[k - 1];
                    let ab = data.product(i, a, k, b);
                    let j = 6 - i - k;
                    let lhs = data.product(i, a, j, &ab);
                    let q = data.q(i, a, a);
                    let rhs: Vector = b.iter().map(|c| c * &q).collect();
                    assert_eq!(lhs, rhs, "slots ({i}, {k})");
                }
            }
            let x = &vs[1];
            let n = tri.q(2, x, x);
            let v = &vs[0];
            let fg = tri.t1(x, &tri.t3(v, x));
            assert_eq!(fg, v.iter().map(|c| c * &n).collect::<Vector>());
            assert_eq!(tri.trilinear(&vs[0], &vs[1], &vs[2]), data.trilinear(&vs[0], &vs[1], &vs[2]));
            assert_eq!(tri.t2(&vs[0], &vs[2]), data.t2(&vs[0], &vs[2]));
        }
    }

    #[test]
    fn dtheta_order_bracket_and_fixed_points() {
        let d = standard_dtheta();
        assert!(d.pow(3).is_identity());
        assert!(!d.is_identity());
        assert!(preserves_bracket(d));
        let f = fixed_subalgebra(d).unwrap();
        assert_eq!(f.dim, 14);
        assert!(f.closed);
        assert_eq!(fixed_subalgebra(&ExactMatrix::identity(so8::DIM)).unwrap().dim, 28);
        let bad = ExactMatrix::identity(so8::DIM).scale(&CycloNum::i());
        assert!(matches!(fixed_subalgebra(&bad), Err(AlgebraError::OrderCheck(_))));
    }

    #[test]
    fn octonion_model_s3() {
        use octonion_model::*;
        let mut s = Sampler::new(6);
        for _ in 0..3 {
            let t: Triple = std::array::from_fn(|_| ExactMatrix::from_fn(8, 8, |_, _| s.scalar()));
            assert_eq!(sigma2(&sigma1(&t)), theta(&t));
            assert_eq!(sigma1(&sigma1(&t)), t);
            assert_eq!(theta(&theta(&theta(&t))), t);
        }
    }
}
