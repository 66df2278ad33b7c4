//! Endoscopic elements of `Spin(8)` and `G₂`, their embeddings, and the
//! coefficients `ι(G, G′)` assembled from configured cardinalities.

use serde::Deserialize;

use crate::clifford::{bivector_exp, CliffordElement};
use crate::error::{AlgebraError, Result};
use crate::field::{CycloNum, ExactMatrix, Rational};
use crate::lie::octonion_algebra;
use crate::octonion::Octonion;
use crate::so8;
use crate::triality::{self, FixedSubalgebra};
use crate::weyl::{cartan_determinant, CartanType};

fn blade(i: usize, j: usize) -> u32 {
    (1 << (i - 1)) | (1 << (j - 1))
}

/// `s₀ = exp(π/3·e₂e₆)·exp(−π/3·e₃e₇)`
pub fn build_s0() -> CliffordElement {
    bivector_exp(&so8::space(), &[(Rational::new(1, 3), blade(2, 6)), (Rational::new(-1, 3), blade(3, 7))])
        .expect("e2e6 and e3e7 commute")
}

/// `s₄′ = exp(−π/4·e₃e₅)·exp(−π/4·e₄e₆)·exp(−π/4·e₁e₃)·exp(−π/4·e₂e₄)`
pub fn build_s4prime() -> CliffordElement {
    let sp = so8::space();
    [(3, 5), (4, 6), (1, 3), (2, 4)].iter().fold(CliffordElement::one(&sp), |acc, &(i, j)| {
        let f = bivector_exp(&sp, &[(Rational::new(-1, 4), blade(i, j))]).expect("unit bivector");
        &acc * &f
    })
}

/// `diag(1, ω, ω⁻¹, 1, 1, ω⁻¹, ω, 1)`
pub fn s0_expected_diagonal() -> ExactMatrix {
    let w = CycloNum::omega();
    let wi = w.inv().expect("ω ≠ 0");
    let one = CycloNum::one();
    ExactMatrix::diagonal(&[one.clone(), w.clone(), wi.clone(), one.clone(), one.clone(), wi, w, one])
}

/// Basis `e₁, e₂ − ie₆, e₃ − ie₇, e₄, e₅, e₂ + ie₆, e₃ + ie₇, e₈` (columns).
/// The rotated planes `⟨e₂, e₆⟩`, `⟨e₃, e₇⟩` have no real eigenvectors, and an
/// eigenvector of an orthogonal map with eigenvalue `ω` is isotropic, so
/// `ρ(s₀)` is diagonal only in a basis of this kind.
pub fn s0_isotropic_basis() -> ExactMatrix {
    let i = CycloNum::i();
    let mut p = ExactMatrix::zeros(8, 8);
    for k in [0, 3, 4, 7] {
        p.set(k, k, CycloNum::one());
    }
    for (col, a, b, sign) in [(1, 1, 5, -1), (2, 2, 6, -1), (5, 1, 5, 1), (6, 2, 6, 1)] {
        p.set(a, col, CycloNum::one());
        p.set(b, col, &i * &CycloNum::from_int(sign));
    }
    p
}

/// `ρ(s₀)` written in [`s0_isotropic_basis`].
pub fn s0_in_isotropic_basis() -> ExactMatrix {
    let p = s0_isotropic_basis();
    let rho = build_s0().vector_rep().expect("s0 is spin");
    &(&p.inverse().expect("basis") * &rho) * &p
}

/// `x ↦ diag(x, 1, ᵗx⁻¹)` on `v₁, v₂, v₃, d, w₁*, w₂*, w₃*`.
pub fn xi3_embed(x: &ExactMatrix) -> Result<ExactMatrix> {
    if x.rows() != 3 || x.cols() != 3 {
        return Err(AlgebraError::DimensionMismatch { expected: "3x3".into(), found: format!("{}x{}", x.rows(), x.cols()) });
    }
    if !x.det()?.is_one() {
        return Err(AlgebraError::NotUnimodular);
    }
    let xit = x.inverse()?.transpose();
    Ok(ExactMatrix::from_fn(7, 7, |r, c| match (r, c) {
        (0..=2, 0..=2) => x.get(r, c).clone(),
        (3, 3) => CycloNum::one(),
        (4..=6, 4..=6) => xit.get(r - 4, c - 4).clone(),
        _ => CycloNum::zero(),
    }))
}

/// The 8×8 matrix on `1, d, v, w*` extending a 7×7 block from [`xi3_embed`].
pub fn xi3_on_octonions(m7: &ExactMatrix) -> ExactMatrix {
    // 7×7 order v₁ v₂ v₃ d w₁ w₂ w₃ → octonion basis slots 2 3 4 1 5 6 7.
    let slot = [2, 3, 4, 1, 5, 6, 7];
    let mut m = ExactMatrix::zeros(8, 8);
    m.set(0, 0, CycloNum::one());
    for r in 0..7 {
        for c in 0..7 {
            m.set(slot[r], slot[c], m7.get(r, c).clone());
        }
    }
    m
}

/// 2×2 matrices as split quaternions inside the Zorn model:
/// `[[p, q], [r, s]] ↦ (p, q·e₁; r·e₁*, s)`.
fn quaternion(m: &[CycloNum]) -> Octonion {
    let z = CycloNum::zero;
    Octonion::new(m[0].clone(), [m[1].clone(), z(), z()], [m[2].clone(), z(), z()], m[3].clone())
}

/// `ℓ = (0, e₂; e₂*, 0)`, so that `𝕆 = ℍ ⊕ ℓℍ`.
fn ell() -> Octonion {
    let (z, o) = (CycloNum::zero, CycloNum::one);
    Octonion::new(z(), [z(), o(), z()], [z(), o(), z()], z())
}

fn mat2(m: &[CycloNum]) -> ExactMatrix {
    ExactMatrix::new(2, 2, m.to_vec()).expect("four entries")
}

fn adjugate(m: &ExactMatrix) -> ExactMatrix {
    let e = m.entries();
    ExactMatrix::new(2, 2, vec![e[3].clone(), -&e[1], -&e[2], e[0].clone()]).expect("four entries")
}

/// `(x₁, x₂)·(v, ℓX) = (x₁ v x̄₁, ℓ·x₁ X x̄₂)` as an 8×8 matrix on the basis
/// `1, d, v, w*`; `x̄` is the quaternion conjugate, the adjugate.
pub fn so4_action(x1: &ExactMatrix, x2: &ExactMatrix) -> Result<ExactMatrix> {
    for x in [x1, x2] {
        if x.rows() != 2 || x.cols() != 2 {
            return Err(AlgebraError::DimensionMismatch { expected: "2x2".into(), found: format!("{}x{}", x.rows(), x.cols()) });
        }
        let n = x.det()?;
        if !n.is_one() {
            return Err(AlgebraError::NonUnitNorm(format!("N(x) = {n}")));
        }
    }
    let units: Vec<Vec<CycloNum>> = (0..4)
        .map(|k| (0..4).map(|i| if i == k { CycloNum::one() } else { CycloNum::zero() }).collect())
        .collect();
    let embed = |k: usize, m: &[CycloNum]| -> Vec<CycloNum> {
        let q = quaternion(m);
        let o = if k < 4 { q } else { ell().mul(&q) };
        o.basis_coords().to_vec()
    };
    let p_cols: Vec<Vec<CycloNum>> = (0..8).map(|k| embed(k, &units[k % 4])).collect();
    let p = ExactMatrix::from_columns(&p_cols)?;
    let (a1, a2) = (adjugate(x1), adjugate(x2));
    let image_cols: Vec<Vec<CycloNum>> = (0..8)
        .map(|k| {
            let m = mat2(&units[k % 4]);
            let img = if k < 4 { &(x1 * &m) * &a1 } else { &(x1 * &m) * &a2 };
            embed(k, img.entries())
        })
        .collect();
    let image = ExactMatrix::from_columns(&image_cols)?;
    Ok(&image * &p.inverse()?)
}

/// The cardinalities entering `ι(G, G′)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientInput {
    pub ker1_g: u64,
    pub ker1_gprime: u64,
    pub z_hat_gamma: u64,
    pub out_order: u64,
    pub pi0_kappa: u64,
}

/// `|π₀(κ)|⁻¹ · k(G, G′) · |Z̄(Ĝ′)^Γ|⁻¹ · |Out_G(G′)|⁻¹` with
/// `k(G, G′) = |ker¹(G′)| / |ker¹(G)|`.
pub fn iota_coefficient(c: &CoefficientInput) -> Result<Rational> {
    let all = [c.ker1_g, c.ker1_gprime, c.z_hat_gamma, c.out_order, c.pi0_kappa];
    if all.contains(&0) {
        return Err(AlgebraError::Config("coefficient cardinalities must be positive".into()));
    }
    let num = c.ker1_gprime as i64;
    let den = (c.ker1_g * c.z_hat_gamma * c.out_order * c.pi0_kappa) as i64;
    Ok(Rational::new(num, den))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Cardinality {
    Count(u64),
    Reference(String),
}

impl Cardinality {
    fn resolve(&self) -> Result<u64> {
        match self {
            Cardinality::Count(n) => Ok(*n),
            Cardinality::Reference(s) => {
                let t = s
                    .strip_prefix("cartan:")
                    .ok_or_else(|| AlgebraError::Config(format!("unknown cardinality reference {s}")))?;
                Ok(cartan_determinant(t.parse::<CartanType>()?) as u64)
            }
        }
    }
}

#[derive(Deserialize)]
struct RawDatum {
    name: String,
    s: String,
    #[serde(rename = "ker1_G")]
    ker1_g: u64,
    #[serde(rename = "ker1_Gprime")]
    ker1_gprime: u64,
    z_hat_gamma: Cardinality,
    out_order: u64,
    pi0_kappa: u64,
    expected: Option<String>,
    expected_fixed_dim: usize,
    note: String,
}

#[derive(Deserialize)]
struct RawConfig {
    twisted: Vec<RawDatum>,
    standard: Vec<RawDatum>,
}

/// The semisimple element of a datum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SElement {
    Identity,
    Spin(String),
    Tuple([i64; 7]),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndoscopicDatum {
    pub name: String,
    pub s_element: SElement,
    pub twisted: bool,
    pub expected_fixed_dim: usize,
    pub input: CoefficientInput,
    pub coefficient: Rational,
    /// The printed value of `ι`, when there is one.
    pub expected: Option<Rational>,
    pub note: String,
}

pub const DEFAULT_CONFIG: &str = include_str!("../data/coefficients.json");

fn parse_s(s: &str) -> Result<SElement> {
    match s {
        "1" => Ok(SElement::Identity),
        "s0" | "s4'" => Ok(SElement::Spin(s.to_string())),
        "s3" => Ok(SElement::Tuple(crate::lie::S3)),
        "s4" => Ok(SElement::Tuple(crate::lie::S4)),
        _ => Err(AlgebraError::Config(format!("unknown element {s}"))),
    }
}

/// Parses a coefficient table, returning `(twisted, standard)` data.
pub fn load_config(json: &str) -> Result<(Vec<EndoscopicDatum>, Vec<EndoscopicDatum>)> {
    let raw: RawConfig = serde_json::from_str(json).map_err(|e| AlgebraError::Config(e.to_string()))?;
    let build = |r: RawDatum, twisted: bool| -> Result<EndoscopicDatum> {
        let input = CoefficientInput {
            ker1_g: r.ker1_g,
            ker1_gprime: r.ker1_gprime,
            z_hat_gamma: r.z_hat_gamma.resolve()?,
            out_order: r.out_order,
            pi0_kappa: r.pi0_kappa,
        };
        Ok(EndoscopicDatum {
            name: r.name,
            s_element: parse_s(&r.s)?,
            twisted,
            expected_fixed_dim: r.expected_fixed_dim,
            coefficient: iota_coefficient(&input)?,
            input,
            expected: r.expected.map(|e| e.parse()).transpose()?,
            note: r.note,
        })
    };
    let twisted = raw.twisted.into_iter().map(|r| build(r, true)).collect::<Result<_>>()?;
    let standard = raw.standard.into_iter().map(|r| build(r, false)).collect::<Result<_>>()?;
    Ok((twisted, standard))
}

pub fn default_data() -> (Vec<EndoscopicDatum>, Vec<EndoscopicDatum>) {
    load_config(DEFAULT_CONFIG).expect("shipped configuration parses")
}

pub fn spin_element(name: &str) -> Option<CliffordElement> {
    match name {
        "s0" => Some(build_s0()),
        "s4'" => Some(build_s4prime()),
        _ => None,
    }
}

/// `ker(Ad(s)∘dθ − Id)` for the standard θ.
pub fn twisted_fixed(s: &CliffordElement) -> Result<FixedSubalgebra> {
    triality::fixed_subalgebra(&triality::twisted_by(s, triality::standard_dtheta()))
}

/// Whether `ξ₃(x)`, extended by `1` on the unit, preserves the octonion product.
pub fn xi3_is_automorphism(x: &ExactMatrix) -> Result<bool> {
    Ok(octonion_algebra().is_automorphism(&xi3_on_octonions(&xi3_embed(x)?)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::Sampler;

    fn unimodular(s: &mut Sampler) -> ExactMatrix {
        let a = ExactMatrix::from_fn(3, 3, |i, j| if i < j { s.scalar() } else if i == j { CycloNum::one() } else { CycloNum::zero() });
        let b = ExactMatrix::from_fn(3, 3, |i, j| if i > j { s.scalar() } else if i == j { CycloNum::one() } else { CycloNum::zero() });
        &a * &b
    }

    #[test]
    fn s0_rotation_and_diagonal() {
        let s0 = build_s0();
        assert!(s0.is_spin());
        let e26 = CliffordElement::blade(&so8::space(), blade(2, 6), CycloNum::one());
        let e37 = CliffordElement::blade(&so8::space(), blade(3, 7), CycloNum::one());
        assert_eq!(&e26 * &e37, &e37 * &e26);
        let rho = s0.vector_rep().unwrap();
        assert_eq!(rho.order(12), Some(3));
        assert_ne!(rho, s0_expected_diagonal());
        assert_eq!(s0_in_isotropic_basis(), s0_expected_diagonal());
    }

    #[test]
    fn s4prime_is_spin_of_order_three() {
        let s = build_s4prime();
        assert!(s.is_spin());
        let rho = s.vector_rep().unwrap();
        assert_eq!(rho.order(24), Some(3));
        assert!(!rho.pow(8).is_identity());
    }

    #[test]
    fn xi3() {
        assert!(xi3_embed(&ExactMatrix::identity(3)).unwrap().is_identity());
        let d = ExactMatrix::diagonal(&[-1, -1, 1].map(CycloNum::from_int));
        let expected = ExactMatrix::diagonal(&[-1, -1, 1, 1, -1, -1, 1].map(CycloNum::from_int));
        assert_eq!(xi3_embed(&d).unwrap(), expected);
        assert_eq!(xi3_embed(&ExactMatrix::identity(3).scale(&CycloNum::from_int(2))), Err(AlgebraError::NotUnimodular));
        let mut s = Sampler::new(8);
        for _ in 0..4 {
            let (x, y) = (unimodular(&mut s), unimodular(&mut s));
            assert_eq!(xi3_embed(&(&x * &y)).unwrap(), &xi3_embed(&x).unwrap() * &xi3_embed(&y).unwrap());
            assert!(xi3_is_automorphism(&x).unwrap());
        }
    }

    #[test]
    fn so4() {
        let one = ExactMatrix::identity(2);
        let minus = one.scale(&CycloNum::from_int(-1));
        assert!(so4_action(&one, &one).unwrap().is_identity());
        assert!(so4_action(&minus, &minus).unwrap().is_identity());
        assert!(!so4_action(&minus, &one).unwrap().is_identity());
        assert!(matches!(so4_action(&minus.scale(&CycloNum::from_int(2)), &one), Err(AlgebraError::NonUnitNorm(_))));
        let oct = octonion_algebra();
        let mut s = Sampler::new(3);
        for _ in 0..4 {
            let (p, q) = (s.scalar(), s.scalar());
            let x1 = &ExactMatrix::new(2, 2, vec![CycloNum::one(), p, CycloNum::zero(), CycloNum::one()]).unwrap()
                * &ExactMatrix::new(2, 2, vec![CycloNum::one(), CycloNum::zero(), q, CycloNum::one()]).unwrap();
            let r = s.nonzero_scalar();
            let x2 = ExactMatrix::diagonal(&[r.clone(), r.inv().unwrap()]);
            assert!(oct.is_automorphism(&so4_action(&x1, &x2).unwrap()));
        }
    }

    #[test]
    fn twisted_fixed_points() {
        let one = CliffordElement::one(&so8::space());
        assert_eq!(twisted_fixed(&one).unwrap().dim, 14);
        let f0 = twisted_fixed(&build_s0()).unwrap();
        assert_eq!(f0.dim, 8);
        assert!(f0.closed);
        let s4 = build_s4prime();
        assert!(matches!(twisted_fixed(&s4), Err(AlgebraError::OrderCheck(_))));
        let auto = triality::twisted_by(&s4, triality::standard_dtheta());
        assert_eq!(auto.order(12), None);
        assert!(triality::fixed_points(&auto).closed);
    }

    #[test]
    fn coefficients() {
        let ones = CoefficientInput { ker1_g: 1, ker1_gprime: 1, z_hat_gamma: 1, out_order: 1, pi0_kappa: 1 };
        assert_eq!(iota_coefficient(&ones).unwrap(), Rational::one());
        assert!(iota_coefficient(&CoefficientInput { out_order: 0, ..ones }).is_err());
        let (twisted, standard) = default_data();
        let got: Vec<Rational> = twisted.iter().map(|d| d.coefficient.clone()).collect();
        assert_eq!(got, vec![Rational::one(), Rational::new(1, 4), Rational::new(1, 3)]);
        assert!(twisted.iter().all(|d| d.expected.as_ref() == Some(&d.coefficient)));
        assert_eq!(standard[0].coefficient, Rational::one());
        assert!(standard[1..].iter().all(|d| d.expected.is_none()));
        assert!(load_config("{\"twisted\": 3}").is_err());
    }
}
