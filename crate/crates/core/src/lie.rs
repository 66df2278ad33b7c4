//! Structure constants, derivation algebras, commutants and Lie-algebra
//! diagnostics for matrix Lie algebras.

use crate::error::{AlgebraError, Result};
use crate::field::{CycloNum, ExactMatrix};
use crate::octonion::Octonion;
use crate::sample::Sampler;

/// A finite-dimensional algebra: `e_i·e_j = Σ_k sc[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    dim: usize,
    sc: Vec<Vec<Vec<CycloNum>>>,
}

impl AlgebraSpec {
    pub fn new(sc: Vec<Vec<Vec<CycloNum>>>) -> Result<Self> {
        let dim = sc.len();
        if sc.iter().any(|r| r.len() != dim || r.iter().any(|c| c.len() != dim)) {
            return Err(AlgebraError::InvalidShape(format!("structure constants are not {dim}^3")));
        }
        Ok(AlgebraSpec { dim, sc })
    }

    pub fn from_product(dim: usize, mul: impl Fn(usize, usize) -> Vec<CycloNum>) -> Self {
        let sc = (0..dim).map(|i| (0..dim).map(|j| mul(i, j)).collect()).collect();
        AlgebraSpec { dim, sc }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn sc(&self, i: usize, j: usize) -> &[CycloNum] {
        &self.sc[i][j]
    }

    pub fn mul(&self, x: &[CycloNum], y: &[CycloNum]) -> Vec<CycloNum> {
        let mut out = vec![CycloNum::zero(); self.dim];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (o, c) in out.iter_mut().zip(&self.sc[i][j]) {
                    if !c.is_zero() {
                        *o += &(&ab * c);
                    }
                }
            }
        }
        out
    }

    /// `g(e_i e_j) = g(e_i) g(e_j)` on all basis pairs.
    pub fn is_automorphism(&self, g: &ExactMatrix) -> bool {
        let cols: Vec<Vec<CycloNum>> = (0..self.dim).map(|k| g.column(k)).collect();
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| g.mul_vec(&self.sc[i][j]).expect("square") == self.mul(&cols[i], &cols[j]))
        })
    }

    pub fn is_derivation(&self, d: &ExactMatrix) -> bool {
        let cols: Vec<Vec<CycloNum>> = (0..self.dim).map(|k| d.column(k)).collect();
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| {
                let lhs = d.mul_vec(&self.sc[i][j]).expect("square");
                let a = self.mul(&cols[i], &unit(self.dim, j));
                let b = self.mul(&unit(self.dim, i), &cols[j]);
                lhs == a.iter().zip(&b).map(|(x, y)| x + y).collect::<Vec<_>>()
            })
        })
    }
}

fn unit(n: usize, k: usize) -> Vec<CycloNum> {
    let mut v = vec![CycloNum::zero(); n];
    v[k] = CycloNum::one();
    v
}

/// The octonions in the basis `1, d, v₁, v₂, v₃, w₁*, w₂*, w₃*`.
pub fn octonion_algebra() -> AlgebraSpec {
    AlgebraSpec::from_product(8, |i, j| Octonion::basis(i).mul(&Octonion::basis(j)).basis_coords().to_vec())
}

/// The full matrix algebra `M_n` on matrix units `E_{ab}`, index `a·n + b`.
pub fn matrix_algebra(n: usize) -> AlgebraSpec {
    AlgebraSpec::from_product(n * n, |i, j| {
        let (a, b) = (i / n, i % n);
        let (c, d) = (j / n, j % n);
        let mut out = vec![CycloNum::zero(); n * n];
        if b == c {
            out[a * n + d] = CycloNum::one();
        }
        out
    })
}

/// `F × F` with its two orthogonal idempotents.
pub fn split_pair() -> AlgebraSpec {
    AlgebraSpec::from_product(2, |i, j| {
        let mut out = vec![CycloNum::zero(); 2];
        if i == j {
            out[i] = CycloNum::one();
        }
        out
    })
}

/// A subspace of `n × n` matrices given by a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixSpan {
    pub basis: Vec<ExactMatrix>,
}

impl MatrixSpan {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn vectors(&self) -> Vec<Vec<CycloNum>> {
        self.basis.iter().map(|m| m.entries().to_vec()).collect()
    }

    /// Coefficients of `m` in the basis, if `m` lies in the span.
    pub fn coordinates(&self, m: &ExactMatrix) -> Option<Vec<CycloNum>> {
        if self.basis.is_empty() {
            return m.is_zero().then(Vec::new);
        }
        let a = ExactMatrix::from_columns(&self.vectors()).expect("uniform shapes");
        a.solve(m.entries()).expect("matching lengths")
    }

    pub fn combination(&self, coeffs: &[CycloNum]) -> ExactMatrix {
        let (r, c) = (self.basis[0].rows(), self.basis[0].cols());
        self.basis
            .iter()
            .zip(coeffs)
            .fold(ExactMatrix::zeros(r, c), |acc, (m, k)| &acc + &m.scale(k))
    }
}

pub fn lie_bracket(x: &ExactMatrix, y: &ExactMatrix) -> ExactMatrix {
    &(x * y) - &(y * x)
}

/// Solves `D(xy) = D(x)y + xD(y)` on all basis pairs; each kernel vector is
/// rechecked as a derivation.
pub fn derivation_algebra(a: &AlgebraSpec) -> MatrixSpan {
    let n = a.dim;
    // Unknown D[r][c] sits in column r·n + c; one row per (i, j, k).
    let mut sys = ExactMatrix::zeros(n * n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let row = (i * n + j) * n + k;
                for c in 0..n {
                    let s = &a.sc[i][j][c];
                    if !s.is_zero() {
                        let v = sys.get(row, k * n + c) + s;
                        sys.set(row, k * n + c, v);
                    }
                }
                for r in 0..n {
                    let s = &a.sc[r][j][k];
                    if !s.is_zero() {
                        let v = sys.get(row, r * n + i) - s;
                        sys.set(row, r * n + i, v);
                    }
                    let s = &a.sc[i][r][k];
                    if !s.is_zero() {
                        let v = sys.get(row, r * n + j) - s;
                        sys.set(row, r * n + j, v);
                    }
                }
            }
        }
    }
    let basis: Vec<ExactMatrix> = sys
        .kernel()
        .into_iter()
        .map(|v| ExactMatrix::new(n, n, v).expect("n² entries"))
        .collect();
    debug_assert!(basis.iter().all(|d| a.is_derivation(d)));
    MatrixSpan { basis }
}

/// `{D ∈ span : gDg⁻¹ = D}`
pub fn commutant_in(span: &MatrixSpan, g: &ExactMatrix) -> Result<MatrixSpan> {
    let ginv = g.inverse()?;
    if span.basis.is_empty() {
        return Ok(MatrixSpan { basis: vec![] });
    }
    let cols: Vec<Vec<CycloNum>> = span
        .basis
        .iter()
        .map(|d| (&(&(g * d) * &ginv) - d).entries().to_vec())
        .collect();
    let sys = ExactMatrix::from_columns(&cols)?;
    let basis = sys.kernel().iter().map(|c| span.combination(c)).collect();
    Ok(MatrixSpan { basis })
}

pub fn bracket_closed(span: &MatrixSpan) -> bool {
    span.basis.iter().enumerate().all(|(i, x)| {
        span.basis[i + 1..].iter().all(|y| span.coordinates(&lie_bracket(x, y)).is_some())
    })
}

/// Invariants that separate `𝔤₂`, `𝔰𝔩₃` and `𝔰𝔩₂ ⊕ 𝔰𝔩₂` at dimensions 14, 8, 6.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieDiagnostic {
    pub dim: usize,
    pub center_dim: usize,
    pub derived_dim: usize,
    /// Minimal nullity of `ad x` over sampled `x`; the rank for reductive algebras.
    pub rank: usize,
}

/// Matrix of `ad x` on the span's basis coordinates.
fn ad_matrix(span: &MatrixSpan, x: &ExactMatrix) -> ExactMatrix {
    let cols: Vec<Vec<CycloNum>> = span
        .basis
        .iter()
        .map(|y| span.coordinates(&lie_bracket(x, y)).expect("closed span"))
        .collect();
    ExactMatrix::from_columns(&cols).expect("uniform columns")
}

pub fn diagnose(span: &MatrixSpan, seed: u64) -> Result<LieDiagnostic> {
    if !bracket_closed(span) {
        return Err(AlgebraError::NotClosed);
    }
    let n = span.dim();
    if n == 0 {
        return Ok(LieDiagnostic { dim: 0, center_dim: 0, derived_dim: 0, rank: 0 });
    }
    let ads: Vec<ExactMatrix> = span.basis.iter().map(|x| ad_matrix(span, x)).collect();
    // x central ⇔ Σ c_i [B_i, B_j] = 0 for all j, i.e. the stacked (ad B_j)ᵀ rows vanish.
    let center_rows: Vec<Vec<CycloNum>> = (0..n)
        .flat_map(|j| (0..n).map(move |r| (j, r)))
        .map(|(j, r)| (0..n).map(|i| ads[i].get(r, j).clone()).collect())
        .collect();
    let center_dim = ExactMatrix::from_rows(&center_rows)?.kernel().len();
    let brackets: Vec<Vec<CycloNum>> = ads.iter().flat_map(|m| (0..n).map(move |j| m.column(j))).collect();
    let derived_dim = ExactMatrix::from_columns(&brackets)?.rank();
    let mut s = Sampler::derived(seed, "lie-rank");
    let rank = (0..3)
        .map(|_| {
            let coeffs = s.scalars(n);
            let x = span.combination(&coeffs);
            ad_matrix(span, &x).kernel().len()
        })
        .min()
        .expect("three samples");
    Ok(LieDiagnostic { dim: n, center_dim, derived_dim, rank })
}

/// A diagonal action on the octonions: `1` on the unit and `values[k]` on the
/// `k`-th trace-zero basis vector taken in the order `ordering`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalAction {
    pub values: [i64; 7],
    /// Position of each trace-zero basis vector `d, v₁, v₂, v₃, w₁*, w₂*, w₃*`
    /// within `values`: basis vector `k` receives `values[ordering[k]]`.
    pub ordering: [usize; 7],
}

impl DiagonalAction {
    pub fn matrix(&self) -> ExactMatrix {
        let mut d = vec![CycloNum::one()];
        d.extend(self.ordering.iter().map(|&p| CycloNum::from_int(self.values[p])));
        ExactMatrix::diagonal(&d)
    }

    pub fn eigenvalues_in_basis_order(&self) -> [i64; 7] {
        std::array::from_fn(|k| self.values[self.ordering[k]])
    }
}

pub const S3: [i64; 7] = [-1, -1, 1, -1, -1, 1, 1];
pub const S4: [i64; 7] = [1, 1, 1, -1, -1, -1, -1];

/// Outcome of placing a bare 7-tuple on the trace-zero octonions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlacedAction {
    pub action: DiagonalAction,
    pub as_given_is_automorphism: bool,
    /// Number of distinct eigenvalue placements that are automorphisms.
    pub automorphism_placements: usize,
}

/// Uses the tuple in the basis order if that is an automorphism; otherwise the
/// first automorphism placement met in lexicographic order of orderings.
pub fn place_diagonal(values: [i64; 7]) -> Option<PlacedAction> {
    let oct = octonion_algebra();
    let identity = DiagonalAction { values, ordering: std::array::from_fn(|k| k) };
    let as_given = oct.is_automorphism(&identity.matrix());
    let mut seen: Vec<[i64; 7]> = Vec::new();
    let mut first = None;
    for p in permutations7() {
        let action = DiagonalAction { values, ordering: p };
        let ev = action.eigenvalues_in_basis_order();
        if seen.contains(&ev) {
            continue;
        }
        seen.push(ev);
        if oct.is_automorphism(&action.matrix()) && first.is_none() {
            first = Some(action);
        }
    }
    let count = seen
        .iter()
        .filter(|ev| {
            let m = DiagonalAction { values: **ev, ordering: std::array::from_fn(|k| k) };
            oct.is_automorphism(&m.matrix())
        })
        .count();
    let chosen = if as_given { Some(identity) } else { first };
    chosen.map(|action| PlacedAction { action, as_given_is_automorphism: as_given, automorphism_placements: count })
}

fn permutations7() -> Vec<[usize; 7]> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool; 7], out: &mut Vec<[usize; 7]>) {
        if cur.len() == 7 {
            out.push(std::array::from_fn(|k| cur[k]));
            return;
        }
        for i in 0..7 {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut [false; 7], &mut out);
    out
}

/// `Der(𝕆)`, computed once.
pub fn octonion_derivations() -> &'static MatrixSpan {
    static CELL: std::sync::OnceLock<MatrixSpan> = std::sync::OnceLock::new();
    CELL.get_or_init(|| derivation_algebra(&octonion_algebra()))
}

/// Every distinct placement of the tuple that is an automorphism, with the
/// dimension of its commutant in `Der(𝕆)`.
pub fn commutant_dims_over_placements(values: [i64; 7]) -> Result<Vec<([i64; 7], usize)>> {
    let oct = octonion_algebra();
    let der = octonion_derivations();
    let mut seen: Vec<[i64; 7]> = Vec::new();
    let mut out = Vec::new();
    for p in permutations7() {
        let action = DiagonalAction { values, ordering: p };
        let ev = action.eigenvalues_in_basis_order();
        if seen.contains(&ev) {
            continue;
        }
        seen.push(ev);
        let m = action.matrix();
        if oct.is_automorphism(&m) {
            out.push((ev, commutant_in(der, &m)?.dim()));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::octonion::trilinear_t;

    #[test]
    fn derivation_dimensions() {
        let der = octonion_derivations();
        assert_eq!(der.dim(), 14);
        let oct = octonion_algebra();
        assert!(der.basis.iter().all(|d| oct.is_derivation(d)));
        assert_eq!(derivation_algebra(&split_pair()).dim(), 0);
        assert_eq!(derivation_algebra(&matrix_algebra(3)).dim(), 8);
    }

    #[test]
    fn derivations_kill_unit_and_preserve_trace_zero() {
        for d in &octonion_derivations().basis {
            assert!(d.column(0).iter().all(CycloNum::is_zero));
            assert!(d.row(0).iter().all(CycloNum::is_zero));
        }
    }

    #[test]
    fn infinitesimal_trilinear_invariance() {
        let der = octonion_derivations();
        let mut s = Sampler::new(31);
        for _ in 0..5 {
            let d = der.combination(&s.scalars(14));
            let xs: Vec<Octonion> = (0..3).map(|_| Octonion::random(&mut s)).collect();
            let dx = |o: &Octonion| Octonion::from_basis_coords(&d.mul_vec(&o.basis_coords()).unwrap());
            let total = &(&trilinear_t(&dx(&xs[0]), &xs[1], &xs[2]) + &trilinear_t(&xs[0], &dx(&xs[1]), &xs[2]))
                + &trilinear_t(&xs[0], &xs[1], &dx(&xs[2]));
            assert!(total.is_zero());
        }
    }

    #[test]
    fn g2_diagnostic() {
        let diag = diagnose(octonion_derivations(), 1).unwrap();
        assert_eq!(diag, LieDiagnostic { dim: 14, center_dim: 0, derived_dim: 14, rank: 2 });
        assert!(bracket_closed(octonion_derivations()));
        let sl3 = derivation_algebra(&matrix_algebra(3));
        assert_eq!(diagnose(&sl3, 1).unwrap(), LieDiagnostic { dim: 8, center_dim: 0, derived_dim: 8, rank: 2 });
    }

    #[test]
    fn commutants() {
        let der = octonion_derivations();
        assert_eq!(commutant_in(der, &ExactMatrix::identity(8)).unwrap().dim(), 14);
        assert_eq!(commutant_in(der, &ExactMatrix::zeros(8, 8)), Err(AlgebraError::Singular));
        let s4 = place_diagonal(S4).unwrap();
        let c = commutant_in(der, &s4.action.matrix()).unwrap();
        let g = s4.action.matrix();
        let ginv = g.inverse().unwrap();
        assert!(c.basis.iter().all(|d| &(&g * d) * &ginv == *d));
        assert!(bracket_closed(&c));
        assert_eq!(c.dim(), 6);
        let open = MatrixSpan { basis: vec![der.basis[0].clone(), der.basis[1].clone()] };
        if !bracket_closed(&open) {
            assert_eq!(diagnose(&open, 0), Err(AlgebraError::NotClosed));
        }
    }

    #[test]
    fn placements_of_bare_tuples() {
        for values in [S3, S4] {
            let placed = place_diagonal(values).unwrap();
            assert!(!placed.as_given_is_automorphism);
            assert!(placed.automorphism_placements > 0);
            let dims = commutant_dims_over_placements(values).unwrap();
            assert_eq!(dims.len(), placed.automorphism_placements);
            assert!(dims.iter().all(|(_, d)| *d == 6));
        }
    }
}
