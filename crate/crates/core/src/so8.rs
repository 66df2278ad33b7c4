//! The Lie algebra spanned by the 28 basis bivectors `eᵢeⱼ` (`i < j`) of
//! `C(ℂ⁸, q)`, with its bracket, its action on vectors, and conjugation by
//! spin elements.

use std::sync::{Arc, OnceLock};

use crate::clifford::{blade_product, grade, CliffordElement, QuadraticSpace};
use crate::field::{CycloNum, ExactMatrix};

pub const DIM: usize = 28;

/// Index pairs `(i, j)`, `i < j`, in lexicographic order.
pub fn basis_pairs() -> &'static [(usize, usize)] {
    static CELL: OnceLock<Vec<(usize, usize)>> = OnceLock::new();
    CELL.get_or_init(|| (0..8).flat_map(|i| (i + 1..8).map(move |j| (i, j))).collect())
}

pub fn mask(k: usize) -> u32 {
    let (i, j) = basis_pairs()[k];
    (1 << i) | (1 << j)
}

pub fn index_of_mask(m: u32) -> Option<usize> {
    basis_pairs().iter().position(|&(i, j)| (1 << i) | (1 << j) == m)
}

pub fn space() -> Arc<QuadraticSpace> {
    QuadraticSpace::standard(8)
}

pub fn basis_element(k: usize) -> CliffordElement {
    let (i, j) = basis_pairs()[k];
    CliffordElement::bivector(&space(), i, j)
}

pub fn element(coords: &[CycloNum]) -> CliffordElement {
    let sp = space();
    coords.iter().enumerate().fold(CliffordElement::zero(&sp), |acc, (k, c)| {
        &acc + &CliffordElement::blade(&sp, mask(k), c.clone())
    })
}

/// Coordinates of a pure bivector; `None` if other grades occur.
pub fn coords(x: &CliffordElement) -> Option<Vec<CycloNum>> {
    if x.terms().keys().any(|&m| grade(m) != 2) {
        return None;
    }
    Some((0..DIM).map(|k| x.coeff(mask(k))).collect())
}

/// `[B_a, B_b] = c·B_k` or zero, for every pair of basis bivectors.
pub fn structure_constants() -> &'static Vec<Vec<Option<(usize, CycloNum)>>> {
    static CELL: OnceLock<Vec<Vec<Option<(usize, CycloNum)>>>> = OnceLock::new();
    CELL.get_or_init(|| {
        let sp = space();
        (0..DIM)
            .map(|a| {
                (0..DIM)
                    .map(|b| {
                        let (s1, m) = blade_product(&sp, mask(a), mask(b));
                        let (s2, _) = blade_product(&sp, mask(b), mask(a));
                        let c = &s1 - &s2;
                        if c.is_zero() {
                            None
                        } else {
                            Some((index_of_mask(m).expect("commutator of bivectors is a bivector"), c))
                        }
                    })
                    .collect()
            })
            .collect()
    })
}

/// Bracket in coordinates.
pub fn bracket(u: &[CycloNum], w: &[CycloNum]) -> Vec<CycloNum> {
    let sc = structure_constants();
    let mut out = vec![CycloNum::zero(); DIM];
    for (a, ua) in u.iter().enumerate() {
        if ua.is_zero() {
            continue;
        }
        for (b, wb) in w.iter().enumerate() {
            if wb.is_zero() {
                continue;
            }
            if let Some((k, c)) = &sc[a][b] {
                out[*k] += &(&(ua * wb) * c);
            }
        }
    }
    out
}

/// `dρ(B)v = Bv − vB` as an 8×8 matrix.
pub fn d_rho(b: &CliffordElement) -> ExactMatrix {
    let sp = space();
    let cols: Vec<Vec<CycloNum>> = (0..8)
        .map(|j| b.commutator(&CliffordElement::basis_vector(&sp, j)).vector_coords())
        .collect();
    ExactMatrix::from_columns(&cols).expect("eight columns")
}

/// The 64×28 matrix with columns `vec(dρ(B_k))`, row-major.
pub fn d_rho_system() -> &'static ExactMatrix {
    static CELL: OnceLock<ExactMatrix> = OnceLock::new();
    CELL.get_or_init(|| {
        let cols: Vec<Vec<CycloNum>> = (0..DIM).map(|k| d_rho(&basis_element(k)).entries().to_vec()).collect();
        ExactMatrix::from_columns(&cols).expect("uniform columns")
    })
}

/// Matrix of `B ↦ s·B·s̄` on the bivector basis.
pub fn ad_matrix(s: &CliffordElement) -> ExactMatrix {
    let sb = s.bar();
    let cols: Vec<Vec<CycloNum>> = (0..DIM)
        .map(|k| coords(&(&(s * &basis_element(k)) * &sb)).expect("spin conjugation preserves bivectors"))
        .collect();
    ExactMatrix::from_columns(&cols).expect("uniform columns")
}

/// True when the span of the given coordinate vectors is closed under the bracket.
pub fn span_is_closed(basis: &[Vec<CycloNum>]) -> bool {
    if basis.is_empty() {
        return true;
    }
    let m = ExactMatrix::from_columns(basis).expect("uniform columns");
    let r = m.rank();
    let mut brackets = Vec::new();
    for (a, u) in basis.iter().enumerate() {
        for w in &basis[a + 1..] {
            brackets.push(bracket(u, w));
        }
    }
    if brackets.is_empty() {
        return true;
    }
    let all: Vec<Vec<CycloNum>> = basis.iter().cloned().chain(brackets).collect();
    ExactMatrix::from_columns(&all).expect("uniform columns").rank() == r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_match_clifford_commutators() {
        for a in 0..DIM {
            for b in 0..DIM {
                let direct = coords(&basis_element(a).commutator(&basis_element(b))).unwrap();
                let mut u = vec![CycloNum::zero(); DIM];
                let mut w = vec![CycloNum::zero(); DIM];
                u[a] = CycloNum::one();
                w[b] = CycloNum::one();
                assert_eq!(bracket(&u, &w), direct);
            }
        }
    }

    #[test]
    fn d_rho_is_a_representation() {
        for a in (0..DIM).step_by(3) {
            for b in (0..DIM).step_by(5) {
                let (x, y) = (basis_element(a), basis_element(b));
                let lhs = d_rho(&x.commutator(&y));
                let (dx, dy) = (d_rho(&x), d_rho(&y));
                assert_eq!(lhs, &(&dx * &dy) - &(&dy * &dx));
            }
        }
        assert_eq!(d_rho_system().rank(), DIM);
    }

    #[test]
    fn ad_of_identity_and_closure() {
        assert!(ad_matrix(&CliffordElement::one(&space())).is_identity());
        let all: Vec<Vec<CycloNum>> = ExactMatrix::identity(DIM).entries().chunks(DIM).map(<[_]>::to_vec).collect();
        assert!(span_is_closed(&all));
        let pair = vec![all[mask_index(0, 1)].clone(), all[mask_index(0, 2)].clone()];
        assert!(!span_is_closed(&pair));
    }

    fn mask_index(i: usize, j: usize) -> usize {
        index_of_mask((1 << i) | (1 << j)).unwrap()
    }
}
