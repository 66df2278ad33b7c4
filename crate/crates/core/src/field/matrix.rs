//! Dense matrices over [`CycloNum`] with exact rank, kernel and solve.
//!
//! Elimination is fraction-free in the Bareiss sense: every row update is
//! `(p·rᵢ − f·rₚ)/p_prev`, with the division by the previous pivot done
//! through a single cached inverse per step. Zero multipliers and zero
//! entries are skipped, which matters for the large sparse systems coming
//! from the spinor module.

use std::ops::{Add, Mul, Neg, Sub};

use serde_json::{json, Value};

use super::CycloNum;
use crate::error::{AlgebraError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<CycloNum>,
}

fn mismatch(expected: impl ToString, found: impl ToString) -> AlgebraError {
    AlgebraError::DimensionMismatch {
        expected: expected.to_string(),
        found: found.to_string(),
    }
}

/// Row echelon form together with its pivot columns.
struct Echelon {
    m: ExactMatrix,
    pivots: Vec<usize>,
    swaps: usize,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<CycloNum>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(mismatch(rows * cols, data.len()));
        }
        Ok(ExactMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![CycloNum::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { CycloNum::one() } else { CycloNum::zero() })
    }

    pub fn diagonal(d: &[CycloNum]) -> Self {
        let n = d.len();
        Self::from_fn(n, n, |i, j| if i == j { d[i].clone() } else { CycloNum::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> CycloNum) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, data }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_fn(rows.len(), cols, |i, j| CycloNum::from_int(rows[i][j]))
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<CycloNum>]) -> Result<Self> {
        let rows = cols.first().map_or(0, Vec::len);
        if let Some(bad) = cols.iter().find(|c| c.len() != rows) {
            return Err(mismatch(rows, bad.len()));
        }
        Ok(Self::from_fn(rows, cols.len(), |i, j| cols[j][i].clone()))
    }

    pub fn from_rows(rows: &[Vec<CycloNum>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(mismatch(cols, bad.len()));
        }
        Ok(ExactMatrix { rows: rows.len(), cols, data: rows.concat() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &CycloNum {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycloNum) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[CycloNum] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[CycloNum] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<CycloNum> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycloNum::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.get(i, j);
                    if i == j {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn scale(&self, s: &CycloNum) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn trace(&self) -> CycloNum {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn try_mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != rhs.rows {
            return Err(mismatch(self.cols, rhs.rows));
        }
        let mut out = ExactMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[CycloNum]) -> Result<Vec<CycloNum>> {
        if v.len() != self.cols {
            return Err(mismatch(self.cols, v.len()));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = CycloNum::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn pow(&self, n: u32) -> ExactMatrix {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut acc = ExactMatrix::identity(self.rows);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Smallest `k ≤ max` with `selfᵏ = I`.
    pub fn order(&self, max: u32) -> Option<u32> {
        let mut acc = self.clone();
        for k in 1..=max {
            if acc.is_identity() {
                return Some(k);
            }
            acc = &acc * self;
        }
        None
    }

    /// `[self | other]`
    pub fn hstack(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.rows != other.rows {
            return Err(mismatch(self.rows, other.rows));
        }
        Ok(Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        }))
    }

    fn echelon(&self) -> Echelon {
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut pivots = Vec::new();
        let mut swaps = 0;
        let mut prev_inv = CycloNum::one();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    m.data.swap(p * cols + j, r * cols + j);
                }
                swaps += 1;
            }
            let piv = m.get(r, c).clone();
            let ratio = &piv * &prev_inv;
            let unit_ratio = ratio.is_one();
            let pivot_row: Vec<CycloNum> = m.row(r)[c + 1..].to_vec();
            for i in r + 1..rows {
                let f = std::mem::take(&mut m.data[i * cols + c]);
                let g = (!f.is_zero()).then(|| &f * &prev_inv);
                for (off, pr) in pivot_row.iter().enumerate() {
                    let slot = &mut m.data[i * cols + c + 1 + off];
                    if !unit_ratio && !slot.is_zero() {
                        *slot = &*slot * &ratio;
                    }
                    if let Some(g) = &g {
                        if !pr.is_zero() {
                            *slot -= &(g * pr);
                        }
                    }
                }
            }
            prev_inv = piv.inv().expect("pivot is nonzero");
            pivots.push(c);
            r += 1;
        }
        Echelon { m, pivots, swaps }
    }

    /// Reduced row echelon form and pivot columns.
    fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let Echelon { mut m, pivots, .. } = self.echelon();
        let cols = m.cols;
        for (r, &c) in pivots.iter().enumerate().rev() {
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in c..cols {
                let v = m.get(r, j);
                if !v.is_zero() {
                    let nv = v * &inv;
                    m.set(r, j, nv);
                }
            }
            let pivot_row: Vec<CycloNum> = m.row(r).to_vec();
            for i in 0..r {
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..cols {
                    if !pivot_row[j].is_zero() {
                        m.data[i * cols + j] -= &(&f * &pivot_row[j]);
                    }
                }
            }
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Basis of the null space, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<CycloNum>> {
        let (m, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![CycloNum::zero(); self.cols];
                v[f] = CycloNum::one();
                for (r, &c) in pivots.iter().enumerate() {
                    v[c] = -m.get(r, f);
                }
                v
            })
            .collect()
    }

    /// Solves `self · X = rhs` column by column; `None` when inconsistent.
    pub fn solve_many(&self, rhs: &ExactMatrix) -> Result<Option<ExactMatrix>> {
        if rhs.rows != self.rows {
            return Err(mismatch(self.rows, rhs.rows));
        }
        let aug = self.hstack(rhs)?;
        let (m, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return Ok(None);
        }
        let mut x = ExactMatrix::zeros(self.cols, rhs.cols);
        for (r, &c) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(c, j, m.get(r, self.cols + j).clone());
            }
        }
        Ok(Some(x))
    }

    pub fn solve(&self, rhs: &[CycloNum]) -> Result<Option<Vec<CycloNum>>> {
        let b = ExactMatrix::from_columns(&[rhs.to_vec()])?;
        Ok(self.solve_many(&b)?.map(|x| x.column(0)))
    }

    pub fn det(&self) -> Result<CycloNum> {
        if !self.is_square() {
            return Err(mismatch(self.rows, self.cols));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(CycloNum::one());
        }
        let e = self.echelon();
        if e.pivots.len() < n {
            return Ok(CycloNum::zero());
        }
        let last = e.m.get(n - 1, n - 1).clone();
        Ok(if e.swaps % 2 == 0 { last } else { -last })
    }

    pub fn inverse(&self) -> Result<ExactMatrix> {
        if !self.is_square() {
            return Err(mismatch(self.rows, self.cols));
        }
        self.solve_many(&ExactMatrix::identity(self.rows))?
            .ok_or(AlgebraError::Singular)
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Vec<String>> =
            self.data.iter().map(CycloNum::to_fraction_strings).collect();
        json!({ "rows": self.rows, "cols": self.cols, "entries": entries })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| AlgebraError::Parse(format!("matrix JSON: {what}"));
        let dim = |k: &str| {
            v.get(k)
                .and_then(Value::as_u64)
                .map(|n| n as usize)
                .ok_or_else(|| bad(k))
        };
        let (rows, cols) = (dim("rows")?, dim("cols")?);
        let entries = v.get("entries").and_then(Value::as_array).ok_or_else(|| bad("entries"))?;
        let data = entries
            .iter()
            .map(|e| {
                let parts: Vec<&str> = e
                    .as_array()
                    .ok_or_else(|| bad("entry"))?
                    .iter()
                    .map(|s| s.as_str().ok_or_else(|| bad("coefficient")))
                    .collect::<Result<_>>()?;
                CycloNum::from_fraction_strings(&parts)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows, cols, data)
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.try_mul(rhs).expect("matrix product shape mismatch")
    }
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shape mismatch");
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference shape mismatch");
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn identity_and_zero() {
        assert!(ExactMatrix::identity(3).kernel().is_empty());
        assert_eq!(ExactMatrix::zeros(3, 4).rank(), 0);
        assert_eq!(ExactMatrix::zeros(3, 4).kernel().len(), 4);
        let b = vec![CycloNum::from_int(4), CycloNum::omega(), CycloNum::i()];
        assert_eq!(ExactMatrix::identity(3).solve(&b).unwrap(), Some(b));
    }

    #[test]
    fn all_ones_has_one_dimensional_kernel() {
        let m = ExactMatrix::from_ints(&[&[1, 1], &[1, 1]]);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).unwrap().iter().all(CycloNum::is_zero));
    }

    #[test]
    fn inconsistent_system() {
        let m = ExactMatrix::from_ints(&[&[1, 1], &[1, 1]]);
        let rhs = [CycloNum::one(), CycloNum::zero()];
        assert_eq!(m.solve(&rhs).unwrap(), None);
        assert!(m.solve(&[CycloNum::one()]).is_err());
    }

    #[test]
    fn determinant_and_inverse() {
        let m = ExactMatrix::from_ints(&[&[0, 2, 1], &[1, 0, 0], &[3, 1, 4]]);
        assert_eq!(m.det().unwrap(), CycloNum::from_int(-7));
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        let sing = ExactMatrix::from_ints(&[&[1, 2], &[2, 4]]);
        assert!(sing.det().unwrap().is_zero());
        assert_eq!(sing.inverse(), Err(AlgebraError::Singular));
    }

    #[test]
    fn json_round_trip() {
        let m = ExactMatrix::diagonal(&[CycloNum::omega(), CycloNum::from_frac(-3, 7)]);
        let j = m.to_json();
        assert_eq!(j["entries"][0][0], "-1/1");
        assert_eq!(j["entries"][0][4], "1/1");
        assert_eq!(ExactMatrix::from_json(&j).unwrap(), m);
    }

    fn arb_matrix() -> impl Strategy<Value = ExactMatrix> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec((-2i64..=2, 0i64..3), r * c).prop_map(move |v| {
                let data = v
                    .iter()
                    .map(|&(a, k)| &CycloNum::from_int(a) * &CycloNum::zeta_pow(4 * k))
                    .collect();
                ExactMatrix::new(r, c, data).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rank_nullity(m in arb_matrix()) {
            let k = m.kernel();
            prop_assert_eq!(m.rank() + k.len(), m.cols());
            for v in &k {
                prop_assert!(m.mul_vec(v).unwrap().iter().all(CycloNum::is_zero));
            }
            prop_assert_eq!(m.transpose().rank(), m.rank());
        }

        #[test]
        fn solve_consistent_rhs(m in arb_matrix(), seed in proptest::collection::vec(-3i64..=3, 5)) {
            let x: Vec<CycloNum> = (0..m.cols()).map(|j| CycloNum::from_int(seed[j])).collect();
            let b = m.mul_vec(&x).unwrap();
            let sol = m.solve(&b).unwrap().expect("consistent system");
            prop_assert_eq!(m.mul_vec(&sol).unwrap(), b);
        }
    }
}
