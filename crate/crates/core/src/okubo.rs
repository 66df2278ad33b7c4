//! The Okubo algebra: trace-zero 3×3 matrices with the twisted product
//! `x ⋆ y = μxy + (1−μ)yx − c·tr(yx)·1`, `μ = (1−ω)/3`.

use crate::error::{AlgebraError, Result};
use crate::field::{CycloNum, ExactMatrix, Rational};
use crate::sample::Sampler;

/// Trace coefficients tried by [`calibrate_trace_factor`], in order.
pub fn candidate_trace_factors() -> [Rational; 2] {
    [Rational::one(), Rational::new(1, 3)]
}

/// The coefficient `c` for which the product is a composition algebra.
pub fn calibrated_trace_factor() -> Rational {
    Rational::new(1, 3)
}

pub fn mu() -> CycloNum {
    &(&CycloNum::one() - &CycloNum::omega()) * &CycloNum::from_frac(1, 3)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OkuboElement {
    m: ExactMatrix,
}

impl OkuboElement {
    pub fn new(m: ExactMatrix) -> Result<Self> {
        if m.rows() != 3 || m.cols() != 3 {
            return Err(AlgebraError::DimensionMismatch {
                expected: "3x3".into(),
                found: format!("{}x{}", m.rows(), m.cols()),
            });
        }
        if !m.trace().is_zero() {
            return Err(AlgebraError::DimensionMismatch {
                expected: "trace zero".into(),
                found: m.trace().to_string(),
            });
        }
        Ok(OkuboElement { m })
    }

    pub fn zero() -> Self {
        OkuboElement { m: ExactMatrix::zeros(3, 3) }
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.m
    }

    /// Random element: eight free entries, the last diagonal entry fixing the trace.
    pub fn random(s: &mut Sampler) -> Self {
        let mut m = ExactMatrix::from_fn(3, 3, |_, _| s.scalar());
        let t = m.get(0, 0) + m.get(1, 1);
        m.set(2, 2, -t);
        OkuboElement { m }
    }

    /// The product with the calibrated trace coefficient.
    pub fn star(&self, y: &OkuboElement) -> OkuboElement {
        let p = okubo_mul(&self.m, &y.m, &calibrated_trace_factor());
        OkuboElement::new(p).expect("calibrated product stays trace-free")
    }

    /// `n(x) = −S(x)/3 = tr(x²)/6` for trace-zero `x`.
    pub fn norm(&self) -> CycloNum {
        okubo_norm(&self.m)
    }

    /// Polar form of `n`.
    pub fn b_n(&self, y: &OkuboElement) -> CycloNum {
        &(&okubo_norm(&(&self.m + &y.m)) - &self.norm()) - &y.norm()
    }

    pub fn scale(&self, s: &CycloNum) -> OkuboElement {
        OkuboElement { m: self.m.scale(s) }
    }
}

/// Raw product on 3×3 matrices with an explicit trace coefficient; the
/// result need not be trace-free.
pub fn okubo_mul(x: &ExactMatrix, y: &ExactMatrix, trace_factor: &Rational) -> ExactMatrix {
    let mu = mu();
    let one_minus = &CycloNum::one() - &mu;
    let xy = x * y;
    let yx = y * x;
    let c = yx.trace().scale(trace_factor);
    &(&xy.scale(&mu) + &yx.scale(&one_minus)) - &ExactMatrix::identity(3).scale(&c)
}

/// `tr(x²)/6`
pub fn okubo_norm(x: &ExactMatrix) -> CycloNum {
    (x * x).trace().scale(&Rational::new(1, 6))
}

/// Tests each candidate coefficient against closure (trace zero) and the
/// composition law on the given sample pairs, returning the first that passes.
pub fn calibrate_trace_factor(pairs: &[(OkuboElement, OkuboElement)]) -> Option<Rational> {
    candidate_trace_factors().into_iter().find(|c| {
        pairs.iter().all(|(x, y)| {
            let p = okubo_mul(&x.m, &y.m, c);
            p.trace().is_zero() && okubo_norm(&p) == &x.norm() * &y.norm()
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(n: usize, seed: u64) -> Vec<(OkuboElement, OkuboElement)> {
        let mut s = Sampler::new(seed);
        (0..n).map(|_| (OkuboElement::random(&mut s), OkuboElement::random(&mut s))).collect()
    }

    #[test]
    fn calibration_selects_one_third() {
        assert_eq!(calibrate_trace_factor(&pairs(10, 4)), Some(Rational::new(1, 3)));
    }

    #[test]
    fn display_factor_breaks_trace() {
        let (x, y) = &pairs(1, 11)[0];
        let p = okubo_mul(x.matrix(), y.matrix(), &Rational::one());
        let expected = (x.matrix() * y.matrix()).trace().scale(&Rational::from_int(-2));
        assert_eq!(p.trace(), expected);
    }

    #[test]
    fn zero_product_and_validation() {
        let (x, _) = &pairs(1, 2)[0];
        assert_eq!(OkuboElement::zero().star(x), OkuboElement::zero());
        assert!(OkuboElement::new(ExactMatrix::identity(3)).is_err());
        assert!(OkuboElement::new(ExactMatrix::zeros(2, 2)).is_err());
    }

    #[test]
    fn symmetric_composition_laws() {
        let mut s = Sampler::new(5);
        for _ in 0..15 {
            let (x, y, z) = (OkuboElement::random(&mut s), OkuboElement::random(&mut s), OkuboElement::random(&mut s));
            let xy = x.star(&y);
            assert_eq!(xy.norm(), &x.norm() * &y.norm());
            assert_eq!(xy.star(&x), y.scale(&x.norm()));
            assert_eq!(x.star(&y.star(&x)), y.scale(&x.norm()));
            assert_eq!(xy.b_n(&z), x.b_n(&y.star(&z)));
        }
    }
}
