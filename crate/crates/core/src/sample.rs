//! Deterministic sampling of small exact values.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{CycloNum, Rational};

/// Seeded source of small rationals: numerator and denominator are drawn
/// uniformly from `[-9, 9]`, the denominator avoiding zero.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Independent stream for a named consumer, so suites do not perturb
    /// each other's draws.
    pub fn derived(seed: u64, label: &str) -> Self {
        let tag = label
            .bytes()
            .fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3));
        Self::new(seed ^ tag)
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn rational(&mut self) -> Rational {
        let num = self.int(-9, 9);
        let den = loop {
            let d = self.int(-9, 9);
            if d != 0 {
                break d;
            }
        };
        Rational::new(num, den)
    }

    pub fn scalar(&mut self) -> CycloNum {
        CycloNum::from_rational(self.rational())
    }

    pub fn nonzero_scalar(&mut self) -> CycloNum {
        loop {
            let s = self.scalar();
            if !s.is_zero() {
                return s;
            }
        }
    }

    pub fn scalars(&mut self, n: usize) -> Vec<CycloNum> {
        (0..n).map(|_| self.scalar()).collect()
    }

    /// A genuinely irrational field element: rational coefficients on a few
    /// random powers of ζ.
    pub fn field_element(&mut self) -> CycloNum {
        let mut acc = CycloNum::zero();
        for _ in 0..2 {
            let k = self.int(0, 23);
            acc += &(&self.scalar() * &CycloNum::zeta_pow(k));
        }
        acc
    }
}
