//! Seeded, portable random sampling for the verification suites.
//!
//! The generator is SplitMix64 (the Steele-Lea-Flood mixer), written
//! out here rather than pulled from a crate because the byte-for-byte
//! sample sequence is part of the report contract: any implementation
//! in any language must be able to reproduce it from the documented
//! constants.  Each check draws from its own stream, seeded by XORing
//! the suite seed with the FNV-1a hash of the check name, so adding or
//! reordering checks never shifts another check's samples.

use num_traits::One;

use crate::chars::a3::SatakePointA3;
use crate::chars::c2::SatakePointC2;
use crate::rat::{rat, rat_int, Rat};

/// The SplitMix64 generator: a 64-bit counter with an avalanche mix.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw in `[0, n)` by rejection, so every value is exactly
    /// equally likely.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "cannot draw below zero");
        let zone = u64::MAX - u64::MAX % n;
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % n;
            }
        }
    }
}

/// FNV-1a over bytes, 64-bit variant.
pub fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut h = 0xCBF2_9CE4_8422_2325u64;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01B3);
    }
    h
}

/// The per-check random stream: suite seed XOR FNV-1a(check name).
pub fn check_stream(seed: u64, check_name: &str) -> SplitMix64 {
    SplitMix64::new(seed ^ fnv1a64(check_name.as_bytes()))
}

/// Draws the exact-rational test data for one check.
#[derive(Debug, Clone)]
pub struct Sampler {
    rng: SplitMix64,
    bound: i64,
}

impl Sampler {
    /// `bound` caps numerators and denominators of sampled rationals.
    pub fn new(seed: u64, check_name: &str, bound: i64) -> Self {
        assert!(bound >= 2, "sampler bound must be at least 2");
        Sampler {
            rng: check_stream(seed, check_name),
            bound,
        }
    }

    /// A nonzero rational with numerator in `[-bound, bound]` and
    /// denominator in `[1, bound]`.
    pub fn nonzero_rat(&mut self) -> Rat {
        let b = self.bound as u64;
        let n = self.rng.below(2 * b) as i64 + 1;
        let num = if n <= self.bound { n } else { self.bound - n };
        let den = self.rng.below(b) as i64 + 1;
        rat(num, den)
    }

    /// A nonzero rational different from 1.
    pub fn nonzero_rat_avoiding_one(&mut self) -> Rat {
        loop {
            let x = self.nonzero_rat();
            if !x.is_one() {
                return x;
            }
        }
    }

    /// A rational strictly between 0 and 1.
    pub fn unit_rat(&mut self) -> Rat {
        let den = self.rng.below(self.bound as u64 - 1) + 2;
        let num = self.rng.below(den - 1) + 1;
        rat(num as i64, den as i64)
    }

    /// A determinant-one diagonal parameter point: three free nonzero
    /// coordinates, the fourth their inverse product.
    pub fn point_a3(&mut self) -> SatakePointA3 {
        let a1 = self.nonzero_rat();
        let a2 = self.nonzero_rat();
        let a3 = self.nonzero_rat();
        let a4 = rat_int(1) / (&a1 * &a2 * &a3);
        SatakePointA3::new([a1, a2, a3, a4])
            .expect("nonzero coordinates with unit product are always valid")
    }

    /// A point whose four coordinates are pairwise distinct, so the
    /// alternant denominators do not vanish.
    pub fn point_a3_regular(&mut self) -> SatakePointA3 {
        loop {
            let p = self.point_a3();
            let a = p.alpha();
            let distinct = (0..4).all(|i| (i + 1..4).all(|j| a[i] != a[j]));
            if distinct {
                return p;
            }
        }
    }

    /// A nonzero two-coordinate parameter point.
    pub fn point_c2(&mut self) -> SatakePointC2 {
        SatakePointC2::new(self.nonzero_rat(), self.nonzero_rat())
            .expect("nonzero coordinates are always valid")
    }

    /// A two-coordinate point avoiding every wall where the rank-two
    /// alternant denominator vanishes: `a, b != +-1`, `a != +-b`,
    /// `ab != +-1`.
    pub fn point_c2_regular(&mut self) -> SatakePointC2 {
        loop {
            let p = self.point_c2();
            let (a, b) = (p.a().clone(), p.b().clone());
            let one = rat_int(1);
            let walls = a == one
                || a == -one.clone()
                || b == one
                || b == -one.clone()
                || a == b
                || a == -b.clone()
                || &a * &b == one
                || &a * &b == -one.clone();
            if !walls {
                return p;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn splitmix_reference_vector() {
        let mut g = SplitMix64::new(0);
        assert_eq!(g.next_u64(), 0xE220_A839_7B1D_CDAF);
    }

    #[test]
    fn fnv_reference_vectors() {
        assert_eq!(fnv1a64(b""), 0xCBF2_9CE4_8422_2325);
        assert_eq!(fnv1a64(b"a"), 0xAF63_DC4C_8601_EC8C);
    }

    #[test]
    fn streams_are_deterministic_and_name_separated() {
        let mut a = check_stream(42, "lemma-2-2");
        let mut b = check_stream(42, "lemma-2-2");
        let mut c = check_stream(42, "thm-2-1");
        let first = a.next_u64();
        assert_eq!(first, b.next_u64());
        assert_ne!(first, c.next_u64());
    }

    #[test]
    fn below_stays_in_range() {
        let mut g = SplitMix64::new(7);
        for n in [1u64, 2, 3, 17, 1000] {
            for _ in 0..50 {
                assert!(g.below(n) < n);
            }
        }
    }

    #[test]
    fn sampled_rationals_respect_bounds() {
        let mut s = Sampler::new(42, "probe", 20);
        for _ in 0..200 {
            let x = s.nonzero_rat();
            assert!(!x.is_zero());
            let q = s.unit_rat();
            assert!(q > Rat::zero() && q < Rat::one());
            assert!(!s.nonzero_rat_avoiding_one().is_one());
        }
    }

    #[test]
    fn sampled_points_satisfy_their_constraints() {
        let mut s = Sampler::new(42, "probe", 8);
        for _ in 0..20 {
            let p = s.point_a3_regular();
            let a = p.alpha();
            let prod = a.iter().fold(rat_int(1), |acc, x| acc * x);
            assert_eq!(prod, rat_int(1));
            for i in 0..4 {
                for j in i + 1..4 {
                    assert_ne!(a[i], a[j]);
                }
            }
            let c = s.point_c2_regular();
            assert_ne!(c.a(), c.b());
            assert_ne!(c.a() * c.b(), rat_int(1));
        }
    }
}
