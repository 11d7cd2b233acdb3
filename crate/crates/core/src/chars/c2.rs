//! Characters of the rank-two symplectic group on its diagonal torus
//! `(a, b, 1/b, 1/a)`.
//!
//! - A dominant weight is a partition pair `(lam1, lam2)` with
//!   `lam1 >= lam2 >= 0`; `(1,0)` is the four-dimensional representation
//!   and `(1,1)` the five-dimensional one.
//! - [`char_c2`] is the numeric Weyl-quotient route; it is undefined when
//!   the denominator alternant vanishes and reports that instead of
//!   guessing.
//! - [`char_c2_total`] divides alternants symbolically as Laurent
//!   polynomials in `(a, b)` once per weight, caches the quotient, and
//!   then evaluates anywhere on the torus, including points the numeric
//!   route must refuse (for example `a = b = 1`).

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;

use super::CharError;
use crate::rat::{pow_int, rat_str, Rat};

/// Dominant weight in partition coordinates, `lam1 >= lam2 >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightC2 {
    pub lam1: u32,
    pub lam2: u32,
}

impl WeightC2 {
    pub fn new(lam1: u32, lam2: u32) -> Self {
        assert!(lam1 >= lam2, "weight coordinates must be ordered");
        Self { lam1, lam2 }
    }

    /// Dimension by the rank-two symplectic Weyl formula.
    pub fn dim(&self) -> u64 {
        let (l1, l2) = (u64::from(self.lam1), u64::from(self.lam2));
        (l1 - l2 + 1) * (l2 + 1) * (l1 + 2) * (l1 + l2 + 3) / 6
    }
}

impl std::fmt::Display for WeightC2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.lam1, self.lam2)
    }
}

/// A semisimple conjugacy class: the torus point `(a, b, 1/b, 1/a)` with
/// `a` and `b` nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatakePointC2 {
    a: Rat,
    b: Rat,
}

impl SatakePointC2 {
    pub fn new(a: Rat, b: Rat) -> Result<Self, CharError> {
        if a.is_zero() || b.is_zero() {
            return Err(CharError::InvalidPoint(
                "coordinates must be nonzero".to_string(),
            ));
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> &Rat {
        &self.a
    }

    pub fn b(&self) -> &Rat {
        &self.b
    }

    /// The four torus eigenvalues of the defining four-dimensional
    /// representation.
    pub fn spin_eigenvalues(&self) -> [Rat; 4] {
        [
            self.a.clone(),
            self.b.clone(),
            pow_int(&self.b, -1),
            pow_int(&self.a, -1),
        ]
    }

    /// The five torus eigenvalues of the five-dimensional representation.
    pub fn std5_eigenvalues(&self) -> [Rat; 5] {
        let ab = &self.a * &self.b;
        [
            ab.clone(),
            &self.a / &self.b,
            &self.b / &self.a,
            pow_int(&ab, -1),
            crate::rat::rat_int(1),
        ]
    }

    fn describe(&self) -> String {
        format!("(a, b)=({}, {})", rat_str(&self.a), rat_str(&self.b))
    }
}

/// Integer Laurent polynomial in two variables, keyed by exponent pairs.
type Laurent = BTreeMap<(i64, i64), BigInt>;

fn laurent_add_term(p: &mut Laurent, key: (i64, i64), c: &BigInt) {
    if c.is_zero() {
        return;
    }
    let slot = p.entry(key).or_insert_with(BigInt::zero);
    *slot += c;
    if slot.is_zero() {
        p.remove(&key);
    }
}

/// The antisymmetrized exponential sum
/// `(a^k1 - a^-k1)(b^k2 - b^-k2) - (a^k2 - a^-k2)(b^k1 - b^-k1)`.
fn alternant(k1: i64, k2: i64) -> Laurent {
    let one = BigInt::from(1);
    let neg = BigInt::from(-1);
    let mut p = Laurent::new();
    for (i, j, s) in [
        (k1, k2, &one),
        (k1, -k2, &neg),
        (-k1, k2, &neg),
        (-k1, -k2, &one),
        (k2, k1, &neg),
        (k2, -k1, &one),
        (-k2, k1, &one),
        (-k2, -k1, &neg),
    ] {
        laurent_add_term(&mut p, (i, j), s);
    }
    p
}

/// Divides an alternant numerator by the Weyl denominator alternant,
/// which has leading term `a^2 b` with coefficient one in lexicographic
/// order; the division is exact for the numerators that arise here.
fn divide_by_weyl_denominator(mut num: Laurent) -> Laurent {
    let den = alternant(2, 1);
    let mut quot = Laurent::new();
    let mut steps = 0u32;
    while let Some((&(i, j), c)) = num.iter().next_back() {
        steps += 1;
        assert!(steps < 1_000_000, "alternant division failed to terminate");
        let c = c.clone();
        let q = (i - 2, j - 1);
        laurent_add_term(&mut quot, q, &c);
        for (&(di, dj), dc) in &den {
            let sub = -(dc * &c);
            laurent_add_term(&mut num, (q.0 + di, q.1 + dj), &sub);
        }
    }
    quot
}

static C2_CHARS: OnceLock<Mutex<HashMap<(u32, u32), Arc<Laurent>>>> = OnceLock::new();

/// The character of `w` as a cached Laurent polynomial in `(a, b)`.
fn laurent_char(w: WeightC2) -> Arc<Laurent> {
    let key = (w.lam1, w.lam2);
    let cache = C2_CHARS.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&key) {
        return p.clone();
    }
    let num = alternant(i64::from(w.lam1) + 2, i64::from(w.lam2) + 1);
    let built = Arc::new(divide_by_weyl_denominator(num));
    cache.lock().unwrap().entry(key).or_insert(built).clone()
}

fn eval_alternant(pt: &SatakePointC2, k1: i64, k2: i64) -> Rat {
    let half = |x: &Rat, k: i64| pow_int(x, k) - pow_int(x, -k);
    half(&pt.a, k1) * half(&pt.b, k2) - half(&pt.a, k2) * half(&pt.b, k1)
}

/// Numeric Weyl-quotient route. Errors when the denominator alternant
/// vanishes (for example at `a = b` or `a = 1`).
pub fn char_c2(pt: &SatakePointC2, w: WeightC2) -> Result<Rat, CharError> {
    let den = eval_alternant(pt, 2, 1);
    if den.is_zero() {
        return Err(CharError::DegeneratePoint(pt.describe()));
    }
    let num = eval_alternant(pt, i64::from(w.lam1) + 2, i64::from(w.lam2) + 1);
    Ok(num / den)
}

/// Total route: evaluates the cached symbolic character, defined at every
/// point of the torus.
pub fn char_c2_total(pt: &SatakePointC2, w: WeightC2) -> Rat {
    let p = laurent_char(w);
    let mut acc = Rat::zero();
    for (&(i, j), c) in p.iter() {
        let term = Rat::from(c.clone()) * pow_int(&pt.a, i) * pow_int(&pt.b, j);
        acc = acc + term;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    fn sample_point() -> SatakePointC2 {
        SatakePointC2::new(rat(2, 3), rat_int(5)).unwrap()
    }

    fn identity_point() -> SatakePointC2 {
        SatakePointC2::new(rat_int(1), rat_int(1)).unwrap()
    }

    #[test]
    fn four_dimensional_character_is_spin_trace() {
        let pt = sample_point();
        let expect: Rat = pt.spin_eigenvalues().iter().sum();
        assert_eq!(char_c2_total(&pt, WeightC2::new(1, 0)), expect.clone());
        assert_eq!(char_c2(&pt, WeightC2::new(1, 0)).unwrap(), expect);
    }

    #[test]
    fn five_dimensional_character_is_std_trace() {
        let pt = sample_point();
        let expect: Rat = pt.std5_eigenvalues().iter().sum();
        assert_eq!(char_c2_total(&pt, WeightC2::new(1, 1)), expect.clone());
        assert_eq!(char_c2(&pt, WeightC2::new(1, 1)).unwrap(), expect);
    }

    #[test]
    fn five_dimensional_is_wedge_of_four_minus_trivial() {
        let pt = sample_point();
        let evs = pt.spin_eigenvalues();
        let mut e2 = Rat::zero();
        for i in 0..4 {
            for j in i + 1..4 {
                e2 = e2 + &evs[i] * &evs[j];
            }
        }
        assert_eq!(char_c2_total(&pt, WeightC2::new(1, 1)), e2 - rat_int(1));
    }

    #[test]
    fn tensor_square_of_spin_decomposes() {
        for pt in [sample_point(), SatakePointC2::new(rat(3, 7), rat(-2, 5)).unwrap()] {
            let spin = char_c2_total(&pt, WeightC2::new(1, 0));
            let rhs = char_c2_total(&pt, WeightC2::new(2, 0))
                + char_c2_total(&pt, WeightC2::new(1, 1))
                + rat_int(1);
            assert_eq!(&spin * &spin, rhs);
        }
    }

    #[test]
    fn dimensions_match_total_route_at_identity() {
        let pt = identity_point();
        for (l1, l2) in [(1, 0), (1, 1), (2, 0), (2, 1), (2, 2), (3, 1)] {
            let w = WeightC2::new(l1, l2);
            assert_eq!(char_c2_total(&pt, w), rat_int(w.dim() as i64), "{w}");
        }
    }

    #[test]
    fn small_dimensions_are_correct() {
        assert_eq!(WeightC2::new(0, 0).dim(), 1);
        assert_eq!(WeightC2::new(1, 0).dim(), 4);
        assert_eq!(WeightC2::new(1, 1).dim(), 5);
        assert_eq!(WeightC2::new(2, 0).dim(), 10);
        assert_eq!(WeightC2::new(2, 1).dim(), 16);
        assert_eq!(WeightC2::new(2, 2).dim(), 14);
    }

    #[test]
    fn numeric_route_refuses_degenerate_points() {
        assert!(matches!(
            char_c2(&identity_point(), WeightC2::new(1, 0)),
            Err(CharError::DegeneratePoint(_))
        ));
        let pt = SatakePointC2::new(rat_int(2), rat_int(2)).unwrap();
        assert!(matches!(
            char_c2(&pt, WeightC2::new(2, 1)),
            Err(CharError::DegeneratePoint(_))
        ));
    }

    #[test]
    fn numeric_and_total_routes_agree_off_the_walls() {
        let points = [
            sample_point(),
            SatakePointC2::new(rat(7, 2), rat(-1, 3)).unwrap(),
            SatakePointC2::new(rat(-5, 4), rat(9, 8)).unwrap(),
        ];
        for pt in points {
            for (l1, l2) in [(1, 0), (1, 1), (3, 2), (4, 0), (5, 5)] {
                let w = WeightC2::new(l1, l2);
                assert_eq!(char_c2(&pt, w).unwrap(), char_c2_total(&pt, w), "{w}");
            }
        }
    }

    #[test]
    fn point_validation() {
        assert!(matches!(
            SatakePointC2::new(rat_int(0), rat_int(1)),
            Err(CharError::InvalidPoint(_))
        ));
    }
}
