//! Characters of irreducible representations of the 4x4 general linear
//! group with determinant-normalized torus points.
//!
//! - A dominant weight is given in fundamental coordinates `[l, m, n]`,
//!   equivalently the partition `(l+m+n, m+n, n, 0)`.
//! - The primary evaluation route enumerates triangular branching
//!   patterns once per shape, collapsing them into a weight-multiplicity
//!   table that is cached globally; evaluating at a point is then a short
//!   sum of monomials in the torus coordinates.
//! - The independent route is the alternant quotient: a ratio of two 4x4
//!   determinants expanded by brute force over all 24 permutations. It is
//!   undefined at points with repeated coordinates and says so.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;

use super::CharError;
use crate::rat::{pow_int, rat_str, Rat};

/// Dominant weight in fundamental coordinates `[l, m, n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightA3 {
    pub l: u32,
    pub m: u32,
    pub n: u32,
}

impl WeightA3 {
    pub fn new(l: u32, m: u32, n: u32) -> Self {
        Self { l, m, n }
    }

    /// The associated partition `(l+m+n, m+n, n, 0)`.
    pub fn partition(&self) -> [u32; 4] {
        [self.l + self.m + self.n, self.m + self.n, self.n, 0]
    }

    /// Dimension of the irreducible representation, counted as the total
    /// multiplicity in the weight table.
    pub fn dim(&self) -> u64 {
        weight_table(self.partition()).dim
    }
}

impl std::fmt::Display for WeightA3 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{},{},{}]", self.l, self.m, self.n)
    }
}

/// A semisimple conjugacy class: four nonzero coordinates multiplying
/// to one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatakePointA3 {
    alpha: [Rat; 4],
}

impl SatakePointA3 {
    pub fn new(alpha: [Rat; 4]) -> Result<Self, CharError> {
        if alpha.iter().any(Zero::is_zero) {
            return Err(CharError::InvalidPoint(
                "coordinates must be nonzero".to_string(),
            ));
        }
        let prod = alpha.iter().fold(crate::rat::rat_int(1), |acc, a| acc * a);
        if prod != crate::rat::rat_int(1) {
            return Err(CharError::InvalidPoint(format!(
                "coordinates must multiply to 1, got {}",
                rat_str(&prod)
            )));
        }
        Ok(Self { alpha })
    }

    pub fn alpha(&self) -> &[Rat; 4] {
        &self.alpha
    }

    /// The `k`-th elementary symmetric polynomial of the coordinates,
    /// for `k` in `0..=4`.
    pub fn elementary(&self, k: usize) -> Rat {
        assert!(k <= 4);
        let mut e = vec![Rat::zero(); 5];
        e[0] = crate::rat::rat_int(1);
        for a in &self.alpha {
            for j in (1..=4).rev() {
                e[j] = &e[j] + &(&e[j - 1] * a);
            }
        }
        e.swap_remove(k)
    }

    fn describe(&self) -> String {
        let parts: Vec<String> = self.alpha.iter().map(rat_str).collect();
        format!("alpha=({})", parts.join(", "))
    }
}

/// Weight multiplicities of one irreducible representation: each entry is
/// a content vector `[c1, c2, c3, c4]` with its multiplicity.
#[derive(Debug)]
pub(crate) struct WeightTable {
    pub entries: Vec<([u32; 4], u64)>,
    pub dim: u64,
}

/// Enumerates the triangular branching patterns of a shape: a chain of
/// interlacing rows below the partition, one pattern per basis vector.
/// The content vector reads off the row-sum differences.
fn build_weight_table(lam: [u32; 4]) -> WeightTable {
    let [l1, l2, l3, l4] = lam;
    let total = l1 + l2 + l3 + l4;
    let mut counts: HashMap<[u32; 4], u64> = HashMap::new();
    for a in l2..=l1 {
        for b in l3..=l2 {
            for c in l4..=l3 {
                for d in b..=a {
                    for e in c..=b {
                        for f in e..=d {
                            let w = [
                                f,
                                d + e - f,
                                a + b + c - d - e,
                                total - a - b - c,
                            ];
                            *counts.entry(w).or_insert(0) += 1;
                        }
                    }
                }
            }
        }
    }
    let mut entries: Vec<([u32; 4], u64)> = counts.into_iter().collect();
    entries.sort_unstable();
    let dim = entries.iter().map(|(_, m)| m).sum();
    WeightTable { entries, dim }
}

static TABLES: OnceLock<Mutex<HashMap<[u32; 4], Arc<WeightTable>>>> = OnceLock::new();

pub(crate) fn weight_table(lam: [u32; 4]) -> Arc<WeightTable> {
    let cache = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&lam) {
        return t.clone();
    }
    let built = Arc::new(build_weight_table(lam));
    cache
        .lock()
        .unwrap()
        .entry(lam)
        .or_insert(built)
        .clone()
}

/// Character evaluator bound to one torus point, with per-point power
/// tables and a memo over weights.
pub struct A3Evaluator {
    point: SatakePointA3,
    pows: [Vec<Rat>; 4],
    memo: HashMap<(u32, u32, u32), Rat>,
}

impl A3Evaluator {
    pub fn new(point: SatakePointA3) -> Self {
        let one = crate::rat::rat_int(1);
        Self {
            point,
            pows: [vec![one.clone()], vec![one.clone()], vec![one.clone()], vec![one]],
            memo: HashMap::new(),
        }
    }

    pub fn point(&self) -> &SatakePointA3 {
        &self.point
    }

    fn grow(&mut self, upto: usize) {
        for i in 0..4 {
            while self.pows[i].len() <= upto {
                let next = self.pows[i].last().unwrap() * &self.point.alpha[i];
                self.pows[i].push(next);
            }
        }
    }

    /// The character value at this point, from the weight table.
    pub fn eval(&mut self, w: WeightA3) -> Rat {
        let key = (w.l, w.m, w.n);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let table = weight_table(w.partition());
        let size = (w.l + w.m + w.n) + (w.m + w.n) + w.n;
        self.grow(size as usize);
        let mut acc = Rat::zero();
        for (content, mult) in &table.entries {
            let mut term = Rat::from(BigInt::from(*mult));
            for i in 0..4 {
                term = term * &self.pows[i][content[i] as usize];
            }
            acc = acc + term;
        }
        self.memo.insert(key, acc.clone());
        acc
    }
}

/// All 24 permutations of `(0,1,2,3)` with signs.
fn perms4() -> Vec<([usize; 4], i64)> {
    let mut out = Vec::with_capacity(24);
    let idx = [0usize, 1, 2, 3];
    let mut perm = idx;
    // Plain recursive generation; sign by counting inversions.
    fn rec(perm: &mut [usize; 4], k: usize, out: &mut Vec<([usize; 4], i64)>) {
        if k == 4 {
            let mut inv = 0;
            for i in 0..4 {
                for j in i + 1..4 {
                    if perm[i] > perm[j] {
                        inv += 1;
                    }
                }
            }
            out.push((*perm, if inv % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for i in k..4 {
            perm.swap(k, i);
            rec(perm, k + 1, out);
            perm.swap(k, i);
        }
    }
    rec(&mut perm, 0, &mut out);
    out
}

fn det_of_powers(alpha: &[Rat; 4], exps: &[i64; 4]) -> Rat {
    let mut acc = Rat::zero();
    for (perm, sign) in perms4() {
        let mut term = crate::rat::rat_int(sign);
        for i in 0..4 {
            term = term * pow_int(&alpha[i], exps[perm[i]]);
        }
        acc = acc + term;
    }
    acc
}

/// Independent character route: the alternant quotient
/// `det(alpha_i^(lam_j + 4 - j)) / det(alpha_i^(4 - j))`, expanded by
/// brute force. Errors at points with repeated coordinates, where the
/// denominator vanishes.
pub fn char_a3_alternant(point: &SatakePointA3, w: WeightA3) -> Result<Rat, CharError> {
    let lam = w.partition();
    let den_exps = [3i64, 2, 1, 0];
    let den = det_of_powers(&point.alpha, &den_exps);
    if den.is_zero() {
        return Err(CharError::DegeneratePoint(point.describe()));
    }
    let num_exps = [
        i64::from(lam[0]) + 3,
        i64::from(lam[1]) + 2,
        i64::from(lam[2]) + 1,
        i64::from(lam[3]),
    ];
    Ok(det_of_powers(&point.alpha, &num_exps) / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    fn sample_point() -> SatakePointA3 {
        SatakePointA3::new([rat_int(2), rat_int(3), rat(1, 2), rat(1, 3)]).unwrap()
    }

    #[test]
    fn point_validation() {
        assert!(matches!(
            SatakePointA3::new([rat_int(0), rat_int(1), rat_int(1), rat_int(1)]),
            Err(CharError::InvalidPoint(_))
        ));
        assert!(matches!(
            SatakePointA3::new([rat_int(2), rat_int(1), rat_int(1), rat_int(1)]),
            Err(CharError::InvalidPoint(_))
        ));
    }

    #[test]
    fn dimensions_of_small_representations() {
        assert_eq!(WeightA3::new(0, 0, 0).dim(), 1);
        assert_eq!(WeightA3::new(1, 0, 0).dim(), 4);
        assert_eq!(WeightA3::new(0, 1, 0).dim(), 6);
        assert_eq!(WeightA3::new(0, 0, 1).dim(), 4);
        assert_eq!(WeightA3::new(1, 0, 1).dim(), 15);
        assert_eq!(WeightA3::new(0, 2, 0).dim(), 20);
        assert_eq!(WeightA3::new(2, 1, 0).dim(), 45);
    }

    #[test]
    fn fundamental_characters_are_elementary_symmetric() {
        let pt = sample_point();
        let mut ev = A3Evaluator::new(pt.clone());
        assert_eq!(ev.eval(WeightA3::new(1, 0, 0)), pt.elementary(1));
        assert_eq!(ev.eval(WeightA3::new(0, 1, 0)), pt.elementary(2));
        assert_eq!(ev.eval(WeightA3::new(0, 0, 1)), pt.elementary(3));
        assert_eq!(pt.elementary(4), rat_int(1));
    }

    #[test]
    fn adjoint_character_in_elementary_terms() {
        // The weight [1,0,1] has character e1*e3 - 1 when the coordinates
        // multiply to one (second-kind Jacobi-Trudi, two-by-two case).
        let pt = sample_point();
        let mut ev = A3Evaluator::new(pt.clone());
        let expect = pt.elementary(1) * pt.elementary(3) - rat_int(1);
        assert_eq!(ev.eval(WeightA3::new(1, 0, 1)), expect);
    }

    #[test]
    fn square_of_degree_two_fundamental_decomposes() {
        let pt = sample_point();
        let mut ev = A3Evaluator::new(pt.clone());
        let lhs = pt.elementary(2) * pt.elementary(2);
        let rhs = ev.eval(WeightA3::new(0, 2, 0))
            + ev.eval(WeightA3::new(1, 0, 1))
            + rat_int(1);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn alternant_route_agrees_with_table_route() {
        let pt = sample_point();
        let mut ev = A3Evaluator::new(pt.clone());
        for (l, m, n) in [(1, 0, 0), (2, 1, 1), (3, 0, 2), (0, 2, 3), (2, 2, 2)] {
            let w = WeightA3::new(l, m, n);
            assert_eq!(char_a3_alternant(&pt, w).unwrap(), ev.eval(w), "{w}");
        }
    }

    #[test]
    fn alternant_route_refuses_repeated_coordinates() {
        let pt = SatakePointA3::new([rat_int(2), rat_int(2), rat(1, 2), rat(1, 2)]).unwrap();
        assert!(matches!(
            char_a3_alternant(&pt, WeightA3::new(1, 0, 0)),
            Err(CharError::DegeneratePoint(_))
        ));
    }

    #[test]
    fn evaluation_at_identity_gives_dimension() {
        let one = rat_int(1);
        let pt = SatakePointA3::new([one.clone(), one.clone(), one.clone(), one]).unwrap();
        let mut ev = A3Evaluator::new(pt);
        for (l, m, n) in [(1, 0, 0), (0, 1, 0), (1, 0, 1), (2, 1, 0)] {
            let w = WeightA3::new(l, m, n);
            assert_eq!(ev.eval(w), rat_int(w.dim() as i64), "{w}");
        }
    }
}
