//! Double cosets Q\GL4/P over F2 and F3, where P stabilizes the
//! span of the last two coordinate rows and Q stabilizes the flag
//! (last row) inside (last three rows), all under right action.
//!
//! The decomposition is computed by identifying G/P with the set of
//! two-dimensional row subspaces and sweeping Q-orbits on them; a
//! coset QgP corresponds to the orbit of span(b3, b4) * g^{-1}.
//! Cross-checks: parabolic orders by exhaustive shape scan against
//! Levi-times-radical formulas, the orbit sizes against the group
//! order, and over F2 an elementwise product-set partition of the
//! whole group. Unipotent stabilizer claims for the two middle
//! representatives are verified elementwise as well.

use std::collections::BTreeSet;

use super::{CosetClass, CosetError};

/// A 4x4 matrix with entries reduced modulo the field size.
pub type Mat = [[u8; 4]; 4];

/// Zero row-echelon basis of a two-dimensional row subspace,
/// canonical under left multiplication by GL2.
pub type Plane = [[u8; 4]; 2];

/// Positions forced to vanish for the plane stabilizer
/// (rows 3 and 4 must stay inside the span of rows 3 and 4).
const P_ZEROS: [(usize, usize); 4] = [(2, 0), (2, 1), (3, 0), (3, 1)];

/// Positions forced to vanish for the flag stabilizer
/// (row 4 stays on the line of row 4, rows 2..4 stay in their span).
const Q_ZEROS: [(usize, usize); 5] = [(1, 0), (2, 0), (3, 0), (3, 1), (3, 2)];

/// Positions forced to vanish for the upper-triangular subgroup,
/// which is exactly the intersection of the two shapes above.
const B_ZEROS: [(usize, usize); 6] = [(1, 0), (2, 0), (2, 1), (3, 0), (3, 1), (3, 2)];

/// One-line forms of the four representatives, in the order they are
/// reported: identity, the long product of the two intertwiners, and
/// the two intermediate permutations.
const REPS: [(&str, [usize; 4]); 4] = [
    ("1", [1, 2, 3, 4]),
    ("(1243)", [2, 4, 1, 3]),
    ("(123)", [2, 3, 1, 4]),
    ("(243)", [1, 4, 2, 3]),
];

/// The identity matrix.
pub fn identity() -> Mat {
    let mut m = [[0u8; 4]; 4];
    for i in 0..4 {
        m[i][i] = 1;
    }
    m
}

/// Permutation matrix sending the i-th basis column to column
/// sigma(i): entry (sigma(i), i) is 1. Products then compose the
/// underlying permutations left to right as functions.
pub fn perm_matrix(one_line: [usize; 4]) -> Mat {
    let mut m = [[0u8; 4]; 4];
    for (i, &s) in one_line.iter().enumerate() {
        m[s - 1][i] = 1;
    }
    m
}

/// Matrix product with entries reduced mod p.
pub fn mat_mul(a: &Mat, b: &Mat, p: u8) -> Mat {
    let mut out = [[0u8; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let mut acc: u16 = 0;
            for k in 0..4 {
                acc += u16::from(a[i][k]) * u16::from(b[k][j]);
            }
            out[i][j] = (acc % u16::from(p)) as u8;
        }
    }
    out
}

/// Transpose, which inverts permutation matrices.
pub fn transpose(m: &Mat) -> Mat {
    let mut out = [[0u8; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[j][i] = m[i][j];
        }
    }
    out
}

fn inv_mod(a: u8, p: u8) -> u8 {
    for x in 1..p {
        if (u16::from(a) * u16::from(x)) % u16::from(p) == 1 {
            return x;
        }
    }
    panic!("no inverse for {a} mod {p}");
}

/// Invertibility test by Gaussian elimination mod p.
pub fn is_invertible(m: &Mat, p: u8) -> bool {
    let mut w = *m;
    for col in 0..4 {
        let pivot = match (col..4).find(|&r| w[r][col] != 0) {
            Some(r) => r,
            None => return false,
        };
        w.swap(col, pivot);
        let inv = inv_mod(w[col][col], p);
        for j in 0..4 {
            w[col][j] = (u16::from(w[col][j]) * u16::from(inv) % u16::from(p)) as u8;
        }
        for r in 0..4 {
            if r != col && w[r][col] != 0 {
                let f = u16::from(w[r][col]);
                for j in 0..4 {
                    let sub = f * u16::from(w[col][j]) % u16::from(p);
                    w[r][j] = ((u16::from(w[r][j]) + u16::from(p) - sub) % u16::from(p)) as u8;
                }
            }
        }
    }
    true
}

/// Walks every matrix whose entries vanish at `zeros`, with all other
/// entries free over F_p, and feeds the invertible ones to `visit`.
fn scan_shape(p: u8, zeros: &[(usize, usize)], mut visit: impl FnMut(&Mat)) {
    let free: Vec<(usize, usize)> = (0..4)
        .flat_map(|i| (0..4).map(move |j| (i, j)))
        .filter(|pos| !zeros.contains(pos))
        .collect();
    let total = u64::from(p).pow(free.len() as u32);
    for code in 0..total {
        let mut m = [[0u8; 4]; 4];
        let mut c = code;
        for &(i, j) in &free {
            m[i][j] = (c % u64::from(p)) as u8;
            c /= u64::from(p);
        }
        if is_invertible(&m, p) {
            visit(&m);
        }
    }
}

fn count_shape(p: u8, zeros: &[(usize, usize)]) -> u64 {
    let mut n = 0;
    scan_shape(p, zeros, |_| n += 1);
    n
}

fn collect_shape(p: u8, zeros: &[(usize, usize)]) -> Vec<Mat> {
    let mut out = Vec::new();
    scan_shape(p, zeros, |m| out.push(*m));
    out
}

/// Order of GL4(F_p) from the falling q-power product.
pub fn gl4_order(p: u8) -> u64 {
    let q = u64::from(p);
    let q4 = q.pow(4);
    (q4 - 1) * (q4 - q) * (q4 - q * q) * (q4 - q * q * q)
}

fn gl2_order(p: u8) -> u64 {
    let q = u64::from(p);
    (q * q - 1) * (q * q - q)
}

/// Plane-stabilizer order as Levi GL2 x GL2 times a 4-dimensional
/// radical; the scan count must agree with this.
pub fn p_order_formula(p: u8) -> u64 {
    gl2_order(p) * gl2_order(p) * u64::from(p).pow(4)
}

/// Flag-stabilizer order as Levi GL1 x GL2 x GL1 times a
/// 5-dimensional radical.
pub fn q_order_formula(p: u8) -> u64 {
    let q = u64::from(p);
    (q - 1) * (q - 1) * gl2_order(p) * q.pow(5)
}

/// Upper-triangular subgroup order (q-1)^4 q^6.
pub fn borel_order_formula(p: u8) -> u64 {
    let q = u64::from(p);
    (q - 1).pow(4) * q.pow(6)
}

/// Reduced row-echelon form of an independent pair of row vectors,
/// the canonical representative of the plane they span.
pub fn rref(rows: Plane, p: u8) -> Plane {
    let mut w = rows;
    let mut r = 0;
    for c in 0..4 {
        if let Some(k) = (r..2).find(|&k| w[k][c] != 0) {
            w.swap(r, k);
            let inv = inv_mod(w[r][c], p);
            for j in 0..4 {
                w[r][j] = (u16::from(w[r][j]) * u16::from(inv) % u16::from(p)) as u8;
            }
            for k in 0..2 {
                if k != r && w[k][c] != 0 {
                    let f = u16::from(w[k][c]);
                    for j in 0..4 {
                        let sub = f * u16::from(w[r][j]) % u16::from(p);
                        w[k][j] =
                            ((u16::from(w[k][j]) + u16::from(p) - sub) % u16::from(p)) as u8;
                    }
                }
            }
            r += 1;
            if r == 2 {
                break;
            }
        }
    }
    assert_eq!(r, 2, "rows do not span a plane");
    w
}

/// All two-dimensional row subspaces of F_p^4 in canonical form.
pub fn all_planes(p: u8) -> Vec<Plane> {
    let q = u64::from(p);
    let mut seen = BTreeSet::new();
    let decode = |code: u64| {
        let mut v = [0u8; 4];
        let mut c = code;
        for slot in &mut v {
            *slot = (c % q) as u8;
            c /= q;
        }
        v
    };
    for c1 in 1..q.pow(4) {
        let v1 = decode(c1);
        for c2 in 1..q.pow(4) {
            let v2 = decode(c2);
            // Skip multiples of v1 so the pair is independent.
            let dependent = (0..p).any(|t| {
                (0..4).all(|j| (u16::from(t) * u16::from(v1[j])) % u16::from(p) == u16::from(v2[j]))
            });
            if dependent {
                continue;
            }
            seen.insert(rref([v1, v2], p));
        }
    }
    seen.into_iter().collect()
}

/// Right action of g on a plane, recanonicalized.
pub fn act_plane(plane: &Plane, g: &Mat, p: u8) -> Plane {
    let mut rows = [[0u8; 4]; 2];
    for r in 0..2 {
        for j in 0..4 {
            let mut acc: u16 = 0;
            for i in 0..4 {
                acc += u16::from(plane[r][i]) * u16::from(g[i][j]);
            }
            rows[r][j] = (acc % u16::from(p)) as u8;
        }
    }
    rref(rows, p)
}

/// The plane labeling the trivial coset: span of the last two
/// coordinate rows, the one the plane stabilizer preserves.
pub fn base_plane() -> Plane {
    [[0, 0, 1, 0], [0, 0, 0, 1]]
}

/// Full double-coset data over F_p for the two parabolics.
#[derive(Debug, Clone)]
pub struct Gl4Cosets {
    /// Field size.
    pub field: u8,
    /// Group order from the q-power formula.
    pub group_order: u64,
    /// Plane-stabilizer order by exhaustive scan.
    pub p_order: u64,
    /// Flag-stabilizer order by exhaustive scan.
    pub q_order: u64,
    /// Upper-triangular subgroup order by exhaustive scan.
    pub borel_order: u64,
    /// Number of two-dimensional row subspaces found.
    pub plane_count: usize,
    /// Total number of Q-orbits on planes, i.e. of double cosets.
    pub orbit_count: usize,
    /// Orbit sizes in sweep order.
    pub orbit_sizes: Vec<u64>,
    /// The four named representatives with their orbit ids and sizes.
    pub classes: Vec<CosetClass>,
}

impl Gl4Cosets {
    /// Sum of the double-coset sizes, to compare with the group order.
    pub fn total(&self) -> u64 {
        self.orbit_sizes.iter().map(|len| len * self.p_order).sum()
    }
}

/// Enumerates the double cosets over F_p. Only p = 2 and p = 3 stay
/// within the exhaustive-scan budget; larger fields are refused.
pub fn gl4_double_cosets(p: u8) -> Result<Gl4Cosets, CosetError> {
    if p != 2 && p != 3 {
        return Err(CosetError::FieldTooLarge(p));
    }
    let q_list = collect_shape(p, &Q_ZEROS);
    let p_order = count_shape(p, &P_ZEROS);
    let borel_order = count_shape(p, &B_ZEROS);
    let planes = all_planes(p);

    // Partition the planes into Q-orbits, assigning ids in sweep
    // order and verifying no plane is claimed twice.
    let mut orbit_of: std::collections::BTreeMap<Plane, usize> = std::collections::BTreeMap::new();
    let mut orbit_sizes = Vec::new();
    for start in &planes {
        if orbit_of.contains_key(start) {
            continue;
        }
        let id = orbit_sizes.len();
        let mut members = BTreeSet::new();
        for g in &q_list {
            members.insert(act_plane(start, g, p));
        }
        for m in &members {
            let prev = orbit_of.insert(*m, id);
            assert!(prev.is_none(), "plane assigned to two orbits");
        }
        orbit_sizes.push(members.len() as u64);
    }
    assert_eq!(orbit_of.len(), planes.len(), "orbits must cover all planes");

    let v0 = base_plane();
    let classes = REPS
        .iter()
        .map(|&(name, one_line)| {
            let g = perm_matrix(one_line);
            // For permutation matrices the inverse is the transpose.
            let label = act_plane(&v0, &transpose(&g), p);
            let orbit = orbit_of[&label];
            CosetClass {
                rep: name,
                orbit,
                size: orbit_sizes[orbit] * p_order,
            }
        })
        .collect();

    Ok(Gl4Cosets {
        field: p,
        group_order: gl4_order(p),
        p_order,
        q_order: q_list.len() as u64,
        borel_order,
        plane_count: planes.len(),
        orbit_count: orbit_sizes.len(),
        orbit_sizes,
        classes,
    })
}

/// Over F2 the cosets are small enough to multiply out elementwise:
/// returns the explicit product-set sizes {q g p} for the four
/// representatives and the size of their union, which must rebuild
/// the whole group without collisions.
pub fn product_set_sizes_f2() -> (Vec<u64>, u64) {
    let p = 2;
    let p_list = collect_shape(p, &P_ZEROS);
    let q_list = collect_shape(p, &Q_ZEROS);
    let key = |m: &Mat| -> u32 {
        let mut k = 0u32;
        for row in m {
            for &e in row {
                k = (k << 1) | u32::from(e);
            }
        }
        k
    };
    let mut union: BTreeSet<u32> = BTreeSet::new();
    let mut sizes = Vec::new();
    for &(_, one_line) in &REPS {
        let g = perm_matrix(one_line);
        let mut set = BTreeSet::new();
        for a in &q_list {
            let ag = mat_mul(a, &g, p);
            for b in &p_list {
                let m = key(&mat_mul(&ag, b, p));
                if set.insert(m) {
                    assert!(
                        !union.contains(&m),
                        "product sets overlap across representatives"
                    );
                }
            }
        }
        for &m in &set {
            union.insert(m);
        }
        sizes.push(set.len() as u64);
    }
    (sizes, union.len() as u64)
}

fn in_shape(m: &Mat, zeros: &[(usize, usize)]) -> bool {
    zeros.iter().all(|&(i, j)| m[i][j] == 0)
}

/// Elementwise verdicts on the unipotent-stabilizer claims used to
/// collapse the two middle cosets to single orbit integrals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerReport {
    /// Every block-radical element tested lies in the plane stabilizer.
    pub radicals_in_p: bool,
    /// Conjugation by (123) carries the rank-one corner radical
    /// (split after row 3) into the flag stabilizer, elementwise.
    pub corner_3_1_lands_in_q: bool,
    /// Conjugation by (243) carries the rank-three corner radical
    /// (split after row 1) into the flag stabilizer, elementwise.
    pub corner_1_3_lands_in_q: bool,
    /// Negative controls: unipotents of the plane stabilizer outside
    /// those radicals conjugate OUT of the flag stabilizer.
    pub controls_escape_q: bool,
}

impl StabilizerReport {
    /// True only if all positive claims hold and the controls fail
    /// as they should.
    pub fn all_hold(&self) -> bool {
        self.radicals_in_p
            && self.corner_3_1_lands_in_q
            && self.corner_1_3_lands_in_q
            && self.controls_escape_q
    }
}

/// Enumerates I + (strictly upper block) for the corner split at
/// `split`: free entries in rows < split, columns >= split.
fn corner_radical(p: u8, split: usize) -> Vec<Mat> {
    let free: Vec<(usize, usize)> = (0..split)
        .flat_map(|i| (split..4).map(move |j| (i, j)))
        .collect();
    let total = u64::from(p).pow(free.len() as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut m = identity();
        let mut c = code;
        for &(i, j) in &free {
            m[i][j] = (c % u64::from(p)) as u8;
            c /= u64::from(p);
        }
        out.push(m);
    }
    out
}

/// Checks the stabilizer claims over F_p elementwise.
pub fn stabilizer_claims(p: u8) -> Result<StabilizerReport, CosetError> {
    if p != 2 && p != 3 {
        return Err(CosetError::FieldTooLarge(p));
    }
    let gamma1 = perm_matrix([2, 3, 1, 4]);
    let gamma2 = perm_matrix([1, 4, 2, 3]);
    let conj = |g: &Mat, u: &Mat| mat_mul(&mat_mul(g, u, p), &transpose(g), p);

    let rad31 = corner_radical(p, 3);
    let rad13 = corner_radical(p, 1);
    let radicals_in_p = rad31
        .iter()
        .chain(rad13.iter())
        .all(|u| in_shape(u, &P_ZEROS));
    let corner_3_1_lands_in_q = rad31.iter().all(|u| in_shape(&conj(&gamma1, u), &Q_ZEROS));
    let corner_1_3_lands_in_q = rad13.iter().all(|u| in_shape(&conj(&gamma2, u), &Q_ZEROS));

    // Controls: lower-corner unipotents inside the plane stabilizer
    // whose conjugates acquire a forbidden entry.
    let mut u43 = identity();
    u43[3][2] = 1;
    let mut u21 = identity();
    u21[1][0] = 1;
    let controls_escape_q = in_shape(&u43, &P_ZEROS)
        && !in_shape(&conj(&gamma1, &u43), &Q_ZEROS)
        && in_shape(&u21, &P_ZEROS)
        && !in_shape(&conj(&gamma2, &u21), &Q_ZEROS);

    Ok(StabilizerReport {
        radicals_in_p,
        corner_3_1_lands_in_q,
        corner_1_3_lands_in_q,
        controls_escape_q,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_matrices_compose_left_to_right() {
        let p = 2;
        let nu_p = perm_matrix([2, 1, 4, 3]);
        let nu_q = perm_matrix([1, 3, 2, 4]);
        // nu_q is an involution, so the product below is nu_p nu_q^{-1}.
        let w = mat_mul(&nu_p, &nu_q, p);
        assert_eq!(w, perm_matrix([2, 4, 1, 3]));
    }

    #[test]
    fn f2_has_four_cosets_with_the_named_representatives() {
        let d = gl4_double_cosets(2).unwrap();
        assert_eq!(d.group_order, 20160);
        assert_eq!(d.p_order, 576);
        assert_eq!(d.q_order, 192);
        assert_eq!(d.borel_order, 64);
        assert_eq!(d.plane_count, 35);
        assert_eq!(d.orbit_count, 4);
        assert_eq!(d.total(), d.group_order);
        assert_eq!(d.p_order, p_order_formula(2));
        assert_eq!(d.q_order, q_order_formula(2));
        assert_eq!(d.borel_order, borel_order_formula(2));
        // The four representatives land in four different orbits.
        let mut orbits: Vec<usize> = d.classes.iter().map(|c| c.orbit).collect();
        orbits.sort_unstable();
        orbits.dedup();
        assert_eq!(orbits.len(), 4);
        // The identity coset is Q P itself.
        let identity_class = d.classes.iter().find(|c| c.rep == "1").unwrap();
        assert_eq!(identity_class.size, d.q_order * d.p_order / d.borel_order);
    }

    #[test]
    fn f3_has_four_cosets_and_consistent_orders() {
        let d = gl4_double_cosets(3).unwrap();
        assert_eq!(d.group_order, 24261120);
        assert_eq!(d.p_order, 186624);
        assert_eq!(d.q_order, 46656);
        assert_eq!(d.borel_order, 11664);
        assert_eq!(d.plane_count, 130);
        assert_eq!(d.orbit_count, 4);
        assert_eq!(d.total(), d.group_order);
        assert_eq!(d.p_order, p_order_formula(3));
        let mut orbits: Vec<usize> = d.classes.iter().map(|c| c.orbit).collect();
        orbits.sort_unstable();
        orbits.dedup();
        assert_eq!(orbits.len(), 4);
        let identity_class = d.classes.iter().find(|c| c.rep == "1").unwrap();
        assert_eq!(identity_class.size, d.q_order * d.p_order / d.borel_order);
    }

    #[test]
    fn f2_product_sets_partition_the_group() {
        let (sizes, union) = product_set_sizes_f2();
        assert_eq!(union, 20160);
        assert_eq!(sizes.iter().sum::<u64>(), union);
        // Sizes match the orbit computation, class by class.
        let d = gl4_double_cosets(2).unwrap();
        let orbit_route: Vec<u64> = d.classes.iter().map(|c| c.size).collect();
        assert_eq!(sizes, orbit_route);
    }

    #[test]
    fn direct_scan_of_the_full_group_over_f2() {
        // No shape constraint at all: every binary 4x4 matrix.
        let mut n = 0u64;
        scan_shape(2, &[], |_| n += 1);
        assert_eq!(n, gl4_order(2));
    }

    #[test]
    fn stabilizer_claims_hold_over_both_fields() {
        for p in [2u8, 3] {
            let report = stabilizer_claims(p).unwrap();
            assert!(report.all_hold(), "claims failed over F_{p}: {report:?}");
        }
    }

    #[test]
    fn large_fields_are_refused() {
        assert_eq!(gl4_double_cosets(5).unwrap_err(), CosetError::FieldTooLarge(5));
        assert_eq!(stabilizer_claims(7).unwrap_err(), CosetError::FieldTooLarge(7));
    }

    #[test]
    fn rref_canonicalizes_spanning_pairs() {
        let a = rref([[1, 1, 0, 0], [0, 0, 1, 1]], 2);
        let b = rref([[1, 1, 1, 1], [0, 0, 1, 1]], 2);
        assert_eq!(a, b);
    }
}
