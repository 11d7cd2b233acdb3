//! Double cosets of the quasi-split unitary similitude group in four
//! variables over F2, for the same pair of parabolics: the plane
//! stabilizer and the line stabilizer of the distinguished isotropic
//! flag.
//!
//! Scalars live in F4 with entries encoded as two-bit codes (0, 1,
//! w, w^2); addition is XOR and multiplication, inversion, and the
//! Frobenius x -> x^2 are table lookups. Over F2 the similitude
//! factor is trivial, so the group is cut out by g J conj(g)^T = J
//! with J the antidiagonal of ones. The group is built as a
//! breadth-first closure of explicit generators (all unitary upper
//! unipotents, the torus, and the two intertwiner permutations) and
//! its order is compared against the classical product formula. The
//! double cosets come out of line-stabilizer orbits on the 27
//! isotropic planes.

use std::collections::{BTreeSet, HashSet};
use std::sync::OnceLock;

use super::CosetClass;

/// Multiplication table for F4 codes 0, 1, w, w^2.
const MUL: [[u8; 4]; 4] = [
    [0, 0, 0, 0],
    [0, 1, 2, 3],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
];

/// Multiplicative inverses (index 0 unused).
const INV: [u8; 4] = [0, 1, 3, 2];

/// Frobenius x -> x^2, the nontrivial automorphism over F2.
const FROB: [u8; 4] = [0, 1, 3, 2];

/// A 4x4 matrix over F4.
pub type MatG = [[u8; 4]; 4];

/// Canonical echelon basis of a plane in F4^4.
pub type PlaneG = [[u8; 4]; 2];

fn f4_mul(a: u8, b: u8) -> u8 {
    MUL[a as usize][b as usize]
}

/// The Gram matrix of the pairing in the distinguished basis: the
/// antidiagonal of ones (signs collapse in characteristic two).
pub fn gram() -> MatG {
    let mut j = [[0u8; 4]; 4];
    for i in 0..4 {
        j[i][3 - i] = 1;
    }
    j
}

/// Identity matrix.
pub fn identity_g() -> MatG {
    let mut m = [[0u8; 4]; 4];
    for i in 0..4 {
        m[i][i] = 1;
    }
    m
}

/// Permutation matrix in the same column convention as the linear
/// case: entry (sigma(i), i) is 1.
pub fn perm_matrix_g(one_line: [usize; 4]) -> MatG {
    let mut m = [[0u8; 4]; 4];
    for (i, &s) in one_line.iter().enumerate() {
        m[s - 1][i] = 1;
    }
    m
}

/// Matrix product over F4.
pub fn mul_g(a: &MatG, b: &MatG) -> MatG {
    let mut out = [[0u8; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let mut acc = 0u8;
            for k in 0..4 {
                acc ^= f4_mul(a[i][k], b[k][j]);
            }
            out[i][j] = acc;
        }
    }
    out
}

/// Conjugate transpose: transpose with Frobenius on every entry.
pub fn conj_transpose(m: &MatG) -> MatG {
    let mut out = [[0u8; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[j][i] = FROB[m[i][j] as usize];
        }
    }
    out
}

/// Membership test: g preserves the pairing.
pub fn is_unitary(g: &MatG) -> bool {
    let j = gram();
    mul_g(&mul_g(g, &j), &conj_transpose(g)) == j
}

/// Inverse of a unitary matrix: J conj(g)^T J, since J squares to
/// the identity.
pub fn unitary_inverse(g: &MatG) -> MatG {
    let j = gram();
    mul_g(&mul_g(&j, &conj_transpose(g)), &j)
}

fn key_g(m: &MatG) -> u32 {
    let mut k = 0u32;
    for row in m {
        for &e in row {
            k = (k << 2) | u32::from(e);
        }
    }
    k
}

/// All unipotent upper-triangular matrices that preserve the
/// pairing; there are exactly 64.
pub fn unitary_uppers() -> Vec<MatG> {
    let free = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let mut out = Vec::new();
    for code in 0..4u32.pow(6) {
        let mut m = identity_g();
        let mut c = code;
        for &(i, j) in &free {
            m[i][j] = (c % 4) as u8;
            c /= 4;
        }
        if is_unitary(&m) {
            out.push(m);
        }
    }
    out
}

/// The diagonal torus diag(a, b, frob(b)^{-1}, frob(a)^{-1}) for
/// nonzero a, b; nine elements.
pub fn torus_elements() -> Vec<MatG> {
    let mut out = Vec::new();
    for a in 1..4u8 {
        for b in 1..4u8 {
            let mut m = [[0u8; 4]; 4];
            m[0][0] = a;
            m[1][1] = b;
            m[2][2] = INV[FROB[b as usize] as usize];
            m[3][3] = INV[FROB[a as usize] as usize];
            assert!(is_unitary(&m), "torus element fails the pairing");
            out.push(m);
        }
    }
    out
}

/// The intertwiner permutations: the double block swap for the plane
/// parabolic and the middle swap (the sign it carries in
/// characteristic zero vanishes over F2) for the line parabolic.
pub fn nu_p() -> MatG {
    perm_matrix_g([2, 1, 4, 3])
}

/// See [`nu_p`].
pub fn nu_q() -> MatG {
    perm_matrix_g([1, 3, 2, 4])
}

/// Reduced row-echelon form over F4.
fn rref_g(rows: PlaneG) -> PlaneG {
    let mut w = rows;
    let mut r = 0;
    for c in 0..4 {
        if let Some(k) = (r..2).find(|&k| w[k][c] != 0) {
            w.swap(r, k);
            let inv = INV[w[r][c] as usize];
            for j in 0..4 {
                w[r][j] = f4_mul(w[r][j], inv);
            }
            for k in 0..2 {
                if k != r && w[k][c] != 0 {
                    let f = w[k][c];
                    for j in 0..4 {
                        w[k][j] ^= f4_mul(f, w[r][j]);
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

fn decode_vec(code: u32) -> [u8; 4] {
    let mut v = [0u8; 4];
    let mut c = code;
    for slot in &mut v {
        *slot = (c % 4) as u8;
        c /= 4;
    }
    v
}

/// The pairing value of two row vectors.
pub fn pair(u: &[u8; 4], v: &[u8; 4]) -> u8 {
    let mut acc = 0u8;
    for i in 0..4 {
        acc ^= f4_mul(u[i], FROB[v[3 - i] as usize]);
    }
    acc
}

fn is_isotropic(plane: &PlaneG) -> bool {
    let (a, b) = (&plane[0], &plane[1]);
    pair(a, a) == 0 && pair(a, b) == 0 && pair(b, a) == 0 && pair(b, b) == 0
}

/// All planes in F4^4 (there are 357) and, filtered, the isotropic
/// ones (there are 27).
pub fn all_planes_g() -> Vec<PlaneG> {
    let mut seen = BTreeSet::new();
    for c1 in 1..256u32 {
        let v1 = decode_vec(c1);
        for c2 in 1..256u32 {
            let v2 = decode_vec(c2);
            let dependent = (0..4u8).any(|t| (0..4).all(|j| f4_mul(t, v1[j]) == v2[j]));
            if dependent {
                continue;
            }
            seen.insert(rref_g([v1, v2]));
        }
    }
    seen.into_iter().collect()
}

/// Number of isotropic lines, counted over canonical spanning
/// vectors (leading coefficient one).
pub fn isotropic_line_count() -> usize {
    let mut n = 0;
    for c in 1..256u32 {
        let v = decode_vec(c);
        let lead = v.iter().find(|&&e| e != 0).copied().unwrap();
        if lead == 1 && pair(&v, &v) == 0 {
            n += 1;
        }
    }
    n
}

fn act_plane_g(plane: &PlaneG, g: &MatG) -> PlaneG {
    let mut rows = [[0u8; 4]; 2];
    for r in 0..2 {
        for j in 0..4 {
            let mut acc = 0u8;
            for i in 0..4 {
                acc ^= f4_mul(plane[r][i], g[i][j]);
            }
            rows[r][j] = acc;
        }
    }
    rref_g(rows)
}

/// The distinguished isotropic plane: span of the last two
/// coordinate rows.
pub fn base_plane_g() -> PlaneG {
    [[0, 0, 1, 0], [0, 0, 0, 1]]
}

/// Everything the enumeration establishes about the unitary group
/// and its double cosets.
#[derive(Debug, Clone)]
pub struct Gu4Cosets {
    /// Group order by breadth-first closure.
    pub group_order: u64,
    /// Group order from the classical product formula.
    pub formula_order: u64,
    /// Plane-stabilizer order by filtering the element list.
    pub p_order: u64,
    /// Line-stabilizer order by filtering the element list.
    pub q_order: u64,
    /// Intersection of the two stabilizers.
    pub borel_order: u64,
    /// Number of planes in F4^4.
    pub plane_total: usize,
    /// Number of isotropic planes.
    pub isotropic_planes: usize,
    /// Number of isotropic lines.
    pub isotropic_lines: usize,
    /// Unitary unipotent upper-triangular matrices found by scan.
    pub upper_count: usize,
    /// Torus elements.
    pub torus_count: usize,
    /// Number of line-stabilizer orbits on isotropic planes.
    pub orbit_count: usize,
    /// Orbit sizes in sweep order.
    pub orbit_sizes: Vec<u64>,
    /// The two named representatives with orbit ids and coset sizes.
    pub classes: Vec<CosetClass>,
}

impl Gu4Cosets {
    /// Sum of the double-coset sizes.
    pub fn total(&self) -> u64 {
        self.orbit_sizes.iter().map(|len| len * self.p_order).sum()
    }
}

/// Classical order formula q^6 (q+1)(q^2-1)(q^3+1)(q^4-1) at q = 2.
pub fn gu4_order_formula() -> u64 {
    let q = 2u64;
    q.pow(6) * (q + 1) * (q * q - 1) * (q.pow(3) + 1) * (q.pow(4) - 1)
}

fn build() -> Gu4Cosets {
    let uppers = unitary_uppers();
    let torus = torus_elements();
    assert!(is_unitary(&nu_p()), "block swap fails the pairing");
    assert!(is_unitary(&nu_q()), "middle swap fails the pairing");

    let mut gens: Vec<MatG> = Vec::new();
    gens.extend_from_slice(&uppers);
    gens.extend_from_slice(&torus);
    gens.push(nu_p());
    gens.push(nu_q());
    gens.push(gram());

    // Breadth-first closure from the identity.
    let mut elements = vec![identity_g()];
    let mut seen: HashSet<u32> = HashSet::new();
    seen.insert(key_g(&elements[0]));
    let mut head = 0;
    while head < elements.len() {
        let g = elements[head];
        head += 1;
        for gen in &gens {
            let h = mul_g(&g, gen);
            if seen.insert(key_g(&h)) {
                elements.push(h);
            }
        }
    }
    for g in &elements {
        debug_assert!(is_unitary(g));
    }

    // Parabolic subgroups by row-shape filters on the element list.
    let in_q = |g: &MatG| g[3][0] == 0 && g[3][1] == 0 && g[3][2] == 0;
    let in_p = |g: &MatG| g[2][0] == 0 && g[2][1] == 0 && g[3][0] == 0 && g[3][1] == 0;
    let q_list: Vec<MatG> = elements.iter().filter(|g| in_q(g)).copied().collect();
    let p_order = elements.iter().filter(|g| in_p(g)).count() as u64;
    let borel_order = elements.iter().filter(|g| in_p(g) && in_q(g)).count() as u64;

    let planes = all_planes_g();
    let isotropic: Vec<PlaneG> = planes.iter().filter(|pl| is_isotropic(pl)).copied().collect();
    assert!(is_isotropic(&base_plane_g()), "base plane must be isotropic");

    // Line-stabilizer orbits on the isotropic planes.
    let mut orbit_of: std::collections::BTreeMap<PlaneG, usize> = std::collections::BTreeMap::new();
    let mut orbit_sizes = Vec::new();
    for start in &isotropic {
        if orbit_of.contains_key(start) {
            continue;
        }
        let id = orbit_sizes.len();
        let mut members = BTreeSet::new();
        for g in &q_list {
            members.insert(act_plane_g(start, g));
        }
        for m in &members {
            let prev = orbit_of.insert(*m, id);
            assert!(prev.is_none(), "plane assigned to two orbits");
        }
        orbit_sizes.push(members.len() as u64);
    }
    assert_eq!(orbit_of.len(), isotropic.len(), "orbits must cover the isotropic planes");

    let v0 = base_plane_g();
    let reps: [(&'static str, MatG); 2] = [("1", identity_g()), ("(1243)", mul_g(&nu_p(), &nu_q()))];
    let classes = reps
        .iter()
        .map(|(name, g)| {
            let label = act_plane_g(&v0, &unitary_inverse(g));
            let orbit = orbit_of[&label];
            CosetClass {
                rep: name,
                orbit,
                size: orbit_sizes[orbit] * p_order,
            }
        })
        .collect();

    Gu4Cosets {
        group_order: elements.len() as u64,
        formula_order: gu4_order_formula(),
        p_order,
        q_order: q_list.len() as u64,
        borel_order,
        plane_total: planes.len(),
        isotropic_planes: isotropic.len(),
        isotropic_lines: isotropic_line_count(),
        upper_count: uppers.len(),
        torus_count: torus.len(),
        orbit_count: orbit_sizes.len(),
        orbit_sizes,
        classes,
    }
}

/// Enumerates the unitary group over F2 and its double cosets; the
/// result is computed once and cached for the life of the process.
pub fn gu4_double_cosets() -> &'static Gu4Cosets {
    static CACHE: OnceLock<Gu4Cosets> = OnceLock::new();
    CACHE.get_or_init(build)
}
