//! Decomposition of the tensor products that pair the two sides of the
//! rank-three series identities.
//!
//! - The products in question are `[t,0,v] (x) [0,u,0]`: a representation
//!   whose partition has two equal middle parts times a fundamental-type
//!   rectangle.
//! - [`lr_closed_form`] lists the constituents from an explicit
//!   three-index parametrization; the bounds make every listed weight
//!   automatically dominant.
//! - [`lr_oracle`] recounts the same product by brute force: it
//!   enumerates skew tableaux (weakly increasing rows, strictly
//!   increasing columns, reverse reading word a lattice word) for every
//!   candidate shape, which is the classical combinatorial rule.
//! - Both return sorted multisets so equality is plain `Vec` equality.

use super::a3::WeightA3;

/// Constituents of `[t,0,v] (x) [0,u,0]` from the closed-form index set.
pub fn lr_closed_form(t: u32, u: u32, v: u32) -> Vec<WeightA3> {
    let (t, u, v) = (i64::from(t), i64::from(u), i64::from(v));
    let mut out = Vec::new();
    for i in 0..=t.min(u) {
        for j in 0..=(u - i) {
            for k in 0..=i {
                if j + k < u - v {
                    continue;
                }
                let l = t + u - 2 * i - j;
                let m = i + j - k;
                let n = v - u + j + 2 * k;
                debug_assert!(l >= 0 && m >= 0 && n >= 0);
                out.push(WeightA3::new(l as u32, m as u32, n as u32));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Counts the skew tableaux of shape `lam / mu` with the given content
/// whose reverse reading word is a lattice word.
fn count_lattice_tableaux(lam: [u32; 4], mu: [u32; 4], content: [u32; 4]) -> u64 {
    // Cells in reverse reading order: rows top to bottom, each row right
    // to left, so the lattice property can be checked as cells are placed
    // and every row/column neighbor that constrains a cell is already
    // filled.
    let mut cells = Vec::new();
    for r in 0..4 {
        for c in (mu[r]..lam[r]).rev() {
            cells.push((r, c as usize));
        }
    }
    let mut grid = [[0u8; 32]; 4];
    let mut used = [0u32; 5];
    fn rec(
        cells: &[(usize, usize)],
        pos: usize,
        lam: &[u32; 4],
        mu: &[u32; 4],
        content: &[u32; 4],
        grid: &mut [[u8; 32]; 4],
        used: &mut [u32; 5],
    ) -> u64 {
        if pos == cells.len() {
            return 1;
        }
        let (r, c) = cells[pos];
        let mut total = 0;
        for x in 1..=4u8 {
            let xi = x as usize;
            if used[xi] >= content[xi - 1] {
                continue;
            }
            // Lattice: after placing x, earlier letters must still lead.
            if x > 1 && used[xi - 1] <= used[xi] {
                continue;
            }
            // Row: weakly increasing left to right.
            if (c as u32) + 1 < lam[r] && x > grid[r][c + 1] {
                continue;
            }
            // Column: strictly increasing downward, against a filled cell.
            if r > 0 && (c as u32) >= mu[r - 1] && x <= grid[r - 1][c] {
                continue;
            }
            grid[r][c] = x;
            used[xi] += 1;
            total += rec(cells, pos + 1, lam, mu, content, grid, used);
            used[xi] -= 1;
            grid[r][c] = 0;
        }
        total
    }
    rec(&cells, 0, &lam, &mu, &content, &mut grid, &mut used)
}

/// Constituents of `[t,0,v] (x) [0,u,0]` by the combinatorial rule.
pub fn lr_oracle(t: u32, u: u32, v: u32) -> Vec<WeightA3> {
    let mu = [t + v, v, v, 0];
    let nu_total = 2 * u;
    let target = mu.iter().sum::<u32>() + nu_total;
    let mut out = Vec::new();
    // Candidate shapes: partitions of the right size containing mu, with
    // at most four rows; each row can grow by at most the strip width u.
    for l1 in mu[0]..=mu[0] + u {
        for l2 in mu[1]..=(mu[1] + u).min(l1) {
            for l3 in mu[2]..=(mu[2] + u).min(l2) {
                for l4 in mu[3]..=(mu[3] + u).min(l3) {
                    let lam = [l1, l2, l3, l4];
                    if lam.iter().sum::<u32>() != target {
                        continue;
                    }
                    let count = count_lattice_tableaux(lam, mu, [u, u, 0, 0]);
                    let w = WeightA3::new(l1 - l2, l2 - l3, l3 - l4);
                    for _ in 0..count {
                        out.push(w);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_mixed_product() {
        let expect = vec![WeightA3::new(0, 0, 1), WeightA3::new(1, 1, 0)];
        assert_eq!(lr_closed_form(1, 1, 0), expect.clone());
        assert_eq!(lr_oracle(1, 1, 0), expect);
    }

    #[test]
    fn product_with_trivial_factor_is_identity() {
        assert_eq!(lr_closed_form(2, 0, 3), vec![WeightA3::new(2, 0, 3)]);
        assert_eq!(lr_oracle(2, 0, 3), vec![WeightA3::new(2, 0, 3)]);
        assert_eq!(lr_closed_form(0, 2, 0), vec![WeightA3::new(0, 2, 0)]);
        assert_eq!(lr_oracle(0, 2, 0), vec![WeightA3::new(0, 2, 0)]);
    }

    #[test]
    fn closed_form_matches_oracle_on_a_grid() {
        for t in 0..=2 {
            for u in 0..=2 {
                for v in 0..=2 {
                    assert_eq!(
                        lr_closed_form(t, u, v),
                        lr_oracle(t, u, v),
                        "t={t} u={u} v={v}"
                    );
                }
            }
        }
    }

    #[test]
    fn dimensions_are_preserved() {
        for (t, u, v) in [(1, 1, 0), (2, 1, 0), (1, 2, 1), (2, 2, 2), (3, 2, 1)] {
            let lhs: u64 = WeightA3::new(t, 0, v).dim() * WeightA3::new(0, u, 0).dim();
            let rhs: u64 = lr_closed_form(t, u, v).iter().map(WeightA3::dim).sum();
            assert_eq!(lhs, rhs, "t={t} u={u} v={v}");
        }
    }
}
