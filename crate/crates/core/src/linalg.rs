//! Exact Gaussian elimination over the rationals.

use num_traits::Zero;

use crate::scalar::Q;

/// Reduces `m` in place to row echelon form and returns the pivot columns.
fn echelon(m: &mut [Vec<Q>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = Q::from_integer(1) / m[row][col];
        for x in m[row].iter_mut() {
            *x *= inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col];
                let (pivot_row, target) = if r < row {
                    let (a, b) = m.split_at_mut(row);
                    (&b[0], &mut a[r])
                } else {
                    let (a, b) = m.split_at_mut(r);
                    (&a[row], &mut b[0])
                };
                for (t, p) in target.iter_mut().zip(pivot_row.iter()) {
                    *t -= f * *p;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Rank of the matrix whose rows are `rows`.
pub fn rank(rows: &[Vec<Q>]) -> usize {
    let Some(first) = rows.first() else { return 0 };
    let mut m = rows.to_vec();
    echelon(&mut m, first.len()).len()
}

/// Indices of a maximal linearly independent subfamily, chosen greedily in
/// input order.
pub fn independent_rows(rows: &[Vec<Q>]) -> Vec<usize> {
    let mut kept: Vec<Vec<Q>> = Vec::new();
    let mut idx = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        kept.push(r.clone());
        if rank(&kept) == kept.len() {
            idx.push(i);
        } else {
            kept.pop();
        }
    }
    idx
}

/// Coefficients `x` with `Σ x_i basis_i = v`, if `v` lies in the span.
///
/// `basis` must be linearly independent; the solution is then unique.
pub fn solve(basis: &[Vec<Q>], v: &[Q]) -> Option<Vec<Q>> {
    let r = basis.len();
    let dim = v.len();
    // Augmented system: one equation per coordinate.
    let mut m: Vec<Vec<Q>> = (0..dim)
        .map(|c| {
            let mut row: Vec<Q> = basis.iter().map(|b| b[c]).collect();
            row.push(v[c]);
            row
        })
        .collect();
    let pivots = echelon(&mut m, r + 1);
    if pivots.contains(&r) {
        return None;
    }
    let mut x = vec![Q::zero(); r];
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = m[row][r];
    }
    Some(x)
}

/// One solution `w` of `⟨w, rows_i⟩ = values_i`, if the system is consistent.
pub fn solve_dual(rows: &[Vec<Q>], values: &[Q]) -> Option<Vec<Q>> {
    let Some(first) = rows.first() else {
        return Some(Vec::new());
    };
    let n = first.len();
    let mut m: Vec<Vec<Q>> = rows
        .iter()
        .zip(values)
        .map(|(r, v)| {
            let mut row = r.clone();
            row.push(*v);
            row
        })
        .collect();
    let pivots = echelon(&mut m, n + 1);
    if pivots.contains(&n) {
        return None;
    }
    let mut w = vec![Q::zero(); n];
    for (row, &col) in pivots.iter().enumerate() {
        w[col] = m[row][n];
    }
    Some(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::qi;

    fn v(xs: &[i64]) -> Vec<Q> {
        xs.iter().map(|&x| qi(x)).collect()
    }

    #[test]
    fn rank_and_independence() {
        let rows = vec![v(&[1, 0, 1]), v(&[2, 0, 2]), v(&[0, 1, 1]), v(&[1, 1, 2])];
        assert_eq!(rank(&rows), 2);
        assert_eq!(independent_rows(&rows), vec![0, 2]);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn solve_in_basis() {
        let basis = vec![v(&[1, -1, 0]), v(&[0, 1, -1])];
        assert_eq!(solve(&basis, &v(&[1, 0, -1])), Some(v(&[1, 1])));
        assert_eq!(solve(&basis, &v(&[1, 0, 0])), None);
    }

    #[test]
    fn dual_solution_reproduces_values() {
        let rows = vec![v(&[1, -1, 0]), v(&[0, 1, -1])];
        let w = solve_dual(&rows, &v(&[3, 5])).unwrap();
        for (r, val) in rows.iter().zip([3, 5]) {
            let dot: Q = r.iter().zip(&w).map(|(a, b)| *a * *b).sum();
            assert_eq!(dot, qi(val));
        }
    }
}
