//! Double description: extreme rays of `{a : A a >= 0}` for an integer
//! matrix `A` of full column rank.

use num_traits::{Signed, Zero};

use crate::exactlin::{primitive_vector, IntMat, IntVec};

/// Extreme rays (primitive) of the pointed cone `{a in R^k : <row, a> >= 0}`.
///
/// The rows must span `R^k`; the cone is then pointed and the result is
/// independent of the row order up to ordering. Rays are returned in
/// lexicographic order.
pub fn extreme_rays_of_halfspaces(rows: &[IntVec], k: usize) -> Vec<IntVec> {
    let order = processing_order(rows, k);
    let (basis_idx, rest) = order.split_at(k);

    // Initial simplicial cone: columns of the inverse of the basis rows.
    let b = IntMat::from_rows(basis_idx.iter().map(|&i| rows[i].clone()).collect(), k);
    let inv = b.to_rat().inverse().expect("basis rows are independent");
    let mut processed: Vec<usize> = basis_idx.to_vec();
    let mut rays: Vec<IntVec> = (0..k)
        .map(|j| {
            let col: Vec<_> = inv.rows().iter().map(|r| r[j].clone()).collect();
            IntVec::primitive_from_rats(&col).expect("inverse column is nonzero")
        })
        .collect();

    for &r in rest {
        let row = &rows[r];
        let vals: Vec<_> = rays.iter().map(|x| row.dot(x)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        if neg.is_empty() {
            processed.push(r);
            continue;
        }
        let tight: Vec<Vec<bool>> = rays
            .iter()
            .map(|x| processed.iter().map(|&i| rows[i].dot(x).is_zero()).collect())
            .collect();
        let mut next: Vec<IntVec> = (0..rays.len())
            .filter(|&i| !vals[i].is_negative())
            .map(|i| rays[i].clone())
            .collect();
        for &p in &pos {
            for &n in &neg {
                let common: Vec<usize> = (0..processed.len())
                    .filter(|&c| tight[p][c] && tight[n][c])
                    .collect();
                if k >= 2 && common.len() < k - 2 {
                    continue;
                }
                // Combinatorial test: no third ray is tight on the common set.
                let blocked = (0..rays.len()).any(|q| {
                    q != p && q != n && common.iter().all(|&c| tight[q][c])
                });
                if blocked {
                    continue;
                }
                let tight_rows: Vec<IntVec> =
                    common.iter().map(|&c| rows[processed[c]].clone()).collect();
                let rank = if tight_rows.is_empty() {
                    0
                } else {
                    IntMat::from_rows(tight_rows, k).rank()
                };
                if rank + 2 != k {
                    continue;
                }
                let new = rays[n].scale(&vals[p]).add_scaled(&-vals[n].clone(), &rays[p]);
                next.push(primitive_vector(&new).expect("adjacent rays are independent"));
            }
        }
        rays = next;
        processed.push(r);
    }
    rays.sort();
    rays.dedup();
    rays
}

/// Row indices with a maximal independent set first.
fn processing_order(rows: &[IntVec], k: usize) -> Vec<usize> {
    let mut basis: Vec<usize> = Vec::with_capacity(k);
    let mut chosen: Vec<IntVec> = Vec::with_capacity(k);
    for (i, r) in rows.iter().enumerate() {
        if chosen.len() == k {
            break;
        }
        chosen.push(r.clone());
        if IntMat::from_rows(chosen.clone(), k).rank() == chosen.len() {
            basis.push(i);
        } else {
            chosen.pop();
        }
    }
    assert_eq!(basis.len(), k, "rows must span the space");
    let mut order = basis.clone();
    order.extend((0..rows.len()).filter(|i| !basis.contains(i)));
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ivec;

    #[test]
    fn orthant_is_self_dual() {
        let rows = vec![ivec![1, 0, 0], ivec![0, 1, 0], ivec![0, 0, 1]];
        assert_eq!(extreme_rays_of_halfspaces(&rows, 3), {
            let mut r = rows.clone();
            r.sort();
            r
        });
    }

    #[test]
    fn square_cone() {
        // cone over the square with vertices (+-1, +-1, 1)
        let rows = vec![ivec![1, 1, 1], ivec![1, -1, 1], ivec![-1, 1, 1], ivec![-1, -1, 1]];
        let rays = extreme_rays_of_halfspaces(&rows, 3);
        assert_eq!(rays, vec![ivec![-1, 0, 1], ivec![0, -1, 1], ivec![0, 1, 1], ivec![1, 0, 1]]);
    }

    #[test]
    fn one_dimensional() {
        let rows = vec![ivec![2], ivec![5]];
        assert_eq!(extreme_rays_of_halfspaces(&rows, 1), vec![ivec![1]]);
    }
}
