//! Exact feasibility for `A x = b, x ≥ 0` by the phase-1 simplex method.
//!
//! Entering and leaving variables follow Bland's rule, so the method
//! terminates on degenerate problems without perturbation.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Returns a nonnegative solution of `A x = b`, or `None` if there is none.
///
/// `a` is row-major with every row of equal length.
pub fn find_nonnegative_solution(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    assert_eq!(a.len(), b.len(), "row count mismatch");
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    if m == 0 {
        return Some(vec![BigRational::zero(); n]);
    }

    // Tableau over the original columns only; artificial column i is basic
    // in row i initially and is never allowed to re-enter.
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    let mut rhs: Vec<BigRational> = Vec::with_capacity(m);
    for (row, bi) in a.iter().zip(b) {
        assert_eq!(row.len(), n, "ragged constraint matrix");
        if bi.is_negative() {
            rows.push(row.iter().map(|x| -x).collect());
            rhs.push(-bi);
        } else {
            rows.push(row.clone());
            rhs.push(bi.clone());
        }
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Phase-1 objective: minimise the sum of artificials. `obj[j]` is the
    // rate at which that sum drops when column j enters.
    let mut obj: Vec<BigRational> = (0..n)
        .map(|j| rows.iter().fold(BigRational::zero(), |acc, r| acc + &r[j]))
        .collect();
    let mut obj_rhs = rhs.iter().fold(BigRational::zero(), |acc, x| acc + x);

    loop {
        if obj_rhs.is_zero() {
            break;
        }
        let Some(enter) = (0..n).find(|&j| obj[j].is_positive() && !basis.contains(&j)) else {
            break;
        };
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if rows[i][enter].is_positive() {
                let ratio = &rhs[i] / &rows[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // A positive reduced cost comes from a positive column entry in some
        // artificial row, so a leaving row always exists.
        let (pr, _) = leave.expect("phase 1 objective is bounded below");
        pivot(&mut rows, &mut rhs, &mut obj, &mut obj_rhs, pr, enter);
        basis[pr] = enter;
    }

    if !obj_rhs.is_zero() {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = rhs[i].clone();
        }
    }
    Some(x)
}

fn pivot(
    rows: &mut [Vec<BigRational>],
    rhs: &mut [BigRational],
    obj: &mut [BigRational],
    obj_rhs: &mut BigRational,
    pr: usize,
    pc: usize,
) {
    let p = rows[pr][pc].clone();
    for x in rows[pr].iter_mut() {
        *x = &*x / &p;
    }
    rhs[pr] = &rhs[pr] / &p;
    let pivot_row = rows[pr].clone();
    let pivot_rhs = rhs[pr].clone();
    for i in 0..rows.len() {
        if i == pr || rows[i][pc].is_zero() {
            continue;
        }
        let f = rows[i][pc].clone();
        for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
        rhs[i] -= &f * &pivot_rhs;
    }
    if !obj[pc].is_zero() {
        let f = obj[pc].clone();
        for (x, y) in obj.iter_mut().zip(&pivot_row) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
        *obj_rhs -= &f * &pivot_rhs;
    }
}
