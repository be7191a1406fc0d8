//! Convex-hull membership as an exact phase-1 linear program.

use num_traits::{One, Signed, Zero};

use super::{RatVec, Rational};

/// Returns true iff `q` is a convex combination of `points`.
///
/// Solves `sum l_i W_i = q`, `sum l_i = 1`, `l >= 0` by minimising the sum of
/// artificial variables with a dense rational tableau. Entering and leaving
/// variables follow Bland's smallest-index rule, so the method terminates.
/// An empty point set has an empty hull.
pub fn convex_combination_exists(q: &RatVec, points: &[RatVec]) -> bool {
    if points.is_empty() || points.iter().any(|p| p.dim() != q.dim()) {
        return false;
    }
    let m = points.len();
    let rows = q.dim() + 1;
    let width = m + rows + 1;
    let rhs_col = width - 1;

    let mut tab: Vec<Vec<Rational>> = (0..rows)
        .map(|r| {
            let mut row = vec![Rational::zero(); width];
            for (i, p) in points.iter().enumerate() {
                row[i] = if r < q.dim() {
                    p[r].clone()
                } else {
                    Rational::one()
                };
            }
            row[m + r] = Rational::one();
            row[rhs_col] = if r < q.dim() {
                q[r].clone()
            } else {
                Rational::one()
            };
            if row[rhs_col].is_negative() {
                for x in row.iter_mut().take(m) {
                    *x = -&*x;
                }
                row[rhs_col] = -&row[rhs_col];
            }
            row
        })
        .collect();
    let mut basis: Vec<usize> = (m..m + rows).collect();

    // Reduced costs of the phase-1 objective (sum of artificials); the last
    // entry holds minus the objective value.
    let mut cost = vec![Rational::zero(); width];
    for row in &tab {
        for j in 0..m {
            cost[j] -= &row[j];
        }
        cost[rhs_col] -= &row[rhs_col];
    }

    while let Some(enter) = (0..rhs_col).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for (r, row) in tab.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = &row[rhs_col] / &row[enter];
            let better = match &leave {
                None => true,
                Some((best_r, best)) => {
                    ratio < *best || (ratio == *best && basis[r] < basis[*best_r])
                }
            };
            if better {
                leave = Some((r, ratio));
            }
        }
        // Phase 1 is bounded below by zero, so a pivot row always exists.
        let (pr, _) = leave.expect("phase-1 objective is bounded");
        pivot(&mut tab, &mut cost, pr, enter);
        basis[pr] = enter;
    }
    cost[rhs_col].is_zero()
}

fn pivot(tab: &mut [Vec<Rational>], cost: &mut [Rational], pr: usize, pc: usize) {
    let inv = tab[pr][pc].recip();
    for x in tab[pr].iter_mut() {
        *x *= &inv;
    }
    let prow = tab[pr].clone();
    for (r, row) in tab.iter_mut().enumerate() {
        if r == pr || row[pc].is_zero() {
            continue;
        }
        let f = row[pc].clone();
        for (x, p) in row.iter_mut().zip(&prow) {
            *x -= &f * p;
        }
    }
    if !cost[pc].is_zero() {
        let f = cost[pc].clone();
        for (x, p) in cost.iter_mut().zip(&prow) {
            *x -= &f * p;
        }
    }
}
