//! Exact phase-1 simplex for feasibility of `A x = b, x >= 0`.
//!
//! Dense tableau, Bland's rule for both entering and leaving variables, no
//! floating point. When the system is infeasible the final tableau yields a
//! Farkas certificate `y` with `yᵀA <= 0` and `yᵀb > 0`.

use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility<S> {
    /// A nonnegative solution of `A x = b`.
    Feasible(Vec<S>),
    /// `y` with `yᵀA_j <= 0` for every column and `yᵀb > 0`.
    Infeasible(Vec<S>),
}

struct Tableau<S> {
    /// `rows × (ncols + rows)` constraint block followed by the right-hand side.
    rows: Vec<Vec<S>>,
    /// Reduced costs of all columns; the last entry is minus the objective.
    cost: Vec<S>,
    basis: Vec<usize>,
}

impl<S: Scalar> Tableau<S> {
    fn width(&self) -> usize {
        self.cost.len() - 1
    }

    fn pivot(&mut self, r: usize, col: usize) {
        let inv = S::one() / self.rows[r][col].clone();
        for v in self.rows[r].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        let pivot_row = self.rows[r].clone();
        let eliminate = |row: &mut Vec<S>| {
            let factor = row[col].clone();
            if factor.is_zero() {
                return;
            }
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v = v.clone() - factor.clone() * p.clone();
                }
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row);
            }
        }
        eliminate(&mut self.cost);
        self.basis[r] = col;
    }

    /// Runs Bland's rule until no reduced cost is negative.
    fn optimize(&mut self) {
        loop {
            let Some(enter) = (0..self.width()).find(|&j| self.cost[j].is_negative()) else {
                return;
            };
            let rhs = self.width();
            let mut best: Option<(usize, S)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[enter].is_positive() {
                    continue;
                }
                let ratio = row[rhs].clone() / row[enter].clone();
                best = match best {
                    None => Some((i, ratio)),
                    Some((bi, br)) => {
                        if ratio < br || (ratio == br && self.basis[i] < self.basis[bi]) {
                            Some((i, ratio))
                        } else {
                            Some((bi, br))
                        }
                    }
                };
            }
            // Phase-1 objectives are bounded below by zero.
            let (leave, _) = best.expect("phase-1 problem cannot be unbounded");
            self.pivot(leave, enter);
        }
    }
}

/// Decides whether `A x = b` has a solution with `x >= 0`.
///
/// `a` is given row by row; every row must have the same length.
pub fn phase_one<S: Scalar>(a: &[Vec<S>], b: &[S]) -> Feasibility<S> {
    assert_eq!(a.len(), b.len());
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let signs: Vec<S> = b
        .iter()
        .map(|bi| if bi.is_negative() { -S::one() } else { S::one() })
        .collect();

    let mut rows = Vec::with_capacity(m);
    for i in 0..m {
        assert_eq!(a[i].len(), n);
        let mut row: Vec<S> = a[i].iter().map(|v| v.clone() * signs[i].clone()).collect();
        row.extend((0..m).map(|k| if k == i { S::one() } else { S::zero() }));
        row.push(b[i].clone() * signs[i].clone());
        rows.push(row);
    }
    // cost 1 on artificials; price them out of the objective row
    let mut cost = vec![S::zero(); n + m + 1];
    for row in &rows {
        for j in 0..n {
            cost[j] = cost[j].clone() - row[j].clone();
        }
        cost[n + m] = cost[n + m].clone() - row[n + m].clone();
    }
    let mut t = Tableau { rows, cost, basis: (n..n + m).collect() };
    t.optimize();

    let objective = -t.cost[n + m].clone();
    if objective.is_zero() {
        let mut x = vec![S::zero(); n];
        for (i, &col) in t.basis.iter().enumerate() {
            if col < n {
                x[col] = t.rows[i][n + m].clone();
            }
        }
        Feasibility::Feasible(x)
    } else {
        // reduced cost of artificial i is 1 - y'_i
        let y = (0..m)
            .map(|i| (S::one() - t.cost[n + i].clone()) * signs[i].clone())
            .collect();
        Feasibility::Infeasible(y)
    }
}
