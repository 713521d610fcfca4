//! Exact rational linear-programming feasibility (phase-1 simplex with
//! Bland's rule). Small dense problems only; this backs the
//! proper-intersection test for simplices and the regularity lifting
//! certificates.

use num_traits::{One, Signed, Zero};

use crate::mat::Rat;

/// Find `x` with `eq.0 · x = eq.1` for every equality and
/// `ge.0 · x >= ge.1` for every inequality. Variables are free.
pub fn feasible_point(
    n_vars: usize,
    eqs: &[(Vec<Rat>, Rat)],
    ges: &[(Vec<Rat>, Rat)],
) -> Option<Vec<Rat>> {
    // standard form: x = xp - xm with xp, xm >= 0; one slack per inequality
    let m = eqs.len() + ges.len();
    let n_slack = ges.len();
    let n_struct = 2 * n_vars + n_slack;
    let n_total = n_struct + m; // plus one artificial per row
    let mut tableau: Vec<Vec<Rat>> = Vec::with_capacity(m);
    let build_row = |coeffs: &Vec<Rat>, rhs: &Rat, slack: Option<usize>| {
        assert_eq!(coeffs.len(), n_vars);
        let mut row = vec![Rat::zero(); n_total + 1];
        for (j, c) in coeffs.iter().enumerate() {
            row[j] = c.clone();
            row[n_vars + j] = -c.clone();
        }
        if let Some(s) = slack {
            row[2 * n_vars + s] = -Rat::one();
        }
        row[n_total] = rhs.clone();
        row
    };
    for (coeffs, rhs) in eqs {
        tableau.push(build_row(coeffs, rhs, None));
    }
    for (s, (coeffs, rhs)) in ges.iter().enumerate() {
        tableau.push(build_row(coeffs, rhs, Some(s)));
    }
    // make right-hand sides non-negative, then set artificial columns
    for (i, row) in tableau.iter_mut().enumerate() {
        if row[n_total].is_negative() {
            for v in row.iter_mut() {
                *v = -v.clone();
            }
        }
        row[n_struct + i] = Rat::one();
    }
    let mut basis: Vec<usize> = (0..m).map(|i| n_struct + i).collect();
    // phase-1 objective: minimize the sum of artificials; reduced-cost row
    let mut cost = vec![Rat::zero(); n_total + 1];
    for j in n_struct..n_total {
        cost[j] = Rat::one();
    }
    for row in &tableau {
        for j in 0..=n_total {
            let sub = row[j].clone();
            cost[j] -= sub;
        }
    }
    loop {
        // Bland: entering variable = smallest index with negative cost
        let Some(enter) = (0..n_total).find(|&j| cost[j].is_negative()) else {
            break;
        };
        // ratio test; Bland tie-break on basis variable index
        let mut leave: Option<usize> = None;
        let mut best: Option<Rat> = None;
        for i in 0..m {
            if tableau[i][enter].is_positive() {
                let ratio = &tableau[i][n_total] / &tableau[i][enter];
                let better = match &best {
                    None => true,
                    Some(b) => {
                        ratio < *b
                            || (ratio == *b
                                && basis[i] < basis[leave.expect("tie implies a previous row")])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let Some(leave) = leave else {
            // unbounded phase-1 cannot happen; treat defensively as infeasible
            return None;
        };
        pivot(&mut tableau, &mut cost, &mut basis, leave, enter, n_total);
    }
    // objective value = -cost[rhs]
    if !cost[n_total].is_zero() {
        return None; // artificials cannot be driven to zero
    }
    let mut solution = vec![Rat::zero(); n_total];
    for i in 0..m {
        if basis[i] < n_total {
            solution[basis[i]] = tableau[i][n_total].clone();
        }
    }
    // artificials stuck in the basis must sit at level zero here
    for i in 0..m {
        if basis[i] >= n_struct && !tableau[i][n_total].is_zero() {
            return None;
        }
    }
    Some(
        (0..n_vars)
            .map(|j| &solution[j] - &solution[n_vars + j])
            .collect(),
    )
}

fn pivot(
    tableau: &mut [Vec<Rat>],
    cost: &mut [Rat],
    basis: &mut [usize],
    row: usize,
    col: usize,
    rhs: usize,
) {
    let p = tableau[row][col].clone();
    for v in tableau[row].iter_mut() {
        *v = &*v / &p;
    }
    for i in 0..tableau.len() {
        if i == row || tableau[i][col].is_zero() {
            continue;
        }
        let f = tableau[i][col].clone();
        for j in 0..=rhs {
            let sub = &f * &tableau[row][j];
            tableau[i][j] -= sub;
        }
    }
    if !cost[col].is_zero() {
        let f = cost[col].clone();
        for j in 0..=rhs {
            let sub = &f * &tableau[row][j];
            cost[j] -= sub;
        }
    }
    basis[row] = col;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat::{rat, rat_int};

    #[test]
    fn feasible_equality_system() {
        // x + y = 2, x - y = 0 -> x = y = 1
        let sol = feasible_point(
            2,
            &[
                (vec![rat_int(1), rat_int(1)], rat_int(2)),
                (vec![rat_int(1), rat_int(-1)], rat_int(0)),
            ],
            &[],
        )
        .unwrap();
        assert_eq!(sol, vec![rat_int(1), rat_int(1)]);
    }

    #[test]
    fn feasible_with_inequalities() {
        // x >= 1, -x >= -3 (x <= 3), x = 2 feasible
        let sol = feasible_point(
            1,
            &[],
            &[
                (vec![rat_int(1)], rat_int(1)),
                (vec![rat_int(-1)], rat_int(-3)),
            ],
        )
        .unwrap();
        assert!(sol[0] >= rat_int(1) && sol[0] <= rat_int(3));
    }

    #[test]
    fn infeasible_system() {
        // x >= 1 and -x >= 0 cannot hold
        assert!(feasible_point(
            1,
            &[],
            &[
                (vec![rat_int(1)], rat_int(1)),
                (vec![rat_int(-1)], rat_int(0)),
            ],
        )
        .is_none());
        // x = 1 and x = 2 cannot hold
        assert!(feasible_point(
            1,
            &[
                (vec![rat_int(1)], rat_int(1)),
                (vec![rat_int(1)], rat_int(2)),
            ],
            &[],
        )
        .is_none());
    }

    #[test]
    fn negative_and_fractional_solutions() {
        // 2x = -3 -> x = -3/2
        let sol = feasible_point(1, &[(vec![rat_int(2)], rat_int(-3))], &[]).unwrap();
        assert_eq!(sol[0], rat(-3, 2));
    }
}
