use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::lp::{solve_linear_system, solve_lp, LinearSolve, LpProblem, LpSolution, RowSpace};
use crate::{rat, Allocation, Coalition, CostGame, Rational};

/// The Nucleolus of a cost game with nonempty core, under the excess
/// `e(S, x) = x_S − c(S)`.
///
/// Successive LPs minimize the largest excess over coalitions not yet fixed.
/// A coalition is fixed only once an auxiliary LP shows its excess cannot
/// drop below the optimum while the others stay within it; the scheme stops
/// when the fixed equalities pin down a single point.
///
/// # Panics
/// When an LP fails, which cannot happen for games with nonempty core.
pub fn nucleolus<G: CostGame>(g: &G) -> Allocation {
    let n = g.players();
    let grand = g.grand();
    let indicator =
        |s: Coalition| -> Vec<Rational> { (0..n).map(|i| rat(i64::from(s.contains(i)))).collect() };

    let mut fixed: Vec<(Vec<Rational>, Rational)> = vec![(indicator(grand), g.cost(grand).clone())];
    let mut span = RowSpace::new(n);
    span.insert(&fixed[0].0);
    let mut basis_rows = vec![fixed[0].clone()];
    let mut open: Vec<Coalition> = Coalition::proper(n).collect();

    while !span.is_full() {
        // variables: x_0..x_{n-1}, ε
        let mut objective = vec![Rational::zero(); n + 1];
        objective[n] = rat(1);
        let mut lp = LpProblem::minimize(objective);
        for (row, rhs) in &fixed {
            let mut r = row.clone();
            r.push(Rational::zero());
            lp.add_eq(r, rhs.clone());
        }
        for &s in &open {
            let mut r = indicator(s);
            r.push(rat(-1));
            lp.add_le(r, g.cost(s).clone());
        }
        let (point, eps) = match solve_lp(&lp) {
            LpSolution::Optimal { point, value, .. } => (point, value),
            _ => panic!("nucleolus level LP must be solvable"),
        };

        let mut still_open = Vec::with_capacity(open.len());
        let mut frozen_any = false;
        for (k, &s) in open.iter().enumerate() {
            let row = indicator(s);
            let xs: Rational = row.iter().zip(&point).map(|(a, b)| a * b).sum();
            let bound = g.cost(s) + &eps;
            if xs != bound || !cannot_relax(&fixed, &open, k, &row, g, &eps, n) {
                still_open.push(s);
                continue;
            }
            frozen_any = true;
            if span.insert(&row) {
                basis_rows.push((row.clone(), bound.clone()));
            }
            fixed.push((row, bound));
        }
        assert!(frozen_any, "nucleolus iteration must fix a coalition");
        open = still_open;
    }

    let (matrix, rhs): (Vec<_>, Vec<_>) = basis_rows.into_iter().unzip();
    match solve_linear_system(&matrix, &rhs) {
        LinearSolve::Unique(x) => Allocation::new(x),
        LinearSolve::Singular => unreachable!("fixed rows span the space"),
    }
}

// Whether open coalition `k` is tight in every optimum at level `eps`:
// maximize its slack subject to the level-`eps` feasible region.
fn cannot_relax<G: CostGame>(
    fixed: &[(Vec<Rational>, Rational)],
    open: &[Coalition],
    k: usize,
    row: &[Rational],
    g: &G,
    eps: &Rational,
    n: usize,
) -> bool {
    let mut lp = LpProblem::minimize(row.to_vec());
    for (r, rhs) in fixed {
        lp.add_eq(r.clone(), rhs.clone());
    }
    for &s in open {
        let r = (0..n).map(|i| rat(i64::from(s.contains(i)))).collect();
        lp.add_le(r, g.cost(s) + eps);
    }
    match solve_lp(&lp) {
        LpSolution::Optimal { value, .. } => {
            let max_slack = g.cost(open[k]) + eps - value;
            debug_assert!(!max_slack.is_negative());
            max_slack.is_zero()
        }
        _ => panic!("nucleolus freeze LP must be solvable"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{ratio, TabularGame};

    #[test]
    fn single_player() {
        let g = TabularGame::from_fn(1, |s| if s.is_empty() { rat(0) } else { rat(7) });
        assert_eq!(nucleolus(&g), Allocation::from_integers(&[7]));
    }

    #[test]
    fn two_players_split_the_surplus() {
        let costs = [rat(0), rat(5), rat(8), rat(10)];
        let g = TabularGame::from_fn(2, |s| costs[s.bits() as usize].clone());
        // ((5 + 10 − 8)/2, (8 + 10 − 5)/2)
        assert_eq!(
            nucleolus(&g),
            Allocation::new(vec![ratio(7, 2), ratio(13, 2)])
        );
    }
}
