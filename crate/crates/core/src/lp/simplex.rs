//! Two-phase primal simplex on a dense rational tableau.
//!
//! Pivoting follows Bland's smallest-index rule for both the entering
//! column and ties in the ratio test, so every solve terminates and the
//! returned vertex depends only on the problem data.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::Rational;

/// `minimize objective · x` subject to `A x <= b` and `E x = d`, with every
/// variable free in sign unless a row bounds it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpProblem {
    objective: Vec<Rational>,
    le_rows: Vec<Vec<Rational>>,
    le_rhs: Vec<Rational>,
    eq_rows: Vec<Vec<Rational>>,
    eq_rhs: Vec<Rational>,
}

impl LpProblem {
    pub fn minimize(objective: Vec<Rational>) -> Self {
        Self {
            objective,
            le_rows: Vec::new(),
            le_rhs: Vec::new(),
            eq_rows: Vec::new(),
            eq_rhs: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    /// # Panics
    /// When `row` does not have one entry per variable.
    pub fn add_le(&mut self, row: Vec<Rational>, rhs: Rational) -> &mut Self {
        assert_eq!(row.len(), self.num_vars(), "inequality row width");
        self.le_rows.push(row);
        self.le_rhs.push(rhs);
        self
    }

    /// # Panics
    /// When `row` does not have one entry per variable.
    pub fn add_eq(&mut self, row: Vec<Rational>, rhs: Rational) -> &mut Self {
        assert_eq!(row.len(), self.num_vars(), "equality row width");
        self.eq_rows.push(row);
        self.eq_rhs.push(rhs);
        self
    }

    pub fn objective(&self) -> &[Rational] {
        &self.objective
    }

    pub fn inequalities(&self) -> impl Iterator<Item = (&[Rational], &Rational)> {
        self.le_rows.iter().map(Vec::as_slice).zip(&self.le_rhs)
    }

    pub fn equalities(&self) -> impl Iterator<Item = (&[Rational], &Rational)> {
        self.eq_rows.iter().map(Vec::as_slice).zip(&self.eq_rhs)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpSolution {
    Optimal {
        point: Vec<Rational>,
        value: Rational,
        /// Indices of the inequality rows that hold with equality.
        tight: Vec<usize>,
    },
    Infeasible,
    Unbounded,
}

impl LpSolution {
    pub fn status(&self) -> LpStatus {
        match self {
            LpSolution::Optimal { .. } => LpStatus::Optimal,
            LpSolution::Infeasible => LpStatus::Infeasible,
            LpSolution::Unbounded => LpStatus::Unbounded,
        }
    }

    pub fn point(&self) -> Option<&[Rational]> {
        match self {
            LpSolution::Optimal { point, .. } => Some(point),
            _ => None,
        }
    }

    pub fn value(&self) -> Option<&Rational> {
        match self {
            LpSolution::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }
}

fn dot(a: &[Rational], x: &[Rational]) -> Rational {
    a.iter()
        .zip(x)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, v)| c * v)
        .sum()
}

struct Tableau {
    // m rows of (columns..., rhs)
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    cols: usize,
}

enum Outcome {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rational {
        &self.rows[i][self.cols]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        let pivot_row = core::mem::take(&mut self.rows[r]);
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
        self.rows[r] = pivot_row;
        self.basis[r] = c;
    }

    /// Runs simplex iterations for `cost` restricted to columns `< active`.
    fn optimize(&mut self, cost: &[Rational], active: usize) -> Outcome {
        loop {
            let mut is_basic = vec![false; self.cols];
            for &b in &self.basis {
                is_basic[b] = true;
            }
            let entering = (0..active).find(|&j| {
                if is_basic[j] {
                    return false;
                }
                let mut reduced = cost[j].clone();
                for (row, &b) in self.rows.iter().zip(&self.basis) {
                    if !row[j].is_zero() && !cost[b].is_zero() {
                        reduced -= &cost[b] * &row[j];
                    }
                }
                reduced.is_negative()
            });
            let Some(j) = entering else {
                return Outcome::Optimal;
            };

            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][j];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &leave {
                    None => true,
                    Some((k, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*k])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, j),
                None => return Outcome::Unbounded,
            }
        }
    }
}

/// Solves `problem` exactly. Infeasibility and unboundedness are reported
/// through the returned status.
pub fn solve_lp(problem: &LpProblem) -> LpSolution {
    let nv = problem.num_vars();
    let m_le = problem.le_rows.len();
    let m_eq = problem.eq_rows.len();
    let m = m_le + m_eq;
    // split x = x⁺ − x⁻, one slack per inequality
    let structural = 2 * nv + m_le;

    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(m);
    let mut needs_artificial = Vec::with_capacity(m);
    let mut basis = vec![usize::MAX; m];
    for (k, (a, b)) in problem
        .inequalities()
        .chain(problem.equalities())
        .enumerate()
    {
        let mut row = vec![Rational::zero(); structural];
        for (j, c) in a.iter().enumerate() {
            row[j] = c.clone();
            row[nv + j] = -c;
        }
        let is_le = k < m_le;
        if is_le {
            row[2 * nv + k] = Rational::from_integer(1.into());
        }
        let mut rhs = b.clone();
        if rhs.is_negative() {
            for v in row.iter_mut() {
                *v = -&*v;
            }
            rhs = -rhs;
            needs_artificial.push(true);
        } else if is_le {
            basis[k] = 2 * nv + k;
            needs_artificial.push(false);
        } else {
            needs_artificial.push(true);
        }
        row.push(rhs);
        rows.push(row);
    }

    let n_art = needs_artificial.iter().filter(|&&x| x).count();
    let cols = structural + n_art;
    let mut next_art = structural;
    for (i, row) in rows.iter_mut().enumerate() {
        let rhs = row.pop().unwrap();
        row.resize(cols, Rational::zero());
        if needs_artificial[i] {
            row[next_art] = Rational::from_integer(1.into());
            basis[i] = next_art;
            next_art += 1;
        }
        row.push(rhs);
    }

    let mut tab = Tableau { rows, basis, cols };

    if n_art > 0 {
        let mut phase1 = vec![Rational::zero(); cols];
        for c in phase1[structural..].iter_mut() {
            *c = Rational::from_integer(1.into());
        }
        // Phase 1 is bounded below by zero.
        let _ = tab.optimize(&phase1, cols);
        let infeasibility: Rational = tab
            .basis
            .iter()
            .enumerate()
            .filter(|(_, &b)| b >= structural)
            .map(|(i, _)| tab.rhs(i).clone())
            .sum();
        if infeasibility.is_positive() {
            return LpSolution::Infeasible;
        }
        // Drive zero-valued artificials out of the basis; rows where that is
        // impossible are redundant.
        let mut i = 0;
        while i < tab.rows.len() {
            if tab.basis[i] < structural {
                i += 1;
                continue;
            }
            match (0..structural).find(|&j| !tab.rows[i][j].is_zero()) {
                Some(j) => {
                    tab.pivot(i, j);
                    i += 1;
                }
                None => {
                    tab.rows.remove(i);
                    tab.basis.remove(i);
                }
            }
        }
        for row in tab.rows.iter_mut() {
            let rhs = row.pop().unwrap();
            row.truncate(structural);
            row.push(rhs);
        }
        tab.cols = structural;
    }

    let mut cost = vec![Rational::zero(); structural];
    for (j, c) in problem.objective.iter().enumerate() {
        cost[j] = c.clone();
        cost[nv + j] = -c;
    }
    if let Outcome::Unbounded = tab.optimize(&cost, structural) {
        return LpSolution::Unbounded;
    }

    let mut values = vec![Rational::zero(); structural];
    for (i, &b) in tab.basis.iter().enumerate() {
        values[b] = tab.rhs(i).clone();
    }
    let point: Vec<Rational> = (0..nv).map(|j| &values[j] - &values[nv + j]).collect();
    let value = dot(&problem.objective, &point);
    let tight = problem
        .inequalities()
        .enumerate()
        .filter(|(_, (a, b))| dot(a, &point) == **b)
        .map(|(k, _)| k)
        .collect();
    LpSolution::Optimal {
        point,
        value,
        tight,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};

    fn r(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    fn assert_feasible(p: &LpProblem, x: &[Rational]) {
        for (a, b) in p.inequalities() {
            assert!(dot(a, x) <= *b);
        }
        for (a, d) in p.equalities() {
            assert_eq!(dot(a, x), *d);
        }
    }

    #[test]
    fn single_lower_bound() {
        let mut p = LpProblem::minimize(r(&[1]));
        p.add_le(r(&[-1]), rat(-3));
        let sol = solve_lp(&p);
        assert_eq!(sol.point(), Some(&r(&[3])[..]));
        assert_eq!(sol.value(), Some(&rat(3)));
        let LpSolution::Optimal { tight, .. } = sol else {
            panic!()
        };
        assert_eq!(tight, [0]);
    }

    #[test]
    fn zero_objective_is_deterministic() {
        let mut p = LpProblem::minimize(r(&[0]));
        p.add_le(r(&[1]), rat(1)).add_le(r(&[-1]), rat(0));
        let first = solve_lp(&p);
        assert_eq!(first.status(), LpStatus::Optimal);
        assert_feasible(&p, first.point().unwrap());
        for _ in 0..5 {
            assert_eq!(solve_lp(&p), first);
        }
    }

    #[test]
    fn detects_infeasible_and_unbounded() {
        let mut p = LpProblem::minimize(r(&[1]));
        p.add_le(r(&[1]), rat(1)).add_le(r(&[-1]), rat(-2));
        assert_eq!(solve_lp(&p).status(), LpStatus::Infeasible);

        let mut p = LpProblem::minimize(r(&[1, 0]));
        p.add_le(r(&[0, 1]), rat(4));
        assert_eq!(solve_lp(&p).status(), LpStatus::Unbounded);

        let mut p = LpProblem::minimize(r(&[0, 0]));
        p.add_eq(r(&[1, 1]), rat(1)).add_eq(r(&[2, 2]), rat(3));
        assert_eq!(solve_lp(&p).status(), LpStatus::Infeasible);
    }

    #[test]
    fn redundant_equalities_are_tolerated() {
        let mut p = LpProblem::minimize(r(&[1, 2]));
        p.add_eq(r(&[1, 1]), rat(5))
            .add_eq(r(&[2, 2]), rat(10))
            .add_le(r(&[-1, 0]), rat(0))
            .add_le(r(&[0, -1]), rat(0));
        let sol = solve_lp(&p);
        assert_eq!(sol.point(), Some(&r(&[5, 0])[..]));
        assert_eq!(sol.value(), Some(&rat(5)));
    }

    #[test]
    fn negative_optimum_with_free_variables() {
        // minimize x + y  s.t. x >= -7/2, y >= -1, x - y <= 0
        let mut p = LpProblem::minimize(r(&[1, 1]));
        p.add_le(r(&[-1, 0]), ratio(7, 2))
            .add_le(r(&[0, -1]), rat(1))
            .add_le(r(&[1, -1]), rat(0));
        let sol = solve_lp(&p);
        assert_eq!(sol.value(), Some(&ratio(-9, 2)));
        assert_eq!(sol.point(), Some(&[ratio(-7, 2), rat(-1)][..]));
    }

    #[test]
    fn degenerate_cycling_example_terminates() {
        // Beale's example, which cycles under the largest-coefficient rule.
        let mut p = LpProblem::minimize(vec![ratio(-3, 4), rat(150), ratio(-1, 50), rat(6)]);
        p.add_le(vec![ratio(1, 4), rat(-60), ratio(-1, 25), rat(9)], rat(0))
            .add_le(vec![ratio(1, 2), rat(-90), ratio(-1, 50), rat(3)], rat(0))
            .add_le(r(&[0, 0, 1, 0]), rat(1));
        for j in 0..4 {
            let mut row = r(&[0, 0, 0, 0]);
            row[j] = rat(-1);
            p.add_le(row, rat(0));
        }
        let sol = solve_lp(&p);
        assert_eq!(sol.value(), Some(&ratio(-1, 20)));
        assert_feasible(&p, sol.point().unwrap());
    }
}
