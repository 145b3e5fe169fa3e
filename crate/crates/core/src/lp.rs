//! Dense exact-rational simplex method.
//!
//! Problems are given in standard form: minimize `c·x` subject to `A x = b`
//! and `x ≥ 0`. Phase one drives artificial variables out, phase two
//! optimizes the real objective. Pivoting follows Bland's rule (smallest
//! eligible index for both entering and leaving variable), so the method
//! terminates without anti-cycling perturbations.
//!
//! The instances solved in this crate have a handful of rows and a few dozen
//! columns, so a dense tableau of `BigRational` is plenty.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { x: Vec<Rational>, value: Rational },
    Infeasible,
    Unbounded,
}

#[derive(Clone, Debug)]
pub struct LinearProgram {
    vars: usize,
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    objective: Vec<Rational>,
}

impl LinearProgram {
    pub fn new(vars: usize) -> Self {
        LinearProgram { vars, rows: Vec::new(), rhs: Vec::new(), objective: vec![Rational::zero(); vars] }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn add_equality(&mut self, row: Vec<Rational>, rhs: Rational) {
        assert_eq!(row.len(), self.vars, "row width");
        self.rows.push(row);
        self.rhs.push(rhs);
    }

    /// Adds `x_var = value`.
    pub fn fix_var(&mut self, var: usize, value: Rational) {
        let mut row = vec![Rational::zero(); self.vars];
        row[var] = Rational::one();
        self.add_equality(row, value);
    }

    pub fn set_objective(&mut self, objective: Vec<Rational>) {
        assert_eq!(objective.len(), self.vars, "objective width");
        self.objective = objective;
    }

    /// Minimizes the objective.
    pub fn minimize(&self) -> LpOutcome {
        Tableau::phase_one(self).map_or(LpOutcome::Infeasible, |mut t| t.phase_two(&self.objective))
    }

    /// Any feasible point (phase one only); reported with value zero.
    pub fn feasible_point(&self) -> LpOutcome {
        match Tableau::phase_one(self) {
            Some(t) => LpOutcome::Optimal { x: t.solution(), value: Rational::zero() },
            None => LpOutcome::Infeasible,
        }
    }

    /// Lexicographically smallest point among minimizers of the objective:
    /// minimize the objective, pin it, then minimize `x_i` for each listed
    /// variable in turn, pinning each.
    pub fn lex_min_optimal(&self, lex_vars: &[usize]) -> LpOutcome {
        let (best, value) = match self.minimize() {
            LpOutcome::Optimal { value, x } => (x, value),
            other => return other,
        };
        let mut pinned = self.clone();
        pinned.add_equality(self.objective.clone(), value.clone());
        let mut x = best;
        for &var in lex_vars {
            let mut obj = vec![Rational::zero(); self.vars];
            obj[var] = Rational::one();
            pinned.set_objective(obj);
            match pinned.minimize() {
                LpOutcome::Optimal { x: xi, value: vi } => {
                    pinned.fix_var(var, vi);
                    x = xi;
                }
                // The feasible region is unchanged by pinning; the variable
                // is bounded below by zero, so this cannot happen.
                other => unreachable!("lexicographic refinement failed: {other:?}"),
            }
        }
        LpOutcome::Optimal { x, value }
    }
}

struct Tableau {
    /// `m` rows of width `cols + 1`; the last entry is the right-hand side.
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    /// Number of structural columns; artificial columns follow them.
    structural: usize,
}

impl Tableau {
    fn phase_one(lp: &LinearProgram) -> Option<Tableau> {
        let m = lp.rows.len();
        let n = lp.vars;
        let width = n + m + 1;
        let mut rows = Vec::with_capacity(m);
        for (i, (row, b)) in lp.rows.iter().zip(&lp.rhs).enumerate() {
            let flip = b.is_negative();
            let mut r = Vec::with_capacity(width);
            r.extend(row.iter().map(|a| if flip { -a } else { a.clone() }));
            r.extend((0..m).map(|k| if k == i { Rational::one() } else { Rational::zero() }));
            r.push(if flip { -b } else { b.clone() });
            rows.push(r);
        }
        let mut t = Tableau { rows, basis: (n..n + m).collect(), structural: n };
        let mut cost = vec![Rational::zero(); n + m];
        for c in cost.iter_mut().skip(n) {
            *c = Rational::one();
        }
        match t.optimize(&cost, n + m) {
            Some(v) if v.is_zero() => {}
            _ => return None,
        }
        t.evict_artificials();
        Some(t)
    }

    /// Pivots remaining (zero-valued) artificials out of the basis; rows
    /// where that is impossible are redundant and dropped.
    fn evict_artificials(&mut self) {
        let n = self.structural;
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] >= n {
                match (0..n).find(|&j| !self.rows[i][j].is_zero()) {
                    Some(j) => self.pivot(i, j),
                    None => {
                        self.rows.remove(i);
                        self.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
        let rhs = self.rows.first().map_or(0, |r| r.len() - 1);
        for r in &mut self.rows {
            let b = r[rhs].clone();
            r.truncate(n);
            r.push(b);
        }
    }

    fn phase_two(&mut self, objective: &[Rational]) -> LpOutcome {
        match self.optimize(objective, self.structural) {
            Some(value) => LpOutcome::Optimal { x: self.solution(), value },
            None => LpOutcome::Unbounded,
        }
    }

    /// Runs primal simplex over the first `active` columns; `None` when
    /// unbounded.
    fn optimize(&mut self, cost: &[Rational], active: usize) -> Option<Rational> {
        loop {
            // Reduced costs d_j = c_j - Σ_i c_{B(i)} a_{ij}, entering by Bland.
            let entering = (0..active).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let mut d = cost[j].clone();
                for (row, &b) in self.rows.iter().zip(&self.basis) {
                    if !cost[b].is_zero() && !row[j].is_zero() {
                        d -= &cost[b] * &row[j];
                    }
                }
                d.is_negative()
            });
            let Some(j) = entering else {
                let rhs = self.rhs_col();
                let value = self
                    .rows
                    .iter()
                    .zip(&self.basis)
                    .fold(Rational::zero(), |acc, (row, &b)| acc + &cost[b] * &row[rhs]);
                return Some(value);
            };
            let rhs = self.rhs_col();
            let mut leave: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if row[j].is_positive() {
                    let ratio = &row[rhs] / &row[j];
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
            }
            let (i, _) = leave?;
            self.pivot(i, j);
        }
    }

    fn rhs_col(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len() - 1)
    }

    fn pivot(&mut self, i: usize, j: usize) {
        let p = self.rows[i][j].clone();
        for a in self.rows[i].iter_mut() {
            if !a.is_zero() {
                *a /= &p;
            }
        }
        let pivot_row = self.rows[i].clone();
        for (k, row) in self.rows.iter_mut().enumerate() {
            if k == i || row[j].is_zero() {
                continue;
            }
            let f = row[j].clone();
            for (a, b) in row.iter_mut().zip(&pivot_row) {
                if !b.is_zero() {
                    *a -= &f * b;
                }
            }
        }
        self.basis[i] = j;
    }

    fn solution(&self) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.structural];
        let rhs = self.rhs_col();
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            if b < self.structural {
                x[b] = row[rhs].clone();
            }
        }
        x
    }
}
