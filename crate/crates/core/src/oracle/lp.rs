//! Two-phase simplex over exact rationals with Bland's rule.
//!
//! Variables are free; each is split as `x = x⁺ - x⁻`. Inequality rows get a
//! slack, rows whose slack cannot start in the basis get an artificial.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::polytope::Polytope;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpResult {
    pub status: LpStatus,
    /// Objective at `witness`; `None` unless optimal.
    pub value: Option<Rational>,
    pub witness: Option<Vec<Rational>>,
}

impl LpResult {
    /// The optimal value, or the `Infeasible` sentinel.
    pub fn optimum(&self) -> Result<Rational> {
        match (&self.status, &self.value) {
            (LpStatus::Optimal, Some(v)) => Ok(v.clone()),
            (LpStatus::Unbounded, _) => Err(Error::Internal(
                "linear program over a bounded polytope is unbounded".into(),
            )),
            _ => Err(Error::Infeasible),
        }
    }
}

/// `max` or `min` of `c · x` subject to `A x ≤ b` and `E x = e`.
#[derive(Debug, Clone, Default)]
pub struct LinearProgram {
    pub n: usize,
    pub le: Vec<(Vec<Rational>, Rational)>,
    pub eq: Vec<(Vec<Rational>, Rational)>,
}

impl LinearProgram {
    pub fn new(n: usize) -> Self {
        LinearProgram {
            n,
            ..Default::default()
        }
    }

    pub fn from_polytope(p: &Polytope) -> Self {
        let (a, b) = p.dense();
        LinearProgram {
            n: p.dim(),
            le: a.into_iter().zip(b).collect(),
            eq: Vec::new(),
        }
    }

    pub fn solve(&self, objective: &[Rational], maximize: bool) -> Result<LpResult> {
        if objective.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: objective.len(),
            });
        }
        for (row, _) in self.le.iter().chain(&self.eq) {
            if row.len() != self.n {
                return Err(Error::DimensionMismatch {
                    expected: self.n,
                    got: row.len(),
                });
            }
        }
        Ok(Tableau::build(self).solve(objective, maximize))
    }
}

/// Optimizes a box-indexed objective over the closed polytope.
pub fn lp_optimize(p: &Polytope, objective: &[Rational], maximize: bool) -> Result<LpResult> {
    LinearProgram::from_polytope(p).solve(objective, maximize)
}

struct Tableau {
    n: usize,
    /// Columns: `x⁺` (n), `x⁻` (n), slacks, artificials, then the rhs.
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    first_artificial: usize,
    width: usize,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Tableau {
        let n = lp.n;
        let slacks = lp.le.len();
        let first_artificial = 2 * n + slacks;
        let needs_artificial = lp
            .le
            .iter()
            .filter(|(_, b)| b.is_negative())
            .count()
            + lp.eq.len();
        let width = first_artificial + needs_artificial;
        let mut rows = Vec::with_capacity(lp.le.len() + lp.eq.len());
        let mut basis = Vec::with_capacity(rows.capacity());
        let mut next_artificial = first_artificial;
        let all = lp
            .le
            .iter()
            .enumerate()
            .map(|(i, r)| (r, Some(i)))
            .chain(lp.eq.iter().map(|r| (r, None)));
        for ((a, b), slack) in all {
            let mut row = vec![Rational::zero(); width + 1];
            for (i, v) in a.iter().enumerate() {
                row[i] = v.clone();
                row[n + i] = -v;
            }
            if let Some(s) = slack {
                row[2 * n + s] = Rational::from_integer(1.into());
            }
            row[width] = b.clone();
            if b.is_negative() {
                for v in row.iter_mut() {
                    *v = -&*v;
                }
            }
            match slack {
                Some(s) if !b.is_negative() => basis.push(2 * n + s),
                _ => {
                    row[next_artificial] = Rational::from_integer(1.into());
                    basis.push(next_artificial);
                    next_artificial += 1;
                }
            }
            rows.push(row);
        }
        Tableau {
            n,
            rows,
            basis,
            first_artificial,
            width,
        }
    }

    /// Reduced costs of `cost` (to be minimized) under the current basis;
    /// the last entry is minus the current objective.
    fn reduced(&self, cost: &[Rational]) -> Vec<Rational> {
        let mut d: Vec<Rational> = cost.to_vec();
        d.push(Rational::zero());
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            let cb = &cost[b];
            if cb.is_zero() {
                continue;
            }
            for (dj, aj) in d.iter_mut().zip(row) {
                if !aj.is_zero() {
                    *dj -= cb * aj;
                }
            }
        }
        d
    }

    fn pivot(&mut self, r: usize, c: usize, d: &mut [Rational]) {
        let p = self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v /= &p;
            }
        }
        let pivot_row = self.rows[r].clone();
        let nz: Vec<usize> = (0..=self.width)
            .filter(|&j| !pivot_row[j].is_zero())
            .collect();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for &j in &nz {
                row[j] -= &f * &pivot_row[j];
            }
        }
        if !d[c].is_zero() {
            let f = d[c].clone();
            for &j in &nz {
                d[j] -= &f * &pivot_row[j];
            }
        }
        self.basis[r] = c;
    }

    /// Bland's rule on columns `< limit`. Returns `false` when unbounded.
    fn run(&mut self, d: &mut [Rational], limit: usize) -> bool {
        loop {
            let Some(c) = (0..limit).find(|&j| d[j].is_negative()) else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[c].is_positive() {
                    continue;
                }
                let ratio = &row[self.width] / &row[c];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => {
                        ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                    }
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            let Some((r, _)) = best else { return false };
            self.pivot(r, c, d);
        }
    }

    fn solve(mut self, objective: &[Rational], maximize: bool) -> LpResult {
        let infeasible = LpResult {
            status: LpStatus::Infeasible,
            value: None,
            witness: None,
        };
        // Phase 1: minimize the sum of artificials.
        if self.width > self.first_artificial {
            let mut cost = vec![Rational::zero(); self.width];
            for c in cost.iter_mut().skip(self.first_artificial) {
                *c = Rational::from_integer(1.into());
            }
            let mut d = self.reduced(&cost);
            self.run(&mut d, self.width);
            if !d[self.width].is_zero() {
                return infeasible;
            }
            // Drive zero-valued artificials out of the basis; drop redundant rows.
            let mut r = 0;
            while r < self.rows.len() {
                if self.basis[r] >= self.first_artificial {
                    let col = (0..self.first_artificial).find(|&j| !self.rows[r][j].is_zero());
                    match col {
                        Some(c) => {
                            let mut scratch = vec![Rational::zero(); self.width + 1];
                            self.pivot(r, c, &mut scratch);
                        }
                        None => {
                            self.rows.remove(r);
                            self.basis.remove(r);
                            continue;
                        }
                    }
                }
                r += 1;
            }
        }
        // Phase 2.
        let n = self.n;
        let mut cost = vec![Rational::zero(); self.width];
        for (i, c) in objective.iter().enumerate() {
            let c = if maximize { -c } else { c.clone() };
            cost[n + i] = -&c;
            cost[i] = c;
        }
        let mut d = self.reduced(&cost);
        if !self.run(&mut d, self.first_artificial) {
            return LpResult {
                status: LpStatus::Unbounded,
                value: None,
                witness: None,
            };
        }
        let mut x = vec![Rational::zero(); n];
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            let v = &row[self.width];
            if b < n {
                x[b] += v;
            } else if b < 2 * n {
                x[b - n] -= v;
            }
        }
        let value: Rational = objective.iter().zip(&x).map(|(c, v)| c * v).sum();
        LpResult {
            status: LpStatus::Optimal,
            value: Some(value),
            witness: Some(x),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{GroupSpec, Weight};
    use crate::polytope::hrep;
    use crate::rational::{frac, int};

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn small_program() {
        // max x + y s.t. x + 2y ≤ 4, 3x + y ≤ 6, x, y ≥ 0 → (8/5, 6/5), 14/5.
        let mut lp = LinearProgram::new(2);
        lp.le.push((ints(&[1, 2]), int(4)));
        lp.le.push((ints(&[3, 1]), int(6)));
        lp.le.push((ints(&[-1, 0]), int(0)));
        lp.le.push((ints(&[0, -1]), int(0)));
        let r = lp.solve(&ints(&[1, 1]), true).unwrap();
        assert_eq!(r.status, LpStatus::Optimal);
        assert_eq!(r.value, Some(frac(14, 5)));
        assert_eq!(r.witness, Some(vec![frac(8, 5), frac(6, 5)]));
    }

    #[test]
    fn equalities_negative_rhs_and_free_variables() {
        // min x s.t. x - y = -3, -5 ≤ y ≤ 1 → x = -8.
        let mut lp = LinearProgram::new(2);
        lp.eq.push((ints(&[1, -1]), int(-3)));
        lp.le.push((ints(&[0, 1]), int(1)));
        lp.le.push((ints(&[0, -1]), int(5)));
        let r = lp.solve(&ints(&[1, 0]), false).unwrap();
        assert_eq!(r.value, Some(int(-8)));
        assert_eq!(r.witness, Some(ints(&[-8, -5])));
    }

    #[test]
    fn infeasible_and_unbounded() {
        let mut lp = LinearProgram::new(1);
        lp.le.push((ints(&[1]), int(-1)));
        lp.le.push((ints(&[-1]), int(-1)));
        let r = lp.solve(&ints(&[1]), true).unwrap();
        assert_eq!(r.status, LpStatus::Infeasible);
        assert_eq!(r.optimum(), Err(Error::Infeasible));

        let mut lp = LinearProgram::new(1);
        lp.le.push((ints(&[-1]), int(0)));
        assert_eq!(lp.solve(&ints(&[1]), true).unwrap().status, LpStatus::Unbounded);
    }

    #[test]
    fn redundant_equalities() {
        let mut lp = LinearProgram::new(2);
        lp.eq.push((ints(&[1, 1]), int(2)));
        lp.eq.push((ints(&[2, 2]), int(4)));
        lp.le.push((ints(&[1, 0]), int(5)));
        lp.le.push((ints(&[-1, 0]), int(0)));
        let r = lp.solve(&ints(&[0, 1]), true).unwrap();
        assert_eq!(r.value, Some(int(2)));
    }

    #[test]
    fn polytope_examples() {
        let p = hrep(&Weight::from_ints(GroupSpec::unitary(2), &[1, 0]).unwrap()).unwrap();
        assert_eq!(lp_optimize(&p, &ints(&[1]), true).unwrap().optimum(), Ok(int(1)));

        // Basis order for U(3) at (3,3,1) is (2,1), (1,1).
        let p = hrep(&Weight::from_ints(GroupSpec::unitary(3), &[3, 3, 1]).unwrap()).unwrap();
        assert_eq!(lp_optimize(&p, &ints(&[1, 0]), false).unwrap().optimum(), Ok(int(1)));

        let p = hrep(&Weight::from_ints(GroupSpec::odd_orthogonal(1), &[7]).unwrap()).unwrap();
        assert_eq!(lp_optimize(&p, &ints(&[1]), false).unwrap().optimum(), Ok(int(-7)));
    }
}
