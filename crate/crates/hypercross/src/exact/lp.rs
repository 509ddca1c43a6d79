//! Exact linear programming over the rationals.
//!
//! The only shape needed here is: equality constraints, nonnegative
//! variables, maximize one designated variable. Answers are exact sign
//! decisions, so the solver is a plain two-phase simplex on rational
//! tableaus with Bland's rule for termination. Pivot choices are a fixed
//! function of the input, which makes every answer bit-reproducible.

use crate::error::{Error, Result};
use crate::exact::matrix::Matrix;
use crate::exact::rational::Rational;
use num::{One, Signed, Zero};

/// `maximize x[objective_var]` subject to `constraints * x = rhs`, `x >= 0`.
#[derive(Debug, Clone)]
pub struct LpProblem {
    pub constraints: Matrix,
    pub rhs: Vec<Rational>,
    pub objective_var: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal {
        optimum: Rational,
        witness: Vec<Rational>,
    },
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpOutcome::Infeasible)
    }
}

/// Solves the designated-variable maximization exactly.
pub fn lp_max_slack(p: &LpProblem) -> Result<LpOutcome> {
    let n = p.constraints.cols();
    if n == 0 {
        return Err(Error::Contract("LP has no variables".into()));
    }
    if p.objective_var >= n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: p.objective_var,
        });
    }
    let mut obj = vec![Rational::zero(); n];
    obj[p.objective_var] = Rational::one();
    simplex_max(&p.constraints, &p.rhs, &obj)
}

/// Feasibility of `a x = b, x >= 0`; returns a witness when feasible.
pub fn lp_feasible(a: &Matrix, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
    let obj = vec![Rational::zero(); a.cols()];
    Ok(match simplex_max(a, b, &obj)? {
        LpOutcome::Optimal { witness, .. } => Some(witness),
        LpOutcome::Infeasible => None,
        // objective is constant zero, so the problem cannot be unbounded
        LpOutcome::Unbounded => unreachable!("constant objective reported unbounded"),
    })
}

/// `maximize obj . x` subject to `a x = b, x >= 0`, two-phase simplex.
pub fn simplex_max(a: &Matrix, b: &[Rational], obj: &[Rational]) -> Result<LpOutcome> {
    let m = a.rows();
    let n = a.cols();
    if b.len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            got: b.len(),
        });
    }
    if obj.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: obj.len(),
        });
    }

    // tableau [A | I] with rhs normalized nonnegative; artificials basic
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(m);
    let mut rhs: Vec<Rational> = Vec::with_capacity(m);
    for (i, b_i) in b.iter().enumerate() {
        let mut row: Vec<Rational> = a.row(i).to_vec();
        let mut bi = b_i.clone();
        if bi.is_negative() {
            for x in &mut row {
                *x = -x.clone();
            }
            bi = -bi;
        }
        row.extend((0..m).map(|j| {
            if j == i {
                Rational::one()
            } else {
                Rational::zero()
            }
        }));
        rows.push(row);
        rhs.push(bi);
    }
    let mut t = Tableau {
        rows,
        rhs,
        basis: (n..n + m).collect(),
        cost: Vec::new(),
        value: Rational::zero(),
    };

    // phase 1: maximize -(sum of artificials)
    let mut phase1 = vec![Rational::zero(); n];
    phase1.extend(std::iter::repeat_n(-Rational::one(), m));
    t.install_objective(&phase1);
    if t.run_bland() == BlandResult::Unbounded {
        unreachable!("phase-1 objective is bounded above by zero");
    }
    if !t.value.is_zero() {
        return Ok(LpOutcome::Infeasible);
    }

    // drive artificials out of the basis; fully zero rows are redundant
    let mut r = 0;
    while r < t.rows.len() {
        if t.basis[r] >= n {
            match (0..n).find(|&j| !t.rows[r][j].is_zero()) {
                Some(j) => t.pivot(r, j),
                None => {
                    t.rows.remove(r);
                    t.rhs.remove(r);
                    t.basis.remove(r);
                    continue;
                }
            }
        }
        r += 1;
    }
    for row in &mut t.rows {
        row.truncate(n);
    }

    // phase 2: the real objective
    t.install_objective(obj);
    if t.run_bland() == BlandResult::Unbounded {
        return Ok(LpOutcome::Unbounded);
    }

    let mut witness = vec![Rational::zero(); n];
    for (i, &bv) in t.basis.iter().enumerate() {
        witness[bv] = t.rhs[i].clone();
    }
    Ok(LpOutcome::Optimal {
        optimum: t.value.clone(),
        witness,
    })
}

#[derive(PartialEq)]
enum BlandResult {
    Optimal,
    Unbounded,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    cost: Vec<Rational>,
    value: Rational,
}

impl Tableau {
    /// Rebuilds the reduced-cost row `c - c_B T` and value `c_B rhs`.
    fn install_objective(&mut self, obj: &[Rational]) {
        let ncols = self.rows.first().map_or(obj.len(), Vec::len);
        let mut cost: Vec<Rational> = obj[..ncols].to_vec();
        let mut value = Rational::zero();
        for (i, &bv) in self.basis.iter().enumerate() {
            let cb = &obj[bv];
            if cb.is_zero() {
                continue;
            }
            for (c, t) in cost.iter_mut().zip(&self.rows[i]) {
                *c -= cb * t;
            }
            value += cb * &self.rhs[i];
        }
        self.cost = cost;
        self.value = value;
    }

    fn run_bland(&mut self) -> BlandResult {
        loop {
            // entering: smallest index with positive reduced cost
            let Some(col) = self.cost.iter().position(|c| c.is_positive()) else {
                return BlandResult::Optimal;
            };
            // leaving: min ratio, ties broken by smallest basis variable
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                if !self.rows[i][col].is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / &self.rows[i][col];
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
            let Some((row, _)) = best else {
                return BlandResult::Unbounded;
            };
            self.pivot(row, col);
        }
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.rows[row][col].clone();
        for x in &mut self.rows[row] {
            *x /= &p;
        }
        self.rhs[row] /= &p;
        for r in 0..self.rows.len() {
            if r == row || self.rows[r][col].is_zero() {
                continue;
            }
            let f = self.rows[r][col].clone();
            for j in 0..self.rows[row].len() {
                let sub = &f * &self.rows[row][j];
                self.rows[r][j] -= sub;
            }
            let sub = &f * &self.rhs[row];
            self.rhs[r] -= sub;
        }
        let f = self.cost[col].clone();
        if !f.is_zero() {
            for j in 0..self.cost.len() {
                let sub = &f * &self.rows[row][j];
                self.cost[j] -= sub;
            }
            self.value += &f * &self.rhs[row];
        }
        self.basis[row] = col;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rat, rat_int};

    fn mx(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            &rows
                .iter()
                .map(|r| r.iter().map(|&x| rat_int(x)).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        )
        .unwrap()
    }

    #[test]
    fn symmetric_slack_instance() {
        // maximize t with lambda_i = t + s_i:
        //   (t+s1) + (t+s2) = 1,  (t+s1) - (t+s2) = 0
        // variables (t, s1, s2)
        let a = mx(&[&[2, 1, 1], &[0, 1, -1]]);
        let p = LpProblem {
            constraints: a,
            rhs: vec![rat_int(1), rat_int(0)],
            objective_var: 0,
        };
        match lp_max_slack(&p).unwrap() {
            LpOutcome::Optimal { optimum, witness } => {
                assert_eq!(optimum, rat(1, 2));
                assert_eq!(witness[0], rat(1, 2));
            }
            other => panic!("expected optimal, got {other:?}"),
        }
    }

    #[test]
    fn infeasible_instance() {
        // x = 1 and x = 0
        let p = LpProblem {
            constraints: mx(&[&[1], &[1]]),
            rhs: vec![rat_int(1), rat_int(0)],
            objective_var: 0,
        };
        assert_eq!(lp_max_slack(&p).unwrap(), LpOutcome::Infeasible);
    }

    #[test]
    fn unbounded_instance() {
        // maximize x subject to x - y = 1: x can grow with y
        let p = LpProblem {
            constraints: mx(&[&[1, -1]]),
            rhs: vec![rat_int(1)],
            objective_var: 0,
        };
        assert_eq!(lp_max_slack(&p).unwrap(), LpOutcome::Unbounded);
    }

    #[test]
    fn witness_attains_optimum_exactly() {
        // maximize x3 s.t. x1 + x2 + 3 x3 = 4, x1 - x2 + x3 = 0
        let a = mx(&[&[1, 1, 3], &[1, -1, 1]]);
        let b = vec![rat_int(4), rat_int(0)];
        let p = LpProblem {
            constraints: a.clone(),
            rhs: b.clone(),
            objective_var: 2,
        };
        let LpOutcome::Optimal { optimum, witness } = lp_max_slack(&p).unwrap() else {
            panic!("expected optimal");
        };
        assert_eq!(a.mul_vec(&witness).unwrap(), b);
        assert!(witness.iter().all(|x| !x.is_negative()));
        assert_eq!(witness[2], optimum);
    }

    #[test]
    fn negative_rhs_is_normalized() {
        // -x1 - x2 = -1 is x1 + x2 = 1
        let p = LpProblem {
            constraints: mx(&[&[-1, -1]]),
            rhs: vec![rat_int(-1)],
            objective_var: 1,
        };
        let LpOutcome::Optimal { optimum, .. } = lp_max_slack(&p).unwrap() else {
            panic!("expected optimal");
        };
        assert_eq!(optimum, rat_int(1));
    }

    #[test]
    fn redundant_rows_are_handled() {
        // duplicated constraint leaves an artificial stuck at a zero row
        let p = LpProblem {
            constraints: mx(&[&[1, 1], &[1, 1], &[2, 2]]),
            rhs: vec![rat_int(1), rat_int(1), rat_int(2)],
            objective_var: 0,
        };
        let LpOutcome::Optimal { optimum, .. } = lp_max_slack(&p).unwrap() else {
            panic!("expected optimal");
        };
        assert_eq!(optimum, rat_int(1));
    }

    #[test]
    fn feasibility_witness_satisfies_system() {
        let a = mx(&[&[1, 2, 0], &[0, 1, 1]]);
        let b = vec![rat_int(3), rat_int(2)];
        let w = lp_feasible(&a, &b).unwrap().expect("feasible");
        assert_eq!(a.mul_vec(&w).unwrap(), b);
        assert!(lp_feasible(&mx(&[&[1], &[1]]), &[rat_int(1), rat_int(0)])
            .unwrap()
            .is_none());
    }

    #[test]
    fn no_variables_is_an_error() {
        let p = LpProblem {
            constraints: Matrix::zeros(1, 0),
            rhs: vec![rat_int(0)],
            objective_var: 0,
        };
        assert!(lp_max_slack(&p).is_err());
    }

    #[test]
    fn deterministic_given_identical_input() {
        let a = mx(&[&[1, 1, 1, 0], &[0, 1, 2, 1]]);
        let b = vec![rat_int(2), rat_int(3)];
        let p = LpProblem {
            constraints: a,
            rhs: b,
            objective_var: 3,
        };
        let r1 = lp_max_slack(&p).unwrap();
        let r2 = lp_max_slack(&p).unwrap();
        assert_eq!(r1, r2);
    }
}
