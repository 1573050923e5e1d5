//! Dense two-phase simplex over exact rationals with Bland's rule.
//!
//! Solves `maximize c·x subject to A x = b, x >= 0`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { value: Q, x: Vec<Q> },
}

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

struct Tableau {
    rows: Vec<Vec<Q>>, // each row: columns.., rhs
    basis: Vec<usize>,
    cols: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Q {
        &self.rows[i][self.cols]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for v in self.rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Maximizes `cost·x` over columns flagged in `allowed`.
    fn optimize(&mut self, cost: &[Q], allowed: &[bool]) -> bool {
        loop {
            let entering = (0..self.cols).find(|&j| {
                allowed[j] && !self.basis.contains(&j) && self.reduced_cost(cost, j).is_positive()
            });
            let Some(j) = entering else {
                return true;
            };
            let mut leave: Option<(usize, Q)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][j];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &leave {
                    None => true,
                    Some((r, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*r])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, j),
                None => return false,
            }
        }
    }

    fn reduced_cost(&self, cost: &[Q], j: usize) -> Q {
        let mut d = cost[j].clone();
        for (i, row) in self.rows.iter().enumerate() {
            let cb = &cost[self.basis[i]];
            if !cb.is_zero() && !row[j].is_zero() {
                d -= cb * &row[j];
            }
        }
        d
    }

    fn solution(&self, n: usize) -> Vec<Q> {
        let mut x = vec![Q::zero(); n];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < n {
                x[b] = self.rhs(i).clone();
            }
        }
        x
    }
}

pub fn maximize(a: &[Vec<Q>], b: &[Q], c: &[Q]) -> LpOutcome {
    let m = a.len();
    let n = c.len();
    let cols = n + m;
    let mut rows = Vec::with_capacity(m);
    for (i, (row, rhs)) in a.iter().zip(b).enumerate() {
        let flip = rhs.is_negative();
        let mut t: Vec<Q> = row
            .iter()
            .map(|v| if flip { -v.clone() } else { v.clone() })
            .collect();
        t.extend((0..m).map(|k| if k == i { Q::one() } else { Q::zero() }));
        t.push(if flip { -rhs.clone() } else { rhs.clone() });
        rows.push(t);
    }
    let mut tab = Tableau {
        rows,
        basis: (n..cols).collect(),
        cols,
    };

    // phase 1: drive the artificial columns to zero
    let phase1: Vec<Q> = (0..cols)
        .map(|j| if j >= n { -Q::one() } else { Q::zero() })
        .collect();
    tab.optimize(&phase1, &vec![true; cols]);
    let infeasibility: Q = tab
        .basis
        .iter()
        .enumerate()
        .filter(|&(_, &bj)| bj >= n)
        .map(|(i, _)| tab.rhs(i).clone())
        .sum();
    if infeasibility.is_positive() {
        return LpOutcome::Infeasible;
    }
    // pivot remaining (zero-level) artificials out, dropping redundant rows
    let mut i = 0;
    while i < tab.rows.len() {
        if tab.basis[i] >= n {
            match (0..n).find(|&j| !tab.rows[i][j].is_zero()) {
                Some(j) => tab.pivot(i, j),
                None => {
                    tab.rows.remove(i);
                    tab.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }

    let mut cost2: Vec<Q> = c.to_vec();
    cost2.extend((0..m).map(|_| Q::zero()));
    let allowed: Vec<bool> = (0..cols).map(|j| j < n).collect();
    if !tab.optimize(&cost2, &allowed) {
        return LpOutcome::Unbounded;
    }
    let x = tab.solution(n);
    let value = x.iter().zip(c).map(|(xi, ci)| xi * ci).sum();
    LpOutcome::Optimal { value, x }
}
