use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::rho;
use crate::graph::{enumerate_even_cycles, Cycle, SimpleGraph};
use crate::limits::Limits;

/// `f_C = prod x_{plus} - prod x_{minus}` for an even cycle `C`: edges in odd
/// positions of the traversal go to `plus`, even positions to `minus`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CycleBinomial {
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
    pub degree: usize,
}

impl CycleBinomial {
    /// The term that leads under lex order with `x_1 > x_2 > ...`: of two
    /// disjoint squarefree monomials of equal degree, the one holding the
    /// smallest variable.
    pub fn lex_leading(&self) -> &[usize] {
        if self.plus.iter().min() < self.minus.iter().min() {
            &self.plus
        } else {
            &self.minus
        }
    }
}

impl std::fmt::Display for CycleBinomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let term = |labels: &[usize]| {
            labels
                .iter()
                .map(|e| format!("x{e}"))
                .collect::<Vec<_>>()
                .join("*")
        };
        write!(f, "{} - {}", term(&self.plus), term(&self.minus))
    }
}

pub fn cycle_binomial(g: &SimpleGraph, c: &Cycle) -> Result<CycleBinomial> {
    if c.len() % 2 == 1 {
        return Err(Error::OddCycle(c.len()));
    }
    let mut plus: Vec<usize> = c.edges().iter().step_by(2).copied().collect();
    let mut minus: Vec<usize> = c.edges().iter().skip(1).step_by(2).copied().collect();
    let n = g.n_vertices();
    let weight = |labels: &[usize]| -> Result<Vec<i64>> {
        let mut sum = vec![0; n];
        for &e in labels {
            for (s, x) in sum.iter_mut().zip(rho(g.edge(e), n)?.iter()) {
                *s += x;
            }
        }
        Ok(sum)
    };
    if weight(&plus)? != weight(&minus)? {
        return Err(Error::Anomaly(format!("binomial of {c:?} is not homogeneous")));
    }
    plus.sort_unstable();
    minus.sort_unstable();
    Ok(CycleBinomial {
        degree: plus.len(),
        plus,
        minus,
    })
}

/// One binomial per even cycle, in canonical cycle order (shortest first).
pub fn ideal_generators(g: &SimpleGraph, limits: &Limits) -> Result<Vec<CycleBinomial>> {
    if !g.is_bipartite() {
        return Err(Error::NonBipartite);
    }
    enumerate_even_cycles(g, g.n_vertices(), limits.cycles)?
        .iter()
        .map(|c| cycle_binomial(g, c))
        .collect()
}
