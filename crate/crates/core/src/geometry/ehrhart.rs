//! h*-polynomials by interpolating Ehrhart counts at `t = 0..=d`.
//!
//! Counts come from one of two routes:
//!
//! * **Enumeration**: `|tP ∩ Z^N|` by listing lattice points.
//! * **Initial complex** (bipartite graphs): the cycle binomials of a
//!   bipartite graph form a universal Gröbner basis, because its incidence
//!   matrix is totally unimodular and circuits are exactly even cycles. Their
//!   lex-leading terms are squarefree, so the standard monomials of degree
//!   `t` are those supported on a face of the complex avoiding every leading
//!   term, and `L(t) = Σ_i f_i C(t-1, i-1)`. Bipartite edge polytopes are
//!   normal, so this Hilbert function is the Ehrhart function.

use std::ops::ControlFlow;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::lattice::{count_lattice_points, visit_points, LatticeMethod};
use super::{membership, EdgePolytope};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::resolution::ideal_generators;
use crate::serde_util;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HStarProfile {
    pub dim: usize,
    /// `L(t) = |tP ∩ Z^N|` for `t = 0..=dim`.
    #[serde(serialize_with = "serde_util::big_uint_vec")]
    pub counts: Vec<BigUint>,
    /// `h*_0, ..., h*_dim`, trailing zeros kept.
    #[serde(serialize_with = "serde_util::big_uint_vec")]
    pub hstar: Vec<BigUint>,
    pub degree: usize,
    pub codegree: usize,
    #[serde(serialize_with = "serde_util::big_uint")]
    pub normalized_volume: BigUint,
}

impl HStarProfile {
    pub fn from_counts(dim: usize, counts: Vec<BigUint>) -> Result<HStarProfile> {
        let hstar = hstar_from_counts(dim, &counts)?;
        let degree = hstar.iter().rposition(|h| !h.is_zero()).unwrap_or(0);
        let normalized_volume = hstar.iter().sum();
        Ok(HStarProfile {
            dim,
            counts,
            hstar,
            degree,
            codegree: dim + 1 - degree,
            normalized_volume,
        })
    }

    /// `L(t) = Σ_k h*_k C(t - k + d, d)`, valid for every `t >= 0`.
    pub fn ehrhart_count(&self, t: usize) -> BigUint {
        let d = self.dim;
        self.hstar
            .iter()
            .enumerate()
            .filter(|&(k, _)| k <= t)
            .map(|(k, h)| h * binomial(t - k + d, d))
            .sum()
    }

    /// Coefficients with trailing zeros removed, as machine integers.
    pub fn hstar_trimmed(&self) -> Vec<u64> {
        self.hstar[..=self.degree]
            .iter()
            .map(|h| h.to_u64().unwrap_or(u64::MAX))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum CountMethod {
    /// Initial complex for bipartite graphs, enumeration otherwise.
    #[default]
    Auto,
    InitialComplex,
    Enumeration,
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `h*_k = Σ_{i=0}^{k} (-1)^i C(d+1, i) L(k-i)`.
pub fn hstar_from_counts(dim: usize, counts: &[BigUint]) -> Result<Vec<BigUint>> {
    if counts.len() < dim + 1 {
        return Err(Error::DimensionMismatch {
            expected: dim + 1,
            got: counts.len(),
        });
    }
    let mut out = Vec::with_capacity(dim + 1);
    for k in 0..=dim {
        let mut h = BigInt::zero();
        for i in 0..=k {
            let term = BigInt::from(binomial(dim + 1, i)) * BigInt::from(counts[k - i].clone());
            if i % 2 == 0 {
                h += term;
            } else {
                h -= term;
            }
        }
        if h.is_negative() {
            return Err(Error::Anomaly(format!("h*_{k} = {h} is negative")));
        }
        out.push(h.magnitude().clone());
    }
    if !out[0].is_one() {
        return Err(Error::Anomaly(format!("h*_0 = {} differs from 1", out[0])));
    }
    Ok(out)
}

fn resolve(p: &EdgePolytope, method: CountMethod, limits: &Limits) -> CountMethod {
    match method {
        CountMethod::Auto
            if p.graph().is_bipartite() && p.graph().n_edges() <= limits.initial_complex_edges =>
        {
            CountMethod::InitialComplex
        }
        CountMethod::Auto => CountMethod::Enumeration,
        m => m,
    }
}

/// `L(0), ..., L(upto)`.
pub fn lattice_counts(p: &EdgePolytope, upto: usize, method: CountMethod, limits: &Limits) -> Result<Vec<BigUint>> {
    match resolve(p, method, limits) {
        CountMethod::InitialComplex => {
            let f = initial_complex_face_counts(p, limits)?;
            if f.len() != p.dimension() + 2 {
                return Err(Error::Anomaly(format!(
                    "initial complex has {} face sizes, expected {}",
                    f.len(),
                    p.dimension() + 2
                )));
            }
            Ok((0..=upto)
                .map(|t| {
                    if t == 0 {
                        return BigUint::one();
                    }
                    f.iter()
                        .enumerate()
                        .skip(1)
                        .map(|(i, &fi)| BigUint::from(fi) * binomial(t - 1, i - 1))
                        .sum()
                })
                .collect())
        }
        _ => (0..=upto)
            .map(|t| count_lattice_points(p, t, LatticeMethod::Auto, limits).map(BigUint::from))
            .collect(),
    }
}

/// `f[i]` = number of `i`-element edge sets containing no lex-leading term
/// of a cycle binomial.
fn initial_complex_face_counts(p: &EdgePolytope, limits: &Limits) -> Result<Vec<u64>> {
    let g = p.graph();
    let n = g.n_edges();
    if n > limits.initial_complex_edges || n > 63 {
        return Err(Error::SubsetBudgetExceeded {
            edges: n,
            cap: limits.initial_complex_edges,
        });
    }
    // leading masks, grouped by their highest edge
    let mut by_top: Vec<Vec<u64>> = vec![Vec::new(); n];
    for f in ideal_generators(g, limits)? {
        let mask = f.lex_leading().iter().fold(0u64, |m, &e| m | 1 << (e - 1));
        by_top[63 - mask.leading_zeros() as usize].push(mask);
    }
    let mut counts = vec![0u64; n + 1];
    fn grow(face: u64, size: usize, from: usize, n: usize, by_top: &[Vec<u64>], counts: &mut [u64]) {
        counts[size] += 1;
        for e in from..n {
            let f = face | 1 << e;
            if by_top[e].iter().all(|&m| m & !f != 0) {
                grow(f, size + 1, e + 1, n, by_top, counts);
            }
        }
    }
    grow(0, 0, 0, n, &by_top, &mut counts);
    while counts.len() > 1 && counts.last() == Some(&0) {
        counts.pop();
    }
    Ok(counts)
}

pub fn hstar_profile(p: &EdgePolytope, limits: &Limits) -> Result<HStarProfile> {
    hstar_profile_with(p, CountMethod::Auto, limits)
}

pub fn hstar_profile_with(p: &EdgePolytope, method: CountMethod, limits: &Limits) -> Result<HStarProfile> {
    let d = p.dimension();
    HStarProfile::from_counts(d, lattice_counts(p, d, method, limits)?)
}

/// Smallest `r >= 1` such that `rP` has a lattice point in its relative
/// interior. Interior points are positive combinations of every vertex, so
/// they are positive on each non-isolated vertex; only such candidates are
/// tested.
pub fn codegree_by_search(p: &EdgePolytope, limits: &Limits) -> Result<usize> {
    let g = p.graph();
    let lower: Vec<i64> = (1..=g.n_vertices()).map(|v| i64::from(g.degree(v) > 0)).collect();
    let floor = lower.iter().sum::<i64>();
    let d = p.dimension();
    for r in 1..=d + 1 {
        if 2 * (r as i64) < floor {
            continue;
        }
        let mut found = false;
        let mut err = None;
        visit_points(p, r, LatticeMethod::Auto, &lower, limits, &mut |b| match membership(p, b, r) {
            Ok(cert) if cert.is_interior() => {
                found = true;
                ControlFlow::Break(())
            }
            Ok(_) => ControlFlow::Continue(()),
            Err(e) => {
                err = Some(e);
                ControlFlow::Break(())
            }
        })?;
        if let Some(e) = err {
            return Err(e);
        }
        if found {
            return Ok(r);
        }
    }
    Err(Error::Anomaly(format!("no interior lattice point up to dilation {}", d + 1)))
}
