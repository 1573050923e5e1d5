//! Relative-interior membership of lattice points in dilations `rP`.
//!
//! A point lies in the relative interior of a polytope iff it is a strictly
//! positive convex combination of all vertices. We maximize the smallest
//! barycentric weight `t` subject to `sum w_i = r`, `sum w_i v_i = b`,
//! `w_i >= t`, substituting `w_i = t + s_i` with `t, s_i >= 0`.

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::EdgePolytope;
use crate::error::{Error, Result};
use crate::lp::{self, LpOutcome, Q};
use crate::serde_util;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum MembershipStatus {
    Outside,
    Boundary,
    Interior,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MembershipCertificate {
    pub status: MembershipStatus,
    pub dilation: usize,
    /// Optimal smallest barycentric weight; absent when outside.
    #[serde(serialize_with = "serde_util::rational_opt")]
    pub barycentric_margin: Option<Q>,
    /// Weights on the polytope's vertices, summing to `dilation`.
    #[serde(serialize_with = "serde_util::rational_vec_opt")]
    pub weights: Option<Vec<Q>>,
}

impl MembershipCertificate {
    pub fn is_interior(&self) -> bool {
        self.status == MembershipStatus::Interior
    }

    pub fn is_member(&self) -> bool {
        self.status != MembershipStatus::Outside
    }
}

pub fn membership(p: &EdgePolytope, b: &[i64], r: usize) -> Result<MembershipCertificate> {
    let n_coords = p.ambient_dim();
    if b.len() != n_coords {
        return Err(Error::DimensionMismatch {
            expected: n_coords,
            got: b.len(),
        });
    }
    let outside = MembershipCertificate {
        status: MembershipStatus::Outside,
        dilation: r,
        barycentric_margin: None,
        weights: None,
    };
    // coordinates of rP sum to 2r
    if b.iter().any(|&x| x < 0) || b.iter().sum::<i64>() != 2 * r as i64 {
        return Ok(outside);
    }
    let g = p.graph();
    let n_edges = g.n_edges();
    // columns: t, s_1..s_n ; rows: weight total, then one per coordinate
    let mut a = Vec::with_capacity(n_coords + 1);
    let mut rhs = Vec::with_capacity(n_coords + 1);
    let mut total = vec![lp::q(1); n_edges + 1];
    total[0] = lp::q(n_edges as i64);
    a.push(total);
    rhs.push(lp::q(r as i64));
    for v in 1..=n_coords {
        let mut row = vec![Q::zero(); n_edges + 1];
        row[0] = lp::q(g.degree(v) as i64);
        for &(_, e) in g.neighbors(v) {
            row[e] = lp::q(1);
        }
        a.push(row);
        rhs.push(lp::q(b[v - 1]));
    }
    let mut objective = vec![Q::zero(); n_edges + 1];
    objective[0] = lp::q(1);
    match lp::maximize(&a, &rhs, &objective) {
        LpOutcome::Infeasible => Ok(outside),
        LpOutcome::Unbounded => Err(Error::Anomaly(
            "barycentric margin LP is unbounded".into(),
        )),
        LpOutcome::Optimal { value, x } => {
            let weights: Vec<Q> = x[1..].iter().map(|s| &value + s).collect();
            let status = if value.is_positive() {
                MembershipStatus::Interior
            } else {
                MembershipStatus::Boundary
            };
            Ok(MembershipCertificate {
                status,
                dilation: r,
                barycentric_margin: Some(value),
                weights: Some(weights),
            })
        }
    }
}
