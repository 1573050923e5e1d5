//! Lattice points of dilated edge polytopes.
//!
//! Bipartite graphs take the fast path: candidates are the nonnegative
//! vectors whose two side sums agree with the dilation in every component,
//! filtered by semigroup membership. This relies on the integer
//! decomposition property of bipartite edge polytopes. Any graph can use the
//! generic path, which tests every vector of coordinate sum `2t` with
//! coordinates at most `t` by the membership LP.

use std::ops::ControlFlow;

use super::{membership, EdgePolytope, LatticeVector};
use crate::error::{Error, Result};
use crate::graph::Side;
use crate::limits::Limits;
use crate::resolution::Semigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum LatticeMethod {
    /// Fast path for bipartite graphs, generic otherwise.
    #[default]
    Auto,
    FastPath,
    Generic,
}

/// All integer points of `tP`, sorted lexicographically.
pub fn lattice_points(p: &EdgePolytope, t: usize, limits: &Limits) -> Result<Vec<LatticeVector>> {
    lattice_points_with(p, t, LatticeMethod::Auto, limits)
}

pub fn lattice_points_with(
    p: &EdgePolytope,
    t: usize,
    method: LatticeMethod,
    limits: &Limits,
) -> Result<Vec<LatticeVector>> {
    let mut out = Vec::new();
    let lower = vec![0; p.ambient_dim()];
    visit_points(p, t, method, &lower, limits, &mut |b| {
        out.push(LatticeVector::new(b.to_vec()));
        ControlFlow::Continue(())
    })?;
    out.sort_unstable();
    Ok(out)
}

/// `|tP ∩ Z^N|` without materializing the points.
pub fn count_lattice_points(p: &EdgePolytope, t: usize, method: LatticeMethod, limits: &Limits) -> Result<u64> {
    let mut count = 0u64;
    let lower = vec![0; p.ambient_dim()];
    visit_points(p, t, method, &lower, limits, &mut |_| {
        count += 1;
        ControlFlow::Continue(())
    })?;
    Ok(count)
}

/// Coordinate groups whose entries must sum to a fixed total.
struct Group {
    coords: Vec<usize>,
    total: i64,
}

/// Visits every lattice point `b` of `tP` with `b >= lower` coordinatewise.
/// The visitor may stop early by returning `Break`.
pub(crate) fn visit_points(
    p: &EdgePolytope,
    t: usize,
    method: LatticeMethod,
    lower: &[i64],
    limits: &Limits,
    visit: &mut dyn FnMut(&[i64]) -> ControlFlow<()>,
) -> Result<()> {
    let g = p.graph();
    let n = g.n_vertices();
    let t = t as i64;
    let isolated: Vec<bool> = (1..=n).map(|v| g.degree(v) == 0).collect();
    if (0..n).any(|i| isolated[i] && lower[i] > 0) {
        return Ok(());
    }
    let semigroup = match method {
        LatticeMethod::Generic => None,
        LatticeMethod::FastPath => Some(Semigroup::new(g)?),
        LatticeMethod::Auto => Semigroup::new(g).ok(),
    };

    match semigroup {
        Some(sg) => {
            let bip = sg.bipartition();
            let comps: Vec<(Vec<usize>, Vec<usize>)> = (0..bip.n_components())
                .map(|c| {
                    let side = |s| -> Vec<usize> {
                        bip.members(c, s)
                            .into_iter()
                            .filter(|&v| !isolated[v - 1])
                            .map(|v| v - 1)
                            .collect()
                    };
                    (side(Side::Left), side(Side::Right))
                })
                .filter(|(l, r)| !l.is_empty() && !r.is_empty())
                .collect();
            let upper = vec![t; n];
            let needed = count_fast_path(&comps, lower, &upper, t);
            check_budget(needed, limits)?;
            let mut cur = vec![0i64; n];
            let mut filtered = |b: &[i64]| {
                if sg.contains(b) {
                    visit(b)
                } else {
                    ControlFlow::Continue(())
                }
            };
            let _ = distribute(&comps, 0, t, lower, &upper, &mut cur, &mut filtered);
        }
        None => {
            if n > limits.generic_vertices {
                return Err(Error::EnumerationBudgetExceeded {
                    needed: n as u128,
                    cap: limits.generic_vertices as u128,
                });
            }
            let coords: Vec<usize> = (0..n).filter(|&i| !isolated[i]).collect();
            let upper = vec![t; n];
            let needed = count_group(&coords, lower, &upper, 2 * t);
            check_budget(needed, limits)?;
            let groups = [Group {
                coords,
                total: 2 * t,
            }];
            let mut cur = vec![0i64; n];
            let mut err = None;
            let mut filtered = |b: &[i64]| match membership(p, b, t as usize) {
                Ok(cert) if cert.is_member() => visit(b),
                Ok(_) => ControlFlow::Continue(()),
                Err(e) => {
                    err = Some(e);
                    ControlFlow::Break(())
                }
            };
            let _ = fill(&groups, lower, &upper, &mut cur, &mut filtered);
            if let Some(e) = err {
                return Err(e);
            }
        }
    }
    Ok(())
}

fn check_budget(needed: u128, limits: &Limits) -> Result<()> {
    if needed > limits.points {
        Err(Error::EnumerationBudgetExceeded {
            needed,
            cap: limits.points,
        })
    } else {
        Ok(())
    }
}

fn distribute(
    comps: &[(Vec<usize>, Vec<usize>)],
    ci: usize,
    remaining: i64,
    lower: &[i64],
    upper: &[i64],
    cur: &mut [i64],
    visit: &mut dyn FnMut(&[i64]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if ci == comps.len() {
        return if remaining == 0 {
            visit(cur)
        } else {
            ControlFlow::Continue(())
        };
    }
    let (l, r) = &comps[ci];
    let floor = sum_at(l, lower).max(sum_at(r, lower));
    let range = if ci + 1 == comps.len() {
        remaining..=remaining
    } else {
        floor..=remaining
    };
    for tc in range {
        if tc < floor {
            continue;
        }
        let groups = [
            Group {
                coords: l.clone(),
                total: tc,
            },
            Group {
                coords: r.clone(),
                total: tc,
            },
        ];
        let mut next = |b: &[i64]| {
            let mut owned = b.to_vec();
            distribute(comps, ci + 1, remaining - tc, lower, upper, &mut owned, visit)
        };
        fill(&groups, lower, upper, cur, &mut next)?;
    }
    ControlFlow::Continue(())
}

fn sum_at(coords: &[usize], values: &[i64]) -> i64 {
    coords.iter().map(|&c| values[c]).sum()
}

/// Enumerates all assignments to the groups' coordinates with
/// `lower <= x <= upper` and each group summing to its total.
fn fill(
    groups: &[Group],
    lower: &[i64],
    upper: &[i64],
    cur: &mut [i64],
    visit: &mut dyn FnMut(&[i64]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    fn rec(
        groups: &[Group],
        gi: usize,
        pos: usize,
        rem: i64,
        lower: &[i64],
        upper: &[i64],
        cur: &mut [i64],
        visit: &mut dyn FnMut(&[i64]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if gi == groups.len() {
            return visit(cur);
        }
        let group = &groups[gi];
        if group.coords.is_empty() {
            return if rem == 0 {
                let next = groups.get(gi + 1).map_or(0, |g| g.total - sum_at(&g.coords, lower));
                rec(groups, gi + 1, 0, next, lower, upper, cur, visit)
            } else {
                ControlFlow::Continue(())
            };
        }
        let c = group.coords[pos];
        if pos + 1 == group.coords.len() {
            if rem < 0 || lower[c] + rem > upper[c] {
                return ControlFlow::Continue(());
            }
            cur[c] = lower[c] + rem;
            let next = groups.get(gi + 1).map_or(0, |g| g.total - sum_at(&g.coords, lower));
            return rec(groups, gi + 1, 0, next, lower, upper, cur, visit);
        }
        for x in 0..=rem.min(upper[c] - lower[c]) {
            cur[c] = lower[c] + x;
            rec(groups, gi, pos + 1, rem - x, lower, upper, cur, visit)?;
        }
        ControlFlow::Continue(())
    }
    match groups.first() {
        None => visit(cur),
        Some(first) => {
            let rem = first.total - sum_at(&first.coords, lower);
            if rem < 0 {
                return ControlFlow::Continue(());
            }
            rec(groups, 0, 0, rem, lower, upper, cur, visit)
        }
    }
}

/// Number of integer vectors on `coords` with bounds and the given total.
fn count_group(coords: &[usize], lower: &[i64], upper: &[i64], total: i64) -> u128 {
    let excess = total - sum_at(coords, lower);
    if excess < 0 {
        return 0;
    }
    let excess = excess as usize;
    let mut ways = vec![0u128; excess + 1];
    ways[0] = 1;
    for &c in coords {
        let span = (upper[c] - lower[c]).max(0) as usize;
        let mut next = vec![0u128; excess + 1];
        for (s, &w) in ways.iter().enumerate() {
            if w == 0 {
                continue;
            }
            for x in 0..=span.min(excess - s) {
                next[s + x] = next[s + x].saturating_add(w);
            }
        }
        ways = next;
    }
    ways[excess]
}

fn count_fast_path(comps: &[(Vec<usize>, Vec<usize>)], lower: &[i64], upper: &[i64], t: i64) -> u128 {
    let t = t as usize;
    let mut ways = vec![0u128; t + 1];
    ways[0] = 1;
    for (l, r) in comps {
        let per: Vec<u128> = (0..=t as i64)
            .map(|s| count_group(l, lower, upper, s).saturating_mul(count_group(r, lower, upper, s)))
            .collect();
        let mut next = vec![0u128; t + 1];
        for (a, &w) in ways.iter().enumerate() {
            for (b, &x) in per.iter().enumerate().take(t + 1 - a) {
                next[a + b] = next[a + b].saturating_add(w.saturating_mul(x));
            }
        }
        ways = next;
    }
    ways[t]
}
