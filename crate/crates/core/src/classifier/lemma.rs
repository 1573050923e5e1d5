//! Interior lattice points of the four families, each certified by an
//! explicit positive combination of all edge vectors.

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::Result;
use crate::geometry::{hstar_profile, membership, EdgePolytope, MembershipCertificate};
use crate::graph::format::write_graph;
use crate::graph::FamilySpec;
use crate::limits::Limits;
use crate::lp::Q;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LemmaRecord {
    pub spec: FamilySpec,
    pub graph: String,
    pub dim: usize,
    pub point: Vec<i64>,
    pub dilation: usize,
    /// Coefficient of each edge vector, by edge label.
    pub combination: Vec<String>,
    /// All coefficients positive, summing to the dilation and to the point.
    pub combination_holds: bool,
    pub membership: MembershipCertificate,
    pub hstar: Vec<u64>,
    pub deg: usize,
    pub codeg: usize,
    /// `dim + 1 - dilation`, the bound the interior point gives on `deg`.
    pub deg_bound: i64,
    pub passed: bool,
}

fn third(k: i64) -> Q {
    BigRational::new(k.into(), 3.into())
}

/// The claimed interior point and its dilation.
pub fn lemma_point(spec: &FamilySpec) -> (Vec<i64>, usize) {
    let n = spec.n_vertices();
    match *spec {
        FamilySpec::DisjointPair { q } => (vec![1; n], 2 * q),
        FamilySpec::OneCommonVertex { q } => {
            let mut b = vec![1; n];
            b[0] = 2;
            (b, 2 * q)
        }
        FamilySpec::EvenEar { q, k, m } => {
            let mut b = vec![1; n];
            b[2 * k] = 2;
            (b, q + m)
        }
        FamilySpec::OddEar { q, m, .. } => (vec![1; n], q + m - 1),
    }
}

/// Edge coefficients exhibiting the point of [`lemma_point`].
pub fn lemma_combination(spec: &FamilySpec) -> Vec<Q> {
    let mut c = vec![Q::zero(); spec.n_edges()];
    // pairs (e_a, e_b) weighted 1/3 and 2/3, labels 1-based
    let mut pair = |a: usize, b: usize, first: i64| {
        c[a - 1] = third(first);
        c[b - 1] = third(3 - first);
    };
    match *spec {
        FamilySpec::DisjointPair { .. } => {
            return vec![BigRational::new(1.into(), 2.into()); spec.n_edges()];
        }
        FamilySpec::OneCommonVertex { q } => (1..=2 * q).for_each(|i| pair(2 * i - 1, 2 * i, 1)),
        FamilySpec::EvenEar { q, k, m } => {
            (1..=k).for_each(|i| pair(2 * i - 1, 2 * i, 1));
            (k + 1..=q).for_each(|i| pair(2 * i - 1, 2 * i, 2));
            (q + 1..=q + m).for_each(|i| pair(2 * i - 1, 2 * i, 1));
        }
        FamilySpec::OddEar { q, k, m } => {
            (1..k).for_each(|i| pair(2 * i - 1, 2 * i, 1));
            (k..q).for_each(|i| pair(2 * i, 2 * i + 1, 1));
            (q..=q + m - 2).for_each(|i| pair(2 * i + 1, 2 * i + 2, 1));
            for e in [2 * k - 1, 2 * q, 2 * q + 2 * m - 1] {
                c[e - 1] = third(1);
            }
        }
    }
    c
}

pub fn lemma_witness(spec: &FamilySpec, limits: &Limits) -> Result<LemmaRecord> {
    let g = spec.build()?;
    let p = EdgePolytope::new(&g)?;
    let (point, dilation) = lemma_point(spec);
    let lambda = lemma_combination(spec);

    let mut sum = vec![Q::zero(); g.n_vertices()];
    for (&(u, v), c) in g.edges().iter().zip(&lambda) {
        sum[u - 1] += c;
        sum[v - 1] += c;
    }
    let total: Q = lambda.iter().sum();
    let combination_holds = lambda.iter().all(|c| c.is_positive())
        && total == Q::from_integer(dilation.into())
        && sum.iter().zip(&point).all(|(s, &b)| *s == Q::from_integer(b.into()));

    let cert = membership(&p, &point, dilation)?;
    let h = hstar_profile(&p, limits)?;
    let q = spec.q();
    let deg_bound = p.dimension() as i64 + 1 - dilation as i64;
    let passed = combination_holds
        && cert.is_interior()
        && h.codegree <= dilation
        && h.degree as i64 >= deg_bound
        && h.degree >= q;
    Ok(LemmaRecord {
        spec: *spec,
        graph: write_graph(&g),
        dim: p.dimension(),
        point,
        dilation,
        combination: lambda.iter().map(|c| c.to_string()).collect(),
        combination_holds,
        membership: cert,
        hstar: h.hstar_trimmed(),
        deg: h.degree,
        codeg: h.codegree,
        deg_bound,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::MembershipStatus;

    #[test]
    fn disjoint_pair_record() {
        let r = lemma_witness(&FamilySpec::DisjointPair { q: 3 }, &Limits::default()).unwrap();
        assert!(r.passed);
        assert_eq!((r.dilation, r.deg, r.dim), (6, 4, 9));
        assert_eq!(r.point, vec![1; 12]);
    }

    #[test]
    fn even_ear_point() {
        let spec = FamilySpec::EvenEar { q: 3, k: 1, m: 2 };
        let (b, r) = lemma_point(&spec);
        assert_eq!((b, r), (vec![1, 1, 2, 1, 1, 1, 1, 1, 1], 5));
        let rec = lemma_witness(&spec, &Limits::default()).unwrap();
        assert_eq!(rec.membership.status, MembershipStatus::Interior);
        assert!(rec.passed);
    }

    #[test]
    fn odd_ear_point() {
        let spec = FamilySpec::OddEar { q: 3, k: 2, m: 2 };
        let rec = lemma_witness(&spec, &Limits::default()).unwrap();
        assert_eq!((rec.point.clone(), rec.dilation), (vec![1; 8], 4));
        assert!(rec.combination_holds && rec.passed);
    }

    #[test]
    fn wrong_point_fails() {
        // 2e_1 + ... at 2q is interior, but all-ones is not even in 2qP
        let spec = FamilySpec::OneCommonVertex { q: 3 };
        let g = spec.build().unwrap();
        let p = EdgePolytope::new(&g).unwrap();
        let cert = membership(&p, &vec![1; g.n_vertices()], 6).unwrap();
        assert_eq!(cert.status, MembershipStatus::Outside);
    }
}
