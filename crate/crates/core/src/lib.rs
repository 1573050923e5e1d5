//! Edge polytopes and edge rings of finite simple graphs: lattice geometry,
//! minimal free resolutions of bipartite edge rings, and a classifier for
//! linear resolutions.

pub mod classifier;
pub mod error;
pub mod flow;
pub mod geometry;
pub mod graph;
pub mod limits;
pub mod linalg;
pub mod lp;
pub mod resolution;
mod serde_util;

pub use error::{Error, Result};
pub use geometry::{
    codegree_by_search, hstar_profile, hstar_profile_with, lattice_points, membership, CountMethod,
    EdgePolytope, HStarProfile, LatticeMethod, LatticeVector, MembershipCertificate, MembershipStatus,
};
pub use graph::{build_family, graph_from_edges, Cycle, FamilyKind, FamilySpec, SimpleGraph, Structure};
pub use limits::Limits;
pub use resolution::{
    betti_table, cycle_binomial, divisor_complex, ideal_generators, regularity_and_linearity,
    semigroup_member, BettiTable, CycleBinomial, DivisorComplex,
};
