//! Toric ideals of bipartite graphs and the graded Betti numbers of their
//! edge rings.

mod betti;
mod binomial;
mod divisor;
mod homology;
mod semigroup;

pub use betti::{betti_table, regularity_and_linearity, BettiTable};
pub use binomial::{cycle_binomial, ideal_generators, CycleBinomial};
pub(crate) use divisor::build_divisor_complex;
pub use divisor::{divisor_complex, DivisorComplex};
pub use homology::reduced_homology_dims;
pub use semigroup::{semigroup_member, Semigroup};
