/// Caps that keep every computation at desk scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of cycles a single enumeration may produce.
    pub cycles: usize,
    /// Maximum number of candidate vectors a lattice enumeration may visit.
    pub points: u128,
    /// Maximum edge count for divisor complexes (2^n subsets).
    pub edges: usize,
    /// Maximum edge count for the initial-complex face enumeration.
    pub initial_complex_edges: usize,
    /// Maximum vertex count accepted by the LP-based lattice enumeration.
    pub generic_vertices: usize,
    /// Largest vertex count accepted by the exhaustive scan.
    pub scan_vertices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            cycles: 1_000_000,
            points: 10_000_000,
            edges: 14,
            initial_complex_edges: 28,
            generic_vertices: 10,
            scan_vertices: 9,
        }
    }
}
