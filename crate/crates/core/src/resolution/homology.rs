//! Reduced simplicial homology over the rationals.

use std::collections::HashMap;

use super::DivisorComplex;
use crate::linalg;

/// `[dim H̃_{-1}, dim H̃_0, ..., dim H̃_{max_i}]`.
pub fn reduced_homology_dims(k: &DivisorComplex, max_i: usize) -> Vec<usize> {
    let mut out = vec![0; max_i + 2];
    let faces = k.face_masks();
    if faces.len() == 1 {
        out[0] = 1;
        return out;
    }
    if k.is_cone() {
        return out;
    }
    let counts = k.face_counts(); // counts[s] = faces with s elements = dim s - 1
    let top = counts.len() - 1;
    // rank_of[s] = rank of the boundary from size-s faces to size-(s-1) faces
    let mut rank_of = vec![0usize; top + 2];
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
    for &f in faces {
        by_size[f.count_ones() as usize].push(f);
    }
    for s in 1..=top {
        if s == 1 {
            rank_of[1] = usize::from(!by_size[1].is_empty());
            continue;
        }
        let index: HashMap<u64, usize> = by_size[s - 1].iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let rows: Vec<Vec<i64>> = by_size[s]
            .iter()
            .map(|&f| {
                let mut row = vec![0i64; by_size[s - 1].len()];
                let mut sign = 1;
                let mut bits = f;
                while bits != 0 {
                    let low = bits & bits.wrapping_neg();
                    row[index[&(f & !low)]] = sign;
                    sign = -sign;
                    bits &= !low;
                }
                row
            })
            .collect();
        rank_of[s] = linalg::rank(&rows);
    }
    for (dim_plus_one, slot) in out.iter_mut().enumerate() {
        // H̃_{dim} with dim = dim_plus_one - 1 lives on faces of size dim_plus_one
        let s = dim_plus_one;
        if s > top {
            break;
        }
        let cycles = counts[s] - rank_of[s];
        let boundaries = rank_of.get(s + 1).copied().unwrap_or(0);
        *slot = cycles - boundaries;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complex(n: usize, faces: &[u64]) -> DivisorComplex {
        DivisorComplex::from_faces(n, faces.iter().copied()).unwrap()
    }

    fn euler_from_faces(k: &DivisorComplex) -> i64 {
        k.face_counts()
            .iter()
            .enumerate()
            .map(|(s, &c)| if s % 2 == 1 { c as i64 } else { -(c as i64) })
            .sum()
    }

    fn euler_from_homology(h: &[usize]) -> i64 {
        // h[0] is dimension -1
        h.iter()
            .enumerate()
            .map(|(i, &d)| if i % 2 == 1 { d as i64 } else { -(d as i64) })
            .sum()
    }

    #[test]
    fn hollow_triangle_is_a_circle() {
        let k = complex(3, &[0, 1, 2, 4, 3, 5, 6]);
        assert_eq!(reduced_homology_dims(&k, 2), vec![0, 0, 1, 0]);
    }

    #[test]
    fn full_simplex_is_acyclic() {
        let k = complex(4, &(0u64..16).collect::<Vec<_>>());
        assert_eq!(reduced_homology_dims(&k, 3), vec![0; 5]);
    }

    #[test]
    fn two_points() {
        let k = complex(2, &[0, 1, 2]);
        assert_eq!(reduced_homology_dims(&k, 1), vec![0, 1, 0]);
    }

    #[test]
    fn void_complex() {
        let k = complex(2, &[0]);
        assert_eq!(reduced_homology_dims(&k, 1), vec![1, 0, 0]);
    }

    #[test]
    fn hollow_tetrahedron_and_two_circles() {
        let sphere: Vec<u64> = (0u64..15).collect();
        let k = complex(4, &sphere);
        assert_eq!(reduced_homology_dims(&k, 3), vec![0, 0, 0, 1, 0]);
        // two triangles glued at a vertex: wedge of two circles
        let faces = [0, 1, 2, 4, 8, 16, 3, 5, 6, 9, 17, 24];
        let k = complex(5, &faces);
        let h = reduced_homology_dims(&k, 2);
        assert_eq!(h, vec![0, 0, 2, 0]);
        assert_eq!(euler_from_faces(&k), euler_from_homology(&h));
    }

    #[test]
    fn euler_characteristic_matches_on_all_small_complexes() {
        // every downward-closed family on 4 points generated by up to 3 faces
        let masks: Vec<u64> = (1u64..16).collect();
        for a in &masks {
            for b in &masks {
                for c in &masks {
                    let mut faces = vec![0u64];
                    for &gen in [*a, *b, *c].iter() {
                        for sub in 0u64..16 {
                            if sub & !gen == 0 {
                                faces.push(sub);
                            }
                        }
                    }
                    let k = DivisorComplex::from_faces(4, faces).unwrap();
                    let h = reduced_homology_dims(&k, 3);
                    assert_eq!(euler_from_faces(&k), euler_from_homology(&h), "{k:?}");
                }
            }
        }
    }
}
