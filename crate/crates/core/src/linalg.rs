//! Exact rank over the rationals by fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Rank of an integer matrix given as rows. Runs in `i128` and restarts in
/// arbitrary precision if an intermediate minor overflows.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut small: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    match bareiss_i128(&mut small) {
        Some(r) => r,
        None => {
            let mut big: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect();
            bareiss_big(&mut big)
        }
    }
}

fn bareiss_i128(m: &mut [Vec<i128>]) -> Option<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev: i128 = 1;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c];
        for i in r + 1..rows {
            let lead = m[i][c];
            for j in c + 1..cols {
                let num = pivot
                    .checked_mul(m[i][j])?
                    .checked_sub(lead.checked_mul(m[r][j])?)?;
                m[i][j] = num / prev;
            }
            m[i][c] = 0;
        }
        prev = pivot;
        r += 1;
    }
    Some(r)
}

fn bareiss_big(m: &mut [Vec<BigInt>]) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in r + 1..rows {
            let lead = m[i][c].clone();
            for j in c + 1..cols {
                let num = &pivot * &m[i][j] - &lead * &m[r][j];
                debug_assert!((&num % &prev).is_zero() || prev.abs().is_zero());
                m[i][j] = num / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = pivot;
        r += 1;
    }
    r
}
