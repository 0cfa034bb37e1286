//! Bottom-up construction from `c(1; 1, ..., 1) = 1`.
//!
//! Any reference to an index with a component outside `[1, k]` reads as 0.

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::arith::ExactInteger;
use crate::engine::{CoeffTable2D, CoeffTableND, MultiIndex};
use crate::error::{Error, Result};

/// `c(k+1; i, j) = c(k; i-1, j-1) + i c(k; i, j-1) + j c(k; i-1, j) + (ij - k) c(k; i, j)`
pub fn table_recurrence(k: usize) -> Result<CoeffTable2D> {
    if k == 0 {
        return Err(Error::ZeroDegree);
    }
    let zero = ExactInteger::zero();
    let mut cur = vec![ExactInteger::one()];
    for step in 1..k {
        let old = |i: usize, j: usize| -> &ExactInteger {
            if i == 0 || j == 0 || i > step || j > step {
                &zero
            } else {
                &cur[(i - 1) * step + (j - 1)]
            }
        };
        let size = step + 1;
        let mut next = Vec::with_capacity(size * size);
        for i in 1..=size {
            for j in 1..=size {
                let diag = (i * j) as i64 - step as i64;
                let v = old(i - 1, j - 1).clone() + old(i, j - 1) * i + old(i - 1, j) * j + old(i, j) * diag;
                next.push(v);
            }
        }
        cur = next;
    }
    Ok(CoeffTable2D::from_entries(k, cur))
}

/// `n`-variable recurrence:
///
/// `c(k+1; J) = sum_{S subset of 1..n} (prod_{i in S} j_i) c(k; J - 1 off S) - k c(k; J)`
///
/// where `J - 1 off S` decrements every component not in `S`. For `n = 2`
/// the four subsets give exactly the two-variable recurrence.
pub fn table_multi_recurrence(k: usize, n: usize) -> Result<CoeffTableND> {
    if k == 0 {
        return Err(Error::ZeroDegree);
    }
    if n == 0 {
        return Err(Error::EmptyIndex);
    }
    let mut cur = CoeffTableND::from_entries(1, n, vec![ExactInteger::one()]);
    let zero = ExactInteger::zero();
    for step in 1..k {
        let size = step + 1;
        let total = size.pow(n as u32);
        let entries: Vec<ExactInteger> = (0..total)
            .into_par_iter()
            .map(|flat| {
                let target = MultiIndex::from_flat(flat, size, n);
                let j = target.components();
                let mut acc = ExactInteger::zero();
                let mut shifted = vec![0usize; n];
                for subset in 0u32..(1 << n) {
                    let mut weight = 1u64;
                    for (i, slot) in shifted.iter_mut().enumerate() {
                        if subset & (1 << i) != 0 {
                            weight *= j[i] as u64;
                            *slot = j[i];
                        } else {
                            *slot = j[i] - 1;
                        }
                    }
                    let prev = cur.try_get(&shifted).unwrap_or(&zero);
                    if !prev.is_zero() {
                        acc += prev * weight;
                    }
                }
                if let Some(same) = cur.try_get(j) {
                    acc -= same * step;
                }
                acc
            })
            .collect();
        cur = CoeffTableND::from_entries(size, n, entries);
    }
    Ok(cur)
}
