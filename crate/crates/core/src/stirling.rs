//! Memoized Stirling number triangles.
//!
//! Rows grow on demand; once a row has been computed it is never touched
//! again, so concurrent readers only contend on the lock while a triangle is
//! being extended.

use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::arith::ExactInteger;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StirlingKind {
    /// Unsigned numbers of the first kind: permutations of `k` letters with
    /// `l` cycles.
    FirstUnsigned,
    /// Numbers of the second kind: partitions of a `k`-set into `l` blocks.
    Second,
}

/// Triangle of Stirling numbers indexed `(k, l)` with `1 <= l <= k`.
#[derive(Debug)]
pub struct StirlingTriangle {
    kind: StirlingKind,
    // rows[k - 1][l - 1]
    rows: RwLock<Vec<Vec<ExactInteger>>>,
}

impl StirlingTriangle {
    pub fn new(kind: StirlingKind) -> Self {
        StirlingTriangle {
            kind,
            rows: RwLock::new(vec![vec![ExactInteger::one()]]),
        }
    }

    /// Triangle precomputed through row `max_k`.
    pub fn with_max_k(kind: StirlingKind, max_k: usize) -> Self {
        let t = Self::new(kind);
        t.extend_to(max_k);
        t
    }

    pub fn kind(&self) -> StirlingKind {
        self.kind
    }

    /// Largest row currently cached.
    pub fn max_k(&self) -> usize {
        self.rows.read().unwrap().len()
    }

    pub fn extend_to(&self, max_k: usize) {
        if self.max_k() >= max_k {
            return;
        }
        let mut rows = self.rows.write().unwrap();
        while rows.len() < max_k {
            // rows.len() == k; build row k + 1 from row k
            let k = rows.len();
            let prev = &rows[k - 1];
            let mut next = Vec::with_capacity(k + 1);
            for l in 1..=k + 1 {
                let same = if l <= k {
                    prev[l - 1].clone()
                } else {
                    ExactInteger::zero()
                };
                let lower = if l >= 2 {
                    prev[l - 2].clone()
                } else {
                    ExactInteger::zero()
                };
                let mult = match self.kind {
                    StirlingKind::FirstUnsigned => k,
                    StirlingKind::Second => l,
                };
                next.push(same * mult + lower);
            }
            rows.push(next);
        }
    }

    /// Value at `(k, l)`; zero outside `1 <= l <= k`.
    pub fn get(&self, k: usize, l: i64) -> ExactInteger {
        if k == 0 || l < 1 || l as usize > k {
            return ExactInteger::zero();
        }
        self.extend_to(k);
        self.rows.read().unwrap()[k - 1][l as usize - 1].clone()
    }

    /// Row `k` as `[value(k, 1), ..., value(k, k)]`.
    pub fn row(&self, k: usize) -> Vec<ExactInteger> {
        if k == 0 {
            return Vec::new();
        }
        self.extend_to(k);
        self.rows.read().unwrap()[k - 1].clone()
    }
}

fn first_kind() -> &'static StirlingTriangle {
    static T: OnceLock<StirlingTriangle> = OnceLock::new();
    T.get_or_init(|| StirlingTriangle::new(StirlingKind::FirstUnsigned))
}

fn second_kind() -> &'static StirlingTriangle {
    static T: OnceLock<StirlingTriangle> = OnceLock::new();
    T.get_or_init(|| StirlingTriangle::new(StirlingKind::Second))
}

/// Unsigned Stirling number of the first kind.
pub fn stirling1_unsigned(k: usize, l: i64) -> ExactInteger {
    first_kind().get(k, l)
}

/// Stirling number of the second kind.
pub fn stirling2(k: usize, l: i64) -> ExactInteger {
    second_kind().get(k, l)
}

pub fn stirling1_row(k: usize) -> Vec<ExactInteger> {
    first_kind().row(k)
}

pub fn stirling2_row(k: usize) -> Vec<ExactInteger> {
    second_kind().row(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{factorial, falling_factorial};

    fn int(v: i64) -> ExactInteger {
        ExactInteger::from(v)
    }

    /// Number of cycles of each permutation of `0..n`, by direct enumeration.
    fn cycle_counts(n: usize) -> Vec<usize> {
        fn permute(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if rest.is_empty() {
                out.push(cur.clone());
                return;
            }
            for i in 0..rest.len() {
                let v = rest.remove(i);
                cur.push(v);
                permute(rest, cur, out);
                cur.pop();
                rest.insert(i, v);
            }
        }
        let mut perms = Vec::new();
        permute(&mut (0..n).collect(), &mut Vec::new(), &mut perms);
        perms
            .iter()
            .map(|p| {
                let mut seen = vec![false; n];
                let mut cycles = 0;
                for s in 0..n {
                    if !seen[s] {
                        cycles += 1;
                        let mut j = s;
                        while !seen[j] {
                            seen[j] = true;
                            j = p[j];
                        }
                    }
                }
                cycles
            })
            .collect()
    }

    /// Number of set partitions of `0..n` into `l` blocks, via restricted
    /// growth strings.
    fn partitions_with_blocks(n: usize, l: usize) -> u64 {
        fn go(i: usize, n: usize, max: usize, l: usize) -> u64 {
            if i == n {
                return (max == l) as u64;
            }
            (0..=max).map(|b| go(i + 1, n, max.max(b + 1), l)).sum()
        }
        if n == 0 {
            return (l == 0) as u64;
        }
        go(1, n, 1, l)
    }

    #[test]
    fn first_kind_by_enumeration() {
        for n in 1..=6 {
            let counts = cycle_counts(n);
            for l in 1..=n {
                let expect = counts.iter().filter(|&&c| c == l).count() as i64;
                assert_eq!(stirling1_unsigned(n, l as i64), int(expect), "s1({n},{l})");
            }
        }
        assert_eq!(stirling1_unsigned(3, 1), int(2));
        assert_eq!(stirling1_unsigned(3, 2), int(3));
    }

    #[test]
    fn second_kind_by_enumeration() {
        for n in 1..=8 {
            for l in 1..=n {
                let expect = partitions_with_blocks(n, l) as i64;
                assert_eq!(stirling2(n, l as i64), int(expect), "S2({n},{l})");
            }
        }
    }

    #[test]
    fn special_values() {
        for k in 1..=20 {
            assert_eq!(stirling1_unsigned(k, k as i64), int(1));
            assert_eq!(stirling2(k, k as i64), int(1));
            assert_eq!(stirling2(k, 1), int(1));
            assert_eq!(stirling1_unsigned(k, k as i64 + 1), int(0));
            assert_eq!(stirling2(k, 0), int(0));
            assert_eq!(stirling2(k, -2), int(0));
        }
        assert_eq!(stirling2(9, 3), int(3025));
        assert_eq!(stirling2(9, 4), int(7770));
    }

    #[test]
    fn first_kind_row_sums_are_factorials() {
        for k in 1..=15 {
            let sum: ExactInteger = stirling1_row(k).into_iter().sum();
            assert_eq!(sum, factorial(k as u64));
        }
    }

    #[test]
    fn power_basis_identities() {
        for k in 1..=10usize {
            for x in 0..=k as i64 {
                let xv = int(x);
                let power = num_traits::pow(xv.clone(), k);
                let via_falling: ExactInteger = (1..=k)
                    .map(|l| stirling2(k, l as i64) * falling_factorial(&xv, l as u64))
                    .sum();
                assert_eq!(power, via_falling, "x^k at k={k}, x={x}");

                let via_powers: ExactInteger = (1..=k)
                    .map(|l| {
                        let term = stirling1_unsigned(k, l as i64) * num_traits::pow(xv.clone(), l);
                        if (k - l) % 2 == 0 {
                            term
                        } else {
                            -term
                        }
                    })
                    .sum();
                assert_eq!(falling_factorial(&xv, k as u64), via_powers, "ff at k={k}, x={x}");
            }
        }
    }

    #[test]
    fn local_triangle_extends_on_demand() {
        let t = StirlingTriangle::with_max_k(StirlingKind::Second, 3);
        assert_eq!(t.max_k(), 3);
        assert_eq!(t.kind(), StirlingKind::Second);
        assert_eq!(t.get(9, 4), int(7770));
        assert!(t.max_k() >= 9);
        assert_eq!(t.row(4), vec![int(1), int(7), int(6), int(1)]);
    }

    #[test]
    fn concurrent_reads_agree() {
        let t = StirlingTriangle::new(StirlingKind::FirstUnsigned);
        let t = &t;
        let results: Vec<ExactInteger> = std::thread::scope(|s| {
            let handles: Vec<_> = (0..8).map(|i| s.spawn(move || t.get(12 + (i % 3), 4))).collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        for (i, r) in results.iter().enumerate() {
            let fresh = StirlingTriangle::new(StirlingKind::FirstUnsigned);
            assert_eq!(*r, fresh.get(12 + (i % 3), 4));
        }
    }
}
