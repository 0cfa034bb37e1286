use crate::arith::{factorial, ExactInteger};
use crate::error::{Error, Result};

/// Multi-index `L = (l_1, ..., l_n)` with every component at least 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(Vec<usize>);

impl MultiIndex {
    pub fn new(components: Vec<usize>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptyIndex);
        }
        if components.contains(&0) {
            return Err(Error::IndexOutOfRange {
                k: 0,
                index: components,
            });
        }
        Ok(MultiIndex(components))
    }

    /// Index at row-major position `flat` of the grid `[1, k]^n`.
    pub(crate) fn from_flat(mut flat: usize, k: usize, n: usize) -> Self {
        let mut c = vec![0; n];
        for slot in c.iter_mut().rev() {
            *slot = flat % k + 1;
            flat /= k;
        }
        MultiIndex(c)
    }

    pub fn components(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Product of the components (number of cells in the grid they span).
    pub fn cell_count(&self) -> u64 {
        self.0.iter().map(|&l| l as u64).product()
    }

    /// `L! = l_1! l_2! ... l_n!`
    pub fn factorial(&self) -> ExactInteger {
        self.0.iter().map(|&l| factorial(l as u64)).product()
    }

    pub fn check_range(&self, k: usize) -> Result<()> {
        if k == 0 {
            return Err(Error::ZeroDegree);
        }
        if self.0.iter().any(|&l| l > k) {
            return Err(Error::IndexOutOfRange {
                k,
                index: self.0.clone(),
            });
        }
        Ok(())
    }
}

/// Symmetric `k x k` table of two-variable coefficients, 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffTable2D {
    k: usize,
    entries: Vec<ExactInteger>,
}

impl CoeffTable2D {
    pub(crate) fn from_entries(k: usize, entries: Vec<ExactInteger>) -> Self {
        debug_assert_eq!(entries.len(), k * k);
        CoeffTable2D { k, entries }
    }

    /// Build from row vectors; fails unless the rows form a `k x k` square.
    pub fn from_rows(rows: Vec<Vec<ExactInteger>>) -> Result<Self> {
        let k = rows.len();
        if k == 0 {
            return Err(Error::ZeroDegree);
        }
        if rows.iter().any(|r| r.len() != k) {
            return Err(Error::Consistency(format!("table rows are not all of length {k}")));
        }
        Ok(CoeffTable2D {
            k,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn get(&self, l: usize, m: usize) -> &ExactInteger {
        assert!((1..=self.k).contains(&l) && (1..=self.k).contains(&m));
        &self.entries[(l - 1) * self.k + (m - 1)]
    }

    /// Row `l` as a slice.
    pub fn row(&self, l: usize) -> &[ExactInteger] {
        &self.entries[(l - 1) * self.k..l * self.k]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[ExactInteger]> {
        self.entries.chunks(self.k)
    }

    pub fn to_rows(&self) -> Vec<Vec<ExactInteger>> {
        self.rows().map(<[_]>::to_vec).collect()
    }

    /// First `(l, m)` where the two tables differ, if any.
    pub fn first_difference(&self, other: &CoeffTable2D) -> Option<(usize, usize)> {
        if self.k != other.k {
            return Some((1, 1));
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .position(|(a, b)| a != b)
            .map(|i| (i / self.k + 1, i % self.k + 1))
    }

    pub fn is_symmetric(&self) -> bool {
        (1..=self.k).all(|l| (l + 1..=self.k).all(|m| self.get(l, m) == self.get(m, l)))
    }
}

/// Dense table over `[1, k]^n`, stored row-major (last component fastest).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffTableND {
    k: usize,
    n: usize,
    entries: Vec<ExactInteger>,
}

impl CoeffTableND {
    pub(crate) fn from_entries(k: usize, n: usize, entries: Vec<ExactInteger>) -> Self {
        debug_assert_eq!(entries.len(), k.pow(n as u32));
        CoeffTableND { k, n, entries }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn offset(&self, index: &[usize]) -> Option<usize> {
        if index.len() != self.n {
            return None;
        }
        let mut off = 0;
        for &l in index {
            if l < 1 || l > self.k {
                return None;
            }
            off = off * self.k + (l - 1);
        }
        Some(off)
    }

    /// Entry at `index`; panics if the index is not in `[1, k]^n`.
    pub fn get(&self, index: &[usize]) -> &ExactInteger {
        let off = self
            .offset(index)
            .unwrap_or_else(|| panic!("index {index:?} outside [1, {}]^{}", self.k, self.n));
        &self.entries[off]
    }

    /// Entry at `index`, or `None` outside the grid.
    pub fn try_get(&self, index: &[usize]) -> Option<&ExactInteger> {
        self.offset(index).map(|o| &self.entries[o])
    }

    /// `(index, value)` pairs in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (MultiIndex, &ExactInteger)> {
        let (k, n) = (self.k, self.n);
        self.entries
            .iter()
            .enumerate()
            .map(move |(i, v)| (MultiIndex::from_flat(i, k, n), v))
    }

    pub fn first_difference(&self, other: &CoeffTableND) -> Option<Vec<usize>> {
        if self.k != other.k || self.n != other.n {
            return Some(vec![1; self.n]);
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .position(|(a, b)| a != b)
            .map(|i| MultiIndex::from_flat(i, self.k, self.n).0)
    }

    /// View a two-variable table as a [`CoeffTable2D`].
    pub fn to_2d(&self) -> Option<CoeffTable2D> {
        (self.n == 2).then(|| CoeffTable2D::from_entries(self.k, self.entries.clone()))
    }

    /// Nested arrays, `n` levels deep.
    pub fn to_nested_json<F>(&self, leaf: F) -> serde_json::Value
    where
        F: Fn(&ExactInteger) -> serde_json::Value,
    {
        fn build<F: Fn(&ExactInteger) -> serde_json::Value>(
            entries: &[ExactInteger],
            k: usize,
            depth: usize,
            leaf: &F,
        ) -> serde_json::Value {
            if depth == 0 {
                return leaf(&entries[0]);
            }
            let stride = entries.len() / k;
            serde_json::Value::Array(entries.chunks(stride).map(|c| build(c, k, depth - 1, leaf)).collect())
        }
        build(&self.entries, self.k, self.n, &leaf)
    }
}

impl From<CoeffTable2D> for CoeffTableND {
    fn from(t: CoeffTable2D) -> Self {
        CoeffTableND {
            k: t.k,
            n: 2,
            entries: t.entries,
        }
    }
}
