//! Ground truth by brute force.
//!
//! Covering selections are enumerated directly on the cell grid, and the
//! expansion identity is checked by exact evaluation on `{0, ..., k}^n`.

use num_traits::Zero;
use rayon::prelude::*;

use crate::arith::{factorial, falling_factorial, ExactInteger};
use crate::engine::{table_nd, CoeffTableND, Method};
use crate::error::{Error, Result};

/// A `k`-ranking problem on an `l_1 x ... x l_n` grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankingTableSpec {
    pub k: usize,
    pub shape: Vec<usize>,
}

impl RankingTableSpec {
    pub fn new(k: usize, shape: Vec<usize>) -> Result<Self> {
        if shape.is_empty() {
            return Err(Error::EmptyIndex);
        }
        if shape.contains(&0) {
            return Err(Error::IndexOutOfRange { k, index: shape });
        }
        Ok(RankingTableSpec { k, shape })
    }

    pub fn cell_count(&self) -> usize {
        self.shape.iter().product()
    }
}

/// Grid geometry: which slices each cell lies on, and the last cell of each
/// slice in row-major order.
struct Grid {
    cells: usize,
    axes: usize,
    slices_per_axis: Vec<usize>,
    // cell_slices[c * axes + a] = global slice id of cell c along axis a
    cell_slices: Vec<usize>,
    slice_last: Vec<usize>,
    slice_axis: Vec<usize>,
}

impl Grid {
    fn new(shape: &[usize]) -> Self {
        let axes = shape.len();
        let cells: usize = shape.iter().product();
        let mut offsets = Vec::with_capacity(axes);
        let mut slice_axis = Vec::new();
        for (a, &len) in shape.iter().enumerate() {
            offsets.push(slice_axis.len());
            slice_axis.extend(std::iter::repeat_n(a, len));
        }
        let mut cell_slices = vec![0; cells * axes];
        let mut slice_last = vec![0; slice_axis.len()];
        for c in 0..cells {
            let mut rest = c;
            for a in (0..axes).rev() {
                let coord = rest % shape[a];
                rest /= shape[a];
                let id = offsets[a] + coord;
                cell_slices[c * axes + a] = id;
                slice_last[id] = slice_last[id].max(c);
            }
        }
        Grid {
            cells,
            axes,
            slices_per_axis: shape.to_vec(),
            cell_slices,
            slice_last,
            slice_axis,
        }
    }

    fn slices_of(&self, cell: usize) -> &[usize] {
        &self.cell_slices[cell * self.axes..(cell + 1) * self.axes]
    }
}

struct Search<'a, F> {
    grid: &'a Grid,
    cover: Vec<u32>,
    uncovered_per_axis: Vec<usize>,
    chosen: Vec<usize>,
    visit: F,
}

impl<F: FnMut(&[usize])> Search<'_, F> {
    fn pick(&mut self, cell: usize) {
        self.chosen.push(cell);
        for &s in self.grid.slices_of(cell) {
            if self.cover[s] == 0 {
                self.uncovered_per_axis[self.grid.slice_axis[s]] -= 1;
            }
            self.cover[s] += 1;
        }
    }

    fn unpick(&mut self, cell: usize) {
        self.chosen.pop();
        for &s in self.grid.slices_of(cell) {
            self.cover[s] -= 1;
            if self.cover[s] == 0 {
                self.uncovered_per_axis[self.grid.slice_axis[s]] += 1;
            }
        }
    }

    /// Passing over `cell` without picking it kills any slice that ends there
    /// uncovered.
    fn can_skip(&self, cell: usize) -> bool {
        self.grid
            .slices_of(cell)
            .iter()
            .all(|&s| self.cover[s] > 0 || self.grid.slice_last[s] != cell)
    }

    fn run(&mut self, pos: usize, left: usize) {
        if left == 0 {
            if self.uncovered_per_axis.iter().all(|&u| u == 0) {
                (self.visit)(&self.chosen);
            }
            return;
        }
        if self.grid.cells - pos < left {
            return;
        }
        // One cell covers at most one slice per axis.
        if self.uncovered_per_axis.iter().any(|&u| u > left) {
            return;
        }
        self.pick(pos);
        self.run(pos + 1, left - 1);
        self.unpick(pos);
        if self.can_skip(pos) {
            self.run(pos + 1, left);
        }
    }
}

/// Calls `visit` with every covering `k`-subset (as sorted cell indices)
/// whose smallest cell is `first`.
fn search_from<F: FnMut(&[usize])>(grid: &Grid, k: usize, first: usize, visit: F) {
    let mut search = Search {
        grid,
        cover: vec![0; grid.slice_axis.len()],
        uncovered_per_axis: grid.slices_per_axis.clone(),
        chosen: Vec::with_capacity(k),
        visit,
    };
    for cell in 0..first {
        if !search.can_skip(cell) {
            return;
        }
    }
    search.pick(first);
    search.run(first + 1, k - 1);
}

/// Number of `k`-subsets of the grid cells that meet every axis-aligned slice.
pub fn count_covering_selections(k: usize, shape: &[usize]) -> Result<ExactInteger> {
    let spec = RankingTableSpec::new(k, shape.to_vec())?;
    if k == 0 || k > spec.cell_count() {
        return Ok(ExactInteger::zero());
    }
    let grid = Grid::new(shape);
    let total: u64 = (0..grid.cells)
        .into_par_iter()
        .map(|first| {
            let mut count = 0u64;
            search_from(&grid, k, first, |_| count += 1);
            count
        })
        .sum();
    Ok(ExactInteger::from(total))
}

/// Number of ranking tables: covering selections with the ranks `1..=k`
/// assigned to the chosen cells.
pub fn count_ranking_tables(k: usize, shape: &[usize]) -> Result<ExactInteger> {
    Ok(count_covering_selections(k, shape)? * factorial(k as u64))
}

/// Every covering selection as a 0/1 grid in row-major order. Intended for
/// small debugging output only.
pub fn covering_selections(k: usize, shape: &[usize]) -> Result<Vec<Vec<u8>>> {
    let spec = RankingTableSpec::new(k, shape.to_vec())?;
    let mut out = Vec::new();
    if k == 0 || k > spec.cell_count() {
        return Ok(out);
    }
    let grid = Grid::new(shape);
    for first in 0..grid.cells {
        search_from(&grid, k, first, |chosen| {
            let mut cells = vec![0u8; grid.cells];
            for &c in chosen {
                cells[c] = 1;
            }
            out.push(cells);
        });
    }
    Ok(out)
}

/// Precomputed `x^(l)` for `0 <= x, l <= k`.
fn falling_table(k: usize) -> Vec<Vec<ExactInteger>> {
    (0..=k)
        .map(|x| {
            (0..=k)
                .map(|l| falling_factorial(&ExactInteger::from(x), l as u64))
                .collect()
        })
        .collect()
}

/// First grid point where `(x_1 ... x_n)^(k)` disagrees with the expansion
/// built from `table`, if any.
pub fn expansion_mismatch(table: &CoeffTableND) -> Option<Vec<usize>> {
    let (k, n) = (table.k(), table.n());
    let ff = falling_table(k);
    let support: Vec<_> = table.iter().filter(|(_, v)| !v.is_zero()).collect();
    let side = k + 1;
    (0..side.pow(n as u32))
        .into_par_iter()
        .find_first(|&flat| {
            let mut rest = flat;
            let mut point = vec![0; n];
            for slot in point.iter_mut().rev() {
                *slot = rest % side;
                rest /= side;
            }
            let product: u64 = point.iter().map(|&x| x as u64).product();
            let lhs = falling_factorial(&ExactInteger::from(product), k as u64);
            let mut rhs = ExactInteger::zero();
            'terms: for (idx, c) in &support {
                let mut term = (*c).clone();
                for (&x, &l) in point.iter().zip(idx.components()) {
                    let f = &ff[x][l];
                    if f.is_zero() {
                        continue 'terms;
                    }
                    term *= f;
                }
                rhs += term;
            }
            lhs != rhs
        })
        .map(|flat| {
            let mut rest = flat;
            let mut point = vec![0; n];
            for slot in point.iter_mut().rev() {
                *slot = rest % side;
                rest /= side;
            }
            point
        })
}

/// Checks the expansion identity on the grid `{0, ..., k}^n`. Both sides have
/// degree at most `k` in each variable, so agreement there is agreement as
/// polynomials.
pub fn verify_expansion_by_evaluation(k: usize, n: usize) -> Result<bool> {
    let table = table_nd(k, n, Method::Recurrence)?;
    Ok(expansion_mismatch(&table).is_none())
}
