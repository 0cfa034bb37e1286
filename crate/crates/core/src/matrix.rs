//! Exact analysis of the coefficient matrix `C(k)`: its factorization through
//! Stirling matrices, determinant, inertia and log-concavity of its lines, and
//! the Pascal-product matrix used to invert the binomial form.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::arith::{apply_sign, binomial, ExactInteger, ExactRational};
use crate::engine::{table_recurrence, CoeffTable2D};
use crate::error::{Error, Result};
use crate::stirling::{stirling1_unsigned, stirling2};

/// Default largest `k` for the `k^2 x k^2` Pascal-product check.
pub const PASCAL_CHECK_CAP: usize = 5;

/// Dense integer matrix, row-major, 0-based storage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<ExactInteger>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![ExactInteger::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = ExactInteger::one();
        }
        m
    }

    pub fn from_fn<F>(rows: usize, cols: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> ExactInteger,
    {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &ExactInteger {
        &self.data[i * self.cols + j]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(i, t);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(t, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j).is_zero()))
    }

    /// Determinant by fraction-free (Bareiss) elimination with row swaps.
    pub fn determinant(&self) -> ExactInteger {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return ExactInteger::one();
        }
        let mut m: Vec<Vec<ExactInteger>> = self.data.chunks(n).map(<[_]>::to_vec).collect();
        let mut negate = false;
        let mut prev = ExactInteger::one();
        for p in 0..n - 1 {
            if m[p][p].is_zero() {
                match (p + 1..n).find(|&r| !m[r][p].is_zero()) {
                    Some(r) => {
                        m.swap(p, r);
                        negate = !negate;
                    }
                    None => return ExactInteger::zero(),
                }
            }
            for i in p + 1..n {
                for j in p + 1..n {
                    let v = &m[i][j] * &m[p][p] - &m[i][p] * &m[p][j];
                    // exact by Sylvester's identity
                    m[i][j] = v / &prev;
                }
                m[i][p] = ExactInteger::zero();
            }
            prev = m[p][p].clone();
        }
        let det = m[n - 1][n - 1].clone();
        if negate {
            -det
        } else {
            det
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strings: Vec<String> = self.data.iter().map(|v| v.to_string()).collect();
        let width = strings.iter().map(String::len).max().unwrap_or(1);
        for row in strings.chunks(self.cols.max(1)) {
            let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Symmetric integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricIntMatrix(IntMatrix);

impl SymmetricIntMatrix {
    pub fn new(m: IntMatrix) -> Result<Self> {
        if !m.is_symmetric() {
            return Err(Error::Consistency("matrix is not symmetric".into()));
        }
        Ok(SymmetricIntMatrix(m))
    }

    pub fn dim(&self) -> usize {
        self.0.rows
    }

    pub fn as_matrix(&self) -> &IntMatrix {
        &self.0
    }
}

impl TryFrom<&CoeffTable2D> for SymmetricIntMatrix {
    type Error = Error;

    fn try_from(t: &CoeffTable2D) -> Result<Self> {
        let k = t.k();
        Self::new(IntMatrix::from_fn(k, k, |i, j| t.get(i + 1, j + 1).clone()))
    }
}

/// The coefficient matrix `C(k)`.
pub fn coefficient_matrix(k: usize) -> Result<SymmetricIntMatrix> {
    SymmetricIntMatrix::try_from(&table_recurrence(k)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    /// Upper triangular, `(l, m)` entry `S2(m, l)`.
    pub s2: IntMatrix,
    /// Diagonal, `(l, l)` entry `(-1)^(k-l) s1(k, l)`.
    pub sigma: IntMatrix,
}

impl Factorization {
    pub fn product(&self) -> IntMatrix {
        self.s2.mul(&self.sigma).mul(&self.s2.transpose())
    }
}

/// Builds `S2` and `Sigma` and checks `S2 Sigma S2^T = C(k)` entrywise.
pub fn build_factorization(k: usize) -> Result<Factorization> {
    if k == 0 {
        return Err(Error::ZeroDegree);
    }
    let s2 = IntMatrix::from_fn(k, k, |i, j| stirling2(j + 1, i as i64 + 1));
    let sigma = IntMatrix::from_fn(k, k, |i, j| {
        if i == j {
            apply_sign(stirling1_unsigned(k, i as i64 + 1), (k - i - 1) as i64)
        } else {
            ExactInteger::zero()
        }
    });
    let f = Factorization { s2, sigma };
    let c = coefficient_matrix(k)?;
    let product = f.product();
    if &product != c.as_matrix() {
        return Err(Error::Consistency(format!(
            "k = {k}: S2 Sigma S2^T differs from the coefficient table"
        )));
    }
    Ok(f)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetReport {
    /// `prod_l (-1)^(k-l) s1(k, l)`
    pub formula: ExactInteger,
    /// Fraction-free elimination on `C(k)`.
    pub elimination: ExactInteger,
}

/// Determinant of `C(k)` by both routes; errors unless they agree.
pub fn det_c(k: usize) -> Result<DetReport> {
    if k == 0 {
        return Err(Error::ZeroDegree);
    }
    let formula = (1..=k)
        .map(|l| apply_sign(stirling1_unsigned(k, l as i64), (k - l) as i64))
        .product();
    let elimination = coefficient_matrix(k)?.as_matrix().determinant();
    if formula != elimination {
        return Err(Error::Consistency(format!(
            "k = {k}: det by product formula {formula} but by elimination {elimination}"
        )));
    }
    Ok(DetReport { formula, elimination })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InertiaReport {
    pub positives: usize,
    pub negatives: usize,
    pub zeros: usize,
}

impl InertiaReport {
    /// `(ceil(k/2), floor(k/2), 0)`, the signature of the alternating
    /// diagonal factor.
    pub fn expected_for(k: usize) -> Self {
        InertiaReport {
            positives: k.div_ceil(2),
            negatives: k / 2,
            zeros: 0,
        }
    }
}

impl fmt::Display for InertiaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} positive, {} negative, {} zero",
            self.positives, self.negatives, self.zeros
        )
    }
}

/// Inertia of a symmetric matrix by congruence elimination over the
/// rationals.
///
/// A nonzero diagonal pivot contributes its sign. When every remaining
/// diagonal entry is zero but some `a_ij` is not, the block
/// `[[0, a], [a, 0]]` is eliminated as a unit and contributes one positive
/// and one negative. Sylvester's law makes the tally equal to the inertia.
pub fn inertia_of(matrix: &SymmetricIntMatrix) -> InertiaReport {
    let mut a: Vec<Vec<ExactRational>> = (0..matrix.dim())
        .map(|i| {
            (0..matrix.dim())
                .map(|j| ExactRational::from_integer(matrix.as_matrix().get(i, j).clone()))
                .collect()
        })
        .collect();
    let mut report = InertiaReport {
        positives: 0,
        negatives: 0,
        zeros: 0,
    };
    while !a.is_empty() {
        let n = a.len();
        if let Some(p) = (0..n).find(|&i| !a[i][i].is_zero()) {
            let pivot = a[p][p].clone();
            if pivot.is_positive() {
                report.positives += 1;
            } else {
                report.negatives += 1;
            }
            let col: Vec<ExactRational> = (0..n).map(|r| a[r][p].clone() / &pivot).collect();
            let prow = a[p].clone();
            for r in 0..n {
                if col[r].is_zero() {
                    continue;
                }
                for s in 0..n {
                    let delta = &col[r] * &prow[s];
                    a[r][s] -= delta;
                }
            }
            remove(&mut a, &[p]);
        } else if let Some((i, j)) = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| !a[i][j].is_zero())
        {
            report.positives += 1;
            report.negatives += 1;
            let off = a[i][j].clone();
            let ri: Vec<ExactRational> = (0..n).map(|r| a[r][i].clone()).collect();
            let rj: Vec<ExactRational> = (0..n).map(|r| a[r][j].clone()).collect();
            for r in 0..n {
                for s in 0..n {
                    let delta = (&ri[r] * &rj[s] + &rj[r] * &ri[s]) / &off;
                    a[r][s] -= delta;
                }
            }
            remove(&mut a, &[i, j]);
        } else {
            report.zeros += n;
            break;
        }
    }
    report
}

fn remove(a: &mut Vec<Vec<ExactRational>>, idx: &[usize]) {
    let keep = |t: &usize| !idx.contains(t);
    *a = a
        .iter()
        .enumerate()
        .filter(|(r, _)| keep(r))
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|(c, _)| keep(c))
                .map(|(_, v)| v.clone())
                .collect()
        })
        .collect();
}

/// Inertia of `C(k)`.
pub fn inertia(k: usize) -> Result<InertiaReport> {
    Ok(inertia_of(&coefficient_matrix(k)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineFamily {
    Row,
    Diagonal,
    AntiDiagonal,
}

impl fmt::Display for LineFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LineFamily::Row => "row",
            LineFamily::Diagonal => "diagonal",
            LineFamily::AntiDiagonal => "anti-diagonal",
        })
    }
}

/// Log-concavity verdict for one maximal line of the matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceVerdict {
    pub family: LineFamily,
    /// Row number `l`, offset `l - m`, or sum `l + m`.
    pub label: i64,
    /// 1-based `(l, m)` positions of the entries, in sequence order.
    pub positions: Vec<(usize, usize)>,
    /// First interior position `i` (0-based) with `a[i-1] a[i+1] > a[i]^2`,
    /// and the offending triple.
    pub violation: Option<(usize, [ExactInteger; 3])>,
    pub unimodal: bool,
}

impl SequenceVerdict {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogConcavityReport {
    pub k: usize,
    pub rows: Vec<SequenceVerdict>,
    pub diagonals: Vec<SequenceVerdict>,
    pub anti_diagonals: Vec<SequenceVerdict>,
}

impl LogConcavityReport {
    pub fn all(&self) -> impl Iterator<Item = &SequenceVerdict> {
        self.rows.iter().chain(&self.diagonals).chain(&self.anti_diagonals)
    }

    pub fn failures(&self, family: LineFamily) -> Vec<&SequenceVerdict> {
        self.all().filter(|v| v.family == family && !v.holds()).collect()
    }
}

/// First interior index violating `a[i-1] a[i+1] <= a[i]^2`.
pub fn first_log_concavity_violation(seq: &[ExactInteger]) -> Option<usize> {
    (1..seq.len().saturating_sub(1)).find(|&i| &seq[i - 1] * &seq[i + 1] > &seq[i] * &seq[i])
}

/// Weakly increasing then weakly decreasing.
pub fn is_unimodal(seq: &[ExactInteger]) -> bool {
    let mut i = 1;
    while i < seq.len() && seq[i - 1] <= seq[i] {
        i += 1;
    }
    while i < seq.len() && seq[i - 1] >= seq[i] {
        i += 1;
    }
    i >= seq.len()
}

fn verdict(table: &CoeffTable2D, family: LineFamily, label: i64, positions: Vec<(usize, usize)>) -> SequenceVerdict {
    let seq: Vec<ExactInteger> = positions.iter().map(|&(l, m)| table.get(l, m).clone()).collect();
    let violation =
        first_log_concavity_violation(&seq).map(|i| (i, [seq[i - 1].clone(), seq[i].clone(), seq[i + 1].clone()]));
    SequenceVerdict {
        family,
        label,
        positions,
        violation,
        unimodal: is_unimodal(&seq),
    }
}

/// Verdicts for every row, diagonal (constant `l - m`) and anti-diagonal
/// (constant `l + m`, from 3 to `2k - 1`) of a table. Never fails.
pub fn log_concavity_of(table: &CoeffTable2D) -> LogConcavityReport {
    let k = table.k();
    let rows = (1..=k)
        .map(|l| verdict(table, LineFamily::Row, l as i64, (1..=k).map(|m| (l, m)).collect()))
        .collect();
    let diagonals = (-(k as i64 - 1)..=k as i64 - 1)
        .map(|d| {
            let pos = (1..=k)
                .filter_map(|l| {
                    let m = l as i64 - d;
                    (1..=k as i64).contains(&m).then_some((l, m as usize))
                })
                .collect();
            verdict(table, LineFamily::Diagonal, d, pos)
        })
        .collect();
    let anti_diagonals = (3..2 * k)
        .map(|s| {
            let pos = (1..=k).filter(|&l| s > l && s - l <= k).map(|l| (l, s - l)).collect();
            verdict(table, LineFamily::AntiDiagonal, s as i64, pos)
        })
        .collect();
    LogConcavityReport {
        k,
        rows,
        diagonals,
        anti_diagonals,
    }
}

/// Log-concavity report for `C(k)`. Anti-diagonals are known to be
/// log-concave, so a failure there is an error; row and diagonal failures are
/// only reported.
pub fn log_concavity_report(k: usize) -> Result<LogConcavityReport> {
    if k < 2 {
        return Err(Error::Limit("log-concavity report needs k >= 2".into()));
    }
    let report = log_concavity_of(&table_recurrence(k)?);
    if let Some(bad) = report.failures(LineFamily::AntiDiagonal).first() {
        return Err(Error::Consistency(format!(
            "k = {k}: anti-diagonal l+m = {} is not log-concave at {:?}",
            bad.label, bad.violation
        )));
    }
    Ok(report)
}

/// Row `i` of the `k^2`-system maps to `(L(i), M(i))`; 0-based here.
fn split_index(i: usize, k: usize) -> (usize, usize) {
    (i / k + 1, i % k + 1)
}

/// `A_ij = C(L(i), L(j)) C(M(i), M(j))`, of size `k^2 x k^2`.
pub fn pascal_product_matrix(k: usize) -> IntMatrix {
    let n = k * k;
    IntMatrix::from_fn(n, n, |i, j| {
        let (li, mi) = split_index(i, k);
        let (lj, mj) = split_index(j, k);
        binomial(li as u64, lj as i64) * binomial(mi as u64, mj as i64)
    })
}

/// `B_ij = (-1)^(L(i)+L(j)+M(i)+M(j)) A_ij`, the claimed inverse.
pub fn signed_pascal_product_matrix(k: usize) -> IntMatrix {
    let a = pascal_product_matrix(k);
    IntMatrix::from_fn(a.rows, a.cols, |i, j| {
        let (li, mi) = split_index(i, k);
        let (lj, mj) = split_index(j, k);
        apply_sign(a.get(i, j).clone(), (li + lj + mi + mj) as i64)
    })
}

/// Checks that `A` is unit lower triangular with determinant 1 and that the
/// signed copy `B` satisfies `B A = I`. `k` is limited to
/// [`PASCAL_CHECK_CAP`].
pub fn pascal_product_check(k: usize) -> Result<bool> {
    pascal_product_check_with_cap(k, PASCAL_CHECK_CAP)
}

pub fn pascal_product_check_with_cap(k: usize, cap: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::ZeroDegree);
    }
    if k > cap {
        return Err(Error::Limit(format!(
            "Pascal-product check limited to k <= {cap} (got {k})"
        )));
    }
    let a = pascal_product_matrix(k);
    let n = a.rows();
    let unit_diagonal = (0..n).all(|i| a.get(i, i).is_one());
    let det_one = a.determinant().is_one();
    let inverse = signed_pascal_product_matrix(k).mul(&a) == IntMatrix::identity(n);
    Ok(a.is_lower_triangular() && unit_diagonal && det_one && inverse)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(v: i64) -> ExactInteger {
        ExactInteger::from(v)
    }

    fn mat(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_fn(rows.len(), rows[0].len(), |i, j| int(rows[i][j]))
    }

    /// Laplace expansion along the first row.
    fn det_cofactor(m: &IntMatrix) -> ExactInteger {
        let n = m.rows();
        if n == 1 {
            return m.get(0, 0).clone();
        }
        (0..n)
            .map(|c| {
                let minor =
                    IntMatrix::from_fn(n - 1, n - 1, |i, j| m.get(i + 1, if j < c { j } else { j + 1 }).clone());
                apply_sign(m.get(0, c) * det_cofactor(&minor), c as i64)
            })
            .sum()
    }

    #[test]
    fn factorization_small() {
        let f = build_factorization(2).unwrap();
        assert_eq!(f.s2, mat(&[&[1, 1], &[0, 1]]));
        assert_eq!(f.sigma, mat(&[&[-1, 0], &[0, 1]]));
        assert_eq!(f.product(), mat(&[&[0, 1], &[1, 1]]));
        let one = build_factorization(1).unwrap();
        assert_eq!(one.product(), mat(&[&[1]]));
    }

    #[test]
    fn factorization_golden() {
        let f = build_factorization(9).unwrap();
        let golden = crate::golden::c9_table();
        let expect = IntMatrix::from_fn(9, 9, |i, j| golden.get(i + 1, j + 1).clone());
        assert_eq!(f.product(), expect);
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(det_c(1).unwrap().formula, int(1));
        assert_eq!(det_c(2).unwrap().elimination, int(-1));
        let three = det_c(3).unwrap();
        assert_eq!(three.formula, int(-6));
        assert_eq!(three.elimination, int(-6));
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        for k in 1..=6 {
            let c = coefficient_matrix(k).unwrap();
            assert_eq!(c.as_matrix().determinant(), det_cofactor(c.as_matrix()), "k={k}");
        }
        let singular = mat(&[&[1, 2], &[2, 4]]);
        assert_eq!(singular.determinant(), int(0));
        let zero_col = mat(&[&[0, 1, 2], &[0, 3, 4], &[0, 5, 6]]);
        assert_eq!(zero_col.determinant(), int(0));
    }

    #[test]
    fn inertia_examples() {
        let r = |p, n, z| InertiaReport {
            positives: p,
            negatives: n,
            zeros: z,
        };
        assert_eq!(inertia(1).unwrap(), r(1, 0, 0));
        assert_eq!(inertia(2).unwrap(), r(1, 1, 0));
        assert_eq!(inertia(9).unwrap(), r(5, 4, 0));
        assert_eq!(InertiaReport::expected_for(9), r(5, 4, 0));
        assert_eq!(r(5, 4, 0).to_string(), "5 positive, 4 negative, 0 zero");
    }

    #[test]
    fn inertia_handles_degenerate_matrices() {
        let sym = |rows: &[&[i64]]| SymmetricIntMatrix::new(mat(rows)).unwrap();
        let r = |p, n, z| InertiaReport {
            positives: p,
            negatives: n,
            zeros: z,
        };
        assert_eq!(inertia_of(&sym(&[&[0, 0], &[0, 0]])), r(0, 0, 2));
        assert_eq!(inertia_of(&sym(&[&[0, 3], &[3, 0]])), r(1, 1, 0));
        assert_eq!(inertia_of(&sym(&[&[1, 1], &[1, 1]])), r(1, 0, 1));
        assert_eq!(inertia_of(&sym(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, -2]])), r(1, 2, 0));
        assert!(SymmetricIntMatrix::new(mat(&[&[0, 1], &[2, 0]])).is_err());
    }

    #[test]
    fn log_concavity_k9() {
        let rep = log_concavity_report(9).unwrap();
        assert_eq!(rep.rows.len(), 9);
        assert_eq!(rep.diagonals.len(), 17);
        assert_eq!(rep.anti_diagonals.len(), 15);
        assert!(rep.anti_diagonals.iter().all(SequenceVerdict::holds));
        assert!(rep.rows.iter().all(SequenceVerdict::holds));
        assert_eq!(rep.anti_diagonals[0].positions, vec![(1, 2), (2, 1)]);
        assert_eq!(rep.anti_diagonals.last().unwrap().positions, vec![(8, 9), (9, 8)]);
    }

    #[test]
    fn log_concavity_k2_and_detection() {
        let rep = log_concavity_report(2).unwrap();
        assert!(rep.all().all(SequenceVerdict::holds));
        assert!(log_concavity_report(1).is_err());

        let seq: Vec<_> = [1, 0, 1].into_iter().map(int).collect();
        assert_eq!(first_log_concavity_violation(&seq), Some(1));
        let seq: Vec<_> = [1, 3, 4, 2].into_iter().map(int).collect();
        assert_eq!(first_log_concavity_violation(&seq), None);
        assert!(is_unimodal(&seq));
        let seq: Vec<_> = [2, 1, 2].into_iter().map(int).collect();
        assert!(!is_unimodal(&seq));
    }

    #[test]
    fn report_surfaces_a_planted_violation() {
        let mut rows = table_recurrence(4).unwrap().to_rows();
        // make row 4 = 1, 7, 0, 1
        rows[3][2] = int(0);
        rows[2][3] = int(0);
        let t = CoeffTable2D::from_rows(rows).unwrap();
        let rep = log_concavity_of(&t);
        let bad = rep.failures(LineFamily::Row);
        assert!(bad.iter().any(|v| v.label == 4 && v.violation.as_ref().unwrap().0 == 2));
    }

    #[test]
    fn pascal_product_examples() {
        assert!(pascal_product_check(1).unwrap());
        assert!(pascal_product_check(2).unwrap());
        assert!(pascal_product_check(4).unwrap());
        assert!(matches!(pascal_product_check(6), Err(Error::Limit(_))));
        assert!(pascal_product_check_with_cap(6, 6).unwrap());
        assert_eq!(pascal_product_matrix(1), IntMatrix::identity(1));
    }

    #[test]
    fn pascal_inverse_recovers_binomial_form() {
        // b = A^{-1} xi with xi_j = C(L(j) M(j), k)
        let k = 4;
        let b = signed_pascal_product_matrix(k);
        let xi = IntMatrix::from_fn(k * k, 1, |j, _| {
            let (l, m) = split_index(j, k);
            binomial((l * m) as u64, k as i64)
        });
        let beta = b.mul(&xi);
        for i in 0..k * k {
            let (l, m) = split_index(i, k);
            assert_eq!(beta.get(i, 0), &crate::engine::b_mobius(k, l, m).unwrap());
        }
    }

    proptest! {
        #[test]
        fn bareiss_agrees_with_cofactor(vals in proptest::collection::vec(-9i64..10, 16)) {
            let m = IntMatrix::from_fn(4, 4, |i, j| int(vals[i * 4 + j]));
            prop_assert_eq!(m.determinant(), det_cofactor(&m));
        }

        #[test]
        fn inertia_is_congruence_invariant(
            diag in proptest::collection::vec(-3i64..4, 4),
            p in proptest::collection::vec(-2i64..3, 16),
        ) {
            // P^T D P has the inertia of D whenever P is invertible.
            let pm = IntMatrix::from_fn(4, 4, |i, j| int(p[i * 4 + j] + if i == j { 5 } else { 0 }));
            prop_assume!(!pm.determinant().is_zero());
            let d = IntMatrix::from_fn(4, 4, |i, j| if i == j { int(diag[i]) } else { int(0) });
            let s = SymmetricIntMatrix::new(pm.transpose().mul(&d).mul(&pm)).unwrap();
            let got = inertia_of(&s);
            prop_assert_eq!(got.positives, diag.iter().filter(|&&v| v > 0).count());
            prop_assert_eq!(got.negatives, diag.iter().filter(|&&v| v < 0).count());
            prop_assert_eq!(got.zeros, diag.iter().filter(|&&v| v == 0).count());
        }
    }
}
