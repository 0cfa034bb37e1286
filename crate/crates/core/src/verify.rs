//! The full invariant suite behind `factoprod verify`.

use std::fmt;

use num_traits::Zero;

use crate::arith::factorial;
use crate::engine::{table_2d, table_2d_cross_checked, table_nd_cross_checked, CoeffTableND, Method};
use crate::error::{Error, Result};
use crate::golden;
use crate::matrix::{
    build_factorization, det_c, inertia, log_concavity_report, pascal_product_check_with_cap, InertiaReport,
    LineFamily, PASCAL_CHECK_CAP,
};
use crate::oracle::{count_ranking_tables, expansion_mismatch};
use crate::stirling::stirling2;

/// Largest `k` for exhaustive ranking-table enumeration.
pub const ORACLE_K_CAP: usize = 6;

/// Largest `k` checked for `n`-variable tables, `n >= 3`.
pub fn nd_k_cap(n: usize) -> usize {
    match n {
        0..=2 => usize::MAX,
        3 => 6,
        4 => 4,
        5 => 3,
        _ => 2,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub k_max: usize,
    pub n_max: usize,
    pub pascal_cap: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            k_max: 6,
            n_max: 2,
            pascal_cap: PASCAL_CHECK_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {:<22} {}", self.name, self.detail)
    }
}

fn check(name: &'static str, outcome: Result<String>) -> CheckResult {
    match outcome {
        Ok(detail) => CheckResult {
            name,
            passed: true,
            detail,
        },
        Err(e) => CheckResult {
            name,
            passed: false,
            detail: e.to_string(),
        },
    }
}

fn fail(msg: String) -> Error {
    Error::Consistency(msg)
}

pub fn golden_k9() -> Result<String> {
    let golden = golden::c9_table();
    for method in Method::ALL {
        let t = table_2d(9, method)?;
        if let Some((l, m)) = t.first_difference(&golden) {
            return Err(fail(format!("{method} differs from the reference at ({l},{m})")));
        }
    }
    Ok("all four methods reproduce the k = 9 reference table".into())
}

pub fn cross_method_2d(k_max: usize) -> Result<String> {
    for k in 1..=k_max {
        table_2d_cross_checked(k)?;
    }
    Ok(format!("four methods agree for k = 1..{k_max}"))
}

pub fn cross_method_nd(k_max: usize, n_max: usize) -> Result<String> {
    let mut covered = Vec::new();
    for n in 3..=n_max {
        let top = k_max.min(nd_k_cap(n));
        for k in 1..=top {
            table_nd_cross_checked(k, n)?;
        }
        covered.push(format!("n = {n}: k = 1..{top}"));
    }
    Ok(format!("three methods agree ({})", covered.join("; ")))
}

/// Symmetry, zero pattern, first and last rows of every two-variable table.
pub fn structure_2d(k_max: usize) -> Result<String> {
    for k in 1..=k_max {
        let t = table_2d(k, Method::Recurrence)?;
        if !t.is_symmetric() {
            return Err(fail(format!("k = {k}: table is not symmetric")));
        }
        for l in 1..=k {
            for m in 1..=k {
                let v = t.get(l, m);
                let expect_zero = l * m < k;
                if expect_zero != v.is_zero() || *v < Zero::zero() {
                    return Err(fail(format!("k = {k}: zero pattern broken at ({l},{m}) = {v}")));
                }
            }
        }
        for m in 1..=k {
            if t.get(k, m) != &stirling2(k, m as i64) {
                return Err(fail(format!("k = {k}: last row differs from S2 at m = {m}")));
            }
            let unit = if m == k { 1 } else { 0 };
            if t.get(1, m) != &unit.into() {
                return Err(fail(format!("k = {k}: first row is not the unit row at m = {m}")));
            }
        }
    }
    Ok(format!("symmetry, zero pattern, first/last rows for k = 1..{k_max}"))
}

/// Permutation symmetry and zero pattern of an `n`-variable table.
pub fn structure_nd(table: &CoeffTableND) -> Result<()> {
    let k = table.k();
    for (idx, v) in table.iter() {
        let l = idx.components();
        let cells: usize = l.iter().product();
        if (cells < k) != v.is_zero() || *v < Zero::zero() {
            return Err(fail(format!("k = {k}: zero pattern broken at {l:?} = {v}")));
        }
        let mut sorted = l.to_vec();
        sorted.sort();
        if table.get(&sorted) != v {
            return Err(fail(format!("k = {k}: {l:?} and {sorted:?} differ")));
        }
    }
    Ok(())
}

pub fn oracle_2d(k_max: usize) -> Result<String> {
    let top = k_max.min(ORACLE_K_CAP);
    for k in 1..=top {
        let t = table_2d(k, Method::Stirling)?;
        for l in 1..=k.min(4) {
            for m in 1..=k.min(4) {
                let counted = count_ranking_tables(k, &[l, m])?;
                let expect = factorial(l as u64) * factorial(m as u64) * t.get(l, m);
                if counted != expect {
                    return Err(fail(format!(
                        "k = {k}, shape {l}x{m}: enumerated {counted} tables, expected {expect}"
                    )));
                }
            }
        }
    }
    Ok(format!(
        "enumerated ranking tables match l! m! c for k = 1..{top}, l, m <= 4"
    ))
}

pub fn oracle_nd(k_max: usize, n_max: usize) -> Result<String> {
    let top = k_max.min(5);
    let mut covered = Vec::new();
    for n in 3..=n_max.min(4) {
        let side = if n == 3 { 3 } else { 2 };
        for k in 1..=top {
            let t = table_nd_cross_checked(k, n)?;
            for (idx, c) in t.iter() {
                if idx.components().iter().any(|&l| l > side) {
                    continue;
                }
                let counted = count_ranking_tables(k, idx.components())?;
                let expect = idx.factorial() * c;
                if counted != expect {
                    return Err(fail(format!(
                        "k = {k}, shape {:?}: enumerated {counted}, expected {expect}",
                        idx.components()
                    )));
                }
            }
        }
        covered.push(format!("n = {n}, sides <= {side}"));
    }
    Ok(format!(
        "enumeration matches L! c for k = 1..{top} ({})",
        covered.join("; ")
    ))
}

pub fn expansion(k_max: usize, n_max: usize) -> Result<String> {
    let mut covered = Vec::new();
    for n in 1..=n_max {
        let top = k_max.min(nd_k_cap(n));
        for k in 1..=top {
            let t = crate::engine::table_nd(k, n, Method::Recurrence)?;
            if let Some(point) = expansion_mismatch(&t) {
                return Err(fail(format!("k = {k}, n = {n}: expansion fails at {point:?}")));
            }
            if n >= 3 {
                structure_nd(&t)?;
            }
        }
        covered.push(format!("n = {n}: k <= {top}"));
    }
    Ok(format!(
        "identity holds on the evaluation grid ({})",
        covered.join("; ")
    ))
}

pub fn matrix_claims(k_max: usize) -> Result<String> {
    for k in 1..=k_max {
        build_factorization(k)?;
        det_c(k)?;
        let got = inertia(k)?;
        let expect = InertiaReport::expected_for(k);
        if got != expect {
            return Err(fail(format!("k = {k}: inertia {got}, expected {expect}")));
        }
    }
    Ok(format!("factorization, determinant, inertia for k = 1..{k_max}"))
}

/// Anti-diagonals must pass; row and diagonal failures are listed in the
/// detail but do not fail the check.
pub fn log_concavity(k_max: usize) -> Result<String> {
    let mut counterexamples = Vec::new();
    for k in 2..=k_max {
        let rep = log_concavity_report(k)?;
        for family in [LineFamily::Row, LineFamily::Diagonal] {
            for v in rep.failures(family) {
                counterexamples.push(format!("k={k} {family} {}", v.label));
            }
        }
    }
    let tail = if counterexamples.is_empty() {
        "no row/diagonal counterexamples".to_string()
    } else {
        format!("row/diagonal counterexamples: {}", counterexamples.join(", "))
    };
    Ok(format!("anti-diagonals log-concave for k = 2..{k_max}; {tail}"))
}

pub fn pascal(k_max: usize, cap: usize) -> Result<String> {
    let top = k_max.min(cap);
    for k in 1..=top {
        if !pascal_product_check_with_cap(k, cap)? {
            return Err(fail(format!("k = {k}: Pascal-product inverse check failed")));
        }
    }
    Ok(format!("A unit lower triangular, det A = 1, BA = I for k = 1..{top}"))
}

/// Runs every check and returns one result per check, in order.
pub fn run_suite(cfg: &SuiteConfig) -> Vec<CheckResult> {
    let mut out = Vec::new();
    if cfg.k_max >= 9 {
        out.push(check("golden-k9", golden_k9()));
    }
    out.push(check("cross-method-2d", cross_method_2d(cfg.k_max)));
    if cfg.n_max >= 3 {
        out.push(check("cross-method-nd", cross_method_nd(cfg.k_max, cfg.n_max)));
    }
    out.push(check("structure-2d", structure_2d(cfg.k_max)));
    out.push(check("oracle-2d", oracle_2d(cfg.k_max)));
    if cfg.n_max >= 3 {
        out.push(check("oracle-nd", oracle_nd(cfg.k_max, cfg.n_max)));
    }
    out.push(check("expansion-identity", expansion(cfg.k_max, cfg.n_max)));
    out.push(check("matrix-claims", matrix_claims(cfg.k_max)));
    if cfg.k_max >= 2 {
        out.push(check("log-concavity", log_concavity(cfg.k_max)));
    }
    out.push(check("pascal-product", pascal(cfg.k_max, cfg.pascal_cap)));
    out
}
