//! Coefficients `c(k; L)` of the expansion
//!
//! ```text
//! (x_1 x_2 ... x_n)^(k) = sum_L c(k; L) x_1^(l_1) ... x_n^(l_n)
//! ```
//!
//! where `x^(k)` is the falling factorial power. Four independent routes are
//! provided: a Stirling-number closed form, a bottom-up recurrence, an
//! inclusion-exclusion count of covering tables, and a signed binomial sum
//! obtained by inverting a Pascal-product system.

mod closed_form;
mod recurrence;
mod table;

use std::fmt;
use std::str::FromStr;

pub use closed_form::{
    b_mobius, b_multi, c_inclusion_exclusion, c_mobius, c_multi_inclusion_exclusion, c_multi_inversion,
    c_multi_stirling, c_stirling,
};
pub use recurrence::{table_multi_recurrence, table_recurrence};
pub use table::{CoeffTable2D, CoeffTableND, MultiIndex};

use crate::arith::ExactInteger;
use crate::error::{Error, Result};
use rayon::prelude::*;

/// Algorithm used to produce a coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Stirling,
    Recurrence,
    InclusionExclusion,
    /// Signed binomial sum; for `n > 2` this is the multivariate inversion
    /// formula.
    Mobius,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Stirling,
        Method::Recurrence,
        Method::InclusionExclusion,
        Method::Mobius,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Stirling => "stirling",
            Method::Recurrence => "recurrence",
            Method::InclusionExclusion => "inclusion-exclusion",
            Method::Mobius => "mobius",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method `{s}`"))
    }
}

/// Single coefficient `c(k; L)` by the chosen method.
///
/// The recurrence has no spot-query form, so it builds the whole table.
pub fn coefficient(k: usize, index: &MultiIndex, method: Method) -> Result<ExactInteger> {
    index.check_range(k)?;
    let l = index.components();
    match (method, l.len()) {
        (Method::Stirling, 2) => c_stirling(k, l[0], l[1]),
        (Method::InclusionExclusion, 2) => c_inclusion_exclusion(k, l[0], l[1]),
        (Method::Mobius, 2) => c_mobius(k, l[0], l[1]),
        (Method::Recurrence, 2) => Ok(table_recurrence(k)?.get(l[0], l[1]).clone()),
        (Method::Stirling, _) => c_multi_stirling(k, index),
        (Method::InclusionExclusion, _) => c_multi_inclusion_exclusion(k, index),
        (Method::Mobius, _) => c_multi_inversion(k, index),
        (Method::Recurrence, n) => Ok(table_multi_recurrence(k, n)?.get(l).clone()),
    }
}

/// Full `k x k` table by the chosen method. Closed forms are evaluated cell
/// by cell in parallel; results do not depend on scheduling.
pub fn table_2d(k: usize, method: Method) -> Result<CoeffTable2D> {
    if k == 0 {
        return Err(Error::ZeroDegree);
    }
    let cell: fn(usize, usize, usize) -> Result<ExactInteger> = match method {
        Method::Recurrence => return table_recurrence(k),
        Method::Stirling => c_stirling,
        Method::InclusionExclusion => c_inclusion_exclusion,
        Method::Mobius => c_mobius,
    };
    let entries = (0..k * k)
        .into_par_iter()
        .map(|i| cell(k, i / k + 1, i % k + 1))
        .collect::<Result<Vec<_>>>()?;
    Ok(CoeffTable2D::from_entries(k, entries))
}

/// Dense table over `[1, k]^n` by the chosen method.
pub fn table_nd(k: usize, n: usize, method: Method) -> Result<CoeffTableND> {
    if k == 0 {
        return Err(Error::ZeroDegree);
    }
    if n == 0 {
        return Err(Error::EmptyIndex);
    }
    let cell: fn(usize, &MultiIndex) -> Result<ExactInteger> = match method {
        Method::Recurrence => return table_multi_recurrence(k, n),
        Method::Stirling => c_multi_stirling,
        Method::InclusionExclusion => c_multi_inclusion_exclusion,
        Method::Mobius => c_multi_inversion,
    };
    let total = k.pow(n as u32);
    let entries = (0..total)
        .into_par_iter()
        .map(|flat| cell(k, &MultiIndex::from_flat(flat, k, n)))
        .collect::<Result<Vec<_>>>()?;
    Ok(CoeffTableND::from_entries(k, n, entries))
}

/// Builds the table by every method and checks they agree entry by entry.
pub fn table_2d_cross_checked(k: usize) -> Result<CoeffTable2D> {
    let reference = table_2d(k, Method::Recurrence)?;
    for method in [Method::Stirling, Method::InclusionExclusion, Method::Mobius] {
        let other = table_2d(k, method)?;
        if let Some((l, m)) = reference.first_difference(&other) {
            return Err(Error::Consistency(format!(
                "k = {k}: {method} gives {} at ({l},{m}), recurrence gives {}",
                other.get(l, m),
                reference.get(l, m)
            )));
        }
    }
    Ok(reference)
}

/// Multivariate analogue of [`table_2d_cross_checked`].
pub fn table_nd_cross_checked(k: usize, n: usize) -> Result<CoeffTableND> {
    let reference = table_nd(k, n, Method::Recurrence)?;
    for method in [Method::Stirling, Method::InclusionExclusion, Method::Mobius] {
        let other = table_nd(k, n, method)?;
        if let Some(idx) = reference.first_difference(&other) {
            return Err(Error::Consistency(format!(
                "k = {k}, n = {n}: {method} gives {} at {idx:?}, recurrence gives {}",
                other.get(&idx),
                reference.get(&idx)
            )));
        }
    }
    Ok(reference)
}
