use num_integer::Integer;
use num_traits::Zero;

use crate::arith::{apply_sign, binomial, binomial_signed, factorial, ExactInteger};
use crate::engine::MultiIndex;
use crate::error::{Error, Result};
use crate::stirling::{stirling1_row, stirling2};

fn check_pair(k: usize, l: usize, m: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::ZeroDegree);
    }
    if l == 0 || m == 0 || l > k || m > k {
        return Err(Error::IndexOutOfRange { k, index: vec![l, m] });
    }
    Ok(())
}

fn exact_div(
    num: ExactInteger,
    den: &ExactInteger,
    method: &'static str,
    k: usize,
    index: &[usize],
) -> Result<ExactInteger> {
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::Divisibility {
            method,
            k,
            index: index.to_vec(),
        });
    }
    Ok(q)
}

/// `sum_p (-1)^(k-p) s1(k,p) S2(p,l) S2(p,m)`
pub fn c_stirling(k: usize, l: usize, m: usize) -> Result<ExactInteger> {
    check_pair(k, l, m)?;
    c_multi_stirling(k, &MultiIndex::new(vec![l, m])?)
}

/// `sum_p (-1)^(k-p) s1(k,p) prod_i S2(p,l_i)`
pub fn c_multi_stirling(k: usize, index: &MultiIndex) -> Result<ExactInteger> {
    index.check_range(k)?;
    let s1 = stirling1_row(k);
    // S2(p, l) vanishes for p < l, so start at the largest component.
    let start = *index.components().iter().max().unwrap();
    let mut acc = ExactInteger::zero();
    for p in start..=k {
        let mut term = s1[p - 1].clone();
        for &l in index.components() {
            term *= stirling2(p, l as i64);
        }
        acc += apply_sign(term, (k - p) as i64);
    }
    Ok(acc)
}

/// Number of `l x m` binary matrices with exactly `k` ones and no empty row
/// or column, by inclusion-exclusion over zeroed rows and columns.
fn covering_count_2d(k: usize, l: usize, m: usize) -> ExactInteger {
    let mut acc = ExactInteger::zero();
    for h in 0..=(l + m) as i64 {
        // p zeroed rows, h - p zeroed columns
        for p in 0..=h.min(l as i64) {
            let cols_kept = m as i64 - h + p;
            if cols_kept < 0 {
                continue;
            }
            let cells = (l as i64 - p) * cols_kept;
            let term = binomial(l as u64, p) * binomial(m as u64, cols_kept) * binomial_signed(cells, k as i64);
            acc += apply_sign(term, h);
        }
    }
    acc
}

/// `(k! / (l! m!)) |C|` with `|C|` the inclusion-exclusion count of covering
/// binary matrices.
pub fn c_inclusion_exclusion(k: usize, l: usize, m: usize) -> Result<ExactInteger> {
    check_pair(k, l, m)?;
    let count = covering_count_2d(k, l, m);
    exact_div(
        factorial(k as u64) * count,
        &(factorial(l as u64) * factorial(m as u64)),
        "inclusion-exclusion",
        k,
        &[l, m],
    )
}

/// `b(k; l, m) = sum_{s,t} (-1)^(l+s+m+t) C(l,s) C(m,t) C(st,k)`
pub fn b_mobius(k: usize, l: usize, m: usize) -> Result<ExactInteger> {
    check_pair(k, l, m)?;
    b_multi(k, &MultiIndex::new(vec![l, m])?)
}

/// `c = k! b / (l! m!)` with `b` from [`b_mobius`].
pub fn c_mobius(k: usize, l: usize, m: usize) -> Result<ExactInteger> {
    let b = b_mobius(k, l, m)?;
    exact_div(
        factorial(k as u64) * b,
        &(factorial(l as u64) * factorial(m as u64)),
        "mobius",
        k,
        &[l, m],
    )
}

/// Multivariate signed binomial sum
/// `b(k; L) = sum_{R in [1,k]^n} (-1)^(sum r_i + l_i) C(prod r_i, k) prod C(l_i, r_i)`.
///
/// Terms with `r_i > l_i` vanish, so each `r_i` only runs to `l_i`.
pub fn b_multi(k: usize, index: &MultiIndex) -> Result<ExactInteger> {
    index.check_range(k)?;
    let l = index.components();
    let n = l.len();
    let mut r = vec![1usize; n];
    let mut acc = ExactInteger::zero();
    loop {
        let cells: u64 = r.iter().map(|&v| v as u64).product();
        let mut term = binomial(cells, k as i64);
        if !term.is_zero() {
            for (&li, &ri) in l.iter().zip(&r) {
                term *= binomial(li as u64, ri as i64);
            }
            let exponent: usize = l.iter().sum::<usize>() + r.iter().sum::<usize>();
            acc += apply_sign(term, exponent as i64);
        }
        if !odometer(&mut r, l, 1) {
            break;
        }
    }
    Ok(acc)
}

/// `(k! / L!) b(k; L)` with `b` from [`b_multi`].
pub fn c_multi_inversion(k: usize, index: &MultiIndex) -> Result<ExactInteger> {
    let b = b_multi(k, index)?;
    exact_div(
        factorial(k as u64) * b,
        &index.factorial(),
        "inversion",
        k,
        index.components(),
    )
}

/// `(k! / L!) sum_h (-1)^h sum_{|M| = h} C(Phi(L,M), k) prod C(l_j, m_j)`
/// with `Phi(L, M) = prod (l_i - m_i)`, the number of cells left after
/// zeroing `m_i` slices along each axis.
pub fn c_multi_inclusion_exclusion(k: usize, index: &MultiIndex) -> Result<ExactInteger> {
    index.check_range(k)?;
    let l = index.components();
    let n = l.len();
    // Every M with 0 <= m_i <= l_i is visited once; its h is sum m_i.
    let mut zeroed = vec![0usize; n];
    let mut acc = ExactInteger::zero();
    loop {
        let remaining: u64 = l.iter().zip(&zeroed).map(|(&li, &mi)| (li - mi) as u64).product();
        let mut term = binomial(remaining, k as i64);
        if !term.is_zero() {
            for (&li, &mi) in l.iter().zip(&zeroed) {
                term *= binomial(li as u64, mi as i64);
            }
            let h: usize = zeroed.iter().sum();
            acc += apply_sign(term, h as i64);
        }
        if !odometer(&mut zeroed, l, 0) {
            break;
        }
    }
    exact_div(
        factorial(k as u64) * acc,
        &index.factorial(),
        "inclusion-exclusion",
        k,
        l,
    )
}

/// Advance `digits` through the box `low..=bounds[i]`, last digit fastest.
/// Returns false after the final element.
fn odometer(digits: &mut [usize], bounds: &[usize], low: usize) -> bool {
    for i in (0..digits.len()).rev() {
        if digits[i] < bounds[i] {
            digits[i] += 1;
            return true;
        }
        digits[i] = low;
    }
    false
}
