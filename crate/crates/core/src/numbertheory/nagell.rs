use num_bigint::BigUint;

use super::NtError;

fn check_positive(m: u64, n: u64, k: u64) -> Result<(), NtError> {
    if m == 0 || n == 0 || k == 0 {
        return Err(NtError::Domain(format!(
            "need m, n, k >= 1, got m = {m}, n = {n}, k = {k}"
        )));
    }
    Ok(())
}

/// `m, m+n, ..., m+k*n`.
fn terms(m: u64, n: u64, k: u64) -> Vec<BigUint> {
    (0..=k).map(|j| BigUint::from(m) + BigUint::from(n) * j).collect()
}

/// `sum_{i=0}^{k} prod_{j != i} e_j`.
fn cofactor_sum(e: &[BigUint]) -> BigUint {
    (0..e.len())
        .map(|i| {
            e.iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, x)| x)
                .product::<BigUint>()
        })
        .sum()
}

/// Both sides of the small-`m` bound: the cofactor sum and `prod_j e_j`.
pub fn nagell_small_m_sides(m: u64, n: u64, k: u64) -> Result<(BigUint, BigUint), NtError> {
    check_positive(m, n, k)?;
    if m <= k {
        return Err(NtError::Bound(format!(
            "the small-m bound needs m > k, got m = {m}, k = {k}"
        )));
    }
    let e = terms(m, n, k);
    Ok((cofactor_sum(&e), e.iter().product()))
}

/// `sum_i prod_{j != i}(m+jn) < m * prod_{j=1}^{k}(m+jn)`, for `m > k`.
pub fn nagell_small_m_bound(m: u64, n: u64, k: u64) -> Result<bool, NtError> {
    let (lhs, rhs) = nagell_small_m_sides(m, n, k)?;
    Ok(lhs < rhs)
}

/// Both sides of the general bound: the cofactor sum and
/// `prod_{j=1}^{k}(m+jn) + k*m*prod_{j=2}^{k}(m+jn)`.
pub fn nagell_major_sides(m: u64, n: u64, k: u64) -> Result<(BigUint, BigUint), NtError> {
    check_positive(m, n, k)?;
    let e = terms(m, n, k);
    let tail: BigUint = e[1..].iter().product();
    let tail2: BigUint = e[2..].iter().product();
    Ok((cofactor_sum(&e), tail + BigUint::from(k) * m * tail2))
}

/// True iff the general bound holds and is an equality exactly when `k = 1`.
pub fn nagell_major_bound(m: u64, n: u64, k: u64) -> Result<bool, NtError> {
    let (lhs, rhs) = nagell_major_sides(m, n, k)?;
    Ok(lhs <= rhs && ((lhs == rhs) == (k == 1)))
}
