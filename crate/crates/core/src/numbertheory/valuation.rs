use num_bigint::BigUint;
use num_integer::Integer;
use serde::Serialize;

use super::NtError;

/// Largest `a` with `2^a | n`.
pub fn v2(n: u64) -> Result<u32, NtError> {
    if n == 0 {
        return Err(NtError::Domain("v2 is undefined at 0".into()));
    }
    Ok(n.trailing_zeros())
}

fn v2_big(n: &BigUint) -> u32 {
    n.trailing_zeros().expect("nonzero") as u32
}

fn check_nk(n: u64, k: u64) -> Result<(), NtError> {
    if n == 0 || k == 0 {
        return Err(NtError::Domain(format!("need n >= 1 and k >= 1, got n = {n}, k = {k}")));
    }
    n.checked_add(k)
        .map(|_| ())
        .ok_or_else(|| NtError::Domain("n + k overflows".into()))
}

/// `lcm(n, n+1, ..., n+k)`.
pub fn lcm_range(n: u64, k: u64) -> Result<BigUint, NtError> {
    check_nk(n, k)?;
    Ok((n..=n + k).fold(BigUint::from(1u8), |acc, d| acc.lcm(&BigUint::from(d))))
}

/// The maximal 2-adic valuation over `n..=n+k` and the offset attaining it,
/// or `None` if two offsets tie.
pub fn unique_max_valuation(n: u64, k: u64) -> Result<Option<(u32, u64)>, NtError> {
    check_nk(n, k)?;
    let mut best = (0u32, 0u64);
    let mut ties = 0;
    for i in 0..=k {
        let v = (n + i).trailing_zeros();
        if i == 0 || v > best.0 {
            best = (v, i);
            ties = 0;
        } else if v == best.0 {
            ties += 1;
        }
    }
    Ok((ties == 0).then_some(best))
}

/// Witness that `sum m_i/(n+i)` is not an integer for coprime `m_i`:
/// exactly one `n + unique_index` carries the top power `2^a`, so scaling
/// by the lcm leaves an odd term beside even ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KurschakCertificate {
    pub n: u64,
    pub k: u64,
    pub a: u32,
    pub unique_index: u64,
    #[serde(serialize_with = "crate::numbertheory::rational::as_string")]
    pub lcm: BigUint,
    /// `v2(lcm / (n+i))` for `i = 0..=k`: zero at `unique_index`, positive elsewhere.
    pub valuations: Vec<u32>,
}

impl KurschakCertificate {
    /// Re-derives every invariant from scratch.
    pub fn verify(&self) -> bool {
        let k = self.k;
        let vals: Vec<u32> = (0..=k).map(|i| (self.n + i).trailing_zeros()).collect();
        let top_ok = vals[self.unique_index as usize] == self.a
            && vals
                .iter()
                .enumerate()
                .all(|(i, &v)| i as u64 == self.unique_index || v < self.a);
        let lcm_ok = self.lcm == lcm_range(self.n, k).expect("validated") && v2_big(&self.lcm) == self.a;
        let cof_ok = self.valuations.len() as u64 == k + 1
            && self.valuations.iter().enumerate().all(|(i, &v)| {
                let d = BigUint::from(self.n + i as u64);
                let (q, r) = self.lcm.div_rem(&d);
                r == BigUint::default()
                    && v == v2_big(&q)
                    && if i as u64 == self.unique_index { v == 0 } else { v >= 1 }
            });
        top_ok && lcm_ok && cof_ok
    }
}

/// Builds the certificate for `n..=n+k`.
///
/// Panics if the maximal valuation is attained twice: among two or more
/// consecutive integers that cannot happen, so a tie is a defect.
pub fn kurschak_certificate(n: u64, k: u64) -> Result<KurschakCertificate, NtError> {
    let (a, unique_index) = unique_max_valuation(n, k)?
        .unwrap_or_else(|| panic!("maximal 2-adic valuation over {n}..={} is not unique", n + k));
    let lcm = lcm_range(n, k)?;
    let valuations = (0..=k).map(|i| v2_big(&(&lcm / BigUint::from(n + i)))).collect();
    Ok(KurschakCertificate {
        n,
        k,
        a,
        unique_index,
        lcm,
        valuations,
    })
}
