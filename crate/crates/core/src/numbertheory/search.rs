use num_bigint::BigUint;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{nagell_sum, NtError, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    Exhaustive,
    Sampled,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PhiSearchConfig {
    /// Enumerate every admissible m-vector when the space is at most `cap`.
    /// When false, every `n` whose space exceeds `samples` is sampled.
    pub exhaustive_m: bool,
    pub cap: u64,
    /// Random m-vectors drawn per `n` when sampling.
    pub samples: u64,
    pub seed: u64,
}

impl Default for PhiSearchConfig {
    fn default() -> Self {
        Self {
            exhaustive_m: true,
            cap: 10_000_000,
            samples: 1000,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiSearchParams {
    pub k: u64,
    pub n_max: u64,
    #[serde(flatten)]
    pub config: PhiSearchConfig,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiCounterexample {
    pub n: u64,
    pub m: Vec<u64>,
    #[serde(serialize_with = "super::rational::as_string")]
    pub p: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiSearchReport {
    pub params: PhiSearchParams,
    /// `sampled` if any `n` was sampled rather than enumerated.
    pub mode: SearchMode,
    pub instances_checked: u64,
    pub sampled_n: u64,
    pub counterexample: Option<PhiCounterexample>,
}

/// The denominators `n, ..., n+k` with their full product and the
/// cofactors `prod_{j != i} (n+j)`, in machine words when they fit.
struct Denominators {
    n: u64,
    small: Option<(Vec<u128>, u128)>,
}

impl Denominators {
    fn new(n: u64, k: u64) -> Self {
        let ds: Vec<u128> = (0..=k).map(|i| u128::from(n) + u128::from(i)).collect();
        let small = (|| {
            let total = ds.iter().try_fold(1u128, |acc, &d| acc.checked_mul(d))?;
            let cof = ds.iter().map(|&d| total / d).collect();
            Some((cof, total))
        })();
        Self { n, small }
    }

    /// `p` with `sum_i m_i * prod_{j != i}(n+j) = p * prod_j (n+j)`, if any.
    fn quotient(&self, m: &[u64]) -> Option<BigUint> {
        if let Some((cof, total)) = &self.small {
            let num = m
                .iter()
                .zip(cof)
                .try_fold(0u128, |acc, (&mi, &c)| acc.checked_add(c.checked_mul(u128::from(mi))?));
            if let Some(num) = num {
                return (num % total == 0).then(|| BigUint::from(num / total));
            }
        }
        let ds: Vec<BigUint> = (0..m.len() as u64).map(|i| BigUint::from(self.n) + i).collect();
        let total: BigUint = ds.iter().product();
        let num: BigUint = m.iter().zip(&ds).map(|(&mi, d)| &total / d * mi).sum();
        let (q, r) = num.div_rem(&total);
        (r == BigUint::default()).then_some(q)
    }
}

/// The divisibility test used by [`search_phi_counterexample`]: `Some(p)`
/// exactly when `sum m_i / (n+i)` equals the integer `p`.
pub fn phi_instance_quotient(n: u64, m: &[u64]) -> Option<BigUint> {
    assert!(!m.is_empty(), "need at least one numerator");
    Denominators::new(n, m.len() as u64 - 1).quotient(m)
}

/// Numerators in `1..=d` coprime to `d`.
fn admissible(d: u64) -> Vec<u64> {
    (1..=d).filter(|m| m.gcd(&d) == 1).collect()
}

struct PerN {
    instances: u64,
    sampled: bool,
    hit: Option<PhiCounterexample>,
}

fn search_one_n(n: u64, k: u64, config: &PhiSearchConfig) -> PerN {
    let choices: Vec<Vec<u64>> = (0..=k).map(|i| admissible(n + i)).collect();
    let space = choices.iter().try_fold(1u64, |acc, c| acc.checked_mul(c.len() as u64));
    let limit = if config.exhaustive_m {
        config.cap.max(config.samples)
    } else {
        config.samples
    };
    let den = Denominators::new(n, k);
    let mut m: Vec<u64> = choices.iter().map(|c| c[0]).collect();
    let found = |m: &[u64]| den.quotient(m).map(|p| PhiCounterexample { n, m: m.to_vec(), p });

    match space {
        Some(space) if space <= limit => {
            let mut idx = vec![0usize; choices.len()];
            let mut instances = 0;
            loop {
                instances += 1;
                if let Some(hit) = found(&m) {
                    return PerN {
                        instances,
                        sampled: false,
                        hit: Some(hit),
                    };
                }
                let mut pos = 0;
                loop {
                    if pos == idx.len() {
                        return PerN {
                            instances,
                            sampled: false,
                            hit: None,
                        };
                    }
                    idx[pos] += 1;
                    if idx[pos] < choices[pos].len() {
                        m[pos] = choices[pos][idx[pos]];
                        break;
                    }
                    idx[pos] = 0;
                    m[pos] = choices[pos][0];
                    pos += 1;
                }
            }
        }
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            rng.set_stream(n);
            for s in 0..config.samples {
                for (mi, c) in m.iter_mut().zip(&choices) {
                    *mi = c[rng.gen_range(0..c.len())];
                }
                if let Some(hit) = found(&m) {
                    return PerN {
                        instances: s + 1,
                        sampled: true,
                        hit: Some(hit),
                    };
                }
            }
            PerN {
                instances: config.samples,
                sampled: true,
                hit: None,
            }
        }
    }
}

/// Looks for `n <= n_max` and coprime numerators `1 <= m_i <= n+i` whose
/// fraction sum is an integer.
///
/// Each `n` is handled independently and stops at its own first hit; the
/// reported counterexample is the one with the least `n`, and the instance
/// count covers every `n`, so the report does not depend on the thread pool.
pub fn search_phi_counterexample(k: u64, n_max: u64, config: &PhiSearchConfig) -> Result<PhiSearchReport, NtError> {
    if k == 0 {
        return Err(NtError::Domain("k must be at least 1".into()));
    }
    if config.samples == 0 {
        return Err(NtError::Domain("samples must be at least 1".into()));
    }
    n_max
        .checked_add(k)
        .ok_or_else(|| NtError::Domain("n_max + k overflows".into()))?;
    let per_n: Vec<PerN> = (1..=n_max)
        .into_par_iter()
        .map(|n| search_one_n(n, k, config))
        .collect();
    let sampled_n = per_n.iter().filter(|r| r.sampled).count() as u64;
    Ok(PhiSearchReport {
        params: PhiSearchParams {
            k,
            n_max,
            config: *config,
        },
        mode: if sampled_n == 0 {
            SearchMode::Exhaustive
        } else {
            SearchMode::Sampled
        },
        instances_checked: per_n.iter().map(|r| r.instances).sum(),
        sampled_n,
        counterexample: per_n.into_iter().find_map(|r| r.hit),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NagellSearchParams {
    pub k: u64,
    pub m_max: u64,
    pub n_max: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NagellCounterexample {
    pub m: u64,
    pub n: u64,
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NagellSearchReport {
    pub params: NagellSearchParams,
    pub mode: SearchMode,
    pub instances_checked: u64,
    pub counterexample: Option<NagellCounterexample>,
}

/// Checks every `(m, n)` in `[1, m_max] x [1, n_max]`; the first hit in
/// lexicographic order is reported.
pub fn search_nagell_counterexample(k: u64, m_max: u64, n_max: u64) -> Result<NagellSearchReport, NtError> {
    if k == 0 {
        return Err(NtError::Domain("k must be at least 1".into()));
    }
    let rows: Vec<Option<NagellCounterexample>> = (1..=m_max)
        .into_par_iter()
        .map(|m| {
            (1..=n_max).find_map(|n| {
                let value = nagell_sum(m, n, k).expect("positive arguments");
                value.is_integer().then_some(NagellCounterexample { m, n, value })
            })
        })
        .collect();
    Ok(NagellSearchReport {
        params: NagellSearchParams { k, m_max, n_max },
        mode: SearchMode::Exhaustive,
        instances_checked: m_max
            .checked_mul(n_max)
            .ok_or_else(|| NtError::Domain("grid too large".into()))?,
        counterexample: rows.into_iter().flatten().next(),
    })
}
