use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::NtError;

pub(crate) fn as_string<T: fmt::Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// An exact rational in lowest terms with positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: BigInt, den: BigInt) -> Result<Self, NtError> {
        if den.is_zero() {
            return Err(NtError::Domain("zero denominator".into()));
        }
        Ok(Self(BigRational::new(num, den)))
    }

    pub fn from_u64s(num: u64, den: u64) -> Result<Self, NtError> {
        Self::new(num.into(), den.into())
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.denom().is_one()
    }
}

impl std::ops::Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational(self.0 + rhs.0)
    }
}

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |a, b| a + b)
    }
}

/// `num/den`, or just `num` when the denominator is 1.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        as_string(self, s)
    }
}

pub fn is_integer(q: &Rational) -> bool {
    q.is_integer()
}

/// `sum_{i=0}^{k} m_i / (n+i)`, for `1 <= m_i <= n+i` with `gcd(m_i, n+i) = 1`.
pub fn fraction_sum(n: u64, k: u64, m: &[u64]) -> Result<Rational, NtError> {
    if n == 0 || k == 0 {
        return Err(NtError::Domain(format!("need n >= 1 and k >= 1, got n = {n}, k = {k}")));
    }
    if m.len() as u64 != k + 1 {
        return Err(NtError::Domain(format!(
            "expected {} numerators, got {}",
            k + 1,
            m.len()
        )));
    }
    let mut total = Rational::zero();
    for (i, &mi) in m.iter().enumerate() {
        let d = n
            .checked_add(i as u64)
            .ok_or_else(|| NtError::Domain("n + k overflows".into()))?;
        if mi == 0 || mi > d {
            return Err(NtError::Precondition {
                index: i,
                reason: format!("m_{i} = {mi} is outside 1..={d}"),
            });
        }
        if mi.gcd(&d) != 1 {
            return Err(NtError::Precondition {
                index: i,
                reason: format!("m_{i} = {mi} is not coprime to {d}"),
            });
        }
        total = total + Rational::from_u64s(mi, d)?;
    }
    Ok(total)
}

/// `sum_{i=0}^{k} 1 / (m + i*n)`.
pub fn nagell_sum(m: u64, n: u64, k: u64) -> Result<Rational, NtError> {
    if m == 0 || n == 0 || k == 0 {
        return Err(NtError::Domain(format!(
            "need m, n, k >= 1, got m = {m}, n = {n}, k = {k}"
        )));
    }
    (0..=k)
        .map(|i| {
            let d = BigUint::from(m) + BigUint::from(n) * BigUint::from(i);
            Rational::new(BigInt::one(), BigInt::from(d))
        })
        .sum()
}

impl FromIterator<Rational> for Result<Rational, NtError> {
    fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        Ok(iter.into_iter().sum())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: u64, d: u64) -> Rational {
        Rational::from_u64s(n, d).unwrap()
    }

    #[test]
    fn display_and_integrality() {
        assert_eq!(q(6, 4).to_string(), "3/2");
        assert_eq!(q(8, 4).to_string(), "2");
        assert!(q(8, 4).is_integer());
        assert!(!is_integer(&q(1, 3)));
        assert!(is_integer(&q(4, 1)));
        assert!(is_integer(&Rational::zero()));
        assert!(Rational::from_u64s(1, 0).is_err());
        assert_eq!(serde_json::to_string(&q(13, 12)).unwrap(), "\"13/12\"");
    }

    #[test]
    fn fraction_sum_examples() {
        assert_eq!(fraction_sum(2, 2, &[1, 1, 1]).unwrap(), q(13, 12));
        assert_eq!(fraction_sum(1, 1, &[1, 1]).unwrap(), q(3, 2));
        assert_eq!(fraction_sum(3, 1, &[2, 3]).unwrap(), q(17, 12));
        match fraction_sum(2, 1, &[2, 1]) {
            Err(NtError::Precondition { index, .. }) => assert_eq!(index, 0),
            other => panic!("expected precondition error, got {other:?}"),
        }
        assert!(matches!(
            fraction_sum(2, 1, &[1, 4]),
            Err(NtError::Precondition { index: 1, .. })
        ));
        assert!(matches!(
            fraction_sum(2, 1, &[0, 1]),
            Err(NtError::Precondition { index: 0, .. })
        ));
        assert!(fraction_sum(2, 2, &[1, 1]).is_err());
        assert!(fraction_sum(0, 1, &[1, 1]).is_err());
    }

    #[test]
    fn nagell_sum_examples() {
        assert_eq!(nagell_sum(1, 1, 1).unwrap(), q(3, 2));
        assert_eq!(nagell_sum(1, 2, 2).unwrap(), q(23, 15));
        assert_eq!(nagell_sum(2, 2, 1).unwrap(), q(3, 4));
        assert_eq!(nagell_sum(2, 1, 2).unwrap(), q(13, 12));
        assert!(nagell_sum(0, 1, 1).is_err());
    }
}
