use std::cmp::Ordering;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{Model, ModelError};

/// The naturals. Witnesses are enumerated as 0, 1, 2, ...
#[derive(Clone, Copy, Debug)]
pub struct StandardModel {
    /// Samples are drawn uniformly from `0..=sample_max`.
    pub sample_max: u64,
}

impl StandardModel {
    pub fn new() -> Self {
        Self { sample_max: 1000 }
    }
}

impl Default for StandardModel {
    fn default() -> Self {
        Self::new()
    }
}

impl Model for StandardModel {
    type Elem = BigUint;

    fn name(&self) -> &'static str {
        "standard"
    }

    fn zero(&self) -> BigUint {
        BigUint::zero()
    }

    fn one(&self) -> BigUint {
        BigUint::one()
    }

    fn add(&self, a: &BigUint, b: &BigUint) -> BigUint {
        a + b
    }

    fn mul(&self, a: &BigUint, b: &BigUint) -> BigUint {
        a * b
    }

    fn compare(&self, a: &BigUint, b: &BigUint) -> Ordering {
        a.cmp(b)
    }

    fn from_natural(&self, u: &BigUint) -> BigUint {
        u.clone()
    }

    fn is_standard(&self, a: &BigUint) -> Option<BigUint> {
        Some(a.clone())
    }

    fn difference(&self, a: &BigUint, b: &BigUint) -> Option<BigUint> {
        (a <= b).then(|| b - a)
    }

    fn divide_by_natural(&self, a: &BigUint, m: &BigUint) -> Option<BigUint> {
        let (q, r) = a.div_rem(m);
        r.is_zero().then_some(q)
    }

    fn witnesses(&self) -> Box<dyn Iterator<Item = BigUint> + '_> {
        Box::new((0u64..).map(BigUint::from))
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> BigUint {
        BigUint::from(rng.gen_range(0..=self.sample_max))
    }

    fn parse_element(&self, text: &str) -> Result<BigUint, ModelError> {
        text.trim()
            .parse()
            .map_err(|e: num_bigint::ParseBigIntError| ModelError::BadElement {
                model: "standard",
                text: text.to_string(),
                reason: e.to_string(),
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::below_numeral;

    #[test]
    fn basics() {
        let m = StandardModel::new();
        let seven = BigUint::from(7u8);
        assert_eq!(m.compare(&seven, &seven), Ordering::Equal);
        assert_eq!(m.is_standard(&BigUint::zero()), Some(BigUint::zero()));
        assert_eq!(below_numeral(&m, &seven, 5).unwrap(), None);
        assert_eq!(
            below_numeral(&m, &BigUint::from(3u8), 5).unwrap(),
            Some(BigUint::from(3u8))
        );
        assert!(below_numeral(&m, &seven, 0).is_err());
        assert_eq!(m.difference(&seven, &BigUint::from(3u8)), None);
        assert_eq!(m.parse_element(" 42 ").unwrap(), BigUint::from(42u8));
        assert!(m.parse_element("-1").is_err());
    }
}
