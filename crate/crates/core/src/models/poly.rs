use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{Model, ModelError};

/// A nonnegative element of `Z[x]`: zero, or a polynomial whose leading
/// coefficient is positive. `coeffs[i]` is the coefficient of `x^i`;
/// trailing zeros are stripped, so zero has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct PolyElement {
    coeffs: Vec<BigInt>,
}

fn strip(mut coeffs: Vec<BigInt>) -> Vec<BigInt> {
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    coeffs
}

fn raw_add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o += s;
    }
    strip(out)
}

fn raw_sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), BigInt::zero());
    }
    for (o, s) in out.iter_mut().zip(b) {
        *o -= s;
    }
    strip(out)
}

fn raw_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    strip(out)
}

fn leading_sign(coeffs: &[BigInt]) -> Sign {
    coeffs.last().map_or(Sign::NoSign, BigInt::sign)
}

impl PolyElement {
    /// Fails unless the stripped coefficient list is zero or has a positive
    /// leading coefficient.
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self, ModelError> {
        let coeffs = strip(coeffs);
        if leading_sign(&coeffs) == Sign::Minus {
            return Err(ModelError::BadElement {
                model: "poly",
                text: Self { coeffs }.to_string(),
                reason: "leading coefficient is negative, so the element is below 0".into(),
            });
        }
        Ok(Self { coeffs })
    }

    pub fn from_i64s(coeffs: &[i64]) -> Result<Self, ModelError> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(u: &BigUint) -> Self {
        Self {
            coeffs: strip(vec![BigInt::from(u.clone())]),
        }
    }

    /// The indeterminate `x`, larger than every constant.
    pub fn x() -> Self {
        Self {
            coeffs: vec![BigInt::zero(), BigInt::from(1)],
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Degree, with `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn in_cone(coeffs: Vec<BigInt>) -> Option<Self> {
        (leading_sign(&coeffs) != Sign::Minus).then_some(Self { coeffs })
    }
}

impl fmt::Display for PolyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("[0]");
        }
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

/// `Some(q)` with `p = m * q` exactly when every coefficient of `p` is a
/// multiple of `m`. `q` is in the cone whenever `p` is.
pub fn divides_in_poly(m: &BigUint, p: &PolyElement) -> Option<PolyElement> {
    assert!(!m.is_zero(), "divides_in_poly needs m >= 1");
    let m = BigInt::from(m.clone());
    let mut q = Vec::with_capacity(p.coeffs.len());
    for c in &p.coeffs {
        let (quot, rem) = c.div_rem(&m);
        if !rem.is_zero() {
            return None;
        }
        q.push(quot);
    }
    Some(PolyElement { coeffs: q })
}

/// The positive cone of `Z[x]` with `p < q` iff `q - p` has a positive
/// leading coefficient.
#[derive(Clone, Copy, Debug)]
pub struct PolyModel {
    /// Sampled elements have degree at most this.
    pub sample_degree: usize,
    /// Sampled coefficients lie in `-sample_coeff..=sample_coeff`.
    pub sample_coeff: i64,
}

impl PolyModel {
    pub fn new() -> Self {
        Self {
            sample_degree: 3,
            sample_coeff: 10,
        }
    }
}

impl Default for PolyModel {
    fn default() -> Self {
        Self::new()
    }
}

impl Model for PolyModel {
    type Elem = PolyElement;

    fn name(&self) -> &'static str {
        "poly"
    }

    fn zero(&self) -> PolyElement {
        PolyElement::zero()
    }

    fn one(&self) -> PolyElement {
        PolyElement {
            coeffs: vec![BigInt::from(1)],
        }
    }

    fn add(&self, a: &PolyElement, b: &PolyElement) -> PolyElement {
        PolyElement::in_cone(raw_add(&a.coeffs, &b.coeffs)).expect("cone is closed under +")
    }

    fn mul(&self, a: &PolyElement, b: &PolyElement) -> PolyElement {
        PolyElement::in_cone(raw_mul(&a.coeffs, &b.coeffs)).expect("cone is closed under *")
    }

    fn compare(&self, a: &PolyElement, b: &PolyElement) -> Ordering {
        match leading_sign(&raw_sub(&b.coeffs, &a.coeffs)) {
            Sign::Plus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Minus => Ordering::Greater,
        }
    }

    fn from_natural(&self, u: &BigUint) -> PolyElement {
        PolyElement::constant(u)
    }

    fn is_standard(&self, a: &PolyElement) -> Option<BigUint> {
        match a.coeffs.as_slice() {
            [] => Some(BigUint::zero()),
            [c] => c.to_biguint(),
            _ => None,
        }
    }

    fn difference(&self, a: &PolyElement, b: &PolyElement) -> Option<PolyElement> {
        PolyElement::in_cone(raw_sub(&b.coeffs, &a.coeffs))
    }

    fn divide_by_natural(&self, a: &PolyElement, m: &BigUint) -> Option<PolyElement> {
        divides_in_poly(m, a)
    }

    fn witnesses(&self) -> Box<dyn Iterator<Item = PolyElement> + '_> {
        Box::new(GradedCone::default())
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> PolyElement {
        if rng.gen_ratio(1, 10) {
            return PolyElement::zero();
        }
        let degree = rng.gen_range(0..=self.sample_degree);
        let bound = self.sample_coeff;
        let mut coeffs: Vec<BigInt> = (0..degree)
            .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
            .collect();
        coeffs.push(BigInt::from(rng.gen_range(1..=bound)));
        PolyElement { coeffs }
    }

    fn parse_element(&self, text: &str) -> Result<PolyElement, ModelError> {
        let bad = |reason: &str| ModelError::BadElement {
            model: "poly",
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let inner = text
            .trim()
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| bad("expected `[c0, c1, ..., cd]`"))?;
        let coeffs = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|c| c.trim().parse::<BigInt>().map_err(|e| bad(&e.to_string())))
                .collect::<Result<Vec<_>, _>>()?
        };
        PolyElement::new(coeffs)
    }
}

/// Enumerates the cone in grades `degree + max|coeff|`: zero first, then
/// each grade ordered by degree, leading coefficient, and the lower
/// coefficients from the highest index down, each ascending.
#[derive(Default)]
struct GradedCone {
    grade: u64,
    pending: VecDeque<PolyElement>,
    started: bool,
}

impl GradedCone {
    fn fill(&mut self) {
        self.grade += 1;
        let g = self.grade as i64;
        for degree in 0..g as usize {
            let h = g - degree as i64;
            let lo = |i: usize| if i == 0 { 1 } else { -h };
            let mut digits: Vec<i64> = (0..=degree).map(lo).collect();
            'odometer: loop {
                if digits.iter().any(|c| c.abs() == h) {
                    let coeffs = digits.iter().rev().map(|&c| BigInt::from(c)).collect();
                    self.pending.push_back(PolyElement { coeffs });
                }
                for i in (0..=degree).rev() {
                    if digits[i] < h {
                        digits[i] += 1;
                        for (j, d) in digits.iter_mut().enumerate().skip(i + 1) {
                            *d = lo(j);
                        }
                        continue 'odometer;
                    }
                }
                break;
            }
        }
    }
}

impl Iterator for GradedCone {
    type Item = PolyElement;

    fn next(&mut self) -> Option<PolyElement> {
        if !self.started {
            self.started = true;
            return Some(PolyElement::zero());
        }
        while self.pending.is_empty() {
            self.fill();
        }
        self.pending.pop_front()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::below_numeral;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use std::collections::HashSet;

    fn p(c: &[i64]) -> PolyElement {
        PolyElement::from_i64s(c).unwrap()
    }

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn construction_and_text() {
        assert!(PolyElement::from_i64s(&[1, -1]).is_err());
        assert_eq!(p(&[3, 0, 0]), p(&[3]));
        assert_eq!(p(&[0, 0]), PolyElement::zero());
        let m = PolyModel::new();
        assert_eq!(m.parse_element("[0,1]").unwrap(), PolyElement::x());
        assert_eq!(m.parse_element(" [ 5 , -2 , 1 ] ").unwrap(), p(&[5, -2, 1]));
        assert_eq!(m.parse_element("[]").unwrap(), PolyElement::zero());
        assert!(m.parse_element("[0,-1]").is_err());
        assert!(m.parse_element("0,1").is_err());
        assert!(m.parse_element("[a]").is_err());
        assert_eq!(p(&[5, -2, 1]).to_string(), "[5, -2, 1]");
        assert_eq!(PolyElement::zero().to_string(), "[0]");
    }

    #[test]
    fn compare_examples() {
        let m = PolyModel::new();
        assert_eq!(
            m.compare(&PolyElement::x(), &m.from_natural(&big(5))),
            Ordering::Greater
        );
        assert_eq!(m.compare(&p(&[0, 1]), &p(&[1, 1])), Ordering::Less);
        assert_eq!(m.compare(&p(&[7]), &p(&[7])), Ordering::Equal);
    }

    #[test]
    fn shifted_product_at_x() {
        let m = PolyModel::new();
        let a = m.add(&PolyElement::x(), &p(&[1]));
        let b = m.add(&PolyElement::x(), &p(&[2]));
        assert_eq!(m.mul(&a, &b), p(&[2, 3, 1]));
    }

    #[test]
    fn divisibility_examples() {
        assert_eq!(divides_in_poly(&big(2), &p(&[4, 6])), Some(p(&[2, 3])));
        assert_eq!(divides_in_poly(&big(2), &p(&[0, 1])), None);
        assert_eq!(divides_in_poly(&big(2), &p(&[1, 1])), None);
        assert_eq!(
            divides_in_poly(&big(3), &PolyElement::zero()),
            Some(PolyElement::zero())
        );
    }

    /// Brute force over candidate quotients with degree <= deg p and
    /// coefficients bounded by the largest coefficient of p.
    fn divides_by_search(m: i64, coeffs: &[i64]) -> bool {
        let bound = coeffs.iter().map(|c| c.abs()).max().unwrap_or(0);
        let len = coeffs.len();
        if len == 0 {
            return true;
        }
        let mut q = vec![-bound; len];
        loop {
            if q.iter().zip(coeffs).all(|(qi, ci)| m * qi == *ci) {
                return true;
            }
            let mut i = 0;
            loop {
                if i == len {
                    return false;
                }
                if q[i] < bound {
                    q[i] += 1;
                    break;
                }
                q[i] = -bound;
                i += 1;
            }
        }
    }

    #[test]
    fn divisibility_agrees_with_search() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let model = PolyModel {
            sample_degree: 2,
            sample_coeff: 6,
        };
        for _ in 0..300 {
            let e = model.sample(&mut rng);
            let coeffs: Vec<i64> = e.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect();
            for m in 1..=4u64 {
                assert_eq!(
                    divides_in_poly(&big(m), &e).is_some(),
                    divides_by_search(m as i64, &coeffs),
                    "m = {m}, p = {e}"
                );
            }
        }
    }

    fn all_small(max_degree: usize, bound: i64) -> Vec<PolyElement> {
        let mut out = vec![PolyElement::zero()];
        for degree in 0..=max_degree {
            let mut digits = vec![-bound; degree + 1];
            loop {
                if let Ok(e) = PolyElement::new(digits.iter().map(|&c| BigInt::from(c)).collect()) {
                    if e.degree() == Some(degree) {
                        out.push(e);
                    }
                }
                let mut i = 0;
                while i <= degree && digits[i] == bound {
                    digits[i] = -bound;
                    i += 1;
                }
                if i > degree {
                    break;
                }
                digits[i] += 1;
            }
        }
        out
    }

    #[test]
    fn no_element_strictly_between_zero_and_one() {
        let m = PolyModel::new();
        let zero = m.zero();
        let one = m.one();
        let elems = all_small(3, 10);
        assert!(elems.len() > 90_000);
        for e in &elems {
            let strictly_between = m.compare(&zero, e) == Ordering::Less && m.compare(e, &one) == Ordering::Less;
            assert!(!strictly_between, "{e} lies strictly between 0 and 1");
        }
    }

    #[test]
    fn below_numeral_matches_constancy() {
        let m = PolyModel::new();
        for e in all_small(2, 4) {
            for k in 1..12u64 {
                let expected = match e.coeffs() {
                    [] => Some(big(0)),
                    [c] if *c < BigInt::from(k) => Some(c.to_biguint().unwrap()),
                    _ => None,
                };
                assert_eq!(below_numeral(&m, &e, k).unwrap(), expected, "{e} vs {k}");
            }
        }
        assert_eq!(below_numeral(&m, &PolyElement::x(), 1000).unwrap(), None);
        assert_eq!(below_numeral(&m, &p(&[3]), 5).unwrap(), Some(big(3)));
    }

    #[test]
    fn is_standard_examples() {
        let m = PolyModel::new();
        assert_eq!(m.is_standard(&p(&[5])), Some(big(5)));
        assert_eq!(m.is_standard(&p(&[0, 2])), None);
        assert_eq!(m.is_standard(&PolyElement::zero()), Some(big(0)));
    }

    #[test]
    fn witness_stream_is_graded_and_duplicate_free() {
        let m = PolyModel::new();
        let first: Vec<String> = m.witnesses().take(8).map(|e| e.to_string()).collect();
        assert_eq!(
            first,
            ["[0]", "[1]", "[2]", "[-1, 1]", "[0, 1]", "[1, 1]", "[3]", "[-2, 1]"]
        );
        let many: Vec<PolyElement> = m.witnesses().take(20_000).collect();
        let distinct: HashSet<&PolyElement> = many.iter().collect();
        assert_eq!(distinct.len(), many.len());
        // everything of degree <= 2 with |coeff| <= 2 shows up early
        for e in all_small(2, 2) {
            assert!(many.contains(&e), "{e} missing from the witness prefix");
        }
    }

    fn arb_elem() -> impl Strategy<Value = PolyElement> {
        (prop::collection::vec(-10i64..=10, 0..4), 1i64..=10, any::<bool>()).prop_map(|(mut low, lead, zero)| {
            if zero {
                return PolyElement::zero();
            }
            low.push(lead);
            PolyElement::from_i64s(&low).unwrap()
        })
    }

    proptest! {
        #[test]
        fn cone_is_closed(a in arb_elem(), b in arb_elem()) {
            let m = PolyModel::new();
            prop_assert!(leading_sign(m.add(&a, &b).coeffs()) != Sign::Minus);
            prop_assert!(leading_sign(m.mul(&a, &b).coeffs()) != Sign::Minus);
        }

        #[test]
        fn trichotomy(a in arb_elem(), b in arb_elem()) {
            let m = PolyModel::new();
            prop_assert_eq!(m.compare(&a, &b), m.compare(&b, &a).reverse());
            prop_assert_eq!(m.compare(&a, &b) == Ordering::Equal, a == b);
        }

        #[test]
        fn difference_is_exact(a in arb_elem(), b in arb_elem()) {
            let m = PolyModel::new();
            match m.difference(&a, &b) {
                Some(d) => prop_assert_eq!(m.add(&a, &d), b),
                None => prop_assert_eq!(m.compare(&a, &b), Ordering::Greater),
            }
        }
    }
}
