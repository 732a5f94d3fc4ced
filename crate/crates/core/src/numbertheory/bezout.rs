/// Naturals `(a, b)` with `m*a = c*b + 1`, present iff `gcd(m, c) = 1`.
///
/// For `c > 1`, `a` is the inverse of `m` modulo `c` in `1..c`; for `c = 1`
/// the witness is `(1, m - 1)`. Returns `None` for `m = 0` or `c = 0`.
pub fn bezout_witness(m: u64, c: u64) -> Option<(u64, u64)> {
    if m == 0 || c == 0 {
        return None;
    }
    if c == 1 {
        return Some((1, m - 1));
    }
    // extended Euclid on (m mod c, c), tracking the coefficient of m
    let (mut r0, mut r1) = (i128::from(c), i128::from(m % c));
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return None;
    }
    let a = s0.rem_euclid(i128::from(c)) as u128;
    let b = (u128::from(m) * a - 1) / u128::from(c);
    Some((a as u64, u64::try_from(b).expect("b < m")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        assert_eq!(bezout_witness(3, 5), Some((2, 1)));
        assert_eq!(bezout_witness(2, 4), None);
        assert_eq!(bezout_witness(1, 7), Some((1, 0)));
        assert_eq!(bezout_witness(9, 1), Some((1, 8)));
    }

    #[test]
    fn presence_matches_gcd_on_grid() {
        for m in 1..=200u64 {
            for c in 1..=200u64 {
                match bezout_witness(m, c) {
                    Some((a, b)) => {
                        assert_eq!(m * a, c * b + 1);
                        assert!(c == 1 || (1..c).contains(&a));
                    }
                    None => assert!(m.gcd(&c) > 1),
                }
            }
        }
    }

    proptest! {
        #[test]
        fn witness_verifies_for_large_inputs(m in 1u64.., c in 1u64..) {
            match bezout_witness(m, c) {
                Some((a, b)) => prop_assert_eq!(u128::from(m) * u128::from(a), u128::from(c) * u128::from(b) + 1),
                None => prop_assert!(m.gcd(&c) > 1),
            }
        }
    }
}
