use num_bigint::BigUint;
use num_integer::Integer;
use paminus::generators::{expand_shifted_product, phi};
use paminus::logic::Formula;
use paminus::models::{eval_formula, Assignment, EvalBudget, StandardModel, TruthValue3};
use paminus::numbertheory::{
    bezout_witness, fraction_sum, kurschak_certificate, phi_instance_quotient, search_phi_counterexample,
    PhiSearchConfig,
};

#[test]
fn certificate_parity_for_every_coprime_vector() {
    for n in 1..=12u64 {
        for k in 1..=3u64 {
            let cert = kurschak_certificate(n, k).unwrap();
            assert!(cert.verify());
            // sum_i m_i * lcm/(n+i) is odd whenever m_{i*} is odd
            let i_star = cert.unique_index as usize;
            let d_star = n + i_star as u64;
            for m_star in (1..=d_star).filter(|m| m.gcd(&d_star) == 1) {
                let mut m: Vec<u64> = vec![1; k as usize + 1];
                m[i_star] = m_star;
                let total: BigUint = m
                    .iter()
                    .enumerate()
                    .map(|(i, &mi)| &cert.lcm / BigUint::from(n + i as u64) * mi)
                    .sum();
                // n+i* is even, so m_{i*} is odd, and lcm/(n+i*) is odd
                assert!(d_star.is_multiple_of(2));
                assert!(total.bit(0));
            }
        }
    }
}

#[test]
fn search_divisibility_matches_exact_sums() {
    for n in 1..=30u64 {
        for m0 in (1..=n).filter(|m| m.gcd(&n) == 1) {
            for m1 in (1..=n + 1).filter(|m| m.gcd(&(n + 1)) == 1) {
                let q = fraction_sum(n, 1, &[m0, m1]).unwrap();
                assert_eq!(phi_instance_quotient(n, &[m0, m1]).is_some(), q.is_integer());
            }
        }
    }
    assert!(search_phi_counterexample(1, 30, &PhiSearchConfig::default())
        .unwrap()
        .counterexample
        .is_none());
}

/// The matrix of phi_1 is true in the naturals at every assignment with
/// coprime numerators, checked through the evaluator.
#[test]
fn phi_matrix_holds_in_naturals() {
    let std = StandardModel::new();
    let f = phi(1).unwrap();
    let (vars, matrix) = f.universal_prefix();
    let names: Vec<&str> = vars.iter().map(|v| v.name()).collect();
    assert_eq!(names, ["n", "m_0", "m_1", "p"]);
    for n in 1..=6u64 {
        for m0 in 1..=n + 1 {
            for m1 in 1..=n + 2 {
                for p in 0..=3u64 {
                    let asg = Assignment::new()
                        .with("n", BigUint::from(n))
                        .with("m_0", BigUint::from(m0))
                        .with("m_1", BigUint::from(m1))
                        .with("p", BigUint::from(p));
                    let v = eval_formula(&std, &asg, matrix, EvalBudget::default()).unwrap();
                    assert_eq!(v, TruthValue3::True, "n={n} m=({m0},{m1}) p={p}");
                }
            }
        }
    }
}

#[test]
fn coprime_disjunct_agrees_with_bezout() {
    let std = StandardModel::new();
    let f = phi(1).unwrap();
    let coprime = match f.universal_prefix().1.disjuncts()[0] {
        g @ Formula::ForAll(..) => g.clone(),
        other => panic!("unexpected first disjunct {other:?}"),
    };
    for n in 1..=20u64 {
        for m0 in 1..=20u64 {
            let asg = Assignment::new()
                .with("n", BigUint::from(n))
                .with("m_0", BigUint::from(m0));
            let v = eval_formula(&std, &asg, &coprime, EvalBudget::default()).unwrap();
            assert_eq!(v, TruthValue3::from(bezout_witness(m0, n).is_none()));
        }
    }
}

#[test]
fn expansion_matches_direct_product() {
    for k in 1..=8u64 {
        let e = expand_shifted_product(k).unwrap();
        for n in 0..=50u64 {
            let direct: BigUint = (1..=k).map(|j| BigUint::from(n + j)).product();
            assert_eq!(e.eval(&BigUint::from(n)), direct);
        }
    }
}
