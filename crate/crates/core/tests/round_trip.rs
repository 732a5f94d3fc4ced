use paminus::axioms::{all_axioms, export_term};
use paminus::generators::{nu, phi};
use paminus::logic::{numeral, parse_formula, parse_term, print_formula, print_term, Formula, Term};
use proptest::prelude::*;

const VARS: [&str; 5] = ["x", "y", "z", "m_0", "n"];

fn term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        Just(Term::Zero),
        Just(Term::One),
        prop::sample::select(&VARS[..]).prop_map(Term::var),
        (0u64..6).prop_map(numeral),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::add(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Term::mul(a, b)),
        ]
    })
}

fn formula() -> impl Strategy<Value = Formula> {
    let atom = prop_oneof![
        (term(), term()).prop_map(|(a, b)| Formula::eq(a, b)),
        (term(), term()).prop_map(|(a, b)| Formula::lt(a, b)),
    ];
    atom.prop_recursive(8, 64, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
            (prop::sample::select(&VARS[..]), inner.clone()).prop_map(|(v, f)| Formula::forall(v, f)),
            (prop::sample::select(&VARS[..]), inner).prop_map(|(v, f)| Formula::exists(v, f)),
        ]
    })
}

/// Reads `plus(a,b)`, `times(a,b)`, `zero`, `one` and upper-case variables.
fn read_tptp_term(s: &str) -> Term {
    fn go(s: &str, i: &mut usize) -> Term {
        let rest = &s[*i..];
        for (head, mk) in [("plus(", Term::add as fn(Term, Term) -> Term), ("times(", Term::mul)] {
            if rest.starts_with(head) {
                *i += head.len();
                let a = go(s, i);
                assert_eq!(&s[*i..*i + 1], ",");
                *i += 1;
                let b = go(s, i);
                assert_eq!(&s[*i..*i + 1], ")");
                *i += 1;
                return mk(a, b);
            }
        }
        let end = rest.find([',', ')']).unwrap_or(rest.len());
        *i += end;
        match &rest[..end] {
            "zero" => Term::Zero,
            "one" => Term::One,
            v => Term::var(&v.to_ascii_lowercase()),
        }
    }
    let mut i = 0;
    let t = go(s, &mut i);
    assert_eq!(i, s.len());
    t
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn tptp_terms_read_back(t in term()) {
        prop_assert_eq!(read_tptp_term(&export_term(&t)), t);
    }

    #[test]
    fn formulas_round_trip(f in formula()) {
        let text = print_formula(&f);
        prop_assert_eq!(parse_formula(&text).unwrap(), f);
    }

    #[test]
    fn terms_round_trip(t in term()) {
        prop_assert_eq!(parse_term(&print_term(&t)).unwrap(), t);
    }

    #[test]
    fn printing_is_stable(f in formula()) {
        let once = print_formula(&f);
        let twice = print_formula(&parse_formula(&once).unwrap());
        prop_assert_eq!(once, twice);
    }
}

#[test]
fn axioms_and_families_round_trip() {
    for (_, f) in all_axioms() {
        assert_eq!(parse_formula(&print_formula(&f)).unwrap(), f);
    }
    for k in 1..=6 {
        for f in [phi(k).unwrap(), nu(k).unwrap()] {
            assert_eq!(parse_formula(&print_formula(&f)).unwrap(), f);
        }
    }
}
