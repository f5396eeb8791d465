use gradedtor_cli::parse_poly;
use gradedtor_core::polyring::Family;
use gradedtor_core::{GradedVariable, Monomial, Polynomial, Side};
use num_bigint::BigInt;
use proptest::prelude::*;

fn variable() -> impl Strategy<Value = GradedVariable> {
    let side = prop::sample::select(vec![Side::None, Side::Left, Side::Right]);
    let family = prop::sample::select(vec![Family::C, Family::X, Family::T]);
    (side, family, 1u32..=12).prop_map(|(side, family, index)| GradedVariable {
        side,
        family,
        index,
    })
}

fn poly() -> impl Strategy<Value = Polynomial> {
    let monomial =
        prop::collection::vec((variable(), 1u32..=3), 0..4).prop_map(Monomial::from_exponents);
    let coeff = prop_oneof![-20i64..=20, any::<i64>()].prop_map(BigInt::from);
    prop::collection::vec((coeff, monomial), 0..6).prop_map(Polynomial::from_terms)
}

proptest! {
    #[test]
    fn render_then_parse_round_trips(p in poly()) {
        let text = p.to_string();
        let back = parse_poly(&text).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn products_and_sums_parse_structurally(a in poly(), b in poly()) {
        let text = format!("({a}) * ({b}) - ({b})");
        prop_assert_eq!(parse_poly(&text).unwrap(), &(&a * &b) - &b);
    }

    #[test]
    fn garbage_is_rejected_with_a_position(s in "[a-z0-9+*^() -]{1,12}") {
        match parse_poly(&s) {
            Ok(_) => {}
            Err(e) => prop_assert!(e.position <= s.len()),
        }
    }
}
