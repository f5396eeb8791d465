use gradedtor_core::polyring::{
    monomial_basis, GradedVariable, Homomorphism, Monomial, Polynomial, RingSpec,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn vars() -> Vec<GradedVariable> {
    vec![
        GradedVariable::c(1),
        GradedVariable::c(2),
        GradedVariable::x(1),
        GradedVariable::x(2),
        GradedVariable::x(3),
    ]
}

fn poly() -> impl Strategy<Value = Polynomial> {
    let term = (-5i64..=5, prop::collection::vec(0u32..=2, 5));
    prop::collection::vec(term, 0..5).prop_map(|terms| {
        let vs = vars();
        Polynomial::from_terms(terms.into_iter().map(|(c, exps)| {
            (
                BigInt::from(c),
                Monomial::from_exponents(vs.iter().copied().zip(exps)),
            )
        }))
    })
}

/// Number of monomials of degree `d` in variables of the given degrees,
/// from the product of `1 / (1 - t^e)`.
fn count_by_series(degrees: &[u32], d: u32) -> usize {
    let mut coeffs = vec![0usize; d as usize + 1];
    coeffs[0] = 1;
    for &e in degrees {
        for i in e as usize..=d as usize {
            coeffs[i] += coeffs[i - e as usize];
        }
    }
    coeffs[d as usize]
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Polynomial::zero());
        prop_assert_eq!(&a * &Polynomial::one(), a.clone());
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn basis_sizes_match_generating_function(d in 0u32..=16, n in 1u32..=3) {
        let ring = RingSpec::gauge(n, 16);
        let degrees: Vec<u32> = ring.variables().iter().map(|v| v.degree()).collect();
        let basis = monomial_basis(&ring, d).unwrap();
        prop_assert_eq!(basis.len(), count_by_series(&degrees, d));
        prop_assert!(basis.iter().all(|m| m.degree() == d));
        prop_assert!(basis.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn homomorphism_is_multiplicative(a in poly(), b in poly(), k in -3i64..=3) {
        let u = Polynomial::var(GradedVariable::c(1));
        let h = Homomorphism::new(
            RingSpec::gauge(3, 40),
            RingSpec::chern(2, 40),
            [
                (GradedVariable::c(1), 2 * &u),
                (GradedVariable::c(2), &u.pow(2) + &Polynomial::var(GradedVariable::c(2))),
                (GradedVariable::x(1), k * &u),
                (GradedVariable::x(2), Polynomial::var(GradedVariable::c(2))),
                (GradedVariable::x(3), &u * &Polynomial::var(GradedVariable::c(2))),
            ],
        ).unwrap();
        let ha = h.apply(&a).unwrap();
        let hb = h.apply(&b).unwrap();
        prop_assert_eq!(h.apply(&(&a * &b)).unwrap(), &ha * &hb);
        prop_assert_eq!(h.apply(&(&a + &b)).unwrap(), &ha + &hb);
    }
}
