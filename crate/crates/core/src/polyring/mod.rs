//! Graded sparse polynomials over the integers.
//!
//! Every variable has positive even degree. Tensor-product rings are a
//! single ring whose variables carry a [`Side`] tag.

mod hom;
mod monomial;
mod polynomial;
mod ring;
mod variable;

pub use hom::{apply_hom, Homomorphism};
pub use monomial::Monomial;
pub use polynomial::Polynomial;
pub use ring::{monomial_basis, RingSpec};
pub use variable::{Family, GradedVariable, Side};

use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("degree {degree} exceeds the ring's materialized bound {max_degree}")]
    DegreeOutOfRange { degree: u32, max_degree: u32 },
    #[error("variable {variable} does not belong to {ring}")]
    ForeignVariable { variable: String, ring: String },
    #[error("no image given for variable {variable}")]
    MissingImage { variable: String },
    #[error("image {image} of {variable} has the wrong degree")]
    DegreeMismatch { variable: String, image: String },
}

pub fn coefficient_of(p: &Polynomial, m: &Monomial) -> BigInt {
    p.coefficient_of(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(i: u32) -> Polynomial {
        Polynomial::var(GradedVariable::c(i))
    }
    fn x(i: u32) -> Polynomial {
        Polynomial::var(GradedVariable::x(i))
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&c(1) + &x(1)) * &(&c(1) - &x(1));
        assert_eq!(p, &c(1).pow(2) - &x(1).pow(2));
        assert_eq!(p.to_string(), "c1^2 - x1^2");
    }

    #[test]
    fn additive_inverse() {
        let p = &(3 * &c(2)) - &x(1);
        assert!((&p + &(-1 * &p)).is_zero());
    }

    #[test]
    fn square_of_x1_has_degree_four() {
        let p = &x(1) * &x(1);
        assert_eq!(p.homogeneous_degree(), Some(4));
        assert_eq!(p.to_string(), "x1^2");
    }

    #[test]
    fn basis_in_degree_zero_and_four() {
        let ring = RingSpec::gauge(2, 20);
        assert_eq!(ring.monomial_basis(0).unwrap(), vec![Monomial::one()]);
        let b4: Vec<String> = ring
            .monomial_basis(4)
            .unwrap()
            .iter()
            .map(|m| m.to_string())
            .collect();
        assert_eq!(b4, vec!["c1^2", "c1*x1", "c2", "x1^2", "x2"]);
    }

    #[test]
    fn basis_counts_match_enumeration_oracle() {
        // Exponent vectors (a,b,p,q,r,s) with 2a+4b+2p+4q+6r+8s = 8.
        let mut count = 0;
        for a in 0..=4 {
            for b in 0..=2 {
                for p in 0..=4 {
                    for q in 0..=2 {
                        for r in 0..=1 {
                            for s in 0..=1 {
                                if 2 * a + 4 * b + 2 * p + 4 * q + 6 * r + 8 * s == 8 {
                                    count += 1;
                                }
                            }
                        }
                    }
                }
            }
        }
        assert_eq!(count, 17);
        assert_eq!(RingSpec::gauge(2, 20).monomial_basis(8).unwrap().len(), 17);
    }

    #[test]
    fn odd_and_out_of_range_degrees() {
        let ring = RingSpec::gauge(2, 8);
        assert!(ring.monomial_basis(5).unwrap().is_empty());
        assert!(matches!(
            ring.monomial_basis(10),
            Err(PolyError::DegreeOutOfRange { .. })
        ));
    }

    #[test]
    fn tensor_square_doubles_variables() {
        let ring = RingSpec::gauge(2, 4).tensor_square();
        let vs: Vec<String> = ring.variables().iter().map(|v| v.to_string()).collect();
        assert_eq!(
            vs,
            vec!["L.c1", "L.c2", "L.x1", "L.x2", "R.c1", "R.c2", "R.x1", "R.x2"]
        );
        assert_eq!(ring.monomial_basis(2).unwrap().len(), 4);
    }

    fn alpha(k: i64) -> Homomorphism {
        let u = Polynomial::var(GradedVariable::c(1));
        Homomorphism::new(
            RingSpec::gauge(2, 8),
            RingSpec::chern(1, 8),
            [
                (GradedVariable::c(1), 2 * &u),
                (GradedVariable::c(2), u.pow(2)),
                (GradedVariable::x(1), k * &u),
            ],
        )
        .unwrap()
    }

    #[test]
    fn induced_map_on_generators() {
        let h = alpha(1);
        let u = Polynomial::var(GradedVariable::c(1));
        assert_eq!(h.apply(&c(1)).unwrap(), 2 * &u);
        assert_eq!(h.apply(&x(1)).unwrap(), u);
        assert_eq!(h.apply(&Polynomial::one()).unwrap(), Polynomial::one());
        assert!(matches!(
            h.apply(&x(2)),
            Err(PolyError::MissingImage { .. })
        ));
    }

    #[test]
    fn image_degree_checked() {
        let u = Polynomial::var(GradedVariable::c(1));
        let bad = Homomorphism::new(
            RingSpec::gauge(2, 8),
            RingSpec::chern(1, 8),
            [(GradedVariable::c(2), u)],
        );
        assert!(matches!(bad, Err(PolyError::DegreeMismatch { .. })));
    }

    #[test]
    fn coefficients() {
        let p = &c(1).pow(2) - &(2 * &x(2));
        assert_eq!(
            coefficient_of(&p, &Monomial::pow(GradedVariable::c(1), 2)),
            BigInt::from(1)
        );
        assert_eq!(
            coefficient_of(&p, &Monomial::var(GradedVariable::x(2))),
            BigInt::from(-2)
        );
        assert_eq!(
            coefficient_of(&Polynomial::zero(), &Monomial::one()),
            BigInt::from(0)
        );
    }

    #[test]
    fn foreign_variable_rejected() {
        let ring = RingSpec::loop_space(8);
        assert!(ring.check(&x(3)).is_ok());
        assert!(matches!(
            ring.check(&c(1)),
            Err(PolyError::ForeignVariable { .. })
        ));
    }
}
