use std::collections::BTreeMap;

use super::{GradedVariable, PolyError, Polynomial, RingSpec};

/// Degree-preserving ring map determined by the images of the source variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homomorphism {
    pub source: RingSpec,
    pub target: RingSpec,
    images: BTreeMap<GradedVariable, Polynomial>,
}

impl Homomorphism {
    pub fn new<I>(source: RingSpec, target: RingSpec, images: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (GradedVariable, Polynomial)>,
    {
        let mut map = BTreeMap::new();
        for (v, img) in images {
            if !source.contains_variable(v) {
                return Err(PolyError::ForeignVariable {
                    variable: v.to_string(),
                    ring: source.name.clone(),
                });
            }
            target.check(&img)?;
            if !img.is_zero() && img.homogeneous_degree() != Some(v.degree()) {
                return Err(PolyError::DegreeMismatch {
                    variable: v.to_string(),
                    image: img.to_string(),
                });
            }
            map.insert(v, img);
        }
        Ok(Homomorphism {
            source,
            target,
            images: map,
        })
    }

    pub fn image_of(&self, v: GradedVariable) -> Option<&Polynomial> {
        self.images.get(&v)
    }

    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial, PolyError> {
        let mut powers: BTreeMap<(GradedVariable, u32), Polynomial> = BTreeMap::new();
        let mut out = Polynomial::zero();
        for (m, c) in p.terms() {
            let mut term = Polynomial::constant(c.clone());
            for &(v, e) in m.exponents() {
                let img = self.images.get(&v).ok_or_else(|| PolyError::MissingImage {
                    variable: v.to_string(),
                })?;
                let pw = powers.entry((v, e)).or_insert_with(|| img.pow(e));
                term = &term * &*pw;
            }
            out = &out + &term;
        }
        Ok(out)
    }
}

pub fn apply_hom(h: &Homomorphism, p: &Polynomial) -> Result<Polynomial, PolyError> {
    h.apply(p)
}
