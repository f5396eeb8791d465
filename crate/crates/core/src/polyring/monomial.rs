use std::cmp::Ordering;
use std::fmt;

use super::GradedVariable;

/// Product of variables with positive exponents, sorted by variable.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<(GradedVariable, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(v: GradedVariable) -> Self {
        Monomial { exps: vec![(v, 1)] }
    }

    pub fn pow(v: GradedVariable, e: u32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial { exps: vec![(v, e)] }
        }
    }

    pub fn from_exponents<I>(exps: I) -> Self
    where
        I: IntoIterator<Item = (GradedVariable, u32)>,
    {
        let mut m = Monomial::one();
        for (v, e) in exps {
            m = m.mul(&Monomial::pow(v, e));
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|(v, e)| v.degree() * e).sum()
    }

    pub fn exponent(&self, v: GradedVariable) -> u32 {
        self.exps
            .binary_search_by_key(&v, |(w, _)| *w)
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn exponents(&self) -> &[(GradedVariable, u32)] {
        &self.exps
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.exps, &other.exps);
        while i < a.len() || j < b.len() {
            if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i]);
                i += 1;
            } else if i >= a.len() || b[j].0 < a[i].0 {
                out.push(b[j]);
                j += 1;
            } else {
                out.push((a[i].0, a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
        Monomial { exps: out }
    }

    pub fn map_variables(&self, f: impl Fn(GradedVariable) -> GradedVariable) -> Monomial {
        Monomial::from_exponents(self.exps.iter().map(|(v, e)| (f(*v), *e)))
    }
}

impl Ord for Monomial {
    /// Graded by degree, then lexicographic: at the first variable (in
    /// canonical order) where the exponents differ, the larger exponent wins.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (a, b) = (&self.exps, &other.exps);
            for k in 0..a.len().min(b.len()) {
                if a[k].0 != b[k].0 {
                    // The earlier variable is absent from the other monomial.
                    return if a[k].0 < b[k].0 {
                        Ordering::Greater
                    } else {
                        Ordering::Less
                    };
                }
                if a[k].1 != b[k].1 {
                    return a[k].1.cmp(&b[k].1);
                }
            }
            a.len().cmp(&b.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.exps.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}
