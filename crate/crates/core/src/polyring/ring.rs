use super::{Family, GradedVariable, Monomial, PolyError, Polynomial, Side};

/// A graded polynomial ring `Z[c_1..c_n, x_1, x_2, .., t_1..t_N]`, optionally tensored with itself.
///
/// The `x` family is infinite; only variables of degree `<= max_degree` are
/// ever materialized, which is exact for every computation in degree
/// `<= max_degree` since all generators have positive degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingSpec {
    pub name: String,
    pub sides: Vec<Side>,
    pub chern_rank: u32,
    pub loop_classes: bool,
    pub symmetric_vars: u32,
    pub max_degree: u32,
}

impl RingSpec {
    /// `Z[c_1..c_n, x_1, x_2, ..]`
    pub fn gauge(n: u32, max_degree: u32) -> Self {
        let name = if n == 0 {
            "Z[x1,x2,...]".to_string()
        } else {
            format!("Z[c1..c{n},x1,x2,...]")
        };
        RingSpec {
            name,
            sides: vec![Side::None],
            chern_rank: n,
            loop_classes: true,
            symmetric_vars: 0,
            max_degree,
        }
    }

    /// `Z[x_1, x_2, ..]`
    pub fn loop_space(max_degree: u32) -> Self {
        Self::gauge(0, max_degree)
    }

    /// `Z[c_1..c_n]`
    pub fn chern(n: u32, max_degree: u32) -> Self {
        RingSpec {
            name: format!("Z[c1..c{n}]"),
            sides: vec![Side::None],
            chern_rank: n,
            loop_classes: false,
            symmetric_vars: 0,
            max_degree,
        }
    }

    /// `Z[t_1..t_N]`, every `t_i` of degree 2.
    pub fn symmetric(count: u32, max_degree: u32) -> Self {
        RingSpec {
            name: format!("Z[t1..t{count}]"),
            sides: vec![Side::None],
            chern_rank: 0,
            loop_classes: false,
            symmetric_vars: count,
            max_degree,
        }
    }

    /// The tensor square, realized with `L.`/`R.` side tags.
    pub fn tensor_square(&self) -> Self {
        RingSpec {
            name: format!("{0} ⊗ {0}", self.name),
            sides: vec![Side::Left, Side::Right],
            ..self.clone()
        }
    }

    pub fn with_max_degree(&self, max_degree: u32) -> Self {
        RingSpec {
            max_degree,
            ..self.clone()
        }
    }

    pub fn is_two_sided(&self) -> bool {
        self.sides.len() > 1
    }

    pub fn contains_variable(&self, v: GradedVariable) -> bool {
        self.sides.contains(&v.side)
            && match v.family {
                Family::C => v.index <= self.chern_rank,
                Family::X => self.loop_classes,
                Family::T => v.index <= self.symmetric_vars,
            }
    }

    /// Errors with the first variable of `p` that does not belong to this ring.
    pub fn check(&self, p: &Polynomial) -> Result<(), PolyError> {
        match p
            .variables()
            .into_iter()
            .find(|v| !self.contains_variable(*v))
        {
            Some(v) => Err(PolyError::ForeignVariable {
                variable: v.to_string(),
                ring: self.name.clone(),
            }),
            None => Ok(()),
        }
    }

    /// Materialized variables of degree at most `d`, in canonical order.
    pub fn variables_up_to(&self, d: u32) -> Vec<GradedVariable> {
        let mut out = Vec::new();
        for &side in &self.sides {
            for i in 1..=self.chern_rank {
                out.push(GradedVariable::new(side, Family::C, i));
            }
            if self.loop_classes {
                for j in 1..=d / 2 {
                    out.push(GradedVariable::new(side, Family::X, j));
                }
            }
            for i in 1..=self.symmetric_vars {
                out.push(GradedVariable::new(side, Family::T, i));
            }
        }
        out.retain(|v| v.degree() <= d);
        out.sort();
        out
    }

    pub fn variables(&self) -> Vec<GradedVariable> {
        self.variables_up_to(self.max_degree)
    }

    /// All monomials of degree exactly `d`, in descending canonical order.
    pub fn monomial_basis(&self, d: u32) -> Result<Vec<Monomial>, PolyError> {
        if d > self.max_degree {
            return Err(PolyError::DegreeOutOfRange {
                degree: d,
                max_degree: self.max_degree,
            });
        }
        if d % 2 == 1 {
            return Ok(Vec::new());
        }
        let vars = self.variables_up_to(d);
        let mut out = Vec::new();
        let mut current = Vec::new();
        enumerate(&vars, 0, d, &mut current, &mut out);
        out.sort_by(|a, b| b.cmp(a));
        Ok(out)
    }
}

fn enumerate(
    vars: &[GradedVariable],
    from: usize,
    remaining: u32,
    current: &mut Vec<(GradedVariable, u32)>,
    out: &mut Vec<Monomial>,
) {
    if remaining == 0 {
        out.push(Monomial::from_exponents(current.iter().copied()));
        return;
    }
    for (k, v) in vars.iter().enumerate().skip(from) {
        let deg = v.degree();
        let mut e = 1;
        while deg * e <= remaining {
            current.push((*v, e));
            enumerate(vars, k + 1, remaining - deg * e, current, out);
            current.pop();
            e += 1;
        }
    }
}

pub fn monomial_basis(ring: &RingSpec, d: u32) -> Result<Vec<Monomial>, PolyError> {
    ring.monomial_basis(d)
}
