use std::fmt;

/// Which tensor factor a variable belongs to. `None` outside tensor-product rings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    None,
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// Chern classes `c_i`, degree `2i`.
    C,
    /// Loop-space classes `x_j`, degree `2j`.
    X,
    /// Auxiliary symmetric-function variables `t_i`, degree 2.
    T,
}

/// A polynomial generator. Field order gives the canonical variable order
/// `(side, family, index)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GradedVariable {
    pub side: Side,
    pub family: Family,
    pub index: u32,
}

impl GradedVariable {
    pub fn new(side: Side, family: Family, index: u32) -> Self {
        assert!(index >= 1, "variable indices start at 1");
        GradedVariable {
            side,
            family,
            index,
        }
    }

    pub fn c(index: u32) -> Self {
        Self::new(Side::None, Family::C, index)
    }

    pub fn x(index: u32) -> Self {
        Self::new(Side::None, Family::X, index)
    }

    pub fn t(index: u32) -> Self {
        Self::new(Side::None, Family::T, index)
    }

    pub fn with_side(self, side: Side) -> Self {
        GradedVariable { side, ..self }
    }

    pub fn degree(&self) -> u32 {
        match self.family {
            Family::C | Family::X => 2 * self.index,
            Family::T => 2,
        }
    }
}

impl fmt::Display for GradedVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.side {
            Side::None => "",
            Side::Left => "L.",
            Side::Right => "R.",
        };
        let letter = match self.family {
            Family::C => 'c',
            Family::X => 'x',
            Family::T => 't',
        };
        write!(f, "{prefix}{letter}{}", self.index)
    }
}
