//! Degreewise calculus of homogeneous ideals over the integers.
//!
//! In degree `d` an ideal is the lattice spanned by `m * g` for each
//! generator `g` and each monomial `m` of degree `d - deg g`, written in
//! the monomial basis of degree `d`. Rational closure is lattice
//! saturation in that single degree.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::exactlin::{Lattice, LinError, SparseRow};
use crate::polyring::{Monomial, PolyError, Polynomial, RingSpec, Side};
use crate::symfam::{h_poly, newton_s};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdealError {
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("generator {0} must be homogeneous of positive even degree")]
    BadGenerator(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Lin(#[from] LinError),
}

/// An infinite family of generators, truncated exactly by degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorFamily {
    /// `h_i` for `i >= from`, with rank `n` and bundle class `k`.
    Relations {
        from: u32,
        n: u32,
        k: i64,
        side: Side,
    },
    /// `s_i` for `i >= from`.
    PowerSums { from: u32, side: Side },
}

impl GeneratorFamily {
    /// Members of degree at most `d`.
    pub fn generators_up_to(&self, d: u32) -> Vec<Polynomial> {
        let (from, side) = match self {
            GeneratorFamily::Relations { from, side, .. }
            | GeneratorFamily::PowerSums { from, side } => (*from, *side),
        };
        (from.max(1)..=d / 2)
            .map(|i| {
                let g = match self {
                    GeneratorFamily::Relations { n, k, .. } => {
                        h_poly(i, *n, *k).expect("index >= 1")
                    }
                    GeneratorFamily::PowerSums { .. } => newton_s(i),
                };
                if side == Side::None {
                    g
                } else {
                    g.with_side(side)
                }
            })
            .collect()
    }

    pub fn side(&self) -> Side {
        match self {
            GeneratorFamily::Relations { side, .. } | GeneratorFamily::PowerSums { side, .. } => {
                *side
            }
        }
    }
}

impl fmt::Display for GeneratorFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.side() {
            Side::None => "",
            Side::Left => "L.",
            Side::Right => "R.",
        };
        match self {
            GeneratorFamily::Relations { from, n, k, .. } => {
                write!(f, "{tag}h_i (i >= {from}, n = {n}, k = {k})")
            }
            GeneratorFamily::PowerSums { from, .. } => write!(f, "{tag}s_i (i >= {from})"),
        }
    }
}

/// `ring / (closure(ideal(closed_families)) + ideal(plain_generators))`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationSpec {
    pub name: String,
    pub ring: RingSpec,
    pub closed_families: Vec<GeneratorFamily>,
    pub plain_generators: Vec<Polynomial>,
    pub k: Option<i64>,
}

impl PresentationSpec {
    pub fn new(
        name: impl Into<String>,
        ring: RingSpec,
        closed_families: Vec<GeneratorFamily>,
        plain_generators: Vec<Polynomial>,
        k: Option<i64>,
    ) -> Result<Self, IdealError> {
        for g in &plain_generators {
            ring.check(g)?;
            match g.homogeneous_degree() {
                Some(d) if d > 0 && d % 2 == 0 => {}
                _ => return Err(IdealError::BadGenerator(g.to_string())),
            }
        }
        for fam in &closed_families {
            if !ring.sides.contains(&fam.side()) {
                return Err(IdealError::BadGenerator(fam.to_string()));
            }
            for g in fam.generators_up_to(ring.max_degree.min(4)) {
                ring.check(&g)?;
            }
        }
        Ok(PresentationSpec {
            name: name.into(),
            ring,
            closed_families,
            plain_generators,
            k,
        })
    }

    pub fn with_max_degree(&self, max_degree: u32) -> Self {
        PresentationSpec {
            ring: self.ring.with_max_degree(max_degree),
            ..self.clone()
        }
    }

    pub fn max_degree(&self) -> u32 {
        self.ring.max_degree
    }
}

/// How rational closure is applied when building an ideal lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Closure {
    /// No closure: the ideal generated by families and plain generators.
    Off,
    /// Close the families, then add plain generators.
    #[default]
    Families,
    /// Add plain generators, then close everything.
    AfterPlain,
}

impl Closure {
    pub fn is_on(self) -> bool {
        self != Closure::Off
    }
}

/// Monomial coordinates of one graded piece.
struct DegreePiece {
    bases: Vec<Vec<Monomial>>,
    index: HashMap<Monomial, usize>,
    degree: u32,
}

impl DegreePiece {
    fn new(ring: &RingSpec, d: u32) -> Result<Self, IdealError> {
        let bases = (0..=d / 2)
            .map(|h| ring.monomial_basis(2 * h))
            .collect::<Result<Vec<_>, _>>()?;
        let top = bases.last().expect("degree 0 is always present");
        let index = top
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        Ok(DegreePiece {
            bases,
            index,
            degree: d,
        })
    }

    fn ambient(&self) -> usize {
        self.index.len()
    }

    fn basis(&self) -> &[Monomial] {
        self.bases.last().expect("degree 0 is always present")
    }

    fn coordinates(&self, p: &Polynomial) -> Result<SparseRow, IdealError> {
        let mut entries = Vec::with_capacity(p.len());
        for (m, c) in p.terms() {
            match self.index.get(m) {
                Some(&i) => entries.push((i, c.clone())),
                None if m.degree() != self.degree => return Err(IdealError::NotHomogeneous),
                None => {
                    return Err(PolyError::ForeignVariable {
                        variable: m.to_string(),
                        ring: format!("degree {} basis", self.degree),
                    }
                    .into())
                }
            }
        }
        Ok(SparseRow::from_entries(entries))
    }

    /// `m * g` for every monomial `m` of complementary degree.
    fn multiples(&self, g: &Polynomial, out: &mut Vec<SparseRow>) -> Result<(), IdealError> {
        let e = g.homogeneous_degree().ok_or(IdealError::NotHomogeneous)?;
        if e > self.degree || (self.degree - e) % 2 == 1 {
            return Ok(());
        }
        for m in &self.bases[((self.degree - e) / 2) as usize] {
            out.push(self.coordinates(&g.mul_monomial(m))?);
        }
        Ok(())
    }
}

fn family_rows(p: &PresentationSpec, piece: &DegreePiece) -> Result<Vec<SparseRow>, IdealError> {
    let mut rows = Vec::new();
    for fam in &p.closed_families {
        for g in fam.generators_up_to(piece.degree) {
            piece.multiples(&g, &mut rows)?;
        }
    }
    Ok(rows)
}

fn plain_rows(p: &PresentationSpec, piece: &DegreePiece) -> Result<Vec<SparseRow>, IdealError> {
    let mut rows = Vec::new();
    for g in &p.plain_generators {
        piece.multiples(g, &mut rows)?;
    }
    Ok(rows)
}

fn build_lattice(
    p: &PresentationSpec,
    piece: &DegreePiece,
    closure: Closure,
) -> Result<Lattice, IdealError> {
    let n = piece.ambient();
    let fam = family_rows(p, piece)?;
    let plain = plain_rows(p, piece)?;
    Ok(match closure {
        Closure::Off => Lattice::from_rows(n, fam.into_iter().chain(plain)),
        Closure::Families if plain.is_empty() => Lattice::from_rows(n, fam).saturate(),
        // saturate(F) + P = (F + P) + S where saturate(F) = F + S; S is small,
        // so this avoids reducing the dense saturated basis against P.
        Closure::Families => {
            let extra = Lattice::from_rows(n, fam.iter().cloned()).saturation_generators();
            Lattice::from_rows(n, fam.into_iter().chain(plain)).join(extra)
        }
        Closure::AfterPlain => Lattice::from_rows(n, fam.into_iter().chain(plain)).saturate(),
    })
}

/// Degree-`d` piece of the ideal, in the coordinates of `ring.monomial_basis(d)`.
pub fn ideal_lattice(
    p: &PresentationSpec,
    d: u32,
    closure: Closure,
) -> Result<Lattice, IdealError> {
    let piece = DegreePiece::new(&p.ring, d)?;
    build_lattice(p, &piece, closure)
}

/// Coordinates of a homogeneous polynomial of degree `d` in `ring.monomial_basis(d)`.
pub fn coordinates(ring: &RingSpec, d: u32, f: &Polynomial) -> Result<SparseRow, IdealError> {
    ring.check(f)?;
    DegreePiece::new(ring, d)?.coordinates(f)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    InIdeal,
    /// Not in the ideal, but this minimal multiple is.
    InClosure(BigInt),
    Outside,
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Membership::InIdeal => write!(f, "InIdeal"),
            Membership::InClosure(m) => write!(f, "InClosure({m})"),
            Membership::Outside => write!(f, "Outside"),
        }
    }
}

pub fn membership(
    f: &Polynomial,
    p: &PresentationSpec,
    closure: Closure,
) -> Result<Membership, IdealError> {
    if f.is_zero() {
        return Ok(Membership::InIdeal);
    }
    p.ring.check(f)?;
    let d = f.homogeneous_degree().ok_or(IdealError::NotHomogeneous)?;
    let piece = DegreePiece::new(&p.ring, d)?;
    let lattice = build_lattice(p, &piece, closure)?;
    let v = piece.coordinates(f)?;
    Ok(match lattice.minimal_multiplier(&v)? {
        None => Membership::Outside,
        Some(m) if m.is_one() => Membership::InIdeal,
        Some(m) => Membership::InClosure(m),
    })
}

/// Structure of one graded piece of the quotient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegreeReport {
    pub degree: u32,
    pub ambient_rank: usize,
    pub ideal_rank: usize,
    pub quotient_rank: usize,
    /// Invariant factors greater than one, in divisibility order.
    pub torsion_invariants: Vec<BigInt>,
}

impl DegreeReport {
    pub fn is_free(&self) -> bool {
        self.torsion_invariants.is_empty()
    }
}

pub fn quotient_report(
    p: &PresentationSpec,
    d: u32,
    closure: Closure,
) -> Result<DegreeReport, IdealError> {
    let piece = DegreePiece::new(&p.ring, d)?;
    let lattice = build_lattice(p, &piece, closure)?;
    let smith = lattice.smith();
    Ok(DegreeReport {
        degree: d,
        ambient_rank: piece.ambient(),
        ideal_rank: smith.rank,
        quotient_rank: piece.ambient() - smith.rank,
        torsion_invariants: smith.torsion(),
    })
}

/// Reports for every even degree `0..=max_degree`, computed in parallel, returned in degree order.
pub fn degree_reports(
    p: &PresentationSpec,
    max_degree: u32,
    closure: Closure,
) -> Result<Vec<DegreeReport>, IdealError> {
    if max_degree > p.ring.max_degree {
        return Err(PolyError::DegreeOutOfRange {
            degree: max_degree,
            max_degree: p.ring.max_degree,
        }
        .into());
    }
    // Largest degrees first so the long jobs start early.
    let mut degrees: Vec<u32> = (0..=max_degree).step_by(2).collect();
    degrees.reverse();
    let mut reports = degrees
        .into_par_iter()
        .map(|d| quotient_report(p, d, closure))
        .collect::<Result<Vec<_>, _>>()?;
    reports.reverse();
    Ok(reports)
}

/// `(degree, quotient_rank)` for every even degree `0..=max_degree`.
pub fn poincare_scan(
    p: &PresentationSpec,
    max_degree: u32,
    closure: Closure,
) -> Result<Vec<(u32, usize)>, IdealError> {
    Ok(degree_reports(p, max_degree, closure)?
        .into_iter()
        .map(|r| (r.degree, r.quotient_rank))
        .collect())
}

/// Whether closing before or after adding the plain generators gives the same degree-`d` lattice.
pub fn closure_orders_agree(p: &PresentationSpec, d: u32) -> Result<bool, IdealError> {
    let piece = DegreePiece::new(&p.ring, d)?;
    Ok(build_lattice(p, &piece, Closure::Families)?
        == build_lattice(p, &piece, Closure::AfterPlain)?)
}

/// The monomial basis used for degree-`d` coordinates.
pub fn degree_basis(ring: &RingSpec, d: u32) -> Result<Vec<Monomial>, IdealError> {
    Ok(DegreePiece::new(ring, d)?.basis().to_vec())
}
