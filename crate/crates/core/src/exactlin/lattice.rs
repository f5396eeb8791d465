use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::hermite::{extend_hermite_basis, hermite_basis, hnf};
use super::smith::{diagonalize, smith_of_hermite_basis, split_units, UnitSplit};
use super::{IntMatrix, LinError, SmithForm, SparseRow};

/// A subgroup of `Z^n`, stored as its reduced Hermite basis.
///
/// Equality is equality of Hermite bases, hence of the subgroups themselves.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lattice {
    ambient: usize,
    basis: Vec<SparseRow>,
}

impl Lattice {
    pub fn zero(ambient: usize) -> Self {
        Lattice {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Lattice {
            ambient,
            basis: (0..ambient).map(SparseRow::unit).collect(),
        }
    }

    pub fn new(ambient: usize, generators: &IntMatrix) -> Result<Self, LinError> {
        if generators.ncols() != ambient {
            return Err(LinError::DimensionMismatch {
                expected: ambient,
                found: generators.ncols(),
            });
        }
        Ok(Self::from_rows(ambient, generators.rows().iter().cloned()))
    }

    /// Span of the given rows. Panics if a row has an entry at or beyond `ambient`.
    pub fn from_rows<I>(ambient: usize, rows: I) -> Self
    where
        I: IntoIterator<Item = SparseRow>,
    {
        let rows: Vec<SparseRow> = rows.into_iter().collect();
        for r in &rows {
            if let Some(c) = r.max_col() {
                assert!(
                    c < ambient,
                    "generator column {c} outside ambient rank {ambient}"
                );
            }
        }
        Lattice {
            ambient,
            basis: hermite_basis(ambient, rows),
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_rows(&self) -> &[SparseRow] {
        &self.basis
    }

    pub fn generators(&self) -> IntMatrix {
        IntMatrix::from_rows(self.ambient, self.basis.clone())
    }

    pub fn pivot_cols(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|r| r.lead().expect("nonzero basis row").0)
            .collect()
    }

    pub fn join<I>(&self, rows: I) -> Lattice
    where
        I: IntoIterator<Item = SparseRow>,
    {
        let rows: Vec<SparseRow> = rows.into_iter().collect();
        for r in &rows {
            if let Some(c) = r.max_col() {
                assert!(
                    c < self.ambient,
                    "generator column {c} outside ambient rank {}",
                    self.ambient
                );
            }
        }
        Lattice {
            ambient: self.ambient,
            basis: extend_hermite_basis(self.ambient, &self.basis, rows),
        }
    }

    /// Invariant factors of the basis; those above one give the torsion of `Z^n / self`.
    pub fn smith(&self) -> SmithForm {
        smith_of_hermite_basis(self.ambient, &self.basis)
    }

    pub fn contains(&self, v: &SparseRow) -> bool {
        matches!(self.solve(v), Some(m) if m.is_one())
    }

    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        other.ambient == self.ambient && other.basis.iter().all(|r| self.contains(r))
    }

    /// `{ v : n v ∈ self for some n != 0 }`.
    pub fn saturate(&self) -> Lattice {
        let split = split_units(self.ambient, &self.basis);
        if split.rest.is_empty() {
            return self.clone();
        }
        let (saturated, _) = saturate_small(&restricted_rest(&split));
        let lifted = saturated.into_iter().map(|r| r.lift(&split.free_cols));
        Lattice::from_rows(
            self.ambient,
            split.units.iter().map(|r| (*r).clone()).chain(lifted),
        )
    }

    /// Rows `S` with `saturate(self) = self + span(S)`. Usually far fewer
    /// than the rank, so joining them to a larger lattice stays cheap.
    pub fn saturation_generators(&self) -> Vec<SparseRow> {
        let split = split_units(self.ambient, &self.basis);
        if split.rest.is_empty() {
            return Vec::new();
        }
        let (_, extra) = saturate_small(&restricted_rest(&split));
        extra
            .into_iter()
            .map(|r| r.lift(&split.free_cols))
            .collect()
    }

    /// Smallest `m > 0` with `m v` in the lattice, or `None` when no multiple lies in it.
    ///
    /// Solves `x * basis = v` over the rationals by forward substitution on
    /// the pivots; `m` is the lcm of the denominators of `x`.
    pub fn minimal_multiplier(&self, v: &SparseRow) -> Result<Option<BigInt>, LinError> {
        if let Some(c) = v.max_col() {
            if c >= self.ambient {
                return Err(LinError::DimensionMismatch {
                    expected: self.ambient,
                    found: c + 1,
                });
            }
        }
        Ok(self.solve(v))
    }

    fn solve(&self, v: &SparseRow) -> Option<BigInt> {
        let mut residual: BTreeMap<usize, BigRational> = v
            .iter()
            .map(|(c, x)| (c, BigRational::from_integer(x.clone())))
            .collect();
        let mut denom = BigInt::one();
        for row in &self.basis {
            let Some((&first, _)) = residual.first_key_value() else {
                break;
            };
            let (p, d) = row.lead().expect("nonzero basis row");
            if first < p {
                // Nonzero coordinate left of every remaining pivot.
                return None;
            }
            let Some(x) = residual.get(&p) else { continue };
            let coef = x / BigRational::from_integer(d.clone());
            denom = denom.lcm(coef.denom());
            for (c, y) in row.iter() {
                let e = residual.entry(c).or_insert_with(BigRational::zero);
                *e -= &coef * BigRational::from_integer(y.clone());
                if e.is_zero() {
                    residual.remove(&c);
                }
            }
        }
        residual.is_empty().then_some(denom)
    }
}

pub fn saturate(l: &Lattice) -> Lattice {
    l.saturate()
}

pub fn minimal_multiplier(v: &[BigInt], l: &Lattice) -> Result<Option<BigInt>, LinError> {
    if v.len() != l.ambient_rank() {
        return Err(LinError::DimensionMismatch {
            expected: l.ambient_rank(),
            found: v.len(),
        });
    }
    l.minimal_multiplier(&SparseRow::from_dense(v))
}

/// Saturation of a small lattice with linearly independent rows.
///
/// The primes to saturate at are those dividing the Smith invariants. For
/// each prime `p`, vectors `a` with `a * B = 0 (mod p)` give new lattice
/// vectors `a * B / p`; this repeats until the basis is independent mod `p`.
/// Non-unit rows restricted to the non-unit columns. Unit pivot columns are
/// zero in every other row of a reduced basis, so nothing is lost.
fn restricted_rest(split: &UnitSplit<'_>) -> IntMatrix {
    IntMatrix::from_rows(
        split.free_cols.len(),
        split
            .rest
            .iter()
            .map(|r| r.restrict(&split.free_cols))
            .collect(),
    )
}

/// Saturated Hermite basis of the row span of `m`, and the rows added to reach it.
fn saturate_small(m: &IntMatrix) -> (Vec<SparseRow>, Vec<SparseRow>) {
    let n = m.ncols();
    let mut dense = m.to_dense();
    let invariants = diagonalize(&mut dense);
    let mut primes = Vec::new();
    for d in &invariants {
        match small_prime_factors(d) {
            Some(ps) => primes.extend(ps),
            None => {
                let basis = saturate_by_kernels(m);
                return (basis.clone(), basis);
            }
        }
    }
    primes.sort_unstable();
    primes.dedup();
    let mut basis: Vec<SparseRow> = m.rows().to_vec();
    let mut added = Vec::new();
    for p in primes {
        loop {
            let kernel = left_kernel_mod_p(&basis, n, p);
            if kernel.is_empty() {
                break;
            }
            let pb = BigInt::from(p);
            let mut extra = Vec::with_capacity(kernel.len());
            for a in kernel {
                let mut v = SparseRow::new();
                for (i, coef) in a.into_iter().enumerate() {
                    if coef != 0 {
                        v.add_scaled(&BigInt::from(coef), &basis[i]);
                    }
                }
                let entries = v
                    .into_entries()
                    .into_iter()
                    .map(|(c, x)| {
                        let (q, r) = x.div_rem(&pb);
                        debug_assert!(r.is_zero());
                        (c, q)
                    })
                    .collect();
                extra.push(SparseRow::from_entries(entries));
            }
            added.extend(extra.iter().cloned());
            basis = hermite_basis(n, basis.into_iter().chain(extra));
        }
    }
    (basis, added)
}

/// Prime factors of `d`, or `None` if `d` has a factor beyond the trial-division range.
fn small_prime_factors(d: &BigInt) -> Option<Vec<u64>> {
    const TRIAL_LIMIT: u64 = 1 << 20;
    let mut rest = d.abs();
    let mut out = Vec::new();
    let mut q: u64 = 2;
    while !rest.is_one() && q <= TRIAL_LIMIT {
        let qb = BigInt::from(q);
        if qb.clone() * &qb > rest {
            break;
        }
        if (&rest % &qb).is_zero() {
            out.push(q);
            while (&rest % &qb).is_zero() {
                rest /= &qb;
            }
        }
        q += if q == 2 { 1 } else { 2 };
    }
    if rest.is_one() {
        return Some(out);
    }
    // Whatever remains is prime if it is below the square of the trial bound.
    let limit = BigInt::from(TRIAL_LIMIT) * BigInt::from(TRIAL_LIMIT);
    match u64::try_from(&rest) {
        Ok(r) if rest < limit => {
            out.push(r);
            Some(out)
        }
        _ => None,
    }
}

/// Basis (as coefficient vectors over the rows) of `{ a : a * rows = 0 (mod p) }`.
fn left_kernel_mod_p(rows: &[SparseRow], ncols: usize, p: u64) -> Vec<Vec<u64>> {
    let r = rows.len();
    let reduce = |x: &BigInt| -> u64 {
        let m = x.mod_floor(&BigInt::from(p));
        u64::try_from(&m).expect("residue fits in u64")
    };
    let mul = |a: u64, b: u64| -> u64 { ((a as u128 * b as u128) % p as u128) as u64 };
    let inv = |a: u64| -> u64 {
        // Fermat inverse.
        let (mut base, mut e, mut acc) = (a, p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, base);
            }
            base = mul(base, base);
            e >>= 1;
        }
        acc
    };
    let mut work: Vec<(Vec<u64>, Vec<u64>)> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut v = vec![0u64; ncols];
            for (c, x) in row.iter() {
                v[c] = reduce(x);
            }
            let mut t = vec![0u64; r];
            t[i] = 1;
            (v, t)
        })
        .collect();
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(sel) = (pivot_row..r).find(|&i| work[i].0[col] != 0) else {
            continue;
        };
        work.swap(pivot_row, sel);
        let scale = inv(work[pivot_row].0[col]);
        let (head, tail) = work.split_at_mut(pivot_row + 1);
        let (pv, pt) = &mut head[pivot_row];
        for x in pv.iter_mut().chain(pt.iter_mut()) {
            *x = mul(*x, scale);
        }
        for (v, t) in tail.iter_mut() {
            let f = v[col];
            if f == 0 {
                continue;
            }
            let nf = p - f;
            for (x, y) in v.iter_mut().zip(pv.iter()) {
                *x = (*x + mul(nf, *y)) % p;
            }
            for (x, y) in t.iter_mut().zip(pt.iter()) {
                *x = (*x + mul(nf, *y)) % p;
            }
        }
        pivot_row += 1;
        if pivot_row == r {
            break;
        }
    }
    work.into_iter().skip(pivot_row).map(|(_, t)| t).collect()
}

/// Saturation as the annihilator of the integer kernel. Exact for any
/// input but prone to entry growth; only used when the Smith invariants
/// cannot be factored by trial division.
fn saturate_by_kernels(m: &IntMatrix) -> Vec<SparseRow> {
    let n = m.ncols();
    let kernel = hnf(&m.transpose()).left_kernel();
    if kernel.is_empty() {
        return (0..n).map(SparseRow::unit).collect();
    }
    let k = IntMatrix::from_rows(n, kernel);
    hnf(&k.transpose()).left_kernel()
}
