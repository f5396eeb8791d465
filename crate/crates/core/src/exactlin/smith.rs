use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::hermite::hermite_basis;
use super::{IntMatrix, SparseRow};

/// Invariant factors `d_1 | d_2 | ... | d_r` of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub invariants: Vec<BigInt>,
    pub rank: usize,
}

impl SmithForm {
    /// Invariant factors greater than one: the torsion of the cokernel.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariants
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect()
    }

    pub fn determinantal_product(&self) -> BigInt {
        self.invariants.iter().product()
    }
}

pub fn snf(m: &IntMatrix) -> SmithForm {
    let basis = hermite_basis(m.ncols(), m.rows().iter().cloned());
    smith_of_hermite_basis(m.ncols(), &basis)
}

/// Unit-pivot split of a reduced Hermite basis.
///
/// In a reduced basis a pivot equal to one is the only nonzero entry of its
/// column, and the remaining rows vanish on every unit-pivot column. The
/// cokernel of the basis is therefore the cokernel of the remaining rows
/// restricted to `free_cols`.
pub(crate) struct UnitSplit<'a> {
    pub units: Vec<&'a SparseRow>,
    pub rest: Vec<&'a SparseRow>,
    /// Sorted columns that are not unit pivots.
    pub free_cols: Vec<usize>,
}

pub(crate) fn split_units(ncols: usize, basis: &[SparseRow]) -> UnitSplit<'_> {
    let mut is_unit_col = vec![false; ncols];
    let mut units = Vec::new();
    let mut rest = Vec::new();
    for r in basis {
        let (c, d) = r.lead().expect("nonzero basis row");
        if d.is_one() {
            is_unit_col[c] = true;
            units.push(r);
        } else {
            rest.push(r);
        }
    }
    let free_cols = (0..ncols).filter(|&c| !is_unit_col[c]).collect();
    UnitSplit {
        units,
        rest,
        free_cols,
    }
}

pub(crate) fn smith_of_hermite_basis(ncols: usize, basis: &[SparseRow]) -> SmithForm {
    let split = split_units(ncols, basis);
    let mut dense: Vec<Vec<BigInt>> = split
        .rest
        .iter()
        .map(|r| r.restrict(&split.free_cols).to_dense(split.free_cols.len()))
        .collect();
    let mut invariants = vec![BigInt::one(); split.units.len()];
    invariants.extend(diagonalize(&mut dense));
    let rank = invariants.len();
    SmithForm { invariants, rank }
}

/// Dense Smith diagonalization; returns the nonzero invariant factors in divisibility order.
pub(crate) fn diagonalize(a: &mut [Vec<BigInt>]) -> Vec<BigInt> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows && t < cols {
        let Some((pi, pj)) = min_abs_position(a, t, t) else {
            break;
        };
        a.swap(t, pi);
        for r in a.iter_mut() {
            r.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = &a[i][t] / &a[t][t];
                if !q.is_zero() {
                    let (head, tail) = a.split_at_mut(i);
                    let pivot_row = &head[t];
                    for j in t..cols {
                        tail[0][j] -= &q * &pivot_row[j];
                    }
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = &a[t][j] / &a[t][t];
                if !q.is_zero() {
                    for row in a.iter_mut().skip(t) {
                        let sub = &q * &row[t];
                        row[j] -= sub;
                    }
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
            // Bring the smallest remaining entry of row t / column t to the pivot.
            let mut best: Option<(usize, usize)> = None;
            let mut best_abs = a[t][t].abs();
            for (i, row) in a.iter().enumerate().skip(t + 1) {
                if !row[t].is_zero() && row[t].abs() < best_abs {
                    best_abs = row[t].abs();
                    best = Some((i, t));
                }
            }
            for (j, x) in a[t].iter().enumerate().skip(t + 1) {
                if !x.is_zero() && x.abs() < best_abs {
                    best_abs = x.abs();
                    best = Some((t, j));
                }
            }
            if let Some((i, j)) = best {
                if i != t {
                    a.swap(t, i);
                }
                if j != t {
                    for r in a.iter_mut() {
                        r.swap(t, j);
                    }
                }
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = diag[i].gcd(&diag[j]);
            if g != diag[i] {
                let l = &diag[i] / &g * &diag[j];
                diag[i] = g;
                diag[j] = l;
            }
        }
    }
    diag
}

fn min_abs_position(a: &[Vec<BigInt>], r0: usize, c0: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for (i, row) in a.iter().enumerate().skip(r0) {
        for (j, x) in row.iter().enumerate().skip(c0) {
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|b| ax < b.2) {
                let unit = ax.is_one();
                best = Some((i, j, ax));
                if unit {
                    return best.map(|(i, j, _)| (i, j));
                }
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}
