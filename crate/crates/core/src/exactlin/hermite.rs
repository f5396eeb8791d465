use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{IntMatrix, SparseRow};

/// Row-style Hermite normal form `H = transform * original`.
///
/// Nonzero rows come first, ordered by pivot column. Pivots are positive and
/// every entry above a pivot lies in `[0, pivot)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteForm {
    pub h: IntMatrix,
    pub transform: IntMatrix,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

impl HermiteForm {
    /// Rows of `transform` that send the original matrix to zero; together
    /// they form a basis of the integer left kernel.
    pub fn left_kernel(&self) -> Vec<SparseRow> {
        self.transform.rows()[self.rank..].to_vec()
    }

    pub fn pivot_values(&self) -> Vec<BigInt> {
        self.pivot_cols
            .iter()
            .enumerate()
            .map(|(i, &c)| self.h.get(i, c))
            .collect()
    }
}

pub fn hnf(m: &IntMatrix) -> HermiteForm {
    let mut ech = Echelon::new(m.ncols(), true);
    for (i, row) in m.rows().iter().enumerate() {
        ech.insert(row.clone(), SparseRow::unit(i));
    }
    let (rows, kernel) = ech.finish();
    let rank = rows.len();
    let pivot_cols = rows
        .iter()
        .map(|r| r.v.lead().expect("pivot row").0)
        .collect();
    let mut h_rows = Vec::with_capacity(m.nrows());
    let mut t_rows = Vec::with_capacity(m.nrows());
    for r in rows {
        h_rows.push(r.v);
        t_rows.push(r.t);
    }
    for t in kernel {
        h_rows.push(SparseRow::new());
        t_rows.push(t);
    }
    HermiteForm {
        h: IntMatrix::from_rows(m.ncols(), h_rows),
        transform: IntMatrix::from_rows(m.nrows(), t_rows),
        rank,
        pivot_cols,
    }
}

/// Hermite basis of the row span (nonzero rows only), without a transform.
pub fn hermite_basis<I>(ncols: usize, rows: I) -> Vec<SparseRow>
where
    I: IntoIterator<Item = SparseRow>,
{
    extend_hermite_basis(ncols, &[], rows)
}

/// Hermite basis of `basis` plus `rows`, where `basis` already is a Hermite basis.
pub(crate) fn extend_hermite_basis<I>(ncols: usize, basis: &[SparseRow], rows: I) -> Vec<SparseRow>
where
    I: IntoIterator<Item = SparseRow>,
{
    let mut rows: Vec<SparseRow> = rows.into_iter().filter(|r| !r.is_zero()).collect();
    if rows.is_empty() && !basis.is_empty() {
        return basis.to_vec();
    }
    // Sparse, small rows first: they become clean pivots that later rows reduce against.
    rows.sort_by_cached_key(|r| (r.len(), r.max_abs()));
    let mut ech = Echelon::new(ncols, false);
    // Existing pivots are distinct, so seeding does no arithmetic.
    for r in basis {
        ech.insert(r.clone(), SparseRow::new());
    }
    // Unit pivots first. A gcd step scales the incoming row, and long chains
    // of them blow up entry sizes, so defer every row that would need one.
    let mut pending = rows;
    loop {
        let before = pending.len();
        pending = pending
            .into_iter()
            .filter_map(|r| ech.insert_exact(r))
            .collect();
        if pending.len() == before {
            break;
        }
    }
    pending.sort_by_cached_key(|r| (r.len(), r.max_abs()));
    for r in pending {
        ech.insert(r, SparseRow::new());
    }
    ech.finish().0.into_iter().map(|r| r.v).collect()
}

pub(crate) struct WorkRow {
    pub v: SparseRow,
    pub t: SparseRow,
}

/// Incremental integer row echelon form, keyed by pivot column.
pub(crate) struct Echelon {
    cols: usize,
    track: bool,
    pivots: BTreeMap<usize, WorkRow>,
    kernel: Vec<SparseRow>,
}

impl Echelon {
    pub fn new(cols: usize, track: bool) -> Self {
        Echelon {
            cols,
            track,
            pivots: BTreeMap::new(),
            kernel: Vec::new(),
        }
    }

    pub fn insert(&mut self, mut v: SparseRow, mut t: SparseRow) {
        loop {
            let (col, b) = match v.lead() {
                None => {
                    if self.track {
                        self.kernel.push(t);
                    }
                    return;
                }
                Some((c, b)) => (c, b.clone()),
            };
            let Some(mut piv) = self.pivots.remove(&col) else {
                if b.is_negative() {
                    v.negate();
                    t.negate();
                }
                self.pivots.insert(col, WorkRow { v, t });
                return;
            };
            let a = piv.v.lead().expect("pivot row").1.clone();
            let (q, r) = b.div_rem(&a);
            if r.is_zero() {
                let q = -q;
                v.add_scaled(&q, &piv.v);
                if self.track {
                    t.add_scaled(&q, &piv.t);
                }
            } else {
                // [x y; -b/g a/g] has determinant 1.
                let eg = a.extended_gcd(&b);
                let (g, x, y) = (eg.gcd, eg.x, eg.y);
                let ag = &a / &g;
                let bg = -(&b / &g);
                let new_piv = SparseRow::combine(&x, &piv.v, &y, &v);
                let new_v = SparseRow::combine(&bg, &piv.v, &ag, &v);
                if self.track {
                    let new_pt = SparseRow::combine(&x, &piv.t, &y, &t);
                    t = SparseRow::combine(&bg, &piv.t, &ag, &t);
                    piv.t = new_pt;
                }
                piv.v = new_piv;
                v = new_v;
            }
            self.pivots.insert(col, piv);
        }
    }

    /// Reduces `v` by exact steps only and places it if its lead becomes a
    /// unit in a free column. Otherwise hands the partly reduced row back.
    pub fn insert_exact(&mut self, mut v: SparseRow) -> Option<SparseRow> {
        debug_assert!(!self.track);
        loop {
            let (col, b) = match v.lead() {
                None => return None,
                Some((c, b)) => (c, b.clone()),
            };
            match self.pivots.get(&col) {
                None if b.abs().is_one() => {
                    if b.is_negative() {
                        v.negate();
                    }
                    self.pivots.insert(
                        col,
                        WorkRow {
                            v,
                            t: SparseRow::new(),
                        },
                    );
                    return None;
                }
                None => return Some(v),
                Some(piv) => {
                    let a = piv.v.lead().expect("pivot row").1;
                    let (q, r) = b.div_rem(a);
                    if !r.is_zero() {
                        return Some(v);
                    }
                    v.add_scaled(&-q, &piv.v);
                }
            }
        }
    }

    /// Reduces entries above pivots and returns (pivot rows in column order, kernel transforms).
    pub fn finish(self) -> (Vec<WorkRow>, Vec<SparseRow>) {
        let mut rows: Vec<WorkRow> = self.pivots.into_values().collect();
        let mut pivot_of = vec![usize::MAX; self.cols];
        for (i, r) in rows.iter().enumerate() {
            pivot_of[r.v.lead().expect("pivot row").0] = i;
        }
        let mut acc: Vec<BigInt> = vec![BigInt::zero(); self.cols];
        for i in (0..rows.len()).rev() {
            let lead = rows[i].v.lead().expect("pivot row").0;
            let needs_work = rows[i].v.iter().any(|(c, x)| {
                c > lead && pivot_of[c] != usize::MAX && {
                    let d = rows[pivot_of[c]].v.lead().expect("pivot row").1;
                    x.is_negative() || x >= d
                }
            });
            if !needs_work {
                continue;
            }
            let (done, todo) = rows.split_at_mut(i + 1);
            let row = &mut done[i];
            let touched_lo = lead;
            for (c, x) in row.v.iter() {
                acc[c] = x.clone();
            }
            let mut t = std::mem::take(&mut row.t);
            for c in touched_lo + 1..self.cols {
                let j = pivot_of[c];
                if j == usize::MAX || acc[c].is_zero() {
                    continue;
                }
                let other = &todo[j - i - 1];
                let d = other.v.lead().expect("pivot row").1;
                if !acc[c].is_negative() && &acc[c] < d {
                    continue;
                }
                let q = acc[c].div_floor(d);
                for (cc, y) in other.v.iter() {
                    acc[cc] -= &q * y;
                }
                if self.track {
                    t.add_scaled(&-q, &other.t);
                }
            }
            let mut entries = Vec::new();
            for (c, slot) in acc.iter_mut().enumerate().skip(touched_lo) {
                if !slot.is_zero() {
                    entries.push((c, std::mem::take(slot)));
                }
            }
            row.v = SparseRow::from_entries(entries);
            row.t = t;
        }
        (rows, self.kernel)
    }
}

/// Checks the structural Hermite conditions on a list of nonzero rows.
pub fn is_hermite_basis(rows: &[SparseRow]) -> bool {
    let mut prev: Option<usize> = None;
    for r in rows {
        let Some((c, v)) = r.lead() else { return false };
        if !v.is_positive() || prev.is_some_and(|p| p >= c) {
            return false;
        }
        prev = Some(c);
    }
    for (i, r) in rows.iter().enumerate() {
        let (c, d) = r.lead().expect("checked above");
        for above in &rows[..i] {
            let x = above.get(c).cloned().unwrap_or_default();
            if x.is_negative() || &x >= d {
                return false;
            }
        }
    }
    true
}
