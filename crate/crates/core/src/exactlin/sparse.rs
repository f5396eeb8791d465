use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A sparse integer vector: strictly increasing column indices, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseRow {
    entries: Vec<(usize, BigInt)>,
}

impl SparseRow {
    pub fn new() -> Self {
        SparseRow {
            entries: Vec::new(),
        }
    }

    /// Builds a row from arbitrary `(column, value)` pairs; duplicates are summed and zeros dropped.
    pub fn from_entries(mut entries: Vec<(usize, BigInt)>) -> Self {
        entries.sort_by_key(|(c, _)| *c);
        let mut out: Vec<(usize, BigInt)> = Vec::with_capacity(entries.len());
        for (c, v) in entries {
            match out.last_mut() {
                Some((lc, lv)) if *lc == c => *lv += v,
                _ => out.push((c, v)),
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        SparseRow { entries: out }
    }

    pub fn from_dense(values: &[BigInt]) -> Self {
        SparseRow {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(c, v)| (c, v.clone()))
                .collect(),
        }
    }

    pub fn unit(col: usize) -> Self {
        SparseRow {
            entries: vec![(col, BigInt::one())],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, BigInt)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, BigInt)> {
        self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.entries.iter().map(|(c, v)| (*c, v))
    }

    pub fn lead(&self) -> Option<(usize, &BigInt)> {
        self.entries.first().map(|(c, v)| (*c, v))
    }

    pub fn get(&self, col: usize) -> Option<&BigInt> {
        self.entries
            .binary_search_by_key(&col, |(c, _)| *c)
            .ok()
            .map(|i| &self.entries[i].1)
    }

    pub fn max_col(&self) -> Option<usize> {
        self.entries.last().map(|(c, _)| *c)
    }

    pub fn to_dense(&self, len: usize) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); len];
        for (c, v) in &self.entries {
            out[*c] = v.clone();
        }
        out
    }

    pub fn negate(&mut self) {
        for (_, v) in self.entries.iter_mut() {
            *v = -std::mem::take(v);
        }
    }

    pub fn scaled(&self, factor: &BigInt) -> SparseRow {
        if factor.is_zero() {
            return SparseRow::new();
        }
        SparseRow {
            entries: self.entries.iter().map(|(c, v)| (*c, v * factor)).collect(),
        }
    }

    /// `self += factor * other`
    pub fn add_scaled(&mut self, factor: &BigInt, other: &SparseRow) {
        if factor.is_zero() || other.is_zero() {
            return;
        }
        *self = SparseRow::combine(&BigInt::one(), self, factor, other);
    }

    /// `a * x + b * y`
    pub fn combine(a: &BigInt, x: &SparseRow, b: &BigInt, y: &SparseRow) -> SparseRow {
        let mut out = Vec::with_capacity(x.len() + y.len());
        let (mut i, mut j) = (0, 0);
        let xs = &x.entries;
        let ys = &y.entries;
        while i < xs.len() || j < ys.len() {
            let take_x = j >= ys.len() || (i < xs.len() && xs[i].0 < ys[j].0);
            let take_y = i >= xs.len() || (j < ys.len() && ys[j].0 < xs[i].0);
            if take_x {
                let v = a * &xs[i].1;
                if !v.is_zero() {
                    out.push((xs[i].0, v));
                }
                i += 1;
            } else if take_y {
                let v = b * &ys[j].1;
                if !v.is_zero() {
                    out.push((ys[j].0, v));
                }
                j += 1;
            } else {
                let v = a * &xs[i].1 + b * &ys[j].1;
                if !v.is_zero() {
                    out.push((xs[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        SparseRow { entries: out }
    }

    pub fn dot(&self, other: &SparseRow) -> BigInt {
        let mut acc = BigInt::zero();
        let (mut i, mut j) = (0, 0);
        while i < self.entries.len() && j < other.entries.len() {
            match self.entries[i].0.cmp(&other.entries[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    acc += &self.entries[i].1 * &other.entries[j].1;
                    i += 1;
                    j += 1;
                }
            }
        }
        acc
    }

    /// Keeps only the listed columns, renumbering them by position in `keep` (which must be sorted).
    pub fn restrict(&self, keep: &[usize]) -> SparseRow {
        SparseRow {
            entries: self
                .entries
                .iter()
                .filter_map(|(c, v)| keep.binary_search(c).ok().map(|k| (k, v.clone())))
                .collect(),
        }
    }

    /// Inverse of [`restrict`](Self::restrict).
    pub fn lift(&self, keep: &[usize]) -> SparseRow {
        SparseRow {
            entries: self
                .entries
                .iter()
                .map(|(c, v)| (keep[*c], v.clone()))
                .collect(),
        }
    }

    pub fn max_abs(&self) -> BigInt {
        self.entries
            .iter()
            .map(|(_, v)| v.abs())
            .max()
            .unwrap_or_default()
    }
}

impl From<Vec<i64>> for SparseRow {
    fn from(values: Vec<i64>) -> Self {
        SparseRow::from_entries(
            values
                .into_iter()
                .enumerate()
                .map(|(c, v)| (c, BigInt::from(v)))
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(v: &[i64]) -> SparseRow {
        SparseRow::from(v.to_vec())
    }

    #[test]
    fn combine_cancels_to_zero() {
        let x = row(&[1, 0, 2]);
        let r = SparseRow::combine(&BigInt::from(2), &x, &BigInt::from(-2), &x);
        assert!(r.is_zero());
    }

    #[test]
    fn from_entries_merges_duplicates() {
        let r = SparseRow::from_entries(vec![
            (3, BigInt::from(1)),
            (1, BigInt::from(5)),
            (3, BigInt::from(-1)),
        ]);
        assert_eq!(r.entries(), &[(1, BigInt::from(5))]);
    }

    #[test]
    fn restrict_then_lift() {
        let r = row(&[0, 4, 0, -1, 7]);
        let keep = [1, 3, 4];
        assert_eq!(r.restrict(&keep).lift(&keep), r);
        assert_eq!(r.dot(&row(&[9, 1, 9, 1, 0])), BigInt::from(3));
    }
}
