//! Shared fixtures for the criterion benches.

use gradedtor_core::idealcalc::{coordinates, degree_basis};
use gradedtor_core::symfam::h_poly;
use gradedtor_core::{RingSpec, SparseRow};

/// Coordinate rows of every `m * h_i` in degree `d` for rank `n`, class `k`:
/// the unreduced generators of one graded piece of the ideal.
pub fn relation_rows(n: u32, k: i64, d: u32) -> (usize, Vec<SparseRow>) {
    let ring = RingSpec::gauge(n, d);
    let ncols = degree_basis(&ring, d).expect("degree within bound").len();
    let mut rows = Vec::new();
    for i in 2..=d / 2 {
        let h = h_poly(i, n, k).expect("index >= 1");
        for m in ring.monomial_basis(d - 2 * i).expect("degree within bound") {
            rows.push(coordinates(&ring, d, &h.mul_monomial(&m)).expect("homogeneous"));
        }
    }
    (ncols, rows)
}

#[cfg(test)]
mod tests {
    #[test]
    fn fixture_shape() {
        let (ncols, rows) = super::relation_rows(2, 1, 8);
        assert_eq!(ncols, 17);
        assert_eq!(rows.len(), 8);
    }
}
