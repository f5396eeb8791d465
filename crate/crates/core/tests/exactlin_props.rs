mod common;

use common::{ints, minor_gcd, rank_q, rref};
use gradedtor_core::exactlin::{
    hermite_basis, hnf, is_hermite_basis, saturate, snf, IntMatrix, Lattice, SparseRow,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn small_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        (
            Just(c),
            prop::collection::vec(prop::collection::vec(-6i64..=6, c), r),
        )
    })
}

fn mat(c: usize, rows: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_dense(c, rows).unwrap()
}

proptest! {
    #[test]
    fn transform_times_input_is_hermite((c, rows) in small_matrix(5, 5)) {
        let m = mat(c, &rows);
        let h = hnf(&m);
        prop_assert_eq!(h.transform.mul(&m).unwrap(), h.h.clone());
        prop_assert_eq!(h.transform.determinant().unwrap().abs(), BigInt::one());
        prop_assert!(is_hermite_basis(&h.h.rows()[..h.rank]));
        for k in h.left_kernel() {
            prop_assert!(m.left_apply(&k).is_zero());
        }
    }

    #[test]
    fn ranks_agree((c, rows) in small_matrix(5, 5)) {
        let m = mat(c, &rows);
        let oracle = rank_q(&ints(&rows), c);
        prop_assert_eq!(hnf(&m).rank, oracle);
        prop_assert_eq!(snf(&m).rank, oracle);
        prop_assert_eq!(hermite_basis(c, m.rows().to_vec()).len(), oracle);
    }

    #[test]
    fn both_hermite_routes_agree((c, rows) in small_matrix(6, 5)) {
        let m = mat(c, &rows);
        let h = hnf(&m);
        prop_assert_eq!(hermite_basis(c, m.rows().to_vec()), h.h.rows()[..h.rank].to_vec());
    }

    #[test]
    fn smith_matches_determinantal_divisors((c, rows) in small_matrix(3, 4)) {
        let m = mat(c, &rows);
        let s = snf(&m);
        let dense = ints(&rows);
        let mut prod = BigInt::one();
        for k in 1..=s.rank {
            prod *= &s.invariants[k - 1];
            prop_assert_eq!(&prod, &minor_gcd(&dense, c, k));
        }
        prop_assert!(minor_gcd(&dense, c, s.rank + 1).is_zero() || s.rank == rows.len().min(c));
        for w in s.invariants.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
    }

    #[test]
    fn saturation_is_idempotent_and_spans_same_space((c, rows) in small_matrix(4, 4)) {
        let l = Lattice::new(c, &mat(c, &rows)).unwrap();
        let s = saturate(&l);
        prop_assert_eq!(saturate(&s), s.clone());
        prop_assert!(s.contains_lattice(&l));
        prop_assert_eq!(s.rank(), l.rank());
        prop_assert!(s.smith().torsion().is_empty());
        // Same rational span.
        let dense = |l: &Lattice| l.basis_rows().iter().map(|r| r.to_dense(c)).collect::<Vec<_>>();
        prop_assert_eq!(rref(&dense(&l), c), rref(&dense(&s), c));
    }

    #[test]
    fn saturation_membership_brute_force(
        (c, rows) in small_matrix(2, 3),
        v in prop::collection::vec(-3i64..=3, 3),
    ) {
        let l = Lattice::new(c, &mat(c, &rows)).unwrap();
        let s = l.saturate();
        let v = &v[..c];
        let row = SparseRow::from(v.to_vec());
        // v lies in the saturation iff it lies in the rational span of L.
        let mut with_v = ints(&rows);
        with_v.push(v.iter().map(|&x| BigInt::from(x)).collect());
        let in_span = rank_q(&with_v, c) == rank_q(&ints(&rows), c);
        prop_assert_eq!(s.contains(&row), in_span);
        let mult = l.minimal_multiplier(&row).unwrap();
        prop_assert_eq!(mult.is_some(), in_span);
        if let Some(m) = mult {
            // m is the least positive integer with m v in L.
            prop_assert!(l.contains(&row.scaled(&m)));
            let mut j = BigInt::one();
            while j < m {
                prop_assert!(!l.contains(&row.scaled(&j)));
                j += 1;
            }
        }
    }
}

#[test]
fn unimodular_example() {
    let m = mat(3, &[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let s = snf(&m);
    assert_eq!(
        s.invariants,
        vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]
    );
    assert_eq!(s.determinantal_product(), m.determinant().unwrap().abs());
}
