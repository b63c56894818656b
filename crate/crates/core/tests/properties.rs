//! Property tests over randomly generated matrices and lattices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use latcore::exactmat::{det_int, hnf, snf, IntMatrix};
use latcore::lattice::{Form, Lattice};
use latcore::shortvec;

fn mat(entries: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_rows(
        entries
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect(),
    )
}

fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    proptest::collection::vec(proptest::collection::vec(-6i64..=6, cols), rows)
}

/// Random unimodular matrix from a word of elementary row operations.
fn unimodular(n: usize) -> impl Strategy<Value = Vec<(usize, usize, i64)>> {
    proptest::collection::vec((0..n, 0..n, -2i64..=2), 0..3 * n)
}

fn apply_unimodular(n: usize, ops: &[(usize, usize, i64)]) -> IntMatrix {
    let mut u = IntMatrix::identity(n);
    for &(i, j, q) in ops {
        if i == j || q == 0 {
            continue;
        }
        for c in 0..n {
            let v = u.at(i, c) + BigInt::from(q) * u.at(j, c);
            *u.at_mut(i, c) = v;
        }
    }
    u
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn snf_identity_and_divisor_chain(entries in small_matrix(4, 4)) {
        let a = mat(&entries);
        let d = snf(&a);
        prop_assert_eq!(d.u.mul(&a).mul(&d.v), d.s.clone());
        let du = det_int(&d.u);
        let dv = det_int(&d.v);
        prop_assert!(du == BigInt::one() || du == -BigInt::one());
        prop_assert!(dv == BigInt::one() || dv == -BigInt::one());
        for w in d.divisors.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
    }

    #[test]
    fn snf_divisors_invariant_under_unimodular(
        entries in small_matrix(4, 4),
        left in unimodular(4),
        right in unimodular(4),
    ) {
        let a = mat(&entries);
        let u = apply_unimodular(4, &left);
        let v = apply_unimodular(4, &right);
        let d1 = snf(&a);
        let d2 = snf(&u.mul(&a).mul(&v));
        prop_assert_eq!(d1.divisors, d2.divisors);
    }

    #[test]
    fn hnf_canonical_for_row_space(entries in small_matrix(4, 5), ops in unimodular(4)) {
        let a = mat(&entries);
        let u = apply_unimodular(4, &ops);
        let (h1, t1) = hnf(&a);
        let (h2, _) = hnf(&u.mul(&a));
        prop_assert_eq!(t1.mul(&a), h1.clone());
        // Same row space => identical nonzero HNF rows.
        prop_assert_eq!(h1.without_zero_rows(), h2.without_zero_rows());
        // Idempotence.
        let (h3, _) = hnf(&h1);
        prop_assert_eq!(h3, h1);
    }

    #[test]
    fn det_multiplicative(a in small_matrix(3, 3), b in small_matrix(3, 3)) {
        let a = mat(&a);
        let b = mat(&b);
        prop_assert_eq!(det_int(&a.mul(&b)), det_int(&a) * det_int(&b));
    }

    #[test]
    fn dual_involution_and_index_law(entries in small_matrix(4, 4)) {
        let a = mat(&entries);
        prop_assume!(!det_int(&a).is_zero());
        let l = Lattice::from_int_basis(Form::identity(4), a);
        let d = l.dual();
        prop_assert!(d.dual().eq_lattice(&l));
        prop_assert_eq!(l.determinant() * d.determinant(), BigRational::one());
        // det(2L) = |L : 2L|^2 det(L) with |L : 2L| = 2^4.
        let twice = l.scaled_copy(&BigInt::from(2));
        prop_assert_eq!(l.index_of(&twice).unwrap(), BigInt::from(16));
        prop_assert_eq!(twice.determinant(), BigRational::from_integer(BigInt::from(256)) * l.determinant());
    }

    #[test]
    fn sum_and_intersection_bracket(a in small_matrix(3, 3), b in small_matrix(3, 3)) {
        let a = mat(&a);
        let b = mat(&b);
        prop_assume!(!det_int(&a).is_zero() && !det_int(&b).is_zero());
        let la = Lattice::from_int_basis(Form::identity(3), a);
        let lb = Lattice::from_int_basis(Form::identity(3), b);
        let sum = la.sum(&lb).unwrap();
        let inter = la.intersect(&lb).unwrap();
        prop_assert!(sum.contains(&la).unwrap());
        prop_assert!(sum.contains(&lb).unwrap());
        prop_assert!(la.contains(&inter).unwrap());
        prop_assert!(lb.contains(&inter).unwrap());
        // |L_a : L_a cap L_b| = |L_a + L_b : L_b| (second isomorphism).
        prop_assert_eq!(
            la.index_of(&inter).unwrap(),
            sum.index_of(&lb).unwrap()
        );
    }

    #[test]
    fn norm_slices_closed_under_negation(entries in small_matrix(3, 3)) {
        let a = mat(&entries);
        prop_assume!(!det_int(&a).is_zero());
        let l = Lattice::from_int_basis(Form::identity(3), a);
        let min = shortvec::min_norm(&l).unwrap();
        let slice = shortvec::vectors_of_norm(&l, &min);
        prop_assert!(slice.count() > 0);
        for v in &slice.vectors {
            let neg: Vec<BigInt> = v.iter().map(|x| -x.clone()).collect();
            prop_assert!(slice.vectors.binary_search(&neg).is_ok());
            let vec = l.vector(v);
            prop_assert_eq!(l.form().norm(&vec), min.clone());
        }
        // Determinism.
        prop_assert_eq!(shortvec::vectors_of_norm(&l, &min), slice);
    }
}
