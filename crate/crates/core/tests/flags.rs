mod common;

use common::{all_shapes, degree_vectors, pascal, signed_compositions};
use num_bigint::BigUint;
use qkflag::flags::*;
use qkflag::Error;

fn set(seqs: &[&[u64]]) -> AdmissibleSequenceSet {
    AdmissibleSequenceSet::from_sequences(seqs.iter().map(|s| s.to_vec()).collect())
}

fn shape(dims: &[u32], n: u32) -> FlagShape {
    FlagShape::new(dims.to_vec(), n).unwrap()
}

#[test]
fn shape_validation() {
    assert!(FlagShape::new(vec![2, 2], 4).is_err());
    assert!(FlagShape::new(vec![1, 4], 4).is_err());
    assert!(FlagShape::new(vec![0, 2], 4).is_err());
    assert!(FlagShape::new(vec![], 4).is_err());
}

#[test]
fn admissible_examples() {
    assert!(is_admissible(&set(&[&[1, 2]]), &shape(&[2], 3)).unwrap());
    assert!(!is_admissible(&set(&[&[2, 1]]), &shape(&[2], 3)).unwrap());
    assert!(is_admissible(&set(&[&[1], &[0, 1]]), &shape(&[1, 2], 3)).unwrap());
    assert!(!is_admissible(&set(&[&[0], &[1, 1]]), &shape(&[1, 2], 3)).unwrap());
    let wrong_sum = AdmissibleSequenceSet { sequences: vec![vec![1, 2]], degrees: vec![4] };
    assert!(!is_admissible(&wrong_sum, &shape(&[2], 3)).unwrap());
    assert!(matches!(is_admissible(&set(&[&[1, 2, 3]]), &shape(&[2], 3)), Err(Error::ShapeMismatch(_))));
}

#[test]
fn spread_examples() {
    assert_eq!(spread(&set(&[&[2, 2, 2], &[3, 3, 3, 3]])), 0);
    assert_eq!(spread(&set(&[&[1, 1], &[0, 1, 1, 1]])), 3);
    assert_eq!(spread(&set(&[&[0, 2]])), 2);
}

#[test]
fn balanced_examples() {
    assert_eq!(balanced_construct(&shape(&[2], 3), &[5]).unwrap().sequences, vec![vec![2, 3]]);
    assert_eq!(balanced_construct(&shape(&[2, 4], 5), &[2, 3]).unwrap().sequences, vec![vec![1, 1], vec![0, 1, 1, 1]]);
    assert_eq!(balanced_construct(&shape(&[1], 2), &[0]).unwrap().sequences, vec![vec![0]]);
    assert!(balanced_construct(&shape(&[1, 2], 3), &[1]).is_err());
}

#[test]
fn brute_force_examples() {
    assert_eq!(brute_force_balanced(&shape(&[2], 3), &[4], 8).unwrap().sequences, vec![vec![2, 2]]);
    assert_eq!(brute_force_balanced(&shape(&[3], 4), &[4], 8).unwrap().sequences, vec![vec![1, 1, 2]]);
    assert!(matches!(brute_force_balanced(&shape(&[3], 4), &[9], 8), Err(Error::BoundExceeded(_))));
}

/// Hand-counted admissible sets, checking the enumerator the oracle rests on.
#[test]
fn enumeration_counts() {
    // partitions of 4 into at most 3 parts: 4, 31, 22, 211
    assert_eq!(enumerate_admissible(&shape(&[3], 4), &[4], 8).unwrap().len(), 4);
    // I = {1,2}, d = (1,1): a_1 = (1); a_2 ∈ {(0,1)}; (1,0) is not sorted
    assert_eq!(enumerate_admissible(&shape(&[1, 2], 3), &[1, 1], 8).unwrap().len(), 1);
    // I = {1,2}, d = (2,2): a_1 = (2); a_2 ∈ {(0,2), (1,1)}
    assert_eq!(enumerate_admissible(&shape(&[1, 2], 3), &[2, 2], 8).unwrap().len(), 2);
    // I = {1,2}, d = (0,2): a_1 = (0) caps a_{2,1} at 0, so only (0,2)
    assert_eq!(enumerate_admissible(&shape(&[1, 2], 3), &[0, 2], 8).unwrap().len(), 1);
}

/// The construction agrees with the unique spread minimizer; a smaller grid
/// than the acceptance run keeps the unit test quick.
#[test]
fn construction_matches_oracle_small_grid() {
    for s in all_shapes(4) {
        for d in degree_vectors(s.m(), 6) {
            let built = balanced_construct(&s, &d).unwrap();
            assert!(is_admissible(&built, &s).unwrap());
            let oracle = brute_force_balanced(&s, &d, 6).unwrap();
            assert_eq!(built, oracle, "I={:?} d={d:?}", s.dims());
        }
    }
}

#[test]
fn splitting_examples() {
    let s = shape(&[2, 4], 5);
    assert!(splitting_predicate(&s, &[2, 8], 2).unwrap());
    assert!(!splitting_predicate(&s, &[2, 3], 2).unwrap());
    assert!(splitting_predicate(&shape(&[1, 2, 3], 4), &[0, 0, 0], 3).unwrap());
    assert!(matches!(splitting_predicate(&s, &[2, 3], 1), Err(Error::InvalidIndex { .. })));
    assert!(matches!(splitting_predicate(&s, &[2, 3], 3), Err(Error::InvalidIndex { .. })));
}

#[test]
fn splitting_implies_carry_over() {
    for s in all_shapes(5) {
        for d in degree_vectors(s.m(), 8) {
            let a = balanced_construct(&s, &d).unwrap();
            for k in 2..=s.m() {
                if splitting_predicate(&s, &d, k).unwrap() {
                    let prev = &a.sequences[k - 2];
                    assert_eq!(&a.sequences[k - 1][..prev.len()], &prev[..], "I={:?} d={d:?} k={k}", s.dims());
                }
            }
        }
    }
}

#[test]
fn theorem_examples() {
    let s = StabilizationInput { dims: vec![1, 3], n: 4, degrees: vec![6, 6], k: 1, r: 3 };
    assert!(theorem_conditions(&s).unwrap());
    let s = StabilizationInput { degrees: vec![5, 6], ..s };
    assert!(!theorem_conditions(&s).unwrap());
    let bad = StabilizationInput { dims: vec![3, 1], n: 4, degrees: vec![6, 6], k: 1, r: 3 };
    assert!(matches!(theorem_conditions(&bad), Err(Error::ShapeMismatch(_))));
    let bad_k = StabilizationInput { dims: vec![1, 3], n: 4, degrees: vec![6, 6], k: 3, r: 3 };
    assert!(theorem_conditions(&bad_k).is_err());
}

/// For a Grassmannian (`m = 1`, `k = 1`) the first two conditions are
/// vacuous and the third reads `d ≥ r n_1 + n_1 (⌊0/n⌋ + 1) = n_1 (r + 1)`,
/// which implies the sufficient condition `d ≥ r k`.
#[test]
fn theorem_grassmannian_case() {
    for n in 2..=6u32 {
        for k in 1..n {
            for r in 0..=4u64 {
                for d in 0..=30u64 {
                    let s = StabilizationInput { dims: vec![k], n, degrees: vec![d], k: 1, r };
                    let t = theorem_conditions(&s).unwrap();
                    assert_eq!(t, d >= k as u64 * (r + 1), "Gr({k},{n}) d={d} r={r}");
                    if t {
                        assert!(grassmannian_stabilized(k, n, d, r).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn stabilized_examples() {
    assert!(grassmannian_stabilized(2, 5, 6, 3).unwrap());
    assert!(!grassmannian_stabilized(2, 5, 5, 3).unwrap());
    assert!(grassmannian_stabilized(4, 5, 3, 3).unwrap());
    assert!(grassmannian_stabilized(0, 5, 3, 3).is_err());
    assert!(forget_first_stabilized(1, 2, 4, 2, 2).unwrap());
    assert!(!forget_first_stabilized(1, 2, 3, 2, 2).unwrap());
    assert!(forget_first_stabilized(2, 2, 3, 2, 2).is_err());
}

#[test]
fn vandermonde_examples() {
    assert_eq!(vandermonde_sum(3, 4, 2), BigUint::from(21u32));
    for n in 0..=6 {
        assert_eq!(vandermonde_sum(n, 5, 0), BigUint::from(1u32));
    }
    assert_eq!(vandermonde_sum(2, 2, 4), BigUint::from(1u32));
    assert_eq!(vandermonde_sum(2, 2, 5), BigUint::from(0u32));
}

#[test]
fn vandermonde_identity() {
    for n in 0..=10u64 {
        for m in 0..=10u64 {
            for big_n in 0..=20u64 {
                let want = BigUint::from(pascal((n + m) as usize, big_n as usize));
                assert_eq!(vandermonde_sum(n, m, big_n), want, "({n},{m},{big_n})");
            }
        }
    }
    // exact beyond machine integers
    assert_eq!(vandermonde_sum(100, 100, 100), binomial(200, 100));
    assert!(binomial(200, 100) > BigUint::from(u128::MAX));
}

#[test]
fn weighted_alternating_binomial_sum() {
    assert_eq!(alternating_weighted_binomial_sum(1), (-1).into());
    for n in 2..=30 {
        assert_eq!(alternating_weighted_binomial_sum(n), 0.into(), "n = {n}");
    }
}

#[test]
fn decomposition_examples() {
    assert_eq!(alternating_decomposition_sum(2, 2, 0, 0).unwrap(), 0);
    assert_eq!(alternating_decomposition_sum(1, 0, 1, 0).unwrap(), 1);
    assert_eq!(alternating_decomposition_sum(3, 0, 0, 0).unwrap(), 0);
    assert_eq!(alternating_decomposition_sum(1, 1, 2, 0).unwrap(), 0);
    assert!(matches!(alternating_decomposition_sum(200, 0, 0, 0), Err(Error::BoundExceeded(_))));
}

#[test]
fn decomposition_sum_matches_enumeration() {
    for a in 0..=4 {
        for b in 0..=4 {
            assert_eq!(alternating_decomposition_sum(a, b, 0, 0).unwrap(), signed_compositions(a, b), "({a},{b})");
        }
    }
}

#[test]
fn decomposition_lemma() {
    for d in 0..=4u64 {
        for delta in 0..=4u64 {
            for d0 in 0..=4u64 {
                for delta0 in 0..=4u64 {
                    let hyp = delta0 + 1 < delta || d0 + 1 < d;
                    let s = alternating_decomposition_sum(d, delta, d0, delta0).unwrap();
                    if hyp {
                        assert_eq!(s, 0, "({d},{delta},{d0},{delta0})");
                    }
                }
            }
        }
    }
}
