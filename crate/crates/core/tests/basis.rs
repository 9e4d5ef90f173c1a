use qkflag::basis::*;
use qkflag::{Error, SchubertIndex};

fn idx(i: u32, j: u32, n: u32) -> SchubertIndex {
    SchubertIndex::new(i, j, n).unwrap()
}

/// The reference program's position map `k ↦ (i,j)`, 1-based `k`.
fn reference_coeffij(k: usize, n: usize) -> (u32, u32) {
    let i = k.div_ceil(n - 1);
    let j = if k - (i - 1) * (n - 1) < i { k - (i - 1) * (n - 1) } else { k + 1 - (i - 1) * (n - 1) };
    (i as u32, j as u32)
}

#[test]
fn enumerate_n3_order() {
    let got: Vec<(u32, u32)> = enumerate_basis(3).unwrap().iter().map(|w| (w.i, w.j)).collect();
    assert_eq!(got, vec![(1, 2), (1, 3), (2, 1), (2, 3), (3, 1), (3, 2)]);
}

#[test]
fn enumerate_matches_reference_positions() {
    for n in 3..=8u32 {
        let basis = enumerate_basis(n).unwrap();
        assert_eq!(basis.len(), (n * (n - 1)) as usize);
        for (k, w) in basis.iter().enumerate() {
            assert_eq!((w.i, w.j), reference_coeffij(k + 1, n as usize));
        }
    }
}

#[test]
fn counts() {
    assert_eq!(enumerate_basis(3).unwrap().len(), 6);
    assert_eq!(enumerate_basis(5).unwrap().len(), 20);
    assert_eq!(basis_size(7), 42);
}

#[test]
fn small_rank_rejected() {
    assert_eq!(enumerate_basis(2), Err(Error::InvalidRank(2)));
    assert!(SchubertIndex::new(1, 2, 2).is_err());
}

#[test]
fn linear_index_examples() {
    assert_eq!(linear_index(idx(1, 2, 3), 3).unwrap(), 0);
    assert_eq!(linear_index(idx(3, 1, 3), 3).unwrap(), 4);
}

#[test]
fn linear_index_roundtrip_and_bijection() {
    for n in 3..=6 {
        let mut seen = vec![false; basis_size(n)];
        for w in enumerate_basis(n).unwrap() {
            let k = linear_index(w, n).unwrap();
            assert!(!seen[k]);
            seen[k] = true;
            assert_eq!(from_linear(k, n).unwrap(), w);
        }
        assert!(seen.iter().all(|&b| b));
        assert!(from_linear(basis_size(n), n).is_err());
    }
}

#[test]
fn invalid_indices() {
    assert!(matches!(SchubertIndex::new(2, 2, 4), Err(Error::InvalidIndex { .. })));
    assert!(matches!(SchubertIndex::new(0, 2, 4), Err(Error::InvalidIndex { .. })));
    assert!(matches!(SchubertIndex::new(1, 5, 4), Err(Error::InvalidIndex { .. })));
    let bad = SchubertIndex { i: 3, j: 3 };
    assert!(linear_index(bad, 4).is_err());
}

#[test]
fn length_examples() {
    for n in 3..=8 {
        assert_eq!(length(idx(1, n, n), n), 0);
        assert_eq!(length(idx(n, 1, n), n), 2 * n - 3);
    }
    assert_eq!(length(idx(4, 1, 5), 5), 6);
}

#[test]
fn codim_examples() {
    assert_eq!(codim(idx(4, 1, 4), 4), 0);
    assert_eq!(codim(idx(3, 1, 4), 4), 1);
    assert_eq!(codim(idx(1, 4, 4), 4), 5);
}

#[test]
fn dual_examples() {
    for n in 3..=6 {
        assert_eq!(dual_index(SchubertIndex::h1(n), n), SchubertIndex::h2(n));
        assert_eq!(dual_index(SchubertIndex::point(n), n), SchubertIndex::point(n));
        for w in enumerate_basis(n).unwrap() {
            assert_eq!(dual_index(dual_index(w, n), n), w);
            assert_eq!(length(dual_index(w, n), n), length(w, n));
        }
    }
}

#[test]
fn length_range_and_extremes() {
    for n in 3..=8 {
        let lengths: Vec<u32> = enumerate_basis(n).unwrap().iter().map(|w| length(*w, n)).collect();
        assert!(lengths.iter().all(|&l| l <= 2 * n - 3));
        assert_eq!(lengths.iter().filter(|&&l| l == 0).count(), 1);
        assert_eq!(lengths.iter().filter(|&&l| l == 2 * n - 3).count(), 1);
    }
}

/// Poincaré polynomial of `Fl(1,n-1)`: `[n]_t [n-1]_t`, so the number of
/// classes of each length follows from a convolution.
#[test]
fn length_distribution_is_poincare_polynomial() {
    for n in 3..=8usize {
        let mut expected = vec![0usize; 2 * n - 2];
        for a in 0..n {
            for b in 0..n - 1 {
                expected[a + b] += 1;
            }
        }
        let mut got = vec![0usize; 2 * n - 2];
        for w in enumerate_basis(n as u32).unwrap() {
            got[length(w, n as u32) as usize] += 1;
        }
        assert_eq!(got, expected, "n = {n}");
    }
}

#[test]
fn display_uses_pair_notation() {
    assert_eq!(idx(2, 1, 3).to_string(), "O_2,1");
}
