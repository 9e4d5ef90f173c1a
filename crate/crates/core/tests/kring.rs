use qkflag::basis::{codim, enumerate_basis};
use qkflag::kring::*;
use qkflag::poly::{classical_limit, Coeff, KClass};
use qkflag::render::table_from_json;
use qkflag::SchubertIndex;

fn idx(i: u32, j: u32, n: u32) -> SchubertIndex {
    SchubertIndex::new(i, j, n).unwrap()
}

fn kc(terms: &[((u32, u32), i64)], n: u32) -> KClass {
    KClass::from_terms(terms.iter().map(|&((i, j), c)| (idx(i, j, n), c)))
}

fn golden(n: u32) -> String {
    std::fs::read_to_string(format!("{}/tests/data/golden_n{n}.json", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

#[test]
fn k_product_examples() {
    for n in 3..=6 {
        for v in enumerate_basis(n).unwrap() {
            assert_eq!(k_product(SchubertIndex::unit(n), v, n).unwrap(), KClass::basis(v));
        }
    }
    assert_eq!(k_product(idx(4, 1, 5), idx(3, 5, 5), 5).unwrap(), kc(&[((2, 5), 1)], 5));
    for n in 4..=6 {
        let expected = kc(&[((1, 2), 1), ((2, 3), 1), ((1, 3), -1)], n);
        assert_eq!(k_product(SchubertIndex::h2(n), idx(2, 1, n), n).unwrap(), expected);
    }
}

#[test]
fn k_product_rejects_invalid() {
    assert!(k_product(SchubertIndex { i: 2, j: 2 }, idx(1, 2, 3), 3).is_err());
    assert!(k_product(idx(1, 2, 3), idx(1, 2, 3), 2).is_err());
}

/// The `Q → 0` limit of the reference program's tables.
#[test]
fn k_product_matches_reference_classical_limit() {
    for n in 3..=5 {
        let table = table_from_json(&golden(n)).unwrap();
        for u in enumerate_basis(n).unwrap() {
            for v in enumerate_basis(n).unwrap() {
                let reference = classical_limit(table.matrix(u).column(v));
                assert_eq!(k_product(u, v, n).unwrap(), reference, "n={n} {u}*{v}");
            }
        }
    }
}

#[test]
fn k_class_product_examples() {
    let n = 4;
    let b = kc(&[((2, 1), 1), ((1, 3), -2)], n);
    assert!(k_class_product(&KClass::zero(), &b, n).unwrap().is_zero());
    assert_eq!(k_class_product(&KClass::basis(SchubertIndex::unit(n)), &b, n).unwrap(), b);
    let (u, v, w) = (idx(3, 1, n), idx(2, 4, n), idx(4, 2, n));
    let lhs = k_class_product(&kc(&[((3, 1), 1), ((2, 4), 1)], n), &KClass::basis(w), n).unwrap();
    let rhs = &k_product(u, w, n).unwrap() + &k_product(v, w, n).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn chow_product_examples() {
    assert!(chow_product(idx(1, 3, 5), idx(2, 4, 5), 5).unwrap().is_zero());
    assert_eq!(chow_product(idx(4, 2, 5), idx(4, 3, 5), 5).unwrap(), kc(&[((2, 4), 1), ((3, 5), 1)], 5));
    assert_eq!(chow_product(idx(4, 1, 5), idx(3, 5, 5), 5).unwrap(), kc(&[((2, 5), 1)], 5));
}

#[test]
fn commutative_and_unital() {
    for n in 3..=6 {
        let basis = enumerate_basis(n).unwrap();
        for &u in &basis {
            assert_eq!(k_product(u, SchubertIndex::unit(n), n).unwrap(), KClass::basis(u));
            for &v in &basis {
                assert_eq!(k_product(u, v, n).unwrap(), k_product(v, u, n).unwrap(), "n={n} {u}*{v}");
            }
        }
    }
}

#[test]
fn associative() {
    for n in 3..=5 {
        let basis = enumerate_basis(n).unwrap();
        for &a in &basis {
            for &b in &basis {
                let ab = k_product(a, b, n).unwrap();
                for &c in &basis {
                    let left = k_class_product(&ab, &KClass::basis(c), n).unwrap();
                    let bc = k_product(b, c, n).unwrap();
                    let right = k_class_product(&KClass::basis(a), &bc, n).unwrap();
                    assert_eq!(left, right, "n={n} ({a}*{b})*{c}");
                }
            }
        }
    }
}

#[test]
fn grading_and_chow_stratum() {
    for n in 3..=6 {
        let basis = enumerate_basis(n).unwrap();
        for &u in &basis {
            for &v in &basis {
                let base = codim(u, n) + codim(v, n);
                let k = k_product(u, v, n).unwrap();
                let chow = chow_product(u, v, n).unwrap();
                assert!(k.terms().all(|(w, _)| codim(*w, n) >= base));
                assert!(chow.terms().all(|(w, _)| codim(*w, n) == base));
                let stratum = KClass::from_terms(k.terms().filter(|(w, _)| codim(**w, n) == base).map(|(w, c)| (*w, c.clone())));
                assert_eq!(stratum, chow, "n={n} {u}*{v}");
            }
        }
    }
}

#[test]
fn brion_positivity() {
    for n in 3..=6 {
        let basis = enumerate_basis(n).unwrap();
        for &u in &basis {
            for &v in &basis {
                for (w, c) in k_product(u, v, n).unwrap().terms() {
                    let e = codim(*w, n) - codim(u, n) - codim(v, n);
                    let signed = if e.is_multiple_of(2) { c.clone() } else { -c.clone() };
                    assert!(signed >= Coeff::from(0), "n={n} {u}*{v} at {w}");
                }
            }
        }
    }
}
