//! Closed-form products in the Grothendieck ring `K(Fl(1,n-1))` and in the
//! Chow ring.

use num_bigint::BigInt;

use crate::basis::SchubertIndex;
use crate::error::Result;
use crate::poly::KClass;

/// `O_u · O_v` in `K(X)`.
///
/// With `u = (k,p)` and `v = (i,j)`: when `i+k-n ≥ j+p`, `i < j` or `k < p`
/// the product is the single class `O_{i+k-n, j+p-1}`; otherwise it is
/// `O_{i+k-n-1, j+p-1} + O_{i+k-n, j+p} - O_{i+k-n-1, j+p}`. Any term with a
/// first entry below 1, a second entry above `n`, or equal entries is zero.
pub fn k_product(u: SchubertIndex, v: SchubertIndex, n: u32) -> Result<KClass> {
    u.check(n)?;
    v.check(n)?;
    Ok(k_product_unchecked(u, v, n))
}

pub(crate) fn k_product_unchecked(u: SchubertIndex, v: SchubertIndex, n: u32) -> KClass {
    let (k, p) = (u.i as i64, u.j as i64);
    let (i, j) = (v.i as i64, v.j as i64);
    let a = i + k - n as i64;
    let b = j + p;
    let mut out = KClass::zero();
    if a >= b || i < j || k < p {
        out.add_signed(a, b - 1, n, 1);
    } else {
        out.add_signed(a - 1, b - 1, n, 1);
        out.add_signed(a, b, n, 1);
        out.add_signed(a - 1, b, n, -1);
    }
    out
}

/// Bilinear extension of [`k_product`].
pub fn k_class_product(a: &KClass, b: &KClass, n: u32) -> Result<KClass> {
    for (w, _) in a.terms().chain(b.terms()) {
        w.check(n)?;
    }
    let mut out = KClass::zero();
    for (u, cu) in a.terms() {
        for (v, cv) in b.terms() {
            let c: BigInt = cu * cv;
            out.add_assign_scaled(&k_product_unchecked(*u, *v, n), &c);
        }
    }
    Ok(out)
}

/// `[X(u)] ∪ [X(v)]` in the Chow ring, as an integer combination of
/// Schubert cycles `[X(w)]`.
///
/// With `u = (k,l)` and `v = (i,j)`: zero if `i+k ≤ n` or `j+l ≥ n+2`;
/// `[X(i+k-n-1, j+l-1)] + [X(i+k-n, j+l)]` if `1 ≤ i+k-n ≤ j+l-1 ≤ n`,
/// `i > j` and `k > l`; `[X(i+k-n, j+l-1)]` otherwise.
pub fn chow_product(u: SchubertIndex, v: SchubertIndex, n: u32) -> Result<KClass> {
    u.check(n)?;
    v.check(n)?;
    let (k, l) = (u.i as i64, u.j as i64);
    let (i, j) = (v.i as i64, v.j as i64);
    let nn = n as i64;
    let a = i + k - nn;
    let b = j + l - 1;
    let mut out = KClass::zero();
    if i + k <= nn || j + l >= nn + 2 {
        return Ok(out);
    }
    if 1 <= a && a <= b && b <= nn && i > j && k > l {
        out.add_signed(a - 1, b, n, 1);
        out.add_signed(a, b + 1, n, 1);
    } else {
        out.add_signed(a, b, n, 1);
    }
    Ok(out)
}
