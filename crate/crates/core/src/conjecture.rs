//! The conjectural closed formula for quantum Littlewood–Richardson
//! coefficients, built from translation maps `t_0…t_3`, degree operators and
//! a parity gate `Δ`, and its comparison against the algorithmic table.
//!
//! Disagreement is a reported outcome, not an error: the formula is a
//! conjecture and the comparator exists to test it.

use serde::Serialize;

use crate::basis::{codim, enumerate_basis, SchubertIndex};
use crate::error::{Error, Result};
use crate::poly::{Coeff, CurveDegree, NovikovPolynomial, QKClass};
use crate::qkring::MultiplicationTable;
use crate::render::JsonInt;

/// The image of a translation map: either a Schubert class or a pair with
/// equal components, which names no class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Target {
    Class(SchubertIndex),
    Degenerate(u32),
}

impl Target {
    pub fn class(self) -> Option<SchubertIndex> {
        match self {
            Target::Class(w) => Some(w),
            Target::Degenerate(_) => None,
        }
    }

    /// The underlying pair `(s,t)`.
    pub fn pair(self) -> (u32, u32) {
        match self {
            Target::Class(w) => (w.i, w.j),
            Target::Degenerate(s) => (s, s),
        }
    }
}

/// `x mod n + 1`, with `mod` the residue in `[0, n-1]`.
fn wrap(x: i64, n: u32) -> u32 {
    (x.rem_euclid(n as i64) + 1) as u32
}

/// The translation maps, with `u = (i,j)`, `v = (k,p)`:
/// `t0 = ((i+k-1) mod n + 1, (j+p-2) mod n + 1)`,
/// `t1 = ((i+k-2) mod n + 1, (j+p-2) mod n + 1)`,
/// `t2 = ((i+k-1) mod n + 1, (j+p-1) mod n + 1)`,
/// `t3 = ((i+k-2) mod n + 1, (j+p-1) mod n + 1)`.
pub fn translate(idx: u8, u: SchubertIndex, v: SchubertIndex, n: u32) -> Result<Target> {
    u.check(n)?;
    v.check(n)?;
    let (a, b) = match idx {
        0 => (1, 2),
        1 => (2, 2),
        2 => (1, 1),
        3 => (2, 1),
        _ => return Err(Error::ShapeMismatch(format!("translation index {idx} is not in 0..=3"))),
    };
    let s = wrap((u.i + v.i) as i64 - a, n);
    let t = wrap((u.j + v.j) as i64 - b, n);
    Ok(if s == t { Target::Degenerate(s) } else { Target::Class(SchubertIndex { i: s, j: t }) })
}

/// Degree operators with `u = (i,j)`, `v = (k,p)`, `w = (s,t)`:
/// `d1 = 1 - ⌊(i+k-s)/n⌋`, `d2 = ⌊(j+p-t)/n⌋` (floor toward `-∞`).
///
/// `w` is only used through its components, so degenerate targets are
/// accepted here.
pub fn degree_operator(idx: u8, u: SchubertIndex, v: SchubertIndex, w: Target, n: u32) -> Result<i64> {
    let (s, t) = w.pair();
    let n = n as i64;
    match idx {
        1 => Ok(1 - (u.i as i64 + v.i as i64 - s as i64).div_euclid(n)),
        2 => Ok((u.j as i64 + v.j as i64 - t as i64).div_euclid(n)),
        _ => Err(Error::ShapeMismatch(format!("degree operator index {idx} is not 1 or 2"))),
    }
}

/// The parity gate: with `e = codim w - codim u - codim v + (d1+d2)(n-1)`,
/// `Δ = 1` when `(-1)^e ≥ 0` (`e` even) and `0` otherwise.
pub fn delta(u: SchubertIndex, v: SchubertIndex, w: Target, n: u32) -> Result<u8> {
    u.check(n)?;
    v.check(n)?;
    let wc = match w {
        Target::Class(w) => w,
        Target::Degenerate(s) => return Err(Error::DegenerateTarget(s)),
    };
    wc.check(n)?;
    let d1 = degree_operator(1, u, v, w, n)?;
    let d2 = degree_operator(2, u, v, w, n)?;
    let e = codim(wc, n) as i64 - codim(u, n) as i64 - codim(v, n) as i64 + (d1 + d2) * (n as i64 - 1);
    Ok(if e.rem_euclid(2) == 0 { 1 } else { 0 })
}

/// How the bracket of `t1, t2, t3` terms is gated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GateConvention {
    /// The formula as printed: the bracket carries `1 - Δ(u,v,t1)`.
    AsPrinted,
    /// The opposite parity at `t1`: the bracket carries `Δ(u,v,t1)`.
    FlippedT1,
}

impl GateConvention {
    pub fn name(self) -> &'static str {
        match self {
            GateConvention::AsPrinted => "as printed",
            GateConvention::FlippedT1 => "flipped t1 gate",
        }
    }
}

/// A term of the conjectured product that cannot be represented because a
/// degree operator left `ℕ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeAnomaly {
    pub u: [u32; 2],
    pub v: [u32; 2],
    pub w: [u32; 2],
    pub d1: i64,
    pub d2: i64,
}

/// The conjectured product together with any degree anomalies met while
/// assembling it.
pub fn conjectured_product_detailed(
    u: SchubertIndex,
    v: SchubertIndex,
    n: u32,
    gate: GateConvention,
) -> Result<(QKClass, Vec<DegreeAnomaly>)> {
    let t: Vec<Target> = (0..4).map(|k| translate(k, u, v, n)).collect::<Result<_>>()?;
    let mut out = QKClass::zero();
    let mut anomalies = Vec::new();
    let mut add = |target: Target, sign: i64, out: &mut QKClass| -> Result<()> {
        let Some(w) = target.class() else { return Ok(()) };
        let d1 = degree_operator(1, u, v, target, n)?;
        let d2 = degree_operator(2, u, v, target, n)?;
        if d1 < 0 || d2 < 0 {
            anomalies.push(DegreeAnomaly { u: [u.i, u.j], v: [v.i, v.j], w: [w.i, w.j], d1, d2 });
            return Ok(());
        }
        let d = CurveDegree::new(d1 as u32, d2 as u32);
        out.add_poly(w, &NovikovPolynomial::monomial(d, sign));
        Ok(())
    };
    // Δ of a degenerate target is undefined. A degenerate t0 contributes
    // nothing; a degenerate t1 leaves its bracket closed, so t2 and t3 are
    // never used without it.
    let gate0 = match t[0] {
        Target::Class(_) => delta(u, v, t[0], n)?,
        Target::Degenerate(_) => 0,
    };
    if gate0 == 1 {
        add(t[0], 1, &mut out)?;
    }
    let open = match (t[1], gate) {
        (Target::Degenerate(_), _) => false,
        (Target::Class(_), GateConvention::AsPrinted) => delta(u, v, t[1], n)? == 0,
        (Target::Class(_), GateConvention::FlippedT1) => delta(u, v, t[1], n)? == 1,
    };
    if open {
        add(t[1], 1, &mut out)?;
        add(t[2], 1, &mut out)?;
        add(t[3], -1, &mut out)?;
    }
    Ok((out, anomalies))
}

/// `Δ(t0) Q^{d(t0)} O_{t0} + (1 - Δ(t1)) (Q^{d(t1)} O_{t1} + Q^{d(t2)} O_{t2}
/// - Q^{d(t3)} O_{t3})`, degenerate targets contributing zero.
pub fn conjectured_product(u: SchubertIndex, v: SchubertIndex, n: u32) -> Result<QKClass> {
    Ok(conjectured_product_detailed(u, v, n, GateConvention::AsPrinted)?.0)
}

/// One disagreeing structure constant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub u: [u32; 2],
    pub v: [u32; 2],
    pub w: [u32; 2],
    pub d1: u32,
    pub d2: u32,
    pub table: JsonInt,
    pub conjecture: JsonInt,
}

/// Every disagreement between the conjecture and a table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiffReport {
    pub n: u32,
    pub mismatches: Vec<Mismatch>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub anomalies: Vec<DegreeAnomaly>,
}

impl DiffReport {
    /// The conjecture agrees with the table at this `n`.
    pub fn is_empty(&self) -> bool {
        self.mismatches.is_empty() && self.anomalies.is_empty()
    }

    /// Number of ordered pairs `(u,v)` with at least one mismatch.
    pub fn failing_pairs(&self) -> usize {
        let mut pairs: Vec<_> = self.mismatches.iter().map(|m| (m.u, m.v)).collect();
        pairs.dedup();
        pairs.len()
    }
}

/// Structural difference of two classes as `(w, degree, left, right)`.
pub fn class_diff(a: &QKClass, b: &QKClass) -> Vec<(SchubertIndex, CurveDegree, Coeff, Coeff)> {
    let mut keys: Vec<(SchubertIndex, CurveDegree)> = a
        .structure_constants()
        .into_iter()
        .chain(b.structure_constants())
        .map(|(w, d, _)| (w, d))
        .collect();
    keys.sort();
    keys.dedup();
    keys.into_iter()
        .filter_map(|(w, d)| {
            let (x, y) = (a.coeff(w).coeff(d), b.coeff(w).coeff(d));
            (x != y).then_some((w, d, x, y))
        })
        .collect()
}

/// Compare two tables entry by entry, reporting the first as "table" and the
/// second as "conjecture". Used directly for self-comparison.
pub fn compare_products<F>(table: &MultiplicationTable, mut other: F) -> Result<DiffReport>
where
    F: FnMut(SchubertIndex, SchubertIndex) -> Result<(QKClass, Vec<DegreeAnomaly>)>,
{
    let n = table.n();
    let basis = enumerate_basis(n)?;
    let mut mismatches = Vec::new();
    let mut anomalies = Vec::new();
    for u in &basis {
        for v in &basis {
            let (c, an) = other(*u, *v)?;
            anomalies.extend(an);
            for (w, d, x, y) in class_diff(table.matrix(*u).column(*v), &c) {
                mismatches.push(Mismatch {
                    u: [u.i, u.j],
                    v: [v.i, v.j],
                    w: [w.i, w.j],
                    d1: d.d1,
                    d2: d.d2,
                    table: JsonInt(x),
                    conjecture: JsonInt(y),
                });
            }
        }
    }
    Ok(DiffReport { n, mismatches, anomalies })
}

/// Compare the conjecture with the table over all ordered pairs.
pub fn compare_with_table(table: &MultiplicationTable) -> Result<DiffReport> {
    compare_with_table_gate(table, GateConvention::AsPrinted)
}

/// [`compare_with_table`] under a chosen gate convention.
pub fn compare_with_table_gate(table: &MultiplicationTable, gate: GateConvention) -> Result<DiffReport> {
    let n = table.n();
    compare_products(table, |u, v| conjectured_product_detailed(u, v, n, gate))
}
