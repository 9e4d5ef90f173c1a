//! Deterministic serialization: the text notation of the reference output
//! (`O_2,1 * O_1,3 = Q1*O_2,3 + ...`), golden-file JSON and CSV.
//!
//! Output order never depends on hashing or scheduling: tables are emitted in
//! basis order of `u`, `v`, `w`, then increasing Novikov degree.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::basis::{enumerate_basis, SchubertIndex};
use crate::error::{Error, Result};
use crate::poly::{Coeff, CurveDegree, NovikovPolynomial, QKClass};
use crate::qkring::{MultiplicationTable, OperatorMatrix};

/// An exact integer in JSON: a number when it fits in `i64`, otherwise a
/// decimal string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonInt(pub Coeff);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(x) => s.serialize_i64(x),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(x) => Ok(JsonInt(BigInt::from(x))),
            Raw::Str(s) => s.parse().map(JsonInt).map_err(serde::de::Error::custom),
        }
    }
}

/// One monomial `coeff · Q1^d1 Q2^d2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyTerm {
    pub d1: u32,
    pub d2: u32,
    pub coeff: JsonInt,
}

/// Terms of a polynomial in degree order.
pub fn poly_terms(p: &NovikovPolynomial) -> Vec<PolyTerm> {
    p.terms().map(|(d, c)| PolyTerm { d1: d.d1, d2: d.d2, coeff: JsonInt(c.clone()) }).collect()
}

/// Inverse of [`poly_terms`].
pub fn poly_from_terms(terms: &[PolyTerm]) -> NovikovPolynomial {
    NovikovPolynomial::from_terms(terms.iter().map(|t| (CurveDegree::new(t.d1, t.d2), t.coeff.0.clone())))
}

/// One class of a quantum class in JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassTerm {
    pub w: [u32; 2],
    pub poly: Vec<PolyTerm>,
}

/// JSON form of a quantum class; the zero class has an empty term array.
pub fn class_terms(c: &QKClass) -> Vec<ClassTerm> {
    c.terms().map(|(w, p)| ClassTerm { w: [w.i, w.j], poly: poly_terms(p) }).collect()
}

/// Inverse of [`class_terms`], validating indices against `n`.
pub fn class_from_terms(terms: &[ClassTerm], n: u32) -> Result<QKClass> {
    let mut out = QKClass::zero();
    for t in terms {
        let w = SchubertIndex::new(t.w[0], t.w[1], n)?;
        out.add_poly(w, &poly_from_terms(&t.poly));
    }
    Ok(out)
}

/// Text rendering of a class: one signed term per monomial, ordered by
/// degree, then positive before negative coefficients, then basis order.
/// The zero class renders as `0`.
pub fn class_text(c: &QKClass) -> String {
    let mut terms: Vec<(CurveDegree, bool, SchubertIndex, Coeff)> = c
        .structure_constants()
        .into_iter()
        .map(|(w, d, x)| (d, x.is_negative(), w, x))
        .collect();
    if terms.is_empty() {
        return "0".to_string();
    }
    terms.sort_by_key(|t| (t.0, t.1, t.2));
    let mut out = String::new();
    for (k, (d, neg, w, c)) in terms.iter().enumerate() {
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let a = c.abs();
        if !a.is_one() {
            write!(out, "{a}*").unwrap();
        }
        if *d != CurveDegree::ZERO {
            write!(out, "{d}*").unwrap();
        }
        write!(out, "{w}").unwrap();
    }
    out
}

/// `O_u * O_v = …`, the line format of the reference output file.
pub fn product_text(u: SchubertIndex, v: SchubertIndex, c: &QKClass) -> String {
    format!("{u} * {v} = {}", class_text(c))
}

/// A single product in JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductJson {
    pub n: u32,
    pub u: [u32; 2],
    pub v: [u32; 2],
    pub terms: Vec<ClassTerm>,
}

/// One structure-constant polynomial of the golden file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenEntry {
    pub u: [u32; 2],
    pub v: [u32; 2],
    pub w: [u32; 2],
    pub poly: Vec<PolyTerm>,
}

/// Golden-file schema: `{"n":…, "entries":[{"u","v","w","poly"}]}` with
/// only nonzero polynomials listed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenTable {
    pub n: u32,
    pub entries: Vec<GoldenEntry>,
}

impl GoldenTable {
    pub fn from_table(t: &MultiplicationTable) -> Self {
        let n = t.n();
        let basis = enumerate_basis(n).expect("table rank is valid");
        let mut entries = Vec::new();
        for u in &basis {
            for v in &basis {
                for (w, p) in t.matrix(*u).column(*v).terms() {
                    entries.push(GoldenEntry { u: [u.i, u.j], v: [v.i, v.j], w: [w.i, w.j], poly: poly_terms(p) });
                }
            }
        }
        GoldenTable { n, entries }
    }

    pub fn to_table(&self) -> Result<MultiplicationTable> {
        let n = self.n;
        let basis = enumerate_basis(n)?;
        let size = basis.len();
        let mut cols = vec![vec![QKClass::zero(); size]; size];
        for e in &self.entries {
            let u = SchubertIndex::new(e.u[0], e.u[1], n)?;
            let v = SchubertIndex::new(e.v[0], e.v[1], n)?;
            let w = SchubertIndex::new(e.w[0], e.w[1], n)?;
            let (ku, kv) = (crate::basis::linear_index(u, n)?, crate::basis::linear_index(v, n)?);
            cols[ku][kv].add_poly(w, &poly_from_terms(&e.poly));
        }
        let matrices = cols.into_iter().map(|c| OperatorMatrix::from_columns(n, c)).collect();
        MultiplicationTable::from_matrices(n, matrices)
    }
}

/// Golden-file JSON for a table (compact, one line, stable key order).
pub fn table_json(t: &MultiplicationTable) -> String {
    serde_json::to_string(&GoldenTable::from_table(t)).expect("serializable")
}

/// Parse a golden file back into a table.
pub fn table_from_json(s: &str) -> Result<MultiplicationTable> {
    let g: GoldenTable = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    g.to_table()
}

/// Header of the CSV table format.
pub const CSV_HEADER: &str = "u_i,u_j,v_i,v_j,w_i,w_j,d1,d2,coeff";

/// CSV with one structure constant per row, after the header line.
pub fn table_csv(t: &MultiplicationTable) -> String {
    let g = GoldenTable::from_table(t);
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for e in &g.entries {
        for p in &e.poly {
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{}",
                e.u[0], e.u[1], e.v[0], e.v[1], e.w[0], e.w[1], p.d1, p.d2, p.coeff.0
            )
            .unwrap();
        }
    }
    out
}

/// The whole table in text form, one product per line.
pub fn table_text(t: &MultiplicationTable) -> String {
    let basis = enumerate_basis(t.n()).expect("table rank is valid");
    let mut out = String::new();
    for u in &basis {
        for v in &basis {
            writeln!(out, "{}", product_text(*u, *v, t.matrix(*u).column(*v))).unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_class_renders() {
        assert_eq!(class_text(&QKClass::zero()), "0");
        assert!(class_terms(&QKClass::zero()).is_empty());
    }

    #[test]
    fn big_coefficient_round_trip() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let s = serde_json::to_string(&JsonInt(big.clone())).unwrap();
        assert_eq!(s, "\"123456789012345678901234567890\"");
        let back: JsonInt = serde_json::from_str(&s).unwrap();
        assert_eq!(back.0, big);
        let small: JsonInt = serde_json::from_str("-3").unwrap();
        assert_eq!(small.0, BigInt::from(-3));
    }
}
