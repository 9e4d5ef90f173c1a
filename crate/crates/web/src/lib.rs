//! WebAssembly bindings for a small interactive page: multiply two Schubert
//! classes, list the multiplication row of a class, and compare the table
//! against the conjectural closed formula.
//!
//! The `*_json` and `product_line` functions are plain Rust so they can be
//! tested natively; the `#[wasm_bindgen]` wrappers only convert errors.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use qkflag::basis::enumerate_basis;
use qkflag::conjecture::{class_diff, conjectured_product_detailed, GateConvention};
use qkflag::qkring::qk_product;
use qkflag::render::{class_text, product_text};
use qkflag::{build_table, MultiplicationTable, SchubertIndex};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest rank offered by the page; the table grows like `n^6`.
pub const MAX_RANK: u32 = 9;

thread_local! {
    static TABLES: RefCell<HashMap<u32, Rc<MultiplicationTable>>> = RefCell::new(HashMap::new());
}

/// Errors are reported to the page as plain messages.
pub type Result<T> = std::result::Result<T, String>;

fn table(n: u32) -> Result<Rc<MultiplicationTable>> {
    if n > MAX_RANK {
        return Err(format!("rank n = {n} is above the demo limit of {MAX_RANK}"));
    }
    if let Some(t) = TABLES.with(|c| c.borrow().get(&n).cloned()) {
        return Ok(t);
    }
    let t = Rc::new(build_table(n).map_err(|e| e.to_string())?);
    TABLES.with(|c| c.borrow_mut().insert(n, t.clone()));
    Ok(t)
}

fn pair(i: u32, j: u32, n: u32) -> Result<SchubertIndex> {
    SchubertIndex::new(i, j, n).map_err(|e| e.to_string())
}

fn msg(e: qkflag::Error) -> String {
    e.to_string()
}

/// `O_u * O_v = …` in quantum K-theory.
pub fn product_line(n: u32, ui: u32, uj: u32, vi: u32, vj: u32) -> Result<String> {
    let (u, v) = (pair(ui, uj, n)?, pair(vi, vj, n)?);
    Ok(product_text(u, v, &qk_product(u, v, n, &*table(n)?).map_err(msg)?))
}

#[derive(Serialize)]
struct RowEntry {
    v: String,
    product: String,
}

/// Every product `O_u * O_v`, `v` in basis order, as a JSON array of
/// `{"v", "product"}` objects.
pub fn row_json(n: u32, ui: u32, uj: u32) -> Result<String> {
    let u = pair(ui, uj, n)?;
    let t = table(n)?;
    let rows = enumerate_basis(n).map_err(msg)?
        .into_iter()
        .map(|v| Ok(RowEntry { v: v.to_string(), product: class_text(&qk_product(u, v, n, &t).map_err(msg)?) }))
        .collect::<Result<Vec<_>>>()?;
    Ok(serde_json::to_string(&rows).expect("row serializes"))
}

#[derive(Serialize)]
struct Comparison {
    table: String,
    formula: String,
    agree: bool,
    differences: Vec<Difference>,
}

#[derive(Serialize)]
struct Difference {
    w: String,
    degree: String,
    table: String,
    formula: String,
}

/// The table product against the conjectural formula for one pair, with
/// the printed gate or the flipped `t1` gate.
pub fn compare_json(n: u32, ui: u32, uj: u32, vi: u32, vj: u32, flipped: bool) -> Result<String> {
    let (u, v) = (pair(ui, uj, n)?, pair(vi, vj, n)?);
    let gate = if flipped { GateConvention::FlippedT1 } else { GateConvention::AsPrinted };
    let actual = qk_product(u, v, n, &*table(n)?).map_err(msg)?;
    let (formula, _) = conjectured_product_detailed(u, v, n, gate).map_err(msg)?;
    let differences: Vec<Difference> = class_diff(&actual, &formula)
        .into_iter()
        .map(|(w, d, a, b)| Difference {
            w: w.to_string(),
            degree: d.to_string(),
            table: a.to_string(),
            formula: b.to_string(),
        })
        .collect();
    let out = Comparison {
        table: class_text(&actual),
        formula: class_text(&formula),
        agree: differences.is_empty(),
        differences,
    };
    Ok(serde_json::to_string(&out).expect("comparison serializes"))
}

fn js(e: String) -> JsError {
    JsError::new(&e)
}

#[wasm_bindgen]
pub fn product(n: u32, ui: u32, uj: u32, vi: u32, vj: u32) -> std::result::Result<String, JsError> {
    product_line(n, ui, uj, vi, vj).map_err(js)
}

#[wasm_bindgen(js_name = multiplicationRow)]
pub fn multiplication_row(n: u32, ui: u32, uj: u32) -> std::result::Result<String, JsError> {
    row_json(n, ui, uj).map_err(js)
}

#[wasm_bindgen(js_name = compareConjecture)]
pub fn compare_conjecture(n: u32, ui: u32, uj: u32, vi: u32, vj: u32, flipped: bool) -> std::result::Result<String, JsError> {
    compare_json(n, ui, uj, vi, vj, flipped).map_err(js)
}
