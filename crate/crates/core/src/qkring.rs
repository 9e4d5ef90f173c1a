//! Chevalley operators for `O_{h1}`, `O_{h2}` in `QK_s(X)` and the iterative
//! construction of the full `⋆`-multiplication table.
//!
//! The operators are assembled as the classical K-product plus the quantum
//! corrections of degree `l1`, `l2` and `l1 + l2`. Two places where the
//! displayed case table and the algorithm prose disagree with that
//! derivation can be switched through [`TableVariant`], so that the
//! verification suite can arbitrate between the readings.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::basis::{self, basis_size, check_rank, linear_index_unchecked, SchubertIndex};
use crate::error::{Error, Result};
use crate::par::par_map;
use crate::kring::k_product_unchecked;
use crate::poly::{CurveDegree, NovikovPolynomial, QKClass};

/// One of the two divisor classes generating `A^1(X)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Divisor {
    H1,
    H2,
}

impl Divisor {
    /// `h1 = (n-1,1)`, `h2 = (n,2)`.
    pub fn index(self, n: u32) -> SchubertIndex {
        match self {
            Divisor::H1 => SchubertIndex::h1(n),
            Divisor::H2 => SchubertIndex::h2(n),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Divisor::H1 => "h1",
            Divisor::H2 => "h2",
        }
    }
}

/// Which reading of a disputed formula to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RowReading {
    /// Follows the correlator derivation (and the reference code).
    Derived,
    /// Transcribes the displayed case table or the algorithm prose verbatim.
    Displayed,
}

/// Switches for the three disputed formulas.
///
/// * `quantum_rows`: the quantum part of `h1 ⋆ O_{2,1}` is `Q1([O_X] - O_{h2})`
///   when derived, `Q1([O_X] - O_{h1})` as displayed; dually
///   `h2 ⋆ O_{n,n-1}` carries `Q2([O_X] - O_{h1})` vs `Q2([O_X] - O_{h2})`.
/// * `h2_row5`: `h2 ⋆ O_{p+1,p}` is `O_{p,p+1} + O_{p+1,p+2} - O_{p,p+2}` when
///   derived, `O_{p,p+1} + O_{p-1,p} - O_{p-1,p+1}` as displayed (for
///   `1 < p+1 < n-1`).
/// * `step_c`: `M_{1,2} = H1·M_{2,1} + Q1·(H2 - Id)` when derived,
///   `H1·M_{2,1} - Q1·(Id - H1)` as in the algorithm prose.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TableVariant {
    pub quantum_rows: RowReading,
    pub h2_row5: RowReading,
    pub step_c: RowReading,
}

impl TableVariant {
    /// Everything as derived; this is the reading the library uses by default.
    pub const DERIVED: TableVariant = TableVariant {
        quantum_rows: RowReading::Derived,
        h2_row5: RowReading::Derived,
        step_c: RowReading::Derived,
    };

    /// Short human-readable label.
    pub fn label(&self) -> String {
        let r = |x: RowReading| match x {
            RowReading::Derived => "derived",
            RowReading::Displayed => "displayed",
        };
        format!(
            "quantum rows {}, h2 row 5 {}, step (c) {}",
            r(self.quantum_rows),
            r(self.h2_row5),
            r(self.step_c)
        )
    }
}

impl Default for TableVariant {
    fn default() -> Self {
        Self::DERIVED
    }
}

/// The quantum part of `O_h ⋆ O_v` (all terms of positive Novikov degree).
///
/// For `h1`: `Q1·O_{n-1,n} + Q1Q2·(O_{n,1} - O_{n-1,1})` at `v = (1,n)`;
/// `Q1·O_{n,p}` at `v = (1,p)`, `p < n`; `Q1·(O_{n,1} - O_{n,2})` at
/// `v = (2,1)`; zero otherwise. For `h2` the mirror image:
/// `Q2·O_{1,2} + Q1Q2·(O_{n,1} - O_{n,2})` at `(1,n)`; `Q2·O_{k,1}` at `(k,n)`,
/// `k > 1`; `Q2·(O_{n,1} - O_{n-1,1})` at `(n,n-1)`; zero otherwise.
pub fn quantum_correction(h: Divisor, v: SchubertIndex, n: u32) -> Result<QKClass> {
    v.check(n)?;
    Ok(quantum_correction_with(h, v, n, RowReading::Derived))
}

fn quantum_correction_with(h: Divisor, v: SchubertIndex, n: u32, reading: RowReading) -> QKClass {
    let q1 = CurveDegree::L1;
    let q2 = CurveDegree::L2;
    let q12 = CurveDegree::L1_L2;
    let nn = n as i64;
    let (k, p) = (v.i as i64, v.j as i64);
    let mut out = QKClass::zero();
    match h {
        Divisor::H1 => {
            if k == 1 && p == nn {
                out.add_signed(nn - 1, nn, n, q1, 1);
                out.add_signed(nn, 1, n, q12, 1);
                out.add_signed(nn - 1, 1, n, q12, -1);
            } else if k == 1 {
                out.add_signed(nn, p, n, q1, 1);
            } else if k == 2 && p == 1 {
                out.add_signed(nn, 1, n, q1, 1);
                match reading {
                    RowReading::Derived => out.add_signed(nn, 2, n, q1, -1),
                    RowReading::Displayed => out.add_signed(nn - 1, 1, n, q1, -1),
                }
            }
        }
        Divisor::H2 => {
            if k == 1 && p == nn {
                out.add_signed(1, 2, n, q2, 1);
                out.add_signed(nn, 1, n, q12, 1);
                out.add_signed(nn, 2, n, q12, -1);
            } else if p == nn {
                out.add_signed(k, 1, n, q2, 1);
            } else if k == nn && p == nn - 1 {
                out.add_signed(nn, 1, n, q2, 1);
                match reading {
                    RowReading::Derived => out.add_signed(nn - 1, 1, n, q2, -1),
                    RowReading::Displayed => out.add_signed(nn, 2, n, q2, -1),
                }
            }
        }
    }
    out
}

/// `O_h ⋆ O_v` as classical product plus [`quantum_correction`].
pub fn chevalley_apply(h: Divisor, v: SchubertIndex, n: u32) -> Result<QKClass> {
    v.check(n)?;
    Ok(chevalley_apply_with(h, v, n, TableVariant::DERIVED))
}

fn chevalley_apply_with(h: Divisor, v: SchubertIndex, n: u32, variant: TableVariant) -> QKClass {
    let (k, p) = (v.i as i64, v.j as i64);
    let nn = n as i64;
    let classical = if h == Divisor::H2
        && variant.h2_row5 == RowReading::Displayed
        && k == p + 1
        && 1 < k
        && k < nn - 1
    {
        let mut c = QKClass::zero();
        c.add_signed(p, p + 1, n, CurveDegree::ZERO, 1);
        c.add_signed(p - 1, p, n, CurveDegree::ZERO, 1);
        c.add_signed(p - 1, p + 1, n, CurveDegree::ZERO, -1);
        c
    } else {
        k_product_unchecked(h.index(n), v, n).to_qk()
    };
    &classical + &quantum_correction_with(h, v, n, variant.quantum_rows)
}

/// A square matrix over `ℤ[Q1,Q2]` indexed by the linear basis order and
/// stored by columns: column `v` is the class `M·O_v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorMatrix {
    n: u32,
    columns: Vec<QKClass>,
}

impl OperatorMatrix {
    pub fn zero(n: u32) -> Self {
        OperatorMatrix { n, columns: vec![QKClass::zero(); basis_size(n)] }
    }

    pub fn identity(n: u32) -> Self {
        let columns = (0..basis_size(n))
            .map(|k| QKClass::basis(basis::from_linear(k, n).expect("in range")))
            .collect();
        OperatorMatrix { n, columns }
    }

    pub fn from_columns(n: u32, columns: Vec<QKClass>) -> Self {
        assert_eq!(columns.len(), basis_size(n));
        OperatorMatrix { n, columns }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Column `v`, i.e. the image of `O_v`.
    pub fn column(&self, v: SchubertIndex) -> &QKClass {
        &self.columns[linear_index_unchecked(v, self.n)]
    }

    pub fn columns(&self) -> &[QKClass] {
        &self.columns
    }

    /// Entry `(w, v)`: the coefficient of `O_w` in column `v`.
    pub fn entry(&self, w: SchubertIndex, v: SchubertIndex) -> NovikovPolynomial {
        self.column(v).coeff(w)
    }

    /// Apply the matrix to a class: `Σ_x c_x · column(x)`.
    pub fn apply(&self, c: &QKClass) -> QKClass {
        let mut out = QKClass::zero();
        for (x, p) in c.terms() {
            out.add_scaled(self.column(*x), p);
        }
        out
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &OperatorMatrix) -> OperatorMatrix {
        let columns = par_map(&other.columns, |c| self.apply(c));
        OperatorMatrix { n: self.n, columns }
    }

    pub fn add(&self, other: &OperatorMatrix) -> OperatorMatrix {
        let columns = self.columns.iter().zip(&other.columns).map(|(a, b)| a + b).collect();
        OperatorMatrix { n: self.n, columns }
    }

    pub fn sub(&self, other: &OperatorMatrix) -> OperatorMatrix {
        let columns = self.columns.iter().zip(&other.columns).map(|(a, b)| a - b).collect();
        OperatorMatrix { n: self.n, columns }
    }

    pub fn scale(&self, f: &NovikovPolynomial) -> OperatorMatrix {
        let columns = self.columns.iter().map(|c| c.scale(f)).collect();
        OperatorMatrix { n: self.n, columns }
    }

    /// Union of all Novikov exponents appearing in the matrix.
    pub fn degree_support(&self) -> BTreeSet<CurveDegree> {
        self.columns.iter().flat_map(crate::poly::degree_support).collect()
    }
}

/// The matrix of `O_h ⋆ ·`: column `v` is `O_h ⋆ O_v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChevalleyOperator {
    pub which: Divisor,
    pub matrix: OperatorMatrix,
}

impl ChevalleyOperator {
    pub fn new(which: Divisor, n: u32) -> Result<Self> {
        Self::with_variant(which, n, TableVariant::DERIVED)
    }

    pub fn with_variant(which: Divisor, n: u32, variant: TableVariant) -> Result<Self> {
        let basis = basis::enumerate_basis(n)?;
        let columns = basis.iter().map(|v| chevalley_apply_with(which, *v, n, variant)).collect();
        Ok(ChevalleyOperator { which, matrix: OperatorMatrix::from_columns(n, columns) })
    }
}

/// All structure constants of `⋆` for one `n`: `M_u` is the matrix of
/// multiplication by `O_u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicationTable {
    n: u32,
    variant: TableVariant,
    matrices: Vec<OperatorMatrix>,
}

impl MultiplicationTable {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn variant(&self) -> TableVariant {
        self.variant
    }

    /// `M_u`.
    pub fn matrix(&self, u: SchubertIndex) -> &OperatorMatrix {
        &self.matrices[linear_index_unchecked(u, self.n)]
    }

    /// Whether two tables hold identical structure constants, regardless of
    /// the reading they were built with.
    pub fn same_entries(&self, other: &MultiplicationTable) -> bool {
        self.n == other.n && self.matrices == other.matrices
    }

    /// Assemble a table from raw matrices in basis order (used when loading
    /// golden files).
    pub fn from_matrices(n: u32, matrices: Vec<OperatorMatrix>) -> Result<Self> {
        check_rank(n)?;
        if matrices.len() != basis_size(n) || matrices.iter().any(|m| m.n != n) {
            return Err(Error::ShapeMismatch(format!("expected {} matrices of rank {n}", basis_size(n))));
        }
        Ok(MultiplicationTable { n, variant: TableVariant::DERIVED, matrices })
    }
}

/// Build the table with the derived Chevalley operators.
pub fn build_table(n: u32) -> Result<MultiplicationTable> {
    build_table_variant(n, TableVariant::DERIVED)
}

/// Build the table in the algorithm's order:
///
/// 1. `M_{n,1} = Id`, then `M_{k,1} = H1·M_{k+1,1}` for `k = n-1, …, 2`;
/// 2. `M_{k,p} = H2·M_{k,p-1}` for `k > p ≥ 2`;
/// 3. `M_{1,2}` from `H1·M_{2,1}` and a `Q1` correction (see [`TableVariant`]);
/// 4. `M_{p,p+1} = H1·M_{p+1,p} + (H2 - Id)·M_{p-1,p}` for `2 ≤ p < n`;
/// 5. `M_{k,p} = H1·M_{k+1,p}` for `k < p - 1`, descending in `k`.
pub fn build_table_variant(n: u32, variant: TableVariant) -> Result<MultiplicationTable> {
    check_rank(n)?;
    let h1 = ChevalleyOperator::with_variant(Divisor::H1, n, variant)?.matrix;
    let h2 = ChevalleyOperator::with_variant(Divisor::H2, n, variant)?.matrix;
    let id = OperatorMatrix::identity(n);
    let h2_minus_id = h2.sub(&id);
    let mut slots: Vec<Option<OperatorMatrix>> = vec![None; basis_size(n)];
    let at = |i: u32, j: u32| linear_index_unchecked(SchubertIndex { i, j }, n);
    let get = |slots: &Vec<Option<OperatorMatrix>>, i: u32, j: u32| -> OperatorMatrix {
        slots[at(i, j)].clone().expect("table recurrence visits predecessors first")
    };

    slots[at(n, 1)] = Some(id.clone());
    for k in (2..n).rev() {
        let m = h1.mul(&get(&slots, k + 1, 1));
        slots[at(k, 1)] = Some(m);
    }
    for k in 3..=n {
        for p in 2..k {
            let m = h2.mul(&get(&slots, k, p - 1));
            slots[at(k, p)] = Some(m);
        }
    }
    let q1 = NovikovPolynomial::monomial(CurveDegree::L1, 1);
    let base = h1.mul(&get(&slots, 2, 1));
    let m12 = match variant.step_c {
        RowReading::Derived => base.add(&h2_minus_id.scale(&q1)),
        RowReading::Displayed => base.sub(&id.sub(&h1).scale(&q1)),
    };
    slots[at(1, 2)] = Some(m12);
    for p in 2..n {
        let m = h1.mul(&get(&slots, p + 1, p)).add(&h2_minus_id.mul(&get(&slots, p - 1, p)));
        slots[at(p, p + 1)] = Some(m);
    }
    for p in 3..=n {
        for k in (1..p - 1).rev() {
            let m = h1.mul(&get(&slots, k + 1, p));
            slots[at(k, p)] = Some(m);
        }
    }
    let matrices = slots.into_iter().map(|m| m.expect("every basis element is reached")).collect();
    Ok(MultiplicationTable { n, variant, matrices })
}

/// `O_u ⋆ O_v`, read from column `v` of `M_u`.
pub fn qk_product(u: SchubertIndex, v: SchubertIndex, n: u32, table: &MultiplicationTable) -> Result<QKClass> {
    if table.n != n {
        return Err(Error::RankMismatch { table: table.n, requested: n });
    }
    u.check(n)?;
    v.check(n)?;
    Ok(table.matrix(u).column(v).clone())
}

/// Outcome of [`degree_bound_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeBoundReport {
    pub n: u32,
    pub passed: bool,
    /// Exponents of `M_{h1}`, `M_{h2}` outside `{0, l1, l2, l1+l2}`.
    pub offending: Vec<(String, CurveDegree)>,
    /// Componentwise maximum degree over the whole table.
    pub max_degree: CurveDegree,
}

/// Check that `O_{h_i} ⋆ O_v` only involves `1, Q1, Q2, Q1Q2`, and report the
/// largest degree found anywhere in the table.
pub fn degree_bound_check(table: &MultiplicationTable) -> DegreeBoundReport {
    let n = table.n;
    let allowed = [CurveDegree::ZERO, CurveDegree::L1, CurveDegree::L2, CurveDegree::L1_L2];
    let mut offending = Vec::new();
    for h in [Divisor::H1, Divisor::H2] {
        for d in table.matrix(h.index(n)).degree_support() {
            if !allowed.contains(&d) {
                offending.push((h.name().to_string(), d));
            }
        }
    }
    let mut max_degree = CurveDegree::ZERO;
    for m in &table.matrices {
        for d in m.degree_support() {
            max_degree.d1 = max_degree.d1.max(d.d1);
            max_degree.d2 = max_degree.d2.max(d.d2);
        }
    }
    DegreeBoundReport { n, passed: offending.is_empty(), offending, max_degree }
}
