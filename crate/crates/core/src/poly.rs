//! Exact arithmetic in `ℤ[Q1,Q2]` and sparse combinations of Schubert
//! classes over it.
//!
//! Every container is a sorted map without stored zeros, so equality is
//! structural and iteration order (degree, then basis order) is stable.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::basis::SchubertIndex;

/// Integer coefficients are arbitrary precision: no bound on structure
/// constants is known for large `n`.
pub type Coeff = BigInt;

/// A curve class `d1·l1 + d2·l2`, i.e. the exponent of `Q1^d1 Q2^d2`.
///
/// The derived order is lexicographic in `(d1,d2)`, used for deterministic
/// iteration; the geometric partial order is [`CurveDegree::dominates`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct CurveDegree {
    pub d1: u32,
    pub d2: u32,
}

impl CurveDegree {
    pub const ZERO: CurveDegree = CurveDegree { d1: 0, d2: 0 };
    pub const L1: CurveDegree = CurveDegree { d1: 1, d2: 0 };
    pub const L2: CurveDegree = CurveDegree { d1: 0, d2: 1 };
    pub const L1_L2: CurveDegree = CurveDegree { d1: 1, d2: 1 };

    pub const fn new(d1: u32, d2: u32) -> Self {
        CurveDegree { d1, d2 }
    }

    /// Componentwise `self ≥ other`.
    pub fn dominates(&self, other: &CurveDegree) -> bool {
        self.d1 >= other.d1 && self.d2 >= other.d2
    }

    /// `∫_d c1(T_X) = (d1 + d2)(n - 1)`.
    pub fn c1_degree(&self, n: u32) -> u64 {
        (self.d1 as u64 + self.d2 as u64) * (n as u64 - 1)
    }

    /// The swap `(d1,d2) ↦ (d2,d1)` induced by the duality involution.
    pub fn swapped(&self) -> Self {
        CurveDegree { d1: self.d2, d2: self.d1 }
    }
}

impl Add for CurveDegree {
    type Output = CurveDegree;
    fn add(self, o: CurveDegree) -> CurveDegree {
        CurveDegree { d1: self.d1 + o.d1, d2: self.d2 + o.d2 }
    }
}

/// Renders a monomial `Q1^a Q2^b` compactly: `1`, `Q1`, `Q1^2`, `Q1Q2`, ...
impl fmt::Display for CurveDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.d1 == 0 && self.d2 == 0 {
            return write!(f, "1");
        }
        for (name, e) in [("Q1", self.d1), ("Q2", self.d2)] {
            match e {
                0 => {}
                1 => write!(f, "{name}")?,
                e => write!(f, "{name}^{e}")?,
            }
        }
        Ok(())
    }
}

/// An element of `ℤ[Q1,Q2]` in canonical sparse form.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct NovikovPolynomial {
    terms: BTreeMap<CurveDegree, Coeff>,
}

impl NovikovPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<Coeff>) -> Self {
        Self::monomial(CurveDegree::ZERO, c)
    }

    /// `c · Q^d`.
    pub fn monomial(d: CurveDegree, c: impl Into<Coeff>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(d, c);
        }
        NovikovPolynomial { terms }
    }

    /// Build from arbitrary terms, merging repeated degrees and dropping zeros.
    pub fn from_terms<I, C>(it: I) -> Self
    where
        I: IntoIterator<Item = (CurveDegree, C)>,
        C: Into<Coeff>,
    {
        let mut p = Self::zero();
        for (d, c) in it {
            p.add_term(d, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing degree order.
    pub fn terms(&self) -> impl Iterator<Item = (&CurveDegree, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, d: CurveDegree) -> Coeff {
        self.terms.get(&d).cloned().unwrap_or_default()
    }

    /// The coefficient of `Q^0`.
    pub fn constant_term(&self) -> Coeff {
        self.coeff(CurveDegree::ZERO)
    }

    /// Exponents carrying a nonzero coefficient.
    pub fn support(&self) -> BTreeSet<CurveDegree> {
        self.terms.keys().copied().collect()
    }

    pub fn add_term(&mut self, d: CurveDegree, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(d).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&d);
        }
    }

    /// In-place `self += other`.
    pub fn add_assign_ref(&mut self, other: &NovikovPolynomial) {
        for (d, c) in &other.terms {
            self.add_term(*d, c.clone());
        }
    }

    /// In-place `self += factor · other`.
    pub fn add_product(&mut self, factor: &NovikovPolynomial, other: &NovikovPolynomial) {
        for (da, ca) in &factor.terms {
            for (db, cb) in &other.terms {
                self.add_term(*da + *db, ca * cb);
            }
        }
    }

    pub fn scale(&self, c: &Coeff) -> NovikovPolynomial {
        if c.is_zero() {
            return Self::zero();
        }
        NovikovPolynomial { terms: self.terms.iter().map(|(d, x)| (*d, x * c)).collect() }
    }

    /// Multiply by the monomial `Q^d`.
    pub fn shift(&self, d: CurveDegree) -> NovikovPolynomial {
        NovikovPolynomial { terms: self.terms.iter().map(|(e, c)| (*e + d, c.clone())).collect() }
    }
}

impl Add for &NovikovPolynomial {
    type Output = NovikovPolynomial;
    fn add(self, o: &NovikovPolynomial) -> NovikovPolynomial {
        let mut r = self.clone();
        r.add_assign_ref(o);
        r
    }
}

impl Sub for &NovikovPolynomial {
    type Output = NovikovPolynomial;
    fn sub(self, o: &NovikovPolynomial) -> NovikovPolynomial {
        self + &(-o)
    }
}

impl Neg for &NovikovPolynomial {
    type Output = NovikovPolynomial;
    fn neg(self) -> NovikovPolynomial {
        NovikovPolynomial { terms: self.terms.iter().map(|(d, c)| (*d, -c)).collect() }
    }
}

impl Mul for &NovikovPolynomial {
    type Output = NovikovPolynomial;
    fn mul(self, o: &NovikovPolynomial) -> NovikovPolynomial {
        let mut r = NovikovPolynomial::zero();
        r.add_product(self, o);
        r
    }
}

/// Renders as a sum of monomials, e.g. `1 - Q1^2` or `2Q1Q2`.
impl fmt::Display for NovikovPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (d, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if *d == CurveDegree::ZERO {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{d}")?;
            } else {
                write!(f, "{a}{d}")?;
            }
        }
        Ok(())
    }
}

/// Which ring operation [`poly_arith`] applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Exact `a op b` in canonical form.
pub fn poly_arith(a: &NovikovPolynomial, b: &NovikovPolynomial, op: PolyOp) -> NovikovPolynomial {
    match op {
        PolyOp::Add => a + b,
        PolyOp::Sub => a - b,
        PolyOp::Mul => a * b,
    }
}

/// An element of `K(X)`: a finite integer combination of Schubert classes.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct KClass {
    terms: BTreeMap<SchubertIndex, Coeff>,
}

impl KClass {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The single class `O_w`.
    pub fn basis(w: SchubertIndex) -> Self {
        let mut k = Self::zero();
        k.add_term(w, Coeff::one());
        k
    }

    pub fn from_terms<I, C>(it: I) -> Self
    where
        I: IntoIterator<Item = (SchubertIndex, C)>,
        C: Into<Coeff>,
    {
        let mut k = Self::zero();
        for (w, c) in it {
            k.add_term(w, c.into());
        }
        k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in basis order.
    pub fn terms(&self) -> impl Iterator<Item = (&SchubertIndex, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: SchubertIndex) -> Coeff {
        self.terms.get(&w).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, w: SchubertIndex, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    /// Add `c · O_{a,b}` where the pair obeys the zero-class convention of
    /// [`SchubertIndex::from_signed`].
    pub fn add_signed(&mut self, a: i64, b: i64, n: u32, c: i64) {
        if let Some(w) = SchubertIndex::from_signed(a, b, n) {
            self.add_term(w, Coeff::from(c));
        }
    }

    pub fn add_assign_scaled(&mut self, other: &KClass, c: &Coeff) {
        for (w, x) in &other.terms {
            self.add_term(*w, x * c);
        }
    }

    /// View as a quantum class with constant coefficients.
    pub fn to_qk(&self) -> QKClass {
        QKClass::from_terms(self.terms.iter().map(|(w, c)| (*w, NovikovPolynomial::constant(c.clone()))))
    }

    /// Multiply every coefficient by `Q^d`.
    pub fn times_monomial(&self, d: CurveDegree) -> QKClass {
        QKClass::from_terms(self.terms.iter().map(|(w, c)| (*w, NovikovPolynomial::monomial(d, c.clone()))))
    }
}

impl Add for &KClass {
    type Output = KClass;
    fn add(self, o: &KClass) -> KClass {
        let mut r = self.clone();
        r.add_assign_scaled(o, &Coeff::one());
        r
    }
}

impl Sub for &KClass {
    type Output = KClass;
    fn sub(self, o: &KClass) -> KClass {
        let mut r = self.clone();
        r.add_assign_scaled(o, &-Coeff::one());
        r
    }
}

/// An element of `QK_s(X)`: Schubert classes with `ℤ[Q1,Q2]` coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct QKClass {
    terms: BTreeMap<SchubertIndex, NovikovPolynomial>,
}

impl QKClass {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(w: SchubertIndex) -> Self {
        let mut q = Self::zero();
        q.add_poly(w, &NovikovPolynomial::one());
        q
    }

    pub fn from_terms<I>(it: I) -> Self
    where
        I: IntoIterator<Item = (SchubertIndex, NovikovPolynomial)>,
    {
        let mut q = Self::zero();
        for (w, p) in it {
            q.add_poly(w, &p);
        }
        q
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in basis order.
    pub fn terms(&self) -> impl Iterator<Item = (&SchubertIndex, &NovikovPolynomial)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: SchubertIndex) -> NovikovPolynomial {
        self.terms.get(&w).cloned().unwrap_or_default()
    }

    pub fn add_poly(&mut self, w: SchubertIndex, p: &NovikovPolynomial) {
        if p.is_zero() {
            return;
        }
        let e = self.terms.entry(w).or_default();
        e.add_assign_ref(p);
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    /// Add `c · Q^d · O_{a,b}` under the zero-class convention.
    pub fn add_signed(&mut self, a: i64, b: i64, n: u32, d: CurveDegree, c: i64) {
        if let Some(w) = SchubertIndex::from_signed(a, b, n) {
            self.add_poly(w, &NovikovPolynomial::monomial(d, c));
        }
    }

    pub fn add_assign_ref(&mut self, other: &QKClass) {
        for (w, p) in &other.terms {
            self.add_poly(*w, p);
        }
    }

    /// In-place `self += factor · other`.
    pub fn add_scaled(&mut self, other: &QKClass, factor: &NovikovPolynomial) {
        if factor.is_zero() {
            return;
        }
        for (w, p) in &other.terms {
            let e = self.terms.entry(*w).or_default();
            e.add_product(factor, p);
            if e.is_zero() {
                self.terms.remove(w);
            }
        }
    }

    pub fn scale(&self, factor: &NovikovPolynomial) -> QKClass {
        let mut r = QKClass::zero();
        r.add_scaled(self, factor);
        r
    }

    /// The part of exact Novikov degree `d`, with `Q^d` stripped.
    pub fn degree_part(&self, d: CurveDegree) -> KClass {
        KClass::from_terms(self.terms.iter().map(|(w, p)| (*w, p.coeff(d))))
    }

    /// Flatten to `(class, degree, coefficient)` triples in basis-then-degree
    /// order.
    pub fn structure_constants(&self) -> Vec<(SchubertIndex, CurveDegree, Coeff)> {
        self.terms
            .iter()
            .flat_map(|(w, p)| p.terms().map(move |(d, c)| (*w, *d, c.clone())))
            .collect()
    }
}

impl Add for &QKClass {
    type Output = QKClass;
    fn add(self, o: &QKClass) -> QKClass {
        let mut r = self.clone();
        r.add_assign_ref(o);
        r
    }
}

impl Sub for &QKClass {
    type Output = QKClass;
    fn sub(self, o: &QKClass) -> QKClass {
        let mut r = self.clone();
        r.add_scaled(o, &NovikovPolynomial::constant(-1));
        r
    }
}

/// The `Q → 0` specialization: constant terms only, vanishing classes dropped.
pub fn classical_limit(c: &QKClass) -> KClass {
    c.degree_part(CurveDegree::ZERO)
}

/// Union of the exponent supports of all coefficients.
pub fn degree_support(c: &QKClass) -> BTreeSet<CurveDegree> {
    c.terms().flat_map(|(_, p)| p.support()).collect()
}
