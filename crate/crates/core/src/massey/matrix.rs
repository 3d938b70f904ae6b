//! Finite matrices over Λ, graded by row and column degrees.

use std::fmt;

use crate::error::{Error, Result};
use crate::tate_ring::{parse_element, Bm, RingElement, Variant};

/// A finite ordered list of degrees.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GradedSet(Vec<i32>);

impl GradedSet {
    pub fn new(degrees: Vec<i32>) -> GradedSet {
        GradedSet(degrees)
    }

    pub fn degrees(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> i32 {
        self.0[i]
    }

    /// I[n]: every degree raised by n.
    pub fn shift(&self, n: i32) -> GradedSet {
        GradedSet(self.0.iter().map(|d| d + n).collect())
    }
}

impl From<Vec<i32>> for GradedSet {
    fn from(v: Vec<i32>) -> GradedSet {
        GradedSet(v)
    }
}

/// A matrix of ring elements with no grading constraint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlainMatrix {
    variant: Variant,
    rows: usize,
    cols: usize,
    entries: Vec<RingElement>,
}

impl PlainMatrix {
    pub fn zero(variant: Variant, rows: usize, cols: usize) -> PlainMatrix {
        PlainMatrix { variant, rows, cols, entries: vec![RingElement::zero(variant); rows * cols] }
    }

    pub fn from_entries(variant: Variant, rows: usize, cols: usize, entries: Vec<RingElement>) -> Result<PlainMatrix> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!("{} entries for a {rows}x{cols} matrix", entries.len())));
        }
        if entries.iter().any(|e| e.variant() != variant) {
            return Err(Error::Shape("entries from different rings".into()));
        }
        Ok(PlainMatrix { variant, rows, cols, entries })
    }

    pub fn parse(variant: Variant, rows: &[&[&str]]) -> Result<PlainMatrix> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut entries = Vec::new();
        for r in rows {
            if r.len() != cols {
                return Err(Error::Shape("ragged matrix".into()));
            }
            for s in r.iter() {
                entries.push(parse_element(s, variant)?);
            }
        }
        PlainMatrix::from_entries(variant, rows.len(), cols, entries)
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RingElement {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RingElement) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[RingElement] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RingElement::is_zero)
    }

    pub fn mul(&self, other: &PlainMatrix) -> Result<PlainMatrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = PlainMatrix::zero(self.variant, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &PlainMatrix) -> Result<PlainMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Shape("cannot add matrices of different shapes".into()));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(PlainMatrix { variant: self.variant, rows: self.rows, cols: self.cols, entries })
    }

    /// Every entry multiplied by `r`.
    pub fn times(&self, r: &RingElement) -> PlainMatrix {
        let entries = self.entries.iter().map(|e| e * r).collect();
        PlainMatrix { variant: self.variant, rows: self.rows, cols: self.cols, entries }
    }

    pub fn trace(&self) -> Result<RingElement> {
        if self.rows != self.cols {
            return Err(Error::Shape("trace of a non-square matrix".into()));
        }
        let mut t = RingElement::zero(self.variant);
        for i in 0..self.rows {
            t += self.get(i, i);
        }
        Ok(t)
    }

    /// M_b with M = Σ_b M_b·b, entries of M_b in k[s, s⁻¹].
    pub fn coefficient(&self, b: Bm) -> PlainMatrix {
        let entries = self.entries.iter().map(|e| e.coefficient_of(b)).collect();
        PlainMatrix { variant: self.variant, rows: self.rows, cols: self.cols, entries }
    }
}

impl fmt::Display for PlainMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// A matrix in Λ^{I,J}: entry (i, j) is homogeneous of degree |i| − |j| or zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaMatrix {
    row_set: GradedSet,
    col_set: GradedSet,
    m: PlainMatrix,
}

impl LambdaMatrix {
    pub fn new(row_set: GradedSet, col_set: GradedSet, m: PlainMatrix) -> Result<LambdaMatrix> {
        if (m.rows, m.cols) != (row_set.len(), col_set.len()) {
            return Err(Error::Shape(format!(
                "{}x{} entries for graded sets of sizes {} and {}",
                m.rows,
                m.cols,
                row_set.len(),
                col_set.len()
            )));
        }
        for i in 0..m.rows {
            for j in 0..m.cols {
                let d = row_set.get(i) - col_set.get(j);
                let e = m.get(i, j);
                if !e.is_zero() && !e.is_homogeneous_of(d) {
                    return Err(Error::Shape(format!("entry ({i}, {j}) = {e} is not homogeneous of degree {d}")));
                }
            }
        }
        Ok(LambdaMatrix { row_set, col_set, m })
    }

    pub fn zero(variant: Variant, row_set: GradedSet, col_set: GradedSet) -> LambdaMatrix {
        let m = PlainMatrix::zero(variant, row_set.len(), col_set.len());
        LambdaMatrix { row_set, col_set, m }
    }

    pub fn identity(variant: Variant, set: GradedSet) -> LambdaMatrix {
        let mut m = PlainMatrix::zero(variant, set.len(), set.len());
        for i in 0..set.len() {
            m.set(i, i, RingElement::one(variant));
        }
        LambdaMatrix { row_set: set.clone(), col_set: set, m }
    }

    pub fn parse(variant: Variant, rows: Vec<i32>, cols: Vec<i32>, entries: &[&[&str]]) -> Result<LambdaMatrix> {
        let m = if entries.is_empty() {
            PlainMatrix::zero(variant, 0, cols.len())
        } else {
            PlainMatrix::parse(variant, entries)?
        };
        LambdaMatrix::new(rows.into(), cols.into(), m)
    }

    pub fn variant(&self) -> Variant {
        self.m.variant
    }

    pub fn row_set(&self) -> &GradedSet {
        &self.row_set
    }

    pub fn col_set(&self) -> &GradedSet {
        &self.col_set
    }

    pub fn rows(&self) -> usize {
        self.m.rows
    }

    pub fn cols(&self) -> usize {
        self.m.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RingElement {
        self.m.get(i, j)
    }

    pub fn entry_degree(&self, i: usize, j: usize) -> i32 {
        self.row_set.get(i) - self.col_set.get(j)
    }

    pub fn plain(&self) -> &PlainMatrix {
        &self.m
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn mul(&self, other: &LambdaMatrix) -> Result<LambdaMatrix> {
        if self.col_set != other.row_set {
            return Err(Error::Shape("column degrees of the left factor differ from row degrees of the right".into()));
        }
        Ok(LambdaMatrix { row_set: self.row_set.clone(), col_set: other.col_set.clone(), m: self.m.mul(&other.m)? })
    }

    pub fn add(&self, other: &LambdaMatrix) -> Result<LambdaMatrix> {
        if self.row_set != other.row_set || self.col_set != other.col_set {
            return Err(Error::Shape("cannot add matrices with different graded sets".into()));
        }
        Ok(LambdaMatrix { row_set: self.row_set.clone(), col_set: self.col_set.clone(), m: self.m.add(&other.m)? })
    }

    /// Moves every row degree into [lo, lo+3] by multiplying rows by powers of s.
    pub fn normalize_rows(&self, lo: i32) -> LambdaMatrix {
        let mut out = self.clone();
        for i in 0..self.rows() {
            let d = self.row_set.get(i);
            let k = (lo - d).div_euclid(4) + i32::from((lo - d).rem_euclid(4) != 0);
            out.row_set.0[i] = d + 4 * k;
            for j in 0..self.cols() {
                let e = self.get(i, j).shift_s(k);
                out.m.set(i, j, e);
            }
        }
        out
    }

    /// Moves every column degree into [lo, lo+3] by multiplying columns by powers of s.
    pub fn normalize_cols(&self, lo: i32) -> LambdaMatrix {
        let mut out = self.clone();
        for j in 0..self.cols() {
            let d = self.col_set.get(j);
            let k = (lo - d).div_euclid(4) + i32::from((lo - d).rem_euclid(4) != 0);
            out.col_set.0[j] = d + 4 * k;
            for i in 0..self.rows() {
                let e = self.get(i, j).shift_s(-k);
                out.m.set(i, j, e);
            }
        }
        out
    }
}

impl fmt::Display for LambdaMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.m)
    }
}
