//! Degreewise linear algebra on free modules Λ^I.
//!
//! A vector of degree e in Λ^I has entries vᵢ ∈ Λ_{|i|−e}; its coordinates
//! are the concatenated coordinates of the entries.

use super::matrix::{GradedSet, LambdaMatrix, PlainMatrix};
use crate::error::Result;
use crate::field::Gf4;
use crate::linalg::{Matrix, Span};
use crate::tate_ring::{basis, dim, RingElement, Variant};

pub(crate) fn piece_dim(set: &GradedSet, e: i32) -> usize {
    set.degrees().iter().map(|&d| dim(d - e)).sum()
}

pub(crate) fn to_coords(set: &GradedSet, e: i32, v: &[RingElement]) -> Vec<Gf4> {
    let mut out = Vec::with_capacity(piece_dim(set, e));
    for (x, &d) in v.iter().zip(set.degrees()) {
        out.extend(x.coords(d - e));
    }
    out
}

pub(crate) fn from_coords(variant: Variant, set: &GradedSet, e: i32, c: &[Gf4]) -> Vec<RingElement> {
    let mut at = 0;
    set.degrees()
        .iter()
        .map(|&d| {
            let n = dim(d - e);
            let x = RingElement::from_coords(variant, d - e, &c[at..at + n]);
            at += n;
            x
        })
        .collect()
}

/// The k-linear map v ↦ Av from degree-e vectors of Λ^J to those of Λ^I.
pub(crate) fn degree_map(a: &LambdaMatrix, e: i32) -> Matrix {
    let v = a.variant();
    let (rows, cols) = (a.row_set(), a.col_set());
    let rdim = piece_dim(rows, e);
    let cdim = piece_dim(cols, e);
    let mut columns: Vec<Vec<Gf4>> = Vec::with_capacity(cdim);
    for j in 0..a.cols() {
        for mu in basis(cols.get(j) - e) {
            let mu = RingElement::monomial(v, mu);
            let image: Vec<RingElement> = (0..a.rows()).map(|i| a.get(i, j) * &mu).collect();
            columns.push(to_coords(rows, e, &image));
        }
    }
    let mut m = Matrix::zeros(rdim, cdim);
    for (c, col) in columns.iter().enumerate() {
        for (r, &x) in col.iter().enumerate() {
            m.set(r, c, x);
        }
    }
    m
}

/// Basis of the degree-e part of ker A.
pub(crate) fn kernel_piece(a: &LambdaMatrix, e: i32) -> Vec<Vec<Gf4>> {
    degree_map(a, e).kernel()
}

/// Basis of the degree-e part of im A.
pub(crate) fn image_piece(a: &LambdaMatrix, e: i32) -> Vec<Vec<Gf4>> {
    let m = degree_map(a, e);
    let mut span = Span::new(m.rows());
    let mut out = Vec::new();
    for c in 0..m.cols() {
        let col: Vec<Gf4> = (0..m.rows()).map(|r| m.get(r, c)).collect();
        if span.insert(&col) {
            out.push(col);
        }
    }
    out
}

/// Minimal generators of the submodule N ⊆ Λ^T whose degree-e part is
/// `piece(e)`, with generator degrees in [lo, lo+3]. The result has row set
/// T and one column per generator.
pub(crate) fn minimal_generators(
    variant: Variant,
    target: &GradedSet,
    lo: i32,
    piece: impl Fn(i32) -> Vec<Vec<Gf4>>,
) -> Result<LambdaMatrix> {
    let x = RingElement::x(variant);
    let y = RingElement::y(variant);
    let mut degrees = Vec::new();
    let mut columns: Vec<Vec<RingElement>> = Vec::new();
    for e in lo..lo + 4 {
        let mut span = Span::new(piece_dim(target, e));
        for w in piece(e + 1) {
            let w = from_coords(variant, target, e + 1, &w);
            for g in [&x, &y] {
                let moved: Vec<RingElement> = w.iter().map(|c| c * g).collect();
                span.insert(&to_coords(target, e, &moved));
            }
        }
        for v in piece(e) {
            if span.insert(&v) {
                degrees.push(e);
                columns.push(from_coords(variant, target, e, &v));
            }
        }
    }
    let mut m = PlainMatrix::zero(variant, target.len(), columns.len());
    for (j, col) in columns.into_iter().enumerate() {
        for (i, x) in col.into_iter().enumerate() {
            m.set(i, j, x);
        }
    }
    LambdaMatrix::new(target.clone(), degrees.into(), m)
}

/// Minimal generators of ker A with generator degrees in [lo, lo+3].
pub fn minimal_kernel_generators(a: &LambdaMatrix, lo: i32) -> Result<LambdaMatrix> {
    minimal_generators(a.variant(), a.col_set(), lo, |e| kernel_piece(a, e))
}

/// A matrix with the same image as A whose columns minimally generate it,
/// with column degrees in [lo, lo+3].
pub fn minimal_image_generators(a: &LambdaMatrix, lo: i32) -> Result<LambdaMatrix> {
    minimal_generators(a.variant(), a.row_set(), lo, |e| image_piece(a, e))
}

/// Per-degree comparison of ker A with im B.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessReport {
    pub composite_zero: bool,
    /// (e, dim ker A_e, dim im B_e) for four consecutive e.
    pub degrees: Vec<(i32, usize, usize)>,
}

impl ExactnessReport {
    pub fn exact(&self) -> bool {
        self.composite_zero && self.degrees.iter().all(|(_, k, i)| k == i)
    }
}

/// Whether Λ^I ←A− Λ^J ←B− Λ^K is exact at Λ^J. Four consecutive degrees
/// suffice because s is an invertible element of degree 4.
pub fn check_exact(a: &LambdaMatrix, b: &LambdaMatrix) -> Result<ExactnessReport> {
    let composite_zero = a.mul(b)?.is_zero();
    let degrees = (0..4).map(|e| (e, kernel_piece(a, e).len(), image_piece(b, e).len())).collect();
    Ok(ExactnessReport { composite_zero, degrees })
}

/// Whether every entry is a non-unit, i.e. the coefficient matrix of 1 vanishes.
pub fn has_no_units(a: &LambdaMatrix) -> bool {
    a.plain().entries().iter().all(|e| e.terms().all(|(m, _)| m.b != crate::tate_ring::Bm::One))
}
