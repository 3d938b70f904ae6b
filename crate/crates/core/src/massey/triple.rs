//! Matric Massey products m(A,B,C) and membership in their indeterminacy.

use super::matrix::{GradedSet, LambdaMatrix, PlainMatrix};
use super::pieces::{check_exact, minimal_image_generators, minimal_kernel_generators, ExactnessReport};
use crate::error::{Error, Result};
use crate::field::Gf4;
use crate::linalg::{Matrix, Solution};
use crate::secondary::{Kind, SecondaryProduct};
use crate::tate_ring::{basis, dim, Bm, RingElement, Variant};

/// m(A,B,C)_{i[−1],l} = Σ_j Σ_k m(a_ij, b_jk, c_kl).
pub fn m_matrix(
    p: &SecondaryProduct,
    kind: Kind,
    a: &LambdaMatrix,
    b: &LambdaMatrix,
    c: &LambdaMatrix,
) -> Result<LambdaMatrix> {
    if a.col_set() != b.row_set() || b.col_set() != c.row_set() {
        return Err(Error::Shape("triple is not composable".into()));
    }
    let v = p.variant();
    let mut out = PlainMatrix::zero(v, a.rows(), c.cols());
    for i in 0..a.rows() {
        for l in 0..c.cols() {
            let mut acc = RingElement::zero(v);
            for j in 0..a.cols() {
                if a.get(i, j).is_zero() {
                    continue;
                }
                for k in 0..b.cols() {
                    acc += &p.eval(kind, a.get(i, j), b.get(j, k), c.get(k, l))?;
                }
            }
            out.set(i, l, acc);
        }
    }
    LambdaMatrix::new(a.row_set().shift(-1), c.col_set().clone(), out)
}

/// Whether E lies in A·Λ^{J[−1],L} + Λ^{I[−1],K}·C.
#[derive(Clone, Debug)]
pub struct TripleVerdict {
    pub value: LambdaMatrix,
    pub in_indeterminacy: bool,
    /// (X, Y) with value = AX + YC.
    pub witness: Option<(LambdaMatrix, LambdaMatrix)>,
    /// A left null-vector of the membership system pairing nontrivially
    /// with the value.
    pub certificate: Option<Vec<Gf4>>,
}

struct Unknowns {
    set_rows: GradedSet,
    set_cols: GradedSet,
    offset: usize,
}

impl Unknowns {
    fn entry_dim(&self, r: usize, c: usize) -> usize {
        dim(self.set_rows.get(r) - self.set_cols.get(c))
    }

    fn len(&self) -> usize {
        (0..self.set_rows.len())
            .flat_map(|r| (0..self.set_cols.len()).map(move |c| (r, c)))
            .map(|(r, c)| self.entry_dim(r, c))
            .sum()
    }

    fn at(&self, r: usize, c: usize) -> usize {
        let mut off = self.offset;
        for rr in 0..self.set_rows.len() {
            for cc in 0..self.set_cols.len() {
                if (rr, cc) == (r, c) {
                    return off;
                }
                off += self.entry_dim(rr, cc);
            }
        }
        unreachable!()
    }

    fn read(&self, v: Variant, x: &[Gf4]) -> Result<LambdaMatrix> {
        let mut m = PlainMatrix::zero(v, self.set_rows.len(), self.set_cols.len());
        for r in 0..self.set_rows.len() {
            for c in 0..self.set_cols.len() {
                let d = self.set_rows.get(r) - self.set_cols.get(c);
                let at = self.at(r, c);
                m.set(r, c, RingElement::from_coords(v, d, &x[at..at + dim(d)]));
            }
        }
        LambdaMatrix::new(self.set_rows.clone(), self.set_cols.clone(), m)
    }
}

/// Solves E = AX + YC over the homogeneous entries of X ∈ Λ^{J[−1],L} and
/// Y ∈ Λ^{I[−1],K}.
pub fn indeterminacy_member(e: &LambdaMatrix, a: &LambdaMatrix, c: &LambdaMatrix) -> Result<TripleVerdict> {
    let v = e.variant();
    let i_set = a.row_set().shift(-1);
    let l_set = c.col_set().clone();
    if *e.row_set() != i_set || *e.col_set() != l_set {
        return Err(Error::Shape("value does not lie in Λ^{I[-1],L}".into()));
    }
    let xs = Unknowns { set_rows: a.col_set().shift(-1), set_cols: l_set.clone(), offset: 0 };
    let ys = Unknowns { set_rows: i_set.clone(), set_cols: c.row_set().clone(), offset: xs.len() };
    let total = xs.len() + ys.len();

    let mut rows: Vec<Vec<Gf4>> = Vec::new();
    let mut rhs: Vec<Gf4> = Vec::new();
    for i in 0..e.rows() {
        for l in 0..e.cols() {
            let d = e.entry_degree(i, l);
            let n = dim(d);
            let base = rows.len();
            rows.extend((0..n).map(|_| vec![Gf4::ZERO; total]));
            rhs.extend(e.get(i, l).coords(d));
            // (AX)_{il} = Σ_j a_ij x_jl
            for j in 0..a.cols() {
                let xd = xs.set_rows.get(j) - l_set.get(l);
                for (q, mu) in basis(xd).into_iter().enumerate() {
                    let img = a.get(i, j) * &RingElement::monomial(v, mu);
                    for (r, val) in img.coords(d).into_iter().enumerate() {
                        rows[base + r][xs.at(j, l) + q] += val;
                    }
                }
            }
            // (YC)_{il} = Σ_k y_ik c_kl
            for k in 0..c.rows() {
                let yd = i_set.get(i) - ys.set_cols.get(k);
                for (q, mu) in basis(yd).into_iter().enumerate() {
                    let img = &RingElement::monomial(v, mu) * c.get(k, l);
                    for (r, val) in img.coords(d).into_iter().enumerate() {
                        rows[base + r][ys.at(i, k) + q] += val;
                    }
                }
            }
        }
    }
    let system = Matrix::from_rows(&rows, total);
    Ok(match system.solve(&rhs) {
        Solution::Feasible(x) => TripleVerdict {
            value: e.clone(),
            in_indeterminacy: true,
            witness: Some((xs.read(v, &x)?, ys.read(v, &x)?)),
            certificate: None,
        },
        Solution::Infeasible(y) => {
            TripleVerdict { value: e.clone(), in_indeterminacy: false, witness: None, certificate: Some(y) }
        }
    })
}

/// Generator-degree windows for the resolution M ← Λ^I ← Λ^J ← Λ^K ← Λ^L.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Windows {
    pub k: i32,
    pub l: i32,
}

#[derive(Clone, Debug)]
pub struct RealizabilityReport {
    pub a: LambdaMatrix,
    pub b: LambdaMatrix,
    pub c: LambdaMatrix,
    pub exact_at_j: ExactnessReport,
    pub exact_at_k: ExactnessReport,
    pub verdict: TripleVerdict,
}

impl RealizabilityReport {
    /// coker A is a direct summand of a realizable module.
    pub fn summand_of_realizable(&self) -> bool {
        self.verdict.in_indeterminacy
    }
}

/// Extends A to an exact triple (A, B, C) with minimal B and C and decides
/// whether m(A,B,C) lies in the indeterminacy.
pub fn realizable_summand(p: &SecondaryProduct, kind: Kind, a: &LambdaMatrix) -> Result<RealizabilityReport> {
    realizable_summand_with(p, kind, a, Windows::default())
}

pub fn realizable_summand_with(
    p: &SecondaryProduct,
    kind: Kind,
    a: &LambdaMatrix,
    windows: Windows,
) -> Result<RealizabilityReport> {
    if a.variant() != p.variant() {
        return Err(Error::Shape("matrix and product belong to different rings".into()));
    }
    let b = minimal_kernel_generators(a, windows.k)?;
    let c = minimal_kernel_generators(&b, windows.l)?;
    let exact_at_j = check_exact(a, &b)?;
    let exact_at_k = check_exact(&b, &c)?;
    let value = m_matrix(p, kind, a, &b, &c)?;
    let verdict = indeterminacy_member(&value, a, &c)?;
    Ok(RealizabilityReport { a: a.clone(), b, c, exact_at_j, exact_at_k, verdict })
}

/// A minimal resolution with I ⊂ [0,3], J ⊂ [j, j+3], and the given
/// windows for K and L.
pub fn minimal_resolution(a: &LambdaMatrix, j: i32, windows: Windows) -> Result<[LambdaMatrix; 3]> {
    let a = minimal_image_generators(&a.normalize_rows(0), j)?;
    let b = minimal_kernel_generators(&a, windows.k)?;
    let c = minimal_kernel_generators(&b, windows.l)?;
    Ok([a, b, c])
}

/// W = A_x B_y x + A_{x²} B_y x² and V = B_y C_{y²} y², for which
/// m′(A,B,C) = AV + WC when A, B, C have no unit entries and BC = 0.
pub fn prime_witnesses(a: &LambdaMatrix, b: &LambdaMatrix, c: &LambdaMatrix) -> Result<(LambdaMatrix, LambdaMatrix)> {
    let v = a.variant();
    if v != Variant::Generalized {
        return Err(Error::Unsupported("closed-form witnesses are for t >= 4".into()));
    }
    let (pa, pb, pc) = (a.plain(), b.plain(), c.plain());
    let by = pb.coefficient(Bm::Y);
    let x = RingElement::x(v);
    let w = pa
        .coefficient(Bm::X)
        .mul(&by)?
        .times(&x)
        .add(&pa.coefficient(Bm::X2).mul(&by)?.times(&x.pow(2)))?;
    let vv = by.mul(&pc.coefficient(Bm::Y2))?.times(&RingElement::y(v).pow(2));
    let w = LambdaMatrix::new(a.row_set().shift(-1), b.col_set().clone(), w)?;
    let vv = LambdaMatrix::new(a.col_set().shift(-1), c.col_set().clone(), vv)?;
    Ok((w, vv))
}

/// tr(M·D) for the trace obstruction; gradings are ignored.
pub fn trace_pairing(m: &LambdaMatrix, d: &PlainMatrix) -> Result<RingElement> {
    m.plain().mul(d)?.trace()
}
