//! Dense linear algebra over GF(4) (and hence GF(2)).
//!
//! Rows are bit-sliced: one bit vector for the 1-coordinate and one for the
//! α-coordinate of every entry, so row operations are word-wise xors.

use crate::field::Gf4;

#[derive(Clone, Debug, PartialEq, Eq)]
struct Row {
    lo: Vec<u64>,
    hi: Vec<u64>,
}

impl Row {
    fn zero(words: usize) -> Row {
        Row { lo: vec![0; words], hi: vec![0; words] }
    }

    fn get(&self, c: usize) -> Gf4 {
        let (w, b) = (c / 64, c % 64);
        let lo = (self.lo[w] >> b) & 1;
        let hi = (self.hi[w] >> b) & 1;
        Gf4::from_bits((lo | (hi << 1)) as u8)
    }

    fn set(&mut self, c: usize, v: Gf4) {
        let (w, b) = (c / 64, c % 64);
        let mask = 1u64 << b;
        let bits = v.bits();
        if bits & 1 == 1 {
            self.lo[w] |= mask;
        } else {
            self.lo[w] &= !mask;
        }
        if bits & 2 == 2 {
            self.hi[w] |= mask;
        } else {
            self.hi[w] &= !mask;
        }
    }

    /// self += k * other
    fn add_scaled(&mut self, other: &Row, k: Gf4) {
        match k.bits() {
            0 => {}
            1 => {
                for (a, b) in self.lo.iter_mut().zip(&other.lo) {
                    *a ^= b;
                }
                for (a, b) in self.hi.iter_mut().zip(&other.hi) {
                    *a ^= b;
                }
            }
            2 => {
                // (l + hα)α = h + (l + h)α
                for w in 0..self.lo.len() {
                    let (l, h) = (other.lo[w], other.hi[w]);
                    self.lo[w] ^= h;
                    self.hi[w] ^= l ^ h;
                }
            }
            _ => {
                // (l + hα)(1 + α) = (l + h) + lα
                for w in 0..self.lo.len() {
                    let (l, h) = (other.lo[w], other.hi[w]);
                    self.lo[w] ^= l ^ h;
                    self.hi[w] ^= l;
                }
            }
        }
    }

    fn scale(&mut self, k: Gf4) {
        let mut out = Row::zero(self.lo.len());
        out.add_scaled(self, k);
        *self = out;
    }

    fn is_zero(&self) -> bool {
        self.lo.iter().all(|&w| w == 0) && self.hi.iter().all(|&w| w == 0)
    }
}

/// A dense `rows × cols` matrix over GF(4).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Row>,
}

/// Outcome of solving `M x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    /// A particular solution.
    Feasible(Vec<Gf4>),
    /// A vector `y` with `y M = 0` and `y · b ≠ 0`.
    Infeasible(Vec<Gf4>),
}

impl Solution {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Solution::Feasible(_))
    }
}

fn words_for(cols: usize) -> usize {
    cols.div_ceil(64).max(1)
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        let w = words_for(cols);
        Matrix { rows, cols, data: (0..rows).map(|_| Row::zero(w)).collect() }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Gf4::ONE);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Gf4>], cols: usize) -> Matrix {
        let mut m = Matrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "row {i} has wrong length");
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Gf4 {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, v: Gf4) {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r].set(c, v)
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: Gf4) {
        let cur = self.get(r, c);
        self.set(r, c, cur + v);
    }

    pub fn row(&self, r: usize) -> Vec<Gf4> {
        (0..self.cols).map(|c| self.get(r, c)).collect()
    }

    pub fn push_row(&mut self, row: &[Gf4]) {
        assert_eq!(row.len(), self.cols);
        let mut r = Row::zero(words_for(self.cols));
        for (c, &v) in row.iter().enumerate() {
            r.set(c, v);
        }
        self.data.push(r);
        self.rows += 1;
    }

    pub fn mul_vec(&self, x: &[Gf4]) -> Vec<Gf4> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = Gf4::ZERO;
                for (c, &v) in x.iter().enumerate() {
                    if !v.is_zero() {
                        acc += self.get(r, c) * v;
                    }
                }
                acc
            })
            .collect()
    }

    /// `y M` for a row vector `y`.
    pub fn vec_mul(&self, y: &[Gf4]) -> Vec<Gf4> {
        assert_eq!(y.len(), self.rows);
        let mut acc = Row::zero(words_for(self.cols));
        for (r, &k) in y.iter().enumerate() {
            acc.add_scaled(&self.data[r], k);
        }
        (0..self.cols).map(|c| acc.get(c)).collect()
    }

    /// Reduced row echelon form in place, restricted to pivot columns
    /// `< pivot_limit`. Returns the pivot column of each nonzero row.
    fn rref_limited(&mut self, pivot_limit: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..pivot_limit {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.data[i].get(c).is_zero()) else {
                continue;
            };
            self.data.swap(r, p);
            let inv = self.data[r].get(c).inv().expect("nonzero pivot");
            self.data[r].scale(inv);
            let pivot_row = self.data[r].clone();
            for i in 0..self.rows {
                if i != r {
                    let k = self.data[i].get(c);
                    if !k.is_zero() {
                        self.data[i].add_scaled(&pivot_row, k);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&mut self) -> Vec<usize> {
        let cols = self.cols;
        self.rref_limited(cols)
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{ x : M x = 0 }`.
    pub fn kernel(&self) -> Vec<Vec<Gf4>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Gf4::ZERO; self.cols];
            v[free] = Gf4::ONE;
            for (row, &p) in pivots.iter().enumerate() {
                // x_p + m[row][free] = 0
                v[p] = m.get(row, free);
            }
            basis.push(v);
        }
        basis
    }

    /// Solve `M x = b`, or exhibit a left null vector certifying that no
    /// solution exists.
    pub fn solve(&self, b: &[Gf4]) -> Solution {
        assert_eq!(b.len(), self.rows);
        let n = self.cols;
        let total = n + 1 + self.rows;
        let mut aug = Matrix::zeros(self.rows, total);
        for r in 0..self.rows {
            let src = &self.data[r];
            let dst = &mut aug.data[r];
            for c in 0..n {
                let v = src.get(c);
                if !v.is_zero() {
                    dst.set(c, v);
                }
            }
            dst.set(n, b[r]);
            dst.set(n + 1 + r, Gf4::ONE);
        }
        let pivots = aug.rref_limited(n);
        for r in pivots.len()..self.rows {
            if !aug.get(r, n).is_zero() {
                let y: Vec<Gf4> = (0..self.rows).map(|i| aug.get(r, n + 1 + i)).collect();
                return Solution::Infeasible(y);
            }
        }
        let mut x = vec![Gf4::ZERO; n];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug.get(r, n);
        }
        Solution::Feasible(x)
    }
}

/// Incrementally maintained row-reduced span, used for complement and
/// membership queries.
#[derive(Clone, Debug)]
pub struct Span {
    dim: usize,
    basis: Vec<Row>,
    pivots: Vec<usize>,
}

impl Span {
    pub fn new(dim: usize) -> Span {
        Span { dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    fn reduce(&self, v: &[Gf4]) -> Row {
        assert_eq!(v.len(), self.dim);
        let mut r = Row::zero(words_for(self.dim));
        for (c, &x) in v.iter().enumerate() {
            r.set(c, x);
        }
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let k = r.get(p);
            if !k.is_zero() {
                r.add_scaled(b, k);
            }
        }
        r
    }

    pub fn contains(&self, v: &[Gf4]) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v`; returns `true` if the span grew.
    pub fn insert(&mut self, v: &[Gf4]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = (0..self.dim).find(|&c| !r.get(c).is_zero()) else {
            return false;
        };
        let inv = r.get(p).inv().expect("nonzero");
        r.scale(inv);
        for b in self.basis.iter_mut() {
            let k = b.get(p);
            if !k.is_zero() {
                b.add_scaled(&r, k);
            }
        }
        self.basis.push(r);
        self.pivots.push(p);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(v: u8) -> Gf4 {
        Gf4::from_bits(v)
    }

    fn naive_rank(rows: &[Vec<Gf4>]) -> usize {
        // Independent oracle: plain Gaussian elimination on Vec<Vec<_>>.
        let mut m: Vec<Vec<Gf4>> = rows.to_vec();
        let cols = m.first().map_or(0, |r| r.len());
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
            m.swap(rank, p);
            let inv = m[rank][c].inv().unwrap();
            for x in m[rank].iter_mut() {
                *x *= inv;
            }
            for i in 0..m.len() {
                if i != rank && !m[i][c].is_zero() {
                    let k = m[i][c];
                    for j in 0..cols {
                        let v = m[rank][j];
                        m[i][j] += k * v;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn identity_rank_and_empty_kernel() {
        let m = Matrix::identity(70);
        assert_eq!(m.rank(), 70);
        assert!(m.kernel().is_empty());
    }

    #[test]
    fn infeasible_system_has_certificate() {
        // x + y = 1, x + y = α
        let m = Matrix::from_rows(&[vec![g(1), g(1)], vec![g(1), g(1)]], 2);
        let b = vec![g(1), g(2)];
        match m.solve(&b) {
            Solution::Infeasible(y) => {
                assert!(m.vec_mul(&y).iter().all(|v| v.is_zero()));
                let yb = y.iter().zip(&b).fold(Gf4::ZERO, |acc, (a, c)| acc + *a * *c);
                assert!(!yb.is_zero());
            }
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn span_membership() {
        let mut s = Span::new(3);
        assert!(s.insert(&[g(1), g(2), g(0)]));
        assert!(s.insert(&[g(0), g(1), g(1)]));
        // α·(1, α, 0)
        assert!(!s.insert(&[g(2), g(3), g(0)]));
        assert!(s.contains(&[g(1), g(3), g(1)]));
        assert!(!s.contains(&[g(0), g(0), g(1)]));
    }

    fn arb_matrix() -> impl Strategy<Value = (usize, usize, Vec<u8>)> {
        (1usize..12, 1usize..80)
            .prop_flat_map(|(r, c)| (Just(r), Just(c), proptest::collection::vec(0u8..4, r * c)))
    }

    proptest! {
        #[test]
        fn rank_matches_naive_and_kernel_is_annihilated((r, c, vals) in arb_matrix()) {
            let rows: Vec<Vec<Gf4>> = vals.chunks(c).map(|ch| ch.iter().map(|&v| g(v)).collect()).collect();
            let m = Matrix::from_rows(&rows, c);
            let rank = m.rank();
            prop_assert_eq!(rank, naive_rank(&rows));
            let ker = m.kernel();
            prop_assert_eq!(ker.len(), c - rank);
            for v in &ker {
                prop_assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
            }
            let _ = r;
        }

        #[test]
        fn solve_is_sound((r, c, vals) in arb_matrix(), seed in proptest::collection::vec(0u8..4, 12)) {
            let rows: Vec<Vec<Gf4>> = vals.chunks(c).map(|ch| ch.iter().map(|&v| g(v)).collect()).collect();
            let m = Matrix::from_rows(&rows, c);
            let b: Vec<Gf4> = (0..r).map(|i| g(seed[i % seed.len()])).collect();
            match m.solve(&b) {
                Solution::Feasible(x) => prop_assert_eq!(m.mul_vec(&x), b),
                Solution::Infeasible(y) => {
                    prop_assert!(m.vec_mul(&y).iter().all(|v| v.is_zero()));
                    let yb = y.iter().zip(&b).fold(Gf4::ZERO, |acc, (a, c)| acc + *a * *c);
                    prop_assert!(!yb.is_zero());
                }
            }
        }
    }
}
