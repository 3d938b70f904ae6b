use std::fmt;

use crate::field::Gf4;
use crate::group_algebra::AlgebraElement;
use crate::linalg::Matrix;

/// A finite matrix over kG, acting on columns by left multiplication.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KGMatrix {
    t: u32,
    rows: usize,
    cols: usize,
    entries: Vec<AlgebraElement>,
}

impl KGMatrix {
    pub fn zeros(t: u32, rows: usize, cols: usize) -> KGMatrix {
        KGMatrix { t, rows, cols, entries: vec![AlgebraElement::zero(t); rows * cols] }
    }

    pub fn identity(t: u32, n: usize) -> KGMatrix {
        let mut m = KGMatrix::zeros(t, n, n);
        for i in 0..n {
            m.set(i, i, AlgebraElement::one(t));
        }
        m
    }

    /// Row-major entries.
    pub fn from_entries(t: u32, rows: usize, cols: usize, entries: Vec<AlgebraElement>) -> KGMatrix {
        assert_eq!(entries.len(), rows * cols, "entry count");
        assert!(entries.iter().all(|e| e.t() == t), "entries over a different group");
        KGMatrix { t, rows, cols, entries }
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &AlgebraElement {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: AlgebraElement) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[AlgebraElement] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(AlgebraElement::is_zero)
    }

    pub fn mul(&self, rhs: &KGMatrix) -> KGMatrix {
        assert_eq!(self.cols, rhs.rows, "kG-matrix shapes do not compose");
        let mut out = KGMatrix::zeros(self.t, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let l = self.get(i, k);
                if l.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let r = rhs.get(k, j);
                    if !r.is_zero() {
                        out.entries[i * rhs.cols + j] += &(l * r);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &KGMatrix) -> KGMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "kG-matrix shapes differ");
        KGMatrix {
            t: self.t,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, k: Gf4) -> KGMatrix {
        KGMatrix {
            t: self.t,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.scale(k)).collect(),
        }
    }

    /// Entrywise augmentation.
    pub fn augmentation(&self) -> Vec<Gf4> {
        self.entries.iter().map(AlgebraElement::augmentation).collect()
    }

    /// The underlying k-linear map k^{4t·cols} → k^{4t·rows}.
    pub fn to_linear(&self) -> Matrix {
        let n = 4 * self.t as usize;
        let mut m = Matrix::zeros(self.rows * n, self.cols * n);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = self.get(i, j);
                if e.is_zero() {
                    continue;
                }
                for (p, row) in e.left_mul_matrix().iter().enumerate() {
                    for (q, &v) in row.iter().enumerate() {
                        if !v.is_zero() {
                            m.set(i * n + p, j * n + q, v);
                        }
                    }
                }
            }
        }
        m
    }
}

impl fmt::Display for KGMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let cells: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}
