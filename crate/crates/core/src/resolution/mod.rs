//! The 4-periodic complete resolution P of the trivial module over kQ₄ₜ,
//! periodic maps between its shifts and the class map into Λ.
//!
//! P_j is free of rank 1, 2, 2, 1 for j ≡ 0, 1, 2, 3 (mod 4). A map
//! P_m → P_n is a rank(n) × rank(m) matrix over kG acting on columns by
//! left multiplication, so composition is the ordinary matrix product.

mod homotopy;
mod kg_matrix;
mod maps;
mod standard;

pub use homotopy::{solve_homotopy, solve_homotopy_with, HomotopyConstraints, HomotopyOutcome};
pub use kg_matrix::KGMatrix;
pub use maps::PeriodicMap;
pub use standard::{standard_map, MapName, StandardMaps};

use crate::group_algebra::{Elements, GroupConfig};

/// Free rank of P_j.
pub fn rank(j: i64) -> usize {
    [1, 2, 2, 1][j.rem_euclid(4) as usize]
}

/// The complex P together with its four boundary maps ∂_j: P_j → P_{j−1}.
#[derive(Clone, Debug)]
pub struct PeriodicComplex {
    cfg: GroupConfig,
    boundary: [KGMatrix; 4],
}

impl PeriodicComplex {
    pub fn cfg(&self) -> &GroupConfig {
        &self.cfg
    }

    pub fn t(&self) -> u32 {
        self.cfg.t()
    }

    /// ∂_j: P_j → P_{j−1}.
    pub fn boundary(&self, j: i64) -> &KGMatrix {
        &self.boundary[j.rem_euclid(4) as usize]
    }
}

pub fn build_resolution(cfg: &GroupConfig) -> PeriodicComplex {
    let t = cfg.t();
    let e = Elements::new(cfg);
    let d0 = KGMatrix::from_entries(t, 1, 1, vec![e.n.clone()]);
    let d1 = KGMatrix::from_entries(t, 1, 2, vec![e.a.clone(), e.b.clone()]);
    let d2 = KGMatrix::from_entries(
        t,
        2,
        2,
        vec![e.a_pow(t - 1), e.c.clone(), e.b.clone(), e.a.clone()],
    );
    let d3 = KGMatrix::from_entries(t, 2, 1, vec![e.a.clone(), e.c.clone()]);
    PeriodicComplex { cfg: *cfg, boundary: [d0, d1, d2, d3] }
}

/// Result of checking one spot P_j of the complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpotReport {
    pub j: usize,
    /// ∂_j ∂_{j+1} = 0.
    pub square_zero: bool,
    pub dim_ker: usize,
    pub dim_im: usize,
}

impl SpotReport {
    pub fn exact(&self) -> bool {
        self.square_zero && self.dim_ker == self.dim_im
    }
}

/// Checks ∂² = 0 symbolically and exactness by k-linear ranks at the
/// four spots P₀, …, P₃.
pub fn check_complex(p: &PeriodicComplex) -> Vec<SpotReport> {
    let n = p.cfg.order();
    (0..4)
        .map(|j| {
            let dj = p.boundary(j as i64);
            let dnext = p.boundary(j as i64 + 1);
            let square_zero = dj.mul(dnext).is_zero();
            let dim_source = rank(j as i64) * n;
            let dim_ker = dim_source - dj.to_linear().rank();
            let dim_im = dnext.to_linear().rank();
            SpotReport { j, square_zero, dim_ker, dim_im }
        })
        .collect()
}
