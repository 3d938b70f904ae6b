//! Seeded random presentations and the identities checked on them.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::matrix::{LambdaMatrix, PlainMatrix};
use super::pieces::{check_exact, has_no_units};
use super::triple::{indeterminacy_member, m_matrix, minimal_resolution, prime_witnesses, Windows};
use crate::error::Result;
use crate::field::{FieldKind, Gf4};
use crate::secondary::{Kind, SecondaryProduct};
use crate::tate_ring::{dim, Bm, RingElement, Variant};

/// Generator windows giving I ⊂ [0,3], J ⊂ [−1,2], K ⊂ [−8,−5], L ⊂ [−15,−12].
pub const SAMPLE_J: i32 = -1;
pub const SAMPLE_WINDOWS: Windows = Windows { k: -8, l: -15 };

/// A random presentation matrix of size at most 4×4, with row degrees in
/// [0,3], column degrees in [−3,2], and random entries wherever the entry
/// degree lies in [1,3]. Never returns the zero matrix.
pub fn random_presentation(variant: Variant, field: FieldKind, rng: &mut ChaCha8Rng) -> LambdaMatrix {
    let ks = field.elements();
    loop {
        let rows: Vec<i32> = (0..rng.gen_range(1..=4)).map(|_| rng.gen_range(0..=3)).collect();
        let cols: Vec<i32> = (0..rng.gen_range(1..=4)).map(|_| rng.gen_range(-3..=2)).collect();
        let mut m = PlainMatrix::zero(variant, rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                let d = r - c;
                if (1..=3).contains(&d) {
                    let coords: Vec<Gf4> = (0..dim(d)).map(|_| ks[rng.gen_range(0..ks.len())]).collect();
                    m.set(i, j, RingElement::from_coords(variant, d, &coords));
                }
            }
        }
        if !m.is_zero() {
            return LambdaMatrix::new(rows.into(), cols.into(), m).expect("entries are homogeneous by construction");
        }
    }
}

/// `count` presentations drawn in order from one seeded stream.
pub fn random_presentations(variant: Variant, field: FieldKind, seed: u64, count: usize) -> Vec<LambdaMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_presentation(variant, field, &mut rng)).collect()
}

#[derive(Clone, Debug)]
pub struct SampleReport {
    pub a: LambdaMatrix,
    pub b: LambdaMatrix,
    pub c: LambdaMatrix,
    pub exact: bool,
    pub no_units: bool,
    /// B_y·C_y = 0.
    pub by_cy_zero: bool,
    /// m′(A,B,C) = AV + WC.
    pub prime_identity: bool,
    /// m̃(A,B,C) = 0.
    pub tilde_zero: bool,
    /// m(A,B,C) lies in the indeterminacy.
    pub realizable: bool,
}

impl SampleReport {
    pub fn passed(&self) -> bool {
        self.exact && self.no_units && self.by_cy_zero && self.prime_identity && self.tilde_zero && self.realizable
    }
}

/// Resolves one presentation minimally and checks the identities on it.
pub fn check_sample(p: &SecondaryProduct, a: &LambdaMatrix) -> Result<SampleReport> {
    let [a, b, c] = minimal_resolution(a, SAMPLE_J, SAMPLE_WINDOWS)?;
    let exact = check_exact(&a, &b)?.exact() && check_exact(&b, &c)?.exact();
    let no_units = has_no_units(&a) && has_no_units(&b) && has_no_units(&c);
    let by_cy_zero = b.plain().coefficient(Bm::Y).mul(&c.plain().coefficient(Bm::Y))?.is_zero();
    let (w, v) = prime_witnesses(&a, &b, &c)?;
    let prime = m_matrix(p, Kind::MPrime, &a, &b, &c)?;
    let rhs = a.plain().mul(v.plain())?.add(&w.plain().mul(c.plain())?)?;
    let prime_identity = *prime.plain() == rhs;
    let tilde_zero = m_matrix(p, Kind::MTilde, &a, &b, &c)?.is_zero();
    let value = m_matrix(p, Kind::M, &a, &b, &c)?;
    let realizable = indeterminacy_member(&value, &a, &c)?.in_indeterminacy;
    Ok(SampleReport { a, b, c, exact, no_units, by_cy_zero, prime_identity, tilde_zero, realizable })
}

/// Checks every presentation, in parallel, keeping input order.
pub fn check_samples(p: &SecondaryProduct, samples: &[LambdaMatrix]) -> Result<Vec<SampleReport>> {
    samples.par_iter().map(|a| check_sample(p, a)).collect()
}
