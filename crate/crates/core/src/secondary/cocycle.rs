//! The Hochschild cocycle law for a trilinear cochain on Λ.

use rayon::prelude::*;

use super::product::{Kind, SecondaryProduct};
use crate::error::Result;
use crate::tate_ring::{BasisMonomial, Bm, RingElement};

/// A 4-tuple on which the cocycle law fails, with the nonzero left side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleFailure {
    pub tuple: [BasisMonomial; 4],
    pub value: RingElement,
}

#[derive(Clone, Debug)]
pub struct CocycleReport {
    pub kind: Kind,
    pub window: i32,
    pub checked: usize,
    pub failure_count: usize,
    /// The first few failures in enumeration order.
    pub failures: Vec<CocycleFailure>,
}

impl CocycleReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

const KEEP: usize = 8;

/// δm(a,b,c,d) = a·m(b,c,d) + m(ab,c,d) + m(a,bc,d) + m(a,b,cd) + m(a,b,c)·d.
pub fn coboundary(p: &SecondaryProduct, kind: Kind, t: [&RingElement; 4]) -> Result<RingElement> {
    let [a, b, c, d] = t;
    let mut out = a * &p.eval(kind, b, c, d)?;
    out += &p.eval(kind, &(a * b), c, d)?;
    out += &p.eval(kind, a, &(b * c), d)?;
    out += &p.eval(kind, a, b, &(c * d))?;
    out += &(&p.eval(kind, a, b, c)? * d);
    Ok(out)
}

/// Checks δm = 0 on all 4-tuples from {sⁱb : |i| ≤ window, b ∈ 𝓑}.
pub fn verify_cocycle(p: &SecondaryProduct, kind: Kind, window: i32) -> Result<CocycleReport> {
    let v = p.variant();
    let monos: Vec<(BasisMonomial, RingElement)> = (-window..=window)
        .flat_map(|s| Bm::ALL.into_iter().map(move |b| BasisMonomial::new(s, b)))
        .map(|m| (m, RingElement::monomial(v, m)))
        .collect();
    let n = monos.len();
    let per_first: Vec<Result<(usize, Vec<CocycleFailure>)>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut count = 0;
            let mut kept = Vec::new();
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let t = [&monos[i].1, &monos[j].1, &monos[k].1, &monos[l].1];
                        let value = coboundary(p, kind, t)?;
                        if !value.is_zero() {
                            count += 1;
                            if kept.len() < KEEP {
                                let tuple = [monos[i].0, monos[j].0, monos[k].0, monos[l].0];
                                kept.push(CocycleFailure { tuple, value });
                            }
                        }
                    }
                }
            }
            Ok((count, kept))
        })
        .collect();
    let mut failure_count = 0;
    let mut failures = Vec::new();
    for r in per_first {
        let (count, kept) = r?;
        failure_count += count;
        failures.extend(kept);
    }
    failures.truncate(KEEP);
    Ok(CocycleReport { kind, window, checked: n.pow(4), failure_count, failures })
}
