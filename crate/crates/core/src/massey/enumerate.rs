//! Exhaustive search over 1×1 triples (a, b, c) with ab = 0 = bc.

use rayon::prelude::*;

use crate::error::Result;
use crate::field::{FieldKind, Gf4};
use crate::linalg::Span;
use crate::secondary::{Kind, SecondaryProduct};
use crate::tate_ring::{basis, dim, RingElement, Variant};

/// All nonzero homogeneous elements of degree d with coefficients in `field`.
pub fn homogeneous_elements(variant: Variant, field: FieldKind, d: i32) -> Vec<RingElement> {
    let n = dim(d);
    let ks = field.elements();
    let mut out = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        let coords: Vec<Gf4> = idx.iter().map(|&i| ks[i]).collect();
        if coords.iter().any(|c| !c.is_zero()) {
            out.push(RingElement::from_coords(variant, d, &coords));
        }
        let mut p = 0;
        while p < n {
            idx[p] += 1;
            if idx[p] < ks.len() {
                break;
            }
            idx[p] = 0;
            p += 1;
        }
        if p == n {
            return out;
        }
    }
}

/// Whether `value` lies in a·Λ_{|b|+|c|−1} + Λ_{|a|+|b|−1}·c.
pub fn scalar_member(a: &RingElement, b: &RingElement, c: &RingElement, value: &RingElement) -> bool {
    let (Some(da), Some(db), Some(dc)) = (a.degree(), b.degree(), c.degree()) else {
        return value.is_zero();
    };
    let d = da + db + dc - 1;
    let v = a.variant();
    let mut span = Span::new(dim(d));
    for mu in basis(db + dc - 1) {
        span.insert(&(a * &RingElement::monomial(v, mu)).coords(d));
    }
    for mu in basis(da + db - 1) {
        span.insert(&(&RingElement::monomial(v, mu) * c).coords(d));
    }
    span.contains(&value.coords(d))
}

/// Verdict for one triple, or `None` when ab ≠ 0 or bc ≠ 0.
pub fn scalar_triple(
    p: &SecondaryProduct,
    kind: Kind,
    a: &RingElement,
    b: &RingElement,
    c: &RingElement,
) -> Result<Option<(RingElement, bool)>> {
    if !(a * b).is_zero() || !(b * c).is_zero() {
        return Ok(None);
    }
    let value = p.eval(kind, a, b, c)?;
    let member = scalar_member(a, b, c, &value);
    Ok(Some((value, member)))
}

#[derive(Clone, Debug)]
pub struct ScalarReport {
    pub field: FieldKind,
    pub degrees: (i32, i32),
    pub elements: usize,
    pub defined: usize,
    pub skipped: usize,
    /// (a, b, c, m(a,b,c)) with m(a,b,c) outside the indeterminacy.
    pub counterexamples: Vec<(RingElement, RingElement, RingElement, RingElement)>,
}

/// Enumerates every triple of nonzero homogeneous elements with degrees in
/// [−4·s_range, min(max_degree, 4·s_range + 3)], so that all s-exponents lie
/// in [−s_range, s_range].
pub fn enumerate_scalar_triples(
    p: &SecondaryProduct,
    kind: Kind,
    field: FieldKind,
    max_degree: i32,
    s_range: i32,
) -> Result<ScalarReport> {
    let v = p.variant();
    let lo = -4 * s_range;
    let hi = max_degree.min(4 * s_range + 3);
    let elements: Vec<RingElement> = (lo..=hi).flat_map(|d| homogeneous_elements(v, field, d)).collect();
    let per_a: Vec<Result<(usize, usize, Vec<_>)>> = elements
        .par_iter()
        .map(|a| {
            let (mut defined, mut skipped, mut bad) = (0, 0, Vec::new());
            for b in &elements {
                if !(a * b).is_zero() {
                    skipped += elements.len();
                    continue;
                }
                for c in &elements {
                    match scalar_triple(p, kind, a, b, c)? {
                        None => skipped += 1,
                        Some((value, member)) => {
                            defined += 1;
                            if !member {
                                bad.push((a.clone(), b.clone(), c.clone(), value));
                            }
                        }
                    }
                }
            }
            Ok((defined, skipped, bad))
        })
        .collect();
    let mut report =
        ScalarReport { field, degrees: (lo, hi), elements: elements.len(), defined: 0, skipped: 0, counterexamples: Vec::new() };
    for r in per_a {
        let (d, s, bad) = r?;
        report.defined += d;
        report.skipped += s;
        report.counterexamples.extend(bad);
    }
    Ok(report)
}
