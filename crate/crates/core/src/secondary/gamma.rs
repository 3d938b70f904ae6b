//! Finite restrictions of δg = m, used to certify that m is not a coboundary.

use std::collections::BTreeMap;
use std::fmt;

use super::product::{Kind, SecondaryProduct};
use crate::error::{Error, Result};
use crate::field::Gf4;
use crate::linalg::{Matrix, Solution};
use crate::tate_ring::{basis, dim, BasisMonomial, Bm, RingElement, Variant};

/// The equation u·m(a,b,c) = u·δg(a,b,c).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    pub multiplier: RingElement,
    pub a: RingElement,
    pub b: RingElement,
    pub c: RingElement,
}

impl Equation {
    pub fn triple(a: RingElement, b: RingElement, c: RingElement) -> Equation {
        let multiplier = RingElement::one(a.variant());
        Equation { multiplier, a, b, c }
    }

    pub fn scaled(multiplier: RingElement, a: RingElement, b: RingElement, c: RingElement) -> Equation {
        Equation { multiplier, a, b, c }
    }

    /// Degree of both sides, or `None` if some factor is zero.
    fn degree(&self) -> Option<i32> {
        let mut d = -1;
        for e in [&self.multiplier, &self.a, &self.b, &self.c] {
            d += e.degree()?;
        }
        Some(d)
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let triple = format!("({}, {}, {})", self.a, self.b, self.c);
        if self.multiplier == RingElement::one(self.multiplier.variant()) {
            f.write_str(&triple)
        } else {
            write!(f, "({})·{triple}", self.multiplier)
        }
    }
}

/// All triples of 𝓑-monomials (s-exponent 0) of total degree at most `max_degree`.
pub fn default_equations(variant: Variant, max_degree: i32) -> Vec<Equation> {
    let mut out = Vec::new();
    for a in Bm::ALL {
        for b in Bm::ALL {
            for c in Bm::ALL {
                if a.degree() + b.degree() + c.degree() <= max_degree {
                    let e = |m: Bm| RingElement::basis(variant, 0, m);
                    out.push(Equation::triple(e(a), e(b), e(c)));
                }
            }
        }
    }
    out
}

/// The hand-picked equation sets whose sum yields a contradiction: for
/// Q₈ the triples (y,x,y), (x,y,y), (y,y,x), (x,x,x), (x,y,x) and their
/// x ↔ y mirror; for t ≥ 4 the triples (x,z,x²), (x²,x,z), (z,x²,x),
/// (z,z²,z) and z·(z,z,z).
pub fn reference_equations(variant: Variant) -> Vec<Equation> {
    let x = RingElement::x(variant);
    let y = RingElement::y(variant);
    match variant {
        Variant::Q8 => {
            let five = |x: &RingElement, y: &RingElement| {
                vec![
                    Equation::triple(y.clone(), x.clone(), y.clone()),
                    Equation::triple(x.clone(), y.clone(), y.clone()),
                    Equation::triple(y.clone(), y.clone(), x.clone()),
                    Equation::triple(x.clone(), x.clone(), x.clone()),
                    Equation::triple(x.clone(), y.clone(), x.clone()),
                ]
            };
            let mut out = five(&x, &y);
            out.extend(five(&y, &x));
            out
        }
        Variant::Generalized => {
            let z = RingElement::z(variant);
            let x2 = x.pow(2);
            let z2 = z.pow(2);
            vec![
                Equation::triple(x.clone(), z.clone(), x2.clone()),
                Equation::triple(x2.clone(), x.clone(), z.clone()),
                Equation::triple(z.clone(), x2, x),
                Equation::triple(z.clone(), z2, z.clone()),
                Equation::scaled(z.clone(), z.clone(), z.clone(), z),
            ]
        }
    }
}

#[derive(Clone, Debug)]
pub enum GammaVerdict {
    /// No g solves the restricted system. `weights` is a left null-vector of
    /// the coefficient matrix with nonzero pairing against the right side;
    /// `support` lists the equations it touches.
    Nontrivial { weights: Vec<Gf4>, support: Vec<usize>, verified: bool },
    /// The restricted system is solvable; nothing follows about γ.
    Inconclusive { witness: Vec<(BasisMonomial, BasisMonomial, RingElement)> },
}

#[derive(Clone, Debug)]
pub struct GammaCertificate {
    pub kind: Kind,
    pub equations: Vec<Equation>,
    pub unknown_pairs: Vec<(BasisMonomial, BasisMonomial)>,
    pub unknowns: usize,
    pub scalar_equations: usize,
    pub verdict: GammaVerdict,
}

impl GammaCertificate {
    pub fn is_nontrivial(&self) -> bool {
        matches!(self.verdict, GammaVerdict::Nontrivial { .. })
    }

    /// Equations in the support of the certificate.
    pub fn support(&self) -> Vec<&Equation> {
        match &self.verdict {
            GammaVerdict::Nontrivial { support, .. } => support.iter().map(|&i| &self.equations[i]).collect(),
            GammaVerdict::Inconclusive { .. } => Vec::new(),
        }
    }
}

// k·left·g(σ,τ)·right
struct Contribution {
    pair: (BasisMonomial, BasisMonomial),
    k: Gf4,
    left: RingElement,
    right: RingElement,
}

fn expand_pairs(
    out: &mut Vec<Contribution>,
    u: &RingElement,
    v: &RingElement,
    left: &RingElement,
    right: &RingElement,
) {
    for (s, ks) in u.terms() {
        for (t, kt) in v.terms() {
            out.push(Contribution { pair: (s, t), k: ks * kt, left: left.clone(), right: right.clone() });
        }
    }
}

/// Solves δg = `kind` on the given equations for an unknown bilinear g of
/// degree −1.
pub fn gamma_certificate(p: &SecondaryProduct, kind: Kind, equations: &[Equation]) -> Result<GammaCertificate> {
    if !p.supports(kind) {
        return Err(Error::Unsupported(format!("{kind} is only defined for t >= 4")));
    }
    let v = p.variant();
    let one = RingElement::one(v);
    let mut per_eq: Vec<(Option<i32>, Vec<Contribution>, RingElement)> = Vec::new();
    let mut offsets: BTreeMap<(BasisMonomial, BasisMonomial), usize> = BTreeMap::new();
    for eq in equations {
        let Some(d) = eq.degree() else {
            per_eq.push((None, Vec::new(), RingElement::zero(v)));
            continue;
        };
        let (u, a, b, c) = (&eq.multiplier, &eq.a, &eq.b, &eq.c);
        let mut contribs = Vec::new();
        expand_pairs(&mut contribs, b, c, &(u * a), &one);
        expand_pairs(&mut contribs, &(a * b), c, u, &one);
        expand_pairs(&mut contribs, a, &(b * c), u, &one);
        expand_pairs(&mut contribs, a, b, u, c);
        for ct in &contribs {
            offsets.entry(ct.pair).or_insert(0);
        }
        let rhs = u * &p.eval(kind, a, b, c)?;
        per_eq.push((Some(d), contribs, rhs));
    }
    let mut total = 0;
    let mut unknown_pairs = Vec::with_capacity(offsets.len());
    for (pair, off) in offsets.iter_mut() {
        *off = total;
        total += dim(pair.0.degree() + pair.1.degree() - 1);
        unknown_pairs.push(*pair);
    }

    let mut rows: Vec<Vec<Gf4>> = Vec::new();
    let mut rhs: Vec<Gf4> = Vec::new();
    let mut owner: Vec<usize> = Vec::new();
    for (i, (d, contribs, value)) in per_eq.iter().enumerate() {
        let Some(d) = *d else { continue };
        let n = dim(d);
        let base = rows.len();
        rows.extend((0..n).map(|_| vec![Gf4::ZERO; total]));
        rhs.extend(value.coords(d));
        owner.extend(std::iter::repeat_n(i, n));
        for ct in contribs {
            let gd = ct.pair.0.degree() + ct.pair.1.degree() - 1;
            let off = offsets[&ct.pair];
            for (l, e) in basis(gd).into_iter().enumerate() {
                let img = &(&ct.left * &RingElement::monomial(v, e)) * &ct.right;
                for (r, x) in img.scale(ct.k).coords(d).into_iter().enumerate() {
                    rows[base + r][off + l] += x;
                }
            }
        }
    }

    let system = Matrix::from_rows(&rows, total);
    let verdict = match system.solve(&rhs) {
        Solution::Infeasible(y) => {
            let pairing = y.iter().zip(&rhs).fold(Gf4::ZERO, |acc, (&a, &b)| acc + a * b);
            let verified = system.vec_mul(&y).iter().all(|x| x.is_zero()) && !pairing.is_zero();
            let mut support: Vec<usize> =
                y.iter().zip(&owner).filter(|(w, _)| !w.is_zero()).map(|(_, &i)| i).collect();
            support.dedup();
            GammaVerdict::Nontrivial { weights: y, support, verified }
        }
        Solution::Feasible(x) => {
            let witness = unknown_pairs
                .iter()
                .map(|&(s, t)| {
                    let gd = s.degree() + t.degree() - 1;
                    let off = offsets[&(s, t)];
                    (s, t, RingElement::from_coords(v, gd, &x[off..off + dim(gd)]))
                })
                .filter(|(_, _, g)| !g.is_zero())
                .collect();
            GammaVerdict::Inconclusive { witness }
        }
    };
    Ok(GammaCertificate {
        kind,
        equations: equations.to_vec(),
        unknown_pairs,
        unknowns: total,
        scalar_equations: rows.len(),
        verdict,
    })
}
