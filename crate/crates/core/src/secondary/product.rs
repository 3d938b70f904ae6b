//! The trilinear cochains m, m′, m″ = m + m′ and m̃ = m″ + δg on Λ.

use std::fmt;
use std::str::FromStr;

use super::tables::CochainTable;
use crate::error::{Error, Result};
use crate::group_algebra::GroupConfig;
use crate::tate_ring::{BasisMonomial, Bm, RingElement, Variant, ZMon};

/// Which cochain to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    /// m(a,b,c) = 𝒞 of f₂(a,b)f₁(c) + f₂(a,bc) + f₂(ab,c) + f₁(a)f₂(b,c).
    M,
    /// m′(sⁱa, sʲb, sᵏc) = s^{i+j+k} m(a,b,c) for a, b, c ∈ 𝓑.
    MPrime,
    /// m + m′.
    MDoublePrime,
    /// m″ + δg with the fixed correction g (t ≥ 4 only).
    MTilde,
}

impl Kind {
    pub const ALL: [Kind; 4] = [Kind::M, Kind::MPrime, Kind::MDoublePrime, Kind::MTilde];

    pub fn name(self) -> &'static str {
        match self {
            Kind::M => "m",
            Kind::MPrime => "m'",
            Kind::MDoublePrime => "m''",
            Kind::MTilde => "m~",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Kind> {
        match s {
            "m" => Ok(Kind::M),
            "m'" | "mprime" | "m-prime" => Ok(Kind::MPrime),
            "m''" | "mdoubleprime" | "m-double-prime" => Ok(Kind::MDoublePrime),
            "m~" | "mtilde" | "m-tilde" => Ok(Kind::MTilde),
            _ => Err(Error::Parse(format!("unknown cochain kind {s:?}"))),
        }
    }
}

/// How m(s·a, b, c) is obtained from the data on 𝓑.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OddRule {
    /// The class formula evaluated on f₁(sa) directly.
    Direct,
    /// a·𝒞(h(b,c))·s + m(a,b,c)·s.
    Recurrence,
    /// s·m(a,b,c) + a·𝒞(h(b,c)), read without the trailing s.
    Literal,
}

fn slot(e: usize, a: Bm, b: Bm, c: Bm) -> usize {
    ((e * 6 + a.index()) * 6 + b.index()) * 6 + c.index()
}

/// Tables of m on (𝓑 ∪ s𝓑) × 𝓑 × 𝓑 and of 𝒞(h) on 𝓑 × 𝓑.
#[derive(Clone, Debug)]
pub struct SecondaryProduct {
    variant: Variant,
    base: Vec<RingElement>,
    h: Vec<RingElement>,
}

impl SecondaryProduct {
    pub fn new(table: &CochainTable) -> SecondaryProduct {
        let variant = table.variant();
        let mut base = vec![RingElement::zero(variant); 432];
        for e in 0..2 {
            for a in Bm::ALL {
                for b in Bm::ALL {
                    for c in Bm::ALL {
                        base[slot(e, a, b, c)] =
                            table.secondary_class(BasisMonomial::new(e as i32, a), b.into(), c.into());
                    }
                }
            }
        }
        let mut h = Vec::with_capacity(36);
        for b in Bm::ALL {
            for c in Bm::ALL {
                h.push(table.h_class(b, c));
            }
        }
        SecondaryProduct { variant, base, h }
    }

    /// A product whose odd-s values follow the recurrence from the given
    /// values on 𝓑³ and the given 𝒞(h) table, both indexed row-major over 𝓑.
    pub fn from_tables(variant: Variant, even: &[RingElement], h: &[RingElement]) -> Result<SecondaryProduct> {
        if even.len() != 216 || h.len() != 36 {
            return Err(Error::Shape("expected 216 triple values and 36 h-classes".into()));
        }
        let mut base = vec![RingElement::zero(variant); 432];
        base[..216].clone_from_slice(even);
        let mut out = SecondaryProduct { variant, base, h: h.to_vec() };
        for a in Bm::ALL {
            for b in Bm::ALL {
                for c in Bm::ALL {
                    out.base[slot(1, a, b, c)] = out.odd(OddRule::Recurrence, a, b, c);
                }
            }
        }
        Ok(out)
    }

    pub fn from_config(cfg: &GroupConfig) -> Result<SecondaryProduct> {
        Ok(SecondaryProduct::new(&CochainTable::new(cfg)?))
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// Values m(a,b,c) on 𝓑³, row-major.
    pub fn even_table(&self) -> &[RingElement] {
        &self.base[..216]
    }

    /// 𝒞(h) on 𝓑², row-major.
    pub fn h_table(&self) -> &[RingElement] {
        &self.h
    }

    /// 𝒞(h(b, c)).
    pub fn h_class(&self, b: Bm, c: Bm) -> &RingElement {
        &self.h[b.index() * 6 + c.index()]
    }

    pub fn supports(&self, kind: Kind) -> bool {
        kind != Kind::MTilde || self.variant == Variant::Generalized
    }

    fn check(&self, kind: Kind) -> Result<()> {
        if self.supports(kind) {
            Ok(())
        } else {
            Err(Error::Unsupported(format!("{kind} is only defined for t >= 4")))
        }
    }

    fn mono(&self, m: BasisMonomial) -> RingElement {
        RingElement::monomial(self.variant, m)
    }

    /// m on basis monomials, extended from 𝓑 ∪ s𝓑 by s²-periodicity in the
    /// first slot and s-linearity in the other two.
    pub fn m(&self, a: BasisMonomial, b: BasisMonomial, c: BasisMonomial) -> RingElement {
        let e = a.s.rem_euclid(2);
        let shift = a.s - e + b.s + c.s;
        self.base[slot(e as usize, a.b, b.b, c.b)].shift_s(shift)
    }

    /// m(s·a, b, c) for a, b, c ∈ 𝓑 under the given rule.
    pub fn odd(&self, rule: OddRule, a: Bm, b: Bm, c: Bm) -> RingElement {
        let ra = RingElement::basis(self.variant, 0, a);
        let mabc = &self.base[slot(0, a, b, c)];
        let ah = &ra * self.h_class(b, c);
        match rule {
            OddRule::Direct => self.base[slot(1, a, b, c)].clone(),
            OddRule::Recurrence => (&ah + mabc).shift_s(1),
            OddRule::Literal => &ah + &mabc.shift_s(1),
        }
    }

    pub fn m_prime(&self, a: BasisMonomial, b: BasisMonomial, c: BasisMonomial) -> RingElement {
        self.base[slot(0, a.b, b.b, c.b)].shift_s(a.s + b.s + c.s)
    }

    /// The correction g: g(s⁻¹x², sⁱx) = s^{i−1}z², g(s⁻¹x², sⁱz) = s^{i−1}x²,
    /// zero on every other pair from the frame {sⁱ, sⁱx, sⁱz, sⁱx², sⁱz², sⁱx³}.
    pub fn g(&self, u: &RingElement, v: &RingElement) -> Result<RingElement> {
        let v0 = self.variant;
        let lead = u.to_z_form()?.coefficient(-1, ZMon::X2);
        let mut out = RingElement::zero(v0);
        if lead.is_zero() {
            return Ok(out);
        }
        let z2 = RingElement::z(v0).pow(2);
        let x2 = RingElement::x(v0).pow(2);
        for (i, m, k) in v.to_z_form()?.terms() {
            let img = match m {
                ZMon::X => &z2,
                ZMon::Z => &x2,
                _ => continue,
            };
            out += &img.shift_s(i - 1).scale(lead * k);
        }
        Ok(out)
    }

    /// δg(a,b,c) = a·g(b,c) + g(ab,c) + g(a,bc) + g(a,b)·c.
    pub fn delta_g(&self, a: &RingElement, b: &RingElement, c: &RingElement) -> Result<RingElement> {
        let mut out = a * &self.g(b, c)?;
        out += &self.g(&(a * b), c)?;
        out += &self.g(a, &(b * c))?;
        out += &(&self.g(a, b)? * c);
        Ok(out)
    }

    /// The chosen cochain on a triple of basis monomials.
    pub fn value(&self, kind: Kind, a: BasisMonomial, b: BasisMonomial, c: BasisMonomial) -> Result<RingElement> {
        self.check(kind)?;
        Ok(match kind {
            Kind::M => self.m(a, b, c),
            Kind::MPrime => self.m_prime(a, b, c),
            Kind::MDoublePrime => &self.m(a, b, c) + &self.m_prime(a, b, c),
            Kind::MTilde => {
                let base = &self.m(a, b, c) + &self.m_prime(a, b, c);
                &base + &self.delta_g(&self.mono(a), &self.mono(b), &self.mono(c))?
            }
        })
    }

    /// The chosen cochain extended trilinearly.
    pub fn eval(&self, kind: Kind, u: &RingElement, v: &RingElement, w: &RingElement) -> Result<RingElement> {
        self.check(kind)?;
        let mut out = RingElement::zero(self.variant);
        for (a, ka) in u.terms() {
            for (b, kb) in v.terms() {
                for (c, kc) in w.terms() {
                    out += &self.value(kind, a, b, c)?.scale(ka * kb * kc);
                }
            }
        }
        Ok(out)
    }

    /// Nonzero values of the chosen cochain on 𝓑³ (s-exponent 0).
    pub fn nonzero_on_basis(&self, kind: Kind) -> Result<Vec<([Bm; 3], RingElement)>> {
        let mut out = Vec::new();
        for a in Bm::ALL {
            for b in Bm::ALL {
                for c in Bm::ALL {
                    let v = self.value(kind, a.into(), b.into(), c.into())?;
                    if !v.is_zero() {
                        out.push(([a, b, c], v));
                    }
                }
            }
        }
        Ok(out)
    }
}
