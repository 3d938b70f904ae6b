//! Cycle selection f₁ and the homotopy table f₂ on 𝓑 × 𝓑.

use crate::error::{Error, Result};
use crate::group_algebra::GroupConfig;
use crate::resolution::{solve_homotopy, HomotopyOutcome, PeriodicMap, StandardMaps};
use crate::tate_ring::{BasisMonomial, Bm, RingElement, Variant};

// Rows b, columns c, both in the order 1, x, y, x², y², x²y. `*` marks an
// entry filled by the homotopy solver.
const F2_Q8: [[&str; 6]; 6] = [
    ["0", "0", "0", "0", "0", "0"],
    ["0", "0", "r", "xr + ry + w", "ry + w", "xry + ry^2 + wy"],
    ["0", "p + r", "0", "px + xp + xy", "w", "yry + py^2 + xw + yw"],
    ["0", "xr + ry + w", "0", "xrx + ryx + wx", "ry^2 + xw + yw", "*"],
    ["0", "yp + yr + w + px + xp + xy", "w", "y^2r + y^2p + wx + wy", "wy", "*"],
    ["0", "x^2p + xry + ry^2 + wy + x^2y", "ry^2 + xw + yw", "*", "*", "*"],
];

const F2_GENERAL: [[&str; 6]; 6] = [
    ["0", "0", "0", "0", "0", "0"],
    ["0", "0", "v", "xv", "vy", "xvy + vy^2 + xw"],
    ["0", "p + v", "0", "px + xp + x^2", "w", "yvy + py^2 + xw"],
    ["0", "xv", "0", "x^2v + xvy + vy^2 + xw", "vy^2 + xw", "x^2vy + xvy^2 + x^2w"],
    ["0", "yp + py + vy", "w", "y^2v + y^2p + wx", "wy", "y^2vy + y^2py + wxy"],
    ["0", "x^2p + xvy + vy^2 + xw + x^2y", "vy^2 + xw", "x^2px + xvyx + vy^2x + xwx", "x^2w", "x^2yvy + x^2py^2 + x^3w"],
];

/// One entry f₂(b, c) of the table.
#[derive(Clone, Debug)]
pub struct F2Entry {
    pub b: Bm,
    pub c: Bm,
    /// The tabulated expression; `None` for solver-completed entries.
    pub expr: Option<&'static str>,
    pub map: PeriodicMap,
}

impl F2Entry {
    pub fn completed(&self) -> bool {
        self.expr.is_none()
    }
}

/// The standard maps plus f₁ and f₂ for one group.
#[derive(Clone, Debug)]
pub struct CochainTable {
    maps: StandardMaps,
    variant: Variant,
    f2: Vec<F2Entry>,
}

/// Per-pair result of checking the f₂ table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2Check {
    pub b: Bm,
    pub c: Bm,
    pub completed: bool,
    /// d f₂(b,c) = f₁(bc) + f₁(b) f₁(c).
    pub boundary_ok: bool,
    /// 𝒞(f₂(b,c)) = 0.
    pub class_zero: bool,
}

impl F2Check {
    pub fn ok(&self) -> bool {
        self.boundary_ok && self.class_zero
    }
}

impl CochainTable {
    pub fn new(cfg: &GroupConfig) -> Result<CochainTable> {
        let maps = StandardMaps::new(cfg);
        let variant = Variant::for_t(cfg.t());
        let table = match variant {
            Variant::Q8 => &F2_Q8,
            Variant::Generalized => &F2_GENERAL,
        };
        let mut out = CochainTable { maps, variant, f2: Vec::with_capacity(36) };
        for b in Bm::ALL {
            for c in Bm::ALL {
                let degree = (b.degree() + c.degree() - 1) as i64;
                let text = table[b.index()][c.index()];
                let entry = if text == "*" {
                    let target = out.f2_target(b, c);
                    match solve_homotopy(out.maps.complex(), &target, 8, true)? {
                        HomotopyOutcome::Feasible(h) => F2Entry { b, c, expr: None, map: h },
                        HomotopyOutcome::Infeasible { .. } => {
                            return Err(Error::Infeasible(format!(
                                "no class-free homotopy for f2({b}, {c})"
                            )))
                        }
                    }
                } else {
                    F2Entry { b, c, expr: Some(text), map: out.maps.eval(text, degree)? }
                };
                out.f2.push(entry);
            }
        }
        Ok(out)
    }

    /// Replaces f₂(b, c) by another homotopy with the same boundary whose
    /// class vanishes, also after composing with s̄.
    pub fn replace_entry(&mut self, b: Bm, c: Bm, map: PeriodicMap) -> Result<()> {
        if map.degree() != (b.degree() + c.degree() - 1) as i64 {
            return Err(Error::Precondition(format!("f2({b}, {c}) has the wrong degree")));
        }
        if self.maps.d(&map) != self.f2_target(b, c) {
            return Err(Error::Precondition(format!("replacement for f2({b}, {c}) has the wrong boundary")));
        }
        if !map.class_map().is_zero() || !map.compose(self.maps.s()).class_map().is_zero() {
            return Err(Error::Precondition(format!("replacement for f2({b}, {c}) has nonzero class")));
        }
        self.f2[b.index() * 6 + c.index()].map = map;
        Ok(())
    }

    pub fn maps(&self) -> &StandardMaps {
        &self.maps
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn entries(&self) -> &[F2Entry] {
        &self.f2
    }

    /// f₁(sⁱxᵉyᵈ) = x̄ᵉȳᵈs̄ⁱ.
    pub fn f1(&self, m: BasisMonomial) -> PeriodicMap {
        let (e, d) = m.b.exponents();
        self.maps.xy_monomial(e, d).compose(&self.maps.s_pow(m.s as i64))
    }

    /// f₁ extended linearly; `degree` is used when `u` is zero.
    pub fn f1_linear(&self, u: &RingElement, degree: i64) -> PeriodicMap {
        let mut acc = self.maps.zero(degree);
        for (m, k) in u.terms() {
            acc = acc.add(&self.f1(m).scale(k));
        }
        acc
    }

    /// The tabulated f₂(b, c) for b, c ∈ 𝓑.
    pub fn f2_base(&self, b: Bm, c: Bm) -> &PeriodicMap {
        &self.f2[b.index() * 6 + c.index()].map
    }

    /// f₂(sⁱb, sʲc) = f₂(b, c)s̄^{i+j}.
    pub fn f2(&self, b: BasisMonomial, c: BasisMonomial) -> PeriodicMap {
        self.f2_base(b.b, c.b).compose(&self.maps.s_pow((b.s + c.s) as i64))
    }

    /// f₂ extended bilinearly to homogeneous elements of the given degrees.
    pub fn f2_linear(&self, u: &RingElement, du: i32, v: &RingElement, dv: i32) -> PeriodicMap {
        let mut acc = self.maps.zero((du + dv - 1) as i64);
        for (m, k) in u.terms() {
            for (n, l) in v.terms() {
                acc = acc.add(&self.f2(m, n).scale(k * l));
            }
        }
        acc
    }

    /// f₁(bc) + f₁(b)f₁(c), the map f₂(b, c) must bound.
    pub fn f2_target(&self, b: Bm, c: Bm) -> PeriodicMap {
        let v = self.variant;
        let bc = &RingElement::basis(v, 0, b) * &RingElement::basis(v, 0, c);
        let deg = (b.degree() + c.degree()) as i64;
        let prod = self.f1(b.into()).compose(&self.f1(c.into()));
        self.f1_linear(&bc, deg).add(&prod)
    }

    /// h(b, c) = s̄ f₂(b,c) s̄⁻¹ + f₂(b,c).
    pub fn h(&self, b: Bm, c: Bm) -> PeriodicMap {
        let f = self.f2_base(b, c);
        f.conjugate_by_shift().add(f)
    }

    pub fn h_class(&self, b: Bm, c: Bm) -> RingElement {
        self.h(b, c).class_map()
    }

    pub fn verify_f2(&self) -> Vec<F2Check> {
        self.f2
            .iter()
            .map(|e| F2Check {
                b: e.b,
                c: e.c,
                completed: e.completed(),
                boundary_ok: self.maps.d(&e.map) == self.f2_target(e.b, e.c),
                class_zero: e.map.class_map().is_zero(),
            })
            .collect()
    }

    /// 𝒞(f) for the composite f₁(a)∘f₂(b,c) on basis monomials.
    pub fn class_f1_f2(&self, a: BasisMonomial, b: BasisMonomial, c: BasisMonomial) -> RingElement {
        self.f1(a).compose(&self.f2(b, c)).class_map()
    }

    /// The class of f₂(a,b)f₁(c) + f₂(a,bc) + f₂(ab,c) + f₁(a)f₂(b,c).
    pub fn secondary_class(&self, a: BasisMonomial, b: BasisMonomial, c: BasisMonomial) -> RingElement {
        let v = self.variant;
        let (da, db, dc) = (a.degree(), b.degree(), c.degree());
        let ra = RingElement::monomial(v, a);
        let rb = RingElement::monomial(v, b);
        let rc = RingElement::monomial(v, c);
        let t1 = self.f2(a, b).compose(&self.f1(c));
        let t2 = self.f2_linear(&ra, da, &(&rb * &rc), db + dc);
        let t3 = self.f2_linear(&(&ra * &rb), da + db, &rc, dc);
        let t4 = self.f1(a).compose(&self.f2(b, c));
        t1.add(&t2).add(&t3).add(&t4).class_map()
    }
}
