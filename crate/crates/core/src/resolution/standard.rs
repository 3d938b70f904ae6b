use std::fmt;

use super::{build_resolution, rank, KGMatrix, PeriodicComplex, PeriodicMap};
use crate::error::{Error, Result};
use crate::group_algebra::{special, AlgebraElement, Elements, GroupConfig, Special};

/// The named cocycles and homotopies on P.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapName {
    /// Chain map representing x.
    X,
    /// Chain map representing y.
    Y,
    /// The shift s̄, the identity P → P[4].
    S,
    /// Null-homotopy of x̄ȳ + ȳx̄.
    P,
    /// Null-homotopy of ȳ³.
    W,
    /// Null-homotopy of x̄² + x̄ȳ + ȳ² (t = 2).
    R,
    /// Null-homotopy of x̄² + x̄ȳ (t ≥ 4).
    V,
}

impl MapName {
    pub const ALL: [MapName; 7] =
        [MapName::X, MapName::Y, MapName::S, MapName::P, MapName::W, MapName::R, MapName::V];

    pub fn letter(self) -> char {
        match self {
            MapName::X => 'x',
            MapName::Y => 'y',
            MapName::S => 's',
            MapName::P => 'p',
            MapName::W => 'w',
            MapName::R => 'r',
            MapName::V => 'v',
        }
    }

    pub fn from_letter(c: char) -> Option<MapName> {
        MapName::ALL.into_iter().find(|m| m.letter() == c)
    }
}

impl fmt::Display for MapName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// The resolution together with all standard maps for one group.
#[derive(Clone, Debug)]
pub struct StandardMaps {
    complex: PeriodicComplex,
    x: PeriodicMap,
    y: PeriodicMap,
    s: PeriodicMap,
    s_inv: PeriodicMap,
    p: PeriodicMap,
    w: PeriodicMap,
    r: Option<PeriodicMap>,
    literal_r: Option<PeriodicMap>,
    v: Option<PeriodicMap>,
}

/// Uses `base` on j ≡ 0..3 (mod 8) and `base + extra` on j ≡ 4..7.
fn eight_periodic(base: &PeriodicMap, extra: &PeriodicMap) -> PeriodicMap {
    let sum = base.add(extra);
    PeriodicMap::from_fn(base.t(), base.degree(), 8, |j| {
        if j < 4 {
            base.component(j).clone()
        } else {
            sum.component(j).clone()
        }
    })
}

impl StandardMaps {
    pub fn new(cfg: &GroupConfig) -> StandardMaps {
        let t = cfg.t();
        let e = Elements::new(cfg);
        let m = |rows: usize, cols: usize, entries: Vec<AlgebraElement>| {
            KGMatrix::from_entries(t, rows, cols, entries)
        };
        let zero = || AlgebraElement::zero(t);
        let one = || AlgebraElement::one(t);
        let four = |comps: [KGMatrix; 4], degree: i64| {
            let mut comps = comps.into_iter();
            PeriodicMap::from_fn(t, degree, 4, |_| comps.next().unwrap())
        };
        let ap = |k: u32| e.a_pow(k);

        let x = four(
            [
                m(1, 2, vec![one(), zero()]),
                m(2, 2, vec![ap(t - 2), one(), zero(), e.g.clone()]),
                m(2, 1, vec![one(), one()]),
                m(1, 1, vec![&ap(2 * t - 2) * &e.b]),
            ],
            1,
        );
        let y = four(
            [
                m(1, 2, vec![zero(), one()]),
                m(2, 2, vec![zero(), one(), one(), zero()]),
                m(2, 1, vec![zero(), one()]),
                m(1, 1, vec![ap(2 * t - 1)]),
            ],
            1,
        );
        let p = four(
            [
                m(1, 2, vec![zero(), zero()]),
                m(2, 2, vec![zero(), one(), zero(), zero()]),
                m(2, 1, vec![zero(), one()]),
                m(1, 1, vec![ap(2 * t - 2)]),
            ],
            1,
        );
        let w_prime = four(
            [
                m(1, 2, vec![zero(), zero()]),
                m(2, 1, vec![zero(), zero()]),
                m(2, 1, vec![&e.b * &e.h_inv, &ap(t - 1) * &e.h_inv]),
                m(1, 2, vec![&(&e.c * &e.g_inv) * &e.h_inv, &ap(t - 1) * &e.h_inv]),
            ],
            2,
        );
        let w = eight_periodic(&w_prime, &y.compose(&y));

        // The homotopy satisfies s̄r̄ + r̄s̄ = x̄s̄; see `literal_r` for the
        // variant with top entry a³ + a² + ab and defect x̄ + ȳ, which is not
        // a null-homotopy.
        let r = (t == 2).then(|| {
            let r_prime = four(
                [
                    m(1, 2, vec![zero(), zero()]),
                    m(2, 2, vec![zero(), zero(), zero(), zero()]),
                    m(2, 1, vec![zero(), zero()]),
                    m(1, 1, vec![&ap(2) + &(&e.a * &e.b)]),
                ],
                1,
            );
            eight_periodic(&r_prime, &x)
        });
        let literal_r = (t == 2).then(|| {
            let r_prime = four(
                [
                    m(1, 2, vec![zero(), zero()]),
                    m(2, 2, vec![zero(), zero(), zero(), zero()]),
                    m(2, 1, vec![zero(), zero()]),
                    m(1, 1, vec![&(&ap(3) + &ap(2)) + &(&e.a * &e.b)]),
                ],
                1,
            );
            eight_periodic(&r_prime, &x.add(&y))
        });
        let v = (t >= 4).then(|| {
            let u = special(Special::U, cfg).expect("u exists for t >= 4");
            let v_prime = four(
                [
                    m(1, 2, vec![zero(), zero()]),
                    m(2, 2, vec![ap(t - 3), zero(), zero(), zero()]),
                    m(2, 1, vec![zero(), zero()]),
                    m(1, 1, vec![u]),
                ],
                1,
            );
            eight_periodic(&v_prime, &x)
        });

        StandardMaps {
            complex: build_resolution(cfg),
            x,
            y,
            s: PeriodicMap::shift(t, 1),
            s_inv: PeriodicMap::shift(t, -1),
            p,
            w,
            r,
            literal_r,
            v,
        }
    }

    pub fn complex(&self) -> &PeriodicComplex {
        &self.complex
    }

    pub fn t(&self) -> u32 {
        self.complex.t()
    }

    pub fn get(&self, name: MapName) -> Result<&PeriodicMap> {
        let t = self.t();
        match name {
            MapName::X => Ok(&self.x),
            MapName::Y => Ok(&self.y),
            MapName::S => Ok(&self.s),
            MapName::P => Ok(&self.p),
            MapName::W => Ok(&self.w),
            MapName::R => self
                .r
                .as_ref()
                .ok_or_else(|| Error::Unsupported(format!("r is only defined for t = 2 (t = {t})"))),
            MapName::V => self
                .v
                .as_ref()
                .ok_or_else(|| Error::Unsupported(format!("v is only defined for t >= 4 (t = {t})"))),
        }
    }

    /// r̄ with top entry a³ + a² + ab on P₄ → P₃ and s̄r̄ + r̄s̄ = (x̄ + ȳ)s̄
    /// (t = 2 only). It is kept for comparison; `d` of it is not
    /// x̄² + x̄ȳ + ȳ².
    pub fn literal_r(&self) -> Option<&PeriodicMap> {
        self.literal_r.as_ref()
    }

    pub fn x(&self) -> &PeriodicMap {
        &self.x
    }

    pub fn y(&self) -> &PeriodicMap {
        &self.y
    }

    pub fn s(&self) -> &PeriodicMap {
        &self.s
    }

    pub fn s_inv(&self) -> &PeriodicMap {
        &self.s_inv
    }

    /// s̄ⁿ for any integer n.
    pub fn s_pow(&self, n: i64) -> PeriodicMap {
        PeriodicMap::shift(self.t(), n)
    }

    pub fn d(&self, f: &PeriodicMap) -> PeriodicMap {
        f.differential(&self.complex)
    }

    pub fn zero(&self, degree: i64) -> PeriodicMap {
        PeriodicMap::zero(self.t(), degree)
    }

    /// x̄ᵉȳᵈ.
    pub fn xy_monomial(&self, e: u32, d: u32) -> PeriodicMap {
        let mut acc = PeriodicMap::from_fn(self.t(), 0, 4, |j| KGMatrix::identity(self.t(), rank(j)));
        for _ in 0..e {
            acc = acc.compose(&self.x);
        }
        for _ in 0..d {
            acc = acc.compose(&self.y);
        }
        acc
    }

    /// Evaluates a polynomial in the letters x, y, s, p, w, r, v, e.g.
    /// `xr + ry + w` or `x^2p + wy`. Juxtaposition is composition; `0` is
    /// the zero map of the given degree.
    pub fn eval(&self, expr: &str, degree: i64) -> Result<PeriodicMap> {
        let mut total = self.zero(degree);
        for term in expr.split('+') {
            let term: String = term.chars().filter(|c| !c.is_whitespace()).collect();
            if term.is_empty() {
                return Err(Error::Parse(format!("empty term in {expr:?}")));
            }
            if term == "0" {
                continue;
            }
            let f = self.eval_monomial(&term)?;
            if f.degree() != degree {
                return Err(Error::Parse(format!(
                    "term {term:?} has degree {}, expected {degree}",
                    f.degree()
                )));
            }
            total = total.add(&f);
        }
        Ok(total)
    }

    fn eval_monomial(&self, term: &str) -> Result<PeriodicMap> {
        let mut acc: Option<PeriodicMap> = None;
        let chars: Vec<char> = term.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let name = MapName::from_letter(chars[i])
                .ok_or_else(|| Error::Parse(format!("unknown map {:?} in {term:?}", chars[i])))?;
            i += 1;
            let mut power = 1u32;
            if i < chars.len() && chars[i] == '^' {
                let start = i + 1;
                let mut end = start;
                while end < chars.len() && chars[end].is_ascii_digit() {
                    end += 1;
                }
                let digits: String = chars[start..end].iter().collect();
                power = digits
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in {term:?}")))?;
                i = end;
            }
            let f = self.get(name)?;
            for _ in 0..power {
                acc = Some(match acc {
                    None => f.clone(),
                    Some(a) => a.compose(f),
                });
            }
        }
        acc.ok_or_else(|| Error::Parse(format!("empty monomial {term:?}")))
    }
}

/// One of the standard maps for the given group.
pub fn standard_map(name: MapName, cfg: &GroupConfig) -> Result<PeriodicMap> {
    StandardMaps::new(cfg).get(name).cloned()
}
