//! The group algebra k[Q₄ₜ] of the generalized quaternion group
//! Q₄ₜ = ⟨g, h | gᵗ = h², ghg = h⟩ over GF(2) or GF(4).
//!
//! Group elements are kept in the normal form gⁱhʲ with 0 ≤ i < 2t and
//! j ∈ {0, 1}; multiplication uses hgᵏ = g⁻ᵏh and h² = gᵗ.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use crate::error::{Error, Result};
use crate::field::{FieldKind, Gf4};

/// Largest t accepted unless a caller raises the bound explicitly.
pub const DEFAULT_MAX_T: u32 = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupConfig {
    t: u32,
    field: FieldKind,
}

impl GroupConfig {
    pub fn new(t: u32, field: FieldKind) -> Result<GroupConfig> {
        GroupConfig::with_bound(t, field, DEFAULT_MAX_T)
    }

    pub fn with_bound(t: u32, field: FieldKind, max_t: u32) -> Result<GroupConfig> {
        if t < 2 || !t.is_power_of_two() {
            return Err(Error::Config(format!("t = {t} must be a power of 2 with t >= 2")));
        }
        if t > max_t {
            return Err(Error::Config(format!("t = {t} exceeds the configured bound {max_t}")));
        }
        Ok(GroupConfig { t, field })
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn order(&self) -> usize {
        4 * self.t as usize
    }

    /// All group elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order()).map(GroupElement::from_index)
    }

    pub fn mul(&self, u: GroupElement, v: GroupElement) -> GroupElement {
        group_mul(self.t, u, v)
    }
}

/// gⁱhʲ in normal form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement {
    pub i: u32,
    pub j: u32,
}

impl GroupElement {
    pub const ONE: GroupElement = GroupElement { i: 0, j: 0 };

    pub fn new(t: u32, i: i64, j: u32) -> GroupElement {
        let m = 2 * t as i64;
        GroupElement { i: i.rem_euclid(m) as u32, j: j % 2 }
    }

    pub fn index(self) -> usize {
        (2 * self.i + self.j) as usize
    }

    pub fn from_index(k: usize) -> GroupElement {
        GroupElement { i: (k / 2) as u32, j: (k % 2) as u32 }
    }
}

/// Normal form of `u·v` in Q₄ₜ.
pub fn group_mul(t: u32, u: GroupElement, v: GroupElement) -> GroupElement {
    let m = 2 * t;
    if u.j == 0 {
        return GroupElement { i: (u.i + v.i) % m, j: v.j };
    }
    // gⁱh · gᵏhˡ = gⁱ⁻ᵏ h hˡ
    let i = (u.i + m - v.i) % m;
    if v.j == 0 {
        GroupElement { i, j: 1 }
    } else {
        GroupElement { i: (i + t) % m, j: 0 }
    }
}

pub fn group_inv(t: u32, u: GroupElement) -> GroupElement {
    let m = 2 * t;
    if u.j == 0 {
        GroupElement { i: (m - u.i) % m, j: 0 }
    } else {
        // gⁱh · gᵏh = gⁱ⁻ᵏ⁺ᵗ, so k = i + t
        GroupElement { i: (u.i + t) % m, j: 1 }
    }
}

/// An element of k[Q₄ₜ], stored densely by group-element index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    t: u32,
    coeffs: Vec<Gf4>,
}

impl AlgebraElement {
    pub fn zero(t: u32) -> AlgebraElement {
        AlgebraElement { t, coeffs: vec![Gf4::ZERO; 4 * t as usize] }
    }

    pub fn one(t: u32) -> AlgebraElement {
        AlgebraElement::group(t, GroupElement::ONE)
    }

    pub fn group(t: u32, x: GroupElement) -> AlgebraElement {
        let mut e = AlgebraElement::zero(t);
        e.coeffs[x.index()] = Gf4::ONE;
        e
    }

    /// The basis element gⁱhʲ, with i reduced mod 2t.
    pub fn monomial(t: u32, i: i64, j: u32) -> AlgebraElement {
        AlgebraElement::group(t, GroupElement::new(t, i, j))
    }

    pub fn scalar(t: u32, k: Gf4) -> AlgebraElement {
        let mut e = AlgebraElement::zero(t);
        e.coeffs[0] = k;
        e
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn coeff(&self, x: GroupElement) -> Gf4 {
        self.coeffs[x.index()]
    }

    pub fn coeffs(&self) -> &[Gf4] {
        &self.coeffs
    }

    pub fn from_coeffs(t: u32, coeffs: Vec<Gf4>) -> AlgebraElement {
        assert_eq!(coeffs.len(), 4 * t as usize);
        AlgebraElement { t, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn try_add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_same(other)?;
        Ok(AlgebraElement {
            t: self.t,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| *a + *b).collect(),
        })
    }

    /// Convolution product.
    pub fn try_mul(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_same(other)?;
        let t = self.t;
        let mut out = vec![Gf4::ZERO; self.coeffs.len()];
        for (p, &cp) in self.coeffs.iter().enumerate() {
            if cp.is_zero() {
                continue;
            }
            let u = GroupElement::from_index(p);
            for (q, &cq) in other.coeffs.iter().enumerate() {
                if cq.is_zero() {
                    continue;
                }
                let w = group_mul(t, u, GroupElement::from_index(q));
                out[w.index()] += cp * cq;
            }
        }
        Ok(AlgebraElement { t, coeffs: out })
    }

    fn check_same(&self, other: &AlgebraElement) -> Result<()> {
        if self.t != other.t {
            return Err(Error::Config(format!(
                "group algebra elements over Q_{} and Q_{}",
                4 * self.t,
                4 * other.t
            )));
        }
        Ok(())
    }

    pub fn scale(&self, k: Gf4) -> AlgebraElement {
        AlgebraElement { t: self.t, coeffs: self.coeffs.iter().map(|&c| c * k).collect() }
    }

    pub fn pow(&self, n: u32) -> AlgebraElement {
        let mut acc = AlgebraElement::one(self.t);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// ε: sum of all coefficients.
    pub fn augmentation(&self) -> Gf4 {
        self.coeffs.iter().fold(Gf4::ZERO, |acc, &c| acc + c)
    }

    /// Matrix of `v ↦ self·v` on coefficient vectors (column k is the image
    /// of the k-th group element).
    pub fn left_mul_matrix(&self) -> Vec<Vec<Gf4>> {
        let n = self.coeffs.len();
        let mut m = vec![vec![Gf4::ZERO; n]; n];
        for (p, &cp) in self.coeffs.iter().enumerate() {
            if cp.is_zero() {
                continue;
            }
            let u = GroupElement::from_index(p);
            for (q, row) in (0..n).map(|q| (q, GroupElement::from_index(q))) {
                let w = group_mul(self.t, u, row);
                m[w.index()][q] += cp;
            }
        }
        m
    }

    /// Matrix of `v ↦ v·self`.
    pub fn right_mul_matrix(&self) -> Vec<Vec<Gf4>> {
        let n = self.coeffs.len();
        let mut m = vec![vec![Gf4::ZERO; n]; n];
        for (p, &cp) in self.coeffs.iter().enumerate() {
            if cp.is_zero() {
                continue;
            }
            let u = GroupElement::from_index(p);
            for q in 0..n {
                let w = group_mul(self.t, GroupElement::from_index(q), u);
                m[w.index()][q] += cp;
            }
        }
        m
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_add(rhs).expect("group algebra configuration mismatch")
    }
}

impl AddAssign<&AlgebraElement> for AlgebraElement {
    fn add_assign(&mut self, rhs: &AlgebraElement) {
        assert_eq!(self.t, rhs.t, "group algebra configuration mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += *b;
        }
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_mul(rhs).expect("group algebra configuration mismatch")
    }
}

/// Deterministic text form: monomials in decreasing (i, j) order, e.g.
/// `g^3*h + g^2` or `g + 1`.
impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for k in (0..self.coeffs.len()).rev() {
            let c = self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let x = GroupElement::from_index(k);
            let mono = match (x.i, x.j) {
                (0, 0) => String::from("1"),
                (0, 1) => String::from("h"),
                (1, 0) => String::from("g"),
                (1, 1) => String::from("g*h"),
                (i, 0) => format!("g^{i}"),
                (i, _) => format!("g^{i}*h"),
            };
            if c == Gf4::ONE {
                terms.push(mono);
            } else if mono == "1" {
                terms.push(c.to_string());
            } else {
                terms.push(format!("{c}*{mono}"));
            }
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// The distinguished elements of k[Q₄ₜ].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Special {
    /// g + 1
    A,
    /// h + 1
    B,
    /// hg + 1
    C,
    /// Sum of all group elements.
    N,
    /// c·a^{2t-2} + b·a^{2t-3}; only for t ≥ 4.
    U,
}

pub fn special(name: Special, cfg: &GroupConfig) -> Result<AlgebraElement> {
    let t = cfg.t();
    let one = AlgebraElement::one(t);
    let g = AlgebraElement::monomial(t, 1, 0);
    let h = AlgebraElement::monomial(t, 0, 1);
    Ok(match name {
        Special::A => &g + &one,
        Special::B => &h + &one,
        Special::C => &(&h * &g) + &one,
        Special::N => AlgebraElement::from_coeffs(t, vec![Gf4::ONE; cfg.order()]),
        Special::U => {
            if t < 4 {
                return Err(Error::Unsupported(format!("u is only defined for t >= 4 (t = {t})")));
            }
            let a = special(Special::A, cfg)?;
            let b = special(Special::B, cfg)?;
            let c = special(Special::C, cfg)?;
            &(&c * &a.pow(2 * t - 2)) + &(&b * &a.pow(2 * t - 3))
        }
    })
}

/// Named elements used throughout the resolution.
#[derive(Clone, Debug)]
pub struct Elements {
    pub one: AlgebraElement,
    pub g: AlgebraElement,
    pub h: AlgebraElement,
    pub g_inv: AlgebraElement,
    pub h_inv: AlgebraElement,
    pub a: AlgebraElement,
    pub b: AlgebraElement,
    pub c: AlgebraElement,
    pub n: AlgebraElement,
}

impl Elements {
    pub fn new(cfg: &GroupConfig) -> Elements {
        let t = cfg.t();
        let g1 = GroupElement::new(t, 1, 0);
        let h1 = GroupElement::new(t, 0, 1);
        Elements {
            one: AlgebraElement::one(t),
            g: AlgebraElement::group(t, g1),
            h: AlgebraElement::group(t, h1),
            g_inv: AlgebraElement::group(t, group_inv(t, g1)),
            h_inv: AlgebraElement::group(t, group_inv(t, h1)),
            a: special(Special::A, cfg).expect("a"),
            b: special(Special::B, cfg).expect("b"),
            c: special(Special::C, cfg).expect("c"),
            n: special(Special::N, cfg).expect("N"),
        }
    }

    pub fn a_pow(&self, n: u32) -> AlgebraElement {
        self.a.pow(n)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
}

/// Evaluates every group-algebra identity the resolution relies on.
pub fn verify_identities(cfg: &GroupConfig) -> Vec<IdentityCheck> {
    let t = cfg.t();
    let e = Elements::new(cfg);
    let (a, b, c, n) = (&e.a, &e.b, &e.c, &e.n);
    let ap = |k: u32| a.pow(k);
    let zero = AlgebraElement::zero(t);
    let abc = &(a + b) + c;

    let mut out = Vec::new();
    let mut check = |name: &str, lhs: AlgebraElement, rhs: AlgebraElement| {
        out.push(IdentityCheck { name: name.to_string(), holds: lhs == rhs });
    };

    check("a^t = b^2", ap(t), b.pow(2));
    check("b^2 = c^2", b.pow(2), c.pow(2));
    check("a^{2t} = 0", ap(2 * t), zero.clone());
    check("b^4 = 0", b.pow(4), zero.clone());
    check("ba = a+b+c", b * a, abc.clone());
    check("ac = a+b+c", a * c, abc.clone());
    check("N = a^{2t-1}b", n.clone(), &ap(2 * t - 1) * b);
    check("c = a+bg", c.clone(), a + &(b * &e.g));
    check("gc = a+b", &e.g * c, a + b);
    check("N = ca^{2t-2}b", n.clone(), &(c * &ap(2 * t - 2)) * b);
    check("N = ca^{2t-1}", n.clone(), c * &ap(2 * t - 1));
    check(
        "N = a^{2t-1}+a^{2t-2}b+ca^{2t-2}",
        n.clone(),
        &(&ap(2 * t - 1) + &(&ap(2 * t - 2) * b)) + &(c * &ap(2 * t - 2)),
    );
    check(
        "ca^{t-1}b = ca^{t-1}+a^{t-1}b",
        &(c * &ap(t - 1)) * b,
        &(c * &ap(t - 1)) + &(&ap(t - 1) * b),
    );

    let central = |z: &AlgebraElement| [&e.g, &e.h].iter().all(|x| z * *x == *x * z);
    for (name, k) in [("a^{2t-1} central", 2 * t - 1), ("a^{2t-2} central", 2 * t - 2)] {
        out.push(IdentityCheck { name: name.into(), holds: central(&ap(k)) });
    }
    // a^{2t-4} is the unit when t = 2.
    out.push(IdentityCheck { name: "a^{2t-4} central".into(), holds: central(&ap(2 * t - 4)) });

    if t >= 4 {
        let u = special(Special::U, cfg).expect("t >= 4");
        let a2b = &ap(2 * t - 2) * b;
        let mut check = |name: &str, lhs: AlgebraElement, rhs: AlgebraElement| {
            out.push(IdentityCheck { name: name.to_string(), holds: lhs == rhs });
        };
        check("au = a^{2t-2}b + a^{2t-1}", a * &u, &a2b + &ap(2 * t - 1));
        check("cu = a^{2t-2}b + a^{2t-1}", c * &u, &a2b + &ap(2 * t - 1));
        check("ua = a^{2t-2}b + N", &u * a, &a2b + n);
        check("ub = a^{2t-2}b", &u * b, a2b.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cfg(t: u32) -> GroupConfig {
        GroupConfig::new(t, FieldKind::Gf2).unwrap()
    }

    #[test]
    fn group_mul_examples() {
        for t in [2, 4, 8] {
            let g = GroupElement::new(t, 1, 0);
            let gh = GroupElement::new(t, 1, 1);
            let h = GroupElement::new(t, 0, 1);
            assert_eq!(group_mul(t, g, g), GroupElement::new(t, 2, 0));
            assert_eq!(group_mul(t, gh, gh), GroupElement::new(t, t as i64, 0));
            assert_eq!(group_mul(t, h, g), GroupElement::new(t, 2 * t as i64 - 1, 1));
        }
    }

    #[test]
    fn defining_relations_and_inverses() {
        for t in [2, 4, 8, 16] {
            let c = cfg(t);
            let g = GroupElement::new(t, 1, 0);
            let h = GroupElement::new(t, 0, 1);
            let mut gt = GroupElement::ONE;
            for _ in 0..t {
                gt = c.mul(gt, g);
            }
            assert_eq!(gt, c.mul(h, h));
            assert_eq!(c.mul(c.mul(g, h), g), h);
            for x in c.elements() {
                assert_eq!(c.mul(x, group_inv(t, x)), GroupElement::ONE);
                assert_eq!(c.mul(group_inv(t, x), x), GroupElement::ONE);
            }
        }
    }

    #[test]
    fn rejects_bad_t() {
        assert!(GroupConfig::new(3, FieldKind::Gf2).is_err());
        assert!(GroupConfig::new(1, FieldKind::Gf2).is_err());
        assert!(GroupConfig::new(32, FieldKind::Gf2).is_err());
        assert!(GroupConfig::with_bound(32, FieldKind::Gf2, 32).is_ok());
    }

    #[test]
    fn alg_mul_examples() {
        for t in [2, 4] {
            let e = Elements::new(&cfg(t));
            assert_eq!(&e.one * &e.a, e.a);
            assert_eq!(&e.b * &e.a, &(&e.a + &e.b) + &e.c);
            assert!(e.a.pow(2 * t).is_zero());
        }
    }

    #[test]
    fn mismatched_configs_error() {
        let x = AlgebraElement::one(2);
        let y = AlgebraElement::one(4);
        assert!(x.try_mul(&y).is_err());
        assert!(x.try_add(&y).is_err());
    }

    #[test]
    fn augmentation_examples() {
        let e = Elements::new(&cfg(2));
        assert_eq!(e.a.augmentation(), Gf4::ZERO);
        assert_eq!(e.n.augmentation(), Gf4::ZERO);
        let p = &(&AlgebraElement::monomial(2, 2, 0) + &e.h) + &e.one;
        assert_eq!(p.augmentation(), Gf4::ONE);
    }

    #[test]
    fn special_elements() {
        let c2 = cfg(2);
        assert_eq!(special(Special::A, &c2).unwrap().to_string(), "g + 1");
        assert_eq!(special(Special::N, &c2).unwrap().coeffs().len(), 8);
        assert!(matches!(special(Special::U, &c2), Err(Error::Unsupported(_))));
        let c4 = cfg(4);
        let e = Elements::new(&c4);
        let u = special(Special::U, &c4).unwrap();
        assert_eq!(u, &(&e.c * &e.a.pow(6)) + &(&e.b * &e.a.pow(5)));
    }

    #[test]
    fn display_orders_terms() {
        let x = &AlgebraElement::monomial(4, 3, 1) + &AlgebraElement::monomial(4, 2, 0);
        assert_eq!(x.to_string(), "g^3*h + g^2");
        assert_eq!(AlgebraElement::zero(2).to_string(), "0");
    }

    #[test]
    fn all_identities_hold() {
        for t in [2, 4, 8, 16] {
            let report = verify_identities(&cfg(t));
            assert_eq!(report.len(), if t >= 4 { 20 } else { 16 });
            for c in report {
                assert!(c.holds, "t={t}: {}", c.name);
            }
        }
    }

    #[test]
    fn multiplication_matrices_agree_with_product() {
        let e = Elements::new(&cfg(2));
        let p = &e.c * &e.a;
        let q = &e.h + &e.g;
        let lm = p.left_mul_matrix();
        let rm = p.right_mul_matrix();
        let apply = |m: &Vec<Vec<Gf4>>, v: &[Gf4]| -> Vec<Gf4> {
            m.iter().map(|r| r.iter().zip(v).fold(Gf4::ZERO, |a, (x, y)| a + *x * *y)).collect()
        };
        assert_eq!(apply(&lm, q.coeffs()), (&p * &q).coeffs());
        assert_eq!(apply(&rm, q.coeffs()), (&q * &p).coeffs());
    }

    fn arb_elem(t: u32) -> impl Strategy<Value = AlgebraElement> {
        proptest::collection::vec(0u8..4, 4 * t as usize)
            .prop_map(move |v| AlgebraElement::from_coeffs(t, v.into_iter().map(Gf4::from_bits).collect()))
    }

    proptest! {
        #[test]
        fn ring_axioms(p in arb_elem(4), q in arb_elem(4), r in arb_elem(4)) {
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert!((&p + &p).is_zero());
            prop_assert_eq!(&AlgebraElement::one(4) * &p, p.clone());
            prop_assert_eq!(&p * &AlgebraElement::one(4), p.clone());
        }

        #[test]
        fn augmentation_is_multiplicative(p in arb_elem(2), q in arb_elem(2)) {
            prop_assert_eq!((&p * &q).augmentation(), p.augmentation() * q.augmentation());
        }

        #[test]
        fn norm_spans_two_sided_ideal(v in arb_elem(8)) {
            let e = Elements::new(&cfg(8));
            prop_assert_eq!(&e.n * &v, e.n.scale(v.augmentation()));
            prop_assert_eq!(&v * &e.n, e.n.scale(v.augmentation()));
        }
    }
}
