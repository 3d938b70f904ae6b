//! The Tate cohomology ring Λ = Ĥ*(Q₄ₜ) over a field of characteristic 2.
//!
//! For t = 2, Λ = k[x, y, s^±1]/(x² + y² + xy, y³); for t ≥ 4,
//! Λ = k[x, y, s^±1]/(x² + xy, y³), with |x| = |y| = 1 and |s| = 4.
//! Elements are stored on the k-basis {sⁱ·b : b ∈ {1, x, y, x², y², x²y}}.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use crate::error::{Error, Result};
use crate::field::{FieldKind, Gf4};

/// Which of the two ring presentations applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variant {
    /// t = 2: xy = x² + y².
    Q8,
    /// t ≥ 4: xy = x².
    Generalized,
}

impl Variant {
    pub fn for_t(t: u32) -> Variant {
        if t == 2 {
            Variant::Q8
        } else {
            Variant::Generalized
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::Q8 => "t=2",
            Variant::Generalized => "t>=4",
        }
    }
}

/// The six monomials 1, x, y, x², y², x²y.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bm {
    One,
    X,
    Y,
    X2,
    Y2,
    X2Y,
}

impl Bm {
    pub const ALL: [Bm; 6] = [Bm::One, Bm::X, Bm::Y, Bm::X2, Bm::Y2, Bm::X2Y];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Bm {
        Bm::ALL[i]
    }

    pub fn degree(self) -> i32 {
        match self {
            Bm::One => 0,
            Bm::X | Bm::Y => 1,
            Bm::X2 | Bm::Y2 => 2,
            Bm::X2Y => 3,
        }
    }

    /// Exponents (e, d) of xᵉyᵈ.
    pub fn exponents(self) -> (u32, u32) {
        match self {
            Bm::One => (0, 0),
            Bm::X => (1, 0),
            Bm::Y => (0, 1),
            Bm::X2 => (2, 0),
            Bm::Y2 => (0, 2),
            Bm::X2Y => (2, 1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Bm::One => "1",
            Bm::X => "x",
            Bm::Y => "y",
            Bm::X2 => "x^2",
            Bm::Y2 => "y^2",
            Bm::X2Y => "x^2*y",
        }
    }
}

impl fmt::Display for Bm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// sⁱ·b with b ∈ {1, x, y, x², y², x²y}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisMonomial {
    pub s: i32,
    pub b: Bm,
}

impl BasisMonomial {
    pub fn new(s: i32, b: Bm) -> BasisMonomial {
        BasisMonomial { s, b }
    }

    pub fn degree(self) -> i32 {
        4 * self.s + self.b.degree()
    }
}

impl From<Bm> for BasisMonomial {
    fn from(b: Bm) -> BasisMonomial {
        BasisMonomial { s: 0, b }
    }
}

impl fmt::Display for BasisMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_monomial(self.s, self.b.exponents(), 'y'))
    }
}

fn format_monomial(s: i32, (e, d): (u32, u32), second: char) -> String {
    let mut parts = Vec::new();
    match s {
        0 => {}
        1 => parts.push("s".to_string()),
        _ => parts.push(format!("s^{s}")),
    }
    match e {
        0 => {}
        1 => parts.push("x".to_string()),
        _ => parts.push(format!("x^{e}")),
    }
    match d {
        0 => {}
        1 => parts.push(second.to_string()),
        _ => parts.push(format!("{second}^{d}")),
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

type Block = [Gf4; 6];
const ZERO_BLOCK: Block = [Gf4::ZERO; 6];

/// xᵉyᵈ rewritten on {1, x, y, x², y², x²y}.
fn reduce_monomial(variant: Variant, e: u32, d: u32) -> Block {
    let mut out = ZERO_BLOCK;
    let mut put = |b: Bm| out[b.index()] += Gf4::ONE;
    match (e, d) {
        (0, 0) => put(Bm::One),
        (1, 0) => put(Bm::X),
        (0, 1) => put(Bm::Y),
        (2, 0) => put(Bm::X2),
        (0, 2) => put(Bm::Y2),
        (1, 1) => match variant {
            Variant::Q8 => {
                put(Bm::X2);
                put(Bm::Y2);
            }
            Variant::Generalized => put(Bm::X2),
        },
        (3, 0) => {
            if variant == Variant::Generalized {
                put(Bm::X2Y)
            }
        }
        (2, 1) | (1, 2) => put(Bm::X2Y),
        _ => {}
    }
    out
}

fn product_table(variant: Variant) -> [[Block; 6]; 6] {
    let mut t = [[ZERO_BLOCK; 6]; 6];
    for p in Bm::ALL {
        for q in Bm::ALL {
            let (e1, d1) = p.exponents();
            let (e2, d2) = q.exponents();
            t[p.index()][q.index()] = reduce_monomial(variant, e1 + e2, d1 + d2);
        }
    }
    t
}

fn table(variant: Variant) -> &'static [[Block; 6]; 6] {
    use std::sync::OnceLock;
    static Q8: OnceLock<[[Block; 6]; 6]> = OnceLock::new();
    static GEN: OnceLock<[[Block; 6]; 6]> = OnceLock::new();
    match variant {
        Variant::Q8 => Q8.get_or_init(|| product_table(Variant::Q8)),
        Variant::Generalized => GEN.get_or_init(|| product_table(Variant::Generalized)),
    }
}

/// An element of Λ: a finite sum of sⁱ·b with coefficients in GF(4).
///
/// Stored as blocks `(i, [coefficients of 1, x, y, x², y², x²y])` sorted by
/// i with no zero blocks, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElement {
    variant: Variant,
    blocks: Vec<(i32, Block)>,
}

impl RingElement {
    pub fn zero(variant: Variant) -> RingElement {
        RingElement { variant, blocks: Vec::new() }
    }

    pub fn one(variant: Variant) -> RingElement {
        RingElement::monomial(variant, BasisMonomial::new(0, Bm::One))
    }

    pub fn monomial(variant: Variant, m: BasisMonomial) -> RingElement {
        RingElement::term(variant, m, Gf4::ONE)
    }

    pub fn term(variant: Variant, m: BasisMonomial, k: Gf4) -> RingElement {
        if k.is_zero() {
            return RingElement::zero(variant);
        }
        let mut block = ZERO_BLOCK;
        block[m.b.index()] = k;
        RingElement { variant, blocks: vec![(m.s, block)] }
    }

    pub fn basis(variant: Variant, s: i32, b: Bm) -> RingElement {
        RingElement::monomial(variant, BasisMonomial::new(s, b))
    }

    pub fn x(variant: Variant) -> RingElement {
        RingElement::basis(variant, 0, Bm::X)
    }

    pub fn y(variant: Variant) -> RingElement {
        RingElement::basis(variant, 0, Bm::Y)
    }

    /// z = x + y.
    pub fn z(variant: Variant) -> RingElement {
        &RingElement::x(variant) + &RingElement::y(variant)
    }

    pub fn s_pow(variant: Variant, i: i32) -> RingElement {
        RingElement::basis(variant, i, Bm::One)
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn coefficient(&self, m: BasisMonomial) -> Gf4 {
        match self.blocks.binary_search_by_key(&m.s, |(s, _)| *s) {
            Ok(k) => self.blocks[k].1[m.b.index()],
            Err(_) => Gf4::ZERO,
        }
    }

    /// Nonzero terms in (s, monomial) order.
    pub fn terms(&self) -> impl Iterator<Item = (BasisMonomial, Gf4)> + '_ {
        self.blocks.iter().flat_map(|(s, block)| {
            block
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(i, c)| (BasisMonomial::new(*s, Bm::from_index(i)), *c))
        })
    }

    /// The degree if the element is nonzero and homogeneous.
    pub fn degree(&self) -> Option<i32> {
        let mut deg = None;
        for (m, _) in self.terms() {
            match deg {
                None => deg = Some(m.degree()),
                Some(d) if d != m.degree() => return None,
                _ => {}
            }
        }
        deg
    }

    /// Zero counts as homogeneous of every degree.
    pub fn is_homogeneous_of(&self, d: i32) -> bool {
        self.terms().all(|(m, _)| m.degree() == d)
    }

    pub fn homogeneous_part(&self, d: i32) -> RingElement {
        let mut out = RingElement::zero(self.variant);
        for (m, c) in self.terms().filter(|(m, _)| m.degree() == d) {
            out.add_term(m, c);
        }
        out
    }

    pub fn add_term(&mut self, m: BasisMonomial, k: Gf4) {
        if k.is_zero() {
            return;
        }
        match self.blocks.binary_search_by_key(&m.s, |(s, _)| *s) {
            Ok(pos) => {
                self.blocks[pos].1[m.b.index()] += k;
                if self.blocks[pos].1.iter().all(|c| c.is_zero()) {
                    self.blocks.remove(pos);
                }
            }
            Err(pos) => {
                let mut block = ZERO_BLOCK;
                block[m.b.index()] = k;
                self.blocks.insert(pos, (m.s, block));
            }
        }
    }

    fn add_block(&mut self, s: i32, block: &Block) {
        match self.blocks.binary_search_by_key(&s, |(s, _)| *s) {
            Ok(pos) => {
                for (a, b) in self.blocks[pos].1.iter_mut().zip(block) {
                    *a += *b;
                }
                if self.blocks[pos].1.iter().all(|c| c.is_zero()) {
                    self.blocks.remove(pos);
                }
            }
            Err(pos) => {
                if block.iter().any(|c| !c.is_zero()) {
                    self.blocks.insert(pos, (s, *block));
                }
            }
        }
    }

    pub fn scale(&self, k: Gf4) -> RingElement {
        if k.is_zero() {
            return RingElement::zero(self.variant);
        }
        RingElement {
            variant: self.variant,
            blocks: self.blocks.iter().map(|(s, b)| (*s, b.map(|c| c * k))).collect(),
        }
    }

    /// Multiplication by sⁱ.
    pub fn shift_s(&self, i: i32) -> RingElement {
        RingElement {
            variant: self.variant,
            blocks: self.blocks.iter().map(|(s, b)| (*s + i, *b)).collect(),
        }
    }

    pub fn try_add(&self, other: &RingElement) -> Result<RingElement> {
        self.check_variant(other)?;
        let mut out = self.clone();
        for (s, b) in &other.blocks {
            out.add_block(*s, b);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &RingElement) -> Result<RingElement> {
        self.check_variant(other)?;
        let tab = table(self.variant);
        let mut out = RingElement::zero(self.variant);
        for (s1, b1) in &self.blocks {
            for (s2, b2) in &other.blocks {
                let mut acc = ZERO_BLOCK;
                for (i, &c1) in b1.iter().enumerate() {
                    if c1.is_zero() {
                        continue;
                    }
                    for (j, &c2) in b2.iter().enumerate() {
                        if c2.is_zero() {
                            continue;
                        }
                        let k = c1 * c2;
                        for (a, &p) in acc.iter_mut().zip(&tab[i][j]) {
                            *a += p * k;
                        }
                    }
                }
                out.add_block(s1 + s2, &acc);
            }
        }
        Ok(out)
    }

    fn check_variant(&self, other: &RingElement) -> Result<()> {
        if self.variant != other.variant {
            return Err(Error::Config(format!(
                "ring elements from different presentations ({} vs {})",
                self.variant.name(),
                other.variant.name()
            )));
        }
        Ok(())
    }

    pub fn pow(&self, n: u32) -> RingElement {
        let mut acc = RingElement::one(self.variant);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Coordinates of the degree-`d` part on [`basis`]`(d)`.
    pub fn coords(&self, d: i32) -> Vec<Gf4> {
        basis(d).iter().map(|m| self.coefficient(*m)).collect()
    }

    pub fn from_coords(variant: Variant, d: i32, coords: &[Gf4]) -> RingElement {
        let mut out = RingElement::zero(variant);
        for (m, &c) in basis(d).iter().zip(coords) {
            out.add_term(*m, c);
        }
        out
    }

    /// Keeps only the terms sⁱ·b for a fixed b.
    pub fn part(&self, b: Bm) -> RingElement {
        let mut out = RingElement::zero(self.variant);
        for (m, c) in self.terms().filter(|(m, _)| m.b == b) {
            out.add_term(m, c);
        }
        out
    }

    /// The Laurent polynomial Σ cᵢsⁱ with `self = Σ cᵢ sⁱ b + (other terms)`.
    pub fn coefficient_of(&self, b: Bm) -> RingElement {
        let mut out = RingElement::zero(self.variant);
        for (m, c) in self.terms().filter(|(m, _)| m.b == b) {
            out.add_term(BasisMonomial::new(m.s, Bm::One), c);
        }
        out
    }

    /// Whether every coefficient lies in the given field.
    pub fn defined_over(&self, field: FieldKind) -> bool {
        self.terms().all(|(_, c)| field.contains(c))
    }

    pub fn to_z_form(&self) -> Result<ZElement> {
        if self.variant != Variant::Generalized {
            return Err(Error::Unsupported("the z = x + y frame is only used for t >= 4".into()));
        }
        let blocks = self
            .blocks
            .iter()
            .map(|(s, c)| {
                let [c1, cx, cy, cx2, cy2, cx2y] = *c;
                (*s, [c1, cx + cy, cy, cx2 + cy2, cy2, cx2y])
            })
            .collect();
        Ok(ZElement { blocks })
    }
}

impl Add for &RingElement {
    type Output = RingElement;
    fn add(self, rhs: &RingElement) -> RingElement {
        self.try_add(rhs).expect("ring presentation mismatch")
    }
}

impl AddAssign<&RingElement> for RingElement {
    fn add_assign(&mut self, rhs: &RingElement) {
        assert_eq!(self.variant, rhs.variant, "ring presentation mismatch");
        for (s, b) in &rhs.blocks {
            self.add_block(*s, b);
        }
    }
}

impl Mul for &RingElement {
    type Output = RingElement;
    fn mul(self, rhs: &RingElement) -> RingElement {
        self.try_mul(rhs).expect("ring presentation mismatch")
    }
}

/// `s^i*x^e*y^d` terms joined by ` + `, ordered by s then monomial.
impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .terms()
            .map(|(m, c)| {
                let mono = m.to_string();
                if c == Gf4::ONE {
                    mono
                } else if mono == "1" {
                    c.to_string()
                } else {
                    format!("{c}*{mono}")
                }
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// Parses the textual element syntax, e.g. `s^-1*x^2*y + x` or
/// `alpha*x + y`. `z` is accepted as shorthand for `x + y`.
pub fn parse_element(text: &str, variant: Variant) -> Result<RingElement> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Parse("empty ring element".into()));
    }
    let mut total = RingElement::zero(variant);
    for term in text.split('+') {
        let term = term.trim();
        if term.is_empty() {
            return Err(Error::Parse(format!("empty term in {text:?}")));
        }
        let mut prod = RingElement::one(variant);
        for factor in term.split('*') {
            prod = &prod * &parse_factor(factor.trim(), variant)?;
        }
        total += &prod;
    }
    Ok(total)
}

fn parse_factor(factor: &str, variant: Variant) -> Result<RingElement> {
    let (base, exp) = match factor.split_once('^') {
        Some((b, e)) => {
            let e: i32 =
                e.trim().parse().map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?;
            (b.trim(), e)
        }
        None => (factor, 1),
    };
    let nonneg = |e: i32| -> Result<u32> {
        u32::try_from(e).map_err(|_| Error::Parse(format!("negative exponent in {factor:?}")))
    };
    Ok(match base {
        "0" => RingElement::zero(variant),
        "1" => RingElement::one(variant),
        "alpha" => {
            let mut k = Gf4::ONE;
            for _ in 0..exp.rem_euclid(3) {
                k *= Gf4::ALPHA;
            }
            RingElement::one(variant).scale(k)
        }
        "s" => RingElement::s_pow(variant, exp),
        "x" => RingElement::x(variant).pow(nonneg(exp)?),
        "y" => RingElement::y(variant).pow(nonneg(exp)?),
        "z" => RingElement::z(variant).pow(nonneg(exp)?),
        _ => return Err(Error::Parse(format!("unknown factor {factor:?}"))),
    })
}

/// The k-basis of Λ in degree d, in the fixed order
/// {1}, {x, y}, {y², x²}, {x²y} (times s^⌊d/4⌋).
pub fn basis(d: i32) -> Vec<BasisMonomial> {
    let s = d.div_euclid(4);
    let bs: &[Bm] = match d.rem_euclid(4) {
        0 => &[Bm::One],
        1 => &[Bm::X, Bm::Y],
        2 => &[Bm::Y2, Bm::X2],
        _ => &[Bm::X2Y],
    };
    bs.iter().map(|&b| BasisMonomial::new(s, b)).collect()
}

pub fn dim(d: i32) -> usize {
    basis(d).len()
}

/// The classes dual to the standard basis of Hom(P_d, k): in degree 2 these
/// are y² and xy, elsewhere they coincide with [`basis`].
pub fn class_frame(d: i32, variant: Variant) -> Vec<RingElement> {
    let s = d.div_euclid(4);
    if d.rem_euclid(4) == 2 {
        let y2 = RingElement::basis(variant, s, Bm::Y2);
        let xy = &(&RingElement::x(variant) * &RingElement::y(variant)) * &RingElement::s_pow(variant, s);
        vec![y2, xy]
    } else {
        basis(d).into_iter().map(|m| RingElement::monomial(variant, m)).collect()
    }
}

/// Monomials of the frame {1, x, z, x², z², x³} (t ≥ 4).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ZMon {
    One,
    X,
    Z,
    X2,
    Z2,
    X3,
}

impl ZMon {
    pub const ALL: [ZMon; 6] = [ZMon::One, ZMon::X, ZMon::Z, ZMon::X2, ZMon::Z2, ZMon::X3];

    fn exponents(self) -> (u32, u32) {
        match self {
            ZMon::One => (0, 0),
            ZMon::X => (1, 0),
            ZMon::Z => (0, 1),
            ZMon::X2 => (2, 0),
            ZMon::Z2 => (0, 2),
            ZMon::X3 => (3, 0),
        }
    }
}

/// An element of Λ (t ≥ 4) written in the {1, x, z, x², z², x³} frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZElement {
    blocks: Vec<(i32, Block)>,
}

impl ZElement {
    pub fn coefficient(&self, s: i32, m: ZMon) -> Gf4 {
        self.blocks.iter().find(|(i, _)| *i == s).map_or(Gf4::ZERO, |(_, b)| b[m as usize])
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, ZMon, Gf4)> + '_ {
        self.blocks.iter().flat_map(|(s, b)| {
            b.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(i, c)| (*s, ZMon::ALL[i], *c))
        })
    }

    pub fn to_standard(&self) -> RingElement {
        let blocks = self
            .blocks
            .iter()
            .map(|(s, c)| {
                let [c1, zx, zz, zx2, zz2, zx3] = *c;
                (*s, [c1, zx + zz, zz, zx2 + zz2, zz2, zx3])
            })
            .collect();
        RingElement { variant: Variant::Generalized, blocks }
    }
}

impl fmt::Display for ZElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .terms()
            .map(|(s, m, c)| {
                let mono = format_monomial(s, m.exponents(), 'z');
                if c == Gf4::ONE {
                    mono
                } else {
                    format!("{c}*{mono}")
                }
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}
