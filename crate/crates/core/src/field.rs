//! The fields GF(2) and GF(4) = GF(2)[α]/(α²+α+1).
//!
//! Every coefficient in the crate is stored as a [`Gf4`]; GF(2) is the
//! subfield {0, 1}. Bit 0 holds the coefficient of 1 and bit 1 the
//! coefficient of α, so addition is xor.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gf4(u8);

// MUL[a][b] for the encoding 0, 1, α, α² = α+1.
const MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];
const INV: [u8; 4] = [0, 1, 3, 2];

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0);
    pub const ONE: Gf4 = Gf4(1);
    pub const ALPHA: Gf4 = Gf4(2);
    pub const ALPHA2: Gf4 = Gf4(3);

    /// All four elements in encoding order.
    pub const ALL: [Gf4; 4] = [Gf4(0), Gf4(1), Gf4(2), Gf4(3)];

    pub fn from_bits(bits: u8) -> Gf4 {
        Gf4(bits & 3)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self) -> Option<Gf4> {
        if self.0 == 0 {
            None
        } else {
            Some(Gf4(INV[self.0 as usize]))
        }
    }

    pub fn in_gf2(self) -> bool {
        self.0 < 2
    }
}

// Addition in characteristic 2 is XOR.
#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for Gf4 {
    type Output = Gf4;
    fn add(self, rhs: Gf4) -> Gf4 {
        Gf4(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl AddAssign for Gf4 {
    fn add_assign(&mut self, rhs: Gf4) {
        self.0 ^= rhs.0;
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Sub for Gf4 {
    type Output = Gf4;
    fn sub(self, rhs: Gf4) -> Gf4 {
        Gf4(self.0 ^ rhs.0)
    }
}

impl Neg for Gf4 {
    type Output = Gf4;
    fn neg(self) -> Gf4 {
        self
    }
}

impl Mul for Gf4 {
    type Output = Gf4;
    fn mul(self, rhs: Gf4) -> Gf4 {
        Gf4(MUL[self.0 as usize][rhs.0 as usize])
    }
}

impl MulAssign for Gf4 {
    fn mul_assign(&mut self, rhs: Gf4) {
        *self = *self * rhs;
    }
}

impl fmt::Display for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => write!(f, "0"),
            1 => write!(f, "1"),
            2 => write!(f, "alpha"),
            _ => write!(f, "alpha^2"),
        }
    }
}

/// Which coefficient field a computation ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FieldKind {
    Gf2,
    Gf4,
}

impl FieldKind {
    pub fn elements(self) -> &'static [Gf4] {
        match self {
            FieldKind::Gf2 => &Gf4::ALL[..2],
            FieldKind::Gf4 => &Gf4::ALL,
        }
    }

    pub fn contains(self, x: Gf4) -> bool {
        match self {
            FieldKind::Gf2 => x.in_gf2(),
            FieldKind::Gf4 => true,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FieldKind::Gf2 => "GF2",
            FieldKind::Gf4 => "GF4",
        }
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
