use std::fmt;
use std::ops::{Mul, MulAssign, Neg};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// An element of the multiplicative group `{+1, -1}`.
///
/// Internally this is the additive group of the two-element field: `Plus`
/// is the bit 0 and `Minus` the bit 1, so multiplication is XOR.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    #[inline]
    pub const fn from_bit(bit: bool) -> Self {
        if bit {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    #[inline]
    pub const fn bit(self) -> bool {
        matches!(self, Sign::Minus)
    }

    /// `(-1)^k` for the parity of `k`.
    #[inline]
    pub const fn from_parity(odd: bool) -> Self {
        Self::from_bit(odd)
    }

    #[inline]
    pub const fn to_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    #[inline]
    pub const fn is_plus(self) -> bool {
        matches!(self, Sign::Plus)
    }

    /// Raises the sign to a power given only by its parity.
    #[inline]
    pub const fn pow_parity(self, odd: bool) -> Self {
        if odd {
            self
        } else {
            Sign::Plus
        }
    }
}

impl TryFrom<i8> for Sign {
    type Error = Error;

    fn try_from(v: i8) -> Result<Self, Error> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(Error::NotASign(i64::from(other))),
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    #[inline]
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_bit(self.bit() != rhs.bit())
    }
}

impl MulAssign for Sign {
    #[inline]
    fn mul_assign(&mut self, rhs: Sign) {
        *self = *self * rhs;
    }
}

impl Neg for Sign {
    type Output = Sign;

    #[inline]
    fn neg(self) -> Sign {
        Sign::from_bit(!self.bit())
    }
}

impl std::iter::Product for Sign {
    fn product<I: Iterator<Item = Sign>>(iter: I) -> Sign {
        iter.fold(Sign::Plus, Mul::mul)
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_i8(self.to_i8())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = i8::deserialize(d)?;
        Sign::try_from(v).map_err(serde::de::Error::custom)
    }
}

/// Whether a sign function is invariant or alternating under swapping
/// two adjacent arguments.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SymmetryKind {
    Symmetric,
    Antisymmetric,
}

impl SymmetryKind {
    /// The factor picked up by an adjacent transposition of arguments.
    #[inline]
    pub const fn sign(self) -> Sign {
        match self {
            SymmetryKind::Symmetric => Sign::Plus,
            SymmetryKind::Antisymmetric => Sign::Minus,
        }
    }

    #[inline]
    pub const fn from_sign(sign: Sign) -> Self {
        match sign {
            Sign::Plus => SymmetryKind::Symmetric,
            Sign::Minus => SymmetryKind::Antisymmetric,
        }
    }

    #[inline]
    pub const fn is_antisymmetric(self) -> bool {
        matches!(self, SymmetryKind::Antisymmetric)
    }
}

impl Mul for SymmetryKind {
    type Output = SymmetryKind;

    fn mul(self, rhs: SymmetryKind) -> SymmetryKind {
        SymmetryKind::from_sign(self.sign() * rhs.sign())
    }
}

impl fmt::Display for SymmetryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymmetryKind::Symmetric => "symmetric",
            SymmetryKind::Antisymmetric => "antisymmetric",
        })
    }
}
