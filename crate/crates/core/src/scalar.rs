//! Exact scalar types used by sparse elimination.
//!
//! Rank computations are generic over [`EliminationScalar`]: any exact
//! integral domain whose arithmetic is expressed through `num-traits`.
//! Elimination only ever cross-multiplies rows, so no division is needed;
//! each implementation decides how to renormalize a row afterwards to keep
//! entries small.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Inv, One, Signed, Zero};

/// Exact coefficient domain for fraction-free elimination.
pub trait EliminationScalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + FromPrimitive
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
{
    /// Rescale a nonzero row by a unit of the fraction field.
    ///
    /// Must not change which entries are zero.
    fn normalize(_row: &mut [Self]) {}
}

impl EliminationScalar for BigInt {
    /// Divide out the content and make the leading entry positive.
    fn normalize(row: &mut [Self]) {
        let mut content = BigInt::zero();
        for x in row.iter() {
            content = content.gcd(x);
            if content.is_one() {
                break;
            }
        }
        if row.first().is_some_and(|x| x.is_negative()) {
            content = -content;
        }
        if !content.is_one() && !content.is_zero() {
            for x in row.iter_mut() {
                *x = &*x / &content;
            }
        }
    }
}

impl EliminationScalar for BigRational {
    fn normalize(row: &mut [Self]) {
        if let Some(lead) = row.first().cloned() {
            if !lead.is_one() {
                let inv = lead.recip();
                for x in row.iter_mut() {
                    *x = &*x * &inv;
                }
            }
        }
    }
}

/// Residue class modulo the prime `P`, stored canonically in `0..P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Zp<const P: u32>(u32);

impl<const P: u32> Zp<P> {
    pub const MODULUS: u32 = P;

    pub fn new(v: i64) -> Self {
        Zp(v.rem_euclid(P as i64) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u32> fmt::Debug for Zp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u32> fmt::Display for Zp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Add for Zp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 as u64 + rhs.0 as u64;
        Zp((s % P as u64) as u32)
    }
}

impl<const P: u32> Sub for Zp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let s = self.0 as u64 + P as u64 - rhs.0 as u64;
        Zp((s % P as u64) as u32)
    }
}

impl<const P: u32> Mul for Zp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Zp(((self.0 as u64 * rhs.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Neg for Zp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        if self.0 == 0 {
            self
        } else {
            Zp(P - self.0)
        }
    }
}

impl<const P: u32> Inv for Zp<P> {
    type Output = Self;
    /// Fermat inverse; panics on zero.
    fn inv(self) -> Self {
        assert!(self.0 != 0, "zero has no inverse mod {P}");
        self.pow(P as u64 - 2)
    }
}

impl<const P: u32> Zero for Zp<P> {
    fn zero() -> Self {
        Zp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u32> One for Zp<P> {
    fn one() -> Self {
        Zp(1 % P)
    }
}

impl<const P: u32> FromPrimitive for Zp<P> {
    fn from_i64(n: i64) -> Option<Self> {
        Some(Zp::new(n))
    }
    fn from_u64(n: u64) -> Option<Self> {
        Some(Zp((n % P as u64) as u32))
    }
}

impl<const P: u32> EliminationScalar for Zp<P> {
    fn normalize(row: &mut [Self]) {
        if let Some(&lead) = row.first() {
            if lead.0 != 1 {
                let inv = lead.inv();
                for x in row.iter_mut() {
                    *x = *x * inv;
                }
            }
        }
    }
}
