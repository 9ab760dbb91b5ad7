//! Arithmetic in the prime field `F_p` for odd primes `p < 2^31`.
//!
//! Residues are stored fully reduced. Every product of two residues is below
//! `2^62`, so multiplication is a widening 64-bit product followed by a
//! Barrett reduction that is exact for that range.

use std::fmt;

use crate::error::{Error, Result};

/// Exclusive upper bound on supported moduli.
pub const MAX_MODULUS: u64 = 1 << 31;

/// A residue modulo some prime, always in `[0, p)`.
///
/// The value carries no reference to its modulus; arithmetic goes through
/// [`FieldParams`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
#[repr(transparent)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: Self = Self(0);
    pub const ONE: Self = Self(1);

    /// Wraps a raw value; the caller guarantees it is below the modulus.
    #[inline]
    pub(crate) const fn from_raw(v: u32) -> Self {
        Self(v)
    }

    #[inline]
    pub const fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<FieldElement> for u32 {
    fn from(x: FieldElement) -> u32 {
        x.0
    }
}

impl From<FieldElement> for u64 {
    fn from(x: FieldElement) -> u64 {
        x.0 as u64
    }
}

/// A validated prime modulus together with its Barrett constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldParams {
    p: u32,
    // floor(2^64 / p)
    barrett: u64,
}

impl FieldParams {
    /// Validates `p` as a prime in `(2, 2^31)`.
    pub fn new(p: u64) -> Result<Self> {
        if p <= 2 || p >= MAX_MODULUS || !is_prime(p) {
            return Err(Error::InvalidField(p));
        }
        Ok(Self {
            p: p as u32,
            barrett: (u128::from(u64::MAX) + 1).div_euclid(p as u128) as u64,
        })
    }

    #[inline]
    pub const fn modulus(&self) -> u32 {
        self.p
    }

    /// Order of the multiplicative group, `p - 1`.
    #[inline]
    pub const fn group_order(&self) -> u64 {
        self.p as u64 - 1
    }

    /// Checked conversion of an already reduced residue.
    pub fn element(&self, value: u64) -> Result<FieldElement> {
        if value < self.p as u64 {
            Ok(FieldElement(value as u32))
        } else {
            Err(Error::Unreduced { value, p: self.p })
        }
    }

    /// Reduces an arbitrary `u64` into the field.
    #[inline]
    pub fn reduce(&self, value: u64) -> FieldElement {
        FieldElement((value % self.p as u64) as u32)
    }

    /// `p - 1`, i.e. `-1` in the field.
    #[inline]
    pub const fn minus_one(&self) -> FieldElement {
        FieldElement(self.p - 1)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        // a + b < 2^32 since both are below 2^31.
        let s = a.0 + b.0;
        FieldElement(if s >= self.p { s - self.p } else { s })
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let (d, borrow) = a.0.overflowing_sub(b.0);
        FieldElement(if borrow { d.wrapping_add(self.p) } else { d })
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if a.0 == 0 {
            a
        } else {
            FieldElement(self.p - a.0)
        }
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.reduce_wide(a.0 as u64 * b.0 as u64))
    }

    /// Barrett reduction, exact for `x < 2^62`.
    #[inline]
    fn reduce_wide(&self, x: u64) -> u32 {
        let q = ((x as u128 * self.barrett as u128) >> 64) as u64;
        let r = x - q * self.p as u64;
        (if r >= self.p as u64 {
            r - self.p as u64
        } else {
            r
        }) as u32
    }

    /// Square-and-multiply; `a^0 = 1` for every `a`, including zero.
    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Inverse via Fermat's little theorem, `a^(p-2)`.
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, self.p as u64 - 2))
    }
}

#[inline]
fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        e >>= 1;
    }
    acc
}

/// Deterministic primality test, exact for every `u64`.
///
/// Miller-Rabin with the first twelve primes as witnesses, which has no
/// strong pseudoprimes below `3.3 * 10^24`.
pub fn is_prime(q: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if q < 2 {
        return false;
    }
    for w in WITNESSES {
        if q % w == 0 {
            return q == w;
        }
    }
    let s = (q - 1).trailing_zeros();
    let d = (q - 1) >> s;
    'witness: for a in WITNESSES {
        let mut x = pow_mod_u64(a, d, q);
        if x == 1 || x == q - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, q);
            if x == q - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
