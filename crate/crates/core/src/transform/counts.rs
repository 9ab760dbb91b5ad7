use std::ops::AddAssign;

use crate::error::{Error, Result};

use super::Variant;

/// Exact tallies of field multiplications and additions.
///
/// Subtractions count as additions; negations and table lookups are free.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct OpCounts {
    pub multiplications: u64,
    pub additions: u64,
}

impl OpCounts {
    pub const fn new(multiplications: u64, additions: u64) -> Self {
        Self {
            multiplications,
            additions,
        }
    }
}

impl AddAssign for OpCounts {
    fn add_assign(&mut self, rhs: Self) {
        self.multiplications += rhs.multiplications;
        self.additions += rhs.additions;
    }
}

/// Sink for operation tallies. Kernels call it once per field operation.
pub trait Counter {
    fn mul(&mut self, k: u64);
    fn add(&mut self, k: u64);
}

impl Counter for OpCounts {
    #[inline]
    fn mul(&mut self, k: u64) {
        self.multiplications += k;
    }

    #[inline]
    fn add(&mut self, k: u64) {
        self.additions += k;
    }
}

/// Discards every tally.
#[derive(Debug, Clone, Copy, Default)]
pub struct NoCount;

impl Counter for NoCount {
    #[inline(always)]
    fn mul(&mut self, _: u64) {}

    #[inline(always)]
    fn add(&mut self, _: u64) {}
}

pub(crate) fn validate_radices(n: u64, radices: &[usize]) -> Result<()> {
    let bad = || Error::BadRadices {
        n,
        radices: radices.to_vec(),
    };
    let mut product: u64 = 1;
    for &r in radices {
        if r < 2 {
            return Err(bad());
        }
        product = product.checked_mul(r as u64).ok_or_else(bad)?;
    }
    if product != n {
        return Err(bad());
    }
    Ok(())
}

/// Closed-form operation counts for one forward transform.
///
/// * recursive: `n * sum(r_k)` multiplications (every twiddle product,
///   including those by `w^0`) and `n * sum(r_k - 1)` additions.
/// * twiddle: each radix-2 stage costs `n` multiplications instead of `2n`;
///   for a schedule of `v1` twos and `v2` threes this is `n (v1 + 3 v2)`.
///   Additions are the same as for the recursive variant, `n (v1 + 2 v2)`.
pub fn predicted_counts(n: u64, radices: &[usize], variant: Variant) -> Result<OpCounts> {
    validate_radices(n, radices)?;
    let additions = radices.iter().map(|&r| n * (r as u64 - 1)).sum();
    let multiplications = radices
        .iter()
        .map(|&r| match (variant, r) {
            (Variant::Twiddle, 2) => n,
            _ => n * r as u64,
        })
        .sum();
    Ok(OpCounts {
        multiplications,
        additions,
    })
}

/// Counts for the naive double loop: `n^2` multiplications, `n (n - 1)` additions.
pub fn naive_counts(n: u64) -> OpCounts {
    OpCounts::new(n * n, n * n.saturating_sub(1))
}
