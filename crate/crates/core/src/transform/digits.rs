//! Mixed-radix digit reversal.
//!
//! After `s` stages the kernels hold coefficient `V_j` in storage slot
//! `sum_k j_{k-1} * (r_{k+1} ... r_s)`, while its natural index is
//! `j = sum_k j_{k-1} * (r_1 ... r_{k-1})`. For an all-2 schedule this is
//! ordinary bit reversal.

use crate::error::{Error, Result};

/// Slot weights `r_{k+1} ... r_s` and index weights `r_1 ... r_{k-1}`.
pub(crate) fn weights(radices: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let s = radices.len();
    let mut slot = vec![1; s];
    for k in (0..s.saturating_sub(1)).rev() {
        slot[k] = slot[k + 1] * radices[k + 1];
    }
    let mut index = vec![1; s];
    for k in 1..s {
        index[k] = index[k - 1] * radices[k - 1];
    }
    (slot, index)
}

fn check(radices: &[usize], x: usize) -> Result<usize> {
    let len: usize = radices.iter().product();
    if x >= len {
        return Err(Error::OutOfRange { index: x, len });
    }
    Ok(len)
}

/// Maps a storage slot to the coefficient index it holds.
pub fn digit_reverse(radices: &[usize], slot: usize) -> Result<usize> {
    check(radices, slot)?;
    let (slot_w, index_w) = weights(radices);
    Ok(radices
        .iter()
        .enumerate()
        .map(|(k, &r)| (slot / slot_w[k]) % r * index_w[k])
        .sum())
}

/// Inverse of [`digit_reverse`]: the storage slot holding coefficient `index`.
pub fn digit_unreverse(radices: &[usize], index: usize) -> Result<usize> {
    check(radices, index)?;
    let (slot_w, index_w) = weights(radices);
    Ok(radices
        .iter()
        .enumerate()
        .map(|(k, &r)| (index / index_w[k]) % r * slot_w[k])
        .sum())
}

/// Tabulated digit reversal for one schedule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitPermutation {
    radices: Vec<usize>,
    // slot -> coefficient index
    forward: Vec<usize>,
}

impl DigitPermutation {
    pub fn new(radices: &[usize]) -> Self {
        let n: usize = radices.iter().product();
        let (slot_w, index_w) = weights(radices);
        let mut forward = vec![0; n];
        for (slot, target) in forward.iter_mut().enumerate() {
            *target = radices
                .iter()
                .enumerate()
                .map(|(k, &r)| (slot / slot_w[k]) % r * index_w[k])
                .sum();
        }
        Self {
            radices: radices.to_vec(),
            forward,
        }
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    pub fn radices(&self) -> &[usize] {
        &self.radices
    }

    /// Coefficient index stored in `slot`.
    pub fn index_of_slot(&self, slot: usize) -> usize {
        self.forward[slot]
    }

    /// Reorders kernel output into natural coefficient order.
    pub fn to_natural<T: Copy + Default>(&self, raw: &[T]) -> Vec<T> {
        let mut out = vec![T::default(); raw.len()];
        for (slot, &j) in self.forward.iter().enumerate() {
            out[j] = raw[slot];
        }
        out
    }

    /// Reorders natural-order data into kernel storage order.
    pub fn to_raw<T: Copy + Default>(&self, natural: &[T]) -> Vec<T> {
        self.forward.iter().map(|&j| natural[j]).collect()
    }
}
