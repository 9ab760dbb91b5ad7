use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldParams};
use crate::numtheory::{element_order, factorize, root_of_unity};

use super::counts::validate_radices;
use super::digits::{weights, DigitPermutation};

/// Everything needed to run one length-`n` transform over `F_p`.
///
/// Immutable once built; share freely between threads.
#[derive(Debug, Clone)]
pub struct TransformPlan {
    pub(crate) params: FieldParams,
    pub(crate) n: usize,
    pub(crate) omega: FieldElement,
    pub(crate) radices: Vec<usize>,
    /// `w^k` for `k` in `[0, n)`.
    pub(crate) twiddles: Vec<FieldElement>,
    /// `w^-k` for `k` in `[0, n)`.
    pub(crate) inv_twiddles: Vec<FieldElement>,
    pub(crate) inv_n: FieldElement,
    /// Weight of the stage-k digit in storage order, `r_{k+1} ... r_s`.
    pub(crate) slot_weights: Vec<usize>,
    /// Weight of the stage-k digit in the output index, `r_1 ... r_{k-1}`.
    pub(crate) index_weights: Vec<usize>,
    pub(crate) permutation: DigitPermutation,
}

impl TransformPlan {
    pub fn params(&self) -> &FieldParams {
        &self.params
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn omega(&self) -> FieldElement {
        self.omega
    }

    pub fn radices(&self) -> &[usize] {
        &self.radices
    }

    pub fn twiddles(&self) -> &[FieldElement] {
        &self.twiddles
    }

    pub fn inv_n(&self) -> FieldElement {
        self.inv_n
    }

    pub fn slot_weights(&self) -> &[usize] {
        &self.slot_weights
    }

    pub fn index_weights(&self) -> &[usize] {
        &self.index_weights
    }

    pub fn permutation(&self) -> &DigitPermutation {
        &self.permutation
    }

    pub(crate) fn check_len(&self, v: &[FieldElement]) -> Result<()> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                actual: v.len(),
            });
        }
        Ok(())
    }
}

/// Builds a plan for a length-`n` transform.
///
/// Without `omega`, the root is `g^((p-1)/n)` for the smallest primitive root
/// `g`. Without `radices`, the schedule is the prime factors of `n` in
/// nondecreasing order (so `2^14 * 3^2` gives fourteen 2s, then two 3s).
pub fn plan_transform(
    params: &FieldParams,
    n: u64,
    omega: Option<FieldElement>,
    radices: Option<&[usize]>,
) -> Result<TransformPlan> {
    let group_order = params.group_order();
    if n == 0 || group_order % n != 0 {
        return Err(Error::NotADivisor { n, group_order });
    }
    let radices: Vec<usize> = match radices {
        Some(r) => {
            validate_radices(n, r)?;
            r.to_vec()
        }
        None => factorize(n)
            .prime_multiset()
            .into_iter()
            .map(|q| q as usize)
            .collect(),
    };
    let omega = match omega {
        Some(w) => {
            let actual = if w.is_zero() || w.value() >= params.modulus() {
                0
            } else {
                element_order(params, w, &factorize(group_order))?
            };
            if actual != n {
                return Err(Error::WrongOrder {
                    omega: w.value(),
                    expected: n,
                    actual,
                });
            }
            w
        }
        None => root_of_unity(params, n)?,
    };

    let n = n as usize;
    let mut twiddles = Vec::with_capacity(n);
    let mut x = FieldElement::ONE;
    for _ in 0..n {
        twiddles.push(x);
        x = params.mul(x, omega);
    }
    debug_assert_eq!(x, FieldElement::ONE);
    let inv_twiddles = (0..n).map(|k| twiddles[(n - k) % n]).collect();
    let inv_n = params.inv(params.reduce(n as u64))?;
    let (slot_weights, index_weights) = weights(&radices);
    let permutation = DigitPermutation::new(&radices);

    Ok(TransformPlan {
        params: *params,
        n,
        omega,
        radices,
        twiddles,
        inv_twiddles,
        inv_n,
        slot_weights,
        index_weights,
        permutation,
    })
}
