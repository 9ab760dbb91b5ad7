//! Discrete Fourier transforms over `F_p`: the naive oracle and two
//! mixed-radix Cooley-Tukey kernels.

mod counts;
mod digits;
mod kernels;
mod plan;

use std::fmt;
use std::str::FromStr;

use crate::error::Result;
use crate::field::FieldElement;

pub use counts::{naive_counts, predicted_counts, Counter, NoCount, OpCounts};
pub use digits::{digit_reverse, digit_unreverse, DigitPermutation};
pub use plan::{plan_transform, TransformPlan};

/// Which fast kernel to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Variant {
    /// Combined twiddle in every stage; `n * sum(r_k)` multiplications.
    Recursive,
    /// Inter-stage twiddles with multiplication-free radix-2 butterflies.
    #[default]
    Twiddle,
}

impl Variant {
    pub const fn name(self) -> &'static str {
        match self {
            Variant::Recursive => "recursive",
            Variant::Twiddle => "twiddle",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "recursive" => Ok(Variant::Recursive),
            "twiddle" => Ok(Variant::Twiddle),
            other => Err(format!(
                "unknown variant `{other}` (expected recursive or twiddle)"
            )),
        }
    }
}

/// Ordering of transform output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputOrder {
    /// `out[j] = V_j`.
    #[default]
    Natural,
    /// Kernel storage order; see [`DigitPermutation`].
    DigitReversed,
}

#[derive(Clone, Copy)]
enum Direction {
    Forward,
    Inverse,
}

impl TransformPlan {
    fn run<C: Counter>(
        &self,
        input: &[FieldElement],
        variant: Variant,
        direction: Direction,
        order: OutputOrder,
        counter: &mut C,
    ) -> Result<Vec<FieldElement>> {
        self.check_len(input)?;
        let table = match direction {
            Direction::Forward => &self.twiddles,
            Direction::Inverse => &self.inv_twiddles,
        };
        let mut raw = match variant {
            Variant::Recursive => kernels::recursive(self, table, input, counter),
            Variant::Twiddle => kernels::twiddle(self, table, input, counter),
        };
        if let Direction::Inverse = direction {
            for x in raw.iter_mut() {
                *x = self.params.mul(*x, self.inv_n);
            }
        }
        Ok(match order {
            OutputOrder::Natural => self.permutation.to_natural(&raw),
            OutputOrder::DigitReversed => raw,
        })
    }

    /// Forward transform with an arbitrary counting sink.
    pub fn forward<C: Counter>(
        &self,
        input: &[FieldElement],
        variant: Variant,
        order: OutputOrder,
        counter: &mut C,
    ) -> Result<Vec<FieldElement>> {
        self.run(input, variant, Direction::Forward, order, counter)
    }

    /// Inverse transform: the forward kernel with `w^-1`, then scaling by
    /// `n^-1`. The `n` scaling multiplications are not reported to `counter`.
    pub fn inverse<C: Counter>(
        &self,
        input: &[FieldElement],
        variant: Variant,
        order: OutputOrder,
        counter: &mut C,
    ) -> Result<Vec<FieldElement>> {
        self.run(input, variant, Direction::Inverse, order, counter)
    }

    /// Naive DFT with an arbitrary counting sink.
    pub fn naive_forward<C: Counter>(
        &self,
        input: &[FieldElement],
        counter: &mut C,
    ) -> Result<Vec<FieldElement>> {
        self.check_len(input)?;
        Ok(kernels::naive(self, &self.twiddles, input, counter))
    }
}

/// Direct evaluation of `V_j = sum_i w^(ij) v_i`; the reference every fast
/// kernel is checked against.
pub fn dft_naive(plan: &TransformPlan, v: &[FieldElement]) -> Result<Vec<FieldElement>> {
    plan.naive_forward(v, &mut NoCount)
}

/// `v_i = n^-1 sum_j w^(-ij) V_j` by the direct double loop.
pub fn idft_naive(plan: &TransformPlan, v: &[FieldElement]) -> Result<Vec<FieldElement>> {
    plan.check_len(v)?;
    let mut out = kernels::naive(plan, &plan.inv_twiddles, v, &mut NoCount);
    for x in out.iter_mut() {
        *x = plan.params.mul(*x, plan.inv_n);
    }
    Ok(out)
}

fn forward_counted(
    plan: &TransformPlan,
    v: &[FieldElement],
    variant: Variant,
    counter: Option<&mut OpCounts>,
) -> Result<Vec<FieldElement>> {
    match counter {
        Some(c) => plan.forward(v, variant, OutputOrder::Natural, c),
        None => plan.forward(v, variant, OutputOrder::Natural, &mut NoCount),
    }
}

/// Forward transform with per-stage combined twiddles, natural-order output.
pub fn fft_recursive(
    plan: &TransformPlan,
    v: &[FieldElement],
    counter: Option<&mut OpCounts>,
) -> Result<Vec<FieldElement>> {
    forward_counted(plan, v, Variant::Recursive, counter)
}

/// Forward transform with inter-stage twiddles, natural-order output.
pub fn fft_twiddle(
    plan: &TransformPlan,
    v: &[FieldElement],
    counter: Option<&mut OpCounts>,
) -> Result<Vec<FieldElement>> {
    forward_counted(plan, v, Variant::Twiddle, counter)
}

/// Inverse transform, natural-order input and output.
pub fn ifft(
    plan: &TransformPlan,
    v: &[FieldElement],
    variant: Variant,
) -> Result<Vec<FieldElement>> {
    plan.inverse(v, variant, OutputOrder::Natural, &mut NoCount)
}

/// Cyclic convolution `(u * v)_k = sum_{i+j = k mod n} u_i v_j` through the
/// transform domain.
pub fn cyclic_convolve_via_fft(
    plan: &TransformPlan,
    u: &[FieldElement],
    v: &[FieldElement],
) -> Result<Vec<FieldElement>> {
    let fu = fft_twiddle(plan, u, None)?;
    let fv = fft_twiddle(plan, v, None)?;
    let prod: Vec<FieldElement> = fu
        .iter()
        .zip(&fv)
        .map(|(&a, &b)| plan.params.mul(a, b))
        .collect();
    ifft(plan, &prod, Variant::Twiddle)
}
