//! Stage kernels for the two Cooley-Tukey variants.
//!
//! Both kernels write stage `k` in place of the input digit of weight
//! `R = r_{k+1} ... r_s`, so a storage position decomposes as
//! `h * r_k * R + d * R + low`, where `h` encodes the output digits
//! `j_0 .. j_{k-2}` already produced, `d` is the new output digit `j_{k-1}`
//! and `low` holds the input digits still to be consumed. `prefix[h]` keeps
//! the partial output index `J = j_0 + j_1 r_1 + ... + j_{k-2} r_1 ... r_{k-2}`.
//!
//! Both return data in storage (digit-reversed) order.

use crate::field::FieldElement;

use super::counts::Counter;
use super::plan::TransformPlan;

/// Per-stage combined twiddles: stage `k` evaluates
/// `x_k = sum_t x_{k-1}[t] * w^(J_k * t * R)` with one multiplication per
/// term, `w^0` included.
pub(crate) fn recursive<C: Counter>(
    plan: &TransformPlan,
    table: &[FieldElement],
    input: &[FieldElement],
    counter: &mut C,
) -> Vec<FieldElement> {
    let f = &plan.params;
    let n = plan.n;
    let mut src = input.to_vec();
    let mut dst = vec![FieldElement::ZERO; n];
    let mut prefix = vec![0usize];

    for (k, &r) in plan.radices.iter().enumerate() {
        let w = plan.slot_weights[k];
        let l = plan.index_weights[k];
        let mut next_prefix = Vec::with_capacity(prefix.len() * r);
        for (h, &jh) in prefix.iter().enumerate() {
            let base = h * r * w;
            for d in 0..r {
                let jk = jh + d * l;
                next_prefix.push(jk);
                let step = jk * w % n;
                let out = &mut dst[base + d * w..base + (d + 1) * w];
                for (low, slot) in out.iter_mut().enumerate() {
                    let mut e = 0;
                    let mut acc = FieldElement::ZERO;
                    for t in 0..r {
                        let prod = f.mul(src[base + t * w + low], table[e]);
                        counter.mul(1);
                        if t == 0 {
                            acc = prod;
                        } else {
                            acc = f.add(acc, prod);
                            counter.add(1);
                        }
                        e += step;
                        if e >= n {
                            e -= n;
                        }
                    }
                    *slot = acc;
                }
            }
        }
        prefix = next_prefix;
        std::mem::swap(&mut src, &mut dst);
    }
    src
}

/// Rearranged form: stage `k` is a plain `r_k`-point DFT with root
/// `w^(n / r_k)`, followed by the twiddle `w^(J_k * i * R')` where `i` is
/// the next input digit and `R' = r_{k+2} ... r_s` its weight.
///
/// Radix-2 butterflies are a sum and a difference (`w^(n/2) = -1`), so a
/// radix-2 stage spends exactly one multiplication per point, on its
/// twiddle. For radix `r >= 3` the twiddle exponent is folded into the
/// butterfly's table lookups, giving `r` multiplications per point. The last
/// stage's twiddle is `w^0` and is still applied, keeping every stage's cost
/// independent of its position in the schedule.
pub(crate) fn twiddle<C: Counter>(
    plan: &TransformPlan,
    table: &[FieldElement],
    input: &[FieldElement],
    counter: &mut C,
) -> Vec<FieldElement> {
    let f = &plan.params;
    let n = plan.n;
    let s = plan.radices.len();
    let mut src = input.to_vec();
    let mut dst = vec![FieldElement::ZERO; n];
    let mut prefix = vec![0usize];

    for (k, &r) in plan.radices.iter().enumerate() {
        let w = plan.slot_weights[k];
        let l = plan.index_weights[k];
        // Weight of the next input digit; the twiddle is constant over runs
        // of `next_w` consecutive `low` values.
        let (next_w, has_twiddle) = if k + 1 < s {
            (plan.slot_weights[k + 1], true)
        } else {
            (w, false)
        };
        let blocks = w / next_w;
        let twiddle_step = |jk: usize| if has_twiddle { jk * next_w % n } else { 0 };
        let mut next_prefix = Vec::with_capacity(prefix.len() * r);

        if r == 2 {
            for (h, &jh) in prefix.iter().enumerate() {
                let base = 2 * h * w;
                let (j0, j1) = (jh, jh + l);
                next_prefix.push(j0);
                next_prefix.push(j1);
                let (st0, st1) = (twiddle_step(j0), twiddle_step(j1));
                let (mut e0, mut e1) = (0usize, 0usize);
                for b in 0..blocks {
                    for low in b * next_w..(b + 1) * next_w {
                        let a0 = src[base + low];
                        let a1 = src[base + w + low];
                        let sum = f.add(a0, a1);
                        let diff = f.sub(a0, a1);
                        counter.add(2);
                        dst[base + low] = f.mul(sum, table[e0]);
                        dst[base + w + low] = f.mul(diff, table[e1]);
                        counter.mul(2);
                    }
                    e0 = (e0 + st0) % n;
                    e1 = (e1 + st1) % n;
                }
            }
        } else {
            let sub = n / r;
            for (h, &jh) in prefix.iter().enumerate() {
                let base = h * r * w;
                for d in 0..r {
                    let jk = jh + d * l;
                    next_prefix.push(jk);
                    let st = twiddle_step(jk);
                    let butterfly_step = d * sub;
                    let mut e_tw = 0usize;
                    for b in 0..blocks {
                        for low in b * next_w..(b + 1) * next_w {
                            let mut e = e_tw;
                            let mut acc = FieldElement::ZERO;
                            for t in 0..r {
                                let prod = f.mul(src[base + t * w + low], table[e]);
                                counter.mul(1);
                                if t == 0 {
                                    acc = prod;
                                } else {
                                    acc = f.add(acc, prod);
                                    counter.add(1);
                                }
                                e += butterfly_step;
                                if e >= n {
                                    e -= n;
                                }
                            }
                            dst[base + d * w + low] = acc;
                        }
                        e_tw = (e_tw + st) % n;
                    }
                }
            }
        }
        prefix = next_prefix;
        std::mem::swap(&mut src, &mut dst);
    }
    src
}

/// `V_j = sum_i w^(ij) v_i` by the direct double loop.
pub(crate) fn naive<C: Counter>(
    plan: &TransformPlan,
    table: &[FieldElement],
    input: &[FieldElement],
    counter: &mut C,
) -> Vec<FieldElement> {
    let f = &plan.params;
    let n = plan.n;
    (0..n)
        .map(|j| {
            let mut e = 0usize;
            let mut acc = FieldElement::ZERO;
            for (i, &x) in input.iter().enumerate() {
                let prod = f.mul(x, table[e]);
                counter.mul(1);
                if i == 0 {
                    acc = prod;
                } else {
                    acc = f.add(acc, prod);
                    counter.add(1);
                }
                e += j;
                if e >= n {
                    e -= n;
                }
            }
            acc
        })
        .collect()
}
