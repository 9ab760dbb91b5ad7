//! Factorization, totients, generator search and smooth-prime enumeration.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{is_prime, FieldElement, FieldParams, MAX_MODULUS};

/// Prime factorization `n = p_1^e_1 * ... * p_u^e_u` with strictly
/// increasing primes. `n = 1` has no factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(q, _)| q)
    }

    /// Exponent of `q` in the factorization, zero when absent.
    pub fn exponent_of(&self, q: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(r, _)| r == q)
            .map_or(0, |&(_, e)| e)
    }

    /// Multiplies the factors back out.
    pub fn expand(&self) -> u64 {
        self.factors.iter().map(|&(q, e)| q.pow(e)).product()
    }

    /// Primes with multiplicity in nondecreasing order.
    pub fn prime_multiset(&self) -> Vec<u64> {
        self.factors
            .iter()
            .flat_map(|&(q, e)| std::iter::repeat_n(q, e as usize))
            .collect()
    }
}

/// Renders as `2^14*3^2`; exponent 1 is omitted and `n = 1` prints as `1`.
impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (k, &(q, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{q}")?;
            } else {
                write!(f, "{q}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Trial division. Intended for `n < 2^31`, where at most ~46k divisors are
/// tried.
pub fn factorize(n: u64) -> Factorization {
    assert!(n >= 1, "factorize requires n >= 1");
    let mut factors = Vec::new();
    let mut rest = n;
    let mut push = |q: u64, rest: &mut u64| {
        let mut e = 0;
        while *rest % q == 0 {
            *rest /= q;
            e += 1;
        }
        if e > 0 {
            factors.push((q, e));
        }
    };
    push(2, &mut rest);
    let mut q = 3;
    while q * q <= rest {
        push(q, &mut rest);
        q += 2;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Factorization { n, factors }
}

/// `phi(n) = prod q^(e-1) (q - 1)`.
pub fn euler_phi(f: &Factorization) -> u64 {
    f.factors
        .iter()
        .map(|&(q, e)| q.pow(e - 1) * (q - 1))
        .product()
}

/// Probability `phi(n) / n` that a uniform element of a cyclic group of
/// order `n` generates it, as a reduced fraction.
pub fn generator_probability(f: &Factorization) -> Ratio<u64> {
    Ratio::new(euler_phi(f), f.n)
}

fn check_divides(params: &FieldParams, n: u64) -> Result<()> {
    let group_order = params.group_order();
    if n == 0 || group_order % n != 0 {
        return Err(Error::NotADivisor { n, group_order });
    }
    Ok(())
}

/// True when `a^(n/r) != 1` for every prime `r | n`.
fn passes_order_test(params: &FieldParams, a: FieldElement, n: u64, f: &Factorization) -> bool {
    f.primes()
        .all(|r| params.pow(a, n / r) != FieldElement::ONE)
}

fn smallest_primitive_root(params: &FieldParams) -> FieldElement {
    let n = params.group_order();
    let f = factorize(n);
    (2..=n)
        .map(|a| FieldElement::from_raw(a as u32))
        .find(|&a| passes_order_test(params, a, n, &f))
        .expect("F_p^* is cyclic, so a generator exists")
}

/// Smallest integer `a >= 2` whose multiplicative order mod `p` is exactly `n`.
///
/// For `n = p - 1` this is the ascending scan over `{2, 3, ..., n}` testing
/// `a^(n/r) != 1` for every prime factor `r` of `n`. For a proper divisor
/// the candidate must additionally satisfy `a^n = 1`; the search then either
/// scans upward or enumerates the generators `g^(k (p-1)/n)` with
/// `gcd(k, n) = 1`, whichever is expected to be cheaper. `n = 1` returns `1`,
/// the only element of the trivial subgroup.
pub fn find_generator(params: &FieldParams, n: u64) -> Result<FieldElement> {
    check_divides(params, n)?;
    let group_order = params.group_order();
    if n == group_order {
        return Ok(smallest_primitive_root(params));
    }
    if n == 1 {
        return Ok(FieldElement::ONE);
    }
    let f = factorize(n);
    let phi = euler_phi(&f);
    // Expected scan length is (p-1)/phi(n); enumeration costs n products.
    if (group_order / phi) <= n {
        let found = (2..params.modulus() as u64)
            .map(|a| FieldElement::from_raw(a as u32))
            .find(|&b| {
                params.pow(b, n) == FieldElement::ONE && passes_order_test(params, b, n, &f)
            });
        return Ok(found.expect("the order-n subgroup has a generator"));
    }
    let omega = root_of_unity(params, n)?;
    let mut best = None::<FieldElement>;
    let mut power = FieldElement::ONE;
    for k in 0..n {
        if k.gcd(&n) == 1 && best.is_none_or(|b| power < b) {
            best = Some(power);
        }
        power = params.mul(power, omega);
    }
    Ok(best.expect("phi(n) >= 1"))
}

/// The element `g^((p-1)/n)` of order `n`, with `g` the smallest primitive root.
pub fn root_of_unity(params: &FieldParams, n: u64) -> Result<FieldElement> {
    check_divides(params, n)?;
    let g = smallest_primitive_root(params);
    Ok(params.pow(g, params.group_order() / n))
}

/// Exact multiplicative order of `a`, given the factorization of `p - 1`.
pub fn element_order(params: &FieldParams, a: FieldElement, group: &Factorization) -> Result<u64> {
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    debug_assert_eq!(group.n(), params.group_order());
    let mut order = group.n();
    for &(q, e) in group.factors() {
        for _ in 0..e {
            if params.pow(a, order / q) == FieldElement::ONE {
                order /= q;
            } else {
                break;
            }
        }
    }
    Ok(order)
}

/// One row of a smooth-prime table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmoothPrimeRecord {
    pub p: u64,
    pub factorization: Factorization,
    pub generator: FieldElement,
}

impl fmt::Display for SmoothPrimeRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.p, self.factorization, self.generator)
    }
}

/// Every odd prime `p` with `lo < p < hi` whose `p - 1` has all prime factors
/// in `allowed`, ascending, with its smallest primitive root.
///
/// Candidates are generated as products of the allowed primes rather than by
/// scanning the interval. Entries of `allowed` that are not prime are ignored.
/// `hi` is clipped to `2^31`, the field size limit.
pub fn prime_search(lo: u64, hi: u64, allowed: &[u64]) -> Vec<SmoothPrimeRecord> {
    let hi = hi.min(MAX_MODULUS);
    let primes: BTreeSet<u64> = allowed.iter().copied().filter(|&q| is_prime(q)).collect();
    if lo >= hi || primes.is_empty() {
        return Vec::new();
    }
    // p = m + 1 with lo < p < hi and p >= 3.
    let m_lo = lo.max(1);
    let m_hi = hi - 1;
    let mut smooth = vec![1u64];
    for &q in &primes {
        let mut extended = Vec::new();
        for &m in &smooth {
            let mut v = m;
            loop {
                extended.push(v);
                match v.checked_mul(q) {
                    Some(next) if next < m_hi => v = next,
                    _ => break,
                }
            }
        }
        smooth = extended;
    }
    let mut candidates: Vec<u64> = smooth
        .into_iter()
        .filter(|&m| m >= m_lo && m >= 2 && m < m_hi)
        .map(|m| m + 1)
        .collect();
    candidates.sort_unstable();
    candidates
        .into_par_iter()
        .filter(|&p| is_prime(p))
        .map(|p| {
            let params = FieldParams::new(p).expect("odd prime below 2^31");
            SmoothPrimeRecord {
                p,
                factorization: factorize(p - 1),
                generator: smallest_primitive_root(&params),
            }
        })
        .collect()
}
