//! Number-theoretic transforms over prime fields `F_p` whose multiplicative
//! group order `p - 1` factors into small primes.
//!
//! The crate provides:
//!
//! * [`field`]: exact `F_p` arithmetic for `p < 2^31`.
//! * [`numtheory`]: trial-division factorization, Euler's totient, smallest
//!   generator search and enumeration of primes with smooth `p - 1`.
//! * [`transform`]: the naive DFT oracle plus two mixed-radix Cooley-Tukey
//!   kernels (per-stage combined twiddles, and the rearranged form with
//!   inter-stage twiddles and multiplication-free radix-2 butterflies),
//!   with exact operation counting.
//! * [`bench`]: instrumented benchmark runs and CSV / human reports.
//! * [`vector_file`]: the `ntt-vec` text format for vectors in `F_p^n`.

pub mod bench;
pub mod error;
pub mod field;
pub mod numtheory;
pub mod transform;
pub mod vector_file;

pub use error::{Error, Result};
pub use field::{is_prime, FieldElement, FieldParams};
pub use numtheory::{
    element_order, euler_phi, factorize, find_generator, generator_probability, prime_search,
    root_of_unity, Factorization, SmoothPrimeRecord,
};
pub use transform::{
    cyclic_convolve_via_fft, dft_naive, digit_reverse, fft_recursive, fft_twiddle, idft_naive,
    ifft, plan_transform, predicted_counts, Counter, DigitPermutation, OpCounts, OutputOrder,
    TransformPlan, Variant,
};
pub use vector_file::VectorFile;
