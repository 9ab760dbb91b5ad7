//! Shared inputs for the criterion benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use smooth_ntt::{plan_transform, FieldElement, FieldParams, TransformPlan};

/// Field sizes exercised by the transform benchmarks: `(p, n)`.
pub const CASES: [(u64, u64); 4] = [(769, 768), (65537, 4096), (147457, 36864), (786433, 786432)];

pub fn plan(p: u64, n: u64) -> TransformPlan {
    let params = FieldParams::new(p).expect("benchmark modulus is prime");
    plan_transform(&params, n, None, None).expect("benchmark plan")
}

pub fn input(plan: &TransformPlan, seed: u64) -> Vec<FieldElement> {
    let params = plan.params();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..plan.len())
        .map(|_| params.reduce(rng.random_range(0..params.modulus() as u64)))
        .collect()
}
