//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::Ratio;
use smooth_ntt::bench::{format_ratio, random_vectors, run_benchmark, BenchOptions};
use smooth_ntt::transform::NoCount;
use smooth_ntt::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($msg)+));
        }
    };
}

const GRID: [(u64, u64); 9] = [
    (5, 4),
    (13, 12),
    (97, 96),
    (193, 192),
    (257, 256),
    (769, 768),
    (65537, 16),
    (65537, 256),
    (65537, 4096),
];

const VECTORS_PER_CASE: usize = 100;

/// The 2^16 < p < 2^21 table: (p, factorization of p - 1, listed generator).
const TABLE: [(u64, &str, u32); 15] = [
    (65537, "2^16", 3),
    (139969, "2^6*3^7", 13),
    (147457, "2^14*3^2", 10),
    (209953, "2^5*3^8", 10),
    (331777, "2^12*3^4", 5),
    (472393, "2^3*3^10", 5),
    (629857, "2^5*3^9", 5),
    (746497, "2^10*3^6", 5),
    (786433, "2^18*3", 10),
    (839809, "2^7*3^8", 7),
    (995329, "2^12*3^5", 7),
    (1179649, "2^17*3^2", 19),
    (1492993, "2^11*3^6", 7),
    (1769473, "2^16*3^3", 5),
    (1990657, "2^13*3^5", 5),
];

fn field(p: u64) -> FieldParams {
    FieldParams::new(p).expect("valid prime")
}

fn grid_plans() -> Vec<TransformPlan> {
    GRID.iter()
        .map(|&(p, n)| plan_transform(&field(p), n, None, None).expect("grid plan"))
        .collect()
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for plan in grid_plans() {
        let p = plan.params().modulus();
        let n = plan.len();
        for (k, v) in random_vectors(plan.params(), n, VECTORS_PER_CASE, p as u64 ^ n as u64)
            .iter()
            .enumerate()
        {
            let naive = dft_naive(&plan, v).map_err(|e| e.to_string())?;
            let rec = fft_recursive(&plan, v, None).map_err(|e| e.to_string())?;
            let tw = fft_twiddle(&plan, v, None).map_err(|e| e.to_string())?;
            ensure!(rec == naive, "recursive != naive at p={p} n={n} vector {k}");
            ensure!(tw == naive, "twiddle != naive at p={p} n={n} vector {k}");
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure!(
        elapsed < Duration::from_secs(60),
        "took {elapsed:?}, limit 60 s"
    );
    Ok(format!(
        "{checked} vectors on {} grid instances, exact, {elapsed:.2?}",
        GRID.len()
    ))
}

fn round_trip() -> Outcome {
    let mut checked = 0;
    for plan in grid_plans() {
        let n = plan.len();
        for v in random_vectors(plan.params(), n, VECTORS_PER_CASE, 0xabc ^ n as u64) {
            for variant in [Variant::Recursive, Variant::Twiddle] {
                let fwd = plan
                    .forward(&v, variant, OutputOrder::Natural, &mut NoCount)
                    .map_err(|e| e.to_string())?;
                let back = ifft(&plan, &fwd, variant).map_err(|e| e.to_string())?;
                ensure!(
                    back == v,
                    "ifft(fft(v)) != v at p={} n={n} ({variant})",
                    plan.params().modulus()
                );
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} round trips, exact"))
}

/// Rounds to one significant figure, e.g. 7372.8 -> 7000.
fn one_sig_fig(r: &Ratio<u64>) -> u64 {
    let x = *r.numer() as f64 / *r.denom() as f64;
    let mag = 10f64.powi(x.log10().floor() as i32);
    ((x / mag).round() * mag) as u64
}

fn measured(plan: &TransformPlan, variant: Variant) -> Result<OpCounts, String> {
    let v = random_vectors(plan.params(), plan.len(), 1, 3).remove(0);
    let mut c = OpCounts::default();
    plan.forward(&v, variant, OutputOrder::DigitReversed, &mut c)
        .map_err(|e| e.to_string())?;
    Ok(c)
}

fn count_formulas() -> Outcome {
    let mut lines = Vec::new();

    // Every grid instance, both variants.
    for plan in grid_plans() {
        for variant in [Variant::Recursive, Variant::Twiddle] {
            let m = measured(&plan, variant)?;
            let pred = predicted_counts(plan.len() as u64, plan.radices(), variant)
                .map_err(|e| e.to_string())?;
            ensure!(
                m == pred,
                "p={} n={} {variant}: measured {m:?} predicted {pred:?}",
                plan.params().modulus(),
                plan.len()
            );
        }
    }

    let plan = plan_transform(&field(147457), 147456, None, None).map_err(|e| e.to_string())?;
    let rec = measured(&plan, Variant::Recursive)?;
    let tw = measured(&plan, Variant::Twiddle)?;
    ensure!(
        rec.multiplications == 147456 * 34,
        "recursive mults {}",
        rec.multiplications
    );
    ensure!(
        rec == predicted_counts(147456, plan.radices(), Variant::Recursive).unwrap(),
        "recursive {rec:?}"
    );
    ensure!(
        tw.multiplications == 2_949_120,
        "twiddle mults {}",
        tw.multiplications
    );
    ensure!(tw.additions == 2_654_208, "twiddle adds {}", tw.additions);
    let mult_ratio = Ratio::new(147456u64 * 147456, tw.multiplications);
    let add_ratio = Ratio::new(147456u64 * 147455, tw.additions);
    ensure!(
        one_sig_fig(&mult_ratio) == 7000,
        "F_147457 mult ratio {}",
        format_ratio(&mult_ratio)
    );
    ensure!(
        one_sig_fig(&add_ratio) == 8000,
        "F_147457 add ratio {}",
        format_ratio(&add_ratio)
    );
    ensure!(
        tw.multiplications / 1_000_000 == 2
            && one_sig_fig(&Ratio::from_integer(tw.multiplications)) == 3_000_000,
        "twiddle mults {} not ~3e6",
        tw.multiplications
    );
    lines.push(format!(
        "F_147457: rec {} mul, tw {} mul / {} add, ratios {} / {}",
        rec.multiplications,
        tw.multiplications,
        tw.additions,
        format_ratio(&mult_ratio),
        format_ratio(&add_ratio)
    ));

    let plan = plan_transform(&field(786433), 786432, None, None).map_err(|e| e.to_string())?;
    let tw = measured(&plan, Variant::Twiddle)?;
    ensure!(
        tw.multiplications == 786432 * 21,
        "F_786433 twiddle mults {}",
        tw.multiplications
    );
    ensure!(
        tw == predicted_counts(786432, plan.radices(), Variant::Twiddle).unwrap(),
        "F_786433 {tw:?}"
    );
    let mult_ratio = Ratio::new(786432u64 * 786432, tw.multiplications);
    ensure!(mult_ratio == Ratio::new(786432, 21), "ratio {mult_ratio}");
    ensure!(
        one_sig_fig(&mult_ratio) == 40000,
        "F_786433 mult ratio {}",
        format_ratio(&mult_ratio)
    );
    let add_ratio = Ratio::new(786432u64 * 786431, tw.additions);
    ensure!(
        one_sig_fig(&add_ratio) == 40000,
        "F_786433 add ratio {}",
        format_ratio(&add_ratio)
    );
    lines.push(format!(
        "F_786433: tw {} mul, ratios {} / {}",
        tw.multiplications,
        format_ratio(&mult_ratio),
        format_ratio(&add_ratio)
    ));
    Ok(lines.join("; "))
}

/// Smallest a >= 2 of order p - 1, by stepping through powers of each candidate.
fn exhaustive_smallest_generator(p: u64) -> u64 {
    (2..p)
        .find(|&a| {
            let mut x = a;
            let mut order = 1;
            while x != 1 {
                x = x * a % p;
                order += 1;
            }
            order == p - 1
        })
        .expect("generator exists")
}

fn table_reproduction() -> Outcome {
    let start = Instant::now();
    let records = prime_search(1 << 16, 1 << 21, &[2, 3]);
    let primes: Vec<u64> = records.iter().map(|r| r.p).collect();
    let expected: Vec<u64> = TABLE.iter().map(|t| t.0).collect();
    ensure!(primes == expected, "primes {primes:?}");
    let mut mismatches = Vec::new();
    for (rec, &(p, fact, listed)) in records.iter().zip(&TABLE) {
        ensure!(
            rec.factorization.to_string() == fact,
            "p={p}: factorization {}",
            rec.factorization
        );
        let oracle = exhaustive_smallest_generator(p);
        ensure!(
            rec.generator.value() as u64 == oracle,
            "p={p}: computed {} but exhaustive oracle {oracle}",
            rec.generator
        );
        if rec.generator.value() != listed {
            mismatches.push(format!(
                "p={p} table {listed} computed {} oracle {oracle}",
                rec.generator
            ));
        }
    }
    for (p, g) in [(65537, 3), (786433, 10), (1769473, 5)] {
        let rec = records.iter().find(|r| r.p == p).unwrap();
        ensure!(
            rec.generator.value() == g,
            "anchor p={p}: {} != {g}",
            rec.generator
        );
    }
    let elapsed = start.elapsed();
    ensure!(
        elapsed < Duration::from_secs(60),
        "took {elapsed:?}, limit 60 s"
    );
    ensure!(
        mismatches.is_empty(),
        "generator column mismatches: {}",
        mismatches.join(", ")
    );
    Ok(format!(
        "15 primes, factorizations and generators match the table, {elapsed:.2?}"
    ))
}

fn perspective_primes() -> Outcome {
    for (p, fact) in [
        (113246209u64, [(2u64, 22u32), (3, 3)]),
        (725594113, [(2, 12), (3, 11)]),
    ] {
        ensure!(is_prime(p), "{p} not prime");
        let f = factorize(p - 1);
        ensure!(f.factors() == fact, "{p}: {f}");
    }
    Ok("113246209 = 2^22*3^3 + 1, 725594113 = 2^12*3^11 + 1".into())
}

fn generator_density() -> Outcome {
    for n in [147456u64, 786432] {
        let prob = generator_probability(&factorize(n));
        ensure!(prob == Ratio::new(1, 3), "n={n}: {prob}");
    }
    Ok("phi(n)/n = 1/3 for 147456 and 786432".into())
}

fn half_turn_negation() -> Outcome {
    let mut sampled = 0;
    for &(p, _, _) in &TABLE {
        let fp = field(p);
        let n = p - 1;
        let omega = find_generator(&fp, n).map_err(|e| e.to_string())?;
        ensure!(
            fp.pow(omega, n / 2) == fp.minus_one(),
            "p={p}: w^(n/2) != p-1"
        );
        let plan = plan_transform(&fp, n, Some(omega), None).map_err(|e| e.to_string())?;
        let tw = plan.twiddles();
        let half = (n / 2) as usize;
        for t in random_vectors(&fp, 1000, 1, p).remove(0) {
            let t = t.value() as usize % half;
            ensure!(
                tw[half + t].value() == (p as u32 - tw[t].value()) % p as u32,
                "p={p} t={t}"
            );
            sampled += 1;
        }
    }
    Ok(format!(
        "w^(n/2) = -1 for 15 table primes, {sampled} sampled t"
    ))
}

fn desk_speedup() -> Outcome {
    let fp = field(147457);
    let options = BenchOptions {
        measure_naive_up_to: 36864,
        trials: 5,
        seed: 11,
    };
    let report = run_benchmark(&fp, 36864, None, None, Variant::Twiddle, &options)
        .map_err(|e| e.to_string())?;
    let order = element_order(
        &fp,
        plan_transform(&fp, 36864, None, None).unwrap().omega(),
        &factorize(147456),
    )
    .map_err(|e| e.to_string())?;
    ensure!(order == 36864, "root order {order}");
    let mult_ratio = report.mult_ratio.ok_or("no ratio")?;
    ensure!(
        mult_ratio == Ratio::from_integer(2048),
        "predicted mult ratio {mult_ratio}"
    );
    let speedup = report.time_ratio().ok_or("naive not timed")?;
    let detail = format!(
        "fft {:?}, naive {:?}, measured speedup {speedup:.0}x (>= 50x required), predicted mult ratio {}",
        report.wall_clock_fft,
        report.wall_clock_naive.unwrap(),
        format_ratio(&mult_ratio)
    );
    ensure!(speedup >= 50.0, "{detail}");
    Ok(detail)
}

fn direct_convolution(
    fp: &FieldParams,
    u: &[FieldElement],
    v: &[FieldElement],
) -> Vec<FieldElement> {
    let n = u.len();
    let mut out = vec![FieldElement::ZERO; n];
    for (i, &a) in u.iter().enumerate() {
        for (j, &b) in v.iter().enumerate() {
            let k = (i + j) % n;
            out[k] = fp.add(out[k], fp.mul(a, b));
        }
    }
    out
}

fn convolution_oracle() -> Outcome {
    for (p, n) in [(97u64, 96u64), (769, 768)] {
        let fp = field(p);
        let plan = plan_transform(&fp, n, None, None).map_err(|e| e.to_string())?;
        let us = random_vectors(&fp, n as usize, 100, 1);
        let vs = random_vectors(&fp, n as usize, 100, 2);
        for (k, (u, v)) in us.iter().zip(&vs).enumerate() {
            let fast = cyclic_convolve_via_fft(&plan, u, v).map_err(|e| e.to_string())?;
            ensure!(fast == direct_convolution(&fp, u, v), "p={p} pair {k}");
        }
    }
    Ok("100 pairs each at (97, 96) and (769, 768), exact".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("oracle equivalence", oracle_equivalence),
        ("round trip", round_trip),
        ("count formulas", count_formulas),
        ("table reproduction", table_reproduction),
        ("perspective primes", perspective_primes),
        ("generator density", generator_density),
        ("half-turn negation", half_turn_negation),
        ("desk-scale speedup", desk_speedup),
        ("convolution oracle", convolution_oracle),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {} PASS {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} FAIL {name}: {detail}", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
