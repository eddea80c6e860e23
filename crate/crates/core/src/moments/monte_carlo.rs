use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::exact::MomentValue;
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::sequence::VectorSequence;

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 20_240_917;

/// Random generator shared by every seeded operation in the crate.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Monte Carlo estimate of `E‖X‖_p^p` from `samples` independent sign
/// vectors. `p` may be any positive real. Same inputs give the same bits.
pub fn mc_estimate<T: Real>(seq: &VectorSequence, p: T, samples: u64, seed: u64) -> Result<MomentValue<T>> {
    if samples == 0 {
        return Err(Error::invalid("need at least one Monte Carlo sample"));
    }
    if !p.is_finite() || p <= T::zero() {
        return Err(Error::invalid(format!("moment order must be positive, got {p}")));
    }
    let mut rng = seeded_rng(seed);
    let (n, k) = (seq.n(), seq.k());
    let vectors: Vec<Vec<i64>> = seq
        .vectors()
        .iter()
        .map(|v| v.iter().map(|&c| c as i64).collect())
        .collect();
    let half = T::lit(0.5);
    let mut signed = vec![0i64; k];
    let mut words = vec![0u64; n.div_ceil(64)];
    // Welford
    let mut mean = T::zero();
    let mut m2 = T::zero();
    for s in 1..=samples {
        words.iter_mut().for_each(|w| *w = rng.next_u64());
        signed.iter_mut().for_each(|x| *x = 0);
        for (i, v) in vectors.iter().enumerate() {
            let plus = words[i / 64] >> (i % 64) & 1 == 1;
            for (x, &c) in signed.iter_mut().zip(v) {
                if plus {
                    *x += c;
                } else {
                    *x -= c;
                }
            }
        }
        let value = signed
            .iter()
            .fold(T::zero(), |acc, &x| acc + (T::lit(x.unsigned_abs() as f64) * half).powf(p));
        let delta = value - mean;
        mean = mean + delta / T::lit(s as f64);
        m2 = m2 + delta * (value - mean);
    }
    let stderr = (samples > 1).then(|| {
        let n = T::lit(samples as f64);
        (m2 / (n - T::one()) / n).sqrt()
    });
    Ok(MomentValue::MonteCarlo { p, mean, stderr, samples, seed })
}
