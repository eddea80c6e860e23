use super::seq::VectorSequence;
use crate::error::{Error, Result};

/// Powers of two spread round-robin over the coordinates: element `i` is
/// `2^{⌊i/k⌋}` in coordinate `i mod k` and zero elsewhere. Bound is
/// `2^{⌈n/k⌉−1}`.
pub fn baseline_construction(n: usize, k: usize) -> Result<VectorSequence> {
    if n == 0 || k == 0 {
        return Err(Error::invalid("baseline construction needs n >= 1 and k >= 1"));
    }
    let height = n.div_ceil(k) - 1;
    if height >= 64 {
        return Err(Error::invalid(format!("baseline bound 2^{height} does not fit in 64 bits")));
    }
    let vectors = (0..n)
        .map(|i| {
            let mut v = vec![0u64; k];
            v[i % k] = 1 << (i / k);
            v
        })
        .collect();
    VectorSequence::new(k, 1 << height, vectors)
}
