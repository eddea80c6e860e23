//! Distinct-subset-sum verification.
//!
//! A subset sum has components in `[0, n·M]`, so it packs into one integer in
//! mixed radix `n·M + 1` without carries. Packing is linear, which lets the
//! Gray-code walk update the packed sum by one addition or subtraction per
//! step. `u64` is used when `(n·M+1)^k` fits, `u128` otherwise.

use std::collections::HashSet;
use std::hash::Hash;

use num_traits::PrimInt;
use serde::Serialize;

use super::seq::VectorSequence;
use crate::error::{Error, Result};

/// Largest `n` the verifier enumerates (`2^n` subset sums).
pub const VERIFY_MAX_N: usize = 30;

/// Above this many possible packed values a hash set replaces the bitmap.
const BITMAP_MAX_BITS: u128 = 1 << 28;

/// Two different subsets with the same sum. Indices are 0-based and the two
/// sides are disjoint (common elements cancel).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Collision {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl Collision {
    fn from_masks(a: u64, b: u64) -> Self {
        let common = a & b;
        Self {
            left: mask_indices(a & !common),
            right: mask_indices(b & !common),
        }
    }

    /// Both sides as masks.
    pub fn masks(&self) -> (u64, u64) {
        let m = |v: &[usize]| v.iter().fold(0u64, |acc, &i| acc | 1 << i);
        (m(&self.left), m(&self.right))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Distinct,
    Collision(Collision),
}

impl Verdict {
    pub fn is_distinct(&self) -> bool {
        matches!(self, Verdict::Distinct)
    }
}

pub fn mask_indices(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Mixed-radix packing of componentwise sums of one sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Packing {
    pub radix: u128,
    pub k: usize,
    /// `radix^k`, the number of distinct packed values.
    pub span: u128,
}

impl Packing {
    pub fn for_sequence(seq: &VectorSequence) -> Result<Self> {
        Self::new(seq.n() as u64, seq.bound(), seq.k())
    }

    /// Packing for sums of up to `n` vectors with components in `[0, bound]`.
    pub fn new(n: u64, bound: u64, k: usize) -> Result<Self> {
        let radix = u128::from(n) * u128::from(bound) + 1;
        let span = u32::try_from(k)
            .ok()
            .and_then(|k| radix.checked_pow(k))
            .ok_or(Error::Budget {
                resource: "packed sum width (128 bits)",
                needed: u128::MAX,
                budget: u128::MAX,
            })?;
        Ok(Self { radix, k, span })
    }

    pub fn narrow(&self) -> bool {
        self.span <= u128::from(u64::MAX)
    }

    pub fn pack(&self, v: &[u64]) -> u128 {
        v.iter().fold(0u128, |acc, &c| acc * self.radix + u128::from(c))
    }

    pub fn unpack(&self, mut x: u128) -> Vec<u64> {
        let mut out = vec![0u64; self.k];
        for c in out.iter_mut().rev() {
            *c = (x % self.radix) as u64;
            x /= self.radix;
        }
        out
    }
}

/// Integer width used for packed sums (`u64` or `u128`).
pub trait Word: PrimInt + Hash + Send + Sync + std::fmt::Debug {
    fn from_u128(x: u128) -> Self;
    fn to_u128(self) -> u128;
}

impl Word for u64 {
    fn from_u128(x: u128) -> Self {
        x as u64
    }
    fn to_u128(self) -> u128 {
        u128::from(self)
    }
}

impl Word for u128 {
    fn from_u128(x: u128) -> Self {
        x
    }
    fn to_u128(self) -> u128 {
        self
    }
}

/// Walk over all `2^n` subsets in reflected Gray-code order, yielding
/// `(mask, packed sum)`. Starts with the empty set.
pub struct GrayWalk<W> {
    packed: Vec<W>,
    step: u64,
    total: u64,
    mask: u64,
    sum: W,
}

impl<W: Word> GrayWalk<W> {
    fn new(packed: Vec<W>) -> Self {
        let total = 1u64 << packed.len();
        Self { packed, step: 0, total, mask: 0, sum: W::zero() }
    }
}

impl<W: Word> Iterator for GrayWalk<W> {
    type Item = (u64, W);

    fn next(&mut self) -> Option<Self::Item> {
        if self.step >= self.total {
            return None;
        }
        if self.step > 0 {
            let bit = self.step.trailing_zeros() as usize;
            self.mask ^= 1 << bit;
            if self.mask >> bit & 1 == 1 {
                self.sum = self.sum + self.packed[bit];
            } else {
                self.sum = self.sum - self.packed[bit];
            }
        }
        self.step += 1;
        Some((self.mask, self.sum))
    }
}

fn check_n(seq: &VectorSequence) -> Result<()> {
    if seq.n() > VERIFY_MAX_N {
        return Err(Error::Budget {
            resource: "subset enumeration (sequence length)",
            needed: seq.n() as u128,
            budget: VERIFY_MAX_N as u128,
        });
    }
    Ok(())
}

/// Gray-code walk with 128-bit packed sums, for inspection and testing.
pub fn gray_sums(seq: &VectorSequence) -> Result<(Packing, GrayWalk<u128>)> {
    check_n(seq)?;
    let packing = Packing::for_sequence(seq)?;
    let packed = seq.vectors().iter().map(|v| packing.pack(v)).collect();
    Ok((packing, GrayWalk::new(packed)))
}

enum Seen<W> {
    Bitmap(Vec<u64>),
    Hash(HashSet<W>),
}

impl<W: Word> Seen<W> {
    fn new(span: u128, n: usize) -> Self {
        if span <= BITMAP_MAX_BITS {
            Seen::Bitmap(vec![0; (span as usize).div_ceil(64)])
        } else {
            Seen::Hash(HashSet::with_capacity(1 << n.min(20)))
        }
    }

    /// Records `x`; false if it was already present.
    fn insert(&mut self, x: W) -> bool {
        match self {
            Seen::Bitmap(bits) => {
                let i = x.to_u128() as usize;
                let (word, bit) = (i / 64, i % 64);
                let fresh = bits[word] >> bit & 1 == 0;
                bits[word] |= 1 << bit;
                fresh
            }
            Seen::Hash(set) => set.insert(x),
        }
    }
}

fn verify_with<W: Word>(seq: &VectorSequence, packing: &Packing) -> Verdict {
    let packed: Vec<W> = seq
        .vectors()
        .iter()
        .map(|v| W::from_u128(packing.pack(v)))
        .collect();
    let mut seen = Seen::new(packing.span, seq.n());
    for (mask, sum) in GrayWalk::new(packed.clone()) {
        if !seen.insert(sum) {
            // second pass finds the earlier subset with the same sum
            let (first, _) = GrayWalk::new(packed)
                .find(|&(_, s)| s == sum)
                .expect("colliding sum was visited before");
            return Verdict::Collision(Collision::from_masks(first, mask));
        }
    }
    Verdict::Distinct
}

/// Checks that all `2^n` subset sums are pairwise distinct, returning the
/// first repeated sum met along the Gray-code walk.
pub fn verify_distinct(seq: &VectorSequence) -> Result<Verdict> {
    check_n(seq)?;
    let packing = Packing::for_sequence(seq)?;
    Ok(if packing.narrow() {
        verify_with::<u64>(seq, &packing)
    } else {
        verify_with::<u128>(seq, &packing)
    })
}

/// Reference check: every subset sum recomputed from scratch as a plain
/// vector, sorted, adjacent equal pairs reported. No packing, no Gray code.
pub fn verify_distinct_by_sorting(seq: &VectorSequence) -> Result<Verdict> {
    check_n(seq)?;
    let mut sums: Vec<(Vec<u64>, u64)> = (0..1u64 << seq.n()).map(|m| (seq.subset_sum(m), m)).collect();
    sums.sort_unstable();
    Ok(sums
        .windows(2)
        .find(|w| w[0].0 == w[1].0)
        .map_or(Verdict::Distinct, |w| Verdict::Collision(Collision::from_masks(w[0].1, w[1].1))))
}
