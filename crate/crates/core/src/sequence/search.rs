//! Exhaustive search for the smallest `M` admitting a distinct-subset-sum
//! sequence of length `n` in `[0, M]^k`.
//!
//! Levels `M = 1, 2, …` are tried in order. Within a level, sequences are
//! enumerated in canonical form: vectors strictly increasing in lexicographic
//! order, and for `k ≥ 2` the whole sequence lexicographically least among its
//! coordinate permutations. A branch dies as soon as its prefix has two equal
//! subset sums. Root branches (choice of the first vector) run in parallel;
//! the outcome does not depend on scheduling.

use std::sync::atomic::{AtomicUsize, Ordering};

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use super::construct::baseline_construction;
use super::seq::VectorSequence;
use super::verify::{Packing, Word};
use crate::error::{Error, Result};

/// Default node budget across all levels.
pub const DEFAULT_SEARCH_BUDGET: u64 = 100_000_000;

/// Dimensions above this are out of scope for exhaustive search.
pub const SEARCH_MAX_K: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchOutcome {
    pub n: usize,
    pub k: usize,
    /// Smallest feasible `M` found; the baseline bound when the search ran out.
    pub m_min: u64,
    pub witness: VectorSequence,
    /// Every level below `m_min` was refuted.
    pub exhaustive: bool,
    /// All levels `M < refuted_below` were refuted.
    pub refuted_below: u64,
    /// Search nodes (candidate extensions) visited.
    pub nodes: u64,
}

/// Result of searching a single level `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LevelResult {
    Found(VectorSequence, u64),
    Refuted(u64),
    OutOfBudget(u64),
}

/// Nonzero vectors of `[0, bound]^k` in lexicographic order.
fn candidates(k: usize, bound: u64) -> Vec<Vec<u64>> {
    (0..k)
        .map(|_| 0..=bound)
        .multi_cartesian_product()
        .filter(|v| v.iter().any(|&c| c != 0))
        .collect()
}

/// True when no coordinate permutation gives a lexicographically smaller
/// sorted sequence. `vectors` must already be sorted.
pub fn is_canonical(vectors: &[Vec<u64>]) -> bool {
    let k = vectors.first().map_or(0, Vec::len);
    if k < 2 {
        return true;
    }
    (0..k).permutations(k).all(|perm| {
        let mut permuted: Vec<Vec<u64>> = vectors
            .iter()
            .map(|v| perm.iter().map(|&j| v[j]).collect())
            .collect();
        permuted.sort_unstable();
        permuted.as_slice() >= vectors
    })
}

struct Level<'a, W> {
    n: usize,
    cands: &'a [Vec<u64>],
    packed: Vec<W>,
    cap: u64,
    cancel_above: &'a AtomicUsize,
}

struct Branch {
    nodes: u64,
    found: Option<Vec<usize>>,
    exhausted: bool,
}

/// Merges `sums` with `sums + add`; `None` if the two overlap.
fn extend_sums<W: Word>(sums: &[W], add: W, out: &mut Vec<W>) -> bool {
    out.clear();
    let (mut i, mut j) = (0, 0);
    while i < sums.len() || j < sums.len() {
        let shifted = (j < sums.len()).then(|| sums[j] + add);
        match (sums.get(i), shifted) {
            (Some(&a), Some(b)) if a == b => return false,
            (Some(&a), Some(b)) if a < b => {
                out.push(a);
                i += 1;
            }
            (Some(&a), None) => {
                out.push(a);
                i += 1;
            }
            (_, Some(b)) => {
                out.push(b);
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    true
}

impl<W: Word> Level<'_, W> {
    fn run_branch(&self, root: usize) -> Branch {
        let mut b = Branch { nodes: 1, found: None, exhausted: false };
        let k = self.cands[0].len();
        // canonical sequences start with a vector whose coordinates are nondecreasing
        if k > 1 && !self.cands[root].windows(2).all(|w| w[0] <= w[1]) {
            return b;
        }
        let mut sums = vec![Vec::with_capacity(1 << self.n); self.n + 1];
        sums[0].push(W::zero());
        let (head, tail) = sums.split_at_mut(1);
        if !extend_sums(&head[0], self.packed[root], &mut tail[0]) {
            return b;
        }
        let mut chosen = vec![root];
        if self.dfs(&mut chosen, &mut sums, &mut b, root) {
            b.found = Some(chosen);
        }
        b
    }

    fn dfs(&self, chosen: &mut Vec<usize>, sums: &mut [Vec<W>], b: &mut Branch, last: usize) -> bool {
        let depth = chosen.len();
        if depth == self.n {
            let vectors: Vec<Vec<u64>> = chosen.iter().map(|&i| self.cands[i].clone()).collect();
            return is_canonical(&vectors);
        }
        let remaining = self.n - depth;
        for next in last + 1..self.cands.len() {
            if self.cands.len() - next < remaining {
                break;
            }
            b.nodes += 1;
            if b.nodes > self.cap {
                b.exhausted = true;
                return false;
            }
            if b.nodes % 4096 == 0 && self.cancel_above.load(Ordering::Relaxed) < chosen[0] {
                return false;
            }
            let (lo, hi) = sums.split_at_mut(depth + 1);
            if !extend_sums(&lo[depth], self.packed[next], &mut hi[0]) {
                continue;
            }
            chosen.push(next);
            if self.dfs(chosen, sums, b, next) {
                return true;
            }
            chosen.pop();
            if b.exhausted {
                return false;
            }
        }
        false
    }
}

fn search_level_with<W: Word>(n: usize, k: usize, bound: u64, cap: u64) -> Result<LevelResult> {
    let cands = candidates(k, bound);
    if cands.len() < n {
        return Ok(LevelResult::Refuted(0));
    }
    let packing = Packing::new(n as u64, bound, k)?;
    let packed = cands.iter().map(|v| W::from_u128(packing.pack(v))).collect();
    let cancel_above = AtomicUsize::new(usize::MAX);
    let level = Level { n, cands: &cands, packed, cap, cancel_above: &cancel_above };

    let branches: Vec<Branch> = (0..=cands.len() - n)
        .into_par_iter()
        .map(|root| {
            if cancel_above.load(Ordering::Relaxed) < root {
                return Branch { nodes: 0, found: None, exhausted: false };
            }
            let b = level.run_branch(root);
            if b.found.is_some() {
                cancel_above.fetch_min(root, Ordering::Relaxed);
            }
            b
        })
        .collect();

    // Fold in root order; branches past the first success are never consulted.
    let mut nodes = 0u64;
    for b in branches {
        nodes += b.nodes;
        if b.exhausted || nodes > cap {
            return Ok(LevelResult::OutOfBudget(nodes.min(cap)));
        }
        if let Some(idx) = b.found {
            let vectors = idx.iter().map(|&i| cands[i].clone()).collect();
            return Ok(LevelResult::Found(VectorSequence::new(k, bound, vectors)?, nodes));
        }
    }
    Ok(LevelResult::Refuted(nodes))
}

fn check_size(n: usize, k: usize) -> Result<()> {
    if n == 0 || k == 0 {
        return Err(Error::invalid("search needs n >= 1 and k >= 1"));
    }
    if k > SEARCH_MAX_K || n > 30 {
        return Err(Error::invalid(format!(
            "search supports k <= {SEARCH_MAX_K} and n <= 30, got n = {n}, k = {k}"
        )));
    }
    Ok(())
}

/// Searches the single level `M = bound` with at most `cap` nodes.
pub fn search_level(n: usize, k: usize, bound: u64, cap: u64) -> Result<LevelResult> {
    check_size(n, k)?;
    if Packing::new(n as u64, bound, k)?.narrow() {
        search_level_with::<u64>(n, k, bound, cap)
    } else {
        search_level_with::<u128>(n, k, bound, cap)
    }
}

/// Smallest `M` for which a distinct-subset-sum sequence of `n` vectors in
/// `[0, M]^k` exists, with a canonical witness.
pub fn min_m_search(n: usize, k: usize, budget: u64) -> Result<SearchOutcome> {
    check_size(n, k)?;
    let baseline = baseline_construction(n, k)?;
    let mut used = 0u64;
    for bound in 1..=baseline.bound() {
        match search_level(n, k, bound, budget - used)? {
            LevelResult::Found(witness, nodes) => {
                return Ok(SearchOutcome {
                    n,
                    k,
                    m_min: bound,
                    witness,
                    exhaustive: true,
                    refuted_below: bound,
                    nodes: used + nodes,
                })
            }
            LevelResult::Refuted(nodes) => used += nodes,
            LevelResult::OutOfBudget(nodes) => {
                return Ok(SearchOutcome {
                    n,
                    k,
                    m_min: baseline.bound(),
                    witness: baseline,
                    exhaustive: false,
                    refuted_below: bound,
                    nodes: used + nodes,
                })
            }
        }
    }
    unreachable!("the baseline construction is feasible at its own bound")
}
