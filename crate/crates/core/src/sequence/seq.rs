use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// A sequence `a_1, …, a_n` of vectors in `Z^k` with components in `[0, M]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct VectorSequence {
    k: usize,
    bound: u64,
    vectors: Vec<Vec<u64>>,
}

impl VectorSequence {
    pub fn new(k: usize, bound: u64, vectors: Vec<Vec<u64>>) -> Result<Self> {
        if k == 0 {
            return Err(Error::invalid("dimension k must be >= 1"));
        }
        for (i, v) in vectors.iter().enumerate() {
            if v.len() != k {
                return Err(Error::invalid(format!(
                    "vector {} has {} components, expected {k}",
                    i + 1,
                    v.len()
                )));
            }
            if let Some(&c) = v.iter().find(|&&c| c > bound) {
                return Err(Error::invalid(format!(
                    "vector {} has component {c} above the bound {bound}",
                    i + 1
                )));
            }
        }
        Ok(Self { k, bound, vectors })
    }

    /// One-dimensional sequence with `M = max(values)`.
    pub fn scalars(values: &[u64]) -> Result<Self> {
        let bound = values.iter().copied().max().unwrap_or(0);
        Self::new(1, bound, values.iter().map(|&v| vec![v]).collect())
    }

    /// Sequence with the smallest bound that contains every component.
    pub fn tight(k: usize, vectors: Vec<Vec<u64>>) -> Result<Self> {
        let bound = vectors.iter().flatten().copied().max().unwrap_or(0);
        Self::new(k, bound, vectors)
    }

    pub fn n(&self) -> usize {
        self.vectors.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Declared bound `M`.
    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn vectors(&self) -> &[Vec<u64>] {
        &self.vectors
    }

    /// Coordinate `j` of every vector.
    pub fn coordinate(&self, j: usize) -> Vec<u64> {
        self.vectors.iter().map(|v| v[j]).collect()
    }

    /// Componentwise sum of the vectors selected by `mask` (bit `i` ↔ `a_{i+1}`).
    pub fn subset_sum(&self, mask: u64) -> Vec<u64> {
        let mut acc = vec![0u64; self.k];
        for (i, v) in self.vectors.iter().enumerate() {
            if mask >> i & 1 == 1 {
                for (a, &c) in acc.iter_mut().zip(v) {
                    *a += c;
                }
            }
        }
        acc
    }
}

/// Text format: first line `n k M`, then `n` lines of `k` integers.
/// Blank lines and lines starting with `#` are ignored when parsing.
impl fmt::Display for VectorSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} {}", self.n(), self.k, self.bound)?;
        for v in &self.vectors {
            let line: Vec<String> = v.iter().map(u64::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

fn parse_line(line: &str, lineno: usize) -> Result<Vec<u64>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<u64>()
                .map_err(|_| Error::Parse(format!("line {lineno}: `{tok}` is not a nonnegative integer")))
        })
        .collect()
}

impl FromStr for VectorSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (lineno, header) = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
        let header = parse_line(header, lineno)?;
        let [n, k, bound] = header[..] else {
            return Err(Error::Parse(format!("line {lineno}: header must be `n k M`")));
        };
        let mut vectors = Vec::with_capacity(n as usize);
        for (lineno, line) in lines.by_ref().take(n as usize) {
            let v = parse_line(line, lineno)?;
            if v.len() as u64 != k {
                return Err(Error::Parse(format!(
                    "line {lineno}: expected {k} integers, found {}",
                    v.len()
                )));
            }
            vectors.push(v);
        }
        if vectors.len() as u64 != n {
            return Err(Error::Parse(format!("expected {n} vectors, found {}", vectors.len())));
        }
        if let Some((lineno, _)) = lines.next() {
            return Err(Error::Parse(format!("line {lineno}: trailing data after {n} vectors")));
        }
        VectorSequence::new(k as usize, bound, vectors).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        let text = "3 2 2\n1 0\n0 1\n2 2\n";
        let seq: VectorSequence = text.parse().unwrap();
        assert_eq!(seq.n(), 3);
        assert_eq!(seq.k(), 2);
        assert_eq!(seq.bound(), 2);
        assert_eq!(seq.to_string(), text);
        assert_eq!(seq.subset_sum(0b101), vec![3, 2]);
    }

    #[test]
    fn parse_errors() {
        assert!("".parse::<VectorSequence>().is_err());
        assert!("2 1 3\n1\n".parse::<VectorSequence>().is_err());
        assert!("1 2 3\n1\n".parse::<VectorSequence>().is_err());
        assert!("1 1 3\n4\n".parse::<VectorSequence>().is_err());
        assert!("1 1 3\n-1\n".parse::<VectorSequence>().is_err());
        assert!("1 1 3\n1\n2\n".parse::<VectorSequence>().is_err());
        assert!("1 1\n1\n".parse::<VectorSequence>().is_err());
    }

    #[test]
    fn comments_are_skipped() {
        let seq: VectorSequence = "# header\n2 1 3\n# first\n1\n\n3\n".parse().unwrap();
        assert_eq!(seq.vectors(), &[vec![1], vec![3]]);
    }

    #[test]
    fn validation() {
        assert!(VectorSequence::new(0, 1, vec![]).is_err());
        assert!(VectorSequence::new(2, 1, vec![vec![1, 2]]).is_err());
        assert!(VectorSequence::new(2, 5, vec![vec![1]]).is_err());
        assert_eq!(VectorSequence::scalars(&[1, 2, 4]).unwrap().bound(), 4);
    }
}
