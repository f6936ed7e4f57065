//! Integer partitions with the statistics used throughout the pipeline.

use std::fmt;
use std::str::FromStr;

use super::CombinatoricsError;

/// An integer partition: weakly decreasing positive parts. The empty
/// sequence is the partition of 0 and is a first-class value.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from weakly decreasing positive parts.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.last().is_none_or(|&p| p > 0),
            "parts must be weakly decreasing and positive: {parts:?}"
        );
        Partition { parts }
    }

    /// Builds a partition from parts in any order; zeros are dropped.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The single-row partition `(n)`, or the empty partition for n = 0.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The single-column partition `(1^n)`.
    pub fn column(n: u32) -> Self {
        Partition {
            parts: vec![1; n as usize],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The i-th part (0-based), 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// `n(lambda) = sum (i-1) * lambda_i`.
    pub fn n_stat(&self) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u64 * p as u64)
            .sum()
    }

    /// `<lambda, lambda> = |lambda| + 2 n(lambda) = sum (lambda'_i)^2`.
    pub fn norm(&self) -> u64 {
        self.size() as u64 + 2 * self.n_stat()
    }

    /// Sum of the squares of the parts.
    pub fn sum_of_squares(&self) -> u64 {
        self.parts.iter().map(|&p| (p as u64) * (p as u64)).sum()
    }

    /// Multiplicity of the part value `value`.
    pub fn multiplicity(&self, value: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == value).count() as u32
    }

    /// The distinct part values with their multiplicities, largest first.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Centralizer order `z_lambda = prod i^{m_i} m_i!`.
    pub fn z(&self) -> u64 {
        self.multiplicities()
            .iter()
            .map(|&(v, m)| (v as u64).pow(m) * super::factorial(m))
            .product()
    }

    /// The conjugate partition.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts = (1..=cols)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count() as u32)
            .collect();
        Partition { parts }
    }

    /// `d . lambda`: every part multiplied by `d`.
    pub fn scale(&self, d: u32) -> Partition {
        assert!(d >= 1);
        Partition {
            parts: self.parts.iter().map(|&p| p * d).collect(),
        }
    }

    /// Componentwise sum of two partitions.
    pub fn add(&self, other: &Partition) -> Partition {
        let n = self.parts.len().max(other.parts.len());
        Partition {
            parts: (0..n).map(|i| self.part(i) + other.part(i)).collect(),
        }
    }

    /// Multiset union of the parts (the product rule for power sums).
    pub fn merge(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.parts.len() + other.parts.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            if self.parts[i] >= other.parts[j] {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.parts[i..]);
        parts.extend_from_slice(&other.parts[j..]);
        Partition { parts }
    }

    /// Dominance order: true iff all prefix sums of `self` are at most those
    /// of `other`. Both partitions must have the same size.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool, CombinatoricsError> {
        if self.size() != other.size() {
            return Err(CombinatoricsError::SizeMismatch(
                self.to_string(),
                other.to_string(),
            ));
        }
        let n = self.parts.len().max(other.parts.len());
        let (mut a, mut b) = (0u64, 0u64);
        for i in 0..n {
            a += self.part(i) as u64;
            b += other.part(i) as u64;
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// All partitions of `n` in decreasing lexicographic order, `(n)` first.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn go(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .multiplicities()
            .iter()
            .map(|&(v, m)| {
                if m == 1 {
                    v.to_string()
                } else {
                    format!("{v}^{m}")
                }
            })
            .collect();
        write!(f, "{}", rendered.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for Partition {
    type Err = CombinatoricsError;

    /// Parses comma-separated parts with exponent shorthand: "2,1", "1^3".
    /// "0" and the empty string denote the empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let bad = || CombinatoricsError::Parse(s.to_string());
        let mut parts = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            let (value, mult) = match token.split_once('^') {
                Some((v, m)) => (
                    v.trim().parse::<u32>().map_err(|_| bad())?,
                    m.trim().parse::<u32>().map_err(|_| bad())?,
                ),
                None => (token.parse::<u32>().map_err(|_| bad())?, 1),
            };
            if value == 0 || mult == 0 {
                return Err(bad());
            }
            parts.extend(std::iter::repeat_n(value, mult as usize));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(bad());
        }
        Ok(Partition::new(parts))
    }
}
