//! Multipartitions: k-tuples of partitions of equal size.

use std::fmt;
use std::str::FromStr;

use super::{partitions, CombinatoricsError, Partition};

/// A k-tuple of partitions of equal size. The zero multipartition of arity k
/// consists of k empty partitions.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiPartition {
    components: Vec<Partition>,
}

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Self {
        assert!(!components.is_empty(), "arity must be at least 1");
        let size = components[0].size();
        assert!(
            components.iter().all(|c| c.size() == size),
            "components must have equal size"
        );
        MultiPartition { components }
    }

    pub fn try_new(components: Vec<Partition>) -> Result<Self, CombinatoricsError> {
        if components.is_empty() {
            return Err(CombinatoricsError::ArityMismatch(0, 1));
        }
        let size = components[0].size();
        for c in &components {
            if c.size() != size {
                return Err(CombinatoricsError::SizeMismatch(
                    components[0].to_string(),
                    c.to_string(),
                ));
            }
        }
        Ok(MultiPartition { components })
    }

    /// The zero multipartition of the given arity.
    pub fn zero(arity: usize) -> Self {
        MultiPartition {
            components: vec![Partition::empty(); arity],
        }
    }

    /// The same partition repeated in every component.
    pub fn diagonal(lambda: Partition, arity: usize) -> Self {
        MultiPartition {
            components: vec![lambda; arity],
        }
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Partition {
        &self.components[i]
    }

    pub fn arity(&self) -> usize {
        self.components.len()
    }

    /// Common size of the components.
    pub fn size(&self) -> u32 {
        self.components[0].size()
    }

    pub fn is_zero(&self) -> bool {
        self.size() == 0
    }

    pub fn scale(&self, d: u32) -> MultiPartition {
        MultiPartition {
            components: self.components.iter().map(|c| c.scale(d)).collect(),
        }
    }

    pub fn add(&self, other: &MultiPartition) -> MultiPartition {
        assert_eq!(self.arity(), other.arity());
        MultiPartition {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    /// Componentwise multiset union of parts.
    pub fn merge(&self, other: &MultiPartition) -> MultiPartition {
        assert_eq!(self.arity(), other.arity());
        MultiPartition {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.merge(b))
                .collect(),
        }
    }

    /// Componentwise conjugate.
    pub fn conjugate(&self) -> MultiPartition {
        MultiPartition {
            components: self.components.iter().map(|c| c.conjugate()).collect(),
        }
    }

    /// Componentwise dominance order.
    pub fn dominance_leq(&self, other: &MultiPartition) -> Result<bool, CombinatoricsError> {
        if self.arity() != other.arity() {
            return Err(CombinatoricsError::ArityMismatch(
                self.arity(),
                other.arity(),
            ));
        }
        for (a, b) in self.components.iter().zip(&other.components) {
            if !a.dominance_leq(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Sum of the first parts over the components.
    pub fn first_parts_sum(&self) -> u64 {
        self.components.iter().map(|c| c.part(0) as u64).sum()
    }

    /// Sum of the squares of all parts over all components.
    pub fn sum_of_squares(&self) -> u64 {
        self.components.iter().map(|c| c.sum_of_squares()).sum()
    }

    /// Product of the component centralizer orders.
    pub fn z(&self) -> u64 {
        self.components.iter().map(|c| c.z()).product()
    }
}

/// All multipartitions of size `n` and arity `k`, ordered decreasingly in the
/// componentwise lexicographic order.
pub fn multipartitions(n: u32, k: usize) -> Vec<MultiPartition> {
    assert!(k >= 1);
    let singles = partitions(n);
    let mut out = Vec::with_capacity(singles.len().pow(k as u32));
    let mut stack = vec![Vec::with_capacity(k)];
    while let Some(prefix) = stack.pop() {
        if prefix.len() == k {
            out.push(MultiPartition { components: prefix });
            continue;
        }
        for lam in singles.iter().rev() {
            let mut next = prefix.clone();
            next.push(lam.clone());
            stack.push(next);
        }
    }
    out
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", rendered.join("|"))
    }
}

impl fmt::Debug for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for MultiPartition {
    type Err = CombinatoricsError;

    /// Parses "|"-joined partitions, e.g. `1^3|2,1|1^3`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let components = s
            .split('|')
            .map(|c| c.parse::<Partition>())
            .collect::<Result<Vec<_>, _>>()?;
        MultiPartition::try_new(components)
    }
}
