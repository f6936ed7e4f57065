//! Partitions, multipartitions, multi-types, symmetric-group character
//! values, Kostka numbers and the purely combinatorial scalars built on them.

mod characters;
mod multi;
mod partition;
mod types;

pub use characters::{
    char_table, inverse_kostka_row, kostka_number, kostka_table, sn_character, CharTable,
    KostkaTable,
};
pub use multi::{multipartitions, MultiPartition};
pub use partition::{partitions, Partition};
pub use types::{multitypes, split_types, type_coeffs, MultiType, SplitType};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CombinatoricsError {
    #[error("size mismatch: |{0}| != |{1}|")]
    SizeMismatch(String, String),
    #[error("arity mismatch: {0} components vs {1}")]
    ArityMismatch(usize, usize),
    #[error("the zero multi-type has no coefficients")]
    ZeroType,
    #[error("cannot parse partition text {0:?}")]
    Parse(String),
}

/// Ordinary Moebius function.
pub fn moebius(n: u32) -> i64 {
    assert!(n >= 1);
    let mut n = n;
    let mut result = 1i64;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: u32) -> Vec<u32> {
    assert!(n >= 1);
    let mut divs: Vec<u32> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    divs.sort_unstable();
    divs
}

pub(crate) fn factorial(n: u32) -> u64 {
    (1..=n as u64).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moebius_small_values() {
        let values: Vec<i64> = (1..=12).map(moebius).collect();
        assert_eq!(values, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]);
    }

    #[test]
    fn divisors_of_12() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    }
}
