//! Multi-types and split types: the multiplicity functions organizing
//! plethystic expansions, together with their expansion coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::{factorial, moebius, multipartitions, partitions, CombinatoricsError};
use super::{MultiPartition, Partition};

/// A multi-type: a finitely supported multiplicity function on pairs
/// `(degree, multipartition)` with positive degree and nonzero multipartition.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiType {
    entries: BTreeMap<(u32, MultiPartition), u32>,
}

impl MultiType {
    pub fn new(entries: impl IntoIterator<Item = ((u32, MultiPartition), u32)>) -> Self {
        let mut map = BTreeMap::new();
        for ((d, mu), mult) in entries {
            assert!(d >= 1, "degree must be positive");
            assert!(!mu.is_zero(), "multipartition must be nonzero");
            if mult == 0 {
                continue;
            }
            *map.entry((d, mu)).or_insert(0) += mult;
        }
        MultiType { entries: map }
    }

    pub fn zero() -> Self {
        MultiType {
            entries: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Support with multiplicities.
    pub fn entries(&self) -> impl Iterator<Item = (&(u32, MultiPartition), u32)> {
        self.entries.iter().map(|(k, &m)| (k, m))
    }

    /// `|omega| = sum d |mu| omega(d, mu)`.
    pub fn size(&self) -> u32 {
        self.entries
            .iter()
            .map(|((d, mu), mult)| d * mu.size() * mult)
            .sum()
    }

    /// The distinct degrees appearing in the support.
    pub fn degrees(&self) -> Vec<u32> {
        let mut ds: Vec<u32> = self.entries.keys().map(|(d, _)| *d).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// True when all degrees equal 1.
    pub fn is_split(&self) -> bool {
        self.entries.keys().all(|(d, _)| *d == 1)
    }

    /// Total multiplicity `r_omega`.
    pub fn total_multiplicity(&self) -> u32 {
        self.entries.values().sum()
    }

    /// `omega_+ = sum (d omega(d, mu)) . mu`, a multipartition of size
    /// `|omega|`.
    pub fn plus(&self, arity: usize) -> MultiPartition {
        let mut acc = MultiPartition::zero(arity);
        for ((d, mu), mult) in &self.entries {
            acc = acc.add(&mu.scale(d * mult));
        }
        acc
    }

    /// The i-th coordinate: a multi-type with arity-1 multipartitions.
    pub fn coordinate(&self, i: usize) -> MultiType {
        let mut out = BTreeMap::new();
        for ((d, mu), mult) in &self.entries {
            let key = (*d, MultiPartition::new(vec![mu.component(i).clone()]));
            *out.entry(key).or_insert(0) += *mult;
        }
        MultiType { entries: out }
    }

    /// The flattening map to split types: `omega^o(mu) = sum_d d omega(d, mu)`.
    pub fn flatten(&self) -> SplitType {
        let mut out = BTreeMap::new();
        for ((d, mu), mult) in &self.entries {
            *out.entry(mu.clone()).or_insert(0) += d * mult;
        }
        SplitType { entries: out }
    }
}

impl fmt::Debug for MultiType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "{{}}");
        }
        let rendered: Vec<String> = self
            .entries
            .iter()
            .map(|((d, mu), m)| format!("({d},{mu}):{m}"))
            .collect();
        write!(f, "{{{}}}", rendered.join(", "))
    }
}

/// A split type: a finitely supported multiplicity function on nonzero
/// multipartitions, written `alpha_1^{n_1} ... alpha_s^{n_s}` with
/// `alpha_1 > alpha_2 > ...` in the fixed total order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SplitType {
    entries: BTreeMap<MultiPartition, u32>,
}

impl SplitType {
    pub fn new(entries: impl IntoIterator<Item = (MultiPartition, u32)>) -> Self {
        let mut map = BTreeMap::new();
        for (mu, mult) in entries {
            assert!(!mu.is_zero(), "multipartition must be nonzero");
            if mult == 0 {
                continue;
            }
            *map.entry(mu).or_insert(0) += mult;
        }
        SplitType { entries: map }
    }

    /// The split type `mu^1`.
    pub fn singleton(mu: MultiPartition) -> Self {
        SplitType::new([(mu, 1)])
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.entries.iter().map(|(mu, m)| mu.size() * m).sum()
    }

    /// Support in decreasing order together with multiplicities:
    /// `[(alpha_1, n_1), ..., (alpha_s, n_s)]` with `alpha_1 > ... > alpha_s`.
    pub fn factors(&self) -> Vec<(&MultiPartition, u32)> {
        self.entries.iter().rev().map(|(mu, &m)| (mu, m)).collect()
    }

    pub fn multiplicity(&self, mu: &MultiPartition) -> u32 {
        self.entries.get(mu).copied().unwrap_or(0)
    }

    /// The multi-type in the fiber of the flattening map indexed by one
    /// partition `lambda^i` of `n_i` per support member: part multiplicities
    /// of `lambda^i` become degree multiplicities at `alpha_i`.
    pub fn fiber_element(&self, lambdas: &[Partition]) -> MultiType {
        let factors = self.factors();
        assert_eq!(lambdas.len(), factors.len(), "one partition per factor");
        let mut entries = BTreeMap::new();
        for ((alpha, n_i), lambda) in factors.into_iter().zip(lambdas) {
            assert_eq!(lambda.size(), n_i, "fiber partition size must match");
            for (value, mult) in lambda.multiplicities() {
                *entries.entry((value, alpha.clone())).or_insert(0) += mult;
            }
        }
        MultiType { entries }
    }

    /// The whole fiber of the flattening map, as pairs (partition tuple,
    /// multi-type), enumerated over the product of partition sets.
    pub fn fiber(&self) -> Vec<(Vec<Partition>, MultiType)> {
        let factors = self.factors();
        let choices: Vec<Vec<Partition>> =
            factors.iter().map(|(_, n_i)| partitions(*n_i)).collect();
        let mut out = Vec::new();
        let mut tuple: Vec<Partition> = Vec::with_capacity(choices.len());
        fn go(
            split: &SplitType,
            choices: &[Vec<Partition>],
            tuple: &mut Vec<Partition>,
            out: &mut Vec<(Vec<Partition>, MultiType)>,
        ) {
            if tuple.len() == choices.len() {
                out.push((tuple.clone(), split.fiber_element(tuple)));
                return;
            }
            for lam in &choices[tuple.len()] {
                tuple.push(lam.clone());
                go(split, choices, tuple, out);
                tuple.pop();
            }
        }
        go(self, &choices, &mut tuple, &mut out);
        out
    }
}

impl fmt::Debug for SplitType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "{{}}");
        }
        let rendered: Vec<String> = self
            .factors()
            .iter()
            .map(|(mu, m)| {
                if *m == 1 {
                    format!("({mu})")
                } else {
                    format!("({mu})^{m}")
                }
            })
            .collect();
        write!(f, "{}", rendered.join(""))
    }
}

impl fmt::Display for SplitType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Expansion coefficients `(C_omega, A_omega)` of a nonzero multi-type.
///
/// `C_omega` vanishes unless the support has a single degree `d`, where it is
/// `moebius(d)/d * (-1)^{r-1} (r-1)! / prod omega(d, mu)!` with `r` the total
/// multiplicity; `A_omega = prod 1/(d^{omega(d,mu)} omega(d,mu)!)`.
pub fn type_coeffs(omega: &MultiType) -> Result<(BigRational, BigRational), CombinatoricsError> {
    if omega.is_zero() {
        return Err(CombinatoricsError::ZeroType);
    }
    let degrees = omega.degrees();
    let c = if degrees.len() == 1 {
        let d = degrees[0];
        let r = omega.total_multiplicity();
        let mut num = BigInt::from(moebius(d)) * BigInt::from(factorial(r - 1));
        if (r - 1) % 2 == 1 {
            num = -num;
        }
        let mut den = BigInt::from(d);
        for (_, mult) in omega.entries() {
            den *= BigInt::from(factorial(mult));
        }
        BigRational::new(num, den)
    } else {
        BigRational::from_integer(BigInt::from(0))
    };
    let mut a_den = BigInt::one();
    for ((d, _), mult) in omega.entries() {
        a_den *= BigInt::from(*d as u64).pow(mult) * BigInt::from(factorial(mult));
    }
    let a = BigRational::new(BigInt::one(), a_den);
    Ok((c, a))
}

/// All multi-types of size `n` (arity `k`), the set indexing plethystic
/// expansion terms. For n = 0 this is the singleton zero multi-type.
pub fn multitypes(n: u32, k: usize) -> Vec<MultiType> {
    // Atoms (d, mu) with weight d|mu|, enumerated by increasing weight.
    let mut atoms: Vec<(u32, MultiPartition, u32)> = Vec::new();
    for w in 1..=n {
        for d in super::divisors(w) {
            for mu in multipartitions(w / d, k) {
                atoms.push((d, mu, w));
            }
        }
    }
    let mut out = Vec::new();
    let mut chosen: Vec<((u32, MultiPartition), u32)> = Vec::new();
    fn go(
        atoms: &[(u32, MultiPartition, u32)],
        start: usize,
        remaining: u32,
        chosen: &mut Vec<((u32, MultiPartition), u32)>,
        out: &mut Vec<MultiType>,
    ) {
        if remaining == 0 {
            out.push(MultiType::new(chosen.iter().cloned()));
            return;
        }
        for (i, (d, mu, w)) in atoms.iter().enumerate().skip(start) {
            if *w > remaining {
                continue;
            }
            let max_mult = remaining / w;
            for mult in 1..=max_mult {
                chosen.push(((*d, mu.clone()), mult));
                go(atoms, i + 1, remaining - w * mult, chosen, out);
                chosen.pop();
            }
        }
    }
    go(&atoms, 0, n, &mut chosen, &mut out);
    out
}

/// All split types of size `n` (arity `k`).
pub fn split_types(n: u32, k: usize) -> Vec<SplitType> {
    let mut atoms: Vec<(MultiPartition, u32)> = Vec::new();
    for w in 1..=n {
        for mu in multipartitions(w, k) {
            atoms.push((mu, w));
        }
    }
    let mut out = Vec::new();
    let mut chosen: Vec<(MultiPartition, u32)> = Vec::new();
    fn go(
        atoms: &[(MultiPartition, u32)],
        start: usize,
        remaining: u32,
        chosen: &mut Vec<(MultiPartition, u32)>,
        out: &mut Vec<SplitType>,
    ) {
        if remaining == 0 {
            out.push(SplitType::new(chosen.iter().cloned()));
            return;
        }
        for (i, (mu, w)) in atoms.iter().enumerate().skip(start) {
            if *w > remaining {
                continue;
            }
            for mult in 1..=(remaining / w) {
                chosen.push((mu.clone(), mult));
                go(atoms, i + 1, remaining - w * mult, chosen, out);
                chosen.pop();
            }
        }
    }
    go(&atoms, 0, n, &mut chosen, &mut out);
    out
}
