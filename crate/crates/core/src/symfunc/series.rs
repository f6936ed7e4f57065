//! Graded series with multipartition keys, generic over the coefficient
//! ring. Grade n holds the power-sum coordinates supported on
//! multipartitions whose components all have size n.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinatorics::MultiPartition;
use crate::exactalg::{Rat, TRat};

/// Coefficient ring operations needed by the graded-series algebra.
pub trait Coeff: Clone + PartialEq + Send + Sync + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Exact division by a nonzero integer.
    fn div_int(&self, d: i64) -> Self;
    fn scale_int(&self, c: i64) -> Self;
    fn from_rat(r: &Rat) -> Self;
}

impl Coeff for TRat {
    fn zero() -> Self {
        TRat::zero()
    }
    fn one() -> Self {
        TRat::one()
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_int(&self, d: i64) -> Self {
        self.scale(&crate::exactalg::ratio(1, d))
    }
    fn scale_int(&self, c: i64) -> Self {
        self.scale(&crate::exactalg::rat(c))
    }
    fn from_rat(r: &Rat) -> Self {
        TRat::from_rat(r.clone())
    }
}

impl Coeff for BigRational {
    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    fn one() -> Self {
        <BigRational as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_int(&self, d: i64) -> Self {
        self / crate::exactalg::rat(d)
    }
    fn scale_int(&self, c: i64) -> Self {
        self * crate::exactalg::rat(c)
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
}

/// A series truncated at grade `trunc`, with one coefficient map per grade.
#[derive(Clone, PartialEq)]
pub struct GradedSeries<C: Coeff> {
    arity: usize,
    trunc: usize,
    grades: Vec<BTreeMap<MultiPartition, C>>,
}

impl<C: Coeff> std::fmt::Debug for GradedSeries<C> {
    /// One line per (key, coefficient) pair, in grade order.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "series(arity={}, trunc={})", self.arity, self.trunc)?;
        for grade in &self.grades {
            for (key, c) in grade {
                writeln!(f, "  p[{key}] * {c:?}")?;
            }
        }
        Ok(())
    }
}

impl<C: Coeff> GradedSeries<C> {
    pub fn zero(arity: usize, trunc: usize) -> Self {
        GradedSeries {
            arity,
            trunc,
            grades: vec![BTreeMap::new(); trunc + 1],
        }
    }

    pub fn one(arity: usize, trunc: usize) -> Self {
        let mut s = Self::zero(arity, trunc);
        s.add_term(0, MultiPartition::zero(arity), C::one());
        s
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn grade(&self, n: usize) -> &BTreeMap<MultiPartition, C> {
        &self.grades[n]
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&MultiPartition::zero(self.arity))
    }

    pub fn coeff(&self, key: &MultiPartition) -> C {
        let n = key.size() as usize;
        if n > self.trunc {
            return C::zero();
        }
        self.grades[n].get(key).cloned().unwrap_or_else(C::zero)
    }

    /// Accumulates `c` onto the coefficient of `key` in grade `n`.
    pub fn add_term(&mut self, n: usize, key: MultiPartition, c: C) {
        if c.is_zero() || n > self.trunc {
            return;
        }
        debug_assert_eq!(key.size() as usize, n);
        debug_assert_eq!(key.arity(), self.arity);
        let entry = self.grades[n].entry(key);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.grades.iter().all(|g| g.is_empty())
    }

    pub fn truncate(&self, trunc: usize) -> Self {
        let trunc = trunc.min(self.trunc);
        GradedSeries {
            arity: self.arity,
            trunc,
            grades: self.grades[..=trunc].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        let trunc = self.trunc.min(other.trunc);
        let mut out = self.truncate(trunc);
        for n in 0..=trunc {
            for (key, c) in other.grades[n].iter() {
                out.add_term(n, key.clone(), c.clone());
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale_coeffs(|c| c.neg()))
    }

    pub fn scale_coeffs(&self, f: impl Fn(&C) -> C) -> Self {
        let grades = self
            .grades
            .iter()
            .map(|g| {
                g.iter()
                    .filter_map(|(k, c)| {
                        let v = f(c);
                        (!v.is_zero()).then(|| (k.clone(), v))
                    })
                    .collect()
            })
            .collect();
        GradedSeries {
            arity: self.arity,
            trunc: self.trunc,
            grades,
        }
    }

    /// Graded truncated product; power-sum monomials multiply by merging
    /// their part multisets componentwise.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        let trunc = self.trunc.min(other.trunc);
        let mut out = Self::zero(self.arity, trunc);
        for a in 0..=trunc {
            if self.grades[a].is_empty() {
                continue;
            }
            for b in 0..=(trunc - a) {
                convolve_into(&self.grades[a], &other.grades[b], &mut out.grades[a + b]);
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.arity, self.trunc);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Formal logarithm of a series with constant term 1, computed grade by
    /// grade from `f * log(f)' = f'` (derivation = grade weighting):
    /// `L_n = f_n - (1/n) sum_{b<n} b L_b f_{n-b}`.
    pub fn log(&self) -> Self {
        assert!(
            self.constant_term() == C::one(),
            "log requires constant term 1"
        );
        let mut log_series = Self::zero(self.arity, self.trunc);
        for n in 1..=self.trunc {
            let mut grade_n: BTreeMap<MultiPartition, C> = self.grades[n].clone();
            for b in 1..n {
                if log_series.grades[b].is_empty() || self.grades[n - b].is_empty() {
                    continue;
                }
                let weight = -(b as i64);
                for (k1, c1) in log_series.grades[b].iter() {
                    let c1w = c1.scale_int(weight).div_int(n as i64);
                    for (k2, c2) in self.grades[n - b].iter() {
                        accumulate(&mut grade_n, k1.merge(k2), c1w.mul(c2));
                    }
                }
            }
            log_series.grades[n] = grade_n;
        }
        log_series
    }

    /// Formal exponential of a series with constant term 0:
    /// `E_n = (1/n) sum_{a=1}^n a g_a E_{n-a}`.
    pub fn exp(&self) -> Self {
        assert!(
            self.constant_term().is_zero(),
            "exp requires constant term 0"
        );
        let mut exp_series = Self::one(self.arity, self.trunc);
        for n in 1..=self.trunc {
            let mut grade_n: BTreeMap<MultiPartition, C> = BTreeMap::new();
            for a in 1..=n {
                if self.grades[a].is_empty() || exp_series.grades[n - a].is_empty() {
                    continue;
                }
                for (k1, c1) in self.grades[a].iter() {
                    let c1w = c1.scale_int(a as i64).div_int(n as i64);
                    for (k2, c2) in exp_series.grades[n - a].iter() {
                        accumulate(&mut grade_n, k1.merge(k2), c1w.mul(c2));
                    }
                }
            }
            exp_series.grades[n] = grade_n;
        }
        exp_series
    }

    /// Moves grade n to grade dn, scaling every part of every key by `d` and
    /// transforming coefficients with `f`; grades beyond the truncation are
    /// dropped.
    pub fn adams_with(&self, d: u32, f: impl Fn(&C) -> C) -> Self {
        assert!(d >= 1);
        let mut out = Self::zero(self.arity, self.trunc);
        for n in 0..=self.trunc {
            if n * d as usize > self.trunc {
                break;
            }
            for (key, c) in self.grades[n].iter() {
                let v = f(c);
                if !v.is_zero() {
                    out.add_term(n * d as usize, key.scale(d), v);
                }
            }
        }
        out
    }
}

fn accumulate<C: Coeff>(map: &mut BTreeMap<MultiPartition, C>, key: MultiPartition, c: C) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let sum = o.get().add(&c);
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

fn convolve_into<C: Coeff>(
    a: &BTreeMap<MultiPartition, C>,
    b: &BTreeMap<MultiPartition, C>,
    out: &mut BTreeMap<MultiPartition, C>,
) {
    for (k1, c1) in a {
        for (k2, c2) in b {
            accumulate(out, k1.merge(k2), c1.mul(c2));
        }
    }
}
