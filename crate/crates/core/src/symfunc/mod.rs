//! The graded ring of functions separately symmetric in k variable sets,
//! with coefficients in the rational functions of `t`, stored in the
//! power-sum basis. Adams operations, the Hall pairing and the plethystic
//! `Log`/`Exp` pair live here.

mod series;

pub use series::{Coeff, GradedSeries};

use std::collections::BTreeMap;

use crate::combinatorics::{
    char_table, kostka_table, moebius, multipartitions, MultiPartition, MultiType, Partition,
};
use crate::exactalg::{rat, ratio, Rat, TRat};
use thiserror::Error;

/// Symmetric functions over `Q(t)` in the power-sum basis.
pub type SymFunc = GradedSeries<TRat>;

/// The same graded algebra with the `t` variable already evaluated at a
/// rational point; used by the integer-evaluation cross-check and the
/// finite-group oracle.
pub type QSeries = GradedSeries<Rat>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SymFuncError {
    #[error("unsupported basis conversion from {0:?}")]
    UnsupportedSource(Basis),
    #[error("family has no member at {0}")]
    MissingFamilyMember(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    Schur,
    Power,
    Complete,
    Monomial,
}

/// `<p_rho, h_mu>` in one variable set: `sum_lam K_{lam mu} chi^lam_rho`.
fn power_complete_pairing(rho: &Partition, mu: &Partition) -> i64 {
    debug_assert_eq!(rho.size(), mu.size());
    let n = rho.size();
    let chars = char_table(n);
    let kostka = kostka_table(n);
    let rho_idx = chars.index_of(rho);
    let mu_idx = kostka.index_of(mu);
    (0..chars.parts.len())
        .map(|lam| kostka.k[lam][mu_idx] * chars.chi[lam][rho_idx])
        .sum()
}

impl SymFunc {
    /// The basis element `p_mu`.
    pub fn power(mu: &MultiPartition, trunc: usize) -> Self {
        let mut f = SymFunc::zero(mu.arity(), trunc);
        f.add_term(mu.size() as usize, mu.clone(), TRat::one());
        f
    }

    /// The Schur element `s_mu = prod_i s_{mu^i}(x_i)` expanded in power
    /// sums through the character table.
    pub fn schur(mu: &MultiPartition, trunc: usize) -> Self {
        let n = mu.size();
        let mut f = SymFunc::zero(mu.arity(), trunc);
        if (n as usize) > trunc {
            return f;
        }
        for rho in multipartitions(n, mu.arity()) {
            let mut num = 1i64;
            for (m, r) in mu.components().iter().zip(rho.components()) {
                num *= char_table(n).value(m, r);
                if num == 0 {
                    break;
                }
            }
            if num == 0 {
                continue;
            }
            let coeff = TRat::from_rat(ratio(num, rho.z() as i64));
            f.add_term(n as usize, rho, coeff);
        }
        f
    }

    /// The complete element `h_mu = prod_i h_{mu^i}(x_i)`.
    pub fn complete(mu: &MultiPartition, trunc: usize) -> Self {
        let n = mu.size();
        let mut f = SymFunc::zero(mu.arity(), trunc);
        if (n as usize) > trunc {
            return f;
        }
        for rho in multipartitions(n, mu.arity()) {
            let mut num = 1i64;
            for (m, r) in mu.components().iter().zip(rho.components()) {
                num *= power_complete_pairing(r, m);
                if num == 0 {
                    break;
                }
            }
            if num == 0 {
                continue;
            }
            let coeff = TRat::from_rat(ratio(num, rho.z() as i64));
            f.add_term(n as usize, rho, coeff);
        }
        f
    }

    /// The Adams operation: `p_lambda -> p_{d lambda}` on keys and
    /// `t -> t^d` on coefficients.
    pub fn adams(&self, d: u32) -> Self {
        self.adams_with(d, |c| c.adams(d))
    }

    /// `Psi(f) = sum_{d >= 1} psi_d(f) / d`, truncated; the sum is finite
    /// exactly because the constant term vanishes.
    pub fn psi(&self) -> Self {
        assert!(self.constant_term().is_zero(), "psi needs constant term 0");
        let mut out = SymFunc::zero(self.arity(), self.trunc());
        for d in 1..=self.trunc().max(1) as u32 {
            let term = self.adams_with(d, |c| c.adams(d).div_int(d as i64));
            out = out.add(&term);
            if (d as usize) >= self.trunc() {
                break;
            }
        }
        out
    }

    /// `Psi^{-1}(f) = sum_{d >= 1} moebius(d) psi_d(f) / d`.
    pub fn psi_inv(&self) -> Self {
        assert!(
            self.constant_term().is_zero(),
            "psi_inv needs constant term 0"
        );
        let mut out = SymFunc::zero(self.arity(), self.trunc());
        for d in 1..=self.trunc().max(1) as u32 {
            let mu_d = moebius(d);
            if mu_d != 0 {
                let term = self.adams_with(d, |c| c.adams(d).scale(&ratio(mu_d, d as i64)));
                out = out.add(&term);
            }
            if (d as usize) >= self.trunc() {
                break;
            }
        }
        out
    }

    /// Plethystic logarithm `Psi^{-1}(log f)`; requires constant term 1.
    pub fn plethystic_log(&self) -> Self {
        self.log().psi_inv()
    }

    /// Plethystic exponential `exp(Psi(f))`; requires constant term 0.
    pub fn plethystic_exp(&self) -> Self {
        self.psi().exp()
    }

    /// Hall pairing: diagonal in the power-sum basis with weight
    /// `z_rho = prod_i z_{rho^i}`.
    pub fn hall_pairing(&self, other: &Self) -> TRat {
        assert_eq!(self.arity(), other.arity(), "arity mismatch");
        let trunc = self.trunc().min(other.trunc());
        let mut acc = TRat::zero();
        for n in 0..=trunc {
            for (key, c1) in self.grade(n) {
                let c2 = other.coeff(key);
                if c2.is_zero() {
                    continue;
                }
                let z = TRat::from_rat(rat(key.z() as i64));
                acc = &acc + &(&(c1 * &c2) * &z);
            }
        }
        acc
    }

    /// `<self, s_mu>`: pairs grade `|mu|` against the character table.
    pub fn pair_schur(&self, mu: &MultiPartition) -> TRat {
        let n = mu.size() as usize;
        if n > self.trunc() {
            return TRat::zero();
        }
        let table = char_table(mu.size());
        let mut acc = TRat::zero();
        for (rho, c) in self.grade(n) {
            let mut num = 1i64;
            for (m, r) in mu.components().iter().zip(rho.components()) {
                num *= table.value(m, r);
                if num == 0 {
                    break;
                }
            }
            if num != 0 {
                acc = &acc + &c.scale(&rat(num));
            }
        }
        acc
    }

    /// `<self, h_mu>`.
    pub fn pair_complete(&self, mu: &MultiPartition) -> TRat {
        let n = mu.size() as usize;
        if n > self.trunc() {
            return TRat::zero();
        }
        let mut acc = TRat::zero();
        for (rho, c) in self.grade(n) {
            let mut num = 1i64;
            for (m, r) in mu.components().iter().zip(rho.components()) {
                num *= power_complete_pairing(r, m);
                if num == 0 {
                    break;
                }
            }
            if num != 0 {
                acc = &acc + &c.scale(&rat(num));
            }
        }
        acc
    }

    /// Expands the series in the target basis, grade by grade.
    pub fn expand_in(&self, basis: Basis) -> BTreeMap<MultiPartition, TRat> {
        let mut out = BTreeMap::new();
        match basis {
            Basis::Power => {
                for n in 0..=self.trunc() {
                    for (key, c) in self.grade(n) {
                        out.insert(key.clone(), c.clone());
                    }
                }
            }
            Basis::Schur => {
                for n in 0..=self.trunc() {
                    if self.grade(n).is_empty() {
                        continue;
                    }
                    for mu in multipartitions(n as u32, self.arity()) {
                        let c = self.pair_schur(&mu);
                        if !c.is_zero() {
                            out.insert(mu, c);
                        }
                    }
                }
            }
            Basis::Complete => {
                // s_lam = sum_nu K*_{lam nu} h_nu applied to the Schur
                // expansion; K*_{lam nu} = K^{-1}[nu][lam] componentwise.
                let schur = self.expand_in(Basis::Schur);
                for (lam, c) in &schur {
                    let n = lam.size();
                    let table = kostka_table(n);
                    for nu in multipartitions(n, self.arity()) {
                        let mut coeff = 1i64;
                        for (l, v) in lam.components().iter().zip(nu.components()) {
                            coeff *= table.inv_value(v, l);
                            if coeff == 0 {
                                break;
                            }
                        }
                        if coeff != 0 {
                            let term = c.scale(&rat(coeff));
                            merge_term(&mut out, nu, term);
                        }
                    }
                }
            }
            Basis::Monomial => {
                let schur = self.expand_in(Basis::Schur);
                for (lam, c) in &schur {
                    let n = lam.size();
                    let table = kostka_table(n);
                    for mu in multipartitions(n, self.arity()) {
                        let mut coeff = 1i64;
                        for (l, m) in lam.components().iter().zip(mu.components()) {
                            coeff *= table.value(l, m);
                            if coeff == 0 {
                                break;
                            }
                        }
                        if coeff != 0 {
                            let term = c.scale(&rat(coeff));
                            merge_term(&mut out, mu, term);
                        }
                    }
                }
            }
        }
        out
    }

    /// Diagonal tensor product of arity-1 functions: the i-th factor
    /// supplies the i-th component of every key.
    pub fn tensor(factors: &[SymFunc]) -> Self {
        assert!(!factors.is_empty());
        assert!(factors.iter().all(|f| f.arity() == 1));
        let trunc = factors.iter().map(|f| f.trunc()).min().unwrap();
        let mut acc: Vec<(Vec<Partition>, TRat, usize)> = vec![(Vec::new(), TRat::one(), 0)];
        for (idx, factor) in factors.iter().enumerate() {
            let mut next = Vec::new();
            for (components, coeff, grade) in &acc {
                for n in 0..=trunc {
                    for (key, c) in factor.grade(n) {
                        // Keep the diagonal: all components share one grade.
                        if idx > 0 && n != *grade {
                            continue;
                        }
                        let mut comps = components.clone();
                        comps.push(key.component(0).clone());
                        next.push((comps, coeff.mul(c), n));
                    }
                }
            }
            acc = next;
        }
        let mut out = SymFunc::zero(factors.len(), trunc);
        for (components, coeff, grade) in acc {
            out.add_term(grade, MultiPartition::new(components), coeff);
        }
        out
    }
}

fn merge_term(map: &mut BTreeMap<MultiPartition, TRat>, key: MultiPartition, c: TRat) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let sum = o.get() + &c;
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

/// Converts a coefficient map between bases; the monomial basis is a target
/// only.
pub fn basis_convert(
    coeffs: &BTreeMap<MultiPartition, TRat>,
    from: Basis,
    to: Basis,
    arity: usize,
    trunc: usize,
) -> Result<BTreeMap<MultiPartition, TRat>, SymFuncError> {
    let mut f = SymFunc::zero(arity, trunc);
    for (mu, c) in coeffs {
        let element = match from {
            Basis::Schur => SymFunc::schur(mu, trunc),
            Basis::Power => SymFunc::power(mu, trunc),
            Basis::Complete => SymFunc::complete(mu, trunc),
            Basis::Monomial => return Err(SymFuncError::UnsupportedSource(from)),
        };
        f = f.add(&element.scale_coeffs(|v| v.mul(c)));
    }
    Ok(f.expand_in(to))
}

/// `a_omega = prod_{(d, mu)} psi_d(a_mu)^{omega(d, mu)}` for a family of
/// symmetric functions.
pub fn family_type_value(
    family: &dyn Fn(&MultiPartition) -> Option<SymFunc>,
    omega: &MultiType,
    arity: usize,
    trunc: usize,
) -> Result<SymFunc, SymFuncError> {
    let mut acc = SymFunc::one(arity, trunc);
    for ((d, mu), mult) in omega.entries() {
        let member = family(mu).ok_or_else(|| SymFuncError::MissingFamilyMember(mu.to_string()))?;
        let factor = member.adams(*d).pow(mult as u64);
        acc = acc.mul(&factor);
    }
    Ok(acc)
}

/// Scalar variant: `prod_{(d, mu)} psi_d(f_mu)^{omega(d, mu)}` with
/// `psi_d` acting as `t -> t^d`.
pub fn family_type_value_scalar(
    family: &dyn Fn(&MultiPartition) -> Option<TRat>,
    omega: &MultiType,
) -> Result<TRat, SymFuncError> {
    let mut acc = TRat::one();
    for ((d, mu), mult) in omega.entries() {
        let member = family(mu).ok_or_else(|| SymFuncError::MissingFamilyMember(mu.to_string()))?;
        acc = &acc * &member.adams(*d).pow(mult);
    }
    Ok(acc)
}
