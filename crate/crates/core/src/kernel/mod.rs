//! The main pipeline: the series `V = (t-1) Log Omega` and `U = Exp V`,
//! extraction of the polynomials `V_mu`, `U_mu`, `A_mu`, and the split-type
//! decomposition of `U_mu`.

mod numeric;

pub use numeric::{numeric_u_series, numeric_u_value, product_identity_check, u_degree_bound};

use std::collections::HashMap;
use std::sync::Mutex;

use thiserror::Error;

use crate::combinatorics::{multipartitions, split_types, type_coeffs, MultiPartition, SplitType};
use crate::exactalg::{rat, TPoly, TRat};
use crate::hall_littlewood::omega_series;
use crate::quiver;
use crate::sn_modules::c_omega_mu;
use crate::symfunc::{Coeff, SymFunc};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KernelError {
    #[error("{label} is not a polynomial: denominator {denominator}")]
    NonPolynomial { label: String, denominator: String },
    #[error("{label} has unexpected coefficients: {poly}")]
    BadCoefficients { label: String, poly: String },
    #[error("size mismatch: |{0}| != |{1}|")]
    SizeMismatch(String, String),
}

/// Immutable pipeline state for fixed size bound, arity and genus: the
/// kernel `Omega` and the derived series, exact at every grade up to `n`.
pub struct KernelContext {
    n: u32,
    k: usize,
    g: u32,
    omega: SymFunc,
    v_series: SymFunc,
    u_series: SymFunc,
    v_cache: Mutex<HashMap<MultiPartition, TPoly>>,
}

impl KernelContext {
    pub fn new(n: u32, k: usize, g: u32) -> Self {
        let omega = omega_series(n, k, g);
        let t_minus_1 = TRat::from_poly(TPoly::from_int_coeffs(&[-1, 1]));
        let v_series = omega.plethystic_log().scale_coeffs(|c| c.mul(&t_minus_1));
        let u_series = v_series.plethystic_exp();
        debug_assert!(v_series.constant_term().is_zero());
        debug_assert!(u_series.constant_term().is_one());
        KernelContext {
            n,
            k,
            g,
            omega,
            v_series,
            u_series,
            v_cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn size_bound(&self) -> u32 {
        self.n
    }

    pub fn arity(&self) -> usize {
        self.k
    }

    pub fn genus(&self) -> u32 {
        self.g
    }

    pub fn omega(&self) -> &SymFunc {
        &self.omega
    }

    pub fn v_series(&self) -> &SymFunc {
        &self.v_series
    }

    pub fn u_series(&self) -> &SymFunc {
        &self.u_series
    }

    fn extract(
        &self,
        series: &SymFunc,
        mu: &MultiPartition,
        label: &str,
        require_nonneg: bool,
    ) -> Result<TPoly, KernelError> {
        let coeff = series.pair_schur(mu);
        let poly = coeff
            .certify_polynomial()
            .map_err(|_| KernelError::NonPolynomial {
                label: format!("{label}_{mu}"),
                denominator: coeff.denom().render(),
            })?;
        if !poly.is_integer() || (require_nonneg && !poly.has_nonnegative_coeffs()) {
            return Err(KernelError::BadCoefficients {
                label: format!("{label}_{mu}"),
                poly: poly.render(),
            });
        }
        Ok(poly)
    }

    /// `V_mu(t) = <V, s_mu>`, certified to lie in `Z_{>=0}[t]`.
    pub fn v_poly(&self, mu: &MultiPartition) -> Result<TPoly, KernelError> {
        assert!(mu.size() >= 1, "V is indexed by nonzero multipartitions");
        assert!(mu.size() <= self.n && mu.arity() == self.k);
        if let Some(hit) = self.v_cache.lock().unwrap().get(mu) {
            return Ok(hit.clone());
        }
        let poly = self.extract(&self.v_series, mu, "V", true)?;
        self.v_cache
            .lock()
            .unwrap()
            .insert(mu.clone(), poly.clone());
        Ok(poly)
    }

    /// `V_mu(1)`, the specialization driving the nonvanishing criterion.
    pub fn v_at_one(&self, mu: &MultiPartition) -> i64 {
        let poly = self.v_poly(mu).expect("V extraction");
        let value = poly.eval_int(1);
        debug_assert!(value.denom() == &num_bigint::BigInt::from(1));
        i64::try_from(&value.to_integer()).expect("V(1) fits in i64")
    }

    /// `U_mu(t) = <U, s_mu>`, certified to lie in `Z_{>=0}[t]`; `U_0 = 1`.
    pub fn u_poly(&self, mu: &MultiPartition) -> Result<TPoly, KernelError> {
        if mu.is_zero() {
            return Ok(TPoly::one());
        }
        assert!(mu.size() <= self.n && mu.arity() == self.k);
        self.extract(&self.u_series, mu, "U", true)
    }

    /// `A_mu(t) = <V, h_mu>`, certified to have integer coefficients.
    pub fn a_poly(&self, mu: &MultiPartition) -> Result<TPoly, KernelError> {
        assert!(mu.size() >= 1 && mu.size() <= self.n && mu.arity() == self.k);
        let coeff = self.v_series.pair_complete(mu);
        let poly = coeff
            .certify_polynomial()
            .map_err(|_| KernelError::NonPolynomial {
                label: format!("A_{mu}"),
                denominator: coeff.denom().render(),
            })?;
        if !poly.is_integer() {
            return Err(KernelError::BadCoefficients {
                label: format!("A_{mu}"),
                poly: poly.render(),
            });
        }
        Ok(poly)
    }

    /// `A_mu` through the Kostka transform of the `V` family:
    /// `A_lam = sum_{mu >= lam} K'_{lam mu} V_mu` with componentwise Kostka
    /// numbers.
    pub fn a_poly_via_kostka(&self, lam: &MultiPartition) -> Result<TPoly, KernelError> {
        let n = lam.size();
        let table = crate::combinatorics::kostka_table(n);
        let mut acc = TPoly::zero();
        for mu in multipartitions(n, self.k) {
            let mut coeff = 1i64;
            for (l, m) in lam.components().iter().zip(mu.components()) {
                coeff *= table.value(m, l);
                if coeff == 0 {
                    break;
                }
            }
            if coeff == 0 {
                continue;
            }
            let v = self.v_poly(&mu)?;
            acc = &acc + &v.scale(&rat(coeff));
        }
        Ok(acc)
    }

    /// `V_mu` recovered from the `A` family through the inverse Kostka
    /// transform.
    pub fn v_poly_via_kostka(&self, mu: &MultiPartition) -> Result<TPoly, KernelError> {
        let n = mu.size();
        let table = crate::combinatorics::kostka_table(n);
        let mut acc = TPoly::zero();
        for lam in multipartitions(n, self.k) {
            let mut coeff = 1i64;
            for (m, l) in mu.components().iter().zip(lam.components()) {
                coeff *= table.inv_value(l, m);
                if coeff == 0 {
                    break;
                }
            }
            if coeff == 0 {
                continue;
            }
            let a = self.a_poly(&lam)?;
            acc = &acc + &a.scale(&rat(coeff));
        }
        Ok(acc)
    }

    /// One split-type term of the decomposition of `U_mu`:
    /// `W_mu^{split}(t) = sum over the fiber of A_omega V_omega(t)
    /// c_omega^mu`, certified to lie in `Z_{>=0}[t]`.
    pub fn w_poly(&self, split: &SplitType, mu: &MultiPartition) -> Result<TPoly, KernelError> {
        if split.size() != mu.size() {
            return Err(KernelError::SizeMismatch(
                format!("{split}"),
                mu.to_string(),
            ));
        }
        let mut acc = TRat::zero();
        for (lambdas, omega) in split.fiber() {
            let c = c_omega_mu(&omega, mu);
            if c == 0 {
                continue;
            }
            let (_, a_coeff) = type_coeffs(&omega).expect("nonzero fiber element");
            // V_omega = prod over the support of psi_d(V_alpha)^mult.
            let mut v_omega = TPoly::one();
            for ((d, alpha), mult) in omega.entries() {
                let base = self.v_poly(alpha)?.adams(*d);
                for _ in 0..mult {
                    v_omega = &v_omega * &base;
                }
                if v_omega.is_zero() {
                    break;
                }
            }
            if v_omega.is_zero() {
                continue;
            }
            let term = TRat::from_poly(v_omega).scale(&(a_coeff * rat(c)));
            acc = &acc + &term;
            let _ = lambdas;
        }
        let poly = acc
            .certify_polynomial()
            .map_err(|_| KernelError::NonPolynomial {
                label: format!("W_{mu}^{split}"),
                denominator: acc.denom().render(),
            })?;
        if !poly.is_integer() || !poly.has_nonnegative_coeffs() {
            return Err(KernelError::BadCoefficients {
                label: format!("W_{mu}^{split}"),
                poly: poly.render(),
            });
        }
        Ok(poly)
    }

    /// Checks `U_mu = sum over split types of W_mu^{split}` and that split
    /// types containing a non-root member contribute zero.
    pub fn decomposition_check(
        &self,
        mu: &MultiPartition,
    ) -> Result<DecompositionReport, KernelError> {
        let n = mu.size();
        let u = self.u_poly(mu)?;
        let mut terms = Vec::new();
        let mut sum = TPoly::zero();
        let mut nonroot_nonzero = Vec::new();
        for split in split_types(n, self.k) {
            let w = self.w_poly(&split, mu)?;
            let all_roots = split.factors().iter().all(|(alpha, _)| {
                let (quiver, v) = quiver::build_quiver(alpha, self.g);
                quiver.classify_root(&v).is_root()
            });
            if !all_roots && !w.is_zero() {
                nonroot_nonzero.push(split.clone());
            }
            sum = &sum + &w;
            terms.push((split, w));
        }
        Ok(DecompositionReport {
            mu: mu.clone(),
            u: u.clone(),
            matches: sum == u,
            sum,
            terms,
            nonroot_nonzero,
        })
    }
}

/// Outcome of [`KernelContext::decomposition_check`].
#[derive(Debug)]
pub struct DecompositionReport {
    pub mu: MultiPartition,
    pub u: TPoly,
    pub sum: TPoly,
    pub terms: Vec<(SplitType, TPoly)>,
    /// Split types with a non-root member whose term failed to vanish;
    /// must be empty.
    pub nonroot_nonzero: Vec<SplitType>,
    pub matches: bool,
}

impl DecompositionReport {
    pub fn passed(&self) -> bool {
        self.matches && self.nonroot_nonzero.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Partition;

    fn mp(s: &str) -> MultiPartition {
        s.parse().unwrap()
    }

    #[test]
    fn grade_one_values() {
        for (k, g) in [(1usize, 0u32), (2, 0), (3, 0), (1, 1), (3, 2)] {
            let ctx = KernelContext::new(1, k, g);
            let mu = MultiPartition::diagonal(Partition::row(1), k);
            let expect = TPoly::monomial(g as usize, rat(1));
            assert_eq!(ctx.v_poly(&mu).unwrap(), expect);
            assert_eq!(ctx.u_poly(&mu).unwrap(), expect);
            assert_eq!(ctx.a_poly(&mu).unwrap(), expect);
        }
    }

    #[test]
    fn table_values_n3_k3() {
        let ctx = KernelContext::new(3, 3, 0);
        assert_eq!(
            ctx.v_poly(&mp("1^3|1^3|1^3")).unwrap(),
            TPoly::from_int_coeffs(&[0, 1])
        );
        assert_eq!(ctx.v_poly(&mp("2,1|1^3|1^3")).unwrap(), TPoly::one());
        assert_eq!(
            ctx.u_poly(&mp("1^3|1^3|1^3")).unwrap(),
            TPoly::from_int_coeffs(&[1, 1])
        );
        assert_eq!(
            ctx.u_poly(&mp("2,1|2,1|2,1")).unwrap(),
            TPoly::from_int_coeffs(&[2])
        );
        assert_eq!(ctx.u_poly(&mp("3|3|2,1")).unwrap(), TPoly::zero());
        assert_eq!(
            ctx.a_poly(&mp("1^3|1^3|1^3")).unwrap(),
            TPoly::from_int_coeffs(&[6, 1])
        );
    }

    #[test]
    fn v_vanishes_off_roots() {
        let ctx = KernelContext::new(2, 3, 0);
        assert_eq!(ctx.v_poly(&mp("2|2|2")).unwrap(), TPoly::zero());
        assert_eq!(ctx.v_poly(&mp("1^2|1^2|1^2")).unwrap(), TPoly::one());
    }

    #[test]
    fn steinberg_small() {
        let ctx = KernelContext::new(2, 3, 0);
        assert_eq!(ctx.u_poly(&mp("1^2|1^2|1^2")).unwrap(), TPoly::one());
    }

    #[test]
    fn w_poly_delta_cases() {
        let ctx = KernelContext::new(3, 3, 0);
        // Split singleton at a real root: contributes exactly at mu = alpha.
        let alpha = mp("2,1|1^3|1^3");
        let split = SplitType::singleton(alpha.clone());
        assert_eq!(ctx.w_poly(&split, &alpha).unwrap(), TPoly::one());
        assert_eq!(
            ctx.w_poly(&split, &mp("1^3|1^3|1^3")).unwrap(),
            TPoly::zero()
        );
        // All-ones cubed: the trivial-multiplicity column.
        let split = SplitType::new([(mp("1|1|1"), 3)]);
        assert_eq!(
            ctx.w_poly(&split, &mp("2,1|2,1|2,1")).unwrap(),
            TPoly::one()
        );
        assert!(ctx.w_poly(&split, &mp("1^2|1^2|1^2")).is_err());
    }

    #[test]
    fn decomposition_matches_u() {
        let ctx = KernelContext::new(2, 3, 0);
        for mu in multipartitions(2, 3) {
            let report = ctx.decomposition_check(&mu).unwrap();
            assert!(report.passed(), "decomposition failed at {mu}");
        }
        let ctx = KernelContext::new(1, 3, 0);
        let report = ctx.decomposition_check(&mp("1|1|1")).unwrap();
        assert!(report.passed());
        assert_eq!(report.terms.len(), 1);
    }

    #[test]
    fn decomposition_terms_at_affine_point() {
        // U = t + 1 splits as t from the imaginary singleton, 1 from the
        // mixed real type, zero from everything else.
        let ctx = KernelContext::new(3, 3, 0);
        let mu = mp("1^3|1^3|1^3");
        let report = ctx.decomposition_check(&mu).unwrap();
        assert!(report.passed());
        let term = |split: &SplitType| {
            report
                .terms
                .iter()
                .find(|(s, _)| s == split)
                .map(|(_, w)| w.clone())
                .expect("term present")
        };
        assert_eq!(
            term(&SplitType::singleton(mu.clone())),
            TPoly::from_int_coeffs(&[0, 1])
        );
        assert_eq!(
            term(&SplitType::singleton(mp("2,1|1^3|1^3"))),
            TPoly::zero()
        );
        let mixed = SplitType::new([(mp("1^2|1^2|1^2"), 1), (mp("1|1|1"), 1)]);
        assert_eq!(term(&mixed), TPoly::one());
        let cube = SplitType::new([(mp("1|1|1"), 3)]);
        assert_eq!(term(&cube), TPoly::zero());
    }

    #[test]
    fn kostka_transform_round_trip() {
        let ctx = KernelContext::new(3, 3, 0);
        for mu in multipartitions(3, 3) {
            let direct = ctx.a_poly(&mu).unwrap();
            let via = ctx.a_poly_via_kostka(&mu).unwrap();
            assert_eq!(direct, via, "A transform mismatch at {mu}");
            let v_direct = ctx.v_poly(&mu).unwrap();
            let v_via = ctx.v_poly_via_kostka(&mu).unwrap();
            assert_eq!(v_direct, v_via, "V transform mismatch at {mu}");
        }
    }

    #[test]
    fn permutation_symmetry() {
        let ctx = KernelContext::new(3, 3, 0);
        let a = mp("2,1|1^3|3");
        let b = mp("3|2,1|1^3");
        assert_eq!(ctx.u_poly(&a).unwrap(), ctx.u_poly(&b).unwrap());
        assert_eq!(ctx.v_poly(&a).unwrap(), ctx.v_poly(&b).unwrap());
    }

    #[test]
    fn exp_of_extracted_v_reproduces_u() {
        let ctx = KernelContext::new(3, 3, 1);
        let mut rebuilt = SymFunc::zero(3, 3);
        for n in 1..=3u32 {
            for mu in multipartitions(n, 3) {
                let v = ctx.v_poly(&mu).unwrap();
                if v.is_zero() {
                    continue;
                }
                let term =
                    SymFunc::schur(&mu, 3).scale_coeffs(|c| c.mul(&TRat::from_poly(v.clone())));
                rebuilt = rebuilt.add(&term);
            }
        }
        assert_eq!(&rebuilt, ctx.v_series());
        let exp = rebuilt.plethystic_exp();
        assert_eq!(&exp, ctx.u_series());
    }
}
