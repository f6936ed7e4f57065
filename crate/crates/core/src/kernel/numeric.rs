//! Integer-evaluation path: the same pipeline with `t` specialized to an
//! integer before the plethystic layer, used as an independent cross-check
//! and for the Euler-product identity.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::{moebius, MultiPartition};
use crate::exactalg::{rat, Rat};
use crate::hall_littlewood::omega_series_eval;
use crate::quiver;
use crate::symfunc::{Coeff, QSeries};

use super::KernelContext;

fn int_pow(q: i64, e: u32) -> Rat {
    Rat::from_integer(BigInt::from(q).pow(e))
}

impl QSeries {
    /// `<self, s_mu>` with numeric coefficients.
    pub fn pair_schur_rat(&self, mu: &MultiPartition) -> Rat {
        let n = mu.size() as usize;
        if n > self.trunc() {
            return <Rat as Zero>::zero();
        }
        let table = crate::combinatorics::char_table(mu.size());
        let mut acc = <Rat as Zero>::zero();
        for (rho, c) in self.grade(n) {
            let mut num = 1i64;
            for (m, r) in mu.components().iter().zip(rho.components()) {
                num *= table.value(m, r);
                if num == 0 {
                    break;
                }
            }
            if num != 0 {
                acc += c * rat(num);
            }
        }
        acc
    }
}

/// The series `U` with `t` specialized to the integer `q`, built without the
/// symbolic rational-function layer. Adams operations on the scalar are
/// realized by re-evaluating the kernel at the powers `q^d`.
pub fn numeric_u_series(n: u32, k: usize, g: u32, q: i64) -> QSeries {
    assert!(q >= 2);
    let trunc = n as usize;
    // log Omega at every needed power q^e.
    let logs: Vec<QSeries> = (1..=n)
        .map(|e| omega_series_eval(n, k, g, &int_pow(q, e)).log())
        .collect();
    // V at q^e: (q^e - 1) sum_{d | m} moebius(d)/d psi_d(log Omega at q^{ed})
    // where psi_d only scales keys (the coefficient is already at q^{ed}).
    let v_at: Vec<QSeries> = (1..=n)
        .map(|e| {
            let mut acc = QSeries::zero(k, trunc);
            for d in 1..=(n / e) {
                let mu_d = moebius(d);
                if mu_d == 0 {
                    continue;
                }
                let idx = (e * d - 1) as usize;
                let term = logs[idx].adams_with(d, |c| c.scale_int(mu_d).div_int(d as i64));
                acc = acc.add(&term);
            }
            let scale = int_pow(q, e) - <Rat as One>::one();
            acc.scale_coeffs(|c| c * &scale)
        })
        .collect();
    // Psi(V) = sum_d psi_d(V)/d, then the formal exponential.
    let mut psi_v = QSeries::zero(k, trunc);
    for d in 1..=n {
        let term = v_at[(d - 1) as usize].adams_with(d, |c| c.div_int(d as i64));
        psi_v = psi_v.add(&term);
    }
    psi_v.exp()
}

/// `U_mu(q)` along the integer-evaluation path.
pub fn numeric_u_value(mu: &MultiPartition, g: u32, q: i64) -> Rat {
    let series = numeric_u_series(mu.size(), mu.arity(), g, q);
    series.pair_schur_rat(mu)
}

/// Degree bound for `U_mu` with `|mu| = n`: the maximum of `d/2` over split
/// types whose members are all roots, with the crude quadratic bound as a
/// safety margin.
pub fn u_degree_bound(n: u32, k: usize, g: u32) -> usize {
    let mut best: i64 = 0;
    for split in crate::combinatorics::split_types(n, k) {
        let all_roots = split.factors().iter().all(|(alpha, _)| {
            let (quiver, v) = quiver::build_quiver(alpha, g);
            quiver.classify_root(&v).is_root()
        });
        if all_roots {
            best = best.max(quiver::d_split_type(&split, g) / 2);
        }
    }
    let fallback = ((n as i64) * (n as i64) * (2 * g as i64 - 2 + k as i64) + 2) / 2;
    best.max(fallback).max(0) as usize
}

/// Verifies, with `t` specialized to `q`, that the unipotent series matches
/// the Euler product `prod_{d} psi_d(Omega at q^d)^{phi_d(q)}` grade by
/// grade up to the context bound.
pub fn product_identity_check(ctx: &KernelContext, q: i64) -> bool {
    assert!(q >= 2);
    let n = ctx.size_bound();
    let k = ctx.arity();
    let trunc = n as usize;
    // Left side: the symbolic U series evaluated at q.
    let mut lhs = QSeries::zero(k, trunc);
    for grade in 0..=trunc {
        for (key, c) in ctx.u_series().grade(grade) {
            let v = c.eval(&rat(q)).expect("U coefficients are polynomials");
            lhs.add_term(grade, key.clone(), v);
        }
    }
    // Right side: the Euler product, truncated.
    let mut rhs = QSeries::one(k, trunc);
    for d in 1..=n {
        let factor =
            omega_series_eval(n, k, ctx.genus(), &int_pow(q, d)).adams_with(d, |c| c.clone());
        let exponent = phi_orbit_count(d, q);
        rhs = rhs.mul(&factor.pow(exponent));
    }
    lhs == rhs
}

/// Number of Frobenius orbits of size `d` on the nonzero elements of the
/// algebraic closure: `(1/d) sum_{e | d} moebius(e) (q^{d/e} - 1)`.
pub fn phi_orbit_count(d: u32, q: i64) -> u64 {
    let mut acc: i64 = 0;
    for e in crate::combinatorics::divisors(d) {
        acc += moebius(e) * (q.pow(d / e) - 1);
    }
    assert!(acc >= 0 && acc % d as i64 == 0);
    (acc / d as i64) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::interpolate;

    fn mp(s: &str) -> MultiPartition {
        s.parse().unwrap()
    }

    #[test]
    fn orbit_counts() {
        assert_eq!(phi_orbit_count(1, 2), 1);
        assert_eq!(phi_orbit_count(2, 2), 1);
        assert_eq!(phi_orbit_count(3, 2), 2);
        assert_eq!(phi_orbit_count(1, 3), 2);
        assert_eq!(phi_orbit_count(2, 3), 3);
    }

    #[test]
    fn numeric_matches_symbolic_extraction() {
        let ctx = KernelContext::new(3, 2, 0);
        for n in 1..=3u32 {
            for mu in crate::combinatorics::multipartitions(n, 2) {
                let poly = ctx.u_poly(&mu).unwrap();
                for q in [2i64, 3, 5] {
                    assert_eq!(
                        numeric_u_value(&mu, 0, q),
                        poly.eval_int(q),
                        "mu={mu} q={q}"
                    );
                }
            }
        }
    }

    #[test]
    fn product_identity_small() {
        for (n, k, g) in [
            (1u32, 3usize, 0u32),
            (2, 1, 0),
            (2, 3, 0),
            (3, 3, 0),
            (2, 2, 1),
        ] {
            let ctx = KernelContext::new(n, k, g);
            for q in [2i64, 3] {
                assert!(
                    product_identity_check(&ctx, q),
                    "failed n={n} k={k} g={g} q={q}"
                );
            }
        }
    }

    #[test]
    fn interpolation_cross_check() {
        let g = 0;
        for (n, k) in [(2u32, 3usize), (3, 3)] {
            let ctx = KernelContext::new(n, k, g);
            let bound = u_degree_bound(n, k, g);
            let points_per_mu: Vec<(i64, QSeries)> = (2..=(2 + bound as i64 + 1))
                .map(|q| (q, numeric_u_series(n, k, g, q)))
                .collect();
            for mu in crate::combinatorics::multipartitions(n, k) {
                let points: Vec<(BigInt, Rat)> = points_per_mu
                    .iter()
                    .map(|(q, series)| (BigInt::from(*q), series.pair_schur_rat(&mu)))
                    .collect();
                let fitted = interpolate(&points, bound).unwrap();
                assert_eq!(fitted, ctx.u_poly(&mu).unwrap(), "mu={mu}");
            }
        }
    }

    #[test]
    fn degree_bound_is_generous() {
        let ctx = KernelContext::new(3, 3, 0);
        let bound = u_degree_bound(3, 3, 0);
        for mu in crate::combinatorics::multipartitions(3, 3) {
            let poly = ctx.u_poly(&mu).unwrap();
            if let Some(d) = poly.degree() {
                assert!(d <= bound);
            }
        }
    }

    #[test]
    fn numeric_u_includes_genus_weight() {
        // Independently derivable point: k=2, g=1, mu=(1^2, 1^2) at q=2.
        assert_eq!(numeric_u_value(&mp("1^2|1^2"), 1, 2), rat(12));
    }
}
