//! The symmetric-group module side: Schur expansion coefficients of type
//! products, trace-based module decompositions, the support criterion for
//! nonvanishing, and the quadratic sequence inequality.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::combinatorics::{
    char_table, partitions, split_types, MultiPartition, MultiType, Partition, SplitType,
};
use crate::exactalg::{rat, ratio, Rat};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SnModulesError {
    #[error("size mismatch: |{0}| != |{1}|")]
    SizeMismatch(String, String),
    #[error("module multiplicity at {0} is not a non-negative integer: {1}")]
    BadMultiplicity(String, String),
    #[error("negative entries are not allowed")]
    NegativeEntries,
}

/// Power-sum expansion of a Schur function in one variable set:
/// `s_nu = sum_rho (chi^nu_rho / z_rho) p_rho`.
fn schur_power_coeffs(nu: &Partition) -> Vec<(Partition, Rat)> {
    let n = nu.size();
    let table = char_table(n);
    partitions(n)
        .into_iter()
        .filter_map(|rho| {
            let chi = table.value(nu, &rho);
            (chi != 0).then(|| {
                let z = rho.z() as i64;
                (rho, ratio(chi, z))
            })
        })
        .collect()
}

fn convolve(a: &BTreeMap<Partition, Rat>, b: &[(Partition, Rat)]) -> BTreeMap<Partition, Rat> {
    let mut out: BTreeMap<Partition, Rat> = BTreeMap::new();
    for (k1, c1) in a {
        for (k2, c2) in b {
            let key = k1.merge(k2);
            let v = c1 * c2;
            match out.entry(key) {
                std::collections::btree_map::Entry::Vacant(slot) => {
                    slot.insert(v);
                }
                std::collections::btree_map::Entry::Occupied(mut slot) => {
                    *slot.get_mut() += v;
                    if slot.get().is_zero() {
                        slot.remove();
                    }
                }
            }
        }
    }
    out
}

/// Coordinate coefficient `c_omega^mu` for an arity-1 type: the Schur
/// coefficient of `s_mu` in `prod psi_d(s_nu)^{omega(d, nu)}`.
fn c_coordinate(omega: &MultiType, mu: &Partition) -> i64 {
    // Expand the product in power sums, then pair with s_mu.
    let mut acc: BTreeMap<Partition, Rat> = BTreeMap::new();
    acc.insert(Partition::empty(), rat(1));
    for ((d, nu), mult) in omega.entries() {
        let base: Vec<(Partition, Rat)> = schur_power_coeffs(nu.component(0))
            .into_iter()
            .map(|(rho, c)| (rho.scale(*d), c))
            .collect();
        for _ in 0..mult {
            acc = convolve(&acc, &base);
        }
    }
    let table = char_table(mu.size());
    let mut total = Rat::zero();
    for (rho, c) in &acc {
        let chi = table.value(mu, rho);
        if chi != 0 {
            total += c * rat(chi);
        }
    }
    assert!(
        total.denom() == &num_bigint::BigInt::from(1),
        "Schur coefficient must be an integer"
    );
    let v: num_bigint::BigInt = total.to_integer();
    i64::try_from(&v).expect("coefficient fits in i64")
}

/// Schur expansion coefficient `c_omega^mu` of a multi-type: the product of
/// the coordinate coefficients. Zero when the sizes differ.
pub fn c_omega_mu(omega: &MultiType, mu: &MultiPartition) -> i64 {
    if omega.size() != mu.size() {
        return 0;
    }
    if omega.is_zero() {
        return i64::from(mu.is_zero());
    }
    let mut prod = 1i64;
    for i in 0..mu.arity() {
        prod *= c_coordinate(&omega.coordinate(i), mu.component(i));
        if prod == 0 {
            return 0;
        }
    }
    prod
}

/// Decomposition of the module attached to `(split type, mu)` into
/// irreducibles of the product of symmetric groups `prod S_{n_i}`:
/// multiplicities indexed by tuples of partitions of the `n_i`.
#[derive(Clone, Debug)]
pub struct ModuleDecomposition {
    pub split: SplitType,
    pub mu: MultiPartition,
    pub multiplicities: BTreeMap<Vec<Partition>, i64>,
}

impl ModuleDecomposition {
    /// Dimension: the trace at the identity class.
    pub fn dim(&self) -> i64 {
        self.multiplicities
            .iter()
            .map(|(taus, m)| {
                let hook: i64 = taus
                    .iter()
                    .map(|tau| char_table(tau.size()).value(tau, &Partition::column(tau.size())))
                    .product();
                m * hook
            })
            .sum()
    }

    /// Multiplicity of the trivial character tuple.
    pub fn trivial_multiplicity(&self) -> i64 {
        let key: Vec<Partition> = self
            .split
            .factors()
            .iter()
            .map(|(_, n_i)| Partition::row(*n_i))
            .collect();
        self.multiplicities.get(&key).copied().unwrap_or(0)
    }

    /// Reconstructs the character value at the class labelled by a tuple of
    /// partitions of the `n_i`.
    pub fn trace_at(&self, lambdas: &[Partition]) -> i64 {
        self.multiplicities
            .iter()
            .map(|(taus, m)| {
                let chi: i64 = taus
                    .iter()
                    .zip(lambdas)
                    .map(|(tau, lam)| char_table(tau.size()).value(tau, lam))
                    .product();
                m * chi
            })
            .sum()
    }
}

/// Recovers the decomposition by class-sum inner products: the character
/// value at the class `(lambda^1, ..., lambda^s)` is `c_omega^mu` for the
/// fiber element indexed by that tuple.
pub fn decompose_module(
    split: &SplitType,
    mu: &MultiPartition,
) -> Result<ModuleDecomposition, SnModulesError> {
    if split.size() != mu.size() {
        return Err(SnModulesError::SizeMismatch(
            format!("{split}"),
            mu.to_string(),
        ));
    }
    let fiber = split.fiber();
    let traces: Vec<(Vec<Partition>, Rat, i64)> = fiber
        .into_iter()
        .map(|(lambdas, omega)| {
            let weight: Rat = lambdas.iter().map(|lam| ratio(1, lam.z() as i64)).product();
            let trace = c_omega_mu(&omega, mu);
            (lambdas, weight, trace)
        })
        .collect();
    // Irreducible tuples over the same index set as the classes.
    let tau_tuples: Vec<Vec<Partition>> = {
        let factors = split.factors();
        let mut acc: Vec<Vec<Partition>> = vec![Vec::new()];
        for (_, n_i) in factors {
            let opts = partitions(n_i);
            let mut next = Vec::with_capacity(acc.len() * opts.len());
            for prefix in &acc {
                for tau in &opts {
                    let mut row = prefix.clone();
                    row.push(tau.clone());
                    next.push(row);
                }
            }
            acc = next;
        }
        acc
    };
    let mut multiplicities = BTreeMap::new();
    for taus in tau_tuples {
        let mut acc = Rat::zero();
        for (lambdas, weight, trace) in &traces {
            if *trace == 0 {
                continue;
            }
            let chi: i64 = taus
                .iter()
                .zip(lambdas)
                .map(|(tau, lam)| char_table(tau.size()).value(tau, lam))
                .product();
            if chi != 0 {
                acc += weight * rat(chi * trace);
            }
        }
        if acc.is_zero() {
            continue;
        }
        if acc.denom() != &num_bigint::BigInt::from(1) || acc.is_negative() {
            return Err(SnModulesError::BadMultiplicity(
                format!("{taus:?}"),
                acc.to_string(),
            ));
        }
        let m = i64::try_from(&acc.to_integer()).expect("multiplicity fits in i64");
        multiplicities.insert(taus, m);
    }
    Ok(ModuleDecomposition {
        split: split.clone(),
        mu: mu.clone(),
        multiplicities,
    })
}

/// The support of the decomposition: tuples with nonzero multiplicity.
pub fn r_set(
    split: &SplitType,
    mu: &MultiPartition,
) -> Result<Vec<Vec<Partition>>, SnModulesError> {
    Ok(decompose_module(split, mu)?
        .multiplicities
        .into_keys()
        .collect())
}

/// Nonvanishing criterion for `U_mu`: some split type `alpha_1^{n_1} ...`
/// admits a support tuple `(tau^i)` with `len(tau^i) <= V_{alpha_i}(1)` for
/// all `i`. The search may restrict to types whose members have nonzero `V`:
/// members with `V(1) = 0` can never satisfy the length bound.
pub fn nonzero_criterion(mu: &MultiPartition, v_at_one: &dyn Fn(&MultiPartition) -> i64) -> bool {
    let n = mu.size();
    for split in split_types(n, mu.arity()) {
        let bounds: Vec<i64> = split
            .factors()
            .iter()
            .map(|(alpha, _)| v_at_one(alpha))
            .collect();
        if bounds.iter().any(|&b| b <= 0) {
            continue;
        }
        let decomposition = decompose_module(&split, mu).expect("sizes match");
        for taus in decomposition.multiplicities.keys() {
            if taus
                .iter()
                .zip(&bounds)
                .all(|(tau, &b)| tau.length() as i64 <= b)
            {
                return true;
            }
        }
    }
    false
}

/// `sigma_c(x) = max(c) |x|^2 - |c| sum x_j^2` for non-negative sequences.
pub fn sigma(c: &[i64], x: &[i64]) -> Result<i64, SnModulesError> {
    if c.iter().chain(x).any(|&v| v < 0) {
        return Err(SnModulesError::NegativeEntries);
    }
    let cmax = c.iter().copied().max().unwrap_or(0);
    let csum: i64 = c.iter().sum();
    let xsum: i64 = x.iter().sum();
    let xsq: i64 = x.iter().map(|&v| v * v).sum();
    Ok(cmax * xsum * xsum - csum * xsq)
}

#[derive(Debug, Clone)]
pub struct HarcosReport {
    pub samples: u32,
    pub failures: Vec<String>,
}

impl HarcosReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Randomized verification of the superadditivity of `sigma`: for vectors
/// summing to `c`, `sigma_c(c) >= sum_i sigma_c(x^i)`, plus the partition
/// variant under dominance.
pub fn harcos_verify(samples: u32, seed: u64) -> HarcosReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for case in 0..samples {
        // Raw sequence form.
        let r = rng.gen_range(1..=4usize);
        let s = rng.gen_range(1..=4usize);
        let xs: Vec<Vec<i64>> = (0..s)
            .map(|_| (0..r).map(|_| rng.gen_range(0..=4i64)).collect())
            .collect();
        let mut c = vec![0i64; r];
        for x in &xs {
            for (ci, xi) in c.iter_mut().zip(x) {
                *ci += xi;
            }
        }
        let lhs = sigma(&c, &c).unwrap();
        let rhs: i64 = xs.iter().map(|x| sigma(&c, x).unwrap()).sum();
        if lhs < rhs {
            failures.push(format!(
                "case {case}: sigma_c(c)={lhs} < {rhs} for xs={xs:?}"
            ));
        }
        // Partition variant: mu dominated by the componentwise sum.
        let s = rng.gen_range(1..=3usize);
        let alphas: Vec<Partition> = (0..s)
            .map(|_| {
                let size = rng.gen_range(1..=4u32);
                let options = partitions(size);
                options[rng.gen_range(0..options.len())].clone()
            })
            .collect();
        let total = alphas.iter().fold(Partition::empty(), |acc, a| acc.add(a));
        let candidates: Vec<Partition> = partitions(total.size())
            .into_iter()
            .filter(|mu| mu.dominance_leq(&total).unwrap())
            .collect();
        let mu = candidates[rng.gen_range(0..candidates.len())].clone();
        let mu_seq: Vec<i64> = mu.parts().iter().map(|&p| p as i64).collect();
        let lhs = sigma(&mu_seq, &mu_seq).unwrap();
        let rhs: i64 = alphas
            .iter()
            .map(|a| {
                let a_seq: Vec<i64> = a.parts().iter().map(|&p| p as i64).collect();
                sigma(&mu_seq, &a_seq).unwrap()
            })
            .sum();
        if lhs < rhs {
            failures.push(format!(
                "case {case}: partition variant mu={mu} alphas={alphas:?}: {lhs} < {rhs}"
            ));
        }
    }
    HarcosReport { samples, failures }
}
