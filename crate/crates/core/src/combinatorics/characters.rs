//! Symmetric-group character values and Kostka data, cached per degree.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::{partitions, CombinatoricsError, Partition};

/// Character table of the symmetric group on `n` letters, with rows and
/// columns indexed by `partitions(n)` (decreasing order, `(n)` first).
pub struct CharTable {
    pub n: u32,
    pub parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `chi[lambda][rho]` is the character value of the `lambda`-irreducible
    /// at the class of cycle type `rho`.
    pub chi: Vec<Vec<i64>>,
}

impl CharTable {
    fn build(n: u32) -> Self {
        let parts = partitions(n);
        let index: HashMap<Partition, usize> = parts
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let mut memo: HashMap<(Vec<u32>, Vec<u32>), i64> = HashMap::new();
        let chi = parts
            .iter()
            .map(|lam| {
                parts
                    .iter()
                    .map(|rho| mn_value(lam.parts(), rho.parts(), &mut memo))
                    .collect()
            })
            .collect();
        CharTable {
            n,
            parts,
            index,
            chi,
        }
    }

    pub fn index_of(&self, lam: &Partition) -> usize {
        self.index[lam]
    }

    pub fn value(&self, lam: &Partition, rho: &Partition) -> i64 {
        self.chi[self.index[lam]][self.index[rho]]
    }
}

/// Character value by the Murnaghan-Nakayama rule over beta-numbers: strip a
/// border strip of length `rho[0]`, recurse on the rest of the cycle type.
fn mn_value(lam: &[u32], rho: &[u32], memo: &mut HashMap<(Vec<u32>, Vec<u32>), i64>) -> i64 {
    if rho.is_empty() {
        return 1; // lam is empty too whenever sizes agree
    }
    let key = (lam.to_vec(), rho.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let r = rho[0];
    let rest = &rho[1..];
    let len = lam.len();
    // Beta-numbers: strictly decreasing, beta_j = lam_j + (len - 1 - j).
    let betas: Vec<i64> = lam
        .iter()
        .enumerate()
        .map(|(j, &p)| p as i64 + (len - 1 - j) as i64)
        .collect();
    let mut total = 0i64;
    for (j, &beta) in betas.iter().enumerate() {
        let target = beta - r as i64;
        if target < 0 || betas.contains(&target) {
            continue;
        }
        // Height = number of beta-numbers strictly between target and beta.
        let height = betas.iter().filter(|&&b| target < b && b < beta).count();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        // Rebuild the partition from the modified beta-set.
        let mut new_betas: Vec<i64> = betas.clone();
        new_betas[j] = target;
        new_betas.sort_unstable_by(|a, b| b.cmp(a));
        let m = new_betas.len();
        let new_lam: Vec<u32> = new_betas
            .iter()
            .enumerate()
            .map(|(i, &b)| (b - (m - 1 - i) as i64) as u32)
            .filter(|&p| p > 0)
            .collect();
        total += sign * mn_value(&new_lam, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// Kostka matrix for degree `n` with its inverse, both integer and
/// unitriangular in the decreasing partition order.
pub struct KostkaTable {
    pub n: u32,
    pub parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `k[lambda][mu]` counts semistandard tableaux of shape `lambda` and
    /// content `mu`; nonzero only for `mu` dominated by `lambda`.
    pub k: Vec<Vec<i64>>,
    /// Inverse matrix: `sum_m k[l][m] * k_inv[m][r] = delta_{l r}`.
    pub k_inv: Vec<Vec<i64>>,
}

impl KostkaTable {
    fn build(n: u32) -> Self {
        let parts = partitions(n);
        let index: HashMap<Partition, usize> = parts
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let mut memo: HashMap<(Vec<u32>, Vec<u32>), i64> = HashMap::new();
        let k: Vec<Vec<i64>> = parts
            .iter()
            .map(|lam| {
                parts
                    .iter()
                    .map(|mu| kostka_rec(lam.parts(), mu.parts(), &mut memo))
                    .collect()
            })
            .collect();
        // K is upper unitriangular in this order (row lam, column mu nonzero
        // only when mu <= lam in dominance, hence mu later in the list).
        let dim = parts.len();
        let mut k_inv = vec![vec![0i64; dim]; dim];
        for i in 0..dim {
            k_inv[i][i] = 1;
        }
        for i in (0..dim).rev() {
            for j in (i + 1)..dim {
                let mut acc = 0i64;
                for m in (i + 1)..=j {
                    acc += k[i][m] * k_inv[m][j];
                }
                k_inv[i][j] = -acc;
            }
        }
        KostkaTable {
            n,
            parts,
            index,
            k,
            k_inv,
        }
    }

    pub fn index_of(&self, lam: &Partition) -> usize {
        self.index[lam]
    }

    pub fn value(&self, lam: &Partition, mu: &Partition) -> i64 {
        self.k[self.index[lam]][self.index[mu]]
    }

    pub fn inv_value(&self, lam: &Partition, mu: &Partition) -> i64 {
        self.k_inv[self.index[lam]][self.index[mu]]
    }
}

/// Number of semistandard tableaux of shape `lam` and content `mu`, by
/// peeling a horizontal strip for the last content entry.
fn kostka_rec(lam: &[u32], mu: &[u32], memo: &mut HashMap<(Vec<u32>, Vec<u32>), i64>) -> i64 {
    let total_lam: u32 = lam.iter().sum();
    let total_mu: u32 = mu.iter().sum();
    if total_lam != total_mu {
        return 0;
    }
    if mu.is_empty() {
        return 1;
    }
    let key = (lam.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let strip = *mu.last().unwrap();
    let rest = &mu[..mu.len() - 1];
    // Enumerate partitions nu with lam/nu a horizontal strip of size `strip`:
    // interlacing lam_{i+1} <= nu_i <= lam_i.
    let mut total = 0i64;
    let mut nu: Vec<u32> = lam.to_vec();
    fn walk(
        lam: &[u32],
        nu: &mut Vec<u32>,
        row: usize,
        removed: u32,
        strip: u32,
        rest: &[u32],
        total: &mut i64,
        memo: &mut HashMap<(Vec<u32>, Vec<u32>), i64>,
    ) {
        if removed > strip {
            return;
        }
        if row == lam.len() {
            if removed == strip {
                let trimmed: Vec<u32> = nu.iter().copied().filter(|&p| p > 0).collect();
                *total += kostka_rec(&trimmed, rest, memo);
            }
            return;
        }
        let lower = if row + 1 < lam.len() { lam[row + 1] } else { 0 };
        for keep in lower..=lam[row] {
            nu[row] = keep;
            walk(
                lam,
                nu,
                row + 1,
                removed + (lam[row] - keep),
                strip,
                rest,
                total,
                memo,
            );
        }
        nu[row] = lam[row];
    }
    walk(lam, &mut nu, 0, 0, strip, rest, &mut total, memo);
    memo.insert(key, total);
    total
}

static CHAR_TABLES: OnceLock<Mutex<HashMap<u32, Arc<CharTable>>>> = OnceLock::new();
static KOSTKA_TABLES: OnceLock<Mutex<HashMap<u32, Arc<KostkaTable>>>> = OnceLock::new();

/// The character table of the symmetric group on `n` letters, built on first
/// use and shared afterwards.
pub fn char_table(n: u32) -> Arc<CharTable> {
    let tables = CHAR_TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = tables.lock().unwrap();
    guard
        .entry(n)
        .or_insert_with(|| Arc::new(CharTable::build(n)))
        .clone()
}

/// The Kostka matrix and its inverse for degree `n`.
pub fn kostka_table(n: u32) -> Arc<KostkaTable> {
    let tables = KOSTKA_TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = tables.lock().unwrap();
    guard
        .entry(n)
        .or_insert_with(|| Arc::new(KostkaTable::build(n)))
        .clone()
}

/// Irreducible character value `chi^lam_rho` of the symmetric group.
pub fn sn_character(lam: &Partition, rho: &Partition) -> Result<i64, CombinatoricsError> {
    if lam.size() != rho.size() {
        return Err(CombinatoricsError::SizeMismatch(
            lam.to_string(),
            rho.to_string(),
        ));
    }
    Ok(char_table(lam.size()).value(lam, rho))
}

/// Kostka number `K_{lam mu}`.
pub fn kostka_number(lam: &Partition, mu: &Partition) -> Result<i64, CombinatoricsError> {
    if lam.size() != mu.size() {
        return Err(CombinatoricsError::SizeMismatch(
            lam.to_string(),
            mu.to_string(),
        ));
    }
    Ok(kostka_table(lam.size()).value(lam, mu))
}

/// Coefficients of `s_mu` in the complete basis: the map `lam -> K*_{mu lam}`
/// with `s_mu = sum_lam K*_{mu lam} h_lam`, supported on `lam` dominating
/// `mu`.
pub fn inverse_kostka_row(mu: &Partition) -> Vec<(Partition, i64)> {
    let table = kostka_table(mu.size());
    let col = table.index_of(mu);
    table
        .parts
        .iter()
        .enumerate()
        .filter_map(|(row, lam)| {
            let c = table.k_inv[row][col];
            (c != 0).then(|| (lam.clone(), c))
        })
        .collect()
}
