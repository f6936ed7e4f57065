//! Kostka-Foulkes polynomials via the charge statistic, modified
//! Hall-Littlewood functions, unipotent centralizer orders and the Cauchy
//! kernel `Omega`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::One;

use crate::combinatorics::{char_table, partitions, CombinatoricsError, MultiPartition, Partition};
use crate::exactalg::{rat, ratio, Rat, TPoly, TRat};
use crate::symfunc::{QSeries, SymFunc};

/// Charge of a word whose content is a partition: standard subwords are
/// extracted by cyclic scans and their charges summed.
pub fn charge(word: &[u32]) -> u32 {
    let mut remaining: Vec<(usize, u32)> = word.iter().copied().enumerate().collect();
    let mut total = 0u32;
    while !remaining.is_empty() {
        // Extract one standard subword: the rightmost 1, then for each next
        // value the first occurrence to the right of the previous choice,
        // scanning cyclically.
        let mut selected: Vec<usize> = Vec::new(); // indices into `remaining`
        let mut positions: Vec<usize> = Vec::new(); // positions in the word
        let mut value = 1u32;
        let mut cursor = usize::MAX;
        loop {
            let candidates: Vec<usize> = (0..remaining.len())
                .filter(|i| !selected.contains(i) && remaining[*i].1 == value)
                .collect();
            if candidates.is_empty() {
                break;
            }
            let pick = if value == 1 {
                *candidates.iter().max_by_key(|&&i| remaining[i].0).unwrap()
            } else {
                candidates
                    .iter()
                    .copied()
                    .filter(|&i| remaining[i].0 > cursor)
                    .min_by_key(|&i| remaining[i].0)
                    .or_else(|| candidates.iter().copied().min_by_key(|&i| remaining[i].0))
                    .unwrap()
            };
            cursor = remaining[pick].0;
            selected.push(pick);
            positions.push(cursor);
            value += 1;
        }
        // Charge of the standard subword: the index of 1 is 0; moving to the
        // next value adds 1 exactly when it sits to the left.
        let mut index = 0u32;
        for v in 1..positions.len() {
            if positions[v] < positions[v - 1] {
                index += 1;
            }
            total += index;
        }
        let mut keep = Vec::with_capacity(remaining.len() - selected.len());
        for (i, entry) in remaining.into_iter().enumerate() {
            if !selected.contains(&i) {
                keep.push(entry);
            }
        }
        remaining = keep;
    }
    total
}

/// All semistandard tableaux of the given shape and content, as row fillings.
fn semistandard_tableaux(shape: &Partition, content: &Partition) -> Vec<Vec<Vec<u32>>> {
    let rows: Vec<usize> = shape.parts().iter().map(|&p| p as usize).collect();
    if rows.is_empty() {
        return vec![vec![]];
    }
    let mut counts: Vec<u32> = content.parts().to_vec();
    let mut tableau: Vec<Vec<u32>> = rows.iter().map(|&r| vec![0; r]).collect();
    let mut out = Vec::new();
    fn fill(
        rows: &[usize],
        tableau: &mut Vec<Vec<u32>>,
        counts: &mut Vec<u32>,
        row: usize,
        col: usize,
        out: &mut Vec<Vec<Vec<u32>>>,
    ) {
        if row == rows.len() {
            out.push(tableau.clone());
            return;
        }
        let (nr, nc) = if col + 1 < rows[row] {
            (row, col + 1)
        } else {
            (row + 1, 0)
        };
        for v in 1..=counts.len() as u32 {
            if counts[v as usize - 1] == 0 {
                continue;
            }
            if col > 0 && tableau[row][col - 1] > v {
                continue;
            }
            if row > 0 && tableau[row - 1][col] >= v {
                continue;
            }
            tableau[row][col] = v;
            counts[v as usize - 1] -= 1;
            fill(rows, tableau, counts, nr, nc, out);
            counts[v as usize - 1] += 1;
            tableau[row][col] = 0;
        }
    }
    fill(&rows, &mut tableau, &mut counts, 0, 0, &mut out);
    out
}

/// Reading word: rows from the top, each read right to left.
fn reading_word(tableau: &[Vec<u32>]) -> Vec<u32> {
    let mut word = Vec::new();
    for row in tableau {
        word.extend(row.iter().rev().copied());
    }
    word
}

/// Kostka-Foulkes polynomial `K_{nu lambda}(t) = sum t^{charge}` over
/// semistandard tableaux of shape `nu` and content `lambda`.
pub fn kostka_poly(nu: &Partition, lambda: &Partition) -> Result<TPoly, CombinatoricsError> {
    if nu.size() != lambda.size() {
        return Err(CombinatoricsError::SizeMismatch(
            nu.to_string(),
            lambda.to_string(),
        ));
    }
    Ok(hl_table(nu.size()).kostka(nu, lambda).clone())
}

/// Modified Kostka polynomial `t^{n(lambda)} K_{nu lambda}(1/t)`.
pub fn modified_kostka(nu: &Partition, lambda: &Partition) -> Result<TPoly, CombinatoricsError> {
    if nu.size() != lambda.size() {
        return Err(CombinatoricsError::SizeMismatch(
            nu.to_string(),
            lambda.to_string(),
        ));
    }
    Ok(hl_table(nu.size()).modified(nu, lambda).clone())
}

/// Kostka-Foulkes and modified Kostka polynomials for a fixed size, built
/// once and shared.
pub struct HLTable {
    pub n: u32,
    pub parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    kostka: Vec<Vec<TPoly>>,
    modified: Vec<Vec<TPoly>>,
}

impl HLTable {
    fn build(n: u32) -> Self {
        let parts = partitions(n);
        let index: HashMap<Partition, usize> = parts
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let mut kostka = vec![vec![TPoly::zero(); parts.len()]; parts.len()];
        let mut modified = vec![vec![TPoly::zero(); parts.len()]; parts.len()];
        for (li, lambda) in parts.iter().enumerate() {
            let n_stat = lambda.n_stat() as usize;
            for (ni, nu) in parts.iter().enumerate() {
                let mut coeffs = vec![rat(0); n_stat + 1];
                let mut any = false;
                for tableau in semistandard_tableaux(nu, lambda) {
                    let c = charge(&reading_word(&tableau)) as usize;
                    assert!(c <= n_stat, "charge exceeds n(lambda)");
                    coeffs[c] += rat(1);
                    any = true;
                }
                if any {
                    kostka[ni][li] = TPoly::new(coeffs.clone());
                    // Reversal within degree n(lambda) realises t -> 1/t.
                    coeffs.reverse();
                    modified[ni][li] = TPoly::new(coeffs);
                }
            }
        }
        HLTable {
            n,
            parts,
            index,
            kostka,
            modified,
        }
    }

    pub fn kostka(&self, nu: &Partition, lambda: &Partition) -> &TPoly {
        &self.kostka[self.index[nu]][self.index[lambda]]
    }

    pub fn modified(&self, nu: &Partition, lambda: &Partition) -> &TPoly {
        &self.modified[self.index[nu]][self.index[lambda]]
    }
}

static HL_TABLES: OnceLock<Mutex<HashMap<u32, Arc<HLTable>>>> = OnceLock::new();

pub fn hl_table(n: u32) -> Arc<HLTable> {
    let tables = HL_TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = tables.lock().unwrap();
    guard
        .entry(n)
        .or_insert_with(|| Arc::new(HLTable::build(n)))
        .clone()
}

/// Unipotent centralizer order `a_lambda(t)`: the order of the centralizer
/// of a unipotent element of Jordan type `lambda` in `GL_{|lambda|}`, as a
/// polynomial in the field size.
pub fn centralizer_order(lambda: &Partition) -> TPoly {
    // t^{<l,l>} prod_i phi_{m_i}(1/t) with phi_r(u) = prod_{j<=r} (1 - u^j),
    // cleared to t^{<l,l> - sum_i m_i(m_i+1)/2} prod_i prod_j (t^j - 1).
    let mut shift = lambda.norm() as i64;
    let mut poly = TPoly::one();
    for (_, mult) in lambda.multiplicities() {
        shift -= (mult as i64) * (mult as i64 + 1) / 2;
        for j in 1..=mult as usize {
            let mut factor = vec![rat(0); j + 1];
            factor[0] = rat(-1);
            factor[j] = rat(1);
            poly = &poly * &TPoly::new(factor);
        }
    }
    assert!(
        shift >= 0,
        "centralizer order exponent must be non-negative"
    );
    &poly * &TPoly::monomial(shift as usize, rat(1))
}

/// The weight `t^{g <lambda,lambda>} / a_lambda(t)` attached to `lambda` in
/// the Cauchy kernel.
pub fn h_weight(lambda: &Partition, g: u32) -> TRat {
    if lambda.is_empty() {
        return TRat::one();
    }
    let num = TPoly::monomial((g as u64 * lambda.norm()) as usize, rat(1));
    TRat::new(num, centralizer_order(lambda)).expect("nonzero centralizer order")
}

/// Same weight evaluated at a rational field size.
pub fn h_weight_eval(lambda: &Partition, g: u32, tval: &Rat) -> Rat {
    let a = centralizer_order(lambda).eval(tval);
    assert!(!num_traits::Zero::is_zero(&a), "evaluation hit a pole");
    let mut num = Rat::one();
    for _ in 0..(g as u64 * lambda.norm()) {
        num *= tval;
    }
    num / a
}

/// Power-sum coordinates of the modified Hall-Littlewood function: the
/// coefficient of `p_rho` is `sum_nu modified_kostka(nu, lambda) chi^nu_rho
/// / z_rho`.
fn htilde_power_coeffs(lambda: &Partition) -> Vec<(Partition, TRat)> {
    let n = lambda.size();
    let table = hl_table(n);
    let chars = char_table(n);
    let mut out = Vec::new();
    for rho in partitions(n) {
        let mut acc = TPoly::zero();
        for nu in partitions(n) {
            let chi = chars.value(&nu, &rho);
            if chi != 0 {
                acc = &acc + &table.modified(&nu, lambda).scale(&rat(chi));
            }
        }
        if !acc.is_zero() {
            let coeff = TRat::from_poly(acc).scale(&ratio(1, rho.z() as i64));
            out.push((rho, coeff));
        }
    }
    out
}

/// The modified Hall-Littlewood function `Htilde_lambda` as an arity-1
/// symmetric function in the power-sum basis.
pub fn htilde(lambda: &Partition, trunc: usize) -> SymFunc {
    let mut f = SymFunc::zero(1, trunc);
    let n = lambda.size() as usize;
    if n > trunc {
        return f;
    }
    if lambda.is_empty() {
        return SymFunc::one(1, trunc);
    }
    for (rho, coeff) in htilde_power_coeffs(lambda) {
        f.add_term(n, MultiPartition::new(vec![rho]), coeff);
    }
    f
}

/// Power-sum coordinates of `Htilde_lambda` with `t` evaluated at a point.
pub fn htilde_eval(lambda: &Partition, tval: &Rat) -> Vec<(Partition, Rat)> {
    htilde_power_coeffs(lambda)
        .into_iter()
        .map(|(rho, coeff)| {
            let v = coeff.eval(tval).expect("polynomial coefficients");
            (rho, v)
        })
        .collect()
}

/// The Cauchy kernel truncated at grade `n`: grade `m` collects
/// `sum_{lambda of m} h_weight(lambda) prod_i Htilde_lambda(x_i)`.
pub fn omega_series(n: u32, k: usize, g: u32) -> SymFunc {
    let trunc = n as usize;
    let mut omega = SymFunc::one(k, trunc);
    for m in 1..=n {
        for lambda in partitions(m) {
            let weight = h_weight(&lambda, g);
            let coeffs = htilde_power_coeffs(&lambda);
            // All k-tuples of power-sum keys, one from each variable set.
            let mut stack: Vec<(Vec<Partition>, TRat)> = vec![(Vec::new(), weight)];
            for _ in 0..k {
                let mut next = Vec::with_capacity(stack.len() * coeffs.len());
                for (components, acc) in &stack {
                    for (rho, c) in &coeffs {
                        let mut comps = components.clone();
                        comps.push(rho.clone());
                        next.push((comps, acc * c));
                    }
                }
                stack = next;
            }
            for (components, coeff) in stack {
                omega.add_term(m as usize, MultiPartition::new(components), coeff);
            }
        }
    }
    omega
}

/// The Cauchy kernel with `t` evaluated at a rational point.
pub fn omega_series_eval(n: u32, k: usize, g: u32, tval: &Rat) -> QSeries {
    let trunc = n as usize;
    let mut omega = QSeries::one(k, trunc);
    for m in 1..=n {
        for lambda in partitions(m) {
            let weight = h_weight_eval(&lambda, g, tval);
            let coeffs = htilde_eval(&lambda, tval);
            let mut stack: Vec<(Vec<Partition>, Rat)> = vec![(Vec::new(), weight)];
            for _ in 0..k {
                let mut next = Vec::with_capacity(stack.len() * coeffs.len());
                for (components, acc) in &stack {
                    for (rho, c) in &coeffs {
                        let mut comps = components.clone();
                        comps.push(rho.clone());
                        next.push((comps, acc * c));
                    }
                }
                stack = next;
            }
            for (components, coeff) in stack {
                omega.add_term(m as usize, MultiPartition::new(components), coeff);
            }
        }
    }
    omega
}
