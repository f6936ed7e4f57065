//! Brute-force ground truth over small general linear groups: full class
//! enumeration, flag-variety fixed points, the unipotent character table,
//! and the tensor and twisted inner products the pipeline must reproduce.

pub mod fq;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::combinatorics::{inverse_kostka_row, partitions, MultiPartition, MultiType, Partition};
use crate::exactalg::{rat, Rat};
use crate::hall_littlewood::htilde_eval;
use crate::symfunc::QSeries;
use fq::{in_row_space, rank, rref, Mat, PrimeField};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("group order {order} exceeds the enumeration guard {guard}")]
    SizeGuard { order: u64, guard: u64 },
    #[error("unsupported configuration: {0}")]
    Unsupported(String),
    #[error("inner product is not a non-negative integer: {0}")]
    NonIntegral(String),
    #[error("twist tuple is not generic: product character has order {0}, need {1}")]
    NonGeneric(u32, u32),
}

const ORDER_GUARD: u64 = 1_000_000;

/// One conjugacy class: representative, cardinality, centralizer dimension
/// and the combinatorial class type.
#[derive(Clone, Debug)]
pub struct ClassData {
    pub rep: Mat,
    pub size: u64,
    pub centralizer_dim: u32,
    pub class_type: MultiType,
}

/// A fully enumerated general linear group over a prime field.
pub struct GlGroup {
    pub n: usize,
    pub q: u8,
    pub order: u64,
    pub classes: Vec<ClassData>,
}

fn gl_order(n: usize, q: u8) -> u64 {
    let qn = (q as u64).pow(n as u32);
    (0..n).map(|j| qn - (q as u64).pow(j as u32)).product()
}

impl GlGroup {
    pub fn build(n: usize, q: u8) -> Result<Self, OracleError> {
        let order = gl_order(n, q);
        if order > ORDER_GUARD {
            return Err(OracleError::SizeGuard {
                order,
                guard: ORDER_GUARD,
            });
        }
        let field = PrimeField::new(q);
        // All invertible matrices, indexed.
        let mut elements = Vec::with_capacity(order as usize);
        let total = (q as u64).pow((n * n) as u32);
        for code in 0..total {
            let mut e = Vec::with_capacity(n * n);
            let mut c = code;
            for _ in 0..n * n {
                e.push((c % q as u64) as u8);
                c /= q as u64;
            }
            let m = Mat { n, q, e };
            if m.det() != 0 {
                elements.push(m);
            }
        }
        assert_eq!(elements.len() as u64, order);
        let index: HashMap<Mat, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i as u32))
            .collect();
        // A small generating set: primitive-root diagonal, cyclic shift,
        // elementary transvection. Generation is verified by closure.
        let mut gens: Vec<Mat> = Vec::new();
        let alpha = field.primitive_root();
        if alpha != 1 {
            let mut d = Mat::identity(n, q);
            d.e[0] = alpha;
            gens.push(d);
        }
        if n >= 2 {
            let mut p = Mat::new(n, q, vec![0; n * n]);
            for i in 0..n {
                p.e[i * n + ((i + 1) % n)] = 1;
            }
            gens.push(p);
            let mut t = Mat::identity(n, q);
            t.e[1] = 1;
            gens.push(t);
        }
        if gens.is_empty() {
            gens.push(Mat::identity(n, q));
        }
        // Closure check: the generators must reach the whole group.
        {
            let mut seen = vec![false; elements.len()];
            let id = index[&Mat::identity(n, q)] as usize;
            seen[id] = true;
            let mut stack = vec![id];
            let mut count = 1u64;
            while let Some(i) = stack.pop() {
                for gen in &gens {
                    let next = elements[i].mul(gen);
                    let j = index[&next] as usize;
                    if !seen[j] {
                        seen[j] = true;
                        count += 1;
                        stack.push(j);
                    }
                }
            }
            assert_eq!(count, order, "generators fail to generate the group");
        }
        let gen_invs: Vec<Mat> = gens.iter().map(|g| g.inverse().unwrap()).collect();
        // Conjugacy classes by orbit search along generator conjugations.
        let mut class_of: Vec<u32> = vec![u32::MAX; elements.len()];
        let mut classes = Vec::new();
        for start in 0..elements.len() {
            if class_of[start] != u32::MAX {
                continue;
            }
            let class_id = classes.len() as u32;
            class_of[start] = class_id;
            let mut members = vec![start];
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for (g, ginv) in gens.iter().zip(&gen_invs) {
                    let conj = g.mul(&elements[i]).mul(ginv);
                    let j = index[&conj] as usize;
                    if class_of[j] == u32::MAX {
                        class_of[j] = class_id;
                        members.push(j);
                        stack.push(j);
                    }
                }
            }
            let rep = elements[start].clone();
            let centralizer_dim = commutant_dimension(&rep);
            let class_type = class_type(&rep);
            classes.push(ClassData {
                rep,
                size: members.len() as u64,
                centralizer_dim,
                class_type,
            });
        }
        assert_eq!(
            classes.iter().map(|c| c.size).sum::<u64>(),
            order,
            "class sizes must partition the group"
        );
        Ok(GlGroup {
            n,
            q,
            order,
            classes,
        })
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }
}

/// Dimension of the commutant of `x`: `n^2` minus the rank of
/// `Y -> XY - YX` on the matrix space.
fn commutant_dimension(x: &Mat) -> u32 {
    let n = x.n;
    let field = PrimeField::new(x.q);
    let mut rows = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            // Image of the matrix unit E_{ab}: X E_ab - E_ab X.
            let mut image = vec![0u8; n * n];
            for i in 0..n {
                // (X E_ab)_{i, b} = X_{i, a}
                image[i * n + b] = field.add(image[i * n + b], x.at(i, a));
            }
            for j in 0..n {
                // (E_ab X)_{a, j} = X_{b, j}
                image[a * n + j] = field.sub(image[a * n + j], x.at(b, j));
            }
            rows.push(image);
        }
    }
    (n * n - rank(&rows, x.q)) as u32
}

// Dense polynomials over the prime field, ascending coefficients.
fn poly_trim(mut p: Vec<u8>) -> Vec<u8> {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[u8], b: &[u8], field: PrimeField) -> Vec<u8> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u8; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = field.add(out[i + j], field.mul(x, y));
        }
    }
    poly_trim(out)
}

/// Division by a monic polynomial; returns (quotient, remainder).
fn poly_divrem(a: &[u8], b: &[u8], field: PrimeField) -> (Vec<u8>, Vec<u8>) {
    assert_eq!(*b.last().unwrap(), 1, "monic divisor expected");
    let mut rem = a.to_vec();
    if rem.len() < b.len() {
        return (Vec::new(), poly_trim(rem));
    }
    let mut quot = vec![0u8; rem.len() - b.len() + 1];
    for i in (0..quot.len()).rev() {
        let c = rem[i + b.len() - 1];
        if c == 0 {
            continue;
        }
        quot[i] = c;
        for (j, &bc) in b.iter().enumerate() {
            rem[i + j] = field.sub(rem[i + j], field.mul(c, bc));
        }
    }
    (poly_trim(quot), poly_trim(rem))
}

/// Characteristic polynomial of `x` over its prime field, monic of degree
/// n, computed by permutation expansion of `det(tI - x)`.
fn char_poly(x: &Mat) -> Vec<u8> {
    let n = x.n;
    let field = PrimeField::new(x.q);
    // Entries of tI - x as degree <= 1 polynomials.
    let entry = |i: usize, j: usize| -> Vec<u8> {
        let c = field.neg(x.at(i, j));
        if i == j {
            poly_trim(vec![c, 1])
        } else {
            poly_trim(vec![c])
        }
    };
    let mut result = vec![0u8];
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |perm, sign| {
        let mut term = vec![1u8];
        for (i, &j) in perm.iter().enumerate() {
            term = poly_mul(&term, &entry(i, j), field);
            if term.is_empty() {
                break;
            }
        }
        if term.is_empty() {
            return;
        }
        if sign < 0 {
            for c in term.iter_mut() {
                *c = field.neg(*c);
            }
        }
        if result.len() < term.len() {
            result.resize(term.len(), 0);
        }
        for (k, &c) in term.iter().enumerate() {
            result[k] = field.add(result[k], c);
        }
    });
    poly_trim(result)
}

fn permute(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize], i8)) {
    fn go(perm: &mut Vec<usize>, k: usize, sign: i8, visit: &mut impl FnMut(&[usize], i8)) {
        if k == perm.len() {
            visit(perm, sign);
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            let s = if i == k { sign } else { -sign };
            go(perm, k + 1, s, visit);
            perm.swap(k, i);
        }
    }
    go(perm, k, 1, visit);
}

/// Monic irreducibles of degree `d <= 3` over the prime field (no roots
/// suffices as a criterion up to degree 3).
fn irreducibles(d: usize, q: u8) -> Vec<Vec<u8>> {
    let field = PrimeField::new(q);
    let mut out = Vec::new();
    let count = (q as u64).pow(d as u32);
    for code in 0..count {
        let mut coeffs = Vec::with_capacity(d + 1);
        let mut c = code;
        for _ in 0..d {
            coeffs.push((c % q as u64) as u8);
            c /= q as u64;
        }
        coeffs.push(1);
        if d == 1 {
            out.push(coeffs);
            continue;
        }
        assert!(
            d <= 3,
            "root test only certifies irreducibility up to cubic"
        );
        let has_root = (0..q).any(|x| {
            let mut acc = 0u8;
            for &co in coeffs.iter().rev() {
                acc = field.add(field.mul(acc, x), co);
            }
            acc == 0
        });
        if !has_root {
            out.push(coeffs);
        }
    }
    out
}

/// Evaluates a polynomial at a matrix.
fn poly_at_matrix(p: &[u8], x: &Mat) -> Mat {
    let n = x.n;
    let mut acc = Mat::new(n, x.q, vec![0; n * n]);
    for &c in p.iter().rev() {
        acc = acc.mul(x);
        if c != 0 {
            acc = acc.add_scaled_identity(c);
        }
    }
    acc
}

/// The combinatorial type of a conjugacy class: each irreducible factor of
/// the characteristic polynomial of degree `d` contributes `(d, lambda)`
/// where `lambda` is the Jordan type of the corresponding primary part.
pub fn class_type(x: &Mat) -> MultiType {
    let field = PrimeField::new(x.q);
    let mut remaining = char_poly(x);
    let mut entries: Vec<((u32, MultiPartition), u32)> = Vec::new();
    for d in 1..=x.n {
        for irr in irreducibles(d, x.q) {
            // Multiplicity of this irreducible in the characteristic
            // polynomial.
            let mut mult = 0usize;
            loop {
                let (quot, rem) = poly_divrem(&remaining, &irr, field);
                if !rem.is_empty() {
                    break;
                }
                remaining = quot;
                mult += 1;
            }
            if mult == 0 {
                continue;
            }
            // Jordan type from kernel growth of powers of irr(x): the
            // conjugate partition entry at j is (r_j - r_{j-1}) / d.
            let fx = poly_at_matrix(&irr, x);
            let mut conj_parts = Vec::new();
            let mut prev_kernel = 0usize;
            let mut power = Mat::identity(x.n, x.q);
            for _ in 1..=mult {
                power = power.mul(&fx);
                let rows: Vec<Vec<u8>> = (0..x.n)
                    .map(|i| power.e[i * x.n..(i + 1) * x.n].to_vec())
                    .collect();
                let kernel = x.n - rank(&rows, x.q);
                let step = kernel - prev_kernel;
                if step == 0 {
                    break;
                }
                assert_eq!(step % d, 0, "kernel growth must be a multiple of d");
                conj_parts.push((step / d) as u32);
                prev_kernel = kernel;
            }
            let lambda = Partition::new(conj_parts).conjugate();
            assert_eq!(lambda.size() as usize, mult);
            entries.push(((d as u32, MultiPartition::new(vec![lambda])), 1));
        }
    }
    assert!(
        remaining.len() <= 1,
        "characteristic polynomial fully split"
    );
    let omega = MultiType::new(entries);
    assert_eq!(omega.size() as usize, x.n);
    omega
}

/// All subspaces of the row space of dimension `dim`, as canonical rref
/// bases.
fn subspaces(n: usize, q: u8, dim: usize) -> Vec<Vec<Vec<u8>>> {
    if dim == 0 {
        return vec![Vec::new()];
    }
    // All nonzero vectors.
    let mut vectors = Vec::new();
    let total = (q as u64).pow(n as u32);
    for code in 1..total {
        let mut v = Vec::with_capacity(n);
        let mut c = code;
        for _ in 0..n {
            v.push((c % q as u64) as u8);
            c /= q as u64;
        }
        vectors.push(v);
    }
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    let mut chosen: Vec<Vec<u8>> = Vec::new();
    fn go(
        vectors: &[Vec<u8>],
        start: usize,
        dim: usize,
        q: u8,
        chosen: &mut Vec<Vec<u8>>,
        seen: &mut std::collections::HashSet<Vec<Vec<u8>>>,
        out: &mut Vec<Vec<Vec<u8>>>,
    ) {
        if chosen.len() == dim {
            let basis = rref(chosen, q);
            if basis.len() == dim && seen.insert(basis.clone()) {
                out.push(basis);
            }
            return;
        }
        for i in start..vectors.len() {
            chosen.push(vectors[i].clone());
            go(vectors, i + 1, dim, q, chosen, seen, out);
            chosen.pop();
        }
    }
    go(&vectors, 0, dim, q, &mut chosen, &mut seen, &mut out);
    out
}

fn subspace_contains(space: &[Vec<u8>], sub: &[Vec<u8>], q: u8) -> bool {
    sub.iter().all(|v| in_row_space(v, space, q))
}

fn subspace_stable(space: &[Vec<u8>], x: &Mat) -> bool {
    space
        .iter()
        .all(|v| in_row_space(&x.act_on_row(v), space, x.q))
}

/// Number of flags of the given composition type fixed by `x`: chains of
/// subspaces with dimensions the partial sums of `composition`.
pub fn flag_fixed_points(x: &Mat, composition: &[u32]) -> u64 {
    let n = x.n;
    assert_eq!(composition.iter().sum::<u32>() as usize, n);
    let mut dims: Vec<usize> = Vec::new();
    let mut acc = 0usize;
    for &c in composition {
        acc += c as usize;
        if acc < n {
            dims.push(acc);
        }
    }
    if dims.is_empty() {
        return 1;
    }
    // Candidate stable subspaces per chain level.
    let levels: Vec<Vec<Vec<Vec<u8>>>> = dims
        .iter()
        .map(|&d| {
            subspaces(n, x.q, d)
                .into_iter()
                .filter(|s| subspace_stable(s, x))
                .collect()
        })
        .collect();
    fn count_chains(levels: &[Vec<Vec<Vec<u8>>>], prev: Option<&Vec<Vec<u8>>>, q: u8) -> u64 {
        let Some((first, rest)) = levels.split_first() else {
            return 1;
        };
        first
            .iter()
            .filter(|space| prev.is_none_or(|p| subspace_contains(space, p, q)))
            .map(|space| count_chains(rest, Some(space), q))
            .sum()
    }
    count_chains(&levels, None, x.q)
}

/// The unipotent character table: one integer class function per partition
/// of n, recovered from flag permutation characters by the inverse Kostka
/// transform.
pub struct UnipotentTable {
    pub group: Arc<GlGroup>,
    parts: Vec<Partition>,
    values: HashMap<Partition, Vec<i64>>,
}

impl UnipotentTable {
    fn build(group: Arc<GlGroup>) -> Self {
        let n = group.n as u32;
        let parts = partitions(n);
        // Permutation characters on partial flag varieties.
        let perm: HashMap<Partition, Vec<i64>> = parts
            .iter()
            .map(|lam| {
                let values: Vec<i64> = group
                    .classes
                    .iter()
                    .map(|c| flag_fixed_points(&c.rep, lam.parts()) as i64)
                    .collect();
                (lam.clone(), values)
            })
            .collect();
        let mut values = HashMap::new();
        for mu in &parts {
            let mut acc = vec![0i64; group.classes.len()];
            for (lam, coeff) in inverse_kostka_row(mu) {
                for (slot, v) in acc.iter_mut().zip(&perm[&lam]) {
                    *slot += coeff * v;
                }
            }
            values.insert(mu.clone(), acc);
        }
        UnipotentTable {
            group,
            parts,
            values,
        }
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.parts
    }

    /// Values of the unipotent character indexed by `mu`, one per class.
    pub fn character(&self, mu: &Partition) -> &[i64] {
        &self.values[mu]
    }

    /// Inner product of two class functions with the class-size weights.
    pub fn inner_product(&self, a: &[i64], b: &[i64]) -> Rat {
        let mut acc = Rat::zero();
        for ((class, &x), &y) in self.group.classes.iter().zip(a).zip(b) {
            acc += rat(class.size as i64) * rat(x) * rat(y);
        }
        acc / Rat::from_integer(BigInt::from(self.group.order))
    }
}

static GROUPS: OnceLock<Mutex<HashMap<(usize, u8), Arc<GlGroup>>>> = OnceLock::new();
static TABLES: OnceLock<Mutex<HashMap<(usize, u8), Arc<UnipotentTable>>>> = OnceLock::new();

/// The fully enumerated group, cached by `(n, q)`.
pub fn group(n: usize, q: u8) -> Result<Arc<GlGroup>, OracleError> {
    let cache = GROUPS.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    if let Some(hit) = guard.get(&(n, q)) {
        return Ok(hit.clone());
    }
    let built = Arc::new(GlGroup::build(n, q)?);
    guard.insert((n, q), built.clone());
    Ok(built)
}

/// The unipotent character table, cached by `(n, q)`.
pub fn unipotent_table(n: usize, q: u8) -> Result<Arc<UnipotentTable>, OracleError> {
    let cache = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    if let Some(hit) = guard.get(&(n, q)) {
        return Ok(hit.clone());
    }
    let table = Arc::new(UnipotentTable::build(group(n, q)?));
    guard.insert((n, q), table.clone());
    Ok(table)
}

fn qpow(q: u8, e: u64) -> BigInt {
    BigInt::from(q).pow(e as u32)
}

/// `<E x U_{mu^1} x ... x U_{mu^k}, 1>` over `GL_n(F_q)` by direct class
/// summation; must come out a non-negative integer.
pub fn tensor_inner_product(mu: &MultiPartition, g: u32, q: u8) -> Result<BigInt, OracleError> {
    let n = mu.size() as usize;
    let table = unipotent_table(n, q)?;
    let group = &table.group;
    let mut acc = BigRational::zero();
    for (idx, class) in group.classes.iter().enumerate() {
        let mut term = BigRational::from_integer(
            BigInt::from(class.size) * qpow(q, g as u64 * class.centralizer_dim as u64),
        );
        for comp in mu.components() {
            term *= BigRational::from_integer(BigInt::from(table.character(comp)[idx]));
        }
        acc += term;
    }
    acc /= BigRational::from_integer(BigInt::from(group.order));
    if !acc.denom().is_one() || acc.is_negative() {
        return Err(OracleError::NonIntegral(format!(
            "<E tensor U_{mu}, 1> = {acc}"
        )));
    }
    Ok(acc.to_integer())
}

/// Twisted inner product for the generic oracle: characters
/// `(alpha_i o det) . U_{mu^i}` with `alpha_i` the trivial or quadratic
/// character as requested by `twist_orders` (entries 1 or 2). The twist
/// tuple must be generic: the product character must have order `n`.
pub fn generic_inner_product(
    mu: &MultiPartition,
    twist_orders: &[u32],
    g: u32,
    q: u8,
) -> Result<BigInt, OracleError> {
    let n = mu.size();
    if n != 2 || !(q == 3 || q == 5) {
        return Err(OracleError::Unsupported(format!(
            "generic oracle covers n = 2 over F_3 and F_5, got n = {n}, q = {q}"
        )));
    }
    if twist_orders.len() != mu.arity() || twist_orders.iter().any(|&o| o != 1 && o != 2) {
        return Err(OracleError::Unsupported(
            "twist orders must be 1 (trivial) or 2 (quadratic)".to_string(),
        ));
    }
    let quadratic_count = twist_orders.iter().filter(|&&o| o == 2).count();
    let product_order = if quadratic_count % 2 == 1 { 2 } else { 1 };
    if product_order != n {
        return Err(OracleError::NonGeneric(product_order, n));
    }
    let field = PrimeField::new(q);
    let table = unipotent_table(n as usize, q)?;
    let group = &table.group;
    let mut acc = BigRational::zero();
    for (idx, class) in group.classes.iter().enumerate() {
        let det = class.rep.det();
        let eta = field.quadratic_character(det);
        let mut term = BigRational::from_integer(
            BigInt::from(class.size) * qpow(q, g as u64 * class.centralizer_dim as u64),
        );
        for (comp, order) in mu.components().iter().zip(twist_orders) {
            let twist = if *order == 2 { eta } else { 1 };
            term *= BigRational::from_integer(BigInt::from(twist * table.character(comp)[idx]));
        }
        acc += term;
    }
    acc /= BigRational::from_integer(BigInt::from(group.order));
    if !acc.denom().is_one() {
        return Err(OracleError::NonIntegral(format!(
            "twisted product at {mu} = {acc}"
        )));
    }
    Ok(acc.to_integer())
}

/// The modified Hall-Littlewood function of a class type, with `t`
/// evaluated at `q`: the product over the support of
/// `Htilde_lambda(x^d; q^d)`.
pub fn htilde_of_type(omega: &MultiType, q: u8) -> QSeries {
    let trunc = omega.size() as usize;
    let mut acc = QSeries::one(1, trunc);
    for ((d, lam), mult) in omega.entries() {
        let qd = Rat::from_integer(qpow(q, *d as u64));
        let mut factor = QSeries::zero(1, trunc);
        let grade = (lam.size() * d) as usize;
        for (rho, c) in htilde_eval(lam.component(0), &qd) {
            factor.add_term(grade, MultiPartition::new(vec![rho.scale(*d)]), c);
        }
        for _ in 0..mult {
            acc = acc.mul(&factor);
        }
    }
    acc
}

/// One exported oracle value, for regression pinning.
#[derive(Debug, Clone, Serialize)]
pub struct OracleRecord {
    pub n: u32,
    pub q: u8,
    pub g: u32,
    pub mu: String,
    pub value: String,
}

/// Tensor inner products for every multipartition of size `n` and arity `k`.
pub fn oracle_records(n: u32, k: usize, g: u32, q: u8) -> Result<Vec<OracleRecord>, OracleError> {
    crate::combinatorics::multipartitions(n, k)
        .into_iter()
        .map(|mu| {
            let value = tensor_inner_product(&mu, g, q)?;
            Ok(OracleRecord {
                n,
                q,
                g,
                mu: mu.to_string(),
                value: value.to_string(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::ratio;

    fn mp(s: &str) -> MultiPartition {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn gl2_f2_classes() {
        let group = group(2, 2).unwrap();
        assert_eq!(group.order, 6);
        let mut sizes: Vec<u64> = group.classes.iter().map(|c| c.size).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
        let mut dims: Vec<u32> = group.classes.iter().map(|c| c.centralizer_dim).collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![2, 2, 4]);
    }

    #[test]
    fn gl1_f3_is_abelian() {
        let group = group(1, 3).unwrap();
        assert_eq!(group.order, 2);
        assert_eq!(group.class_count(), 2);
        assert!(group.classes.iter().all(|c| c.size == 1));
    }

    #[test]
    fn size_guard_trips() {
        assert!(matches!(
            GlGroup::build(3, 5),
            Err(OracleError::SizeGuard { .. })
        ));
    }

    #[test]
    fn class_types_gl2_f2() {
        let group = group(2, 2).unwrap();
        for class in &group.classes {
            let expected = match class.size {
                1 => MultiType::new([((1, mp("1^2")), 1)]),
                3 => MultiType::new([((1, mp("2")), 1)]),
                2 => MultiType::new([((2, mp("1")), 1)]),
                _ => unreachable!(),
            };
            assert_eq!(class.class_type, expected, "class of size {}", class.size);
        }
    }

    #[test]
    fn flag_counts_gl2_f2() {
        let group = group(2, 2).unwrap();
        for class in &group.classes {
            let fixed = flag_fixed_points(&class.rep, &[1, 1]);
            let expected = match class.size {
                1 => 3, // identity fixes the whole projective line
                3 => 1, // transvection fixes one line
                2 => 0, // no rational eigenline
                _ => unreachable!(),
            };
            assert_eq!(fixed, expected);
            assert_eq!(flag_fixed_points(&class.rep, &[2]), 1);
        }
    }

    #[test]
    fn unipotent_table_gl2_f2() {
        let table = unipotent_table(2, 2).unwrap();
        let group = &table.group;
        // Order classes by size: 1 (identity), 2 (order 3), 3 (transvection).
        let by_size = |s: u64| {
            group
                .classes
                .iter()
                .position(|c| c.size == s)
                .expect("class present")
        };
        let steinberg = table.character(&p("1^2"));
        assert_eq!(steinberg[by_size(1)], 2);
        assert_eq!(steinberg[by_size(3)], 0);
        assert_eq!(steinberg[by_size(2)], -1);
        let trivial = table.character(&p("2"));
        assert!(trivial.iter().all(|&v| v == 1));
    }

    #[test]
    fn unipotent_characters_are_orthonormal() {
        for (n, q) in [(1usize, 2u8), (2, 2), (2, 3), (3, 2)] {
            let table = unipotent_table(n, q).unwrap();
            let id_idx = table
                .group
                .classes
                .iter()
                .position(|c| c.rep == Mat::identity(n, q))
                .unwrap();
            for a in table.partitions() {
                let ca = table.character(a).to_vec();
                assert!(ca[id_idx] > 0, "dimension positive for {a}");
                for b in table.partitions() {
                    let cb = table.character(b).to_vec();
                    let expect = if a == b { rat(1) } else { rat(0) };
                    assert_eq!(table.inner_product(&ca, &cb), expect, "{a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn flag_character_decomposition() {
        // Ind_B^G(1) = sum over partitions of dim(chi^mu) * U_mu.
        for (n, q) in [(2usize, 2u8), (2, 3), (3, 2)] {
            let table = unipotent_table(n, q).unwrap();
            let group = &table.group;
            let chars = crate::combinatorics::char_table(n as u32);
            for (idx, class) in group.classes.iter().enumerate() {
                let full_flags = flag_fixed_points(&class.rep, &vec![1u32; n]) as i64;
                let mut acc = 0i64;
                for mu in table.partitions() {
                    let dim = chars.value(mu, &Partition::column(n as u32));
                    acc += dim * table.character(mu)[idx];
                }
                assert_eq!(acc, full_flags);
            }
        }
    }

    #[test]
    fn steinberg_values() {
        for (n, q) in [(2usize, 2u8), (2, 3), (3, 2), (3, 3)] {
            let table = unipotent_table(n, q).unwrap();
            let group = &table.group;
            let st = table.character(&Partition::column(n as u32));
            let id_idx = group
                .classes
                .iter()
                .position(|c| c.rep == Mat::identity(n, q))
                .unwrap();
            let expect = (q as i64).pow((n * (n - 1) / 2) as u32);
            assert_eq!(st[id_idx], expect);
            // Regular unipotent kills the Steinberg character.
            let reg_idx = group
                .classes
                .iter()
                .position(|c| c.class_type == MultiType::new([((1, mp(&n.to_string())), 1)]))
                .unwrap();
            assert_eq!(st[reg_idx], 0);
        }
    }

    #[test]
    fn tensor_inner_products() {
        assert_eq!(
            tensor_inner_product(&mp("1^2|1^2|1^2"), 0, 2).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            tensor_inner_product(&mp("1^3|1^3|1^3"), 0, 2).unwrap(),
            BigInt::from(3)
        );
        assert_eq!(
            tensor_inner_product(&mp("1^2|1^2"), 1, 2).unwrap(),
            BigInt::from(12)
        );
    }

    #[test]
    fn generic_inner_products() {
        assert_eq!(
            generic_inner_product(&mp("1^2|1^2|1^2"), &[2, 1, 1], 0, 3).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            generic_inner_product(&mp("2|2|2"), &[2, 1, 1], 0, 3).unwrap(),
            BigInt::from(0)
        );
        assert!(matches!(
            generic_inner_product(&mp("1^2|1^2"), &[1, 1], 0, 3),
            Err(OracleError::NonGeneric(1, 2))
        ));
        assert!(generic_inner_product(&mp("1^2|1^2|1^2"), &[2, 1, 1], 0, 2).is_err());
    }

    #[test]
    fn centralizer_dim_matches_class_size() {
        // |class| * |centralizer| = |G|, and the centralizer order of a
        // unipotent class is the evaluation of the symbolic one.
        for (n, q) in [(2usize, 2u8), (2, 3), (3, 2)] {
            let group = group(n, q).unwrap();
            for class in &group.classes {
                let centralizer_order = group.order / class.size;
                // Unipotent classes: type (1, lambda) with a single entry.
                let entries: Vec<_> = class.class_type.entries().collect();
                if entries.len() == 1 {
                    let ((d, lam), mult) = entries[0];
                    if *d == 1 && mult == 1 && lam.size() as usize == n {
                        let a = crate::hall_littlewood::centralizer_order(lam.component(0));
                        assert_eq!(
                            a.eval_int(q as i64),
                            rat(centralizer_order as i64),
                            "unipotent type {lam}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn green_value_identity() {
        // U_mu(C) = <Htilde_{omega_C}(x; q), s_mu> for every class.
        for (n, q) in [(1usize, 2u8), (2, 2), (2, 3), (3, 2), (3, 3)] {
            let table = unipotent_table(n, q).unwrap();
            let group = &table.group;
            for (idx, class) in group.classes.iter().enumerate() {
                let hl = htilde_of_type(&class.class_type, q);
                for mu in table.partitions() {
                    let paired = hl.pair_schur_rat(&MultiPartition::new(vec![mu.clone()]));
                    assert_eq!(
                        paired,
                        rat(table.character(mu)[idx]),
                        "n={n} q={q} class type {:?} mu={mu}",
                        class.class_type
                    );
                }
            }
        }
    }

    #[test]
    fn weight_identity() {
        // H_{omega_C}(q) = E(C) / a_C(q) with E(C) = q^{g dim} and a_C the
        // centralizer order.
        for (n, q) in [(2usize, 2u8), (2, 3), (3, 2)] {
            let group = group(n, q).unwrap();
            for g in 0..=1u32 {
                for class in &group.classes {
                    let mut weight = Rat::one();
                    for ((d, lam), mult) in class.class_type.entries() {
                        let qd = Rat::from_integer(qpow(q, *d as u64));
                        let w = crate::hall_littlewood::h_weight_eval(lam.component(0), g, &qd);
                        for _ in 0..mult {
                            weight *= &w;
                        }
                    }
                    let e_c = Rat::from_integer(qpow(q, g as u64 * class.centralizer_dim as u64));
                    let a_c = Rat::from_integer(BigInt::from(group.order / class.size));
                    assert_eq!(weight, e_c / a_c);
                }
            }
        }
    }

    #[test]
    fn records_export() {
        let records = oracle_records(2, 2, 0, 2).unwrap();
        assert_eq!(records.len(), 4);
        let json = serde_json::to_string(&records[0]).unwrap();
        assert!(json.contains("\"mu\""));
        let _ = ratio(1, 2);
    }
}
