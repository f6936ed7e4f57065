//! Dense matrices and row reduction over small prime fields.

use std::fmt;

/// Arithmetic tables for a prime field of order `q <= 251`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    pub q: u8,
}

impl PrimeField {
    pub fn new(q: u8) -> Self {
        assert!(q >= 2 && is_prime(q), "prime modulus required");
        PrimeField { q }
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        ((a as u16 + b as u16) % self.q as u16) as u8
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        ((a as u16 + self.q as u16 - b as u16) % self.q as u16) as u8
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        ((a as u16 * b as u16) % self.q as u16) as u8
    }

    pub fn neg(&self, a: u8) -> u8 {
        self.sub(0, a)
    }

    pub fn inv(&self, a: u8) -> u8 {
        assert!(!a.is_multiple_of(self.q), "inverse of zero");
        // Fermat: a^(q-2).
        let mut acc = 1u8;
        for _ in 0..(self.q - 2) {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// A multiplicative generator of the nonzero elements.
    pub fn primitive_root(&self) -> u8 {
        'candidates: for g in 2..self.q {
            let mut x = g;
            for _ in 0..(self.q - 2) {
                if x == 1 {
                    continue 'candidates;
                }
                x = self.mul(x, g);
            }
            if x == 1 {
                return g;
            }
        }
        1 // q = 2 or 3 fall through to the smallest generator
    }

    /// Quadratic-residue character on nonzero elements: +1 or -1 (as i64).
    pub fn quadratic_character(&self, a: u8) -> i64 {
        assert!(self.q % 2 == 1, "odd field required");
        assert!(!a.is_multiple_of(self.q));
        let mut acc = 1u8;
        for _ in 0..((self.q - 1) / 2) {
            acc = self.mul(acc, a);
        }
        if acc == 1 {
            1
        } else {
            -1
        }
    }
}

fn is_prime(q: u8) -> bool {
    q >= 2
        && (2..q)
            .take_while(|d| d * d <= q)
            .all(|d| !q.is_multiple_of(d))
}

/// A square matrix over a prime field, row major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    pub n: usize,
    pub q: u8,
    pub e: Vec<u8>,
}

impl Mat {
    pub fn new(n: usize, q: u8, e: Vec<u8>) -> Self {
        assert_eq!(e.len(), n * n);
        assert!(e.iter().all(|&x| x < q));
        Mat { n, q, e }
    }

    pub fn identity(n: usize, q: u8) -> Self {
        let mut e = vec![0u8; n * n];
        for i in 0..n {
            e[i * n + i] = 1;
        }
        Mat { n, q, e }
    }

    pub fn at(&self, i: usize, j: usize) -> u8 {
        self.e[i * self.n + j]
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.n, other.n);
        assert_eq!(self.q, other.q);
        let n = self.n;
        let q = self.q as u32;
        let mut e = vec![0u8; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.e[i * n + k] as u32;
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let cur = e[i * n + j] as u32;
                    e[i * n + j] = ((cur + a * other.e[k * n + j] as u32) % q) as u8;
                }
            }
        }
        Mat { n, q: self.q, e }
    }

    pub fn add_scaled_identity(&self, c: u8) -> Mat {
        let field = PrimeField::new(self.q);
        let mut out = self.clone();
        for i in 0..self.n {
            out.e[i * self.n + i] = field.add(out.e[i * self.n + i], c);
        }
        out
    }

    pub fn det(&self) -> u8 {
        let field = PrimeField::new(self.q);
        let n = self.n;
        let mut rows: Vec<Vec<u8>> = (0..n)
            .map(|i| self.e[i * n..(i + 1) * n].to_vec())
            .collect();
        let mut det = 1u8;
        for col in 0..n {
            let pivot = (col..n).find(|&r| rows[r][col] != 0);
            let Some(pivot) = pivot else { return 0 };
            if pivot != col {
                rows.swap(pivot, col);
                det = field.neg(det);
            }
            det = field.mul(det, rows[col][col]);
            let inv = field.inv(rows[col][col]);
            for r in (col + 1)..n {
                if rows[r][col] == 0 {
                    continue;
                }
                let factor = field.mul(rows[r][col], inv);
                for c in col..n {
                    let delta = field.mul(factor, rows[col][c]);
                    rows[r][c] = field.sub(rows[r][c], delta);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Mat> {
        let field = PrimeField::new(self.q);
        let n = self.n;
        let mut left: Vec<Vec<u8>> = (0..n)
            .map(|i| self.e[i * n..(i + 1) * n].to_vec())
            .collect();
        let mut right: Vec<Vec<u8>> = (0..n)
            .map(|i| (0..n).map(|j| u8::from(i == j)).collect())
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| left[r][col] != 0)?;
            left.swap(pivot, col);
            right.swap(pivot, col);
            let inv = field.inv(left[col][col]);
            for c in 0..n {
                left[col][c] = field.mul(left[col][c], inv);
                right[col][c] = field.mul(right[col][c], inv);
            }
            for r in 0..n {
                if r == col || left[r][col] == 0 {
                    continue;
                }
                let factor = left[r][col];
                for c in 0..n {
                    let dl = field.mul(factor, left[col][c]);
                    left[r][c] = field.sub(left[r][c], dl);
                    let dr = field.mul(factor, right[col][c]);
                    right[r][c] = field.sub(right[r][c], dr);
                }
            }
        }
        let mut e = Vec::with_capacity(n * n);
        for row in right {
            e.extend(row);
        }
        Some(Mat { n, q: self.q, e })
    }

    /// Applies the matrix to a row vector on the right: `v -> v M`.
    pub fn act_on_row(&self, v: &[u8]) -> Vec<u8> {
        let field = PrimeField::new(self.q);
        let n = self.n;
        let mut out = vec![0u8; n];
        for (i, &vi) in v.iter().enumerate() {
            if vi == 0 {
                continue;
            }
            for j in 0..n {
                out[j] = field.add(out[j], field.mul(vi, self.e[i * n + j]));
            }
        }
        out
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.n {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
        }
        write!(f, "]")
    }
}

/// Reduced row echelon form with zero rows dropped; the canonical
/// representative of the row space.
pub fn rref(rows: &[Vec<u8>], q: u8) -> Vec<Vec<u8>> {
    let field = PrimeField::new(q);
    let mut rows: Vec<Vec<u8>> = rows.to_vec();
    let width = rows.first().map_or(0, |r| r.len());
    let mut pivot_row = 0;
    for col in 0..width {
        let Some(found) = (pivot_row..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let inv = field.inv(rows[pivot_row][col]);
        for c in 0..width {
            rows[pivot_row][c] = field.mul(rows[pivot_row][c], inv);
        }
        for r in 0..rows.len() {
            if r == pivot_row || rows[r][col] == 0 {
                continue;
            }
            let factor = rows[r][col];
            for c in 0..width {
                let delta = field.mul(factor, rows[pivot_row][c]);
                rows[r][c] = field.sub(rows[r][c], delta);
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.truncate(pivot_row);
    rows
}

pub fn rank(rows: &[Vec<u8>], q: u8) -> usize {
    rref(rows, q).len()
}

/// Membership of a row vector in the row space given by an rref basis.
pub fn in_row_space(v: &[u8], basis: &[Vec<u8>], q: u8) -> bool {
    let field = PrimeField::new(q);
    let mut v = v.to_vec();
    for row in basis {
        let pivot = row.iter().position(|&x| x != 0).expect("nonzero basis row");
        if v[pivot] != 0 {
            let factor = v[pivot];
            for c in 0..v.len() {
                let delta = field.mul(factor, row[c]);
                v[c] = field.sub(v[c], delta);
            }
        }
    }
    v.iter().all(|&x| x == 0)
}
