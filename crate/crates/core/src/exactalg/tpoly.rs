//! Dense univariate polynomials in `t` over exact rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ExactAlgError, Rat};

/// A polynomial in `t` with exact rational coefficients, stored as the
/// ascending coefficient sequence with no trailing zeros. The zero polynomial
/// is the empty sequence.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TPoly {
    coeffs: Vec<Rat>,
}

impl TPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        TPoly { coeffs }
    }

    pub fn zero() -> Self {
        TPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        TPoly::constant(Rat::one())
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        TPoly::monomial(1, Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        TPoly::new(vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        TPoly::constant(super::rat(c))
    }

    /// `c * t^deg`.
    pub fn monomial(deg: usize, c: Rat) -> Self {
        if c.is_zero() {
            return TPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); deg + 1];
        coeffs[deg] = c;
        TPoly { coeffs }
    }

    /// Ascending integer coefficient list, e.g. `[6, 1]` for `t + 6`.
    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        TPoly::new(coeffs.iter().map(|&c| super::rat(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, deg: usize) -> Rat {
        self.coeffs.get(deg).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, x: i64) -> Rat {
        self.eval(&super::rat(x))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return TPoly::zero();
        }
        TPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Substitutes `t^d` for `t`.
    pub fn adams(&self, d: u32) -> Self {
        if d == 1 || self.is_zero() {
            return self.clone();
        }
        let d = d as usize;
        let mut coeffs = vec![Rat::zero(); (self.coeffs.len() - 1) * d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * d] = c.clone();
        }
        TPoly { coeffs }
    }

    /// Quotient and remainder with `deg(rem) < deg(div)`.
    pub fn div_rem(&self, div: &TPoly) -> (TPoly, TPoly) {
        assert!(!div.is_zero(), "polynomial division by zero");
        let dd = div.coeffs.len();
        if self.coeffs.len() < dd {
            return (TPoly::zero(), self.clone());
        }
        let lead = div.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); rem.len() - dd + 1];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd - 1] / lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in div.coeffs.iter().enumerate() {
                let v = &rem[i + j] - &c * dc;
                rem[i + j] = v;
            }
            quot[i] = c;
        }
        (TPoly::new(quot), TPoly::new(rem))
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn exact_div(&self, div: &TPoly) -> TPoly {
        let (q, r) = self.div_rem(div);
        assert!(r.is_zero(), "exact_div with nonzero remainder");
        q
    }

    /// Monic greatest common divisor (1 for coprime inputs), computed with a
    /// primitive polynomial remainder sequence over the integers.
    pub fn gcd(&self, other: &TPoly) -> TPoly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let mut a = self.primitive_int();
        let mut b = other.primitive_int();
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = pseudo_rem(&a, &b);
            a = b;
            b = primitive(r);
        }
        let poly = TPoly::new(a.into_iter().map(Rat::from_integer).collect());
        poly.monic()
    }

    /// Same polynomial scaled to leading coefficient 1 (zero stays zero).
    pub fn monic(&self) -> TPoly {
        match self.leading_coeff() {
            None => TPoly::zero(),
            Some(lead) if lead.is_one() => self.clone(),
            Some(lead) => {
                let inv = lead.recip();
                self.scale(&inv)
            }
        }
    }

    /// Primitive integer coefficient vector (content removed, leading
    /// coefficient positive). Zero maps to the empty vector.
    fn primitive_int(&self) -> Vec<BigInt> {
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        primitive(ints)
    }

    /// True when every coefficient is an integer.
    pub fn is_integer(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Integer coefficients in ascending order; `None` if any coefficient is
    /// not an integer.
    pub fn int_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.denom().is_one().then(|| c.numer().clone()))
            .collect()
    }

    /// Renders e.g. `t^3 + 2*t + 1`; used for text output only.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let show_coeff = !mag.is_one() || deg == 0;
            if show_coeff {
                out.push_str(&mag.to_string());
            }
            if deg > 0 {
                if show_coeff {
                    out.push('*');
                }
                out.push('t');
                if deg > 1 {
                    out.push_str(&format!("^{deg}"));
                }
            }
        }
        out
    }
}

fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut rem = a.to_vec();
    let db = b.len();
    let lead = b.last().unwrap().clone();
    while rem.len() >= db {
        let shift = rem.len() - db;
        let top = rem.last().unwrap().clone();
        for c in rem.iter_mut() {
            *c *= &lead;
        }
        for (j, bc) in b.iter().enumerate() {
            rem[shift + j] -= &top * bc;
        }
        while rem.last().is_some_and(|c| c.is_zero()) {
            rem.pop();
        }
    }
    rem
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    if v.is_empty() {
        return v;
    }
    let mut content = BigInt::zero();
    for c in &v {
        content = content.gcd(c);
    }
    if v.last().unwrap().is_negative() {
        content = -content;
    }
    for c in v.iter_mut() {
        *c /= &content;
    }
    v
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        TPoly::new(coeffs)
    }
}

impl Sub for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        TPoly::new(coeffs)
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        TPoly::new(coeffs)
    }
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Lagrange interpolation through `points` with the given degree bound.
/// Uses the first `degree_bound + 1` points to build the polynomial and
/// requires every remaining point to lie on it.
pub fn interpolate(points: &[(BigInt, Rat)], degree_bound: usize) -> Result<TPoly, ExactAlgError> {
    let needed = degree_bound + 1;
    if points.len() < needed {
        return Err(ExactAlgError::TooFewPoints {
            needed,
            got: points.len(),
        });
    }
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            if points[i].0 == points[j].0 {
                return Err(ExactAlgError::DuplicateAbscissa);
            }
        }
    }
    let base = &points[..needed];
    let mut result = TPoly::zero();
    for (i, (xi, yi)) in base.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut num = TPoly::one();
        let mut den = Rat::one();
        let xi_rat = Rat::from_integer(xi.clone());
        for (j, (xj, _)) in base.iter().enumerate() {
            if i == j {
                continue;
            }
            let xj_rat = Rat::from_integer(xj.clone());
            num = &num * &TPoly::new(vec![-xj_rat.clone(), Rat::one()]);
            den *= &xi_rat - &xj_rat;
        }
        result = &result + &num.scale(&(yi / den));
    }
    for (x, y) in &points[needed..] {
        if &result.eval(&Rat::from_integer(x.clone())) != y {
            return Err(ExactAlgError::InconsistentData(x.clone()));
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::super::{rat, ratio};
    use super::*;

    #[test]
    fn div_rem_exact() {
        let num = TPoly::from_int_coeffs(&[-1, 0, 1]); // t^2 - 1
        let den = TPoly::from_int_coeffs(&[-1, 1]); // t - 1
        let (q, r) = num.div_rem(&den);
        assert_eq!(q, TPoly::from_int_coeffs(&[1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn gcd_cancels_common_factor() {
        let a = TPoly::from_int_coeffs(&[-1, 0, 1]); // (t-1)(t+1)
        let b = TPoly::from_int_coeffs(&[1, -2, 1]); // (t-1)^2
        assert_eq!(a.gcd(&b), TPoly::from_int_coeffs(&[-1, 1]));
    }

    #[test]
    fn adams_spreads_exponents() {
        let f = TPoly::from_int_coeffs(&[1, 2, 3]);
        let g = f.adams(2);
        assert_eq!(g, TPoly::from_int_coeffs(&[1, 0, 2, 0, 3]));
        assert_eq!(f.adams(1), f);
    }

    #[test]
    fn interpolate_line() {
        let pts = vec![(BigInt::from(2), rat(3)), (BigInt::from(3), rat(4))];
        assert_eq!(
            interpolate(&pts, 1).unwrap(),
            TPoly::from_int_coeffs(&[1, 1])
        );
    }

    #[test]
    fn interpolate_constant_with_extra_points() {
        let pts = vec![
            (BigInt::from(2), rat(1)),
            (BigInt::from(3), rat(1)),
            (BigInt::from(4), rat(1)),
        ];
        assert_eq!(interpolate(&pts, 2).unwrap(), TPoly::one());
    }

    #[test]
    fn interpolate_cubic() {
        // t^3 + t^2 at t = 2, 3, 4, 5.
        let pts = vec![
            (BigInt::from(2), rat(12)),
            (BigInt::from(3), rat(36)),
            (BigInt::from(4), rat(80)),
            (BigInt::from(5), rat(150)),
        ];
        let p = interpolate(&pts, 3).unwrap();
        assert_eq!(p, TPoly::from_int_coeffs(&[0, 0, 1, 1]));
        assert_eq!(p.eval_int(7), rat(392));
    }

    #[test]
    fn interpolate_rejects_bad_data() {
        let pts = vec![(BigInt::from(2), rat(1))];
        assert!(matches!(
            interpolate(&pts, 1),
            Err(ExactAlgError::TooFewPoints { .. })
        ));
        let pts = vec![
            (BigInt::from(2), rat(1)),
            (BigInt::from(3), rat(2)),
            (BigInt::from(4), rat(9)),
        ];
        assert!(matches!(
            interpolate(&pts, 1),
            Err(ExactAlgError::InconsistentData(_))
        ));
    }

    #[test]
    fn render_readable() {
        let p = TPoly::new(vec![rat(1), rat(2), rat(0), ratio(1, 1)]);
        assert_eq!(p.render(), "t^3 + 2*t + 1");
        assert_eq!(TPoly::zero().render(), "0");
    }
}
