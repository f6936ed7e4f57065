//! Reduced rational functions in `t`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{ExactAlgError, Rat, TPoly};

/// A rational function in `t` in canonical reduced form: the denominator is
/// monic and coprime to the numerator, so structural equality is semantic
/// equality.
#[derive(Clone, PartialEq, Eq)]
pub struct TRat {
    num: TPoly,
    den: TPoly,
}

impl TRat {
    pub fn new(num: TPoly, den: TPoly) -> Result<Self, ExactAlgError> {
        if den.is_zero() {
            return Err(ExactAlgError::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: TPoly, den: TPoly) -> Self {
        if num.is_zero() {
            return TRat {
                num: TPoly::zero(),
                den: TPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        let lead = den.leading_coeff().expect("nonzero denominator").clone();
        if !lead.is_one() {
            let inv = lead.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        TRat { num, den }
    }

    pub fn zero() -> Self {
        TRat {
            num: TPoly::zero(),
            den: TPoly::one(),
        }
    }

    pub fn one() -> Self {
        TRat {
            num: TPoly::one(),
            den: TPoly::one(),
        }
    }

    pub fn from_poly(p: TPoly) -> Self {
        TRat {
            num: p,
            den: TPoly::one(),
        }
    }

    pub fn from_rat(c: Rat) -> Self {
        TRat::from_poly(TPoly::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        TRat::from_poly(TPoly::from_int(c))
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        TRat::from_poly(TPoly::t())
    }

    pub fn numer(&self) -> &TPoly {
        &self.num
    }

    pub fn denom(&self) -> &TPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn recip(&self) -> Result<Self, ExactAlgError> {
        if self.is_zero() {
            return Err(ExactAlgError::DivisionByZero);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    /// Substitutes `t^d` for `t` in numerator and denominator. Coprimality
    /// and monicity survive the substitution, so no reduction is needed.
    pub fn adams(&self, d: u32) -> Self {
        if d == 1 {
            return self.clone();
        }
        TRat {
            num: self.num.adams(d),
            den: self.den.adams(d),
        }
    }

    /// Returns the numerator when the reduced denominator is 1.
    pub fn certify_polynomial(&self) -> Result<TPoly, ExactAlgError> {
        if self.den.is_one() {
            Ok(self.num.clone())
        } else {
            Err(ExactAlgError::NonPolynomial(self.den.render()))
        }
    }

    /// Evaluates at a rational point; `None` on a pole.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let den = self.den.eval(x);
        if den.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / den)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = TRat::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return TRat::zero();
        }
        TRat {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }
}

impl Add for &TRat {
    type Output = TRat;
    fn add(self, rhs: &TRat) -> TRat {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            return TRat::reduced(num, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            return TRat {
                num,
                den: &self.den * &rhs.den,
            };
        }
        let da = self.den.exact_div(&g);
        let db = rhs.den.exact_div(&g);
        let num = &(&self.num * &db) + &(&rhs.num * &da);
        let den = &self.den * &db;
        // Any remaining common factor divides g.
        let g2 = num.gcd(&g);
        if g2.is_one() {
            TRat { num, den }
        } else {
            TRat {
                num: num.exact_div(&g2),
                den: den.exact_div(&g2),
            }
        }
    }
}

impl Sub for &TRat {
    type Output = TRat;
    fn sub(self, rhs: &TRat) -> TRat {
        self + &-rhs
    }
}

impl Neg for &TRat {
    type Output = TRat;
    fn neg(self) -> TRat {
        TRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &TRat {
    type Output = TRat;
    fn mul(self, rhs: &TRat) -> TRat {
        if self.is_zero() || rhs.is_zero() {
            return TRat::zero();
        }
        // Cross-reduce before multiplying to keep the factors small.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let na = if g1.is_one() {
            self.num.clone()
        } else {
            self.num.exact_div(&g1)
        };
        let db = if g1.is_one() {
            rhs.den.clone()
        } else {
            rhs.den.exact_div(&g1)
        };
        let nb = if g2.is_one() {
            rhs.num.clone()
        } else {
            rhs.num.exact_div(&g2)
        };
        let da = if g2.is_one() {
            self.den.clone()
        } else {
            self.den.exact_div(&g2)
        };
        // Cross-reduction makes num and den coprime, and quotients of monic
        // polynomials by monic divisors stay monic.
        let num = &na * &nb;
        let den = &da * &db;
        debug_assert!(den.is_monic());
        TRat { num, den }
    }
}

impl Div for &TRat {
    type Output = TRat;
    fn div(self, rhs: &TRat) -> TRat {
        assert!(!rhs.is_zero(), "division by zero rational function");
        self * &rhs.recip().unwrap()
    }
}

impl fmt::Debug for TRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num.render())
        } else {
            write!(f, "({})/({})", self.num.render(), self.den.render())
        }
    }
}

impl fmt::Display for TRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
