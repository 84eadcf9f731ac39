use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::Rational;
use crate::error::{Error, Result};

/// Univariate polynomial with integer coefficients, lowest degree first.
/// The zero polynomial has no coefficients; otherwise the last one is
/// nonzero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    /// `x - r` for an integer root `r`.
    pub fn linear(root: i64) -> Self {
        Self::from_i64(&[-root, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// gcd of the coefficients, zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divide out the content and make the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|x| x / &c).collect(),
        }
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| {
            acc * x + BigRational::from_integer(c.clone())
        })
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::from_i64(&[1]), |acc, _| &acc * self)
    }

    fn to_rational(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigInt::zero();
        IntPolynomial::new(
            (0..len)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.sign() == Sign::Minus;
            let mag = c.abs();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let unit = mag.is_one();
            match i {
                0 => write!(f, "{mag}")?,
                1 if unit => f.write_str("x")?,
                1 => write!(f, "{mag}x")?,
                _ if unit => write!(f, "x^{i}")?,
                _ => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Serialises as its display string, e.g. `"x^2 - 1"`.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

/// Polynomial over ℚ used internally by the gcd-based algorithms.
#[derive(Clone, Debug, PartialEq, Eq)]
struct RatPoly(Vec<BigRational>);

impl RatPoly {
    fn new(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        RatPoly(c)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn monic(&self) -> Self {
        match self.0.last() {
            None => self.clone(),
            Some(lc) => RatPoly(self.0.iter().map(|c| c / lc).collect()),
        }
    }

    fn derivative(&self) -> Self {
        RatPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    fn sub(&self, rhs: &Self) -> Self {
        let len = self.0.len().max(rhs.0.len());
        let zero = BigRational::zero();
        RatPoly::new(
            (0..len)
                .map(|i| self.0.get(i).unwrap_or(&zero) - rhs.0.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    fn div_rem(&self, rhs: &Self) -> (Self, Self) {
        assert!(!rhs.is_zero(), "division by the zero polynomial");
        let mut rem = self.0.clone();
        let dr = rhs.degree();
        let lc = rhs.0.last().unwrap();
        if rem.len() < rhs.0.len() {
            return (RatPoly(Vec::new()), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dr];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dr] / lc;
            if !q.is_zero() {
                for (i, c) in rhs.0.iter().enumerate() {
                    rem[k + i] -= &q * c;
                }
            }
            quot[k] = q;
        }
        rem.truncate(dr);
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    fn exact_div(&self, rhs: &Self) -> Self {
        let (q, r) = self.div_rem(rhs);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd by the Euclidean algorithm.
    fn gcd(&self, rhs: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Clear denominators, then take the primitive part.
    fn to_primitive_int(&self) -> IntPolynomial {
        let lcm = self.0.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let coeffs = self
            .0
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        IntPolynomial::new(coeffs).primitive_part()
    }
}

/// Yun's squarefree decomposition: `p = c · ∏ q_i^{e_i}` with every `q_i`
/// squarefree, primitive, positive-leading and pairwise coprime. Returned
/// in strictly increasing order of multiplicity; constants give an empty
/// list.
pub fn squarefree_decomposition(p: &IntPolynomial) -> Result<Vec<(IntPolynomial, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = p.to_rational().monic();
    let one = RatPoly::new(vec![BigRational::one()]);
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.exact_div(&a0);
    let c = df.exact_div(&a0);
    let mut d = c.sub(&b.derivative());
    let mut out = Vec::new();
    let mut mult = 1;
    while b.degree() > 0 {
        let a = b.gcd(&d);
        b = b.exact_div(&a);
        let c = d.exact_div(&a);
        d = c.sub(&b.derivative());
        if a != one {
            out.push((a.to_primitive_int(), mult));
        }
        mult += 1;
    }
    Ok(out)
}

/// Largest `k` with `(x - r)^k | p`.
pub fn eval_multiplicity(p: &IntPolynomial, r: &Rational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let root = RatPoly::new(vec![-r.clone(), BigRational::one()]);
    let mut cur = p.to_rational();
    let mut k = 0;
    loop {
        let (q, rem) = cur.div_rem(&root);
        if !rem.is_zero() {
            return Ok(k);
        }
        cur = q;
        k += 1;
    }
}
