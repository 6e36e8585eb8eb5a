//! Exact arbitrary-precision integer polynomial arithmetic and integer-zero
//! extraction.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
}

/// Dense univariate polynomial with arbitrary-precision integer coefficients,
/// stored ascending by exponent and normalized (no trailing zero coefficient;
/// the zero polynomial is the empty sequence).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
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

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficients ascending by exponent.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^exp` (zero when beyond the degree).
    pub fn coeff(&self, exp: usize) -> BigInt {
        self.coeffs.get(exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Multiplication by `x^s`.
    pub fn shift(&self, s: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); s];
        coeffs.extend_from_slice(&self.coeffs);
        IntPolynomial { coeffs }
    }

    /// Exact evaluation by Horner's rule.
    pub fn evaluate(&self, z: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Divides by the monic linear factor `x - z`, returning the quotient and
    /// the (scalar) remainder, so `self == q * (x - z) + r` exactly.
    pub fn synthetic_divide(&self, z: &BigInt) -> Result<(Self, BigInt), PolyError> {
        let deg = self.degree().ok_or(PolyError::ZeroPolynomial)?;
        let mut quotient = vec![BigInt::zero(); deg];
        let mut carry = BigInt::zero();
        for i in (0..=deg).rev() {
            let val = &self.coeffs[i] + &carry * z;
            if i > 0 {
                quotient[i - 1] = val.clone();
                carry = val;
            } else {
                return Ok((IntPolynomial::new(quotient), val));
            }
        }
        unreachable!()
    }

    /// Divides out every integer zero with `|z| <= bound`, the zero at the
    /// origin first to full multiplicity, then candidates by ascending
    /// magnitude with the positive sign tried first.
    ///
    /// The verdict is definitive only when all real zeros of `self` lie in
    /// `[-bound, bound]`, which the caller must guarantee.
    pub fn extract_integer_zeros(&self, bound: u64) -> Result<IntegralityReport, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut remainder = self.clone();
        let mut zeros: BTreeMap<i64, u32> = BTreeMap::new();
        let low = remainder
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero polynomial");
        if low > 0 {
            remainder.coeffs.drain(..low);
            zeros.insert(0, low as u32);
        }
        for magnitude in 1..=bound as i64 {
            for z in [magnitude, -magnitude] {
                let zb = BigInt::from(z);
                while remainder.degree() > Some(0) {
                    let (q, r) = remainder.synthetic_divide(&zb)?;
                    if !r.is_zero() {
                        break;
                    }
                    remainder = q;
                    *zeros.entry(z).or_insert(0) += 1;
                }
            }
        }
        let integral = remainder.degree() == Some(0);
        Ok(IntegralityReport {
            zeros,
            remainder,
            integral,
        })
    }

    /// Machine rendering: `{"coeffs": [c0, c1, ...]}` ascending, decimal.
    pub fn to_json_string(&self) -> String {
        let body: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("{{\"coeffs\":[{}]}}", body.join(","))
    }
}

/// Integer zeros with multiplicities, plus the factor of the input that has no
/// integer zero within the searched bound. `integral` holds exactly when the
/// remainder is a (nonzero) constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralityReport {
    pub zeros: BTreeMap<i64, u32>,
    pub remainder: IntPolynomial,
    pub integral: bool,
}

impl IntegralityReport {
    /// Multiplies the extracted factors back together; equals the original
    /// input by construction.
    pub fn reconstruct(&self) -> IntPolynomial {
        let mut p = self.remainder.clone();
        for (&z, &mult) in &self.zeros {
            let factor = IntPolynomial::new(vec![BigInt::from(-z), BigInt::one()]);
            for _ in 0..mult {
                p = &p * &factor;
            }
        }
        p
    }

    pub fn zeros_string(&self) -> String {
        format_zero_multiset(&self.zeros)
    }
}

/// `-3,-2,0^2,1` style rendering: ascending, `^m` suffix when the
/// multiplicity exceeds one.
pub fn format_zero_multiset(zeros: &BTreeMap<i64, u32>) -> String {
    let parts: Vec<String> = zeros
        .iter()
        .map(|(z, &m)| {
            if m > 1 {
                format!("{z}^{m}")
            } else {
                z.to_string()
            }
        })
        .collect();
    parts.join(",")
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        IntPolynomial::new(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        IntPolynomial::new(coeffs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::new(coeffs)
    }
}

/// Canonical text: descending exponents, ` + `/` - ` separators, unit
/// coefficients elided except in the constant term, e.g.
/// `x^8 - 14*x^6 + 49*x^4 - 36*x^2`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for exp in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[exp];
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            match exp {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if exp == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{exp}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
