//! Dense polynomials with exact rational coefficients.
//!
//! Coefficients are stored lowest degree first and the trailing coefficient
//! is nonzero unless the polynomial is zero (the zero polynomial is the empty
//! coefficient vector). Every structural identity in the crate reduces to
//! arithmetic on these, so all operations here are exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// Builds from coefficients (lowest degree first), trimming trailing zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    /// `c * s^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Polynomial { coeffs }
    }

    /// The identity polynomial `s`.
    pub fn s() -> Self {
        Polynomial::monomial(Rational::one(), 1)
    }

    /// Convenience constructor from integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `s^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Exact division by a nonzero scalar.
    pub fn div_scalar(&self, c: &Rational) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::domain("polynomial division by zero scalar"));
        }
        Ok(self.scale(&c.recip()))
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        Polynomial::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * &Rational::from(i + 1))
                .collect(),
        )
    }

    /// k-th derivative.
    pub fn derivative_n(&self, k: usize) -> Self {
        let mut p = self.clone();
        for _ in 0..k {
            p = p.derivative();
        }
        p
    }

    /// Multiplication by the variable `s`.
    pub fn mul_x(&self) -> Self {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Polynomial::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Plain f64 Horner evaluation.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64();
        }
        acc
    }

    /// Evaluates at a finite f64 through exact rational arithmetic, rounding
    /// once at the end. Used where Horner in f64 would lose digits (potential
    /// evaluation near interval endpoints).
    pub fn eval_f64_exact(&self, x: f64) -> f64 {
        let xr = match Rational::from_f64_exact(x) {
            Some(r) => r,
            None => return f64::NAN,
        };
        self.eval(&xr).to_f64()
    }

    /// Sum of absolute coefficient values; exact residual magnitude for reports.
    pub fn abs_coeff_sum(&self) -> Rational {
        let mut acc = Rational::zero();
        for c in &self.coeffs {
            acc = acc + c.abs();
        }
        acc
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        Polynomial::new(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - rhs.coeff(k));
        }
        Polynomial::new(coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Polynomial::new(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})s")?,
                _ => write!(f, "({c})s^{k}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl serde::Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(ser)
    }
}

impl<'de> serde::Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let coeffs = Vec::<Rational>::deserialize(de)?;
        Ok(Polynomial::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = Polynomial::new(vec![q(1, 1), q(0, 1), q(0, 1)]);
        assert_eq!(p.degree(), Some(0));
        let z = Polynomial::new(vec![q(0, 1)]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
    }

    #[test]
    fn ring_operations() {
        // (1 + s)(1 - s) = 1 - s^2
        let a = Polynomial::from_ints(&[1, 1]);
        let b = Polynomial::from_ints(&[1, -1]);
        assert_eq!(&a * &b, Polynomial::from_ints(&[1, 0, -1]));
        assert_eq!(&a + &b, Polynomial::from_ints(&[2]));
        assert_eq!(&a - &b, Polynomial::from_ints(&[0, 2]));
        assert_eq!(-(&a), Polynomial::from_ints(&[-1, -1]));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn derivative_and_eval() {
        // p = 1 - 2s + 3s^2, p' = -2 + 6s, p(1/2) = 3/4
        let p = Polynomial::from_ints(&[1, -2, 3]);
        assert_eq!(p.derivative(), Polynomial::from_ints(&[-2, 6]));
        assert_eq!(p.eval(&q(1, 2)), q(3, 4));
        assert_eq!(p.derivative_n(2), Polynomial::from_ints(&[6]));
        assert!(p.derivative_n(3).is_zero());
    }

    #[test]
    fn exact_f64_evaluation_matches_rational_route() {
        let p = Polynomial::new(vec![q(1, 3), q(-7, 5), q(2, 1)]);
        let x = 0.892_347_119_042_77_f64;
        let exact = {
            let xr = Rational::from_f64_exact(x).unwrap();
            p.eval(&xr).to_f64()
        };
        assert_eq!(p.eval_f64_exact(x), exact);
        assert!((p.eval_f64(x) - exact).abs() < 1e-14);
    }

    #[test]
    fn serde_as_fraction_arrays() {
        let p = Polynomial::new(vec![q(-1, 2), q(0, 1), q(3, 2)]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"["-1/2","0","3/2"]"#);
        let back: Polynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn scalar_division_rejects_zero() {
        let p = Polynomial::from_ints(&[1, 1]);
        assert!(p.div_scalar(&Rational::zero()).is_err());
        assert_eq!(
            p.div_scalar(&q(1, 2)).unwrap(),
            Polynomial::from_ints(&[2, 2])
        );
    }
}
