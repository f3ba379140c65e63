//! Dense univariate polynomials over the Gaussian rationals.

use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::{forward_binop, ComplexRational, Rational};
use crate::error::{Error, Result};

/// `coeffs[i]` is the coefficient of `tⁱ`. The highest stored coefficient is
/// always nonzero; the zero polynomial stores nothing.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<ComplexRational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<ComplexRational>) -> Self {
        while coeffs.last().is_some_and(ComplexRational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_rationals(coeffs: impl IntoIterator<Item = Rational>) -> Self {
        Polynomial::new(coeffs.into_iter().map(ComplexRational::real).collect())
    }

    /// Convenience for tests and fixtures: integer coefficients, lowest power first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::from_rationals(coeffs.iter().map(|&c| Rational::from(c)))
    }

    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn constant(c: ComplexRational) -> Self {
        Polynomial::new(vec![c])
    }

    /// `c·tᵏ`.
    pub fn monomial(c: ComplexRational, k: usize) -> Self {
        let mut coeffs = vec![ComplexRational::zero(); k];
        coeffs.push(c);
        Polynomial::new(coeffs)
    }

    pub fn coeffs(&self) -> &[ComplexRational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<ComplexRational> {
        self.coeffs
    }

    /// Coefficient of `tⁱ`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> ComplexRational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(ComplexRational::is_real)
    }

    /// Number of leading zero coefficients (the power of `t` dividing `self`).
    pub fn low_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn real_part(&self) -> Polynomial {
        Polynomial::from_rationals(self.coeffs.iter().map(|c| c.re.clone()))
    }

    pub fn imag_part(&self) -> Polynomial {
        Polynomial::from_rationals(self.coeffs.iter().map(|c| c.im.clone()))
    }

    pub fn scale(&self, k: &ComplexRational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn scale_real(&self, k: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c.scale(k)).collect())
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&Rational::from(i as i64)))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, k: usize) -> Polynomial {
        (0..k).fold(self.clone(), |p, _| p.derivative())
    }

    /// The antiderivative whose constant term is zero.
    pub fn antiderivative_zero_const(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(ComplexRational::zero());
        coeffs.extend(self.coeffs.iter().enumerate().map(|(i, c)| c.div_usize(i + 1)));
        Polynomial::new(coeffs)
    }

    /// Horner evaluation.
    pub fn eval(&self, z: &ComplexRational) -> ComplexRational {
        self.coeffs
            .iter()
            .rev()
            .fold(ComplexRational::zero(), |acc, c| &acc * z + c)
    }

    /// Taylor coefficients `p⁽ᵏ⁾(γ)/k!` for `k = 0..=deg p`, so that
    /// `p(t) = Σ cₖ (t − γ)ᵏ`.
    pub fn taylor_coeffs_at(&self, gamma: &ComplexRational) -> Result<Vec<ComplexRational>> {
        let degree = self.degree().ok_or(Error::ZeroPolynomial)?;
        let mut out = Vec::with_capacity(degree + 1);
        let mut deriv = self.clone();
        let mut inv_factorial = Rational::one();
        for k in 0..=degree {
            if k > 0 {
                deriv = deriv.derivative();
                inv_factorial = inv_factorial.div_usize(k);
            }
            out.push(deriv.eval(gamma).scale(&inv_factorial));
        }
        Ok(out)
    }
}

impl std::fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}

fn zip_with(
    a: &Polynomial,
    b: &Polynomial,
    op: impl Fn(&ComplexRational, &ComplexRational) -> ComplexRational,
) -> Polynomial {
    let len = a.coeffs.len().max(b.coeffs.len());
    Polynomial::new((0..len).map(|i| op(&a.coeff(i), &b.coeff(i))).collect())
}

fn poly_mul(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() || b.is_zero() {
        return Polynomial::zero();
    }
    let mut coeffs = vec![ComplexRational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, ai) in a.coeffs.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.coeffs.iter().enumerate() {
            coeffs[i + j] += &(ai * bj);
        }
    }
    Polynomial::new(coeffs)
}

forward_binop!(Polynomial, Add, add, |a: &Polynomial, b: &Polynomial| zip_with(a, b, |x, y| x + y));
forward_binop!(Polynomial, Sub, sub, |a: &Polynomial, b: &Polynomial| zip_with(a, b, |x, y| x - y));
forward_binop!(Polynomial, Mul, mul, poly_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
