//! Constant-coefficient linear differential operators `P(d/dt) = Σ aⱼ dʲ/dtʲ`.
//!
//! Applying `P(d/dt)` to `Q(t)e^{γt}` always yields `S(t)e^{γt}` for some
//! polynomial `S`. Two independent routes compute `S`:
//!
//! * [`LinearOperator::apply_via_taylor`] expands the characteristic
//!   polynomial about `γ` and forms `Σₖ p⁽ᵏ⁾(γ)/k! · Q⁽ᵏ⁾`;
//! * [`LinearOperator::apply_shifted`] uses `dʲ/dtʲ{Q e^{γt}} = e^{γt}(D+γ)ʲQ`
//!   and never touches Taylor coefficients.
//!
//! Their agreement is checked by property tests; the verifier only trusts the
//! second route.

use crate::arith::{ComplexRational, Rational};
use crate::error::{Error, Result};
use crate::exptrig::ExpTrigPoly;
use crate::poly::Polynomial;

/// `coeffs[j]` is `aⱼ`, the coefficient of `dʲ/dtʲ`. Order is at least one
/// and the leading coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearOperator {
    coeffs: Vec<Rational>,
}

impl LinearOperator {
    pub fn new(mut coeffs: Vec<Rational>) -> Result<Self> {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        if coeffs.len() < 2 {
            return Err(Error::InvalidOperator(
                "at least one derivative must have a nonzero coefficient".into(),
            ));
        }
        Ok(LinearOperator { coeffs })
    }

    pub fn from_ints(coeffs: &[i64]) -> Result<Self> {
        LinearOperator::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `p(t) = Σ aⱼ tʲ`.
    pub fn characteristic_polynomial(&self) -> Polynomial {
        Polynomial::from_rationals(self.coeffs.iter().cloned())
    }

    /// `S = Σₖ cₖ Q⁽ᵏ⁾` with `cₖ = p⁽ᵏ⁾(γ)/k!`, so `P{Q e^{γt}} = S e^{γt}`.
    pub fn apply_via_taylor(&self, q: &Polynomial, gamma: &ComplexRational) -> Polynomial {
        let taylor = self
            .characteristic_polynomial()
            .taylor_coeffs_at(gamma)
            .expect("operator has nonzero characteristic polynomial");
        let mut sum = Polynomial::zero();
        let mut deriv = q.clone();
        for c in &taylor {
            if deriv.is_zero() {
                break;
            }
            sum = sum + deriv.scale(c);
            deriv = deriv.derivative();
        }
        sum
    }

    /// `S = Σⱼ aⱼ (D+γ)ʲ Q`, iterating `Q ↦ Q' + γQ`.
    pub fn apply_shifted(&self, q: &Polynomial, gamma: &ComplexRational) -> Polynomial {
        let mut sum = Polynomial::zero();
        let mut shifted = q.clone();
        for (j, a) in self.coeffs.iter().enumerate() {
            if j > 0 {
                shifted = shifted.derivative() + shifted.scale(gamma);
            }
            sum = sum + shifted.scale(&ComplexRational::real(a.clone()));
        }
        sum
    }

    /// `P(d/dt)` applied to a real exponential-trigonometric expression.
    pub fn apply_to_exptrig(&self, e: &ExpTrigPoly) -> ExpTrigPoly {
        let mut sum = ExpTrigPoly::zero();
        let mut deriv = e.clone();
        for (j, a) in self.coeffs.iter().enumerate() {
            if j > 0 {
                deriv = deriv.derivative();
            }
            if !a.is_zero() {
                sum = sum + deriv.scale(a);
            }
        }
        sum
    }
}

impl std::fmt::Debug for LinearOperator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_tuple("LinearOperator").field(&self.coeffs).finish()
    }
}
