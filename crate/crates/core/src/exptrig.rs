//! Real exponential-trigonometric polynomials
//! `Σ polyᵢ(t)·e^{αᵢt}·{1, cos(βᵢt+δᵢ), sin(βᵢt+δᵢ)}`.

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use crate::arith::{forward_binop, ComplexRational, Rational};
use crate::error::{Error, Result};
use crate::poly::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TrigKind {
    /// No trigonometric factor.
    Exp,
    Cos,
    Sin,
}

impl TrigKind {
    pub fn as_str(self) -> &'static str {
        match self {
            TrigKind::Exp => "exp",
            TrigKind::Cos => "cos",
            TrigKind::Sin => "sin",
        }
    }
}

/// Identifies one basis family `e^{αt}·kind(βt+δ)`. Always `β ≥ 0`, and
/// `β = 0` only with `kind = Exp, δ = 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TermKey {
    pub alpha: Rational,
    pub beta: Rational,
    pub delta: Rational,
    pub kind: TrigKind,
}

impl TermKey {
    pub fn exp(alpha: Rational) -> Self {
        TermKey { alpha, beta: Rational::zero(), delta: Rational::zero(), kind: TrigKind::Exp }
    }

    fn with_kind(&self, kind: TrigKind) -> Self {
        TermKey { kind, ..self.clone() }
    }
}

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct ExpTrigPoly {
    terms: BTreeMap<TermKey, Polynomial>,
}

impl ExpTrigPoly {
    pub fn zero() -> Self {
        ExpTrigPoly::default()
    }

    /// A single term `poly·e^{αt}·kind(βt+δ)`, brought to canonical form:
    /// a negative `β` is folded into a nonnegative one, `sin(0)` vanishes and
    /// `cos(0)` becomes a pure exponential.
    pub fn term(
        poly: Polynomial,
        alpha: Rational,
        beta: Rational,
        delta: Rational,
        kind: TrigKind,
    ) -> Result<Self> {
        if !poly.is_real() {
            return Err(Error::InvalidTerm("polynomial factor must be real".into()));
        }
        let mut out = ExpTrigPoly::zero();
        if beta.is_zero() {
            if !delta.is_zero() {
                return Err(Error::InvalidTerm(format!(
                    "phase {delta} without a frequency has no rational form"
                )));
            }
            match kind {
                TrigKind::Exp | TrigKind::Cos => out.add_term(TermKey::exp(alpha), poly),
                TrigKind::Sin => {}
            }
            return Ok(out);
        }
        if kind == TrigKind::Exp {
            return Err(Error::InvalidTerm("pure exponential term with a frequency".into()));
        }
        let (beta, delta, poly) = if beta.is_negative() {
            // cos(-x) = cos x, sin(-x) = -sin x
            let poly = if kind == TrigKind::Sin { -poly } else { poly };
            (-beta, -delta, poly)
        } else {
            (beta, delta, poly)
        };
        out.add_term(TermKey { alpha, beta, delta, kind }, poly);
        Ok(out)
    }

    /// `poly·e^{αt}`.
    pub fn exp_term(poly: Polynomial, alpha: Rational) -> Result<Self> {
        ExpTrigPoly::term(poly, alpha, Rational::zero(), Rational::zero(), TrigKind::Exp)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical key order.
    pub fn terms(&self) -> impl Iterator<Item = (&TermKey, &Polynomial)> {
        self.terms.iter()
    }

    pub fn get(&self, key: &TermKey) -> Option<&Polynomial> {
        self.terms.get(key)
    }

    fn add_term(&mut self, key: TermKey, poly: Polynomial) {
        if poly.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&key) {
            Some(existing) => existing + poly,
            None => poly,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    pub fn scale(&self, k: &Rational) -> ExpTrigPoly {
        let mut out = ExpTrigPoly::zero();
        for (key, poly) in &self.terms {
            out.add_term(key.clone(), poly.scale_real(k));
        }
        out
    }

    /// Exact derivative in `t`, term by term:
    /// `(f e^{αt} cos)' = (f' + αf) e^{αt} cos − βf e^{αt} sin` and the
    /// analogous rule for `sin`.
    pub fn derivative(&self) -> ExpTrigPoly {
        let mut out = ExpTrigPoly::zero();
        for (key, f) in &self.terms {
            let alpha = ComplexRational::real(key.alpha.clone());
            let same = f.derivative() + f.scale(&alpha);
            out.add_term(key.clone(), same);
            let cross = f.scale_real(&key.beta);
            match key.kind {
                TrigKind::Exp => {}
                TrigKind::Cos => out.add_term(key.with_kind(TrigKind::Sin), -cross),
                TrigKind::Sin => out.add_term(key.with_kind(TrigKind::Cos), cross),
            }
        }
        out
    }

    /// Pointwise product with a real polynomial.
    pub fn mul_poly(&self, p: &Polynomial) -> Result<ExpTrigPoly> {
        if !p.is_real() {
            return Err(Error::InvalidTerm("polynomial factor must be real".into()));
        }
        let mut out = ExpTrigPoly::zero();
        for (key, f) in &self.terms {
            out.add_term(key.clone(), f * p);
        }
        Ok(out)
    }
}

impl std::fmt::Debug for ExpTrigPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

fn merge(a: &ExpTrigPoly, b: &ExpTrigPoly, negate_rhs: bool) -> ExpTrigPoly {
    let mut out = a.clone();
    for (key, poly) in &b.terms {
        let poly = if negate_rhs { -poly } else { poly.clone() };
        out.add_term(key.clone(), poly);
    }
    out
}

forward_binop!(ExpTrigPoly, Add, add, |a: &ExpTrigPoly, b: &ExpTrigPoly| merge(a, b, false));
forward_binop!(ExpTrigPoly, Sub, sub, |a: &ExpTrigPoly, b: &ExpTrigPoly| merge(a, b, true));

impl Neg for &ExpTrigPoly {
    type Output = ExpTrigPoly;
    fn neg(self) -> ExpTrigPoly {
        merge(&ExpTrigPoly::zero(), self, true)
    }
}

impl Neg for ExpTrigPoly {
    type Output = ExpTrigPoly;
    fn neg(self) -> ExpTrigPoly {
        -&self
    }
}
