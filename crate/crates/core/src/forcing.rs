//! Right-hand sides `Σ Rᵢ(t)·e^{αᵢt}·{1, cos(βᵢt+δᵢ), sin(βᵢt+δᵢ)}`, each
//! stored as the complex exponential `Rᵢ(t)e^{γᵢt+iδᵢ}` plus the projection
//! that recovers the real term.

use std::collections::BTreeMap;

use crate::arith::{ComplexRational, Rational};
use crate::error::{Error, Result};
use crate::exptrig::{ExpTrigPoly, TermKey, TrigKind};
use crate::poly::Polynomial;

/// Which real function a complex solution `z(t)` stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Projection {
    /// `z` itself; only meaningful for real `γ`.
    Complex,
    /// `Re z`, solving a cosine-forced equation.
    RealPart,
    /// `Im z`, solving a sine-forced equation.
    ImagPart,
}

impl Projection {
    pub fn as_str(self) -> &'static str {
        match self {
            Projection::Complex => "complex",
            Projection::RealPart => "real_part",
            Projection::ImagPart => "imag_part",
        }
    }

    pub fn parse(s: &str) -> Option<Projection> {
        match s {
            "complex" => Some(Projection::Complex),
            "real_part" => Some(Projection::RealPart),
            "imag_part" => Some(Projection::ImagPart),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ForcingTerm {
    poly: Polynomial,
    gamma: ComplexRational,
    delta: Rational,
    projection: Projection,
}

impl ForcingTerm {
    /// Validates the term and folds a negative frequency into a positive one
    /// (`γ ↦ γ̄`, `δ ↦ −δ`, and a sign flip for the sine projection).
    pub fn new(
        poly: Polynomial,
        gamma: ComplexRational,
        delta: Rational,
        projection: Projection,
    ) -> Result<Self> {
        if !poly.is_real() {
            return Err(Error::InvalidForcing("polynomial factor must be real".into()));
        }
        if poly.is_zero() {
            return Err(Error::InvalidForcing("polynomial factor must be nonzero".into()));
        }
        if gamma.is_real() {
            if !delta.is_zero() {
                return Err(Error::InvalidForcing(format!(
                    "phase {delta} given for the real exponent {gamma}"
                )));
            }
            if projection != Projection::Complex {
                return Err(Error::InvalidForcing(
                    "a real exponent takes no real/imaginary projection".into(),
                ));
            }
        } else if projection == Projection::Complex {
            return Err(Error::InvalidForcing(format!(
                "the complex exponent {gamma} needs a real or imaginary projection"
            )));
        }
        let (poly, gamma, delta) = if gamma.im.is_negative() {
            let poly = if projection == Projection::ImagPart { -poly } else { poly };
            (poly, gamma.conj(), -delta)
        } else {
            (poly, gamma, delta)
        };
        Ok(ForcingTerm { poly, gamma, delta, projection })
    }

    /// `R(t)e^{αt}` for real `α`.
    pub fn exponential(poly: Polynomial, alpha: Rational) -> Result<Self> {
        ForcingTerm::new(poly, ComplexRational::real(alpha), Rational::zero(), Projection::Complex)
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn gamma(&self) -> &ComplexRational {
        &self.gamma
    }

    pub fn delta(&self) -> &Rational {
        &self.delta
    }

    pub fn projection(&self) -> Projection {
        self.projection
    }

    /// Canonical ordering key `(α, β, δ, projection)`.
    pub fn key(&self) -> (Rational, Rational, Rational, Projection) {
        (self.gamma.re.clone(), self.gamma.im.clone(), self.delta.clone(), self.projection)
    }

    pub fn to_exptrig(&self) -> ExpTrigPoly {
        let kind = match self.projection {
            Projection::Complex => TrigKind::Exp,
            Projection::RealPart => TrigKind::Cos,
            Projection::ImagPart => TrigKind::Sin,
        };
        ExpTrigPoly::term(
            self.poly.clone(),
            self.gamma.re.clone(),
            self.gamma.im.clone(),
            self.delta.clone(),
            kind,
        )
        .expect("validated forcing term has a canonical real form")
    }
}

/// A sum of forcing terms, sorted by key with equal keys merged. The empty
/// forcing is the homogeneous right-hand side.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Forcing {
    terms: Vec<ForcingTerm>,
}

impl Forcing {
    pub fn new(terms: impl IntoIterator<Item = ForcingTerm>) -> Self {
        let mut merged: BTreeMap<_, ForcingTerm> = BTreeMap::new();
        for term in terms {
            match merged.remove(&term.key()) {
                Some(mut existing) => {
                    existing.poly = existing.poly + term.poly;
                    if !existing.poly.is_zero() {
                        merged.insert(existing.key(), existing);
                    }
                }
                None => {
                    merged.insert(term.key(), term);
                }
            }
        }
        Forcing { terms: merged.into_values().collect() }
    }

    pub fn homogeneous() -> Self {
        Forcing::default()
    }

    pub fn terms(&self) -> &[ForcingTerm] {
        &self.terms
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_exptrig(&self) -> ExpTrigPoly {
        self.terms
            .iter()
            .fold(ExpTrigPoly::zero(), |acc, term| acc + term.to_exptrig())
    }

    /// Reads a real expression back as a forcing: `e^{αt}` terms become real
    /// exponents, `cos`/`sin` terms become the real/imaginary projections.
    pub fn from_exptrig(e: &ExpTrigPoly) -> Forcing {
        Forcing::new(e.terms().map(|(key, poly)| term_from_key(key, poly.clone())))
    }
}

fn term_from_key(key: &TermKey, poly: Polynomial) -> ForcingTerm {
    let gamma = ComplexRational::new(key.alpha.clone(), key.beta.clone());
    let projection = match key.kind {
        TrigKind::Exp => Projection::Complex,
        TrigKind::Cos => Projection::RealPart,
        TrigKind::Sin => Projection::ImagPart,
    };
    ForcingTerm::new(poly, gamma, key.delta.clone(), projection)
        .expect("canonical expression terms are valid forcing terms")
}
