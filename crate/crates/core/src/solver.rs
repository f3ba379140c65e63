//! Particular solutions of `P(d/dt)x = Σ Rᵢ(t)e^{γᵢt+iδᵢ}`.
//!
//! For each forcing term the characteristic polynomial is expanded about `γ`,
//! which turns the problem into the polynomial equation
//! `Σₖ p⁽ᵏ⁾(γ)/k! · Q⁽ᵏ⁾ = R`. That equation is solved by forward substitution
//! on a lower-triangular system; when `γ` is a root of multiplicity `m` the
//! equation is first solved for `Q⁽ᵐ⁾` and then integrated `m` times with zero
//! constants.

use std::collections::HashSet;

use crate::arith::{ComplexRational, Rational};
use crate::diffop::LinearOperator;
use crate::error::{Error, Result};
use crate::exptrig::{ExpTrigPoly, TrigKind};
use crate::forcing::{Forcing, ForcingTerm, Projection};
use crate::poly::Polynomial;

/// Taylor coefficients of the characteristic polynomial about `γ` and the
/// multiplicity of `γ` as a root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaylorData {
    pub coeffs: Vec<ComplexRational>,
    pub multiplicity: usize,
}

impl TaylorData {
    pub fn new(op: &LinearOperator, gamma: &ComplexRational) -> Self {
        let coeffs = op
            .characteristic_polynomial()
            .taylor_coeffs_at(gamma)
            .expect("operator has nonzero characteristic polynomial");
        let multiplicity = coeffs
            .iter()
            .position(|c| !c.is_zero())
            .expect("leading Taylor coefficient equals the leading operator coefficient");
        TaylorData { coeffs, multiplicity }
    }
}

/// The matrix of the linear system for the coefficients of `Q` in
/// `Σⱼ cⱼ Q⁽ʲ⁾ = R` with `deg Q = deg R = degree`.
///
/// Row `l` collects the coefficient of `t^{degree−l}`, column `i` holds the
/// unknown coefficient of `t^{degree−i}`. Entry `(l, i)` for `i ≤ l` is
/// `c_{l−i} · (degree−i)!/(degree−l)!`; everything above the diagonal is zero
/// and the diagonal is constantly `c₀`.
pub fn triangular_system(c: &[ComplexRational], degree: usize) -> Vec<Vec<ComplexRational>> {
    let size = degree + 1;
    (0..size)
        .map(|l| {
            (0..size)
                .map(|i| {
                    if i > l {
                        return ComplexRational::zero();
                    }
                    let j = l - i;
                    let Some(cj) = c.get(j) else {
                        return ComplexRational::zero();
                    };
                    // (degree-i)! / (degree-l)! as a falling product of j factors
                    let falling: Rational = ((degree - l + 1)..=(degree - i))
                        .map(|f| Rational::from(f as i64))
                        .fold(Rational::one(), |acc, f| acc * f);
                    cj.scale(&falling)
                })
                .collect()
        })
        .collect()
}

/// Solves `L x = b` for lower-triangular `L` with nonzero diagonal.
pub fn forward_substitute(
    matrix: &[Vec<ComplexRational>],
    rhs: &[ComplexRational],
) -> Result<Vec<ComplexRational>> {
    let mut x: Vec<ComplexRational> = Vec::with_capacity(rhs.len());
    for (l, row) in matrix.iter().enumerate() {
        let mut acc = rhs[l].clone();
        for (entry, xi) in row.iter().zip(&x) {
            if !entry.is_zero() {
                acc -= &(entry * xi);
            }
        }
        x.push(acc.checked_div(&row[l])?);
    }
    Ok(x)
}

/// Intermediate results of [`solve_poly_ode`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySolve {
    /// Number of leading zero coefficients of the equation.
    pub shift: usize,
    /// Solution of the shifted equation, i.e. `Q⁽ˢʰⁱᶠᵗ⁾`.
    pub reduced: Polynomial,
    /// Successive antiderivatives of `reduced`; the last one is `Q`.
    pub integrations: Vec<Polynomial>,
}

impl PolySolve {
    pub fn solution(&self) -> &Polynomial {
        self.integrations.last().unwrap_or(&self.reduced)
    }
}

/// Finds a polynomial `Q` with `Σⱼ cⱼ Q⁽ʲ⁾ = R`.
pub fn solve_poly_ode(c: &[ComplexRational], r: &Polynomial) -> Result<Polynomial> {
    Ok(solve_poly_ode_steps(c, r)?.solution().clone())
}

pub fn solve_poly_ode_steps(c: &[ComplexRational], r: &Polynomial) -> Result<PolySolve> {
    let shift = c.iter().position(|x| !x.is_zero()).ok_or(Error::Unsolvable)?;
    let reduced = match r.degree() {
        None => Polynomial::zero(),
        Some(degree) => {
            let matrix = triangular_system(&c[shift..], degree);
            let rhs: Vec<_> = (0..=degree).map(|l| r.coeff(degree - l)).collect();
            let mut coeffs = forward_substitute(&matrix, &rhs)?;
            coeffs.reverse();
            Polynomial::new(coeffs)
        }
    };
    let mut integrations = Vec::with_capacity(shift);
    let mut current = reduced.clone();
    for _ in 0..shift {
        current = current.antiderivative_zero_const();
        integrations.push(current.clone());
    }
    Ok(PolySolve { shift, reduced, integrations })
}

/// One complex solution `Q(t)e^{γt+iδ}` with the projection that yields the
/// real answer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexPart {
    pub q: Polynomial,
    pub gamma: ComplexRational,
    pub delta: Rational,
    pub projection: Projection,
    pub multiplicity: usize,
}

impl ComplexPart {
    pub fn realize(&self) -> Result<ExpTrigPoly> {
        realize(&self.q, &self.gamma, &self.delta, self.projection)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParticularSolution {
    pub complex_parts: Vec<ComplexPart>,
    pub real_form: ExpTrigPoly,
}

/// Everything computed while solving one forcing term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub term_index: usize,
    pub characteristic: Polynomial,
    pub gamma: ComplexRational,
    pub taylor: TaylorData,
    pub forcing_poly: Polynomial,
    pub steps: PolySolve,
}

pub fn particular_solution(op: &LinearOperator, term: &ForcingTerm) -> Result<ComplexPart> {
    Ok(derive(op, term, 0)?.0)
}

fn derive(op: &LinearOperator, term: &ForcingTerm, index: usize) -> Result<(ComplexPart, Derivation)> {
    let taylor = TaylorData::new(op, term.gamma());
    let steps = solve_poly_ode_steps(&taylor.coeffs, term.poly())?;
    let part = ComplexPart {
        q: steps.solution().clone(),
        gamma: term.gamma().clone(),
        delta: term.delta().clone(),
        projection: term.projection(),
        multiplicity: taylor.multiplicity,
    };
    let derivation = Derivation {
        term_index: index,
        characteristic: op.characteristic_polynomial(),
        gamma: term.gamma().clone(),
        taylor,
        forcing_poly: term.poly().clone(),
        steps,
    };
    Ok((part, derivation))
}

pub fn solve(op: &LinearOperator, forcing: &Forcing) -> Result<ParticularSolution> {
    Ok(solve_traced(op, forcing)?.0)
}

/// Like [`solve`], also returning one [`Derivation`] per forcing term.
pub fn solve_traced(
    op: &LinearOperator,
    forcing: &Forcing,
) -> Result<(ParticularSolution, Vec<Derivation>)> {
    let mut complex_parts = Vec::with_capacity(forcing.terms().len());
    let mut derivations = Vec::with_capacity(forcing.terms().len());
    let mut real_form = ExpTrigPoly::zero();
    for (index, term) in forcing.terms().iter().enumerate() {
        let (part, derivation) = derive(op, term, index)?;
        real_form = real_form + part.realize()?;
        complex_parts.push(part);
        derivations.push(derivation);
    }
    Ok((ParticularSolution { complex_parts, real_form }, derivations))
}

/// The real function represented by `Q(t)e^{γt+iδ}` under `projection`.
///
/// With `γ = α+βi` and `Q = q_r + i·q_i`:
/// `Re ↦ e^{αt}[q_r cos(βt+δ) − q_i sin(βt+δ)]`,
/// `Im ↦ e^{αt}[q_r sin(βt+δ) + q_i cos(βt+δ)]`,
/// and the unprojected form of a real exponent is `q_r e^{αt}`.
pub fn realize(
    q: &Polynomial,
    gamma: &ComplexRational,
    delta: &Rational,
    projection: Projection,
) -> Result<ExpTrigPoly> {
    let (alpha, beta) = (gamma.re.clone(), gamma.im.clone());
    let (qr, qi) = (q.real_part(), q.imag_part());
    let term = |p: Polynomial, kind| {
        ExpTrigPoly::term(p, alpha.clone(), beta.clone(), delta.clone(), kind)
            .map_err(|e| Error::RealFormUndefined(e.to_string()))
    };
    match projection {
        Projection::Complex => {
            if !gamma.is_real() {
                return Err(Error::RealFormUndefined(format!(
                    "exponent {gamma} is not real and no projection was given"
                )));
            }
            term(qr, TrigKind::Exp)
        }
        Projection::RealPart => Ok(term(qr, TrigKind::Cos)? + term(-qi, TrigKind::Sin)?),
        Projection::ImagPart => Ok(term(qr, TrigKind::Sin)? + term(qi, TrigKind::Cos)?),
    }
}

/// Real basis of the homogeneous solution space from user-supplied roots.
///
/// A nonreal root stands for itself and its conjugate. The roots are checked
/// exactly against the characteristic polynomial: every declared multiplicity
/// must be attained and together they must account for the full order.
pub fn homogeneous_basis(
    op: &LinearOperator,
    roots: &[(ComplexRational, usize)],
) -> Result<Vec<ExpTrigPoly>> {
    let mut seen = HashSet::new();
    let mut counted = 0;
    let mut basis = Vec::with_capacity(op.order());
    for (root, mult) in roots {
        let fail = |reason: String| Error::RootCheck { root: root.to_string(), reason };
        let root = if root.im.is_negative() { root.conj() } else { root.clone() };
        if *mult == 0 {
            return Err(fail("multiplicity must be at least 1".into()));
        }
        if !seen.insert(root.clone()) {
            return Err(fail("listed more than once (conjugates count as the same root)".into()));
        }
        let taylor = TaylorData::new(op, &root);
        if taylor.multiplicity == 0 {
            return Err(fail("not a root of the characteristic polynomial".into()));
        }
        if taylor.multiplicity < *mult {
            return Err(fail(format!(
                "declared multiplicity {mult} but actual multiplicity is {}",
                taylor.multiplicity
            )));
        }
        let one = ComplexRational::one();
        for j in 0..*mult {
            let power = Polynomial::monomial(one.clone(), j);
            if root.is_real() {
                basis.push(ExpTrigPoly::exp_term(power, root.re.clone())?);
            } else {
                for kind in [TrigKind::Cos, TrigKind::Sin] {
                    basis.push(ExpTrigPoly::term(
                        power.clone(),
                        root.re.clone(),
                        root.im.clone(),
                        Rational::zero(),
                        kind,
                    )?);
                }
            }
        }
        counted += if root.is_real() { *mult } else { 2 * mult };
    }
    if counted != op.order() {
        return Err(Error::RootCheck {
            root: "(all)".into(),
            reason: format!("roots account for {counted} solutions but the order is {}", op.order()),
        });
    }
    Ok(basis)
}
