//! Independent checks of claimed solutions.
//!
//! Complex solutions are checked through the product-rule route
//! ([`LinearOperator::apply_shifted`]) and real ones by differentiating the
//! expression directly, so neither check goes through the Taylor expansion
//! used by the solver.

use crate::arith::ComplexRational;
use crate::diffop::LinearOperator;
use crate::exptrig::ExpTrigPoly;
use crate::poly::Polynomial;

/// Outcome of a verification. A failure carries the exact residual
/// `P(d/dt)(candidate) − forcing`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<T> {
    Pass,
    Fail(T),
}

impl<T> Verdict<T> {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn residual(&self) -> Option<&T> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(r) => Some(r),
        }
    }
}

/// Checks that `Q(t)e^{γt}` solves `P(d/dt)z = R(t)e^{γt}`.
pub fn verify_complex(
    op: &LinearOperator,
    q: &Polynomial,
    gamma: &ComplexRational,
    r: &Polynomial,
) -> Verdict<Polynomial> {
    let residual = op.apply_shifted(q, gamma) - r;
    if residual.is_zero() {
        Verdict::Pass
    } else {
        Verdict::Fail(residual)
    }
}

/// Checks that the real expression `sol` solves `P(d/dt)x = forcing`.
pub fn verify_real(
    op: &LinearOperator,
    sol: &ExpTrigPoly,
    forcing: &ExpTrigPoly,
) -> Verdict<ExpTrigPoly> {
    let residual = op.apply_to_exptrig(sol) - forcing;
    if residual.is_zero() {
        Verdict::Pass
    } else {
        Verdict::Fail(residual)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;
    use crate::exptrig::TrigKind;

    fn z(s: &str) -> ComplexRational {
        s.parse().unwrap()
    }

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn p(cs: &[&str]) -> Polynomial {
        Polynomial::new(cs.iter().map(|s| z(s)).collect())
    }

    fn e2() -> LinearOperator {
        LinearOperator::from_ints(&[9, 3, -5, 1]).unwrap()
    }

    fn e2_q() -> Polynomial {
        p(&["0", "0", "-15/1024", "5/256", "-5/256", "1/64", "-1/96", "1/168"])
    }

    #[test]
    fn complex_fixtures() {
        let t5 = Polynomial::monomial(z("1"), 5);
        assert!(verify_complex(&e2(), &e2_q(), &z("3"), &t5).is_pass());

        let perturbed = e2_q() + Polynomial::monomial(z("1/1024"), 4);
        let verdict = verify_complex(&e2(), &perturbed, &z("3"), &t5);
        assert!(!verdict.is_pass());
        assert!(!verdict.residual().unwrap().is_zero());

        let e1 = LinearOperator::from_ints(&[2, -2, 1]).unwrap();
        let e1_q = p(&["7/64", "-3/16i", "-1/8"]);
        assert!(verify_complex(&e1, &e1_q, &z("1+3i"), &Polynomial::monomial(z("1"), 2)).is_pass());
    }

    #[test]
    fn real_fixtures() {
        let v1 = LinearOperator::from_ints(&[2, 2, 1]).unwrap();
        let sol = ExpTrigPoly::term(p(&["0", "-1/2"]), q("-1"), q("1"), q("0"), TrigKind::Cos)
            .unwrap();
        let forcing = ExpTrigPoly::term(p(&["1"]), q("-1"), q("1"), q("0"), TrigKind::Sin).unwrap();
        assert!(verify_real(&v1, &sol, &forcing).is_pass());
        assert!(verify_real(&e2(), &ExpTrigPoly::zero(), &ExpTrigPoly::zero()).is_pass());
    }

    #[test]
    fn residual_readded_passes() {
        let t5 = Polynomial::monomial(z("1"), 5);
        let wrong = e2_q().scale(&z("2"));
        let Verdict::Fail(residual) = verify_complex(&e2(), &wrong, &z("3"), &t5) else {
            panic!("doubled solution must fail");
        };
        assert!(verify_complex(&e2(), &wrong, &z("3"), &(&t5 + &residual)).is_pass());
    }
}
