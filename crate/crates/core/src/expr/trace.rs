use serde::Serialize;

use crate::diffop::LinearOperator;
use crate::solver::Derivation;

use super::render::{
    derivative_symbol, operator_plain, polynomial_plain, polynomial_plain_in, reduced_equation,
    scalar_list,
};

/// One named step of a derivation, with rendered expressions before and
/// after the step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    /// Index of the forcing term this step belongs to.
    pub term: usize,
    pub step: &'static str,
    pub before: String,
    pub after: String,
}

/// Steps per forcing term: characteristic polynomial, Taylor coefficients,
/// multiplicity, the reduced solve, then one step per integration.
pub fn emit_trace(op: &LinearOperator, derivations: &[Derivation]) -> Vec<TraceStep> {
    let mut steps = Vec::new();
    for d in derivations {
        let term = d.term_index;
        let gamma = format!("γ = {}", d.gamma);
        let m = d.taylor.multiplicity;
        steps.push(TraceStep {
            term,
            step: "characteristic_polynomial",
            before: operator_plain(op),
            after: polynomial_plain_in(&d.characteristic, "λ"),
        });
        steps.push(TraceStep {
            term,
            step: "taylor_coefficients",
            before: gamma.clone(),
            after: scalar_list(&d.taylor.coeffs),
        });
        steps.push(TraceStep {
            term,
            step: "multiplicity",
            before: gamma,
            after: format!("m = {m}"),
        });
        steps.push(TraceStep {
            term,
            step: "reduced_solve",
            before: reduced_equation(&d.taylor.coeffs, &d.forcing_poly),
            after: format!("{} = {}", derivative_symbol("Q", m), polynomial_plain(&d.steps.reduced)),
        });
        let mut previous = (m, &d.steps.reduced);
        for poly in &d.steps.integrations {
            let order = previous.0 - 1;
            steps.push(TraceStep {
                term,
                step: "integration",
                before: format!("{} = {}", derivative_symbol("Q", previous.0), polynomial_plain(previous.1)),
                after: format!("{} = {}", derivative_symbol("Q", order), polynomial_plain(poly)),
            });
            previous = (order, poly);
        }
    }
    steps
}
