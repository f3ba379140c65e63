//! The structured (JSON) document format.
//!
//! Every rational is a `"p/q"` string and every Gaussian rational an
//! `"a+bi"` string, so no host ever sees a float. Polynomials are coefficient
//! arrays, lowest power first.
//!
//! ```json
//! {
//!   "operator": ["9", "3", "-5", "1"],
//!   "forcing": [{"poly": [...], "alpha": "3", "beta": "0", "delta": "0", "projection": "complex"}],
//!   "solution": {
//!     "complex_parts": [{"q": [...], "gamma": "3", "delta": "0", "projection": "complex", "multiplicity": 2}],
//!     "real_form": [{"alpha": "3", "beta": "0", "delta": "0", "kind": "exp", "poly": [...]}]
//!   },
//!   "trace": [{"term": 0, "step": "multiplicity", "before": "γ = 3", "after": "m = 2"}]
//! }
//! ```

use serde::{Deserialize, Serialize};

use crate::arith::{ComplexRational, Rational};
use crate::diffop::LinearOperator;
use crate::error::{Error, Result};
use crate::exptrig::{ExpTrigPoly, TrigKind};
use crate::forcing::{Forcing, ForcingTerm, Projection};
use crate::poly::Polynomial;
use crate::solver::{ComplexPart, ParticularSolution};
use crate::verifier::Verdict;

use super::{ProblemStatement, TraceStep};

pub(crate) fn rational_strings(values: &[Rational]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

pub(crate) fn complex_strings(p: &Polynomial) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

fn rational(s: &str) -> Result<Rational> {
    s.parse().map_err(|_| Error::Document(format!("bad rational {s:?}")))
}

fn complex(s: &str) -> Result<ComplexRational> {
    s.parse().map_err(|_| Error::Document(format!("bad complex number {s:?}")))
}

fn polynomial(values: &[String]) -> Result<Polynomial> {
    Ok(Polynomial::new(values.iter().map(|s| complex(s)).collect::<Result<_>>()?))
}

fn projection(s: &str) -> Result<Projection> {
    Projection::parse(s).ok_or_else(|| Error::Document(format!("bad projection {s:?}")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForcingDoc {
    pub poly: Vec<String>,
    pub alpha: String,
    pub beta: String,
    pub delta: String,
    pub projection: String,
}

impl ForcingDoc {
    pub fn from_term(term: &ForcingTerm) -> Self {
        ForcingDoc {
            poly: complex_strings(term.poly()),
            alpha: term.gamma().re.to_string(),
            beta: term.gamma().im.to_string(),
            delta: term.delta().to_string(),
            projection: term.projection().as_str().into(),
        }
    }

    pub fn to_term(&self) -> Result<ForcingTerm> {
        let gamma = ComplexRational::new(rational(&self.alpha)?, rational(&self.beta)?);
        ForcingTerm::new(
            polynomial(&self.poly)?,
            gamma,
            rational(&self.delta)?,
            projection(&self.projection)?,
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub alpha: String,
    pub beta: String,
    pub delta: String,
    pub kind: String,
    pub poly: Vec<String>,
}

impl TermDoc {
    pub fn from_exptrig(e: &ExpTrigPoly) -> Vec<TermDoc> {
        e.terms()
            .map(|(key, poly)| TermDoc {
                alpha: key.alpha.to_string(),
                beta: key.beta.to_string(),
                delta: key.delta.to_string(),
                kind: key.kind.as_str().into(),
                poly: complex_strings(poly),
            })
            .collect()
    }

    pub fn to_exptrig(docs: &[TermDoc]) -> Result<ExpTrigPoly> {
        let mut sum = ExpTrigPoly::zero();
        for doc in docs {
            let kind = match doc.kind.as_str() {
                "exp" => TrigKind::Exp,
                "cos" => TrigKind::Cos,
                "sin" => TrigKind::Sin,
                other => return Err(Error::Document(format!("bad term kind {other:?}"))),
            };
            sum = sum
                + ExpTrigPoly::term(
                    polynomial(&doc.poly)?,
                    rational(&doc.alpha)?,
                    rational(&doc.beta)?,
                    rational(&doc.delta)?,
                    kind,
                )?;
        }
        Ok(sum)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexPartDoc {
    pub q: Vec<String>,
    pub gamma: String,
    pub delta: String,
    pub projection: String,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionDoc {
    pub complex_parts: Vec<ComplexPartDoc>,
    pub real_form: Vec<TermDoc>,
}

impl SolutionDoc {
    pub fn from_solution(sol: &ParticularSolution) -> Self {
        SolutionDoc {
            complex_parts: sol
                .complex_parts
                .iter()
                .map(|part| ComplexPartDoc {
                    q: complex_strings(&part.q),
                    gamma: part.gamma.to_string(),
                    delta: part.delta.to_string(),
                    projection: part.projection.as_str().into(),
                    multiplicity: part.multiplicity,
                })
                .collect(),
            real_form: TermDoc::from_exptrig(&sol.real_form),
        }
    }

    pub fn to_solution(&self) -> Result<ParticularSolution> {
        let complex_parts = self
            .complex_parts
            .iter()
            .map(|doc| {
                Ok(ComplexPart {
                    q: polynomial(&doc.q)?,
                    gamma: complex(&doc.gamma)?,
                    delta: rational(&doc.delta)?,
                    projection: projection(&doc.projection)?,
                    multiplicity: doc.multiplicity,
                })
            })
            .collect::<Result<_>>()?;
        Ok(ParticularSolution { complex_parts, real_form: TermDoc::to_exptrig(&self.real_form)? })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStepDoc {
    pub term: usize,
    pub step: String,
    pub before: String,
    pub after: String,
}

impl From<&TraceStep> for TraceStepDoc {
    fn from(step: &TraceStep) -> Self {
        TraceStepDoc {
            term: step.term,
            step: step.step.into(),
            before: step.before.clone(),
            after: step.after.clone(),
        }
    }
}

/// Result of a verification; `residual` is present only on failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictDoc {
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual: Option<Vec<TermDoc>>,
}

impl VerdictDoc {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }
}

impl From<&Verdict<ExpTrigPoly>> for VerdictDoc {
    fn from(v: &Verdict<ExpTrigPoly>) -> Self {
        match v {
            Verdict::Pass => VerdictDoc { verdict: "pass".into(), residual: None },
            Verdict::Fail(r) => VerdictDoc {
                verdict: "fail".into(),
                residual: Some(TermDoc::from_exptrig(r)),
            },
        }
    }
}

/// Top-level document: the problem plus whatever was computed for it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub operator: Vec<String>,
    pub forcing: Vec<ForcingDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solution: Option<SolutionDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub homogeneous_basis: Option<Vec<Vec<TermDoc>>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub trace: Vec<TraceStepDoc>,
}

impl Document {
    pub fn from_problem(ps: &ProblemStatement) -> Self {
        Document {
            operator: rational_strings(ps.operator.coeffs()),
            forcing: ps.forcing.terms().iter().map(ForcingDoc::from_term).collect(),
            solution: None,
            homogeneous_basis: None,
            trace: Vec::new(),
        }
    }

    pub fn with_solution(mut self, sol: &ParticularSolution) -> Self {
        self.solution = Some(SolutionDoc::from_solution(sol));
        self
    }

    pub fn with_trace(mut self, steps: &[TraceStep]) -> Self {
        self.trace = steps.iter().map(TraceStepDoc::from).collect();
        self
    }

    pub fn with_basis(mut self, basis: &[ExpTrigPoly]) -> Self {
        self.homogeneous_basis = Some(basis.iter().map(TermDoc::from_exptrig).collect());
        self
    }

    pub fn to_problem(&self) -> Result<ProblemStatement> {
        let operator = LinearOperator::new(
            self.operator.iter().map(|s| rational(s)).collect::<Result<_>>()?,
        )?;
        let terms = self.forcing.iter().map(ForcingDoc::to_term).collect::<Result<Vec<_>>>()?;
        Ok(ProblemStatement::new(operator, Forcing::new(terms)))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_problem;
    use crate::solver::solve;

    #[test]
    fn document_round_trip() {
        let ps = parse_problem("x'' - 2x' + 2x = t^2e^(t)sin(3t + 5) + 3e^(2t)").unwrap();
        let sol = solve(&ps.operator, &ps.forcing).unwrap();
        let doc = Document::from_problem(&ps).with_solution(&sol);
        let back = Document::from_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_problem().unwrap(), ps);
        assert_eq!(back.solution.unwrap().to_solution().unwrap(), sol);
    }

    #[test]
    fn rationals_are_strings() {
        let ps = parse_problem("x' = t/3").unwrap();
        let json = Document::from_problem(&ps).to_json();
        assert!(json.contains("\"1/3\""), "{json}");
        assert!(json.contains("\"projection\": \"complex\""), "{json}");
    }

    #[test]
    fn malformed_documents() {
        assert!(Document::from_json("{").is_err());
        let bad = r#"{"operator": ["1", "x"], "forcing": []}"#;
        assert!(Document::from_json(bad).unwrap().to_problem().is_err());
        let zero_order = r#"{"operator": ["1"], "forcing": []}"#;
        assert!(Document::from_json(zero_order).unwrap().to_problem().is_err());
    }
}
