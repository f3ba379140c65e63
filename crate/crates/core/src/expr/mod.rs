//! Text front end: parsing problem statements and rendering values as plain
//! text, LaTeX or structured JSON documents.

mod document;
mod parse;
mod render;
mod trace;

pub use document::{
    ComplexPartDoc, Document, ForcingDoc, SolutionDoc, TermDoc, TraceStepDoc, VerdictDoc,
};
pub use parse::{parse_exptrig, parse_operator, parse_polynomial, parse_problem};
pub use render::{
    derivative_symbol, exptrig_latex, exptrig_plain, forcing_latex, forcing_plain,
    operator_latex, operator_plain, polynomial_latex, polynomial_plain, polynomial_plain_in,
    reduced_equation, scalar_list,
};
pub use trace::{emit_trace, TraceStep};

use crate::diffop::LinearOperator;
use crate::exptrig::ExpTrigPoly;
use crate::forcing::Forcing;
use crate::poly::Polynomial;
use crate::solver::ParticularSolution;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Format {
    #[default]
    Plain,
    Latex,
    Structured,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "plain" => Ok(Format::Plain),
            "latex" => Ok(Format::Latex),
            "structured" => Ok(Format::Structured),
            other => Err(format!("unknown format {other:?}")),
        }
    }
}

/// Rendering and tracing flags attached to a problem.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Options {
    pub format: Format,
    pub trace: bool,
}

/// A parsed equation `P(d/dt)x = forcing`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemStatement {
    pub operator: LinearOperator,
    pub forcing: Forcing,
    pub options: Options,
}

impl ProblemStatement {
    pub fn new(operator: LinearOperator, forcing: Forcing) -> Self {
        ProblemStatement { operator, forcing, options: Options::default() }
    }

    /// True when the right-hand side is zero.
    pub fn is_homogeneous(&self) -> bool {
        self.forcing.is_homogeneous()
    }
}

/// Deterministic rendering in each output format.
pub trait Render {
    fn render(&self, format: Format) -> String;
}

fn json(value: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(value).expect("documents serialize")
}

impl Render for Polynomial {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Plain => polynomial_plain(self),
            Format::Latex => polynomial_latex(self),
            Format::Structured => json(&document::complex_strings(self)),
        }
    }
}

impl Render for LinearOperator {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Plain => operator_plain(self),
            Format::Latex => operator_latex(self),
            Format::Structured => json(&document::rational_strings(self.coeffs())),
        }
    }
}

impl Render for ExpTrigPoly {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Plain => exptrig_plain(self),
            Format::Latex => exptrig_latex(self),
            Format::Structured => json(&TermDoc::from_exptrig(self)),
        }
    }
}

impl Render for ParticularSolution {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Structured => json(&SolutionDoc::from_solution(self)),
            other => self.real_form.render(other),
        }
    }
}

impl Render for ProblemStatement {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Plain => {
                format!("{} = {}", operator_plain(&self.operator), forcing_plain(&self.forcing))
            }
            Format::Latex => {
                format!("{} = {}", operator_latex(&self.operator), forcing_latex(&self.forcing))
            }
            Format::Structured => json(&Document::from_problem(self)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn problem_round_trip_fixtures() {
        for text in [
            "x''' - 5x'' + 3x' + 9x = t^5e^(3t)",
            "x'' - 2x' + 2x = t^2e^(t)sin(3t + 5)",
            "x'' + 2x' + 2x = e^(-t)sin(t)",
            "x' = 0",
            "1/2x^(6) - x = (t^2/3 - 1)e^(-1/2t)cos(2/3t - 7/5) + 4t",
        ] {
            let ps = parse_problem(text).unwrap();
            let rendered = ps.render(Format::Plain);
            assert_eq!(parse_problem(&rendered).unwrap(), ps, "{rendered}");
        }
        let ps = parse_problem("x''' - 5*x'' + 3*x' + 9*x = t^5 * e^(3t)").unwrap();
        assert_eq!(ps.render(Format::Plain), "x''' - 5x'' + 3x' + 9x = t^5e^(3t)");
    }

    #[test]
    fn formats_parse() {
        assert_eq!("latex".parse::<Format>(), Ok(Format::Latex));
        assert!("html".parse::<Format>().is_err());
    }
}
