//! `expshift`: solve, verify and inspect constant-coefficient linear ODEs.
//!
//! ```text
//! expshift solve "x''' - 5x'' + 3x' + 9x = t^5e^(3t)"
//! expshift solve --format latex --trace --input problem.txt
//! expshift verify "x'' - 2x' + 2x = t^2e^(t)sin(3t + 5)" --solution answer.txt
//! expshift homogeneous "x''' - 5x'' + 3x' + 9x" --roots 3:2,-1:1
//! ```
//!
//! Exit status is 0 on success, 1 when a verification fails and 2 for bad
//! input.

use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use expshift::expr::{
    emit_trace, parse_exptrig, parse_problem, Document, Format, ProblemStatement, Render,
    TermDoc, VerdictDoc,
};
use expshift::solver::{homogeneous_basis, solve_traced};
use expshift::verifier::verify_real;
use expshift::{ComplexRational, Error, ExpTrigPoly};

#[derive(Parser)]
#[command(name = "expshift", version, about = "Exact particular solutions of linear ODEs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find a particular solution.
    Solve {
        #[command(flatten)]
        input: Input,
        /// Also print the general solution for these characteristic roots.
        #[arg(long)]
        roots: Option<String>,
        /// Print the derivation steps.
        #[arg(long)]
        trace: bool,
    },
    /// Check a claimed solution exactly; prints the residual on failure.
    Verify {
        #[command(flatten)]
        input: Input,
        /// File holding the candidate, as plain text or a structured document.
        #[arg(long, value_name = "PATH")]
        solution: String,
    },
    /// Real basis of the homogeneous solutions from declared roots.
    Homogeneous {
        #[command(flatten)]
        input: Input,
        /// Roots as `root[:multiplicity]`, comma separated, e.g. `3:2,-1,1+i`.
        #[arg(long)]
        roots: String,
    },
}

#[derive(Args)]
struct Input {
    /// The problem text, or `-` for standard input.
    problem: Option<String>,
    /// Read the problem from a file instead.
    #[arg(long, value_name = "PATH", conflicts_with = "problem")]
    input: Option<String>,
    /// Output format: plain, latex or structured.
    #[arg(long, default_value = "plain")]
    format: Format,
}

enum Failure {
    Input(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn read_source(path: Option<&str>) -> Result<String, Failure> {
    let result = match path {
        None | Some("-") => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text).map(|_| text)
        }
        Some(path) => fs::read_to_string(path),
    };
    result.map_err(|e| Failure::Input(format!("cannot read input: {e}")))
}

impl Input {
    fn text(&self) -> Result<String, Failure> {
        match (&self.input, self.problem.as_deref()) {
            (Some(path), _) => read_source(Some(path)),
            (None, Some("-")) | (None, None) => read_source(None),
            (None, Some(text)) => Ok(text.to_string()),
        }
    }
}

fn is_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

/// Parses plain text with a caret under the offending position on error.
fn parse_text(text: &str) -> Result<ProblemStatement, Failure> {
    let text = text.trim();
    parse_problem(text).map_err(|e| {
        Failure::Input(format!("{e}\n  {text}\n  {}^", " ".repeat(text[..e.pos].chars().count())))
    })
}

fn problem(text: &str) -> Result<ProblemStatement, Failure> {
    if is_json(text) {
        Ok(Document::from_json(text)?.to_problem()?)
    } else {
        parse_text(text)
    }
}

fn parse_roots(list: &str) -> Result<Vec<(ComplexRational, usize)>, Failure> {
    list.split(',')
        .map(|item| {
            let item = item.trim();
            let (root, mult) = match item.rsplit_once(':') {
                Some((root, mult)) => (root, mult.trim()),
                None => (item, "1"),
            };
            let root = root.trim().parse().map_err(|_| Failure::Input(format!("bad root {root:?}")))?;
            let mult = mult.parse().map_err(|_| Failure::Input(format!("bad multiplicity {mult:?}")))?;
            Ok((root, mult))
        })
        .collect()
}

fn general_solution(basis: &[ExpTrigPoly], particular: &ExpTrigPoly, format: Format) -> String {
    let mut parts: Vec<String> = basis
        .iter()
        .enumerate()
        .map(|(k, f)| match format {
            Format::Latex => format!("c_{{{}}}{}", k + 1, f.render(format)),
            _ => format!("c{}*{}", k + 1, f.render(format)),
        })
        .collect();
    if !particular.is_zero() {
        parts.push(particular.render(format));
    }
    parts.join(" + ")
}

fn solve(input: &Input, roots: Option<&str>, trace: bool) -> Result<(), Failure> {
    let ps = problem(&input.text()?)?;
    let (sol, derivations) = solve_traced(&ps.operator, &ps.forcing)?;
    let steps = if trace { emit_trace(&ps.operator, &derivations) } else { Vec::new() };
    let basis = match roots {
        Some(list) => Some(homogeneous_basis(&ps.operator, &parse_roots(list)?)?),
        None => None,
    };
    if input.format == Format::Structured {
        let mut doc = Document::from_problem(&ps).with_solution(&sol).with_trace(&steps);
        if let Some(basis) = &basis {
            doc = doc.with_basis(basis);
        }
        println!("{}", doc.to_json());
        return Ok(());
    }
    for s in &steps {
        println!("[{}] {}: {}  =>  {}", s.term, s.step, s.before, s.after);
    }
    match basis {
        Some(basis) => {
            println!("particular: {}", sol.render(input.format));
            println!("general: {}", general_solution(&basis, &sol.real_form, input.format));
        }
        None => println!("{}", sol.render(input.format)),
    }
    Ok(())
}

fn candidate(path: &str) -> Result<ExpTrigPoly, Failure> {
    let text = read_source(Some(path))?;
    if !is_json(&text) {
        return parse_exptrig(text.trim())
            .map_err(|e| Failure::Input(format!("solution: {e}")));
    }
    let doc = Document::from_json(&text)?;
    let sol = doc
        .solution
        .ok_or_else(|| Failure::Input("solution document has no \"solution\" field".into()))?;
    Ok(TermDoc::to_exptrig(&sol.real_form)?)
}

fn verify(input: &Input, solution: &str) -> Result<(), Failure> {
    let ps = problem(&input.text()?)?;
    let verdict = verify_real(&ps.operator, &candidate(solution)?, &ps.forcing.to_exptrig());
    match input.format {
        Format::Structured => println!("{}", VerdictDoc::from(&verdict).to_json()),
        format => match verdict.residual() {
            None => println!("pass"),
            Some(r) => {
                println!("fail");
                println!("residual: {}", r.render(format));
            }
        },
    }
    if verdict.is_pass() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn homogeneous(input: &Input, roots: &str) -> Result<(), Failure> {
    let text = input.text()?;
    let ps = if is_json(&text) || text.contains('=') {
        problem(&text)?
    } else {
        parse_text(&format!("{} = 0", text.trim()))?
    };
    let basis = homogeneous_basis(&ps.operator, &parse_roots(roots)?)?;
    match input.format {
        Format::Structured => println!("{}", Document::from_problem(&ps).with_basis(&basis).to_json()),
        format => {
            for f in &basis {
                println!("{}", f.render(format));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Solve { input, roots, trace } => solve(input, roots.as_deref(), *trace),
        Command::Verify { input, solution } => verify(input, solution),
        Command::Homogeneous { input, roots } => homogeneous(input, roots),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
