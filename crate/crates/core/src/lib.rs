//! Exact particular solutions of constant-coefficient linear ODEs
//! `P(d/dt)x = f` whose forcing `f` is a sum of polynomial × exponential ×
//! sine/cosine products.
//!
//! Each forcing term `R(t)e^{γt+iδ}` is reduced to a polynomial equation for
//! `Q` in a solution `Q(t)e^{γt+iδ}` by expanding the characteristic
//! polynomial about `γ`; that equation is solved with a lower-triangular
//! system in exact rational arithmetic. Every answer can be checked with the
//! independent [`verifier`].
//!
//! ```
//! use expshift::expr::{parse_problem, Format, Render};
//! use expshift::solver::solve;
//!
//! let ps = parse_problem("x'' + 2x' + 2x = e^(-t) sin(t)").unwrap();
//! let sol = solve(&ps.operator, &ps.forcing).unwrap();
//! assert_eq!(sol.render(Format::Plain), "-(t/2)e^(-t)cos(t)");
//! ```

pub mod arith;
pub mod diffop;
pub mod error;
pub mod expr;
pub mod exptrig;
pub mod forcing;
pub mod poly;
pub mod solver;
pub mod verifier;

pub use arith::{ComplexRational, Rational};
pub use diffop::LinearOperator;
pub use error::{Error, ParseError, Result};
pub use exptrig::{ExpTrigPoly, TermKey, TrigKind};
pub use forcing::{Forcing, ForcingTerm, Projection};
pub use poly::Polynomial;
pub use solver::{ComplexPart, ParticularSolution};
pub use verifier::Verdict;
