//! Plain-text and LaTeX rendering.
//!
//! Plain text uses `p/q` coefficients, descending powers and implicit
//! multiplication, and is accepted back by the parser. A complex coefficient
//! `a+bi` of `tᵏ` is written as the two summands `a·tᵏ` and `b·i·tᵏ`.

use crate::arith::{ComplexRational, Rational};
use crate::diffop::LinearOperator;
use crate::exptrig::{ExpTrigPoly, TermKey, TrigKind};
use crate::forcing::Forcing;
use crate::poly::Polynomial;

/// A signed summand: `negative` carries the sign, `body` the magnitude.
struct Summand {
    negative: bool,
    body: String,
}

fn join(summands: &[Summand]) -> String {
    if summands.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, s) in summands.iter().enumerate() {
        match (i, s.negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&s.body);
    }
    out
}

fn plain_monomial(var: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    }
}

fn latex_monomial(var: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{{{k}}}"),
    }
}

/// `|c|·unit·mono` with the denominator written last, e.g. `5t^4/16`, `it/2`.
fn plain_scaled(c: &Rational, unit: &str, mono: &str) -> Summand {
    let abs = c.abs();
    let numer = abs.numer().to_string();
    let factors = format!("{unit}{mono}");
    let body = if factors.is_empty() {
        numer
    } else if numer == "1" {
        factors
    } else {
        format!("{numer}{factors}")
    };
    let body = if abs.is_integer() { body } else { format!("{body}/{}", abs.denom()) };
    Summand { negative: c.is_negative(), body }
}

fn latex_scaled(c: &Rational, unit: &str, mono: &str) -> Summand {
    let abs = c.abs();
    let numer = abs.numer().to_string();
    let factors = format!("{unit}{mono}");
    let top = if factors.is_empty() {
        numer
    } else if numer == "1" {
        factors
    } else {
        format!("{numer}{factors}")
    };
    let body = if abs.is_integer() {
        top
    } else {
        format!("\\frac{{{top}}}{{{}}}", abs.denom())
    };
    Summand { negative: c.is_negative(), body }
}

fn poly_summands(
    p: &Polynomial,
    var: &str,
    monomial: fn(&str, usize) -> String,
    scaled: fn(&Rational, &str, &str) -> Summand,
) -> Vec<Summand> {
    let mut out = Vec::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        let mono = monomial(var, k);
        if !c.re.is_zero() {
            out.push(scaled(&c.re, "", &mono));
        }
        if !c.im.is_zero() {
            out.push(scaled(&c.im, "i", &mono));
        }
    }
    out
}

pub fn polynomial_plain(p: &Polynomial) -> String {
    polynomial_plain_in(p, "t")
}

pub fn polynomial_plain_in(p: &Polynomial, var: &str) -> String {
    join(&poly_summands(p, var, plain_monomial, plain_scaled))
}

pub fn polynomial_latex(p: &Polynomial) -> String {
    join(&poly_summands(p, "t", latex_monomial, latex_scaled))
}

/// `x`, `x'`, …, `x''''`, then `x^(k)`.
pub fn derivative_symbol(name: &str, k: usize) -> String {
    if k <= 4 {
        format!("{name}{}", "'".repeat(k))
    } else {
        format!("{name}^({k})")
    }
}

fn latex_derivative_symbol(k: usize) -> String {
    if k <= 3 {
        format!("x{}", "'".repeat(k))
    } else {
        format!("x^{{({k})}}")
    }
}

/// `x''' - 5x'' + 3x' + 9x`; coefficients precede the derivative.
pub fn operator_plain(op: &LinearOperator) -> String {
    let summands: Vec<_> = op
        .coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, a)| !a.is_zero())
        .map(|(k, a)| {
            let abs = a.abs();
            let sym = derivative_symbol("x", k);
            let body = if abs.is_one() { sym } else { format!("{abs}{sym}") };
            Summand { negative: a.is_negative(), body }
        })
        .collect();
    join(&summands)
}

pub fn operator_latex(op: &LinearOperator) -> String {
    let summands: Vec<_> = op
        .coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, a)| !a.is_zero())
        .map(|(k, a)| {
            let abs = a.abs();
            let sym = latex_derivative_symbol(k);
            let body = if abs.is_one() { sym } else { format!("{}{sym}", abs.to_latex()) };
            Summand { negative: a.is_negative(), body }
        })
        .collect();
    join(&summands)
}

/// `ct` for a rational `c`: `t`, `-t`, `3t`, `1/2t`.
fn plain_linear(c: &Rational) -> String {
    if c.is_one() {
        "t".into()
    } else if (-c).is_one() {
        "-t".into()
    } else {
        format!("{c}t")
    }
}

fn latex_linear(c: &Rational) -> String {
    if c.is_one() {
        "t".into()
    } else if (-c).is_one() {
        "-t".into()
    } else {
        format!("{}t", c.to_latex())
    }
}

fn plain_phase(d: &Rational) -> String {
    if d.is_zero() {
        String::new()
    } else if d.is_negative() {
        format!(" - {}", d.abs())
    } else {
        format!(" + {d}")
    }
}

fn latex_phase(d: &Rational) -> String {
    if d.is_zero() {
        String::new()
    } else if d.is_negative() {
        format!(" - {}", d.abs().to_latex())
    } else {
        format!(" + {}", d.to_latex())
    }
}

fn plain_trig(key: &TermKey) -> String {
    match key.kind {
        TrigKind::Exp => String::new(),
        kind => format!("{}({}{})", kind.as_str(), plain_linear(&key.beta), plain_phase(&key.delta)),
    }
}

fn latex_trig(key: &TermKey) -> String {
    match key.kind {
        TrigKind::Exp => String::new(),
        kind => format!(
            "\\{}({}{})",
            kind.as_str(),
            latex_linear(&key.beta),
            latex_phase(&key.delta)
        ),
    }
}

/// Polynomial factor in front of other factors: a lone `±1` disappears, a
/// lone monomial keeps its sign outside, anything longer is parenthesized.
/// A bare polynomial (`rest` empty) stays a list of summands so its signs
/// join the surrounding sum.
fn factor_summand(summands: Vec<Summand>, rest: &str, open: &str, close: &str) -> Vec<Summand> {
    if rest.is_empty() {
        return summands;
    }
    if summands.len() == 1 {
        let s = &summands[0];
        if s.body == "1" {
            return vec![Summand { negative: s.negative, body: rest.to_string() }];
        }
        let body = if !s.body.contains('/') && !s.body.contains("\\frac") {
            format!("{}{rest}", s.body)
        } else {
            format!("{open}{}{close}{rest}", s.body)
        };
        return vec![Summand { negative: s.negative, body }];
    }
    vec![Summand { negative: false, body: format!("{open}{}{close}{rest}", join(&summands)) }]
}

/// Plain form, e.g. `(t^7/168 - t^6/96)e^(3t) - (t/2)e^(-t)cos(t)`.
pub fn exptrig_plain(e: &ExpTrigPoly) -> String {
    let summands: Vec<_> = e
        .terms()
        .flat_map(|(key, poly)| {
            let exp = if key.alpha.is_zero() {
                String::new()
            } else {
                format!("e^({})", plain_linear(&key.alpha))
            };
            let rest = format!("{exp}{}", plain_trig(key));
            factor_summand(
                poly_summands(poly, "t", plain_monomial, plain_scaled),
                &rest,
                "(",
                ")",
            )
        })
        .collect();
    join(&summands)
}

/// LaTeX form. Terms sharing an exponential factor `e^{αt}` are collected
/// into `e^{αt}\left[ … \right]`.
pub fn exptrig_latex(e: &ExpTrigPoly) -> String {
    let mut groups: Vec<(Rational, Vec<(&TermKey, &Polynomial)>)> = Vec::new();
    for (key, poly) in e.terms() {
        match groups.last_mut() {
            Some((alpha, items)) if *alpha == key.alpha => items.push((key, poly)),
            _ => groups.push((key.alpha.clone(), vec![(key, poly)])),
        }
    }
    let latex_poly = |p: &Polynomial| poly_summands(p, "t", latex_monomial, latex_scaled);
    let mut summands = Vec::new();
    for (alpha, items) in groups {
        let exp = if alpha.is_zero() {
            String::new()
        } else {
            format!("e^{{{}}}", latex_linear(&alpha))
        };
        if items.len() == 1 || alpha.is_zero() {
            for (key, poly) in items {
                let rest = format!("{exp}{}", latex_trig(key));
                summands.extend(factor_summand(latex_poly(poly), &rest, "\\left(", "\\right)"));
            }
            continue;
        }
        let inner: Vec<_> = items
            .into_iter()
            .flat_map(|(key, poly)| {
                factor_summand(latex_poly(poly), &latex_trig(key), "\\left(", "\\right)")
            })
            .collect();
        summands.push(Summand {
            negative: false,
            body: format!("{exp}\\left[{}\\right]", join(&inner)),
        });
    }
    join(&summands)
}

pub fn forcing_plain(f: &Forcing) -> String {
    exptrig_plain(&f.to_exptrig())
}

pub fn forcing_latex(f: &Forcing) -> String {
    exptrig_latex(&f.to_exptrig())
}

/// `[0, 0, 4, 1]`.
pub fn scalar_list(values: &[ComplexRational]) -> String {
    let items: Vec<_> = values.iter().map(ToString::to_string).collect();
    format!("[{}]", items.join(", "))
}

/// `Σ cₖ Q⁽ᵏ⁾ = R` with zero coefficients dropped, highest derivative first,
/// e.g. `Q'' + 6i*Q' - 8*Q = t^2`.
pub fn reduced_equation(coeffs: &[ComplexRational], rhs: &Polynomial) -> String {
    let summands: Vec<_> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            let sym = derivative_symbol("Q", k);
            let (negative, scale) = if c.is_real() {
                (c.re.is_negative(), c.re.abs().to_string())
            } else if c.re.is_zero() {
                let abs = c.im.abs();
                let scale = if abs.is_one() { "i".to_string() } else { format!("{abs}i") };
                (c.im.is_negative(), scale)
            } else {
                (false, format!("({c})"))
            };
            let body = if scale == "1" { sym } else { format!("{scale}*{sym}") };
            Summand { negative, body }
        })
        .collect();
    format!("{} = {}", join(&summands), polynomial_plain(rhs))
}
