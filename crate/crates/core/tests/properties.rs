mod common;

use std::collections::HashMap;

use expshift::expr::{Format, Render};
use expshift::solver::{particular_solution, realize, solve, solve_poly_ode, triangular_system};
use expshift::verifier::{verify_complex, verify_real};
use expshift::{ComplexRational, Forcing, Polynomial, Projection, Rational};
use rand::Rng;

const CASES: usize = 300;

fn binomial(n: usize, k: usize) -> Rational {
    (0..k).fold(Rational::one(), |acc, i| {
        (acc * Rational::from((n - i) as i64)).checked_div(&Rational::from(i as i64 + 1)).unwrap()
    })
}

#[test]
fn taylor_coefficients_match_binomial_expansion() {
    let mut rng = common::rng(11);
    for _ in 0..CASES {
        let p = common::complex_poly(&mut rng, 6);
        if p.is_zero() {
            continue;
        }
        let g = common::complex(&mut rng);
        let deg = p.degree().unwrap();
        // p(s + γ) = Σⱼ aⱼ Σₖ C(j,k) γ^{j−k} s^k
        let expected: Vec<ComplexRational> = (0..=deg)
            .map(|k| {
                (k..=deg).fold(ComplexRational::zero(), |acc, j| {
                    acc + p.coeff(j) * g.pow((j - k) as u32).scale(&binomial(j, k))
                })
            })
            .collect();
        assert_eq!(p.taylor_coeffs_at(&g).unwrap(), expected);
    }
    assert!(Polynomial::zero().taylor_coeffs_at(&ComplexRational::one()).is_err());
}

#[test]
fn calculus_identities() {
    let mut rng = common::rng(12);
    for _ in 0..CASES {
        let p = common::complex_poly(&mut rng, 6);
        assert_eq!(p.antiderivative_zero_const().derivative(), p);
        let constant = Polynomial::constant(p.coeff(0));
        assert_eq!(p.derivative().antiderivative_zero_const(), &p - &constant);
        assert_eq!(p.nth_derivative(7), Polynomial::zero());
    }
}

#[test]
fn evaluation_is_a_ring_homomorphism() {
    let mut rng = common::rng(13);
    for _ in 0..CASES {
        let (a, b) = (common::complex_poly(&mut rng, 4), common::complex_poly(&mut rng, 4));
        let x = common::complex(&mut rng);
        assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
        assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        assert_eq!((-&a).eval(&x), -a.eval(&x));
    }
}

#[test]
fn field_axioms() {
    let mut rng = common::rng(14);
    for _ in 0..1000 {
        let (a, b, c) =
            (common::complex(&mut rng), common::complex(&mut rng), common::complex(&mut rng));
        assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        assert_eq!(&a * &b, &b * &a);
        assert_eq!(&a - &a, ComplexRational::zero());
        assert_eq!((&a * &b).conj(), a.conj() * b.conj());
        assert_eq!(ComplexRational::real(a.norm_sq()), &a * &a.conj());
        if !a.is_zero() {
            assert_eq!(&a * &a.recip().unwrap(), ComplexRational::one());
            assert_eq!((&b * &a).checked_div(&a).unwrap(), b);
        } else {
            assert!(b.checked_div(&a).is_err());
        }
        let text = a.to_string();
        assert_eq!(text.parse::<ComplexRational>().unwrap(), a, "{text}");
    }
}

#[test]
fn rationals_are_canonical() {
    let mut rng = common::rng(15);
    for _ in 0..1000 {
        let (n, d) = (rng.gen_range(-50i64..=50), rng.gen_range(1i64..=50));
        let k = rng.gen_range(1i64..=9);
        let r = Rational::new(n, d).unwrap();
        assert_eq!(Rational::new(n * k, d * k).unwrap(), r);
        assert_eq!(Rational::new(-n, -d).unwrap(), r);
        assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
        assert!(!r.denom().to_string().starts_with('-'));
    }
    assert!(Rational::new(1, 0).is_err());
}

#[test]
#[allow(clippy::needless_range_loop)]
fn triangular_system_matches_direct_differentiation() {
    let mut rng = common::rng(16);
    for _ in 0..CASES {
        let len = rng.gen_range(1..=6);
        let c: Vec<ComplexRational> = (0..len).map(|_| common::complex(&mut rng)).collect();
        let d = rng.gen_range(0..=6);
        let matrix = triangular_system(&c, d);
        for i in 0..=d {
            // Σⱼ cⱼ D^j t^{d−i}, read off at t^{d−l}
            let mono = Polynomial::monomial(ComplexRational::one(), d - i);
            let image = c.iter().enumerate().fold(Polynomial::zero(), |acc, (j, cj)| {
                acc + mono.nth_derivative(j).scale(cj)
            });
            for l in 0..=d {
                assert_eq!(matrix[l][i], image.coeff(d - l), "c {c:?} d {d} l {l} i {i}");
            }
        }
    }
}

#[test]
fn polynomial_solve_satisfies_its_equation() {
    let mut rng = common::rng(17);
    for _ in 0..CASES {
        let len = rng.gen_range(1..=6);
        let c: Vec<ComplexRational> = (0..len).map(|_| common::complex(&mut rng)).collect();
        let r = common::complex_poly(&mut rng, 6);
        match solve_poly_ode(&c, &r) {
            Ok(q) => {
                let lhs = c.iter().enumerate().fold(Polynomial::zero(), |acc, (j, cj)| {
                    acc + q.nth_derivative(j).scale(cj)
                });
                assert_eq!(lhs, r);
            }
            Err(_) => assert!(c.iter().all(ComplexRational::is_zero)),
        }
    }
}

#[test]
fn superposition() {
    let mut rng = common::rng(18);
    for _ in 0..100 {
        let op = common::operator(&mut rng, 5);
        let (f, g) = (common::forcing(&mut rng, 3), common::forcing(&mut rng, 3));
        let both = Forcing::new(f.terms().iter().chain(g.terms()).cloned());
        let sum = solve(&op, &f).unwrap().real_form + solve(&op, &g).unwrap().real_form;
        assert_eq!(solve(&op, &both).unwrap().real_form, sum);
    }
}

#[test]
fn real_and_complex_operator_actions_agree() {
    let mut rng = common::rng(19);
    for _ in 0..CASES {
        let op = common::operator(&mut rng, 6);
        let g = common::gamma(&mut rng);
        let (q, projection) = if g.is_real() {
            let degree = rng.gen_range(0..=5);
            (common::real_poly(&mut rng, degree), Projection::Complex)
        } else {
            let p = if rng.gen_bool(0.5) { Projection::RealPart } else { Projection::ImagPart };
            (common::complex_poly(&mut rng, 5), p)
        };
        let delta = if g.is_real() { Rational::zero() } else { common::rational(&mut rng) };
        let real = realize(&q, &g, &delta, projection).unwrap();
        let image = realize(&op.apply_shifted(&q, &g), &g, &delta, projection).unwrap();
        assert_eq!(op.apply_to_exptrig(&real), image);
    }
}

#[test]
fn real_and_complex_verdicts_agree() {
    let mut rng = common::rng(20);
    let mut failures = 0;
    for n in 0..CASES {
        let (op, term) = common::instance(&mut rng, n);
        let mut part = particular_solution(&op, &term).unwrap();
        if rng.gen_bool(0.5) {
            let noise = if term.gamma().is_real() {
                let degree = rng.gen_range(0..=3);
                common::real_poly(&mut rng, degree)
            } else {
                common::complex_poly(&mut rng, 3)
            };
            part.q = &part.q + &noise;
        }
        let complex = verify_complex(&op, &part.q, &part.gamma, term.poly());
        let real = verify_real(&op, &part.realize().unwrap(), &term.to_exptrig());
        assert_eq!(complex.is_pass(), real.is_pass(), "case {n}");
        failures += usize::from(!real.is_pass());
    }
    assert!(failures > 0);
}

#[test]
fn rendering_is_injective() {
    let mut rng = common::rng(21);
    let mut seen: HashMap<(Format, String), Polynomial> = HashMap::new();
    for _ in 0..1000 {
        let p = common::complex_poly(&mut rng, 3);
        for format in [Format::Plain, Format::Latex, Format::Structured] {
            if let Some(previous) = seen.insert((format, p.render(format)), p.clone()) {
                assert_eq!(previous, p);
            }
        }
    }
}

#[test]
fn solver_is_deterministic() {
    let mut rng = common::rng(22);
    for _ in 0..50 {
        let op = common::operator(&mut rng, 6);
        let f = common::forcing(&mut rng, 3);
        let a = solve(&op, &f).unwrap();
        let b = solve(&op, &f).unwrap();
        for format in [Format::Plain, Format::Latex, Format::Structured] {
            assert_eq!(a.render(format), b.render(format));
        }
    }
}
