#![allow(dead_code)]

//! Seeded random instances shared by the integration suites.

use expshift::{ComplexRational, Forcing, ForcingTerm, LinearOperator, Polynomial, Projection, Rational};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rational(rng: &mut TestRng) -> Rational {
    Rational::new(rng.gen_range(-5i64..=5), rng.gen_range(1i64..=3)).unwrap()
}

pub fn nonzero_rational(rng: &mut TestRng) -> Rational {
    loop {
        let r = rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

pub fn complex(rng: &mut TestRng) -> ComplexRational {
    ComplexRational::new(rational(rng), rational(rng))
}

pub fn real_poly(rng: &mut TestRng, degree: usize) -> Polynomial {
    let mut coeffs: Vec<Rational> = (0..degree).map(|_| rational(rng)).collect();
    coeffs.push(nonzero_rational(rng));
    Polynomial::from_rationals(coeffs)
}

pub fn complex_poly(rng: &mut TestRng, max_degree: usize) -> Polynomial {
    let len = rng.gen_range(0..=max_degree + 1);
    Polynomial::new((0..len).map(|_| complex(rng)).collect())
}

pub fn operator(rng: &mut TestRng, max_order: usize) -> LinearOperator {
    let order = rng.gen_range(1..=max_order);
    let mut coeffs: Vec<Rational> = (0..order).map(|_| rational(rng)).collect();
    coeffs.push(nonzero_rational(rng));
    LinearOperator::new(coeffs).unwrap()
}

fn operator_from_poly(p: &Polynomial) -> LinearOperator {
    assert!(p.is_real());
    LinearOperator::new(p.coeffs().iter().map(|c| c.re.clone()).collect()).unwrap()
}

/// An operator of order at most six whose characteristic polynomial has the
/// returned `γ` as a root of multiplicity at least one.
pub fn operator_with_root(rng: &mut TestRng) -> (LinearOperator, ComplexRational) {
    let one = ComplexRational::one();
    if rng.gen_bool(0.5) {
        let root = rational(rng);
        let mult = rng.gen_range(1..=3);
        let linear = Polynomial::new(vec![ComplexRational::real(-&root), one]);
        let rest = rng.gen_range(0..=6 - mult);
        let mut p = real_poly(rng, rest);
        for _ in 0..mult {
            p = &p * &linear;
        }
        (operator_from_poly(&p), ComplexRational::real(root))
    } else {
        let alpha = rational(rng);
        let beta = nonzero_rational(rng);
        let mult = rng.gen_range(1..=3);
        // (t - α)² + β²
        let quadratic = Polynomial::from_rationals([
            &alpha * &alpha + &beta * &beta,
            Rational::from(-2) * &alpha,
            Rational::one(),
        ]);
        let rest = rng.gen_range(0..=6 - 2 * mult);
        let mut p = real_poly(rng, rest);
        for _ in 0..mult {
            p = &p * &quadratic;
        }
        (operator_from_poly(&p), ComplexRational::new(alpha, beta))
    }
}

/// A valid forcing term for exponent `gamma` with a random real polynomial of
/// degree at most six.
pub fn forcing_term(rng: &mut TestRng, gamma: ComplexRational) -> ForcingTerm {
    let degree = rng.gen_range(0..=6);
    let poly = real_poly(rng, degree);
    if gamma.is_real() {
        ForcingTerm::new(poly, gamma, Rational::zero(), Projection::Complex).unwrap()
    } else {
        let projection = if rng.gen_bool(0.5) { Projection::RealPart } else { Projection::ImagPart };
        ForcingTerm::new(poly, gamma, rational(rng), projection).unwrap()
    }
}

/// A random exponent, real about half of the time.
pub fn gamma(rng: &mut TestRng) -> ComplexRational {
    if rng.gen_bool(0.5) {
        ComplexRational::real(rational(rng))
    } else {
        ComplexRational::new(rational(rng), nonzero_rational(rng))
    }
}

/// One instance of the solver corpus; even indices place `γ` on a root.
pub fn instance(rng: &mut TestRng, index: usize) -> (LinearOperator, ForcingTerm) {
    let (op, g) = if index.is_multiple_of(2) {
        operator_with_root(rng)
    } else {
        let op = operator(rng, 6);
        let g = gamma(rng);
        (op, g)
    };
    let term = forcing_term(rng, g);
    (op, term)
}

pub fn forcing(rng: &mut TestRng, max_terms: usize) -> Forcing {
    let n = rng.gen_range(0..=max_terms);
    Forcing::new((0..n).map(|_| {
        let g = gamma(rng);
        forcing_term(rng, g)
    }))
}
