//! Exact scalars: arbitrary-precision rationals and Gaussian rationals.
//!
//! Both types are immutable values kept in canonical form, so structural
//! equality is numeric equality. Division is only available through
//! [`Rational::checked_div`] / [`ComplexRational::checked_div`], which report
//! a zero divisor as an error instead of panicking.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact rational number `numerator / denominator` in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer / denom`, failing on a zero denominator.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Rational> {
        Rational::one().checked_div(self)
    }

    /// Divides by a nonzero machine integer; used for factorial-type scalings.
    pub(crate) fn div_usize(&self, d: usize) -> Rational {
        debug_assert!(d != 0);
        Rational(&self.0 / BigRational::from_integer(BigInt::from(d)))
    }

    pub fn pow(&self, exp: u32) -> Rational {
        let mut acc = Rational::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Renders the rational as a LaTeX fragment (`\frac{p}{q}` or `p`).
    pub fn to_latex(&self) -> String {
        if self.is_integer() {
            self.numer().to_string()
        } else if self.is_negative() {
            format!("-\\frac{{{}}}{{{}}}", -self.numer(), self.denom())
        } else {
            format!("\\frac{{{}}}{{{}}}", self.numer(), self.denom())
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Parses `p/q`, `p`, with an optional leading sign on either form.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidScalar(s.to_string());
        let (sign, body) = match s.as_bytes().first() {
            Some(b'-') => (-1, &s[1..]),
            Some(b'+') => (1, &s[1..]),
            _ => (1, s),
        };
        let digits = |t: &str| -> Result<BigInt> {
            let t = t.trim();
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse::<BigInt>().map_err(|_| bad())
        };
        let (numer, denom) = match body.split_once('/') {
            Some((n, d)) => (digits(n)?, digits(d)?),
            None => (digits(body)?, BigInt::one()),
        };
        Rational::new(numer * sign, denom)
    }
}

macro_rules! forward_binop {
    ($ty:ident, $trait:ident, $method:ident, $inner:expr) => {
        impl $trait<&$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                $inner(self, rhs)
            }
        }
        impl $trait for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                $inner(&self, &rhs)
            }
        }
        impl $trait<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                $inner(&self, rhs)
            }
        }
        impl $trait<$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                $inner(self, &rhs)
            }
        }
    };
}
pub(crate) use forward_binop;

forward_binop!(Rational, Add, add, |a: &Rational, b: &Rational| Rational(&a.0 + &b.0));
forward_binop!(Rational, Sub, sub, |a: &Rational, b: &Rational| Rational(&a.0 - &b.0));
forward_binop!(Rational, Mul, mul, |a: &Rational, b: &Rational| Rational(&a.0 * &b.0));

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

/// A Gaussian rational `re + im·i`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ComplexRational {
    pub re: Rational,
    pub im: Rational,
}

impl ComplexRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        ComplexRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        ComplexRational { re, im: Rational::zero() }
    }

    pub fn zero() -> Self {
        ComplexRational::default()
    }

    pub fn one() -> Self {
        ComplexRational::real(Rational::one())
    }

    pub fn i() -> Self {
        ComplexRational::new(Rational::zero(), Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        ComplexRational::new(self.re.clone(), -&self.im)
    }

    /// `re² + im²`.
    pub fn norm_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, k: &Rational) -> Self {
        ComplexRational::new(&self.re * k, &self.im * k)
    }

    pub fn recip(&self) -> Result<Self> {
        let n = self.norm_sq();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let c = self.conj();
        Ok(ComplexRational::new(c.re.checked_div(&n)?, c.im.checked_div(&n)?))
    }

    pub fn checked_div(&self, rhs: &ComplexRational) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub(crate) fn div_usize(&self, d: usize) -> Self {
        ComplexRational::new(self.re.div_usize(d), self.im.div_usize(d))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = ComplexRational::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// LaTeX fragment, e.g. `-8 + 6i`, `\frac{1}{2}i`.
    pub fn to_latex(&self) -> String {
        let imag = |im: &Rational| -> String {
            if im.abs().is_one() {
                "i".to_string()
            } else {
                format!("{}i", im.abs().to_latex())
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => self.re.to_latex(),
            (true, false) => {
                let sign = if self.im.is_negative() { "-" } else { "" };
                format!("{sign}{}", imag(&self.im))
            }
            (false, false) => {
                let sign = if self.im.is_negative() { "-" } else { "+" };
                format!("{} {sign} {}", self.re.to_latex(), imag(&self.im))
            }
        }
    }
}

impl From<Rational> for ComplexRational {
    fn from(re: Rational) -> Self {
        ComplexRational::real(re)
    }
}

impl From<i64> for ComplexRational {
    fn from(n: i64) -> Self {
        ComplexRational::real(Rational::from(n))
    }
}

impl fmt::Display for ComplexRational {
    /// Text form `a`, `bi`, `a+bi`, `a-bi`; a unit imaginary part prints as `i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imag = |im: &Rational| -> String {
            if im.is_one() {
                "i".to_string()
            } else if (-im).is_one() {
                "-i".to_string()
            } else {
                format!("{im}i")
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}", imag(&self.im)),
            (false, false) => {
                let im = imag(&self.im);
                if self.im.is_negative() {
                    write!(f, "{}{}", self.re, im)
                } else {
                    write!(f, "{}+{}", self.re, im)
                }
            }
        }
    }
}

impl fmt::Debug for ComplexRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ComplexRational {
    type Err = Error;

    /// Parses `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i` (whitespace ignored).
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::InvalidScalar(s.trim().to_string());
        if compact.is_empty() {
            return Err(bad());
        }
        let Some(body) = compact.strip_suffix('i') else {
            return Ok(ComplexRational::real(compact.parse().map_err(|_| bad())?));
        };
        // Split the real part off at the last sign that is not the leading one.
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        let (re_text, im_text) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("", body),
        };
        let re = if re_text.is_empty() {
            Rational::zero()
        } else {
            re_text.parse().map_err(|_| bad())?
        };
        let im = match im_text {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            t => t.parse().map_err(|_| bad())?,
        };
        Ok(ComplexRational::new(re, im))
    }
}

forward_binop!(ComplexRational, Add, add, |a: &ComplexRational, b: &ComplexRational| {
    ComplexRational::new(&a.re + &b.re, &a.im + &b.im)
});
forward_binop!(ComplexRational, Sub, sub, |a: &ComplexRational, b: &ComplexRational| {
    ComplexRational::new(&a.re - &b.re, &a.im - &b.im)
});
forward_binop!(ComplexRational, Mul, mul, |a: &ComplexRational, b: &ComplexRational| {
    ComplexRational::new(
        &a.re * &b.re - &a.im * &b.im,
        &a.re * &b.im + &a.im * &b.re,
    )
});

impl Neg for ComplexRational {
    type Output = ComplexRational;
    fn neg(self) -> ComplexRational {
        ComplexRational::new(-self.re, -self.im)
    }
}

impl Neg for &ComplexRational {
    type Output = ComplexRational;
    fn neg(self) -> ComplexRational {
        ComplexRational::new(-&self.re, -&self.im)
    }
}

impl AddAssign<&ComplexRational> for ComplexRational {
    fn add_assign(&mut self, rhs: &ComplexRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&ComplexRational> for ComplexRational {
    fn sub_assign(&mut self, rhs: &ComplexRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

/// Total order on Gaussian rationals (real part first) for use as map keys.
impl PartialOrd for ComplexRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ComplexRational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.re.cmp(&other.re).then_with(|| self.im.cmp(&other.im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn z(s: &str) -> ComplexRational {
        s.parse().unwrap()
    }

    #[test]
    fn rational_examples() {
        assert_eq!(q("1/2") + q("1/3"), q("5/6"));
        assert_eq!(q("-5/16") * q("4"), q("-5/4"));
        assert_eq!(q("15/128").checked_div(&q("0")), Err(Error::DivisionByZero));
        assert_eq!(q("1/3").cmp(&q("1/2")), Ordering::Less);
        assert_eq!(-q("2/7"), q("-2/7"));
    }

    #[test]
    fn canonical_form() {
        let half = Rational::new(2, 4).unwrap();
        assert_eq!(half.numer(), &BigInt::from(1));
        assert_eq!(half.denom(), &BigInt::from(2));
        let neg = Rational::new(3, -6).unwrap();
        assert_eq!(neg.numer(), &BigInt::from(-1));
        assert_eq!(neg.denom(), &BigInt::from(2));
        let zero = Rational::new(0, -17).unwrap();
        assert_eq!(zero.denom(), &BigInt::from(1));
        assert!(Rational::new(1, 0).is_err());
    }

    #[test]
    fn rational_text() {
        assert_eq!(q("-15/1024").to_string(), "-15/1024");
        assert_eq!(q("+6/3").to_string(), "2");
        for bad in ["", "1/", "/2", "a", "1//2", "1/0", "--1", "1.5"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn complex_examples() {
        assert_eq!(z("1+3i") * z("1+3i"), z("-8+6i"));
        assert_eq!(z("-8+6i").conj(), z("-8-6i"));
        assert_eq!(z("-8+6i").norm_sq(), q("100"));
        assert_eq!(z("1+i").checked_div(&z("0")), Err(Error::DivisionByZero));
        assert_eq!(z("2").checked_div(&z("1+i")).unwrap(), z("1-i"));
    }

    #[test]
    fn complex_text() {
        for s in ["3", "-1/2i", "i", "-i", "1+3i", "7/64-3/16i", "0"] {
            assert_eq!(z(s).to_string(), s);
        }
        assert_eq!(z(" 1 + i "), z("1+i"));
        assert_eq!(z("-1-i"), ComplexRational::new(q("-1"), q("-1")));
        assert_eq!(z("6i"), ComplexRational::new(q("0"), q("6")));
        for bad in ["", "i1", "1+", "1+2j", "ii"] {
            assert!(bad.parse::<ComplexRational>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn latex() {
        assert_eq!(q("-3/16").to_latex(), "-\\frac{3}{16}");
        assert_eq!(z("-8+6i").to_latex(), "-8 + 6i");
        assert_eq!(z("-1/2i").to_latex(), "-\\frac{1}{2}i");
    }
}
