use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{BigInt, BigRational, Complex, One, Signed, Zero};
use thiserror::Error;

pub type Rational = BigRational;
pub type Gauss = Complex<BigRational>;

/// The operations the elimination routines need. Implemented for
/// [`Rational`] and [`Gauss`].
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Embeds a rational.
    fn from_rational(r: Rational) -> Self;
}

impl Field for Rational {
    fn from_rational(r: Rational) -> Self {
        r
    }
}

impl Field for Gauss {
    fn from_rational(r: Rational) -> Self {
        Complex::new(r, Rational::zero())
    }
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn g(re: i64, im: i64) -> Gauss {
    Complex::new(qi(re), qi(im))
}

pub fn gq(re: Rational, im: Rational) -> Gauss {
    Complex::new(re, im)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal {0:?}")]
    Invalid(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

/// Parses `"p"`, `"p/q"` or a plain decimal like `"-1.25"`.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let bad = || ParseRationalError::Invalid(s.to_string());
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(ParseRationalError::ZeroDenominator(s.to_string()));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((ip, fp)) = s.split_once('.') {
        if fp.is_empty() || !fp.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = ip.starts_with('-');
        let ip = ip.trim_start_matches(['-', '+']);
        let digits = format!("{}{}", if ip.is_empty() { "0" } else { ip }, fp);
        let n: BigInt = digits.parse().map_err(|_| bad())?;
        let d = num::pow(BigInt::from(10), fp.len());
        let r = Rational::new(n, d);
        return Ok(if neg { -r } else { r });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(n))
}

/// `"p/q"` with `q > 1`, otherwise `"p"`.
pub fn fmt_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn fmt_gauss(z: &Gauss) -> String {
    if z.im.is_zero() {
        return fmt_rational(&z.re);
    }
    let im = if z.im.abs().is_one() {
        if z.im.is_negative() {
            "-i".to_string()
        } else {
            "i".to_string()
        }
    } else {
        format!("{}i", fmt_rational(&z.im))
    };
    if z.re.is_zero() {
        im
    } else if im.starts_with('-') {
        format!("{}{}", fmt_rational(&z.re), im)
    } else {
        format!("{}+{}", fmt_rational(&z.re), im)
    }
}

pub(crate) fn to_f64(r: &Rational) -> f64 {
    use num::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Best rational approximation with denominator at most `max_den`
/// (continued fractions).
pub(crate) fn approximate(x: f64, max_den: i64) -> Option<Rational> {
    if !x.is_finite() {
        return None;
    }
    let (mut h0, mut h1) = (0i128, 1i128);
    let (mut k0, mut k1) = (1i128, 0i128);
    let mut v = x;
    for _ in 0..64 {
        let a = v.floor();
        if a.abs() > 1e15 {
            break;
        }
        let ai = a as i128;
        let h2 = ai * h1 + h0;
        let k2 = ai * k1 + k0;
        if k2 > max_den as i128 {
            break;
        }
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        let frac = v - a;
        if frac.abs() < 1e-12 {
            break;
        }
        v = 1.0 / frac;
    }
    if k1 == 0 {
        return None;
    }
    Some(Rational::new(BigInt::from(h1), BigInt::from(k1)))
}
