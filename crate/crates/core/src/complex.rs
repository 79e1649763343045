use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;

/// Exact complex number with rational real and imaginary parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ComplexRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl ComplexRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Self { re, im: BigRational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::real(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn i() -> Self {
        Self { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -self.im.clone() }
    }

    /// Multiplies by the imaginary unit.
    pub fn mul_i(&self) -> Self {
        Self { re: -self.im.clone(), im: self.re.clone() }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self { re: &self.re * r, im: &self.im * r }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        if rhs.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let norm = &rhs.re * &rhs.re + &rhs.im * &rhs.im;
        let num = self * &rhs.conj();
        Ok(Self { re: num.re / &norm, im: num.im / norm })
    }
}

impl From<BigRational> for ComplexRational {
    fn from(r: BigRational) -> Self {
        Self::real(r)
    }
}

impl<'a> Add<&'a ComplexRational> for &'a ComplexRational {
    type Output = ComplexRational;
    fn add(self, rhs: &ComplexRational) -> ComplexRational {
        ComplexRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Add for ComplexRational {
    type Output = ComplexRational;
    fn add(self, rhs: Self) -> Self {
        ComplexRational { re: self.re + rhs.re, im: self.im + rhs.im }
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

impl<'a> Sub<&'a ComplexRational> for &'a ComplexRational {
    type Output = ComplexRational;
    fn sub(self, rhs: &ComplexRational) -> ComplexRational {
        ComplexRational { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Sub for ComplexRational {
    type Output = ComplexRational;
    fn sub(self, rhs: Self) -> Self {
        ComplexRational { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl<'a> Mul<&'a ComplexRational> for &'a ComplexRational {
    type Output = ComplexRational;
    fn mul(self, rhs: &ComplexRational) -> ComplexRational {
        // Most coefficients are purely real or purely imaginary; skip the zero parts.
        match (self.im.is_zero(), rhs.im.is_zero()) {
            (true, true) => ComplexRational::real(&self.re * &rhs.re),
            (true, false) => ComplexRational { re: &self.re * &rhs.re, im: &self.re * &rhs.im },
            (false, true) => ComplexRational { re: &self.re * &rhs.re, im: &self.im * &rhs.re },
            (false, false) => ComplexRational {
                re: &self.re * &rhs.re - &self.im * &rhs.im,
                im: &self.re * &rhs.im + &self.im * &rhs.re,
            },
        }
    }
}

impl Mul for ComplexRational {
    type Output = ComplexRational;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Div for ComplexRational {
    type Output = ComplexRational;
    /// Panics on division by zero; use [`ComplexRational::checked_div`] to handle it.
    fn div(self, rhs: Self) -> Self {
        self.checked_div(&rhs).expect("division by zero")
    }
}

impl Neg for ComplexRational {
    type Output = ComplexRational;
    fn neg(self) -> Self {
        ComplexRational { re: -self.re, im: -self.im }
    }
}

impl Neg for &ComplexRational {
    type Output = ComplexRational;
    fn neg(self) -> ComplexRational {
        ComplexRational { re: -self.re.clone(), im: -self.im.clone() }
    }
}

pub(crate) fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` with an optional leading sign.
pub fn parse_rational(text: &str) -> Result<BigRational, AlgebraError> {
    let bad = || AlgebraError::BadRational(text.to_string());
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

impl fmt::Display for ComplexRational {
    /// Renders as `a/b+c/d*i`, dropping a zero part.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let re = fmt_rational(&self.re);
        if self.im.is_zero() {
            return f.write_str(&re);
        }
        let im = if self.im.abs().is_one() {
            if self.im.is_negative() { "-i".to_string() } else { "i".to_string() }
        } else {
            format!("{}*i", fmt_rational(&self.im))
        };
        if self.re.is_zero() {
            f.write_str(&im)
        } else if self.im.is_negative() {
            write!(f, "{re}{im}")
        } else {
            write!(f, "{re}+{im}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: (i64, i64), im: (i64, i64)) -> ComplexRational {
        ComplexRational::new(
            BigRational::new(re.0.into(), re.1.into()),
            BigRational::new(im.0.into(), im.1.into()),
        )
    }

    #[test]
    fn field_operations() {
        let a = c((1, 2), (3, 4));
        let b = c((-2, 3), (1, 1));
        let prod = &a * &b;
        assert_eq!(prod, c((-13, 12), (0, 1)));
        assert_eq!(prod.checked_div(&b).unwrap(), a);
        assert_eq!(ComplexRational::i() * ComplexRational::i(), ComplexRational::from_int(-1));
        assert!(a.checked_div(&ComplexRational::zero()).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(c((1, 2), (3, 4)).to_string(), "1/2+3/4*i");
        assert_eq!(c((1, 2), (-3, 4)).to_string(), "1/2-3/4*i");
        assert_eq!(c((0, 1), (-1, 1)).to_string(), "-i");
        assert_eq!(c((-5, 1), (0, 1)).to_string(), "-5");
        assert_eq!(ComplexRational::zero().to_string(), "0");
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3/7").unwrap(), BigRational::new(3.into(), 7.into()));
        assert_eq!(parse_rational("-2/5").unwrap(), BigRational::new((-2).into(), 5.into()));
        assert_eq!(parse_rational("4").unwrap(), BigRational::from_integer(4.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
    }
}
