use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::complex::{fmt_rational, ComplexRational};
use crate::error::AlgebraError;

/// One of the four coordinate axes x0..x3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    X0,
    X1,
    X2,
    X3,
}

impl Axis {
    pub const ALL: [Axis; 4] = [Axis::X0, Axis::X1, Axis::X2, Axis::X3];
    pub const SPATIAL: [Axis; 3] = [Axis::X1, Axis::X2, Axis::X3];

    pub fn new(index: usize) -> Result<Axis, AlgebraError> {
        Self::ALL.get(index).copied().ok_or(AlgebraError::InvalidAxis(index))
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

/// Exponent tuple (a0, a1, a2, a3) of a monomial.
///
/// Ordered by total degree first, then by exponent tuple with larger powers of
/// lower-numbered axes first (so `x0` precedes `x1` within a degree).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; 4]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 4]);

    pub fn var(axis: Axis) -> Self {
        let mut e = [0; 4];
        e[axis.index()] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        Monomial(e)
    }

    /// Applies ∂^alpha, returning the falling-factorial factor and the reduced
    /// monomial, or `None` when the derivative vanishes.
    pub fn derive(&self, alpha: &[u32; 4]) -> Option<(u64, Monomial)> {
        let mut factor = 1u64;
        let mut e = self.0;
        for k in 0..4 {
            if alpha[k] > e[k] {
                return None;
            }
            for j in 0..alpha[k] {
                factor *= u64::from(e[k] - j);
            }
            e[k] -= alpha[k];
        }
        Some((factor, Monomial(e)))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{k}")?;
            } else {
                write!(f, "x{k}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Polynomial in x0..x3 with exact complex-rational coefficients.
///
/// Zero coefficients are never stored, so derived equality is semantic equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MoyalScalar {
    terms: BTreeMap<Monomial, ComplexRational>,
}

impl MoyalScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(ComplexRational::one())
    }

    pub fn constant(c: ComplexRational) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(ComplexRational::from_int(n))
    }

    pub fn var(axis: Axis) -> Self {
        Self::term(Monomial::var(axis), ComplexRational::one())
    }

    pub fn term(m: Monomial, c: ComplexRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    /// Builds a polynomial from possibly repeated, possibly zero terms.
    pub fn from_terms(iter: impl IntoIterator<Item = (Monomial, ComplexRational)>) -> Self {
        let mut acc = Accumulator::default();
        for (m, c) in iter {
            acc.add(m, &c);
        }
        acc.finish()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ComplexRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> ComplexRational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// Largest exponent of each variable appearing in any term.
    pub(crate) fn max_exponents(&self) -> [u32; 4] {
        let mut out = [0; 4];
        for m in self.terms.keys() {
            for k in 0..4 {
                out[k] = out[k].max(m.0[k]);
            }
        }
        out
    }

    pub fn scale(&self, c: &ComplexRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect() }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&ComplexRational::from_int(n))
    }

    pub fn mul_i(&self) -> Self {
        Self { terms: self.terms.iter().map(|(m, v)| (*m, v.mul_i())).collect() }
    }

    pub fn conj(&self) -> Self {
        Self { terms: self.terms.iter().map(|(m, v)| (*m, v.conj())).collect() }
    }

    pub fn partial(&self, axis: Axis) -> Self {
        let mut alpha = [0; 4];
        alpha[axis.index()] = 1;
        self.derivative(&alpha)
    }

    /// Mixed partial derivative ∂^alpha.
    pub fn derivative(&self, alpha: &[u32; 4]) -> Self {
        if alpha.iter().all(|&a| a == 0) {
            return self.clone();
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if let Some((factor, reduced)) = m.derive(alpha) {
                terms.insert(reduced, c * &ComplexRational::from_int(factor as i64));
            }
        }
        Self { terms }
    }

    /// Ordinary commutative product.
    pub fn mul_commutative(&self, other: &Self) -> Self {
        let mut acc = Accumulator::default();
        acc.add_product(self, other, None);
        acc.finish()
    }

    /// Evaluates the polynomial with every variable set to zero.
    pub fn constant_term(&self) -> ComplexRational {
        self.coefficient(&Monomial::ONE)
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(ComplexRational::is_real)
    }
}

/// Mutable sum of terms; zeros are stripped when finished.
#[derive(Default)]
pub(crate) struct Accumulator {
    terms: BTreeMap<Monomial, ComplexRational>,
}

impl Accumulator {
    pub(crate) fn add(&mut self, m: Monomial, c: &ComplexRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => *v += c,
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub(crate) fn add_poly(&mut self, p: &MoyalScalar) {
        for (m, c) in p.terms() {
            self.add(*m, c);
        }
    }

    /// Adds `scale * f * h` using the commutative product.
    pub(crate) fn add_product(&mut self, f: &MoyalScalar, h: &MoyalScalar, scale: Option<&ComplexRational>) {
        for (mf, cf) in f.terms() {
            let left = match scale {
                Some(s) => cf * s,
                None => cf.clone(),
            };
            for (mh, ch) in h.terms() {
                self.add(mf.mul(mh), &(&left * ch));
            }
        }
    }

    pub(crate) fn finish(self) -> MoyalScalar {
        let terms = self.terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        MoyalScalar { terms }
    }
}

impl Add for &MoyalScalar {
    type Output = MoyalScalar;
    fn add(self, rhs: &MoyalScalar) -> MoyalScalar {
        let mut acc = Accumulator { terms: self.terms.clone() };
        acc.add_poly(rhs);
        acc.finish()
    }
}

impl Add for MoyalScalar {
    type Output = MoyalScalar;
    fn add(self, rhs: MoyalScalar) -> MoyalScalar {
        let mut acc = Accumulator { terms: self.terms };
        acc.add_poly(&rhs);
        acc.finish()
    }
}

impl Sub for &MoyalScalar {
    type Output = MoyalScalar;
    fn sub(self, rhs: &MoyalScalar) -> MoyalScalar {
        self + &(-rhs)
    }
}

impl Sub for MoyalScalar {
    type Output = MoyalScalar;
    fn sub(self, rhs: MoyalScalar) -> MoyalScalar {
        self + (-rhs)
    }
}

impl Neg for &MoyalScalar {
    type Output = MoyalScalar;
    fn neg(self) -> MoyalScalar {
        MoyalScalar { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Neg for MoyalScalar {
    type Output = MoyalScalar;
    fn neg(self) -> MoyalScalar {
        -&self
    }
}

impl std::iter::Sum for MoyalScalar {
    fn sum<I: Iterator<Item = MoyalScalar>>(iter: I) -> Self {
        let mut acc = Accumulator::default();
        for p in iter {
            acc.add_poly(&p);
        }
        acc.finish()
    }
}

impl fmt::Display for MoyalScalar {
    /// Canonical rendering, e.g. `1 - 4/7*x1 + 3/14*i*x2*x3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let single = self.terms.len() == 1;
        for (n, (m, c)) in self.terms.iter().enumerate() {
            let constant = *m == Monomial::ONE;
            let (negative, coeff) = if c.is_real() || c.re.is_zero() {
                let (mag, imag) = if c.is_real() { (c.re.abs(), false) } else { (c.im.abs(), true) };
                let neg = if imag { c.im.is_negative() } else { c.re.is_negative() };
                let unit = mag.is_one();
                let text = match (imag, unit, constant) {
                    (false, _, true) => fmt_rational(&mag),
                    (false, true, false) => String::new(),
                    (false, false, false) => format!("{}*", fmt_rational(&mag)),
                    (true, true, true) => "i".to_string(),
                    (true, false, true) => format!("{}*i", fmt_rational(&mag)),
                    (true, true, false) => "i*".to_string(),
                    (true, false, false) => format!("{}*i*", fmt_rational(&mag)),
                };
                (neg, text)
            } else if single && constant {
                (false, c.to_string())
            } else if constant {
                (false, format!("({c})"))
            } else {
                (false, format!("({c})*"))
            };
            match (n == 0, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            f.write_str(&coeff)?;
            if !constant {
                write!(f, "{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MoyalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MoyalScalar({self})")
    }
}

/// Shorthand for building polynomials in tests and scenarios.
pub fn x(axis: usize) -> MoyalScalar {
    MoyalScalar::var(Axis::new(axis).expect("axis index in 0..=3"))
}

impl Zero for MoyalScalar {
    fn zero() -> Self {
        MoyalScalar::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}
