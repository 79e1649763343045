use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::complex::{fmt_rational, ComplexRational};
use crate::error::AlgebraError;
use crate::scalar::{Accumulator, MoyalScalar};

/// Antisymmetric deformation matrix θ^{μν} with exact rational entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ThetaMatrix {
    entries: [[BigRational; 4]; 4],
}

/// Index pairs of the six independent entries, in the order θ01, θ02, θ03, θ12, θ13, θ23.
pub const THETA_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

impl ThetaMatrix {
    pub fn zero() -> Self {
        Self { entries: Default::default() }
    }

    /// Builds θ from its upper-triangular entries θ01, θ02, θ03, θ12, θ13, θ23.
    pub fn from_upper(upper: [BigRational; 6]) -> Self {
        let mut theta = Self::zero();
        for ((mu, nu), value) in THETA_PAIRS.into_iter().zip(upper) {
            theta.entries[nu][mu] = -value.clone();
            theta.entries[mu][nu] = value;
        }
        theta
    }

    /// Validates a full matrix.
    pub fn from_matrix(entries: [[BigRational; 4]; 4]) -> Result<Self, AlgebraError> {
        for mu in 0..4 {
            for nu in mu..4 {
                if entries[mu][nu] != -entries[nu][mu].clone() {
                    return Err(AlgebraError::NotAntisymmetric(mu, nu));
                }
            }
        }
        Ok(Self { entries })
    }

    /// Convenience constructor with a single nonzero pair.
    pub fn single(mu: usize, nu: usize, value: BigRational) -> Self {
        let mut theta = Self::zero();
        theta.entries[nu][mu] = -value.clone();
        theta.entries[mu][nu] = value;
        theta
    }

    pub fn with(mut self, mu: usize, nu: usize, value: BigRational) -> Self {
        self.entries[nu][mu] = -value.clone();
        self.entries[mu][nu] = value;
        self
    }

    pub fn get(&self, mu: usize, nu: usize) -> &BigRational {
        &self.entries[mu][nu]
    }

    pub fn upper(&self) -> [BigRational; 6] {
        THETA_PAIRS.map(|(mu, nu)| self.entries[mu][nu].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Zero::is_zero)
    }
}

impl fmt::Display for ThetaMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = THETA_PAIRS
            .iter()
            .map(|&(mu, nu)| format!("t{mu}{nu}={}", fmt_rational(&self.entries[mu][nu])))
            .collect();
        f.write_str(&parts.join(", "))
    }
}

type Exps = [u32; 4];

/// One term of the n-th power of the bidifferential operator θ^{μν} ∂_μ ⊗ ∂_ν:
/// derivative multi-indices on the left and right factor with their coefficient.
#[derive(Clone, Debug)]
struct Contraction {
    left: Exps,
    right: Exps,
    coeff: BigRational,
}

/// Powers of the contraction operator kept at construction time; higher
/// orders are rebuilt on demand and never cached.
const EAGER_ORDER: usize = 3;

struct ContextInner {
    theta: ThetaMatrix,
    /// `powers[n - 1]` holds the expansion of the n-th power.
    powers: Vec<Vec<Contraction>>,
}

/// Shared, immutable star-product context for one computation.
#[derive(Clone)]
pub struct AlgebraContext {
    inner: Arc<ContextInner>,
}

impl PartialEq for AlgebraContext {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.theta == other.inner.theta
    }
}

impl Eq for AlgebraContext {}

impl fmt::Debug for AlgebraContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraContext({})", self.inner.theta)
    }
}

fn first_power(theta: &ThetaMatrix) -> Vec<Contraction> {
    let mut out = Vec::new();
    for mu in 0..4 {
        for nu in 0..4 {
            let t = theta.get(mu, nu);
            if t.is_zero() {
                continue;
            }
            let mut left = [0; 4];
            let mut right = [0; 4];
            left[mu] = 1;
            right[nu] = 1;
            out.push(Contraction { left, right, coeff: t.clone() });
        }
    }
    out
}

fn next_power(prev: &[Contraction], first: &[Contraction]) -> Vec<Contraction> {
    let mut acc: BTreeMap<(Exps, Exps), BigRational> = BTreeMap::new();
    for p in prev {
        for q in first {
            let mut left = p.left;
            let mut right = p.right;
            for k in 0..4 {
                left[k] += q.left[k];
                right[k] += q.right[k];
            }
            *acc.entry((left, right)).or_insert_with(BigRational::zero) += &p.coeff * &q.coeff;
        }
    }
    acc.into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|((left, right), coeff)| Contraction { left, right, coeff })
        .collect()
}

/// (i/2)^n / n!
fn series_factor(n: usize) -> ComplexRational {
    let mut denom = BigInt::from(1);
    for k in 1..=n {
        denom *= BigInt::from(2 * k);
    }
    let mag = BigRational::new(BigInt::from(1), denom);
    match n % 4 {
        0 => ComplexRational::real(mag),
        1 => ComplexRational::new(BigRational::zero(), mag),
        2 => ComplexRational::real(-mag),
        _ => ComplexRational::new(BigRational::zero(), -mag),
    }
}

fn fits(alpha: &Exps, max: &Exps) -> bool {
    alpha.iter().zip(max).all(|(a, m)| a <= m)
}

impl AlgebraContext {
    pub fn new(theta: ThetaMatrix) -> Self {
        let first = first_power(&theta);
        let mut powers = Vec::with_capacity(EAGER_ORDER);
        if !first.is_empty() {
            powers.push(first.clone());
            for _ in 1..EAGER_ORDER {
                let next = next_power(powers.last().expect("nonempty"), &first);
                powers.push(next);
            }
        }
        Self { inner: Arc::new(ContextInner { theta, powers }) }
    }

    /// The commutative context θ = 0.
    pub fn commutative() -> Self {
        Self::new(ThetaMatrix::zero())
    }

    pub fn theta(&self) -> &ThetaMatrix {
        &self.inner.theta
    }

    /// Moyal star product f·h.
    pub fn star(&self, f: &MoyalScalar, h: &MoyalScalar) -> MoyalScalar {
        let (Some(df), Some(dh)) = (f.total_degree(), h.total_degree()) else {
            return MoyalScalar::zero();
        };
        let mut acc = Accumulator::default();
        acc.add_product(f, h, None);
        let order = df.min(dh) as usize;
        if order == 0 || self.inner.powers.is_empty() {
            return acc.finish();
        }
        let max_f = f.max_exponents();
        let max_h = h.max_exponents();
        let mut left_cache: HashMap<Exps, MoyalScalar> = HashMap::new();
        let mut right_cache: HashMap<Exps, MoyalScalar> = HashMap::new();
        let mut extra: Option<Vec<Contraction>> = None;
        for n in 1..=order {
            let table: &[Contraction] = if n <= EAGER_ORDER {
                &self.inner.powers[n - 1]
            } else {
                let prev = extra.take().unwrap_or_else(|| self.inner.powers[EAGER_ORDER - 1].clone());
                extra = Some(next_power(&prev, &self.inner.powers[0]));
                extra.as_deref().expect("just set")
            };
            let factor = series_factor(n);
            for c in table {
                if !fits(&c.left, &max_f) || !fits(&c.right, &max_h) {
                    continue;
                }
                let left = left_cache.entry(c.left).or_insert_with(|| f.derivative(&c.left));
                if left.is_zero() {
                    continue;
                }
                let right = right_cache.entry(c.right).or_insert_with(|| h.derivative(&c.right));
                if right.is_zero() {
                    continue;
                }
                acc.add_product(&left_cache[&c.left], right, Some(&factor.scale(&c.coeff)));
            }
        }
        acc.finish()
    }

    /// Star product of a sequence, left to right.
    pub fn star_all<'a>(&self, factors: impl IntoIterator<Item = &'a MoyalScalar>) -> MoyalScalar {
        factors.into_iter().fold(MoyalScalar::one(), |acc, f| self.star(&acc, f))
    }

    /// f·h − h·f
    pub fn commutator(&self, f: &MoyalScalar, h: &MoyalScalar) -> MoyalScalar {
        self.star(f, h) - self.star(h, f)
    }

    /// i[f, h]
    pub fn i_commutator(&self, f: &MoyalScalar, h: &MoyalScalar) -> MoyalScalar {
        self.commutator(f, h).mul_i()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::x;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn ci(n: i64, d: i64) -> ComplexRational {
        ComplexRational::new(BigRational::zero(), r(n, d))
    }

    #[test]
    fn coordinate_star_product() {
        let ctx = AlgebraContext::new(ThetaMatrix::single(2, 3, r(3, 7)));
        let got = ctx.star(&x(2), &x(3));
        let want = x(2).mul_commutative(&x(3)) + MoyalScalar::constant(ci(3, 14));
        assert_eq!(got, want);
        assert_eq!(ctx.commutator(&x(2), &x(3)), MoyalScalar::constant(ci(3, 7)));
    }

    #[test]
    fn squares_terminate_at_second_order() {
        let t = r(5, 3);
        let ctx = AlgebraContext::new(ThetaMatrix::single(1, 2, t.clone()));
        let x1sq = x(1).mul_commutative(&x(1));
        let x2sq = x(2).mul_commutative(&x(2));
        let want = x1sq.mul_commutative(&x2sq)
            + x(1).mul_commutative(&x(2)).scale(&ComplexRational::new(BigRational::zero(), &t * r(2, 1)))
            - MoyalScalar::constant(ComplexRational::real(&t * &t * r(1, 2)));
        assert_eq!(ctx.star(&x1sq, &x2sq), want);
    }

    #[test]
    fn mixed_time_commutator() {
        let q = r(-2, 9);
        let ctx = AlgebraContext::new(ThetaMatrix::single(0, 1, r(1, 1)).with(0, 2, q.clone()));
        let got = ctx.commutator(&x(1).mul_commutative(&x(2)), &x(0));
        let want = (x(2) + x(1).scale(&ComplexRational::real(q))).scale(&ci(-1, 1));
        assert_eq!(got, want);
    }

    #[test]
    fn high_order_products_use_on_demand_powers() {
        // x1^5 · x2^5 needs five orders, beyond the eagerly built ones.
        let ctx = AlgebraContext::new(ThetaMatrix::single(1, 2, r(1, 1)));
        let p = ctx.star_all([&x(1), &x(1), &x(1), &x(1), &x(1)]);
        let h = ctx.star_all([&x(2), &x(2), &x(2), &x(2), &x(2)]);
        let lhs = ctx.star(&p, &h);
        // Associativity against a different bracketing exercises every order.
        let mut rhs = MoyalScalar::one();
        for f in [&x(1), &x(1), &x(1), &x(1), &x(1), &x(2), &x(2), &x(2), &x(2), &x(2)] {
            rhs = ctx.star(&rhs, f);
        }
        assert_eq!(lhs, rhs);
        // Constant term: (i/2)^5 / 5! · (5!)^2 = 120 i^5 / 32.
        assert_eq!(lhs.constant_term(), ci(15, 4));
    }

    #[test]
    fn theta_validation() {
        let mut m: [[BigRational; 4]; 4] = Default::default();
        m[0][1] = r(1, 2);
        assert_eq!(ThetaMatrix::from_matrix(m.clone()), Err(AlgebraError::NotAntisymmetric(0, 1)));
        m[1][0] = r(-1, 2);
        assert!(ThetaMatrix::from_matrix(m).is_ok());
    }
}
