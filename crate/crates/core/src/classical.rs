//! Commutative Maxwell residuals, computed without star products or forms.

use crate::forms::MetricSignature;
use crate::scalar::MoyalScalar;

/// `∂/∂x^k` on the coefficient map.
fn d(f: &MoyalScalar, k: usize) -> MoyalScalar {
    MoyalScalar::from_terms(f.terms().filter(|(m, _)| m.0[k] > 0).map(|(m, c)| {
        let mut e = m.0;
        let n = e[k];
        e[k] -= 1;
        (crate::scalar::Monomial(e), c.scale(&num_rational::BigRational::from_integer(n.into())))
    }))
}

/// Residuals of `∇·B = 0`, `∇×E + ∂0B = 0`, `∇·E = 0` and `∇×B − ∂0E = 0`
/// (Minkowski) or `∇×B + ∂0E = 0` (Euclidean).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalMaxwell {
    pub e: [MoyalScalar; 3],
    pub b: [MoyalScalar; 3],
    pub gauss_magnetic: MoyalScalar,
    pub faraday: [MoyalScalar; 3],
    pub gauss_electric: MoyalScalar,
    pub ampere: [MoyalScalar; 3],
}

fn curl(v: &[MoyalScalar; 3]) -> [MoyalScalar; 3] {
    [
        d(&v[2], 2) - d(&v[1], 3),
        d(&v[0], 3) - d(&v[2], 1),
        d(&v[1], 1) - d(&v[0], 2),
    ]
}

fn div(v: &[MoyalScalar; 3]) -> MoyalScalar {
    d(&v[0], 1) + d(&v[1], 2) + d(&v[2], 3)
}

pub fn classical_maxwell(phi: &MoyalScalar, a: &[MoyalScalar; 3], sig: MetricSignature) -> ClassicalMaxwell {
    let e: [MoyalScalar; 3] = std::array::from_fn(|i| -d(&a[i], 0) - d(phi, i + 1));
    let b = curl(a);
    let ce = curl(&e);
    let cb = curl(&b);
    let time_sign = match sig {
        MetricSignature::Minkowski => 1,
        MetricSignature::Euclidean => -1,
    };
    ClassicalMaxwell {
        gauss_magnetic: div(&b),
        faraday: std::array::from_fn(|i| &ce[i] + &d(&b[i], 0)),
        gauss_electric: div(&e),
        ampere: std::array::from_fn(|i| &cb[i] - &d(&e[i], 0).scale_int(time_sign)),
        e,
        b,
    }
}
