//! Index-notation helpers: Levi-Civita symbol, metric raising, and rank-2
//! tensors of Moyal polynomials.

use crate::forms::MetricSignature;
use crate::scalar::MoyalScalar;

/// ε with ε_{0123} = ε^{0123} = +1; zero on repeated indices.
pub fn levi_civita(idx: [usize; 4]) -> i64 {
    let mut seen = [false; 4];
    for &i in &idx {
        if i > 3 || seen[i] {
            return 0;
        }
        seen[i] = true;
    }
    let mut p = idx;
    let mut sign = 1;
    for i in 0..4 {
        while p[i] != i {
            let j = p[i];
            p.swap(i, j);
            sign = -sign;
        }
    }
    sign
}

/// Rank-2 tensor `T[μ][ν]`.
pub type Tensor2 = [[MoyalScalar; 4]; 4];

pub fn zero_tensor() -> Tensor2 {
    Default::default()
}

/// `T^{μν} = η^{μμ} η^{νν} T_{μν}` for a diagonal metric.
pub fn raise_both(t: &Tensor2, sig: MetricSignature) -> Tensor2 {
    let mut out = zero_tensor();
    for mu in 0..4 {
        for nu in 0..4 {
            out[mu][nu] = t[mu][nu].scale_int(sig.eta(mu) * sig.eta(nu));
        }
    }
    out
}

/// `T̃^{μν} = ½ ε^{μναβ} T_{αβ}`
pub fn dual(t: &Tensor2) -> Tensor2 {
    let half = crate::complex::ComplexRational::from_ratio(1, 2);
    let mut out = zero_tensor();
    for mu in 0..4 {
        for nu in 0..4 {
            let mut acc = Vec::new();
            for alpha in 0..4 {
                for beta in 0..4 {
                    let e = levi_civita([mu, nu, alpha, beta]);
                    if e != 0 {
                        acc.push(t[alpha][beta].scale_int(e));
                    }
                }
            }
            out[mu][nu] = acc.into_iter().sum::<MoyalScalar>().scale(&half);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn levi_civita_parity() {
        assert_eq!(levi_civita([0, 1, 2, 3]), 1);
        assert_eq!(levi_civita([1, 0, 2, 3]), -1);
        assert_eq!(levi_civita([1, 2, 3, 0]), -1);
        assert_eq!(levi_civita([3, 2, 1, 0]), 1);
        assert_eq!(levi_civita([0, 0, 2, 3]), 0);
    }

    #[test]
    fn levi_civita_is_totally_antisymmetric() {
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        assert_eq!(levi_civita([a, b, c, d]), -levi_civita([b, a, c, d]));
                        assert_eq!(levi_civita([a, b, c, d]), -levi_civita([a, b, d, c]));
                    }
                }
            }
        }
    }

    #[test]
    fn raising_flips_mixed_time_space_components() {
        let mut t = zero_tensor();
        t[0][1] = MoyalScalar::from_int(3);
        t[1][2] = MoyalScalar::from_int(5);
        let up = raise_both(&t, MetricSignature::Minkowski);
        assert_eq!(up[0][1], MoyalScalar::from_int(-3));
        assert_eq!(up[1][2], MoyalScalar::from_int(5));
        let euclid = raise_both(&t, MetricSignature::Euclidean);
        assert_eq!(euclid[0][1], MoyalScalar::from_int(3));
    }
}
