use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::{lll_values, palette_size, Constant};
use crate::error::Result;
use crate::precise::{rational_power, to_f64, Interval};

/// One inequality `lhs < rhs`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InequalityCheck {
    /// `"edge"`, `"tuple_t"` or `"k_vertex_k"`.
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    /// Lower bound of `rhs - lhs`.
    pub residual: f64,
    /// Holds only if the strict inequality is certain at working precision.
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InequalityReport {
    pub m: usize,
    pub delta: usize,
    pub c: Constant,
    pub c_prime: Constant,
    pub palette_size: u64,
    /// The common exponent `-C'(xΔ/(1-x) + Σ ... + Σ ...)`.
    pub exponent: f64,
    pub edge: InequalityCheck,
    pub tuples: Vec<InequalityCheck>,
    pub k_vertex: Vec<InequalityCheck>,
    pub edge_holds: bool,
    pub tuples_hold: bool,
    pub k_vertex_holds: bool,
}

/// Evaluates the three families of sufficient inequalities with
/// `p = 1/palette_size(m, Δ, C)` and `C'` in place of every hidden constant.
pub fn asymptotic_inequality_report(
    m: usize,
    delta: usize,
    c: Constant,
    c_prime: Constant,
) -> Result<InequalityReport> {
    let s = palette_size(m, delta, c)?;
    let params = lll_values(m, delta, s)?;
    let base = delta as u64;
    let (mi, mu) = (m as i64, m as u64);

    let x = params.x.interval();
    let delta_i = Interval::from_integer(base);
    let mut sum = x.mul(&delta_i).div(&x.one_minus());
    for (&t, y) in &params.y {
        let y = y.interval();
        let growth = rational_power(base, (t as i64 - 1) * (mi + 1), mu);
        sum = sum.add(&y.mul(&growth).div(&y.one_minus()));
    }
    for (&k, z) in &params.z {
        let z = z.interval();
        let growth = rational_power(base, (k as i64 - 2) * (mi + 1), mu);
        sum = sum.add(&z.mul(&growth).div(&z.one_minus()));
    }
    let exponent = Interval::exact(c_prime.to_rational()).mul(&sum).neg();
    let factor = exponent.exp();

    let p = params.p_interval();
    let check = |name: String, lhs: Interval, weight: Interval| {
        let rhs = weight.mul(&factor);
        let gap = rhs.lo() - lhs.hi();
        InequalityCheck {
            name,
            lhs: lhs.midpoint_f64(),
            rhs: rhs.midpoint_f64(),
            residual: to_f64(&gap),
            holds: gap > BigRational::from_integer(BigInt::from(0)),
        }
    };
    let edge = check("edge".into(), p.clone(), x.clone());
    let tuples: Vec<InequalityCheck> = params
        .y
        .iter()
        .map(|(&t, y)| check(format!("tuple_{t}"), p.powu(t as u64 - 1), y.interval()))
        .collect();
    let k_vertex: Vec<InequalityCheck> = params
        .z
        .iter()
        .map(|(&k, z)| check(format!("k_vertex_{k}"), p.powu(k as u64 - 2), z.interval()))
        .collect();
    debug_assert!(BigRational::one() > *p.hi());
    Ok(InequalityReport {
        m,
        delta,
        c,
        c_prime,
        palette_size: s,
        exponent: exponent.midpoint_f64(),
        edge_holds: edge.holds,
        tuples_hold: tuples.iter().all(|c| c.holds),
        k_vertex_holds: k_vertex.iter().all(|c| c.holds),
        edge,
        tuples,
        k_vertex,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn large_constant_holds() {
        let r = asymptotic_inequality_report(2, 10_000, Constant::integer(100), Constant::integer(1)).unwrap();
        assert!(r.edge_holds && r.tuples_hold && r.k_vertex_holds);
        // Each of the four terms is 1/(1 - weight), so the exponent is near -4.
        assert!((r.exponent + 4.0).abs() < 1e-3);
    }

    #[test]
    fn small_constant_fails_first() {
        let c = Constant::new(1, 100).unwrap();
        let r = asymptotic_inequality_report(2, 10_000, c, Constant::integer(1)).unwrap();
        assert!(!r.edge_holds);
        assert!(r.edge.residual < 0.0);
    }

    #[test]
    fn zero_c_prime_compares_against_weights() {
        let r = asymptotic_inequality_report(3, 64, Constant::integer(4), Constant::integer(0)).unwrap();
        assert_eq!(r.exponent, 0.0);
        // p = 1/s against x = 1/Δ directly.
        let s = r.palette_size as f64;
        assert!((r.edge.rhs - 1.0 / 64.0).abs() < 1e-15);
        assert!((r.edge.lhs - 1.0 / s).abs() < 1e-15);
        assert!(r.edge_holds);
    }

    #[test]
    fn rejects_degenerate_degree() {
        assert!(asymptotic_inequality_report(2, 1, Constant::integer(4), Constant::integer(1)).is_err());
    }
}
