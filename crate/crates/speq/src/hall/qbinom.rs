//! Symmetric quantum integers and binomials as integer Laurent polynomials
//! in v, computed by the q-Pascal recurrence with no division, then
//! evaluated in `Z[v]/(v² − q)`.

use super::scalar::HallScalar;
use std::collections::BTreeMap;

/// Integer Laurent polynomial in v: exponent → coefficient.
pub type Laurent = BTreeMap<i64, i64>;

fn laurent_add(a: &Laurent, b: &Laurent) -> Laurent {
    let mut out = a.clone();
    for (&e, &c) in b {
        let slot = out.entry(e).or_insert(0);
        *slot += c;
        if *slot == 0 {
            out.remove(&e);
        }
    }
    out
}

fn laurent_shift(a: &Laurent, by: i64) -> Laurent {
    a.iter().map(|(&e, &c)| (e + by, c)).collect()
}

/// `[n] = (v^n − v^(−n))/(v − v^(−1)) = v^(n−1) + v^(n−3) + ⋯ + v^(1−n)`.
pub fn quantum_int(n: u64) -> Laurent {
    let mut out = Laurent::new();
    for k in 0..n {
        out.insert(n as i64 - 1 - 2 * k as i64, 1);
    }
    out
}

/// Symmetric quantum binomial `[m choose p]` through the recurrence
/// `[m p] = v^p [m−1 p] + v^(p−m) [m−1 p−1]`.
pub fn quantum_binomial(m: u64, p: u64) -> Laurent {
    if p > m {
        return Laurent::new();
    }
    if p == 0 || p == m {
        return Laurent::from([(0, 1)]);
    }
    let keep = quantum_binomial(m - 1, p);
    let take = quantum_binomial(m - 1, p - 1);
    laurent_add(
        &laurent_shift(&keep, p as i64),
        &laurent_shift(&take, p as i64 - m as i64),
    )
}

/// Substitute v → v^d: the subscripted binomial `[m choose p]_d`.
pub fn subscript(a: &Laurent, d: u64) -> Laurent {
    a.iter().map(|(&e, &c)| (e * d as i64, c)).collect()
}

/// Evaluate in `Z[v]/(v² − q)`.
pub fn eval(a: &Laurent, q: u64) -> HallScalar {
    let mut acc = HallScalar::zero(q);
    for (&e, &c) in a {
        let term = HallScalar::from_int(c as i128, q).mul(&HallScalar::v_pow(e, q));
        acc = acc.add(&term);
    }
    acc
}

/// The subscripted quantum binomial evaluated at v = q^{1/2}.
pub fn quantum_binomial_eval(m: u64, p: u64, d: u64, q: u64) -> HallScalar {
    eval(&subscript(&quantum_binomial(m, p), d), q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_choose_one_is_v_plus_vinv() {
        let b = quantum_binomial(2, 1);
        assert_eq!(b, Laurent::from([(1, 1), (-1, 1)]));
    }

    #[test]
    fn three_choose_one() {
        let b = quantum_binomial(3, 1);
        assert_eq!(b, Laurent::from([(2, 1), (0, 1), (-2, 1)]));
    }

    #[test]
    fn choose_zero_is_one() {
        for m in 0..6 {
            for d in 1..4 {
                assert_eq!(quantum_binomial_eval(m, 0, d, 2), HallScalar::one(2));
            }
        }
    }

    #[test]
    fn symmetry_and_classical_limit() {
        for m in 1..7u64 {
            for p in 0..=m {
                assert_eq!(quantum_binomial(m, p), quantum_binomial(m, m - p));
                // sum of coefficients = classical binomial
                let total: i64 = quantum_binomial(m, p).values().sum();
                let classical = (0..p).fold(1i64, |acc, i| acc * (m - i) as i64 / (i + 1) as i64);
                assert_eq!(total, classical);
            }
        }
    }

    #[test]
    fn pascal_against_product_formula() {
        // [4 choose 2] = [4][3]/([2][1]) — compare against direct expansion
        let lhs = quantum_binomial(4, 2);
        // [4][3] and [2][1]: multiply out Laurent polynomials
        let mul = |x: &Laurent, y: &Laurent| {
            let mut out = Laurent::new();
            for (&e1, &c1) in x {
                for (&e2, &c2) in y {
                    let slot = out.entry(e1 + e2).or_insert(0);
                    *slot += c1 * c2;
                    if *slot == 0 {
                        out.remove(&(e1 + e2));
                    }
                }
            }
            out
        };
        let top = mul(&quantum_int(4), &quantum_int(3));
        let bottom = mul(&quantum_int(2), &quantum_int(1));
        assert_eq!(mul(&lhs, &bottom), top);
    }

    #[test]
    fn quantum_int_at_one() {
        assert_eq!(quantum_int(1), Laurent::from([(0, 1)]));
        assert_eq!(quantum_int(2), Laurent::from([(1, 1), (-1, 1)]));
    }
}
