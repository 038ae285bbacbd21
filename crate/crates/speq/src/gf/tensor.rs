//! Decomposition of tensor products of finite extension fields.
//!
//! GF(q^a) ⊗_{GF(q)} GF(q^b) splits into gcd(a,b) factors, each a copy of
//! GF(q^lcm(a,b)), with factor idempotents indexed by Frobenius classes
//! modulo the gcd. The descriptor also records which left idempotent class
//! (mod a) meets which right idempotent class (mod b) inside each factor
//! after a further scalar extension.

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorFactor {
    /// Frobenius class s mod gcd(a,b) indexing this factor.
    pub class: usize,
    /// Extension degree of the factor over GF(q): lcm(a,b).
    pub degree: usize,
    /// Pairs (left class mod a, right class mod b) met by this factor,
    /// i.e. all (x, y) with x - y ≡ s modulo gcd(a,b).
    pub meets: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorSplit {
    pub left_deg: usize,
    pub right_deg: usize,
    pub factor_count: usize,
    pub factor_degree: usize,
    pub factors: Vec<TensorFactor>,
}

/// Split GF(q^a) ⊗_{GF(q)} GF(q^b) into field factors.
pub fn tensor_decompose(a: usize, b: usize) -> TensorSplit {
    assert!(a >= 1 && b >= 1, "degrees must be positive");
    let g = gcd(a, b);
    let l = a / g * b;
    let factors = (0..g)
        .map(|s| {
            let mut meets = vec![];
            for x in 0..a {
                for y in 0..b {
                    if (x + b * g - y) % g == s % g {
                        meets.push((x, y));
                    }
                }
            }
            TensorFactor {
                class: s,
                degree: l,
                meets,
            }
        })
        .collect();
    TensorSplit {
        left_deg: a,
        right_deg: b,
        factor_count: g,
        factor_degree: l,
        factors,
    }
}
