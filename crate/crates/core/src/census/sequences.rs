use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `2 / (n (n+1)^2) · Σ_{k=1..n} C(n+1, k-1) C(n+1, k) C(n+1, k+1)`.
pub fn baxter_number(n: usize) -> BigUint {
    assert!(n >= 1);
    let m = n as u64;
    let sum: BigUint = (1..=n as i64)
        .map(|k| binomial(m + 1, k - 1) * binomial(m + 1, k) * binomial(m + 1, k + 1))
        .sum();
    let num = sum * 2u32;
    let den = BigUint::from(m * (m + 1) * (m + 1));
    assert!((&num % &den).is_zero(), "Baxter formula division is inexact at n = {n}");
    num / den
}

pub fn catalan(n: usize) -> BigUint {
    let m = n as u64;
    binomial(2 * m, m as i64) / (m + 1)
}

/// `C_m²` for `n = 2m`, `C_m · C_{m+1}` for `n = 2m + 1`.
pub fn alternating_count(n: usize) -> BigUint {
    let m = n / 2;
    if n.is_multiple_of(2) {
        catalan(m) * catalan(m)
    } else {
        catalan(m) * catalan(m + 1)
    }
}

/// A named integer sequence evaluated on a range of indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SequenceTable {
    pub name: String,
    #[serde(serialize_with = "decimal_values")]
    pub values: BTreeMap<usize, BigUint>,
}

fn decimal_values<S: serde::Serializer>(v: &BTreeMap<usize, BigUint>, s: S) -> Result<S::Ok, S::Error> {
    s.collect_map(v.iter().map(|(n, x)| (n, x.to_string())))
}

impl SequenceTable {
    pub fn compute(name: &str, range: impl IntoIterator<Item = usize>, f: impl Fn(usize) -> BigUint) -> Self {
        SequenceTable {
            name: name.to_string(),
            values: range.into_iter().map(|n| (n, f(n))).collect(),
        }
    }

    pub fn baxter(max: usize) -> Self {
        SequenceTable::compute("baxter", 1..=max, baxter_number)
    }

    pub fn catalan(max: usize) -> Self {
        SequenceTable::compute("catalan", 0..=max, catalan)
    }
}
