use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::path::Step;
use super::triple::{enumerate_triples, NilpTriple};
use super::NilpError;
use crate::tlt::{is_baxter, Cell, TreeLikeTableau};

/// A refined parameter class of triples of size `n` whose paths have `k` east steps: the top
/// path starts with exactly `r - 1` N steps and ends with exactly `p - 1` E steps, the bottom
/// path starts with exactly `s - 1` E steps and ends with exactly `q - 1` N steps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LgvParams {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub p: usize,
    pub s: usize,
    pub q: usize,
}

impl LgvParams {
    pub fn new(n: usize, k: usize, r: usize, p: usize, s: usize, q: usize) -> Result<Self, NilpError> {
        let lp = LgvParams { n, k, r, p, s, q };
        if n == 0 || k >= n || [r, p, s, q].contains(&0) {
            return Err(NilpError::InvalidParams(lp));
        }
        Ok(lp)
    }

    /// Both forced prefixes are disjoint from the forced suffixes of the same path, so the
    /// printed determinant applies.
    pub fn is_generic(&self) -> bool {
        self.r + self.p < self.n && self.s + self.q < self.n
    }

    /// Every valid tuple with `r, p, s, q ∈ 1..=n` and `k < n`.
    pub fn grid(n: usize) -> impl Iterator<Item = LgvParams> {
        (0..n).flat_map(move |k| {
            (1..=n).flat_map(move |r| {
                (1..=n)
                    .flat_map(move |p| (1..=n).flat_map(move |s| (1..=n).map(move |q| LgvParams { n, k, r, p, s, q })))
            })
        })
    }
}

/// `C(a, b)`, zero when `a < 0`, `b < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * (a - i) / (i + 1);
    }
    acc
}

fn det3(m: &[[BigInt; 3]; 3]) -> BigInt {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]) - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

/// The closed-form determinant, entry by entry:
///
/// ```text
/// C(n-1-r-p, k-p)   C(n-1-p, k-p)   C(n-1-s-p, k-s-p)
/// C(n-1-r,   k)     C(n-1,   k)     C(n-1-s,   k-s)
/// C(n-1-r-q, k)     C(n-1-q, k)     C(n-1-s-q, k-s)
/// ```
///
/// Exact only for [`LgvParams::is_generic`] tuples; see [`lgv`].
pub fn lgv_determinant(lp: &LgvParams) -> BigInt {
    let (n, k, r, p, s, q) = (
        lp.n as i64,
        lp.k as i64,
        lp.r as i64,
        lp.p as i64,
        lp.s as i64,
        lp.q as i64,
    );
    let m = [
        [
            binomial(n - 1 - r - p, k - p),
            binomial(n - 1 - p, k - p),
            binomial(n - 1 - s - p, k - s - p),
        ],
        [binomial(n - 1 - r, k), binomial(n - 1, k), binomial(n - 1 - s, k - s)],
        [
            binomial(n - 1 - r - q, k),
            binomial(n - 1 - q, k),
            binomial(n - 1 - s - q, k - s),
        ],
    ];
    det3(&m)
}

fn paths_between(a: (i64, i64), b: (i64, i64)) -> BigInt {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    binomial(dx + dy, dx)
}

/// Triples whose top path starts with at least `a` N and ends with at least `b` E steps, and
/// whose bottom path starts with at least `c` E and ends with at least `d` N steps. The forced
/// runs hug the outer boundary, so the free parts are counted by the plain 3×3 LGV determinant.
fn at_least(n: i64, k: i64, a: i64, b: i64, c: i64, d: i64) -> BigInt {
    if a > n - 1 - k || b > k || c > k || d > n - 1 - k {
        return BigInt::zero();
    }
    let starts = [(-1, 2 + a), (0, 1), (1 + c, 0)];
    let ends = [(k - 1 - b, n - k + 1), (k, n - k), (k + 1, n - k - 1 - d)];
    let m: [[BigInt; 3]; 3] = std::array::from_fn(|i| std::array::from_fn(|j| paths_between(starts[j], ends[i])));
    det3(&m)
}

/// Exact-run count by inclusion–exclusion over the sixteen at-least counts.
pub fn lgv_inclusion_exclusion(lp: &LgvParams) -> BigInt {
    let (n, k) = (lp.n as i64, lp.k as i64);
    let base = [lp.r as i64 - 1, lp.p as i64 - 1, lp.s as i64 - 1, lp.q as i64 - 1];
    let mut total = BigInt::zero();
    for mask in 0u32..16 {
        let e = |i: u32| base[i as usize] + i64::from(mask >> i & 1);
        let term = at_least(n, k, e(0), e(1), e(2), e(3));
        if mask.count_ones() % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Number of triples in the parameter class: the closed-form determinant on generic tuples,
/// the inclusion–exclusion count on the boundary, where some forced prefix and suffix overlap.
pub fn lgv(lp: &LgvParams) -> BigInt {
    if lp.is_generic() {
        lgv_determinant(lp)
    } else {
        lgv_inclusion_exclusion(lp)
    }
}

/// Parameters read off the paths of a triple.
pub fn triple_params(t: &NilpTriple) -> LgvParams {
    LgvParams {
        n: t.n(),
        k: t.k(),
        r: t.top().leading_run(Step::N) + 1,
        p: t.top().trailing_run(Step::E) + 1,
        s: t.bottom().leading_run(Step::E) + 1,
        q: t.bottom().trailing_run(Step::N) + 1,
    }
}

/// Parameters read off a Baxter tableau. When no column holds two points, column 1 is taken as
/// the rightmost one, so `p - 1` counts all other columns.
pub fn tlt_lgv_params(t: &TreeLikeTableau) -> Result<LgvParams, NilpError> {
    if !is_baxter(t) {
        return Err(NilpError::NotBaxter);
    }
    let cols = t.num_cols();
    let last_double = (1..=cols).rev().find(|&c| t.points_in_col(c) >= 2).unwrap_or(1);
    let border = t.shape().border_steps();
    let s = border.iter().take_while(|&&e| e).count();
    let q = border.iter().rev().take_while(|&&e| !e).count();
    let r = (1..=t.shape().col_len(1))
        .filter(|&row| t.is_pointed(Cell::new(row, 1)))
        .count();
    Ok(LgvParams {
        n: t.size(),
        k: cols - 1,
        r,
        p: cols - last_double + 1,
        s,
        q,
    })
}

/// Histogram of [`triple_params`] over every triple of size `n`.
pub fn brute_force_lgv(n: usize) -> BTreeMap<LgvParams, usize> {
    let mut out = BTreeMap::new();
    for t in enumerate_triples(n) {
        *out.entry(triple_params(&t)).or_default() += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(-1, -1), BigInt::zero());
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }

    #[test]
    fn singleton_class() {
        let lp = LgvParams::new(1, 0, 1, 1, 1, 1).unwrap();
        assert!(!lp.is_generic());
        assert_eq!(lgv_determinant(&lp), BigInt::zero());
        assert_eq!(lgv(&lp), BigInt::one());
        assert!(LgvParams::new(3, 3, 1, 1, 1, 1).is_err());
        assert!(LgvParams::new(3, 1, 0, 1, 1, 1).is_err());
    }
}
