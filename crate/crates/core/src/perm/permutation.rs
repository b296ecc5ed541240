use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::PermError;

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl TryFrom<Vec<usize>> for Permutation {
    type Error = PermError;

    fn try_from(v: Vec<usize>) -> Result<Self, PermError> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self, PermError> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || seen[v] {
                return Err(PermError::NotAPermutation(values));
            }
            seen[v] = true;
        }
        Ok(Permutation(values))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// The permutation order-isomorphic to `seq` (distinct values).
    pub fn standardize(seq: &[usize]) -> Self {
        let mut idx: Vec<usize> = (0..seq.len()).collect();
        idx.sort_by_key(|&i| seq[i]);
        let mut out = vec![0; seq.len()];
        for (rank, &i) in idx.iter().enumerate() {
            out[i] = rank + 1;
        }
        Permutation(out)
    }

    /// All permutations of size `n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<usize> = (1..=n).collect();
        let mut out = vec![Permutation(cur.clone())];
        while let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) {
            let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
            out.push(Permutation(cur.clone()));
        }
        out
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// Value at 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// 1-based position of value `v`.
    pub fn position_of(&self, v: usize) -> usize {
        self.0.iter().position(|&x| x == v).expect("value in range") + 1
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// Deletes every value greater than `m`.
    pub fn restrict_to(&self, m: usize) -> Permutation {
        Permutation(self.0.iter().copied().filter(|&v| v <= m).collect())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Accepts space- or comma-separated values, or a bare digit string such as `3142`.
impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, PermError> {
        let s = s.trim();
        let values: Result<Vec<usize>, _> = if s.chars().all(|c| c.is_ascii_digit()) {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or(()))
                .collect()
        } else {
            s.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| ()))
                .collect()
        };
        let values = values.map_err(|_| PermError::Parse(s.to_string()))?;
        Permutation::new(values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        let p: Permutation = "6 3 2 10 4 5 1 7 9 8 11 12".parse().unwrap();
        assert_eq!(p.len(), 12);
        assert_eq!(p.to_string(), "6 3 2 10 4 5 1 7 9 8 11 12");
        assert_eq!("3142".parse::<Permutation>().unwrap().values(), &[3, 1, 4, 2]);
        assert_eq!("3,1,2".parse::<Permutation>().unwrap().values(), &[3, 1, 2]);
        assert!("1 1".parse::<Permutation>().is_err());
        assert!("1 x".parse::<Permutation>().is_err());
    }

    #[test]
    fn basics() {
        assert_eq!(Permutation::all(4).len(), 24);
        let p = Permutation::new(vec![3, 1, 4, 2]).unwrap();
        assert_eq!(p.inverse().values(), &[2, 4, 1, 3]);
        assert_eq!(p.restrict_to(3).values(), &[3, 1, 2]);
        assert_eq!(Permutation::standardize(&[10, 4, 7]).values(), &[3, 1, 2]);
        assert_eq!(p.position_of(4), 3);
    }
}
