use std::collections::BTreeSet;
use std::str::FromStr;

use serde::Serialize;

use super::permutation::Permutation;
use super::PatternError;

/// A permutation pattern with optional position- and value-adjacency constraints.
///
/// `position_adjacent` holds `j` for each constrained pair of pattern positions `(j, j+1)`;
/// `value_adjacent` holds `v` for each constrained pair of pattern values `(v, v+1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BivincularPattern {
    pub base: Permutation,
    pub position_adjacent: BTreeSet<usize>,
    pub value_adjacent: BTreeSet<usize>,
}

/// 1-based positions into the host permutation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Occurrence {
    pub positions: Vec<usize>,
}

impl Occurrence {
    pub fn values(&self, host: &Permutation) -> Vec<usize> {
        self.positions.iter().map(|&i| host.at(i)).collect()
    }
}

impl BivincularPattern {
    pub fn classical(base: Permutation) -> Self {
        BivincularPattern {
            base,
            position_adjacent: BTreeSet::new(),
            value_adjacent: BTreeSet::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    /// Parses dashed notation: single digits, `-` between non-adjacent entries, juxtaposition for
    /// adjacent ones, and one optional `k+` entry standing for value `k+1` with `(k, k+1)`
    /// value-adjacent. The other digits are read literally when they already form
    /// `{1..m} \ {k+1}`; otherwise, if they form `{1..m-1}`, digits above `k` are shifted up.
    pub fn parse(text: &str) -> Result<Self, PatternError> {
        let text = text.trim();
        let syntax = |msg: &str| PatternError::Syntax(format!("{msg} in {text:?}"));
        let mut digits: Vec<usize> = Vec::new();
        let mut plus: Option<usize> = None;
        let mut adjacent = BTreeSet::new();
        let mut expect_entry = true;
        let mut after_dash = false;
        for ch in text.chars() {
            match ch {
                '1'..='9' => {
                    if !digits.is_empty() && !after_dash {
                        adjacent.insert(digits.len());
                    }
                    digits.push(ch.to_digit(10).unwrap() as usize);
                    expect_entry = false;
                    after_dash = false;
                }
                '+' => {
                    if expect_entry || after_dash {
                        return Err(syntax("'+' without a digit"));
                    }
                    if plus.is_some() {
                        return Err(syntax("more than one '+' entry"));
                    }
                    plus = Some(digits.len() - 1);
                }
                '-' => {
                    if expect_entry || after_dash {
                        return Err(syntax("misplaced '-'"));
                    }
                    after_dash = true;
                }
                _ => return Err(syntax(&format!("unexpected character {ch:?}"))),
            }
        }
        if digits.is_empty() || after_dash {
            return Err(syntax("missing entry"));
        }
        let m = digits.len();
        let mut value_adjacent = BTreeSet::new();
        let values = match plus {
            None => digits.clone(),
            Some(at) => {
                let k = digits[at];
                let others: BTreeSet<usize> = digits
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != at)
                    .map(|(_, &d)| d)
                    .collect();
                let distinct = others.len() == m - 1;
                let literal: BTreeSet<usize> = (1..=m).filter(|&v| v != k + 1).collect();
                let shifted: BTreeSet<usize> = (1..m).collect();
                let mut values = digits.clone();
                if distinct && others == literal && others.contains(&k) {
                    values[at] = k + 1;
                } else if distinct && others == shifted && others.contains(&k) {
                    for (i, v) in values.iter_mut().enumerate() {
                        if i == at {
                            *v = k + 1;
                        } else if *v > k {
                            *v += 1;
                        }
                    }
                } else {
                    return Err(PatternError::NotAPermutation(text.to_string()));
                }
                value_adjacent.insert(k);
                values
            }
        };
        let base = Permutation::new(values).map_err(|_| PatternError::NotAPermutation(text.to_string()))?;
        Ok(BivincularPattern {
            base,
            position_adjacent: adjacent,
            value_adjacent,
        })
    }
}

impl FromStr for BivincularPattern {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, PatternError> {
        BivincularPattern::parse(s)
    }
}

/// All occurrences of `p` in `host`, lexicographic by position tuple.
pub fn occurrences(host: &Permutation, p: &BivincularPattern) -> Vec<Occurrence> {
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(p.len());
    search(host, p, &mut chosen, &mut |pos| {
        out.push(Occurrence {
            positions: pos.to_vec(),
        });
        true
    });
    out
}

/// True iff `host` has no occurrence of `p`.
pub fn avoids(host: &Permutation, p: &BivincularPattern) -> bool {
    let mut found = false;
    let mut chosen = Vec::with_capacity(p.len());
    search(host, p, &mut chosen, &mut |_| {
        found = true;
        false
    });
    !found
}

/// Depth-first search over increasing position tuples; `f` returns false to stop.
fn search<F: FnMut(&[usize]) -> bool>(
    host: &Permutation,
    p: &BivincularPattern,
    chosen: &mut Vec<usize>,
    f: &mut F,
) -> bool {
    let t = chosen.len();
    let m = p.len();
    if t == m {
        return f(chosen);
    }
    let n = host.len();
    let lo = chosen.last().map_or(1, |&x| x + 1);
    let hi = if t > 0 && p.position_adjacent.contains(&t) {
        lo.min(n)
    } else {
        n
    };
    let base = p.base.values();
    for pos in lo..=hi {
        if n - pos < m - t - 1 {
            break;
        }
        let v = host.at(pos);
        let consistent = chosen
            .iter()
            .enumerate()
            .all(|(s, &q)| (host.at(q) < v) == (base[s] < base[t]));
        if !consistent {
            continue;
        }
        chosen.push(pos);
        let adjacency_ok = p.value_adjacent.iter().all(|&va| {
            let a = p.base.position_of(va) - 1;
            let b = p.base.position_of(va + 1) - 1;
            a.max(b) != t || host.at(chosen[b]) == host.at(chosen[a]) + 1
        });
        let keep_going = !adjacency_ok || search(host, p, chosen, f);
        chosen.pop();
        if !keep_going {
            return false;
        }
    }
    true
}
