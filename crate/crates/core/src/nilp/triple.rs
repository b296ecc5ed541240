use std::collections::HashSet;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::path::{parse_steps, words, LatticePath, Step};
use super::tree_pair::{pair_to_tree, tree_to_pair, PAIR_LOWER_START, PAIR_UPPER_START};
use super::NilpError;
use crate::tlt::{is_baxter, rectangular_points, underlying_tree, FerrersShape, TreeLikeTableau};

pub const TOP_START: (i64, i64) = (-1, 2);
pub const MIDDLE_START: (i64, i64) = (0, 1);
pub const BOTTOM_START: (i64, i64) = (1, 0);

/// Three pairwise disjoint paths of `n - 1` steps from (-1,2), (0,1), (1,0), all with the same
/// number of east steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NilpTriple {
    n: usize,
    top: LatticePath,
    middle: LatticePath,
    bottom: LatticePath,
}

fn disjoint(a: &LatticePath, b: &LatticePath) -> bool {
    let pa: HashSet<_> = a.points().into_iter().collect();
    b.points().iter().all(|p| !pa.contains(p))
}

impl NilpTriple {
    pub fn new(top: LatticePath, middle: LatticePath, bottom: LatticePath) -> Result<Self, NilpError> {
        let invalid = |why: &str| Err(NilpError::InvalidTriple(why.to_string()));
        if top.start != TOP_START || middle.start != MIDDLE_START || bottom.start != BOTTOM_START {
            return invalid("paths must start at (-1,2), (0,1) and (1,0)");
        }
        if top.len() != middle.len() || middle.len() != bottom.len() {
            return invalid("paths must have equal length");
        }
        let k = middle.count(Step::E);
        if top.count(Step::E) != k || bottom.count(Step::E) != k {
            return invalid("paths must end on a common anti-diagonal shift");
        }
        if !disjoint(&top, &middle) || !disjoint(&middle, &bottom) || !disjoint(&top, &bottom) {
            return invalid("paths intersect");
        }
        Ok(NilpTriple {
            n: middle.len() + 1,
            top,
            middle,
            bottom,
        })
    }

    pub fn from_words(top: &str, middle: &str, bottom: &str) -> Result<Self, NilpError> {
        NilpTriple::new(
            LatticePath::new(TOP_START, parse_steps(top)?),
            LatticePath::new(MIDDLE_START, parse_steps(middle)?),
            LatticePath::new(BOTTOM_START, parse_steps(bottom)?),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn top(&self) -> &LatticePath {
        &self.top
    }

    pub fn middle(&self) -> &LatticePath {
        &self.middle
    }

    pub fn bottom(&self) -> &LatticePath {
        &self.bottom
    }

    /// Number of east steps of each path.
    pub fn k(&self) -> usize {
        self.middle.count(Step::E)
    }

    /// The common `i` of the end points `(n-i-2, i+2)`, `(n-i-1, i+1)`, `(n-i, i)`.
    pub fn end_index(&self) -> usize {
        self.n - 1 - self.k()
    }
}

#[derive(Serialize, Deserialize)]
struct TripleJson {
    n: usize,
    top: String,
    middle: String,
    bottom: String,
}

impl Serialize for NilpTriple {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        TripleJson {
            n: self.n,
            top: self.top.step_string(),
            middle: self.middle.step_string(),
            bottom: self.bottom.step_string(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for NilpTriple {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = TripleJson::deserialize(d)?;
        let t = NilpTriple::from_words(&j.top, &j.middle, &j.bottom).map_err(serde::de::Error::custom)?;
        if t.n != j.n {
            return Err(serde::de::Error::custom(format!(
                "paths have {} steps, expected n - 1 = {}",
                t.n - 1,
                j.n - 1
            )));
        }
        Ok(t)
    }
}

pub fn phi_p(t: &TreeLikeTableau) -> Result<NilpTriple, NilpError> {
    if !is_baxter(t) {
        return Err(NilpError::NotBaxter);
    }
    let (w1, w2) = tree_to_pair(&underlying_tree(t));
    let border = t.shape().border_steps();
    let bottom: Vec<Step> = border[1..border.len() - 1]
        .iter()
        .map(|&east| if east { Step::E } else { Step::N })
        .collect();
    Ok(NilpTriple::new(
        w1.shifted(TOP_START),
        w2.shifted(MIDDLE_START),
        LatticePath::new(BOTTOM_START, bottom),
    )
    .expect("image of a Baxter tableau is a valid triple"))
}

/// Points from the rectangular tableau of the tree encoded by the top two paths; shape from the
/// SE border `E · bottom · N`.
pub fn phi_p_inverse(p: &NilpTriple) -> TreeLikeTableau {
    let b = pair_to_tree(&p.top.shifted(PAIR_UPPER_START), &p.middle.shifted(PAIR_LOWER_START))
        .expect("top and middle of a valid triple form a pair");
    let (_, _, points) = rectangular_points(&b);
    let mut border = vec![true];
    border.extend(p.bottom.steps.iter().map(|&s| s == Step::E));
    border.push(false);
    let shape = FerrersShape::from_border(&border).expect("E · bottom · N bounds a Ferrers shape");
    TreeLikeTableau::new(shape, points).expect("points of a valid triple lie inside its shape")
}

/// All triples of size `n` by direct enumeration of paths, sorted.
pub fn enumerate_triples(n: usize) -> Vec<NilpTriple> {
    assert!(n >= 1);
    let len = n - 1;
    let mut out = Vec::new();
    for k in 0..=len {
        let ws = words(len, k);
        let paths = |start| ws.iter().map(move |w| LatticePath::new(start, w.clone()));
        let bottoms: Vec<LatticePath> = paths(BOTTOM_START).collect();
        for m in paths(MIDDLE_START) {
            let lower: Vec<&LatticePath> = bottoms.iter().filter(|b| disjoint(&m, b)).collect();
            if lower.is_empty() {
                continue;
            }
            for t in paths(TOP_START).filter(|t| disjoint(t, &m)) {
                for &b in &lower {
                    out.push(NilpTriple {
                        n,
                        top: t.clone(),
                        middle: m.clone(),
                        bottom: b.clone(),
                    });
                }
            }
        }
    }
    out.sort();
    out
}
