use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::path::{parse_steps, LatticePath, Step};
use super::triple::{phi_p, phi_p_inverse, NilpTriple, BOTTOM_START, MIDDLE_START, TOP_START};
use super::NilpError;
use crate::tlt::{is_almost_complete, TreeLikeTableau};

/// Every prefix has at least as many `lead` steps as the other kind, with equality overall.
fn is_dyck(steps: &[Step], lead: Step) -> bool {
    let mut h: i64 = 0;
    for &s in steps {
        h += if s == lead { 1 } else { -1 };
        if h < 0 {
            return false;
        }
    }
    h == 0
}

/// Two paths from the origin: `upper` is a Dyck path (every prefix has `#N ≥ #E`) and `lower`
/// is its mirror image across the diagonal (every prefix has `#E ≥ #N`). Their lengths are
/// `(n, n)` for even `n` and `(n + 1, n - 1)` for odd `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPair {
    upper: Vec<Step>,
    lower: Vec<Step>,
}

impl DyckPair {
    pub fn new(upper: Vec<Step>, lower: Vec<Step>) -> Result<Self, NilpError> {
        let sized = upper.len() == lower.len() || upper.len() == lower.len() + 2;
        if upper.is_empty() || !sized || !is_dyck(&upper, Step::N) || !is_dyck(&lower, Step::E) {
            return Err(NilpError::NotDyck);
        }
        Ok(DyckPair { upper, lower })
    }

    pub fn from_words(upper: &str, lower: &str) -> Result<Self, NilpError> {
        DyckPair::new(parse_steps(upper)?, parse_steps(lower)?)
    }

    pub fn n(&self) -> usize {
        if self.upper.len() == self.lower.len() {
            self.upper.len()
        } else {
            self.upper.len() - 1
        }
    }

    pub fn upper(&self) -> LatticePath {
        LatticePath::new((0, 0), self.upper.clone())
    }

    pub fn lower(&self) -> LatticePath {
        LatticePath::new((0, 0), self.lower.clone())
    }

    /// Every Dyck pair of size `n ≥ 1`, sorted.
    pub fn all(n: usize) -> Vec<DyckPair> {
        assert!(n >= 1);
        let (ul, ll) = if n.is_multiple_of(2) { (n, n) } else { (n + 1, n - 1) };
        let ups = dyck_words(ul, Step::N);
        let lows = dyck_words(ll, Step::E);
        let mut out: Vec<DyckPair> = ups
            .iter()
            .flat_map(|u| {
                lows.iter().map(|l| DyckPair {
                    upper: u.clone(),
                    lower: l.clone(),
                })
            })
            .collect();
        out.sort();
        out
    }
}

fn dyck_words(len: usize, lead: Step) -> Vec<Vec<Step>> {
    let other = if lead == Step::N { Step::E } else { Step::N };
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn go(len: usize, h: usize, lead: Step, other: Step, cur: &mut Vec<Step>, out: &mut Vec<Vec<Step>>) {
        if cur.len() == len {
            if h == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if h < len - cur.len() {
            cur.push(lead);
            go(len, h + 1, lead, other, cur, out);
            cur.pop();
        }
        if h > 0 {
            cur.push(other);
            go(len, h - 1, lead, other, cur, out);
            cur.pop();
        }
    }
    go(len, 0, lead, other, &mut cur, &mut out);
    out
}

#[derive(Serialize, Deserialize)]
struct DyckJson {
    n: usize,
    upper: String,
    lower: String,
}

impl Serialize for DyckPair {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        DyckJson {
            n: self.n(),
            upper: self.upper().step_string(),
            lower: self.lower().step_string(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DyckPair {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = DyckJson::deserialize(d)?;
        let p = DyckPair::from_words(&j.upper, &j.lower).map_err(serde::de::Error::custom)?;
        if p.n() != j.n {
            return Err(serde::de::Error::custom(format!(
                "path lengths give n = {}, not {}",
                p.n(),
                j.n
            )));
        }
        Ok(p)
    }
}

/// `(N·top, bottom·N)` for even size, `(N·top·E, bottom)` for odd size.
pub fn to_dyck_pair(t: &TreeLikeTableau) -> Result<DyckPair, NilpError> {
    if !is_almost_complete(t).map_err(|_| NilpError::NotBaxter)? {
        return Err(NilpError::NotAlmostComplete);
    }
    let p = phi_p(t)?;
    let mut upper = vec![Step::N];
    upper.extend(&p.top().steps);
    let mut lower = p.bottom().steps.clone();
    if p.n() % 2 == 0 {
        lower.push(Step::N);
    } else {
        upper.push(Step::E);
    }
    Ok(DyckPair::new(upper, lower).expect("almost complete tableaux give Dyck pairs"))
}

/// Strips the extra steps, puts the staircase E N E N … in the middle and inverts the triple.
pub fn from_dyck_pair(d: &DyckPair) -> Result<TreeLikeTableau, NilpError> {
    let n = d.n();
    let (top, bottom) = if n.is_multiple_of(2) {
        (d.upper[1..].to_vec(), d.lower[..n - 1].to_vec())
    } else {
        (d.upper[1..n].to_vec(), d.lower.clone())
    };
    let middle: Vec<Step> = (0..n - 1).map(|i| if i % 2 == 0 { Step::E } else { Step::N }).collect();
    let triple = NilpTriple::new(
        LatticePath::new(TOP_START, top),
        LatticePath::new(MIDDLE_START, middle),
        LatticePath::new(BOTTOM_START, bottom),
    )
    .map_err(|_| NilpError::NotDyck)?;
    let t = phi_p_inverse(&triple);
    if !is_almost_complete(&t).expect("inverse image is Baxter") {
        return Err(NilpError::NotDyck);
    }
    Ok(t)
}
