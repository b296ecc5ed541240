use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::NilpError;

/// A unit step: `N = (0,1)`, `E = (1,0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    N,
    E,
}

impl Step {
    pub fn letter(self) -> char {
        match self {
            Step::N => 'N',
            Step::E => 'E',
        }
    }

    pub fn from_letter(c: char) -> Option<Step> {
        match c {
            'N' => Some(Step::N),
            'E' => Some(Step::E),
            _ => None,
        }
    }
}

pub type Point = (i64, i64);

/// A finite N/E path from `start`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath {
    pub start: Point,
    pub steps: Vec<Step>,
}

pub fn parse_steps(text: &str) -> Result<Vec<Step>, NilpError> {
    text.chars()
        .map(|c| Step::from_letter(c).ok_or_else(|| NilpError::Parse(text.to_string())))
        .collect()
}

impl LatticePath {
    pub fn new(start: Point, steps: Vec<Step>) -> Self {
        LatticePath { start, steps }
    }

    pub fn parse(start: Point, text: &str) -> Result<Self, NilpError> {
        Ok(LatticePath::new(start, parse_steps(text)?))
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn count(&self, s: Step) -> usize {
        self.steps.iter().filter(|&&t| t == s).count()
    }

    /// Every lattice point visited, `start` included.
    pub fn points(&self) -> Vec<Point> {
        let mut p = self.start;
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(p);
        for s in &self.steps {
            match s {
                Step::N => p.1 += 1,
                Step::E => p.0 += 1,
            }
            out.push(p);
        }
        out
    }

    pub fn end(&self) -> Point {
        let e = self.count(Step::E) as i64;
        let n = self.count(Step::N) as i64;
        (self.start.0 + e, self.start.1 + n)
    }

    pub fn leading_run(&self, s: Step) -> usize {
        self.steps.iter().take_while(|&&t| t == s).count()
    }

    pub fn trailing_run(&self, s: Step) -> usize {
        self.steps.iter().rev().take_while(|&&t| t == s).count()
    }

    pub fn step_string(&self) -> String {
        self.steps.iter().map(|s| s.letter()).collect()
    }

    pub fn shifted(&self, start: Point) -> LatticePath {
        LatticePath::new(start, self.steps.clone())
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{}) {}", self.start.0, self.start.1, self.step_string())
    }
}

#[derive(Serialize, Deserialize)]
struct PathJson {
    start: Point,
    steps: String,
}

impl Serialize for LatticePath {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PathJson {
            start: self.start,
            steps: self.step_string(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LatticePath {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = PathJson::deserialize(d)?;
        LatticePath::parse(j.start, &j.steps).map_err(serde::de::Error::custom)
    }
}

/// Every N/E word of length `len` with exactly `e` east steps, in lexicographic order (N < E).
pub fn words(len: usize, e: usize) -> Vec<Vec<Step>> {
    fn go(len: usize, e: usize, cur: &mut Vec<Step>, out: &mut Vec<Vec<Step>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let left = len - cur.len();
        let used_e = cur.iter().filter(|&&s| s == Step::E).count();
        if left > e - used_e {
            cur.push(Step::N);
            go(len, e, cur, out);
            cur.pop();
        }
        if used_e < e {
            cur.push(Step::E);
            go(len, e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if e <= len {
        go(len, e, &mut Vec::with_capacity(len), &mut out);
    }
    out
}
