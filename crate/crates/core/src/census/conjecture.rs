//! Experimental: splitting alternating Baxter permutations into odd- and even-position parts.
//! Nothing here is a theorem; results are reported, never asserted.

use std::collections::BTreeSet;

use serde::Serialize;

use super::CensusError;
use crate::perm::{avoids, in_b, is_alternating_up, BivincularPattern, Permutation};

/// Standardized values at odd and at even positions.
pub fn conjecture_split(s: &Permutation) -> Result<(Permutation, Permutation), CensusError> {
    if !is_alternating_up(s) || !in_b(s) {
        return Err(CensusError::PreconditionViolated(s.clone()));
    }
    let odd: Vec<usize> = s.values().iter().step_by(2).copied().collect();
    let even: Vec<usize> = s.values().iter().skip(1).step_by(2).copied().collect();
    Ok((Permutation::standardize(&odd), Permutation::standardize(&even)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExperimentReport {
    pub experimental: bool,
    pub n: usize,
    /// Alternating-up permutations in the Baxter class of size `n`.
    pub domain_size: usize,
    /// `|Av_⌈n/2⌉(312)| · |Av_⌊n/2⌋(231)|`.
    pub codomain_size: usize,
    pub odd_parts_avoid_312: bool,
    pub even_parts_avoid_231: bool,
    pub image_size: usize,
    pub injective: bool,
    pub bijective: bool,
    /// First pair of distinct permutations with equal split, if any.
    pub collision: Option<(Permutation, Permutation)>,
}

pub fn conjecture_experiment(n: usize) -> ExperimentReport {
    let p312 = BivincularPattern::classical("312".parse().unwrap());
    let p231 = BivincularPattern::classical("231".parse().unwrap());
    let domain: Vec<Permutation> = Permutation::all(n)
        .into_iter()
        .filter(|s| is_alternating_up(s) && in_b(s))
        .collect();
    let mut image = std::collections::BTreeMap::new();
    let mut collision = None;
    let (mut odd_ok, mut even_ok) = (true, true);
    for s in &domain {
        let (o, e) = conjecture_split(s).expect("domain satisfies the precondition");
        odd_ok &= avoids(&o, &p312);
        even_ok &= avoids(&e, &p231);
        if let Some(prev) = image.insert((o, e), s.clone()) {
            collision.get_or_insert((prev, s.clone()));
        }
    }
    let count = |m: usize, p: &BivincularPattern| Permutation::all(m).iter().filter(|s| avoids(s, p)).count();
    let codomain_size = count(n.div_ceil(2), &p312) * count(n / 2, &p231);
    let in_codomain: BTreeSet<_> = image
        .keys()
        .filter(|(o, e)| avoids(o, &p312) && avoids(e, &p231))
        .collect();
    let injective = collision.is_none();
    ExperimentReport {
        experimental: true,
        n,
        domain_size: domain.len(),
        codomain_size,
        odd_parts_avoid_312: odd_ok,
        even_parts_avoid_231: even_ok,
        image_size: image.len(),
        injective,
        bijective: injective && in_codomain.len() == codomain_size && image.len() == codomain_size,
        collision,
    }
}
