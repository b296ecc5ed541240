use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use serde_json::{json, Value};

use super::conjecture::conjecture_experiment;
use super::sequences::{alternating_count, baxter_number};
use crate::floorplan::{enumerate_pfps, is_alternating, pack, phi_f, psi_f, PackedFloorplan};
use crate::nilp::{
    brute_force_lgv, enumerate_triples, from_dyck_pair, lgv, phi_p, phi_p_inverse, to_dyck_pair, DyckPair, LgvParams,
};
use crate::perm::{
    ascents, extremal_factors, in_b, in_b_via_inverse, is_alternating_up, iso_labeling, left_to_right_minima,
    occurrences, phi, phi_inverse, BivincularPattern, FactorKind, Permutation,
};
use crate::tlt::{enumerate_baxter_tlts, enumerate_tlts, is_almost_complete, is_baxter, Cell, TreeLikeTableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One check at one size. A failing check carries a counterexample in `witness`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub check: String,
    pub n: usize,
    pub status: Status,
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub experimental: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    /// True iff every non-experimental check passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.experimental || c.status == Status::Pass)
    }

    pub fn to_json_lines(&self) -> String {
        self.checks
            .iter()
            .map(|c| serde_json::to_string(c).unwrap() + "\n")
            .collect()
    }

    fn record(&mut self, check: &str, n: usize, outcome: Result<(), Value>) {
        let (status, witness) = match outcome {
            Ok(()) => (Status::Pass, None),
            Err(w) => (Status::Fail, Some(w)),
        };
        self.checks.push(Check {
            check: check.to_string(),
            n,
            status,
            witness,
            experimental: false,
        });
    }
}

fn sized(expected: usize, found: usize) -> Result<(), Value> {
    if expected == found {
        Ok(())
    } else {
        Err(json!({ "expected": expected, "found": found }))
    }
}

fn first_failure<T: Serialize>(items: &[T], ok: impl Fn(&T) -> bool) -> Result<(), Value> {
    match items.iter().find(|x| !ok(x)) {
        Some(x) => Err(serde_json::to_value(x).unwrap()),
        None => Ok(()),
    }
}

fn same_set<T: Ord + Serialize>(a: impl IntoIterator<Item = T>, b: impl IntoIterator<Item = T>) -> Result<(), Value> {
    let a: BTreeSet<T> = a.into_iter().collect();
    let b: BTreeSet<T> = b.into_iter().collect();
    match a.symmetric_difference(&b).next() {
        Some(x) => Err(serde_json::to_value(x).unwrap()),
        None => Ok(()),
    }
}

fn statistics_hold(t: &TreeLikeTableau) -> bool {
    let s = phi(t);
    let factors = extremal_factors(t);
    let consecutive = factors.iter().all(|f| {
        let i = s.position_of(f.first);
        s.position_of(f.second) == i + 1 && (f.first < f.second) == (f.kind == FactorKind::Ascent)
    });
    let asc: BTreeSet<usize> = factors
        .iter()
        .filter(|f| f.kind == FactorKind::Ascent)
        .map(|f| s.position_of(f.first))
        .collect();
    consecutive && factors.len() + 1 == s.len() && asc == ascents(&s).into_iter().collect()
}

fn minima_hold(t: &TreeLikeTableau) -> bool {
    let labels = iso_labeling(t);
    let first_col: BTreeSet<usize> = (1..=t.num_rows())
        .map(|r| Cell::new(r, 1))
        .filter(|&c| t.is_pointed(c))
        .map(|c| labels.get(c))
        .collect();
    first_col == left_to_right_minima(&phi(t)).into_iter().collect()
}

/// Every cross-family check at each size `1..=max_size`, in a fixed order.
pub fn verify_all(max_size: usize) -> VerificationReport {
    assert!(max_size >= 1);
    let mut r = VerificationReport::default();
    let p2plus = BivincularPattern::parse("2+-1-2").unwrap();
    for n in 1..=max_size {
        let bax: usize = baxter_number(n)
            .try_into()
            .expect("Baxter number fits in usize at desk scale");
        let tlts = enumerate_baxter_tlts(n);
        let pfps = enumerate_pfps(n);
        let triples = enumerate_triples(n);
        let perms: Vec<Permutation> = Permutation::all(n).into_iter().filter(in_b).collect();
        r.record("count.baxter_tlts", n, sized(bax, tlts.len()));
        r.record(
            "count.baxter_tlts_filtered",
            n,
            sized(bax, enumerate_tlts(n).iter().filter(|t| is_baxter(t)).count()),
        );
        r.record("count.pfps", n, sized(bax, pfps.len()));
        r.record("count.triples", n, sized(bax, triples.len()));
        r.record("count.perms", n, sized(bax, perms.len()));
        r.record(
            "count.perms_inverse_route",
            n,
            sized(bax, Permutation::all(n).iter().filter(|s| in_b_via_inverse(s)).count()),
        );

        r.record("image.phi_b", n, same_set(tlts.iter().map(phi), perms.iter().cloned()));
        r.record(
            "image.phi_f",
            n,
            same_set(tlts.iter().map(|t| phi_f(t).unwrap()), pfps.iter().cloned()),
        );
        r.record(
            "image.phi_p",
            n,
            same_set(tlts.iter().map(|t| phi_p(t).unwrap()), triples.iter().cloned()),
        );

        r.record(
            "roundtrip.phi_f",
            n,
            first_failure(&tlts, |t| psi_f(&phi_f(t).unwrap()) == *t),
        );
        r.record(
            "roundtrip.psi_f",
            n,
            first_failure(&pfps, |f| phi_f(&psi_f(f)).unwrap() == *f),
        );
        r.record(
            "roundtrip.phi",
            n,
            first_failure(&enumerate_tlts(n), |t| phi_inverse(&phi(t)) == *t),
        );
        r.record(
            "roundtrip.phi_p",
            n,
            first_failure(&tlts, |t| phi_p_inverse(&phi_p(t).unwrap()) == *t),
        );

        r.record("stats.extremal_factors", n, first_failure(&tlts, statistics_hold));
        r.record("stats.ltr_minima", n, first_failure(&tlts, minima_hold));
        r.record(
            "stats.crossings",
            n,
            first_failure(&tlts, |t| t.crossings().len() == occurrences(&phi(t), &p2plus).len()),
        );

        let brute = brute_force_lgv(n);
        let mismatch = LgvParams::grid(n).find(|lp| lgv(lp) != brute.get(lp).copied().unwrap_or(0).into());
        r.record(
            "lgv.brute_force",
            n,
            mismatch.map_or(Ok(()), |lp| Err(serde_json::to_value(lp).unwrap())),
        );
        let total: num_bigint::BigInt = LgvParams::grid(n).map(|lp| lgv(&lp)).sum();
        r.record("lgv.sum", n, sized(bax, total.try_into().unwrap_or(usize::MAX)));
        let mut by_stats: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for s in &perms {
            *by_stats
                .entry((ascents(s).len(), left_to_right_minima(s).len()))
                .or_default() += 1;
        }
        let mut by_lgv: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (lp, c) in &brute {
            *by_lgv.entry((lp.k, lp.r)).or_default() += c;
        }
        r.record(
            "lgv.refined_perms",
            n,
            if by_stats == by_lgv {
                Ok(())
            } else {
                Err(json!({ "perms": format!("{by_stats:?}"), "lgv": format!("{by_lgv:?}") }))
            },
        );

        let alt = alternating_count(n).try_into().unwrap_or(usize::MAX);
        let hat: Vec<TreeLikeTableau> = tlts
            .iter()
            .filter(|t| is_almost_complete(t).unwrap())
            .cloned()
            .collect();
        let alt_pfps: Vec<PackedFloorplan> = pfps.iter().filter(|f| is_alternating(f)).cloned().collect();
        let alt_perms: Vec<Permutation> = perms.iter().filter(|s| is_alternating_up(s)).cloned().collect();
        r.record("alternating.count_tlts", n, sized(alt, hat.len()));
        r.record("alternating.count_pfps", n, sized(alt, alt_pfps.len()));
        r.record("alternating.count_perms", n, sized(alt, alt_perms.len()));
        r.record("alternating.count_dyck", n, sized(alt, DyckPair::all(n).len()));
        r.record(
            "alternating.image_phi_f",
            n,
            same_set(hat.iter().map(|t| phi_f(t).unwrap()), alt_pfps),
        );
        r.record("alternating.image_phi_b", n, same_set(hat.iter().map(phi), alt_perms));
        r.record(
            "alternating.image_dyck",
            n,
            same_set(hat.iter().map(|t| to_dyck_pair(t).unwrap()), DyckPair::all(n)),
        );
        r.record(
            "alternating.roundtrip_dyck",
            n,
            first_failure(&hat, |t| from_dyck_pair(&to_dyck_pair(t).unwrap()).as_ref() == Ok(t)),
        );

        r.record(
            "pack.fixes_pfps",
            n,
            first_failure(&pfps, |f| pack(&f.to_floorplan()).as_ref() == Ok(f)),
        );

        let e = conjecture_experiment(n);
        let ok = e.odd_parts_avoid_312 && e.even_parts_avoid_231;
        r.checks.push(Check {
            check: "conjecture.split".to_string(),
            n,
            status: if ok { Status::Pass } else { Status::Fail },
            witness: Some(serde_json::to_value(&e).unwrap()),
            experimental: true,
        });
    }
    r
}
