//! Acceptance gate: one line per criterion with its measured time and budget.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use baxter_core::census::conjecture_experiment;
use baxter_core::floorplan::{
    brute_force_floorplans, count_forbidden_pairs, enumerate_pfps, is_alternating, pack, pack_with_trace, phi_f, psi_f,
    validate_floorplan, PackedFloorplan, Tile,
};
use baxter_core::nilp::{
    brute_force_lgv, enumerate_triples, from_dyck_pair, lgv, phi_p, phi_p_inverse, to_dyck_pair, DyckPair, LgvParams,
};
use baxter_core::perm::{
    ascents, descents, extremal_factors, in_b, is_alternating_up, iso_labeling, left_to_right_minima, occurrences, phi,
    phi_inverse, BivincularPattern, FactorKind, Permutation,
};
use baxter_core::tlt::{enumerate_baxter_tlts, enumerate_tlts, is_almost_complete, Cell, TreeLikeTableau};
use num_bigint::BigInt;

const BAX: [usize; 8] = [1, 2, 6, 22, 92, 422, 2074, 10754];
const ALT: [usize; 7] = [1, 1, 2, 4, 10, 25, 70];
const SIGMA: &str = "6 3 2 10 4 5 1 7 9 8 11 12";

type Outcome = Result<(), String>;
type Criterion = (&'static str, u64, fn() -> Outcome, bool);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn counts() -> Outcome {
    for n in 1..=7 {
        let want = BAX[n - 1];
        let got = [
            enumerate_baxter_tlts(n).len(),
            enumerate_pfps(n).len(),
            enumerate_triples(n).len(),
        ];
        ensure(got == [want; 3], || {
            format!("n={n}: tlt/pfp/triple counts {got:?}, expected {want}")
        })?;
    }
    for n in 1..=8 {
        let filtered = Permutation::all(n).iter().filter(|s| in_b(s)).count();
        ensure(filtered == BAX[n - 1], || {
            format!("n={n}: permutation filter gives {filtered}")
        })?;
    }
    Ok(())
}

fn size_four() -> Outcome {
    let tlts = enumerate_baxter_tlts(4);
    let pfps: BTreeSet<PackedFloorplan> = enumerate_pfps(4).into_iter().collect();
    let triples: BTreeSet<_> = enumerate_triples(4).into_iter().collect();
    let b4: BTreeSet<Permutation> = Permutation::all(4).into_iter().filter(in_b).collect();
    let excluded: BTreeSet<Permutation> = ["3142", "3412"].iter().map(|s| s.parse().unwrap()).collect();
    let expected_b4: BTreeSet<Permutation> = Permutation::all(4)
        .into_iter()
        .filter(|s| !excluded.contains(s))
        .collect();
    ensure(
        tlts.len() == 22 && pfps.len() == 22 && triples.len() == 22 && b4.len() == 22,
        || format!("sizes {} {} {} {}", tlts.len(), pfps.len(), triples.len(), b4.len()),
    )?;
    ensure(b4 == expected_b4, || "B_4 differs from S_4 minus 3142, 3412".into())?;
    ensure(tlts.iter().map(phi).collect::<BTreeSet<_>>() == b4, || {
        "phi image differs".into()
    })?;
    ensure(
        tlts.iter().map(|t| phi_f(t).unwrap()).collect::<BTreeSet<_>>() == pfps,
        || "phi_f image differs".into(),
    )?;
    ensure(
        tlts.iter().map(|t| phi_p(t).unwrap()).collect::<BTreeSet<_>>() == triples,
        || "phi_p image differs".into(),
    )
}

fn round_trips() -> Outcome {
    for n in 1..=7 {
        for t in enumerate_baxter_tlts(n) {
            ensure(psi_f(&phi_f(&t).unwrap()) == t, || format!("psi_f . phi_f moves {t:?}"))?;
            ensure(phi_inverse(&phi(&t)) == t, || format!("phi_inverse . phi moves {t:?}"))?;
            ensure(phi_p_inverse(&phi_p(&t).unwrap()) == t, || {
                format!("phi_p_inverse . phi_p moves {t:?}")
            })?;
        }
    }
    for n in 1..=6 {
        for t in enumerate_tlts(n) {
            ensure(phi_inverse(&phi(&t)) == t, || {
                format!("phi_inverse . phi moves non-Baxter {t:?}")
            })?;
        }
    }
    Ok(())
}

fn sigma_occurrences() -> Outcome {
    let s: Permutation = SIGMA.parse().unwrap();
    let sets = |v: &[[usize; 3]]| v.iter().map(|t| t.to_vec()).collect::<BTreeSet<_>>();
    let table = [
        (
            "3-1-2",
            sets(&[
                [6, 3, 4],
                [6, 3, 5],
                [6, 2, 4],
                [6, 2, 5],
                [6, 4, 5],
                [10, 4, 5],
                [10, 4, 7],
                [10, 4, 9],
                [10, 4, 8],
                [10, 5, 7],
                [10, 5, 9],
                [10, 5, 8],
                [10, 1, 7],
                [10, 1, 9],
                [10, 1, 8],
                [10, 7, 9],
                [10, 7, 8],
            ]),
        ),
        ("3-12", sets(&[[6, 4, 5], [10, 4, 5], [10, 1, 7], [10, 7, 9]])),
        (
            "2+-1-2",
            sets(&[
                [6, 3, 5],
                [6, 2, 5],
                [6, 4, 5],
                [10, 4, 9],
                [10, 5, 9],
                [10, 1, 9],
                [10, 7, 9],
            ]),
        ),
        ("2+-12", sets(&[[6, 4, 5], [10, 7, 9]])),
    ];
    let expected_counts = [17, 4, 7, 2];
    for ((pattern, want), count) in table.iter().zip(expected_counts) {
        let occ = occurrences(&s, &BivincularPattern::parse(pattern).unwrap());
        let got: BTreeSet<Vec<usize>> = occ.iter().map(|o| o.values(&s)).collect();
        ensure(occ.len() == count && want.len() == count && got == *want, || {
            format!("{pattern}: {} occurrences, values {got:?}", occ.len())
        })?;
    }
    Ok(())
}

fn first_column_labels(t: &TreeLikeTableau) -> BTreeSet<usize> {
    let labels = iso_labeling(t);
    (1..=t.num_rows())
        .map(|r| Cell::new(r, 1))
        .filter(|&c| t.is_pointed(c))
        .map(|c| labels.get(c))
        .collect()
}

fn statistics() -> Outcome {
    let p = BivincularPattern::parse("2+-1-2").unwrap();
    for n in 1..=7 {
        for t in enumerate_baxter_tlts(n) {
            let s = phi(&t);
            let mut asc = BTreeSet::new();
            let mut desc = BTreeSet::new();
            for f in extremal_factors(&t) {
                let i = s.position_of(f.first);
                ensure(s.position_of(f.second) == i + 1, || {
                    format!("factor {f:?} of {s} is not adjacent")
                })?;
                match f.kind {
                    FactorKind::Ascent => asc.insert(i),
                    FactorKind::Descent => desc.insert(i),
                };
            }
            ensure(asc.into_iter().collect::<Vec<_>>() == ascents(&s), || {
                format!("ascents of {s}")
            })?;
            ensure(desc.into_iter().collect::<Vec<_>>() == descents(&s), || {
                format!("descents of {s}")
            })?;
            let minima: BTreeSet<usize> = left_to_right_minima(&s).into_iter().collect();
            ensure(minima == first_column_labels(&t), || {
                format!("left-to-right minima of {s}")
            })?;
            ensure(t.crossings().len() == occurrences(&s, &p).len(), || {
                format!("crossings of {s}")
            })?;
        }
    }
    Ok(())
}

fn lgv_counts() -> Outcome {
    for n in 1..=10 {
        let total: BigInt = LgvParams::grid(n).map(|lp| lgv(&lp)).sum();
        ensure(total == BigInt::from(baxter_core::census::baxter_number(n)), || {
            format!("n={n}: grid sum {total}")
        })?;
    }
    for n in 1..=7 {
        let brute = brute_force_lgv(n);
        for lp in LgvParams::grid(n) {
            let want = BigInt::from(brute.get(&lp).copied().unwrap_or(0));
            ensure(lgv(&lp) == want, || {
                format!("{lp:?}: lgv {} vs brute force {want}", lgv(&lp))
            })?;
        }
        let mut by_stats: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
        for s in Permutation::all(n).into_iter().filter(in_b) {
            *by_stats
                .entry((ascents(&s).len(), left_to_right_minima(&s).len()))
                .or_default() += 1;
        }
        let mut by_lgv: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
        for lp in LgvParams::grid(n) {
            let v = lgv(&lp);
            if v != BigInt::from(0) {
                *by_lgv.entry((lp.k, lp.r)).or_default() += v;
            }
        }
        ensure(by_stats == by_lgv, || {
            format!("n={n}: refined counts {by_stats:?} vs {by_lgv:?}")
        })?;
    }
    Ok(())
}

fn alternating() -> Outcome {
    for n in 1..=7 {
        let want = ALT[n - 1];
        let hat: Vec<TreeLikeTableau> = enumerate_baxter_tlts(n)
            .into_iter()
            .filter(|t| is_almost_complete(t).unwrap())
            .collect();
        let pfps: BTreeSet<PackedFloorplan> = enumerate_pfps(n).into_iter().filter(is_alternating).collect();
        let perms: BTreeSet<Permutation> = Permutation::all(n)
            .into_iter()
            .filter(|s| in_b(s) && is_alternating_up(s))
            .collect();
        let dyck: BTreeSet<DyckPair> = DyckPair::all(n).into_iter().collect();
        let got = [hat.len(), pfps.len(), perms.len(), dyck.len()];
        ensure(got == [want; 4], || format!("n={n}: counts {got:?}, expected {want}"))?;
        ensure(
            hat.iter().map(|t| phi_f(t).unwrap()).collect::<BTreeSet<_>>() == pfps,
            || format!("n={n}: phi_f image"),
        )?;
        ensure(hat.iter().map(phi).collect::<BTreeSet<_>>() == perms, || {
            format!("n={n}: phi image")
        })?;
        ensure(
            hat.iter().map(|t| to_dyck_pair(t).unwrap()).collect::<BTreeSet<_>>() == dyck,
            || format!("n={n}: Dyck image"),
        )?;
        for t in &hat {
            ensure(from_dyck_pair(&to_dyck_pair(t).unwrap()).as_ref() == Ok(t), || {
                format!("Dyck round trip {t:?}")
            })?;
        }
        for d in &dyck {
            let back = to_dyck_pair(&from_dyck_pair(d).unwrap()).unwrap();
            ensure(back == *d, || format!("Dyck round trip {d:?}"))?;
        }
    }
    Ok(())
}

fn packing() -> Outcome {
    // Substitute for the appendix example: one forbidden pair, fixed by a single slide.
    let t = Tile::new;
    let example = validate_floorplan(
        3,
        3,
        vec![
            t(0, 0, 3, 1),
            t(0, 1, 1, 1),
            t(1, 1, 2, 1),
            t(0, 2, 2, 1),
            t(2, 2, 1, 1),
        ],
    )
    .unwrap();
    let trace = pack_with_trace(&example).map_err(|e| e.to_string())?;
    ensure(
        count_forbidden_pairs(example.tiles()) == 1 && trace.steps.len() == 1,
        || format!("example took {} steps", trace.steps.len()),
    )?;
    let mut outputs: BTreeMap<usize, BTreeSet<PackedFloorplan>> = BTreeMap::new();
    for f in brute_force_floorplans(5, 5).into_iter().chain([example]) {
        let trace = pack_with_trace(&f).map_err(|e| format!("{f:?}: {e}"))?;
        let mut prev = count_forbidden_pairs(f.tiles());
        for s in &trace.steps {
            ensure(s.forbidden_before == prev && s.forbidden_after < prev, || {
                format!("non-decreasing step on {f:?}")
            })?;
            prev = s.forbidden_after;
        }
        ensure(prev == 0, || format!("{f:?} not fully packed"))?;
        let again = pack(&trace.result.to_floorplan()).map_err(|e| e.to_string())?;
        ensure(again == trace.result, || format!("pack not idempotent on {f:?}"))?;
        outputs.entry(f.tiles().len()).or_default().insert(trace.result);
    }
    let counts: Vec<usize> = (1..=5).map(|n| outputs.get(&n).map_or(0, BTreeSet::len)).collect();
    ensure(counts == BAX[..5], || format!("distinct pack outputs {counts:?}"))
}

/// Reported, not asserted.
fn conjecture() -> Outcome {
    let mut all_ok = true;
    for n in 1..=8 {
        let e = conjecture_experiment(n);
        all_ok &= e.odd_parts_avoid_312 && e.even_parts_avoid_231;
        println!(
            "      n={n}: domain {} codomain {} image {} odd avoid 312 {} even avoid 231 {} injective {} bijective {}",
            e.domain_size,
            e.codomain_size,
            e.image_size,
            e.odd_parts_avoid_312,
            e.even_parts_avoid_231,
            e.injective,
            e.bijective
        );
    }
    ensure(all_ok, || "split parts do not avoid 312 / 231".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("counts", 120, counts, true),
        ("size 4", 1, size_four, true),
        ("round trips", 300, round_trips, true),
        ("size-12 occurrences", 1, sigma_occurrences, true),
        ("statistics", 120, statistics, true),
        ("lgv", 180, lgv_counts, true),
        ("alternating families", 60, alternating, true),
        ("packing", 120, packing, true),
        ("conjecture (report only)", 60, conjecture, false),
    ];
    let mut failed = 0;
    for (i, (name, budget, run, asserted)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(took < Duration::from_secs(budget), || {
                format!("over budget of {budget}s")
            })
        });
        let tag = match (&outcome, asserted) {
            (Ok(()), _) => "PASS",
            (Err(_), true) => "FAIL",
            (Err(_), false) => "NOTE",
        };
        let detail = outcome.as_ref().err().map(|e| format!(": {e}")).unwrap_or_default();
        println!(
            "{tag} criterion {}: {name} ({:.2}s, budget {budget}s){detail}",
            i + 1,
            took.as_secs_f64()
        );
        if asserted && outcome.is_err() {
            failed += 1;
        }
    }
    println!("{} of 8 asserted criteria passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
