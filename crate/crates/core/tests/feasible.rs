mod common;

use std::collections::BTreeSet;

use common::{solver_case, table};
use feasichar::brauer::BrauerTable;
use feasichar::feasible::{
    canonical_key, check_feasible, class_families, compatible_pairs, enumerate_fusion_patterns, feasible_characters,
    mark_nongcr, mark_possprim, nongcr_dimension_bound, solve_module, special_case_note, trivial_g_factors,
    FeasibleCharacter, Flag, FusionPattern, GroupContext, ModuleSelection, SolveOptions,
};
use feasichar::rootsystem::LieType;
use proptest::prelude::*;

fn system() -> impl Strategy<Value = (Vec<(u64, [usize; 3])>, Vec<u32>, Vec<(usize, usize)>)> {
    (1usize..=3).prop_flat_map(|n| {
        (
            prop::collection::vec((1u64..=5, [0usize..8, 0usize..8, 0usize..8]), n),
            prop::collection::vec(0u32..=4, n),
            prop::collection::vec((0usize..3, 0usize..8), 0..4),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn solver_matches_exhaustive_grid((rows, mult, decoys) in system()) {
        prop_assume!(mult.iter().any(|&a| a > 0));
        let (expect, got) = solver_case(&rows, &mult, &decoys);
        prop_assert!(expect.contains(&mult));
        prop_assert_eq!(got, expect);
    }
}

#[test]
fn families_cover_every_class() {
    for name in ["a5_p0.bct", "l27_p3.bct", "a6_p0.bct", "a17_p2.bct", "u33_p7.bct"] {
        let t = table(name);
        let f = class_families(&t).unwrap();
        let covered: BTreeSet<usize> = f.powers.iter().flatten().copied().collect();
        assert_eq!(covered.len(), t.classes.len(), "{name}");
        for (g, seq) in f.generators.iter().zip(&f.powers) {
            assert_eq!(seq.len() as u32, t.classes[*g].order);
            assert_eq!(*seq.last().unwrap(), t.identity_index().unwrap());
        }
    }
    let f = class_families(&table("a5_p0.bct")).unwrap();
    assert_eq!(f.generators.len(), 3);
}

/// Fusion patterns solved one module at a time, paired by hand.
fn pairs_by_pattern(t: &BrauerTable, ctx: &GroupContext) -> BTreeSet<(Vec<u32>, Vec<u32>)> {
    let mut out = BTreeSet::new();
    for f in enumerate_fusion_patterns(t, ctx).unwrap() {
        let adj = solve_module(t, &f, &ctx.adjoint);
        let min = solve_module(t, &f, &ctx.minimal);
        for a in &adj {
            for m in &min {
                out.insert((a.clone(), m.clone()));
            }
        }
    }
    out
}

#[test]
fn pipeline_agrees_with_pattern_enumeration() {
    for (name, g) in [("a5_p0.bct", LieType::F4), ("a5_p3.bct", LieType::F4), ("l27_p3.bct", LieType::F4)] {
        let t = table(name);
        let ctx = GroupContext::new(g).unwrap();
        let oracle = pairs_by_pattern(&t, &ctx);
        let pairs = compatible_pairs(&t, &ctx, ModuleSelection::default()).unwrap();
        let got: BTreeSet<(Vec<u32>, Vec<u32>)> =
            pairs.iter().map(|fc| (fc.mult_adjoint.clone().unwrap(), fc.mult_minimal.clone().unwrap())).collect();
        assert_eq!(got, oracle, "{name}");
        for fc in &pairs {
            check_feasible(fc, &t, &ctx).unwrap();
        }

        let reps = feasible_characters(&t, &ctx, &SolveOptions::default()).unwrap();
        let orbits: BTreeSet<_> =
            oracle.iter().map(|(a, m)| canonical_key(&t, false, &(Some(a.clone()), Some(m.clone())))).collect();
        let keys: BTreeSet<_> = reps.iter().map(|fc| fc.key()).collect();
        assert_eq!(keys, orbits, "{name}");
        assert_eq!(keys.len(), reps.len());
    }
}

#[test]
fn every_result_checks_out() {
    let cases = [
        ("a5_p0.bct", LieType::F4),
        ("a6_p5.bct", LieType::F4),
        ("l27_p0.bct", LieType::F4),
        ("j2_p2.bct", LieType::F4),
        ("u33_p7.bct", LieType::E(6)),
        ("a5_p5.bct", LieType::E(7)),
        ("a17_p2.bct", LieType::E(8)),
    ];
    for (name, g) in cases {
        let t = table(name);
        let ctx = GroupContext::new(g).unwrap();
        let reps = feasible_characters(&t, &ctx, &SolveOptions::default()).unwrap();
        assert!(!reps.is_empty(), "{name} in {g}");
        for fc in &reps {
            check_feasible(fc, &t, &ctx).unwrap_or_else(|e| panic!("{name} in {g}: {e}"));
            assert_eq!(canonical_key(&t, g == LieType::E(6), &fc.key()), fc.key());
        }
    }
}

#[test]
fn tampering_is_detected() {
    let t = table("a5_p0.bct");
    let ctx = GroupContext::new(LieType::F4).unwrap();
    let mut fc = feasible_characters(&t, &ctx, &SolveOptions::default()).unwrap().remove(0);
    let m = fc.mult_adjoint.as_mut().unwrap();
    m[1] += 1;
    m[2] -= 1;
    assert!(check_feasible(&fc, &t, &ctx).is_err());
}

#[test]
fn solving_requires_exceptional_targets() {
    assert!(GroupContext::new(LieType::G2).is_err());
    assert!(GroupContext::new(LieType::D(4)).is_err());
    let ctx = GroupContext::new(LieType::E(8)).unwrap();
    assert!(ctx.minimal_is_adjoint());
    assert!(!GroupContext::new(LieType::E(7)).unwrap().minimal_is_adjoint());
}

fn row(adjoint: &[u32], minimal: &[u32]) -> FeasibleCharacter {
    FeasibleCharacter {
        fusion: FusionPattern { images: Vec::new() },
        mult_adjoint: Some(adjoint.to_vec()),
        mult_minimal: Some(minimal.to_vec()),
        possprim: Flag::Unknown,
        nongcr: Flag::Unknown,
    }
}

#[test]
fn flags() {
    for (s, f) in [("1", Flag::Yes), ("0", Flag::No), ("?", Flag::Unknown)] {
        assert_eq!(s.parse::<Flag>().unwrap(), f);
        assert_eq!(f.to_string(), s);
    }
    assert!("maybe".parse::<Flag>().is_err());

    let a5 = table("a5_p0.bct");
    let pp = |r: &FeasibleCharacter| mark_possprim(r, &a5, LieType::F4, 0).unwrap();
    assert_eq!(pp(&row(&[0, 3, 5, 2, 4], &[0, 1, 0, 2, 3])), Flag::Yes);
    assert_eq!(pp(&row(&[3, 3, 5, 5, 1], &[0, 1, 0, 2, 3])), Flag::No);
    assert_eq!(pp(&row(&[0, 4, 4, 2, 4], &[1, 1, 1, 1, 3])), Flag::No);
    let mut partial = row(&[0, 3, 5, 2, 4], &[]);
    partial.mult_minimal = None;
    assert_eq!(pp(&partial), Flag::Unknown);
    assert_eq!(mark_nongcr(&partial, &a5, LieType::F4, 0, None).unwrap(), Flag::No);

    let a5p3 = table("a5_p3.bct");
    let ng = |r: &FeasibleCharacter, levi| mark_nongcr(r, &a5p3, LieType::F4, 3, levi).unwrap();
    let first = row(&[21, 1, 0, 7], &[1, 7, 0, 1]);
    assert_eq!(ng(&first, Some(true)), Flag::Yes);
    assert_eq!(ng(&first, Some(false)), Flag::No);
    assert_eq!(ng(&first, None), Flag::Unknown);
    assert_eq!(ng(&row(&[9, 0, 13, 1], &[8, 0, 6, 0]), Some(true)), Flag::No);
    partial.mult_adjoint = None;
    assert_eq!(mark_nongcr(&partial, &a5, LieType::F4, 0, Some(true)).unwrap(), Flag::Unknown);
}

#[test]
fn composition_data_for_flags() {
    assert_eq!(trivial_g_factors(LieType::F4, 0).unwrap(), (0, 0));
    assert_eq!(trivial_g_factors(LieType::F4, 3).unwrap(), (0, 1));
    assert_eq!(trivial_g_factors(LieType::E(6), 3).unwrap(), (1, 0));
    assert_eq!(trivial_g_factors(LieType::E(7), 2).unwrap(), (1, 0));
    assert_eq!(
        [LieType::F4, LieType::E(6), LieType::E(7), LieType::E(8)].map(nongcr_dimension_bound),
        [14, 20, 35, 64]
    );
    assert!(special_case_note(LieType::F4, 2).is_some());
    assert!(special_case_note(LieType::F4, 3).is_none());
    assert!(special_case_note(LieType::E(6), 2).is_none());
}
