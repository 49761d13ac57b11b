//! Property tests for the algebraic identities the calculator relies on:
//! closed forms against recursions, dual computation routes against each
//! other, and the structural invariants of the data model.

use num::rational::BigRational;
use num::Zero;
use parabound_core::bounds::{
    compute_report, f_closed_form, f_value, g_value, h_value, legacy_upper,
};
use parabound_core::datum::{
    datum_defect, datum_gcd, parabolic_degree, support_degree, validate_datum, weight_lcm,
    ModuliContext, ParabolicDatum, ParabolicPoint, Weight,
};
use parabound_core::flag::{
    check_flag_superadditivity, flag_dimension, flag_dimension_by_identity, FlagShape,
};
use parabound_core::isotropy::{isotropy_sum, isotropy_sum_double_loop, IsotropyInstance};
use parabound_core::rat;
use proptest::prelude::*;

fn grid_defects() -> Vec<BigRational> {
    [(0, 1), (1, 2), (1, 1), (3, 2), (2, 1), (3, 1), (6, 1)]
        .iter()
        .map(|&(n, d)| rat::frac(n, d))
        .collect()
}

#[test]
fn f_matches_closed_form_and_g_on_grid() {
    for g in 0..=6u64 {
        for m in grid_defects() {
            for r in 0..=20u64 {
                let f = f_value(g, &m, r);
                assert_eq!(f, f_closed_form(g, &m, r), "closed form at g={g} m={m} r={r}");
                assert_eq!(f, g_value(g, &m, r), "G identity at g={g} m={m} r={r}");
            }
        }
    }
}

#[test]
fn f_is_max_of_h() {
    for g in 0..=4u64 {
        for m in grid_defects() {
            for r in 1..=12u64 {
                let max_h = (0..r)
                    .map(|t| h_value(g, &m, r, t).unwrap())
                    .max()
                    .unwrap();
                assert_eq!(f_value(g, &m, r), max_h, "max-H identity at g={g} m={m} r={r}");
            }
        }
    }
}

#[test]
fn f_is_monotone_in_each_argument() {
    let defects = grid_defects();
    for g in 0..=5u64 {
        for (mi, m) in defects.iter().enumerate() {
            for r in 0..=15u64 {
                let f = f_value(g, m, r);
                assert!(f_value(g + 1, m, r) >= f, "not monotone in g");
                assert!(f_value(g, m, r + 1) >= f, "not monotone in r");
                if mi + 1 < defects.len() {
                    assert!(f_value(g, &defects[mi + 1], r) >= f, "not monotone in M");
                }
            }
        }
    }
}

#[test]
fn new_bound_improves_on_legacy() {
    for g in 2..=5u64 {
        for r in 2..=10u64 {
            let new = (r * r * g) as i64;
            let legacy = legacy_upper(g, r).unwrap();
            assert!(new <= legacy, "r^2 g = {new} > legacy {legacy} at g={g} r={r}");
        }
    }
}

// ---------------------------------------------------------------------------
// Randomized structure
// ---------------------------------------------------------------------------

/// The reduced fractions in [0, 1) with denominator at most 6, ascending.
const WEIGHT_POOL: [(i64, i64); 12] = [
    (0, 1),
    (1, 6),
    (1, 5),
    (1, 4),
    (1, 3),
    (2, 5),
    (1, 2),
    (3, 5),
    (2, 3),
    (3, 4),
    (4, 5),
    (5, 6),
];

/// Composition of `rank` from a cut mask, one part per run.
fn composition_from_cuts(rank: u64, cuts: &[bool]) -> Vec<u64> {
    let mut parts = Vec::new();
    let mut run = 1;
    for &cut in cuts {
        if cut {
            parts.push(run);
            run = 1;
        } else {
            run += 1;
        }
    }
    parts.push(run);
    debug_assert_eq!(parts.iter().sum::<u64>(), rank);
    parts
}

fn arb_point(rank: u64, index: usize) -> impl Strategy<Value = ParabolicPoint> {
    prop::collection::vec(any::<bool>(), (rank - 1) as usize).prop_flat_map(move |cuts| {
        let parts = composition_from_cuts(rank, &cuts);
        let n = parts.len();
        proptest::sample::subsequence(WEIGHT_POOL.to_vec(), n).prop_map(move |weights| {
            ParabolicPoint::new(
                &format!("p{index}"),
                parts.clone(),
                weights
                    .iter()
                    .map(|&(num, den)| Weight::from_ratio(num, den))
                    .collect(),
            )
        })
    })
}

fn arb_datum_ctx() -> impl Strategy<Value = (ParabolicDatum, ModuliContext)> {
    (2..=5u64, 1..=8u64, -6..=6i64, any::<bool>()).prop_flat_map(|(g, r, d, fixed)| {
        prop::collection::vec(Just(()), 0..=3).prop_flat_map(move |slots| {
            let points: Vec<_> = (0..slots.len()).map(|i| arb_point(r, i)).collect();
            points.prop_map(move |points| {
                (
                    ParabolicDatum::new(points),
                    ModuliContext::new(g, r, d).with_fixed_determinant(fixed),
                )
            })
        })
    })
}

proptest! {
    #[test]
    fn superadditivity_holds_for_random_partitions(
        splits in prop::collection::vec((1..=8u64).prop_flat_map(|k| (Just(k), 0..=k)), 1..=6)
    ) {
        let k_parts: Vec<u64> = splits.iter().map(|&(k, _)| k).collect();
        let s_parts: Vec<u64> = splits.iter().map(|&(_, s)| s).collect();
        let t_parts: Vec<u64> = splits.iter().zip(&s_parts).map(|(&(k, _), &s)| k - s).collect();
        prop_assert!(check_flag_superadditivity(&s_parts, &t_parts).unwrap());
        prop_assert_eq!(
            flag_dimension(&FlagShape::new(k_parts.clone()).unwrap()),
            flag_dimension_by_identity(&FlagShape::new(k_parts).unwrap())
        );
    }

    #[test]
    fn datum_invariants_hold_for_random_data((datum, ctx) in arb_datum_ctx()) {
        prop_assert!(validate_datum(&datum, &ctx).is_empty());

        let s = support_degree(&datum);
        let n = weight_lcm(&datum);
        let m = datum_defect(&datum);

        // defect bounds and its vanishing characterization
        if s > 0 {
            prop_assert!(m < rat::int(s as i64));
        }
        prop_assert_eq!(m.is_zero(), n == 1);

        // l(D) divides the rank and every multiplicity; a full flag step kills it
        let l = datum_gcd(&datum, &ctx);
        prop_assert_eq!(ctx.rank % l, 0);
        for p in &datum.points {
            for &k in &p.multiplicities {
                prop_assert_eq!(k % l, 0);
            }
            if p.multiplicities.contains(&1) {
                prop_assert_eq!(l, 1);
            }
        }

        // weight contribution to the parabolic degree sits in [0, s * r)
        let contribution = parabolic_degree(ctx.degree, &datum) - rat::int(ctx.degree);
        prop_assert!(contribution >= rat::int(0));
        if s > 0 {
            prop_assert!(contribution < rat::int((s * ctx.rank) as i64));
        } else {
            prop_assert!(contribution.is_zero());
        }

        // validation is insensitive to point order
        let mut reversed = datum.clone();
        reversed.points.reverse();
        prop_assert!(validate_datum(&reversed, &ctx).is_empty());
    }

    #[test]
    fn reports_are_internally_consistent((datum, ctx) in arb_datum_ctx()) {
        let report = compute_report(&ctx, &datum);
        prop_assert!(report.locus_consistency_violations().is_empty());
        // floors never exceed their values
        for e in &report.entries {
            prop_assert!(rat::int(e.value_floor) <= e.value);
        }
    }

    #[test]
    fn isotropy_sum_routes_agree(
        (group_order, n) in (1..=16u64).prop_flat_map(|g| {
            let divisors: Vec<u64> = (1..=g).filter(|n| g % n == 0).collect();
            (Just(g), proptest::sample::select(divisors))
        }),
        seed in any::<u64>(),
    ) {
        // derive a multiplicity vector from the seed, entries <= 5
        let mults: Vec<u64> = (0..n).map(|i| (seed >> (i % 60)) % 6).collect();
        let inst = IsotropyInstance::new(group_order, n, mults).unwrap();
        prop_assert_eq!(isotropy_sum(&inst), isotropy_sum_double_loop(&inst));
    }
}
