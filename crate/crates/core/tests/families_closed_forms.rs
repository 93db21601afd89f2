use std::collections::BTreeMap;
use std::sync::Arc;

use metabelian::engine::{decompose, DecomposeOptions};
use metabelian::families::*;
use metabelian::field::{mult_order, FieldTower};
use metabelian::group::{d1_group, Subgroup};
use metabelian::GroupAlgebra;

#[test]
fn closed_forms_match_engine_on_grid() {
    let mut mismatches = Vec::new();
    for family in [Family::D1, Family::D2] {
        for m in 2..=4 {
            for q in [3u64, 5, 7, 13] {
                let c = check_family(family, m, q, DecomposeOptions::default()).unwrap();
                if !c.is_consistent() {
                    mismatches.push(format!(
                        "{family}({m}) q={q}: closed {:?} engine {:?}",
                        c.closed.components, c.engine.components
                    ));
                }
            }
        }
    }
    assert!(mismatches.is_empty(), "{mismatches:#?}");
}

#[test]
fn tables_match_engine_per_triple() {
    for family in [Family::D1, Family::D2] {
        for m in 2..=4 {
            for q in [3u64, 5, 7, 13] {
                let field = Arc::new(FieldTower::new(q, 1).unwrap());
                let ctx = GroupAlgebra::new(Arc::new(family.group(m)), field);
                let dec = decompose(&ctx, DecomposeOptions::default()).unwrap();
                // (N, D, A) -> (d, l, count) from the engine.
                let mut engine: BTreeMap<(Subgroup, Subgroup, Subgroup), (u64, u64, u64)> = BTreeMap::new();
                for c in &dec.components {
                    let key = (c.triple.n.clone(), c.triple.d.clone(), c.triple.a.clone());
                    engine.entry(key).or_insert((c.d, c.l, 0)).2 += 1;
                }
                let table: BTreeMap<_, _> = family_table(family, m, q)
                    .unwrap()
                    .into_iter()
                    .map(|r| ((r.triple.n, r.triple.d, r.triple.a), (r.d, r.l, r.count)))
                    .collect();
                assert_eq!(table, engine, "{family}({m}) q={q}");
            }
        }
    }
}

#[test]
fn d1_lists_match_brute_force() {
    for m in 2..=3 {
        let g = d1_group(m);
        let mut ours = d1_normal_subgroup_list(m).unwrap();
        assert_eq!(ours.len() as u32, 11 * m - 6);
        ours.sort();
        let mut brute = g.normal_subgroups(512).unwrap();
        brute.retain(|h| h.order() > 1);
        assert_eq!(ours, brute, "m={m}");
    }
}

#[test]
fn order_formula_from_lambda() {
    for q in [3u64, 5, 7, 13] {
        let lam = lambda_of(q).unwrap().lambda;
        for gamma in lam + 1..=8 {
            assert_eq!(mult_order(1 << gamma, q).unwrap(), 1 << (gamma - lam), "q={q} gamma={gamma}");
        }
    }
}

#[test]
fn d1_five_over_f3_aut_term() {
    let c = check_family(Family::D1, 5, 3, DecomposeOptions::default()).unwrap();
    assert!(c.summary_matches(), "{:?} vs {:?}", c.closed.components, c.engine.components);
    assert_eq!(c.aut_closed, c.aut_engine);
}
