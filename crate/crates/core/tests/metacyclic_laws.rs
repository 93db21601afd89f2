use std::sync::Arc;

use metabelian::engine::{decompose, DecomposeOptions};
use metabelian::field::{gcd, FieldTower};
use metabelian::group::Subgroup;
use metabelian::metacyclic::*;
use metabelian::GroupAlgebra;

const CORPUS: &[(u64, u64, u64, u64)] = &[
    (4, 2, 0, 3),
    (5, 4, 0, 2),
    (7, 3, 0, 2),
    (9, 3, 0, 4),
    (8, 2, 0, 3),
    (16, 4, 0, 3),
    (8, 2, 2, 5),
    (16, 2, 2, 9),
    (32, 2, 2, 17),
    (2, 2, 1, 1),
    (12, 1, 0, 1),
];

fn params() -> Vec<MetacyclicParams> {
    CORPUS.iter().map(|&(n, t, k, r)| MetacyclicParams::new(n, t, k, r).unwrap()).collect()
}

#[test]
fn normal_triples_give_all_normal_subgroups() {
    for p in params() {
        let g = p.group().unwrap();
        let triples = normal_triples(&p);
        let mut ours: Vec<Subgroup> = triples.iter().map(|x| normal_subgroup(&g, &p, x)).collect();
        for (x, h) in triples.iter().zip(&ours) {
            assert_eq!(h.order() as u64, p.n * p.t / (x.v * x.c), "{p:?} {x:?}");
        }
        ours.sort();
        let len = ours.len();
        ours.dedup();
        assert_eq!(ours.len(), len, "{p:?}: repeated subgroup");
        assert_eq!(ours, g.normal_subgroups(512).unwrap(), "{p:?}");
    }
}

#[test]
fn core_formula_matches_search() {
    for p in params() {
        let g = p.group().unwrap();
        let mut checked = 0;
        for nt in normal_triples(&p) {
            let ov = p.o_v(nt.v);
            for u in metabelian::field::divisors(nt.v) {
                for alpha in 0..u {
                    for beta in 1..=p.t {
                        if !p.in_b(ov, u, alpha, beta) || gcd(gcd(u, alpha), beta) != 1 {
                            continue;
                        }
                        // Sections containing N = H_{v,i,c}.
                        if nt.c % (beta * ov) != 0 || (alpha * (nt.c / (beta * ov))) % u != nt.i % u {
                            continue;
                        }
                        let h = p.h(&g, u, alpha, beta * ov);
                        let (w, e, delta) = core_formula(&p, ov, u, alpha, beta);
                        assert_eq!(h.core(&g), p.h(&g, w, e, delta), "{p:?} {nt:?} u={u} alpha={alpha} beta={beta}");
                        checked += 1;
                    }
                }
            }
        }
        assert!(checked > 0);
    }
}

#[test]
fn conjugacy_criterion_matches_search() {
    for p in params() {
        let g = p.group().unwrap();
        for nt in normal_triples(&p) {
            let xs = x_triples(&p, &nt);
            let hs: Vec<Subgroup> = xs.iter().map(|x| p.h(&g, x.v, x.alpha, x.beta * p.o_v(x.v))).collect();
            for (x, hx) in xs.iter().zip(&hs) {
                let orbit = hx.conjugates(&g);
                for (y, hy) in xs.iter().zip(&hs) {
                    let conj = orbit.binary_search(hy).is_ok();
                    assert_eq!(conj, x_equivalent(&p, x, y), "{p:?} {x:?} {y:?}");
                }
            }
        }
    }
}

#[test]
fn x_triples_are_the_core_free_cyclic_sections() {
    for p in params() {
        let g = p.group().unwrap();
        for nt in normal_triples(&p) {
            let n = normal_subgroup(&g, &p, &nt);
            let quot = g.quotient(&n);
            let a = p.g_o(&g, p.o_v(nt.v));
            let a_q = quot.image(&a);
            let qg = quot.group();
            let mut brute: Vec<Subgroup> = qg
                .subgroups_within(&a_q, 512)
                .unwrap()
                .into_iter()
                .filter(|d| {
                    let cq = metabelian::engine::CyclicQuotient::new(qg, &a_q, d);
                    cq.is_ok() && d.is_core_free(qg)
                })
                .map(|d| quot.preimage(&d))
                .collect();
            brute.sort();
            let mut ours: Vec<Subgroup> =
                x_triples(&p, &nt).iter().map(|x| p.h(&g, x.v, x.alpha, x.beta * p.o_v(x.v))).collect();
            ours.sort();
            ours.dedup();
            assert_eq!(ours, brute, "{p:?} {nt:?}");
        }
    }
}

#[test]
fn fast_path_agrees_with_generic_engine() {
    for p in params() {
        for q in [3u64, 5, 7, 11, 13] {
            if gcd(q, p.n * p.t) != 1 {
                continue;
            }
            let field = Arc::new(FieldTower::new(q, 1).unwrap());
            let fast = metacyclic_decompose(&p, &field, true).unwrap();
            let ctx = GroupAlgebra::new(Arc::new(p.group().unwrap()), field);
            let slow = decompose(&ctx, DecomposeOptions::default()).unwrap();
            assert_eq!(fast.summary, slow.summary, "{p:?} q={q}");
            assert_eq!(fast.idempotent_set(), slow.idempotent_set(), "{p:?} q={q}");
        }
    }
}
