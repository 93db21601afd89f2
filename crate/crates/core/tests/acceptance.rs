//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
//! Every comparison is exact; the only numeric threshold is the 60 s budget
//! for criterion 1.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use metabelian::engine::{
    decompose, verify_decomposition, verify_ideal_dimensions, Choice, DecomposeOptions, Decomposition,
    WedderburnSummary,
};
use metabelian::families::{aut_closed_form, closed_form, d1_normal_subgroup_list, Family};
use metabelian::field::{divisors, gcd, FieldTower};
use metabelian::group::{
    alternating_group, cyclic_group, d1_group, d2_group, dihedral_group, metacyclic_group, symmetric_group,
    FiniteGroup, Subgroup,
};
use metabelian::metacyclic::*;
use metabelian::oracle::{center_split, q_class_count};
use metabelian::GroupAlgebra;

const PRIMES: [u64; 5] = [3, 5, 7, 11, 13];
const FAMILY_PRIMES: [u64; 4] = [3, 5, 7, 13];
const TIME_BUDGET: Duration = Duration::from_secs(60);
const SEEDED_TRIALS: u64 = 20;

const METACYCLIC: [(u64, u64, u64, u64); 6] =
    [(4, 2, 0, 3), (5, 4, 0, 2), (7, 3, 0, 2), (9, 3, 0, 4), (8, 2, 0, 3), (16, 4, 0, 3)];

struct Entry {
    name: String,
    group: Arc<FiniteGroup>,
}

fn corpus() -> Vec<Entry> {
    let mut out = vec![
        Entry { name: "S3".into(), group: Arc::new(symmetric_group(3)) },
        Entry { name: "D8".into(), group: Arc::new(dihedral_group(4)) },
        Entry { name: "Q8".into(), group: Arc::new(metacyclic_group(4, 2, 2, 3).unwrap()) },
        Entry { name: "A4".into(), group: Arc::new(alternating_group(4)) },
        Entry { name: "Z12".into(), group: Arc::new(cyclic_group(12)) },
    ];
    for (n, t, k, r) in METACYCLIC {
        out.push(Entry { name: format!("M({n},{t},{k},{r})"), group: Arc::new(metacyclic_group(n, t, k, r).unwrap()) });
    }
    for m in 2..=4 {
        out.push(Entry { name: format!("D1({m})"), group: Arc::new(d1_group(m)) });
        out.push(Entry { name: format!("D2({m})"), group: Arc::new(d2_group(m)) });
    }
    out
}

struct Run {
    name: String,
    q: u64,
    ctx: Arc<GroupAlgebra>,
    dec: Decomposition,
}

fn field(q: u64) -> Arc<FieldTower> {
    Arc::new(FieldTower::new(q, 1).unwrap())
}

struct Outcome {
    failures: Vec<String>,
    detail: String,
}

impl Outcome {
    fn new() -> Self {
        Self { failures: Vec::new(), detail: String::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }
}

fn report(n: u32, title: &str, o: &Outcome) -> bool {
    let verdict = if o.failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {n}: {verdict} {title} ({})", o.detail);
    for f in o.failures.iter().take(10) {
        println!("    {f}");
    }
    if o.failures.len() > 10 {
        println!("    ... {} more", o.failures.len() - 10);
    }
    o.failures.is_empty()
}

/// Criterion 1: decompose + exact invariant checks over the grid, timed.
fn criterion_1(entries: &[Entry]) -> (Outcome, Vec<Run>) {
    let mut o = Outcome::new();
    let mut runs = Vec::new();
    let start = Instant::now();
    for e in entries {
        for q in PRIMES {
            if gcd(q, e.group.order() as u64) != 1 {
                continue;
            }
            let ctx = GroupAlgebra::new(e.group.clone(), field(q));
            let opts = DecomposeOptions { verify: false, ..DecomposeOptions::default() };
            match decompose(&ctx, opts).and_then(|dec| verify_decomposition(&ctx, &dec).map(|_| dec)) {
                Ok(dec) => runs.push(Run { name: e.name.clone(), q, ctx, dec }),
                Err(err) => o.failures.push(format!("{} q={q}: {err}", e.name)),
            }
        }
    }
    let elapsed = start.elapsed();
    o.check(elapsed < TIME_BUDGET, || format!("grid took {elapsed:.2?}, budget {TIME_BUDGET:?}"));
    o.detail = format!("{} (group, q) entries, {elapsed:.2?}", runs.len());
    (o, runs)
}

fn criterion_2(runs: &[Run]) -> Outcome {
    let mut o = Outcome::new();
    for r in runs {
        let ours = r.dec.idempotent_set();
        match center_split(&r.ctx) {
            Ok(oracle) => o.check(oracle == ours, || {
                format!("{} q={}: engine {} idempotents, oracle {}", r.name, r.q, ours.len(), oracle.len())
            }),
            Err(e) => o.failures.push(format!("{} q={}: oracle error {e}", r.name, r.q)),
        }
        let count = q_class_count(r.ctx.group(), r.q).unwrap();
        o.check(count == ours.len(), || format!("{} q={}: {} idempotents, {count} q-classes", r.name, r.q, ours.len()));
    }
    o.detail = format!("{} entries, set equality and q-class count", runs.len());
    o
}

fn criterion_3(runs: &[Run]) -> Outcome {
    let mut o = Outcome::new();
    for r in runs {
        let n = r.ctx.group().order() as u64;
        let dim = r.dec.summary.total_dimension();
        o.check(dim == n, || format!("{} q={}: sum alpha d^2 l = {dim}, |G| = {n}", r.name, r.q));
        if let Err(e) = verify_ideal_dimensions(&r.dec) {
            o.failures.push(format!("{} q={}: {e}", r.name, r.q));
        }
    }
    o.detail = format!("{} entries, dimension identity and per-component ideal ranks", runs.len());
    o
}

fn metacyclic_params() -> Vec<MetacyclicParams> {
    let mut out: Vec<MetacyclicParams> =
        METACYCLIC.iter().map(|&(n, t, k, r)| MetacyclicParams::new(n, t, k, r).unwrap()).collect();
    for m in 2..=4u32 {
        let n = 1u64 << (m + 1);
        out.push(MetacyclicParams::new(n, 2, 2, n / 2 + 1).unwrap());
    }
    out
}

fn criterion_4() -> Outcome {
    let mut o = Outcome::new();
    let mut count = 0;
    for p in metacyclic_params() {
        for q in PRIMES {
            if gcd(q, p.n * p.t) != 1 {
                continue;
            }
            count += 1;
            let f = field(q);
            let fast = metacyclic_decompose(&p, &f, true);
            let ctx = GroupAlgebra::new(Arc::new(p.group().unwrap()), f);
            let slow = decompose(&ctx, DecomposeOptions::default());
            match (fast, slow) {
                (Ok(fast), Ok(slow)) => o
                    .check(fast.summary == slow.summary && fast.idempotent_set() == slow.idempotent_set(), || {
                        format!("{p:?} q={q}: {} vs {}", fast.summary.display(), slow.summary.display())
                    }),
                (a, b) => o.failures.push(format!("{p:?} q={q}: {:?} / {:?}", a.err(), b.err())),
            }
        }
    }
    o.detail = format!("{count} (tuple, q) pairs, summaries and idempotent sets");
    o
}

fn engine_summary(family: Family, m: u32, q: u64) -> WedderburnSummary {
    let ctx = GroupAlgebra::new(Arc::new(family.group(m)), field(q));
    decompose(&ctx, DecomposeOptions::default()).unwrap().summary
}

fn criterion_5() -> Outcome {
    let mut o = Outcome::new();
    for family in [Family::D1, Family::D2] {
        for m in 2..=4 {
            for q in FAMILY_PRIMES {
                let engine = engine_summary(family, m, q);
                match closed_form(family, m, q) {
                    Ok(closed) => o.check(closed == engine, || {
                        format!("{family}({m}) q={q}: closed {} engine {}", closed.display(), engine.display())
                    }),
                    Err(e) => o.failures.push(format!("{family}({m}) q={q}: {e}")),
                }
            }
        }
    }
    let spots = [(Family::D1, 2, 5, "F_5^(8) ⊕ M_2(F_5)^(2)"), (Family::D2, 2, 3, "F_3^(4) ⊕ F_9^(2) ⊕ M_2(F_9)")];
    for (family, m, q, want) in spots {
        let got = engine_summary(family, m, q).display();
        o.check(got == want, || format!("{family}({m}) q={q}: engine {got}, expected {want}"));
        let closed = closed_form(family, m, q).unwrap().display();
        o.check(closed == want, || format!("{family}({m}) q={q}: closed form {closed}, expected {want}"));
    }
    o.detail = "24 grid entries and 2 spot values".into();
    o
}

fn criterion_6() -> Outcome {
    let mut o = Outcome::new();
    let params = metacyclic_params();
    for p in &params {
        let g = p.group().unwrap();
        let mut ours: Vec<Subgroup> = normal_triples(p).iter().map(|x| normal_subgroup(&g, p, x)).collect();
        ours.sort();
        let len = ours.len();
        ours.dedup();
        o.check(ours.len() == len, || format!("{p:?}: repeated normal subgroup"));
        let brute = g.normal_subgroups(512).unwrap();
        o.check(ours == brute, || format!("{p:?}: {} listed, {} by search", ours.len(), brute.len()));
    }
    for m in 2..=3 {
        let g = d1_group(m);
        let mut ours = d1_normal_subgroup_list(m).unwrap();
        ours.sort();
        let mut brute = g.normal_subgroups(512).unwrap();
        brute.retain(|h| h.order() > 1);
        o.check(ours == brute, || format!("D1({m}): {} listed, {} by search", ours.len(), brute.len()));
    }
    o.detail = format!("{} metacyclic tuples, D1(2..3)", params.len());
    o
}

fn criterion_7() -> Outcome {
    let mut o = Outcome::new();
    let mut cores = 0;
    let mut pairs = 0;
    for p in metacyclic_params() {
        let g = p.group().unwrap();
        for nt in normal_triples(&p) {
            let ov = p.o_v(nt.v);
            for u in divisors(nt.v) {
                for alpha in 0..u {
                    for beta in 1..=p.t {
                        if !p.in_b(ov, u, alpha, beta) || gcd(gcd(u, alpha), beta) != 1 {
                            continue;
                        }
                        if nt.c % (beta * ov) != 0 || (alpha * (nt.c / (beta * ov))) % u != nt.i % u {
                            continue;
                        }
                        let h = p.h(&g, u, alpha, beta * ov);
                        let (w, e, delta) = core_formula(&p, ov, u, alpha, beta);
                        o.check(h.core(&g) == p.h(&g, w, e, delta), || {
                            format!("{p:?} {nt:?}: core of (u={u}, alpha={alpha}, beta={beta})")
                        });
                        cores += 1;
                    }
                }
            }
            let xs = x_triples(&p, &nt);
            let hs: Vec<Subgroup> = xs.iter().map(|x| p.h(&g, x.v, x.alpha, x.beta * p.o_v(x.v))).collect();
            for (x, hx) in xs.iter().zip(&hs) {
                let orbit = hx.conjugates(&g);
                for (y, hy) in xs.iter().zip(&hs) {
                    let conj = orbit.binary_search(hy).is_ok();
                    o.check(conj == x_equivalent(&p, x, y), || format!("{p:?}: {x:?} ~ {y:?} is {conj} by search"));
                    pairs += 1;
                }
            }
        }
    }
    o.detail = format!("{cores} core formulas, {pairs} conjugacy pairs");
    o
}

fn criterion_8() -> Outcome {
    let mut o = Outcome::new();
    let mut grid: Vec<(Family, u32, u64)> = Vec::new();
    for family in [Family::D1, Family::D2] {
        for m in 2..=4 {
            for q in FAMILY_PRIMES {
                grid.push((family, m, q));
            }
        }
    }
    grid.push((Family::D1, 5, 3));
    grid.push((Family::D2, 5, 3));
    for &(family, m, q) in &grid {
        let engine = engine_summary(family, m, q).aut();
        match aut_closed_form(family, m, q) {
            Ok(closed) => o.check(closed == engine, || format!("{family}({m}) q={q}: closed {closed} engine {engine}")),
            Err(e) => o.failures.push(format!("{family}({m}) q={q}: {e}")),
        }
    }
    o.detail = format!("{} entries including D1(5), D2(5) over F_3", grid.len());
    o
}

fn criterion_9(runs: &[Run]) -> Outcome {
    let mut o = Outcome::new();
    for r in runs {
        let want = r.dec.idempotent_set();
        for seed in 0..SEEDED_TRIALS {
            let opts = DecomposeOptions { choice: Choice::Seeded(seed), verify: false, ..DecomposeOptions::default() };
            match decompose(&r.ctx, opts) {
                Ok(d) => o.check(d.summary == r.dec.summary && d.idempotent_set() == want, || {
                    format!("{} q={} seed {seed}: {}", r.name, r.q, d.summary.display())
                }),
                Err(e) => o.failures.push(format!("{} q={} seed {seed}: {e}", r.name, r.q)),
            }
        }
    }
    o.detail = format!("{} entries x {SEEDED_TRIALS} seeds", runs.len());
    o
}

fn main() -> ExitCode {
    // Flags forwarded by `cargo test` are ignored.
    let entries = corpus();
    let (o1, runs) = criterion_1(&entries);
    let results = [
        report(1, "invariant suite", &o1),
        report(2, "oracle equivalence", &criterion_2(&runs)),
        report(3, "dimension identity", &criterion_3(&runs)),
        report(4, "metacyclic fast path", &criterion_4()),
        report(5, "closed forms", &criterion_5()),
        report(6, "normal subgroup lists", &criterion_6()),
        report(7, "conjugacy and core laws", &criterion_7()),
        report(8, "automorphism terms", &criterion_8()),
        report(9, "choice independence", &criterion_9(&runs)),
    ];
    let passed = results.iter().filter(|&&x| x).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
