//! One invocation: build the group and field, run a command, collect the
//! human-readable text and the `key = value` report.

use std::fmt::Write;
use std::path::PathBuf;
use std::sync::Arc;

use metabelian::engine::{
    decompose, verify_decomposition, verify_ideal_dimensions, Choice, DecomposeOptions, Decomposition,
    WedderburnSummary,
};
use metabelian::families::{aut_closed_form, check_family, closed_form, Family};
use metabelian::field::FieldTower;
use metabelian::group::{parse_cayley, FiniteGroup};
use metabelian::metacyclic::{metacyclic_decompose, MetacyclicParams};
use metabelian::oracle::{center_split, q_class_count};
use metabelian::report::{Report, Value};
use metabelian::{AlgebraElement, Error, GroupAlgebra, Result};

/// `d1(m)` and `d2(m)` have order `2^{m+2}`; this keeps them at most 512.
const MAX_FAMILY_M: u32 = 7;

const FORMAT: &str = "metabelian-report 1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Decompose,
    Idempotents,
    Verify,
    Compare,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Decompose => "decompose",
            Command::Idempotents => "idempotents",
            Command::Verify => "verify",
            Command::Compare => "compare",
        }
    }
}

#[derive(Debug, Clone)]
pub enum Source {
    Cayley(PathBuf),
    Metacyclic(u64, u64, u64, u64),
    D1(u32),
    D2(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Generic,
    Metacyclic,
}

#[derive(Debug, Clone)]
pub struct Job {
    pub command: Command,
    pub source: Source,
    pub p: u64,
    pub a: u32,
    pub cap: usize,
    pub seed: u64,
    pub method: Method,
    pub emit_idempotents: bool,
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone)]
pub struct FamilyJob {
    pub families: Vec<Family>,
    pub m_min: u32,
    pub m_max: u32,
    pub q: Vec<u64>,
    pub cap: usize,
    pub output: Option<PathBuf>,
}

pub struct Outcome {
    pub text: String,
    pub error: Option<String>,
    pub code: u8,
}

enum Status {
    Ok,
    Discrepancy(usize),
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NotSemisimple { .. } => 3,
        Error::NotMetabelian { .. } => 4,
        Error::AssertionFailure { .. } | Error::InternalInconsistency(_) => 5,
        Error::Parse(_)
        | Error::BadTable(_)
        | Error::BadPresentation(_)
        | Error::NotPrime(_)
        | Error::NotCoprime { .. }
        | Error::OutOfRange(_)
        | Error::EvenQ(_)
        | Error::NotAssociative { .. }
        | Error::NoIdentity { .. }
        | Error::NoInverse { .. } => 2,
        _ => 1,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::NotPrime(_) => "not_prime",
        Error::NotCoprime { .. } => "not_coprime",
        Error::NotSemisimple { .. } => "not_semisimple",
        Error::NotMetabelian { .. } => "not_metabelian",
        Error::NotAssociative { .. } => "not_associative",
        Error::NoIdentity { .. } => "no_identity",
        Error::NoInverse { .. } => "no_inverse",
        Error::BadTable(_) => "bad_table",
        Error::BadPresentation(_) => "bad_presentation",
        Error::CapExceeded { .. } => "cap_exceeded",
        Error::NotCyclicQuotient { .. } => "not_cyclic_quotient",
        Error::MixedContext => "mixed_context",
        Error::EvenQ(_) => "even_q",
        Error::OutOfRange(_) => "out_of_range",
        Error::InternalInconsistency(_) => "internal_inconsistency",
        Error::AssertionFailure { .. } => "invariant_failure",
        Error::Parse(_) => "parse",
    }
}

struct Built {
    group: Arc<FiniteGroup>,
    label: String,
    params: Option<MetacyclicParams>,
    family: Option<(Family, u32)>,
}

fn family_m(m: u32) -> Result<u32> {
    if !(1..=MAX_FAMILY_M).contains(&m) {
        return Err(Error::OutOfRange(format!("family parameter m = {m} must lie in 1..={MAX_FAMILY_M}")));
    }
    Ok(m)
}

fn build(source: &Source) -> Result<Built> {
    Ok(match source {
        Source::Cayley(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
            Built {
                group: Arc::new(parse_cayley(&text)?),
                label: format!("cayley({})", path.display()),
                params: None,
                family: None,
            }
        }
        &Source::Metacyclic(n, t, k, r) => {
            let p = MetacyclicParams::new(n, t, k, r)?;
            Built {
                group: Arc::new(p.group()?),
                label: format!("metacyclic({n}, {t}, {k}, {r})"),
                params: Some(p),
                family: None,
            }
        }
        &Source::D1(m) => {
            let m = family_m(m)?;
            Built {
                group: Arc::new(Family::D1.group(m)),
                label: format!("d1({m})"),
                params: None,
                family: Some((Family::D1, m)),
            }
        }
        &Source::D2(m) => {
            let m = family_m(m)?;
            let n = 1u64 << (m + 1);
            Built {
                group: Arc::new(Family::D2.group(m)),
                label: format!("d2({m})"),
                params: Some(MetacyclicParams::new(n, 2, 2, n / 2 + 1)?),
                family: Some((Family::D2, m)),
            }
        }
    })
}

fn components_value(s: &WedderburnSummary) -> Value {
    Value::List(s.components.iter().map(|(&(d, l), &a)| Value::tuple([d, l, a])).collect())
}

fn write_table(text: &mut String, heading: &str, s: &WedderburnSummary) {
    writeln!(text, "{heading}").unwrap();
    writeln!(text, "{:>4} {:>4} {:>6}", "d", "l", "alpha").unwrap();
    for (&(d, l), &a) in &s.components {
        writeln!(text, "{d:>4} {l:>4} {a:>6}").unwrap();
    }
    writeln!(text, "{}", s.display()).unwrap();
    writeln!(text, "Aut: {}", s.aut()).unwrap();
}

fn push_summary(report: &mut Report, s: &WedderburnSummary) {
    report.push("summary.components", components_value(s));
    report.push("summary.display", Value::str(s.display()));
    report.push("summary.dimension", Value::uint(s.total_dimension()));
    report.push("summary.count", Value::uint(s.component_count()));
    report.push("aut", Value::str(s.aut().to_string()));
}

fn push_components(report: &mut Report, text: &mut String, dec: &Decomposition, emit: bool) {
    report.push("component.count", Value::uint(dec.components.len() as u64));
    for (i, c) in dec.components.iter().enumerate() {
        let key = |k: &str| format!("component.{i}.{k}");
        report.push(key("d"), Value::uint(c.d));
        report.push(key("l"), Value::uint(c.l));
        report.push(
            key("triple_orders"),
            Value::tuple([c.triple.n.order() as u64, c.triple.d.order() as u64, c.triple.a.order() as u64]),
        );
        report.push(key("coset_modulus"), Value::uint(c.coset.modulus()));
        report.push(key("coset"), Value::tuple(c.coset.members().iter().copied()));
        if emit {
            report.push(key("idempotent"), Value::element(&c.idempotent));
            let f = c.idempotent.ctx().base();
            let coeffs: Vec<String> = c.idempotent.coeffs().iter().map(|&x| f.format(x)).collect();
            writeln!(text, "e[{i}] d={} l={}: [{}]", c.d, c.l, coeffs.join(", ")).unwrap();
        }
    }
}

fn failure(invariant: &str, witness: String) -> Error {
    Error::AssertionFailure { invariant: invariant.into(), witness }
}

/// First element of the symmetric difference of two sorted sets, with the
/// first coefficient index at which it differs from its nearest neighbour.
fn set_witness(ours: &[AlgebraElement], theirs: &[AlgebraElement]) -> String {
    if ours.len() != theirs.len() {
        return format!("{} idempotents against {}", ours.len(), theirs.len());
    }
    for (x, y) in ours.iter().zip(theirs) {
        if x != y {
            let idx = x.coeffs().iter().zip(y.coeffs()).position(|(a, b)| a != b).unwrap_or(0);
            return format!("engine {x} vs oracle {y}; first differing coefficient index {idx}");
        }
    }
    "sets agree".into()
}

fn record_check(report: &mut Report, text: &mut String, name: &str) {
    report.push(format!("check.{name}"), Value::str("pass"));
    writeln!(text, "{name:<22} pass").unwrap();
}

fn verify(
    ctx: &Arc<GroupAlgebra>,
    job: &Job,
    dec: &Decomposition,
    report: &mut Report,
    text: &mut String,
) -> Result<()> {
    verify_decomposition(ctx, dec)?;
    record_check(report, text, "invariants");

    verify_ideal_dimensions(dec)?;
    record_check(report, text, "ideal_dimensions");

    let n = ctx.group().order() as u64;
    let dim = dec.summary.total_dimension();
    if dim != n {
        return Err(failure("dimension_identity", format!("sum alpha d^2 l = {dim}, |G| = {n}")));
    }
    record_check(report, text, "dimension_identity");

    let ours = dec.idempotent_set();
    let oracle = center_split(ctx)?;
    if ours != oracle {
        return Err(failure("oracle_equivalence", set_witness(&ours, &oracle)));
    }
    record_check(report, text, "oracle_equivalence");

    let count = q_class_count(ctx.group(), ctx.field().q())?;
    if count != ours.len() {
        return Err(failure("q_class_count", format!("{} idempotents, {count} q-classes", ours.len())));
    }
    record_check(report, text, "q_class_count");

    let seeded = decompose(ctx, DecomposeOptions { cap: job.cap, choice: Choice::Seeded(job.seed), verify: true })?;
    if seeded.summary != dec.summary {
        return Err(failure(
            "choice_independence",
            format!("seed {}: {} vs {}", job.seed, seeded.summary.display(), dec.summary.display()),
        ));
    }
    if seeded.idempotent_set() != ours {
        return Err(failure(
            "choice_independence",
            format!("seed {}: {}", job.seed, set_witness(&ours, &seeded.idempotent_set())),
        ));
    }
    record_check(report, text, "choice_independence");
    Ok(())
}

struct Diff {
    path: &'static str,
    engine: Value,
    other: Value,
}

fn compare(
    ctx: &Arc<GroupAlgebra>,
    built: &Built,
    generic: &Decomposition,
    report: &mut Report,
    text: &mut String,
) -> Result<Vec<Diff>> {
    let mut diffs = Vec::new();
    let record = |report: &mut Report, text: &mut String, path: &'static str, verdict: &str| {
        report.push(format!("compare.{path}"), Value::str(verdict));
        writeln!(text, "{path:<12} {verdict}").unwrap();
    };

    let oracle = center_split(ctx)?;
    if oracle == generic.idempotent_set() {
        record(report, text, "oracle", "agree");
    } else {
        record(report, text, "oracle", "differ");
        diffs.push(Diff {
            path: "oracle",
            engine: Value::uint(generic.components.len() as u64),
            other: Value::uint(oracle.len() as u64),
        });
    }

    match &built.params {
        Some(p) => {
            let fast = metacyclic_decompose(p, ctx.field(), true)?;
            if fast.summary == generic.summary && fast.idempotent_set() == generic.idempotent_set() {
                record(report, text, "metacyclic", "agree");
            } else {
                record(report, text, "metacyclic", "differ");
                diffs.push(Diff {
                    path: "metacyclic",
                    engine: components_value(&generic.summary),
                    other: components_value(&fast.summary),
                });
            }
        }
        None => record(report, text, "metacyclic", "not applicable"),
    }

    let q = ctx.field().q();
    let closed = built.family.map(|(f, m)| Ok::<_, Error>((closed_form(f, m, q)?, aut_closed_form(f, m, q)?)));
    match closed {
        Some(Ok((summary, aut))) => {
            if summary == generic.summary && aut == generic.summary.aut() {
                record(report, text, "closed_form", "agree");
            } else {
                record(report, text, "closed_form", "differ");
                diffs.push(Diff {
                    path: "closed_form",
                    engine: components_value(&generic.summary),
                    other: components_value(&summary),
                });
            }
        }
        Some(Err(Error::EvenQ(_) | Error::OutOfRange(_))) | None => {
            record(report, text, "closed_form", "not applicable")
        }
        Some(Err(e)) => return Err(e),
    }
    Ok(diffs)
}

fn execute(job: &Job, report: &mut Report, text: &mut String) -> Result<Status> {
    let built = build(&job.source)?;
    let field = Arc::new(FieldTower::new(job.p, job.a)?);
    report.push("group.source", Value::str(&built.label));
    report.push("group.order", Value::uint(built.group.order() as u64));
    report.push("field.p", Value::uint(job.p));
    report.push("field.a", Value::uint(job.a as u64));
    report.push("field.q", Value::uint(field.q()));
    report.push("field.modulus", Value::tuple(field.base().modulus().iter().map(|&c| c as u64)));
    report.push("options.cap", Value::uint(job.cap as u64));
    report.push("options.seed", Value::uint(job.seed));
    report.push(
        "options.method",
        Value::str(match job.method {
            Method::Generic => "generic",
            Method::Metacyclic => "metacyclic",
        }),
    );

    let opts = DecomposeOptions { cap: job.cap, choice: Choice::Canonical, verify: true };
    let generic_ctx = GroupAlgebra::new(built.group.clone(), field.clone());
    let dec = match (job.method, &built.params) {
        (Method::Generic, _) => decompose(&generic_ctx, opts)?,
        (Method::Metacyclic, Some(p)) => metacyclic_decompose(p, &field, true)?,
        (Method::Metacyclic, None) => {
            return Err(Error::OutOfRange("--method metacyclic needs a --metacyclic or --d2 source".into()))
        }
    };
    // The fast path builds its own copy of the group; later checks must use its context.
    let ctx = dec.components[0].idempotent.ctx().clone();

    let heading = format!("F_{}[{}], |G| = {}", field.q(), built.label, built.group.order());
    write_table(text, &heading, &dec.summary);
    push_summary(report, &dec.summary);
    push_components(report, text, &dec, job.emit_idempotents);

    let status = match job.command {
        Command::Decompose | Command::Idempotents => Status::Ok,
        Command::Verify => {
            verify(&ctx, job, &dec, report, text)?;
            Status::Ok
        }
        Command::Compare => {
            let generic = match job.method {
                Method::Generic => dec,
                Method::Metacyclic => decompose(&generic_ctx, opts)?,
            };
            let diffs = compare(&generic_ctx, &built, &generic, report, text)?;
            push_diffs(report, &diffs);
            if diffs.is_empty() {
                Status::Ok
            } else {
                Status::Discrepancy(diffs.len())
            }
        }
    };
    Ok(status)
}

fn push_diffs(report: &mut Report, diffs: &[Diff]) {
    for (i, d) in diffs.iter().enumerate() {
        report.push(format!("discrepancy.{i}.path"), Value::str(d.path));
        report.push(format!("discrepancy.{i}.engine"), d.engine.clone());
        report.push(format!("discrepancy.{i}.other"), d.other.clone());
    }
}

fn finish(mut report: Report, mut text: String, result: Result<Status>, output: Option<&PathBuf>) -> Outcome {
    let (code, error) = match result {
        Ok(Status::Ok) => {
            report.push("status", Value::str("ok"));
            (0, None)
        }
        Ok(Status::Discrepancy(n)) => {
            report.push("status", Value::str("discrepancy"));
            writeln!(text, "{n} discrepancies").unwrap();
            (6, Some(format!("{n} discrepancies between computation paths")))
        }
        Err(e) => {
            report.push("status", Value::str("error"));
            report.push("error.kind", Value::str(error_kind(&e)));
            report.push("error.message", Value::str(e.to_string()));
            if let Error::AssertionFailure { invariant, witness } = &e {
                report.push("failure.invariant", Value::str(invariant));
                report.push("failure.witness", Value::str(witness));
            }
            (exit_code(&e), Some(e.to_string()))
        }
    };
    if let Some(path) = output {
        if let Err(e) = std::fs::write(path, report.render()) {
            return Outcome { text, error: Some(format!("cannot write {}: {e}", path.display())), code: 1 };
        }
    }
    Outcome { text, error, code }
}

pub fn run(job: &Job) -> Outcome {
    let mut report = Report::new();
    report.push("format", Value::str(FORMAT));
    report.push("command", Value::str(job.command.name()));
    let mut text = String::new();
    let result = execute(job, &mut report, &mut text);
    finish(report, text, result, job.output.as_ref())
}

fn sweep(job: &FamilyJob, report: &mut Report, text: &mut String) -> Result<Status> {
    if job.m_min < 2 || job.m_max > MAX_FAMILY_M || job.m_min > job.m_max {
        return Err(Error::OutOfRange(format!("need 2 <= m-min <= m-max <= {MAX_FAMILY_M}")));
    }
    let opts = DecomposeOptions { cap: job.cap, ..DecomposeOptions::default() };
    writeln!(text, "{:<6} {:>2} {:>4}  {:<8} summary", "family", "m", "q", "status").unwrap();
    let mut row = 0;
    let mut diffs = Vec::new();
    for &family in &job.families {
        for m in job.m_min..=job.m_max {
            for &q in &job.q {
                let c = check_family(family, m, q, opts)?;
                let status = if c.is_consistent() { "agree" } else { "differ" };
                let key = |k: &str| format!("row.{row}.{k}");
                report.push(key("family"), Value::str(family.to_string()));
                report.push(key("m"), Value::uint(m as u64));
                report.push(key("q"), Value::uint(q));
                report.push(key("status"), Value::str(status));
                report.push(key("engine"), components_value(&c.engine));
                writeln!(text, "{family:<6} {m:>2} {q:>4}  {status:<8} {}", c.engine.display()).unwrap();
                if !c.is_consistent() {
                    diffs.push(Diff {
                        path: "closed_form",
                        engine: components_value(&c.engine),
                        other: components_value(&c.closed),
                    });
                    report.push(key("closed"), components_value(&c.closed));
                }
                row += 1;
            }
        }
    }
    report.push("row.count", Value::uint(row));
    push_diffs(report, &diffs);
    Ok(if diffs.is_empty() { Status::Ok } else { Status::Discrepancy(diffs.len()) })
}

pub fn run_families(job: &FamilyJob) -> Outcome {
    let mut report = Report::new();
    report.push("format", Value::str(FORMAT));
    report.push("command", Value::str("families"));
    let mut text = String::new();
    let result = sweep(job, &mut report, &mut text);
    finish(report, text, result, job.output.as_ref())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::Parse("x".into())), 2);
        assert_eq!(exit_code(&Error::NotSemisimple { q: 2, order: 4 }), 3);
        assert_eq!(exit_code(&Error::NotMetabelian { second_derived_order: 4 }), 4);
        let e = Error::AssertionFailure { invariant: "orthogonality".into(), witness: "e[0], e[1]".into() };
        assert_eq!(exit_code(&e), 5);
    }

    #[test]
    fn discrepancy_and_failure_reports() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("r");
        let out = finish(Report::new(), String::new(), Ok(Status::Discrepancy(2)), Some(&path));
        assert_eq!(out.code, 6);
        let r = Report::parse(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(r.get("status").unwrap().as_str(), Some("discrepancy"));

        let e = Error::AssertionFailure { invariant: "orthogonality".into(), witness: "e[0], e[1]".into() };
        let out = finish(Report::new(), String::new(), Err(e), Some(&path));
        assert_eq!(out.code, 5);
        let r = Report::parse(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(r.get("failure.invariant").unwrap().as_str(), Some("orthogonality"));
        assert_eq!(r.get("failure.witness").unwrap().as_str(), Some("e[0], e[1]"));
    }
}
