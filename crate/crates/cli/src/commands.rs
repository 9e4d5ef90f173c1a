//! Subcommand implementations. Each writes its result to standard output
//! and reports whether the run succeeded.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use qkflag::conjecture::{compare_with_table_gate, DiffReport, GateConvention};
use qkflag::correlators::{
    evaluate, quantum_part_from_correlators, three_point_projective, CorrelatorQuery,
};
use qkflag::flags::{
    balanced_construct, brute_force_balanced, splitting_predicate, theorem_conditions, AdmissibleSequenceSet,
    FlagShape, StabilizationInput,
};
use qkflag::kring::k_product;
use qkflag::qkring::{build_table, qk_product, Divisor, MultiplicationTable};
use qkflag::render::{class_terms, product_text, table_csv, table_from_json, table_json, table_text, ProductJson};
use qkflag::verify::{
    arbitration_report, chevalley_check, classical_consistency_check, degree_check, positivity_check,
    ring_axiom_checks, VerificationReport,
};
use qkflag::{CurveDegree, Error, QKClass, SchubertIndex};
use serde::Serialize;

use crate::args::*;

pub enum Status {
    Ok,
    Failed,
}

pub enum CliError {
    /// Malformed input: exit status 2.
    Usage(String),
    /// The computation itself failed: exit status 1.
    Failure(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NonUniqueMinimizer { .. } | Error::BoundExceeded(_) => CliError::Failure(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

pub fn run(cmd: Command) -> Result<Status> {
    match cmd {
        Command::Product(a) => product(a),
        Command::Table(a) => table(a),
        Command::Verify(a) => verify(a),
        Command::Conjecture(a) => conjecture(a),
        Command::Correlator(a) => correlator(a),
        Command::Flags(a) => flags(a),
    }
}

fn emit(s: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    out.write_all(s.as_bytes())
        .and_then(|_| if s.ends_with('\n') { Ok(()) } else { out.write_all(b"\n") })
        .map_err(|e| CliError::Failure(format!("cannot write output: {e}")))
}

fn json<T: Serialize>(x: &T) -> String {
    serde_json::to_string(x).expect("serializable")
}

fn index(p: Pair, n: u32) -> Result<SchubertIndex> {
    Ok(SchubertIndex::new(p.0, p.1, n)?)
}

fn required<T>(x: Option<T>, name: &str) -> Result<T> {
    x.ok_or_else(|| CliError::Usage(format!("--{name} is required here")))
}

fn load_table(n: u32, src: &TableSource) -> Result<MultiplicationTable> {
    match &src.table {
        None => Ok(build_table(n)?),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            let t = table_from_json(&text)?;
            if t.n() != n {
                return Err(Error::RankMismatch { table: t.n(), requested: n }.into());
            }
            Ok(t)
        }
    }
}

fn class_csv(u: SchubertIndex, v: SchubertIndex, c: &QKClass) -> String {
    let mut out = format!("{}\n", qkflag::render::CSV_HEADER);
    for (w, d, x) in c.structure_constants() {
        writeln!(out, "{},{},{},{},{},{},{},{},{}", u.i, u.j, v.i, v.j, w.i, w.j, d.d1, d.d2, x).unwrap();
    }
    out
}

fn product(a: ProductArgs) -> Result<Status> {
    let n = a.n;
    let (u, v) = (index(a.u, n)?, index(a.v, n)?);
    let c = if a.classical { k_product(u, v, n)?.to_qk() } else { qk_product(u, v, n, &load_table(n, &a.source)?)? };
    let s = match a.format {
        Format::Text => product_text(u, v, &c),
        Format::Json => json(&ProductJson { n, u: [u.i, u.j], v: [v.i, v.j], terms: class_terms(&c) }),
        Format::Csv => class_csv(u, v, &c),
    };
    emit(&s)?;
    Ok(Status::Ok)
}

fn table(a: TableArgs) -> Result<Status> {
    let t = build_table(a.n)?;
    let s = match a.format {
        Format::Text => table_text(&t),
        Format::Json => table_json(&t) + "\n",
        Format::Csv => table_csv(&t),
    };
    match a.out {
        None => emit(&s)?,
        Some(path) => write_file(&path, &s)?,
    }
    Ok(Status::Ok)
}

fn write_file(path: &Path, s: &str) -> Result<()> {
    std::fs::write(path, s).map_err(|e| CliError::Failure(format!("cannot write {}: {e}", path.display())))
}

fn verify(a: VerifyArgs) -> Result<Status> {
    let t = load_table(a.n, &a.source)?;
    let mut reports: Vec<VerificationReport> = Vec::new();
    let mut arbitration = None;
    for check in &a.checks {
        match check {
            Check::Positivity => reports.push(positivity_check(&t)),
            Check::Ring => reports.push(ring_axiom_checks(&t, a.assoc_max)),
            Check::Classical => reports.push(classical_consistency_check(&t)),
            Check::Degree => reports.push(degree_check(&t)),
            Check::Chevalley => reports.push(chevalley_check(&t)),
            Check::Arbitration => {
                let (report, outcomes) = arbitration_report(a.n, a.assoc_max)?;
                reports.push(report);
                arbitration = Some(outcomes);
            }
        }
    }
    let passed = reports.iter().all(|r| r.passed);
    let s = match a.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                n: u32,
                passed: bool,
                reports: &'a [VerificationReport],
                #[serde(skip_serializing_if = "Option::is_none")]
                arbitration: &'a Option<Vec<qkflag::verify::VariantOutcome>>,
            }
            json(&Out { n: a.n, passed, reports: &reports, arbitration: &arbitration })
        }
        Format::Text | Format::Csv => {
            let mut out = String::new();
            for r in &reports {
                writeln!(out, "{}", r.summary()).unwrap();
                for note in &r.notes {
                    writeln!(out, "  note: {note}").unwrap();
                }
                for c in &r.counterexamples {
                    writeln!(out, "  counterexample: {}", json(c)).unwrap();
                }
                if r.failures > r.counterexamples.len() as u64 {
                    writeln!(out, "  ... {} more not listed", r.failures - r.counterexamples.len() as u64).unwrap();
                }
            }
            out
        }
    };
    emit(&s)?;
    Ok(if passed { Status::Ok } else { Status::Failed })
}

fn diff_text(r: &DiffReport, gate: GateConvention) -> String {
    let mut out = format!(
        "n={} conjecture ({}): {} mismatches on {} of {} pairs\n",
        r.n,
        gate.name(),
        r.mismatches.len(),
        r.failing_pairs(),
        (r.n * (r.n - 1)).pow(2)
    );
    for m in &r.mismatches {
        let d = CurveDegree::new(m.d1, m.d2);
        writeln!(
            out,
            "O_{},{} * O_{},{}: O_{},{} at {d}: table {} conjecture {}",
            m.u[0], m.u[1], m.v[0], m.v[1], m.w[0], m.w[1], m.table.0, m.conjecture.0
        )
        .unwrap();
    }
    for x in &r.anomalies {
        writeln!(out, "degree anomaly: O_{},{} * O_{},{} at O_{},{}: ({},{})", x.u[0], x.u[1], x.v[0], x.v[1], x.w[0], x.w[1], x.d1, x.d2).unwrap();
    }
    out
}

fn conjecture(a: ConjectureArgs) -> Result<Status> {
    let t = load_table(a.n, &a.source)?;
    let gate = match a.gate {
        Gate::Printed => GateConvention::AsPrinted,
        Gate::Flipped => GateConvention::FlippedT1,
    };
    let r = compare_with_table_gate(&t, gate)?;
    let s = match a.format {
        Format::Json => json(&r),
        Format::Text => diff_text(&r, gate),
        Format::Csv => {
            let mut out = String::from("u_i,u_j,v_i,v_j,w_i,w_j,d1,d2,table,conjecture\n");
            for m in &r.mismatches {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{},{}",
                    m.u[0], m.u[1], m.v[0], m.v[1], m.w[0], m.w[1], m.d1, m.d2, m.table.0, m.conjecture.0
                )
                .unwrap();
            }
            out
        }
    };
    emit(&s)?;
    Ok(if r.is_empty() { Status::Ok } else { Status::Failed })
}

fn degree(list: Option<List>) -> Result<CurveDegree> {
    let List(v) = required(list, "degree")?;
    match v.as_slice() {
        [a, b] => Ok(CurveDegree::new(*a as u32, *b as u32)),
        _ => Err(CliError::Usage("--degree expects d1,d2".into())),
    }
}

fn correlator(a: CorrelatorArgs) -> Result<Status> {
    let n = a.n;
    #[derive(Serialize)]
    struct Value {
        value: i64,
    }
    let (text, value_json) = match a.kind {
        CorrelatorKind::Two | CorrelatorKind::Three => {
            let u = index(required(a.u, "u")?, n)?;
            let w = index(required(a.w, "w")?, n)?;
            let mut inputs = vec![u];
            if a.kind == CorrelatorKind::Three {
                inputs.push(index(required(a.v, "v")?, n)?);
            }
            let q = CorrelatorQuery { inputs, dual_output: w, degree: degree(a.degree)? };
            let x = evaluate(&q, n)?;
            let args: Vec<String> = q.inputs.iter().map(|u| u.to_string()).collect();
            let label = format!("<{}, I_{},{}>_({},{})", args.join(", "), w.i, w.j, q.degree.d1, q.degree.d2);
            (format!("{label} = {x}"), json(&Value { value: x }))
        }
        CorrelatorKind::Pn => {
            let m = required(a.m, "m")?;
            let List(ix) = required(a.indices, "indices")?;
            let [i1, i2, i3] = ix.as_slice() else {
                return Err(CliError::Usage("--indices expects i1,i2,i3".into()));
            };
            let List(d) = required(a.degree, "degree")?;
            let [d] = d.as_slice() else {
                return Err(CliError::Usage("--degree expects a single integer for pn".into()));
            };
            let x = three_point_projective(*i1 as u32, *i2 as u32, *i3 as u32, *d as u32, m)?;
            (format!("P^{m}: <{i1}, {i2}, {i3}>_{d} = {x}"), json(&Value { value: x }))
        }
        CorrelatorKind::QuantumPart => {
            let h = match required(a.h, "h")? {
                DivisorArg::H1 => Divisor::H1,
                DivisorArg::H2 => Divisor::H2,
            };
            let v = index(required(a.v, "v")?, n)?;
            let d = degree(a.degree)?;
            let k = quantum_part_from_correlators(h, v, d, n)?;
            let c = k.times_monomial(d);
            let text = format!("P_({},{})({}, {v}) = {}", d.d1, d.d2, h.name(), qkflag::render::class_text(&c));
            (text, json(&ProductJson { n, u: [h.index(n).i, h.index(n).j], v: [v.i, v.j], terms: class_terms(&c) }))
        }
    };
    emit(match a.format {
        Format::Json => &value_json,
        _ => &text,
    })?;
    Ok(Status::Ok)
}

fn u32s(l: &List) -> Result<Vec<u32>> {
    l.0.iter().map(|&x| u32::try_from(x).map_err(|e| CliError::Usage(e.to_string()))).collect()
}

fn sequences_text(a: &AdmissibleSequenceSet) -> String {
    a.sequences
        .iter()
        .enumerate()
        .map(|(k, s)| {
            let xs: Vec<String> = s.iter().map(|x| x.to_string()).collect();
            format!("a_{} = ({})", k + 1, xs.join(","))
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn flags(a: FlagsArgs) -> Result<Status> {
    let dims = u32s(&a.dims)?;
    let shape = match a.n {
        Some(n) => FlagShape::new(dims.clone(), n)?,
        None => FlagShape::minimal(dims.clone())?,
    };
    let d = a.degrees.0.clone();
    #[derive(Serialize)]
    struct Balanced<'a> {
        dims: &'a [u32],
        degrees: &'a [u64],
        sequences: &'a [Vec<u64>],
        spread: i64,
        #[serde(skip_serializing_if = "Option::is_none")]
        oracle_agrees: Option<bool>,
    }
    #[derive(Serialize)]
    struct Predicate {
        holds: bool,
    }
    if a.balanced {
        let b = balanced_construct(&shape, &d)?;
        let agrees = if a.oracle { Some(brute_force_balanced(&shape, &d, a.bound)? == b) } else { None };
        let spread = qkflag::flags::spread(&b);
        let s = match a.format {
            Format::Json => json(&Balanced { dims: &dims, degrees: &d, sequences: &b.sequences, spread, oracle_agrees: agrees }),
            _ => {
                let mut s = format!("{}\nspread = {spread}", sequences_text(&b));
                if let Some(x) = agrees {
                    write!(s, "\nexhaustive minimizer agrees: {x}").unwrap();
                }
                s
            }
        };
        emit(&s)?;
        return Ok(if agrees == Some(false) { Status::Failed } else { Status::Ok });
    }
    let holds = if a.splitting {
        splitting_predicate(&shape, &d, required(a.k, "k")?)?
    } else {
        let input = StabilizationInput {
            dims,
            n: shape.n(),
            degrees: d,
            k: required(a.k, "k")?,
            r: required(a.r, "r")?,
        };
        theorem_conditions(&input)?
    };
    emit(&match a.format {
        Format::Json => json(&Predicate { holds }),
        _ => holds.to_string(),
    })?;
    Ok(Status::Ok)
}
