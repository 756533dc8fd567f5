//! JSONL records and plain-text tables.
//!
//! Every JSON object starts with `schema` and `type`, keys are emitted in a
//! fixed order, and integers are decimal strings.

use std::fmt::Write as _;

use flt_lab_core::claims::{claim_info, ClaimOutcome, ClaimStatus, ParamKind};
use flt_lab_core::diophantine::SolutionRecord;
use flt_lab_core::powersum::{AppendixReport, Recovery, Slot, Verdict};
use flt_lab_core::ExactInt;
use serde_json::{json, Map, Value};

pub const SCHEMA: u32 = 1;

fn s(v: impl ToString) -> Value {
    Value::String(v.to_string())
}

fn header(kind: &str, claim: &str) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("type".into(), s(kind));
    m.insert("claim".into(), s(claim));
    m
}

fn vars(rec: &SolutionRecord) -> Value {
    Value::Object(rec.vars().iter().map(|(n, v)| (n.clone(), s(v))).collect())
}

pub fn solution(claim: &str, rec: &SolutionRecord) -> Value {
    let mut m = header("solution", claim);
    m.insert("equation".into(), s(rec.equation().name()));
    m.insert("vars".into(), vars(rec));
    m.insert("constraints".into(), rec.constraints().iter().map(s).collect());
    Value::Object(m)
}

pub fn outcome(o: &ClaimOutcome) -> Value {
    let mut m = header("outcome", o.claim.as_str());
    m.insert("status".into(), s(o.status.name()));
    m.insert("params".into(), Value::Object(o.params.render().into_iter().map(|(k, v)| (k, s(v))).collect()));
    m.insert("candidates_tested".into(), s(o.stats.candidates_tested));
    m.insert("filtered_count".into(), s(o.stats.filtered_count));
    m.insert("matches".into(), s(o.stats.matches));
    m.insert("counterexamples".into(), s(o.stats.counterexamples));
    let (cx, reason) = match &o.status {
        ClaimStatus::HoldsUpToBound => (Value::Null, Value::Null),
        ClaimStatus::CounterexampleFound(r) => {
            (json!({"equation": r.equation().name(), "vars": vars(r)}), Value::Null)
        }
        ClaimStatus::Inapplicable(why) => (Value::Null, s(why)),
    };
    m.insert("counterexample".into(), cx);
    m.insert("reason".into(), reason);
    Value::Object(m)
}

pub fn slot_name(slot: Slot) -> String {
    match slot {
        Slot::Lhs(i) => format!("x{}", i + 1),
        Slot::Rhs(i) => format!("y{}", i + 1),
    }
}

fn recovery(r: &Recovery) -> (&'static str, Value) {
    match r {
        Recovery::Recovered { term } => ("recovered", s(term)),
        Recovery::NonPositive { required } => ("non_positive", s(required)),
        Recovery::NotAPower { required } => ("not_a_power", s(required)),
    }
}

pub fn appendix_line(r: &AppendixReport) -> Value {
    let line = &r.line;
    let mut m = header("appendix_line", "appendix");
    m.insert("attribution".into(), s(&line.attribution));
    m.insert("k".into(), s(line.k));
    let mut vs = Map::new();
    for (i, t) in line.terms.iter().enumerate() {
        vs.insert(format!("x{}", i + 1), s(t));
    }
    vs.insert("y1".into(), s(&line.rhs_value));
    m.insert("vars".into(), Value::Object(vs));
    m.insert("as_printed".into(), json!(line.as_printed));
    let (verdict, lhs, rhs, deficit) = match &r.verdict {
        Verdict::Balanced => ("Balanced", Value::Null, Value::Null, Value::Null),
        Verdict::Unbalanced { lhs_sum, rhs_sum, deficit } => ("Unbalanced", s(lhs_sum), s(rhs_sum), s(deficit)),
    };
    m.insert("verdict".into(), s(verdict));
    m.insert("lhs_sum".into(), lhs);
    m.insert("rhs_sum".into(), rhs);
    m.insert("deficit".into(), deficit);
    m.insert("pairwise_coprime".into(), json!(r.pairwise_coprime()));
    m.insert(
        "coprimality_witness".into(),
        r.coprimality_witness.as_ref().map_or(Value::Null, |(a, b)| json!([s(a), s(b)])),
    );
    let recs: Vec<Value> = r
        .recoveries
        .iter()
        .map(|sr| {
            let (outcome, value) = recovery(&sr.recovery);
            json!({"slot": slot_name(sr.slot), "printed": s(&sr.printed), "outcome": outcome, "value": value})
        })
        .collect();
    m.insert("recoveries".into(), Value::Array(recs));
    Value::Object(m)
}

// ---- csv ----

/// One CSV row and the header it belongs under.
pub struct CsvRow {
    pub header: Vec<String>,
    pub values: Vec<String>,
}

fn row(pairs: Vec<(String, String)>) -> CsvRow {
    let (header, values) = pairs.into_iter().unzip();
    CsvRow { header, values }
}

fn var_list(rec: &SolutionRecord) -> String {
    rec.vars().iter().map(|(n, v)| format!("{n}={v}")).collect::<Vec<_>>().join(" ")
}

/// Columns follow the record's variable names, which are fixed per search.
pub fn solution_csv(claim: &str, rec: &SolutionRecord) -> CsvRow {
    let mut p = vec![("claim".into(), claim.into()), ("equation".into(), rec.equation().name().into())];
    p.extend(rec.vars().iter().map(|(n, v)| (n.clone(), v.to_string())));
    p.push(("constraints".into(), rec.constraints().join(" ")));
    row(p)
}

pub fn outcome_csv(o: &ClaimOutcome) -> CsvRow {
    let params = o.params.render().into_iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ");
    let (cx, reason) = match &o.status {
        ClaimStatus::HoldsUpToBound => (String::new(), String::new()),
        ClaimStatus::CounterexampleFound(r) => (var_list(r), String::new()),
        ClaimStatus::Inapplicable(why) => (String::new(), why.to_string()),
    };
    row(vec![
        ("claim".into(), o.claim.as_str().into()),
        ("status".into(), o.status.name().into()),
        ("params".into(), params),
        ("candidates_tested".into(), o.stats.candidates_tested.to_string()),
        ("filtered_count".into(), o.stats.filtered_count.to_string()),
        ("matches".into(), o.stats.matches.to_string()),
        ("counterexamples".into(), o.stats.counterexamples.to_string()),
        ("counterexample".into(), cx),
        ("reason".into(), reason),
    ])
}

pub fn appendix_csv(r: &AppendixReport) -> CsvRow {
    let line = &r.line;
    let (verdict, deficit) = match &r.verdict {
        Verdict::Balanced => ("Balanced", String::new()),
        Verdict::Unbalanced { deficit, .. } => ("Unbalanced", deficit.to_string()),
    };
    let recovered: Vec<String> = r
        .recoveries
        .iter()
        .filter_map(|sr| match &sr.recovery {
            Recovery::Recovered { term } => Some(format!("{}={term}", slot_name(sr.slot))),
            _ => None,
        })
        .collect();
    row(vec![
        ("attribution".into(), line.attribution.to_string()),
        ("k".into(), line.k.to_string()),
        ("terms".into(), strs(&line.terms).replace(", ", " ")),
        ("rhs".into(), line.rhs_value.to_string()),
        ("verdict".into(), verdict.into()),
        ("deficit".into(), deficit),
        ("pairwise_coprime".into(), r.pairwise_coprime().to_string()),
        ("recovered".into(), recovered.join(" ")),
    ])
}

pub fn line(v: &Value) -> String {
    let mut out = serde_json::to_string(v).expect("values serialize");
    out.push('\n');
    out
}

pub fn ints(xs: &[ExactInt]) -> Value {
    xs.iter().map(s).collect()
}

pub fn strs(xs: &[ExactInt]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

// ---- plain text ----

pub fn record_text(rec: &SolutionRecord) -> String {
    let vs: Vec<String> = rec.vars().iter().map(|(n, v)| format!("{n}={v}")).collect();
    format!("{:<24} {}", rec.equation().name(), vs.join(" "))
}

pub fn outcome_text(o: &ClaimOutcome) -> String {
    let mut t = format!(
        "{:<20} {:<20} candidates={} filtered={} matches={}",
        o.claim.as_str(),
        o.status.name(),
        o.stats.candidates_tested,
        o.stats.filtered_count,
        o.stats.matches
    );
    match &o.status {
        ClaimStatus::CounterexampleFound(r) => {
            let _ = write!(t, "\n    counterexample: {}", record_text(r));
        }
        ClaimStatus::Inapplicable(why) => {
            let _ = write!(t, "\n    {why}");
        }
        ClaimStatus::HoldsUpToBound => {}
    }
    t
}

pub fn appendix_text(r: &AppendixReport) -> String {
    let line = &r.line;
    let terms = line.terms.iter().map(|t| format!("{t}^{}", line.k)).collect::<Vec<_>>().join(" + ");
    let mut t = format!("{}\n    {terms} = {}^{}\n", line.attribution, line.rhs_value, line.k);
    match &r.verdict {
        Verdict::Balanced => t.push_str("    balanced\n"),
        Verdict::Unbalanced { deficit, .. } => {
            let _ = writeln!(t, "    unbalanced: rhs - lhs = {deficit}");
            for sr in &r.recoveries {
                if let Recovery::Recovered { term } = &sr.recovery {
                    let _ = writeln!(t, "    {} printed {} balances as {term}", slot_name(sr.slot), sr.printed);
                }
            }
        }
    }
    match &r.coprimality_witness {
        Some((a, b)) => {
            let _ = writeln!(t, "    not pairwise coprime: gcd({a}, {b}) > 1");
        }
        None => t.push_str("    pairwise coprime\n"),
    }
    t
}

/// Parameter schema of a claim, one line per parameter.
pub fn schema_help(id: flt_lab_core::claims::ClaimId) -> String {
    let info = claim_info(id);
    let mut t = format!("parameters of {id}:\n");
    for p in info.params {
        let range = match p.kind {
            ParamKind::Int { min, max } => format!("{min}..={max}"),
            ParamKind::Flag => "true|false".into(),
        };
        let _ = writeln!(t, "  {:<16} {:<14} {}", p.name, range, p.help);
    }
    t
}
