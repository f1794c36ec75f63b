use std::io::{self, Write};

use orbit_fusion::{standard_form, OrbitLabel, ProductExpansion, Report, Violation};
use serde_json::{json, Value};

use crate::{expansion_json, report_json, OutputFormat};

fn csv_err(e: csv::Error) -> io::Error {
    io::Error::other(e)
}

fn joined(values: &[u32]) -> String {
    values
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn write_json(out: &mut dyn Write, v: &Value) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, v)?;
    writeln!(out)
}

pub(crate) fn labels(
    out: &mut dyn Write,
    format: OutputFormat,
    rows: &[(u128, OrbitLabel)],
) -> io::Result<()> {
    match format {
        OutputFormat::Json => {
            let v: Vec<Value> = rows
                .iter()
                .map(|(size, l)| json!({ "label": l.mults(), "size": size }))
                .collect();
            write_json(out, &Value::Array(v))
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["label", "size"]).map_err(csv_err)?;
            for (size, l) in rows {
                w.write_record([joined(l.mults()), size.to_string()])
                    .map_err(csv_err)?;
            }
            w.flush()
        }
        OutputFormat::Text => {
            for (size, l) in rows {
                writeln!(out, "{l}  size {size}  standard form {}", standard_form(l))?;
            }
            Ok(())
        }
    }
}

pub(crate) fn tuples(
    out: &mut dyn Write,
    format: OutputFormat,
    elements: &[Vec<u32>],
) -> io::Result<()> {
    match format {
        OutputFormat::Json => write_json(out, &json!(elements)),
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["tuple"]).map_err(csv_err)?;
            for t in elements {
                w.write_record([joined(t)]).map_err(csv_err)?;
            }
            w.flush()
        }
        OutputFormat::Text => {
            for t in elements {
                writeln!(out, "({})", joined(t))?;
            }
            Ok(())
        }
    }
}

pub(crate) fn expansion(
    out: &mut dyn Write,
    format: OutputFormat,
    e: &ProductExpansion,
) -> io::Result<()> {
    match format {
        OutputFormat::Json => {
            serde_json::to_writer(&mut *out, &expansion_json(e))?;
            writeln!(out)
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["label", "coefficient"]).map_err(csv_err)?;
            for (l, c) in e.iter() {
                w.write_record([joined(l.mults()), c.to_string()])
                    .map_err(csv_err)?;
            }
            w.flush()
        }
        OutputFormat::Text => {
            if e.is_empty() {
                return writeln!(out, "0");
            }
            for (l, c) in e.iter() {
                writeln!(out, "{c} x {l}  standard form {}", standard_form(l))?;
            }
            Ok(())
        }
    }
}

pub(crate) fn report(out: &mut dyn Write, format: OutputFormat, r: &Report) -> io::Result<()> {
    match format {
        OutputFormat::Json => write_json(out, &report_json(r)),
        OutputFormat::Csv => report_csv(out, r),
        OutputFormat::Text => report_text(out, r),
    }
}

fn violation_record(v: &Violation, status: &str) -> [String; 7] {
    [
        v.k.to_string(),
        joined(&v.a),
        joined(&v.b),
        joined(&v.c),
        v.lhs.to_string(),
        v.rhs.to_string(),
        status.to_string(),
    ]
}

/// One row per violation, then a summary row
/// `total,,,,<cases_checked>,<violation count>,pass|fail`.
fn report_csv(out: &mut dyn Write, r: &Report) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["k", "a", "b", "c", "lhs", "rhs", "status"])
        .map_err(csv_err)?;
    for v in &r.violations {
        w.write_record(violation_record(v, "violation"))
            .map_err(csv_err)?;
    }
    if let Some(evidence) = &r.evidence {
        for v in &evidence.violations {
            w.write_record(violation_record(v, "evidence"))
                .map_err(csv_err)?;
        }
    }
    let verdict = if r.passed() { "pass" } else { "fail" };
    w.write_record([
        "total".to_string(),
        String::new(),
        String::new(),
        String::new(),
        r.cases_checked.to_string(),
        r.violations.len().to_string(),
        verdict.to_string(),
    ])
    .map_err(csv_err)?;
    w.flush()
}

fn report_text(out: &mut dyn Write, r: &Report) -> io::Result<()> {
    writeln!(
        out,
        "{} N={} k<={}: {} cases, {} violations -> {}",
        r.spec.kind,
        r.spec.modulus,
        r.spec.k_max,
        r.cases_checked,
        r.violations.len(),
        if r.passed() { "PASS" } else { "FAIL" }
    )?;
    for v in &r.violations {
        writeln!(out, "  {}", describe(v))?;
    }
    if let Some(e) = &r.evidence {
        writeln!(
            out,
            "evidence (non-row, not part of the verdict): {} cases, {} counterexamples",
            e.cases_checked,
            e.violations.len()
        )?;
        for v in &e.violations {
            writeln!(out, "  {}", describe(v))?;
        }
    }
    writeln!(out, "elapsed {:.3?}", r.elapsed)
}

fn describe(v: &Violation) -> String {
    let mut s = format!(
        "k={} a=({}) b=({}) c=({}) lhs={} rhs={}",
        v.k,
        joined(&v.a),
        joined(&v.b),
        joined(&v.c),
        v.lhs,
        v.rhs
    );
    if let Some(d) = &v.detail {
        s.push_str(" [");
        s.push_str(d);
        s.push(']');
    }
    s
}
