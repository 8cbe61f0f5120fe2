//! Text, JSON and CSV renderings. Nothing here reads the clock or the host, so
//! the same arguments always produce the same bytes.

use clap::ValueEnum;
use serde::Serialize;
use sniep_core::report::{Report, Status};
use sniep_core::sniep::{SpectrumList, SweepSummary, Verdict, VerdictKind};
use sniep_core::Error;

use crate::Family;

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Emit {
    Text,
    Json,
    Csv,
}

/// Rendered body and the process exit code.
pub struct Output {
    pub body: String,
    pub code: u8,
}

pub fn json<T: Serialize + ?Sized>(value: &T) -> Result<String, Error> {
    serde_json::to_string_pretty(value).map(|s| s + "\n").map_err(|e| Error::Format(e.to_string()))
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn kind_text(kind: VerdictKind) -> &'static str {
    match kind {
        VerdictKind::Realizable => "realizable",
        VerdictKind::NotRealizable => "not_realizable",
        VerdictKind::OutOfRegion => "out_of_region",
    }
}

#[derive(Serialize)]
struct VerdictJson<'a> {
    spectrum: String,
    #[serde(flatten)]
    verdict: &'a Verdict,
}

/// One verdict as an object, a batch as an array.
pub fn verdicts(rows: &[(&SpectrumList, Verdict)], emit: Emit) -> Result<String, Error> {
    match emit {
        Emit::Json => {
            let items: Vec<VerdictJson> =
                rows.iter().map(|(s, v)| VerdictJson { spectrum: s.to_string(), verdict: v }).collect();
            match items.as_slice() {
                [one] => json(one),
                _ => json(&items),
            }
        }
        Emit::Csv => {
            let mut out = String::from("spectrum,kind,failed_condition,residual\n");
            for (s, v) in rows {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    csv_field(&s.to_string()),
                    kind_text(v.kind),
                    v.failed_condition.map_or("", |c| c.name()),
                    v.certificate.as_ref().map_or(String::new(), |c| format!("{:e}", c.residual)),
                ));
            }
            Ok(out)
        }
        Emit::Text => {
            let mut out = String::new();
            for (s, v) in rows {
                out.push_str(&format!("{s}: {}", kind_text(v.kind).replace('_', " ")));
                if let Some(c) = v.failed_condition {
                    out.push_str(&format!(" ({c} condition fails)"));
                }
                out.push('\n');
                if let Some(cert) = &v.certificate {
                    for row in cert.matrix.rows_f64() {
                        let cells: Vec<String> = row.iter().map(|x| format!("{x:>12.9}")).collect();
                        out.push_str(&format!("  {}\n", cells.join(" ")));
                    }
                    out.push_str(&format!("  spectrum residual {:.2e}\n", cert.residual));
                }
            }
            Ok(out)
        }
    }
}

pub fn report(r: &Report, emit: Emit) -> Result<String, Error> {
    match emit {
        Emit::Json => json(r),
        Emit::Text => Ok(format!("{r}\n")),
        Emit::Csv => {
            let mut out = String::from("step,status,claim,detail\n");
            for s in &r.steps {
                let status = if s.status == Status::Pass { "pass" } else { "fail" };
                out.push_str(&format!(
                    "{},{status},{},{}\n",
                    csv_field(&s.step),
                    csv_field(&s.claim),
                    csv_field(s.detail.as_deref().unwrap_or(""))
                ));
            }
            Ok(out)
        }
    }
}

pub fn roots(texts: &[String], emit: Emit) -> Result<String, Error> {
    match emit {
        Emit::Json => json(texts),
        Emit::Csv => Ok(std::iter::once("root").chain(texts.iter().map(String::as_str)).collect::<Vec<_>>().join("\n") + "\n"),
        Emit::Text => Ok(texts.iter().map(|t| format!("{t}\n")).collect()),
    }
}

#[derive(Serialize)]
struct SweepJson<'a> {
    family: Family,
    seed: u64,
    #[serde(flatten)]
    summary: &'a SweepSummary,
}

pub fn sweep(family: Family, seed: u64, s: &SweepSummary, emit: Emit) -> Result<String, Error> {
    let name = match family {
        Family::Random => "random",
        Family::H => "h",
        Family::C => "c",
    };
    let first = s.first_violation.map_or(String::new(), |i| i.to_string());
    match emit {
        Emit::Json => json(&SweepJson { family, seed, summary: s }),
        Emit::Csv => Ok(format!(
            "family,seed,sampled,kept,violations,max_excess,first_violation\n{name},{seed},{},{},{},{:e},{first}\n",
            s.sampled, s.kept, s.violations, s.max_excess
        )),
        Emit::Text => Ok(format!(
            "family {name}, seed {seed}: {} sampled, {} with spectral radius <= 1, {} violations, max lambda_3 - trace {:.3e}{}\n",
            s.sampled,
            s.kept,
            s.violations,
            s.max_excess,
            if first.is_empty() { String::new() } else { format!(", first at index {first}") }
        )),
    }
}
