use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use qrac_core::bits::format_bits;
use qrac_core::geometry::{bloch_dim, count_realized, scheme_halfspaces};
use qrac_core::optimizer::{Objective, SearchResult, SeeSawConfig};
use qrac_core::schemes::{
    binary_entropy, example3_analysis, example3_scheme, hinry7_closed_form, nayak_bound,
};
use qrac_core::{
    evaluate_scheme, max_regions, no_go_certificate, realized_patterns, see_saw, standard_scheme,
    EvaluationReport, QracScheme, RegionStatus,
};
use serde_json::{json, Value};

use crate::args::{Cli, Command, DemoName, ObjectiveArg, SchemeSource};
use crate::error::{CliError, CliResult};
use crate::format::Precision;
use crate::scheme_file::SchemeFile;

pub const BUILTIN_NAMES: [&str; 4] = ["ambainis2", "chuang3", "hinry7", "example3"];

pub fn builtin(name: &str) -> CliResult<QracScheme> {
    if name == "example3" {
        return Ok(example3_scheme());
    }
    standard_scheme(name).map_err(|_| {
        CliError::Usage(format!(
            "unknown builtin {name:?}; expected one of {}",
            BUILTIN_NAMES.join(", ")
        ))
    })
}

fn resolve(source: &SchemeSource) -> CliResult<QracScheme> {
    match (&source.builtin, &source.file) {
        (Some(name), None) => builtin(name),
        (None, Some(path)) => SchemeFile::load(path),
        _ => Err(CliError::Usage(
            "give exactly one of --builtin or --file".into(),
        )),
    }
}

fn resolve_name_or_path(s: &str) -> CliResult<QracScheme> {
    if BUILTIN_NAMES.contains(&s) {
        builtin(s)
    } else {
        SchemeFile::load(Path::new(s))
    }
}

pub fn run(cli: Cli, out: &mut dyn Write) -> CliResult<()> {
    match cli.command {
        Command::Eval {
            source,
            csv,
            full_precision,
        } => {
            let scheme = resolve(&source)?;
            let report = evaluate_scheme(&scheme);
            let prec = Precision::from_flag(full_precision);
            writeln!(out, "{}", pretty(&report_json(&scheme, &report, prec)))?;
            if let Some(path) = csv {
                std::fs::write(path, cells_csv(&report, prec))?;
            }
            Ok(())
        }
        Command::Nogo {
            source,
            claimed_p,
            full_precision,
        } => {
            if !(claimed_p > 0.5 && claimed_p <= 1.0) {
                return Err(CliError::Usage(format!(
                    "--claimed-p {claimed_p} is not in (0.5, 1]: nothing to refute"
                )));
            }
            let scheme = resolve(&source)?;
            nogo(
                &scheme,
                claimed_p,
                Precision::from_flag(full_precision),
                out,
            )
        }
        Command::Regions {
            k,
            d,
            from_scheme,
            margin_eps,
            full_precision,
        } => match (k, d, from_scheme) {
            (Some(k), Some(d), None) => {
                writeln!(out, "max_regions({k},{d})={}", max_regions(k, d)?)?;
                Ok(())
            }
            (None, None, Some(s)) => regions_for(
                &resolve_name_or_path(&s)?,
                margin_eps,
                Precision::from_flag(full_precision),
                out,
            ),
            _ => Err(CliError::Usage("give --k and --d, or --from-scheme".into())),
        },
        Command::Optimize {
            n,
            m,
            seed,
            restarts,
            max_iters,
            reweight_rounds,
            objective,
            out_dir,
            full_precision,
        } => {
            let config = SeeSawConfig {
                restarts,
                max_iters,
                seed,
                reweight_rounds,
                objective: match objective {
                    ObjectiveArg::Average => Objective::Average,
                    ObjectiveArg::Weighted => Objective::Weighted,
                },
                ..SeeSawConfig::default()
            };
            let result = see_saw(n, m, &config)?;
            let prec = Precision::from_flag(full_precision);
            if let Some(dir) = out_dir {
                write_search(&dir, &result, prec)?;
            }
            writeln!(
                out,
                "n={n} m={m} seed={seed} restarts={restarts} worst_case_p={} average_p={} converged={} best_restart={}",
                prec.show(result.report.worst_case_p),
                prec.show(result.report.average_p),
                result.converged,
                result.best_restart
            )?;
            Ok(())
        }
        Command::Demo {
            name,
            full_precision,
        } => {
            let prec = Precision::from_flag(full_precision);
            match name {
                DemoName::Example3 => demo_example3(prec, out),
                DemoName::Hinry7 => demo_hinry7(prec, out),
                DemoName::Nayak => demo_nayak(prec, out),
            }
        }
        Command::Export { name } => {
            write!(
                out,
                "{}",
                SchemeFile::from_scheme(&builtin(&name)?).to_json()
            )?;
            Ok(())
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json value")
}

fn report_json(scheme: &QracScheme, report: &EvaluationReport, prec: Precision) -> Value {
    let n = scheme.n();
    json!({
        "label": scheme.label(),
        "n": n,
        "m": scheme.m(),
        "worst_case_p": prec.round(report.worst_case_p),
        "average_p": prec.round(report.average_p),
        "argmin_cell": {
            "x": format_bits(report.argmin_cell.x, n),
            "bit": report.argmin_cell.bit + 1,
        },
        "per_bit_worst_case": (0..n).map(|i| prec.round(report.bit_worst_case(i))).collect::<Vec<_>>(),
    })
}

fn cells_csv(report: &EvaluationReport, prec: Precision) -> String {
    let mut s = String::from("x,bit,p\n");
    for (x, row) in report.per_cell.iter().enumerate() {
        for (i, p) in row.iter().enumerate() {
            let _ = writeln!(
                s,
                "{},{},{}",
                format_bits(x, report.n),
                i + 1,
                prec.show(*p)
            );
        }
    }
    s
}

fn fmt_vec(v: &[f64], prec: Precision) -> String {
    let parts: Vec<String> = v.iter().map(|x| prec.show(*x)).collect();
    format!("({})", parts.join(", "))
}

fn nogo(
    scheme: &QracScheme,
    claimed_p: f64,
    prec: Precision,
    out: &mut dyn Write,
) -> CliResult<()> {
    let cert = no_go_certificate(scheme, claimed_p)?;
    let n = scheme.n();
    writeln!(out, "scheme: {}", cert.label)?;
    writeln!(
        out,
        "claim: every cell succeeds with p >= {}",
        prec.show(claimed_p)
    )?;
    writeln!(out, "halfspaces (outcome 0 wins iff s.r > c):")?;
    for h in &cert.halfspaces {
        writeln!(
            out,
            "  bit {}: s = {} c = {}{}",
            h.source_index + 1,
            fmt_vec(&h.s, prec),
            prec.show(h.c),
            if h.degenerate { " [degenerate]" } else { "" }
        )?;
    }
    writeln!(out, "pattern check (x, bit, slack, p):")?;
    for c in &cert.checks {
        writeln!(
            out,
            "  {} {} {} {}{}",
            format_bits(c.x, n),
            c.bit + 1,
            prec.show(c.slack),
            prec.show(c.probability),
            if c.violated() { " VIOLATED" } else { "" }
        )?;
    }
    let v = cert.violated;
    writeln!(
        out,
        "violated cell: x={} bit={} slack={} p={} (claimed {})",
        format_bits(v.x, n),
        v.bit + 1,
        prec.show(v.slack),
        prec.show(v.probability),
        prec.show(claimed_p)
    )?;
    writeln!(
        out,
        "violated cells: {} of {}",
        cert.violated_count,
        cert.checks.len()
    )?;
    match cert.counting {
        Some(c) => writeln!(out, "counting certificate: {c}")?,
        None => writeln!(out, "counting certificate: not applicable (n != 4^m)")?,
    }
    Ok(())
}

fn regions_for(
    scheme: &QracScheme,
    eps: f64,
    prec: Precision,
    out: &mut dyn Write,
) -> CliResult<()> {
    let d = bloch_dim(scheme.m());
    let k = scheme.n();
    let max = max_regions(k as u64, d as u64)?;
    let witnesses = realized_patterns(&scheme_halfspaces(scheme), d, eps)?;
    let realized = count_realized(&witnesses);
    writeln!(out, "scheme: {}", scheme.label())?;
    writeln!(out, "max_regions({k},{d})={max}")?;
    writeln!(
        out,
        "{realized} realized of max {max} ({} patterns)",
        witnesses.len()
    )?;
    for w in &witnesses {
        let status = match w.status {
            RegionStatus::Realized => "realized",
            RegionStatus::EmptyWithinTolerance => "empty",
            RegionStatus::Undecided => "undecided",
        };
        let point = w
            .point
            .as_ref()
            .filter(|_| w.status == RegionStatus::Realized)
            .map(|p| fmt_vec(p, prec))
            .unwrap_or_else(|| "-".into());
        writeln!(
            out,
            "  {} {status} margin={} point={point}",
            format_bits(w.pattern, k),
            prec.show(w.margin)
        )?;
    }
    Ok(())
}

fn write_search(dir: &Path, result: &SearchResult, prec: Precision) -> CliResult<()> {
    std::fs::create_dir_all(dir)?;
    std::fs::write(
        dir.join("scheme.json"),
        SchemeFile::from_scheme(&result.scheme).to_json(),
    )?;
    let mut report = report_json(&result.scheme, &result.report, prec);
    report["converged"] = json!(result.converged);
    report["best_restart"] = json!(result.best_restart);
    report["restarts"] = result
        .restarts
        .iter()
        .map(|r| {
            json!({
                "seed": r.seed,
                "worst_case_p": prec.round(r.worst_case_p),
                "average_p": prec.round(r.average_p),
                "converged": r.converged,
            })
        })
        .collect();
    std::fs::write(dir.join("report.json"), pretty(&report) + "\n")?;
    let mut csv = String::from("iteration,phase,average_p,worst_case_p\n");
    for t in &result.trace {
        let phase = serde_json::to_value(t.phase).expect("enum");
        let _ = writeln!(
            csv,
            "{},{},{},{}",
            t.iteration,
            phase.as_str().unwrap_or_default(),
            prec.show(t.average_p),
            prec.show(t.worst_case_p)
        );
    }
    std::fs::write(dir.join("trace.csv"), csv)?;
    Ok(())
}

fn demo_example3(prec: Precision, out: &mut dyn Write) -> CliResult<()> {
    let a = example3_analysis();
    writeln!(out, "four bits on one qubit by cloning a three-bit coding")?;
    writeln!(
        out,
        "branch success p0 (decoder on its own branch state): {}",
        prec.show(a.branch_success)
    )?;
    writeln!(
        out,
        "naive claim (p0 + 1/2)/2: {}",
        prec.show(a.naive_claim)
    )?;
    writeln!(
        out,
        "simulated worst case: {}",
        prec.show(a.report.worst_case_p)
    )?;
    writeln!(out, "simulated average: {}", prec.show(a.report.average_p))?;
    writeln!(out, "per-cell success (x: bits 1..4):")?;
    for (x, row) in a.report.per_cell.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|p| prec.show(*p)).collect();
        writeln!(out, "  {}: {}", format_bits(x, 4), cells.join(" "))?;
    }
    Ok(())
}

fn demo_hinry7(prec: Precision, out: &mut dyn Write) -> CliResult<()> {
    let scheme = builtin("hinry7")?;
    let report = evaluate_scheme(&scheme);
    writeln!(out, "seven bits on two qubits with mixed encodings")?;
    for i in 0..scheme.n() {
        writeln!(
            out,
            "bit {} worst case: {}",
            i + 1,
            prec.show(report.bit_worst_case(i))
        )?;
    }
    writeln!(out, "min cell: {}", prec.show(report.worst_case_p))?;
    writeln!(
        out,
        "closed form (9+2*sqrt(3))/23: {}",
        prec.show(hinry7_closed_form())
    )?;
    Ok(())
}

pub const NAYAK_BITS: [u32; 5] = [2, 3, 4, 7, 16];
pub const NAYAK_PROBS: [f64; 10] = [0.51, 0.55, 0.6, 0.65, 0.7, 0.75, 0.8, 0.85, 0.9, 0.95];

fn demo_nayak(prec: Precision, out: &mut dyn Write) -> CliResult<()> {
    writeln!(out, "entropy lower bound on qubits m >= (1 - H(p)) n")?;
    writeln!(out, "n,p,H(p),min_qubits")?;
    for n in NAYAK_BITS {
        for p in NAYAK_PROBS {
            writeln!(
                out,
                "{n},{p},{},{}",
                prec.show(binary_entropy(p)?),
                prec.show(nayak_bound(n, p)?)
            )?;
        }
    }
    Ok(())
}
