//! Command-line front end binding all modules.
//!
//! Six subcommands: `verify` (solver sweep against the closed forms),
//! `class` (emit one divisor class as JSON or LaTeX), `table` (one
//! test-curve row), `counts` (parity counts and boundary degrees),
//! `oracle` (enumeration vs closed forms), and `quartic` (seeded pencil
//! discriminant). Exit codes: 0 all-pass, 1 verification mismatch, 2 usage
//! error. Every report is deterministic for fixed arguments and seeds.

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use num::BigRational;
use serde_json::{json, Map, Value};

use crate::class_space::{basis, Genus};
use crate::latex::class_to_latex;
use crate::solver::{assemble_and_verify, SolveReport};
use crate::test_curves::{prym_null_numbers, row, CurveName};
use crate::{arf, counting, known_classes, quartic, Error, Result};

#[derive(Parser)]
#[command(name = "prymnull", version, about = "Exact Prym-null divisor-class computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rederive the even/odd classes from test-curve data and compare them
    /// with the closed forms, for a range of genera.
    Verify {
        #[arg(long = "g-from", default_value_t = 5)]
        g_from: u32,
        #[arg(long = "g-to", default_value_t = 12)]
        g_to: u32,
        /// Emit the full JSON report instead of one line per genus.
        #[arg(long)]
        json: bool,
    },
    /// Emit one divisor class.
    Class {
        #[arg(long)]
        g: u32,
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Emit one test-curve intersection row with its Prym-null numbers.
    Table {
        /// Family name: Ci, C0, Y, Fi, Gi, Hi, F0, G0, H0, Y0, Z0, T0, Y0n, R.
        #[arg(long)]
        curve: String,
        #[arg(long)]
        g: u32,
        /// Boundary index for the indexed families (Ci, Fi, Gi, Hi).
        #[arg(long)]
        i: Option<u32>,
        /// Emit JSON instead of an aligned text table.
        #[arg(long)]
        json: bool,
    },
    /// Emit the parity counts and boundary-fiber degrees of one genus.
    Counts {
        #[arg(long)]
        g: u32,
    },
    /// Compare brute-force enumeration with the closed-form counts.
    Oracle {
        #[arg(long)]
        g: u32,
    },
    /// Run the quartic-pencil discriminant computation on a seeded pencil.
    Quartic {
        #[arg(long)]
        seed: u64,
        /// Also emit the pencil and quadric coefficient lists.
        #[arg(long = "emit-coeffs")]
        emit_coeffs: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Total,
    Even,
    Odd,
    Thetanull,
    Mnull,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Latex,
}

struct CmdOutput {
    stdout: String,
    code: i32,
}

impl CmdOutput {
    fn ok(stdout: String) -> Self {
        CmdOutput { stdout, code: 0 }
    }
}

/// Parse and dispatch. Returns the process exit code; reports go to stdout
/// and diagnostics to stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = err.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(out) => {
            print!("{}", out.stdout);
            out.code
        }
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

fn execute(command: Command) -> Result<CmdOutput> {
    match command {
        Command::Verify { g_from, g_to, json } => cmd_verify(g_from, g_to, json),
        Command::Class { g, which, format } => cmd_class(g, which, format),
        Command::Table { curve, g, i, json } => cmd_table(&curve, g, i, json),
        Command::Counts { g } => cmd_counts(g),
        Command::Oracle { g } => cmd_oracle(g),
        Command::Quartic { seed, emit_coeffs } => cmd_quartic(seed, emit_coeffs),
    }
}

fn rat_value(q: &BigRational) -> Value {
    Value::String(q.to_string())
}

fn report_json(report: &SolveReport) -> Value {
    let mut coefficients = Map::new();
    for (label, source) in &report.provenance {
        coefficients.insert(
            label.label(),
            json!({
                "value": report.class.coeff(label).to_string(),
                "source": source,
            }),
        );
    }
    let residuals: Vec<Value> = report
        .residuals
        .iter()
        .map(|r| {
            json!({
                "class": r.class.label(),
                "solved": r.solved.to_string(),
                "expected": r.expected.to_string(),
            })
        })
        .collect();
    json!({
        "parity": report.parity.as_str(),
        "coefficients": Value::Object(coefficients),
        "matches_closed_form": report.matches_closed_form,
        "residuals": residuals,
    })
}

fn cmd_verify(g_from: u32, g_to: u32, as_json: bool) -> Result<CmdOutput> {
    if g_from > g_to {
        return Err(Error::Usage(format!(
            "--g-from {g_from} exceeds --g-to {g_to}"
        )));
    }
    let mut all_ok = true;
    let mut lines = String::new();
    let mut reports = Vec::new();
    for g in g_from..=g_to {
        let genus = Genus::new(g)?;
        let report = assemble_and_verify(genus)?;
        all_ok &= report.all_verified();
        if as_json {
            reports.push(json!({
                "genus": g,
                "even": report_json(&report.even),
                "odd": report_json(&report.odd),
                "sum_matches_total": report.sum_matches_total,
            }));
        } else {
            let mark = |ok: bool| if ok { "ok" } else { "MISMATCH" };
            lines.push_str(&format!(
                "g={g}  even: {}  odd: {}  sum: {}\n",
                mark(report.even.matches_closed_form),
                mark(report.odd.matches_closed_form),
                mark(report.sum_matches_total),
            ));
        }
    }
    let stdout = if as_json {
        let doc = json!({
            "g_from": g_from,
            "g_to": g_to,
            "all_verified": all_ok,
            "reports": reports,
        });
        format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable"))
    } else {
        let verdict = if all_ok { "all verified" } else { "MISMATCH" };
        format!("{lines}{verdict}\n")
    };
    Ok(CmdOutput { stdout, code: i32::from(!all_ok) })
}

fn cmd_class(g: u32, which: Which, format: Format) -> Result<CmdOutput> {
    let genus = Genus::new(g)?;
    let (class, factor) = match which {
        Which::Total => (known_classes::prym_null_total(genus), Some(g as i64 - 3)),
        Which::Even => (known_classes::prym_null_even(genus), Some(g as i64 - 3)),
        Which::Odd => (known_classes::prym_null_odd(genus), Some(g as i64 - 3)),
        Which::Thetanull => (known_classes::theta_null_class(genus), None),
        Which::Mnull => (known_classes::mnull_class(genus), Some(g as i64 - 3)),
    };
    let stdout = match format {
        Format::Json => {
            format!("{}\n", serde_json::to_string_pretty(&class.to_json()).expect("serializable"))
        }
        Format::Latex => format!("{}\n", class_to_latex(&class, factor)),
    };
    Ok(CmdOutput::ok(stdout))
}

fn cmd_table(curve: &str, g: u32, i: Option<u32>, as_json: bool) -> Result<CmdOutput> {
    let name = CurveName::parse(curve)?;
    let genus = Genus::new(g)?;
    let curve_row = row(name, genus, i)?;
    let numbers = match prym_null_numbers(name, genus, i) {
        Ok(pair) => Some(pair),
        Err(Error::NoIntersectionNumbers { .. }) => None,
        Err(other) => return Err(other),
    };
    let theta_pairing = (name == CurveName::Y0n)
        .then(|| curve_row.pair(&known_classes::theta_null_class(genus)))
        .transpose()?;

    if as_json {
        let mut row_map = Map::new();
        for (label, value) in curve_row.row.iter() {
            row_map.insert(label.label(), rat_value(value));
        }
        let mut doc = Map::new();
        doc.insert("curve".into(), Value::String(curve_row.display_name()));
        doc.insert("genus".into(), json!(g));
        doc.insert("space".into(), Value::String(curve_row.space().as_str().into()));
        doc.insert("row".into(), Value::Object(row_map));
        doc.insert(
            "pushforward_multiplicity".into(),
            curve_row.pushforward_multiplicity.as_ref().map_or(Value::Null, rat_value),
        );
        doc.insert(
            "base_curve".into(),
            curve_row.base_display_name().map_or(Value::Null, Value::String),
        );
        doc.insert(
            "prym_null".into(),
            numbers.as_ref().map_or(Value::Null, |pair| {
                json!({"even": pair.even.to_string(), "odd": pair.odd.to_string()})
            }),
        );
        if let Some(mu) = &theta_pairing {
            doc.insert("theta_null".into(), rat_value(mu));
        }
        let stdout =
            format!("{}\n", serde_json::to_string_pretty(&Value::Object(doc)).expect("serializable"));
        return Ok(CmdOutput::ok(stdout));
    }

    let labels = basis(genus, curve_row.space());
    let mut header = Vec::new();
    let mut values = Vec::new();
    for label in &labels {
        header.push(label.label());
        values.push(curve_row.row.coeff(label).to_string());
    }
    let mut out = format!(
        "{}  (genus {g}, space {})\n",
        curve_row.display_name(),
        curve_row.space()
    );
    let widths: Vec<usize> = header
        .iter()
        .zip(&values)
        .map(|(h, v)| h.len().max(v.len()))
        .collect();
    for items in [&header, &values] {
        let cells: Vec<String> = items
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:>w$}"))
            .collect();
        out.push_str(&format!("  {}\n", cells.join("  ")));
    }
    if let Some(pair) = &numbers {
        out.push_str(&format!("P+ pairing: {}   P- pairing: {}\n", pair.even, pair.odd));
    }
    if let Some(mu) = &theta_pairing {
        out.push_str(&format!("theta-null pairing: {mu}\n"));
    }
    if let (Some(m), Some(base)) =
        (&curve_row.pushforward_multiplicity, curve_row.base_display_name())
    {
        out.push_str(&format!("pushforward: {m} * {base}\n"));
    }
    Ok(CmdOutput::ok(out))
}

fn cmd_counts(g: u32) -> Result<CmdOutput> {
    let table = counting::count_table(g)?;
    let counts = json!({
        "s_plus": table.s_plus.to_string(),
        "s_minus": table.s_minus.to_string(),
        "prym_roots": table.prym_roots.to_string(),
        "n_plus": table.n_plus.to_string(),
        "n_minus": table.n_minus.to_string(),
        "n_pm": table.n_pm.to_string(),
    });
    let mut doc = Map::new();
    doc.insert("genus".into(), json!(g));
    doc.insert("counts".into(), counts);
    if g >= 2 {
        use crate::class_space::BasisClass as B;
        let mut r_map = Map::new();
        let mut r_labels = vec![B::Delta0T, B::Delta0P, B::Delta0B];
        let mut s_labels = vec![B::Delta0N, B::Delta0B];
        for i in 1..=g / 2 {
            r_labels.extend([B::DeltaN(i), B::DeltaT(i), B::DeltaP(i)]);
            s_labels.extend([B::DeltaPlus(i), B::DeltaMinus(i)]);
        }
        for label in r_labels {
            let deg = counting::boundary_degree_r(g, &label)?;
            r_map.insert(label.label(), Value::String(deg.to_string()));
        }
        let mut s_map = Map::new();
        for label in s_labels {
            let deg = counting::boundary_degree_s(g, &label)?;
            s_map.insert(label.label(), Value::String(deg.to_string()));
        }
        doc.insert("boundary_degrees_r".into(), Value::Object(r_map));
        doc.insert("boundary_degrees_splus".into(), Value::Object(s_map));
    }
    let stdout =
        format!("{}\n", serde_json::to_string_pretty(&Value::Object(doc)).expect("serializable"));
    Ok(CmdOutput::ok(stdout))
}

fn cmd_oracle(g: u32) -> Result<CmdOutput> {
    let closed = counting::count_table(g)?;
    let enumerated = arf::oracle_counts(g)?;
    let fields = [
        ("s_plus", &closed.s_plus, &enumerated.s_plus),
        ("s_minus", &closed.s_minus, &enumerated.s_minus),
        ("prym_roots", &closed.prym_roots, &enumerated.prym_roots),
        ("n_plus", &closed.n_plus, &enumerated.n_plus),
        ("n_minus", &closed.n_minus, &enumerated.n_minus),
        ("n_pm", &closed.n_pm, &enumerated.n_pm),
    ];
    let mut out = format!(
        "g={g}: {} quadratic forms, {} twist vectors\n",
        1u64 << (2 * g),
        (1u64 << (2 * g)) - 1
    );
    let mut all_match = true;
    for (field, want, got) in fields {
        let verdict = if want == got { "MATCH" } else { "MISMATCH" };
        all_match &= want == got;
        out.push_str(&format!("{field:>11}  closed={want:<12} enum={got:<12} {verdict}\n"));
    }
    out.push_str(if all_match { "verdict: MATCH\n" } else { "verdict: MISMATCH\n" });
    Ok(CmdOutput { stdout: out, code: i32::from(!all_match) })
}

fn form_coeffs(form: &quartic::BinaryForm) -> Value {
    Value::Array(form.coeffs().iter().map(rat_value).collect())
}

fn cmd_quartic(seed: u64, emit_coeffs: bool) -> Result<CmdOutput> {
    let pencil = quartic::PencilQuartic::random(seed);
    let restriction = quartic::restrict_to_tangent(&pencil);
    let low_order_vanish = restriction.term(4).is_zero() && restriction.term(3).is_zero();
    let (c3, c4, c5) = quartic::extract_quadric(&restriction)?;
    let delta = quartic::discriminant(&c3, &c4, &c5)?;
    let distinct_roots = match delta.distinct_root_count() {
        Ok(n) => Some(n),
        Err(Error::ZeroForm) => None,
        Err(other) => return Err(other),
    };

    let mut doc = Map::new();
    doc.insert("seed".into(), json!(seed));
    doc.insert("low_order_terms_vanish".into(), json!(low_order_vanish));
    doc.insert(
        "quadric_degrees".into(),
        json!([c3.degree(), c4.degree(), c5.degree()]),
    );
    doc.insert(
        "delta".into(),
        json!({
            "degree": delta.degree(),
            "dehomogenized_degree": delta.dehomogenized_degree(),
            "distinct_roots": distinct_roots,
            "coeffs": form_coeffs(&delta),
        }),
    );
    if emit_coeffs {
        let mut f_map = Map::new();
        let mut g_map = Map::new();
        for (i, j, k) in quartic::quartic_monomials() {
            let (a, b) = pencil.coeff_pair(i, j, k);
            f_map.insert(format!("{i}{j}{k}"), rat_value(&a));
            g_map.insert(format!("{i}{j}{k}"), rat_value(&b));
        }
        doc.insert("pencil".into(), json!({"f": Value::Object(f_map), "g": Value::Object(g_map)}));
        doc.insert(
            "quadric".into(),
            json!({"c3": form_coeffs(&c3), "c4": form_coeffs(&c4), "c5": form_coeffs(&c5)}),
        );
    }
    let stdout =
        format!("{}\n", serde_json::to_string_pretty(&Value::Object(doc)).expect("serializable"));
    Ok(CmdOutput::ok(stdout))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class_space::ClassVector;

    fn run_args(args: &[&str]) -> i32 {
        run(std::iter::once("prymnull").chain(args.iter().copied()))
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["counts", "--g", "0"]), 2);
        assert_eq!(run_args(&["counts", "--g", "3"]), 0);
        assert_eq!(run_args(&["--definitely-not-a-flag"]), 2);
        assert_eq!(run_args(&["table", "--curve", "Fi", "--g", "5"]), 2);
        assert_eq!(run_args(&["class", "--g", "4", "--which", "even"]), 2);
        assert_eq!(run_args(&["verify", "--g-from", "6", "--g-to", "5"]), 2);
        assert_eq!(run_args(&["verify", "--g-from", "5", "--g-to", "8"]), 0);
        assert_eq!(run_args(&["oracle", "--g", "2"]), 0);
    }

    #[test]
    fn class_json_contains_spot_value() {
        let out = execute(Command::Class { g: 5, which: Which::Even, format: Format::Json })
            .unwrap();
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("\"lambda\": \"68\""), "{}", out.stdout);
        let parsed: Value = serde_json::from_str(&out.stdout).unwrap();
        let back = ClassVector::from_json(&parsed).unwrap();
        assert_eq!(back, known_classes::prym_null_even(Genus::new(5).unwrap()));
    }

    #[test]
    fn outputs_are_deterministic() {
        let commands = || {
            vec![
                Command::Class { g: 6, which: Which::Odd, format: Format::Json },
                Command::Class { g: 6, which: Which::Odd, format: Format::Latex },
                Command::Table { curve: "Z0".into(), g: 6, i: None, json: true },
                Command::Counts { g: 6 },
                Command::Quartic { seed: 42, emit_coeffs: true },
                Command::Verify { g_from: 5, g_to: 7, json: true },
            ]
        };
        for (a, b) in commands().into_iter().zip(commands()) {
            let first = execute(a).unwrap();
            let second = execute(b).unwrap();
            assert_eq!(first.stdout, second.stdout);
        }
    }

    #[test]
    fn table_text_mode_lists_pairings() {
        let out =
            execute(Command::Table { curve: "F0".into(), g: 5, i: None, json: false }).unwrap();
        assert!(out.stdout.contains("P+ pairing: 0"), "{}", out.stdout);
        assert!(out.stdout.contains("pushforward: 1 * C0"), "{}", out.stdout);

        let y0n =
            execute(Command::Table { curve: "Y0n".into(), g: 5, i: None, json: false }).unwrap();
        assert!(y0n.stdout.contains("theta-null pairing: 68"), "{}", y0n.stdout);
    }

    #[test]
    fn quartic_reports_octic() {
        let out = execute(Command::Quartic { seed: 0, emit_coeffs: false }).unwrap();
        let parsed: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(parsed["delta"]["degree"], json!(8));
        assert_eq!(parsed["delta"]["distinct_roots"], json!(8));
        assert_eq!(parsed["low_order_terms_vanish"], json!(true));
    }
}
