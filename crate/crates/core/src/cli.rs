//! Command-line front end.
//!
//! Exit codes: 0 Hurwitz / pass, 1 not Hurwitz / fail, 2 usage or input
//! error, 3 numerator and denominator share a factor (without `--reduce`).

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::Error;
use crate::numeric::{format_rational, parse_rational, Polynomial, Rational};
use crate::selfcheck::{run_selfcheck, swapped_omega, SelfCheckConfig, SelfCheckSummary};
use crate::series::{laurent_expand, RationalFunction};
use crate::stability::{
    classify_polynomial, classify_rational, omega_values, rational_hankel_evidence, stodola_check,
    verify_identities, verify_rational_hankel_relations, CheckKind, HankelEvidence,
    IdentityRecord, IdentityReport, Outcome, StabilityReport,
};
use crate::testgen::{gen_instance, truth_verdict, Instance, RootSpec, Tamper};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NOT_COPRIME: i32 = 3;

/// Default limit on generated factor degrees.
pub const GEN_DEGREE_LIMIT: usize = 8;

#[derive(Parser, Debug)]
#[command(name = "hurwitz", version, about = "Exact Hurwitz stability tests for polynomials and rational functions")]
pub struct Cli {
    /// Emit a single JSON document instead of text tables
    #[arg(long, global = true)]
    json: bool,
    /// Divide out a common factor of h and g instead of rejecting the input
    #[arg(long, global = true)]
    reduce: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Laurent coefficients t_0..t_K of h/g at infinity
    Expand {
        #[command(flatten)]
        pair: PairArgs,
        /// Last coefficient index (default 2n-1)
        #[arg(short = 'k', long = "terms")]
        k: Option<usize>,
    },
    /// Decide Hurwitz stability of a polynomial or a rational function
    Classify {
        #[arg(value_enum)]
        kind: Kind,
        /// Polynomial coefficients, descending powers (poly only)
        #[arg(allow_hyphen_values = true)]
        coeffs: Option<String>,
        #[command(flatten)]
        pair: PairArgs,
        /// Include the Ω determinants
        #[arg(long)]
        omega: bool,
        /// Include s_{-1} and the Hankel minors D_j, D̂_j
        #[arg(long)]
        hankel: bool,
    },
    /// Check every determinant identity for h/g exactly
    Verify {
        #[command(flatten)]
        pair: PairArgs,
        /// Orders beyond n covered by the vanishing checks
        #[arg(long, default_value_t = 2)]
        extra: usize,
    },
    /// Generate (h, g) with known root locations
    Gen {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "deg-h")]
        deg_h: usize,
        #[arg(long = "deg-g")]
        deg_g: usize,
        #[arg(long, value_enum, default_value_t = TamperArg::None)]
        tamper: TamperArg,
        #[arg(long = "max-degree", default_value_t = GEN_DEGREE_LIMIT)]
        max_degree: usize,
    },
    /// Run the seeded property suite
    Selfcheck {
        #[arg(long, default_value_t = 200)]
        cases: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Replace the Ω rule with a wrong one (negative control)
        #[arg(long, hide = true)]
        inject_bad_omega: bool,
    },
}

#[derive(Args, Debug)]
struct PairArgs {
    /// Numerator coefficients, descending powers
    #[arg(long = "h", allow_hyphen_values = true)]
    h: Option<String>,
    /// Denominator coefficients, descending powers
    #[arg(long = "g", allow_hyphen_values = true)]
    g: Option<String>,
    /// File with `h:`/`g:`/`p:` lines (or `hurwitz gen --json` output); `-` reads stdin
    #[arg(long)]
    input: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Poly,
    Rational,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TamperArg {
    #[value(name = "none")]
    None,
    #[value(name = "flip_h_root")]
    FlipHRoot,
    #[value(name = "flip_g_root")]
    FlipGRoot,
}

impl From<TamperArg> for Tamper {
    fn from(t: TamperArg) -> Tamper {
        match t {
            TamperArg::None => Tamper::None,
            TamperArg::FlipHRoot => Tamper::FlipHRoot,
            TamperArg::FlipGRoot => Tamper::FlipGRoot,
        }
    }
}

/// What a command produced: the printed document and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

#[derive(Debug)]
struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotCoprime(_) => EXIT_NOT_COPRIME,
            _ => EXIT_INPUT,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

/// Structured result, printable as JSON or as text.
struct Document {
    value: Value,
    text: String,
    code: i32,
}

/// Parses a comma-separated coefficient list; the leading entry must be
/// nonzero.
pub fn parse_coeff_list(list: &str) -> Result<Polynomial, String> {
    let mut coeffs = Vec::new();
    for token in list.split(',') {
        let token = token.trim();
        let value = parse_rational(token).map_err(|_| format!("bad coefficient {token:?} in {list:?}"))?;
        coeffs.push(value);
    }
    if coeffs[0] == Rational::from_integer(0.into()) {
        return Err(format!("leading coefficient {:?} is zero in {list:?}", list.split(',').next().unwrap_or("")));
    }
    Ok(Polynomial::new(coeffs))
}

#[derive(Default, Debug)]
struct InputPolys {
    h: Option<Polynomial>,
    g: Option<Polynomial>,
    p: Option<Polynomial>,
}

/// Reads `h:`, `g:` and `p:` lines (blank lines and `#` comments skipped),
/// or a JSON document carrying `h`/`g`/`p` coefficient strings.
fn parse_input_text(text: &str) -> Result<InputPolys, String> {
    let mut out = InputPolys::default();
    if text.trim_start().starts_with('{') {
        let doc: Value = serde_json::from_str(text).map_err(|e| format!("invalid JSON input: {e}"))?;
        for (key, slot) in [("h", &mut out.h), ("g", &mut out.g), ("p", &mut out.p)] {
            if let Some(v) = doc.get(key) {
                let s = v.as_str().ok_or_else(|| format!("field {key:?} must be a coefficient string"))?;
                *slot = Some(parse_coeff_list(s)?);
            }
        }
        return Ok(out);
    }
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (tag, rest) = line
            .split_once(':')
            .ok_or_else(|| format!("expected `h:`, `g:` or `p:` line, got {line:?}"))?;
        let poly = parse_coeff_list(rest.trim())?;
        match tag.trim() {
            "h" => out.h = Some(poly),
            "g" => out.g = Some(poly),
            "p" => out.p = Some(poly),
            other => return Err(format!("unknown tag {other:?}")),
        }
    }
    Ok(out)
}

fn read_input(pair: &PairArgs) -> Result<InputPolys, CliError> {
    let mut polys = match &pair.input {
        Some(path) => {
            let text = if path == "-" {
                std::io::read_to_string(std::io::stdin())
            } else {
                std::fs::read_to_string(path)
            }
            .map_err(|e| CliError::input(format!("cannot read {path}: {e}")))?;
            parse_input_text(&text).map_err(CliError::input)?
        }
        None => InputPolys::default(),
    };
    if let Some(h) = &pair.h {
        polys.h = Some(parse_coeff_list(h).map_err(CliError::input)?);
    }
    if let Some(g) = &pair.g {
        polys.g = Some(parse_coeff_list(g).map_err(CliError::input)?);
    }
    Ok(polys)
}

fn read_pair(pair: &PairArgs, reduce: bool) -> Result<RationalFunction, CliError> {
    let polys = read_input(pair)?;
    let h = polys.h.ok_or_else(|| CliError::input("missing numerator (--h or an `h:` line)"))?;
    let g = polys.g.unwrap_or_else(Polynomial::one);
    Ok(RationalFunction::new(h, g, reduce)?)
}

fn rats(values: &[Rational]) -> Value {
    Value::Array(values.iter().map(|v| Value::String(format_rational(v))).collect())
}

fn opt_rat(v: &Option<Rational>) -> Value {
    v.as_ref().map_or(Value::Null, |x| Value::String(format_rational(x)))
}

/// Renders rows as left-aligned columns.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let mut s = String::new();
        for (i, c) in cells.iter().enumerate() {
            let pad = widths[i] - c.chars().count();
            s.push_str(c);
            if i + 1 < cells.len() {
                s.push_str(&" ".repeat(pad + 2));
            }
        }
        s.trim_end().to_string()
    };
    let mut out = line(&header.iter().map(|h| h.to_string()).collect::<Vec<_>>());
    out.push('\n');
    for row in rows {
        out.push_str(&line(row));
        out.push('\n');
    }
    out
}

fn expand_doc(r: &RationalFunction, k: Option<usize>) -> Document {
    let k = k.unwrap_or(2 * r.order() - 1);
    let t = laurent_expand(r, k);
    let value = json!({
        "command": "expand",
        "h": r.numerator().to_coeff_list(),
        "g": r.denominator().to_coeff_list(),
        "order": r.order(),
        "leading_exponent": t.leading_exponent,
        "t": rats(&t.coeffs),
    });
    let mut text = format!(
        "R(z) = ({}) / ({})\norder n = {}\nleading exponent r-m = {}\n",
        r.numerator(),
        r.denominator(),
        r.order(),
        t.leading_exponent
    );
    let rows: Vec<Vec<String>> = t
        .coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| {
            vec![
                format!("t_{i}"),
                format!("z^{}", t.leading_exponent - i as i64),
                format_rational(c),
            ]
        })
        .collect();
    text.push_str(&table(&["coeff", "power", "value"], &rows));
    Document {
        value,
        text,
        code: EXIT_OK,
    }
}

fn hankel_value(h: &HankelEvidence) -> Value {
    json!({
        "s_minus1": format_rational(&h.s_minus1),
        "D": rats(&h.d),
        "Dhat": rats(&h.dhat),
        "verdict": h.verdict.to_string(),
    })
}

fn report_value(rep: &StabilityReport) -> Value {
    let mut v = json!({
        "verdict": rep.verdict.to_string(),
        "order": rep.order_n,
        "delta": rats(&rep.delta_values),
        "first_failure": rep.first_failure,
    });
    if let Some(om) = &rep.omega_values {
        v["omega"] = rats(om);
    }
    if let Some(h) = &rep.hankel {
        v["hankel"] = hankel_value(h);
    }
    v
}

fn report_text(rep: &StabilityReport) -> String {
    let mut text = format!("verdict: {}\norder n = {}\n", rep.verdict, rep.order_n);
    if let Some(j) = rep.first_failure {
        let _ = writeln!(text, "first non-positive minor: Δ_{j}");
    }
    let rows: Vec<Vec<String>> = (0..rep.order_n)
        .map(|i| {
            let mut row = vec![(i + 1).to_string(), format_rational(&rep.delta_values[i])];
            if let Some(om) = &rep.omega_values {
                row.push(format_rational(&om[i]));
            }
            row
        })
        .collect();
    let header: &[&str] = if rep.omega_values.is_some() {
        &["j", "Δ_j", "Ω_2j"]
    } else {
        &["j", "Δ_j"]
    };
    text.push_str(&table(header, &rows));
    if let Some(h) = &rep.hankel {
        let _ = writeln!(text, "s_-1 = {}", format_rational(&h.s_minus1));
        let rows: Vec<Vec<String>> = (0..h.d.len())
            .map(|i| vec![(i + 1).to_string(), format_rational(&h.d[i]), format_rational(&h.dhat[i])])
            .collect();
        text.push_str(&table(&["j", "D_j", "D̂_j"], &rows));
        let _ = writeln!(text, "Hankel criterion: {}", h.verdict);
    }
    text
}

fn classify_doc(
    kind: Kind,
    coeffs: Option<&str>,
    pair: &PairArgs,
    reduce: bool,
    omega: bool,
    hankel: bool,
) -> Result<Document, CliError> {
    match kind {
        Kind::Poly => {
            let p = match coeffs {
                Some(c) => parse_coeff_list(c).map_err(CliError::input)?,
                None => read_input(pair)?
                    .p
                    .ok_or_else(|| CliError::input("missing polynomial coefficients"))?,
            };
            let mut rep = classify_polynomial(&p)?;
            let (p, _) = p.normalize_sign()?;
            if omega {
                rep.omega_values = Some(omega_values(&p, &Polynomial::one(), rep.order_n));
            }
            if !hankel {
                rep.hankel = None;
            }
            let stodola = stodola_check(&p);
            let mut value = report_value(&rep);
            value["command"] = json!("classify");
            value["kind"] = json!("poly");
            value["p"] = json!(p.to_coeff_list());
            value["stodola"] = json!(stodola);
            let text = format!(
                "p(z) = {}\n{}all coefficients positive: {}\n",
                p,
                report_text(&rep),
                stodola
            );
            Ok(Document {
                value,
                text,
                code: if rep.verdict.is_hurwitz() { EXIT_OK } else { EXIT_FAIL },
            })
        }
        Kind::Rational => {
            if coeffs.is_some() {
                return Err(CliError::input("rational input takes --h/--g or --input"));
            }
            let r = read_pair(pair, reduce)?;
            let mut rep = classify_rational(&r, omega)?;
            if hankel {
                rep.hankel = rational_hankel_evidence(&r);
            }
            let mut value = report_value(&rep);
            value["command"] = json!("classify");
            value["kind"] = json!("rational");
            value["h"] = json!(r.numerator().to_coeff_list());
            value["g"] = json!(r.denominator().to_coeff_list());
            let text = format!(
                "R(z) = ({}) / ({})\n{}",
                r.numerator(),
                r.denominator(),
                report_text(&rep)
            );
            Ok(Document {
                value,
                text,
                code: if rep.verdict.is_hurwitz() { EXIT_OK } else { EXIT_FAIL },
            })
        }
    }
}

fn outcome_name(o: Outcome) -> &'static str {
    match o {
        Outcome::Pass => "pass",
        Outcome::Fail => "fail",
        Outcome::NotApplicable => "n/a",
    }
}

fn record_value(r: &IdentityRecord) -> Value {
    json!({
        "name": r.name,
        "order": r.order,
        "left": opt_rat(&r.left),
        "right": opt_rat(&r.right),
        "outcome": outcome_name(r.outcome),
        "kind": match r.kind { CheckKind::Asserted => "asserted", CheckKind::Probe => "probe" },
    })
}

fn records_table(report: &IdentityReport) -> String {
    let show = |x: &Option<Rational>| x.as_ref().map_or("-".to_string(), format_rational);
    let rows: Vec<Vec<String>> = report
        .records
        .iter()
        .map(|r| {
            let outcome = match r.kind {
                CheckKind::Asserted => outcome_name(r.outcome).to_string(),
                CheckKind::Probe => format!("{} (probe)", outcome_name(r.outcome)),
            };
            vec![r.name.to_string(), r.order.to_string(), show(&r.left), show(&r.right), outcome]
        })
        .collect();
    table(&["identity", "j", "left", "right", "result"], &rows)
}

fn verify_doc(r: &RationalFunction, extra: usize) -> Document {
    let ids = verify_identities(r, extra);
    let hank = verify_rational_hankel_relations(r);
    let all_pass = ids.all_asserted_pass() && hank.all_asserted_pass();
    let probe = hank.sign_probe.map(|f| {
        json!({
            "alternating": f.alternating,
            "unsigned": f.unsigned,
            "finding": f.describe(),
        })
    });
    let value = json!({
        "command": "verify",
        "h": r.numerator().to_coeff_list(),
        "g": r.denominator().to_coeff_list(),
        "order": r.order(),
        "extra": extra,
        "all_pass": all_pass,
        "identities": ids.records.iter().map(record_value).collect::<Vec<_>>(),
        "hankel_relations": hank.records.iter().map(record_value).collect::<Vec<_>>(),
        "sign_probe": probe.unwrap_or(Value::Null),
    });
    let mut text = format!(
        "R(z) = ({}) / ({})\norder n = {}\n\n",
        r.numerator(),
        r.denominator(),
        r.order()
    );
    text.push_str(&records_table(&ids));
    text.push('\n');
    text.push_str(&records_table(&hank));
    if let Some(f) = hank.sign_probe {
        let _ = writeln!(text, "\nsign probe (even order, Δ_2j vs D̂_j): {}", f.describe());
    }
    let _ = writeln!(text, "\nall asserted identities pass: {all_pass}");
    Document {
        value,
        text,
        code: if all_pass { EXIT_OK } else { EXIT_FAIL },
    }
}

fn roots_value(spec: &RootSpec) -> Value {
    json!({
        "leading": format_rational(&spec.leading),
        "real_roots": rats(&spec.real_roots),
        "quadratics": spec.complex_pairs.iter().map(|q| json!({
            "linear": format_rational(q.linear()),
            "constant": format_rational(q.constant()),
            "real_part": format_rational(&q.real_part()),
        })).collect::<Vec<_>>(),
    })
}

fn roots_text(name: &str, spec: &RootSpec) -> String {
    let mut parts: Vec<String> = spec
        .real_roots
        .iter()
        .map(|r| format!("z = {}", format_rational(r)))
        .collect();
    parts.extend(spec.complex_pairs.iter().map(|q| {
        format!(
            "z^2 + ({})z + ({}) [Re = {}]",
            format_rational(q.linear()),
            format_rational(q.constant()),
            format_rational(&q.real_part())
        )
    }));
    if parts.is_empty() {
        parts.push("constant".into());
    }
    format!("# {name} roots (leading {}): {}\n", format_rational(&spec.leading), parts.join("; "))
}

fn gen_doc(inst: &Instance) -> Document {
    let truth = truth_verdict(inst);
    let value = json!({
        "command": "gen",
        "seed": inst.seed,
        "deg_h": inst.deg_h,
        "deg_g": inst.deg_g,
        "tamper": inst.tamper.name(),
        "h": inst.h.to_coeff_list(),
        "g": inst.g.to_coeff_list(),
        "h_roots": roots_value(&inst.h_roots),
        "g_roots": roots_value(&inst.g_roots),
        "truth": truth,
    });
    let mut text = format!(
        "# seed={} deg_h={} deg_g={} tamper={}\n",
        inst.seed,
        inst.deg_h,
        inst.deg_g,
        inst.tamper.name()
    );
    text.push_str(&roots_text("h", &inst.h_roots));
    text.push_str(&roots_text("g", &inst.g_roots));
    let _ = writeln!(text, "# truth={truth}");
    let _ = writeln!(text, "h: {}", inst.h.to_coeff_list());
    let _ = writeln!(text, "g: {}", inst.g.to_coeff_list());
    Document {
        value,
        text,
        code: EXIT_OK,
    }
}

fn selfcheck_doc(cfg: &SelfCheckConfig, summary: &SelfCheckSummary) -> Document {
    let passed = summary.passed();
    let probe = summary.sign_finding.map(|(f, k)| {
        json!({
            "instances": k,
            "alternating": f.alternating,
            "unsigned": f.unsigned,
            "finding": f.describe(),
        })
    });
    let value = json!({
        "command": "selfcheck",
        "cases": cfg.cases,
        "seed": cfg.seed,
        "pass": passed,
        "families": summary.families.iter().map(|f| json!({
            "name": f.name,
            "checked": f.checked,
            "failures": f.failures.iter().map(|x| json!({
                "params": x.params,
                "detail": x.detail,
            })).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "sign_probe": probe.unwrap_or(Value::Null),
    });
    let mut text = String::new();
    for f in &summary.families {
        let status = if f.failures.is_empty() { "PASS" } else { "FAIL" };
        let _ = writeln!(
            text,
            "{status} {:<20} checked={:<5} failures={}",
            f.name,
            f.checked,
            f.failures.len()
        );
        for x in f.failures.iter().take(5) {
            let _ = writeln!(text, "     {}: {}", x.params, x.detail);
        }
    }
    if let Some((f, k)) = summary.sign_finding {
        let _ = writeln!(text, "sign probe over {k} even-order instances: {}", f.describe());
    }
    let _ = writeln!(text, "{}", if passed { "selfcheck passed" } else { "selfcheck FAILED" });
    Document {
        value,
        text,
        code: if passed { EXIT_OK } else { EXIT_FAIL },
    }
}

fn execute(cli: &Cli) -> Result<Document, CliError> {
    match &cli.command {
        Command::Expand { pair, k } => Ok(expand_doc(&read_pair(pair, cli.reduce)?, *k)),
        Command::Classify {
            kind,
            coeffs,
            pair,
            omega,
            hankel,
        } => classify_doc(*kind, coeffs.as_deref(), pair, cli.reduce, *omega, *hankel),
        Command::Verify { pair, extra } => Ok(verify_doc(&read_pair(pair, cli.reduce)?, *extra)),
        Command::Gen {
            seed,
            deg_h,
            deg_g,
            tamper,
            max_degree,
        } => {
            if deg_h.max(deg_g) > max_degree {
                return Err(CliError::input(format!(
                    "degree limit exceeded: deg_h={deg_h}, deg_g={deg_g}, limit {max_degree}"
                )));
            }
            let inst = gen_instance(*seed, *deg_h, *deg_g, (*tamper).into()).map_err(|e| CliError {
                code: EXIT_INPUT,
                message: e.to_string(),
            })?;
            Ok(gen_doc(&inst))
        }
        Command::Selfcheck {
            cases,
            seed,
            inject_bad_omega,
        } => {
            let mut cfg = SelfCheckConfig::new(*cases, *seed);
            if *inject_bad_omega {
                cfg.omega_rule = swapped_omega;
            }
            let summary = run_selfcheck(&cfg);
            Ok(selfcheck_doc(&cfg, &summary))
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), rendered)
            } else {
                (rendered, String::new())
            };
            return CliOutput { stdout, stderr, code };
        }
    };
    match execute(&cli) {
        Ok(doc) => {
            let stdout = if cli.json {
                let mut s = serde_json::to_string_pretty(&doc.value).expect("JSON values serialize");
                s.push('\n');
                s
            } else {
                doc.text
            };
            CliOutput {
                stdout,
                stderr: String::new(),
                code: doc.code,
            }
        }
        Err(e) => CliOutput {
            stdout: String::new(),
            stderr: format!("error: {}\n", e.message),
            code: e.code,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> CliOutput {
        run(std::iter::once("hurwitz").chain(args.iter().copied()))
    }

    #[test]
    fn coeff_list_grammar() {
        assert_eq!(parse_coeff_list("1,-1,1").unwrap(), Polynomial::from_ints(&[1, -1, 1]));
        assert_eq!(
            parse_coeff_list("1/2, 3").unwrap(),
            Polynomial::new(vec![crate::numeric::ratio(1, 2), crate::numeric::rat(3)])
        );
        let err = parse_coeff_list("1,x,3").unwrap_err();
        assert!(err.contains("\"x\""), "{err}");
        assert!(parse_coeff_list("0,1").unwrap_err().contains("zero"));
        assert!(parse_coeff_list("").is_err());
        assert!(parse_coeff_list("1,,2").is_err());
    }

    #[test]
    fn input_file_grammar() {
        let text = "# comment\n\nh: 1,2,1\ng: 1,-1\n";
        let polys = parse_input_text(text).unwrap();
        assert_eq!(polys.h.unwrap(), Polynomial::from_ints(&[1, 2, 1]));
        assert_eq!(polys.g.unwrap(), Polynomial::from_ints(&[1, -1]));
        assert!(parse_input_text("q: 1,2").is_err());
        assert!(parse_input_text("1,2").is_err());
        let polys = parse_input_text("{\"h\": \"1,1\", \"g\": \"1\"}").unwrap();
        assert_eq!(polys.h.unwrap(), Polynomial::from_ints(&[1, 1]));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["classify", "poly", "1,1,1"]).code, EXIT_OK);
        assert_eq!(run_args(&["classify", "poly", "1,0,1"]).code, EXIT_FAIL);
        assert_eq!(run_args(&["classify", "poly", "1,zz"]).code, EXIT_INPUT);
        assert_eq!(run_args(&["classify", "poly", "7"]).code, EXIT_INPUT);
        assert_eq!(run_args(&["expand", "--h", "1,0,-1", "--g", "1,-1"]).code, EXIT_NOT_COPRIME);
        assert_eq!(run_args(&["expand", "--h", "1,0,-1", "--g", "1,-1", "--reduce"]).code, EXIT_OK);
        assert_eq!(run_args(&["bogus"]).code, EXIT_INPUT);
        assert_eq!(run_args(&["--help"]).code, EXIT_OK);
    }

    #[test]
    fn gen_limit() {
        let out = run_args(&["gen", "--deg-h", "9", "--deg-g", "1"]);
        assert_eq!(out.code, EXIT_INPUT);
        assert!(out.stderr.contains("degree limit"));
        let out = run_args(&["gen", "--deg-h", "0", "--deg-g", "2", "--tamper", "flip_h_root"]);
        assert_eq!(out.code, EXIT_INPUT);
    }

    #[test]
    fn text_tables_align() {
        let t = table(&["a", "bb"], &[vec!["123".into(), "x".into()]]);
        assert_eq!(t, "a    bb\n123  x\n");
    }
}
