use std::io::{Read, Write};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use gentorsion::braid3::{self, parse_braid};
use gentorsion::certificate::{verify_json, Certificate, Element, Group};
use gentorsion::modular::{self, Gen3Tag};
use gentorsion::oracle::{sweep_agreement, SearchBudget};
use gentorsion::seifert::{
    classify_reversible_families, gen_n_certificate, parse_seifert, presentation, quotient_presentation,
    quotient_scheme, reversible_seifert,
};

#[derive(Parser)]
#[command(name = "gentorsion", version, about = "Reversibility and generalised torsion with checkable certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(clap::Args)]
struct Target {
    /// pslz, b3 or seifert:<spec>
    #[arg(long, default_value = "pslz")]
    group: String,
    /// Word in the group's grammar, e.g. "a b^2 a b".
    #[arg(long)]
    word: String,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of a word.
    Normalize(Target),
    /// Isometry class of a PSL(2,Z) element (of the image, for b3).
    Classify(Target),
    /// Decide conjugacy of --word and --target.
    Conjugate {
        #[command(flatten)]
        target: Target,
        #[arg(long = "target")]
        other: String,
    },
    /// Decide whether the element is conjugate to its inverse.
    Reversible(Target),
    /// Decide generalised n-torsion (n = 2 or 3).
    GenTorsion {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 3)]
        n: i64,
        /// Search bound for semi-decisions; defaults to ceil(len/2) + 3.
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Normal form, exponent sum and sigma spelling of a braid word.
    Braid {
        #[arg(long)]
        word: String,
    },
    /// Symbolic queries on Seifert data.
    Seifert {
        #[arg(long)]
        spec: String,
        #[arg(value_enum)]
        action: SeifertAction,
        /// Torsion order for `certificate`.
        #[arg(long, default_value_t = 3)]
        n: i64,
    },
    /// Re-check a certificate (bare or inside a result); reads stdin without --certificate.
    Verify {
        #[arg(long)]
        certificate: Option<String>,
        #[arg(long)]
        file: Option<std::path::PathBuf>,
    },
    /// Compare structural deciders with brute force.
    Sweep {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 6)]
        max_syllables: usize,
        #[arg(long, default_value_t = 2)]
        max_central: i64,
        #[arg(long, default_value_t = 1_000_000)]
        max_candidates: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SeifertAction {
    Families,
    Presentation,
    Quotient,
    Certificate,
}

#[derive(Serialize)]
struct QueryResult {
    verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    normal_form: Option<Value>,
    diagnostics: Vec<String>,
    budget: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<Value>,
    #[serde(skip)]
    exit: u8,
}

impl QueryResult {
    fn new(verdict: impl Into<String>) -> Self {
        QueryResult {
            verdict: verdict.into(),
            certificate: None,
            normal_form: None,
            diagnostics: Vec::new(),
            budget: Value::Null,
            report: None,
            exit: 0,
        }
    }

    fn yes_no(found: bool) -> Self {
        QueryResult::new(if found { "yes" } else { "no" })
    }

    fn render_text(&self) -> String {
        let mut out = format!("verdict: {}\n", self.verdict);
        if let Some(nf) = &self.normal_form {
            out += &format!("normal_form: {}\n", plain(nf));
        }
        if let Some(c) = &self.certificate {
            out += &format!("certificate: {}\n", serde_json::to_string(c).expect("serializable"));
        }
        for d in &self.diagnostics {
            out += &format!("note: {d}\n");
        }
        if !self.budget.is_null() {
            out += &format!("budget: {}\n", plain(&self.budget));
        }
        if let Some(r) = &self.report {
            out += &format!("report: {}\n", serde_json::to_string_pretty(r).expect("serializable"));
        }
        out
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn normal_form(e: &Element) -> Value {
    match e.central_form() {
        Some((m, q)) => json!({ "m": m, "q": q, "word": e.to_string() }),
        None => Value::String(e.to_string()),
    }
}

fn parse_target(t: &Target) -> Result<(Group, Element)> {
    let group = Group::parse(&t.group)?;
    let element = group.element(&t.word)?;
    Ok((group, element))
}

fn cmd_normalize(t: &Target) -> Result<QueryResult> {
    let (_, e) = parse_target(t)?;
    let mut r = QueryResult::new("ok");
    r.normal_form = Some(normal_form(&e));
    Ok(r)
}

fn cmd_classify(t: &Target) -> Result<QueryResult> {
    let (_, e) = parse_target(t)?;
    let (word, note) = match &e {
        Element::Modular(w) => (w.clone(), None),
        Element::Braid(b) => (b.q.clone(), Some("class of the image in PSL(2,Z)")),
        Element::Seifert(_) => bail!("classify supports pslz and b3"),
    };
    let class = modular::classify(&word)?;
    let mut r = QueryResult::new(class.to_string());
    r.normal_form = Some(normal_form(&e));
    let m: gentorsion::BigIntMatrix2 = modular::to_matrix(&word)?;
    r.diagnostics.push(format!("matrix: {m}"));
    r.diagnostics.extend(note.map(String::from));
    Ok(r)
}

fn cmd_conjugate(t: &Target, other: &str) -> Result<QueryResult> {
    let (group, g1) = parse_target(t)?;
    let g2 = group.element(other)?;
    let k = match (&g1, &g2) {
        (Element::Modular(a), Element::Modular(b)) => gentorsion::word::is_conjugate(a, b)?.map(Element::Modular),
        (Element::Braid(a), Element::Braid(b)) => braid3::conjugate_elements(a, b)?.map(Element::Braid),
        _ => bail!("conjugate supports pslz and b3"),
    };
    let mut r = QueryResult::yes_no(k.is_some());
    r.certificate = k.map(|k| Certificate::Conjugator {
        group: group.name(),
        from: g1.to_string(),
        to: g2.to_string(),
        conjugator: k.to_string(),
    });
    Ok(r)
}

fn reverser_of(group: &Group, e: &Element, r: &mut QueryResult) -> Result<Option<Element>> {
    Ok(match e {
        Element::Modular(w) => modular::reversible(w)?.map(|rev| {
            let (u, v) = &rev.involutions;
            r.diagnostics.push(format!("involutions: {u} | {v}"));
            Element::Modular(rev.reverser)
        }),
        Element::Braid(b) => braid3::reversible_element(b)?.map(|rev| {
            if let Some(c) = &rev.commutator {
                r.diagnostics.push(format!(
                    "conjugate of [x, k] with k = {} by {}",
                    braid3::section(&c.k),
                    braid3::section(&c.conjugator)
                ));
            }
            Element::Braid(rev.reverser)
        }),
        Element::Seifert(s) => {
            let _ = group;
            reversible_seifert(s)?.map(Element::Seifert)
        }
    })
}

fn cmd_reversible(t: &Target) -> Result<QueryResult> {
    let (group, e) = parse_target(t)?;
    let mut r = QueryResult::new("");
    let rev = reverser_of(&group, &e, &mut r)?;
    r.verdict = if rev.is_some() { "yes" } else { "no" }.into();
    r.normal_form = Some(normal_form(&e));
    r.certificate = rev.map(|k| Certificate::Reverser {
        group: group.name(),
        element: e.to_string(),
        reverser: k.to_string(),
    });
    Ok(r)
}

fn torsion_certificate(group: &Group, e: &Element, conjugators: Vec<String>) -> Certificate {
    Certificate::Torsion {
        group: group.name(),
        element: e.to_string(),
        n: conjugators.len() as i64,
        conjugators,
    }
}

fn cmd_gen_torsion(t: &Target, n: i64, bound: Option<i64>) -> Result<QueryResult> {
    let (group, e) = parse_target(t)?;
    if n == 2 {
        // g · r g r⁻¹ = 1 exactly when r reverses g
        let mut r = QueryResult::new("");
        let rev = reverser_of(&group, &e, &mut r)?;
        r.verdict = if rev.is_some() { "yes" } else { "no" }.into();
        r.normal_form = Some(normal_form(&e));
        r.certificate = rev.map(|k| torsion_certificate(&group, &e, vec!["1".into(), k.to_string()]));
        return Ok(r);
    }
    if n != 3 {
        return Err(gentorsion::Error::UnsupportedOrder(n).into());
    }
    let (tag, reason, bound_used, cert) = match &e {
        Element::Modular(w) => {
            let v = modular::gen3_torsion(w, bound.unwrap_or_else(|| modular::default_search_bound(w)))?;
            let cert = v.certificate.map(|c| (Element::Modular(c.h1), Element::Modular(c.k)));
            (v.tag, v.reason, v.bound_used, cert)
        }
        Element::Braid(b) => {
            let v = braid3::gen3_torsion_element(b, bound.unwrap_or_else(|| braid3::default_search_bound(b)))?;
            let cert = v.certificate.map(|c| (Element::Braid(c.h1), Element::Braid(c.k)));
            (v.tag, v.reason, v.bound_used, cert)
        }
        Element::Seifert(_) => bail!("element-level 3-torsion supports pslz and b3; see `seifert certificate`"),
    };
    let mut r = QueryResult::new(tag.to_string());
    r.normal_form = Some(normal_form(&e));
    r.diagnostics.push(format!("reason: {reason}"));
    r.budget = json!({ "search_bound": bound_used });
    r.certificate = cert.map(|(h1, k)| torsion_certificate(&group, &e, vec!["1".into(), h1.to_string(), k.to_string()]));
    if tag == Gen3Tag::UnknownWithinBound {
        r.exit = 2;
    }
    Ok(r)
}

fn cmd_braid(word: &str) -> Result<QueryResult> {
    let w = parse_braid(word)?;
    let g = braid3::normal_form(&w);
    let mut r = QueryResult::new("ok");
    r.normal_form = Some(normal_form(&Element::Braid(g.clone())));
    r.diagnostics.push(format!("exponent sum: {}", braid3::exponent_sum(&w)));
    r.diagnostics.push(format!("sigma word: {}", braid3::to_sigma_word(&g)));
    Ok(r)
}

fn cmd_seifert(spec: &str, action: SeifertAction, n: i64) -> Result<QueryResult> {
    let d = parse_seifert(spec)?;
    let mut r = QueryResult::new("ok");
    r.diagnostics.push(format!("data: {d}"));
    match action {
        SeifertAction::Families => {
            let report = classify_reversible_families(&d);
            r.diagnostics.extend(report.families.iter().map(|f| format!("family: {f}")));
            r.diagnostics.extend(report.notes.iter().cloned());
            r.report = Some(serde_json::to_value(&report)?);
        }
        SeifertAction::Presentation => {
            let p = presentation(&d);
            r.diagnostics.push(p.to_string());
            r.report = Some(serde_json::to_value(&p)?);
        }
        SeifertAction::Quotient => {
            let p = quotient_presentation(&d);
            r.diagnostics.push(p.to_string());
            let scheme = quotient_scheme(&d).map(|q| q.scheme.to_string());
            match &scheme {
                Some(s) => r.diagnostics.push(format!("free product of cyclics: {s}")),
                None => {
                    r.verdict = "unsupported".into();
                    r.diagnostics.push("closed base: quotient is not a free product of cyclic groups".into());
                }
            }
            r.report = Some(json!({ "presentation": p, "scheme": scheme }));
        }
        SeifertAction::Certificate => {
            let cert = gen_n_certificate(&d, n)?;
            r.verdict = if cert.is_some() { "yes" } else { "no" }.into();
            if let Some(c) = &cert {
                r.diagnostics.push(format!("{}x + {} + {} = 0 with x = {}", c.n, c.m1, c.m2, c.x));
                if quotient_scheme(&d).is_some() {
                    let group = Group::parse(&format!("seifert:{d}"))?;
                    let e = group.element(&c.element)?;
                    r.certificate = Some(Certificate::Torsion {
                        group: group.name(),
                        element: c.element.clone(),
                        n: c.n,
                        conjugators: c.conjugators.clone(),
                    });
                    r.normal_form = Some(normal_form(&e));
                } else {
                    r.diagnostics.push("closed base: certificate is symbolic only".into());
                }
            }
            r.report = Some(serde_json::to_value(&cert)?);
        }
    }
    Ok(r)
}

fn cmd_verify(certificate: Option<&str>, file: Option<&std::path::Path>) -> Result<QueryResult> {
    let text = match (certificate, file) {
        (Some(c), _) => c.to_string(),
        (None, Some(path)) => std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?,
        (None, None) => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    let ok = verify_json(&text)?;
    Ok(QueryResult::new(if ok { "valid" } else { "invalid" }))
}

fn cmd_sweep(suite: &str, budget: SearchBudget) -> Result<QueryResult> {
    let report = sweep_agreement(suite, &budget)?;
    let mut r = QueryResult::new(if report.mismatches.is_empty() { "agree" } else { "mismatch" });
    r.diagnostics.push(format!(
        "checked {}, positive {}, beyond budget {}, unknown {}, mismatches {}",
        report.checked,
        report.positive,
        report.beyond_budget,
        report.unknown,
        report.mismatches.len()
    ));
    r.budget = serde_json::to_value(budget)?;
    if !report.mismatches.is_empty() {
        r.exit = 1;
    }
    r.report = Some(serde_json::to_value(&report)?);
    Ok(r)
}

fn run(cli: &Cli) -> Result<QueryResult> {
    match &cli.command {
        Command::Normalize(t) => cmd_normalize(t),
        Command::Classify(t) => cmd_classify(t),
        Command::Conjugate { target, other } => cmd_conjugate(target, other),
        Command::Reversible(t) => cmd_reversible(t),
        Command::GenTorsion { target, n, bound } => cmd_gen_torsion(target, *n, *bound),
        Command::Braid { word } => cmd_braid(word),
        Command::Seifert { spec, action, n } => cmd_seifert(spec, *action, *n),
        Command::Verify { certificate, file } => cmd_verify(certificate.as_deref(), file.as_deref()),
        Command::Sweep {
            suite,
            max_syllables,
            max_central,
            max_candidates,
        } => {
            let budget = SearchBudget::new(*max_syllables, *max_central, *max_candidates)
                .map_err(|e| anyhow!(e))?;
            cmd_sweep(suite, budget)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(result) => {
            let text = match cli.format {
                Format::Json => serde_json::to_string_pretty(&result).expect("serializable") + "\n",
                Format::Text => result.render_text(),
            };
            // a closed pipe downstream is not an error of ours
            let _ = std::io::stdout().write_all(text.as_bytes());
            ExitCode::from(result.exit)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
