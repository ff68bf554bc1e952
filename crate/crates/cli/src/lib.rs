//! Command-line driver for `ag-core`: reads tables and fuzzy subsets from
//! text files and prints verdicts as text or as one JSON document.
//!
//! Exit codes: 0 when every checked property holds, 1 when one fails (the
//! report carries the counterexample), 2 on input or usage errors.

pub mod format;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use ag_core::corpus;
use ag_core::enumerate::{self, SearchConstraints, SearchOptions};
use ag_core::fuzzy::{self, FuzzySubset};
use ag_core::ideals::{self, IdealKind, Notion};
use ag_core::verify::{self, ConditionReport, Evidence, FuzzyConfig, Mode};
use ag_core::witness;
use ag_core::{ElementSubset, Groupoid, KParam};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

pub use format::{parse_fuzzy, parse_table, serialize_fuzzy, serialize_table, ParseError};

#[derive(Debug, Parser)]
#[command(
    name = "agcheck",
    version,
    about = "Checks finite AG-groupoids and their (fuzzy) ideals"
)]
struct Cli {
    /// Emit a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the AG identities, left identities and intra-regularity.
    Check { table: PathBuf },
    /// List the ideals of one kind, or test one subset.
    Ideals {
        table: PathBuf,
        #[arg(long)]
        kind: String,
        #[arg(long)]
        semiprime_only: bool,
        /// Comma- or space-separated labels; test only this subset.
        #[arg(long)]
        subset: Option<String>,
    },
    /// Intra-regularity witnesses `a = (x·a²)·y`.
    Witness {
        table: PathBuf,
        #[arg(long)]
        element: Option<String>,
        /// Also find witnesses for the eight derived identities.
        #[arg(long)]
        lemma34: bool,
    },
    /// Decide whether a fuzzy subset is a fuzzy ideal of a kind.
    Fuzzy {
        table: PathBuf,
        fuzzy: PathBuf,
        #[arg(long, value_parser = parse_k)]
        k: KParam,
        #[arg(long)]
        kind: String,
        #[arg(long)]
        levels: bool,
        #[arg(long)]
        pointwise: bool,
    },
    /// Check statements on one groupoid.
    Verify {
        table: PathBuf,
        /// Comma-separated ids, `all`, or `crisp`.
        #[arg(long)]
        statements: String,
        #[command(flatten)]
        fuzzy: FuzzyArgs,
    },
    /// Check statements on every small AG-groupoid up to isomorphism.
    Corpus {
        #[arg(long)]
        order_max: usize,
        #[arg(long)]
        statements: String,
        #[command(flatten)]
        fuzzy: FuzzyArgs,
    },
    /// Enumerate AG-groupoids of one order.
    Enum {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        unitary: bool,
        #[arg(long)]
        intra_regular: bool,
        #[arg(long)]
        up_to_iso: bool,
        #[arg(long)]
        count_only: bool,
        /// Checkpoint file; created if missing, resumed otherwise.
        #[arg(long)]
        resume: Option<PathBuf>,
        #[arg(long)]
        allow_order6: bool,
    },
    /// Turn an abelian group table into the AG-groupoid `x·y = x⁻¹y`.
    Group2ag { table: PathBuf },
}

#[derive(Debug, Args)]
struct FuzzyArgs {
    #[arg(long, default_value_t = 200)]
    fuzzy_samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "0,1/2")]
    k_values: String,
    /// Grades are drawn from {0, 1/D, .., 1}.
    #[arg(long, default_value_t = 8)]
    grid: i64,
}

fn parse_k(s: &str) -> Result<KParam, String> {
    s.parse().map_err(|e: ag_core::Error| e.to_string())
}

impl FuzzyArgs {
    fn config(&self) -> Result<FuzzyConfig, CliError> {
        let k_values = self
            .k_values
            .split(',')
            .map(|s| parse_k(s).map_err(CliError::Usage))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FuzzyConfig {
            samples: self.fuzzy_samples,
            seed: self.seed,
            k_values,
            grid_denominator: self.grid,
        })
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io(PathBuf, std::io::Error),
    Parse(PathBuf, ParseError),
    Core(ag_core::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Parse(p, e) => {
                write!(f, "{}:{}:{}: {}", p.display(), e.line, e.column, e.message)
            }
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<ag_core::Error> for CliError {
    fn from(e: ag_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn to_json(&self) -> Value {
        match self {
            CliError::Parse(p, e) => json!({
                "message": e.message,
                "path": p.display().to_string(),
                "line": e.line,
                "column": e.column,
            }),
            other => json!({ "message": other.to_string() }),
        }
    }
}

/// What a command printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    ok: bool,
    text: String,
    json: Value,
}

/// Runs one command line (including the program name) without touching the
/// process's stdout or exit status.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let name = command_name(&cli.command);
    match execute(&cli.command) {
        Ok(report) => {
            let code = if report.ok { 0 } else { 1 };
            let stdout = if cli.json {
                let mut doc = report.json;
                doc["command"] = json!(name);
                doc["status"] = json!(if report.ok { "ok" } else { "property-failed" });
                serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
            } else {
                report.text
            };
            Outcome {
                code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => {
            if cli.json {
                let doc = json!({ "command": name, "status": "error", "error": e.to_json() });
                Outcome {
                    code: 2,
                    stdout: serde_json::to_string_pretty(&doc).expect("serializable") + "\n",
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: format!("error: {e}\n"),
                }
            }
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Check { .. } => "check",
        Command::Ideals { .. } => "ideals",
        Command::Witness { .. } => "witness",
        Command::Fuzzy { .. } => "fuzzy",
        Command::Verify { .. } => "verify",
        Command::Corpus { .. } => "corpus",
        Command::Enum { .. } => "enum",
        Command::Group2ag { .. } => "group2ag",
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn load_table(path: &Path) -> Result<Groupoid, CliError> {
    parse_table(&read(path)?).map_err(|e| CliError::Parse(path.to_path_buf(), e))
}

fn execute(c: &Command) -> Result<Report, CliError> {
    match c {
        Command::Check { table } => check(&load_table(table)?),
        Command::Ideals {
            table,
            kind,
            semiprime_only,
            subset,
        } => ideals_cmd(
            &load_table(table)?,
            kind,
            *semiprime_only,
            subset.as_deref(),
        ),
        Command::Witness {
            table,
            element,
            lemma34,
        } => witness_cmd(&load_table(table)?, element.as_deref(), *lemma34),
        Command::Fuzzy {
            table,
            fuzzy,
            k,
            kind,
            levels,
            pointwise,
        } => {
            let g = load_table(table)?;
            let f =
                parse_fuzzy(&read(fuzzy)?, &g).map_err(|e| CliError::Parse(fuzzy.clone(), e))?;
            fuzzy_cmd(&g, &f, *k, kind, *levels, *pointwise)
        }
        Command::Verify {
            table,
            statements,
            fuzzy,
        } => verify_cmd(&load_table(table)?, statements, &fuzzy.config()?),
        Command::Corpus {
            order_max,
            statements,
            fuzzy,
        } => corpus_cmd(*order_max, statements, &fuzzy.config()?),
        Command::Enum {
            order,
            unitary,
            intra_regular,
            up_to_iso,
            count_only,
            resume,
            allow_order6,
        } => {
            let c = SearchConstraints {
                order: *order,
                require_unitary: *unitary,
                require_intra_regular: *intra_regular,
                up_to_isomorphism: *up_to_iso,
            };
            let opts = SearchOptions {
                allow_order6: *allow_order6,
                checkpoint: resume.clone(),
            };
            enum_cmd(c, &opts, *count_only)
        }
        Command::Group2ag { table } => group2ag(&load_table(table)?),
    }
}

fn labels_of(g: &Groupoid, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| g.label(x).to_string()).collect()
}

fn set_labels(g: &Groupoid, s: &ElementSubset) -> Vec<String> {
    s.iter().map(|x| g.label(x).to_string()).collect()
}

fn set_text(g: &Groupoid, s: &ElementSubset) -> String {
    format!("{{{}}}", set_labels(g, s).join(", "))
}

fn table_json(g: &Groupoid) -> Value {
    json!(g.rows().iter().map(|r| labels_of(g, r)).collect::<Vec<_>>())
}

fn parse_element(g: &Groupoid, label: &str) -> Result<usize, CliError> {
    g.index_of(label)
        .ok_or_else(|| CliError::Usage(format!("unknown element label {label:?}")))
}

fn law_arity(name: &str) -> u32 {
    match name {
        "commutative" => 2,
        "surjective" => 1,
        "left_invertive" | "law4" | "associative" => 3,
        _ => 4,
    }
}

fn check(g: &Groupoid) -> Result<Report, CliError> {
    let laws = g.check_identity_laws();
    let units = g.left_identities();
    let unitary = !units.is_empty();
    let ir = witness::is_intra_regular(g);
    let n = g.order();
    let mut text = String::new();
    let _ = writeln!(text, "order: {n}");
    let _ = writeln!(text, "labels: {}", g.labels().join(" "));
    let mut law_json = serde_json::Map::new();
    for (name, check) in laws.entries() {
        let tuples = (n as u64).pow(law_arity(name));
        let ce = check.counterexample.as_ref().map(|v| labels_of(g, v));
        let verdict = match &ce {
            None => "holds".to_string(),
            Some(v) => format!("fails at ({})", v.join(", ")),
        };
        let unit = ["", "element", "pair", "triple", "quadruple"][law_arity(name) as usize];
        let _ = writeln!(text, "{name}: {verdict} ({tuples} {unit}s checked)");
        law_json.insert(
            name.to_string(),
            json!({ "holds": check.holds, "counterexample": ce, "tuples_checked": tuples }),
        );
    }
    let _ = writeln!(
        text,
        "left identities: {}",
        if unitary {
            set_text(g, &units)
        } else {
            "none".to_string()
        }
    );
    match ir.failing_element {
        None => {
            let _ = writeln!(text, "intra-regular: yes");
        }
        Some(a) => {
            let _ = writeln!(text, "intra-regular: no ({} has no witness)", g.label(a));
        }
    }
    let implied_ok = laws.medial.holds
        && (!unitary || (laws.paramedial.holds && laws.law4.holds && laws.law5.holds));
    let ok = laws.left_invertive.holds && implied_ok;
    Ok(Report {
        ok,
        text,
        json: json!({
            "order": n,
            "labels": g.labels(),
            "laws": law_json,
            "left_identities": set_labels(g, &units),
            "unitary": unitary,
            "intra_regular": {
                "holds": ir.holds,
                "failing_element": ir.failing_element.map(|a| g.label(a)),
            },
        }),
    })
}

fn parse_notion(kind: &str) -> Result<Notion, CliError> {
    kind.parse::<Notion>()
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn parse_subset(g: &Groupoid, text: &str) -> Result<ElementSubset, CliError> {
    let mut s = ElementSubset::empty(g.order());
    for tok in text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
    {
        s.insert(parse_element(g, tok)?);
    }
    if s.is_empty() {
        return Err(CliError::Usage(
            "--subset must name at least one element".into(),
        ));
    }
    Ok(s)
}

fn ideals_cmd(
    g: &Groupoid,
    kind: &str,
    semiprime_only: bool,
    subset: Option<&str>,
) -> Result<Report, CliError> {
    let notion = parse_notion(kind)?;
    if let Some(text) = subset {
        let a = parse_subset(g, text)?;
        let mut verdict = ideals::check_notion(g, &a, notion)?;
        let semiprime = ideals::semiprime_violation(g, &a);
        if semiprime_only && verdict.holds {
            verdict.holds = semiprime.is_none();
            verdict.counterexample = semiprime.clone();
        }
        let mut out = format!("{} is ", set_text(g, &a));
        let ce = verdict.counterexample.as_ref().map(|v| {
            json!({
                "condition": v.condition,
                "operands": labels_of(g, &v.operands),
                "product": g.label(v.product),
            })
        });
        match &verdict.counterexample {
            None => {
                let _ = writeln!(out, "a {notion} subset");
            }
            Some(v) => {
                let _ = writeln!(
                    out,
                    "not a {notion} subset: {} fails for ({}) with product {}",
                    v.condition,
                    labels_of(g, &v.operands).join(", "),
                    g.label(v.product)
                );
            }
        }
        return Ok(Report {
            ok: verdict.holds,
            text: out,
            json: json!({
                "kind": notion,
                "subset": set_labels(g, &a),
                "holds": verdict.holds,
                "semiprime": semiprime.is_none(),
                "counterexample": ce,
            }),
        });
    }
    let mut members = ideals::enumerate_notion(g, notion)?;
    if semiprime_only {
        members.retain(|a| ideals::semiprime_violation(g, a).is_none());
    }
    let mut text = format!(
        "{} {notion} subset(s){}\n",
        members.len(),
        if semiprime_only {
            ", semiprime only"
        } else {
            ""
        }
    );
    for a in &members {
        let _ = writeln!(text, "  {}", set_text(g, a));
    }
    Ok(Report {
        ok: true,
        text,
        json: json!({
            "kind": notion,
            "semiprime_only": semiprime_only,
            "count": members.len(),
            "members": members.iter().map(|a| set_labels(g, a)).collect::<Vec<_>>(),
        }),
    })
}

fn witness_cmd(g: &Groupoid, element: Option<&str>, lemma34: bool) -> Result<Report, CliError> {
    let elements: Vec<usize> = match element {
        Some(l) => vec![parse_element(g, l)?],
        None => (0..g.order()).collect(),
    };
    let mut ok = true;
    let mut text = String::new();
    let mut rows = Vec::new();
    for &a in &elements {
        let w = witness::intra_regular_witness(g, a)?;
        let la = g.label(a);
        match w {
            Some((x, y)) => {
                let _ = writeln!(text, "{la} = ({}·{la}²)·{}", g.label(x), g.label(y));
            }
            None => {
                ok = false;
                let _ = writeln!(text, "{la}: no x, y with {la} = (x·{la}²)·y");
            }
        }
        let mut row = json!({
            "element": la,
            "witness": w.map(|(x, y)| json!({ "x": g.label(x), "y": g.label(y) })),
        });
        if lemma34 {
            match witness::lemma34_witnesses(g, a) {
                Ok(l) => {
                    let missing = l.missing();
                    if !missing.is_empty() {
                        ok = false;
                        let _ =
                            writeln!(text, "  identities without witness: {}", missing.join(", "));
                    } else {
                        let _ = writeln!(text, "  all eight identities have witnesses");
                    }
                    row["identities"] = lemma34_json(g, &l);
                }
                Err(e @ (ag_core::Error::NotUnitary | ag_core::Error::NotIntraRegular(_))) => {
                    ok = false;
                    let _ = writeln!(text, "  identities not checked: {e}");
                    row["identities_error"] = json!(e.to_string());
                }
                Err(e) => return Err(e.into()),
            }
        }
        rows.push(row);
    }
    Ok(Report {
        ok,
        text,
        json: json!({ "labels": g.labels(), "elements": rows }),
    })
}

fn lemma34_json(g: &Groupoid, l: &witness::Lemma34Witnesses) -> Value {
    let one = |w: Option<usize>| w.map(|z| g.label(z).to_string());
    let two = |w: Option<(usize, usize)>| w.map(|(x, y)| [g.label(x), g.label(y)]);
    json!({
        "i": one(l.clause1),
        "ii": one(l.clause2),
        "iii": two(l.clause3),
        "iv": two(l.clause4),
        "v": two(l.clause5),
        "vi": two(l.clause6),
        "vii": one(l.clause7),
        "viii": one(l.clause8),
    })
}

fn fuzzy_text(g: &Groupoid, f: &FuzzySubset) -> String {
    (0..g.order())
        .map(|x| format!("{}:{}", g.label(x), f.get(x)))
        .collect::<Vec<_>>()
        .join(" ")
}

fn fuzzy_cmd(
    g: &Groupoid,
    f: &FuzzySubset,
    k: KParam,
    kind: &str,
    levels: bool,
    pointwise: bool,
) -> Result<Report, CliError> {
    let notion = parse_notion(kind)?;
    let functional = fuzzy::is_fuzzy_ideal(g, f, k, notion)?;
    let mut ok = functional.holds;
    let mut text = format!("k = {k}, threshold (1-k)/2 = {}\n", k.half_grade());
    let ce = functional
        .counterexample
        .as_ref()
        .map(|v| json!({ "condition": v.condition, "operands": labels_of(g, &v.operands) }));
    match &functional.counterexample {
        None => {
            let _ = writeln!(text, "fuzzy {notion}: holds");
        }
        Some(v) => {
            let _ = writeln!(
                text,
                "fuzzy {notion}: fails ({} at {})",
                v.condition,
                labels_of(g, &v.operands).join(", ")
            );
        }
    }
    let mut doc = json!({
        "k": k,
        "kind": notion,
        "grades": f,
        "labels": g.labels(),
        "functional": { "holds": functional.holds, "counterexample": ce },
    });
    if pointwise {
        let pw = match notion {
            Notion::Kind(kind) if kind != IdealKind::Quasi => {
                Some(fuzzy::is_fuzzy_ideal_pointwise(g, f, k, kind)?)
            }
            _ => None,
        };
        match pw {
            Some(b) => {
                ok &= b;
                let _ = writeln!(
                    text,
                    "pointwise form: {}",
                    if b { "holds" } else { "fails" }
                );
                doc["pointwise"] = json!({ "holds": b });
            }
            None => {
                let _ = writeln!(text, "pointwise form: not defined for {notion}");
                doc["pointwise"] = Value::Null;
            }
        }
    }
    if levels {
        let r = fuzzy::level_characterization_check(g, f, k, notion)?;
        ok &= r.levels_ok && r.agree;
        let _ = writeln!(
            text,
            "levels: {} (agrees with the predicate: {})",
            if r.levels_ok {
                "all crisp"
            } else {
                "some level fails"
            },
            r.agree
        );
        for l in &r.levels {
            let _ = writeln!(
                text,
                "  U(f, {}) = {}: {}",
                l.threshold,
                set_text(g, &l.level),
                if l.passes { "ok" } else { "fails" }
            );
        }
        doc["levels"] = json!({
            "levels_ok": r.levels_ok,
            "predicate_ok": r.predicate_ok,
            "agree": r.agree,
            "levels": r.levels.iter().map(|l| json!({
                "threshold": l.threshold,
                "level": set_labels(g, &l.level),
                "passes": l.passes,
            })).collect::<Vec<_>>(),
        });
    }
    Ok(Report {
        ok,
        text,
        json: doc,
    })
}

fn statement_ids(list: &str) -> Result<Vec<&'static str>, CliError> {
    let mut out = Vec::new();
    for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match item.to_ascii_lowercase().as_str() {
            "all" => out.extend(verify::all_statement_ids()),
            "crisp" => out.extend(verify::CRISP_EQUIVALENCES),
            _ => out.push(verify::statement(item)?.id),
        }
    }
    if out.is_empty() {
        return Err(CliError::Usage("--statements is empty".into()));
    }
    let mut seen = std::collections::BTreeSet::new();
    out.retain(|id| seen.insert(*id));
    Ok(out)
}

fn evidence_text(g: &Groupoid, e: &Evidence) -> String {
    match e {
        Evidence::Element { element } => format!("element {}", g.label(*element)),
        Evidence::Subsets { subsets, element } => {
            let names = ["A", "B", "C"];
            let mut s = subsets
                .iter()
                .zip(names)
                .map(|(a, n)| format!("{n} = {}", set_text(g, a)))
                .collect::<Vec<_>>()
                .join(", ");
            if let Some(x) = element {
                let _ = write!(s, "; element {}", g.label(*x));
            }
            s
        }
        Evidence::Fuzzy {
            k,
            sample,
            maps,
            element,
        } => {
            let maps = maps
                .iter()
                .map(|m| format!("[{}]", fuzzy_text(g, m)))
                .collect::<Vec<_>>()
                .join(" ");
            format!(
                "k = {k}, sample {sample}, element {}: {maps}",
                g.label(*element)
            )
        }
        Evidence::Witnesses { per_element } => per_element
            .iter()
            .enumerate()
            .map(|(a, w)| {
                let v = lemma34_json(g, w);
                format!("{}: {}", g.label(a), v)
            })
            .collect::<Vec<_>>()
            .join("; "),
    }
}

fn report_text(g: Option<&Groupoid>, r: &ConditionReport, out: &mut String) {
    let shape = match r.shape {
        verify::Shape::Equivalence => "equivalence",
        verify::Shape::Assertion => "assertion",
    };
    if !r.applicable {
        let _ = writeln!(
            out,
            "{} ({shape}): not applicable, {}",
            r.statement_id,
            r.reason.as_deref().unwrap_or("")
        );
        return;
    }
    let _ = writeln!(
        out,
        "{} ({shape}): {}",
        r.statement_id,
        if r.confirmed { "confirmed" } else { "VIOLATED" }
    );
    for c in &r.conditions {
        let mode = match c.mode {
            Mode::Decisive => "decisive",
            Mode::Sampled => "sampled",
            Mode::Informational => "info",
        };
        let verdict = match c.verdict {
            verify::Verdict::Holds => "holds".to_string(),
            verify::Verdict::Fails => "fails".to_string(),
            verify::Verdict::HoldsOnSample => format!(
                "holds on {} samples (seed {})",
                c.sample_size.unwrap_or(0),
                c.seed.unwrap_or(0)
            ),
            verify::Verdict::NotApplicable => "not applicable".to_string(),
        };
        let _ = writeln!(out, "  [{mode}] {}: {verdict}", c.label);
        if let (Some(g), Some(e)) = (g, &c.counterexample) {
            let _ = writeln!(out, "    counterexample: {}", evidence_text(g, e));
        }
    }
    let _ = writeln!(out, "  agreement: {}", r.agreement);
}

fn verify_cmd(g: &Groupoid, statements: &str, cfg: &FuzzyConfig) -> Result<Report, CliError> {
    let ids = statement_ids(statements)?;
    let reports = ids
        .iter()
        .map(|id| verify::check_statement(g, id, cfg))
        .collect::<Result<Vec<_>, _>>()?;
    let ok = reports.iter().all(|r| r.confirmed);
    let mut text = String::new();
    for r in &reports {
        report_text(Some(g), r, &mut text);
    }
    Ok(Report {
        ok,
        text,
        json: json!({
            "labels": g.labels(),
            "fuzzy_config": cfg,
            "reports": reports,
        }),
    })
}

fn corpus_cmd(order_max: usize, statements: &str, cfg: &FuzzyConfig) -> Result<Report, CliError> {
    let ids = statement_ids(statements)?;
    let s = corpus::corpus_verify(order_max, &ids, cfg)?;
    let mut text = format!(
        "order <= {order_max}: {} groupoids ({} unitary, {} without left identity)\n\
         statements: {}\nagreements: {}\nnot applicable: {}\nviolations: {}\n",
        s.groupoids_checked,
        s.unitary_checked,
        s.non_unitary_checked,
        s.statements.join(", "),
        s.agreements,
        s.not_applicable,
        s.violations.len()
    );
    for v in &s.violations {
        text.push('\n');
        text.push_str(&serialize_table(&v.groupoid));
        report_text(Some(&v.groupoid), &v.report, &mut text);
    }
    Ok(Report {
        ok: s.violations.is_empty(),
        text,
        json: json!({ "fuzzy_config": cfg, "summary": s }),
    })
}

fn enum_cmd(
    c: SearchConstraints,
    opts: &SearchOptions,
    count_only: bool,
) -> Result<Report, CliError> {
    let mut doc = json!({ "constraints": {
        "order": c.order,
        "unitary": c.require_unitary,
        "intra_regular": c.require_intra_regular,
        "up_to_isomorphism": c.up_to_isomorphism,
    }});
    let mut text;
    if count_only {
        let n = enumerate::count_ag(c, opts)?;
        text = format!("count: {n}\n");
        doc["count"] = json!(n);
    } else {
        let tables = enumerate::enumerate_ag_with(c, opts)?;
        text = format!("count: {}\n", tables.len());
        for g in &tables {
            text.push('\n');
            text.push_str(&serialize_table(g));
        }
        doc["count"] = json!(tables.len());
        doc["tables"] = json!(tables.iter().map(table_json).collect::<Vec<_>>());
    }
    Ok(Report {
        ok: true,
        text,
        json: doc,
    })
}

fn group2ag(group: &Groupoid) -> Result<Report, CliError> {
    let g = Groupoid::from_abelian_group(group)?;
    Ok(Report {
        ok: true,
        text: serialize_table(&g),
        json: json!({ "labels": g.labels(), "table": table_json(&g) }),
    })
}
