//! Command-line front end: parse a group spec, run one named check or suite
//! under a budget, and print a JSON or text report.
//!
//! Exit codes: 0 holds or completed, 1 fails, 2 unknown, 3 error.

use std::fmt::Write as _;
use std::io::Write as _;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bergman::commuting_conjugates_exhaustive;
use crate::coarse::{
    cellularity_criterion, component, indicator_group, is_bounded, is_direct_union, is_discrete, is_n_discrete,
    partition_n_discrete, Budget, EntourageSpec, Status, Verdict,
};
use crate::conj::{
    central_power_check, characterization_suite, fc_check, fg_conjugacy_class, locally_finite_quotient_check,
    Characterization,
};
use crate::error::{Error, Result};
use crate::group::{generate_finite, Element, GroupRef};
use crate::subgroups::{all_subgroups, classify, cyclic_subgroup_seeds, stabilizer_map_check, subgroup_space_discrete};
use crate::suite::{run_suite, SUITES};
use crate::zoo::{make_group, GroupSpec, ZooGroup};

/// Names accepted by `--check`, besides the suite names.
pub const CHECKS: [&str; 21] = [
    "is_discrete",
    "is_n_discrete",
    "is_bounded",
    "component",
    "is_direct_union",
    "cellularity_criterion",
    "fg_conjugacy_class",
    "fc_check",
    "locally_finite_quotient_check",
    "central_power_check",
    "partition_n_discrete",
    "discreteness",
    "bounded_classes",
    "cellularity",
    "all_subgroups",
    "classify",
    "subgroup_space_discrete",
    "stabilizer_map_check",
    "embedding_check",
    "commuting_conjugates",
    "suite",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Parser)]
#[command(name = "conjcoarse", version, about = "Budgeted checks on conjugation coarse spaces of groups")]
pub struct Args {
    /// Group spec: a JSON file path or inline JSON such as '{"family":"zk","params":{"k":2}}'.
    #[arg(long)]
    pub spec: Option<String>,
    /// Check or suite name.
    #[arg(long)]
    pub check: String,
    /// Suite to run when `--check suite`.
    #[arg(long)]
    pub suite: Option<String>,
    #[arg(long, default_value_t = 8)]
    pub radius: usize,
    #[arg(long, default_value_t = 50)]
    pub rounds: usize,
    #[arg(long, default_value_t = 20)]
    pub skip: usize,
    #[arg(long, default_value_t = 10)]
    pub witnesses: usize,
    #[arg(long, default_value_t = 65536)]
    pub cap: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Conjugator set F, comma separated (default: e and the generators).
    #[arg(long)]
    pub conjugators: Option<String>,
    /// Generators of a subgroup H, comma separated (default: the first generator).
    #[arg(long)]
    pub subgroup: Option<String>,
    /// A single element argument.
    #[arg(long)]
    pub element: Option<String>,
    /// Integer parameter (n-discreteness, number of parts, largest power).
    #[arg(long)]
    pub n: Option<usize>,
    /// Record wall time in `elapsed_ms` (otherwise 0, keeping reports byte-stable).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub spec: Option<GroupSpec>,
    pub check: String,
    pub budget: Budget,
    pub seed: u64,
    pub format: Format,
    pub conjugators: Option<String>,
    pub subgroup: Option<String>,
    pub element: Option<String>,
    pub n: Option<usize>,
    pub timing: bool,
}

impl RunConfig {
    pub fn new(spec: Option<GroupSpec>, check: &str) -> Self {
        RunConfig {
            spec,
            check: check.to_string(),
            budget: Budget::default(),
            seed: 0,
            format: Format::Json,
            conjugators: None,
            subgroup: None,
            element: None,
            n: None,
            timing: false,
        }
    }

    pub fn from_args(args: &Args) -> Result<Self> {
        let spec = args.spec.as_deref().map(parse_spec).transpose()?;
        let check = match (args.check.as_str(), &args.suite) {
            ("suite", Some(s)) => s.clone(),
            ("suite", None) => return Err(Error::UnknownCheck("suite without --suite".into())),
            (c, _) => c.to_string(),
        };
        Ok(RunConfig {
            spec,
            check,
            budget: Budget {
                radius: args.radius,
                rounds: args.rounds,
                skip: args.skip,
                witnesses: args.witnesses,
                cap: args.cap,
            },
            seed: args.seed,
            format: args.format,
            conjugators: args.conjugators.clone(),
            subgroup: args.subgroup.clone(),
            element: args.element.clone(),
            n: args.n,
            timing: args.timing,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub check: String,
    pub group: Option<GroupSpec>,
    pub status: String,
    pub witnesses: Vec<String>,
    pub certificate: Value,
    pub budget: Budget,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        match self.status.as_str() {
            "holds" | "completed" => 0,
            "fails" => 1,
            "unknown" => 2,
            _ => 3,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let group = self.group.as_ref().map_or("-".to_string(), |g| serde_json::to_string(g).unwrap_or_default());
        let _ = writeln!(s, "check:      {}", self.check);
        let _ = writeln!(s, "group:      {group}");
        let _ = writeln!(s, "status:     {}", self.status);
        let _ = writeln!(
            s,
            "budget:     radius {} rounds {} skip {} witnesses {} cap {}",
            self.budget.radius, self.budget.rounds, self.budget.skip, self.budget.witnesses, self.budget.cap
        );
        if !self.witnesses.is_empty() {
            let _ = writeln!(s, "witnesses:  {}", self.witnesses.join("  "));
        }
        if !self.certificate.is_null() {
            let pretty = serde_json::to_string_pretty(&self.certificate).unwrap_or_default();
            let _ = writeln!(s, "certificate:\n{pretty}");
        }
        if self.elapsed_ms > 0 {
            let _ = writeln!(s, "elapsed:    {} ms", self.elapsed_ms);
        }
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Text => self.to_text(),
        }
    }
}

/// Inline JSON when the argument starts with `{`, a file path otherwise.
pub fn parse_spec(arg: &str) -> Result<GroupSpec> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| Error::BadSpec(format!("{arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| Error::BadSpec(e.to_string()))
}

/// Parses one element: `e`, `g<i>` (the i-th generator), `g<i>^<k>`, a JSON
/// integer array in the group's encoding, or a `*`-separated product of these.
pub fn parse_element(ctx: &GroupRef, s: &str) -> Result<Element> {
    let s = s.trim();
    if s.starts_with('[') {
        let code: Vec<i64> = serde_json::from_str(s).map_err(|e| Error::BadElement(format!("{s}: {e}")))?;
        let x = Element(code);
        return if ctx.contains(&x) { Ok(x) } else { Err(Error::BadElement(s.to_string())) };
    }
    let gens = ctx.generators();
    s.split('*').try_fold(ctx.identity(), |acc, factor| {
        let factor = factor.trim();
        if factor == "e" {
            return Ok(acc);
        }
        let (base, exp) = factor.split_once('^').unwrap_or((factor, "1"));
        let i: usize = base
            .strip_prefix('g')
            .and_then(|d| d.parse().ok())
            .ok_or_else(|| Error::BadElement(factor.to_string()))?;
        let k: i64 = exp.parse().map_err(|_| Error::BadElement(factor.to_string()))?;
        let g = gens.get(i).ok_or_else(|| Error::BadElement(format!("{factor}: only {} generators", gens.len())))?;
        Ok(ctx.compose(&acc, &ctx.pow(g, k)))
    })
}

/// Comma-separated list; JSON arrays may contain commas, so brackets are tracked.
pub fn parse_elements(ctx: &GroupRef, s: &str) -> Result<Vec<Element>> {
    let mut parts = Vec::new();
    let mut depth = 0;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    parts.push(cur);
    parts.iter().filter(|p| !p.trim().is_empty()).map(|p| parse_element(ctx, p)).collect()
}

fn status_str(s: Status) -> String {
    match s {
        Status::Holds => "holds",
        Status::Fails => "fails",
        Status::Unknown => "unknown",
    }
    .to_string()
}

struct Outcome {
    status: String,
    witnesses: Vec<String>,
    certificate: Value,
}

impl Outcome {
    fn verdict(v: Verdict, ctx: &GroupRef) -> Self {
        Outcome {
            status: status_str(v.status),
            witnesses: v.witnesses.iter().map(|w| ctx.format(w)).collect(),
            certificate: v.certificate.unwrap_or(Value::Null),
        }
    }

    fn completed(certificate: Value) -> Self {
        Outcome { status: "completed".into(), witnesses: vec![], certificate }
    }

    fn status(s: Status, certificate: Value) -> Self {
        Outcome { status: status_str(s), witnesses: vec![], certificate }
    }
}

/// Runs the configured check. Errors become a report with status `error`.
pub fn run(config: &RunConfig) -> Report {
    let start = Instant::now();
    let outcome = dispatch(config).unwrap_or_else(|e| Outcome {
        status: "error".into(),
        witnesses: vec![],
        certificate: json!({ "error": e.to_string() }),
    });
    Report {
        check: config.check.clone(),
        group: config.spec.clone(),
        status: outcome.status,
        witnesses: outcome.witnesses,
        certificate: outcome.certificate,
        budget: config.budget,
        elapsed_ms: if config.timing { start.elapsed().as_millis() as u64 } else { 0 },
    }
}

fn dispatch(config: &RunConfig) -> Result<Outcome> {
    let check = config.check.as_str();
    let budget = &config.budget;
    if check == "all" || SUITES.contains(&check) {
        let r = run_suite(check, config.seed, budget)?;
        let status = if r.passed { Status::Holds } else { Status::Fails };
        return Ok(Outcome::status(status, serde_json::to_value(&r).unwrap_or(Value::Null)));
    }
    if !CHECKS.contains(&check) {
        return Err(Error::UnknownCheck(check.to_string()));
    }
    let spec = config.spec.as_ref().ok_or_else(|| Error::BadSpec(format!("`{check}` needs --spec")))?;
    let zoo = make_group(spec)?;
    let ctx = zoo.ctx.clone();
    let g = ctx.as_ref();

    let conjugators = || -> Result<EntourageSpec> {
        let f = match &config.conjugators {
            Some(s) => parse_elements(&ctx, s)?,
            None => ctx.generating_set(),
        };
        Ok(EntourageSpec::new(g, f))
    };
    let subgroup = || -> Result<Vec<Element>> {
        match &config.subgroup {
            Some(s) => parse_elements(&ctx, s),
            None => Ok(ctx.generators().into_iter().take(1).collect()),
        }
    };
    let element = || -> Result<Element> {
        let s = config.element.as_deref().ok_or_else(|| Error::BadParameters(format!("`{check}` needs --element")))?;
        parse_element(&ctx, s)
    };
    let n = |default: usize| config.n.unwrap_or(default);
    let sample = || ctx.enumerate_capped(budget.radius, budget.cap);

    Ok(match check {
        "is_discrete" => Outcome::verdict(is_discrete(g, &conjugators()?, budget), &ctx),
        "is_n_discrete" => Outcome::verdict(is_n_discrete(g, &conjugators()?, n(1), budget), &ctx),
        "is_bounded" => {
            let a = match &config.subgroup {
                Some(s) => parse_elements(&ctx, s)?,
                None => vec![element()?],
            };
            Outcome::verdict(is_bounded(g, &a, budget), &ctx)
        }
        "component" => Outcome::verdict(component(g, &element()?, budget), &ctx),
        "is_direct_union" => Outcome::verdict(is_direct_union(g, &conjugators()?, &sample(), budget), &ctx),
        "cellularity_criterion" => Outcome::verdict(cellularity_criterion(g, &subgroup()?, budget)?, &ctx),
        "fg_conjugacy_class" => {
            let (v, trace) = fg_conjugacy_class(g, &element()?, budget);
            let rounds: Vec<Vec<String>> =
                trace.rounds.iter().map(|r| r.iter().map(|x| g.format(x)).collect()).collect();
            let mut out = Outcome::verdict(v, &ctx);
            out.certificate = json!({ "summary": out.certificate, "rounds": rounds, "terminated": trace.terminated });
            out
        }
        "fc_check" => Outcome::verdict(fc_check(g, &sample(), budget), &ctx),
        "locally_finite_quotient_check" => {
            let gens = match &config.subgroup {
                Some(s) => parse_elements(&ctx, s)?,
                None => ctx.generators(),
            };
            Outcome::verdict(locally_finite_quotient_check(g, &gens, budget)?, &ctx)
        }
        "central_power_check" => Outcome::verdict(central_power_check(g, &element()?, n(budget.rounds))?, &ctx),
        "partition_n_discrete" => {
            let p = partition_n_discrete(g, &sample(), &conjugators()?, n(2))?;
            let fmt = |v: &[Element]| v.iter().map(|x| g.format(x)).collect::<Vec<_>>();
            Outcome::completed(json!({
                "parts": p.parts.iter().map(|q| fmt(q)).collect::<Vec<_>>(),
                "exceptional": fmt(&p.exceptional),
            }))
        }
        "discreteness" | "bounded_classes" | "cellularity" => {
            let which = match check {
                "discreteness" => Characterization::Discreteness,
                "bounded_classes" => Characterization::BoundedClasses,
                _ => Characterization::Cellularity,
            };
            let r = characterization_suite(which, &ctx, budget);
            Outcome::status(r.definitional, serde_json::to_value(&r).unwrap_or(Value::Null))
        }
        "all_subgroups" => {
            let f = generate_finite(&ctx.generators(), &ctx, budget.cap)?;
            let subs = all_subgroups(&f, n(64))?;
            Outcome::completed(json!({
                "count": subs.len(),
                "subgroups": subs.iter().map(|s| s.render(&f)).collect::<Vec<_>>(),
            }))
        }
        "classify" => {
            let f = generate_finite(&ctx.generators(), &ctx, budget.cap)?;
            Outcome::completed(classify(&f, n(64))?)
        }
        "subgroup_space_discrete" => {
            let seeds = cyclic_subgroup_seeds(g, budget);
            Outcome::verdict(subgroup_space_discrete(&ctx, &seeds, &conjugators()?, budget), &ctx)
        }
        "stabilizer_map_check" => {
            let action = natural_action(&zoo)?;
            let r = stabilizer_map_check(&action, budget)?;
            let ok = r.injective && r.equivariant && r.embedding == Status::Holds;
            let status = if ok { Status::Holds } else { Status::Fails };
            Outcome::status(status, serde_json::to_value(&r).unwrap_or(Value::Null))
        }
        "embedding_check" => {
            if spec.family != "theorem7" {
                return Err(Error::BadParameters("embedding_check needs the `theorem7` family".into()));
            }
            let h = indicator_group(natural_action(&zoo)?);
            let identity = h.conjugation_identity_holds(&h.acting().enumerate_capped(budget.radius, budget.cap));
            let mut out = Outcome::verdict(h.embedding_check(budget), &ctx);
            out.certificate = json!({ "identity_holds": identity, "embedding": out.certificate });
            if !identity {
                out.status = status_str(Status::Fails);
            }
            out
        }
        "commuting_conjugates" => {
            if spec.family != "bergman" {
                return Err(Error::BadParameters("commuting_conjugates needs the `bergman` family".into()));
            }
            let level = spec.params.get("level").and_then(Value::as_u64).unwrap_or(0) as u32;
            let r = commuting_conjugates_exhaustive(level)?;
            let status = if r.violations == 0 { Status::Holds } else { Status::Fails };
            Outcome::status(
                status,
                json!({ "level": r.level, "triples": r.triples, "violations": r.violations,
                        "forced_commutations": r.forced_commutations, "max_noncommuting": r.max_noncommuting }),
            )
        }
        other => return Err(Error::UnknownCheck(other.to_string())),
    })
}

fn natural_action(zoo: &ZooGroup) -> Result<crate::group::PermutationAction> {
    zoo.action.clone().ok_or_else(|| Error::BadParameters(format!("family `{}` has no natural action", zoo.spec.family)))
}

/// Parses `argv`, runs, prints, and returns the exit code.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match RunConfig::from_args(&args) {
        Ok(config) => {
            let report = run(&config);
            let _ = writeln!(std::io::stdout(), "{}", report.render(config.format));
            if report.status == "error" {
                eprintln!("error: {}", report.certificate["error"].as_str().unwrap_or("unknown"));
            }
            report.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            3
        }
    }
}
