//! The `twgc` command line: load a crossed system from a file or the
//! catalog, run one analysis, and print a JSON (or plain-text) report.
//!
//! Exit status: 0 on success, 1 when a report contains an instance that
//! violates one of the structure theorems, 2 on input or validation errors,
//! 3 when a search budget is exhausted.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::abelianize::{equivalence_search, EquivalenceMode, Reducer, DEFAULT_EQUIVALENCE_BUDGET};
use crate::catalog;
use crate::checkable::{code_checkable_scan, DEFAULT_CHECK_BUDGET};
use crate::codes::{
    code_bound, element_bound, extremal_construct, extremal_decompose, search_codes, LinearCode, SearchFilter,
    DEFAULT_DISTANCE_BUDGET,
};
use crate::crossed::{is_coboundary, validate, CrossedSystem, SystemSpec, DEFAULT_COBOUNDARY_BUDGET};
use crate::error::{Error, Result};
use crate::groups::{FiniteGroup, Subgroup};
use crate::hatgroup::HatGroup;
use crate::ring::{IdealHandle, Ring, RingElem, Side, DEFAULT_IDEAL_BUDGET};
use crate::suite::{run_suite, SuiteOptions, DEFAULT_SEED};

#[derive(Parser, Debug)]
#[command(name = "twgc", version, about = "Twisted group codes: crossed systems, ideals, and structure checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Crossed-system JSON file.
    #[arg(long, value_name = "FILE", conflicts_with = "builtin")]
    pub system: Option<PathBuf>,
    /// Catalog system name, e.g. `F2[S3]` (see `twgc catalog --list`).
    #[arg(long, value_name = "NAME")]
    pub builtin: Option<String>,
    /// Worker threads (default: all cores).
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Override every enumeration budget of the command.
    #[arg(long)]
    pub budget: Option<u128>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Recheck every reported witness independently.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Args, Debug, Clone)]
pub struct CodeArgs {
    #[arg(long, value_enum, default_value_t = SideArg::Right)]
    pub side: SideArg,
    /// Generator as comma-separated coefficient codes, one per group element.
    #[arg(long, value_delimiter = ',', conflicts_with = "all_principal")]
    pub generator: Option<Vec<u32>>,
    /// Every principal ideal on the chosen side.
    #[arg(long)]
    pub all_principal: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the crossed-system identities.
    Validate(Common),
    /// Structural summary of the ring and its group.
    RingInfo(Common),
    /// Group axioms, closed forms, ψ and transfer lemmas for the hat group.
    HatReport(Common),
    /// List ideals with their bases and generators.
    Ideals {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = SideArg::Right)]
        side: SideArg,
        /// All ideals (sum closure), not only principal ones.
        #[arg(long)]
        all: bool,
    },
    /// Code parameters `[n, k, d]`.
    Distance {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        code: CodeArgs,
    },
    /// The `d·k ≥ |G|` bound and its corollaries.
    Bound {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        code: CodeArgs,
    },
    /// Scan every right ideal for checkability.
    Checkable(Common),
    /// Reduce ideals of dimension at most 3 to abelian group codes.
    Abelian {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        code: CodeArgs,
    },
    /// Decompose extremal codes, or build one from `--subgroup` and
    /// `--generator`.
    Extremal {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_delimiter = ',', requires = "generator")]
        subgroup: Option<Vec<usize>>,
    },
    /// Rank the principal-ideal codes.
    Search {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
        #[arg(long, default_value_t = 1)]
        min_d: usize,
        /// `n,k,d` to report as found or not.
        #[arg(long, value_delimiter = ',')]
        target: Option<Vec<usize>>,
    },
    /// Run every catalog check.
    Catalog {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Only list the catalog systems.
        #[arg(long)]
        list: bool,
        /// Skip the non-gating F_9 search.
        #[arg(long)]
        no_stretch: bool,
    },
}

/// A finished report and whether it contains a theorem violation.
struct Report {
    value: Value,
    status: i32,
}

impl Report {
    fn ok(value: impl Serialize) -> Result<Self> {
        Ok(Report { value: serde_json::to_value(value)?, status: 0 })
    }
}

/// Parses `args` (including the program name), runs the command, writes
/// the report to `out` and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let (jobs, format) = match &cli.command {
        Command::Catalog { jobs, format, .. } => (*jobs, *format),
        other => {
            let c = common(other);
            (c.jobs, c.format)
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(jobs.unwrap_or(0)).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start worker pool: {e}");
            return 2;
        }
    };
    match pool.install(|| execute(&cli.command)) {
        Ok(report) => {
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&report.value).expect("JSON values serialize"),
                Format::Text => render_text(&report.value),
            };
            let _ = writeln!(out, "{text}");
            report.status
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn common(cmd: &Command) -> &Common {
    match cmd {
        Command::Validate(c) | Command::RingInfo(c) | Command::HatReport(c) | Command::Checkable(c) => c,
        Command::Ideals { common, .. }
        | Command::Distance { common, .. }
        | Command::Bound { common, .. }
        | Command::Abelian { common, .. }
        | Command::Extremal { common, .. }
        | Command::Search { common, .. } => common,
        Command::Catalog { .. } => unreachable!("catalog has no system flags"),
    }
}

fn load_spec(c: &Common) -> Result<SystemSpec> {
    match (&c.system, &c.builtin) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)?;
            Ok(serde_json::from_str(&text)?)
        }
        (None, Some(name)) => Ok(catalog::find(name)?.system.spec()),
        (None, None) => Err(Error::Input("pass --system FILE or --builtin NAME".into())),
    }
}

fn load_ring(c: &Common) -> Result<Ring> {
    let sys = match (&c.system, &c.builtin) {
        (None, Some(name)) => (*catalog::find(name)?.system).clone(),
        _ => {
            let sys = CrossedSystem::from_spec(&load_spec(c)?)?;
            match &c.system {
                Some(path) => {
                    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned());
                    match stem {
                        Some(s) => sys.with_label(s),
                        None => sys,
                    }
                }
                None => sys,
            }
        }
    };
    Ok(Ring::new(sys))
}

/// The ideals a code command runs on, with their generators.
fn code_ideals(ring: &Ring, code: &CodeArgs, budget: u128) -> Result<Vec<(IdealHandle, RingElem)>> {
    let side = Side::from(code.side);
    match (&code.generator, code.all_principal) {
        (Some(codes), _) => {
            let g = ring.elem(codes)?;
            Ok(vec![(ring.principal_ideal(&g, side), g)])
        }
        (None, true) => Ok(ring
            .principal_ideals_with_generators(side, budget)?
            .into_iter()
            .filter(|(i, _)| !i.is_zero())
            .collect()),
        (None, false) => Err(Error::Input("pass --generator CODES or --all-principal".into())),
    }
}

fn execute(cmd: &Command) -> Result<Report> {
    match cmd {
        Command::Validate(c) => cmd_validate(c),
        Command::RingInfo(c) => cmd_ring_info(c),
        Command::HatReport(c) => cmd_hat_report(c),
        Command::Ideals { common, side, all } => cmd_ideals(common, Side::from(*side), *all),
        Command::Distance { common, code } => cmd_distance(common, code),
        Command::Bound { common, code } => cmd_bound(common, code),
        Command::Checkable(c) => cmd_checkable(c),
        Command::Abelian { common, code } => cmd_abelian(common, code),
        Command::Extremal { common, code, subgroup } => cmd_extremal(common, code, subgroup.as_deref()),
        Command::Search { common, side, min_d, target } => cmd_search(common, Side::from(*side), *min_d, target.as_deref()),
        Command::Catalog { seed, list, no_stretch, .. } => cmd_catalog(*seed, *list, *no_stretch),
    }
}

fn cmd_validate(c: &Common) -> Result<Report> {
    let spec = load_spec(c)?;
    let (field, group, sigma, alpha) = spec.parts()?;
    let report = validate(&field, &group, &sigma, &alpha);
    let value = json!({
        "valid": report.is_valid(),
        "violations": report.violations,
        "action_checked_pointwise": report.action_checked_pointwise,
        "action_formulations_agree": report.action_formulations_agree,
    });
    Ok(Report { value, status: if report.is_valid() { 0 } else { 2 } })
}

fn cmd_ring_info(c: &Common) -> Result<Report> {
    let ring = load_ring(c)?;
    let sys = ring.system();
    let g = ring.group();
    let p = ring.field().characteristic() as usize;
    let coboundary = if sys.is_twisted_only() {
        match is_coboundary(sys, c.budget.unwrap_or(DEFAULT_COBOUNDARY_BUDGET)) {
            Ok(l) => json!({ "checked": true, "lambda": l.map(|l| l.iter().map(|a| a.0).collect::<Vec<_>>()) }),
            Err(Error::BudgetExceeded { .. }) => json!({ "checked": false }),
            Err(e) => return Err(e),
        }
    } else {
        json!({ "checked": false })
    };
    Report::ok(json!({
        "label": sys.label(),
        "system": sys.spec(),
        "field_order": ring.field().order(),
        "group": { "label": g.label(), "order": g.order(), "abelian": g.is_abelian() },
        "dim_p": ring.dim_p(),
        "twisted_only": sys.is_twisted_only(),
        "untwisted": sys.is_untwisted(),
        "p_nilpotent": g.is_p_nilpotent(p),
        "sylow_cyclic": g.has_cyclic_sylow(p),
        "coboundary": coboundary,
    }))
}

fn cmd_hat_report(c: &Common) -> Result<Report> {
    let ring = load_ring(c)?;
    let hat = HatGroup::build(ring.system_arc().clone())?;
    let axioms = hat.axiom_report();
    let powers = hat.power_report();
    let psi = hat.psi_report(&ring);
    let transfer = hat.transfer_report();
    let violated = !axioms.holds()
        || powers.closed_form_failures > 0
        || psi.violations > 0
        || !psi.surjective
        || !transfer.lemma1_agrees
        || !transfer.lemma2_agrees;
    Ok(Report {
        value: json!({ "order": hat.order(), "axioms": axioms, "powers": powers, "psi": psi, "transfer": transfer }),
        status: i32::from(violated),
    })
}

fn cmd_ideals(c: &Common, side: Side, all: bool) -> Result<Report> {
    let ring = load_ring(c)?;
    let budget = c.budget.unwrap_or(DEFAULT_IDEAL_BUDGET);
    let rows: Vec<Value> = if all {
        ring.enumerate_all_ideals(side, budget)?.iter().map(|i| json!({ "ideal": ring.record(i) })).collect()
    } else {
        let ideals = ring.principal_ideals_with_generators(side, budget)?;
        if c.verify {
            for (i, g) in &ideals {
                if ring.principal_ideal(g, side).basis != i.basis {
                    return Err(Error::Input(format!("generator {:?} does not reproduce its ideal", g.codes())));
                }
            }
        }
        ideals.iter().map(|(i, g)| json!({ "generator": g, "ideal": ring.record(i) })).collect()
    };
    Report::ok(json!({ "system": ring.system().label(), "side": side, "count": rows.len(), "ideals": rows }))
}

fn cmd_distance(c: &Common, code: &CodeArgs) -> Result<Report> {
    let ring = load_ring(c)?;
    let ideals = code_ideals(&ring, code, c.budget.unwrap_or(DEFAULT_IDEAL_BUDGET))?;
    let budget = c.budget.unwrap_or(DEFAULT_DISTANCE_BUDGET);
    let rows: Vec<Value> = ideals
        .par_iter()
        .map(|(i, g)| {
            let code = LinearCode::with_distance(&ring, i, budget)?;
            let p = code.params();
            Ok(json!({ "generator": g, "params": p, "display": p.to_string() }))
        })
        .collect::<Result<_>>()?;
    Report::ok(json!({ "system": ring.system().label(), "codes": rows }))
}

fn cmd_bound(c: &Common, code: &CodeArgs) -> Result<Report> {
    let ring = load_ring(c)?;
    let ideals = code_ideals(&ring, code, c.budget.unwrap_or(DEFAULT_IDEAL_BUDGET))?;
    let budget = c.budget.unwrap_or(DEFAULT_DISTANCE_BUDGET);
    let rows: Vec<(Value, bool)> = ideals
        .par_iter()
        .map(|(i, g)| {
            let b = code_bound(&LinearCode::from_ideal(&ring, i), budget)?;
            let e = element_bound(&ring, g);
            let ok = b.holds && b.amgm_holds() && e.holds != Some(false);
            Ok((json!({ "generator": g, "code": b, "amgm_holds": b.amgm_holds(), "element": e }), ok))
        })
        .collect::<Result<_>>()?;
    let violations = rows.iter().filter(|r| !r.1).count();
    Ok(Report {
        value: json!({
            "system": ring.system().label(),
            "n": ring.n(),
            "violations": violations,
            "rows": rows.into_iter().map(|r| r.0).collect::<Vec<_>>(),
        }),
        status: i32::from(violations > 0),
    })
}

fn cmd_checkable(c: &Common) -> Result<Report> {
    let ring = load_ring(c)?;
    let report = code_checkable_scan(&ring, c.budget.unwrap_or(DEFAULT_CHECK_BUDGET))?;
    let mut recheck_failures = 0;
    if c.verify {
        for i in &report.ideals {
            if let Some(w) = &i.witness {
                let ann = ring.annihilator(w, Side::Right);
                if ann.dim_p() != i.dim_p || !ring.is_ideal(&ann.basis, crate::ring::IdealKind::Right) {
                    recheck_failures += 1;
                }
            }
        }
    }
    let violated = !report.proposition_holds() || !report.frobenius_consistent || recheck_failures > 0;
    let mut value = serde_json::to_value(&report)?;
    value["proposition_holds"] = json!(report.proposition_holds());
    if c.verify {
        value["recheck_failures"] = json!(recheck_failures);
    }
    Ok(Report { value, status: i32::from(violated) })
}

fn cmd_abelian(c: &Common, code: &CodeArgs) -> Result<Report> {
    let ring = load_ring(c)?;
    let ideals: Vec<_> = code_ideals(&ring, code, c.budget.unwrap_or(DEFAULT_IDEAL_BUDGET))?
        .into_iter()
        .filter(|(i, _)| i.dim_k.is_some_and(|k| k <= 3))
        .collect();
    let reducer = Reducer::default();
    let rows: Vec<(Value, bool)> = ideals
        .par_iter()
        .map(|(i, g)| match reducer.reduce(&ring, i) {
            Ok(red) => {
                let mut ok = red.verified;
                let mut row = json!({ "generator": g, "reduction": red });
                if c.verify && ring.n() <= 7 {
                    let target =
                        Ring::new(CrossedSystem::untwisted(ring.field().clone(), FiniteGroup::from_spec(&red.final_group)?));
                    let fin = target.from_record(&red.final_ideal)?;
                    let found = equivalence_search(
                        &LinearCode::from_ideal(&ring, i),
                        &LinearCode::from_ideal(&target, &fin),
                        EquivalenceMode::Monomial,
                        c.budget.map_or(DEFAULT_EQUIVALENCE_BUDGET, |b| b.min(u64::MAX as u128) as u64),
                    )?;
                    ok &= found.is_some();
                    row["independent_equivalence"] = json!(found.is_some());
                }
                Ok((row, ok))
            }
            Err(e @ Error::ReductionStalled(_)) => {
                let certificate = reducer.obstruction(&ring, i)?;
                Ok((json!({ "generator": g, "stalled": e.to_string(), "obstruction": certificate }), false))
            }
            Err(e) => Err(e),
        })
        .collect::<Result<_>>()?;
    let failures = rows.iter().filter(|r| !r.1).count();
    Ok(Report {
        value: json!({
            "system": ring.system().label(),
            "failures": failures,
            "rows": rows.into_iter().map(|r| r.0).collect::<Vec<_>>(),
        }),
        status: i32::from(failures > 0),
    })
}

fn cmd_extremal(c: &Common, code: &CodeArgs, subgroup: Option<&[usize]>) -> Result<Report> {
    let ring = load_ring(c)?;
    let budget = c.budget.unwrap_or(DEFAULT_DISTANCE_BUDGET);
    if let Some(members) = subgroup {
        let mut sorted = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let h: Subgroup = ring
            .group()
            .subgroup(&sorted)
            .ok_or_else(|| Error::Input(format!("{members:?} is not a subgroup")))?;
        let gen = ring.elem(code.generator.as_deref().expect("clap requires --generator"))?;
        let built = extremal_construct(&ring, &h, &gen, budget)?;
        let w = extremal_decompose(&built, budget)?;
        return Report::ok(json!({
            "system": ring.system().label(),
            "params": built.params(),
            "display": built.params().to_string(),
            "basis": ring.record(&built.ideal()),
            "decomposition": w,
        }));
    }
    let ideals = code_ideals(&ring, code, c.budget.unwrap_or(DEFAULT_IDEAL_BUDGET))?;
    let rows: Vec<Option<(Value, bool)>> = ideals
        .par_iter()
        .map(|(i, g)| {
            let code = LinearCode::from_ideal(&ring, i);
            let b = code_bound(&code, budget)?;
            if !b.extremal {
                return Ok(None);
            }
            Ok(Some(match extremal_decompose(&code, budget) {
                Ok(w) => {
                    let ok = !c.verify || ring.principal_ideal(&w.c, Side::from(code_side(&code))).basis == i.basis;
                    (json!({ "generator": g, "n": b.n, "k": b.k, "d": b.d, "witness": w }), ok)
                }
                Err(e @ Error::DecompositionFailed(_)) => (json!({ "generator": g, "error": e.to_string() }), false),
                Err(e) => return Err(e),
            }))
        })
        .collect::<Result<_>>()?;
    let rows: Vec<(Value, bool)> = rows.into_iter().flatten().collect();
    let failures = rows.iter().filter(|r| !r.1).count();
    Ok(Report {
        value: json!({
            "system": ring.system().label(),
            "extremal_codes": rows.len(),
            "failures": failures,
            "rows": rows.into_iter().map(|r| r.0).collect::<Vec<_>>(),
        }),
        status: i32::from(failures > 0),
    })
}

fn code_side(code: &LinearCode) -> SideArg {
    match code.kind() {
        crate::ring::IdealKind::Left => SideArg::Left,
        _ => SideArg::Right,
    }
}

fn cmd_search(c: &Common, side: Side, min_d: usize, target: Option<&[usize]>) -> Result<Report> {
    if target.is_some_and(|t| t.len() != 3) {
        return Err(Error::Input("--target takes exactly three values n,k,d".into()));
    }
    let ring = load_ring(c)?;
    let filter = SearchFilter {
        min_d,
        target: target.map(|t| (t[0], t[1], t[2])),
        ideal_budget: c.budget,
        distance_budget: c.budget,
    };
    let report = search_codes(&ring, side, &filter)?;
    let best = report.best().map(|b| format!("[{}, {}, {}]", b.n, b.k.map_or("-".into(), |k| k.to_string()), b.d));
    let mut value = serde_json::to_value(&report)?;
    value["best"] = json!(best);
    Ok(Report { value, status: 0 })
}

fn cmd_catalog(seed: u64, list: bool, no_stretch: bool) -> Result<Report> {
    if list {
        let names: Vec<Value> = catalog::catalog()?
            .iter()
            .chain(catalog::stretch_systems()?.iter())
            .map(|e| json!({ "name": e.name, "system": e.system.spec(), "expected": e.expected }))
            .collect();
        return Report::ok(json!({ "systems": names }));
    }
    let report = run_suite(&SuiteOptions { seed, stretch: !no_stretch })?;
    let violated = !report.all_gating_passed();
    let lines: Vec<String> = report.criteria.iter().map(|c| c.line()).collect();
    Ok(Report {
        value: json!({
            "all_gating_passed": report.all_gating_passed(),
            "uncertified_failures": report.uncertified_failures(),
            "summary": lines,
            "criteria": report.criteria,
        }),
        status: i32::from(violated),
    })
}

/// Indented `key: value` lines derived from the JSON report.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    render(v, 0, &mut out);
    out.trim_end().to_string()
}

fn render(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                if is_scalar_like(x) {
                    out.push_str(&format!("{pad}{k}: {}\n", inline(x)));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    render(x, depth + 1, out);
                }
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                if is_scalar_like(x) {
                    out.push_str(&format!("{pad}- {}\n", inline(x)));
                } else {
                    out.push_str(&format!("{pad}- [{i}]\n"));
                    render(x, depth + 1, out);
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", inline(other))),
    }
}

/// Values without nested objects fit on one line.
fn is_scalar_like(v: &Value) -> bool {
    match v {
        Value::Array(a) => a.iter().all(is_scalar_like),
        Value::Object(_) => false,
        _ => true,
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
