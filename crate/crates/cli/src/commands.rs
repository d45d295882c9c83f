use serde_json::{json, Value};

use tbchar_core::charvariety::{self, compare_eta, run_checks};
use tbchar_core::skeinreduce::{BasisDescriptor, SkeinQuotient};
use tbchar_core::{Monomial, Polynomial, TwoBridgeParam, VariableSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success,
    CheckFailure,
    UsageError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Success => 0,
            Status::CheckFailure => 1,
            Status::UsageError => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandResult {
    pub status: Status,
    pub payload: String,
}

impl CommandResult {
    fn ok(payload: String) -> Self {
        CommandResult {
            status: Status::Success,
            payload,
        }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        CommandResult {
            status: Status::UsageError,
            payload: format!("error: {msg}"),
        }
    }

    fn checked(passed: bool, payload: String) -> Self {
        CommandResult {
            status: if passed {
                Status::Success
            } else {
                Status::CheckFailure
            },
            payload,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub json: bool,
    pub seed: u64,
    pub samples: u64,
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize")
}

fn link_json(t: &TwoBridgeParam) -> Value {
    json!({ "twop": t.twop(), "q": t.q() })
}

macro_rules! param_or_usage {
    ($twop:expr, $q:expr) => {
        match TwoBridgeParam::new($twop, $q) {
            Ok(t) => t,
            Err(e) => return CommandResult::usage(e),
        }
    };
}

pub fn cmd_eta(twop: i64, q: i64, nab: bool, opts: &Options) -> CommandResult {
    let t = param_or_usage!(twop, q);
    if opts.json {
        let report = run_checks(&t, opts.samples, opts.seed);
        return CommandResult::ok(pretty(&report.to_json()));
    }
    let eta = charvariety::eta(&t);
    if !nab {
        return CommandResult::ok(eta.to_text());
    }
    match charvariety::eta_nab(&t) {
        Ok(n) => CommandResult::ok(format!(
            "eta = {eta}\neta_ab = {}\neta_nab = {n}",
            charvariety::eta_ab()
        )),
        Err(e) => CommandResult::checked(false, format!("eta = {eta}\neta_nab: {e}")),
    }
}

fn monomial_text(m: &Monomial) -> String {
    Polynomial::monomial(VariableSet::Barred, *m, 1).to_text()
}

pub fn cmd_basis(twop: i64, q: i64, max_degree: u32, opts: &Options) -> CommandResult {
    let t = param_or_usage!(twop, q);
    let basis = BasisDescriptor::new(t);
    let monomials = basis.monomials(max_degree);
    if opts.json {
        return CommandResult::ok(pretty(&json!({
            "link": link_json(&t),
            "y_degree_bound": basis.y_degree_bound,
            "max_degree": max_degree,
            "monomials": monomials.iter().map(|m| m.0).collect::<Vec<_>>(),
        })));
    }
    let lines: Vec<String> = monomials.iter().map(monomial_text).collect();
    CommandResult::ok(lines.join("\n"))
}

pub fn cmd_reduce(twop: i64, q: i64, poly: &str, opts: &Options) -> CommandResult {
    let t = param_or_usage!(twop, q);
    let f: Polynomial = match poly.parse() {
        Ok(f) => f,
        Err(e) => return CommandResult::usage(e),
    };
    let reduced = match SkeinQuotient::new(t).normal_form(&f) {
        Ok(r) => r,
        Err(e) => return CommandResult::usage(e),
    };
    if opts.json {
        return CommandResult::ok(pretty(&json!({
            "link": link_json(&t),
            "input": f.to_json(),
            "normal_form": reduced.to_json(),
        })));
    }
    CommandResult::ok(reduced.to_text())
}

pub fn cmd_check(twop: i64, q: i64, opts: &Options) -> CommandResult {
    let t = param_or_usage!(twop, q);
    let report = run_checks(&t, opts.samples, opts.seed);
    let payload = if opts.json {
        pretty(&report.to_json())
    } else {
        report.to_string().trim_end().to_string()
    };
    CommandResult::checked(report.all_passed(), payload)
}

pub fn cmd_scan(max_p: u32, opts: &Options) -> CommandResult {
    if max_p < 1 {
        return CommandResult::usage("--max-p must be at least 1");
    }
    let reports: Vec<_> = TwoBridgeParam::all_up_to(max_p)
        .iter()
        .map(|t| run_checks(t, opts.samples, opts.seed))
        .collect();
    let failures = reports.iter().filter(|r| !r.all_passed()).count();
    let payload = if opts.json {
        let links: Vec<Value> = reports
            .iter()
            .map(|r| {
                json!({
                    "link": link_json(&r.param),
                    "canonical": link_json(&r.param.canonical()),
                    "checks": r.checks_json(),
                    "passed": r.all_passed(),
                })
            })
            .collect();
        pretty(&json!({ "links": links, "total": reports.len(), "failures": failures }))
    } else {
        let mut lines = vec![format!(
            "{:<10} {:<10} {:>7} {:>7} {:>9}  status",
            "link", "canonical", "deg_eta", "deg_nab", "eta_terms"
        )];
        for r in &reports {
            let deg = |p: Option<&Polynomial>| {
                p.and_then(|p| p.degree_in(tbchar_core::Var::Y))
                    .map_or("-".to_string(), |d| d.to_string())
            };
            lines.push(format!(
                "{:<10} {:<10} {:>7} {:>7} {:>9}  {}",
                r.param.to_string(),
                r.param.canonical().to_string(),
                deg(Some(&r.eta)),
                deg(r.eta_nab.as_ref()),
                r.eta.num_terms(),
                if r.all_passed() {
                    "ok".to_string()
                } else {
                    let failed: Vec<_> = r
                        .checks
                        .iter()
                        .filter(|c| !c.passed)
                        .map(|c| c.name)
                        .collect();
                    format!("FAILED {}", failed.join(","))
                }
            ));
        }
        lines.push(format!(
            "scanned {} links, {failures} failures",
            reports.len()
        ));
        lines.join("\n")
    };
    CommandResult::checked(failures == 0, payload)
}

pub fn cmd_presentation(twop: i64, q: i64, opts: &Options) -> CommandResult {
    let t = param_or_usage!(twop, q);
    let pres = t.presentation();
    if opts.json {
        return CommandResult::ok(pretty(&json!({
            "link": link_json(&t),
            "generators": pres.generators(),
            "relator_word": pres.relator_word.to_string(),
            "relation": { "lhs": pres.lhs.to_string(), "rhs": pres.rhs.to_string() },
            "epsilon": t.epsilon_sequence().iter().map(|s| s.value()).collect::<Vec<_>>(),
        })));
    }
    CommandResult::ok(format!("w = {}\n{pres}", pres.relator_word))
}

/// Exploratory: relation between the η polynomials of two parameters.
pub fn cmd_compare(a: (i64, i64), b: (i64, i64), opts: &Options) -> CommandResult {
    let ta = param_or_usage!(a.0, a.1);
    let tb = param_or_usage!(b.0, b.1);
    let relation = compare_eta(&charvariety::eta(&ta), &charvariety::eta(&tb));
    let equivalent = ta.is_equivalent(&tb);
    if opts.json {
        return CommandResult::ok(pretty(&json!({
            "links": [link_json(&ta), link_json(&tb)],
            "equivalent": equivalent,
            "relation": format!("{relation:?}"),
        })));
    }
    CommandResult::ok(format!(
        "{ta} vs {tb}: equivalent parameters: {equivalent}; eta relation: {relation:?}"
    ))
}
