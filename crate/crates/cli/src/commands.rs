use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::{json, Value};
use tractlab_core::axioms::{fusion_on, idyll_on, msf_on, strong_fusion_on, Scan};
use tractlab_core::closure::{compare_null_sets, fusion_closure, sigma_closure, truncate3};
use tractlab_core::hyperfield::{
    check_hap, check_hyperfield_axioms, check_stringency_equivalence, is_stringent, tract_of,
};
use tractlab_core::{check_axiom, check_msf, check_tract_axioms, Axiom, AxiomReport, Carrier, Tract};
use tractlab_matroids::{
    certificate_json, certify_perfection, certify_strong_perfection, check_dual_pair, check_lower_term,
    check_minor_props, check_supp_lemma, check_wedge_closure, FMatroid,
};

use crate::args::{AxiomsArgs, Command, Format, HyperfieldArgs, MatroidArgs, MinorCheck, MinorsArgs, TractArgs};
use crate::input::{load_fmatroid, load_hyperfield, load_tract};
use crate::{scorecard, CliError};

const TRACT_CHECKS: [Axiom; 7] = [
    Axiom::T1,
    Axiom::T2,
    Axiom::T3,
    Axiom::I,
    Axiom::F,
    Axiom::SF,
    Axiom::MSF,
];
const HYPERFIELD_CHECKS: [Axiom; 11] = [
    Axiom::HG1,
    Axiom::HG2,
    Axiom::HG3,
    Axiom::HG4,
    Axiom::HG5,
    Axiom::HG6,
    Axiom::HR1,
    Axiom::HR2,
    Axiom::HR3,
    Axiom::HR4,
    Axiom::Stringent,
];
const MATROID_CHECKS: [Axiom; 6] = [Axiom::C0, Axiom::C1, Axiom::C2, Axiom::DP1, Axiom::DP2, Axiom::DP3];

/// Result of one command: a verdict plus its rendered forms.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub holds: bool,
    pub lines: Vec<String>,
    pub json: Value,
}

impl Outcome {
    fn from_reports(command: &str, subject: &str, reports: &[AxiomReport], carrier: &Carrier) -> Self {
        let holds = reports.iter().all(|r| r.holds);
        let lines = reports.iter().map(|r| report_line(r, carrier)).collect();
        let json = json!({
            "command": command,
            "subject": subject,
            "holds": holds,
            "reports": reports.iter().map(|r| r.to_json(carrier)).collect::<Vec<_>>(),
        });
        Self { holds, lines, json }
    }

    pub fn exit_code(&self) -> u8 {
        if self.holds {
            0
        } else {
            1
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.lines.iter().map(|l| format!("{l}\n")).collect(),
            Format::Json => format!("{}\n", serde_json::to_string_pretty(&self.json).unwrap_or_default()),
        }
    }
}

fn report_line(r: &AxiomReport, carrier: &Carrier) -> String {
    let mut line = r.to_text(carrier);
    if !r.details.is_empty() {
        let parts: Vec<String> = r.details.iter().map(|(k, v)| format!("{k}={v}")).collect();
        line.push_str(&format!(" [{}]", parts.join(", ")));
    }
    line
}

fn parse_checks(names: &[String], allowed: &[Axiom]) -> Result<Vec<Axiom>, CliError> {
    let mut out = Vec::new();
    for name in names {
        let axiom = *allowed
            .iter()
            .find(|a| a.to_string() == *name)
            .ok_or_else(|| CliError::Usage(format!("check `{name}` does not apply to this input")))?;
        if !out.contains(&axiom) {
            out.push(axiom);
        }
    }
    Ok(out)
}

pub fn run(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Axioms(args) => axioms(args),
        Command::Closure(args) => closure(args),
        Command::Sigma(args) => sigma(args),
        Command::Stringent(args) => stringent(args),
        Command::Hap(args) => hap(args),
        Command::Perfect(args) => certify(args, "perfect", None),
        Command::StrongPerfect(args) => certify(args, "strong-perfect", Some(args.coord_bound)),
        Command::WedgeCheck(args) => wedge(args),
        Command::MinorsCheck(args) => minors(args),
        Command::Demo(args) => Ok(scorecard::demo(&args.criterion)),
    }
}

/// Runs tract-level checks over one shared scan.
pub fn tract_reports(t: &Tract, checks: &[Axiom], bound: u32) -> Result<Vec<AxiomReport>, CliError> {
    let scan = Scan::new(t, bound)?;
    let basic = if checks.iter().any(|a| matches!(a, Axiom::T1 | Axiom::T2 | Axiom::T3)) {
        check_tract_axioms(t, bound)?
    } else {
        Vec::new()
    };
    checks
        .iter()
        .map(|&a| {
            Ok(match a {
                Axiom::T1 | Axiom::T2 | Axiom::T3 => basic
                    .iter()
                    .find(|r| r.axiom == a)
                    .cloned()
                    .expect("reported by the tract checker"),
                Axiom::I => idyll_on(&scan),
                Axiom::F => fusion_on(t, &scan),
                Axiom::SF => strong_fusion_on(&scan),
                Axiom::MSF => msf_on(&scan),
                other => check_axiom(t, other, bound)?,
            })
        })
        .collect()
}

fn axioms(args: &AxiomsArgs) -> Result<Outcome, CliError> {
    if let Some(reference) = &args.tract {
        let t = load_tract(reference)?;
        let mut allowed = TRACT_CHECKS.to_vec();
        allowed.push(Axiom::Involution);
        let checks = match args.check.is_empty() {
            true => TRACT_CHECKS.to_vec(),
            false => parse_checks(&args.check, &allowed)?,
        };
        let reports = tract_reports(&t, &checks, args.bound)?;
        return Ok(Outcome::from_reports("axioms", t.name(), &reports, t.carrier()));
    }
    if let Some(reference) = &args.hyperfield {
        let h = load_hyperfield(reference)?;
        let t = tract_of(&h);
        let mut allowed = HYPERFIELD_CHECKS.to_vec();
        allowed.extend(TRACT_CHECKS);
        let checks = match args.check.is_empty() {
            true => HYPERFIELD_CHECKS[..10].iter().chain(&TRACT_CHECKS).copied().collect(),
            false => parse_checks(&args.check, &allowed)?,
        };
        let table = check_hyperfield_axioms(&h);
        let tract_checks: Vec<Axiom> = checks.iter().copied().filter(|a| TRACT_CHECKS.contains(a)).collect();
        let mut tract = tract_reports(&t, &tract_checks, args.bound)?.into_iter();
        let mut reports = Vec::new();
        for a in checks {
            reports.push(match a {
                Axiom::Stringent => is_stringent(&h),
                a if TRACT_CHECKS.contains(&a) => tract.next().expect("one report per tract check"),
                a => table
                    .iter()
                    .find(|r| r.axiom == a)
                    .cloned()
                    .ok_or_else(|| CliError::Usage(format!("no report for {a}")))?,
            });
        }
        return Ok(Outcome::from_reports("axioms", h.name(), &reports, h.carrier()));
    }
    let reference = args.fmatroid.as_deref().expect("clap requires one input");
    parse_checks(&args.check, &MATROID_CHECKS)?;
    let fm = load_fmatroid(reference)?;
    let report = check_dual_pair(&fm)?;
    Ok(Outcome::from_reports("axioms", reference, &[report], fm.carrier()))
}

fn closure(args: &TractArgs) -> Result<Outcome, CliError> {
    let t = load_tract(&args.tract)?;
    let pasture = truncate3(&t)?;
    let oracle = fusion_closure(&pasture, args.bound)?;
    let mut by_norm: BTreeMap<u32, usize> = BTreeMap::new();
    for s in oracle.members() {
        *by_norm.entry(s.norm()).or_default() += 1;
    }
    let (members, rounds) = (oracle.member_count(), oracle.rounds());
    let closed = Tract::new(format!("closure({})", t.name()), t.carrier().clone(), Arc::new(oracle));
    let comparison = compare_null_sets(Axiom::ClosureComparison, &closed, &t, args.bound)?;
    let c = t.carrier();
    let mut lines = vec![format!(
        "fusion closure of {} up to norm {}: {members} null sums after {rounds} rounds",
        pasture.name(),
        args.bound
    )];
    lines.extend(by_norm.iter().map(|(n, k)| format!("  norm {n}: {k}")));
    lines.push(format!("against {}: {}", t.name(), report_line(&comparison, c)));
    let json = json!({
        "command": "closure",
        "subject": t.name(),
        "holds": true,
        "bound": args.bound,
        "members": members,
        "rounds": rounds,
        "members_by_norm": by_norm.iter().map(|(n, k)| json!([n, k])).collect::<Vec<_>>(),
        "comparison": comparison.to_json(c),
    });
    Ok(Outcome {
        holds: true,
        lines,
        json,
    })
}

fn sigma(args: &TractArgs) -> Result<Outcome, CliError> {
    let t = load_tract(&args.tract)?;
    let oracle = sigma_closure(&t, args.bound)?;
    let (members, stages) = (oracle.member_count(), oracle.rounds());
    let closed = Tract::new(format!("sigma({})", t.name()), t.carrier().clone(), Arc::new(oracle));
    let msf_closed = check_msf(&closed, args.bound)?;
    let msf_input = check_msf(&t, args.bound)?;
    let fixed = compare_null_sets(Axiom::SigmaFixedPoint, &t, &closed, args.bound)?;
    let holds = msf_closed.holds && (!msf_input.holds || fixed.holds);
    let c = t.carrier();
    let mut lines = vec![
        format!(
            "sigma closure of {} up to norm {}: {members} null sums after {stages} stages",
            t.name(),
            args.bound
        ),
        format!("sigma: {}", report_line(&msf_closed, c)),
        format!("input: {}", report_line(&msf_input, c)),
        report_line(&fixed, c),
    ];
    if !msf_input.holds {
        lines.push("fixed point not claimed: the input fails MSF".to_string());
    }
    let json = json!({
        "command": "sigma",
        "subject": t.name(),
        "holds": holds,
        "members": members,
        "stages": stages,
        "closure_msf": msf_closed.to_json(c),
        "input_msf": msf_input.to_json(c),
        "fixed_point": fixed.to_json(c),
        "fixed_point_claimed": msf_input.holds,
    });
    Ok(Outcome { holds, lines, json })
}

fn stringent(args: &HyperfieldArgs) -> Result<Outcome, CliError> {
    let h = load_hyperfield(&args.hyperfield)?;
    let reports = [is_stringent(&h), check_stringency_equivalence(&h, args.bound)?];
    let mut out = Outcome::from_reports("stringent", h.name(), &reports, h.carrier());
    out.holds = reports[1].holds;
    out.json["holds"] = json!(out.holds);
    out.json["stringent"] = json!(reports[0].holds);
    Ok(out)
}

fn hap(args: &HyperfieldArgs) -> Result<Outcome, CliError> {
    let h = load_hyperfield(&args.hyperfield)?;
    let report = check_hap(&h, args.bound)?;
    Ok(Outcome::from_reports("hap", h.name(), &[report], h.carrier()))
}

/// Loads an F-matroid and refuses to certify anything that is not a dual pair.
fn checked_fmatroid(command: &str, args: &MatroidArgs) -> Result<Result<FMatroid, Outcome>, CliError> {
    let fm = load_fmatroid(&args.fmatroid)?;
    let dp = check_dual_pair(&fm)?;
    if dp.holds {
        return Ok(Ok(fm));
    }
    let mut out = Outcome::from_reports(command, &args.fmatroid, &[dp], fm.carrier());
    out.lines
        .push("not a dual pair of signatures; nothing certified".to_string());
    Ok(Err(out))
}

fn certify(args: &MatroidArgs, command: &str, coord_bound: Option<u32>) -> Result<Outcome, CliError> {
    let fm = match checked_fmatroid(command, args)? {
        Ok(fm) => fm,
        Err(out) => return Ok(out),
    };
    let report = match coord_bound {
        Some(b) => certify_strong_perfection(&fm, b)?,
        None => certify_perfection(&fm)?,
    };
    let c = fm.carrier();
    let mut json = certificate_json(&report, c);
    json["subject"] = json!(args.fmatroid);
    let detail = |k: &str| report.details.get(k).cloned().unwrap_or(Value::Null);
    let verdict = if report.holds { "certified" } else { "violated" };
    let mut lines = vec![format!(
        "{} {verdict} for {} (coord bound {}, oracle bound {}): {} vectors x {} covectors, {} pairs checked",
        report.axiom,
        args.fmatroid,
        report.bound_checked,
        detail("oracle_bound"),
        detail("vectors"),
        detail("covectors"),
        detail("pairs_checked")
    )];
    if let Some(w) = &report.witness {
        lines.push(format!("witness: {}", w.to_text(c)));
    }
    Ok(Outcome {
        holds: report.holds,
        lines,
        json,
    })
}

fn wedge(args: &MatroidArgs) -> Result<Outcome, CliError> {
    let fm = match checked_fmatroid("wedge-check", args)? {
        Ok(fm) => fm,
        Err(out) => return Ok(out),
    };
    let report = check_wedge_closure(&fm, args.coord_bound)?;
    Ok(Outcome::from_reports(
        "wedge-check",
        &args.fmatroid,
        &[report],
        fm.carrier(),
    ))
}

fn minors(args: &MinorsArgs) -> Result<Outcome, CliError> {
    let fm = match checked_fmatroid("minors-check", &args.matroid)? {
        Ok(fm) => fm,
        Err(out) => return Ok(out),
    };
    let b = args.matroid.coord_bound;
    let mut checks = args.check.clone();
    checks.dedup();
    let reports = checks
        .iter()
        .map(|c| match c {
            MinorCheck::Minors => check_minor_props(&fm, b),
            MinorCheck::Supp => check_supp_lemma(&fm, b),
            MinorCheck::LowerTerm => check_lower_term(&fm, b),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Outcome::from_reports(
        "minors-check",
        &args.matroid.fmatroid,
        &reports,
        fm.carrier(),
    ))
}
