//! Human-readable summary of a report.

use std::fmt::Write;

use engel_lab::verify::{CheckResult, Outcome};

use crate::report::{EngelJson, GroupReport, Report, StructureReport};

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "-".to_string(), |n| n.to_string())
}

fn structure(out: &mut String, s: &StructureReport) {
    let _ = writeln!(
        out,
        "  abelian {}  nilpotent {} (class {})  soluble {} (derived length {})  exponent {}",
        s.abelian,
        s.nilpotent,
        opt(s.nilpotency_class),
        s.soluble,
        opt(s.derived_length),
        s.exponent
    );
    let _ = writeln!(
        out,
        "  |Z| = {}  |hypercenter| = {}  |Fitt| = {}  classes {}",
        s.center.len(),
        s.hypercenter.len(),
        s.radicals.fitting.len(),
        s.conjugacy_classes
    );
}

fn engel(out: &mut String, e: &EngelJson) {
    match e {
        EngelJson::Full {
            left_levels,
            right_levels,
            left,
            left_bounded,
            right,
            right_bounded,
            rho,
            ..
        } => {
            let _ = writeln!(
                out,
                "  |L| = {}  |L_bar| = {}  |R| = {}  |R_bar| = {}  |rho| = {}",
                left.len(),
                left_bounded.len(),
                right.len(),
                right_bounded.len(),
                rho.len()
            );
            for (name, levels) in [("L", left_levels), ("R", right_levels)] {
                let sizes: Vec<String> = levels
                    .iter()
                    .map(|l| {
                        let mut s = l.size.to_string();
                        if l.is_subgroup {
                            s.push('*');
                        }
                        s
                    })
                    .collect();
                let _ = writeln!(out, "  |{name}_n| for n = 1.. : {}  (* = subgroup)", sizes.join(" "));
            }
        }
        EngelJson::Spot { generators } => {
            for g in generators {
                let _ = writeln!(
                    out,
                    "  generator {}: left length {}, right length {}",
                    g.label,
                    opt(g.left_length),
                    opt(g.right_length)
                );
            }
        }
    }
}

fn check(out: &mut String, c: &CheckResult) {
    let tag = match c.outcome {
        Outcome::Pass => "PASS",
        Outcome::Fail => "FAIL",
        Outcome::Skipped => "skip",
    };
    let _ = write!(out, "  {tag} {}", c.id);
    if let Some(r) = &c.reason {
        let _ = write!(out, " ({r})");
    }
    if let Some(w) = &c.witness {
        let _ = write!(out, " witness {:?} at [{}]", w.relation, w.elements.join(", "));
    }
    let _ = writeln!(out, "  examined {}", c.stats.examined);
}

fn group(out: &mut String, g: &GroupReport) {
    match g.order {
        Some(n) => {
            let _ = writeln!(out, "{}  order {n}", g.spec);
        }
        None => {
            let _ = writeln!(out, "{}  black box, base order {}", g.spec, opt(g.base_order));
        }
    }
    if let Some(s) = &g.structure {
        structure(out, s);
    }
    if let Some(e) = &g.engel {
        engel(out, e);
    }
    for c in &g.checks {
        check(out, c);
    }
}

pub fn render(r: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "engel-lab {} {} seed {}", r.meta.version, r.meta.config.command, r.meta.seed);
    for g in r.groups.iter().flatten() {
        group(&mut out, g);
    }
    if let Some(s) = &r.search {
        let _ = writeln!(out, "search {} over {} groups", s.predicate, s.groups.len());
        match &s.result {
            Some(c) => check(&mut out, c),
            None => {
                let _ = writeln!(out, "  {}", s.note);
            }
        }
    }
    let checks: Vec<&CheckResult> = r.groups.iter().flatten().flat_map(|g| &g.checks).collect();
    if !checks.is_empty() {
        let count = |o: Outcome| checks.iter().filter(|c| c.outcome == o).count();
        let _ = writeln!(
            out,
            "{} passed, {} failed, {} skipped",
            count(Outcome::Pass),
            count(Outcome::Fail),
            count(Outcome::Skipped)
        );
    }
    out
}
