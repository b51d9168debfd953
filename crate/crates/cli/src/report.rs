//! JSON report model. Field order is fixed by the struct definitions and
//! every element set is a sorted label array, so equal runs serialize to
//! equal bytes.

use engel_lab::analysis::Analysis;
use engel_lab::constructions::{GroupInstance, GroupSpec};
use engel_lab::engel::{left_engel_status, right_engel_status, LevelSet, FULL_TABLE_LIMIT};
use engel_lab::structure::{center, conjugacy_classes, SeriesKind, SeriesResult};
use engel_lab::subgroup::Subgroup;
use engel_lab::verify::CheckResult;
use engel_lab::{Element, FiniteGroup, Result};
use serde::Serialize;

#[derive(Serialize)]
pub struct Report {
    pub meta: Meta,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub groups: Option<Vec<GroupReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub search: Option<SearchReport>,
}

#[derive(Serialize)]
pub struct Meta {
    pub version: &'static str,
    pub seed: u64,
    pub config: ConfigEcho,
}

/// The run configuration as recorded in the report.
#[derive(Serialize)]
pub struct ConfigEcho {
    pub command: &'static str,
    pub groups: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suite: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicate: Option<String>,
    pub max_n: usize,
    pub cap: usize,
    pub samples: usize,
    pub format: &'static str,
}

#[derive(Serialize)]
pub struct GroupReport {
    pub spec: String,
    pub kind: &'static str,
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base_order: Option<usize>,
    pub structure: Option<StructureReport>,
    pub engel: Option<EngelJson>,
    pub checks: Vec<CheckResult>,
}

#[derive(Serialize)]
pub struct SeriesJson {
    /// Orders of the terms, starting from the first term.
    pub orders: Vec<usize>,
    pub stabilized: bool,
}

#[derive(Serialize)]
pub struct Radicals {
    pub fitting: Vec<String>,
    pub baer: Vec<String>,
    pub gruenberg: Vec<String>,
    pub hirsch_plotkin: Vec<String>,
}

#[derive(Serialize)]
pub struct StructureReport {
    pub abelian: bool,
    pub nilpotent: bool,
    pub soluble: bool,
    pub nilpotency_class: Option<usize>,
    pub derived_length: Option<usize>,
    pub exponent: usize,
    pub conjugacy_classes: usize,
    pub generators: Vec<String>,
    pub center: Vec<String>,
    pub hypercenter: Vec<String>,
    pub upper_central: SeriesJson,
    pub lower_central: SeriesJson,
    pub derived: SeriesJson,
    pub radicals: Radicals,
}

#[derive(Serialize)]
pub struct ElementJson {
    pub label: String,
    /// `null` when the element is not a left Engel element.
    pub left_length: Option<usize>,
    pub right_length: Option<usize>,
}

#[derive(Serialize)]
pub struct LevelJson {
    pub n: usize,
    pub size: usize,
    pub elements: Vec<String>,
    pub is_subgroup: bool,
    pub generates_group: bool,
}

#[derive(Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum EngelJson {
    Full {
        max_n: usize,
        elements: Vec<ElementJson>,
        left_levels: Vec<LevelJson>,
        right_levels: Vec<LevelJson>,
        #[serde(rename = "L")]
        left: Vec<String>,
        #[serde(rename = "L_bar")]
        left_bounded: Vec<String>,
        #[serde(rename = "R")]
        right: Vec<String>,
        #[serde(rename = "R_bar")]
        right_bounded: Vec<String>,
        rho: Vec<String>,
        rho_bar: Vec<String>,
    },
    /// Per-generator statuses for groups above the full-table limit.
    Spot { generators: Vec<ElementJson> },
}

#[derive(Serialize)]
pub struct SearchReport {
    pub predicate: String,
    pub groups: Vec<String>,
    pub found: bool,
    pub result: Option<CheckResult>,
    pub note: String,
}

pub fn sorted_labels(g: &FiniteGroup, elements: impl IntoIterator<Item = Element>) -> Vec<String> {
    let mut v: Vec<String> = elements.into_iter().map(|e| g.label(e).to_string()).collect();
    v.sort();
    v
}

fn subgroup_labels(h: &Subgroup<'_>) -> Vec<String> {
    sorted_labels(h.group(), h.elements().iter().copied())
}

fn series_json(s: &SeriesResult<'_>) -> SeriesJson {
    SeriesJson {
        orders: s.terms.iter().map(|t| t.order()).collect(),
        stabilized: s.stabilized,
    }
}

pub fn structure_report(a: &Analysis<'_>) -> Result<StructureReport> {
    let g = a.group();
    let r = a.radicals()?;
    let class = a.nilpotency_class()?;
    let dl = a.derived_length()?;
    let classes = conjugacy_classes(g);
    Ok(StructureReport {
        abelian: g.is_abelian(),
        nilpotent: class.is_some(),
        soluble: dl.is_some(),
        nilpotency_class: class,
        derived_length: dl,
        exponent: g.exponent(),
        conjugacy_classes: classes.iter().map(|&c| c as usize + 1).max().unwrap_or(0),
        generators: g.generators().iter().map(|&e| g.label(e).to_string()).collect(),
        center: subgroup_labels(&center(g)),
        hypercenter: subgroup_labels(a.hypercenter()?),
        upper_central: series_json(a.series(SeriesKind::UpperCentral)?),
        lower_central: series_json(a.series(SeriesKind::LowerCentral)?),
        derived: series_json(a.series(SeriesKind::Derived)?),
        radicals: Radicals {
            fitting: subgroup_labels(&r.fitting),
            baer: subgroup_labels(&r.baer),
            gruenberg: subgroup_labels(&r.gruenberg),
            hirsch_plotkin: subgroup_labels(&r.hirsch_plotkin),
        },
    })
}

fn level_json(g: &FiniteGroup, l: &LevelSet) -> LevelJson {
    LevelJson {
        n: l.n,
        size: l.elements.len(),
        elements: sorted_labels(g, l.elements.iter().copied()),
        is_subgroup: l.is_subgroup,
        generates_group: l.generates_group,
    }
}

pub fn engel_json(a: &Analysis<'_>) -> Result<EngelJson> {
    let g = a.group();
    if g.order() > FULL_TABLE_LIMIT {
        let generators = g
            .generators()
            .iter()
            .map(|&e| ElementJson {
                label: g.label(e).to_string(),
                left_length: left_engel_status(g, e).length,
                right_length: right_engel_status(g, e).length,
            })
            .collect();
        return Ok(EngelJson::Spot { generators });
    }
    let r = a.engel()?;
    let mut elements: Vec<ElementJson> = r
        .per_element
        .iter()
        .map(|p| ElementJson {
            label: g.label(p.element).to_string(),
            left_length: p.left.length,
            right_length: p.right.length,
        })
        .collect();
    elements.sort_by(|x, y| x.label.cmp(&y.label));
    let labels = |v: &[Element]| sorted_labels(g, v.iter().copied());
    Ok(EngelJson::Full {
        max_n: r.max_n,
        elements,
        left_levels: r.left_levels.iter().map(|l| level_json(g, l)).collect(),
        right_levels: r.right_levels.iter().map(|l| level_json(g, l)).collect(),
        left: labels(&r.left),
        left_bounded: labels(&r.left_bounded),
        right: labels(&r.right),
        right_bounded: labels(&r.right_bounded),
        rho: labels(&r.rho),
        rho_bar: labels(&r.rho_bar),
    })
}

/// Report skeleton for a constructed group, without checks.
pub fn group_report(spec: &GroupSpec, instance: &GroupInstance, analysis: Option<&Analysis<'_>>) -> Result<GroupReport> {
    Ok(match (instance, analysis) {
        (GroupInstance::Finite(g), Some(a)) => GroupReport {
            spec: spec.to_string(),
            kind: "finite",
            order: Some(g.order()),
            base_order: None,
            structure: Some(structure_report(a)?),
            engel: Some(engel_json(a)?),
            checks: Vec::new(),
        },
        (GroupInstance::Finite(g), None) => GroupReport {
            spec: spec.to_string(),
            kind: "finite",
            order: Some(g.order()),
            base_order: None,
            structure: None,
            engel: None,
            checks: Vec::new(),
        },
        (GroupInstance::BlackBox(m), _) => GroupReport {
            spec: spec.to_string(),
            kind: "black_box",
            order: None,
            base_order: Some(m.base().order()),
            structure: None,
            engel: None,
            checks: Vec::new(),
        },
    })
}
