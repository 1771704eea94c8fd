//! One function per verb. Each returns a rendered-ready [`Output`].

use anyhow::{bail, Context};
use clap::Args;
use rayon::prelude::*;
use serde::Serialize;

use weyl_racks::conjugacy::{enumerate_class, label_of, representatives, ClassLabel, SplitTag};
use weyl_racks::nichols::{
    centralizer, characters, check_braid_equation, graded_dims, yd_cocycle, Ambient, Budget, BraidedSpace, Character, Cocycle,
    GradedReport, NamedCharacter, YdData,
};
use weyl_racks::rack::{
    type_d_certificate, validate_decomposition, ConjugationRack, DecompositionReport, RackAxiomReport, ScanLog, SearchOptions,
    TypeDCertificate,
};
use weyl_racks::selftest::{run_all, SelfCheck};
use weyl_racks::verify::{audit as run_audit, class_sweep, AuditContext, WitnessId, SweepOptions, SweepOutcome};
use weyl_racks::{Family, GroupSpec, SignedCycleType, SignedElement};

use crate::config::Config;
use crate::output::{cell, opt_cell, Output, Status, Table};
use crate::{ElementArgs, GroupArgs};

/// Classes above this size skip the cubic rack-axiom check in `class-info`.
const AXIOM_CHECK_LIMIT: usize = 400;

pub struct Settings {
    pub cap: Option<usize>,
    pub timings: bool,
    pub config: Config,
}

impl Settings {
    fn search(&self) -> SearchOptions {
        let mut opts = SearchOptions::default();
        if let Some(cap) = self.cap {
            opts.subgroup_cap = cap;
        }
        opts
    }
}

fn spec_of(g: &GroupArgs) -> anyhow::Result<GroupSpec> {
    Ok(GroupSpec::new(g.family, g.degree)?)
}

fn element_of(e: &ElementArgs) -> anyhow::Result<(GroupSpec, SignedElement)> {
    let spec = spec_of(&e.group)?;
    let g: SignedElement = e.element.parse()?;
    if g.degree() != spec.degree {
        bail!("element {} has degree {}, expected {}", e.element, g.degree(), spec.degree);
    }
    if !spec.member(&g)? {
        bail!("{g} is not in {spec}");
    }
    Ok((spec, g))
}

fn split_name(s: SplitTag) -> &'static str {
    match s {
        SplitTag::None => "none",
        SplitTag::Plus => "plus",
        SplitTag::Minus => "minus",
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ClassRow {
    label: String,
    #[serde(rename = "type")]
    cycle_type: SignedCycleType,
    split: SplitTag,
    representative: SignedElement,
    size: usize,
}

pub fn classes(g: &GroupArgs) -> anyhow::Result<Output> {
    let spec = spec_of(g)?;
    let reps = representatives(spec);
    let sizes: Vec<usize> = reps
        .par_iter()
        .map(|(_, rep)| enumerate_class(spec, rep).map(|c| c.size()))
        .collect::<Result<_, _>>()?;
    let rows: Vec<ClassRow> = reps
        .into_iter()
        .zip(sizes)
        .map(|((label, rep), size)| ClassRow {
            label: label.to_string(),
            cycle_type: label.cycle_type.clone(),
            split: label.split,
            representative: rep,
            size,
        })
        .collect();
    let mut table = Table::new(&["label", "type", "split", "representative", "size"]);
    for r in &rows {
        table.push(vec![
            r.label.clone(),
            r.cycle_type.to_string(),
            split_name(r.split).into(),
            r.representative.to_string(),
            cell(r.size),
        ]);
    }
    Output::lines(&rows, table, Status::Complete)
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ClassInfo {
    family: Family,
    degree: usize,
    element: SignedElement,
    label: ClassLabel,
    representative: SignedElement,
    size: usize,
    /// `|G| / |O|`.
    centralizer_order: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    rack_axioms: Option<RackAxiomReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elements: Option<Vec<SignedElement>>,
}

pub fn class_info(e: &ElementArgs, list: bool) -> anyhow::Result<Output> {
    let (spec, g) = element_of(e)?;
    let label = label_of(spec, &g)?;
    let class = enumerate_class(spec, &g)?;
    let order = spec.order().context("group order overflows")?;
    let rack_axioms = (class.size() <= AXIOM_CHECK_LIMIT).then(|| ConjugationRack::from_class(&class).rack().check_axioms());
    let status = match &rack_axioms {
        Some(r) if !r.passed => Status::Violation,
        _ => Status::Complete,
    };
    let info = ClassInfo {
        family: spec.family,
        degree: spec.degree,
        element: g,
        representative: weyl_racks::conjugacy::representative_for(spec, &label),
        label,
        size: class.size(),
        centralizer_order: order / class.size() as u128,
        rack_axioms,
        elements: list.then(|| {
            let mut v = class.elements().to_vec();
            v.sort_by_key(|x| x.to_string());
            v
        }),
    };
    let mut table = Table::new(&["element", "label", "representative", "size", "centralizerOrder", "rackAxiomsPassed"]);
    table.push(vec![
        info.element.to_string(),
        info.label.to_string(),
        info.representative.to_string(),
        cell(info.size),
        cell(info.centralizer_order),
        opt_cell(info.rack_axioms.as_ref().map(|r| r.passed)),
    ]);
    Output::document(&info, table, status)
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct TypedReport {
    family: Family,
    degree: usize,
    element: SignedElement,
    label: ClassLabel,
    class_size: usize,
    subgroup_cap: usize,
    outcome: SweepOutcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<TypeDCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    decomposition: Option<DecompositionReport>,
    scan: ScanLog,
    complete: bool,
    interpretation: &'static str,
}

pub fn typed(e: &ElementArgs, settings: &Settings) -> anyhow::Result<Output> {
    let (spec, g) = element_of(e)?;
    let class = enumerate_class(spec, &g)?;
    let opts = settings.search();
    let search = type_d_certificate(&class, opts);
    let certificate = search.certificate().cloned();
    let decomposition = certificate.as_ref().map(|c| validate_decomposition(&c.witness()));
    let invalid = certificate.as_ref().is_some_and(|c| !c.is_valid()) || decomposition.as_ref().is_some_and(|d| !d.passed);
    let report = TypedReport {
        family: spec.family,
        degree: spec.degree,
        label: label_of(spec, &g)?,
        element: g,
        class_size: class.size(),
        subgroup_cap: opts.subgroup_cap,
        outcome: if certificate.is_some() { SweepOutcome::Certificate } else { SweepOutcome::Exhausted },
        interpretation: if certificate.is_some() {
            "type D: dim B(O, rho) is infinite for every rho"
        } else {
            "no (r, s) pair: not of type D; Nichols dimension not decided here"
        },
        certificate,
        decomposition,
        scan: search.log.clone(),
        complete: search.complete,
    };
    let status = if invalid {
        Status::Violation
    } else if !report.complete {
        Status::Incomplete
    } else {
        Status::Complete
    };
    let mut table = Table::new(&[
        "element", "label", "classSize", "outcome", "r", "s", "subgroupOrder", "decompositionPassed", "scanned", "sqFixed",
        "conjugateInSubgroup", "capSkipped", "complete",
    ]);
    let c = report.certificate.as_ref();
    table.push(vec![
        report.element.to_string(),
        report.label.to_string(),
        cell(report.class_size),
        outcome_name(report.outcome).into(),
        opt_cell(c.map(|c| &c.r)),
        opt_cell(c.map(|c| &c.s)),
        opt_cell(c.map(|c| c.subgroup_order)),
        opt_cell(report.decomposition.as_ref().map(|d| d.passed)),
        cell(report.scan.scanned),
        cell(report.scan.sq_fixed),
        cell(report.scan.conjugate_in_subgroup),
        cell(report.scan.cap_skipped),
        cell(report.complete),
    ]);
    Output::document(&report, table, status)
}

fn outcome_name(o: SweepOutcome) -> &'static str {
    match o {
        SweepOutcome::Certificate => "certificate",
        SweepOutcome::Exhausted => "exhausted",
    }
}

pub fn audit(witness: WitnessId, family: Family, degree: Option<usize>, settings: &Settings) -> anyhow::Result<Output> {
    let spec = GroupSpec::new(family, degree.unwrap_or(witness.default_degree()))?;
    let ctx = AuditContext::new(settings.search());
    let report = run_audit(witness, spec, &ctx)?;
    let status = if report.summary.certificates_invalid > 0 {
        Status::Violation
    } else if !report.complete {
        Status::Incomplete
    } else {
        Status::Complete
    };
    let mut table = Table::new(&[
        "a", "b", "aSigma", "bTau", "conjugate", "signedCycleTypesAgree", "totalParityTestPredictsConjugate", "sqDiffers",
        "criterionPredictsSqFixed", "sixComponentFormHolds", "exactReadingValid", "cyclicReadingValid", "classLabel",
        "classTypeD", "classComplete", "certificateValidated",
    ]);
    for row in &report.rows {
        let reading = |i: usize| opt_cell(row.decomposition.get(i).map(|d| d.report.passed));
        table.push(vec![
            row.a.clone(),
            row.b.clone(),
            row.a_sigma.to_string(),
            row.b_tau.to_string(),
            cell(row.conjugate),
            cell(row.signed_cycle_types_agree),
            cell(row.total_parity_test_predicts_conjugate),
            cell(row.sq_differs),
            cell(row.criterion_predicts_sq_fixed),
            opt_cell(row.six_component_form_holds),
            reading(0),
            reading(1),
            row.class_verdict.label.to_string(),
            cell(row.class_verdict.type_d),
            cell(row.class_verdict.complete),
            opt_cell(row.class_verdict.certificate_validated),
        ]);
    }
    Output::document(&report, table, status)
}

pub fn sweep(g: &GroupArgs, settings: &Settings) -> anyhow::Result<Output> {
    let spec = spec_of(g)?;
    let mut opts = SweepOptions::for_degree(spec.degree)?;
    opts.search = settings.search();
    opts.timings = settings.timings;
    let report = class_sweep(spec, &opts)?;
    let status = if report.invalid_certificates > 0 {
        Status::Violation
    } else if !report.complete {
        Status::Incomplete
    } else {
        Status::Complete
    };
    let mut headers = vec![
        "label", "representative", "sigmaType", "classSize", "outcome", "r", "s", "subgroupOrder", "certificateValidated",
        "scanned", "sqFixed", "conjugateInSubgroup", "capSkipped", "complete", "exception", "consistentWithList",
    ];
    if settings.timings {
        headers.push("runtimeMs");
    }
    let mut table = Table::new(&headers);
    for row in &report.rows {
        let c = row.certificate.as_ref();
        let mut cells = vec![
            row.label.to_string(),
            row.representative.to_string(),
            row.sigma_type.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" "),
            cell(row.class_size),
            outcome_name(row.outcome).into(),
            opt_cell(c.map(|c| &c.r)),
            opt_cell(c.map(|c| &c.s)),
            opt_cell(c.map(|c| c.subgroup_order)),
            opt_cell(row.certificate_validated),
            cell(row.scan.scanned),
            cell(row.scan.sq_fixed),
            cell(row.scan.conjugate_in_subgroup),
            cell(row.scan.cap_skipped),
            cell(row.complete),
            serde_json::to_value(row.exception)?.as_str().unwrap_or_default().to_string(),
            cell(row.consistent_with_list),
        ];
        if settings.timings {
            cells.push(opt_cell(row.runtime_ms));
        }
        table.push(cells);
    }
    Output::document(&report, table, status)
}

#[derive(Args, Debug, Clone)]
pub struct NicholsArgs {
    #[command(flatten)]
    pub element: ElementArgs,
    /// Restrict to a subrack; `zero-signs` keeps the `Sₙ` part of the class.
    #[arg(long)]
    pub subrack: Option<Subrack>,
    /// `yd` (from a centralizer character) or `constant:+1` / `constant:-1`.
    #[arg(long, default_value = "yd")]
    pub cocycle: CocycleChoice,
    /// Character of the centralizer: trivial, perm-sign, sign-parity,
    /// product, or an index into the enumerated ±1 characters.
    #[arg(long, default_value = "trivial")]
    pub character: String,
    /// Highest tensor degree.
    #[arg(long)]
    pub max_degree: Option<usize>,
    #[arg(long)]
    pub max_points: Option<usize>,
    #[arg(long)]
    pub max_rows: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Subrack {
    ZeroSigns,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CocycleChoice {
    Yd,
    Constant(i8),
}

impl std::str::FromStr for CocycleChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "yd" => Ok(CocycleChoice::Yd),
            "constant:+1" | "constant:1" => Ok(CocycleChoice::Constant(1)),
            "constant:-1" => Ok(CocycleChoice::Constant(-1)),
            _ => Err(format!("unknown cocycle {s:?} (expected yd, constant:+1 or constant:-1)")),
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct RackDescription {
    ambient: String,
    element: SignedElement,
    subrack: Option<&'static str>,
    points: usize,
    elements: Vec<SignedElement>,
    table: Vec<Vec<u32>>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct CocycleDescription {
    source: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    character: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    centralizer_order: Option<usize>,
    values: Vec<Vec<i8>>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct NicholsReport {
    rack: RackDescription,
    cocycle: CocycleDescription,
    braid_equation: bool,
    budget: Budget,
    graded: Option<GradedReport>,
}

fn pick_character(spec: &str, group: &[SignedElement]) -> anyhow::Result<Character> {
    if let Ok(kind) = spec.parse::<NamedCharacter>() {
        return Ok(Character::named(kind, group));
    }
    let index: usize = spec
        .parse()
        .map_err(|_| anyhow::anyhow!("unknown character {spec:?}"))?;
    let all = characters(group);
    let count = all.len();
    all.into_iter()
        .nth(index)
        .ok_or_else(|| anyhow::anyhow!("character index {index} out of range ({count} characters)"))
}

pub fn nichols(args: &NicholsArgs, settings: &Settings) -> anyhow::Result<Output> {
    let (spec, g) = element_of(&args.element)?;
    let config = &settings.config;
    let defaults = Budget::default();
    let budget = Budget {
        max_points: args.max_points.or(config.max_points).unwrap_or(defaults.max_points),
        max_rows: args.max_rows.or(config.max_rows).unwrap_or(defaults.max_rows),
        max_block: config.max_block.unwrap_or(defaults.max_block),
        ..defaults
    };
    let max_degree = args.max_degree.or(config.max_degree).unwrap_or(4);
    let zero_signs = args.subrack == Some(Subrack::ZeroSigns);
    if zero_signs && !g.sign().is_zero() {
        bail!("--subrack zero-signs needs an element with zero signs, got {g}");
    }
    let ambient = if zero_signs { Ambient::Symmetric(spec.degree) } else { Ambient::Weyl(spec) };

    let (rack, cocycle, description) = match args.cocycle {
        CocycleChoice::Yd => {
            let cent = centralizer(ambient, &g)?;
            let chi = pick_character(&args.character, &cent)?;
            let name = chi.name.clone();
            let data = YdData::new(ambient, g.clone(), chi)?;
            let q = yd_cocycle(&data)?;
            let desc = CocycleDescription {
                source: "yd".into(),
                character: Some(name),
                centralizer_order: Some(cent.len()),
                values: q.rows(),
            };
            (data.rack(), q, desc)
        }
        CocycleChoice::Constant(v) => {
            let class = enumerate_class(spec, &g)?;
            let rack = if zero_signs {
                ConjugationRack::zero_sign_subrack(&class)?
            } else {
                ConjugationRack::from_class(&class)
            };
            let q = Cocycle::constant(rack.size(), v)?;
            let desc = CocycleDescription {
                source: format!("constant:{v:+}"),
                character: None,
                centralizer_order: None,
                values: q.rows(),
            };
            (rack, q, desc)
        }
    };
    let n = rack.size();
    if n > budget.max_points {
        bail!(weyl_racks::Error::BudgetExceeded(format!("{n} points > limit {}", budget.max_points)));
    }
    let space = BraidedSpace::new(rack.rack().clone(), cocycle)?;
    let braid = check_braid_equation(&space);
    let graded = if braid { Some(graded_dims(&space, max_degree, &budget)?) } else { None };
    let status = match &graded {
        None => Status::Violation,
        Some(r) if r.truncated => Status::Incomplete,
        Some(_) => Status::Complete,
    };
    let report = NicholsReport {
        rack: RackDescription {
            ambient: ambient.to_string(),
            element: g,
            subrack: zero_signs.then_some("zero-signs"),
            points: n,
            table: rack.rack().table().chunks(n).map(<[u32]>::to_vec).collect(),
            elements: rack.elements().to_vec(),
        },
        cocycle: description,
        braid_equation: braid,
        budget,
        graded,
    };
    let mut table = Table::new(&["degree", "tensorDim", "rank", "kernel", "dim", "blocks"]);
    if let Some(gr) = &report.graded {
        for d in &gr.degrees {
            table.push(vec![cell(d.degree), cell(d.tensor_dim), cell(d.rank), cell(d.kernel), cell(d.dim), cell(d.blocks)]);
        }
    }
    Output::document(&report, table, status)
}

#[derive(Serialize)]
struct SelftestReport {
    passed: bool,
    checks: Vec<SelfCheck>,
}

pub fn selftest() -> anyhow::Result<Output> {
    let checks = run_all();
    let passed = checks.iter().all(|c| c.passed);
    let mut table = Table::new(&["name", "passed", "cases", "detail"]);
    for c in &checks {
        table.push(vec![c.name.clone(), cell(c.passed), cell(c.cases), c.detail.clone()]);
    }
    Output::document(
        &SelftestReport { passed, checks },
        table,
        if passed { Status::Complete } else { Status::Violation },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cocycle_choices() {
        assert_eq!("yd".parse(), Ok(CocycleChoice::Yd));
        assert_eq!("constant:+1".parse(), Ok(CocycleChoice::Constant(1)));
        assert_eq!("constant:-1".parse(), Ok(CocycleChoice::Constant(-1)));
        assert!("constant:2".parse::<CocycleChoice>().is_err());
    }

    #[test]
    fn characters_by_name_or_index() {
        let group: Vec<SignedElement> = GroupSpec::b(2).elements().collect();
        assert!(pick_character("trivial", &group).unwrap().is_trivial());
        // W(B₂) has four ±1 characters
        assert!(pick_character("3", &group).is_ok());
        assert!(pick_character("4", &group).is_err());
        assert!(pick_character("bogus", &group).is_err());
    }
}
