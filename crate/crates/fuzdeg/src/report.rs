//! Report documents for the CLI: analysis of a single group, the reference
//! table, and verification output, each renderable as JSON, CSV, or
//! markdown. Identical inputs produce byte-identical output.

use serde::Serialize;

use crate::classes::{count_classes, enumerate_classes, export_census, PerTopEntry};
use crate::config::{OutputFormat, RunConfig};
use crate::degree::{compute_sd, Fraction};
use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::lattice::SubgroupLattice;
use crate::oracle::verify::{DiscrepancyNote, VerificationReport};
use crate::reference::{claims_for_spec, check_claim, ClaimRow};

/// Exact fraction plus an informational 6-place decimal.
#[derive(Debug, Clone, Serialize)]
pub struct FractionView {
    pub num: u64,
    pub den: u64,
    pub decimal: String,
}

impl From<Fraction> for FractionView {
    fn from(f: Fraction) -> Self {
        FractionView {
            num: f.num,
            den: f.den,
            decimal: f.decimal(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalyzeReport {
    pub group: String,
    pub spec: String,
    pub order: usize,
    pub abelian: bool,
    pub subgroup_count: usize,
    pub s: u64,
    pub longest_chain: usize,
    pub sd: FractionView,
    pub permutable_pairs: u64,
    pub n_count: u64,
    pub qn_count: u64,
    pub s_star: Vec<PerTopEntry>,
    pub hasse_edges: Vec<(usize, usize)>,
    pub discrepancies: Vec<DiscrepancyNote>,
}

/// Run the full analysis pipeline for a group spec.
pub fn analyze(spec: &GroupSpec, config: &RunConfig) -> Result<AnalyzeReport> {
    let group = spec.build(config.max_order)?;
    let abelian = group.is_abelian();
    let lat = SubgroupLattice::new(group);
    let census = count_classes(&lat);
    let classes = enumerate_classes(&lat, config.class_cap)?;
    let degree = compute_sd(&lat, &classes, config.pair_cap)?;
    let discrepancies = claims_for_spec(spec)
        .iter()
        .map(|c| check_claim(c, config.max_order, config.class_cap, config.pair_cap))
        .collect::<Result<Vec<ClaimRow>>>()?
        .into_iter()
        .filter(|row| !row.matched)
        .map(|row| row.to_discrepancy())
        .collect();
    Ok(AnalyzeReport {
        group: lat.group().label().to_string(),
        spec: spec.to_string(),
        order: lat.group().order(),
        abelian,
        subgroup_count: lat.len(),
        s: census.total,
        longest_chain: census.longest_chain,
        sd: degree.sd.into(),
        permutable_pairs: degree.permutable_pairs,
        n_count: degree.n_count,
        qn_count: degree.qn_count,
        s_star: export_census(&lat, &census).per_top,
        hasse_edges: lat.hasse_edges(),
        discrepancies,
    })
}

pub fn render_analyze(report: &AnalyzeReport, format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Json => Ok(to_json(report)),
        OutputFormat::Csv => Ok(analyze_csv(report)),
        OutputFormat::Markdown => Ok(analyze_markdown(report)),
        _ => Err(Error::InvalidSpec(
            "analyze supports json, csv, and markdown output".into(),
        )),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("report serialization");
    out.push('\n');
    out
}

fn csv_escape(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn analyze_csv(r: &AnalyzeReport) -> String {
    let mut out = String::from("key,value\n");
    for (k, v) in [
        ("group", r.group.clone()),
        ("spec", r.spec.clone()),
        ("order", r.order.to_string()),
        ("abelian", r.abelian.to_string()),
        ("subgroup_count", r.subgroup_count.to_string()),
        ("s", r.s.to_string()),
        ("longest_chain", r.longest_chain.to_string()),
        ("sd_num", r.sd.num.to_string()),
        ("sd_den", r.sd.den.to_string()),
        ("sd_decimal", r.sd.decimal.clone()),
        ("permutable_pairs", r.permutable_pairs.to_string()),
        ("n_count", r.n_count.to_string()),
        ("qn_count", r.qn_count.to_string()),
    ] {
        out.push_str(&format!("{k},{}\n", csv_escape(&v)));
    }
    for entry in &r.s_star {
        out.push_str(&format!(
            "s_star[{}],{}\n",
            csv_escape(&entry.name),
            entry.s_star
        ));
    }
    for (child, parent) in &r.hasse_edges {
        out.push_str(&format!("hasse_edge,{child}->{parent}\n"));
    }
    for d in &r.discrepancies {
        out.push_str(&format!(
            "discrepancy,{}\n",
            csv_escape(&format!(
                "{}: reported {} ({}), computed {}",
                d.quantity, d.paper_value, d.paper_location, d.computed_value
            ))
        ));
    }
    out
}

fn analyze_markdown(r: &AnalyzeReport) -> String {
    let mut out = format!("# {} ({})\n\n", r.group, r.spec);
    out.push_str(&format!(
        "- order: {}\n- abelian: {}\n- subgroups: {}\n- distinct fuzzy subgroups s(G): {}\n\
         - longest chain: {}\n- sd(G): {}/{} = {}\n- permutable ordered pairs: {}\n\
         - all-normal classes: {}\n- all-quasinormal classes: {}\n\n",
        r.order,
        r.abelian,
        r.subgroup_count,
        r.s,
        r.longest_chain,
        r.sd.num,
        r.sd.den,
        r.sd.decimal,
        r.permutable_pairs,
        r.n_count,
        r.qn_count
    ));
    out.push_str("## Classes per support\n\n| subgroup | size | s* |\n|---|---|---|\n");
    for entry in &r.s_star {
        out.push_str(&format!(
            "| {} | {} | {} |\n",
            entry.name, entry.size, entry.s_star
        ));
    }
    if !r.discrepancies.is_empty() {
        out.push_str("\n## Discrepancies against reference values\n\n");
        out.push_str("| quantity | reported | computed | location |\n|---|---|---|---|\n");
        for d in &r.discrepancies {
            out.push_str(&format!(
                "| {} | {} | {} | {} |\n",
                d.quantity, d.paper_value, d.computed_value, d.paper_location
            ));
        }
    }
    out
}

pub fn render_paper_table(rows: &[ClaimRow], format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Json => Ok(to_json(&rows)),
        OutputFormat::Csv => {
            let mut out = String::from("claim,paper_value,computed_value,matched,paper_location\n");
            for r in rows {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    csv_escape(&r.claim),
                    csv_escape(&r.paper_value),
                    csv_escape(&r.computed_value),
                    r.matched,
                    csv_escape(&r.paper_location)
                ));
            }
            Ok(out)
        }
        OutputFormat::Markdown => {
            let mut out = String::from(
                "| claim | reported value | computed value | match | location |\n|---|---|---|---|---|\n",
            );
            for r in rows {
                out.push_str(&format!(
                    "| {} | {} | {} | {} | {} |\n",
                    r.claim,
                    r.paper_value,
                    r.computed_value,
                    if r.matched { "yes" } else { "NO" },
                    r.paper_location
                ));
            }
            Ok(out)
        }
        _ => Err(Error::InvalidSpec(
            "paper-table supports json, csv, and markdown output".into(),
        )),
    }
}

pub fn render_verification(report: &VerificationReport, format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Json => Ok(to_json(report)),
        OutputFormat::Text | OutputFormat::Markdown => {
            let mut out = format!(
                "verify {}: order {}, s = {}, {} membership maps at grid depth {}\n",
                report.group, report.order, report.s, report.oracle_maps, report.grid_depth
            );
            for s in &report.suites {
                out.push_str(&format!(
                    "[{}] {} ({} checks)\n",
                    if s.passed { "PASS" } else { "FAIL" },
                    s.name,
                    s.checked
                ));
                if let Some(w) = &s.counterexample {
                    out.push_str(&format!("       counterexample: {w}\n"));
                }
            }
            for n in &report.notes {
                out.push_str(&format!(
                    "note: {} — reported {} ({}), computed {}\n",
                    n.quantity, n.paper_value, n.paper_location, n.computed_value
                ));
            }
            out.push_str(if report.all_passed {
                "all suites passed\n"
            } else {
                "SUITE FAILURES PRESENT\n"
            });
            Ok(out)
        }
        _ => Err(Error::InvalidSpec(
            "verify supports text and json output".into(),
        )),
    }
}

/// Lattice export (DOT or JSON) for the export-lattice command.
pub fn render_lattice(spec: &GroupSpec, config: &RunConfig) -> Result<String> {
    let group = spec.build(config.max_order)?;
    let lat = SubgroupLattice::new(group);
    match config.format {
        OutputFormat::Dot => Ok(lat.to_dot()),
        OutputFormat::Json => Ok(to_json(&lat.export())),
        _ => Err(Error::InvalidSpec(
            "export-lattice supports dot and json output".into(),
        )),
    }
}
