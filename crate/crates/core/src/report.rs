//! Run configuration, report builders and JSON emission. Every report is an
//! envelope `{format, kind, ...}` validated by a schema under `schema/`.

use serde::Serialize;
use thiserror::Error;

use crate::cmcheck::{build_subject, lemma_checks, BuiltGroup, CMReport, CmError, LemmaReport, Subject};
use crate::gfield::{build_tower_with, FieldError, FieldSpec};
use crate::grp::GroupTable;
use crate::resolve::{minimal_resolution, ResolveError};
use crate::sylow::{sz_gcd_check, sz_theta, SylowError};

pub const REPORT_FORMAT: &str = "sylowcm-report/1";
pub const DEFAULT_MAX_DEGREE: usize = 8;

pub const CM_CHECK_SCHEMA: &str = include_str!("../schema/cm-check.schema.json");
pub const LEMMAS_SCHEMA: &str = include_str!("../schema/lemmas.schema.json");
pub const BETTI_SCHEMA: &str = include_str!("../schema/betti.schema.json");
pub const FIELD_SCHEMA: &str = include_str!("../schema/field.schema.json");
pub const SYLOW_SCHEMA: &str = include_str!("../schema/sylow.schema.json");

pub fn schema_for(kind: &str) -> Option<&'static str> {
    Some(match kind {
        "cm-check" => CM_CHECK_SCHEMA,
        "lemmas" => LEMMAS_SCHEMA,
        "betti" => BETTI_SCHEMA,
        "field" => FIELD_SCHEMA,
        "sylow" => SYLOW_SCHEMA,
        _ => return None,
    })
}

#[derive(Debug, Error)]
pub enum ReportError {
    #[error(transparent)]
    Cm(#[from] CmError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Sylow(#[from] SylowError),
    #[error(transparent)]
    Resolve(#[from] ResolveError),
}

/// Caps and switches shared by all subcommands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub max_degree: usize,
    /// Unlocks psu3 n = 4 and sz n = 2.
    pub large: bool,
    /// Overrides the defining polynomial of the largest field.
    pub poly: Option<u32>,
    /// Adds per-stage wall-clock times, which makes reports non-reproducible.
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { max_degree: DEFAULT_MAX_DEGREE, large: false, poly: None, timings: false }
    }
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    format: &'static str,
    kind: &'a str,
    #[serde(flatten)]
    body: &'a T,
}

/// Pretty JSON with a trailing newline; struct field order fixes the key order.
pub fn emit_report<T: Serialize>(kind: &str, body: &T) -> String {
    let env = Envelope { format: REPORT_FORMAT, kind, body };
    let mut s = serde_json::to_string_pretty(&env).expect("report types serialize");
    s.push('\n');
    s
}

#[derive(Clone, Debug, Serialize)]
pub struct FieldDescription {
    pub degree: u32,
    pub polynomial: String,
    pub size: usize,
}

impl From<FieldSpec> for FieldDescription {
    fn from(f: FieldSpec) -> Self {
        FieldDescription { degree: f.degree(), polynomial: f.polynomial_string(), size: f.size() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FieldReport {
    pub n: u32,
    pub subfield: FieldDescription,
    pub field: FieldDescription,
    /// Image of the subfield generator in the big field.
    pub subfield_generator_image: u32,
    pub rho: u32,
    pub rho_order: u64,
    pub rho_conjugate: u32,
    pub lambda: u32,
    pub lambda_in_subfield: u32,
    /// Elements of the big field fixed by conjugation.
    pub fixed_field_size: usize,
}

pub fn field_report(n: u32, config: &RunConfig) -> Result<FieldReport, ReportError> {
    let t = build_tower_with(n, config.poly)?;
    let big = t.big();
    Ok(FieldReport {
        n,
        subfield: t.small().into(),
        field: big.into(),
        subfield_generator_image: t.embed(t.small().generator()).bits(),
        rho: t.rho().bits(),
        rho_order: t.rho().order().unwrap_or(0),
        rho_conjugate: t.conj(t.rho()).bits(),
        lambda: t.lambda().bits(),
        lambda_in_subfield: t.to_subfield(t.lambda())?.bits(),
        fixed_field_size: big.elements().filter(|&x| t.conj(x) == x).count(),
    })
}

pub fn subject_for(family: &str, n: u32, config: &RunConfig) -> Option<Subject> {
    let (large, poly) = (config.large, config.poly);
    match family {
        "psu3" => Some(Subject::Psu3 { n, large, poly }),
        "sz" => Some(Subject::Sz { n, large, poly }),
        _ => None,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SylowReport {
    pub family: String,
    pub n: u32,
    pub order: usize,
    pub center_order: usize,
    pub identity_label: String,
    pub generators: Vec<String>,
    pub table_file: Option<String>,
}

pub fn sylow_report(built: &BuiltGroup, table_file: Option<String>) -> SylowReport {
    let g = &built.table;
    SylowReport {
        family: built.family.as_str().to_string(),
        n: built.n.unwrap_or(0),
        order: g.order(),
        center_order: built.defined_z.as_ref().map_or(0, |z| z.order()),
        identity_label: g.label(g.identity()).to_string(),
        generators: g.generating_set().iter().map(|&x| g.label(x).to_string()).collect(),
        table_file,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuzukiArithmetic {
    pub theta: u64,
    pub gcd: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmasReport {
    pub family: String,
    pub n: Option<u32>,
    pub group: String,
    pub lemmas: LemmaReport,
    pub suzuki: Option<SuzukiArithmetic>,
    pub passed: bool,
}

pub fn lemmas_report(subject: &Subject) -> Result<LemmasReport, ReportError> {
    let built = build_subject(subject)?;
    let lemmas = lemma_checks(&built)?;
    let suzuki = match subject {
        Subject::Sz { n, .. } => Some(SuzukiArithmetic { theta: sz_theta(*n)?, gcd: sz_gcd_check(*n)? }),
        _ => None,
    };
    let passed = lemmas.family_checks_pass() && suzuki.as_ref().is_none_or(|s| s.gcd == 1);
    Ok(LemmasReport {
        family: built.family.as_str().to_string(),
        n: built.n,
        group: built.name,
        lemmas,
        suzuki,
        passed,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct BettiReport {
    pub group: String,
    pub order: usize,
    pub max_degree: usize,
    pub betti: Vec<usize>,
}

pub fn betti_report(name: &str, g: &GroupTable, max_degree: usize) -> Result<BettiReport, ReportError> {
    let res = minimal_resolution(g, max_degree)?;
    Ok(BettiReport { group: name.to_string(), order: g.order(), max_degree, betti: res.ranks().to_vec() })
}

pub fn cm_check_json(report: &CMReport) -> String {
    emit_report("cm-check", report)
}
