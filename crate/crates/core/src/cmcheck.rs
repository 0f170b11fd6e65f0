//! Cohen–Macaulay certificates up to a degree bound: Duflot classes from a
//! central elementary abelian subgroup, the regular-sequence test on H*(G)
//! and the Hilbert series identity that freeness forces.

use std::time::Instant;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::f2la::{BitMatrix, BitVector, Echelon};
use crate::fixtures;
use crate::grp::{
    center, central_involution_property, maximal_elementary_abelians, GroupError, GroupTable, Subgroup,
};
use crate::resolve::{
    assert_lift_independent, cup_chain_map, minimal_resolution, monomial_index, restriction_with, LiftChoice,
    Resolution, ResolveError, Restriction,
};
use crate::sylow::{
    psu3_extension_check, psu3_sylow_with, sz_extension_check, sz_sylow_with, ExtensionReport, SylowError,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CmError {
    #[error("no power x{index}^(2^l) lies in the image of restriction up to degree {max_degree}")]
    Undetermined { index: usize, max_degree: usize },
    #[error("the central elementary abelian subgroup is trivial")]
    TrivialCenter,
    #[error("unknown fixture {0}")]
    UnknownFixture(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Sylow(#[from] SylowError),
    #[error(transparent)]
    Resolve(#[from] ResolveError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

fn bits<S: Serializer>(v: &BitVector, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_bools().iter().map(|&b| if b { '1' } else { '0' }).collect::<String>())
}

/// A class `ζ_i ∈ H^{2^l}(G)` restricting to `x_i^{2^l}`, with `l` minimal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DuflotDatum {
    pub index: usize,
    pub l: u32,
    pub degree: usize,
    #[serde(serialize_with = "bits")]
    pub preimage: BitVector,
}

pub fn find_power_in_image(rest: &Restriction, i: usize, max_degree: usize) -> Result<DuflotDatum, CmError> {
    let r = rest.rank();
    let mut l = 0u32;
    while (1usize << l) <= max_degree.min(rest.matrices.len() - 1) {
        let degree = 1usize << l;
        let mut alpha = vec![0; r];
        alpha[i] = degree;
        let m = &rest.matrices[degree];
        let target = BitVector::unit(m.rows(), monomial_index(&alpha));
        if let Some(preimage) = m.solve(&target).expect("restriction matrix dimensions") {
            return Ok(DuflotDatum { index: i, l, degree, preimage });
        }
        l += 1;
    }
    Err(CmError::Undetermined { index: i, max_degree })
}

pub fn duflot_subalgebra(rest: &Restriction, max_degree: usize) -> Result<Vec<DuflotDatum>, CmError> {
    if rest.rank() == 0 {
        return Err(CmError::TrivialCenter);
    }
    (0..rest.rank()).map(|i| find_power_in_image(rest, i, max_degree)).collect()
}

/// Another preimage of the same monomial, when the restriction has a kernel in that degree.
pub fn second_preimage(rest: &Restriction, datum: &DuflotDatum) -> Option<DuflotDatum> {
    let kernel = rest.matrices[datum.degree].kernel_basis();
    (kernel.rows() > 0).then(|| {
        let mut p = datum.preimage.clone();
        p.xor_assign(kernel.row(0));
        DuflotDatum { preimage: p, ..datum.clone() }
    })
}

/// Multiplication by `ζ` as matrices H^k → H^{k+d} for `k + d ≤ D`.
#[derive(Clone, Debug)]
pub struct CupTable {
    pub degree: usize,
    pub matrices: Vec<BitMatrix>,
}

/// Builds the table from the first lift, and checks it against a perturbed lift.
pub fn cup_table(res: &Resolution, datum: &DuflotDatum, max_degree: usize) -> Result<CupTable, CmError> {
    let d = datum.degree;
    if d > max_degree {
        return Ok(CupTable { degree: d, matrices: Vec::new() });
    }
    let top = max_degree - d;
    let first = cup_chain_map(res, &datum.preimage, d, top, LiftChoice::First)?;
    let seed = 0x6c69_6674 ^ (datum.index as u64) << 8 ^ d as u64;
    let other = cup_chain_map(res, &datum.preimage, d, top, LiftChoice::Perturbed(seed))?;
    assert_lift_independent(&first, &other)?;
    Ok(CupTable { degree: d, matrices: (0..=top).map(|k| first.cohomology_matrix(k)).collect() })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub degree: usize,
    #[serde(serialize_with = "bits")]
    pub kernel_vector: BitVector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularStep {
    pub index: usize,
    pub degree: usize,
    /// Degrees `k` in which injectivity H^k/J → H^{k+d}/J was tested.
    pub tested_up_to: Option<usize>,
    pub injective: bool,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularSequence {
    pub steps: Vec<RegularStep>,
    pub quotient_dims: Vec<usize>,
}

impl RegularSequence {
    pub fn all_injective(&self) -> bool {
        self.steps.iter().all(|s| s.injective)
    }
}

/// Runs the test with precomputed tables, in the order given by `order`.
pub fn regular_sequence_with(
    betti: &[usize],
    duflot: &[DuflotDatum],
    tables: &[CupTable],
    order: &[usize],
    max_degree: usize,
) -> RegularSequence {
    let mut ideal: Vec<Echelon> = (0..=max_degree).map(|k| Echelon::new(betti[k])).collect();
    let mut steps = Vec::new();
    for &i in order {
        let table = &tables[i];
        let d = table.degree;
        let mut step = RegularStep {
            index: duflot[i].index,
            degree: d,
            tested_up_to: max_degree.checked_sub(d),
            injective: true,
            witness: None,
        };
        for (k, a) in table.matrices.iter().enumerate() {
            let bk = betti[k];
            let mut solver = Echelon::with_tags(betti[k + d], bk);
            let mut kernel = Vec::new();
            for t in 0..bk {
                let mut y = a.column(t);
                ideal[k + d].reduce(&mut y);
                if let Some(dep) = solver.insert_tagged(y, BitVector::unit(bk, t)) {
                    kernel.push(dep);
                }
            }
            if let Some(v) = kernel.into_iter().find(|v| !ideal[k].contains(v)) {
                step.injective = false;
                step.witness.get_or_insert(Witness { degree: k, kernel_vector: v });
            }
        }
        steps.push(step);
        for (k, a) in table.matrices.iter().enumerate() {
            for t in 0..betti[k] {
                ideal[k + d].insert(a.column(t));
            }
        }
    }
    let quotient_dims = (0..=max_degree).map(|k| betti[k] - ideal[k].rank()).collect();
    RegularSequence { steps, quotient_dims }
}

pub fn regular_sequence_test(
    res: &Resolution,
    duflot: &[DuflotDatum],
    max_degree: usize,
) -> Result<RegularSequence, CmError> {
    let tables = duflot.iter().map(|z| cup_table(res, z, max_degree)).collect::<Result<Vec<_>, _>>()?;
    let order: Vec<usize> = (0..duflot.len()).collect();
    Ok(regular_sequence_with(res.ranks(), duflot, &tables, &order, max_degree))
}

/// `Σ b_k t^k = Q(t) / Π (1 − t^{d_i})` up to degree `D − max d_i`.
pub fn hilbert_check(betti: &[usize], degrees: &[usize], quotient_dims: &[usize], max_degree: usize) -> bool {
    let top = degrees.iter().copied().max().unwrap_or(0);
    let Some(limit) = max_degree.checked_sub(top) else { return true };
    let mut series: Vec<u64> = (0..=limit).map(|k| quotient_dims.get(k).copied().unwrap_or(0) as u64).collect();
    for &d in degrees {
        // Multiply by 1/(1 − t^d) = 1 + t^d + t^{2d} + …
        for k in d..=limit {
            series[k] += series[k - d];
        }
    }
    (0..=limit).all(|k| betti.get(k).map(|&b| b as u64) == Some(series[k]))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Psu3,
    Sz,
    Fixture,
}

impl Family {
    pub fn as_str(&self) -> &'static str {
        match self {
            Family::Psu3 => "psu3",
            Family::Sz => "sz",
            Family::Fixture => "fixture",
        }
    }
}

/// What to build: a Sylow family member or a named fixture.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subject {
    Psu3 { n: u32, large: bool, poly: Option<u32> },
    Sz { n: u32, large: bool, poly: Option<u32> },
    Fixture(String),
}

/// A built group, with the defined central subgroup and extension data for the families.
#[derive(Clone, Debug)]
pub struct BuiltGroup {
    pub family: Family,
    pub n: Option<u32>,
    pub name: String,
    pub table: GroupTable,
    pub defined_z: Option<Subgroup>,
    pub expected_order: Option<usize>,
    pub expected_two_rank: Option<usize>,
    pub extension: Option<ExtensionReport>,
}

pub fn build_subject(subject: &Subject) -> Result<BuiltGroup, CmError> {
    Ok(match subject {
        Subject::Psu3 { n, large, poly } => {
            let k = psu3_sylow_with(*n, *large, *poly)?;
            let extension = psu3_extension_check(&k);
            BuiltGroup {
                family: Family::Psu3,
                n: Some(*n),
                name: format!("psu3-{n}"),
                table: k.table,
                defined_z: Some(k.z),
                expected_order: Some(1 << (3 * n)),
                expected_two_rank: Some(*n as usize),
                extension: Some(extension),
            }
        }
        Subject::Sz { n, large, poly } => {
            let s = sz_sylow_with(*n, *large, *poly)?;
            let extension = sz_extension_check(&s);
            BuiltGroup {
                family: Family::Sz,
                n: Some(*n),
                name: format!("sz-{n}"),
                table: s.table,
                defined_z: Some(s.z),
                expected_order: Some(1 << (4 * n + 2)),
                expected_two_rank: Some(2 * *n as usize + 1),
                extension: Some(extension),
            }
        }
        Subject::Fixture(name) => BuiltGroup {
            family: Family::Fixture,
            n: None,
            name: name.clone(),
            table: fixtures::by_name(name).ok_or_else(|| CmError::UnknownFixture(name.clone()))?,
            defined_z: None,
            expected_order: None,
            expected_two_rank: None,
            extension: None,
        },
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionSummary {
    pub squares_checked: usize,
    pub commutators_checked: usize,
    pub basis_relations_checked: usize,
    pub counterexamples: Vec<String>,
}

impl From<&ExtensionReport> for ExtensionSummary {
    fn from(e: &ExtensionReport) -> Self {
        ExtensionSummary {
            squares_checked: e.squares_checked,
            commutators_checked: e.commutators_checked,
            basis_relations_checked: e.basis_relations_checked,
            counterexamples: e.counterexamples.clone(),
        }
    }
}

/// Structural facts about the group that the certificate relies on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub group_order: usize,
    pub expected_order: Option<usize>,
    pub center_order: usize,
    pub center_elementary_abelian: bool,
    pub defined_z_equals_center: Option<bool>,
    pub quotient_by_center_elementary_abelian: bool,
    pub central_involution_property: bool,
    pub maximal_elementary_abelian_count: usize,
    pub unique_maximal_elementary_abelian_is_center: bool,
    pub two_rank: usize,
    pub expected_two_rank: Option<usize>,
    pub central_elementary_rank: usize,
    pub extension: Option<ExtensionSummary>,
}

impl LemmaReport {
    /// Everything a family member is claimed to satisfy.
    pub fn family_checks_pass(&self) -> bool {
        self.expected_order.is_none_or(|o| o == self.group_order)
            && self.expected_two_rank.is_none_or(|r| r == self.two_rank)
            && self.defined_z_equals_center.unwrap_or(true)
            && self.extension.as_ref().is_none_or(|e| e.counterexamples.is_empty())
            && self.central_involution_property
            && self.unique_maximal_elementary_abelian_is_center
            && self.quotient_by_center_elementary_abelian
    }
}

/// Elements of order at most 2 in the center.
pub fn central_elementary_subgroup(g: &GroupTable) -> Subgroup {
    let z = center(g);
    g.subgroup(z.members().iter().copied().filter(|&x| g.mul(x, x) == g.identity()))
        .expect("involutions of an abelian group form a subgroup")
}

pub fn lemma_checks(built: &BuiltGroup) -> Result<LemmaReport, CmError> {
    let g = &built.table;
    let z = center(g);
    let maximal = maximal_elementary_abelians(g)?;
    let two_rank = maximal.iter().map(Subgroup::rank).max().unwrap_or(0);
    Ok(LemmaReport {
        group_order: g.order(),
        expected_order: built.expected_order,
        center_order: z.order(),
        center_elementary_abelian: g.is_elementary_abelian(&z),
        defined_z_equals_center: built.defined_z.as_ref().map(|d| *d == z),
        quotient_by_center_elementary_abelian: g.quotient_is_elementary_abelian(&z),
        central_involution_property: central_involution_property(g),
        maximal_elementary_abelian_count: maximal.len(),
        unique_maximal_elementary_abelian_is_center: maximal.len() == 1 && maximal[0] == z,
        two_rank,
        expected_two_rank: built.expected_two_rank,
        central_elementary_rank: central_elementary_subgroup(g).rank(),
        extension: built.extension.as_ref().map(ExtensionSummary::from),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsistencyChecks {
    /// Every chain map was checked against the boundaries.
    pub chain_maps_commute: bool,
    /// Cup tables agreed for two different lifts of every Duflot class.
    pub cup_lift_independent: bool,
    /// Restriction matrices agreed for two different comparison maps.
    pub restriction_lift_independent: bool,
    /// Restriction is multiplicative on products of Duflot classes.
    pub restriction_multiplicative: bool,
    /// Number of orderings of the sequence tested; all gave the same quotient.
    pub permutations_tested: usize,
    pub permutation_independent: bool,
    /// Whether an alternative preimage existed, and whether it gave the same outcome.
    pub second_preimage_tested: bool,
    pub second_preimage_agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CMReport {
    pub family: Family,
    pub n: Option<u32>,
    pub group: String,
    pub max_degree: usize,
    pub group_order: usize,
    pub center_rank: usize,
    pub two_rank: usize,
    pub lemmas: LemmaReport,
    pub betti: Vec<usize>,
    pub restriction_ranks: Vec<usize>,
    pub duflot: Vec<DuflotDatum>,
    pub common_l: Option<u32>,
    pub regular: Vec<RegularStep>,
    pub quotient_dims: Vec<usize>,
    pub quotient_top_degree: Option<usize>,
    pub hilbert_ok: bool,
    pub hilbert_checked_up_to: Option<usize>,
    pub consistency: ConsistencyChecks,
    pub verdict: String,
    pub notes: Vec<String>,
    /// Wall-clock time per stage; empty unless requested, so reports stay reproducible.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub timings: Vec<StageTiming>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StageTiming {
    pub stage: String,
    pub seconds: f64,
}

impl Eq for StageTiming {}

/// Records stage durations when enabled.
#[derive(Debug)]
pub struct Stopwatch {
    enabled: bool,
    last: Instant,
    pub stages: Vec<StageTiming>,
}

impl Stopwatch {
    pub fn new(enabled: bool) -> Self {
        Stopwatch { enabled, last: Instant::now(), stages: Vec::new() }
    }

    pub fn lap(&mut self, stage: &str) {
        if self.enabled {
            let now = Instant::now();
            self.stages.push(StageTiming { stage: stage.to_string(), seconds: (now - self.last).as_secs_f64() });
            self.last = now;
        }
    }
}

impl CMReport {
    pub fn certified(&self) -> bool {
        self.verdict.starts_with("CM-certified")
    }

    pub fn failed(&self) -> bool {
        self.verdict == "FAILED"
    }
}

/// `res(a·b) = res(a)·res(b)` for all pairs of Duflot classes within range.
fn restriction_multiplicative(
    rest: &Restriction,
    duflot: &[DuflotDatum],
    tables: &[CupTable],
) -> bool {
    let r = rest.rank();
    for (a, ta) in duflot.iter().zip(tables) {
        for b in duflot {
            let Some(m) = ta.matrices.get(b.degree) else { continue };
            let product = m.mul_vec(&b.preimage).expect("cup table width");
            let lhs = rest.matrices[a.degree + b.degree].mul_vec(&product).expect("restriction width");
            let ra = rest.matrices[a.degree].mul_vec(&a.preimage).expect("restriction width");
            let rb = rest.matrices[b.degree].mul_vec(&b.preimage).expect("restriction width");
            let rhs = crate::resolve::poly_mul(r, a.degree, &ra, b.degree, &rb);
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

pub fn cm_report(subject: &Subject, max_degree: usize) -> Result<CMReport, CmError> {
    let built = build_subject(subject)?;
    cm_report_for(&built, max_degree)
}

pub fn cm_report_for(built: &BuiltGroup, max_degree: usize) -> Result<CMReport, CmError> {
    cm_report_timed(built, max_degree, &mut Stopwatch::new(false))
}

/// The full pipeline; stage times are appended to `watch` and copied into the report.
pub fn cm_report_timed(built: &BuiltGroup, max_degree: usize, watch: &mut Stopwatch) -> Result<CMReport, CmError> {
    let g = &built.table;
    let lemmas = lemma_checks(built)?;
    watch.lap("lemmas");
    let mut notes = Vec::new();
    let z = match &built.defined_z {
        Some(z) if lemmas.defined_z_equals_center == Some(true) => z.clone(),
        _ => central_elementary_subgroup(g),
    };
    let res = minimal_resolution(g, max_degree)?;
    watch.lap("resolution");
    let rest = restriction_with(&res, &z, max_degree, LiftChoice::First)?;
    let other = restriction_with(&res, &z, max_degree, LiftChoice::Perturbed(0x7265_7374))?;
    watch.lap("restriction");
    let restriction_lift_independent = rest.matrices == other.matrices;
    if !restriction_lift_independent {
        return Err(CmError::Inconsistent("restriction depends on the comparison map".into()));
    }
    let center_rank = rest.rank();
    let two_rank = lemmas.two_rank;
    if !lemmas.central_involution_property {
        notes.push("central_involution_property fails: the sufficient condition for the CM argument does not hold".into());
    }
    if center_rank < two_rank {
        notes.push(format!(
            "center rank {center_rank} < 2-rank {two_rank}: a Duflot sequence from the center cannot reach the Krull dimension"
        ));
    }
    if built.name == "sd16" {
        notes.push("the semidihedral group of order 16 is known not to be CM (context, not computed)".into());
    }
    if matches!(built.family, Family::Psu3 | Family::Sz) {
        notes.push("for the full simple group the CM property follows from the Sylow subgroup (stated, not computed)".into());
    }

    let mut report = CMReport {
        family: built.family,
        n: built.n,
        group: built.name.clone(),
        max_degree,
        group_order: g.order(),
        center_rank,
        two_rank,
        lemmas,
        betti: res.ranks().to_vec(),
        restriction_ranks: rest.matrices.iter().map(BitMatrix::rank).collect(),
        duflot: Vec::new(),
        common_l: None,
        regular: Vec::new(),
        quotient_dims: Vec::new(),
        quotient_top_degree: None,
        hilbert_ok: false,
        hilbert_checked_up_to: None,
        consistency: ConsistencyChecks {
            chain_maps_commute: true,
            cup_lift_independent: true,
            restriction_lift_independent,
            restriction_multiplicative: true,
            permutations_tested: 0,
            permutation_independent: true,
            second_preimage_tested: false,
            second_preimage_agrees: true,
        },
        verdict: String::new(),
        notes,
        timings: Vec::new(),
    };

    let duflot = match duflot_subalgebra(&rest, max_degree) {
        Ok(d) => d,
        Err(CmError::Undetermined { .. }) => {
            report.verdict = format!("undetermined-at-degree-{max_degree}");
            watch.lap("duflot");
            report.timings = watch.stages.clone();
            return Ok(report);
        }
        Err(e) => return Err(e),
    };
    watch.lap("duflot");
    let tables = duflot.iter().map(|z| cup_table(&res, z, max_degree)).collect::<Result<Vec<_>, _>>()?;
    let betti = res.ranks();
    let identity: Vec<usize> = (0..duflot.len()).collect();
    let seq = regular_sequence_with(betti, &duflot, &tables, &identity, max_degree);
    watch.lap("regular_sequence");

    if duflot.len() <= 3 {
        for perm in permutations(duflot.len()) {
            let other = regular_sequence_with(betti, &duflot, &tables, &perm, max_degree);
            report.consistency.permutations_tested += 1;
            if other.quotient_dims != seq.quotient_dims || other.all_injective() != seq.all_injective() {
                report.consistency.permutation_independent = false;
            }
        }
    }
    let alternatives: Vec<DuflotDatum> =
        duflot.iter().map(|d| second_preimage(&rest, d).unwrap_or_else(|| d.clone())).collect();
    if alternatives != duflot {
        report.consistency.second_preimage_tested = true;
        let alt = regular_sequence_test(&res, &alternatives, max_degree)?;
        report.consistency.second_preimage_agrees =
            alt.quotient_dims == seq.quotient_dims && alt.all_injective() == seq.all_injective();
    }
    report.consistency.restriction_multiplicative = restriction_multiplicative(&rest, &duflot, &tables);
    watch.lap("consistency");

    let degrees: Vec<usize> = duflot.iter().map(|d| d.degree).collect();
    let hilbert_ok = hilbert_check(betti, &degrees, &seq.quotient_dims, max_degree);
    if seq.all_injective() && !hilbert_ok {
        return Err(CmError::Inconsistent("regular sequence passes but the Hilbert identity fails".into()));
    }
    let c = &report.consistency;
    if !(c.permutation_independent && c.second_preimage_agrees && c.restriction_multiplicative) {
        return Err(CmError::Inconsistent(format!("{c:?}")));
    }

    report.common_l = duflot.iter().map(|d| d.l).max();
    report.hilbert_checked_up_to = max_degree.checked_sub(degrees.iter().copied().max().unwrap_or(0));
    report.quotient_top_degree = seq.quotient_dims.iter().rposition(|&q| q > 0);
    report.quotient_dims = seq.quotient_dims.clone();
    report.hilbert_ok = hilbert_ok;
    report.verdict = if !seq.all_injective() {
        "FAILED".to_string()
    } else if center_rank == two_rank {
        format!("CM-certified-to-degree-{max_degree}")
    } else {
        "not-certified".to_string()
    };
    report.regular = seq.steps;
    report.duflot = duflot;
    watch.lap("hilbert");
    report.timings = watch.stages.clone();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resolve::restriction_matrices;

    fn fixture_report(name: &str, d: usize) -> CMReport {
        cm_report(&Subject::Fixture(name.into()), d).unwrap()
    }

    #[test]
    fn hilbert_examples() {
        assert!(hilbert_check(&[1; 9], &[1], &[1, 0, 0, 0, 0, 0, 0, 0, 0], 8));
        let q8 = [1, 2, 2, 1, 1, 2, 2, 1, 1];
        assert!(hilbert_check(&q8, &[4], &[1, 2, 2, 1, 0, 0, 0, 0, 0], 8));
        assert!(!hilbert_check(&q8, &[4], &[1, 2, 1, 1, 0, 0, 0, 0, 0], 8));
        assert!(!hilbert_check(&q8, &[4], &[1, 2, 2, 1, 1, 0, 0, 0, 0], 8));
        // (Z/2)²: 1/(1−t)² = Σ (k+1) t^k.
        assert!(hilbert_check(&[1, 2, 3, 4, 5], &[1, 1], &[1, 0, 0, 0, 0], 4));
    }

    #[test]
    fn permutation_list() {
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(1), vec![vec![0]]);
    }

    #[test]
    fn elementary_duflot_is_identity() {
        let g = fixtures::elementary_abelian(2);
        let res = minimal_resolution(&g, 4).unwrap();
        let rest = restriction_matrices(&res, &g.whole(), 4).unwrap();
        let data = duflot_subalgebra(&rest, 4).unwrap();
        assert_eq!(data.iter().map(|d| (d.l, d.degree)).collect::<Vec<_>>(), vec![(0, 1), (0, 1)]);
    }

    #[test]
    fn z2_sequence() {
        let g = fixtures::cyclic(2);
        let res = minimal_resolution(&g, 6).unwrap();
        let rest = restriction_matrices(&res, &g.whole(), 6).unwrap();
        let data = duflot_subalgebra(&rest, 6).unwrap();
        let seq = regular_sequence_test(&res, &data, 6).unwrap();
        assert!(seq.all_injective());
        assert_eq!(seq.quotient_dims, vec![1, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn quaternion_certificate() {
        let r = fixture_report("q8", 8);
        assert_eq!(r.duflot.len(), 1);
        assert_eq!((r.duflot[0].l, r.duflot[0].degree), (2, 4));
        assert_eq!(r.quotient_dims, vec![1, 2, 2, 1, 0, 0, 0, 0, 0]);
        assert!(r.hilbert_ok);
        assert_eq!(r.verdict, "CM-certified-to-degree-8");
    }

    #[test]
    fn negative_controls() {
        let r = fixture_report("sd16", 6);
        assert!(!r.lemmas.central_involution_property);
        assert_eq!((r.center_rank, r.two_rank), (1, 2));
        assert_eq!(r.verdict, "not-certified");
        let d8 = fixture_report("d8", 6);
        assert_eq!(d8.lemmas.maximal_elementary_abelian_count, 2);
        assert_eq!(d8.verdict, "not-certified");
    }

    #[test]
    fn cyclic_four_uses_its_involution() {
        let r = fixture_report("z4", 6);
        assert_eq!(r.center_rank, 1);
        assert_eq!(r.duflot[0].degree, 2);
        assert_eq!(r.quotient_dims, vec![1, 1, 0, 0, 0, 0, 0]);
        assert!(r.certified());
    }

    #[test]
    fn undetermined_below_degree() {
        let r = fixture_report("q8", 3);
        assert_eq!(r.verdict, "undetermined-at-degree-3");
        assert!(!r.failed());
    }
}
