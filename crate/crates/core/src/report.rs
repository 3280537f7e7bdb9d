//! Serializable summaries shared by the command-line front end.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::bds::{candidate_pairs, enumerate_bds, lemma_checks, BdsSystem, LemmaReport, Provenance};
use crate::error::Result;
use crate::rootvec::RootVec;
use crate::series::{count_series, expected_bds_count, hc_root_order, SeriesCount};
use crate::vogan::{compact_datum, compact_dynkin, painted_dynkin, CompactDatumDump, VoganDatum};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemReport {
    pub provenance: Provenance,
    pub base: Vec<RootVec>,
    pub noncompact_simple: RootVec,
    pub highest_root: RootVec,
    pub highest_coeffs: Vec<i64>,
    pub positive_roots: usize,
}

impl From<&BdsSystem> for SystemReport {
    fn from(s: &BdsSystem) -> Self {
        SystemReport {
            provenance: s.provenance.clone(),
            base: s.base.clone(),
            noncompact_simple: s.noncompact_simple.clone(),
            highest_root: s.highest_root.clone(),
            highest_coeffs: s.highest_coeffs.clone(),
            positive_roots: s.positive_set.len(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub datum: String,
    pub lie_type: String,
    /// 1-based painted node.
    pub nu: usize,
    pub hermitian: bool,
    pub highest_root: RootVec,
    pub diagram: String,
    pub compact: CompactDatumDump,
    pub compact_type: String,
    pub compact_diagram: String,
    pub systems: Vec<SystemReport>,
    pub lemmas: Vec<LemmaReport>,
    pub harish_chandra: Option<SystemReport>,
    pub series: SeriesCount,
    pub expected_bds: usize,
}

pub fn classify(vd: &VoganDatum) -> Result<ClassifyReport> {
    let rs = vd.root_system();
    let cd = compact_datum(vd);
    let (kdiagram, _) = compact_dynkin(&cd, rs)?;
    let systems = enumerate_bds(vd)?;
    let (lemmas, harish_chandra) = if vd.is_hermitian() {
        (Vec::new(), None)
    } else {
        let lemmas = candidate_pairs(&cd, vd)?
            .into_iter()
            .map(|p| lemma_checks(p, &cd, vd))
            .collect::<Result<_>>()?;
        (lemmas, Some(SystemReport::from(&hc_root_order(vd)?)))
    };
    Ok(ClassifyReport {
        datum: vd.label(),
        lie_type: rs.lie_type().map(|t| t.to_string()).unwrap_or_else(|| "?".into()),
        nu: vd.nu_index() + 1,
        hermitian: vd.is_hermitian(),
        highest_root: rs.highest_root().clone(),
        diagram: painted_dynkin(vd).render_ascii(),
        compact: CompactDatumDump::from(&cd),
        compact_type: kdiagram.type_summary()?,
        compact_diagram: kdiagram.render_ascii(),
        systems: systems.iter().map(SystemReport::from).collect(),
        lemmas,
        harish_chandra,
        series: count_series(vd)?,
        expected_bds: expected_bds_count(vd),
    })
}

fn provenance_text(p: &Provenance) -> String {
    match p {
        Provenance::Original => "original".into(),
        Provenance::Constructed { phi_prime, phi, nu_prime } => {
            format!("constructed phi'={phi_prime} phi={phi} nu'={nu_prime}")
        }
        Provenance::Opposite => "opposite".into(),
        Provenance::HarishChandra => "harish-chandra".into(),
    }
}

fn join(v: &[RootVec]) -> String {
    v.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(" ")
}

fn indent(block: &str) -> String {
    block.lines().map(|l| format!("  {l}\n")).collect()
}

fn system_text(out: &mut String, s: &SystemReport) {
    writeln!(out, "  {}", provenance_text(&s.provenance)).unwrap();
    writeln!(out, "    base {}", join(&s.base)).unwrap();
    writeln!(out, "    noncompact simple {}", s.noncompact_simple).unwrap();
    writeln!(out, "    highest {} = {:?} in base", s.highest_root, s.highest_coeffs).unwrap();
}

impl ClassifyReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let kind = if self.hermitian { "hermitian" } else { "semisimple k" };
        writeln!(out, "datum {} ({kind})", self.datum).unwrap();
        writeln!(out, "highest root {}", self.highest_root).unwrap();
        out.push_str("diagram\n");
        out.push_str(&indent(&self.diagram));
        match &self.compact.epsilon {
            Some(e) => writeln!(out, "epsilon {e}").unwrap(),
            None => out.push_str("epsilon none\n"),
        }
        writeln!(out, "lambda {}", self.compact.lambda).unwrap();
        writeln!(out, "phi_k {}", join(&self.compact.phi_k)).unwrap();
        writeln!(out, "component C {}", self.compact.component_c.join(" ")).unwrap();
        writeln!(out, "compact diagram {}", self.compact_type).unwrap();
        out.push_str(&indent(&self.compact_diagram));
        writeln!(out, "systems {}", self.systems.len()).unwrap();
        for s in &self.systems {
            system_text(&mut out, s);
        }
        for l in &self.lemmas {
            let verdict = if l.all_passed() { "ok" } else { "FAILED" };
            writeln!(out, "lemma phi'=phi{} phi=phi{} {verdict}", l.pair.phi_prime + 1, l.pair.phi + 1).unwrap();
        }
        if let Some(hc) = &self.harish_chandra {
            out.push_str("harish-chandra order\n");
            system_text(&mut out, hc);
        }
        writeln!(
            out,
            "series total {} bds {} (expected {})",
            self.series.total, self.series.bds, self.expected_bds
        )
        .unwrap();
        out
    }

    /// Everything internally consistent: counts match and all lemma checks pass.
    pub fn consistent(&self) -> bool {
        self.series.bds == self.expected_bds && self.lemmas.iter().all(LemmaReport::all_passed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyRow {
    pub datum: String,
    pub hermitian: bool,
    pub bds: usize,
    pub expected: usize,
    pub total: u64,
    /// `None` when the oracle was not run or was skipped.
    pub oracle_ok: Option<bool>,
    pub note: Option<String>,
}
