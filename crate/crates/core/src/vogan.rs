//! Equi-rank real forms encoded by a single painted simple root `ν`.
//!
//! A root is compact when its `ν`-coefficient is even and non-compact when it
//! is odd. The standard positive system `P` of the generated root system is
//! fixed once, and `P_k = P ∩ Δ_k`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::dynkin::{Component, DynkinDiagram};
use crate::error::{Error, Result};
use crate::lie_type::LieType;
use crate::root_system::RootSystem;
use crate::rootvec::{RootSet, RootVec};
use crate::weyl::{antidominant_rep, dominant_rep, SubBase};

#[derive(Debug, Clone)]
pub struct VoganDatum {
    rs: RootSystem,
    nu: usize,
    hermitian: bool,
}

impl VoganDatum {
    /// Paints the simple root `φ_{nu+1}` (0-based `nu`). Rejects nodes whose
    /// coefficient in the highest root is not 1 or 2.
    pub fn new(t: LieType, nu: usize) -> Result<Self> {
        Self::from_root_system(RootSystem::of_type(t), nu)
    }

    pub fn from_root_system(rs: RootSystem, nu: usize) -> Result<Self> {
        if nu >= rs.rank() {
            return Err(Error::NodeOutOfRange { node: nu + 1, rank: rs.rank() });
        }
        let c = rs.highest_root()[nu];
        if c != 1 && c != 2 {
            return Err(Error::InadmissibleNode { node: nu + 1, coefficient: c });
        }
        Ok(VoganDatum { rs, nu, hermitian: c == 1 })
    }

    /// Every admissible `(type, ν)` with rank at most `max_rank`.
    pub fn all_up_to(max_rank: usize) -> Vec<VoganDatum> {
        let mut out = Vec::new();
        for t in LieType::all_up_to(max_rank) {
            let rs = RootSystem::of_type(t);
            for nu in 0..t.rank() {
                if let Ok(vd) = VoganDatum::from_root_system(rs.clone(), nu) {
                    out.push(vd);
                }
            }
        }
        out
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    /// 0-based index of `ν` in `Φ`.
    pub fn nu_index(&self) -> usize {
        self.nu
    }

    pub fn nu(&self) -> RootVec {
        self.rs.simple_root(self.nu)
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermitian
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// Short label such as `E6/2` (type and 1-based painted node).
    pub fn label(&self) -> String {
        match self.rs.lie_type() {
            Some(t) => format!("{t}/{}", self.nu + 1),
            None => format!("?/{}", self.nu + 1),
        }
    }

    /// `n_ν(α)`.
    pub fn grade(&self, v: &RootVec) -> i64 {
        v[self.nu]
    }

    pub fn is_compact(&self, v: &RootVec) -> bool {
        self.grade(v) % 2 == 0
    }

    /// `Φ_0 = Φ ∖ {ν}`, in index order.
    pub fn phi_0(&self) -> SubBase {
        let els = (0..self.rank())
            .filter(|&i| i != self.nu)
            .map(|i| self.rs.simple_root(i))
            .collect();
        SubBase::new(els, &self.rs).expect("simple roots form a sub-base")
    }

    /// Indices of `Φ_0` elements in `Φ`, matching [`VoganDatum::phi_0`].
    pub fn phi_0_indices(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| i != self.nu).collect()
    }

    pub fn compact_roots(&self) -> RootSet {
        (0..self.rs.len()).filter(|&i| self.is_compact(self.rs.root(i))).collect()
    }

    pub fn noncompact_roots(&self) -> RootSet {
        (0..self.rs.len()).filter(|&i| !self.is_compact(self.rs.root(i))).collect()
    }

    /// `P_k`.
    pub fn compact_positive(&self) -> RootSet {
        self.rs
            .positive_indices()
            .filter(|&i| self.is_compact(self.rs.root(i)))
            .collect()
    }

    /// Number of `±`-pairs of non-compact roots.
    pub fn noncompact_pairs(&self) -> usize {
        self.noncompact_roots().len() / 2
    }
}

/// Decomposition of `Δ` by `ν`-coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gradation {
    pub layers: BTreeMap<i64, RootSet>,
}

impl Gradation {
    pub fn layer(&self, i: i64) -> RootSet {
        self.layers.get(&i).cloned().unwrap_or_default()
    }
}

pub fn gradation(vd: &VoganDatum) -> Gradation {
    let mut layers: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (i, r) in vd.rs.roots().iter().enumerate() {
        layers.entry(vd.grade(r)).or_default().push(i);
    }
    Gradation {
        layers: layers.into_iter().map(|(k, v)| (k, RootSet::from_indices(v))).collect(),
    }
}

/// Compact base and the distinguished weights of the datum.
#[derive(Debug, Clone)]
pub struct CompactDatum {
    /// `Φ_0 ∪ {ε}` when k is semisimple, `Φ_0` when Hermitian.
    pub phi_k: SubBase,
    pub labels: Vec<String>,
    /// Lowest root of `l_2`; absent in the Hermitian case.
    pub epsilon: Option<RootVec>,
    /// Highest weight of `p`.
    pub lambda: RootVec,
    /// Positions in `phi_k` of the component containing `ε`.
    pub component_c: Vec<usize>,
    pub delta_k: RootSet,
    pub delta_n: RootSet,
    pub p_k: RootSet,
}

impl CompactDatum {
    /// Position of `ε` in `phi_k` (always last), if present.
    pub fn epsilon_position(&self) -> Option<usize> {
        self.epsilon.as_ref().map(|_| self.phi_k.len() - 1)
    }

    pub fn label_of(&self, v: &RootVec) -> Option<&str> {
        self.phi_k.position(v).map(|i| self.labels[i].as_str())
    }
}

pub fn compact_datum(vd: &VoganDatum) -> CompactDatum {
    let rs = &vd.rs;
    let phi_0 = vd.phi_0();
    let mut labels: Vec<String> = vd.phi_0_indices().iter().map(|i| format!("phi{}", i + 1)).collect();
    let (lambda, _) = dominant_rep(&vd.nu(), &phi_0, rs);

    let (phi_k, epsilon) = if vd.hermitian {
        (phi_0, None)
    } else {
        let (eps, _) = antidominant_rep(rs.highest_root(), &phi_0, rs);
        let mut els = phi_0.elements().to_vec();
        els.push(eps.clone());
        labels.push("eps".into());
        (SubBase::new(els, rs).expect("Φ_0 ∪ {ε} is a sub-base"), Some(eps))
    };

    let component_c = match &epsilon {
        Some(_) => {
            let diagram = DynkinDiagram::new(labels.clone(), phi_k.induced_cartan(rs));
            let eps_pos = phi_k.len() - 1;
            diagram
                .components()
                .into_iter()
                .find(|c| c.contains(&eps_pos))
                .expect("ε lies in some component")
        }
        None => Vec::new(),
    };

    CompactDatum {
        phi_k,
        labels,
        epsilon,
        lambda,
        component_c,
        delta_k: vd.compact_roots(),
        delta_n: vd.noncompact_roots(),
        p_k: vd.compact_positive(),
    }
}

/// Dynkin diagram of `k` on `phi_k`, with every component recognized.
pub fn compact_dynkin(cd: &CompactDatum, rs: &RootSystem) -> Result<(DynkinDiagram, Vec<Component>)> {
    let diagram = cd.phi_k.diagram(cd.labels.clone(), rs);
    let comps = diagram.recognize()?;
    Ok((diagram, comps))
}

/// Dynkin diagram of `g` with the painted node marked `*`.
pub fn painted_dynkin(vd: &VoganDatum) -> DynkinDiagram {
    let labels = (0..vd.rank())
        .map(|i| {
            if i == vd.nu {
                format!("phi{}*", i + 1)
            } else {
                format!("phi{}", i + 1)
            }
        })
        .collect();
    DynkinDiagram::new(labels, vd.rs.cartan().to_vec())
}

/// JSON-friendly view of a [`CompactDatum`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompactDatumDump {
    pub phi_k: Vec<RootVec>,
    pub labels: Vec<String>,
    pub epsilon: Option<RootVec>,
    pub lambda: RootVec,
    pub component_c: Vec<String>,
    pub compact_roots: usize,
    pub noncompact_roots: usize,
}

impl From<&CompactDatum> for CompactDatumDump {
    fn from(cd: &CompactDatum) -> Self {
        CompactDatumDump {
            phi_k: cd.phi_k.elements().to_vec(),
            labels: cd.labels.clone(),
            epsilon: cd.epsilon.clone(),
            lambda: cd.lambda.clone(),
            component_c: cd.component_c.iter().map(|&i| cd.labels[i].clone()).collect(),
            compact_roots: cd.delta_k.len(),
            noncompact_roots: cd.delta_n.len(),
        }
    }
}
