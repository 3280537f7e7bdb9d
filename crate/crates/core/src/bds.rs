//! Borel-de Siebenthal positive systems containing the fixed compact
//! positive system `P_k`.
//!
//! Besides the standard system `P`, one further system is built for every
//! `φ' ∈ Φ_0` with `n_{φ'}(δ) = 1`: drop `φ = −w⁰(φ')` from the compact base
//! and adjoin the lowest weight `ν'` of the submodule of `p` generated by the
//! highest weight `λ`. Every system is certified before it is returned.

use serde::{Deserialize, Serialize};

use crate::dynkin::submatrix;
use crate::error::{Error, Result};
use crate::linalg;
use crate::root_system::positive_roots_of;
use crate::rootvec::{RootSet, RootVec};
use crate::vogan::{compact_datum, CompactDatum, VoganDatum};
use crate::weyl::{antidominant_rep, longest_involution, SubBase};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    /// The standard positive system `P`.
    Original,
    /// Built from `(φ', φ)` with new non-compact simple root `ν'`.
    Constructed { phi_prime: RootVec, phi: RootVec, nu_prime: RootVec },
    /// Hermitian case: base `Φ_0 ∪ {−δ}`.
    Opposite,
    /// `P_0 ∪ −(P ∖ P_0)`.
    HarishChandra,
}

/// A certified positive system with exactly one non-compact simple root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BdsSystem {
    pub base: Vec<RootVec>,
    pub positive_set: RootSet,
    pub noncompact_simple: RootVec,
    pub highest_root: RootVec,
    /// Coefficients of `highest_root` in `base`.
    pub highest_coeffs: Vec<i64>,
    pub provenance: Provenance,
}

/// `φ'` and `φ = −w⁰_{Φ_0}(φ')`, as 0-based indices into `Φ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidatePair {
    pub phi_prime: usize,
    pub phi: usize,
}

pub fn candidate_pairs(_cd: &CompactDatum, vd: &VoganDatum) -> Result<Vec<CandidatePair>> {
    if vd.is_hermitian() {
        return Err(Error::HermitianDatum);
    }
    let rs = vd.root_system();
    let idx = vd.phi_0_indices();
    let inv = longest_involution(&vd.phi_0(), rs);
    Ok(idx
        .iter()
        .enumerate()
        .filter(|&(_, &i)| rs.highest_root()[i] == 1)
        .map(|(pos, &i)| CandidatePair { phi_prime: i, phi: idx[inv[pos]] })
        .collect())
}

fn violation(msg: impl Into<String>) -> Error {
    Error::BdsInvariant(msg.into())
}

/// Checks that `base` is the simple system of a positive system with exactly
/// one non-compact simple root of the right highest-root coefficient, and
/// materializes it. `required` must be contained in the positive set.
pub(crate) fn certify(
    base: Vec<RootVec>,
    provenance: Provenance,
    vd: &VoganDatum,
    required: Option<&RootSet>,
) -> Result<BdsSystem> {
    let rs = vd.root_system();
    let n = rs.rank();
    if base.len() != n {
        return Err(violation(format!("base has {} elements, rank is {n}", base.len())));
    }
    if let Some(b) = base.iter().find(|b| !rs.is_root(b)) {
        return Err(violation(format!("base element {b} is not a root")));
    }
    let cols: Vec<Vec<i64>> = base.iter().map(|b| b.coeffs().to_vec()).collect();
    let m = linalg::from_columns(&cols);
    let det = linalg::determinant(&m);
    let inv = linalg::unimodular_inverse(&m)
        .ok_or_else(|| violation(format!("base change has determinant {det}")))?;

    let mut positive = Vec::new();
    let mut best: Option<(i64, usize, Vec<i64>)> = None;
    for (i, r) in rs.roots().iter().enumerate() {
        let c = linalg::mat_vec(&inv, r.coeffs());
        if c.iter().all(|&x| x >= 0) {
            let h: i64 = c.iter().sum();
            if best.as_ref().is_none_or(|(bh, _, _)| h > *bh) {
                best = Some((h, i, c));
            }
            positive.push(i);
        } else if !c.iter().all(|&x| x <= 0) {
            return Err(violation(format!("root {r} has mixed signs in the base")));
        }
    }
    let positive_set = RootSet::from_indices(positive);
    if let Some(req) = required {
        if let Some(i) = req.iter().find(|&i| !positive_set.contains(i)) {
            return Err(violation(format!("required root {} is not positive", rs.root(i))));
        }
    }

    let noncompact: Vec<usize> = (0..n).filter(|&i| !vd.is_compact(&base[i])).collect();
    if noncompact.len() != 1 {
        return Err(violation(format!("base has {} non-compact elements", noncompact.len())));
    }
    let (_, hi, coeffs) = best.expect("positive set is nonempty");
    let highest_root = rs.root(hi).clone();
    if base.iter().any(|b| rs.is_root(&(&highest_root + b))) {
        return Err(violation("highest root is not maximal"));
    }
    let expected = if vd.is_hermitian() { 1 } else { 2 };
    let got = coeffs[noncompact[0]];
    if got != expected {
        return Err(violation(format!(
            "non-compact simple root has coefficient {got} in the highest root, expected {expected}"
        )));
    }
    Ok(BdsSystem {
        noncompact_simple: base[noncompact[0]].clone(),
        base,
        positive_set,
        highest_root,
        highest_coeffs: coeffs,
        provenance,
    })
}

/// `Φ'_0 = Φ_k ∖ {φ}` in `Φ_k` order.
fn reduced_base(pair: CandidatePair, cd: &CompactDatum, vd: &VoganDatum) -> SubBase {
    let phi = vd.root_system().simple_root(pair.phi);
    let els = cd.phi_k.elements().iter().filter(|e| **e != phi).cloned().collect();
    SubBase::new(els, vd.root_system()).expect("subset of a sub-base")
}

/// `ν'`: the antidominant `W_{Φ'_0}`-representative of `λ`.
pub fn nu_prime(pair: CandidatePair, cd: &CompactDatum, vd: &VoganDatum) -> RootVec {
    antidominant_rep(&cd.lambda, &reduced_base(pair, cd, vd), vd.root_system()).0
}

pub fn construct_bds(pair: CandidatePair, cd: &CompactDatum, vd: &VoganDatum) -> Result<BdsSystem> {
    if vd.is_hermitian() {
        return Err(Error::HermitianDatum);
    }
    let rs = vd.root_system();
    let reduced = reduced_base(pair, cd, vd);
    let (nu_p, _) = antidominant_rep(&cd.lambda, &reduced, rs);
    let mut base = reduced.elements().to_vec();
    base.push(nu_p.clone());
    let provenance = Provenance::Constructed {
        phi_prime: rs.simple_root(pair.phi_prime),
        phi: rs.simple_root(pair.phi),
        nu_prime: nu_p,
    };
    certify(base, provenance, vd, Some(&cd.p_k))
}

/// All Borel-de Siebenthal positive systems containing `P_k`: the standard
/// one first, then one per candidate pair (or `Φ_0 ∪ {−δ}` when Hermitian).
pub fn enumerate_bds(vd: &VoganDatum) -> Result<Vec<BdsSystem>> {
    let rs = vd.root_system();
    let cd = compact_datum(vd);
    let mut out = vec![certify(rs.simple_roots(), Provenance::Original, vd, Some(&cd.p_k))?];
    if vd.is_hermitian() {
        let mut base = vd.phi_0().elements().to_vec();
        base.push(-rs.highest_root());
        out.push(certify(base, Provenance::Opposite, vd, Some(&cd.p_k))?);
    } else {
        for pair in candidate_pairs(&cd, vd)? {
            out.push(construct_bds(pair, &cd, vd)?);
        }
    }
    for (i, a) in out.iter().enumerate() {
        if out[..i].iter().any(|b| b.positive_set == a.positive_set) {
            return Err(violation("two enumerated systems coincide"));
        }
    }
    Ok(out)
}

/// `positive_set ∩ Δ_n`. For a constructed system this is checked against
/// `{β ∈ Δ_n : n_φ(β) = 1} ∪ {β ∈ −P ∩ Δ_n : n_φ(β) = 0}`.
pub fn noncompact_split(bs: &BdsSystem, vd: &VoganDatum) -> Result<RootSet> {
    let rs = vd.root_system();
    let delta_n = vd.noncompact_roots();
    let split = bs.positive_set.intersection(&delta_n);
    if let Provenance::Constructed { phi, .. } = &bs.provenance {
        let k = phi.coeffs().iter().position(|&c| c == 1).expect("φ is simple");
        let predicted: RootSet = delta_n
            .iter()
            .filter(|&i| {
                let b = rs.root(i);
                b[k] == 1 || (!rs.is_positive_index(i) && b[k] == 0)
            })
            .collect();
        if predicted != split {
            return Err(violation("non-compact part differs from the n_φ description"));
        }
    }
    Ok(split)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaCheck {
    pub name: String,
    pub expected: i64,
    pub actual: i64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub pair: CandidatePair,
    pub checks: Vec<LemmaCheck>,
}

impl LemmaReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Coefficient identities satisfied by a candidate pair, each reported
/// separately rather than failing fast.
pub fn lemma_checks(pair: CandidatePair, cd: &CompactDatum, vd: &VoganDatum) -> Result<LemmaReport> {
    if vd.is_hermitian() {
        return Err(Error::HermitianDatum);
    }
    let rs = vd.root_system();
    let eps = cd.epsilon.as_ref().expect("semisimple datum has ε");
    let phi = rs.simple_root(pair.phi);
    let phi_pos = cd.phi_k.position(&phi).expect("φ ∈ Φ_0");
    let eps_pos = cd.epsilon_position().unwrap();
    let in_c = cd.component_c.contains(&phi_pos);

    let mut checks = Vec::new();
    let mut check = |name: &str, expected: i64, actual: i64| {
        checks.push(LemmaCheck { name: name.into(), expected, actual, passed: expected == actual });
    };
    check("n_phi(lambda)", 1, cd.lambda[pair.phi]);
    check("n_phi(epsilon)", 1, eps[pair.phi]);
    check(
        if in_c { "n_phi(delta), phi in C" } else { "n_phi(delta), phi not in C" },
        if in_c { 2 } else { 1 },
        rs.highest_root()[pair.phi],
    );

    // c_φ(δ_2): δ_2 is the highest root of the k-component containing φ
    let kc = cd.phi_k.induced_cartan(rs);
    let comp = crate::root_system::components(&kc)
        .into_iter()
        .find(|c| c.contains(&phi_pos))
        .unwrap();
    let local = positive_roots_of(&submatrix(&kc, &comp)).expect("finite-type component");
    let top = local.iter().max_by_key(|r| r.height()).unwrap();
    let local_pos = comp.iter().position(|&i| i == phi_pos).unwrap();
    check("c_phi(delta_2)", 1, top[local_pos]);

    // c_ε(λ − ν') in the basis Φ_k
    let nu_p = nu_prime(pair, cd, vd);
    let diff = &cd.lambda - &nu_p;
    let cols: Vec<Vec<i64>> = cd.phi_k.elements().iter().map(|e| e.coeffs().to_vec()).collect();
    let inv = linalg::inverse(&linalg::from_columns(&cols)).expect("Φ_k is a basis");
    let c = linalg::mat_vec_q(&inv, diff.coeffs());
    let c_eps = c[eps_pos];
    check(
        "c_eps(lambda - nu')",
        1,
        if c_eps.is_integer() { c_eps.to_integer() } else { i64::MIN },
    );

    let nu_idx = rs.index_of(&nu_p);
    let negative_noncompact = nu_idx.is_some_and(|i| !rs.is_positive_index(i) && !vd.is_compact(&nu_p));
    check("nu' in -P and non-compact", 1, negative_noncompact as i64);
    check("n_phi(nu')", 0, nu_p[pair.phi]);

    Ok(LemmaReport { pair, checks })
}
