//! Discrete-series counting, Blattner shifts and the Harish-Chandra root
//! order. Weights are abstract root-lattice vectors; no analytic
//! integrality conditions are modeled.

use serde::{Deserialize, Serialize};

use crate::bds::{certify, enumerate_bds, BdsSystem, Provenance};
use crate::error::{Error, Result};
use crate::lie_type::Family;
use crate::rootvec::{RootSet, RootVec};
use crate::vogan::{compact_datum, compact_dynkin, gradation, CompactDatum, VoganDatum};
use crate::weyl::longest_word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesCount {
    /// `|W_g| / |W_k|`.
    pub total: u64,
    /// Number of Borel-de Siebenthal discrete series classes.
    pub bds: usize,
    pub hermitian: bool,
}

pub fn count_series(vd: &VoganDatum) -> Result<SeriesCount> {
    let rs = vd.root_system();
    let t = rs.lie_type().ok_or_else(|| Error::NotFiniteType("unnamed root system".into()))?;
    let cd = compact_datum(vd);
    let (_, comps) = compact_dynkin(&cd, rs)?;
    let wk: u64 = comps.iter().map(|c| c.lie_type.weyl_order()).product();
    let wg = t.weyl_order();
    debug_assert_eq!(wg % wk, 0);
    Ok(SeriesCount { total: wg / wk, bds: enumerate_bds(vd)?.len(), hermitian: vd.is_hermitian() })
}

/// The tabulated count: 2 when Hermitian, otherwise 1 for E8, F4, G2; 2 for
/// B, C, E7; 3 for E6; 4 for D.
pub fn expected_bds_count(vd: &VoganDatum) -> usize {
    if vd.is_hermitian() {
        return 2;
    }
    match vd.root_system().lie_type().map(|t| (t.family(), t.rank())) {
        Some((Family::D, _)) => 4,
        Some((Family::E, 6)) => 3,
        Some((Family::B | Family::C, _)) | Some((Family::E, 7)) => 2,
        _ => 1,
    }
}

/// Applies `w'_0`: first `w⁰_{l_0}`, then `w⁰_k`. This carries the compact
/// part `P_0 ∪ −(P_k ∖ P_0)` of the Harish-Chandra order onto `P_k`.
pub fn w0_prime_translate(set: &RootSet, cd: &CompactDatum, vd: &VoganDatum) -> RootSet {
    let rs = vd.root_system();
    let w_l0 = longest_word(&vd.phi_0(), rs);
    let w_k = longest_word(&cd.phi_k, rs);
    set.iter()
        .map(|i| {
            let image = w_k.apply(&w_l0.apply(rs.root(i), rs), rs);
            rs.index_of(&image).expect("Weyl images of roots are roots")
        })
        .collect()
}

/// The positive system `P_0 ∪ −(P ∖ P_0)` with base `Φ_0 ∪ {−λ}`, certified
/// as Borel-de Siebenthal with highest root `−ε` and checked to be
/// `W_k`-conjugate to an enumerated system.
pub fn hc_root_order(vd: &VoganDatum) -> Result<BdsSystem> {
    if vd.is_hermitian() {
        return Err(Error::HermitianDatum);
    }
    let rs = vd.root_system();
    let cd = compact_datum(vd);
    let hc: RootSet = (0..rs.len())
        .filter(|&i| {
            let r = rs.root(i);
            let pos = rs.is_positive_index(i);
            if vd.grade(r) == 0 {
                pos
            } else {
                !pos
            }
        })
        .collect();

    let mut base = vd.phi_0().elements().to_vec();
    base.push(-&cd.lambda);
    let system = certify(base, Provenance::HarishChandra, vd, None)?;
    let fail = |m: &str| Err(Error::BdsInvariant(format!("Harish-Chandra order: {m}")));
    if system.positive_set != hc {
        return fail("Φ_0 ∪ {−λ} does not generate P_0 ∪ −(P ∖ P_0)");
    }
    let eps = cd.epsilon.as_ref().expect("semisimple datum has ε");
    if system.highest_root != -eps {
        return fail("highest root is not −ε");
    }
    let translate = w0_prime_translate(&hc, &cd, vd);
    if !enumerate_bds(vd)?.iter().any(|s| s.positive_set == translate) {
        return fail("w'_0-translate is not an enumerated system");
    }
    Ok(system)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlattnerParameter {
    pub value: RootVec,
    /// Set when `l_2` is empty and the shift vanishes.
    pub hermitian: bool,
}

/// `γ + Σ β` over the positive roots with `n_ν(β) = 2`.
pub fn blattner(gamma: &RootVec, vd: &VoganDatum) -> Result<BlattnerParameter> {
    let rs = vd.root_system();
    if gamma.rank() != rs.rank() {
        return Err(Error::DimensionMismatch { rank: rs.rank(), got: gamma.rank() });
    }
    let value = gradation(vd).layer(2).iter().fold(gamma.clone(), |acc, i| &acc + rs.root(i));
    Ok(BlattnerParameter { value, hermitian: vd.is_hermitian() })
}
