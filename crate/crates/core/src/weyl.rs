//! Weyl-group actions through reflections: extremal orbit representatives
//! with word certificates, longest elements of parabolic subgroups, and
//! group orders.

use crate::dynkin::DynkinDiagram;
use crate::error::{Error, Result};
use crate::lie_type::LieType;
use crate::linalg;
use crate::root_system::{positive_roots_of, RootSystem};
use crate::rootvec::RootVec;

/// Linearly independent roots with pairwise non-positive Cartan integers: the
/// simple system of a (parabolic-type) subsystem. Its elements need not be
/// simple roots of the ambient system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubBase {
    elements: Vec<RootVec>,
}

impl SubBase {
    pub fn new(elements: Vec<RootVec>, rs: &RootSystem) -> Result<Self> {
        for e in &elements {
            if !rs.is_root(e) {
                return Err(Error::NotARoot(e.clone()));
            }
        }
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                if i != j && rs.cartan_integer(a, b)? > 0 {
                    return Err(Error::InvalidSubBase(format!("{a} and {b} have positive pairing")));
                }
            }
        }
        let rows: Vec<Vec<i64>> = elements.iter().map(|e| e.coeffs().to_vec()).collect();
        if linalg::rank(&rows) != elements.len() {
            return Err(Error::InvalidSubBase("elements are linearly dependent".into()));
        }
        Ok(SubBase { elements })
    }

    pub fn empty() -> Self {
        SubBase { elements: Vec::new() }
    }

    pub fn elements(&self) -> &[RootVec] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, v: &RootVec) -> Option<usize> {
        self.elements.iter().position(|e| e == v)
    }

    /// Induced Cartan matrix, same convention as the ambient one.
    pub fn induced_cartan(&self, rs: &RootSystem) -> Vec<Vec<i64>> {
        self.elements
            .iter()
            .map(|si| {
                self.elements
                    .iter()
                    .map(|sj| rs.cartan_integer(sj, si).expect("sub-base elements are roots"))
                    .collect()
            })
            .collect()
    }

    pub fn diagram(&self, labels: Vec<String>, rs: &RootSystem) -> DynkinDiagram {
        DynkinDiagram::new(labels, self.induced_cartan(rs))
    }

    /// Positive roots of the generated subsystem, in ambient coordinates.
    pub fn positive_roots(&self, rs: &RootSystem) -> Vec<RootVec> {
        if self.is_empty() {
            return Vec::new();
        }
        let local = positive_roots_of(&self.induced_cartan(rs)).expect("sub-base generates a finite subsystem");
        local
            .iter()
            .map(|c| {
                self.elements
                    .iter()
                    .zip(c.coeffs())
                    .fold(RootVec::zero(rs.rank()), |acc, (e, &k)| &acc + &(k * e))
            })
            .collect()
    }
}

/// A product of reflections, stored in the order they are applied.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeylWord {
    letters: Vec<RootVec>,
}

impl WeylWord {
    pub fn letters(&self) -> &[RootVec] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn apply(&self, v: &RootVec, rs: &RootSystem) -> RootVec {
        self.letters
            .iter()
            .fold(v.clone(), |acc, a| reflect_unchecked(&acc, a, rs))
    }

    pub fn apply_inverse(&self, v: &RootVec, rs: &RootSystem) -> RootVec {
        self.letters
            .iter()
            .rev()
            .fold(v.clone(), |acc, a| reflect_unchecked(&acc, a, rs))
    }
}

fn reflect_unchecked(v: &RootVec, alpha: &RootVec, rs: &RootSystem) -> RootVec {
    let c = rs.cartan_integer(v, alpha).expect("root-lattice vector paired with a root");
    v - &(c * alpha)
}

/// `s_α v = v − ⟨v, α^∨⟩ α`.
pub fn reflect(v: &RootVec, alpha: &RootVec, rs: &RootSystem) -> Result<RootVec> {
    if !rs.is_root(alpha) {
        return Err(Error::NotARoot(alpha.clone()));
    }
    if v.rank() != rs.rank() {
        return Err(Error::DimensionMismatch { rank: rs.rank(), got: v.rank() });
    }
    Ok(reflect_unchecked(v, alpha, rs))
}

fn extremal_rep(v: &RootVec, s: &SubBase, rs: &RootSystem, sign: i64) -> (RootVec, WeylWord) {
    let mut u = v.clone();
    let mut word = WeylWord::default();
    // Always reflect in the lowest-index violating generator.
    while let Some(a) = s
        .elements()
        .iter()
        .find(|a| sign * rs.cartan_integer(&u, a).expect("pairing with a root") > 0)
    {
        u = reflect_unchecked(&u, a, rs);
        word.letters.push(a.clone());
    }
    (u, word)
}

/// The unique element `u` of the `W_S`-orbit of `v` with `⟨u, α^∨⟩ ≤ 0` for
/// every `α ∈ S`, together with a word `w` such that `w(v) = u`.
pub fn antidominant_rep(v: &RootVec, s: &SubBase, rs: &RootSystem) -> (RootVec, WeylWord) {
    extremal_rep(v, s, rs, 1)
}

/// Mirror of [`antidominant_rep`]: `⟨u, α^∨⟩ ≥ 0` for every `α ∈ S`.
pub fn dominant_rep(v: &RootVec, s: &SubBase, rs: &RootSystem) -> (RootVec, WeylWord) {
    extremal_rep(v, s, rs, -1)
}

/// A reduced word for the longest element of `W_S`: the word that carries
/// the regular dominant vector `2ρ_S` to its antidominant image.
pub fn longest_word(s: &SubBase, rs: &RootSystem) -> WeylWord {
    let two_rho = s
        .positive_roots(rs)
        .iter()
        .fold(RootVec::zero(rs.rank()), |acc, r| &acc + r);
    antidominant_rep(&two_rho, s, rs).1
}

/// The diagram involution `φ' ↦ φ` with `w⁰_S(φ') = −φ`, as a map on
/// positions in `S`.
pub fn longest_involution(s: &SubBase, rs: &RootSystem) -> Vec<usize> {
    let w0 = longest_word(s, rs);
    s.elements()
        .iter()
        .map(|e| {
            let image = -w0.apply(e, rs);
            s.position(&image).expect("longest element maps the sub-base to its negative")
        })
        .collect()
}

pub fn weyl_order(t: LieType) -> u64 {
    t.weyl_order()
}

/// `|W_S|`, the product of the Weyl group orders of the components of the
/// induced diagram.
pub fn parabolic_order(s: &SubBase, rs: &RootSystem) -> Result<u64> {
    let labels = (0..s.len()).map(|i| i.to_string()).collect();
    let comps = s.diagram(labels, rs).recognize()?;
    Ok(comps.iter().map(|c| c.lie_type.weyl_order()).product())
}
