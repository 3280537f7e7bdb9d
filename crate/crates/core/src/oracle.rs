//! Brute-force enumeration of positive systems containing `P_k`, kept
//! independent of the constructive engine: no base changes, no Weyl words.
//! Simple systems are read off as indecomposable elements and highest-root
//! coefficients are counted by peeling off simple roots.

use serde::{Deserialize, Serialize};

use crate::bds::enumerate_bds;
use crate::error::{Error, Result};
use crate::root_system::RootSystem;
use crate::rootvec::{RootSet, RootVec};
use crate::series::count_series;
use crate::vogan::VoganDatum;

pub const DEFAULT_PAIR_BOUND: usize = 64;

struct Search<'a> {
    rs: &'a RootSystem,
    /// +1 in the system, −1 excluded, 0 open.
    state: Vec<i8>,
    trail: Vec<usize>,
    vars: Vec<usize>,
    found: Vec<RootSet>,
}

impl Search<'_> {
    /// Puts `r` in the system and closes under addition. On conflict the
    /// partial assignment stays on the trail for the caller to undo.
    fn assign(&mut self, r: usize) -> bool {
        let mut queue = vec![r];
        while let Some(a) = queue.pop() {
            match self.state[a] {
                1 => continue,
                -1 => return false,
                _ => {}
            }
            let na = self.rs.neg_index(a);
            if self.state[na] == 1 {
                return false;
            }
            self.state[a] = 1;
            self.state[na] = -1;
            self.trail.push(a);
            for s in 0..self.state.len() {
                if self.state[s] == 1 {
                    if let Some(t) = self.rs.sum_index(a, s) {
                        if self.state[t] != 1 {
                            queue.push(t);
                        }
                    }
                }
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let a = self.trail.pop().unwrap();
            self.state[a] = 0;
            self.state[self.rs.neg_index(a)] = 0;
        }
    }

    fn run(&mut self, k: usize) {
        let Some(&v) = self.vars[k..].iter().find(|&&v| self.state[v] == 0) else {
            self.found.push((0..self.state.len()).filter(|&i| self.state[i] == 1).collect());
            return;
        };
        for choice in [v, self.rs.neg_index(v)] {
            let mark = self.trail.len();
            if self.assign(choice) {
                self.run(k + 1);
            }
            self.undo_to(mark);
        }
    }
}

/// Every positive system of `Δ` containing `P_k`, in canonical order.
pub fn brute_positive_systems(vd: &VoganDatum, pair_bound: usize) -> Result<Vec<RootSet>> {
    let pairs = vd.noncompact_pairs();
    if pairs > pair_bound {
        return Err(Error::OracleBound { pairs, bound: pair_bound });
    }
    let rs = vd.root_system();
    let mut vars: Vec<usize> = vd.noncompact_roots().iter().filter(|&i| rs.is_positive_index(i)).collect();
    vars.sort_by_key(|&i| (rs.root(i).height(), i));
    let mut search = Search { rs, state: vec![0; rs.len()], trail: Vec::new(), vars, found: Vec::new() };
    for i in vd.compact_positive().iter() {
        if !search.assign(i) {
            return Ok(Vec::new());
        }
    }
    search.run(0);
    let mut found = search.found;
    found.sort_by(|a, b| a.indices().cmp(b.indices()));
    Ok(found)
}

/// Elements of `set` that are not a sum of two elements of `set`.
pub fn indecomposables(set: &RootSet, rs: &RootSystem) -> Vec<usize> {
    let mut decomposable = vec![false; rs.len()];
    for a in set.iter() {
        for b in set.iter() {
            if let Some(c) = rs.sum_index(a, b) {
                decomposable[c] = true;
            }
        }
    }
    set.iter().filter(|&i| !decomposable[i]).collect()
}

/// Coefficient of `beta` in the highest root of `set`, found by repeatedly
/// subtracting simple roots while staying inside `set`. `None` if the
/// highest root is not unique.
fn highest_coefficient(set: &RootSet, simple: &[usize], beta: usize, rs: &RootSystem) -> Option<i64> {
    let tops: Vec<usize> = set
        .iter()
        .filter(|&h| simple.iter().all(|&s| rs.sum_index(h, s).is_none()))
        .collect();
    let [mut h] = tops[..] else { return None };
    let mut count = 0;
    loop {
        if simple.contains(&h) {
            return Some(count + i64::from(h == beta));
        }
        let s = *simple.iter().find(|&&s| {
            let d = rs.root(h) - rs.root(s);
            rs.index_of(&d).is_some_and(|j| set.contains(j))
        })?;
        count += i64::from(s == beta);
        h = rs.index_of(&(rs.root(h) - rs.root(s))).unwrap();
    }
}

/// Keeps the systems whose simple system has exactly one non-compact root,
/// occurring in the highest root with coefficient 2 (1 when Hermitian).
pub fn brute_bds_filter(systems: &[RootSet], vd: &VoganDatum) -> Vec<RootSet> {
    let rs = vd.root_system();
    let want = if vd.is_hermitian() { 1 } else { 2 };
    systems
        .iter()
        .filter(|set| {
            let simple = indecomposables(set, rs);
            if simple.len() != rs.rank() {
                return false;
            }
            let nc: Vec<usize> = simple.iter().copied().filter(|&i| !vd.is_compact(rs.root(i))).collect();
            let [beta] = nc[..] else { return false };
            highest_coefficient(set, &simple, beta, rs) == Some(want)
        })
        .cloned()
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub datum: String,
    pub noncompact_pairs: usize,
    pub positive_systems: usize,
    pub expected_positive_systems: u64,
    pub oracle_bds: usize,
    pub enumerated_bds: usize,
    /// Simple systems found only by the oracle.
    pub only_oracle: Vec<Vec<RootVec>>,
    /// Simple systems found only by the constructive enumeration.
    pub only_enumerated: Vec<Vec<RootVec>>,
    pub ok: bool,
}

pub fn oracle_check(vd: &VoganDatum, pair_bound: usize) -> Result<OracleReport> {
    let rs = vd.root_system();
    let all = brute_positive_systems(vd, pair_bound)?;
    let survivors = brute_bds_filter(&all, vd);
    let mut enumerated: Vec<RootSet> = enumerate_bds(vd)?.into_iter().map(|s| s.positive_set).collect();
    enumerated.sort_by(|a, b| a.indices().cmp(b.indices()));
    let simple_of = |s: &RootSet| indecomposables(s, rs).into_iter().map(|i| rs.root(i).clone()).collect();
    let only_oracle: Vec<Vec<RootVec>> =
        survivors.iter().filter(|s| !enumerated.contains(s)).map(simple_of).collect();
    let only_enumerated: Vec<Vec<RootVec>> =
        enumerated.iter().filter(|s| !survivors.contains(s)).map(simple_of).collect();
    let expected = count_series(vd)?.total;
    let ok = only_oracle.is_empty() && only_enumerated.is_empty() && all.len() as u64 == expected;
    Ok(OracleReport {
        datum: vd.label(),
        noncompact_pairs: vd.noncompact_pairs(),
        positive_systems: all.len(),
        expected_positive_systems: expected,
        oracle_bds: survivors.len(),
        enumerated_bds: enumerated.len(),
        only_oracle,
        only_enumerated,
        ok,
    })
}
