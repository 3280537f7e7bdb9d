//! Shared fixtures and independent oracles for the integration tests.
#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};
use std::sync::OnceLock;

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;
use rootsys::bds::candidate_pairs;
use rootsys::linalg::{determinant, from_columns};
use rootsys::vogan::gradation;
use rootsys::weyl::longest_involution;
use rootsys::{
    antidominant_rep, compact_datum, dominant_rep, enumerate_bds, Family, LieType, RootSystem, RootVec, SubBase,
    VoganDatum,
};

pub fn datum(f: Family, l: usize, nu: usize) -> VoganDatum {
    VoganDatum::new(LieType::new(f, l).unwrap(), nu - 1).unwrap()
}

/// Sum of `coef * φ_i` for `i` in `from..=to` (1-based), over several ranges.
pub fn span(l: usize, ranges: &[(i64, usize, usize)]) -> RootVec {
    let mut v = vec![0; l];
    for &(c, from, to) in ranges {
        for x in &mut v[from - 1..to] {
            *x += c;
        }
    }
    RootVec::new(v)
}

pub struct PairFixture {
    pub phi_prime: usize,
    pub phi: usize,
    pub nu_prime: RootVec,
    /// `φ − ε − 2ν'`, stated independently.
    pub rest: RootVec,
}

pub struct Fixture {
    pub vd: VoganDatum,
    pub epsilon: RootVec,
    pub lambda: RootVec,
    pub pairs: Vec<PairFixture>,
}

fn pair(phi_prime: usize, phi: usize, nu_prime: RootVec, rest: RootVec) -> PairFixture {
    PairFixture { phi_prime, phi, nu_prime: -nu_prime, rest }
}

fn b_fixture(l: usize, p: usize) -> Fixture {
    Fixture {
        vd: datum(Family::B, l, p),
        epsilon: span(l, &[(1, p - 1, p - 1), (2, p, l)]),
        lambda: span(l, &[(1, 1, p), (2, p + 1, l)]),
        pairs: vec![pair(1, p - 1, span(l, &[(1, p, p), (2, p + 1, l)]), span(l, &[(2, p + 1, l)]))],
    }
}

fn c_fixture(l: usize, p: usize) -> Fixture {
    Fixture {
        vd: datum(Family::C, l, p),
        epsilon: span(l, &[(2, p, l - 1), (1, l, l)]),
        lambda: span(l, &[(1, 1, p), (2, p + 1, l - 1), (1, l, l)]),
        pairs: vec![pair(l, l, span(l, &[(1, 1, l - 1)]), span(l, &[(2, 1, p - 1)]))],
    }
}

fn d_fixture(l: usize, p: usize) -> Fixture {
    let tail_rest = |other: usize| span(l, &[(2, 1, p - 2), (1, p - 1, p - 1), (1, other, other)]);
    let (img_lm1, img_l) = if (l - p).is_multiple_of(2) { (l - 1, l) } else { (l, l - 1) };
    let nu_for = |phi: usize| {
        if phi == l {
            span(l, &[(1, 1, l - 1)])
        } else {
            span(l, &[(1, 1, l - 2), (1, l, l)])
        }
    };
    let rest_for = |phi: usize| tail_rest(if phi == l { l - 1 } else { l });
    Fixture {
        vd: datum(Family::D, l, p),
        epsilon: span(l, &[(1, p - 1, p - 1), (2, p, l - 2), (1, l - 1, l)]),
        lambda: span(l, &[(1, 1, p), (2, p + 1, l - 2), (1, l - 1, l)]),
        pairs: vec![
            pair(
                1,
                p - 1,
                span(l, &[(1, p, p), (2, p + 1, l - 2), (1, l - 1, l)]),
                span(l, &[(2, p + 1, l - 2), (1, l - 1, l)]),
            ),
            pair(l - 1, img_lm1, nu_for(img_lm1), rest_for(img_lm1)),
            pair(l, img_l, nu_for(img_l), rest_for(img_l)),
        ],
    }
}

fn v(c: &[i64]) -> RootVec {
    RootVec::new(c.to_vec())
}

/// Every case of the classification, with weights transcribed as explicit
/// formulas in the simple roots.
pub fn fixtures() -> Vec<Fixture> {
    let mut out = Vec::new();
    for l in 2..=8 {
        for p in 2..=l {
            out.push(b_fixture(l, p));
        }
        for p in 1..l {
            out.push(c_fixture(l, p));
        }
        if l >= 4 {
            for p in 2..=l - 2 {
                out.push(d_fixture(l, p));
            }
        }
    }
    out.push(Fixture {
        vd: datum(Family::E, 6, 2),
        epsilon: v(&[1, 2, 2, 3, 2, 1]),
        lambda: v(&[1, 1, 2, 3, 2, 1]),
        pairs: vec![
            pair(1, 6, v(&[1, 1, 2, 2, 1, 0]), v(&[1, 0, 2, 1, 0, 0])),
            pair(6, 1, v(&[0, 1, 1, 2, 2, 1]), v(&[0, 0, 0, 1, 2, 1])),
        ],
    });
    out.push(Fixture {
        vd: datum(Family::E, 7, 1),
        epsilon: v(&[2, 2, 3, 4, 3, 2, 1]),
        lambda: v(&[1, 2, 3, 4, 3, 2, 1]),
        pairs: vec![pair(7, 7, v(&[1, 2, 2, 3, 2, 1, 0]), v(&[0, 2, 1, 2, 1, 0, 0]))],
    });
    out.push(Fixture {
        vd: datum(Family::E, 7, 2),
        epsilon: v(&[1, 2, 2, 3, 2, 1, 0]),
        lambda: v(&[1, 1, 2, 3, 3, 2, 1]),
        pairs: vec![pair(7, 1, v(&[0, 1, 1, 2, 2, 2, 1]), v(&[0, 0, 0, 1, 2, 3, 2]))],
    });
    out
}

/// Compares a fixture against the library; returns the list of mismatches.
pub fn fixture_mismatches(f: &Fixture) -> Vec<String> {
    let mut bad = Vec::new();
    let label = f.vd.label();
    let cd = compact_datum(&f.vd);
    if cd.epsilon.as_ref() != Some(&f.epsilon) {
        bad.push(format!("{label}: epsilon {:?} != {}", cd.epsilon, f.epsilon));
    }
    if cd.lambda != f.lambda {
        bad.push(format!("{label}: lambda {} != {}", cd.lambda, f.lambda));
    }
    let pairs = candidate_pairs(&cd, &f.vd).unwrap();
    let mut got: Vec<(usize, usize)> = pairs.iter().map(|p| (p.phi_prime + 1, p.phi + 1)).collect();
    let mut want: Vec<(usize, usize)> = f.pairs.iter().map(|p| (p.phi_prime, p.phi)).collect();
    got.sort();
    want.sort();
    if got != want {
        bad.push(format!("{label}: pairs {got:?} != {want:?}"));
    }
    let l = f.vd.rank();
    for fx in &f.pairs {
        let Some(p) = pairs.iter().find(|p| p.phi_prime + 1 == fx.phi_prime) else {
            bad.push(format!("{label}: no candidate pair for phi{}", fx.phi_prime));
            continue;
        };
        let nu_p = rootsys::bds::nu_prime(*p, &cd, &f.vd);
        if nu_p != fx.nu_prime {
            bad.push(format!("{label}: nu' for phi{} is {nu_p}, expected {}", fx.phi, fx.nu_prime));
        }
        let phi = RootVec::simple(l, fx.phi - 1);
        let rebuilt = &(&f.epsilon + &(2 * &fx.nu_prime)) + &fx.rest;
        if rebuilt != phi {
            bad.push(format!("{label}: relation for phi{} gives {rebuilt}", fx.phi));
        }
    }
    bad
}

/// `|W|` as the size of the orbit of `ρ` in fundamental-weight coordinates,
/// where `s_j` subtracts `λ_j` times column `j` of the Cartan matrix.
pub fn chamber_count(cartan: &[Vec<i64>]) -> u64 {
    let n = cartan.len();
    orbit_size(cartan, vec![1; n])
}

pub fn orbit_size(cartan: &[Vec<i64>], start: Vec<i64>) -> u64 {
    let n = cartan.len();
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(w) = queue.pop_front() {
        for j in 0..n {
            if w[j] == 0 {
                continue;
            }
            let next: Vec<i64> = (0..n).map(|i| w[i] - w[j] * cartan[i][j]).collect();
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen.len() as u64
}

/// `|W_k|` by chamber counting on each component of the compact diagram.
pub fn compact_weyl_order_bfs(vd: &VoganDatum) -> u64 {
    let rs = vd.root_system();
    let cd = compact_datum(vd);
    let a = cd.phi_k.induced_cartan(rs);
    let n = a.len();
    let mut seen = vec![false; n];
    let mut total = 1;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            for j in 0..n {
                if !seen[j] && a[i][j] != 0 {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            k += 1;
        }
        let sub: Vec<Vec<i64>> = comp.iter().map(|&i| comp.iter().map(|&j| a[i][j]).collect()).collect();
        total *= chamber_count(&sub);
    }
    total
}

pub fn all_data() -> &'static [VoganDatum] {
    static DATA: OnceLock<Vec<VoganDatum>> = OnceLock::new();
    DATA.get_or_init(|| VoganDatum::all_up_to(8))
}

pub fn all_systems() -> &'static [RootSystem] {
    static SYSTEMS: OnceLock<Vec<RootSystem>> = OnceLock::new();
    SYSTEMS.get_or_init(|| LieType::all_up_to(8).into_iter().map(RootSystem::of_type).collect())
}

fn pick<T>(items: &[T], seed: usize) -> &T {
    &items[seed % items.len()]
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg()))
    }
}

pub type Seeds = (usize, usize, usize);

pub fn seeds() -> impl Strategy<Value = Seeds> {
    (any::<usize>(), any::<usize>(), any::<usize>())
}

/// `{k : β + kα ∈ Δ}` is an unbroken interval `[−p, q]` with
/// `p − q = ⟨β, α^∨⟩`.
pub fn prop_root_strings((t, a, b): Seeds) -> Result<(), TestCaseError> {
    let rs = pick(all_systems(), t);
    let alpha = pick(rs.roots(), a);
    let beta = pick(rs.roots(), b);
    if alpha == beta || *alpha == -beta {
        return Ok(());
    }
    let ks: Vec<i64> = (-4..=4).filter(|&k| rs.is_root(&(beta + &(k * alpha)))).collect();
    let (lo, hi) = (ks[0], *ks.last().unwrap());
    check(ks.len() as i64 == hi - lo + 1, || format!("string of {beta} along {alpha} is broken: {ks:?}"))?;
    let pairing = rs.cartan_integer(beta, alpha).unwrap();
    check(-lo - hi == pairing, || format!("p - q = {} but pairing is {pairing}", -lo - hi))
}

fn random_sub_base(vd: &VoganDatum, mask: usize, use_k: bool) -> SubBase {
    let rs = vd.root_system();
    let full = if use_k { compact_datum(vd).phi_k } else { SubBase::new(rs.simple_roots(), rs).unwrap() };
    let els = full.elements().iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e.clone()).collect();
    SubBase::new(els, rs).unwrap()
}

/// The antidominant representative is certified by its word, is fixed by a
/// second reduction, and mirrors the dominant representative.
pub fn prop_antidominant((d, m, r): Seeds) -> Result<(), TestCaseError> {
    let vd = pick(all_data(), d);
    let rs = vd.root_system();
    let s = random_sub_base(vd, m, m % 3 == 0);
    let n = rs.rank();
    let v = if r % 2 == 0 {
        pick(rs.roots(), r / 2).clone()
    } else {
        RootVec::new((0..n).map(|i| ((r >> (3 * i)) % 7) as i64 - 3).collect())
    };
    let (u, w) = antidominant_rep(&v, &s, rs);
    check(w.apply(&v, rs) == u, || "word does not carry v to u".into())?;
    check(w.apply_inverse(&u, rs) == v, || "inverse word does not return to v".into())?;
    for a in s.elements() {
        check(rs.cartan_integer(&u, a).unwrap() <= 0, || format!("{u} pairs positively with {a}"))?;
    }
    let (u2, w2) = antidominant_rep(&u, &s, rs);
    check(u2 == u && w2.is_empty(), || "antidominant vector is not a fixed point".into())?;
    let (dv, _) = dominant_rep(&v, &s, rs);
    check(dv == -antidominant_rep(&-&v, &s, rs).0, || "dominant != -antidominant(-v)".into())
}

/// The diagram involution induced by the longest element squares to the
/// identity and preserves the induced Cartan matrix.
pub fn prop_involution((d, m, k): Seeds) -> Result<(), TestCaseError> {
    let vd = pick(all_data(), d);
    let rs = vd.root_system();
    let s = random_sub_base(vd, m, k % 2 == 0);
    let inv = longest_involution(&s, rs);
    let a = s.induced_cartan(rs);
    for i in 0..s.len() {
        check(inv[inv[i]] == i, || format!("involution is not involutive at {i}: {inv:?}"))?;
        for j in 0..s.len() {
            check(a[inv[i]][inv[j]] == a[i][j], || "involution is not a diagram automorphism".into())?;
        }
    }
    Ok(())
}

/// Every enumerated base has determinant ±1 and the Cartan matrix of `g`
/// up to relabeling.
pub fn prop_unimodular((d, _, _): Seeds) -> Result<(), TestCaseError> {
    let vd = pick(all_data(), d);
    let rs = vd.root_system();
    for sys in enumerate_bds(vd).unwrap() {
        let cols: Vec<Vec<i64>> = sys.base.iter().map(|b| b.coeffs().to_vec()).collect();
        let det = determinant(&from_columns(&cols));
        check(det.abs() == 1, || format!("{}: determinant {det}", vd.label()))?;
        let sb = SubBase::new(sys.base.clone(), rs).unwrap();
        check(rootsys::dynkin::isomorphic(&sb.induced_cartan(rs), rs.cartan()), || {
            format!("{}: induced Cartan matrix differs", vd.label())
        })?;
    }
    Ok(())
}

/// `n_ν` is additive on sums of roots, and the layers partition `Δ`
/// symmetrically.
pub fn prop_gradation((d, a, b): Seeds) -> Result<(), TestCaseError> {
    let vd = pick(all_data(), d);
    let rs = vd.root_system();
    let (x, y) = (pick(rs.roots(), a), pick(rs.roots(), b));
    if let Some(z) = rs.sum_roots(x, y) {
        check(vd.grade(&z) == vd.grade(x) + vd.grade(y), || format!("grade not additive on {x} + {y}"))?;
    }
    let g = gradation(vd);
    let mut total = 0;
    for i in -2..=2 {
        let layer = g.layer(i);
        total += layer.len();
        let mirrored: rootsys::RootSet = layer.iter().map(|r| rs.neg_index(r)).collect();
        check(mirrored == g.layer(-i), || format!("layer {i} is not mirrored"))?;
        check(layer.iter().all(|r| vd.grade(rs.root(r)) == i), || format!("layer {i} is mislabeled"))?;
    }
    check(total == rs.len(), || "layers do not cover the roots".into())
}
