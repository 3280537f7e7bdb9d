//! Finite root systems generated from Cartan data in exact arithmetic.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::lie_type::LieType;
use crate::linalg::Q;
use crate::rootvec::RootVec;

/// Closure aborts once more than this many roots have been produced.
pub const ROOT_BOUND: usize = 480;

/// A reduced irreducible finite root system with its simple system `Φ`.
///
/// Roots are kept in canonical order (height, then lexicographic), so the
/// negative roots come first and the highest root is last. Immutable after
/// construction.
#[derive(Debug, Clone)]
pub struct RootSystem {
    lie_type: Option<LieType>,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<Q>,
    // gram[i][j] = scale * (φ_i, φ_j), all integers
    gram: Vec<Vec<i64>>,
    scale: i64,
    roots: Vec<RootVec>,
    index: HashMap<RootVec, usize>,
    negation: Vec<usize>,
    sums: Vec<Option<u32>>,
    highest: usize,
}

impl RootSystem {
    /// Root system of a named simple type.
    pub fn of_type(t: LieType) -> Self {
        let mut rs = generate_roots(&t.cartan_matrix()).expect("standard Cartan matrices are finite type");
        rs.lie_type = Some(t);
        rs
    }

    pub fn lie_type(&self) -> Option<LieType> {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `d_i = (φ_i, φ_i) / 2`, normalized so long roots have `d_i = 1`.
    pub fn symmetrizer(&self) -> &[Q] {
        &self.symmetrizer
    }

    pub fn roots(&self) -> &[RootVec] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn root(&self, idx: usize) -> &RootVec {
        &self.roots[idx]
    }

    /// Indices of the positive roots, in canonical order.
    pub fn positive_indices(&self) -> impl Iterator<Item = usize> + '_ {
        let half = self.roots.len() / 2;
        half..self.roots.len()
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &RootVec> + '_ {
        self.roots[self.roots.len() / 2..].iter()
    }

    pub fn is_positive_index(&self, idx: usize) -> bool {
        idx >= self.roots.len() / 2
    }

    pub fn highest_root(&self) -> &RootVec {
        &self.roots[self.highest]
    }

    pub fn simple_root(&self, i: usize) -> RootVec {
        RootVec::simple(self.rank(), i)
    }

    pub fn simple_roots(&self) -> Vec<RootVec> {
        (0..self.rank()).map(|i| self.simple_root(i)).collect()
    }

    pub fn index_of(&self, v: &RootVec) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn is_root(&self, v: &RootVec) -> bool {
        self.index.contains_key(v)
    }

    pub fn neg_index(&self, idx: usize) -> usize {
        self.negation[idx]
    }

    /// Index of `roots[a] + roots[b]` when that sum is a root.
    pub fn sum_index(&self, a: usize, b: usize) -> Option<usize> {
        self.sums[a * self.roots.len() + b].map(|x| x as usize)
    }

    /// `α + β` if it is a root.
    pub fn sum_roots(&self, a: &RootVec, b: &RootVec) -> Option<RootVec> {
        let s = a + b;
        self.is_root(&s).then_some(s)
    }

    /// `scale · (a, b)` as an exact integer; see [`RootSystem::pairing`].
    pub fn pairing_scaled(&self, a: &RootVec, b: &RootVec) -> i64 {
        assert_eq!(a.rank(), self.rank());
        assert_eq!(b.rank(), self.rank());
        let mut s = 0;
        for (i, row) in self.gram.iter().enumerate() {
            if a[i] == 0 {
                continue;
            }
            let t: i64 = row.iter().zip(b.coeffs()).map(|(g, x)| g * x).sum();
            s += a[i] * t;
        }
        s
    }

    /// W-invariant inner product with long roots of squared length 2.
    pub fn pairing(&self, a: &RootVec, b: &RootVec) -> Q {
        Q::new(self.pairing_scaled(a, b), self.scale)
    }

    /// `⟨a, b^∨⟩ = 2 (a, b) / (b, b)`; must be an integer.
    pub fn cartan_integer(&self, a: &RootVec, b: &RootVec) -> Result<i64> {
        for v in [a, b] {
            if v.rank() != self.rank() {
                return Err(Error::DimensionMismatch { rank: self.rank(), got: v.rank() });
            }
        }
        if b.is_zero() {
            return Err(Error::ZeroVector);
        }
        let num = 2 * self.pairing_scaled(a, b);
        let den = self.pairing_scaled(b, b);
        if num % den != 0 {
            return Err(Error::NonIntegral(format!("2({a},{b})/({b},{b})")));
        }
        Ok(num / den)
    }

    /// Canonical text form: type, Cartan matrix, symmetrizer, highest root
    /// and the full root list.
    pub fn dump_text(&self) -> String {
        let mut s = String::new();
        match self.lie_type {
            Some(t) => writeln!(s, "type {t}").unwrap(),
            None => writeln!(s, "type ?").unwrap(),
        }
        writeln!(s, "rank {}", self.rank()).unwrap();
        writeln!(s, "cartan").unwrap();
        for row in &self.cartan {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(s, "  {}", cells.join(" ")).unwrap();
        }
        let d: Vec<String> = self.symmetrizer.iter().map(|x| x.to_string()).collect();
        writeln!(s, "symmetrizer {}", d.join(" ")).unwrap();
        writeln!(s, "highest {}", self.highest_root()).unwrap();
        writeln!(s, "roots {}", self.roots.len()).unwrap();
        for r in &self.roots {
            writeln!(s, "  {r}").unwrap();
        }
        s
    }
}

fn check_generalized_cartan(a: &[Vec<i64>]) -> Result<()> {
    let n = a.len();
    if n == 0 {
        return Err(Error::NotFiniteType("empty matrix".into()));
    }
    for (i, row) in a.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotFiniteType("matrix is not square".into()));
        }
        if row[i] != 2 {
            return Err(Error::NotFiniteType(format!("diagonal entry {i} is {}", row[i])));
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            if row[j] > 0 {
                return Err(Error::NotFiniteType(format!("positive off-diagonal entry at ({i},{j})")));
            }
            if (row[j] == 0) != (a[j][i] == 0) {
                return Err(Error::NotFiniteType(format!("asymmetric zero pattern at ({i},{j})")));
            }
        }
    }
    Ok(())
}

/// Connected components of the Dynkin graph of `a`, each sorted, ordered by
/// smallest node.
pub(crate) fn components(a: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = a.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for v in 0..n {
                if !seen[v] && a[u][v] != 0 {
                    seen[v] = true;
                    comp.push(v);
                    queue.push_back(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Solves `d_i A_ij = d_j A_ji`, normalizing the largest `d` of each
/// component to 1.
fn symmetrize(a: &[Vec<i64>]) -> Result<Vec<Q>> {
    let n = a.len();
    let mut d: Vec<Option<Q>> = vec![None; n];
    for comp in components(a) {
        d[comp[0]] = Some(Q::from_integer(1));
        let mut queue = VecDeque::from([comp[0]]);
        while let Some(i) = queue.pop_front() {
            let di = d[i].unwrap();
            for j in 0..n {
                if i == j || a[i][j] == 0 {
                    continue;
                }
                let dj = di * Q::new(a[i][j], a[j][i]);
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        queue.push_back(j);
                    }
                    Some(x) if x != dj => {
                        return Err(Error::NotFiniteType("matrix is not symmetrizable".into()));
                    }
                    Some(_) => {}
                }
            }
        }
        let max = comp.iter().map(|&i| d[i].unwrap()).max().unwrap();
        for &i in &comp {
            d[i] = Some(d[i].unwrap() / max);
        }
    }
    Ok(d.into_iter().map(Option::unwrap).collect())
}

/// Positive roots of any finite-type (possibly reducible) Cartan matrix, by
/// extending root strings one simple root at a time.
pub(crate) fn positive_roots_of(a: &[Vec<i64>]) -> Result<Vec<RootVec>> {
    check_generalized_cartan(a)?;
    let n = a.len();
    let mut known: HashSet<RootVec> = HashSet::new();
    let mut all: Vec<RootVec> = Vec::new();
    let mut layer: Vec<RootVec> = (0..n).map(|i| RootVec::simple(n, i)).collect();
    while !layer.is_empty() {
        for r in &layer {
            known.insert(r.clone());
        }
        all.extend(layer.iter().cloned());
        if 2 * all.len() > ROOT_BOUND {
            return Err(Error::RootBoundExceeded { bound: ROOT_BOUND });
        }
        let mut next: Vec<RootVec> = Vec::new();
        let mut next_seen: HashSet<RootVec> = HashSet::new();
        for r in &layer {
            for (i, row) in a.iter().enumerate() {
                let simple = RootVec::simple(n, i);
                if *r == simple {
                    continue;
                }
                // p: how far the φ_i-string extends downward from r
                let mut p = 0;
                let mut down = r - &simple;
                while known.contains(&down) {
                    p += 1;
                    down = &down - &simple;
                }
                let pairing: i64 = row.iter().zip(r.coeffs()).map(|(x, c)| x * c).sum();
                let q = p - pairing;
                if q > 0 {
                    let up = r + &simple;
                    if next_seen.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        layer = next;
    }
    Ok(all)
}

/// Builds the full root system of an irreducible finite-type Cartan matrix.
pub fn generate_roots(cartan: &[Vec<i64>]) -> Result<RootSystem> {
    let positive = positive_roots_of(cartan)?;
    if components(cartan).len() != 1 {
        return Err(Error::Reducible);
    }
    let symmetrizer = symmetrize(cartan)?;
    let scale = symmetrizer.iter().fold(1i64, |acc, d| lcm(acc, *d.denom()));
    let n = cartan.len();
    let gram: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let di = symmetrizer[i] * scale;
            (0..n).map(|j| (di * cartan[i][j]).to_integer()).collect()
        })
        .collect();

    let mut roots: Vec<RootVec> = positive.iter().map(|r| -r).collect();
    roots.extend(positive);
    roots.sort_by(|a, b| a.canonical_cmp(b));
    let index: HashMap<RootVec, usize> =
        roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
    let negation: Vec<usize> = roots.iter().map(|r| index[&-r]).collect();
    let m = roots.len();
    let mut sums = vec![None; m * m];
    for a in 0..m {
        for b in 0..m {
            if let Some(&s) = index.get(&(&roots[a] + &roots[b])) {
                sums[a * m + b] = Some(s as u32);
            }
        }
    }
    let maximal: Vec<usize> = (m / 2..m)
        .filter(|&i| (0..n).all(|j| !index.contains_key(&(&roots[i] + &RootVec::simple(n, j)))))
        .collect();
    if maximal.len() != 1 {
        return Err(Error::Reducible);
    }
    Ok(RootSystem {
        lie_type: None,
        cartan: cartan.to_vec(),
        symmetrizer,
        gram,
        scale,
        roots,
        index,
        negation,
        sums,
        highest: maximal[0],
    })
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}
