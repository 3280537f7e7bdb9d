//! Abstract Dynkin diagrams: component splitting, type recognition by
//! Cartan-matrix isomorphism, and a plain-text rendering.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie_type::{Family, LieType};
use crate::root_system::components;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DynkinDiagram {
    pub labels: Vec<String>,
    /// `cartan[i][j] = 2 (s_i, s_j) / (s_i, s_i)`.
    pub cartan: Vec<Vec<i64>>,
}

/// One connected component with its recognized type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub lie_type: LieType,
    pub nodes: Vec<usize>,
}

impl DynkinDiagram {
    pub fn new(labels: Vec<String>, cartan: Vec<Vec<i64>>) -> Self {
        assert_eq!(labels.len(), cartan.len());
        DynkinDiagram { labels, cartan }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        if self.is_empty() {
            return Vec::new();
        }
        components(&self.cartan)
    }

    /// Recognizes every component; fails if any is not of finite type.
    pub fn recognize(&self) -> Result<Vec<Component>> {
        self.components()
            .into_iter()
            .map(|nodes| {
                let sub = submatrix(&self.cartan, &nodes);
                match recognize_connected(&sub) {
                    Some(lie_type) => Ok(Component { lie_type, nodes }),
                    None => {
                        let names: Vec<&str> = nodes.iter().map(|&i| self.labels[i].as_str()).collect();
                        Err(Error::NotFiniteDiagram(names.join(",")))
                    }
                }
            })
            .collect()
    }

    /// Short type summary such as `A5 + A1`.
    pub fn type_summary(&self) -> Result<String> {
        let comps = self.recognize()?;
        if comps.is_empty() {
            return Ok("empty".into());
        }
        Ok(comps
            .iter()
            .map(|c| c.lie_type.to_string())
            .collect::<Vec<_>>()
            .join(" + "))
    }

    /// Plain-text rendering. Each component prints its longest path on one
    /// line; remaining nodes are listed with the spine node they hang off.
    /// Bonds: `---` single, `==>` double, `=3>` triple, arrows pointing at
    /// the shorter root.
    pub fn render_ascii(&self) -> String {
        let mut out = String::new();
        for comp in self.components() {
            let spine = longest_path(&self.cartan, &comp);
            let mut line = String::new();
            for (k, &u) in spine.iter().enumerate() {
                if k > 0 {
                    line.push_str(&format!(" {} ", self.bond(spine[k - 1], u)));
                }
                line.push_str(&self.labels[u]);
            }
            writeln!(out, "{line}").unwrap();
            for &v in &comp {
                if spine.contains(&v) {
                    continue;
                }
                let anchor = comp
                    .iter()
                    .copied()
                    .find(|&u| u != v && self.cartan[u][v] != 0)
                    .expect("connected component");
                let indent = " ".repeat(2);
                writeln!(out, "{indent}{} {} {}", self.labels[anchor], self.bond(anchor, v), self.labels[v]).unwrap();
            }
        }
        out
    }

    fn bond(&self, u: usize, v: usize) -> &'static str {
        let (uv, vu) = (self.cartan[u][v], self.cartan[v][u]);
        let m = uv.abs().max(vu.abs());
        // |A[v][u]| > 1 means v is the shorter root
        let towards_v = vu.abs() > uv.abs();
        match (m, towards_v) {
            (1, _) => "---",
            (2, true) => "==>",
            (2, false) => "<==",
            (3, true) => "=3>",
            (3, false) => "<3=",
            _ => "???",
        }
    }
}

pub(crate) fn submatrix(a: &[Vec<i64>], nodes: &[usize]) -> Vec<Vec<i64>> {
    nodes
        .iter()
        .map(|&i| nodes.iter().map(|&j| a[i][j]).collect())
        .collect()
}

/// Finds the standard connected type whose Cartan matrix is a simultaneous
/// permutation of `m`.
pub fn recognize_connected(m: &[Vec<i64>]) -> Option<LieType> {
    let n = m.len();
    Family::ALL
        .iter()
        .filter_map(|&f| LieType::new(f, n).ok())
        .find(|t| isomorphic(m, &t.cartan_matrix()))
}

/// Whether some permutation `π` has `a[i][j] = b[π i][π j]` for all `i, j`.
pub fn isomorphic(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    let n = a.len();
    if b.len() != n {
        return false;
    }
    let signature = |m: &[Vec<i64>], i: usize| {
        let mut s: Vec<(i64, i64)> = (0..n).filter(|&j| j != i).map(|j| (m[i][j], m[j][i])).collect();
        s.sort_unstable();
        s
    };
    let sig_a: Vec<_> = (0..n).map(|i| signature(a, i)).collect();
    let sig_b: Vec<_> = (0..n).map(|i| signature(b, i)).collect();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        i: usize,
        a: &[Vec<i64>],
        b: &[Vec<i64>],
        sig_a: &[Vec<(i64, i64)>],
        sig_b: &[Vec<(i64, i64)>],
        perm: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let n = a.len();
        if i == n {
            return true;
        }
        for c in 0..n {
            if used[c] || sig_a[i] != sig_b[c] {
                continue;
            }
            if (0..i).all(|k| a[i][k] == b[c][perm[k]] && a[k][i] == b[perm[k]][c]) {
                perm[i] = c;
                used[c] = true;
                if extend(i + 1, a, b, sig_a, sig_b, perm, used) {
                    return true;
                }
                used[c] = false;
            }
        }
        false
    }
    extend(0, a, b, &sig_a, &sig_b, &mut perm, &mut used)
}

/// Longest simple path inside a tree component; ties broken toward the
/// lexicographically smallest node sequence.
fn longest_path(a: &[Vec<i64>], comp: &[usize]) -> Vec<usize> {
    fn dfs(a: &[Vec<i64>], comp: &[usize], path: &mut Vec<usize>, best: &mut Vec<usize>) {
        if path.len() > best.len() || (path.len() == best.len() && *path < *best) {
            *best = path.clone();
        }
        let last = *path.last().unwrap();
        for &v in comp {
            if a[last][v] != 0 && v != last && !path.contains(&v) {
                path.push(v);
                dfs(a, comp, path, best);
                path.pop();
            }
        }
    }
    let mut best = Vec::new();
    for &start in comp {
        let mut path = vec![start];
        dfs(a, comp, &mut path, &mut best);
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diagram(t: LieType) -> DynkinDiagram {
        let labels = (1..=t.rank()).map(|i| format!("phi{i}")).collect();
        DynkinDiagram::new(labels, t.cartan_matrix())
    }

    #[test]
    fn recognizes_every_standard_type() {
        for t in LieType::all_up_to(8) {
            let got = recognize_connected(&t.cartan_matrix()).unwrap();
            // B2 and C2 share a diagram
            if t.to_string() == "C2" {
                assert_eq!(got.to_string(), "B2");
            } else {
                assert_eq!(got, t);
            }
        }
    }

    #[test]
    fn recognizes_permuted_d4() {
        // D4 with the branch node first
        let m = vec![
            vec![2, -1, -1, -1],
            vec![-1, 2, 0, 0],
            vec![-1, 0, 2, 0],
            vec![-1, 0, 0, 2],
        ];
        assert_eq!(recognize_connected(&m).unwrap().to_string(), "D4");
    }

    #[test]
    fn rejects_affine_component() {
        let d = DynkinDiagram::new(
            vec!["x".into(), "y".into()],
            vec![vec![2, -2], vec![-2, 2]],
        );
        assert!(matches!(d.recognize(), Err(Error::NotFiniteDiagram(_))));
    }

    #[test]
    fn b3_rendering() {
        let t = LieType::new(Family::B, 3).unwrap();
        assert_eq!(diagram(t).render_ascii(), "phi1 --- phi2 ==> phi3\n");
        let g = LieType::new(Family::G, 2).unwrap();
        assert_eq!(diagram(g).render_ascii(), "phi1 =3> phi2\n");
    }

    #[test]
    fn e6_rendering_lists_branch() {
        let t = LieType::new(Family::E, 6).unwrap();
        let text = diagram(t).render_ascii();
        assert_eq!(text, "phi1 --- phi3 --- phi4 --- phi5 --- phi6\n  phi4 --- phi2\n");
    }
}
