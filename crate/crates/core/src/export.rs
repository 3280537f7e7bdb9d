//! Graphviz export of the weights of `p`: nodes are the non-compact roots,
//! with an edge `β → β + φ` labeled `φ` for every `φ ∈ Φ_k`.

use std::fmt::Write;

use crate::vogan::{compact_datum, VoganDatum};

/// `(source, target, label index into phi_k)` as root indices, in canonical
/// order.
pub fn weight_edges(vd: &VoganDatum) -> Vec<(usize, usize, usize)> {
    let rs = vd.root_system();
    let cd = compact_datum(vd);
    let mut edges = Vec::new();
    for b in cd.delta_n.iter() {
        for (k, phi) in cd.phi_k.elements().iter().enumerate() {
            if let Some(t) = rs.sum_roots(rs.root(b), phi).and_then(|g| rs.index_of(&g)) {
                edges.push((b, t, k));
            }
        }
    }
    edges
}

pub fn export_dot(vd: &VoganDatum) -> String {
    let rs = vd.root_system();
    let cd = compact_datum(vd);
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", vd.label()).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    for i in cd.delta_n.iter() {
        let r = rs.root(i);
        let shape = if *r == cd.lambda { "doublecircle" } else { "ellipse" };
        writeln!(out, "  \"{r}\" [shape={shape}];").unwrap();
    }
    for (b, t, k) in weight_edges(vd) {
        writeln!(out, "  \"{}\" -> \"{}\" [label=\"{}\"];", rs.root(b), rs.root(t), cd.labels[k]).unwrap();
    }
    out.push_str("}\n");
    out
}
