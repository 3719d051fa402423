//! Graph reading of a map: P-cycles are vertices, (P·π)-cycles are faces,
//! ϱ-pairs are edges, and components are the orbits under P and ϱ together.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::map::{CombMap, EdgePair};
use crate::perm::{Corner, Perm};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphView {
    pub vertices: Vec<Vec<Corner>>,
    pub faces: Vec<Vec<Corner>>,
    pub edge_pairs: Vec<EdgePair>,
    /// Orbits of the corners under ⟨P, ϱ⟩, each sorted, ordered by minimum.
    pub components: Vec<Vec<Corner>>,
}

fn orbits(n: usize, gens: &[&Perm]) -> Vec<Vec<Corner>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 1..=n {
        if seen[start - 1] {
            continue;
        }
        let mut stack = vec![start];
        let mut orbit = Vec::new();
        seen[start - 1] = true;
        while let Some(c) = stack.pop() {
            orbit.push(c);
            for g in gens {
                let d = g.apply(c);
                if !seen[d - 1] {
                    seen[d - 1] = true;
                    stack.push(d);
                }
            }
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

pub fn view(map: &CombMap) -> GraphView {
    let rho = map.e_matching();
    GraphView {
        vertices: map.vertex_permutation().cycles(),
        faces: map.face_permutation().cycles(),
        edge_pairs: map.edges(),
        components: orbits(map.order(), &[map.vertex_permutation(), &rho]),
    }
}

/// Per-component Euler characteristic χ = V − E + F.
pub fn euler_characteristic(map: &CombMap) -> Vec<i64> {
    let gv = view(map);
    gv.components
        .iter()
        .map(|comp| {
            let contains = |c: Corner| comp.binary_search(&c).is_ok();
            let v = gv.vertices.iter().filter(|cy| contains(cy[0])).count() as i64;
            let e = gv.edge_pairs.iter().filter(|ep| contains(ep.0)).count() as i64;
            let f = gv.faces.iter().filter(|cy| contains(cy[0])).count() as i64;
            let chi = v - e + f;
            // a failure here would mean the vertex/face convention broke
            assert!(chi % 2 == 0 && chi <= 2, "χ = {chi} for component {comp:?}");
            chi
        })
        .collect()
}

/// Per-component genus g = (2 − χ)/2.
pub fn genus(map: &CombMap) -> Vec<i64> {
    euler_characteristic(map).iter().map(|chi| (2 - chi) / 2).collect()
}

/// Render the underlying graph, one edge per ϱ-pair between the vertex
/// cycles containing its corners (loops allowed).
pub fn export_graph(map: &CombMap, format: &str) -> Result<String> {
    let gv = view(map);
    let chi = euler_characteristic(map);
    // vertex label = 1-based index of the containing P-cycle
    let mut label = vec![0usize; map.order()];
    for (i, cycle) in gv.vertices.iter().enumerate() {
        for &c in cycle {
            label[c - 1] = i + 1;
        }
    }
    let edges: Vec<(usize, usize)> = gv
        .edge_pairs
        .iter()
        .map(|ep| (label[ep.0 - 1], label[ep.1 - 1]))
        .collect();
    match format {
        "edge-list" => {
            let mut out = String::new();
            for (i, comp) in gv.components.iter().enumerate() {
                let contains = |c: Corner| comp.binary_search(&c).is_ok();
                let v = gv.vertices.iter().filter(|cy| contains(cy[0])).count();
                let e = gv.edge_pairs.iter().filter(|ep| contains(ep.0)).count();
                let f = gv.faces.iter().filter(|cy| contains(cy[0])).count();
                let g = (2 - chi[i]) / 2;
                writeln!(
                    out,
                    "# component {}: V={} E={} F={} chi={} genus={}",
                    i + 1,
                    v,
                    e,
                    f,
                    chi[i],
                    g
                )
                .unwrap();
            }
            for (a, b) in edges {
                writeln!(out, "v{a} v{b}").unwrap();
            }
            Ok(out)
        }
        "dot" => {
            let mut out = String::from("graph map {\n");
            for i in 1..=gv.vertices.len() {
                writeln!(out, "  v{i};").unwrap();
            }
            for (a, b) in edges {
                writeln!(out, "  v{a} -- v{b};").unwrap();
            }
            out.push_str("}\n");
            Ok(out)
        }
        other => Err(Error::UnknownFormat(other.to_string())),
    }
}
