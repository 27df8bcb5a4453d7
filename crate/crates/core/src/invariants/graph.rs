use num_bigint::BigInt;
use serde::Serialize;

use super::{big, edge_label, kappa, Params};

/// Labeled graph on `{0..s_max}` after deleting vertices and edges labeled below `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FanoGraph {
    pub k: u32,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Vertex {
    pub s: u32,
    #[serde(with = "super::bigint_json")]
    pub kappa: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub ends: (u32, u32),
    #[serde(with = "super::bigint_json")]
    pub label: BigInt,
}

impl FanoGraph {
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

pub fn build_graph(params: &Params) -> FanoGraph {
    let k = big(params.k);
    let vertices: Vec<Vertex> = (0..=params.s_max())
        .map(|s| Vertex { s, kappa: kappa(params, s).expect("s in range") })
        .filter(|v| v.kappa >= k)
        .collect();
    let mut edges = Vec::new();
    for (i, a) in vertices.iter().enumerate() {
        for b in &vertices[i + 1..] {
            let label = edge_label(params, a.s, b.s).expect("a.s < b.s");
            if label >= k {
                edges.push(Edge { ends: (a.s, b.s), label });
            }
        }
    }
    FanoGraph { k: params.k, vertices, edges }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut root = x;
    while parent[root] != root {
        root = parent[root];
    }
    let mut cur = x;
    while parent[cur] != root {
        let next = parent[cur];
        parent[cur] = root;
        cur = next;
    }
    root
}

/// Components as sorted vertex lists, ordered by their smallest vertex.
pub fn connected_components(graph: &FanoGraph) -> Vec<Vec<u32>> {
    let index = |s: u32| graph.vertices.iter().position(|v| v.s == s).expect("edge endpoint is a vertex");
    let mut parent: Vec<usize> = (0..graph.vertices.len()).collect();
    for e in &graph.edges {
        let (a, b) = (find(&mut parent, index(e.ends.0)), find(&mut parent, index(e.ends.1)));
        if a != b {
            // Vertices are sorted, so the smaller index keeps the smallest s as root.
            let (lo, hi) = (a.min(b), a.max(b));
            parent[hi] = lo;
        }
    }
    let mut comps: Vec<(usize, Vec<u32>)> = Vec::new();
    for (i, v) in graph.vertices.iter().enumerate() {
        let root = find(&mut parent, i);
        match comps.iter_mut().find(|(r, _)| *r == root) {
            Some((_, members)) => members.push(v.s),
            None => comps.push((root, vec![v.s])),
        }
    }
    comps.into_iter().map(|(_, m)| m).collect()
}

/// Disconnectedness read off the cyclic sequence of consecutive edge labels.
pub fn cycle_disconnected(params: &Params) -> bool {
    let k = big(params.k);
    let v: Vec<u32> = (0..=params.s_max())
        .filter(|&s| kappa(params, s).expect("s in range") >= k)
        .collect();
    let l = v.len();
    if l < 2 {
        return false;
    }
    let mut labels: Vec<BigInt> = v.windows(2).map(|w| edge_label(params, w[0], w[1]).expect("sorted")).collect();
    labels.push(edge_label(params, v[0], v[l - 1]).expect("sorted"));
    labels.iter().filter(|g| **g < k).count() >= 2
}
