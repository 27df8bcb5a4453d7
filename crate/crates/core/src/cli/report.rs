use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::Serialize;

use crate::invariants::{
    self, build_graph, connected_components, cycle_disconnected, kappa_table, FanoGraph, Params, Variant,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub vertices: Vec<u32>,
    pub edges: Vec<(u32, u32)>,
    pub components: Vec<Vec<u32>>,
    pub component_count: usize,
    pub cycle_disconnected: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerS {
    pub s: u32,
    #[serde(with = "crate::invariants::bigint_json")]
    pub kappa: BigInt,
    #[serde(with = "crate::invariants::bigint_json::option", skip_serializing_if = "Option::is_none")]
    pub dim_component: Option<BigInt>,
    #[serde(with = "crate::invariants::bigint_json::option", skip_serializing_if = "Option::is_none")]
    pub tangent_general: Option<BigInt>,
    #[serde(with = "crate::invariants::bigint_json::option", skip_serializing_if = "Option::is_none")]
    pub nonreduced_gap: Option<BigInt>,
}

/// The smoothness predicate, always carried with its label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureFlag {
    pub label: &'static str,
    pub predicts_smooth: bool,
}

/// Everything the closed-form invariants say about one `Params`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub scheme: String,
    pub params: Params,
    pub empty: bool,
    pub s_max: u32,
    #[serde(with = "crate::invariants::bigint_json::vec")]
    pub kappa: Vec<BigInt>,
    pub graph: GraphSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub irreducible: Option<bool>,
    #[serde(with = "crate::invariants::bigint_json::option", skip_serializing_if = "Option::is_none")]
    pub variety_dim: Option<BigInt>,
    #[serde(with = "crate::invariants::bigint_json::option", skip_serializing_if = "Option::is_none")]
    pub expected_dim_hypersurface: Option<BigInt>,
    #[serde(with = "crate::invariants::bigint_json::option", skip_serializing_if = "Option::is_none")]
    pub tangent_middle: Option<BigInt>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub per_s: Vec<PerS>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjecture: Option<ConjectureFlag>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

pub fn graph_summary(params: &Params, graph: &FanoGraph) -> GraphSummary {
    let components = connected_components(graph);
    GraphSummary {
        vertices: graph.vertices.iter().map(|v| v.s).collect(),
        edges: graph.edges.iter().map(|e| e.ends).collect(),
        component_count: components.len(),
        components,
        cycle_disconnected: cycle_disconnected(params),
    }
}

pub fn build_report(params: &Params, seed: Option<u64>) -> Report {
    let graph = build_graph(params);
    let empty = !invariants::is_nonempty(params);
    let symmetric = params.variant == Variant::Symmetric;
    let kappa = kappa_table(params);
    let per_s = if symmetric {
        (0..=params.s_max())
            .map(|s| PerS {
                s,
                kappa: kappa[s as usize].clone(),
                dim_component: invariants::dim_component(params, s).ok(),
                tangent_general: invariants::tangent_formula_general(params, s).ok(),
                nonreduced_gap: invariants::nonreduced_gap(params, s).ok(),
            })
            .collect()
    } else {
        Vec::new()
    };
    Report {
        tool: env!("CARGO_PKG_NAME"),
        version: env!("CARGO_PKG_VERSION"),
        scheme: params.to_string(),
        params: *params,
        empty,
        s_max: params.s_max(),
        kappa,
        graph: graph_summary(params, &graph),
        irreducible: if symmetric && !empty { invariants::is_irreducible(params).ok() } else { None },
        variety_dim: invariants::variety_dim(params).ok(),
        expected_dim_hypersurface: invariants::expected_dim_hypersurface(params).ok(),
        tangent_middle: invariants::tangent_formula_middle(params).ok(),
        per_s,
        conjecture: invariants::smoothness_conjecture(params)
            .ok()
            .map(|b| ConjectureFlag { label: "conjecture", predicts_smooth: b }),
        seed,
    }
}

pub fn render_report_text(r: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}  ({} {})", r.scheme, r.tool, r.version);
    let kap: Vec<String> = r.kappa.iter().map(BigInt::to_string).collect();
    let _ = writeln!(out, "kappa(0..={}): {}", r.s_max, kap.join(", "));
    if r.empty {
        let _ = writeln!(out, "empty: yes");
        return out;
    }
    let _ = writeln!(out, "empty: no");
    let comps: Vec<String> = r.graph.components.iter().map(|c| format!("{c:?}")).collect();
    let _ = writeln!(out, "components: {} {}", r.graph.component_count, comps.join(" "));
    if let Some(irr) = r.irreducible {
        let _ = writeln!(out, "irreducible: {}", if irr { "yes" } else { "no" });
    }
    if let Some(d) = &r.variety_dim {
        let _ = writeln!(out, "variety dimension: {d}");
    }
    if let Some(d) = &r.expected_dim_hypersurface {
        let _ = writeln!(out, "expected dimension (hypersurface): {d}");
    }
    for p in &r.per_s {
        let show = |v: &Option<BigInt>| v.as_ref().map_or_else(|| "-".to_string(), BigInt::to_string);
        let _ = writeln!(
            out,
            "s={}: kappa={} dim={} tangent(general)={} gap={}",
            p.s,
            p.kappa,
            show(&p.dim_component),
            show(&p.tangent_general),
            show(&p.nonreduced_gap)
        );
    }
    if let Some(t) = &r.tangent_middle {
        let _ = writeln!(out, "tangent at the middle point: {t}");
    }
    if let Some(c) = &r.conjecture {
        let _ = writeln!(out, "{}: predicts {}", c.label, if c.predicts_smooth { "smooth" } else { "not smooth" });
    }
    out
}

/// Graphviz rendering of the labeled connectedness graph; nodes in increasing s.
pub fn render_dot(params: &Params) -> String {
    let graph = build_graph(params);
    let mut out = String::from("graph fano {\n");
    let _ = writeln!(out, "  // {params}");
    if graph.is_empty() {
        out.push_str("  // scheme empty\n}\n");
        return out;
    }
    for v in &graph.vertices {
        let _ = writeln!(out, "  s{} [label=\"s={}\\n{}\"];", v.s, v.s, v.kappa);
    }
    for e in &graph.edges {
        let _ = writeln!(out, "  s{} -- s{} [label=\"{}\"];", e.ends.0, e.ends.1, e.label);
    }
    out.push_str("}\n");
    out
}
