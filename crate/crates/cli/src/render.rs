//! Text and JSON renderings of graphs, staircases and decompositions.

use serde_json::{json, Map, Value};
use stairdec::bridge::C4Decomposition;
use stairdec::games::C4Game;
use stairdec::graph::{Decomposition, LabeledGraph, NodeSet};
use stairdec::staircase::{Point, StandardSet};

pub fn support(g: &LabeledGraph, s: &NodeSet) -> String {
    let ids: Vec<String> = g.support_ids(s).iter().map(ToString::to_string).collect();
    format!("{{{}}}", ids.join(","))
}

pub fn decomposition(g: &LabeledGraph, d: &Decomposition) -> String {
    if d.is_empty() {
        return "(empty)".into();
    }
    d.members().iter().map(|m| support(g, m)).collect::<Vec<_>>().join(" + ")
}

pub fn staircase(s: &StandardSet) -> String {
    let corners: Vec<String> = s.corners().iter().map(Point::to_string).collect();
    format!("[{}]", corners.join(" "))
}

pub fn c4(d: &C4Decomposition) -> String {
    if d.is_empty() {
        return "(empty)".into();
    }
    d.members().iter().map(staircase).collect::<Vec<_>>().join(" + ")
}

pub fn game(g: &C4Game) -> String {
    match g {
        C4Game::Set(s) => staircase(s),
        C4Game::Multiset { members, .. } => {
            format!("{{{}}}", members.iter().map(game).collect::<Vec<_>>().join(", "))
        }
    }
}

pub fn point_json(p: &Point) -> Value {
    json!(p.coords())
}

pub fn staircase_json(s: &StandardSet) -> Value {
    json!({ "dim": s.dim(), "corners": s.corners().iter().map(point_json).collect::<Vec<_>>() })
}

pub fn graph_json(g: &LabeledGraph) -> Value {
    let nodes: Map<String, Value> = (0..g.node_count())
        .map(|i| (g.id(i).to_string(), json!(g.label(i))))
        .collect();
    let edges: Vec<Value> = g.edge_ids().iter().map(|(a, b)| json!([a.as_str(), b.as_str()])).collect();
    json!({ "nodes": nodes, "edges": edges })
}

pub fn decomposition_json(g: &LabeledGraph, d: &Decomposition) -> Value {
    json!(d.encoding(g))
}

pub fn c4_json(d: &C4Decomposition) -> Value {
    Value::Array(
        d.members()
            .iter()
            .map(|m| Value::Array(m.corners().iter().map(point_json).collect()))
            .collect(),
    )
}

pub fn game_json(g: &C4Game) -> Value {
    match g {
        C4Game::Set(s) => json!({ "set": s.corners().iter().map(point_json).collect::<Vec<_>>() }),
        C4Game::Multiset { members, .. } => json!({ "multiset": members.iter().map(game_json).collect::<Vec<_>>() }),
    }
}
