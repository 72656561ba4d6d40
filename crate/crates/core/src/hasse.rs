//! The full cover graph of `𝒜_n`, with DOT and JSON export.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::asm::Asm;
use crate::enumerate::enumerate_asms;
use crate::error::Result;
use crate::poset::{covers_up, CoverEdge, CoverType};
use crate::stats::{stat_record, StatRecord};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseNode {
    pub asm: Asm,
    pub stats: StatRecord,
    pub join_irreducible: bool,
}

/// A cover between two node indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HasseEdge {
    pub lower: usize,
    pub upper: usize,
    pub r: usize,
    pub s: usize,
    pub cover_type: CoverType,
}

#[derive(Clone, Debug)]
pub struct HasseGraph {
    pub n: usize,
    /// In enumeration order.
    pub nodes: Vec<HasseNode>,
    /// Grouped by lower node, then by exchange position.
    pub edges: Vec<HasseEdge>,
}

pub fn build_hasse(n: usize, guard: u64) -> Result<HasseGraph> {
    let all = enumerate_asms(n, guard)?;
    let index: HashMap<&Asm, usize> = all.iter().enumerate().map(|(i, a)| (a, i)).collect();
    let mut edges = Vec::new();
    let mut down_degree = vec![0usize; all.len()];
    for (lower, a) in all.iter().enumerate() {
        for e in covers_up(a) {
            let upper = index[&e.upper];
            down_degree[upper] += 1;
            edges.push(HasseEdge {
                lower,
                upper,
                r: e.r,
                s: e.s,
                cover_type: e.cover_type,
            });
        }
    }
    let nodes = all
        .iter()
        .zip(down_degree)
        .map(|(a, d)| HasseNode {
            asm: a.clone(),
            stats: stat_record(a),
            join_irreducible: d == 1,
        })
        .collect();
    Ok(HasseGraph { n, nodes, edges })
}

impl HasseGraph {
    pub fn cover_edge(&self, e: &HasseEdge) -> CoverEdge {
        CoverEdge {
            lower: self.nodes[e.lower].asm.clone(),
            upper: self.nodes[e.upper].asm.clone(),
            r: e.r,
            s: e.s,
            cover_type: e.cover_type,
        }
    }

    pub fn join_irreducibles(&self) -> impl Iterator<Item = &HasseNode> {
        self.nodes.iter().filter(|v| v.join_irreducible)
    }

    /// Every edge raises `β` by exactly one.
    pub fn is_graded(&self) -> bool {
        self.edges
            .iter()
            .all(|e| self.nodes[e.upper].stats.beta == self.nodes[e.lower].stats.beta + 1)
    }

    /// Graphviz source. Nodes are labelled by one-line notation for
    /// permutations and by the flattened matrix otherwise; edges by `t<type>`.
    pub fn to_dot(&self, highlight_join_irreducible: bool) -> String {
        let mut out = String::new();
        writeln!(out, "digraph asm{} {{", self.n).unwrap();
        out.push_str("  rankdir=BT;\n");
        out.push_str("  node [shape=box];\n");
        for (i, v) in self.nodes.iter().enumerate() {
            let style = if highlight_join_irreducible && v.join_irreducible {
                ", style=filled"
            } else {
                ""
            };
            writeln!(out, "  n{i} [label=\"{}\"{style}];", v.asm.label()).unwrap();
        }
        for e in &self.edges {
            writeln!(
                out,
                "  n{} -> n{} [label=\"t{}\"];",
                e.lower,
                e.upper,
                e.cover_type.number()
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> Value {
        let nodes: Vec<Value> = self
            .nodes
            .iter()
            .enumerate()
            .map(|(i, v)| {
                json!({
                    "id": i,
                    "label": v.asm.label(),
                    "entries": v.asm.to_rows(),
                    "stats": v.stats,
                    "join_irreducible": v.join_irreducible,
                })
            })
            .collect();
        let edges: Vec<Value> = self
            .edges
            .iter()
            .map(|e| {
                let d = e.cover_type.deltas();
                json!({
                    "lower": e.lower,
                    "upper": e.upper,
                    "r": e.r,
                    "s": e.s,
                    "type": e.cover_type.number(),
                    "dI": d.d_inv,
                    "dN2x": d.d_minus,
                    "dH2x": d.d_weak2,
                })
            })
            .collect();
        json!({"n": self.n, "nodes": nodes, "edges": edges})
    }
}
