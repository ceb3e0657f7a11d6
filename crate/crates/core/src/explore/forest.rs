use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::semigroup::Semigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GraphKind {
    /// Genus-`g` semigroups under quasi-ordinarization.
    Forest { genus: u32 },
    /// Genus-`g` semigroups under ordinarization.
    OrdinarizationTree { genus: u32 },
    /// The semigroup tree cut at `max_genus`.
    SemigroupTree { max_genus: u32 },
}

/// A rooted forest materialised as parent pointers over sorted nodes.
#[derive(Debug, Clone)]
pub struct ForestGraph {
    kind: GraphKind,
    nodes: Vec<Semigroup>,
    parent: Vec<Option<usize>>,
    depth: Vec<u32>,
    index: HashMap<Semigroup, usize>,
}

impl ForestGraph {
    /// Breadth-first expansion from `roots` using `children`.
    pub(crate) fn grow<F>(kind: GraphKind, roots: Vec<Semigroup>, children: F, parallel: bool) -> Self
    where
        F: Fn(&Semigroup) -> Vec<Semigroup> + Sync,
    {
        let mut found: Vec<(Semigroup, Option<Semigroup>, u32)> =
            roots.iter().map(|&r| (r, None, 0)).collect();
        let mut layer = roots;
        let mut depth = 0;
        while !layer.is_empty() {
            depth += 1;
            let expand = |p: &Semigroup| -> Vec<(Semigroup, Semigroup)> {
                children(p).into_iter().map(|c| (c, *p)).collect()
            };
            let next: Vec<(Semigroup, Semigroup)> = if parallel {
                layer.par_iter().flat_map_iter(expand).collect()
            } else {
                layer.iter().flat_map(expand).collect()
            };
            layer = next.iter().map(|&(c, _)| c).collect();
            found.extend(next.into_iter().map(|(c, p)| (c, Some(p), depth)));
        }
        found.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        let index: HashMap<Semigroup, usize> =
            found.iter().enumerate().map(|(i, &(s, _, _))| (s, i)).collect();
        ForestGraph {
            kind,
            parent: found.iter().map(|(_, p, _)| p.map(|p| index[&p])).collect(),
            depth: found.iter().map(|&(_, _, d)| d).collect(),
            nodes: found.into_iter().map(|(s, _, _)| s).collect(),
            index,
        }
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    /// Nodes in canonical order.
    pub fn nodes(&self) -> &[Semigroup] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains(&self, s: &Semigroup) -> bool {
        self.index.contains_key(s)
    }

    pub fn parent(&self, s: &Semigroup) -> Option<Semigroup> {
        let i = *self.index.get(s)?;
        self.parent[i].map(|p| self.nodes[p])
    }

    pub fn depth(&self, s: &Semigroup) -> Option<u32> {
        self.index.get(s).map(|&i| self.depth[i])
    }

    pub fn roots(&self) -> Vec<Semigroup> {
        self.nodes
            .iter()
            .zip(&self.parent)
            .filter(|(_, p)| p.is_none())
            .map(|(s, _)| *s)
            .collect()
    }

    /// Children of `s`, in canonical order.
    pub fn children(&self, s: &Semigroup) -> Vec<Semigroup> {
        let Some(&i) = self.index.get(s) else {
            return Vec::new();
        };
        self.parent
            .iter()
            .enumerate()
            .filter(|(_, p)| **p == Some(i))
            .map(|(j, _)| self.nodes[j])
            .collect()
    }

    /// `(child, parent)` pairs, ordered by child.
    pub fn edges(&self) -> Vec<(Semigroup, Semigroup)> {
        self.nodes
            .iter()
            .zip(&self.parent)
            .filter_map(|(c, p)| p.map(|p| (*c, self.nodes[p])))
            .collect()
    }

    /// Number of nodes at each depth.
    pub fn depth_histogram(&self) -> Vec<u64> {
        let mut hist = Vec::new();
        for &d in &self.depth {
            if hist.len() <= d as usize {
                hist.resize(d as usize + 1, 0);
            }
            hist[d as usize] += 1;
        }
        hist
    }

    /// Graphviz rendering; node ids are the canonical text form and edges
    /// point from child to parent.
    pub fn to_dot(&self) -> String {
        let name = match self.kind {
            GraphKind::Forest { genus } => format!("forest_g{genus}"),
            GraphKind::OrdinarizationTree { genus } => format!("ordinarization_tree_g{genus}"),
            GraphKind::SemigroupTree { max_genus } => format!("semigroup_tree_upto_g{max_genus}"),
        };
        let mut out = format!("digraph {name} {{\n");
        for s in &self.nodes {
            writeln!(out, "  \"{s}\" [label=\"{}\"];", gap_label(s)).unwrap();
        }
        for (c, p) in self.edges() {
            writeln!(out, "  \"{c}\" -> \"{p}\";").unwrap();
        }
        out.push_str("}\n");
        out
    }

    /// One line per node: `gaps` for roots, `gaps <- parent` otherwise.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (s, p) in self.nodes.iter().zip(&self.parent) {
            match p {
                Some(p) => writeln!(out, "{} <- {}", gap_label(s), gap_label(&self.nodes[*p])),
                None => writeln!(out, "{}", gap_label(s)),
            }
            .unwrap();
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let nodes: Vec<Value> = self
            .nodes
            .iter()
            .zip(&self.parent)
            .zip(&self.depth)
            .map(|((s, p), d)| {
                json!({
                    "semigroup": s.to_string(),
                    "parent": p.map(|p| self.nodes[p].to_string()),
                    "depth": d,
                })
            })
            .collect();
        json!({
            "graph": self.kind,
            "nodes": nodes,
            "depth_histogram": self.depth_histogram(),
        })
    }

    /// `gaps,parent_gaps,depth` rows; the parent column is empty for roots.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("gaps,parent,depth\n");
        for ((s, p), d) in self.nodes.iter().zip(&self.parent).zip(&self.depth) {
            let parent = p.map(|p| gap_label(&self.nodes[p])).unwrap_or_default();
            writeln!(out, "\"{}\",\"{parent}\",{d}", gap_label(s)).unwrap();
        }
        out
    }
}

/// Comma-separated gaps, or `-` for `N0`.
fn gap_label(s: &Semigroup) -> String {
    if s.genus() == 0 {
        return "-".to_string();
    }
    s.gaps_iter().map(|g| g.to_string()).collect::<Vec<_>>().join(",")
}
