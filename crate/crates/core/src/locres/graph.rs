use serde::Serialize;

use crate::fincat::FinCat;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub name: String,
    pub src: usize,
    pub dst: usize,
}

/// A directed graph with a distinguished loop at every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReflGraph {
    pub vertices: Vec<String>,
    pub edges: Vec<Edge>,
    /// `reflexive[v]` is the loop at `v`.
    pub reflexive: Vec<usize>,
}

impl ReflGraph {
    pub fn is_reflexive(&self, e: usize) -> bool {
        self.reflexive.contains(&e)
    }

    /// Edges that may appear as letters of a word.
    pub fn generators(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.edges.len()).filter(|&e| !self.is_reflexive(e))
    }
}

/// Vertices the objects, edges all morphisms, loops the identities.
pub fn underlying_reflexive_graph(c: &FinCat) -> ReflGraph {
    ReflGraph {
        vertices: c.object_names().to_vec(),
        edges: c
            .morphism_ids()
            .map(|m| Edge {
                name: c.morphism_name(m).to_string(),
                src: c.src(m),
                dst: c.dst(m),
            })
            .collect(),
        reflexive: c.objects().map(|o| c.identity(o)).collect(),
    }
}

/// A composable word of non-reflexive edges, first edge first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Path {
    pub src: usize,
    pub dst: usize,
    pub edges: Vec<usize>,
}

/// The free category on a reflexive graph with words of length at most
/// `max_length`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeCat {
    pub graph: ReflGraph,
    pub max_length: usize,
    pub words: Vec<Path>,
    /// No word was cut off by the length bound.
    pub complete: bool,
}

impl FreeCat {
    pub fn hom(&self, a: usize, b: usize) -> impl Iterator<Item = &Path> {
        self.words.iter().filter(move |p| p.src == a && p.dst == b)
    }

    /// Concatenation; `None` when not composable or over the bound.
    pub fn compose(&self, f: &Path, g: &Path) -> Option<Path> {
        if f.dst != g.src || f.edges.len() + g.edges.len() > self.max_length {
            return None;
        }
        Some(Path {
            src: f.src,
            dst: g.dst,
            edges: f.edges.iter().chain(&g.edges).copied().collect(),
        })
    }

    pub fn label(&self, p: &Path) -> String {
        if p.edges.is_empty() {
            format!("ε_{}", self.graph.vertices[p.src])
        } else {
            p.edges
                .iter()
                .map(|&e| format!("⟨{}⟩", self.graph.edges[e].name))
                .collect()
        }
    }

    /// Vertices the objects, one edge per word, loops the empty words.
    pub fn underlying_graph(&self) -> ReflGraph {
        ReflGraph {
            vertices: self.graph.vertices.clone(),
            edges: self
                .words
                .iter()
                .map(|p| Edge {
                    name: self.label(p),
                    src: p.src,
                    dst: p.dst,
                })
                .collect(),
            reflexive: (0..self.graph.vertices.len())
                .map(|v| {
                    self.words
                        .iter()
                        .position(|p| p.src == v && p.edges.is_empty())
                        .expect("empty words are listed")
                })
                .collect(),
        }
    }
}

/// All words of length `≤ max_length`, shorter words first.
pub fn free_category(g: &ReflGraph, max_length: usize) -> FreeCat {
    let mut words: Vec<Path> = (0..g.vertices.len())
        .map(|v| Path {
            src: v,
            dst: v,
            edges: vec![],
        })
        .collect();
    let mut frontier = words.clone();
    let mut complete = true;
    for len in 0..=max_length {
        let mut next = Vec::new();
        for p in &frontier {
            for e in g.generators().filter(|&e| g.edges[e].src == p.dst) {
                if len == max_length {
                    complete = false;
                    break;
                }
                let mut edges = p.edges.clone();
                edges.push(e);
                next.push(Path {
                    src: p.src,
                    dst: g.edges[e].dst,
                    edges,
                });
            }
        }
        words.extend(next.iter().cloned());
        frontier = next;
    }
    FreeCat {
        graph: g.clone(),
        max_length,
        words,
        complete,
    }
}
