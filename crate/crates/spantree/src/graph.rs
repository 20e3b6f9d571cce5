//! Graph construction for the built-in families and custom edge lists,
//! connectivity utilities, and the deterministic starting spanning tree.

use crate::error::{Error, Result};
use crate::tree::{Edge, ParentForest, Vertex};

/// Undirected simple labeled graph over vertices 1..=n with O(1) adjacency
/// queries and sorted neighbor lists. Immutable after construction.
#[derive(Clone, Debug)]
pub struct Graph {
    n: u32,
    adj: Vec<bool>, // (n + 1) x (n + 1), row-major, index 0 unused
    neighbors: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting out-of-range vertices,
    /// self-loops and duplicate edges.
    pub fn from_edges(n: u32, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput(
                "graph needs at least one vertex".into(),
            ));
        }
        let stride = n as usize + 1;
        let mut adj = vec![false; stride * stride];
        let mut neighbors = vec![Vec::new(); stride];
        let mut edge_count = 0;
        for &(u, v) in edges {
            if u < 1 || u > n || v < 1 || v > n {
                return Err(Error::InvalidInput(format!(
                    "edge ({u},{v}) out of range 1..={n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
            }
            if adj[u as usize * stride + v as usize] {
                return Err(Error::InvalidInput(format!("duplicate edge ({u},{v})")));
            }
            adj[u as usize * stride + v as usize] = true;
            adj[v as usize * stride + u as usize] = true;
            neighbors[u as usize].push(v);
            neighbors[v as usize].push(u);
            edge_count += 1;
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            adj,
            neighbors,
            edge_count,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn adj(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u as usize * (self.n as usize + 1) + v as usize]
    }

    /// Neighbors of `v` in increasing label order.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.neighbors[v as usize]
    }

    /// All edges, sorted.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 1..=self.n {
            for &v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let all: Vec<Vertex> = (1..=self.n).collect();
        connected_components(self, &all).len() == 1
    }
}

/// A graph family descriptor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSpec {
    /// K_n, every pair adjacent.
    Complete(u32),
    /// K_{m,n} with partitions {1..m} and {m+1..m+n}.
    Bipartite(u32, u32),
    /// Hub vertex 1 adjacent to all, plus the path 2-3-...-n.
    Fan(u32),
    /// Fan plus the closing edge {2, n}.
    Wheel(u32),
    /// The 10-vertex 15-edge Petersen graph.
    Petersen,
    Custom {
        n: u32,
        edges: Vec<Edge>,
    },
}

const PETERSEN_EDGES: [(Vertex, Vertex); 15] = [
    (1, 2),
    (1, 5),
    (1, 6),
    (2, 3),
    (2, 7),
    (3, 4),
    (3, 8),
    (4, 5),
    (4, 9),
    (5, 10),
    (6, 8),
    (6, 9),
    (7, 9),
    (7, 10),
    (8, 10),
];

/// Builds the standard graph of a family.
pub fn build_graph(spec: &GraphSpec) -> Result<Graph> {
    match *spec {
        GraphSpec::Complete(n) => {
            if n < 1 {
                return Err(Error::InvalidInput("complete graph needs n >= 1".into()));
            }
            let mut edges = Vec::new();
            for u in 1..=n {
                for v in u + 1..=n {
                    edges.push((u, v));
                }
            }
            Graph::from_edges(n, &edges)
        }
        GraphSpec::Bipartite(m, n) => {
            if m < 1 || n < 1 {
                return Err(Error::InvalidInput(
                    "bipartite graph needs m, n >= 1".into(),
                ));
            }
            let mut edges = Vec::new();
            for u in 1..=m {
                for v in m + 1..=m + n {
                    edges.push((u, v));
                }
            }
            Graph::from_edges(m + n, &edges)
        }
        GraphSpec::Fan(n) => {
            if n < 2 {
                return Err(Error::InvalidInput("fan graph needs n >= 2".into()));
            }
            Graph::from_edges(n, &fan_edges(n))
        }
        GraphSpec::Wheel(n) => {
            if n < 4 {
                return Err(Error::InvalidInput("wheel graph needs n >= 4".into()));
            }
            let mut edges = fan_edges(n);
            edges.push((2, n));
            Graph::from_edges(n, &edges)
        }
        GraphSpec::Petersen => Graph::from_edges(10, &PETERSEN_EDGES),
        GraphSpec::Custom { n, ref edges } => Graph::from_edges(n, edges),
    }
}

fn fan_edges(n: u32) -> Vec<Edge> {
    let mut edges: Vec<Edge> = (2..=n).map(|v| (1, v)).collect();
    edges.extend((2..n).map(|v| (v, v + 1)));
    edges
}

/// Parses the semicolon-separated edge list format "u,v; u,v; ...".
pub fn parse_edge_list(text: &str) -> Result<Vec<Edge>> {
    let mut edges = Vec::new();
    for part in text.split(';') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (u, v) = part
            .split_once(',')
            .ok_or_else(|| Error::InvalidInput(format!("expected \"u,v\", got {part:?}")))?;
        let u: Vertex = u
            .trim()
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad vertex {u:?}")))?;
        let v: Vertex = v
            .trim()
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad vertex {v:?}")))?;
        edges.push((u, v));
    }
    Ok(edges)
}

/// Partitions `subset` into connected components of the induced subgraph.
///
/// Discovery follows the order of `subset`: components appear in order of
/// their first listed vertex, and within a component vertices appear in
/// depth-first discovery order with neighbor candidates scanned in `subset`
/// order. Listing reproduction depends on this exact order.
pub fn connected_components(g: &Graph, subset: &[Vertex]) -> Vec<Vec<Vertex>> {
    let mut visited = vec![false; g.n() as usize + 1];
    let mut components = Vec::new();
    for &start in subset {
        if visited[start as usize] {
            continue;
        }
        visited[start as usize] = true;
        let mut group = vec![start];
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            // scan candidates in subset order, descending depth-first
            for &w in subset {
                if !visited[w as usize] && g.adj(v, w) {
                    visited[w as usize] = true;
                    group.push(w);
                    stack.push(v);
                    stack.push(w);
                    break;
                }
            }
        }
        components.push(group);
    }
    components
}

/// Deterministic starting spanning tree: scan candidate parents i = 1..n in
/// order; each vertex already in the tree adopts every still-unparented
/// neighbor, in label order. Passes repeat until no vertex is left, so for
/// K_n this is the star at vertex 1.
pub fn initial_spanning_tree(g: &Graph) -> Result<ParentForest> {
    let n = g.n();
    let mut forest = ParentForest::unassigned(n);
    let mut in_tree = vec![false; n as usize + 1];
    in_tree[1] = true;
    let mut remaining = n as usize - 1;
    while remaining > 0 {
        let before = remaining;
        for i in 1..=n {
            if !in_tree[i as usize] {
                continue;
            }
            for &j in g.neighbors(i) {
                if !in_tree[j as usize] {
                    forest.set_parent(j, i);
                    in_tree[j as usize] = true;
                    remaining -= 1;
                }
            }
        }
        if remaining == before {
            return Err(Error::Disconnected(format!(
                "{remaining} vertices unreachable from vertex 1"
            )));
        }
    }
    Ok(forest)
}

/// Renders one tree as an undirected DOT graph with numeric node labels.
pub fn dot_format(forest: &ParentForest, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    for v in 1..=forest.n() {
        out.push_str(&format!("  {v};\n"));
    }
    for (u, v) in forest.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}
