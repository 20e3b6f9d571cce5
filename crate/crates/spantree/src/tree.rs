//! Rooted spanning trees as parent-pointer arrays, the compact string codec,
//! and the lift (re-rooting) primitive shared by the generators.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Vertices are labeled 1..=n in every external format.
pub type Vertex = u32;

/// An undirected edge, normalized so the smaller endpoint comes first.
pub type Edge = (Vertex, Vertex);

/// Normalizes an unordered vertex pair into an [`Edge`].
pub fn edge(u: Vertex, v: Vertex) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A spanning tree rooted at vertex 1, stored as a parent pointer per vertex.
///
/// `parent(1)` is the root marker; every other vertex points at its parent.
/// Index 0 of the backing array is unused so vertex labels index directly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParentForest {
    parent: Vec<Vertex>, // 0 = root marker / unassigned
}

impl ParentForest {
    /// A forest over `n` vertices with every parent unassigned (vertex 1 is the root).
    pub fn unassigned(n: u32) -> Self {
        ParentForest {
            parent: vec![0; n as usize + 1],
        }
    }

    /// The path 1-2-...-n.
    pub fn path(n: u32) -> Self {
        let mut parent = vec![0; n as usize + 1];
        for v in 2..=n {
            parent[v as usize] = v - 1;
        }
        ParentForest { parent }
    }

    /// Builds from explicit `(vertex, parent)` assignments, validating that
    /// every vertex reaches the root without cycles.
    pub fn from_parents(n: u32, parents: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut f = ParentForest::unassigned(n);
        for &(v, p) in parents {
            if v < 2 || v > n || p < 1 || p > n || v == p {
                return Err(Error::Format(format!("bad parent assignment {v} -> {p}")));
            }
            f.parent[v as usize] = p;
        }
        f.validate()?;
        Ok(f)
    }

    pub fn n(&self) -> u32 {
        (self.parent.len() - 1) as u32
    }

    /// The parent of `v`, or `None` when `v` is the root (or unassigned).
    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        match self.parent[v as usize] {
            0 => None,
            p => Some(p),
        }
    }

    pub fn set_parent(&mut self, v: Vertex, p: Vertex) {
        self.parent[v as usize] = p;
    }

    /// Marks `v` as parentless; used transiently while an exchange is applied.
    pub fn clear_parent(&mut self, v: Vertex) {
        self.parent[v as usize] = 0;
    }

    /// The n-1 parent edges, in child order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (2..=self.n()).filter_map(move |v| self.parent(v).map(|p| edge(v, p)))
    }

    /// Sorted edge list, the canonical form used for distinctness checks.
    pub fn sorted_edges(&self) -> Vec<Edge> {
        let mut e: Vec<Edge> = self.edges().collect();
        e.sort_unstable();
        e
    }

    /// Checks the rooted-tree invariants: vertex 1 is the root, every other
    /// vertex has a parent, and following parents always reaches vertex 1.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        if n == 0 {
            return Err(Error::Format("empty vertex set".into()));
        }
        if self.parent[1] != 0 {
            return Err(Error::Format("vertex 1 must be the root".into()));
        }
        // 0 = unvisited, 1 = on current path, 2 = known good
        let mut mark = vec![0u8; n as usize + 1];
        mark[1] = 2;
        for start in 2..=n {
            let mut v = start;
            let mut path = Vec::new();
            while mark[v as usize] == 0 {
                mark[v as usize] = 1;
                path.push(v);
                v = match self.parent(v) {
                    Some(p) => p,
                    None => return Err(Error::Format(format!("vertex {v} has no parent"))),
                };
            }
            if mark[v as usize] == 1 {
                return Err(Error::Format(format!("cycle through vertex {v}")));
            }
            for w in path {
                mark[w as usize] = 2;
            }
        }
        Ok(())
    }

    /// True when this is a spanning tree of `g`: valid rooted tree whose
    /// parent edges all exist in `g`.
    pub fn is_spanning_tree_of(&self, g: &Graph) -> bool {
        self.n() == g.n() && self.validate().is_ok() && self.edges().all(|(u, v)| g.adj(u, v))
    }

    /// Encodes as the compact string a_1 a_2 ... a_{n-1} where a_i is the
    /// parent of vertex i+1: '1'-'9' for parents 1-9, then 'a' for 10 and up.
    pub fn to_compact(&self) -> Result<String> {
        let mut s = String::with_capacity(self.n() as usize - 1);
        for v in 2..=self.n() {
            let p = self
                .parent(v)
                .ok_or_else(|| Error::Format(format!("vertex {v} has no parent")))?;
            s.push(compact_digit(p)?);
        }
        Ok(s)
    }

    /// Decodes a compact string over `n` vertices, rejecting '0' digits and
    /// any assignment that is cyclic or does not reach the root.
    pub fn from_compact(s: &str, n: u32) -> Result<Self> {
        if s.chars().count() != n as usize - 1 {
            return Err(Error::Format(format!(
                "compact string of length {} does not match {} vertices",
                s.chars().count(),
                n
            )));
        }
        let mut f = ParentForest::unassigned(n);
        for (i, ch) in s.chars().enumerate() {
            let p = compact_value(ch)?;
            if p > n {
                return Err(Error::Format(format!("parent {p} out of range 1..={n}")));
            }
            f.parent[i + 2] = p;
        }
        f.validate()?;
        Ok(f)
    }
}

fn compact_digit(p: Vertex) -> Result<char> {
    match p {
        1..=9 => Ok((b'0' + p as u8) as char),
        10..=35 => Ok((b'a' + (p - 10) as u8) as char),
        _ => Err(Error::Format(format!(
            "parent {p} not representable in compact form (max 35)"
        ))),
    }
}

fn compact_value(ch: char) -> Result<Vertex> {
    match ch {
        '1'..='9' => Ok(ch as Vertex - '0' as Vertex),
        'a'..='z' => Ok(ch as Vertex - 'a' as Vertex + 10),
        _ => Err(Error::Format(format!("invalid compact character {ch:?}"))),
    }
}

/// Reverses every parent link strictly above `v`: after the call, each former
/// ancestor points at the vertex it used to be the parent of. `v`'s own
/// parent pointer is left stale for the caller to reassign.
///
/// Returns the number of links reversed, for work accounting.
pub fn lift(forest: &mut ParentForest, v: Vertex) -> u64 {
    let mut reversed = 0;
    let mut child = v;
    let mut cur = forest.parent(child);
    while let Some(p) = cur {
        cur = forest.parent(p);
        forest.set_parent(p, child);
        child = p;
        reversed += 1;
    }
    reversed
}

/// One step of a listing: a borrowed view of the current tree plus the edge
/// exchange that produced it (`None` on the first tree).
#[derive(Debug)]
pub struct TransitionEvent<'a> {
    pub forest: &'a ParentForest,
    pub removed: Option<Edge>,
    pub added: Option<Edge>,
}

/// A resumable spanning-tree listing. Implementations emit every spanning
/// tree of their graph exactly once, reporting the edge exchange per step.
pub trait TreeGen {
    /// Advances to the next tree, or `None` once the listing is exhausted.
    fn next_event(&mut self) -> Option<TransitionEvent<'_>>;

    /// The current tree.
    fn forest(&self) -> &ParentForest;

    /// Trees emitted so far.
    fn emitted(&self) -> u64;

    /// Instrumented count of constant-cost primitive operations performed.
    fn work(&self) -> u64;
}

/// Drains a generator into compact strings, stopping after `limit` trees if given.
pub fn collect_compact(gen: &mut dyn TreeGen, limit: Option<u64>) -> Vec<String> {
    let mut out = Vec::new();
    while let Some(ev) = gen.next_event() {
        out.push(ev.forest.to_compact().expect("generated tree encodes"));
        if limit.is_some_and(|l| out.len() as u64 >= l) {
            break;
        }
    }
    out
}
