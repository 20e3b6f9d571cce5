//! Edge-exchange Gray code generator for spanning trees of arbitrary
//! connected graphs.
//!
//! The complete-graph construction generalizes in three ways: children carry
//! mixed-radix digits ranging over their actual candidate parents, the
//! vertices below a level split into connected components that each keep at
//! least one attachment, and the per-level enumeration becomes a
//! two-dimensional recursion over (component, digit string). Consecutive
//! trees differ by one edge exchange, though not necessarily around a common
//! vertex. Work per tree is O(n^2) with O(n^2) state.

use crate::error::{Error, Result};
use crate::graph::{connected_components, initial_spanning_tree, Graph};
use crate::mixed_radix::{MixedRadixGen, StepDelta};
use crate::tree::{edge, lift, Edge, ParentForest, TransitionEvent, TreeGen, Vertex};

/// Candidate-parent data for one component: for each child in component
/// order, the adjacent members of `parents` in parent order, the digit
/// maximum (list length), and the current digit (1-based index of the
/// child's parent in its list, or 0 when the parent is below this level).
pub fn candidate_parents(
    parents: &[Vertex],
    component: &[Vertex],
    forest: &ParentForest,
    graph: &Graph,
) -> (Vec<u32>, Vec<u32>, Vec<Vec<Vertex>>) {
    let mut digits = vec![0u32; component.len()];
    let mut maxvals = vec![0u32; component.len()];
    let mut lists = vec![Vec::new(); component.len()];
    for (i, &child) in component.iter().enumerate() {
        for &p in parents {
            if graph.adj(p, child) {
                lists[i].push(p);
                if forest.parent(child) == Some(p) {
                    digits[i] = lists[i].len() as u32;
                }
            }
        }
        maxvals[i] = lists[i].len() as u32;
    }
    (digits, maxvals, lists)
}

/// Finds the reconnection edge for a detaching subtree: `v` has just lost
/// its parent above the level, and the tree below must rejoin the rest of
/// its component. Returns `(a, b)` where `a` is `v` or a descendant of `v`,
/// `b` is a component vertex outside `v`'s subtree, and `{a, b}` is a graph
/// edge.
///
/// The search order is fixed: `v`'s subtree is collected breadth-first with
/// children in component order, the outside vertices keep component order,
/// and the scan runs subtree-outer, outside-inner. Listing reproduction
/// depends on this order.
pub fn find_reconnection(
    component: &[Vertex],
    v: Vertex,
    forest: &ParentForest,
    graph: &Graph,
) -> (Vertex, Vertex) {
    let mut children: Vec<Vec<Vertex>> = vec![Vec::new(); component.len()];
    let mut slot = vec![usize::MAX; graph.n() as usize + 1];
    for (i, &c) in component.iter().enumerate() {
        slot[c as usize] = i;
    }
    for &c in component {
        if let Some(p) = forest.parent(c) {
            if slot[p as usize] != usize::MAX {
                children[slot[p as usize]].push(c);
            }
        }
    }

    let mut in_subtree = vec![false; graph.n() as usize + 1];
    let mut subtree = vec![v];
    in_subtree[v as usize] = true;
    let mut head = 0;
    while head < subtree.len() {
        let u = subtree[head];
        head += 1;
        for &c in &children[slot[u as usize]] {
            in_subtree[c as usize] = true;
            subtree.push(c);
        }
    }

    let outside: Vec<Vertex> = component
        .iter()
        .copied()
        .filter(|&c| !in_subtree[c as usize])
        .collect();
    for &a in &subtree {
        for &b in &outside {
            if graph.adj(a, b) {
                return (a, b);
            }
        }
    }
    unreachable!("component connectivity guarantees a reconnection edge");
}

/// One component's digit machinery inside a level frame.
struct CompState {
    verts: Vec<Vertex>,
    maxvals: Vec<u32>,
    lists: Vec<Vec<Vertex>>,
    gen: MixedRadixGen,
}

impl CompState {
    fn fresh_gen(&mut self) -> u64 {
        let spent = self.gen.work();
        let digits = self.gen.digits().to_vec();
        self.gen = MixedRadixGen::new(self.maxvals.clone(), digits)
            .expect("component digits never all-zero");
        let first = self.gen.advance();
        debug_assert!(matches!(first, Some(StepDelta::First)));
        spent
    }
}

struct FrameG {
    comps: Vec<CompState>,
}

enum Phase {
    Descend,
    Resume,
    Done,
}

/// Resumable edge-exchange listing for a connected graph.
pub struct EdgeExchangeGen {
    graph: Graph,
    forest: ParentForest,
    frames: Vec<FrameG>,
    phase: Phase,
    pending_delta: Option<(Edge, Edge)>,
    emitted: u64,
    work: u64,
}

impl EdgeExchangeGen {
    /// Lists all spanning trees starting from the deterministic scan tree.
    pub fn new(graph: Graph) -> Result<Self> {
        let forest = initial_spanning_tree(&graph)?;
        Self::from_tree(graph, forest)
    }

    /// Lists all spanning trees starting from an explicit tree. The listing
    /// visits every spanning tree exactly once from any valid start.
    pub fn from_tree(graph: Graph, forest: ParentForest) -> Result<Self> {
        if !forest.is_spanning_tree_of(&graph) {
            return Err(Error::InvalidInput(
                "start tree is not a spanning tree of the graph".into(),
            ));
        }
        Ok(EdgeExchangeGen {
            graph,
            forest,
            frames: Vec::new(),
            phase: Phase::Descend,
            pending_delta: None,
            emitted: 0,
            work: 0,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Splits the level below the current frame into components and builds
    /// their digit generators. Returns `None` when no vertex is left below,
    /// i.e. the current tree is complete.
    fn build_frame(&mut self) -> Option<FrameG> {
        let (verts, digits): (Vec<Vertex>, Vec<u32>) = match self.frames.last() {
            None => {
                // root level: vertex 1 carries the only nonzero digit
                let mut digits = vec![0; self.graph.n() as usize];
                digits[0] = 1;
                ((1..=self.graph.n()).collect(), digits)
            }
            Some(top) => {
                let mut verts = Vec::new();
                let mut digits = Vec::new();
                for comp in &top.comps {
                    verts.extend_from_slice(&comp.verts);
                    digits.extend_from_slice(comp.gen.digits());
                }
                (verts, digits)
            }
        };
        self.work += verts.len() as u64;

        let mut parents = Vec::new();
        let mut below = Vec::new();
        for (i, &v) in verts.iter().enumerate() {
            if digits[i] > 0 {
                parents.push(v);
            } else {
                below.push(v);
            }
        }
        if below.is_empty() {
            return None;
        }

        let mut comps = Vec::new();
        for comp_verts in connected_components(&self.graph, &below) {
            let (digits, maxvals, lists) =
                candidate_parents(&parents, &comp_verts, &self.forest, &self.graph);
            self.work += comp_verts.len() as u64 * parents.len().max(1) as u64;
            let mut gen = MixedRadixGen::new(maxvals.clone(), digits)
                .expect("component digits never all-zero");
            let first = gen.advance();
            debug_assert!(matches!(first, Some(StepDelta::First)));
            comps.push(CompState {
                verts: comp_verts,
                maxvals,
                lists,
                gen,
            });
        }
        Some(FrameG { comps })
    }

    /// Steps the deepest component that still has strings left, refreshing
    /// the generators of every later component. Returns false when the whole
    /// frame is exhausted.
    fn resume_top(&mut self) -> bool {
        let frame = self.frames.last_mut().expect("resume with no frame");
        let mut idx = frame.comps.len();
        let delta = loop {
            if idx == 0 {
                return false;
            }
            idx -= 1;
            if let Some(delta) = frame.comps[idx].gen.advance() {
                break delta;
            }
        };

        let (removed, added) = {
            let comp = &mut frame.comps[idx];
            let forest = &mut self.forest;
            self.work += 1;
            match delta {
                StepDelta::One(pos) => {
                    let child = comp.verts[pos];
                    let old = forest.parent(child).expect("attached child has a parent");
                    let digit = comp.gen.digits()[pos];
                    if digit > 0 {
                        // cases (a) and (c): move to a candidate parent
                        let new_parent = comp.lists[pos][digit as usize - 1];
                        forest.set_parent(child, new_parent);
                        (edge(child, old), edge(child, new_parent))
                    } else {
                        // case (b): the subtree of `child` reconnects inside
                        // its component
                        let (a, b) = find_reconnection(&comp.verts, child, forest, &self.graph);
                        self.work += comp.verts.len() as u64;
                        forest.clear_parent(child);
                        self.work += lift(forest, a);
                        forest.set_parent(a, b);
                        (edge(child, old), edge(a, b))
                    }
                }
                StepDelta::Swap { zeroed, raised } => {
                    // case (d): the only attached child detaches and a
                    // subtree vertex is lifted up to its own candidate parent
                    let detached = comp.verts[zeroed];
                    let promoted = comp.verts[raised];
                    let old = forest
                        .parent(detached)
                        .expect("attached child has a parent");
                    forest.clear_parent(detached);
                    self.work += lift(forest, promoted);
                    let digit = comp.gen.digits()[raised];
                    let new_parent = comp.lists[raised][digit as usize - 1];
                    forest.set_parent(promoted, new_parent);
                    (edge(detached, old), edge(promoted, new_parent))
                }
                StepDelta::First => unreachable!("first emission is consumed at frame build"),
            }
        };

        for later in idx + 1..frame.comps.len() {
            self.work += frame.comps[later].fresh_gen();
        }
        self.pending_delta = Some((removed, added));
        true
    }
}

impl TreeGen for EdgeExchangeGen {
    fn next_event(&mut self) -> Option<TransitionEvent<'_>> {
        loop {
            match self.phase {
                Phase::Done => return None,
                Phase::Descend => match self.build_frame() {
                    Some(frame) => self.frames.push(frame),
                    None => {
                        self.phase = Phase::Resume;
                        self.emitted += 1;
                        let (removed, added) = match self.pending_delta.take() {
                            Some((r, a)) => (Some(r), Some(a)),
                            None => (None, None),
                        };
                        return Some(TransitionEvent {
                            forest: &self.forest,
                            removed,
                            added,
                        });
                    }
                },
                Phase::Resume => {
                    if self.frames.is_empty() {
                        self.phase = Phase::Done;
                        return None;
                    }
                    if self.resume_top() {
                        self.phase = Phase::Descend;
                    } else {
                        let frame = self.frames.pop().expect("frame exists");
                        self.work += frame.comps.into_iter().map(|c| c.gen.work()).sum::<u64>();
                    }
                }
            }
        }
    }

    fn forest(&self) -> &ParentForest {
        &self.forest
    }

    fn emitted(&self) -> u64 {
        self.emitted
    }

    fn work(&self) -> u64 {
        self.work
            + self
                .frames
                .iter()
                .flat_map(|f| f.comps.iter())
                .map(|c| c.gen.work())
                .sum::<u64>()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, parse_edge_list, GraphSpec};
    use crate::tree::collect_compact;

    pub(crate) fn graph_g() -> Graph {
        let edges = parse_edge_list("1,2;1,4;1,6;1,7;2,3;3,4;3,5;4,5;6,7").unwrap();
        Graph::from_edges(7, &edges).unwrap()
    }

    #[test]
    fn candidate_parents_examples() {
        let g = graph_g();
        let f = ParentForest::from_compact("123416", 7).unwrap();
        let (digits, maxvals, lists) = candidate_parents(&[2, 4, 6, 7], &[3, 5], &f, &g);
        assert_eq!(lists, vec![vec![2, 4], vec![4]]);
        assert_eq!(maxvals, vec![2, 1]);
        assert_eq!(digits, vec![1, 1]); // both current parents sit in the lists

        let (_, maxvals, _) = candidate_parents(&[1], &[2, 3, 4, 5], &f, &g);
        assert_eq!(maxvals, vec![1, 0, 1, 0]);
    }

    #[test]
    fn reconnection_for_tree_24() {
        // detaching vertex 2 from vertex 1 in tree "121411" reconnects the
        // subtree {2,3} through the edge {3,4}
        let g = graph_g();
        let f = ParentForest::from_compact("121411", 7).unwrap();
        let (a, b) = find_reconnection(&[2, 3, 4, 5], 2, &f, &g);
        assert_eq!((a, b), (3, 4));
    }

    #[test]
    fn reconnection_leaf_case() {
        let g = graph_g();
        let f = ParentForest::from_compact("123316", 7).unwrap();
        // vertex 5 is a leaf; the pair is (5, adjacent sibling)
        let (a, b) = find_reconnection(&[4, 5], 5, &f, &g);
        assert_eq!(a, 5);
        assert_eq!(b, 4);
    }

    #[test]
    fn example_graph_from_published_start() {
        let start = ParentForest::from_compact("123416", 7).unwrap();
        let mut gen = EdgeExchangeGen::from_tree(graph_g(), start).unwrap();
        let listing = collect_compact(&mut gen, None);
        assert_eq!(listing.len(), 33);
        assert_eq!(listing[0], "123416");
        assert_eq!(listing[32], "351471");
        assert_eq!(listing[23], "121411");
        assert_eq!(listing[24], "341411");
    }

    #[test]
    fn example_graph_from_scan_start() {
        let mut gen = EdgeExchangeGen::new(graph_g()).unwrap();
        let listing = collect_compact(&mut gen, None);
        assert_eq!(listing[0], "121311");
        assert_eq!(listing.len(), 33);
        let distinct: std::collections::HashSet<_> = listing.iter().collect();
        assert_eq!(distinct.len(), 33);
    }

    #[test]
    fn complete_graph_through_general_path() {
        let g = build_graph(&GraphSpec::Complete(4)).unwrap();
        let mut gen = EdgeExchangeGen::new(g).unwrap();
        let listing = collect_compact(&mut gen, None);
        assert_eq!(listing.len(), 16);
        let distinct: std::collections::HashSet<_> = listing.iter().collect();
        assert_eq!(distinct.len(), 16);
    }

    #[test]
    fn rejects_disconnected_graph() {
        let g = Graph::from_edges(4, &[(1, 2), (3, 4)]).unwrap();
        assert!(EdgeExchangeGen::new(g).is_err());
    }

    #[test]
    fn rejects_foreign_start_tree() {
        let g = graph_g();
        // edge {2,4} does not exist in G
        let f = ParentForest::from_parents(7, &[(2, 1), (3, 2), (4, 2), (5, 4), (6, 1), (7, 6)]);
        if let Ok(f) = f {
            assert!(EdgeExchangeGen::from_tree(g, f).is_err());
        }
    }
}
