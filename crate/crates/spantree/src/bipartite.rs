//! Edge-exchange Gray code generator for complete bipartite graphs in
//! constant amortized time.
//!
//! K_{m,n} tightens the general construction: the parents of any level all
//! sit in one partition, so the vertices below split into an attachable side
//! (adjacent to every parent, k-ary digits) and an inert side (digit fixed
//! at zero). At most one mixed component exists per level, and reconnecting
//! a detached subtree reduces to an O(1) lookup in a registry of tree
//! children instead of a subtree scan.

use crate::error::{Error, Result};
use crate::graph::{build_graph, initial_spanning_tree, GraphSpec};
use crate::mixed_radix::{MixedRadixGen, StepDelta};
use crate::pivot::ActiveChain;
use crate::tree::{edge, Edge, ParentForest, TransitionEvent, TreeGen, Vertex};

/// Doubly linked child lists per vertex, kept in sync with every parent
/// reassignment so "some child of v" resolves in constant time.
struct ChildRegistry {
    head: Vec<i64>,
    next_sib: Vec<i64>,
    prev_sib: Vec<i64>,
}

impl ChildRegistry {
    fn new(n: u32) -> Self {
        let len = n as usize + 1;
        ChildRegistry {
            head: vec![-1; len],
            next_sib: vec![-1; len],
            prev_sib: vec![-1; len],
        }
    }

    fn add(&mut self, parent: Vertex, child: Vertex) {
        let (p, c) = (parent as usize, child as usize);
        self.next_sib[c] = self.head[p];
        self.prev_sib[c] = -1;
        if self.head[p] != -1 {
            self.prev_sib[self.head[p] as usize] = child as i64;
        }
        self.head[p] = child as i64;
    }

    fn remove(&mut self, parent: Vertex, child: Vertex) {
        let c = child as usize;
        let (prev, next) = (self.prev_sib[c], self.next_sib[c]);
        if prev != -1 {
            self.next_sib[prev as usize] = next;
        } else {
            self.head[parent as usize] = next;
        }
        if next != -1 {
            self.prev_sib[next as usize] = prev;
        }
    }

    fn first_child(&self, v: Vertex) -> Option<Vertex> {
        match self.head[v as usize] {
            -1 => None,
            c => Some(c as Vertex),
        }
    }
}

struct CompB {
    verts: Vec<Vertex>,
    maxvals: Vec<u32>,
    gen: MixedRadixGen,
    /// Count of attachable (opposite-side) members.
    attachable: usize,
    /// Attached positions; only the mixed component needs one.
    chain: Option<ActiveChain>,
    /// First inert-side member, the reconnection target for childless detaches.
    first_inert: Option<Vertex>,
}

impl CompB {
    fn pending(&self) -> usize {
        match &self.chain {
            Some(chain) => self.verts.len() - chain.len(),
            None => 0,
        }
    }

    /// True when the level below is forced to its current shape: a single
    /// attachable member is the only attachment, so every inert member
    /// hangs directly beneath it with no choice to enumerate. Emitting
    /// without building that frame keeps the amortized cost constant.
    fn forced_tail(&self) -> bool {
        match &self.chain {
            Some(chain) => self.attachable == 1 && chain.len() == 1,
            None => false,
        }
    }

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

struct FrameB {
    parents: Vec<Vertex>,
    comps: Vec<CompB>,
}

impl FrameB {
    /// True when descending would only visit forced structure: either every
    /// child is attached, or the lone mixed component's tail is forced.
    /// Singleton components never leave anything below, and a mixed
    /// component is always alone, so this is an O(1) check.
    fn emits_directly(&self) -> bool {
        match self.comps.first() {
            Some(c) if c.chain.is_some() => c.pending() == 0 || c.forced_tail(),
            _ => true,
        }
    }
}

enum Phase {
    Descend,
    Resume,
    Done,
}

/// Resumable edge-exchange listing for K_{m,n} with partitions {1..m} and
/// {m+1..m+n}, starting from the deterministic scan tree.
pub struct BipartiteGen {
    m: u32,
    total: u32,
    forest: ParentForest,
    registry: ChildRegistry,
    frames: Vec<FrameB>,
    phase: Phase,
    pending_delta: Option<(Edge, Edge)>,
    emitted: u64,
    work: u64,
}

impl BipartiteGen {
    pub fn new(m: u32, n: u32) -> Result<Self> {
        if m < 1 || n < 1 {
            return Err(Error::InvalidInput(
                "bipartite graph needs m, n >= 1".into(),
            ));
        }
        let graph = build_graph(&GraphSpec::Bipartite(m, n))?;
        let forest = initial_spanning_tree(&graph)?;
        let total = m + n;
        let mut registry = ChildRegistry::new(total);
        for v in 2..=total {
            registry.add(forest.parent(v).expect("spanning tree"), v);
        }
        Ok(BipartiteGen {
            m,
            total,
            forest,
            registry,
            frames: Vec::new(),
            phase: Phase::Descend,
            pending_delta: None,
            emitted: 0,
            work: 0,
        })
    }

    fn same_side(&self, u: Vertex, v: Vertex) -> bool {
        (u <= self.m) == (v <= self.m)
    }

    fn retarget(&mut self, child: Vertex, new_parent: Vertex) {
        if let Some(old) = self.forest.parent(child) {
            self.registry.remove(old, child);
        }
        self.forest.set_parent(child, new_parent);
        self.registry.add(new_parent, child);
        self.work += 1;
    }

    fn detach(&mut self, child: Vertex) {
        if let Some(old) = self.forest.parent(child) {
            self.registry.remove(old, child);
        }
        self.forest.clear_parent(child);
        self.work += 1;
    }

    /// Registry-aware lift: reverses every parent link strictly above `v`.
    /// `v`'s own pointer and registry membership stay put for the caller's
    /// retarget.
    fn lift(&mut self, v: Vertex) {
        let mut chain = vec![v];
        let mut cur = v;
        while let Some(p) = self.forest.parent(cur) {
            chain.push(p);
            cur = p;
        }
        // chain[j] moves from under chain[j+1] (none at the top) to under
        // chain[j-1]
        for j in (1..chain.len()).rev() {
            let w = chain[j];
            if j + 1 < chain.len() {
                self.registry.remove(chain[j + 1], w);
            }
            self.forest.set_parent(w, chain[j - 1]);
            self.registry.add(chain[j - 1], w);
            self.work += 1;
        }
    }

    fn build_frame(&mut self) -> Option<FrameB> {
        let (verts, digits): (Vec<Vertex>, Vec<u32>) = match self.frames.last() {
            None => {
                // root level: vertex 1 carries the only nonzero digit
                let mut digits = vec![0; self.total as usize];
                digits[0] = 1;
                ((1..=self.total).collect(), digits)
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
        debug_assert!(parents.windows(2).all(|w| self.same_side(w[0], w[1])));

        let mut parent_index = vec![0u32; self.total as usize + 1];
        for (i, &p) in parents.iter().enumerate() {
            parent_index[p as usize] = i as u32 + 1;
        }
        let has_inert = below.iter().any(|&v| self.same_side(v, parents[0]));

        let mut comps = Vec::new();
        if has_inert {
            // one mixed component over all of `below`
            let mut maxvals = Vec::with_capacity(below.len());
            let mut comp_digits = Vec::with_capacity(below.len());
            let mut chain = ActiveChain::new(below.len());
            let mut first_inert = None;
            let mut attachable = 0;
            for (i, &v) in below.iter().enumerate() {
                if self.same_side(v, parents[0]) {
                    maxvals.push(0);
                    comp_digits.push(0);
                    if first_inert.is_none() {
                        first_inert = Some(v);
                    }
                } else {
                    attachable += 1;
                    maxvals.push(parents.len() as u32);
                    let p = self.forest.parent(v).expect("below vertex has a parent");
                    let digit = parent_index[p as usize];
                    comp_digits.push(digit);
                    if digit > 0 {
                        chain.append(i);
                    }
                }
            }
            self.work += below.len() as u64;
            let mut gen = MixedRadixGen::new(maxvals.clone(), comp_digits)
                .expect("mixed component keeps an attachment");
            let first = gen.advance();
            debug_assert!(matches!(first, Some(StepDelta::First)));
            comps.push(CompB {
                verts: below,
                maxvals,
                gen,
                attachable,
                chain: Some(chain),
                first_inert,
            });
        } else {
            // every below vertex is adjacent to all parents and attached to
            // one of them: singleton components with k-ary digits
            for &v in &below {
                let p = self.forest.parent(v).expect("below vertex has a parent");
                let digit = parent_index[p as usize];
                debug_assert!(digit > 0, "singleton component must be attached");
                let mut gen = MixedRadixGen::new(vec![parents.len() as u32], vec![digit])
                    .expect("digit is nonzero");
                let first = gen.advance();
                debug_assert!(matches!(first, Some(StepDelta::First)));
                comps.push(CompB {
                    verts: vec![v],
                    maxvals: vec![parents.len() as u32],
                    gen,
                    attachable: 1,
                    chain: None,
                    first_inert: None,
                });
            }
            self.work += comps.len() as u64;
        }
        Some(FrameB { parents, comps })
    }

    fn resume_top(&mut self) -> bool {
        enum Plan {
            /// Move one vertex under a new parent (cases a/c, childless detach).
            Retarget { child: Vertex, to: Vertex },
            /// Detach a vertex and lift another into the tree above it.
            Promote {
                detached: Vertex,
                lifted: Vertex,
                to: Vertex,
            },
        }

        // Step the deepest component that still has strings; decide the
        // exchange without touching the tree yet.
        let (idx, removed, plan) = {
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
            self.work += 1;
            let comp = &mut frame.comps[idx];
            let plan = match delta {
                StepDelta::One(pos) => {
                    let child = comp.verts[pos];
                    let digit = comp.gen.digits()[pos];
                    if digit > 0 {
                        // cases (a) and (c)
                        if let Some(chain) = comp.chain.as_mut() {
                            if !chain.contains(pos) {
                                chain.append(pos);
                            }
                        }
                        Plan::Retarget {
                            child,
                            to: frame.parents[digit as usize - 1],
                        }
                    } else {
                        // case (b): reconnect the detached subtree in O(1)
                        let chain = comp
                            .chain
                            .as_mut()
                            .expect("zero digits occur only in the mixed component");
                        chain.remove(pos);
                        match self.registry.first_child(child) {
                            // a child of the detached vertex adopts it and
                            // hangs from an attached sibling
                            Some(a) => Plan::Promote {
                                detached: child,
                                lifted: a,
                                to: comp.verts[chain.last()],
                            },
                            // a leaf reattaches below any inert-side vertex,
                            // none of which can sit underneath it
                            None => Plan::Retarget {
                                child,
                                to: comp.first_inert.expect("mixed component has inert side"),
                            },
                        }
                    }
                }
                StepDelta::Swap { zeroed, raised } => {
                    // case (d): the only attached vertex detaches and a
                    // subtree vertex is lifted up to a parent of its own
                    let chain = comp
                        .chain
                        .as_mut()
                        .expect("swap only in the mixed component");
                    chain.append(raised);
                    chain.remove(zeroed);
                    let digit = comp.gen.digits()[raised];
                    Plan::Promote {
                        detached: comp.verts[zeroed],
                        lifted: comp.verts[raised],
                        to: frame.parents[digit as usize - 1],
                    }
                }
                StepDelta::First => unreachable!("first emission is consumed at frame build"),
            };
            let moved = match &plan {
                Plan::Retarget { child, .. } => *child,
                Plan::Promote { detached, .. } => *detached,
            };
            let old = self
                .forest
                .parent(moved)
                .expect("attached vertex has a parent");
            (idx, edge(moved, old), plan)
        };

        let added = match plan {
            Plan::Retarget { child, to } => {
                self.retarget(child, to);
                edge(child, to)
            }
            Plan::Promote {
                detached,
                lifted,
                to,
            } => {
                self.detach(detached);
                self.lift(lifted);
                self.retarget(lifted, to);
                edge(lifted, to)
            }
        };

        let frame = self.frames.last_mut().expect("frame exists");
        for later in idx + 1..frame.comps.len() {
            self.work += frame.comps[later].fresh_gen();
        }
        self.pending_delta = Some((removed, added));
        true
    }
}

impl TreeGen for BipartiteGen {
    fn next_event(&mut self) -> Option<TransitionEvent<'_>> {
        loop {
            match self.phase {
                Phase::Done => return None,
                Phase::Descend => {
                    let ready = match self.frames.last() {
                        None => false, // the root level always has children
                        Some(top) => top.emits_directly(),
                    };
                    if ready {
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
                    match self.build_frame() {
                        Some(frame) => self.frames.push(frame),
                        None => unreachable!("descend always has vertices below"),
                    }
                }
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
