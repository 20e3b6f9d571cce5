//! Pivot Gray code generator for spanning trees of complete graphs.
//!
//! Emits every spanning tree of K_n exactly once, starting from the path
//! 1-2-...-n, such that consecutive trees differ by removing one edge and
//! adding one edge that share a vertex. Amortized work per tree is constant
//! and total state is O(n^2): one frame per level of the rooted tree, each
//! holding a digit-string generator over the vertices still below that level.

use crate::error::{Error, Result};
use crate::mixed_radix::{MixedRadixGen, StepDelta};
use crate::tree::{edge, lift, Edge, ParentForest, TransitionEvent, TreeGen, Vertex};

/// Doubly linked membership chain over the child indices of one frame,
/// tracking which children are currently attached at this level.
///
/// `last` is a cursor rather than a strict tail: removing an interior
/// element moves it to that element's successor. Case (b) reattaches a
/// detached child to `chain.last`, and the published listings depend on this
/// exact cursor behavior.
#[derive(Debug)]
pub(crate) struct ActiveChain {
    prev: Vec<i32>,
    next: Vec<i32>,
    present: Vec<bool>,
    last: i32,
    len: usize,
}

impl ActiveChain {
    pub(crate) fn new(capacity: usize) -> Self {
        ActiveChain {
            prev: vec![-1; capacity],
            next: vec![-1; capacity],
            present: vec![false; capacity],
            last: -1,
            len: 0,
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.len
    }

    pub(crate) fn contains(&self, i: usize) -> bool {
        self.present[i]
    }

    /// Most recently appended member (subject to the removal cursor rule).
    pub(crate) fn last(&self) -> usize {
        debug_assert!(self.last >= 0, "chain consulted while empty");
        debug_assert!(self.present[self.last as usize], "cursor left the chain");
        self.last as usize
    }

    pub(crate) fn append(&mut self, i: usize) {
        debug_assert!(!self.present[i]);
        self.prev[i] = self.last;
        self.next[i] = -1;
        if self.last != -1 {
            self.next[self.last as usize] = i as i32;
        }
        self.last = i as i32;
        self.present[i] = true;
        self.len += 1;
    }

    pub(crate) fn remove(&mut self, i: usize) {
        debug_assert!(self.present[i]);
        let p = self.prev[i];
        let n = self.next[i];
        if p != -1 {
            self.next[p as usize] = n;
        }
        if n != -1 {
            self.prev[n as usize] = p;
            self.last = n;
        } else {
            self.last = p;
        }
        self.present[i] = false;
        self.len -= 1;
    }
}

/// Per-level generator state: the vertices entering the level, split into
/// parents (attached at the level above) and children, with the child digit
/// string enumerated in reflectable Gray order.
struct FrameK {
    parents: Vec<Vertex>,
    children: Vec<Vertex>,
    gen: MixedRadixGen,
    chain: ActiveChain,
}

impl FrameK {
    /// Children not attached at this level, i.e. the vertex count of the
    /// next level down.
    fn pending(&self) -> usize {
        self.children.len() - self.chain.len()
    }
}

enum Phase {
    Descend,
    Resume,
    Done,
}

/// Resumable pivot Gray code listing for K_n.
pub struct PivotGen {
    n: u32,
    forest: ParentForest,
    frames: Vec<FrameK>,
    phase: Phase,
    pending_delta: Option<(Edge, Edge)>,
    emitted: u64,
    work: u64,
}

impl PivotGen {
    /// Creates the listing for K_n; the first tree is the path 1-2-...-n.
    pub fn new(n: u32) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidInput("complete graph needs n >= 1".into()));
        }
        Ok(PivotGen {
            n,
            forest: ParentForest::path(n),
            frames: Vec::new(),
            phase: Phase::Descend,
            pending_delta: None,
            emitted: 0,
            work: 0,
        })
    }

    /// Builds the frame below the current one (or the root frame).
    fn build_frame(&mut self) -> FrameK {
        let (verts, digits): (Vec<Vertex>, Vec<u32>) = match self.frames.last() {
            None => {
                // root level: vertex 1 carries the only nonzero digit
                let mut digits = vec![0; self.n as usize];
                digits[0] = 1;
                ((1..=self.n).collect(), digits)
            }
            Some(top) => (top.children.clone(), top.gen.digits().to_vec()),
        };

        let mut parents = Vec::new();
        let mut children = Vec::new();
        for (i, &v) in verts.iter().enumerate() {
            if digits[i] > 0 {
                parents.push(v);
            } else {
                children.push(v);
            }
        }
        self.work += verts.len() as u64;

        // index of each parent vertex, 1-based, for the initial digit string
        let mut parent_index = vec![0u32; self.n as usize + 1];
        for (i, &p) in parents.iter().enumerate() {
            parent_index[p as usize] = i as u32 + 1;
        }

        let mut chain = ActiveChain::new(children.len());
        let mut child_digits = vec![0u32; children.len()];
        for (i, &c) in children.iter().enumerate() {
            if let Some(p) = self.forest.parent(c) {
                let idx = parent_index[p as usize];
                if idx > 0 {
                    child_digits[i] = idx;
                    chain.append(i);
                }
            }
        }
        self.work += children.len() as u64;

        let maxvals = vec![parents.len() as u32; children.len()];
        let mut gen = MixedRadixGen::new(maxvals, child_digits)
            .expect("level digit string is never all-zero");
        let first = gen.advance();
        debug_assert!(matches!(first, Some(StepDelta::First)));

        FrameK {
            parents,
            children,
            gen,
            chain,
        }
    }

    /// Applies one digit-string step to the shared tree, recording the edge
    /// exchange. Dispatch follows the four pivot cases: a change to a
    /// positive digit reattaches a child to a parent at the level above, a
    /// change to zero hands the child to its most recently attached sibling,
    /// and a two-position swap detaches the only attached child and lifts a
    /// vertex of its subtree into its place.
    fn apply_step(&mut self, delta: StepDelta) {
        let frame = self.frames.last_mut().expect("step with no frame");
        let forest = &mut self.forest;
        self.work += 1;
        let (removed, added) = match delta {
            StepDelta::One(pos) => {
                let child = frame.children[pos];
                let old = forest.parent(child).expect("attached child has a parent");
                let digit = frame.gen.digits()[pos];
                if digit > 0 {
                    // cases (a) and (c): attach to the digit-th parent
                    let new_parent = frame.parents[digit as usize - 1];
                    forest.set_parent(child, new_parent);
                    if !frame.chain.contains(pos) {
                        frame.chain.append(pos);
                    }
                    (edge(child, old), edge(child, new_parent))
                } else {
                    // case (b): hand the child to an attached sibling
                    frame.chain.remove(pos);
                    let sibling = frame.children[frame.chain.last()];
                    forest.set_parent(child, sibling);
                    (edge(child, old), edge(child, sibling))
                }
            }
            StepDelta::Swap { zeroed, raised } => {
                // case (d): the only attached child detaches; a vertex of its
                // subtree is lifted into its place under the same parent
                let detached = frame.children[zeroed];
                let promoted = frame.children[raised];
                let anchor = forest
                    .parent(detached)
                    .expect("attached child has a parent");
                forest.clear_parent(detached);
                self.work += lift(forest, promoted);
                forest.set_parent(promoted, anchor);
                frame.chain.append(raised);
                frame.chain.remove(zeroed);
                (edge(detached, anchor), edge(promoted, anchor))
            }
            StepDelta::First => unreachable!("first emission is consumed at frame build"),
        };
        self.pending_delta = Some((removed, added));
    }
}

impl TreeGen for PivotGen {
    fn next_event(&mut self) -> Option<TransitionEvent<'_>> {
        loop {
            match self.phase {
                Phase::Done => return None,
                Phase::Descend => {
                    let pending = match self.frames.last() {
                        None => self.n as usize - 1, // initial path: all below level 1
                        Some(top) => top.pending(),
                    };
                    if pending == 0 {
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
                    let frame = self.build_frame();
                    self.frames.push(frame);
                }
                Phase::Resume => {
                    let Some(top) = self.frames.last_mut() else {
                        self.phase = Phase::Done;
                        return None;
                    };
                    match top.gen.advance() {
                        None => {
                            let frame = self.frames.pop().expect("frame exists");
                            self.work += frame.gen.work();
                        }
                        Some(delta) => {
                            self.apply_step(delta);
                            self.phase = Phase::Descend;
                        }
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
        self.work + self.frames.iter().map(|f| f.gen.work()).sum::<u64>()
    }
}
