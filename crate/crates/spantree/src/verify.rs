//! Independent oracles and validators: exact spanning-tree counting,
//! brute-force enumeration, transition classification, and streaming
//! validation of whole listings.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::tree::{Edge, ParentForest, TreeGen};

/// Exact number of spanning trees via a cofactor of the graph Laplacian,
/// computed with fraction-free integer elimination.
pub fn count_spanning_trees(g: &Graph) -> BigInt {
    let n = g.n() as usize;
    if n == 1 {
        return BigInt::one();
    }
    // reduced Laplacian: drop the row and column of vertex 1
    let dim = n - 1;
    let mut a: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); dim]; dim];
    for v in 2..=n as u32 {
        let i = v as usize - 2;
        a[i][i] = BigInt::from(g.neighbors(v).len());
        for &w in g.neighbors(v) {
            if w >= 2 {
                a[i][w as usize - 2] = BigInt::from(-1);
            }
        }
    }

    // Bareiss: every division below is exact
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..dim {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..dim).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..dim {
            for j in k + 1..dim {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[dim - 1][dim - 1].clone() * sign;
    debug_assert!(!det.is_negative());
    det.abs()
}

/// Closed form of the level recursion: the number of rooted spanning trees
/// extending a fixed subtree with `k` parents exposed and `c` vertices left
/// equals k(k+c)^(c-1), and 1 when c = 0.
pub fn cayley_count(k: u64, c: u64) -> BigInt {
    if c == 0 {
        return BigInt::one();
    }
    BigInt::from(k) * BigInt::from(k + c).pow(c as u32 - 1)
}

/// Evaluates the same quantity by the recursive sum
/// f(k, c) = sum over i of C(c, i) k^i f(i, c - i); used to cross-check the
/// closed form.
pub fn cayley_count_recursive(k: u64, c: u64) -> BigInt {
    if c == 0 {
        return BigInt::one();
    }
    let mut total = BigInt::zero();
    for i in 1..=c {
        total += binomial(c, i) * BigInt::from(k).pow(i as u32) * cayley_count_recursive(i, c - i);
    }
    total
}

fn binomial(n: u64, k: u64) -> BigInt {
    let mut result = BigInt::one();
    for j in 0..k.min(n - k) {
        result = result * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    result
}

/// All spanning trees of `g` as sorted edge sets, by exhaustive search over
/// (n-1)-edge subsets. Refuses inputs where C(|E|, n-1) exceeds 10^7 or
/// n > 10.
pub fn brute_force_trees(g: &Graph) -> Result<Vec<Vec<Edge>>> {
    let n = g.n() as usize;
    if n > 10 {
        return Err(Error::Capacity(format!(
            "brute force limited to n <= 10, got {n}"
        )));
    }
    if n == 1 {
        return Ok(vec![Vec::new()]);
    }
    let edges = g.edges();
    let k = n - 1;
    if edges.len() < k {
        return Ok(Vec::new());
    }
    let subsets = binomial(edges.len() as u64, k as u64);
    if subsets > BigInt::from(10_000_000u64) {
        return Err(Error::Capacity(format!(
            "C({}, {k}) = {subsets} exceeds the 1e7 subset limit",
            edges.len()
        )));
    }

    let mut out = Vec::new();
    let mut pick: Vec<usize> = (0..k).collect();
    loop {
        let subset: Vec<Edge> = pick.iter().map(|&i| edges[i]).collect();
        if is_spanning_tree_edges(n, &subset) {
            out.push(subset);
        }
        // next k-combination in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if pick[i] != i + edges.len() - k {
                break;
            }
        }
        pick[i] += 1;
        for j in i + 1..k {
            pick[j] = pick[j - 1] + 1;
        }
    }
}

fn is_spanning_tree_edges(n: usize, edges: &[Edge]) -> bool {
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut merged = 0;
    for &(u, v) in edges {
        let (ru, rv) = (find(&mut parent, u as usize), find(&mut parent, v as usize));
        if ru == rv {
            return false;
        }
        parent[ru] = rv;
        merged += 1;
    }
    merged == n - 1
}

/// How two trees over the same vertex set relate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transition {
    Identical,
    /// One edge swapped for another sharing an endpoint.
    Pivot,
    /// One edge swapped for another with no common endpoint.
    EdgeExchange,
    /// More than one edge differs.
    Invalid,
}

/// Classifies the change between two trees by comparing their undirected
/// edge sets; reorienting parent pointers without changing edges counts as
/// identical.
pub fn classify_transition(t1: &ParentForest, t2: &ParentForest) -> Result<Transition> {
    if t1.n() != t2.n() {
        return Err(Error::Domain(format!(
            "tree sizes differ: {} vs {}",
            t1.n(),
            t2.n()
        )));
    }
    let e1: Vec<Edge> = t1.edges().collect();
    let e2: Vec<Edge> = t2.edges().collect();
    Ok(classify_edge_sets(&e1, &e2))
}

/// Which closeness condition a listing promises.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ListingMode {
    Pivot,
    EdgeExchange,
}

/// Aggregate result of validating one listing.
#[derive(Debug, Clone)]
pub struct ListingReport {
    pub tree_count: u64,
    pub distinct_count: u64,
    pub all_spanning: bool,
    pub pivot_transitions: u64,
    pub edge_exchange_transitions: u64,
    pub invalid_transitions: u64,
    pub expected_count: BigInt,
    pub first_violation: Option<(u64, String)>,
    /// How the last tree relates to the first. Informational only: no
    /// listing here promises cyclic closure.
    pub closure: Option<Transition>,
}

impl ListingReport {
    /// True when every check for `mode` holds: spanning, distinct, complete,
    /// and every transition legal (pivot mode also forbids non-pivot
    /// exchanges).
    pub fn passes(&self, mode: ListingMode) -> bool {
        let transitions_ok = match mode {
            ListingMode::Pivot => {
                self.invalid_transitions == 0 && self.edge_exchange_transitions == 0
            }
            ListingMode::EdgeExchange => self.invalid_transitions == 0,
        };
        transitions_ok
            && self.all_spanning
            && self.distinct_count == self.tree_count
            && BigInt::from(self.tree_count) == self.expected_count
    }

    pub fn summary_lines(&self, mode: ListingMode) -> Vec<String> {
        let mut lines = vec![
            format!("trees emitted:    {}", self.tree_count),
            format!("distinct trees:   {}", self.distinct_count),
            format!("expected count:   {}", self.expected_count),
            format!("all spanning:     {}", self.all_spanning),
            format!(
                "transitions:      pivot={} edge-exchange={} invalid={}",
                self.pivot_transitions, self.edge_exchange_transitions, self.invalid_transitions
            ),
        ];
        if let Some(closure) = self.closure {
            let wording = match closure {
                Transition::Pivot => "pivot (listing is cyclic)",
                Transition::EdgeExchange => "edge exchange (listing is cyclic)",
                Transition::Identical => "identical",
                Transition::Invalid => "open (several edges differ)",
            };
            lines.push(format!("closure:          {wording}"));
        }
        if let Some((idx, desc)) = &self.first_violation {
            lines.push(format!("first violation:  tree {idx}: {desc}"));
        }
        lines.push(format!(
            "verdict:          {}",
            if self.passes(mode) { "PASS" } else { "FAIL" }
        ));
        lines
    }
}

/// Streaming listing validator: feed trees one at a time, then call
/// [`finish`](Self::finish). Keeps one 128-bit digest per tree rather than
/// the tree itself, so memory stays proportional to the count alone.
pub struct ListingValidator<'g> {
    graph: &'g Graph,
    mode: ListingMode,
    digests: HashSet<u128>,
    first_edges: Option<Vec<Edge>>,
    prev_edges: Option<Vec<Edge>>,
    report: ListingReport,
}

impl<'g> ListingValidator<'g> {
    pub fn new(graph: &'g Graph, mode: ListingMode) -> Self {
        ListingValidator {
            graph,
            mode,
            digests: HashSet::new(),
            first_edges: None,
            prev_edges: None,
            report: ListingReport {
                tree_count: 0,
                distinct_count: 0,
                all_spanning: true,
                pivot_transitions: 0,
                edge_exchange_transitions: 0,
                invalid_transitions: 0,
                expected_count: count_spanning_trees(graph),
                first_violation: None,
                closure: None,
            },
        }
    }

    fn violation(&mut self, index: u64, description: String) {
        if self.report.first_violation.is_none() {
            self.report.first_violation = Some((index, description));
        }
    }

    /// Records one tree of the listing. Trees are numbered from 1 in
    /// violation reports.
    pub fn observe(&mut self, forest: &ParentForest) {
        self.report.tree_count += 1;
        let index = self.report.tree_count;

        let edges = forest.sorted_edges();
        if !forest.is_spanning_tree_of(self.graph) {
            self.report.all_spanning = false;
            self.violation(index, "not a spanning tree of the graph".into());
        }
        if self.digests.insert(digest_edges(&edges)) {
            self.report.distinct_count += 1;
        } else {
            self.violation(index, "duplicate tree".into());
        }

        if let Some(prev) = &self.prev_edges {
            match classify_edge_sets(prev, &edges) {
                Transition::Pivot => self.report.pivot_transitions += 1,
                Transition::EdgeExchange => {
                    self.report.edge_exchange_transitions += 1;
                    if self.mode == ListingMode::Pivot {
                        self.violation(
                            index,
                            format!("transition {}->{} is not a pivot", index - 1, index),
                        );
                    }
                }
                Transition::Identical | Transition::Invalid => {
                    self.report.invalid_transitions += 1;
                    self.violation(
                        index,
                        format!(
                            "transition {}->{} is not an edge exchange",
                            index - 1,
                            index
                        ),
                    );
                }
            }
        } else {
            self.first_edges = Some(edges.clone());
        }
        self.prev_edges = Some(edges);
    }

    pub fn finish(mut self) -> ListingReport {
        if BigInt::from(self.report.tree_count) != self.report.expected_count {
            let index = self.report.tree_count;
            self.violation(
                index,
                format!(
                    "count {} differs from matrix-tree count {}",
                    self.report.tree_count, self.report.expected_count
                ),
            );
        }
        if self.report.tree_count > 1 {
            if let (Some(first), Some(last)) = (&self.first_edges, &self.prev_edges) {
                self.report.closure = Some(classify_edge_sets(last, first));
            }
        }
        self.report
    }
}

fn classify_edge_sets(a: &[Edge], b: &[Edge]) -> Transition {
    let sa: HashSet<Edge> = a.iter().copied().collect();
    let sb: HashSet<Edge> = b.iter().copied().collect();
    let removed: Vec<Edge> = sa.difference(&sb).copied().collect();
    let added: Vec<Edge> = sb.difference(&sa).copied().collect();
    match (removed.len(), added.len()) {
        (0, 0) => Transition::Identical,
        (1, 1) => {
            let (r, a) = (removed[0], added[0]);
            if r.0 == a.0 || r.0 == a.1 || r.1 == a.0 || r.1 == a.1 {
                Transition::Pivot
            } else {
                Transition::EdgeExchange
            }
        }
        _ => Transition::Invalid,
    }
}

fn digest_edges(edges: &[Edge]) -> u128 {
    let mut hasher = Sha256::new();
    for (u, v) in edges {
        hasher.update(u.to_le_bytes());
        hasher.update(v.to_le_bytes());
    }
    let out = hasher.finalize();
    u128::from_le_bytes(out[..16].try_into().expect("digest is 32 bytes"))
}

/// Validates a fully materialized listing.
pub fn validate_listing(g: &Graph, listing: &[ParentForest], mode: ListingMode) -> ListingReport {
    let mut validator = ListingValidator::new(g, mode);
    for forest in listing {
        validator.observe(forest);
    }
    validator.finish()
}

/// Runs a generator to completion through a validator.
pub fn validate_generator(g: &Graph, gen: &mut dyn TreeGen, mode: ListingMode) -> ListingReport {
    let mut validator = ListingValidator::new(g, mode);
    while let Some(ev) = gen.next_event() {
        validator.observe(ev.forest);
    }
    validator.finish()
}
