//! C ABI over the spanning-tree Gray code generators.
//!
//! Handles are opaque pointers created and destroyed here; functions return
//! negative [`status codes`](self) on failure and stash a human-readable
//! message retrievable through [`st_last_error`]. Listings stream one
//! compact tree string per call, so a consumer in any language can walk
//! millions of trees in constant memory.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr};
use std::ptr;

use spantree::{
    count_spanning_trees, BipartiteGen, EdgeExchangeGen, Graph, ParentForest, PivotGen, TreeGen,
};

/// Success.
pub const ST_OK: c_int = 0;
/// A required pointer argument was null.
pub const ST_ERR_NULL: c_int = -1;
/// Arguments were out of domain (bad sizes, bad edge list, bad string).
pub const ST_ERR_INVALID: c_int = -2;
/// The output buffer is too small; retry with the returned capacity.
pub const ST_ERR_BUFFER: c_int = -3;

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(message: impl Into<String>) {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = message.into());
}

/// Copies the last error message on this thread into `buf` (NUL-terminated,
/// truncating). Returns the full message length in bytes.
///
/// # Safety
/// `buf` must point to `cap` writable bytes, or be null (query length only).
#[no_mangle]
pub unsafe extern "C" fn st_last_error(buf: *mut c_char, cap: usize) -> usize {
    LAST_ERROR.with(|slot| {
        let message = slot.borrow();
        write_str(&message, buf, cap);
        message.len()
    })
}

unsafe fn write_str(s: &str, buf: *mut c_char, cap: usize) {
    if buf.is_null() || cap == 0 {
        return;
    }
    let n = s.len().min(cap - 1);
    ptr::copy_nonoverlapping(s.as_ptr(), buf.cast(), n);
    *buf.add(n) = 0;
}

/// Opaque graph handle.
pub struct StGraph(Graph);

/// Opaque listing handle; yields spanning trees one at a time.
pub struct StListing {
    gen: Box<dyn TreeGen>,
    /// removed/added edge endpoints of the latest tree, -1 on the first
    delta: [i32; 4],
}

fn graph_handle(result: spantree::Result<Graph>) -> *mut StGraph {
    match result {
        Ok(g) => Box::into_raw(Box::new(StGraph(g))),
        Err(err) => {
            set_error(err.to_string());
            ptr::null_mut()
        }
    }
}

/// Complete graph K_n.
#[no_mangle]
pub extern "C" fn st_graph_complete(n: u32) -> *mut StGraph {
    graph_handle(spantree::build_graph(&spantree::GraphSpec::Complete(n)))
}

/// Complete bipartite graph K_{m,n} on parts {1..m} and {m+1..m+n}.
#[no_mangle]
pub extern "C" fn st_graph_bipartite(m: u32, n: u32) -> *mut StGraph {
    graph_handle(spantree::build_graph(&spantree::GraphSpec::Bipartite(m, n)))
}

/// Fan graph: hub 1 plus the path 2-3-...-n.
#[no_mangle]
pub extern "C" fn st_graph_fan(n: u32) -> *mut StGraph {
    graph_handle(spantree::build_graph(&spantree::GraphSpec::Fan(n)))
}

/// Wheel graph: fan plus the closing rim edge.
#[no_mangle]
pub extern "C" fn st_graph_wheel(n: u32) -> *mut StGraph {
    graph_handle(spantree::build_graph(&spantree::GraphSpec::Wheel(n)))
}

/// The Petersen graph (10 vertices, 15 edges).
#[no_mangle]
pub extern "C" fn st_graph_petersen() -> *mut StGraph {
    graph_handle(spantree::build_graph(&spantree::GraphSpec::Petersen))
}

/// Custom graph over vertices 1..=n from `edge_count` (u, v) pairs laid out
/// flat as u0, v0, u1, v1, ...
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable u32 values.
#[no_mangle]
pub unsafe extern "C" fn st_graph_custom(
    n: u32,
    edges: *const u32,
    edge_count: usize,
) -> *mut StGraph {
    if edges.is_null() && edge_count > 0 {
        set_error("edges pointer is null");
        return ptr::null_mut();
    }
    let flat = std::slice::from_raw_parts(edges, edge_count * 2);
    let pairs: Vec<(u32, u32)> = flat.chunks_exact(2).map(|c| (c[0], c[1])).collect();
    graph_handle(Graph::from_edges(n, &pairs))
}

/// # Safety
/// `graph` must come from a graph constructor and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn st_graph_free(graph: *mut StGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Vertex count, or ST_ERR_NULL.
///
/// # Safety
/// `graph` must be a live graph handle or null.
#[no_mangle]
pub unsafe extern "C" fn st_graph_vertex_count(graph: *const StGraph) -> i64 {
    match graph.as_ref() {
        Some(g) => g.0.n() as i64,
        None => ST_ERR_NULL as i64,
    }
}

/// Edge count, or ST_ERR_NULL.
///
/// # Safety
/// `graph` must be a live graph handle or null.
#[no_mangle]
pub unsafe extern "C" fn st_graph_edge_count(graph: *const StGraph) -> i64 {
    match graph.as_ref() {
        Some(g) => g.0.edge_count() as i64,
        None => ST_ERR_NULL as i64,
    }
}

/// Writes the exact spanning-tree count as a decimal string. Returns the
/// length in bytes excluding the NUL, or ST_ERR_BUFFER when `cap` is too
/// small (the required capacity is the return of a null-buffer call plus 1).
///
/// # Safety
/// `graph` must be a live graph handle; `buf` must hold `cap` writable bytes
/// or be null.
#[no_mangle]
pub unsafe extern "C" fn st_tree_count(graph: *const StGraph, buf: *mut c_char, cap: usize) -> i64 {
    let Some(g) = graph.as_ref() else {
        set_error("graph handle is null");
        return ST_ERR_NULL as i64;
    };
    let decimal = count_spanning_trees(&g.0).to_string();
    if buf.is_null() {
        return decimal.len() as i64;
    }
    if cap <= decimal.len() {
        set_error(format!("need {} bytes, got {cap}", decimal.len() + 1));
        return ST_ERR_BUFFER as i64;
    }
    write_str(&decimal, buf, cap);
    decimal.len() as i64
}

fn listing_handle(gen: spantree::Result<Box<dyn TreeGen>>) -> *mut StListing {
    match gen {
        Ok(gen) => Box::into_raw(Box::new(StListing {
            gen,
            delta: [-1; 4],
        })),
        Err(err) => {
            set_error(err.to_string());
            ptr::null_mut()
        }
    }
}

/// Pivot Gray code listing for K_n: consecutive trees exchange edges around
/// a common vertex, in constant amortized time per tree.
#[no_mangle]
pub extern "C" fn st_listing_pivot(n: u32) -> *mut StListing {
    listing_handle(PivotGen::new(n).map(|g| Box::new(g) as Box<dyn TreeGen>))
}

/// Edge-exchange listing for an arbitrary connected graph.
///
/// # Safety
/// `graph` must be a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn st_listing_edge_exchange(graph: *const StGraph) -> *mut StListing {
    let Some(g) = graph.as_ref() else {
        set_error("graph handle is null");
        return ptr::null_mut();
    };
    listing_handle(EdgeExchangeGen::new(g.0.clone()).map(|g| Box::new(g) as Box<dyn TreeGen>))
}

/// Edge-exchange listing starting from an explicit tree given in compact
/// form (character i is the parent of vertex i+2; 'a' = 10).
///
/// # Safety
/// `graph` must be a live graph handle; `compact_start` a NUL-terminated
/// string.
#[no_mangle]
pub unsafe extern "C" fn st_listing_edge_exchange_from(
    graph: *const StGraph,
    compact_start: *const c_char,
) -> *mut StListing {
    let Some(g) = graph.as_ref() else {
        set_error("graph handle is null");
        return ptr::null_mut();
    };
    if compact_start.is_null() {
        set_error("start string is null");
        return ptr::null_mut();
    }
    let Ok(compact) = CStr::from_ptr(compact_start).to_str() else {
        set_error("start string is not UTF-8");
        return ptr::null_mut();
    };
    let start = match ParentForest::from_compact(compact, g.0.n()) {
        Ok(f) => f,
        Err(err) => {
            set_error(err.to_string());
            return ptr::null_mut();
        }
    };
    listing_handle(
        EdgeExchangeGen::from_tree(g.0.clone(), start).map(|g| Box::new(g) as Box<dyn TreeGen>),
    )
}

/// Constant-amortized-time edge-exchange listing for K_{m,n}.
#[no_mangle]
pub extern "C" fn st_listing_bipartite(m: u32, n: u32) -> *mut StListing {
    listing_handle(BipartiteGen::new(m, n).map(|g| Box::new(g) as Box<dyn TreeGen>))
}

/// Advances the listing. Returns 1 with the tree's compact string written to
/// `buf`, 0 when the listing is exhausted, or a negative status code.
///
/// # Safety
/// `listing` must be a live listing handle; `buf` must hold `cap` writable
/// bytes.
#[no_mangle]
pub unsafe extern "C" fn st_listing_next(
    listing: *mut StListing,
    buf: *mut c_char,
    cap: usize,
) -> c_int {
    let Some(handle) = listing.as_mut() else {
        set_error("listing handle is null");
        return ST_ERR_NULL;
    };
    let Some(event) = handle.gen.next_event() else {
        return 0;
    };
    handle.delta = match (event.removed, event.added) {
        (Some((ru, rv)), Some((au, av))) => [ru as i32, rv as i32, au as i32, av as i32],
        _ => [-1; 4],
    };
    let compact = match event.forest.to_compact() {
        Ok(s) => s,
        Err(err) => {
            set_error(err.to_string());
            return ST_ERR_INVALID;
        }
    };
    if buf.is_null() || cap <= compact.len() {
        set_error(format!("need {} bytes, got {cap}", compact.len() + 1));
        return ST_ERR_BUFFER;
    }
    write_str(&compact, buf, cap);
    1
}

/// Endpoints of the edge exchange that produced the latest tree, as
/// (removed_u, removed_v, added_u, added_v); all -1 for the first tree.
///
/// # Safety
/// `listing` must be a live listing handle; `out` must hold four i32 slots.
#[no_mangle]
pub unsafe extern "C" fn st_listing_delta(listing: *const StListing, out: *mut i32) -> c_int {
    let Some(handle) = listing.as_ref() else {
        set_error("listing handle is null");
        return ST_ERR_NULL;
    };
    if out.is_null() {
        set_error("output pointer is null");
        return ST_ERR_NULL;
    }
    ptr::copy_nonoverlapping(handle.delta.as_ptr(), out, 4);
    ST_OK
}

/// Trees produced so far.
///
/// # Safety
/// `listing` must be a live listing handle or null.
#[no_mangle]
pub unsafe extern "C" fn st_listing_emitted(listing: *const StListing) -> u64 {
    listing.as_ref().map_or(0, |h| h.gen.emitted())
}

/// Instrumented primitive-operation counter for the run so far.
///
/// # Safety
/// `listing` must be a live listing handle or null.
#[no_mangle]
pub unsafe extern "C" fn st_listing_work(listing: *const StListing) -> u64 {
    listing.as_ref().map_or(0, |h| h.gen.work())
}

/// # Safety
/// `listing` must come from a listing constructor and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn st_listing_free(listing: *mut StListing) {
    if !listing.is_null() {
        drop(Box::from_raw(listing));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn next_string(listing: *mut StListing) -> Option<String> {
        let mut buf = [0 as c_char; 64];
        match unsafe { st_listing_next(listing, buf.as_mut_ptr(), buf.len()) } {
            1 => {
                let s = unsafe { CStr::from_ptr(buf.as_ptr()) };
                Some(s.to_str().unwrap().to_string())
            }
            0 => None,
            err => panic!("st_listing_next returned {err}"),
        }
    }

    #[test]
    fn pivot_listing_roundtrip() {
        let listing = st_listing_pivot(4);
        assert!(!listing.is_null());
        let mut trees = Vec::new();
        while let Some(s) = next_string(listing) {
            trees.push(s);
        }
        assert_eq!(trees.len(), 16);
        assert_eq!(trees[0], "123");
        assert_eq!(unsafe { st_listing_emitted(listing) }, 16);
        assert!(unsafe { st_listing_work(listing) } > 0);
        unsafe { st_listing_free(listing) };
    }

    #[test]
    fn custom_graph_and_count() {
        let edges: Vec<u32> = vec![1, 2, 2, 3, 3, 1];
        let graph = unsafe { st_graph_custom(3, edges.as_ptr(), 3) };
        assert!(!graph.is_null());
        assert_eq!(unsafe { st_graph_vertex_count(graph) }, 3);
        assert_eq!(unsafe { st_graph_edge_count(graph) }, 3);

        let mut buf = [0 as c_char; 32];
        let len = unsafe { st_tree_count(graph, buf.as_mut_ptr(), buf.len()) };
        assert_eq!(len, 1);
        assert_eq!(unsafe { CStr::from_ptr(buf.as_ptr()) }.to_str(), Ok("3"));
        unsafe { st_graph_free(graph) };
    }

    #[test]
    fn delta_reporting() {
        let listing = st_listing_pivot(3);
        let mut delta = [0i32; 4];
        next_string(listing).unwrap();
        unsafe { st_listing_delta(listing, delta.as_mut_ptr()) };
        assert_eq!(delta, [-1, -1, -1, -1]);
        next_string(listing).unwrap();
        unsafe { st_listing_delta(listing, delta.as_mut_ptr()) };
        assert_eq!(delta, [2, 3, 1, 3]);
        unsafe { st_listing_free(listing) };
    }

    #[test]
    fn errors_are_reported() {
        let graph = st_graph_complete(0);
        assert!(graph.is_null());
        let mut buf = [0 as c_char; 128];
        let len = unsafe { st_last_error(buf.as_mut_ptr(), buf.len()) };
        assert!(len > 0);

        let edges: Vec<u32> = vec![1, 1];
        let graph = unsafe { st_graph_custom(2, edges.as_ptr(), 1) };
        assert!(graph.is_null());

        let listing = unsafe { st_listing_edge_exchange(ptr::null()) };
        assert!(listing.is_null());
    }

    #[test]
    fn buffer_too_small() {
        let listing = st_listing_pivot(5);
        let mut buf = [0 as c_char; 2];
        let code = unsafe { st_listing_next(listing, buf.as_mut_ptr(), buf.len()) };
        assert_eq!(code, ST_ERR_BUFFER);
        unsafe { st_listing_free(listing) };
    }

    #[test]
    fn bipartite_and_explicit_start() {
        let listing = st_listing_bipartite(2, 3);
        let mut count = 0;
        while next_string(listing).is_some() {
            count += 1;
        }
        assert_eq!(count, 12);
        unsafe { st_listing_free(listing) };

        let edges: Vec<u32> = vec![1, 2, 1, 4, 1, 6, 1, 7, 2, 3, 3, 4, 3, 5, 4, 5, 6, 7];
        let graph = unsafe { st_graph_custom(7, edges.as_ptr(), 9) };
        let start = std::ffi::CString::new("123416").unwrap();
        let listing = unsafe { st_listing_edge_exchange_from(graph, start.as_ptr()) };
        assert!(!listing.is_null());
        assert_eq!(next_string(listing).as_deref(), Some("123416"));
        unsafe { st_listing_free(listing) };
        unsafe { st_graph_free(graph) };
    }
}
