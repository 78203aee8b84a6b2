//! Isomorph-free enumeration by vertex augmentation.
//!
//! A child `H = G + x` is kept only when `x` lies in the automorphism orbit
//! of the canonical deletion vertex of `H`: the vertex with the largest
//! canonical position, restricted to non-cut vertices for the connected
//! stream. Children of one parent are deduplicated by certificate.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::canon::{canonical, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::cut_vertices;

pub const ENUMERATION_CAP: usize = 9;

fn check(n: usize) -> Result<()> {
    if n == 0 || n > ENUMERATION_CAP {
        return Err(Error::Capacity {
            what: "enumeration order",
            limit: ENUMERATION_CAP,
            got: n,
        });
    }
    Ok(())
}

fn deletion_vertex(h: &Graph, connected: bool) -> Result<(Vec<usize>, usize, CanonicalForm)> {
    let c = canonical(h)?;
    let cuts = if connected { cut_vertices(h) } else { Vec::new() };
    let v = c
        .labeling
        .iter()
        .rev()
        .copied()
        .find(|v| cuts.binary_search(v).is_err())
        .expect("a connected graph has a non-cut vertex");
    Ok((c.orbit, v, c.form))
}

/// Accepted children of `parent`, in subset order.
fn children(parent: &Graph, connected: bool) -> Result<Vec<Graph>> {
    let k = parent.n();
    let x = k;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let start = if connected { 1u32 } else { 0 };
    for subset in start..(1u32 << k) {
        let child = Graph::from_fn(k + 1, |u, v| if v == x { subset >> u & 1 == 1 } else { parent.has_edge(u, v) })?;
        let (orbit, del, form) = deletion_vertex(&child, connected)?;
        if orbit[del] == orbit[x] && seen.insert(form) {
            out.push(child);
        }
    }
    Ok(out)
}

fn level(parents: &[Graph], connected: bool) -> Result<Vec<Graph>> {
    let parts: Vec<Vec<Graph>> = parents.par_iter().map(|p| children(p, connected)).collect::<Result<_>>()?;
    Ok(parts.into_iter().flatten().collect())
}

fn graphs(n: usize, connected: bool) -> Result<Vec<Graph>> {
    check(n)?;
    let mut cur = vec![Graph::empty(1)?];
    for _ in 1..n {
        cur = level(&cur, connected)?;
    }
    Ok(cur)
}

/// One representative of every connected graph on `n` vertices, in a
/// deterministic order.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    graphs(n, true)
}

/// One representative of every graph on `n` vertices.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    graphs(n, false)
}

/// Streams every connected graph on `n` vertices to `consumer`, concurrently,
/// and returns the count.
pub fn enumerate_connected<F>(n: usize, consumer: F) -> Result<u64>
where
    F: Fn(&Graph) + Sync,
{
    check(n)?;
    let mut cur = vec![Graph::empty(1)?];
    for _ in 1..n.saturating_sub(1) {
        cur = level(&cur, true)?;
    }
    if n == 1 {
        consumer(&cur[0]);
        return Ok(1);
    }
    let counts: Vec<u64> = cur
        .par_iter()
        .map(|p| {
            let kids = children(p, true)?;
            kids.iter().for_each(&consumer);
            Ok(kids.len() as u64)
        })
        .collect::<Result<_>>()?;
    Ok(counts.into_iter().sum())
}
