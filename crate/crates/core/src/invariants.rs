//! Exact combinatorial invariants.
//!
//! Clique, independence and domination numbers are exponential searches over
//! single-word bitsets and are limited to [`EXACT_CAP`] vertices. Everything
//! else works at any order.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order for which ω, α and γ are computed.
pub const EXACT_CAP: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct InvariantSet {
    pub n: usize,
    pub m: usize,
    /// `None`: not computed (order above [`EXACT_CAP`]).
    pub omega: Option<usize>,
    pub alpha: Option<usize>,
    pub gamma: Option<usize>,
    pub alpha_prime: usize,
    /// `None`: infinite (disconnected).
    pub diam: Option<usize>,
    #[serde(rename = "maxdeg")]
    pub max_degree: usize,
    #[serde(rename = "mindeg")]
    pub min_degree: usize,
    pub connected: bool,
    pub bipartite: bool,
    pub claw_free: bool,
    pub triangle_count: usize,
    #[serde(rename = "inducedC4Count")]
    pub induced_c4_count: usize,
    pub unicyclic: bool,
}

impl InvariantSet {
    pub fn is_tree(&self) -> bool {
        self.connected && self.m + 1 == self.n
    }
}

pub fn invariants(g: &Graph) -> InvariantSet {
    let exact = g.n() <= EXACT_CAP;
    let degrees = g.degrees();
    let connected = g.is_connected();
    InvariantSet {
        n: g.n(),
        m: g.m(),
        omega: exact.then(|| clique_number(g).expect("within cap")),
        alpha: exact.then(|| independence_number(g).expect("within cap")),
        gamma: exact.then(|| domination_number(g).expect("within cap")),
        alpha_prime: matching_number(g),
        diam: diameter(g),
        max_degree: degrees.iter().copied().max().unwrap_or(0),
        min_degree: degrees.iter().copied().min().unwrap_or(0),
        connected,
        bipartite: is_bipartite(g),
        claw_free: is_claw_free(g),
        triangle_count: triangle_count(g),
        induced_c4_count: induced_c4_count(g),
        unicyclic: connected && g.m() == g.n(),
    }
}

fn masks(g: &Graph, what: &'static str) -> Result<Vec<u64>> {
    g.masks64().ok_or(Error::Capacity {
        what,
        limit: EXACT_CAP,
        got: g.n(),
    })
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn bits(mut w: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (w != 0).then(|| {
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            b
        })
    })
}

/// A maximum clique (sorted), by branch-and-bound with greedy coloring bounds.
pub fn maximum_clique(g: &Graph) -> Result<Vec<usize>> {
    let adj = masks(g, "clique search order")?;
    let mut best = Vec::new();
    let mut cur = Vec::new();
    clique_expand(&adj, full_mask(g.n()), &mut cur, &mut best);
    best.sort_unstable();
    Ok(best)
}

fn color_sort(adj: &[u64], p: u64) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(p.count_ones() as usize);
    let mut colors = Vec::with_capacity(order.capacity());
    let mut uncolored = p;
    let mut color = 0;
    while uncolored != 0 {
        color += 1;
        let mut q = uncolored;
        while q != 0 {
            let v = q.trailing_zeros() as usize;
            q &= !adj[v] & !(1 << v);
            uncolored &= !(1 << v);
            order.push(v);
            colors.push(color);
        }
    }
    (order, colors)
}

fn clique_expand(adj: &[u64], mut p: u64, cur: &mut Vec<usize>, best: &mut Vec<usize>) {
    let (order, colors) = color_sort(adj, p);
    for i in (0..order.len()).rev() {
        if cur.len() + colors[i] <= best.len() {
            return;
        }
        let v = order[i];
        cur.push(v);
        let np = p & adj[v];
        if np == 0 {
            if cur.len() > best.len() {
                best.clone_from(cur);
            }
        } else {
            clique_expand(adj, np, cur, best);
        }
        cur.pop();
        p &= !(1 << v);
    }
}

pub fn clique_number(g: &Graph) -> Result<usize> {
    Ok(maximum_clique(g)?.len())
}

pub fn independence_number(g: &Graph) -> Result<usize> {
    if g.n() > EXACT_CAP {
        return Err(Error::Capacity {
            what: "independence search order",
            limit: EXACT_CAP,
            got: g.n(),
        });
    }
    clique_number(&g.complement())
}

/// Every maximum clique, each sorted, in lexicographic order.
pub fn all_maximum_cliques(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let adj = masks(g, "clique search order")?;
    let omega = clique_number(g)?;
    let mut out = Vec::new();
    let mut cur = Vec::new();
    all_cliques_of_size(&adj, full_mask(g.n()), omega, &mut cur, &mut out);
    out.sort();
    Ok(out)
}

fn all_cliques_of_size(adj: &[u64], p: u64, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == size {
        out.push(cur.clone());
        return;
    }
    if cur.len() + (p.count_ones() as usize) < size {
        return;
    }
    for v in bits(p) {
        cur.push(v);
        let higher = if v == 63 { 0 } else { !((2u64 << v) - 1) };
        all_cliques_of_size(adj, p & adj[v] & higher, size, cur, out);
        cur.pop();
    }
}

/// A minimum dominating set (sorted).
pub fn minimum_dominating_set(g: &Graph) -> Result<Vec<usize>> {
    let adj = masks(g, "domination search order")?;
    let n = g.n();
    let closed: Vec<u64> = (0..n).map(|v| adj[v] | (1 << v)).collect();
    let reach = closed.iter().map(|c| c.count_ones() as usize).max().unwrap_or(1);
    let mut best: Vec<usize> = (0..n).collect();
    let mut cur = Vec::new();
    dominate(&closed, full_mask(n), reach, 0, &mut cur, &mut best);
    best.sort_unstable();
    Ok(best)
}

fn dominate(closed: &[u64], full: u64, reach: usize, covered: u64, cur: &mut Vec<usize>, best: &mut Vec<usize>) {
    if covered == full {
        if cur.len() < best.len() {
            best.clone_from(cur);
        }
        return;
    }
    let missing = (full & !covered).count_ones() as usize;
    if cur.len() + missing.div_ceil(reach) >= best.len() {
        return;
    }
    let v = (full & !covered).trailing_zeros() as usize;
    let mut options: Vec<usize> = bits(closed[v]).collect();
    options.sort_by_key(|&u| std::cmp::Reverse((closed[u] & !covered).count_ones()));
    for u in options {
        cur.push(u);
        dominate(closed, full, reach, covered | closed[u], cur, best);
        cur.pop();
    }
}

pub fn domination_number(g: &Graph) -> Result<usize> {
    Ok(minimum_dominating_set(g)?.len())
}

const NONE: usize = usize::MAX;

/// Maximum matching by Edmonds' blossom algorithm; `mate[v]` or `None`.
pub fn maximum_matching(g: &Graph) -> Vec<Option<usize>> {
    let n = g.n();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut mate = vec![NONE; n];
    let mut st = BlossomState {
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        blossom: vec![false; n],
        queue: Vec::with_capacity(n),
    };
    for v in 0..n {
        if mate[v] == NONE {
            for &u in &adj[v] {
                if mate[u] == NONE {
                    mate[u] = v;
                    mate[v] = u;
                    break;
                }
            }
        }
    }
    for root in 0..n {
        if mate[root] != NONE {
            continue;
        }
        if let Some(mut v) = st.find_path(root, &adj, &mate) {
            while v != NONE {
                let pv = st.parent[v];
                let next = mate[pv];
                mate[v] = pv;
                mate[pv] = v;
                v = next;
            }
        }
    }
    mate.into_iter().map(|m| (m != NONE).then_some(m)).collect()
}

struct BlossomState {
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
    queue: Vec<usize>,
}

impl BlossomState {
    fn lca(&self, mut a: usize, mut b: usize, mate: &[usize]) -> usize {
        let mut seen = vec![false; mate.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if mate[a] == NONE {
                break;
            }
            a = self.parent[mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize, mate: &[usize]) {
        while self.base[v] != b {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[mate[v]]] = true;
            self.parent[v] = child;
            child = mate[v];
            v = self.parent[mate[v]];
        }
    }

    fn find_path(&mut self, root: usize, adj: &[Vec<usize>], mate: &[usize]) -> Option<usize> {
        let n = adj.len();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push(root);
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            for &to in &adj[v] {
                if self.base[v] == self.base[to] || mate[v] == to {
                    continue;
                }
                if to == root || (mate[to] != NONE && self.parent[mate[to]] != NONE) {
                    let cur = self.lca(v, to, mate);
                    self.blossom.fill(false);
                    self.mark_path(v, cur, to, mate);
                    self.mark_path(to, cur, v, mate);
                    for i in 0..n {
                        if self.blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if mate[to] == NONE {
                        return Some(to);
                    }
                    let next = mate[to];
                    self.used[next] = true;
                    self.queue.push(next);
                }
            }
        }
        None
    }
}

pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).iter().filter(|m| m.is_some()).count() / 2
}

/// `None` when disconnected.
pub fn diameter(g: &Graph) -> Option<usize> {
    let mut best = 0;
    for s in 0..g.n() {
        for d in g.distances_from(s) {
            best = best.max(d?);
        }
    }
    Some(best)
}

pub fn is_bipartite(g: &Graph) -> bool {
    let mut side = vec![None; g.n()];
    for s in 0..g.n() {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            let su = side[u].unwrap();
            for w in g.neighbors(u) {
                match side[w] {
                    None => {
                        side[w] = Some(!su);
                        stack.push(w);
                    }
                    Some(sw) if sw == su => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

fn and_count(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

fn and_bits(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn word_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| bits(w).map(move |b| i * 64 + b))
}

/// Finds an induced claw `(center, [leaves])`, if any.
pub fn find_claw(g: &Graph) -> Option<(usize, [usize; 3])> {
    for v in 0..g.n() {
        let nv: Vec<usize> = g.neighbors(v).collect();
        for (i, &a) in nv.iter().enumerate() {
            for (j, &b) in nv.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                if let Some(&c) = nv[j + 1..].iter().find(|&&c| !g.has_edge(a, c) && !g.has_edge(b, c)) {
                    return Some((v, [a, b, c]));
                }
            }
        }
    }
    None
}

pub fn is_claw_free(g: &Graph) -> bool {
    find_claw(g).is_none()
}

pub fn triangle_count(g: &Graph) -> usize {
    let mut t = 0;
    for (u, v) in g.edges() {
        t += and_count(g.row(u), g.row(v));
    }
    t / 3
}

/// Induced 4-cycles, counted via common neighborhoods of non-adjacent pairs:
/// each induced `C₄` has two diagonals, so the pair sum is halved.
pub fn induced_c4_count(g: &Graph) -> usize {
    let n = g.n();
    let mut total = 0;
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            let common = and_bits(g.row(u), g.row(v));
            let c: usize = common.iter().map(|w| w.count_ones() as usize).sum();
            if c < 2 {
                continue;
            }
            let inner: usize = word_bits(&common).map(|x| and_count(g.row(x), &common)).sum::<usize>() / 2;
            total += c * (c - 1) / 2 - inner;
        }
    }
    total / 2
}

/// Common-neighbor counts `|N(u) ∩ N(v)|` over non-adjacent pairs `u < v`.
pub fn nonadjacent_common_neighbors(g: &Graph) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if !g.has_edge(u, v) {
                out.push((u, v, and_count(g.row(u), g.row(v))));
            }
        }
    }
    out
}

/// Cut vertices by one DFS lowpoint pass (iterative), sorted.
pub fn cut_vertices(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut time = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbor index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(top) = stack.last_mut() {
            let (v, parent, idx) = *top;
            if idx < adj[v].len() {
                top.2 += 1;
                let w = adj[v][idx];
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if parent != root && low[v] >= disc[parent] {
                        is_cut[parent] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    (0..n).filter(|&v| is_cut[v]).collect()
}

/// An induced path `a – center – c` (`a < c`, `a` and `c` non-adjacent).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InducedP3 {
    pub ends: (usize, usize),
    pub center: usize,
    /// Cut-vertex flags for `[a, center, c]`.
    pub cut: [bool; 3],
}

impl InducedP3 {
    pub fn vertices(&self) -> [usize; 3] {
        [self.ends.0, self.center, self.ends.1]
    }

    pub fn has_cut_vertex(&self) -> bool {
        self.cut.iter().any(|&c| c)
    }
}

/// All induced P₃'s in lexicographic order of `(center, a, c)`.
pub fn induced_p3s(g: &Graph) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
    (0..g.n()).flat_map(move |b| {
        let nb: Vec<usize> = g.neighbors(b).collect();
        let mut out = Vec::new();
        for (i, &a) in nb.iter().enumerate() {
            for &c in &nb[i + 1..] {
                if !g.has_edge(a, c) {
                    out.push((b, a, c));
                }
            }
        }
        out
    })
}

/// The lexicographically first induced P₃, or `None` if `g` is a disjoint
/// union of cliques.
pub fn first_induced_p3(g: &Graph) -> Option<(usize, usize, usize)> {
    induced_p3s(g).next()
}

/// Prefers the first induced P₃ free of cut vertices; otherwise returns the
/// first induced P₃ with its flags. `None` if `g` is P₃-free.
pub fn find_induced_p3_noncut(g: &Graph) -> Option<InducedP3> {
    let cuts = cut_vertices(g);
    let is_cut = |v: usize| cuts.binary_search(&v).is_ok();
    let make = |(b, a, c): (usize, usize, usize)| InducedP3 {
        ends: (a, c),
        center: b,
        cut: [is_cut(a), is_cut(b), is_cut(c)],
    };
    let mut first = None;
    for t in induced_p3s(g) {
        let p = make(t);
        if !p.has_cut_vertex() {
            return Some(p);
        }
        first.get_or_insert(p);
    }
    first
}

/// Connected components as graphs, ordered by smallest original vertex.
pub fn components(g: &Graph) -> Vec<Graph> {
    g.component_sets()
        .iter()
        .map(|c| g.induced_subgraph(c).expect("valid vertices"))
        .collect()
}
