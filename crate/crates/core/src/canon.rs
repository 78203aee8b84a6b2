//! Canonical labeling for graphs of order at most 16: equitable refinement,
//! individualization of the first non-singleton cell, and pruning by the
//! automorphisms discovered along the way.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const CANON_CAP: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub n: usize,
    /// Upper triangle of the canonically relabeled adjacency matrix, pairs in
    /// graph6 order, first pair in the most significant used bit.
    pub certificate: u128,
}

#[derive(Clone, Debug)]
pub struct Canonical {
    pub form: CanonicalForm,
    /// `labeling[p]`: input vertex placed at canonical position `p`.
    pub labeling: Vec<usize>,
    /// `orbit[v]`: smallest vertex in the automorphism orbit of `v`.
    pub orbit: Vec<usize>,
    pub automorphism_count: u64,
    pub generators: Vec<Vec<usize>>,
}

impl Canonical {
    /// `positions()[v]`: canonical position of input vertex `v`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.labeling.len()];
        for (p, &v) in self.labeling.iter().enumerate() {
            pos[v] = p;
        }
        pos
    }

    pub fn canonical_graph(&self, g: &Graph) -> Graph {
        let l = &self.labeling;
        Graph::from_fn(l.len(), |a, b| g.has_edge(l[a], l[b])).expect("same order")
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    Ok(canonical(g)?.form)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(g.n() == h.n() && g.m() == h.m() && canonical_form(g)? == canonical_form(h)?)
}

pub fn canonical(g: &Graph) -> Result<Canonical> {
    let n = g.n();
    if n > CANON_CAP {
        return Err(Error::Capacity {
            what: "canonical labeling order",
            limit: CANON_CAP,
            got: n,
        });
    }
    let rows: Vec<u32> = g.masks64().expect("order ≤ 16").into_iter().map(|r| r as u32).collect();
    let mut s = Search {
        n,
        rows,
        first: None,
        best: None,
        gens: Vec::new(),
        level_orbit: vec![1; n],
    };
    let mut root = vec![(0..n).collect::<Vec<_>>()];
    s.refine(&mut root);
    s.search(root, &mut Vec::new());
    let best = s.best.take().expect("at least one leaf");
    let orbit = orbits(n, s.gens.iter());
    let mut uf_min = vec![usize::MAX; n];
    for v in 0..n {
        uf_min[orbit[v]] = uf_min[orbit[v]].min(v);
    }
    Ok(Canonical {
        form: CanonicalForm {
            n,
            certificate: best.cert,
        },
        labeling: best.perm,
        orbit: (0..n).map(|v| uf_min[orbit[v]]).collect(),
        automorphism_count: s.level_orbit.iter().map(|&x| x as u64).product(),
        generators: s.gens,
    })
}

#[derive(Clone)]
struct Leaf {
    perm: Vec<usize>,
    cert: u128,
    path: Vec<usize>,
}

struct Search {
    n: usize,
    rows: Vec<u32>,
    first: Option<Leaf>,
    best: Option<Leaf>,
    gens: Vec<Vec<usize>>,
    level_orbit: Vec<usize>,
}

type Partition = Vec<Vec<usize>>;

impl Search {
    /// Splits cells by neighbor counts into every cell until stable.
    fn refine(&self, p: &mut Partition) {
        loop {
            let masks: Vec<u32> = p.iter().map(|c| c.iter().fold(0, |m, &v| m | 1 << v)).collect();
            let mut next: Partition = Vec::with_capacity(self.n);
            for cell in p.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<u32>, usize)> = cell
                    .iter()
                    .map(|&v| (masks.iter().map(|&m| (self.rows[v] & m).count_ones()).collect(), v))
                    .collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|x| x.1).collect());
                        start = i;
                    }
                }
            }
            let changed = next.len() != p.len();
            *p = next;
            if !changed {
                return;
            }
        }
    }

    fn certificate(&self, perm: &[usize]) -> u128 {
        let mut c = 0u128;
        for b in 1..self.n {
            for a in 0..b {
                c = (c << 1) | ((self.rows[perm[a]] >> perm[b]) & 1) as u128;
            }
        }
        c
    }

    /// Returns the prefix length to unwind to, if a found automorphism makes
    /// the remaining siblings redundant.
    fn search(&mut self, p: Partition, path: &mut Vec<usize>) -> Option<usize> {
        let Some(ti) = p.iter().position(|c| c.len() > 1) else {
            return self.leaf(p.into_iter().map(|c| c[0]).collect(), path);
        };
        let target = p[ti].clone();
        let on_first = self.first.as_ref().is_none_or(|f| f.path.starts_with(path));
        let mut tried: Vec<usize> = Vec::new();
        for &v in &target {
            if !tried.is_empty() {
                let orb = orbits(self.n, self.gens.iter().filter(|g| path.iter().all(|&u| g[u] == u)));
                if tried.iter().any(|&w| orb[w] == orb[v]) {
                    continue;
                }
            }
            let mut child = p.clone();
            let rest: Vec<usize> = target.iter().copied().filter(|&u| u != v).collect();
            child.splice(ti..=ti, [vec![v], rest]);
            self.refine(&mut child);
            path.push(v);
            let jump = self.search(child, path);
            path.pop();
            tried.push(v);
            if let Some(t) = jump {
                if t < path.len() {
                    return Some(t);
                }
            }
        }
        if on_first {
            let orb = orbits(self.n, self.gens.iter().filter(|g| path.iter().all(|&u| g[u] == u)));
            let first_child = target[0];
            self.level_orbit[path.len()] = target.iter().filter(|&&u| orb[u] == orb[first_child]).count();
        }
        None
    }

    fn leaf(&mut self, perm: Vec<usize>, path: &[usize]) -> Option<usize> {
        let cert = self.certificate(&perm);
        let leaf = Leaf {
            perm,
            cert,
            path: path.to_vec(),
        };
        let Some(first) = &self.first else {
            self.first = Some(leaf.clone());
            self.best = Some(leaf);
            return None;
        };
        let common = |other: &[usize]| other.iter().zip(path).take_while(|(a, b)| a == b).count();
        if cert == first.cert {
            let g = automorphism(&leaf.perm, &first.perm);
            let t = common(&first.path);
            self.gens.push(g);
            return Some(t);
        }
        let best = self.best.as_ref().expect("set with first");
        if cert > best.cert {
            self.best = Some(leaf);
        } else if cert == best.cert {
            let g = automorphism(&leaf.perm, &best.perm);
            let t = common(&best.path);
            self.gens.push(g);
            return Some(t);
        }
        None
    }
}

/// `perm[i] ↦ other[i]`.
fn automorphism(perm: &[usize], other: &[usize]) -> Vec<usize> {
    let mut g = vec![0; perm.len()];
    for (a, b) in perm.iter().zip(other) {
        g[*a] = *b;
    }
    g
}

/// Union-find roots of the orbits of the group generated by `gens`.
fn orbits<'a>(n: usize, gens: impl Iterator<Item = &'a Vec<usize>>) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for g in gens {
        for (v, &w) in g.iter().enumerate() {
            let (a, b) = (find(&mut parent, v), find(&mut parent, w));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}
