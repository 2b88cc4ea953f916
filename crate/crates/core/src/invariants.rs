//! Exact graph invariants: matching, independence and domination numbers,
//! diameter and longest path length.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

pub const INDEPENDENCE_LIMIT: usize = 32;
pub const DOMINATION_LIMIT: usize = 24;
pub const LONGEST_PATH_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("{invariant} is limited to n <= {limit}, got n = {n}")]
    TooLarge {
        invariant: &'static str,
        limit: usize,
        n: usize,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn limit(invariant: &'static str, limit: usize, n: usize) -> Result<(), InvariantError> {
    if n > limit {
        Err(InvariantError::TooLarge { invariant, limit, n })
    } else {
        Ok(())
    }
}

/// Maximum matching by Edmonds' blossom algorithm. Returns `mate[v]`.
pub fn maximum_matching(g: &Graph) -> Vec<Option<usize>> {
    Blossom::new(g).run()
}

/// `ν(G)`.
pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).iter().filter(|m| m.is_some()).count() / 2
}

struct Blossom<'a> {
    g: &'a Graph,
    n: usize,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
}

const NONE: usize = usize::MAX;

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        Blossom {
            g,
            n,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            blossom: vec![false; n],
        }
    }

    fn run(mut self) -> Vec<Option<usize>> {
        // greedy start
        for u in 0..self.n {
            if self.mate[u] == NONE {
                if let Some(v) = self.g.neighbors(u).find(|&v| self.mate[v] == NONE) {
                    self.mate[u] = v;
                    self.mate[v] = u;
                }
            }
        }
        for root in 0..self.n {
            if self.mate[root] != NONE {
                continue;
            }
            let mut v = self.find_path(root);
            while v != NONE {
                let pv = self.parent[v];
                let ppv = self.mate[pv];
                self.mate[v] = pv;
                self.mate[pv] = v;
                v = ppv;
            }
        }
        self.mate.iter().map(|&m| (m != NONE).then_some(m)).collect()
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.n];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS for an augmenting path from `root`; returns its free endpoint.
    fn find_path(&mut self, root: usize) -> usize {
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let neighbors: Vec<usize> = self.g.neighbors(v).collect();
            for to in neighbors {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..self.n {
                        if self.blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return to;
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    queue.push_back(m);
                }
            }
        }
        NONE
    }
}

/// Diameter, or `None` when the graph is disconnected. Graphs with at most
/// one vertex have diameter 0.
pub fn diameter(g: &Graph) -> Option<usize> {
    let mut best = 0;
    for s in 0..g.order() {
        for d in g.bfs_distances(s) {
            best = best.max(d?);
        }
    }
    Some(best)
}

/// A shortest path realizing the diameter between the lexicographically
/// smallest pair of endpoints at maximum distance. Interior vertices are
/// also chosen smallest-first.
pub fn diametral_path(g: &Graph) -> Result<Vec<usize>, InvariantError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected.into());
    }
    let n = g.order();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut best = (0, 0, 0);
    for u in 0..n {
        let dist = g.bfs_distances(u);
        for (v, d) in dist.iter().enumerate().skip(u + 1) {
            let d = d.expect("connected");
            if d > best.0 {
                best = (d, u, v);
            }
        }
    }
    let (d, u, v) = best;
    let to_v = g.bfs_distances(v);
    let mut path = vec![u];
    let mut cur = u;
    for step in (0..d).rev() {
        cur = g
            .neighbors(cur)
            .find(|&w| to_v[w] == Some(step))
            .expect("a neighbor one step closer exists");
        path.push(cur);
    }
    Ok(path)
}

fn rows64(g: &Graph) -> Vec<u64> {
    (0..g.order()).map(|u| g.row64(u)).collect()
}

/// `α(G)` by branch and bound, `n <= 32`.
pub fn independence_number(g: &Graph) -> Result<usize, InvariantError> {
    limit("independence number", INDEPENDENCE_LIMIT, g.order())?;
    let rows = rows64(g);
    let all = (1u64 << g.order()) - 1;
    let mut best = 0;
    mis(&rows, all, 0, &mut best);
    Ok(best)
}

fn mis(rows: &[u64], cand: u64, size: usize, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + cand.count_ones() as usize <= *best {
        return;
    }
    // vertices with no neighbor among the candidates are always taken
    let mut free = 0u64;
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if rows[v] & cand == 0 {
            free |= 1 << v;
        }
    }
    if free != 0 {
        return mis(rows, cand & !free, size + free.count_ones() as usize, best);
    }
    // branch on a vertex of maximum degree among the candidates
    let mut v = 0;
    let mut deg = 0;
    let mut rest = cand;
    while rest != 0 {
        let w = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let dw = (rows[w] & cand).count_ones();
        if dw > deg {
            deg = dw;
            v = w;
        }
    }
    mis(rows, cand & !(rows[v] | 1 << v), size + 1, best);
    mis(rows, cand & !(1 << v), size, best);
}

/// `γ(G)` by iterative deepening over closed neighborhoods, `n <= 24`.
pub fn domination_number(g: &Graph) -> Result<usize, InvariantError> {
    let n = g.order();
    limit("domination number", DOMINATION_LIMIT, n)?;
    if n == 0 {
        return Ok(0);
    }
    let closed: Vec<u64> = (0..n).map(|u| g.row64(u) | 1 << u).collect();
    let all = (1u64 << n) - 1;
    Ok((1..=n)
        .find(|&k| dominates_within(&closed, all, 0, k))
        .expect("the whole vertex set dominates"))
}

fn dominates_within(closed: &[u64], all: u64, covered: u64, k: usize) -> bool {
    if covered == all {
        return true;
    }
    if k == 0 {
        return false;
    }
    // the first undominated vertex needs some member of its closed neighborhood
    let u = (!covered & all).trailing_zeros() as usize;
    let mut choices = closed[u];
    while choices != 0 {
        let w = choices.trailing_zeros() as usize;
        choices &= choices - 1;
        if dominates_within(closed, all, covered | closed[w], k - 1) {
            return true;
        }
    }
    false
}

/// Number of edges of a longest simple path, by dynamic programming over
/// vertex subsets, `n <= 20`.
pub fn longest_path_length(g: &Graph) -> Result<usize, InvariantError> {
    let n = g.order();
    limit("longest path length", LONGEST_PATH_LIMIT, n)?;
    if n == 0 {
        return Ok(0);
    }
    let rows: Vec<u32> = (0..n).map(|u| g.row64(u) as u32).collect();
    // ends[mask]: vertices at which some path covering exactly `mask` ends
    let mut ends = vec![0u32; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    let mut best = 0;
    for mask in 1..ends.len() {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        best = best.max(mask.count_ones() as usize - 1);
        let mut rest = e;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut next = rows[v] & !(mask as u32);
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                ends[mask | 1 << w] |= 1 << w;
            }
        }
        if best == n - 1 {
            break;
        }
    }
    Ok(best)
}

/// All invariants referenced by the theorem checkers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantBundle {
    pub nu: usize,
    pub alpha: usize,
    pub gamma_dom: usize,
    #[serde(with = "infinite")]
    pub diam: Option<usize>,
    pub longest_path_len: usize,
    pub delta: usize,
    #[serde(rename = "Delta")]
    pub max_degree: usize,
}

impl InvariantBundle {
    /// Requires `n <= 20`, the tightest of the exact-search limits.
    pub fn compute(g: &Graph) -> Result<Self, InvariantError> {
        Ok(InvariantBundle {
            nu: matching_number(g),
            alpha: independence_number(g)?,
            gamma_dom: domination_number(g)?,
            diam: diameter(g),
            longest_path_len: longest_path_length(g)?,
            delta: g.min_degree(),
            max_degree: g.max_degree(),
        })
    }
}

/// `Option<usize>` as a number, or the string `"inf"` for `None`.
pub mod infinite {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Finite(usize),
        Text(String),
    }

    pub fn serialize<S: Serializer>(v: &Option<usize>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(d) => s.serialize_u64(*d as u64),
            None => s.serialize_str("inf"),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<usize>, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Finite(v) => Ok(Some(v)),
            Repr::Text(t) if t == "inf" => Ok(None),
            Repr::Text(t) => Err(serde::de::Error::custom(format!("expected a count or \"inf\", got {t:?}"))),
        }
    }
}
