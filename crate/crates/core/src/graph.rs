//! Finite simple graphs and their independence combinatorics.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// A finite simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

/// Sorted, duplicate-free list of vertex labels.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(Vec<usize>);

/// Length of a shortest cycle, or `Infinite` for forests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtendedGirth {
    Finite(usize),
    Infinite,
}

/// Graph families understood by [`Graph::generate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    /// The planar girth-4 family `G_n` on `3n - 1` vertices.
    PaperGn,
}

/// An induced subgraph together with the original label of each new vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    /// `labels[i]` is the host label of vertex `i`; strictly increasing.
    pub labels: Vec<usize>,
}

impl VertexSet {
    pub fn new(mut labels: Vec<usize>) -> Self {
        labels.sort_unstable();
        labels.dedup();
        VertexSet(labels)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        VertexSet::new(v)
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(v: [usize; N]) -> Self {
        VertexSet::new(v.to_vec())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl ExtendedGirth {
    pub fn at_least(self, k: usize) -> bool {
        match self {
            ExtendedGirth::Finite(g) => g >= k,
            ExtendedGirth::Infinite => true,
        }
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            ExtendedGirth::Finite(g) => Some(g),
            ExtendedGirth::Infinite => None,
        }
    }
}

impl fmt::Display for ExtendedGirth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedGirth::Finite(g) => write!(f, "{g}"),
            ExtendedGirth::Infinite => f.write_str("inf"),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list; repeated edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for nb in &mut adj {
            nb.sort_unstable();
            nb.dedup();
        }
        Ok(Graph { n, adj })
    }

    pub fn generate(family: Family, n: usize) -> Result<Self> {
        let too_small = |name, min| Error::FamilyTooSmall {
            family: name,
            min,
            n,
        };
        let edges: Vec<(usize, usize)> = match family {
            Family::Path => {
                if n < 1 {
                    return Err(too_small("path", 1));
                }
                (1..n).map(|i| (i - 1, i)).collect()
            }
            Family::Cycle => {
                if n < 3 {
                    return Err(too_small("cycle", 3));
                }
                (0..n).map(|i| (i, (i + 1) % n)).collect()
            }
            Family::Complete => {
                if n < 1 {
                    return Err(too_small("complete", 1));
                }
                (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .collect()
            }
            Family::PaperGn => {
                if n < 3 {
                    return Err(too_small("paper-gn", 3));
                }
                // 1-based x_i labels, shifted to 0-based at the end.
                let mut e = vec![(1, 2)];
                for k in 1..n {
                    e.extend([
                        (3 * k - 1, 3 * k),
                        (3 * k, 3 * k + 1),
                        (3 * k + 1, 3 * k + 2),
                        (3 * k + 2, 3 * k - 2),
                    ]);
                }
                for l in 2..n {
                    e.push((3 * l - 3, 3 * l));
                }
                return Graph::from_edge_list(
                    3 * n - 1,
                    &e.into_iter()
                        .map(|(a, b)| (a - 1, b - 1))
                        .collect::<Vec<_>>(),
                );
            }
        };
        Graph::from_edge_list(n, &edges)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nb) in self.adj.iter().enumerate() {
            out.extend(nb.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// `self` followed by `other` with labels shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|nb| nb.iter().map(|&v| v + shift).collect()),
        );
        Graph {
            n: self.n + other.n,
            adj,
        }
    }

    pub fn girth(&self) -> ExtendedGirth {
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            ExtendedGirth::Infinite
        } else {
            ExtendedGirth::Finite(best)
        }
    }

    pub fn is_triangle_free(&self) -> bool {
        for (u, v) in self.edges() {
            // sorted-merge intersection of the two neighborhoods
            let (a, b) = (&self.adj[u], &self.adj[v]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => return false,
                }
            }
        }
        true
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            out.push(VertexSet::new(comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn has_isolated_vertices(&self) -> bool {
        self.adj.iter().any(Vec::is_empty)
    }

    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Subgraph> {
        for v in s.iter() {
            self.check_vertex(v)?;
        }
        let labels = s.as_slice().to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in labels.iter().enumerate() {
            index[v] = i;
        }
        let adj = labels
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| index[w] != usize::MAX)
                    .map(|&w| index[w])
                    .collect()
            })
            .collect();
        Ok(Subgraph {
            graph: Graph {
                n: labels.len(),
                adj,
            },
            labels,
        })
    }

    /// `G \ U`: the subgraph induced on the complement of `u`.
    pub fn remove_vertices(&self, u: &VertexSet) -> Result<Subgraph> {
        for v in u.iter() {
            self.check_vertex(v)?;
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| !u.contains(v)).collect();
        self.induced_subgraph(&VertexSet(keep))
    }

    pub fn remove_vertex(&self, x: usize) -> Result<Subgraph> {
        self.remove_vertices(&VertexSet(vec![x]))
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[u].retain(|&w| w != v);
        g.adj[v].retain(|&w| w != u);
        Ok(g)
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter()
            .all(|u| u < self.n && self.adj[u].iter().all(|&w| !s.contains(w)))
    }

    /// Closed neighborhood `S ∪ N(S)`.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out: Vec<usize> = s.as_slice().to_vec();
        for u in s.iter() {
            out.extend_from_slice(&self.adj[u]);
        }
        VertexSet::new(out)
    }

    /// The localization `G_S = G \ (S ∪ N(S))` at an independent set.
    pub fn localize(&self, s: &VertexSet) -> Result<Subgraph> {
        for v in s.iter() {
            self.check_vertex(v)?;
        }
        if !self.is_independent(s) {
            return Err(Error::NotIndependent);
        }
        self.remove_vertices(&self.closed_neighborhood(s))
    }

    /// `G_ab = G \ (N(a) ∪ N(b))` for an edge `ab`.
    pub fn edge_localize(&self, a: usize, b: usize) -> Result<Subgraph> {
        if !self.has_edge(a, b) {
            return Err(Error::NotAnEdge(a, b));
        }
        let mut drop = self.adj[a].clone();
        drop.extend_from_slice(&self.adj[b]);
        self.remove_vertices(&VertexSet::new(drop))
    }

    /// All inclusion-maximal independent sets in lexicographic order.
    ///
    /// The graph on zero vertices has exactly one, the empty set.
    pub fn maximal_independent_sets(&self) -> Vec<VertexSet> {
        let words = self.n.div_ceil(64).max(1);
        // non-neighbors of v other than v itself
        let compat: Vec<Bits> = (0..self.n)
            .map(|v| {
                let mut b = Bits::full(self.n, words);
                b.clear(v);
                for &w in &self.adj[v] {
                    b.clear(w);
                }
                b
            })
            .collect();
        let mut out = Vec::new();
        let mut current = Vec::new();
        bron_kerbosch(
            &compat,
            &mut current,
            Bits::full(self.n, words),
            Bits::zero(words),
            &mut out,
        );
        let mut sets: Vec<VertexSet> = out.into_iter().map(VertexSet::new).collect();
        sets.sort();
        sets
    }

    pub fn independence_number(&self) -> usize {
        self.maximal_independent_sets()
            .iter()
            .map(VertexSet::len)
            .max()
            .unwrap_or(0)
    }

    pub fn is_well_covered(&self) -> bool {
        let sets = self.maximal_independent_sets();
        sets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Well-covered with constant size, if well-covered.
    fn well_covered_alpha(&self) -> Option<usize> {
        let sets = self.maximal_independent_sets();
        let k = sets[0].len();
        sets.iter().all(|s| s.len() == k).then_some(k)
    }

    /// Membership in `W2`: well-covered, and every single-vertex deletion
    /// is well-covered with the same independence number.
    ///
    /// A graph with an isolated vertex is never in `W2` (deleting it drops
    /// the independence number); in particular `K1` is not.
    pub fn is_in_w2(&self) -> bool {
        let Some(alpha) = self.well_covered_alpha() else {
            return false;
        };
        (0..self.n).all(|x| {
            let h = self.remove_vertex(x).expect("vertex in range").graph;
            h.well_covered_alpha() == Some(alpha)
        })
    }

    /// Every edge is α-critical: deleting it raises the independence number.
    pub fn is_alpha_critical(&self) -> bool {
        let alpha = self.independence_number();
        self.edges().into_iter().all(|(u, v)| {
            self.delete_edge(u, v)
                .expect("listed edge")
                .independence_number()
                > alpha
        })
    }

    /// Parses the "n m" header followed by `m` lines of "u v".
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let bad = |m: String| Error::EdgeList(m);
        let mut lines = text
            .lines()
            .map(str::trim)
            .enumerate()
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (_, header) = lines.next().ok_or_else(|| bad("missing header".into()))?;
        let nums: Vec<&str> = header.split_whitespace().collect();
        let [n, m] = nums[..] else {
            return Err(bad(format!("header must be \"n m\", got {header:?}")));
        };
        let n: usize = n
            .parse()
            .map_err(|_| bad(format!("bad vertex count {n:?}")))?;
        let m: usize = m
            .parse()
            .map_err(|_| bad(format!("bad edge count {m:?}")))?;
        let mut edges = Vec::with_capacity(m);
        for (lineno, line) in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            let parsed = match parts[..] {
                [u, v] => u.parse::<usize>().ok().zip(v.parse::<usize>().ok()),
                _ => None,
            };
            let e = parsed.ok_or_else(|| {
                bad(format!(
                    "line {}: expected \"u v\", got {line:?}",
                    lineno + 1
                ))
            })?;
            edges.push(e);
        }
        if edges.len() != m {
            return Err(bad(format!(
                "header announces {m} edges, found {}",
                edges.len()
            )));
        }
        Graph::from_edge_list(n, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut s = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

/// Fixed-width vertex bitset for the enumeration below.
#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn zero(words: usize) -> Self {
        Bits(vec![0; words])
    }

    fn full(n: usize, words: usize) -> Self {
        let mut b = Bits::zero(words);
        for v in 0..n {
            b.0[v / 64] |= 1 << (v % 64);
        }
        b
    }

    fn clear(&mut self, v: usize) {
        self.0[v / 64] &= !(1 << (v % 64));
    }

    fn set(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }

    fn and_not(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & !b).collect())
    }

    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }

    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + t)
            })
        })
    }
}

/// Maximal cliques of the compatibility graph (complement of `G`), with
/// Tomita pivoting.
fn bron_kerbosch(
    compat: &[Bits],
    current: &mut Vec<usize>,
    mut cand: Bits,
    mut excluded: Bits,
    out: &mut Vec<Vec<usize>>,
) {
    if cand.is_empty() {
        if excluded.is_empty() {
            out.push(current.clone());
        }
        return;
    }
    let pivot = cand
        .ones()
        .chain(excluded.ones())
        .max_by_key(|&u| (cand.and(&compat[u]).count(), std::cmp::Reverse(u)))
        .expect("nonempty");
    let branch: Vec<usize> = cand.and_not(&compat[pivot]).ones().collect();
    for v in branch {
        current.push(v);
        bron_kerbosch(
            compat,
            current,
            cand.and(&compat[v]),
            excluded.and(&compat[v]),
            out,
        );
        current.pop();
        cand.clear(v);
        excluded.set(v);
    }
}
