//! Unembedded simple graphs and degree sequences.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A simple undirected graph on the vertices `0..order`.
///
/// Neighbour lists are kept sorted, so two graphs with the same edge set
/// compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AbstractGraph {
    adj: Vec<Vec<usize>>,
}

impl AbstractGraph {
    pub fn new(order: usize) -> Self {
        AbstractGraph { adj: vec![Vec::new(); order] }
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = AbstractGraph::new(order);
        for &(u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::InvalidGraph(format!("edge {u}-{v} out of range")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at {u}")));
            }
            if !g.add_edge(u, v) {
                return Err(Error::InvalidGraph(format!("repeated edge {u}-{v}")));
            }
        }
        Ok(g)
    }

    pub fn path(order: usize) -> Self {
        let edges: Vec<_> = (1..order).map(|i| (i - 1, i)).collect();
        AbstractGraph::from_edges(order, &edges).expect("path is simple")
    }

    pub fn cycle(order: usize) -> Self {
        assert!(order >= 3, "a cycle needs at least three vertices");
        let mut g = AbstractGraph::path(order);
        g.add_edge(order - 1, 0);
        g
    }

    pub fn complete(order: usize) -> Self {
        let mut g = AbstractGraph::new(order);
        for u in 0..order {
            for v in u + 1..order {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn complete_bipartite(left: usize, right: usize) -> Self {
        let mut g = AbstractGraph::new(left + right);
        for u in 0..left {
            for v in left..left + right {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Adds the edge `uv`; returns `false` if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v, "self-loops are not allowed");
        match self.adj[u].binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                true
            }
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        match self.adj[u].binary_search(&v) {
            Ok(pos) => {
                self.adj[u].remove(pos);
                let pos = self.adj[v].binary_search(&u).expect("symmetric adjacency");
                self.adj[v].remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::new(self.degrees())
    }

    /// The subgraph induced by `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> AbstractGraph {
        let mut pos = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut h = AbstractGraph::new(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            h.adj[i] = self.adj[v]
                .iter()
                .filter_map(|&w| (pos[w] != usize::MAX).then_some(pos[w]))
                .collect();
            h.adj[i].sort_unstable();
        }
        h
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> AbstractGraph {
        assert_eq!(perm.len(), self.order());
        let mut h = AbstractGraph::new(self.order());
        for (u, ns) in self.adj.iter().enumerate() {
            h.adj[perm[u]] = ns.iter().map(|&v| perm[v]).collect();
            h.adj[perm[u]].sort_unstable();
        }
        h
    }

    pub fn disjoint_union(&self, other: &AbstractGraph) -> AbstractGraph {
        let shift = self.order();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|ns| ns.iter().map(|&v| v + shift).collect()));
        AbstractGraph { adj }
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.components().len() == 1
    }

    /// Articulation points, by the usual low-link depth-first search.
    pub fn cut_vertices(&self) -> Vec<usize> {
        self.cut_vertices_avoiding(usize::MAX)
    }

    /// Cut vertices of the graph with `removed` deleted (`usize::MAX` for none).
    pub(crate) fn cut_vertices_avoiding(&self, removed: usize) -> Vec<usize> {
        let n = self.order();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut is_cut = vec![false; n];
        let mut timer = 0;
        // Iterative DFS frames: (vertex, parent, next neighbour position).
        for root in 0..n {
            if root == removed || disc[root] != usize::MAX {
                continue;
            }
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            let mut root_children = 0;
            while let Some(top) = stack.last_mut() {
                let (u, parent, pos) = *top;
                if pos < self.adj[u].len() {
                    top.2 += 1;
                    let w = self.adj[u][pos];
                    if w == removed || w == parent {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        if u == root {
                            root_children += 1;
                        }
                        stack.push((w, u, 0));
                    } else {
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[u]);
                        if parent != root && low[u] >= disc[parent] {
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

    /// Encodes the graph in graph6 format (no trailing newline).
    pub fn to_graph6(&self) -> String {
        let n = self.order();
        let mut out = Vec::new();
        if n < 63 {
            out.push(n as u8 + 63);
        } else if n < 258_048 {
            out.push(126);
            for shift in [12, 6, 0] {
                out.push(((n >> shift) & 63) as u8 + 63);
            }
        } else {
            out.push(126);
            out.push(126);
            for shift in [30, 24, 18, 12, 6, 0] {
                out.push(((n >> shift) & 63) as u8 + 63);
            }
        }
        let mut acc = 0u8;
        let mut nbits = 0;
        for j in 1..n {
            for i in 0..j {
                acc = (acc << 1) | u8::from(self.has_edge(i, j));
                nbits += 1;
                if nbits == 6 {
                    out.push(acc + 63);
                    acc = 0;
                    nbits = 0;
                }
            }
        }
        if nbits > 0 {
            out.push((acc << (6 - nbits)) + 63);
        }
        String::from_utf8(out).expect("graph6 is printable ASCII")
    }

    pub fn from_graph6(text: &str) -> Result<Self> {
        let bytes = text.trim_end().as_bytes();
        let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
        if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
            return Err(Error::Parse("graph6 byte out of range".into()));
        }
        let take = |range: std::ops::Range<usize>| -> Result<usize> {
            let chunk =
                bytes.get(range).ok_or_else(|| Error::Parse("truncated graph6 header".into()))?;
            Ok(chunk.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
        };
        let (n, start) = match bytes.first() {
            None => return Err(Error::Parse("empty graph6 string".into())),
            Some(126) if bytes.get(1) == Some(&126) => (take(2..8)?, 8),
            Some(126) => (take(1..4)?, 4),
            Some(&b) => ((b - 63) as usize, 1),
        };
        let body = &bytes[start..];
        let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
        if body.len() != needed {
            return Err(Error::Parse(format!(
                "graph6 body has {} bytes, expected {needed}",
                body.len()
            )));
        }
        let mut g = AbstractGraph::new(n);
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                let byte = body[k / 6] - 63;
                if byte >> (5 - k % 6) & 1 == 1 {
                    g.add_edge(i, j);
                }
                k += 1;
            }
        }
        Ok(g)
    }

    /// Graphviz rendering with vertices and edges in index order.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("graph {name} {{\n");
        for v in 0..self.order() {
            s.push_str(&format!("  {v};\n"));
        }
        for (u, v) in self.edges() {
            s.push_str(&format!("  {u} -- {v};\n"));
        }
        s.push_str("}\n");
        s
    }
}

/// A degree multiset, stored non-increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn new(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(degrees)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// Multiplicity of each value, largest value first.
    pub fn counts(&self) -> Vec<(usize, usize)> {
        let mut m = BTreeMap::new();
        for &d in &self.0 {
            *m.entry(d).or_insert(0) += 1;
        }
        m.into_iter().rev().collect()
    }

    /// Handshaking parity plus the polyhedral necessary conditions.
    pub fn could_be_polyhedral(&self) -> bool {
        self.sum().is_multiple_of(2) && self.len() >= 4 && self.0.last().is_some_and(|&d| d >= 3)
    }

    /// Erdős–Gallai test.
    pub fn is_graphical(&self) -> bool {
        is_graphical(&self.0)
    }
}

impl fmt::Display for DegreeSequence {
    /// Writes `6,6,3^8`: runs of three or more use exponent notation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (value, count) in self.counts() {
            if count >= 3 {
                parts.push(format!("{value}^{count}"));
            } else {
                parts.extend(std::iter::repeat_n(value.to_string(), count));
            }
        }
        write!(f, "{}", parts.join(","))
    }
}

impl std::str::FromStr for DegreeSequence {
    type Err = Error;

    /// Accepts comma-separated entries, each either `d` or `d^k`.
    fn from_str(s: &str) -> Result<Self> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (value, count) = match part.split_once('^') {
                Some((v, k)) => (v.trim(), k.trim()),
                None => (part, "1"),
            };
            let value: usize =
                value.parse().map_err(|_| Error::Parse(format!("bad degree `{part}`")))?;
            let count: usize =
                count.parse().map_err(|_| Error::Parse(format!("bad multiplicity `{part}`")))?;
            out.extend(std::iter::repeat_n(value, count));
        }
        Ok(DegreeSequence::new(out))
    }
}

/// Erdős–Gallai: whether a sequence of non-negative integers is the degree
/// sequence of some simple graph. The input need not be sorted.
pub fn is_graphical(degrees: &[usize]) -> bool {
    let mut d: Vec<usize> = degrees.to_vec();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let n = d.len();
    if d.iter().sum::<usize>() % 2 == 1 {
        return false;
    }
    if d.first().is_some_and(|&x| x >= n) {
        return false;
    }
    let mut lhs = 0;
    for k in 1..=n {
        lhs += d[k - 1];
        let rhs: usize = k * (k - 1) + d[k..].iter().map(|&x| x.min(k)).sum::<usize>();
        if lhs > rhs {
            return false;
        }
    }
    true
}
