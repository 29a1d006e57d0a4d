//! Canonical labelling by colour refinement and individualisation, with
//! pruning by the automorphisms met along the way.

use crate::graph::AbstractGraph;

/// A canonical relabelling of a (vertex-coloured) graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalLabeling {
    /// `position[v]` is the canonical position of vertex `v`.
    pub position: Vec<usize>,
    /// Equal for two graphs exactly when they are isomorphic (respecting colours).
    pub certificate: Vec<u8>,
}

impl CanonicalLabeling {
    /// The graph relabelled into canonical order.
    pub fn apply(&self, g: &AbstractGraph) -> AbstractGraph {
        g.permuted(&self.position)
    }
}

/// Byte string that is equal for two graphs iff they are isomorphic.
pub fn canonical_form(g: &AbstractGraph) -> Vec<u8> {
    canonical_labeling(g, None).certificate
}

/// `g` relabelled into canonical vertex order.
pub fn canonical_graph(g: &AbstractGraph) -> AbstractGraph {
    canonical_labeling(g, None).apply(g)
}

/// An adjacency-preserving bijection `g -> h` (as `map[v_g] = v_h`) if one exists.
pub fn isomorphic(g: &AbstractGraph, h: &AbstractGraph) -> Option<Vec<usize>> {
    isomorphic_colored(g, None, h, None)
}

/// Like [`isomorphic`], but the bijection must also preserve vertex colours.
pub fn isomorphic_colored(
    g: &AbstractGraph,
    g_colors: Option<&[u64]>,
    h: &AbstractGraph,
    h_colors: Option<&[u64]>,
) -> Option<Vec<usize>> {
    if g.order() != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence()
    {
        return None;
    }
    let cg = canonical_labeling(g, g_colors);
    let ch = canonical_labeling(h, h_colors);
    if cg.certificate != ch.certificate {
        return None;
    }
    let mut at = vec![0; h.order()];
    for (w, &p) in ch.position.iter().enumerate() {
        at[p] = w;
    }
    let map: Vec<usize> = cg.position.iter().map(|&p| at[p]).collect();
    debug_assert!(g.edges().all(|(u, v)| h.has_edge(map[u], map[v])));
    Some(map)
}

/// Canonical labelling of `g`, optionally respecting vertex colours.
pub fn canonical_labeling(g: &AbstractGraph, colors: Option<&[u64]>) -> CanonicalLabeling {
    let n = g.order();
    let input: Vec<u64> = match colors {
        Some(c) => {
            assert_eq!(c.len(), n, "one colour per vertex");
            c.to_vec()
        }
        None => vec![0; n],
    };
    let mut cells = rank(&input);
    refine(g, &mut cells);
    let mut search = Search { g, input: &input, best: None, autos: Vec::new() };
    let mut prefix = Vec::new();
    search.descend(&cells, &mut prefix);
    let (certificate, position) = search.best.expect("search visits at least one leaf");
    CanonicalLabeling { position, certificate }
}

fn rank<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter().map(|k| sorted.binary_search(k).unwrap()).collect()
}

fn cell_count(cells: &[usize]) -> usize {
    cells.iter().max().map_or(0, |&m| m + 1)
}

/// Refines `cells` to the coarsest equitable partition finer than it. Cell
/// numbers depend only on the isomorphism type, never on vertex ids.
fn refine(g: &AbstractGraph, cells: &mut Vec<usize>) {
    let mut count = cell_count(cells);
    loop {
        let keys: Vec<(usize, Vec<usize>)> = (0..g.order())
            .map(|v| {
                let mut ns: Vec<usize> = g.neighbors(v).iter().map(|&w| cells[w]).collect();
                ns.sort_unstable();
                (cells[v], ns)
            })
            .collect();
        let next = rank(&keys);
        let next_count = cell_count(&next);
        *cells = next;
        if next_count == count {
            return;
        }
        count = next_count;
    }
}

struct Search<'a> {
    g: &'a AbstractGraph,
    input: &'a [u64],
    best: Option<(Vec<u8>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, cells: &[usize], prefix: &mut Vec<usize>) {
        let n = self.g.order();
        if cell_count(cells) == n {
            self.leaf(cells);
            return;
        }
        // first smallest non-singleton cell
        let mut size = vec![0usize; cell_count(cells)];
        for &c in cells {
            size[c] += 1;
        }
        let target =
            (0..size.len()).filter(|&c| size[c] > 1).min_by_key(|&c| (size[c], c)).unwrap();
        let members: Vec<usize> = (0..n).filter(|&v| cells[v] == target).collect();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &members {
            if !explored.is_empty() && self.equivalent_to_explored(prefix, v, &explored) {
                continue;
            }
            let keys: Vec<(usize, bool)> =
                (0..n).map(|u| (cells[u], cells[u] == target && u != v)).collect();
            let mut child = rank(&keys);
            refine(self.g, &mut child);
            prefix.push(v);
            self.descend(&child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    /// Whether some automorphism fixing `prefix` pointwise maps `v` into `explored`.
    fn equivalent_to_explored(&self, prefix: &[usize], v: usize, explored: &[usize]) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.autos {
            if prefix.iter().any(|&x| gamma[x] != x) {
                continue;
            }
            any = true;
            for (x, &gx) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, gx));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        explored.iter().any(|&e| find(&mut parent, e) == root)
    }

    fn leaf(&mut self, cells: &[usize]) {
        let cert = certificate(self.g, self.input, cells);
        match &self.best {
            None => self.best = Some((cert, cells.to_vec())),
            Some((best, pos)) => match cert.cmp(best) {
                std::cmp::Ordering::Less => self.best = Some((cert, cells.to_vec())),
                std::cmp::Ordering::Equal => {
                    let mut at = vec![0; pos.len()];
                    for (w, &p) in pos.iter().enumerate() {
                        at[p] = w;
                    }
                    let gamma: Vec<usize> = cells.iter().map(|&p| at[p]).collect();
                    if gamma.iter().enumerate().any(|(x, &y)| x != y) {
                        self.autos.push(gamma);
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }
}

fn certificate(g: &AbstractGraph, input: &[u64], position: &[usize]) -> Vec<u8> {
    let n = g.order();
    let mut at = vec![0; n];
    for (v, &p) in position.iter().enumerate() {
        at[p] = v;
    }
    let mut out = Vec::with_capacity(4 + 8 * n + n * n / 16 + 1);
    out.extend_from_slice(&(n as u32).to_be_bytes());
    for &v in &at {
        out.extend_from_slice(&input[v].to_be_bytes());
    }
    let mut byte = 0u8;
    let mut bits = 0;
    for i in 0..n {
        for j in i + 1..n {
            byte = (byte << 1) | u8::from(g.has_edge(at[i], at[j]));
            bits += 1;
            if bits == 8 {
                out.push(byte);
                byte = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push(byte << (8 - bits));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn petersen() -> AbstractGraph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((i + 5, (i + 2) % 5 + 5));
        }
        AbstractGraph::from_edges(10, &e).unwrap()
    }

    fn samples() -> Vec<AbstractGraph> {
        vec![
            AbstractGraph::new(0),
            AbstractGraph::new(5),
            AbstractGraph::path(7),
            AbstractGraph::cycle(9),
            AbstractGraph::complete(6),
            AbstractGraph::complete_bipartite(3, 4),
            petersen(),
            AbstractGraph::path(3).disjoint_union(&AbstractGraph::complete(3)),
        ]
    }

    #[test]
    fn labelled_triangles_share_a_form() {
        let forms: Vec<_> =
            [[(0, 1), (1, 2), (0, 2)], [(1, 0), (2, 0), (2, 1)], [(0, 2), (2, 1), (1, 0)]]
                .iter()
                .map(|e| canonical_form(&AbstractGraph::from_edges(3, e).unwrap()))
                .collect();
        assert!(forms.windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn invariant_under_relabelling() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for g in samples() {
            let form = canonical_form(&g);
            for _ in 0..25 {
                let mut perm: Vec<usize> = (0..g.order()).collect();
                perm.shuffle(&mut rng);
                let h = g.permuted(&perm);
                assert_eq!(canonical_form(&h), form);
                let map = isomorphic(&g, &h).unwrap();
                assert!(g.edges().all(|(u, v)| h.has_edge(map[u], map[v])));
            }
        }
    }

    #[test]
    fn distinguishes_equal_degree_sequences() {
        // 2,2,2,1,1: the path and the triangle plus an edge
        let p5 = AbstractGraph::path(5);
        let k3k2 = AbstractGraph::complete(3).disjoint_union(&AbstractGraph::complete(2));
        assert_eq!(p5.degree_sequence(), k3k2.degree_sequence());
        assert!(isomorphic(&p5, &k3k2).is_none());
        assert_ne!(canonical_form(&p5), canonical_form(&k3k2));
        // two 3-regular graphs on 6 vertices
        let prism = AbstractGraph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        assert!(isomorphic(&prism, &AbstractGraph::complete_bipartite(3, 3)).is_none());
    }

    #[test]
    fn colours_are_respected() {
        let p3 = AbstractGraph::path(3);
        let a = [1, 0, 0];
        let b = [0, 0, 1];
        let c = [0, 1, 0];
        assert!(isomorphic_colored(&p3, Some(&a), &p3, Some(&b)).is_some());
        assert!(isomorphic_colored(&p3, Some(&a), &p3, Some(&c)).is_none());
    }

    #[test]
    fn canonical_graph_is_a_fixed_point() {
        for g in samples() {
            let c = canonical_graph(&g);
            assert_eq!(canonical_graph(&c).to_graph6(), c.to_graph6());
        }
    }
}
