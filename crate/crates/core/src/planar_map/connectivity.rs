use crate::graph::AbstractGraph;

/// Connected, at least three vertices, no cut vertex.
pub fn is_two_connected(g: &AbstractGraph) -> bool {
    g.order() >= 3 && g.is_connected() && g.cut_vertices().is_empty()
}

/// At least four vertices and no vertex cut of size at most two.
///
/// Deletes each vertex in turn and looks for a cut vertex in what remains,
/// so the cost is O(V·(V+E)).
pub fn is_three_connected(g: &AbstractGraph) -> bool {
    if g.order() < 4 || !is_two_connected(g) {
        return false;
    }
    (0..g.order()).all(|v| {
        let rest = g.cut_vertices_avoiding(v);
        rest.is_empty() && connected_without(g, v)
    })
}

fn connected_without(g: &AbstractGraph, removed: usize) -> bool {
    let n = g.order();
    let start = if removed == 0 { 1 } else { 0 };
    let mut seen = vec![false; n];
    seen[removed] = true;
    seen[start] = true;
    let mut stack = vec![start];
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n - 1
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute force: delete every pair of vertices and test connectivity.
    fn three_connected_by_pairs(g: &AbstractGraph) -> bool {
        let n = g.order();
        if n < 4 || !g.is_connected() {
            return false;
        }
        for a in 0..n {
            for b in a..n {
                let keep: Vec<usize> = (0..n).filter(|&v| v != a && v != b).collect();
                if !g.induced(&keep).is_connected() {
                    return false;
                }
            }
        }
        true
    }

    fn cube() -> AbstractGraph {
        let mut e = Vec::new();
        for i in 0..4 {
            e.push((i, (i + 1) % 4));
            e.push((4 + i, 4 + (i + 1) % 4));
            e.push((i, i + 4));
        }
        AbstractGraph::from_edges(8, &e).unwrap()
    }

    #[test]
    fn small_cases() {
        assert!(is_three_connected(&AbstractGraph::complete(4)));
        assert!(!is_three_connected(&AbstractGraph::path(5)));
        assert!(!is_three_connected(&AbstractGraph::cycle(6)));
        assert!(is_three_connected(&cube()));
        assert!(is_three_connected(&AbstractGraph::complete_bipartite(3, 3)));
        assert!(!is_three_connected(&AbstractGraph::complete(3)));
    }

    #[test]
    fn cube_minus_edge() {
        let mut g = cube();
        g.remove_edge(0, 1);
        assert!(!three_connected_by_pairs(&g));
        assert!(!is_three_connected(&g));
    }

    #[test]
    fn agrees_with_pair_removal_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(4..9);
            let mut g = AbstractGraph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.55) {
                        g.add_edge(u, v);
                    }
                }
            }
            assert_eq!(is_three_connected(&g), three_connected_by_pairs(&g));
            assert_eq!(is_two_connected(&g), g.is_connected() && g.cut_vertices().is_empty());
        }
    }
}
