//! Planarity testing with embedding output (Demoucron, Malgrange and
//! Pertuiset path addition on each block).

use std::collections::{HashMap, HashSet};

use crate::graph::AbstractGraph;
use crate::planar_map::{build_map, PlanarMap};

/// A rotation system for a connected simple graph, or `None` if the graph is
/// disconnected or not planar.
pub fn planar_embed(g: &AbstractGraph) -> Option<PlanarMap> {
    let n = g.order();
    if n == 0 || !g.is_connected() {
        return None;
    }
    if n == 1 {
        return None;
    }
    if n >= 3 && g.size() > 3 * n - 6 {
        return None;
    }
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in blocks(g) {
        if block.len() == 1 {
            let (u, v) = block[0];
            rotation[u].push(v);
            rotation[v].push(u);
            continue;
        }
        for (v, rot) in embed_block(&block)? {
            rotation[v].extend(rot);
        }
    }
    build_map(&rotation).ok()
}

/// Whether every component of `g` is planar.
pub fn is_planar(g: &AbstractGraph) -> bool {
    g.components().iter().all(|comp| comp.len() <= 4 || planar_embed(&g.induced(comp)).is_some())
}

/// Edge sets of the blocks (maximal 2-connected subgraphs and bridges).
fn blocks(g: &AbstractGraph) -> Vec<Vec<(usize, usize)>> {
    let n = g.order();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut out = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut time = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent, next neighbour position)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (v, parent, ref mut pos)) = stack.last_mut() {
            if let Some(&w) = g.neighbors(v).get(*pos) {
                *pos += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(u, _, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == (u, v) {
                                break;
                            }
                        }
                        out.push(block);
                    }
                }
            }
        }
    }
    out
}

/// Embeds a 2-connected block; returns each vertex's rotation within it.
fn embed_block(edges: &[(usize, usize)]) -> Option<Vec<(usize, Vec<usize>)>> {
    let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
    for &(u, v) in edges {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    for ns in adj.values_mut() {
        ns.sort_unstable();
    }
    let key = |u: usize, v: usize| (u.min(v), u.max(v));

    let cycle = find_cycle(&adj)?;
    let mut placed_v: HashSet<usize> = cycle.iter().copied().collect();
    let mut placed_e: HashSet<(usize, usize)> = HashSet::new();
    for i in 0..cycle.len() {
        placed_e.insert(key(cycle[i], cycle[(i + 1) % cycle.len()]));
    }
    let mut rev = cycle.clone();
    rev.reverse();
    let mut faces: Vec<Vec<usize>> = vec![cycle, rev];

    while placed_e.len() < edges.len() {
        let fragments = fragments(&adj, &placed_v, &placed_e);
        let mut choice: Option<(usize, usize)> = None;
        for (i, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&f| frag.attachments.iter().all(|a| faces[f].contains(a)))
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((i, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((i, admissible[0]));
                    }
                }
            }
        }
        let (fi, face) = choice?;
        let path = fragment_path(&adj, &fragments[fi], &placed_v);
        for w in path.windows(2) {
            placed_e.insert(key(w[0], w[1]));
        }
        placed_v.extend(path.iter().copied());
        let (f1, f2) = split_face(&faces[face], &path);
        faces[face] = f1;
        faces.push(f2);
    }

    let mut succ: HashMap<usize, HashMap<usize, usize>> = HashMap::new();
    for f in &faces {
        let l = f.len();
        for i in 0..l {
            let (x, y, z) = (f[(i + l - 1) % l], f[i], f[(i + 1) % l]);
            succ.entry(y).or_default().insert(x, z);
        }
    }
    let mut out = Vec::new();
    for (&v, ns) in &adj {
        let s = &succ[&v];
        let mut rot = vec![ns[0]];
        while rot.len() < ns.len() {
            rot.push(s[rot.last().unwrap()]);
        }
        out.push((v, rot));
    }
    out.sort_unstable();
    Some(out)
}

fn find_cycle(adj: &HashMap<usize, Vec<usize>>) -> Option<Vec<usize>> {
    // BFS tree; any non-tree edge closes a cycle through the two tree paths
    let start = *adj.keys().min()?;
    let mut parent: HashMap<usize, usize> = HashMap::from([(start, start)]);
    let mut queue = std::collections::VecDeque::from([start]);
    let mut closing = None;
    while let Some(v) = queue.pop_front() {
        for &w in &adj[&v] {
            if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(w) {
                e.insert(v);
                queue.push_back(w);
            } else if closing.is_none() && parent[&v] != w && parent[&w] != v {
                closing = Some((v, w));
            }
        }
    }
    let (u, w) = closing?;
    let to_root = |mut x: usize| {
        let mut path = vec![x];
        while parent[&x] != x {
            x = parent[&x];
            path.push(x);
        }
        path
    };
    let (pu, pw) = (to_root(u), to_root(w));
    let lca = *pu.iter().find(|x| pw.contains(x))?;
    let mut cycle: Vec<usize> = pu.iter().copied().take_while(|&x| x != lca).collect();
    cycle.push(lca);
    let back: Vec<usize> = pw.iter().copied().take_while(|&x| x != lca).collect();
    cycle.extend(back.into_iter().rev());
    Some(cycle)
}

struct Fragment {
    attachments: Vec<usize>,
    /// Unplaced vertices of the fragment; empty for a single chord.
    interior: HashSet<usize>,
    chord: Option<(usize, usize)>,
}

fn fragments(
    adj: &HashMap<usize, Vec<usize>>,
    placed_v: &HashSet<usize>,
    placed_e: &HashSet<(usize, usize)>,
) -> Vec<Fragment> {
    let mut out = Vec::new();
    let mut verts: Vec<usize> = adj.keys().copied().collect();
    verts.sort_unstable();
    for &u in &verts {
        if !placed_v.contains(&u) {
            continue;
        }
        for &v in &adj[&u] {
            if u < v && placed_v.contains(&v) && !placed_e.contains(&(u, v)) {
                out.push(Fragment {
                    attachments: vec![u, v],
                    interior: HashSet::new(),
                    chord: Some((u, v)),
                });
            }
        }
    }
    let mut seen: HashSet<usize> = HashSet::new();
    for &s in &verts {
        if placed_v.contains(&s) || seen.contains(&s) {
            continue;
        }
        let mut interior = HashSet::new();
        let mut attachments = Vec::new();
        let mut stack = vec![s];
        seen.insert(s);
        while let Some(x) = stack.pop() {
            interior.insert(x);
            for &y in &adj[&x] {
                if placed_v.contains(&y) {
                    if !attachments.contains(&y) {
                        attachments.push(y);
                    }
                } else if seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        attachments.sort_unstable();
        out.push(Fragment { attachments, interior, chord: None });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(
    adj: &HashMap<usize, Vec<usize>>,
    frag: &Fragment,
    placed_v: &HashSet<usize>,
) -> Vec<usize> {
    if let Some((u, v)) = frag.chord {
        return vec![u, v];
    }
    let start = frag.attachments[0];
    let mut prev: HashMap<usize, usize> = HashMap::new();
    let mut queue = std::collections::VecDeque::new();
    for &x in &adj[&start] {
        if frag.interior.contains(&x) && !prev.contains_key(&x) {
            prev.insert(x, start);
            queue.push_back(x);
        }
    }
    while let Some(x) = queue.pop_front() {
        for &y in &adj[&x] {
            if placed_v.contains(&y) && y != start {
                let mut path = vec![y, x];
                let mut z = x;
                while prev[&z] != start {
                    z = prev[&z];
                    path.push(z);
                }
                path.push(start);
                path.reverse();
                return path;
            }
            if frag.interior.contains(&y) && !prev.contains_key(&y) {
                prev.insert(y, x);
                queue.push_back(y);
            }
        }
    }
    unreachable!("fragments of a 2-connected graph have two attachments")
}

/// Splits an oriented face by a path whose ends lie on it.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let l = face.len();
    let (u, w) = (path[0], *path.last().unwrap());
    let i = face.iter().position(|&x| x == u).unwrap();
    let j = face.iter().position(|&x| x == w).unwrap();
    let inner = &path[1..path.len() - 1];
    let mut f1 = Vec::new();
    let mut k = i;
    loop {
        f1.push(face[k]);
        if k == j {
            break;
        }
        k = (k + 1) % l;
    }
    f1.extend(inner.iter().rev());
    let mut f2 = Vec::new();
    let mut k = j;
    loop {
        f2.push(face[k]);
        if k == i {
            break;
        }
        k = (k + 1) % l;
    }
    f2.extend(inner.iter());
    (f1, f2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn face_multiset(m: &PlanarMap) -> Vec<Vec<usize>> {
        let mut fs: Vec<Vec<usize>> = m
            .faces()
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f
            })
            .collect();
        fs.sort();
        fs
    }

    #[test]
    fn k4_has_four_triangles() {
        let m = planar_embed(&AbstractGraph::complete(4)).unwrap();
        assert_eq!(m.face_sizes(), vec![3, 3, 3, 3]);
    }

    #[test]
    fn kuratowski_graphs_rejected() {
        assert!(planar_embed(&AbstractGraph::complete(5)).is_none());
        assert!(planar_embed(&AbstractGraph::complete_bipartite(3, 3)).is_none());
        assert!(!is_planar(&AbstractGraph::complete(6)));
    }

    #[test]
    fn petersen_is_not_planar() {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((i + 5, (i + 2) % 5 + 5));
        }
        let p = AbstractGraph::from_edges(10, &e).unwrap();
        assert!(planar_embed(&p).is_none());
        // nor is it after deleting a vertex
        assert!(!is_planar(&p.induced(&(1..10).collect::<Vec<_>>())));
    }

    #[test]
    fn trees_and_cut_vertices_embed() {
        assert!(planar_embed(&AbstractGraph::path(6)).is_some());
        let bowtie =
            AbstractGraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
                .unwrap();
        let m = planar_embed(&bowtie).unwrap();
        assert_eq!(m.num_faces(), 3);
    }

    #[test]
    fn polyhedral_faces_are_recovered() {
        use crate::planar_map::fixtures::{bipyramid, cube, prism};
        for m in [cube(), prism(5), bipyramid(6)] {
            let e = planar_embed(&m.underlying()).unwrap();
            assert_eq!(face_multiset(&e), face_multiset(&m));
        }
    }

    #[test]
    fn disconnected_graphs() {
        let g = AbstractGraph::complete(4).disjoint_union(&AbstractGraph::complete(4));
        assert!(planar_embed(&g).is_none());
        assert!(is_planar(&g));
        let h = AbstractGraph::complete(4).disjoint_union(&AbstractGraph::complete(5));
        assert!(!is_planar(&h));
    }
}
