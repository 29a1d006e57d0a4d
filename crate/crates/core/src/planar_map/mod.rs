//! Embedded planar graphs as combinatorial maps.
//!
//! A map is a set of darts (half-edges) with two permutations: the edge
//! pairing `alpha`, which is implicit (dart `d` is paired with `d ^ 1`), and
//! the vertex rotation `sigma`, which sends a dart to the next dart
//! counter-clockwise around its tail. Faces are the orbits of
//! `phi = sigma ∘ alpha`.

mod connectivity;
mod radial;
mod serial;

pub use connectivity::{is_three_connected, is_two_connected};
pub(crate) use radial::Surgery;
pub use radial::{
    every_four_cycle_bounds_face, primal_from_radial, radial, Cursor, LabeledRadial, Side,
};
pub use serial::{JsonMap, JsonVertex};

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{AbstractGraph, DegreeSequence};

#[derive(Clone, Debug)]
pub struct PlanarMap {
    tail: Vec<usize>,
    sigma: Vec<usize>,
    sigma_inv: Vec<usize>,
    vertex_dart: Vec<usize>,
    labels: Option<Vec<String>>,
    edits: u64,
}

/// Builds a map from per-vertex cyclic neighbour lists (counter-clockwise).
///
/// For parallel edges the k-th occurrence of `v` in the list of `u` is paired
/// with the k-th occurrence of `u` in the list of `v`; loops pair consecutive
/// occurrences.
pub fn build_map(rotations: &[Vec<usize>]) -> Result<PlanarMap> {
    let n = rotations.len();
    let mut dart_at: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut tail = Vec::new();
    let mut pending: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    let mut seen: HashMap<(usize, usize), usize> = HashMap::new();

    for (u, rot) in rotations.iter().enumerate() {
        if rot.is_empty() {
            return Err(Error::InconsistentRotation(format!("vertex {u} has no neighbours")));
        }
        let mut ids = Vec::with_capacity(rot.len());
        for &v in rot {
            if v >= n {
                return Err(Error::InconsistentRotation(format!("{u} lists unknown vertex {v}")));
            }
            let occurrence = {
                let c = seen.entry((u, v)).or_insert(0);
                *c += 1;
                *c - 1
            };
            let twin = if u == v {
                // loop: the odd occurrence closes the pair opened by the even one
                if occurrence % 2 == 1 {
                    pending.get_mut(&(u, u)).and_then(|q| q.pop())
                } else {
                    None
                }
            } else {
                pending.get_mut(&(v, u)).and_then(|q| {
                    if q.is_empty() {
                        None
                    } else {
                        Some(q.remove(0))
                    }
                })
            };
            let d = match twin {
                Some(t) => t ^ 1,
                None => {
                    let d = tail.len();
                    tail.push(u);
                    tail.push(usize::MAX);
                    pending.entry((u, v)).or_default().push(d);
                    d
                }
            };
            tail[d] = u;
            ids.push(d);
        }
        dart_at.push(ids);
    }
    if let Some((&(u, v), _)) = pending.iter().find(|(_, q)| !q.is_empty()) {
        return Err(Error::InconsistentRotation(format!(
            "{u} lists {v} more often than {v} lists {u}"
        )));
    }

    let darts = tail.len();
    let mut sigma = vec![0; darts];
    let mut sigma_inv = vec![0; darts];
    for ids in &dart_at {
        for (i, &d) in ids.iter().enumerate() {
            let next = ids[(i + 1) % ids.len()];
            sigma[d] = next;
            sigma_inv[next] = d;
        }
    }
    let map = PlanarMap {
        tail,
        sigma,
        sigma_inv,
        vertex_dart: dart_at.iter().map(|ids| ids[0]).collect(),
        labels: None,
        edits: 0,
    };
    map.check_sphere()?;
    Ok(map)
}

impl PlanarMap {
    /// Checks connectivity and Euler's relation `V - E + F = 2`.
    fn check_sphere(&self) -> Result<()> {
        let n = self.num_vertices();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for d in self.darts_at(u) {
                let w = self.head(d);
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::NonPlanarEmbedding("map is disconnected".into()));
        }
        let (v, e, f) = (n as i64, self.num_edges() as i64, self.num_faces() as i64);
        if v - e + f != 2 {
            return Err(Error::NonPlanarEmbedding(format!("V - E + F = {v} - {e} + {f} != 2")));
        }
        Ok(())
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_dart.len()
    }

    pub fn num_edges(&self) -> usize {
        self.tail.len() / 2
    }

    pub fn num_darts(&self) -> usize {
        self.tail.len()
    }

    pub fn num_faces(&self) -> usize {
        self.face_index().1
    }

    #[inline]
    pub fn alpha(&self, d: usize) -> usize {
        d ^ 1
    }

    #[inline]
    pub fn sigma(&self, d: usize) -> usize {
        self.sigma[d]
    }

    #[inline]
    pub fn sigma_inv(&self, d: usize) -> usize {
        self.sigma_inv[d]
    }

    /// Face permutation: the dart following `d` along its face.
    #[inline]
    pub fn phi(&self, d: usize) -> usize {
        self.sigma[d ^ 1]
    }

    #[inline]
    pub fn tail(&self, d: usize) -> usize {
        self.tail[d]
    }

    #[inline]
    pub fn head(&self, d: usize) -> usize {
        self.tail[d ^ 1]
    }

    pub fn vertex_dart(&self, v: usize) -> usize {
        self.vertex_dart[v]
    }

    /// Darts leaving `v`, counter-clockwise.
    pub fn darts_at(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let start = self.vertex_dart[v];
        let mut cur = Some(start);
        std::iter::from_fn(move || {
            let d = cur?;
            let next = self.sigma[d];
            cur = (next != start).then_some(next);
            Some(d)
        })
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.darts_at(v).map(|d| self.head(d)).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.darts_at(v).count()
    }

    /// The dart `u -> v`, if any (first found in rotation order).
    pub fn dart_between(&self, u: usize, v: usize) -> Option<usize> {
        self.darts_at(u).find(|&d| self.head(d) == v)
    }

    pub fn rotation_system(&self) -> Vec<Vec<usize>> {
        (0..self.num_vertices()).map(|v| self.neighbors(v)).collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.num_vertices());
        self.labels = Some(labels);
        self
    }

    /// Face index of every dart, and the number of faces.
    pub fn face_index(&self) -> (Vec<usize>, usize) {
        let mut face = vec![usize::MAX; self.num_darts()];
        let mut count = 0;
        for s in 0..self.num_darts() {
            if face[s] != usize::MAX {
                continue;
            }
            let mut d = s;
            loop {
                face[d] = count;
                d = self.phi(d);
                if d == s {
                    break;
                }
            }
            count += 1;
        }
        (face, count)
    }

    /// Dart orbits of the face permutation, in order of their smallest dart.
    pub fn face_darts(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.num_darts()];
        let mut out = Vec::new();
        for s in 0..self.num_darts() {
            if seen[s] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut d = s;
            while !seen[d] {
                seen[d] = true;
                orbit.push(d);
                d = self.phi(d);
            }
            out.push(orbit);
        }
        out
    }

    /// Face boundary walks as cyclic vertex lists.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        self.face_darts()
            .into_iter()
            .map(|orbit| orbit.into_iter().map(|d| self.tail(d)).collect())
            .collect()
    }

    /// Face sizes, sorted non-increasing.
    pub fn face_sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.face_darts().iter().map(Vec::len).collect();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::new((0..self.num_vertices()).map(|v| self.degree(v)).collect())
    }

    /// No loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        let mut mark = vec![usize::MAX; self.num_vertices()];
        for v in 0..self.num_vertices() {
            for d in self.darts_at(v) {
                let w = self.head(d);
                if w == v || mark[w] == v {
                    return false;
                }
                mark[w] = v;
            }
        }
        true
    }

    /// The underlying simple graph; parallel edges collapse and loops drop.
    pub fn underlying(&self) -> AbstractGraph {
        let mut g = AbstractGraph::new(self.num_vertices());
        for d in (0..self.num_darts()).step_by(2) {
            let (u, v) = (self.tail(d), self.head(d));
            if u != v {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// The dual map on the same darts: faces become vertices, numbered in
    /// the order of [`PlanarMap::face_darts`].
    pub fn dual(&self) -> PlanarMap {
        let (face, count) = self.face_index();
        let mut vertex_dart = vec![usize::MAX; count];
        for d in 0..self.num_darts() {
            if vertex_dart[face[d]] == usize::MAX {
                vertex_dart[face[d]] = d;
            }
        }
        let sigma: Vec<usize> = (0..self.num_darts()).map(|d| self.phi(d)).collect();
        let mut sigma_inv = vec![0; sigma.len()];
        for (d, &s) in sigma.iter().enumerate() {
            sigma_inv[s] = d;
        }
        PlanarMap { tail: face, sigma, sigma_inv, vertex_dart, labels: None, edits: 0 }
    }

    /// Mirror image: every rotation reversed.
    pub fn reflected(&self) -> PlanarMap {
        PlanarMap {
            tail: self.tail.clone(),
            sigma: self.sigma_inv.clone(),
            sigma_inv: self.sigma.clone(),
            vertex_dart: self.vertex_dart.clone(),
            labels: self.labels.clone(),
            edits: 0,
        }
    }

    /// Number of elementary edits made by in-place surgery since the map was
    /// built (new vertex, new edge, rotation or tail update).
    pub fn edit_count(&self) -> u64 {
        self.edits
    }

    // ---- in-place surgery, O(1) per call ----

    pub(crate) fn push_vertex(&mut self) -> usize {
        self.edits += 1;
        self.vertex_dart.push(usize::MAX);
        if let Some(l) = &mut self.labels {
            l.push(String::new());
        }
        self.vertex_dart.len() - 1
    }

    /// Two fresh darts `u -> v` and `v -> u`, not yet linked into rotations.
    pub(crate) fn push_edge(&mut self, u: usize, v: usize) -> (usize, usize) {
        self.edits += 1;
        let d = self.tail.len();
        self.tail.extend([u, v]);
        self.sigma.extend([d, d + 1]);
        self.sigma_inv.extend([d, d + 1]);
        (d, d + 1)
    }

    /// Inserts `d` into the rotation at its tail, right after `anchor`.
    pub(crate) fn link_after(&mut self, anchor: usize, d: usize) {
        debug_assert_eq!(self.tail[anchor], self.tail[d]);
        self.edits += 1;
        let next = self.sigma[anchor];
        self.sigma[anchor] = d;
        self.sigma_inv[d] = anchor;
        self.sigma[d] = next;
        self.sigma_inv[next] = d;
    }

    /// Gives vertex `v` the rotation `darts` (all must already have tail `v`).
    pub(crate) fn set_rotation(&mut self, v: usize, darts: &[usize]) {
        self.edits += darts.len() as u64;
        for (i, &d) in darts.iter().enumerate() {
            debug_assert_eq!(self.tail[d], v);
            let next = darts[(i + 1) % darts.len()];
            self.sigma[d] = next;
            self.sigma_inv[next] = d;
        }
        self.vertex_dart[v] = darts[0];
    }

    /// Removes `d` from its rotation; its tail must keep another dart.
    pub(crate) fn unlink(&mut self, d: usize) {
        let (prev, next) = (self.sigma_inv[d], self.sigma[d]);
        debug_assert_ne!(next, d, "cannot unlink the last dart of a vertex");
        self.edits += 1;
        self.sigma[prev] = next;
        self.sigma_inv[next] = prev;
        let v = self.tail[d];
        if self.vertex_dart[v] == d {
            self.vertex_dart[v] = next;
        }
        self.sigma[d] = d;
        self.sigma_inv[d] = d;
    }

    /// Replaces `old` by `new` at the same rotation position. `new` must
    /// already have the same tail and be unlinked.
    pub(crate) fn replace_in_rotation(&mut self, old: usize, new: usize) {
        self.link_after(old, new);
        self.unlink(old);
    }

    pub(crate) fn set_tail(&mut self, d: usize, v: usize) {
        self.edits += 1;
        self.tail[d] = v;
    }

    pub(crate) fn set_label(&mut self, v: usize, label: String) {
        if let Some(l) = &mut self.labels {
            l[v] = label;
        }
    }
}

impl PlanarMap {
    /// Builds a map from its face boundary walks. The walks may be given in
    /// either orientation; they are reoriented consistently first.
    pub fn from_faces(n: usize, faces: &[Vec<usize>]) -> Result<PlanarMap> {
        let mut by_edge: HashMap<(usize, usize), Vec<(usize, bool)>> = HashMap::new();
        for (i, f) in faces.iter().enumerate() {
            if f.len() < 2 {
                return Err(Error::InvalidParameter(format!("face {i} is too short")));
            }
            for k in 0..f.len() {
                let (u, v) = (f[k], f[(k + 1) % f.len()]);
                if u >= n || v >= n || u == v {
                    return Err(Error::InvalidParameter(format!("bad edge {u}-{v} in face {i}")));
                }
                by_edge.entry((u.min(v), u.max(v))).or_default().push((i, u < v));
            }
        }
        if let Some((&(u, v), _)) = by_edge.iter().find(|(_, fs)| fs.len() != 2) {
            return Err(Error::NonPlanarEmbedding(format!("edge {u}-{v} is not on two faces")));
        }
        // flip[i]: whether face i is reversed; neighbours across an edge must
        // traverse it in opposite directions
        let mut flip: Vec<Option<bool>> = vec![None; faces.len()];
        for s in 0..faces.len() {
            if flip[s].is_some() {
                continue;
            }
            flip[s] = Some(false);
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(i) = queue.pop_front() {
                let f = &faces[i];
                for k in 0..f.len() {
                    let (u, v) = (f[k], f[(k + 1) % f.len()]);
                    for &(j, fwd) in &by_edge[&(u.min(v), u.max(v))] {
                        if j == i {
                            continue;
                        }
                        let want = flip[i].unwrap() ^ (fwd == (u < v));
                        match flip[j] {
                            None => {
                                flip[j] = Some(want);
                                queue.push_back(j);
                            }
                            Some(x) if x != want => {
                                return Err(Error::NonPlanarEmbedding(
                                    "faces are not orientable".into(),
                                ))
                            }
                            _ => {}
                        }
                    }
                }
            }
        }
        let mut succ: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
        for (i, f) in faces.iter().enumerate() {
            let mut w = f.clone();
            if flip[i] == Some(true) {
                w.reverse();
            }
            let l = w.len();
            for k in 0..l {
                let (x, y, z) = (w[(k + l - 1) % l], w[k], w[(k + 1) % l]);
                if succ[y].insert(x, z).is_some() {
                    return Err(Error::NonPlanarEmbedding(format!("vertex {y} is pinched")));
                }
            }
        }
        let mut rotations = Vec::with_capacity(n);
        for (y, s) in succ.iter().enumerate() {
            let first = *s.keys().min().ok_or_else(|| {
                Error::InconsistentRotation(format!("vertex {y} lies on no face"))
            })?;
            let mut rot = vec![first];
            while let Some(&z) = s.get(rot.last().unwrap()) {
                if z == first {
                    break;
                }
                rot.push(z);
                if rot.len() > s.len() {
                    break;
                }
            }
            if rot.len() != s.len() {
                return Err(Error::NonPlanarEmbedding(format!("vertex {y} is pinched")));
            }
            rotations.push(rot);
        }
        build_map(&rotations)
    }
}

/// Splits the edge `ab` through a new vertex `d` placed inside the face that
/// contains `ab` and `c`, giving `Γ - ab + d + da + db + dc`.
///
/// The new vertex is numbered `num_vertices()` of the input. When both faces
/// at `ab` contain `c`, the face to the left of the dart `a -> b` is used.
pub fn edge_split(m: &PlanarMap, a: usize, b: usize, c: usize) -> Result<PlanarMap> {
    let n = m.num_vertices();
    if a >= n || b >= n || c >= n {
        return Err(Error::InvalidParameter("vertex out of range".into()));
    }
    if c == a || c == b {
        return Err(Error::VertexNotOnFace(c));
    }
    let ab = m.dart_between(a, b).ok_or(Error::NotAnEdge(a, b))?;
    let walk_to_c = |start: usize| -> Option<usize> {
        let mut d = m.phi(start);
        while d != start {
            if m.tail(d) == c {
                return Some(d);
            }
            d = m.phi(d);
        }
        None
    };
    let (start, dc) = match walk_to_c(ab) {
        Some(dc) => (ab, dc),
        None => (ab ^ 1, walk_to_c(ab ^ 1).ok_or(Error::VertexNotOnFace(c))?),
    };
    // `start` runs from p to q along the chosen face; p keeps it.
    let q = m.head(start);
    let mut out = m.clone();
    let d = out.push_vertex();
    let qp = start ^ 1;
    // The pair (start, qp) becomes p -> d / d -> p.
    let (q_d, d_q) = out.push_edge(q, d);
    out.replace_in_rotation(qp, q_d);
    out.set_tail(qp, d);
    let (c_d, d_c) = out.push_edge(c, d);
    let before_c = out.sigma_inv(dc);
    out.link_after(before_c, c_d);
    out.set_rotation(d, &[d_q, qp, d_c]);
    if let Some(labels) = &out.labels {
        if labels[d].is_empty() {
            let name = format!("d{d}");
            out.set_label(d, name);
        }
    }
    Ok(out)
}

/// Whether `m` is the skeleton of a 3-polytope: simple, and its underlying
/// graph 3-connected. Planarity holds by construction.
pub fn is_polyhedral_map(m: &PlanarMap) -> bool {
    m.is_simple() && is_three_connected(&m.underlying())
}

/// Which induced subgraph [`induced_by_degree`] selects.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeMode {
    /// Vertices of degree exactly 3 (H₃).
    Three,
    /// Vertices of degree at least 4 (H₊).
    AtLeastFour,
}

/// An induced subgraph together with the parent vertex of each of its vertices.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: AbstractGraph,
    pub parent: Vec<usize>,
}

/// The subgraph induced by the vertices whose degree *in `g`* matches `mode`.
pub fn induced_by_degree(g: &AbstractGraph, mode: DegreeMode) -> InducedSubgraph {
    let parent: Vec<usize> = (0..g.order())
        .filter(|&v| match mode {
            DegreeMode::Three => g.degree(v) == 3,
            DegreeMode::AtLeastFour => g.degree(v) >= 4,
        })
        .collect();
    InducedSubgraph { graph: g.induced(&parent), parent }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::verify::isomorphic;

    #[test]
    fn platonic_counts() {
        let t = tetrahedron();
        assert_eq!((t.num_vertices(), t.num_edges(), t.num_faces()), (4, 6, 4));
        let c = cube();
        assert_eq!((c.num_vertices(), c.num_edges(), c.num_faces()), (8, 12, 6));
        assert!(t.faces().iter().all(|f| f.len() == 3));
        assert!(c.faces().iter().all(|f| f.len() == 4));
        assert_eq!(t.degree_sequence().entries(), &[3, 3, 3, 3]);
    }

    #[test]
    fn faces_cover_each_edge_twice() {
        let c = cube();
        let mut count: HashMap<(usize, usize), usize> = HashMap::new();
        for f in c.faces() {
            for i in 0..f.len() {
                let (u, v) = (f[i], f[(i + 1) % f.len()]);
                *count.entry((u.min(v), u.max(v))).or_default() += 1;
            }
        }
        assert_eq!(count.len(), 12);
        assert!(count.values().all(|&k| k == 2));
    }

    #[test]
    fn k5_never_embeds() {
        // Exhaust every rotation system of K5 (6^5 of them): none is planar.
        let perms: Vec<Vec<usize>> = vec![
            vec![0, 1, 2, 3],
            vec![0, 1, 3, 2],
            vec![0, 2, 1, 3],
            vec![0, 2, 3, 1],
            vec![0, 3, 1, 2],
            vec![0, 3, 2, 1],
        ];
        let mut tried = 0;
        for code in 0..6usize.pow(5) {
            let mut c = code;
            let rot: Vec<Vec<usize>> = (0..5)
                .map(|v| {
                    let p = &perms[c % 6];
                    c /= 6;
                    let others: Vec<usize> = (0..5).filter(|&w| w != v).collect();
                    p.iter().map(|&i| others[i]).collect()
                })
                .collect();
            assert!(matches!(build_map(&rot), Err(Error::NonPlanarEmbedding(_))));
            tried += 1;
        }
        assert_eq!(tried, 7776);
    }

    #[test]
    fn inconsistent_rotation_rejected() {
        let err = build_map(&[vec![1, 2], vec![0], vec![1]]).unwrap_err();
        assert!(matches!(err, Error::InconsistentRotation(_)));
    }

    #[test]
    fn dual_of_cube_is_octahedron() {
        let oct = cube().dual();
        assert_eq!((oct.num_vertices(), oct.num_edges(), oct.num_faces()), (6, 12, 8));
        assert_eq!(oct.degree_sequence().entries(), &[4; 6]);
        assert!(oct.is_simple());
        assert!(isomorphic(&oct.underlying(), &bipyramid(4).underlying()).is_some());
    }

    #[test]
    fn prism_bipyramid_duality() {
        for n in 3..=6 {
            let d = prism(n).dual();
            assert!(isomorphic(&d.underlying(), &bipyramid(n).underlying()).is_some(), "n = {n}");
        }
    }

    #[test]
    fn double_dual_is_isomorphic() {
        let c = cube();
        assert!(isomorphic(&c.dual().dual().underlying(), &c.underlying()).is_some());
    }

    #[test]
    fn dual_of_cycle_is_not_simple() {
        let d = cycle(4).dual();
        assert_eq!(d.num_vertices(), 2);
        assert!(!d.is_simple());
    }

    #[test]
    fn split_tetrahedron_gives_square_pyramid() {
        let t = tetrahedron();
        let p = edge_split(&t, 0, 1, 2).unwrap();
        assert_eq!(p.degree_sequence().entries(), &[4, 3, 3, 3, 3]);
        assert_eq!((p.num_vertices(), p.num_edges(), p.num_faces()), (5, 8, 5));
        assert!(is_polyhedral_map(&p));
        // The wheel on five vertices is the only graph on this sequence that
        // has a degree-4 vertex adjacent to all others.
        assert_eq!(p.underlying().degree(2), 4);
    }

    #[test]
    fn split_errors() {
        let c = cube();
        assert_eq!(edge_split(&c, 0, 6, 1).unwrap_err(), Error::NotAnEdge(0, 6));
        // 6 is opposite to edge 0-1 on the cube
        assert_eq!(edge_split(&c, 0, 1, 7).unwrap_err(), Error::VertexNotOnFace(7));
        assert_eq!(edge_split(&c, 0, 1, 1).unwrap_err(), Error::VertexNotOnFace(1));
    }

    #[test]
    fn split_bookkeeping() {
        let c = cube();
        let s = edge_split(&c, 0, 1, 5).unwrap();
        assert_eq!(s.num_vertices(), 9);
        assert_eq!(s.num_edges(), 14);
        assert_eq!(s.num_faces(), 7);
        assert_eq!(s.degree(5), 4);
        assert_eq!(s.degree(0), 3);
        assert_eq!(s.degree(1), 3);
        assert_eq!(s.degree(8), 3);
        assert!(is_polyhedral_map(&s));
    }

    #[test]
    fn polyhedral_checks() {
        assert!(is_polyhedral_map(&cube()));
        assert!(!is_polyhedral_map(&cycle(4)));
    }

    #[test]
    fn induced_subgraphs_of_tetrahedron() {
        let g = tetrahedron().underlying();
        let h3 = induced_by_degree(&g, DegreeMode::Three);
        assert_eq!(h3.graph, AbstractGraph::complete(4));
        let hp = induced_by_degree(&g, DegreeMode::AtLeastFour);
        assert_eq!(hp.graph.order(), 0);
    }

    #[test]
    fn reflection_keeps_face_sizes() {
        let p = prism(5);
        assert_eq!(p.reflected().face_sizes(), p.face_sizes());
    }
}
