//! Radial (vertex-face) graphs and the labelled radials driven by the
//! construction algorithms.

use std::collections::HashSet;

use super::{build_map, PlanarMap};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// A vertex of the polyhedron (`v_i`).
    Primal,
    /// A face of the polyhedron, i.e. a vertex of its dual (`f_i`).
    Dual,
}

impl Side {
    fn slot(self) -> usize {
        match self {
            Side::Primal => 0,
            Side::Dual => 1,
        }
    }

    pub fn prefix(self) -> char {
        match self {
            Side::Primal => 'v',
            Side::Dual => 'f',
        }
    }
}

/// The six radial vertices a surgery step acts on.
///
/// They form the hexagon `a, B, c, A, b, C` (primal lower case, dual upper
/// case, written here `fa`, `fb`, `fc`) split by the chord `b B` into the two
/// quadrangles `[a, B, b, C]` and `[b, B, c, A]`. `chord` is the dart `b -> B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cursor {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub fa: usize,
    pub fb: usize,
    pub fc: usize,
    pub chord: usize,
}

/// A bipartite quadrangulation whose vertices carry a class (vertex or face
/// of the underlying polyhedron) and a 1-based index within that class.
#[derive(Clone, Debug)]
pub struct LabeledRadial {
    map: PlanarMap,
    side: Vec<Side>,
    index: Vec<usize>,
    by_index: [Vec<usize>; 2],
    cursor: Option<Cursor>,
    last_surgery: Option<Surgery>,
}

/// What the most recent surgery step did: the cursor it consumed, the new
/// primal and dual vertices, and the dart `d -> D` between them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Surgery {
    pub old: Cursor,
    pub d: usize,
    pub fd: usize,
    pub chord: usize,
}

impl LabeledRadial {
    /// Wraps a map with its classes and indices. Indices must form `1..=N`
    /// within each class.
    pub fn new(map: PlanarMap, side: Vec<Side>, index: Vec<usize>) -> Result<Self> {
        let n = map.num_vertices();
        if side.len() != n || index.len() != n {
            return Err(Error::InvalidParameter("label arrays do not match the map".into()));
        }
        let mut by_index = [Vec::new(), Vec::new()];
        for s in [Side::Primal, Side::Dual] {
            let count = side.iter().filter(|&&x| x == s).count();
            by_index[s.slot()] = vec![usize::MAX; count];
        }
        for v in 0..n {
            let slot = &mut by_index[side[v].slot()];
            let i = index[v];
            if i == 0 || i > slot.len() || slot[i - 1] != usize::MAX {
                return Err(Error::InvalidParameter(format!(
                    "index {i} of vertex {v} is out of range or repeated"
                )));
            }
            slot[i - 1] = v;
        }
        let labels = (0..n).map(|v| format!("{}{}", side[v].prefix(), index[v])).collect();
        Ok(LabeledRadial {
            map: map.with_labels(labels),
            side,
            index,
            by_index,
            cursor: None,
            last_surgery: None,
        })
    }

    pub fn map(&self) -> &PlanarMap {
        &self.map
    }

    pub fn side(&self, v: usize) -> Side {
        self.side[v]
    }

    pub fn index(&self, v: usize) -> usize {
        self.index[v]
    }

    pub fn label(&self, v: usize) -> String {
        format!("{}{}", self.side[v].prefix(), self.index[v])
    }

    /// The radial vertex carrying label `v_i` (Primal) or `f_i` (Dual).
    pub fn vertex(&self, side: Side, i: usize) -> Option<usize> {
        self.by_index[side.slot()].get(i.checked_sub(1)?).copied()
    }

    /// Number of primal (equivalently dual) vertices when the classes balance.
    pub fn class_size(&self, side: Side) -> usize {
        self.by_index[side.slot()].len()
    }

    pub fn cursor(&self) -> Option<Cursor> {
        self.cursor
    }

    pub fn with_cursor(mut self, cursor: Cursor) -> Result<Self> {
        self.check_cursor(&cursor)?;
        self.cursor = Some(cursor);
        Ok(self)
    }

    /// Builds a cursor from six labelled vertices; the chord dart is looked up.
    pub fn cursor_from_labels(&self, a: usize, b: usize, c: usize) -> Result<Cursor> {
        self.cursor_from_pairs([(a, a), (b, b), (c, c)])
    }

    /// Like [`LabeledRadial::cursor_from_labels`] but with independent primal
    /// and dual indices: `[(a, A), (b, B), (c, C)]`.
    pub fn cursor_from_pairs(&self, pairs: [(usize, usize); 3]) -> Result<Cursor> {
        let get = |s, i| {
            self.vertex(s, i)
                .ok_or_else(|| Error::InvalidCursor(format!("no vertex {}{i}", Side::prefix(s))))
        };
        let [(a, fa), (b, fb), (c, fc)] = pairs;
        let (a, b, c) = (get(Side::Primal, a)?, get(Side::Primal, b)?, get(Side::Primal, c)?);
        let (fa, fb, fc) = (get(Side::Dual, fa)?, get(Side::Dual, fb)?, get(Side::Dual, fc)?);
        let chord = self
            .map
            .dart_between(b, fb)
            .ok_or_else(|| Error::InvalidCursor("b and B are not adjacent".into()))?;
        let cursor = Cursor { a, b, c, fa, fb, fc, chord };
        self.check_cursor(&cursor)?;
        Ok(cursor)
    }

    /// Verifies that the cursor sits on two quadrangles `[a,B,b,C]` and
    /// `[b,B,c,A]` sharing the chord `bB`. Returns whether `[b,B,a,C]` is the
    /// face to the left of the chord dart.
    pub(crate) fn check_cursor(&self, k: &Cursor) -> Result<bool> {
        let m = &self.map;
        let sides = [
            (k.a, Side::Primal),
            (k.b, Side::Primal),
            (k.c, Side::Primal),
            (k.fa, Side::Dual),
            (k.fb, Side::Dual),
            (k.fc, Side::Dual),
        ];
        for (v, s) in sides {
            if v >= m.num_vertices() || self.side[v] != s {
                return Err(Error::InvalidCursor(format!("vertex {v} is not {s:?}")));
            }
        }
        if k.chord >= m.num_darts() || m.tail(k.chord) != k.b || m.head(k.chord) != k.fb {
            return Err(Error::InvalidCursor("chord is not the dart b -> B".into()));
        }
        let quad = |d: usize| -> Option<[usize; 4]> {
            let d1 = m.phi(d);
            let d2 = m.phi(d1);
            let d3 = m.phi(d2);
            (m.phi(d3) == d).then(|| [m.tail(d), m.tail(d1), m.tail(d2), m.tail(d3)])
        };
        let left =
            quad(k.chord).ok_or_else(|| Error::InvalidCursor("chord face not a quad".into()))?;
        let right = quad(k.chord ^ 1)
            .ok_or_else(|| Error::InvalidCursor("chord face not a quad".into()))?;
        if left == [k.b, k.fb, k.a, k.fc] && right == [k.fb, k.b, k.fa, k.c] {
            Ok(true)
        } else if left == [k.b, k.fb, k.c, k.fa] && right == [k.fb, k.b, k.fc, k.a] {
            Ok(false)
        } else {
            Err(Error::InvalidCursor(format!("faces at the chord are {left:?} and {right:?}")))
        }
    }

    pub(crate) fn map_mut(&mut self) -> &mut PlanarMap {
        &mut self.map
    }

    pub(crate) fn set_cursor_unchecked(&mut self, cursor: Option<Cursor>) {
        self.cursor = cursor;
    }

    pub(crate) fn last_surgery(&self) -> Option<Surgery> {
        self.last_surgery
    }

    pub(crate) fn set_last_surgery(&mut self, s: Option<Surgery>) {
        self.last_surgery = s;
    }

    /// Registers a vertex just appended to the map with the next free index
    /// of its class.
    pub(crate) fn register_new_vertex(&mut self, v: usize, side: Side) -> usize {
        debug_assert_eq!(v, self.side.len());
        let slot = &mut self.by_index[side.slot()];
        slot.push(v);
        let i = slot.len();
        self.side.push(side);
        self.index.push(i);
        self.map.set_label(v, format!("{}{i}", side.prefix()));
        i
    }

    /// Bipartite between classes, every face a quadrangle, classes balanced.
    pub fn check_quadrangulation(&self) -> Result<()> {
        check_bipartite_quadrangulation(&self.map, &self.side)?;
        if self.class_size(Side::Primal) != self.class_size(Side::Dual) {
            return Err(Error::NotQuadrangulation("class sizes differ".into()));
        }
        Ok(())
    }

    /// Polyhedron on the vertices of one class; `v_i` becomes vertex `i - 1`.
    pub fn extract(&self, side: Side) -> Result<PlanarMap> {
        check_bipartite_quadrangulation(&self.map, &self.side)?;
        let m = &self.map;
        let ids = &self.by_index[side.slot()];
        let rotations: Vec<Vec<usize>> = ids
            .iter()
            .map(|&x| {
                m.darts_at(x)
                    .map(|e| {
                        let w = m.head(m.phi(m.sigma(e)));
                        self.index[w] - 1
                    })
                    .collect()
            })
            .collect();
        let labels = (1..=ids.len()).map(|i| format!("{}{i}", side.prefix())).collect();
        Ok(build_map(&rotations)?.with_labels(labels))
    }
}

fn check_bipartite_quadrangulation(m: &PlanarMap, side: &[Side]) -> Result<()> {
    for d in (0..m.num_darts()).step_by(2) {
        if side[m.tail(d)] == side[m.head(d)] {
            return Err(Error::NotQuadrangulation(format!(
                "edge {}-{} joins one class",
                m.tail(d),
                m.head(d)
            )));
        }
    }
    if let Some(f) = m.face_darts().iter().find(|f| f.len() != 4) {
        return Err(Error::NotQuadrangulation(format!("face of length {}", f.len())));
    }
    Ok(())
}

/// The radial of a 2-connected map. Vertex `v` keeps id `v` and index
/// `v + 1`; face `j` (in [`PlanarMap::face_darts`] order) becomes vertex
/// `V + j` with index `j + 1`.
pub fn radial(m: &PlanarMap) -> Result<LabeledRadial> {
    let faces = m.face_darts();
    let (face_of, nf) = m.face_index();
    let nv = m.num_vertices();
    if nv < 2 {
        return Err(Error::NotTwoConnected);
    }
    let mut seen = vec![usize::MAX; nv];
    for (j, orbit) in faces.iter().enumerate() {
        for &d in orbit {
            let v = m.tail(d);
            // a repeated vertex is a cut vertex; a repeated edge is a bridge
            if seen[v] == j || face_of[d ^ 1] == j {
                return Err(Error::NotTwoConnected);
            }
            seen[v] = j;
        }
    }
    let mut rotations: Vec<Vec<usize>> =
        (0..nv).map(|v| m.darts_at(v).map(|e| nv + face_of[m.sigma(e)]).collect()).collect();
    // a face orbit runs clockwise around its face
    rotations.extend(faces.iter().map(|orbit| orbit.iter().rev().map(|&d| m.tail(d)).collect()));
    let map = build_map(&rotations)?;
    let side = (0..nv + nf).map(|x| if x < nv { Side::Primal } else { Side::Dual }).collect();
    let index = (0..nv + nf).map(|x| if x < nv { x + 1 } else { x - nv + 1 }).collect();
    LabeledRadial::new(map, side, index)
}

/// The primal polyhedron of a labelled radial.
pub fn primal_from_radial(r: &LabeledRadial) -> Result<PlanarMap> {
    r.extract(Side::Primal)
}

/// Whether every 4-cycle of the radial bounds a face. For the radial of a
/// 2-connected plane graph this holds exactly when that graph is
/// 3-connected.
///
/// 4-cycles are found as pairs of common neighbours of same-class vertices.
pub fn every_four_cycle_bounds_face(r: &LabeledRadial) -> bool {
    four_cycles_are_faces(r.map())
}

pub(crate) fn four_cycles_are_faces(m: &PlanarMap) -> bool {
    let mut face_sets: HashSet<[usize; 4]> = HashSet::new();
    for orbit in m.face_darts() {
        if orbit.len() == 4 {
            let mut key = [0; 4];
            for (k, &d) in orbit.iter().enumerate() {
                key[k] = m.tail(d);
            }
            key.sort_unstable();
            face_sets.insert(key);
        }
    }
    let n = m.num_vertices();
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut ns = m.neighbors(v);
            ns.sort_unstable();
            ns.dedup();
            ns
        })
        .collect();
    let mut common: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut touched = Vec::new();
    for x in 0..n {
        for &p in &adj[x] {
            for &y in &adj[p] {
                if y > x {
                    if common[y].is_empty() {
                        touched.push(y);
                    }
                    common[y].push(p);
                }
            }
        }
        for &y in &touched {
            let ps = &common[y];
            for i in 0..ps.len() {
                for j in i + 1..ps.len() {
                    let mut key = [x, y, ps[i], ps[j]];
                    key.sort_unstable();
                    if !face_sets.contains(&key) {
                        return false;
                    }
                }
            }
        }
        for y in touched.drain(..) {
            common[y].clear();
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::is_polyhedral_map;
    use super::*;
    use crate::verify::isomorphic;

    /// Counts 4-cycles by brute force over ordered vertex quadruples.
    fn count_four_cycles(m: &PlanarMap) -> usize {
        let g = m.underlying();
        let n = g.order();
        let mut count = 0;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let distinct = a != b && a != c && a != d && b != c && b != d && c != d;
                        if distinct
                            && g.has_edge(a, b)
                            && g.has_edge(b, c)
                            && g.has_edge(c, d)
                            && g.has_edge(d, a)
                        {
                            count += 1;
                        }
                    }
                }
            }
        }
        count / 8
    }

    fn normalized(m: &PlanarMap) -> Vec<Vec<usize>> {
        m.rotation_system()
            .into_iter()
            .map(|mut r| {
                let k = (0..r.len()).min_by_key(|&i| r[i]).unwrap();
                r.rotate_left(k);
                r
            })
            .collect()
    }

    #[test]
    fn radial_of_tetrahedron_is_cube() {
        let r = radial(&tetrahedron()).unwrap();
        let m = r.map();
        assert_eq!((m.num_vertices(), m.num_edges(), m.num_faces()), (8, 12, 6));
        assert!(isomorphic(&m.underlying(), &cube().underlying()).is_some());
        r.check_quadrangulation().unwrap();
        assert_eq!(count_four_cycles(m), 6);
        assert!(every_four_cycle_bounds_face(&r));
    }

    #[test]
    fn radial_of_cube_counts() {
        let r = radial(&cube()).unwrap();
        let m = r.map();
        assert_eq!((m.num_vertices(), m.num_edges(), m.num_faces()), (14, 24, 12));
        assert!(m.faces().iter().all(|f| f.len() == 4));
    }

    #[test]
    fn primal_round_trip() {
        for g in [tetrahedron(), cube(), prism(5), bipyramid(4)] {
            let r = radial(&g).unwrap();
            let p = primal_from_radial(&r).unwrap();
            assert_eq!(normalized(&p), normalized(&g));
            let d = r.extract(Side::Dual).unwrap();
            assert!(isomorphic(&d.underlying(), &g.dual().underlying()).is_some());
        }
    }

    #[test]
    fn radial_of_four_cycle_has_separating_four_cycle() {
        let c4 = cycle(4);
        let r = radial(&c4).unwrap();
        assert!(r.map().face_sizes().iter().all(|&s| s == 4));
        assert!(!every_four_cycle_bounds_face(&r));
        assert!(!is_polyhedral_map(&c4));
    }

    #[test]
    fn radial_rejects_cut_vertex() {
        // two triangles sharing vertex 0
        let bowtie = build_map(&[vec![1, 2, 3, 4], vec![2, 0], vec![0, 1], vec![4, 0], vec![0, 3]]);
        let bowtie = bowtie.unwrap();
        assert_eq!(radial(&bowtie).unwrap_err(), Error::NotTwoConnected);
        let path = build_map(&[vec![1], vec![0, 2], vec![1]]).unwrap();
        assert_eq!(radial(&path).unwrap_err(), Error::NotTwoConnected);
    }

    #[test]
    fn extract_rejects_non_quadrangulation() {
        let r = LabeledRadial::new(
            tetrahedron(),
            vec![Side::Primal, Side::Dual, Side::Primal, Side::Dual],
            vec![1, 1, 2, 2],
        )
        .unwrap();
        assert!(matches!(r.extract(Side::Primal), Err(Error::NotQuadrangulation(_))));
    }

    #[test]
    fn labels_must_be_bijective() {
        let m = tetrahedron();
        let bad = LabeledRadial::new(m, vec![Side::Primal; 4], vec![1, 2, 2, 3]);
        assert!(bad.is_err());
    }
}
