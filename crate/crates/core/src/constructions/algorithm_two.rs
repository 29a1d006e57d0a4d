//! The `G_p` family: repeated edge-splitting of `S(4, 4)` next to the
//! newest vertex.

use super::construct_S;
use crate::error::{Error, Result};
use crate::planar_map::{build_map, edge_split, PlanarMap};

/// A polyhedron with vertices `v_1..v_p` (vertex `i - 1` is `v_i`) and faces
/// `f_1..f_r`, each face stored as its sorted vertex set.
#[derive(Clone, Debug)]
pub struct FaceLabelledMap {
    map: PlanarMap,
    faces: Vec<Vec<usize>>,
}

impl FaceLabelledMap {
    /// Checks that `faces` lists every face of `map` exactly once.
    pub fn new(map: PlanarMap, faces: Vec<Vec<usize>>) -> Result<Self> {
        let faces: Vec<Vec<usize>> = faces
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f
            })
            .collect();
        let mut given = faces.clone();
        given.sort();
        let mut actual: Vec<Vec<usize>> = map
            .faces()
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f
            })
            .collect();
        actual.sort();
        if given != actual {
            return Err(Error::PreconditionViolated("face labels do not match the faces".into()));
        }
        Ok(FaceLabelledMap { map, faces })
    }

    pub fn map(&self) -> &PlanarMap {
        &self.map
    }

    pub fn into_map(self) -> PlanarMap {
        self.map
    }

    /// Vertex set of `f_i` (1-based).
    pub fn face(&self, i: usize) -> Option<&[usize]> {
        self.faces.get(i.checked_sub(1)?).map(Vec::as_slice)
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    /// Whether `v_i -> f_i` maps adjacent vertices exactly onto faces that
    /// share an edge.
    pub fn is_dual_labelling(&self) -> bool {
        let n = self.map.num_vertices();
        if self.faces.len() != n {
            return false;
        }
        let g = self.map.underlying();
        let share_edge = |f: &[usize], h: &[usize]| f.iter().filter(|x| h.contains(x)).count() >= 2;
        (0..n).all(|i| {
            (i + 1..n).all(|j| g.has_edge(i, j) == share_edge(&self.faces[i], &self.faces[j]))
        })
    }
}

/// Labels of `G_6`: `v_i` is vertex `G6_ORDER[i - 1]` of `construct_S(4, 4)`.
const G6_ORDER: [usize; 6] = [3, 2, 1, 4, 0, 5];

/// `S(4, 4)` with `v1 v2 v3` the path of degree-3 vertices, `f1 = [v4, v5, v6]`
/// and `v_i -> f_i` an isomorphism onto the dual.
pub fn g6() -> FaceLabelledMap {
    let s = construct_S(4, 4).expect("S(4,4)");
    let mut new_id = [0; 6];
    for (i, &old) in G6_ORDER.iter().enumerate() {
        new_id[old] = i;
    }
    let rotations: Vec<Vec<usize>> =
        G6_ORDER.iter().map(|&old| s.neighbors(old).iter().map(|&w| new_id[w]).collect()).collect();
    let map = build_map(&rotations)
        .expect("relabelled S(4,4)")
        .with_labels((1..=6).map(|i| format!("v{i}")).collect());
    let mut faces: Vec<Vec<usize>> = map
        .faces()
        .into_iter()
        .map(|mut f| {
            f.sort_unstable();
            f
        })
        .collect();
    faces.sort();
    let first = faces.iter().position(|f| f == &[3, 4, 5]).expect("[v4,v5,v6] is a face");
    let f1 = faces.remove(first);
    let mut order = Vec::with_capacity(6);
    order.push(f1);
    let labelled = search_dual_labelling(&map, &mut order, &mut faces)
        .expect("S(4,4) is self-dual with f1 = [v4,v5,v6]");
    FaceLabelledMap::new(map, labelled).expect("faces of S(4,4)")
}

fn search_dual_labelling(
    map: &PlanarMap,
    order: &mut Vec<Vec<usize>>,
    rest: &mut Vec<Vec<usize>>,
) -> Option<Vec<Vec<usize>>> {
    let i = order.len();
    let g = map.underlying();
    let share_edge = |f: &[usize], h: &[usize]| f.iter().filter(|x| h.contains(x)).count() >= 2;
    if (0..i - 1).any(|j| g.has_edge(i - 1, j) != share_edge(&order[i - 1], &order[j])) {
        return None;
    }
    if rest.is_empty() {
        return Some(order.clone());
    }
    for k in 0..rest.len() {
        let f = rest.remove(k);
        order.push(f);
        if let Some(found) = search_dual_labelling(map, order, rest) {
            return Some(found);
        }
        let f = order.pop().unwrap();
        rest.insert(k, f);
    }
    None
}

/// One step: for `p = |V|`, splits the edge `v_{p-2} v_{p-1}` of the triangle
/// `f_1 = [v_{p-2}, v_{p-1}, v_p]` through a new vertex `v_{p+1}` joined to
/// `v_p`, then relabels faces as `g_1 = [v_{p-1}, v_p, v_{p+1}]`,
/// `g_2 = [v_{p-2}, v_p, v_{p+1}]` and `g_i = f_{i-1}` for `i >= 3`.
pub fn algorithm_two_step(g: &FaceLabelledMap) -> Result<FaceLabelledMap> {
    let p = g.map.num_vertices();
    if p < 4 {
        return Err(Error::PreconditionViolated("need at least four vertices".into()));
    }
    let (a, b, c) = (p - 3, p - 2, p - 1);
    if g.faces.first().map(Vec::as_slice) != Some(&[a, b, c][..]) {
        return Err(Error::PreconditionViolated(format!(
            "f1 is not the triangle [v{}, v{}, v{}]",
            p - 2,
            p - 1,
            p
        )));
    }
    if g.map.dart_between(a, b).is_none() {
        return Err(Error::PreconditionViolated(format!("v{} v{} is not an edge", p - 2, p - 1)));
    }
    let mut map = edge_split(&g.map, a, b, c)?;
    let d = p;
    map.set_label(d, format!("v{}", p + 1));
    let mut faces = vec![vec![b, c, d], vec![a, c, d]];
    for f in &g.faces[1..] {
        let mut f = f.clone();
        if f.contains(&a) && f.contains(&b) {
            f.push(d);
        }
        faces.push(f);
    }
    FaceLabelledMap::new(map, faces)
}

/// `G_p` for `p >= 6`: `G_6` followed by `p - 6` steps.
#[allow(non_snake_case)]
pub fn construct_G_labelled(p: usize) -> Result<FaceLabelledMap> {
    if p < 6 {
        return Err(Error::InvalidParameter(format!("p must be at least 6, got {p}")));
    }
    let mut g = g6();
    for _ in 6..p {
        g = algorithm_two_step(&g)?;
    }
    Ok(g)
}

/// The polyhedron `G_p`, with vertex `i - 1` labelled `v_i`.
#[allow(non_snake_case)]
pub fn construct_G(p: usize) -> Result<PlanarMap> {
    Ok(construct_G_labelled(p)?.into_map())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{algorithm_one, DegreeTuple};
    use crate::planar_map::{induced_by_degree, is_polyhedral_map, DegreeMode};
    use crate::verify::{is_self_dual, isomorphic};
    use crate::AbstractGraph;

    #[test]
    fn g6_labelling() {
        let g = g6();
        assert!(g.is_dual_labelling());
        assert_eq!(g.face(1), Some(&[3, 4, 5][..]));
        assert_eq!(g.map().degree(5), 3);
        assert!(g.map().dart_between(0, 1).is_some() && g.map().dart_between(1, 2).is_some());
    }

    #[test]
    fn one_step_bookkeeping() {
        let g = g6();
        let h = algorithm_two_step(&g).unwrap();
        let p = g.map().num_vertices();
        for v in 0..p {
            let grow = usize::from(v == p - 1);
            assert_eq!(h.map().degree(v), g.map().degree(v) + grow);
        }
        assert_eq!(h.map().degree(p), 3);
        assert_eq!(h.face(1), Some(&[p - 2, p - 1, p][..]));
        assert_eq!(h.num_faces(), g.num_faces() + 1);
    }

    #[test]
    fn family_properties() {
        let p3k1 = AbstractGraph::path(3).disjoint_union(&AbstractGraph::new(1));
        for p in 7..=12 {
            let g = construct_G_labelled(p).unwrap();
            let m = g.map();
            assert!(is_polyhedral_map(m));
            assert!(is_self_dual(m).unwrap(), "p = {p}");
            // the relabelled faces stop matching v_i -> f_i after the first step
            assert!(!g.is_dual_labelling(), "p = {p}");
            let t = DegreeTuple::constant(4, p - 4).unwrap();
            assert_eq!(m.degree_sequence(), t.target_sequence());
            let h3 = induced_by_degree(&m.underlying(), DegreeMode::Three);
            assert!(isomorphic(&h3.graph, &p3k1).is_some());
            let mut parents = h3.parent.clone();
            parents.sort_unstable();
            assert_eq!(parents, vec![0, 1, 2, p - 1]);
            let q = algorithm_one(&t).unwrap().polyhedron;
            assert!(isomorphic(&q.underlying(), &m.underlying()).is_none());
        }
    }

    #[test]
    fn rejects_small_p_and_bad_input() {
        assert!(construct_G(5).is_err());
        let s = construct_S(5, 4).unwrap();
        let faces: Vec<Vec<usize>> = s.faces();
        let bad = FaceLabelledMap::new(s, faces).unwrap();
        assert!(matches!(algorithm_two_step(&bad), Err(Error::PreconditionViolated(_))));
    }
}
