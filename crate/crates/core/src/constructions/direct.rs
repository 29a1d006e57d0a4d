//! Explicit builders for `S(x, y)` and `Q(x, y)`.

use crate::error::{Error, Result};
use crate::planar_map::{edge_split, PlanarMap};

/// The self-dual polyhedron with an `x`-gon and a `y`-gon sharing an edge and
/// every other face a triangle.
///
/// Vertex ids: `v_i` is `i - 1` for `i` in `1..=x`, `w_j` is `x + j - 1` for
/// `j` in `1..=y-2`. `deg(v1) = y` and `deg(w1) = x`; for `y = 3` the result
/// is the `x`-gonal wheel with hub `w1`.
#[allow(non_snake_case)]
pub fn construct_S(x: usize, y: usize) -> Result<PlanarMap> {
    if y < 3 || x < y {
        return Err(Error::InvalidParameter(format!("need x >= y >= 3, got ({x}, {y})")));
    }
    let v = |i: usize| i - 1;
    let w = |j: usize| x + j - 1;
    let mut faces: Vec<Vec<usize>> = vec![(1..=x).map(v).collect()];
    let mut big_y: Vec<usize> = (1..=y - 2).map(w).collect();
    big_y.extend([v(x), v(x - 1)]);
    faces.push(big_y);
    for j in 1..y - 2 {
        faces.push(vec![v(1), w(j), w(j + 1)]);
    }
    for j in 1..x - 2 {
        faces.push(vec![w(1), v(j), v(j + 1)]);
    }
    faces.push(vec![v(1), w(y - 2), v(x)]);
    faces.push(vec![w(1), v(x - 2), v(x - 1)]);
    let labels = (1..=x).map(|i| format!("v{i}")).chain((1..=y - 2).map(|j| format!("w{j}")));
    Ok(PlanarMap::from_faces(x + y - 2, &faces)?.with_labels(labels.collect()))
}

/// `S(x, y - 1)` with the edge `v3 v4` split through a new vertex `u` joined to
/// `v1`. Same degree sequence as `S(x, y)`; self-dual only when `x = 4`.
#[allow(non_snake_case)]
pub fn construct_Q(x: usize, y: usize) -> Result<PlanarMap> {
    if y < 4 || x < y {
        return Err(Error::InvalidParameter(format!("need x >= y >= 4, got ({x}, {y})")));
    }
    let s = construct_S(x, y - 1)?;
    let mut q = edge_split(&s, 2, 3, 0)?;
    let u = q.num_vertices() - 1;
    q.set_label(u, "u".into());
    Ok(q)
}
