//! Growing self-dual polyhedra by local surgery on a labelled radial.

use super::DegreeTuple;
use crate::error::{Error, Result};
use crate::planar_map::{build_map, radial, Cursor, LabeledRadial, PlanarMap, Side, Surgery};

/// How the cursor moves after a surgery step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelabelMode {
    /// Keep growing the same `c, C`.
    Continue,
    /// Freeze the old `c, C` as `a, A` and start growing the next pair.
    Advance,
}

/// The radial of the tetrahedron, with `v1` on `f1, f2, f3` and the cursor
/// `a = v2, b = v4, c = v3` (and likewise for the faces).
pub fn seed_cube() -> LabeledRadial {
    // v1..v4 are 0..3; f_i is the face opposite v_j for (i, j) in
    // (1,4), (2,2), (3,3), (4,1)
    let tet = build_map(&[vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]])
        .expect("tetrahedron");
    let r = radial(&tet).expect("tetrahedron is 2-connected");
    let m = r.map().clone();
    let opposite_to_index = [4, 2, 3, 1];
    let mut side = Vec::with_capacity(8);
    let mut index = Vec::with_capacity(8);
    for x in 0..m.num_vertices() {
        side.push(r.side(x));
        if r.side(x) == Side::Primal {
            index.push(r.index(x));
        } else {
            let missing = (0..4).find(|v| !m.neighbors(x).contains(v)).unwrap();
            index.push(opposite_to_index[missing]);
        }
    }
    let seed = LabeledRadial::new(m, side, index).expect("valid indices");
    let cursor = seed.cursor_from_labels(2, 4, 3).expect("seed cursor");
    seed.with_cursor(cursor).expect("seed cursor")
}

/// One surgery step on a copy of `r`. The cursor is consumed; call
/// [`relabel_after_z`] to place the next one.
pub fn z_transform(r: &LabeledRadial) -> Result<LabeledRadial> {
    let mut out = r.clone();
    z_in_place(&mut out)?;
    Ok(out)
}

/// Inserts a new primal vertex `d` and dual vertex `D` inside the hexagon
/// `a, B, c, A, b, C`, raising the degrees of `c` and `C` by one.
fn z_in_place(r: &mut LabeledRadial) -> Result<()> {
    let k = r.cursor().ok_or_else(|| Error::InvalidCursor("no cursor set".into()))?;
    let upright = r.check_cursor(&k)?;
    let h1 = k.chord;
    let h2 = h1 ^ 1;
    let (c_anchor, fc_anchor) = {
        let m = r.map();
        let q1 = [h1, m.phi(h1), m.phi(m.phi(h1))];
        let q2 = [h2, m.phi(h2), m.phi(m.phi(h2))];
        if upright {
            (q2[2] ^ 1, q1[2] ^ 1)
        } else {
            (q1[1] ^ 1, q2[1] ^ 1)
        }
    };

    let d = r.map_mut().push_vertex();
    r.register_new_vertex(d, Side::Primal);
    let fd = r.map_mut().push_vertex();
    r.register_new_vertex(fd, Side::Dual);

    let m = r.map_mut();
    // b loses B and gains D; the chord h1 becomes d -> B
    let (b_fd, fd_b) = m.push_edge(k.b, fd);
    m.replace_in_rotation(h1, b_fd);
    m.set_tail(h1, d);
    let (fc_d, d_fc) = m.push_edge(k.fc, d);
    m.link_after(fc_anchor, fc_d);
    let (c_fd, fd_c) = m.push_edge(k.c, fd);
    m.link_after(c_anchor, c_fd);
    let (d_fd, fd_d) = m.push_edge(d, fd);
    if upright {
        m.set_rotation(d, &[h1, d_fd, d_fc]);
        m.set_rotation(fd, &[fd_d, fd_c, fd_b]);
    } else {
        m.set_rotation(d, &[h1, d_fc, d_fd]);
        m.set_rotation(fd, &[fd_d, fd_b, fd_c]);
    }
    r.set_cursor_unchecked(None);
    r.set_last_surgery(Some(Surgery { old: k, d, fd, chord: d_fd }));
    Ok(())
}

/// Places the cursor after a surgery step.
pub fn relabel_after_z(r: &LabeledRadial, mode: RelabelMode) -> Result<LabeledRadial> {
    let mut out = r.clone();
    relabel_in_place(&mut out, mode)?;
    Ok(out)
}

fn relabel_in_place(r: &mut LabeledRadial, mode: RelabelMode) -> Result<()> {
    let s = r
        .last_surgery()
        .ok_or_else(|| Error::InvalidCursor("no surgery step to relabel after".into()))?;
    let o = s.old;
    let cursor = match mode {
        RelabelMode::Continue => {
            Cursor { a: o.b, fa: o.fb, b: s.d, fb: s.fd, c: o.c, fc: o.fc, chord: s.chord }
        }
        RelabelMode::Advance => {
            Cursor { a: o.c, fa: o.fc, b: s.d, fb: s.fd, c: o.b, fc: o.fb, chord: s.chord }
        }
    };
    r.check_cursor(&cursor)?;
    r.set_cursor_unchecked(Some(cursor));
    r.set_last_surgery(None);
    Ok(())
}

/// Result of [`algorithm_one`].
#[derive(Clone, Debug)]
pub struct AlgorithmOneOutput {
    /// Final labelled radial; its cursor is unset when the tuple is non-empty.
    pub radial: LabeledRadial,
    /// The primal polyhedron; vertex `i - 1` carries label `v{i}`.
    pub polyhedron: PlanarMap,
    /// Polyhedron vertex ids of `u_1, ..., u_k`, the vertices grown to degree `t_i`.
    pub high_degree: Vec<usize>,
    /// Elementary map edits spent in the surgery loop.
    pub edits: u64,
}

/// The self-dual polyhedron `P(T)`, grown from the radial of the tetrahedron.
pub fn algorithm_one(t: &DegreeTuple) -> Result<AlgorithmOneOutput> {
    algorithm_one_from(t, seed_cube())
}

/// Runs the surgery schedule of `t` starting from `seed`, which must carry a
/// cursor. Each entry `t_i` takes `t_i - 3` steps: the cursor continues after
/// all but the last, and advances after the last unless `t_i` is final.
pub fn algorithm_one_from(t: &DegreeTuple, seed: LabeledRadial) -> Result<AlgorithmOneOutput> {
    let mut r = seed;
    if r.cursor().is_none() {
        return Err(Error::InvalidCursor("seed carries no cursor".into()));
    }
    let start = r.map().edit_count();
    let mut high = Vec::with_capacity(t.k());
    let k = t.k();
    for (i, &ti) in t.entries().iter().enumerate() {
        let c = r.cursor().expect("cursor is placed before every entry").c;
        high.push(r.index(c) - 1);
        let steps = ti - 3;
        for j in 0..steps {
            z_in_place(&mut r)?;
            if j + 1 < steps {
                relabel_in_place(&mut r, RelabelMode::Continue)?;
            } else if i + 1 < k {
                relabel_in_place(&mut r, RelabelMode::Advance)?;
            }
        }
    }
    let edits = r.map().edit_count() - start;
    let polyhedron = r.extract(Side::Primal)?;
    Ok(AlgorithmOneOutput { radial: r, polyhedron, high_degree: high, edits })
}

/// Indices `i` of the labels `v_i` that the schedule of `t` grows, starting
/// from the cube seed, computed without building any map.
pub fn high_degree_indices(t: &DegreeTuple) -> Vec<usize> {
    let (mut b, mut c, mut n) = (4usize, 3usize, 4usize);
    let mut out = Vec::with_capacity(t.k());
    for (i, &ti) in t.entries().iter().enumerate() {
        out.push(c);
        for j in 0..ti - 3 {
            n += 1;
            if j + 4 < ti {
                b = n;
            } else if i + 1 < t.k() {
                c = b;
                b = n;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar_map::{every_four_cycle_bounds_face, is_polyhedral_map};
    use crate::verify::{is_self_dual, isomorphic};
    use crate::AbstractGraph;

    fn wheel(spokes: usize) -> AbstractGraph {
        let mut g = AbstractGraph::cycle(spokes);
        let hub = g.add_vertex();
        for v in 0..spokes {
            g.add_edge(v, hub);
        }
        g
    }

    #[test]
    fn seed_is_labelled_cube() {
        let s = seed_cube();
        assert_eq!((s.map().num_vertices(), s.map().num_edges(), s.map().num_faces()), (8, 12, 6));
        let v1 = s.vertex(Side::Primal, 1).unwrap();
        let mut fs: Vec<usize> = s.map().neighbors(v1).iter().map(|&x| s.index(x)).collect();
        fs.sort_unstable();
        assert_eq!(fs, vec![1, 2, 3]);
        let k = s.cursor().unwrap();
        let lab = |x| s.label(x);
        assert_eq!(
            [lab(k.a), lab(k.fa), lab(k.b), lab(k.fb), lab(k.c), lab(k.fc)],
            ["v2", "f2", "v4", "f4", "v3", "f3"].map(String::from)
        );
        let p = s.extract(Side::Primal).unwrap();
        assert!(isomorphic(&p.underlying(), &AbstractGraph::complete(4)).is_some());
    }

    #[test]
    fn one_step_gives_square_pyramid() {
        let r = z_transform(&seed_cube()).unwrap();
        assert_eq!((r.map().num_vertices(), r.map().num_edges()), (10, 16));
        r.check_quadrangulation().unwrap();
        let p = r.extract(Side::Primal).unwrap();
        assert!(isomorphic(&p.underlying(), &wheel(4)).is_some());
    }

    #[test]
    fn step_changes_only_c_and_cc_degrees() {
        let s = seed_cube();
        let k = s.cursor().unwrap();
        let r = z_transform(&s).unwrap();
        for v in 0..s.map().num_vertices() {
            let grow = usize::from(v == k.c || v == k.fc);
            assert_eq!(r.map().degree(v), s.map().degree(v) + grow, "vertex {v}");
        }
        assert_eq!(r.map().degree(8), 3);
        assert_eq!(r.map().degree(9), 3);
    }

    #[test]
    fn relabel_modes() {
        let s = seed_cube();
        let k = s.cursor().unwrap();
        let r = z_transform(&s).unwrap();
        let before = r.map().rotation_system();
        let cont = relabel_after_z(&r, RelabelMode::Continue).unwrap();
        let kc = cont.cursor().unwrap();
        assert_eq!((kc.c, kc.fc), (k.c, k.fc));
        assert_eq!(cont.map().rotation_system(), before);
        let adv = relabel_after_z(&r, RelabelMode::Advance).unwrap();
        let ka = adv.cursor().unwrap();
        assert_eq!((ka.a, ka.fa), (k.c, k.fc));
        assert_eq!(adv.map().rotation_system(), before);
        assert!(relabel_after_z(&cont, RelabelMode::Continue).is_err());
        assert!(z_transform(&r).is_err());
    }

    #[test]
    fn invariants_hold_after_every_step() {
        let mut r = seed_cube();
        for (j, mode) in [RelabelMode::Continue, RelabelMode::Continue, RelabelMode::Advance]
            .into_iter()
            .cycle()
            .take(12)
            .enumerate()
        {
            r = z_transform(&r).unwrap();
            r.check_quadrangulation().unwrap();
            assert!(every_four_cycle_bounds_face(&r), "step {j}");
            r = relabel_after_z(&r, mode).unwrap();
        }
    }

    #[test]
    fn three_continued_steps_reach_degree_six() {
        let mut r = seed_cube();
        for _ in 0..3 {
            r = relabel_after_z(&z_transform(&r).unwrap(), RelabelMode::Continue).unwrap();
        }
        let p = r.extract(Side::Primal).unwrap();
        assert_eq!(p.degree_sequence().entries()[0], 6);
    }

    #[test]
    fn empty_tuple_is_tetrahedron() {
        let out = algorithm_one(&DegreeTuple::new(vec![]).unwrap()).unwrap();
        assert_eq!(out.polyhedron.degree_sequence().to_string(), "3^4");
        assert!(out.high_degree.is_empty());
    }

    #[test]
    fn single_entry_gives_pyramids() {
        for x in 4..=8 {
            let out = algorithm_one(&DegreeTuple::new(vec![x]).unwrap()).unwrap();
            assert!(isomorphic(&out.polyhedron.underlying(), &wheel(x)).is_some(), "x = {x}");
        }
    }

    #[test]
    fn six_six() {
        let t: DegreeTuple = "6,6".parse().unwrap();
        let out = algorithm_one(&t).unwrap();
        assert_eq!(out.polyhedron.degree_sequence().to_string(), "6,6,3^8");
        assert!(is_polyhedral_map(&out.polyhedron));
        assert!(is_self_dual(&out.polyhedron).unwrap());
        assert_eq!(out.radial.map().num_vertices(), 20);
        let labels: Vec<usize> = out.high_degree.iter().map(|&v| v + 1).collect();
        assert_eq!(labels, vec![3, 6]);
    }

    #[test]
    fn simulated_indices_match_construction() {
        for t in ["4,4,4,4", "6,5,6", "5,4,4,6", "9,4,5,7,4"] {
            let t: DegreeTuple = t.parse().unwrap();
            let out = algorithm_one(&t).unwrap();
            let sim: Vec<usize> = high_degree_indices(&t).iter().map(|i| i - 1).collect();
            assert_eq!(sim, out.high_degree, "{t}");
            for (&u, &ti) in out.high_degree.iter().zip(t.entries()) {
                assert_eq!(out.polyhedron.degree(u), ti);
            }
        }
        let labels = high_degree_indices(&"4,4,4,4".parse().unwrap());
        assert_eq!(labels, vec![3, 4, 5, 6]);
    }

    #[test]
    fn edits_are_constant_per_step() {
        let a = algorithm_one(&DegreeTuple::constant(5, 10).unwrap()).unwrap();
        let b = algorithm_one(&DegreeTuple::constant(5, 20).unwrap()).unwrap();
        assert_eq!(b.edits, 2 * a.edits);
    }
}
