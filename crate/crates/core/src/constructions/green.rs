//! The alternative seed: the radial of `S(n, n)` with a relabelling that
//! keeps `v_i -> f_i` an isomorphism.

use super::{algorithm_one_from, DegreeTuple};
use crate::error::{Error, Result};
use crate::planar_map::{build_map, LabeledRadial, PlanarMap, Side};

/// Position of a labelled radial vertex on the Hamiltonian cycle
/// `v1, f2, v3, ..., v_{N-1}, f_N, v_N, f_{N-1}, ..., v2, f1` with `N = 2n - 2`.
fn position(side: Side, i: usize, big_n: usize) -> usize {
    let odd = i % 2 == 1;
    match (side, odd) {
        (Side::Primal, true) | (Side::Dual, false) => i - 1,
        (Side::Primal, false) | (Side::Dual, true) => 2 * big_n - i,
    }
}

/// The relabelled radial of `S(n, n)`: the cycle above plus the fans
/// `v1 f_i`, `f1 v_i` (odd `i` in `3..=N-1`) and `v_N f_i`, `f_N v_i` (even
/// `i` in `2..=N-2`). Cursor: `a = v2, b = v1, c = v3`.
pub fn seed_green(n: usize) -> Result<LabeledRadial> {
    if n < 5 {
        return Err(Error::InvalidParameter(format!("seed needs n >= 5, got {n}")));
    }
    let big_n = 2 * n - 2;
    let len = 2 * big_n;
    let mut side = vec![Side::Primal; len];
    let mut index = vec![0; len];
    for i in 1..=big_n {
        for s in [Side::Primal, Side::Dual] {
            let p = position(s, i, big_n);
            side[p] = s;
            index[p] = i;
        }
    }
    // chords drawn inside the cycle come from v1 and v_N, outside from f1 and f_N
    let mut inner: Vec<Vec<usize>> = vec![Vec::new(); len];
    let mut outer: Vec<Vec<usize>> = vec![Vec::new(); len];
    let chord = |lists: &mut Vec<Vec<usize>>, p: usize, q: usize| {
        lists[p].push(q);
        lists[q].push(p);
    };
    for i in (3..big_n).step_by(2) {
        let (v1, f1) = (position(Side::Primal, 1, big_n), position(Side::Dual, 1, big_n));
        chord(&mut inner, v1, position(Side::Dual, i, big_n));
        chord(&mut outer, f1, position(Side::Primal, i, big_n));
    }
    for i in (2..big_n - 1).step_by(2) {
        let (vn, fnn) = (position(Side::Primal, big_n, big_n), position(Side::Dual, big_n, big_n));
        chord(&mut inner, vn, position(Side::Dual, i, big_n));
        chord(&mut outer, fnn, position(Side::Primal, i, big_n));
    }
    let offset = |p: usize, q: usize| (q + len - p) % len;
    let rotations: Vec<Vec<usize>> = (0..len)
        .map(|p| {
            let mut rot = vec![(p + 1) % len];
            let mut ins = inner[p].clone();
            ins.sort_by_key(|&q| offset(p, q));
            rot.extend(ins);
            rot.push((p + len - 1) % len);
            let mut outs = outer[p].clone();
            outs.sort_by_key(|&q| std::cmp::Reverse(offset(p, q)));
            rot.extend(outs);
            rot
        })
        .collect();
    let r = LabeledRadial::new(build_map(&rotations)?, side, index)?;
    r.check_quadrangulation()?;
    let cursor = r.cursor_from_labels(2, 1, 3)?;
    r.with_cursor(cursor)
}

/// `P'(n; k)`: the cube-free variant of the construction for the constant
/// tuple `n^k`, grown from [`seed_green`] with the `(k - 2)`-tuple `(n, ..., n)`.
#[allow(non_snake_case)]
pub fn construct_P_prime(n: usize, k: usize) -> Result<PlanarMap> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("k must be at least 3, got {k}")));
    }
    let seed = seed_green(n)?;
    let t = DegreeTuple::constant(n, k - 2)?;
    Ok(algorithm_one_from(&t, seed)?.polyhedron)
}
