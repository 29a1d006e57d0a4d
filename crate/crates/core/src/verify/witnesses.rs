//! Two non-isomorphic self-dual realisations of `t_1, ..., t_k, 3^m` for
//! `k >= 3`.

use super::{component_fingerprint, component_fingerprint_colored, isomorphic, Fingerprint};
use crate::constructions::{algorithm_one, construct_G, construct_P_prime, DegreeTuple};
use crate::error::{Error, Result};
use crate::planar_map::{induced_by_degree, radial, DegreeMode, PlanarMap};

/// Which argument produced a [`WitnessPair`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessBranch {
    /// Entries not all equal: `P(first)` and `P(second)`, where `second`
    /// swaps the first two entries of `first`.
    Swap { first: DegreeTuple, second: DegreeTuple },
    /// Entries not all equal with `4` appearing `k - 1` times:
    /// `P(4, t, 4, ..., 4)` and `P(t, 4, 4, ..., 4)`.
    LoneEntry { first: DegreeTuple, second: DegreeTuple },
    /// No ordering separated by the above; any two permutations that give
    /// non-isomorphic outputs.
    Search { first: DegreeTuple, second: DegreeTuple },
    /// Constant tuple `n^k` with `n >= 5`: `P(n^k)` and `P'(n; k)`.
    PPrime { n: usize, k: usize },
    /// Constant tuple `4^k`: `P(4^k)` and `G_{k+4}`.
    GFamily { p: usize },
}

#[derive(Clone, Debug)]
pub struct WitnessPair {
    pub branch: WitnessBranch,
    pub first: PlanarMap,
    pub second: PlanarMap,
}

impl WitnessPair {
    /// The invariant the branch's argument uses to tell the two apart, for
    /// each witness: H₊ coloured by degree in the polyhedron (tuple
    /// branches), H₊ of the radial (`PPrime`), or H₃ (`GFamily`).
    pub fn distinguishing_fingerprints(&self) -> (Fingerprint, Fingerprint) {
        let f: fn(&PlanarMap) -> Fingerprint = match self.branch {
            WitnessBranch::PPrime { .. } => |m| {
                let r = radial(m).expect("polyhedra are 2-connected");
                component_fingerprint(
                    &induced_by_degree(&r.map().underlying(), DegreeMode::AtLeastFour).graph,
                )
            },
            WitnessBranch::GFamily { .. } => |m| {
                component_fingerprint(&induced_by_degree(&m.underlying(), DegreeMode::Three).graph)
            },
            _ => |m| {
                let g = m.underlying();
                let h = induced_by_degree(&g, DegreeMode::AtLeastFour);
                let colors: Vec<u64> = h.parent.iter().map(|&v| g.degree(v) as u64).collect();
                component_fingerprint_colored(&h.graph, &colors)
            },
        };
        (f(&self.first), f(&self.second))
    }
}

/// Two non-isomorphic self-dual polyhedra with the degree sequence of `t`.
pub fn two_witnesses(t: &DegreeTuple) -> Result<WitnessPair> {
    let k = t.k();
    if k < 3 {
        return Err(Error::InvalidTuple(format!("need at least three entries, got {k}")));
    }
    if let Some(n) = t.constant_value() {
        let first = algorithm_one(t)?.polyhedron;
        let (branch, second) = if n >= 5 {
            (WitnessBranch::PPrime { n, k }, construct_P_prime(n, k)?)
        } else {
            (WitnessBranch::GFamily { p: k + 4 }, construct_G(k + 4)?)
        };
        return Ok(WitnessPair { branch, first, second });
    }
    let fours = t.entries().iter().filter(|&&x| x == 4).count();
    if k >= 4 && fours == k - 1 {
        let lone = *t.entries().iter().find(|&&x| x != 4).expect("not constant");
        let mut a = vec![4; k];
        a[1] = lone;
        let mut b = vec![4; k];
        b[0] = lone;
        let (a, b) = (DegreeTuple::new(a)?, DegreeTuple::new(b)?);
        if let Some(pair) = pair_if_distinct(&a, &b)? {
            return Ok(WitnessPair {
                branch: WitnessBranch::LoneEntry { first: a, second: b },
                first: pair.0,
                second: pair.1,
            });
        }
    } else if let Some(first) = ordering_for_swap(t) {
        let mut second = first.clone();
        second.swap(0, 1);
        let (a, b) = (DegreeTuple::new(first)?, DegreeTuple::new(second)?);
        if let Some(pair) = pair_if_distinct(&a, &b)? {
            return Ok(WitnessPair {
                branch: WitnessBranch::Swap { first: a, second: b },
                first: pair.0,
                second: pair.1,
            });
        }
    }
    // exhaustive fallback over distinct permutations
    let perms = distinct_permutations(t.entries());
    let base = DegreeTuple::new(perms[0].clone())?;
    let p0 = algorithm_one(&base)?.polyhedron;
    for p in &perms[1..] {
        let other = DegreeTuple::new(p.clone())?;
        let q = algorithm_one(&other)?.polyhedron;
        if isomorphic(&p0.underlying(), &q.underlying()).is_none() {
            return Ok(WitnessPair {
                branch: WitnessBranch::Search { first: base, second: other },
                first: p0,
                second: q,
            });
        }
    }
    Err(Error::InvalidTuple(format!("no two permutations of {t} give distinct outputs")))
}

fn pair_if_distinct(a: &DegreeTuple, b: &DegreeTuple) -> Result<Option<(PlanarMap, PlanarMap)>> {
    let p = algorithm_one(a)?.polyhedron;
    let q = algorithm_one(b)?.polyhedron;
    Ok(isomorphic(&p.underlying(), &q.underlying()).is_none().then_some((p, q)))
}

/// An ordering of `t` with `t1 != t2`, `t1 != 5`, and `t3 != 4` when `k >= 4`;
/// among those, the lexicographically smallest.
fn ordering_for_swap(t: &DegreeTuple) -> Option<Vec<usize>> {
    let k = t.k();
    distinct_permutations(t.entries())
        .into_iter()
        .find(|p| p[0] != p[1] && p[0] != 5 && (k < 4 || p[2] != 4))
}

/// All distinct orderings of `xs`, in lexicographic order.
fn distinct_permutations(xs: &[usize]) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = xs.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    // next lexicographic permutation
    loop {
        let Some(i) = (0..cur.len().saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..cur.len()).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::is_self_dual;

    #[test]
    fn permutations_are_distinct_and_complete() {
        let p = distinct_permutations(&[4, 5, 4]);
        assert_eq!(p, vec![vec![4, 4, 5], vec![4, 5, 4], vec![5, 4, 4]]);
        assert_eq!(distinct_permutations(&[1, 2, 3, 4]).len(), 24);
    }

    #[test]
    fn branches() {
        let cases = [
            ("5,4,4", "swap"),
            ("5,5,5", "pprime"),
            ("4,4,4", "g"),
            ("6,4,4,4", "lone"),
            ("5,5,6,4", "swap"),
        ];
        for (t, want) in cases {
            let t: DegreeTuple = t.parse().unwrap();
            let w = two_witnesses(&t).unwrap();
            let got = match w.branch {
                WitnessBranch::Swap { .. } => "swap",
                WitnessBranch::LoneEntry { .. } => "lone",
                WitnessBranch::Search { .. } => "search",
                WitnessBranch::PPrime { .. } => "pprime",
                WitnessBranch::GFamily { .. } => "g",
            };
            assert_eq!(got, want, "{t}");
            assert!(is_self_dual(&w.first).unwrap() && is_self_dual(&w.second).unwrap());
            assert_eq!(w.first.degree_sequence(), t.target_sequence());
            assert_eq!(w.second.degree_sequence(), t.target_sequence());
            assert!(isomorphic(&w.first.underlying(), &w.second.underlying()).is_none());
            let (a, b) = w.distinguishing_fingerprints();
            assert_ne!(a, b, "{t}");
        }
    }

    #[test]
    fn swap_for_545() {
        let w = two_witnesses(&"5,4,4".parse().unwrap()).unwrap();
        let WitnessBranch::Swap { first, second } = w.branch else { panic!() };
        assert_eq!(first.entries(), &[4, 5, 4]);
        assert_eq!(second.entries(), &[5, 4, 4]);
    }

    #[test]
    fn rejects_short_tuples() {
        assert!(matches!(two_witnesses(&"5,4".parse().unwrap()), Err(Error::InvalidTuple(_))));
    }
}
