//! Acceptance criteria, shared by the `acceptance` test target and the
//! `suite` subcommand.

use std::collections::BTreeSet;
use std::fmt;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::constructions::{algorithm_one, construct_G, construct_Q, construct_S, DegreeTuple};
use crate::error::{Error, Result};
use crate::graph::{AbstractGraph, DegreeSequence};
use crate::planar_map::{
    build_map, every_four_cycle_bounds_face, induced_by_degree, is_polyhedral_map,
    primal_from_radial, radial, DegreeMode, PlanarMap, Side,
};
use crate::verify::{
    canonical_form, check_lemma_leaf, check_phi, component_fingerprint, enumerate_realizations,
    is_self_dual, isomorphic, isomorphic_colored, two_witnesses, EnumerationQuery, Filters,
    WitnessBranch,
};

pub const TITLES: [&str; 9] = [
    "construction soundness",
    "uniqueness by exhaustive oracle",
    "multiplicity by exhaustive oracle",
    "witness pairs",
    "adjacency of high-degree vertices",
    "cross-construction identities",
    "radial machinery",
    "linear-time construction",
    "small fixtures",
];

/// Self-dual class counts found by the oracle for `4^3,3^4` and `5,4,4,3^5`.
pub const MULTIPLICITY_COUNTS: [(&str, usize); 2] = [("4^3,3^4", 4), ("5,4,4,3^5", 8)];

const RADIAL_66: &str = include_str!("../tests/fixtures/radial_66.txt");
const G_FIXTURES: [(usize, &str); 3] = [
    (7, include_str!("../tests/fixtures/g7.txt")),
    (8, include_str!("../tests/fixtures/g8.txt")),
    (9, include_str!("../tests/fixtures/g9.txt")),
];

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict} [{}] {}: {} ({:.2}s)", self.id, self.title, self.detail, self.seconds)
    }
}

/// Runs criterion `id` (1-based). `seed` drives the randomised criteria.
pub fn run_criterion(id: usize, seed: u64) -> Result<CriterionReport> {
    let title = *TITLES
        .get(id.wrapping_sub(1))
        .ok_or_else(|| Error::InvalidParameter(format!("no criterion {id}")))?;
    let start = Instant::now();
    let mut c = Check::default();
    match id {
        1 => construction_soundness(&mut c),
        2 => uniqueness(&mut c),
        3 => multiplicity(&mut c),
        4 => witness_pairs(&mut c),
        5 => lemma_leaf(&mut c, seed),
        6 => identities(&mut c),
        7 => radial_machinery(&mut c, seed),
        8 => linear_time(&mut c),
        _ => small_fixtures(&mut c),
    }
    let (passed, detail) = c.finish();
    Ok(CriterionReport { id, title, passed, detail, seconds: start.elapsed().as_secs_f64() })
}

pub fn run_all(seed: u64) -> Vec<CriterionReport> {
    (1..=TITLES.len()).map(|id| run_criterion(id, seed).expect("id in range")).collect()
}

#[derive(Default)]
struct Check {
    checked: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Check {
    fn ensure(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn ok<T>(&mut self, r: Result<T>, what: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(x) => Some(x),
            Err(e) => {
                self.checked += 1;
                self.failures.push(format!("{}: {e}", what()));
                None
            }
        }
    }

    fn note(&mut self, s: String) {
        self.notes.push(s);
    }

    fn finish(self) -> (bool, String) {
        let passed = self.failures.is_empty() && self.checked > 0;
        let mut parts = vec![format!("{} checks", self.checked)];
        parts.extend(self.notes);
        if !self.failures.is_empty() {
            parts.push(format!("{} failed", self.failures.len()));
            parts.extend(self.failures.into_iter().take(5));
        }
        (passed, parts.join("; "))
    }
}

/// Every tuple with `k` entries drawn from `lo..=hi`, in lexicographic order.
fn all_tuples(k: usize, lo: usize, hi: usize) -> Vec<DegreeTuple> {
    let mut out = Vec::new();
    let mut cur = vec![lo; k];
    loop {
        out.push(DegreeTuple::new(cur.clone()).expect("entries >= 4"));
        let Some(i) = (0..k).rev().find(|&i| cur[i] < hi) else {
            return out;
        };
        cur[i] += 1;
        for x in &mut cur[i + 1..] {
            *x = lo;
        }
    }
}

fn random_tuple(rng: &mut ChaCha8Rng, max_k: usize, lo: usize, hi: usize) -> DegreeTuple {
    let k = rng.gen_range(1..=max_k);
    DegreeTuple::new((0..k).map(|_| rng.gen_range(lo..=hi)).collect()).expect("entries >= 4")
}

fn construction_soundness(c: &mut Check) {
    let mut tuples = 0;
    for k in 1..=5 {
        for t in all_tuples(k, 4, 8) {
            tuples += 1;
            let Some(out) = c.ok(algorithm_one(&t), || format!("{t}")) else { continue };
            c.ensure(is_polyhedral_map(&out.polyhedron), || format!("{t}: not polyhedral"));
            let phi = check_phi(&out.radial).unwrap_or(false);
            c.ensure(phi, || format!("{t}: phi is not an isomorphism"));
            c.ensure(out.polyhedron.degree_sequence() == t.target_sequence(), || {
                format!("{t}: sequence {}", out.polyhedron.degree_sequence())
            });
        }
    }
    c.note(format!("{tuples} tuples"));
}

fn self_dual_classes(seq: &DegreeSequence) -> Result<Vec<Vec<u8>>> {
    let q = EnumerationQuery::new(seq.clone()).with_filters(Filters::self_dual());
    Ok(enumerate_realizations(&q)?.into_iter().map(|r| r.form).collect())
}

fn uniqueness(c: &mut Check) {
    for (x, y) in [(3, 3), (4, 3), (4, 4), (5, 3), (5, 4), (5, 5), (6, 4)] {
        let mut degrees = vec![x, y];
        degrees.extend(std::iter::repeat_n(3, x + y - 4));
        let seq = DegreeSequence::new(degrees);
        let Some(forms) = c.ok(self_dual_classes(&seq), || format!("{seq}")) else { continue };
        c.ensure(forms.len() == 1, || format!("{seq}: {} classes", forms.len()));
        let Some(s) = c.ok(construct_S(x, y), || format!("S({x},{y})")) else { continue };
        let want = canonical_form(&s.underlying());
        c.ensure(forms.first() == Some(&want), || format!("{seq}: class is not S({x},{y})"));
    }
}

fn multiplicity(c: &mut Check) {
    for (seq, expected) in MULTIPLICITY_COUNTS {
        let parsed: DegreeSequence = seq.parse().expect("well-formed");
        let Some(forms) = c.ok(self_dual_classes(&parsed), || seq.to_string()) else { continue };
        c.ensure(forms.len() >= 2, || format!("{seq}: only {} classes", forms.len()));
        c.ensure(forms.len() == expected, || {
            format!("{seq}: {} classes, regression value {expected}", forms.len())
        });
        c.note(format!("{seq}: {} classes", forms.len()));
    }
}

/// Degrees in `g` of the end-vertices of `H_+(g)`, sorted.
fn hplus_end_degrees(g: &AbstractGraph) -> Vec<usize> {
    let h = induced_by_degree(g, DegreeMode::AtLeastFour);
    let mut out: Vec<usize> = (0..h.graph.order())
        .filter(|&v| h.graph.degree(v) == 1)
        .map(|v| g.degree(h.parent[v]))
        .collect();
    out.sort_unstable();
    out
}

fn witness_pairs(c: &mut Check) {
    let mut seen = BTreeSet::new();
    for k in 3..=4 {
        for t in all_tuples(k, 4, 6) {
            let Some(w) = c.ok(two_witnesses(&t), || format!("{t}")) else { continue };
            let sd =
                is_self_dual(&w.first).unwrap_or(false) && is_self_dual(&w.second).unwrap_or(false);
            c.ensure(sd, || format!("{t}: a witness is not self-dual"));
            let seq = t.target_sequence();
            c.ensure(w.first.degree_sequence() == seq && w.second.degree_sequence() == seq, || {
                format!("{t}: wrong sequence")
            });
            let (g1, g2) = (w.first.underlying(), w.second.underlying());
            c.ensure(isomorphic(&g1, &g2).is_none(), || format!("{t}: witnesses are isomorphic"));
            let (f1, f2) = w.distinguishing_fingerprints();
            c.ensure(f1 != f2, || format!("{t}: distinguishing fingerprints agree"));
            match &w.branch {
                WitnessBranch::Swap { first, .. } if k == 3 => {
                    seen.insert("swap");
                    let e = first.entries();
                    let (ends1, ends2) = (hplus_end_degrees(&g1), hplus_end_degrees(&g2));
                    if e[1] == 5 {
                        c.ensure(ends1.is_empty() && ends2.len() == 2, || {
                            format!("{t}: end-vertices {ends1:?} vs {ends2:?}")
                        });
                    } else {
                        let mut want1 = vec![e[0], e[2]];
                        let mut want2 = vec![e[1], e[2]];
                        want1.sort_unstable();
                        want2.sort_unstable();
                        c.ensure(ends1 == want1 && ends2 == want2, || {
                            format!("{t}: end-vertex degrees {ends1:?} vs {ends2:?}")
                        });
                    }
                }
                WitnessBranch::Swap { .. } => {
                    seen.insert("swap");
                }
                WitnessBranch::LoneEntry { .. } => {
                    seen.insert("lone");
                    let (ends1, ends2) = (hplus_end_degrees(&g1), hplus_end_degrees(&g2));
                    c.ensure(!ends1.is_empty() && ends2.is_empty(), || {
                        format!("{t}: end-vertices {ends1:?} vs {ends2:?}")
                    });
                }
                WitnessBranch::Search { .. } => {
                    seen.insert("search");
                }
                WitnessBranch::PPrime { .. } => {
                    seen.insert("pprime");
                    c.ensure(f1.k2_components() == 0 && f2.k2_components() >= 1, || {
                        format!(
                            "{t}: K2 components {} vs {}",
                            f1.k2_components(),
                            f2.k2_components()
                        )
                    });
                }
                WitnessBranch::GFamily { .. } => {
                    seen.insert("g");
                    let p3k1 = AbstractGraph::path(3).disjoint_union(&AbstractGraph::new(1));
                    let k2k2 =
                        AbstractGraph::complete(2).disjoint_union(&AbstractGraph::complete(2));
                    let h3 = |g: &AbstractGraph| induced_by_degree(g, DegreeMode::Three).graph;
                    c.ensure(
                        component_fingerprint(&h3(&g1)) == component_fingerprint(&k2k2)
                            && component_fingerprint(&h3(&g2)) == component_fingerprint(&p3k1),
                        || format!("{t}: H3 shapes {f1} vs {f2}"),
                    );
                }
            }
        }
    }
    let tuple_branch = seen.contains("swap") || seen.contains("lone");
    c.ensure(tuple_branch && seen.contains("pprime") && seen.contains("g"), || {
        format!("branches covered: {seen:?}")
    });
    c.note(format!("branches {:?}", seen));
}

fn lemma_leaf(c: &mut Check, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..200 {
        let t = random_tuple(&mut rng, 6, 4, 9);
        let Some(out) = c.ok(algorithm_one(&t), || format!("{t}")) else { continue };
        let ok = check_lemma_leaf(&t, &out.polyhedron);
        c.ensure(ok == Ok(true), || format!("{t}: {ok:?}"));
    }
    c.note(format!("seed {seed}"));
}

fn identities(c: &mut Check) {
    for x in 4..=7 {
        for y in 4..=x {
            let s = construct_S(x, y).map(|m| m.underlying());
            let p = algorithm_one(&DegreeTuple::new(vec![x, y]).expect("valid"));
            let q = algorithm_one(&DegreeTuple::new(vec![y, x]).expect("valid"));
            let Some(s) = c.ok(s, || format!("S({x},{y})")) else { continue };
            let Some(p) = c.ok(p, || format!("P(({x},{y}))")) else { continue };
            let Some(q) = c.ok(q, || format!("P(({y},{x}))")) else { continue };
            c.ensure(isomorphic(&s, &p.polyhedron.underlying()).is_some(), || {
                format!("S({x},{y}) vs P(({x},{y}))")
            });
            c.ensure(isomorphic(&s, &q.polyhedron.underlying()).is_some(), || {
                format!("S({x},{y}) vs P(({y},{x}))")
            });
        }
    }
    if let (Ok(q), Ok(s)) = (construct_Q(4, 4), construct_S(4, 4)) {
        c.ensure(isomorphic(&q.underlying(), &s.underlying()).is_some(), || {
            "Q(4,4) vs S(4,4)".into()
        });
    } else {
        c.ensure(false, || "Q(4,4) or S(4,4) failed to build".into());
    }
    for x in 5..=7 {
        for y in 4..=x {
            let Some(q) = c.ok(construct_Q(x, y), || format!("Q({x},{y})")) else { continue };
            let sd = is_self_dual(&q);
            c.ensure(sd == Ok(false), || format!("Q({x},{y}): self-dual check gave {sd:?}"));
        }
    }
}

/// 2-connected maps that are not polyhedral.
fn non_polyhedral_controls() -> Vec<(&'static str, PlanarMap)> {
    let cycle = |n: usize| -> Vec<Vec<usize>> {
        (0..n).map(|v| vec![(v + 1) % n, (v + n - 1) % n]).collect()
    };
    // K_{2,3} and a square with one diagonal
    let k23 = vec![vec![2, 3, 4], vec![4, 3, 2], vec![0, 1], vec![0, 1], vec![0, 1]];
    let diag = vec![vec![1, 2, 3], vec![2, 0], vec![3, 0, 1], vec![0, 2]];
    vec![
        ("C5", build_map(&cycle(5)).expect("cycle")),
        ("K23", build_map(&k23).expect("theta")),
        ("square+diagonal", build_map(&diag).expect("square")),
    ]
}

fn radial_machinery(c: &mut Check, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..50 {
        let t = random_tuple(&mut rng, 5, 4, 8);
        let Some(out) = c.ok(algorithm_one(&t), || format!("{t}")) else { continue };
        let p = &out.polyhedron;
        let Some(r) = c.ok(radial(p), || format!("{t}: radial")) else { continue };
        let back = primal_from_radial(&r).map(|m| m.underlying());
        c.ensure(back.is_ok_and(|b| b.edges().eq(p.underlying().edges())), || {
            format!("{t}: radial/primal round trip")
        });
        let colors = |side: &dyn Fn(usize) -> Side, n: usize| -> Vec<u64> {
            (0..n).map(|v| u64::from(side(v) == Side::Dual)).collect()
        };
        let n = r.map().num_vertices();
        let ca = colors(&|v| r.side(v), n);
        let cb = colors(&|v| out.radial.side(v), out.radial.map().num_vertices());
        c.ensure(
            isomorphic_colored(
                &r.map().underlying(),
                Some(&ca),
                &out.radial.map().underlying(),
                Some(&cb),
            )
            .is_some(),
            || format!("{t}: surgery radial differs from the radial of the output"),
        );
        let four = every_four_cycle_bounds_face(&r);
        c.ensure(four, || format!("{t}: separating 4-cycle in the radial"));
        c.ensure(four == is_polyhedral_map(p), || format!("{t}: criteria disagree"));
    }
    for (name, m) in non_polyhedral_controls() {
        let Some(r) = c.ok(radial(&m), || name.to_string()) else { continue };
        let four = every_four_cycle_bounds_face(&r);
        c.ensure(!four && !is_polyhedral_map(&m), || format!("{name}: control accepted"));
    }
    c.note(format!("seed {seed}"));
}

fn linear_time(c: &mut Check) {
    // n = 5 gives order 4 + 2k
    let mut rows = Vec::new();
    for order in [1_000usize, 10_000, 100_000] {
        let t = DegreeTuple::constant(5, (order - 4) / 2).expect("valid");
        let start = Instant::now();
        let Some(out) = c.ok(algorithm_one(&t), || format!("order {order}")) else { return };
        let secs = start.elapsed().as_secs_f64();
        c.ensure(out.polyhedron.num_vertices() == order, || format!("order {order}: wrong size"));
        rows.push((order, out.edits, secs));
    }
    for w in rows.windows(2) {
        let (n0, e0, _) = w[0];
        let (n1, e1, _) = w[1];
        let rel = (e1 as f64 / e0 as f64) / (n1 as f64 / n0 as f64);
        c.ensure((1.0 / 1.15..=1.15).contains(&rel), || {
            format!("orders {n0}->{n1}: edit ratio off by {rel:.3}")
        });
    }
    let (_, _, secs) = rows[rows.len() - 1];
    c.ensure(secs < 1.0, || format!("order 100000 took {secs:.2}s"));
    for (n, e, s) in rows {
        c.note(format!("n={n} edits={e} {:.3}s", s));
    }
}

fn small_fixtures(c: &mut Check) {
    let fixture = PlanarMap::from_text(RADIAL_66);
    let out = algorithm_one(&"6,6".parse().expect("valid"));
    if let (Some(fixture), Some(out)) =
        (c.ok(fixture, || "radial fixture".into()), c.ok(out, || "P((6,6))".into()))
    {
        let fixture_colors: Vec<u64> = (0..fixture.num_vertices())
            .map(|v| u64::from(fixture.label(v).starts_with('f')))
            .collect();
        let r = &out.radial;
        let colors: Vec<u64> =
            (0..r.map().num_vertices()).map(|v| u64::from(r.side(v) == Side::Dual)).collect();
        let iso = isomorphic_colored(
            &fixture.underlying(),
            Some(&fixture_colors),
            &r.map().underlying(),
            Some(&colors),
        );
        c.ensure(iso.is_some(), || "radial of P((6,6)) differs from the fixture".into());
        c.ensure(r.map().num_vertices() == 20, || "radial of P((6,6)) has the wrong order".into());
        c.ensure(check_phi(r) == Ok(true), || "phi fails on P((6,6))".into());
    }
    for (p, text) in G_FIXTURES {
        let fixture = PlanarMap::from_text(text);
        let Some(fixture) = c.ok(fixture, || format!("G{p} fixture")) else { continue };
        let Some(g) = c.ok(construct_G(p), || format!("G{p}")) else { continue };
        c.ensure(canonical_form(&g.underlying()) == canonical_form(&fixture.underlying()), || {
            format!("G{p} differs from the fixture")
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuple_counts() {
        let n: usize = (1..=5).map(|k| all_tuples(k, 4, 8).len()).sum();
        assert_eq!(n, 3905);
        assert_eq!(all_tuples(2, 4, 5).len(), 4);
    }

    #[test]
    fn unknown_criterion() {
        assert!(run_criterion(0, 0).is_err());
        assert!(run_criterion(10, 0).is_err());
    }

    #[test]
    fn fixtures_parse() {
        assert_eq!(PlanarMap::from_text(RADIAL_66).unwrap().num_vertices(), 20);
        for (p, text) in G_FIXTURES {
            assert_eq!(PlanarMap::from_text(text).unwrap().num_vertices(), p);
        }
    }
}
